"""Exception hierarchy shared by all laysum modules.

Everything raised on purpose derives from LaySumError so the CLI can map
any domain failure to exit code 2. Plain I/O failures propagate as OSError.
"""


class LaySumError(Exception):
    """Base class for all laysum domain errors."""


# corpus ---------------------------------------------------------------

class MalformedJson(LaySumError):
    pass


class MissingField(LaySumError):
    def __init__(self, name: str, context: str = ""):
        self.name = name
        suffix = f" ({context})" if context else ""
        super().__init__(f"missing required field '{name}'{suffix}")


class EmptyArticle(LaySumError):
    pass


class EmptyText(LaySumError):
    pass


class DuplicateId(LaySumError):
    def __init__(self, record_id: str, context: str = ""):
        self.record_id = record_id
        suffix = f" ({context})" if context else ""
        super().__init__(f"duplicate id '{record_id}'{suffix}")


# rouge ----------------------------------------------------------------

class ZeroN(LaySumError):
    pass


class EmptyReference(LaySumError):
    pass


# retrieval ------------------------------------------------------------

class EmptyCollection(LaySumError):
    pass


class InvalidParam(LaySumError):
    pass


class EmptyQuery(LaySumError):
    pass


class ScorerFailure(LaySumError):
    def __init__(self, passage_id: str, cause: Exception):
        self.passage_id = passage_id
        self.cause = cause
        super().__init__(f"scorer failed on passage '{passage_id}': {cause}")


class UnknownGoldId(LaySumError):
    pass


class IndexFormatError(LaySumError):
    pass


# reward ---------------------------------------------------------------

class NonPositiveSigma(LaySumError):
    pass


class RelevanceOutOfRange(LaySumError):
    pass


class InvalidConfig(LaySumError):
    pass


# ppo ------------------------------------------------------------------

class DimMismatch(LaySumError):
    pass


class ZeroOldProb(LaySumError):
    pass


class LengthMismatch(LaySumError):
    pass


# pipeline -------------------------------------------------------------

class GeneratorUnavailable(LaySumError):
    pass


class EmptyInput(LaySumError):
    pass


class QuerySourceUnavailable(LaySumError):
    pass


class EmptyPairs(LaySumError):
    pass


class StageError(LaySumError):
    """Wraps a failure with the pipeline stage where it happened."""

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"[{stage}] {cause}")


# bridge client --------------------------------------------------------

class BridgeError(LaySumError):
    pass
