"""Tokenization and the readability-metric suite.

All metrics are computed from surface statistics only (sentences, words,
syllables, letters, familiar-word membership). The constants are the
standard published ones:

    FRE  = 206.835 - 1.015*(words/sentences) - 84.6*(syllables/words)
    FKGL = 0.39*(words/sentences) + 11.8*(syllables/words) - 15.59
    DCRS = 0.1579*(100*difficult/words) + 0.0496*(words/sentences)
           (+ 3.6365 iff difficult/words is strictly greater than 0.05)
    CLI  = 0.0588*L - 0.296*S - 15.8
           with L = letters per 100 words, S = sentences per 100 words

Everything here is a pure function over immutable inputs and is safe to
map over documents in parallel.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import EmptyText

WORD_RE = re.compile(r"[0-9A-Za-z']+")
_HAS_ALNUM_RE = re.compile(r"[0-9A-Za-z]")
_TERMINATOR_RE = re.compile(r"[.!?]+(?=\s|$)")

# Trailing-word abbreviations that suppress a sentence break at a period.
# Single-letter words (initials, enumerations like "A.") are always guarded.
# Versioned: changing this list changes sentence counts, so treat edits as
# a format bump.
ABBREVIATIONS = frozenset({"dr", "mr", "e.g", "i.e", "al", "et al", "fig", "eq"})

VOWELS = frozenset("aeiouy")


@dataclass(frozen=True)
class TextStats:
    """Surface counts feeding the readability formulas."""

    sentence_count: int
    word_count: int
    syllable_count: int
    letter_count: int
    difficult_word_count: int

    def __post_init__(self):
        if self.sentence_count < 1 or self.word_count < 1:
            raise EmptyText("stats require at least one sentence and one word")
        if self.word_count >= 1 and self.syllable_count < 1:
            raise EmptyText("syllable count must be >= 1 for nonempty text")
        if self.difficult_word_count > self.word_count:
            raise ValueError("difficult_word_count exceeds word_count")


@dataclass(frozen=True)
class ReadabilityReport:
    """All four readability scores for one text."""

    fre: float
    fkgl: float
    dcrs: float
    cli: float


def tokenize(text: str) -> list[str]:
    """Lowercased maximal alphanumeric+apostrophe runs.

    Runs made purely of apostrophes are dropped.
    """
    return [t.lower() for t in WORD_RE.findall(text) if _HAS_ALNUM_RE.search(t)]


def _is_guarded(prefix: str) -> bool:
    """True when a period at the end of `prefix` belongs to an abbreviation."""
    m = re.search(r"[0-9A-Za-z']+$", prefix)
    if m is None:
        return False
    word = m.group(0).lower()
    if len(word) == 1 and word.isalpha():
        return True
    if word in ABBREVIATIONS:
        return True
    # multi-token abbreviations ("et al.") and dotted ones ("e.g.")
    tail = prefix.lower()
    return any(tail.endswith(abbr) for abbr in ABBREVIATIONS if " " in abbr or "." in abbr)


def segment(text: str) -> tuple[list[str], list[str]]:
    """Split text into sentences and lowercased word tokens.

    Sentences end at `.`/`!`/`?` runs followed by whitespace or EOF, except
    when a period directly follows a guarded abbreviation or a single-letter
    word. The final sentence always closes at EOF.
    """
    if not text.strip():
        raise EmptyText("cannot segment empty text")
    sentences = []
    start = 0
    for m in _TERMINATOR_RE.finditer(text):
        punct = m.group(0)
        if punct.endswith(".") and "!" not in punct and "?" not in punct:
            if _is_guarded(text[: m.start()]):
                continue
        chunk = text[start : m.end()].strip()
        if chunk:
            sentences.append(chunk)
        start = m.end()
    trailing = text[start:].strip()
    if trailing:
        sentences.append(trailing)
    if not sentences:
        sentences = [text.strip()]
    return sentences, tokenize(text)


def count_syllables(word: str) -> int:
    """Vowel-group heuristic, never below 1.

    Counts contiguous runs of aeiouy, then subtracts one for a terminal
    silent "e" unless the word ends in consonant+"le".
    """
    groups = 0
    prev_vowel = False
    for ch in word:
        is_vowel = ch in VOWELS
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel
    if word.endswith("e"):
        keeps_e = len(word) >= 3 and word.endswith("le") and word[-3] not in VOWELS
        if not keeps_e:
            groups -= 1
    return max(1, groups)


def _familiar(word: str, familiar_words: frozenset[str] | set[str]) -> bool:
    # simple plural/ed/ing stripping; the stem must stay nonempty
    if word in familiar_words:
        return True
    for suffix in ("s", "es", "ed", "ing"):
        if word.endswith(suffix) and len(word) > len(suffix):
            if word[: -len(suffix)] in familiar_words:
                return True
    return False


def compute_stats(text: str, familiar_words: frozenset[str] | set[str]) -> TextStats:
    """Aggregate sentence/word/syllable/letter/difficult-word counts.

    A word is difficult iff its lowercase form, with simple plural/ed/ing
    stripping, is absent from `familiar_words`. Letters are the alphabetic
    characters inside word tokens.
    """
    sentences, words = segment(text)
    if not words:
        raise EmptyText("text contains no word tokens")
    syllables = sum(count_syllables(w) for w in words)
    letters = sum(1 for w in words for ch in w if ch.isalpha())
    difficult = sum(1 for w in words if not _familiar(w, familiar_words))
    return TextStats(
        sentence_count=len(sentences),
        word_count=len(words),
        syllable_count=syllables,
        letter_count=letters,
        difficult_word_count=difficult,
    )


def flesch_reading_ease(s: TextStats) -> float:
    return 206.835 - 1.015 * (s.word_count / s.sentence_count) - 84.6 * (
        s.syllable_count / s.word_count
    )


def fkgl(s: TextStats) -> float:
    return 0.39 * (s.word_count / s.sentence_count) + 11.8 * (
        s.syllable_count / s.word_count
    ) - 15.59


def dale_chall(s: TextStats) -> float:
    difficult_fraction = s.difficult_word_count / s.word_count
    score = 0.1579 * (100.0 * difficult_fraction) + 0.0496 * (
        s.word_count / s.sentence_count
    )
    if difficult_fraction > 0.05:
        score += 3.6365
    return score


def coleman_liau(s: TextStats) -> float:
    letters_per_100 = 100.0 * s.letter_count / s.word_count
    sentences_per_100 = 100.0 * s.sentence_count / s.word_count
    return 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.8


def readability_report(text: str, familiar_words: frozenset[str] | set[str]) -> ReadabilityReport:
    s = compute_stats(text, familiar_words)
    return ReadabilityReport(
        fre=flesch_reading_ease(s),
        fkgl=fkgl(s),
        dcrs=dale_chall(s),
        cli=coleman_liau(s),
    )


def load_familiar_words(path: str | Path) -> frozenset[str]:
    """Read a familiar-word list: UTF-8, one lowercase word per line,
    `#` comments and blank lines ignored."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            entry = line.split("#", 1)[0].strip().lower()
            if entry:
                words.add(entry)
    return frozenset(words)


def default_familiar_words() -> frozenset[str]:
    """The bundled common-word list (Dale-Chall style, ~3k entries)."""
    return load_familiar_words(Path(__file__).parent / "data" / "familiar_words.txt")
