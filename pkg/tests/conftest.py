import json

import numpy as np
import pytest

from laysum.corpus import Document, Passage


@pytest.fixture
def tiny_familiar():
    return frozenset("the cat sat on mat a dog ran".split())


@pytest.fixture
def fixture_docs():
    """Five small documents exercising all splits and keyphrase shapes."""
    articles = [
        "Proinsulin is a protein made in the pancreas. It folds into insulin. "
        "Cells need insulin to take up sugar. Without it, sugar builds up in the blood. "
        "This causes diabetes. Scientists study how folding fails. They look at stress. "
        "New drugs may help folding. Mice were used. Results were promising.",
        "Neurons send signals through long fibers called axons. The signals are electrical. "
        "Chemical messengers cross the gaps between cells. Memory depends on these links. "
        "The team mapped circuits in the brain of a fly. The map shows many loops.",
        "Plants sense light with special proteins. Blue light makes seedlings bend. "
        "The bending helps leaves reach the sun. Growth hormones move to the shaded side. "
        "The study measured hormone levels across the stem.",
        "Bacteria can share genes through small rings of DNA. These rings carry resistance. "
        "Antibiotics then fail against the new strain. Hospitals track such outbreaks. "
        "The authors sequenced strains from three wards.",
        "The heart pumps blood through a branching network. Valves keep flow one way. "
        "A leaky valve lets blood slip backward. Surgeons can repair or replace valves. "
        "The trial followed patients for five years.",
    ]
    summaries = [
        "Scientists studied how insulin folding fails and causes diabetes.",
        "Researchers mapped brain circuits that support memory in flies.",
        "Plants bend toward blue light because hormones move to the shaded side.",
        "Bacteria share DNA rings that spread antibiotic resistance.",
        "Heart valve repair was tested in a five year trial.",
    ]
    keyphrases = [
        ("insulin", "pancreas"),
        ("neurons", "memory"),
        ("blue light",),
        (),
        ("heart", "valves"),
    ]
    return [
        Document(
            id=f"doc{i}",
            article=articles[i],
            summary=summaries[i],
            keyphrases=keyphrases[i],
            split="train",
        )
        for i in range(5)
    ]


@pytest.fixture
def fixture_passages():
    texts = [
        "Insulin is a hormone that regulates blood sugar in the body.",
        "The pancreas is an organ behind the stomach producing hormones.",
        "Diabetes is a disease in which blood sugar levels are too high.",
        "Protein folding is the process by which a protein obtains its shape.",
        "An axon is a long fiber that carries nerve impulses away from the cell.",
        "Memory is the ability to store and recall information in the brain.",
        "Phototropism is the growth of a plant toward a light source.",
        "A plasmid is a small circular DNA molecule found in bacteria.",
        "Antibiotic resistance is the ability of microbes to survive drugs.",
        "A heart valve keeps blood flowing in a single direction.",
    ]
    return [Passage(id=f"w{i}", text=t, source="fixture") for i, t in enumerate(texts)]


def write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    return path


@pytest.fixture
def docs_jsonl(tmp_path, fixture_docs):
    return write_jsonl(
        tmp_path / "docs.jsonl",
        [
            {
                "id": d.id,
                "article": d.article,
                "summary": d.summary,
                "keyphrases": list(d.keyphrases),
                "split": d.split,
            }
            for d in fixture_docs
        ],
    )


@pytest.fixture
def passages_jsonl(tmp_path, fixture_passages):
    return write_jsonl(
        tmp_path / "passages.jsonl",
        [{"id": p.id, "text": p.text, "source": p.source} for p in fixture_passages],
    )


def synthetic_passages(count: int, seed: int = 0, sentences_per_passage: int = 3):
    """Deterministic word-salad passages with distinctive vocabulary per passage."""
    rng = np.random.default_rng(seed)
    base = [
        "cell", "protein", "gene", "tissue", "enzyme", "receptor", "membrane",
        "signal", "pathway", "molecule", "neuron", "antibody", "virus", "bacteria",
        "hormone", "glucose", "lipid", "acid", "sequence", "genome", "mutation",
        "therapy", "clinical", "patient", "disease", "immune", "plasma", "vector",
        "kinase", "synapse", "cortex", "vessel", "marrow", "tumor", "dose",
    ]
    passages = []
    for i in range(count):
        words = []
        for _ in range(sentences_per_passage):
            length = int(rng.integers(6, 12))
            sentence = [str(base[int(rng.integers(len(base)))]) for _ in range(length)]
            # a passage-specific token makes held-out-sentence queries resolvable
            sentence[int(rng.integers(length))] = f"tag{i}"
            words.append(" ".join(sentence) + ".")
        passages.append(Passage(id=f"s{i}", text=" ".join(words)))
    return passages
