"""Loading of prebuilt resource directories.

A resource directory uses conventional filenames:

    sentences.txt    corpus sentences, one per line (novelty reference)
    tagged.tsv       tagged corpus (surface<TAB>fulltag, blank-line separated)
    matrix.txt       transition matrix (states header + sparse count triples)
    templates.jsonl  template store
    vectors.txt      embeddings, word2vec text format
    ta.jsonl         associative table
    funcdict.jsonl   function-word dictionary
    forms.tsv        morphology forms lexicon
"""

from __future__ import annotations

from pathlib import Path

from .corpus import read_sentences
from .embeddings import AssociativeTable, EmbeddingStore
from .errors import ResourceError
from .generation import (
    FunctionWordDictionary,
    GenerationResources,
    normalize_tokens,
)
from .markov import DecodePolicy, TransitionMatrix
from .morphology import FormsLexicon
from .templates import TemplateStore

SENTENCES = "sentences.txt"
TAGGED = "tagged.tsv"
MATRIX = "matrix.txt"
TEMPLATES = "templates.jsonl"
VECTORS = "vectors.txt"
TA = "ta.jsonl"
FUNCDICT = "funcdict.jsonl"
FORMS = "forms.tsv"

REQUIRED = (SENTENCES, MATRIX, TEMPLATES, VECTORS, TA, FUNCDICT, FORMS)


def load_resources(
    directory: str | Path,
    policy: DecodePolicy | None = None,
    cap_m: int | None = None,
) -> GenerationResources:
    directory = Path(directory)
    missing = [name for name in REQUIRED if not (directory / name).is_file()]
    if missing:
        raise ResourceError(
            f"missing resource files in {directory}: {', '.join(missing)}",
            path=str(directory),
        )
    sentences = read_sentences(directory / SENTENCES)
    res = GenerationResources(
        matrix=TransitionMatrix.load(directory / MATRIX),
        templates=TemplateStore.load(directory / TEMPLATES),
        store=EmbeddingStore.load(directory / VECTORS),
        ta=AssociativeTable.load(directory / TA),
        funcdict=FunctionWordDictionary.load(directory / FUNCDICT),
        forms=FormsLexicon.load(directory / FORMS),
        corpus_norms=frozenset(normalize_tokens(s.tokens) for s in sentences),
    )
    if policy is not None:
        res.policy = policy
    if cap_m is not None:
        res.cap_m = cap_m
    return res
