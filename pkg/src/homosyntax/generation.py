"""Shared plumbing for the three generation pipelines.

Holds the generated-sentence record, surface realization (detokenization),
sentence normalization used for novelty checks, the function-word dictionary
and the bundle of prebuilt resources the pipelines consume.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .embeddings import AssociativeTable, EmbeddingStore
from .errors import DictError, FormatError
from .markov import DecodePolicy, TransitionMatrix
from .morphology import FormsLexicon
from .pos import PosTag, TaggedSentence, is_content
from .templates import TemplateStore

# tokens that attach to the preceding word
_NO_SPACE_BEFORE = set(".,;:!?…)]}»")
# tokens that attach to the following word
_NO_SPACE_AFTER = set("([{«¿¡")

DEFAULT_NEIGHBORS = 20
DEFAULT_MAX_HOPS = 5
DEFAULT_CAP_M = 200
NOVELTY_RETRIES = 20


def detokenize(tokens: list[str] | tuple[str, ...]) -> str:
    """Single spaces, no space around attached punctuation, capitalized start."""
    out = []
    for tok in tokens:
        if out and tok and tok[0] in _NO_SPACE_BEFORE:
            out[-1] += tok
        elif out and out[-1] and out[-1][-1] in _NO_SPACE_AFTER:
            out[-1] += tok
        else:
            out.append(tok)
    text = " ".join(out)
    for i, c in enumerate(text):
        if c.isalpha():
            return text[:i] + c.upper() + text[i + 1 :]
    return text


def normalize_tokens(tokens: list[str] | tuple[str, ...]) -> str:
    """Lowercased alphabetic tokens joined by single spaces (novelty key)."""
    return " ".join(t.lower() for t in tokens if any(c.isalpha() for c in t))


@dataclass
class GeneratedSentence:
    tokens: tuple[str, ...]
    model: int
    query: str
    source: str  # skeleton provenance (template source id or "markov")
    trace: list[dict] = field(default_factory=list)

    @property
    def text(self) -> str:
        return detokenize(self.tokens)


class FunctionWordDictionary:
    """Functional truncated tag -> surface forms attested in the corpus."""

    def __init__(self, table: dict[str, list[str]]):
        self.table = table

    def forms_for(self, tag: PosTag) -> list[str]:
        forms = self.table.get(tag.truncated)
        if not forms:
            raise DictError(tag.truncated)
        return forms

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for tag in sorted(self.table):
                f.write(
                    json.dumps(
                        {"tag": tag, "words": self.table[tag]}, ensure_ascii=False
                    )
                    + "\n"
                )

    @classmethod
    def load(cls, path: str | Path) -> "FunctionWordDictionary":
        table: dict[str, list[str]] = {}
        for i, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), start=1
        ):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                table[obj["tag"]] = list(obj["words"])
            except (json.JSONDecodeError, KeyError, TypeError) as e:
                raise FormatError(f"bad dictionary row: {e}", line=i) from e
        return cls(table)

    @classmethod
    def from_sentences(cls, corpus: list[TaggedSentence]) -> "FunctionWordDictionary":
        counts: dict[str, dict[str, int]] = {}
        for ts in corpus:
            for surface, tag in ts.tokens:
                if is_content(tag):
                    continue
                word = surface if tag.category == "F" else surface.lower()
                entry = counts.setdefault(tag.truncated, {})
                entry[word] = entry.get(word, 0) + 1
        table = {
            tag: [w for w, _ in sorted(words.items(), key=lambda wc: (-wc[1], wc[0]))]
            for tag, words in counts.items()
        }
        return cls(table)


@dataclass
class GenerationResources:
    matrix: TransitionMatrix
    templates: TemplateStore
    store: EmbeddingStore
    ta: AssociativeTable
    funcdict: FunctionWordDictionary
    forms: FormsLexicon
    corpus_norms: frozenset[str]  # normalized corpus sentences, for novelty
    policy: DecodePolicy = field(default_factory=lambda: DecodePolicy.topk(3))
    neighbors_m: int = DEFAULT_NEIGHBORS
    max_hops: int = DEFAULT_MAX_HOPS
    cap_m: int = DEFAULT_CAP_M

    def is_novel(self, tokens: tuple[str, ...]) -> bool:
        return normalize_tokens(tokens) not in self.corpus_norms


def derive_rng(seed: int) -> random.Random:
    return random.Random(seed)
