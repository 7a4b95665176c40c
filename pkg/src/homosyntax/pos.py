"""POS tags, tag truncation/classification and a pluggable tagger.

Tags follow the EAGLES-style inventory (N/V/A/D/P/C/S/F/Z/W/R/I first
character). Only the first four positions of a full tag are load-bearing;
everything downstream works on the truncated form.

Two tagger backends are provided: a deterministic lexicon+suffix tagger for
hermetic use, and a reader for pre-tagged TSV produced by any external tool.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .corpus import SentenceRecord
from .errors import FormatError, TagError


@dataclass(frozen=True)
class PosTag:
    full: str

    def __post_init__(self):
        if not self.full:
            raise TagError("empty POS tag")

    @property
    def truncated(self) -> str:
        return self.full[:4]

    @property
    def category(self) -> str:
        return self.full[0]


class TagClass(Enum):
    FUNCTIONAL = "functional"
    CONTENT_VERB = "content_verb"
    CONTENT_NOUN = "content_noun"
    CONTENT_ADJ = "content_adj"


_CONTENT = {
    "V": TagClass.CONTENT_VERB,
    "N": TagClass.CONTENT_NOUN,
    "A": TagClass.CONTENT_ADJ,
}


def truncate_tag(full: str) -> PosTag:
    if not full:
        raise TagError("empty POS tag")
    return PosTag(full)


def classify_tag(tag: PosTag) -> TagClass:
    return _CONTENT.get(tag.category, TagClass.FUNCTIONAL)


def is_content(tag: PosTag) -> bool:
    return tag.category in _CONTENT


@dataclass(frozen=True)
class TaggedSentence:
    tokens: tuple[tuple[str, PosTag], ...]
    source: SentenceRecord

    @property
    def surfaces(self) -> tuple[str, ...]:
        return tuple(w for w, _ in self.tokens)


# Fallback suffix rules, tried in order (longest suffix first).
DEFAULT_SUFFIX_RULES: tuple[tuple[str, str], ...] = (
    ("mente", "RG"),
    ("ciones", "NCFP000"),
    ("ción", "NCFS000"),
    ("idades", "NCFP000"),
    ("idad", "NCFS000"),
    ("aban", "VMII3P0"),
    ("aba", "VMII3S0"),
    ("aron", "VMIS3P0"),
    ("ando", "VMG0000"),
    ("iendo", "VMG0000"),
    ("ar", "VMN0000"),
    ("er", "VMN0000"),
    ("ir", "VMN0000"),
    ("osos", "AQ0MP00"),
    ("osas", "AQ0FP00"),
    ("oso", "AQ0MS00"),
    ("osa", "AQ0FS00"),
    ("es", "NCMP000"),
    ("os", "NCMP000"),
    ("as", "NCFP000"),
    ("a", "NCFS000"),
    ("o", "NCMS000"),
    ("e", "NCMS000"),
)


class TaggerLexicon:
    """surface -> weighted full tags, with suffix rules as fallback."""

    def __init__(
        self,
        entries: dict[str, list[tuple[str, float]]],
        suffix_rules: tuple[tuple[str, str], ...] = DEFAULT_SUFFIX_RULES,
    ):
        for surface, tags in entries.items():
            for full, weight in tags:
                if not full:
                    raise TagError(f"empty tag for {surface!r}")
                if weight <= 0:
                    raise FormatError(f"non-positive weight for {surface!r}")
        self.entries = entries
        self.suffix_rules = suffix_rules

    @classmethod
    def load(cls, path: str | Path) -> "TaggerLexicon":
        """Read ``surface<TAB>fulltag<TAB>weight`` lines."""
        entries: dict[str, list[tuple[str, float]]] = {}
        for i, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), start=1
        ):
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise FormatError("expected 3 tab-separated fields", line=i)
            surface, full, weight_s = parts
            try:
                weight = float(weight_s)
            except ValueError as e:
                raise FormatError(f"bad weight {weight_s!r}", line=i) from e
            entries.setdefault(surface, []).append((full, weight))
        return cls(entries)

    def best_tag(self, surface: str) -> str | None:
        candidates = self.entries.get(surface) or self.entries.get(surface.lower())
        if candidates:
            # highest weight wins; ties break lexicographically by full tag
            return min(candidates, key=lambda c: (-c[1], c[0]))[0]
        low = surface.lower()
        for suffix, full in self.suffix_rules:
            if len(low) > len(suffix) and low.endswith(suffix):
                return full
        return None


def tag_sentence(s: SentenceRecord, lex: TaggerLexicon) -> TaggedSentence:
    """Assign exactly one tag per token; total by construction."""
    tagged = []
    for surface in s.tokens:
        full = lex.best_tag(surface)
        if full is None:
            full = "NCMS000" if surface[:1].isupper() else "NC0000"
        tagged.append((surface, PosTag(full)))
    return TaggedSentence(tokens=tuple(tagged), source=s)


def write_tagged_tsv(sentences: list[TaggedSentence], path: str | Path) -> None:
    """One ``surface<TAB>fulltag`` line per token, blank line between sentences."""
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for i, ts in enumerate(sentences):
            if i:
                f.write("\n")
            for surface, tag in ts.tokens:
                f.write(f"{surface}\t{tag.full}\n")


def read_tagged_tsv(path: str | Path) -> list[TaggedSentence]:
    path = Path(path)
    sentences: list[TaggedSentence] = []
    current: list[tuple[str, PosTag]] = []

    def flush():
        if current:
            tokens = tuple(current)
            record = SentenceRecord(
                doc_id=path.stem,
                index=len(sentences),
                tokens=tuple(w for w, _ in tokens),
                char_len=len(" ".join(w for w, _ in tokens)),
            )
            sentences.append(TaggedSentence(tokens=tokens, source=record))
            current.clear()

    for i, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            flush()
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise FormatError("expected 'surface<TAB>fulltag'", line=i)
        current.append((parts[0], PosTag(parts[1])))
    flush()
    return sentences
