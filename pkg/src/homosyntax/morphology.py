"""Lexicon-backed inflection: map a word to a surface form matching a tag.

There are no generative conjugation rules here. A forms lexicon (data file,
``lemma<TAB>surface<TAB>fulltag<TAB>freq``) declares which surface forms
exist for each lemma; inflection is an exact lookup over it.
"""

from __future__ import annotations

from pathlib import Path

from .errors import FormatError, TagError
from .pos import PosTag


class FormsLexicon:
    def __init__(self, entries: list[tuple[str, str, str, int]]):
        # lemma -> [(surface, fulltag, freq)]
        self.forms: dict[str, list[tuple[str, str, int]]] = {}
        # surface -> lemmas it belongs to
        self.lemmas_of: dict[str, set[str]] = {}
        # surface -> truncated tags it is attested under
        self.attested: dict[str, set[str]] = {}
        seen = set()
        for lemma, surface, fulltag, freq in entries:
            if not fulltag:
                raise TagError(f"empty tag for form {surface!r}")
            key = (lemma, surface, fulltag)
            if key in seen:
                continue
            seen.add(key)
            self.forms.setdefault(lemma, []).append((surface, fulltag, freq))
            self.lemmas_of.setdefault(surface, set()).add(lemma)
            self.attested.setdefault(surface, set()).add(fulltag[:4])

    @classmethod
    def load(cls, path: str | Path) -> "FormsLexicon":
        entries = []
        for i, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), start=1
        ):
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise FormatError("expected 4 tab-separated fields", line=i)
            lemma, surface, fulltag, freq_s = parts
            try:
                freq = int(freq_s)
            except ValueError as e:
                raise FormatError(f"bad frequency {freq_s!r}", line=i) from e
            entries.append((lemma, surface, fulltag, freq))
        return cls(entries)


def matches_tag(word: str, target: PosTag, lex: FormsLexicon) -> bool:
    """True iff the lexicon attests this surface under the target truncation."""
    return target.truncated in lex.attested.get(word.lower(), ())


def inflect(word: str, target: PosTag, lex: FormsLexicon) -> str | None:
    """Surface form of word's lemma matching the target tag, or None.

    A word that already satisfies the tag is returned unchanged. Among
    multiple candidate forms the highest-frequency one wins, ties broken
    lexicographically.
    """
    low = word.lower()
    if matches_tag(low, target, lex):
        return low
    candidates = []
    for lemma in lex.lemmas_of.get(low, ()):
        for surface, fulltag, freq in lex.forms[lemma]:
            if fulltag[:4] == target.truncated:
                candidates.append((surface, freq))
    # the lemma itself may also head an entry without appearing as a surface
    if low in lex.forms and low not in lex.lemmas_of:
        for surface, fulltag, freq in lex.forms[low]:
            if fulltag[:4] == target.truncated:
                candidates.append((surface, freq))
    if not candidates:
        return None
    return min(candidates, key=lambda sf: (-sf[1], sf[0]))[0]
