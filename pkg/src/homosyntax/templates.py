"""Canned-text templates: partially hollowed sentences (EGP).

A template keeps function words and punctuation verbatim and replaces each
content word (verb/noun/adjective) with a slot that remembers the truncated
tag and the original word. Filling every slot with its own original word
reconstructs the source sentence exactly.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .errors import FormatError, StoreError, TemplateError
from .pos import PosTag, TaggedSentence, is_content


@dataclass(frozen=True)
class Slot:
    position: int
    tag: PosTag
    original: str


@dataclass(frozen=True)
class Literal:
    position: int
    surface: str


@dataclass(frozen=True)
class EgpSkeleton:
    items: tuple[Slot | Literal, ...]
    source_id: str

    def __len__(self) -> int:
        return len(self.items)

    @property
    def slots(self) -> tuple[Slot, ...]:
        return tuple(it for it in self.items if isinstance(it, Slot))

    def identity_fill(self) -> tuple[str, ...]:
        return tuple(
            it.original if isinstance(it, Slot) else it.surface for it in self.items
        )


def extract_template(ts: TaggedSentence) -> EgpSkeleton:
    """Hollow out content words; error if the sentence has none."""
    items: list[Slot | Literal] = []
    for pos, (surface, tag) in enumerate(ts.tokens):
        if is_content(tag):
            items.append(Slot(pos, PosTag(tag.truncated), surface))
        else:
            items.append(Literal(pos, surface))
    if not any(isinstance(it, Slot) for it in items):
        raise TemplateError(
            f"sentence {ts.source.doc_id}:{ts.source.index} has no content words"
        )
    source_id = f"{ts.source.doc_id}:{ts.source.index}"
    return EgpSkeleton(items=tuple(items), source_id=source_id)


class TemplateStore:
    def __init__(self):
        self._by_id: dict[str, EgpSkeleton] = {}
        self._by_length: dict[int, list[str]] = {}

    def __len__(self) -> int:
        return len(self._by_id)

    def add(self, template: EgpSkeleton, template_id: str | None = None) -> str:
        tid = template_id if template_id is not None else f"t{len(self._by_id):06d}"
        if tid in self._by_id:
            raise StoreError(f"duplicate template id {tid!r}")
        self._by_id[tid] = template
        self._by_length.setdefault(len(template), []).append(tid)
        return tid

    def get(self, template_id: str) -> EgpSkeleton:
        return self._by_id[template_id]

    def ids(self) -> list[str]:
        return list(self._by_id)

    def lengths(self) -> list[int]:
        return sorted(self._by_length)

    @classmethod
    def from_sentences(cls, corpus: list[TaggedSentence]) -> "TemplateStore":
        """Build a store, silently skipping untemplatable sentences."""
        store = cls()
        for ts in corpus:
            try:
                store.add(extract_template(ts))
            except TemplateError:
                continue
        return store

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for tid, t in self._by_id.items():
                items = [
                    {"t": "slot", "tag": it.tag.full, "orig": it.original}
                    if isinstance(it, Slot)
                    else {"t": "lit", "w": it.surface}
                    for it in t.items
                ]
                f.write(
                    json.dumps(
                        {"id": tid, "source_id": t.source_id, "items": items},
                        ensure_ascii=False,
                    )
                    + "\n"
                )

    @classmethod
    def load(cls, path: str | Path) -> "TemplateStore":
        store = cls()
        for i, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), start=1
        ):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as e:
                raise FormatError("invalid JSON", line=i) from e
            try:
                items: list[Slot | Literal] = []
                for pos, it in enumerate(obj["items"]):
                    if it["t"] == "slot":
                        items.append(Slot(pos, PosTag(it["tag"]), it["orig"]))
                    elif it["t"] == "lit":
                        items.append(Literal(pos, it["w"]))
                    else:
                        raise FormatError(f"unknown item type {it['t']!r}", line=i)
                template = EgpSkeleton(tuple(items), obj["source_id"])
                store.add(template, obj["id"])
            except (KeyError, TypeError) as e:
                raise FormatError(f"missing field: {e}", line=i) from e
        return store


def select_template(
    store: TemplateStore, n: int, rng: random.Random
) -> EgpSkeleton:
    """Uniform pick among length-n templates, nearest length as fallback."""
    if not len(store):
        raise StoreError("template store is empty")
    lengths = store.lengths()
    if n not in store._by_length:
        # nearest available length; ties resolve to the smaller one
        n = min(lengths, key=lambda ln: (abs(ln - n), ln))
    tid = rng.choice(store._by_length[n])
    return store.get(tid)
