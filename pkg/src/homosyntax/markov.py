"""POS-bigram transition matrix and stochastic skeleton generation.

States are truncated tags plus synthetic START/END boundary markers.
Probabilities are pure maximum-likelihood estimates: no smoothing, so every
generated bigram is guaranteed to have been observed in training.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import BuildError, ConfigError, FormatError, GenerationError
from .pos import PosTag, TaggedSentence

START = "<s>"
END = "</s>"

MIN_LEN = 3
MAX_LEN = 15
DEFAULT_RESTARTS = 10


@dataclass(frozen=True)
class DecodePolicy:
    kind: str  # "argmax" | "topk"
    k: int = 3

    @classmethod
    def argmax(cls) -> "DecodePolicy":
        return cls("argmax")

    @classmethod
    def topk(cls, k: int = 3) -> "DecodePolicy":
        if k < 1:
            raise ConfigError(f"topk k must be >= 1, got {k}")
        return cls("topk", k)

    @classmethod
    def parse(cls, text: str) -> "DecodePolicy":
        if text == "argmax":
            return cls.argmax()
        if text.startswith("topk:"):
            try:
                return cls.topk(int(text.split(":", 1)[1]))
            except ValueError as e:
                raise ConfigError(f"bad policy {text!r}") from e
        if text == "topk":
            return cls.topk()
        raise ConfigError(f"unknown decode policy {text!r}")


@dataclass(frozen=True)
class EgvSkeleton:
    slots: tuple[PosTag, ...]

    def __len__(self) -> int:
        return len(self.slots)


class TransitionMatrix:
    def __init__(self, states: tuple[str, ...], counts: np.ndarray):
        self.states = states
        self.index = {s: i for i, s in enumerate(states)}
        self.counts = counts
        totals = counts.sum(axis=1, keepdims=True)
        with np.errstate(invalid="ignore", divide="ignore"):
            probs = np.where(totals > 0, counts / np.maximum(totals, 1), 0.0)
        self.probs = probs

    def prob(self, a: str, b: str) -> float:
        i, j = self.index.get(a), self.index.get(b)
        if i is None or j is None:
            return 0.0
        return float(self.probs[i, j])

    def save(self, path: str | Path) -> None:
        """Header, state list, then sparse ``i j count`` triples."""
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(f"states {len(self.states)}\n")
            for s in self.states:
                f.write(s + "\n")
            rows, cols = np.nonzero(self.counts)
            for i, j in zip(rows.tolist(), cols.tolist()):
                f.write(f"{i} {j} {int(self.counts[i, j])}\n")

    @classmethod
    def load(cls, path: str | Path) -> "TransitionMatrix":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        if not lines or not lines[0].startswith("states "):
            raise FormatError("missing 'states <n>' header", line=1)
        try:
            n = int(lines[0].split()[1])
        except (IndexError, ValueError) as e:
            raise FormatError("bad state count", line=1) from e
        if len(lines) < 1 + n:
            raise FormatError(f"expected {n} state lines")
        states = tuple(lines[1 : 1 + n])
        counts = np.zeros((n, n), dtype=np.int64)
        for lineno, line in enumerate(lines[1 + n :], start=2 + n):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 3:
                raise FormatError("expected 'i j count'", line=lineno)
            try:
                i, j, c = int(parts[0]), int(parts[1]), int(parts[2])
            except ValueError as e:
                raise FormatError("non-integer triple", line=lineno) from e
            if not (0 <= i < n and 0 <= j < n):
                raise FormatError("state index out of range", line=lineno)
            counts[i, j] = c
        return cls(states, counts)


def build_transition_matrix(corpus: list[TaggedSentence]) -> TransitionMatrix:
    """MLE bigram counts over truncated tags with START/END boundaries."""
    if not corpus:
        raise BuildError("cannot build transition matrix from empty corpus")
    tags = sorted({tag.truncated for ts in corpus for _, tag in ts.tokens})
    states = (START, *tags, END)
    index = {s: i for i, s in enumerate(states)}
    counts = np.zeros((len(states), len(states)), dtype=np.int64)
    for ts in corpus:
        seq = [START] + [tag.truncated for _, tag in ts.tokens] + [END]
        for a, b in zip(seq, seq[1:]):
            counts[index[a], index[b]] += 1
    return TransitionMatrix(states, counts)


def _successors(m: TransitionMatrix, state: str) -> list[tuple[str, float]]:
    """Non-END successors with positive probability, by state order."""
    row = m.probs[m.index[state]]
    end_i = m.index[END]
    return [
        (m.states[j], float(row[j]))
        for j in np.nonzero(row)[0].tolist()
        if j != end_i
    ]


def _step(
    m: TransitionMatrix, state: str, policy: DecodePolicy, rng: random.Random
) -> str | None:
    succ = _successors(m, state)
    if not succ:
        return None
    if policy.kind == "argmax":
        best = max(p for _, p in succ)
        tied = [s for s, p in succ if p >= best - 1e-12]
        return rng.choice(tied)
    top = sorted(succ, key=lambda sp: (-sp[1], sp[0]))[: policy.k]
    words = [s for s, _ in top]
    weights = [p for _, p in top]
    return rng.choices(words, weights=weights)[0]


def generate_egv(
    m: TransitionMatrix,
    start: str | None,
    n: int,
    policy: DecodePolicy = DecodePolicy.topk(3),
    rng: random.Random | None = None,
    restarts: int = DEFAULT_RESTARTS,
) -> EgvSkeleton:
    """Generate an n-tag skeleton by walking the transition matrix.

    `start` is a truncated tag used as the first slot, or None to sample
    the first tag from the empirical sentence-initial distribution.
    """
    if not (MIN_LEN <= n <= MAX_LEN):
        raise ConfigError(f"length must be in [{MIN_LEN}, {MAX_LEN}], got {n}")
    if start == START:
        start = None
    if start is not None and start not in m.index:
        raise ConfigError(f"unknown start state {start!r}")
    rng = rng if rng is not None else random.Random()

    partial: list[str] = []
    for _ in range(restarts):
        if start is None:
            succ = _successors(m, START)
            if not succ:
                raise GenerationError("START state has no successors")
            first = rng.choices([s for s, _ in succ], weights=[p for _, p in succ])[0]
        else:
            first = start
        seq = [first]
        while len(seq) < n:
            nxt = _step(m, seq[-1], policy, rng)
            if nxt is None:
                break
            seq.append(nxt)
        if len(seq) == n:
            return EgvSkeleton(slots=tuple(PosTag(t) for t in seq))
        partial = seq
    raise GenerationError(
        f"dead-end before length {n} after {restarts} restarts",
        partial=tuple(partial),
    )
