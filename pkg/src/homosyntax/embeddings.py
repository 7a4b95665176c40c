"""Dense word vectors, neighbor queries and the POS-indexed associative table.

The bundled trainer is a deliberately minimal single-threaded skip-gram with
negative sampling: deterministic for a fixed seed, compatible on disk with
the standard word2vec text format. Quality-sensitive users should load
externally trained vectors instead.

All similarity values exposed here are proximities in [0, 1]:
proximity = (cosine + 1) / 2, so larger always means closer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import SentenceRecord
from .errors import FormatError, OovError, TableError, TrainError
from .pos import TaggedSentence, is_content


@dataclass(frozen=True)
class Lexicon:
    """Ordered neighbor list L(Q) for a query word."""

    query: str
    entries: tuple[tuple[str, float], ...]

    def words(self) -> tuple[str, ...]:
        return tuple(w for w, _ in self.entries)


class EmbeddingStore:
    def __init__(self, words: list[str], vectors: np.ndarray):
        if len(words) != vectors.shape[0]:
            raise FormatError("vocab size does not match vector count")
        if not np.all(np.isfinite(vectors)):
            raise FormatError("non-finite vector components")
        self.words = list(words)
        self.index = {w: i for i, w in enumerate(self.words)}
        self.vectors = np.asarray(vectors, dtype=np.float64)
        norms = np.linalg.norm(self.vectors, axis=1, keepdims=True)
        self._unit = self.vectors / np.maximum(norms, 1e-12)
        self.training_losses: list[float] = []

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: str) -> bool:
        return word in self.index

    @property
    def dims(self) -> int:
        return self.vectors.shape[1]

    def _require(self, word: str) -> int:
        i = self.index.get(word)
        if i is None:
            raise OovError(word)
        return i

    def proximity(self, a: str, b: str) -> float:
        """(cosine + 1) / 2, clipped to [0, 1]."""
        ia, ib = self._require(a), self._require(b)
        cos = float(np.dot(self._unit[ia], self._unit[ib]))
        return min(1.0, max(0.0, (cos + 1.0) / 2.0))

    def neighbors(self, q: str, m: int) -> Lexicon:
        """Top-m words by proximity to q, q excluded, ties lexicographic."""
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        iq = self._require(q)
        cos = self._unit @ self._unit[iq]
        prox = np.clip((cos + 1.0) / 2.0, 0.0, 1.0)
        order = sorted(
            (i for i in range(len(self.words)) if i != iq),
            key=lambda i: (-prox[i], self.words[i]),
        )
        entries = tuple((self.words[i], float(prox[i])) for i in order[:m])
        return Lexicon(query=q, entries=entries)

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(f"{len(self.words)} {self.dims}\n")
            for w, vec in zip(self.words, self.vectors):
                f.write(w + " " + " ".join(f"{v:.6f}" for v in vec) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> "EmbeddingStore":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        if not lines:
            raise FormatError("empty embedding file", line=1)
        header = lines[0].split()
        if len(header) != 2:
            raise FormatError("expected '<vocab_count> <dims>' header", line=1)
        try:
            count, dims = int(header[0]), int(header[1])
        except ValueError as e:
            raise FormatError("non-integer header", line=1) from e
        if len(lines) - 1 < count:
            raise FormatError(f"expected {count} vector rows")
        words = []
        vectors = np.zeros((count, dims), dtype=np.float64)
        for row, line in enumerate(lines[1 : 1 + count]):
            parts = line.split()
            if len(parts) != dims + 1:
                raise FormatError(
                    f"expected word + {dims} floats", line=row + 2
                )
            words.append(parts[0])
            try:
                vectors[row] = [float(p) for p in parts[1:]]
            except ValueError as e:
                raise FormatError("non-numeric component", line=row + 2) from e
        return cls(words, vectors)


def _normalize_tokens(tokens: tuple[str, ...]) -> list[str]:
    """Lowercase and drop tokens without letters (punctuation, numbers)."""
    return [t.lower() for t in tokens if any(c.isalpha() for c in t)]


def train_embeddings(
    corpus: list[SentenceRecord],
    dims: int = 64,
    window: int = 5,
    epochs: int = 5,
    negatives: int = 5,
    seed: int = 0,
    min_count: int = 2,
    lr: float = 0.025,
) -> EmbeddingStore:
    """Single-threaded skip-gram with negative sampling; fully deterministic."""
    if len(corpus) < 100:
        raise TrainError(f"need >= 100 sentences, got {len(corpus)}")
    if dims < 8:
        raise TrainError(f"need dims >= 8, got {dims}")

    sentences = [_normalize_tokens(s.tokens) for s in corpus]
    freq: dict[str, int] = {}
    for sent in sentences:
        for t in sent:
            freq[t] = freq.get(t, 0) + 1
    vocab = sorted(
        (w for w, c in freq.items() if c >= min_count),
        key=lambda w: (-freq[w], w),
    )
    if len(vocab) < 2:
        raise TrainError("vocabulary too small after min_count filtering")
    index = {w: i for i, w in enumerate(vocab)}
    encoded = [
        [index[t] for t in sent if t in index] for sent in sentences
    ]
    encoded = [s for s in encoded if len(s) >= 2]

    rng = np.random.default_rng(seed)
    v = len(vocab)
    w_in = (rng.random((v, dims)) - 0.5) / dims
    w_out = np.zeros((v, dims))

    # unigram^0.75 negative-sampling distribution
    counts = np.array([freq[w] for w in vocab], dtype=np.float64)
    neg_probs = counts**0.75
    neg_probs /= neg_probs.sum()

    total_steps = max(1, epochs * sum(len(s) for s in encoded))
    step = 0
    losses = []
    for _epoch in range(epochs):
        epoch_loss = 0.0
        pairs = 0
        for sent in encoded:
            for ci, center in enumerate(sent):
                alpha = max(lr * (1.0 - step / total_steps), lr * 1e-4)
                step += 1
                lo = max(0, ci - window)
                hi = min(len(sent), ci + window + 1)
                for xi in range(lo, hi):
                    if xi == ci:
                        continue
                    context = sent[xi]
                    negs = rng.choice(v, size=negatives, p=neg_probs)
                    targets = np.concatenate(([context], negs))
                    labels = np.zeros(negatives + 1)
                    labels[0] = 1.0
                    h = w_in[center]
                    z = w_out[targets] @ h
                    p = 1.0 / (1.0 + np.exp(-z))
                    g = (p - labels) * alpha
                    grad_h = g @ w_out[targets]
                    # subtract.at accumulates over duplicate sampled targets
                    np.subtract.at(w_out, targets, np.outer(g, h))
                    w_in[center] -= grad_h
                    eps = 1e-10
                    epoch_loss -= float(
                        np.log(p[0] + eps) + np.log(1.0 - p[1:] + eps).sum()
                    )
                    pairs += 1
        losses.append(epoch_loss / max(1, pairs))

    store = EmbeddingStore(vocab, w_in)
    store.training_losses = losses
    return store


class AssociativeTable:
    """Truncated content tag -> distinct lowercased words with frequencies."""

    def __init__(self, table: dict[str, list[tuple[str, int]]]):
        self.table = table

    def tags(self) -> list[str]:
        return sorted(self.table)

    def words_for(self, tag: str) -> list[tuple[str, int]]:
        if tag not in self.table:
            raise TableError(f"no associative-table entry for tag {tag!r}")
        return list(self.table[tag])

    def __contains__(self, tag: str) -> bool:
        return tag in self.table

    def save(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for tag in sorted(self.table):
                f.write(
                    json.dumps(
                        {"tag": tag, "words": [[w, c] for w, c in self.table[tag]]},
                        ensure_ascii=False,
                    )
                    + "\n"
                )

    @classmethod
    def load(cls, path: str | Path) -> "AssociativeTable":
        table: dict[str, list[tuple[str, int]]] = {}
        for i, line in enumerate(
            Path(path).read_text(encoding="utf-8").splitlines(), start=1
        ):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                table[obj["tag"]] = [(w, int(c)) for w, c in obj["words"]]
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
                raise FormatError(f"bad table row: {e}", line=i) from e
        return cls(table)


def build_associative_table(corpus: list[TaggedSentence]) -> AssociativeTable:
    """Group content words by truncated tag, counting occurrences."""
    counts: dict[str, dict[str, int]] = {}
    for ts in corpus:
        for surface, tag in ts.tokens:
            if not is_content(tag):
                continue
            entry = counts.setdefault(tag.truncated, {})
            word = surface.lower()
            entry[word] = entry.get(word, 0) + 1
    table = {
        tag: sorted(words.items(), key=lambda wc: (-wc[1], wc[0]))
        for tag, words in counts.items()
    }
    return AssociativeTable(table)
