"""Model 3: template filling by geometric min-max scoring.

For each candidate w replacing an original word o under query q, a 30-word
symbolic vector U concatenates the 10 nearest neighbors of o, q and w. The
proximity profiles of o, q and w against U give three 30-dim vectors; the
cosines theta = cos(Qv, Wv) and beta = cos(X, Wv) are combined into

    s_i = (mean(theta) / theta_i) * (beta_i / mean(beta))

as printed in the source formulation. Because the printed formula appears
inverted relative to its stated intent (reward closeness to q, distance
from o), an `invert` switch computes (theta_i / mean(theta)) * (mean(beta)
/ beta_i) instead. The replacement is drawn uniformly from the top three
scores.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .embeddings import EmbeddingStore
from .errors import (
    DegenerateScoreError,
    EmptyRankError,
    GenerationError,
    OovError,
)
from .generation import GeneratedSentence, GenerationResources, NOVELTY_RETRIES
from .model2 import choose_top3, rank_vocabulary
from .templates import EgpSkeleton, Literal, select_template

SEGMENT = 10  # neighbors per anchor word; |U| = 3 * SEGMENT


@dataclass(frozen=True)
class UVector:
    words: tuple[str, ...]  # positions 0-9 from o, 10-19 from q, 20-29 from w

    def __post_init__(self):
        if len(self.words) != 3 * SEGMENT:
            raise ValueError(f"U must have {3 * SEGMENT} words")


@dataclass(frozen=True)
class CandidateScore:
    w: str
    theta: float
    beta: float
    s: float


def build_u(o: str, q: str, w: str, store: EmbeddingStore) -> UVector:
    words = (
        store.neighbors(o, SEGMENT).words()
        + store.neighbors(q, SEGMENT).words()
        + store.neighbors(w, SEGMENT).words()
    )
    return UVector(words=words)


def distance_vector(anchor: str, u: UVector, store: EmbeddingStore) -> np.ndarray:
    """Element j = proximity(anchor, u_j), all in [0, 1]."""
    return np.array([store.proximity(anchor, uj) for uj in u.words])


def _cos(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        raise DegenerateScoreError("zero-norm distance vector")
    return float(np.dot(a, b) / (na * nb))


def score_candidates(
    o: str,
    q: str,
    vk: list[str],
    store: EmbeddingStore,
    invert: bool = False,
) -> list[CandidateScore]:
    """Score every candidate and return them sorted by descending s."""
    if len(vk) < 2:
        raise EmptyRankError(f"need >= 2 candidates, got {len(vk)}")
    for word in (o, q, *vk):
        if word not in store:
            raise OovError(word)

    thetas, betas = [], []
    for w in vk:
        u = build_u(o, q, w, store)
        x = distance_vector(o, u, store)
        qv = distance_vector(q, u, store)
        wv = distance_vector(w, u, store)
        thetas.append(_cos(qv, wv))
        betas.append(_cos(x, wv))

    mean_theta = sum(thetas) / len(thetas)
    mean_beta = sum(betas) / len(betas)
    if any(t == 0.0 for t in thetas) or mean_beta == 0.0:
        raise DegenerateScoreError("zero similarity in scoring")
    if invert and (any(b == 0.0 for b in betas) or mean_theta == 0.0):
        raise DegenerateScoreError("zero similarity in inverted scoring")

    scored = []
    for w, theta, beta in zip(vk, thetas, betas):
        if invert:
            s = (theta / mean_theta) * (mean_beta / beta)
        else:
            s = (mean_theta / theta) * (beta / mean_beta)
        scored.append(CandidateScore(w=w, theta=theta, beta=beta, s=s))
    scored.sort(key=lambda c: (-c.s, c.w))
    return scored


def _candidate_vocab(
    tag_truncated: str, res: GenerationResources
) -> list[str]:
    """In-vocabulary attested words, capped to the most frequent cap_m."""
    vocab = res.ta.words_for(tag_truncated)
    in_vocab = [(w, c) for w, c in vocab if w in res.store]
    in_vocab.sort(key=lambda wc: (-wc[1], wc[0]))
    return [w for w, _ in in_vocab[: res.cap_m]]


def _fill_template(
    template: EgpSkeleton,
    q: str,
    res: GenerationResources,
    rng: random.Random,
    invert: bool,
    trace: list[dict],
) -> tuple[str, ...]:
    tokens: list[str] = []
    for item in template.items:
        if isinstance(item, Literal):
            tokens.append(item.surface)
            continue
        o = item.original.lower()
        if o not in res.store:
            # graceful degradation: rank by query proximity alone
            ranked = rank_vocabulary(item.tag, q, res.ta, res.store)
            word = choose_top3(ranked, rng)
            tokens.append(word)
            trace.append(
                {
                    "position": item.position,
                    "tag": item.tag.truncated,
                    "o": o,
                    "fallback": "model2",
                    "top3": [w for w, _ in ranked[:3]],
                    "chosen": word,
                }
            )
            continue
        vk = _candidate_vocab(item.tag.truncated, res)
        if len(vk) < 2:
            raise EmptyRankError(
                f"fewer than 2 in-vocabulary candidates for {item.tag.truncated!r}"
            )
        scored = score_candidates(o, q, vk, res.store, invert=invert)
        word = choose_top3([c.w for c in scored], rng)
        tokens.append(word)
        trace.append(
            {
                "position": item.position,
                "tag": item.tag.truncated,
                "o": o,
                "candidates": [
                    {"w": c.w, "theta": c.theta, "beta": c.beta, "s": c.s}
                    for c in scored
                ],
                "chosen": word,
            }
        )
    return tuple(tokens)


def generate_model3(
    q: str,
    n: int,
    res: GenerationResources,
    seed: int,
    invert: bool = False,
) -> GeneratedSentence:
    if q not in res.store:
        raise OovError(q)
    rng = random.Random(seed)
    last_error: Exception | None = None
    for _attempt in range(NOVELTY_RETRIES):
        template = select_template(res.templates, n, rng)
        trace: list[dict] = []
        try:
            tokens = _fill_template(template, q, res, rng, invert, trace)
        except EmptyRankError as e:
            template = select_template(res.templates, n, rng)
            trace = []
            try:
                tokens = _fill_template(template, q, res, rng, invert, trace)
            except EmptyRankError as e2:
                raise EmptyRankError(
                    f"{e2} (after template reselection; first failure: {e})"
                ) from e2
        if res.is_novel(tokens):
            return GeneratedSentence(
                tokens=tokens,
                model=3,
                query=q,
                source=template.source_id,
                trace=trace,
            )
        last_error = GenerationError("generated sentence exists in corpus")
    raise GenerationError(
        f"model 3 failed after {NOVELTY_RETRIES} attempts: {last_error}"
    )
