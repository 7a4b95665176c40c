"""Model 1: Markov-generated skeleton filled from embedding neighborhoods.

Functional slots draw uniformly from the function-word dictionary. Content
slots take the first neighbor of the query that fits the slot's tag, trying
inflection before relaxing the query to its nearest unvisited neighbor.
"""

from __future__ import annotations

import random

from .embeddings import EmbeddingStore
from .errors import GenerationError, OovError, RelaxationError
from .generation import (
    NOVELTY_RETRIES,
    GeneratedSentence,
    FunctionWordDictionary,
    GenerationResources,
)
from .markov import generate_egv
from .morphology import FormsLexicon, inflect, matches_tag
from .pos import PosTag, is_content


def fill_functional(
    tag: PosTag, fdict: FunctionWordDictionary, rng: random.Random
) -> str:
    return rng.choice(fdict.forms_for(tag))


def fill_content_with_relaxation(
    tag: PosTag,
    q: str,
    store: EmbeddingStore,
    forms: FormsLexicon,
    m: int = 20,
    max_hops: int = 5,
) -> tuple[str, int, list[str]]:
    """Find a tag-fitting word in L(Q), relaxing Q to Q* when needed.

    Returns (word, hops, visited queries). A word fits either directly
    (attested under the tag) or through inflection.
    """
    if q not in store:
        raise OovError(q)
    visited = [q]
    current = q
    for hops in range(max_hops + 1):
        lexicon = store.neighbors(current, m)
        for word, _ in lexicon.entries:
            if matches_tag(word, tag, forms):
                return word, hops, visited
        for word, _ in lexicon.entries:
            inflected = inflect(word, tag, forms)
            if inflected is not None:
                return inflected, hops, visited
        # relax: nearest neighbor of the current query not yet visited
        next_q = next(
            (w for w, _ in lexicon.entries if w not in visited), None
        )
        if next_q is None:
            break
        visited.append(next_q)
        current = next_q
    raise RelaxationError(
        f"no word fitting tag {tag.truncated!r} within {max_hops} relaxations "
        f"of query {q!r}",
        visited=visited,
    )


def generate_model1(
    q: str, n: int, res: GenerationResources, seed: int
) -> GeneratedSentence:
    if q not in res.store:
        raise OovError(q)
    rng = random.Random(seed)
    last_error: Exception | None = None
    for _attempt in range(NOVELTY_RETRIES):
        try:
            egv = generate_egv(res.matrix, None, n, res.policy, rng)
        except GenerationError as e:
            last_error = e
            continue
        tokens: list[str] = []
        trace: list[dict] = []
        for pos, tag in enumerate(egv.slots):
            if is_content(tag):
                word, hops, visited = fill_content_with_relaxation(
                    tag, q, res.store, res.forms, res.neighbors_m, res.max_hops
                )
                tokens.append(word)
                trace.append(
                    {
                        "position": pos,
                        "tag": tag.truncated,
                        "kind": "content",
                        "chosen": word,
                        "hops": hops,
                        "queries": visited,
                    }
                )
            else:
                # a skeleton-final punctuation slot always realizes as a period
                if pos == n - 1 and tag.category == "F":
                    word = "."
                else:
                    word = fill_functional(tag, res.funcdict, rng)
                tokens.append(word)
                trace.append(
                    {
                        "position": pos,
                        "tag": tag.truncated,
                        "kind": "functional",
                        "chosen": word,
                    }
                )
        if res.is_novel(tuple(tokens)):
            return GeneratedSentence(
                tokens=tuple(tokens),
                model=1,
                query=q,
                source="markov",
                trace=trace,
            )
        last_error = GenerationError("generated sentence exists in corpus")
    raise GenerationError(
        f"model 1 failed after {NOVELTY_RETRIES} attempts: {last_error}"
    )
