"""Invariant-check harness over a prebuilt resource directory.

Runs structural checks (row-stochasticity, associative-table soundness,
template round-trips, a straight-line recomputation of the geometric score,
novelty of freshly generated sentences) and reports pass/fail per check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import model1, model2, model3
from .errors import HomosyntaxError
from .generation import GenerationResources
from .model3 import score_candidates
from .pos import read_tagged_tsv
from .resources import TAGGED, load_resources
from .templates import extract_template
from .errors import TemplateError


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def check_row_stochastic(res: GenerationResources, tol: float = 1e-9) -> CheckResult:
    counts = res.matrix.counts
    probs = res.matrix.probs
    bad = 0
    for i in range(counts.shape[0]):
        if counts[i].sum() > 0 and (
            abs(probs[i].sum() - 1.0) > tol or np.any(probs[i] < 0)
        ):
            bad += 1
    return CheckResult(
        "row-stochastic",
        bad == 0,
        f"{bad} rows with nonzero counts are not stochastic",
    )


def check_ta_soundness(res: GenerationResources, tagged_path: Path) -> CheckResult:
    corpus = read_tagged_tsv(tagged_path)
    attested: set[tuple[str, str]] = set()
    for ts in corpus:
        for surface, tag in ts.tokens:
            attested.add((tag.truncated, surface.lower()))
    violations = [
        (tag, w)
        for tag in res.ta.tags()
        for w, _ in res.ta.words_for(tag)
        if (tag, w) not in attested
    ]
    return CheckResult(
        "ta-soundness",
        not violations,
        f"{len(violations)} unattested entries" if violations else "all attested",
    )


def check_template_roundtrip(
    res: GenerationResources, tagged_path: Path
) -> CheckResult:
    corpus = read_tagged_tsv(tagged_path)
    bad = 0
    total = 0
    for ts in corpus:
        try:
            template = extract_template(ts)
        except TemplateError:
            continue
        total += 1
        if template.identity_fill() != ts.surfaces:
            bad += 1
    return CheckResult(
        "template-roundtrip",
        bad == 0 and total > 0,
        f"{bad}/{total} round-trip failures",
    )


def _oracle_scores(o, q, vk, store):
    """Straight-line recomputation of the min-max score, raw vectors only."""

    def prox(a, b):
        va, vb = store.vectors[store.index[a]], store.vectors[store.index[b]]
        cos = float(np.dot(va, vb) / (np.linalg.norm(va) * np.linalg.norm(vb)))
        return min(1.0, max(0.0, (cos + 1.0) / 2.0))

    def top10(word):
        others = [w for w in store.words if w != word]
        others.sort(key=lambda w: (-prox(word, w), w))
        return others[:10]

    thetas, betas = [], []
    for w in vk:
        u = top10(o) + top10(q) + top10(w)
        x = np.array([prox(o, uj) for uj in u])
        qv = np.array([prox(q, uj) for uj in u])
        wv = np.array([prox(w, uj) for uj in u])
        thetas.append(
            float(np.dot(qv, wv) / (np.linalg.norm(qv) * np.linalg.norm(wv)))
        )
        betas.append(
            float(np.dot(x, wv) / (np.linalg.norm(x) * np.linalg.norm(wv)))
        )
    mt, mb = sum(thetas) / len(thetas), sum(betas) / len(betas)
    return [(mt / t) * (b / mb) for t, b in zip(thetas, betas)]


def check_score_oracle(
    res: GenerationResources, slots: int = 5, tol: float = 1e-9
) -> CheckResult:
    rng = random.Random(12345)
    checked = 0
    worst = 0.0
    for tid in res.templates.ids():
        if checked >= slots:
            break
        template = res.templates.get(tid)
        for slot in template.slots:
            if checked >= slots:
                break
            o = slot.original.lower()
            if o not in res.store:
                continue
            vocab = [w for w, _ in res.ta.words_for(slot.tag.truncated)
                     if w in res.store][:10]
            if len(vocab) < 2:
                continue
            q = rng.choice(res.store.words)
            scored = score_candidates(o, q, vocab, res.store)
            expected = dict(zip(vocab, _oracle_scores(o, q, vocab, res.store)))
            for c in scored:
                worst = max(worst, abs(c.s - expected[c.w]))
            checked += 1
    return CheckResult(
        "score-oracle",
        checked > 0 and worst <= tol,
        f"{checked} slots checked, max |delta| = {worst:.3g}",
    )


def check_novelty(res: GenerationResources, query: str | None = None) -> CheckResult:
    query = query or res.store.words[0]
    # small vocabularies need a wider neighbor lexicon for model 1
    res.neighbors_m = max(res.neighbors_m, min(60, len(res.store) - 1))
    failures = 0
    generated = 0
    for model_fn in (model1.generate_model1, model2.generate_model2,
                     model3.generate_model3):
        for seed in range(3):
            try:
                sent = model_fn(query, 6, res, seed)
            except HomosyntaxError:
                continue
            generated += 1
            if not res.is_novel(sent.tokens):
                failures += 1
    return CheckResult(
        "novelty",
        generated > 0 and failures == 0,
        f"{generated} sentences generated, {failures} corpus collisions",
    )


def run_check(directory: str | Path) -> list[CheckResult]:
    directory = Path(directory)
    if not (directory / TAGGED).is_file():
        from .errors import ResourceError

        raise ResourceError(
            f"missing resource files in {directory}: {TAGGED}",
            path=str(directory),
        )
    res = load_resources(directory)
    results = [
        check_row_stochastic(res),
        check_template_roundtrip(res, directory / TAGGED),
        check_ta_soundness(res, directory / TAGGED),
        check_score_oracle(res),
        check_novelty(res),
    ]
    return results
