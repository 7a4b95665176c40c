#!/usr/bin/env python3
"""Regenerate the committed desk-scale fixtures under tests/fixtures/.

Deterministic: running this script twice produces byte-identical files.
The corpus is synthetic Spanish built from agreement-aware patterns over a
closed vocabulary, so the bundled tagger lexicon covers every token.
"""

from __future__ import annotations

import random
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "tests" / "fixtures"

SEED = 2024
N_SENTENCES = 600

# (surface, fulltag) pools, keyed where agreement matters
DET_DEF = {
    ("m", "s"): ("el", "DA0MS0"),
    ("f", "s"): ("la", "DA0FS0"),
    ("m", "p"): ("los", "DA0MP0"),
    ("f", "p"): ("las", "DA0FP0"),
}
DET_IND = {
    ("m", "s"): ("un", "DI0MS0"),
    ("f", "s"): ("una", "DI0FS0"),
}

NOUNS = {
    ("m", "s"): [
        "sol", "amor", "cielo", "mar", "viento", "fuego", "corazón",
        "sueño", "silencio", "tiempo", "camino", "río", "bosque",
        "invierno", "recuerdo", "jardín", "espejo", "otoño", "destino",
        "olvido",
    ],
    ("f", "s"): [
        "luna", "noche", "guerra", "paz", "sombra", "alma", "estrella",
        "lluvia", "tristeza", "alegría", "muerte", "vida", "rosa",
        "aurora", "nieve", "tarde", "palabra", "memoria", "esperanza",
        "soledad",
    ],
    ("m", "p"): [
        "sueños", "caminos", "recuerdos", "vientos", "corazones",
        "espejos", "ríos", "soles",
    ],
    ("f", "p"): [
        "estrellas", "sombras", "palabras", "rosas", "noches",
        "lágrimas", "almas", "lunas",
    ],
}
NOUN_TAG = {
    ("m", "s"): "NCMS000",
    ("f", "s"): "NCFS000",
    ("m", "p"): "NCMP000",
    ("f", "p"): "NCFP000",
}

ADJS = {
    ("m", "s"): [
        "eterno", "oscuro", "claro", "lento", "frío", "sereno",
        "profundo", "antiguo", "callado", "dorado",
    ],
    ("f", "s"): [
        "eterna", "oscura", "clara", "lenta", "fría", "serena",
        "profunda", "antigua", "callada", "dorada",
    ],
    ("m", "p"): ["eternos", "oscuros", "fríos", "profundos", "dorados"],
    ("f", "p"): ["eternas", "oscuras", "frías", "profundas", "doradas"],
}
ADJ_TAG = {
    ("m", "s"): "AQ0MS00",
    ("f", "s"): "AQ0FS00",
    ("m", "p"): "AQ0MP00",
    ("f", "p"): "AQ0FP00",
}
# common-gender adjectives agree with any noun of the same number
ADJ_COMMON = {
    "s": ["triste", "dulce", "ardiente", "fugaz", "inmortal"],
    "p": ["tristes", "dulces", "ardientes", "fugaces", "inmortales"],
}
ADJ_COMMON_TAG = {"s": "AQ0CS00", "p": "AQ0CP00"}

VERB_LEMMAS = [
    # lemma, 3rd singular, 3rd plural
    ("brillar", "brilla", "brillan"),
    ("cantar", "canta", "cantan"),
    ("morir", "muere", "mueren"),
    ("nacer", "nace", "nacen"),
    ("arder", "arde", "arden"),
    ("dormir", "duerme", "duermen"),
    ("llorar", "llora", "lloran"),
    ("volar", "vuela", "vuelan"),
    ("callar", "calla", "callan"),
    ("soñar", "sueña", "sueñan"),
    ("temblar", "tiembla", "tiemblan"),
    ("despertar", "despierta", "despiertan"),
    ("regresar", "regresa", "regresan"),
    ("suspirar", "suspira", "suspiran"),
    ("buscar", "busca", "buscan"),
    ("esperar", "espera", "esperan"),
]
VERBS = {
    "s": [v[1] for v in VERB_LEMMAS],
    "p": [v[2] for v in VERB_LEMMAS],
}
VERB_TAG = {"s": "VMIP3S0", "p": "VMIP3P0"}

PREPS = ["de", "en", "con", "sobre", "bajo", "entre", "hacia", "sin"]
CONJS = ["y", "pero", "o"]
ADVS = ["siempre", "nunca", "ya", "hoy", "lejos"]


def _noun_phrase(rng, number=None, definite=True):
    g = rng.choice(["m", "f"])
    n = number or rng.choice(["s", "s", "p"])
    if not definite and n == "s":
        det, det_tag = DET_IND[(g, n)]
    else:
        det, det_tag = DET_DEF[(g, n)]
    noun = rng.choice(NOUNS[(g, n)])
    pair = [(det, det_tag), (noun, NOUN_TAG[(g, n)])]
    if rng.random() < 0.35:
        if rng.random() < 0.3:
            adj = rng.choice(ADJ_COMMON[n])
            pair.append((adj, ADJ_COMMON_TAG[n]))
        else:
            adj = rng.choice(ADJS[(g, n)])
            pair.append((adj, ADJ_TAG[(g, n)]))
    return pair, n


def _verb(rng, number):
    return rng.choice(VERBS[number]), VERB_TAG[number]


def _prep_phrase(rng):
    prep = rng.choice(PREPS)
    np, _ = _noun_phrase(rng)
    return [(prep, "SPS00")] + np


def _noun_phrase_of_gender(rng, g, number="s"):
    det, det_tag = DET_DEF[(g, number)]
    noun = rng.choice(NOUNS[(g, number)])
    return [(det, det_tag), (noun, NOUN_TAG[(g, number)])]


def make_sentence(rng):
    pattern = rng.randrange(8)
    toks = []
    if pattern >= 6:
        # coordinated mixed-gender subject with plural verb
        first = rng.choice(["m", "f"])
        np1 = _noun_phrase_of_gender(rng, first)
        np2 = _noun_phrase_of_gender(rng, "f" if first == "m" else "m")
        toks += np1 + [("y", "CC")] + np2 + [_verb(rng, "p")]
        if rng.random() < 0.4:
            toks += _prep_phrase(rng)
        toks.append((".", "Fp"))
        return toks
    if pattern == 0:
        np, n = _noun_phrase(rng)
        toks += np + [_verb(rng, n)] + _prep_phrase(rng)
    elif pattern == 1:
        np, n = _noun_phrase(rng)
        toks += np + [_verb(rng, n)]
        np2, _ = _noun_phrase(rng, definite=False)
        toks += np2
    elif pattern == 2:
        toks.append((rng.choice(ADVS), "RG"))
        np, n = _noun_phrase(rng)
        toks += np + [_verb(rng, n)]
        if rng.random() < 0.5:
            toks += _prep_phrase(rng)
    elif pattern == 3:
        np, n = _noun_phrase(rng)
        toks += np + [_verb(rng, n), (",", "Fc"), (rng.choice(CONJS), "CC")]
        np2, n2 = _noun_phrase(rng)
        toks += np2 + [_verb(rng, n2)]
    elif pattern == 4:
        np, n = _noun_phrase(rng)
        toks += np + [_verb(rng, n), ("que", "PR0CN00")]
        np2, n2 = _noun_phrase(rng)
        toks += np2 + [_verb(rng, n2)]
    else:
        toks += _prep_phrase(rng)
        np, n = _noun_phrase(rng)
        toks += np + [_verb(rng, n)]
    toks.append((".", "Fp"))
    return toks


def build_corpus():
    rng = random.Random(SEED)
    seen = set()
    sentences = []
    while len(sentences) < N_SENTENCES:
        toks = make_sentence(rng)
        key = tuple(t for t, _ in toks)
        if key in seen:
            continue
        seen.add(key)
        sentences.append(toks)
    return sentences


def write_corpus(sentences):
    with open(FIXTURES / "sentences.txt", "w", encoding="utf-8", newline="\n") as f:
        for toks in sentences:
            f.write(" ".join(t for t, _ in toks) + "\n")


def write_lexicon():
    rows = []
    for (g, n), det in DET_DEF.items():
        rows.append((det[0], det[1], 10.0))
    for det in DET_IND.values():
        rows.append((det[0], det[1], 10.0))
    for key, words in NOUNS.items():
        rows += [(w, NOUN_TAG[key], 5.0) for w in words]
    for key, words in ADJS.items():
        rows += [(w, ADJ_TAG[key], 4.0) for w in words]
    for n, words in ADJ_COMMON.items():
        rows += [(w, ADJ_COMMON_TAG[n], 4.0) for w in words]
    for n in ("s", "p"):
        rows += [(w, VERB_TAG[n], 6.0) for w in VERBS[n]]
    rows += [(w, "SPS00", 10.0) for w in PREPS]
    rows += [(w, "CC", 10.0) for w in CONJS]
    rows += [(w, "RG", 8.0) for w in ADVS]
    rows.append(("que", "PR0CN00", 10.0))
    rows.append((".", "Fp", 10.0))
    rows.append((",", "Fc", 10.0))
    # the tagger's running example
    rows.append(("profesor", "NCMS000", 5.0))
    with open(FIXTURES / "lexicon.tsv", "w", encoding="utf-8", newline="\n") as f:
        for surface, tag, weight in rows:
            f.write(f"{surface}\t{tag}\t{weight}\n")


def write_forms():
    rows = []
    # adjectives: 4 gendered forms per lemma
    for i, lemma in enumerate(ADJS[("m", "s")]):
        stem = lemma[:-1]
        rows.append((lemma, lemma, "AQ0MS00", 5))
        rows.append((lemma, stem + "a", "AQ0FS00", 4))
        rows.append((lemma, stem + "os", "AQ0MP00", 3))
        rows.append((lemma, stem + "as", "AQ0FP00", 3))
    for sing, plur in zip(ADJ_COMMON["s"], ADJ_COMMON["p"]):
        rows.append((sing, sing, "AQ0CS00", 5))
        rows.append((sing, plur, "AQ0CP00", 3))
    # nouns: singular/plural pairs
    def plural_of(w):
        return w + "s" if w[-1] in "aeiouáéíóú" else w + "es"

    for (g, n), words in NOUNS.items():
        if n != "s":
            continue
        for w in words:
            p = plural_of(w)
            rows.append((w, w, NOUN_TAG[(g, "s")], 6))
            rows.append((w, p, NOUN_TAG[(g, "p")], 3))
    # verbs: lemma -> finite forms + infinitive
    for lemma, s3, p3 in VERB_LEMMAS:
        rows.append((lemma, s3, "VMIP3S0", 6))
        rows.append((lemma, p3, "VMIP3P0", 4))
        rows.append((lemma, lemma, "VMN0000", 2))
    # gender-paired human nouns (not in the corpus; exercise inflection)
    rows.append(("profesor", "profesor", "NCMS000", 5))
    rows.append(("profesor", "profesora", "NCFS000", 4))
    rows.append(("profesor", "profesores", "NCMP000", 2))
    rows.append(("profesor", "profesoras", "NCFP000", 2))
    with open(FIXTURES / "forms.tsv", "w", encoding="utf-8", newline="\n") as f:
        for lemma, surface, tag, freq in rows:
            f.write(f"{lemma}\t{surface}\t{tag}\t{freq}\n")


ABBREV_DOC = """El Sr. Ruiz habla. La Sra. Gómez escucha con atención.
El Dr. Soto llegó a las doce. Nadie preguntó por el Prof. Díaz.
La reunión terminó tarde. Todos volvieron a casa.
"""

SAMPLE_DOC = """La luna brilla sobre el mar. El viento canta entre los árboles.
Una sombra duerme en el jardín antiguo. Las estrellas arden lejos.
El corazón espera siempre. La noche calla, pero el río suspira.
Los sueños vuelan hacia la aurora. La palabra nace del silencio.
Un fuego arde bajo la nieve. El tiempo regresa sin memoria.
"""


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    sentences = build_corpus()
    write_corpus(sentences)
    write_lexicon()
    write_forms()
    (FIXTURES / "abbrev.txt").write_text(ABBREV_DOC, encoding="utf-8")
    (FIXTURES / "8kf-sample.txt").write_text(SAMPLE_DOC, encoding="utf-8")
    print(f"wrote {len(sentences)} sentences and lexicons to {FIXTURES}")


if __name__ == "__main__":
    main()
