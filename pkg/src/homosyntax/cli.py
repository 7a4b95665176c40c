"""Command-line entry point.

Exit codes are a stable contract:

    0   success
    1   invariant check failed
    2   missing or unreadable resource
    3   generation failed after retries
    64  bad flags or arguments

All randomness flows from the single ``--seed`` flag; with ``--count K``
sentence i uses seed ``seed + i``. Diagnostics go to stderr as one JSON
object per line, followed by a human-readable summary.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import check as check_mod
from . import corpus as corpus_mod
from . import model1, model2, model3
from .embeddings import build_associative_table, train_embeddings
from .errors import (
    ConfigError,
    FormatError,
    GenerationError,
    HomosyntaxError,
    IngestError,
    ResourceError,
)
from .generation import FunctionWordDictionary
from .markov import DecodePolicy, MAX_LEN, MIN_LEN, build_transition_matrix
from .pos import TaggerLexicon, read_tagged_tsv, tag_sentence, write_tagged_tsv
from .resources import load_resources
from .templates import TemplateStore

RESOURCES_ENV = "HOMOSYNTAX_RESOURCES"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_RESOURCE = 2
EXIT_GENERATION = 3
EXIT_USAGE = 64


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _diagnostic("usage", message)
        raise SystemExit(EXIT_USAGE)


def _diagnostic(kind: str, message: str) -> None:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    print(f"error: {message}", file=sys.stderr)


def build_parser() -> CliParser:
    parser = CliParser(prog="homosyntax")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", parents=[], help="segment and filter raw text")
    p.add_argument("--in", dest="indir", required=True)
    p.add_argument("--out", dest="out", required=True)
    p.add_argument("--min-words", type=int, default=4)
    p.add_argument("--max-words", type=int, default=29)

    p = sub.add_parser("tag", help="tag a sentence file with the bundled tagger")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--lexicon", required=True)
    p.add_argument("--out", dest="out", required=True)

    p = sub.add_parser("import-tagged", help="validate a pre-tagged TSV file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="out", default=None,
                   help="optional normalized copy")

    p = sub.add_parser("build-matrix", help="build the POS transition matrix")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="out", required=True)

    p = sub.add_parser("build-templates", help="extract canned-text templates")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="out", required=True)

    p = sub.add_parser("train-emb", help="train word embeddings")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="out", required=True)
    p.add_argument("--dims", type=int, default=64)
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--epochs", type=int, default=5)
    p.add_argument("--negatives", type=int, default=5)
    p.add_argument("--min-count", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("build-ta", help="build the associative table")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", dest="out", required=True)
    p.add_argument("--funcdict", default=None,
                   help="also write the function-word dictionary here")

    p = sub.add_parser("generate", help="generate sentences")
    p.add_argument("--model", type=int, required=True, choices=(1, 2, 3))
    p.add_argument("--query", required=True)
    p.add_argument("--len", dest="length", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--resources", default=None)
    p.add_argument("--policy", default="topk:3",
                   help="EGV decoding: argmax or topk:K (model 1)")
    p.add_argument("--neighbors", type=int, default=None,
                   help="neighbor lexicon size m (model 1); small corpora "
                        "need larger values")
    p.add_argument("--max-hops", type=int, default=None,
                   help="query relaxation budget (model 1)")
    p.add_argument("--cap-m", type=int, default=None,
                   help="candidate cap per slot (model 3)")
    p.add_argument("--invert-score", action="store_true",
                   help="use the prose-direction score (model 3)")
    p.add_argument("--trace", default=None,
                   help="write per-slot decision records as JSON lines")

    p = sub.add_parser("check", help="run the invariant suite over resources")
    p.add_argument("--resources", default=None)

    return parser


def _resource_dir(arg: str | None, parser: CliParser) -> Path:
    directory = arg or os.environ.get(RESOURCES_ENV)
    if not directory:
        raise ResourceError(
            f"no resource directory: pass --resources or set {RESOURCES_ENV}"
        )
    return Path(directory)


def _cmd_ingest(args) -> int:
    docs = corpus_mod.read_documents(args.indir)
    sentences = []
    for doc in docs:
        for s in corpus_mod.segment_sentences(doc):
            sentences.append(corpus_mod.filter_tokens(s))
    kept = corpus_mod.length_filter(sentences, args.min_words, args.max_words)
    corpus_mod.write_sentences(kept, args.out)
    print(corpus_mod.format_stats(corpus_mod.compute_stats(kept)), end="")
    return EXIT_OK


def _cmd_tag(args) -> int:
    lex = TaggerLexicon.load(args.lexicon)
    sentences = corpus_mod.read_sentences(args.infile)
    tagged = [tag_sentence(s, lex) for s in sentences]
    write_tagged_tsv(tagged, args.out)
    print(f"tagged {len(tagged)} sentences")
    return EXIT_OK


def _cmd_import_tagged(args) -> int:
    tagged = read_tagged_tsv(args.infile)
    if args.out:
        write_tagged_tsv(tagged, args.out)
    tokens = sum(len(ts.tokens) for ts in tagged)
    print(f"imported {len(tagged)} sentences, {tokens} tokens")
    return EXIT_OK


def _cmd_build_matrix(args) -> int:
    corpus = read_tagged_tsv(args.infile)
    matrix = build_transition_matrix(corpus)
    matrix.save(args.out)
    print(f"matrix over {len(matrix.states)} states")
    return EXIT_OK


def _cmd_build_templates(args) -> int:
    corpus = read_tagged_tsv(args.infile)
    store = TemplateStore.from_sentences(corpus)
    store.save(args.out)
    print(f"stored {len(store)} templates")
    return EXIT_OK


def _cmd_train_emb(args) -> int:
    sentences = corpus_mod.read_sentences(args.infile)
    store = train_embeddings(
        sentences,
        dims=args.dims,
        window=args.window,
        epochs=args.epochs,
        negatives=args.negatives,
        seed=args.seed,
        min_count=args.min_count,
    )
    store.save(args.out)
    print(f"trained {len(store)} x {store.dims} vectors")
    return EXIT_OK


def _cmd_build_ta(args) -> int:
    corpus = read_tagged_tsv(args.infile)
    ta = build_associative_table(corpus)
    ta.save(args.out)
    print(f"associative table with {len(ta.tags())} tags")
    if args.funcdict:
        fdict = FunctionWordDictionary.from_sentences(corpus)
        fdict.save(args.funcdict)
        print(f"function-word dictionary with {len(fdict.table)} tags")
    return EXIT_OK


def _cmd_generate(args, parser: CliParser) -> int:
    if not (MIN_LEN <= args.length <= MAX_LEN):
        parser.error(f"--len must be in [{MIN_LEN}, {MAX_LEN}]")
    if args.count < 1:
        parser.error("--count must be >= 1")
    try:
        policy = DecodePolicy.parse(args.policy)
    except ConfigError as e:
        parser.error(str(e))
    res = load_resources(
        _resource_dir(args.resources, parser), policy=policy, cap_m=args.cap_m
    )
    if args.neighbors is not None:
        if args.neighbors < 1:
            parser.error("--neighbors must be >= 1")
        res.neighbors_m = args.neighbors
    if args.max_hops is not None:
        if args.max_hops < 0:
            parser.error("--max-hops must be >= 0")
        res.max_hops = args.max_hops

    generate = {
        1: lambda seed: model1.generate_model1(args.query, args.length, res, seed),
        2: lambda seed: model2.generate_model2(args.query, args.length, res, seed),
        3: lambda seed: model3.generate_model3(
            args.query, args.length, res, seed, invert=args.invert_score
        ),
    }[args.model]

    traces = []
    for i in range(args.count):
        sentence = generate(args.seed + i)
        print(sentence.text)
        if args.trace:
            for record in sentence.trace:
                traces.append({"sentence": i, **record})
    if args.trace:
        with open(args.trace, "w", encoding="utf-8", newline="\n") as f:
            for record in traces:
                f.write(json.dumps(record, ensure_ascii=False) + "\n")
    return EXIT_OK


def _cmd_check(args, parser: CliParser) -> int:
    results = check_mod.run_check(_resource_dir(args.resources, parser))
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name}: {r.detail}")
        if not r.passed:
            failed += 1
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "ingest":
            return _cmd_ingest(args)
        if args.command == "tag":
            return _cmd_tag(args)
        if args.command == "import-tagged":
            return _cmd_import_tagged(args)
        if args.command == "build-matrix":
            return _cmd_build_matrix(args)
        if args.command == "build-templates":
            return _cmd_build_templates(args)
        if args.command == "train-emb":
            return _cmd_train_emb(args)
        if args.command == "build-ta":
            return _cmd_build_ta(args)
        if args.command == "generate":
            return _cmd_generate(args, parser)
        if args.command == "check":
            return _cmd_check(args, parser)
        parser.error(f"unknown command {args.command!r}")
    except (ResourceError, FileNotFoundError) as e:
        _diagnostic("resource", str(e))
        return EXIT_RESOURCE
    except GenerationError as e:
        _diagnostic("generation", str(e))
        return EXIT_GENERATION
    except ConfigError as e:
        _diagnostic("usage", str(e))
        return EXIT_USAGE
    except (IngestError, FormatError, HomosyntaxError) as e:
        _diagnostic(type(e).__name__, str(e))
        return EXIT_GENERATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
