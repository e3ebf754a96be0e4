"""Command-line entry point: ``circwords <command> ...``.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error.
``verify oracle`` exits 0 only when the oracle and the constructions agree.
"""
from __future__ import annotations

import argparse
import json
import sys

from .abelian import word_report
from .christoffel import Slope, christoffel, classify_binary
from .geometry import PlaneSpec, path2d, path3d
from .infinite import BitSource, infinite_report
from .oracle import verify_theorems
from .svg import svg_necklace, svg_path
from .ternary import Label, TwistSpec, classify, enumerate_B3, enumerate_M3, fraenkel, phi, twisted
from .tree import build_tree, export_dot, export_json
from .words import CircularWord, Word, primitive_decomposition

DEFAULT_SEED = 20240101


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    p.add_argument("--out", help="write the result to this file instead of stdout")
    p.add_argument("--threads", type=int, default=1, help="worker processes (oracle only)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the 'random' bit source")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="circwords", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="construct words").add_subparsers(dest="what", required=True)
    g = gen.add_parser("christoffel", parents=[common])
    g.add_argument("--zeros", type=int, required=True)
    g.add_argument("--ones", type=int, required=True)
    g.add_argument("--power", type=int, default=1)
    g = gen.add_parser("phi", parents=[common], help="phi-image of a binary word")
    g.add_argument("word")
    g = gen.add_parser("fraenkel", parents=[common])
    g.add_argument("--n", type=int, default=3)
    g = gen.add_parser("twisted", parents=[common])
    g.add_argument("--zeros", type=int, required=True)
    g.add_argument("--ones", type=int, required=True)
    g.add_argument("--power", type=int, required=True)
    g.add_argument("--borders", required=True, help="comma-separated border indices, e.g. 1,2")
    g.add_argument("--phi", action="store_true", help="print the phi-image instead")

    chk = sub.add_parser("check", help="analyse a word").add_subparsers(dest="what", required=True)
    for name in ("classify", "report"):
        c = chk.add_parser(name, parents=[common])
        c.add_argument("word")
        c.add_argument("--alphabet", type=int)

    en = sub.add_parser("enumerate", parents=[common], help="constructive enumeration")
    en.add_argument("family", choices=["b3", "m3"])
    en.add_argument("--max-len", type=int, required=True)
    en.add_argument("--primitive", action="store_true")

    ver = sub.add_parser("verify").add_subparsers(dest="what", required=True)
    v = ver.add_parser("oracle", parents=[common])
    v.add_argument("--alphabet", type=int, choices=[2, 3], default=3)
    v.add_argument("--max-len", type=int, required=True)

    t = sub.add_parser("tree", parents=[common], help="Calkin-Wilf tree of balanced words")
    t.add_argument("--depth", type=int, required=True)
    t.add_argument("--format", choices=["dot", "json"], default="dot")

    viz = sub.add_parser("viz").add_subparsers(dest="what", required=True)
    v = viz.add_parser("path2d", parents=[common])
    v.add_argument("--zeros", type=int, required=True)
    v.add_argument("--ones", type=int, required=True)
    v.add_argument("--power", type=int, default=1)
    v = viz.add_parser("path3d", parents=[common])
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--n", type=int, required=True)
    v = viz.add_parser("necklace", parents=[common])
    v.add_argument("word")

    inf = sub.add_parser("infinite", parents=[common], help="windows of an aperiodic 3-bounded word")
    inf.add_argument("--m", type=int, required=True)
    inf.add_argument("--n", type=int, required=True)
    inf.add_argument("--source", default="fibonacci", help="fibonacci | bits:STRING | seed:U64 | random")
    inf.add_argument("--length", type=int, required=True)
    inf.add_argument("--check-n-max", type=int, default=50)
    inf.add_argument("--no-segment", action="store_true", help="omit the segment from JSON output")
    return parser


def _parse_word(text: str, alphabet=None) -> Word:
    return Word(text, alphabet)


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, doc):
    _emit(args, json.dumps(doc, ensure_ascii=False))


def _classify_binary_json(cw: CircularWord) -> dict:
    hit = classify_binary(cw)
    if hit is None:
        return {"word": str(cw), "alphabet": 2, "label": "NOT_BALANCED"}
    s, p = hit
    return {"word": str(cw), "alphabet": 2, "label": "CHRISTOFFEL_POWER", "slope": s.as_list(), "power": p}


def _cmd_generate(args) -> int:
    if args.what == "christoffel":
        w = christoffel(Slope(args.zeros, args.ones), args.power)
    elif args.what == "phi":
        w = phi(_parse_word(args.word, 2))
    elif args.what == "fraenkel":
        w = fraenkel(args.n)
    else:
        borders = frozenset(int(b) for b in args.borders.split(",") if b.strip())
        w = twisted(TwistSpec(Slope(args.zeros, args.ones), args.power, borders))
        if args.phi:
            w = phi(w)
    if args.json:
        _emit_json(args, {"word": str(w), "alphabet": w.alphabet.size})
    else:
        _emit(args, str(w))
    return 0


def _cmd_check(args) -> int:
    w = _parse_word(args.word, args.alphabet)
    cw = CircularWord.of(w)
    if args.what == "report":
        doc = word_report(cw)
        doc["alphabet"] = cw.alphabet.size
        doc["primitive"] = primitive_decomposition(cw.canonical).exponent == 1
    elif cw.alphabet.size == 2:
        doc = _classify_binary_json(cw)
    else:
        doc = classify(cw).to_json()
    if args.json:
        _emit_json(args, doc)
    else:
        _emit(args, " ".join(f"{k}={json.dumps(v, ensure_ascii=False)}" for k, v in doc.items()))
    return 0


def _cmd_enumerate(args) -> int:
    fn = enumerate_B3 if args.family == "b3" else enumerate_M3
    classes = sorted(fn(args.max_len, primitive=args.primitive), key=lambda c: (c.length, c))
    if args.json:
        _emit_json(args, {"family": args.family, "maxLen": args.max_len, "primitive": args.primitive,
                          "count": len(classes), "words": [str(c) for c in classes]})
    else:
        _emit(args, "\n".join(str(c) for c in classes))
    return 0


def _cmd_verify(args) -> int:
    report = verify_theorems(args.max_len, alphabet=args.alphabet, threads=args.threads)
    if args.json:
        _emit_json(args, report.to_json())
    else:
        lines = [f"L={row['length']:>2} necklaces={row['necklaces']:>7} balanced={row['balanced']:>4} "
                 f"bounded3={row['bounded3']:>4} {row['seconds']:.2f}s"
                 for row in report.to_json()["perLength"]]
        lines += [json.dumps(m) for m in report.mismatches]
        lines.append("OK" if report.ok else f"MISMATCHES: {len(report.mismatches)}")
        _emit(args, "\n".join(lines))
    return 0 if report.ok else 1


def _cmd_tree(args) -> int:
    tree = build_tree(args.depth)
    _emit(args, export_json(tree) if args.format == "json" else export_dot(tree))
    return 0


def _cmd_viz(args) -> int:
    if args.what == "path2d":
        s = Slope(args.zeros, args.ones)
        svg = svg_path(path2d(s, args.power), slope=(s.zeros, s.ones))
    elif args.what == "path3d":
        plane = PlaneSpec(args.m, args.n)
        path, _ = path3d(plane)
        svg = svg_path(path, slope=(plane.m, plane.n))
    else:
        svg = svg_necklace(CircularWord.of(args.word))
    _emit(args, svg)
    return 0


def _cmd_infinite(args) -> int:
    source = BitSource.parse(args.source, default_seed=args.seed)
    report = infinite_report(args.m, args.n, source, args.length, args.check_n_max,
                             include_segment=not args.no_segment)
    if args.json:
        _emit_json(args, report)
    else:
        lines = [f"source={report['source']} m={args.m} n={args.n} length={args.length}",
                 "complexityByN=" + " ".join(map(str, report["complexityByN"])),
                 f"allAtMost3={report['allAtMost3']} allExactly3={report['allExactly3']}"]
        _emit(args, "\n".join(lines))
    return 0 if report["allAtMost3"] else 1


COMMANDS = {
    "generate": _cmd_generate,
    "check": _cmd_check,
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "tree": _cmd_tree,
    "viz": _cmd_viz,
    "infinite": _cmd_infinite,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
