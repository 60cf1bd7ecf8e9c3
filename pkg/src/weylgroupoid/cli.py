"""Command-line front end: ``weylgroupoid <subcommand> --graph G ...``.

Exit codes: 0 success, 1 validation or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bruhat import bruhat_poset, export_dot
from .cartan import BUILTIN_NAMES, SemiCartanGraph, builtin, graph_to_document, parse_cartan_graph
from .errors import UnknownName, WeylGroupoidError
from .groupoid import WeylGroupoid, Word, format_word, parse_word
from .nilhecke import NilHeckeAlgebra
from .psi import psi_expand
from .roots import check_grs_axioms, format_root, generate_real_roots
from .verify import run_all


class UsageError(Exception):
    pass


def load_graph(spec: str) -> SemiCartanGraph:
    """Resolve ``--graph``: ``builtin:NAME``, then an existing file, then a built-in name."""
    if spec.startswith("builtin:"):
        return builtin(spec[len("builtin:"):])
    path = Path(spec)
    if path.is_file():
        return parse_cartan_graph(path.read_text(encoding="utf-8"), name=path.stem)
    if spec in BUILTIN_NAMES:
        return builtin(spec)
    raise UsageError(f"--graph {spec!r} is neither a file nor a built-in ({', '.join(BUILTIN_NAMES)})")


def _groupoid(args) -> WeylGroupoid:
    return WeylGroupoid(generate_real_roots(load_graph(args.graph)))


def _word(args, W: WeylGroupoid) -> Word:
    start = args.start or W.graph.objects[0]
    if start not in W.graph.objects:
        raise UsageError(f"unknown object {start!r}")
    try:
        letters = parse_word(args.word or "")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if any(not 1 <= i <= W.graph.rank for i in letters):
        raise UsageError(f"generator indices must lie in 1..{W.graph.rank}")
    return Word(start, letters)


def _emit(args, lines: list[str], payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# -- subcommands --------------------------------------------------------------

def cmd_builtins(args) -> int:
    _emit(args, list(BUILTIN_NAMES), list(BUILTIN_NAMES))
    return 0


def cmd_validate(args) -> int:
    g = load_graph(args.graph)
    rs = generate_real_roots(g)
    problems = check_grs_axioms(rs)
    if problems:
        _emit(args, [f"FAIL {p}" for p in problems],
              {"valid": False, "violations": [p._asdict() for p in problems]})
        return 1
    counts = {x: len(rs.positive(x)) for x in g.objects}
    line = (f"OK rank {g.rank}, {len(g.objects)} objects, "
            f"positive roots per object: {', '.join(f'{x}={n}' for x, n in counts.items())}")
    _emit(args, [line], {"valid": True, "graph": graph_to_document(g), "positive_roots": counts})
    return 0


def cmd_roots(args) -> int:
    W = _groupoid(args)
    lines, payload = [], {}
    for x in W.graph.objects:
        pos = W.rs.positive(x)
        payload[x] = [list(r) for r in pos]
        lines.extend(f"{x}: {format_root(r)}" for r in pos)
    _emit(args, lines, payload)
    return 0


def _hom_filter(args, W: WeylGroupoid):
    for name in (args.source, args.target):
        if name is not None and name not in W.graph.objects:
            raise UsageError(f"unknown object {name!r}")
    return [m for m in W.elements
            if (args.source is None or m.source == args.source)
            and (args.target is None or m.target == args.target)]


def cmd_elements(args) -> int:
    W = _groupoid(args)
    lines, payload = [], []
    for m in _hom_filter(args, W):
        word = format_word(W.first_reduced_word(m).letters)
        lines.append(f"{m.source} -> {m.target} : {W.length(m)} : {word}")
        payload.append({"source": m.source, "target": m.target, "length": W.length(m),
                        "word": list(W.first_reduced_word(m).letters),
                        "matrix": [list(r) for r in m.matrix]})
    _emit(args, lines, payload)
    return 0


def cmd_reduced(args) -> int:
    W = _groupoid(args)
    if args.word is not None:
        targets = [W.evaluate(_word(args, W))]
    else:
        targets = _hom_filter(args, W)
    lines, payload = [], []
    for m in targets:
        words = W.reduced_words(m)
        for w in words:
            lines.append(f"{m.source} -> {m.target} : {format_word(w.letters)}")
        payload.append({"source": m.source, "target": m.target, "words": [list(w.letters) for w in words]})
    _emit(args, lines, payload)
    return 0


def _element_payload(W: WeylGroupoid, el, poly: bool):
    out = []
    for m, c in el.sorted_terms():
        out.append({"source": m.source, "target": m.target, "length": W.length(m),
                    "word": list(W.first_reduced_word(m).letters),
                    "coefficient": c.format(explicit=True) if poly else c})
    return out


def cmd_nilhecke(args) -> int:
    W = _groupoid(args)
    w = _word(args, W)
    el = NilHeckeAlgebra(W).word_product(w)
    _emit(args, el.format().splitlines(), _element_payload(W, el, poly=False))
    return 0


def cmd_psi(args) -> int:
    W = _groupoid(args)
    el = psi_expand(W, _word(args, W))
    lines = [f"{c.format(explicit=True)} * T[{format_word(W.first_reduced_word(m).letters)}]"
             for m, c in el.sorted_terms()]
    _emit(args, lines, _element_payload(W, el, poly=True))
    return 0


def cmd_bruhat(args) -> int:
    W = _groupoid(args)
    for name in (args.source, args.target):
        if name is None:
            raise UsageError("bruhat needs --from and --to")
        if name not in W.graph.objects:
            raise UsageError(f"unknown object {name!r}")
    p = bruhat_poset(W, args.source, args.target)
    if args.dot:
        Path(args.dot).write_text(export_dot(p), encoding="utf-8")
    strict = sorted((p.labels[u], p.labels[w]) for u, w in p.relation if u != w)
    covers = sorted((p.labels[u], p.labels[w]) for u, w in p.hasse)
    lines = [f"Hom({p.source},{p.target}): {len(p.elements)} elements, "
             f"{len(p.relation)} comparable pairs, {len(covers)} covers"]
    lines += [f"element {p.labels[m]} : {p.lengths[m]}" for m in p.elements]
    lines += [f"cover {u} < {w}" for u, w in covers]
    payload = {"source": p.source, "target": p.target,
               "elements": [{"label": p.labels[m], "length": p.lengths[m]} for m in p.elements],
               "less": [list(pair) for pair in strict], "covers": [list(pair) for pair in covers]}
    _emit(args, lines, payload)
    return 0


def cmd_verify(args) -> int:
    specs = [args.graph] if args.graph else [f"builtin:{n}" for n in BUILTIN_NAMES]
    lines, payload, failed = [], [], None
    for spec in specs:
        g = load_graph(spec)
        label = g.name or spec
        W = WeylGroupoid(generate_real_roots(g))
        for r in run_all(W):
            lines.append(f"[{label}] {r.line()}")
            payload.append({"graph": label, **r._asdict()})
            if not r.passed and failed is None:
                failed = f"[{label}] {r.suite}/{r.name}"
    if failed:
        lines.append(f"first failure: {failed}")
    _emit(args, lines, {"passed": failed is None, "checks": payload})
    return 1 if failed else 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", required=True, help="graph file or built-in name (builtin:NAME forces a built-in)")

    word = argparse.ArgumentParser(add_help=False)
    word.add_argument("--start", help="object the word starts at (target of its first letter)")
    word.add_argument("--word", help="comma-separated 1-based generators, e.g. 1,2,1")

    hom = argparse.ArgumentParser(add_help=False)
    hom.add_argument("--from", dest="source", help="source object")
    hom.add_argument("--to", dest="target", help="target object")

    parser = argparse.ArgumentParser(prog="weylgroupoid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("builtins", parents=[common], help="list built-in graphs").set_defaults(func=cmd_builtins)
    sub.add_parser("validate", parents=[common, graph], help="validate a graph and its root system") \
        .set_defaults(func=cmd_validate)
    sub.add_parser("roots", parents=[common, graph], help="positive roots per object").set_defaults(func=cmd_roots)
    sub.add_parser("elements", parents=[common, graph, hom], help="all morphisms with lengths") \
        .set_defaults(func=cmd_elements)
    sub.add_parser("reduced", parents=[common, graph, word, hom], help="reduced words") \
        .set_defaults(func=cmd_reduced)
    sub.add_parser("nilhecke", parents=[common, graph, word], help="product of generators along a word") \
        .set_defaults(func=cmd_nilhecke)
    sub.add_parser("psi", parents=[common, graph, word], help="expand the h-product of a reduced word") \
        .set_defaults(func=cmd_psi)
    p = sub.add_parser("bruhat", parents=[common, graph, hom], help="Bruhat order on a hom-set")
    p.add_argument("--dot", help="write the Hasse diagram in DOT format to this path")
    p.set_defaults(func=cmd_bruhat)
    v = sub.add_parser("verify", parents=[common], help="run every invariant suite")
    v.add_argument("--graph", help="graph file or built-in name (default: all built-ins)")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnknownName) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WeylGroupoidError as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
