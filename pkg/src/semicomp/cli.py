"""Command-line front end.

Exit codes: 0 affirmative verdict, 1 negative verdict, 2 budget exhausted,
64 usage error, 65 malformed input file.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import __version__
from .automata import transition_semigroup
from .errors import ArgError, AssocError, RangeError, SemigroupError, SizeExceeded
from .formats import FormatError, dump_sgp, load_fn, load_fsa, load_gens, load_sgp
from .hierarchy import direct_product, influence_relation, wreath_product
from .morphisms import (DEFAULT_MAX_NODES, UNKNOWN, Morphism, SearchBudget, Verdict,
                        check_morphism, divides, find_embeddings, find_interpretation)
from .table import right_regular_representation
from .transformations import closure
from .universality import is_universal

EXIT_OK = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_DATAERR = 65

_VERDICT_EXIT = {Verdict.YES: EXIT_OK, Verdict.NO: EXIT_NO, Verdict.UNKNOWN: EXIT_UNKNOWN}


class _InputError(Exception):
    pass


@dataclass
class RunReport:
    """Machine-readable record of one command.

    The JSON form has the keys ``command``, ``inputs``, ``verdict``,
    ``result``, ``nodes`` and ``budget`` (plus ``elapsed_s`` when timing
    is requested), serialized with sorted keys.
    """

    command: str
    inputs: dict
    verdict: str
    result: dict = field(default_factory=dict)
    nodes: int = 0
    budget: Optional[int] = None
    elapsed: Optional[float] = None

    def to_dict(self, timing=False):
        d = {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "result": self.result,
            "nodes": self.nodes,
            "budget": self.budget,
        }
        if timing and self.elapsed is not None:
            d["elapsed_s"] = round(self.elapsed, 6)
        return d

    def to_json(self, timing=False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _table(path):
    try:
        return load_sgp(path)
    except (FormatError, RangeError, AssocError, ArgError) as exc:
        raise _InputError(f"{path}: {exc}") from None


def _component(path):
    """A closure from a ``.gens`` file, or the representation of a ``.sgp`` table."""
    if str(path).endswith(".gens"):
        try:
            gens = load_gens(path)
        except (FormatError, ArgError) as exc:
            raise _InputError(f"{path}: {exc}") from None
        return closure(gens)
    return closure(right_regular_representation(_table(path))[0])


def _fmt_map(m: Morphism):
    return ", ".join(m.describe())


def _morphism_json(m: Morphism):
    return {"map": list(m.map), "labels": m.describe()}


def _write(out, text):
    Path(out).write_text(text)


def cmd_validate(args, budget):
    try:
        t = load_sgp(args.path, method=args.method)
    except RangeError as exc:
        rep = RunReport("validate", {"path": args.path}, "no",
                        {"error": "range", "row": exc.row, "col": exc.col, "value": exc.value})
        return rep, f"out of range: {exc}", EXIT_NO
    except AssocError as exc:
        x, y, z = exc.triple
        rep = RunReport("validate", {"path": args.path}, "no",
                        {"error": "associativity", "witness": [x, y, z]})
        return rep, f"not associative: witness (x, y, z) = ({x}, {y}, {z})", EXIT_NO
    except (FormatError, ArgError) as exc:
        raise _InputError(f"{args.path}: {exc}") from None
    rep = RunReport("validate", {"path": args.path}, "yes",
                    {"order": t.order, "labels": list(t.labels)})
    return rep, f"associative, order {t.order}", EXIT_OK


def cmd_closure(args, budget):
    try:
        gens = load_gens(args.path)
    except (FormatError, ArgError) as exc:
        raise _InputError(f"{args.path}: {exc}") from None
    try:
        res = closure(gens, max_size=args.max_size, allow_large=args.allow_large)
    except SizeExceeded as exc:
        rep = RunReport("closure", {"path": args.path}, "no", {"error": str(exc)})
        return rep, f"size exceeded: {exc}", EXIT_NO
    result = {"order": res.order, "gen_indices": list(res.gen_indices),
              "duplicate_generators": gens.has_duplicates}
    text = [f"order {res.order}"]
    if args.out:
        _write(args.out, dump_sgp(res.table, f"closure of {Path(args.path).name}"))
        result["out"] = args.out
    if args.table:
        text.append(res.table.pretty())
    return RunReport("closure", {"path": args.path}, "yes", result), "\n".join(text), EXIT_OK


def cmd_embed(args, budget):
    S, T = _table(args.src), _table(args.dst)
    found = find_embeddings(S, T, limit=args.limit, budget=budget, workers=args.workers)
    inputs = {"src": args.src, "dst": args.dst, "limit": args.limit}
    if found is UNKNOWN:
        return RunReport("embed", inputs, "unknown"), "unknown: budget exhausted", EXIT_UNKNOWN
    k = len(found)
    lines = [f"{k} embedding{'' if k == 1 else 's'}"] + ["  " + _fmt_map(m) for m in found]
    rep = RunReport("embed", inputs, "yes" if found else "no",
                    {"count": k, "embeddings": [_morphism_json(m) for m in found]})
    return rep, "\n".join(lines), EXIT_OK if found else EXIT_NO


def _parse_map(spec, S, T):
    def resolve(tok, t):
        if tok in t.labels:
            return t.labels.index(tok)
        try:
            return int(tok)
        except ValueError:
            raise ArgError(f"unknown element {tok!r}") from None

    phi = {}
    for item in spec.replace(",", " ").split():
        if ":" not in item:
            raise ArgError(f"map entry {item!r} is not of the form i:j")
        a, b = item.split(":", 1)
        phi[resolve(a, S)] = resolve(b, T)
    if sorted(phi) != list(range(S.order)):
        raise ArgError(f"map must give an image for each of the {S.order} source elements")
    return [phi[i] for i in range(S.order)]


def cmd_morph_check(args, budget):
    S, T = _table(args.src), _table(args.dst)
    m = Morphism(S, T, _parse_map(args.map, S, T))
    try:
        cls = check_morphism(m)
    except RangeError as exc:
        raise ArgError(f"map entry out of range: {exc}") from None
    kind = ("isomorphism" if cls.is_isomorphism else "embedding" if cls.is_embedding
            else "morphism" if cls.is_morphism else "not a morphism")
    result = {"is_morphism": cls.is_morphism, "injective": cls.injective,
              "surjective": cls.surjective, "kind": kind,
              "violation": list(cls.violation) if cls.violation else None}
    inputs = {"src": args.src, "dst": args.dst, "map": list(m.map)}
    if cls.is_morphism:
        text = f"{kind}: injective={cls.injective}, surjective={cls.surjective}"
    else:
        x, y = cls.violation
        text = (f"not a morphism: violation at ({S.labels[x]}, {S.labels[y]});"
                f" injective={cls.injective}, surjective={cls.surjective}")
    rep = RunReport("morph-check", inputs, "yes" if cls.is_morphism else "no", result)
    return rep, text, EXIT_OK if cls.is_morphism else EXIT_NO


def _division_json(res, T):
    if res.verdict is not Verdict.YES:
        return {}
    return {"subsemigroup": list(res.subsemigroup),
            "subsemigroup_labels": [T.labels[e] for e in res.subsemigroup],
            "map": list(res.morphism.map)}


def cmd_divides(args, budget):
    S, T = _table(args.src), _table(args.dst)
    res = divides(S, T, budget=budget)
    rep = RunReport("divides", {"src": args.src, "dst": args.dst}, str(res.verdict),
                    _division_json(res, T))
    text = {Verdict.YES: "divides", Verdict.NO: "does not divide",
            Verdict.UNKNOWN: "unknown: budget exhausted"}[res.verdict]
    if res.verdict is Verdict.YES:
        text += "\n  subsemigroup: " + " ".join(T.labels[e] for e in res.subsemigroup)
        text += "\n  onto: " + _fmt_map(res.morphism)
    return rep, text, _VERDICT_EXIT[res.verdict]


def cmd_universal(args, budget):
    model = _table(args.path)
    v = is_universal(model, args.n, mode=args.mode, budget=budget,
                     allow_large=args.allow_large, workers=args.workers)
    result = {}
    if v.verdict is Verdict.YES:
        if isinstance(v.witness, Morphism):
            result = {"embedding": _morphism_json(v.witness)}
        else:
            result = _division_json(v.witness, model)
    rep = RunReport("universal", {"path": args.path, "n": args.n, "mode": args.mode},
                    str(v.verdict), result)
    return rep, f"T_{args.n} ({args.mode}): {v.verdict}", _VERDICT_EXIT[v.verdict]


def cmd_interpret(args, budget):
    try:
        g = load_fn(args.fn)
    except FormatError as exc:
        raise _InputError(f"{args.fn}: {exc}") from None
    S = _table(args.sgp)
    res = find_interpretation(g, S, budget=budget)
    result = {}
    text = {Verdict.NO: "no interpretation", Verdict.UNKNOWN: "unknown: budget exhausted"}.get(
        res.verdict, "interpretation found")
    if res.verdict is Verdict.YES:
        result = {"encode": list(res.encode), "decode": list(res.decode)}
        text += ("\n  encode: " + ", ".join(f"{a}->{S.labels[s]}" for a, s in enumerate(res.encode))
                 + "\n  decode: " + ", ".join(f"{S.labels[s]}->{a}" for s, a in enumerate(res.decode)))
    rep = RunReport("interpret", {"fn": args.fn, "sgp": args.sgp}, str(res.verdict), result)
    return rep, text, _VERDICT_EXIT[res.verdict]


def cmd_automaton(args, budget):
    try:
        a = load_fsa(args.path)
    except (FormatError, ArgError) as exc:
        raise _InputError(f"{args.path}: {exc}") from None
    res, letters = transition_semigroup(a)
    names = a.letter_labels or tuple(str(k) for k in range(a.letter_count))
    result = {"order": res.order, "letter_map": {names[k]: e for k, e in enumerate(letters)}}
    lines = [f"order {res.order}"]
    lines += [f"  {names[k]} -> {res.table.labels[e]}" for k, e in enumerate(letters)]
    if args.out:
        _write(args.out, dump_sgp(res.table, f"transition semigroup of {Path(args.path).name}"))
        result["out"] = args.out
    return RunReport("automaton", {"path": args.path}, "yes", result), "\n".join(lines), EXIT_OK


def cmd_wreath(args, budget):
    bottom, top = _component(args.bottom), _component(args.top)
    try:
        res = wreath_product(bottom, top, allow_large=args.allow_large)
    except SizeExceeded as exc:
        rep = RunReport("wreath", {"bottom": args.bottom, "top": args.top}, "no", {"error": str(exc)})
        return rep, f"size exceeded: {exc}", EXIT_NO
    result = {"order": res.order, "degree": res.degree}
    if args.out:
        _write(args.out, dump_sgp(res.table, "wreath product"))
        result["out"] = args.out
    rep = RunReport("wreath", {"bottom": args.bottom, "top": args.top}, "yes", result)
    return rep, f"order {res.order} on {res.degree} points", EXIT_OK


def cmd_product(args, budget):
    S, T = _table(args.a), _table(args.b)
    try:
        P = direct_product(S, T)
    except SizeExceeded as exc:
        rep = RunReport("product", {"a": args.a, "b": args.b}, "no", {"error": str(exc)})
        return rep, f"size exceeded: {exc}", EXIT_NO
    result = {"order": P.order}
    if args.out:
        _write(args.out, dump_sgp(P, "direct product"))
        result["out"] = args.out
    return RunReport("product", {"a": args.a, "b": args.b}, "yes", result), f"order {P.order}", EXIT_OK


def cmd_influence(args, budget):
    t = _table(args.path)
    rel = influence_relation(t)
    L = t.labels
    lines = []
    for y in range(t.order):
        moved = [L[x] for x in range(t.order) if rel.influences[y, x]]
        lines.append(f"{L[y]} influences: {' '.join(moved) if moved else '-'}")
    lines.append("one-way (weak <- strong): "
                 + (", ".join(f"{L[x]} <- {L[y]}" for x, y in rel.one_way) or "none"))
    result = {"influences": rel.influences.astype(int).tolist(),
              "one_way": [list(p) for p in rel.one_way]}
    return RunReport("influence", {"path": args.path}, "yes", result), "\n".join(lines), EXIT_OK


def _emit(args, rep, text):
    if args.out:
        _write(args.out, text + "\n")
        rep.result["out"] = args.out
        return f"wrote {args.out}"
    return text


def cmd_export_lut(args, budget):
    t = _table(args.path)
    L = t.labels
    text = "\n".join(f"{L[x]} {L[y]} -> {L[v]}" for x, row in enumerate(t.rows)
                     for y, v in enumerate(row))
    rep = RunReport("export-lut", {"path": args.path}, "yes", {"entries": t.order ** 2})
    return rep, _emit(args, rep, text), EXIT_OK


def _dot_quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def cmd_export_dot(args, budget):
    if str(args.path).endswith(".gens"):
        res = _component(args.path)
        t, edge_gens = res.table, list(dict.fromkeys(res.gen_indices))
    else:
        t = _table(args.path)
        edge_gens = list(range(t.order))
    L = t.labels
    lines = ["digraph cayley {"]
    lines += [f"  {x} [label={_dot_quote(L[x])}];" for x in range(t.order)]
    for x in range(t.order):
        for g in edge_gens:
            lines.append(f"  {x} -> {t.rows[x][g]} [label={_dot_quote(L[g])}];")
    lines.append("}")
    rep = RunReport("export-dot", {"path": args.path}, "yes",
                    {"nodes": t.order, "edges": t.order * len(edge_gens)})
    return rep, _emit(args, rep, "\n".join(lines)), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--budget", type=int, default=DEFAULT_MAX_NODES, metavar="N",
                        help="search node budget (default %(default)s)")
    common.add_argument("--workers", type=int, default=1, metavar="K",
                        help="worker processes for searches; output does not depend on K")
    common.add_argument("--timing", action="store_true", help="report elapsed time")

    p = _Parser(prog="semicomp", description="Finite semigroup workbench.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", cmd_validate, "check a .sgp table")
    sp.add_argument("path")
    sp.add_argument("--method", choices=("naive", "light"), default="naive")

    sp = add("closure", cmd_closure, "close a .gens generator set")
    sp.add_argument("path")
    sp.add_argument("--out", help="write the table as .sgp")
    sp.add_argument("--max-size", type=int)
    sp.add_argument("--allow-large", action="store_true")
    sp.add_argument("--table", action="store_true", help="print the table")

    sp = add("embed", cmd_embed, "find embeddings of one table into another")
    sp.add_argument("src")
    sp.add_argument("dst")
    sp.add_argument("--limit", type=int)

    sp = add("morph-check", cmd_morph_check, "classify an explicit map i:j ...")
    sp.add_argument("src")
    sp.add_argument("dst")
    sp.add_argument("map", help="e.g. '0:1 1:2' (indices or labels)")

    sp = add("divides", cmd_divides, "does SRC divide DST?")
    sp.add_argument("src")
    sp.add_argument("dst")

    sp = add("universal", cmd_universal, "does the table implement T_n?")
    sp.add_argument("path")
    sp.add_argument("n", type=int)
    sp.add_argument("--mode", choices=("embed", "divide"), default="embed")
    sp.add_argument("--allow-large", action="store_true")

    sp = add("interpret", cmd_interpret, "search an output encoding for a .fn operation")
    sp.add_argument("fn")
    sp.add_argument("sgp")

    sp = add("automaton", cmd_automaton, "transition semigroup of a .fsa automaton")
    sp.add_argument("path")
    sp.add_argument("--out")

    sp = add("wreath", cmd_wreath, "wreath product of two components (.sgp or .gens)")
    sp.add_argument("bottom")
    sp.add_argument("top")
    sp.add_argument("--out")
    sp.add_argument("--allow-large", action="store_true")

    sp = add("product", cmd_product, "direct product of two tables")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--out")

    sp = add("influence", cmd_influence, "one-way influence between elements")
    sp.add_argument("path")

    sp = add("export-lut", cmd_export_lut, "flat 'x y -> xy' lookup table")
    sp.add_argument("path")
    sp.add_argument("--out")

    sp = add("export-dot", cmd_export_dot, "right Cayley graph in DOT")
    sp.add_argument("path")
    sp.add_argument("--out")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget < 1 or args.workers < 1:
        parser.error("--budget and --workers must be positive")
    budget = SearchBudget(args.budget)
    start = time.perf_counter()
    try:
        rep, text, code = args.func(args, budget)
    except _InputError as exc:
        print(f"semicomp: malformed input: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    except ArgError as exc:
        print(f"semicomp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SemigroupError as exc:
        print(f"semicomp: {exc}", file=sys.stderr)
        return EXIT_DATAERR
    rep.elapsed = time.perf_counter() - start
    rep.nodes = budget.used
    rep.budget = budget.max_nodes
    if args.json:
        print(rep.to_json(timing=args.timing))
    else:
        print(text)
        if args.timing:
            print(f"elapsed {rep.elapsed:.3f} s, {rep.nodes} nodes", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
