"""Command-line surface: generation, products, analysis, batch counts,
predictors, kernels, the group oracle, and the verification suites.

Exit codes are a stable contract: 0 success, 1 verification failure,
2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from . import theorems, verify
from .graphs import (
    Graph,
    binary_graph,
    complement,
    complete,
    complete_bipartite,
    crown,
    cube,
    cycle,
    folded_cube,
    girth,
    graph6_decode,
    graph6_encode,
    is_neighborhood_distinguishable,
    kneser,
    path,
    subgraph,
)
from .graphs import connected_components
from .intlin import IntMatrix, kernel_basis_mod_p
from .products import cartesian, disjoint_union, join, prism, pyramid, strong, tensor
from .ra_core import classification_record, classify, elementary_divisors, ra_matrix

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2


def _err(msg: str) -> None:
    print(f"ramat: {msg}", file=sys.stderr)


def _iter_graph6_inputs(args):
    """Yield (source, line_number, text) for graph6 arguments: each argument
    is a file path if one exists, '-' for stdin, else a literal string."""
    if not args:
        args = ["-"]
    for arg in args:
        if arg == "-":
            for lineno, line in enumerate(sys.stdin, start=1):
                yield "stdin", lineno, line
        elif os.path.exists(arg):
            with open(arg, "r", encoding="ascii") as fh:
                for lineno, line in enumerate(fh, start=1):
                    yield arg, lineno, line
        else:
            yield "arg", 1, arg


def _records_for(g: Graph):
    """Classification records, one per connected component."""
    comps = connected_components(g)
    if len(comps) == 1:
        c = classify(g)
        rec = classification_record(g, c)
        rec["graph6"] = graph6_encode(g)
        return [rec]
    out = []
    for comp in comps:
        sub = subgraph(g, comp)
        c = classify(sub)
        rec = classification_record(sub, c)
        rec["graph6"] = graph6_encode(sub)
        out.append(rec)
    return out


_TSV_FIELDS = (
    "graph6", "n", "girth", "bipartite", "connected",
    "divisors", "nullity", "status", "mu",
)


def _print_record(rec: dict, fmt: str, axis: bool) -> None:
    if fmt == "json":
        print(json.dumps(rec, sort_keys=False))
        return
    row = []
    for f in _TSV_FIELDS:
        v = rec[f]
        if f == "divisors":
            v = ",".join(str(d) for d in v)
        row.append("" if v is None else str(v))
    if axis:
        row.append(",".join(str(a) for a in rec["axis_multiples"]))
    print("\t".join(row))


def cmd_analyze(ns) -> int:
    fmt = "tsv" if ns.tsv else "json"
    had_error = False
    for source, lineno, text in _iter_graph6_inputs(ns.inputs):
        s = text.strip()
        if not s or s == ">>graph6<<":
            continue
        try:
            g = graph6_decode(s)
        except ValueError as exc:
            _err(f"{source} line {lineno}: {exc}")
            had_error = True
            continue
        for rec in _records_for(g):
            _print_record(rec, fmt, ns.axis)
    return EXIT_INPUT if had_error else EXIT_OK


_FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete-bipartite": (complete_bipartite, 2),
    "cube": (cube, 1),
    "folded-cube": (folded_cube, 1),
    "crown": (crown, 1),
    "kneser": (kneser, 2),
    "binary": (binary_graph, 1),
}


def cmd_gen(ns) -> int:
    fam = ns.family.replace("_", "-")
    if fam == "complement":
        if len(ns.params) != 1:
            _err("complement takes one graph6 argument")
            return EXIT_INPUT
        try:
            g = complement(graph6_decode(ns.params[0]))
        except ValueError as exc:
            _err(str(exc))
            return EXIT_INPUT
        print(graph6_encode(g))
        return EXIT_OK
    if fam not in _FAMILIES:
        _err(f"unknown family {ns.family!r} (families: {', '.join(_FAMILIES)}, complement)")
        return EXIT_INPUT
    func, arity = _FAMILIES[fam]
    if len(ns.params) != arity:
        _err(f"{fam} takes {arity} integer parameter(s)")
        return EXIT_INPUT
    try:
        g = func(*(int(p) for p in ns.params))
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    print(graph6_encode(g))
    return EXIT_OK


def cmd_product(ns) -> int:
    binary_ops = {"cartesian": cartesian, "tensor": tensor, "strong": strong,
                  "join": join}
    unary_ops = {"prism": prism, "pyramid": pyramid}
    try:
        graphs = [graph6_decode(s) for s in ns.graphs]
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    op = ns.op
    if op in unary_ops:
        if len(graphs) != 1:
            _err(f"{op} takes exactly one graph")
            return EXIT_INPUT
        result = unary_ops[op](graphs[0])
    elif op in binary_ops:
        if len(graphs) < 2:
            _err(f"{op} takes at least two graphs")
            return EXIT_INPUT
        result = graphs[0]
        for g in graphs[1:]:
            result = binary_ops[op](result, g)
    elif op == "union":
        if not graphs:
            _err("union takes at least one graph")
            return EXIT_INPUT
        result = disjoint_union(graphs)
    else:
        _err(f"unknown product {op!r}")
        return EXIT_INPUT
    print(graph6_encode(result))
    return EXIT_OK


def cmd_construct(ns) -> int:
    try:
        divisors = [int(d) for d in ns.divisors.split(",")] if ns.divisors else []
        g = theorems.construct_prescribed(divisors, ns.nullity)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    c = classify(g)
    got = sorted(d for d in c.divisors if d > 1)
    verified = got == sorted(divisors) and c.nullity == ns.nullity
    record = {
        "graph6": graph6_encode(g),
        "n": g.n,
        "prescribed_divisors": sorted(divisors),
        "prescribed_nullity": ns.nullity,
        "divisors": list(c.divisors),
        "nullity": c.nullity,
        "status": c.status,
        "verified": verified,
    }
    print(graph6_encode(g))
    print(json.dumps(record))
    return EXIT_OK if verified else EXIT_VERIFY


BATCH_CATEGORIES = (
    ("3", "nbhd-indistinguishable"),
    ("3", "nbhd-distinguishable-ra"),
    ("3", "nbhd-distinguishable-not-ra"),
    ("4", "ra"),
    ("4", "not-ra"),
    ("5+", "all"),
)


def batch_category(g: Graph):
    """Table bucket for one graph: girth band, distinguishability, RA status."""
    gi = girth(g)
    if gi == 3:
        if not is_neighborhood_distinguishable(g):
            return ("3", "nbhd-indistinguishable")
        ra = all(d == 1 for d in elementary_divisors(g).divisors)
        return ("3", "nbhd-distinguishable-ra" if ra else "nbhd-distinguishable-not-ra")
    if gi == 4:
        ra = all(d == 1 for d in elementary_divisors(g).divisors)
        return ("4", "ra" if ra else "not-ra")
    return ("5+", "all")


def _batch_chunk(lines) -> Counter:
    counts: Counter = Counter()
    for s in lines:
        counts[batch_category(graph6_decode(s))] += 1
    return counts


def cmd_batch(ns) -> int:
    try:
        with open(ns.file, "r", encoding="ascii") as fh:
            raw = fh.readlines()
    except OSError as exc:
        _err(str(exc))
        return EXIT_INPUT
    lines = []
    had_error = False
    for lineno, line in enumerate(raw, start=1):
        s = line.strip()
        if not s or s == ">>graph6<<":
            continue
        try:
            graph6_decode(s)
        except ValueError as exc:
            _err(f"{ns.file} line {lineno}: {exc}")
            had_error = True
            continue
        lines.append(s)
    workers = ns.workers
    counts: Counter = Counter()
    if workers > 1 and len(lines) > 100:
        chunk = (len(lines) + workers - 1) // workers
        chunks = [lines[i:i + chunk] for i in range(0, len(lines), chunk)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_batch_chunk, chunks):
                counts.update(part)
    else:
        counts = _batch_chunk(lines)
    total = sum(counts.values())
    print("girth\tcategory\tcount")
    for key in BATCH_CATEGORIES:
        print(f"{key[0]}\t{key[1]}\t{counts.get(key, 0)}")
    print(f"total\t\t{total}")
    return EXIT_INPUT if had_error else EXIT_OK


def cmd_predict(ns) -> int:
    tid = ns.theorem.replace("_", "-")
    try:
        result = _run_predictor(tid, ns)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    if result is None:
        return EXIT_INPUT
    preds, graph_for_check = result
    out = []
    for p in preds:
        rec = {
            "theorem_id": p.theorem_id,
            "applicable": p.applicable,
            "mu": p.mu,
            "ingredients": p.ingredients,
        }
        if not p.applicable:
            rec["reason"] = p.reason
        out.append(rec)
    exit_code = EXIT_OK
    if ns.check and graph_for_check is not None:
        cls = classify(graph_for_check)
        cls_list = cls if isinstance(cls, list) else [cls]
        computed = [c.mu for c in cls_list]
        predicted = [p.mu for p in preds]
        match = all(p.applicable for p in preds) and predicted == computed
        for rec, c in zip(out, cls_list):
            rec["computed_mu"] = c.mu
            rec["computed_status"] = c.status
        if not match:
            exit_code = EXIT_VERIFY
    for rec in out:
        print(json.dumps(rec))
    return exit_code


def _decode_args(args, count):
    if len(args) != count:
        raise ValueError(f"expected {count} graph6 argument(s)")
    return [graph6_decode(s) for s in args]


def _run_predictor(tid: str, ns):
    args = ns.inputs
    if tid == "girth4":
        (g,) = _decode_args(args, 1)
        return [theorems.mu_girth4(g)], g
    if tid == "prism":
        (g,) = _decode_args(args, 1)
        return [theorems.mu_prism(g)], prism(g)
    if tid == "negatively-neighborly":
        (g,) = _decode_args(args, 1)
        return [theorems.mu_negatively_neighborly(g)], g
    if tid == "neighborly":
        (g,) = _decode_args(args, 1)
        if ns.parts:
            sides = ns.parts.split("/")
            if len(sides) != 2:
                raise ValueError("--parts wants 'v1,v2/<v3,v4' with two sides")
            parts = tuple(
                tuple(int(v) for v in side.split(",") if v) for side in sides
            )
        else:
            from .graphs import is_bipartite

            parts = is_bipartite(g)
            if parts is None:
                parts = (tuple(g.vertices()), ())
        return [theorems.mu_neighborly(g, parts)], g
    if tid == "cartesian":
        a, b = _decode_args(args, 2)
        return [theorems.mu_cartesian(a, b)], cartesian(a, b)
    if tid == "tensor":
        a, b = _decode_args(args, 2)
        p = theorems.mu_tensor(a, b)
        preds = list(p) if isinstance(p, tuple) else [p]
        return preds, tensor(a, b)
    if tid == "tensor-completes":
        if len(args) != 1:
            raise ValueError("tensor-completes wants one comma list, e.g. 2,5")
        sizes = [int(x) for x in args[0].split(",")]
        from .products import tensor_all

        return [theorems.mu_tensor_completes(sizes)], tensor_all(
            [complete(m) for m in sizes]
        )
    if tid == "tensor-scaled":
        if len(args) != 2:
            raise ValueError("tensor-scaled wants a graph6 and nu")
        lam = graph6_decode(args[0])
        nu = int(args[1])
        return [theorems.mu_tensor_scaled(lam, nu)], tensor(lam, complete(nu + 2))
    if tid == "kneser-prism":
        if len(args) != 2:
            raise ValueError("kneser-prism wants a and b")
        n, k = theorems.kneser_prism_params(int(args[0]), int(args[1]))
        print(json.dumps({
            "n": n, "k": k,
            "conditions_hold": theorems.kneser_prism_conditions(n, k),
        }))
        return [], None
    raise ValueError(f"unknown theorem id {tid!r}")


def cmd_kernel(ns) -> int:
    try:
        g = graph6_decode(ns.graph)
        basis = kernel_basis_mod_p(ra_matrix(g).matrix, ns.mod)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    for vec in basis:
        print(" ".join(str(x) for x in vec))
    return EXIT_OK


def _parse_group(text: str):
    from .group_oracle import dihedral, heisenberg

    name, _, param = text.partition(":")
    if not param:
        raise ValueError("group spec looks like heisenberg:2 or dihedral:8")
    if name == "heisenberg":
        return heisenberg(int(param))
    if name == "dihedral":
        return dihedral(int(param))
    raise ValueError(f"unknown group {name!r}")


def cmd_oracle(ns) -> int:
    from .group_oracle import BudgetExceededError, matrix_power, oracle_record

    try:
        group = _parse_group(ns.group)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    try:
        if ns.matrix:
            m = IntMatrix.from_text(ns.matrix.replace(";", "\n"))
            sub = matrix_power(group, m, ns.cap)
            print(json.dumps({
                "group": group.name,
                "matrix": m.to_text().replace("\n", ";"),
                "order": len(sub),
            }))
            return EXIT_OK
        if not ns.graph:
            _err("oracle wants a graph6 argument or --matrix")
            return EXIT_INPUT
        g = graph6_decode(ns.graph)
        rec = oracle_record(group, g, ns.cap, descriptor=graph6_encode(g))
        print(json.dumps(rec))
        return EXIT_OK
    except BudgetExceededError as exc:
        _err(str(exc))
        return EXIT_INPUT
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT


def cmd_verify(ns) -> int:
    failures = 0
    rows = 0
    try:
        for row in verify.run_suite(ns.suite, slow=ns.slow):
            rows += 1
            print("\t".join(str(x) for x in row))
            if row[-1] != "pass":
                failures += 1
    except ValueError as exc:
        _err(str(exc))
        return EXIT_INPUT
    print(f"# {rows} checks, {failures} failures")
    return EXIT_VERIFY if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ramat",
        description="RA matrices of graphs: elementary divisors, classification, "
        "constructions, and a finite-group oracle.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify graph6 inputs")
    p.add_argument("inputs", nargs="*",
                   help="graph6 strings, files, or '-' for stdin")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON lines (default)")
    fmt.add_argument("--tsv", action="store_true", help="tab-separated rows")
    p.add_argument("--axis", action="store_true",
                   help="append axis multiples to TSV rows")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("product", help="combine graphs")
    p.add_argument("op", choices=["cartesian", "tensor", "strong", "join",
                                  "prism", "pyramid", "union"])
    p.add_argument("graphs", nargs="+")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("construct",
                       help="build a graph with prescribed divisors and nullity")
    p.add_argument("--divisors", default="", help="comma list, e.g. 2,4")
    p.add_argument("--nullity", type=int, default=0)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("batch", help="category counts over a graph6 file")
    p.add_argument("file")
    p.add_argument("--summary", default="girth-category",
                   choices=["girth-category"])
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("predict", help="closed-form divisor predictors")
    p.add_argument("theorem")
    p.add_argument("inputs", nargs="*")
    p.add_argument("--parts", default=None,
                   help="explicit partition for 'neighborly': 1,2/3,4")
    p.add_argument("--check", action="store_true",
                   help="cross-validate against direct classification")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("kernel", help="mod-p kernel basis of the RA matrix")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("graph")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("oracle", help="finite-group oracle")
    p.add_argument("--group", required=True, help="heisenberg:P or dihedral:ORDER")
    p.add_argument("graph", nargs="?")
    p.add_argument("--matrix", default=None,
                   help="integer matrix, rows ';'-separated: '1 0;0 4'")
    p.add_argument("--cap", type=int, default=10 ** 7)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", default="all",
                   choices=list(verify.SUITES) + ["all"])
    p.add_argument("--slow", action="store_true",
                   help="include the long-running table entries")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
