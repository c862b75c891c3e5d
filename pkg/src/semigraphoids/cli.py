"""Command-line front end.

A command exits with 0 when its predicate holds and with 1 when it does not.
Usage and parse errors exit with 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import ci, fixtures, geometry, imsets, markov, semigraphoid, submodular, verify
from .semigraphoid import StatementSet

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _statement_set(args) -> StatementSet:
    text = _read(args.file)
    n = args.n or semigraphoid.infer_n(text)
    return semigraphoid.parse_statement_set(text, n)


def _imset(args) -> np.ndarray:
    text = _read(args.file)
    if args.n:
        n = args.n
    else:
        top = 0
        for line in text.splitlines():
            parts = line.split("#", 1)[0].split()
            if len(parts) == 2 and parts[1] != "0" and parts[1].isdigit():
                top = max(top, max(int(c) for c in parts[1]))
        n = max(top, 2)
    return ci.parse_imset(text, n)


class Output:
    """Collects text lines and a JSON payload; prints one of them at the end."""

    def __init__(self, as_json: bool) -> None:
        self.as_json = as_json
        self.lines: list[str] = []
        self.data: dict = {}

    def text(self, s: str) -> None:
        self.lines.append(s.rstrip("\n"))

    def emit(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, indent=2, sort_keys=True))
        elif self.lines:
            print("\n".join(self.lines))


def _statements(S: StatementSet) -> list[str]:
    return [str(s) for s in S]


# ------------------------------------------------------------------ commands


def cmd_axioms(args, out: Output) -> int:
    n = ci.check_n(args.n_pos)
    if n > 6:
        raise UsageError("axioms supports n <= 6")
    eqs = ci.generate_axioms(n)
    for eq in eqs:
        out.text(eq.format(n) if args.format == "eq" else f"{eq.lhs[0]} {eq.lhs[1]} {eq.rhs[0]} {eq.rhs[1]}")
    out.data = {"n": n, "count": len(eqs), "axioms": [eq.format(n) for eq in eqs]}
    return EXIT_OK


def cmd_check(args, out: Output) -> int:
    S = _statement_set(args)
    ok = semigraphoid.is_semigraphoid(S)
    out.text("SEMIGRAPHOID" if ok else "NOT_SEMIGRAPHOID")
    violated = None
    if not ok:
        for eq, (L, R) in zip(ci.generate_axioms(S.n), semigraphoid.axiom_masks(S.n)):
            if (S.bits & L == L) != (S.bits & R == R):
                violated = eq.format(S.n)
                out.text(f"violated: {violated}")
                break
    out.data = {"semigraphoid": ok, "n": S.n, "size": len(S), "violated": violated}
    return EXIT_OK if ok else EXIT_FAIL


def cmd_closure(args, out: Output) -> int:
    S = _statement_set(args)
    C = semigraphoid.closure(S)
    for s in C:
        out.text(str(s))
    out.data = {"n": S.n, "size": len(C), "statements": _statements(C)}
    return EXIT_OK


def cmd_coarsest(args, out: Output) -> int:
    S = _statement_set(args)
    if not semigraphoid.is_semigraphoid(S):
        raise UsageError("input is not a semigraphoid")
    ok = semigraphoid.is_coarsest(S)
    out.text("COARSEST" if ok else "NOT_COARSEST")
    out.data = {"coarsest": ok, "n": S.n, "size": len(S)}
    return EXIT_OK if ok else EXIT_FAIL


def cmd_submodular(args, out: Output) -> int:
    S = _statement_set(args)
    if not semigraphoid.is_semigraphoid(S):
        raise UsageError("input is not a semigraphoid")
    res = submodular.is_submodular(S, args.form)
    if res.submodular:
        out.text("SUBMODULAR")
        w = res.witness.vector
        if args.form == "dual":
            out.text(submodular.format_dual_witness(w))
        else:
            st = ci.enumerate_statements(S.n)
            out.text("".join(f"{v} {st[k]}\n" for k, v in enumerate(w) if v))
        out.data = {"submodular": True, "form": args.form, "witness": [str(v) for v in w]}
        return EXIT_OK
    out.text("NOT_SUBMODULAR")
    report = submodular.certificate_report(S)
    out.text(report)
    cert = submodular.find_certificate(S)
    st = ci.enumerate_statements(S.n)
    out.data = {
        "submodular": False,
        "form": args.form,
        "certificate": [
            {"coefficient": c, "lhs": [str(st[k]) for k in l], "rhs": [str(st[k]) for k in r]}
            for c, l, r in cert.terms
        ],
        "residual": [{"statement": str(st[k]), "weight": w} for k, w in cert.residual],
    }
    return EXIT_FAIL


def cmd_enumerate(args, out: Output) -> int:
    n = ci.check_n(args.n_pos)
    if n > 4:
        raise UsageError("exhaustive enumeration is limited to n <= 4")
    if args.list:
        masks = semigraphoid.semigraphoid_masks(n)
        items = []
        for m in masks:
            S = StatementSet(n, int(m))
            items.append(_statements(S))
            out.text(" ".join(items[-1]) if items[-1] else "{}")
        out.data = {"n": n, "count": len(masks), "semigraphoids": items}
    else:
        count = semigraphoid.count_semigraphoids(n)
        out.text(str(count))
        out.data = {"n": n, "count": count}
    return EXIT_OK


def cmd_classify(args, out: Output) -> int:
    n = ci.check_n(args.n)
    if n > 4:
        raise UsageError("classification is limited to n <= 4")
    res = verify.sweep(n, dual=not args.no_dual)
    out.text(semigraphoid.format_table(res.table))
    out.text(f"# semigraphoids {res.semigraphoids}  submodular {res.submodular}  non_submodular {res.non_submodular}")
    out.data = {
        "n": n,
        "semigraphoids": res.semigraphoids,
        "submodular": res.submodular,
        "non_submodular": res.non_submodular,
        "primal_dual_mismatches": res.disagreements if res.checked_dual else None,
        "table": [
            {"size": r.size, "type": list(r.type_triple), "non_simplicial": r.non_simplicial,
             "simplicial": r.simplicial, "total": r.total}
            for r in res.table
        ],
    }
    return EXIT_OK if res.disagreements == 0 else EXIT_FAIL


def cmd_imset(args, out: Output) -> int:
    b = _imset(args)
    n = int(b.size).bit_length() - 1
    if args.sub == "structural":
        ok = imsets.is_structural(b)
        out.text("STRUCTURAL" if ok else "NOT_STRUCTURAL")
        out.data = {"structural": ok}
        return EXIT_OK if ok else EXIT_FAIL
    if args.sub == "combinatorial":
        x = imsets.is_combinatorial(b)
        if x is None:
            out.text("NOT_COMBINATORIAL")
            out.data = {"combinatorial": False, "level_counts": ci.level_counts(b, n)}
            return EXIT_FAIL
        out.text("COMBINATORIAL")
        out.text(imsets.format_combination(x, n))
        out.data = {"combinatorial": True, "witness": imsets.format_combination(x, n).split()}
        return EXIT_OK
    F = imsets.enumerate_fiber(b, args.max_degree)
    elems = F.sorted()
    out.text(f"fiber size {len(elems)}")
    for k, x in enumerate(elems, 1):
        out.text(f"# element {k}")
        out.text(imsets.format_combination(x, n))
    out.data = {"size": len(elems), "elements": [imsets.format_combination(x, n).split() for x in elems]}
    return EXIT_OK


def _moves(args) -> list[markov.MarkovMove]:
    text = _read(args.file)
    n = args.n or markov.infer_move_n(text)
    return markov.parse_moves(text, n)


def cmd_markov(args, out: Output) -> int:
    if args.sub == "primes":
        n = args.n or 4
        if n != 4:
            raise UsageError("the listed primes are for n = 4")
        rows = []
        for codim, text in sorted(fixtures.DEFAULT.primes4.items()):
            p = markov.parse_prime(text, 4)
            ok = markov.prime_contains_axioms(p, 4)
            orb = markov.prime_orbit(p, 4)
            all_ok = all(markov.prime_contains_axioms(q, 4) for q in orb)
            rows.append({"codim": codim, "generators": len(p), "contains_axioms": ok,
                         "relabelings": len(orb), "all_relabelings_contain": all_ok})
            out.text(f"codim {codim}: {len(p)} generators, contains all axiom binomials: {ok}, "
                     f"{len(orb)} relabelings, all contain: {all_ok}")
        out.data = {"primes": rows}
        return EXIT_OK if all(r["contains_axioms"] and r["all_relabelings_contain"] for r in rows) else EXIT_FAIL
    moves = _moves(args)
    if args.sub == "kernel":
        res = [markov.in_kernel(m) for m in moves]
        for m, r in zip(moves, res):
            out.text("IN_KERNEL" if r else "NOT_IN_KERNEL")
        out.data = {"in_kernel": res}
        return EXIT_OK if all(res) else EXIT_FAIL
    if args.sub == "indispensable":
        res = [markov.is_indispensable(m, args.max_degree) for m in moves]
        for r in res:
            out.text("INDISPENSABLE" if r else "DISPENSABLE")
        out.data = {"indispensable": res}
        return EXIT_OK if all(res) else EXIT_FAIL
    if args.sub == "orbit":
        orbs = [sorted(markov.orbit(m), key=lambda v: v.vector, reverse=True) for m in moves]
        texts = []
        for orb in orbs:
            out.text(f"# orbit of size {len(orb)}")
            for v in orb:
                out.text(v.to_text())
            texts.append([v.to_text() for v in orb])
        out.data = {"orbits": [{"size": len(o), "moves": t} for o, t in zip(orbs, texts)]}
        return EXIT_OK
    # connect
    n = moves[0].n if moves else (args.n or 3)
    targets = [t for d in range(args.degree + 1) for t in markov.degree_targets(n, d)]
    rep = markov.connectivity_check(moves, targets, max(args.max_degree, args.degree))
    bad = [(f, s, c) for f, s, c in rep.fibers if c > 1]
    out.text(f"fibers checked {len(rep.fibers)}, disconnected {len(bad)}")
    out.text("CONNECTED" if rep.connected else "DISCONNECTED")
    out.data = {"fibers": len(rep.fibers), "disconnected": len(bad), "connected": rep.connected}
    return EXIT_OK if rep.connected else EXIT_FAIL


def cmd_geometry(args, out: Output) -> int:
    if args.sub in ("ranktest", "simplicial"):
        S = _statement_set(args)
        if not semigraphoid.is_semigraphoid(S):
            raise UsageError("input is not a semigraphoid")
        if args.sub == "ranktest":
            P = geometry.rank_test(S)
            out.text(P.to_text())
            out.data = {"classes": [sorted(geometry.perm_text(p) for p in c) for c in P.classes],
                        "sizes": P.sizes()}
            return EXIT_OK
        ok = geometry.is_simplicial(S, oracle=args.oracle)
        out.text("SIMPLICIAL" if ok else "NOT_SIMPLICIAL")
        out.data = {"simplicial": ok}
        return EXIT_OK if ok else EXIT_FAIL
    text = _read(args.file)
    if args.sub == "statements":
        P = geometry.parse_partition(text, args.n)
        S = geometry.statements_of_partition(P)
        for s in S:
            out.text(str(s))
        out.data = {"n": P.n, "size": len(S), "statements": _statements(S)}
        return EXIT_OK
    lineality = [[int(v) for v in args.lineality.split(",")]] if args.lineality else []
    h = geometry.parse_polytope(text, lineality)
    lat = geometry.face_lattice(h)
    out.text(f"vertices {len(lat.vertices)}")
    out.text("f-vector (" + ", ".join(map(str, lat.f_vector)) + ")")
    stats = [lat.facet_stats(k) for k in range(len(lat.facets))]
    for k, (v, e, t) in enumerate(stats, 1):
        out.text(f"facet {k}: {v} vertices, {e} edges, {t} 2-faces")
    out.data = {"vertices": len(lat.vertices), "f_vector": list(lat.f_vector),
                "facets": [{"vertices": v, "edges": e, "two_faces": t} for v, e, t in stats]}
    return EXIT_OK


def cmd_verify_paper(args, out: Output) -> int:
    rep = verify.verify_paper(full=args.full)
    out.text(rep.to_text())
    out.data = rep.to_json()
    return EXIT_OK if rep.overall else EXIT_FAIL


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semigraphoids", description=__doc__.splitlines()[0])
    p.add_argument("--export-fixtures", metavar="DIR", help="write the embedded fixtures to DIR and exit")
    sub = p.add_subparsers(dest="command")

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    def with_file(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("file", help="input file ('-' for stdin)")
        sp.add_argument("--n", type=int, default=None, help="ground-set size (default: inferred)")

    sp = add("axioms", cmd_axioms, "list the axiom equations")
    sp.add_argument("n_pos", type=int, metavar="n")
    sp.add_argument("--format", choices=["ord", "eq"], default="ord")

    for name, fn, h in (
        ("check", cmd_check, "is the statement set a semigraphoid"),
        ("closure", cmd_closure, "semigraphoid closure"),
        ("coarsest", cmd_coarsest, "is the semigraphoid coarsest"),
    ):
        with_file(add(name, fn, h))

    sp = add("submodular", cmd_submodular, "submodularity with witness or certificate")
    with_file(sp)
    sp.add_argument("--form", choices=["dual", "primal"], default="dual")

    sp = add("enumerate", cmd_enumerate, "count (or list) all semigraphoids, n <= 4")
    sp.add_argument("n_pos", type=int, metavar="n")
    sp.add_argument("--list", action="store_true")

    sp = add("classify", cmd_classify, "table of non-submodular semigraphoids")
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--no-dual", action="store_true", help="skip the primal/dual cross-check")

    sp = add("imset", cmd_imset, "structural / combinatorial membership and fibers")
    sp.add_argument("sub", choices=["structural", "combinatorial", "fiber"])
    with_file(sp)
    sp.add_argument("--max-degree", type=int, default=imsets.DEFAULT_MAX_DEGREE)

    sp = add("markov", cmd_markov, "Markov moves")
    sp.add_argument("sub", choices=["kernel", "indispensable", "orbit", "connect", "primes"])
    sp.add_argument("file", nargs="?", help="move or basis file")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--degree", type=int, default=4, help="largest fiber degree for 'connect'")
    sp.add_argument("--max-degree", type=int, default=imsets.DEFAULT_MAX_DEGREE)

    sp = add("geometry", cmd_geometry, "rank tests and polytopes")
    sp.add_argument("sub", choices=["ranktest", "statements", "simplicial", "fvector"])
    with_file(sp)
    sp.add_argument("--oracle", action="store_true", help="cross-check simpliciality by extreme rays")
    sp.add_argument("--lineality", default=None, help="comma-separated lineality generator, e.g. 4,1,1,1,1")

    sp = add("verify-paper", cmd_verify_paper, "run every reproduction check")
    sp.add_argument("--full", action="store_true", help="include the exhaustive n=4 sweep")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.export_fixtures:
        paths = fixtures.DEFAULT.export(args.export_fixtures)
        for path in paths:
            print(path)
        return EXIT_OK
    if not args.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if args.command == "markov" and args.sub != "primes" and not args.file:
        print("error: a move file is required", file=sys.stderr)
        return EXIT_USAGE
    out = Output(getattr(args, "json", False))
    try:
        code = args.func(args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
