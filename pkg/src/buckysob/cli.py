"""Command-line surface: build the buckyball, compute/export the exact
constants, and run the full verification suite.

Exit codes: 0 success, 1 verification failure, 2 configuration error.
Rationals cross the boundary as "p/q" strings; identical arguments and
seed produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from buckysob import blocks, closedform, graph, green, sobolev, spectral
from buckysob.polynomials import IntPolynomial
from buckysob.ratmat import (PivotCounter, RationalMatrix, charpoly,
                             parse_rat, rat_str)

DEFAULT_CA_GRID = ("1/100", "1/50", "1/20", "1/10", "1/5", "1/2",
                   "1", "2", "5", "10", "20", "50", "100")


def _write(text: str, path: str | None):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _parse_a_values(s: str) -> list[Fraction]:
    values = [parse_rat(tok) for tok in s.split(",") if tok.strip()]
    if not values:
        raise ValueError("empty a-values list")
    if any(a <= 0 for a in values):
        raise ValueError("a-values must be positive")
    return values


def cmd_build_graph(args) -> int:
    g = graph.buckyball()
    if args.format == "dot":
        _write(graph.to_dot(g), args.output)
    else:
        _write(_json_text(graph.to_json_dict(g)), args.output)
    return 0


def cmd_charpoly(args) -> int:
    g = graph.buckyball()
    p = charpoly(graph.laplacian(g))
    if args.format == "csv":
        lines = ["degree,coefficient"]
        lines += [f"{k},{c}" for k, c in enumerate(p.coeffs)]
        _write("\n".join(lines) + "\n", args.output)
    else:
        _write(_json_text({"schema_version": 1, "charpoly": p.to_json()}),
               args.output)
    return 0


def cmd_spectrum(args) -> int:
    g = graph.buckyball()
    A = graph.laplacian(g)
    p = charpoly(A)
    table = spectral.build_spectral_table(p)
    num = spectral.numeric_eigenvalues(A)
    if args.format == "csv":
        _write(spectral.table_csv(table), args.output)
    else:
        report = {
            "schema_version": 1,
            "residual": num.residual,
            "eigenvalues": list(num.values),
            "table": [{"factor": str(e.factor), "root_index": e.root_index,
                       "closed_form": e.closed_form_hint,
                       "numeric": e.numeric, "multiplicity": e.multiplicity}
                      for e in table.entries],
        }
        _write(_json_text(report), args.output)
    return 0


def cmd_green(args) -> int:
    g = graph.buckyball()
    A = graph.laplacian(g)
    if args.a_values:
        values = _parse_a_values(args.a_values)
        matrices = {rat_str(a): green.green_matrix(A, a).to_json() for a in values}
        _write(_json_text({"schema_version": 1, "green": matrices}), args.output)
    else:
        _write(_json_text({"schema_version": 1,
                           "pseudo_green": green.pseudo_green(A).to_json()}),
               args.output)
    return 0


def cmd_constants(args) -> int:
    g = graph.buckyball()
    A = graph.laplacian(g)
    p = charpoly(A)
    bundle = green.build_green_bundle(A, p, parallel=args.parallel)
    _write(_json_text(green.constants_report(bundle)), args.output)
    return 0


def cmd_sample_ca(args) -> int:
    g = graph.buckyball()
    A = graph.laplacian(g)
    p = charpoly(A)
    ca = green.ca_via_charpoly(p)
    a_values = _parse_a_values(args.a_values or ",".join(DEFAULT_CA_GRID))
    _write(green.sample_ca_csv(ca, a_values), args.output)
    return 0


def _verify_checks(trials: int, seed: int, parallel: int):
    """Yield (name, result dict) for every verification item."""
    g = graph.buckyball()
    A = graph.laplacian(g)
    p = charpoly(A)

    def check_graph_combinatorics():
        census = graph.face_census(g)
        assert g.n == 60 and len(g.edges) == 90, "vertex/edge count"
        assert g.degrees() == [3] * 60, "3-regular"
        assert g.is_connected(), "connected"
        assert graph.girth(g) == 5, "girth"
        assert census.pentagon_count == 12 and census.hexagon_count == 20, "faces"
        assert g.n - len(g.edges) + census.face_count == 2, "Euler"
        return {"faces": census.face_count}

    def check_charpoly_factorization():
        assert p == closedform.charpoly_product(), "factor product mismatch"
        return {"degree": p.degree}

    g_star = green.pseudo_green(A)

    def check_c0_three_routes():
        c_diag = green.c0_via_diagonal(g_star)
        c_trace = green.c0_via_trace(p)
        assert c_diag == c_trace == closedform.C0, \
            f"{c_diag} vs {c_trace} vs {closedform.C0}"
        assert abs(float(c_diag) - closedform.C0_DECIMAL) < 5e-6, "decimal"
        return {"c0": rat_str(c_diag)}

    ca = None

    def check_ca_three_routes():
        nonlocal ca
        ca = green.c_of_a(A, p, parallel=parallel)
        return {"num_degree": ca.num.degree, "den_degree": ca.den.degree}

    def check_limit_identity():
        rf = ca if ca is not None else green.ca_via_charpoly(p)
        assert green.limit_identity_check(rf, closedform.C0), "limit value"
        return {}

    def check_moore_penrose():
        ident = RationalMatrix.identity(60)
        e0 = green.projection_e0(60)
        zero = RationalMatrix.zeros(60, 60)
        ag = A * g_star
        assert (ag * A == A and g_star * ag == g_star
                and ag.transpose() == ag
                and (g_star * A).transpose() == g_star * A), "axioms"
        assert ag == ident - e0 and g_star * A == ident - e0, "A G* = I - E0"
        assert g_star * e0 == zero and e0 * g_star == zero, "G* E0 = 0"
        green.constant_diagonal(g_star)
        for a in (Fraction(1, 10), Fraction(1), Fraction(10)):
            green.constant_diagonal(green.green_matrix(A, a))
        return {}

    def check_eigenvalue_table():
        table = spectral.build_spectral_table(p)
        num = spectral.numeric_eigenvalues(A)
        cv = spectral.cross_validate(num, table)
        assert tuple(table.multiplicities()) == closedform.TABLE_MULTIPLICITIES
        assert cv.max_deviation <= 1e-8, f"deviation {cv.max_deviation}"
        trace = sum(m * x for m, x in zip(table.multiplicities(),
                                          table.numeric_roots()))
        assert abs(trace - 180.0) <= 1e-8, f"trace {trace}"
        return {"clusters": cv.cluster_count, "max_deviation": cv.max_deviation}

    def check_block_reduction():
        sigma = graph.find_antipodal_involution(g)
        split = blocks.block_split(A, sigma)
        relabeled = A.permuted(list(split.perm))
        j = split.j_matrix
        j_inv = Fraction(1, 2) * j
        conj = j_inv * relabeled * j
        expected = blocks._stack(split.a_plus, RationalMatrix.zeros(30, 30),
                                 RationalMatrix.zeros(30, 30), split.a_minus)
        assert conj == expected, "J conjugation"
        blocks.half_spectra_check(split, p)
        full_counter, half_counter = PivotCounter(), PivotCounter()
        direct = green.pseudo_green(A, full_counter)
        via_blocks = blocks.assemble_green_via_blocks(split, None, half_counter)
        assert via_blocks == direct, "block G* mismatch"
        assert blocks.assemble_green_via_blocks(split, 1) == \
            green.green_matrix(A, 1), "block G(1) mismatch"
        assert half_counter.ops < full_counter.ops, "block route not cheaper"
        return {"half_ops": half_counter.ops, "full_ops": full_counter.ops}

    def check_sobolev_trials():
        rng = random.Random(seed)
        for _ in range(trials):
            u = sobolev.random_mean_zero(60, rng)
            lhs, rhs, holds = sobolev.sobolev_trial(u, closedform.C0, "meanzero", A)
            assert holds, f"mean-zero inequality failed: {lhs} > {rhs}"
        g1 = green.green_matrix(A, 1)
        c1 = green.constant_diagonal(g1)
        for _ in range(max(trials // 10, 1)):
            u = [Fraction(rng.randint(-100, 100), rng.randint(1, 10))
                 for _ in range(60)]
            _, _, holds = sobolev.sobolev_trial(u, c1, "damped", A, 1)
            assert holds, "damped inequality failed"
        for j0 in range(60):
            w = sobolev.equality_witness(g_star, j0, "meanzero", A)
            assert w.lhs == w.rhs == closedform.C0 ** 2
            w = sobolev.equality_witness(g1, j0, "damped", A, 1)
            assert w.lhs == w.rhs == c1 ** 2
        # sharpness: any constant below C0 is beaten by a G* column
        below = closedform.C0 - Fraction(1, 10 ** 6)
        _, _, holds = sobolev.sobolev_trial(g_star.column(0), below, "meanzero", A)
        assert not holds, "C0 - 1e-6 not refuted"
        return {"trials": trials}

    def check_relabel_invariance():
        rng = random.Random(seed)
        perm = list(range(60))
        rng.shuffle(perm)
        g2 = graph.relabel(g, perm)
        A2 = graph.laplacian(g2)
        p2 = charpoly(A2)
        assert p2 == p, "charpoly changed under relabeling"
        assert green.c0_via_diagonal(green.pseudo_green(A2)) == closedform.C0
        assert green.ca_via_charpoly(p2) == closedform.ca_closed_form()
        return {}

    yield "block_reduction", check_block_reduction
    yield "c0_three_routes", check_c0_three_routes
    yield "ca_three_routes", check_ca_three_routes
    yield "charpoly_factorization", check_charpoly_factorization
    yield "eigenvalue_table", check_eigenvalue_table
    yield "graph_combinatorics", check_graph_combinatorics
    yield "limit_identity", check_limit_identity
    yield "moore_penrose", check_moore_penrose
    yield "relabel_invariance", check_relabel_invariance
    yield "sobolev_trials", check_sobolev_trials


def cmd_verify_all(args) -> int:
    results = {}
    ok_all = True
    checks = sorted(_verify_checks(args.trials, args.seed, args.parallel),
                    key=lambda kv: kv[0])
    for name, fn in checks:
        try:
            detail = fn() or {}
            results[name] = {"ok": True, **detail}
            print(f"PASS {name}")
        except Exception as exc:  # noqa: BLE001 - report and keep going
            ok_all = False
            results[name] = {"ok": False, "error": str(exc)}
            print(f"FAIL {name}: {exc}")
    summary = {"schema_version": 1, "ok": ok_all, "seed": args.seed,
               "trials": args.trials, "checks": results}
    if args.output:
        _write(_json_text(summary), args.output)
    return 0 if ok_all else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buckysob",
        description="Exact buckyball spectral data and sharp Sobolev constants")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--output", default=None, help="output file (default stdout)")
        p.add_argument("--format", choices=("json", "csv", "dot"), default="json")
        p.add_argument("--a-values", dest="a_values", default=None,
                       help="comma-separated positive rationals, e.g. 1/10,1,10")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--trials", type=int, default=100)
        p.add_argument("--parallel", type=int, default=1, metavar="N")
        p.set_defaults(fn=fn)
        return p

    add("build-graph", cmd_build_graph, help="construct and export the graph")
    add("charpoly", cmd_charpoly, help="exact characteristic polynomial")
    add("spectrum", cmd_spectrum, help="eigenvalue table and numeric spectrum")
    add("green", cmd_green, help="exact Green / pseudo-Green matrices")
    add("constants", cmd_constants, help="sharp constants report")
    add("sample-ca", cmd_sample_ca, help="CSV samples of C(a) and C(a)-1/(60a)")
    add("verify-all", cmd_verify_all, help="run the full oracle suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.trials < 0:
        parser.exit(2, "trials must be nonnegative\n")
    if args.parallel < 1:
        parser.exit(2, "parallel must be at least 1\n")
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
