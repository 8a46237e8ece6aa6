"""Command line front end: counts, tables, sequences, generating-function
coefficient dumps, raw oracle runs, and a self-verification harness.

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
3 oracle size guard.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import bernoulli, factorial, stirling2
from .formulas import (
    FORMULA_ALPHAS,
    PhiResult,
    function_count_identity_lhs,
    function_count_identity_rhs,
    phi,
    phi_c,
    phi_gamma,
    phi_jo,
    phi_l,
    phi_t,
)
from .patterns import (
    SYMBOLS,
    AvoidanceSpec,
    BitMatrix,
    SizeLimitExceeded,
    avoids,
    class_orbit,
    complement,
    complement_image,
    count_avoiders,
    oracle_max_cells,
    transpose,
    transpose_image,
)
from .series import (
    BIVAR_ALPHAS,
    DIAG_ALPHAS,
    EQ2_ALPHAS,
    USeries,
    egf_bivar,
    egf_bivar_eq2,
    egf_diag,
    egf_to_count,
    eq2_compare,
    lambert_w,
)

__all__ = ["OutputRecord", "build_parser", "main"]


@dataclass(frozen=True)
class OutputRecord:
    """One printed count: indices, canonical class string, the value as a
    decimal string (counts outgrow fixed-width integers fast), and whether
    a formula or the oracle produced it."""

    k: int
    n: int
    alpha: str
    value: str
    provenance: str

    @classmethod
    def from_phi(cls, res: PhiResult) -> "OutputRecord":
        return cls(res.k, res.n, res.alpha.canonical(), str(res.value), res.provenance)

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        raw = json.loads(text)
        return cls(
            int(raw["k"]),
            int(raw["n"]),
            str(raw["alpha"]),
            str(raw["value"]),
            str(raw["provenance"]),
        )


def _alpha_type(text: str) -> AvoidanceSpec:
    try:
        return AvoidanceSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _alpha_or_all(text: str):
    if text.strip().lower() == "all":
        return "all"
    return _alpha_type(text)


def _print_record(rec: OutputRecord, fmt: str) -> None:
    if fmt == "json":
        print(rec.to_json())
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["k", "n", "alpha", "value", "provenance"])
        writer.writerow([rec.k, rec.n, rec.alpha, rec.value, rec.provenance])
    else:
        print(rec.value)


def cmd_phi(args) -> int:
    res = phi(args.k, args.n, args.alpha, force_oracle=args.oracle, max_cells=args.max_cells)
    _print_record(OutputRecord.from_phi(res), args.format)
    return 0


def cmd_oracle(args) -> int:
    value = count_avoiders(args.k, args.n, args.alpha, max_cells=args.max_cells)
    rec = OutputRecord(args.k, args.n, args.alpha.canonical(), str(value), "oracle")
    _print_record(rec, args.format)
    return 0


def cmd_table(args) -> int:
    if args.kmax < 1 or args.nmax < 1:
        raise ValueError("table bounds must be at least 1")
    body = [
        [phi(k, n, args.alpha).value for n in range(1, args.nmax + 1)]
        for k in range(1, args.kmax + 1)
    ]
    if args.format == "json":
        print(json.dumps(body))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow([""] + list(range(1, args.nmax + 1)))
        for k, row in enumerate(body, start=1):
            writer.writerow([k] + row)
    else:
        widths = [
            max(len(str(body[i][j])) for i in range(args.kmax))
            for j in range(args.nmax)
        ]
        for row in body:
            print(" ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    return 0


def cmd_seq(args) -> int:
    if args.count < 1:
        raise ValueError("--count must be at least 1")
    values = [phi(n, n, args.alpha).value for n in range(args.count)]
    if args.bfile:
        # OEIS b-file: "index value" per line, offset 0
        for n, v in enumerate(values):
            print(f"{n} {v}")
    elif args.format == "json":
        print(json.dumps(values))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "value"])
        for n, v in enumerate(values):
            writer.writerow([n, v])
    else:
        print(" ".join(str(v) for v in values))
    return 0


def cmd_egf(args) -> int:
    if args.diag:
        if args.kmax is not None:
            raise ValueError("--diag takes --nmax alone")
        if args.nmax is None or args.nmax < 0:
            raise ValueError("--diag needs a nonnegative --nmax")
        f = egf_diag(args.alpha, order=args.nmax)
        coeffs = [f.coeff(n) for n in range(args.nmax + 1)]
        counts = [egf_to_count(f, n) for n in range(args.nmax + 1)]
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "alpha": args.alpha.canonical(),
                        "order": args.nmax,
                        "coeffs": [str(c) for c in coeffs],
                        "counts": counts,
                    }
                )
            )
        elif args.format == "csv":
            writer = csv.writer(sys.stdout)
            writer.writerow(["n", "coeff", "count"])
            for n in range(args.nmax + 1):
                writer.writerow([n, coeffs[n], counts[n]])
        else:
            for n in range(args.nmax + 1):
                print(f"{n} {coeffs[n]} {counts[n]}")
        return 0
    if args.kmax is None or args.nmax is None:
        raise ValueError("rectangle mode needs both --kmax and --nmax")
    if args.kmax < 0 or args.nmax < 0:
        raise ValueError("orders must be nonnegative")
    f = egf_bivar(args.alpha, korder=args.kmax, norder=args.nmax)
    coeffs = [[f.coeff(k, n) for n in range(args.nmax + 1)] for k in range(args.kmax + 1)]
    counts = [
        [egf_to_count(f, k, n) for n in range(args.nmax + 1)]
        for k in range(args.kmax + 1)
    ]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "alpha": args.alpha.canonical(),
                    "korder": args.kmax,
                    "norder": args.nmax,
                    "coeffs": [[str(c) for c in row] for row in coeffs],
                    "counts": counts,
                }
            )
        )
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["k", "n", "coeff", "count"])
        for k in range(args.kmax + 1):
            for n in range(args.nmax + 1):
                writer.writerow([k, n, coeffs[k][n], counts[k][n]])
    else:
        for k in range(args.kmax + 1):
            for n in range(args.nmax + 1):
                print(f"{k} {n} {coeffs[k][n]} {counts[k][n]}")
    return 0


# --- verification harness ---------------------------------------------------

_GAMMA_DIAGONAL = (
    1, 2, 12, 128, 2100, 48032,
    1444212, 54763088, 2540607060, 140893490432,
)

_T_DIAGONAL = (
    1, 2, 14, 200, 3536, 67472,
    1423168, 34048352, 927156224, 28490354432,
)

# counts for 1 <= k, n <= 7; zero once both sides reach 5 (the bipartite
# Ramsey bound), with the last nonzero stragglers in rows/columns 3 and 4
_TABLE_JO = (
    (2, 4, 8, 16, 32, 64, 128),
    (4, 14, 44, 128, 352, 928, 2368),
    (8, 44, 156, 408, 720, 720, 0),
    (16, 128, 408, 840, 720, 720, 0),
    (32, 352, 720, 720, 0, 0, 0),
    (64, 928, 720, 720, 0, 0, 0),
    (128, 2368, 0, 0, 0, 0, 0),
)

_INCLUSION_PAIRS = (
    ("GAMMA", "GAMMA,C"),
    ("C", "GAMMA,C"),
    ("T", "T,L"),
    ("L", "T,L"),
    ("J", "J,O"),
    ("O", "J,O"),
    ("I", "I,GAMMA"),
)

_DIAG_SEQUENCES = {"GAMMA": _GAMMA_DIAGONAL, "T": _T_DIAGONAL}


class _Report:
    """Runs named checks, prints one line each, tallies failures."""

    def __init__(self, quiet: bool):
        self.quiet = quiet
        self.passed = 0
        self.failed = 0

    def run(self, name: str, fn) -> None:
        try:
            fn()
        except Exception as exc:
            self.failed += 1
            print(f"FAIL - {name}: {exc}")
        else:
            self.passed += 1
            if not self.quiet:
                print(f"ok - {name}")


def _check_orbits() -> None:
    owner: dict = {}
    sizes = {}
    for sym in SYMBOLS:
        orbit = class_orbit(sym)
        sizes[sym] = len(orbit)
        for p in orbit:
            assert p not in owner, f"{p} lies in both {owner.get(p)} and {sym}"
            owner[p] = sym
    assert len(owner) == 16, f"orbits cover {len(owner)} of 16 matrices"
    expected = {"I": 2, "GAMMA": 4, "C": 4, "T": 2, "L": 2, "J": 1, "O": 1}
    assert sizes == expected, f"orbit sizes {sizes} != {expected}"


def _check_boundaries() -> None:
    for key in FORMULA_ALPHAS + ("J",):
        spec = AvoidanceSpec.parse(key)
        for force in (False, True):
            got = phi(0, 0, spec, force_oracle=force).value
            assert got == 1, f"phi(0,0;{key}) = {got} (force_oracle={force})"
            for m in (1, 2, 3):
                row = phi(m, 0, spec, force_oracle=force).value
                col = phi(0, m, spec, force_oracle=force).value
                assert row == 0 and col == 0, (
                    f"edge counts for {key} at m={m}: {row}, {col}"
                )


def _check_formula_vs_oracle(key: str, max_cells: int) -> None:
    spec = AvoidanceSpec.parse(key)
    for k in range(1, max_cells + 1):
        for n in range(1, max_cells // k + 1):
            want = phi(k, n, spec).value
            got = count_avoiders(k, n, spec)
            assert want == got, f"phi({k},{n};{key}): formula {want}, oracle {got}"


def _check_egf_bivar(key: str, order: int) -> None:
    f = egf_bivar(key, korder=order, norder=order)
    for k in range(order + 1):
        for n in range(order + 1):
            want = phi(k, n, key).value
            got = egf_to_count(f, k, n)
            assert want == got, f"[x^{k} y^{n}] for {key}: series {got}, formula {want}"


def _check_egf_diag(key: str, order: int) -> None:
    f = egf_diag(key, order=order)
    for n in range(order + 1):
        want = phi(n, n, key).value
        got = egf_to_count(f, n)
        assert want == got, f"diagonal n={n} for {key}: series {got}, formula {want}"


def _check_diag_sequence(key: str) -> None:
    expected = _DIAG_SEQUENCES[key]
    got = tuple(phi(n, n, key).value for n in range(len(expected)))
    assert got == expected, f"diagonal for {key}: {got} != {expected}"


def _check_jo_table() -> None:
    for k in range(1, 8):
        for n in range(1, 8):
            want = _TABLE_JO[k - 1][n - 1]
            got = phi_jo(k, n)
            assert got == want, f"phi({k},{n};J,O) = {got}, table says {want}"


def _check_jo_adjudication() -> None:
    spec = AvoidanceSpec.parse("J,O")
    for k, n, want in ((3, 3, 156), (4, 4, 840)):
        got = count_avoiders(k, n, spec)
        form = phi_jo(k, n)
        assert got == form == want, (
            f"phi({k},{n};J,O): oracle {got}, formula {form}, expected {want}"
        )


def _check_eq2(key: str) -> None:
    full = egf_bivar(key, korder=6, norder=6)
    short = egf_bivar_eq2(key, korder=6, norder=6)
    assert eq2_compare(full, short), (
        f"reduced form for {key} drifts somewhere in 2..6 x 2..6"
    )


def _check_function_count() -> None:
    for k in range(13):
        for n in range(13):
            lhs = function_count_identity_lhs(k, n)
            rhs = function_count_identity_rhs(k, n)
            assert lhs == rhs, f"function-count identity at ({k},{n}): {lhs} != {rhs}"


def _check_stirling_egf() -> None:
    order = 10
    ex = USeries.var(order).exp()
    for m in range(6):
        lhs = USeries(
            Fraction(stirling2(n + 1, m + 1), factorial(n)) for n in range(order + 1)
        )
        rhs = ex * (ex - 1) ** m * Fraction(1, factorial(m))
        assert lhs == rhs, f"Stirling column series differs at m={m}"


def _check_lambert() -> None:
    order = 10
    w = lambert_w(order)
    assert w * w.exp() == USeries.var(order), "W e^W != x through order 10"


def _check_bernoulli_series() -> None:
    order = 12
    z = USeries.var(order + 1)  # shift_down below costs one order
    den = (z.exp() - 1).shift_down(1)  # (e^z - 1)/z, constant term 1
    ratio = z.exp() / den  # z e^z / (e^z - 1)
    for n in range(order + 1):
        want = bernoulli(n)
        got = ratio.coeff(n) * factorial(n)
        assert got == want, f"Bernoulli mismatch at n={n}: series {got}, sum {want}"


def _check_jo_polynomial() -> None:
    f = egf_diag("J,O", order=8)
    expected = tuple(map(Fraction, (1, 2, 7, 26, 35, 0, 0, 0, 0)))
    got = tuple(f.coeff(n) for n in range(9))
    assert got == expected, f"diagonal series is {got}"


def _check_diag_truncation_stability() -> None:
    small = egf_diag("I", order=8)
    big = egf_diag("I", order=12)
    assert small.coeffs == big.coeffs[:9], (
        "coefficients of the I diagonal shift with truncation order"
    )


def _check_bijections() -> None:
    rng = random.Random(20260815)
    singles = [AvoidanceSpec((sym,)) for sym in SYMBOLS]
    for _ in range(200):
        k = rng.randint(1, 4)
        n = rng.randint(1, 4)
        m = BitMatrix(k, n, tuple(rng.getrandbits(n) for _ in range(k)))
        comp = complement(m)
        tr = transpose(m)
        for spec in singles:
            assert avoids(m, spec) == avoids(comp, complement_image(spec)), (
                f"complement bijection breaks for {spec} on {m.to_rows()}"
            )
            assert avoids(m, spec) == avoids(tr, transpose_image(spec)), (
                f"transpose bijection breaks for {spec} on {m.to_rows()}"
            )


def _check_count_symmetries() -> None:
    for k in range(7):
        for n in range(7):
            assert phi_t(k, n) == phi_l(n, k), f"T/L transpose fails at ({k},{n})"
            assert phi_gamma(k, n) == phi_c(k, n), (
                f"GAMMA/C complement fails at ({k},{n})"
            )
            assert phi_gamma(k, n) == phi_gamma(n, k), (
                f"GAMMA transpose symmetry fails at ({k},{n})"
            )
            assert phi_jo(k, n) == phi_jo(n, k), (
                f"J,O transpose symmetry fails at ({k},{n})"
            )


def _check_monotonicity(max_cells: int) -> None:
    bound = min(max_cells, 12)
    for small, large in _INCLUSION_PAIRS:
        s = AvoidanceSpec.parse(small)
        l = AvoidanceSpec.parse(large)
        for k in range(1, bound + 1):
            for n in range(1, bound // k + 1):
                more = count_avoiders(k, n, l)
                fewer = count_avoiders(k, n, s)
                assert more <= fewer, (
                    f"phi({k},{n};{large}) = {more} > phi({k},{n};{small}) = {fewer}"
                )


def cmd_verify(args) -> int:
    guard = oracle_max_cells()
    if args.max_cells > guard:
        print(
            f"error: --max-cells {args.max_cells} exceeds the oracle guard ({guard})",
            file=sys.stderr,
        )
        return 2
    if args.max_cells < 1 or args.egf_order < 0:
        print("error: --max-cells must be >= 1 and --egf-order >= 0", file=sys.stderr)
        return 2
    selected = FORMULA_ALPHAS if args.alpha == "all" else (args.alpha.canonical(),)
    rep = _Report(args.quiet)

    rep.run("the seven orbits partition the sixteen 2x2 matrices", _check_orbits)
    rep.run("boundary conventions hold on every dispatch path", _check_boundaries)
    for key in selected:
        rep.run(
            f"formula matches oracle for {key} on all grids up to {args.max_cells} cells",
            lambda key=key: _check_formula_vs_oracle(key, args.max_cells),
        )
    for key in selected:
        if key in BIVAR_ALPHAS:
            rep.run(
                f"bivariate series matches formula for {key} through ({args.egf_order},{args.egf_order})",
                lambda key=key: _check_egf_bivar(key, args.egf_order),
            )
        if key in DIAG_ALPHAS:
            rep.run(
                f"diagonal series matches formula for {key} through order {args.egf_order + 2}",
                lambda key=key: _check_egf_diag(key, args.egf_order + 2),
            )
        if key in _DIAG_SEQUENCES:
            rep.run(
                f"first ten diagonal terms for {key}",
                lambda key=key: _check_diag_sequence(key),
            )
        if key in EQ2_ALPHAS:
            rep.run(
                f"reduced series for {key} agrees on indices 2..6",
                lambda key=key: _check_eq2(key),
            )
    if "J,O" in selected:
        rep.run("the 7x7 count table for J,O", _check_jo_table)
        rep.run(
            "disputed cells (3,3) and (4,4) for J,O: oracle rules 156 and 840",
            _check_jo_adjudication,
        )
        rep.run("the J,O diagonal series is the degree-4 polynomial", _check_jo_polynomial)
    rep.run("function-count identity for k,n <= 12", _check_function_count)
    rep.run("Stirling column series identity for m <= 5", _check_stirling_egf)
    rep.run("W e^W = x through order 10", _check_lambert)
    rep.run("Bernoulli sum matches z e^z/(e^z - 1) for n <= 12", _check_bernoulli_series)
    rep.run("I diagonal coefficients are truncation-stable", _check_diag_truncation_stability)
    rep.run("complement/transpose bijections on random matrices", _check_bijections)
    rep.run("count-level transpose and complement symmetries", _check_count_symmetries)
    rep.run("monotonicity under class-set inclusion", lambda: _check_monotonicity(args.max_cells))

    total = rep.passed + rep.failed
    print(f"{rep.passed} of {total} checks passed")
    return 0 if rep.failed == 0 else 1


# --- parser and dispatch ----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matrixavoid",
        description="Count (0,1)-matrices avoiding 2x2 submatrix pattern classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("plain", "csv", "json"), default="plain",
        help="output format (default plain)",
    )
    common.add_argument("--quiet", action="store_true", help="print less")

    p = sub.add_parser("phi", parents=[common], help="count avoiders of a class set")
    p.add_argument("--alpha", type=_alpha_type, required=True, metavar="SPEC")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="force exhaustive counting")
    p.add_argument("--max-cells", type=int, default=None, help="override the oracle guard")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("oracle", parents=[common], help="raw exhaustive count")
    p.add_argument("--alpha", type=_alpha_type, required=True, metavar="SPEC")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--max-cells", type=int, default=None, help="override the oracle guard")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("table", parents=[common], help="grid of counts")
    p.add_argument("--alpha", type=_alpha_type, required=True, metavar="SPEC")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("seq", parents=[common], help="diagonal sequence phi(n,n)")
    p.add_argument("--alpha", type=_alpha_type, required=True, metavar="SPEC")
    p.add_argument(
        "--diagonal", action="store_true",
        help="accepted for clarity; sequences are always diagonal",
    )
    p.add_argument("--count", type=int, required=True, help="number of terms, from n=0")
    p.add_argument("--bfile", action="store_true", help="emit OEIS b-file lines")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("egf", parents=[common], help="generating-function coefficients")
    p.add_argument("--alpha", type=_alpha_type, required=True, metavar="SPEC")
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--diag", action="store_true", help="diagonal series instead of bivariate")
    p.set_defaults(func=cmd_egf)

    p = sub.add_parser("verify", parents=[common], help="run the verification harness")
    p.add_argument(
        "--alpha", type=_alpha_or_all, default="all", metavar="SPEC",
        help='a class set or "all" (default)',
    )
    p.add_argument("--max-cells", type=int, default=16, help="formula-vs-oracle grid bound")
    p.add_argument("--egf-order", type=int, default=6, help="series comparison order")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
