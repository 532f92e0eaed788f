"""Command line front end: sequence tables, verification suites, asymptotic
reports, and OEIS b-file cross-checking.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or I/O error.
Exact quantities are printed as decimal integers; asymptotic tables use fixed
precision stated in their header.  JSON output carries schema_version 1.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

import mpmath

from . import asympt, genfunc, monotone, partitions

SCHEMA_VERSION = 1
DEFAULT_TABLE_LIMIT = 5000

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2

DEFAULT_EPS_GRID = asympt.EPS_GRID
DEFAULT_N_GRID = asympt.N_GRID
DEFAULT_DOMINANCE_GRID = asympt.DOMINANCE_GRID


class CliError(Exception):
    """Usage or I/O failure that should exit with status 2."""


@dataclass
class VerificationReport:
    suite: str
    checks: list[tuple[str, str, str]] = field(default_factory=list)
    timing_ms: float = 0.0
    parameters: dict = field(default_factory=dict)

    def add(self, check_id: str, ok: bool, detail: str = "") -> None:
        self.checks.append((check_id, "pass" if ok else "fail", detail))

    @property
    def status(self) -> str:
        return "pass" if all(s == "pass" for _, s, _ in self.checks) else "fail"

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "suite": self.suite,
            "status": self.status,
            "checks": [
                {"check_id": cid, "status": status, "detail": detail}
                for cid, status, detail in self.checks
            ],
            "timing_ms": round(self.timing_ms, 3),
            "parameters": self.parameters,
        }

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {self.status.upper()} "
                 f"({self.timing_ms:.0f} ms, {self.parameters})"]
        for cid, status, detail in self.checks:
            suffix = f" -- {detail}" if detail else ""
            lines.append(f"  [{status.upper():>4}] {cid}{suffix}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# table


def cmd_table(max_n: int, fmt: str, limit: int = DEFAULT_TABLE_LIMIT) -> str:
    if max_n < 1:
        raise CliError("--max must be >= 1")
    if max_n > limit:
        raise CliError(f"--max exceeds the configured limit of {limit}")
    pa = genfunc.series_G1(max_n).table()
    pao = genfunc.series_pa_o(max_n).table()
    if fmt == "csv":
        lines = ["n,pa,pa_o"]
        lines += [f"{n},{pa[n]},{pao[n]}" for n in range(1, max_n + 1)]
        return "\n".join(lines)
    rows = [{"n": n, "pa": pa[n], "pa_o": pao[n]} for n in range(1, max_n + 1)]
    return json.dumps({"schema_version": SCHEMA_VERSION, "rows": rows})


# ---------------------------------------------------------------------------
# verify suites


def _suite_table(report: VerificationReport, max_n: int = 15) -> None:
    expected = [1, 2, 3, 4, 6, 8, 11, 13, 21, 23, 33, 39, 54, 63, 88]
    report.parameters["max_n"] = max_n
    got = genfunc.series_G1(max_n).coefficients
    for n in range(1, min(max_n, 15) + 1):
        report.add(f"pa({n})", got[n - 1] == expected[n - 1],
                   f"expected {expected[n - 1]}, got {got[n - 1]}")


def _suite_oracles(report: VerificationReport, max_n: int = 40) -> None:
    report.parameters["max_n"] = max_n
    dp = partitions.count_pa_dp(max_n)
    g1 = genfunc.series_G1(max_n).table()
    g2 = genfunc.series_G2(max_n).table()
    for n in range(1, max_n + 1):
        pa_set = partitions.enumerate_pa(n)
        ok = len(pa_set) == dp[n - 1] == g1[n] == g2[n]
        report.add(f"count_agreement_n{n}", ok,
                   f"enum={len(pa_set)} dp={dp[n - 1]} G1={g1[n]} G2={g2[n]}")
        conj = {partitions.conjugate(p) for p in pa_set}
        postar = {
            p for p in partitions.partitions_of(n) if partitions.is_postar(p)
        }
        report.add(f"conjugate_bijection_n{n}", conj == postar)


def _suite_genfunc(report: VerificationReport, order: int = 300) -> None:
    report.parameters["order"] = order
    g1 = genfunc.series_G1(order)
    g2 = genfunc.series_G2(order)
    report.add("g1_equals_g2", g1.coefficients == g2.coefficients)
    report.add("g2_integral", bool(g2.irrational_residue_zero),
               "all sqrt5 components cancelled")
    report.add("g1_strictly_increasing",
               all(a < b for a, b in zip(g1.coefficients, g1.coefficients[1:])))
    pao = genfunc.series_pa_o(order)
    report.add("pa_o_constant", pao.constant_term == 1)
    limit = min(order, 40)
    enum_pao = [
        sum(1 for p in partitions.enumerate_pa(n) if partitions.is_pa_smallest_odd(p))
        for n in range(1, limit + 1)
    ]
    report.add("pa_o_matches_enumeration",
               enum_pao == pao.coefficients[:limit])


def _suite_heine(report: VerificationReport, order: int = 200) -> None:
    report.parameters["order"] = order
    from .exactarith import PHI, PHI_INV, Quad5

    report.add("heine_specialization",
               genfunc.heine_check(PHI_INV, -PHI, Quad5(-1), order))
    chain = genfunc.pa_series_identity_chain(order)
    for link in chain.links:
        report.add(f"chain_{link.link_id}", link.passed, link.detail)


def _suite_injection(report: VerificationReport, n_lo: int = 13, n_hi: int = 40) -> None:
    report.parameters["n_range"] = [n_lo, n_hi]
    dp = partitions.count_pa_dp(n_hi)
    for n in range(n_lo, n_hi + 1):
        rep = monotone.verify_injection(n)
        ok = rep.all_ok and sum(rep.case_counts.values()) == dp[n - 1]
        report.add(f"injection_n{n}", ok,
                   f"cases={sum(rep.case_counts.values())} "
                   f"image_valid={rep.image_valid} injective={rep.injective} "
                   f"witness_absent={rep.witness_absent}")


def _suite_asympt(report: VerificationReport, order: int = 2000) -> None:
    report.parameters["order"] = order
    pa = genfunc.series_G1(order).table()
    pao = genfunc.series_pa_o(min(order, 1000)).table()

    ns = [n for n in DEFAULT_N_GRID if n <= order]
    rows = asympt.tauberian_ratio_table(ns, pa)
    gaps = [abs(r.log_ratio) for r in rows]
    report.add("ingham_trend", all(a > b for a, b in zip(gaps, gaps[1:])),
               f"|log ratio| over n={ns}: " + ", ".join(f"{g:.4f}" for g in gaps))

    for name, fn, grid in (
        ("eta", asympt.eta_inversion_check, asympt.EPS_GRID),
        ("auluck", asympt.auluck_product_check, asympt.EPS_GRID),
        ("pa_eval", asympt.eval_PA_diagnostic, asympt.PA_EVAL_EPS_GRID),
    ):
        rows = [fn(eps) for eps in grid]
        gaps = [abs(r.log_ratio) for r in rows]
        report.add(f"{name}_trend", all(a > b for a, b in zip(gaps, gaps[1:])),
                   ", ".join(f"{g:.5f}" for g in gaps))

    ds = [n for n in DEFAULT_DOMINANCE_GRID if n < min(len(pa), len(pao))]
    rows = asympt.pa_o_dominance_table(ds, pa, pao)
    ratios = [r.log_ratio for r in rows]
    report.add("dominance_trend",
               all(a < b for a, b in zip(ratios, ratios[1:])) and ratios[-1] < 0,
               f"pa_o/pa over n={ds}: "
               + ", ".join(f"{math.exp(x):.4f}" for x in ratios))

    a30 = asympt.constant_A(30)
    a60 = asympt.constant_A(60)
    report.add("constant_A_stable", abs(a30 - a60) < mpmath.mpf(10) ** -28,
               f"A = {mpmath.nstr(a30, 15)}")
    integral = asympt.auluck_integral_quadrature(1e-10)
    target = 2 * math.log((1 + 5 ** 0.5) / 2) ** 2
    report.add("auluck_integral", abs(integral - target) < 1e-8,
               f"integral = {integral:.10f}")


_SUITES = {
    "table": _suite_table,
    "oracles": _suite_oracles,
    "genfunc": _suite_genfunc,
    "heine": _suite_heine,
    "injection": _suite_injection,
    "asympt": _suite_asympt,
}


def cmd_verify(suite: str, *, as_json: bool, max_n: int | None = None,
               order: int | None = None) -> tuple[str, int]:
    names = list(_SUITES) if suite == "all" else [suite]
    if suite != "all" and suite not in _SUITES:
        raise CliError(f"unknown suite {suite!r}; choose from "
                       f"{', '.join([*_SUITES, 'all'])}")
    outputs = []
    failed = False
    for name in names:
        report = VerificationReport(suite=name)
        start = time.perf_counter()
        kwargs = {}
        if max_n is not None and name in ("table", "oracles"):
            kwargs["max_n"] = max_n
        if order is not None and name in ("genfunc", "heine", "asympt"):
            kwargs["order"] = order
        if max_n is not None and name == "injection":
            kwargs["n_hi"] = max_n
        _SUITES[name](report, **kwargs)
        report.timing_ms = (time.perf_counter() - start) * 1000
        failed = failed or report.status != "pass"
        outputs.append(report)
    if as_json:
        payload = [r.to_dict() for r in outputs]
        text = json.dumps(payload[0] if suite != "all" else payload)
    else:
        text = "\n".join(r.to_text() for r in outputs)
    return text, EXIT_VERIFICATION_FAILED if failed else EXIT_OK


# ---------------------------------------------------------------------------
# asympt report


def _fmt(value: float, digits: int) -> str:
    return f"{value:.{digits}g}"


def cmd_asympt(ns: list[int], eps: list[float], fmt: str, digits: int) -> str:
    a_value = asympt.constant_A(max(digits, 15))
    integral = asympt.auluck_integral_quadrature(1e-10)

    sections: dict[str, list[asympt.DiagnosticRow]] = {}
    if ns:
        order = max(ns)
        pa = genfunc.series_G1(order).table()
        sections["ingham"] = asympt.tauberian_ratio_table(ns, pa)
        dominance_ns = [n for n in DEFAULT_DOMINANCE_GRID if n <= order]
        if dominance_ns:
            pao = genfunc.series_pa_o(max(dominance_ns)).table()
            sections["dominance"] = asympt.pa_o_dominance_table(
                dominance_ns, pa, pao)
    for name, fn in (("eta", asympt.eta_inversion_check),
                     ("auluck", asympt.auluck_product_check),
                     ("pa_eval", asympt.eval_PA_diagnostic)):
        sections[name] = [fn(e) for e in eps]

    if fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "precision_digits": digits,
            "constant_A": asympt.mpmath.nstr(a_value, digits),
            "auluck_integral": _fmt(integral, digits),
            "tables": {
                name: [
                    {
                        "parameter": _fmt(row.parameter, digits),
                        "lhs": _fmt(row.lhs, digits),
                        "rhs": _fmt(row.rhs, digits),
                        "log_ratio": _fmt(row.log_ratio, digits),
                    }
                    for row in rows
                ]
                for name, rows in sections.items()
            },
        }
        return json.dumps(payload)
    lines = [
        f"# precision: {digits} significant digits",
        f"# A = {asympt.mpmath.nstr(a_value, digits)}",
        f"# integral_log_auluck = {_fmt(integral, digits)}",
        "table,parameter,lhs,rhs,log_ratio",
    ]
    for name, rows in sections.items():
        for row in rows:
            lines.append(
                f"{name},{_fmt(row.parameter, digits)},{_fmt(row.lhs, digits)},"
                f"{_fmt(row.rhs, digits)},{_fmt(row.log_ratio, digits)}"
            )
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# OEIS b-file check


def parse_bfile(path: Path) -> list[tuple[int, int]]:
    """Parse the standard OEIS b-file format: `n a(n)` pairs, # comments."""
    entries: list[tuple[int, int]] = []
    try:
        text = path.read_text()
    except OSError as exc:
        raise CliError(f"cannot read b-file: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise CliError(f"{path}:{lineno}: expected 'n a(n)', got {raw!r}")
        try:
            n, value = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise CliError(f"{path}:{lineno}: non-integer field in {raw!r}") from exc
        if entries and n <= entries[-1][0]:
            raise CliError(f"{path}:{lineno}: indices must be strictly increasing")
        entries.append((n, value))
    return entries


def cmd_oeis_check(bfile: Path, max_n: int) -> tuple[str, int]:
    if max_n < 1:
        raise CliError("--max must be >= 1")
    entries = [(n, v) for n, v in parse_bfile(bfile) if 1 <= n <= max_n]
    if not entries:
        raise CliError(f"no usable entries with 1 <= n <= {max_n} in {bfile}")
    table = genfunc.series_G1(max(n for n, _ in entries)).table()
    for n, value in entries:
        if table[n] != value:
            msg = (f"MISMATCH at n={n}: b-file has {value}, "
                   f"computed pa({n}) = {table[n]}")
            return msg, EXIT_VERIFICATION_FAILED
    return (f"OK: {len(entries)} entries match computed pa(n) "
            f"(checked n up to {entries[-1][0]})"), EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pa",
        description="Exact tools for unlimited parity alternating partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="print n, pa(n), pa_o(n)")
    p_table.add_argument("--max", type=int, required=True, dest="max_n")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--limit", type=int, default=DEFAULT_TABLE_LIMIT,
                         help="safety cap on --max (default %(default)s)")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", required=True,
                          choices=(*_SUITES, "all"))
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--max-n", type=int, default=None, dest="max_n")
    p_verify.add_argument("--order", type=int, default=None)

    p_asympt = sub.add_parser("asympt", help="asymptotic diagnostic tables")
    p_asympt.add_argument("--n", default=",".join(map(str, DEFAULT_N_GRID)),
                          help="comma-separated n grid")
    p_asympt.add_argument("--eps", default=",".join(map(str, DEFAULT_EPS_GRID)),
                          help="comma-separated epsilon grid")
    p_asympt.add_argument("--format", choices=("csv", "json"), default="csv")
    p_asympt.add_argument("--precision", type=int, default=15)

    p_oeis = sub.add_parser("oeis-check", help="cross-check a local OEIS b-file")
    p_oeis.add_argument("--bfile", type=Path, required=True)
    p_oeis.add_argument("--max", type=int, required=True, dest="max_n")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            print(cmd_table(args.max_n, args.format, args.limit))
            return EXIT_OK
        if args.command == "verify":
            text, code = cmd_verify(args.suite, as_json=args.json,
                                    max_n=args.max_n, order=args.order)
            print(text)
            return code
        if args.command == "asympt":
            try:
                ns = [int(x) for x in args.n.split(",") if x]
                eps = [float(x) for x in args.eps.split(",") if x]
            except ValueError as exc:
                raise CliError(f"bad grid: {exc}") from exc
            print(cmd_asympt(ns, eps, args.format, args.precision))
            return EXIT_OK
        if args.command == "oeis-check":
            text, code = cmd_oeis_check(args.bfile, args.max_n)
            print(text)
            return code
        raise CliError(f"unknown command {args.command!r}")
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
