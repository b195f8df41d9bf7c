"""Command-line front end (`pt`).

Subcommands: element lookup, chart rendering, electron configurations, and
the numerical verification suites.  Exit codes: 0 success, 1 verification
failure, 2 invalid input.  Output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import addresses, catalog, chart, fockrep, quadratic
from .errors import InvalidInputError, VerificationError


@dataclass(frozen=True)
class CliConfig:
    n_max: int = 8
    tolerance_spectra: float = 1e-9
    tolerance_zero: float = 1e-12
    rule: addresses.FillingRule = addresses.MADELUNG
    output_format: str = "text"

    def __post_init__(self):
        if self.n_max < 1:
            raise InvalidInputError(f"n_max must be >= 1, got {self.n_max}")
        if not (self.tolerance_spectra > 0 and self.tolerance_zero > 0):
            raise InvalidInputError("tolerances must be positive")


def _parse_rule(text: str) -> addresses.FillingRule:
    if text.startswith("q="):
        try:
            q = Fraction(text[2:])
        except (ValueError, ZeroDivisionError) as err:
            raise InvalidInputError(f"not a rational filling parameter: {text!r}") from err
        return addresses.FillingRule(q, text)
    return addresses.FillingRule.named(text)


def _rule_label(rule: addresses.FillingRule) -> str:
    return f"{rule.name or 'custom'} (q = {rule.q})"


def _record_lines(rec: addresses.ElementRecord) -> list:
    lines = [
        f"Z: {rec.z}",
        f"name: {rec.name}",
        f"symbol: {rec.symbol or '/'}",
        f"address: {rec.address}",
        f"entry: {rec.entry}",
        f"parity: {rec.parity}",
    ]
    if rec.discovery_year is not None:
        lines.append(f"discovery year: {rec.discovery_year}")
    return lines


def _cmd_element(args) -> int:
    text = args.target.strip()
    if text.lstrip("+-").isdigit():
        rec = addresses.element_record(int(text))
    elif "," in text:
        rec = addresses.element_record(addresses.atomic_number(addresses.Address.parse(text)))
    else:
        rec = addresses.element_by_symbol(text)
    print("\n".join(_record_lines(rec)))
    return 0


def _cmd_table(args) -> int:
    built = chart.build_chart(args.max_z)
    sys.stdout.write(chart.render(built, args.format, scerri_like=args.scerri_like))
    return 0


def _cmd_config(args) -> int:
    rule = _parse_rule(args.rule)
    rec = addresses.element_record(args.z)
    predicted = addresses.electron_configuration(args.z, rule)
    lines = [
        f"Z: {rec.z}",
        f"name: {rec.name}",
        f"rule: {_rule_label(rule)}",
        f"predicted: {predicted.compact()}",
        f"closed core: {predicted.closed_core_count}",
    ]
    if args.diff:
        reference = addresses.table3_reference(args.z)
        status = "matches" if predicted.occupancies() == dict(reference) else "differs"
        lines.append(f"reference: {addresses.format_subshells(reference)}")
        lines.append(f"status: {status}")
    print("\n".join(lines))
    return 0


def _cmd_navigate(args) -> int:
    source = addresses.Address.parse(args.address)
    target = chart.move(source, args.move)
    rec = addresses.element_record(addresses.atomic_number(target))
    print("\n".join([f"target: {target}"] + _record_lines(rec)))
    return 0


# --- verification suites -------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str


def _suite_algebra(cfg: CliConfig) -> list:
    gs = quadratic.build_so42()
    relations = quadratic.verify_so42_relations(gs)
    hermitian = all(quadratic.hermitian_check(f) for f in gs.members.values())
    sp8 = quadratic.closure_report(quadratic.sp8_hermitian_basis())
    so42 = quadratic.closure_report([gs.J(a, b) for a, b in gs.pairs()])
    return [
        Check("relations", relations.ok, f"{relations.passes}/{relations.total} relations hold (exact)"),
        Check("hermiticity", hermitian, "all 15 generators are hermitian"),
        Check("sp8-closure", sp8.closed, "36 hermitian quadratics close under commutation (exact)"),
        Check("so42-closure", so42.closed, "15 generators close under commutation (exact)"),
    ]


def _suite_casimirs(cfg: CliConfig) -> list:
    note = ""
    try:
        report = fockrep.casimir_report(cfg.n_max, cfg.tolerance_spectra)
        values_ok = True
    except VerificationError as err:
        report = err.report
        values_ok = False
        note = f" ({err})"
    scalar_ok = (
        report.max_residual <= report.tolerance
        and report.max_constancy_deviation <= report.tolerance
    )
    return [
        Check(
            "casimir-values",
            values_ok,
            f"c1 = {report.c1_value:.9g}, c2 = {report.c2_value:.3g}, "
            f"c3 = {report.c3_value:.9g} at N_max = {report.n_max}{note}",
        ),
        Check(
            "casimir-scalarity",
            scalar_ok,
            f"max residual {report.max_residual:.3e}, "
            f"max constancy deviation {report.max_constancy_deviation:.3e}",
        ),
    ]


def _suite_catalog(cfg: CliConfig) -> list:
    a1 = catalog.a1_cartan_verify()
    a1_ok = (
        a1.hermitian_pairing_ok
        and tuple(str(r) for r in a1.root_values) == ("(1/2)*sqrt(2)", "(-1/2)*sqrt(2)")
        and a1.casimir_identity_residual == Fraction(1, 4)
    )
    counts = [
        catalog.racah_and_commuting(15, 3),
        catalog.racah_and_commuting(36, 4),
        catalog.racah_and_commuting(3, 1),
    ]
    counts_ok = [(c.racah_number, c.commuting_count) for c in counts] == [(3, 9), (12, 20), (0, 2)]
    tables_ok = (
        len(catalog.GROUP_TABLE) == 8
        and len(catalog.COUNTING_TABLE) == 5
        and len(catalog.FAMILY_TABLE_MIN) == 4
        and len(catalog.EXCEPTIONAL_TABLE) == 5
        and catalog.exceptional_data("E8").discrepancy
    )
    return [
        Check(
            "a1-cartan",
            a1_ok,
            f"rank-1 roots {a1.root_values[0]} and {a1.root_values[1]}; "
            f"identity residual {a1.casimir_identity_residual}",
        ),
        Check("counting", counts_ok, "counting rules: (15,3) -> (3,9), (36,4) -> (12,20), (3,1) -> (0,2)"),
        Check("tables", tables_ok, "tables: 8 groups, 5 counting rows, 4 family minima, 5 exceptionals"),
    ]


def _suite_enumeration(cfg: CliConfig) -> list:
    addrs = addresses.enumerate_addresses(500)
    bijection = all(
        addresses.atomic_number(a) == k and addresses.address_of(k) == a
        for k, a in enumerate(addrs, start=1)
    )
    rows = addresses.table2_rows()
    fidelity = len(rows) == 116 and all(
        addresses.atomic_number(addr) == z and addresses.address_of(z) == addr
        for addr, z, _, _ in rows
    )
    return [
        Check("bijection", bijection, "500/500 enumerated positions match the atomic-number formula"),
        Check("table-fidelity", fidelity, "116/116 dataset rows match the enumeration"),
    ]


def _suite_configs(cfg: CliConfig) -> list:
    d18 = addresses.configuration_diff(18, addresses.MADELUNG)
    d30 = {e.z for e in addresses.configuration_diff(30, addresses.MADELUNG)}
    d99 = {e.z for e in addresses.configuration_diff(99, addresses.MADELUNG)}
    required = {24, 29, 46, 57, 64, 78, 79}
    totals = all(
        addresses.electron_configuration(z, cfg.rule).total == z for z in (1, 26, 57, 103)
    )
    return [
        Check("regular-head", not d18, "madelung matches the reference for Z <= 18"),
        Check("first-exceptions", d30 == {24, 29}, "madelung exceptions below Z = 31: 24, 29"),
        Check(
            "exception-count",
            15 <= len(d99) <= 25 and required <= d99,
            f"madelung exceptions below Z = 100: {len(d99)} elements (about twenty)",
        ),
        Check("totals", totals, "configuration occupancies sum to Z"),
    ]


_SUITES = (
    ("algebra", _suite_algebra),
    ("casimirs", _suite_casimirs),
    ("catalog", _suite_catalog),
    ("enumeration", _suite_enumeration),
    ("configs", _suite_configs),
)


def _cmd_verify(args) -> int:
    cfg = CliConfig(n_max=args.nmax, tolerance_spectra=args.tol)
    selected = [(n, f) for n, f in _SUITES if args.suite in ("all", n)]
    results = [(name, func(cfg)) for name, func in selected]
    ok = all(c.ok for _, checks in results for c in checks)
    if args.as_json:
        payload = {
            "version": 1,
            "ok": ok,
            "suites": [
                {
                    "name": name,
                    "ok": all(c.ok for c in checks),
                    "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
                }
                for name, checks in results
            ],
            "convention_ledger": quadratic.CONVENTION_LEDGER,
        }
        print(json.dumps(payload, indent=2))
    else:
        prefix_suite = args.suite == "all"
        for name, checks in results:
            for c in checks:
                line = c.detail if c.ok else f"FAIL: {c.detail}"
                print(f"[{name}] {line}" if prefix_suite else line)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pt",
        description="periodic system toolkit: addresses, charts, configurations, verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("element", help="look up an element by Z, symbol, or address")
    p.add_argument("target", help="atomic number, symbol, or address like (4,3,5/2,-5/2)")
    p.set_defaults(func=_cmd_element)

    p = sub.add_parser("table", help="render the periodic chart")
    p.add_argument("--max-z", type=int, default=120, dest="max_z")
    p.add_argument("--format", choices=("text", "csv", "json", "html"), default="text")
    p.add_argument("--scerri-like", action="store_true", dest="scerri_like")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("config", help="electron configuration under a filling rule")
    p.add_argument("z", type=int)
    p.add_argument("--rule", default="madelung", help="madelung|hydrogenic|oscillator|half|q=<rational>")
    p.add_argument("--diff", action="store_true", help="compare against the reference dataset")
    p.set_defaults(func=_cmd_config)

    p = sub.add_parser("navigate", help="apply a navigation move to an address")
    p.add_argument("address", help="source address like (3,2,5/2,5/2)")
    p.add_argument("--move", required=True, choices=("same-n", "same-l", "knight"))
    p.set_defaults(func=_cmd_navigate)

    p = sub.add_parser("verify", help="run a numerical verification suite")
    p.add_argument("suite", choices=("algebra", "casimirs", "catalog", "enumeration", "configs", "all"))
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true", dest="as_json")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv) -> int:
    """Dispatch one invocation; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as err:
        return 0 if err.code in (0, None) else 2
    try:
        return args.func(args)
    except InvalidInputError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except VerificationError as err:
        print(f"verification failure: {err}", file=sys.stderr)
        return 1


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
