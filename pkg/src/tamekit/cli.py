"""Command-line front end: tables, pairings, verifiers, and the suite.

Every subcommand emits machine-readable output (JSON by default, CSV for
the tabular commands) and exits 0 when all requested checks pass, 1 when
a check fails, and 2 on usage errors.  Reports are deterministic: keys
are sorted, orderings are fixed, and nothing time- or path-dependent is
written, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .characters import CharTable, VirtualChar
from .cyclotomic import CycNum
from .gaussjacobi import (MultChar, gauss_sum, j_star, verify_gauss_identities,
                          verify_jstar)
from .groups import FiniteGroup, PRESET_NAMES, cycle_string, parse_cycles, preset
from .ledger import build_f, crux_check, decompose, norm_restrict, recompose
from .localmodel import verify_factorization, verify_kummer_generator
from .padic import is_prime
from .stickelberger import (pairing, pairing_table, star_pairing,
                            verify_adams_identities,
                            verify_induction_identities)


class UsageError(Exception):
    pass


DEFAULT_CONFIG = {
    "groups": ["C3", "C5", "C7", "C9", "S3", "D5", "A4", "Q8", "F21"],
    "primes": [3, 5, 7, 11, 13, 31],
    "e_values": [3, 5, 7, 9],
    "crux": [[7, 3], [11, 5], [31, 3], [31, 5]],
    "format": "json",
    "precision": None,
}


class SuiteConfig:
    """Validated suite parameters; see DEFAULT_CONFIG for the shape."""

    __slots__ = ("groups", "primes", "e_values", "crux", "format", "precision")

    def __init__(self, data: dict):
        unknown = set(data) - set(DEFAULT_CONFIG)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        merged = {**DEFAULT_CONFIG, **data}
        self.groups = list(merged["groups"])
        for name in self.groups:
            try:
                preset(name)
            except ValueError as ex:
                raise UsageError(str(ex)) from None
        self.primes = [int(p) for p in merged["primes"]]
        for p in self.primes:
            if not is_prime(p):
                raise UsageError(f"configured prime {p} is not prime")
        self.e_values = [int(e) for e in merged["e_values"]]
        for e in self.e_values:
            if e < 1 or e % 2 == 0:
                raise UsageError(f"configured e = {e} must be odd and positive")
        self.crux = [(int(p), int(e)) for p, e in merged["crux"]]
        for p, e in self.crux:
            if e % 2 == 0 or e < 1:
                raise UsageError(f"crux pair ({p}, {e}): e must be odd")
            if not is_prime(p) or (p - 1) % e != 0:
                raise UsageError(
                    f"crux pair ({p}, {e}): need p prime with e dividing p-1")
            if e % p == 0:
                raise UsageError(f"crux pair ({p}, {e}): not coprime")
        self.format = merged["format"]
        if self.format not in ("json", "csv"):
            raise UsageError(f"format must be json or csv, got {self.format!r}")
        self.precision = merged["precision"]
        if self.precision is not None and int(self.precision) < 1:
            raise UsageError("precision must be a positive integer")


def _dump(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _cyc_str(c: CycNum) -> str:
    if c.is_rational():
        return str(c.as_rational())
    bits = []
    for e, q in sorted(c.coeffs.items()):
        if e == 0:
            bits.append(f"{q}")
        elif q == 1:
            bits.append(f"z{c.n}^{e}")
        else:
            bits.append(f"({q})*z{c.n}^{e}")
    return " + ".join(bits)


def _resolve_group(name: str) -> FiniteGroup:
    try:
        return preset(name)
    except ValueError as ex:
        raise UsageError(str(ex)) from None


def _resolve_element(G: FiniteGroup, text: str) -> int:
    if text in G.names:
        return G.names.index(text)
    try:
        i = int(text)
    except ValueError:
        pass
    else:
        if not 0 <= i < G.n:
            raise UsageError(f"element index {i} out of range 0..{G.n - 1}")
        return i
    try:
        name = cycle_string(parse_cycles(text))
    except ValueError as ex:
        raise UsageError(f"cannot parse element {text!r}: {ex}") from None
    if name in G.names:
        return G.names.index(name)
    raise UsageError(f"element {text!r} not in group; names: {G.names}")


def _write_or_print(text: str, out: str | None, filename: str) -> None:
    if out:
        path = Path(out)
        path.mkdir(parents=True, exist_ok=True)
        (path / filename).write_text(text)
        print(f"wrote {path / filename}")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def cmd_chartab(args) -> int:
    G = _resolve_group(args.group)
    table = CharTable.of(G)
    cert = table.certify()
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["chi", "degree"] + list(table.to_dict()["class_reps"]))
        for t in range(table.k):
            w.writerow([f"chi{t}", table.degrees[t]]
                       + [_cyc_str(table.value(t, j)) for j in range(table.k)])
        _write_or_print(buf.getvalue(), args.out, f"chartab-{args.group}.csv")
    else:
        report = {"suite": "character table", "group": args.group,
                  "table": table.to_dict(), "certification": cert}
        _write_or_print(_dump(report), args.out, f"chartab-{args.group}.json")
    return 0 if cert["pass"] else 1


def cmd_pairing(args) -> int:
    G = _resolve_group(args.group)
    s = _resolve_element(G, args.s)
    if args.star and G.element_order(s) % 2 == 0:
        raise UsageError(
            f"starred pairing needs odd |s|; |{G.names[s]}| is even")
    report = pairing_table(G, s, star=args.star, label=args.group)
    stem = f"pairing-{args.group}-{s}" + ("-star" if args.star else "")
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["chi", "degree", "value"])
        for row in report["rows"]:
            w.writerow([row["chi"], row["degree"], row["value"]])
        _write_or_print(buf.getvalue(), args.out, stem + ".csv")
    else:
        _write_or_print(_dump(report), args.out, stem + ".json")
    return 0


def cmd_localmodel_verify(args) -> int:
    G = _resolve_group(args.group)
    s = _resolve_element(G, args.s)
    t = _resolve_element(G, args.t) if args.t is not None else None
    report = {"suite": "localmodel verify",
              "factorization": verify_factorization(G, s, t=t, q=args.q,
                                                    label=args.group)}
    if args.n is not None:
        report["kummer"] = verify_kummer_generator(
            G.element_order(s), args.n, q=args.q, precision=args.precision)
    report["pass"] = all(
        report[k]["pass"] for k in ("factorization", "kummer") if k in report)
    _write_or_print(_dump(report), args.out,
                    f"localmodel-{args.group}-{s}.json")
    return 0 if report["pass"] else 1


def cmd_gauss(args) -> int:
    p = args.p
    d = args.order if args.order is not None else p - 1
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    if d < 1 or (p - 1) % d != 0:
        raise UsageError(f"order {d} does not divide {p} - 1")
    values = []
    for a in range(d):
        chi = MultChar(p, d, a)
        values.append({"a": a, "order": chi.order,
                       "tau": gauss_sum(chi).to_dict(),
                       "jstar": j_star(chi).to_dict()})
    report = {"suite": "gauss", "p": p, "d": d, "values": values,
              "identities": verify_gauss_identities(p),
              "jstar_checks": verify_jstar(p, d)}
    report["pass"] = report["identities"]["pass"] and report["jstar_checks"]["pass"]
    _write_or_print(_dump(report), args.out, f"gauss-p{p}-d{d}.json")
    return 0 if report["pass"] else 1


def cmd_crux(args) -> int:
    if args.e % 2 == 0 or args.e < 1:
        raise UsageError(f"e must be odd and positive, got {args.e}")
    if not is_prime(args.p) or (args.p - 1) % args.e != 0:
        raise UsageError(f"need p prime with e | p-1; got p={args.p}, e={args.e}")
    report = crux_check(args.p, args.e, precision=args.precision)
    _write_or_print(_dump(report), args.out, f"crux-p{args.p}-e{args.e}.json")
    return 0 if report["pass"] else 1


DEFAULT_PLACES = {
    "group": "S3",
    "places": [
        {"label": "v7", "q": 7, "s": "(1 2 3)"},
        {"label": "v13", "q": 13, "s": "(1 2 3)"},
        {"label": "v5", "q": 5, "s": "()"},
    ],
}


def _ledger_demo_report(data: dict) -> dict:
    G = _resolve_group(data["group"])
    table = CharTable.of(G)
    places = []
    for pl in data["places"]:
        places.append((pl["label"], int(pl["q"]),
                       _resolve_element(G, str(pl["s"]))))
    f = build_f(G, places)
    parts = decompose(f)
    round_trip = recompose(parts) == f

    exponents_ok = True
    exp_rows = []
    for label, _, s in places:
        hom = f.hom(label)
        for i in range(table.k):
            chi = VirtualChar.irreducible(table, i)
            want = star_pairing(chi, s) - pairing(chi, s)
            got = hom.value(i).monomial_parts()
            ok = got is not None and got[0] == want and got[1] == \
                CycNum.from_rational(1)
            exponents_ok = exponents_ok and ok
            exp_rows.append({"place": label, "chi": f"chi{i}",
                             "exponent": str(want), "pass": ok})

    first = f.hom(places[0][0])
    identity_ok = norm_restrict(first, [1]) == first
    report = {
        "suite": "ledger-demo",
        "group": data["group"],
        "family": f.to_dict(),
        "factors": len(parts),
        "round_trip": round_trip,
        "exponents": exp_rows,
        "norm_restrict_identity": identity_ok,
        "pass": round_trip and exponents_ok and identity_ok,
    }
    return report


def cmd_ledger_demo(args) -> int:
    if args.places:
        try:
            data = json.loads(Path(args.places).read_text())
        except (OSError, json.JSONDecodeError) as ex:
            raise UsageError(f"cannot read places file: {ex}") from None
    else:
        data = DEFAULT_PLACES
    report = _ledger_demo_report(data)
    _write_or_print(_dump(report), args.out, "ledger-demo.json")
    return 0 if report["pass"] else 1


# ------------------------------------------------------------------- suite

def _suite_reports(config: SuiteConfig):
    """Yield (name, report) pairs in a fixed order."""
    for name in config.groups:
        G = preset(name)
        checks = [verify_induction_identities(G, s, label=name)
                  for s in range(G.n)]
        checks += [verify_adams_identities(G, s, label=name)
                   for s in range(G.n) if G.element_order(s) % 2 == 1]
        yield f"identities-{name}", {
            "suite": "stickelberger-identities", "group": name,
            "checks": checks, "pass": all(c["pass"] for c in checks)}

        cert = CharTable.of(G).certify()
        yield f"chartab-{name}", {"suite": "chartab", "group": name, **cert}

        fac = [verify_factorization(G, s, label=name)
               for s in range(G.n) if G.element_order(s) % 2 == 1]
        yield f"factorization-{name}", {
            "suite": "factorization", "group": name,
            "checks": fac, "pass": all(c["pass"] for c in fac)}

    for e in config.e_values:
        offsets = [0] if e == 1 else [0, (1 - e) // 2, 1, e - 1]
        checks = [verify_kummer_generator(e, n, precision=config.precision)
                  for n in offsets]
        yield f"kummer-e{e}", {"suite": "kummer", "e": e, "checks": checks,
                               "pass": all(c["pass"] for c in checks)}

    for p in config.primes:
        ident = verify_gauss_identities(p)
        jst = verify_jstar(p)
        yield f"gauss-p{p}", {"suite": "gauss", "p": p, "identities": ident,
                              "jstar": jst,
                              "pass": ident["pass"] and jst["pass"]}

    yield "ledger-demo", _ledger_demo_report(DEFAULT_PLACES)

    for p, e in config.crux:
        yield f"crux-p{p}-e{e}", crux_check(p, e, precision=config.precision)


def run_suite(config: SuiteConfig, out_dir: str) -> int:
    """Run every verifier, write one report per check, return exit code."""
    path = Path(out_dir)
    path.mkdir(parents=True, exist_ok=True)
    summary = []
    failed = []
    for name, report in _suite_reports(config):
        (path / f"{name}.json").write_text(_dump(report))
        ok = bool(report["pass"])
        summary.append({"check": name, "pass": ok})
        if not ok:
            failed.append(name)
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    if config.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "pass"])
        for row in summary:
            w.writerow([row["check"], str(row["pass"]).lower()])
        (path / "summary.csv").write_text(buf.getvalue())
    else:
        (path / "summary.json").write_text(
            _dump({"checks": summary, "pass": not failed}))
    if failed:
        print(f"first failing check: {failed[0]}", file=sys.stderr)
        return 1
    return 0


def _load_config(path_text: str | None) -> dict:
    if path_text is None:
        return {}
    path = Path(path_text)
    try:
        raw = path.read_bytes()
    except OSError as ex:
        raise UsageError(f"cannot read config: {ex}") from None
    if path.suffix == ".toml":
        try:
            import tomllib
        except ImportError:
            raise UsageError(
                "TOML config needs Python 3.11+; use JSON") from None
        return tomllib.loads(raw.decode())
    try:
        return json.loads(raw)
    except json.JSONDecodeError as ex:
        raise UsageError(f"bad JSON config: {ex}") from None


def cmd_suite(args) -> int:
    data = _load_config(args.config)
    if args.format:
        data["format"] = args.format
    if args.precision is not None:
        data["precision"] = args.precision
    config = SuiteConfig(data)
    return run_suite(config, args.out)


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamekit",
        description="exact verification suites for tame symbolic models")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt=False):
        p.add_argument("--out", help="directory to write reports into")
        if fmt:
            p.add_argument("--format", choices=["json", "csv"],
                           default="json")

    p = sub.add_parser("chartab", help="certified character table")
    p.add_argument("--group", required=True,
                   help=f"preset name ({', '.join(PRESET_NAMES)} or C<n>)")
    add_common(p, fmt=True)
    p.set_defaults(func=cmd_chartab)

    p = sub.add_parser("pairing", help="pairing values for one element")
    p.add_argument("--group", required=True)
    p.add_argument("--s", required=True,
                   help="element index, name, or cycle notation")
    p.add_argument("--star", action="store_true",
                   help="use the symmetric-window pairing")
    add_common(p, fmt=True)
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("localmodel", help="symbolic local-model checks")
    lsub = p.add_subparsers(dest="subcommand", required=True)
    pv = lsub.add_parser("verify", help="factorization and generator checks")
    pv.add_argument("--group", required=True)
    pv.add_argument("--s", required=True)
    pv.add_argument("--t", help="Frobenius image (default: identity)")
    pv.add_argument("--q", type=int, help="residue size (default: inferred)")
    pv.add_argument("--n", type=int,
                    help="also run the generator check at this window offset")
    pv.add_argument("--precision", type=int)
    add_common(pv)
    pv.set_defaults(func=cmd_localmodel_verify)

    p = sub.add_parser("gauss", help="Gauss/Jacobi sums and identity sweep")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--order", type=int, help="character order (default p-1)")
    add_common(p)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("crux", help="p-adic valuation crux check")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--precision", type=int)
    add_common(p)
    p.set_defaults(func=cmd_crux)

    p = sub.add_parser("ledger", help="representing-homomorphism utilities")
    lsub = p.add_subparsers(dest="subcommand", required=True)
    pd = lsub.add_parser("demo", help="build, decompose, recompose a family")
    pd.add_argument("--places", help="JSON file with group and places")
    add_common(pd)
    pd.set_defaults(func=cmd_ledger_demo)

    p = sub.add_parser("suite", help="run every verifier and write reports")
    p.add_argument("--config", help="JSON config file (see docs)")
    p.add_argument("--out", default="reports",
                   help="report directory (default: reports)")
    p.add_argument("--format", choices=["json", "csv"])
    p.add_argument("--precision", type=int)
    p.set_defaults(func=cmd_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2
    except ValueError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
