"""Command-line interface: ``pfaffext <command> --n N --ideal SPEC ...``.

Every command prints deterministic JSON (or a table with ``--pretty``).
Exit codes: 0 success, 1 domain error, 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .cohomology import kodaira_verify, sheaf_cohomology_table
from .decomposition import parse_window
from .extmaps import ext_map_analysis, ext_of_quotient
from .ideals import IdealSpec, parse_ideal
from . import regularity as reg
from . import selftest

_RANGE_FLAGS = ("--deg", "--q", "--twist")
_POWER = re.compile(r"^(pfaff|pow|sym|sat):(\d+)(?::(\d+))?$")
_VARIANT = {"pfaff": "ordinary", "pow": "ordinary", "sym": "symbolic", "sat": "saturated"}


class CliParseError(Exception):
    pass


def _glue_negative_ranges(argv: list[str]) -> list[str]:
    # argparse reads "-18..-6" as an option; rewrite to "--deg=-18..-6"
    out, i = [], 0
    while i < len(argv):
        if argv[i] in _RANGE_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def _window(text: str) -> tuple[int, int]:
    try:
        lo, hi = parse_window(text)
    except ValueError as exc:
        raise CliParseError(str(exc)) from None
    if lo > hi:
        raise CliParseError(f"empty range {text!r}")
    return lo, hi


def _ideal(text: str, n: int) -> IdealSpec:
    try:
        return parse_ideal(text, n)
    except SyntaxError as exc:
        raise CliParseError(str(exc)) from None


def _emit(payload, pretty_lines: list[str] | None, pretty: bool) -> None:
    if pretty and pretty_lines is not None:
        print("\n".join(pretty_lines))
    else:
        print(json.dumps(payload, sort_keys=True))


def _ext_lines(records: list[dict]) -> list[str]:
    lines = []
    for r in records:
        role = f"{r['role']:<9} " if "role" in r else ""
        lam = ",".join(map(str, r["lambda"]))
        lines.append(f"{role}Ext^{r['j']:<3} deg {r['degree']:>4}  S_({lam})  x{r['mult']}")
    return lines or ["(no terms)"]


def cmd_ext(args) -> int:
    ideal = _ideal(args.ideal, args.n)
    window = _window(args.deg)
    records = ext_of_quotient(ideal, window, args.threads).records()
    payload = {"n": args.n, "ideal": str(ideal), "window": list(window), "terms": records}
    _emit(payload, _ext_lines(records), args.pretty)
    return 0


def reg_report(text: str, n: int) -> dict:
    ideal = _ideal(text, n)
    quotient = reg.reg_quotient(ideal)
    closed = None
    linear = None
    match = _POWER.match(text.strip())
    if match:
        kind, size, d = match.groups()
        k, d = int(size) // 2, int(d or 1)
        closed = reg.reg_power_closed(k, d, n, _VARIANT[kind])
        if _VARIANT[kind] == "ordinary":
            linear = reg.has_linear_resolution_power(k, d, n)
    elif len(ideal.gens) == 1:
        (x,) = ideal.gens
        closed = reg.reg_basic(x, n)
        linear = reg.has_linear_resolution_basic(x, n)
    if closed is not None and closed != quotient + 1:
        raise AssertionError(f"closed form {closed} disagrees with computed {quotient + 1}")
    degree = reg.generator_degree(ideal)
    if linear is None and degree is not None:
        linear = quotient + 1 == degree
    return {"n": n, "ideal": str(ideal), "reg_quotient": quotient, "reg_ideal": quotient + 1,
            "route": "closed-form" if closed is not None else "computed",
            "linear_resolution": linear, "generator_degree": degree}


def cmd_reg(args) -> int:
    payload = reg_report(args.ideal, args.n)
    lines = [f"{k}: {payload[k]}" for k in sorted(payload)]
    _emit(payload, lines, args.pretty)
    return 0


def cmd_maps(args) -> int:
    if not args.ideal2:
        raise CliParseError("maps needs --ideal2")
    big = _ideal(args.ideal, args.n)
    small = _ideal(args.ideal2, args.n)
    window = _window(args.deg)
    analysis = ext_map_analysis(big, small, window, args.threads)
    labels = {role: sorted(str(x) for x in getattr(analysis, f"{role}_labels"))
              for role in ("kernel", "image", "cokernel")}
    records = analysis.records()
    payload = {"n": args.n, "source": str(big), "target": str(small), "window": list(window),
               "labels": labels, "terms": records}
    _emit(payload, _ext_lines(records), args.pretty)
    return 0


def cmd_cohomology(args) -> int:
    ideal = _ideal(args.ideal, args.n)
    qs = _window(args.q)
    twists = _window(args.twist)
    rows = sheaf_cohomology_table(ideal, qs, twists)
    payload = {"n": args.n, "ideal": str(ideal),
               "rows": [{"q": q, "twist": r, "dim": dim} for q, r, dim in rows]}
    lines = ["q,twist,dim"] + [f"{q},{r},{dim}" for q, r, dim in rows]
    _emit(payload, lines, args.pretty)
    return 0


def cmd_kodaira(args) -> int:
    ideal = _ideal(args.ideal, args.n)
    report = kodaira_verify(ideal)
    checks = [{"label": str(c.label), "t": list(c.t), "j": c.j, "q": c.q, "ok": c.ok,
               "reason": c.reason, "witness": None if c.witness is None else list(c.witness)}
              for c in report.checks]
    payload = {"n": args.n, "ideal": str(ideal), "pass": report.ok,
               "summary": report.summary, "checks": checks}
    lines = [report.summary] + [f"  {c['label']} t={c['t']} q={c['q']}: {c['reason']}" for c in checks]
    _emit(payload, lines, args.pretty)
    return 0 if report.ok else 1


def cmd_selftest(args) -> int:
    golden = Path(args.golden) if args.golden else None
    if args.write_golden:
        path = golden or selftest.default_golden_path()
        path.write_text(selftest.dump(selftest.golden_payload()))
        print(f"wrote {path}")
        return 0
    results = selftest.run(args.scale, golden)
    for r in results:
        print(r.line())
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pfaffext", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ideal=True):
        p.add_argument("--n", type=int, required=True, help="dimension of W")
        if ideal:
            p.add_argument("--ideal", required=True,
                           help="gens:2,1;1,1,1 | pfaff:2k | pow:2k:d | sym:2k:d | sat:2k:d")
        p.add_argument("--pretty", action="store_true", help="human-readable table")
        p.add_argument("--threads", type=int, default=None, help="worker processes")

    p = sub.add_parser("ext", help="Ext_S(S/I, S) in a degree window")
    common(p)
    p.add_argument("--deg", required=True, help="internal degrees lo..hi")
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("reg", help="regularity and linear resolution")
    common(p)
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("maps", help="Ext maps induced by --ideal2 inside --ideal")
    common(p)
    p.add_argument("--ideal2", help="the smaller ideal")
    p.add_argument("--deg", required=True, help="internal degrees lo..hi")
    p.set_defaults(func=cmd_maps)

    p = sub.add_parser("cohomology", help="dim H^q(Y, O_Y(r)) table")
    common(p)
    p.add_argument("--q", required=True, help="cohomological degrees lo..hi")
    p.add_argument("--twist", required=True, help="twists lo..hi")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("kodaira", help="verify vanishing of H^q(Y, O_Y(-j)), q < 2n-4, j > 0")
    common(p)
    p.set_defaults(func=cmd_kodaira)

    p = sub.add_parser("selftest", help="oracle-equivalence suites")
    p.add_argument("scale", nargs="?", default="quick", choices=sorted(selftest.SCALES))
    p.add_argument("--golden", help="golden JSON file to compare against")
    p.add_argument("--write-golden", action="store_true", help="regenerate the golden file")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = _glue_negative_ranges(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CliParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
