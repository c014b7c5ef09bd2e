"""Oracle-equivalence suites shared by the CLI ``selftest`` command."""

from __future__ import annotations

import difflib
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Iterator

from .bott import ext_via_bott
from .extmaps import ext_map_analysis, ext_of_quotient
from .ideals import (enumerate_ideals, parse_ideal, quotient_hilbert_dim,
                     ring_dim, subquotient_dim, z_set)
from .optimization import OptInstance, r_bruteforce, r_closed
from .partitions import enumerate_partitions
from .regularity import reg_quotient
from .subquotient import SubquotLabel, ext_closed_form, make_label

GOLDEN_WINDOW = (-18, -6)
GOLDEN_N = 6
GOLDEN_IDEALS = ("gens:2,1", "pow:4:2", "pfaff:4")
GOLDEN_MAPS = (("gens:2,1", "pow:4:2"),)


@dataclass
class SuiteResult:
    name: str
    ok: bool
    cases: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.name} ({self.cases} cases)"
        return text + (f"\n{self.detail}" if self.detail else "")


def all_labels(n: int, top: int) -> Iterator[SubquotLabel]:
    for z in enumerate_partitions(n // 2, top):
        for l in range(n // 2):
            try:
                yield make_label(z, l, n)
            except ValueError:
                continue


def bott_suite(max_n: int, top: int, window: tuple[int, int], limit: int | None = None) -> SuiteResult:
    cases, bad = 0, []
    for n in range(2, max_n + 1):
        for z, l in all_labels(n, top):
            if limit is not None and cases >= limit:
                break
            cases += 1
            if ext_via_bott(z, l, n, window) != ext_closed_form(z, l, n, window):
                bad.append(f"n={n} z={z} l={l}")
    return SuiteResult("bott-vs-closed-form", not bad, cases, "\n".join(bad[:10]))


def optimization_suite(max_n: int, max_d: int) -> SuiteResult:
    cases, bad = 0, []
    for n in range(2, max_n + 1):
        for k in range(1, n // 2 + 1):
            for q in range(0, 2 * k, 2):
                for d in range(1, max_d + 1):
                    inst = OptInstance(q, k, n, d)
                    expected = r_closed(inst)
                    if expected is None:
                        continue
                    cases += 1
                    got = r_bruteforce(inst)
                    if got != expected:
                        bad.append(f"{inst}: brute force {got}, closed form {expected}")
    return SuiteResult("optimization-closed-form", not bad, cases, "\n".join(bad[:10]))


def hilbert_suite(max_n: int, top: int, max_degree: int) -> SuiteResult:
    cases, bad = 0, []
    for n in range(2, max_n + 1):
        for ideal in enumerate_ideals(n, top, include_unit=True):
            labels = z_set(ideal)
            for deg in range(max_degree + 1):
                cases += 1
                total = sum(subquotient_dim(z, l, n, deg) for z, l in labels)
                if total != quotient_hilbert_dim(ideal, deg):
                    bad.append(f"n={n} {ideal} degree {deg}")
        for deg in range(max_degree + 1):
            # S_deg is the sum of the summands S_{double(y)} W with |y| = deg
            cases += 1
            if sum(subquotient_dim(z, 0, n, deg) for z in enumerate_partitions(n // 2, deg, deg)) != ring_dim(n, deg):
                bad.append(f"n={n} ring dimension in degree {deg}")
    return SuiteResult("hilbert-conservation", not bad, cases, "\n".join(bad[:10]))


def golden_payload() -> dict:
    """The worked n = 6 examples: Ext tables, one map analysis and regularities."""
    n, window = GOLDEN_N, GOLDEN_WINDOW
    ext = {}
    reg = {}
    for spec in GOLDEN_IDEALS:
        ideal = parse_ideal(spec, n)
        ext[spec] = ext_of_quotient(ideal, window).records()
        reg[spec] = reg_quotient(ideal)
    maps = {}
    for big, small in GOLDEN_MAPS:
        analysis = ext_map_analysis(parse_ideal(big, n), parse_ideal(small, n), window)
        maps[f"{big} -> {small}"] = analysis.records()
    return {"n": n, "window": list(window), "ext": ext, "maps": maps, "reg_quotient": reg}


def default_golden_path() -> Path:
    return Path(str(resources.files("pfaffext") / "data" / "golden_g26.json"))


def dump(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=1) + "\n"


def golden_suite(path: Path | None = None) -> SuiteResult:
    path = path or default_golden_path()
    try:
        expected = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        return SuiteResult("golden", False, 0, f"cannot read {path}: {exc}")
    got = golden_payload()
    if got == expected:
        return SuiteResult("golden", True, len(GOLDEN_IDEALS) + len(GOLDEN_MAPS))
    diff = difflib.unified_diff(dump(expected).splitlines(), dump(got).splitlines(),
                                "golden", "computed", lineterm="", n=1)
    return SuiteResult("golden", False, 1, "\n".join(list(diff)[:60]))


SCALES: dict[str, list[Callable[[], SuiteResult]]] = {
    "quick": [
        lambda: bott_suite(7, 3, (-20, 20), limit=20),
        lambda: optimization_suite(6, 5),
        lambda: hilbert_suite(5, 2, 4),
    ],
    "full": [
        lambda: bott_suite(7, 3, (-20, 20)),
        lambda: optimization_suite(8, 8),
        lambda: hilbert_suite(6, 2, 6),
    ],
}


def run(scale: str, golden: Path | None = None) -> list[SuiteResult]:
    if scale not in SCALES:
        raise ValueError(f"unknown scale {scale!r}")
    return [suite() for suite in SCALES[scale]] + [golden_suite(golden)]
