"""Command-line front end.

Selects a surface, a twisting bundle and a check suite, runs the
verifications and emits a text or JSON report.  Exit codes: 0 all
asserted identities hold, 1 on any mismatch, 2 on usage or configuration
errors, 3 on structural errors (non-constant localization sums, zero
tangent weights, exhausted specializations).

The JSON report is byte-identical for a fixed seed regardless of worker
count; wall-clock timings are zeroed there unless --timings is given.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .errors import (
    InvalidNesting,
    NonConstantSum,
    SpecializationExhausted,
    WrongCoefficientCount,
    ZeroWeightInTangent,
)
from .toric import (
    EquivariantLineBundle,
    ToricSurfaceDescriptor,
    line_bundle,
    surface_from_file,
    surface_hirzebruch,
    surface_p1xp1,
    surface_p2,
)
from .verify import (
    CheckReport,
    case2_check,
    case3_check,
    theorem5_check,
    theorem7_check,
    zprod_table,
)

CHECK_NAMES = ("theorem7", "theorem5", "case2", "case3", "zprod")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    surface: str
    bundle: str
    check: str
    nmax: int
    seed: int
    workers: int
    output: str
    out_path: str | None
    timings: bool


def parse_surface(selector: str) -> ToricSurfaceDescriptor:
    if selector == "p2":
        return surface_p2()
    if selector == "p1xp1":
        return surface_p1xp1()
    m = re.fullmatch(r"fa:(\d+)", selector)
    if m:
        return surface_hirzebruch(int(m.group(1)))
    m = re.fullmatch(r"file:(.+)", selector)
    if m:
        try:
            return surface_from_file(m.group(1))
        except (OSError, ValueError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot load surface file: {exc}") from exc
    raise UsageError(f"unknown surface selector {selector!r}")


def parse_bundle(S: ToricSurfaceDescriptor, selector: str) -> tuple[EquivariantLineBundle, list[int]]:
    """Divisor coefficient list (fan surfaces) or a bundle label."""
    if re.fullmatch(r"-?\d+(,-?\d+)*", selector):
        coeffs = [int(c) for c in selector.split(",")]
        try:
            return line_bundle(S, coeffs), coeffs
        except WrongCoefficientCount as exc:
            raise UsageError(str(exc)) from exc
    try:
        return S.bundle(selector), []
    except KeyError as exc:
        raise UsageError(str(exc)) from exc


def _merge(name: str, reports: list[CheckReport]) -> CheckReport:
    entries = tuple(e for r in reports for e in r.entries)
    return CheckReport(
        name=name,
        entries=entries,
        configs_evaluated=sum(r.configs_evaluated for r in reports),
        millis=sum(r.millis for r in reports),
    )


def run_checks(
    S: ToricSurfaceDescriptor,
    M: EquivariantLineBundle,
    check: str,
    nmax: int,
    seed: int,
    workers: int,
) -> list[CheckReport]:
    reports = []
    wanted = CHECK_NAMES if check == "all" else (check,)
    # the nested-vs-product identity is only asserted on the Fano built-ins
    fano = S.name in ("p2", "p1xp1", "f0", "f1")
    for name in wanted:
        if name == "theorem7":
            reports.append(theorem7_check(S, M, nmax, seed=seed, workers=workers))
        elif name == "theorem5":
            subs = [
                theorem5_check(S, M, n1, n2, seed=seed, workers=workers, asserted=fano)
                for n1 in range(nmax + 1)
                for n2 in range(n1 + 1)
            ]
            merged = _merge("theorem5", subs)
            merged.informational = not fano
            reports.append(merged)
        elif name == "case2":
            subs = [case2_check(S, M, n, seed=seed, workers=workers) for n in range(nmax + 1)]
            reports.append(_merge("case2", subs))
        elif name == "case3":
            subs = [case3_check(S, n, seed=seed, workers=workers) for n in range(nmax + 1)]
            reports.append(_merge("case3", subs))
        elif name == "zprod":
            table = zprod_table(S, M, nmax, seed=seed, workers=workers)
            entries = tuple(
                (n1, n2, table.entries[(n1, n2)], table.entries[(n1, n2)])
                for n1, n2 in table.keys()
            )
            reports.append(
                CheckReport(name="zprod", entries=entries, configs_evaluated=table.configs)
            )
        else:
            raise UsageError(f"unknown check {name!r}")
    return reports


def report_json(
    S: ToricSurfaceDescriptor,
    bundle_coeffs: list[int],
    seed: int,
    reports: list[CheckReport],
    timings: bool,
) -> str:
    doc = {
        "surface": S.name,
        "bundle": bundle_coeffs,
        "seed": seed,
        "checks": [
            {
                "name": r.name,
                "entries": [
                    {"n1": n1, "n2": n2, "lhs": str(lhs), "rhs": str(rhs), "match": lhs == rhs}
                    for n1, n2, lhs, rhs in r.entries
                ],
                "pass": r.passed,
                "informational": r.informational,
                "configs_evaluated": r.configs_evaluated,
                "millis": r.millis if timings else 0,
            }
            for r in reports
        ],
        "pass": all(r.passed or r.informational for r in reports),
    }
    return json.dumps(doc, indent=2) + "\n"


def report_text(reports: list[CheckReport]) -> str:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else ("INFO" if r.informational else "FAIL")
        lines.append(
            f"[{status}] {r.name}  "
            f"(entries={len(r.entries)}, configs={r.configs_evaluated}, {r.millis} ms)"
        )
        for n1, n2, lhs, rhs in r.entries:
            mark = "ok " if lhs == rhs else "BAD"
            lines.append(f"  {mark} (n1={n1}, n2={n2})  lhs={lhs}  rhs={rhs}")
    overall = "PASS" if all(r.passed or r.informational for r in reports) else "FAIL"
    lines.append(f"overall: {overall}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nesthilb",
        description="Verify nested Hilbert scheme identities by exact equivariant localization.",
    )
    p.add_argument("--surface", "-s", default="p2",
                   help="p2 | p1xp1 | fa:<a> | file:<path>")
    p.add_argument("--bundle", "-b", default="O",
                   help="divisor coefficients 'a1,a2,...' or a bundle label (default O)")
    p.add_argument("--check", "-c", default="all", help="|".join(CHECK_NAMES) + "|all")
    p.add_argument("--nmax", "-n", type=int, default=2, help="table truncation order")
    p.add_argument("--seed", type=int, default=0, help="specialization seed")
    p.add_argument("--workers", "-w", type=int, default=1, help="parallel worker count")
    p.add_argument("--output", "-o", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write the report to this path")
    p.add_argument("--timings", action="store_true",
                   help="include wall-clock timings in JSON output")
    return p


def run(config: RunConfig) -> int:
    try:
        if config.check != "all" and config.check not in CHECK_NAMES:
            raise UsageError(f"unknown check {config.check!r}")
        if config.nmax < 0:
            raise UsageError("nmax must be nonnegative")
        if config.workers < 1:
            raise UsageError("workers must be >= 1")
        S = parse_surface(config.surface)
        M, coeffs = parse_bundle(S, config.bundle)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        reports = run_checks(S, M, config.check, config.nmax, config.seed, config.workers)
    except (NonConstantSum, ZeroWeightInTangent, SpecializationExhausted, InvalidNesting) as exc:
        print(
            f"structural error on surface={config.surface} bundle={config.bundle}: {exc}",
            file=sys.stderr,
        )
        return 3

    if config.output == "json":
        text = report_json(S, coeffs, config.seed, reports, config.timings)
    else:
        text = report_text(reports)
    if config.out_path:
        with open(config.out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(r.passed or r.informational for r in reports) else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        surface=args.surface,
        bundle=args.bundle,
        check=args.check,
        nmax=args.nmax,
        seed=args.seed,
        workers=args.workers,
        output=args.output,
        out_path=args.out,
        timings=args.timings,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
