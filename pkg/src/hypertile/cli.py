"""Command-line front end: verification sweeps and deterministic exports.

``verify`` runs the selected suites over a range of sizes and emits one
report record per (suite, n), as text or newline-delimited JSON; the exit
code is 0 only if every record passes.  ``emit`` exports cube sets,
assemblies, per-w slices, identity polynomials, and map formulas, always
in lexicographic label order so output is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import blocks, powersums, qseries, tiling
from .isometry import CATALOG_IDS, named_map
from .lattice import CubeSet
from .report import Report

SUITES = ("tiling", "one_block", "q_identities", "power_sums", "benjamin_orrison")

ASSEMBLIES = ("four_block_stage1", "four_block_final", "s33", "s33_prime")


class UsageError(Exception):
    pass


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected like 1..12") from exc
    if lo < 1:
        raise UsageError(f"sizes start at 1, got {lo}")
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return lo, hi


def _suite_reports(suite: str, n: int, p_max: int) -> list[Report]:
    if suite == "tiling":
        return [
            tiling.verify_block_equivalence(n),
            tiling.first_fitting(n),
            tiling.second_fitting(n),
        ]
    if suite == "one_block":
        return [tiling.one_block_assembly(n)]
    if suite == "q_identities":
        reports = [qseries.lemma_3_4(n)]
        reports += [qseries.verify_identity(ident, n) for ident in qseries.IDENTITY_IDS]
        return reports
    if suite == "power_sums":
        reports = [powersums.verify_base(n)]
        reports += [powersums.verify_beardon(p, n) for p in range(3, p_max + 1)]
        return reports
    if suite == "benjamin_orrison":
        return [tiling.benjamin_orrison(n)]
    raise UsageError(f"unknown suite {suite!r}")


def _record(suite: str, n: int, reports: list[Report]) -> dict:
    failures = [
        f"{r.theorem}: {msg}" for r in reports for msg in r.failures
    ]
    return {
        "suite": suite,
        "n": n,
        "pass": not failures,
        "failures": failures,
    }


def _thread_count() -> int:
    raw = os.environ.get("HYPERTILE_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"HYPERTILE_THREADS must be an integer, got {raw!r}")
    if value < 0:
        raise UsageError(f"HYPERTILE_THREADS must be >= 0, got {value}")
    if value == 0:
        return os.cpu_count() or 1
    return value


def run_verify(
    suites: list[str],
    n_lo: int,
    n_hi: int,
    p_max: int,
    fmt: str,
    out,
) -> int:
    tasks = [(suite, n) for suite in suites for n in range(n_lo, n_hi + 1)]
    workers = _thread_count()
    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(lambda t: _record(t[0], t[1], _suite_reports(*t, p_max)), tasks)
            )
        records = dict(zip(tasks, results))
    else:
        records = {t: _record(t[0], t[1], _suite_reports(*t, p_max)) for t in tasks}

    all_pass = True
    for suite in suites:  # deterministic (suite, n) order
        for n in range(n_lo, n_hi + 1):
            rec = records[(suite, n)]
            all_pass = all_pass and rec["pass"]
            if fmt == "json":
                out.write(json.dumps(rec) + "\n")
            else:
                status = "ok  " if rec["pass"] else "FAIL"
                out.write(f"{status} suite={suite} n={n}\n")
                for msg in rec["failures"]:
                    out.write(f"     {msg}\n")
    if fmt == "text":
        out.write("all checks passed\n" if all_pass else "FAILURES present\n")
    return 0 if all_pass else 1


def _assembly_cubes(assembly: str, n: int) -> list[dict]:
    """Cubes of a named assembly with per-cube provenance."""
    pieces: list[tuple[CubeSet, str, bool, str]] = []
    if assembly == "four_block_stage1":
        for kind in blocks.BLOCK_KINDS:
            pieces.append((blocks.block(kind, n), kind, False, kind))
    elif assembly == "four_block_final":
        sub = blocks.subcomponents(n)
        fit = named_map("phi_C_u") @ named_map("mu_D_C")
        for kind in ("A", "B", "C"):
            pieces.append((blocks.block(kind, n), kind, False, kind))
        pieces.append((blocks.block("D", n) - sub.overhang_d, "D", False, "D"))
        pieces.append((sub.overhang_d.map(fit), "D", True, "relocated_overhang"))
    elif assembly == "s33":
        parts = blocks.partition_sets(n)
        pieces.append((parts.b_cge_d, "B", False, "B_cge_d"))
        pieces.append((parts.a_alt_b, "B", True, "A_alt_b"))
    elif assembly == "s33_prime":
        parts = blocks.partition_sets(n)
        pieces.append((parts.c_cge_d, "C", False, "C_cge_d"))
        pieces.append((parts.a_2le_b_le_a, "C", True, "A_2le_b_le_a"))
    else:
        raise UsageError(
            f"unknown assembly {assembly!r}; known: {', '.join(ASSEMBLIES)}"
        )
    cubes = []
    for cube_set, origin, moved, part in pieces:
        for label in cube_set.raw():
            cubes.append(
                {"label": list(label), "block": origin, "moved": moved, "part": part}
            )
    cubes.sort(key=lambda c: c["label"])
    return cubes


def _emit_payload(args) -> tuple[str, str]:
    """Build (text form, json form) for single-stream emit subcommands."""
    if args.emit_kind == "block":
        cubes = blocks.named_set(args.kind, args.n)
        payload = {
            "id": args.kind,
            "n": args.n,
            "labels": [list(v) for v in cubes.labels],
        }
        text = "\n".join(
            [f"{args.kind} n={args.n} ({len(cubes)} cubes)"]
            + [f"  {v}" for v in cubes.labels]
        )
        return text, json.dumps(payload)
    if args.emit_kind == "assembly":
        cubes = _assembly_cubes(args.assembly, args.n)
        payload = {"id": args.assembly, "n": args.n, "cubes": cubes}
        text = "\n".join(
            [f"{args.assembly} n={args.n} ({len(cubes)} cubes)"]
            + [
                "  {} block={} moved={} part={}".format(
                    tuple(c["label"]), c["block"], c["moved"], c["part"]
                )
                for c in cubes
            ]
        )
        return text, json.dumps(payload)
    if args.emit_kind == "poly":
        if args.identity not in qseries.IDENTITY_IDS:
            raise UsageError(
                f"unknown identity {args.identity!r}; "
                f"known: {', '.join(qseries.IDENTITY_IDS)}"
            )
        lhs, rhs = qseries.identity_sides(args.identity, args.n)
        payload = {
            "identity": args.identity,
            "n": args.n,
            "lhs": lhs.to_json(),
            "rhs": rhs.to_json(),
        }
        text = f"lhs: {lhs.to_text()}\nrhs: {rhs.to_text()}"
        return text, json.dumps(payload)
    if args.emit_kind == "map":
        try:
            iso = named_map(args.id, args.n)
        except ValueError as exc:
            raise UsageError(str(exc))
        payload = {"id": args.id, "map": iso.format_map(), "parity": iso.parity}
        return iso.format_map(), json.dumps(payload)
    raise UsageError(f"unknown emit kind {args.emit_kind!r}")


def _emit_slices(args) -> list[str]:
    """One JSON file per w value, each listing 3-dimensional sub-labels."""
    cubes = _assembly_cubes(args.assembly, args.n)
    by_w: dict[int, list[dict]] = {}
    for c in cubes:
        a, b, cc, d = c["label"]
        by_w.setdefault(d, []).append(
            {
                "label": [a, b, cc],
                "block": c["block"],
                "moved": c["moved"],
                "part": c["part"],
            }
        )
    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for w in sorted(by_w):
        payload = {
            "id": args.assembly,
            "n": args.n,
            "w": w,
            "cubes": sorted(by_w[w], key=lambda c: c["label"]),
        }
        path = out_dir / f"w={w}.json"
        path.write_text(json.dumps(payload) + "\n", encoding="utf-8")
        written.append(str(path))
    return written


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypertile",
        description="Exact verification of the 4D block tilings and their "
        "taxicab q-series identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ver = sub.add_parser("verify", help="run verification sweeps")
    ver.add_argument(
        "--suites",
        default="all",
        help="comma-separated subset of: " + ", ".join(SUITES) + ", or 'all'",
    )
    ver.add_argument("--n", default="1..6", help="size range like 1..12")
    ver.add_argument(
        "--p-max", type=int, default=15, help="largest exponent for power_sums"
    )
    ver.add_argument("--format", choices=("text", "json"), default="text")
    ver.add_argument("--out", default=None, help="write reports to this file")

    emit = sub.add_parser("emit", help="export sets, polynomials, and maps")
    emit_sub = emit.add_subparsers(dest="emit_kind", required=True)

    blk = emit_sub.add_parser("block", help="labels of one block")
    blk.add_argument("--kind", required=True, choices=blocks.named_set_ids())
    blk.add_argument("--n", type=int, required=True)

    asm = emit_sub.add_parser("assembly", help="an assembly with provenance")
    asm.add_argument("--assembly", required=True, choices=ASSEMBLIES)
    asm.add_argument("--n", type=int, required=True)

    slc = emit_sub.add_parser("slices", help="per-w 3D slices of an assembly")
    slc.add_argument("--assembly", required=True, choices=ASSEMBLIES)
    slc.add_argument("--n", type=int, required=True)
    slc.add_argument("--out", default=None, help="output directory")

    pol = emit_sub.add_parser("poly", help="both sides of a q-identity")
    pol.add_argument("--identity", required=True)
    pol.add_argument("--n", type=int, required=True)

    mp = emit_sub.add_parser("map", help="textual form of a catalog map")
    mp.add_argument("--id", required=True, help="one of: " + ", ".join(CATALOG_IDS))
    mp.add_argument("--n", type=int, default=None)

    for p in (blk, asm, pol, mp):
        p.add_argument("--format", choices=("text", "json"), default="json")
        p.add_argument("--out", default=None, help="write output to this file")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            suites = (
                list(SUITES)
                if args.suites == "all"
                else [s.strip() for s in args.suites.split(",") if s.strip()]
            )
            if not suites:
                raise UsageError("no suites selected")
            for s in suites:
                if s not in SUITES:
                    raise UsageError(
                        f"unknown suite {s!r}; known: {', '.join(SUITES)}"
                    )
            n_lo, n_hi = _parse_range(args.n)
            if args.p_max < 3:
                raise UsageError(f"--p-max must be >= 3, got {args.p_max}")
            if args.out:
                with open(args.out, "w", encoding="utf-8") as fh:
                    return run_verify(suites, n_lo, n_hi, args.p_max, args.format, fh)
            return run_verify(
                suites, n_lo, n_hi, args.p_max, args.format, sys.stdout
            )

        if args.emit_kind == "slices":
            if args.n < 1:
                raise UsageError(f"sizes start at 1, got {args.n}")
            for path in _emit_slices(args):
                print(path)
            return 0

        if getattr(args, "n", None) is not None and args.n < 1:
            raise UsageError(f"sizes start at 1, got {args.n}")
        text, payload = _emit_payload(args)
        body = payload if args.format == "json" else text
        if args.out:
            Path(args.out).write_text(body + "\n", encoding="utf-8")
        else:
            print(body)
        return 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
