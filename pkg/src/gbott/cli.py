"""Command-line front end.

Commands:
    report    <file>            full analysis of one tower
    chern     <file>            stage-bundle Chern classes
    ring      <file>            ring presentation and Poincare ranks
    iso       <fileA> <fileB>   bounded degree-2 isomorphism search
    decompose <file>            reorder a Q-trivial tower, lines first
    enumerate                   census of towers within bounds

Exit codes: 0 success (or witness found), 1 completed but negative
(no witness / not decomposable), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import census as census_mod
from .cohomology import CohomRing
from .errors import GbottError, PreconditionError
from .isosearch import relation_residues, search_iso
from .poly import default_names
from .tower import (
    TowerSpec,
    load_tower,
    matrix_line,
    serialize_tower,
    vector_matrix_transpose,
)
from .triviality import decompose, full_report

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _load(path: str) -> TowerSpec:
    try:
        return load_tower(path)
    except OSError as exc:
        raise GbottError(f"{path}: {exc.strerror or exc}") from exc
    except GbottError as exc:
        raise GbottError(f"{path}: {exc}") from exc


def _names(t: TowerSpec, raw: str | None) -> tuple[str, ...]:
    if raw is None:
        return default_names(t.height)
    names = tuple(n.strip() for n in raw.split(",") if n.strip())
    if len(names) != t.height:
        raise GbottError(
            f"--names gives {len(names)} names for a height-{t.height} tower"
        )
    return names


def _chern_lines(t: TowerSpec, ring: CohomRing, names) -> list[str]:
    lines = ["chern classes:"]
    for cd in ring.chern:
        n = t.dims[cd.stage - 1]
        parts = [
            f"c_{k} = {cd.classes[k].serialize(names)}" for k in range(1, n + 1)
        ]
        lines.append(f"  stage {cd.stage}: " + "; ".join(parts))
    return lines


def cmd_report(args) -> int:
    t = _load(args.file)
    names = _names(t, args.names)
    report = full_report(t)
    if args.json:
        payload = report.to_dict()
        payload["dims"] = list(t.dims)
        payload["matrix"] = [list(r) for r in vector_matrix_transpose(t)]
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    ring = CohomRing(t)
    print(f"tower: height {t.height}, fiber dims {list(t.dims)}")
    print(ring.report(names))
    print("\n".join(_chern_lines(t, ring, names)))
    print(report.to_text(names))
    return EXIT_OK


def cmd_chern(args) -> int:
    t = _load(args.file)
    names = _names(t, args.names)
    ring = CohomRing(t)
    print("\n".join(_chern_lines(t, ring, names)))
    return EXIT_OK


def cmd_ring(args) -> int:
    t = _load(args.file)
    names = _names(t, args.names)
    print(CohomRing(t).report(names))
    return EXIT_OK


def cmd_iso(args) -> int:
    t_src = _load(args.fileA)
    t_tgt = _load(args.fileB)
    src = CohomRing(t_src)
    tgt = CohomRing(t_tgt)
    workers = 1 if args.sequential else (args.workers or _default_workers())
    found = search_iso(
        src,
        tgt,
        over_integers=(args.coeff == "z"),
        bound=args.bound,
        workers=workers,
    )
    if found is None:
        print(f"none within bound {args.bound}")
        return EXIT_NEGATIVE
    print("witness (column j is the image of source generator j):")
    print(found.serialize())
    for i, res in enumerate(relation_residues(found, src, tgt), start=1):
        print(f"residue of relation {i}: {res.serialize()}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    t = _load(args.file)
    try:
        dec = decompose(t)
    except PreconditionError:
        print("tower is not Q-trivial; no decomposition")
        return EXIT_NEGATIVE
    print(f"permutation: {' '.join(str(i) for i in dec.permutation.images)}")
    print(f"bott height: {dec.bott_height}")
    print(f"fiber dims over base: {' '.join(str(n) for n in dec.fiber_dims) or '-'}")
    print("reordered tower:")
    print(serialize_tower(dec.reordered), end="")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    dims = tuple(int(d) for d in args.dims.split(","))
    config = census_mod.EnumerationConfig(
        height=args.height,
        dims=dims,
        coeff_bound=args.bound,
        filters=frozenset(args.filter or ()),
    )
    combo_counts: dict[tuple[bool, bool, bool], int] = {}
    total = 0
    emitted = 0
    for t in census_mod.enumerate_towers(
        config.height, config.dims, config.coeff_bound
    ):
        rep = full_report(t)
        flags = (rep.q_trivial, rep.z_trivial, rep.total_chern_trivial)
        combo_counts[flags] = combo_counts.get(flags, 0) + 1
        total += 1
        wanted = (
            ("q" not in config.filters or rep.q_trivial)
            and ("z" not in config.filters or rep.z_trivial)
            and ("chern" not in config.filters or rep.total_chern_trivial)
        )
        if wanted:
            q, z, c = (int(f) for f in flags)
            print(f"{matrix_line(t)}  q={q} z={z} chern={c}")
            emitted += 1
    print(f"# towers: {total} emitted: {emitted}")
    for flags in sorted(combo_counts, reverse=True):
        q, z, c = (int(f) for f in flags)
        print(f"# q={q} z={z} chern={c}: {combo_counts[flags]}")
    return EXIT_OK


def _default_workers() -> int:
    try:
        return min(4, os.cpu_count() or 1)
    except Exception:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbott",
        description="Exact cohomology computations for generalized Bott towers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_names(p):
        p.add_argument(
            "--names",
            help="comma-separated generator names (default x1,x2,...)",
        )

    p = sub.add_parser("report", help="full analysis of one tower")
    p.add_argument("file")
    add_names(p)
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("chern", help="stage-bundle Chern classes")
    p.add_argument("file")
    add_names(p)
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("ring", help="ring presentation and Poincare ranks")
    p.add_argument("file")
    add_names(p)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("iso", help="bounded degree-2 isomorphism search")
    p.add_argument("fileA")
    p.add_argument("fileB")
    p.add_argument("--coeff", choices=("q", "z"), required=True)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument(
        "--sequential",
        action="store_true",
        help="single process, deterministic witness",
    )
    p.add_argument("--workers", type=int, help="process count (default: cpu count, max 4)")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("decompose", help="reorder a Q-trivial tower, lines first")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", help="census of towers within bounds")
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--dims", required=True, help="comma-separated fiber dims")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument(
        "--filter",
        action="append",
        choices=census_mod.FILTER_KEYS,
        help="emit only towers with this flag (repeatable)",
    )
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GbottError as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
