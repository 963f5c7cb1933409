#!/usr/bin/env python3
"""Compare the compiled and pure-Python polynomial kernels.

Each workload runs in a fresh subprocess with GBOTT_KERNEL forcing one
backend, so the whole library (rings, deciders, search) runs on that
kernel.  Usage:

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = ("census", "normal_forms", "iso_search")


def run_census():
    from gbott import enumerate_towers, full_report

    flags = 0
    for t in enumerate_towers(3, (2,), 1):
        rep = full_report(t)
        flags += rep.q_trivial + rep.z_trivial + rep.total_chern_trivial
    return flags


def run_normal_forms():
    from gbott import CohomRing, Polynomial, StageSpec, TowerSpec

    t = TowerSpec(
        (
            StageSpec(2),
            StageSpec(2, ((1,), (-2,))),
            StageSpec(3, ((2, 1), (0, -1), (1, 1))),
        )
    )
    ring = CohomRing(t)
    total = 0
    p = Polynomial.linear((1, 1, 1)) + Polynomial.linear((2, -1, 3))
    for k in range(1, 10):
        total += len(ring.normal_form(p**k).terms)
    return total


def run_iso_search():
    from gbott import CohomRing, StageSpec, TowerSpec, search_iso

    a = TowerSpec((StageSpec(2), StageSpec(3, ((0,), (0,), (1,)))))
    b = TowerSpec((StageSpec(2), StageSpec(3, ((0,), (0,), (2,)))))
    found = search_iso(CohomRing(a), CohomRing(b), over_integers=True, bound=8)
    return 0 if found is None else 1


def measure(workload: str, repeat: int) -> dict:
    func = globals()[f"run_{workload}"]
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = func()
        best = min(best, time.perf_counter() - t0)
    return {"seconds": best, "result": result}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--worker", choices=WORKLOADS, help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.worker:
        import gbott

        out = measure(args.worker, args.repeat)
        out["backend"] = gbott.kernel_backend
        print(json.dumps(out))
        return 0

    rows = []
    for workload in WORKLOADS:
        timings = {}
        results = set()
        for backend in ("py", "c"):
            env = dict(os.environ, GBOTT_KERNEL=backend)
            proc = subprocess.run(
                [
                    sys.executable,
                    os.path.abspath(__file__),
                    "--worker",
                    workload,
                    "--repeat",
                    str(args.repeat),
                ],
                env=env,
                capture_output=True,
                text=True,
            )
            if proc.returncode != 0:
                print(proc.stderr, file=sys.stderr)
                if backend == "c":
                    print(f"{workload}: compiled backend unavailable, skipping")
                    timings[backend] = None
                    continue
                return 1
            payload = json.loads(proc.stdout)
            if payload["backend"] != backend:
                print(f"warning: asked for {backend}, got {payload['backend']}")
            timings[backend] = payload["seconds"]
            results.add(payload["result"])
        if len(results) > 1:
            print(f"{workload}: BACKENDS DISAGREE: {results}", file=sys.stderr)
            return 1
        rows.append((workload, timings.get("py"), timings.get("c")))

    print(f"{'workload':<14} {'python':>10} {'cython':>10} {'speedup':>9}")
    for name, t_py, t_c in rows:
        if t_py is None or t_c is None:
            print(f"{name:<14} {'-':>10} {'-':>10} {'-':>9}")
            continue
        print(f"{name:<14} {t_py:>9.3f}s {t_c:>9.3f}s {t_py / t_c:>8.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
