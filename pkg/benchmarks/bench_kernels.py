"""Compare the numba kernels with the interpreted fallback on exhaustive checks.

The backend is fixed at import time, so each side runs in a fresh interpreter
with or without ``TOTALGROUP_NO_NUMBA=1``.

    python3 benchmarks/bench_kernels.py --repeat 3
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = {
    "T(C4) over Z3": ("cycle", 4, "Z3"),
    "T(C3) over Z4": ("cycle", 3, "Z4"),
    "T(C4) over Z4": ("cycle", 4, "Z4"),
}


def _child(repeat: int) -> None:
    from totalgroup import backend
    from totalgroup.derived import total_graph
    from totalgroup.engine import check_group_colorable
    from totalgroup.graph import generate
    from totalgroup.groups import make_group

    out = {"backend": backend(), "rows": {}}
    for label, (family, n, spec) in WORKLOADS.items():
        tg = total_graph(generate(family, n)).graph
        group = make_group(spec)
        run = lambda: check_group_colorable(tg, group)  # noqa: E731
        t0 = time.perf_counter()
        status = run().status  # first call pays for compilation
        first = time.perf_counter() - t0
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            run()
            best = min(best, time.perf_counter() - t0)
        out["rows"][label] = {"status": status, "first": first, "best": best}
    json.dump(out, sys.stdout)


def _measure(no_numba: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("TOTALGROUP_NO_NUMBA", None)
    if no_numba:
        env["TOTALGROUP_NO_NUMBA"] = "1"
    proc = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.child:
        _child(args.repeat)
        return
    fast = _measure(False, args.repeat)
    slow = _measure(True, args.repeat)
    print(f"{'workload':30s} {'status':16s} {fast['backend']:>10s} {slow['backend']:>10s} {'speedup':>8s}")
    for label in WORKLOADS:
        a, b = fast["rows"][label], slow["rows"][label]
        assert a["status"] == b["status"], (label, a["status"], b["status"])
        print(f"{label:30s} {a['status']:16s} {a['best']:9.3f}s {b['best']:9.3f}s "
              f"{b['best'] / a['best']:7.1f}x")


if __name__ == "__main__":
    main()
