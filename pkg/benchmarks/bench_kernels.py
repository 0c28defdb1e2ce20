"""Time the hot kernels with numba and with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--order 6] [--repeat 3]

Each backend runs in its own interpreter because the backend is fixed at
import time by LEAFSPAN_DISABLE_NUMBA.  The numba side is warmed up first so
compilation is not counted.
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
from leafspan import _jit
from leafspan.constructions import petersen, petersen_triangle
from leafspan.cycles import circumference, circumference_dp
from leafspan.enumeration import enumerate_connected
from leafspan.invariants import independence
from leafspan.leaf import leaf_number, leaf_number_oracle

order, repeat = int(sys.argv[1]), int(sys.argv[2])
corpus = list(enumerate_connected(order))
tasks = {
    "enumerate": lambda: list(enumerate_connected(order)),
    "leaf_number": lambda: [leaf_number(g) for g in corpus],
    "leaf_oracle": lambda: [leaf_number_oracle(g) for g in corpus],
    "circumference": lambda: [circumference(g) for g in corpus],
    "circumference_dp": lambda: [circumference_dp(g) for g in corpus],
    "independence": lambda: [independence(g) for g in corpus],
    "named": lambda: (leaf_number(petersen()), leaf_number(petersen_triangle()),
                      circumference(petersen_triangle())),
}
for fn in tasks.values():
    fn()
out = {}
for name, fn in tasks.items():
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    out[name] = best
print(json.dumps({"backend": _jit.backend(), "graphs": len(corpus), "seconds": out}))
"""


def run(disable: bool, order: int, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("LEAFSPAN_DISABLE_NUMBA", None)
    if disable:
        env["LEAFSPAN_DISABLE_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKLOAD, str(order), str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--order", type=int, default=6, help="corpus order (default 6)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    fast = run(False, args.order, args.repeat)
    slow = run(True, args.order, args.repeat)
    print(f"corpus: {fast['graphs']} connected graphs of order {args.order}")
    print(f"{'kernel':<18}{fast['backend']:>12}{slow['backend']:>12}{'speedup':>10}")
    for name, t_fast in fast["seconds"].items():
        t_slow = slow["seconds"][name]
        ratio = t_slow / t_fast if t_fast > 0 else float("inf")
        print(f"{name:<18}{t_fast:>11.4f}s{t_slow:>11.4f}s{ratio:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
