"""Throughput comparison of the compiled and pure-Python sim kernels.

Runs identical MLP-policy rollouts through both backends, checks the
outputs agree bitwise, and reports rollouts/second plus the speedup.

    python3 benchmarks/bench_sim.py --horizon 400 --repeats 50
"""

import argparse
import time

import numpy as np

from promptmaze.maze import MLPPolicy, default_map
from promptmaze.maze.backend import BACKEND, get_backend
from promptmaze.maze.env import OMEGA_MAX, R_MAX, R_ROBOT, V_MAX


def run_rollouts(kernel, policies, walls, m, horizon):
    states = np.empty((horizon + 1, 3), dtype=np.float64)
    obs = np.empty((horizon + 1, 5), dtype=np.float64)
    acts = np.empty((horizon, 2), dtype=np.float64)
    t0 = time.perf_counter()
    for pol in policies:
        kernel.rollout_mlp(pol.genome, np.asarray(pol.sizes, dtype=np.int64),
                           walls, m.width, m.height,
                           V_MAX, OMEGA_MAX, R_ROBOT, R_MAX,
                           horizon, m.start[0], m.start[1], 0.0,
                           states, obs, acts)
    return time.perf_counter() - t0, states.copy()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--horizon", type=int, default=400)
    ap.add_argument("--repeats", type=int, default=50,
                    help="rollouts per backend")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    m = default_map()
    walls = m.wall_array()
    rng = np.random.default_rng(args.seed)
    policies = [MLPPolicy.random(rng) for _ in range(args.repeats)]

    try:
        compiled = get_backend("compiled")
    except Exception:
        compiled = None
    python = get_backend("python")

    _, py_states = run_rollouts(python, policies[:1], walls, m, args.horizon)
    if compiled is not None:
        _, c_states = run_rollouts(compiled, policies[:1], walls, m,
                                   args.horizon)
        agree = np.array_equal(py_states, c_states)
        print(f"backend parity on one rollout: "
              f"{'bitwise identical' if agree else 'MISMATCH'}")

    print(f"active default backend: {BACKEND}")
    print(f"{args.repeats} rollouts, horizon {args.horizon}, "
          f"default map ({len(m.walls)} walls)")
    py_time, _ = run_rollouts(python, policies, walls, m, args.horizon)
    print(f"  python   {args.repeats / py_time:9.1f} rollouts/s   "
          f"({1e3 * py_time / args.repeats:.2f} ms each)")
    if compiled is not None:
        c_time, _ = run_rollouts(compiled, policies, walls, m, args.horizon)
        print(f"  compiled {args.repeats / c_time:9.1f} rollouts/s   "
              f"({1e3 * c_time / args.repeats:.2f} ms each)")
        print(f"  speedup  {py_time / c_time:8.1f}x")
    else:
        print("  compiled extension not built; skipping comparison")


if __name__ == "__main__":
    main()
