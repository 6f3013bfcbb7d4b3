"""Timing comparison of the jit-compiled kernels vs the pure-numpy fallback.

Runs the same workload twice in subprocesses -- once with the default
(compiled) kernels and once with PHASORDYN_NO_NUMBA=1 -- and prints a
small table. Usage:

    python3 benchmarks/bench_kernels.py [--steps 250] [--repeat 3]
"""

import argparse
import os
import subprocess
import sys

WORKLOAD = r"""
import time
import numpy as np
from phasordyn import _kernels
from phasordyn.daesolver import SimulationConfig, simulate
from phasordyn.netcore import Disturbance, load_case

steps = %(steps)d
case = load_case("ieee30")
cfg = SimulationConfig(dt=0.02, t_end=steps * 0.02)
dist = (Disturbance("load_step", "20", 0.08, 0.2),)

# warm-up triggers jit compilation outside the timed region
simulate(case, SimulationConfig(dt=0.02, t_end=0.1), scenario=dist)

t0 = time.perf_counter()
simulate(case, cfg, scenario=dist)
t_sim = time.perf_counter() - t0

# isolated residual benchmark: many evaluations of one step problem
from phasordyn import daesolver as dae
from phasordyn.netcore import AdmittanceMatrix
pf, params, xn, Idn, Iqn, vre, vim = dae.initialize(case)
ybus = AdmittanceMatrix(entries=np.ascontiguousarray(
    dae._build_dynamic_ybus(case, pf)))
sys_arrays = dae.build_system(case, params, {})
prob = dae.StepProblem(sys=sys_arrays, xn=xn, Idn=Idn, Iqn=Iqn,
                       ybus=ybus, dt=0.02)
z = dae._pack_unknowns(sys_arrays, xn, vre, vim)
dae.assemble_residual(prob, z)
n_res = 2000
t0 = time.perf_counter()
for _ in range(n_res):
    dae.assemble_residual(prob, z)
t_res = (time.perf_counter() - t0) / n_res

print("numba=%%d sim_s=%%.4f residual_us=%%.2f"
      %% (int(_kernels.USE_NUMBA), t_sim, 1e6 * t_res))
"""


def run(no_numba: bool, steps: int) -> str:
    env = dict(os.environ)
    env["PHASORDYN_NO_NUMBA"] = "1" if no_numba else "0"
    out = subprocess.run([sys.executable, "-c", WORKLOAD % {"steps": steps}],
                         env=env, capture_output=True, text=True, check=True)
    return out.stdout.strip().split("\n")[-1]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, default=250,
                    help="simulation steps at 20 ms (default 250 = 5 s)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print("30-bus simulation, %d steps at 20 ms; residual kernel timing "
          "averaged over 2000 calls" % args.steps)
    for label, flag in (("numba kernels", False), ("numpy fallback", True)):
        best = None
        for _ in range(args.repeat):
            line = run(flag, args.steps)
            sim_s = float(line.split("sim_s=")[1].split()[0])
            res_us = float(line.split("residual_us=")[1])
            if best is None or sim_s < best[0]:
                best = (sim_s, res_us)
        print("%-16s simulate: %7.3f s    residual: %7.2f us/call"
              % (label, best[0], best[1]))


if __name__ == "__main__":
    main()
