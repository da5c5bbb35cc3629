"""Walk through the results of a finished run.

Prints, per camera, the median over seeds of the GFLOPS ratio and the
restricted and general AP relative to the general detector, for every
method and penalty weight, then the online chunks.

    python demos/04_read_results.py [RUN_DIR]     # default runs/acceptance
"""

import json
import sys
from pathlib import Path

import numpy as np

from specprune.metrics import read_results_csv

root = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/acceptance")
if not (root / "results.csv").exists():
    sys.exit(f"{root}/results.csv not found; run `specprune sweep --out {root}` first")
rows = read_results_csv(root / "results.csv")

for camera in sorted({r.camera for r in rows}):
    print(f"camera {camera}")
    print(f"  {'method':<8} {'beta':>4} {'lambda':>6} {'ratio':>6} {'xAP^R':>6} {'xAP^G':>6}")
    groups = sorted({(r.method, r.beta, r.lam) for r in rows if r.camera == camera})
    for method, beta, lam in groups:
        sel = [r for r in rows if (r.camera, r.method, r.beta, r.lam) == (camera, method, beta, lam)]
        med = [np.median([getattr(r, k) for r in sel]) for k in ("gflops_ratio", "x_ap_r", "x_ap_g")]
        print(f"  {method:<8} {beta:>4g} {lam:>6g} {med[0]:>6.2f} {med[1]:>6.3f} {med[2]:>6.3f}")

online = root / "online.json"
if online.exists():
    data = json.loads(online.read_text())
    print(f"\nonline on camera {data['camera']}:")
    for c in data["chunks"]:
        ref = c["offline_ap_restricted"]
        print(f"  chunk {c['chunk']}: ratio {c['gflops_ratio']:.2f}, AP^R {c['ap_restricted']:.3f}"
              + ("" if ref is None else f", offline at that ratio {ref:.3f}"))
