"""The whole pipeline at toy scale, in a temporary directory.

Generates data, pre-trains the general detector, harvests pseudo-labels on
one camera, runs every compression method at two penalty weights, the online
variant, and prints the summary table. Takes a few minutes on one core; the
default configuration runs the same stages at full size.

    python demos/03_tiny_experiment.py
"""

import tempfile
from pathlib import Path

from specprune.experiment import ExperimentConfig, RunDir, run_pipeline

CONFIG = """\
[domain]
cameras = 1
restricted_frames = 300
general_train = 120
general_test = 60

[pretrain]
steps = 150
ap_floor = 0.0

[train]
warmup_steps = 30
steps = 40

[sweep]
lambdas = 0, 3, 10
seeds = 0
methods = zeroing, taylor, hat, flops

[online]
frames = 200
chunk_size = 100
steps_per_chunk = 20
"""

with tempfile.TemporaryDirectory() as tmp:
    run = RunDir(Path(tmp) / "run", ExperimentConfig.from_text(CONFIG))
    rows = run_pipeline(run)
    print(f"{len(rows)} arms finished; results in {run.root}/results.csv\n")
    print((run.root / "summary.txt").read_text())
