"""Gates, FLOPS and physical pruning on the detector, without any training.

Each gated convolution multiplies its filters by sigmoid(e). Closing a gate
removes that filter's cost from the layer and the input cost of the next
layer. Once a gate is closed the filter can be cut out of the weights, and
the smaller network computes the same outputs.

    python demos/01_gates_and_flops.py
"""

import numpy as np

from specprune.detector import build_detector, detector_forward
from specprune.flops import flops_loss, gflops_ratio, nominal_flops
from specprune.gated import CLOSED_GATE, physically_prune
from specprune.tensor import no_grad

arch = build_detector(seed=0)
full = nominal_flops(arch)
print("per-layer multiply-accumulates of the open detector:")
for name, n in zip(full.layers, full.nominal):
    print(f"  {name:<6} {n:>10,.0f}")
print(f"  total  {full.total_nominal:>10,.0f}   flops loss {flops_loss(arch).item():.3f}")

# close half the filters of conv3 and a quarter of conv5
arch.embeddings["conv3"].data[::2] = CLOSED_GATE
arch.embeddings["conv5"].data[::4] = CLOSED_GATE
gated = nominal_flops(arch)
print(f"\nafter closing gates: effective {gated.total_effective:,.0f}, "
      f"flops loss {flops_loss(arch).item():.3f}")

pruned, rep = physically_prune(arch, 1e-3)
print(f"physically pruned: removed {rep.removed}")
print(f"params {rep.params_before} -> {rep.params_after}, "
      f"GFLOPS ratio {gflops_ratio(full, nominal_flops(pruned)):.2f}")

images = np.random.default_rng(0).uniform(size=(8, 1, 64, 64)).astype(np.float32)
with no_grad():
    change = max(np.abs(a.data - b.data).max()
                 for a, b in zip(detector_forward(arch, images), detector_forward(pruned, images)))
print(f"largest output change between gated and pruned network: {change:.1e}")
