"""Turn sparse detections on a fixed camera into dense pseudo-labels.

A detector that fires only now and then is enough: every confident detection
starts a tracklet, the correlation tracker carries it through the frames in
between, and long confident tracklets become training labels. Ground truth
is used here only to report how good the labels are.

The demo fakes a weak detector by keeping every tenth ground-truth box,
jittered by a pixel, so it runs without a trained model.

    python demos/02_harvest_pseudo_labels.py
"""

import numpy as np

from specprune.detector import BoundingBox, Detection
from specprune.scenes import camera_spec, generate_restricted
from specprune.tracking import harvest, run_tracker

stream = generate_restricted(1, 300, camera_spec(1))
rng = np.random.default_rng(0)
detections = []
for k, boxes in enumerate(stream.boxes):
    if k % 10:
        detections.append([])
        continue
    detections.append([Detection(BoundingBox(b.x + rng.normal(), b.y + rng.normal(), b.h, b.w), 0.9)
                       for b in boxes])

n_det = sum(len(d) for d in detections)
n_gt = sum(len(b) for b in stream.boxes)
print(f"{len(stream)} frames, {n_gt} ground-truth boxes, {n_det} seed detections")

tracklets = run_tracker(stream.frames, detections)
truth = {k: boxes for k, boxes in enumerate(stream.boxes)}
labels = harvest(tracklets, 0.7, 5, ground_truth=truth)
print(f"{len(tracklets)} tracklets, {len(labels)} labelled frames")
for key in ("n_labels", "mean_iou", "precision_iou50", "gt_coverage"):
    print(f"  {key:<16} {labels.stats[key]:.3f}")
