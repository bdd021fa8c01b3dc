#!/usr/bin/env python3
"""Structural consistency between two spectral bands.

Builds binarized edge maps for the visible and NIR responses of one
scene, combines them into the consistency target, and evaluates the
decode loss for a random gate tensor.
"""

from pathlib import Path

import numpy as np

from nirev import io
from nirev.consistency import sc_loss, sobel_edges, structural_consistency
from nirev.core import FeatureTensor
from nirev.numerics import init_kernel
from nirev.scenes import synthetic_scene_pair

out = Path(__file__).parent / "output" / "consistency"
out.mkdir(parents=True, exist_ok=True)

visible, nir = synthetic_scene_pair(seed=21)

edges_vis = sobel_edges(visible, threshold=0.25)
edges_nir = sobel_edges(nir, threshold=0.25)
print(f"edge pixels: visible {int(edges_vis.data.sum())}, nir {int(edges_nir.data.sum())}")

# 1 where both bands agree on an edge, 0 where they disagree, 0.5 where
# neither has one.  Band-exclusive shapes show up as zeros.
cons = structural_consistency(edges_vis, edges_nir)
levels = {v: int((cons.data == v).sum()) for v in (0.0, 0.5, 1.0)}
print(f"consistency levels: agree-edge {levels[1.0]}, agree-flat {levels[0.5]}, "
      f"disagree {levels[0.0]}")

io.write_pgm(visible, out / "visible.pgm")
io.write_pgm(nir, out / "nir.pgm")
io.write_pgm(cons.to_frame(), out / "consistency.pgm", maxval=255)

# The gate decode loss: a random gate stack decoded by a 3x3 kernel and
# compared against the target under mean squared error.
rng = np.random.default_rng(3)
gate = FeatureTensor.from_array(rng.normal(size=(8, nir.height, nir.width)))
decode = init_kernel(rng, 1, 8, 3)
loss = sc_loss(cons, gate, decode)
print(f"decode loss for an untrained random gate: {loss:.4f}")
print(f"wrote consistency artifacts to {out}")
