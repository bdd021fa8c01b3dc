#!/usr/bin/env python3
"""Camera-shake blur synthesis on a synthetic scene.

Generates a shake trajectory, renders the latent frame sequence, and
averages it into a blurry exposure.  Artifacts land in demos/output/blur/.
"""

from pathlib import Path

import numpy as np

from nirev import io
from nirev.blur import BlurConfig, average_blur, gen_trajectory, render_sequence, write_trajectory_csv
from nirev.scenes import synthetic_scene_pair

out = Path(__file__).parent / "output" / "blur"
out.mkdir(parents=True, exist_ok=True)

# A paired scene: same geometry, band-dependent response.
visible, nir = synthetic_scene_pair(seed=7)
print(f"scene: {nir.width}x{nir.height}, intensity range "
      f"[{nir.data.min():.3f}, {nir.data.max():.3f}]")

# The trajectory is a damped random walk on velocity, clamped to a bound.
cfg = BlurConfig(n_latent=16, velocity_sigma=0.7, max_displacement=6.0, seed=123)
traj = gen_trajectory(cfg)
mags = np.hypot(traj.samples[:, 0], traj.samples[:, 1])
print(f"trajectory: {len(traj)} samples, max displacement {mags.max():.2f} px")
write_trajectory_csv(traj, out / "trajectory.csv")

# Latent frames are sub-pixel translations of the sharp frame; the
# exposure average is the blurry observation.
latent = render_sequence(nir, traj)
blurry = average_blur(latent)
residual = np.abs(blurry.data - nir.data).mean()
print(f"blur strength: mean |blurry - sharp| = {residual:.4f}")

io.write_pgm(nir, out / "sharp.pgm")
io.write_pgm(blurry, out / "blurry.pgm")
io.write_pgm(latent[-1], out / "latent_last.pgm")
print(f"wrote sharp/blurry/latent frames to {out}")
