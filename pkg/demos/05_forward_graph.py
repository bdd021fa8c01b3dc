#!/usr/bin/env python3
"""The untrained dual-branch restoration network.

Feeds one blurry frame + noisy voxel grid through the full forward
graph (encoders, gate + interaction fusion, decoders) with random
parameters and stores the parameter container.
"""

from pathlib import Path

import numpy as np

from nirev import io
from nirev.blur import BlurConfig, average_blur, gen_trajectory, render_sequence
from nirev.events import EventSimConfig, NoiseConfig, inject_noise, simulate_events
from nirev.fusion import init_mdednet_params, mdednet_forward, mdednet_param_count, mdednet_tensors
from nirev.scenes import synthetic_scene_pair
from nirev.voxel import voxelize

out = Path(__file__).parent / "output" / "forward"
out.mkdir(parents=True, exist_ok=True)

# Build one 64x64 sample with the forward models.
visible, nir = synthetic_scene_pair(seed=31, width=64, height=64)
traj = gen_trajectory(BlurConfig(n_latent=16, velocity_sigma=0.6, seed=8))
blurry = average_blur(render_sequence(nir, traj))
clean = simulate_events(render_sequence(visible, traj), EventSimConfig())
noisy = inject_noise(clean, NoiseConfig(rate=300.0, seed=8))
voxels = voxelize(noisy, bins=13)
print(f"inputs: blurry {blurry.height}x{blurry.width}, "
      f"voxels {voxels.bins}x{voxels.height}x{voxels.width} from {len(noisy)} events")

params = init_mdednet_params(voxel_bins=13, base_channels=32, seed=0)
print(f"network parameters: {mdednet_param_count(params):,}")

sharp_pred, clean_pred = mdednet_forward(blurry, voxels, params)
print(f"outputs finite: image {np.all(np.isfinite(sharp_pred.data))}, "
      f"voxels {np.all(np.isfinite(clean_pred.data))}")
print(f"predicted image range: [{sharp_pred.data.min():.3f}, {sharp_pred.data.max():.3f}]")

io.write_pgm(sharp_pred, out / "predicted.pgm")
io.write_voxel(clean_pred, out / "predicted.vox")
io.write_params(mdednet_tensors(params), out / "network.prm")
print(f"wrote predictions and PRM1 container to {out}")
