# %% [markdown]
# # Where does each pyramid level look?
#
# Grad-CAM per level from the loss of a single group against a single
# target, and nearest-seed cluster maps of the feature vectors.

# %%
from pathlib import Path

import numpy as np

from maskdeep.config import load_config
from maskdeep.data import synthetic_shapes
from maskdeep.trainer import load_checkpoint
from maskdeep.viz import cluster_map, grad_cam, save_figures

run_dir = Path("runs/notebooks/pretrain")
config = load_config(run_dir / "config.ini")
state = load_checkpoint(run_dir / "checkpoints" / "last.pt", config)

images = synthetic_shapes(4, size=config.resolution, seed=11).images
for i, image in enumerate(images):
    cam = grad_cam(state.model, state.momentum, image, np.random.default_rng(i))
    clusters = cluster_map(state.model, image, seeds=3)
    paths = save_figures(image, run_dir / "figures", f"sample{i}", cam, clusters)
    print(i, f"loss {cam.meta['loss']:+.3f}", [p.name for p in paths])

# %% [markdown]
# P5 maps are 4x4 here and P3 maps 16x16, so only the finer levels can
# follow object outlines. Figures land in the run's `figures/` directory.
