# %% [markdown]
# # Pretraining on the procedural shapes dataset
#
# A small end-to-end run that needs no downloads. Images are 64px, so the
# pyramid levels are 8x8, 4x4 and 2x2. Swap `dataset="cifar10"` and
# `data_root` for the real thing.

# %%
from pathlib import Path

from maskdeep import Config, fit
from maskdeep.trainer import read_metrics

RUNS = Path("runs/notebooks")

config = Config(
    dataset="synthetic", subset=512, resolution=64, batch_size=32,
    patch_count=4, group_count=8, extra_targets=2,
    epochs=10, warmup_epochs=1.0, ckpt_every=5, probe_test_subset=512,
)
run_dir = fit(config, RUNS / "pretrain")

# %% [markdown]
# `metrics.csv` holds one row per step. The loss starts near zero and moves
# toward its floor of -8 (mean reduction), while `target_std` should stay
# well above zero; a value near zero means the targets collapsed.

# %%
rows = read_metrics(run_dir)
for r in rows[:: max(1, len(rows) // 8)] + rows[-1:]:
    print(f"step {r['step']:4d}  loss {r['loss']:+.3f}  target_std {r['target_std']:.4f}"
          f"  lr {r['lr']:.4f}  lambda {r['lambda']:.5f}")

# %%
import matplotlib.pyplot as plt

fig, (a, b) = plt.subplots(1, 2, figsize=(9, 3))
a.plot([r["loss"] for r in rows])
a.set_title("loss")
b.plot([r["target_std"] for r in rows])
b.set_title("target std")
fig.tight_layout()
fig.savefig(run_dir / "figures" / "curves.png")
