# %% [markdown]
# # Desk-scale study: collapse, probe gain and ablation direction
#
# The same comparisons the acceptance suite runs on CIFAR-10, shrunk to
# the shapes dataset so they finish on one CPU core. Results are cached
# per (variant, seed), so the script can be interrupted and re-run.

# %%
import math
import sys
from pathlib import Path

from maskdeep import Config
from maskdeep.data import load_dataset
from maskdeep.experiments import random_init_baseline, run_variant, summarize

ROOT = Path(sys.argv[1] if len(sys.argv) > 1 else "runs/desk_study")
SEEDS = (0, 1, 2)

base = Config(
    dataset="synthetic", subset=1024, probe_test_subset=1000, resolution=64,
    batch_size=32, patch_count=4, group_count=16, extra_targets=2,
    epochs=15, warmup_epochs=1.0, ckpt_every=5, probe_epochs=30,
)
train, test = load_dataset(base, "train"), load_dataset(base, "test")

# %%
default = run_variant(base, "default", SEEDS, ROOT, train, test)
for r in default:
    print(f"seed {r['seed']}: target_std {r['target_std']:.4f} "
          f"(floor {0.3 / math.sqrt(r['dim']):.4f}), loss {r['loss0']:+.3f} -> "
          f"{r['loss_end']:+.3f}, gap ratio {r['gap_ratio']:.3f}, top1 {r['top1']:.2f}")

# %%
rand = random_init_baseline(base, SEEDS, ROOT, train, test)
naive = run_variant(base, "naive", SEEDS, ROOT, train, test, hierarchical="naive")
k1 = run_variant(base, "groups1", SEEDS, ROOT, train, test, group_count=1)
k8 = run_variant(base, "groups8", SEEDS, ROOT, train, test, group_count=8)

for name, res in (("default", default), ("random init", rand), ("naive", naive),
                  ("K=1", k1), ("K=8", k8)):
    mean, std = summarize(res)
    print(f"{name:12s} top1 {mean:6.2f} +- {std:.2f}")
