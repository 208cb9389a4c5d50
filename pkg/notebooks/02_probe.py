# %% [markdown]
# # Linear and kNN probes
#
# Probes the encoder from `01_pretrain.py` next to a randomly initialized
# encoder of the same shape. Only the linear head is trained; the encoder
# stays frozen.

# %%
from pathlib import Path

from maskdeep.config import load_config
from maskdeep.runner import run_probe

run_dir = Path("runs/notebooks/pretrain")
config = load_config(run_dir / "config.ini")

pretrained = run_probe(config, run_dir / "checkpoints" / "last.pt")
baseline = run_probe(config, random_init=True)

for label, reports in (("pretrained", pretrained), ("random init", baseline)):
    for r in reports:
        print(f"{label:12s} {r.kind:7s} top1 {r.top1:6.2f}  top5 {r.top5:6.2f}")
