"""
A short alternating-training run
================================

Trains a narrow LOW-mode bundle at QF 10 on the bundled corpus in a few
minutes of CPU time and plots the per-step losses of each sub-problem. The
full-width defaults are in ``configs/desk_low_qf10.ini``; pass that to
``mixres train`` for the real thing.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from mixres import trainer

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

cfg = trainer.TrainConfig(quality_factor=10, width=16, patch_count=400, outer_iterations=2,
                          ppnn_steps=150, vcnn_steps=150, fdnn_steps=100, final_ppnn_steps=100)
patches = trainer.training_patches(cfg)
state = trainer.TrainState.initial(cfg)
bundle = trainer.run_alternation(state, patches, cfg)
bundle.save(out / "demo_bundle.pt")
print("saved", out / "demo_bundle.pt", "after", bundle.step, "steps")

# %%
# Each network's loss, smoothed over 20 steps, in the order the steps ran.
fig, axes = plt.subplots(1, 3, figsize=(11, 3))
for ax, name in zip(axes, trainer.SUBPROBLEMS):
    values = np.array([r.loss_total for r in state.history if r.subproblem == name])
    smooth = np.convolve(values, np.ones(20) / 20, mode="valid")
    ax.plot(smooth)
    ax.set_title(name.upper())
    ax.set_xlabel("step")
fig.tight_layout()
fig.savefig(out / "03_losses.png", dpi=120)
print("wrote", out / "03_losses.png")
