"""
The three networks
==================

FDNN turns the image into the representation the codec sees, PPNN repairs and
(in LOW mode) enlarges the decode, and VCNN imitates codec plus PPNN so the
FDNN can be trained by back-propagation.
"""

import torch

from mixres import losses
from mixres.imaging import load_corpus
from mixres.networks import ModelBundle, ResolutionMode, build_fdnn, build_ppnn

for mode in ResolutionMode:
    f, h = build_fdnn(mode), build_ppnn(mode)
    print(f"{mode.name:4s} FDNN {len(f.layers)} layers, {f.parameter_count:,} parameters; "
          f"PPNN {len(h.layers)} layers, {h.parameter_count:,} parameters")
    for layer in f.layers:
        print("    ", layer)

# %%
# Untrained bundles start from an interpolation path threaded through channel
# 0 of every layer, so before any training the FDNN nearly box-downsamples and the
# PPNN nearly up-samples bilinearly. A small random term rides on top of both,
# and training only has to learn corrections.
x = torch.from_numpy(load_corpus("test")["astronaut"])[None, None]
bundle = ModelBundle.initial(ResolutionMode.LOW, 10, width=32)
with torch.no_grad():
    y = bundle.fdnn(x)
    print("FDNN output", tuple(y.shape), "vs box mean, max abs diff",
          float((y - losses.downsample_linear(x)).abs().max()))
    back = bundle.ppnn(y)
    print("PPNN output", tuple(back.shape), "PSNR vs bilinear",
          round(losses.psnr(back.clamp(0, 1), losses.upsample_linear(y, 2).clamp(0, 1)), 2))
    # VCNN is plain random so its fit to the real codec is measurable.
    print("VCNN output", tuple(bundle.vcnn(y).shape))
