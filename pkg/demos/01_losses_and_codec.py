"""
Losses, the JPEG bridge and why low resolution pays off at low rate
===================================================================

Run with ``python demos/01_losses_and_codec.py``. Figures land in
``demos/out/``.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import torch

from mixres import codec, losses
from mixres.imaging import load_corpus

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)
x = load_corpus("test")["camera"]
t = torch.from_numpy(x)

# The three training criteria on a mildly blurred copy. Blur costs little in
# content L1 but shows up in the gradient term and in SSIM.
blurred = torch.nn.functional.avg_pool2d(t[None, None], 3, 1, 1)[0, 0]
print("content L1 ", float(losses.l1_content(blurred, t)))
print("gradient L1", float(losses.l1_gradient(blurred, t)))
print("1 - SSIM   ", float(losses.ssim_loss(blurred, t)))

# JPEG is deterministic: the same bytes come back every time.
cfg = codec.CodecConfig(10)
a = codec.jpeg_roundtrip(codec.quantize8(x), cfg)
b = codec.jpeg_roundtrip(codec.quantize8(x), cfg)
assert a.payload == b.payload
print(f"QF10 full size: {a.payload_bytes} bytes, {codec.bpp(a.payload_bytes, *x.shape):.3f} bpp")

# %%
# Coding a half-size copy and interpolating it back is a crude version of the
# low-resolution regime. At low rates it is competitive with JPEG on the full
# image, which is what the learned networks build on.
half = losses.downsample_linear(t).numpy()
full_curve, half_curve = [], []
for qf in range(2, 60, 3):
    rt = codec.jpeg_roundtrip(codec.quantize8(x), codec.CodecConfig(qf))
    full_curve.append((codec.bpp(rt.payload_bytes, *x.shape), losses.psnr(rt.decoded, x)))
    rt = codec.jpeg_roundtrip(codec.quantize8(half), codec.CodecConfig(qf))
    up = losses.upsample_linear(torch.from_numpy(rt.decoded), 2).clamp(0, 1)
    half_curve.append((codec.bpp(rt.payload_bytes, *x.shape), losses.psnr(up, x)))

fig, ax = plt.subplots(figsize=(5, 4))
ax.plot(*np.array(full_curve).T, "o-", ms=3, label="JPEG")
ax.plot(*np.array(half_curve).T, "s-", ms=3, label="half size + bilinear")
ax.set_xlabel("bpp")
ax.set_ylabel("PSNR (dB)")
ax.set_xlim(0, 1.0)
ax.legend()
fig.tight_layout()
fig.savefig(out / "01_half_resolution.png", dpi=120)
print("wrote", out / "01_half_resolution.png")
