"""
Rate-distortion against JPEG
============================

Evaluates a trained bundle (``demos/out/demo_bundle.pt`` from the previous
demo, or any path given on the command line) on the four test images and
writes ``rd.csv`` plus one plot per image. Even the narrow demo bundle lands
left of the whole JPEG curve at QF 10: coding a half-size representation costs
fewer bits than JPEG's lowest quality setting on the full image.
"""

import sys
from pathlib import Path

from mixres import evaluator
from mixres.imaging import load_corpus
from mixres.networks import ModelBundle

out = Path(__file__).parent / "out"
path = Path(sys.argv[1]) if len(sys.argv) > 1 else out / "demo_bundle.pt"
bundle = ModelBundle.load(path)

points = []
for name, x in load_corpus("test").items():
    p = evaluator.eval_pipeline(bundle, x, name)
    curve = evaluator.jpeg_curve(x, image=name)
    base = evaluator.baseline_psnr_at(p.bpp, curve)
    verdict = "above-left" if evaluator.above_left(p, curve) else "not above-left"
    print(f"{name:10s} {p.bpp:.3f} bpp  {p.psnr_db:.2f} dB  (JPEG at that rate {base:.2f} dB)  {verdict}")
    points.append(p)
    points.extend(evaluator.eval_jpeg_baseline(x, qf, name) for qf in evaluator.BASELINE_QFS)

for written in evaluator.emit_report(points, out / "rd"):
    print("wrote", written)
