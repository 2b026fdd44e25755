#!/usr/bin/env python3
"""Regenerates trials.txt and its brute-force EER (trials.expected).

The oracle counts false accepts (nontarget >= t) and false rejects
(target < t) at every distinct score and one threshold above the maximum,
then linearly interpolates the first sign change of fa - fr.
"""
import random
from fractions import Fraction
from pathlib import Path

here = Path(__file__).resolve().parent
rng = random.Random(20260101)
trials = [("target", round(rng.gauss(1.5, 1.0), 3)) for _ in range(60)]
trials += [("nontarget", round(rng.gauss(0.0, 1.0), 3)) for _ in range(140)]
rng.shuffle(trials)

with open(here / "trials.txt", "w") as f:
    f.write("# synthetic verification trials: <target|nontarget> <score>\n")
    for label, score in trials:
        f.write(f"{label} {score:.3f}\n")

tgt = [Fraction(str(s)) for l, s in trials if l == "target"]
non = [Fraction(str(s)) for l, s in trials if l == "nontarget"]
thresholds = sorted(set(tgt + non))
points = []
for t in thresholds:
    fa = Fraction(sum(1 for s in non if s >= t), len(non))
    fr = Fraction(sum(1 for s in tgt if s < t), len(tgt))
    points.append((t, fa, fr))
points.append((thresholds[-1], Fraction(0), Fraction(1)))
for (t0, fa0, fr0), (t1, fa1, fr1) in zip(points, points[1:]):
    d0, d1 = fa0 - fr0, fa1 - fr1
    if d1 <= 0:
        w = d0 / (d0 - d1)
        eer = fa0 + w * (fa1 - fa0)
        thr = t0 + w * (t1 - t0)
        break
with open(here / "trials.expected", "w") as f:
    f.write(f"eer {float(eer):.17g}\nthreshold {float(thr):.17g}\n")
print(float(eer), float(thr))
