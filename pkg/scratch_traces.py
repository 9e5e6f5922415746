"""Scratch: check spec hand-traces against the implementation."""
import numpy as np

from cuckoothresh import (
    GrayImage,
    ThresholdSet,
    apply_class_map,
    class_representatives,
    correlation,
    exhaustive_best,
    fitness_from_histogram,
    histogram,
    new_image,
    repair,
)

print("repair([200.4, 10.6, 10.4]) ->", repair([200.4, 10.6, 10.4]).thresholds, "(expect (10, 11, 200))")
print("repair([-5.0, 300.0]) ->", repair([-5.0, 300.0]).thresholds, "(expect (1, 255))")
print("repair([128.0]*3) ->", repair([128.0, 128.0, 128.0]).thresholds, "(expect (128, 129, 130))")
print("repair([255.0, 255.0]) ->", repair([255.0, 255.0]).thresholds, "(wrap case)")

img = new_image(2, 2, [10, 10, 200, 200])
h = histogram(img)
cm = class_representatives(h, ThresholdSet((100,)))
print("reps of [10,10,200,200] @ [100]:", cm.representatives, "(expect (10, 200))")

h2 = histogram(new_image(1, 2, [0, 100]))
cm2 = class_representatives(h2, ThresholdSet((50, 150)))
print("reps of [0,100] @ [50,150]:", cm2.representatives, "(expect (0, 100, 202))")

uni = new_image(16, 16, np.arange(256))
cm3 = class_representatives(histogram(uni), ThresholdSet((128,)))
print("reps of uniform @ [128]:", cm3.representatives, "(expect (64, 192))")

print("fitness [10,10,200,200] @ [100]:", fitness_from_histogram(h, ThresholdSet((100,))), "(expect 1.0)")
print("fitness single class:", fitness_from_histogram(h, ThresholdSet((250,))), "(expect 0.0)")

img4 = new_image(4, 1, [0, 80, 170, 255])
h4 = histogram(img4)
f_hist = fitness_from_histogram(h4, ThresholdSet((100,)))
seg = apply_class_map(img4, class_representatives(h4, ThresholdSet((100,))))
f_pix = correlation(img4, seg)
print("4x1 fitness hist:", repr(f_hist), "pixel:", repr(f_pix), "pin 0.902057126030529")

print("self correlation exact:", repr(correlation(img4, img4)))
neg = new_image(4, 1, [255 - v for v in [0, 80, 170, 255]])
print("anti correlation exact:", repr(correlation(img4, neg)))

two = new_image(4, 2, [40, 200, 40, 200, 200, 40, 40, 200])
r = exhaustive_best(histogram(two), 1)
print("oracle {40,200} x=1:", r.thresholds.thresholds, repr(r.fitness), "(expect (41,), 1.0)")

r2 = exhaustive_best(histogram(two), 2)
print("oracle {40,200} x=2 (greedy branch):", r2.thresholds.thresholds, repr(r2.fitness), "(expect (1, 41), 1.0)")

# greedy vs unrestricted cross-check on small cases
from cuckoothresh.exhaustive import exhaustive_best as eb
for pixels, x in [([40, 200, 40, 200], 2), ([40, 255, 40, 255], 2), ([0, 5, 0, 5], 3)]:
    hh = histogram(new_image(2, 2, pixels))
    a = eb(hh, x, restricted=True)
    b = eb(hh, x, restricted=False)
    print(f"greedy-vs-full {sorted(set(pixels))} x={x}: {a.thresholds.thresholds} vs {b.thresholds.thresholds}",
          "fit", repr(a.fitness), repr(b.fitness))

from cuckoothresh.cuckoo import _abandon_count
print("abandon counts: pa=0.25 n=20 ->", _abandon_count(0.25, 20), "(expect 5); pa=1 n=20 ->",
      _abandon_count(1.0, 20), "(expect 19); pa=0 ->", _abandon_count(0.0, 20),
      "; pa=0.2 n=6 ->", _abandon_count(0.2, 6), "(exact 1.0 -> 1)")
