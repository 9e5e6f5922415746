"""Scratch: derive expected values with independent oracles before freezing them into tests."""
import math
from fractions import Fraction

import mpmath as mp
import numpy as np

mp.mp.dps = 50

print("== mantegna sigma closed form (mpmath, 50 digits) ==")
for beta in (1.0, 1.5, 1.9, 0.5, 0.3):
    b = mp.mpf(beta)
    num = mp.gamma(1 + b) * mp.sin(mp.pi * b / 2)
    den = mp.gamma((1 + b) / 2) * b * mp.power(2, (b - 1) / 2)
    sigma = mp.power(num / den, 1 / b)
    print(f"beta={beta}: {mp.nstr(sigma, 20)}  float={float(sigma)!r}")

print("\n== correlation pin: [0,80,170,255] vs [10,70,180,250] (exact Fraction + mp sqrt) ==")
a = [0, 80, 170, 255]
b = [10, 70, 180, 250]
ma = Fraction(sum(a), 4)
mb = Fraction(sum(b), 4)
cov = sum((Fraction(x) - ma) * (Fraction(y) - mb) for x, y in zip(a, b))
va = sum((Fraction(x) - ma) ** 2 for x in a)
vb = sum((Fraction(y) - mb) ** 2 for y in b)
print("cov,va,vb:", cov, va, vb)
rho = mp.mpf(cov.numerator) / cov.denominator / mp.sqrt(mp.mpf(va.numerator) / va.denominator * mp.mpf(vb.numerator) / vb.denominator)
print("rho:", mp.nstr(rho, 20), " float:", float(rho))

print("\n== 4x1 image [0,80,170,255], threshold [100]: fitness exact ==")
# classes [0,100): {0,80}, [100,256): {170,255}; reps: mean(0,80)=40, mean(170,255)=212.5 -> half-up 213
# segmented = [40,40,213,213]
s = [40, 40, 213, 213]
ms = Fraction(sum(s), 4)
cov = sum((Fraction(x) - ma) * (Fraction(y) - ms) for x, y in zip(a, s))
vs = sum((Fraction(y) - ms) ** 2 for y in s)
rho2 = mp.mpf(cov.numerator) / cov.denominator / mp.sqrt(mp.mpf(va.numerator) / va.denominator * mp.mpf(vs.numerator) / vs.denominator)
print("reps-> [40, 213], rho:", mp.nstr(rho2, 20), " float:", float(rho2))

print("\n== sqrt(fl(v*v)) == v empirical check ==")
rng = np.random.default_rng(123)
fails = 0
for scale in (1e-6, 1e-3, 1.0, 1e3, 1e6, 1e9):
    v = np.abs(rng.standard_normal(200000)) * scale
    v = v[v > 0]
    bad = np.sum(np.sqrt(v * v) != v)
    fails += bad
    print(f"scale {scale:g}: mismatches {bad}/{v.size}")
print("total mismatches:", fails)

print("\n== psnr pins ==")
print("psnr(1) =", repr(20 * math.log10(255.0)))
print("psnr(4) =", repr(20 * math.log10(127.5)))
