"""Scratch: seeded statistical properties of the Levy sampler and threshold sampling."""
import numpy as np

from cuckoothresh import LevyParams, levy_step, levy_steps, make_rng, random_threshold_set

params = LevyParams(beta=1.5, alpha=1.0)

print("== levy_step regression pin (seed 42, beta=1.5): first five values ==")
rng = make_rng(42)
vals = [levy_step(rng, params) for _ in range(5)]
print([repr(v) for v in vals])

print("\n== batch/scalar stream equivalence ==")
a = levy_steps(make_rng(7), params, 64)
b = np.array([levy_step(make_rng(7), params) for _ in range(64)][:0])  # placeholder
rng2 = make_rng(7)
b = np.array([levy_step(rng2, params) for _ in range(64)])
print("equal:", np.array_equal(a, b))

for seed in (0, 1, 2, 12345):
    rng = make_rng(seed)
    s = levy_steps(rng, params, 10**6)
    sign_balance = abs(np.mean(np.sign(s)))
    abs_s = np.abs(s)
    frac_gt10 = np.mean(abs_s > 10)
    sample_std = np.std(s)
    from math import erfc, sqrt
    gauss_tail = erfc(10 / (sample_std * sqrt(2)))
    # tail exponent fit over s in [10, 1e3]
    grid = np.logspace(1, 3, 21)
    surv = np.array([np.mean(abs_s > g) for g in grid])
    ok = surv > 0
    slope = np.polyfit(np.log10(grid[ok]), np.log10(surv[ok]), 1)[0]
    k1 = ((s[:10**4] - s[:10**4].mean()) ** 4).mean() / (s[:10**4].var() ** 2)
    k2 = ((s - s.mean()) ** 4).mean() / (s.var() ** 2)
    print(
        f"seed {seed}: sign={sign_balance:.5f} P(|s|>10)={frac_gt10:.5f} std={sample_std:.2f} "
        f"gauss_tail={gauss_tail:.3e} ratio={frac_gt10 / gauss_tail if gauss_tail else float('inf'):.1f} "
        f"slope={slope:.3f} kurt1e4={k1:.1f} kurt1e6={k2:.1f}"
    )

print("\n== random_threshold_set uniformity: 1e5 draws of x=4, 3-sigma binomial bound ==")
for seed in (0, 1, 2):
    rng = make_rng(seed)
    counts = np.zeros(256, dtype=np.int64)
    n = 10**5
    for _ in range(n):
        for t in random_threshold_set(rng, 4).thresholds:
            counts[t] += 1
    p = 4 / 255
    exp = n * p
    sigma = np.sqrt(n * p * (1 - p))
    lo, hi = exp - 3 * sigma, exp + 3 * sigma
    outside = [(v, int(c)) for v, c in enumerate(counts[1:], start=1) if not (lo <= c <= hi)]
    print(f"seed {seed}: expected {exp:.1f} +- {3*sigma:.1f}; outside bins: {outside}")
