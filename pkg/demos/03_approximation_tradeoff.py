"""
Trading accuracy for speed and output size
==========================================

Rounding both inputs down to multiples of t shrinks the instance by about t
in each axis.  The strong approximation returns genuine sums within (2t, 2t)
of every exact point; the weak one only promises points close to real sums.
"""

#%%
import time

from paretosum import (
    GenSpec,
    approximate_pareto_sum,
    as_pareto_set,
    bucketsort_compare,
    evaluate_quality,
    generate,
    weak_approximate_pareto_sum,
)

P, Q = generate(GenSpec(kind="range", n=20_000, range_factor=2.0, seed=5))
t0 = time.perf_counter()
exact = as_pareto_set(bucketsort_compare(P, Q))
t_exact = time.perf_counter() - t0
print(f"exact: {len(exact)} points in {t_exact:.2f}s")

#%%
print(" t   mode    size  ratio  delta  bound  speedup")
for t in (2, 5, 10, 50, 100):
    for mode, fn in (("strong", approximate_pareto_sum), ("weak", weak_approximate_pareto_sum)):
        t0 = time.perf_counter()
        res = fn(P, Q, t, "bsc")
        sec = time.perf_counter() - t0
        q = evaluate_quality(exact, res.points)
        print(f"{t:3d}  {mode:6s} {len(res.points):6d}  {q.size_ratio:.3f}  {q.delta_measured:5d}  {res.guarantee:5d}  {t_exact / sec:6.1f}x")

#%%
# strong results carry the pair behind every point
res = approximate_pareto_sum(P, Q, 10)
for s, (i, j) in list(zip(res.points, res.witnesses))[:3]:
    print(s, "=", P[i], "+", Q[j])
