"""
From Pareto sets to min-plus convolution
========================================

A Pareto set with integer x in [0, W] is a non-increasing array A[x] = best y
reachable with budget x.  Summing two sets is then a min-plus convolution.
"""

#%%
import time

import numpy as np

from paretosum import GenSpec, ParetoSet, conv_to_pareto, generate, pareto_to_conv
from paretosum.minplus import (
    CdxzConfig,
    cdxz_minplus,
    convex_pruning_minplus,
    enhanced_minplus,
    lower_hull_approx,
    naive_minplus,
)

P = ParetoSet([(0, 2), (1, 0)])
Q = ParetoSet([(0, 1), (2, 0)])
A, B, ctx = pareto_to_conv(P, Q)
print("A =", A.values, " B =", B.values)

C = naive_minplus(A.values, B.values, want_witnesses=True)
print("C =", C.values, " witnesses =", C.witnesses)
print([tuple(r.point) for r in conv_to_pareto(C, ctx)])

#%%
# Near-convex arrays: the lower hull is close to the data, so most index
# pairs are provably irrelevant and convex pruning skips them.
P, Q = generate(GenSpec(kind="near_curved", n=5000, seed=1))
A, B, ctx = pareto_to_conv(P, Q)
hull = lower_hull_approx(A.values)
print("array length", len(A), "hull vertices", len(hull.hull_vertices), "gamma", float(hull.gamma))

#%%
timings = {}
for name, fn in [
    ("naive", lambda: naive_minplus(A.values, B.values)),
    ("enhanced", lambda: enhanced_minplus(A.values, B.values)),
    ("convex pruning", lambda: convex_pruning_minplus(A.values, B.values)),
    ("cdxz 25/2", lambda: cdxz_minplus(A.values, B.values, CdxzConfig(25, 2))),
]:
    t0 = time.perf_counter()
    res = fn()
    timings[name] = (time.perf_counter() - t0, res)
ref = timings["naive"][1].values
for name, (sec, res) in timings.items():
    extra = f" pruned {res.pruned_fraction:.1%}" if res.pruned_fraction is not None else ""
    print(f"{name:15s} {sec:7.3f}s  equal={np.array_equal(res.values, ref)}{extra}")

#%%
# CDXZ internals: scaled arrays and the per-index remainder minima
res = cdxz_minplus(A.values[:300], B.values[:300], CdxzConfig(25, 3), keep_scratch=True)
sc = res.extra["scratch"]
print("scaled C' head", sc.C_scaled[:8])
print("s_0 head", sc.s[0][:8], " s_1 head", sc.s[1][:8])
