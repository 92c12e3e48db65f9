"""
Pareto sums by hand and by every exact algorithm
================================================

Two small bicriteria sets (think: travel time vs. cost of route halves) and
the skyline of all their pairwise sums.
"""

#%%
from paretosum import ParetoSet, brute_force_pareto_sum, dominates, pareto_front, pareto_sum
from paretosum.dispatch import ALGORITHMS

P = ParetoSet([(0, 3), (1, 1), (2, 0)])
Q = ParetoSet([(0, 2), (2, 0)])
print(P, Q)

#%%
# all six sums, then the non-dominated ones
sums = [p + q for p in P for q in Q]
print(sorted(sums))
print(pareto_front(sums).points)
print(dominates((2, 2), (2, 3)), dominates((2, 2), (3, 1)))

#%%
# the reference enumerates every pair and keeps one witness per output point
for s in brute_force_pareto_sum(P, Q):
    print(s.point, "=", P[s.witness_p], "+", Q[s.witness_q])

#%%
# every exact algorithm gives the same skyline
for algo in ALGORITHMS:
    print(f"{algo:14s}", [tuple(r.point) for r in pareto_sum(P, Q, algo)])
