"""Scaled min-plus convolution with polynomial error correction.

Phase 1 divides both arrays by ``scale`` and convolves the small arrays
exactly.  Every true witness of ``C[k]`` then has scaled sum ``C'[k] + b``
with ``b`` in {0, 1}.  Phase 2 recovers the low-order part: a trivariate
indicator product counts, per ``k``, all pairs whose scaled sum has the right
residue mod ``prime`` (grouped by the sum of remainders), pseudo-witnesses
with matching residue but wrong scaled sum are subtracted, and the smallest
surviving remainder sum gives ``C[k]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError, InvariantError
from .base import INF, ConvResult, as_int_array, require_non_increasing
from .enhanced import enhanced_minplus, run_starts
from .poly import poly_multiply_counts

DEFAULT_PACKED_BUDGET = 2**28
_FLUSH = 1 << 21


@dataclass(frozen=True)
class CdxzConfig:
    """Scaling factor and residue prime."""

    scale: int = 25
    prime: int = 2

    def __post_init__(self):
        if int(self.scale) != self.scale or self.scale < 1:
            raise ConfigError(f"scale must be a positive integer, got {self.scale}")
        if int(self.prime) != self.prime or self.prime < 2:
            raise ConfigError(f"prime must be an integer >= 2, got {self.prime}")

    @classmethod
    def theoretical(cls, n: int, seed: int | None = 0) -> "CdxzConfig":
        """``scale = ceil(n**0.2)`` and a random prime in ``[n**0.4, 2 n**0.4]``."""
        n = max(int(n), 2)
        lo = max(2, math.ceil(n**0.4))
        hi = max(lo, math.floor(2 * n**0.4))
        primes = [q for q in range(lo, hi + 1) if _is_prime(q)]
        while not primes:  # only for tiny n, where the interval may hold no prime
            hi += 1
            primes = [hi] if _is_prime(hi) else []
        rng = np.random.default_rng(seed)
        return cls(scale=math.ceil(n**0.2), prime=int(primes[rng.integers(len(primes))]))


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


@dataclass
class CdxzScratch:
    """Intermediate arrays of one run, kept on request for inspection.

    ``counts[b]`` and ``pseudo[b]`` have shape ``(K, 2 * scale)``: row k is the
    coefficient vector of ``C_{p,b}[k]`` and ``R_{p,b}[k]`` in x.
    """

    A_scaled: np.ndarray
    B_scaled: np.ndarray
    C_scaled: np.ndarray
    counts: list
    pseudo: list
    s: list  # s_b[k], -1 where no coefficient survives


def cdxz_minplus(
    A,
    B,
    config: CdxzConfig | None = None,
    *,
    poly_method: str = "auto",
    packed_budget: int = DEFAULT_PACKED_BUDGET,
    keep_scratch: bool = False,
) -> ConvResult:
    """Exact min-plus convolution of non-increasing non-negative arrays.

    No witnesses are reported.  ``packed_budget`` caps the length of the
    packed univariate product; larger instances raise ConfigError.
    """
    cfg = config or CdxzConfig()
    A = as_int_array(A)
    B = as_int_array(B)
    require_non_increasing(A, B)
    if A[-1] < 0 or B[-1] < 0:
        raise InvariantError("entries must be non-negative")
    s, p = int(cfg.scale), int(cfg.prime)
    Ap, Bp = A // s, B // s
    Cp = enhanced_minplus(Ap, Bp).values
    if s == 1:
        res = ConvResult(Cp.copy())
        if keep_scratch:
            res.extra["scratch"] = CdxzScratch(Ap, Bp, Cp, [], [], [])
        return res

    na, nb = len(A), len(B)
    K = na + nb - 1
    rx, ry = 2 * s, 2 * p - 1
    if rx * ry * K > packed_budget:
        suggest = max(1, packed_budget // (2 * ry * K))
        raise ConfigError(
            f"packed product length {rx * ry * K} exceeds budget {packed_budget}; use scale <= {suggest}"
        )
    ra, rb = A - s * Ap, B - s * Bp
    pa = np.zeros(rx * ry * na, dtype=np.int64)
    pb = np.zeros(rx * ry * nb, dtype=np.int64)
    pa[ra + rx * (Ap % p + ry * np.arange(na))] = 1
    pb[rb + rx * (Bp % p + ry * np.arange(nb))] = 1
    T = poly_multiply_counts(pa, pb, poly_method)[: rx * ry * K].reshape(K, ry, rx)

    kk = np.arange(K)
    runs = _Runs(Ap, Bp)
    best = np.full(K, INF, dtype=np.int64)
    scratch = CdxzScratch(Ap, Bp, Cp, [], [], []) if keep_scratch else None
    for b in (0, 1):
        r = (Cp + b) % p
        counts = T[kk, r, :].copy()
        wrap = r + p < ry
        counts[wrap] += T[kk[wrap], r[wrap] + p, :]
        pseudo = _pseudo_witness_counts(runs, ra, rb, Cp, b, p, rx)
        diff = counts - pseudo
        if diff.min() < 0:
            raise InvariantError("pseudo-witness count exceeds residue count")
        alive = diff > 0
        has = alive.any(axis=1)
        sb = np.where(has, alive.argmax(axis=1), -1)
        cand = np.where(has, s * (Cp + b) + sb, INF)
        np.minimum(best, cand, out=best)
        if scratch is not None:
            scratch.counts.append(counts)
            scratch.pseudo.append(pseudo)
            scratch.s.append(sb)
    if best.max() >= INF:
        raise InvariantError("error correction left an index without a witness")
    res = ConvResult(best)
    if scratch is not None:
        res.extra["scratch"] = scratch
    return res


class _Runs:
    """Equal-value runs of the scaled arrays."""

    def __init__(self, Ap: np.ndarray, Bp: np.ndarray):
        sa, sb = run_starts(Ap), run_starts(Bp)
        self.a0, self.a1 = sa, np.append(sa[1:], len(Ap)) - 1
        self.b0, self.b1 = sb, np.append(sb[1:], len(Bp)) - 1
        self.va, self.vb = Ap[sa], Bp[sb]


def _expand(lo: np.ndarray, cnt: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Group index and value of every element of the ranges ``[lo, lo + cnt)``."""
    end = np.cumsum(cnt)
    total = int(end[-1]) if len(end) else 0
    grp = np.repeat(np.arange(len(cnt)), cnt)
    shift = lo - (end - cnt)
    return grp, np.arange(total) + shift[grp]


def _pseudo_witness_counts(runs: _Runs, ra, rb, Cp, b: int, p: int, rx: int) -> np.ndarray:
    """``R_{p,b}[k]`` for all k as a ``(K, rx)`` count array.

    For each pair of runs the scaled sum ``delta`` is constant.  Indices k in
    the pair's range are taken from the residue bucket of ``delta mod p``
    (k sorted by ``(C'[k] + b) mod p``, then by k), pairs with
    ``C'[k] + b == delta`` are dropped, and the remaining index pairs are
    enumerated and counted immediately.
    """
    K = len(Cp)
    target = Cp + b
    key = (target % p) * K + np.arange(K)
    order = np.argsort(key, kind="stable")
    skey = key[order]
    out = np.zeros(K * rx, dtype=np.int64)
    buf: list[np.ndarray] = []
    pending = 0
    b0, b1, vb = runs.b0, runs.b1, runs.vb
    for a0, a1, va in zip(runs.a0.tolist(), runs.a1.tolist(), runs.va.tolist()):
        delta = va + vb
        base = (delta % p) * K
        lo = np.searchsorted(skey, base + a0 + b0, side="left")
        hi = np.searchsorted(skey, base + a1 + b1, side="right")
        t, pos = _expand(lo, hi - lo)
        if len(t) == 0:
            continue
        k = order[pos]
        keep = target[k] != delta[t]
        t, k = t[keep], k[keep]
        if len(t) == 0:
            continue
        ilo = np.maximum(a0, k - b1[t])
        ihi = np.minimum(a1, k - b0[t])
        g, i = _expand(ilo, ihi - ilo + 1)
        kg = k[g]
        buf.append(kg * rx + ra[i] + rb[kg - i])
        pending += len(i)
        if pending >= _FLUSH:
            out += np.bincount(np.concatenate(buf), minlength=K * rx)
            buf, pending = [], 0
    if buf:
        out += np.bincount(np.concatenate(buf), minlength=K * rx)
    return out.reshape(K, rx)
