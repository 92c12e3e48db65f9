"""Exact products of non-negative integer coefficient vectors.

Two dense exact methods are provided: Kronecker substitution into one big
integer (multiplied by GMP), and a number-theoretic transform modulo
998244353.  Both refuse inputs whose product coefficients could overflow
their ring.  Very sparse inputs are multiplied term by term instead.
"""

from __future__ import annotations

import gmpy2
import numpy as np

from ..errors import ConfigError

NTT_MOD = 998244353  # 119 * 2**23 + 1
NTT_ROOT = 3
NTT_MAX_LOG = 23
SPARSE_MAX_TERMS = 2**24


def coefficient_bound(a: np.ndarray, b: np.ndarray) -> int:
    """Upper bound on every coefficient of ``a * b``."""
    sa, sb = int(a.sum(dtype=object)), int(b.sum(dtype=object))
    return min(int(a.max()) * sb, sa * int(b.max()))


def poly_multiply_counts(coeff_a, coeff_b, method: str = "kronecker") -> np.ndarray:
    """Exact product of two coefficient vectors (lowest degree first).

    ``method`` is ``"kronecker"`` (default), ``"ntt"``, ``"sparse"``,
    ``"schoolbook"`` or ``"auto"``, which takes the sparse route when the
    number of nonzero term pairs is small next to the output length and
    Kronecker otherwise.  The result has length ``len(a) + len(b) - 1`` and
    dtype int64.
    """
    a = np.ascontiguousarray(coeff_a, dtype=np.int64)
    b = np.ascontiguousarray(coeff_b, dtype=np.int64)
    if a.ndim != 1 or b.ndim != 1 or len(a) == 0 or len(b) == 0:
        raise ConfigError("coefficient vectors must be non-empty 1-D arrays")
    if a.min() < 0 or b.min() < 0:
        raise ConfigError("coefficients must be non-negative")
    out_len = len(a) + len(b) - 1
    bound = coefficient_bound(a, b)
    if bound == 0:
        return np.zeros(out_len, dtype=np.int64)
    if method == "auto":
        pairs = np.count_nonzero(a) * np.count_nonzero(b)
        method = "sparse" if pairs <= min(4 * out_len, SPARSE_MAX_TERMS) else "kronecker"
    if method == "sparse":
        if bound >= 2**63:
            raise ConfigError("product coefficients may overflow int64")
        return _sparse(a, b, bound, out_len)
    if method == "kronecker":
        return _kronecker(a, b, bound, out_len)
    if method == "ntt":
        if bound >= NTT_MOD:
            raise ConfigError(f"product coefficients may reach {bound}, above the NTT modulus {NTT_MOD}")
        return _ntt_multiply(a, b, out_len)
    if method == "schoolbook":
        if bound >= 2**63:
            raise ConfigError("product coefficients may overflow int64")
        return np.convolve(a, b)
    raise ConfigError(f"unknown multiplication method {method!r}")


def _kronecker(a: np.ndarray, b: np.ndarray, bound: int, out_len: int) -> np.ndarray:
    bits = bound.bit_length()
    if bits > 64:
        raise ConfigError(f"product coefficients may reach {bound}, beyond 64-bit slots")
    width = next(w for w in (1, 2, 4, 8) if 8 * w >= bits)
    dt = np.dtype(f"<u{width}")
    pa = gmpy2.mpz.from_bytes(a.astype(dt).tobytes(), "little")
    pb = gmpy2.mpz.from_bytes(b.astype(dt).tobytes(), "little")
    raw = (pa * pb).to_bytes(out_len * width, "little")
    return np.frombuffer(raw, dtype=dt).astype(np.int64)


def _sparse(a: np.ndarray, b: np.ndarray, bound: int, out_len: int) -> np.ndarray:
    ia, ib = np.flatnonzero(a), np.flatnonzero(b)
    pos = np.add.outer(ia, ib).ravel()
    va, vb = a[ia], b[ib]
    if va.max() == 1 and vb.max() == 1:  # indicator vectors: plain counting
        return np.bincount(pos, minlength=out_len).astype(np.int64, copy=False)
    w = np.multiply.outer(va, vb).ravel()
    if bound < 2**53:  # float accumulation is still exact
        return np.rint(np.bincount(pos, weights=w, minlength=out_len)).astype(np.int64)
    out = np.zeros(out_len, dtype=np.int64)
    np.add.at(out, pos, w)
    return out


def _ntt_roots(n: int, invert: bool) -> np.ndarray:
    """``w**k`` for k < n/2, with w a primitive n-th root of unity mod NTT_MOD."""
    w = pow(NTT_ROOT, (NTT_MOD - 1) // n, NTT_MOD)
    if invert:
        w = pow(w, NTT_MOD - 2, NTT_MOD)
    half = max(n // 2, 1)
    roots = np.ones(half, dtype=np.int64)
    step, filled = w, 1
    while filled < half:
        roots[filled : 2 * filled] = roots[:filled] * step % NTT_MOD
        step = step * step % NTT_MOD
        filled *= 2
    return roots


def _ntt(a: np.ndarray, invert: bool) -> np.ndarray:
    n = len(a)
    log = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.int64)
    for bit in range(log):
        rev |= ((idx >> bit) & 1) << (log - 1 - bit)
    a = a[rev]
    roots = _ntt_roots(n, invert)
    length = 2
    while length <= n:
        half = length // 2
        tw = roots[:: n // length][:half]
        blk = a.reshape(-1, length)
        u = blk[:, :half].copy()
        v = blk[:, half:] * tw % NTT_MOD
        blk[:, :half] = (u + v) % NTT_MOD
        blk[:, half:] = (u - v) % NTT_MOD
        length *= 2
    if invert:
        a = a * pow(n, NTT_MOD - 2, NTT_MOD) % NTT_MOD
    return a


def _ntt_multiply(a: np.ndarray, b: np.ndarray, out_len: int) -> np.ndarray:
    n = 1
    while n < out_len:
        n *= 2
    if n > 2**NTT_MAX_LOG:
        raise ConfigError(f"NTT length {n} exceeds 2**{NTT_MAX_LOG}")
    fa = np.zeros(n, dtype=np.int64)
    fb = np.zeros(n, dtype=np.int64)
    fa[: len(a)] = a % NTT_MOD
    fb[: len(b)] = b % NTT_MOD
    prod = _ntt(fa, False) * _ntt(fb, False) % NTT_MOD
    return _ntt(prod, True)[:out_len]
