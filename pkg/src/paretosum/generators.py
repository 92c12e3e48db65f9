"""Seeded instance generators and the plain-text instance/result file formats.

Instance file::

    n m
    x y        (n lines, P in x order)
    x y        (m lines, Q in x order)

Result file: one ``x y`` line per point in x order.  All integers are decimal,
single-space separated, LF terminated.

Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), whose
integer streams are stable across platforms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, InvalidOperation
from pathlib import Path
from typing import Iterable

import numpy as np

from .core import ParetoSet, WitnessedPoint, validate_pareto_set
from .errors import ConfigError, InvariantError, ParseError, RangeTooSmall


class Kind(str, enum.Enum):
    RANGE = "range"
    NEAR_LINEAR = "near_linear"
    NEAR_CURVED = "near_curved"

    @classmethod
    def parse(cls, s: "str | Kind") -> "Kind":
        if isinstance(s, Kind):
            return s
        return cls(s.replace("-", "_"))


@dataclass(frozen=True)
class GenSpec:
    """Parameters of one generated instance; ``W = round(range_factor * n)``.

    ``bound`` sets W directly and overrides ``range_factor``.

    ``curve_constant`` defaults to ``2 * W**2`` (see :func:`gen_function_instance`).
    """

    kind: Kind = Kind.RANGE
    n: int = 1000
    range_factor: float = 2.0
    curve_constant: int | None = None
    perturb_fraction: float = 0.1
    seed: int = 0
    bound: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        if self.n < 1:
            raise ConfigError("n must be positive")
        if self.bound is None and self.range_factor < 1:
            raise ConfigError("range_factor must be >= 1")
        if not 0.0 <= self.perturb_fraction <= 1.0:
            raise ConfigError("perturb_fraction must lie in [0, 1]")
        if self.W < self.n - 1:
            raise RangeTooSmall(f"W={self.W} < n-1={self.n - 1}")

    @property
    def W(self) -> int:
        if self.bound is not None:
            return int(self.bound)
        return int(round(self.range_factor * self.n))


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def gen_monotone_sequence(n: int, W: int, seed) -> np.ndarray:
    """``n`` distinct sorted integers from ``0..W`` via the counter/surplus sweep.

    Each of ``n`` rounds increments a random counter; a wrap-around sweep then
    moves the surplus ``gamma_i - 1`` of every slot to its successor (slot 0
    follows slot W).  Runs in O(n + W).
    """
    if n < 0:
        raise ConfigError("n must be non-negative")
    if W < n - 1:
        raise RangeTooSmall(f"cannot draw {n} distinct values from [0, {W}]")
    size = W + 1
    gamma = np.bincount(_rng(seed).integers(0, size, size=n), minlength=size).tolist()
    carry = 0
    for i in range(size):
        g = gamma[i] + carry
        carry = g - 1 if g > 1 else 0
        gamma[i] = min(g, 1)
    i = 0
    while carry:
        g = gamma[i] + carry
        carry = g - 1 if g > 1 else 0
        gamma[i] = min(g, 1)
        i += 1
    return np.flatnonzero(np.asarray(gamma, dtype=np.int8)).astype(np.int64)


def gen_range_instance(spec: GenSpec) -> tuple[ParetoSet, ParetoSet]:
    """Two Pareto sets, each zipping an ascending x draw with a descending y draw."""
    if spec.kind is not Kind.RANGE:
        raise ConfigError(f"gen_range_instance needs kind=range, got {spec.kind.value}")
    rng = _rng(spec.seed)
    sets = []
    for _ in range(2):
        xs = gen_monotone_sequence(spec.n, spec.W, rng)
        ys = gen_monotone_sequence(spec.n, spec.W, rng)[::-1]
        sets.append(ParetoSet.from_arrays(xs, ys))
    return sets[0], sets[1]


def sample_linear(xs: np.ndarray, W: int) -> np.ndarray:
    return W - np.asarray(xs, dtype=np.int64)


def sample_curve(xs: np.ndarray, c: int) -> np.ndarray:
    """``round(c / x)`` on increasing ``x >= 1``, nudged so y strictly decreases.

    Collisions are repaired right to left with ``y[i] = max(y[i], y[i+1] + 1)``.
    """
    xs = np.asarray(xs, dtype=np.int64)
    if len(xs) and xs[0] < 1:
        raise ConfigError("curve samples need x >= 1")
    ys = (2 * c + xs) // (2 * xs)
    ys = ys.tolist()
    for i in range(len(ys) - 2, -1, -1):
        if ys[i] <= ys[i + 1]:
            ys[i] = ys[i + 1] + 1
    return np.asarray(ys, dtype=np.int64)


def perturb(ys: np.ndarray, fraction: float, rng, upper: int) -> np.ndarray:
    """Resample a ``fraction`` of the y values inside their neighbours' open interval.

    The first point is bounded above by ``upper`` and the last below by 0, so
    the result stays a strictly decreasing sequence in ``[0, upper]``.
    """
    ys = np.array(ys, dtype=np.int64)
    n = len(ys)
    count = int(round(fraction * n))
    if count == 0:
        return ys
    chosen = np.sort(rng.choice(n, size=count, replace=False))
    for i in chosen.tolist():
        hi = ys[i - 1] if i > 0 else max(upper, ys[i]) + 1
        lo = ys[i + 1] if i + 1 < n else min(0, ys[i]) - 1
        ys[i] = rng.integers(lo + 1, hi)
    return ys


def _function_set(spec: GenSpec, rng) -> ParetoSet:
    W = spec.W
    if spec.kind is Kind.NEAR_LINEAR:
        xs = gen_monotone_sequence(spec.n, W, rng)
        ys = sample_linear(xs, W)
    else:
        # Sample the hyperbola on [W, 2W] where its slope stays within [1/2, 2],
        # then translate both axes back to the origin.
        c = spec.curve_constant if spec.curve_constant is not None else 2 * W * W
        xs = gen_monotone_sequence(spec.n, W, rng) + W
        ys = sample_curve(xs, c)
        xs = xs - W
        ys = ys - ys.min()
    ys = perturb(ys, spec.perturb_fraction, rng, upper=int(ys.max()) if len(ys) else 0)
    return ParetoSet.from_arrays(xs, ys)


def gen_function_instance(spec: GenSpec) -> tuple[ParetoSet, ParetoSet]:
    """Near-linear (``y = W - x``) or near-curved (``y = round(c / x)``) Pareto sets."""
    if spec.kind is Kind.RANGE:
        raise ConfigError("gen_function_instance needs kind near_linear or near_curved")
    rng = _rng(spec.seed)
    return _function_set(spec, rng), _function_set(spec, rng)


def generate(spec: GenSpec) -> tuple[ParetoSet, ParetoSet]:
    if spec.kind is Kind.RANGE:
        return gen_range_instance(spec)
    return gen_function_instance(spec)


# --------------------------------------------------------------------------- I/O


def _parse_int(tok: str, precision: int | None, where: str) -> int:
    if precision is None:
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"{where}: expected an integer, got {tok!r}") from None
    try:
        d = Decimal(tok) * precision
    except InvalidOperation:
        raise ParseError(f"{where}: expected a number, got {tok!r}") from None
    return int(d.to_integral_value(rounding=ROUND_HALF_EVEN))


def _parse_block(lines: list[str], start: int, count: int, precision, label: str) -> ParetoSet:
    pts = []
    for k in range(count):
        lineno = start + k + 1
        toks = lines[start + k].split()
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: expected 'x y', got {lines[start + k]!r}")
        pts.append((_parse_int(toks[0], precision, f"line {lineno}"), _parse_int(toks[1], precision, f"line {lineno}")))
    if not validate_pareto_set(pts):
        raise InvariantError(f"{label} block is not a Pareto set in x order")
    return ParetoSet(pts)


def _content_lines(text: str) -> list[str]:
    return [ln for ln in text.splitlines() if ln.strip()]


def read_instance(path, precision: int | None = None) -> tuple[ParetoSet, ParetoSet]:
    """Parse an instance file.

    With ``precision`` set, coordinates may be decimals; they are multiplied by
    ``precision`` and rounded half-to-even to integers.
    """
    lines = _content_lines(Path(path).read_text(encoding="utf-8"))
    if not lines:
        raise ParseError("empty instance file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"line 1: expected 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"line 1: bad header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise ParseError("negative block size in header")
    if len(lines) - 1 != n + m:
        raise ParseError(f"header announces {n}+{m} points, file has {len(lines) - 1}")
    P = _parse_block(lines, 1, n, precision, "P")
    Q = _parse_block(lines, 1 + n, m, precision, "Q")
    return P, Q


def _lines(points) -> list[str]:
    if isinstance(points, ParetoSet):
        return [f"{x} {y}" for x, y in zip(points.xs.tolist(), points.ys.tolist())]
    out = []
    for p in points:
        if isinstance(p, WitnessedPoint):
            p = p.point
        out.append(f"{int(p[0])} {int(p[1])}")
    return out


def write_instance(path, P: ParetoSet, Q: ParetoSet) -> None:
    body = [f"{len(P)} {len(Q)}"] + _lines(P) + _lines(Q)
    Path(path).write_text("\n".join(body) + "\n", encoding="utf-8", newline="\n")


def write_result(path, points: Iterable) -> None:
    body = _lines(points)
    Path(path).write_text("".join(ln + "\n" for ln in body), encoding="utf-8", newline="\n")


def read_result(path, precision: int | None = None) -> ParetoSet:
    lines = _content_lines(Path(path).read_text(encoding="utf-8"))
    return _parse_block(lines, 0, len(lines), precision, "result")
