"""Triangular fuzzy numbers and the componentwise algebra built on them.

All pairwise judgments in the pipeline are triangular fuzzy numbers (TFNs).
Multiplication and k-th roots follow the usual componentwise approximation,
which keeps the geometric-mean weight derivation closed over TFNs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPositiveComponent


@dataclass(frozen=True, slots=True)
class TFN:
    """Triangular fuzzy number ``(l, m, u)`` with ``l <= m <= u``.

    ``l`` and ``u`` bound the support, ``m`` is the most likely value.
    Crisp numbers are the degenerate case ``l == m == u``.
    """

    l: float
    m: float
    u: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(c) for c in (self.l, self.m, self.u)):
            raise ValueError(
                f"TFN components must be finite, got ({self.l}, {self.m}, {self.u})"
            )
        if not (self.l <= self.m <= self.u):
            raise ValueError(
                f"TFN components must satisfy l <= m <= u, got ({self.l}, {self.m}, {self.u})"
            )

    @classmethod
    def crisp(cls, value: float) -> TFN:
        return cls(value, value, value)

    # -- componentwise algebra ------------------------------------------------

    def add(self, other: TFN) -> TFN:
        return TFN(self.l + other.l, self.m + other.m, self.u + other.u)

    def mul(self, other: TFN) -> TFN:
        return TFN(self.l * other.l, self.m * other.m, self.u * other.u)

    __add__ = add
    __mul__ = mul

    def reciprocal(self) -> TFN:
        """``(1/u, 1/m, 1/l)``; requires strictly positive components."""
        if self.l <= 0:
            raise NonPositiveComponent(f"cannot invert {self}: l must be > 0")
        return TFN(1.0 / self.u, 1.0 / self.m, 1.0 / self.l)

    def root(self, k: int) -> TFN:
        """Componentwise k-th root; requires strictly positive components."""
        if k < 1:
            raise ValueError(f"root order must be >= 1, got {k}")
        if self.l <= 0:
            raise NonPositiveComponent(f"cannot take root of {self}: l must be > 0")
        e = 1.0 / k
        return TFN(self.l**e, self.m**e, self.u**e)

    # -- membership and defuzzification ---------------------------------------

    def membership(self, x: float) -> float:
        """Piecewise-linear membership: 0 outside [l, u], 1 at m.

        Vertical segments (l == m or m == u) evaluate to 1 at the shared
        point, so crisp numbers have membership 1 at their value.
        """
        if x < self.l or x > self.u:
            return 0.0
        if x == self.m:
            return 1.0
        if x < self.m:
            return (x - self.l) / (self.m - self.l)
        return (self.u - x) / (self.u - self.m)

    def defuzzify(self) -> float:
        """Centre-of-area defuzzification: ``(l + m + u) / 3``."""
        return (self.l + self.m + self.u) / 3.0

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l, self.m, self.u)

    def __repr__(self) -> str:
        return f"TFN({self.l:g}, {self.m:g}, {self.u:g})"
