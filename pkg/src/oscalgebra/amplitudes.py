"""Exact sums of rational multiples of square roots: Σ cᵢ·√kᵢ.

Ladder actions produce amplitudes like √n and ½√((n+1)(n+2)).  Keeping them
as rational coefficients attached to square-free integer radicands gives an
exact zero test (the term list is empty), which is what the orbit walker
relies on instead of a floating threshold.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from .scalar import Scalar


def square_free(k: int) -> tuple[int, int]:
    """Split k > 0 as outer²·free with free square-free; returns (outer, free)."""
    if k <= 0:
        raise ValueError("radicand must be positive")
    outer, free = 1, 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            e = 0
            while k % d == 0:
                k //= d
                e += 1
            outer *= d ** (e // 2)
            if e % 2:
                free *= d
        d += 1 if d == 2 else 2
    return outer, free * k


class ExactAmplitude:
    """Immutable value Σ cᵢ·√kᵢ with distinct square-free radicands kᵢ."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[Rational, int]] = ()):
        data: dict[int, Fraction] = {}
        for coeff, radicand in terms:
            outer, free = square_free(radicand)
            c = data.get(free, Fraction(0)) + Fraction(coeff) * outer
            if c:
                data[free] = c
            else:
                data.pop(free, None)
        object.__setattr__(self, "_terms", tuple(sorted(data.items())))

    def __setattr__(self, name, value):
        raise AttributeError("ExactAmplitude is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "ExactAmplitude":
        return cls()

    @classmethod
    def rational(cls, c) -> "ExactAmplitude":
        return cls([(Fraction(c), 1)])

    @classmethod
    def sqrt_product(cls, factors: Iterable[int]) -> "ExactAmplitude":
        """√(Π factors), reduced exactly; each factor is a small integer."""
        outer, free = 1, 1
        for f in factors:
            o, s = square_free(f)
            outer *= o
            g = math.gcd(free, s)
            outer *= g
            free = (free // g) * (s // g)
        return cls([(Fraction(outer), free)])

    @classmethod
    def from_scalar(cls, s: Scalar) -> "ExactAmplitude":
        """a + b·√½ becomes a·√1 + (b/2)·√2."""
        return cls([(s.a, 1), (s.b / 2, 2)])

    # -- structure -----------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_rational(self) -> bool:
        return all(k == 1 for k, _ in self._terms)

    def as_fraction(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        if self.is_rational():
            return self._terms[0][1]
        raise ValueError(f"{self} is irrational")

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ExactAmplitude):
            return NotImplemented
        return ExactAmplitude(
            [(c, k) for k, c in self._terms] + [(c, k) for k, c in other._terms]
        )

    def __neg__(self):
        return ExactAmplitude([(-c, k) for k, c in self._terms])

    def __sub__(self, other):
        if not isinstance(other, ExactAmplitude):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Rational):
            return ExactAmplitude([(c * other, k) for k, c in self._terms])
        if not isinstance(other, ExactAmplitude):
            return NotImplemented
        # √k1·√k2 = g·√((k1/g)(k2/g)) with g = gcd: square-free times
        # square-free stays square-free after pulling the gcd out.
        out = []
        for k1, c1 in self._terms:
            for k2, c2 in other._terms:
                g = math.gcd(k1, k2)
                out.append((c1 * c2 * g, (k1 // g) * (k2 // g)))
        return ExactAmplitude(out)

    __rmul__ = __mul__

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = ExactAmplitude.rational(other)
        if not isinstance(other, ExactAmplitude):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __float__(self) -> float:
        return sum((float(c) * math.sqrt(k) for k, c in self._terms), 0.0)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms:
            if k == 1:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"√{k}")
            elif c == -1:
                parts.append(f"-√{k}")
            else:
                parts.append(f"{c}·√{k}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"<ExactAmplitude {self}>"
