"""Independent brute-force routes for checking the library.

Everything here deliberately avoids the closed-form contraction product,
the ExactAmplitude radical arithmetic and the matrix builder: the rewriter
applies the single rule a·a† → a†·a + 1 one randomly chosen spot at a time,
and the ladder walkers apply one operator per step straight from
a|n⟩ = √n|n-1⟩, a†|n⟩ = √(n+1)|n+1⟩.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction

from oscalgebra.scalar import Scalar
from oscalgebra.weyl import WeylPolynomial


def normal_order_word(word: tuple[str, ...], rng) -> dict[tuple[int, int], int]:
    """Normal order a word of "c" (creation) / "a" (annihilation) symbols,
    resolving rewrite spots in random order; returns {(p, q): multiplicity}."""
    counts: dict[tuple[int, int], int] = defaultdict(int)
    stack = [tuple(word)]
    while stack:
        w = stack.pop()
        spots = [i for i in range(len(w) - 1) if w[i] == "a" and w[i + 1] == "c"]
        if not spots:
            counts[(w.count("c"), w.count("a"))] += 1
            continue
        i = rng.choice(spots)
        stack.append(w[:i] + ("c", "a") + w[i + 2 :])
        stack.append(w[:i] + w[i + 2 :])
    return dict(counts)


def rewrite_multiply(x: WeylPolynomial, y: WeylPolynomial, rng) -> WeylPolynomial:
    """Product of two polynomials via the randomly scheduled rewriter."""
    acc: dict[tuple[int, int], Scalar] = {}
    for mx, cx in x.items():
        for my, cy in y.items():
            word = ("c",) * mx.p + ("a",) * mx.q + ("c",) * my.p + ("a",) * my.q
            for key, mult in normal_order_word(word, rng).items():
                acc[key] = acc.get(key, Scalar(0)) + cx * cy * mult
    return WeylPolynomial(acc)


def monomial_target_and_square(p: int, q: int, n: int) -> tuple[int, Fraction]:
    """Apply a q times then a† p times to |n⟩, one step at a time.

    Returns (target index, squared amplitude) with the square exact: each
    step multiplies it by the integer under the root.
    """
    square = Fraction(1)
    state = n
    for _ in range(q):
        square *= state  # zero once the ladder hits the bottom
        state -= 1
    if square == 0:
        return state + p, Fraction(0)
    for _ in range(p):
        state += 1
        square *= state
    return state, square


def apply_poly_numeric(poly: WeylPolynomial, n: int) -> dict[int, float]:
    """x|n⟩ by floating one-operator-at-a-time ladder steps."""
    out: dict[int, float] = defaultdict(float)
    for mono, coeff in poly.items():
        state = n
        amp = float(coeff)
        for _ in range(mono.q):
            amp *= math.sqrt(max(state, 0))
            state -= 1
        if amp == 0.0:
            continue
        for _ in range(mono.p):
            state += 1
            amp *= math.sqrt(state)
        out[state] += amp
    return {k: v for k, v in out.items() if v != 0.0}
