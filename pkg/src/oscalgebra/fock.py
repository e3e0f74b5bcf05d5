"""Truncated Fock-space realization of the ladder algebra.

A normal-ordered word acts on the number basis through

    a|n⟩ = √n |n-1⟩,      a†|n⟩ = √(n+1) |n+1⟩,

so the N×N matrix of a monomial (a†)^p a^q lives on the single diagonal
offset p-q with entries √(n!/(n-q)!)·√(m!/(n-q)!), m = n-q+p.  Stored
entries are exact truncations of the infinite matrix; truncation error
enters only through matrix products, and only within 2·degree rows of the
cutoff.  That gives every product check a trusted window of exact indices.

The orbit walker never touches floats: reachability edges come from the
exact amplitude arithmetic, so "zero" means the empty term list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .amplitudes import ExactAmplitude
from .relations import all_relations
from .report import VerificationReport, numeric_check
from .scalar import Scalar
from .weyl import (
    WeylPolynomial,
    as_poly,
    canonical_name,
    hamiltonian,
    standard_generators,
)


@dataclass(frozen=True)
class FockOperator:
    """Dense truncation of an operator to the first `dim` number states.

    `trusted` is the count of leading indices on which products with other
    truncations of comparable degree still reproduce the infinite-dimensional
    algebra (entries above it can be corrupted by the cutoff).
    """

    dim: int
    entries: np.ndarray
    source_degree: int
    trusted: int

    def offsets(self) -> tuple[int, ...]:
        """Diagonals (row - column) carrying nonzero entries."""
        found = []
        for off in range(-(self.dim - 1), self.dim):
            if np.any(np.diagonal(self.entries, -off)):
                found.append(off)
        return tuple(found)

    def apply(self, state: "FockState") -> "FockState":
        return FockState(self.dim, self.entries @ state.amplitudes)


@dataclass(frozen=True)
class FockState:
    dim: int
    amplitudes: np.ndarray

    @classmethod
    def basis(cls, dim: int, n: int) -> "FockState":
        if not 0 <= n < dim:
            raise ValueError(f"basis index {n} outside [0, {dim})")
        vec = np.zeros(dim, dtype=complex)
        vec[n] = 1.0
        return cls(dim, vec)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> "FockState":
        nrm = self.norm()
        if nrm == 0.0:
            raise ValueError("cannot normalize the zero state")
        return FockState(self.dim, self.amplitudes / nrm)

    def overlap(self, other: "FockState") -> complex:
        return complex(np.vdot(self.amplitudes, other.amplitudes))


def _scalar_value(c: Scalar, dtype) -> float:
    a = dtype(c.a.numerator) / dtype(c.a.denominator)
    b = dtype(c.b.numerator) / dtype(c.b.denominator)
    return a + b * np.sqrt(dtype(0.5))


def _shift_factors(p: int, q: int, n: int) -> list[int]:
    """Integer factors whose product is the squared amplitude of
    (a†)^p a^q |n⟩ (valid for n ≥ q)."""
    return [n - i for i in range(q)] + [n - q + j for j in range(1, p + 1)]


def to_matrix(x, dim: int, dtype=np.float64) -> FockOperator:
    """Truncated matrix of a polynomial; entry (m, n) sums, over monomials
    with offset m-n, coeff·√(n!/(n-q)!)·√(m!/(n-q)!)."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    poly = as_poly(x)
    entries = np.zeros((dim, dim), dtype=dtype)
    for mono, coeff in poly.items():
        value = _scalar_value(coeff, dtype)
        for n in range(mono.q, dim):
            m = n - mono.q + mono.p
            if m >= dim:
                continue
            radicand = 1
            for f in _shift_factors(mono.p, mono.q, n):
                radicand *= f
            entries[m, n] += value * np.sqrt(dtype(radicand))
    degree = poly.degree
    return FockOperator(
        dim=dim,
        entries=entries,
        source_degree=degree,
        trusted=max(dim - 2 * degree, 0),
    )


def spectrum(dim: int, hbar_omega: float = 1.0) -> list[float]:
    """Oscillator energies ħω(n+½), n < dim, read off the Hamiltonian matrix."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    if hbar_omega <= 0:
        raise ValueError("ħω must be positive")
    matrix = to_matrix(hamiltonian(), dim).entries
    diag = np.diag(matrix)
    if np.array_equal(matrix, np.diag(diag)):
        eigenvalues = np.sort(diag)  # diagonal: no solver round-off
    else:
        eigenvalues = np.linalg.eigvalsh(matrix)
    return [float(hbar_omega) * float(e) for e in eigenvalues]


def parity_matrix(dim: int) -> FockOperator:
    """The reflection (a, a†) → (-a, -a†): diag((-1)^n) on number states.

    Not a ladder polynomial, so it is represented only here.
    """
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    signs = np.array([(-1.0) ** n for n in range(dim)])
    return FockOperator(dim=dim, entries=np.diag(signs), source_degree=0, trusted=dim)


def sector_projectors(dim: int) -> tuple[FockOperator, FockOperator]:
    """½(1 ± P): orthogonal idempotents onto the even/odd number sectors."""
    p = parity_matrix(dim).entries
    eye = np.eye(dim)
    plus = FockOperator(dim, (eye + p) / 2, 0, dim)
    minus = FockOperator(dim, (eye - p) / 2, 0, dim)
    return plus, minus


def ladder_amplitude(x, n: int) -> dict[int, ExactAmplitude]:
    """Exact amplitudes of x|n⟩ keyed by target index; zeros are dropped."""
    if n < 0:
        raise ValueError("number-state index must be non-negative")
    poly = as_poly(x)
    out: dict[int, ExactAmplitude] = {}
    for mono, coeff in poly.items():
        if n < mono.q:
            continue  # annihilation terminates below |0⟩
        target = n - mono.q + mono.p
        amp = ExactAmplitude.from_scalar(coeff) * ExactAmplitude.sqrt_product(
            _shift_factors(mono.p, mono.q, n)
        )
        total = out.get(target, ExactAmplitude.zero()) + amp
        if total.is_zero:
            out.pop(target, None)
        else:
            out[target] = total
    return dict(sorted(out.items()))


def norm_condition(n: int) -> tuple[Fraction, Fraction]:
    """Exact (‖K+|n⟩‖², ‖K-|n⟩‖²), both provably non-negative by construction."""
    gens = standard_generators()
    values = []
    for name in ("K+", "K-"):
        amps = ladder_amplitude(gens[name], n)
        total = ExactAmplitude.zero()
        for amp in amps.values():
            total = total + amp * amp
        values.append(total.as_fraction())
    return values[0], values[1]


@dataclass(frozen=True)
class OrbitReport:
    seed: int
    generator_names: tuple[str, ...]
    window: int
    reachable: tuple[int, ...]
    partition: tuple[tuple[int, ...], ...]

    @property
    def orbit_count(self) -> int:
        return len(self.partition)


def _named_generators(generators) -> list[tuple[str, WeylPolynomial]]:
    if isinstance(generators, Mapping):
        return [(name, as_poly(g)) for name, g in generators.items()]
    named = []
    for i, g in enumerate(generators):
        poly = as_poly(g)
        named.append((canonical_name(poly) or f"g{i}", poly))
    return named


def orbit(seed: int, generators, dim: int) -> OrbitReport:
    """Breadth-first reachability between number states inside the trusted
    window, with an edge n → m whenever some generator (or its adjoint, i.e.
    the reverse direction) has a nonzero exact amplitude from n to m."""
    named = _named_generators(generators)
    if not named:
        raise ValueError("empty generator set")
    degree = max(poly.degree for _, poly in named)
    window = dim - 2 * degree
    if not 0 <= seed < window:
        raise ValueError(f"seed {seed} outside the trusted window [0, {window})")

    neighbors: list[set[int]] = [set() for _ in range(window)]
    for n in range(window):
        for _, poly in named:
            for m in ladder_amplitude(poly, n):
                if m != n and m < window:
                    neighbors[n].add(m)
                    neighbors[m].add(n)  # adjoint direction

    def sweep(start: int, seen: set[int]) -> tuple[int, ...]:
        block = []
        queue = [start]
        seen.add(start)
        while queue:
            v = queue.pop()
            block.append(v)
            for w in neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return tuple(sorted(block))

    reachable = sweep(seed, set())
    partition = []
    seen: set[int] = set()
    for start in range(window):
        if start not in seen:
            partition.append(sweep(start, seen))
    return OrbitReport(
        seed=seed,
        generator_names=tuple(name for name, _ in named),
        window=window,
        reachable=reachable,
        partition=tuple(partition),
    )


def band_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product by convolving occupied diagonals: identical to a @ b
    for band matrices at O(bands²·N) cost, in any dtype."""
    n = a.shape[0]
    out = np.zeros_like(a)
    offs_a = [k for k in range(-(n - 1), n) if np.any(np.diagonal(a, k))]
    offs_b = [k for k in range(-(n - 1), n) if np.any(np.diagonal(b, k))]
    for ka in offs_a:
        for kb in offs_b:
            lo = max(0, -ka, -ka - kb)
            hi = min(n, n - ka, n - ka - kb)
            if lo >= hi:
                continue
            rows = np.arange(lo, hi)
            out[rows, rows + ka + kb] += a[rows, rows + ka] * b[rows + ka, rows + ka + kb]
    return out


def relation_residuals(dim: int, tolerance: float = 1e-12) -> VerificationReport:
    """Check every defining identity on truncated matrices.

    Left sides are built from matrix products, right sides from the matrix
    of the symbolic result; the reported residual is the max absolute entry
    difference on the relation's trusted window.  Products are carried at
    extended precision so the residual measures truncation rather than entry
    round-off, which would otherwise grow with the product magnitude O(dim²)
    and swamp a 1e-12 budget near dim = 256.  The full-matrix residual is
    reported alongside: it exposes the genuine truncation artifact above the
    window.
    """
    relations = all_relations()
    max_margin = max(rel.window_margin for rel in relations)
    if dim - max_margin < 1:
        raise ValueError(
            f"dim={dim} leaves an empty trusted window for margin {max_margin}; "
            f"need dim ≥ {max_margin + 1}"
        )
    dtype = np.longdouble
    cache: dict[WeylPolynomial, np.ndarray] = {}

    def matrix(poly: WeylPolynomial) -> np.ndarray:
        if poly not in cache:
            cache[poly] = to_matrix(poly, dim, dtype).entries
        return cache[poly]

    report = VerificationReport()
    for rel in relations:
        if rel.kind == "commutator":
            x, y = (matrix(op) for op in rel.operands)
            lhs = band_product(x, y) - band_product(y, x)
        elif rel.kind == "anticommutator":
            x, y = (matrix(op) for op in rel.operands)
            lhs = band_product(x, y) + band_product(y, x)
        else:  # quadratic invariant
            kp, km, k3 = (matrix(op) for op in rel.operands)
            lhs = (band_product(kp, km) + band_product(km, kp)) / dtype(2)
            lhs = lhs - band_product(k3, k3)
        diff = np.abs(lhs - matrix(rel.rhs))
        t = dim - rel.window_margin
        window_residual = float(diff[:t, :t].max())
        full_residual = float(diff.max())
        report.checks.append(
            numeric_check(
                rel.name,
                window_residual,
                tolerance,
                detail=(
                    f"window {t}×{t} of {dim}; "
                    f"full-matrix residual {full_residual:.3e}"
                ),
            )
        )
    return report
