"""Graded-basis bookkeeping: bracket closure, structure constants, Jacobi.

All linear algebra runs over the exact coefficient field Q(√½), with
coordinates taken in the (total degree, creation exponent) monomial order,
so span decisions are deterministic: no numeric rank thresholds anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .report import VerificationReport, symbolic_check
from .scalar import Scalar
from .weyl import (
    ODD,
    GradedElement,
    WeylPolynomial,
    _canonical_key,
    canonical_name,
    commutator,
    graded_bracket,
    named_constants,
)

GRADED = "graded"
COMMUTATOR_ONLY = "commutator-only"
_MODE_ALIASES = {
    GRADED: GRADED,
    COMMUTATOR_ONLY: COMMUTATOR_ONLY,
    "commutator": COMMUTATOR_ONLY,
}


class ClosureOverflowError(RuntimeError):
    """Closure exceeded the requested dimension bound (not closed at max_dim)."""

    def __init__(self, max_dim: int, names: list[str]):
        super().__init__(
            f"bracket closure exceeds max_dim={max_dim}; "
            f"basis so far: {', '.join(names)}"
        )
        self.max_dim = max_dim
        self.names = names


# -- exact linear algebra ------------------------------------------------------


def _coordinates(polys: Sequence[WeylPolynomial]) -> list[list[Scalar]]:
    """Coordinate columns of the given polynomials over their joint monomials."""
    monomials = sorted({m for p in polys for m in p.terms}, key=_canonical_key)
    return [[p.coefficient(*m) for m in monomials] for p in polys]


def _solve_exact(
    columns: Sequence[Sequence[Scalar]], target: Sequence[Scalar]
) -> list[Scalar] | None:
    """Solve Σ cⱼ·columns[j] = target by Gauss-Jordan elimination over Q(√½).

    Pivots on the first nonzero coordinate of each column; returns None when
    the target lies outside the span.
    """
    n_rows = len(target)
    n_cols = len(columns)
    rows = [[col[r] for col in columns] + [target[r]] for r in range(n_rows)]
    pivots: list[tuple[int, int]] = []
    front = 0
    for c in range(n_cols):
        pivot_row = next((r for r in range(front, n_rows) if rows[r][c]), None)
        if pivot_row is None:
            continue
        rows[front], rows[pivot_row] = rows[pivot_row], rows[front]
        inv = rows[front][c].inverse()
        rows[front] = [x * inv for x in rows[front]]
        for r in range(n_rows):
            if r != front and rows[r][c]:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[front])]
        pivots.append((front, c))
        front += 1
        if front == n_rows:
            break
    pivot_rows = {r for r, _ in pivots}
    for r in range(n_rows):
        if r not in pivot_rows and rows[r][n_cols]:
            return None
    coeffs = [Scalar(0)] * n_cols
    for r, c in pivots:
        coeffs[c] = rows[r][n_cols]
    return coeffs


def _rank(columns: Sequence[Sequence[Scalar]]) -> int:
    if not columns:
        return 0
    n_rows = len(columns[0])
    rows = [[col[r] for col in columns] for r in range(n_rows)]
    rank = 0
    for c in range(len(columns)):
        pivot_row = next((r for r in range(rank, n_rows) if rows[r][c]), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = rows[rank][c].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(rank + 1, n_rows):
            if rows[r][c]:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# -- bases --------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraBasis:
    """Ordered, named, exactly-independent graded elements."""

    elements: tuple[tuple[str, GradedElement], ...]

    def __post_init__(self):
        names = [name for name, _ in self.elements]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate basis names: {names}")
        if _rank(_coordinates([e.poly for _, e in self.elements])) != len(names):
            raise ValueError("basis elements are linearly dependent")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.elements)

    @property
    def dim(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> tuple[str, GradedElement]:
        return self.elements[i]

    def polys(self) -> list[WeylPolynomial]:
        return [e.poly for _, e in self.elements]

    def span_coefficients(self, poly: WeylPolynomial) -> list[Scalar] | None:
        """Expansion of poly in this basis, or None if outside the span."""
        basis_polys = self.polys()
        monomials = sorted(
            {m for p in basis_polys for m in p.terms} | set(poly.terms),
            key=_canonical_key,
        )
        columns = [[p.coefficient(*m) for m in monomials] for p in basis_polys]
        target = [poly.coefficient(*m) for m in monomials]
        return _solve_exact(columns, target)

    def contains(self, poly: WeylPolynomial) -> bool:
        return self.span_coefficients(poly) is not None

    def spans_same(self, other: "AlgebraBasis") -> bool:
        return all(self.contains(p) for p in other.polys()) and all(
            other.contains(p) for p in self.polys()
        )


@dataclass(frozen=True)
class ClosureResult:
    basis: AlgebraBasis
    generations: int  # full pair sweeps until a sweep added nothing
    added: tuple[str, ...]


def _coerce_graded(x) -> GradedElement:
    return x if isinstance(x, GradedElement) else GradedElement.of(x)


def _bracket_in_mode(x: GradedElement, y: GradedElement, mode: str) -> GradedElement:
    if mode == GRADED:
        return graded_bracket(x, y)
    return GradedElement(commutator(x.poly, y.poly), (x.parity + y.parity) % 2)


def close_under_bracket(
    seed: Iterable[GradedElement | WeylPolynomial],
    mode: str = GRADED,
    max_dim: int = 16,
) -> ClosureResult:
    """Close a generator set under the bracket, appending whatever escapes
    the current span until every pairwise bracket lies inside it.

    In graded mode the bracket of two odd elements is the anticommutator
    (including an element with itself); commutator-only mode uses the plain
    commutator for every pair.  New elements that are scalar multiples of a
    standard generator or of the identity are stored under their canonical
    name; anything else is named G0, G1, ... in creation order.
    """
    try:
        mode = _MODE_ALIASES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}; use {GRADED!r} or {COMMUTATOR_ONLY!r}")
    elements = [_coerce_graded(x) for x in seed]
    if not elements:
        raise ValueError("empty seed")
    if max_dim < len(elements):
        raise ValueError(f"max_dim={max_dim} is below the seed size {len(elements)}")
    if _rank(_coordinates([e.poly for e in elements])) != len(elements):
        raise ValueError("seed elements are linearly dependent")

    reference = named_constants()
    counter = itertools.count()
    taken: set[str] = set()

    def fresh_name(poly: WeylPolynomial) -> tuple[str, GradedElement | None]:
        name = canonical_name(poly)
        if name is not None and name not in taken:
            taken.add(name)
            return name, reference[name]
        name = f"G{next(counter)}"
        while name in taken:
            name = f"G{next(counter)}"
        taken.add(name)
        return name, None

    named: list[tuple[str, GradedElement]] = []
    for elem in elements:
        name, _ = fresh_name(elem.poly)
        named.append((name, elem))

    added: list[str] = []
    generations = 0
    while True:
        generations += 1
        snapshot = list(named)
        grew = False
        for i, j in itertools.combinations_with_replacement(range(len(snapshot)), 2):
            xi, xj = snapshot[i][1], snapshot[j][1]
            if i == j and not (mode == GRADED and xi.parity == ODD):
                continue  # [x, x] = 0; only {x, x} can produce anything
            result = _bracket_in_mode(xi, xj, mode)
            if result.poly.is_zero:
                continue
            basis_now = [e.poly for _, e in named]
            monomials = sorted(
                {m for p in basis_now for m in p.terms} | set(result.poly.terms),
                key=_canonical_key,
            )
            columns = [[p.coefficient(*m) for m in monomials] for p in basis_now]
            target = [result.poly.coefficient(*m) for m in monomials]
            if _solve_exact(columns, target) is not None:
                continue
            if len(named) + 1 > max_dim:
                raise ClosureOverflowError(max_dim, [n for n, _ in named])
            name, normalized = fresh_name(result.poly)
            named.append((name, normalized if normalized is not None else result))
            added.append(name)
            grew = True
        if not grew:
            break
    return ClosureResult(
        basis=AlgebraBasis(tuple(named)),
        generations=generations,
        added=tuple(added),
    )


# -- structure constants ---------------------------------------------------------

COMMUTATOR = "commutator"
ANTICOMMUTATOR = "anticommutator"


@dataclass(frozen=True)
class StructureConstants:
    """Tensor c[i][j][k]: coefficient of basis element k in [eᵢ, eⱼ}."""

    names: tuple[str, ...]
    parities: tuple[int, ...]
    tensor: tuple[tuple[tuple[Scalar, ...], ...], ...]
    kinds: tuple[tuple[str, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.names)

    def index(self, key) -> int:
        return key if isinstance(key, int) else self.names.index(key)

    def coefficient(self, i, j, k) -> Scalar:
        return self.tensor[self.index(i)][self.index(j)][self.index(k)]

    def bracket_kind(self, i, j) -> str:
        return self.kinds[self.index(i)][self.index(j)]


def structure_constants(basis: AlgebraBasis) -> StructureConstants:
    """Exact expansion coefficients of every graded bracket of basis pairs."""
    n = basis.dim
    parities = tuple(e.parity for _, e in basis)
    tensor = []
    kinds = []
    for i in range(n):
        row = []
        kind_row = []
        for j in range(n):
            bracket = graded_bracket(basis[i][1], basis[j][1]).poly
            coeffs = basis.span_coefficients(bracket)
            if coeffs is None:
                raise ValueError(
                    f"bracket of {basis.names[i]} and {basis.names[j]} escapes "
                    "the span: the basis is not closed"
                )
            row.append(tuple(coeffs))
            kind_row.append(
                ANTICOMMUTATOR
                if parities[i] == ODD and parities[j] == ODD
                else COMMUTATOR
            )
        tensor.append(tuple(row))
        kinds.append(tuple(kind_row))
    return StructureConstants(
        names=basis.names,
        parities=parities,
        tensor=tuple(tensor),
        kinds=tuple(kinds),
    )


# -- graded Jacobi identity -------------------------------------------------------


def _jacobi_sign(px: int, pz: int) -> int:
    return -1 if (px * pz) % 2 else 1


def graded_jacobi_check(basis: AlgebraBasis) -> VerificationReport:
    """Evaluate (-1)^(|x||z|)·[x,[y,z}} + cyclic for every unordered triple
    (with repetition) of basis elements; each must be the zero polynomial."""
    report = VerificationReport()
    for i, j, k in itertools.combinations_with_replacement(range(basis.dim), 3):
        x, y, z = basis[i][1], basis[j][1], basis[k][1]
        total = (
            graded_bracket(x, graded_bracket(y, z)).poly.scaled(
                _jacobi_sign(x.parity, z.parity)
            )
            + graded_bracket(y, graded_bracket(z, x)).poly.scaled(
                _jacobi_sign(y.parity, x.parity)
            )
            + graded_bracket(z, graded_bracket(x, y)).poly.scaled(
                _jacobi_sign(z.parity, y.parity)
            )
        )
        name = f"jacobi({basis.names[i]},{basis.names[j]},{basis.names[k]})"
        report.checks.append(
            symbolic_check(name, total.is_zero, "" if total.is_zero else f"residual {total}")
        )
    return report


def jacobi_from_constants(sc: StructureConstants) -> VerificationReport:
    """Same identity evaluated purely through the structure-constant tensor,
    so a corrupted tensor is caught even though the realization is exact."""
    report = VerificationReport()
    n = sc.dim
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        s1 = _jacobi_sign(sc.parities[i], sc.parities[k])
        s2 = _jacobi_sign(sc.parities[j], sc.parities[i])
        s3 = _jacobi_sign(sc.parities[k], sc.parities[j])
        bad: list[str] = []
        for target in range(n):
            total = Scalar(0)
            for m in range(n):
                total = (
                    total
                    + sc.tensor[j][k][m] * sc.tensor[i][m][target] * s1
                    + sc.tensor[k][i][m] * sc.tensor[j][m][target] * s2
                    + sc.tensor[i][j][m] * sc.tensor[k][m][target] * s3
                )
            if not total.is_zero:
                bad.append(f"{sc.names[target]}: {total}")
        name = f"jacobi-tensor({sc.names[i]},{sc.names[j]},{sc.names[k]})"
        report.checks.append(
            symbolic_check(name, not bad, "; ".join(bad))
        )
    return report
