"""Operators on a coordinatewise-ordered R^n and their lattice structure.

Operators are exact rational matrices acting on column vectors:
(T·x)_k = Σ_i entries[k][i] · x_i.  On these spaces every matrix is a
regular operator and the lattice operations are entrywise, which gives a
cheap route to suprema.  The expensive route — evaluating the supremum
formula (S ∨ T)(x) = sup{S·u + T·v : u, v ≥ 0, u + v = x} by enumerating
the vertices of the splitting box — is kept deliberately separate in
rk_oracle so the two can be checked against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import AlgebraSpec
from .errors import CapExceededError, DimensionMismatchError, InputError, UnsupportedNormError
from .lattice import LatticeElement, NormSpec, as_scalar

RK_DIM_CAP = 12


@dataclass(frozen=True)
class OperatorMatrix:
    """An exact rational matrix as an operator on R^n (rows = output coords)."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise InputError("operator matrix must be square and nonempty")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @staticmethod
    def from_rows(rows: Iterable[Iterable]) -> "OperatorMatrix":
        return OperatorMatrix(tuple(tuple(as_scalar(v) for v in row) for row in rows))

    @staticmethod
    def identity(n: int) -> "OperatorMatrix":
        return OperatorMatrix(
            tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))
        )

    @staticmethod
    def zero(n: int) -> "OperatorMatrix":
        return OperatorMatrix(tuple((Fraction(0),) * n for _ in range(n)))

    @staticmethod
    def diagonal(values: Sequence) -> "OperatorMatrix":
        vals = [as_scalar(v) for v in values]
        n = len(vals)
        return OperatorMatrix(
            tuple(tuple(vals[i] if i == j else Fraction(0) for j in range(n)) for i in range(n))
        )

    # -- action and arithmetic -------------------------------------------

    def apply(self, x: LatticeElement) -> LatticeElement:
        if x.dim != self.dim:
            raise DimensionMismatchError("operator/vector dimension mismatch")
        return LatticeElement(
            tuple(sum((r * c for r, c in zip(row, x.coords)), Fraction(0)) for row in self.entries)
        )

    def __call__(self, x: LatticeElement) -> LatticeElement:
        return self.apply(x)

    def compose(self, other: "OperatorMatrix") -> "OperatorMatrix":
        """self ∘ other as matrices (apply other first)."""
        if other.dim != self.dim:
            raise DimensionMismatchError("operator dimension mismatch")
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                row.append(
                    sum((self.entries[i][k] * other.entries[k][j] for k in range(n)), Fraction(0))
                )
            rows.append(tuple(row))
        return OperatorMatrix(tuple(rows))

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return self.compose(other)

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if other.dim != self.dim:
            raise DimensionMismatchError("operator dimension mismatch")
        return OperatorMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if other.dim != self.dim:
            raise DimensionMismatchError("operator dimension mismatch")
        return OperatorMatrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def scale(self, c) -> "OperatorMatrix":
        q = as_scalar(c)
        return OperatorMatrix(tuple(tuple(q * v for v in row) for row in self.entries))

    # -- order structure ---------------------------------------------------

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for row in self.entries for v in row)

    def leq(self, other: "OperatorMatrix") -> bool:
        """Entrywise order, which is the operator order on these lattices."""
        if other.dim != self.dim:
            raise DimensionMismatchError("operator dimension mismatch")
        return all(
            a <= b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def modulus(self) -> "OperatorMatrix":
        """|T|, which on a coordinatewise lattice is the entrywise absolute value."""
        return OperatorMatrix(tuple(tuple(abs(v) for v in row) for row in self.entries))

    def is_idempotent(self) -> bool:
        return self.compose(self) == self

    def rows_list(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]


def op_sup(s: OperatorMatrix, t: OperatorMatrix) -> OperatorMatrix:
    """S ∨ T entrywise — the operator supremum on a coordinatewise lattice."""
    if s.dim != t.dim:
        raise DimensionMismatchError("operator dimension mismatch")
    return OperatorMatrix(
        tuple(tuple(max(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(s.entries, t.entries))
    )


def op_inf(s: OperatorMatrix, t: OperatorMatrix) -> OperatorMatrix:
    if s.dim != t.dim:
        raise DimensionMismatchError("operator dimension mismatch")
    return OperatorMatrix(
        tuple(tuple(min(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(s.entries, t.entries))
    )


def rk_oracle(s: OperatorMatrix, t: OperatorMatrix, x: LatticeElement) -> LatticeElement:
    """(S ∨ T)(x) for x ≥ 0 straight from the supremum formula.

    Evaluates sup{S·u + T·(x − u) : 0 ≤ u ≤ x} by enumerating the 2^n
    vertices u_i ∈ {0, x_i} of the splitting box.  Per coordinate the
    objective is linear in u, so the supremum over the box is attained at
    a vertex and the enumeration is exact.  Intentionally independent of
    op_sup: no entrywise shortcut is taken.
    """
    if s.dim != t.dim or s.dim != x.dim:
        raise DimensionMismatchError("operator/vector dimension mismatch")
    if not x.is_positive():
        raise InputError("rk_oracle requires x >= 0")
    n = x.dim
    if n > RK_DIM_CAP:
        raise CapExceededError(f"rk_oracle enumerates 2^{n} vertices; cap is dim <= {RK_DIM_CAP}")
    best: list[Fraction] | None = None
    for mask in itertools.product((False, True), repeat=n):
        u = LatticeElement(
            tuple(ci if keep else Fraction(0) for ci, keep in zip(x.coords, mask))
        )
        v = x - u
        candidate = s.apply(u) + t.apply(v)
        if best is None:
            best = list(candidate.coords)
        else:
            best = [max(a, b) for a, b in zip(best, candidate.coords)]
    assert best is not None
    return LatticeElement(tuple(best))


def is_band_projection_op(m: OperatorMatrix) -> bool:
    """True iff 0 ≤ M ≤ I and M² = M (an order projection onto a band)."""
    return (
        m.is_nonnegative()
        and m.leq(OperatorMatrix.identity(m.dim))
        and m.is_idempotent()
    )


def regular_norm(t: OperatorMatrix, spec: NormSpec) -> Fraction:
    """The regular (= operator, for positive parts) norm of T.

    For the weighted sup norm ‖x‖ = max_i w_i|x_i| this is the weighted
    maximum row sum max_k w_k · Σ_i |T_ki| / w_i; for the weighted one
    norm Σ_i w_i|x_i| it is the weighted maximum column sum
    max_i (Σ_k w_k |T_ki|) / w_i.  Both are exact rationals.
    """
    w = spec.weight_vector(t.dim)
    if spec.kind == "sup":
        return max(
            w[k] * sum((abs(v) / w[i] for i, v in enumerate(row)), Fraction(0))
            for k, row in enumerate(t.entries)
        )
    if spec.kind == "one":
        return max(
            sum((w[k] * abs(t.entries[k][i]) for k in range(t.dim)), Fraction(0)) / w[i]
            for i in range(t.dim)
        )
    raise UnsupportedNormError(f"regular operator norm is not available for kind {spec.kind!r}")


# -- multiplication operators -------------------------------------------


def left_mult(algebra: AlgebraSpec, a: LatticeElement) -> OperatorMatrix:
    """L_a: x ↦ a ∗ x as a matrix."""
    if a.dim != algebra.dim:
        raise DimensionMismatchError("element dimension does not match algebra")
    n = algebra.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (p, q, r), c in algebra.tensor.items():
        if a.coords[p] != 0:
            rows[r][q] += a.coords[p] * c
    return OperatorMatrix(tuple(tuple(row) for row in rows))


def right_mult(algebra: AlgebraSpec, b: LatticeElement) -> OperatorMatrix:
    """R_b: x ↦ x ∗ b as a matrix."""
    if b.dim != algebra.dim:
        raise DimensionMismatchError("element dimension does not match algebra")
    n = algebra.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (p, q, r), c in algebra.tensor.items():
        if b.coords[q] != 0:
            rows[r][p] += b.coords[q] * c
    return OperatorMatrix(tuple(tuple(row) for row in rows))


def mult_op(algebra: AlgebraSpec, a: LatticeElement, b: LatticeElement) -> OperatorMatrix:
    """M_{a,b}: x ↦ a ∗ x ∗ b, i.e. L_a ∘ R_b (the order of composition
    is immaterial since L_a and R_b commute by associativity)."""
    return left_mult(algebra, a).compose(right_mult(algebra, b))


def check_mult_commutation(algebra: AlgebraSpec, a: LatticeElement, b: LatticeElement) -> bool:
    """L_a ∘ R_b = R_b ∘ L_a — a direct consequence of associativity."""
    la, rb = left_mult(algebra, a), right_mult(algebra, b)
    return la.compose(rb) == rb.compose(la)


def diagonal_mask_operator(x: LatticeElement) -> Optional[OperatorMatrix]:
    """A 0/1 coordinate vector as the diagonal band projection onto its support,
    or None when the vector has other values."""
    if not set(x.coords) <= {Fraction(0), Fraction(1)}:
        return None
    return OperatorMatrix.diagonal(x.coords)


def invert_element(algebra: AlgebraSpec, a: LatticeElement) -> Optional[LatticeElement]:
    """The two-sided inverse of a, or None if a is not invertible.

    Solves a ∗ y = e exactly.  In a unital finite-dimensional algebra a
    right inverse is automatically two-sided (L_a·L_y = I forces
    L_y·L_a = I for square matrices, and x ↦ L_x is injective when an
    identity exists); both sides are still verified by multiplication.
    """
    from .linalg import solve

    e = algebra.require_identity()
    la = left_mult(algebra, a)
    y = solve(la.rows_list(), list(e.coords))
    if y is None:
        return None
    inv = LatticeElement(tuple(y))
    if algebra.multiply(a, inv) != e or algebra.multiply(inv, a) != e:
        return None
    return inv
