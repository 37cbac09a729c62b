"""Exact-rational vectors with coordinatewise lattice structure and lattice norms.

Every finite-dimensional Archimedean vector lattice is lattice-isomorphic to
some R^n with the coordinatewise order, so this module fixes that model once
and for all: elements are vectors of ``fractions.Fraction``, the lattice
operations are coordinatewise, and norms are weighted sup / one / p norms of
the coordinates.  All downstream predicates (idempotence, order bounds) are
equality-sensitive, hence everything here is exact; floats appear only in the
general-p norm, which returns an explicit error bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence, Union

import mpmath

from .errors import DimensionMismatchError, InputError

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]


def as_scalar(value: ScalarLike) -> Fraction:
    """Coerce int / "num/den" string / Fraction to an exact Fraction.

    Floats are rejected: they would silently poison exact predicates.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a scalar: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")  # tolerate unicode minus
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse scalar {value!r}: {exc}") from None
    raise InputError(f"not an exact scalar: {value!r} (floats are rejected)")


def format_scalar(q: Fraction) -> str:
    """Render a Fraction in the wire format "num/den" (integers plain)."""
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class LatticeElement:
    """A vector in Q^dim with the coordinatewise lattice order."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coords:
            raise InputError("dimension must be positive")
        for c in self.coords:
            if not isinstance(c, Fraction):
                raise InputError(f"coordinate {c!r} is not an exact Fraction")

    @property
    def dim(self) -> int:
        return len(self.coords)

    # -- vector space structure -------------------------------------------------

    def __add__(self, other: "LatticeElement") -> "LatticeElement":
        _check_dims(self, other)
        return LatticeElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeElement") -> "LatticeElement":
        _check_dims(self, other)
        return LatticeElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeElement":
        return LatticeElement(tuple(-a for a in self.coords))

    def scale(self, t: ScalarLike) -> "LatticeElement":
        t = as_scalar(t)
        return LatticeElement(tuple(t * a for a in self.coords))

    __rmul__ = scale

    # -- lattice structure --------------------------------------------------------

    def sup(self, other: "LatticeElement") -> "LatticeElement":
        """Coordinatewise maximum: the least upper bound of the pair."""
        _check_dims(self, other)
        return LatticeElement(tuple(max(a, b) for a, b in zip(self.coords, other.coords)))

    def inf(self, other: "LatticeElement") -> "LatticeElement":
        """Coordinatewise minimum: the greatest lower bound of the pair."""
        _check_dims(self, other)
        return LatticeElement(tuple(min(a, b) for a, b in zip(self.coords, other.coords)))

    def abs(self) -> "LatticeElement":
        return LatticeElement(tuple(a if a >= 0 else -a for a in self.coords))

    __abs__ = abs

    def pos_part(self) -> "LatticeElement":
        """x ∨ 0."""
        return LatticeElement(tuple(a if a > 0 else Fraction(0) for a in self.coords))

    def neg_part(self) -> "LatticeElement":
        """(−x) ∨ 0, so that x = pos_part(x) − neg_part(x) exactly."""
        return LatticeElement(tuple(-a if a < 0 else Fraction(0) for a in self.coords))

    def leq(self, other: "LatticeElement") -> bool:
        """Coordinatewise order x ≤ y."""
        _check_dims(self, other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def is_positive(self) -> bool:
        """x ≥ 0, i.e. x lies in the positive cone."""
        return all(a >= 0 for a in self.coords)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_disjoint(self, other: "LatticeElement") -> bool:
        """|x| ∧ |y| = 0: the two elements live on disjoint coordinates."""
        _check_dims(self, other)
        return all(a == 0 or b == 0 for a, b in zip(self.coords, other.coords))

    def support(self) -> frozenset[int]:
        """Indices of the nonzero coordinates."""
        return frozenset(i for i, a in enumerate(self.coords) if a != 0)

    def __repr__(self) -> str:
        return "(" + ", ".join(format_scalar(c) for c in self.coords) + ")"


def vec(values: Iterable[ScalarLike]) -> LatticeElement:
    """Build a LatticeElement from ints / "num/den" strings / Fractions."""
    return LatticeElement(tuple(as_scalar(v) for v in values))


def zero(dim: int) -> LatticeElement:
    return LatticeElement((Fraction(0),) * dim)


def unit(dim: int, i: int) -> LatticeElement:
    """The i-th atom (coordinate direction) of R^dim."""
    if not 0 <= i < dim:
        raise InputError(f"atom index {i} out of range for dim {dim}")
    return LatticeElement(tuple(Fraction(1 if j == i else 0) for j in range(dim)))


def _check_dims(x: LatticeElement, y: LatticeElement) -> None:
    if x.dim != y.dim:
        raise DimensionMismatchError(f"dimension mismatch: {x.dim} vs {y.dim}")


# -- norms -------------------------------------------------------------------------


class ApproxReal(NamedTuple):
    """A real number known only up to an explicit absolute error bound."""

    value: float
    error: float


@dataclass(frozen=True)
class NormSpec:
    """A lattice norm on the coordinates.

    kind "sup": ‖x‖ = max_i w_i·|x_i| (exact); kind "one": ‖x‖ = Σ_i w_i·|x_i|
    (exact); kind "p": ‖x‖ = (Σ_i w_i·|x_i|^p)^(1/p) for rational p ≥ 1
    (numeric, with stated error bound).  Missing weights mean unit weights.
    """

    kind: str = "sup"
    p: Optional[Fraction] = None
    weights: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.kind not in ("sup", "one", "p"):
            raise InputError(f"unknown norm kind {self.kind!r}")
        if self.kind == "p":
            if self.p is None or self.p < 1:
                raise InputError("p-norm requires rational p >= 1")
        elif self.p is not None:
            raise InputError(f"norm kind {self.kind!r} does not take a p value")
        if self.weights is not None:
            if not self.weights:
                raise InputError("weights must be nonempty when present")
            if any(w <= 0 for w in self.weights):
                raise InputError("all norm weights must be strictly positive")

    def weight_vector(self, dim: int) -> tuple[Fraction, ...]:
        if self.weights is None:
            return (Fraction(1),) * dim
        if len(self.weights) != dim:
            raise DimensionMismatchError(
                f"norm has {len(self.weights)} weights but element has dim {dim}"
            )
        return self.weights

    def is_exact(self) -> bool:
        return self.kind in ("sup", "one")


def norm(x: LatticeElement, spec: NormSpec) -> Union[Fraction, ApproxReal]:
    """The lattice norm of x under spec: exact for sup/one, bounded for p."""
    w = spec.weight_vector(x.dim)
    if spec.kind == "sup":
        return max(wi * abs(a) for wi, a in zip(w, x.coords))
    if spec.kind == "one":
        return sum((wi * abs(a) for wi, a in zip(w, x.coords)), Fraction(0))
    # general p: evaluate with mpmath at high working precision and report a
    # conservative error bound derived from the working precision.
    with mpmath.workdps(40):
        p = mpmath.mpf(spec.p.numerator) / spec.p.denominator
        total = mpmath.mpf(0)
        for wi, a in zip(w, x.coords):
            term = mpmath.mpf(wi.numerator) / wi.denominator
            base = abs(mpmath.mpf(a.numerator) / a.denominator)
            total += term * base ** p
        value = total ** (1 / p)
        err = abs(value) * mpmath.mpf(10) ** (-30)
        return ApproxReal(float(value), float(err))
