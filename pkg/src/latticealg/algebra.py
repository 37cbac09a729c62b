"""Finite-dimensional lattice-ordered algebras given by structure constants.

An algebra lives on R^n with coordinatewise order.  The product of basis
vectors is encoded by a sparse nonnegative tensor c[(i, j, k)] meaning
b_i ∗ b_j = Σ_k c[(i,j,k)] · b_k.  Nonnegativity of the tensor makes the
product positive (x, y ≥ 0 implies x∗y ≥ 0), which is what ties the ring
structure to the lattice structure throughout this package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from . import linalg
from .errors import DimensionMismatchError, InputError, NoIdentityError
from .lattice import LatticeElement, NormSpec, as_scalar, norm, vec, zero

TensorKey = tuple[int, int, int]


@dataclass
class AxiomReport:
    """Per-axiom verdicts for an algebra: tensor positivity, associativity,
    identity laws, and a norm-submultiplicativity verdict.

    The first three are exact; submultiplicativity is certified by a
    sufficient condition and reported as "proved" or "unknown" — never a
    guessed number.  An "unknown" does not make the report fail.
    """

    nonnegative: bool
    associative: bool
    # Witnesses are (i, j, k) basis index triples / tensor keys.
    negative_entries: list[TensorKey] = field(default_factory=list)
    associativity_failures: list[TensorKey] = field(default_factory=list)
    has_identity: bool = False
    identity: Optional[LatticeElement] = None
    identity_laws_ok: Optional[bool] = None  # None when there is no identity
    identity_positive: Optional[bool] = None
    identity_norm_one: Optional[bool] = None
    submultiplicativity: str = "unknown"  # "proved" | "unknown"
    submultiplicativity_detail: str = ""

    @property
    def ok(self) -> bool:
        return self.nonnegative and self.associative and self.identity_laws_ok is not False


@dataclass
class IdentityResult:
    """A two-sided multiplicative identity together with its basic order data.

    norm_one is None when the algebra norm is inexact (p-kind); a False
    value is reported, not raised — it flags a tensor/norm combination
    that cannot be a lattice algebra with normalized identity.
    """

    element: LatticeElement
    is_positive: bool
    norm_value: object  # Fraction or ApproxReal, per the algebra's norm spec
    norm_one: Optional[bool] = None


@dataclass
class AlgebraSpec:
    """A finite-dimensional algebra on R^n with coordinatewise lattice order.

    `tensor` maps (i, j, k) → coefficient of b_k in b_i ∗ b_j.  Missing keys
    are zero.  Construction only checks shapes; run verify_axioms() (or
    validate()) to check nonnegativity and associativity.
    """

    dim: int
    tensor: dict[TensorKey, Fraction]
    norm: NormSpec = field(default_factory=NormSpec)
    identity: Optional[LatticeElement] = None
    name: str = ""
    elements: dict[str, LatticeElement] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim <= 0:
            raise InputError(f"dimension must be positive, got {self.dim}")
        clean: dict[TensorKey, Fraction] = {}
        for key, value in self.tensor.items():
            i, j, k = key
            if not all(0 <= t < self.dim for t in (i, j, k)):
                raise InputError(f"tensor index {key} out of range for dim {self.dim}")
            q = as_scalar(value)
            if q != 0:
                clean[(i, j, k)] = q
        self.tensor = clean
        if self.norm.weights is not None and len(self.norm.weights) != self.dim:
            raise DimensionMismatchError(
                f"norm weights have length {len(self.norm.weights)}, expected {self.dim}"
            )
        if self.identity is not None and self.identity.dim != self.dim:
            raise DimensionMismatchError("identity element has wrong dimension")
        for label, elem in self.elements.items():
            if elem.dim != self.dim:
                raise DimensionMismatchError(f"element {label!r} has wrong dimension")
        # (i, j) → [(k, c)]: the sparse rows used by multiply().
        pairs: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
        for (i, j, k), c in self.tensor.items():
            pairs.setdefault((i, j), []).append((k, c))
        self._pairs = pairs

    # -- ring structure ------------------------------------------------

    def multiply(self, x: LatticeElement, y: LatticeElement) -> LatticeElement:
        """x ∗ y via the structure tensor."""
        if x.dim != self.dim or y.dim != self.dim:
            raise DimensionMismatchError("element dimension does not match algebra")
        out = [Fraction(0)] * self.dim
        for (i, j), terms in self._pairs.items():
            f = x.coords[i] * y.coords[j]
            if f == 0:
                continue
            for k, c in terms:
                out[k] += f * c
        return LatticeElement(tuple(out))

    def basis_product(self, i: int, j: int) -> LatticeElement:
        """b_i ∗ b_j directly from the tensor."""
        out = [Fraction(0)] * self.dim
        for k, c in self._pairs.get((i, j), ()):
            out[k] = c
        return LatticeElement(tuple(out))

    def power(self, x: LatticeElement, n: int) -> LatticeElement:
        if n < 1:
            raise InputError("power requires n >= 1")
        acc = x
        for _ in range(n - 1):
            acc = self.multiply(acc, x)
        return acc

    # -- axioms ----------------------------------------------------------

    def verify_axioms(self) -> AxiomReport:
        """Check the algebra axioms: positivity, associativity, identity, norm.

        Tensor nonnegativity and associativity on all basis triples are
        exact and complete (associativity extends bilinearly from the
        basis).  Identity laws and the (is_positive, ‖e‖ = 1) flags are
        evaluated when an identity exists; absence of an identity is noted,
        not an error.  Norm submultiplicativity gets a {proved, unknown}
        verdict from check_submultiplicativity.
        """
        negative = sorted(key for key, c in self.tensor.items() if c < 0)
        failures: list[TensorKey] = []
        basis = [self.basis_element(i) for i in range(self.dim)]
        products = [[self.basis_product(i, j) for j in range(self.dim)] for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                left = products[i][j]
                for k in range(self.dim):
                    lhs = self.multiply(left, basis[k])
                    rhs = self.multiply(basis[i], products[j][k])
                    if lhs != rhs:
                        failures.append((i, j, k))
        report = AxiomReport(
            nonnegative=not negative,
            associative=not failures,
            negative_entries=negative,
            associativity_failures=failures,
        )
        identity = find_identity(self)
        if identity is not None:
            e = identity.element
            report.has_identity = True
            report.identity = e
            report.identity_laws_ok = all(
                self.multiply(e, b) == b and self.multiply(b, e) == b for b in basis
            )
            report.identity_positive = identity.is_positive
            report.identity_norm_one = identity.norm_one
        verdict, detail = check_submultiplicativity(self)
        report.submultiplicativity = verdict
        report.submultiplicativity_detail = detail
        return report

    def validate(self) -> None:
        """Raise InputError unless the axioms hold."""
        report = self.verify_axioms()
        if not report.ok:
            parts = []
            if report.negative_entries:
                parts.append(f"negative tensor entries at {report.negative_entries[:3]}")
            if report.associativity_failures:
                parts.append(
                    f"associativity fails at basis triples {report.associativity_failures[:3]}"
                )
            raise InputError("; ".join(parts))

    # -- identity ----------------------------------------------------------

    def solve_identity(self) -> IdentityResult:
        """Solve for a two-sided identity; raise NoIdentityError if none exists.

        e is an identity iff Σ_j e_j·c[(j,i,k)] = δ_ik and Σ_j e_j·c[(i,j,k)] = δ_ik
        for all i, k — a linear system in the coordinates of e.
        """
        if self.identity is not None:
            e = self.identity
        else:
            n = self.dim
            rows: list[list[Fraction]] = []
            rhs: list[Fraction] = []
            # Left identity: e ∗ b_i = b_i; row per (i, k).
            for i in range(n):
                for k in range(n):
                    row = [Fraction(0)] * n
                    for j in range(n):
                        c = self.tensor.get((j, i, k))
                        if c is not None:
                            row[j] = c
                    rows.append(row)
                    rhs.append(Fraction(1 if i == k else 0))
            # Right identity: b_i ∗ e = b_i.
            for i in range(n):
                for k in range(n):
                    row = [Fraction(0)] * n
                    for j in range(n):
                        c = self.tensor.get((i, j, k))
                        if c is not None:
                            row[j] = c
                    rows.append(row)
                    rhs.append(Fraction(1 if i == k else 0))
            solution = linalg.solve(rows, rhs)
            if solution is None:
                raise NoIdentityError(f"algebra {self.name or '<unnamed>'} has no identity")
            e = LatticeElement(tuple(solution))
        # Double-check by multiplication (guards a user-supplied identity too).
        for i in range(self.dim):
            b = self.basis_element(i)
            if self.multiply(e, b) != b or self.multiply(b, e) != b:
                raise NoIdentityError("candidate identity fails e∗b = b∗e = b on the basis")
        self.identity = e
        norm_value = norm(e, self.norm)
        norm_one = (norm_value == 1) if isinstance(norm_value, Fraction) else None
        return IdentityResult(
            element=e,
            is_positive=e.is_positive(),
            norm_value=norm_value,
            norm_one=norm_one,
        )

    def require_identity(self) -> LatticeElement:
        if self.identity is None:
            self.solve_identity()
        assert self.identity is not None
        return self.identity

    def has_identity(self) -> bool:
        if self.identity is not None:
            return True
        try:
            self.solve_identity()
        except NoIdentityError:
            return False
        return True

    # -- conveniences ----------------------------------------------------

    def basis_element(self, i: int) -> LatticeElement:
        if not 0 <= i < self.dim:
            raise InputError(f"basis index {i} out of range")
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return LatticeElement(tuple(coords))

    def zero(self) -> LatticeElement:
        return zero(self.dim)

    def element(self, values: Iterable) -> LatticeElement:
        x = vec(values)
        if x.dim != self.dim:
            raise DimensionMismatchError(f"expected {self.dim} coordinates, got {x.dim}")
        return x

    def norm_of(self, x: LatticeElement):
        return norm(x, self.norm)

    def is_commutative(self) -> bool:
        return all(
            self.basis_product(i, j) == self.basis_product(j, i)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )


def find_identity(algebra: AlgebraSpec) -> Optional[IdentityResult]:
    """The two-sided identity with its (is_positive, norm_one) flags, or None.

    Flag violations are reported, not raised: an identity that is not
    positive or not of norm one signals a tensor/norm pair that cannot
    satisfy the lattice-algebra axioms, and callers decide what to do.
    """
    try:
        return algebra.solve_identity()
    except NoIdentityError:
        return None


def check_submultiplicativity(algebra: AlgebraSpec) -> tuple[str, str]:
    """("proved" | "unknown", detail) for ‖x∗y‖ ≤ ‖x‖·‖y‖.

    Sufficient conditions, exact where applicable:
    - sup kind, weights w: u ∗ u ≤ u for the unit-ball corner u_i = 1/w_i
      (any x, y in the unit ball satisfy |x∗y| ≤ |x|∗|y| ≤ u∗u);
    - one kind: ‖b_i ∗ b_j‖ ≤ ‖b_i‖·‖b_j‖ for all basis pairs (the unit
      ball is the convex hull of ±b_i/w_i, and the product is bilinear);
    - p kind: no exact certificate is attempted — always "unknown".

    "unknown" is a verdict about the certificate, not a claimed failure;
    the detail names the first violated coordinate or pair when the
    sufficient condition itself fails.
    """
    spec = algebra.norm
    if spec.kind == "sup":
        w = spec.weight_vector(algebra.dim)
        u = LatticeElement(tuple(Fraction(1) / wi for wi in w))
        uu = algebra.multiply(u, u)
        if uu.leq(u):
            return "proved", "u∗u ≤ u for the unit-ball corner u"
        bad = next(i for i in range(algebra.dim) if uu.coords[i] > u.coords[i])
        return (
            "unknown",
            f"sufficient condition fails at coordinate {bad}: "
            f"(u∗u)_{bad} = {uu.coords[bad]} > u_{bad} = {u.coords[bad]}",
        )
    if spec.kind == "one":
        for i in range(algebra.dim):
            for j in range(algebra.dim):
                prod = norm(algebra.basis_product(i, j), spec)
                bound = norm(algebra.basis_element(i), spec) * norm(
                    algebra.basis_element(j), spec
                )
                if prod > bound:
                    return (
                        "unknown",
                        f"sufficient condition fails at basis pair ({i}, {j}): "
                        f"‖b_{i}∗b_{j}‖ = {prod} > {bound}",
                    )
        return "proved", "‖b_i∗b_j‖ ≤ ‖b_i‖·‖b_j‖ on all basis pairs"
    return "unknown", f"no exact certificate for norm kind {spec.kind!r}"


def lp_sum(parts: list[AlgebraSpec], name: str = "") -> AlgebraSpec:
    """Direct sum of algebras with componentwise product and blockwise order.

    The factors must share the norm kind (sup or one, both unweighted); the
    sum carries the same kind.  A sup-kind sum of unital factors is unital
    with identity the concatenation of the factor identities.
    """
    if not parts:
        raise InputError("lp_sum requires at least one factor")
    kind = parts[0].norm.kind
    if kind not in ("sup", "one"):
        raise InputError(f"lp_sum supports sup/one norm kinds, got {kind!r}")
    for part in parts:
        if part.norm.kind != kind or part.norm.weights is not None:
            raise InputError("lp_sum factors must share an unweighted sup/one norm")
        report = part.verify_axioms()
        if not report.ok:
            raise InputError(f"lp_sum factor {part.name or '<unnamed>'} fails the axioms")
    offsets: list[int] = []
    total = 0
    for part in parts:
        offsets.append(total)
        total += part.dim
    tensor: dict[TensorKey, Fraction] = {}
    for part, off in zip(parts, offsets):
        for (i, j, k), c in part.tensor.items():
            tensor[(i + off, j + off, k + off)] = c
    identity = None
    if kind == "sup" and all(p.identity is not None for p in parts):
        coords: list[Fraction] = []
        for part in parts:
            assert part.identity is not None
            coords.extend(part.identity.coords)
        identity = LatticeElement(tuple(coords))
    return AlgebraSpec(
        dim=total,
        tensor=tensor,
        norm=NormSpec(kind=kind),
        identity=identity,
        name=name or "+".join(p.name or "?" for p in parts),
    )
