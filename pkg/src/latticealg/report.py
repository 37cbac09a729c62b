"""Deterministic markdown reports: one self-contained document per algebra.

Every number in a report is recomputed from the algebra on each call with
fixed orderings and no timestamps, so two runs over the same input produce
byte-identical documents.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .algebra import AlgebraSpec
from .center import ck_representation, identity_ideal
from .fixtures import BuiltinMeta
from .inner import GammaSet, enumerate_inner, is_inner, validate_family
from .io import scalar_to_wire
from .lattice import LatticeElement
from .operators import OperatorMatrix, diagonal_mask_operator
from .projections import (
    GridSpec,
    classify,
    enumerate_order_idempotents,
    search_band_projections,
)
from .spectra import SpectrumResult, spectrum


def fmt_scalar(q: Fraction) -> str:
    return str(scalar_to_wire(q))


def fmt_element(x: LatticeElement) -> str:
    return "(" + ", ".join(fmt_scalar(c) for c in x.coords) + ")"


def fmt_combo(x: LatticeElement, labels: Sequence[str]) -> str:
    """Render an element as a signed combination of basis labels."""
    terms = []
    for c, label in zip(x.coords, labels):
        if c == 0:
            continue
        if c == 1:
            terms.append(label)
        else:
            terms.append(f"{fmt_scalar(c)}·{label}")
    return " + ".join(terms) if terms else "0"


def fmt_poly(coeffs: Sequence[Fraction], var: str = "λ") -> str:
    """Ascending coefficient list to a readable polynomial, high degree first."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            body = fmt_scalar(abs(c))
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if abs(c) == 1 else f"{fmt_scalar(abs(c))}·{power}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def fmt_spectrum(result: SpectrumResult) -> str:
    parts = [
        fmt_scalar(root) if mult == 1 else f"{fmt_scalar(root)} (×{mult})"
        for root, mult in result.rational_roots
    ]
    for root in result.other_roots:
        z = root.value
        label = f"{z.real:.12g}" if abs(z.imag) <= root.radius else f"{z.real:.12g}{z.imag:+.12g}i"
        suffix = f" ± {root.radius:.3g}"
        parts.append(label + suffix + (f" (×{root.multiplicity})" if root.multiplicity > 1 else ""))
    return "{" + ", ".join(parts) + "}"


def fmt_projection_matrix(m: OperatorMatrix) -> str:
    """Band projection operators here are 0/1 diagonals; render them as such."""
    diag = [m.entries[i][i] for i in range(m.dim)]
    if all(
        m.entries[i][j] == (diag[i] if i == j else 0)
        for i in range(m.dim)
        for j in range(m.dim)
    ):
        return "diag(" + ", ".join(fmt_scalar(d) for d in diag) + ")"
    return "[" + "; ".join(", ".join(fmt_scalar(v) for v in row) for row in m.entries) + "]"


def fmt_gamma(gamma: GammaSet) -> str:
    pairs = ", ".join(f"({a},{b})" for a, b in gamma.sorted_pairs())
    return "{" + pairs + "}"


def _labels(algebra: AlgebraSpec, meta: Optional[BuiltinMeta]) -> list[str]:
    if meta is not None and len(meta.basis_labels) == algebra.dim:
        return list(meta.basis_labels)
    return [f"b{i}" for i in range(algebra.dim)]


def build_report(algebra: AlgebraSpec, meta: Optional[BuiltinMeta] = None) -> str:
    """One markdown document covering structure, classes, center, spectra, inner."""
    labels = _labels(algebra, meta)
    lines: list[str] = [f"# Algebra report: {algebra.name or 'unnamed'}", ""]
    if meta is not None:
        lines += [meta.description, ""]

    lines += ["## Structure", "", f"- dimension: {algebra.dim}"]
    lines.append(f"- basis: {', '.join(labels)}")
    norm_desc = algebra.norm.kind
    if algebra.norm.weights is not None:
        norm_desc += " with weights (" + ", ".join(fmt_scalar(w) for w in algebra.norm.weights) + ")"
    if algebra.norm.p is not None:
        norm_desc += f", p = {fmt_scalar(algebra.norm.p)}"
    lines.append(f"- norm: {norm_desc}")
    lines.append("- nonzero basis products:")
    for (i, j) in sorted(algebra._pairs):
        product = algebra.basis_product(i, j)
        lines.append(f"  - {labels[i]} ∗ {labels[j]} = {fmt_combo(product, labels)}")
    lines.append("")

    report = algebra.verify_axioms()
    lines += [
        "## Axioms",
        "",
        f"- tensor nonnegativity: {'pass' if report.nonnegative else 'FAIL'}",
        f"- associativity on basis triples: {'pass' if report.associative else 'FAIL'}",
    ]
    if report.has_identity:
        assert report.identity is not None
        lines.append(
            f"- identity: {fmt_element(report.identity)} — laws "
            f"{'pass' if report.identity_laws_ok else 'FAIL'}, positive: "
            f"{'yes' if report.identity_positive else 'no'}, norm one: "
            f"{'yes' if report.identity_norm_one else 'no'}"
        )
    else:
        lines.append("- identity: none exists")
    lines.append(
        f"- norm submultiplicativity: {report.submultiplicativity}"
        f" ({report.submultiplicativity_detail})"
    )
    lines.append("")

    grid = GridSpec.from_resolution(2)
    certified = search_band_projections(algebra, grid)
    if report.has_identity:
        oi = enumerate_order_idempotents(algebra)
        lines += ["## Order idempotents", "", f"{len(oi)} elements (complete enumeration):"]
        lines += [f"- {fmt_element(p)}" for p in oi]
        lines.append("")
    grid_str = "{" + ", ".join(fmt_scalar(v) for v in grid.values) + "}"
    lines += [
        f"## Band projections over the grid {grid_str}",
        "",
        f"{len(certified)} certified members (a search aid, not an enumeration —",
        "the class may contain whole rays):",
    ]
    for p in certified:
        tags = []
        c = classify(algebra, p)
        if c.is_oi:
            tags.append("order idempotent")
        if c.is_left_bp and c.is_right_bp:
            tags.append("left+right")
        lines.append(f"- {fmt_element(p)}" + (f" — {', '.join(tags)}" if tags else ""))
    lines.append("")

    if report.has_identity:
        basis_ideal, _projection = identity_ideal(algebra)
        rep = ck_representation(algebra)
        inside = [labels[i] for i in basis_ideal.sorted_support()]
        outside = [labels[i] for i in range(algebra.dim) if i not in basis_ideal.support]
        lines += [
            "## Identity ideal A_e",
            "",
            f"- support: {', '.join(inside)}",
            f"- complement band support: {', '.join(outside) if outside else '(trivial)'}",
            f"- atoms ({rep.n_points} points):",
        ]
        lines += [f"  - {fmt_element(a)}" for a in rep.atoms]
        lines.append("")

    named = sorted(algebra.elements)
    if meta is not None and meta.spectrum_elements:
        named = [n for n in meta.spectrum_elements if n in algebra.elements]
    if report.has_identity and named:
        lines += ["## Spectra", ""]
        for name in named:
            x = algebra.elements[name]
            result = spectrum(algebra, x)
            radius = result.spectral_radius()
            radius_str = fmt_scalar(radius) if isinstance(radius, Fraction) else (
                f"{radius.value:.12g} ± {radius.error:.3g}"
            )
            lines += [
                f"### {name} = {fmt_element(x)}",
                "",
                f"- char poly of the left-multiplication matrix: {fmt_poly(result.char_poly)}",
                f"- spectrum: {fmt_spectrum(result)}",
                f"- spectral radius: {radius_str}",
                "",
            ]

    family_names: tuple[str, ...] = meta.default_family if meta is not None else ()
    members = [algebra.elements[n] for n in family_names if n in algebra.elements]
    if members:
        family = validate_family(algebra, members)
        inner_list = enumerate_inner(algebra, family)
        subsets = 2 ** (len(family) ** 2)
        lines += [
            f"## Inner projections over the family ({', '.join(family_names)})",
            "",
            f"- family of {len(family)} orthogonal left-and-right band projections",
            f"- distinct inner projections: {len(inner_list)} out of {subsets} Γ-subsets:",
        ]
        for gamma, matrix in inner_list:
            lines.append(f"  - Γ = {fmt_gamma(gamma)} ↦ {fmt_projection_matrix(matrix)}")
        verdict_lines = []
        for name, x in sorted(algebra.elements.items()):
            if x.is_zero():
                continue
            mask_op = diagonal_mask_operator(x)
            if mask_op is None:
                continue
            witness = is_inner(algebra, family, mask_op)
            verdict = f"inner via Γ = {fmt_gamma(witness)}" if witness is not None else "not inner"
            verdict_lines.append(
                f"  - {name}: mask {fmt_projection_matrix(mask_op)} — {verdict}"
            )
        if verdict_lines:
            lines.append("- named 0/1 masks as band projection operators:")
            lines += verdict_lines
        lines.append("")

    return "\n".join(lines).rstrip("\n") + "\n"
