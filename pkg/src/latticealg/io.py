"""JSON wire formats.

Scalars travel as exact strings "num/den" (plain ints allowed; floats
rejected so nothing silently loses exactness).  Elements are arrays of
scalars; operators are flat row-major arrays; an algebra file is

    {
      "dim": 3,
      "tensor": [[i, j, k, "num/den"], ...],        # 0-based indices
      "norm": {"kind": "sup"|"one"|"p", "p": ..., "weights": [...]},
      "identity": [...],                              # optional
      "elements": {"name": [...], ...}                # optional
    }
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from .algebra import AlgebraSpec
from .errors import InputError
from .lattice import LatticeElement, NormSpec, as_scalar, format_scalar
from .operators import OperatorMatrix

Wire = Union[int, str]


def scalar_to_wire(q: Fraction) -> Wire:
    return int(q) if q.denominator == 1 else format_scalar(q)


def scalar_from_wire(value: Any) -> Fraction:
    try:
        return as_scalar(value)
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad scalar {value!r}: {exc}") from None


def element_to_wire(x: LatticeElement) -> list[Wire]:
    return [scalar_to_wire(c) for c in x.coords]


def element_from_wire(data: Any) -> LatticeElement:
    if not isinstance(data, list) or not data:
        raise InputError("element must be a nonempty JSON array of scalars")
    return LatticeElement(tuple(scalar_from_wire(v) for v in data))


def operator_to_wire(t: OperatorMatrix) -> list[Wire]:
    return [scalar_to_wire(v) for row in t.entries for v in row]


def operator_from_wire(data: Any, dim: Optional[int] = None) -> OperatorMatrix:
    if not isinstance(data, list) or not data:
        raise InputError("operator must be a nonempty flat row-major JSON array")
    if dim is None:
        dim = int(round(len(data) ** 0.5))
    if dim * dim != len(data):
        raise InputError(f"operator array of length {len(data)} is not a square matrix")
    values = [scalar_from_wire(v) for v in data]
    return OperatorMatrix(
        tuple(tuple(values[r * dim : (r + 1) * dim]) for r in range(dim))
    )


def norm_to_wire(spec: NormSpec) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": spec.kind}
    if spec.p is not None:
        out["p"] = scalar_to_wire(spec.p)
    if spec.weights is not None:
        out["weights"] = [scalar_to_wire(w) for w in spec.weights]
    return out


def norm_from_wire(data: Any) -> NormSpec:
    if data is None:
        return NormSpec()
    if not isinstance(data, dict):
        raise InputError("norm must be a JSON object with a 'kind' field")
    kind = data.get("kind", "sup")
    p = scalar_from_wire(data["p"]) if "p" in data and data["p"] is not None else None
    weights = None
    if data.get("weights") is not None:
        weights = tuple(scalar_from_wire(w) for w in data["weights"])
    try:
        return NormSpec(kind=kind, p=p, weights=weights)
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad norm spec: {exc}") from None


def algebra_to_dict(algebra: AlgebraSpec) -> dict[str, Any]:
    out: dict[str, Any] = {
        "dim": algebra.dim,
        "tensor": [
            [i, j, k, scalar_to_wire(c)]
            for (i, j, k), c in sorted(algebra.tensor.items())
        ],
        "norm": norm_to_wire(algebra.norm),
    }
    if algebra.name:
        out["name"] = algebra.name
    if algebra.identity is not None:
        out["identity"] = element_to_wire(algebra.identity)
    if algebra.elements:
        out["elements"] = {
            name: element_to_wire(x) for name, x in sorted(algebra.elements.items())
        }
    return out


def algebra_from_dict(data: Any) -> AlgebraSpec:
    if not isinstance(data, dict):
        raise InputError("algebra file must contain a JSON object")
    try:
        dim = int(data["dim"])
    except (KeyError, TypeError, ValueError):
        raise InputError("algebra file needs an integer 'dim' field") from None
    tensor: dict[tuple[int, int, int], Fraction] = {}
    for entry in data.get("tensor", []):
        if not isinstance(entry, list) or len(entry) != 4:
            raise InputError(f"tensor entry {entry!r} must be [i, j, k, coeff]")
        i, j, k, c = entry
        if not all(isinstance(t, int) for t in (i, j, k)):
            raise InputError(f"tensor indices in {entry!r} must be integers")
        tensor[(i, j, k)] = scalar_from_wire(c)
    identity = None
    if data.get("identity") is not None:
        identity = element_from_wire(data["identity"])
    elements = {}
    for name, coords in (data.get("elements") or {}).items():
        elements[str(name)] = element_from_wire(coords)
    return AlgebraSpec(
        dim=dim,
        tensor=tensor,
        norm=norm_from_wire(data.get("norm")),
        identity=identity,
        name=str(data.get("name", "")),
        elements=elements,
    )


def load_algebra(path: Union[str, Path]) -> AlgebraSpec:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {p}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{p} is not valid JSON: {exc}") from None
    algebra = algebra_from_dict(data)
    if not algebra.name:
        algebra.name = p.stem
    return algebra


def save_algebra(algebra: AlgebraSpec, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(algebra), indent=2) + "\n")


def gamma_from_wire(data: Any) -> list[tuple[int, int]]:
    """An index-pair set Γ as a JSON array of two-element arrays."""
    if not isinstance(data, list):
        raise InputError("gamma must be a JSON array of [alpha, beta] pairs")
    pairs: list[tuple[int, int]] = []
    for entry in data:
        if (
            not isinstance(entry, Sequence)
            or len(entry) != 2
            or not all(isinstance(t, int) for t in entry)
        ):
            raise InputError(f"gamma entry {entry!r} must be a pair of integers")
        pairs.append((entry[0], entry[1]))
    return pairs
