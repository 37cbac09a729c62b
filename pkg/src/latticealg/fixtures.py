"""Builtin example algebras, stored in the exact JSON form users write.

Each builtin is the parsed content of an algebra file; builtin() feeds it
through the same io.algebra_from_dict path as user input, so the corpus
doubles as format documentation and the loader has no privileged route.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass
from typing import Any

from .algebra import AlgebraSpec
from .errors import UnknownBuiltinError
from .io import algebra_from_dict

_UPPER2 = {
    "name": "upper2",
    "dim": 3,
    "tensor": [
        [0, 0, 0, 1],  # E11∗E11 = E11
        [0, 1, 1, 1],  # E11∗E12 = E12
        [1, 2, 1, 1],  # E12∗E22 = E12
        [2, 2, 2, 1],  # E22∗E22 = E22
    ],
    "norm": {"kind": "sup"},
    "identity": [1, 0, 1],
    "elements": {
        "E11": [1, 0, 0],
        "E12": [0, 1, 0],
        "E22": [0, 0, 1],
        "p": [0, 1, 0],
        "mixed": [1, 1, 0],
        "a23": [2, 0, 3],
    },
}

_M3_REFLECTION = {
    "name": "m3-reflection",
    "dim": 3,
    "tensor": [
        [0, 0, 0, 1],
        [0, 1, 1, 1],
        [1, 0, 1, 1],
        [1, 1, 0, 1],  # the reflection squares to the first diagonal atom
        [2, 2, 2, 1],
    ],
    "norm": {"kind": "sup"},
    "identity": [1, 0, 1],
    "elements": {
        "p": [0, 1, 0],
        "flip": [0, 1, 1],
        "mid": [0, 0, 1],
    },
}

_NOID3 = {
    "name": "noid3",
    "dim": 3,
    "tensor": [
        [0, 0, 0, 1],  # x-coordinates multiply
        [1, 1, 1, 1],  # y-coordinates multiply
        [2, 0, 2, 1],  # z picks up z·x′ — no element can act as identity
    ],
    "norm": {"kind": "sup"},
    "elements": {
        "p1": [1, 0, 0],
        "p2": [0, 1, 0],
        "p12": [1, 1, 0],
        "zmask": [0, 0, 1],
    },
}

_CK2 = {
    "name": "ck2",
    "dim": 2,
    "tensor": [[0, 0, 0, 1], [1, 1, 1, 1]],
    "norm": {"kind": "sup"},
    "identity": [1, 1],
    "elements": {
        "u": [2, "1/3"],
        "v": [2, 3],
        "w": [1, 3],
    },
}

_CK3 = {
    "name": "ck3",
    "dim": 3,
    "tensor": [[0, 0, 0, 1], [1, 1, 1, 1], [2, 2, 2, 1]],
    "norm": {"kind": "sup"},
    "identity": [1, 1, 1],
    "elements": {
        "step": [0, 1, 1],
        "ramp": [1, 2, 3],
    },
}

_M2_REGULAR = {
    "name": "m2-regular",
    "dim": 4,
    "tensor": [
        # basis E11, E12, E21, E22 with E_ij ∗ E_kl = δ_jk · E_il
        [0, 0, 0, 1],
        [0, 1, 1, 1],
        [1, 2, 0, 1],
        [1, 3, 1, 1],
        [2, 0, 2, 1],
        [2, 1, 3, 1],
        [3, 2, 2, 1],
        [3, 3, 3, 1],
    ],
    "norm": {"kind": "sup"},
    "identity": [1, 0, 0, 1],
    "elements": {
        "E11": [1, 0, 0, 0],
        "E12": [0, 1, 0, 0],
        "E21": [0, 0, 1, 0],
        "E22": [0, 0, 0, 1],
        "golden": [1, 1, 1, 0],
    },
}

_UPPER2_PAIR = {
    "name": "upper2-pair",
    "dim": 6,
    "tensor": [
        # first upper2 block
        [0, 0, 0, 1],
        [0, 1, 1, 1],
        [1, 2, 1, 1],
        [2, 2, 2, 1],
        # second upper2 block, shifted by 3
        [3, 3, 3, 1],
        [3, 4, 4, 1],
        [4, 5, 4, 1],
        [5, 5, 5, 1],
    ],
    "norm": {"kind": "sup"},
    "identity": [1, 0, 1, 1, 0, 1],
    "elements": {
        "q": [1, 0, 0, 0, 1, 0],  # (E11 in block one, E12 in block two)
    },
}

_RAW: dict[str, dict[str, Any]] = {
    "upper2": _UPPER2,
    "m3-reflection": _M3_REFLECTION,
    "noid3": _NOID3,
    "ck2": _CK2,
    "ck3": _CK3,
    "m2-regular": _M2_REGULAR,
    "upper2-pair": _UPPER2_PAIR,
}

BUILTIN_NAMES = sorted(_RAW)


@dataclass(frozen=True)
class BuiltinMeta:
    """Display metadata that is not part of the algebra itself."""

    basis_labels: tuple[str, ...]
    description: str
    default_family: tuple[str, ...] = ()  # element names forming an orthogonal family
    spectrum_elements: tuple[str, ...] = ()  # elements worth showing spectra for


_META: dict[str, BuiltinMeta] = {
    "upper2": BuiltinMeta(
        basis_labels=("E11", "E12", "E22"),
        description=(
            "Upper-triangular 2x2 matrices as a 3-dimensional coordinatewise "
            "lattice algebra; the band projections strictly exceed the order "
            "idempotents along the ray through E12."
        ),
        default_family=("E11", "E22"),
        spectrum_elements=("E12", "a23"),
    ),
    "m3-reflection": BuiltinMeta(
        basis_labels=("d1", "r", "d2"),
        description=(
            "3-dimensional commutative algebra in which the reflection "
            "element r is a band projection with spectrum {-1, 0, 1}."
        ),
        spectrum_elements=("p", "flip"),
    ),
    "noid3": BuiltinMeta(
        basis_labels=("x", "y", "z"),
        description=(
            "3-dimensional algebra without identity; the projection onto the "
            "z coordinate is a band projection operator that is not inner "
            "for the maximal orthogonal family {p1, p2}."
        ),
        default_family=("p1", "p2"),
    ),
    "ck2": BuiltinMeta(
        basis_labels=("k0", "k1"),
        description=(
            "Functions on a 2-point space under the pointwise product; every "
            "band projection is an indicator, so BP = OI."
        ),
        spectrum_elements=("u", "v"),
    ),
    "ck3": BuiltinMeta(
        basis_labels=("k0", "k1", "k2"),
        description=(
            "Functions on a 3-point space under the pointwise product; every "
            "band projection is an indicator, so BP = OI."
        ),
        spectrum_elements=("step", "ramp"),
    ),
    "m2-regular": BuiltinMeta(
        basis_labels=("E11", "E12", "E21", "E22"),
        description=(
            "All 2x2 matrices, i.e. the regular operators on the "
            "2-dimensional coordinatewise lattice; the two coordinate "
            "projections generate 16 distinct inner projections."
        ),
        default_family=("E11", "E22"),
        spectrum_elements=("E12", "golden"),
    ),
    "upper2-pair": BuiltinMeta(
        basis_labels=("E11a", "E12a", "E22a", "E11b", "E12b", "E22b"),
        description=(
            "Sup-normed direct sum of two upper-triangular blocks; q = "
            "(E11, E12) is a band projection but not an order idempotent."
        ),
        spectrum_elements=("q",),
    ),
}


def builtin(name: str) -> AlgebraSpec:
    """A fresh AlgebraSpec for a named builtin, parsed from its JSON form."""
    try:
        raw = _RAW[name]
    except KeyError:
        known = ", ".join(BUILTIN_NAMES)
        raise UnknownBuiltinError(f"unknown builtin {name!r}; available: {known}") from None
    return algebra_from_dict(copy.deepcopy(raw))


def builtin_dict(name: str) -> dict[str, Any]:
    """The raw JSON-format dict of a builtin (a deep copy)."""
    if name not in _RAW:
        known = ", ".join(BUILTIN_NAMES)
        raise UnknownBuiltinError(f"unknown builtin {name!r}; available: {known}")
    return copy.deepcopy(_RAW[name])


def builtin_meta(name: str) -> BuiltinMeta:
    if name not in _META:
        known = ", ".join(BUILTIN_NAMES)
        raise UnknownBuiltinError(f"unknown builtin {name!r}; available: {known}")
    return _META[name]
