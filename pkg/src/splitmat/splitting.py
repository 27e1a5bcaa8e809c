"""Splitting and element splitting of p-matroids.

``split`` appends a row carrying alpha at columns a and b. ``element_split``
additionally adjoins a column z that is zero except for alpha in that new
row. A circuit of M meeting {a, b} either survives the splitting (p-circuit)
or becomes independent (np-circuit); the np-circuits determine everything
about the element splitting matroid, which the ``predicted_*`` functions
compute without touching its matrix.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidSpec, LabelCollision, ModulusMismatch, NotACircuit
from .ff import FieldElement, dependency_coefficients
from .matroid import (
    CircuitSet,
    VectorMatroid,
    bases,
    circuits,
    independent_sets,
    matroid_from_matrix,
)


@dataclass(frozen=True)
class SplitSpec:
    a: str
    b: str
    alpha: int | FieldElement = 1

    def __post_init__(self):
        object.__setattr__(self, "a", str(self.a))
        object.__setattr__(self, "b", str(self.b))

    def alpha_value(self, p: int) -> int:
        if isinstance(self.alpha, FieldElement):
            if self.alpha.p != p:
                raise ModulusMismatch(f"alpha lives in GF({self.alpha.p}), matroid in GF({p})")
            return self.alpha.value
        return int(self.alpha) % p

    def validate(self, M: VectorMatroid) -> int:
        """Check the spec against M and return alpha as a residue mod p."""
        if self.a == self.b:
            raise InvalidSpec(f"a and b must differ (both {self.a!r})")
        for x in (self.a, self.b):
            if x not in M.ground_set:
                raise InvalidSpec(f"{x!r} is not an element of the ground set")
        alpha = self.alpha_value(M.p)
        if alpha == 0:
            raise InvalidSpec(f"alpha must be nonzero in GF({M.p})")
        return alpha


class Tag(enum.Enum):
    P_CIRCUIT = "p"
    NP_CIRCUIT = "np"
    UNTOUCHED = "untouched"


@dataclass(frozen=True)
class CircuitClass:
    tag: Tag
    witness: dict[str, FieldElement] | None = None


def _split_row(M: VectorMatroid, s: SplitSpec) -> list[int]:
    alpha = s.validate(M)
    return [alpha if x in (s.a, s.b) else 0 for x in M.ground_set]


def split(M: VectorMatroid, s: SplitSpec) -> VectorMatroid:
    A = M.matrix.with_row(_split_row(M, s))
    return matroid_from_matrix(A, require_loopless_coloopless=False)


def default_z_label(ground_set: Iterable[str]) -> str:
    """Successor of the largest numeric label, or "z" when no label is numeric."""
    nums = [int(x) for x in ground_set if x.isdigit()]
    return str(max(nums) + 1) if nums else "z"


def element_split(M: VectorMatroid, s: SplitSpec, z: str | None = None) -> VectorMatroid:
    row = _split_row(M, s)
    z = default_z_label(M.ground_set) if z is None else str(z)
    if z in M.ground_set:
        raise LabelCollision(f"label {z!r} already in the ground set")
    alpha = s.alpha_value(M.p)
    A = M.matrix.with_row(row).with_column(z, [0] * M.matrix.nrows + [alpha])
    return matroid_from_matrix(A, require_loopless_coloopless=False)


def classify_circuit(M: VectorMatroid, s: SplitSpec, C: Iterable) -> CircuitClass:
    s.validate(M)
    C = frozenset(str(x) for x in C)
    coeffs = dependency_coefficients(M.matrix, C)
    if coeffs is None:
        raise NotACircuit(f"{sorted(C)} is independent")
    if s.a not in C and s.b not in C:
        return CircuitClass(Tag.UNTOUCHED, coeffs)
    # the new row evaluates the dependency to alpha * (g_a + g_b)
    total = sum(coeffs[x].value for x in (s.a, s.b) if x in C) % M.p
    return CircuitClass(Tag.P_CIRCUIT if total == 0 else Tag.NP_CIRCUIT, coeffs)


def classify_all(M: VectorMatroid, s: SplitSpec) -> dict[frozenset[str], Tag]:
    """Tag of every circuit of M, in canonical circuit order."""
    key = ("classify", s.a, s.b, s.alpha_value(M.p))
    if key not in M._memo:
        M._memo[key] = {C: classify_circuit(M, s, C).tag for C in circuits(M)}
    return M._memo[key]


def np_circuits(M: VectorMatroid, s: SplitSpec) -> CircuitSet:
    tags = classify_all(M, s)
    return CircuitSet(tuple(C for C, t in tags.items() if t is Tag.NP_CIRCUIT), M.ground_set)


def is_trivial_splitting(M: VectorMatroid, s: SplitSpec) -> bool:
    return len(np_circuits(M, s)) == 0


def _z(M: VectorMatroid, z: str | None) -> str:
    return default_z_label(M.ground_set) if z is None else str(z)


def predicted_circuits(M: VectorMatroid, s: SplitSpec, z: str | None = None) -> CircuitSet:
    """Circuits of the element splitting matroid: C(M_ab) plus {C + z : C np-circuit}."""
    z = _z(M, z)
    family = list(circuits(split(M, s)))
    family += [C | {z} for C in np_circuits(M, s)]
    return CircuitSet.build(family, M.ground_set + (z,))


def predicted_independents(M: VectorMatroid, s: SplitSpec, z: str | None = None,
                           limit: int | None = None) -> list[frozenset[str]]:
    z = _z(M, z)
    family = set(independent_sets(split(M, s), limit))
    family |= {I | {z} for I in independent_sets(M, limit)}
    return _canonical(family, M.ground_set + (z,))


def predicted_bases(M: VectorMatroid, s: SplitSpec, z: str | None = None,
                    limit: int | None = None) -> list[frozenset[str]]:
    z = _z(M, z)
    Ms = split(M, s)
    family = {B | {z} for B in bases(M, limit)}
    # bases of M_ab only count when the splitting raised the rank
    if Ms.rank == M.rank + 1:
        family |= set(bases(Ms, limit))
    return _canonical(family, M.ground_set + (z,))


def predicted_rank(M: VectorMatroid, s: SplitSpec, S: Iterable, z: str | None = None) -> int:
    z = _z(M, z)
    S = {str(x) for x in S}
    if z in S:
        return M.rank_of(S - {z}) + 1
    mask = M.mask_of(S)
    r = M.rank_mask(mask)
    nps = [M.mask_of(C) for C in np_circuits(M, s)]
    return r + 1 if any(c & mask == c for c in nps) else r


def _canonical(family, ground) -> list[frozenset[str]]:
    index = {x: i for i, x in enumerate(ground)}
    return sorted(family, key=lambda X: (len(X), sorted(index[x] for x in X)))
