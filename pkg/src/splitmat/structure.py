"""Connectivity, Eulerian and Hamiltonian checks for element splitting.

Each ``verify_*`` function evaluates a statement's hypothesis and its
conclusion independently, returns a :class:`TheoremReport`, and raises
:class:`FalsifiedTheorem` if the implication (or equivalence) fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator

from .errors import FalsifiedTheorem, InvalidDecomposition, PreconditionFailed
from .matroid import (
    VectorMatroid,
    circuit_masks,
    find_k_separation,
    is_independent,
    is_n_connected,
)
from .splitting import SplitSpec, Tag, classify_all, element_split, is_trivial_splitting, np_circuits

T3_1 = "T3_1"
T3_2 = "T3_2"
P4_1 = "P4_1"
P4_2 = "P4_2"
C4_3 = "C4_3"


@dataclass(frozen=True)
class Decomposition:
    """Disjoint circuits covering the ground set."""

    parts: tuple[frozenset[str], ...]
    np_count: int | None = None

    @property
    def covers(self) -> frozenset[str]:
        return frozenset().union(*self.parts)

    def as_set(self) -> set[frozenset[str]]:
        return set(self.parts)


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    hypothesis_holds: bool
    conclusion_holds: bool
    witness: Any = None
    iff: bool = False
    details: dict = field(default_factory=dict, compare=False)

    @property
    def holds(self) -> bool:
        if self.iff:
            return self.hypothesis_holds == self.conclusion_holds
        return self.conclusion_holds or not self.hypothesis_holds


def _checked(report: TheoremReport) -> TheoremReport:
    if not report.holds:
        raise FalsifiedTheorem(
            f"{report.theorem_id}: hypothesis={report.hypothesis_holds} "
            f"conclusion={report.conclusion_holds}", report)
    return report


def check_decomposition(M: VectorMatroid, D: Decomposition) -> None:
    """Raise InvalidDecomposition unless D is a partition of E(M) into circuits."""
    seen: set[str] = set()
    circs = set(circuit_masks(M))
    for part in D.parts:
        if seen & part:
            raise InvalidDecomposition(f"parts overlap on {sorted(seen & part)}")
        seen |= part
        if M.mask_of(part) not in circs:
            raise InvalidDecomposition(f"{M.sorted_labels(part)} is not a circuit")
    if seen != set(M.ground_set):
        raise InvalidDecomposition(f"parts miss {M.sorted_labels(set(M.ground_set) - seen)}")


def iter_circuit_decompositions(M: VectorMatroid, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """Exact covers of E by disjoint circuits, as tuples of bitmasks.

    Backtracking always branches on the lowest uncovered element; the
    candidate circuits through it are tried in lexicographic order.
    """
    full = M.full_mask
    by_low: dict[int, list[int]] = {}
    for c in sorted(circuit_masks(M, limit), key=lambda c: sorted(_positions(c))):
        by_low.setdefault((c & -c).bit_length() - 1, []).append(c)

    def extend(covered: int, chosen: list[int]):
        if covered == full:
            yield tuple(chosen)
            return
        free = ~covered & full
        low = (free & -free).bit_length() - 1
        for c in by_low.get(low, ()):
            if c & covered == 0:
                chosen.append(c)
                yield from extend(covered | c, chosen)
                chosen.pop()

    # each part is indexed by its lowest element, so it is only ever picked
    # when that element is the lowest uncovered one
    yield from extend(0, [])


def _positions(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _np_count(M: VectorMatroid, s: SplitSpec, parts) -> int:
    tags = classify_all(M, s)
    return sum(tags[C] is Tag.NP_CIRCUIT for C in parts)


def circuit_decompositions(M: VectorMatroid, limit: int | None = None,
                           spec: SplitSpec | None = None) -> list[Decomposition]:
    out = []
    for masks in iter_circuit_decompositions(M):
        if limit is not None and len(out) >= limit:
            break
        parts = tuple(M.labels_of(c) for c in masks)
        out.append(Decomposition(parts, None if spec is None else _np_count(M, spec, parts)))
    return out


def is_eulerian(M: VectorMatroid) -> tuple[bool, Decomposition | None]:
    found = circuit_decompositions(M, limit=1)
    return (True, found[0]) if found else (False, None)


def find_ep_decomposition(M: VectorMatroid, s: SplitSpec) -> Decomposition | None:
    s.validate(M)
    for masks in iter_circuit_decompositions(M):
        parts = tuple(M.labels_of(c) for c in masks)
        n = _np_count(M, s, parts)
        if n == 1:
            return Decomposition(parts, n)
    return None


def is_hamiltonian(M: VectorMatroid) -> frozenset[str] | None:
    """Lexicographically least circuit of size r(M) + 1, if any."""
    size = M.rank + 1
    big = [c for c in circuit_masks(M) if bin(c).count("1") == size]
    if not big:
        return None
    return M.labels_of(min(big, key=_positions))


def _require_valid(M: VectorMatroid, s: SplitSpec) -> VectorMatroid:
    s.validate(M)
    return element_split(M, s)


def verify_thm_3_1(M: VectorMatroid, s: SplitSpec) -> TheoremReport:
    """Connected M: M' connected iff the splitting is non-trivial."""
    if not is_n_connected(M, 2):
        raise PreconditionFailed("matroid is not connected")
    Me = _require_valid(M, s)
    lhs = is_n_connected(Me, 2)
    rhs = not is_trivial_splitting(M, s)
    witness = None
    if not lhs:
        witness = find_k_separation(Me, 1)
    elif rhs:
        witness = np_circuits(M, s)[0]
    return _checked(TheoremReport(T3_1, rhs, lhs, witness, iff=True))


def verify_thm_3_2(M: VectorMatroid, s: SplitSpec) -> TheoremReport:
    """3-connected M: M' 3-connected iff every element avoids some np-circuit."""
    if not is_n_connected(M, 3):
        raise PreconditionFailed("matroid is not 3-connected")
    Me = _require_valid(M, s)
    lhs = is_n_connected(Me, 3)
    nps = list(np_circuits(M, s))
    covering = [t for t in M.ground_set if all(t in C for C in nps)]
    rhs = not covering
    witness: Any = covering[0] if covering else None
    if not lhs:
        witness = {"element": witness, "separation": _first_separation(Me, 2)}
    return _checked(TheoremReport(T3_2, rhs, lhs, witness, iff=True))


def _first_separation(M: VectorMatroid, n: int):
    for k in range(1, n):
        if len(M) >= 2 * k and (sep := find_k_separation(M, k)) is not None:
            return sep
    return None


def transport(D: Decomposition, M: VectorMatroid, s: SplitSpec, z: str) -> Decomposition:
    """Attach z to the single np-circuit of an ep-decomposition."""
    tags = classify_all(M, s)
    parts = tuple(C | {z} if tags[C] is Tag.NP_CIRCUIT else C for C in D.parts)
    return Decomposition(parts)


def verify_prop_4_1(M: VectorMatroid, s: SplitSpec) -> TheoremReport:
    """An ep-decomposition of M makes M' Eulerian."""
    Me = _require_valid(M, s)
    z = Me.ground_set[-1]
    ep = find_ep_decomposition(M, s)
    conclusion, found = is_eulerian(Me)
    witness = None
    if ep is not None:
        witness = transport(ep, M, s, z)
        check_decomposition(Me, witness)
    return _checked(TheoremReport(P4_1, ep is not None, conclusion, witness,
                                  details={"ep_decomposition": ep, "decomposition": found}))


def is_np_plus_independent(M: VectorMatroid, s: SplitSpec, X) -> bool:
    """True if X = C u I for an np-circuit C of M and an independent set I of M."""
    X = frozenset(X)
    if not X <= set(M.ground_set):
        return False
    for C in np_circuits(M, s):
        if C <= X and is_independent(M, X - C):
            return True
    return False


def verify_prop_4_2(M: VectorMatroid, s: SplitSpec, D: Decomposition) -> TheoremReport:
    """A decomposition of M' free of (np-circuit + independent) members yields an ep-decomposition of M."""
    Me = _require_valid(M, s)
    z = Me.ground_set[-1]
    check_decomposition(Me, D)
    hypothesis = not any(is_np_plus_independent(M, s, part) for part in D.parts)
    conclusion = find_ep_decomposition(M, s) is not None
    witness = Decomposition(tuple(part - {z} for part in D.parts))
    return _checked(TheoremReport(P4_2, hypothesis, conclusion, witness))


def verify_cor_4_3(M: VectorMatroid, s: SplitSpec) -> TheoremReport:
    """An np-circuit of size r(M) + 1 makes M' Hamiltonian."""
    Me = _require_valid(M, s)
    z = Me.ground_set[-1]
    big = [C for C in np_circuits(M, s) if len(C) == M.rank + 1]
    conclusion = is_hamiltonian(Me) is not None
    witness = (big[0], big[0] | {z}) if big else None
    return _checked(TheoremReport(C4_3, bool(big), conclusion, witness))
