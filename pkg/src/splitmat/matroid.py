"""Vector matroids: rank oracle, circuit and basis enumeration, connectivity.

Subsets of the ground set are handled internally as bitmasks over column
positions; results are returned as frozensets of labels. Canonical order for
families of sets is (size, positions in ground-set order).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import GroundSetTooSmall, HasColoop, HasLoop, SizeLimitExceeded, UnknownLabel
from .ff import FieldMatrix, column_rank

DEFAULT_MAX_GROUND_SET = 24
ENV_MAX_GROUND_SET = "SPLITMAT_MAX_GROUND_SET"


def enumeration_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    return int(os.environ.get(ENV_MAX_GROUND_SET, DEFAULT_MAX_GROUND_SET))


class VectorMatroid:
    """The column matroid M[A] of a matrix over GF(p).

    Ranks of column subsets are memoised per instance; the matroid itself is
    immutable.
    """

    def __init__(self, matrix: FieldMatrix):
        self._matrix = matrix
        self._ground = matrix.col_labels
        self._index = {x: i for i, x in enumerate(self._ground)}
        self._columns = matrix.columns()
        self._rank_cache: dict[int, int] = {0: 0}
        self._memo: dict = {}
        self._rank = self.rank_mask(self.full_mask)

    @property
    def matrix(self) -> FieldMatrix:
        return self._matrix

    @property
    def ground_set(self) -> tuple[str, ...]:
        return self._ground

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def p(self) -> int:
        return self._matrix.p

    @property
    def full_mask(self) -> int:
        return (1 << len(self._ground)) - 1

    def __len__(self):
        return len(self._ground)

    def __repr__(self):
        return f"VectorMatroid(GF({self.p}), n={len(self)}, rank={self.rank})"

    # label <-> mask conversion
    def mask_of(self, S: Iterable) -> int:
        mask = 0
        for x in S:
            try:
                mask |= 1 << self._index[str(x)]
            except KeyError:
                raise UnknownLabel(f"unknown element {x!r}") from None
        return mask

    def labels_of(self, mask: int) -> frozenset[str]:
        return frozenset(self._ground[i] for i in _bits(mask))

    def sort_key(self, S) -> tuple:
        idx = sorted(self._index[str(x)] for x in S)
        return (len(idx), idx)

    def sorted_labels(self, S) -> list[str]:
        return sorted((str(x) for x in S), key=self._index.__getitem__)

    def rank_mask(self, mask: int) -> int:
        r = self._rank_cache.get(mask)
        if r is None:
            r = column_rank((self._columns[i] for i in _bits(mask)), self.p)
            self._rank_cache[mask] = r
        return r

    def rank_of(self, S: Iterable) -> int:
        return self.rank_mask(self.mask_of(S))


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class CircuitSet:
    """A canonically ordered family of circuits over a labelled ground set."""

    circuits: tuple[frozenset[str], ...]
    ground_set: tuple[str, ...]

    @classmethod
    def build(cls, family: Iterable[Iterable], ground_set: Iterable[str]) -> CircuitSet:
        ground = tuple(ground_set)
        index = {x: i for i, x in enumerate(ground)}
        sets = {frozenset(str(x) for x in C) for C in family}
        ordered = sorted(sets, key=lambda C: (len(C), sorted(index[x] for x in C)))
        return cls(tuple(ordered), ground)

    def __len__(self):
        return len(self.circuits)

    def __iter__(self):
        return iter(self.circuits)

    def __getitem__(self, i):
        return self.circuits[i]

    def __contains__(self, C):
        return frozenset(str(x) for x in C) in set(self.circuits)

    def as_set(self) -> set[frozenset[str]]:
        return set(self.circuits)

    def sorted_lists(self) -> list[list[str]]:
        index = {x: i for i, x in enumerate(self.ground_set)}
        return [sorted(C, key=index.__getitem__) for C in self.circuits]

    def is_antichain(self) -> bool:
        return not any(a < b for a in self.circuits for b in self.circuits)


@dataclass(frozen=True)
class Separation:
    S: frozenset[str]
    T: frozenset[str]
    k: int
    defect: int


def matroid_from_matrix(A: FieldMatrix, require_loopless_coloopless: bool = True) -> VectorMatroid:
    M = VectorMatroid(A)
    if require_loopless_coloopless:
        if loops := find_loops(M):
            raise HasLoop(loops)
        if coloops := find_coloops(M):
            raise HasColoop(coloops)
    return M


def find_loops(M: VectorMatroid) -> list[str]:
    return [x for i, x in enumerate(M.ground_set) if M.rank_mask(1 << i) == 0]


def find_coloops(M: VectorMatroid) -> list[str]:
    full = M.full_mask
    return [x for i, x in enumerate(M.ground_set) if M.rank_mask(full & ~(1 << i)) == M.rank - 1]


def is_independent(M: VectorMatroid, S: Iterable) -> bool:
    mask = M.mask_of(S)
    return M.rank_mask(mask) == _popcount(mask)


def _check_size(M: VectorMatroid, limit: int | None):
    bound = enumeration_limit(limit)
    if len(M) > bound:
        raise SizeLimitExceeded(f"ground set has {len(M)} elements; enumeration bound is {bound}")


def circuit_masks(M: VectorMatroid, limit: int | None = None) -> tuple[int, ...]:
    """Circuits as bitmasks in canonical order (memoised on M)."""
    _check_size(M, limit)
    if "circuits" in M._memo:
        return M._memo["circuits"]
    found: list[int] = []
    n = len(M)
    # a circuit has at most rank + 1 elements
    for size in range(1, min(n, M.rank + 1) + 1):
        new = []
        for combo in combinations(range(n), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if any(c & mask == c for c in found):
                continue
            if M.rank_mask(mask) < size:
                new.append(mask)
        found.extend(new)
    M._memo["circuits"] = tuple(found)
    return M._memo["circuits"]


def _family(M: VectorMatroid, masks: Iterable[int]) -> CircuitSet:
    return CircuitSet(tuple(M.labels_of(m) for m in masks), M.ground_set)


def circuits(M: VectorMatroid, limit: int | None = None) -> CircuitSet:
    return _family(M, circuit_masks(M, limit))


def circuits_through(M: VectorMatroid, X: Iterable, limit: int | None = None) -> CircuitSet:
    x = M.mask_of(X)
    return _family(M, (c for c in circuit_masks(M, limit) if c & x == x))


def independent_sets(M: VectorMatroid, limit: int | None = None) -> list[frozenset[str]]:
    _check_size(M, limit)
    n = len(M)
    out = []
    for size in range(0, M.rank + 1):
        for combo in combinations(range(n), size):
            mask = sum(1 << i for i in combo)
            if M.rank_mask(mask) == size:
                out.append(M.labels_of(mask))
    return out


def bases(M: VectorMatroid, limit: int | None = None) -> list[frozenset[str]]:
    _check_size(M, limit)
    out = []
    for combo in combinations(range(len(M)), M.rank):
        mask = sum(1 << i for i in combo)
        if M.rank_mask(mask) == M.rank:
            out.append(M.labels_of(mask))
    return out


def find_k_separation(M: VectorMatroid, k: int, limit: int | None = None) -> Separation | None:
    """Exhaustive search for a k-separation.

    Returns the witness with the smallest side S as small as possible, then
    the smallest defect, then S lexicographically least; None if there is
    no k-separation.
    """
    n = len(M)
    if k < 1:
        raise ValueError("k must be positive")
    if n < 2 * k:
        raise GroundSetTooSmall(f"|E| = {n} < 2k = {2 * k}")
    _check_size(M, limit)
    full = M.full_mask
    r = M.rank
    for size in range(k, n // 2 + 1):
        best = None
        for combo in combinations(range(n), size):
            # equal halves: pin element 0 into S to skip mirrored partitions
            if 2 * size == n and combo[0] != 0:
                break
            s = sum(1 << i for i in combo)
            defect = M.rank_mask(s) + M.rank_mask(full & ~s) - r
            if defect < k and (best is None or defect < best[0]):
                best = (defect, s)
        if best is not None:
            defect, s = best
            return Separation(M.labels_of(s), M.labels_of(full & ~s), k, defect)
    return None


def is_n_connected(M: VectorMatroid, n: int, limit: int | None = None) -> bool:
    if n < 2:
        raise ValueError("n must be at least 2")
    for k in range(1, n):
        if len(M) < 2 * k:
            continue
        if find_k_separation(M, k, limit) is not None:
            return False
    return True


def is_connected(M: VectorMatroid, limit: int | None = None) -> bool:
    return is_n_connected(M, 2, limit)
