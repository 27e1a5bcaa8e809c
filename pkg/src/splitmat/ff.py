"""Exact arithmetic and dense linear algebra over prime fields GF(p).

Matrices store canonical residues ``0 <= v < p`` as plain ints; individual
entries can be viewed as :class:`FieldElement` values when scalar arithmetic
is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DimensionMismatch,
    EntryOutOfRange,
    ModulusMismatch,
    NotACircuit,
    NotPrime,
    UnknownLabel,
    ZeroInverse,
)

MAX_PRIME = 2**31 - 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.2e9."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inv_mod(a: int, p: int) -> int:
    """Inverse of a modulo p by the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    # r0 == 1 because p is prime
    return s0 % p


@dataclass(frozen=True)
class PrimeModulus:
    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError(f"modulus must be an int, got {self.p!r}")
        if not (2 <= self.p <= MAX_PRIME) or not is_prime(self.p):
            raise NotPrime(f"{self.p} is not a prime in [2, 2^31-1]")

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value, self)

    def __int__(self):
        return self.p


def as_modulus(p) -> PrimeModulus:
    return p if isinstance(p, PrimeModulus) else PrimeModulus(p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    modulus: PrimeModulus

    def __post_init__(self):
        object.__setattr__(self, "value", int(self.value) % self.modulus.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(v, self.modulus)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(self.value * inv_mod(o, self.p))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self._wrap(o * fe_inv(self).value)

    def __neg__(self):
        return self._wrap(-self.value)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def fe_inv(x: FieldElement) -> FieldElement:
    return FieldElement(inv_mod(x.value, x.p), x.modulus)


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, n + 1))


@dataclass(frozen=True)
class FieldMatrix:
    """Dense m x n matrix over GF(p) with labelled columns."""

    modulus: PrimeModulus
    entries: tuple[tuple[int, ...], ...]
    col_labels: tuple[str, ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise DimensionMismatch("matrix must have at least one row and one column")
        n = len(self.entries[0])
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise DimensionMismatch(f"row {i + 1} has {len(row)} entries, expected {n}")
            for v in row:
                if not (0 <= v < self.modulus.p):
                    raise EntryOutOfRange(f"entry {v} not in [0, {self.modulus.p - 1}]")
        if len(self.col_labels) != n:
            raise DimensionMismatch(f"{len(self.col_labels)} labels for {n} columns")
        if len(set(self.col_labels)) != n:
            raise ValueError("column labels must be distinct")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], p, labels: Sequence | None = None) -> FieldMatrix:
        """Build a matrix from integer rows, reducing every entry mod p."""
        modulus = as_modulus(p)
        entries = tuple(tuple(int(v) % modulus.p for v in row) for row in rows)
        n = len(entries[0]) if entries else 0
        labels = default_labels(n) if labels is None else tuple(str(x) for x in labels)
        return cls(modulus, entries, labels)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.entries[i][j], self.modulus)

    def index_of(self, label) -> int:
        try:
            return self.col_labels.index(str(label))
        except ValueError:
            raise UnknownLabel(f"unknown column label {label!r}") from None

    def column(self, label) -> tuple[int, ...]:
        j = self.index_of(label)
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(col) for col in zip(*self.entries)]

    def with_row(self, row: Sequence[int]) -> FieldMatrix:
        return FieldMatrix.from_rows(self.entries + (tuple(row),), self.modulus, self.col_labels)

    def with_column(self, label, column: Sequence[int]) -> FieldMatrix:
        if len(column) != self.nrows:
            raise DimensionMismatch(f"column has {len(column)} entries, expected {self.nrows}")
        rows = [r + (c,) for r, c in zip(self.entries, column)]
        return FieldMatrix.from_rows(rows, self.modulus, self.col_labels + (str(label),))

    def __str__(self):
        width = max(len(str(x)) for x in self.col_labels + tuple(str(self.p - 1),))
        head = " ".join(x.rjust(width) for x in self.col_labels)
        body = "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.entries)
        return f"{head}\n{body}"


class RrefResult(NamedTuple):
    rref: FieldMatrix
    pivots: tuple[int, ...]
    rank: int


def _rref_rows(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    # pivot on leftmost nonzero column, topmost nonzero row, scaled to 1
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        src = next((i for i in range(r, m) if rows[i][c]), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        inv = inv_mod(rows[r][c], p)
        prow = [v * inv % p for v in rows[r]]
        rows[r] = prow
        for i in range(m):
            f = rows[i][c]
            if i != r and f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def mat_rref(M: FieldMatrix) -> RrefResult:
    rows, pivots = _rref_rows([list(r) for r in M.entries], M.p)
    rref = FieldMatrix(M.modulus, tuple(tuple(r) for r in rows), M.col_labels)
    return RrefResult(rref, tuple(pivots), len(pivots))


def column_rank(columns: Iterable[Sequence[int]], p: int) -> int:
    """Rank of a family of column vectors, by incremental elimination."""
    basis: list[tuple[int, list[int]]] = []
    for col in columns:
        v = list(col)
        for piv, b in basis:
            f = v[piv]
            if f:
                v = [(x - f * y) % p for x, y in zip(v, b)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is not None:
            inv = inv_mod(v[piv], p)
            basis.append((piv, [x * inv % p for x in v]))
    return len(basis)


def _indices(M: FieldMatrix, S) -> list[int]:
    return sorted({M.index_of(x) for x in S})


def mat_rank_of_columns(M: FieldMatrix, S) -> int:
    idx = _indices(M, S)
    cols = M.columns()
    return column_rank((cols[j] for j in idx), M.p)


def dependency_coefficients(M: FieldMatrix, C) -> dict[str, FieldElement] | None:
    """Coefficients of the unique linear dependency among the columns in C.

    Returns None when the columns are independent. The map is scaled so the
    column that comes first in ``M.col_labels`` has coefficient 1. Raises
    NotACircuit when the columns are dependent but do not form a circuit
    (a dependency space of dimension >= 2 or one with a zero coefficient).
    """
    idx = _indices(M, C)
    if not idx:
        raise NotACircuit("empty column set")
    p = M.p
    sub = [[row[j] for j in idx] for row in M.entries]
    rows, pivots = _rref_rows(sub, p)
    k = len(idx)
    free = [c for c in range(k) if c not in pivots]
    if not free:
        return None
    if len(free) > 1:
        raise NotACircuit(f"dependency space of dimension {len(free)}")
    f = free[0]
    x = [0] * k
    x[f] = 1
    for r, c in enumerate(pivots):
        x[c] = -rows[r][f] % p
    if not all(x):
        raise NotACircuit("a proper subset is already dependent")
    scale = inv_mod(x[0], p)
    return {M.col_labels[j]: FieldElement(v * scale, M.modulus) for j, v in zip(idx, x)}
