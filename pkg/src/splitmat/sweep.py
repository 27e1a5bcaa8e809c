"""Random instances and the randomized property sweep."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations

from .errors import FalsifiedTheorem, HasColoop, HasLoop, PreconditionFailed
from .ff import FieldMatrix, column_rank
from .matroid import (
    VectorMatroid,
    bases,
    circuits,
    independent_sets,
    is_n_connected,
    matroid_from_matrix,
)
from .splitting import (
    SplitSpec,
    element_split,
    predicted_bases,
    predicted_circuits,
    predicted_independents,
    predicted_rank,
)
from .structure import (
    check_decomposition,
    circuit_decompositions,
    verify_cor_4_3,
    verify_prop_4_1,
    verify_prop_4_2,
    verify_thm_3_1,
    verify_thm_3_2,
)

PRIMES = (2, 3, 5, 7)


def random_matroid(rng: random.Random, p: int, m: int, n: int, tries: int = 200) -> VectorMatroid | None:
    """Uniformly random loopless, coloopless m x n matrix over GF(p), by rejection."""
    for _ in range(tries):
        rows = [[rng.randrange(p) for _ in range(n)] for _ in range(m)]
        try:
            return matroid_from_matrix(FieldMatrix.from_rows(rows, p))
        except (HasLoop, HasColoop):
            continue
    return None


def _random_circuit_columns(rng: random.Random, p: int, m: int, k: int) -> list[list[int]]:
    # k-1 independent vectors plus a combination of all of them with nonzero weights
    while True:
        vecs = [[rng.randrange(p) for _ in range(m)] for _ in range(k - 1)]
        if column_rank(vecs, p) == k - 1:
            break
    weights = [rng.randrange(1, p) for _ in vecs]
    last = [sum(w * v[i] for w, v in zip(weights, vecs)) % p for i in range(m)]
    return vecs + [last]


def random_eulerian_matroid(rng: random.Random, p: int, m: int, n: int) -> VectorMatroid:
    """Random matroid whose ground set is a disjoint union of circuits (n >= 2)."""
    if m == 1 and n % 2:
        raise ValueError("with one row every circuit is a parallel pair; n must be even")
    cols: list[list[int]] = []
    while len(cols) < n:
        left = n - len(cols)
        top = min(m + 1, left)
        k = left if left <= top else rng.randint(2, top)
        if left - k == 1:
            k -= 1
        cols += _random_circuit_columns(rng, p, m, k)
    rng.shuffle(cols)
    rows = [[c[i] for c in cols] for i in range(m)]
    return matroid_from_matrix(FieldMatrix.from_rows(rows, p))


def random_spec(rng: random.Random, M: VectorMatroid) -> SplitSpec:
    a, b = rng.sample(list(M.ground_set), 2)
    return SplitSpec(a, b, rng.randrange(1, M.p))


def random_instance(rng: random.Random, primes=PRIMES, max_rows: int = 5, max_cols: int = 8,
                    eulerian: bool = False) -> tuple[VectorMatroid, SplitSpec]:
    while True:
        p = rng.choice(primes)
        m = rng.randint(1, max_rows)
        n = rng.randint(max(3, m + 1), max(max_cols, m + 1))
        if n > max_cols or (eulerian and m == 1 and n % 2):
            continue
        M = random_eulerian_matroid(rng, p, m, n) if eulerian else random_matroid(rng, p, m, n)
        if M is not None:
            return M, random_spec(rng, M)


def oracle_mismatches(M: VectorMatroid, s: SplitSpec) -> list[str]:
    """Compare every predicted family against direct enumeration on M'."""
    Me = element_split(M, s)
    out = []
    if predicted_circuits(M, s).as_set() != circuits(Me).as_set():
        out.append("circuits")
    if predicted_independents(M, s) != independent_sets(Me):
        out.append("independents")
    if predicted_bases(M, s) != bases(Me):
        out.append("bases")
    ground = Me.ground_set
    for size in range(len(ground) + 1):
        for S in combinations(ground, size):
            if predicted_rank(M, s, S) != Me.rank_of(S):
                out.append(f"rank{{{','.join(S)}}}")
                return out
    return out


@dataclass
class SweepResult:
    instances: int = 0
    ran: Counter = field(default_factory=Counter)
    hypothesis: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _record(res: SweepResult, name: str, fn, *args):
    try:
        rep = fn(*args)
    except PreconditionFailed:
        return None
    except FalsifiedTheorem as e:
        res.ran[name] += 1
        res.failures.append(f"{name}: {e}")
        return None
    res.ran[name] += 1
    res.hypothesis[name] += rep.hypothesis_holds
    return rep


def check_instance(M: VectorMatroid, s: SplitSpec, res: SweepResult, tag: str = "") -> None:
    res.instances += 1
    bad = oracle_mismatches(M, s)
    res.ran["oracles"] += 1
    if bad:
        res.failures.append(f"oracles{tag}: {', '.join(bad)}")
    if is_n_connected(M, 2):
        _record(res, "T3_1", verify_thm_3_1, M, s)
    if is_n_connected(M, 3):
        _record(res, "T3_2", verify_thm_3_2, M, s)
    _record(res, "P4_1", verify_prop_4_1, M, s)
    _record(res, "C4_3", verify_cor_4_3, M, s)
    Me = element_split(M, s)
    for D in circuit_decompositions(Me, limit=4):
        try:
            check_decomposition(Me, D)
        except Exception as e:  # noqa: BLE001 - report any invariant failure
            res.failures.append(f"decomposition{tag}: {e}")
        _record(res, "P4_2", verify_prop_4_2, M, s, D)


def run_sweep(seed: int = 0, count: int = 100, primes=PRIMES, max_rows: int = 5,
              max_cols: int = 8) -> SweepResult:
    """Check every oracle and theorem on ``count`` random instances.

    Even-numbered instances are uniform random matrices, odd ones are built
    as disjoint unions of random circuits so the Eulerian statements get
    exercised. Each instance has its own seed derived from ``seed``.
    """
    res = SweepResult()
    for i in range(count):
        rng = random.Random(f"{seed}:{i}")
        M, s = random_instance(rng, primes, max_rows, max_cols, eulerian=bool(i % 2))
        check_instance(M, s, res, tag=f"[{i}]")
    return res
