import random
from itertools import combinations

import pytest

from splitmat import (
    FieldMatrix,
    PrimeModulus,
    SplitSpec,
    Tag,
    bases,
    circuits,
    classify_circuit,
    element_split,
    independent_sets,
    is_trivial_splitting,
    matroid_from_matrix,
    np_circuits,
    predicted_bases,
    predicted_circuits,
    predicted_independents,
    predicted_rank,
    split,
)
from splitmat.errors import InvalidSpec, LabelCollision, ModulusMismatch, NotACircuit
from splitmat.matroid import VectorMatroid, find_coloops
from splitmat.splitting import default_z_label
from splitmat.sweep import oracle_mismatches, random_instance

from conftest import R8_ROWS, SD_ROWS, S
from oracles import brute_circuits, brute_independents
from test_matroid import R8_CIRCUITS

# middle column of the paper's table (circuits of the splitting matroid)
R8_SPLIT_CIRCUITS = {S(*c) for c in [
    (1, 2, 3, 4, 5), (1, 2, 7, 8), (1, 4, 6, 7), (2, 4, 6, 8), (3, 5, 6, 7, 8),
    (1, 2, 3, 5, 6, 7), (1, 2, 3, 5, 6, 8), (1, 3, 4, 5, 6, 8), (1, 3, 4, 5, 7, 8),
    (2, 3, 4, 5, 6, 7), (2, 3, 4, 5, 7, 8),
]}
R8_NP = R8_CIRCUITS - R8_SPLIT_CIRCUITS
R8_ELEMENT_SPLIT_CIRCUITS = R8_SPLIT_CIRCUITS | {c | {"9"} for c in R8_NP}

A35 = [row + [0] for row in R8_ROWS] + [[0, 0, 1, 0, 1, 0, 0, 0, 1]]


def test_table_tallies():
    assert (len(R8_CIRCUITS), len(R8_SPLIT_CIRCUITS), len(R8_NP), len(R8_ELEMENT_SPLIT_CIRCUITS)) == \
        (20, 11, 15, 26)


def test_spec_validation(r8):
    with pytest.raises(InvalidSpec):
        split(r8, SplitSpec(3, 3))
    with pytest.raises(InvalidSpec):
        split(r8, SplitSpec(3, 12))
    with pytest.raises(InvalidSpec):
        split(r8, SplitSpec(3, 5, 3))  # 3 == 0 in GF(3)
    with pytest.raises(ModulusMismatch):
        split(r8, SplitSpec(3, 5, PrimeModulus(5)(1)))
    assert split(r8, SplitSpec(3, 5, PrimeModulus(3)(2))).matrix.entries[-1] == (0, 0, 2, 0, 2, 0, 0, 0)


def test_split_rows(r8, sd, spec35, spec14):
    assert split(sd, spec14).matrix.entries[-1] == (1, 0, 0, 1, 0, 0, 0, 0)
    assert split(sd, spec14).matrix.entries[:-1] == tuple(map(tuple, SD_ROWS))
    Ms = split(r8, spec35)
    assert Ms.matrix.entries[-1] == (0, 0, 1, 0, 1, 0, 0, 0)
    assert Ms.ground_set == r8.ground_set
    assert circuits(Ms).as_set() == R8_SPLIT_CIRCUITS


def test_element_split_r8(r8, spec35):
    Me = element_split(r8, spec35)
    assert Me.matrix.entries == tuple(map(tuple, A35))
    assert Me.ground_set == tuple("123456789")
    assert Me.rank == 5
    assert circuits(Me).as_set() == R8_ELEMENT_SPLIT_CIRCUITS
    assert len(circuits(Me)) == 26


def test_element_split_disconnecting_example(sd, spec14):
    Me = element_split(sd, spec14)
    expected = [row + [0] for row in SD_ROWS] + [[1, 0, 0, 1, 0, 0, 0, 0, 1]]
    assert Me.matrix.entries == tuple(map(tuple, expected))


def test_z_label():
    assert default_z_label(tuple("12345678")) == "9"
    assert default_z_label(("a", "b")) == "z"
    assert default_z_label(("1", "x", "10")) == "11"
    M = matroid_from_matrix(FieldMatrix.from_rows(R8_ROWS, 3, labels="abcdefgh"))
    assert element_split(M, SplitSpec("c", "e")).ground_set[-1] == "z"
    assert element_split(M, SplitSpec("c", "e"), z="new").ground_set[-1] == "new"
    with pytest.raises(LabelCollision):
        element_split(M, SplitSpec("c", "e"), z="a")


def test_classify(r8, spec35):
    assert classify_circuit(r8, spec35, [1, 2, 3, 4, 5]).tag is Tag.P_CIRCUIT
    assert classify_circuit(r8, spec35, [1, 3, 5, 7]).tag is Tag.NP_CIRCUIT
    assert classify_circuit(r8, spec35, [1, 2, 7, 8]).tag is Tag.UNTOUCHED
    assert classify_circuit(r8, spec35, [2, 4, 5, 7]).tag is Tag.NP_CIRCUIT  # only b
    with pytest.raises(NotACircuit):
        classify_circuit(r8, spec35, [1, 2, 3, 4, 5, 6])
    with pytest.raises(NotACircuit):
        classify_circuit(r8, spec35, [1, 2])


def test_np_circuits(r8, sd, spec35, spec14):
    nps = np_circuits(r8, spec35)
    assert len(nps) == 15 and nps.as_set() == R8_NP
    assert not is_trivial_splitting(r8, spec35)
    assert len(np_circuits(sd, spec14)) > 0
    assert not is_trivial_splitting(sd, spec14)


def test_trivial_splitting():
    # single circuit 1 + 2 - 3 = 0; coefficients on a=1, b=3 cancel so it survives
    M = matroid_from_matrix(FieldMatrix.from_rows([[1, 0, 1], [0, 1, 1]], 3))
    s = SplitSpec(1, 3)
    assert is_trivial_splitting(M, s)
    assert predicted_circuits(M, s).as_set() == circuits(split(M, s)).as_set()
    Me = element_split(M, s)
    assert "4" in find_coloops(Me)
    assert split(M, s).rank == M.rank


def test_trivial_when_no_circuit_meets_a_or_b():
    M = VectorMatroid(FieldMatrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]], 5))
    assert is_trivial_splitting(M, SplitSpec(1, 2))
    assert len(np_circuits(M, SplitSpec(1, 2))) == 0


def test_predicted_circuits_r8(r8, spec35):
    P = predicted_circuits(r8, spec35)
    assert P.as_set() == R8_ELEMENT_SPLIT_CIRCUITS
    assert P == circuits(element_split(r8, spec35))


def test_predicted_independents_and_bases_r8(r8, spec35):
    I = predicted_independents(r8, spec35)
    assert frozenset() in I and S(9) in I and S(1, 2, 3, 4, 9) in I
    assert set(I) == brute_independents(A35, 3, tuple("123456789"))
    B = predicted_bases(r8, spec35)
    assert S(1, 2, 3, 4, 9) in B
    assert all(len(b) == 5 for b in B)
    assert B == bases(element_split(r8, spec35))
    # an np-circuit of size r + 1 is independent in the splitting matroid, hence a basis there
    assert S(1, 2, 3, 4, 6) in B


def test_predicted_bases_trivial():
    M = matroid_from_matrix(FieldMatrix.from_rows([[1, 0, 1], [0, 1, 1]], 3))
    s = SplitSpec(1, 3)
    assert predicted_bases(M, s) == [b | {"4"} for b in bases(M)]


def test_predicted_rank_r8(r8, spec35):
    assert predicted_rank(r8, spec35, [9]) == 1
    assert predicted_rank(r8, spec35, [1, 3, 5, 7]) == 4
    assert predicted_rank(r8, spec35, [1, 2, 3, 4, 5]) == 4
    Me = element_split(r8, spec35)
    for k in range(10):
        for X in combinations(Me.ground_set, k):
            assert predicted_rank(r8, spec35, X) == Me.rank_of(X)


def test_rank_law(r8, spec35):
    assert element_split(r8, spec35).rank == r8.rank + 1
    assert split(r8, spec35).rank == r8.rank + 1


def _random_cases(count, seed):
    rng = random.Random(seed)
    return [random_instance(rng, max_rows=4, max_cols=7, eulerian=bool(i % 3 == 0)) for i in range(count)]


CASES = _random_cases(60, 5)


@pytest.mark.parametrize("M,s", CASES, ids=lambda x: repr(x))
def test_structural_oracles(M, s):
    assert oracle_mismatches(M, s) == []


@pytest.mark.parametrize("M,s", CASES[:15], ids=lambda x: repr(x))
def test_element_split_circuits_brute_force(M, s):
    Me = element_split(M, s)
    rows = [list(r) for r in Me.matrix.entries]
    assert predicted_circuits(M, s).as_set() == brute_circuits(rows, M.p, Me.ground_set)


@pytest.mark.parametrize("M,s", CASES, ids=lambda x: repr(x))
def test_classification_agrees_with_enumeration(M, s):
    split_circuits = circuits(split(M, s)).as_set()
    for C in circuits(M):
        tag = classify_circuit(M, s, C).tag
        if tag is Tag.NP_CIRCUIT:
            assert C not in split_circuits
            assert s.a in C or s.b in C
        else:
            assert C in split_circuits
        if tag is Tag.P_CIRCUIT:
            assert {s.a, s.b} <= C


@pytest.mark.parametrize("M,s", CASES, ids=lambda x: repr(x))
def test_rank_law_and_z(M, s):
    Me = element_split(M, s)
    Ms = split(M, s)
    trivial = is_trivial_splitting(M, s)
    assert Me.rank == M.rank + 1
    assert Ms.rank == M.rank + (0 if trivial else 1)
    z = Me.ground_set[-1]
    assert Me.rank_of([z]) == 1
    assert (z in find_coloops(Me)) == trivial
