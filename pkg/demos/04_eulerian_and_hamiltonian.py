#!/usr/bin/env python
"""Circuit decompositions and Hamiltonian circuits of R8 and its element splitting."""
from splitmat import (SplitSpec, circuit_decompositions, element_split, is_hamiltonian,
                      verify_cor_4_3, verify_prop_4_1)
from splitmat import data


def fmt(parts):
    return ' | '.join('{%s}' % ', '.join(sorted(p, key=int)) for p in parts)


if __name__ == '__main__':
    M = data.r8()
    s = SplitSpec(3, 5)
    print('decompositions of R8 into disjoint circuits (np-circuits counted for {3, 5}):')
    for D in circuit_decompositions(M, limit=10, spec=s):
        print('   %-32s np=%d' % (fmt(D.parts), D.np_count))

    rep = verify_prop_4_1(M, s)
    print('\nfirst decomposition with exactly one np-circuit, with 9 attached:')
    print('  ', fmt(rep.witness.parts))
    Me = element_split(M, s)
    print("decompositions of M'_{3,5}:")
    for D in circuit_decompositions(Me, limit=10):
        print('  ', fmt(D.parts))

    print('\nr(R8) = %d, Hamiltonian circuit %s' % (M.rank, sorted(is_hamiltonian(M), key=int)))
    print("r(M') = %d, Hamiltonian circuit %s" % (Me.rank, sorted(is_hamiltonian(Me), key=int)))
    print(verify_cor_4_3(M, s))
