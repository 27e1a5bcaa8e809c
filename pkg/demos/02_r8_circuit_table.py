#!/usr/bin/env python
"""Circuits of R8 before and after splitting at {3, 5}.

Circuits meeting {3, 5} either survive the splitting (p-circuits) or turn
independent (np-circuits). Element splitting brings every np-circuit back
with the new element 9 attached.
"""
from splitmat import SplitSpec, Tag, circuits, classify_circuit, element_split, predicted_circuits, split
from splitmat import data


def show(title, family):
    print('%s (%d)' % (title, len(family)))
    for C in family.sorted_lists():
        print('   {%s}' % ', '.join(C))


if __name__ == '__main__':
    M = data.r8()
    s = SplitSpec(3, 5, alpha=1)
    print(M.matrix, '\n')

    show('circuits of M', circuits(M))
    for C in circuits(M):
        print('   %-18s %s' % ('{%s}' % ', '.join(sorted(C, key=int)), classify_circuit(M, s, C).tag.name))

    show('\ncircuits of the splitting matroid', circuits(split(M, s)))
    Me = element_split(M, s)
    print('\nelement splitting matrix:\n%s' % Me.matrix)
    show('\ncircuits of the element splitting matroid', circuits(Me))

    # the same family, assembled from the np-circuits without enumerating M'
    assert predicted_circuits(M, s) == circuits(Me)
    print('\npredicted family matches direct enumeration')
