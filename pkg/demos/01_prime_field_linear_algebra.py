#!/usr/bin/env python
"""Arithmetic and row reduction over GF(p)."""
from splitmat import FieldMatrix, PrimeModulus, dependency_coefficients, mat_rank_of_columns, mat_rref

if __name__ == '__main__':
    F7 = PrimeModulus(7)
    a, b = F7(3), F7(5)
    print('3 + 5 =', a + b, '  3 * 5 =', a * b, '  3 / 5 =', a / b)

    # entries are reduced mod p on the way in
    A = FieldMatrix.from_rows([[1, 2, 3, 4], [2, 4, 6, 1], [0, 0, 1, 1]], 7)
    print(A)
    rref, pivots, rank = mat_rref(A)
    print('\nreduced row echelon form (pivots %s, rank %d):' % (list(pivots), rank))
    print(rref)

    print('\nrank of columns {1, 2}:', mat_rank_of_columns(A, ['1', '2']))
    # columns 1 and 2 are parallel; the witness is scaled so column 1 has coefficient 1
    print('dependency on {1, 2}:', dependency_coefficients(A, ['1', '2']))
