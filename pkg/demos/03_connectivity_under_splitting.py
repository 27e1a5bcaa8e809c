#!/usr/bin/env python
"""Splitting can disconnect a matroid; element splitting repairs it."""
from splitmat import SplitSpec, element_split, find_k_separation, is_n_connected, is_trivial_splitting, split
from splitmat import data, verify_thm_3_1, verify_thm_3_2

if __name__ == '__main__':
    M = data.load('split_disconnects')
    s = SplitSpec(1, 4)
    print('M connected:', is_n_connected(M, 2))

    Ms = split(M, s)
    sep = find_k_separation(Ms, 1)
    print('M_{1,4} connected:', is_n_connected(Ms, 2))
    print('   1-separation S=%s T=%s, r(S)+r(T)-r(M)=%d'
          % (sorted(sep.S, key=int), sorted(sep.T, key=int), sep.defect))

    Me = element_split(M, s)
    print("M'_{1,4} connected:", is_n_connected(Me, 2))
    print('splitting is trivial:', is_trivial_splitting(M, s))
    print(verify_thm_3_1(M, s))

    # R8 is 3-connected, and so is its element splitting at {3, 5}
    R8 = data.r8()
    rep = verify_thm_3_2(R8, SplitSpec(3, 5))
    print('\nR8 3-connected:', is_n_connected(R8, 3))
    print("every element avoids some np-circuit:", rep.hypothesis_holds)
    print("M'_{3,5} 3-connected:", rep.conclusion_holds)
