#!/usr/bin/env python
"""Check every structural identity and theorem on random small instances."""
import sys

from splitmat.sweep import run_sweep

if __name__ == '__main__':
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    res = run_sweep(seed=2024, count=count)
    print('instances:', res.instances)
    for name in sorted(res.ran):
        print('  %-8s ran %4d   hypothesis held %4d' % (name, res.ran[name], res.hypothesis[name]))
    print('failures:', res.failures or 'none')
