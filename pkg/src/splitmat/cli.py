"""Command line interface: ``splitmat <command> FILE [options]``.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 falsified theorem.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .errors import FalsifiedTheorem, PreconditionFailed, SplitmatError
from .matroid import (
    bases,
    circuits,
    circuits_through,
    find_coloops,
    find_k_separation,
    find_loops,
    is_n_connected,
    matroid_from_matrix,
)
from .splitting import SplitSpec, classify_all, default_z_label, element_split, is_trivial_splitting, split
from .structure import (
    TheoremReport,
    circuit_decompositions,
    is_eulerian,
    is_hamiltonian,
    verify_cor_4_3,
    verify_prop_4_1,
    verify_prop_4_2,
    verify_thm_3_1,
    verify_thm_3_2,
)
from .sweep import run_sweep

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2, 3
THEOREMS = ("3.1", "3.2", "4.1", "4.2", "4.3")


def _load(args, validate=False):
    A = io.load_matrix(args.file, reduce=args.reduce)
    return matroid_from_matrix(A, require_loopless_coloopless=validate)


def _labels(text: str) -> list[str]:
    return [t for t in text.replace(",", " ").split() if t]


def _spec(args) -> SplitSpec:
    return SplitSpec(args.a, args.b, args.alpha)


def _order(M) -> dict:
    return {x: i for i, x in enumerate(M.ground_set)}


def _family(M, family) -> list[list[str]]:
    return [M.sorted_labels(X) for X in family]


def cmd_info(args):
    M = _load(args)
    loops, coloops = find_loops(M), find_coloops(M)
    return {
        "p": M.p,
        "rows": M.matrix.nrows,
        "cols": M.matrix.ncols,
        "rank": M.rank,
        "loops": loops,
        "coloops": coloops,
        "connected": is_n_connected(M, 2),
    }


def cmd_rank(args):
    M = _load(args)
    S = _labels(args.set)
    return {"set": M.sorted_labels(S), "rank": M.rank_of(S)}


def cmd_circuits(args):
    M = _load(args)
    C = circuits_through(M, _labels(args.through)) if args.through else circuits(M)
    return {"circuits": C.sorted_lists()}


def cmd_bases(args):
    M = _load(args)
    return {"rank": M.rank, "bases": _family(M, bases(M))}


def cmd_split(args):
    M = _load(args)
    s = _spec(args)
    N = element_split(M, s, args.z) if args.element else split(M, s)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(io.emit_matrix_file(N.matrix))
    return {
        "operation": "element splitting" if args.element else "splitting",
        "labels": list(N.ground_set),
        "matrix": [list(r) for r in N.matrix.entries],
        "rank": N.rank,
        "written": args.out,
    }


def cmd_classify(args):
    M = _load(args)
    s = _spec(args)
    tags = classify_all(M, s)
    groups = {"p-circuits": [], "np-circuits": [], "untouched": []}
    names = {"p": "p-circuits", "np": "np-circuits", "untouched": "untouched"}
    for C, tag in tags.items():
        groups[names[tag.value]].append(M.sorted_labels(C))
    return {**groups, "trivial splitting": is_trivial_splitting(M, s)}


def cmd_connectivity(args):
    M = _load(args)
    witness = None
    for k in range(1, args.n):
        if len(M) >= 2 * k and (witness := find_k_separation(M, k)) is not None:
            break
    return {"n": args.n, "n-connected": witness is None, "separation": _plain(witness, _order(M))}


def cmd_eulerian(args):
    M = _load(args)
    ok, D = is_eulerian(M)
    out = {"eulerian": ok, "decomposition": _family(M, D.parts) if D else None}
    if args.all:
        out["decompositions"] = [
            {"parts": _family(M, d.parts)} for d in circuit_decompositions(M, limit=args.limit)]
    return out


def cmd_hamiltonian(args):
    M = _load(args)
    C = is_hamiltonian(M)
    return {"rank": M.rank, "hamiltonian": C is not None,
            "circuit": M.sorted_labels(C) if C else None}


def _plain(w, order: dict):
    """Convert witnesses (sets, separations, decompositions) to JSON-able values."""
    if isinstance(w, frozenset):
        return sorted(w, key=lambda x: order.get(x, len(order)))
    if hasattr(w, "parts"):
        return [_plain(x, order) for x in w.parts]
    if hasattr(w, "defect"):
        return {"S": _plain(w.S, order), "T": _plain(w.T, order), "k": w.k, "defect": w.defect}
    if isinstance(w, (tuple, list)):
        return [_plain(x, order) for x in w]
    if isinstance(w, dict):
        return {k: _plain(v, order) for k, v in w.items()}
    return w


def _report_payload(M, r: TheoremReport):
    order = _order(M)
    order.setdefault(default_z_label(M.ground_set), len(order))
    return {"hypothesis": r.hypothesis_holds, "conclusion": r.conclusion_holds,
            "biconditional": r.iff, "holds": r.holds, "witness": _plain(r.witness, order)}


def cmd_verify(args):
    M = _load(args)
    s = _spec(args)
    wanted = THEOREMS if args.theorem == "all" else (args.theorem,)
    out = {}
    falsified = []
    for t in wanted:
        try:
            if t == "3.1":
                reps = [verify_thm_3_1(M, s)]
            elif t == "3.2":
                reps = [verify_thm_3_2(M, s)]
            elif t == "4.1":
                reps = [verify_prop_4_1(M, s)]
            elif t == "4.3":
                reps = [verify_cor_4_3(M, s)]
            else:
                Me = element_split(M, s)
                reps = [verify_prop_4_2(M, s, D) for D in circuit_decompositions(Me, limit=args.limit)]
                if not reps:
                    out[t] = {"skipped": "element splitting matroid is not Eulerian"}
                    continue
        except PreconditionFailed as e:
            if args.theorem != "all":
                raise
            out[t] = {"skipped": f"precondition: {e}"}
            continue
        except FalsifiedTheorem as e:
            falsified.append(t)
            reps = [e.report]
        payload = [_report_payload(M, r) for r in reps]
        out[t] = payload[0] if len(payload) == 1 else {"reports": payload}
    if falsified:
        out["falsified"] = falsified
    return out


def cmd_sweep(args):
    primes = tuple(int(x) for x in _labels(args.primes))
    res = run_sweep(args.seed, args.count, primes, args.max_rows, args.max_cols)
    return {
        "instances": res.instances,
        "checks run": dict(sorted(res.ran.items())),
        "hypothesis held": dict(sorted(res.hypothesis.items())),
        "failures": {str(i): msg for i, msg in enumerate(res.failures, 1)},
        "falsified": bool(res.failures),
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    filed = argparse.ArgumentParser(add_help=False, parents=[common])
    filed.add_argument("file", help="matrix in .gfp format")
    filed.add_argument("--reduce", action="store_true", help="reduce out-of-range entries mod p")

    spec = argparse.ArgumentParser(add_help=False)
    spec.add_argument("--a", required=True)
    spec.add_argument("--b", required=True)
    spec.add_argument("--alpha", type=int, default=1)

    parser = argparse.ArgumentParser(prog="splitmat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[filed]).set_defaults(func=cmd_info)
    p = sub.add_parser("rank", parents=[filed])
    p.add_argument("--set", required=True, help="comma separated labels")
    p.set_defaults(func=cmd_rank)
    p = sub.add_parser("circuits", parents=[filed])
    p.add_argument("--through", default="", help="only circuits containing these labels")
    p.set_defaults(func=cmd_circuits)
    sub.add_parser("bases", parents=[filed]).set_defaults(func=cmd_bases)
    p = sub.add_parser("split", parents=[filed, spec])
    p.add_argument("--element", action="store_true", help="element splitting (adds column z)")
    p.add_argument("--z", default=None, help="label for the new column")
    p.add_argument("--out", default=None, help="write the resulting matrix here")
    p.set_defaults(func=cmd_split)
    sub.add_parser("classify", parents=[filed, spec]).set_defaults(func=cmd_classify)
    p = sub.add_parser("connectivity", parents=[filed])
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(func=cmd_connectivity)
    p = sub.add_parser("eulerian", parents=[filed])
    p.add_argument("--all", action="store_true", help="list circuit decompositions")
    p.add_argument("--limit", type=int, default=20)
    p.set_defaults(func=cmd_eulerian)
    sub.add_parser("hamiltonian", parents=[filed]).set_defaults(func=cmd_hamiltonian)
    p = sub.add_parser("verify", parents=[filed, spec])
    p.add_argument("--theorem", choices=THEOREMS + ("all",), default="all")
    p.add_argument("--limit", type=int, default=10, help="decompositions checked for 4.2")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("sweep", parents=[common])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--primes", default="2,3,5,7")
    p.add_argument("--max-rows", type=int, default=5)
    p.add_argument("--max-cols", type=int, default=8)
    p.set_defaults(func=cmd_sweep)
    return parser


def _inputs(args) -> dict:
    skip = {"func", "json", "command"}
    return {k: v for k, v in vars(args).items() if k not in skip and v not in (None, False, "")}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout.buffer
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        result = args.func(args)
    except FalsifiedTheorem as e:
        print(f"ERROR {e.code}: {e}", file=stderr)
        return EXIT_FALSIFIED
    except SplitmatError as e:
        print(f"ERROR {e.code}: {e}", file=stderr)
        return EXIT_DOMAIN
    except OSError as e:
        print(f"ERROR IOError: {e}", file=stderr)
        return EXIT_DOMAIN
    report = io.RunReport(args.command, _inputs(args), result)
    stdout.write(io.emit_report(report, "json" if args.json else "table"))
    stdout.flush()
    falsified = result.get("falsified")
    return EXIT_FALSIFIED if falsified else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
