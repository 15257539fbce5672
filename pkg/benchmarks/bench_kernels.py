"""Time the pure-Python and compiled kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]

Inputs: Jacobi residuals of tag(lambda_regular) and of sl3, and row reduction
of random integer matrices plus the Rˢ relation generators of lambda_regular.
"""
import argparse
import math
import random
import timeit

from shortsl2 import _pykernels
from shortsl2 import fixtures as fx
from shortsl2.algebras import _scaled_table
from shortsl2.constructions import relation_generators, tag

try:
    from shortsl2 import _ckernels
except ImportError:
    _ckernels = None


def jacobi_case(g):
    table, _ = _scaled_table(g)
    return g.dim, list(g.space.parities), table


def rref_case(vectors):
    den = math.lcm(*(x.denominator for v in vectors for x in v))
    return [[int(x * den) for x in v] for v in vectors], len(vectors[0])


def cases(seed=0):
    rng = random.Random(seed)
    out = []
    for label, g in (("jacobi sl3 (dim 8)", fx.sl3()[0]),
                     ("jacobi tag(lambda_regular)", tag(fx.lambda_regular_seed()).table)):
        n, par, table = jacobi_case(g)
        out.append((label, "jacobi_residuals", (n, par, table)))
    for n in (20, 60):
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        out.append((f"rref random {n}x{n}", "rref_int", (rows, n)))
    vecs = [v for _, _, v in relation_generators(fx.lambda_regular_seed())]
    rows, ncols = rref_case(vecs)
    out.append((f"rref Rs generators {len(rows)}x{ncols}", "rref_int", (rows, ncols)))
    return out


def run_case(mod, fname, args):
    fn = getattr(mod, fname)
    if fname == "rref_int":
        rows, ncols = args
        return fn([r[:] for r in rows], ncols)
    return fn(*args)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; timing the Python kernels only")
    print(f"{'case':40} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, fname, data in cases():
        py = min(timeit.repeat(lambda: run_case(_pykernels, fname, data), number=1,
                               repeat=args.repeat)) * 1e3
        if _ckernels is None:
            print(f"{label:40} {py:10.2f}")
            continue
        assert run_case(_pykernels, fname, data) == run_case(_ckernels, fname, data), label
        cy = min(timeit.repeat(lambda: run_case(_ckernels, fname, data), number=1,
                               repeat=args.repeat)) * 1e3
        print(f"{label:40} {py:10.2f} {cy:10.2f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
