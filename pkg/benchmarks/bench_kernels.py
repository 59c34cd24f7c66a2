"""Time the compiled kernels against the pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import random
import timeit

from gammalab import _pykernels
from gammalab.enumerate import EnumConfig, _perms, partial_orders, random_structure, table_families

try:
    from gammalab import _kernels
except ImportError:
    _kernels = None


def cases():
    structs = [random_structure(EnumConfig(5, 2), i) for i in range(20)]
    fams32 = table_families(3, 2)
    orders3 = partial_orders(3)
    p3, p2 = _perms(3), _perms(2)

    def closure(k):
        for s in structs:
            for a in range(s.n):
                k.closure_mask(s.op, s.leq, s.n, s.g, 1 << a)

    def filters(k):
        for s in structs:
            k.filter_masks(s.op, s.leq, s.n, s.g)

    def search(k):
        vals = bytes(v for _ in range(2 * 9) for v in range(3))
        k.search_tables(3, 2, vals, True, 0, 0)

    def random_search(k):
        rng = random.Random(0)
        for _ in range(20):
            vals = bytearray()
            for _ in range(2 * 16):
                row = list(range(4))
                rng.shuffle(row)
                vals.extend(row)
            k.search_tables(4, 2, bytes(vals), True, 1, 2000)

    def canon(k):
        for s in structs:
            k.canonical_form(s.op, s.leq, s.n, s.g, _perms(5), p2)

    def forms(k):
        k.structure_forms(fams32, orders3, 3, 2, p3, p2)

    return [("closure_mask n=5", closure), ("filter_masks n=5", filters),
            ("search_tables all n=3 g=2", search), ("search_tables random n=4 g=2", random_search),
            ("canonical_form n=5 g=2", canon), ("structure_forms n=3 g=2", forms)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _kernels)] if _kernels else [])
    print(f"{'kernel':32s}" + "".join(f"{name:>12s}" for name, _ in backends) + "     speedup")
    for label, fn in cases():
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for _, k in backends]
        row = f"{label:32s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:9.1f}x"
        print(row)
    if _kernels is None:
        print("compiled kernels not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
