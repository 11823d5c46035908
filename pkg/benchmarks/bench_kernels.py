"""Compare the Cython and pure-Python tuple-counting kernels.

Workloads are the mask histograms that brute_V and brute_Q actually hand to
the kernel, so the timings reflect the oracle hot loop.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import timeit
from collections import Counter

from wcoprime.divisors import PlaceTable, _bad_mask, enumerate_effective
from wcoprime.finite_field import FieldSpec
from wcoprime.genus0 import RationalPlace, SDivisorSpec, _element_mask, rr_space_enumerate
from wcoprime.kernels import _ckernels, _pykernels
from wcoprime.zeta import E2_SUPERSINGULAR, SSpec, rational_curve


def element_histogram(q, N, w):
    spec = SDivisorSpec.make(FieldSpec(q), [RationalPlace.infinity()], [N])
    elems = rr_space_enumerate(spec)
    bit: dict = {}
    masks = [_element_mask(a, set(spec.places), w, bit, 0) for a in elems if not a.is_zero]
    full = (1 << (len(bit) + 1)) - 1
    hist = Counter(masks)
    hist[full] += 1
    keys = sorted(hist)
    return keys, [hist[k] for k in keys]


def ideal_histogram(c, s, n, w):
    t = PlaceTable.from_curve(c, s, n)
    bit: dict = {}
    hist = Counter(_bad_mask(d, w, bit) for d in enumerate_effective(t, n))
    keys = sorted(hist)
    return keys, [hist[k] for k in keys]


WORKLOADS = [
    ("elements q=2 N=8 m=3 w=1", lambda: element_histogram(2, 8, 1), 3),
    ("elements q=3 N=5 m=3 w=1", lambda: element_histogram(3, 5, 1), 3),
    ("elements q=2 N=10 m=4 w=2", lambda: element_histogram(2, 10, 2), 4),
    ("ideals e2 n=7 m=3 w=1", lambda: ideal_histogram(E2_SUPERSINGULAR, SSpec((1,)), 7, 1), 3),
    ("ideals q=3 n=4 m=4 w=1", lambda: ideal_histogram(rational_curve(3), SSpec((1,)), 4, 1), 4),
]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("Cython kernel not built; only the Python kernel is timed")
    print(f"{'workload':28} {'masks':>6} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name, build, m in WORKLOADS:
        masks, weights = build()
        py = min(timeit.repeat(lambda: _pykernels.count_disjoint_tuples(masks, weights, m),
                               number=1, repeat=args.repeat))
        want = _pykernels.count_disjoint_tuples(masks, weights, m)
        if _ckernels is not None:
            cy = min(timeit.repeat(lambda: _ckernels.count_disjoint_tuples(masks, weights, m),
                                   number=1, repeat=args.repeat))
            assert _ckernels.count_disjoint_tuples(masks, weights, m) == want
            print(f"{name:28} {len(masks):6d} {py * 1e3:10.2f} {cy * 1e3:10.2f} {py / cy:7.1f}x")
        else:
            print(f"{name:28} {len(masks):6d} {py * 1e3:10.2f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
