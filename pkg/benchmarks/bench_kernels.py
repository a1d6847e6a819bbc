"""Compare the compiled search kernels against the pure Python fallback.

Every workload is a full exhaustion proof (the answer is "no such map"),
so both backends walk the same search tree.  Each case is repeated until
it has consumed a small time budget and the fastest repetition is kept.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
"""

import time

from ordcore import X13Formula, clique_gadget, hypergraph_gadget, mc, new_partitioned
from ordcore._kernels import _pykernels
from ordcore.hypergraphs import _masks

try:
    from ordcore._kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, budget=2.0, cap=25):
    reps = []
    deadline = time.perf_counter() + budget
    while len(reps) < cap and (not reps or time.perf_counter() < deadline):
        t0 = time.perf_counter()
        out = fn()
        reps.append(time.perf_counter() - t0)
        if out is not None:
            raise AssertionError("workload was supposed to prove non-existence")
    return min(reps), len(reps)


def graph_case(name, g, min_image=0):
    def pure():
        return _pykernels.find_hom(
            g.n, g.adj, g.n, g.adj, forbid_identity=True, min_image=min_image
        )

    def compiled():
        return _ckernels.find_hom(g.n, g.adj, g.n, g.adj, None, True, min_image, False)

    return name, pure, compiled


def hyper_case(name, hg):
    edges = hg.edge_list()
    masks = _masks(edges)

    def pure():
        return _pykernels.find_hyperhom(
            hg.n, edges, hg.n, masks, forbid_identity=True, allowed=-1
        )

    def compiled():
        return _ckernels.find_hyperhom(hg.n, edges, hg.n, masks, None, True, None)

    return name, pure, compiled


def main():
    cases = [
        graph_case("mc(6) image-bound sweep, n=12", mc(6).graph, min_image=3),
        graph_case("mc(7) image-bound sweep, n=14", mc(7).graph, min_image=3),
        graph_case(
            "clique gadget core proof, n=25",
            clique_gadget(new_partitioned(2, 4, frozenset()))[0],
            min_image=0,
        ),
        hyper_case(
            "hypergraph gadget core proof, n=25",
            hypergraph_gadget(
                X13Formula(5, ((0, 1, 2), (0, 1, 3), (0, 1, 4), (2, 3, 4))), k=4
            )[0],
        ),
    ]
    if _ckernels is None:
        print("compiled kernels unavailable; timing the pure backend only")
    width = max(len(name) for name, _, _ in cases)
    header = f"{'workload':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, pure, compiled in cases:
        tp, _ = best_of(pure)
        if _ckernels is None:
            print(f"{name:<{width}}  {tp * 1000:>8.1f}ms")
            continue
        tc, _ = best_of(compiled)
        print(
            f"{name:<{width}}  {tp * 1000:>8.1f}ms  {tc * 1000:>8.1f}ms"
            f"  {tp / tc:>7.1f}x"
        )


if __name__ == "__main__":
    main()
