import subprocess
import sys
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordcore import _kernels
from ordcore._kernels import _pykernels
from ordcore import is_ordered_homomorphism, MonotoneMap, new_graph, path_graph

compiled = pytest.importorskip(
    "ordcore._kernels._ckernels", reason="compiled kernels not built"
)


def adj_masks(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


@st.composite
def mask_graph(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return n, adj_masks(n, edges)


@st.composite
def hom_case(draw):
    n_g, adj_g = draw(mask_graph())
    n_h, adj_h = draw(mask_graph())
    fixed = None
    if draw(st.booleans()):
        fixed = [
            draw(st.integers(0, n_h - 1)) if draw(st.booleans()) else -1
            for _ in range(n_g)
        ]
        # keep pins monotone so the case is not trivially unsatisfiable
        best = 0
        for i in range(n_g):
            if fixed[i] >= 0:
                if fixed[i] < best:
                    fixed[i] = best
                best = fixed[i]
    forbid = draw(st.booleans()) and n_g == n_h
    min_image = draw(st.integers(0, 4))
    descending = draw(st.booleans())
    return n_g, adj_g, n_h, adj_h, fixed, forbid, min_image, descending


@st.composite
def hyperhom_case(draw):
    n = draw(st.integers(3, 7))
    pool = list(combinations(range(n), 3))
    edges_g = draw(st.lists(st.sampled_from(pool), unique=True, min_size=1, max_size=6))
    edges_h = draw(st.lists(st.sampled_from(pool), unique=True, min_size=1, max_size=6))
    masks_h = [sum(1 << v for v in e) for e in edges_h]
    fixed = None
    if draw(st.booleans()):
        fixed = [i if draw(st.booleans()) else -1 for i in range(n)]
    forbid = draw(st.booleans())
    allowed = None
    if draw(st.booleans()):
        keep = draw(st.lists(st.integers(0, n - 1), unique=True, min_size=1))
        allowed = sum(1 << v for v in keep)
    return n, edges_g, masks_h, fixed, forbid, allowed


class TestBackendParity:
    @settings(max_examples=400, deadline=None)
    @given(hom_case())
    def test_find_hom_identical(self, case):
        n_g, adj_g, n_h, adj_h, fixed, forbid, min_image, descending = case
        pure = _pykernels.find_hom(
            n_g, adj_g, n_h, adj_h, fixed, forbid, min_image, descending
        )
        fast = compiled.find_hom(
            n_g, adj_g, n_h, adj_h, fixed, forbid, min_image, descending
        )
        assert pure == fast

    @settings(max_examples=400, deadline=None)
    @given(hyperhom_case())
    def test_find_hyperhom_identical(self, case):
        n, edges_g, masks_h, fixed, forbid, allowed = case
        pure = _pykernels.find_hyperhom(
            n, edges_g, n, masks_h, fixed, forbid,
            -1 if allowed is None else allowed,
        )
        fast = compiled.find_hyperhom(
            n, edges_g, n, masks_h, fixed, forbid, allowed
        )
        assert pure == fast


class TestDispatch:
    def test_backend_reports(self):
        assert _kernels.backend() in ("compiled", "pure")

    def test_large_graph_uses_pure_path(self):
        # 65 vertices exceeds the 64-bit mask budget; the dispatcher must
        # fall back to the pure kernel and still return a correct map
        g = path_graph(65)
        res = _kernels.find_hom(g.n, g.adj, g.n, g.adj)
        assert res == list(range(65))
        direct = _pykernels.find_hom(g.n, g.adj, g.n, g.adj)
        assert res == direct

    def test_results_validate_as_homomorphisms(self):
        g = new_graph(6, [(0, 3), (1, 4), (2, 5), (0, 5)])
        res = _kernels.find_hom(g.n, g.adj, g.n, g.adj, forbid_identity=True)
        if res is not None:
            assert is_ordered_homomorphism(g, g, MonotoneMap(tuple(res)))
            assert tuple(res) != tuple(range(6))

    def test_pure_env_forces_pure(self):
        out = subprocess.run(
            [sys.executable, "-c",
             "import ordcore._kernels as k; print(k.backend())"],
            capture_output=True, text=True,
            env={"ORDCORE_PURE": "1", "PATH": "/usr/bin:/bin"},
        )
        assert out.stdout.strip() == "pure"

    def test_default_env_prefers_compiled(self):
        out = subprocess.run(
            [sys.executable, "-c",
             "import ordcore._kernels as k; print(k.backend())"],
            capture_output=True, text=True,
            env={"PATH": "/usr/bin:/bin"},
        )
        assert out.stdout.strip() == "compiled"
