"""Pure Python backtracking kernels over bitmask adjacency.

Reference implementation of the hot search loops; `ordcore._kernels` prefers
the compiled twin when it is importable and the instance fits in 64-bit
masks.  Adjacency masks here are plain Python ints, so there is no size
limit.  Both kernels assign vertices in index order, which together with
monotonicity means every constraint can be checked against the already
assigned prefix.
"""

from __future__ import annotations

from typing import Sequence


def find_hom(
    n_g: int,
    adj_g: Sequence[int],
    n_h: int,
    adj_h: Sequence[int],
    fixed: Sequence[int] | None = None,
    forbid_identity: bool = False,
    min_image: int = 0,
    descending: bool = False,
) -> list[int] | None:
    """Lex-first monotone edge-preserving map [n_g] -> [n_h], or None.

    fixed[i] >= 0 pins vertex i to that target.  forbid_identity rejects the
    identity map (the only monotone surjection when n_g == n_h).  min_image
    requires at least that many distinct target values.  descending flips the
    candidate order, yielding the lexicographically largest map instead.
    """
    if fixed is None:
        fixed = (-1,) * n_g
    step = -1 if descending else 1
    f = [0] * n_g
    dist = [0] * n_g
    idp = [False] * n_g
    cand = [0] * n_g
    last = n_g - 1

    cand[0] = fixed[0] if fixed[0] >= 0 else (n_h - 1 if descending else 0)
    i = 0
    while i >= 0:
        lo = f[i - 1] if i > 0 else 0
        t = cand[i]
        placed = False
        while lo <= t < n_h:
            nxt = lo - 1 if fixed[i] >= 0 else t + step
            cand[i] = nxt
            nd = 1 if i == 0 else dist[i - 1] + (1 if t > f[i - 1] else 0)
            ok = nd + (last - i) >= min_image
            if ok and forbid_identity and i == last and t == i:
                ok = not (i == 0 or idp[i - 1])
            if ok:
                ah = adj_h[t]
                m = adj_g[i] & ((1 << i) - 1)
                while m:
                    lsb = m & -m
                    if not (ah >> f[lsb.bit_length() - 1]) & 1:
                        ok = False
                        break
                    m ^= lsb
            if ok:
                f[i] = t
                dist[i] = nd
                idp[i] = (i == 0 or idp[i - 1]) and t == i
                placed = True
                break
            t = nxt
        if not placed:
            i -= 1
            continue
        if i == last:
            return list(f)
        i += 1
        cand[i] = fixed[i] if fixed[i] >= 0 else (n_h - 1 if descending else f[i - 1])
    return None


def find_hyperhom(
    n_g: int,
    edges_g: Sequence[Sequence[int]],
    n_h: int,
    edge_masks_h: Sequence[int],
    fixed: Sequence[int] | None = None,
    forbid_identity: bool = False,
    allowed: int = -1,
) -> list[int] | None:
    """Lex-first monotone map under which every hyperedge of G lands,
    injectively, on a hyperedge mask from edge_masks_h.  Returns None when no
    such map exists.

    allowed, when non-negative, is a bitmask restricting the permitted target
    vertices.  Monotonicity plus per-hyperedge injectivity is enforced as a
    strict increase along each hyperedge's sorted members; partial hyperedge
    images are pruned unless they extend to some target mask.
    """
    if fixed is None:
        fixed = (-1,) * n_g
    full = set(edge_masks_h)
    subs = set()
    for mask in full:
        # all submasks of mask, for prefix feasibility
        s = mask
        while True:
            subs.add(s)
            if s == 0:
                break
            s = (s - 1) & mask

    e_members = [tuple(sorted(e)) for e in edges_g]
    edges_of: list[list[int]] = [[] for _ in range(n_g)]
    pred_of: list[list[int]] = [[] for _ in range(n_g)]
    is_last = [[] for _ in range(n_g)]
    for eid, mem in enumerate(e_members):
        for r, v in enumerate(mem):
            edges_of[v].append(eid)
            if r > 0:
                pred_of[v].append(mem[r - 1])
            is_last[v].append(r == len(mem) - 1)

    pmask = [0] * len(e_members)
    f = [0] * n_g
    idp = [False] * n_g
    cand = [0] * n_g
    active = [False] * n_g
    last = n_g - 1

    cand[0] = fixed[0] if fixed[0] >= 0 else 0
    i = 0
    while i >= 0:
        if active[i]:
            bit = 1 << f[i]
            for eid in edges_of[i]:
                pmask[eid] ^= bit
            active[i] = False
        lo = f[i - 1] if i > 0 else 0
        t = cand[i]
        placed = False
        while lo <= t < n_h:
            nxt = lo - 1 if fixed[i] >= 0 else t + 1
            cand[i] = nxt
            ok = allowed < 0 or (allowed >> t) & 1
            if ok and forbid_identity and i == last and t == i:
                ok = not (i == 0 or idp[i - 1])
            if ok:
                for p in pred_of[i]:
                    if f[p] >= t:
                        ok = False
                        break
            if ok:
                bit = 1 << t
                for eid, fin in zip(edges_of[i], is_last[i]):
                    nm = pmask[eid] | bit
                    if nm not in (full if fin else subs):
                        ok = False
                        break
            if ok:
                f[i] = t
                idp[i] = (i == 0 or idp[i - 1]) and t == i
                bit = 1 << t
                for eid in edges_of[i]:
                    pmask[eid] |= bit
                active[i] = True
                placed = True
                break
            t = nxt
        if not placed:
            i -= 1
            continue
        if i == last:
            return list(f)
        i += 1
        cand[i] = fixed[i] if fixed[i] >= 0 else f[i - 1]
    return None
