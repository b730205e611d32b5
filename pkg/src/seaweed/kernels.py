"""Hot inner loops over partner arrays and composition stacks.

All vertex arrays here are 0-based ``int64``. Every kernel has two paths:
a loop version compiled with numba, and a fallback that is either
vectorized numpy (partner maps, cycle and component labels) or the same
loop run by the interpreter (the reduction kernels). ``SEAWEED_NUMBA=0``
selects the fallbacks; both paths are importable directly for testing.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

# ---------------------------------------------------------------- partner maps


def partner_map_numpy(parts: np.ndarray, n: int) -> np.ndarray:
    parts = np.asarray(parts, dtype=np.int64)
    out = np.arange(n, dtype=np.int64)
    total = int(parts.sum()) if parts.size else 0
    if total == 0:
        return out
    starts = np.concatenate(([0], np.cumsum(parts)[:-1]))
    # 0-based: j + k = 2*start + size - 1 inside each block
    centre = np.repeat(2 * starts + parts - 1, parts)
    out[:total] = centre - out[:total]
    return out


@njit
def partner_map_loop(parts, n):
    out = np.arange(n)
    s = 0
    for i in range(parts.shape[0]):
        size = parts[i]
        for j in range(s, s + size):
            out[j] = 2 * s + size - 1 - j
        s += size
    return out


def tail_mask(n: int, sum_a: int, sum_b: int) -> np.ndarray:
    """Symmetric difference of ``{sum_a+1..n}`` and ``{sum_b+1..n}`` as a 0-based mask."""
    v = np.arange(1, n + 1)
    return (v > sum_a) != (v > sum_b)


# ------------------------------------------------------- permutation j -> t(b(j))


@njit
def sigma_stats_loop(top, bottom, tail):
    """Return (number of sigma cycles, number with 0 or 2 tail entries)."""
    n = top.shape[0]
    seen = np.zeros(n, dtype=np.bool_)
    ncyc = 0
    good = 0
    for v in range(n):
        if seen[v]:
            continue
        ncyc += 1
        cnt = 0
        w = v
        while not seen[w]:
            seen[w] = True
            if tail[w]:
                cnt += 1
            w = top[bottom[w]]
        if cnt == 0 or cnt == 2:
            good += 1
    return ncyc, good


def cycle_min_labels_numpy(perm: np.ndarray) -> np.ndarray:
    """Label every point by the minimum of its cycle, by pointer doubling."""
    n = perm.shape[0]
    lab = np.arange(n, dtype=np.int64)
    jump = perm.astype(np.int64, copy=True)
    span = 1
    while span < n:
        lab = np.minimum(lab, lab[jump])
        jump = jump[jump]
        span *= 2
    return lab


def sigma_stats_numpy(top, bottom, tail):
    sigma = top[bottom]
    lab = cycle_min_labels_numpy(sigma)
    roots = lab == np.arange(sigma.shape[0])
    counts = np.bincount(lab, weights=tail.astype(np.int64), minlength=sigma.shape[0])
    good = roots & ((counts == 0) | (counts == 2))
    return int(roots.sum()), int(good.sum())


# ------------------------------------------------------------- components


@njit
def components_loop(top, bottom, tail):
    """Union-find over both partner maps.

    Returns (labels, is_cycle, tail_count); components are numbered by
    increasing minimal vertex.
    """
    n = top.shape[0]
    parent = np.arange(n)
    for v in range(n):
        for w in (top[v], bottom[v]):
            rv = v
            while parent[rv] != rv:
                parent[rv] = parent[parent[rv]]
                rv = parent[rv]
            rw = w
            while parent[rw] != rw:
                parent[rw] = parent[parent[rw]]
                rw = parent[rw]
            if rv != rw:
                if rv < rw:
                    parent[rw] = rv
                else:
                    parent[rv] = rw
    ids = -np.ones(n, dtype=np.int64)
    labels = np.empty(n, dtype=np.int64)
    is_cycle = np.ones(n, dtype=np.bool_)
    tails = np.zeros(n, dtype=np.int64)
    ncomp = 0
    for v in range(n):
        r = v
        while parent[r] != r:
            r = parent[r]
        if ids[r] < 0:
            ids[r] = ncomp
            ncomp += 1
        c = ids[r]
        labels[v] = c
        if top[v] == v or bottom[v] == v:
            is_cycle[c] = False
        if tail[v]:
            tails[c] += 1
    return labels, is_cycle[:ncomp], tails[:ncomp]


def components_numpy(top, bottom, tail):
    # a component is one sigma cycle (a path) or two sigma cycles swapped by top
    n = top.shape[0]
    lab = cycle_min_labels_numpy(top[bottom])
    root = np.minimum(lab, lab[top])
    uniq, labels = np.unique(root, return_inverse=True)
    ncomp = uniq.shape[0]
    open_end = (top == np.arange(n)) | (bottom == np.arange(n))
    is_cycle = np.bincount(labels, weights=open_end, minlength=ncomp) == 0
    tails = np.bincount(labels, weights=tail.astype(np.int64), minlength=ncomp).astype(np.int64)
    return labels.astype(np.int64), is_cycle, tails


# ------------------------------------------------------ reduction kernels


@njit
def signature_index_kernel(a, b):
    """Type A index by the deterministic flip/contract/eliminate loop.

    ``a`` and ``b`` are the compositions in natural order.
    """
    cap = a.shape[0] + b.shape[0] + 1
    sa = np.zeros(cap, dtype=np.int64)
    sb = np.zeros(cap, dtype=np.int64)
    la = a.shape[0]
    lb = b.shape[0]
    for i in range(la):
        sa[la - 1 - i] = a[i]
    for i in range(lb):
        sb[lb - 1 - i] = b[i]
    total = 0
    while la > 0 and lb > 0:
        a1 = sa[la - 1]
        b1 = sb[lb - 1]
        if a1 > b1:
            sa, sb = sb, sa
            la, lb = lb, la
        elif a1 == b1:
            total += a1
            la -= 1
            lb -= 1
        elif 2 * a1 <= b1:
            la -= 1
            sb[lb - 1] = a1
            if b1 - 2 * a1 > 0:
                sb[lb] = b1 - 2 * a1
                lb += 1
        else:
            sa[la - 1] = 2 * a1 - b1
            sb[lb - 1] = a1
    return total - 1


@njit
def panyushev_index_kernel(n, a, b):
    """Type C index by the inductive formulas, iteratively."""
    cap = a.shape[0] + b.shape[0] + 1
    sa = np.zeros(cap, dtype=np.int64)
    sb = np.zeros(cap, dtype=np.int64)
    la = a.shape[0]
    lb = b.shape[0]
    suma = 0
    sumb = 0
    for i in range(la):
        sa[la - 1 - i] = a[i]
        suma += a[i]
    for i in range(lb):
        sb[lb - 1 - i] = b[i]
        sumb += b[i]
    total = 0
    while True:
        s = max(suma, sumb)
        if s < n:
            total += n - s
            n = s
        if lb == 0 and la == 0:
            break
        if la == 0 or (lb > 0 and sa[la - 1] > sb[lb - 1]):
            sa, sb = sb, sa
            la, lb = lb, la
            suma, sumb = sumb, suma
            continue
        if lb == 0:
            total += n - suma
            for i in range(la):
                total += sa[i] // 2
            break
        a1 = sa[la - 1]
        b1 = sb[lb - 1]
        if a1 == b1:
            total += a1
            n -= a1
            suma -= a1
            sumb -= a1
            la -= 1
            lb -= 1
        elif 2 * a1 <= b1:
            n -= a1
            suma -= a1
            sumb -= a1
            la -= 1
            sb[lb - 1] = a1
            if b1 - 2 * a1 > 0:
                sb[lb] = b1 - 2 * a1
                lb += 1
        else:
            d = b1 - a1
            n -= d
            suma -= d
            sumb -= d
            sa[la - 1] = 2 * a1 - b1
            sb[lb - 1] = a1
    return total


# ---------------------------------------------------------- public dispatch

if USE_NUMBA:
    partner_map = partner_map_loop
    sigma_stats = sigma_stats_loop
    components = components_loop
else:
    partner_map = partner_map_numpy
    sigma_stats = sigma_stats_numpy
    components = components_numpy


def as_array(parts) -> np.ndarray:
    return np.asarray(tuple(parts), dtype=np.int64)


def meander_arrays(algebra: str, n: int, a, b):
    aa, bb = as_array(a), as_array(b)
    top = partner_map(aa, n)
    bottom = partner_map(bb, n)
    if algebra == "C":
        tail = tail_mask(n, int(aa.sum()), int(bb.sum()))
    else:
        tail = np.zeros(n, dtype=np.bool_)
    return top, bottom, tail


def index_from_components(algebra: str, is_cycle, tails) -> int:
    ncyc = int(np.count_nonzero(is_cycle))
    if algebra == "A":
        return int(is_cycle.shape[0]) + ncyc - 1
    ok = (~is_cycle) & ((tails == 0) | (tails == 2))
    return 2 * ncyc + int(np.count_nonzero(ok))


def fast_meander_index(algebra: str, n: int, a, b) -> int:
    """Meander-count index without building a :class:`Meander` (sweep path)."""
    top, bottom, tail = meander_arrays(algebra, n, a, b)
    _, is_cycle, tails = components(top, bottom, tail)
    return index_from_components(algebra, is_cycle, tails)
