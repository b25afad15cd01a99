"""Exact integer kernels: extreme rays, rank, Smith invariants."""

from __future__ import annotations

from math import gcd
from typing import Sequence

Vector = tuple[int, ...]


def _primitive(vec: list[int]) -> Vector:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in vec)
    return tuple(vec)


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def extreme_rays(dim: int, constraints: Sequence[Vector]) -> list[Vector]:
    """Extreme rays of {x >= 0, a.x >= 0 for a in constraints}.

    Incremental double description starting from the orthant. Adjacency of
    a positive/negative ray pair is decided combinatorially: the pair spans
    a two-dimensional face exactly when no third ray is tight on every
    constraint the two share.
    """
    rays: list[Vector] = []
    tight: list[int] = []
    full = (1 << dim) - 1
    for i in range(dim):
        rays.append(tuple(1 if j == i else 0 for j in range(dim)))
        tight.append(full & ~(1 << i))
    bit = 1 << dim
    for a in constraints:
        if not any(a):
            continue
        vals = [_dot(a, r) for r in rays]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            tight = [t | bit if v == 0 else t for t, v in zip(tight, vals)]
            bit <<= 1
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        new_rays: list[Vector] = []
        new_tight: list[int] = []
        for i, v in enumerate(vals):
            if v > 0:
                new_rays.append(rays[i])
                new_tight.append(tight[i])
            elif v == 0:
                new_rays.append(rays[i])
                new_tight.append(tight[i] | bit)
        n_rays = len(rays)
        for p in pos:
            tp = tight[p]
            for q in neg:
                common = tp & tight[q]
                adjacent = True
                for r in range(n_rays):
                    if r != p and r != q and tight[r] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vp, vq = vals[p], vals[q]
                rp, rq = rays[p], rays[q]
                combo = [vp * y - vq * x for x, y in zip(rp, rq)]
                new_rays.append(_primitive(combo))
                new_tight.append(common | bit)
        rays, tight = new_rays, new_tight
        bit <<= 1
    return sorted(set(rays))


def integer_rank(rows: Sequence[Vector]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    n_cols = len(m[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        pv = pr[col]
        for i in range(rank + 1, len(m)):
            row = m[i]
            f = row[col]
            m[i] = [(pv * row[j] - f * pr[j]) // prev for j in range(n_cols)]
        prev = pv
        rank += 1
        if rank == len(m):
            break
    return rank


def smith_invariants(rows: Sequence[Vector]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return []
    n_rows, n_cols = len(a), len(a[0])
    out: list[int] = []
    t = 0
    while t < min(n_rows, n_cols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, n_rows) for j in range(t, n_cols) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, n_rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n_cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                bad = next(
                    ((i, j) for i in range(t + 1, n_rows) for j in range(t + 1, n_cols) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                # fold the offending row in so a smaller remainder appears
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                done = False
            # move the smallest entry of row/column t into the pivot spot
            cand = [(abs(a[i][t]), i, t) for i in range(t, n_rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, n_cols) if a[t][j]]
            _, pi, pj = min(cand)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        out.append(abs(a[t][t]))
        t += 1
    return out
