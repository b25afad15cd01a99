"""Slow, independent reference computations used only by the tests.

Nothing here calls the package's own kernels: rays come from brute-force
vertex enumeration with sympy, Smith forms from sympy, Hilbert bases from
box enumeration, isomorphism from trying every vertex bijection, and the
catalog from listing every multigraph.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations, product
from math import gcd

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form


def _primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, int(x))
    return tuple(int(x) // g for x in vec) if g else tuple(int(x) for x in vec)


def brute_extreme_rays(n, inequalities):
    """Extreme rays of {x >= 0, a.x >= 0} by trying every set of n-1
    constraints as the tight set."""
    rows = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)] + [tuple(a) for a in inequalities]
    found = set()
    if n == 0:
        return []
    for sub in combinations(range(len(rows)), n - 1):
        basis = Matrix([rows[i] for i in sub]).nullspace() if sub else [Matrix([1])]
        if len(basis) != 1:
            continue
        for b in basis:
            den = 1
            for x in b:
                den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
            v = [int(Fraction(x) * den) for x in b]
            for cand in (v, [-x for x in v]):
                if any(cand) and all(sum(a * x for a, x in zip(r, cand)) >= 0 for r in rows):
                    found.add(_primitive(cand))
    return sorted(found)


def sympy_invariants(rows):
    """Nonzero invariant factors of an integer matrix via sympy."""
    if not rows:
        return []
    snf = smith_normal_form(Matrix(rows), domain=ZZ)
    out = []
    for i in range(min(snf.shape)):
        if snf[i, i] != 0:
            out.append(abs(int(snf[i, i])))
    return sorted(out)


def brute_hilbert_basis(cone):
    """Irreducible lattice points of the cone, found by scanning the box
    bounded by the sum of its rays."""
    rays = cone.rays
    n = len(cone.ambient)
    if not rays:
        return []
    top = [sum(r[i] for r in rays) for i in range(n)]
    pts = [p for p in product(*(range(t + 1) for t in top)) if any(p) and cone.contains(p)]
    pset = set(pts)
    irred = []
    for p in pts:
        if not any(
            tuple(a - b for a, b in zip(p, q)) in pset for q in pts if q != p and all(b <= a for a, b in zip(p, q))
        ):
            irred.append(p)
    return sorted(irred)


def brute_is_free(cone):
    """Free iff the Hilbert basis has exactly dim elements."""
    dim = Matrix(cone.rays).rank() if cone.rays else 0
    return len(brute_hilbert_basis(cone)) == dim


def _shape(curve):
    return {v.id: (v.genus, tuple(sorted(curve.legs_at(v.id)))) for v in curve.vertices}


def _edge_multiset(curve, rename):
    return Counter(tuple(sorted((rename[e.ends[0]], rename[e.ends[1]]))) for e in curve.edges)


def brute_isomorphic(a, b):
    """Try every vertex bijection that respects genus and leg labels."""
    if len(a.vertices) != len(b.vertices) or len(a.edges) != len(b.edges):
        return False
    sa, sb = _shape(a), _shape(b)
    ids_a = [v.id for v in a.vertices]
    target = Counter(tuple(sorted(e.ends)) for e in b.edges)
    for perm in permutations([v.id for v in b.vertices]):
        rename = dict(zip(ids_a, perm))
        if all(sa[x] == sb[rename[x]] for x in ids_a) and _edge_multiset(a, rename) == target:
            return True
    return False


def _brute_key(n_vertices, genera, edges, legs):
    """Lexicographically least encoding over all vertex relabelings."""
    best = None
    for perm in permutations(range(n_vertices)):
        g = tuple(genera[perm.index(i)] for i in range(n_vertices))
        e = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
        l = tuple(perm[v] for v in legs)
        key = (g, e, l)
        if best is None or key < best:
            best = key
    return best


def _connected(n_vertices, edges):
    adj = {i: set() for i in range(n_vertices)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == n_vertices


def brute_catalog_counts(n, max_edges):
    """Count stable genus-one n-marked graphs per edge count by listing
    every multigraph on 1..max_edges+1 vertices and deduplicating."""
    counts = {}
    for n_edges in range(max_edges + 1):
        seen = set()
        for n_vertices in (n_edges, n_edges + 1):
            if n_vertices < 1:
                continue
            pairs = [(a, b) for a in range(n_vertices) for b in range(a, n_vertices)]
            for edges in combinations_with_replacement(pairs, n_edges):
                if not _connected(n_vertices, edges):
                    continue
                h1 = n_edges - n_vertices + 1
                genus_options = [tuple(0 for _ in range(n_vertices))] if h1 == 1 else []
                if h1 == 0:
                    genus_options = [tuple(1 if i == j else 0 for i in range(n_vertices)) for j in range(n_vertices)]
                for genera in genus_options:
                    for legs in product(range(n_vertices), repeat=n):
                        val = [0] * n_vertices
                        for a, b in edges:
                            val[a] += 1
                            val[b] += 1
                        for v in legs:
                            val[v] += 1
                        if all(val[i] >= (1 if genera[i] else 3) for i in range(n_vertices)):
                            seen.add(_brute_key(n_vertices, genera, edges, legs))
        if seen:
            counts[n_edges] = len(seen)
    return counts


def stellar_vz_cells(curve, order, contracted=None):
    """Iterated stellar subdivision of the orthant, tracked as ray sets.

    For each signature in order and each matching subgraph with at least
    two leaving edges, every simplicial cell that contains all the unit
    rays of those edges is replaced by the cones obtained by swapping one
    of them for their sum.
    """
    from radalign.subgraphs import crossing_edges, kj_signature, precontractible_subgraphs, resolve_contracted

    gens = list(curve.generators)
    n = len(gens)
    unit = {g: tuple(1 if x == g else 0 for x in gens) for g in gens}
    top = resolve_contracted(curve, contracted)
    cells = [frozenset(unit.values())]
    subs = [h for h in precontractible_subgraphs(curve) if h and h.vertices <= top]
    for sig in order:
        for h in subs:
            if kj_signature(curve, h) != sig:
                continue
            leaving = crossing_edges(curve, h.vertices)
            if len(leaving) < 2:
                continue
            face = {unit[curve.edge(e).length.terms[0][0]] for e in leaving}
            centre = tuple(sum(r[i] for r in face) for i in range(n))
            nxt = []
            for cell in cells:
                if face <= cell:
                    nxt.extend((cell - {t}) | {centre} for t in face)
                else:
                    nxt.append(cell)
            cells = nxt
    return [sorted(c) for c in cells]


def sorted_radii_blocks(curve, point):
    """Group non-circuit vertices by exact radius at a point, from first principles:
    breadth-first path sums from the circuit."""
    from radalign.curve import circuit

    circ = circuit(curve).vertices
    dist = {v: Fraction(0) for v in circ}
    frontier = list(circ)
    while frontier:
        v = frontier.pop()
        for e in curve.edges:
            if v in e.ends and not e.is_loop:
                w = e.other(v)
                if w not in dist:
                    dist[w] = dist[v] + e.length.evaluate(point)
                    frontier.append(w)
    vals = {v: d for v, d in dist.items() if v not in circ}
    return tuple(tuple(sorted(v for v in vals if vals[v] == x)) for x in sorted(set(vals.values())))
