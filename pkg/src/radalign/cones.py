"""Exact rational polyhedral cones inside a coordinate orthant, and fans of them.

A cone lives in the nonnegative orthant of an ordered set of generator
names. It is described by extra inequalities ``a.x >= 0`` on top of the
implicit coordinate nonnegativities, and its primitive extreme rays are
computed lazily. Pointed cones are determined by their rays, so identity
and hashing go through the sorted ray list.

Comparisons follow the "generic point" convention: a linear form is
positive on a cone when it is nonnegative on every ray and nonzero on at
least one, which is the same as being strictly positive on the relative
interior.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Iterable, Sequence

from . import exact
from .errors import IncomparableError, MalformedInputError, PreconditionError
from .linear import Functional, primitive

__all__ = [
    "Cone",
    "Fan",
    "deformation_cone",
    "subdivide",
    "extreme_rays",
    "is_free",
    "fans_equal",
    "refines",
    "interior_sample",
    "is_face",
    "sample_points",
    "fan_violations",
]

Vector = tuple[int, ...]
LinearLike = Functional | Sequence[int]


def _dot(a: Sequence[int], b: Sequence[int | Fraction]) -> Any:
    return sum(x * y for x, y in zip(a, b))


class Cone:
    """A pointed rational cone ``{x >= 0 : a.x >= 0 for a in inequalities}``."""

    def __init__(self, ambient: Sequence[str], inequalities: Iterable[LinearLike] = ()):
        self.ambient: tuple[str, ...] = tuple(ambient)
        if len(set(self.ambient)) != len(self.ambient):
            raise MalformedInputError("ambient generator names must be distinct")
        n = len(self.ambient)
        units = {tuple(1 if j == i else 0 for j in range(n)) for i in range(n)}
        normal: set[Vector] = set()
        for ineq in inequalities:
            vec = self._as_vector(ineq)
            if not any(vec):
                continue
            vec = primitive(vec)
            if vec in units:
                continue
            normal.add(vec)
        self.inequalities: tuple[Vector, ...] = tuple(sorted(normal))

    # -- construction helpers -------------------------------------------
    def _as_vector(self, f: LinearLike) -> Vector:
        if isinstance(f, Functional):
            return f.vector(self.ambient)
        vec = tuple(int(x) for x in f)
        if len(vec) != len(self.ambient):
            raise MalformedInputError("vector length does not match the ambient dimension")
        return vec

    def vector(self, f: LinearLike) -> Vector:
        return self._as_vector(f)

    def functional(self, vec: Sequence[int]) -> Functional:
        return Functional.from_vector(self.ambient, vec)

    def with_inequalities(self, *extra: LinearLike) -> "Cone":
        return Cone(self.ambient, list(self.inequalities) + [self._as_vector(e) for e in extra])

    def with_equalities(self, *extra: LinearLike) -> "Cone":
        vecs = [self._as_vector(e) for e in extra]
        return Cone(self.ambient, list(self.inequalities) + vecs + [tuple(-x for x in v) for v in vecs])

    @classmethod
    def from_rays(cls, ambient: Sequence[str], rays: Iterable[Sequence[int]]) -> "Cone":
        """Cone generated by the given vectors, which must be nonnegative."""
        ambient = tuple(ambient)
        rays = [primitive(tuple(int(x) for x in r)) for r in rays if any(r)]
        if any(min(r) < 0 for r in rays):
            raise PreconditionError("generators must lie in the orthant")
        n = len(ambient)
        if not rays:
            return cls(ambient, [tuple(-1 if j == i else 0 for j in range(n)) for i in range(n)])
        # dual cone: its rays are the facet normals of the cone we want
        dual_rays = _dual_generators(n, rays)
        return cls(ambient, dual_rays)

    # -- ray data ------------------------------------------------------------
    @property
    def all_inequalities(self) -> tuple[Vector, ...]:
        n = len(self.ambient)
        units = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
        return units + self.inequalities

    @cached_property
    def rays(self) -> tuple[Vector, ...]:
        return tuple(exact.extreme_rays(len(self.ambient), self.inequalities))

    @cached_property
    def dim(self) -> int:
        return exact.integer_rank(self.rays)

    @cached_property
    def key(self) -> tuple[tuple[str, ...], tuple[Vector, ...]]:
        return (self.ambient, self.rays)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cone) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        ineqs = ", ".join(f"{self.functional(v)}>=0" for v in self.inequalities)
        return f"Cone({list(self.ambient)}, [{ineqs}])"

    # -- sign tests -----------------------------------------------------------
    def sign(self, f: LinearLike) -> int | None:
        """+1 / -1 if f is strictly positive / negative on the relative
        interior, 0 if it vanishes on the cone, None if it changes sign."""
        vec = self._as_vector(f)
        pos = neg = False
        for r in self.rays:
            v = _dot(vec, r)
            if v > 0:
                pos = True
            elif v < 0:
                neg = True
        if pos and neg:
            return None
        return 1 if pos else (-1 if neg else 0)

    def compare(self, f: LinearLike, g: LinearLike) -> int:
        """Sign of f - g on the relative interior; raises if it varies."""
        fv, gv = self._as_vector(f), self._as_vector(g)
        s = self.sign(tuple(x - y for x, y in zip(fv, gv)))
        if s is None:
            raise IncomparableError(f"{self.functional(fv)} and {self.functional(gv)} are not comparable on {self!r}")
        return s

    def comparable(self, f: LinearLike, g: LinearLike) -> bool:
        fv, gv = self._as_vector(f), self._as_vector(g)
        return self.sign(tuple(x - y for x, y in zip(fv, gv))) is not None

    def is_nonnegative(self, f: LinearLike) -> bool:
        vec = self._as_vector(f)
        return all(_dot(vec, r) >= 0 for r in self.rays)

    # -- points ---------------------------------------------------------------
    def contains(self, point: Sequence[int | Fraction]) -> bool:
        if any(x < 0 for x in point):
            return False
        return all(_dot(a, point) >= 0 for a in self.inequalities)

    def contains_cone(self, other: "Cone") -> bool:
        if other.ambient != self.ambient:
            raise PreconditionError("ambient mismatch")
        return all(self.contains(r) for r in other.rays)

    def implicit_equalities(self) -> tuple[Vector, ...]:
        return tuple(a for a in self.all_inequalities if all(_dot(a, r) == 0 for r in self.rays))

    def equality_basis(self) -> tuple[Vector, ...]:
        """Independent subset of the implicit equalities; together with
        :meth:`facets` it defines the cone."""
        basis: list[Vector] = []
        for a in sorted(set(self.implicit_equalities())):
            if exact.integer_rank(basis + [a]) > len(basis):
                basis.append(a)
        return tuple(basis)

    def in_relative_interior(self, point: Sequence[int | Fraction]) -> bool:
        if not self.contains(point):
            return False
        for a in self.all_inequalities:
            if any(_dot(a, r) for r in self.rays) and _dot(a, point) <= 0:
                return False
        return True

    @cached_property
    def interior_sample(self) -> tuple[Fraction, ...]:
        """Sum of the primitive rays: deterministic, and in the relative interior."""
        n = len(self.ambient)
        total = [0] * n
        for r in self.rays:
            for i, x in enumerate(r):
                total[i] += x
        return tuple(Fraction(x) for x in total)

    def sample_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.ambient, self.interior_sample))

    # -- structure ------------------------------------------------------------
    def facets(self) -> tuple[Vector, ...]:
        """Primitive normals of facet-defining inequalities, sorted.

        For a full-dimensional cone there is exactly one per facet; on lower
        dimensional cones normals are only defined modulo the equalities.
        """
        d = self.dim
        if d == 0:
            return ()
        out: set[Vector] = set()
        for a in self.all_inequalities:
            tight = [r for r in self.rays if _dot(a, r) == 0]
            if len(tight) == len(self.rays):
                continue
            if exact.integer_rank(tight) == d - 1:
                out.add(a)
        return tuple(sorted(out))

    def minimal_face_rays(self, point: Sequence[int | Fraction]) -> tuple[Vector, ...]:
        """Rays of the smallest face containing a point of the cone."""
        zero = [a for a in self.all_inequalities if _dot(a, point) == 0]
        return tuple(r for r in self.rays if all(_dot(a, r) == 0 for a in zero))

    def is_free(self) -> bool:
        rays = self.rays
        if len(rays) != self.dim:
            return False
        return all(f == 1 for f in exact.smith_invariants(rays))

    def restrict_to_face(self, zero_generators: Iterable[str]) -> "Cone":
        """Intersect with the coordinate face where the named generators vanish."""
        names = set(zero_generators)
        n = len(self.ambient)
        extra = [tuple(-1 if self.ambient[j] == g else 0 for j in range(n)) for g in names]
        return self.with_inequalities(*extra)

    def project(self, keep: Sequence[str]) -> "Cone":
        """Image under the coordinate projection onto ``keep``.

        Intended for cones lying in a coordinate face, where projection
        only forgets zero coordinates.
        """
        idx = [self.ambient.index(k) for k in keep]
        return Cone.from_rays(keep, [tuple(r[i] for i in idx) for r in self.rays])


def _dual_generators(n: int, rays: list[Vector]) -> list[Vector]:
    """Facet normals of cone(rays), lying inside the orthant ambient space.

    Computed as extreme rays of the dual cone {a : a.r >= 0}; the dual is not
    contained in the orthant, so we split each coordinate into two
    nonnegative halves and read back the differences.
    """
    # variables (a+, a-) >= 0 with constraints (a+ - a-).r >= 0
    cons = [tuple(r) + tuple(-x for x in r) for r in rays]
    raw = exact.extreme_rays(2 * n, cons)
    out: set[Vector] = set()
    for v in raw:
        a = tuple(v[i] - v[n + i] for i in range(n))
        if any(a):
            out.add(primitive(a))
    # the lifted cone also contains every (e_i, e_i); the differences of
    # its extreme rays still generate the dual cone, which is all we need
    return sorted(out)


# -- public functional API ------------------------------------------------------


def deformation_cone(source: Any) -> Cone:
    """The nonnegative orthant on a curve's length generators (or on an
    explicit list of generator names)."""
    gens = getattr(source, "generators", source)
    return Cone(gens)


def extreme_rays(cone: Cone) -> list[Vector]:
    return list(cone.rays)


def is_free(cone: Cone) -> bool:
    return cone.is_free()


def interior_sample(cone: Cone) -> tuple[Fraction, ...]:
    return cone.interior_sample


def is_face(face: Cone, cone: Cone) -> bool:
    """Whether ``face`` is a face of ``cone``."""
    if not cone.contains_cone(face):
        return False
    return set(cone.minimal_face_rays(face.interior_sample)) == set(face.rays)


@dataclass(frozen=True)
class Fan:
    """Maximal cells of a subdivision of ``parent``, with optional labels."""

    parent: Cone
    cells: tuple[Cone, ...]
    labels: tuple[Any, ...] | None = None
    meta: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    @property
    def ambient(self) -> tuple[str, ...]:
        return self.parent.ambient

    def __len__(self) -> int:
        return len(self.cells)

    def cell_set(self) -> frozenset[Cone]:
        return frozenset(self.cells)

    def label_of(self, cone: Cone) -> Any:
        if self.labels is None:
            return None
        for c, lab in zip(self.cells, self.labels):
            if c == cone:
                return lab
        raise KeyError(cone)

    def locate(self, point: Sequence[int | Fraction]) -> list[int]:
        return [i for i, c in enumerate(self.cells) if c.contains(point)]

    def sorted(self) -> "Fan":
        """Same fan with cells in a canonical order (by ray lists)."""
        order = sorted(range(len(self.cells)), key=lambda i: self.cells[i].rays)
        labels = None if self.labels is None else tuple(self.labels[i] for i in order)
        return Fan(self.parent, tuple(self.cells[i] for i in order), labels, dict(self.meta))


def subdivide(cone: Cone, functionals: Iterable[LinearLike]) -> Fan:
    """Split ``cone`` along the hyperplanes of the given linear forms."""
    walls: list[Vector] = []
    seen: set[Vector] = set()
    for f in functionals:
        vec = cone.vector(f)
        if not any(vec):
            continue
        vec = primitive(vec)
        neg = tuple(-x for x in vec)
        if vec in seen or neg in seen:
            continue
        seen.add(vec)
        walls.append(vec)
    cells = [cone]
    for w in walls:
        nxt: list[Cone] = []
        for c in cells:
            if c.sign(w) is None:
                nxt.append(c.with_inequalities(w))
                nxt.append(c.with_inequalities(tuple(-x for x in w)))
            else:
                nxt.append(c)
        cells = nxt
    return Fan(cone, tuple(cells)).sorted()


def _check_ambient(f1: Fan, f2: Fan) -> None:
    if f1.ambient != f2.ambient:
        raise PreconditionError("fans live over different ambient generator sets")


def fans_equal(f1: Fan, f2: Fan) -> bool:
    _check_ambient(f1, f2)
    return f1.cell_set() == f2.cell_set()


def refines(f1: Fan, f2: Fan) -> bool:
    """Every maximal cell of f1 lies in some maximal cell of f2."""
    _check_ambient(f1, f2)
    return all(any(c2.contains_cone(c1) for c2 in f2.cells) for c1 in f1.cells)


def sample_points(cone: Cone, count: int, seed: int = 0, spread: int = 6) -> list[tuple[Fraction, ...]]:
    """Deterministic pseudo-random rational points of ``cone``.

    Points are random nonnegative integer combinations of the rays divided
    by a random positive denominator, so some land on walls and most do not.
    """
    rng = random.Random(seed)
    n = len(cone.ambient)
    rays = cone.rays
    out = []
    for _ in range(count):
        acc = [0] * n
        for r in rays:
            k = rng.randint(0, spread)
            for i, x in enumerate(r):
                acc[i] += k * x
        den = rng.randint(1, 4)
        out.append(tuple(Fraction(x, den) for x in acc))
    return out


def fan_violations(fan: Fan, samples: int = 1000, seed: int = 0, check_faces: bool = True) -> list[str]:
    """Return human-readable failures of the fan axioms (empty when all hold)."""
    problems: list[str] = []
    parent = fan.parent
    for i, c in enumerate(fan.cells):
        if c.ambient != parent.ambient:
            problems.append(f"cell {i} has a different ambient set")
        elif not parent.contains_cone(c):
            problems.append(f"cell {i} leaves the parent cone")
        if c.dim != parent.dim:
            problems.append(f"cell {i} has dimension {c.dim}, expected {parent.dim}")
    if len(set(fan.cells)) != len(fan.cells):
        problems.append("duplicate cells")
    for p in sample_points(parent, samples, seed):
        hits = fan.locate(p)
        if not hits:
            problems.append(f"point {p} is not covered")
            continue
        interior = [i for i in hits if fan.cells[i].in_relative_interior(p)]
        if len(interior) > 1:
            problems.append(f"point {p} lies in the interiors of cells {interior}")
    if check_faces:
        for i in range(len(fan.cells)):
            for j in range(i + 1, len(fan.cells)):
                a, b = fan.cells[i], fan.cells[j]
                meet = Cone(parent.ambient, a.inequalities + b.inequalities)
                if not (is_face(meet, a) and is_face(meet, b)):
                    problems.append(f"cells {i} and {j} meet outside a common face")
    return problems
