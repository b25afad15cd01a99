"""Integer linear forms on edge-length generators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

__all__ = ["Functional", "primitive"]


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


@dataclass(frozen=True, order=True)
class Functional:
    """A sparse integer combination of named generators.

    Terms are kept sorted by generator name with zero coefficients dropped,
    so structural equality is equality of linear forms.
    """

    terms: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[str, int] | Iterable[tuple[str, int]]) -> "Functional":
        items = mapping.items() if isinstance(mapping, Mapping) else mapping
        acc: dict[str, int] = {}
        for name, coeff in items:
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(f"coefficient of {name!r} must be an int, got {coeff!r}")
            acc[name] = acc.get(name, 0) + coeff
        return cls(tuple(sorted((k, v) for k, v in acc.items() if v)))

    @classmethod
    def gen(cls, name: str) -> "Functional":
        return cls(((name, 1),))

    @classmethod
    def zero(cls) -> "Functional":
        return cls(())

    @classmethod
    def from_vector(cls, ambient: Sequence[str], vec: Sequence[int]) -> "Functional":
        return cls.of(zip(ambient, vec))

    def as_dict(self) -> dict[str, int]:
        return dict(self.terms)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(k for k, _ in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, name: str) -> int:
        for k, v in self.terms:
            if k == name:
                return v
        return 0

    def vector(self, ambient: Sequence[str]) -> tuple[int, ...]:
        d = dict(self.terms)
        missing = set(d) - set(ambient)
        if missing:
            raise ValueError(f"generators {sorted(missing)} are not in the ambient set")
        return tuple(d.get(name, 0) for name in ambient)

    def evaluate(self, point: Mapping[str, int | Fraction]) -> Fraction:
        return sum((Fraction(point[k]) * v for k, v in self.terms), Fraction(0))

    def substitute_zero(self, names: Iterable[str]) -> "Functional":
        """Restrict to the coordinate face where the given generators vanish."""
        drop = set(names)
        return Functional(tuple((k, v) for k, v in self.terms if k not in drop))

    def __add__(self, other: "Functional") -> "Functional":
        return Functional.of(list(self.terms) + list(other.terms))

    def __neg__(self) -> "Functional":
        return Functional(tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other: "Functional") -> "Functional":
        return self + (-other)

    def __mul__(self, k: int) -> "Functional":
        return Functional.of((n, v * k) for n, v in self.terms)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (name, v) in enumerate(self.terms):
            sign = "-" if v < 0 else ("+" if i else "")
            mag = abs(v)
            out.append(f"{sign}{'' if mag == 1 else mag}{name}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Functional({str(self)!r})"
