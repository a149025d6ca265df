"""Quivers of type A-tilde and their orientation data.

Vertices are ``0..n-1``.  Arrow ``alpha_v`` joins ``v`` and ``v+1 (mod n)`` and
points ``v -> v+1`` when ``epsilon[v]`` is plus, ``v+1 -> v`` otherwise.  The
same sign sequence, extended periodically to all integers, decorates the lift
positions of the universal cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator, Sequence


class Sign(str, Enum):
    PLUS = "+"
    MINUS = "-"

    def flip(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    @classmethod
    def parse(cls, value) -> "Sign":
        if isinstance(value, Sign):
            return value
        if value in ("+", "plus", 1):
            return cls.PLUS
        if value in ("-", "minus", -1):
            return cls.MINUS
        raise ValueError(f"not a sign: {value!r}")


class Boundary(str, Enum):
    INNER = "inner"
    OUTER = "outer"

    def other(self) -> "Boundary":
        return Boundary.OUTER if self is Boundary.INNER else Boundary.INNER


@dataclass(frozen=True)
class ArrowInfo:
    index: int
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """An acyclic orientation of the n-cycle.

    >>> Q = Quiver(3, "-++")
    >>> [(a.source, a.target) for a in Q.arrows()]
    [(1, 0), (1, 2), (2, 0)]
    """

    n: int
    epsilon: tuple

    def __post_init__(self):
        eps = tuple(Sign.parse(s) for s in self.epsilon)
        object.__setattr__(self, "epsilon", eps)
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"need at least 2 vertices, got n={self.n!r}")
        if len(eps) != self.n:
            raise ValueError(
                f"orientation has {len(eps)} entries but n={self.n}")
        if len(set(eps)) < 2:
            raise ValueError(
                "cyclic orientation: epsilon needs both signs "
                "(the path algebra would be infinite dimensional)")

    # inner / outer marked point counts
    @property
    def p(self) -> int:
        return sum(1 for s in self.epsilon if s is Sign.MINUS)

    @property
    def q(self) -> int:
        return self.n - self.p

    def sign(self, k: int) -> Sign:
        """Sign of lift position ``k`` (periodic extension of epsilon)."""
        return self.epsilon[k % self.n]

    def is_plus(self, k: int) -> bool:
        return self.epsilon[k % self.n] is Sign.PLUS

    def boundary(self, v: int) -> Boundary:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return Boundary.OUTER if self.epsilon[v] is Sign.PLUS else Boundary.INNER

    def arrow(self, v: int) -> ArrowInfo:
        v %= self.n
        w = (v + 1) % self.n
        if self.epsilon[v] is Sign.PLUS:
            return ArrowInfo(v, v, w)
        return ArrowInfo(v, w, v)

    def arrows(self) -> list[ArrowInfo]:
        return [self.arrow(v) for v in range(self.n)]

    def opposite(self) -> "Quiver":
        return Quiver(self.n, tuple(s.flip() for s in self.epsilon))

    def marked_points(self, boundary: Boundary) -> list[int]:
        return [v for v in range(self.n) if self.boundary(v) is boundary]

    def next_with_sign(self, k: int, sign: Sign) -> int:
        """Smallest lift position ``m > k`` carrying ``sign``."""
        m = k + 1
        while self.epsilon[m % self.n] is not sign:
            m += 1
        return m

    def prev_with_sign(self, k: int, sign: Sign) -> int:
        """Largest lift position ``m < k`` carrying ``sign``."""
        m = k - 1
        while self.epsilon[m % self.n] is not sign:
            m -= 1
        return m

    @property
    def label(self) -> str:
        return "".join(s.value for s in self.epsilon)

    def to_json(self) -> dict:
        return {"n": self.n, "epsilon": [s.value for s in self.epsilon]}

    @classmethod
    def from_json(cls, data) -> "Quiver":
        return cls(data["n"], tuple(data["epsilon"]))

    def __repr__(self):
        return f"Quiver({self.n}, {self.label!r})"


def make_quiver(n: int, eps: Sequence) -> Quiver:
    return Quiver(n, tuple(eps))


def lifted_sign(Q: Quiver, k: int) -> Sign:
    return Q.sign(k)


def boundary_of_vertex(Q: Quiver, v: int) -> Boundary:
    return Q.boundary(v)


def opposite(Q: Quiver) -> Quiver:
    return Q.opposite()


def proper_orientations(n: int) -> Iterator[Quiver]:
    """All acyclic orientations of the n-cycle, in lexicographic order."""
    for eps in product("-+", repeat=n):
        if len(set(eps)) == 2:
            yield Quiver(n, eps)
