"""Hom and Ext between string modules via graph maps and connections."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .quiver import Quiver
from .strings import StringModule, is_exceptional

QUOTIENT = "quotient"
SUBMODULE = "submodule"


@dataclass(frozen=True)
class Factorization:
    """A splitting ``C = F E D`` with ``E`` occupying lift positions x..y."""

    parent: StringModule
    x: int
    y: int
    kind: str

    @property
    def left_length(self) -> int:
        # letters in F, counting the one glued to E
        return self.x - (self.parent.start + 1)

    @property
    def right_length(self) -> int:
        return self.parent.end - self.y

    def walk(self) -> tuple:
        return _walk(self.parent.quiver, self.x, self.y)


def _walk(Q: Quiver, x: int, y: int) -> tuple:
    """Vertex/letter sequence of positions x..y, hashable."""
    out = [x % Q.n]
    for m in range(x, y):
        out.append((m % Q.n, Q.is_plus(m)))
        out.append((m + 1) % Q.n)
    return tuple(out)


def _inverse_walk(w: tuple) -> tuple:
    out = []
    for item in reversed(w):
        if isinstance(item, tuple):
            out.append((item[0], not item[1]))
        else:
            out.append(item)
    return tuple(out)


def factorizations(M: StringModule, kind: str) -> list[Factorization]:
    """All quotient (or submodule) factorizations of ``M``."""
    if kind not in (QUOTIENT, SUBMODULE):
        raise ValueError(f"kind must be {QUOTIENT!r} or {SUBMODULE!r}")
    Q = M.quiver
    lo, hi = M.start + 1, M.end
    # a quotient E has its boundary letters pointing out of E, a submodule
    # has them pointing in
    q = kind == QUOTIENT
    out = []
    for x in range(lo, hi + 1):
        if x != lo and not (Q.is_plus(x - 1) ^ q):
            continue
        for y in range(x, hi + 1):
            if y != hi and Q.is_plus(y) ^ q:
                continue
            out.append(Factorization(M, x, y, kind))
    return out


@dataclass(frozen=True)
class GraphMap:
    source: Factorization  # quotient factorization of M
    target: Factorization  # submodule factorization of N
    inverse: bool = False

    @property
    def two_sided(self) -> bool:
        a, b = self.source, self.target
        return ((a.right_length > 0 or b.right_length > 0)
                and (a.left_length > 0 or b.left_length > 0))


def graph_maps(M: StringModule, N: StringModule) -> list[GraphMap]:
    if M.quiver != N.quiver:
        raise ValueError("modules live over different quivers")
    by_walk = defaultdict(list)
    for g in factorizations(N, SUBMODULE):
        by_walk[g.walk()].append(g)
    out = []
    for f in factorizations(M, QUOTIENT):
        w = f.walk()
        for g in by_walk.get(w, ()):
            out.append(GraphMap(f, g, False))
        wi = _inverse_walk(w)
        if wi != w:
            for g in by_walk.get(wi, ()):
                out.append(GraphMap(f, g, True))
    return out


def dim_hom(M: StringModule, N: StringModule) -> int:
    return len(graph_maps(M, N))


@dataclass(frozen=True)
class Connection:
    arrow: int
    shape: str  # "C1-a-C2" or "C2-a^-1-C1"


def connections(M: StringModule, N: StringModule) -> list[Connection]:
    """Arrows through which ``M`` is connectable to ``N``."""
    Q = M.quiver
    n = Q.n
    out: list[Connection] = []
    seen = set()
    # C1 alpha C2: arrow from the end of M into the start of N
    if Q.is_plus(M.end) and (N.start - M.end) % n == 0:
        a = M.end % n
        seen.add(a)
        out.append(Connection(a, "C1-a-C2"))
    # C2 alpha^-1 C1: arrow from the start of M into the end of N
    if not Q.is_plus(N.end) and (M.start - N.end) % n == 0:
        a = N.end % n
        if a not in seen:
            out.append(Connection(a, "C2-a^-1-C1"))
    return out


def dim_ext(M: StringModule, N: StringModule) -> int:
    """dim Ext^1(M, N)."""
    two_sided = sum(1 for g in graph_maps(N, M) if g.two_sided)
    return len(connections(M, N)) + two_sided


def is_exceptional_pair(U: StringModule, V: StringModule) -> bool:
    if not (is_exceptional(U) and is_exceptional(V)):
        return False
    return dim_hom(V, U) == 0 and dim_ext(V, U) == 0


def is_exceptional_sequence(mods: Sequence[StringModule]) -> bool:
    for a in range(len(mods)):
        for b in range(a + 1, len(mods)):
            if not is_exceptional_pair(mods[a], mods[b]):
                return False
    return True


def euler_form(Q: Quiver, d1, d2) -> int:
    d1 = np.asarray(d1, dtype=np.int64)
    d2 = np.asarray(d2, dtype=np.int64)
    if d1.shape != (Q.n,) or d2.shape != (Q.n,):
        raise ValueError(f"dimension vectors must have length {Q.n}")
    val = int(d1 @ d2)
    for a in Q.arrows():
        val -= int(d1[a.source] * d2[a.target])
    return val
