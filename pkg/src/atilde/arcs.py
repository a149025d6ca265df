"""Arcs on the annulus and strands on the universal cover.

Every geometric question about two arcs is answered on the cover.  A string
module lifts to an integer interval ``[s, e]``; its strand runs from ``s`` to
``e`` passing below the plus positions and above the minus positions.  Two
arcs cross on the annulus iff some translate of one strand must cross the
other, and a shared endpoint of two strands gives a local clockwise relation
read off from the germs of the strands at that point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import floor
from typing import Optional, Sequence

from .homext import connections, dim_hom, is_exceptional_pair
from .quiver import Boundary, Quiver, Sign
from .strings import StringClass, StringModule, from_triple, is_exceptional


class ArcKind(str, Enum):
    BRIDGING_FROM_OUTER = "bridging-from-outer"
    BRIDGING_FROM_INNER = "bridging-from-inner"
    EXTERIOR_OUTER = "exterior-outer"
    EXTERIOR_INNER = "exterior-inner"

    @property
    def is_bridging(self) -> bool:
        return self in (ArcKind.BRIDGING_FROM_OUTER, ArcKind.BRIDGING_FROM_INNER)


_KIND_OF_CLASS = {
    StringClass.PREPROJECTIVE: ArcKind.BRIDGING_FROM_OUTER,
    StringClass.PREINJECTIVE: ArcKind.BRIDGING_FROM_INNER,
    StringClass.LEFT_REGULAR: ArcKind.EXTERIOR_OUTER,
    StringClass.RIGHT_REGULAR: ArcKind.EXTERIOR_INNER,
}


@dataclass(frozen=True)
class Arc:
    quiver: Quiver
    i: int
    j: int
    winding: int

    @property
    def kind(self) -> ArcKind:
        bi, bj = self.quiver.boundary(self.i), self.quiver.boundary(self.j)
        if bi is Boundary.OUTER:
            return ArcKind.BRIDGING_FROM_OUTER if bj is Boundary.INNER else ArcKind.EXTERIOR_OUTER
        return ArcKind.BRIDGING_FROM_INNER if bj is Boundary.OUTER else ArcKind.EXTERIOR_INNER

    @property
    def is_loop(self) -> bool:
        return self.i == self.j

    def __repr__(self):
        return f"a({self.i},{self.j})[{self.winding}]"


def arc_of(M: StringModule) -> Arc:
    n = M.n
    # a loop (i,i;l) is stored with k = l*n and drawn with winding l-1
    lam = (M.length - 1) // n
    if M.string_class is StringClass.PREINJECTIVE:
        lam = -lam
    return Arc(M.quiver, M.i, M.j, lam)


def module_of(a: Arc) -> StringModule:
    lam = a.winding
    if a.kind is ArcKind.BRIDGING_FROM_INNER:
        if lam > 0:
            raise ValueError(f"{a}: arcs bridging from the inner boundary have winding <= 0")
        lam = -lam
    elif lam < 0:
        raise ValueError(f"{a}: {a.kind.value} arcs have winding >= 0")
    if a.i == a.j:
        return from_triple(a.quiver, a.i, a.j, lam + 1)
    return from_triple(a.quiver, a.i, a.j, lam)


@dataclass(frozen=True)
class Strand:
    quiver: Quiver
    left: int
    right: int

    def translate(self, z: int) -> "Strand":
        d = z * self.quiver.n
        return Strand(self.quiver, self.left + d, self.right + d)


def strand_of(M: StringModule) -> Strand:
    s, e = M.lift
    if M.string_class in (StringClass.PREINJECTIVE, StringClass.RIGHT_REGULAR):
        shift = e - e % M.n
        s, e = s - shift, e - shift
    return Strand(M.quiver, s, e)


class PairRelation(str, Enum):
    CROSS = "cross"
    CW = "cw"  # first clockwise of second
    CCW = "ccw"
    DISJOINT = "disjoint"
    TWO_CYCLE = "two-cycle"

    def mirror(self) -> "PairRelation":
        if self is PairRelation.CW:
            return PairRelation.CCW
        if self is PairRelation.CCW:
            return PairRelation.CW
        return self


# --- strand geometry ------------------------------------------------------


def _forced_orders(Q: Quiver, a1, b1, a2, b2) -> set[bool]:
    """Forced values of "strand 2 is above strand 1" over the overlap."""
    out = set()
    for p in (a1, b1):
        if a2 < p < b2:
            out.add(Q.sign(p) is Sign.MINUS)
    for p in (a2, b2):
        if a1 < p < b1:
            out.add(Q.sign(p) is Sign.PLUS)
    return out


def strands_cross(X: Strand, Y: Strand) -> bool:
    return len(_forced_orders(X.quiver, X.left, X.right, Y.left, Y.right)) == 2


def _clockwise_at(Q: Quiver, p: int, A: tuple[int, int], B: tuple[int, int]) -> bool:
    """Is the germ of strand A at its endpoint p clockwise from that of B?

    Germs hang below the line at plus points and above it at minus points.
    Clockwise means smaller polar angle around p.
    """
    a_right = A[0] == p
    b_right = B[0] == p
    if a_right != b_right:
        if Q.sign(p) is Sign.PLUS:
            return not a_right
        return a_right
    # same direction: the shorter strand ends inside the longer one, which
    # is above it iff that end carries a minus sign
    if a_right:
        a_short = A[1] < B[1]
        q = A[1] if a_short else B[1]
    else:
        a_short = A[0] > B[0]
        q = A[0] if a_short else B[0]
    longer_above = Q.sign(q) is Sign.MINUS
    a_above = longer_above != a_short
    # rightward germs: angle grows with height; leftward: it shrinks
    return not a_above if a_right else a_above


def local_relations(X: Strand, Y: Strand) -> tuple[bool, list[bool]]:
    """(cross, [X clockwise from Y at each shared endpoint]) for one pair of lifts."""
    Q = X.quiver
    A, B = (X.left, X.right), (Y.left, Y.right)
    if A == B:
        return False, []
    if len(_forced_orders(Q, *A, *B)) == 2:
        return True, []
    rel = [_clockwise_at(Q, p, A, B) for p in set(A) & set(B)]
    return False, rel


def translate_range(X: Strand, Y: Strand) -> range:
    """Translates z for which ``Y + z*n`` meets ``X`` (touching included)."""
    n = X.quiver.n
    lo = -floor((Y.right - X.left) / n)
    hi = floor((X.right - Y.left) / n)
    return range(lo, hi + 1)


def _relation_of_strands(X: Strand, Y: Strand, same: bool) -> PairRelation:
    cw = ccw = False
    for z in translate_range(X, Y):
        if same and z == 0:
            continue
        crossed, rel = local_relations(X, Y.translate(z))
        if crossed:
            return PairRelation.CROSS
        for r in rel:
            if r:
                cw = True
            else:
                ccw = True
    if cw and ccw:
        return PairRelation.TWO_CYCLE
    if cw:
        return PairRelation.CW
    if ccw:
        return PairRelation.CCW
    return PairRelation.DISJOINT


@lru_cache(maxsize=None)
def _pair_relation_cached(U: StringModule, V: StringModule) -> PairRelation:
    return _relation_of_strands(strand_of(U), strand_of(V), False)


def pair_relation(U: StringModule, V: StringModule) -> PairRelation:
    if U.quiver != V.quiver:
        raise ValueError("modules live over different quivers")
    if not (is_exceptional(U) and is_exceptional(V)):
        raise ValueError("pair_relation needs exceptional modules")
    if U == V:
        raise ValueError("pair_relation needs two distinct modules")
    return _pair_relation_cached(U, V)


def self_relation(M: StringModule) -> PairRelation:
    """Relation of an arc with itself: cross means self-intersection."""
    X = strand_of(M)
    return _relation_of_strands(X, X, True)


def relation_algebraic(U: StringModule, V: StringModule) -> PairRelation:
    if U == V:
        raise ValueError("relation_algebraic needs two distinct modules")
    if not (is_exceptional(U) and is_exceptional(V)):
        raise ValueError("relation_algebraic needs exceptional modules")
    uv = is_exceptional_pair(U, V)
    vu = is_exceptional_pair(V, U)
    if uv and vu:
        return PairRelation.DISJOINT
    if uv:
        return PairRelation.CW
    if vu:
        return PairRelation.CCW
    if (connections(U, V) and connections(V, U)
            and dim_hom(U, V) == 0 and dim_hom(V, U) == 0):
        return PairRelation.TWO_CYCLE
    return PairRelation.CROSS


# --- diagrams ---------------------------------------------------------------

CLASS_ORDER = {
    StringClass.PREINJECTIVE: 0,
    StringClass.RIGHT_REGULAR: 1,
    StringClass.LEFT_REGULAR: 2,
    StringClass.PREPROJECTIVE: 3,
}


def module_key(M: StringModule) -> tuple:
    a = arc_of(M)
    return (CLASS_ORDER[M.string_class], a.i, a.j, a.winding)


@dataclass(frozen=True)
class ArcDiagram:
    """Arcs on the annulus, stored as their modules in canonical order."""

    quiver: Quiver
    modules: tuple

    def __post_init__(self):
        mods = tuple(sorted(self.modules, key=module_key))
        for M in mods:
            if M.quiver != self.quiver:
                raise ValueError(f"{M} lives over a different quiver")
        object.__setattr__(self, "modules", mods)

    @classmethod
    def from_arcs(cls, Q: Quiver, arcs: Sequence[Arc]) -> "ArcDiagram":
        return cls(Q, tuple(module_of(a) for a in arcs))

    @property
    def arcs(self) -> list[Arc]:
        return [arc_of(M) for M in self.modules]

    def __len__(self):
        return len(self.modules)

    def __iter__(self):
        return iter(self.modules)


@dataclass(frozen=True)
class Violation:
    kind: str  # "count", "duplicate", "not-exceptional", "cross", "two-cycle", "cycle"
    modules: tuple
    relation: Optional[PairRelation] = None


def _check_shape(D: ArcDiagram):
    if len(D.modules) != D.quiver.n:
        raise ValueError(f"diagram has {len(D.modules)} arcs, need n={D.quiver.n}")
    if len(set(D.modules)) != len(D.modules):
        raise ValueError("diagram contains a duplicate arc")


def precedence_edges(mods: Sequence[StringModule]) -> dict[int, set[int]]:
    """Edge a -> b when module a sits locally clockwise of module b."""
    out: dict[int, set[int]] = {a: set() for a in range(len(mods))}
    for a in range(len(mods)):
        for b in range(a + 1, len(mods)):
            r = pair_relation(mods[a], mods[b])
            if r is PairRelation.CW:
                out[a].add(b)
            elif r is PairRelation.CCW:
                out[b].add(a)
    return out


def _topological_order(mods, edges) -> Optional[list[int]]:
    indeg = {a: 0 for a in edges}
    for a in edges:
        for b in edges[a]:
            indeg[b] += 1
    order = []
    ready = [a for a in edges if indeg[a] == 0]
    while ready:
        ready.sort(key=lambda a: module_key(mods[a]))
        a = ready.pop(0)
        order.append(a)
        for b in sorted(edges[a]):
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
    return order if len(order) == len(mods) else None


def diagram_violations(D: ArcDiagram) -> list[Violation]:
    """Every reason ``D`` fails to be exceptional (empty when it is)."""
    mods = D.modules
    out = []
    if len(mods) != D.quiver.n:
        out.append(Violation("count", ()))
    seen = set()
    for M in mods:
        if M in seen:
            out.append(Violation("duplicate", (M,)))
        seen.add(M)
        if not is_exceptional(M):
            out.append(Violation("not-exceptional", (M,)))
    good = [M for M in dict.fromkeys(mods) if is_exceptional(M)]
    for a in range(len(good)):
        for b in range(a + 1, len(good)):
            r = pair_relation(good[a], good[b])
            if r in (PairRelation.CROSS, PairRelation.TWO_CYCLE):
                out.append(Violation(r.value, (good[a], good[b]), r))
    if not out and _topological_order(good, precedence_edges(good)) is None:
        out.append(Violation("cycle", tuple(good)))
    return out


def is_exceptional_diagram(D: ArcDiagram) -> bool:
    _check_shape(D)
    return not diagram_violations(D)


def order_collection(D: ArcDiagram) -> Optional[list[StringModule]]:
    _check_shape(D)
    if diagram_violations(D):
        return None
    mods = list(D.modules)
    order = _topological_order(mods, precedence_edges(mods))
    return None if order is None else [mods[a] for a in order]
