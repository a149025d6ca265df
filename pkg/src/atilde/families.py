"""Dehn twists, elementary twists and parametrized families.

On the cover a twist only moves lift endpoints.  An elementary twist of a
boundary moves each endpoint on that boundary to the neighbouring marked
point of the same boundary; a full clockwise Dehn twist moves every inner
endpoint by ``+n``.  When the two endpoints of a bridging arc change order
the module changes side (preprojective <-> preinjective), which is where the
Nakayama functor and the shift in the derived category come in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .arcs import (ArcDiagram, PairRelation, _topological_order, arc_of,
                   is_exceptional_diagram, pair_relation, precedence_edges)
from .quiver import Boundary, Quiver, Sign
from .strings import (StringClass, StringModule, is_exceptional, is_projective,
                      iter_strings)

CW, CCW = "cw", "ccw"

_BOUNDARY_SIGN = {Boundary.INNER: Sign.MINUS, Boundary.OUTER: Sign.PLUS}


def _steps(direction: str) -> int:
    if direction == CW:
        return 1
    if direction == CCW:
        return -1
    raise ValueError(f"direction must be 'cw' or 'ccw', got {direction!r}")


def _move(Q: Quiver, x: int, sign: Sign, steps: int) -> int:
    for _ in range(steps):
        x = Q.next_with_sign(x, sign)
    for _ in range(-steps):
        x = Q.prev_with_sign(x, sign)
    return x


def _twist_lift(Q: Quiver, s: int, e: int, sign: Sign, steps: int) -> tuple[int, int]:
    """Move every endpoint carrying ``sign``; returns the re-sorted interval."""
    a = _move(Q, s, sign, steps) if Q.sign(s) is sign else s
    b = _move(Q, e, sign, steps) if Q.sign(e) is sign else e
    return (a, b) if a < b else (b, a)


def elementary_twist(M: StringModule, boundary: Union[Boundary, str],
                     direction: str, times: int = 1) -> StringModule:
    boundary = Boundary(boundary)
    Q = M.quiver
    s, e = _twist_lift(Q, *M.lift, _BOUNDARY_SIGN[boundary], _steps(direction) * times)
    return StringModule.from_lift(Q, s, e)


def twist_module(M: StringModule, t: int) -> StringModule:
    """``t`` clockwise 2pi Dehn twists (negative ``t``: counterclockwise)."""
    Q = M.quiver
    s, e = M.lift
    if Q.sign(s) is Q.sign(e):
        return M
    if Q.sign(s) is Sign.MINUS:
        s += t * Q.n
    else:
        e += t * Q.n
    return StringModule.from_lift(Q, min(s, e), max(s, e))


def dehn_twist(D: ArcDiagram, direction: str = CW) -> ArcDiagram:
    t = _steps(direction)
    return ArcDiagram(D.quiver, tuple(twist_module(M, t) for M in D.modules))


def dehn_twist_by(D: ArcDiagram, t: int) -> ArcDiagram:
    return ArcDiagram(D.quiver, tuple(twist_module(M, t) for M in D.modules))


def twist_tau(M: StringModule) -> StringModule:
    """Outer clockwise elementary twist followed by inner counterclockwise."""
    return elementary_twist(elementary_twist(M, Boundary.OUTER, CW), Boundary.INNER, CCW)


# --- derived bookkeeping --------------------------------------------------


@dataclass(frozen=True)
class TransjectiveObject:
    module: StringModule
    shift: int = 0

    def __post_init__(self):
        c = self.module.string_class
        if c.is_regular:
            raise ValueError(f"{self.module} is regular, not transjective")
        if self.shift not in (0, -1):
            raise ValueError(f"shift must be 0 or -1, got {self.shift}")
        if self.shift == -1 and c is not StringClass.PREINJECTIVE:
            raise ValueError("only preinjective modules carry the shift -1")

    def __repr__(self):
        pre = "S^-1 " if self.shift else ""
        return f"{pre}{self.module!r}"


def _side_change(before: StringModule, after: StringModule) -> int:
    b, a = before.string_class, after.string_class
    if b is StringClass.PREINJECTIVE and a is StringClass.PREPROJECTIVE:
        return 1
    if b is StringClass.PREPROJECTIVE and a is StringClass.PREINJECTIVE:
        return -1
    return 0


def coray_shift(T: TransjectiveObject, z: int) -> TransjectiveObject:
    """Move ``z`` steps along the coray by elementary inner twists."""
    if T.module.string_class is StringClass.PREINJECTIVE and T.shift == 0:
        raise ValueError(f"{T.module} is an unshifted preinjective, not transjective")
    M, shift = T.module, T.shift
    d = CW if z >= 0 else CCW
    for _ in range(abs(z)):
        M2 = elementary_twist(M, Boundary.INNER, d)
        shift += _side_change(M, M2)
        M = M2
    return TransjectiveObject(M, shift)


def tau_collection(C: Iterable, derived: bool = False) -> list:
    """Memberwise tau as outer-cw then inner-ccw twists.

    In derived mode members may be ``TransjectiveObject``s and projectives
    roll over to shifted injectives; otherwise projectives are rejected.
    """
    out = []
    for X in C:
        if isinstance(X, TransjectiveObject):
            if not derived:
                raise ValueError("transjective objects need derived=True")
            M, shift = X.module, X.shift
        else:
            M, shift = X, 0
        if not derived and is_projective(M):
            raise ValueError(f"{M} is projective; tau is not defined in mod")
        M2 = twist_tau(M)
        shift += _side_change(M, M2)
        if derived and not M2.string_class.is_regular:
            out.append(TransjectiveObject(M2, shift))
        else:
            out.append(M2)
    return out


# --- small diagrams and canonical forms -------------------------------------


def level(M: StringModule) -> Optional[int]:
    """Position of a bridging arc in its Dehn-twist orbit; ``None`` if exterior.

    One clockwise twist raises the level by one; the small arcs are the
    levels 0 (preinjective, l = 0) and 1 (preprojective, l = 0).
    """
    c = M.string_class
    if c is StringClass.PREPROJECTIVE:
        return M.l + 1
    if c is StringClass.PREINJECTIVE:
        return -M.l
    return None


def is_small(D: ArcDiagram) -> bool:
    return all(a.winding == 0 for a in D.arcs)


def _canonical(D: ArcDiagram) -> tuple[ArcDiagram, int]:
    levels = [h for h in map(level, D.modules) if h is not None]
    if not levels:
        return D, 0
    lo, hi = min(levels), max(levels)
    if hi - lo > 1:
        raise ValueError("bridging arcs span more than two twist levels")
    # with one common level prefer the preprojective side (level 1)
    z = lo - 1 if lo == hi else lo
    return dehn_twist_by(D, -z), z


def canonical_small(D: ArcDiagram) -> tuple[ArcDiagram, int]:
    """The small diagram of the family of ``D`` and the twist count to reach ``D``."""
    if not is_exceptional_diagram(D):
        raise ValueError("canonical_small needs an exceptional diagram")
    return _canonical(D)


def same_family(C1: ArcDiagram, C2: ArcDiagram) -> Optional[int]:
    k1, z1 = canonical_small(C1)
    k2, z2 = canonical_small(C2)
    return z2 - z1 if k1 == k2 else None


@dataclass(frozen=True)
class Family:
    canonical: ArcDiagram
    z: int = 0

    def member(self, z: Optional[int] = None) -> ArcDiagram:
        return dehn_twist_by(self.canonical, self.z if z is None else z)


# --- enumeration ------------------------------------------------------------

_KIND_RANK = {
    StringClass.PREPROJECTIVE: 0,
    StringClass.PREINJECTIVE: 1,
    StringClass.LEFT_REGULAR: 2,
    StringClass.RIGHT_REGULAR: 3,
}


def _arc_sort_key(M: StringModule):
    a = arc_of(M)
    return (_KIND_RANK[M.string_class], a.i, a.j, abs(a.winding))


def candidate_modules(Q: Quiver, lambda_max: int) -> list[StringModule]:
    """Exceptional modules whose arcs have ``|winding| <= lambda_max``."""
    mods = [M for M in iter_strings(Q, (lambda_max + 1) * Q.n)
            if is_exceptional(M) and abs(arc_of(M).winding) <= lambda_max]
    return sorted(mods, key=_arc_sort_key)


def _search(Q: Quiver, cands: Sequence[StringModule]) -> list[ArcDiagram]:
    n = len(cands)
    ok = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            r = pair_relation(cands[a], cands[b])
            ok[a][b] = ok[b][a] = r not in (PairRelation.CROSS, PairRelation.TWO_CYCLE)
    out = []
    chosen: list[int] = []

    def rec(start, allowed):
        if len(chosen) == Q.n:
            mods = [cands[a] for a in chosen]
            if _topological_order(mods, precedence_edges(mods)) is not None:
                out.append(ArcDiagram(Q, tuple(mods)))
            return
        need = Q.n - len(chosen)
        for a in range(start, n):
            if n - a < need:
                break
            if not allowed[a]:
                continue
            chosen.append(a)
            rec(a + 1, [allowed[b] and ok[a][b] for b in range(n)])
            chosen.pop()

    rec(0, [True] * n)
    return out


def enumerate_small_diagrams(Q: Quiver) -> list[ArcDiagram]:
    return _search(Q, candidate_modules(Q, 0))


def enumerate_collections(Q: Quiver, lambda_max: int) -> list[ArcDiagram]:
    if lambda_max < 0:
        raise ValueError("lambda_max must be non-negative")
    return _search(Q, candidate_modules(Q, lambda_max))


def families(Q: Quiver) -> list[Family]:
    seen = {}
    for D in enumerate_small_diagrams(Q):
        K, _ = _canonical(D)
        seen.setdefault(K, Family(K, 0))
    return list(seen.values())


def count_families(Q: Quiver) -> int:
    return len(families(Q))
