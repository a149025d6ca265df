"""String modules over an A-tilde quiver.

A string module is stored as an interval of the universal cover: a start
position ``s`` in ``0..n-1`` and a length ``k >= 1``, so that the support is
the run of lift positions ``s+1..s+k``.  The letter joining positions ``m`` and
``m+1`` is ``alpha_{m mod n}``, read as a direct arrow exactly when position
``m`` carries a plus sign.  Hooks, cohooks, the Auslander-Reiten translate and
the Nakayama functor all reduce to moving one endpoint of the interval to the
nearest position of a given sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

import numpy as np

from .quiver import Quiver, Sign

PLUS, MINUS = Sign.PLUS, Sign.MINUS


class StringClass(str, Enum):
    PREPROJECTIVE = "preprojective"
    PREINJECTIVE = "preinjective"
    LEFT_REGULAR = "left-regular"
    RIGHT_REGULAR = "right-regular"

    @property
    def is_regular(self) -> bool:
        return self in (StringClass.LEFT_REGULAR, StringClass.RIGHT_REGULAR)


_CLASS_BY_ENDS = {
    (PLUS, MINUS): StringClass.PREPROJECTIVE,
    (MINUS, PLUS): StringClass.PREINJECTIVE,
    (PLUS, PLUS): StringClass.LEFT_REGULAR,
    (MINUS, MINUS): StringClass.RIGHT_REGULAR,
}


@dataclass(frozen=True)
class StringModule:
    quiver: Quiver
    start: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"string length must be positive, got {self.length}")
        object.__setattr__(self, "start", self.start % self.quiver.n)

    @classmethod
    def from_lift(cls, Q: Quiver, s: int, e: int) -> "StringModule":
        if e <= s:
            raise ValueError(f"empty lift interval [{s}, {e}]")
        return cls(Q, s, e - s)

    @property
    def end(self) -> int:
        return self.start + self.length

    @property
    def lift_start(self) -> int:
        return self.start

    @property
    def lift(self) -> tuple[int, int]:
        return (self.start, self.end)

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def i(self) -> int:
        return self.start

    @property
    def j(self) -> int:
        return self.end % self.n

    @property
    def l(self) -> int:
        n = self.n
        r = (self.j - self.i) % n
        return (self.length - r) // n

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.l)

    @property
    def string_class(self) -> StringClass:
        Q = self.quiver
        return _CLASS_BY_ENDS[(Q.sign(self.start), Q.sign(self.end))]

    def positions(self) -> range:
        return range(self.start + 1, self.end + 1)

    def letters(self) -> list[tuple[int, bool]]:
        """(arrow index, is_direct) for each letter, left to right."""
        Q = self.quiver
        return [(m % self.n, Q.is_plus(m)) for m in range(self.start + 1, self.end)]

    def shifted(self, s: int, e: int) -> "StringModule":
        return StringModule.from_lift(self.quiver, s, e)

    def __repr__(self):
        return f"StringModule({self.i},{self.j};{self.l} over {self.quiver.label})"


def from_triple(Q: Quiver, i: int, j: int, l: int) -> StringModule:
    n = Q.n
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"vertex out of range: ({i},{j}) for n={n}")
    if l < 0:
        raise ValueError(f"negative winding l={l}")
    if i == j:
        if l == 0:
            raise ValueError(f"({i},{i};0) is not a string: a loop needs l >= 1")
        k = l * n
    else:
        k = (j - i) % n + l * n
    return StringModule(Q, i, k)


def to_triple(M: StringModule) -> tuple[int, int, int]:
    return M.triple


def classify(M: StringModule) -> StringClass:
    return M.string_class


def dimension_vector(M: StringModule) -> np.ndarray:
    d = np.zeros(M.n, dtype=np.int64)
    for m in M.positions():
        d[m % M.n] += 1
    return d


def quasi_length(M: StringModule) -> int:
    """Position in its tube; only defined for regular modules."""
    c = M.string_class
    if not c.is_regular:
        raise ValueError(f"{M} is {c.value}, quasi-length needs a regular module")
    sign = PLUS if c is StringClass.LEFT_REGULAR else MINUS
    return sum(1 for m in M.positions() if M.quiver.sign(m) is sign)


def tube_rank(M: StringModule) -> int:
    c = M.string_class
    if c is StringClass.LEFT_REGULAR:
        return M.quiver.q
    if c is StringClass.RIGHT_REGULAR:
        return M.quiver.p
    raise ValueError(f"{M} is not regular")


def is_exceptional(M: StringModule) -> bool:
    if not M.string_class.is_regular:
        return True
    return M.l == 0


# --- hooks and cohooks -------------------------------------------------------
#
# Every operation moves one endpoint.  ``None`` means undefined (the sign at
# the endpoint is wrong, or nothing of the required sign is left inside).

HOOK_OPS = ("add-hook", "add-cohook", "delete-hook", "delete-cohook")
SIDES = ("start", "end")


def _first_inside(M: StringModule, sign: Sign, s: int, e: int) -> Optional[int]:
    for m in range(s + 1, e):
        if M.quiver.sign(m) is sign:
            return m
    return None


def _last_inside(M: StringModule, sign: Sign, s: int, e: int) -> Optional[int]:
    for m in range(e - 1, s, -1):
        if M.quiver.sign(m) is sign:
            return m
    return None


def _move_end(M, op, s, e) -> Optional[int]:
    Q = M.quiver
    if op == "add-hook":
        return Q.next_with_sign(e, MINUS) if Q.sign(e) is MINUS else None
    if op == "add-cohook":
        return Q.next_with_sign(e, PLUS) if Q.sign(e) is PLUS else None
    if op == "delete-hook":
        return _last_inside(M, MINUS, s, e)
    if op == "delete-cohook":
        return _last_inside(M, PLUS, s, e)
    raise ValueError(f"unknown hook operation {op!r}")


def _move_start(M, op, s, e) -> Optional[int]:
    Q = M.quiver
    if op == "add-hook":
        return Q.prev_with_sign(s, PLUS) if Q.sign(s) is PLUS else None
    if op == "add-cohook":
        return Q.prev_with_sign(s, MINUS) if Q.sign(s) is MINUS else None
    if op == "delete-hook":
        return _first_inside(M, PLUS, s, e)
    if op == "delete-cohook":
        return _first_inside(M, MINUS, s, e)
    raise ValueError(f"unknown hook operation {op!r}")


def hook_op(M: StringModule, op: str, side: str) -> Optional[StringModule]:
    s, e = M.lift
    if side == "end":
        e2 = _move_end(M, op, s, e)
        return None if e2 is None else M.shifted(s, e2)
    if side == "start":
        s2 = _move_start(M, op, s, e)
        return None if s2 is None else M.shifted(s2, e)
    raise ValueError(f"side must be 'start' or 'end', got {side!r}")


# --- projectives, injectives, translates ----------------------------------


def _interior_signs(M: StringModule) -> list[Sign]:
    return [M.quiver.sign(m) for m in range(M.start + 1, M.end)]


def _is_monotone(signs, first: Sign) -> bool:
    # signs of the form first* other*
    seen_other = False
    for x in signs:
        if x is not first:
            seen_other = True
        elif seen_other:
            return False
    return True


def is_projective(M: StringModule) -> bool:
    Q = M.quiver
    if Q.sign(M.start) is not PLUS or Q.sign(M.end) is not MINUS:
        return False
    return _is_monotone(_interior_signs(M), MINUS)


def is_injective(M: StringModule) -> bool:
    Q = M.quiver
    if Q.sign(M.start) is not MINUS or Q.sign(M.end) is not PLUS:
        return False
    return _is_monotone(_interior_signs(M), PLUS)


def _projective_lift(Q: Quiver, x: int) -> tuple[int, int]:
    e = x if Q.sign(x) is MINUS else Q.next_with_sign(x, MINUS)
    return Q.prev_with_sign(x, PLUS), e


def _injective_lift(Q: Quiver, x: int) -> tuple[int, int]:
    e = x if Q.sign(x) is PLUS else Q.next_with_sign(x, PLUS)
    return Q.prev_with_sign(x, MINUS), e


def projective_at(Q: Quiver, v: int) -> StringModule:
    return StringModule.from_lift(Q, *_projective_lift(Q, v))


def injective_at(Q: Quiver, v: int) -> StringModule:
    return StringModule.from_lift(Q, *_injective_lift(Q, v))


def top_position(M: StringModule) -> int:
    """Lift position of the top of a projective module."""
    if not is_projective(M):
        raise ValueError(f"{M} is not projective")
    for m in M.positions():
        if M.quiver.is_plus(m) or m == M.end:
            return m
    raise AssertionError("unreachable")


def socle_position(M: StringModule) -> int:
    """Lift position of the socle of an injective module."""
    if not is_injective(M):
        raise ValueError(f"{M} is not injective")
    for m in M.positions():
        if not M.quiver.is_plus(m) or m == M.end:
            return m
    raise AssertionError("unreachable")


def nakayama(M: StringModule, direction: str = "forward") -> StringModule:
    """P(v) -> I(v) for ``forward``, I(v) -> P(v) for ``backward``."""
    Q = M.quiver
    if direction == "forward":
        return StringModule.from_lift(Q, *_injective_lift(Q, top_position(M)))
    if direction == "backward":
        return StringModule.from_lift(Q, *_projective_lift(Q, socle_position(M)))
    raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")


def tau(M: StringModule) -> Optional[StringModule]:
    """AR translate; ``None`` on projectives."""
    if is_projective(M):
        return None
    Q = M.quiver
    s, e = M.lift
    # additions first, then deletions inside the extended interval
    add_end = Q.sign(e) is PLUS
    add_start = Q.sign(s) is MINUS
    if add_end:
        e = Q.next_with_sign(e, PLUS)
    if add_start:
        s = Q.prev_with_sign(s, MINUS)
    if not add_end:
        e = _last_inside(M, MINUS, s, e)
    if not add_start:
        s = _first_inside(M, PLUS, s, e)
    return M.shifted(s, e)


def tau_inv(M: StringModule) -> Optional[StringModule]:
    """Inverse AR translate; ``None`` on injectives."""
    if is_injective(M):
        return None
    Q = M.quiver
    s, e = M.lift
    add_end = Q.sign(e) is MINUS
    add_start = Q.sign(s) is PLUS
    if add_end:
        e = Q.next_with_sign(e, MINUS)
    if add_start:
        s = Q.prev_with_sign(s, PLUS)
    if not add_end:
        e = _last_inside(M, PLUS, s, e)
    if not add_start:
        s = _first_inside(M, MINUS, s, e)
    return M.shifted(s, e)


def dual(M: StringModule) -> StringModule:
    """Vector space dual, a string module over the opposite quiver."""
    return StringModule(M.quiver.opposite(), M.start, M.length)


# --- enumeration ----------------------------------------------------------


def iter_strings(Q: Quiver, max_length: int) -> Iterator[StringModule]:
    for k in range(1, max_length + 1):
        for s in range(Q.n):
            yield StringModule(Q, s, k)


def exceptional_strings(Q: Quiver, max_length: int) -> list[StringModule]:
    return [M for M in iter_strings(Q, max_length) if is_exceptional(M)]
