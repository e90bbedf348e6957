"""Closure systems on a finite ground set and the convex geometry bridge.

A closure system is a family of subsets of {0..k-1} closed under
intersection and containing the ground set. The two extra conditions of
interest: the empty set is closed, and the anti-exchange law holds. Meet
distributive lattices correspond to exactly such systems, with the closed
sets of the system ordered by inclusion on one side and the sets of join
irreducibles below each element on the other.
"""

from __future__ import annotations

from functools import cached_property

from .digraph import CheckResult
from .errors import NotMeetDistributive
from .lattice import FiniteLattice, join_irreducibles
from .properties import is_meet_distributive


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(xs):
    out = 0
    for x in xs:
        out |= 1 << x
    return out


class ClosureSystem:
    """Intersection-closed set family containing its ground set."""

    def __init__(self, ground, closed):
        self.ground = int(ground)
        if self.ground < 0:
            raise ValueError("ground size must be nonnegative")
        full = (1 << self.ground) - 1
        masks = sorted(set(int(m) for m in closed), key=lambda m: (bin(m).count("1"), m))
        for m in masks:
            if m & ~full:
                raise ValueError(f"closed set {sorted(_bits(m))} leaves the ground set")
        if full not in masks:
            raise ValueError("the ground set itself must be closed")
        for i, a in enumerate(masks):
            for b in masks[i + 1 :]:
                if a & b not in masks:
                    raise ValueError(
                        f"intersection of {sorted(_bits(a))} and {sorted(_bits(b))}"
                        " is not closed"
                    )
        self.closed = tuple(masks)

    @classmethod
    def from_sets(cls, ground, sets):
        return cls(ground, [_mask(s) for s in sets])

    @cached_property
    def _closed_set(self):
        return frozenset(self.closed)

    def close_mask(self, ymask):
        out = (1 << self.ground) - 1
        for m in self.closed:
            if ymask & ~m == 0:
                out &= m
        return out

    def is_closed_mask(self, m):
        return m in self._closed_set

    def __eq__(self, other):
        return (
            isinstance(other, ClosureSystem)
            and self.ground == other.ground
            and self.closed == other.closed
        )

    def __hash__(self):
        return hash((self.ground, self.closed))

    def __repr__(self):
        return f"ClosureSystem(ground={self.ground}, closed={len(self.closed)} sets)"


def closure_of(C, ys):
    """Smallest closed set containing ys, as a frozenset."""
    m = _mask(ys)
    if m & ~((1 << C.ground) - 1):
        raise ValueError("closure argument leaves the ground set")
    return frozenset(_bits(C.close_mask(m)))


def is_zero_closure(C):
    """True iff the empty set is closed."""
    return 0 in C._closed_set


def satisfies_aep(C):
    """Anti-exchange: distinct x, y outside a closed A cannot both enter
    the closure of A extended by the other one.

    Witness on failure: (sorted A, x, y) with x in close(A + y) and
    y in close(A + x).
    """
    for a in C.closed:
        outside = ~a & ((1 << C.ground) - 1)
        for x in _bits(outside):
            cx = C.close_mask(a | 1 << x)
            for y in _bits(outside):
                if y == x:
                    continue
                cy = C.close_mask(a | 1 << y)
                if cy >> x & 1 and cx >> y & 1:
                    return CheckResult(False, (tuple(_bits(a)), x, y))
    return CheckResult(True)


def cld_lattice(C):
    """The closed sets ordered by inclusion, as a lattice.

    Elements are indexed by (set size, mask) increasing; labels show the
    underlying sets.
    """
    masks = C.closed
    k = len(masks)
    up = []
    for i in range(k):
        row = 0
        for j in range(k):
            if masks[i] & ~masks[j] == 0:
                row |= 1 << j
        up.append(row)
    labels = tuple("{" + ",".join(map(str, _bits(m))) + "}" for m in masks)
    return FiniteLattice(up, labels)


def lattice_to_convex_geometry(L):
    """Closed sets are the join irreducibles below each element.

    Only defined for meet distributive lattices; anything else raises
    NotMeetDistributive naming an element whose lower interval fails.
    """
    rep = is_meet_distributive(L)
    if not rep:
        raise NotMeetDistributive(
            f"element {rep.witness[0]} has a non-distributive lower interval"
        )
    ji = join_irreducibles(L)
    pos = {j: i for i, j in enumerate(ji)}
    closed = set()
    for x in range(L.n):
        closed.add(_mask(pos[j] for j in ji if L.leq(j, x)))
    return ClosureSystem(len(ji), closed)


def closure_to_json(C):
    return {
        "ground": C.ground,
        "closed": [sorted(_bits(m)) for m in C.closed],
    }


def closure_from_json(obj):
    if not isinstance(obj, dict) or "ground" not in obj or "closed" not in obj:
        raise ValueError('closure JSON needs keys "ground" and "closed"')
    return ClosureSystem.from_sets(obj["ground"], obj["closed"])
