"""The two directions of the duality.

Lattice to digraph: vertices are the maximal disjoint filter-ideal pairs
(MDFIPs), written as generator pairs (a, b) with the filter up(a) and the
ideal down(b) disjoint and jointly maximal. There is an arc from (a, b)
to (c, d) iff a is not below d, i.e. iff up(a) meets down(d) emptily
fails. The relation is reflexive precisely because each pair is disjoint.

Digraph to lattice: elements are the maximal partial maps V -> {0, 1}
whose domain avoids mapping an arc source to 1 and its target to 0
(arc-preserving partial two-colourings), ordered by inclusion of their
one-sets. For a reflexive digraph these maps biject with the fixpoints of
a closure operator on one-sets, which is how they are enumerated here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph
from .errors import NotALattice, NotDisjoint
from .lattice import FiniteLattice, join_irreducibles, meet_irreducibles


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mdfips(L):
    """All maximal disjoint filter-ideal generator pairs, sorted.

    Uses the characterisation: (a, b) works iff a is join irreducible,
    b is meet irreducible, a is not below b, b is covered by a|b, and
    a^b is covered by a.
    """
    out = []
    for a in join_irreducibles(L):
        for b in meet_irreducibles(L):
            if L.leq(a, b):
                continue
            if not L.is_cover(b, L.join(a, b)):
                continue
            if not L.is_cover(L.meet(a, b), a):
                continue
            out.append((a, b))
    return sorted(out)


def mdfips_bruteforce(L):
    """Definitional enumeration, quadratic dominance scan per pair.

    Kept as the in-package oracle for the characterisation above: a pair
    (a, b) with a not below b is maximal iff no other pair (a2, b2) with
    a2 <= a and b2 >= b keeps the generators incomparable.
    """
    out = []
    for a in range(L.n):
        for b in range(L.n):
            if L.leq(a, b):
                continue
            maximal = True
            for a2 in _bits(L.down[a]):
                for b2 in _bits(L.up[b]):
                    if (a2, b2) == (a, b):
                        continue
                    if not L.leq(a2, b2):
                        maximal = False
                        break
                if not maximal:
                    break
            if maximal:
                out.append((a, b))
    return sorted(out)


def dual_digraph(L):
    """The reflexive digraph on the MDFIPs of L."""
    verts = mdfips(L)
    rows = []
    for a, _ in verts:
        row = 0
        for j, (_, d) in enumerate(verts):
            if not L.leq(a, d):
                row |= 1 << j
        rows.append(row)
    names = None
    if L.labels:
        names = tuple(L.label_of(a) + L.label_of(b) for a, b in verts)
    return Digraph(rows, mdfips=verts, names=names)


def t_set(L, a, b):
    """Meet irreducibles above b that avoid a."""
    return frozenset(
        m for m in meet_irreducibles(L) if L.leq(b, m) and not L.leq(a, m)
    )


def maximal_extensions(L, a, b):
    """MDFIPs (a2, b2) with a2 <= a and b2 >= b, sorted.

    The pair (a, b) must be disjoint, i.e. a not below b; every disjoint
    pair extends to at least one MDFIP.
    """
    if L.leq(a, b):
        raise NotDisjoint(f"{a} <= {b}, so filter and ideal overlap")
    return [
        (a2, b2)
        for a2, b2 in mdfips(L)
        if L.leq(a2, a) and L.leq(b, b2)
    ]


@dataclass(frozen=True)
class PartialTwoMap:
    """A partial map to {0, 1} given by its preimages of 1 and 0."""

    ones: frozenset
    zeros: frozenset

    def __post_init__(self):
        if self.ones & self.zeros:
            raise ValueError("ones and zeros overlap")

    def defined(self):
        return self.ones | self.zeros


def _mask(vertices):
    out = 0
    for x in vertices:
        out |= 1 << x
    return out


def _closure_maps(rows, cols, v):
    """ones-mask -> zeros-mask helpers for arc-preserving maximal maps.

    For a fixed one-set U the largest legal zero-set is
    Z(U) = {z : no arc from U into z}, and symmetrically
    U(Z) = {u : no arc from u into Z}. Maximal maps are exactly the
    pairs fixed by the round trip, so their one-sets are the closed
    sets of U -> U(Z(U)).
    """

    def zmax(u):
        m = 0
        for z in range(v):
            if cols[z] & u == 0:
                m |= 1 << z
        return m

    def umax(zm):
        m = 0
        for x in range(v):
            if rows[x] & zm == 0:
                m |= 1 << x
        return m

    return zmax, umax


def _closed_one_sets(rows, cols, v):
    # lectic next-closure enumeration of the fixpoints of umax(zmax(.))
    zmax, umax = _closure_maps(rows, cols, v)
    close = lambda u: umax(zmax(u))
    sets = []
    a = close(0)
    while True:
        sets.append(a)
        nxt = None
        for i in range(v - 1, -1, -1):
            if a >> i & 1:
                continue
            below = a & ((1 << i) - 1)
            b = close(below | 1 << i)
            if b & ((1 << i) - 1) & ~below == 0:
                nxt = b
                break
        if nxt is None:
            return sets, zmax
        a = nxt


def mpe_enumerate(G):
    """All maximal arc-preserving partial maps V -> {0, 1}, sorted.

    Sorted by (one-set mask, zero-set mask); distinct maps always differ
    in their one-set, so the order is total.
    """
    ones_sets, zmax = _closed_one_sets(G.rows, G.cols, G.v)
    maps = [
        PartialTwoMap(frozenset(_bits(u)), frozenset(_bits(zmax(u))))
        for u in ones_sets
    ]
    maps.sort(key=lambda f: (_mask(f.ones), _mask(f.zeros)))
    return maps


def mpe_enumerate_scan(G):
    """Same maps via a pruned three-way scan over vertex assignments.

    Definitional cross-check path: assigns 1, 0 or undefined to vertices
    in index order, pruning branches where an already-undefined vertex
    could still take a value no matter what happens later.
    """
    rows, cols, v = G.rows, G.cols, G.v
    full = (1 << v) - 1
    suffix = [0] * (v + 1)
    for i in range(v - 1, -1, -1):
        suffix[i] = suffix[i + 1] | 1 << i
    found = []

    def rec(i, ones, zeros, undef):
        if i == v:
            for w in _bits(undef):
                if rows[w] & zeros == 0 or cols[w] & ones == 0:
                    return
            found.append((ones, zeros))
            return
        b = 1 << i
        fut = suffix[i + 1]
        if rows[i] & zeros == 0:
            rec(i + 1, ones | b, zeros, undef)
        if cols[i] & ones == 0:
            rec(i + 1, ones, zeros | b, undef)
        if rows[i] & (zeros | fut) and cols[i] & (ones | fut):
            rec(i + 1, ones, zeros, undef | b)

    rec(0, 0, 0, 0)
    maps = [
        PartialTwoMap(frozenset(_bits(u)), frozenset(_bits(z)))
        for u, z in found
    ]
    maps.sort(key=lambda f: (_mask(f.ones), _mask(f.zeros)))
    return maps


def mpe_lattice(G):
    """The lattice of maximal arc-preserving maps, ordered by one-sets.

    Elements are indexed by (size of one-set, one-set mask) increasing,
    so index 0 is the all-zeros map and the last index the all-ones map.
    """
    maps = mpe_enumerate(G)
    masks = sorted(
        (_mask(f.ones) for f in maps), key=lambda m: (bin(m).count("1"), m)
    )
    k = len(masks)
    up = []
    for i in range(k):
        row = 0
        for j in range(k):
            if masks[i] & ~masks[j] == 0:
                row |= 1 << j
        up.append(row)
    try:
        return FiniteLattice(up)
    except NotALattice as exc:
        raise NotALattice(
            f"maximal map family is not a lattice under one-set inclusion: {exc}"
        ) from exc


def roundtrip_lattice(L):
    """L is isomorphic to the map lattice of its own dual digraph."""
    from .lattice import lattice_isomorphic

    ok, _ = lattice_isomorphic(L, mpe_lattice(dual_digraph(L)))
    return ok


def roundtrip_digraph(G):
    """G is isomorphic to the dual digraph of its own map lattice."""
    from .digraph import digraph_isomorphic

    ok, _ = digraph_isomorphic(G, dual_digraph(mpe_lattice(G)))
    return ok
