"""Finite digraphs with vertex set 0..v-1, kept as out-neighbour bitmasks.

The interesting digraphs here are reflexive. Axiom checkers scan in
lexicographic vertex order and report the first witness they meet, so
failures are reproducible. ``out_set``/``in_set`` give the neighbourhood
sets that the separation and interpolation axioms quantify over.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import _canon
from .errors import NotReflexive


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single axiom check; witness explains a failure."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class TirsReport:
    """Separation (s), reduction (r) and interpolation (ti) verdicts."""

    s: bool
    r: bool
    ti: bool
    witnesses: dict = field(compare=False)

    @property
    def ok(self):
        return self.s and self.r and self.ti

    def __bool__(self):
        return self.ok


class Digraph:
    """Immutable digraph; ``rows[x]`` has bit y set iff there is an arc x -> y.

    ``mdfips`` and ``names`` are optional per-vertex annotations carried
    along by the duality constructions; they never affect equality.
    """

    def __init__(self, rows, mdfips=None, names=None):
        self.rows = tuple(rows)
        self.v = len(self.rows)
        full = (1 << self.v) - 1
        for x, r in enumerate(self.rows):
            if r & ~full:
                raise ValueError(f"vertex {x} has arcs outside 0..{self.v - 1}")
        self.mdfips = tuple(tuple(p) for p in mdfips) if mdfips else None
        self.names = tuple(names) if names else None

    @classmethod
    def from_arcs(cls, v, arcs, mdfips=None, names=None):
        rows = [0] * v
        for x, y in arcs:
            if not (0 <= x < v and 0 <= y < v):
                raise ValueError(f"arc ({x}, {y}) is out of range")
            rows[x] |= 1 << y
        return cls(rows, mdfips, names)

    @cached_property
    def cols(self):
        cols = [0] * self.v
        for x in range(self.v):
            for y in _bits(self.rows[x]):
                cols[y] |= 1 << x
        return tuple(cols)

    def has_arc(self, x, y):
        return bool(self.rows[x] >> y & 1)

    def out_mask(self, x):
        return self.rows[x]

    def in_mask(self, x):
        return self.cols[x]

    @property
    def is_reflexive(self):
        return all(self.rows[x] >> x & 1 for x in range(self.v))

    @cached_property
    def arcs(self):
        return tuple((x, y) for x in range(self.v) for y in _bits(self.rows[x]))

    def reverse(self):
        return Digraph(self.cols, self.mdfips, self.names)

    def name_of(self, x):
        return self.names[x] if self.names else str(x)

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        nonloop = [(x, y) for x, y in self.arcs if x != y]
        return f"Digraph(v={self.v}, arcs={nonloop})"


def out_set(G, x):
    return frozenset(_bits(G.rows[x]))


def in_set(G, x):
    return frozenset(_bits(G.cols[x]))


def _require_reflexive(G):
    for x in range(G.v):
        if not G.rows[x] >> x & 1:
            raise NotReflexive(f"vertex {x} has no loop")


def check_tirs(G):
    """Check the three axioms of the dual digraph class.

    Separation: distinct vertices differ in out-set or in-set.
    Reduction: a strict out-set inclusion x -> y, or a strict in-set
    inclusion y -> x, forbids the arc (x, y).
    Interpolation: every arc (x, y) admits z with out(z) a subset of
    out(x) and in(z) a subset of in(y).
    """
    _require_reflexive(G)
    rows, cols, v = G.rows, G.cols, G.v
    s_w = r_w = ti_w = None
    for x in range(v):
        if s_w:
            break
        for y in range(x + 1, v):
            if rows[x] == rows[y] and cols[x] == cols[y]:
                s_w = (x, y)
                break
    for x in range(v):
        if r_w:
            break
        for y in range(v):
            if x == y or not rows[x] >> y & 1:
                continue
            if rows[x] != rows[y] and rows[x] & ~rows[y] == 0:
                r_w = (x, y)
                break
            if cols[y] != cols[x] and cols[y] & ~cols[x] == 0:
                r_w = (x, y)
                break
    for x in range(v):
        if ti_w:
            break
        for y in _bits(rows[x]):
            if not any(
                rows[z] & ~rows[x] == 0 and cols[z] & ~cols[y] == 0
                for z in range(v)
            ):
                ti_w = (x, y)
                break
    return TirsReport(
        s=s_w is None,
        r=r_w is None,
        ti=ti_w is None,
        witnesses={"s": s_w, "r": r_w, "ti": ti_w},
    )


def check_lti(G):
    """Every arc (u, v) admits w with out(w) = out(u) and in(w) inside in(v)."""
    rows, cols = G.rows, G.cols
    for u in range(G.v):
        for v_ in _bits(rows[u]):
            if not any(
                rows[w] == rows[u] and cols[w] & ~cols[v_] == 0
                for w in range(G.v)
            ):
                return CheckResult(False, (u, v_))
    return CheckResult(True)


def check_uti(G):
    """Every arc (u, v) admits w with out(w) inside out(u) and in(w) = in(v)."""
    rows, cols = G.rows, G.cols
    for u in range(G.v):
        for v_ in _bits(rows[u]):
            if not any(
                rows[w] & ~rows[u] == 0 and cols[w] == cols[v_]
                for w in range(G.v)
            ):
                return CheckResult(False, (u, v_))
    return CheckResult(True)


def check_djsd(G):
    """Distinct vertices have distinct in-sets."""
    for x in range(G.v):
        for y in range(x + 1, G.v):
            if G.cols[x] == G.cols[y]:
                return CheckResult(False, (x, y))
    return CheckResult(True)


def check_dmsd(G):
    """Distinct vertices have distinct out-sets."""
    for x in range(G.v):
        for y in range(x + 1, G.v):
            if G.rows[x] == G.rows[y]:
                return CheckResult(False, (x, y))
    return CheckResult(True)


def check_dsd(G):
    both = check_djsd(G)
    if not both:
        return both
    return check_dmsd(G)


def is_transitive(G):
    rows = G.rows
    for x in range(G.v):
        for y in _bits(rows[x]):
            extra = rows[y] & ~rows[x]
            if extra:
                return CheckResult(False, (x, y, next(_bits(extra))))
    return CheckResult(True)


def is_poset(G):
    """Reflexive, transitive and antisymmetric."""
    for x in range(G.v):
        if not G.rows[x] >> x & 1:
            return CheckResult(False, (x,))
    for x in range(G.v):
        for y in range(x + 1, G.v):
            if G.rows[x] >> y & 1 and G.rows[y] >> x & 1:
                return CheckResult(False, (x, y))
    return is_transitive(G)


@dataclass(frozen=True)
class ForbiddenPattern:
    """A three-vertex pattern given by its non-loop arcs on x, y, z = 0, 1, 2."""

    id: str
    arcs: tuple


G0 = ForbiddenPattern("G0", ((0, 1), (1, 2)))
G1 = ForbiddenPattern("G1", ((0, 1),))
G2 = ForbiddenPattern("G2", ())

PATTERNS = {"G0": G0, "G1": G1, "G2": G2}


def _classify_triple(G, x, y, z):
    # non-loop arcs inside the triple, as ordered pairs
    arcs = [
        (p, q)
        for p in (x, y, z)
        for q in (x, y, z)
        if p != q and G.has_arc(p, q)
    ]
    if not arcs:
        return "G2"
    if len(arcs) == 1:
        return "G1"
    if len(arcs) == 2:
        (a1, b1), (a2, b2) = arcs
        if b1 == a2 and a1 != b2:
            return "G0"
        if b2 == a1 and a2 != b1:
            return "G0"
    return None


def find_induced(G, pattern):
    """All vertex triples inducing the pattern, sorted, as (x, y, z) with x < y < z."""
    want = pattern.id if isinstance(pattern, ForbiddenPattern) else str(pattern)
    out = []
    for x in range(G.v):
        for y in range(x + 1, G.v):
            for z in range(y + 1, G.v):
                if _classify_triple(G, x, y, z) == want:
                    out.append((x, y, z))
    return out


def check_fis(G):
    """No induced two-arc path triple and no induced single-arc triple."""
    for x in range(G.v):
        for y in range(x + 1, G.v):
            for z in range(y + 1, G.v):
                kind = _classify_triple(G, x, y, z)
                if kind in ("G0", "G1"):
                    return CheckResult(False, (kind, (x, y, z)))
    return CheckResult(True)


def check_wt0(G):
    """Arcs x->y->z with no back-arcs force an arc between x and z."""
    rows = G.rows
    for x in range(G.v):
        for y in range(G.v):
            if not rows[x] >> y & 1 or rows[y] >> x & 1:
                continue
            for z in range(G.v):
                if not rows[y] >> z & 1 or rows[z] >> y & 1:
                    continue
                if not rows[x] >> z & 1 and not rows[z] >> x & 1:
                    return CheckResult(False, (x, y, z))
    return CheckResult(True)


def check_wt1(G):
    """An arc x->y with y otherwise isolated from z forces an arc between x and z."""
    rows = G.rows
    for x in range(G.v):
        for y in range(G.v):
            if not rows[x] >> y & 1 or rows[y] >> x & 1 or x == y:
                continue
            for z in range(G.v):
                if rows[y] >> z & 1 or rows[z] >> y & 1:
                    continue
                if not rows[x] >> z & 1 and not rows[z] >> x & 1:
                    return CheckResult(False, (x, y, z))
    return CheckResult(True)


def _digraph_invariants(G):
    return tuple(
        (bin(G.rows[i]).count("1"), bin(G.cols[i]).count("1"))
        for i in range(G.v)
    )


def digraph_isomorphic(G1, G2):
    """Arc-preserving bijection test; returns (ok, mapping or None)."""
    if G1.v != G2.v:
        return False, None
    m = _canon.isomorphism(
        G1.rows, _digraph_invariants(G1), G2.rows, _digraph_invariants(G2)
    )
    return (m is not None), m


def digraph_canonical_key(G):
    return _canon.canonical_form(G.rows, _digraph_invariants(G))[0]


def digraph_canonicalize(G):
    _, perm = _canon.canonical_form(G.rows, _digraph_invariants(G))
    pos = [0] * G.v
    for p, orig in enumerate(perm):
        pos[orig] = p
    rows = [0] * G.v
    for p in range(G.v):
        for j in _bits(G.rows[perm[p]]):
            rows[p] |= 1 << pos[j]
    mdfips = tuple(G.mdfips[perm[p]] for p in range(G.v)) if G.mdfips else None
    names = tuple(G.names[perm[p]] for p in range(G.v)) if G.names else None
    return Digraph(rows, mdfips, names)


def digraph_to_json(G):
    """Plain-dict form; loops are always written out."""
    obj = {"v": G.v, "arcs": [list(a) for a in G.arcs]}
    if G.mdfips:
        obj["mdfips"] = [list(p) for p in G.mdfips]
    return obj


def digraph_from_json(obj):
    """Parse a digraph; missing loops are added.

    Returns (digraph, added_loops) where the flag records whether any loop
    had to be supplied.
    """
    if not isinstance(obj, dict) or "v" not in obj or "arcs" not in obj:
        raise ValueError('digraph JSON needs keys "v" and "arcs"')
    v = obj["v"]
    rows = [0] * v
    for x, y in obj["arcs"]:
        if not (0 <= x < v and 0 <= y < v):
            raise ValueError(f"arc ({x}, {y}) is out of range")
        rows[x] |= 1 << y
    added = any(not rows[x] >> x & 1 for x in range(v))
    for x in range(v):
        rows[x] |= 1 << x
    mdfips = None
    names = None
    if obj.get("mdfips"):
        mdfips = tuple(tuple(p) for p in obj["mdfips"])
        if len(mdfips) != v:
            raise ValueError("mdfips annotation length does not match v")
        names = tuple(f"{a}{b}" if a < 10 and b < 10 else f"{a},{b}" for a, b in mdfips)
    return Digraph(rows, mdfips, names), added


def digraph_to_dot(G):
    """DOT rendering: loops hidden, opposite arc pairs drawn once with dir=both."""
    lines = ["digraph {"]
    for x in range(G.v):
        lines.append(f'  n{x} [label="{G.name_of(x)}"];')
    for x in range(G.v):
        for y in _bits(G.rows[x]):
            if y == x:
                continue
            if G.has_arc(y, x):
                if x < y:
                    lines.append(f"  n{x} -> n{y} [dir=both];")
            else:
                lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"
