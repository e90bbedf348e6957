"""Finite lattices as immutable value objects.

Conventions used throughout the package:

    - Elements are the integers 0..n-1.
    - The order relation is stored as one bitmask per element: bit j of
      ``up[i]`` is set iff i <= j, bit i of ``down[j]`` is set iff i <= j.
    - Construction validates eagerly (partial order axioms, existence of
      all meets and joins). Downstream code relies on total meet and join
      tables and never re-checks.
    - Witness-returning searches scan in lexicographic element order, so
      reported witnesses are reproducible.
"""

from __future__ import annotations

from functools import cached_property

from . import _canon
from .errors import EmptyInterval, NoLowerCovers, NotALattice, NotAPartialOrder


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """A finite lattice on elements 0..n-1.

    ``up`` is the tuple of upward bitmasks described in the module
    docstring. ``labels``, when given, is a tuple of display names, one
    per element; it never affects equality or any computation.
    """

    def __init__(self, up, labels=None):
        self.up = tuple(up)
        self.n = len(self.up)
        if self.n == 0:
            raise NotALattice("a lattice needs at least one element")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != self.n:
                raise ValueError("labels length does not match element count")
        self.labels = labels
        self._validate_order()
        self.down = self._transpose()
        self._meet, self._join = self._build_tables()
        self.bottom = self._unique_full(self.up, "bottom")
        self.top = self._unique_full(self.down, "top")

    # -- construction helpers -------------------------------------------

    def _validate_order(self):
        n, up = self.n, self.up
        full = (1 << n) - 1
        for i in range(n):
            if up[i] & ~full:
                raise NotAPartialOrder(f"element {i} relates outside 0..{n - 1}")
            if not up[i] >> i & 1:
                raise NotAPartialOrder(f"element {i} is not below itself")
        for i in range(n):
            for j in _bits(up[i]):
                if j != i and up[j] >> i & 1:
                    raise NotAPartialOrder(f"elements {i} and {j} form a cycle")
                extra = up[j] & ~up[i]
                if extra:
                    k = next(_bits(extra))
                    raise NotAPartialOrder(
                        f"transitivity fails on {i} <= {j} <= {k}"
                    )

    def _transpose(self):
        down = [0] * self.n
        for i in range(self.n):
            for j in _bits(self.up[i]):
                down[j] |= 1 << i
        return tuple(down)

    def _build_tables(self):
        n = self.n
        up_row = {self.up[i]: i for i in range(n)}
        down_row = {self.down[i]: i for i in range(n)}
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                j = up_row.get(self.up[a] & self.up[b])
                if j is None:
                    raise NotALattice(f"elements {a} and {b} have no join")
                m = down_row.get(self.down[a] & self.down[b])
                if m is None:
                    raise NotALattice(f"elements {a} and {b} have no meet")
                join[a][b] = join[b][a] = j
                meet[a][b] = meet[b][a] = m
        return tuple(map(tuple, meet)), tuple(map(tuple, join))

    def _unique_full(self, rows, what):
        full = (1 << self.n) - 1
        found = [i for i in range(self.n) if rows[i] == full]
        if len(found) != 1:
            raise NotALattice(f"{what} element is not unique: {found}")
        return found[0]

    # -- order and operations -------------------------------------------

    def leq(self, a, b):
        return bool(self.up[a] >> b & 1)

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def incomparable(self, a, b):
        return not self.leq(a, b) and not self.leq(b, a)

    def meet(self, a, b):
        return self._meet[a][b]

    def join(self, a, b):
        return self._join[a][b]

    def up_mask(self, a):
        return self.up[a]

    def down_mask(self, a):
        return self.down[a]

    def is_cover(self, a, b):
        """True iff b covers a, i.e. a < b with nothing strictly between."""
        return a != b and (self.up[a] & self.down[b]) == (1 << a | 1 << b)

    @cached_property
    def covers(self):
        out = []
        for a in range(self.n):
            for b in _bits(self.up[a] & ~(1 << a)):
                if (self.up[a] & self.down[b]) == (1 << a | 1 << b):
                    out.append((a, b))
        return tuple(out)

    @cached_property
    def _cover_lists(self):
        lower = [[] for _ in range(self.n)]
        upper = [[] for _ in range(self.n)]
        for a, b in self.covers:
            lower[b].append(a)
            upper[a].append(b)
        return tuple(map(tuple, lower)), tuple(map(tuple, upper))

    def lower_covers(self, a):
        return self._cover_lists[0][a]

    def upper_covers(self, a):
        return self._cover_lists[1][a]

    @cached_property
    def heights(self):
        # length of a longest chain from the bottom up to each element
        order = sorted(range(self.n), key=lambda i: bin(self.down[i]).count("1"))
        h = [0] * self.n
        for x in order:
            for c in self.lower_covers(x):
                h[x] = max(h[x], h[c] + 1)
        return tuple(h)

    def label_of(self, a):
        return self.labels[a] if self.labels else str(a)

    # -- value semantics ------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FiniteLattice) and self.up == other.up

    def __hash__(self):
        return hash(self.up)

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, covers={list(self.covers)})"


def from_covers(n, covers, labels=None):
    """Build a lattice from its cover pairs (a, b) meaning b covers a.

    The reflexive transitive closure of the cover relation must be a
    lattice order. Cycles raise NotAPartialOrder, missing meets or joins
    raise NotALattice; both errors name offending elements.
    """
    if n < 1:
        raise NotALattice("a lattice needs at least one element")
    succ = [0] * n
    pred_count = [0] * n
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise NotAPartialOrder(f"cover ({a}, {b}) is out of range")
        if a == b:
            raise NotAPartialOrder(f"elements {a} and {b} form a cycle")
        if not succ[a] >> b & 1:
            succ[a] |= 1 << b
            pred_count[b] += 1
    # Kahn topological pass; leftovers witness a cycle
    ready = [i for i in range(n) if pred_count[i] == 0]
    topo = []
    while ready:
        x = ready.pop()
        topo.append(x)
        for y in _bits(succ[x]):
            pred_count[y] -= 1
            if pred_count[y] == 0:
                ready.append(y)
    if len(topo) < n:
        stuck = [i for i in range(n) if pred_count[i] > 0]
        for a, b in covers:
            if a in stuck and b in stuck:
                raise NotAPartialOrder(f"elements {a} and {b} form a cycle")
        raise NotAPartialOrder(f"elements {stuck} form a cycle")
    up = [1 << i for i in range(n)]
    for x in reversed(topo):
        for y in _bits(succ[x]):
            up[x] |= up[y]
    return FiniteLattice(up, labels)


def join_irreducibles(L):
    """Elements with exactly one lower cover, as a sorted tuple."""
    return tuple(a for a in range(L.n) if len(L.lower_covers(a)) == 1)


def meet_irreducibles(L):
    """Elements with exactly one upper cover, as a sorted tuple."""
    return tuple(a for a in range(L.n) if len(L.upper_covers(a)) == 1)


def mu(L, a):
    """Meet of all lower covers of a. Undefined at the bottom element."""
    if a == L.bottom:
        raise NoLowerCovers(f"element {a} is the bottom and has no lower covers")
    out = None
    for c in L.lower_covers(a):
        out = c if out is None else L.meet(out, c)
    return out


def interval(L, a, b):
    """The sublattice [a, b] as a lattice of its own.

    Elements are reindexed in increasing order of their original index and
    labels follow along. Raises EmptyInterval unless a <= b.
    """
    if not L.leq(a, b):
        raise EmptyInterval(f"interval [{a}, {b}] is empty because {a} <= {b} fails")
    mask = L.up[a] & L.down[b]
    elems = list(_bits(mask))
    pos = {e: i for i, e in enumerate(elems)}
    up = []
    for e in elems:
        row = 0
        for f in _bits(L.up[e] & mask):
            row |= 1 << pos[f]
        up.append(row)
    labels = tuple(L.label_of(e) for e in elems) if L.labels else None
    return FiniteLattice(up, labels)


def order_dual(L):
    """The same elements with the order reversed."""
    return FiniteLattice(L.down, L.labels)


def _invariants(L):
    return tuple(
        (L.heights[i], len(L.lower_covers(i)), len(L.upper_covers(i)))
        for i in range(L.n)
    )


def lattice_isomorphic(L1, L2):
    """Order isomorphism test.

    Returns (ok, mapping); mapping sends elements of L1 to elements of L2
    when ok is True, else it is None.
    """
    if L1.n != L2.n:
        return False, None
    m = _canon.isomorphism(L1.up, _invariants(L1), L2.up, _invariants(L2))
    return (m is not None), m


def canonical_key(L):
    """Hashable key shared exactly by isomorphic lattices."""
    return _canon.canonical_form(L.up, _invariants(L))[0]


def canonicalize(L):
    """The canonical representative of the isomorphism class of L."""
    _, perm = _canon.canonical_form(L.up, _invariants(L))
    return relabel(L, perm)


def relabel(L, perm):
    """Relabel so that new element p is the old element perm[p]."""
    pos = [0] * L.n
    for p, v in enumerate(perm):
        pos[v] = p
    up = []
    for p in range(L.n):
        row = 0
        for j in _bits(L.up[perm[p]]):
            row |= 1 << pos[j]
        up.append(row)
    labels = tuple(L.label_of(perm[p]) for p in range(L.n)) if L.labels else None
    return FiniteLattice(up, labels)


def find_n5_sublattices(L):
    """All pentagon sublattices, as tuples (z, a, b, c, o).

    Here z = a^b = a^c, o = a|b = a|c, b < c, and a is incomparable to
    both b and c. Tuples come out lexicographically sorted.
    """
    out = []
    for a in range(L.n):
        others = [x for x in range(L.n) if L.incomparable(a, x)]
        for b in others:
            for c in others:
                if not L.lt(b, c):
                    continue
                if L.meet(a, b) != L.meet(a, c):
                    continue
                if L.join(a, b) != L.join(a, c):
                    continue
                out.append((L.meet(a, b), a, b, c, L.join(a, b)))
    return sorted(out)


def lattice_to_json(L):
    """Plain-dict form: {"n": ..., "covers": [[a, b], ...], "labels": ...}."""
    obj = {"n": L.n, "covers": [list(c) for c in L.covers]}
    if L.labels:
        obj["labels"] = {str(i): L.labels[i] for i in range(L.n)}
    return obj


def lattice_from_json(obj):
    if not isinstance(obj, dict) or "n" not in obj or "covers" not in obj:
        raise ValueError('lattice JSON needs keys "n" and "covers"')
    n = obj["n"]
    covers = [tuple(c) for c in obj["covers"]]
    labels = None
    if "labels" in obj and obj["labels"] is not None:
        raw = {int(k): str(v) for k, v in obj["labels"].items()}
        labels = tuple(raw.get(i, str(i)) for i in range(n))
    return from_covers(n, covers, labels)


def lattice_to_dot(L):
    """Cover diagram in DOT, drawn bottom-up."""
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for i in range(L.n):
        lines.append(f'  n{i} [label="{L.label_of(i)}"];')
    for a, b in L.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
