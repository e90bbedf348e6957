"""Exhaustive enumeration of small lattices and small dual-class digraphs,
one representative per isomorphism class.

Lattices are generated levelwise: a meet semilattice with a naturally
labelled order (the labelling is a linear extension) grows by one new
maximal element placed above a down-set, subject to the new element
having a meet with everything. Removing a maximal element from any such
semilattice lands back in the previous level, so the sweep is complete;
canonical forms collapse labellings. Lattices are the semilattices with
a single maximal element.

Digraphs are found the blunt way, by scanning every reflexive digraph on
v vertices and keeping those that pass the axiom check. That keeps this
direction independent of the lattice-side generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import _canon
from .digraph import Digraph, check_tirs
from .errors import BoundTooLarge
from .lattice import FiniteLattice, canonical_key, canonicalize

MAX_LATTICE_N = 8
MAX_TIRS_V = 5


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class LatticeCatalog:
    max_n: int
    entries: tuple

    def by_size(self, n):
        return tuple(L for L in self.entries if L.n == n)

    def counts(self):
        out = {}
        for L in self.entries:
            out[L.n] = out.get(L.n, 0) + 1
        return out


def _transpose(rows, n):
    down = [0] * n
    for i in range(n):
        for j in _bits(rows[i]):
            down[j] |= 1 << i
    return down


def _order_seeds(rows, n):
    down = _transpose(rows, n)
    return tuple(
        (bin(rows[i]).count("1"), bin(down[i]).count("1")) for i in range(n)
    )


_canonical_form = lru_cache(maxsize=None)(_canon.canonical_form)


def _canonical_rows(rows, n):
    key, perm = _canonical_form(tuple(rows), _order_seeds(rows, n))
    pos = [0] * n
    for p, orig in enumerate(perm):
        pos[orig] = p
    out = [0] * n
    for p in range(n):
        for j in _bits(rows[perm[p]]):
            out[p] |= 1 << pos[j]
    return key, tuple(out)


@lru_cache(maxsize=None)
def _semilattice_level(k):
    """Canonical representatives of meet semilattices on k elements."""
    if k == 1:
        return ((1,),)
    reps = {}
    for rows in _semilattice_level(k - 1):
        n = k - 1
        down = _transpose(rows, n)
        # candidate down-sets for the new maximal element; every
        # nonempty down-set contains the least element 0
        for d in range(1, 1 << n, 2):
            ok = True
            for y in _bits(d):
                if down[y] & ~d:
                    ok = False
                    break
            if not ok:
                continue
            # the new element must meet every old one: the down-set
            # restricted below x needs a single maximal element
            for x in range(n):
                lows = d & down[x]
                top_count = 0
                for m in _bits(lows):
                    if rows[m] & lows == 1 << m:
                        top_count += 1
                        if top_count > 1:
                            break
                if top_count != 1:
                    ok = False
                    break
            if not ok:
                continue
            new_rows = [rows[i] | (1 << n if d >> i & 1 else 0) for i in range(n)]
            new_rows.append(1 << n)
            # dedup by canonical key but keep the natural labelling, since
            # the next extension round needs element 0 at the bottom and
            # the order compatible with the integer order
            key, _ = _canonical_rows(tuple(new_rows), k)
            reps.setdefault(key, tuple(new_rows))
    return tuple(sorted(reps.values()))


@lru_cache(maxsize=None)
def _lattice_level(n):
    out = []
    for rows in _semilattice_level(n):
        maximal = [i for i in range(n) if rows[i] == 1 << i]
        if len(maximal) != 1:
            continue
        L = canonicalize(FiniteLattice(rows))
        out.append((canonical_key(L), L))
    out.sort(key=lambda kv: kv[0])
    return tuple(L for _, L in out)


def enumerate_lattices(max_n):
    """Catalog of all lattices with up to max_n elements, one per class."""
    if not 1 <= max_n <= MAX_LATTICE_N:
        raise BoundTooLarge(
            f"lattice enumeration supports 1 <= max_n <= {MAX_LATTICE_N}, got {max_n}"
        )
    entries = []
    for n in range(1, max_n + 1):
        entries.extend(_lattice_level(n))
    return LatticeCatalog(max_n, tuple(entries))


def _reflexive_row_options(v):
    opts = []
    for i in range(v):
        rest = ((1 << v) - 1) ^ (1 << i)
        sub = rest
        rows_i = []
        while True:
            rows_i.append(sub | 1 << i)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        opts.append(rows_i)
    return opts


def _tirs_ok(rows, v):
    # inlined version of check_tirs with early exits, no object overhead
    cols = [0] * v
    for i in range(v):
        r = rows[i]
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= 1 << i
            r ^= low
    for x in range(v):
        rx = rows[x]
        for y in range(v):
            if x == y or not rx >> y & 1:
                continue
            ry = rows[y]
            if rx != ry and rx & ~ry == 0:
                return False
            if cols[y] != cols[x] and cols[y] & ~cols[x] == 0:
                return False
    for x in range(v):
        for y in range(x + 1, v):
            if rows[x] == rows[y] and cols[x] == cols[y]:
                return False
    for x in range(v):
        rx = rows[x]
        r = rx
        while r:
            low = r & -r
            y = low.bit_length() - 1
            r ^= low
            cy = cols[y]
            for z in range(v):
                if rows[z] & ~rx == 0 and cols[z] & ~cy == 0:
                    break
            else:
                return False
    return True


@lru_cache(maxsize=None)
def _tirs_level(v):
    """Canonical representatives of axiom-passing digraphs on v vertices."""
    reps = {}
    for rows in product(*_reflexive_row_options(v)):
        if not _tirs_ok(rows, v):
            continue
        key, canon = _canonical_rows(rows, v)
        reps.setdefault(key, canon)
    return tuple(sorted(reps.values()))


def enumerate_tirs_digraphs(max_v):
    """All axiom-passing reflexive digraphs with 1..max_v vertices, one
    per isomorphism class, each revalidated on the way out."""
    if not 1 <= max_v <= MAX_TIRS_V:
        raise BoundTooLarge(
            f"digraph enumeration supports 1 <= max_v <= {MAX_TIRS_V}, got {max_v}"
        )
    out = []
    for v in range(1, max_v + 1):
        for rows in _tirs_level(v):
            G = Digraph(rows)
            if not check_tirs(G).ok:
                raise AssertionError("enumeration produced a non-axiom digraph")
            out.append(G)
    return tuple(out)
