"""Canonical forms for binary relations given as out-neighbour bitmasks.

Colour refinement seeded with caller-supplied vertex invariants, then a
lex-min adjacency encoding over the permutations that respect the refined
colour classes. Exact, intended for small n only.
"""

from __future__ import annotations

from itertools import permutations, product


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _refine(rows, cols, n, seeds):
    # colours start as ranks of the seed values, then get split by the
    # multiset of neighbour colours until stable
    order = sorted(set(seeds))
    colour = [order.index(s) for s in seeds]
    while True:
        sig = [
            (
                colour[i],
                tuple(sorted(colour[j] for j in _bits(rows[i]))),
                tuple(sorted(colour[j] for j in _bits(cols[i]))),
            )
            for i in range(n)
        ]
        order = sorted(set(sig))
        new = [order.index(s) for s in sig]
        if new == colour:
            return colour
        colour = new


def _encode(rows, n, perm):
    # perm maps position -> original vertex
    pos = [0] * n
    for p, v in enumerate(perm):
        pos[v] = p
    enc = 0
    for p in range(n):
        row = rows[perm[p]]
        out = 0
        for j in _bits(row):
            out |= 1 << pos[j]
        enc = (enc << n) | out
    return enc


def canonical_form(rows, seeds):
    """Return (key, perm) where key identifies the isomorphism class.

    perm maps canonical position to original vertex and witnesses the
    relabelling that produces the key. Isomorphic inputs with comparable
    seed invariants get identical keys.
    """
    rows = tuple(rows)
    n = len(rows)
    if n == 0:
        return (0, 0), ()
    cols = [0] * n
    for i in range(n):
        for j in _bits(rows[i]):
            cols[j] |= 1 << i
    colour = _refine(rows, cols, n, tuple(seeds))
    classes = {}
    for v in range(n):
        classes.setdefault(colour[v], []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    best = None
    best_perm = None
    for picks in product(*(permutations(b) for b in blocks)):
        perm = tuple(v for block in picks for v in block)
        enc = _encode(rows, n, perm)
        if best is None or enc < best:
            best = enc
            best_perm = perm
    return (n, best), best_perm


def isomorphism(rows1, seeds1, rows2, seeds2):
    """Mapping vertex->vertex carrying relation 1 onto relation 2, or None."""
    key1, p1 = canonical_form(rows1, seeds1)
    key2, p2 = canonical_form(rows2, seeds2)
    if key1 != key2:
        return None
    n = len(tuple(rows1))
    out = [0] * n
    for pos in range(n):
        out[p1[pos]] = p2[pos]
    return tuple(out)
