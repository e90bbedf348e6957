"""Slow reference implementations used only by tests.

Everything here is deliberately naive: full permutation scans for
isomorphism, raw upper-triangular relation enumeration for lattice
counting, and a complete 3^v sweep for maximal partial map enumeration.
The package must agree with these on every small case.
"""

from itertools import permutations, product


def bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def relabel_rows(rows, perm):
    """perm maps new index -> old index."""
    n = len(rows)
    pos = [0] * n
    for p, old in enumerate(perm):
        pos[old] = p
    out = []
    for p in range(n):
        row = 0
        for j in bits(rows[perm[p]]):
            row |= 1 << pos[j]
        out.append(row)
    return tuple(out)


def rows_isomorphic_brute(rows1, rows2):
    """Try every bijection; works for any binary relation rows."""
    rows1, rows2 = tuple(rows1), tuple(rows2)
    if len(rows1) != len(rows2):
        return False
    n = len(rows1)
    for perm in permutations(range(n)):
        if relabel_rows(rows1, perm) == rows2:
            return True
    return False


def lattice_isomorphic_brute(L1, L2):
    return rows_isomorphic_brute(L1.up, L2.up)


def digraph_isomorphic_brute(G1, G2):
    return rows_isomorphic_brute(G1.rows, G2.rows)


def labeled_lattices(n):
    """All lattices on 0..n-1 whose order refines the integer order.

    Every lattice has a linear extension, so every isomorphism class
    shows up at least once. Yields up-row tuples.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for sel in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if sel >> k & 1:
                up[i] |= 1 << j
        ok = True
        for i in range(n):
            for j in bits(up[i]):
                if up[j] & ~up[i]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        up_rows = {up[i]: i for i in range(n)}
        down_rows = {down[i]: i for i in range(n)}
        for a in range(n):
            for b in range(a + 1, n):
                if up[a] & up[b] not in up_rows or down[a] & down[b] not in down_rows:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield tuple(up)


def count_lattice_classes(n):
    """Isomorphism class count via pairwise brute-force matching."""
    reps = []

    def invariant(rows):
        down = [0] * n
        for i in range(n):
            for j in bits(rows[i]):
                down[j] |= 1 << i
        return tuple(
            sorted((bin(rows[i]).count("1"), bin(down[i]).count("1")) for i in range(n))
        )

    for rows in labeled_lattices(n):
        inv = invariant(rows)
        if any(
            inv == rinv and rows_isomorphic_brute(rows, rrows)
            for rinv, rrows in reps
        ):
            continue
        reps.append((inv, rows))
    return len(reps)


def reflexive_rows(v):
    """All reflexive digraphs on v vertices, as row tuples."""
    options = []
    for i in range(v):
        rest = ((1 << v) - 1) ^ (1 << i)
        opts = []
        sub = rest
        while True:
            opts.append(sub | 1 << i)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        options.append(opts)
    yield from product(*options)


def naive_mpe(G):
    """Every maximal arc-preserving partial map, by trying all 3^v maps.

    Returns a sorted list of (ones_mask, zeros_mask).
    """
    v = G.v
    rows = G.rows
    out = []
    for assign in product((1, 0, None), repeat=v):
        ones = zeros = 0
        for i, val in enumerate(assign):
            if val == 1:
                ones |= 1 << i
            elif val == 0:
                zeros |= 1 << i
        if any(rows[x] & zeros for x in bits(ones)):
            continue
        maximal = True
        for w in range(v):
            if assign[w] is not None:
                continue
            can_one = rows[w] & zeros == 0
            can_zero = G.cols[w] & ones == 0
            if can_one or can_zero:
                maximal = False
                break
        if maximal:
            out.append((ones, zeros))
    return sorted(out)
