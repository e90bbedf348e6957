"""Property deciders for lattices and reflexive digraphs.

Every decider returns a PropertyReport. Witnesses are the first failing
tuple in lexicographic scan order, so reports are stable across runs.
Digraph-side property names can also be asked of a lattice, in which case
they are evaluated on its dual digraph.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import digraph as dg
from .duality import dual_digraph, mdfips
from .errors import UnknownProperty
from .lattice import interval, join_irreducibles, meet_irreducibles, mu


@dataclass(frozen=True)
class PropertyReport:
    property: str
    holds: bool
    witness: tuple | None = None

    def __bool__(self):
        return self.holds


def _report(name, holds, witness=None):
    return PropertyReport(name, holds, witness if not holds else None)


def is_usm(L):
    """Upper semimodular: a^b covered by a forces b covered by a|b."""
    for a in range(L.n):
        for b in range(L.n):
            if L.is_cover(L.meet(a, b), a) and not L.is_cover(b, L.join(a, b)):
                return _report("usm", False, (a, b))
    return _report("usm", True)


def is_lsm(L):
    """Lower semimodular: a covered by a|b forces a^b covered by b."""
    for a in range(L.n):
        for b in range(L.n):
            if L.is_cover(a, L.join(a, b)) and not L.is_cover(L.meet(a, b), b):
                return _report("lsm", False, (a, b))
    return _report("lsm", True)


def is_jm_lsm(L):
    """Join/meet irreducible restriction of lower semimodularity.

    For a join irreducible and b meet irreducible: b covered by a|b
    forces a^b covered by a.
    """
    mi = meet_irreducibles(L)
    for a in join_irreducibles(L):
        for b in mi:
            if L.is_cover(b, L.join(a, b)) and not L.is_cover(L.meet(a, b), a):
                return _report("jmlsm", False, (a, b))
    return _report("jmlsm", True)


def is_jm_usm(L):
    """For a join irreducible and b meet irreducible: a^b covered by a
    forces b covered by a|b."""
    mi = meet_irreducibles(L)
    for a in join_irreducibles(L):
        for b in mi:
            if L.is_cover(L.meet(a, b), a) and not L.is_cover(b, L.join(a, b)):
                return _report("jmusm", False, (a, b))
    return _report("jmusm", True)


def is_modular(L):
    for a in range(L.n):
        for b in range(L.n):
            for c in range(L.n):
                if not L.leq(a, c):
                    continue
                if L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c):
                    return _report("mod", False, (a, b, c))
    return _report("mod", True)


def is_distributive(L):
    for a in range(L.n):
        for b in range(L.n):
            for c in range(L.n):
                if L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)):
                    return _report("dist", False, (a, b, c))
    return _report("dist", True)


def is_jsd(L):
    """Join semidistributive: a|b = a|c forces a|b = a|(b^c)."""
    for a in range(L.n):
        for b in range(L.n):
            for c in range(L.n):
                ab = L.join(a, b)
                if ab == L.join(a, c) and ab != L.join(a, L.meet(b, c)):
                    return _report("jsd", False, (a, b, c))
    return _report("jsd", True)


def is_msd(L):
    """Meet semidistributive: a^b = a^c forces a^b = a^(b|c)."""
    for a in range(L.n):
        for b in range(L.n):
            for c in range(L.n):
                ab = L.meet(a, b)
                if ab == L.meet(a, c) and ab != L.meet(a, L.join(b, c)):
                    return _report("msd", False, (a, b, c))
    return _report("msd", True)


def is_sd(L):
    r = is_jsd(L)
    if not r:
        return _report("sd", False, r.witness)
    r = is_msd(L)
    if not r:
        return _report("sd", False, r.witness)
    return _report("sd", True)


def is_wjsd(L):
    """Join semidistributive law restricted to a meet irreducible first
    argument and a join irreducible second argument."""
    ji = join_irreducibles(L)
    for a in meet_irreducibles(L):
        for b in ji:
            for c in range(L.n):
                ab = L.join(a, b)
                if ab == L.join(a, c) and ab != L.join(a, L.meet(b, c)):
                    return _report("wjsd", False, (a, b, c))
    return _report("wjsd", True)


def satisfies_labc(L):
    """Every disjoint irreducible pair extends upward to an MDFIP.

    For a join irreducible and b meet irreducible with a not below b,
    some c >= b makes (a, c) an MDFIP.
    """
    pairs = mdfips(L)
    mi = meet_irreducibles(L)
    for a in join_irreducibles(L):
        for b in mi:
            if L.leq(a, b):
                continue
            if not any(a2 == a and L.leq(b, c) for a2, c in pairs):
                return _report("labc", False, (a, b))
    return _report("labc", True)


def satisfies_uabc(L):
    """Dual extension: some c <= a makes (c, b) an MDFIP."""
    pairs = mdfips(L)
    mi = meet_irreducibles(L)
    for a in join_irreducibles(L):
        for b in mi:
            if L.leq(a, b):
                continue
            if not any(b2 == b and L.leq(c, a) for c, b2 in pairs):
                return _report("uabc", False, (a, b))
    return _report("uabc", True)


def is_meet_distributive(L):
    """Each interval from the meet of lower covers of a up to a is
    distributive; the bottom element is exempt."""
    for a in range(L.n):
        if a == L.bottom:
            continue
        seg = interval(L, mu(L, a), a)
        if not is_distributive(seg):
            return _report("md", False, (a,))
    return _report("md", True)


def _wrap(name, fn):
    def run(G):
        r = fn(G)
        return _report(name, r.holds, r.witness)

    return run


def _tirs_report(G):
    rep = dg.check_tirs(G)
    if rep.ok:
        return _report("tirs", True)
    for tag in ("s", "r", "ti"):
        if rep.witnesses[tag] is not None:
            return _report("tirs", False, (tag, rep.witnesses[tag]))
    return _report("tirs", False)


LATTICE_CHECKS = {
    "usm": is_usm,
    "lsm": is_lsm,
    "mod": is_modular,
    "dist": is_distributive,
    "jsd": is_jsd,
    "msd": is_msd,
    "sd": is_sd,
    "wjsd": is_wjsd,
    "jmlsm": is_jm_lsm,
    "jmusm": is_jm_usm,
    "labc": satisfies_labc,
    "uabc": satisfies_uabc,
    "md": is_meet_distributive,
}

DIGRAPH_CHECKS = {
    "tirs": _tirs_report,
    "lti": _wrap("lti", dg.check_lti),
    "uti": _wrap("uti", dg.check_uti),
    "djsd": _wrap("djsd", dg.check_djsd),
    "dmsd": _wrap("dmsd", dg.check_dmsd),
    "dsd": _wrap("dsd", dg.check_dsd),
    "fis": _wrap("fis", dg.check_fis),
    "wt0": _wrap("wt0", dg.check_wt0),
    "wt1": _wrap("wt1", dg.check_wt1),
    "trans": _wrap("trans", dg.is_transitive),
    "poset": _wrap("poset", dg.is_poset),
}


def property_names():
    """Registered names: lattice laws first, then digraph axioms."""
    return tuple(LATTICE_CHECKS) + tuple(DIGRAPH_CHECKS)


def check_lattice_property(name, L):
    if name in LATTICE_CHECKS:
        return LATTICE_CHECKS[name](L)
    if name in DIGRAPH_CHECKS:
        return DIGRAPH_CHECKS[name](dual_digraph(L))
    raise UnknownProperty(f"no lattice property named {name!r}")


def check_digraph_property(name, G):
    if name in DIGRAPH_CHECKS:
        return DIGRAPH_CHECKS[name](G)
    raise UnknownProperty(f"no digraph property named {name!r}")
