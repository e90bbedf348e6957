import pytest

import latdual as ld
from latdual.lattice import interval, join_irreducibles, meet_irreducibles, mu, order_dual
from latdual.properties import LATTICE_CHECKS, DIGRAPH_CHECKS

LATTICE_PROPS = ("usm", "lsm", "mod", "dist", "jsd", "msd", "sd", "wjsd",
                 "jmlsm", "jmusm", "labc", "uabc", "md")
DIGRAPH_PROPS = ("tirs", "lti", "uti", "djsd", "dmsd", "dsd", "fis",
                 "wt0", "wt1", "trans", "poset")

# fixture name -> subset of LATTICE_PROPS that hold
LATTICE_TABLE = {
    "CHAIN(3)": set(LATTICE_PROPS),
    "B2": set(LATTICE_PROPS),
    "N5": {"jsd", "msd", "sd", "wjsd"},
    "M3": {"usm", "lsm", "mod", "jmlsm", "jmusm", "labc", "uabc"},
    "L4": {"usm", "msd", "jmusm", "uabc"},
    "L4D": {"lsm", "jsd", "wjsd", "jmlsm", "labc", "md"},
    "L3D": {"jmlsm", "labc"},
    "K": {"usm", "lsm", "mod", "jmlsm", "jmusm", "labc", "uabc"},
}

# fixture name -> subset of DIGRAPH_PROPS holding on the dual digraph
DIGRAPH_TABLE = {
    "CHAIN(3)": set(DIGRAPH_PROPS),
    "B2": set(DIGRAPH_PROPS),
    "N5": {"tirs", "djsd", "dmsd", "dsd", "wt1"},
    "M3": {"tirs", "lti", "uti", "fis", "wt0", "wt1"},
    "L4": {"tirs", "uti", "dmsd", "wt0"},
    "L4D": {"tirs", "lti", "djsd", "wt0"},
    "L3D": {"tirs", "lti", "wt1"},
    "K": {"tirs", "lti", "uti"},
}


def test_lattice_flag_table():
    for name, expect in LATTICE_TABLE.items():
        L = ld.fixture(name)
        got = {p for p in LATTICE_PROPS if ld.check_lattice_property(p, L)}
        assert got == expect, name


def test_digraph_flag_table():
    for name, expect in DIGRAPH_TABLE.items():
        G = ld.dual_digraph(ld.fixture(name))
        got = {p for p in DIGRAPH_PROPS if ld.check_digraph_property(p, G)}
        assert got == expect, name


def test_witness_goldens():
    N5 = ld.fixture("N5")
    assert ld.check_lattice_property("usm", N5).witness == (1, 3)
    assert ld.check_lattice_property("mod", N5).witness == (3, 1, 2)
    assert ld.check_lattice_property("md", N5).witness == (4,)
    assert ld.check_lattice_property("dist", ld.fixture("M3")).witness == (1, 2, 3)
    L4 = ld.fixture("L4")
    assert ld.check_lattice_property("lsm", L4).witness == (3, 5)
    assert ld.check_lattice_property("jsd", L4).witness == (4, 3, 5)


def test_report_shape():
    r = ld.check_lattice_property("mod", ld.fixture("M3"))
    assert r.holds and r.witness is None and bool(r)
    r = ld.check_lattice_property("mod", ld.fixture("N5"))
    assert not r.holds and r.witness is not None and not bool(r)
    assert r.property == "mod"


def _witness_confirms(L, prop, w):
    """Replay a failure witness against the defining condition."""
    ji, mi = set(join_irreducibles(L)), set(meet_irreducibles(L))
    if prop in ("usm", "jmusm"):
        a, b = w
        shape = L.is_cover(L.meet(a, b), a) and not L.is_cover(b, L.join(a, b))
        return shape and (prop == "usm" or (a in ji and b in mi))
    if prop == "lsm":
        a, b = w
        return L.is_cover(a, L.join(a, b)) and not L.is_cover(L.meet(a, b), b)
    if prop == "jmlsm":
        a, b = w
        return (a in ji and b in mi and L.is_cover(b, L.join(a, b))
                and not L.is_cover(L.meet(a, b), a))
    if prop == "mod":
        a, b, c = w
        return L.leq(a, c) and L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)
    if prop == "dist":
        a, b, c = w
        return L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))
    if prop in ("jsd", "wjsd"):
        a, b, c = w
        shape = (L.join(a, b) == L.join(a, c)
                 and L.join(a, b) != L.join(a, L.meet(b, c)))
        return shape and (prop == "jsd" or (a in mi and b in ji))
    if prop == "msd":
        a, b, c = w
        return (L.meet(a, b) == L.meet(a, c)
                and L.meet(a, b) != L.meet(a, L.join(b, c)))
    if prop == "sd":
        return _witness_confirms(L, "jsd", w) or _witness_confirms(L, "msd", w)
    if prop == "labc":
        a, b = w
        pairs = ld.mdfips(L)
        return (a in ji and b in mi and not L.leq(a, b)
                and not any(x == a and L.leq(b, c) for x, c in pairs))
    if prop == "uabc":
        a, b = w
        pairs = ld.mdfips(L)
        return (a in ji and b in mi and not L.leq(a, b)
                and not any(y == b and L.leq(c, a) for c, y in pairs))
    if prop == "md":
        (a,) = w
        return a != L.bottom and not ld.check_lattice_property(
            "dist", interval(L, mu(L, a), a))
    raise AssertionError(prop)


def test_witnesses_replay_on_catalog(catalog5):
    for L in catalog5.entries:
        for prop in LATTICE_PROPS:
            r = ld.check_lattice_property(prop, L)
            if not r:
                assert _witness_confirms(L, prop, r.witness), (L.n, prop, r.witness)


def test_witnesses_replay_on_fixtures():
    for name in LATTICE_TABLE:
        L = ld.fixture(name)
        for prop in LATTICE_PROPS:
            r = ld.check_lattice_property(prop, L)
            if not r:
                assert _witness_confirms(L, prop, r.witness), (name, prop)


DUAL_PAIRS = (("usm", "lsm"), ("jsd", "msd"), ("jmlsm", "jmusm"),
              ("labc", "uabc"), ("mod", "mod"), ("dist", "dist"), ("sd", "sd"))


def test_order_dual_swaps_paired_properties(catalog5):
    for L in catalog5.entries:
        D = order_dual(L)
        for p, q in DUAL_PAIRS:
            assert bool(ld.check_lattice_property(p, L)) == \
                bool(ld.check_lattice_property(q, D)), (L.n, p, q)


def test_interval_condition_is_not_self_dual():
    assert not ld.check_lattice_property("md", ld.fixture("L4"))
    assert ld.check_lattice_property("md", ld.fixture("L4D"))


def test_modular_is_semimodular_both_ways(catalog6):
    for L in catalog6.entries:
        both = bool(ld.check_lattice_property("usm", L)) and \
            bool(ld.check_lattice_property("lsm", L))
        assert both == bool(ld.check_lattice_property("mod", L))


IMPLICATIONS = (("dist", "mod"), ("dist", "sd"), ("mod", "usm"), ("mod", "lsm"),
                ("lsm", "jmlsm"), ("usm", "jmusm"), ("jsd", "wjsd"),
                ("sd", "jsd"), ("sd", "msd"))


def test_implication_sanity(catalog6):
    for L in catalog6.entries:
        flags = {p: bool(ld.check_lattice_property(p, L))
                 for p in LATTICE_PROPS}
        for p, q in IMPLICATIONS:
            assert not flags[p] or flags[q], (L.n, p, q)


def test_digraph_names_resolve_through_the_dual():
    for name in ("N5", "L4", "L4D", "L3D", "M3", "K"):
        L = ld.fixture(name)
        G = ld.dual_digraph(L)
        for prop in DIGRAPH_PROPS:
            assert bool(ld.check_lattice_property(prop, L)) == \
                bool(ld.check_digraph_property(prop, G)), (name, prop)


def test_tirs_witness_tags():
    from latdual.digraph import Digraph

    r = ld.check_digraph_property("tirs", Digraph((0b11, 0b11)))
    assert not r and r.witness[0] == "s"
    r = ld.check_digraph_property("tirs", Digraph((0b011, 0b111, 0b100)))
    assert not r and r.witness == ("r", (0, 1))


def test_property_names_listing():
    names = ld.property_names()
    assert names == LATTICE_PROPS + DIGRAPH_PROPS
    assert len(set(names)) == len(names)
    assert set(LATTICE_CHECKS) == set(LATTICE_PROPS)
    assert set(DIGRAPH_CHECKS) == set(DIGRAPH_PROPS)


def test_unknown_names_raise():
    with pytest.raises(ld.UnknownProperty):
        ld.check_lattice_property("shiny", ld.fixture("B2"))
    with pytest.raises(ld.UnknownProperty):
        ld.check_digraph_property("usm", ld.dual_digraph(ld.fixture("B2")))
