"""Smoke tests for the posetlab Python bindings."""

import pytest

import posetlab as pl


def test_poset_roundtrip_and_invariants():
    # B_3(<=1): the empty set, three singletons, and the full set on top.
    p = pl.poset_from_source("bm?m=3&r=1")
    assert len(p) == 5
    assert p.least() == 0
    assert p.label(p.greatest()) == "{0,1,2}"
    assert pl.width(p) == 3

    d = pl.dim(p)
    assert d["exact"] and d["lower"] == d["upper"] == 2

    b = pl.breadth(p)
    assert b["exact"] and b["value"] == 2

    text = pl.serialize_poset(p)
    assert text.strip()  # serialized document round-trips through files


def test_kur_interval_on_truncated_cube():
    p = pl.poset_from_source("bm?m=4&r=2")
    k = pl.kur(p)
    assert (k["lo"], k["hi"]) == (3, 3)
    assert not k["conditional"]
    assert "cube-breadth" in k["lo_rules"]

    big = pl.poset_from_source("bm?m=7&r=4")
    cond = pl.kur(big, assume_gch=True)
    assert (cond["lo"], cond["hi"]) == (5, 5)
    assert cond["conditional"] and "gch" in cond["hi_rules"]


def test_estimates_match_known_thresholds():
    assert pl.spencer_exponent(171, 4) == 7
    assert pl.spencer_exponent(172, 4) == 8
    assert pl.e_value(215, 4) == 65536
    assert pl.spencer_min_n(32768, 4) == 211
    assert pl.furedi_kahn_min_d(257, 4) == 110
    assert pl.dushnik_dim(10, 5) == 8
    assert pl.dushnik_dim(9, 4) is None

    rows = pl.table_e(4, 215)
    assert rows[0] == (172, "256")
    assert rows[-1] == (215, "65536")
    assert len(rows) == 9

    rel = pl.best_relation(32768, 4)
    assert rel["rule"] == "spencer"
    assert rel["offset"] == 210
    assert rel["aleph"] == "(aleph_210, 4, aleph_0) -> 32768"
    assert rel["lambda"] == "(lambda^{+210}, 4, lambda) -> 32768"


def test_free_set_search_and_configs():
    f = pl.mapping_from_source("cyclic?n=3&r=1&shift=1")
    one = pl.find_free(f, 1)
    assert one["status"] == "found" and len(one["witness"]) == 1
    two = pl.find_free(f, 2)
    assert two["status"] == "exhausted"

    g = pl.SetMapping(6, 2)  # the empty mapping frees everything
    found = pl.find_free(g, 4)
    assert found["status"] == "found"
    assert pl.is_free(g, found["witness"])

    rep = pl.check_free_reduction(g, [0, 1, 2, 3, 4])
    assert rep["consistent"] and rep["decomposition_ok"]

    # A q-configuration is a special p-configuration.
    q = pl.config_search_q(g)
    p = pl.config_search_p(g)
    assert q["status"] == "found" and p["status"] == "found"
    assert len(set(p["xi"])) == 3


def test_shadow_embedding_and_transfer_checks():
    chain = pl.poset_from_source("chain?n=3")
    f = pl.SetMapping(5, 2)
    emb = pl.leadsto_shadow(chain, f)
    assert emb["status"] == "found"
    assert len(set(emb["map"])) == 3

    suit = pl.check_dim_equals_suitable(3, 2)
    assert suit["both_exact"] and suit["equal"]

    trans = pl.check_dim_transfer(3, 2)
    assert trans["both_exact"] and trans["equal"] and trans["psi_verified"]


def test_mapping_construction_and_errors():
    f = pl.SetMapping(4, 2)
    f.set([0, 1], [2])
    assert f.value([0, 1]) == [2]
    assert f.value([2, 3]) == []
    assert f.hull([0, 1, 3]) == [2]

    with pytest.raises(pl.PosetlabError):
        f.set([0, 1, 2], [3])  # key larger than the mapping order
    with pytest.raises(pl.PosetlabError):
        pl.poset_from_source("bm?m=99&r=1")
