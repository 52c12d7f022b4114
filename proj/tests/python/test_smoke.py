import os

import pytest

permlat = pytest.importorskip("permlat")

FIXTURES = os.environ.get("PERMLAT_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "fixtures"))


def doc(name):
    return permlat.Document.from_file(os.path.join(FIXTURES, name))


def test_info_and_subgroups():
    d = doc("d8_perm.example")
    info = d.info()
    assert info["group_order"] == 8
    assert info["subgroup_count"] == 10
    assert info["lattices"]["M"] == 4
    assert len(d.subgroups()) == 10


def test_recognize_permutation():
    d = doc("d8_perm.example")
    r = d.recognize("M")
    assert r["is_permutation"] is True
    assert r["kernel_rank"] == 0
    assert sum(r["structure"].values()) == 1


def test_recognize_sign_lattice():
    d = doc("c4_sign.example")
    r = d.recognize("SGN")
    assert r["is_permutation"] is False
    assert r["kernel_rank"] == 1
    cw = d.recognize("SGN", method="cliffweiss")
    assert cw["coflasque"] is False
    assert cw["modp_permutation"] is True


def test_weiss_counterexample():
    d = doc("klein_counterexample.example")
    r = d.weiss("U", "N")
    assert r["status"] == "HypothesisFailed"
    assert r["hypothesis_1"] is True
    assert r["hypothesis_2"] is False


def test_h1_and_brauer_and_cover():
    d = doc("c4_sign.example")
    assert d.h1("SGN", "G") == [2]
    assert d.h1("REG", "G") == []
    b = d.brauer("REG", "G")
    assert b["double_dim"] == 0
    c = d.cover("REG")
    assert c["kernel_rank"] == 0
    assert c["cover_rank"] == 4


def test_mackey():
    d = doc("d8_perm.example")
    m = d.mackey("M", "Z", "S")
    assert m["iso_verified"] is True
    # restrict to Z (rank 4), induce to G (rank 16), restrict to S
    assert m["rank"] == 16


def test_parse_error():
    with pytest.raises(ValueError):
        permlat.Document.from_text("prime 2\n")
