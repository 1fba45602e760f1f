import pytest

import kecrit


def test_fixture_values():
    g1 = kecrit.fixture("G1")
    assert (g1.n, g1.m) == (7, 7)
    assert kecrit.critical_difference(g1) == 1
    assert kecrit.diadem(g1) == ["a", "b", "c", "d", "f"]
    fam = kecrit.critical_family(g1)
    assert fam["ker"] == ["a", "b"]
    assert fam["nucleus"] == ["a", "b", "d"]
    assert all(kecrit.ke_verdicts(g1).values())

    gf = kecrit.fixture("GF")
    dec = kecrit.decompose(gf)
    assert dec["I"] == ["a", "b", "c"]
    assert set(dec["X"]) == set("abcde")
    assert set(dec["Xc"]) == set("fghij")
    assert kecrit.independence_profile(gf)["core"] == ["a", "b", "c", "h"]


def test_g2_is_not_ke():
    g2 = kecrit.fixture("G2")
    assert not any(kecrit.ke_verdicts(g2).values())
    assert kecrit.matching_number(g2) == 4
    assert len(kecrit.matching(g2)) == 4
    assert kecrit.max_critical_independent_set(g2) in (["a", "b", "c", "d"], ["a", "b", "d", "f"])
    assert kecrit.extends_to_critical_independent(g2, ["c"])
    assert not kecrit.extends_to_critical_independent(g2, ["j"])
    checks = kecrit.verify_theorems(g2)
    assert {c["status"] for c in checks} == {"holds", "not_applicable"}


def test_graph_construction_and_parse():
    g = kecrit.Graph([("x", "y"), ("y", "z")], isolated=["w"])
    assert g.labels == ["w", "x", "y", "z"]
    assert g.edges == [("x", "y"), ("y", "z")]
    assert g.neighbors("y") == ["x", "z"]
    assert g.difference(["x", "z"]) == 1
    assert g.is_independent(["x", "z"])
    back = kecrit.parse(g.to_edge_list())
    assert back.labels == g.labels and back.edges == g.edges
    assert kecrit.parse(g.to_dimacs(), "dimacs").m == 2
    with pytest.raises(kecrit.ParseError):
        kecrit.parse("3 1\na a\n")
    with pytest.raises(ValueError):
        kecrit.parse("1 0\na\n", "xml")


def test_generators_are_seeded():
    a = kecrit.gnp(30, 0.2, seed=4)
    assert a.edges == kecrit.gnp(30, 0.2, seed=4).edges
    assert kecrit.bipartite_gnp(3, 3, 1.0).m == 9
    assert kecrit.disjoint_union([3, 2], 1.0).m == 4


def test_analyze_report():
    report = kecrit.analyze(kecrit.fixture("G2"))
    assert report["graph"] == {"n": 10, "m": 11}
    assert report["corona"] == list("abcdfghij")
    assert report["verdicts"]["by_definition"] is False
    assert all(c["status"] != "fails" for c in report["checks"])

    big = kecrit.analyze(kecrit.gnp(40, 0.1, seed=2))
    assert big["alpha"] == {"skipped": True}
    with pytest.raises(kecrit.OracleBoundError):
        kecrit.independence_profile(kecrit.gnp(40, 0.1, seed=2))


def test_fast_paths_on_random_graphs():
    for seed in range(40):
        g = kecrit.gnp(10, 0.3, seed=seed)
        assert all(c["status"] == "holds" for c in kecrit.verify_fast_paths(g))
