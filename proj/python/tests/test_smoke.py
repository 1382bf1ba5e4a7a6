import pytest

import nestcyc


def test_generate_and_graph_basics():
    g = nestcyc.generate("complete:6")
    assert g.n == 6
    assert g.m == 15
    assert sorted(g.neighbors(0)) == [1, 2, 3, 4, 5]
    q = nestcyc.generate("hypercube:4")
    assert (q.n, q.m) == (16, 32)
    assert nestcyc.generate("gnm:30,60", 3).edges() == nestcyc.generate("gnm:30,60", 3).edges()


def test_edge_list_roundtrip():
    g = nestcyc.generate("gnp:40,0.2", 5)
    h = nestcyc.parse_edge_list(g.to_edge_list())
    assert h.edges() == g.edges()
    assert h.hash() == g.hash()


def test_girth_and_shortest_cycle():
    assert nestcyc.girth(nestcyc.generate("complete:4")) == 3
    assert nestcyc.shortest_cycle(nestcyc.generate("cycle:7")) == list(range(7))
    assert nestcyc.shortest_cycle(nestcyc.Graph(3, [(0, 1), (1, 2)])) is None


def test_epsilon_and_chords():
    assert nestcyc.epsilon(1.0, 0.5, 10.0) == 0.0
    assert nestcyc.epsilon(100.0, 0.5, 10.0) == pytest.approx(0.01992, rel=1e-3)
    assert nestcyc.chords_cross(8, 0, 2, 1, 3)
    assert not nestcyc.chords_cross(8, 0, 2, 2, 4)
    assert not nestcyc.chords_cross(8, 0, 2, 4, 6)


def test_pipeline_certificate_verifies():
    g = nestcyc.generate("complete:20")
    r = nestcyc.pipeline(g)
    assert r["status"] == "certified"
    cert = r["certificate"]
    v = nestcyc.verify(g, cert["outer"], cert["inner"])
    assert v["verdict"] == "PASS"
    bad = list(cert["outer"])
    bad[0], bad[2] = bad[2], bad[0]
    assert nestcyc.verify(g, bad, cert["inner"])["verdict"] == "FAIL"


def test_pipeline_failure_is_reported():
    r = nestcyc.pipeline(nestcyc.generate("cycle:40"))
    assert r["status"] == "failed"
    assert r["certificate"] is None


def test_oracle():
    k5 = nestcyc.oracle(nestcyc.generate("complete:5"))
    assert not k5["found"] and k5["exhaustive"]
    k6 = nestcyc.oracle(nestcyc.generate("complete:6"))
    assert k6["found"]
    assert len(k6["outer"]) == 6


def test_extract():
    r = nestcyc.extract(nestcyc.generate("complete:12"))
    assert r["extraction"]["output_vertices"] == 12


def test_errors():
    with pytest.raises(ValueError):
        nestcyc.generate("nope:3")
    with pytest.raises(ValueError):
        nestcyc.Graph(3, [(0, 5)])
    with pytest.raises(ValueError):
        nestcyc.parse_edge_list("2 1\n0 x\n")
