import pytest

import qbmap


def test_sample_is_a_quadrangulation():
    m = qbmap.sample_quadrangulation(50, 6, seed=3)
    code = qbmap.canonical_code(m)
    assert isinstance(code, bytes)
    again = qbmap.sample_quadrangulation(50, 6, seed=3)
    assert again == m
    dist = qbmap.bfs_distances(m, m["pointed"])
    assert dist[m["pointed"]] == 0
    assert len(dist) == 50 + 6 + 1


def test_bdg_roundtrip():
    enc = qbmap.sample_encoding(200, 9, seed=11)
    pm = qbmap.bdg_forward(enc)
    assert qbmap.bdg_inverse(pm) == enc


def test_saw_roundtrip():
    pm = qbmap.sample_quadrangulation(100, 5, seed=2)
    saw = qbmap.quadrangulation_to_saw(pm)
    back = qbmap.saw_to_quadrangulation(saw)
    assert qbmap.canonical_code(back) == qbmap.canonical_code(pm)


def test_small_examples():
    enc = {"child_counts": [[1, 0]], "labels": [0, 1], "bridge": [0, 0]}
    assert qbmap.contour_pair(enc) == ([1, 2, 1, 0], [0, 1, 0, 0])
    assert qbmap.facial_sequence([[1, 0]]) == [0, 1, 0, 2]
    assert qbmap.bridge_to_pm1([0, 0]) == [-1, 1]
    assert qbmap.pm1_to_bridge([1, -1]) == [0, -1]
    assert qbmap.vervaat([0, 1, -1, 0]) == [0, 1, 2, 0]


def test_counts():
    assert qbmap.count_formula("Q", 1, 1) == 2
    assert qbmap.count_formula("B", 0, 3) == 20
    assert qbmap.count_formula("F", 2, 1) == 18
    assert qbmap.enumerate_count("Q", 2, 2) == qbmap.count_formula("Q", 2, 2)


def test_experiment():
    res = qbmap.run_experiment("bridge-variance", [400], replicas=20, seed=5)
    assert res["id"] == "bridge-variance"
    assert len(res["rows"]) == 20
    assert res["rng"] == qbmap.rng_identifier


def test_invalid_input():
    with pytest.raises(ValueError):
        qbmap.bdg_inverse({"twin": [0], "next": [0], "root": 0, "pointed": 0})
    with pytest.raises(ValueError):
        qbmap.sample_quadrangulation(-1, 2, seed=1)
