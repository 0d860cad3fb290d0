import pytest

import dendrokan as dk


def test_trees_and_canonical_terms():
    assert dk.trees(1, 2) == ["e", "()", "(e)"]
    assert len(dk.trees(4, 7)) == 916
    assert dk.canonical(" ( e  (e e))") == "(e (e e))"
    with pytest.raises(ValueError):
        dk.canonical("(e")


def test_faces_of_the_example_tree(validate):
    doc = dk.faces("((e (e e) e) (e) (e e ()))")
    validate("faces", doc)
    assert [f["index"] for f in doc["faces"]] == list(range(8))
    assert doc["faces"][-1]["kind"] == "OuterFace"
    assert doc["faces"][-1]["vertex"] == [2, 2]
    assert dk.faces("e")["faces"] == []


def test_hom_counts_and_factorization(validate):
    doc = dk.hom("(e)", "((e))")
    validate("hom", doc)
    assert doc["count"] == 6
    assert sum(m["mono"] for m in doc["maps"]) == 3
    for m in doc["maps"]:
        fac = dk.factorize(m)
        validate("factorize", fac)
        validate("map", fac["map"])
        if m["mono"]:
            assert fac["degeneracies"] == []


def test_bad_map_is_rejected():
    with pytest.raises(ValueError, match="domain vertex 0"):
        dk.factorize({"domain": "(e e)", "codomain": "(e e)", "edge_map": [[[], []], [[0], [1]], [[1], [0]]]})


def test_integer_lattices():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert dk.smith_diagonal(m) == [2, 6, 12]
    big = 10**30
    assert dk.hnf([[big, 0], [0, 1]]) == [[big, 0], [0, 1]]
    k = dk.kernel_basis([[1, 2, 3]])
    assert len(k) == 3 and len(k[0]) == 2
    for j in range(2):
        assert sum(c * k[i][j] for i, c in enumerate([1, 2, 3])) == 0


def test_truncation_moore_and_split():
    tr = dk.Truncation(3, 5)
    assert len(tr) == len(dk.trees(3, 5))
    assert tr.moore_violations("((e) e)") == 0
    assert tr.moore_violations("(() e)") > 0
    ranks = tr.representable_ranks("((e))")
    at = "(e)"
    rank = ranks[tr.trees().index(at)]
    x = list(range(1, rank + 1))
    normal, summands = dk.split(tr, "((e))", at, x)
    total = list(normal)
    for y in summands:
        total = [a + b for a, b in zip(total, y)]
    assert total == x
    with pytest.raises(KeyError):
        tr.moore_violations("(e e e e e e e)")


def test_worked_examples_pass():
    examples = dk.worked_examples()
    assert len(examples) == 15
    assert all(e["status"] == "pass" for e in examples)


def test_small_sweep_report(validate):
    report = dk.sweep(max_vertices=2, max_edges=4, parallel=1)
    validate("sweep", report)
    assert [c["check"] for c in report["checks"]] == dk.known_checks()
    faulty = dk.sweep(["moore"], max_vertices=2, max_edges=4, parallel=1, sign_fault=True)
    validate("sweep", faulty)
    assert faulty["status"] == "fail"
    assert any("witness" in w for c in faulty["checks"] for w in c["witnesses"])
    assert dk.sweep(["signs"], 2, 4, parallel=1) == dk.sweep(["signs"], 2, 4, parallel=2)
