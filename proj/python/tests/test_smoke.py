import math
from pathlib import Path

import pytest

import syzygy

DATA = Path(__file__).resolve().parents[2] / "data"


def load(name):
    return (DATA / name).read_text()


@pytest.fixture(scope="module")
def chain():
    return syzygy.Algebra.parse(load("chain_with_loop.alg"))


def test_algebra_basics(chain):
    assert chain.dim == 9
    assert chain.vertices == ["1", "2", "3"]
    assert chain.arrows == ["a", "b", "c"]
    assert chain.projective("1").dims == [1, 1, 1]
    assert chain.projective("3", side="right").dims == [1, 2, 3]


def test_simple_has_infinite_projective_dimension(chain):
    s1 = chain.module(load("chain_with_loop_s1.mod"))
    assert s1.is_isomorphic(chain.simple("1"))
    result = syzygy.pdim(s1, budget=10)
    assert math.isinf(result["value"])
    assert result["certificate"] == "recurrence-cycle"
    assert syzygy.repetition_index(s1)["value"] == 2


def test_syzygy_dimensions(chain):
    dims = syzygy.syzygy_dims(chain.simple("1"), 3)
    assert dims[1] == [[0, 1, 1]]
    assert dims[2] == [[0, 0, 1]]
    assert dims[3] == [[0, 0, 2]]
    assert chain.simple("1").syzygy().dims == [0, 1, 1]


def test_direct_sum_and_summands(chain):
    m = chain.simple("2") + chain.projective("1")
    assert sorted(m.summand_dims()) == [[0, 1, 0], [1, 1, 1]]


def test_findim_of_five_vertex_algebra():
    a = syzygy.Algebra.parse(load("five_vertex_monomial.alg"))
    report = syzygy.findim(a, "left", 12)
    assert report["exact"]
    assert report["lower"] == 4
    assert report["lower_witness"] == "P5/(al+be)"


def test_satellite_algebra_of_order():
    a = syzygy.Algebra.from_order(load("tiled_gorenstein.ord"))
    assert len(a.vertices) == 6
    assert syzygy.pdim(a.injective("6"))["value"] == 1


def test_run_command():
    code, report = syzygy.run("order", "report", str(DATA / "tiled_six_vertex.ord"), "--budget", "8")
    assert code == 0
    assert [c["value"] for c in report["claims"][2:4]] == [4, 1]


def test_errors_are_raised(chain):
    with pytest.raises(syzygy.SyzygyError):
        syzygy.Algebra.parse("quiver { vertices: 1; arrows: a: 1 -> 7; }")
    with pytest.raises(KeyError):
        chain.simple("9")
    with pytest.raises(ValueError):
        chain.top("middle")
