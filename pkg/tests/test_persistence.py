import pytest

from gradedmod.errors import InputError
from gradedmod.graded_poly import INF, GradedSignature
from gradedmod.persistence import (
    Barcode,
    FilteredComplex,
    barcode_from_signature,
    betti_numbers,
    homology_persistence_module,
    persistent_homology,
)

from conftest import ALL_FIELDS, GF2, GF3, GF5, QQ
from filtrations import CORPUS, TRIANGLE


def test_triangle_modules():
    P1 = homology_persistence_module(TRIANGLE, 1, GF2)
    assert P1.dims == (0, 1, 0)
    assert [(len(f), len(f[0]) if f else None) for f in P1.maps] == [(1, 0), (0, None)]
    assert homology_persistence_module(TRIANGLE, 0, GF2).dims == (3, 1, 1)
    assert homology_persistence_module(CORPUS["empty"], 0, GF2).dims == (0,)
    assert homology_persistence_module(CORPUS["empty"], 3, GF2).dims == (0,)


def test_triangle_barcodes():
    assert persistent_homology(TRIANGLE, 1, GF2).bars == ((1, 0),)
    assert persistent_homology(TRIANGLE, 0, GF2).bars == ((0, 0), (0, 0), (0, INF))
    assert persistent_homology(CORPUS["vertex"], 0, GF2).bars == ((0, INF),)


def test_barcode_from_signature():
    assert barcode_from_signature(GradedSignature([(0, 2)])).bars == ((0, 1),)
    assert Barcode.death((0, 1)) == 2
    assert barcode_from_signature(GradedSignature([(1, INF)])).bars == ((1, INF),)
    sig = GradedSignature([(0, INF), (0, 2), (1, 3)])
    assert barcode_from_signature(sig) == Barcode(((0, INF), (0, 1), (1, 2)))


@pytest.mark.parametrize("name", sorted(CORPUS))
@pytest.mark.parametrize("field", [GF2, GF3, QQ], ids=str)
def test_bars_alive_match_betti_numbers(name, field):
    C = CORPUS[name]
    for q in range(C.dimension + 2):
        barcode = persistent_homology(C, q, field)
        betti = betti_numbers(C, q, field)
        assert [barcode.alive(n) for n in range(C.max_time + 1)] == betti
        assert homology_persistence_module(C, q, field).dims == tuple(betti)
        # the last level persists forever
        assert barcode.alive(C.max_time + 10) == betti[-1]


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_euler_characteristic(name):
    C = CORPUS[name]
    dims = range(C.dimension + 1)
    bettis = {q: betti_numbers(C, q, GF5) for q in dims}
    for n in range(C.max_time + 1):
        lhs = sum((-1) ** q * bettis[q][n] for q in dims)
        rhs = sum((-1) ** q * C.count(q, n) for q in dims)
        assert lhs == rhs


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_graph_h0_is_field_independent(name):
    C = CORPUS[name]
    bars = {persistent_homology(C, 0, F) for F in ALL_FIELDS}
    assert len(bars) == 1


def test_expected_corpus_barcodes():
    assert persistent_homology(CORPUS["hollow_tetrahedron_then_solid"], 2, GF2).bars == ((3, 1),)
    assert persistent_homology(CORPUS["octahedron"], 2, QQ).bars == ((7, INF),)
    assert persistent_homology(CORPUS["two_loops_staggered"], 1, GF2).bars == ((1, 1), (3, 2))
    assert persistent_homology(CORPUS["figure_eight"], 1, GF3).bars == ((1, INF), (3, INF))
    # elder rule: the later vertex 1 (born 1) dies when joined at 4
    assert persistent_homology(CORPUS["path_staggered"], 0, GF2).bars == ((0, INF), (1, 2), (2, 1), (3, 1))


def test_direct_sum_of_complexes():
    left = CORPUS["triangle"]
    right = FilteredComplex([((v + 10,), t) for (v,), t in ((s, t) for s, t in left.times.items() if len(s) == 1)]
                            + [(tuple(x + 10 for x in s), t) for s, t in left.times.items() if len(s) > 1])
    union = FilteredComplex(list(left.times.items()) + list(right.times.items()))
    for q in (0, 1):
        assert persistent_homology(union, q, GF2) == persistent_homology(left, q, GF2) + persistent_homology(right, q, GF2)


def test_filtration_validation():
    with pytest.raises(InputError):
        FilteredComplex([((0, 1), 0)])  # missing vertices
    with pytest.raises(InputError):
        FilteredComplex([((0,), 2), ((1,), 0), ((0, 1), 1)])  # face after coface
    with pytest.raises(InputError):
        FilteredComplex([((0,), 0), ((0,), 1)])
    with pytest.raises(InputError):
        FilteredComplex([((0,), 0.5)])
    with pytest.raises(InputError):
        FilteredComplex([((0, 0), 0)])


def test_json_round_trip():
    obj = TRIANGLE.to_json()
    assert FilteredComplex.from_json(obj).times == TRIANGLE.times
    b = persistent_homology(TRIANGLE, 0, GF2)
    assert b.to_json() == {"bars": [{"birth": 0, "persistence": 0}, {"birth": 0, "persistence": 0},
                                    {"birth": 0, "persistence": "inf"}]}
    assert Barcode.from_json(b.to_json()) == b


def test_renderers():
    b = persistent_homology(TRIANGLE, 0, GF2)
    lines = b.render_ascii().splitlines()
    assert lines[0] == "[#x| birth=0 persistence=0 death=1"
    assert lines[2] == "[##> birth=0 persistence=inf"
    svg = b.render_svg()
    assert svg.count("<rect") == 3 and svg.startswith("<svg")
