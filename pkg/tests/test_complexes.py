import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphburning import (
    ComplexError,
    SimplicialComplex,
    SimplicialMapError,
    are_isomorphic,
    complement,
    compose_simplicial_maps,
    cone,
    configuration_space,
    cube_graph,
    faces,
    from_generators,
    graph_as_complex,
    identity_simplicial_map,
    one_skeleton_graph,
    path_graph,
    skeleton,
    suspension,
    validate_simplicial_map,
)

from conftest import complexes, graphs

FULL_TRIANGLE = SimplicialComplex(3, frozenset({(0, 1, 2)}))
HOLLOW_TRIANGLE = SimplicialComplex(3, frozenset({(0, 1), (0, 2), (1, 2)}))


def test_complex_validation():
    with pytest.raises(ComplexError):
        SimplicialComplex(3, frozenset({(0, 1)}))  # vertex 2 uncovered
    with pytest.raises(ComplexError):
        SimplicialComplex(2, frozenset({(0,), (0, 1)}))  # not an antichain
    with pytest.raises(ComplexError):
        SimplicialComplex(2, frozenset({(1, 0)}))  # unsorted facet
    with pytest.raises(ComplexError):
        SimplicialComplex(2, frozenset({(0, 3)}))  # out of range


def test_from_generators_absorbs_faces():
    c = from_generators(3, [(0, 1), (0, 1, 2), (2,), (1, 0)])
    assert c.facets == frozenset({(0, 1, 2)})
    assert c.dimension == 2


def test_faces_of_full_triangle():
    assert faces(FULL_TRIANGLE, 0) == ((0,), (1,), (2,))
    assert faces(FULL_TRIANGLE, 1) == ((0, 1), (0, 2), (1, 2))
    assert faces(FULL_TRIANGLE, 2) == ((0, 1, 2),)
    assert faces(FULL_TRIANGLE, 3) == ()
    assert FULL_TRIANGLE.has_face((0, 2))
    assert not HOLLOW_TRIANGLE.has_face((0, 1, 2))


def test_skeleton():
    assert skeleton(FULL_TRIANGLE, 1) == HOLLOW_TRIANGLE
    assert skeleton(FULL_TRIANGLE, 2) == FULL_TRIANGLE
    assert skeleton(FULL_TRIANGLE, 0).facets == frozenset({(0,), (1,), (2,)})


@given(complexes())
@settings(max_examples=50, deadline=None)
def test_skeleton_faces_agree(c):
    for n in range(c.dimension + 1):
        s = skeleton(c, n)
        assert s.dimension <= n
        for q in range(n + 1):
            assert faces(s, q) == faces(c, q)


def test_graph_as_complex_round_trip():
    g = path_graph(4)
    assert one_skeleton_graph(graph_as_complex(g)) == g
    lonely = graph_as_complex(complement(path_graph(2)))
    assert lonely.facets == frozenset({(0,), (1,)})


def test_cone_and_suspension_shapes():
    c = cone(HOLLOW_TRIANGLE)
    assert c.vertex_count == 4
    assert c.facets == frozenset({(0, 1, 3), (0, 2, 3), (1, 2, 3)})
    s = suspension(HOLLOW_TRIANGLE)
    assert s.vertex_count == 5
    assert len(s.facets) == 6


def test_configuration_space_of_p5():
    c = configuration_space(path_graph(5))
    assert c.facets == frozenset({(0, 2, 4), (0, 3), (1, 3), (1, 4)})


@given(graphs())
@settings(max_examples=40, deadline=None)
def test_one_skeleton_is_complement(c):
    g = c
    space = configuration_space(g)
    assert one_skeleton_graph(skeleton(space, 1)) == complement(g)


def test_configuration_space_of_cube():
    c = configuration_space(cube_graph())
    assert c.dimension == 1
    assert one_skeleton_graph(c) == complement(cube_graph())


# ---------------------------------------------------------------------------
# Simplicial maps


def test_simplicial_map_validation():
    collapse = validate_simplicial_map((0, 0, 1), HOLLOW_TRIANGLE,
                                       SimplicialComplex(2, frozenset({(0, 1)})))
    assert collapse.image_simplex((0, 1)) == (0,)
    with pytest.raises(SimplicialMapError) as err:
        validate_simplicial_map((0, 1, 2), FULL_TRIANGLE, HOLLOW_TRIANGLE)
    assert err.value.facet == (0, 1, 2)
    with pytest.raises(SimplicialMapError):
        validate_simplicial_map((0, 1), FULL_TRIANGLE, FULL_TRIANGLE)


def test_simplicial_map_composition():
    ident = identity_simplicial_map(HOLLOW_TRIANGLE)
    twist = validate_simplicial_map((1, 2, 0), HOLLOW_TRIANGLE, HOLLOW_TRIANGLE)
    assert compose_simplicial_maps(twist, ident).vertex_fn == (1, 2, 0)
    assert compose_simplicial_maps(twist, twist).vertex_fn == (2, 0, 1)


# ---------------------------------------------------------------------------
# Isomorphism search


@given(complexes(max_vertices=6), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_isomorphism_finds_relabelings(c, rng):
    perm = list(range(c.vertex_count))
    rng.shuffle(perm)
    relabeled = SimplicialComplex(
        c.vertex_count,
        frozenset(tuple(sorted(perm[v] for v in f)) for f in c.facets))
    found = are_isomorphic(c, relabeled)
    assert found is not None
    image = frozenset(tuple(sorted(found[v] for v in f)) for f in c.facets)
    assert image == relabeled.facets


def test_isomorphism_negative():
    assert are_isomorphic(FULL_TRIANGLE, HOLLOW_TRIANGLE) is None
    path_c = from_generators(3, [(0, 1), (1, 2)])
    assert are_isomorphic(HOLLOW_TRIANGLE, path_c) is None


def test_isomorphism_size_guard():
    from graphburning import SizeGuardExceeded
    big = from_generators(13, [(v,) for v in range(13)])
    with pytest.raises(SizeGuardExceeded):
        are_isomorphic(big, big)
