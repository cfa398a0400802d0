import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphburning import (
    ChainComplexZ,
    HomologyGroup,
    SimplicialComplex,
    SmithForm,
    chain_complex,
    configuration_space,
    euler_characteristic,
    from_generators,
    homology,
    induced_map,
    matrix_rank_over,
    path_graph,
    smith_normal_form,
    validate_simplicial_map,
)
from graphburning.exactlinalg import (
    FieldOps,
    determinantal_divisor_snf,
    field_rank,
    mat_mul,
    nullspace,
    rref,
    solve_in_span,
)
from graphburning.homology import boundary_of, chain_map_matrix, homology_to_record

from conftest import complexes

HOLLOW_TRIANGLE = SimplicialComplex(3, frozenset({(0, 1), (0, 2), (1, 2)}))
FULL_TRIANGLE = SimplicialComplex(3, frozenset({(0, 1, 2)}))
TETRA_BOUNDARY = from_generators(
    4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])
# A 6-vertex triangulation of the projective plane: 10 triangles, every one
# of the 15 edges shared by exactly two of them.
PROJECTIVE_PLANE = from_generators(6, [
    (0, 1, 2), (0, 2, 3), (0, 1, 5), (0, 3, 4), (0, 4, 5),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5)])


# ---------------------------------------------------------------------------
# Exact linear algebra


def test_smith_normal_form_known_values():
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == (2, 4)
    assert smith_normal_form([[1, 0], [0, 0]]).diagonal == (1,)
    assert smith_normal_form([[0, 0], [0, 0]]).diagonal == ()
    assert smith_normal_form([[3]]).diagonal == (3,)
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)


def test_smith_form_rejects_broken_chain():
    with pytest.raises(AssertionError):
        SmithForm((4, 2), 2)


@given(st.integers(1, 4), st.integers(1, 4), st.data())
@settings(max_examples=100, deadline=None)
def test_smith_vs_minor_gcd_oracle(rows, cols, data):
    m = [[data.draw(st.integers(-9, 9)) for _ in range(cols)]
         for _ in range(rows)]
    assert smith_normal_form(m) == determinantal_divisor_snf(m)


def test_field_ops():
    q = FieldOps()
    f5 = FieldOps(5)
    assert f5.div(1, 2) == 3
    assert q.div(1, 2) * 2 == 1
    with pytest.raises(ValueError):
        FieldOps(6)


def test_rref_and_nullspace():
    ops = FieldOps()
    m = [[1, 2, 3], [2, 4, 6]]
    _, pivots = rref(m, ops)
    assert pivots == [0]
    assert field_rank(m, ops) == 1
    for vec in nullspace(m, ops):
        assert all(sum(m[i][j] * vec[j] for j in range(3)) == 0 for i in range(2))
    assert solve_in_span([[1, 0], [0, 1]], [3, 4], ops) == [3, 4]
    assert solve_in_span([[1, 0]], [0, 1], ops) is None


# ---------------------------------------------------------------------------
# Chain complexes


def test_boundary_signs():
    assert boundary_of((0, 1, 2)) == [((1, 2), 1), ((0, 2), -1), ((0, 1), 1)]
    assert boundary_of((4,)) == [((), 1)]


def test_chain_complex_of_hollow_triangle():
    cc = chain_complex(HOLLOW_TRIANGLE)
    assert cc.dims == (3, 3)
    assert cc.boundary(1) == [[-1, -1, 0], [1, 0, -1], [0, 1, 1]]
    assert cc.boundary(0) == []
    assert cc.boundary(5) == []


def test_augmented_chain_complex():
    cc = chain_complex(HOLLOW_TRIANGLE, augmented=True)
    assert cc.boundary(0) == [[1, 1, 1]]
    product = mat_mul(cc.boundary(0), cc.boundary(1))
    assert all(x == 0 for row in product for x in row)


@given(complexes())
@settings(max_examples=50, deadline=None)
def test_boundary_squared_zero(c):
    cc = chain_complex(c)
    for q in range(1, len(cc.dims)):
        lower, upper = cc.boundary(q - 1), cc.boundary(q)
        if lower and upper and upper[0]:
            assert all(x == 0 for row in mat_mul(lower, upper) for x in row)


# ---------------------------------------------------------------------------
# Homology groups


def test_homology_group_formatting():
    assert str(HomologyGroup(0)) == "0"
    assert str(HomologyGroup(1)) == "Z"
    assert str(HomologyGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert HomologyGroup(0).is_trivial
    with pytest.raises(AssertionError):
        HomologyGroup(1, (4, 2))


def test_homology_of_standard_spaces():
    assert [str(h) for h in homology(FULL_TRIANGLE)] == ["Z", "0", "0"]
    assert [str(h) for h in homology(HOLLOW_TRIANGLE)] == ["Z", "Z"]
    assert [str(h) for h in homology(TETRA_BOUNDARY)] == ["Z", "0", "Z"]


def test_homology_torsion_of_projective_plane():
    groups = homology(PROJECTIVE_PLANE)
    assert [str(h) for h in groups] == ["Z", "Z/2", "0"]
    # Over the rationals the torsion disappears; mod 2 it spreads out.
    assert [h.free_rank for h in homology(PROJECTIVE_PLANE, coeff="q")] == [1, 0, 0]
    assert [h.free_rank for h in homology(PROJECTIVE_PLANE, coeff="p:2")] == [1, 1, 1]
    assert [h.free_rank for h in homology(PROJECTIVE_PLANE, coeff="p:3")] == [1, 0, 0]


def test_reduced_homology():
    groups = homology(TETRA_BOUNDARY, reduced=True)
    assert [str(h) for h in groups] == ["0", "0", "Z"]


@given(complexes())
@settings(max_examples=40, deadline=None)
def test_reduced_drops_one_component(c):
    plain = homology(c)
    reduced = homology(c, reduced=True)
    assert reduced[0].free_rank == plain[0].free_rank - 1
    assert reduced[1:] == plain[1:]


@given(complexes())
@settings(max_examples=40, deadline=None)
def test_euler_characteristic_consistency(c):
    chi = euler_characteristic(c)
    assert chi == sum((-1) ** q * h.free_rank for q, h in enumerate(homology(c)))
    rational = homology(c, coeff="q")
    assert chi == sum((-1) ** q * h.free_rank for q, h in enumerate(rational))


def test_coefficient_parsing():
    with pytest.raises(ValueError):
        homology(FULL_TRIANGLE, coeff="r")
    with pytest.raises(ValueError):
        homology(FULL_TRIANGLE, coeff="p:6")


def test_homology_record():
    records = homology_to_record(homology(PROJECTIVE_PLANE))
    assert records[1] == {"degree": 1, "free_rank": 0, "torsion": [2]}
    rational = homology_to_record(homology(PROJECTIVE_PLANE, coeff="q"), "q")
    assert rational[0]["field"] == "Q"


def test_homology_of_burning_configuration_spaces():
    table = {n: [str(h) for h in homology(configuration_space(path_graph(n)))]
             for n in range(1, 6)}
    assert table == {1: ["Z"], 2: ["Z^2"], 3: ["Z^2", "0"], 4: ["Z", "0"],
                     5: ["Z", "Z", "0"]}


# ---------------------------------------------------------------------------
# Induced maps


def test_chain_map_collapse():
    point = SimplicialComplex(1, frozenset({(0,)}))
    squash = validate_simplicial_map((0, 0, 0), HOLLOW_TRIANGLE, point)
    assert chain_map_matrix(squash, 1) == []
    assert chain_map_matrix(squash, 0) == [[1, 1, 1]]


def test_induced_map_rotation_and_reflection():
    rotate = validate_simplicial_map((1, 2, 0), HOLLOW_TRIANGLE, HOLLOW_TRIANGLE)
    reflect = validate_simplicial_map((0, 2, 1), HOLLOW_TRIANGLE, HOLLOW_TRIANGLE)
    from fractions import Fraction
    assert induced_map(rotate, 1) == [[Fraction(1)]]
    assert induced_map(reflect, 1) == [[Fraction(-1)]]
    assert matrix_rank_over(induced_map(rotate, 1)) == 1


def test_induced_map_kills_filled_cycle():
    inclusion = validate_simplicial_map((0, 1, 2), HOLLOW_TRIANGLE, FULL_TRIANGLE)
    assert induced_map(inclusion, 1) == []  # target H_1 is trivial
    assert induced_map(inclusion, 0) == [[1]]


def test_induced_map_mod_two():
    ident = validate_simplicial_map(tuple(range(6)), PROJECTIVE_PLANE,
                                    PROJECTIVE_PLANE)
    assert induced_map(ident, 1, coeff="p:2") == [[1]]
    with pytest.raises(ValueError):
        induced_map(ident, 1, coeff="z")
