import random

import pytest

from four_subspace.exactfield import FieldSpec
from four_subspace.exactmatrix import (
    Matrix,
    direct_sum as matrix_direct_sum,
    identity,
    inverse,
    jordan_plus,
    random_invertible,
    random_matrix,
    zero,
)
from four_subspace.exceptions import (
    DimensionMismatchError,
    NotIdempotentError,
    ShapeError,
)
from four_subspace.linrel import (
    PairRelObj,
    RelMorphism,
    RelObj,
    direct_sum_relations,
    full_relation,
    make_pair_relation,
    make_relation,
    pair_direct_sum,
    random_pair_relation,
    random_relation,
    rel_canonical,
    rel_change_basis,
    rel_compose,
    rel_decompose,
    rel_direct_sum,
    rel_dual,
    rel_from_operator,
    rel_hom_basis,
    rel_identity,
    rel_inverse,
    rel_is_epimorphism,
    rel_is_isomorphic,
    rel_is_monomorphism,
    rel_is_morphism,
    rel_morphism_compose,
    rel_split_idempotent,
    shift_relation,
    zero_relation,
)

F2 = FieldSpec(2)
F3 = FieldSpec(3)


def test_basis_must_have_full_rank():
    with pytest.raises(ShapeError):
        RelObj(F2, 1, 1, Matrix.from_rows(F2, [[1, 1], [0, 0]]))
    with pytest.raises(ShapeError):
        RelObj(F2, 1, 1, identity(3, F2))


def test_equality_is_by_span():
    a = make_relation(F3, 1, 1, Matrix.from_rows(F3, [[1, 2], [1, 2]]))
    b = RelObj(F3, 1, 1, Matrix.from_rows(F3, [[2], [2]]))
    assert a == b
    assert hash(a) == hash(b)
    assert rel_canonical(a) == a
    assert a.dim == 1


def test_graph_composition():
    rng = random.Random(0)
    f = random_matrix(2, 3, F3, rng)
    g = random_matrix(4, 2, F3, rng)
    composed = rel_compose(rel_from_operator(g), rel_from_operator(f))
    assert composed == rel_from_operator(g @ f)
    with pytest.raises(DimensionMismatchError):
        rel_compose(rel_from_operator(f), rel_from_operator(f))


def test_inverse_of_graph():
    rng = random.Random(1)
    f = random_invertible(3, F3, rng)
    f_inv = inverse(f)
    assert rel_inverse(rel_from_operator(f)) == rel_from_operator(f_inv)


@pytest.mark.parametrize('seed', range(100))
def test_dual_dimension_and_involution(seed):
    rng = random.Random(seed)
    dim1, dim2 = rng.randint(0, 3), rng.randint(0, 3)
    size = rng.randint(0, dim1 + dim2)
    rho = random_relation(dim1, dim2, size, F3, rng)
    dual = rel_dual(rho)
    assert dual.dim == dim1 + dim2 - rho.dim
    assert rel_dual(dual) == rho


@pytest.mark.parametrize('seed', range(100))
def test_composition_is_associative(seed):
    rng = random.Random(seed)
    d = [rng.randint(0, 2) for _ in range(4)]
    r, s, t = (
        random_relation(
            d[i], d[i + 1], rng.randint(0, d[i] + d[i + 1]), F2, rng
        )
        for i in range(3)
    )
    assert rel_compose(t, rel_compose(s, r)) == rel_compose(
        rel_compose(t, s), r
    )


def test_shift_relation():
    rho = shift_relation(2, F2)
    assert rho.dim1 == rho.dim2 == 3
    assert rho.dim == 2
    assert shift_relation(0, F2) == zero_relation(F2, 1, 1)


def test_direct_sums():
    a = rel_from_operator(identity(1, F2))
    b = zero_relation(F2, 2, 1)
    total = rel_direct_sum(a, b)
    assert (total.dim1, total.dim2, total.dim) == (3, 2, 1)
    pair = PairRelObj(F2, 1, 1, a.basis, full_relation(F2, 1, 1).basis)
    doubled = pair_direct_sum(pair, pair)
    assert [m.cols for m in doubled.bases] == [2, 4]
    assert direct_sum_relations([pair, pair]) == doubled
    assert direct_sum_relations([a, b, a]).dim == 2


def test_pair_from_spanning_matrices():
    spanning = Matrix.from_rows(F2, [[1, 1, 0], [1, 1, 0]])
    pair = make_pair_relation(F2, 1, 1, spanning, identity(2, F2))
    assert [m.cols for m in pair.bases] == [1, 2]
    with pytest.raises(ShapeError):
        make_pair_relation(F2, 1, 2, spanning, identity(2, F2))


def test_hom_and_morphisms():
    rho = rel_from_operator(jordan_plus(2, F3))
    basis = rel_hom_basis(rho, rho, one_space=True)
    # Maps commuting with the nilpotent block: polynomials in it.
    assert len(basis) == 2
    for m in basis:
        assert m.f1 == m.f2
        assert rel_is_morphism(m)
    one = rel_identity(rho)
    assert rel_morphism_compose(one, one) == one
    assert len(rel_hom_basis(rho, rho)) > len(basis)


def test_mono_epi_not_iso():
    source = zero_relation(F2, 1, 1)
    target = full_relation(F2, 1, 1)
    m = RelMorphism(source, target, identity(1, F2), identity(1, F2))
    assert rel_is_morphism(m)
    assert rel_is_monomorphism(m)
    assert rel_is_epimorphism(m)
    assert not rel_is_isomorphic(source, target)


def test_isomorphism_on_one_space():
    rng = random.Random(4)
    j = jordan_plus(3, F3)
    g = random_invertible(3, F3, rng)
    conjugate = g @ j @ inverse(g)
    assert rel_is_isomorphic(
        rel_from_operator(j), rel_from_operator(conjugate), one_space=True
    )
    assert not rel_is_isomorphic(
        rel_from_operator(j), rel_from_operator(zero(3, 3, F3)), one_space=True
    )


def test_split_idempotent():
    rho = rel_from_operator(identity(2, F3))
    projector = Matrix.from_rows(F3, [[1, 0], [0, 0]])
    e = RelMorphism(rho, rho, projector, projector)
    sigma, p, q = rel_split_idempotent(rho, e)
    assert sigma == rel_from_operator(identity(1, F3))
    assert rel_morphism_compose(q, p).f1 == projector
    assert rel_morphism_compose(p, q) == rel_identity(sigma)
    with pytest.raises(NotIdempotentError):
        twice = Matrix.from_rows(F3, [[2, 0], [0, 2]])
        rel_split_idempotent(rho, RelMorphism(rho, rho, twice, twice))


def test_decompose_relation():
    rho = rel_from_operator(identity(2, F2))
    [(piece, count)] = rel_decompose(rho)
    assert count == 2
    assert piece == rel_from_operator(identity(1, F2))
    with pytest.raises(DimensionMismatchError):
        rel_decompose(zero_relation(F2, 1, 2))


def test_decompose_pair():
    rng = random.Random(9)
    pair = random_pair_relation(2, 1, (1, 2), F3, rng)
    pieces = rel_decompose(pair)
    assert sum(p.dim1 * c for p, c in pieces) == 2
    assert sum(p.dim2 * c for p, c in pieces) == 1


@pytest.mark.parametrize('seed', range(100))
def test_split_conjugated_projections(seed):
    rng = random.Random(seed)
    field = F2 if seed % 2 else F3
    d1, d2 = rng.randint(1, 2), rng.randint(1, 2)
    a = random_relation(d1, d2, rng.randint(0, d1 + d2), field, rng)
    b = random_relation(d2, d1, rng.randint(0, d1 + d2), field, rng)
    rho = rel_direct_sum(a, b)
    e1 = matrix_direct_sum(identity(d1, field), zero(d2, d2, field))
    e2 = matrix_direct_sum(identity(d2, field), zero(d1, d1, field))
    g1 = random_invertible(rho.dim1, field, rng)
    g2 = random_invertible(rho.dim2, field, rng)
    moved = rel_change_basis(rho, g1, g2)
    e = RelMorphism(
        moved, moved, g1 @ e1 @ inverse(g1), g2 @ e2 @ inverse(g2)
    )
    assert rel_is_morphism(e)
    sigma, p, q = rel_split_idempotent(moved, e)
    qp = rel_morphism_compose(q, p)
    assert (qp.f1, qp.f2) == (e.f1, e.f2)
    assert rel_morphism_compose(p, q) == rel_identity(sigma)
    assert rel_is_isomorphic(sigma, a)


def test_change_basis():
    rho = rel_from_operator(jordan_plus(2, F3))
    g = Matrix.from_rows(F3, [[1, 1], [0, 1]])
    moved = rel_change_basis(rho, g, identity(2, F3))
    assert rel_is_morphism(RelMorphism(rho, moved, g, identity(2, F3)))
    assert rel_is_isomorphic(rho, moved)
    assert rel_change_basis(rho, identity(2, F3), identity(2, F3)) == rho
    with pytest.raises(DimensionMismatchError):
        rel_change_basis(rho, identity(3, F3), identity(2, F3))
