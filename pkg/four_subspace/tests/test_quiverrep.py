import random

import pytest

from four_subspace.exactfield import RATIONALS, FieldSpec
from four_subspace.exactmatrix import (
    Matrix,
    hstack,
    identity,
    is_invertible,
    jordan_plus,
    zero,
)
from four_subspace.exceptions import (
    QuiverMismatchError,
    ShapeError,
    ZeroObjectError,
)
from four_subspace import quiverrep
from four_subspace.quiverrep import (
    InvertibleSearch,
    RepMorphism,
    combine,
    compose_morphisms,
    decompose,
    direct_sum,
    direct_sum_all,
    end_dim,
    fingerprint,
    hom_basis,
    identity_morphism,
    indecomposability,
    is_indecomposable,
    is_isomorphic,
    is_morphism,
    iter_dim_vectors,
    make_rep,
    random_basis_change,
    random_rep,
    relabel,
    split,
    zero_rep,
)

F2 = FieldSpec(2)
F3 = FieldSpec(3)


def scalar(x, field=F3):
    return Matrix.from_rows(field, [[x]])


# Kronecker pencils of dimension (1, 1).
K_ZERO_AT_BETA = make_rep('K', (1, 1), (scalar(1), scalar(0)), F3)
K_ZERO_AT_ALPHA = make_rep('K', (1, 1), (scalar(0), scalar(1)), F3)
# Four lines in general position in k^2.
FOUR_LINES = make_rep(
    'F',
    (2, 1, 1, 1, 1),
    [
        Matrix.from_rows(F3, [[1], [0]]),
        Matrix.from_rows(F3, [[0], [1]]),
        Matrix.from_rows(F3, [[1], [1]]),
        Matrix.from_rows(F3, [[1], [2]]),
    ],
    F3,
)


def test_make_rep_checks_shapes():
    with pytest.raises(ShapeError):
        make_rep('K', (1, 2), (scalar(1), scalar(0)), F3)
    with pytest.raises(ShapeError):
        make_rep('K', (1, 1), (scalar(1),), F3)
    with pytest.raises(QuiverMismatchError):
        make_rep('X', (1, 1), (scalar(1), scalar(0)), F3)


def test_make_rep_by_arrow_names():
    v = make_rep('K', (1, 1), {'α': scalar(1), 'beta': scalar(0)}, F3)
    assert v == K_ZERO_AT_BETA
    assert v.map('alpha') == scalar(1)
    assert v.dim(2) == 1


def test_hom_dimensions():
    assert end_dim(K_ZERO_AT_BETA) == 1
    assert hom_basis(K_ZERO_AT_BETA, K_ZERO_AT_ALPHA) == []
    assert end_dim(FOUR_LINES) == 1
    both = direct_sum(K_ZERO_AT_BETA, K_ZERO_AT_ALPHA)
    assert end_dim(both) == 2


def test_hom_basis_elements_are_morphisms():
    rng = random.Random(3)
    v = random_rep('D', (2, 1, 2), F3, rng)
    w = random_rep('D', (1, 2, 2), F3, rng)
    for m in hom_basis(v, w):
        assert is_morphism(m)
    one = identity_morphism(v)
    assert compose_morphisms(one, one) == one


def test_isomorphism_after_basis_change():
    rng = random.Random(0)
    v = random_rep('S', (2, 2, 1, 2), F3, rng)
    w = random_basis_change(v, rng)
    assert is_isomorphic(v, w)
    assert fingerprint(v) == fingerprint(w)
    assert not is_isomorphic(K_ZERO_AT_BETA, K_ZERO_AT_ALPHA)


def test_indecomposable():
    assert is_indecomposable(K_ZERO_AT_BETA)
    assert is_indecomposable(FOUR_LINES)
    kronecker = make_rep(
        'K', (2, 2), (identity(2, F2), jordan_plus(2, F2)), F2
    )
    verdict = indecomposability(kronecker)
    assert verdict.indecomposable and verdict.certified
    with pytest.raises(ZeroObjectError):
        is_indecomposable(zero_rep('K', F2))


def test_split_by_idempotent():
    v = direct_sum(K_ZERO_AT_BETA, K_ZERO_AT_ALPHA)
    projector = RepMorphism(
        v,
        v,
        tuple(
            Matrix.from_rows(F3, [[1, 0], [0, 0]]) for _ in range(2)
        ),
    )
    assert is_morphism(projector)
    splitting = split(v, projector)
    assert splitting is not None
    assert splitting.image.dims == (1, 1)
    assert splitting.kernel.dims == (1, 1)
    assert split(v, identity_morphism(v)) is None


def test_decompose_multiplicities():
    v = direct_sum_all([K_ZERO_AT_BETA, K_ZERO_AT_ALPHA, K_ZERO_AT_BETA])
    v = random_basis_change(v, random.Random(5))
    summands = decompose(v)
    assert sorted(count for _, count in summands) == [1, 2]
    assert sum(rep.total_dim * count for rep, count in summands) == 6
    for rep, count in summands:
        expected = K_ZERO_AT_BETA if count == 2 else K_ZERO_AT_ALPHA
        assert is_isomorphic(rep, expected)


def test_decompose_nilpotent_pencil():
    v = make_rep('K', (2, 2), (identity(2, F2), zero(2, 2, F2)), F2)
    [(piece, count)] = decompose(v)
    assert count == 2
    assert piece.dims == (1, 1)


def test_decompose_over_rationals():
    one = Matrix.from_rows(RATIONALS, [[1]])
    v = make_rep('D', (1, 1, 1), (one, one, one), RATIONALS)
    w = direct_sum(v, v)
    w = random_basis_change(w, random.Random(1))
    [(piece, count)] = decompose(w)
    assert count == 2
    assert is_isomorphic(piece, v)


def test_relabel():
    swapped = relabel(FOUR_LINES, (2, 1, 3, 4))
    assert swapped.mats[0] == FOUR_LINES.mats[1]
    assert relabel(swapped, (2, 1, 3, 4)) == FOUR_LINES
    v = random_rep('S', (1, 2, 2, 1), F2, random.Random(2))
    assert relabel(v, (2, 1, 3, 4)).dims == (2, 1, 2, 1)
    with pytest.raises(QuiverMismatchError):
        relabel(v, (1, 3, 2, 4))


def test_iter_dim_vectors():
    assert list(iter_dim_vectors('K', 2)) == [
        (0, 1),
        (1, 0),
        (0, 2),
        (1, 1),
        (2, 0),
    ]


def _lines(field, *columns):
    mats = [Matrix.from_rows(field, [[a], [b]]) for a, b in columns]
    return make_rep('F', (2, 1, 1, 1, 1), mats, field)


def _without_quick_answers(monkeypatch):
    monkeypatch.setattr(
        quiverrep,
        'search_invertible',
        lambda *args, **kwargs: InvertibleSearch(None, False),
    )
    monkeypatch.setattr(quiverrep, 'rank_profile', lambda v: v.dims)


def test_undecided_search_matches_summands(monkeypatch):
    # Every Hom and End space below has dimension one.
    first_two_equal = _lines(F3, (1, 0), (1, 0), (0, 1), (1, 1))
    last_two_equal = _lines(F3, (1, 0), (0, 1), (1, 1), (1, 1))
    assert len(hom_basis(first_two_equal, last_two_equal)) == 1
    assert len(hom_basis(last_two_equal, first_two_equal)) == 1
    _without_quick_answers(monkeypatch)
    assert not is_isomorphic(first_two_equal, last_two_equal)
    moved = random_basis_change(first_two_equal, random.Random(4))
    assert is_isomorphic(first_two_equal, moved)
    other = random_basis_change(FOUR_LINES, random.Random(1))
    assert is_isomorphic(FOUR_LINES, other)


def test_undecided_search_on_sums(monkeypatch):
    mixed = direct_sum(K_ZERO_AT_BETA, K_ZERO_AT_ALPHA)
    doubled = direct_sum(K_ZERO_AT_BETA, K_ZERO_AT_BETA)
    conjugated = random_basis_change(mixed, random.Random(6))
    _without_quick_answers(monkeypatch)
    assert is_isomorphic(mixed, conjugated)
    assert not is_isomorphic(mixed, doubled)
    assert not is_isomorphic(doubled, conjugated)


def _check_splitting(v, splitting):
    image, kernel = splitting.image, splitting.kernel
    assert not image.is_zero() and not kernel.is_zero()
    for part, bases in (
        (image, splitting.image_bases),
        (kernel, splitting.kernel_bases),
    ):
        for k, arrow in enumerate(v.shape.arrows):
            s = v.shape.index(arrow.source)
            t = v.shape.index(arrow.target)
            assert v.mats[k] @ bases[s] == bases[t] @ part.mats[k]
    for d, a, b in zip(v.dims, splitting.image_bases, splitting.kernel_bases):
        if d:
            assert is_invertible(hstack(a, b))
    assert is_isomorphic(direct_sum(image, kernel), v)


@pytest.mark.parametrize(
    'quiver, left, right',
    [
        ('F', (1, 1, 0, 1, 0), (1, 0, 1, 1, 1)),
        ('S', (1, 1, 1, 0), (1, 1, 0, 1)),
        ('D', (1, 1, 1), (2, 1, 1)),
        ('K', (1, 1), (1, 2)),
        ('C', (1, 1), (2, 1)),
    ],
)
def test_fitting_splittings_are_sound(quiver, left, right):
    for seed in range(20):
        rng = random.Random(seed)
        v = direct_sum(
            random_rep(quiver, left, F3, rng),
            random_rep(quiver, right, F3, rng),
        )
        v = random_basis_change(v, rng)
        verdict = indecomposability(v, seed)
        assert not verdict.indecomposable
        splitting = split(v, verdict.splitter)
        assert splitting is not None
        _check_splitting(v, splitting)
        basis = [b.comps for b in hom_basis(v, v)]
        coeffs = [F3.random_element(rng) for _ in basis]
        phi = RepMorphism(v, v, combine(basis, coeffs, F3))
        other = split(v, phi)
        if other is not None:
            _check_splitting(v, other)


def test_isomorphism_is_an_equivalence():
    rng = random.Random(8)
    pool = [random_rep('K', (2, 2), F2, rng) for _ in range(10)]
    pool += [random_basis_change(v, rng) for v in pool]
    n = len(pool)
    iso = [[is_isomorphic(v, w) for w in pool] for v in pool]
    for i in range(n):
        assert iso[i][i]
        assert iso[i][(i + 10) % n]
        for j in range(n):
            assert iso[i][j] == iso[j][i]
            for k in range(n):
                if iso[i][j] and iso[j][k]:
                    assert iso[i][k]
