"""Linear relations: one relation ``R`` in ``V1 + V2`` or a pair of them.

A relation is stored by a full column rank basis matrix whose first
``dim1`` rows are ``V1`` coordinates. Two relations are equal when they
span the same subspace.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass, field as dc_field
from typing import Union

from .exactfield import FieldSpec
from .exactmatrix import (
    Matrix,
    column_basis,
    direct_sum as matrix_direct_sum,
    hstack,
    i_down,
    i_up,
    identity,
    is_injective,
    is_surjective,
    kernel_basis,
    random_invertible,
    random_matrix,
    rank,
    rref,
    solve,
    vstack,
    zero,
)
from .exceptions import (
    DimensionMismatchError,
    FieldMismatchError,
    ImagePullbackError,
    NotIdempotentError,
    ShapeError,
    SourceMismatchError,
    WitnessVerificationError,
)
from .quiverrep import search_invertible

logger = logging.getLogger(__name__)


def _canonical(basis: Matrix) -> tuple:
    """Span invariant: the nonzero rows of rref(basis^T)."""
    reduced, r, _ = rref(basis.T)
    return reduced.entries[:r * reduced.cols]


def _check_basis(basis: Matrix, dim1: int, dim2: int, label: str = 'R'):
    if dim1 < 0 or dim2 < 0:
        raise ShapeError(f'Negative space dimension in ({dim1}, {dim2}).')
    if basis.rows != dim1 + dim2:
        raise ShapeError(
            f'Relation {label} needs {dim1 + dim2} rows, got {basis.rows}.'
        )
    if rank(basis) != basis.cols:
        raise ShapeError(f'Basis of relation {label} is not of full rank.')


@dataclass(frozen=True, eq=False)
class RelObj:
    """A relation ``R`` in ``V1 + V2`` given by basis columns."""

    field: FieldSpec
    dim1: int
    dim2: int
    basis: Matrix
    key: tuple = dc_field(init=False, repr=False)

    def __post_init__(self):
        _check_basis(self.basis, self.dim1, self.dim2)
        object.__setattr__(self, 'key', _canonical(self.basis))

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def top(self) -> Matrix:
        return self.basis.block(0, self.dim1, 0, self.basis.cols)

    @property
    def bottom(self) -> Matrix:
        return self.basis.block(
            self.dim1, self.basis.rows, 0, self.basis.cols
        )

    @property
    def bases(self) -> tuple[Matrix, ...]:
        return (self.basis,)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RelObj):
            return NotImplemented
        return (self.field, self.dim1, self.dim2, self.key) == (
            other.field,
            other.dim1,
            other.dim2,
            other.key,
        )

    def __hash__(self) -> int:
        return hash((self.field, self.dim1, self.dim2, self.key))


@dataclass(frozen=True, eq=False)
class PairRelObj:
    """Two relations ``R1`` and ``R2`` in the same ``V1 + V2``."""

    field: FieldSpec
    dim1: int
    dim2: int
    basis1: Matrix
    basis2: Matrix
    key: tuple = dc_field(init=False, repr=False)

    def __post_init__(self):
        _check_basis(self.basis1, self.dim1, self.dim2, 'R1')
        _check_basis(self.basis2, self.dim1, self.dim2, 'R2')
        object.__setattr__(
            self, 'key', (_canonical(self.basis1), _canonical(self.basis2))
        )

    @property
    def bases(self) -> tuple[Matrix, ...]:
        return self.basis1, self.basis2

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairRelObj):
            return NotImplemented
        return (self.field, self.dim1, self.dim2, self.key) == (
            other.field,
            other.dim1,
            other.dim2,
            other.key,
        )

    def __hash__(self) -> int:
        return hash((self.field, self.dim1, self.dim2, self.key))


Relation = Union[RelObj, PairRelObj]


@dataclass(frozen=True)
class RelMorphism:
    source: Relation
    target: Relation
    f1: Matrix
    f2: Matrix

    @property
    def comps(self) -> tuple[Matrix, Matrix]:
        return self.f1, self.f2


def make_relation(
    field: FieldSpec, dim1: int, dim2: int, matrix: Matrix
) -> RelObj:
    """The relation spanned by the columns of ``matrix`` (any rank)."""
    if matrix.rows != dim1 + dim2:
        raise ShapeError(
            f'Relation needs {dim1 + dim2} rows, got {matrix.rows}.'
        )
    return RelObj(field, dim1, dim2, column_basis(matrix))


def make_pair_relation(
    field: FieldSpec, dim1: int, dim2: int, first: Matrix, second: Matrix
) -> PairRelObj:
    for m in (first, second):
        if m.rows != dim1 + dim2:
            raise ShapeError(
                f'Relation needs {dim1 + dim2} rows, got {m.rows}.'
            )
    return PairRelObj(
        field, dim1, dim2, column_basis(first), column_basis(second)
    )


def _with_bases(obj: Relation, dim1: int, dim2: int, bases) -> Relation:
    if isinstance(obj, PairRelObj):
        return PairRelObj(obj.field, dim1, dim2, *bases)
    return RelObj(obj.field, dim1, dim2, bases[0])


def rel_change_basis(obj: Relation, g1: Matrix, g2: Matrix) -> Relation:
    """The image of ``obj`` under invertible ``g1`` on ``V1`` and ``g2`` on
    ``V2``; ``(g1, g2)`` is an isomorphism onto it."""
    if (g1.rows, g2.rows) != (obj.dim1, obj.dim2):
        raise DimensionMismatchError(
            f'Basis change of shape ({g1.rows}, {g2.rows}) on spaces '
            f'({obj.dim1}, {obj.dim2}).'
        )
    move = matrix_direct_sum(g1, g2)
    return _with_bases(
        obj, obj.dim1, obj.dim2, [move @ b for b in obj.bases]
    )


def random_rel_basis_change(
    obj: Relation, rng: random.Random, one_space: bool = False
) -> Relation:
    g1 = random_invertible(obj.dim1, obj.field, rng)
    g2 = g1 if one_space else random_invertible(obj.dim2, obj.field, rng)
    return rel_change_basis(obj, g1, g2)


def rel_canonical(obj: Relation) -> Relation:
    """Same object with each basis replaced by the rref basis of its span."""
    bases = []
    for b in obj.bases:
        reduced, r, _ = rref(b.T)
        bases.append(reduced.block(0, r, 0, reduced.cols).T)
    return _with_bases(obj, obj.dim1, obj.dim2, bases)


def rel_from_operator(f: Matrix) -> RelObj:
    """The graph ``{(x, f x)}`` of a linear map."""
    return RelObj(
        f.field, f.cols, f.rows, vstack(identity(f.cols, f.field), f)
    )


def zero_relation(field: FieldSpec, dim1: int, dim2: int) -> RelObj:
    return RelObj(field, dim1, dim2, zero(dim1 + dim2, 0, field))


def full_relation(field: FieldSpec, dim1: int, dim2: int) -> RelObj:
    return RelObj(field, dim1, dim2, identity(dim1 + dim2, field))


def shift_relation(n: int, field: FieldSpec) -> RelObj:
    """``{((0, a1, ..., an), (a1, ..., an, 0))}`` on ``k^(n+1)``."""
    if n < 0:
        raise ValueError(f'Wrong parameter n={n}, expected n >= 0.')
    basis = vstack(i_up(n, field), i_down(n, field))
    return RelObj(field, n + 1, n + 1, basis)


def rel_inverse(rho: RelObj) -> RelObj:
    return RelObj(rho.field, rho.dim2, rho.dim1, vstack(rho.bottom, rho.top))


def rel_compose(sigma: RelObj, rho: RelObj) -> RelObj:
    """``sigma`` after ``rho``: pairs ``(x, z)`` with ``x rho y sigma z``."""
    if sigma.field != rho.field:
        raise FieldMismatchError(
            f'Relations over {rho.field} and {sigma.field}.'
        )
    if rho.dim2 != sigma.dim1:
        raise DimensionMismatchError(
            f'Cannot compose: middle spaces have dimensions {rho.dim2} '
            f'and {sigma.dim1}.'
        )
    # Coefficient pairs (a, b) with rho_bottom a = sigma_top b.
    kernel = kernel_basis(hstack(rho.bottom, -sigma.top))
    a = kernel.block(0, rho.dim, 0, kernel.cols)
    b = kernel.block(rho.dim, kernel.rows, 0, kernel.cols)
    return make_relation(
        rho.field,
        rho.dim1,
        sigma.dim2,
        vstack(rho.top @ a, sigma.bottom @ b),
    )


def rel_dual(rho: RelObj) -> RelObj:
    """Pairs of functionals ``(f, g)`` with ``f(x) = g(y)`` whenever
    ``x R y``; ``dim R* = dim1 + dim2 - dim R``."""
    pairing = hstack(rho.top.T, -(rho.bottom.T))
    return RelObj(rho.field, rho.dim1, rho.dim2, kernel_basis(pairing))


def rel_direct_sum(rho: RelObj, sigma: RelObj) -> RelObj:
    if rho.field != sigma.field:
        raise FieldMismatchError(
            f'Relations over {rho.field} and {sigma.field}.'
        )
    basis = vstack(
        matrix_direct_sum(rho.top, sigma.top),
        matrix_direct_sum(rho.bottom, sigma.bottom),
    )
    return RelObj(
        rho.field, rho.dim1 + sigma.dim1, rho.dim2 + sigma.dim2, basis
    )


def _blocks(basis: Matrix, dim1: int) -> tuple[Matrix, Matrix]:
    return (
        basis.block(0, dim1, 0, basis.cols),
        basis.block(dim1, basis.rows, 0, basis.cols),
    )


def pair_direct_sum(rho: PairRelObj, sigma: PairRelObj) -> PairRelObj:
    if rho.field != sigma.field:
        raise FieldMismatchError(
            f'Relations over {rho.field} and {sigma.field}.'
        )
    bases = []
    for left, right in zip(rho.bases, sigma.bases):
        l_top, l_bottom = _blocks(left, rho.dim1)
        r_top, r_bottom = _blocks(right, sigma.dim1)
        bases.append(
            vstack(
                matrix_direct_sum(l_top, r_top),
                matrix_direct_sum(l_bottom, r_bottom),
            )
        )
    return PairRelObj(
        rho.field, rho.dim1 + sigma.dim1, rho.dim2 + sigma.dim2, *bases
    )


def direct_sum_relations(objs: Sequence[Relation]) -> Relation:
    result = objs[0]
    for obj in objs[1:]:
        if isinstance(result, PairRelObj):
            result = pair_direct_sum(result, obj)
        else:
            result = rel_direct_sum(result, obj)
    return result


def _check_kinds(rho: Relation, sigma: Relation):
    if type(rho) is not type(sigma):
        raise SourceMismatchError(
            f'Cannot relate {type(rho).__name__} and {type(sigma).__name__}.'
        )
    if rho.field != sigma.field:
        raise FieldMismatchError(
            f'Relations over {rho.field} and {sigma.field}.'
        )


def _annihilator(m: Matrix) -> Matrix:
    """Rows spanning the functionals that vanish on the columns of ``m``."""
    return kernel_basis(m.T).T


def rel_hom_basis(
    rho: Relation, sigma: Relation, one_space: bool = False
) -> list[RelMorphism]:
    """A basis of the morphisms ``rho -> sigma``.

    With ``one_space`` both spaces carry the same map, as in the category
    of one relation on one space.
    """
    _check_kinds(rho, sigma)
    f = rho.field
    if one_space and (rho.dim1 != rho.dim2 or sigma.dim1 != sigma.dim2):
        raise DimensionMismatchError(
            'One-space morphisms need relations on a single space.'
        )
    size1 = sigma.dim1 * rho.dim1
    size2 = sigma.dim2 * rho.dim2
    offset2 = 0 if one_space else size1
    total = size1 if one_space else size1 + size2
    equations = []
    for source, target in zip(rho.bases, sigma.bases):
        top, bottom = _blocks(source, rho.dim1)
        q = _annihilator(target)
        q1 = q.block(0, q.rows, 0, sigma.dim1)
        q2 = q.block(0, q.rows, sigma.dim1, q.cols)
        # Q1 f1 top + Q2 f2 bottom = 0, entrywise in f1 and f2.
        for i in range(q1.rows):
            for j in range(source.cols):
                eq = [f.zero] * total
                for a in range(sigma.dim1):
                    for b in range(rho.dim1):
                        c = f.mul(q1[i, a], top[b, j])
                        if c:
                            idx = a * rho.dim1 + b
                            eq[idx] = f.add(eq[idx], c)
                for a in range(sigma.dim2):
                    for b in range(rho.dim2):
                        c = f.mul(q2[i, a], bottom[b, j])
                        if c:
                            idx = offset2 + a * rho.dim2 + b
                            eq[idx] = f.add(eq[idx], c)
                equations.append(eq)
    if total == 0:
        return []
    kernel = kernel_basis(Matrix.from_rows(f, equations, total))
    basis = []
    for j in range(kernel.cols):
        column = kernel.column(j)
        f1 = Matrix(f, sigma.dim1, rho.dim1, column[:size1])
        f2 = Matrix(
            f, sigma.dim2, rho.dim2, column[offset2:offset2 + size2]
        )
        basis.append(RelMorphism(rho, sigma, f1, f2))
    return basis


def rel_is_morphism(m: RelMorphism) -> bool:
    for source, target in zip(m.source.bases, m.target.bases):
        top, bottom = _blocks(source, m.source.dim1)
        image = vstack(m.f1 @ top, m.f2 @ bottom)
        if solve(target, image) is None:
            return False
    return True


def rel_identity(rho: Relation) -> RelMorphism:
    return RelMorphism(
        rho, rho, identity(rho.dim1, rho.field), identity(rho.dim2, rho.field)
    )


def rel_morphism_compose(g: RelMorphism, f: RelMorphism) -> RelMorphism:
    """``g`` after ``f``."""
    if f.target != g.source:
        raise SourceMismatchError('Relation morphisms are not composable.')
    return RelMorphism(f.source, g.target, g.f1 @ f.f1, g.f2 @ f.f2)


def rel_is_monomorphism(m: RelMorphism) -> bool:
    return is_injective(m.f1) and is_injective(m.f2)


def rel_is_epimorphism(m: RelMorphism) -> bool:
    return is_surjective(m.f1) and is_surjective(m.f2)


def _rel_functor_id(obj: Relation) -> int:
    return 6 if isinstance(obj, PairRelObj) else 5


def as_pair(rho: RelObj) -> PairRelObj:
    """``rho`` together with the zero relation; morphisms are unchanged."""
    empty = zero(rho.basis.rows, 0, rho.field)
    return PairRelObj(rho.field, rho.dim1, rho.dim2, rho.basis, empty)


def rel_is_isomorphic(
    rho: Relation, sigma: Relation, one_space: bool = False, seed: int = 0
) -> bool:
    """Whether an isomorphism with invertible ``f1`` and ``f2`` exists."""
    _check_kinds(rho, sigma)
    if (rho.dim1, rho.dim2) != (sigma.dim1, sigma.dim2):
        return False
    if [b.cols for b in rho.bases] != [b.cols for b in sigma.bases]:
        return False
    basis = rel_hom_basis(rho, sigma, one_space)
    comps = [(m.f1,) if one_space else m.comps for m in basis]
    search = search_invertible(comps, rho.field, seed)
    if search.found is not None or search.certified:
        return search.found is not None
    from .functors import apply_functor
    from .quiverrep import is_isomorphic

    logger.debug('Relation isomorphism decided in rep F.')
    if isinstance(rho, RelObj) and isinstance(sigma, RelObj) and not one_space:
        rho, sigma = as_pair(rho), as_pair(sigma)
    functor = _rel_functor_id(rho)
    return is_isomorphic(
        apply_functor(functor, rho), apply_functor(functor, sigma), seed
    )


def rel_split_idempotent(
    rho: Relation, e: RelMorphism
) -> tuple[Relation, RelMorphism, RelMorphism]:
    """Splits an idempotent endomorphism ``e`` of ``rho`` as ``e = q p``.

    Returns ``(sigma, p, q)`` with ``sigma`` carried by the images of
    ``e`` and ``p q`` the identity of ``sigma``.
    """
    if e.source != rho or e.target != rho:
        raise SourceMismatchError('Idempotent must be an endomorphism of rho.')
    if not rel_is_morphism(e):
        raise NotIdempotentError('The given maps do not preserve the relation.')
    if e.f1 @ e.f1 != e.f1 or e.f2 @ e.f2 != e.f2:
        raise NotIdempotentError('The given endomorphism is not idempotent.')
    c1, c2 = column_basis(e.f1), column_basis(e.f2)
    p1, p2 = solve(c1, e.f1), solve(c2, e.f2)
    if p1 is None or p2 is None:
        raise WitnessVerificationError('Image factorization failed.')
    inclusion = matrix_direct_sum(c1, c2)
    bases = []
    for b in rho.bases:
        top, bottom = _blocks(b, rho.dim1)
        coords = solve(inclusion, vstack(e.f1 @ top, e.f2 @ bottom))
        if coords is None:
            raise WitnessVerificationError('Image relation leaves Im e.')
        bases.append(column_basis(coords))
    sigma = _with_bases(rho, c1.cols, c2.cols, bases)
    p = RelMorphism(rho, sigma, p1, p2)
    q = RelMorphism(sigma, rho, c1, c2)
    if not (rel_is_morphism(p) and rel_is_morphism(q)):
        raise WitnessVerificationError('Split maps are not morphisms.')
    if c1 @ p1 != e.f1 or c2 @ p2 != e.f2:
        raise WitnessVerificationError('q p differs from e.')
    if p1 @ c1 != identity(c1.cols, rho.field) or p2 @ c2 != identity(
        c2.cols, rho.field
    ):
        raise WitnessVerificationError('p q is not the identity.')
    return sigma, p, q


def rel_decompose(
    obj: Relation, seed: int = 0
) -> list[tuple[Relation, int]]:
    """Indecomposable summands via the embedding into representations of F.

    A single relation must live on one space; pairs of relations may
    relate two different spaces.
    """
    from .functors import apply_functor, in_image
    from .quiverrep import decompose

    functor = _rel_functor_id(obj)
    if functor == 5 and obj.dim1 != obj.dim2:
        raise DimensionMismatchError(
            f'A single relation decomposes on one space, got dimensions '
            f'({obj.dim1}, {obj.dim2}).'
        )
    summands = []
    for piece, count in decompose(apply_functor(functor, obj), seed):
        membership = in_image(functor, piece)
        if not membership.member:
            raise ImagePullbackError(
                f'Summand {piece.dims} is not in the image of F{functor}: '
                f'{membership.reason}.'
            )
        summands.append((membership.witness, count))
    return summands


def random_relation(
    dim1: int,
    dim2: int,
    size: int,
    field: FieldSpec,
    rng: random.Random,
) -> RelObj:
    """A uniformly drawn basis of a ``size``-dimensional relation."""
    if not 0 <= size <= dim1 + dim2:
        raise ValueError(
            f'Wrong parameter size={size}, expected 0..{dim1 + dim2}.'
        )
    while True:
        m = random_matrix(dim1 + dim2, size, field, rng)
        if rank(m) == size:
            return RelObj(field, dim1, dim2, m)


def random_pair_relation(
    dim1: int,
    dim2: int,
    sizes: tuple[int, int],
    field: FieldSpec,
    rng: random.Random,
) -> PairRelObj:
    first = random_relation(dim1, dim2, sizes[0], field, rng)
    second = random_relation(dim1, dim2, sizes[1], field, rng)
    return PairRelObj(field, dim1, dim2, first.basis, second.basis)
