"""The six embeddings into representations of F and their essential images.

Every functor realizes ``V0`` as the block sum ``V1 + V2`` with the
``V1`` coordinates first, so ``f_alpha`` and ``f_beta`` become the two
block injections.
"""

from __future__ import annotations

import enum
import logging
import random
from collections.abc import Sequence
from dataclasses import dataclass, field as dc_field
from typing import Any, NamedTuple, Optional, Union

from .exactfield import FieldSpec
from .exactmatrix import (
    Matrix,
    block_matrix,
    direct_sum as matrix_direct_sum,
    from_columns,
    hstack,
    identity,
    inverse,
    is_injective,
    is_invertible,
    random_matrix,
    rank,
    solve,
    vstack,
    zero,
)
from .exceptions import (
    NotInC5Error,
    QuiverMismatchError,
    RestrictionNotContainedError,
    SourceMismatchError,
    WitnessVerificationError,
)
from .linrel import (
    PairRelObj,
    RelMorphism,
    RelObj,
    rel_hom_basis,
)
from .quiverrep import Rep, RepMorphism, hom_basis, make_rep

logger = logging.getLogger(__name__)

# Source category of each functor.
FUNCTOR_SOURCES = {1: 'S', 2: 'D', 3: 'K', 4: 'C', 5: 'LinRel1', 6: 'PairRel'}

SourceObject = Union[Rep, RelObj, PairRelObj]
SourceMorphism = Union[RepMorphism, RelMorphism]


class Reason(str, enum.Enum):
    ETA_NOT_INVERTIBLE = 'eta-not-invertible'
    NON_SQUARE_BLOCK = 'non-square-block'
    SINGULAR_BLOCK = 'singular-block'
    NOT_INJECTIVE = 'not-injective'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Eta:
    """The map ``V1 + V2 -> V0`` as the block row ``[f_alpha | f_beta]``."""

    matrix: Matrix

    @property
    def is_invertible(self) -> bool:
        return is_invertible(self.matrix)

    def inverse(self) -> Optional[Matrix]:
        if not self.matrix.is_square:
            return None
        return inverse(self.matrix)


class ImageBlocks(NamedTuple):
    phi: Matrix
    zeta: Matrix
    psi: Matrix
    theta: Matrix


@dataclass(frozen=True)
class ImageMembership:
    member: bool
    reason: Optional[Reason] = None
    blocks: dict[str, Matrix] = dc_field(default_factory=dict)
    witness: Any = None

    def __bool__(self) -> bool:
        return self.member


class HomTransport(NamedTuple):
    dim_source: int
    dim_target: int
    bijective: bool


def _check_functor(functor: int) -> int:
    if functor not in FUNCTOR_SOURCES:
        raise ValueError(
            f'Wrong parameter functor={functor!r}, expected 1..6.'
        )
    return functor


def _injections(d1: int, d2: int, field: FieldSpec) -> tuple[Matrix, Matrix]:
    iota1 = vstack(identity(d1, field), zero(d2, d1, field))
    iota2 = vstack(zero(d1, d2, field), identity(d2, field))
    return iota1, iota2


def _check_source(functor: int, obj: SourceObject):
    expected = FUNCTOR_SOURCES[functor]
    if functor <= 4:
        ok = isinstance(obj, Rep) and obj.quiver == expected
    elif functor == 5:
        ok = isinstance(obj, RelObj) and obj.dim1 == obj.dim2
    else:
        ok = isinstance(obj, PairRelObj)
    if not ok:
        raise SourceMismatchError(
            f'F{functor} applies to {expected} objects, got {_describe(obj)}.'
        )


def _describe(obj) -> str:
    if isinstance(obj, Rep):
        return f'a {obj.quiver}-representation'
    if isinstance(obj, RelObj):
        return f'a relation on spaces ({obj.dim1}, {obj.dim2})'
    return type(obj).__name__


def apply_functor(functor: int, obj: SourceObject) -> Rep:
    """The representation of F assigned to ``obj`` by functor ``functor``."""
    _check_functor(functor)
    _check_source(functor, obj)
    f = obj.field
    if isinstance(obj, Rep):
        d1, d2 = obj.dims[0], obj.dims[1]
        iota1, iota2 = _injections(d1, d2, f)
        m = obj.mats
        if functor == 1:
            dims = (d1 + d2, d1, d2, obj.dims[2], obj.dims[3])
            gamma, delta = vstack(m[0], m[1]), vstack(m[2], m[3])
        elif functor == 2:
            dims = (d1 + d2, d1, d2, obj.dims[2], d2)
            gamma = vstack(m[0], m[1])
            delta = vstack(m[2], identity(d2, f))
        elif functor == 3:
            dims = (d1 + d2, d1, d2, d2, d2)
            gamma = vstack(m[0], identity(d2, f))
            delta = vstack(m[1], identity(d2, f))
        else:
            # alpha: 2 -> 1 and beta: 1 -> 2.
            dims = (d1 + d2, d1, d2, d1, d2)
            gamma = vstack(identity(d1, f), m[1])
            delta = vstack(m[0], identity(d2, f))
    elif isinstance(obj, RelObj):
        d = obj.dim1
        iota1, iota2 = _injections(d, d, f)
        dims = (2 * d, d, d, d, obj.dim)
        gamma = vstack(identity(d, f), identity(d, f))
        delta = obj.basis
    else:
        d1, d2 = obj.dim1, obj.dim2
        iota1, iota2 = _injections(d1, d2, f)
        dims = (d1 + d2, d1, d2, obj.basis1.cols, obj.basis2.cols)
        gamma, delta = obj.basis1, obj.basis2
    return make_rep('F', dims, (iota1, iota2, gamma, delta), f)


def _restriction(
    source_basis: Matrix, target_basis: Matrix, l1: Matrix, l2: Matrix
) -> Matrix:
    coords = solve(target_basis, matrix_direct_sum(l1, l2) @ source_basis)
    if coords is None:
        raise RestrictionNotContainedError(
            'The morphism does not map the relation into the target relation.'
        )
    return coords


def apply_functor_mor(functor: int, m: SourceMorphism) -> RepMorphism:
    """The image of a morphism; ``V0`` carries ``l1 + l2``."""
    _check_functor(functor)
    _check_source(functor, m.source)
    _check_source(functor, m.target)
    source = apply_functor(functor, m.source)
    target = apply_functor(functor, m.target)
    if isinstance(m, RepMorphism):
        l1, l2 = m.comps[0], m.comps[1]
        if functor == 1:
            rest = (m.comps[2], m.comps[3])
        elif functor == 2:
            rest = (m.comps[2], l2)
        elif functor == 3:
            rest = (l2, l2)
        else:
            rest = (l1, l2)
    else:
        l1, l2 = m.f1, m.f2
        if functor == 5:
            if l1 != l2:
                raise SourceMismatchError(
                    'F5 needs the same map on both copies of the space.'
                )
            rest = (
                l1,
                _restriction(m.source.basis, m.target.basis, l1, l2),
            )
        else:
            rest = (
                _restriction(m.source.basis1, m.target.basis1, l1, l2),
                _restriction(m.source.basis2, m.target.basis2, l1, l2),
            )
    comps = (matrix_direct_sum(l1, l2), l1, l2) + tuple(rest)
    return RepMorphism(source, target, comps)


def _check_f(v: Rep):
    if not isinstance(v, Rep) or v.quiver != 'F':
        raise QuiverMismatchError(
            f'Expected an F-representation, got {_describe(v)}.'
        )


def eta(v: Rep) -> Eta:
    _check_f(v)
    return Eta(hstack(v.mats[0], v.mats[1]))


def image_blocks(v: Rep) -> Optional[ImageBlocks]:
    """``eta^-1 f_gamma`` and ``eta^-1 f_delta`` split at the ``V1`` rows.

    ``None`` when ``eta`` is not invertible.
    """
    eta_inv = eta(v).inverse()
    if eta_inv is None:
        return None
    d1 = v.dims[1]
    gamma = eta_inv @ v.mats[2]
    delta = eta_inv @ v.mats[3]
    return ImageBlocks(
        gamma.block(0, d1, 0, gamma.cols),
        gamma.block(d1, gamma.rows, 0, gamma.cols),
        delta.block(0, d1, 0, delta.cols),
        delta.block(d1, delta.rows, 0, delta.cols),
    )


def _invertible_blocks(blocks: Sequence[Matrix]) -> Optional[Reason]:
    if any(not b.is_square for b in blocks):
        return Reason.NON_SQUARE_BLOCK
    if any(not is_invertible(b) for b in blocks):
        return Reason.SINGULAR_BLOCK
    return None


def in_image(functor: int, v: Rep) -> ImageMembership:
    """Decides whether ``v`` is isomorphic to an image of ``functor``.

    With ``eta`` invertible the coefficient blocks are unique, so each
    case reduces to invertibility or injectivity checks. A member comes
    with a source object whose image is isomorphic to ``v``.
    """
    _check_functor(functor)
    _check_f(v)
    blocks = image_blocks(v)
    if blocks is None:
        return ImageMembership(False, Reason.ETA_NOT_INVERTIBLE)
    named = blocks._asdict()
    phi, zeta, psi, theta = blocks
    f = v.field
    d1, d2, d3, d4 = v.dims[1:]

    def inv(m: Matrix) -> Matrix:
        result = inverse(m)
        assert result is not None
        return result

    if functor == 1:
        witness: Any = make_rep('S', (d1, d2, d3, d4), blocks, f)
        return ImageMembership(True, None, named, witness)
    if functor == 2:
        reason = _invertible_blocks([theta])
        if reason:
            return ImageMembership(False, reason, named)
        witness = make_rep(
            'D', (d1, d2, d3), (phi, zeta, psi @ inv(theta)), f
        )
        return ImageMembership(True, None, named, witness)
    if functor == 3:
        reason = _invertible_blocks([zeta, theta])
        if reason:
            return ImageMembership(False, reason, named)
        witness = make_rep(
            'K', (d1, d2), (phi @ inv(zeta), psi @ inv(theta)), f
        )
        return ImageMembership(True, None, named, witness)
    if functor == 4:
        reason = _invertible_blocks([phi, theta])
        if reason:
            return ImageMembership(False, reason, named)
        witness = make_rep(
            'C', (d1, d2), (psi @ inv(theta), zeta @ inv(phi)), f
        )
        return ImageMembership(True, None, named, witness)
    if functor == 5:
        reason = _invertible_blocks([phi, zeta])
        if reason:
            return ImageMembership(False, reason, named)
        if not is_injective(v.mats[3]):
            return ImageMembership(False, Reason.NOT_INJECTIVE, named)
        basis = vstack(inv(phi) @ psi, inv(zeta) @ theta)
        witness = RelObj(f, d3, d3, basis)
        return ImageMembership(True, None, named, witness)
    if not (is_injective(v.mats[2]) and is_injective(v.mats[3])):
        return ImageMembership(False, Reason.NOT_INJECTIVE, named)
    witness = PairRelObj(
        f, d1, d2, vstack(phi, zeta), vstack(psi, theta)
    )
    return ImageMembership(True, None, named, witness)


def source_hom_basis(
    functor: int, v: SourceObject, w: SourceObject
) -> list[SourceMorphism]:
    _check_functor(functor)
    _check_source(functor, v)
    _check_source(functor, w)
    if functor <= 4:
        return list(hom_basis(v, w))
    return list(rel_hom_basis(v, w, one_space=functor == 5))


def hom_transport_check(
    functor: int, v: SourceObject, w: SourceObject
) -> HomTransport:
    """Checks that ``functor`` maps Hom(v, w) bijectively onto
    Hom(F(v), F(w))."""
    source_basis = source_hom_basis(functor, v, w)
    target = hom_basis(apply_functor(functor, v), apply_functor(functor, w))
    target_dim = len(target)
    images = [
        tuple(x for c in apply_functor_mor(functor, m).comps for x in c.entries)
        for m in source_basis
    ]
    independent = len(source_basis)
    if images and images[0]:
        independent = rank(from_columns(v.field, len(images[0]), images))
    elif images:
        independent = 0
    bijective = independent == len(source_basis) == target_dim
    logger.debug(
        'F%d transports Hom of dimension %d onto dimension %d.',
        functor,
        len(source_basis),
        target_dim,
    )
    return HomTransport(len(source_basis), target_dim, bijective)


def random_source(
    functor: int,
    dims: Sequence[int],
    field: FieldSpec,
    rng: random.Random,
) -> SourceObject:
    """A random object of the source category of ``functor``.

    ``dims`` is the dimension vector for quiver sources,
    ``(d, size)`` for one relation and ``(d1, d2, size1, size2)`` for two.
    """
    from .linrel import random_pair_relation, random_relation
    from .quiverrep import random_rep

    _check_functor(functor)
    if functor <= 4:
        return random_rep(FUNCTOR_SOURCES[functor], dims, field, rng)
    if functor == 5:
        return random_relation(dims[0], dims[0], dims[1], field, rng)
    return random_pair_relation(
        dims[0], dims[1], (dims[2], dims[3]), field, rng
    )


def random_extension(u: Rep, w: Rep, seed: int = 0) -> Rep:
    """A middle term ``V`` of ``0 -> U -> V -> W -> 0`` with random
    off-diagonal blocks."""
    _check_f(u)
    _check_f(w)
    if u.field != w.field:
        raise QuiverMismatchError(
            f'Representations over {u.field} and {w.field}.'
        )
    rng = random.Random(seed)
    quiver = u.shape
    mats = []
    for k, arrow in enumerate(quiver.arrows):
        s, t = quiver.index(arrow.source), quiver.index(arrow.target)
        h = random_matrix(u.dims[t], w.dims[s], u.field, rng)
        lower = zero(w.dims[t], u.dims[s], u.field)
        mats.append(block_matrix([[u.mats[k], h], [lower, w.mats[k]]]))
    dims = tuple(a + b for a, b in zip(u.dims, w.dims))
    return make_rep('F', dims, tuple(mats), u.field)


def _default_sections(u: Rep, w: Rep) -> list[Matrix]:
    f = u.field
    return [
        vstack(zero(a, b, f), identity(b, f)) for a, b in zip(u.dims, w.dims)
    ]


def _default_retractions(u: Rep, w: Rep) -> list[Matrix]:
    f = u.field
    return [
        hstack(identity(a, f), zero(a, b, f)) for a, b in zip(u.dims, w.dims)
    ]


def extension_witness_c5(
    u: Rep,
    v: Rep,
    w: Rep,
    sections: Optional[Sequence[Matrix]] = None,
    retractions: Optional[Sequence[Matrix]] = None,
) -> tuple[Matrix, Matrix]:
    """Builds ``(epsilon_V, zeta_V)`` for an extension of members of the
    image of F5.

    ``v`` carries ``U`` as its first coordinates at every vertex;
    ``sections[x]: W_x -> V_x`` and ``retractions[x]: V_x -> U_x`` split
    the sequence vertexwise.
    """
    member_u, member_w = in_image(5, u), in_image(5, w)
    if not member_u:
        raise NotInC5Error(f'U is not in the image of F5: {member_u.reason}.')
    if not member_w:
        raise NotInC5Error(f'W is not in the image of F5: {member_w.reason}.')
    f = v.field
    s = list(sections or _default_sections(u, w))
    r = list(retractions or _default_retractions(u, w))
    incl = [
        vstack(identity(a, f), zero(b, a, f)) for a, b in zip(u.dims, w.dims)
    ]
    proj = [
        hstack(zero(b, a, f), identity(b, f)) for a, b in zip(u.dims, w.dims)
    ]
    for x in range(len(v.dims)):
        if (
            proj[x] @ s[x] != identity(w.dims[x], f)
            or r[x] @ incl[x] != identity(u.dims[x], f)
            or not (r[x] @ s[x]).is_zero()
        ):
            raise ValueError(
                f'Wrong parameter sections/retractions at vertex {x}.'
            )
    eps_u, zeta_u = member_u.blocks['phi'], member_u.blocks['zeta']
    eps_w, zeta_w = member_w.blocks['phi'], member_w.blocks['zeta']
    f_alpha, f_beta, f_gamma = v.mats[0], v.mats[1], v.mats[2]
    h_alpha = r[0] @ f_alpha @ s[1]
    h_beta = r[0] @ f_beta @ s[2]
    h_gamma = r[0] @ f_gamma @ s[3]
    rhs = h_gamma - h_alpha @ eps_w - h_beta @ zeta_w
    eta_u = eta(u).inverse()
    assert eta_u is not None
    sigma = eta_u @ rhs
    d1 = u.dims[1]
    sigma_eps = sigma.block(0, d1, 0, sigma.cols)
    sigma_zeta = sigma.block(d1, sigma.rows, 0, sigma.cols)
    eps_v = (
        incl[1] @ eps_u @ r[3]
        + s[1] @ eps_w @ proj[3]
        + incl[1] @ sigma_eps @ proj[3]
    )
    zeta_v = (
        incl[2] @ zeta_u @ r[3]
        + s[2] @ zeta_w @ proj[3]
        + incl[2] @ sigma_zeta @ proj[3]
    )
    if f_gamma != f_alpha @ eps_v + f_beta @ zeta_v:
        raise WitnessVerificationError(
            'f_gamma differs from f_alpha eps + f_beta zeta.'
        )
    if not (is_invertible(eps_v) and is_invertible(zeta_v)):
        raise WitnessVerificationError('Witness blocks are not invertible.')
    return eps_v, zeta_v
