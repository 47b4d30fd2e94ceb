"""Representations of the five fixed quivers F, S, D, K and C.

Hom spaces are computed as the kernel of one linear system over all
vertex components. Decomposition splits by endomorphisms (Fitting's lemma)
and falls back to an exhaustive idempotent search over small fields.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .exactfield import FieldSpec, Poly, from_sympy, to_sympy
from .exactmatrix import (
    Matrix,
    column_basis,
    direct_sum as matrix_direct_sum,
    hstack,
    identity,
    inverse,
    is_invertible,
    kernel_basis,
    lcm_all,
    minimal_polynomial,
    poly_eval,
    power,
    random_invertible,
    random_matrix,
    rank,
    solve,
    vstack,
    zero,
)
from .exceptions import (
    FieldMismatchError,
    IndecomposabilityUndecidedError,
    QuiverMismatchError,
    RestrictionNotContainedError,
    ShapeError,
    ZeroObjectError,
)
from .typing import DimVector, Perm, QuiverName

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 2**20
RANDOM_TRIALS = 64
ISO_RANDOM_TRIALS = 256
# Random combinations tried before an exhaustive isomorphism search.
ISO_QUICK_TRIALS = 16

GREEK_NAMES = {'α': 'alpha', 'β': 'beta', 'γ': 'gamma', 'δ': 'delta'}


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    name: QuiverName
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    def index(self, vertex: int) -> int:
        return self.vertices.index(vertex)

    def arrow_index(self, name: str) -> int:
        name = GREEK_NAMES.get(name, name)
        for k, arrow in enumerate(self.arrows):
            if arrow.name == name:
                return k
        raise QuiverMismatchError(f'Quiver {self.name} has no arrow {name}.')


QUIVERS: dict[str, Quiver] = {
    'F': Quiver(
        'F',
        (0, 1, 2, 3, 4),
        (
            Arrow('alpha', 1, 0),
            Arrow('beta', 2, 0),
            Arrow('gamma', 3, 0),
            Arrow('delta', 4, 0),
        ),
    ),
    'S': Quiver(
        'S',
        (1, 2, 3, 4),
        (
            Arrow('alpha', 3, 1),
            Arrow('beta', 3, 2),
            Arrow('gamma', 4, 1),
            Arrow('delta', 4, 2),
        ),
    ),
    'D': Quiver(
        'D',
        (1, 2, 3),
        (Arrow('alpha', 3, 1), Arrow('beta', 3, 2), Arrow('gamma', 2, 1)),
    ),
    'K': Quiver('K', (1, 2), (Arrow('alpha', 2, 1), Arrow('beta', 2, 1))),
    'C': Quiver('C', (1, 2), (Arrow('alpha', 2, 1), Arrow('beta', 1, 2))),
}


def get_quiver(name: str) -> Quiver:
    try:
        return QUIVERS[name]
    except KeyError:
        raise QuiverMismatchError(
            f'Wrong quiver {name!r}, expected one of {", ".join(QUIVERS)}.'
        ) from None


@dataclass(frozen=True)
class Rep:
    """A representation: one space per vertex, one matrix per arrow.

    ``dims`` follows the quiver's vertex order and ``mats`` its arrow
    order; an arrow ``s -> t`` carries a ``dims[t] x dims[s]`` matrix.
    """

    quiver: QuiverName
    field: FieldSpec
    dims: DimVector
    mats: tuple[Matrix, ...]

    @property
    def shape(self) -> Quiver:
        return QUIVERS[self.quiver]

    def dim(self, vertex: int) -> int:
        return self.dims[self.shape.index(vertex)]

    def map(self, name: str) -> Matrix:
        return self.mats[self.shape.arrow_index(name)]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0


@dataclass(frozen=True)
class RepMorphism:
    source: Rep
    target: Rep
    comps: tuple[Matrix, ...]

    def comp(self, vertex: int) -> Matrix:
        return self.comps[self.source.shape.index(vertex)]


class InvertibleSearch(NamedTuple):
    found: Optional[tuple[Matrix, ...]]
    certified: bool


class Indecomposability(NamedTuple):
    indecomposable: bool
    certified: bool
    splitter: Optional[RepMorphism]


class Splitting(NamedTuple):
    image: Rep
    kernel: Rep
    image_bases: tuple[Matrix, ...]
    kernel_bases: tuple[Matrix, ...]


def validate(rep: Rep) -> None:
    """Checks every arrow matrix against the dimension vector."""
    quiver = get_quiver(rep.quiver)
    if len(rep.dims) != len(quiver.vertices):
        raise ShapeError(
            f'Quiver {quiver.name} has {len(quiver.vertices)} vertices, '
            f'got {len(rep.dims)} dimensions.'
        )
    if any(d < 0 for d in rep.dims):
        raise ShapeError(f'Negative dimension in {rep.dims}.')
    if len(rep.mats) != len(quiver.arrows):
        raise ShapeError(
            f'Quiver {quiver.name} has {len(quiver.arrows)} arrows, '
            f'got {len(rep.mats)} matrices.'
        )
    for arrow, m in zip(quiver.arrows, rep.mats):
        if m.field != rep.field:
            raise FieldMismatchError(
                f'Arrow {arrow.name} is over {m.field}, expected {rep.field}.'
            )
        expected = (rep.dim(arrow.target), rep.dim(arrow.source))
        if m.shape != expected:
            raise ShapeError(
                f'Arrow {arrow.name}: {arrow.source}->{arrow.target} needs a '
                f'{expected[0]}x{expected[1]} matrix, got {m.rows}x{m.cols}.'
            )


def make_rep(
    quiver: QuiverName,
    dims: Sequence[int],
    mats: Union[Mapping[str, Matrix], Sequence[Matrix]],
    field: FieldSpec,
) -> Rep:
    shape = get_quiver(quiver)
    if isinstance(mats, Mapping):
        named = {GREEK_NAMES.get(k, k): v for k, v in mats.items()}
        missing = [a.name for a in shape.arrows if a.name not in named]
        if missing:
            raise ShapeError(f'Missing matrices for arrows {missing}.')
        ordered = tuple(named[a.name] for a in shape.arrows)
    else:
        ordered = tuple(mats)
    rep = Rep(quiver, field, tuple(dims), ordered)
    validate(rep)
    return rep


def zero_rep(
    quiver: QuiverName, field: FieldSpec, dims: Optional[Sequence[int]] = None
) -> Rep:
    """The representation with all maps zero (all spaces zero by default)."""
    shape = get_quiver(quiver)
    dims = tuple(dims) if dims is not None else (0,) * len(shape.vertices)
    mats = tuple(
        zero(dims[shape.index(a.target)], dims[shape.index(a.source)], field)
        for a in shape.arrows
    )
    return Rep(quiver, field, dims, mats)


def random_rep(
    quiver: QuiverName,
    dims: Sequence[int],
    field: FieldSpec,
    rng: random.Random,
) -> Rep:
    shape = get_quiver(quiver)
    mats = tuple(
        random_matrix(
            dims[shape.index(a.target)], dims[shape.index(a.source)], field, rng
        )
        for a in shape.arrows
    )
    return Rep(quiver, field, tuple(dims), mats)


def rep_key(rep: Rep) -> tuple:
    """Deterministic sort key: dims, then matrix entries."""
    return rep.dims, tuple(m.entries for m in rep.mats)


def _check_pair(v: Rep, w: Rep):
    if v.quiver != w.quiver:
        raise QuiverMismatchError(
            f'Representations of {v.quiver} and {w.quiver}.'
        )
    if v.field != w.field:
        raise FieldMismatchError(
            f'Representations over {v.field} and {w.field}.'
        )


def _hom_system(v: Rep, w: Rep) -> tuple[Matrix, list[int]]:
    """Commutation constraints as a matrix over the stacked components.

    The component at vertex ``x`` is a ``w.dims[x] x v.dims[x]`` matrix
    stored row-major from ``offsets[x]``.
    """
    quiver = v.shape
    f = v.field
    offsets = []
    total = 0
    for x in range(len(quiver.vertices)):
        offsets.append(total)
        total += w.dims[x] * v.dims[x]
    equations = []
    for k, arrow in enumerate(quiver.arrows):
        s, t = quiver.index(arrow.source), quiver.index(arrow.target)
        a, b = v.mats[k], w.mats[k]
        # X_t a - b X_s = 0
        for i in range(w.dims[t]):
            for j in range(v.dims[s]):
                eq = [f.zero] * total
                for r in range(v.dims[t]):
                    c = a[r, j]
                    if c:
                        idx = offsets[t] + i * v.dims[t] + r
                        eq[idx] = f.add(eq[idx], c)
                for r in range(w.dims[s]):
                    c = b[i, r]
                    if c:
                        idx = offsets[s] + r * v.dims[s] + j
                        eq[idx] = f.sub(eq[idx], c)
                equations.append(eq)
    return Matrix.from_rows(f, equations, total), offsets


def hom_basis(v: Rep, w: Rep) -> list[RepMorphism]:
    """A basis of Hom(v, w), canonical for the given inputs."""
    _check_pair(v, w)
    system, offsets = _hom_system(v, w)
    if system.cols == 0:
        return []
    kernel = kernel_basis(system)
    basis = []
    for j in range(kernel.cols):
        column = kernel.column(j)
        comps = tuple(
            Matrix(
                v.field,
                w.dims[x],
                v.dims[x],
                column[offsets[x]:offsets[x] + w.dims[x] * v.dims[x]],
            )
            for x in range(len(v.dims))
        )
        basis.append(RepMorphism(v, w, comps))
    return basis


def end_dim(v: Rep) -> int:
    return len(hom_basis(v, v))


def is_morphism(m: RepMorphism) -> bool:
    quiver = m.source.shape
    for k, arrow in enumerate(quiver.arrows):
        s, t = quiver.index(arrow.source), quiver.index(arrow.target)
        if m.comps[t] @ m.source.mats[k] != m.target.mats[k] @ m.comps[s]:
            return False
    return True


def identity_morphism(v: Rep) -> RepMorphism:
    return RepMorphism(v, v, tuple(identity(d, v.field) for d in v.dims))


def compose_morphisms(g: RepMorphism, f: RepMorphism) -> RepMorphism:
    """``g`` after ``f``."""
    if f.target != g.source:
        raise QuiverMismatchError('Morphisms are not composable.')
    return RepMorphism(
        f.source, g.target, tuple(b @ a for a, b in zip(f.comps, g.comps))
    )


def combine(
    basis: Sequence[tuple[Matrix, ...]],
    coeffs: Sequence,
    field: FieldSpec,
) -> tuple[Matrix, ...]:
    """The linear combination of component tuples."""
    first = basis[0]
    result = []
    p = field.p
    for x, template in enumerate(first):
        acc = [field.zero] * len(template.entries)
        for c, element in zip(coeffs, basis):
            if not c:
                continue
            for i, e in enumerate(element[x].entries):
                if e:
                    acc[i] = acc[i] + c * e
        if p:
            acc = [a % p for a in acc]
        result.append(Matrix(field, template.rows, template.cols, tuple(acc)))
    return tuple(result)


def search_invertible(
    basis: Sequence[tuple[Matrix, ...]], field: FieldSpec, seed: int = 0
) -> InvertibleSearch:
    """Looks for a combination of ``basis`` with every component invertible.

    Random combinations first, then every coefficient vector when the
    search space has at most ``ENUMERATION_LIMIT`` elements, then more
    random combinations.
    A miss is certified only when the exhaustive pass ran.
    """
    m = len(basis)
    if m == 0:
        return InvertibleSearch(None, True)
    if any(not c.is_square for c in basis[0]):
        return InvertibleSearch(None, True)
    rng = random.Random(seed)

    def attempt(coeffs) -> Optional[tuple[Matrix, ...]]:
        comps = combine(basis, coeffs, field)
        return comps if all(is_invertible(c) for c in comps) else None

    quick = min(ISO_QUICK_TRIALS, ISO_RANDOM_TRIALS)
    for _ in range(quick):
        found = attempt([field.random_element(rng) for _ in range(m)])
        if found is not None:
            return InvertibleSearch(found, True)
    if field.is_prime and field.p**m <= ENUMERATION_LIMIT:
        logger.debug('Exhaustive search over %d vectors.', field.p**m)
        for coeffs in itertools.product(range(field.p), repeat=m):
            if any(coeffs):
                found = attempt(coeffs)
                if found is not None:
                    return InvertibleSearch(found, True)
        return InvertibleSearch(None, True)
    for _ in range(ISO_RANDOM_TRIALS - quick):
        found = attempt([field.random_element(rng) for _ in range(m)])
        if found is not None:
            return InvertibleSearch(found, True)
    return InvertibleSearch(None, False)


def rank_profile(v: Rep) -> tuple:
    """Ranks of arrows, of arrows sharing an endpoint, and of 2-paths."""
    quiver = v.shape
    ranks = [rank(m) for m in v.mats]
    for vertex in quiver.vertices:
        into = [k for k, a in enumerate(quiver.arrows) if a.target == vertex]
        out = [k for k, a in enumerate(quiver.arrows) if a.source == vertex]
        for size in range(2, len(into) + 1):
            for combo in itertools.combinations(into, size):
                ranks.append(rank(hstack(*(v.mats[k] for k in combo))))
        for size in range(2, len(out) + 1):
            for combo in itertools.combinations(out, size):
                ranks.append(rank(vstack(*(v.mats[k] for k in combo))))
    for k, first in enumerate(quiver.arrows):
        for j, second in enumerate(quiver.arrows):
            if first.target == second.source:
                ranks.append(rank(v.mats[j] @ v.mats[k]))
    return v.dims, tuple(ranks)


def fingerprint(v: Rep) -> tuple:
    return rank_profile(v), end_dim(v)


def _indecomposables_isomorphic(v: Rep, w: Rep) -> bool:
    # End(v) is local: v and w are isomorphic iff some g f is invertible,
    # and the products of basis elements span every such composite.
    back = hom_basis(w, v)
    for f in hom_basis(v, w):
        for g in back:
            if all(is_invertible(c) for c in compose_morphisms(g, f).comps):
                return True
    return False


def _summands_match(v: Rep, w: Rep, seed: int) -> bool:
    try:
        left, right = split_fully(v, seed), split_fully(w, seed)
    except IndecomposabilityUndecidedError:
        logger.warning(
            'Isomorphism of %s-representations %s decided from Hom '
            'dimensions.',
            v.quiver,
            v.dims,
        )
        dims = {
            len(hom_basis(v, w)),
            len(hom_basis(w, v)),
            end_dim(v),
            end_dim(w),
        }
        return len(dims) == 1
    if len(left) != len(right):
        return False
    if len(left) == 1:
        return _indecomposables_isomorphic(v, w)
    unmatched = list(right)
    for piece in left:
        for k, other in enumerate(unmatched):
            if is_isomorphic(piece, other, seed):
                del unmatched[k]
                break
        else:
            return False
    return True


def is_isomorphic(v: Rep, w: Rep, seed: int = 0) -> bool:
    """Searches Hom(v, w) for an invertible morphism.

    When the search cannot settle the question both sides are decomposed
    and their summands matched.
    """
    _check_pair(v, w)
    if v.dims != w.dims:
        return False
    if v.is_zero():
        return True
    if rank_profile(v) != rank_profile(w):
        return False
    basis = hom_basis(v, w)
    search = search_invertible([b.comps for b in basis], v.field, seed)
    if search.found is not None:
        return True
    if search.certified:
        return False
    logger.debug('Matching summands of %s %s.', v.quiver, v.dims)
    return _summands_match(v, w, seed)


def direct_sum(v: Rep, w: Rep) -> Rep:
    _check_pair(v, w)
    return Rep(
        v.quiver,
        v.field,
        tuple(a + b for a, b in zip(v.dims, w.dims)),
        tuple(matrix_direct_sum(a, b) for a, b in zip(v.mats, w.mats)),
    )


def direct_sum_all(reps: Sequence[Rep]) -> Rep:
    result = reps[0]
    for rep in reps[1:]:
        result = direct_sum(result, rep)
    return result


def change_basis(v: Rep, comps: Sequence[Matrix]) -> Rep:
    """The representation ``g_t f g_s^-1``, isomorphic to ``v``."""
    quiver = v.shape
    inverses = []
    for g in comps:
        g_inv = inverse(g)
        if g_inv is None:
            raise ShapeError('Basis change components must be invertible.')
        inverses.append(g_inv)
    mats = []
    for k, arrow in enumerate(quiver.arrows):
        s, t = quiver.index(arrow.source), quiver.index(arrow.target)
        mats.append(comps[t] @ v.mats[k] @ inverses[s])
    return Rep(v.quiver, v.field, v.dims, tuple(mats))


def random_basis_change(v: Rep, rng: random.Random) -> Rep:
    return change_basis(
        v, [random_invertible(d, v.field, rng) for d in v.dims]
    )


def relabel(v: Rep, perm: Perm) -> Rep:
    """Moves the space at vertex ``perm[i-1]`` to vertex ``i``.

    ``perm`` permutes vertices 1..4 and must be a quiver automorphism
    (any permutation for F, the swaps 1<->2 and 3<->4 for S).
    """
    quiver = v.shape
    sigma = {x: x for x in quiver.vertices}
    for i, image in enumerate(perm, start=1):
        sigma[i] = image
    if sorted(sigma.values()) != sorted(quiver.vertices):
        raise QuiverMismatchError(f'{perm} is not a permutation of vertices.')
    dims = tuple(v.dims[quiver.index(sigma[x])] for x in quiver.vertices)
    mats = []
    for arrow in quiver.arrows:
        images = [
            k
            for k, other in enumerate(quiver.arrows)
            if (other.source, other.target)
            == (sigma[arrow.source], sigma[arrow.target])
        ]
        if len(images) != 1:
            raise QuiverMismatchError(
                f'{perm} is not an automorphism of quiver {quiver.name}.'
            )
        mats.append(v.mats[images[0]])
    return Rep(v.quiver, v.field, dims, tuple(mats))


def restrict(v: Rep, bases: Sequence[Matrix]) -> Rep:
    """The subrepresentation spanned by the columns of ``bases``."""
    quiver = v.shape
    mats = []
    for k, arrow in enumerate(quiver.arrows):
        s, t = quiver.index(arrow.source), quiver.index(arrow.target)
        coords = solve(bases[t], v.mats[k] @ bases[s])
        if coords is None:
            raise RestrictionNotContainedError(
                f'Arrow {arrow.name} leaves the given subspaces.'
            )
        mats.append(coords)
    return Rep(v.quiver, v.field, tuple(b.cols for b in bases), tuple(mats))


def split(v: Rep, phi: RepMorphism) -> Optional[Splitting]:
    """Fitting splitting ``v = im phi^N + ker phi^N``, ``None`` if trivial."""
    image_bases = []
    kernel_bases = []
    for d, comp in zip(v.dims, phi.comps):
        stable = power(comp, d)
        image_bases.append(column_basis(stable))
        kernel_bases.append(kernel_basis(stable))
    if all(b.cols == 0 for b in image_bases) or all(
        b.cols == 0 for b in kernel_bases
    ):
        return None
    return Splitting(
        restrict(v, image_bases),
        restrict(v, kernel_bases),
        tuple(image_bases),
        tuple(kernel_bases),
    )


def _morphism_minpoly(phi: RepMorphism) -> Poly:
    field = phi.source.field
    return lcm_all(
        (minimal_polynomial(c) for c in phi.comps if c.rows), field
    )


def _fitting_splitter(v: Rep, phi: RepMorphism) -> Optional[RepMorphism]:
    """``g(phi)`` for a primary factor ``g`` when the minimal polynomial
    of ``phi`` has two coprime factors."""
    mp = _morphism_minpoly(phi)
    _, factors = to_sympy(mp).factor_list()
    if len(factors) < 2:
        return None
    base, multiplicity = factors[0]
    g = from_sympy(base**multiplicity, v.field)
    return RepMorphism(v, v, tuple(poly_eval(g, c) for c in phi.comps))


def _flatten(comps: Sequence[Matrix]) -> tuple:
    return tuple(x for c in comps for x in c.entries)


def _span_basis(field: FieldSpec, vectors: Sequence[tuple]) -> Matrix:
    if not vectors:
        return Matrix(field, 0, 0)
    size = len(vectors[0])
    m = Matrix(field, size, len(vectors), tuple(
        vec[i] for i in range(size) for vec in vectors
    ))
    return column_basis(m)


def _local_with_split_residue(v: Rep, basis: list[RepMorphism]) -> bool:
    """Certifies End(v) = k.1 + J with J a nilpotent subalgebra.

    Every basis element must have a minimal polynomial ``(t - c)^e``;
    then the elements ``b - c.1`` must span a nilpotent algebra.
    """
    field = v.field
    one = identity_morphism(v)
    shifted = []
    for b in basis:
        mp = _morphism_minpoly(b)
        _, factors = to_sympy(mp).factor_list()
        if len(factors) != 1 or factors[0][0].degree() != 1:
            return False
        linear = from_sympy(factors[0][0].monic(), field)
        root = field.neg(linear.coeffs[0]) if linear.coeffs else field.zero
        shifted.append(
            tuple(
                c - Matrix(field, c.rows, c.cols, tuple(
                    field.mul(root, x) for x in i.entries
                ))
                for c, i in zip(b.comps, one.comps)
            )
        )
    span = _span_basis(field, [_flatten(s) for s in shifted])
    if span.cols != len(basis) - 1:
        return False
    template = shifted[0]
    radical = [_unflatten(span.column(j), template) for j in range(span.cols)]
    current = radical
    # Powers J^k must shrink strictly down to zero.
    while current:
        products = [
            tuple(a @ b for a, b in zip(left, right))
            for left in current
            for right in radical
        ]
        vectors = [_flatten(p) for p in products if any(_flatten(p))]
        if not vectors:
            return True
        layer = _span_basis(field, vectors)
        if solve(span, layer) is None or layer.cols >= len(current):
            return False
        current = [
            _unflatten(layer.column(j), template) for j in range(layer.cols)
        ]
    return True


def _unflatten(vector: Sequence, template: Sequence[Matrix]) -> tuple:
    comps = []
    offset = 0
    for c in template:
        size = c.rows * c.cols
        comps.append(
            Matrix(c.field, c.rows, c.cols, tuple(vector[offset:offset + size]))
        )
        offset += size
    return tuple(comps)


def _is_idempotent(comps: Sequence[Matrix]) -> bool:
    return all(c @ c == c for c in comps)


def indecomposability(v: Rep, seed: int = 0) -> Indecomposability:
    """Layered indecomposability test with certification metadata.

    Layers: dim End = 1; Fitting splitting on the End basis and on
    ``RANDOM_TRIALS`` random endomorphisms; a local-ring certificate when
    the residue field is the base field; exhaustive idempotent search when
    ``|k|^dim End <= ENUMERATION_LIMIT``; otherwise an uncertified verdict.
    """
    if v.is_zero():
        raise ZeroObjectError('The zero object is not indecomposable.')
    basis = hom_basis(v, v)
    m = len(basis)
    if m == 1:
        return Indecomposability(True, True, None)
    field = v.field
    rng = random.Random(seed)
    comps_basis = [b.comps for b in basis]
    trials = list(basis)
    for _ in range(RANDOM_TRIALS):
        coeffs = [field.random_element(rng) for _ in range(m)]
        trials.append(RepMorphism(v, v, combine(comps_basis, coeffs, field)))
    logger.debug('Fitting trials: %d on End of dimension %d.', len(trials), m)
    for phi in trials:
        splitter = _fitting_splitter(v, phi)
        if splitter is not None:
            return Indecomposability(False, True, splitter)
    if _local_with_split_residue(v, basis):
        return Indecomposability(True, True, None)
    if field.is_prime and field.p**m <= ENUMERATION_LIMIT:
        logger.debug('Idempotent search over %d elements.', field.p**m)
        for coeffs in itertools.product(range(field.p), repeat=m):
            if not any(coeffs):
                continue
            comps = combine(comps_basis, coeffs, field)
            if _is_idempotent(comps) and not all(
                is_invertible(c) for c in comps
            ):
                return Indecomposability(False, True, RepMorphism(v, v, comps))
        return Indecomposability(True, True, None)
    logger.warning(
        'Indecomposability of %s-representation %s is not certified.',
        v.quiver,
        v.dims,
    )
    return Indecomposability(True, False, None)


def is_indecomposable(v: Rep, seed: int = 0) -> bool:
    return indecomposability(v, seed).indecomposable


def split_fully(v: Rep, seed: int = 0) -> list[Rep]:
    """Indecomposable pieces of ``v`` in deterministic order."""
    if v.is_zero():
        return []
    pieces = []
    stack = [v]
    while stack:
        current = stack.pop()
        verdict = indecomposability(current, seed)
        if verdict.indecomposable:
            if not verdict.certified:
                raise IndecomposabilityUndecidedError(
                    f'Cannot certify indecomposability of {current.dims}.'
                )
            pieces.append(current)
            continue
        assert verdict.splitter is not None
        splitting = split(current, verdict.splitter)
        assert splitting is not None
        stack.extend((splitting.image, splitting.kernel))
    pieces.sort(key=rep_key)
    return pieces


def decompose(v: Rep, seed: int = 0) -> list[tuple[Rep, int]]:
    """Pairwise non-isomorphic indecomposable summands with multiplicities."""
    groups: list[list] = []
    for piece in split_fully(v, seed):
        for group in groups:
            if is_isomorphic(group[0], piece, seed):
                group[1] += 1
                break
        else:
            groups.append([piece, 1])
    return [(rep, count) for rep, count in groups]


def iter_dim_vectors(quiver: QuiverName, max_total: int) -> Iterator[DimVector]:
    """Nonzero dimension vectors with total at most ``max_total``."""
    n = len(get_quiver(quiver).vertices)
    for total in range(1, max_total + 1):
        for dims in sorted(
            d
            for d in itertools.product(range(total + 1), repeat=n)
            if sum(d) == total
        ):
            yield dims
