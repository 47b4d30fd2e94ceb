"""Canonical indecomposables and classification against them.

Each category lists its families in table order. A family builds the
object of parameter ``n`` from identity blocks, the ``i_up``/``i_down``/
``i_left``/``i_right`` blocks, a Frobenius cell or a nilpotent Jordan
block. Tetrad presentations are block grids with one block column per
subspace (vertices 1 to 4) stacked over ``V0``.
"""

from __future__ import annotations

import enum
import itertools
import logging
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .exactfield import (
    FieldSpec,
    Poly,
    format_poly,
    monic_irreducibles,
    parse_poly,
)
from .exactmatrix import (
    Matrix,
    companion,
    i_down,
    i_left,
    i_right,
    i_up,
    identity,
    jordan_plus,
    vstack,
    zero,
)
from .exceptions import (
    InvalidTagError,
    ParseError,
    ReducibleModulusError,
    UnclassifiedSummandError,
)
from .linrel import (
    PairRelObj,
    RelObj,
    rel_decompose,
    rel_is_isomorphic,
)
from .quiverrep import (
    Rep,
    decompose,
    is_isomorphic,
    make_rep,
    relabel,
    zero_rep,
)
from .typing import Category, DimVector, Perm

logger = logging.getLogger(__name__)

CanonObject = Union[Rep, RelObj, PairRelObj]

IDENTITY_PERM: Perm = (1, 2, 3, 4)
# Swaps of vertices 1<->2 and 3<->4 are the automorphisms of S.
KLEIN_PERMS: tuple[Perm, ...] = (
    (1, 2, 3, 4),
    (2, 1, 3, 4),
    (1, 2, 4, 3),
    (2, 1, 4, 3),
)
ALL_PERMS: tuple[Perm, ...] = tuple(itertools.permutations((1, 2, 3, 4)))

CATEGORIES: tuple[str, ...] = ('F', 'S', 'D', 'K', 'C', 'LinRel1', 'PairRel')


class TypeName(str, enum.Enum):
    ZERO = '0'
    I = 'I'  # noqa: E741
    I_PRIME = "I'"
    I_SECOND = "I''"
    II = 'II'
    II_STAR = 'II*'
    III = 'III'
    III_STAR = 'III*'
    IV = 'IV'
    IV_STAR = 'IV*'
    V = 'V'
    V_STAR = 'V*'
    INJ1 = 'Inj1'
    INJ2 = 'Inj2'
    INJ3 = 'Inj3'
    INJ4 = 'Inj4'

    def __str__(self) -> str:
        return self.value


LONG_NAMES = {
    'Zero': TypeName.ZERO,
    'I_second_variant': TypeName.I_PRIME,
    'I_third_variant': TypeName.I_SECOND,
    'IIStar': TypeName.II_STAR,
    'IIIStar': TypeName.III_STAR,
    'IVStar': TypeName.IV_STAR,
    'VStar': TypeName.V_STAR,
}


def parse_type_name(text: str) -> TypeName:
    if text in LONG_NAMES:
        return LONG_NAMES[text]
    try:
        return TypeName(text)
    except ValueError:
        raise InvalidTagError(f'Wrong type name {text!r}.') from None


@dataclass(frozen=True)
class IndecompTag:
    """Symbolic name of a canonical indecomposable.

    ``poly`` and ``s`` describe the Frobenius cell of ``poly**s`` for the
    regular family 0; ``perm`` relabels the subspaces (``None`` is the
    identity).
    """

    category: Category
    type_name: TypeName
    n: int = 0
    poly: Optional[Poly] = None
    s: int = 1
    perm: Optional[Perm] = None

    def __str__(self) -> str:
        head = f'{self.category}:{self.type_name.value}'
        if self.type_name.value.startswith('Inj'):
            return head
        args = [str(self.n)]
        if self.poly is not None:
            args.append(f'p={format_poly(self.poly)}')
            args.append(f's={self.s}')
        if self.perm is not None and tuple(self.perm) != IDENTITY_PERM:
            args.append('perm=' + ''.join(str(i) for i in self.perm))
        return f'{head}({",".join(args)})'


_TAG_PATTERN = re.compile(
    r'^(F|S|D|K|C|LinRel1|PairRel):([A-Za-z0-9_\'*]+)(?:\((.*)\))?$'
)


def parse_tag(text: str, field: FieldSpec) -> IndecompTag:
    """Parses ``F:III(2)``, ``K:0(2,p=t^2+t+1,s=1)``, ``F:Inj1`` or
    ``F:III(0,perm=2134)``."""
    match = _TAG_PATTERN.match(text.strip())
    if match is None:
        raise ParseError(f'Wrong tag {text!r}.')
    category, name, inner = match.groups()
    try:
        type_name = parse_type_name(name)
    except InvalidTagError as err:
        raise ParseError(str(err)) from err
    n, poly, s, perm = 0, None, 1, None
    if inner:
        for k, part in enumerate(p.strip() for p in inner.split(',')):
            key, _, value = part.rpartition('=')
            if not key and k == 0 and value.isdigit():
                n = int(value)
            elif key == 'p':
                poly = parse_poly(value, field)
            elif key == 's' and value.isdigit():
                s = int(value)
            elif key == 'perm' and re.fullmatch(r'[1-4]{4}', value):
                perm = tuple(int(c) for c in value)
            else:
                raise ParseError(f'Wrong tag argument {part!r} in {text!r}.')
    return IndecompTag(category, type_name, n, poly, s, perm)


@dataclass(frozen=True)
class Family:
    type_name: TypeName
    min_n: int
    dims: Callable[[int], DimVector]
    build: Callable[..., CanonObject]
    regular: bool = False


def _lrz(n: int, field: FieldSpec) -> Matrix:
    return zero(1, n, field)


def _lroz(n: int, field: FieldSpec) -> Matrix:
    """The row ``(1, 0, ..., 0)`` of length ``n``."""
    return Matrix(field, 1, n, tuple(1 if j == 0 else 0 for j in range(n)))


def _nilpotent(n: int, field: FieldSpec) -> Matrix:
    return jordan_plus(n, field) if n else identity(0, field)


def _tetrad(
    field: FieldSpec,
    heights: Sequence[int],
    widths: Sequence[int],
    columns: Sequence[Sequence[Optional[Matrix]]],
) -> Rep:
    """F-representation of a block grid; ``None`` blocks are zero."""
    mats = []
    for width, column in zip(widths, columns):
        blocks = [
            zero(h, width, field) if b is None else b
            for h, b in zip(heights, column)
        ]
        mats.append(vstack(*blocks))
    dims = (sum(heights),) + tuple(widths)
    return make_rep('F', dims, mats, field)


def _f_zero(n: int, f: FieldSpec, cell: Matrix) -> Rep:
    i = identity(n, f)
    return _tetrad(
        f, (n, n), (n,) * 4, [(i, None), (None, i), (i, i), (cell, i)]
    )


def _f_one(n: int, f: FieldSpec, cell=None) -> Rep:
    i = identity(n, f)
    return _tetrad(
        f,
        (n, n),
        (n,) * 4,
        [(i, None), (i, i), (None, i), (_nilpotent(n, f), i)],
    )


def _f_two(n: int, f: FieldSpec, cell=None) -> Rep:
    big, small = identity(n + 1, f), identity(n, f)
    return _tetrad(
        f,
        (n + 1, n),
        (n + 1, n + 1, n, n),
        [
            (big, None),
            (big, i_left(n, f)),
            (i_down(n, f), small),
            (None, small),
        ],
    )


def _f_three(n: int, f: FieldSpec, cell=None) -> Rep:
    big, small = identity(n + 1, f), identity(n, f)
    return _tetrad(
        f,
        (n + 1, n),
        (n + 1, n, n, n),
        [
            (big, None),
            (None, small),
            (i_up(n, f), small),
            (i_down(n, f), small),
        ],
    )


def _f_three_star(n: int, f: FieldSpec, cell=None) -> Rep:
    big, small = identity(n + 1, f), identity(n, f)
    return _tetrad(
        f,
        (n, n + 1),
        (n, n + 1, n + 1, n + 1),
        [
            (small, None),
            (None, big),
            (i_left(n, f), big),
            (i_right(n, f), big),
        ],
    )


def _f_four(n: int, f: FieldSpec, cell=None) -> Rep:
    big = identity(n + 1, f)
    return _tetrad(
        f,
        (n + 1, n + 1),
        (n + 1, n + 1, n + 1, n),
        [(big, None), (None, big), (big, big), (i_up(n, f), i_down(n, f))],
    )


def _f_four_star(n: int, f: FieldSpec, cell=None) -> Rep:
    big = identity(n + 1, f)
    return _tetrad(
        f,
        (n + 1, n + 1),
        (n + 1, n + 1, n + 1, n + 2),
        [
            (big, None),
            (None, big),
            (big, big),
            (i_left(n + 1, f), i_right(n + 1, f)),
        ],
    )


def _f_five(n: int, f: FieldSpec, cell=None) -> Rep:
    i, j = identity(n, f), _nilpotent(n, f)
    return _tetrad(
        f,
        (n, n, 1),
        (n,) * 4,
        [
            (i, None, _lrz(n, f)),
            (None, i, _lrz(n, f)),
            (j, i, _lroz(n, f)),
            (i, j, _lroz(n, f)),
        ],
    )


def _f_five_star(n: int, f: FieldSpec, cell=None) -> Rep:
    left, right, row = i_left(n, f), i_right(n, f), _lroz(n + 1, f)
    return _tetrad(
        f,
        (n, n, 1),
        (n + 1,) * 4,
        [
            (left, None, row),
            (left, right, row),
            (right, left, row),
            (None, left, row),
        ],
    )


def _f_injective(vertex: int) -> Callable[..., Rep]:
    def build(n: int, f: FieldSpec, cell=None) -> Rep:
        dims = tuple(1 if x == vertex else 0 for x in range(5))
        return zero_rep('F', f, dims)

    return build


def _s_rep(f: FieldSpec, a: Matrix, c: Matrix, b: Matrix, d: Matrix) -> Rep:
    """S-representation from the grid ``[[f_alpha, f_gamma],
    [f_beta, f_delta]]``."""
    return make_rep('S', (a.rows, b.rows, a.cols, c.cols), (a, b, c, d), f)


def _d_rep(f: FieldSpec, g: Matrix, a: Matrix, b: Matrix) -> Rep:
    """D-representation from ``(f_gamma, f_alpha, f_beta)``."""
    return make_rep('D', (a.rows, b.rows, a.cols), (a, b, g), f)


def _k_rep(f: FieldSpec, a: Matrix, b: Matrix) -> Rep:
    return make_rep('K', (a.rows, a.cols), (a, b), f)


def _c_rep(f: FieldSpec, b: Matrix, a: Matrix) -> Rep:
    """C-representation from ``(f_beta, f_alpha)``."""
    return make_rep('C', (a.rows, a.cols), (a, b), f)


def _one_relation(f: FieldSpec, x: Matrix, y: Matrix) -> RelObj:
    return RelObj(f, x.rows, x.rows, vstack(x, y))


def _s_families() -> tuple[Family, ...]:
    def I(n, f):  # noqa: E743
        return identity(n, f)

    return (
        Family(
            TypeName.ZERO,
            1,
            lambda n: (n, n, n, n),
            lambda n, f, cell: _s_rep(f, I(n, f), cell, I(n, f), I(n, f)),
            regular=True,
        ),
        Family(
            TypeName.I,
            1,
            lambda n: (n, n, n, n),
            lambda n, f, cell=None: _s_rep(
                f, I(n, f), jordan_plus(n, f), I(n, f), I(n, f)
            ),
        ),
        Family(
            TypeName.II,
            0,
            lambda n: (n + 1, n, n + 1, n),
            lambda n, f, cell=None: _s_rep(
                f, I(n + 1, f), i_down(n, f), i_left(n, f), I(n, f)
            ),
        ),
        Family(
            TypeName.III,
            0,
            lambda n: (n + 1, n, n, n),
            lambda n, f, cell=None: _s_rep(
                f, i_up(n, f), i_down(n, f), I(n, f), I(n, f)
            ),
        ),
        Family(
            TypeName.III_STAR,
            0,
            lambda n: (n, n + 1, n + 1, n + 1),
            lambda n, f, cell=None: _s_rep(
                f, i_left(n, f), i_right(n, f), I(n + 1, f), I(n + 1, f)
            ),
        ),
        Family(
            TypeName.IV,
            0,
            lambda n: (n + 1, n + 1, n + 1, n),
            lambda n, f, cell=None: _s_rep(
                f, I(n + 1, f), i_up(n, f), I(n + 1, f), i_down(n, f)
            ),
        ),
        Family(
            TypeName.IV_STAR,
            0,
            lambda n: (n, n, n, n + 1),
            lambda n, f, cell=None: _s_rep(
                f, I(n, f), i_left(n, f), I(n, f), i_right(n, f)
            ),
        ),
    )


def _s_to_pair(v: Rep) -> PairRelObj:
    a, b, c, d = v.mats
    return PairRelObj(
        v.field, v.dims[0], v.dims[1], vstack(a, b), vstack(c, d)
    )


def _pair_family(family: Family) -> Family:
    # IV* at n = 0 has a relation basis without full rank.
    min_n = 1 if family.type_name is TypeName.IV_STAR else family.min_n
    build = family.build
    return Family(
        family.type_name,
        min_n,
        family.dims,
        lambda n, f, cell=None: _s_to_pair(build(n, f, cell)),
        family.regular,
    )


def _build_registry() -> dict[str, tuple[Family, ...]]:
    I = identity  # noqa: E741
    f_families = (
        Family(
            TypeName.ZERO,
            1,
            lambda n: (2 * n, n, n, n, n),
            _f_zero,
            regular=True,
        ),
        Family(TypeName.I, 1, lambda n: (2 * n, n, n, n, n), _f_one),
        Family(
            TypeName.II,
            0,
            lambda n: (2 * n + 1, n + 1, n + 1, n, n),
            _f_two,
        ),
        Family(
            TypeName.III,
            0,
            lambda n: (2 * n + 1, n + 1, n, n, n),
            _f_three,
        ),
        Family(
            TypeName.III_STAR,
            0,
            lambda n: (2 * n + 1, n, n + 1, n + 1, n + 1),
            _f_three_star,
        ),
        Family(
            TypeName.IV,
            0,
            lambda n: (2 * n + 2, n + 1, n + 1, n + 1, n),
            _f_four,
        ),
        Family(
            TypeName.IV_STAR,
            0,
            lambda n: (2 * n + 2, n + 1, n + 1, n + 1, n + 2),
            _f_four_star,
        ),
        Family(TypeName.V, 0, lambda n: (2 * n + 1, n, n, n, n), _f_five),
        Family(
            TypeName.V_STAR,
            0,
            lambda n: (2 * n + 1, n + 1, n + 1, n + 1, n + 1),
            _f_five_star,
        ),
    ) + tuple(
        Family(
            TypeName(f'Inj{vertex}'),
            0,
            lambda n, vertex=vertex: tuple(
                1 if x == vertex else 0 for x in range(5)
            ),
            _f_injective(vertex),
        )
        for vertex in range(1, 5)
    )
    s_families = _s_families()
    d_families = (
        Family(
            TypeName.ZERO,
            1,
            lambda n: (n, n, n),
            lambda n, f, cell: _d_rep(f, I(n, f), cell, I(n, f)),
            regular=True,
        ),
        Family(
            TypeName.I,
            1,
            lambda n: (n, n, n),
            lambda n, f, cell=None: _d_rep(
                f, I(n, f), jordan_plus(n, f), I(n, f)
            ),
        ),
        Family(
            TypeName.I_PRIME,
            1,
            lambda n: (n, n, n),
            lambda n, f, cell=None: _d_rep(
                f, jordan_plus(n, f), I(n, f), I(n, f)
            ),
        ),
        Family(
            TypeName.I_SECOND,
            1,
            lambda n: (n, n, n),
            lambda n, f, cell=None: _d_rep(
                f, I(n, f), I(n, f), jordan_plus(n, f)
            ),
        ),
        Family(
            TypeName.II,
            0,
            lambda n: (n + 1, n, n + 1),
            lambda n, f, cell=None: _d_rep(
                f, i_down(n, f), I(n + 1, f), i_left(n, f)
            ),
        ),
        Family(
            TypeName.II_STAR,
            0,
            lambda n: (n, n + 1, n),
            lambda n, f, cell=None: _d_rep(
                f, i_left(n, f), I(n, f), i_down(n, f)
            ),
        ),
        Family(
            TypeName.III,
            0,
            lambda n: (n + 1, n, n),
            lambda n, f, cell=None: _d_rep(
                f, i_up(n, f), i_down(n, f), I(n, f)
            ),
        ),
        Family(
            TypeName.III_STAR,
            0,
            lambda n: (n, n + 1, n + 1),
            lambda n, f, cell=None: _d_rep(
                f, i_left(n, f), i_right(n, f), I(n + 1, f)
            ),
        ),
        Family(
            TypeName.IV,
            0,
            lambda n: (n + 1, n + 1, n),
            lambda n, f, cell=None: _d_rep(
                f, I(n + 1, f), i_up(n, f), i_down(n, f)
            ),
        ),
        Family(
            TypeName.IV_STAR,
            0,
            lambda n: (n, n, n + 1),
            lambda n, f, cell=None: _d_rep(
                f, I(n, f), i_left(n, f), i_right(n, f)
            ),
        ),
    )
    k_families = (
        Family(
            TypeName.ZERO,
            1,
            lambda n: (n, n),
            lambda n, f, cell: _k_rep(f, I(n, f), cell),
            regular=True,
        ),
        Family(
            TypeName.I,
            1,
            lambda n: (n, n),
            lambda n, f, cell=None: _k_rep(f, I(n, f), jordan_plus(n, f)),
        ),
        Family(
            TypeName.I_PRIME,
            1,
            lambda n: (n, n),
            lambda n, f, cell=None: _k_rep(f, jordan_plus(n, f), I(n, f)),
        ),
        Family(
            TypeName.II,
            0,
            lambda n: (n + 1, n),
            lambda n, f, cell=None: _k_rep(f, i_down(n, f), i_up(n, f)),
        ),
        Family(
            TypeName.III,
            0,
            lambda n: (n, n + 1),
            lambda n, f, cell=None: _k_rep(f, i_right(n, f), i_left(n, f)),
        ),
    )
    c_families = (
        Family(
            TypeName.ZERO,
            1,
            lambda n: (n, n),
            lambda n, f, cell: _c_rep(f, cell, I(n, f)),
            regular=True,
        ),
        Family(
            TypeName.I,
            1,
            lambda n: (n, n),
            lambda n, f, cell=None: _c_rep(f, jordan_plus(n, f), I(n, f)),
        ),
        Family(
            TypeName.I_PRIME,
            1,
            lambda n: (n, n),
            lambda n, f, cell=None: _c_rep(f, I(n, f), jordan_plus(n, f)),
        ),
        Family(
            TypeName.II,
            0,
            lambda n: (n, n + 1),
            lambda n, f, cell=None: _c_rep(f, i_down(n, f), i_left(n, f)),
        ),
        Family(
            TypeName.III,
            0,
            lambda n: (n + 1, n),
            lambda n, f, cell=None: _c_rep(f, i_left(n, f), i_down(n, f)),
        ),
    )
    # One relation: (space dimension, relation dimension).
    rel_families = (
        Family(
            TypeName.ZERO,
            1,
            lambda n: (n, n),
            lambda n, f, cell: _one_relation(f, cell, I(n, f)),
            regular=True,
        ),
        Family(
            TypeName.I,
            1,
            lambda n: (n, n),
            lambda n, f, cell=None: _one_relation(
                f, jordan_plus(n, f), I(n, f)
            ),
        ),
        Family(
            TypeName.I_PRIME,
            1,
            lambda n: (n, n),
            lambda n, f, cell=None: _one_relation(
                f, I(n, f), jordan_plus(n, f)
            ),
        ),
        Family(
            TypeName.II,
            0,
            lambda n: (n + 1, n),
            lambda n, f, cell=None: _one_relation(
                f, i_up(n, f), i_down(n, f)
            ),
        ),
        Family(
            TypeName.III,
            1,
            lambda n: (n, n + 1),
            lambda n, f, cell=None: _one_relation(
                f, i_left(n, f), i_right(n, f)
            ),
        ),
    )
    return {
        'F': f_families,
        'S': s_families,
        'D': d_families,
        'K': k_families,
        'C': c_families,
        'LinRel1': rel_families,
        'PairRel': tuple(_pair_family(family) for family in s_families),
    }


FAMILIES: dict[str, tuple[Family, ...]] = _build_registry()


def category_perms(category: str) -> tuple[Perm, ...]:
    if category == 'F':
        return ALL_PERMS
    if category in ('S', 'PairRel'):
        return KLEIN_PERMS
    return (IDENTITY_PERM,)


def get_family(category: str, type_name: TypeName) -> Family:
    if category not in FAMILIES:
        raise InvalidTagError(f'Wrong category {category!r}.')
    for family in FAMILIES[category]:
        if family.type_name is type_name:
            return family
    raise InvalidTagError(
        f'Category {category} has no family of type {type_name.value}.'
    )


def _permute_dims(dims: DimVector, perm: Perm, category: str) -> DimVector:
    """Dimension vector after relabeling the subspaces by ``perm``."""
    offset = 1 if category == 'F' else 0
    result = list(dims)
    for i, image in enumerate(perm):
        result[offset + i] = dims[offset + image - 1]
    return tuple(result)


def _check_tag(tag: IndecompTag, field: FieldSpec) -> Family:
    family = get_family(tag.category, tag.type_name)
    if tag.n < family.min_n:
        raise InvalidTagError(
            f'Wrong parameter n={tag.n} for {tag.category}:'
            f'{tag.type_name.value}, expected n >= {family.min_n}.'
        )
    if family.regular:
        if tag.poly is None:
            raise InvalidTagError(f'Tag {tag} needs a polynomial p.')
        if tag.poly.field != field:
            raise InvalidTagError(f'Polynomial of {tag} is not over {field}.')
        if tag.poly.coeffs == (0, 1):
            raise InvalidTagError(f'Tag {tag} needs p(t) != t.')
        if tag.s < 1 or tag.s * tag.poly.degree != tag.n:
            raise InvalidTagError(
                f'Tag {tag} needs n = s * deg p, got n={tag.n}.'
            )
    elif tag.poly is not None:
        raise InvalidTagError(f'Tag {tag} takes no polynomial.')
    if tag.perm is not None and tuple(tag.perm) not in category_perms(
        tag.category
    ):
        raise InvalidTagError(
            f'Wrong permutation {tag.perm} for category {tag.category}.'
        )
    return family


def canon_dims(tag: IndecompTag) -> DimVector:
    """Dimension vector of ``canon_rep(tag)`` without building it.

    One relation reports (space, relation) dimensions and pairs report
    (V1, V2, R1, R2).
    """
    family = get_family(tag.category, tag.type_name)
    dims = family.dims(tag.n)
    if tag.perm is not None:
        dims = _permute_dims(dims, tag.perm, tag.category)
    return dims


def canon_rep(tag: IndecompTag, field: FieldSpec) -> CanonObject:
    """The canonical indecomposable named by ``tag``."""
    family = _check_tag(tag, field)
    cell = None
    if family.regular:
        assert tag.poly is not None
        cell = companion(tag.poly, tag.s)
    perm = tuple(tag.perm) if tag.perm is not None else IDENTITY_PERM
    if tag.category == 'PairRel' and perm != IDENTITY_PERM:
        s_family = get_family('S', tag.type_name)
        return _s_to_pair(relabel(s_family.build(tag.n, field, cell), perm))
    obj = family.build(tag.n, field, cell)
    if perm != IDENTITY_PERM:
        obj = relabel(obj, perm)
    return obj


def object_category(obj: CanonObject) -> str:
    if isinstance(obj, Rep):
        return obj.quiver
    if isinstance(obj, PairRelObj):
        return 'PairRel'
    return 'LinRel1'


def object_dims(obj: CanonObject) -> DimVector:
    if isinstance(obj, Rep):
        return obj.dims
    if isinstance(obj, PairRelObj):
        return obj.dim1, obj.dim2, obj.basis1.cols, obj.basis2.cols
    return obj.dim1, obj.dim


def polynomial_candidates(
    field: FieldSpec, n: int
) -> list[tuple[Poly, int]]:
    """All ``(p, s)`` with ``p`` monic irreducible, ``p != t`` and
    ``s * deg p = n``, by increasing degree."""
    if not field.is_prime:
        return []
    result = []
    for degree in range(1, n + 1):
        if n % degree:
            continue
        for p in monic_irreducibles(field, degree):
            if p.coeffs != (0, 1):
                result.append((p, n // degree))
    return result


def _is_t_minus_one(p: Poly) -> bool:
    field = p.field
    return p.coeffs == (field.neg(field.one), 1)


def _in_family(category: str, p: Poly) -> bool:
    # NOTE: F:0(n, p=t-1, s=n) is isomorphic to F:I(n); the tag is F:I.
    if p.coeffs == (0, 1):
        return False
    return not (category == 'F' and _is_t_minus_one(p))


def _family_parameters(
    family: Family, dims: DimVector, perm: Perm, category: str
) -> Iterator[int]:
    for n in range(family.min_n, max(dims, default=0) + 2):
        candidate = family.dims(n)
        if perm != IDENTITY_PERM:
            candidate = _permute_dims(candidate, perm, category)
        if candidate == tuple(dims):
            yield n


def candidate_tags(
    category: Category,
    dims: DimVector,
    field: FieldSpec,
    candidates: Optional[Sequence[tuple[Poly, int]]] = None,
) -> list[IndecompTag]:
    """Tags whose canonical object has dimension vector ``dims``.

    Identity labeling first, then families in table order. Over the
    rationals the regular family only uses ``candidates``. The regular
    family of F skips ``p = t - 1``, which is reported as F:I.
    """
    if category not in FAMILIES:
        raise InvalidTagError(f'Wrong category {category!r}.')
    tags = []
    for perm in category_perms(category):
        for family in FAMILIES[category]:
            symmetric = family.type_name.value.startswith('Inj')
            if symmetric and perm != IDENTITY_PERM:
                continue
            tag_perm = None if perm == IDENTITY_PERM else perm
            for n in _family_parameters(family, dims, perm, category):
                if not family.regular:
                    tags.append(
                        IndecompTag(
                            category, family.type_name, n, perm=tag_perm
                        )
                    )
                    continue
                pool = (
                    candidates
                    if candidates is not None
                    else polynomial_candidates(field, n)
                )
                for p, s in pool:
                    if s * p.degree == n and _in_family(category, p):
                        tags.append(
                            IndecompTag(
                                category, family.type_name, n, p, s, tag_perm
                            )
                        )
    return tags


def _same_class(a: CanonObject, b: CanonObject, seed: int) -> bool:
    if isinstance(a, Rep):
        return is_isomorphic(a, b, seed)
    return rel_is_isomorphic(
        a, b, one_space=isinstance(a, RelObj), seed=seed
    )


def match_indecomposable(
    obj: CanonObject,
    candidates: Optional[Sequence[tuple[Poly, int]]] = None,
    seed: int = 0,
) -> Optional[IndecompTag]:
    """The first canonical tag isomorphic to the indecomposable ``obj``."""
    category = object_category(obj)
    for tag in candidate_tags(
        category, object_dims(obj), obj.field, candidates
    ):
        try:
            canonical = canon_rep(tag, obj.field)
        except ReducibleModulusError:
            continue
        if _same_class(canonical, obj, seed):
            return tag
    return None


def classify(
    obj: CanonObject,
    candidates: Optional[Sequence[tuple[Poly, int]]] = None,
    seed: int = 0,
) -> list[tuple[IndecompTag, int]]:
    """Decomposes ``obj`` and names every summand by its canonical tag."""
    if isinstance(obj, Rep):
        summands = decompose(obj, seed)
    else:
        summands = rel_decompose(obj, seed)
    result = []
    for piece, count in summands:
        tag = match_indecomposable(piece, candidates, seed)
        if tag is None:
            raise UnclassifiedSummandError(
                f'No canonical {object_category(piece)} indecomposable '
                f'matches a summand of dimensions {object_dims(piece)}.'
            )
        logger.debug('Summand %s matched %s.', object_dims(piece), tag)
        result.append((tag, count))
    return result


def nhat(p: Poly, s: int, field: Optional[FieldSpec] = None) -> Rep:
    """The F-representation ``(k^2r; k^r x 4)`` with ``f_gamma`` the
    diagonal and ``f_delta = (T; I)`` for the Frobenius cell ``T`` of
    ``p**s``."""
    field = field or p.field
    if p.field != field:
        raise InvalidTagError(f'Polynomial over {p.field}, field {field}.')
    cell = companion(p, s)
    if p.degree == 1 and p.coeffs[0] in (0, field.neg(field.one)):
        logger.warning(
            'nhat(%s) lies outside the one-parameter family.', format_poly(p)
        )
    r = cell.rows
    i = identity(r, field)
    return _tetrad(
        field, (r, r), (r,) * 4, [(i, None), (None, i), (i, i), (cell, i)]
    )


def nhat_family(r: int, field: FieldSpec) -> list[tuple[Poly, int, Rep]]:
    """Every ``nhat(p, s)`` with ``s * deg p = r`` and ``p`` not in
    ``{t, t - 1}``."""
    members = []
    for p, s in polynomial_candidates(field, r):
        if _is_t_minus_one(p):
            continue
        members.append((p, s, nhat(p, s, field)))
    return members
