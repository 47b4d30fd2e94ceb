"""Brute-force censuses over small prime fields.

A census enumerates every object of a category with a fixed dimension
vector, sorts the objects into isomorphism classes and names every
indecomposable class by its canonical tag. Relations are compared
through their embedding into representations of F.
"""

from __future__ import annotations

import asyncio
import functools
import itertools
import logging
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import prod
from typing import Optional

from .canon import CanonObject, IndecompTag, match_indecomposable
from .exactfield import FieldSpec
from .exactmatrix import Matrix
from .exceptions import (
    DimensionMismatchError,
    TooLargeError,
    UnmatchedClassError,
    UnsupportedFieldError,
)
from .functors import apply_functor
from .linrel import PairRelObj, RelObj
from .quiverrep import (
    QUIVERS,
    Rep,
    fingerprint,
    is_indecomposable,
    is_isomorphic,
    iter_dim_vectors,
)
from .typing import Category, DimVector, Executor, ReportFormat
from .utils import handle_completed_partitions, run_async

logger = logging.getLogger(__name__)

WORKERS_VALUE = 8
EXECUTOR: Executor = 'thread'
CENSUS_GUARD = 10**8
MAX_VERTEX_DIM = 4


@dataclass
class CensusClass:
    index: int
    representative: CanonObject
    orbit: int
    indecomposable: bool = False
    tag: Optional[IndecompTag] = None

    @property
    def unmatched(self) -> bool:
        return self.indecomposable and self.tag is None

    def to_line(self) -> str:
        if self.unmatched:
            tag = 'UNMATCHED'
        else:
            tag = str(self.tag) if self.tag is not None else '-'
        dims = ','.join(str(d) for d in _dims(self.representative))
        return (
            f'class {self.index} dims {dims} '
            f'indecomposable {str(self.indecomposable).lower()} '
            f'tag {tag} orbit {self.orbit}'
        )


@dataclass
class CensusReport:
    category: Category
    field: FieldSpec
    dims: DimVector
    total: int
    classes: list[CensusClass] = dc_field(default_factory=list)

    @property
    def iso_classes(self) -> int:
        return len(self.classes)

    @property
    def indecomposable_classes(self) -> int:
        return sum(c.indecomposable for c in self.classes)

    @property
    def unmatched(self) -> list[CensusClass]:
        return [c for c in self.classes if c.unmatched]

    def to_lines(self) -> str:
        return ''.join(c.to_line() + '\n' for c in self.classes)

    def to_text(self) -> str:
        rows = [
            ('category', str(self.category)),
            ('field', str(self.field)),
            ('dims', ' '.join(str(d) for d in self.dims)),
            ('objects', str(self.total)),
            ('iso classes', str(self.iso_classes)),
            ('indecomposable', str(self.indecomposable_classes)),
            ('unmatched', str(len(self.unmatched))),
        ]
        width = max(len(k) for k, _ in rows)
        lines = [f'{k.ljust(width)}  {v}' for k, v in rows]
        for c in self.classes:
            if c.indecomposable:
                label = 'UNMATCHED' if c.tag is None else str(c.tag)
            else:
                label = 'decomposable'
            lines.append(f'  {c.index:>4}  {label:<32} orbit {c.orbit}')
        return '\n'.join(lines) + '\n'

    def format(self, fmt: ReportFormat = 'text') -> str:
        if fmt == 'lines':
            return self.to_lines()
        if fmt == 'text':
            return self.to_text()
        raise ValueError(f'Wrong parameter fmt={fmt!r}.')


def _dims(obj: CanonObject) -> DimVector:
    if isinstance(obj, Rep):
        return obj.dims
    if isinstance(obj, PairRelObj):
        return obj.dim1, obj.dim2, obj.basis1.cols, obj.basis2.cols
    return obj.dim1, obj.dim


def _gaussian_binomial(n: int, r: int, q: int) -> int:
    if not 0 <= r <= n:
        return 0
    num = prod(q ** (n - i) - 1 for i in range(r))
    den = prod(q ** (i + 1) - 1 for i in range(r))
    return num // den


def iter_matrices(rows: int, cols: int, field: FieldSpec) -> Iterator[Matrix]:
    """All ``rows x cols`` matrices, entries row-major in field order."""
    for entries in itertools.product(field.elements(), repeat=rows * cols):
        yield Matrix(field, rows, cols, tuple(entries))


def iter_subspaces(n: int, r: int, field: FieldSpec) -> Iterator[Matrix]:
    """Every ``r``-dimensional subspace of ``k^n`` as an ``n x r`` basis.

    The columns are the rows of the reduced row echelon form; pivot sets
    come in lexicographic order.
    """
    elements = list(field.elements())
    for pivots in itertools.combinations(range(n), r):
        free = [
            (i, j)
            for i, p in enumerate(pivots)
            for j in range(p + 1, n)
            if j not in pivots
        ]
        for values in itertools.product(elements, repeat=len(free)):
            rows = [[0] * n for _ in range(r)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), value in zip(free, values):
                rows[i][j] = value
            yield Matrix.from_rows(field, rows, n).T


def _factors(
    category: Category, field: FieldSpec, dims: DimVector
) -> list[tuple[int, Callable[[], Iterator[Matrix]]]]:
    """Sizes and generators of the independent choices of an object."""
    q = field.p
    assert q is not None
    if category in QUIVERS:
        quiver = QUIVERS[category]
        if len(dims) != len(quiver.vertices):
            raise DimensionMismatchError(
                f'Quiver {category} needs {len(quiver.vertices)} dimensions, '
                f'got {dims}.'
            )
        factors = []
        for arrow in quiver.arrows:
            rows = dims[quiver.index(arrow.target)]
            cols = dims[quiver.index(arrow.source)]
            factors.append(
                (
                    q ** (rows * cols),
                    lambda r=rows, c=cols: iter_matrices(r, c, field),
                )
            )
        return factors
    if category == 'LinRel1':
        if len(dims) != 2:
            raise DimensionMismatchError(
                f'One relation needs (space, relation) dimensions, got {dims}.'
            )
        n, r = 2 * dims[0], dims[1]
        return [
            (_gaussian_binomial(n, r, q), lambda: iter_subspaces(n, r, field))
        ]
    if category == 'PairRel':
        if len(dims) != 4:
            raise DimensionMismatchError(
                f'Two relations need (V1, V2, R1, R2) dimensions, got {dims}.'
            )
        n = dims[0] + dims[1]
        return [
            (
                _gaussian_binomial(n, r, q),
                lambda r=r: iter_subspaces(n, r, field),
            )
            for r in dims[2:]
        ]
    raise ValueError(f'Wrong parameter category={category!r}.')


def _build(
    category: Category, field: FieldSpec, dims: DimVector, parts
) -> CanonObject:
    if category in QUIVERS:
        return Rep(category, field, tuple(dims), tuple(parts))
    if category == 'LinRel1':
        return RelObj(field, dims[0], dims[0], parts[0])
    return PairRelObj(field, dims[0], dims[1], parts[0], parts[1])


def _as_rep(obj: CanonObject) -> Rep:
    if isinstance(obj, Rep):
        return obj
    return apply_functor(6 if isinstance(obj, PairRelObj) else 5, obj)


def census_size(category: Category, field: FieldSpec, dims: DimVector) -> int:
    """Number of objects a census of ``dims`` enumerates."""
    _check_census(category, field, dims)
    return prod(size for size, _ in _factors(category, field, dims))


def _check_census(category: Category, field: FieldSpec, dims: DimVector):
    if not field.is_prime:
        raise UnsupportedFieldError(
            f'A census needs a finite field, got {field}.'
        )
    # Relation dimensions are bounded by the spaces.
    spaces = {'LinRel1': dims[:1], 'PairRel': dims[:2]}.get(category, dims)
    if any(d > MAX_VERTEX_DIM for d in spaces):
        raise TooLargeError(
            f'Dimensions {tuple(dims)} exceed {MAX_VERTEX_DIM}.'
        )


def enumerate_objects(
    category: Category, field: FieldSpec, dims: DimVector
) -> Iterator[CanonObject]:
    """Every object with dimension vector ``dims`` in enumeration order."""
    _check_census(category, field, dims)
    factors = _factors(category, field, dims)
    for parts in itertools.product(*(make() for _, make in factors)):
        yield _build(category, field, dims, parts)


def _partition_objects(
    category: Category, field: FieldSpec, dims: DimVector, first: Matrix
) -> Iterator[CanonObject]:
    factors = _factors(category, field, dims)[1:]
    for rest in itertools.product(*(make() for _, make in factors)):
        yield _build(category, field, dims, (first,) + rest)


class _Bucket:
    """Isomorphism classes found so far, keyed by an invariant."""

    def __init__(self, prefilter: bool, seed: int):
        self.prefilter = prefilter
        self.seed = seed
        self.classes: dict[object, list[list]] = {}
        self.order: list[list] = []

    def add(self, obj: CanonObject, rep: Rep, count: int = 1) -> None:
        key = fingerprint(rep) if self.prefilter else rep.dims
        bucket = self.classes.setdefault(key, [])
        for entry in bucket:
            if is_isomorphic(entry[1], rep, self.seed):
                entry[2] += count
                return
        entry = [obj, rep, count]
        bucket.append(entry)
        self.order.append(entry)


def _bucket_partition(
    category: Category,
    field: FieldSpec,
    dims: DimVector,
    first: Matrix,
    prefilter: bool,
    seed: int,
) -> list[list]:
    bucket = _Bucket(prefilter, seed)
    for obj in _partition_objects(category, field, dims, first):
        bucket.add(obj, _as_rep(obj))
    return bucket.order


async def _census_partitions(
    category: Category,
    field: FieldSpec,
    dims: DimVector,
    prefilter: bool,
    seed: int,
) -> list[list[list]]:
    semaphore = asyncio.Semaphore(WORKERS_VALUE)
    _, make_first = _factors(category, field, dims)[0]
    loop = asyncio.get_running_loop()
    pool = (
        ProcessPoolExecutor(max_workers=WORKERS_VALUE)
        if EXECUTOR == 'process'
        else None
    )

    async def run_one(index: int, first: Matrix):
        job = functools.partial(
            _bucket_partition, category, field, dims, first, prefilter, seed
        )
        async with semaphore:
            logger.debug('Census partition %d of %s %s.', index, category, dims)
            if pool is None:
                return index, await asyncio.to_thread(job)
            return index, await loop.run_in_executor(pool, job)

    try:
        to_do = [run_one(k, first) for k, first in enumerate(make_first())]
        return await handle_completed_partitions(
            coros=asyncio.as_completed(to_do)
        )
    finally:
        if pool is not None:
            pool.shutdown()


def census(
    category: Category,
    field: FieldSpec,
    dims: DimVector,
    prefilter: bool = True,
    seed: int = 0,
) -> CensusReport:
    """Enumerates all objects of ``dims`` and classifies them up to
    isomorphism.

    Args:
        category: A quiver name, ``LinRel1`` or ``PairRel``.
        field: A prime field.
        dims: Vertex dimensions; ``(space, relation)`` for ``LinRel1`` and
            ``(V1, V2, R1, R2)`` for ``PairRel``.
        prefilter: Bucket by the invariant fingerprint before the exact
            isomorphism test.
        seed: Seed of the randomized searches.

    Raises:
        TooLargeError: When the enumeration exceeds ``CENSUS_GUARD``.
    """
    dims = tuple(dims)
    total = census_size(category, field, dims)
    if total > CENSUS_GUARD:
        raise TooLargeError(
            f'Census of {category} {dims} over {field} has {total} objects, '
            f'guard is {CENSUS_GUARD}.'
        )
    partitions = run_async(
        _census_partitions(category, field, dims, prefilter, seed)
    )
    merged = _Bucket(prefilter, seed)
    for partition in partitions:
        for obj, rep, count in partition:
            merged.add(obj, rep, count)
    report = CensusReport(category, field, dims, total)
    for index, (obj, rep, count) in enumerate(merged.order):
        cls = CensusClass(index, obj, count)
        if sum(rep.dims) and is_indecomposable(rep, seed):
            cls.indecomposable = True
            cls.tag = match_indecomposable(obj, seed=seed)
        report.classes.append(cls)
    logger.info(
        'Census %s %s over %s: %d objects, %d classes, %d indecomposable.',
        category,
        dims,
        field,
        total,
        report.iso_classes,
        report.indecomposable_classes,
    )
    return report


def sweep_dims(category: Category, max_total_dim: int) -> Iterator[DimVector]:
    """Dimension vectors visited by ``census_sweep``.

    For relations the total counts the spaces ``V1 + V2`` only, so one
    relation on ``k^d`` has total ``2d``; every relation dimension is
    visited.
    """
    if category in QUIVERS:
        yield from iter_dim_vectors(category, max_total_dim)
    elif category == 'LinRel1':
        for d in range(1, max_total_dim // 2 + 1):
            for r in range(2 * d + 1):
                yield d, r
    elif category == 'PairRel':
        for d1, d2 in iter_dim_vectors('K', max_total_dim):
            for r1 in range(d1 + d2 + 1):
                for r2 in range(d1 + d2 + 1):
                    yield d1, d2, r1, r2
    else:
        raise ValueError(f'Wrong parameter category={category!r}.')


def census_sweep(
    category: Category,
    field: FieldSpec,
    max_total_dim: int,
    prefilter: bool = True,
    seed: int = 0,
) -> list[CensusReport]:
    """Runs ``census`` over every dimension vector up to a total.

    Raises:
        UnmatchedClassError: When an indecomposable class has no tag.
    """
    reports = []
    for dims in sweep_dims(category, max_total_dim):
        try:
            reports.append(census(category, field, dims, prefilter, seed))
        except TooLargeError as err:
            logger.warning('Skipping %s %s: %s', category, dims, err)
    failed = [r for r in reports if r.unmatched]
    if failed:
        where = ', '.join(str(r.dims) for r in failed)
        raise UnmatchedClassError(
            f'Unmatched indecomposable {category} classes at {where}.', failed
        )
    return reports


def format_reports(
    reports: Sequence[CensusReport], fmt: ReportFormat = 'text'
) -> str:
    return ''.join(r.format(fmt) for r in reports)
