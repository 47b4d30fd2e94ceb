from __future__ import annotations

from typing import get_args

from .canon import (
    IndecompTag,
    TypeName,
    canon_rep,
    classify,
    nhat,
    nhat_family,
    parse_tag,
)
from .exactfield import RATIONALS, FieldSpec, Poly
from .exactmatrix import Matrix
from .functors import apply_functor, hom_transport_check, in_image
from .linrel import PairRelObj, RelObj
from .oracle import CensusReport, census, census_sweep
from .quiverrep import Rep, decompose, is_indecomposable, is_isomorphic
from .typing import Executor

__version__ = '0.1.0'

__all__ = [
    'RATIONALS',
    'CensusReport',
    'FieldSpec',
    'IndecompTag',
    'Matrix',
    'PairRelObj',
    'Poly',
    'RelObj',
    'Rep',
    'TypeName',
    'apply_functor',
    'canon_rep',
    'census',
    'census_sweep',
    'classify',
    'decompose',
    'hom_transport_check',
    'in_image',
    'is_indecomposable',
    'is_isomorphic',
    'nhat',
    'nhat_family',
    'parse_tag',
]


def _check(name: str, value: int):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f'Wrong parameter {name}={value!r}, expected >= 1.')


def set_enumeration_limit(value: int):
    """The largest Hom space searched exhaustively for an isomorphism or
    an idempotent."""
    import four_subspace.quiverrep

    _check('value', value)
    four_subspace.quiverrep.ENUMERATION_LIMIT = value


def set_random_trials(value: int):
    """The number of random endomorphisms tried before giving up on a
    Fitting splitting."""
    import four_subspace.quiverrep

    _check('value', value)
    four_subspace.quiverrep.RANDOM_TRIALS = value


def set_worker_count(value: int):
    """The maximum number of census partitions processed concurrently."""
    import four_subspace.oracle

    _check('value', value)
    four_subspace.oracle.WORKERS_VALUE = value


def set_census_guard(value: int):
    """The largest number of objects a single census may enumerate."""
    import four_subspace.oracle

    _check('value', value)
    four_subspace.oracle.CENSUS_GUARD = value


def set_executor(kind: Executor):
    """Where census partitions run: ``'thread'`` (default) or
    ``'process'``.

    Worker processes may start from the module defaults of the search
    limits set by the other setters.
    """
    import four_subspace.oracle

    if kind not in get_args(Executor):
        raise ValueError(
            f"Wrong parameter kind={kind!r}, expected 'thread' or 'process'."
        )
    four_subspace.oracle.EXECUTOR = kind
