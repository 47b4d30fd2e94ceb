from __future__ import annotations

from fractions import Fraction
from os import PathLike
from typing import Literal, Union

# NOTE: spelled with Union so the aliases stay importable
# on python 3.9.
FilePath = Union[str, PathLike[str]]
Raw = Union[int, Fraction]

QuiverName = Literal['F', 'S', 'D', 'K', 'C']
Category = Literal['F', 'S', 'D', 'K', 'C', 'LinRel1', 'PairRel']
ReportFormat = Literal['text', 'lines']
ObjectKind = Literal['rep', 'linrel', 'pairrel']
Executor = Literal['thread', 'process']

Perm = tuple[int, ...]
DimVector = tuple[int, ...]
