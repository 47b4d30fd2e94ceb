"""Reading and writing representation and relation files.

Files are line based; ``#`` starts a comment. A matrix is written as a
``<rows>x<cols>`` header followed by one line per row.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from pathlib import Path
from typing import Optional, Union

from .exactfield import FieldSpec, format_field, format_scalar, parse_field
from .exactmatrix import Matrix
from .exceptions import FourSubspaceError, ParseError
from .linrel import PairRelObj, RelObj
from .quiverrep import GREEK_NAMES, Rep, get_quiver, make_rep
from .typing import FilePath

FileObject = Union[Rep, RelObj, PairRelObj]

_HEADER = re.compile(r'^([a-z]+[0-9]?)(?:\s+([^:]+))?:\s*(.*)$')
_SHAPE = re.compile(r'^([0-9]+)x([0-9]+)$')


class _Lines:
    def __init__(self, text: str):
        self._lines: list[tuple[int, str]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if line:
                self._lines.append((number, line))
        self._pos = 0

    def __bool__(self) -> bool:
        return self._pos < len(self._lines)

    def peek(self) -> tuple[int, str]:
        if not self:
            raise ParseError('Unexpected end of file.')
        return self._lines[self._pos]

    def next(self) -> tuple[int, str]:
        item = self.peek()
        self._pos += 1
        return item


def _header(lines: _Lines) -> tuple[int, str, Optional[str], str]:
    number, line = lines.next()
    match = _HEADER.match(line)
    if match is None:
        raise ParseError(f'Line {number}: expected a header, got {line!r}.')
    key, name, value = match.groups()
    return number, key, name.strip() if name else None, value.strip()


def _ints(number: int, text: str) -> list[int]:
    try:
        return [int(x) for x in text.split()]
    except ValueError:
        raise ParseError(
            f'Line {number}: expected integers, got {text!r}.'
        ) from None


def format_matrix(m: Matrix) -> list[str]:
    lines = [f'{m.rows}x{m.cols}']
    if m.cols:
        lines.extend(
            ' '.join(format_scalar(x) for x in m.row(i)) for i in range(m.rows)
        )
    return lines


def _parse_matrix(lines: _Lines, field: FieldSpec) -> Matrix:
    number, line = lines.next()
    match = _SHAPE.match(line)
    if match is None:
        raise ParseError(
            f'Line {number}: expected a <rows>x<cols> header, got {line!r}.'
        )
    rows, cols = int(match.group(1)), int(match.group(2))
    if not (rows and cols):
        return Matrix(field, rows, cols, ())
    entries = []
    for _ in range(rows):
        number, line = lines.next()
        row = line.split()
        if len(row) != cols:
            raise ParseError(
                f'Line {number}: expected {cols} entries, got {len(row)}.'
            )
        try:
            entries.append([field.scalar(x) for x in row])
        except FourSubspaceError as err:
            raise ParseError(f'Line {number}: {err}') from err
    return Matrix.from_rows(field, entries, cols)


def parse_matrix(text: str, field: FieldSpec) -> Matrix:
    """Parses a single matrix block."""
    lines = _Lines(text)
    m = _parse_matrix(lines, field)
    if lines:
        number, line = lines.peek()
        raise ParseError(f'Line {number}: trailing text {line!r}.')
    return m


def _expect(lines: _Lines, key: str, name: Optional[str] = None) -> str:
    number, found, found_name, value = _header(lines)
    if found != key or found_name != name:
        label = f'{key} {name}' if name else key
        raise ParseError(f'Line {number}: expected {label!r} header.')
    return value


def _parse_rep(lines: _Lines, field: FieldSpec) -> Rep:
    quiver = _expect(lines, 'quiver')
    try:
        shape = get_quiver(quiver)
    except FourSubspaceError as err:
        raise ParseError(str(err)) from err
    number, key, _, value = _header(lines)
    if key != 'dims':
        raise ParseError(f'Line {number}: expected a dims header.')
    dims = _ints(number, value)
    mats = {}
    while lines:
        number, key, name, value = _header(lines)
        if key != 'map' or name is None or value:
            raise ParseError(f'Line {number}: expected "map <name>:".')
        name = GREEK_NAMES.get(name, name)
        if name in mats:
            raise ParseError(f'Line {number}: map {name} given twice.')
        mats[name] = _parse_matrix(lines, field)
    unknown = set(mats) - {a.name for a in shape.arrows}
    if unknown:
        raise ParseError(
            f'Quiver {quiver} has no arrows {sorted(unknown)}.'
        )
    return make_rep(shape.name, dims, mats, field)


def _parse_spaces(lines: _Lines) -> tuple[int, int]:
    number, key, _, value = _header(lines)
    dims = _ints(number, value)
    if key != 'spaces' or len(dims) != 2:
        raise ParseError(f'Line {number}: expected "spaces: d1 d2".')
    return dims[0], dims[1]


def _parse_relation(
    lines: _Lines, field: FieldSpec, name: str
) -> Matrix:
    _expect(lines, 'relation', name)
    return _parse_matrix(lines, field)


def loads(text: str, field: Optional[FieldSpec] = None) -> FileObject:
    """Parses a rep, linrel or pairrel document.

    Args:
        text: The document.
        field: Used when the document has no ``field:`` line.
    """
    lines = _Lines(text)
    number, key, _, value = _header(lines)
    if key == 'field':
        field = parse_field(value)
        number, key, _, value = _header(lines)
    if field is None:
        raise ParseError('The document declares no field.')
    if key != 'object':
        raise ParseError(f'Line {number}: expected an object header.')
    if value == 'rep':
        obj: FileObject = _parse_rep(lines, field)
    elif value == 'linrel':
        dim1, dim2 = _parse_spaces(lines)
        basis = _parse_relation(lines, field, 'R')
        obj = RelObj(field, dim1, dim2, basis)
    elif value == 'pairrel':
        dim1, dim2 = _parse_spaces(lines)
        basis1 = _parse_relation(lines, field, 'R1')
        basis2 = _parse_relation(lines, field, 'R2')
        obj = PairRelObj(field, dim1, dim2, basis1, basis2)
    else:
        raise ParseError(
            f'Line {number}: wrong object kind {value!r}, expected '
            'rep, linrel or pairrel.'
        )
    if lines:
        number, line = lines.peek()
        raise ParseError(f'Line {number}: trailing text {line!r}.')
    return obj


def _dump_lines(obj: FileObject) -> Iterator[str]:
    yield f'field: {format_field(obj.field)}'
    if isinstance(obj, Rep):
        yield 'object: rep'
        yield f'quiver: {obj.quiver}'
        yield 'dims: ' + ' '.join(str(d) for d in obj.dims)
        for arrow, m in zip(obj.shape.arrows, obj.mats):
            yield f'map {arrow.name}:'
            yield from format_matrix(m)
        return
    kind = 'pairrel' if isinstance(obj, PairRelObj) else 'linrel'
    yield f'object: {kind}'
    yield f'spaces: {obj.dim1} {obj.dim2}'
    names = ('R1', 'R2') if isinstance(obj, PairRelObj) else ('R',)
    for name, basis in zip(names, obj.bases):
        yield f'relation {name}:'
        yield from format_matrix(basis)


def dumps(obj: FileObject) -> str:
    return '\n'.join(_dump_lines(obj)) + '\n'


def read(path: FilePath, field: Optional[FieldSpec] = None) -> FileObject:
    return loads(Path(path).read_text(encoding='utf-8'), field)


def write(obj: FileObject, path: FilePath) -> None:
    Path(path).write_text(dumps(obj), encoding='ascii')
