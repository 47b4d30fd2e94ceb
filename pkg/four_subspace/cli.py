"""Command line interface: ``four-subspace <command> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Optional

from .canon import (
    canon_rep,
    classify,
    match_indecomposable,
    nhat,
    object_dims,
    parse_tag,
)
from .exactfield import FieldSpec, parse_field, parse_poly
from .exactmatrix import Matrix
from .exceptions import FourSubspaceError, ParseError
from .functors import (
    apply_functor,
    extension_witness_c5,
    hom_transport_check,
    in_image,
    random_extension,
)
from .linrel import (
    RelObj,
    rel_compose,
    rel_decompose,
    rel_dual,
    rel_hom_basis,
    rel_inverse,
    rel_is_isomorphic,
)
from .oracle import census, census_sweep, format_reports
from .parser import FileObject, dumps, format_matrix, read
from .quiverrep import Rep, decompose, hom_basis, is_isomorphic

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f'error: {message}\n')
        raise SystemExit(2)


def _field(text: str) -> FieldSpec:
    try:
        return parse_field(text)
    except ParseError as err:
        raise argparse.ArgumentTypeError(str(err)) from err


def _candidate(text: str) -> str:
    if ':' not in text:
        raise argparse.ArgumentTypeError(
            f'Wrong candidate {text!r}, expected <poly>:<s>.'
        )
    return text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--field', type=_field, default=FieldSpec(2), help='F<p> or Q'
    )
    common.add_argument('--seed', type=int, default=0)
    common.add_argument(
        '--format', choices=('text', 'lines'), default='text', dest='fmt'
    )
    common.add_argument('-v', '--verbose', action='store_true')

    def functor_flag(p: argparse.ArgumentParser):
        p.add_argument(
            '--functor', type=int, choices=range(1, 7), required=True
        )

    parser = _ArgumentParser(
        prog='four-subspace',
        description='Representations of the four subspace quiver and '
        'linear relations over exact fields.',
    )
    sub = parser.add_subparsers(dest='command', required=True)
    kwargs = {'parents': [common]}

    p = sub.add_parser('decompose', help='indecomposable summands', **kwargs)
    p.add_argument('file')
    p = sub.add_parser('classify', help='canonical tags of summands', **kwargs)
    p.add_argument('file')
    p.add_argument(
        '--candidate',
        action='append',
        type=_candidate,
        default=None,
        help='<poly>:<s> pair for the regular families over Q',
    )
    p = sub.add_parser('hom', help='dimension of Hom(A, B)', **kwargs)
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('--one-space', action='store_true')
    p = sub.add_parser('iso', help='isomorphism test', **kwargs)
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('--one-space', action='store_true')
    p = sub.add_parser('canon', help='canonical object of a tag', **kwargs)
    p.add_argument('tag')
    p = sub.add_parser('functor-apply', help='image in rep F', **kwargs)
    functor_flag(p)
    p.add_argument('file')
    p = sub.add_parser('check-image', help='essential image test', **kwargs)
    functor_flag(p)
    p.add_argument('file')
    p = sub.add_parser('nhat', help='the N-hat representation', **kwargs)
    p.add_argument('poly')
    p.add_argument('-s', type=int, default=1)
    p = sub.add_parser('census', help='brute-force census', **kwargs)
    p.add_argument('category')
    p.add_argument('dims', nargs='*', type=int)
    p.add_argument(
        '--sweep',
        type=int,
        default=None,
        metavar='MAX_TOTAL',
        help='census every dimension vector up to this total',
    )
    p.add_argument('--no-prefilter', action='store_true')
    p.add_argument('--workers', type=int, default=None)
    p.add_argument(
        '--executor', choices=('thread', 'process'), default=None
    )
    p = sub.add_parser('rel-compose', help='composition S o R', **kwargs)
    p.add_argument('first', help='R')
    p.add_argument('second', help='S')
    p = sub.add_parser('rel-inverse', help='inverse relation', **kwargs)
    p.add_argument('file')
    p = sub.add_parser('rel-dual', help='dual relation', **kwargs)
    p.add_argument('file')
    p = sub.add_parser(
        'extension-test', help='extension closure of the F5 image', **kwargs
    )
    p.add_argument('first', help='U')
    p.add_argument('second', help='W')
    p = sub.add_parser(
        'hom-transport', help='Hom bijection of a functor', **kwargs
    )
    functor_flag(p)
    p.add_argument('first')
    p.add_argument('second')
    return parser


def _relation(obj: FileObject, path: str) -> RelObj:
    if not isinstance(obj, RelObj):
        raise ParseError(f'{path} does not hold a single relation.')
    return obj


def _rep(obj: FileObject, path: str) -> Rep:
    if not isinstance(obj, Rep):
        raise ParseError(f'{path} does not hold a representation.')
    return obj


def _dims_text(obj: FileObject) -> str:
    return ' '.join(str(d) for d in object_dims(obj))


def _decompose(obj: FileObject, seed: int) -> list[str]:
    if isinstance(obj, Rep):
        summands = decompose(obj, seed)
    else:
        summands = rel_decompose(obj, seed)
    lines = []
    for piece, count in summands:
        tag = match_indecomposable(piece, seed=seed)
        label = str(tag) if tag is not None else '-'
        lines.append(f'{label} dims {_dims_text(piece)} multiplicity {count}')
    return sorted(lines)


def _candidates(texts: Optional[list[str]], field: FieldSpec):
    if not texts:
        return None
    pairs = []
    for text in texts:
        poly, _, s = text.rpartition(':')
        if not s.isdigit():
            raise ParseError(f'Wrong candidate {text!r}, expected <poly>:<s>.')
        pairs.append((parse_poly(poly, field), int(s)))
    return pairs


def _hom_dim(a: FileObject, b: FileObject, one_space: bool) -> int:
    if isinstance(a, Rep) and isinstance(b, Rep):
        return len(hom_basis(a, b))
    if isinstance(a, Rep) or isinstance(b, Rep):
        raise ParseError('Hom needs two objects of the same kind.')
    return len(rel_hom_basis(a, b, one_space))


def _iso(a: FileObject, b: FileObject, one_space: bool, seed: int) -> bool:
    if isinstance(a, Rep) and isinstance(b, Rep):
        return is_isomorphic(a, b, seed)
    if isinstance(a, Rep) or isinstance(b, Rep):
        raise ParseError('Isomorphism needs two objects of the same kind.')
    return rel_is_isomorphic(a, b, one_space, seed)


def _matrix_lines(name: str, m: Matrix) -> list[str]:
    return [f'{name}:'] + format_matrix(m)


def run(args: argparse.Namespace) -> str:
    """Executes one parsed command and returns its report."""
    field, seed, command = args.field, args.seed, args.command
    if command == 'canon':
        return dumps(canon_rep(parse_tag(args.tag, field), field))
    if command == 'nhat':
        return dumps(nhat(parse_poly(args.poly, field), args.s, field))
    if command == 'census':
        return _census(args)
    first = read(getattr(args, 'file', None) or args.first, field)
    if command == 'decompose':
        return '\n'.join(_decompose(first, seed)) + '\n'
    if command == 'classify':
        result = classify(first, _candidates(args.candidate, field), seed)
        lines = sorted(f'{tag} multiplicity {count}' for tag, count in result)
        return '\n'.join(lines) + '\n'
    if command == 'functor-apply':
        return dumps(apply_functor(args.functor, first))
    if command == 'check-image':
        membership = in_image(args.functor, _rep(first, args.file))
        if not membership:
            return f'false (reason: {membership.reason})\n'
        return 'true\n' + dumps(membership.witness)
    if command == 'rel-inverse':
        return dumps(rel_inverse(_relation(first, args.file)))
    if command == 'rel-dual':
        return dumps(rel_dual(_relation(first, args.file)))
    second = read(args.second, field)
    if command == 'hom':
        return f'{_hom_dim(first, second, args.one_space)}\n'
    if command == 'iso':
        return f'{str(_iso(first, second, args.one_space, seed)).lower()}\n'
    if command == 'rel-compose':
        rho = _relation(first, args.first)
        sigma = _relation(second, args.second)
        return dumps(rel_compose(sigma, rho))
    if command == 'hom-transport':
        result = hom_transport_check(args.functor, first, second)
        return (
            f'source {result.dim_source} target {result.dim_target} '
            f'bijective {str(result.bijective).lower()}\n'
        )
    if command == 'extension-test':
        u, w = _rep(first, args.first), _rep(second, args.second)
        v = random_extension(u, w, seed)
        membership = in_image(5, v)
        lines = [f'in_image {str(bool(membership)).lower()}']
        eps, zeta = extension_witness_c5(u, v, w)
        lines += _matrix_lines('epsilon', eps) + _matrix_lines('zeta', zeta)
        return '\n'.join(lines) + '\n' + dumps(v)
    raise ParseError(f'Unknown command {command!r}.')


def _census(args: argparse.Namespace) -> str:
    from . import set_executor, set_worker_count

    if args.workers is not None:
        set_worker_count(args.workers)
    if args.executor is not None:
        set_executor(args.executor)
    prefilter = not args.no_prefilter
    if args.sweep is not None:
        reports = census_sweep(
            args.category, args.field, args.sweep, prefilter, args.seed
        )
        return format_reports(reports, args.fmt)
    if not args.dims:
        raise ParseError('census needs a dimension vector or --sweep.')
    report = census(
        args.category, args.field, tuple(args.dims), prefilter, args.seed
    )
    return report.format(args.fmt)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
    )
    try:
        sys.stdout.write(run(args))
    except ParseError as err:
        sys.stderr.write(f'error: {err}\n')
        return 2
    except FourSubspaceError as err:
        sys.stderr.write(f'error: {err}\n')
        return 1
    except (OSError, UnicodeDecodeError) as err:
        sys.stderr.write(f'error: {err}\n')
        return 2
    return 0


if __name__ == '__main__':
    raise SystemExit(main())
