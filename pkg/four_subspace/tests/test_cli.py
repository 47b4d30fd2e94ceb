import pytest

from four_subspace.canon import canon_rep, parse_tag
from four_subspace.cli import build_parser, main
from four_subspace.exactfield import FieldSpec
from four_subspace.exactmatrix import identity, zero
from four_subspace.functors import apply_functor
from four_subspace.linrel import rel_from_operator, zero_relation
from four_subspace.parser import loads, write
from four_subspace.quiverrep import direct_sum_all

F3 = FieldSpec(3)


def _canon(text):
    return canon_rep(parse_tag(text, F3), F3)


@pytest.fixture
def files(tmp_path):
    paths = {}

    def put(name, obj):
        path = tmp_path / name
        write(obj, path)
        paths[name] = str(path)

    put(
        'k_sum.rep',
        direct_sum_all(
            [_canon('K:II(0)'), _canon('K:II(0)'), _canon('K:I(1)')]
        ),
    )
    put('type_v.rep', _canon('F:V(1)'))
    put('graph.rel', rel_from_operator(identity(1, F3)))
    put('zero.rel', zero_relation(F3, 1, 1))
    put('wide.rel', zero_relation(F3, 2, 1))
    put('c5.rep', apply_functor(5, rel_from_operator(zero(1, 1, F3))))
    bad = tmp_path / 'bad.rep'
    bad.write_text('field: F3\nobject: nothing\n')
    paths['bad.rep'] = str(bad)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_canon(capsys):
    code, out, _ = run(capsys, 'canon', 'F:IV(1)', '--field', 'F3')
    assert code == 0
    assert loads(out) == _canon('F:IV(1)')


def test_decompose(capsys, files):
    code, out, _ = run(capsys, 'decompose', files['k_sum.rep'])
    assert code == 0
    assert out == (
        'K:I(1) dims 1 1 multiplicity 1\n'
        'K:II(0) dims 1 0 multiplicity 2\n'
    )


def test_classify(capsys, files):
    code, out, _ = run(capsys, 'classify', files['k_sum.rep'])
    assert code == 0
    assert out == 'K:I(1) multiplicity 1\nK:II(0) multiplicity 2\n'


def test_output_is_deterministic(capsys, files):
    first = run(capsys, 'decompose', files['k_sum.rep'], '--seed', '7')
    second = run(capsys, 'decompose', files['k_sum.rep'], '--seed', '7')
    assert first == second


def test_check_image(capsys, files):
    code, out, _ = run(
        capsys, 'check-image', '--functor', '5', files['type_v.rep']
    )
    assert code == 0
    assert out == 'false (reason: eta-not-invertible)\n'
    code, out, _ = run(
        capsys, 'check-image', '--functor', '5', files['c5.rep']
    )
    assert code == 0
    assert out.startswith('true\n')
    assert 'object: linrel' in out


def test_functor_apply(capsys, files):
    code, out, _ = run(
        capsys, 'functor-apply', '--functor', '5', files['graph.rel']
    )
    assert code == 0
    assert loads(out).dims == (2, 1, 1, 1, 1)


def test_hom_and_iso(capsys, files):
    code, out, _ = run(capsys, 'hom', files['graph.rel'], files['graph.rel'])
    assert (code, out) == (0, '1\n')
    code, out, _ = run(capsys, 'iso', files['graph.rel'], files['zero.rel'])
    assert (code, out) == (0, 'false\n')
    code, out, _ = run(
        capsys, 'iso', files['k_sum.rep'], files['k_sum.rep'], '--field', 'F3'
    )
    assert out == 'true\n'


def test_relation_algebra(capsys, files):
    code, out, _ = run(capsys, 'rel-dual', files['zero.rel'])
    assert code == 0
    assert loads(out).dim == 2
    code, out, _ = run(capsys, 'rel-inverse', files['wide.rel'])
    assert (loads(out).dim1, loads(out).dim2) == (1, 2)
    code, out, _ = run(
        capsys, 'rel-compose', files['graph.rel'], files['zero.rel']
    )
    assert code == 0
    assert loads(out) == zero_relation(F3, 1, 1)


def test_nhat(capsys):
    code, out, _ = run(capsys, 'nhat', 't+1', '--field', 'F3')
    assert code == 0
    assert 'dims: 2 1 1 1 1' in out


def test_census(capsys):
    code, out, _ = run(capsys, 'census', 'K', '1', '1', '--format', 'lines')
    assert code == 0
    assert len(out.splitlines()) == 4
    code, out, _ = run(capsys, 'census', 'K', '--sweep', '1', '--workers', '2')
    assert code == 0
    assert 'K:II(0)' in out


def test_census_with_processes(capsys, monkeypatch):
    from four_subspace import oracle

    monkeypatch.setattr(oracle, 'EXECUTOR', 'thread')
    code, out, _ = run(
        capsys, 'census', 'K', '1', '1', '--executor', 'process'
    )
    assert code == 0
    assert oracle.EXECUTOR == 'process'
    assert 'iso classes' in out


def test_extension_and_transport(capsys, files):
    code, out, _ = run(
        capsys,
        'extension-test',
        files['c5.rep'],
        files['c5.rep'],
        '--seed',
        '3',
    )
    assert code == 0
    assert out.splitlines()[0] == 'in_image true'
    code, out, _ = run(
        capsys,
        'hom-transport',
        '--functor',
        '5',
        files['graph.rel'],
        files['zero.rel'],
    )
    assert code == 0
    assert out.endswith('bijective true\n')


def test_parse_errors_exit_2(capsys, files, tmp_path):
    code, _, err = run(capsys, 'decompose', files['bad.rep'])
    assert code == 2
    assert err.startswith('error: ')
    assert run(capsys, 'decompose', str(tmp_path / 'missing.rep'))[0] == 2
    assert run(capsys, 'rel-inverse', files['k_sum.rep'])[0] == 2
    assert run(capsys, 'canon', 'F:Nope(1)')[0] == 2
    assert run(capsys, 'frobnicate')[0] == 2
    assert run(capsys, 'census', 'K', '1', '--field', 'F4')[0] == 2


def test_domain_errors_exit_1(capsys, files):
    code, _, err = run(
        capsys, 'rel-compose', files['wide.rel'], files['wide.rel']
    )
    assert code == 1
    assert err.startswith('error: ')
    assert len(err.splitlines()) == 1
    assert run(capsys, 'census', 'K', '1', '1', '--field', 'Q')[0] == 1
    assert run(capsys, 'canon', 'K:I(0)')[0] == 1


def test_parser_defaults():
    args = build_parser().parse_args(['canon', 'K:I(1)'])
    assert args.field == FieldSpec(2)
    assert (args.seed, args.fmt, args.verbose) == (0, 'text', False)
