import pytest

from four_subspace import oracle
from four_subspace.canon import IndecompTag, TypeName
from four_subspace.exactfield import RATIONALS, FieldSpec
from four_subspace.exceptions import (
    DimensionMismatchError,
    TooLargeError,
    UnmatchedClassError,
    UnsupportedFieldError,
)
from four_subspace.oracle import (
    CensusClass,
    census,
    census_size,
    census_sweep,
    enumerate_objects,
    format_reports,
    iter_subspaces,
    sweep_dims,
)
from four_subspace.quiverrep import zero_rep

F2 = FieldSpec(2)
F3 = FieldSpec(3)


def test_kronecker_1_1_over_f2():
    report = census('K', F2, (1, 1))
    assert report.total == 4
    assert report.iso_classes == 4
    assert report.indecomposable_classes == 3
    assert report.unmatched == []
    assert sorted(str(c.tag) for c in report.classes if c.indecomposable) == [
        'K:0(1,p=t+1,s=1)',
        "K:I'(1)",
        'K:I(1)',
    ]


def test_kronecker_1_1_over_f3():
    report = census('K', F3, (1, 1))
    assert report.total == 9
    assert report.iso_classes == 5
    assert report.indecomposable_classes == 4
    assert sorted(c.orbit for c in report.classes) == [1, 2, 2, 2, 2]


def test_simple_object():
    report = census('K', F2, (1, 0))
    assert report.total == 1
    [cls] = report.classes
    assert cls.indecomposable
    assert cls.tag == IndecompTag('K', TypeName.II, 0)


def test_zero_object_is_not_indecomposable():
    report = census('C', F2, (0, 0))
    [cls] = report.classes
    assert not cls.indecomposable
    assert cls.tag is None


@pytest.mark.parametrize(
    'category, dims',
    [('K', (2, 1)), ('C', (1, 1)), ('D', (1, 1, 1)), ('LinRel1', (2, 2))],
)
def test_orbits_cover_every_object(category, dims):
    report = census(category, F2, dims)
    assert sum(c.orbit for c in report.classes) == report.total
    assert report.total == census_size(category, F2, dims)
    assert not report.unmatched


@pytest.mark.parametrize(
    'category, dims', [('K', (2, 1)), ('LinRel1', (1, 1)), ('S', (1, 1, 1, 0))]
)
def test_prefilter_does_not_change_classes(category, dims):
    fast = census(category, F2, dims)
    slow = census(category, F2, dims, prefilter=False)
    assert fast.iso_classes == slow.iso_classes
    assert sorted(c.orbit for c in fast.classes) == sorted(
        c.orbit for c in slow.classes
    )


def test_single_relation_classes():
    report = census('LinRel1', F2, (1, 1))
    assert report.total == 3
    assert report.indecomposable_classes == 3
    assert not report.unmatched


def test_pair_relations():
    report = census('PairRel', F2, (1, 1, 1, 1))
    assert report.total == 9
    assert sum(c.orbit for c in report.classes) == 9
    assert not report.unmatched


def test_census_sizes():
    assert census_size('K', F2, (2, 1)) == 16
    assert census_size('LinRel1', F2, (2, 2)) == 35
    assert census_size('PairRel', F3, (1, 1, 1, 2)) == 4
    assert census_size('LinRel1', F2, (1, 3)) == 0


def test_subspaces_are_distinct():
    bases = list(iter_subspaces(4, 2, F2))
    assert len(bases) == 35
    assert len(set(bases)) == 35
    assert all(b.shape == (4, 2) for b in bases)


def test_enumeration_order():
    objects = list(enumerate_objects('K', F2, (1, 1)))
    assert [(o.mats[0][0, 0], o.mats[1][0, 0]) for o in objects] == [
        (0, 0),
        (0, 1),
        (1, 0),
        (1, 1),
    ]
    assert objects[0] == zero_rep('K', F2, (1, 1))


def test_report_lines():
    lines = census('K', F2, (1, 1)).format('lines').splitlines()
    assert lines[0] == 'class 0 dims 1,1 indecomposable false tag - orbit 1'
    assert lines[1] == (
        "class 1 dims 1,1 indecomposable true tag K:I'(1) orbit 1"
    )


def test_report_text():
    text = census('K', F2, (1, 1)).format('text')
    assert 'iso classes' in text
    assert 'decomposable' in text
    with pytest.raises(ValueError):
        census('K', F2, (1, 1)).format('xml')


def test_unmatched_class_line():
    cls = CensusClass(3, zero_rep('K', F2, (1, 1)), 2, indecomposable=True)
    assert cls.unmatched
    assert cls.to_line().endswith('tag UNMATCHED orbit 2')


def test_guards(monkeypatch):
    with pytest.raises(UnsupportedFieldError):
        census('K', RATIONALS, (1, 1))
    with pytest.raises(TooLargeError):
        census('K', F2, (5, 0))
    with pytest.raises(DimensionMismatchError):
        census('K', F2, (1, 1, 1))
    monkeypatch.setattr(oracle, 'CENSUS_GUARD', 10)
    with pytest.raises(TooLargeError):
        census('K', F2, (1, 2))


def test_sweep_dims():
    assert list(sweep_dims('LinRel1', 1)) == []
    assert list(sweep_dims('LinRel1', 2)) == [(1, 0), (1, 1), (1, 2)]
    assert (2, 4) in set(sweep_dims('LinRel1', 4))
    assert (1, 1, 2, 0) in set(sweep_dims('PairRel', 2))
    with pytest.raises(ValueError):
        list(sweep_dims('T', 1))


@pytest.mark.parametrize('category', ['K', 'C', 'LinRel1'])
def test_small_sweeps_are_matched(category):
    reports = census_sweep(category, F2, 2)
    assert reports
    assert all(not r.unmatched for r in reports)
    assert format_reports(reports, 'lines').startswith('class 0')


def test_sweep_skips_large_vectors(monkeypatch, caplog):
    monkeypatch.setattr(oracle, 'CENSUS_GUARD', 3)
    reports = census_sweep('K', F2, 2)
    assert all(r.total <= 3 for r in reports)
    assert 'Skipping' in caplog.text


def test_sweep_reports_unmatched(monkeypatch):
    monkeypatch.setattr(oracle, 'match_indecomposable', lambda *a, **k: None)
    with pytest.raises(UnmatchedClassError) as err:
        census_sweep('K', F2, 1)
    assert err.value.reports
    assert all(r.unmatched for r in err.value.reports)


@pytest.mark.slow
@pytest.mark.parametrize(
    'category', ['K', 'C', 'D', 'S', 'LinRel1', 'PairRel']
)
def test_sweeps_over_f2_are_matched(category):
    reports = census_sweep(category, F2, 4)
    assert reports
    assert all(not r.unmatched for r in reports)


@pytest.mark.slow
def test_five_subspace_sweep_over_f2():
    reports = census_sweep('F', F2, 5)
    assert max(sum(r.dims) for r in reports) == 5
    assert all(not r.unmatched for r in reports)


@pytest.mark.slow
def test_kronecker_sweep_over_f3():
    reports = census_sweep('K', F3, 4)
    assert all(not r.unmatched for r in reports)


@pytest.mark.parametrize(
    'category, dims', [('K', (2, 1)), ('LinRel1', (2, 2)), ('D', (1, 1, 1))]
)
def test_process_executor_matches_threads(monkeypatch, category, dims):
    threads = census(category, F2, dims)
    monkeypatch.setattr(oracle, 'EXECUTOR', 'process')
    monkeypatch.setattr(oracle, 'WORKERS_VALUE', 2)
    processes = census(category, F2, dims)
    assert processes.total == threads.total
    assert processes.iso_classes == threads.iso_classes
    assert sorted(c.orbit for c in processes.classes) == sorted(
        c.orbit for c in threads.classes
    )
    assert sorted(str(c.tag) for c in processes.classes) == sorted(
        str(c.tag) for c in threads.classes
    )
