import pytest
from fractions import Fraction

import lxml.etree

from ordalab.api import DEFAULTS, OrdaLab, _get_env, lab_factory
from ordalab.data import exception_map, fixtures
from ordalab.exceptions import BadInput, CertificateViolation, InvalidWord, OrdalabError, SearchExhausted
from ordalab.modules import MODULE_MAPPING
from ordalab.modules.braid import BraidWord
from ordalab.response import Report


def test_modules_under_both_names(lab):
    for alias, module in MODULE_MAPPING.items():
        assert isinstance(getattr(lab, alias), module)
    assert lab.plmap is lab.map
    assert lab.ordering is lab.order
    assert lab.intervals is lab.sets
    assert lab.map.config is lab


@pytest.mark.parametrize("setting", ['budget', 'search_bound', 'semigroup_depth', 'group_depth'])
def test_lab_rejects_non_positive_settings(setting):
    with pytest.raises(BadInput):
        OrdaLab(**{setting: 0})


def test_lab_factory_no_env(monkeypatch):
    for key in DEFAULTS:
        monkeypatch.delenv('ORDALAB_' + key.upper(), raising=False)
    lab = lab_factory()
    assert lab.budget == DEFAULTS['budget']
    assert lab.group_depth == 6


def test_lab_factory_with_env(monkeypatch):
    monkeypatch.setenv('ORDALAB_BUDGET', '500')
    monkeypatch.setenv('ORDALAB_SEED', '9')
    lab = lab_factory(seed=None, group_depth=3)
    assert lab.budget == 500
    assert lab.seed == 9
    assert lab.group_depth == 3


def test_lab_factory_overrides_env(monkeypatch):
    monkeypatch.setenv('ORDALAB_BUDGET', '500')
    assert lab_factory(budget=7).budget == 7


def test_get_env_invalid(monkeypatch):
    monkeypatch.setenv('ORDALAB_SEARCH_BOUND', 'many')
    with pytest.raises(BadInput) as excinfo:
        _get_env('search_bound', 64)
    assert 'ORDALAB_SEARCH_BOUND' in str(excinfo.value)


def test_report_text_and_digest(lab, halving, affine):
    report = lab.pingpong.semigroup(halving, affine, Fraction(0), Fraction(1))
    assert report
    assert report.result == {'m': 2, 'n': 2, 'x': '1/2'}
    assert len(report.digest) == 16
    again = lab.pingpong.semigroup(halving, affine, Fraction(0), Fraction(1))
    assert again.digest == report.digest
    text = str(report)
    assert 'command: pingpong semigroup' in text
    assert '  x: 1/2' in text
    assert 'status: ok' in text


def test_report_digest_depends_on_inputs():
    assert Report('c', [1], None).digest != Report('c', [2], None).digest


def test_report_xml(lab):
    report = lab.sets.plt([fixtures.load('F.x1')])
    root = lxml.etree.fromstring(report.to_xml().encode('utf-8'))
    assert root.tag == 'report'
    assert root.findtext('status') == 'ok'
    assert root.findtext('result') == 'false'
    assert root.find('certificate/commonFixedSet') is not None
    assert root.find('code') is None


def test_failure_report(lab):
    report = lab.failure('braid trivial', ['n=3 7'], InvalidWord('Letter 7 is not a generator'))
    assert not report
    assert report.status == 'error'
    assert report.code == 102
    assert report.exit_status == exception_map.EXIT_ERROR
    with pytest.raises(InvalidWord):
        report.raise_for_status()


def test_violation_report(lab):
    report = lab.failure('pingpong freegroup', [], CertificateViolation('inclusion fails'))
    assert report.status == 'violation'
    assert report.exit_status == exception_map.EXIT_VIOLATION
    assert 'message: inclusion fails' in str(report)
    with pytest.raises(CertificateViolation):
        report.raise_for_status()


def test_ok_report_does_not_raise(lab):
    lab.braid.expsum(BraidWord(2, [1])).raise_for_status()


@pytest.mark.parametrize("code,expected", [
    (102, InvalidWord),
    (302, SearchExhausted),
    (999, OrdalabError),
])
def test_exception_map(code, expected):
    assert exception_map.from_code(code) is expected


def test_exception_codes():
    for code, klass in exception_map.MAPPING.items():
        assert klass('message').code == code
    assert InvalidWord('message', 7).code == 7
