import json

import pytest

from kcalc.ktheory.handler import build_parser, main
from kcalc.ktheory.config.runtime_config import RuntimeConfig


def run_json(capsys, *argv):
    code = main([*argv, '--format', 'json'])
    return code, json.loads(capsys.readouterr().out)


def test_parser_declares_every_subcommand():
    parser = build_parser(RuntimeConfig())
    for argv in (['grothendieck', 'p.json'], ['adams', 'b.json', '--k', '2'], ['hopf'],
                 ['ktable', 'fq', '--n', '1', '--q', '2'], ['selftest'], ['steinberg'],
                 ['structured-index', '--m', '1'], ['k1', '--q', '3']):
        assert parser.parse_args(argv).subcommand == argv[0]


def test_hopf(capsys):
    code, report = run_json(capsys, 'hopf', '--bound', '100')
    assert code == 0
    assert report['status'] == 'ok'
    assert report['payload']['solutions'] == [1, 2, 4]
    assert report['diagnostics']['closed_form_agrees'] is True


def test_hopf_odd_a(capsys):
    code, report = run_json(capsys, 'hopf', '--bound', '10', '--n', '3')
    assert code == 0
    assert report['payload']['odd_a']['admissible'] is False


def test_ktable_finite_field(capsys):
    code, report = run_json(capsys, 'ktable', 'fq', '--n', '3', '--q', '4')
    assert code == 0
    assert report['payload']['answer'] == 'Z/15'


def test_grothendieck_human_output(capsys, write_json):
    path = write_json('p.json', {'generators': 2, 'relations': [{'lhs': [2, 0], 'rhs': [0, 2]}]})
    assert main(['grothendieck', path]) == 0
    assert capsys.readouterr().out.splitlines()[0] == 'Z (+) Z/2'


def test_adams_diagnostics(capsys, write_json):
    path = write_json('b.json', {'base_lines': 2, 'terms': [{'mult': 1, 'exps': [1, 0]}, {'mult': 1, 'exps': [0, 1]}]})
    code, report = run_json(capsys, 'adams', path, '--k', '3', '--truncation', '4')
    assert code == 0
    assert report['diagnostics'] == {'via_lambda_agrees': True, 'via_newton_agrees': True}


def test_toeplitz_index_of_z(capsys, write_json):
    path = write_json('z.json', {'coeffs': [{'k': 1, 're': 1.0}]})
    code, report = run_json(capsys, 'toeplitz-index', path)
    assert code == 0
    assert report['payload']['index'] == -1


def test_structured_index_without_perturbation(capsys):
    code, report = run_json(capsys, 'structured-index', '--m', '2')
    assert code == 0
    assert report['payload']['index'] == -2


def test_factorize(capsys, write_json):
    path = write_json('a.json', {'ring': 'Q', 'entries': [[0, 1], [-1, 0]]})
    code, report = run_json(capsys, 'factorize', path)
    assert code == 0
    assert report['payload']['residue'] == '1'
    assert report['diagnostics']['reassembled'] is True


def test_singular_matrix_is_a_domain_error(capsys, write_json):
    path = write_json('s.json', {'entries': [[1, 2], [2, 4]]})
    code, report = run_json(capsys, 'factorize', path)
    assert code == 1
    assert report['error']['code'] == 'singular_matrix'


def test_steinberg(capsys):
    code, report = run_json(capsys, 'steinberg', '--n', '3', '--trials', '5', '--ring', 'Fp:7')
    assert code == 0
    assert report['payload']['passed'] is True


def test_k1(capsys):
    code, report = run_json(capsys, 'k1', '--q', '4', '--modulus', '1,1,1')
    assert code == 0
    assert report['payload']['group'] == 'Z/3'


def test_selftest_single_suite(capsys):
    code, report = run_json(capsys, 'selftest', 'hopf')
    assert code == 0
    assert report['payload']['passed'] is True


@pytest.mark.parametrize('argv', [
    ['selftest', 'nope'],
    ['grothendieck', 'absent.json'],
    ['ktable'],
    ['hopf', '--bound', 'cent'],
    ['frobnicate'],
])
def test_usage_errors_exit_with_two(capsys, tmp_path, monkeypatch, argv):
    monkeypatch.chdir(tmp_path)
    assert main([*argv, '--format', 'json']) == 2


def test_schema_error_exits_with_two(capsys, write_json):
    path = write_json('bad.json', {'generators': 1})
    code, report = run_json(capsys, 'grothendieck', path)
    assert code == 2
    assert report['error']['code'] == 'schema_error'


def test_human_errors_go_to_stderr(capsys, write_json):
    path = write_json('s.json', {'entries': [[0]]})
    assert main(['factorize', path]) == 1
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'singular_matrix' in captured.err


@pytest.mark.parametrize('argv', [
    ['hopf', '--bound', '50'],
    ['ktable', 'fq', '--n', '2', '--q', '3'],
    ['steinberg'],
    ['selftest', 'hopf'],
])
def test_json_output_is_canonical(capsys, argv):
    assert main([*argv, '--format', 'json']) == 0
    out = capsys.readouterr().out
    assert out.endswith('\n')
    assert json.dumps(json.loads(out), ensure_ascii=False, indent=2, sort_keys=True) == out[:-1]


def test_json_output_of_file_commands_is_canonical(capsys, write_json):
    path = write_json('p.json', {'generators': 2, 'relations': [{'lhs': [2, 0], 'rhs': [0, 2]}]})
    assert main(['grothendieck', path, '--format', 'json']) == 0
    out = capsys.readouterr().out
    assert json.dumps(json.loads(out), ensure_ascii=False, indent=2, sort_keys=True) == out[:-1]
