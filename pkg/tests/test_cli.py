import json

import pytest

from global_group_laws.cli import EXIT_CHECK_FAILED, EXIT_ERROR, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerbs:
    def test_psi(self, capsys):
        assert run(capsys, 'psi', '6') == (EXIT_OK, 't^2 - t + 1\n', '')

    def test_euler_additive(self, capsys):
        code, out, _ = run(capsys, 'euler', '--law', 'add', '--group', 'T^2', '--char', '2,-3')
        assert code == EXIT_OK
        assert out == '2*e1 - 3*e2\n'

    def test_regular_check_counterexample(self, capsys):
        code, out, _ = run(capsys, 'regular-check', '--law', 'add', '--chars', '2,0;0,2')
        assert code == EXIT_CHECK_FAILED
        assert out.splitlines()[0] == '[2,0; 0,2] fail (counterexample)'
        assert '  witness: e1' in out.splitlines()

    def test_exact_check_mod_p(self, capsys):
        code, out, _ = run(capsys, 'exact-check', '--law', 'add', '--ring', 'F3', '--char', '3')
        assert code == EXIT_CHECK_FAILED
        assert '  witness: e' in out.splitlines()

    def test_exact_check_all_split(self, capsys):
        code, out, _ = run(capsys, 'exact-check', '--group', 'T^2', '--all-split', '--entry-bound', '1',
                           '--bound', '1', '--jobs', '2')
        assert code == EXIT_OK
        assert out.splitlines()[-1] == '8/8 pass, 8 certified'

    def test_decompose(self, capsys):
        code, out, _ = run(capsys, 'decompose', '--group', 'T', '--char', '1', '--element', 't^-1', '--n', '3')
        assert code == EXIT_OK
        assert out.splitlines() == ['x0 = 1', 'x1 = -1', 'x2 = 1', 'remainder = -t^-1']

    def test_fgl_at_trivial_group(self, capsys):
        code, out, _ = run(capsys, 'fgl', '--depth', '4')
        assert code == EXIT_OK
        assert out.startswith('F(x, y) = ')
        assert 'x*y' in out

    def test_nseries(self, capsys):
        code, out, _ = run(capsys, 'nseries', '2')
        assert code == EXIT_OK
        assert out == 'x^2 + 2*x + O(7)\n'

    def test_change_coordinate(self, capsys):
        code, out, _ = run(capsys, 'change-coord', '--lambda', 't^-1')
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0].startswith('phi(x) = ')
        assert lines[0].endswith('- x^2 + x + O(7)')
        assert lines[1].startswith("F'(x, y) = -x*y")

    def test_fixed_points(self, capsys):
        code, out, _ = run(capsys, 'fixed-points', '--group', 'C2')
        assert code == EXIT_OK
        assert out.splitlines() == [
            'Z[t] / (t + 1) with inverted t - 1',
            'inverted images: -2',
            'psi kernel check: pass',
        ]

    def test_kan(self, capsys):
        code, out, _ = run(capsys, 'kan', '--group', 'C4', '--element', 't^5')
        assert code == EXIT_OK
        assert out.splitlines() == ['Z[t] / (t^4 - 1)', 'normal form: t']

    def test_lazard_relations(self, capsys):
        code, out, _ = run(capsys, 'lazard-relations', '--degree', '4')
        assert code == EXIT_OK
        assert out.splitlines()[-1] == 'indecomposable ranks over Q: 2:1, 4:1, 6:1'

    def test_classify_random(self, capsys):
        code, out, _ = run(capsys, 'classify', '--random', '3', '--degree', '5')
        assert code == EXIT_OK
        assert out.startswith('planted: ')


class TestOutputModes:
    def test_json(self, capsys):
        code, out, _ = run(capsys, 'psi', '6', '--json')
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload['verb'] == 'psi'
        assert payload['ok'] is True
        assert payload['result']['psi'] == 't^2 - t + 1'

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, 'regular-check', '--law', 'add', '--chars', '2,0;0,2', '--json')
        assert code == EXIT_CHECK_FAILED
        report = json.loads(out)['result']['reports'][0]
        assert report['verdict'] == 'fail'
        assert report['witness'] == 'e1'

    def test_fixture(self, capsys, tmp_path):
        fixture = tmp_path / 'psi6.txt'
        fixture.write_text('t^2 - t + 1\n', encoding='utf-8')
        assert run(capsys, 'psi', '6', '--fixture', str(fixture))[0] == EXIT_OK
        code, _, err = run(capsys, 'psi', '5', '--fixture', str(fixture))
        assert code == EXIT_CHECK_FAILED
        assert '+t^4 + t^3 + t^2 + t + 1' in err
        assert run(capsys, 'psi', '6', '--fixture', str(tmp_path / 'missing.txt'))[0] == EXIT_ERROR


class TestErrors:
    def test_bad_group(self, capsys):
        code, out, err = run(capsys, 'euler', '--group', 'S^1', '--char', '1')
        assert code == EXIT_ERROR
        assert out == ''
        assert err.startswith('ggl euler: ')

    def test_unknown_verb(self, capsys):
        assert run(capsys, 'frobnicate')[0] == EXIT_ERROR

    def test_version(self, capsys):
        assert run(capsys, '--version')[0] == EXIT_OK

    def test_bad_environment(self, capsys, monkeypatch):
        monkeypatch.setenv('GGL_JOBS', 'many')
        code, _, err = run(capsys, 'psi', '6')
        assert code == EXIT_ERROR
        assert 'GGL_JOBS' in err

    def test_missing_argument(self, capsys):
        code, _, err = run(capsys, 'euler')
        assert code == EXIT_ERROR
        assert '--char is required' in err

    def test_invalid_fgl_file(self, capsys, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text(json.dumps({'ring': 'Z', 'N': 3, 'a': [{'i': 1, 'j': 2, 'coef': '1'}]}))
        code, _, err = run(capsys, 'euler', '--law', f'fgl:{path}', '--char', '1')
        assert code == EXIT_CHECK_FAILED
        assert 'commutativity' in err


@pytest.mark.parametrize('verb', ['gamma', 'flag-expand'])
def test_completion_verbs_run(capsys, verb):
    argv = [verb, '--depth', '3']
    if verb == 'gamma':
        argv += ['--char', '1']
    else:
        argv += ['--element', 't^2 + 1']
    code, out, _ = run(capsys, *argv)
    assert code == EXIT_OK
    assert out.strip()
