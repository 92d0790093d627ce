import json
import os
from io import StringIO
from unittest import mock

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase, override_settings

from .exceptions import BadParams, UnknownSuite
from .reports import Failure, SuiteReport
from .runner import run_cases, run_suite
from .serializers import SuiteReportSerializer
from .suites import SUITES, Suite, trial_seed


class BrokenSuite(Suite):
    name = 'broken'
    defaults = {'trials': 3}

    def cases(self, params, seed):
        return list(range(params['trials']))

    def check(self, case, params):
        return [Failure(f"case={case}", '0', '1')] if case % 2 else []


def worker_pid(case):
    return os.getpid()


class RunSuiteTests(SimpleTestCase):

    def test_jacobi_exhaustive(self):
        report = run_suite('jacobi', {'points': 4, 'mode': 'exhaustive'}, 0)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.trials, 12 ** 3)

    def test_jacobi_random(self):
        report = run_suite('jacobi', {'points': 6, 'mode': 'random', 'trials': 20}, 0)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.trials, 20)

    def test_poisson_ideal(self):
        report = run_suite('poisson_ideal', {'n': 2, 'points': 5, 'trials': 4}, 42)
        self.assertTrue(report.ok, report.failures)

    def test_delta_sides(self):
        report = run_suite('delta_r_l', {'n': 2, 'points': 4, 'mode': 'exhaustive'}, 0)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.trials, 12 * 4 * 4)
        report = run_suite('delta_r_l', {'n': 3, 'points': 6, 'mode': 'random', 'trials': 5}, 3)
        self.assertTrue(report.ok, report.failures)

    def test_domain(self):
        report = run_suite('domain', {'n': 2, 'points': 4, 'trials': 5}, 0)
        self.assertTrue(report.ok, report.failures)

    def test_rank_one_is_refused(self):
        with self.assertRaises(BadParams) as ctx:
            run_suite('domain', {'n': 1}, 0)
        self.assertIn('n', ctx.exception.errors)

    def test_cross_ratio(self):
        report = run_suite('cross_ratio', {'points': 6}, 0)
        self.assertTrue(report.ok, report.failures)

    def test_nesting(self):
        report = run_suite('nesting', {'n': 2, 'points': 5, 'trials': 3}, 0)
        self.assertTrue(report.ok, report.failures)

    def test_cluster_suites(self):
        for name in ('theta_poisson', 'mutation_poisson'):
            report = run_suite(name, {'k': [4, 5]}, 0)
            self.assertTrue(report.ok, report.failures)
        report = run_suite('flip_compat', {'k': [4]}, 0)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.trials, 2)

    def test_oracle_agreement(self):
        report = run_suite('oracle_agreement', {'points': 5, 'trials': 20}, 0)
        self.assertTrue(report.ok, report.failures)

    def test_fg_positivity(self):
        report = run_suite('fg_positivity', {'trials': 25}, 0)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.trials, 26)

    def test_same_seed_same_report(self):
        params = {'points': 5, 'trials': 10}
        first = run_suite('oracle_agreement', params, 7)
        second = run_suite('oracle_agreement', params, 7)
        self.assertEqual(first.comparable(), second.comparable())
        self.assertEqual(first.params, {'n': 2, 'points': 5, 'trials': 10})

    def test_trial_seeds_are_distinct(self):
        seeds = {trial_seed(seed, index) for seed in range(3) for index in range(100)}
        self.assertEqual(len(seeds), 300)

    def test_workers_do_not_change_the_report(self):
        with mock.patch.dict(SUITES, {'broken': BrokenSuite()}):
            serial = run_suite('broken', {'trials': 9}, 0)
            with override_settings(SWAPALG={'THREADS': 4}):
                parallel = run_suite('broken', {'trials': 9}, 0)
        self.assertEqual(serial.comparable(), parallel.comparable())
        self.assertEqual([f.input for f in parallel.failures], ['case=1', 'case=3', 'case=5', 'case=7'])

    def test_cases_run_in_worker_processes(self):
        pids = run_cases(worker_pid, list(range(6)), 2)
        self.assertEqual(len(pids), 6)
        self.assertNotIn(os.getpid(), pids)
        self.assertEqual(run_cases(worker_pid, [0, 1], 1), [os.getpid()] * 2)

    def test_workers_do_not_change_a_real_report(self):
        params = {'points': 5, 'trials': 12}
        serial = run_suite('oracle_agreement', params, 3)
        with override_settings(SWAPALG={'THREADS': 3}):
            parallel = run_suite('oracle_agreement', params, 3)
        self.assertEqual(serial.comparable(), parallel.comparable())

    def test_default_seed(self):
        with override_settings(SWAPALG={'DEFAULT_SEED': 11}):
            self.assertEqual(run_suite('fg_positivity', {'trials': 1}).seed, 11)

    def test_unknown_suite(self):
        with self.assertRaises(UnknownSuite):
            run_suite('nope', {}, 0)

    def test_bad_params(self):
        with self.assertRaises(BadParams):
            run_suite('jacobi', {'k': [5]}, 0)
        with self.assertRaises(BadParams):
            run_suite('nesting', {'n': 2, 'points': 3}, 0)
        with self.assertRaises(BadParams):
            run_suite('theta_poisson', {'k': [11]}, 0)
        with self.assertRaises(BadParams):
            run_suite('jacobi', {'mode': 'sometimes'}, 0)


class SuiteReportSerializerTests(SimpleTestCase):

    def setUp(self):
        self.report = SuiteReport(
            suite='broken', params={'trials': 3, 'k': [5, 6]}, seed=4, trials=3,
            failures=[Failure("case=1", '0', '1')], elapsed_ms=12,
        )

    def test_key_order(self):
        data = SuiteReportSerializer(self.report).data
        self.assertEqual(list(data), ['suite', 'params', 'seed', 'trials', 'failures', 'elapsed_ms'])
        self.assertEqual(list(data['failures'][0]), ['input', 'expected', 'got'])

    def test_round_trip(self):
        data = json.loads(json.dumps(SuiteReportSerializer(self.report).data))
        serializer = SuiteReportSerializer(data=data)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        rebuilt = serializer.save()
        self.assertEqual(rebuilt, self.report)

    def test_pass_iff_no_failures(self):
        self.assertFalse(self.report.ok)
        self.report.failures = []
        self.assertTrue(self.report.ok)


class VerifyCommandTests(SimpleTestCase):

    def test_text_output(self):
        out = StringIO()
        call_command('verify', 'fg_positivity', trials=5, stdout=out)
        self.assertIn('fg_positivity: pass (6 trials, 0 failures', out.getvalue())

    def test_json_output(self):
        out = StringIO()
        call_command('verify', 'fg_positivity', trials=2, seed=3, json=True, stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual(data['suite'], 'fg_positivity')
        self.assertEqual(data['seed'], 3)
        self.assertEqual(data['failures'], [])

    def test_several_suites(self):
        out = StringIO()
        call_command('verify', 'fg_positivity', 'theta_poisson', k=[4], trials=2, json=True, stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual([report['suite'] for report in data], ['fg_positivity', 'theta_poisson'])
        self.assertEqual(data[1]['params'], {'k': [4]})

    def test_failure_exits_with_code_one(self):
        out = StringIO()
        with mock.patch.dict(SUITES, {'broken': BrokenSuite()}):
            with self.assertRaises(CommandError) as ctx:
                call_command('verify', 'broken', stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('case=1: expected 0, got 1', out.getvalue())

    def test_usage_errors_exit_with_code_two(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', 'nope', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', 'domain', rank=1, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
