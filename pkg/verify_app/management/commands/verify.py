from django.core.management import CommandError

from swapping_app.management.base import VERIFICATION_FAILURE, AlgebraCommand
from verify_app.runner import run_suite
from verify_app.serializers import MODES, SuiteReportSerializer
from verify_app.suites import SUITES

"""
verify SUITE [SUITE ...]: runs the property suites one after another
Options only reach the suites that take them, e.g. --k is ignored by jacobi
Output: one line per suite, or with --json the report(s)
Exit: 1 if any suite has failures, 2 for unknown suites or bad parameters
"""


class Command(AlgebraCommand):
    help = "Runs seeded property suites over the swapping algebra and the cluster embedding."

    def add_arguments(self, parser):
        parser.add_argument('suites', nargs='+', metavar='suite', help=f"One or more of: {', '.join(SUITES)}.")
        parser.add_argument('--points', type=int, help="Size of the point set x0, x1, ...")
        parser.add_argument('--rank', type=int, help="The rank n of Z_n(P).")
        parser.add_argument('--k', type=int, action='append', help="Polygon size; repeat for several.")
        parser.add_argument('--trials', type=int)
        parser.add_argument('--mode', choices=MODES)
        parser.add_argument('--seed', type=int, help="Defaults to SWAPALG['DEFAULT_SEED'].")
        self.add_json_argument(parser)

    def params(self, suite, options):
        params = {
            'points': options.get('points'),
            'n': options.get('rank'),
            'k': options.get('k'),
            'trials': options.get('trials'),
            'mode': options.get('mode'),
        }
        # each suite only sees the options it takes, so one call can mix suites
        defaults = SUITES[suite].defaults if suite in SUITES else {}
        return {key: value for key, value in params.items() if value is not None and key in defaults}

    def compute(self, **options):
        reports = [run_suite(name, self.params(name, options), options.get('seed'))
                   for name in options['suites']]
        if options['json']:
            data = SuiteReportSerializer(reports, many=True).data
            self.write_json(data[0] if len(data) == 1 else data)
        else:
            for report in reports:
                verdict = 'pass' if report.ok else 'FAIL'
                self.stdout.write(f"{report.suite}: {verdict} ({report.trials} trials, "
                                  f"{len(report.failures)} failures, {report.elapsed_ms} ms)")
                for failure in report.failures:
                    self.stdout.write(f"  {failure.input}: expected {failure.expected}, got {failure.got}")
        if not all(report.ok for report in reports):
            raise CommandError("Verification failed.", returncode=VERIFICATION_FAILURE)
