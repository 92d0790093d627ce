"""Shared plumbing for the swapping algebra commands."""

import json

from django.core.management.base import BaseCommand, CommandError

from swapping_app.exceptions import SwapAlgebraError
from swapping_app.points import make_point_set
from swapping_app.serializers import EvalResultSerializer

USAGE_ERROR = 2
VERIFICATION_FAILURE = 1


def parse_names(value):
    return [name.strip() for name in value.split(',') if name.strip()]


class AlgebraCommand(BaseCommand):
    """
    Runs ``compute`` and turns algebra errors into ``CommandError`` with
    exit code 2.
    """

    def add_points_argument(self, parser, required=True):
        parser.add_argument('--points', required=required,
                            help="Comma separated point names in anticlockwise order, e.g. x,y,z,t.")

    def add_json_argument(self, parser):
        parser.add_argument('--json', action='store_true', help="Print machine readable JSON.")

    def points_from(self, options):
        return make_point_set(parse_names(options['points']))

    def handle(self, *args, **options):
        try:
            return self.compute(**options)
        except SwapAlgebraError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)

    def compute(self, **options):
        raise NotImplementedError

    def write_json(self, data):
        self.stdout.write(json.dumps(data, indent=2))

    def write_eval_result(self, result, as_json):
        if as_json:
            self.write_json(EvalResultSerializer(result).data)
            return
        self.stdout.write(str(result.value))
        if result.rank is not None:
            self.stdout.write(f"rank {result.rank} normal form of numerator: {result.numerator_normal_form}")
            self.stdout.write(f"rank {result.rank} normal form of denominator: {result.denominator_normal_form}")
            self.stdout.write(f"zero in Z_{result.rank}(P): {'yes' if result.is_zero else 'no'}")
