from swapping_app.evaluation import eval_expr
from swapping_app.expressions import parse_expr
from swapping_app.management.base import AlgebraCommand


class Command(AlgebraCommand):
    help = "Reduce an expression to its normal form in the rank n model and decide whether it vanishes."

    def add_arguments(self, parser):
        parser.add_argument('expression')
        parser.add_argument('--rank', type=int, required=True)
        self.add_points_argument(parser)
        self.add_json_argument(parser)

    def compute(self, **options):
        points = self.points_from(options)
        result = eval_expr(parse_expr(options['expression'], points), points, options['rank'])
        self.write_eval_result(result, options['json'])
