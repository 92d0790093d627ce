from swapping_app.evaluation import eval_expr
from swapping_app.expressions import Bracket, parse_expr
from swapping_app.management.base import AlgebraCommand


class Command(AlgebraCommand):
    help = "Compute the swapping bracket {e1, e2}."

    def add_arguments(self, parser):
        parser.add_argument('left')
        parser.add_argument('right')
        self.add_points_argument(parser)
        parser.add_argument('--rank', type=int, default=None)
        self.add_json_argument(parser)

    def compute(self, **options):
        points = self.points_from(options)
        node = Bracket(parse_expr(options['left'], points), parse_expr(options['right'], points))
        self.write_eval_result(eval_expr(node, points, options['rank']), options['json'])
