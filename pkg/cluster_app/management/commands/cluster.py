from fractions import Fraction

from django.core.management import CommandError

from cluster_app.serializers import ClusterCheckSerializer, ExchangeMatrixSerializer, TriangulationSerializer
from cluster_app.theta import (ClusterCheck, check_flip_compat, check_flip_epsilon, check_flip_path,
                               check_mutation_poisson, check_theta_poisson, fg_from_points, theta)
from cluster_app.triangulations import (edge_from_text, edge_text, enumerate_triangulations, epsilon, flip,
                                        flip_path, triangulation_from_text)
from swapping_app.exceptions import BadSpec
from swapping_app.management.base import VERIFICATION_FAILURE, AlgebraCommand, parse_names

ACTIONS = ['list', 'epsilon', 'flip', 'theta', 'check', 'path', 'fg']

"""
cluster ACTION --k K
list: every triangulation of the k-gon, check: all of them or only --edges
epsilon / theta: need --edges, theta takes --at for a single diagonal
flip: needs --edges and --at, path: needs --edges and --to
fg: needs --edges and --values (one rational per vertex)
"""


class Command(AlgebraCommand):
    help = "Triangulations of the k-gon, exchange matrices, flips, the embedding θ_T and its checks."

    def add_arguments(self, parser):
        parser.add_argument('action', choices=ACTIONS)
        parser.add_argument('--k', type=int, required=True, help="Number of polygon vertices.")
        parser.add_argument('--edges', help="Diagonals of a triangulation, 1-based, e.g. 1-3,1-4.")
        parser.add_argument('--at', help="A diagonal, e.g. 1-3.")
        parser.add_argument('--to', help="Diagonals of the target triangulation for 'path'.")
        parser.add_argument('--values', help="One rational per vertex for 'fg', e.g. 0,1,2,3.")
        self.add_json_argument(parser)

    def triangulation(self, options, key='edges'):
        if not options.get(key):
            raise BadSpec(f"--{key} is required for '{options['action']}'.")
        return triangulation_from_text(options['k'], options[key])

    def triangulations(self, options):
        if options.get('edges'):
            return [self.triangulation(options)]
        return enumerate_triangulations(options['k'])

    def compute(self, **options):
        handler = getattr(self, f"do_{options['action']}")
        handler(options)

    def do_list(self, options):
        triangulations = enumerate_triangulations(options['k'])
        if options['json']:
            self.write_json(TriangulationSerializer(triangulations, many=True).data)
            return
        for t in triangulations:
            self.stdout.write(str(t))
        self.stdout.write(f"{len(triangulations)} triangulations")

    def do_epsilon(self, options):
        matrix = epsilon(self.triangulation(options))
        if options['json']:
            self.write_json(ExchangeMatrixSerializer(matrix).data)
            return
        labels = [edge_text(edge) for edge in matrix.edges]
        width = max(len(label) for label in labels)
        self.stdout.write(' ' * width + ' ' + ' '.join(label.rjust(width) for label in labels))
        for label, row in zip(labels, matrix.as_rows()):
            self.stdout.write(label.rjust(width) + ' ' + ' '.join(str(v).rjust(width) for v in row))

    def do_flip(self, options):
        flipped, new_edge = flip(self.triangulation(options), self.edge(options))
        if options['json']:
            data = TriangulationSerializer(flipped).data
            data['new_edge'] = edge_text(new_edge)
            self.write_json(data)
            return
        self.stdout.write(f"{flipped} (new diagonal {edge_text(new_edge)})")

    def do_theta(self, options):
        triangulation = self.triangulation(options)
        edges = [self.edge(options)] if options.get('at') else triangulation.diagonals
        values = {edge_text(edge): str(theta(triangulation, edge)) for edge in edges}
        if options['json']:
            self.write_json(values)
            return
        for label, value in values.items():
            self.stdout.write(f"theta(X_{label}) = {value}")

    def do_fg(self, options):
        triangulation = self.triangulation(options)
        if not options.get('values'):
            raise BadSpec("--values is required for 'fg'.")
        try:
            values = [Fraction(v) for v in parse_names(options['values'])]
        except ValueError:
            raise BadSpec(f"Cannot read vertex values {options['values']!r}.")
        if len(values) != triangulation.k:
            raise BadSpec(f"Need {triangulation.k} values, got {len(values)}.")
        coords = {edge_text(edge): str(x) for edge, x in fg_from_points(values, triangulation).items()}
        if options['json']:
            self.write_json(coords)
            return
        for label, value in coords.items():
            self.stdout.write(f"X_{label} = {value}")

    def do_check(self, options):
        checks = [ClusterCheck('theta_poisson'), ClusterCheck('flip_compat'),
                  ClusterCheck('mutation_poisson'), ClusterCheck('flip_epsilon')]
        for triangulation in self.triangulations(options):
            checks[0].merge(check_theta_poisson(triangulation))
            edges = [self.edge(options)] if options.get('at') else triangulation.diagonals
            for edge in edges:
                checks[1].merge(check_flip_compat(triangulation, edge))
                checks[2].merge(check_mutation_poisson(triangulation, edge))
                checks[3].merge(check_flip_epsilon(triangulation, edge))
        self.report(checks, options)

    def do_path(self, options):
        source = self.triangulation(options)
        target = self.triangulation(options, 'to')
        check = check_flip_path(source, target)
        if not options['json']:
            for edge, reached in flip_path(source, target):
                self.stdout.write(f"flip {edge_text(edge)} -> {reached}")
        self.report([check], options)

    def edge(self, options):
        if not options.get('at'):
            raise BadSpec(f"--at is required for '{options['action']}'.")
        return edge_from_text(options['at'])

    def report(self, checks, options):
        if options['json']:
            self.write_json(ClusterCheckSerializer(checks, many=True).data)
        else:
            for check in checks:
                verdict = 'pass' if check.ok else 'FAIL'
                self.stdout.write(f"{check.name}: {verdict} ({check.checked} cases, {len(check.failures)} failures)")
                for label, expected, got in check.failures:
                    self.stdout.write(f"  {label}: expected {expected}, got {got}")
        if not all(check.ok for check in checks):
            raise CommandError("Cluster checks failed.", returncode=VERIFICATION_FAILURE)
