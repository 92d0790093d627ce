from collections import OrderedDict

from rest_framework import serializers

from swapping_app.serializers import FailureSerializer

from .reports import Failure, SuiteReport

MODES = ['exhaustive', 'random']

# the smallest point set each suite can draw its determinants from, given the rank
MIN_POINTS = {
    'poisson_ideal': lambda n: n + 1,
    'delta_r_l': lambda n: n + 1,
    'nesting': lambda n: n + 2,
    'domain': lambda n: 2,
    'oracle_agreement': lambda n: 2,
    'jacobi': lambda n: 2,
    'cross_ratio': lambda n: 6,
}


class SuiteParamsSerializer(serializers.Serializer):
    """
    Validates suite parameters after the suite's defaults are filled in.
    The suite name comes in through ``context['suite']``.
    """
    points = serializers.IntegerField(min_value=2, max_value=12, required=False)
    n = serializers.IntegerField(max_value=4, required=False)
    k = serializers.ListField(child=serializers.IntegerField(min_value=4, max_value=10),
                              allow_empty=False, required=False)
    trials = serializers.IntegerField(min_value=1, required=False)
    mode = serializers.ChoiceField(choices=MODES, required=False)

    def validate_n(self, value):
        if value < 2:
            raise serializers.ValidationError(
                "Rank must be at least 2; Z_1(P) is not an integral domain.")
        return value

    def validate(self, attrs):
        minimum = MIN_POINTS.get(self.context.get('suite'))
        if minimum and 'points' in attrs:
            needed = minimum(attrs.get('n', 2))
            if attrs['points'] < needed:
                raise serializers.ValidationError(
                    {"points": f"This suite needs at least {needed} points."})
        return attrs


class SuiteReportSerializer(serializers.Serializer):
    suite = serializers.CharField()
    params = serializers.DictField()
    seed = serializers.IntegerField()
    trials = serializers.IntegerField(min_value=0)
    failures = FailureSerializer(many=True)
    elapsed_ms = serializers.IntegerField(min_value=0)

    def create(self, validated_data):
        failures = [Failure(**failure) for failure in validated_data.pop('failures')]
        return SuiteReport(failures=failures, **validated_data)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        order = ['suite', 'params', 'seed', 'trials', 'failures', 'elapsed_ms']
        return OrderedDict((k, data.get(k)) for k in order)
