from collections import OrderedDict

from rest_framework import serializers


class EvalResultSerializer(serializers.Serializer):
    """
    JSON shape of ``eval``, ``bracket`` and ``reduce`` output. Normal forms
    are null outside rank mode.
    """
    expression = serializers.CharField()
    points = serializers.SerializerMethodField()
    rank = serializers.IntegerField(allow_null=True)
    value = serializers.SerializerMethodField()
    numerator = serializers.SerializerMethodField()
    denominator = serializers.SerializerMethodField()
    is_zero = serializers.BooleanField()
    numerator_normal_form = serializers.SerializerMethodField()
    denominator_normal_form = serializers.SerializerMethodField()

    def get_points(self, obj):
        return list(obj.points.names)

    def get_value(self, obj):
        return str(obj.value)

    def get_numerator(self, obj):
        return obj.numerator.canonical_text()

    def get_denominator(self, obj):
        return obj.denominator.canonical_text()

    def get_numerator_normal_form(self, obj):
        return None if obj.rank is None else str(obj.numerator_normal_form)

    def get_denominator_normal_form(self, obj):
        return None if obj.rank is None else str(obj.denominator_normal_form)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        order = ['expression', 'points', 'rank', 'value', 'numerator', 'denominator',
                 'is_zero', 'numerator_normal_form', 'denominator_normal_form']
        return OrderedDict((k, data.get(k)) for k in order)


class FailureSerializer(serializers.Serializer):
    """One failed case: a re-runnable description of the input and both sides."""
    input = serializers.CharField(allow_blank=True)
    expected = serializers.CharField(allow_blank=True)
    got = serializers.CharField(allow_blank=True)

    def to_representation(self, instance):
        if isinstance(instance, (tuple, list)):
            instance = dict(zip(('input', 'expected', 'got'), instance))
        return super().to_representation(instance)
