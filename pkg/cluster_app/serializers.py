from collections import OrderedDict

from rest_framework import serializers

from swapping_app.serializers import FailureSerializer

from .triangulations import edge_text


class TriangulationSerializer(serializers.Serializer):
    """
    A triangulation with 1-based vertices: diagonals as ``"1-3"`` and
    triangles as anticlockwise vertex lists.
    """
    k = serializers.IntegerField()
    diagonals = serializers.SerializerMethodField()
    triangles = serializers.SerializerMethodField()

    def get_diagonals(self, obj):
        return [edge_text(edge) for edge in obj.diagonals]

    def get_triangles(self, obj):
        return [[v + 1 for v in triangle] for triangle in obj.triangles]


class ExchangeMatrixSerializer(serializers.Serializer):
    edges = serializers.SerializerMethodField()
    rows = serializers.SerializerMethodField()

    def get_edges(self, obj):
        return [edge_text(edge) for edge in obj.edges]

    def get_rows(self, obj):
        return obj.as_rows()


class ClusterCheckSerializer(serializers.Serializer):
    name = serializers.CharField()
    checked = serializers.IntegerField()
    ok = serializers.BooleanField()
    failures = FailureSerializer(many=True)

    def to_representation(self, instance):
        data = super().to_representation(instance)
        order = ['name', 'ok', 'checked', 'failures']
        return OrderedDict((k, data.get(k)) for k in order)
