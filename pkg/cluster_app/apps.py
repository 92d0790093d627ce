from django.apps import AppConfig


class ClusterAppConfig(AppConfig):
    name = 'cluster_app'
    verbose_name = 'Rank 2 cluster X-space'
