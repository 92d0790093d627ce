from django.apps import AppConfig


class SwappingAppConfig(AppConfig):
    name = 'swapping_app'
    verbose_name = 'Swapping algebra'

    def ready(self):
        from . import conf  # noqa: F401  connects the settings reload signal
