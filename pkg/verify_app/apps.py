from django.apps import AppConfig


class VerifyAppConfig(AppConfig):
    name = 'verify_app'
    verbose_name = 'Property suites'
