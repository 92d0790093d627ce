"""
Access to the ``SWAPALG`` settings dict, e.g.::

    SWAPALG = {
        "THREADS": 4,
        "ZERO_TEST_TRIALS": 3,
    }

Works like ``rest_framework.settings.api_settings``: missing keys fall
back to ``DEFAULTS`` and the cache is dropped when a test overrides the
setting.
"""

from django.conf import settings
from django.core.signals import setting_changed
from django.dispatch import receiver
from rest_framework.settings import APISettings


DEFAULTS = {
    "THREADS": 1,
    "ZERO_TEST_TRIALS": 3,
    "SAMPLE_BOUND": 64,
    "FAST_PATH": True,
    "DEFAULT_SEED": 0,
}


class SwapSettings(APISettings):

    @property
    def user_settings(self):
        if not hasattr(self, '_user_settings'):
            self._user_settings = getattr(settings, 'SWAPALG', {})
        return self._user_settings


swap_settings = SwapSettings(None, DEFAULTS, ())


@receiver(setting_changed)
def reload_swap_settings(*args, **kwargs):
    if kwargs['setting'] == 'SWAPALG':
        swap_settings.reload()
