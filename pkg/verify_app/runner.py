import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial

import django
from django.apps import apps
from django.conf import settings

from swapping_app.conf import swap_settings

from .exceptions import BadParams
from .reports import SuiteReport
from .serializers import SuiteParamsSerializer
from .suites import get_suite

logger = logging.getLogger(__name__)


def suite_params(suite, params):
    """The suite's defaults overlaid with ``params``, validated."""
    params = {key: value for key, value in (params or {}).items() if value is not None}
    unused = sorted(set(params) - set(suite.defaults))
    if unused:
        raise BadParams({key: [f"Not a parameter of suite {suite.name}."] for key in unused})
    serializer = SuiteParamsSerializer(data={**suite.defaults, **params}, context={'suite': suite.name})
    if not serializer.is_valid():
        raise BadParams(serializer.errors)
    return {key: serializer.validated_data[key] for key in suite.defaults}


def _init_worker(swapalg):
    # spawned workers start without the app registry or any overridden SWAPALG
    if not apps.ready:
        django.setup()
    settings.SWAPALG = swapalg
    swap_settings.reload()


def run_cases(check, cases, workers):
    """
    ``check`` applied to every case, in case order. With more than one
    worker the cases are spread over a process pool, so ``check`` and the
    cases must pickle.
    """
    if workers <= 1 or len(cases) <= 1:
        return [check(case) for case in cases]
    workers = min(workers, len(cases))
    chunksize = max(1, len(cases) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                             initargs=(getattr(settings, 'SWAPALG', {}),)) as pool:
        return list(pool.map(check, cases, chunksize=chunksize))


def run_suite(name, params=None, seed=None):
    """
    Runs suite ``name`` and returns its ``SuiteReport``. Cases may be
    checked on up to ``THREADS`` worker processes; failures are reported in case
    order either way.
    """
    suite = get_suite(name)
    params = suite_params(suite, params)
    seed = swap_settings.DEFAULT_SEED if seed is None else seed
    cases = suite.cases(params, seed)
    workers = max(1, swap_settings.THREADS)
    logger.info("suite %s: %d cases, params=%s seed=%s workers=%d", name, len(cases), params, seed, workers)

    started = time.perf_counter()
    results = run_cases(partial(suite.check, params=params), cases, workers)
    elapsed_ms = int((time.perf_counter() - started) * 1000)

    failures = [failure for result in results for failure in result]
    report = SuiteReport(suite=name, params=params, seed=seed, trials=len(cases),
                         failures=failures, elapsed_ms=elapsed_ms)
    if failures:
        logger.warning("suite %s: %d failures in %d cases", name, len(failures), len(cases))
    else:
        logger.info("suite %s: passed %d cases in %d ms", name, len(cases), elapsed_ms)
    return report
