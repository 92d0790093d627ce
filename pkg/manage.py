#!/usr/bin/env python
"""
Command-line entry point of the swapping algebra toolkit.

Besides Django's own commands (``test``, ``check``) it runs ``eval``,
``bracket``, ``reduce``, ``verify`` and ``cluster``.
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install the pinned packages with "
            "'pip install -r requirements.txt' inside an activated "
            "virtual environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
