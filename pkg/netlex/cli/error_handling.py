"""
Simple error handling with clean output.
Unix-style error reporting with one exit code per error family.
"""

import functools
from typing import Any, Callable

import click
from loguru import logger

from netlex.models.exceptions import EXIT_UNEXPECTED, NetlexError


def handle_error(error: Exception, operation: str = "operation") -> int:
    """Print ``error`` and its suggestions to stderr; return the exit code to use."""
    if isinstance(error, NetlexError):
        click.echo(f"✗ Error in {operation}: {error.message}", err=True)
        if error.suggestions:
            click.echo("  Try:", err=True)
            for suggestion in error.suggestions:
                click.echo(f"    • {suggestion}", err=True)
        return error.exit_code
    click.echo(f"✗ Unexpected error in {operation}: {error}", err=True)
    logger.opt(exception=error).debug("Unexpected error traceback")
    return EXIT_UNEXPECTED


def handle_errors(operation: str) -> Callable:
    """
    Decorator turning netlex errors into exit codes.

    Usage:
        @handle_errors("stats")
        def stats(...):
            ...
    """

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                return func(*args, **kwargs)
            except (click.exceptions.Exit, click.ClickException, click.Abort):
                raise
            except Exception as e:
                raise click.exceptions.Exit(handle_error(e, operation)) from e

        return wrapper

    return decorator
