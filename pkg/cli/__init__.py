"""
Command-line interface (typer)
"""

from cli.commands import app, run

__all__ = ['app', 'run']
