"""
CLI - interfaz de línea de comandos `cspace`.
"""

from .app import build_parser, main

__all__ = [
    'build_parser',
    'main',
]
