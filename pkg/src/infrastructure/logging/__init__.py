"""
Logging - configuración de handlers y adaptador del puerto de logging.
"""

from .logging_service import StandardLoggingService, configure_logging, reset_logging

__all__ = [
    'StandardLoggingService',
    'configure_logging',
    'reset_logging',
]
