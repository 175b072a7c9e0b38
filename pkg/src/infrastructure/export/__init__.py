"""
Export - serialización, renderizado y escritura de la salida.
"""

from .report_writer import FileReportWriter, atomic_write_text
from .serializers import dumps, space_document

__all__ = [
    'FileReportWriter',
    'atomic_write_text',
    'dumps',
    'space_document',
]
