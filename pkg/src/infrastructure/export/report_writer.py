"""
Escritura de la salida de los comandos.

Los archivos se escriben completos en un temporal del mismo directorio y se
renombran con os.replace, de modo que nunca queda un archivo a medias.
"""

import logging
import os
import sys
import tempfile
from pathlib import Path
from typing import Optional, TextIO

from ...application.ports.interfaces import ReportWriter

logger = logging.getLogger(__name__)


def atomic_write_text(path: str, text: str) -> None:
    """Escribe text en path de forma atómica (UTF-8, saltos de línea \\n)."""
    target = Path(path)
    directory = target.parent
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=str(directory))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class FileReportWriter(ReportWriter):
    """Escribe en un archivo (atómicamente) o en el flujo de salida."""

    def __init__(self, stream: Optional[TextIO] = None):
        self._stream = stream

    def write(self, text: str, destination: Optional[str] = None) -> None:
        if destination:
            atomic_write_text(destination, text)
            logger.info("Salida escrita en %s", destination)
            return
        stream = self._stream or sys.stdout
        stream.write(text)
        stream.flush()
