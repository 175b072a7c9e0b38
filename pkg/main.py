"""
Punto de entrada de `cspace` desde la raíz del repositorio.

    python main.py validate espacio.json
"""

import sys

from src.presentation.cli.app import main

if __name__ == "__main__":
    sys.exit(main())
