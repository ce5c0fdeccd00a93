#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Punto de entrada del toolkit.
`python -m src.main <subcomando> ...` ejecuta la CLI; `python -m src.main serve`
arranca la API HTTP.
"""

import os
import sys

# Agregar la ruta del proyecto al PYTHONPATH
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.cli import run


def main() -> int:
    argv = sys.argv[1:]
    if argv[:1] == ['serve']:
        from src.app import main as serve
        serve()
        return 0
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
