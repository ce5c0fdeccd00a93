#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Módulo de configuración del toolkit.
Gestiona el logging y la lectura de variables de entorno (cargadas con
python-dotenv desde .env por los puntos de entrada).
"""

import os
import sys
import logging
from datetime import datetime
from typing import Any, Dict, Optional

from .helpers import get_logs_directory

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DEFAULT_SEED = 20240229


def _env_flag(name: str, default: bool = False) -> bool:
    value = os.environ.get(name)
    if value is None:
        return default
    return value.strip().lower() in ('1', 'true', 'yes', 'on')


def _env_int(name: str, default: int) -> int:
    try:
        return int(os.environ.get(name, default))
    except ValueError:
        logging.getLogger(__name__).warning(f"{name} no es un entero; se usa {default}")
        return default


def setup_logging(level: Optional[str] = None, log_to_file: Optional[bool] = None) -> logging.Logger:
    """
    Configura el logging raíz.

    Args:
        level: Nivel ('DEBUG', 'INFO', ...); por defecto SUPERJAC_LOG_LEVEL o WARNING
        log_to_file: Añade un FileHandler con timestamp en logs/; por defecto SUPERJAC_LOG_TO_FILE

    Returns:
        Logger del módulo
    """
    level_name = (level or os.environ.get("SUPERJAC_LOG_LEVEL", "WARNING")).upper()
    if log_to_file is None:
        log_to_file = _env_flag("SUPERJAC_LOG_TO_FILE")

    # stdout queda reservado para los resultados
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_to_file:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        handlers.append(logging.FileHandler(os.path.join(get_logs_directory(), f"superjac_{timestamp}.log")))

    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )

    # Reducir verbosidad de bibliotecas externas
    logging.getLogger("waitress").setLevel(logging.WARNING)
    logging.getLogger("werkzeug").setLevel(logging.WARNING)

    return logging.getLogger(__name__)


def get_sweep_config() -> Dict[str, Any]:
    """Configuración de barridos y criterios de aceptación."""
    return {
        "workers": max(1, _env_int("SUPERJAC_SWEEP_WORKERS", 4)),
        "seed": _env_int("SUPERJAC_SEED", DEFAULT_SEED),
        "log_to_file": _env_flag("SUPERJAC_LOG_TO_FILE"),
    }


def get_server_config() -> Dict[str, Any]:
    """Host y puerto del servidor HTTP."""
    return {
        "host": os.environ.get("SUPERJAC_HOST", "0.0.0.0"),
        "port": _env_int("SUPERJAC_PORT", 5000),
    }
