#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Funciones auxiliares: rutas del proyecto y serialización JSON de informes.
"""

import os
import json
import logging
from datetime import datetime
from fractions import Fraction
from typing import Any, Optional

logger = logging.getLogger(__name__)


def get_project_root() -> str:
    """
    Obtiene la ruta raíz del proyecto.

    Returns:
        Ruta absoluta del directorio raíz del proyecto
    """
    # helpers.py está en src/utils/: subir dos niveles
    current_dir = os.path.dirname(os.path.abspath(__file__))
    return os.path.dirname(os.path.dirname(current_dir))


def _ensure_directory(name: str) -> str:
    path = os.path.join(get_project_root(), name)
    os.makedirs(path, exist_ok=True)
    return path


def get_logs_directory() -> str:
    """Directorio de logs, creado si no existe."""
    return _ensure_directory("logs")


def get_results_directory() -> str:
    """Directorio de resultados, creado si no existe."""
    return _ensure_directory("results")


def to_jsonable(value: Any) -> Any:
    """
    Convierte informes y escalares exactos en estructuras JSON.
    Los objetos con to_dict() se expanden; Fraction se escribe como 'a/b'.
    """
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, 'value') and isinstance(getattr(value, 'value'), str):
        return value.value
    return value


def render_json(value: Any) -> str:
    """JSON determinista (claves en el orden de construcción, sin ASCII forzado)."""
    return json.dumps(to_jsonable(value), ensure_ascii=False)


def save_report(report: Any, name: str, results_dir: Optional[str] = None) -> str:
    """
    Guarda un informe en results/<name>_<timestamp>.json.

    Returns:
        Ruta del archivo escrito
    """
    directory = results_dir or get_results_directory()
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    path = os.path.join(directory, f"{name}_{timestamp}.json")
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(to_jsonable(report), f, ensure_ascii=False, indent=4)
    logger.info(f"Informe guardado en {path}")
    return path
