#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Controlador HTTP de invariantes.
Responsabilidad única: traducir peticiones GET en llamadas al
InvariantService y sus resultados en respuestas JSON.
"""

import logging
from typing import Any, Dict, Optional

from flask import Blueprint, jsonify, request

logger = logging.getLogger(__name__)

# Blueprint para las rutas de invariantes
invariant_blueprint = Blueprint('invariants', __name__, url_prefix='/api/invariants')

# Servicios inyectados desde la aplicación
invariant_service = None
sweep_service = None

MAX_HTTP_Q = 4096
MAX_HTTP_N = 64


def init_invariant_controller(service, sweeps=None):
    """Inicializa el controlador con el servicio de invariantes y el de barridos."""
    global invariant_service, sweep_service
    invariant_service = service
    sweep_service = sweeps
    logger.info("Controlador de invariantes inicializado")


def _int_arg(name: str) -> Optional[int]:
    value = request.args.get(name)
    if value is None or value == '':
        return None
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"Parámetro '{name}' debe ser entero")


def _q_args() -> Dict[str, Any]:
    return {'q': _int_arg('q'), 'p': _int_arg('p'), 'r': _int_arg('r')}


def _respond(result: Dict[str, Any]):
    if result.get('success'):
        return jsonify(result)
    status = 400 if result.get('error_type') == 'invalid_input' else 500
    return jsonify(result), status


def _guarded(handler):
    """Envuelve una ruta: servicio no inicializado -> 500, parámetro malo -> 400."""
    def wrapper():
        if not invariant_service:
            return jsonify({'success': False, 'error': 'Servicio no inicializado'}), 500
        try:
            return _respond(handler())
        except ValueError as e:
            return jsonify({'success': False, 'error': str(e), 'error_type': 'invalid_input'}), 400
        except Exception as e:
            logger.error(f"Error en {handler.__name__}: {str(e)}")
            return jsonify({'success': False, 'error': str(e), 'error_type': 'internal'}), 500
    wrapper.__name__ = handler.__name__
    return wrapper


@invariant_blueprint.route('/genus', methods=['GET'])
@_guarded
def genus():
    """Género de C_{f,q}."""
    return invariant_service.genus(_int_arg('n'), **_q_args())


@invariant_blueprint.route('/spectrum', methods=['GET'])
@_guarded
def spectrum():
    return invariant_service.spectrum(_int_arg('n'), **_q_args())


@invariant_blueprint.route('/decompose', methods=['GET'])
@_guarded
def decompose():
    return invariant_service.decompose(_int_arg('n'), **_q_args())


@invariant_blueprint.route('/endo', methods=['GET'])
@_guarded
def endo():
    """Predicción de End^0; requiere 'galois'."""
    return invariant_service.endo(_int_arg('n'), request.args.get('galois'), **_q_args())


@invariant_blueprint.route('/nonisotrivial', methods=['GET'])
@_guarded
def nonisotrivial():
    flag = request.args.get('doubly_transitive')
    doubly_transitive = None if flag is None else flag.lower() in ('1', 'true', 'yes')
    return invariant_service.nonisotrivial(_int_arg('n'), request.args.get('galois'),
                                           doubly_transitive=doubly_transitive, **_q_args())


@invariant_blueprint.route('/galois', methods=['GET'])
@_guarded
def galois():
    return invariant_service.galois(request.args.get('poly', ''))


@invariant_blueprint.route('/jinv', methods=['GET'])
@_guarded
def jinv():
    return invariant_service.jinv(request.args.get('poly', ''))


@invariant_blueprint.route('/hp-check', methods=['GET'])
@_guarded
def hp_check():
    return invariant_service.hp_check(_int_arg('pole') or 1728)


@invariant_blueprint.route('/model-check', methods=['GET'])
@_guarded
def model_check():
    return invariant_service.model_check(request.args.get('poly', ''), **_q_args())


@invariant_blueprint.route('/heart', methods=['GET'])
@_guarded
def heart():
    """Centralizador del corazón: 'group' con nombre o 'gens' repetido con 'degree'."""
    return invariant_service.heart(_int_arg('p'), group=request.args.get('group'),
                                   degree=_int_arg('degree'),
                                   generators=request.args.getlist('gens') or None)


def _scan(kind: str):
    if not sweep_service:
        return {'success': False, 'error': 'Servicio de barridos no inicializado', 'error_type': 'internal'}
    q_max = _int_arg('q_max')
    if q_max is None or q_max < 2 or q_max > MAX_HTTP_Q:
        raise ValueError(f"q_max debe estar en [2, {MAX_HTTP_Q}]")
    n, n_max = _int_arg('n'), _int_arg('n_max')
    for name, value in (('n', n), ('n_max', n_max)):
        if value is not None and not 3 <= value <= MAX_HTTP_N:
            raise ValueError(f"{name} debe estar en [3, {MAX_HTTP_N}]")
    runner = sweep_service.cm_scan if kind == 'cm' else sweep_service.feasible_scan
    records = list(runner(q_max, n=n, n_max=n_max))
    return {'success': all(r.get('success') for r in records),
            'records': records, 'error_type': 'invalid_input'}


@invariant_blueprint.route('/cm-scan', methods=['GET'])
@_guarded
def cm_scan():
    return _scan('cm')


@invariant_blueprint.route('/feasible-scan', methods=['GET'])
@_guarded
def feasible_scan():
    return _scan('feasible')
