#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Aplicación HTTP del toolkit de invariantes.
Responsabilidad única: configurar Flask y exponer el InvariantService como API JSON.
"""

import os
import sys
import logging
from flask import Flask, jsonify
from dotenv import load_dotenv

# Agregar la ruta del proyecto al PYTHONPATH
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.utils.config import setup_logging, get_sweep_config, get_server_config
from src.services import InvariantService, SweepService
from src.controllers import invariant_blueprint
from src.controllers.invariant_controller import init_invariant_controller

logger = logging.getLogger(__name__)


class SuperjacApp:
    """
    Fábrica de la aplicación Flask.
    Crea los servicios, inicializa el controlador y registra el blueprint.
    """

    def __init__(self):
        self.app = None
        self.services = {}

    def create_app(self) -> Flask:
        """
        Crea y configura la aplicación Flask.

        Returns:
            Instancia configurada de Flask
        """
        load_dotenv()
        setup_logging(os.environ.get("SUPERJAC_LOG_LEVEL", "INFO"))
        logger.info("Iniciando API de invariantes superelípticos")

        self.app = Flask(__name__)
        self.app.json.sort_keys = False

        self._initialize_services()
        self._register_routes()
        self._register_blueprints()

        logger.info("Aplicación configurada correctamente")
        return self.app

    def _initialize_services(self):
        invariant_service = InvariantService()
        self.services = {
            'invariants': invariant_service,
            'sweeps': SweepService(invariant_service, get_sweep_config()['workers']),
        }
        logger.info(f"Servicios inicializados: {list(self.services.keys())}")

    def _register_routes(self):
        assert self.app is not None, "Flask app must be initialized first"

        @self.app.route('/health')
        def health():
            return jsonify({'success': True, 'status': 'ok'})

    def _register_blueprints(self):
        assert self.app is not None, "Flask app must be initialized first"
        init_invariant_controller(self.services['invariants'], self.services['sweeps'])
        self.app.register_blueprint(invariant_blueprint)
        logger.info("✅ Blueprints registrados correctamente")


def main():
    """Inicia el servidor HTTP."""
    app = SuperjacApp().create_app()
    server = get_server_config()
    host, port = server['host'], server['port']

    logger.info(f"🚀 Servidor iniciado en {host}:{port}")
    try:
        from waitress import serve
        serve(app, host=host, port=port)
    except ImportError:
        logger.warning("Waitress no disponible, usando servidor de desarrollo de Flask")
        app.run(host=host, port=port, debug=False)


if __name__ == "__main__":
    main()
