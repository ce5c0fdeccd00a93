#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Interfaz de línea de comandos del toolkit.
Cada subcomando delega en una sola operación del InvariantService (o en el
SweepService / AcceptanceService) y traduce el resultado a texto o JSON.

Códigos de salida: 0 éxito, 2 entrada no válida o uso incorrecto,
1 fallo de invariante o error interno.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, TextIO

from dotenv import load_dotenv

from src.services import AcceptanceService, InvariantService, SweepService
from src.utils.config import get_sweep_config, setup_logging
from src.utils.helpers import render_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

Q_ARGS_COMMANDS = ('genus', 'spectrum', 'decompose', 'endo', 'nonisotrivial', 'model-check')


def build_parser() -> argparse.ArgumentParser:
    """Construye el parser con todos los subcomandos."""
    parser = argparse.ArgumentParser(
        prog='superjac',
        description='Invariantes de jacobianas de curvas superelípticas y^q = f(x)'
    )
    parser.add_argument('--verbose', action='store_true', help='Logging a nivel INFO en stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    def add_format(p):
        p.add_argument('--format', choices=['text', 'json'], default='text')

    for name in Q_ARGS_COMMANDS:
        p = sub.add_parser(name)
        p.add_argument('--n', type=int, required=(name != 'model-check'))
        p.add_argument('--q', type=int)
        p.add_argument('--p', type=int)
        p.add_argument('--r', type=int)
        add_format(p)
        if name in ('endo', 'nonisotrivial'):
            p.add_argument('--galois', required=(name == 'endo'))
        if name == 'nonisotrivial':
            p.add_argument('--doubly-transitive', choices=['yes', 'no'])
        if name == 'model-check':
            p.add_argument('--poly', required=True)

    for name in ('cm-scan', 'feasible-scan'):
        p = sub.add_parser(name)
        p.add_argument('--q-max', type=int, required=True)
        p.add_argument('--n', type=int)
        p.add_argument('--n-max', type=int)
        p.add_argument('--workers', type=int)
        add_format(p)

    for name in ('galois', 'jinv'):
        p = sub.add_parser(name)
        p.add_argument('--poly', required=True)
        add_format(p)

    p = sub.add_parser('hp-check')
    p.add_argument('--pole', type=int, default=1728)
    add_format(p)

    p = sub.add_parser('heart')
    p.add_argument('--p', type=int, required=True)
    p.add_argument('--group')
    p.add_argument('--degree', type=int)
    p.add_argument('--gens', action='append', help='Generador en notación de ciclos; repetible')
    add_format(p)

    p = sub.add_parser('verify-all')
    add_format(p)
    return parser


def _exit_code(result: Dict[str, Any]) -> int:
    if result.get('success'):
        return EXIT_OK
    return EXIT_USAGE if result.get('error_type') == 'invalid_input' else EXIT_FAILURE


def _text_lines(command: str, data: Dict[str, Any]) -> List[str]:
    """Representación textual de un resultado correcto."""
    if command == 'genus':
        return [str(data['genus'])]
    if command == 'spectrum':
        lines = [f"{i}: {m}" for i, m in data['multiplicities'].items()]
        return lines + [e['differential'] for e in data['basis']]
    if command == 'decompose':
        lines = [f"level {lv['level']} (m={lv['modulus']}): dim {lv['new_part_dim']}" for lv in data['levels']]
        return lines + [f"total: {data['total_dim']}"]
    if command == 'endo':
        return [data['product_label'], *data['annotations'], f"status: {data['status']}"]
    if command == 'galois':
        return [f"{data['label']} ({data['mode']})"]
    if command == 'jinv':
        return [f"j = {data['j']}", f"isotrivial: {data['isotrivial']}"]
    return [f"{key}: {value}" for key, value in data.items()]


def _emit(command: str, result: Dict[str, Any], fmt: str, out: TextIO, err: TextIO) -> int:
    if not result.get('success'):
        print(f"error ({result.get('error_type')}): {result.get('error')}", file=err)
        return _exit_code(result)
    data = {k: v for k, v in result.items() if k != 'success'}
    if fmt == 'json':
        print(render_json(data), file=out)
    else:
        for line in _text_lines(command, data):
            print(line, file=out)
    return EXIT_OK


def _run_sweep(args, sweeps: SweepService, out: TextIO, err: TextIO) -> int:
    runner = sweeps.cm_scan if args.command == 'cm-scan' else sweeps.feasible_scan
    code = EXIT_OK
    for record in runner(args.q_max, n=args.n, n_max=args.n_max):
        if not record.get('success'):
            print(f"error ({record.get('error_type')}): {record.get('error')}", file=err)
            code = max(code, _exit_code(record))
            continue
        data = {k: v for k, v in record.items() if k != 'success'}
        if args.format == 'json':
            print(render_json(data), file=out)
        else:
            print(' '.join(f"{k}={v}" for k, v in data.items()), file=out)
    return code


def _run_verify_all(args, seed: int, out: TextIO) -> int:
    results = AcceptanceService(seed).run_all()
    for result in results:
        if args.format == 'json':
            print(render_json(result), file=out)
        else:
            mark = 'PASS' if result.passed else 'FAIL'
            print(f"[{mark}] {result.criterion:2d} {result.name} ({result.elapsed:.2f}s): {result.detail}", file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE


def _dispatch(args, service: InvariantService) -> Dict[str, Any]:
    command = args.command
    q_args = {'q': getattr(args, 'q', None), 'p': getattr(args, 'p', None), 'r': getattr(args, 'r', None)}
    if command == 'genus':
        return service.genus(args.n, **q_args)
    if command == 'spectrum':
        return service.spectrum(args.n, **q_args)
    if command == 'decompose':
        return service.decompose(args.n, **q_args)
    if command == 'endo':
        return service.endo(args.n, args.galois, **q_args)
    if command == 'nonisotrivial':
        flag = None if args.doubly_transitive is None else args.doubly_transitive == 'yes'
        return service.nonisotrivial(args.n, args.galois, doubly_transitive=flag, **q_args)
    if command == 'model-check':
        return service.model_check(args.poly, **q_args)
    if command == 'galois':
        return service.galois(args.poly)
    if command == 'jinv':
        return service.jinv(args.poly)
    if command == 'hp-check':
        return service.hp_check(args.pole)
    if command == 'heart':
        return service.heart(args.p, group=args.group, degree=args.degree, generators=args.gens)
    raise ValueError(f"Subcomando desconocido: {command}")


def run(argv: Optional[List[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    """
    Ejecuta la CLI.

    Args:
        argv: Argumentos (sin el nombre del programa); por defecto sys.argv[1:]
        out: Flujo de resultados; por defecto stdout
        err: Flujo de errores; por defecto stderr

    Returns:
        Código de salida
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    load_dotenv()
    setup_logging('INFO' if args.verbose else None)
    config = get_sweep_config()
    service = InvariantService()

    if args.command in ('cm-scan', 'feasible-scan'):
        workers = args.workers if args.workers is not None else config['workers']
        return _run_sweep(args, SweepService(service, workers), out, err)
    if args.command == 'verify-all':
        return _run_verify_all(args, config['seed'], out)
    return _emit(args.command, _dispatch(args, service), args.format, out, err)


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()
