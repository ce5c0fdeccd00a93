#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Servicio de barridos exhaustivos sobre pares (n, q).
Reparte los pares entre hilos; el orden del resultado es siempre (n, q),
independiente del orden de finalización.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Iterator, List, Optional

from src.jacobians.cm_obstruction import coprime_pairs

logger = logging.getLogger(__name__)


class SweepService:
    """Barridos cm-scan y feasible-scan sobre el servicio de invariantes."""

    def __init__(self, invariant_service, workers: int = 1):
        """
        Args:
            invariant_service: InvariantService que calcula cada registro
            workers: Número de hilos
        """
        self.invariant_service = invariant_service
        self.workers = max(1, int(workers))
        logger.info(f"Servicio de barridos inicializado ({self.workers} hilos)")

    def _n_values(self, n: Optional[int], n_max: Optional[int]) -> List[int]:
        if n is not None:
            return [n]
        return list(range(3, (n_max or 12) + 1))

    def _sweep(self, fn, n: Optional[int], n_max: Optional[int], q_max: int) -> Iterator[Dict[str, Any]]:
        pairs = coprime_pairs(self._n_values(n, n_max), q_max)
        logger.info(f"Barrido de {len(pairs)} pares (q <= {q_max})")
        if self.workers == 1:
            for nn, qq in pairs:
                yield fn(nn, qq)
            return
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            # map conserva el orden de entrada
            yield from pool.map(lambda pair: fn(*pair), pairs)

    def cm_scan(self, q_max: int, n: Optional[int] = None, n_max: Optional[int] = None) -> Iterator[Dict[str, Any]]:
        """Registros de invariant_automorphisms ordenados por (n, q)."""
        return self._sweep(self.invariant_service.cm_record, n, n_max, q_max)

    def feasible_scan(self, q_max: int, n: Optional[int] = None, n_max: Optional[int] = None) -> Iterator[Dict[str, Any]]:
        """Registros de square_case_feasible ordenados por (n, q)."""
        return self._sweep(self.invariant_service.feasible_record, n, n_max, q_max)
