"""Corpus driver: perturb dictators, recover them, and tabulate one CSV row per trial."""
from __future__ import annotations

import asyncio
import logging
from dataclasses import dataclass

from app import config as _cfg
from core.errors import ValidationError
from core.product_graph import VertexSet, dictator_set, perturb
from core.session_logger import SessionLogger
from core.stability import recover_independent_set
from core.zrn import GridShape
from renderers.formatters import verify_row
from services.corpus_service import source_dictator

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Trial:
    r: int
    n: int
    k: int
    seed: int


class VerifyService:
    def __init__(self, *, workers: int | None = None, session_logger: SessionLogger | None = None):
        self.workers = max(1, int(workers if workers is not None else _cfg.VERIFY_WORKERS))
        self.session_logger = session_logger

    @staticmethod
    def plan(shape: GridShape, ks: tuple[int, ...], seeds: list[int]) -> list[Trial]:
        return sorted(Trial(shape.r, shape.n, k, seed) for k in ks for seed in seeds)

    def run_trial(self, trial: Trial) -> list[str]:
        shape = GridShape(trial.r, trial.n)
        d = dictator_set(shape, *source_dictator(shape, trial.seed))
        J = perturb(d, trial.k, trial.seed)
        _, report = recover_independent_set(J)
        if self.session_logger is not None:
            self.session_logger.log_trial(
                r=trial.r,
                n=trial.n,
                k=trial.k,
                seed=trial.seed,
                oracle_agrees=report.oracle_agrees,
                theorem_holds=report.theorem_holds,
            )
        return verify_row(report, k=trial.k, seed=trial.seed)

    async def _run_all(self, trials: list[Trial]) -> list[list[str]]:
        sem = asyncio.Semaphore(self.workers)

        async def one(trial: Trial) -> list[str]:
            async with sem:
                return await asyncio.to_thread(self.run_trial, trial)

        # gather keeps input order, so rows follow the sorted plan
        return await asyncio.gather(*(one(t) for t in trials))

    def run_corpus(self, shape: GridShape, ks: tuple[int, ...], seeds: list[int]) -> list[list[str]]:
        full = shape.r ** (shape.n - 1)
        bad = [k for k in ks if not 0 <= k <= full]
        if bad:
            raise ValidationError(f"k must lie in [0, {full}], got {bad[0]}")
        trials = self.plan(shape, ks, seeds)
        logger.info("verifying %s trials on K_%s^%s with %s workers", len(trials), shape.r, shape.n, self.workers)
        return asyncio.run(self._run_all(trials))

    def verify_set(self, J: VertexSet, *, seed: int = 0) -> list[str]:
        shape = J.shape
        _, report = recover_independent_set(J)
        k = shape.r ** (shape.n - 1) - len(J)
        if self.session_logger is not None:
            self.session_logger.log_trial(
                r=shape.r,
                n=shape.n,
                k=k,
                seed=seed,
                oracle_agrees=report.oracle_agrees,
                theorem_holds=report.theorem_holds,
            )
        return verify_row(report, k=k, seed=seed)
