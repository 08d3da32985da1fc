"""Seeded corpus generation: perturbed dictators or enumerated sets, as JSON Lines."""
from __future__ import annotations

import json
import logging

from core.file_handler import vertex_set_to_document
from core.product_graph import dictator_set, max_independent_sets, perturb
from core.zrn import GridShape

logger = logging.getLogger(__name__)


def source_dictator(shape: GridShape, seed: int) -> tuple[int, int]:
    """Dictator a trial starts from: coordinate cycles fastest, value next."""
    return seed % shape.n + 1, (seed // shape.n) % shape.r


class CorpusService:
    def perturb_corpus(self, shape: GridShape, ks: tuple[int, ...], seeds: list[int]) -> list[dict]:
        docs = []
        for k in ks:
            for seed in seeds:
                d = dictator_set(shape, *source_dictator(shape, seed))
                J = perturb(d, k, seed)
                docs.append({"source": "perturb", "seed": seed, "k": k, **vertex_set_to_document(J)})
        logger.info("perturbation corpus for K_%s^%s: %s sets", shape.r, shape.n, len(docs))
        return docs

    def enumerate_corpus(
        self, shape: GridShape, *, size: int | None, cap: int | None, seed: int = 0
    ) -> list[dict]:
        result = max_independent_sets(shape, size, cap)
        full = shape.r ** (shape.n - 1)
        docs = [
            {"source": "enumerate", "seed": seed, "k": full - len(A), **vertex_set_to_document(A)}
            for A in result.sets
        ]
        if result.truncated:
            logger.warning("enumeration corpus truncated at %s sets", len(docs))
        return docs

    @staticmethod
    def render_jsonl(docs: list[dict]) -> str:
        return "".join(json.dumps(doc, separators=(",", ":")) + "\n" for doc in docs)
