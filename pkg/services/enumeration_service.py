"""Independent-set enumeration for the CLI."""
from __future__ import annotations

import logging

from core.product_graph import EnumerationResult, max_independent_sets, maximal_independent_sets
from core.zrn import GridShape
from renderers.formatters import render_set_line

logger = logging.getLogger(__name__)


class EnumerationService:
    def enumerate(
        self,
        shape: GridShape,
        *,
        size: int | None = None,
        cap: int | None = None,
        method: str = "auto",
        maximal: bool = False,
    ) -> EnumerationResult:
        if maximal:
            result = maximal_independent_sets(shape, cap)
        else:
            result = max_independent_sets(shape, size, cap, method)
        logger.info(
            "K_%s^%s: %s sets via %s%s",
            shape.r, shape.n, len(result.sets), result.method, " (truncated)" if result.truncated else "",
        )
        return result

    @staticmethod
    def render(result: EnumerationResult) -> str:
        return "".join(render_set_line(A) + "\n" for A in result.sets)
