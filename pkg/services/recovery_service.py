"""Single-set recovery: stability report plus containment and claim diagnostics."""
from __future__ import annotations

import logging
import os

from core.file_handler import load_vertex_set
from core.product_graph import VertexSet
from core.session_logger import SessionLogger
from core.stability import claim_diagnostics, corollary_check, recover_independent_set
from renderers.formatters import claims_payload, corollary_payload, stability_report_payload
from shared.format_helpers import format_fraction

logger = logging.getLogger(__name__)


class RecoveryService:
    def __init__(self, *, session_logger: SessionLogger | None = None):
        self.session_logger = session_logger

    def recover(self, J: VertexSet, *, label: str = "<set>", seed: int | None = None) -> dict:
        dictator, report = recover_independent_set(J)
        corollary = corollary_check(J)
        claims = claim_diagnostics(J.indicator())
        logger.info(
            "recovered x_%s=%s for %s: symdiff %s, bound %s",
            dictator.coord, dictator.value, label,
            format_fraction(report.symdiff), format_fraction(report.theorem_bound),
        )
        if self.session_logger is not None:
            self.session_logger.log_recover(
                label=label,
                dictator=dictator.key,
                symdiff=format_fraction(report.symdiff),
                ok=report.theorem_holds,
            )
        payload = stability_report_payload(report, seed=seed)
        payload["corollary"] = corollary_payload(corollary)
        payload["claims"] = claims_payload(claims)
        return payload

    def recover_file(self, path: str | os.PathLike, *, seed: int | None = None) -> dict:
        return self.recover(load_vertex_set(path), label=os.path.basename(str(path)), seed=seed)
