"""Machine-readable renderers: JSON reports, CSV tables, one-line set listings."""
from __future__ import annotations

import csv
import io

from core.product_graph import VertexSet
from core.stability import ClaimDiagnostics, CorollaryResult, StabilityReport
from core.tail_bounds import TailReport
from core.transform import LevelWeights
from shared.format_helpers import format_float, fraction_payload

VERIFY_COLUMNS = (
    "r",
    "n",
    "k",
    "seed",
    "epsilon",
    "tail_weight",
    "tail_bound",
    "i0",
    "j",
    "symdiff",
    "theorem_bound",
    "oracle_agrees",
)


def _csv_text(header: tuple[str, ...] | list[str], rows: list[list[str]], *, preamble: str = "") -> str:
    buffer = io.StringIO()
    if preamble:
        buffer.write(preamble)
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_levels_csv(weights: LevelWeights) -> str:
    rows = [[str(k), format_float(w)] for k, w in enumerate(weights.as_list())]
    return _csv_text(["level", "weight"], rows)


def verify_row(report: StabilityReport, *, k: int, seed: int) -> list[str]:
    i0, j = report.recovery.dictator
    return [
        str(report.r),
        str(report.n),
        str(k),
        str(seed),
        format_float(float(report.epsilon)),
        format_float(report.tail_weight),
        format_float(float(report.tail_bound)),
        str(i0),
        str(j),
        format_float(float(report.symdiff)),
        format_float(float(report.theorem_bound)),
        "true" if report.oracle_agrees else "false",
    ]


def render_verify_csv(rows: list[list[str]], *, seed: int) -> str:
    return _csv_text(VERIFY_COLUMNS, rows, preamble=f"# seed={seed}\n")


def stability_report_payload(report: StabilityReport, *, seed: int | None = None) -> dict:
    recovery = report.recovery
    payload = {
        "r": report.r,
        "n": report.n,
        "size": report.size,
        "epsilon": fraction_payload(report.epsilon),
        "tail_weight": report.tail_weight,
        "tail_bound": fraction_payload(report.tail_bound),
        "tail_bound_holds": report.tail_bound_holds,
        "lemma_epsilon": report.lemma_epsilon,
        "level0_weight": report.level0_weight,
        "level1_weight": report.level1_weight,
        "a_sq_sorted": list(report.a_sq_sorted),
        "recovery": {
            "i0": recovery.i0,
            "g": [[float(z.real), float(z.imag)] for z in recovery.g],
            "g1": [int(v) for v in recovery.g1],
            "dictator": {"coord": recovery.dictator[0], "value": recovery.dictator[1]},
            "residual_g": recovery.residual_g,
            "residual_g1": recovery.residual_g1,
            "rounding_bound_holds": recovery.rounding_bound_holds,
            "degenerate": recovery.degenerate,
        },
        "symdiff": fraction_payload(report.symdiff),
        "theorem_bound": fraction_payload(report.theorem_bound),
        "theorem_holds": report.theorem_holds,
        "remark_trivial_bound": fraction_payload(report.remark_trivial_bound),
        "lemma_trivial_bound": report.lemma_trivial_bound,
        "hypotheses": report.hypotheses.as_dict(),
        "oracle_dictator": {"coord": report.oracle_dictator[0], "value": report.oracle_dictator[1]},
        "oracle_symdiff": fraction_payload(report.oracle_symdiff),
        "oracle_agrees": report.oracle_agrees,
    }
    if seed is not None:
        payload = {"seed": seed, **payload}
    return payload


def corollary_payload(result: CorollaryResult) -> dict:
    return {
        "contained": result.contained,
        "witness": None if result.witness is None else {"coord": result.witness[0], "value": result.witness[1]},
        "epsilon": fraction_payload(result.epsilon),
        "threshold": result.threshold,
        "hypothesis_holds": result.hypothesis_holds,
        "gap_bound": fraction_payload(result.gap_bound),
        "gap_holds": result.gap_holds,
    }


def claims_payload(diag: ClaimDiagnostics) -> dict:
    return {
        "epsilon": diag.epsilon,
        "level1_weight": diag.level1_weight,
        "lemma_hypothesis": diag.lemma_hypothesis,
        "a2_sq": diag.a2_sq,
        "claim1_threshold": diag.claim1_threshold,
        "claim1_holds": diag.claim1_holds,
        "tail_sum_from_2": diag.tail_sum_from_2,
        "claim2_threshold": diag.claim2_threshold,
        "claim2_holds": diag.claim2_holds,
        "lambda": diag.lambda_,
        "lambda_sq": diag.lambda_sq,
        "a2_sq_cap": diag.a2_sq_cap,
        "g2_sup": diag.g2_sup,
        "fle1_dist01": diag.fle1_dist01,
        "fle1_dist01_bound": diag.fle1_dist01_bound,
    }


def render_set_line(A: VertexSet) -> str:
    return " ".join("(" + ",".join(str(c) for c in p) + ")" for p in A.points())


def render_tail_report(report: TailReport) -> str:
    p = report.params
    lines = [
        f"sigma2={format_float(p.sigma_sq)} c={format_float(p.c)} t={format_float(p.t)}",
        f"bennett_tail={format_float(report.bennett)}",
    ]
    if report.bennett_underflows:
        lines.append(f"bennett_log_tail={format_float(report.bennett_log)}")
    if report.in_regime:
        lines.append(f"lemma33_tail={format_float(report.lemma33)}")
        lines.append(f"lemma33_integral_bound={format_float(report.integral_bound)}")
        lines.append(f"integral_below_eps_prime={'true' if report.integral_below_eps else 'false'}")
    else:
        lines.append("lemma33_tail=out_of_regime")
    return "\n".join(lines) + "\n"
