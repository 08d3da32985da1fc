"""Runtime container and command dispatch."""
from __future__ import annotations

import logging
import sys
from dataclasses import dataclass, field
from typing import Callable, TextIO

from app.constants import (
    CMD_BENNETT,
    CMD_CORPUS,
    CMD_ENUMERATE,
    CMD_RECOVER,
    CMD_SPECTRUM,
    CMD_VERIFY,
    CORPUS_ENUMERATE,
    EXIT_DOMAIN,
    EXIT_IO,
    EXIT_OK,
)
from app.settings import RunConfig
from core.errors import DictatorLabError
from core.file_handler import load_function, load_vertex_set, spectrum_to_document
from core.json_store import dumps_json, write_text_atomic
from core.session_logger import SessionLogger
from core.tail_bounds import TailParams, evaluate
from core.transform import fast_forward, level_weights
from renderers.formatters import render_levels_csv, render_tail_report, render_verify_csv
from services.corpus_service import CorpusService
from services.enumeration_service import EnumerationService
from services.recovery_service import RecoveryService
from services.verify_service import VerifyService


@dataclass
class CommandResult:
    """`text` goes to --out when given, else stdout; `artifacts` are extra files."""

    text: str
    artifacts: dict[str, str] = field(default_factory=dict)
    stdout_always: bool = False


@dataclass
class Runtime:
    logger: logging.Logger
    session_logger: SessionLogger
    recovery_service: RecoveryService
    verify_service: VerifyService
    corpus_service: CorpusService
    enumeration_service: EnumerationService


def build_runtime(config: RunConfig, *, stderr: TextIO | None = None) -> Runtime:
    session_logger = SessionLogger(stream=stderr)
    return Runtime(
        logger=logging.getLogger("dictatorlab"),
        session_logger=session_logger,
        recovery_service=RecoveryService(session_logger=session_logger),
        verify_service=VerifyService(workers=config.workers, session_logger=session_logger),
        corpus_service=CorpusService(),
        enumeration_service=EnumerationService(),
    )


def _spectrum(rt: Runtime, config: RunConfig) -> CommandResult:
    spec = fast_forward(load_function(config.function_path))
    text = render_levels_csv(level_weights(spec))
    artifacts = {config.out_path: dumps_json(spectrum_to_document(spec))} if config.out_path else {}
    return CommandResult(text, artifacts, stdout_always=True)


def _recover(rt: Runtime, config: RunConfig) -> CommandResult:
    return CommandResult(dumps_json(rt.recovery_service.recover_file(config.set_path, seed=config.seed)))


def _verify(rt: Runtime, config: RunConfig) -> CommandResult:
    if config.set_path:
        rows = [rt.verify_service.verify_set(load_vertex_set(config.set_path), seed=config.seed)]
    else:
        rows = rt.verify_service.run_corpus(config.shape, config.resolved_k_values(), config.trial_seeds())
    rt.session_logger.print_summary()
    return CommandResult(render_verify_csv(rows, seed=config.seed))


def _enumerate(rt: Runtime, config: RunConfig) -> CommandResult:
    result = rt.enumeration_service.enumerate(
        config.shape,
        size=config.size,
        cap=config.cap,
        method=config.method,
        maximal=config.maximal,
    )
    if result.truncated:
        rt.session_logger.print_warning(f"结果已截断：仅输出前 {len(result.sets)} 个集合")
    return CommandResult(rt.enumeration_service.render(result))


def _corpus(rt: Runtime, config: RunConfig) -> CommandResult:
    service = rt.corpus_service
    if config.corpus == CORPUS_ENUMERATE:
        docs = service.enumerate_corpus(config.shape, size=config.size, cap=config.cap, seed=config.seed)
    else:
        docs = service.perturb_corpus(config.shape, config.resolved_k_values(), config.trial_seeds())
    return CommandResult(service.render_jsonl(docs))


def _bennett(rt: Runtime, config: RunConfig) -> CommandResult:
    return CommandResult(render_tail_report(evaluate(TailParams(config.sigma2, config.c, config.t))))


HANDLERS: dict[str, Callable[[Runtime, RunConfig], CommandResult]] = {
    CMD_SPECTRUM: _spectrum,
    CMD_RECOVER: _recover,
    CMD_VERIFY: _verify,
    CMD_ENUMERATE: _enumerate,
    CMD_CORPUS: _corpus,
    CMD_BENNETT: _bennett,
}


def run(config: RunConfig, *, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    """Dispatch one command. 0 on success, 1 on domain or validation errors, 2 on I/O failure."""
    stdout = stdout if stdout is not None else sys.stdout
    rt = build_runtime(config, stderr=stderr)
    try:
        result = HANDLERS[config.command](rt, config)
        for path, text in result.artifacts.items():
            write_text_atomic(path, text)
        if config.out_path and not result.stdout_always:
            write_text_atomic(config.out_path, result.text)
        else:
            stdout.write(result.text)
            stdout.flush()
    except DictatorLabError as exc:
        rt.logger.error("%s failed: %s", config.command, exc)
        rt.session_logger.print_error(str(exc))
        return EXIT_DOMAIN
    except OSError as exc:
        rt.logger.error("%s failed: I/O error: %s", config.command, exc)
        rt.session_logger.print_error(f"I/O 错误: {exc}")
        return EXIT_IO
    return EXIT_OK
