"""Application assembly helpers."""
from __future__ import annotations

import argparse
import logging

from app import config
from app.constants import (
    APP_FEATURES,
    APP_STARTUP,
    APP_TITLE,
    CMD_BENNETT,
    CMD_CORPUS,
    CMD_ENUMERATE,
    CMD_RECOVER,
    CMD_SPECTRUM,
    CMD_VERIFY,
    CORPUS_PERTURB,
    CORPUS_SOURCES,
    ENUM_METHODS,
)
from core.errors import ValidationError

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def configure_logging(level: str | None = None) -> None:
    """Logs go to stderr; stdout carries only artifacts."""
    logging.basicConfig(format=LOG_FORMAT, level=(level or config.LOG_LEVEL).upper(), force=True)


def log_startup_banner() -> None:
    logger.info("=" * 60)
    logger.info(f" {APP_TITLE} ")
    logger.info(APP_FEATURES)
    logger.info("=" * 60)
    logger.info(APP_STARTUP)


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors raise ValidationError so they map to exit code 1."""

    def error(self, message: str):
        raise ValidationError(f"{self.prog}: {message}")


def _common_parent() -> ArgumentParser:
    parent = ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=0, help="base random seed (default 0)")
    parent.add_argument("--out", help="write the artifact to this file instead of stdout")
    parent.add_argument("--log-level", dest="log_level", help="override DICTATORLAB_LOG_LEVEL")
    return parent


def _add_shape(parser: argparse.ArgumentParser, *, required: bool) -> None:
    parser.add_argument("--r", type=int, required=required, help="radix r of Z_r")
    parser.add_argument("--n", type=int, required=required, help="dimension n")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="dictatorlab", description=APP_FEATURES)
    parent = _common_parent()
    sub = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = sub.add_parser(CMD_SPECTRUM, parents=[parent], help="level weights of a function, as CSV")
    p.add_argument("--function", required=True, help="GridFunction JSON/YAML file")

    p = sub.add_parser(CMD_RECOVER, parents=[parent], help="recover the nearest dictator of an independent set")
    p.add_argument("--set", required=True, help="VertexSet JSON/YAML file")

    p = sub.add_parser(CMD_VERIFY, parents=[parent], help="run the stability check over a corpus, as CSV")
    _add_shape(p, required=False)
    p.add_argument("--set", help="verify a single VertexSet file instead of a corpus")
    p.add_argument("--corpus", choices=[CORPUS_PERTURB], default=CORPUS_PERTURB)
    p.add_argument("--k", help="removed vertices per trial: one value or a comma list")
    p.add_argument("--seeds", type=int, default=1, help="trials per k")
    p.add_argument("--workers", type=int, help="override DICTATORLAB_VERIFY_WORKERS")

    p = sub.add_parser(CMD_ENUMERATE, parents=[parent], help="list independent sets, one per line")
    _add_shape(p, required=True)
    p.add_argument("--size", type=int, help="set size (default r^(n-1))")
    p.add_argument("--cap", type=int, help="stop after this many sets")
    p.add_argument("--method", choices=list(ENUM_METHODS), default="auto")
    p.add_argument("--maximal", action="store_true", help="inclusion-maximal sets instead of a fixed size")

    p = sub.add_parser(CMD_CORPUS, parents=[parent], help="write a corpus of vertex sets as JSON Lines")
    _add_shape(p, required=True)
    p.add_argument("--source", choices=list(CORPUS_SOURCES), default=CORPUS_PERTURB)
    p.add_argument("--k", help="removed vertices per set: one value or a comma list")
    p.add_argument("--seeds", type=int, default=1)
    p.add_argument("--size", type=int, help="set size for --source enumerate")
    p.add_argument("--cap", type=int)

    p = sub.add_parser(CMD_BENNETT, parents=[parent], help="evaluate the Bennett tail bounds")
    p.add_argument("--sigma2", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--t", type=float, required=True)
    return parser


def registered_commands(parser: argparse.ArgumentParser) -> list[str]:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return list(action.choices)
    return []
