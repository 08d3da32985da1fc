"""Process entrypoint."""
from __future__ import annotations

import logging
import sys
from typing import Sequence, TextIO

from app import config
from app.bootstrap import build_parser, configure_logging, log_startup_banner
from app.constants import EXIT_DOMAIN
from app.runtime import run
from app.settings import RunConfig
from core.errors import DictatorLabError

logger = logging.getLogger(__name__)


def main(
    argv: Sequence[str] | None = None,
    *,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    try:
        args = build_parser().parse_args(argv)
        configure_logging(getattr(args, "log_level", None))
        log_startup_banner()
        if logging.getLogger().isEnabledFor(logging.DEBUG):
            config.print_config_summary()
        run_config = RunConfig.from_args(args)
    except DictatorLabError as exc:
        print(f"error: {exc}", file=stderr if stderr is not None else sys.stderr)
        return EXIT_DOMAIN
    return run(run_config, stdout=stdout, stderr=stderr)
