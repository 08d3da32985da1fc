from __future__ import annotations

import compileall
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
SKIP_DIRS = re.compile(r"[\\/](examples|\.venv|data)[\\/]")
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from app.bootstrap import build_parser, registered_commands
from app.runtime import HANDLERS


def assemble_application() -> int:
    commands = registered_commands(build_parser())
    missing = [name for name in commands if name not in HANDLERS]
    if missing:
        raise RuntimeError(f"commands without a handler: {missing}")
    return len(commands)


def main() -> None:
    print("compileall", compileall.compile_dir(str(ROOT), quiet=1, rx=SKIP_DIRS))
    print("commands registered", assemble_application())


if __name__ == "__main__":
    main()
