"""Run configuration built from parsed command-line arguments."""
from __future__ import annotations

import argparse
import math
from dataclasses import dataclass

from app.constants import (
    CMD_BENNETT,
    CMD_CORPUS,
    CMD_ENUMERATE,
    CMD_RECOVER,
    CMD_SPECTRUM,
    CMD_VERIFY,
    COMMANDS,
    CORPUS_PERTURB,
    CORPUS_SOURCES,
    ENUM_METHODS,
    K_FRACTION,
)
from core.errors import ValidationError
from core.zrn import GridShape


def parse_k_list(raw: str | None) -> tuple[int, ...] | None:
    """'3' or '0,2,5' -> sorted unique ints; None stays None."""
    if raw is None:
        return None
    try:
        values = sorted({int(part) for part in raw.split(",") if part.strip()})
    except ValueError as exc:
        raise ValidationError(f"--k expects an integer or a comma list, got {raw!r}") from exc
    if not values:
        raise ValidationError("--k is empty")
    return tuple(values)


def default_k_values(shape: GridShape) -> tuple[int, ...]:
    top = math.ceil(K_FRACTION * shape.r ** (shape.n - 1))
    return tuple(range(top + 1))


@dataclass(frozen=True)
class RunConfig:
    command: str
    seed: int = 0
    out_path: str | None = None
    r: int | None = None
    n: int | None = None
    set_path: str | None = None
    function_path: str | None = None
    corpus: str = CORPUS_PERTURB
    k_values: tuple[int, ...] | None = None
    seeds: int = 1
    size: int | None = None
    cap: int | None = None
    maximal: bool = False
    method: str = "auto"
    sigma2: float | None = None
    c: float | None = None
    t: float | None = None
    workers: int | None = None

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        if self.seed < 0:
            raise ValidationError(f"--seed must be non-negative, got {self.seed}")
        if self.seeds < 1:
            raise ValidationError(f"--seeds must be >= 1, got {self.seeds}")
        if self.corpus not in CORPUS_SOURCES:
            raise ValidationError(f"unknown corpus source {self.corpus!r}")
        if self.method not in ENUM_METHODS:
            raise ValidationError(f"unknown enumeration method {self.method!r}")
        if self.cap is not None and self.cap < 1:
            raise ValidationError(f"--cap must be >= 1, got {self.cap}")
        if self.workers is not None and self.workers < 1:
            raise ValidationError(f"--workers must be >= 1, got {self.workers}")

        if self.command == CMD_SPECTRUM and not self.function_path:
            raise ValidationError("spectrum needs --function")
        if self.command == CMD_RECOVER and not self.set_path:
            raise ValidationError("recover needs --set")
        if self.command == CMD_BENNETT and None in (self.sigma2, self.c, self.t):
            raise ValidationError("bennett needs --sigma2, --c and --t")
        needs_shape = self.command in (CMD_ENUMERATE, CMD_CORPUS) or (
            self.command == CMD_VERIFY and not self.set_path
        )
        if needs_shape:
            if self.r is None or self.n is None:
                raise ValidationError(f"{self.command} needs --r and --n")
            GridShape(self.r, self.n)

    @property
    def shape(self) -> GridShape:
        if self.r is None or self.n is None:
            raise ValidationError("no grid shape given")
        return GridShape(self.r, self.n)

    def resolved_k_values(self) -> tuple[int, ...]:
        return self.k_values if self.k_values is not None else default_k_values(self.shape)

    def trial_seeds(self) -> list[int]:
        return [self.seed + s for s in range(self.seeds)]

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        get = lambda name, default=None: getattr(args, name, default)  # noqa: E731
        return cls(
            command=args.command,
            seed=get("seed", 0),
            out_path=get("out"),
            r=get("r"),
            n=get("n"),
            set_path=get("set"),
            function_path=get("function"),
            corpus=get("corpus") or get("source") or CORPUS_PERTURB,
            k_values=parse_k_list(get("k")),
            seeds=get("seeds", 1),
            size=get("size"),
            cap=get("cap"),
            maximal=bool(get("maximal", False)),
            method=get("method") or "auto",
            sigma2=get("sigma2"),
            c=get("c"),
            t=get("t"),
            workers=get("workers"),
        )
