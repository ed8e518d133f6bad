# Run configuration for the verification sweep: defaults < config file < CLI flags
import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path

import psutil
from dotenv import dotenv_values

from indset.errors import DomainError
from limits import MAX_EXHAUSTIVE_N

DEFAULT_LAMBDAS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5))
DEFAULT_WEIGHT_GRID = tuple(product((Fraction(1, 2), Fraction(1), Fraction(2)), repeat=2))
DEFAULT_TOLERANCE = 1e-9
FORMATS = ("json", "csv")
BACKENDS = ("local", "celery")


def default_output_dir() -> Path:
    return Path(os.environ.get("INDSET_OUTPUT_DIR", "reports"))


def default_workers() -> int:
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


@dataclass(frozen=True)
class RunConfig:
    max_exhaustive_n: int = 6
    include_named: bool = True
    include_regular: bool = True
    lambdas: tuple[Fraction, ...] = DEFAULT_LAMBDAS
    weight_grid: tuple[tuple[Fraction, Fraction], ...] = DEFAULT_WEIGHT_GRID
    tolerance: float = DEFAULT_TOLERANCE
    workers: int = field(default_factory=default_workers)
    backend: str = "local"
    output_dir: Path = field(default_factory=default_output_dir)
    formats: tuple[str, ...] = ("json",)
    input_files: tuple[Path, ...] = ()

    def __post_init__(self):
        if not self.tolerance > 0:
            raise DomainError(f"Tolerance must be positive, got {self.tolerance}")
        if not 0 <= self.max_exhaustive_n <= MAX_EXHAUSTIVE_N:
            raise DomainError(f"Exhaustive n must lie in 0..{MAX_EXHAUSTIVE_N}, got {self.max_exhaustive_n}")
        if self.workers < 1:
            raise DomainError(f"Parallelism width must be at least 1, got {self.workers}")
        if self.backend not in BACKENDS:
            raise DomainError(f"Unknown backend {self.backend!r}; choose one of {', '.join(BACKENDS)}")
        unknown = [f for f in self.formats if f not in FORMATS]
        if unknown or not self.formats:
            raise DomainError(f"Report formats must be a nonempty subset of {', '.join(FORMATS)}")
        for lam in self.lambdas:
            if lam <= 0:
                raise DomainError(f"Fugacity must be positive, got {lam}")
        for lam, mu in self.weight_grid:
            if lam <= 0 or mu <= 0:
                raise DomainError(f"Weights must be positive, got ({lam}, {mu})")

    def to_dict(self) -> dict:
        """Plain-data form shipped to workers and written into report headers."""
        return {
            "max_exhaustive_n": self.max_exhaustive_n,
            "include_named": self.include_named,
            "include_regular": self.include_regular,
            "lambdas": [str(lam) for lam in self.lambdas],
            "weight_grid": [[str(lam), str(mu)] for lam, mu in self.weight_grid],
            "tolerance": self.tolerance,
            "input_files": [str(p) for p in self.input_files],
        }


def parse_rational(text: str) -> Fraction:
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"Not a rational number: {text!r}") from None
    return value


def parse_rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_rational(part) for part in text.split(",") if part.strip())


def parse_weight_grid(text: str) -> tuple[tuple[Fraction, Fraction], ...]:
    pairs = []
    for part in text.split(","):
        if not part.strip():
            continue
        if ":" not in part:
            raise DomainError(f"Weight pair must be written lambda:mu, got {part!r}")
        lam, mu = part.split(":", 1)
        pairs.append((parse_rational(lam), parse_rational(mu)))
    return tuple(pairs)


def _parse_bool(key: str, text: str) -> bool:
    match text.strip().casefold():
        case "1" | "true" | "yes" | "on":
            return True
        case "0" | "false" | "no" | "off":
            return False
        case _:
            raise DomainError(f"{key} must be a boolean, got {text!r}")


def _parse_int(key: str, text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise DomainError(f"{key} must be an integer, got {text!r}") from None


def _parse_float(key: str, text: str) -> float:
    try:
        return float(text.strip())
    except ValueError:
        raise DomainError(f"{key} must be a number, got {text!r}") from None


def _split_names(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def load_run_config(path: str | Path | None = None, **overrides) -> RunConfig:
    """
    Build a RunConfig from an optional KEY=value file and keyword overrides.

    Keys: MAX_EXHAUSTIVE_N, INCLUDE_NAMED, INCLUDE_REGULAR, LAMBDAS,
    WEIGHT_GRID, TOLERANCE, WORKERS, BACKEND, OUTPUT_DIR, FORMATS,
    INPUT_FILES. Unknown keys are rejected.
    """
    values: dict = {}
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise DomainError(f"Config file not found: {path}")
        for key, text in dotenv_values(path).items():
            text = text or ""
            match key:
                case "MAX_EXHAUSTIVE_N":
                    values["max_exhaustive_n"] = _parse_int(key, text)
                case "INCLUDE_NAMED":
                    values["include_named"] = _parse_bool(key, text)
                case "INCLUDE_REGULAR":
                    values["include_regular"] = _parse_bool(key, text)
                case "LAMBDAS":
                    values["lambdas"] = parse_rational_list(text)
                case "WEIGHT_GRID":
                    values["weight_grid"] = parse_weight_grid(text)
                case "TOLERANCE":
                    values["tolerance"] = _parse_float(key, text)
                case "WORKERS":
                    values["workers"] = _parse_int(key, text)
                case "BACKEND":
                    values["backend"] = text.strip()
                case "OUTPUT_DIR":
                    values["output_dir"] = Path(text.strip())
                case "FORMATS":
                    values["formats"] = _split_names(text)
                case "INPUT_FILES":
                    values["input_files"] = tuple(Path(p) for p in _split_names(text))
                case _:
                    raise DomainError(f"Unknown config key {key!r} in {path}")
    values.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**values)
