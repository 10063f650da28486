"""Run configuration for the qhopf command line.

Runs are described by a YAML file validated with Pydantic models; command
line flags override individual fields after loading.
"""

from fractions import Fraction
from typing import Any, List, Literal, Optional, Tuple

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator

COMMANDS = ("spectrum", "verify", "table", "ym-check", "haar", "conventions")

DEFAULT_Q_VALUES = ["1/2", "-1/2", "9/10", "999/1000"]


def parse_q_value(text: str) -> Fraction:
    """Reads an exact rational ("9/10") or a decimal ("0.9") as a Fraction."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as error:
        raise ValueError(f"invalid q sample {text!r}: {error}") from error


class TripleConfig(BaseModel):
    """A field triple for ``ym-check``.

    Attributes:
        n (int): winding of T₁.
        family (str): "alpha" (α^n, α*^n) or "gamma" (γ^n, γ*^n).
        displacement (Optional[str]): degree-0 element p, in canonical text,
            with λ(ς) = dp; null for the canonical connection.
        vprime (Optional[str]): V′ in canonical text; null for ½q⁴[n].
    """
    n: int = Field(ge=0)
    family: Literal["alpha", "gamma"] = "alpha"
    displacement: Optional[str] = None
    vprime: Optional[str] = None


class RunConfig(BaseModel):
    """Root configuration of a run.

    Attributes:
        command (str): one of ``COMMANDS``.
        n_range (Tuple[int, int]): inclusive range of windings.
        filtration (int): bound N on k + l.
        buffer (int): extra chain members assembled beyond N.
        sides (List[str]): Laplacians to compute.
        mode (str): "exact" or "numeric"; numeric adds evaluated columns.
        q_values (List[str]): numeric samples of q.
        output_format (str): "csv", "json" or "latex".
        output_path (Optional[str]): file to write; stdout when null.
        workers (int): threads used for block assembly.
        suite (str): verification suite, a registered group or "all".
        triples (List[TripleConfig]): triples checked by ``ym-check``.
        haar_max_power (int): largest k for the ``haar`` moment listing.
        eta_star (str): η-star convention of the sphere calculus.
    """
    command: Literal["spectrum", "verify", "table", "ym-check", "haar", "conventions"] = (
        "spectrum"
    )
    n_range: Tuple[int, int] = (-2, 2)
    filtration: int = Field(default=3, ge=0)
    buffer: int = Field(default=2, ge=0)
    sides: List[Literal["left", "right"]] = Field(default_factory=lambda: ["left", "right"])
    mode: Literal["exact", "numeric"] = "exact"
    q_values: List[str] = Field(default_factory=lambda: list(DEFAULT_Q_VALUES))
    output_format: Literal["csv", "json", "latex"] = "csv"
    output_path: Optional[str] = None
    workers: int = Field(default=1, ge=1)
    suite: str = "all"
    triples: List[TripleConfig] = Field(
        default_factory=lambda: [TripleConfig(n=n) for n in range(1, 4)]
    )
    haar_max_power: int = Field(default=4, ge=0)
    eta_star: Literal["plain", "twisted"] = "plain"

    @field_validator("n_range", mode="before")
    @classmethod
    def parse_range(cls, v: Any) -> Tuple[int, int]:
        if isinstance(v, str):
            low, sep, high = v.partition("..")
            if not sep:
                return int(v), int(v)
            return int(low), int(high)
        return v

    @field_validator("n_range")
    @classmethod
    def check_range(cls, v: Tuple[int, int]) -> Tuple[int, int]:
        if v[0] > v[1]:
            raise ValueError(f"empty winding range {v[0]}..{v[1]}")
        return v

    @field_validator("q_values", mode="before")
    @classmethod
    def stringify_q_values(cls, v: Any) -> List[str]:
        return [str(value) for value in v]

    @field_validator("q_values")
    @classmethod
    def check_q_values(cls, v: List[str]) -> List[str]:
        for text in v:
            if parse_q_value(text) in (0, 1, -1):
                raise ValueError(f"q = {text} is a pole of the q-numbers' inverses")
        return v

    @model_validator(mode="after")
    def check_numeric_mode(self) -> "RunConfig":
        if self.mode == "numeric" and not self.q_values:
            raise ValueError("numeric mode needs at least one q sample")
        return self

    def windings(self) -> List[int]:
        return list(range(self.n_range[0], self.n_range[1] + 1))

    def q_samples(self) -> List[Fraction]:
        return [parse_q_value(text) for text in self.q_values]


def load_yaml_config(file_path: str) -> RunConfig:
    """Load and validate a run configuration from a YAML file.

    Args:
        file_path (str): Path to the YAML configuration file.

    Returns:
        RunConfig: Validated run configuration.

    Raises:
        FileNotFoundError: If the configuration file does not exist.
        yaml.YAMLError: If the YAML file is malformed.
        pydantic.ValidationError: If the configuration does not match the
            expected schema.
    """
    with open(file_path, "r") as f:
        raw_config = yaml.safe_load(f) or {}
    return RunConfig.model_validate(raw_config)
