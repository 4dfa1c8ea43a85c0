"""
Configuration models

Root ``Config`` is composed of one section model per subsystem and can be
loaded from YAML with ``Config.from_yaml``. Unknown keys are ignored;
invalid values raise a pydantic ``ValidationError``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Literal, Optional, Union

import yaml
from pydantic import BaseModel, Field

from darkstates.core.types import MAX_DIMENSION, SectorPrefilter, SymmetryGroup


class NumericsConfig(BaseModel):
    """Linear-algebra tolerances and size limits"""

    tol: float = Field(default=1e-9, gt=0, description="Relative singular-value threshold")
    size_cap: int = Field(default=MAX_DIMENSION, ge=2, le=MAX_DIMENSION)
    dense_apply_limit: int = Field(
        default=4096, ge=1, description="Largest d^N at which collective operators are materialized"
    )
    sector_prefilter: SectorPrefilter = SectorPrefilter.LABEL_SUM


class VerificationConfig(BaseModel):
    """Randomized invariance tests"""

    trials: int = Field(default=50, ge=1)
    tol: float = Field(default=1e-9, gt=0)
    strict_phase: bool = False
    max_workers: int = Field(default=1, ge=1)


class DfsConfig(BaseModel):
    """Decoherence-free qubit simulation"""

    samples: int = Field(default=10_000, ge=1)
    group: SymmetryGroup = SymmetryGroup.SUD


class LoggingConfig(BaseModel):
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"
    format: Literal["structured", "plain"] = "structured"
    output: Literal["console", "file"] = "console"
    file_path: str = "~/.darkstates/logs/darkstates.log"


class Config(BaseModel):
    """Root configuration"""

    numerics: NumericsConfig = Field(default_factory=NumericsConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    dfs: DfsConfig = Field(default_factory=DfsConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)
    seed: Optional[int] = Field(default=None, ge=0)

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "Config":
        """Load and validate a YAML configuration file"""
        path = Path(path).expanduser()
        with path.open("r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
        return cls.model_validate(data)
