import os
from typing import Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .exceptions import ConfigError, GuardExceededError

ENV_GUARD_EDGES = "SG_GUARD_EDGES"
ENV_JOBS = "SG_JOBS"
ENV_SEED = "SG_SEED"


class Settings(BaseModel):
    """Guards and execution knobs shared by every operation."""

    model_config = ConfigDict(frozen=True)

    oracle_edge_guard: int = Field(default=24, ge=1)
    full_cap: int = Field(default=20, ge=0)
    coset_guard: int = Field(default=17, ge=0)
    complete_guard: int = Field(default=5, ge=2)
    cliques_guard: int = Field(default=4, ge=2)
    chunk_size: int = Field(default=1024, ge=1)
    jobs: int = Field(default=0, ge=0)
    seed: int = 0

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None, **overrides) -> "Settings":
        """
        Build settings from defaults, environment variables and explicit overrides.

        Args:
            environ: Mapping to read instead of ``os.environ``
            **overrides: Field values that win over the environment

        Raises:
            ConfigError: If a variable is not an integer or is out of range
        """
        environ = os.environ if environ is None else environ
        values = {}
        for var, field in (
            (ENV_GUARD_EDGES, "oracle_edge_guard"),
            (ENV_JOBS, "jobs"),
            (ENV_SEED, "seed"),
        ):
            raw = environ.get(var)
            if raw is None or raw == "":
                continue
            try:
                values[field] = int(raw)
            except ValueError:
                raise ConfigError(f"{var} must be an integer, got {raw!r}")
        values.update({k: v for k, v in overrides.items() if v is not None})
        try:
            return cls(**values)
        except ValidationError as e:
            raise ConfigError(f"Invalid settings: {e.errors()[0]['msg']}")


DEFAULT_SETTINGS = Settings()


def check_guard(value: int, guard: int, what: str) -> None:
    """Raise GuardExceededError when ``value`` is above ``guard``."""
    if value > guard:
        raise GuardExceededError(f"{what} is {value}, above the guard of {guard}")


class BaseToolkit:
    """Base toolkit class with common functionality."""

    def __init__(self, settings: Optional[Settings] = None, **overrides):
        """
        Initialize the base toolkit.

        Args:
            settings: Explicit settings; read from the environment when omitted
            **overrides: Individual settings fields (e.g. ``jobs=4``)
        """
        if settings is None:
            settings = Settings.from_env(**overrides)
        elif overrides:
            settings = settings.model_copy(update=overrides)
        self.settings = settings

    def _guard(self, value: int, guard: int, what: str) -> None:
        check_guard(value, guard, what)
