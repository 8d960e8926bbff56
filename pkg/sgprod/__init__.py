"""
Signed Graph Product Coloring Toolkit
"""

__version__ = "0.1.0"

from .base import BaseToolkit, Settings
from .sync import SignedGraphToolkit
from .async_client import AsyncSignedGraphToolkit
from .exceptions import (
    SgProdError,
    ConfigError,
    GraphError,
    ColoringError,
    ProductError,
    PreconditionError,
    GuardExceededError,
    InvariantViolation,
)
from .models import (
    SignedGraph,
    Decomposition,
    ColorSet,
    IncidenceColoring,
    VerificationReport,
    ProductGraph,
    TheoremOutcome,
    ClassRatioReport,
    ProbeReport,
    ReproductionReport,
)

__all__ = [
    "SignedGraphToolkit",
    "AsyncSignedGraphToolkit",
    "BaseToolkit",
    "Settings",
    "SgProdError",
    "ConfigError",
    "GraphError",
    "ColoringError",
    "ProductError",
    "PreconditionError",
    "GuardExceededError",
    "InvariantViolation",
    "SignedGraph",
    "Decomposition",
    "ColorSet",
    "IncidenceColoring",
    "VerificationReport",
    "ProductGraph",
    "TheoremOutcome",
    "ClassRatioReport",
    "ProbeReport",
    "ReproductionReport",
]
