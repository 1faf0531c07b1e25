"""
netlex - Social Network Structure Toolkit

Basic statistics, node metrics, graph sampling and sampling-robustness
experiments for SNAP and Pajek network datasets. Provides both CLI and
programmatic interfaces.
"""

from loguru import logger

__version__ = "0.1.0"
__title__ = "netlex"
__description__ = "Structural statistics and sampling robustness for social networks"
__author__ = "Rob"
__license__ = "MIT"

# Silent as a library; the CLI enables logging explicitly.
logger.disable("netlex")

from netlex.models.exceptions import (  # noqa: E402
    ComputationError,
    ConfigurationError,
    ExportError,
    GraphParseError,
    InputOutputError,
    NetlexError,
    SamplingError,
    ValidationError,
)
from netlex.models.graph import Graph  # noqa: E402
from netlex.parsers import load_graph  # noqa: E402

__all__ = [
    "__version__",
    "__title__",
    "__description__",
    "__author__",
    "__license__",
    "Graph",
    "load_graph",
    "NetlexError",
    "ValidationError",
    "ConfigurationError",
    "GraphParseError",
    "InputOutputError",
    "ExportError",
    "ComputationError",
    "SamplingError",
]
