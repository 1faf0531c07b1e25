"""
Exception hierarchy for netlex operations.

Every error carries a message, actionable suggestions and the process exit code
the CLI uses when the error escapes a command.
"""

from pathlib import Path
from typing import List, Optional, Union

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_IO = 4
EXIT_COMPUTATION = 5


def _rebuild_error(cls: type, message: str, state: dict) -> "NetlexError":
    error = cls.__new__(cls)
    Exception.__init__(error, message)
    error.__dict__.update(state)
    return error


class NetlexError(Exception):
    """
    Base exception for all netlex errors.

    Every error comes with helpful suggestions to guide users toward resolution.
    """

    exit_code: int = EXIT_UNEXPECTED

    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        super().__init__(message)
        self.message = message
        self.suggestions = suggestions or []

    def __str__(self) -> str:
        error_msg = self.message
        if self.suggestions:
            suggestions_text = "\n".join(f"  • {suggestion}" for suggestion in self.suggestions)
            error_msg += f"\n\nSuggestions:\n{suggestions_text}"
        return error_msg

    def __reduce__(self):  # type: ignore[override]
        # Subclass constructors take structured arguments, not the rendered message.
        return (_rebuild_error, (self.__class__, self.message, dict(self.__dict__)))


# ============================================================================
# Usage errors (exit 2)
# ============================================================================


class ValidationError(NetlexError):
    """Input validation failed"""

    exit_code = EXIT_USAGE

    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        default_suggestions = [
            "Check the command format: nlex --help",
            "Verify your input follows the expected pattern",
        ]
        super().__init__(f"Validation failed: {message}", suggestions or default_suggestions)


class UnsupportedFormatError(ValidationError):
    """Graph file format tag is not one we can parse"""

    def __init__(self, format_tag: str):
        super().__init__(
            f"unsupported graph format '{format_tag}'",
            ["Use --format snap or --format pajek"],
        )
        self.format_tag = format_tag


class ConfigurationError(NetlexError):
    """Configuration failed"""

    exit_code = EXIT_USAGE

    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        default_suggestions = [
            "Check configuration file syntax (JSON object)",
            "Remove unknown keys; see NetlexConfig for valid settings",
        ]
        super().__init__(f"Configuration error: {message}", suggestions or default_suggestions)


# ============================================================================
# Parse errors (exit 3)
# ============================================================================


class GraphParseError(NetlexError):
    """A graph file could not be parsed"""

    exit_code = EXIT_PARSE

    def __init__(
        self,
        message: str,
        path: Optional[Union[str, Path]] = None,
        line_number: Optional[int] = None,
        suggestions: Optional[List[str]] = None,
    ):
        self.path = str(path) if path is not None else None
        self.line_number = line_number
        location = self.path or "<stream>"
        if line_number is not None:
            location += f":{line_number}"
        default_suggestions = [
            "Check the file is a SNAP edge list or a Pajek .net file",
            "Pass --format explicitly if the extension is misleading",
        ]
        super().__init__(f"Parse error at {location}: {message}", suggestions or default_suggestions)


# ============================================================================
# I/O errors (exit 4)
# ============================================================================


class InputOutputError(NetlexError):
    """Reading inputs or writing outputs failed"""

    exit_code = EXIT_IO

    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        default_suggestions = [
            "Check that the file exists and is readable",
            "Verify write permissions to the output directory",
            "Check available disk space",
        ]
        super().__init__(f"I/O failed: {message}", suggestions or default_suggestions)


class ExportError(InputOutputError):
    """Writing a result artifact failed"""

    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        super().__init__(f"export: {message}", suggestions)


# ============================================================================
# Computation errors (exit 5)
# ============================================================================


class ComputationError(NetlexError):
    """A statistic, metric or experiment could not be computed"""

    exit_code = EXIT_COMPUTATION

    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        super().__init__(message, suggestions)
        self.sample_index: Optional[int] = None
        self.dataset: Optional[str] = None

    def with_context(
        self, sample_index: Optional[int] = None, dataset: Optional[str] = None
    ) -> "ComputationError":
        """Attach sample/dataset context and prefix the message with it."""
        prefix = []
        if dataset is not None:
            self.dataset = dataset
            prefix.append(f"dataset '{dataset}'")
        if sample_index is not None:
            self.sample_index = sample_index
            prefix.append(f"sample {sample_index}")
        if prefix:
            self.message = f"{', '.join(prefix)}: {self.message}"
            self.args = (self.message,)
        return self


class EmptyGraphError(ComputationError):
    """Operation needs at least one node"""

    def __init__(self, operation: str = "operation"):
        super().__init__(f"empty graph: {operation} needs at least one node")


class TooFewNodesError(ComputationError):
    """Operation needs more nodes than the graph has"""

    def __init__(self, operation: str, required: int, actual: int):
        super().__init__(f"{operation} needs at least {required} nodes, graph has {actual}")


class NoReachablePairsError(ComputationError):
    """No pair of distinct nodes is connected"""

    def __init__(self) -> None:
        super().__init__(
            "no reachable pairs: every node is isolated",
            ["Extract the largest connected component with --lcc"],
        )


class NoTriplesError(ComputationError):
    """Transitivity is undefined without connected triples"""

    def __init__(self) -> None:
        super().__init__(
            "no triples: transitivity is undefined when no node has degree >= 2",
            ["Use --ccg-mode mean-local"],
        )


class InsufficientSupportError(ComputationError):
    """Power-law fit needs at least two distinct degrees"""

    def __init__(self, points: int):
        super().__init__(
            f"insufficient support: power-law fit needs >= 2 distinct degrees >= 1, got {points}"
        )


class DegenerateDistributionError(ComputationError):
    """Correlation against a zero-variance vector is undefined"""

    def __init__(self, which: str = "distribution"):
        super().__init__(f"degenerate distribution: {which} has zero variance")


class NodeNotFoundError(ComputationError):
    """A node index is outside the graph"""

    def __init__(self, node: int, node_count: int):
        super().__init__(f"node {node} out of range [0, {node_count})")


class EdgeNotFoundError(ComputationError):
    """An edge is not present in the graph"""

    def __init__(self, u: int, v: int):
        super().__init__(f"{{{u}, {v}}} is not an edge of the graph")


class SamplingError(ComputationError):
    """A sampler could not produce a sample"""

    def __init__(self, message: str, suggestions: Optional[List[str]] = None):
        super().__init__(f"Sampling failed: {message}", suggestions)


class SampleExhaustedError(SamplingError):
    """The source ran out of nodes or edges before the target size was reached"""

    def __init__(self, message: str, component_size: Optional[int] = None):
        self.component_size = component_size
        super().__init__(
            message,
            [
                "Use --on-exhaustion reseed to continue from a fresh seed node",
                "Lower --size or sample from a larger dataset",
            ],
        )


class ReproducibilityError(ComputationError):
    """A replayed run did not reproduce its recorded outputs or inputs"""

    def __init__(self, message: str, mismatched: Optional[List[str]] = None):
        self.mismatched = mismatched or []
        super().__init__(
            f"replay mismatch: {message}",
            ["Check that the input files are the ones recorded in the manifest"],
        )
