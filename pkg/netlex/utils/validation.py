"""
Input Validation

Checks applied to CLI arguments before any graph is loaded.
"""

import re
from pathlib import Path
from typing import Iterable, List

from netlex.models.exceptions import ValidationError
from netlex.models.sampling import SEED_MAX, SEED_MIN

_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]*$")


def validate_dataset_name(name: str) -> None:
    """
    Validate a dataset name used in output file names.

    Raises:
        ValidationError: If the name is empty, too long or has unsafe characters
    """
    if not name or not _NAME_RE.match(name):
        raise ValidationError(
            f"invalid dataset name: {name!r}",
            [
                "Start with a letter or digit",
                "Only alphanumeric characters, dots, dashes, underscores allowed",
            ],
        )
    if len(name) > 100:
        raise ValidationError("dataset name too long (max 100 characters)")


def sanitize_filename(text: str) -> str:
    """Replace characters that are unsafe in file names."""
    cleaned = re.sub(r"[^A-Za-z0-9._-]", "_", text).strip("._")
    return cleaned or "graph"


def validate_seed(seed: int) -> None:
    if not SEED_MIN <= seed <= SEED_MAX:
        raise ValidationError(
            f"seed {seed} out of range",
            [f"Use an integer in [{SEED_MIN}, {SEED_MAX}]"],
        )


def validate_sampling_request(size: int, count: int, seed: int) -> None:
    """
    Validate sample size, sample count and the base seed of a repeated run.

    The last sample uses ``seed + count - 1``, which must stay in range too.
    """
    if size < 1:
        raise ValidationError(f"sample size must be >= 1, got {size}")
    if count < 1:
        raise ValidationError(f"sample count must be >= 1, got {count}")
    validate_seed(seed)
    validate_seed(seed + count - 1)


def validate_input_files(paths: Iterable[Path]) -> List[Path]:
    """Reject an empty dataset list and duplicate paths."""
    resolved = [Path(p) for p in paths]
    if not resolved:
        raise ValidationError(
            "at least one input dataset is required",
            ["Pass one or more --input options"],
        )
    seen = set()
    for path in resolved:
        key = path.resolve()
        if key in seen:
            raise ValidationError(f"input given twice: {path}")
        seen.add(key)
    return resolved
