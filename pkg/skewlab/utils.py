"""Utility functions for skewlab."""

import hashlib
from datetime import UTC, datetime
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from collections.abc import Iterable


def utc_now_iso() -> str:
    """
    Return the current time as a UTC ISO 8601 string.

    Returns:
        ISO format string with UTC timezone

    """
    return datetime.now(UTC).isoformat()


def format_float(value: float | None) -> str:
    """
    Format a float for CSV output.

    Floats are written with 17 significant digits so they round-trip exactly,
    independent of locale.  ``None`` becomes an empty field.

    Args:
        value: The value to format, or None

    Returns:
        The formatted string

    """
    if value is None:
        return ""
    return format(float(value), ".17g")


def digest_inputs(*parts: np.ndarray | float | str | None) -> str:
    """
    Build a deterministic fingerprint of the inputs of a check.

    Arrays contribute their dtype, shape and raw bytes; scalars contribute
    their ``repr``.

    Args:
        *parts: Arrays and scalars to fingerprint

    Returns:
        The first 16 hex digits of the SHA-256 digest

    """
    sha = hashlib.sha256()
    for part in parts:
        if isinstance(part, np.ndarray):
            array = np.ascontiguousarray(part)
            sha.update(str(array.dtype).encode())
            sha.update(repr(array.shape).encode())
            sha.update(array.tobytes())
        else:
            sha.update(repr(part).encode())
        sha.update(b"|")
    return sha.hexdigest()[:16]


def parse_int_list(text: str) -> list[int]:
    """
    Parse a comma separated list of integers such as ``"2,3,4"``.

    Args:
        text: The text to parse

    Raises:
        ValueError: an item is not an integer, or the list is empty

    Returns:
        The parsed integers, in order

    """
    items: Iterable[str] = (item.strip() for item in text.split(","))
    values = [int(item) for item in items if item]
    if not values:
        msg = f"Empty integer list: {text!r}"
        raise ValueError(msg)
    return values
