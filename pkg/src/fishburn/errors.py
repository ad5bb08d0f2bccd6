"""Exception types and the enumeration cap shared by every enumerator."""

from __future__ import annotations

import os

DEFAULT_CAP = 2_027_025  # (2*8 - 1)!!, all matchings on [16]
CAP_ENV_VAR = "FISHBURN_CAP"


class FishburnError(Exception):
    """Base class for all errors raised by this package."""


class CapExceededError(FishburnError):
    """An enumeration would produce more objects than the configured cap."""


class PreconditionError(FishburnError, ValueError):
    """An operation was called on input outside its domain."""


class ParseError(FishburnError, ValueError):
    """Text could not be parsed into the requested structure."""


class InvariantError(FishburnError, AssertionError):
    """A constructed object broke its own invariants. Always a bug."""


def get_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    raw = os.environ.get(CAP_ENV_VAR)
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ParseError(f"{CAP_ENV_VAR}={raw!r} is not an integer") from None
    return DEFAULT_CAP


def check_cap(size: int, what: str, cap: int | None = None) -> None:
    """Raise :class:`CapExceededError` if ``size`` objects exceed the cap."""
    limit = get_cap(cap)
    if size > limit:
        raise CapExceededError(
            f"enumerating {what} would yield {size} objects, above the cap of {limit}"
            " (raise it with --cap or the FISHBURN_CAP environment variable)"
        )
