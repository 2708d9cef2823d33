"""Exception types shared across the package.

The CLI maps these onto process exit statuses (usage 2, size 3).
"""

DEFAULT_GUARD = 10**7


class FStirlingError(Exception):
    pass


class UsageError(FStirlingError, ValueError):
    """Bad arguments: mismatched variables or arities, malformed specs."""


class ModeError(UsageError):
    """Operation needs integer shifts (q-analogues, enumerations)."""


class GuardError(FStirlingError):
    """An enumeration would exceed the configured size guard."""


class InvariantError(FStirlingError, AssertionError):
    """Internal cross-check failed; indicates a bug, not bad input."""


def check_guard(projected, guard=DEFAULT_GUARD, what="enumeration"):
    if guard is not None and projected > guard:
        raise GuardError(f"{what} would visit {projected} objects, guard is {guard}")
