"""Exception hierarchy.

Every error carries a stable machine-readable ``category`` string; the CLI
prints it on stderr and exits 1, so scripts can dispatch on it.
"""


class FreeconvError(Exception):
    category = "error"


class RingMismatchError(FreeconvError):
    """Operands come from different coefficient rings."""

    category = "ring-mismatch"


class NotInvertibleError(FreeconvError):
    """Inverse requested for a non-unit (or zero)."""

    category = "not-invertible"


class DomainError(FreeconvError):
    """Argument outside the operation's domain (bad n, bad letter, ...)."""

    category = "domain-error"


class ShapeMismatchError(FreeconvError):
    """Series/tables with incompatible (s, order) shapes."""

    category = "shape-mismatch"


class OrderError(FreeconvError):
    """Coefficient requested beyond the truncation order, or the source
    table is too short for the requested computation."""

    category = "order-insufficient"


class GroupMembershipError(FreeconvError):
    """Series not in the required group (non-unit degree-1 coefficient,
    non-unit mean, mean != 1, ...)."""

    category = "not-in-group"


class NameClashError(FreeconvError):
    """Generator name collision when joining distributions."""

    category = "name-clash"


class QAlgebraError(FreeconvError):
    """Operation needs every positive integer invertible (a Q-algebra)."""

    category = "not-q-algebra"


class ParseError(FreeconvError):
    """Malformed input file or literal."""

    category = "parse-error"


class FlagConflictError(FreeconvError):
    """CLI flag contradicts metadata carried by an input file."""

    category = "flag-conflict"
