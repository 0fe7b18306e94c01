"""Exception types shared across the toolkit.

Every deliberate failure mode has its own class so the CLI can surface the
name next to the offending input.  BoundViolationError is special: it marks a
proven theorem failing on concrete data, which can only mean a bug in this
package, never bad input.
"""

from __future__ import annotations


class ToolkitError(Exception):
    """Base class for all moakit errors."""


class NotPrimeError(ToolkitError):
    """Characteristic is not a prime number."""


class NotIrreducibleError(ToolkitError):
    """Supplied modulus polynomial is reducible (or not monic of the right degree)."""


class WrongLengthError(ToolkitError):
    """Vector or coefficient list has the wrong length for its field or partition."""


class AlphabetError(ToolkitError):
    """Symbol out of range for its column alphabet or base field."""


class BadIndexError(ToolkitError):
    """Column subset is not a set of valid column indices."""


class ZeroCodeError(ToolkitError):
    """Operation undefined for the zero code (k = 0)."""


class CapExceededError(ToolkitError):
    """Requested enumeration exceeds the configured work cap."""


class SearchCapExceededError(ToolkitError):
    """Self-dual basis search aborted: field order above the search cap."""


class StrengthError(ToolkitError):
    """Array does not have the strength the operation requires."""


class NotLinearError(ToolkitError):
    """Array is not linear over its base field, but the operation needs linearity."""


class PartitionMismatchError(ToolkitError):
    """Two objects disagree on block structure or base field."""


class SelfDualUnavailableError(ToolkitError):
    """Self-dual bases requested but the parity condition rules them out."""


class BoundViolationError(ToolkitError):
    """A proven bound failed on concrete data: internal bug, not bad input."""


class NotUniformError(ToolkitError):
    """A column projection is not uniform; carries a two-tuple witness.

    Attributes:
        columns: the offending column subset (0-based, ascending).
        witness: ((tuple_a, count_a), (tuple_b, count_b)) with count_a != count_b,
            the first such pair in lexicographic tuple order.
    """

    def __init__(self, columns, witness):
        self.columns = tuple(columns)
        self.witness = witness
        (ta, ca), (tb, cb) = witness
        cols = ",".join(str(c + 1) for c in self.columns)
        super().__init__(
            f"projection on columns {{{cols}}} not uniform: "
            f"tuple {ta} occurs {ca} times, tuple {tb} occurs {cb} times"
        )


class ParseError(ToolkitError):
    """Malformed input file; carries path and 1-based line number when known."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
            if line is not None:
                where += f"{line}:"
            where += " "
        super().__init__(f"{where}{message}")


class EmptyFileError(ParseError):
    """Input file contains no data lines."""
