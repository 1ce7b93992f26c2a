"""Exception taxonomy shared by all layers.

Verdicts (a property that fails on valid input) are never exceptions;
exceptions mark malformed input or violated operation preconditions.
"""


class HopfloopError(Exception):
    """Base class; the CLI maps these to exit code 2."""


class FormatError(HopfloopError):
    """Malformed table / structure file."""


class NoIdentity(HopfloopError):
    """Table has no two-sided identity element."""


class IndexOutOfRange(HopfloopError):
    """Table entry outside 0..n-1."""


class NotALoop(HopfloopError):
    """Operation requires a Latin table with identity."""


class NotAGroup(HopfloopError):
    """Operation requires an associative loop table."""


class NotIPLoop(HopfloopError):
    """Operation requires a two-sided inverse property loop."""


class NotInvertible(HopfloopError):
    """Exact rank < dimension; doubles as the not-bijective verdict carrier."""


class DimensionMismatch(HopfloopError):
    """Incompatible shapes."""


class NotBijective(HopfloopError):
    """A required Galois map is singular."""


class NoAntipodeExtractable(HopfloopError):
    """Extraction route is blocked because the first Galois map is singular."""


class PreconditionViolated(HopfloopError):
    """A checker precondition failed; carries the name of the failed flag."""

    def __init__(self, flag: str, detail: str = ""):
        self.flag = flag
        super().__init__(f"precondition failed: {flag}" + (f" ({detail})" if detail else ""))


class BaseMismatch(HopfloopError):
    """Structures built over different base bialgebras."""


class MorphismInvalid(HopfloopError):
    """Supplied map is not linear over the action/coaction structures."""
