"""Exception hierarchy.

Every error carries a short machine-readable ``kind`` which the CLI prints as
``error:<kind>: <message>``.
"""


class DgogError(Exception):
    kind = "error"

    def __init__(self, message: str = "", kind: str | None = None):
        super().__init__(message)
        if kind is not None:
            self.kind = kind


class ParseError(DgogError):
    kind = "parse"


class ValidationError(DgogError):
    """A graph document violates a structural invariant.

    ``kind`` names the invariant: ``disconnected``, ``not-row-finite``,
    ``has-source``, ``non-injective``, ``bad-reference`` or ``bad-id``.
    """

    kind = "validation"


class NotComposable(DgogError):
    kind = "not-composable"


class NotDirected(DgogError):
    kind = "not-directed"


class SourceMismatch(DgogError):
    kind = "source-mismatch"


class NotInDomain(DgogError):
    kind = "not-in-domain"


class DomainViolation(DgogError):
    kind = "domain-violation"


class InfiniteIndex(DgogError):
    kind = "infinite-index"


class InfiniteDegree(DgogError):
    kind = "infinite-degree"


class BallTooShallow(DgogError):
    kind = "ball-too-shallow"


class NonCyclicInfinite(DgogError):
    kind = "non-cyclic-infinite"


class SingularMatrix(DgogError):
    kind = "singular-matrix"


class ZeroPatternMismatch(DgogError):
    kind = "zero-pattern-mismatch"
