"""Exception types shared across the package.

Every failure mode that callers are expected to branch on gets its own
class; anything else surfaces as a plain ValueError/TypeError from the
offending operation.
"""


class ChowKunnethError(Exception):
    """Base class for all package-specific errors."""


class RingMismatch(ChowKunnethError):
    """Operands live over different rings (or incompatible source/target)."""


class DegeneratePairing(ChowKunnethError):
    """A Poincare pairing block that must be invertible is singular."""


class NonLefschetzRange(ChowKunnethError):
    """The ambient pairing of a complete-intersection model degenerates
    below the middle degree, so the truncation hypotheses fail."""


class OddRankObstruction(ChowKunnethError):
    """An odd cohomological degree inside the requested algebraic range
    has nonzero rank, so the all-algebraic projector recipe does not apply."""


class NotIdempotent(ChowKunnethError):
    """A correspondence required to be a projector fails p∘p = p."""


class IncompleteInput(ChowKunnethError):
    """A construction needs data (basis, ranks, expressions) that was
    not supplied."""


class PreconditionViolated(ChowKunnethError):
    """An operation's documented precondition fails on the given input."""


class NotRingMap(ChowKunnethError):
    """A claimed ring homomorphism is not multiplicative, not unital,
    not degree-preserving, or not surjective where required."""


class UnsupportedAction(ChowKunnethError):
    """An equivariant operation was requested for a group action the
    model machinery does not cover."""


class InvalidSpec(ChowKunnethError):
    """A serialized space/group/correspondence description is malformed."""


class RingAxiomError(ChowKunnethError):
    """Constructed structure constants violate a graded ring axiom.

    Carries the name of the failed check in ``check``.
    """

    def __init__(self, check, message):
        super().__init__(message)
        self.check = check
