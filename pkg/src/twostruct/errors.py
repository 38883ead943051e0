"""Exception hierarchy for the twostruct package.

Every error raised by the library derives from TwoStructError. Recognition
rejections and theorem-checker verdicts are values, not exceptions; only
precondition violations and resource caps raise.
"""


class TwoStructError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(TwoStructError):
    """Label table does not have the declared dimensions."""


class LabelOutOfRange(TwoStructError):
    """A label id falls outside [0, k)."""


class DiagonalLabeled(TwoStructError):
    """A diagonal cell carries a label instead of the sentinel."""


class InvalidEdge(TwoStructError):
    """An edge or arc references a vertex outside the declared range."""


class NotATournament(TwoStructError):
    """Arc list is not a tournament (missing, duplicated or looped arc)."""


class SameVertex(TwoStructError):
    """An ordered-pair query was made with both endpoints equal."""


class SizeLimitExceeded(TwoStructError):
    """Input is larger than the configured cap for this operation."""


class NotPrime(TwoStructError):
    """Operation requires a prime structure."""


class BaseNotPrime(TwoStructError):
    """Outside-machinery operation requires the chosen base to be prime."""


class EmptyOutside(TwoStructError):
    """The chosen base set must be a proper subset of the vertex set."""


class EvenK(TwoStructError):
    """Odd-size statements are only defined for odd subset sizes."""


class UnknownBlock(TwoStructError):
    """Requested block does not exist in the outside partition."""


class InconsistentSC(TwoStructError):
    """Component edges do not carry a single label pair."""


class HypothesesFailed(TwoStructError):
    """Operation requires theorem hypotheses that do not hold here."""


class NoPartner(TwoStructError):
    """No partner vertex exists; signals a falsified claim on valid input."""


class NoPair(TwoStructError):
    """No removable pair exists; signals a falsified claim on valid input."""


class SpecInvalid(TwoStructError):
    """Synthesis spec violates a structural invariant."""


class PostVerificationFailed(TwoStructError):
    """Synthesized structure failed its post-construction verification."""


class InconsistentBundle(TwoStructError):
    """Description bundle violates a structural constraint."""


class UnresolvedCase(TwoStructError):
    """Reconstruction found a label pair no rule determines."""


class GiveUp(TwoStructError):
    """Rejection sampling exceeded its retry budget."""


class FormatError(TwoStructError):
    """Text file does not conform to the declared format."""
