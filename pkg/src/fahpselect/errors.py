"""Exception hierarchy shared by the whole package.

Every error raised on purpose derives from :class:`FahpError`, so callers
(and the HTTP layer) can distinguish domain failures from genuine bugs.
"""


class FahpError(Exception):
    """Base class for all domain errors."""


# --- fuzzy arithmetic / scale ---------------------------------------------

class NonPositiveComponent(FahpError):
    """A fuzzy number needed strictly positive components and did not have them."""


class UnknownGrade(FahpError):
    """A linguistic label that is not one of the nine scale grades."""


# --- pairwise judgment matrices -------------------------------------------

class MissingPair(FahpError):
    """An upper-triangle comparison is absent from a submission."""


class DuplicatePair(FahpError):
    """The same element pair was compared more than once."""


class UnknownElement(FahpError):
    """A submission references an element outside its comparison context."""


class DimensionMismatch(FahpError):
    """Matrices that should share a dimension do not."""


class LabelMismatch(FahpError):
    """Vectors or matrices that should cover identical elements do not."""


# --- weights and consistency ----------------------------------------------

class DegenerateWeights(FahpError):
    """A weight vector with a zero sum or vanishing components."""


class UnsupportedDimension(FahpError):
    """Matrix dimension outside the range the random index table covers."""


class InvalidThreshold(FahpError):
    """Consistency threshold outside the permitted [0, 0.1] band."""


# --- hierarchy and synthesis ----------------------------------------------

class InvalidHierarchy(FahpError):
    """A decision hierarchy violating the structural invariants."""


class IncompleteCoverage(FahpError):
    """A sub-criterion is missing its alternative weight vector."""


# --- financial stage --------------------------------------------------------

class UnknownContractor(FahpError):
    """A bid or dossier from a contractor the project does not know."""


class BidFromScreenedOut(FahpError):
    """A bid submitted by a contractor the technical stage screened out."""


class MissingBidSecurity(FahpError):
    """Bid security is mandatory for this estimate but a document is absent."""


class MissingBids(FahpError):
    """Not every qualified contractor has submitted a bid yet."""


# --- workflow service --------------------------------------------------------

class WrongState(FahpError):
    """Operation attempted outside its declared workflow state."""


class UnknownDecisionMaker(FahpError):
    """An actor that is not one of the project's registered decision makers."""


class NoQualifiedBidders(FahpError):
    """Prescreening left too few bidders to rank."""


class IncompleteJudgments(FahpError):
    """Technical evaluation requested before every matrix was accepted."""

    def __init__(self, missing):
        self.missing = list(missing)
        pairs = ", ".join(f"{dm}/{ctx}" for dm, ctx in self.missing)
        super().__init__(f"missing accepted judgments: {pairs}")
