"""Exception hierarchy shared by all modules."""


class SymIsoError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraph(SymIsoError):
    """Loop, duplicate edge or undeclared endpoint."""


class InvalidAction(SymIsoError):
    """The vertex map is not a valid group action."""


class NotAutomorphism(InvalidAction):
    pass


class WrongOrder(InvalidAction):
    pass


class LemmaViolation(SymIsoError):
    """A structural fact that holds for admissible pairs failed to hold."""


class PreconditionViolated(SymIsoError):
    pass


class NotReducible(SymIsoError):
    pass


class NotAdmissible(SymIsoError):
    pass


class DegenerateBall(SymIsoError):
    pass


class NotWellPositioned(SymIsoError):
    """Raised by operations that need a well-positioned placement.

    ``edge`` names the first offending edge when one is known.
    """

    def __init__(self, message, edge=None):
        super().__init__(message)
        self.edge = edge


class UnsupportedTau(SymIsoError):
    pass


class NoSwappingIsometry(SymIsoError):
    """The norm has no isometry of the class a group case needs."""


class PlacementSearchFailed(SymIsoError):
    pass


class BudgetExceeded(SymIsoError):
    pass
