"""Exception types raised by the library."""


class SolvcoverError(Exception):
    """Base class for all library errors."""


class EmptyGenerators(SolvcoverError):
    pass


class CapExceeded(SolvcoverError):
    def __init__(self, cap):
        super().__init__(f"group enumeration exceeded cap of {cap} elements")
        self.cap = cap


class NotASubgroup(SolvcoverError):
    pass


class NotNormal(SolvcoverError):
    pass


class InternalInconsistency(SolvcoverError):
    """An engine self-check failed; this signals a bug, not bad input."""


class NotAPrimePower(SolvcoverError):
    pass


class EvenFieldOrder(SolvcoverError):
    pass


class DeterminantNotSquare(SolvcoverError):
    pass


class ElementNotFound(SolvcoverError):
    pass


class BadParameter(SolvcoverError):
    pass


class InfeasibleUniverse(SolvcoverError):
    """Some universe target is covered by no candidate (finite cover impossible)."""


class NotTwoGenerated(SolvcoverError):
    pass


class GroupSolvable(SolvcoverError):
    """The covering number is undefined for solvable groups."""


class ElementNotInGroup(SolvcoverError):
    pass


class ElementInRadical(SolvcoverError):
    pass
