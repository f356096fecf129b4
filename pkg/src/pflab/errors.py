"""Exception hierarchy shared by every pflab module."""


class PflabError(Exception):
    """Base class for all library errors."""


class RingConstructionError(PflabError, ValueError):
    """Invalid parameters for a ring constructor (non-prime p, n = 0, ...)."""


class SizeCapExceeded(PflabError):
    """A ring or module would exceed the configured element cap."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class EnumerationOverflow(PflabError):
    """The ideal lattice has more members than the configured cap."""

    def __init__(self, label, cap):
        super().__init__(f"{label}: ideal lattice exceeds cap of {cap} ideals")
        self.cap = cap


class NotAnIdeal(PflabError, ValueError):
    """A subset fails ideal closure; carries the failing axiom and witness."""

    def __init__(self, reason, witness=()):
        super().__init__(f"not an ideal: {reason} (witness {tuple(witness)})")
        self.reason = reason
        self.witness = tuple(witness)


class AxiomViolation(PflabError, ValueError):
    """A table does not define a commutative ring with unity."""

    def __init__(self, axiom, witness=()):
        super().__init__(f"ring axiom '{axiom}' violated at {tuple(witness)}")
        self.axiom = axiom
        self.witness = tuple(witness)


class InvariantBreach(PflabError, AssertionError):
    """Two routes that must agree disagreed. Always an implementation bug."""


class DiscrepancyError(InvariantBreach):
    """Independent PF criteria returned different verdicts."""
