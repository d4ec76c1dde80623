"""Exception types raised across the package.

The CLI reports these by class name, so names are part of the public surface.
"""


class NicholsCCError(Exception):
    """Base class for all computation errors."""


class SingularMatrix(NicholsCCError):
    pass


class NotAdmissible(NicholsCCError):
    def __init__(self, i, j):
        super().__init__(f"no generalized Cartan entry for pair ({i}, {j})")
        self.i, self.j = i, j


class OrbitBound(NicholsCCError):
    pass


class DegenerateMomenta(NicholsCCError):
    pass


class InvarianceFailure(NicholsCCError):
    def __init__(self, k, before, after):
        super().__init__(f"central charge changed under reflection {k}: {before} -> {after}")
        self.k, self.before, self.after = k, before, after


class PoleAtCriticalLevel(NicholsCCError):
    pass


class UnknownItem(NicholsCCError):
    pass


class NoChargeRecorded(NicholsCCError):
    pass


class NoPresentation(NicholsCCError):
    pass


class OutOfDomain(NicholsCCError):
    pass


class DegreeCapExceeded(NicholsCCError):
    pass


class NonIntegerExponent(NicholsCCError):
    def __init__(self, exponent):
        super().__init__(f"non-integer mutual exponent {exponent}")
        self.exponent = exponent


class NotTotalDerivative(NicholsCCError):
    def __init__(self, message, residue=None):
        super().__init__(message)
        self.residue = residue


class NoPrimary(NicholsCCError):
    pass


class NotUnique(NicholsCCError):
    pass


class StructureMismatch(NicholsCCError):
    pass
