from __future__ import annotations


class GrMirrorError(ValueError):
    """Base class for every input / domain error raised by the package."""


class InvalidGridError(GrMirrorError):
    pass


class DiagramError(GrMirrorError):
    pass


class RingMismatchError(GrMirrorError):
    """Operands live in different cyclotomic rings Z[zeta_N]."""


class RootSetError(GrMirrorError):
    pass


class RegistryMismatchError(GrMirrorError):
    """Laurent polynomials over different variable registries."""


class UnmappedVariableError(GrMirrorError, KeyError):
    pass


class UndefinedObjectError(GrMirrorError):
    """Holonomy requested for a critical point outside the rectangular chart."""


class VerificationFailure(GrMirrorError):
    """An identity that must hold exactly did not."""

    def __init__(self, check: str, witness: str) -> None:
        super().__init__(f"{check} failed for {witness}")
        self.check = check
        self.witness = witness
