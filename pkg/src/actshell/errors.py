"""Exception hierarchy. Every error carries a stable ``code`` used in CLI JSON output."""


class MatroidError(ValueError):
    code = "MatroidError"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness

    def to_json(self) -> dict:
        out = {"code": self.code, "message": str(self)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class EmptyBases(MatroidError):
    code = "EmptyBases"


class UnequalSizes(MatroidError):
    code = "UnequalSizes"


class ExchangeAxiomViolated(MatroidError):
    code = "ExchangeAxiomViolated"


class InvalidRank(MatroidError):
    code = "InvalidRank"


class InvalidElement(MatroidError):
    code = "InvalidElement"


class NotABasis(MatroidError):
    code = "NotABasis"


class ElementInBasis(MatroidError):
    code = "ElementInBasis"


class ElementNotInBasis(MatroidError):
    code = "ElementNotInBasis"


class DeleteColoop(MatroidError):
    code = "DeleteColoop"


class ContractLoop(MatroidError):
    code = "ContractLoop"


class TooLarge(MatroidError):
    code = "TooLarge"


class NotAPartialOrder(MatroidError):
    code = "NotAPartialOrder"


class WrongBasisSet(MatroidError):
    code = "WrongBasisSet"


class NotALinearExtension(MatroidError):
    code = "NotALinearExtension"


class NonPure(MatroidError):
    code = "NonPure"


class NotAPermutation(MatroidError):
    code = "NotAPermutation"


class NotAnAntichain(MatroidError):
    code = "NotAnAntichain"
