"""Exception hierarchy shared by all modules."""


class NormbasisError(Exception):
    """Base class for all errors raised by this package."""


class NonSquare(NormbasisError):
    pass


class Singular(NormbasisError):
    pass


class NonMonicModulus(NormbasisError):
    pass


class NotInvertible(NormbasisError):
    pass


class NotSquarefree(NormbasisError):
    pass


class ReduciblePolynomial(NormbasisError):
    pass


class InternalNonField(NormbasisError):
    pass


class NotAnOrder(NormbasisError):
    def __init__(self, check, witness=None):
        self.check = check
        self.witness = witness
        super().__init__(f"integral basis check failed: {check} (witness {witness})")


class BadParameter(NormbasisError):
    pass


class PrecisionExhausted(NormbasisError):
    pass


class NotGalois(NormbasisError):
    def __init__(self, found, degree):
        self.found = found
        self.degree = degree
        super().__init__(f"only {found} of {degree} roots of the defining polynomial lie in the field")


class NotClosed(NormbasisError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"automorphism composition not in the computed set: {pair}")


class ZeroIdeal(NormbasisError):
    pass


class ExhaustedSimplex(NormbasisError):
    pass


class PreconditionViolated(NormbasisError):
    pass


class NotIntegral(NormbasisError):
    pass


class NotNormalBasis(NormbasisError):
    pass
