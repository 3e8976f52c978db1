"""Exception types shared across the package."""


class HomologError(Exception):
    """Base class for errors raised by this package."""


class IllDefinedMap(HomologError, ValueError):
    """A generator matrix does not send relations into relations."""


class NotAComplex(HomologError, ValueError):
    """Consecutive differentials do not compose to zero."""

    def __init__(self, degree, product):
        self.degree = degree
        self.product = product
        super().__init__(f"d∘d ≠ 0 at degree {degree}: product {product!r}")


class NotQuasiIsomorphism(HomologError, ValueError):
    """A map required to be a quasi-isomorphism is not; carries a cone witness."""

    def __init__(self, degree, module):
        self.degree = degree
        self.module = module
        super().__init__(f"cone has nonzero cohomology in degree {degree}: {module}")


class LiftError(HomologError, RuntimeError):
    """A lifting system that theory guarantees soluble turned out insoluble.

    This signals an internal convention bug, never bad user input.
    """


class NotDualizing(HomologError, ValueError):
    def __init__(self, report, which="R"):
        self.report = report
        self.which = which
        super().__init__(f"{which} is not a dualizing complex: {report.reason}")


class CoefficientOverflow(HomologError, ArithmeticError):
    """A coefficient exceeded the configured bit cap."""
