class HsVerifyError(Exception):
    """Base class for every error raised by hsverify."""


class ParameterError(HsVerifyError, ValueError):
    """Invalid problem parameters or numeric configuration."""


class PreconditionError(HsVerifyError, ValueError):
    """A check was invoked outside of the hypotheses it certifies."""


class InconclusiveError(HsVerifyError):
    """The numerics cannot decide at the requested precision."""


class QuadratureError(InconclusiveError):
    """Quadrature refinement did not converge within the allowed levels."""


class VerificationFailure(HsVerifyError):
    """A strict cross-check disagreed with its reference."""
