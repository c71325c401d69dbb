"""Errors raised by kernels, the SMO solver and SVM models."""
from apps.core.exceptions import CausalExtractError


class SvmError(CausalExtractError):
    """Invalid SVM training or scoring request."""


class KernelError(SvmError):
    """Bad kernel parameters or mismatched vector dimensions."""


class SvmConvergenceError(SvmError):
    """SMO did not reach the KKT tolerance."""

    exit_code = 3

    def __init__(self, message: str, violation: float, iterations: int):
        super().__init__(
            f"{message} (max KKT violation {violation:.3g} after {iterations} iterations)",
            {"violation": violation, "iterations": iterations},
        )
        self.violation = violation
        self.iterations = iterations
