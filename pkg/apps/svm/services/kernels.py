"""
Kernel functions.

    linear      K(x, z) = <x, z>
    gaussian    K(x, z) = exp(-||x - z||^2 / sigma)
    polynomial  K(x, z) = (<x, z> + c)^degree

The gaussian divides by sigma, not 2 sigma^2, so sigma grids such as
{8, 16, 32, 64, 128} keep their meaning.
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np

from apps.svm.exceptions import KernelError
from apps.vectorize.services.matrix import as_csr


class KernelKind(str, Enum):
    LINEAR = "linear"
    GAUSSIAN = "gaussian"
    POLYNOMIAL = "polynomial"


@dataclass(frozen=True)
class Kernel:
    kind: KernelKind = KernelKind.LINEAR
    sigma: float = 16.0
    c: float = 1.0
    degree: int = 2

    def __post_init__(self):
        object.__setattr__(self, "kind", KernelKind(self.kind))
        if self.kind is KernelKind.GAUSSIAN and not self.sigma > 0:
            raise KernelError(f"gaussian sigma must be > 0, got {self.sigma}")
        if self.kind is KernelKind.POLYNOMIAL and (
            int(self.degree) != self.degree or self.degree < 1
        ):
            raise KernelError(f"polynomial degree must be a positive integer, got {self.degree}")

    @classmethod
    def linear(cls) -> "Kernel":
        return cls(KernelKind.LINEAR)

    @classmethod
    def gaussian(cls, sigma: float) -> "Kernel":
        return cls(KernelKind.GAUSSIAN, sigma=sigma)

    @classmethod
    def polynomial(cls, c: float = 1.0, degree: int = 2) -> "Kernel":
        return cls(KernelKind.POLYNOMIAL, c=c, degree=degree)

    def spec(self) -> str:
        if self.kind is KernelKind.GAUSSIAN:
            return f"gaussian sigma={self.sigma:.17g}"
        if self.kind is KernelKind.POLYNOMIAL:
            return f"polynomial c={self.c:.17g} degree={int(self.degree)}"
        return "linear"

    @classmethod
    def parse(cls, text: str) -> "Kernel":
        """Inverse of spec()."""
        kind, *params = text.split()
        try:
            values = dict(param.split("=", 1) for param in params)
            if kind == KernelKind.GAUSSIAN.value:
                return cls.gaussian(float(values["sigma"]))
            if kind == KernelKind.POLYNOMIAL.value:
                return cls.polynomial(float(values["c"]), int(values["degree"]))
            if kind == KernelKind.LINEAR.value and not params:
                return cls.linear()
        except (KeyError, ValueError) as e:
            raise KernelError(f"bad kernel spec '{text}': {e}") from e
        raise KernelError(f"bad kernel spec '{text}'")


def gram_matrix(kernel: Kernel, X, Z=None) -> np.ndarray:
    """Dense kernel matrix K[i, j] = K(X_i, Z_j); Z defaults to X."""
    X = as_csr(X)
    symmetric = Z is None
    Z = X if symmetric else as_csr(Z)
    if X.shape[1] != Z.shape[1]:
        raise KernelError(f"dimension mismatch: {X.shape[1]} vs {Z.shape[1]}")

    inner = np.asarray((X @ Z.T).toarray(), dtype=np.float64)
    if symmetric:
        inner = (inner + inner.T) / 2

    if kernel.kind is KernelKind.LINEAR:
        return inner
    if kernel.kind is KernelKind.POLYNOMIAL:
        return (inner + kernel.c) ** int(kernel.degree)

    sq_x = np.asarray(X.multiply(X).sum(axis=1)).ravel()
    sq_z = sq_x if symmetric else np.asarray(Z.multiply(Z).sum(axis=1)).ravel()
    distance = np.maximum(sq_x[:, None] + sq_z[None, :] - 2.0 * inner, 0.0)
    if symmetric:
        np.fill_diagonal(distance, 0.0)
    return np.exp(-distance / kernel.sigma)


def kernel_eval(kernel: Kernel, x, z) -> float:
    x = np.asarray(x, dtype=np.float64).ravel()
    z = np.asarray(z, dtype=np.float64).ravel()
    if x.size != z.size:
        raise KernelError(f"dimension mismatch: {x.size} vs {z.size}")
    if kernel.kind is KernelKind.LINEAR:
        return float(x @ z)
    if kernel.kind is KernelKind.POLYNOMIAL:
        return float((x @ z + kernel.c) ** int(kernel.degree))
    diff = x - z
    return float(np.exp(-(diff @ diff) / kernel.sigma))
