# Kernels, SMO training and SVM models.
from .diagnostics import (
    dual_objective,
    dual_value,
    geometric_margin,
    hinge_slacks,
    kkt_violations,
    training_alphas,
    weight_vector,
)
from .kernels import Kernel, KernelKind, gram_matrix, kernel_eval
from .smo import train_svm
from .svm_models import (
    SvmModel,
    decision_value,
    decision_values,
    dump_svm,
    load_svm,
    predict_svm,
    predict_svm_many,
)

__all__ = [
    "Kernel",
    "KernelKind",
    "SvmModel",
    "decision_value",
    "decision_values",
    "dual_objective",
    "dual_value",
    "dump_svm",
    "geometric_margin",
    "gram_matrix",
    "hinge_slacks",
    "kernel_eval",
    "kkt_violations",
    "load_svm",
    "predict_svm",
    "predict_svm_many",
    "train_svm",
    "training_alphas",
    "weight_vector",
]
