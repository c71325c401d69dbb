from apps.core.exceptions import CausalExtractError


class EvaluationError(CausalExtractError):
    """Invalid fold, grid or evaluation input."""
