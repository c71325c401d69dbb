from apps.core.exceptions import CausalExtractError


class VectorizeError(CausalExtractError):
    """Invalid weighting request or malformed matrix file."""
