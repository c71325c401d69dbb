from apps.core.exceptions import CausalExtractError


class NaiveBayesError(CausalExtractError):
    """Training or scoring request the multinomial model cannot serve."""
