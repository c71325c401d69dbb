# Shared pipeline handler base.
from .base import (
    BasePipelineHandler,
    HandlerPipeline,
    HandlerResult,
    HandlerStatus,
)

__all__ = [
    "BasePipelineHandler",
    "HandlerPipeline",
    "HandlerResult",
    "HandlerStatus",
]
