"""
Base handler classes for the causal-extraction pipelines.

Provides BasePipelineHandler, HandlerResult and HandlerPipeline,
shared by every command in apps.pipeline.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Optional

from apps.core.exceptions import CausalExtractError

logger = logging.getLogger(__name__)


class HandlerStatus(Enum):
    """Handler-Ausführungsstatus."""

    RUNNING = "running"
    SUCCESS = "success"
    ERROR = "error"


@dataclass
class HandlerResult:
    """Ergebnis eines Handler-Aufrufs."""

    success: bool
    handler_name: str
    status: HandlerStatus = HandlerStatus.SUCCESS
    data: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    exit_code: int = 0
    execution_time_ms: float = 0.0
    timestamp: str = field(
        default_factory=lambda: datetime.now().isoformat()
    )

    def to_dict(self) -> dict:
        serializable_data = {
            k: v
            for k, v in self.data.items()
            if not k.startswith("_")
        }
        return {
            "success": self.success,
            "handler": self.handler_name,
            "status": self.status.value,
            "data": serializable_data,
            "errors": self.errors,
            "warnings": self.warnings,
            "exit_code": self.exit_code,
            "execution_time_ms": self.execution_time_ms,
            "timestamp": self.timestamp,
        }

    def add_error(self, message: str, exit_code: int = 2):
        self.errors.append(message)
        self.success = False
        self.status = HandlerStatus.ERROR
        self.exit_code = exit_code

    def add_warning(self, message: str):
        self.warnings.append(message)


class BasePipelineHandler(ABC):
    """
    Basisklasse für alle Pipeline-Handler.

    Handler verarbeiten Korpus-Daten in einer Pipeline:
    INPUT -> PROCESSING -> OUTPUT

    Keys starting with "_" in result data carry live objects
    (datasets, models) and are left out of to_dict().
    """

    name: str = "BaseHandler"
    description: str = "Basisklasse für Pipeline-Handler"
    required_inputs: list = []
    optional_inputs: list = []

    def __init__(self, context: dict = None):
        self.context = context or {}
        self._start_time: Optional[datetime] = None

    @abstractmethod
    def execute(self, input_data: dict) -> HandlerResult:
        pass

    def validate_input(
        self, input_data: dict
    ) -> tuple[bool, list[str]]:
        errors = []
        for required in self.required_inputs:
            if (
                required not in input_data
                and required not in self.context
            ):
                errors.append(f"Missing required input: {required}")
        return len(errors) == 0, errors

    def new_result(self) -> HandlerResult:
        return HandlerResult(
            success=True,
            handler_name=self.name,
            status=HandlerStatus.RUNNING,
        )

    def run(self, input_data: dict) -> HandlerResult:
        self._start_time = datetime.now()
        merged_input = {**self.context, **input_data}

        valid, errors = self.validate_input(merged_input)
        if not valid:
            return HandlerResult(
                success=False,
                handler_name=self.name,
                status=HandlerStatus.ERROR,
                errors=errors,
                exit_code=2,
            )

        try:
            logger.info("[%s] Starting execution...", self.name)
            result = self.execute(merged_input)
            elapsed = (
                datetime.now() - self._start_time
            ).total_seconds() * 1000
            result.execution_time_ms = elapsed
            if result.status == HandlerStatus.RUNNING:
                result.status = HandlerStatus.SUCCESS
            logger.info("[%s] Completed in %.1fms", self.name, elapsed)
            return result
        except CausalExtractError as e:
            logger.error("[%s] Handler error: %s", self.name, e.message)
            return HandlerResult(
                success=False,
                handler_name=self.name,
                status=HandlerStatus.ERROR,
                errors=[e.message],
                exit_code=e.exit_code,
            )
        except Exception as e:
            logger.exception("[%s] Unexpected error: %s", self.name, e)
            return HandlerResult(
                success=False,
                handler_name=self.name,
                status=HandlerStatus.ERROR,
                errors=[f"Unexpected error: {e!s}"],
                exit_code=1,
            )

    def __repr__(self):
        cls = self.__class__.__name__
        return f"<{cls}(name={self.name})>"


class HandlerPipeline:
    """Pipeline für sequentielle Handler-Ausführung."""

    def __init__(self, context: dict = None):
        self.handlers: list[BasePipelineHandler] = []
        self.context = context or {}
        self.results: list[HandlerResult] = []

    def add(self, handler: BasePipelineHandler) -> "HandlerPipeline":
        handler.context = self.context
        self.handlers.append(handler)
        return self

    def run(self, input_data: dict) -> list[HandlerResult]:
        self.results = []
        current_data = {**self.context, **input_data}

        for handler in self.handlers:
            handler.context = current_data
            result = handler.run(current_data)
            self.results.append(result)

            if not result.success:
                logger.warning(
                    "Pipeline stopped at %s: %s",
                    handler.name,
                    result.errors,
                )
                break

            current_data.update(result.data)

        return self.results

    @property
    def failed_result(self) -> Optional[HandlerResult]:
        for result in self.results:
            if not result.success:
                return result
        return None
