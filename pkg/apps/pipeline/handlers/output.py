"""
OutputHandler - writes the result of a pipeline.

`_text` is written as is; otherwise `_table` is rendered as TSV below the
provenance line. Destination is --output, or stdout when none is given
(always stdout for commands whose --output names a directory).
"""
import logging
from pathlib import Path

from apps.core.handlers import BasePipelineHandler, HandlerResult
from apps.core.services.provenance import write_text
from apps.evaluation.services import ReportExcelExporter

logger = logging.getLogger(__name__)


class OutputHandler(BasePipelineHandler):
    name = "OutputHandler"
    description = "TSV/Excel-Ausgabe schreiben"
    required_inputs = ["config"]
    optional_inputs = ["_text", "_table", "_sheets", "xlsx_path", "stdout"]

    def __init__(self, context: dict = None, to_stdout: bool = False):
        super().__init__(context)
        self.to_stdout = to_stdout

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        result = self.new_result()
        header = config.provenance()

        text = input_data.get("_text")
        table = input_data.get("_table")
        if text is None:
            if table is None:
                result.add_error("nothing to write", exit_code=1)
                return result
            text = table.render(header)

        destination = None if self.to_stdout else config.output
        write_text(text, destination, input_data.get("stdout"))
        if destination is not None:
            result.data["output_path"] = str(destination)

        xlsx_path = input_data.get("xlsx_path")
        if xlsx_path:
            sheets = input_data.get("_sheets") or ([table] if table is not None else [])
            ReportExcelExporter().save(sheets, Path(xlsx_path), header=header)
            result.data["xlsx_path"] = str(xlsx_path)
        return result
