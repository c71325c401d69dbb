"""
ExtractionHandler and ExtractionEvalHandler - connectives method.
"""
import logging
from pathlib import Path

from apps.connectives.services import extract_causal
from apps.core.handlers import BasePipelineHandler, HandlerResult
from apps.evaluation.services import (
    evaluate_reports,
    extraction_table,
    ir_table,
    ir_tables,
    load_expert_ids,
)

logger = logging.getLogger(__name__)


class ExtractionHandler(BasePipelineHandler):
    """
    Findet kausale Sätze über das Konnektoren-Lexikon.

    Output:
        _matches, _table, n_matches
    """

    name = "ExtractionHandler"
    description = "Kausale Sätze extrahieren"
    required_inputs = ["config", "_documents", "_lexicon"]

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        lexicon = input_data["_lexicon"]
        result = self.new_result()

        matches = []
        for document in input_data["_documents"]:
            found = extract_causal(document, lexicon, strict_ambiguous=config.strict_ambiguous)
            logger.debug(
                "[%s] %s: %d of %d sentences causal",
                self.name, document.id, len(found), len(document.sentences),
            )
            matches.extend(found)

        result.data.update({
            "_matches": matches,
            "_table": extraction_table(matches),
            "n_matches": len(matches),
        })
        return result


class ExtractionEvalHandler(BasePipelineHandler):
    """
    Scores _matches against one or more expert files, report by report.

    Output:
        _table: per-expert rows and means, closed by the overall mean F
        _sheets: one sheet per expert plus the summary
    """

    name = "ExtractionEvalHandler"
    description = "IR-Evaluation gegen Experten"
    required_inputs = ["_documents", "_matches", "expert_paths"]

    def execute(self, input_data: dict) -> HandlerResult:
        result = self.new_result()
        doc_ids = [d.id for d in input_data["_documents"]]
        retrieved = {m.sentence.key for m in input_data["_matches"]}

        evaluations = []
        for path in input_data["expert_paths"]:
            path = Path(path)
            expert = load_expert_ids(path)
            unknown = {doc for doc, _ in expert} - set(doc_ids)
            if unknown:
                result.add_warning(
                    f"{path.name}: marks for reports not given: {', '.join(sorted(unknown))}"
                )
            evaluations.append(evaluate_reports(expert, retrieved, doc_ids, name=path.stem))

        stacked, summary = ir_tables(evaluations)
        result.data.update({
            "_table": stacked,
            "_sheets": [ir_table(e) for e in evaluations] + [summary],
            "mean_f": {e.expert: e.mean_f for e in evaluations},
            "overall_f": summary.rows[-1][-1],
        })
        return result
