"""
SyntheticCorpusHandler - writes a generated corpus as files.

Output directory layout:
    labeled.tsv      labeled sentences
    expert.tsv       ids of the causal sentences (generator labels)
    reports/<id>.txt one plain-text report per doc_id
"""
import logging
from pathlib import Path

from apps.core.exceptions import ConfigError
from apps.core.handlers import BasePipelineHandler, HandlerResult
from apps.core.services.provenance import write_text
from apps.corpus.services import (
    CausalLabel,
    format_labeled_dataset,
    generate_synthetic_corpus,
    synthetic_reports,
)
from apps.evaluation.services import ReportTable

logger = logging.getLogger(__name__)

LABELED_FILE = "labeled.tsv"
EXPERT_FILE = "expert.tsv"
REPORTS_DIR = "reports"


class SyntheticCorpusHandler(BasePipelineHandler):
    name = "SyntheticCorpusHandler"
    description = "Synthetischen Korpus erzeugen"
    required_inputs = ["config"]
    optional_inputs = ["n_sentences"]

    def execute(self, input_data: dict) -> HandlerResult:
        config = input_data["config"]
        if config.output is None:
            raise ConfigError("make_synthetic needs --output DIR")
        out_dir = Path(config.output)
        result = self.new_result()

        dataset = generate_synthetic_corpus(input_data.get("n_sentences") or 200, config.seed)
        header = config.provenance()
        write_text(format_labeled_dataset(dataset, header), out_dir / LABELED_FILE)

        causal = [item.sentence for item in dataset if item.label is CausalLabel.CAUSAL]
        expert_lines = [header] + [f"{s.doc_id}\t{s.index}" for s in causal]
        write_text("\n".join(expert_lines) + "\n", out_dir / EXPERT_FILE)

        reports = synthetic_reports(dataset)
        for document in reports:
            write_text(document.text, out_dir / REPORTS_DIR / f"{document.id}.txt")

        rows = [
            [LABELED_FILE, len(dataset)],
            [EXPERT_FILE, len(causal)],
            [REPORTS_DIR, len(reports)],
        ]
        result.data.update({
            "_table": ReportTable("make_synthetic", ["file", "items"], rows),
            "n_sentences": len(dataset),
            "n_causal": len(causal),
            "n_reports": len(reports),
        })
        return result
