"""
Report and labeled-dataset I/O.

Labeled-TSV: one sentence per line, four tab-separated columns
``doc_id  sentence_index  label  text`` with label +1 or -1, UTF-8,
no header. Lines starting with ``#`` are treated as comments so files
written with a provenance header load back unchanged.
"""
import logging
from pathlib import Path
from typing import Iterable, Optional

from apps.corpus.exceptions import CorpusError, EmptyDocumentError, LabeledFormatError

from .corpus_models import CausalLabel, Document, LabeledDataset, LabeledSentence, Sentence
from .segmenter import SentenceSegmenter, segment_sentences

logger = logging.getLogger(__name__)

REPORT_SUFFIXES = (".txt",)


def _read_text(path: Path) -> str:
    if path.suffix.lower() == ".pdf":
        raise CorpusError(
            f"{path}: PDF input is not supported; convert the report to plain text first",
            {"path": str(path)},
        )
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError as e:
        raise CorpusError(f"file not found: {path}", {"path": str(path)}) from e
    except UnicodeDecodeError as e:
        raise CorpusError(f"{path}: not valid UTF-8 ({e.reason})", {"path": str(path)}) from e
    except OSError as e:
        raise CorpusError(f"{path}: {e.strerror or e}", {"path": str(path)}) from e


def load_report(path: Path, segmenter: Optional[SentenceSegmenter] = None) -> Document:
    """Load and segment one plain-text report; the id is the file stem."""
    path = Path(path)
    text = _read_text(path)
    if not text.strip():
        raise EmptyDocumentError(str(path))
    segments = segment_sentences(text, segmenter)
    document = Document.from_segments(path.stem, text, segments)
    logger.debug("Loaded report %s: %d sentences", document.id, len(document.sentences))
    return document


def load_reports(
    paths: Iterable[Path], segmenter: Optional[SentenceSegmenter] = None
) -> list[Document]:
    """Load reports; directories expand to their ``*.txt`` files in name order."""
    documents = []
    for path in paths:
        path = Path(path)
        if path.is_dir():
            members = sorted(p for p in path.iterdir() if p.suffix.lower() in REPORT_SUFFIXES)
            documents.extend(load_report(p, segmenter) for p in members)
        else:
            documents.append(load_report(path, segmenter))
    seen = set()
    for document in documents:
        if document.id in seen:
            raise CorpusError(f"duplicate report id '{document.id}'")
        seen.add(document.id)
    return documents


def parse_labeled_lines(lines: Iterable[str], source: Optional[str] = None) -> LabeledDataset:
    items = []
    for line_number, raw in enumerate(lines, 1):
        line = raw.rstrip("\r\n")
        if line.startswith("#"):
            continue
        columns = line.split("\t")
        if len(columns) != 4:
            raise LabeledFormatError(
                f"expected 4 tab-separated columns, got {len(columns)}", line_number, source
            )
        doc_id, index_text, label_text, text = columns
        if not doc_id:
            raise LabeledFormatError("empty doc_id", line_number, source)
        if not index_text.isdecimal():
            raise LabeledFormatError(
                f"sentence_index must be a decimal number, got {index_text!r}",
                line_number,
                source,
            )
        try:
            label = CausalLabel.parse(label_text)
        except ValueError as e:
            raise LabeledFormatError(str(e), line_number, source) from e
        if not text.strip():
            raise LabeledFormatError("empty sentence text", line_number, source)
        sentence = Sentence(doc_id=doc_id, index=int(index_text), text=text)
        items.append(LabeledSentence(sentence=sentence, label=label))
    return LabeledDataset(items=tuple(items))


def load_labeled_dataset(path: Path) -> LabeledDataset:
    path = Path(path)
    text = _read_text(path)
    dataset = parse_labeled_lines(text.splitlines(), source=str(path))
    logger.info(
        "Loaded %d labeled sentences from %s (causal=%d, non-causal=%d)",
        len(dataset),
        path.name,
        dataset.class_counts[CausalLabel.CAUSAL],
        dataset.class_counts[CausalLabel.NON_CAUSAL],
    )
    return dataset


def format_labeled_dataset(dataset: LabeledDataset, header: Optional[str] = None) -> str:
    """Labeled-TSV text for `dataset`, optionally behind a ``#`` header line."""
    lines = [header] if header else []
    for item in dataset:
        text = " ".join(item.text.split())
        lines.append(
            f"{item.sentence.doc_id}\t{item.sentence.index}\t{item.label.render()}\t{text}"
        )
    return "\n".join(lines) + "\n" if lines else ""
