"""
Corpus data models.

Reports are segmented into sentences; the sentence is the classification
unit. All models are frozen and can be shared between worker processes.
"""
from collections import Counter
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Sequence


class CausalLabel(IntEnum):
    """Binary sentence label."""

    CAUSAL = 1
    NON_CAUSAL = -1

    @classmethod
    def parse(cls, text: str) -> "CausalLabel":
        value = text.strip()
        if value == "+1":
            return cls.CAUSAL
        if value == "-1":
            return cls.NON_CAUSAL
        raise ValueError(f"label must be +1 or -1, got {text!r}")

    def render(self) -> str:
        return "+1" if self is CausalLabel.CAUSAL else "-1"


@dataclass(frozen=True)
class Sentence:
    doc_id: str
    index: int  # ordinal within the document, dense from 0
    text: str

    @property
    def key(self) -> tuple[str, int]:
        return (self.doc_id, self.index)


@dataclass(frozen=True)
class Document:
    """One plain-text report."""

    id: str
    text: str
    sentences: tuple[Sentence, ...] = ()

    @classmethod
    def from_segments(cls, doc_id: str, text: str, segments: Iterable[str]) -> "Document":
        sentences = tuple(
            Sentence(doc_id=doc_id, index=i, text=segment)
            for i, segment in enumerate(segments)
        )
        return cls(id=doc_id, text=text, sentences=sentences)


@dataclass(frozen=True)
class LabeledSentence:
    sentence: Sentence
    label: CausalLabel

    @property
    def text(self) -> str:
        return self.sentence.text


@dataclass(frozen=True)
class LabeledDataset:
    """Ordered labeled sentences with per-class counts."""

    items: tuple[LabeledSentence, ...] = ()
    class_counts: dict = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        counts = Counter(item.label for item in self.items)
        object.__setattr__(
            self,
            "class_counts",
            {label: counts.get(label, 0) for label in CausalLabel},
        )

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    @property
    def texts(self) -> list[str]:
        return [item.text for item in self.items]

    @property
    def labels(self) -> list[int]:
        return [int(item.label) for item in self.items]

    @property
    def keys(self) -> list[tuple[str, int]]:
        return [item.sentence.key for item in self.items]

    def subset(self, indices: Sequence[int]) -> "LabeledDataset":
        return LabeledDataset(items=tuple(self.items[i] for i in indices))

    def indices_of(self, label: CausalLabel) -> list[int]:
        return [i for i, item in enumerate(self.items) if item.label == label]
