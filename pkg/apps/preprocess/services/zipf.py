"""Rank-frequency table for checking Zipf's law on a corpus."""
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence


@dataclass(frozen=True)
class ZipfRow:
    rank: int
    term: str
    freq: int

    @property
    def product(self) -> int:
        return self.rank * self.freq


def rank_frequency(counts: Mapping[str, int]) -> list[ZipfRow]:
    """Terms by descending frequency (ties by term), ranked from 1."""
    ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return [ZipfRow(rank, term, freq) for rank, (term, freq) in enumerate(ordered, 1)]


def zipf_spread(table: Sequence[ZipfRow], lo: int = 10, hi: int = 100) -> Optional[float]:
    """max/min of rank*freq over ranks lo..hi; None if the table is shorter than lo."""
    window = [row.product for row in table if lo <= row.rank <= hi]
    if not window:
        return None
    return max(window) / min(window)
