"""
Diagnostic plots (PNG or SVG, chosen by file suffix).

Rendered off-screen with the Agg backend.
"""
import logging
from pathlib import Path
from typing import Mapping, Optional, Sequence

from apps.evaluation.exceptions import EvaluationError

logger = logging.getLogger(__name__)

PLOT_FORMATS = ("png", "svg")


def _plot_format(path: Path) -> str:
    fmt = path.suffix.lower().lstrip(".")
    if fmt not in PLOT_FORMATS:
        raise EvaluationError(f"unsupported plot format '{path.suffix}', use .png or .svg")
    return fmt


def _save(fig, path: Path, dpi: int):
    import matplotlib.pyplot as plt

    fmt = _plot_format(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        fig.savefig(str(path), format=fmt, bbox_inches="tight", dpi=dpi)
    except OSError as e:
        raise EvaluationError(f"could not write plot {path}: {e}") from e
    finally:
        plt.close(fig)
    logger.info("Wrote plot %s", path)
    return path


def plot_f_comparison(
    scores: Mapping[str, Mapping[str, Optional[float]]],
    output_path: Path,
    title: str = "Cross-validated F-measure",
    dpi: int = 150,
) -> Path:
    """
    Grouped bars: one group per classifier, one bar per weighting scheme.

    `scores` maps scheme -> classifier -> F; undefined values draw as 0.
    """
    output_path = Path(output_path)
    _plot_format(output_path)

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    schemes = list(scores)
    classifiers = list(next(iter(scores.values()), {}))
    positions = np.arange(len(classifiers))
    width = 0.8 / max(len(schemes), 1)

    fig, ax = plt.subplots(figsize=(7, 4), dpi=dpi)
    for offset, scheme in enumerate(schemes):
        values = [scores[scheme].get(kind) or 0.0 for kind in classifiers]
        ax.bar(positions + offset * width, values, width, label=scheme)
    ax.set_xticks(positions + width * (len(schemes) - 1) / 2)
    ax.set_xticklabels(classifiers)
    ax.set_ylim(0, 1)
    ax.set_ylabel("F")
    ax.set_title(title)
    ax.legend()
    return _save(fig, output_path, dpi)


def plot_zipf(table: Sequence, output_path: Path, dpi: int = 150) -> Path:
    """Log-log rank vs. frequency of a rank_frequency table."""
    output_path = Path(output_path)
    _plot_format(output_path)
    if not table:
        raise EvaluationError("cannot plot an empty rank-frequency table")

    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 4), dpi=dpi)
    ax.loglog([row.rank for row in table], [row.freq for row in table], marker=".", linestyle="")
    ax.set_xlabel("rank")
    ax.set_ylabel("frequency")
    ax.set_title("Rank-frequency")
    return _save(fig, output_path, dpi)
