"""SVG figures of zero-set trajectories, drawn with matplotlib.

Component 1 is drawn with dots and component 2 with stars; further
components cycle through squares and diamonds. Segments joining consecutive
points of one component are visual aids only. Figures are rendered on the
Agg canvas with a fixed hash salt and no date stamp, so the same data always
produces the same bytes.
"""

import io
from collections.abc import Sequence

import matplotlib
import numpy as np
from matplotlib.axes import Axes
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from polygen.constants.types import ComplexArray, FloatArray

FIGSIZE = (6.4, 4.8)
SERIES_FIGSIZE = (6.4, 5.6)
COLOURS = ("#1f4e9c", "#b8322a", "#2e7d32", "#7b3fa0", "#c77800")
MARKERS = ("o", "*", "s", "D")
MARKER_SIZE = 4.0
SVG_RC = {"svg.hashsalt": "polygen", "svg.fonttype": "none"}


def _style(component: int) -> tuple[str, str]:
    return COLOURS[component % len(COLOURS)], MARKERS[component % len(MARKERS)]


def _draw_components(ax: Axes, xs: FloatArray, ys: FloatArray) -> None:
    """One marked, faintly joined series per column of the (T, N) arrays."""
    for component in range(ys.shape[1]):
        colour, marker = _style(component)
        x, y = xs[:, component], ys[:, component]
        visible = np.isfinite(x) & np.isfinite(y)
        ax.plot(x[visible], y[visible], color=colour, linewidth=0.8, alpha=0.45)
        ax.plot(
            x[visible],
            y[visible],
            linestyle="none",
            marker=marker,
            markersize=MARKER_SIZE * (1.6 if marker == "*" else 1.0),
            color=colour,
            label=f"x{component + 1}",
        )


def _to_svg(figure: Figure) -> str:
    FigureCanvasAgg(figure)
    buffer = io.StringIO()
    with matplotlib.rc_context(SVG_RC):
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def plane_figure(values: ComplexArray, title: str) -> str:
    """Scatter of every component of a (T, N) array in the complex plane."""
    figure = Figure(figsize=FIGSIZE)
    ax = figure.subplots()
    _draw_components(ax, values.real, values.imag)
    ax.axhline(0.0, color="#999", linewidth=0.5, linestyle="--")
    ax.axvline(0.0, color="#999", linewidth=0.5, linestyle="--")
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_xlabel("Re x")
    ax.set_ylabel("Im x")
    ax.set_title(title)
    ax.legend(loc="upper right", fontsize="small")
    figure.tight_layout()
    return _to_svg(figure)


def series_figure(ells: Sequence[int], values: ComplexArray, title: str) -> str:
    """Real parts (upper panel) and imaginary parts (lower panel) against ell."""
    steps = np.asarray(ells, dtype=np.float64)
    grid = np.repeat(steps[:, None], values.shape[1], axis=1)
    figure = Figure(figsize=SERIES_FIGSIZE)
    upper, lower = figure.subplots(2, 1, sharex=True)
    for ax, label, parts in (
        (upper, "Re x", values.real),
        (lower, "Im x", values.imag),
    ):
        _draw_components(ax, grid, parts)
        ax.axhline(0.0, color="#999", linewidth=0.5, linestyle="--")
        ax.set_ylabel(label)
    lower.set_xlabel("ell")
    upper.set_title(title)
    upper.legend(loc="upper right", fontsize="small")
    figure.tight_layout()
    return _to_svg(figure)
