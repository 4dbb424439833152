"""Plot-ready output: a long CSV for a stacked-area chart and a bare SVG line chart."""
from __future__ import annotations

import csv
from pathlib import Path
from xml.sax.saxutils import escape

from ..errors import IoError, ValidationError
from ..forecast_lab import TimeSeries
from .report import fmt

PLOT_COLUMNS = ("date", "fall_share", "no_change_share", "increase_share", "c3", "c5")

SVG_WIDTH, SVG_HEIGHT = 640, 320
MARGIN = 40
LINE_COLOURS = {"C3": "#000000", "C5": "#d62728"}


def y_pixel(value: float) -> float:
    """Linear map of [0, 100] onto the plot area, 100 at the top."""
    inner = SVG_HEIGHT - 2 * MARGIN
    return MARGIN + (100.0 - value) / 100.0 * inner


def x_pixel(i: int, n: int) -> float:
    inner = SVG_WIDTH - 2 * MARGIN
    return MARGIN + (inner * i / (n - 1) if n > 1 else inner / 2)


def svg_chart(series: dict[str, TimeSeries], title: str = "Consensus (%)") -> str:
    first = next(iter(series.values()))
    n = len(first)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" height="{SVG_HEIGHT}" '
        f'viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        f'<text x="{MARGIN}" y="{MARGIN / 2:.0f}" font-size="12">{escape(title)}</text>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{SVG_WIDTH - 2 * MARGIN}" '
        f'height="{SVG_HEIGHT - 2 * MARGIN}" fill="none" stroke="#999999"/>',
    ]
    for tick in (0, 50, 100):
        parts.append(f'<text x="4" y="{y_pixel(tick) + 4:.2f}" font-size="10">{tick}</text>')
    parts.append(f'<text x="{MARGIN}" y="{SVG_HEIGHT - 10}" font-size="10">{first.first_label}</text>')
    parts.append(f'<text x="{SVG_WIDTH - MARGIN - 40}" y="{SVG_HEIGHT - 10}" font-size="10">'
                 f'{first.last_label}</text>')
    for name, ts in series.items():
        pts = " ".join(f"{x_pixel(i, n):.2f},{y_pixel(v):.2f}" for i, v in enumerate(ts.values))
        colour = LINE_COLOURS.get(name, "#1f77b4")
        dash = ' stroke-dasharray="4 3"' if name == "C3" else ""
        parts.append(f'<polyline id="{escape(name)}" fill="none" stroke="{colour}"{dash} points="{pts}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def plot_rows(consensus: dict[str, TimeSeries], shares: dict[str, TimeSeries]) -> list[list[str]]:
    c3, c5 = consensus["C3"], consensus["C5"]
    cols = [shares["fall"], shares["no_change"], shares["increase"], c3, c5]
    if len({(s.start, len(s)) for s in cols}) != 1:
        raise ValidationError("consensus and share series are not aligned")
    return [[date] + [fmt(s.values[i]) for s in cols] for i, date in enumerate(c3.dates)]


def emit_plot_data(bundle, out_path) -> list[Path]:
    """Write ``plot_data.csv`` and ``consensus.svg`` into directory ``out_path``."""
    out = Path(out_path)
    try:
        out.mkdir(parents=True, exist_ok=True)
        csv_path = out / "plot_data.csv"
        with open(csv_path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(PLOT_COLUMNS)
            w.writerows(plot_rows(bundle.consensus, bundle.shares))
        svg_path = out / "consensus.svg"
        svg_path.write_text(svg_chart({"C3": bundle.consensus["C3"], "C5": bundle.consensus["C5"]}),
                            encoding="utf-8")
    except OSError as exc:
        raise IoError(f"cannot write plot data: {exc}") from exc
    return [csv_path, svg_path]
