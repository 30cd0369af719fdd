"""Gantt charts of a schedule as monospace text or SVG."""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .model import Schedule
from .report import format_number


def render_gantt(s: Schedule, style: str = "ascii", *, width: int = 48) -> str:
    if style == "ascii":
        return _ascii(s, width)
    if style == "svg":
        return _svg(s)
    raise ValueError(f"unknown gantt style {style!r}; expected 'ascii' or 'svg'")


def _ascii(s: Schedule, width: int) -> str:
    etc = s.etc
    rows = s.by_resource()
    label_w = max(len(r) for r in etc.resource_names)
    scale = Fraction(width) / s.makespan if s.makespan > 0 else Fraction(0)
    lines = []
    for j, row in enumerate(rows):
        bar = [" "] * width
        for a in row:
            lo = round(a.start * scale)
            hi = round(a.finish * scale)
            if hi <= lo:
                continue
            seg = ("[" + etc.task_names[a.task]).ljust(hi - lo - 1, "=")[:hi - lo - 1] + "]"
            bar[lo:hi] = seg[-(hi - lo):]
        segments = " ".join(f"{etc.task_names[a.task]}[{format_number(a.start)}-"
                            f"{format_number(a.finish)}]" for a in row)
        bar_text = "".join(bar) if s.makespan > 0 else ""
        lines.append(f"{etc.resource_names[j].ljust(label_w)} |{bar_text}| {segments}".rstrip())
    lines.append(f"{'':{label_w}}  makespan {format_number(s.makespan)}")
    return "\n".join(lines) + "\n"


_COLORS = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948", "#b07aa1",
           "#ff9da7", "#9c755f", "#bab0ac")


def _svg(s: Schedule, px_per_unit: float | None = None) -> str:
    etc = s.etc
    left, top, row_h, plot_w = 60, 20, 36, 480
    ms = float(s.makespan)
    unit = px_per_unit or (plot_w / ms if ms > 0 else 0.0)
    height = top + row_h * etc.m + 30
    total_w = left + (ms * unit if ms > 0 else plot_w) + 20
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w:.0f}" height="{height}" '
           f'font-family="monospace" font-size="12">']
    for j, row in enumerate(s.by_resource()):
        y = top + j * row_h
        out.append(f'<text x="4" y="{y + row_h / 2 + 4:.1f}">{escape(etc.resource_names[j])}</text>')
        for a in row:
            x = left + float(a.start) * unit
            w = float(a.duration) * unit
            name = escape(etc.task_names[a.task])
            out.append(
                f'<rect x="{x:.2f}" y="{y + 4}" width="{w:.2f}" height="{row_h - 8}" '
                f'fill="{_COLORS[a.task % len(_COLORS)]}" stroke="black">'
                f'<title>{name} [{format_number(a.start)}, {format_number(a.finish)})</title></rect>')
            out.append(f'<text x="{x + w / 2:.2f}" y="{y + row_h / 2 + 4:.1f}" '
                       f'text-anchor="middle">{name}</text>')
    axis_y = top + row_h * etc.m + 4
    out.append(f'<line x1="{left}" y1="{axis_y}" x2="{left + ms * unit:.2f}" y2="{axis_y}" '
               f'stroke="black"/>')
    out.append(f'<text x="{left}" y="{axis_y + 16}">0</text>')
    out.append(f'<text x="{left + ms * unit:.2f}" y="{axis_y + 16}" text-anchor="end">'
               f'{format_number(s.makespan)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
