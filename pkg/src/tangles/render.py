"""Deterministic wire-diagram rendering of tangles.

Wires run top to bottom (y-monotone); each layer occupies one horizontal
band in which swapping wires cross between neighboring columns and all
other wires continue straight.  Output is plain text or a small SVG 1.1
subset; identical input always yields identical bytes.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Tangle

_FORMATS = ("ascii", "svg")

# Stable wire palette, cycled by wire index.
_PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)

_SVG_UNIT = 24
_SVG_MARGIN = 30


@dataclass(frozen=True)
class RenderSpec:
    """Rendering knobs: horizontal/vertical scale, labels, output format."""

    column_width: int = 1
    row_height: int = 1
    labels: bool = True
    format: str = "ascii"

    def __post_init__(self) -> None:
        if self.column_width < 1 or self.row_height < 1:
            raise ValueError("render dimensions must be positive")
        if self.format not in _FORMATS:
            raise ValueError(f"format must be one of {_FORMATS}")


def render(tangle: Tangle, spec: RenderSpec = RenderSpec()) -> str:
    """Render a tangle as a text document in the selected format."""
    if spec.format == "svg":
        return _render_svg(tangle, spec)
    return _render_ascii(tangle, spec)


def _render_ascii(tangle: Tangle, spec: RenderSpec) -> str:
    n = tangle.n
    # Labels wider than the column spacing would collide with the next wire.
    width = spec.column_width
    if spec.labels:
        width = max(width, max(len(str(w)) for w in range(1, n + 1)))
    col = [p * width for p in range(n)]
    line_len = col[-1] + 1

    def blank() -> list[str]:
        return [" "] * line_len

    def label_line(wires: tuple[int, ...]) -> str:
        chars = [" "] * (col[-1] + width)
        for p, w in enumerate(wires):
            for offset, ch in enumerate(str(w)):
                chars[col[p] + offset] = ch
        return "".join(chars).rstrip()

    def vertical_line() -> str:
        chars = blank()
        for p in range(n):
            chars[col[p]] = "|"
        return "".join(chars).rstrip()

    lines = []
    if spec.labels:
        lines.append(label_line(tangle.perms[0].wires))
    for index, layer in enumerate(tangle.layers):
        perm = tangle.perms[index]
        swap_positions = {
            min(perm.position_of(i), perm.position_of(j)) - 1
            for i, j in layer.swaps
        }
        for _ in range(spec.row_height - 1):
            lines.append(vertical_line())
        top = blank()
        bottom = blank()
        for p in range(n):
            top[col[p]] = "|"
            bottom[col[p]] = "|"
        for p in swap_positions:
            top[col[p]] = "\\"
            top[col[p + 1]] = "/"
            bottom[col[p]] = "/"
            bottom[col[p + 1]] = "\\"
        lines.append("".join(top).rstrip())
        lines.append("".join(bottom).rstrip())
    if tangle.height == 1:
        lines.append(vertical_line())
    if spec.labels:
        lines.append(label_line(tangle.perms[-1].wires))
    return "\n".join(lines) + "\n"


def _render_svg(tangle: Tangle, spec: RenderSpec) -> str:
    n = tangle.n
    h = tangle.height
    dx = spec.column_width * _SVG_UNIT
    dy = spec.row_height * _SVG_UNIT

    def x(position: int) -> int:
        return _SVG_MARGIN + (position - 1) * dx

    def y(row: int) -> int:
        return _SVG_MARGIN + (row - 1) * dy

    width = 2 * _SVG_MARGIN + (n - 1) * dx
    height = 2 * _SVG_MARGIN + (h - 1) * dy
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    ]
    for wire in range(1, n + 1):
        points = " ".join(
            f"{x(perm.position_of(wire))},{y(row)}"
            for row, perm in enumerate(tangle.perms, start=1)
        )
        color = _PALETTE[(wire - 1) % len(_PALETTE)]
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="2" '
            f'points="{points}"/>'
        )
    if spec.labels:
        for perm, ly in (
            (tangle.perms[0], y(1) - 8),
            (tangle.perms[-1], y(h) + 18),
        ):
            for wire in range(1, n + 1):
                lx = x(perm.position_of(wire))
                parts.append(
                    f'<text x="{lx}" y="{ly}" font-size="12" '
                    f'text-anchor="middle">{wire}</text>'
                )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
