"""SVG and ASCII drawings of a single lattice path with optional vertical guides."""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import LatticeSequence

GUIDE_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")


@dataclass(frozen=True)
class RenderSpec:
    sequence: LatticeSequence
    markers: tuple[int, ...] = ()
    format: str = "svg"
    cell: int = 24

    def __post_init__(self):
        if self.format not in ("svg", "ascii"):
            raise ValueError(f"unknown format {self.format!r}")
        if self.cell <= 0:
            raise ValueError("cell size must be positive")
        for x in self.markers:
            if not 0 <= x <= self.sequence.width():
                raise ValueError(f"marker {x} outside [0, {self.sequence.width()}]")


def path_points(L: LatticeSequence) -> list[tuple[int, int]]:
    """Lattice points visited by the path, one per unit step, from (0, 0)."""
    e = L.entries
    m = L.width()
    pts = [(0, 0)]
    for i in range(m + 1):
        for y in range(e[i] + 1, e[i + 1] + 1):
            pts.append((i, y))
        if i < m:
            pts.append((i + 1, e[i + 1]))
    return pts


def to_svg(spec: RenderSpec) -> str:
    L, c = spec.sequence, spec.cell
    m, h = L.width(), L.height()
    pad = c
    W, H = m * c + 2 * pad, h * c + 2 * pad

    def px(x: int, y: int) -> tuple[int, int]:
        return pad + x * c, pad + (h - y) * c

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" '
           f'viewBox="0 0 {W} {H}">']
    out.append('<g stroke="#bbbbbb" stroke-width="1">')
    for x in range(m + 1):
        (x0, y0), (_, y1) = px(x, 0), px(x, h)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}"/>')
    for y in range(h + 1):
        (x0, y0), (x1, _) = px(0, y), px(m, y)
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/>')
    out.append("</g>")
    for idx, x in enumerate(spec.markers):
        (x0, y0), (_, y1) = px(x, 0), px(x, h)
        color = GUIDE_COLORS[idx % len(GUIDE_COLORS)]
        out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="{color}" '
                   f'stroke-width="3" stroke-dasharray="6 4"/>')
    pts = " ".join(f"{a},{b}" for a, b in (px(x, y) for x, y in path_points(L)))
    out.append(f'<polyline fill="none" stroke="#000000" stroke-width="4" '
               f'stroke-linejoin="round" points="{pts}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_ascii(spec: RenderSpec) -> str:
    """Text drawing: ``+`` path vertices, ``---`` and ``|`` path steps,
    ``.`` other lattice points, ``:`` guide columns."""
    L = spec.sequence
    m, h = L.width(), L.height()
    cols, rows = 4 * m + 1, 2 * h + 1
    grid = [[" "] * cols for _ in range(rows)]
    for y in range(h + 1):
        for x in range(m + 1):
            grid[2 * (h - y)][4 * x] = "."
    for x in spec.markers:
        for row in range(rows):
            grid[row][4 * x] = ":"
    pts = path_points(L)
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        if y0 == y1:
            for d in (1, 2, 3):
                grid[2 * (h - y0)][4 * x0 + d] = "-"
        else:
            grid[2 * (h - y0) - 1][4 * x0] = "|"
    for x, y in pts:
        grid[2 * (h - y)][4 * x] = "+"
    return "\n".join("".join(row).rstrip() for row in grid) + "\n"


def render(spec: RenderSpec) -> str:
    return to_svg(spec) if spec.format == "svg" else to_ascii(spec)
