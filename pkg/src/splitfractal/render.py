"""SVG figures of families: four offset sheets per basic square, or flat."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple
from xml.sax.saxutils import quoteattr

from .errors import PreconditionError
from .spaces import QUADRANT_SIDES, BasicSquare

SHEET_COLOURS = {1: "#4c72b0", 2: "#dd8452", 3: "#55a868", 4: "#c44e52"}
SHEAR = Fraction(1, 4)


@dataclass(frozen=True)
class RenderSpec:
    style: str = "four_sheet_offset"
    width: int = 600
    height: int = 600
    offset: Tuple[Fraction, Fraction] = (Fraction(1, 25), Fraction(1, 25))
    stroke: bool = True
    fill: bool = True
    markers: bool = True

    def __post_init__(self):
        if self.style not in ("four_sheet_offset", "flat"):
            raise PreconditionError(f"unknown style {self.style!r}")
        if self.width <= 0 or self.height <= 0:
            raise PreconditionError("image size must be positive")


def _fmt(v) -> str:
    return f"{float(v):.4f}"


def _header(spec: RenderSpec) -> str:
    return (f'<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{spec.width}" height="{spec.height}" '
            f'viewBox="0 0 {spec.width} {spec.height}">\n')


def _style(spec: RenderSpec, colour: str) -> str:
    fill = colour if spec.fill else "none"
    stroke = 'stroke="#222222" stroke-width="0.5"' if spec.stroke else 'stroke="none"'
    return f'fill="{fill}" fill-opacity="0.55" {stroke}'


def _flat(pieces: Sequence[BasicSquare], spec: RenderSpec):
    out = []
    W, H = spec.width, spec.height
    for B in pieces:
        x, y = B.a * W, (1 - B.d) * H
        w, h = (B.b - B.a) * W, (B.d - B.c) * H
        out.append(f'<rect data-cell={quoteattr(str(B))} x="{_fmt(x)}" y="{_fmt(y)}" '
                   f'width="{_fmt(w)}" height="{_fmt(h)}" {_style(spec, "#333333")}/>\n')
    return out


def _sheet_transform(spec: RenderSpec, t: int):
    """Unit-square coordinates of sheet ``t`` to pixel coordinates."""
    ox, oy = spec.offset
    k = t - 1
    span_x = 1 + SHEAR + 3 * abs(ox)
    span_y = 1 + 3 * abs(oy)

    def to_px(u, v):
        X = (u + SHEAR * v + k * ox + (3 * abs(ox) if ox < 0 else 0)) / span_x
        Y = (v + k * oy + (3 * abs(oy) if oy < 0 else 0)) / span_y
        return X * spec.width, (1 - Y) * spec.height

    return to_px


def _corner_markers(B: BasicSquare, t: int, to_px):
    # a corner is drawn filled when both of its edges are closed in sheet t
    sx, sy = QUADRANT_SIDES[t]
    closed_x = {B.a: sx == 1, B.b: sx == 0}
    closed_y = {B.c: sy == 1, B.d: sy == 0}
    out = []
    for u in (B.a, B.b):
        for v in (B.c, B.d):
            cx, cy = closed_x[u], closed_y[v]
            if not (cx or cy):
                continue
            X, Y = to_px(u, v)
            fill = "#000000" if cx and cy else "#ffffff"
            out.append(f'<circle cx="{_fmt(X)}" cy="{_fmt(Y)}" r="1.5" fill="{fill}" '
                       f'stroke="#000000" stroke-width="0.4"/>\n')
    return out


def _four_sheets(pieces: Sequence[BasicSquare], spec: RenderSpec):
    out = []
    for t in (1, 2, 3, 4):
        to_px = _sheet_transform(spec, t)
        out.append(f'<g data-sheet="{t}">\n')
        for B in pieces:
            corners = [to_px(B.a, B.c), to_px(B.b, B.c), to_px(B.b, B.d), to_px(B.a, B.d)]
            pts = " ".join(f"{_fmt(X)},{_fmt(Y)}" for X, Y in corners)
            out.append(f'<polygon data-cell={quoteattr(str(B))} data-t="{t}" points="{pts}" '
                       f'{_style(spec, SHEET_COLOURS[t])}/>\n')
            if spec.markers:
                out.extend(_corner_markers(B, t, to_px))
        out.append("</g>\n")
    return out


def render_svg(pieces: Sequence[BasicSquare], spec: RenderSpec = RenderSpec()) -> str:
    """SVG 1.1 document drawing ``pieces`` (given in the order to draw them)."""
    for B in pieces:
        if not isinstance(B, BasicSquare):
            raise PreconditionError("only square families can be rendered")
    body = _flat(pieces, spec) if spec.style == "flat" else _four_sheets(pieces, spec)
    return _header(spec) + "".join(body) + "</svg>\n"
