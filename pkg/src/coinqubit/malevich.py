"""Malevich triada: three squares encoding a coin triple.

Each pair of adjacent coin probabilities fixes one square side:

    L1 = sqrt(2 + 2*p1^2 - 4*p1 - 2*p2 + 2*p2^2 + 2*p1*p2)

and cyclically for L2 (p2, p3) and L3 (p3, p1).  The squares are drawn
black, red and white in that order.  The side polynomial is nonnegative on
the unit square and reaches its maximum sqrt(2) at corners such as
(0, 0); tiny negative radicands from floating error are clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .states import ProbabilityTriple

SIDE_MAX = math.sqrt(2.0)
_RADICAND_CLAMP = 1e-12

# Square color assignment L1/L2/L3 -> black/red/white is our convention;
# only the set of three colors is fixed.
_FILLS = ("black", "red", "white")
_MARGIN = 10.0


@dataclass(frozen=True)
class MalevichTriada:
    """Side lengths of the black, red and white squares."""

    L1: float
    L2: float
    L3: float

    def __post_init__(self) -> None:
        for name in ("L1", "L2", "L3"):
            value = float(getattr(self, name))
            if not 0.0 <= value <= SIDE_MAX + 1e-9:
                raise DomainError(
                    f"{name} must lie in [0, sqrt(2)], got {value!r}"
                )
            object.__setattr__(self, name, value)

    def sides(self) -> tuple[float, float, float]:
        return self.L1, self.L2, self.L3


def _side(a: float, b: float) -> float:
    radicand = 2.0 + 2.0 * a * a - 4.0 * a - 2.0 * b + 2.0 * b * b + 2.0 * a * b
    if radicand < 0.0:
        assert radicand > -_RADICAND_CLAMP, (
            f"side radicand {radicand} is negative beyond floating error"
        )
        radicand = 0.0
    return math.sqrt(radicand)


def triada_sides(p: ProbabilityTriple) -> MalevichTriada:
    """Side lengths for a triple; classical triples are allowed."""
    return MalevichTriada(
        _side(p.p1, p.p2), _side(p.p2, p.p3), _side(p.p3, p.p1)
    )


def _fmt(value: float) -> str:
    """Fixed-point coordinate formatting so output is byte-stable."""
    return f"{value:.3f}"


def render_svg(
    triada: MalevichTriada, scale: float = 100.0, labels: bool = False
) -> str:
    """Deterministic SVG document for a triada.

    The squares sit left to right (black, red, white), bottom-aligned on a
    common baseline, separated by a gap of 0.25 * max(L) * scale.  The
    white square is stroked black so it stays visible.  Squares of zero
    side are suppressed.  Identical inputs yield byte-identical output.
    """
    if not scale > 0.0:
        raise ValueError(f"scale must be positive, got {scale!r}")
    sides = [side * scale for side in triada.sides()]
    gap = 0.25 * max(triada.sides()) * scale
    baseline = _MARGIN + max(sides)
    content_width = sum(sides) + 2.0 * gap
    width = content_width + 2.0 * _MARGIN
    height = baseline + (22.0 if labels else 0.0) + _MARGIN

    body = []
    x = _MARGIN
    for size, fill, side in zip(sides, _FILLS, triada.sides()):
        if size > 0.0:
            stroke = ' stroke="black" stroke-width="1"' if fill == "white" else ""
            body.append(
                f'<rect x="{_fmt(x)}" y="{_fmt(baseline - size)}" '
                f'width="{_fmt(size)}" height="{_fmt(size)}" '
                f'fill="{fill}"{stroke}/>'
            )
            if labels:
                body.append(
                    f'<text x="{_fmt(x + size / 2.0)}" '
                    f'y="{_fmt(baseline + 14.0)}" text-anchor="middle" '
                    f'font-family="sans-serif" font-size="10">'
                    f"{side:.5f}</text>"
                )
        x += size + gap

    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        *body,
        "</svg>",
    ]
    return "\n".join(lines) + "\n"
