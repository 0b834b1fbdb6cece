"""Text formats: complex and cochain files, point CSV, barcode JSON/SVG."""

from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from .complex import Cochain, FilteredComplex, Simplex, build_filtered_complex, make_simplex
from .errors import (
    MissingDegree,
    MixedDegrees,
    ParseError,
    UnsupportedCochain,
)
from .persistence import NEG_INF, Barcode


def _simplex_lines(text: str) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        verts = []
        col = 0
        for token in body.split():
            col = body.index(token, col) + 1
            try:
                v = int(token)
            except ValueError:
                raise ParseError(f"expected an integer vertex id, got {token!r}", lineno, col) from None
            if v < 0:
                raise ParseError(f"vertex ids must be nonnegative, got {v}", lineno, col)
            verts.append(v)
            col += len(token) - 1
        out.append((lineno, tuple(verts)))
    return out


def parse_complex_file(text: str) -> FilteredComplex:
    """One simplex per line; line order is filtration order; ``#`` comments."""
    return build_filtered_complex(verts for _, verts in _simplex_lines(text))


def parse_cochain_file(text: str, X: FilteredComplex, degree: int | None = None) -> Cochain:
    """Simplices of a single dimension, all members of ``X``.

    An empty file needs ``degree`` to say which zero cochain it is.
    """
    support: set[Simplex] = set()
    for lineno, verts in _simplex_lines(text):
        s = make_simplex(verts)
        d = len(s) - 1
        if degree is None:
            degree = d
        elif d != degree:
            raise MixedDegrees(f"line {lineno}: {s} has dimension {d}, expected {degree}")
        if s not in X:
            raise UnsupportedCochain(f"line {lineno}: {s} is not a simplex of the complex")
        support ^= {s}
    if degree is None:
        raise MissingDegree("empty cochain file; pass the degree explicitly")
    return Cochain(degree, frozenset(support))


def format_simplices(simplices) -> str:
    return "".join(" ".join(map(str, s)) + "\n" for s in simplices)


def format_complex(X: FilteredComplex) -> str:
    return format_simplices(X.simplices)


def format_cochain(alpha: Cochain, X: FilteredComplex) -> str:
    return format_simplices(alpha.sorted_in(X))


def parse_points_csv(text: str) -> np.ndarray:
    """Comma-separated coordinates, one point per line, optional header."""
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise ParseError("no points")
    try:
        [float(c) for c in rows[0]]
    except ValueError:
        rows = rows[1:]
        start = 2
    else:
        start = 1
    if not rows:
        raise ParseError("no points")
    points = []
    width = len(rows[0])
    for lineno, row in enumerate(rows, start=start):
        if len(row) != width:
            raise ParseError(f"expected {width} coordinates, got {len(row)}", lineno)
        try:
            coords = [float(c) for c in row]
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if not all(math.isfinite(c) for c in coords):
            raise ParseError("coordinates must be finite", lineno)
        points.append(coords)
    return np.asarray(points, dtype=float)


def _endpoint(x):
    return "-inf" if x == NEG_INF else int(x)


def barcode_records(bc: Barcode) -> list[dict]:
    return [
        {"degree": d, "left": _endpoint(iv.left), "right": iv.right, "count": m}
        for d, iv, m in bc.items()
    ]


def barcode_to_json(bc: Barcode) -> str:
    return json.dumps(barcode_records(bc), indent=2) + "\n"


def barcode_to_text(bc: Barcode) -> str:
    return "".join(f"H{d} {iv} x{m}\n" for d, iv, m in bc.items())


def barcode_to_svg(bc: Barcode, n: int, width: int = 640) -> str:
    """One horizontal bar per interval, grouped by degree.

    Bars alive in the final complex get a left-pointing arrowhead.
    """
    margin, label_w, row_h, gap = 20, 40, 14, 10
    plot_w = width - 2 * margin - label_w
    scale = plot_w / max(n, 1)
    rows = []
    for d, iv, m in bc.items():
        rows.extend([(d, iv)] * m)
    height = 2 * margin + len(rows) * row_h + gap * len(bc.degrees()) + 20
    x0 = margin + label_w
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    y = margin
    prev = None
    for d, iv in rows:
        if d != prev:
            if prev is not None:
                y += gap
            parts.append(
                f'<text x="{margin}" y="{y + row_h - 3}" font-size="11" font-family="monospace">H{d}</text>'
            )
            prev = d
        left = 0 if iv.left == NEG_INF else iv.left
        xa = x0 + left * scale
        xb = x0 + iv.right * scale
        yc = y + row_h / 2
        parts.append(
            f'<line x1="{xa:.2f}" y1="{yc:.2f}" x2="{xb:.2f}" y2="{yc:.2f}" '
            f'stroke="black" stroke-width="3"/>'
        )
        if iv.right == n:
            parts.append(
                f'<polygon points="{xa - 6:.2f},{yc:.2f} {xa:.2f},{yc - 4:.2f} {xa:.2f},{yc + 4:.2f}" '
                f'fill="black"/>'
            )
        y += row_h
    axis_y = y + 10
    parts.append(
        f'<line x1="{x0}" y1="{axis_y}" x2="{x0 + plot_w:.2f}" y2="{axis_y}" stroke="gray"/>'
    )
    parts.append(f'<text x="{x0}" y="{axis_y + 12}" font-size="10">0</text>')
    parts.append(f'<text x="{x0 + plot_w:.2f}" y="{axis_y + 12}" font-size="10">{n}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
