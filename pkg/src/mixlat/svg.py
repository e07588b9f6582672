"""Standalone SVG picture of a planar ray-cone space.

Shows the two extreme rays of the cone, the specific ray, and sample points
``y`` joined to ``Q(y) = y + t0(y) x``.  Every drawn primitive carries its
world coordinates in ``data-*`` attributes so the picture can be checked
without parsing the screen transform.
"""
from xml.sax.saxutils import escape

import numpy as np

from mixlat.core import MixedLatticeError, l_upp
from mixlat.ray import RaySpace

MAX_POINTS = 16
SIZE = 480
MARGIN = 24


def _num(v):
    return format(float(v) + 0.0, ".12g")


def extreme_rays(space):
    """Unit directions of the two edges of a planar polyhedral cone."""
    cands = []
    for a in space.A:
        perp = np.array([-a[1], a[0]]) / np.linalg.norm(a)
        cands.extend([perp, -perp])
    cands = np.array(cands)
    gap = np.min(cands @ space.A.T / np.linalg.norm(space.A, axis=1), axis=1)
    keep = []
    for d in cands[gap >= -1e-12]:
        if not any(np.allclose(d, k) for k in keep):
            keep.append(d)
    if len(keep) != 2:
        raise MixedLatticeError("could not identify the two edges of the cone")
    return keep


def render_svg(space, points):
    """Return SVG text for a 2-D ``RaySpace`` and up to 16 sample points."""
    if not isinstance(space, RaySpace) or space.dim != 2:
        raise MixedLatticeError("plot needs a ray_cone space with n = 2")
    pts = np.atleast_2d(space.element(points)) if len(points) else np.zeros((0, 2))
    if pts.shape[0] > MAX_POINTS:
        raise MixedLatticeError(f"at most {MAX_POINTS} points can be plotted")
    images = l_upp(space, pts) if pts.shape[0] else pts

    reach = max(1.0, float(np.max(np.abs(np.vstack([pts, images, np.zeros((1, 2))])))))
    length = 1.2 * reach
    edges = [length * d for d in extreme_rays(space)]
    ray_end = length * space.x_hat / np.linalg.norm(space.x_hat)
    span = 1.3 * reach
    scale = (SIZE - 2 * MARGIN) / (2 * span)

    def sx(x):
        return _num(MARGIN + (x + span) * scale)

    def sy(y):
        return _num(MARGIN + (span - y) * scale)

    def line(cls, p, q, extra=""):
        return (f'<line class="{cls}" x1="{sx(p[0])}" y1="{sy(p[1])}" x2="{sx(q[0])}" '
                f'y2="{sy(q[1])}" data-x1="{_num(p[0])}" data-y1="{_num(p[1])}" '
                f'data-x2="{_num(q[0])}" data-y2="{_num(q[1])}"{extra}/>')

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        "<style>.facet{stroke:#444;stroke-width:2}.ray{stroke:#c33;stroke-width:2;"
        "stroke-dasharray:6 4}.q-segment{stroke:#36c;stroke-width:1.5}"
        ".sample{fill:#36c}.image{fill:#fff;stroke:#36c}.axis{stroke:#ccc}"
        "text{font:11px sans-serif}</style>",
        line("axis", (-span, 0.0), (span, 0.0)),
        line("axis", (0.0, -span), (0.0, span)),
    ]
    origin = np.zeros(2)
    for e in edges:
        out.append(line("facet", origin, e))
    out.append(line("ray", origin, ray_end))
    for i, (y, q) in enumerate(zip(pts, images)):
        out.append(line("q-segment", y, q, f' data-index="{i}"'))
        out.append(f'<circle class="sample" cx="{sx(y[0])}" cy="{sy(y[1])}" r="3" '
                   f'data-x="{_num(y[0])}" data-y="{_num(y[1])}" data-index="{i}"/>')
        out.append(f'<circle class="image" cx="{sx(q[0])}" cy="{sy(q[1])}" r="3" '
                   f'data-x="{_num(q[0])}" data-y="{_num(q[1])}" data-index="{i}"/>')
        label = escape(f"y{i} = ({_num(y[0])}, {_num(y[1])})")
        out.append(f'<text x="{sx(y[0])}" y="{sy(y[1])}" dx="5" dy="-5">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
