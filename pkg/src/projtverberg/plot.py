"""
Static SVG pictures of RP^2 in the affine chart z = 1. The chart is
drawn inside a disc; points at infinity sit on the boundary circle at
both ends of their direction, and the line at infinity is the circle.
"""

import math
from xml.sax.saxutils import escape

from .geometry import annihilator

SIZE = 480


class _Chart:
    def __init__(self, finite, size=SIZE):
        self.size = size
        self.cx = self.cy = size / 2
        self.R = 0.45 * size
        if finite:
            xs = [p[0] for p in finite]
            ys = [p[1] for p in finite]
            self.ox = (min(xs) + max(xs)) / 2
            self.oy = (min(ys) + max(ys)) / 2
            spread = max(max(math.hypot(x - self.ox, y - self.oy) for x, y in finite), 1e-9)
        else:
            self.ox = self.oy = 0.0
            spread = 1.0
        # finite data fills 75% of the disc
        self.scale = 0.75 * self.R / spread
        self.world_radius = self.R / self.scale

    def to_px(self, x, y):
        return (self.cx + (x - self.ox) * self.scale, self.cy - (y - self.oy) * self.scale)

    def boundary(self, dx, dy):
        n = math.hypot(dx, dy)
        return (self.cx + self.R * dx / n, self.cy - self.R * dy / n)

    def line(self, a, b, c):
        """Chord of a x + b y + c = 0 inside the disc, or None."""
        n2 = a * a + b * b
        if n2 == 0:
            return None
        # closest point of the line to the chart center
        t = -(a * self.ox + b * self.oy + c) / n2
        px, py = self.ox + a * t, self.oy + b * t
        dist = math.hypot(px - self.ox, py - self.oy)
        if dist >= self.world_radius:
            return None
        half = math.sqrt(self.world_radius ** 2 - dist ** 2)
        ux, uy = -b / math.sqrt(n2), a / math.sqrt(n2)
        return (self.to_px(px - ux * half, py - uy * half),
                self.to_px(px + ux * half, py + uy * half))


def _f(v):
    return [float(x) for x in v]


def _point_svg(chart, coords, r, style):
    x, y, z = _f(coords)
    if z != 0:
        px, py = chart.to_px(x / z, y / z)
        return ['<circle cx="%.2f" cy="%.2f" r="%g" %s/>' % (px, py, r, style)]
    out = []
    for s in (1, -1):
        px, py = chart.boundary(s * x, s * y)
        out.append('<circle cx="%.2f" cy="%.2f" r="%g" %s/>' % (px, py, r, style))
    return out


def _line_svg(chart, form, style):
    a, b, c = _f(form)
    if a == 0 and b == 0:
        return ['<circle cx="%.2f" cy="%.2f" r="%.2f" fill="none" %s/>'
                % (chart.cx, chart.cy, chart.R, style)]
    seg = chart.line(a, b, c)
    if seg is None:
        return []
    (x1, y1), (x2, y2) = seg
    return ['<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" %s/>' % (x1, y1, x2, y2, style)]


def _flat_svg(chart, S, color):
    if S is None:
        return []
    style = 'stroke="%s" stroke-width="2.5"' % color
    if S.rank == 1:
        return _point_svg(chart, S.basis[0], 6, 'fill="%s" stroke="black"' % color)
    if S.rank == 2:
        form = annihilator(S).basis[0]
        return _line_svg(chart, form, style)
    return []


def render_svg(X, V=None, W=None, pairs=(), title=None, size=SIZE):
    """SVG text for a configuration in RP^2 with optional V, W and hyperplane pairs."""
    if X.d != 2:
        raise ValueError("plots are drawn for d = 2 only")
    finite = []
    for p in X.points:
        x, y, z = _f(p.coords)
        if z != 0:
            finite.append((x / z, y / z))
    chart = _Chart(finite, size)
    body = ['<circle cx="%.2f" cy="%.2f" r="%.2f" fill="#fbfbf7" stroke="#888" '
            'stroke-dasharray="3,3"/>' % (chart.cx, chart.cy, chart.R)]
    for f, g in pairs:
        body += _line_svg(chart, f, 'stroke="#d08020" stroke-dasharray="6,4"')
        body += _line_svg(chart, g, 'stroke="#2080d0" stroke-dasharray="6,4"')
    body += _flat_svg(chart, V, "#b03030")
    body += _flat_svg(chart, W, "#208040")
    for i, p in enumerate(X.points):
        color = "#333" if p.coords[-1] != 0 else "white"
        body += _point_svg(chart, p.coords, 3.5, 'fill="%s" stroke="#333"' % color)
    if title:
        body.append('<text x="8" y="18" font-family="sans-serif" font-size="13">%s</text>'
                    % escape(title))
    legend = [("V", "#b03030"), ("W", "#208040"), ("f = 0", "#d08020"), ("g = 0", "#2080d0")]
    for k, (name, color) in enumerate(legend):
        y = size - 10 - 16 * k
        body.append('<rect x="8" y="%d" width="10" height="10" fill="%s"/>' % (y - 9, color))
        body.append('<text x="22" y="%d" font-family="sans-serif" font-size="11">%s</text>'
                    % (y, escape(name)))
    return ('<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
            'viewBox="0 0 %d %d">\n%s\n</svg>\n' % (size, size, size, size, "\n".join(body)))
