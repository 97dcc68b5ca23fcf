"""Plain-text pictures of matchings, Dyck paths and posets."""

from __future__ import annotations

from .matchings import Matching
from .posets import Poset


def render_matching(m: Matching) -> str:
    """Arc diagram: one row per stack of non-overlapping arcs, longest arcs on top."""
    if m.n == 0:
        return "(empty matching)"
    width = 4
    cols = 2 * m.n
    rows: list[list[tuple[int, int]]] = []
    for a, b in sorted(m.arcs, key=lambda arc: (arc[0] - arc[1], arc[0])):
        for row in rows:
            if all(b < c or d < a for c, d in row):
                row.append((a, b))
                break
        else:
            rows.append([(a, b)])
    lines = []
    above: set[int] = set()
    for row in rows:
        cells = [" "] * (cols * width)
        for a, b in row:
            lo, hi = (a - 1) * width, (b - 1) * width
            for i in range(lo, hi + 1):
                cells[i] = "-"
            cells[lo] = cells[hi] = "+"
        for p in above:
            cells[(p - 1) * width] = "|"
        lines.append("".join(cells).rstrip())
        above.update(p for arc in row for p in arc)
    lines.append("".join(f"{'o':<{width}}" for _ in range(cols)).rstrip())
    lines.append("".join(f"{p:<{width}}" for p in range(1, cols + 1)).rstrip())
    return "\n".join(lines)


def render_dyck(mu: str) -> str:
    if not mu:
        return "(empty path)"
    heights = []
    h = 0
    for step in mu:
        heights.append(h if step == "U" else h - 1)
        h += 1 if step == "U" else -1
    top = max(heights) + 1
    grid = [[" "] * len(mu) for _ in range(top)]
    for i, (step, level) in enumerate(zip(mu, heights)):
        grid[top - 1 - level][i] = "/" if step == "U" else "\\"
    return "\n".join("".join(row).rstrip() for row in grid)


def render_poset(p: Poset) -> str:
    """Elements grouped by down-set level, highest level first, then the cover relations."""
    if p.n == 0:
        return "(empty poset)"
    levels = p.down_levels
    lines = []
    for level in range(max(levels), -1, -1):
        names = " ".join(str(x + 1) for x in range(p.n) if levels[x] == level)
        lines.append(f"level {level}: {names}")
    covers = ", ".join(f"{x + 1}<{y + 1}" for x, y in p.covers())
    lines.append(f"covers: {covers or 'none'}")
    return "\n".join(lines)
