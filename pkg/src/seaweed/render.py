"""DOT and ASCII drawings of meanders."""

from __future__ import annotations

from .meander import Meander

__all__ = ["to_dot", "to_ascii"]


def to_dot(m: Meander, name: str = "meander") -> str:
    """Graphviz source with vertices pinned on one line (use ``neato -n``).

    Edges carry ``side=top`` or ``side=bottom``; tail vertices carry
    ``tail=true`` and are filled yellow.
    """
    lines = [
        f'graph "{name}" {{',
        "  layout=neato;",
        "  node [shape=circle, fixedsize=true, width=0.4];",
        "  { rank=same; " + " ".join(str(v) for v in range(1, m.n + 1)) + "; }",
    ]
    for v in range(1, m.n + 1):
        attrs = [f'pos="{v},0!"']
        if v in m.tail:
            attrs += ["tail=true", "style=filled", "fillcolor=yellow"]
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for j, k in m.top_pairs():
        lines.append(f"  {j} -- {k} [side=top, tailport=n, headport=n];")
    for j, k in m.bottom_pairs():
        lines.append(f"  {j} -- {k} [side=bottom, tailport=s, headport=s];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _heights(pairs: list[tuple[int, int]]) -> dict[tuple[int, int], int]:
    # nested arcs only; an arc sits one row above the tallest arc under it
    h: dict[tuple[int, int], int] = {}
    for j, k in sorted(pairs, key=lambda p: p[1] - p[0]):
        inner = [h[p] for p in h if j < p[0] and p[1] < k]
        h[(j, k)] = 1 + max(inner, default=0)
    return h


def _arc_rows(pairs, n: int, col) -> list[str]:
    heights = _heights(pairs)
    top = max(heights.values(), default=0)
    width = col(n) + 2
    rows = []
    for r in range(top, 0, -1):
        row = [" "] * width
        for (j, k), h in heights.items():
            if h == r:
                for x in range(col(j), col(k) + 1):
                    row[x] = "-"
                row[col(j)] = row[col(k)] = "+"
            elif h > r:
                row[col(j)] = row[col(k)] = "|"
        rows.append("".join(row).rstrip())
    return rows


def to_ascii(m: Meander) -> str:
    """Arcs as bracket levels above and below a line of vertex labels.

    Tail vertices are shown in square brackets.
    """
    cell = len(str(m.n)) + 3

    def col(v: int) -> int:
        return (v - 1) * cell + cell // 2

    labels = [" "] * (col(m.n) + cell)
    for v in range(1, m.n + 1):
        text = f"[{v}]" if v in m.tail else str(v)
        start = col(v) - (len(text) - 1) // 2
        for i, ch in enumerate(text):
            labels[start + i] = ch
    above = _arc_rows(m.top_pairs(), m.n, col)
    below = list(reversed(_arc_rows(m.bottom_pairs(), m.n, col)))
    return "\n".join(above + ["".join(labels).rstrip()] + below) + "\n"
