"""The line-oriented quiver file format.

::

    # comments run to end of line
    n 2
    edge 1 2 2 2      # edge <i> <j> <b_ij> <b_ji>
    arrow 1 2         # arrow <i> <j> means i -> j

``n`` must be the first non-comment line.  Arrow lines are optional; when
present there must be exactly one per edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .cartan import ValuedGraph, validate_graph
from .errors import ParseError
from .quiver import Orientation, parse_orientation


@dataclass(frozen=True)
class QuiverFile:
    graph: ValuedGraph
    orientation: Orientation | None


def _ints(tokens, count, lineno):
    if len(tokens) != count:
        raise ParseError(f"line {lineno}: expected {count} integers, got {len(tokens)}")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: not an integer in {' '.join(tokens)!r}") from None


def parse_quiver(text: str) -> QuiverFile:
    n = None
    edges, arrows = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if n is None:
            if key != "n":
                raise ParseError(f"line {lineno}: first directive must be 'n <count>'")
            (n,) = _ints(rest, 1, lineno)
        elif key == "edge":
            edges.append(tuple(_ints(rest, 4, lineno)))
        elif key == "arrow":
            arrows.append(tuple(_ints(rest, 2, lineno)))
        elif key == "n":
            raise ParseError(f"line {lineno}: 'n' given twice")
        else:
            raise ParseError(f"line {lineno}: unknown directive {key!r}")
    if n is None:
        raise ParseError("empty quiver file")
    g = validate_graph(n, edges)
    o = parse_orientation(g, arrows) if arrows else None
    return QuiverFile(g, o)


def load_quiver(path) -> QuiverFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_quiver(text)


def format_quiver(g: ValuedGraph, o: Orientation | None = None) -> str:
    lines = [f"n {g.n}", *g.edge_lines()]
    if o is not None:
        lines += o.arrow_lines()
    return "\n".join(lines) + "\n"
