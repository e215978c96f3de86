"""Edge-list file format.

UTF-8 text, LF line endings, no trailing whitespace. The first line is
`# nodes=<N>`; each following line is `<source>\t<target>` with 0-based
decimal node ids. Writing always emits edges in ascending (source, target)
order, so write -> read -> write is byte-identical.
"""

import io
import re

from .graph import DirectedGraph, GraphError

_HEADER_RE = re.compile(r"^# nodes=(\d+)$")
_EDGE_RE = re.compile(r"^(\d+)\t(\d+)$")


class EdgeListParseError(ValueError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def read_edge_list(path) -> DirectedGraph:
    if hasattr(path, "read"):
        return _parse(path)
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return _parse(fh)


def _parse(fh) -> DirectedGraph:
    header = fh.readline()
    if not header:
        raise EdgeListParseError("missing `# nodes=<N>` header", 1)
    m = _HEADER_RE.match(header.rstrip("\n"))
    if not m:
        raise EdgeListParseError(
            f"expected `# nodes=<N>` header, got {header.rstrip()!r}", 1
        )
    try:
        g = DirectedGraph(int(m.group(1)))
    except GraphError as exc:
        raise EdgeListParseError(str(exc), 1) from exc
    for lineno, line in enumerate(fh, start=2):
        text = line.rstrip("\n")
        if not text:
            raise EdgeListParseError("blank line", lineno)
        em = _EDGE_RE.match(text)
        if not em:
            raise EdgeListParseError(
                f"expected `<source>\\t<target>`, got {text!r}", lineno
            )
        try:
            g.add_edge(int(em.group(1)), int(em.group(2)))
        except GraphError as exc:
            raise EdgeListParseError(str(exc), lineno) from exc
    return g


def write_edge_list(g: DirectedGraph, path) -> None:
    if hasattr(path, "write"):
        _dump(g, path)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        _dump(g, fh)


def _dump(g: DirectedGraph, fh) -> None:
    fh.write(f"# nodes={g.n}\n")
    for u, v in g.sorted_edges():
        fh.write(f"{u}\t{v}\n")


def dumps(g: DirectedGraph) -> str:
    buf = io.StringIO()
    _dump(g, buf)
    return buf.getvalue()


def loads(text: str) -> DirectedGraph:
    return _parse(io.StringIO(text))
