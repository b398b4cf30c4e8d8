"""graph6 text format: 6-bit groups with bias 63, upper-triangle column order.

One graph per line; the optional ">>graph6<<" header is tolerated on input
and never written.  sparse6/digraph6 are out of scope.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"
N_MAX = 68719476735  # format limit (36-bit vertex count)


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _sextets(text: str, start: int):
    for i in range(start, len(text)):
        c = ord(text[i]) - 63
        if not 0 <= c <= 63:
            raise Graph6Error(f"character {text[i]!r} out of graph6 range", i)
        yield i, c


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (an optional header prefix is skipped)."""
    line = text.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line", 0)
    vals = []
    for _, c in _sextets(line, 0):
        vals.append(c)
    # length prefix: 1 sextet (n <= 62), '~' + 3, or '~~' + 6
    if vals[0] < 63:
        n, body = vals[0], 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated length prefix", len(line))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated length prefix", len(line))
        n = 0
        for c in vals[2:8]:
            n = (n << 6) | c
        body = 8
    need = (n * (n - 1) // 2 + 5) // 6
    if len(vals) - body != need:
        raise Graph6Error(
            f"body has {len(vals) - body} sextets, expected {need} for n={n}", body
        )
    bits = n * (n - 1) // 2
    edges = []
    pos = 0
    i, j = 0, 1  # runs over pairs in column order (0,1),(0,2),(1,2),(0,3),...
    for idx, c in enumerate(vals[body:]):
        for shift in range(5, -1, -1):
            if pos < bits:
                if (c >> shift) & 1:
                    edges.append((i, j))
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif (c >> shift) & 1:
                raise Graph6Error("nonzero trailing padding bit", body + idx)
            pos += 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Canonical graph6 line (no header) for a graph with n <= 68719476735."""
    n = g.n
    if n > N_MAX:
        raise ValueError(f"graph6 supports at most {N_MAX} vertices")
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~"] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]
    else:
        out = ["~~"] + [chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def iter_graph6(lines):
    """Yield (line_number, stripped_line) for nonempty, non-header lines."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line == HEADER:
            continue
        yield lineno, line
