"""graph6 and edge-list text formats.

graph6 follows the nauty definition: the order is written as one byte
(n <= 62), as ``~`` plus three bytes (n <= 258047) or ``~~`` plus six bytes,
each byte carrying six bits offset by 63.  The upper triangle follows in
column-major order ``(0,1), (0,2), (1,2), (0,3), ...``, padded with zero bits
to a multiple of six.
"""
from __future__ import annotations

from . import graph as _graph
from .graph import Graph

G6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Base class for graph6 parse errors."""


class Graph6HeaderError(Graph6Error):
    """The order prefix is missing or malformed."""


class Graph6ByteError(Graph6Error):
    """A byte lies outside the printable range 63..126."""


class Graph6TruncatedError(Graph6Error):
    """The bit payload is shorter than the order requires."""


class Graph6PayloadError(Graph6Error):
    """Payload too long or nonzero padding bits (non-canonical string)."""


class EdgeListError(ValueError):
    pass


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph, header: bool = False) -> str:
    n = g.n
    rows = g.rows
    out = [G6_HEADER] if header else []
    out.append(_encode_n(n))
    acc = nbits = 0
    chars = []
    for j in range(1, n):
        r = rows[j]
        for i in range(j):
            acc = (acc << 1) | (r >> i & 1)
            nbits += 1
            if nbits == 6:
                chars.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        chars.append(chr((acc << (6 - nbits)) + 63))
    out.append("".join(chars))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
    if not s:
        raise Graph6TruncatedError("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ByteError(f"byte {ord(ch)} at position {pos} outside 63..126")
    vals = [ord(ch) - 63 for ch in s]

    if vals[0] != 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6HeaderError("truncated 8-byte order prefix")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        if n <= 258047:
            raise Graph6HeaderError("non-canonical 8-byte order prefix")
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise Graph6HeaderError("truncated 4-byte order prefix")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        if n <= 62:
            raise Graph6HeaderError("non-canonical 4-byte order prefix")
        body = vals[4:]

    if n > _graph.MAX_VERTICES:
        raise Graph6HeaderError(f"n={n} exceeds MAX_VERTICES={_graph.MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) < need:
        raise Graph6TruncatedError(f"payload has {len(body)} bytes, n={n} needs {need}")
    if len(body) > need:
        raise Graph6PayloadError(f"payload has {len(body) - need} trailing bytes")
    pad = need * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6PayloadError("nonzero padding bits")

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph.from_rows(rows, check=False)


def emit_edgelist(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines; an ``n=<int>`` line (or the ``n`` argument) fixes the order.

    Blank lines and ``#`` comments are ignored.  Without a declared order the
    graph has ``max id + 1`` vertices.
    """
    declared = n
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            try:
                value = int(line[2:])
            except ValueError:
                raise EdgeListError(f"line {lineno}: bad header {raw!r}") from None
            if declared is not None and declared != value:
                raise EdgeListError(f"line {lineno}: header n={value} conflicts with n={declared}")
            declared = value
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(f"line {lineno}: negative vertex id")
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
    if declared is None:
        declared = 1 + max((max(e) for e in edges), default=-1)
    try:
        return Graph(declared, edges)
    except _graph.GraphError as exc:
        raise EdgeListError(str(exc)) from exc


def parse_graph(text: str) -> Graph:
    """Parse either format: edge lists are recognised by whitespace or an ``n=`` header."""
    stripped = text.strip()
    first = stripped.splitlines()[0] if stripped else ""
    if first.startswith("n=") or " " in first or "\t" in first or first.startswith("#"):
        return parse_edgelist(text)
    return parse_graph6(stripped)
