"""graph6 encoding and decoding.

Upper-triangle bits are taken column by column, (0,1), (0,2), (1,2), (0,3), ...,
packed six to a byte (most significant first), zero padded, each byte offset
by 63.  Orders up to 62 use a single size byte; 63 and 64 use the ``~`` form.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import CapacityError, Graph6Error
from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    adj = g.adj
    out = [_size_prefix(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        base = len(HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range", base + k)
    if s[0] == "~":
        if len(s) < 4:
            raise Graph6Error("truncated size field", base + len(s))
        if s[1] == "~":
            raise Graph6Error("8-byte size field not supported", base + 1)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n < 63:
            raise Graph6Error(f"long size field used for n={n}", base + 1)
        pos = 4
    else:
        n = ord(s[0]) - 63
        pos = 1
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 string declares {n} vertices, capacity is {MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes, found {len(body)}", base + len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing characters after graph data", base + pos + nbytes)

    rows = [0] * n
    k = 0
    i, j = 0, 1
    for b, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if k >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits", base + pos + b)
                continue
            if bit:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i = 0
                j += 1
    return Graph.trusted(n, rows)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a graph6 list: one graph per line, ``#`` comments and blanks skipped."""
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        yield from_graph6(line)


def read_graph6_file(fh: TextIO) -> list[Graph]:
    return list(read_graph6_lines(fh))


def write_graph6_lines(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(to_graph6(g) + "\n")
