"""Reader and writer for the graph6 text format.

One graph per line; each line encodes the vertex count followed by the
column-major upper triangle of the adjacency matrix, six bits per
printable byte (offset 63).  The parser is strict by default: data bytes
must lie in 63..126 and the padding bits of the final byte must be zero.
A lenient mode tolerates nonzero padding, which some historical files
contain.  Parsing is pure; the file reader streams line by line so large
catalogs never load wholly into memory.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, build_graph

HEADER = b">>graph6<<"
_MAX_N = 258047


class Graph6Error(ValueError):
    """Parse or encode failure; ``offset`` is the offending byte index."""

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph6Record:
    """One line of a graph6 file plus its decoded vertex count."""

    text: str
    n: int


def _as_bytes(line) -> bytes:
    if isinstance(line, str):
        return line.encode("ascii", errors="strict")
    return bytes(line)


def _check_range(data: bytes, start: int):
    for i in range(start, len(data)):
        b = data[i]
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b} outside graph6 range 63..126", offset=i)


def _decode_n(data: bytes):
    """Return (n, offset of first edge byte)."""
    if not data:
        raise Graph6Error("empty graph6 line", offset=0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6Error("vertex counts above 258047 not supported", offset=0)
    if len(data) < 4:
        raise Graph6Error("truncated size header", offset=len(data))
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    return n, 4


def parse_graph6(line, strict: bool = True) -> Graph:
    """Decode one graph6 line into a graph.

    Accepts ``str`` or ``bytes``, with or without the ``>>graph6<<``
    prologue.  In strict mode nonzero padding bits are rejected.
    """
    data = _as_bytes(line).strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6Error("empty graph6 line", offset=0)
    _check_range(data, 0)
    n, off = _decode_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - off < nbytes:
        raise Graph6Error(
            f"truncated edge data: need {nbytes} bytes, have {len(data) - off}",
            offset=len(data),
        )
    if len(data) - off > nbytes:
        raise Graph6Error("trailing bytes after edge data", offset=off + nbytes)

    edges = []
    bit = 0
    i, j = 0, 1  # current upper-triangle cell, column-major
    for k in range(off, off + nbytes):
        group = data[k] - 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if strict and (group >> shift) & 1:
                    raise Graph6Error("nonzero padding bits", offset=k)
                continue
            if (group >> shift) & 1:
                edges.append((i, j))
            bit += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return build_graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph canonically (no prologue, zero padding)."""
    n = g.n
    if n > _MAX_N:
        raise Graph6Error(f"vertex count {n} above graph6 limit {_MAX_N}")
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    adj = g.adj_masks()
    group = 0
    nfilled = 0
    for j in range(1, n):
        col = adj[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            nfilled += 1
            if nfilled == 6:
                out.append(group + 63)
                group = 0
                nfilled = 0
    if nfilled:
        out.append((group << (6 - nfilled)) + 63)
    return bytes(out).decode("ascii")


def iter_graph6(source, strict: bool = True):
    """Yield graphs from a graph6 file path or open text/binary file.

    Blank lines are skipped; the optional ``>>graph6<<`` prologue may
    prefix the first line or stand alone.  Newlines may be LF or CRLF.
    """
    for record in iter_graph6_records(source):
        yield parse_graph6(record.text, strict=strict)


def iter_graph6_records(source):
    """Stream :class:`Graph6Record` values from a file without full parsing."""
    if hasattr(source, "read"):
        yield from _records_from_file(source)
    else:
        with open(source, "rb") as handle:
            yield from _records_from_file(handle)


def _records_from_file(handle):
    for raw in handle:
        data = raw.encode("ascii") if isinstance(raw, str) else raw
        data = data.rstrip(b"\r\n").strip()
        if data.startswith(HEADER):
            data = data[len(HEADER):]
        if not data:
            continue
        _check_range(data, 0)
        n, _ = _decode_n(data)
        yield Graph6Record(text=data.decode("ascii"), n=n)


def write_graph6_file(path, graphs) -> int:
    """Write graphs one per line; returns the number written."""
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as handle:
        for g in graphs:
            handle.write(write_graph6(g) + "\n")
            count += 1
    return count
