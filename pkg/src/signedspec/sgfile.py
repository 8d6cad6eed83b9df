"""Reading and writing the ``.sg`` signed-graph text format.

Layout::

    # optional comment lines
    n m
    u v +1
    u v -1
    ...

Vertices are 0-based with ``u < v``; signs are written ``+1`` or ``-1``.
"""

from __future__ import annotations

from pathlib import Path

from .core import SignedGraph, from_edge_list


class SgFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_SIGNS = {"+1": 1, "-1": -1}


def parse_sg(text: str) -> SignedGraph:
    header = None
    edges: list[tuple[int, int, int]] = []
    seen: set[tuple[int, int]] = set()
    expected = 0
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise SgFormatError("header must be 'n m'", lineno)
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise SgFormatError("header values must be integers", lineno) from None
            if n < 0 or m < 0:
                raise SgFormatError("header values must be nonnegative", lineno)
            header = (n, m)
            expected = m
            continue
        if len(fields) != 3:
            raise SgFormatError("edge line must be 'u v s'", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise SgFormatError("vertex labels must be integers", lineno) from None
        if fields[2] not in _SIGNS:
            raise SgFormatError(f"sign must be +1 or -1, got {fields[2]!r}", lineno)
        n = header[0]
        if not (0 <= u < v < n):
            raise SgFormatError(f"need 0 <= u < v < {n}, got {u} {v}", lineno)
        if (u, v) in seen:
            raise SgFormatError(f"duplicate edge {u} {v}", lineno)
        if len(edges) == expected:
            raise SgFormatError(f"more than the declared {expected} edges", lineno)
        seen.add((u, v))
        edges.append((u, v, _SIGNS[fields[2]]))
    if header is None:
        raise SgFormatError("missing 'n m' header")
    if len(edges) != expected:
        raise SgFormatError(f"declared {expected} edges, found {len(edges)}")
    return from_edge_list(header[0], edges)


def format_sg(sigma: SignedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{sigma.n} {sigma.m}")
    for u, v, s in sigma.edges():
        lines.append(f"{u} {v} {'+1' if s > 0 else '-1'}")
    return "\n".join(lines) + "\n"


def read_sg(path: str | Path) -> SignedGraph:
    return parse_sg(Path(path).read_text(encoding="utf-8"))


def write_sg(path: str | Path, sigma: SignedGraph, comment: str | None = None) -> None:
    Path(path).write_text(format_sg(sigma, comment), encoding="utf-8", newline="\n")
