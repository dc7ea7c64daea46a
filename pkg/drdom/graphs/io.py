# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Edge-list text format.

Lines starting with `#` are comments. The first data line is `n m`, followed by `m` lines
`u v` with 0-based vertex ids. Writers emit edges with `u < v` in lexicographic order.
"""
from pathlib import Path
import typing as tp

from .graph import Graph, build_graph


class GraphFormatError(ValueError):
    """Parse failure, `line` is the 1-based line number where it was detected."""
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _data_lines(text: str) -> tp.Iterator[tp.Tuple[int, tp.List[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        yield number, stripped.split()


def _parse_ints(tokens: tp.List[str], count: int, line: int) -> tp.List[int]:
    if len(tokens) != count:
        raise GraphFormatError(f"expected {count} integers, got {len(tokens)}", line)
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise GraphFormatError(f"invalid integer in {' '.join(tokens)!r}", line)


def parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text)
    last_line = max(1, len(text.splitlines()))
    try:
        header_line, tokens = next(lines)
    except StopIteration:
        raise GraphFormatError("empty input, expected header 'n m'", last_line)
    n, m = _parse_ints(tokens, 2, header_line)
    if n < 0 or m < 0:
        raise GraphFormatError(f"negative header values n={n}, m={m}", header_line)
    edges = []
    for _ in range(m):
        try:
            line, tokens = next(lines)
        except StopIteration:
            raise GraphFormatError(f"expected {m} edges, got {len(edges)}", last_line)
        u, v = _parse_ints(tokens, 2, line)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}", line)
        if u == v:
            raise GraphFormatError(f"self-loop ({u}, {v})", line)
        edges.append((u, v))
    for line, _ in lines:
        raise GraphFormatError(f"unexpected data after {m} edges", line)
    return build_graph(n, edges)


def format_edge_list(g: Graph, comment: tp.Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    return '\n'.join(lines) + '\n'


def read_edge_list(path: tp.Union[str, Path]) -> Graph:
    with open(path, 'r') as f:
        return parse_edge_list(f.read())


def write_edge_list(path: tp.Union[str, Path], g: Graph, comment: tp.Optional[str] = None):
    with open(path, 'w') as f:
        f.write(format_edge_list(g, comment))
