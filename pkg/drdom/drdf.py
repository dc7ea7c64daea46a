# Copyright (c) the drdom authors.
# All rights reserved.
#
# This source code is licensed under the license found in the
# LICENSE file in the root directory of this source tree.
"""Double Roman dominating functions (DRDF).

A labeling `f: V -> {0, 1, 2, 3}` is a DRDF of `G` when:

- every vertex labeled 0 has a neighbor labeled 3, or at least two neighbors labeled 2;
- every vertex labeled 1 has a neighbor labeled 2 or 3.

Both conditions only constrain vertices labeled 0 or 1 and only get easier when neighbor
values grow, so raising any value of a DRDF keeps it a DRDF. `repair` and the reduction
engine rely on this.
"""
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
import typing as tp

from .graphs.graph import Graph
from .graphs.io import GraphFormatError


VALUES = (0, 1, 2, 3)


@dataclass(frozen=True)
class Labeling:
    """Per-vertex values in {0, 1, 2, 3}, indexed by vertex id."""
    values: tp.Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.values)
        bad = [x for x in values if x not in VALUES]
        if bad:
            raise ValueError(f"Labeling values must be in {VALUES}, got {bad[0]}.")
        object.__setattr__(self, 'values', values)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def weight(self) -> int:
        return sum(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> tp.Iterator[int]:
        return iter(self.values)


class ViolationKind(Enum):
    ZERO_UNCOVERED = 'zero-uncovered'
    ONE_UNCOVERED = 'one-uncovered'


class Violation(tp.NamedTuple):
    vertex: int
    kind: ViolationKind

    def __str__(self):
        return f"vertex {self.vertex}: {self.kind.value}"


class InvalidLabelingError(ValueError):
    """A labeling required to be a DRDF is not one."""
    def __init__(self, violations: tp.List[Violation]):
        shown = ', '.join(str(v) for v in violations[:5])
        more = f" (+{len(violations) - 5} more)" if len(violations) > 5 else ''
        super().__init__(f"not a double Roman dominating function: {shown}{more}")
        self.violations = violations


def as_labeling(f: tp.Union[Labeling, tp.Sequence[int]]) -> Labeling:
    return f if isinstance(f, Labeling) else Labeling(tuple(f))


def _violation(adjacency: tp.Sequence[tp.Sequence[int]], values: tp.Sequence[int],
               v: int) -> tp.Optional[ViolationKind]:
    value = values[v]
    if value == 0:
        twos = 0
        for u in adjacency[v]:
            x = values[u]
            if x == 3:
                return None
            if x == 2:
                twos += 1
        return None if twos >= 2 else ViolationKind.ZERO_UNCOVERED
    if value == 1:
        if any(values[u] >= 2 for u in adjacency[v]):
            return None
        return ViolationKind.ONE_UNCOVERED
    return None


def validate(g: Graph, f: tp.Union[Labeling, tp.Sequence[int]]) -> tp.List[Violation]:
    """Every vertex violating the DRDF conditions, in increasing id order. Empty iff `f` is a DRDF."""
    f = as_labeling(f)
    if f.n != g.n:
        raise ValueError(f"Labeling of length {f.n} does not target a graph of order {g.n}.")
    violations = []
    for v in range(g.n):
        kind = _violation(g.adjacency, f.values, v)
        if kind is not None:
            violations.append(Violation(v, kind))
    return violations


def is_drdf(g: Graph, f: tp.Union[Labeling, tp.Sequence[int]]) -> bool:
    return not validate(g, f)


def require_drdf(g: Graph, f: tp.Union[Labeling, tp.Sequence[int]]) -> Labeling:
    f = as_labeling(f)
    violations = validate(g, f)
    if violations:
        raise InvalidLabelingError(violations)
    return f


def weight(f: tp.Union[Labeling, tp.Sequence[int]]) -> int:
    return sum(f)


def partition(f: tp.Union[Labeling, tp.Sequence[int]]) -> tp.Tuple[tp.List[int], ...]:
    """Vertex lists `(V_0, V_1, V_2, V_3)`."""
    parts: tp.Tuple[tp.List[int], ...] = ([], [], [], [])
    for v, x in enumerate(f):
        parts[x].append(v)
    return parts


def all_threes(n: int) -> Labeling:
    return Labeling((3,) * n)


def eliminate_ones(g: Graph, f: tp.Union[Labeling, tp.Sequence[int]]) -> Labeling:
    """Rewrite a DRDF into one without any value 1 and no larger weight.

    1-vertices are processed in increasing id order. A 1-vertex with a neighbor labeled 3
    drops to 0. Otherwise its smallest-id neighbor labeled 2 is raised to 3 and the vertex drops to 0.
    """
    f = require_drdf(g, f)
    values = list(f.values)
    for v in range(g.n):
        if values[v] != 1:
            continue
        if not any(values[u] == 3 for u in g.adjacency[v]):
            u = min(u for u in g.adjacency[v] if values[u] == 2)
            values[u] = 3
        values[v] = 0
    return Labeling(tuple(values))


def repair(g: Graph, f: tp.Union[Labeling, tp.Sequence[int]],
           vertices: tp.Optional[tp.Iterable[int]] = None) -> Labeling:
    """Raise values until the labeling is a DRDF, only checking `vertices` (default: all).

    A violating 0-vertex raises its smallest-id neighbor labeled 2 to 3, or becomes 2 when it
    has none. A violating 1-vertex becomes 2. Values only grow, so vertices that were
    satisfied stay satisfied and a single pass suffices.
    """
    values = list(as_labeling(f).values)
    if len(values) != g.n:
        raise ValueError(f"Labeling of length {len(values)} does not target a graph of order {g.n}.")
    for v in sorted(set(range(g.n) if vertices is None else vertices)):
        repair_vertex(g.adjacency, values, v)
    return Labeling(tuple(values))


def repair_vertex(adjacency: tp.Union[tp.Sequence[tp.Collection[int]], tp.Mapping[int, tp.Collection[int]]],
                  values: tp.Union[tp.MutableSequence[int], tp.MutableMapping[int, int]], v: int) -> int:
    """Fix vertex `v` in place if it violates the DRDF conditions. Returns the added weight."""
    value = values[v]
    neighbors = adjacency[v]
    if value == 0:
        if any(values[u] == 3 for u in neighbors):
            return 0
        twos = sorted(u for u in neighbors if values[u] == 2)
        if len(twos) >= 2:
            return 0
        if twos:
            values[twos[0]] = 3
            return 1
        values[v] = 2
        return 2
    if value == 1 and not any(values[u] >= 2 for u in neighbors):
        values[v] = 2
        return 1
    return 0


def _lowerings(value: int) -> tp.Tuple[int, ...]:
    return {3: (0, 2), 2: (0,), 1: (0,)}.get(value, ())


def prune(adjacency: tp.Union[tp.Sequence[tp.Collection[int]], tp.Mapping[int, tp.Collection[int]]],
          values: tp.Union[tp.MutableSequence[int], tp.MutableMapping[int, int]],
          vertices: tp.Iterable[int]) -> int:
    """Lower values of a DRDF in place while it stays a DRDF, returning the weight removed.

    Vertices of `vertices` are visited by decreasing value, then id, and each one is lowered to the
    smallest value that keeps itself and its neighbors satisfied. Passes repeat until none changes.
    """
    order = sorted(set(vertices))
    removed = 0
    changed = True
    while changed:
        changed = False
        for v in sorted(order, key=lambda v: (-values[v], v)):
            old = values[v]
            for lower in _lowerings(old):
                values[v] = lower
                if _violation(adjacency, values, v) is None and \
                        all(_violation(adjacency, values, u) is None for u in adjacency[v]):
                    removed += old - lower
                    changed = True
                    break
                values[v] = old
    return removed


def improve(adjacency: tp.Union[tp.Sequence[tp.Collection[int]], tp.Mapping[int, tp.Collection[int]]],
            values: tp.Union[tp.MutableSequence[int], tp.MutableMapping[int, int]],
            vertices: tp.Iterable[int], max_rounds: int = 8) -> int:
    """Local search on a DRDF in place, returning the weight removed.

    A move raises one vertex to 2 or 3 and prunes the vertices within distance two of it. It is
    kept when the weight drops. After a plain `prune`, rounds of moves repeat until one brings
    no gain or `max_rounds` is reached.
    """
    order = sorted(set(vertices))
    gained = prune(adjacency, values, order)
    for _ in range(max_rounds):
        progress = 0
        for v in order:
            for raised in (3, 2):
                if values[v] >= raised:
                    continue
                region = {v}
                for u in adjacency[v]:
                    region.add(u)
                    region.update(adjacency[u])
                saved = {u: values[u] for u in region}
                values[v] = raised
                region.discard(v)
                delta = prune(adjacency, values, region) - (raised - saved[v])
                if delta > 0:
                    progress += delta
                    break
                for u, x in saved.items():
                    values[u] = x
        if not progress:
            break
        gained += progress
    return gained


def union_labeling(pieces: tp.Sequence[tp.Tuple[Graph, tp.Union[Labeling, tp.Sequence[int]]]],
                   assembled: Graph,
                   embeddings: tp.Sequence[tp.Union[tp.Sequence[int], tp.Mapping[int, int]]]) -> Labeling:
    """Labeling of `assembled` copying each piece's values through its embedding.

    Args:
        pieces (list of (Graph, Labeling)): The pieces and their labelings.
        assembled (Graph): The assembled graph.
        embeddings (list): For each piece, a map from piece vertex id to assembled vertex id.
    Returns:
        Labeling: The composed labeling, its weight is the sum of the piece weights.
    """
    if len(pieces) != len(embeddings):
        raise ValueError(f"Got {len(pieces)} pieces but {len(embeddings)} embeddings.")
    values: tp.List[tp.Optional[int]] = [None] * assembled.n
    for index, ((piece, labeling), embedding) in enumerate(zip(pieces, embeddings)):
        labeling = as_labeling(labeling)
        if labeling.n != piece.n:
            raise ValueError(f"Piece {index} has order {piece.n} but a labeling of length {labeling.n}.")
        if len(embedding) != piece.n:
            raise ValueError(f"Embedding {index} maps {len(embedding)} vertices, piece has {piece.n}.")
        for v in range(piece.n):
            target = embedding[v]
            if not 0 <= target < assembled.n:
                raise ValueError(f"Embedding {index} maps vertex {v} outside the assembled graph.")
            if values[target] is not None:
                raise ValueError(f"Embeddings overlap at assembled vertex {target}.")
            values[target] = labeling[v]
    missing = [v for v, x in enumerate(values) if x is None]
    if missing:
        raise ValueError(f"Embeddings do not cover assembled vertices {missing[:10]}.")
    return Labeling(tuple(tp.cast(tp.List[int], values)))


def closed_form_path(n: int) -> tp.Tuple[int, Labeling]:
    """Optimal labeling of the path `0 - 1 - ... - n-1`.

    Vertices with `i % 3 == 1` get 3. When `n % 3 == 1` the last vertex is uncovered and gets 2.
    Weight is `n` when `n % 3 == 0` and `n + 1` otherwise.
    """
    if n < 1:
        raise ValueError(f"Path closed form requires n >= 1, got n={n}.")
    values = [3 if i % 3 == 1 else 0 for i in range(n)]
    if n % 3 == 1:
        values[-1] = 2
    return sum(values), Labeling(tuple(values))


def closed_form_cycle(n: int) -> tp.Tuple[int, Labeling]:
    """Optimal labeling of the cycle `0 - 1 - ... - n-1 - 0`.

    - `n % 3 == 0`: 3 on every vertex with `i % 3 == 0`, weight `n`;
    - `n` even: alternating 2 and 0, weight `n`;
    - `n = 3j + 2` odd: 3 on `0, 3, ..., 3j`, weight `n + 1`;
    - `n = 3j + 1` odd: 3 on `0, 3, ..., 3(j - 1)` and 2 on `3j - 1`, weight `n + 1`.
    """
    if n < 3:
        raise ValueError(f"Cycle closed form requires n >= 3, got n={n}.")
    if n % 3 == 0:
        values = [3 if i % 3 == 0 else 0 for i in range(n)]
    elif n % 2 == 0:
        values = [2 if i % 2 == 0 else 0 for i in range(n)]
    elif n % 3 == 2:
        values = [3 if i % 3 == 0 else 0 for i in range(n)]
    else:
        values = [3 if i % 3 == 0 and i < n - 1 else 0 for i in range(n)]
        values[n - 2] = 2
    return sum(values), Labeling(tuple(values))


def parse_labeling(text: str) -> Labeling:
    """Labeling text format: first line `n`, second line `n` integers in vertex id order."""
    lines = [(i, line.strip()) for i, line in enumerate(text.splitlines(), start=1)
             if line.strip() and not line.strip().startswith('#')]
    if not lines:
        raise GraphFormatError("empty labeling, expected a line with n", 1)
    header_line, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise GraphFormatError(f"invalid labeling length {header!r}", header_line)
    tokens: tp.List[str] = []
    last = header_line
    for line, content in lines[1:]:
        tokens.extend(content.split())
        last = line
    try:
        values = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise GraphFormatError("invalid integer in labeling values", last)
    if len(values) != n:
        raise GraphFormatError(f"expected {n} values, got {len(values)}", last)
    try:
        return Labeling(values)
    except ValueError as exc:
        raise GraphFormatError(str(exc), last)


def format_labeling(f: tp.Union[Labeling, tp.Sequence[int]]) -> str:
    f = as_labeling(f)
    return f"{f.n}\n{' '.join(str(x) for x in f.values)}\n"


def read_labeling(path: tp.Union[str, Path]) -> Labeling:
    with open(path, 'r') as f:
        return parse_labeling(f.read())


def write_labeling(path: tp.Union[str, Path], f: tp.Union[Labeling, tp.Sequence[int]]):
    with open(path, 'w') as out:
        out.write(format_labeling(f))
