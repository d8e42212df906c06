"""0-1 matrices, their directed graphs, and exact path witnesses.

Symbols are 1-based: a matrix of size n has alphabet {1, ..., n}, and
entry (i, j) = 1 allows the two-symbol word "ij".  Paths are nonempty
symbol words whose consecutive pairs are edges; a path between two
symbols always uses at least one edge, so a path from i to itself is a
closed walk such as "11" or "212".
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import MalformedInput, NoPath, SymbolOutOfRange, ZeroRow

Word = tuple[int, ...]


@dataclass(frozen=True)
class AdjacencyMatrix:
    """A 0-1 transition matrix with no zero rows.

    Rows index the current symbol, columns the next one.  Every row must
    contain a 1 so the shift map is defined on every point; zero columns
    are allowed (the shift is then not onto).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n < 1:
            raise MalformedInput("matrix must have size at least 1")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != n:
                raise MalformedInput(f"row {r} has {len(row)} entries, expected {n}")
            if any(b not in (0, 1) for b in row):
                raise MalformedInput(f"row {r} contains a non-bit entry")
            if 1 not in row:
                raise ZeroRow(f"symbol {r} has no successor")

    @classmethod
    def from_rows(cls, rows) -> "AdjacencyMatrix":
        return cls(tuple(tuple(int(b) for b in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def symbols(self) -> range:
        return range(1, self.n + 1)

    def check_symbol(self, s: int) -> None:
        if not (isinstance(s, int) and 1 <= s <= self.n):
            raise SymbolOutOfRange(f"symbol {s!r} not in 1..{self.n}")

    def entry(self, i: int, j: int) -> int:
        self.check_symbol(i)
        self.check_symbol(j)
        return self.rows[i - 1][j - 1]

    def successors(self, i: int) -> tuple[int, ...]:
        """Symbols j with an edge i -> j, ascending."""
        self.check_symbol(i)
        return tuple(j for j in self.symbols if self.rows[i - 1][j - 1])

    def predecessors(self, j: int) -> tuple[int, ...]:
        """Symbols i with an edge i -> j, ascending (column j)."""
        self.check_symbol(j)
        return tuple(i for i in self.symbols if self.rows[i - 1][j - 1])


def parse_matrix(text: str) -> AdjacencyMatrix:
    """Parse the matrix file format.

    Line 1 is the decimal size n; the next n lines hold n space-separated
    bits each.  A single trailing newline is tolerated, anything else is
    MalformedInput; an all-zero row is ZeroRow.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedInput("empty matrix file")
    head = lines[0].strip()
    if not head.isdigit():
        raise MalformedInput(f"first line must be the matrix size, got {lines[0]!r}")
    n = int(head)
    if n < 1:
        raise MalformedInput("matrix size must be at least 1")
    if len(lines) != n + 1:
        raise MalformedInput(f"expected {n} matrix rows, got {len(lines) - 1}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        tokens = line.split()
        if len(tokens) != n:
            raise MalformedInput(f"line {lineno}: expected {n} entries, got {len(tokens)}")
        if any(t not in ("0", "1") for t in tokens):
            raise MalformedInput(f"line {lineno}: entries must be 0 or 1")
        rows.append(tuple(int(t) for t in tokens))
    return AdjacencyMatrix(tuple(rows))


def format_matrix(A: AdjacencyMatrix) -> str:
    lines = [str(A.n)]
    lines.extend(" ".join(str(b) for b in row) for row in A.rows)
    return "\n".join(lines) + "\n"


def is_cycle(A: AdjacencyMatrix) -> bool:
    """True iff every row has exactly one 1 (one outgoing edge per symbol)."""
    return all(sum(row) == 1 for row in A.rows)


def is_transitive(A: AdjacencyMatrix) -> bool:
    """True iff every ordered symbol pair is joined by a path (>= 1 edge)."""
    targets = set(A.symbols)
    for i in A.symbols:
        if _reachable_from(A, i) != targets:
            return False
    return True


def _reachable_from(A: AdjacencyMatrix, i: int) -> set[int]:
    """Symbols reachable from i by at least one edge."""
    seen: set[int] = set()
    queue = deque(A.successors(i))
    seen.update(queue)
    while queue:
        v = queue.popleft()
        for u in A.successors(v):
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def _reverse_distances(A: AdjacencyMatrix, j: int, allowed: frozenset[int]) -> dict[int, int]:
    """Edge distance to j from every symbol, moving only through `allowed`."""
    dist = {j: 0}
    queue = deque([j])
    while queue:
        v = queue.popleft()
        for u in A.predecessors(v):
            if u in allowed and u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def _lex_shortest_walk(
    A: AdjacencyMatrix, i: int, j: int, allowed: frozenset[int]
) -> Word | None:
    """Shortest walk word from i to j (>= 1 edge) inside `allowed`.

    Ties broken by the lexicographically smallest word.  Returns None when
    no such walk exists.  Both endpoints must belong to `allowed`.
    """
    if i not in allowed or j not in allowed:
        return None
    dist = _reverse_distances(A, j, allowed)
    if i == j:
        starts = [u for u in A.successors(i) if u in allowed and u in dist]
        if not starts:
            return None
        total = 1 + min(dist[u] for u in starts)
    else:
        if i not in dist:
            return None
        total = dist[i]
    word = [i]
    cur, remaining = i, total
    while remaining > 0:
        cur = min(
            u for u in A.successors(cur) if u in allowed and dist.get(u) == remaining - 1
        )
        word.append(cur)
        remaining -= 1
    return tuple(word)


def find_path(A: AdjacencyMatrix, i: int, j: int) -> Word:
    """Shortest admissible word from i to j, using at least one edge.

    The result starts with i, ends with j, and among shortest candidates is
    the lexicographically smallest; a self-loop at i gives find_path(i, i)
    = (i, i).  Raises NoPath when i cannot reach j.
    """
    A.check_symbol(i)
    A.check_symbol(j)
    walk = _lex_shortest_walk(A, i, j, frozenset(A.symbols))
    if walk is None:
        raise NoPath(f"no path from {i} to {j}")
    return walk


def preimage_symbols(A: AdjacencyMatrix, s: int) -> frozenset[int]:
    """Symbols a such that a point starting with s pulls back to a point
    starting with a, i.e. the nonzero column entries A(a, s) = 1."""
    return frozenset(A.predecessors(s))


def shortest_cycle_avoiding(A: AdjacencyMatrix, banned: int) -> Word | None:
    """Period word of the shortest cycle that never visits `banned`.

    Returns e.g. (2,) for a self-loop at 2 or (1, 2) for 1 -> 2 -> 1;
    the closing edge back to the first symbol is implied.  Ties broken by
    smallest start symbol, then lexicographically.  None if the subgraph
    without `banned` has no cycle.
    """
    allowed = frozenset(v for v in A.symbols if v != banned)
    best: Word | None = None
    for v in sorted(allowed):
        walk = _lex_shortest_walk(A, v, v, allowed)
        if walk is None:
            continue
        period = walk[:-1]
        if best is None or (len(period), period) < (len(best), best):
            best = period
    return best


def first_return_word(A: AdjacencyMatrix, start: int) -> Word:
    """Shortest word start, x2, ..., xm with m >= 2, no interior return to
    `start`, and an edge from xm back to `start`.

    This is the smallest genuine cycle through `start`: it leaves the
    vertex and comes back.  Raises NoPath when no such excursion exists.
    """
    A.check_symbol(start)
    allowed = frozenset(v for v in A.symbols if v != start)
    targets = [p for p in A.predecessors(start) if p != start]
    dist: dict[int, int] = {}
    queue: deque[int] = deque()
    for t in sorted(targets):
        dist[t] = 0
        queue.append(t)
    while queue:
        v = queue.popleft()
        for u in A.predecessors(v):
            if u in allowed and u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    starts = [u for u in A.successors(start) if u in dist]
    if not starts:
        raise NoPath(f"no return cycle through {start} that leaves it")
    total = 1 + min(dist[u] for u in starts)
    word = [start]
    cur, remaining = start, total
    while remaining > 0:
        cur = min(
            u
            for u in A.successors(cur)
            if u in allowed and dist.get(u) == remaining - 1
        )
        word.append(cur)
        remaining -= 1
    return tuple(word)
