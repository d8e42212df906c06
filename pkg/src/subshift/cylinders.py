"""Locally constant functions and clopen sets, with exact rational values.

A cylinder function of depth k is constant on every cylinder named by an
admissible depth-k word, so it is stored as a total table from those
words to Fractions.  These functions are dense among the continuous
ones and every identity this package checks is an exact equality of
such tables, never an approximation.  Scalars are real: the involution
is the identity here.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DepthZero,
    MalformedInput,
    MatrixMismatch,
    ShallowerDepth,
    TooShort,
)
from .graph import AdjacencyMatrix, Word
from .sequences import (
    EventuallyPeriodicSeq,
    as_word,
    enumerate_words,
    require_admissible,
    word_from_string,
    word_to_string,
)

_POINTWISE_OPS = ("add", "mul", "neg", "abs")


def _as_fraction(value: object) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            raise MalformedInput(f"cannot parse rational {value!r}") from None
    raise MalformedInput(f"values must be exact rationals, got {type(value).__name__}")


@dataclass(frozen=True, eq=False)
class CylinderFunction:
    """A function on the shift space depending on the first `depth` symbols.

    `values` must assign a rational to every admissible word of length
    `depth`.  Refining the table to a larger depth represents the same
    function; equality between instances is that of the functions they
    represent, after refinement to a common depth.
    """

    matrix: AdjacencyMatrix
    depth: int
    values: Mapping[Word, Fraction]

    def __post_init__(self) -> None:
        if self.depth < 1:
            raise DepthZero("cylinder functions need depth at least 1")
        table = {as_word(w): _as_fraction(v) for w, v in self.values.items()}
        expected = enumerate_words(self.matrix, self.depth)
        if set(table) != set(expected):
            missing = [word_to_string(w) for w in expected if w not in table]
            extra = [word_to_string(w) for w in table if w not in set(expected)]
            raise MalformedInput(
                f"value table must cover exactly the admissible depth-{self.depth} "
                f"words (missing {missing}, unknown {extra})"
            )
        object.__setattr__(self, "values", table)

    @classmethod
    def constant(cls, A: AdjacencyMatrix, value, depth: int = 1) -> "CylinderFunction":
        c = _as_fraction(value)
        return cls(A, depth, {w: c for w in enumerate_words(A, depth)})

    @classmethod
    def zero(cls, A: AdjacencyMatrix, depth: int = 1) -> "CylinderFunction":
        return cls.constant(A, 0, depth)

    @classmethod
    def indicator(cls, A: AdjacencyMatrix, word: str | Iterable[int]) -> "CylinderFunction":
        """The indicator of the cylinder named by `word`."""
        w = require_admissible(A, word)
        if not w:
            raise MalformedInput("indicator needs a nonempty word")
        return cls(A, len(w), {v: Fraction(v == w) for v in enumerate_words(A, len(w))})

    def refine(self, depth: int) -> "CylinderFunction":
        return refine(self, depth)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values.values())

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CylinderFunction):
            return NotImplemented
        if self.matrix != other.matrix:
            return False
        k = max(self.depth, other.depth)
        return refine(self, k).values == refine(other, k).values

    def __add__(self, other) -> "CylinderFunction":
        return pointwise("add", self, _coerce(self, other))

    __radd__ = __add__

    def __mul__(self, other) -> "CylinderFunction":
        return pointwise("mul", self, _coerce(self, other))

    __rmul__ = __mul__

    def __neg__(self) -> "CylinderFunction":
        return pointwise("neg", self)

    def __sub__(self, other) -> "CylinderFunction":
        return self + (-_coerce(self, other))

    def __abs__(self) -> "CylinderFunction":
        return pointwise("abs", self)

    def __repr__(self) -> str:
        body = ", ".join(
            f"{word_to_string(w)}={v}" for w, v in sorted(self.values.items())
        )
        return f"CylinderFunction(depth={self.depth}, {body})"


def _coerce(like: CylinderFunction, value) -> CylinderFunction:
    if isinstance(value, CylinderFunction):
        return value
    return CylinderFunction.constant(like.matrix, value)


def refine(f: CylinderFunction, depth: int) -> CylinderFunction:
    """The same function tabulated on depth-`depth` cylinders."""
    if depth < f.depth:
        raise ShallowerDepth(f"cannot refine depth {f.depth} down to {depth}")
    if depth == f.depth:
        return f
    table = {w: f.values[w[: f.depth]] for w in enumerate_words(f.matrix, depth)}
    return CylinderFunction(f.matrix, depth, table)


def alpha(f: CylinderFunction) -> CylinderFunction:
    """Composition with the shift: alpha(f)(x) = f(shift(x)).

    The result depends on one more coordinate than f, so its depth grows
    by one; its value on a word drops the first symbol.
    """
    table = {w: f.values[w[1:]] for w in enumerate_words(f.matrix, f.depth + 1)}
    return CylinderFunction(f.matrix, f.depth + 1, table)


def pointwise(op: str, f: CylinderFunction, g: CylinderFunction | None = None) -> CylinderFunction:
    """Apply an exact pointwise operation: add, mul (binary), neg, abs (unary)."""
    if op not in _POINTWISE_OPS:
        raise MalformedInput(f"unknown pointwise op {op!r}")
    if op in ("neg", "abs"):
        if g is not None:
            raise MalformedInput(f"{op} takes a single function")
        fn = (lambda v: -v) if op == "neg" else abs
        return CylinderFunction(f.matrix, f.depth, {w: fn(v) for w, v in f.values.items()})
    if g is None:
        raise MalformedInput(f"{op} takes two functions")
    if f.matrix != g.matrix:
        raise MatrixMismatch("operands built over different matrices")
    k = max(f.depth, g.depth)
    fv, gv = refine(f, k).values, refine(g, k).values
    fn2 = (lambda a, b: a + b) if op == "add" else (lambda a, b: a * b)
    return CylinderFunction(f.matrix, k, {w: fn2(fv[w], gv[w]) for w in fv})


def evaluate(f: CylinderFunction, x) -> Fraction:
    """Value of f at a point: x is a word (>= depth symbols) or a sequence,
    read forward from its origin."""
    if isinstance(x, EventuallyPeriodicSeq):
        if x.matrix != f.matrix:
            raise MatrixMismatch("sequence built over a different matrix")
        prefix = x.window(0, f.depth)
    else:
        word = as_word(x)
        if len(word) < f.depth:
            raise TooShort(f"need {f.depth} symbols, got {len(word)}")
        prefix = word[: f.depth]
    prefix = require_admissible(f.matrix, prefix)
    return f.values[prefix]


@dataclass(frozen=True, eq=False)
class DomainMask:
    """A clopen subset of the shift space: a union of depth-k cylinders.

    The default domain used by weights is the whole space.  Masks refine
    like functions and compare mathematically (as sets), not by
    representation.
    """

    matrix: AdjacencyMatrix
    depth: int
    members: frozenset[Word]

    def __post_init__(self) -> None:
        if self.depth < 1:
            raise DepthZero("masks need depth at least 1")
        allowed = set(enumerate_words(self.matrix, self.depth))
        members = frozenset(as_word(w) for w in self.members)
        bad = members - allowed
        if bad:
            raise MalformedInput(
                f"mask words must be admissible depth-{self.depth} words, "
                f"got {sorted(word_to_string(w) for w in bad)}"
            )
        object.__setattr__(self, "members", members)

    @classmethod
    def full(cls, A: AdjacencyMatrix, depth: int = 1) -> "DomainMask":
        return cls(A, depth, frozenset(enumerate_words(A, depth)))

    @classmethod
    def empty(cls, A: AdjacencyMatrix, depth: int = 1) -> "DomainMask":
        return cls(A, depth, frozenset())

    @classmethod
    def from_words(cls, A: AdjacencyMatrix, words: Iterable[str | Iterable[int]], depth: int | None = None) -> "DomainMask":
        ws = frozenset(as_word(w) for w in words)
        if depth is None:
            lengths = {len(w) for w in ws}
            if len(lengths) != 1:
                raise MalformedInput("mask words must share one length (or pass depth)")
            depth = lengths.pop()
        return cls(A, depth, ws)

    def refine(self, depth: int) -> "DomainMask":
        if depth < self.depth:
            raise ShallowerDepth(f"cannot refine depth {self.depth} down to {depth}")
        if depth == self.depth:
            return self
        words = frozenset(
            w for w in enumerate_words(self.matrix, depth) if w[: self.depth] in self.members
        )
        return DomainMask(self.matrix, depth, words)

    def covers(self, word: Word) -> bool:
        """True iff the cylinder of `word` lies inside the mask (needs
        len(word) >= depth)."""
        if len(word) < self.depth:
            raise TooShort(f"need {self.depth} symbols to test membership")
        return word[: self.depth] in self.members

    def indicator(self) -> CylinderFunction:
        table = {
            w: Fraction(w in self.members) for w in enumerate_words(self.matrix, self.depth)
        }
        return CylinderFunction(self.matrix, self.depth, table)

    def is_empty(self) -> bool:
        return not self.members

    def is_full(self) -> bool:
        return len(self.members) == len(enumerate_words(self.matrix, self.depth))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DomainMask):
            return NotImplemented
        if self.matrix != other.matrix:
            return False
        k = max(self.depth, other.depth)
        return self.refine(k).members == other.refine(k).members

    def __repr__(self) -> str:
        words = sorted(word_to_string(w) for w in self.members)
        return f"DomainMask(depth={self.depth}, members={words})"


def mask_image(U: DomainMask) -> DomainMask:
    """The image of the clopen set U under the shift, as a mask.

    Dropping the first symbol of each member word names the image
    cylinders; depth-1 masks are refined to depth 2 first so the result
    still has depth >= 1.
    """
    V = U.refine(2) if U.depth < 2 else U
    return DomainMask(V.matrix, V.depth - 1, frozenset(w[1:] for w in V.members))


def parse_function_file(A: AdjacencyMatrix, text: str) -> CylinderFunction:
    """Parse the function table format: a "depth <k>" header, then one
    "<word> <value>" line per admissible depth-k word (all required)."""
    lines = [ln for ln in (raw.strip() for raw in text.split("\n")) if ln]
    if not lines:
        raise MalformedInput("empty function file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "depth" or not head[1].isdigit():
        raise MalformedInput(f"bad header {lines[0]!r}, expected 'depth <k>'")
    depth = int(head[1])
    table: dict[Word, Fraction] = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedInput(f"bad table line {ln!r}")
        word = word_from_string(parts[0])
        if word in table:
            raise MalformedInput(f"duplicate word {parts[0]}")
        table[word] = _as_fraction(parts[1])
    return CylinderFunction(A, depth, table)


def format_function_file(f: CylinderFunction) -> str:
    lines = [f"depth {f.depth}"]
    lines.extend(
        f"{word_to_string(w)} {f.values[w]}" for w in sorted(f.values)
    )
    return "\n".join(lines) + "\n"
