"""Coxeter systems enumerated as cap-bounded Cayley-graph balls.

A system is built by breadth-first closure from the identity under right
multiplication by generators, visiting elements in ShortLex order of their
reduced words (generators ordered by declared position).  The first word
that reaches an element is therefore its ShortLex-minimal reduced word,
which is stored as the canonical form.  Element identification during the
closure uses the faithful geometric reflection representation with exact
integer arithmetic (see rings.py); the matrices are discarded once the
multiplication table is complete.

Every subsequent operation is a walk over the enumerated table, so answers
are exact.  A walk that would leave the enumerated region raises
OutOfEnumeratedRegion instead of guessing.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InfiniteParabolic,
    MalformedMatrix,
    OutOfEnumeratedRegion,
)
from .rings import CosineRing

DEFAULT_CAP = 100_000
INF = math.inf


class Element:
    """A group element, identified by its position in the enumeration.

    Positions follow ShortLex order, so comparing indices compares
    canonical words.  Two elements are equal iff they belong to the same
    system and have the same canonical word.
    """

    __slots__ = ("system", "index")

    def __init__(self, system: "CoxeterSystem", index: int):
        self.system = system
        self.index = index

    @property
    def word(self) -> tuple[int, ...]:
        """Canonical ShortLex reduced word, 0-based generator indices."""
        return self.system.words[self.index]

    @property
    def length(self) -> int:
        return len(self.system.words[self.index])

    def word_string(self) -> str:
        """Serialized form: space-separated 1-based indices, 'e' if empty."""
        w = self.word
        return " ".join(str(a + 1) for a in w) if w else "e"

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.system is self.system
            and other.index == self.index
        )

    def __hash__(self):
        return hash((id(self.system), self.index))

    def __lt__(self, other):
        if not isinstance(other, Element) or other.system is not self.system:
            return NotImplemented
        return self.index < other.index

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return inverse(self)

    def __repr__(self):
        return f"Element({self.word_string()!r})"


@dataclass(frozen=True)
class Reflection:
    """A conjugate of a generator; always of odd length."""

    elt: Element

    def __lt__(self, other):
        return self.elt < other.elt

    def __repr__(self):
        return f"Reflection({self.elt.word_string()!r})"


@dataclass(frozen=True)
class InversionSet:
    """The reflections t with len(owner * t) < len(owner)."""

    owner: Element
    refs: frozenset[Reflection]

    def __len__(self):
        return len(self.refs)

    def __iter__(self):
        return iter(sorted(self.refs))

    def __contains__(self, item):
        if isinstance(item, Element):
            item = Reflection(item)
        return item in self.refs


@dataclass(frozen=True)
class ParabolicDecomposition:
    """w = prefix * suffix with prefix in W^J, suffix in W_J, lengths adding."""

    J: frozenset[int]
    prefix: Element
    suffix: Element


@dataclass(frozen=True)
class BallResult:
    """Closure of {e} under right multiplication by a generating set."""

    elements: tuple[Element, ...]
    complete: bool


class CoxeterSystem:
    """An enumerated Coxeter system (W, S).

    Attributes:
        matrix: bond matrix, entries int or math.inf.
        generators: generator labels in declared order.
        cap: enumeration bound that was in force.
        complete: True iff the whole group fits inside the cap.
        words: canonical words by element index (ShortLex order).
    """

    def __init__(self, matrix, generators, cap, words, table, complete):
        self.matrix = matrix
        self.generators = generators
        self.cap = cap
        self.words = words
        self._table = table
        self.complete = complete
        self.rank = len(generators)
        self._inv = self._compute_inverses()
        self._reflection_cache = None
        self._bruhat_below = None  # filled lazily by verify.oracle_bruhat

    # -- basic access -------------------------------------------------

    @property
    def size(self) -> int:
        """Number of enumerated elements."""
        return len(self.words)

    @property
    def order(self) -> int | None:
        """Group order when fully enumerated, else None."""
        return len(self.words) if self.complete else None

    @property
    def identity(self) -> Element:
        return Element(self, 0)

    def element(self, index: int) -> Element:
        return Element(self, index)

    def gens(self) -> tuple[Element, ...]:
        return tuple(Element(self, self._table[0][s]) for s in range(self.rank))

    def m(self, s: int, t: int):
        return self.matrix[s][t]

    def __iter__(self):
        return (Element(self, i) for i in range(len(self.words)))

    def __repr__(self):
        state = "complete" if self.complete else "truncated"
        return f"CoxeterSystem(rank={self.rank}, size={self.size}, {state})"

    # -- internals ----------------------------------------------------

    def _walk(self, start: int, letters) -> int:
        table = self._table
        i = start
        for a in letters:
            nxt = table[i][a]
            if nxt is None:
                raise OutOfEnumeratedRegion(
                    f"product escapes the enumerated ball of {self.size} elements"
                )
            i = nxt
        return i

    def _compute_inverses(self):
        inv = [0] * len(self.words)
        for i, w in enumerate(self.words):
            if i == 0:
                continue
            try:
                inv[i] = self._walk(0, reversed(w))
            except OutOfEnumeratedRegion:
                inv[i] = None
        return inv

    def _inverse_index(self, i: int) -> int:
        j = self._inv[i]
        if j is None:
            raise OutOfEnumeratedRegion("inverse lies outside the enumerated ball")
        return j

    def _left_mult_index(self, s: int, i: int) -> int:
        # s * w = (w^-1 * s)^-1
        return self._inverse_index(self._walk(self._inverse_index(i), (s,)))

    def _reflections(self):
        """All reflections inside the enumerated region, by closure under
        conjugation by generators.  Complete for complete systems."""
        if self._reflection_cache is not None:
            return self._reflection_cache
        table = self._table
        found = {table[0][s] for s in range(self.rank)}
        queue = sorted(found)
        for t in queue:
            word = self.words[t]
            for s in range(self.rank):
                try:
                    c = self._walk(0, (s, *word, s))
                except OutOfEnumeratedRegion:
                    continue
                if c not in found:
                    found.add(c)
                    queue.append(c)
        ordered = tuple(sorted(found))
        self._reflection_cache = (ordered, found)
        return self._reflection_cache


# -- construction -------------------------------------------------------


def _validate_matrix(matrix) -> tuple[tuple, ...]:
    if not isinstance(matrix, Sequence) or isinstance(matrix, (str, bytes)):
        raise MalformedMatrix("matrix must be a sequence of rows")
    rows = [tuple(r) for r in matrix]
    n = len(rows)
    if n == 0:
        raise MalformedMatrix("matrix must have at least one generator")
    for r in rows:
        if len(r) != n:
            raise MalformedMatrix("matrix must be square")
    for i in range(n):
        for j in range(n):
            e = rows[i][j]
            if i == j:
                if e != 1:
                    raise MalformedMatrix(f"diagonal entry m({i + 1},{i + 1}) must be 1")
                continue
            if e == INF:
                continue
            if not isinstance(e, int) or isinstance(e, bool) or e < 2:
                raise MalformedMatrix(
                    f"off-diagonal entry m({i + 1},{j + 1}) must be an int >= 2 or infinity"
                )
            if rows[j][i] != e:
                raise MalformedMatrix("matrix must be symmetric")
    return tuple(rows)


def build_system(matrix, cap: int = DEFAULT_CAP, generator_names=None) -> CoxeterSystem:
    """Enumerate the Coxeter system of a bond matrix up to ``cap`` elements.

    The result records whether enumeration closed (the full group) or was
    truncated at the cap.  Canonical words, lengths and all multiplication
    answers come from the resulting table.
    """
    matrix = _validate_matrix(matrix)
    n = len(matrix)
    if not isinstance(cap, int) or isinstance(cap, bool) or cap < 1:
        raise MalformedMatrix("cap must be a positive integer")
    if generator_names is None:
        generator_names = tuple(f"s{i + 1}" for i in range(n))
    else:
        generator_names = tuple(str(x) for x in generator_names)
        if len(generator_names) != n:
            raise MalformedMatrix("generator_names length must match the matrix rank")

    finite_orders = {matrix[i][j] for i in range(n) for j in range(i + 1, n) if matrix[i][j] != INF}
    ring = CosineRing(finite_orders)
    d = ring.dim

    # column updates for right multiplication by generator i:
    # col_i -> -col_i, col_j -> col_j + c_ij * col_i for bonded j
    updates = []
    for i in range(n):
        row = []
        for j in range(n):
            if j != i and matrix[i][j] != 2:
                row.append((j, ring.two_cos(matrix[i][j])))
        updates.append(row)

    ident = [0] * (n * n * d)
    for k in range(n):
        ident[(k * n + k) * d] = 1
    ident = tuple(ident)

    mul = ring.mul

    def rmul_gen(flat, i):
        out = list(flat)
        base_i = i * n * d
        for j, c in updates[i]:
            base_j = j * n * d
            for k in range(n):
                cell = flat[base_i + k * d : base_i + (k + 1) * d]
                if any(cell):
                    add = mul(c, cell)
                    p = base_j + k * d
                    for t in range(d):
                        out[p + t] += add[t]
        for p in range(base_i, base_i + n * d):
            out[p] = -flat[p]
        return tuple(out)

    words: list[tuple[int, ...]] = [()]
    table: list[list] = [[None] * n]
    mats = [ident]
    seen = {ident: 0}
    truncated = False
    i = 0
    while i < len(words):
        row = table[i]
        for s in range(n):
            if row[s] is not None:
                continue
            f = rmul_gen(mats[i], s)
            j = seen.get(f)
            if j is None:
                if len(words) >= cap:
                    truncated = True
                    continue
                j = len(words)
                seen[f] = j
                words.append(words[i] + (s,))
                mats.append(f)
                table.append([None] * n)
            row[s] = j
            table[j][s] = i
        i += 1

    return CoxeterSystem(
        matrix=matrix,
        generators=generator_names,
        cap=cap,
        words=[tuple(w) for w in words],
        table=table,
        complete=not truncated,
    )


# -- element operations --------------------------------------------------


def element_from_word(sys: CoxeterSystem, word: Iterable[int]) -> Element:
    """Resolve a (not necessarily reduced) word to its canonical element."""
    word = tuple(word)
    for a in word:
        if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < sys.rank:
            raise ValueError(f"letter {a!r} is not a generator index of rank {sys.rank}")
    return Element(sys, sys._walk(0, word))


def _same_system(u: Element, v: Element):
    if u.system is not v.system:
        raise ValueError("elements belong to different systems")


def multiply(u: Element, v: Element) -> Element:
    _same_system(u, v)
    return Element(u.system, u.system._walk(u.index, v.word))


def inverse(w: Element) -> Element:
    return Element(w.system, w.system._inverse_index(w.index))


def descents(w: Element, side: str = "right") -> frozenset[int]:
    """Generators s with len(w*s) < len(w) (right) or len(s*w) < len(w) (left)."""
    sys = w.system
    if side == "left":
        return descents(inverse(w), "right")
    if side != "right":
        raise ValueError("side must be 'left' or 'right'")
    table = sys._table
    lw = w.length
    out = []
    for s in range(sys.rank):
        j = table[w.index][s]
        # a missing entry means w*s left the ball, hence is longer
        if j is not None and len(sys.words[j]) < lw:
            out.append(s)
    return frozenset(out)


def is_reflection(w: Element) -> bool:
    _, found = w.system._reflections()
    return w.index in found


def reflections(sys: CoxeterSystem) -> tuple[Reflection, ...]:
    """All reflections in the enumerated region, in ShortLex order."""
    ordered, _ = sys._reflections()
    return tuple(Reflection(Element(sys, i)) for i in ordered)


def inversion_set(w: Element) -> InversionSet:
    """N(w) computed from the canonical word: for word a_1..a_k the member
    reflections are a_k..a_(j+1) a_j a_(j+1)..a_k for each position j."""
    sys = w.system
    word = w.word
    k = len(word)
    refs = []
    seen = set()
    for j in range(k):
        suffix = word[j + 1 :]
        t = sys._walk(0, tuple(reversed(suffix)) + (word[j],) + suffix)
        assert t not in seen, "reduced word produced a repeated inversion"
        seen.add(t)
        refs.append(Reflection(Element(sys, t)))
    return InversionSet(owner=w, refs=frozenset(refs))


def bruhat_leq(u: Element, w: Element) -> bool:
    """Strong Bruhat order comparison by left-descent lifting."""
    _same_system(u, w)
    sys = u.system
    words = sys.words
    iu, iw = u.index, w.index
    lu, lw = len(words[iu]), len(words[iw])
    while True:
        if iu == iw:
            return True
        if lu >= lw:
            return False
        # smallest left descent of w; w != e here since lw > lu >= 0
        for s in range(sys.rank):
            sw = sys._left_mult_index(s, iw)
            if len(words[sw]) < lw:
                break
        else:  # pragma: no cover - impossible for w != e
            raise AssertionError("nonidentity element with no left descent")
        iw, lw = sw, lw - 1
        su = sys._left_mult_index(s, iu)
        if len(words[su]) < lu:
            iu, lu = su, lu - 1


def parabolic_decompose(w: Element, J: Iterable[int]) -> ParabolicDecomposition:
    """Split w = prefix * suffix with suffix in W_J and prefix J-descent-free."""
    sys = w.system
    J = frozenset(J)
    for s in J:
        if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < sys.rank:
            raise ValueError(f"J member {s!r} is not a generator index")
    order = sorted(J)
    table = sys.words
    p = w.index
    stripped = []
    while True:
        lp = len(table[p])
        for s in order:
            q = sys._table[p][s]
            if q is not None and len(table[q]) < lp:
                p = q
                stripped.append(s)
                break
        else:
            break
    suffix_word = tuple(reversed(stripped))
    suffix = Element(sys, sys._walk(0, suffix_word))
    return ParabolicDecomposition(J=J, prefix=Element(sys, p), suffix=suffix)


def longest_element(sys: CoxeterSystem, J: Iterable[int]) -> Element:
    """Longest element of the standard parabolic W_J, if it is finite."""
    J = sorted(set(J))
    for s in J:
        if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < sys.rank:
            raise ValueError(f"J member {s!r} is not a generator index")
    table = sys._table
    seen = {0}
    queue = [0]
    for i in queue:
        for s in J:
            j = table[i][s]
            if j is None:
                raise InfiniteParabolic(
                    "parabolic subgroup does not close within the enumerated region"
                )
            if j not in seen:
                seen.add(j)
                queue.append(j)
    best = max(seen, key=lambda i: len(sys.words[i]))
    top_len = len(sys.words[best])
    assert sum(1 for i in seen if len(sys.words[i]) == top_len) == 1
    return Element(sys, best)


def enumerate_ball(sys: CoxeterSystem, gens: Iterable[Element], cap: int | None = None) -> BallResult:
    """Closure of {e} under right multiplication by ``gens``.

    Truncation (either by ``cap`` or by leaving the system's enumerated
    region) is flagged on the result, never raised.
    """
    if cap is None:
        cap = sys.cap
    gen_list = []
    for g in gens:
        _same_system(g, sys.identity)
        gen_list.append(g)
    seen = {0}
    queue = [0]
    complete = True
    for i in queue:
        for g in gen_list:
            try:
                j = sys._walk(i, g.word)
            except OutOfEnumeratedRegion:
                complete = False
                continue
            if j not in seen:
                if len(seen) >= cap:
                    complete = False
                    continue
                seen.add(j)
                queue.append(j)
    elements = tuple(Element(sys, i) for i in sorted(seen))
    return BallResult(elements=elements, complete=complete)
