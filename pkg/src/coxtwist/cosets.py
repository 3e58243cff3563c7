"""Right cosets x * H of a fixed subgroup H and their minimal elements.

Min(u) collects the members of least length.  Minimal members are linked
by twisted generators that preserve length; the chain, escalation and
domination operations make the structure of those links explicit and check
the structural guarantees on the fly, raising TheoremViolation with a
concrete witness if one fails.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import core
from .core import Element
from .errors import (
    CapExceeded,
    NotFixed,
    NotMinimal,
    NotSameCoset,
    TheoremViolation,
)
from .twisted import TwistedGenerator, TwistedSubgroup, twisted_reduced_word

_NICKNAMES = "xyzuvw"


def generator_nickname(position: int) -> str:
    """Display name for the twisted generator at a declared position."""
    if position < len(_NICKNAMES):
        return _NICKNAMES[position]
    return f"g{position + 1}"


class StepVerdict(enum.Enum):
    EQUAL = "equal"
    BRUHAT_UP = "bruhat-up"


@dataclass(frozen=True)
class CosetAnalysis:
    """One coset u * H: members, minimal members and their linking edges."""

    subgroup: TwistedSubgroup
    rep: Element
    members: tuple[Element, ...]
    min_set: tuple[Element, ...]
    min_graph: tuple[tuple[Element, Element, TwistedGenerator], ...]

    @property
    def min_length(self) -> int:
        return self.min_set[0].length

    def __repr__(self):
        return (
            f"CosetAnalysis(rep={self.rep.word_string()!r}, "
            f"size={len(self.members)}, min={len(self.min_set)})"
        )


@dataclass(frozen=True)
class EscalationTrace:
    """Stepwise verdicts along a twisted word applied to a minimal element."""

    base: Element
    word: tuple[TwistedGenerator, ...]
    steps: tuple[StepVerdict, ...]
    prefixes: tuple[Element, ...]  # base, base*x1, ..., base*x1..xk


@dataclass(frozen=True)
class DominationStep:
    generator: TwistedGenerator
    prefix: Element  # u * x1..xi after this step
    verdict: StepVerdict
    witness: Element  # the dominated minimal element after this step
    replaced: bool  # True when the equal-length rule advanced the witness


@dataclass(frozen=True)
class DominationResult:
    target: Element
    base: Element
    witness: Element
    steps: tuple[DominationStep, ...]


def coset(sub: TwistedSubgroup, u: Element) -> CosetAnalysis:
    """Analyze the coset u * H."""
    if u.system is not sub.system:
        raise ValueError("element and subgroup belong to different systems")
    members = sorted(core.multiply(u, z) for z in sub.elements)
    assert len(set(members)) == len(sub.elements)
    min_len = min(w.length for w in members)
    mins = tuple(w for w in members if w.length == min_len)
    min_idx = {w.index for w in mins}
    edges = []
    for w in mins:
        for g in sub.gens:
            v = core.multiply(w, g.elt)
            if v.index in min_idx and w.index < v.index:
                edges.append((w, v, g))
    edges.sort(key=lambda e: (e[0].index, e[1].index))
    return CosetAnalysis(
        subgroup=sub,
        rep=members[0],
        members=tuple(members),
        min_set=mins,
        min_graph=tuple(edges),
    )


def min_set(sub: TwistedSubgroup, u: Element) -> tuple[Element, ...]:
    return coset(sub, u).min_set


def is_minimal(sub: TwistedSubgroup, u: Element) -> bool:
    return u.length == coset(sub, u).min_length


def all_cosets(sub: TwistedSubgroup) -> list[CosetAnalysis]:
    """Partition the whole group into cosets of the subgroup."""
    sys = sub.system
    if not sys.complete:
        raise CapExceeded("coset partition needs a fully enumerated group")
    seen = bytearray(sys.size)
    out = []
    for i in range(sys.size):
        if seen[i]:
            continue
        analysis = coset(sub, sys.element(i))
        for w in analysis.members:
            seen[w.index] = 1
        out.append(analysis)
    assert sum(len(a.members) for a in out) == sys.size
    return out


def _require_same_coset(sub: TwistedSubgroup, u: Element, v: Element) -> Element:
    y = core.multiply(core.inverse(u), v)
    if y not in sub:
        raise NotSameCoset(
            f"{u.word_string()!r} and {v.word_string()!r} lie in different cosets"
        )
    return y


def connect_minimals(sub: TwistedSubgroup, u: Element, v: Element) -> list[Element]:
    """Chain of minimal coset members from u to v along twisted generators.

    Every link multiplies by one twisted generator and stays inside the
    minimal set at constant length.
    """
    y = _require_same_coset(sub, u, v)
    analysis = coset(sub, u)
    min_idx = {w.index for w in analysis.min_set}
    for w in (u, v):
        if w.index not in min_idx:
            raise NotMinimal(f"{w.word_string()!r} is not minimal in its coset")
    chain = [u]
    cur = u
    for g in twisted_reduced_word(sub, y):
        cur = core.multiply(cur, g.elt)
        if cur.length != u.length or cur.index not in min_idx:
            raise TheoremViolation(
                f"chain from {u.word_string()!r} to {v.word_string()!r} left the "
                f"minimal set at {cur.word_string()!r}"
            )
        chain.append(cur)
    assert chain[-1] == v
    return chain


def escalation_trace(sub: TwistedSubgroup, u: Element, z: Element) -> EscalationTrace:
    """Apply the twisted word of z to minimal u, recording a verdict per step.

    Each step either keeps the length (allowed only for even twisted
    generators) or goes strictly up in the Bruhat order.
    """
    if z not in sub:
        raise NotFixed(f"{z.word_string()!r} is not in the fixed subgroup")
    if not is_minimal(sub, u):
        raise NotMinimal(f"{u.word_string()!r} is not minimal in its coset")
    word = tuple(twisted_reduced_word(sub, z))
    steps = []
    prefixes = [u]
    cur = u
    for g in word:
        nxt = core.multiply(cur, g.elt)
        if nxt.length == cur.length:
            if g.is_reflection:
                raise TheoremViolation(
                    f"length stalled at {cur.word_string()!r} under the odd "
                    f"generator {g.elt.word_string()!r}"
                )
            steps.append(StepVerdict.EQUAL)
        elif nxt.length > cur.length:
            if not core.bruhat_leq(cur, nxt):
                raise TheoremViolation(
                    f"length rose from {cur.word_string()!r} to "
                    f"{nxt.word_string()!r} without Bruhat comparability"
                )
            steps.append(StepVerdict.BRUHAT_UP)
        else:
            raise TheoremViolation(
                f"length dropped from minimal base at {cur.word_string()!r} * "
                f"{g.elt.word_string()!r}"
            )
        cur = nxt
        prefixes.append(cur)
    return EscalationTrace(base=u, word=word, steps=tuple(steps), prefixes=tuple(prefixes))


def dominate(sub: TwistedSubgroup, x: Element) -> DominationResult:
    """Construct a minimal coset member below x in the Bruhat order.

    Walks the twisted word of base^-1 * x from the ShortLex-least minimal
    member.  Strict steps keep the current witness; equal-length steps
    replace it, when needed, by witness * generator, preferring the shorter
    candidate and breaking ties by ShortLex.
    """
    analysis = coset(sub, x)
    min_idx = {w.index for w in analysis.min_set}
    if x.index in min_idx:
        return DominationResult(target=x, base=x, witness=x, steps=())
    base = analysis.min_set[0]
    y = core.multiply(core.inverse(base), x)
    witness = base
    cur = base
    steps = []
    for g in twisted_reduced_word(sub, y):
        nxt = core.multiply(cur, g.elt)
        if nxt.length > cur.length:
            verdict = StepVerdict.BRUHAT_UP
            replaced = False
        elif nxt.length == cur.length:
            verdict = StepVerdict.EQUAL
            candidates = []
            if core.bruhat_leq(witness, nxt):
                candidates.append((witness, False))
            moved = core.multiply(witness, g.elt)
            if moved.length <= witness.length and core.bruhat_leq(moved, nxt):
                candidates.append((moved, True))
            if not candidates:
                raise TheoremViolation(
                    f"no dominated replacement at {cur.word_string()!r} * "
                    f"{g.elt.word_string()!r} for witness {witness.word_string()!r}"
                )
            candidates.sort(key=lambda c: (c[0].length, c[0].index))
            witness, replaced = candidates[0]
        else:
            raise TheoremViolation(
                f"length dropped below the minimum at {cur.word_string()!r} * "
                f"{g.elt.word_string()!r}"
            )
        cur = nxt
        steps.append(
            DominationStep(
                generator=g, prefix=cur, verdict=verdict, witness=witness, replaced=replaced
            )
        )
    assert cur == x
    if witness.index not in min_idx or not core.bruhat_leq(witness, x):
        raise TheoremViolation(
            f"constructed witness {witness.word_string()!r} fails the contract "
            f"for {x.word_string()!r}"
        )
    return DominationResult(target=x, base=base, witness=witness, steps=tuple(steps))


def dominated_minimal(sub: TwistedSubgroup, x: Element) -> Element:
    """A minimal member of x's coset lying below x in the Bruhat order."""
    return dominate(sub, x).witness


def min_graph_dot(analysis: CosetAnalysis, name: str = "min_graph") -> str:
    """Render the minimal-element graph in DOT, deterministically.

    Nodes are canonical words as digit strings when every index is a
    single digit, otherwise space-separated; edges carry generator
    nicknames in declared order (x, y, z, ...).
    """
    sys = analysis.subgroup.system
    compact = sys.rank <= 9

    def label(w: Element) -> str:
        if not w.word:
            return "e"
        if compact:
            return "".join(str(a + 1) for a in w.word)
        return w.word_string()

    nick = {g.elt.index: generator_nickname(i) for i, g in enumerate(analysis.subgroup.gens)}
    lines = [f"graph {name} {{"]
    for w in analysis.min_set:
        lines.append(f'  "{label(w)}";')
    for u, v, g in analysis.min_graph:
        lines.append(f'  "{label(u)}" -- "{label(v)}" [label="{nick[g.elt.index]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
