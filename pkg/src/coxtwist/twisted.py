"""Fixed subgroups of involutive diagram automorphisms.

An automorphism theta of the bond diagram restricted to a generator subset
L acts on the parabolic W_L.  Its fixed subgroup is itself a Coxeter group
whose canonical generators are the longest elements of the finite orbit
parabolics: a fixed generator s contributes s, a swapped pair {s, t} with
finite m(s, t) contributes the longest element of the dihedral on {s, t}.
Pairs with m = infinity contribute nothing and are reported as skipped.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import core
from .core import CoxeterSystem, Element
from .errors import (
    BondMismatch,
    CapExceeded,
    NotFixed,
    NotInvolutive,
    NotInWL,
    OutOfL,
    TheoremViolation,
)


class GeneratorParity(enum.Enum):
    """Length parity of a twisted generator; odd ones are reflections."""

    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class DiagramAutomorphism:
    """An involutive, bond-preserving permutation of a generator subset L."""

    system: CoxeterSystem
    L: frozenset[int]
    mapping: Mapping[int, int]

    def __call__(self, s: int) -> int:
        return self.mapping[s]


@dataclass(frozen=True)
class TwistedGenerator:
    """Longest element of one finite orbit parabolic."""

    elt: Element
    orbit: tuple[int, ...]
    parity_class: GeneratorParity

    @property
    def is_reflection(self) -> bool:
        return self.parity_class is GeneratorParity.ODD

    def __repr__(self):
        return f"TwistedGenerator({self.elt.word_string()!r}, orbit={self.orbit})"


@dataclass(frozen=True)
class TwistedSubgroup:
    """The fixed subgroup of theta on W_L, fully enumerated."""

    system: CoxeterSystem
    theta: DiagramAutomorphism
    gens: tuple[TwistedGenerator, ...]
    skipped_orbits: tuple[tuple[int, ...], ...]
    elements: tuple[Element, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, w: Element) -> bool:
        return w.system is self.system and w.index in self._index_set

    @property
    def _index_set(self) -> frozenset[int]:
        cached = self.__dict__.get("_index_set_cache")
        if cached is None:
            cached = frozenset(w.index for w in self.elements)
            object.__setattr__(self, "_index_set_cache", cached)
        return cached

    def __repr__(self):
        return f"TwistedSubgroup(order={self.order}, gens={len(self.gens)})"


def validate_automorphism(sys: CoxeterSystem, L: Iterable[int], mapping: Mapping[int, int]) -> DiagramAutomorphism:
    """Check involutivity and bond preservation; unlisted members of L are fixed."""
    L = frozenset(L)
    for s in L:
        if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < sys.rank:
            raise OutOfL(f"L member {s!r} is not a generator index")
    full = {}
    for a, b in mapping.items():
        if a not in L:
            raise OutOfL(f"map key {a + 1 if isinstance(a, int) else a!r} is outside L")
        if b not in L:
            raise OutOfL(f"map value {b + 1 if isinstance(b, int) else b!r} is outside L")
        full[a] = b
    for s in L:
        full.setdefault(s, s)
    for a, b in full.items():
        if full[b] != a:
            raise NotInvolutive(f"map is not an involution at generator {a + 1}")
    for a in L:
        for b in L:
            if sys.m(a, b) != sys.m(full[a], full[b]):
                raise BondMismatch(
                    f"m({a + 1},{b + 1}) = {sys.m(a, b)} but the images have "
                    f"m({full[a] + 1},{full[b] + 1}) = {sys.m(full[a], full[b])}"
                )
    return DiagramAutomorphism(system=sys, L=L, mapping=dict(full))


def orbits(theta: DiagramAutomorphism) -> tuple[tuple[int, ...], ...]:
    """Orbits of theta on L, each sorted, listed by smallest member."""
    out = []
    seen = set()
    for s in sorted(theta.L):
        if s in seen:
            continue
        orb = tuple(sorted({s, theta.mapping[s]}))
        seen.update(orb)
        out.append(orb)
    return tuple(out)


def skipped_orbits(theta: DiagramAutomorphism) -> tuple[tuple[int, ...], ...]:
    """Orbits whose parabolic is infinite; they contribute no generator."""
    sys = theta.system
    out = []
    for orb in orbits(theta):
        if len(orb) == 2 and sys.m(orb[0], orb[1]) == math.inf:
            out.append(orb)
    return tuple(out)


def twisted_generators(theta: DiagramAutomorphism) -> list[TwistedGenerator]:
    """Longest elements of the finite orbit parabolics, in orbit order."""
    sys = theta.system
    out = []
    for orb in orbits(theta):
        if len(orb) == 2 and sys.m(orb[0], orb[1]) == math.inf:
            continue
        elt = core.longest_element(sys, orb)
        parity = GeneratorParity.ODD if elt.length % 2 else GeneratorParity.EVEN
        out.append(TwistedGenerator(elt=elt, orbit=orb, parity_class=parity))
    return out


def apply_theta(theta: DiagramAutomorphism, w: Element) -> Element:
    """Image of w under theta, computed letterwise on the canonical word."""
    if w.system is not theta.system:
        raise ValueError("element and automorphism belong to different systems")
    word = w.word
    for a in word:
        if a not in theta.L:
            raise NotInWL(f"letter {a + 1} of {w.word_string()!r} is outside L")
    return core.element_from_word(theta.system, (theta.mapping[a] for a in word))


def is_fixed(theta: DiagramAutomorphism, w: Element) -> bool:
    return apply_theta(theta, w) == w


def enumerate_fixed_subgroup(theta: DiagramAutomorphism, cap: int | None = None) -> TwistedSubgroup:
    """Close the twisted generators into the full fixed subgroup."""
    sys = theta.system
    gens = twisted_generators(theta)
    ball = core.enumerate_ball(sys, [g.elt for g in gens], cap=cap)
    if not ball.complete:
        raise CapExceeded(
            "fixed subgroup did not close within "
            f"{cap if cap is not None else sys.cap} elements"
        )
    return TwistedSubgroup(
        system=sys,
        theta=theta,
        gens=tuple(gens),
        skipped_orbits=skipped_orbits(theta),
        elements=ball.elements,
    )


def twisted_reduced_word(sub: TwistedSubgroup, z: Element) -> list[TwistedGenerator]:
    """Greedy reduced word for z over the twisted generators.

    Strips, at each step, the first generator in declared order that lowers
    the length; each strip must lower it by exactly the generator's length.
    """
    if z not in sub:
        raise NotFixed(f"{z.word_string()!r} is not in the fixed subgroup")
    stripped = []
    cur = z
    while cur.length:
        for g in sub.gens:
            nxt = core.multiply(cur, g.elt)
            if nxt.length < cur.length:
                if nxt.length != cur.length - g.elt.length:
                    raise TheoremViolation(
                        f"descent by {g.elt.word_string()!r} at {cur.word_string()!r} "
                        "dropped the length by less than the generator length"
                    )
                stripped.append(g)
                cur = nxt
                break
        else:
            raise TheoremViolation(
                f"nonidentity fixed element {cur.word_string()!r} has no descent"
            )
    stripped.reverse()
    return stripped


def twisted_length(sub: TwistedSubgroup, z: Element) -> int:
    return len(twisted_reduced_word(sub, z))
