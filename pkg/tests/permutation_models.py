"""Permutation model of the symmetric group, independent of the package.

Type A systems of rank n-1 realize S_n with generator i acting as the
adjacent transposition of positions i, i+1.  Lengths are inversion counts,
reduced words come from a right-descent recursion, and Bruhat comparison
uses the sorted-prefix criterion.  Tests compare package answers against
this model, so nothing here may import coxtwist.
"""

from functools import lru_cache
from itertools import permutations


def identity(n):
    return tuple(range(n))


def apply_gen(p, i):
    """Right multiplication by the adjacent transposition (i, i+1)."""
    q = list(p)
    q[i], q[i + 1] = q[i + 1], q[i]
    return tuple(q)


def perm_of_word(n, word):
    p = identity(n)
    for a in word:
        p = apply_gen(p, a)
    return p


def compose(p, q):
    """(p * q)(i) = p(q(i)); matches building words left to right."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert(p):
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return tuple(q)


def inversions(p):
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


@lru_cache(maxsize=None)
def reduced_words(p):
    """Every reduced word of p, built by stripping right descents."""
    n = len(p)
    if p == identity(n):
        return ((),)
    out = []
    for i in range(n - 1):
        if p[i] > p[i + 1]:
            for w in reduced_words(apply_gen(p, i)):
                out.append(w + (i,))
    return tuple(out)


def shortlex_word(p):
    # all reduced words of p share one length, so plain min is ShortLex
    return min(reduced_words(p))


def transposition(n, a, b):
    q = list(range(n))
    q[a], q[b] = q[b], q[a]
    return tuple(q)


def all_transpositions(n):
    return [transposition(n, a, b) for a in range(n) for b in range(a + 1, n)]


def bruhat_leq(u, w):
    """Sorted-prefix criterion for the strong Bruhat order on S_n."""
    n = len(u)
    for k in range(1, n):
        for x, y in zip(sorted(u[:k]), sorted(w[:k])):
            if x > y:
                return False
    return True


def bruhat_leq_closure(n):
    """Transitive closure of reflection covers; cross-checks the criterion.

    Returns a dict mapping w to the set of u with u <= w.
    """
    perms = sorted(permutations(range(n)), key=inversions)
    ts = all_transpositions(n)
    below = {}
    for p in perms:
        acc = {p}
        for t in ts:
            q = compose(p, t)
            if inversions(q) < inversions(p):
                acc |= below[q]
        below[p] = acc
    return below
