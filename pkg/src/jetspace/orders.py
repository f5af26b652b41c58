"""Monomial orders as sort keys.

Every order exposes key(exps) returning a tuple that sorts ascending, so the
largest monomial under the order has the largest key.  Orders also expose a
hashable tag() used to cache Groebner bases per order, and compare(a, b)
returning -1/0/1 for callers that want a comparator.

Exponent vectors are plain tuples of non-negative ints.  The key functions
never inspect a ring, so one order object works for any arity.
"""

from __future__ import annotations


class TermOrder:
    """Base class; subclasses implement key() and tag()."""

    def key(self, exps):
        raise NotImplementedError

    def tag(self):
        raise NotImplementedError

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def __repr__(self):
        return str(self.tag())

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.tag() == other.tag()

    def __hash__(self):
        return hash(self.tag())


class Lex(TermOrder):
    """Pure lexicographic: earlier variables dominate."""

    def key(self, exps):
        return exps

    def tag(self):
        return ("lex",)


class GrLex(TermOrder):
    """Total degree, ties broken lexicographically."""

    def key(self, exps):
        return (sum(exps), exps)

    def tag(self):
        return ("grlex",)


class GrevLex(TermOrder):
    """Total degree, ties broken by reverse lexicographic comparison.

    Between monomials of equal degree the one with the smaller exponent on
    the last differing variable (scanning from the right) is larger.
    """

    def key(self, exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def tag(self):
        return ("grevlex",)


LEX = Lex()
GRLEX = GrLex()
GREVLEX = GrevLex()


class Block(TermOrder):
    """Eliminates the first k variables.

    The first block is compared by grevlex; any monomial containing one of
    the first k variables beats every monomial that avoids them, which is
    exactly the elimination property.  Ties fall through to `inner` on the
    remaining variables.
    """

    def __init__(self, k, inner=GREVLEX):
        if k < 0:
            raise ValueError("block size must be non-negative")
        self.k = k
        self.inner = inner

    def key(self, exps):
        head = exps[: self.k]
        tail = exps[self.k :]
        return (GREVLEX.key(head), self.inner.key(tail))

    def tag(self):
        return ("block", self.k, self.inner.tag())


class Weight(TermOrder):
    """Compare by a weight vector first, then by a tiebreak order.

    Nesting Weight inside Weight builds matrix orders; the tangent-cone
    computation uses Weight(all-ones, Weight(unit-vector, GREVLEX)).
    """

    def __init__(self, vector, tiebreak=GREVLEX):
        self.vector = tuple(vector)
        self.tiebreak = tiebreak

    def key(self, exps):
        if len(exps) != len(self.vector):
            raise ValueError(
                f"weight vector has length {len(self.vector)}, "
                f"exponent vector has length {len(exps)}"
            )
        dot = sum(w * e for w, e in zip(self.vector, exps))
        return (dot, self.tiebreak.key(exps))

    def tag(self):
        return ("weight", self.vector, self.tiebreak.tag())
