"""Cycle indices of species carrying an action of a finite group.

A :class:`GammaCIS` keeps one cycle index series per group element.  Only tiny
groups are in scope, so elements are stored extensionally with no conjugacy
class compression.
"""

from fractions import Fraction
from itertools import product

from .series import CycleIndexSeries, CompositionError, Plethysm, cis_add, cis_mul


class FiniteGroup:
    """Finite group given by its element list and a multiplication function."""

    def __init__(self, elements, multiply, identity, name=None):
        self.elements = tuple(elements)
        self._multiply = multiply
        self.identity = identity
        self.name = name or f"group of order {len(self.elements)}"
        if identity not in self.elements:
            raise ValueError("identity is not an element")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def multiply(self, a, b):
        return self._multiply(a, b)

    def power(self, g, k):
        out = self.identity
        for _ in range(k):
            out = self._multiply(out, g)
        return out

    def check_axioms(self):
        """Exhaustively verify closure, associativity, identity and inverses."""
        els = self.elements
        elset = set(els)
        mul = self._multiply
        for a, b in product(els, repeat=2):
            if mul(a, b) not in elset:
                return False
        for a, b, c in product(els, repeat=3):
            if mul(mul(a, b), c) != mul(a, mul(b, c)):
                return False
        for a in els:
            if mul(self.identity, a) != a or mul(a, self.identity) != a:
                return False
            if not any(mul(a, b) == self.identity for b in els):
                return False
        return True

    def table(self):
        return {(a, b): self._multiply(a, b) for a, b in product(self.elements, repeat=2)}

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, FiniteGroup)
                and self.elements == other.elements
                and self.identity == other.identity
                and self.table() == other.table())

    def __hash__(self):
        return hash((self.elements, self.identity))

    def __repr__(self):
        return f"<FiniteGroup {self.name}>"


def cyclic_group(n):
    """Z/n written additively as 0..n-1; 0 is the identity."""
    return FiniteGroup(range(n), lambda a, b: (a + b) % n, 0, f"C{n}")


def s2():
    """The group {e, t} of color swaps."""
    table = {("e", "e"): "e", ("e", "t"): "t", ("t", "e"): "t", ("t", "t"): "e"}
    return FiniteGroup(("e", "t"), lambda a, b: table[a, b], "e", "S2")


class GammaCIS:
    """A group together with one cycle index series per element."""

    def __init__(self, group, at):
        missing = [g for g in group.elements if g not in at]
        if missing:
            raise ValueError(f"no series given for elements {missing}")
        self.group = group
        self.at = dict(at)

    def __getitem__(self, g):
        return self.at[g]

    def __repr__(self):
        return f"<GammaCIS over {self.group.name}>"


def _same_group(f, g):
    if f.group != g.group:
        raise ValueError(f"group mismatch: {f.group.name} vs {g.group.name}")


def lift_ordinary(f, group):
    """Trivial action: the same series at every element."""
    return GammaCIS(group, {g: f for g in group.elements})


def gamma_add(f, g):
    _same_group(f, g)
    return GammaCIS(f.group, {x: cis_add(f.at[x], g.at[x]) for x in f.group})


def gamma_mul(f, g):
    _same_group(f, g)
    return GammaCIS(f.group, {x: cis_mul(f.at[x], g.at[x]) for x in f.group})


def gamma_compose(f, g):
    """Plethysm where part ``i`` of an outer monomial at ``x`` reads ``g`` at ``x**i``."""
    _same_group(f, g)
    group = g.group
    inner_series = [g.at[x] for x in group]
    at = {}
    for x in group:
        powers = {}

        def inner_for_part(i, x=x, powers=powers):
            s = powers.get(i)
            if s is None:
                s = powers[i] = g.at[group.power(x, i)]
            return s

        engine = Plethysm(f.at[x], inner_for_part, inner_series)
        at[x] = CycleIndexSeries(engine.component, f"{f.at[x].name}[{x}]({g.at[x].name})")
    return GammaCIS(group, at)


def quotient(f):
    """Average over the group: the cycle index of the orbit species."""
    group = f.group
    series = [f.at[x] for x in group]
    weight = Fraction(1, len(group))

    def compute(n):
        total = series[0].component(n)
        for s in series[1:]:
            total = total + s.component(n)
        return total * weight

    return CycleIndexSeries(compute, f"quotient over {group.name}")


__all__ = [
    "CompositionError",
    "FiniteGroup",
    "GammaCIS",
    "cyclic_group",
    "gamma_add",
    "gamma_compose",
    "gamma_mul",
    "lift_ordinary",
    "quotient",
    "s2",
]
