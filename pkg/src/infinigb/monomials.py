"""Sparse monomials over the countable alphabet x1, x2, ..., the weighted
grading and the five monomial orders.

A monomial is a finitely supported exponent vector, stored as a sorted tuple
of (variable index, exponent) pairs.  There is no upper bound on variable
indices; sparseness is the representation of infinitude.  Comparisons walk
the two sorted sequences, reading absent indices as exponent 0, under the
convention x1 < x2 < x3 < ...
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cmp_to_key

from .errors import ParseError


class OrderKind(enum.Enum):
    """The five supported monomial orders.

    All except PURE_LEX are homogeneous: a higher weighted degree always
    wins.  PURE_LEX is admitted although a degree bound then does not bound
    leading monomials (a variable bound does).
    """

    PURE_LEX = "plex"
    HOM_LEX = "hlex"
    HOM_ANTI_LEX = "halex"
    HOM_REV_LEX = "hrevlex"
    HOM_ANTI_REV_LEX = "harevlex"

    @property
    def homogeneous(self):
        return self is not OrderKind.PURE_LEX

    @classmethod
    def from_name(cls, name):
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown monomial order {name!r}")


@dataclass(frozen=True)
class WeightedAlphabet:
    """Degree assignment i -> d_i, default rule d_i = i.

    Finitely many indices may be overridden; beyond the overrides the
    identity tail applies, which keeps {i : d_i <= d} finite for every d.
    Arbitrary weight maps without a tail rule are not representable, since
    the finiteness condition cannot be checked pointwise.
    """

    overrides: tuple = ()

    def __post_init__(self):
        seen = set()
        for index, weight in self.overrides:
            if index < 1:
                raise ValueError("variable indices must be positive")
            if weight < 1:
                raise ValueError("weights must be positive")
            if index in seen:
                raise ValueError(f"duplicate weight override for x{index}")
            seen.add(index)
        object.__setattr__(self, "overrides", tuple(sorted(self.overrides)))

    @classmethod
    def with_weights(cls, mapping):
        return cls(tuple(mapping.items()))

    def weight(self, index):
        for i, w in self.overrides:
            if i == index:
                return w
        return index

    def indices_with_weight_at_most(self, bound):
        """All i with d_i <= bound, increasing; finite by construction."""
        special = {i for i, _ in self.overrides}
        out = [i for i in range(1, bound + 1) if i not in special]
        out.extend(i for i, w in self.overrides if w <= bound)
        out.sort()
        return out


DEFAULT_WEIGHTS = WeightedAlphabet()


class Monomial:
    """A monomial x^a with finitely many nonzero exponents.

    Immutable; exponents are stored as (index, exponent) pairs with strictly
    increasing indices and strictly positive exponents.  The empty tuple is
    the monomial 1.
    """

    __slots__ = ("exps",)

    def __init__(self, exps=()):
        exps = tuple(exps)
        last = 0
        for index, exponent in exps:
            if index <= last:
                raise ValueError("variable indices must be strictly increasing")
            if exponent < 1:
                raise ValueError("exponents must be strictly positive")
            last = index
        self.exps = exps

    @classmethod
    def one(cls):
        return cls()

    @classmethod
    def variable(cls, index, exponent=1):
        return cls(((index, exponent),))

    @classmethod
    def from_pairs(cls, pairs):
        """Forgiving builder: accumulates repeated indices, drops zeros."""
        acc = {}
        for index, exponent in pairs:
            acc[index] = acc.get(index, 0) + exponent
        return cls(tuple(sorted((i, e) for i, e in acc.items() if e != 0)))

    @property
    def is_one(self):
        return not self.exps

    def exponent(self, index):
        for i, e in self.exps:
            if i == index:
                return e
        return 0

    def support(self):
        return tuple(i for i, _ in self.exps)

    def max_index(self):
        """Smallest n with self in k[x1..xn]; 0 for the monomial 1."""
        return self.exps[-1][0] if self.exps else 0

    def degree(self, weights=DEFAULT_WEIGHTS):
        return sum(e * weights.weight(i) for i, e in self.exps)

    def __mul__(self, other):
        return Monomial(tuple(_merge_exponents(self.exps, other.exps)))

    def try_divide(self, divisor):
        """Return self / divisor when divisor divides exponentwise, else None."""
        quotient = []
        i, j = 0, 0
        a, b = self.exps, divisor.exps
        while j < len(b):
            if i >= len(a) or a[i][0] > b[j][0]:
                return None
            if a[i][0] < b[j][0]:
                quotient.append(a[i])
                i += 1
                continue
            rest = a[i][1] - b[j][1]
            if rest < 0:
                return None
            if rest > 0:
                quotient.append((a[i][0], rest))
            i += 1
            j += 1
        quotient.extend(a[i:])
        return Monomial(tuple(quotient))

    def divides(self, other):
        return other.try_divide(self) is not None

    def lcm(self, other):
        merged = {i: e for i, e in self.exps}
        for i, e in other.exps:
            if e > merged.get(i, 0):
                merged[i] = e
        return Monomial(tuple(sorted(merged.items())))

    def coprime(self, other):
        """True when the supports are disjoint, i.e. lcm = product."""
        mine = set(self.support())
        return not any(i in mine for i in other.support())

    def __eq__(self, other):
        if isinstance(other, Monomial):
            return self.exps == other.exps
        return NotImplemented

    def __hash__(self):
        return hash(self.exps)

    def __str__(self):
        return format_monomial(self)

    def __repr__(self):
        return f"Monomial({format_monomial(self)!r})"


def _merge_exponents(a, b):
    i, j = 0, 0
    while i < len(a) and j < len(b):
        if a[i][0] < b[j][0]:
            yield a[i]
            i += 1
        elif a[i][0] > b[j][0]:
            yield b[j]
            j += 1
        else:
            yield (a[i][0], a[i][1] + b[j][1])
            i += 1
            j += 1
    yield from a[i:]
    yield from b[j:]


def _cmp_at_last_difference(a, b):
    """Sign of a_i - b_i at the last index where the vectors differ."""
    i, j = len(a) - 1, len(b) - 1
    while i >= 0 and j >= 0:
        ia, ea = a[i]
        ib, eb = b[j]
        if ia > ib:
            return 1
        if ib > ia:
            return -1
        if ea != eb:
            return 1 if ea > eb else -1
        i -= 1
        j -= 1
    if i >= 0:
        return 1
    if j >= 0:
        return -1
    return 0


def _cmp_at_first_difference(a, b):
    """Sign of a_i - b_i at the first index where the vectors differ."""
    i, j = 0, 0
    while i < len(a) and j < len(b):
        ia, ea = a[i]
        ib, eb = b[j]
        if ia < ib:
            return 1
        if ib < ia:
            return -1
        if ea != eb:
            return 1 if ea > eb else -1
        i += 1
        j += 1
    if i < len(a):
        return 1
    if j < len(b):
        return -1
    return 0


def compare(a, b, order, weights=DEFAULT_WEIGHTS):
    """Total order on monomials: -1, 0 or 1 as a <, ==, > b.

    Equal only for identical exponent vectors.  The homogeneous kinds
    compare weighted degree first; ties (and PURE_LEX outright) are decided
    by the exponent at the first or last differing index.
    """
    if a.exps == b.exps:
        return 0
    if order is not OrderKind.PURE_LEX:
        da, db = a.degree(weights), b.degree(weights)
        if da != db:
            return 1 if da > db else -1
    if order is OrderKind.PURE_LEX or order is OrderKind.HOM_LEX:
        return _cmp_at_last_difference(a.exps, b.exps)
    if order is OrderKind.HOM_ANTI_LEX:
        return _cmp_at_first_difference(a.exps, b.exps)
    if order is OrderKind.HOM_REV_LEX:
        return -_cmp_at_first_difference(a.exps, b.exps)
    return -_cmp_at_last_difference(a.exps, b.exps)


def sort_key(order, weights=DEFAULT_WEIGHTS):
    """Ascending sort key under the given order, for use with sorted()."""
    return cmp_to_key(lambda a, b: compare(a, b, order, weights))


def monomials_of_degree(degree, weights=DEFAULT_WEIGHTS, variables=None):
    """All monomials of exact weighted degree, optionally over a variable set.

    Finite because only finitely many variables have weight <= degree.  With
    the default weights this set corresponds to the partitions of `degree`.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree == 0:
        return [Monomial.one()]
    indices = [
        i
        for i in weights.indices_with_weight_at_most(degree)
        if variables is None or i in variables
    ]
    out = []
    acc = []

    def descend(k, remaining):
        if remaining == 0:
            out.append(Monomial.from_pairs(acc))
            return
        if k < 0:
            return
        index = indices[k]
        w = weights.weight(index)
        descend(k - 1, remaining)
        exponent = 1
        while exponent * w <= remaining:
            acc.append((index, exponent))
            descend(k - 1, remaining - exponent * w)
            acc.pop()
            exponent += 1

    descend(len(indices) - 1, degree)
    return out


_MONO_TOKEN = re.compile(r"\s*(x(\d+)|\^|\*|(\d+))")


def format_monomial(m):
    if m.is_one:
        return "1"
    parts = []
    for index, exponent in m.exps:
        parts.append(f"x{index}" if exponent == 1 else f"x{index}^{exponent}")
    return "*".join(parts)


def parse_monomial(text):
    """Parse 'x1^2*x3' (or '1'); whitespace is allowed between tokens."""
    stripped = text.strip()
    if stripped == "1":
        return Monomial.one()
    pos = 0
    pairs = []
    expect_factor = True
    while pos < len(text):
        match = _MONO_TOKEN.match(text, pos)
        if match is None:
            if text[pos:].strip():
                raise ParseError("unexpected character", text, pos)
            break
        token = match.group(1)
        if expect_factor:
            if match.group(2) is None:
                raise ParseError("expected a variable like x3", text, match.start(1))
            index = int(match.group(2))
            if index < 1:
                raise ParseError("variable index must be positive", text, match.start(1))
            exponent = 1
            pos = match.end()
            nxt = _MONO_TOKEN.match(text, pos)
            if nxt is not None and nxt.group(1) == "^":
                pos = nxt.end()
                expo = _MONO_TOKEN.match(text, pos)
                if expo is None or expo.group(3) is None:
                    raise ParseError("expected an exponent", text, pos)
                exponent = int(expo.group(3))
                if exponent < 1:
                    raise ParseError("exponent must be positive", text, expo.start(1))
                pos = expo.end()
            pairs.append((index, exponent))
            expect_factor = False
        else:
            if token != "*":
                raise ParseError("expected '*' between factors", text, match.start(1))
            pos = match.end()
            expect_factor = True
    if expect_factor or not pairs:
        raise ParseError("incomplete monomial", text, len(text))
    return Monomial.from_pairs(pairs)
