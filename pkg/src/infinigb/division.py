"""Division with remainder, ideal membership and standard monomials.

The algorithm reduces leading terms first and moves irreducible leading
terms wholesale to the remainder, so the leading monomial of the working
polynomial strictly decreases at every step and termination follows from
the well-ordering of the ambient order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CertificationError,
    HomogeneityError,
    RingContextMismatch,
    ZeroPolynomialError,
)
from .monomials import Monomial
from .polynomials import Polynomial


@dataclass(frozen=True)
class DivisionResult:
    """f = sum of quotient * divisor over `quotients` plus `remainder`.

    quotients holds (divisor position, quotient polynomial) pairs for the
    divisors that were actually used; no monomial of the remainder is
    divisible by any divisor leading monomial, and every nonzero product
    quotient * divisor has leading monomial <= lm(f).
    """

    quotients: tuple
    remainder: Polynomial
    step_count: int

    def quotient_for(self, position):
        for index, q in self.quotients:
            if index == position:
                return q
        return None


def divide(f, divisors):
    """Divide f by an ordered sequence of nonzero divisors.

    Among divisors whose leading monomial divides the current leading
    monomial, the first in the sequence wins, which makes the result
    deterministic for a fixed divisor order.
    """
    divisors = list(divisors)
    context = f.context
    leads = []
    for g in divisors:
        if g.context != context:
            raise RingContextMismatch(f"{g.context} does not match {context}")
        if g.is_zero:
            raise ZeroPolynomialError("zero divisor")
        lc, lm = g.leading()
        leads.append((lm, lc, g))

    quotient_terms = {}
    remainder_terms = []
    work = f
    steps = 0
    while not work.is_zero:
        c, m = work.leading()
        for position, (lm_g, lc_g, g) in enumerate(leads):
            factor = m.try_divide(lm_g)
            if factor is not None:
                coefficient = c / lc_g
                work = work - g.times_term(coefficient, factor)
                quotient_terms.setdefault(position, []).append(
                    (coefficient, factor)
                )
                break
        else:
            remainder_terms.append((c, m))
            work = work.drop_leading()
        steps += 1
    quotients = tuple(
        (position, Polynomial.from_terms(context, terms))
        for position, terms in sorted(quotient_terms.items())
    )
    return DivisionResult(quotients, Polynomial(context, tuple(remainder_terms)), steps)


def remainder(f, divisors):
    """The remainder of f; unique when the divisors form a Groebner base."""
    return divide(f, divisors).remainder


def is_member(f, basis):
    """Ideal membership: f lies in the span iff its remainder is zero.

    Requires a certified basis; remainder-based membership is only sound
    against an actual Groebner base.
    """
    if not basis.is_certified:
        raise CertificationError(
            f"membership needs a certified basis, got {basis.certificate}"
        )
    return remainder(f, basis.elements).is_zero


def standard_monomials(basis, degree, variables=None):
    """Monomials of the given weighted degree outside the leading-term ideal.

    These form a vector-space basis of the degree slice of the quotient by
    the span.  Requires a homogeneous order and homogeneous elements; the
    enumeration may be restricted to a variable set (anything supporting
    `in`), e.g. the generators of a subring.
    """
    context = basis.context
    if not context.order.homogeneous:
        raise HomogeneityError("standard monomials need a homogeneous order")
    leads = []
    for g in basis.elements:
        if not g.is_homogeneous():
            raise HomogeneityError("standard monomials need homogeneous elements")
        leads.append(g.lm())
    if any(lm.is_one for lm in leads):
        return []
    if degree == 0:
        return [Monomial.one()]

    weights = context.weights
    indices = [
        i
        for i in weights.indices_with_weight_at_most(degree)
        if variables is None or i in variables
    ]
    position = {index: k for k, index in enumerate(indices)}
    # The walk fixes exponents from the largest variable down, so a leading
    # monomial becomes decidable once the smallest variable of its support is
    # reached; bucket it there.  A leading monomial using an inadmissible
    # variable never divides anything enumerated here.
    buckets = [[] for _ in indices]
    for lm in leads:
        if all(i in position for i in lm.support()):
            buckets[position[lm.exps[0][0]]].append(lm)

    exponents = [0] * len(indices)
    out = []

    def cap_from_leads(k, budget):
        cap = budget
        for lm in buckets[k]:
            need = lm.exponent(indices[k])
            if all(
                exponents[position[i]] >= e
                for i, e in lm.exps
                if i != indices[k]
            ):
                cap = min(cap, need - 1)
        return cap

    def descend(k, remaining):
        if k < 0:
            if remaining == 0:
                out.append(
                    Monomial.from_pairs(
                        (indices[j], exponents[j])
                        for j in range(len(indices))
                        if exponents[j]
                    )
                )
            return
        w = weights.weight(indices[k])
        for exponent in range(cap_from_leads(k, remaining // w) + 1):
            exponents[k] = exponent
            descend(k - 1, remaining - exponent * w)
        exponents[k] = 0

    descend(len(indices) - 1, degree)
    return out
