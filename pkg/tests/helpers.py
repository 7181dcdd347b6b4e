"""Shared generators and hypothesis strategies for the test suite."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from infinigb.monomials import DEFAULT_WEIGHTS, Monomial, OrderKind
from infinigb.polynomials import Polynomial, RingContext

ALL_ORDERS = list(OrderKind)
HOMOGENEOUS_ORDERS = [o for o in OrderKind if o.homogeneous]


def monomials(max_index=7, max_exponent=4, max_factors=4):
    return st.lists(
        st.tuples(
            st.integers(1, max_index), st.integers(1, max_exponent)
        ),
        max_size=max_factors,
    ).map(Monomial.from_pairs)


def coefficients():
    return st.one_of(
        st.integers(-6, 6).filter(bool),
        st.fractions(
            min_value=-4, max_value=4, max_denominator=5
        ).filter(bool),
    )


def polynomials(context, max_terms=4, **kwargs):
    return st.lists(
        st.tuples(coefficients(), monomials(**kwargs)), max_size=max_terms
    ).map(lambda pairs: Polynomial.from_terms(context, pairs))


def nonzero_polynomials(context, **kwargs):
    return polynomials(context, **kwargs).filter(lambda f: not f.is_zero)


def contexts():
    return st.sampled_from([RingContext(order) for order in ALL_ORDERS])


def random_monomial(rng, max_var, max_degree, weights=DEFAULT_WEIGHTS):
    """Rejection-sample a monomial over x1..x{max_var} of weighted degree
    within the bound (possibly the monomial 1)."""
    while True:
        pairs = []
        for index in range(1, max_var + 1):
            exponent = rng.randint(0, 3)
            if exponent:
                pairs.append((index, exponent))
        m = Monomial.from_pairs(pairs)
        if m.degree(weights) <= max_degree:
            return m


def random_polynomial(rng, context, max_var, max_degree, max_terms, allow_zero=False):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        coefficient = rng.choice([-3, -2, -1, 1, 2, 3])
        terms.append(
            (Fraction(coefficient), random_monomial(rng, max_var, max_degree))
        )
    f = Polynomial.from_terms(context, terms)
    if f.is_zero and not allow_zero:
        return random_polynomial(
            rng, context, max_var, max_degree, max_terms, allow_zero
        )
    return f
