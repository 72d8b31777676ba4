"""Integer polynomials, Sturm chains, certified largest real roots."""

from fractions import Fraction

import pytest

from bindex.graph import DomainError
from bindex.polynomials import (
    IntPolynomial,
    RootInterval,
    compare_largest_roots,
    count_roots,
    largest_real_root,
    poly_gcd,
    squarefree_part,
    sturm_chain,
)

x = IntPolynomial([0, 1])


def test_construction_and_normalization():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1 and p.lead == 2
    z = IntPolynomial([0])
    assert z.coeffs == () and z.degree == -1 and not z
    assert IntPolynomial([3]).degree == 0


def test_arithmetic():
    p = x * x - IntPolynomial([12])
    assert p.coeffs == (-12, 0, 1)
    assert (p + IntPolynomial([12])).coeffs == (0, 0, 1)
    assert (-p).coeffs == (12, 0, -1)
    assert (p * 3).coeffs == (-36, 0, 3)
    q = IntPolynomial([-1, 1]) * IntPolynomial([1, 1])
    assert q.coeffs == (-1, 0, 1)
    assert p - p == IntPolynomial([0])


def test_evaluation_and_sign():
    p = x * x - IntPolynomial([12])
    assert p(4) == 4
    assert p(Fraction(7, 2)) == Fraction(1, 4)
    assert p.sign_at(Fraction(3)) == -1
    assert p.sign_at(Fraction(4)) == 1
    assert p.sign_at(Fraction(7, 2)) == 1
    assert IntPolynomial([-12, 0, 1]).derivative().coeffs == (0, 2)


def test_str_forms():
    assert str(x * x - IntPolynomial([12])) == "x^2 - 12"
    assert repr(x) == "IntPolynomial(x)"


def test_primitive():
    assert IntPolynomial([6, -9, 3]).primitive().coeffs == (2, -3, 1)
    assert IntPolynomial([-6, 9, -3]).primitive().coeffs == (-2, 3, -1)


def test_gcd_and_squarefree():
    a = IntPolynomial([3, -4, 1])  # (x-1)(x-3)
    b = IntPolynomial([-9, 0, 1])
    assert poly_gcd(a, b).coeffs == (-3, 1)
    p = IntPolynomial([-1, 1]) * IntPolynomial([-1, 1]) * IntPolynomial([2, 1])
    assert squarefree_part(p).coeffs == (-2, 1, 1)


def test_sturm_counts():
    chain = sturm_chain(IntPolynomial([-2, 0, 1]))
    assert count_roots(chain, Fraction(0), Fraction(2)) == 1
    assert count_roots(chain, Fraction(2), Fraction(3)) == 0
    chain = sturm_chain(IntPolynomial([3, -4, 1]))
    assert count_roots(chain, Fraction(0), Fraction(4)) == 2


def test_largest_root_exact_linear():
    iv = largest_real_root(IntPolynomial([-5, 1]))
    assert iv.exact and iv.lo == iv.hi == 5
    assert iv.verify()
    iv = largest_real_root(IntPolynomial([-5, 2]))
    assert iv.exact and iv.lo == Fraction(5, 2)


def test_largest_root_zero_cases():
    iv = largest_real_root(IntPolynomial([0, 0, 0, 1]))
    assert iv.exact and iv.lo == 0
    iv = largest_real_root(IntPolynomial([0, -1, 1]))
    assert iv.exact and iv.lo == 1


def test_largest_root_certified_interval():
    iv = largest_real_root(IntPolynomial([-12, 0, 1]))
    assert not iv.exact
    assert iv.hi - iv.lo < Fraction(1, 2 ** 40)
    assert abs(iv.midpoint - 3.4641016151377544) < 1e-9
    assert iv.verify()
    assert iv.contains(3.4641016151377544)
    assert not iv.contains(3.46, 0.0)
    assert iv.contains(3.46, 0.01)


def test_largest_root_cubic_anchor():
    p = IntPolynomial([20, -13, -10, 1])
    iv = largest_real_root(p)
    assert iv.contains(11.0153429388877, 1e-9)
    assert iv.verify()


def test_largest_root_domain_errors():
    with pytest.raises(DomainError):
        largest_real_root(IntPolynomial([1, 0, 1]))  # no real roots
    with pytest.raises(DomainError):
        largest_real_root(IntPolynomial([5, 1]))  # only root is negative
    with pytest.raises(DomainError):
        largest_real_root(IntPolynomial([7]))
    with pytest.raises(DomainError):
        largest_real_root(IntPolynomial([0]))


def test_compare_largest_roots():
    a = IntPolynomial([-12, 0, 1])
    b = IntPolynomial([-13, 0, 1])
    assert compare_largest_roots(a, b) < 0
    assert compare_largest_roots(b, a) > 0
    assert compare_largest_roots(a, a) == 0
    # equal roots reached through different polynomials
    c = IntPolynomial([3, -4, 1])       # roots 1, 3
    d = IntPolynomial([-9, 0, 1])       # roots -3, 3
    assert compare_largest_roots(c, d) == 0
    assert compare_largest_roots(IntPolynomial([-2, 1]), IntPolynomial([-4, 0, 1])) == 0
    # close but distinct: 1000000/999999 vs 1
    e = IntPolynomial([-1000000, 999999])
    f = IntPolynomial([-1, 1])
    assert compare_largest_roots(e, f) > 0


def test_root_interval_verify_rejects_lies():
    p = IntPolynomial([-12, 0, 1])
    assert not RootInterval(p, Fraction(1), Fraction(2)).verify()
    assert RootInterval(p, Fraction(3), Fraction(5)).verify()
    # an interval holding both roots of (x-1)(x-3) is not a certificate
    q = IntPolynomial([3, -4, 1])
    assert not RootInterval(q, Fraction(0), Fraction(4)).verify()
