"""Integer polynomials with certified real root isolation.

Coefficients are stored ascending (coeffs[i] multiplies x^i) and printed
descending. Root work runs on the square-free part through Sturm chains
kept as primitive integer polynomials (each remainder is rescaled by a
positive rational, which preserves signs). All queries are exact; floats
appear only in the convenience accessors of RootInterval.

largest_real_root searches [0, B] with B a Cauchy bound, which covers
every Perron root of a nonnegative matrix; polynomials whose real roots
are all negative are out of domain here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Sequence, Union

from .graph import DomainError

LESS, EQUAL, GREATER = -1, 0, 1

_WIDTH = Fraction(1, 1 << 40)


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        out: Union[int, Fraction] = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def sign_at(self, x: Fraction) -> int:
        """Sign of p(a/b) via the integer b^deg * p(a/b), Horner style."""
        if not self.coeffs:
            return 0
        a, b = x.numerator, x.denominator
        out = 0
        bpow = 1
        for c in reversed(self.coeffs):
            out = out * a + c * bpow
            bpow *= b
        return (out > 0) - (out < 0)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union[int, "IntPolynomial"]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1) if self and other else []
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def primitive(self) -> "IntPolynomial":
        """Divide by the content, keeping the sign of every coefficient."""
        if not self.coeffs:
            return self
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, abs(c))
        return IntPolynomial([c // g for c in self.coeffs])

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                term = xpow if abs(c) == 1 else f"{abs(c)}*{xpow}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"


def _frac_divmod(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b):
        f = rem[-1] / b[-1]
        shift = len(rem) - len(b)
        quo[shift] = f
        for i, c in enumerate(b):
            rem[shift + i] -= f * c
        while rem and rem[-1] == 0:
            rem.pop()
        if not rem:
            break
    return quo, rem


def _to_frac(p: IntPolynomial) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _from_frac(cs: Sequence[Fraction]) -> IntPolynomial:
    """Scale by the positive lcm of denominators, then primitivize."""
    if not cs:
        return IntPolynomial([])
    mult = 1
    for c in cs:
        mult = mult * c.denominator // int_gcd(mult, c.denominator)
    return IntPolynomial([int(c * mult) for c in cs]).primitive()


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd with positive leading coefficient."""
    fa, fb = _to_frac(a), _to_frac(b)
    while fb:
        _, fr = _frac_divmod(fa, fb)
        fa, fb = fb, fr
    out = _from_frac(fa)
    if out and out.lead < 0:
        out = -out
    return out


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    if p.degree < 1:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    if g.degree < 1:
        out = p.primitive()
    else:
        quo, rem = _frac_divmod(_to_frac(p), _to_frac(g))
        assert not rem
        out = _from_frac(quo)
    if out.lead < 0:
        out = -out
    return out


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of a square-free p, entries primitive."""
    chain = [p, p.derivative().primitive()]
    while chain[-1].degree >= 1:
        _, rem = _frac_divmod(_to_frac(chain[-2]), _to_frac(chain[-1]))
        if not rem:
            break
        chain.append(-_from_frac(rem))
    return [q for q in chain if q]


def _variations(chain: Sequence[IntPolynomial], x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: Sequence[IntPolynomial], lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots in (lo, hi]; endpoints must not be roots of chain[0]."""
    return _variations(chain, lo) - _variations(chain, hi)


@dataclass(frozen=True)
class RootInterval:
    """Certified bracket on the largest real root of poly.

    Either lo == hi and poly(lo) == 0 exactly, or the root lies in
    (lo, hi] with no real root of poly above hi (Sturm counts).
    """

    poly: IntPolynomial
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def lo_float(self) -> float:
        return float(self.lo)

    @property
    def hi_float(self) -> float:
        return float(self.hi)

    @property
    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo_float - slack <= x <= self.hi_float + slack

    def verify(self) -> bool:
        """Recheck the certificate from scratch."""
        sf = squarefree_part(self.poly)
        if self.exact:
            return sf.sign_at(self.lo) == 0
        if sf.sign_at(self.lo) == 0 or sf.sign_at(self.hi) == 0:
            return False
        chain = sturm_chain(sf)
        bound = _cauchy_bound(sf)
        if self.hi < bound and count_roots(chain, self.hi, bound) != 0:
            return False
        return count_roots(chain, self.lo, self.hi) == 1


def _cauchy_bound(p: IntPolynomial) -> Fraction:
    lead = abs(p.lead)
    top = max(abs(c) for c in p.coeffs)
    return Fraction(1 + (top + lead - 1) // lead)


class _Isolator:
    """Bisection state for the largest nonnegative real root of one poly."""

    __slots__ = ("orig", "sf", "chain", "lo", "hi", "vlo", "vhi", "exact")

    def __init__(self, p: IntPolynomial) -> None:
        if p.degree < 1:
            raise DomainError("constant polynomial has no roots")
        self.orig = p
        sf = squarefree_part(p)
        # factor out a root at 0 so Sturm endpoints stay off the roots
        root_at_zero = sf.coeffs[0] == 0
        if root_at_zero:
            sf = IntPolynomial(sf.coeffs[1:])
        self.exact = False
        if sf.degree < 1:
            if not root_at_zero:
                raise DomainError("no real root in the nonnegative range")
            self._set_exact(Fraction(0))
            return
        if sf.degree == 1:
            # bisection midpoints are dyadic and may never land on a
            # rational root, so solve the linear factor outright
            root = Fraction(-sf.coeffs[0], sf.coeffs[1])
            if root > 0 or (root == 0 and not root_at_zero):
                self._set_exact(root)
                return
            if root_at_zero:
                self._set_exact(Fraction(0))
                return
            raise DomainError("no real root in the nonnegative range")
        chain = sturm_chain(sf)
        bound = _cauchy_bound(sf)
        vlo = _variations(chain, Fraction(0))
        vhi = _variations(chain, bound)
        if vlo - vhi == 0:
            if root_at_zero:
                self._set_exact(Fraction(0))
                return
            raise DomainError("no real root in the nonnegative range")
        self.sf = sf
        self.chain = chain
        self.lo = Fraction(0)
        self.hi = bound
        self.vlo = vlo
        self.vhi = vhi

    def _set_exact(self, x: Fraction) -> None:
        self.exact = True
        self.lo = self.hi = x

    def count(self) -> int:
        return self.vlo - self.vhi

    def width(self) -> Fraction:
        return self.hi - self.lo

    def step(self) -> None:
        """One bisection step keeping the largest root in (lo, hi]."""
        if self.exact:
            return
        mid = (self.lo + self.hi) / 2
        smid = self.sf.sign_at(mid)
        if smid == 0:
            # mid is a simple root; is anything above it?
            quo, rem = _frac_divmod(_to_frac(self.sf), [-mid, Fraction(1)])
            assert not rem
            reduced = _from_frac(quo)
            if reduced.degree >= 1:
                chain = sturm_chain(reduced)
                above = _variations(chain, mid) - _variations(chain, self.hi)
                if above > 0:
                    self.sf = reduced
                    self.chain = chain
                    self.lo = mid
                    self.vlo = _variations(chain, mid)
                    self.vhi = _variations(chain, self.hi)
                    return
            self._set_exact(mid)
            return
        vmid = _variations(self.chain, mid)
        if vmid - self.vhi > 0:
            self.lo, self.vlo = mid, vmid
        else:
            self.hi, self.vhi = mid, vmid

    def refine(self, width: Fraction) -> None:
        while not self.exact and (self.width() >= width or self.count() != 1):
            self.step()

    def interval(self) -> RootInterval:
        return RootInterval(poly=self.orig, lo=self.lo, hi=self.hi)


def largest_real_root(p: IntPolynomial) -> RootInterval:
    """Bracket of width < 2^-40 on the largest real root in [0, Cauchy bound].

    Perron roots of nonnegative matrices always land in that range.
    """
    iso = _Isolator(p)
    iso.refine(_WIDTH)
    return iso.interval()


def compare_largest_roots(pa: IntPolynomial, pb: IntPolynomial) -> int:
    """Certified comparison of largest nonnegative real roots: -1, 0, or 1.

    Equality is recognized through a root of gcd(pa, pb) inside the
    overlap of the two brackets; disjoint brackets decide order. Never
    consults floating point.
    """
    ia, ib = _Isolator(pa), _Isolator(pb)
    ia.refine(_WIDTH)
    ib.refine(_WIDTH)
    g = poly_gcd(squarefree_part(pa), squarefree_part(pb))
    gchain = sturm_chain(g) if g.degree >= 1 else None
    while True:
        if ia.exact and ib.exact:
            a, b = ia.lo, ib.lo
            return LESS if a < b else GREATER if a > b else EQUAL
        if ia.hi <= ib.lo:
            return LESS
        if ib.hi <= ia.lo:
            return GREATER
        if ia.exact:
            x = ia.lo
            if ib.lo < x <= ib.hi and ib.sf.sign_at(x) == 0:
                return EQUAL
        elif ib.exact:
            x = ib.lo
            if ia.lo < x <= ia.hi and ia.sf.sign_at(x) == 0:
                return EQUAL
        elif gchain is not None:
            olo = max(ia.lo, ib.lo)
            ohi = min(ia.hi, ib.hi)
            if olo < ohi and g.sign_at(olo) != 0 and g.sign_at(ohi) != 0:
                if count_roots(gchain, olo, ohi) >= 1:
                    return EQUAL
        for _ in range(4):
            ia.step()
            ib.step()
