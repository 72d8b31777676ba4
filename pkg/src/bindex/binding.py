"""Exact binding number and toughness.

b(G) = min |N(S)|/|S| over nonempty S with N(S) != V(G). All arithmetic
is integer or Fraction; no floats anywhere in this module, because the
regime dispatches downstream compare b against 1/r strictly.

Vertex sets are int bitmasks as in graph.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .graph import DomainError, Graph, LimitError, vertices_of
from .maxflow import Dinic

_BRUTE_MAX = 24
_DP_MAX = 20
_SETS_MAX = 20
_TOUGH_MAX = 16


@dataclass(frozen=True)
class BindingResult:
    value: Fraction
    witness: int
    method: str

    @classmethod
    def checked(cls, g: Graph, witness: int, method: str) -> "BindingResult":
        if witness == 0:
            raise ValueError("empty witness")
        nb = g.neighborhood(witness)
        if nb == g.mask_all:
            raise ValueError("witness has N(S) = V")
        value = Fraction(nb.bit_count(), witness.bit_count())
        return cls(value=value, witness=witness, method=method)

    @property
    def witness_vertices(self) -> tuple[int, ...]:
        return vertices_of(self.witness)


def _lex_less(a: int, b: int) -> bool:
    """True if sorted(vertices(a)) < sorted(vertices(b)) lexicographically.

    With equal popcounts this is decided by the lowest differing bit: it
    belongs to the set whose next vertex is smaller.
    """
    d = a ^ b
    if d == 0:
        return False
    return bool(d & -d & a)


def _better(num: int, den: int, mask: int, bn: int, bd: int, bm: int) -> bool:
    """Is num/den with witness mask better than the incumbent bn/bd, bm?"""
    lhs = num * bd
    rhs = bn * den
    if lhs != rhs:
        return lhs < rhs
    if den != bd:
        return den < bd
    return _lex_less(mask, bm)


def _isolated_result(g: Graph, method: str) -> Optional[BindingResult]:
    iso = g.isolated_vertices()
    if iso == 0:
        return None
    least = iso & -iso
    return BindingResult.checked(g, least, method)


def binding_number_bruteforce(g: Graph) -> BindingResult:
    """Exact b(G) by subset scan; n <= 24.

    Witness is the minimizer of smallest cardinality, ties broken by
    lexicographically least vertex tuple.
    """
    if g.n > _BRUTE_MAX:
        raise LimitError(f"brute force capped at n <= {_BRUTE_MAX}")
    iso = _isolated_result(g, "brute")
    if iso is not None:
        return iso
    n = g.n
    full = g.mask_all
    adj = g.adj
    bn, bd, bm = n, 1, 0  # worse than any singleton (deg <= n-1)
    if n <= _DP_MAX:
        size = 1 << n
        ns = [0] * size
        for m in range(1, size):
            low = m & -m
            ns[m] = ns[m & (m - 1)] | adj[low.bit_length() - 1]
            nb = ns[m]
            if nb != full:
                num = nb.bit_count()
                den = m.bit_count()
                if _better(num, den, m, bn, bd, bm):
                    bn, bd, bm = num, den, m
    else:
        k = 12
        lowfull = (1 << k) - 1
        na = [0] * (1 << k)
        for m in range(1, 1 << k):
            na[m] = na[m & (m - 1)] | adj[(m & -m).bit_length() - 1]
        hbits = n - k
        nbtab = [0] * (1 << hbits)
        for m in range(1, 1 << hbits):
            nbtab[m] = nbtab[m & (m - 1)] | adj[(m & -m).bit_length() - 1 + k]
        for hi in range(1 << hbits):
            base = nbtab[hi]
            himask = hi << k
            for lo in range(1 << k):
                if hi == 0 and lo == 0:
                    continue
                nb = base | na[lo]
                if nb != full:
                    m = himask | lo
                    num = nb.bit_count()
                    den = m.bit_count()
                    if _better(num, den, m, bn, bd, bm):
                        bn, bd, bm = num, den, m
    return BindingResult.checked(g, bm, "brute")


def binding_below_threshold(
    g: Graph, t: Fraction
) -> tuple[bool, Optional[int]]:
    """Decide whether some nonempty S with N(S) != V has |N(S)|/|S| < t.

    One restricted min cut per excluded vertex u: S is forced inside
    V without N(u), which is exactly the sets with u outside N(S).
    Returns a witness mask when the answer is yes, aggregated over u by
    minimum ratio with (size, lex) tie-break.
    """
    t = Fraction(t)
    if t <= 0:
        raise DomainError("threshold must be positive")
    a, c = t.numerator, t.denominator
    iso = _isolated_result(g, "flow")
    if iso is not None:
        return True, iso.witness
    n = g.n
    full = g.mask_all
    inf = a * n + c * n + 1
    best: Optional[tuple[int, int, int]] = None  # (num, den, mask)
    seen: set[int] = set()
    for u in range(n):
        sub = full & ~g.adj[u]
        if sub in seen:
            continue
        seen.add(sub)
        left = vertices_of(sub)
        rightmask = g.neighborhood(sub)
        right = vertices_of(rightmask)
        rid = {w: 2 + len(left) + j for j, w in enumerate(right)}
        net = Dinic(2 + len(left) + len(right))
        for i, v in enumerate(left):
            net.add_edge(0, 2 + i, a)
            row = g.adj[v]
            while row:
                lowb = row & -row
                net.add_edge(2 + i, rid[lowb.bit_length() - 1], inf)
                row ^= lowb
        for w in right:
            net.add_edge(rid[w], 1, c)
        flow = net.maxflow(0, 1)
        if flow >= a * len(left):
            continue
        smask = 0
        for node in net.source_side(0):
            if 2 <= node < 2 + len(left):
                smask |= 1 << left[node - 2]
        num = g.neighborhood(smask).bit_count()
        den = smask.bit_count()
        if best is None or _better(num, den, smask, *best):
            best = (num, den, smask)
    if best is None:
        return False, None
    return True, best[2]


def binding_number_flow(g: Graph) -> BindingResult:
    """Exact b(G) by Dinkelbach iteration over threshold decisions."""
    iso = _isolated_result(g, "flow")
    if iso is not None:
        return iso
    v = min(range(g.n), key=lambda u: (g.degree(u), u))
    witness = 1 << v
    t = Fraction(g.degree(v), 1)
    while True:
        ok, w = binding_below_threshold(g, t)
        if not ok:
            return BindingResult.checked(g, witness, "flow")
        assert w is not None
        witness = w
        t = Fraction(g.neighborhood(w).bit_count(), w.bit_count())


def binding_sets_all(g: Graph) -> list[int]:
    """All nonempty S with N(S) != V achieving b(G), lex order; n <= 20."""
    if g.n > _SETS_MAX:
        raise LimitError(f"binding set listing capped at n <= {_SETS_MAX}")
    b = binding_number_bruteforce(g).value
    bn, bd = b.numerator, b.denominator
    full = g.mask_all
    adj = g.adj
    size = 1 << g.n
    ns = [0] * size
    out = []
    for m in range(1, size):
        ns[m] = ns[m & (m - 1)] | adj[(m & -m).bit_length() - 1]
        nb = ns[m]
        if nb != full and nb.bit_count() * bd == m.bit_count() * bn:
            out.append(m)
    out.sort(key=vertices_of)
    return out


def toughness_bruteforce(g: Graph) -> Fraction:
    """tau(G) = min |S|/c(G-S) over cut sets S; 0 for disconnected G.

    Complete graphs have no cut set and are outside the domain.
    """
    if g.n > _TOUGH_MAX:
        raise LimitError(f"toughness brute force capped at n <= {_TOUGH_MAX}")
    n = g.n
    full = g.mask_all
    if all(row == full ^ (1 << v) for v, row in enumerate(g.adj)):
        raise DomainError("toughness undefined for complete graphs")
    if not g.is_connected():
        return Fraction(0)
    adj = g.adj
    best_num, best_den = 1, 0  # +infinity
    for s in range(1 << n):
        rem = full & ~s
        if rem == 0:
            continue
        comps = 0
        rest = rem
        while rest:
            comps += 1
            comp = rest & -rest
            frontier = comp
            while frontier:
                grown = 0
                while frontier:
                    lowb = frontier & -frontier
                    grown |= adj[lowb.bit_length() - 1]
                    frontier ^= lowb
                frontier = grown & rem & ~comp
                comp |= frontier
            rest &= ~comp
        if comps < 2:
            continue
        num = s.bit_count()
        if num * best_den < best_num * comps:
            best_num, best_den = num, comps
    return Fraction(best_num, best_den)
