"""Splitting-principle Chern class calculus over abstract graded rings.

A bundle is represented by its Chern classes c_1..c_rank, each an element of
some graded ring supplied through a small handle interface.  Symmetric-power
Chern classes are computed once and for all as universal integer polynomials
in c_1..c_r by writing the roots of Sym^m as sums of formal roots and
rewriting the elementary symmetric functions of that multiset through lex
leading-term elimination.  The same calculus then serves the Grassmannian
ring and projective-bundle rings by substitution.

All coefficients are arbitrary-precision integers and every value is
immutable.  The universal polynomial cache is a functools.lru_cache and is
safe to share across threads.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .schubert import GrassCtx, SchubertCycle, chern_tautological
from .schubert import integrate as _grass_integrate


class GradedRing(ABC):
    """Handle for a commutative graded ring with integer integration.

    Elements must support +, -, * (with each other and with ints) and
    nonnegative integer powers.  Multiplication adds degrees and anything
    above top_degree is identically zero in the ring.
    """

    @property
    @abstractmethod
    def top_degree(self) -> int: ...

    @abstractmethod
    def one(self): ...

    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def component(self, x, degree: int):
        """Homogeneous part of x in the given degree."""

    @abstractmethod
    def integrate(self, x) -> int:
        """Integer degree of the top-degree part of x."""


@dataclass(frozen=True)
class GrassRing(GradedRing):
    """The Chow ring of G(k, n) as a graded ring handle."""

    ctx: GrassCtx

    @property
    def top_degree(self) -> int:
        return self.ctx.dim

    def one(self):
        return SchubertCycle.unit(self.ctx)

    def zero(self):
        return SchubertCycle.zero(self.ctx)

    def component(self, x, degree):
        return x.component(degree)

    def integrate(self, x) -> int:
        return _grass_integrate(x)

    def schubert(self, parts) -> SchubertCycle:
        from .schubert import schubert_class

        return schubert_class(self.ctx, parts)

    def tautological(self, which: str) -> "ChernVector":
        """Chern vector of the tautological bundle named by `which`
        ("sub", "sub_dual" or "quotient")."""
        rank = self.ctx.k if which in ("sub", "sub_dual") else self.ctx.width
        classes = tuple(chern_tautological(self.ctx, which, i) for i in range(1, rank + 1))
        return ChernVector(self, rank, classes)


class UniversalPoly:
    """Integer-coefficient polynomial in formal graded symbols.

    degrees[i] is the degree of symbol i; terms map exponent tuples to
    nonzero integer coefficients.  Instances are value objects and never
    mutated after construction.
    """

    __slots__ = ("degrees", "terms")

    def __init__(self, degrees, terms=()):
        degrees = tuple(int(d) for d in degrees)
        clean = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for expo, coeff in items:
            expo = tuple(int(e) for e in expo)
            if len(expo) != len(degrees):
                raise ValueError("exponent arity does not match the symbol count")
            coeff = int(coeff)
            if coeff:
                clean[expo] = clean.get(expo, 0) + coeff
                if not clean[expo]:
                    del clean[expo]
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("UniversalPoly is immutable")

    @classmethod
    def constant(cls, degrees, value: int) -> "UniversalPoly":
        zero_expo = (0,) * len(tuple(degrees))
        return cls(degrees, {zero_expo: value} if value else {})

    @classmethod
    def variables(cls, degrees) -> list["UniversalPoly"]:
        degrees = tuple(degrees)
        gens = []
        for i in range(len(degrees)):
            expo = tuple(1 if j == i else 0 for j in range(len(degrees)))
            gens.append(cls(degrees, {expo: 1}))
        return gens

    def monomial_degree(self, expo) -> int:
        return sum(e * d for e, d in zip(expo, self.degrees))

    def component(self, degree: int) -> "UniversalPoly":
        return UniversalPoly(
            self.degrees,
            {e: c for e, c in self.terms.items() if self.monomial_degree(e) == degree},
        )

    def codimensions(self) -> list[int]:
        return sorted({self.monomial_degree(e) for e in self.terms})

    def _coerce(self, other):
        if isinstance(other, UniversalPoly):
            if other.degrees != self.degrees:
                raise ValueError("polynomials use different symbol gradings")
            return other
        if isinstance(other, int):
            return UniversalPoly.constant(self.degrees, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return UniversalPoly(self.degrees, out)

    __radd__ = __add__

    def __neg__(self):
        return UniversalPoly(self.degrees, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return UniversalPoly(self.degrees, {e: other * c for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return UniversalPoly(self.degrees, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        out = UniversalPoly.constant(self.degrees, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniversalPoly.constant(self.degrees, other)
        if not isinstance(other, UniversalPoly):
            return NotImplemented
        return self.degrees == other.degrees and self.terms == other.terms

    def __hash__(self):
        return hash((self.degrees, frozenset(self.terms.items())))

    def substitute(self, values, one, zero):
        """Evaluate with values[i] replacing symbol i.

        values may be ring elements or plain integers; one and zero are the
        unit and zero of the target ring.  Substituting a rank-r Chern
        vector is a graded ring map when the value degrees match.
        """
        values = list(values)
        if len(values) != len(self.degrees):
            raise ValueError("value count does not match the symbol count")
        powers = {}

        def pw(i, e):
            if (i, e) not in powers:
                acc = values[i]
                for _ in range(e - 1):
                    acc = acc * values[i]
                powers[(i, e)] = acc
            return powers[(i, e)]

        acc = zero
        for expo, coeff in sorted(self.terms.items()):
            term = one
            for i, e in enumerate(expo):
                if e:
                    term = term * pw(i, e)
            acc = acc + coeff * term
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for expo, coeff in sorted(self.terms.items(), key=lambda kv: (self.monomial_degree(kv[0]), kv[0])):
            factors = [f"c{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(expo) if e]
            body = "*".join(factors) if factors else "1"
            if abs(coeff) == 1 and factors:
                text = body
            elif factors:
                text = f"{abs(coeff)}*{body}"
            else:
                text = str(abs(coeff))
            chunks.append(("+ " if coeff > 0 else "- ") + text if chunks else ("-" + text if coeff < 0 else text))
        return " ".join(chunks)

    def __repr__(self):
        return f"<UniversalPoly {self}>"


@dataclass(frozen=True)
class FormalRing(GradedRing):
    """Polynomial ring on weighted symbols, used to run the calculus
    symbolically.  Integration is not defined here."""

    degrees: tuple
    top: int

    @property
    def top_degree(self) -> int:
        return self.top

    def one(self):
        return UniversalPoly.constant(self.degrees, 1)

    def zero(self):
        return UniversalPoly.constant(self.degrees, 0)

    def component(self, x, degree):
        return x.component(degree)

    def integrate(self, x) -> int:
        raise NotImplementedError("a formal symbol ring has no integration functional")

    def variables(self) -> list[UniversalPoly]:
        return UniversalPoly.variables(self.degrees)


def _elementary_symmetric(r: int, i: int) -> UniversalPoly:
    degrees = (1,) * r
    terms = {}
    for combo in itertools.combinations(range(r), i):
        expo = tuple(1 if j in combo else 0 for j in range(r))
        terms[expo] = 1
    return UniversalPoly(degrees, terms)


@lru_cache(maxsize=None)
def _elementary_monomial(r: int, expo: tuple) -> UniversalPoly:
    # product of e_{i+1}(x_1..x_r)^expo[i], built incrementally so each
    # monomial is expanded once per process
    if not any(expo):
        return UniversalPoly.constant((1,) * r, 1)
    i = max(j for j, e in enumerate(expo) if e)
    prev = tuple(e - 1 if j == i else e for j, e in enumerate(expo))
    return _elementary_monomial(r, prev) * _elementary_symmetric(r, i + 1)


def reduce_symmetric(p: UniversalPoly) -> UniversalPoly:
    """Rewrite a symmetric polynomial in the formal roots x_1..x_r as a
    polynomial in the elementary symmetric functions e_1..e_r.

    Uses lex leading-term elimination: the lex-leading monomial of a
    symmetric polynomial has weakly decreasing exponents (a1 >= a2 >= ...),
    and subtracting its coefficient times e_1^{a1-a2} e_2^{a2-a3} ... kills
    it while introducing only lex-smaller monomials.  A leading monomial
    with increasing exponents proves the input is not symmetric.
    """
    degrees = p.degrees
    if any(d != 1 for d in degrees):
        raise ValueError("input must live in the degree-1 root symbols")
    r = len(degrees)
    work = dict(p.terms)
    out = {}
    while work:
        expo = max(work)
        if any(expo[i] < expo[i + 1] for i in range(r - 1)):
            raise ValueError("polynomial is not symmetric in the roots")
        coeff = work[expo]
        e_expo = tuple(expo[i] - (expo[i + 1] if i + 1 < r else 0) for i in range(r))
        out[e_expo] = out.get(e_expo, 0) + coeff
        for m, c in _elementary_monomial(r, e_expo).terms.items():
            nv = work.get(m, 0) - coeff * c
            if nv:
                work[m] = nv
            else:
                work.pop(m, None)
    return UniversalPoly(tuple(range(1, r + 1)), out)


@lru_cache(maxsize=None)
def universal_sym_chern(r: int, m: int) -> tuple:
    """Chern classes of Sym^m of a rank-r bundle as universal polynomials.

    Returns (c_1, ..., c_R) with R = binom(m + r - 1, r - 1), each a
    UniversalPoly in symbols of degrees 1..r standing for c_1..c_r of the
    input bundle.  The roots of Sym^m are all sums of m formal roots with
    repetition; the result is computed once per (r, m) and cached.
    """
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"rank must be a positive integer, got {r}")
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"symmetric power must be nonnegative, got {m}")
    xs = UniversalPoly.variables((1,) * r)
    zero = UniversalPoly.constant((1,) * r, 0)
    one = UniversalPoly.constant((1,) * r, 1)
    roots = []
    for combo in itertools.combinations_with_replacement(range(r), m):
        root = zero
        for i in combo:
            root = root + xs[i]
        roots.append(root)
    # coefficients of prod (1 + root * t); slot i is e_i of the root multiset
    coeffs = [one]
    for root in roots:
        coeffs = [coeffs[0]] + [coeffs[i] + coeffs[i - 1] * root for i in range(1, len(coeffs))] + [coeffs[-1] * root]
    return tuple(reduce_symmetric(c) for c in coeffs[1:])


@dataclass(frozen=True)
class ChernVector:
    """A bundle presented by its Chern classes c_1..c_rank in a graded ring.

    classes[i] is c_{i+1}; c_0 is the ring unit implicitly.  rank may
    exceed the ring's top degree, in which case the excess classes are the
    zero element.
    """

    ring: GradedRing
    rank: int
    classes: tuple

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if len(self.classes) != self.rank:
            raise ValueError(f"expected {self.rank} classes, got {len(self.classes)}")

    @classmethod
    def trivial(cls, ring: GradedRing, rank: int) -> "ChernVector":
        return cls(ring, rank, tuple(ring.zero() for _ in range(rank)))

    def c(self, i: int):
        """c_i, with c_0 = 1 and c_i = 0 above the rank."""
        if i == 0:
            return self.ring.one()
        if 1 <= i <= self.rank:
            return self.classes[i - 1]
        if i > self.rank:
            return self.ring.zero()
        raise ValueError("negative Chern index")

    def total_series(self, top: int) -> list:
        """[c_0, c_1, ..., c_top] padded with zeros above the rank."""
        return [self.c(i) for i in range(top + 1)]

    def total(self):
        """The inhomogeneous total class 1 + c_1 + ... + c_rank."""
        acc = self.ring.one()
        for c in self.classes:
            acc = acc + c
        return acc


def _series_mul(a: list, b: list, ring: GradedRing, top: int) -> list:
    out = []
    for d in range(top + 1):
        acc = ring.zero()
        for i in range(d + 1):
            if i < len(a) and d - i < len(b):
                acc = acc + a[i] * b[d - i]
        out.append(acc)
    return out


def _series_inv(a: list, ring: GradedRing, top: int) -> list:
    if a[0] != ring.one():
        raise ValueError("total class series must start with the ring unit")
    inv = [ring.one()]
    for d in range(1, top + 1):
        acc = ring.zero()
        for i in range(1, d + 1):
            if i < len(a):
                acc = acc + a[i] * inv[d - i]
        inv.append(-acc)
    return inv


def sym_power(e: ChernVector, m: int) -> ChernVector:
    """Chern vector of Sym^m of e, by substituting into the universal
    polynomials."""
    ring = e.ring
    if e.rank == 0:
        return ChernVector.trivial(ring, 1 if m == 0 else 0)
    polys = universal_sym_chern(e.rank, m)
    classes = tuple(p.substitute(e.classes, one=ring.one(), zero=ring.zero()) for p in polys)
    return ChernVector(ring, len(polys), classes)


def dual_bundle(e: ChernVector) -> ChernVector:
    """c_i of the dual is (-1)^i c_i."""
    classes = tuple(c if (i + 1) % 2 == 0 else -c for i, c in enumerate(e.classes))
    return ChernVector(e.ring, e.rank, classes)


def tensor_line(e: ChernVector, ell) -> ChernVector:
    """Twist by a line bundle with first Chern class ell.

    c_i(E (x) L) = sum_j binom(rank - j, i - j) c_j(E) ell^(i-j).
    ell must be homogeneous of degree 1 (or zero).
    """
    ring = e.ring
    if ring.component(ell, 1) != ell:
        raise ValueError("twisting class must be homogeneous of degree 1")
    r = e.rank
    ell_pow = [ring.one(), ell]
    for _ in range(r - 1):
        ell_pow.append(ell_pow[-1] * ell)
    classes = []
    for i in range(1, r + 1):
        acc = ring.zero()
        for j in range(i + 1):
            factor = comb(r - j, i - j)
            if factor:
                acc = acc + factor * (e.c(j) * ell_pow[i - j])
        classes.append(acc)
    return ChernVector(ring, r, tuple(classes))


def direct_sum(*bundles: ChernVector) -> ChernVector:
    """Whitney sum: total classes multiply."""
    if not bundles:
        raise ValueError("need at least one summand")
    ring = bundles[0].ring
    if any(b.ring != ring for b in bundles):
        raise ValueError("summands live in different rings")
    rank = sum(b.rank for b in bundles)
    top = min(rank, ring.top_degree)
    series = [ring.one()] + [ring.zero()] * top
    for b in bundles:
        series = _series_mul(series, b.total_series(top), ring, top)
    classes = tuple(series[1:]) + tuple(ring.zero() for _ in range(rank - top))
    return ChernVector(ring, rank, classes)


def whitney_quotient(f: ChernVector, s: ChernVector) -> ChernVector:
    """Chern vector of the quotient in 0 -> S -> F -> Q -> 0.

    Computed as the power-series quotient c(F)/c(S), truncated at the
    quotient rank and at the ring's top degree.  The division is re-checked
    by multiplying back; a mismatch means the series arithmetic is broken.
    """
    ring = f.ring
    if s.ring != ring:
        raise ValueError("bundles live in different rings")
    rank = f.rank - s.rank
    if rank <= 0:
        raise ValueError(f"sub-bundle rank {s.rank} must be smaller than total rank {f.rank}")
    top = ring.top_degree
    quot = _series_mul(f.total_series(top), _series_inv(s.total_series(top), ring, top), ring, top)
    depth = min(rank, top)
    classes = tuple(quot[1 : depth + 1]) + tuple(ring.zero() for _ in range(rank - depth))
    back = _series_mul(s.total_series(depth), [ring.one()] + list(classes[:depth]), ring, depth)
    if back != f.total_series(depth):
        raise ArithmeticError("Whitney series division failed its own check")
    return ChernVector(ring, rank, classes)


def segre(e: ChernVector, top: int) -> list:
    """Segre classes s_0..s_top, the formal inverse of the total Chern
    class: s_0 = 1, s_1 = -c_1, s_2 = c_1^2 - c_2, ..."""
    ring = e.ring
    return _series_inv(e.total_series(top), ring, top)
