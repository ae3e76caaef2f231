"""Chow ring of a projective bundle P(E) over a Grassmannian.

P(E) parametrizes 1-dimensional subspaces of the fibers of E.  With
zeta = c_1(O_P(1)), the dual of the tautological sub-line-bundle O_P(-1),
the ring is a free module over the base ring on 1, zeta, ..., zeta^(r-1)
subject to the relation

    zeta^r + c_1(E) zeta^(r-1) + ... + c_r(E) = 0.

Elements are kept in that canonical form eagerly, so the pushforward along
the projection is simply the top zeta coefficient; the general rule
pushforward(zeta^(r-1+j)) = s_j(E) then follows from the relation and is
exercised by the test suite.
"""

from __future__ import annotations

from .chern import ChernVector, GradedRing, GrassRing
from .schubert import SchubertCycle


class ProjBundleRing(GradedRing):
    """Graded ring handle for P(E), E a bundle over a Grassmannian ring."""

    def __init__(self, bundle: ChernVector):
        if not isinstance(bundle.ring, GrassRing):
            raise ValueError("the bundle must live over a Grassmannian ring")
        if bundle.rank < 1:
            raise ValueError("cannot projectivize a rank-0 bundle")
        self.bundle = bundle
        self.base = bundle.ring
        self.fiber_rank = bundle.rank

    @property
    def top_degree(self) -> int:
        return self.base.top_degree + self.fiber_rank - 1

    def one(self) -> "PBElement":
        return self.from_base(self.base.one())

    def zero(self) -> "PBElement":
        zero = self.base.zero()
        return PBElement(self, tuple(zero for _ in range(self.fiber_rank)))

    def from_base(self, cycle: SchubertCycle) -> "PBElement":
        """Pullback of a base cycle."""
        coeffs = [cycle] + [self.base.zero()] * (self.fiber_rank - 1)
        return PBElement(self, tuple(coeffs))

    def zeta(self, power: int = 1) -> "PBElement":
        """zeta^power in canonical form."""
        if power < 0:
            raise ValueError("zeta powers must be nonnegative")
        if power < self.fiber_rank:
            coeffs = [self.base.zero()] * self.fiber_rank
            coeffs[power] = self.base.one()
            return PBElement(self, tuple(coeffs))
        if self.fiber_rank == 1:
            # the relation collapses to zeta = -c1(E), a base class
            return self.from_base((-self.bundle.c(1)) ** power)
        out = self.zeta(self.fiber_rank - 1)
        step = self.zeta(1)
        for _ in range(power - self.fiber_rank + 1):
            out = out * step
        return out

    def pullback(self, bundle: ChernVector) -> ChernVector:
        """Pullback of a Chern vector from the base."""
        if bundle.ring != self.base:
            raise ValueError("bundle does not live on the base of this projective bundle")
        return ChernVector(self, bundle.rank, tuple(self.from_base(c) for c in bundle.classes))

    def component(self, x: "PBElement", degree: int) -> "PBElement":
        return x.component(degree)

    def integrate(self, x: "PBElement") -> int:
        return pb_integrate(x)

    def __eq__(self, other):
        if not isinstance(other, ProjBundleRing):
            return NotImplemented
        return self.base == other.base and self.bundle.classes == other.bundle.classes

    def __str__(self):
        return f"P(E^{self.fiber_rank}) over {self.base.ctx}"


class PBElement:
    """sum of b_j * zeta^j with base-cycle coefficients and j < fiber rank."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: ProjBundleRing, coeffs: tuple):
        if len(coeffs) != ring.fiber_rank:
            raise ValueError("coefficient count must equal the fiber rank")
        self.ring = ring
        self.coeffs = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, PBElement):
            if other.ring != self.ring:
                raise ValueError("elements live on different projective bundles")
            return other
        if isinstance(other, int):
            return self.ring.from_base(other * self.ring.base.one())
        if isinstance(other, SchubertCycle):
            return self.ring.from_base(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return PBElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return PBElement(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return PBElement(self.ring, tuple(other * a for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return pb_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("powers need a nonnegative integer exponent")
        out = self.ring.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, SchubertCycle)):
            other = self._coerce(other)
        if not isinstance(other, PBElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def component(self, degree: int) -> "PBElement":
        """Homogeneous part: a term b*zeta^j has degree codim(b) + j."""
        zero = self.ring.base.zero()
        return PBElement(
            self.ring,
            tuple(c.component(degree - j) if degree - j >= 0 else zero
                  for j, c in enumerate(self.coeffs)),
        )

    def codimensions(self) -> list[int]:
        out = set()
        for j, c in enumerate(self.coeffs):
            out.update(j + d for d in c.codimensions())
        return sorted(out)

    def is_homogeneous(self) -> bool:
        return len(self.codimensions()) <= 1

    def __str__(self):
        chunks = []
        monomials = []
        for j, cycle in enumerate(self.coeffs):
            for lam, coeff in cycle.items():
                monomials.append((lam.weight + j, j, tuple(-p for p in lam), lam, coeff))
        for _, j, _, lam, coeff in sorted(monomials, key=lambda t: (t[0], -t[1], t[2])):
            factors = []
            if lam:
                factors.append(f"sigma[{','.join(str(p) for p in lam)}]")
            if j == 1:
                factors.append("zeta")
            elif j > 1:
                factors.append(f"zeta^{j}")
            body = "*".join(factors) if factors else "1"
            mag = abs(coeff)
            text = body if mag == 1 and factors else (f"{mag}*{body}" if factors else str(mag))
            if not chunks:
                chunks.append(text if coeff > 0 else f"-{text}")
            else:
                chunks.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(chunks) if chunks else "0"

    def __repr__(self):
        return f"<PBElement {self} on {self.ring}>"


def pb_multiply(x: PBElement, y: PBElement) -> PBElement:
    """Product in the Chow ring of P(E): convolve in zeta, then rewrite
    zeta^j for j >= r through the defining relation, highest power first."""
    if x.ring != y.ring:
        raise ValueError("elements live on different projective bundles")
    ring = x.ring
    r = ring.fiber_rank
    zero = ring.base.zero()
    slots = [zero] * (2 * r - 1)
    for i, a in enumerate(x.coeffs):
        if not a:
            continue
        for j, b in enumerate(y.coeffs):
            if b:
                slots[i + j] = slots[i + j] + a * b
    rel = ring.bundle.classes
    for j in range(2 * r - 2, r - 1, -1):
        c = slots[j]
        if not c:
            continue
        slots[j] = zero
        for i in range(1, r + 1):
            slots[j - i] = slots[j - i] - c * rel[i - 1]
    return PBElement(ring, tuple(slots[:r]))


def pb_pushforward(x: PBElement) -> SchubertCycle:
    """Pushforward to the base along the bundle projection.

    On canonical form only zeta^(r-1) survives, with multiplier s_0 = 1, so
    this is the top zeta coefficient.  Codimension drops by the fiber
    dimension r - 1.
    """
    return x.coeffs[-1]


def pb_integrate(x: PBElement) -> int:
    """Integrate over the total space: push forward, then integrate over
    the Grassmannian base."""
    return x.ring.base.integrate(pb_pushforward(x))
