"""Exact Schubert calculus on Grassmannians.

The Chow ring of G(k, n), the Grassmannian of k-dimensional subspaces of an
n-dimensional vector space, has an integral basis of Schubert classes
sigma_lambda indexed by partitions fitting a k x (n-k) box.  sigma_lambda has
codimension |lambda|, the class of a point is the full box, and the ring is
graded with top degree k(n-k).

Products are computed with arbitrary-precision integers by expanding one
factor through the Giambelli determinant into special classes and applying
the Pieri rule repeatedly.  An independent Littlewood-Richardson tableau
rule is provided purely as a cross-check of that pipeline.

Everything here is immutable; operations return new values.  The basis
product cache is a functools.lru_cache, which is safe to share across
threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers, trailing zeros trimmed.

    The empty partition indexes the unit class.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        """Total number of boxes; the codimension of sigma_self."""
        return sum(self)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def contains(self, other) -> bool:
        """Diagram containment, row by row."""
        other = Partition(other)
        if len(other) > len(self):
            return False
        return all(self[i] >= other[i] for i in range(len(other)))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class GrassCtx:
    """The Grassmannian G(k, n) of k-dimensional subspaces of C^n."""

    k: int
    n: int

    def __post_init__(self):
        if not (isinstance(self.k, int) and isinstance(self.n, int)):
            raise ValueError("k and n must be integers")
        if not 0 < self.k < self.n:
            raise ValueError(f"need 0 < k < n, got k={self.k}, n={self.n}")

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def width(self) -> int:
        """Number of columns of the indexing box, n - k."""
        return self.n - self.k

    @property
    def point(self) -> Partition:
        """The full-box partition indexing the class of a point."""
        return Partition((self.width,) * self.k)

    def fits(self, lam) -> bool:
        lam = Partition(lam)
        return len(lam) <= self.k and (not lam or lam[0] <= self.width)

    def box_partitions(self, weight=None) -> list[Partition]:
        """All partitions in the k x (n-k) box, optionally of a fixed weight.

        Deterministic order: by weight, then reverse lexicographic.
        """
        out = []

        def rec(prefix, maxpart, rows_left):
            out.append(Partition(prefix))
            if rows_left == 0:
                return
            for p in range(maxpart, 0, -1):
                rec(prefix + [p], p, rows_left - 1)

        rec([], self.width, self.k)
        if weight is not None:
            out = [lam for lam in out if lam.weight == weight]
        return sorted(out, key=lambda lam: (lam.weight, tuple(-p for p in lam)))

    def __str__(self):
        return f"G({self.k},{self.n})"


class SchubertCycle:
    """Integer linear combination of Schubert classes of a fixed G(k, n).

    Terms are stored as a partition -> coefficient mapping with zero
    coefficients dropped.  Any class whose partition leaves the box is
    identically zero in the ring and is never stored, so products truncate
    above codimension k(n-k) automatically.
    """

    __slots__ = ("ctx", "_terms")

    def __init__(self, ctx: GrassCtx, terms=()):
        clean = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for lam, coeff in items:
            lam = Partition(lam)
            if not ctx.fits(lam):
                raise ValueError(f"partition {tuple(lam)} does not fit the box of {ctx}")
            coeff = int(coeff)
            if coeff:
                clean[lam] = clean.get(lam, 0) + coeff
                if not clean[lam]:
                    del clean[lam]
        self.ctx = ctx
        self._terms = clean

    @classmethod
    def unit(cls, ctx: GrassCtx) -> "SchubertCycle":
        return cls(ctx, {Partition(): 1})

    @classmethod
    def zero(cls, ctx: GrassCtx) -> "SchubertCycle":
        return cls(ctx, {})

    def coefficient(self, lam) -> int:
        return self._terms.get(Partition(lam), 0)

    def items(self):
        """Terms sorted by codimension, then reverse lexicographically."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0].weight, tuple(-p for p in kv[0])))

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def codimensions(self) -> list[int]:
        return sorted({lam.weight for lam in self._terms})

    def component(self, degree: int) -> "SchubertCycle":
        """Homogeneous part of the given codimension."""
        return SchubertCycle(self.ctx, {lam: c for lam, c in self._terms.items() if lam.weight == degree})

    def is_homogeneous(self) -> bool:
        return len(self.codimensions()) <= 1

    def _coerce(self, other):
        if isinstance(other, SchubertCycle):
            if other.ctx != self.ctx:
                raise ValueError("cycles live on different Grassmannians")
            return other
        if isinstance(other, int):
            return SchubertCycle(self.ctx, {Partition(): other})
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for lam, c in other._terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchubertCycle(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return SchubertCycle(self.ctx, {lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return SchubertCycle.zero(self.ctx)
            return SchubertCycle(self.ctx, {lam: other * c for lam, c in self._terms.items()})
        if isinstance(other, SchubertCycle):
            return multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("cycle powers need a nonnegative integer exponent")
        out = SchubertCycle.unit(self.ctx)
        for _ in range(exponent):
            out = out * self
        return out

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = SchubertCycle(self.ctx, {Partition(): other})
        if not isinstance(other, SchubertCycle):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for lam, coeff in self.items():
            body = f"sigma[{','.join(str(p) for p in lam)}]" if lam else "1"
            mag = abs(coeff)
            if mag == 1 and lam:
                text = body
            elif lam:
                text = f"{mag}*{body}"
            else:
                text = str(mag)
            if not chunks:
                chunks.append(text if coeff > 0 else f"-{text}")
            else:
                chunks.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(chunks)

    def __repr__(self):
        return f"<SchubertCycle {self} on {self.ctx}>"


def schubert_class(ctx: GrassCtx, parts) -> SchubertCycle:
    """The basis class sigma_parts on ctx."""
    return SchubertCycle(ctx, {Partition(parts): 1})


def dual_partition(lam, ctx: GrassCtx) -> Partition:
    """Complement of lam in the k x (n-k) box, rotated half a turn.

    The dual class is the unique basis partner under the integration
    pairing; applying the complement twice gives lam back.
    """
    lam = Partition(lam)
    if not ctx.fits(lam):
        raise ValueError(f"partition {tuple(lam)} does not fit the box of {ctx}")
    padded = list(lam) + [0] * (ctx.k - len(lam))
    return Partition(ctx.width - padded[ctx.k - 1 - i] for i in range(ctx.k))


def _horizontal_strips(lam: Partition, a: int, ctx: GrassCtx) -> list[Partition]:
    # mu_1 <= width and mu_i in [lam_i, lam_{i-1}], |mu| = |lam| + a
    k = ctx.k
    padded = list(lam) + [0] * (k - len(lam))
    out = []

    def rec(i, remaining, acc):
        if i == k:
            if remaining == 0:
                out.append(Partition(acc))
            return
        lo = padded[i]
        hi = ctx.width if i == 0 else padded[i - 1]
        hi = min(hi, lo + remaining)
        for m in range(lo, hi + 1):
            rec(i + 1, remaining - (m - lo), acc + [m])

    rec(0, a, [])
    return out


def _vertical_strips(lam: Partition, a: int, ctx: GrassCtx) -> list[Partition]:
    # mu_i in {lam_i, lam_i + 1}, mu weakly decreasing inside the box
    k = ctx.k
    padded = list(lam) + [0] * (k - len(lam))
    out = []

    def rec(i, remaining, prev, acc):
        if remaining > k - i:
            return
        if i == k:
            if remaining == 0:
                out.append(Partition(acc))
            return
        for add in (0, 1):
            m = padded[i] + add
            if add > remaining or m > prev or (i == 0 and m > ctx.width):
                continue
            rec(i + 1, remaining - add, m, acc + [m])

    rec(0, a, ctx.width, [])
    return out


def pieri(lam, a: int, ctx: GrassCtx) -> SchubertCycle:
    """Multiply sigma_lam by the special class sigma_a.

    Returns the sum of sigma_mu over partitions mu obtained from lam by a
    horizontal strip of a boxes; every coefficient is 1 and any mu leaving
    the box is dropped silently.
    """
    lam = Partition(lam)
    if not ctx.fits(lam):
        raise ValueError(f"partition {tuple(lam)} does not fit the box of {ctx}")
    if not isinstance(a, int) or not 0 <= a <= ctx.width:
        raise ValueError(f"special class index must lie in 0..{ctx.width}, got {a}")
    return SchubertCycle(ctx, {mu: 1 for mu in _horizontal_strips(lam, a, ctx)})


def _apply_strips(terms: dict, a: int, ctx: GrassCtx, vertical: bool) -> dict:
    strips = _vertical_strips if vertical else _horizontal_strips
    out = {}
    for lam, coeff in terms.items():
        for mu in strips(lam, a, ctx):
            out[mu] = out.get(mu, 0) + coeff
    return {lam: c for lam, c in out.items() if c}


def _permutation_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def _basis_product(ctx: GrassCtx, lam: Partition, mu: Partition):
    """Structure constants of sigma_lam * sigma_mu as ((nu, coeff), ...)."""
    if not lam:
        return ((mu, 1),)
    if not mu:
        return ((lam, 1),)

    # Giambelli determinant size: number of rows for the row form, number of
    # columns for the conjugate form.  Expand whichever factor admits the
    # smallest determinant; tall narrow partitions go through the conjugate.
    candidates = [
        (len(lam), False, lam, mu),
        (lam[0], True, lam, mu),
        (len(mu), False, mu, lam),
        (mu[0], True, mu, lam),
    ]
    size, vertical, expand, onto = min(candidates, key=lambda t: t[0])

    shape = expand.conjugate() if vertical else expand
    limit = ctx.k if vertical else ctx.width
    acc = {}
    for perm in itertools.permutations(range(size)):
        factors = []
        dead = False
        for i in range(size):
            e = (shape[i] if i < len(shape) else 0) + perm[i] - i
            if e < 0 or e > limit:
                dead = True
                break
            if e:
                factors.append(e)
        if dead:
            continue
        sign = _permutation_sign(perm)
        terms = {onto: sign}
        for a in factors:
            terms = _apply_strips(terms, a, ctx, vertical)
            if not terms:
                break
        for nu, c in terms.items():
            acc[nu] = acc.get(nu, 0) + c
    return tuple(sorted(((nu, c) for nu, c in acc.items() if c),
                        key=lambda kv: (kv[0].weight, tuple(-p for p in kv[0]))))


def multiply(x: SchubertCycle, y: SchubertCycle) -> SchubertCycle:
    """Product in the Chow ring, bilinear over the cached basis products."""
    if x.ctx != y.ctx:
        raise ValueError("cycles live on different Grassmannians")
    out = {}
    for lam, a in x._terms.items():
        for mu, b in y._terms.items():
            key = (lam, mu) if lam <= mu else (mu, lam)
            for nu, c in _basis_product(x.ctx, *key):
                out[nu] = out.get(nu, 0) + a * b * c
    return SchubertCycle(x.ctx, out)


def integrate(x: SchubertCycle) -> int:
    """Degree of the zero-dimensional part: the coefficient of the point
    class.  Components of lower codimension contribute nothing."""
    return x.coefficient(x.ctx.point)


def chern_tautological(ctx: GrassCtx, which: str, i: int) -> SchubertCycle:
    """Chern class c_i of a tautological bundle on G(k, n).

    which is one of "sub" (the rank-k tautological sub-bundle S),
    "sub_dual" (its dual), or "quotient" (the rank n-k quotient Q).
    c_i(S*) = sigma_{(1^i)}, c_i(S) = (-1)^i sigma_{(1^i)}, c_i(Q) = sigma_i.
    """
    ranks = {"sub": ctx.k, "sub_dual": ctx.k, "quotient": ctx.n - ctx.k}
    if which not in ranks:
        raise ValueError(f"which must be one of {sorted(ranks)}, got {which!r}")
    if not isinstance(i, int) or not 0 <= i <= ranks[which]:
        raise ValueError(f"index {i} out of range for rank {ranks[which]}")
    if i == 0:
        return SchubertCycle.unit(ctx)
    if which == "quotient":
        return schubert_class(ctx, (i,))
    col = schubert_class(ctx, (1,) * i)
    return col if which == "sub_dual" else (-1) ** i * col


def lr_coefficient(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam,mu}.

    Counts semistandard skew tableaux of shape nu/lam and content mu whose
    reverse reading word is a lattice word.  Used only to cross-check the
    Giambelli + Pieri multiplication path.
    """
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.weight != lam.weight + mu.weight or not nu.contains(lam):
        return 0
    if not mu:
        return 1
    rows = len(nu)
    inner = list(lam) + [0] * (rows - len(lam))
    letters = len(mu)

    cells = []
    for i in range(rows):
        for j in range(nu[i] - 1, inner[i] - 1, -1):
            cells.append((i, j))

    grid = {}
    counts = [0] * (letters + 1)
    rem = list(mu)
    total = 0

    def place(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        i, j = cells[idx]
        above = grid.get((i - 1, j)) if i > 0 and j >= inner[i - 1] else None
        right = grid.get((i, j + 1))
        lo = 1 if above is None else above + 1
        hi = letters if right is None else right
        for v in range(lo, hi + 1):
            if not rem[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            grid[(i, j)] = v
            counts[v] += 1
            rem[v - 1] -= 1
            place(idx + 1)
            del grid[(i, j)]
            counts[v] -= 1
            rem[v - 1] += 1

    place(0)
    return total


def multiply_lr(x: SchubertCycle, y: SchubertCycle) -> SchubertCycle:
    """Product computed directly from Littlewood-Richardson coefficients.

    Independent of the Giambelli + Pieri path; the two must agree.
    """
    if x.ctx != y.ctx:
        raise ValueError("cycles live on different Grassmannians")
    ctx = x.ctx
    out = {}
    for lam, a in x._terms.items():
        for mu, b in y._terms.items():
            for nu in ctx.box_partitions(weight=lam.weight + mu.weight):
                c = lr_coefficient(lam, mu, nu)
                if c:
                    out[nu] = out.get(nu, 0) + a * b * c
    return SchubertCycle(ctx, out)
