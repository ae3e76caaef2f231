import random

import pytest

from curvecount.chern import ChernVector, GrassRing, segre, sym_power
from curvecount.projbundle import PBElement, ProjBundleRing, pb_integrate, pb_multiply, pb_pushforward
from curvecount.schubert import GrassCtx, SchubertCycle, integrate, multiply, schubert_class


def conic_ring():
    base = GrassRing(GrassCtx(3, 5))
    return ProjBundleRing(sym_power(base.tautological("sub_dual"), 2))


def taut_ring(k, n, which):
    base = GrassRing(GrassCtx(k, n))
    return ProjBundleRing(base.tautological(which))


def test_ring_shape():
    pb = conic_ring()
    assert pb.fiber_rank == 6
    assert pb.top_degree == 6 + 6 - 1  # base dim + fiber dim
    assert str(pb) == "P(E^6) over G(3,5)"


def test_requires_positive_rank():
    base = GrassRing(GrassCtx(2, 4))
    with pytest.raises(ValueError):
        ProjBundleRing(ChernVector.trivial(base, 0))


def test_zeta_powers_stay_canonical():
    pb = conic_ring()
    r = pb.fiber_rank
    for j in range(2 * r):
        elt = pb.zeta(j)
        # canonical form never shows zeta^r or higher
        assert len(elt.coeffs) == r
    assert pb.zeta(0) == pb.one()


def test_hyperplane_relation():
    # sum_i pi*(c_i(E)) zeta^(r-i) = 0 is the defining relation
    for pb in (conic_ring(), taut_ring(2, 4, "sub"), taut_ring(2, 5, "quotient")):
        bundle = pb.pullback(pb.bundle)
        r = pb.fiber_rank
        acc = pb.zero()
        for i in range(r + 1):
            acc = acc + bundle.c(i) * pb.zeta(r - i)
        assert acc == pb.zero()


def test_pushforward_of_low_powers_vanishes():
    pb = conic_ring()
    r = pb.fiber_rank
    for j in range(r - 1):
        assert pb_pushforward(pb.zeta(j)) == pb.base.zero()
    assert pb_pushforward(pb.zeta(r - 1)) == pb.base.one()


def test_pushforward_gives_segre_classes():
    for pb in (conic_ring(), taut_ring(2, 4, "sub"), taut_ring(2, 5, "quotient")):
        r = pb.fiber_rank
        s = segre(pb.bundle, pb.base.top_degree)
        for j in range(pb.base.top_degree + 1):
            assert pb_pushforward(pb.zeta(r - 1 + j)) == s[j]


def test_rank_one_bundle_is_the_base():
    # P(L) of a line bundle is the base itself; zeta = -c1(L)
    base = GrassRing(GrassCtx(2, 4))
    pb = ProjBundleRing(base.tautological("sub") )
    assert pb.fiber_rank == 2
    base12 = GrassRing(GrassCtx(1, 3))
    line = ChernVector(base12, 1, (base12.schubert((1,)),))
    flat = ProjBundleRing(line)
    assert flat.fiber_rank == 1
    assert flat.top_degree == base12.top_degree
    assert flat.zeta(1) == flat.from_base(-base12.schubert((1,)))
    assert pb_integrate(flat.from_base(base12.schubert((2,)))) == 1


def test_integration_of_point_times_top_zeta():
    pb = conic_ring()
    point = pb.from_base(pb.base.schubert((2, 2, 2)))
    assert pb_integrate(point * pb.zeta(5)) == 1
    assert pb_integrate(point * pb.zeta(4)) == 0
    assert pb_integrate(pb.one()) == 0


def test_projection_formula():
    rng = random.Random(3)
    pb = conic_ring()
    basis = pb.base.ctx.box_partitions()
    for _ in range(30):
        alpha = schubert_class(pb.base.ctx, rng.choice(basis))
        beta = pb.from_base(schubert_class(pb.base.ctx, rng.choice(basis))) * pb.zeta(rng.randint(0, 5))
        lhs = pb_integrate(pb.from_base(alpha) * beta)
        rhs = integrate(multiply(alpha, pb_pushforward(beta)))
        assert lhs == rhs


def test_element_arithmetic_laws():
    rng = random.Random(9)
    pb = taut_ring(2, 5, "sub")
    basis = pb.base.ctx.box_partitions()

    def rand_elt():
        acc = pb.zero()
        for _ in range(rng.randint(1, 3)):
            cyc = rng.randint(-2, 2) * schubert_class(pb.base.ctx, rng.choice(basis))
            acc = acc + pb.from_base(cyc) * pb.zeta(rng.randint(0, 1))
        return acc

    for _ in range(50):
        x, y, z = rand_elt(), rand_elt(), rand_elt()
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
    assert pb.one() * x == x
    assert 0 * x == pb.zero()


def test_coercion_with_base_and_integers():
    pb = taut_ring(2, 4, "sub")
    s1 = pb.base.schubert((1,))
    # SchubertCycle and int mix freely with bundle elements
    elt = s1 + pb.zeta(1)
    assert elt == pb.from_base(s1) + pb.zeta(1)
    assert (1 + pb.zeta(1)) - 1 == pb.zeta(1)
    assert s1 * pb.zeta(1) == pb.from_base(s1) * pb.zeta(1)


def test_component_and_codimensions():
    pb = conic_ring()
    mixed = pb.one() + pb.zeta(1) + pb.from_base(pb.base.schubert((1,))) * pb.zeta(2)
    assert mixed.component(0) == pb.one()
    assert mixed.component(1) == pb.zeta(1)
    assert mixed.component(3) == pb.from_base(pb.base.schubert((1,))) * pb.zeta(2)
    assert mixed.component(9) == pb.zero()
    assert mixed.codimensions() == [0, 1, 3]
    assert not mixed.is_homogeneous()
    assert pb.zeta(2).is_homogeneous()


def test_rendering():
    pb = taut_ring(2, 4, "sub")
    assert str(pb.zero()) == "0"
    assert str(pb.one()) == "1"
    assert str(pb.zeta(1)) == "zeta"
    assert str(3 * pb.zeta(1)) == "3*zeta"
    elt = pb.from_base(pb.base.schubert((1,))) * pb.zeta(1)
    assert str(elt) == "sigma[1]*zeta"


def test_mismatched_rings_do_not_mix():
    a = conic_ring()
    b = taut_ring(2, 4, "sub")
    with pytest.raises(ValueError):
        a.zeta(1) + b.zeta(1)


def test_pullback_preserves_chern_data():
    pb = conic_ring()
    up = pb.pullback(pb.base.tautological("sub_dual"))
    assert up.rank == 3
    assert up.c(1) == pb.from_base(pb.base.schubert((1,)))
    assert isinstance(up.c(1), PBElement)


def test_quintic_conic_count_through_raw_ring_ops():
    # full pipeline without the recipe wrapper
    from curvecount.chern import tensor_line, whitney_quotient

    pb = conic_ring()
    sym5 = pb.pullback(sym_power(pb.base.tautological("sub_dual"), 5))
    sym3 = pb.pullback(sym_power(pb.base.tautological("sub_dual"), 3))
    twisted = tensor_line(sym3, -pb.zeta(1))
    bundle = whitney_quotient(sym5, twisted)
    assert bundle.rank == 11
    assert pb_integrate(bundle.c(11)) == 609250
