import itertools
from fractions import Fraction as F

import numpy as np
import pytest

import oracles
from gammasg import batch
from gammasg.core import InputError, enumerate_bounded, enumerate_instances, left_zero, mod2, singleton
from gammasg.extension import extend, extend_op
from gammasg.fuzzy import CrispSubset, IFSubset, characteristic_pair, classify_crisp, classify_fuzzy, includes
from gammasg.operator import OperatorContext
from gammasg.transfer import (plus_prime_then_plus, star, star_prime, star_prime_then_star,
                              star_then_star_prime, transfer_fuzzy)
from gammasg.verify.population import Policy, lattice_population

LATTICE = (F(0), F(1, 2), F(1))


def ifs(carrier, mu, nu):
    return IFSubset(carrier, tuple(F(m) for m in mu), tuple(F(v) for v in nu))


def instances():
    return list(enumerate_bounded(2, 2)) + list(itertools.islice(enumerate_instances(3, 2), 0, None, 9))


def test_transfer_examples():
    ctx = OperatorContext(mod2())
    R = ctx.right
    A = ifs(R, (1, F(1, 2)), (0, F(1, 4)))          # classes [0,0] and [0,1]
    assert star(A, ctx) == ifs(ctx.S, (1, F(1, 2)), (0, F(1, 4)))
    B = ifs(ctx.S, (1, F(1, 2)), (0, F(1, 4)))
    assert star_prime(B, ctx) == ifs(R, (1, F(1, 2)), (0, F(1, 4)))
    lz = OperatorContext(left_zero())
    C = ifs(lz.S, (F(1, 2), F(1, 4)), (0, 0))
    assert star_prime(C, lz).mu == (F(1, 4),)


def test_transfer_matches_naive_formulas():
    for S in instances():
        ctx = OperatorContext(S)
        naive = oracles.NaiveOps(S)
        for name, src in (("star", "R"), ("plus", "L"), ("star_prime", "S"), ("plus_prime", "S")):
            carrier = ctx.carrier(src)
            for mu, nu in itertools.islice(oracles.grade_vectors(carrier.size, LATTICE), 0, None, 5):
                got = transfer_fuzzy(IFSubset(carrier, tuple(mu), tuple(nu)), name, ctx)
                want_mu, want_nu = getattr(naive, name)(mu, nu)
                assert list(got.mu) == want_mu and list(got.nu) == want_nu


def test_transfer_carrier_mismatch():
    ctx = OperatorContext(mod2())
    with pytest.raises(InputError):
        star(ifs(ctx.S, (0, 0), (0, 0)), ctx)


def test_one_sided_roundtrip_inclusion_without_unities():
    # A within (A+')+ for every IFI of S, unities or not
    for S in instances():
        ctx = OperatorContext(S)
        for mu, nu in oracles.grade_vectors(S.s_size, LATTICE):
            A = IFSubset(S, tuple(mu), tuple(nu))
            if classify_fuzzy(A).ifi:
                assert includes(A, plus_prime_then_plus(A, ctx))


def test_roundtrip_helpers_on_i2():
    ctx = OperatorContext(mod2())
    B = ifs(ctx.S, (1, F(1, 2)), (0, F(1, 4)))
    assert star_prime_then_star(B, ctx) == B
    assert star_then_star_prime(star_prime(B, ctx), ctx) == star_prime(B, ctx)


def test_extension_examples():
    S = mod2()
    c = ifs(S, (F(1, 3), F(1, 3)), (F(1, 2), F(1, 2)))
    assert extend(c, 0) == c and extend(c, 1) == c
    M = characteristic_pair(CrispSubset(S, {0}))
    assert extend(M, 1) == M
    assert extend(M, 0) == ifs(S, (1, 1), (0, 0))
    ctx = OperatorContext(S)
    B = ifs(ctx.right, (1, F(1, 2)), (0, F(1, 4)))
    assert extend_op(B, ctx.right.cls(0, 0)).mu == (1, 1)
    assert extend_op(B, ctx.right.identity) == B
    with pytest.raises(InputError):
        extend(B, 0)
    with pytest.raises(InputError):
        extend_op(c, 0)


def test_extension_matches_naive_formula():
    for S in instances():
        t = oracles.table_dict(S)
        for mu, nu in itertools.islice(oracles.grade_vectors(S.s_size, LATTICE), 0, None, 3):
            A = IFSubset(S, tuple(mu), tuple(nu))
            for x in S.elements():
                got = extend(A, x)
                want = oracles.extension_s(mu, nu, t, S.s_size, S.g_size, x)
                assert (list(got.mu), list(got.nu)) == want


# ---------------------------------------------------------------------------
# the numpy batch engine against the scalar reference

def _population(ctx, tag, lattice=LATTICE):
    G, _ = lattice_population(ctx.carrier(tag).size, Policy(lattice=lattice), 0)
    return G


def test_batch_flags_match_scalar():
    for S in instances():
        ctx = OperatorContext(S)
        for tag in "SLR":
            carrier = ctx.carrier(tag)
            G = _population(ctx, tag)
            cache = batch.FuzzyFlagCache(ctx.frame(tag), G)
            for i in range(0, len(G), 3):
                flags = classify_fuzzy(G.subset(i, carrier))
                for name in ("ifli", "ifri", "ifi", "ifpi", "ifspi"):
                    assert bool(cache[name][i]) == flags.get(name), (tag, i, name)
            X = np.array([[i in P for i in range(carrier.size)] for P in oracles.subsets(carrier.size)])
            cf = batch.crisp_flags(ctx.frame(tag), X)
            for row, P in zip(range(len(X)), oracles.subsets(carrier.size)):
                ref = classify_crisp(CrispSubset(carrier, P))
                for name in ("left_ideal", "right_ideal", "ideal", "prime", "semiprime", "empty"):
                    assert bool(cf[name][row]) == getattr(ref, name)


def test_batch_maps_match_scalar():
    for S in instances():
        ctx = OperatorContext(S)
        for name, src in (("star", "R"), ("plus", "L"), ("star_prime", "S"), ("plus_prime", "S")):
            G = _population(ctx, src)
            out = batch.gather(G, ctx.gather(name))
            dst = ctx.carrier({"star": "S", "plus": "S", "star_prime": "R", "plus_prime": "L"}[name])
            for i in range(0, len(G), 7):
                assert out.subset(i, dst) == transfer_fuzzy(G.subset(i, ctx.carrier(src)), name, ctx)
        G = _population(ctx, "S")
        for x in S.elements():
            out = batch.gather(G, batch.extension_plan(S.table, x))
            for i in range(0, len(G), 11):
                assert out.subset(i, S) == extend(G.subset(i, S), x)
        R = ctx.right
        G = _population(ctx, "R")
        for r in range(R.size):
            out = batch.gather(G, batch.op_extension_plan(R.cayley, r))
            for i in range(0, len(G), 11):
                assert out.subset(i, R) == extend_op(G.subset(i, R), r)


def test_batch_levels_and_relations():
    ctx = OperatorContext(mod2())
    G = _population(ctx, "S", (F(0), F(1, 4), F(1, 2), F(1)))
    for t in batch.threshold_values(G):
        U, L = batch.level(G, t)
        for i in range(len(G)):
            A = G.subset(i, ctx.S)
            assert U[i].tolist() == [A.mu[k] >= t for k in range(2)]
            assert L[i].tolist() == [A.nu[k] <= t for k in range(2)]
    i, j = np.meshgrid(np.arange(len(G)), np.arange(len(G)))
    A, B = G.take(i.ravel()), G.take(j.ravel())
    inc = batch.includes(A, B)
    for k in range(0, len(inc), 13):
        assert inc[k] == includes(A.subset(k, ctx.S), B.subset(k, ctx.S))


def test_population_is_exhaustive_then_sampled():
    G, exhaustive = lattice_population(3, Policy(lattice=LATTICE), 0)
    assert exhaustive and len(G) == 6 ** 3
    assert len({(tuple(a), tuple(b)) for a, b in zip(G.mu, G.nu)}) == 6 ** 3
    H, exhaustive = lattice_population(3, Policy(lattice=LATTICE, cap=100, samples=50), [1, 2])
    assert not exhaustive and len(H) == 50
    H2, _ = lattice_population(3, Policy(lattice=LATTICE, cap=100, samples=50), [1, 2])
    assert np.array_equal(H.mu, H2.mu) and np.array_equal(H.nu, H2.nu)
    assert ((H.mu + H.nu) <= H.denom).all()
