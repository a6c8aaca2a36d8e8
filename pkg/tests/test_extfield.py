"""Extension-field arithmetic and the character-sum verifications."""

import itertools
import math
import random

import numpy as np
import pytest

from cycloseq import gf4
from cycloseq.analysis import analyze_symbols
from cycloseq.cyclotomy import ClassId, build_system
from cycloseq.errors import (CapExceeded, CaseViolation, InvalidMapping,
                             InvalidParams, NotCoprime)
from cycloseq.extfield import (ExtFieldContext, build_extension, char_sum,
                               ext_mul, ext_pow, is_irreducible,
                               least_irreducible, measure_spectrum, ord_4_mod,
                               packed_to_poly, poly_to_packed,
                               verify_case_table, verify_char_sum_tables)
from cycloseq.sequence import (DEFAULT_MAPPING, Mapping, build_sequence)


@pytest.fixture(scope="module")
def sys15():
    return build_system(3, 5, 1, 1)


@pytest.fixture(scope="module")
def ctx15():
    return build_extension(15)


@pytest.fixture(scope="module")
def sys21():
    return build_system(3, 7, 1, 1)


@pytest.fixture(scope="module")
def ctx21():
    return build_extension(21)


def test_ord_4_mod():
    assert ord_4_mod(1) == 1
    assert ord_4_mod(15) == 2
    assert ord_4_mod(21) == 3
    assert ord_4_mod(45) == 6
    with pytest.raises(NotCoprime):
        ord_4_mod(30)
    with pytest.raises(InvalidParams):
        ord_4_mod(0)


def test_packed_roundtrip():
    rng = random.Random(911)
    for _ in range(50):
        d = rng.randrange(1, 10)
        coeffs = [rng.randrange(4) for _ in range(d)]
        packed = poly_to_packed(np.array(coeffs, dtype=np.uint8))
        back = packed_to_poly(packed, d)
        assert gf4.poly_eq(back, gf4.poly_trim(np.array(coeffs,
                                                        dtype=np.uint8)))


def _eval_gf4(poly, v):
    acc = 0
    for c in poly[::-1]:
        acc = gf4.gf4_mul(acc, v) ^ int(c)
    return acc


def test_irreducibility_against_root_oracle():
    # degree <= 3 over GF(4): irreducible iff no root in the base field
    for d in (2, 3):
        for code in range(4**d):
            coeffs = [(code >> (2 * i)) & 3 for i in range(d)] + [1]
            poly = gf4.poly(coeffs)
            has_root = any(_eval_gf4(poly, v) == 0 for v in range(4))
            assert is_irreducible(poly) == (not has_root)


def test_least_irreducible():
    assert gf4.poly_to_digits(least_irreducible(1)) == "11"
    assert gf4.poly_to_digits(least_irreducible(2)) == "121"
    p3 = least_irreducible(3)
    assert is_irreducible(p3) and gf4.poly_deg(p3) == 3
    # nothing lexicographically earlier (constant term compared first,
    # zero constant terms excluded) is irreducible
    prefix = tuple(int(c) for c in p3[:3])
    for cand_prefix in itertools.product((1, 2, 3), range(4), range(4)):
        if cand_prefix >= prefix:
            break
        assert not is_irreducible(gf4.poly(cand_prefix + (1,)))


def test_ext_mul_matches_poly_arithmetic(ctx15, ctx21):
    rng = random.Random(912)
    for ctx in (ctx15, ctx21):
        size = 4**ctx.d
        for _ in range(200):
            x = rng.randrange(size)
            y = rng.randrange(size)
            got = ctx.mul(x, y)
            prod = gf4.poly_mul(packed_to_poly(x, ctx.d),
                                packed_to_poly(y, ctx.d))
            rem = gf4.poly_divmod(prod, ctx.modulus)[1]
            assert got == poly_to_packed(rem)


def test_ext_pow_fermat(ctx15):
    rng = random.Random(913)
    for _ in range(30):
        x = rng.randrange(1, 16)
        assert ctx15.pow(x, ctx15.group_order) == 1
    assert ctx15.pow(0, 5) == 0
    with pytest.raises(InvalidParams):
        ctx15.pow(2, -1)


def test_frobenius(ctx15, ctx21):
    for ctx in (ctx15, ctx21):
        for scalar in range(4):
            assert ctx.frobenius(scalar) == scalar
        rng = random.Random(914)
        for _ in range(60):
            x = rng.randrange(4**ctx.d)
            y = rng.randrange(4**ctx.d)
            assert ctx.frobenius(x ^ y) == ctx.frobenius(x) ^ ctx.frobenius(y)


def test_context_shape(ctx15, ctx21):
    assert ctx15.d == 2 and ctx15.group_order == 15
    # 4^2 - 1 = 15 = N: beta generates the whole multiplicative group
    assert ctx15.element_order(ctx15.beta) == 15
    assert ctx21.d == 3
    assert ctx21.beta == ctx21.pow(ctx21.generator, 3)
    for ctx, (p, q) in ((ctx15, (3, 5)), (ctx21, (3, 7))):
        N = ctx.N
        assert ctx.pow(ctx.beta, N) == 1
        assert ctx.pow(ctx.beta, N // p) != 1
        assert ctx.pow(ctx.beta, N // q) != 1
        assert ctx.element_order(ctx.zeta_p) == p
        assert ctx.element_order(ctx.zeta_q) == q
        assert ctx.element_order(ctx.zeta_pq) == p * q


def test_zeta_orders_tower():
    ctx = build_extension(45)
    assert ctx.d == 6
    assert ctx.element_order(ctx.zeta_p) == 3
    assert ctx.element_order(ctx.zeta_q) == 5
    assert ctx.element_order(ctx.zeta_pq) == 15


def test_exp_table(ctx21):
    assert ctx21.exp_table is not None
    rng = random.Random(915)
    for _ in range(40):
        i = rng.randrange(ctx21.group_order)
        assert int(ctx21.exp_table[i]) == ctx21.pow(ctx21.generator, i)


def test_geometric_sums(ctx15):
    # full cycle of a nontrivial root sums to zero
    for k in range(1, 15):
        acc = 0
        for r in range(15):
            acc ^= int(ctx15.beta_powers[(k * r) % 15])
        assert acc == 0
    # sum over the units of a prime-order root is 1 in characteristic 2
    for zeta, r in ((ctx15.zeta_p, 3), (ctx15.zeta_q, 5)):
        acc = 0
        for t in range(1, r):
            acc ^= ctx15.pow(zeta, t)
        assert acc == 1


def test_char_sum_at_zero(sys15, ctx15):
    for cid, cls in sys15.classes.items():
        assert char_sum(sys15, ctx15, cid, 0) == len(cls) % 2


def test_complementary_sums():
    # the two cosets of the pq-level partition sum to 1 at any unit k
    for params in ((3, 5, 1, 1), (3, 5, 2, 1)):
        system = build_system(*params)
        ctx = build_extension(system.constants.half_period)
        pq = params[0] * params[1]
        for k in range(1, ctx.N):
            if math.gcd(k, pq) != 1:
                continue
            s0 = char_sum(system, ctx, ClassId("pq", 1, 1, 0), k)
            s1 = char_sum(system, ctx, ClassId("pq", 1, 1, 1), k)
            assert s0 ^ s1 == 1


def test_context_mismatch(sys15, ctx21):
    with pytest.raises(InvalidParams):
        char_sum(sys15, ctx21, ClassId("pq", 1, 1, 0), 1)


def test_measure_spectrum_matches_direct_eval(sys15, ctx15):
    seq = build_sequence(sys15)
    spec = measure_spectrum(sys15, ctx15, DEFAULT_MAPPING)
    assert len(spec) == 15
    # direct Horner evaluation of S(x) at beta^k; a GF4 scalar embeds as
    # the packed constant digit, so xor-ing the symbol in is exact
    rng = random.Random(916)
    for k in rng.sample(range(15), 6):
        x = int(ctx15.beta_powers[k])
        acc = 0
        for sym in seq.symbols[::-1]:
            acc = ctx15.mul(acc, x) ^ int(sym)
        assert int(spec[k]) == acc


def test_case_table_values(sys15, ctx15, sys21, ctx21):
    rep = verify_case_table(sys15, ctx15, DEFAULT_MAPPING)
    assert rep.s_at_1 == 1
    assert rep.value_generic == rep.value_p_saturated == \
        rep.value_q_saturated == 3
    assert rep.checked == 15
    assert rep.max_complexity_predicted
    rep = verify_case_table(sys21, ctx21, DEFAULT_MAPPING)
    assert rep.value_generic == 3
    assert rep.value_p_saturated == 2
    assert rep.value_q_saturated == 3
    assert rep.max_complexity_predicted
    d = rep.to_json_dict()
    assert d["checked"] == 21 and d["all_values_nonzero"] is True


def test_case_table_cross_checks_complexity(sys21, ctx21):
    # nonzero spectrum everywhere is equivalent to LC = 2N, measured both ways
    for mapping in (DEFAULT_MAPPING, Mapping(0, 3, 1, 2, 1),
                    Mapping(3, 2, 0, 1, 1)):
        rep = verify_case_table(sys21, ctx21, mapping)
        seq = build_sequence(sys21, mapping)
        lc = analyze_symbols(seq.symbols).lc_gcd
        assert rep.max_complexity_predicted == (lc == seq.period)


def test_case_table_rejects_degenerate(sys15, ctx15):
    with pytest.raises(InvalidMapping):
        verify_case_table(sys15, ctx15, Mapping(2, 3, 1, 0, 3))


def test_char_sum_tables_clean():
    for params, cells in (((3, 5, 1, 1), 84), ((3, 7, 1, 1), 120),
                          ((3, 5, 2, 1), 440)):
        system = build_system(*params)
        ctx = build_extension(system.constants.half_period)
        rep = verify_char_sum_tables(system, ctx)
        assert rep.k_count == ctx.N - 1
        assert rep.cells_checked == cells


def test_build_extension_rejections():
    with pytest.raises(InvalidParams):
        build_extension(9)        # single prime power
    with pytest.raises(InvalidParams):
        build_extension(105)      # three primes
    with pytest.raises(InvalidParams):
        build_extension(30)       # even
    with pytest.raises(CapExceeded):
        build_extension(15, max_degree=1)
    with pytest.raises(CapExceeded):
        build_extension(11 * 13)  # ord_{143}(4) = 30 > 12
