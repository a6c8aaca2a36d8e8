"""The extension field F_{4^d} and numerical checks of the character sums.

d is the multiplicative order of 4 modulo N = p^m q^n, so F_{4^d} contains
a primitive N-th root of unity beta. Elements are packed integers, two
bits per GF4 coefficient (digit i at bits 2i, 2i+1), which keeps the whole
field in uint32 for d <= 12 and lets the hot loops run vectorized.

The module builds the context deterministically (least monic irreducible
modulus in lexicographic coefficient order, first generator by packed-code
order), then measures the character sums over every H-set and the full
sequence spectrum S(beta^k), comparing both against their closed forms.
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import gf4
from .cyclotomy import ClassId, h_set
from .errors import (CapExceeded, CaseViolation, InvalidMapping,
                     InvalidParams, LemmaViolation, NotCoprime)
from .numtheory import factorize, mult_order
from .sequence import build_sequence, spectrum_profile, validate_mapping

DEFAULT_DEGREE_CAP = 12


def ord_4_mod(n):
    """Multiplicative order of 4 modulo n; n must be odd (coprime to 4)."""
    if n < 1:
        raise InvalidParams("modulus must be positive")
    if n == 1:
        return 1
    if n % 2 == 0:
        raise NotCoprime("4 shares a factor with an even modulus")
    return mult_order(4, n)


# --- packed-element arithmetic -------------------------------------------

def _lomask(d):
    # binary 01 repeated d times: mask of all low coefficient bits
    return ((1 << (2 * d)) - 1) // 3


def _mul_alpha(x, lomask):
    """Multiply every GF4 digit of x by alpha, digitwise; works on arrays."""
    hi = (x >> 1) & lomask
    lo = x & lomask
    return ((hi ^ lo) << 1) | hi


def poly_to_packed(poly):
    return sum(int(c) << (2 * i) for i, c in enumerate(poly))


def packed_to_poly(x, d):
    return gf4.poly_trim(np.array([(x >> (2 * i)) & 3 for i in range(d)],
                                  dtype=np.uint8))


def ext_mul(x, y, d, tail, lomask):
    """Product of two packed elements modulo the packed tail of the modulus.

    Horner over the digits of y; each degree overflow folds back through
    x^d = tail.
    """
    full = (1 << (2 * d)) - 1
    topshift = 2 * (d - 1)
    ta = _mul_alpha(tail, lomask)
    tails = (0, tail, ta, tail ^ ta)
    acc = 0
    for pos in range(d - 1, -1, -1):
        top = (acc >> topshift) & 3
        acc = ((acc << 2) & full) ^ tails[top]
        dig = (y >> (2 * pos)) & 3
        if dig == 1:
            acc ^= x
        elif dig == 2:
            acc ^= _mul_alpha(x, lomask)
        elif dig == 3:
            acc ^= x ^ _mul_alpha(x, lomask)
    return acc


def ext_pow(x, e, d, tail, lomask):
    """x^e by square and multiply; e >= 0."""
    if e < 0:
        raise InvalidParams("negative exponent")
    out = 1
    base = x
    while e:
        if e & 1:
            out = ext_mul(out, base, d, tail, lomask)
        base = ext_mul(base, base, d, tail, lomask)
        e >>= 1
    return out


def _vec_mul_scalar(arr, y, d, tail, lomask):
    # arr * y for a whole uint32 array of packed elements, scalar y
    full = np.uint32((1 << (2 * d)) - 1)
    topshift = 2 * (d - 1)
    ta = _mul_alpha(tail, lomask)
    tail_tbl = np.array([0, tail, ta, tail ^ ta], dtype=np.uint32)
    acc = np.zeros_like(arr)
    for pos in range(d - 1, -1, -1):
        tops = (acc >> topshift) & 3
        acc = ((acc << np.uint32(2)) & full) ^ tail_tbl[tops]
        dig = (y >> (2 * pos)) & 3
        if dig == 1:
            acc ^= arr
        elif dig == 2:
            acc ^= _mul_alpha(arr, np.uint32(lomask))
        elif dig == 3:
            acc ^= arr ^ _mul_alpha(arr, np.uint32(lomask))
    return acc


# --- modulus selection -----------------------------------------------------

def _poly_powmod_4(t, reps, modulus):
    # t^(4^reps) mod modulus via repeated squaring (twice per step)
    for _ in range(reps):
        t = gf4.poly_divmod(gf4.poly_mul(t, t), modulus)[1]
        t = gf4.poly_divmod(gf4.poly_mul(t, t), modulus)[1]
    return t


def is_irreducible(poly):
    """Rabin's test over GF(4) for a monic polynomial."""
    d = gf4.poly_deg(poly)
    if d <= 0:
        return False
    if d == 1:
        return True
    if poly[0] == 0:
        return False
    x = gf4.poly([0, 1])
    xmod = gf4.poly_divmod(x, poly)[1]
    if not gf4.poly_eq(_poly_powmod_4(xmod, d, poly), xmod):
        return False
    for r in factorize(d):
        sub = gf4.poly_add(_poly_powmod_4(xmod, d // r, poly), xmod)
        if gf4.poly_is_zero(sub):
            return False
        if gf4.poly_deg(gf4.poly_gcd(sub, poly)) != 0:
            return False
    return True


def least_irreducible(d):
    """Least monic irreducible of degree d, coefficients compared from the
    constant term up. A zero constant term divides by x, so the scan can
    start at constant term 1."""
    if d < 1:
        raise InvalidParams("degree must be positive")
    for c0 in (1, 2, 3):
        for rest in itertools.product(range(4), repeat=d - 1):
            cand = gf4.poly((c0,) + rest + (1,))
            if is_irreducible(cand):
                return cand
    raise InvalidParams(f"no irreducible of degree {d}")  # unreachable


# --- context ---------------------------------------------------------------

@dataclass(frozen=True)
class ExtFieldContext:
    """Everything needed to evaluate sums of beta powers for one N.

    Packed-integer elements throughout; beta_powers[r] is beta^r for
    0 <= r < N, the workhorse table behind every character sum. exp_table
    holds the generator's powers when the field is small enough, else None.
    """

    N: int
    p: int
    q: int
    m: int
    n: int
    d: int
    modulus: np.ndarray = field(repr=False)
    tail: int = field(repr=False)
    lomask: int = field(repr=False)
    generator: int
    beta: int
    beta_powers: np.ndarray = field(repr=False)
    zeta_p: int
    zeta_q: int
    zeta_pq: int
    exp_table: object = field(repr=False)

    @property
    def group_order(self):
        return 4**self.d - 1

    def mul(self, x, y):
        return ext_mul(x, y, self.d, self.tail, self.lomask)

    def pow(self, x, e):
        return ext_pow(x, e, self.d, self.tail, self.lomask)

    def frobenius(self, x):
        return self.pow(x, 4)

    def element_order(self, x):
        if x == 0:
            raise InvalidParams("zero has no multiplicative order")
        order = self.group_order
        for r in factorize(order):
            while order % r == 0 and self.pow(x, order // r) == 1:
                order //= r
        return order


def _build_exp_table(gamma, d, tail, lomask):
    size = 4**d - 1
    exp = np.zeros(size, dtype=np.uint32)
    exp[0] = 1
    filled = 1
    while filled < size:
        scalar = ext_pow(gamma, filled, d, tail, lomask)
        take = min(filled, size - filled)
        exp[filled:filled + take] = _vec_mul_scalar(exp[:take], scalar,
                                                    d, tail, lomask)
        filled += take
    return exp


def build_extension(N, max_degree=DEFAULT_DEGREE_CAP):
    """Deterministic F_{4^d} context for N = p^m q^n.

    Raises CapExceeded when the required degree exceeds max_degree and
    InvalidParams when N is not a product of exactly two odd prime powers.
    """
    if N < 3:
        raise InvalidParams("N must be an odd composite p^m q^n")
    fac = factorize(N)
    if len(fac) != 2 or 2 in fac:
        raise InvalidParams("N must be p^m q^n for distinct odd primes")
    (p, m), (q, n) = sorted(fac.items())
    d = ord_4_mod(N)
    if d > max_degree:
        raise CapExceeded(f"extension degree {d} exceeds the cap {max_degree}")

    modulus = least_irreducible(d)
    tail = poly_to_packed(modulus[:d])
    lomask = _lomask(d)
    group = 4**d - 1
    assert group % N == 0, "order of 4 mod N must make N divide 4^d - 1"
    group_primes = list(factorize(group))
    generator = None
    for cand in range(2, 4**d):
        if all(ext_pow(cand, group // r, d, tail, lomask) != 1
               for r in group_primes):
            generator = cand
            break
    assert generator is not None, "the multiplicative group is cyclic"

    beta = ext_pow(generator, group // N, d, tail, lomask)
    beta_powers = np.empty(N, dtype=np.uint32)
    cur = 1
    for r in range(N):
        beta_powers[r] = cur
        cur = ext_mul(cur, beta, d, tail, lomask)
    assert cur == 1, "beta^N must close the cycle"

    exp_table = None
    if 4**d <= 2**20:
        exp_table = _build_exp_table(generator, d, tail, lomask)
        exp_table.flags.writeable = False
    beta_powers.flags.writeable = False

    return ExtFieldContext(
        N=N, p=p, q=q, m=m, n=n, d=d, modulus=modulus, tail=tail,
        lomask=lomask, generator=generator, beta=beta,
        beta_powers=beta_powers,
        zeta_p=int(beta_powers[(p**(m - 1) * q**n) % N]),
        zeta_q=int(beta_powers[(p**m * q**(n - 1)) % N]),
        zeta_pq=int(beta_powers[(p**(m - 1) * q**(n - 1)) % N]),
        exp_table=exp_table)


def _require_matching(system, context):
    if system.constants.half_period != context.N:
        raise InvalidParams("context was built for a different N")


def _xor_reduce(arr):
    if arr.size == 0:
        return 0
    return int(np.bitwise_xor.reduce(arr))


def char_sum(system, context, class_id, k):
    """Sum of beta^{k t} over the H-set of class_id, as a packed element."""
    _require_matching(system, context)
    elems = h_set(system, class_id)
    idx = (k % context.N) * elems % context.N
    return _xor_reduce(context.beta_powers[idx])


def _scale_packed(x, digit, lomask):
    if digit == 0:
        return 0
    if digit == 1:
        return x
    if digit == 2:
        return _mul_alpha(x, lomask)
    return x ^ _mul_alpha(x, lomask)


def measure_spectrum(system, context, mapping, allow_degenerate=True):
    """S(beta^k) for 0 <= k < N, exactly, as packed elements.

    Folds the two half-periods first (beta^{t+N} = beta^t), then gathers
    beta powers per symbol value. The default allows degenerate mappings
    since measuring those is the point of the falsification probes.
    """
    _require_matching(system, context)
    seq = build_sequence(system, mapping, allow_degenerate=allow_degenerate)
    N = context.N
    folded = seq.symbols[:N] ^ seq.symbols[N:]
    support = {v: np.nonzero(folded == v)[0].astype(np.int64)
               for v in (1, 2, 3)}
    out = np.zeros(N, dtype=np.uint32)
    bp = context.beta_powers
    for k in range(N):
        acc = 0
        for v, idx in support.items():
            if idx.size:
                acc ^= _scale_packed(_xor_reduce(bp[(k * idx) % N]),
                                     v, context.lomask)
        out[k] = acc
    return out


@dataclass(frozen=True)
class CaseReport:
    """Outcome of checking S(beta^k) against the predicted regime values."""

    s_at_1: int
    value_generic: int
    value_p_saturated: int
    value_q_saturated: int
    checked: int
    all_values_nonzero: bool
    max_complexity_predicted: bool

    def to_json_dict(self):
        return {
            "s_at_1": self.s_at_1,
            "value_generic": self.value_generic,
            "value_p_saturated": self.value_p_saturated,
            "value_q_saturated": self.value_q_saturated,
            "checked": self.checked,
            "all_values_nonzero": self.all_values_nonzero,
            "max_complexity_predicted": self.max_complexity_predicted,
        }


def verify_case_table(system, context, mapping):
    """Measure every S(beta^k) and compare with the closed-form prediction.

    The prediction is regime-based: S(1) = e, and for k = p^a q^b l the
    value depends only on which of p^m, q^n divide k (see
    sequence.spectrum_profile). Raises CaseViolation at the first k whose
    measured value differs; the report also says whether every value is
    nonzero, which is exactly the condition for LC to reach the full
    period.
    """
    _require_matching(system, context)
    bad = validate_mapping(system.constants.p, mapping)
    if bad:
        raise InvalidMapping(bad)
    prof = spectrum_profile(system, mapping)
    spectrum = measure_spectrum(system, context, mapping,
                                allow_degenerate=True)
    if int(spectrum[0]) != mapping.e:
        raise CaseViolation(0, mapping.e, int(spectrum[0]))
    c = system.constants
    pm, qn = c.p**c.m, c.q**c.n
    for k in range(1, context.N):
        if k % pm == 0:
            expected = prof.value_p_saturated
        elif k % qn == 0:
            expected = prof.value_q_saturated
        else:
            expected = prof.value_generic
        if int(spectrum[k]) != expected:
            raise CaseViolation(k, expected, int(spectrum[k]))
    values = (mapping.e, prof.value_generic, prof.value_p_saturated,
              prof.value_q_saturated)
    nonzero = all(v != 0 for v in values)
    return CaseReport(
        s_at_1=mapping.e,
        value_generic=prof.value_generic,
        value_p_saturated=prof.value_p_saturated,
        value_q_saturated=prof.value_q_saturated,
        checked=context.N,
        all_values_nonzero=nonzero,
        max_complexity_predicted=nonzero)


@dataclass(frozen=True)
class CharSumReport:
    """Tally of the exhaustive character-sum table verification."""

    k_count: int
    cells_checked: int

    def to_json_dict(self):
        return {"k_count": self.k_count, "cells_checked": self.cells_checked}


def _valuation(x, prime):
    v = 0
    while x % prime == 0:
        x //= prime
        v += 1
    return v


def verify_char_sum_tables(system, context):
    """Check every character sum over every doubled-modulus H-set.

    For each k = p^a q^b l in 1..N-1 and each cell (shape, i, j, h) the
    measured sum must match its closed form: an integer constant reduced
    mod 2 when the cell's exponents are dominated by (a, b), a root-of-
    unity sum over the base class on the boundary, and 0 beyond it.
    Raises LemmaViolation with the witness (k, cell) on the first
    mismatch.
    """
    _require_matching(system, context)
    c = system.constants
    p, q, m, n = c.p, c.q, c.m, c.n
    N = context.N
    bp = context.beta_powers

    base_pq = {h: system.classes[ClassId("pq", 1, 1, h)] for h in (0, 1)}
    base_p = {h: system.classes[ClassId("p", 1, 0, h)] for h in (0, 1)}
    base_q = {h: system.classes[ClassId("q", 0, 1, h)] for h in (0, 1)}
    zpq_exp = p**(m - 1) * q**(n - 1)
    hs = {cid: h_set(system, cid)
          for cid in system.classes if cid.shape in ("2pq", "2p", "2q")}

    def measured(cid, k):
        idx = k * hs[cid] % N
        return _xor_reduce(bp[idx])

    def root_sum(base, zeta_exp, l):
        idx = (zeta_exp % N) * l % N * base % N
        return _xor_reduce(bp[idx])

    cells = 0
    for k in range(1, N):
        a = _valuation(k, p)
        b = _valuation(k, q)
        l = k // (p**a * q**b)

        for i in range(1, m + 1):
            for j in range(1, n + 1):
                for h in (0, 1):
                    cid = ClassId("2pq", i, j, h)
                    if i <= a and j <= b:
                        expected = ((p - 1) * (q - 1)
                                    * p**(i - 1) * q**(j - 1) // 2) & 1
                    elif i == a + 1 and j == b + 1:
                        expected = root_sum(base_pq[h], zpq_exp, l)
                    elif i <= a and j == b + 1:
                        expected = 0
                    elif i == a + 1 and j <= b:
                        expected = ((q - 1) // 2) & 1
                    else:
                        expected = 0
                    got = measured(cid, k)
                    cells += 1
                    if got != expected:
                        raise LemmaViolation(
                            "mixed-modulus character sum off its closed form",
                            k=k, cell=cid, expected=expected, measured=got)

        for i in range(1, m + 1):
            for h in (0, 1):
                cid = ClassId("2p", i, 0, h)
                if i <= a:
                    expected = (p**(i - 1) * (p - 1) // 2) & 1
                elif i == a + 1:
                    expected = root_sum(base_p[h], p**(m - 1) * q**(n + b), l)
                else:
                    expected = 0
                got = measured(cid, k)
                cells += 1
                if got != expected:
                    raise LemmaViolation(
                        "p-power character sum off its closed form",
                        k=k, cell=cid, expected=expected, measured=got)

        for j in range(1, n + 1):
            for h in (0, 1):
                cid = ClassId("2q", 0, j, h)
                if j <= b:
                    expected = (q**(j - 1) * (q - 1) // 2) & 1
                elif j == b + 1:
                    expected = root_sum(base_q[h], p**(m + a) * q**(n - 1), l)
                else:
                    expected = 0
                got = measured(cid, k)
                cells += 1
                if got != expected:
                    raise LemmaViolation(
                        "q-power character sum off its closed form",
                        k=k, cell=cid, expected=expected, measured=got)

    return CharSumReport(k_count=N - 1, cells_checked=cells)
