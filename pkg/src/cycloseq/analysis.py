"""Linear complexity of quaternary sequences by two independent routes.

Route one runs Berlekamp-Massey over GF(4) on two tiled periods of the
sequence and returns the shortest LFSR length plus its connection
polynomial C(x) with C(0) = 1. Route two is purely algebraic: for a
sequence of period P, LC = P - deg gcd(x^P - 1, S(x)) and the minimal
polynomial is the quotient (x^P - 1) / gcd, which for full-period input
is exactly the monic normalization of the unique minimal connection
polynomial. The two routes must agree on both the length and the
polynomial; analyze and verify_theorem enforce that.
"""

from dataclasses import dataclass

import numpy as np

from . import gf4
from .errors import (InvalidParams, MethodDisagreement, TheoremViolation)
from .gf4 import MUL_TABLE
from .sequence import (DEFAULT_MAPPING, QuaternarySequence, build_sequence,
                       spectrum_profile, validate_mapping)


def berlekamp_massey(symbols):
    """Shortest LFSR over GF(4) generating the given symbol array.

    Returns (L, C) where C is the connection polynomial, constant term 1,
    satisfying s_t = sum_{i=1..L} C_i s_{t-i} for all t >= L. O(len^2)
    with numpy-sliced inner products, fine at desk scale.
    """
    s = np.asarray(symbols, dtype=np.uint8)
    size = len(s)
    if size == 0:
        return 0, gf4.poly([1])
    c = np.zeros(size + 1, dtype=np.uint8)
    b = np.zeros(size + 1, dtype=np.uint8)
    c[0] = b[0] = 1
    length = 0
    shift = 1
    prev_d = 1
    for t in range(size):
        d = int(s[t])
        if length:
            window = s[t - length:t][::-1]
            d ^= int(np.bitwise_xor.reduce(
                MUL_TABLE[c[1:length + 1], window]))
        if d == 0:
            shift += 1
            continue
        coef = gf4.gf4_mul(d, gf4.INV_TABLE[prev_d])
        if 2 * length <= t:
            saved = c.copy()
            c[shift:] ^= MUL_TABLE[coef, b[:size + 1 - shift]]
            b = saved
            length = t + 1 - length
            prev_d = d
            shift = 1
        else:
            c[shift:] ^= MUL_TABLE[coef, b[:size + 1 - shift]]
            shift += 1
    return length, gf4.poly_trim(c[:length + 1].copy())


def lc_via_gcd(symbols):
    """Linear complexity from gcd(x^P - 1, S(x)) for one full period.

    Returns (lc, minimal_polynomial) with the minimal polynomial monic.
    The zero sequence has lc 0 and minimal polynomial 1.
    """
    if isinstance(symbols, QuaternarySequence):
        symbols = symbols.symbols
    s = np.asarray(symbols, dtype=np.uint8)
    period = len(s)
    if period == 0:
        raise InvalidParams("need at least one symbol")
    if s.max(initial=0) > 3:
        raise InvalidParams("symbols must be field elements 0..3")
    big = gf4.x_pow_n_minus_1(period)
    spoly = gf4.poly_trim(s.copy())
    common = gf4.poly_gcd(big, spoly) if not gf4.poly_is_zero(spoly) else big
    quotient, rem = gf4.poly_divmod(big, common)
    assert gf4.poly_is_zero(rem)
    return period - gf4.poly_deg(common), gf4.poly_monic(quotient)


def connection_reciprocal(length, conn):
    """x^L C(1/x): the annihilator form of the BM recurrence.

    Applying it as a shift-operator polynomial sends every window of the
    sequence to zero; the minimal polynomial in this module's quotient
    convention is its reversal.
    """
    padded = np.zeros(length + 1, dtype=np.uint8)
    padded[:len(conn)] = conn
    return gf4.poly_trim(padded[::-1].copy())


def methods_consistent(lc_bm, conn, lc_gcd, minpoly):
    """True when both lengths match and the BM recurrence is minimal.

    For a full-period input the reduced denominator of S(x)/(x^P - 1) is
    the unique minimal connection polynomial, so BM's C(x), normalized
    monic, must coincide with the gcd quotient.
    """
    if lc_bm != lc_gcd:
        return False
    return gf4.poly_eq(gf4.poly_monic(conn), minpoly)


@dataclass(frozen=True)
class LinearComplexityReport:
    """Both measurements plus the agreement and attainment verdicts."""

    lc_bm: int
    lc_gcd: int
    minimal_polynomial: np.ndarray
    methods_agree: bool
    theorem_holds: bool

    def to_json_dict(self):
        return {
            "lc_bm": self.lc_bm,
            "lc_gcd": self.lc_gcd,
            "minimal_polynomial": gf4.poly_to_digits(self.minimal_polynomial),
            "methods_agree": self.methods_agree,
            "theorem_holds": self.theorem_holds,
        }


def analyze_symbols(symbols):
    """Measure one period by both methods and cross-check them.

    theorem_holds reports whether the complexity equals the full period.
    Raises MethodDisagreement when the two routes differ.
    """
    s = np.asarray(symbols, dtype=np.uint8)
    lc_gcd, minpoly = lc_via_gcd(s)
    lc_bm, conn = berlekamp_massey(np.tile(s, 2))
    if not methods_consistent(lc_bm, conn, lc_gcd, minpoly):
        raise MethodDisagreement(
            f"BM found {lc_bm}, gcd found {lc_gcd}, or minimal polynomials differ")
    return LinearComplexityReport(
        lc_bm=lc_bm, lc_gcd=lc_gcd, minimal_polynomial=minpoly,
        methods_agree=True, theorem_holds=(lc_gcd == len(s)))


def verify_theorem(system, mapping=DEFAULT_MAPPING, strict=False):
    """Build the sequence for a valid mapping and check LC = 2 p^m q^n.

    Always raises on method disagreement; with strict=True also raises
    TheoremViolation when the measured complexity falls short, otherwise
    the report carries theorem_holds = False.
    """
    seq = build_sequence(system, mapping)
    report = analyze_symbols(seq.symbols)
    if strict and not report.theorem_holds:
        raise TheoremViolation(
            f"complexity {report.lc_gcd} < period {seq.period} "
            f"for mapping {mapping.as_tuple()}")
    return report


def degenerate_lower_bound(p, q, m, n):
    """(p^m + 1)(q^n + 1) / 2, the guaranteed floor for degenerate maps."""
    return (p**m + 1) * (q**n + 1) // 2


@dataclass(frozen=True)
class DegenerateReport:
    """Measured complexity of a mapping that breaks the mod-8 constraint."""

    mapping: tuple
    violations: tuple
    lc_bm: int
    lc_gcd: int
    lower_bound: int
    reduced: bool
    minimal_polynomial: np.ndarray

    def to_json_dict(self):
        return {
            "mapping": list(self.mapping),
            "violations": list(self.violations),
            "lc_bm": self.lc_bm,
            "lc_gcd": self.lc_gcd,
            "lower_bound": self.lower_bound,
            "reduced": self.reduced,
            "minimal_polynomial": gf4.poly_to_digits(self.minimal_polynomial),
        }


def analyze_degenerate(system, mapping):
    """Measure a degenerate mapping and check the lower bound.

    The mapping must be structurally sound and actually degenerate, either
    by the mod-8 rule or by a vanishing spectrum regime; a fully valid
    mapping that attains the maximum belongs to verify_theorem instead.
    Raises TheoremViolation if the measured complexity dips below
    (p^m + 1)(q^n + 1)/2.
    """
    from .sequence import e_constraint_violations, structural_violations
    from .errors import InvalidMapping

    bad = structural_violations(mapping)
    if bad:
        raise InvalidMapping(bad)
    c = system.constants
    soft = e_constraint_violations(c.p, mapping)
    profile = spectrum_profile(system, mapping)
    if not soft and profile.attains_max:
        raise InvalidParams(
            "mapping is valid and attains the maximum; nothing degenerate")
    seq = build_sequence(system, mapping, allow_degenerate=True)
    report = analyze_symbols(seq.symbols)
    bound = degenerate_lower_bound(c.p, c.q, c.m, c.n)
    if report.lc_gcd < bound:
        raise TheoremViolation(
            f"complexity {report.lc_gcd} below the floor {bound} "
            f"for mapping {mapping.as_tuple()}")
    return DegenerateReport(
        mapping=mapping.as_tuple(),
        violations=tuple(soft),
        lc_bm=report.lc_bm,
        lc_gcd=report.lc_gcd,
        lower_bound=bound,
        reduced=report.lc_gcd < seq.period,
        minimal_polynomial=report.minimal_polynomial,
    )
