"""Exact evaluation of degree-diameter bounds for diameter 2.

Polynomial and rational bounds are computed with ``int`` / ``Fraction``.
Bounds with fractional exponents are kept symbolically as a :class:`RealBound`
(a constant plus terms ``c * base**(a/b)``) and enclosed by intervals whose
endpoints come from exact integer b-th roots, so every comparison against an
integer is decided by integer arithmetic, never by floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import gmpy2

from .errors import EpsOutOfRange, InexactDivision, UndecidedComparison
from .gf import is_prime, is_prime_power

__all__ = [
    "Enclosure", "RealBound", "BoundReport", "ScanRow", "moore", "brown",
    "mms", "ans", "ss", "ss_form", "hamming_lb", "flag_params",
    "flag_expansion_check", "q_delta_inequality", "flag_lb", "flag_relation",
    "eps_bound", "scan", "bound_report", "flag_degree_params",
    "MOORE_EXCEPTIONS",
]

# degrees where a Moore graph of diameter 2 exists (57: open)
MOORE_EXCEPTIONS = (1, 2, 3, 7, 57)

START_BITS = 32
MAX_BITS = 1 << 16


@dataclass(frozen=True)
class Enclosure:
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __add__(self, other: "Enclosure") -> "Enclosure":
        return Enclosure(self.lo + other.lo, self.hi + other.hi)

    def scale(self, c: Fraction) -> "Enclosure":
        a, b = self.lo * c, self.hi * c
        return Enclosure(min(a, b), max(a, b))

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _power(base: int, exp: Fraction, bits: int) -> Enclosure:
    """Enclose base**exp (base >= 1, exp >= 0) to within 2**-bits."""
    a, b = exp.numerator, exp.denominator
    if b == 1:
        v = Fraction(base ** a)
        return Enclosure(v, v)
    # exact root first: a rational power of an integer is an integer or irrational
    r, exact = gmpy2.iroot(gmpy2.mpz(base) ** a, b)
    if exact:
        v = Fraction(int(r))
        return Enclosure(v, v)
    r, _ = gmpy2.iroot(gmpy2.mpz(base) ** a << (bits * b), b)
    scale = 1 << bits
    return Enclosure(Fraction(int(r), scale), Fraction(int(r) + 1, scale))


@dataclass(frozen=True)
class RealBound:
    """``constant + sum(coef * base**exp)`` with rational coef/exp."""

    terms: Tuple[Tuple[Fraction, int, Fraction], ...]
    constant: Fraction = Fraction(0)
    description: str = field(default="", compare=False)

    def enclose(self, bits: int = 64) -> Enclosure:
        total = Enclosure(self.constant, self.constant)
        for coef, base, exp in self.terms:
            total = total + _power(base, exp, bits).scale(coef)
        return total

    @property
    def exact_value(self) -> Optional[Fraction]:
        enc = self.enclose(START_BITS)
        return enc.lo if enc.exact else None

    def __float__(self) -> float:
        return float(self.enclose(64).mid())

    def compare(self, value) -> Tuple[int, int]:
        """Sign of ``value - self`` and the precision (bits) that decided it.

        Precision doubles until the enclosure excludes ``value`` or is exact;
        running past MAX_BITS raises UndecidedComparison.
        """
        value = Fraction(value)
        bits = START_BITS
        while bits <= MAX_BITS:
            enc = self.enclose(bits)
            if enc.exact:
                return (value > enc.lo) - (value < enc.lo), bits
            if value < enc.lo:
                return -1, bits
            if value > enc.hi:
                return 1, bits
            bits *= 2
        raise UndecidedComparison(f"cannot separate {value} from {self.description}")

    def gap_lower(self, value) -> Fraction:
        """A certified lower bound on ``value - self``."""
        _, bits = self.compare(value)
        return Fraction(value) - self.enclose(bits).hi

    def format(self, digits: int = 6) -> str:
        ev = self.exact_value
        if ev is not None:
            return _fmt_fraction(ev)
        return f"{float(self):.{digits}f}"


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- the bounds -------------------------------------------------------------

def moore(delta: int) -> Tuple[int, int]:
    """(Delta^2 + 1, refined upper bound); the refinement Delta^2 - 1 applies
    outside the Moore-graph degrees, with 57 kept at Delta^2 + 1 as open."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    upper = delta * delta + 1
    return upper, upper if delta in MOORE_EXCEPTIONS else delta * delta - 1


def brown(delta: int) -> Optional[int]:
    if delta >= 2 and is_prime(delta - 1):
        return delta * delta - delta + 1
    return None


def mms(delta: int) -> Optional[Fraction]:
    """(8/9)(Delta + 1/2)^2 when Delta = (3q - 1)/2, q a prime power = 1 mod 4."""
    if (2 * delta + 1) % 3:
        return None
    q = (2 * delta + 1) // 3
    if q % 4 != 1 or not is_prime_power(q):
        return None
    return Fraction(8, 9) * (delta + Fraction(1, 2)) ** 2


def ans(delta: int) -> Optional[Fraction]:
    """(Delta + 1)^2 / 2 when Delta = 2q - 1, q a prime power != 1 mod 4."""
    if (delta + 1) % 2:
        return None
    q = (delta + 1) // 2
    if q % 4 == 1 or not is_prime_power(q):
        return None
    return Fraction((delta + 1) ** 2, 2)


def ss_form(delta: int) -> Optional[Tuple[int, int]]:
    """(m, t) with Delta = 2^(2m+t) + (2+t) 2^(m+1) - 6, m >= 1, t in {0, 1}."""
    m = 1
    while 2 ** (2 * m) + 2 ** (m + 2) - 6 <= delta:
        for t in (0, 1):
            if 2 ** (2 * m + t) + (2 + t) * 2 ** (m + 1) - 6 == delta:
                return m, t
        m += 1
    return None


def ss(delta: int) -> Optional[RealBound]:
    """Delta^2 - 6 sqrt(2) Delta^(3/2), written as Delta^2 - 6 (2 Delta^3)^(1/2)."""
    if ss_form(delta) is None:
        return None
    return RealBound(
        terms=((Fraction(-6), 2 * delta ** 3, Fraction(1, 2)),),
        constant=Fraction(delta * delta),
        description=f"ss({delta})",
    )


def hamming_lb(delta: int) -> Optional[Fraction]:
    if delta < 2 or delta % 2:
        return None
    return Fraction((delta + 2) ** 2, 4)


def flag_params(d: int, q: int) -> Tuple[int, int]:
    """(Delta, N) of the flag graph on PG(d-1, q)."""
    if d < 3 or q < 2:
        raise ValueError("need d >= 3 and q >= 2")
    dn = q ** 3 * (q ** (d - 2) - 1)
    nn = (q ** d - 1) * (q ** (d - 1) - 1)
    if dn % (q - 1) or nn % (q - 1) ** 2:
        raise InexactDivision(f"d={d}, q={q}")
    return dn // (q - 1), nn // (q - 1) ** 2


def flag_expansion_check(d: int, q: int) -> bool:
    """N == Delta^2/q^3 + (2/q + 1/q^2) Delta + (q + 1) in exact rationals."""
    delta, n = flag_params(d, q)
    q = Fraction(q)
    return n == delta ** 2 / q ** 3 + (2 / q + 1 / q ** 2) * delta + (q + 1)


def q_delta_inequality(d: int, q: int) -> Tuple[bool, bool]:
    """(q <= Delta^(1/d), equality), compared as q^d against Delta."""
    delta, _ = flag_params(d, q)
    return q ** d <= delta, q ** d == delta


def eps_bound(delta: int, eps) -> RealBound:
    """Delta^(2-eps) + 2 Delta^(1-eps/3) + Delta^(1-2eps/3) + 3.

    ``eps`` must satisfy 0 < eps <= 1; eps = 1 is admitted because it is the
    d = 3 instance of the exponent 3/d.
    """
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise EpsOutOfRange(f"eps = {eps} not in (0, 1]")
    return RealBound(
        terms=(
            (Fraction(1), delta, 2 - eps),
            (Fraction(2), delta, 1 - eps / 3),
            (Fraction(1), delta, 1 - 2 * eps / 3),
        ),
        constant=Fraction(3),
        description=f"eps_bound({delta}, {eps})",
    )


def flag_lb(d: int):
    """Delta -> Delta^(2-3/d) + 2 Delta^(1-1/d) + Delta^(1-2/d) + 3."""
    if d < 3:
        raise ValueError("d must be >= 3")
    return lambda delta: eps_bound(delta, Fraction(3, d))


_REL = {1: ">", 0: "=", -1: "<"}


def flag_relation(d: int, q: int) -> str:
    """Decide N {>, =, <} flag_lb(d)(Delta) exactly."""
    delta, n = flag_params(d, q)
    sign, _ = flag_lb(d)(delta).compare(n)
    return _REL[sign]


def flag_degree_params(delta: int) -> List[Tuple[int, int]]:
    """All (d, q), q a prime power, whose flag graph has degree ``delta``."""
    out = []
    q = 2
    while q ** 3 <= delta:
        if is_prime_power(q):
            d = 3
            while True:
                dd, _ = flag_params(d, q)
                if dd == delta:
                    out.append((d, q))
                if dd >= delta:
                    break
                d += 1
        q += 1
    return out


@dataclass(frozen=True)
class BoundReport:
    delta: int
    moore_upper: int
    moore_refined_upper: int
    brown_lower: Optional[int]
    mms_lower: Optional[Fraction]
    ans_lower: Optional[Fraction]
    ss_lower: Optional[RealBound]
    hamming_lower: Optional[Fraction]
    flag_lower: Optional[RealBound]
    flag_witness: Optional[Tuple[int, int, int]]  # (d, q, order)
    notes: Dict[str, str]

    def lower_bounds(self) -> Dict[str, object]:
        return {k: v for k, v in (
            ("brown", self.brown_lower), ("mms", self.mms_lower),
            ("ans", self.ans_lower), ("ss", self.ss_lower),
            ("hamming", self.hamming_lower), ("flag", self.flag_lower),
        ) if v is not None}

    def consistent(self) -> bool:
        """Every applicable lower bound is at most the Moore bound."""
        for v in self.lower_bounds().values():
            if isinstance(v, RealBound):
                if v.compare(self.moore_upper)[0] < 0:
                    return False
            elif v > self.moore_upper:
                return False
        return True


def bound_report(delta: int) -> BoundReport:
    upper, refined = moore(delta)
    notes = {}
    if delta == 57:
        notes["moore"] = "existence of a Moore graph of degree 57 is open"
    elif delta in MOORE_EXCEPTIONS:
        notes["moore"] = "Moore bound attained"
    b = brown(delta)
    notes["brown"] = "Delta-1 prime" if b is not None else "Delta-1 not prime"
    m = mms(delta)
    if m is not None:
        notes["mms"] = f"q = {(2 * delta + 1) // 3}"
    a = ans(delta)
    if a is not None:
        notes["ans"] = f"q = {(delta + 1) // 2}"
    form = ss_form(delta)
    if form is not None:
        notes["ss"] = f"m = {form[0]}, delta = {form[1]}"
    witness = None
    fl = None
    params = flag_degree_params(delta)
    if params:
        d, q = params[0]
        witness = (d, q, flag_params(d, q)[1])
        fl = flag_lb(d)(delta)
        notes["flag"] = f"d = {d}, q = {q}, order {witness[2]}"
    return BoundReport(
        delta=delta,
        moore_upper=upper,
        moore_refined_upper=refined,
        brown_lower=b,
        mms_lower=m,
        ans_lower=a,
        ss_lower=ss(delta),
        hamming_lower=hamming_lb(delta),
        flag_lower=fl,
        flag_witness=witness,
        notes=notes,
    )


@dataclass(frozen=True)
class ScanRow:
    d: int
    q: int
    delta: int
    order_n: int
    epsilon_threshold: Fraction   # 3/d
    bound_value: RealBound        # eps_bound(delta, eps) at the scanned eps
    strict: bool
    gap_lower: Fraction           # certified lower bound on order_n - bound
    decided_bits: int


def _min_odd_d(eps: Fraction) -> int:
    d = max(3, math.ceil(3 / eps))
    return d if d % 2 else d + 1


def scan(eps, d_max: int, q_max: int) -> List[ScanRow]:
    """Odd d >= 3/eps and odd prime powers q, sorted by (d, q)."""
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise EpsOutOfRange(f"eps = {eps} not in (0, 1]")
    rows = []
    for d in range(_min_odd_d(eps), d_max + 1, 2):
        for q in range(3, q_max + 1, 2):
            if not is_prime_power(q):
                continue
            delta, n = flag_params(d, q)
            bound = eps_bound(delta, eps)
            sign, bits = bound.compare(n)
            rows.append(ScanRow(
                d=d, q=q, delta=delta, order_n=n,
                epsilon_threshold=Fraction(3, d),
                bound_value=bound,
                strict=sign > 0,
                gap_lower=Fraction(n) - bound.enclose(bits).hi,
                decided_bits=bits,
            ))
    return rows
