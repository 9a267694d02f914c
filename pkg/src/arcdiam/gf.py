"""Finite fields GF(p^k) with elements encoded as small integers.

An element with little-endian coefficient vector (c_0, ..., c_{k-1}) over Z_p
is encoded as ``sum(c_i * p**i)``.  Enumerating codes 0, 1, ..., q-1 therefore
walks the coefficient vectors lexicographically (highest coefficient most
significant), with 0 first and 1 second.  Every structure built on top of the
field (point order, line order, flag order, vertex labels) inherits this order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np

from .errors import DivisionByZero, NotAPrimePower

__all__ = [
    "PrimePower", "FieldCtx", "FieldElem", "is_prime", "prime_power",
    "is_prime_power", "find_irreducible", "make_field", "elements",
    "add", "mul", "neg", "inv",
]


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for desk-scale inputs."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p) or self.k < 1:
            raise NotAPrimePower(f"{self.p}^{self.k} is not a prime power")

    @property
    def q(self) -> int:
        return self.p ** self.k


def prime_power(q: int) -> PrimePower:
    """Factor ``q`` as p^k, raising NotAPrimePower otherwise."""
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q  # q itself is prime
    k, r = 0, q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise NotAPrimePower(f"{q} has at least two distinct prime factors")
    return PrimePower(p, k)


def is_prime_power(q: int) -> bool:
    try:
        prime_power(q)
    except NotAPrimePower:
        return False
    return True


# -- polynomials over Z_p, little-endian coefficient lists ------------------

def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> List[int]:
    a = _trim([c % p for c in a])
    dm = len(m) - 1
    lead_inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        c = (a[-1] * lead_inv) % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _poly_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_mod(out, m, p)


def _poly_powmod(a, e, m, p):
    result = [1]
    base = _poly_mod(a, m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    # f has no factor of degree i iff gcd(f, x^(p^i) - x) = 1, for i <= deg/2
    k = len(f) - 1
    x = [0, 1]
    xp = x
    for _ in range(k // 2):
        xp = _poly_powmod(xp, p, f, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(f, _trim(diff), p)
        if len(g) != 1:
            return False
    return True


def find_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """Smallest monic irreducible of degree ``k`` over Z_p.

    Candidates x^k + c_{k-1}x^{k-1} + ... + c_0 are scanned with the
    integer code of (c_0, ..., c_{k-1}) increasing.  Returns the little-endian
    coefficient tuple including the leading 1.
    """
    if k < 1:
        raise ValueError("degree must be positive")
    for code in range(p ** k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        f = coeffs + [1]
        if k == 1 or (f[0] != 0 and _is_irreducible(f, p)):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Arithmetic context for GF(q).  Elements are integer codes in [0, q)."""

    prime_power: PrimePower
    modulus: Tuple[int, ...]
    add_table: np.ndarray = field(repr=False)
    mul_table: np.ndarray = field(repr=False)
    neg_table: Tuple[int, ...] = field(repr=False)
    inv_table: Tuple[int, ...] = field(repr=False)

    @property
    def p(self) -> int:
        return self.prime_power.p

    @property
    def k(self) -> int:
        return self.prime_power.k

    @property
    def q(self) -> int:
        return self.prime_power.q

    element_count = q

    def __repr__(self):
        return f"GF({self.q})"

    def coeffs(self, a: int) -> Tuple[int, ...]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + (c % self.p)
        return code

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return self.inv_table[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DivisionByZero("0 has no multiplicative order")
        n, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            n += 1
        return n

    def primitive_element(self) -> int:
        """Smallest code generating the multiplicative group."""
        for a in range(1, self.q):
            if self.order(a) == self.q - 1:
                return a
        raise AssertionError("unreachable: GF(q)* is cyclic")

    def elements(self) -> List["FieldElem"]:
        return [FieldElem(self, a) for a in range(self.q)]

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, (tuple, list)):
            value = self.from_coeffs(value)
        return FieldElem(self, value % self.q if self.k == 1 else value)


@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx = field(repr=False, compare=False)
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.q:
            raise ValueError(f"{self.value} is not an element code of {self.ctx}")

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self.ctx.coeffs(self.value)

    def _same(self, other):
        if not isinstance(other, FieldElem) or other.ctx is not self.ctx:
            raise TypeError("operands belong to different fields")
        return other.value

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.value, self._same(other)))

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.value, self._same(other)))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.value, self._same(other)))

    def __truediv__(self, other):
        return self * other.inverse()

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.value, e))

    def inverse(self):
        return FieldElem(self.ctx, self.ctx.inv(self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)


def _build_tables(pp: PrimePower, modulus: Tuple[int, ...]):
    p, k, q = pp.p, pp.k, pp.q
    if k == 1:
        r = np.arange(q)
        add_t = (r[:, None] + r[None, :]) % p
        mul_t = (r[:, None] * r[None, :]) % p
    else:
        vecs = np.array([[(a // p ** i) % p for i in range(k)] for a in range(q)])
        weights = p ** np.arange(k)
        add_t = ((vecs[:, None, :] + vecs[None, :, :]) % p) @ weights
        # multiplication by x as a k x k matrix acting on coefficient rows
        xmul = np.zeros((k, k), dtype=np.int64)
        for i in range(k - 1):
            xmul[i, i + 1] = 1
        xmul[k - 1, :] = [(-c) % p for c in modulus[:k]]
        powers = [np.eye(k, dtype=np.int64)]
        for _ in range(k - 1):
            powers.append(powers[-1] @ xmul % p)
        mul_t = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            # right multiplication by a, as a matrix on coefficient rows
            ma = sum(vecs[a, i] * powers[i] for i in range(k)) % p
            mul_t[a] = (vecs @ ma % p) @ weights
    add_t = add_t.astype(np.int64)
    mul_t = mul_t.astype(np.int64)
    add_t.setflags(write=False)
    mul_t.setflags(write=False)
    zero_col = add_t == 0
    neg_t = tuple(int(np.flatnonzero(zero_col[a])[0]) for a in range(q))
    inv_t = [0] * q
    for a in range(1, q):
        inv_t[a] = int(np.flatnonzero(mul_t[a] == 1)[0])
    return add_t, mul_t, neg_t, tuple(inv_t)


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldCtx:
    """Return the (cached) arithmetic context for GF(q)."""
    pp = prime_power(q)
    modulus = find_irreducible(pp.p, pp.k) if pp.k > 1 else (0, 1)
    tables = _build_tables(pp, modulus)
    return FieldCtx(pp, modulus, *tables)


def elements(ctx: FieldCtx) -> List[FieldElem]:
    return ctx.elements()


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def neg(a: FieldElem) -> FieldElem:
    return -a


def inv(a: FieldElem) -> FieldElem:
    return a.inverse()
