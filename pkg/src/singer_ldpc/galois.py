"""Finite fields GF(p^e) with log/antilog tables, and extension towers.

Elements are stored as integers whose base-p digits are the polynomial
coefficients (constant term in the lowest digit).  Every nonzero element
is a power of the root ``alpha`` of the field modulus; the tables map
between the two representations.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    FieldMismatch,
    LogOfZero,
    NonPrimeCharacteristic,
    NonPrimitiveModulus,
    SizeGuardExceeded,
    ZeroInverse,
)

DEFAULT_SIZE_GUARD = 1 << 20
SIZE_GUARD_ENV = "SINGER_LDPC_SIZE_GUARD"


def size_guard() -> int:
    """Largest admissible field order q^n (overridable through the environment)."""
    raw = os.environ.get(SIZE_GUARD_ENV)
    return int(raw) if raw else DEFAULT_SIZE_GUARD


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` as ``p**e``; raise if it is not a prime power."""
    for p in range(2, q + 1):
        if q % p == 0:
            e, rest = 0, q
            while rest % p == 0:
                rest //= p
                e += 1
            if rest != 1 or not is_prime(p):
                raise NonPrimeCharacteristic(f"{q} is not a prime power")
            return p, e
    raise NonPrimeCharacteristic(f"{q} is not a prime power")


def _digits(v: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        v, d = divmod(v, p)
        out.append(d)
    return out


def _undigits(ds: Sequence[int], p: int) -> int:
    v = 0
    for d in reversed(ds):
        v = v * p + d
    return v


def _power_table(p: int, e: int, modulus: Sequence[int]) -> np.ndarray | None:
    """Powers of x modulo ``modulus``; None unless x has order exactly p^e - 1."""
    order = p**e - 1
    table = np.empty(order, dtype=np.int64)
    if p == 2:
        mod_int = _undigits(modulus, 2)
        top = 1 << e
        v = 1
        for k in range(order):
            if k and v == 1:
                return None
            table[k] = v
            v <<= 1
            if v & top:
                v ^= mod_int
    else:
        low = list(modulus[:e])
        cur = [1] + [0] * (e - 1)
        for k in range(order):
            v = _undigits(cur, p)
            if k and v == 1:
                return None
            table[k] = v
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                cur = [(c - lead * m) % p for c, m in zip(cur, low)]
        v = _undigits(cur, p)
    if v != 1:
        return None
    if len(np.unique(table)) != order:
        return None
    return table


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^e) defined by a primitive monic modulus (coefficients low to high)."""

    p: int
    e: int
    modulus: tuple[int, ...]
    q: int = field(compare=False)
    exp_table: np.ndarray = field(compare=False, repr=False)
    log_table: np.ndarray = field(compare=False, repr=False)

    @property
    def order(self) -> int:
        return self.q

    # ---- integer-level arithmetic (the fast path used internally) ----

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, place = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * place
            place *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return _undigits([(-d) % self.p for d in _digits(a, self.p, self.e)], self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        k = (int(self.log_table[a]) + int(self.log_table[b])) % (self.q - 1)
        return int(self.exp_table[k])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("zero has no inverse")
        return int(self.exp_table[(-int(self.log_table[a])) % (self.q - 1)])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroInverse("zero has no inverse")
            return 1 if k == 0 else 0
        return int(self.exp_table[(int(self.log_table[a]) * k) % (self.q - 1)])

    def log(self, a: int) -> int:
        if a == 0:
            raise LogOfZero("zero has no discrete logarithm")
        return int(self.log_table[a])

    def exp(self, k: int) -> int:
        return int(self.exp_table[k % (self.q - 1)])

    def add_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor(a, b)
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        place = 1
        for _ in range(self.e):
            out += ((a // place % p + b // place % p) % p) * place
            place *= p
        return out

    def mul_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        k = (self.log_table[a] + self.log_table[b]) % (self.q - 1)
        return np.where((a == 0) | (b == 0), 0, self.exp_table[k])

    @cached_property
    def add_table(self) -> np.ndarray:
        r = np.arange(self.q)
        return self.add_arrays(r[:, None], r[None, :])

    @cached_property
    def mul_table(self) -> np.ndarray:
        r = np.arange(self.q)
        return self.mul_arrays(r[:, None], r[None, :])

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.q)], dtype=np.int64)

    # ---- element-level API ----

    def __call__(self, value: int | Sequence[int]) -> FieldElement:
        if not isinstance(value, int):
            value = _undigits([c % self.p for c in value], self.p)
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element encoding of GF({self.q})")
        return FieldElement(self, value)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(self, int(self.exp_table[1 % (self.q - 1)]))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.p}^{self.e}), modulus={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(_digits(self.value, self.field.p, self.field.e))

    def _check(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldMismatch("operands belong to different fields")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        self._check(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    def __pow__(self, k: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.value, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        if self.value == 0:
            return "0"
        return f"a^{self.field.log(self.value)}"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, k: int) -> FieldElement:
    return a**k


def discrete_log(x: FieldElement) -> int:
    """Return k in [0, q-2] with alpha^k = x."""
    return x.field.log(x.value)


def exp(f: FieldSpec, k: int) -> FieldElement:
    return FieldElement(f, f.exp(k))


def field_create(p: int, e: int, modulus: Iterable[int] | None = None) -> FieldSpec:
    """Build GF(p^e).

    Without ``modulus`` the lexicographically smallest primitive monic
    polynomial is used, comparing coefficients from the constant term up.
    """
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be at least 1")
    if p**e > size_guard():
        raise SizeGuardExceeded(f"GF({p}^{e}) exceeds the size guard {size_guard()}")
    if modulus is not None:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != e + 1 or mod[-1] != 1 or any(not 0 <= c < p for c in mod):
            raise NonPrimitiveModulus(f"modulus {list(mod)} is not monic of degree {e} over GF({p})")
        table = _power_table(p, e, mod)
        if table is None:
            raise NonPrimitiveModulus(f"modulus {list(mod)} is not primitive over GF({p})")
        return _build(p, e, mod, table)
    return _default_field(p, e)


@lru_cache(maxsize=None)
def _default_field(p: int, e: int) -> FieldSpec:
    for low in itertools.product(range(p), repeat=e):
        if low[0] == 0:
            continue
        mod = tuple(low) + (1,)
        # cheap root filter before the full powering test
        if e > 1 and any(_eval_poly(mod, r, p) == 0 for r in range(p)):
            continue
        table = _power_table(p, e, mod)
        if table is not None:
            return _build(p, e, mod, table)
    raise AssertionError(f"no primitive polynomial found for GF({p}^{e})")


def _eval_poly(coeffs: Sequence[int], x: int, p: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = (v * x + c) % p
    return v


def _build(p: int, e: int, mod: tuple[int, ...], table: np.ndarray) -> FieldSpec:
    q = p**e
    log_table = np.full(q, -1, dtype=np.int64)
    log_table[table] = np.arange(q - 1)
    table.setflags(write=False)
    log_table.setflags(write=False)
    return FieldSpec(p=p, e=e, modulus=mod, q=q, exp_table=table, log_table=log_table)


@dataclass(frozen=True, eq=False)
class FieldTower:
    """GF(q^n) over GF(q), both realised over the same prime field.

    ``base_to_top`` embeds base-field encodings into the top field and
    ``top_to_base`` is its partial inverse (-1 off the subfield).
    """

    base: FieldSpec
    top: FieldSpec
    n: int
    subfield_exponents: dict[int, int]
    base_to_top: np.ndarray = field(repr=False)
    top_to_base: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def alpha_log_table(self) -> np.ndarray:
        return self.top.log_table

    @property
    def theta(self) -> int:
        return (self.top.q - 1) // (self.base.q - 1)

    def subfield(self, t: int) -> list[int]:
        """Top-field encodings of GF(q^t), zero first then beta^0, beta^1, ..."""
        step = self.subfield_exponents[t]
        order = self.base.q**t - 1
        return [0] + [self.top.exp(step * k) for k in range(order)]

    def embed(self, a: int) -> int:
        return int(self.base_to_top[a])

    def project(self, x: int) -> int:
        v = int(self.top_to_base[x])
        if v < 0:
            raise ValueError(f"top element {x} is not in GF({self.q})")
        return v

    @cached_property
    def coordinates(self) -> np.ndarray:
        """GF(q)-coordinates of every top element on the basis 1, alpha, ..., alpha^(n-1).

        Row ``x`` holds the base-field encodings of the coordinates of the
        top element encoded by ``x``.
        """
        q, n, top = self.q, self.n, self.top
        scaled = [
            np.array([top.mul(self.embed(c), top.exp(i)) for c in range(q)], dtype=np.int64)
            for i in range(n)
        ]
        # element value for coordinate tuple (c_0, ..., c_{n-1}), c_0 varying fastest
        values = scaled[0]
        for i in range(1, n):
            values = top.add_arrays(values[None, :], scaled[i][:, None]).reshape(-1)
        coords = np.empty((top.q, n), dtype=np.int64)
        idx = np.arange(top.q)
        for i in range(n):
            coords[values, i] = (idx // q**i) % q
        coords.setflags(write=False)
        return coords

    def from_coordinates(self, vec: Sequence[int]) -> int:
        """Top-field encoding of sum_i vec[i] * alpha^i."""
        top = self.top
        x = 0
        for i, c in enumerate(vec):
            x = top.add(x, top.mul(self.embed(int(c)), top.exp(i)))
        return x


def tower_create(base: FieldSpec, n: int) -> FieldTower:
    """Build GF(q^n) over the prime field of ``base`` and embed ``base`` in it."""
    if n < 2:
        raise ValueError("tower degree n must be at least 2")
    q = base.q
    if q**n > size_guard():
        raise SizeGuardExceeded(f"q^n = {q}^{n} exceeds the size guard {size_guard()}")
    top = field_create(base.p, base.e * n)
    qn = top.q
    exps = {t: (qn - 1) // (q**t - 1) for t in range(1, n + 1) if n % t == 0}

    # locate a root of the base modulus among the nonzero elements of GF(q) in the top field
    step = exps[1]
    root = None
    for j in range(q - 1):
        cand = top.exp(step * j)
        v = 0
        for c in reversed(base.modulus):
            v = top.add(top.mul(v, cand), c)
        if v == 0:
            root = cand
            break
    if root is None:
        raise AssertionError("base modulus has no root in the top field")
    base_to_top = np.zeros(q, dtype=np.int64)
    top_to_base = np.full(qn, -1, dtype=np.int64)
    top_to_base[0] = 0
    for k in range(q - 1):
        b = base.exp(k)
        t = top.pow(root, k)
        base_to_top[b] = t
        top_to_base[t] = b
    base_to_top.setflags(write=False)
    top_to_base.setflags(write=False)
    return FieldTower(
        base=base, top=top, n=n, subfield_exponents=exps,
        base_to_top=base_to_top, top_to_base=top_to_base,
    )


@lru_cache(maxsize=None)
def tower_for(q: int, n: int) -> FieldTower:
    """Cached tower GF(q^n)/GF(q) with default moduli on both levels."""
    p, e = prime_power(q)
    return tower_create(field_create(p, e), n)
