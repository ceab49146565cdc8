"""Arithmetic in GF(p^m) for prime p.

Elements are encoded as integers ("codes"): the coefficient vector
``(c_0, ..., c_{m-1})`` of the polynomial-basis representation maps to
``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``.  The prime subfield is therefore
the set of codes ``0 .. p-1``.  Polynomial and matrix code in this package
works on codes directly; :class:`FieldElement` wraps a code for callers who
want operator syntax.
"""

from __future__ import annotations

import functools
import re
from typing import Iterable, Sequence

import numpy as np

from .errors import DivisionByZero, MixedFields, NonPrimeBase, ParseError, SizeExceeded

MAX_FIELD_SIZE = 2**20
# q x q lookup tables are built below this size
TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- dense polynomials over GF(p), coefficient lists low -> high ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    r = list(a)
    _trim(r)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        f = (r[-1] * inv_lead) % p
        for k, bk in enumerate(b):
            r[shift + k] = (r[shift + k] - f * bk) % p
        _trim(r)
    return r


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial factorization of a monic polynomial over GF(p)."""
    deg = len(coeffs) - 1
    if deg <= 1:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for low in range(p**d):
            divisor = [(low // p**k) % p for k in range(d)] + [1]
            if not _gfp_mod(coeffs, divisor, p):
                return False
    return True


def lowest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Least monic irreducible of degree m, lower coefficients read as a base-p counter."""
    if m == 1:
        return (0, 1)
    for low in range(p**m):
        cand = [(low // p**k) % p for k in range(m)] + [1]
        if cand[0] == 0:
            continue
        if is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldSpec:
    """The finite field GF(p^m) with an explicit irreducible modulus.

    Instances are immutable; use :func:`make_field` to obtain one.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise NonPrimeBase(f"base {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if p**m > MAX_FIELD_SIZE:
            raise SizeExceeded(f"field size guard: {p}^{m} > {MAX_FIELD_SIZE}")
        if modulus is None:
            modulus = lowest_irreducible(p, m)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1 or not is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is not monic irreducible of degree {m}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        self._build_tables()

    # -- construction -----------------------------------------------------

    def _digits(self, code: int) -> list[int]:
        p = self.p
        return [(code // p**k) % p for k in range(self.m)]

    def _undigits(self, digits: Iterable[int]) -> int:
        out = 0
        for k, d in enumerate(digits):
            out += d * self.p**k
        return out

    def _slow_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self._undigits(_gfp_mod(prod, self.modulus, p) if len(prod) > m else prod)

    def _build_tables(self) -> None:
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64) if q > 1 else np.zeros(0, dtype=np.int64)
        for g in range(2 if q > 2 else 1, q):
            x, period = 1, 0
            while True:
                exp[period] = x
                x = self._slow_mul(x, g)
                period += 1
                if x == 1 or period >= q - 1:
                    break
            if x == 1 and period == q - 1:
                self.generator = g
                break
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()
        if self.p != 2 or q <= TABLE_LIMIT:
            codes = np.arange(q)
            digits = np.stack([(codes // self.p**k) % self.p for k in range(self.m)])
            self._neg_t = ((-digits) % self.p * (self.p ** np.arange(self.m))[:, None]).sum(axis=0)
        else:
            self._neg_t = np.arange(q)
        self._inv_t = np.zeros(q, dtype=np.int64)
        self._inv_t[1:] = exp[(-log[1:]) % (q - 1)]
        if q <= TABLE_LIMIT:
            a = np.arange(q)[:, None]
            b = np.arange(q)[None, :]
            self._add_t = self._vadd_digits(a, b) if self.p != 2 else a ^ b
            self._mul_t = self._vmul_log(a, b)
            self._add_list = self._add_t.tolist()
            self._mul_list = self._mul_t.tolist()
        else:
            self._add_t = self._mul_t = None
            self._add_list = self._mul_list = None
        self._neg_list = self._neg_t.tolist()
        self._inv_list = self._inv_t.tolist()

    # -- scalar arithmetic on codes -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_list is not None:
            return self._add_list[a][b]
        return int(self._vadd_digits(np.asarray(a), np.asarray(b)))

    def neg(self, a: int) -> int:
        return self._neg_list[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_list[b])

    def mul(self, a: int, b: int) -> int:
        if self._mul_list is not None:
            return self._mul_list[a][b]
        if a == 0 or b == 0:
            return 0
        return self._exp_list[(self._log_list[a] + self._log_list[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._inv_list[a]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 0
        return self._exp_list[(self._log_list[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Image of an integer in the prime subfield."""
        return n % self.p

    def in_prime_field(self, a: int) -> bool:
        return 0 <= a < self.p

    # -- vectorised arithmetic on arrays of codes -------------------------

    def _vadd_digits(self, a, b):
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for k in range(self.m):
            pk = p**k
            out += (((a // pk) % p + (b // pk) % p) % p) * pk
        return out

    def _vmul_log(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la = self._log[a]
        lb = self._log[b]
        out = self._exp[(la + lb) % (self.q - 1)] if self.q > 1 else np.zeros_like(la)
        return np.where((a == 0) | (b == 0), 0, out)

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self._add_t is not None:
            return self._add_t[a, b]
        return self._vadd_digits(a, b)

    def vneg(self, a):
        return self._neg_t[np.asarray(a, dtype=np.int64)]

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        if self._mul_t is not None:
            return self._mul_t[np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)]
        return self._vmul_log(a, b)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self._inv_t[a]

    def vpow(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        out = self._exp[(self._log[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    # -- elements -------------------------------------------------------

    def element(self, value: int | Sequence[int]) -> "FieldElement":
        if isinstance(value, (int, np.integer)):
            code = int(value)
            if not 0 <= code < self.q:
                raise ValueError(f"code {code} outside GF({self.q})")
        else:
            coeffs = [int(c) % self.p for c in value]
            if len(coeffs) > self.m:
                raise ValueError("coefficient vector longer than extension degree")
            code = self._undigits(coeffs)
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def enumerate(self) -> list["FieldElement"]:
        """All q elements in base-p counting order of their coefficients."""
        return [FieldElement(self, c) for c in range(self.q)]

    def coeffs(self, code: int) -> tuple[int, ...]:
        return tuple(self._digits(code))

    def describe(self) -> str:
        return f"{self.p}^{self.m}"

    def modulus_str(self) -> str:
        terms = []
        for e in range(self.m, -1, -1):
            c = self.modulus[e]
            if not c:
                continue
            mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            coef = "" if c == 1 and mono else str(c)
            terms.append(coef + mono)
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))


class FieldElement:
    __slots__ = ("owner", "value")

    def __init__(self, owner: FieldSpec, value: int):
        self.owner = owner
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.owner.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.owner != self.owner:
                raise MixedFields(f"{self.owner} vs {other.owner}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.owner.from_int(int(other))
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.owner, self.owner.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.owner, self.owner.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.owner, self.owner.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.owner, self.owner.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.owner, self.owner.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.owner, self.owner.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.owner, self.owner.inv(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.owner == other.owner and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == self.owner.from_int(int(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.owner.q, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.owner!r}({self.value})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FieldSpec:
    """Build GF(p^m) with the lexicographically least monic irreducible modulus."""
    if not is_prime(p):
        raise NonPrimeBase(f"base {p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > MAX_FIELD_SIZE:
        raise SizeExceeded(f"field size guard: {p}^{m} > {MAX_FIELD_SIZE}")
    return FieldSpec(p, m)


def parse_field(text: str) -> FieldSpec:
    """Parse ``"p^m"`` (or a bare prime ``"p"``)."""
    mt = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*", text)
    if not mt:
        raise ParseError(f"bad field description {text!r}; expected p^m")
    p = int(mt.group(1))
    m = int(mt.group(2)) if mt.group(2) else 1
    return make_field(p, m)


def _code(field: FieldSpec, value) -> int:
    if isinstance(value, FieldElement):
        if value.owner != field:
            raise MixedFields(f"{value.owner} vs {field}")
        return value.value
    return int(value)


def eval_univariate(coeffs: Sequence, x: FieldElement | int, field: FieldSpec | None = None) -> FieldElement:
    """Horner evaluation of ``sum coeffs[k] X^k`` at x."""
    if field is None:
        if isinstance(x, FieldElement):
            field = x.owner
        else:
            raise ValueError("field required when x is a plain code")
    xv = _code(field, x)
    acc = 0
    for c in reversed(list(coeffs)):
        acc = field.add(field.mul(acc, xv), _code(field, c))
    return FieldElement(field, acc)
