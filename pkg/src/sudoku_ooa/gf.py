"""Exact arithmetic in GF(p**k) at desk scale.

Field elements are plain integers (canonical indices): the element with
polynomial coefficients (c0, c1, ..., c_{k-1}), constant term first, has
index sum(c_i * p**i).  Index 0 is zero and index 1 is one, so for prime
fields the index is just the residue.  All operations are exact.
"""

from __future__ import annotations

from functools import lru_cache

# Orders up to this bound get q*q lookup tables; larger fields fall back to
# per-call polynomial arithmetic.
_TABLE_LIMIT = 256


class NotPrimePower(ValueError):
    """The requested field order is not p**k for a prime p."""


class DivisionByZero(ZeroDivisionError):
    """Inversion of, or division by, the zero element."""


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise NotPrimePower(f"field order must be at least 2, got {q}")
    for p in range(2, q + 1):
        if p * p > q:
            return q, 1  # q itself is prime
        if q % p == 0:
            k = 0
            n = q
            while n % p == 0:
                n //= p
                k += 1
            if n != 1:
                raise NotPrimePower(f"{q} is not a prime power")
            return p, k
    raise NotPrimePower(f"{q} is not a prime power")


# -- polynomials over Z_p as coefficient lists, constant term first --------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(out)


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        shift = len(a) - 1 - dm
        factor = (a[-1] * inv_lead) % p
        for i, c in enumerate(m):
            a[i + shift] = (a[i + shift] - factor * c) % p
        _poly_trim(a)
    return a


def _is_irreducible(poly: list[int], p: int, k: int) -> bool:
    # Trial division by every monic polynomial of degree 1..k//2.
    for d in range(1, k // 2 + 1):
        for idx in range(p**d):
            divisor = _index_coeffs(idx, p, d) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _index_coeffs(idx: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        idx, c = divmod(idx, p)
        out.append(c)
    return out


class Field:
    """GF(p**k) acting on canonical element indices 0..q-1.

    Instances come from :func:`make_field`; two fields of the same order are
    interchangeable because the modulus choice is deterministic.  Immutable
    after construction, hence safe to share between threads.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self._mul_table: list[int] | None = None
        self._inv_table: list[int] | None = None
        if self.q <= _TABLE_LIMIT:
            q = self.q
            mul = self._mul_raw
            self._mul_table = [mul(a, b) for a in range(q) for b in range(q)]
            inv_tab = [0] * q
            for a in range(1, q):
                if inv_tab[a]:
                    continue
                b = self._inv_raw(a)
                inv_tab[a] = b
                inv_tab[b] = a
            self._inv_table = inv_tab

    def __repr__(self) -> str:
        return f"Field(q={self.q})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    # -- element <-> coefficient views --

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Coefficient vector of element a, constant term first, length k."""
        return tuple(_index_coeffs(a, self.p, self.k))

    def index(self, coeffs) -> int:
        """Canonical index of the element with the given coefficient vector."""
        idx = 0
        for c in reversed(list(coeffs)):
            idx = idx * self.p + c % self.p
        return idx

    def elements(self) -> range:
        return range(self.q)

    # -- arithmetic --

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out = 0
        base = 1
        for _ in range(self.k):
            out += ((a % p + b % p) % p) * base
            a //= p
            b //= p
            base *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        p = self.p
        out = 0
        base = 1
        for _ in range(self.k):
            out += ((-(a % p)) % p) * base
            a //= p
            base *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a * self.q + b]
        return self._mul_raw(a, b)

    def _mul_raw(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a * b) % self.p
        prod = _poly_mul(
            _index_coeffs(a, self.p, self.k), _index_coeffs(b, self.p, self.k), self.p
        )
        return self.index(_poly_mod(prod, list(self.modulus), self.p) + [0] * self.k)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self._inv_raw(a)

    def _inv_raw(self, a: int) -> int:
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = 1
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result


def arith(field: Field, op: str, x: int, y: int | None = None) -> int:
    """Dispatch a named field operation; unary ops ignore y."""
    if op in ("neg", "inv"):
        return getattr(field, op)(x)
    if op in ("add", "sub", "mul", "div"):
        if y is None:
            raise ValueError(f"{op} needs two operands")
        return getattr(field, op)(x, y)
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def make_field(q: int) -> Field:
    """Field of order q with the deterministic minimal modulus.

    For k >= 2 the modulus is the monic irreducible degree-k polynomial whose
    non-leading coefficient vector has the smallest canonical index; for prime
    q it is the polynomial x and arithmetic is plain mod p.
    """
    p, k = _factor_prime_power(q)
    if k == 1:
        return Field(p, 1, (0, 1))
    for idx in range(p**k):
        coeffs = _index_coeffs(idx, p, k)
        if _is_irreducible(coeffs + [1], p, k):
            return Field(p, k, tuple(coeffs) + (1,))
    raise NotPrimePower(f"no irreducible polynomial found for q={q}")  # pragma: no cover


def multiplicative_order(field: Field, a: int) -> int:
    if a == 0:
        raise DivisionByZero("zero has no multiplicative order")
    x = a
    n = 1
    while x != 1:
        x = field.mul(x, a)
        n += 1
    return n


def find_generator(field: Field) -> int:
    """Primitive element of smallest canonical index."""
    target = field.q - 1
    for a in range(1, field.q):
        if multiplicative_order(field, a) == target:
            return a
    raise AssertionError("every finite field has a generator")  # pragma: no cover
