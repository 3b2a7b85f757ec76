"""Arithmetic in GF(p^r) for odd p, small q.

Elements are little-endian coefficient tuples of length r over Z_p.  The
modulus is pinned to the lexicographically smallest monic irreducible
polynomial (coefficient vectors compared constant-term first), and the
element order used for vertex indexing is the lexicographic rank of the
coefficient vector, so every construction downstream is reproducible.
"""
from __future__ import annotations

from functools import lru_cache


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, r) with q = p^r, p prime; raise if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            r = 0
            m = q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, r
        p += 1
    return q, 1


def _poly_divmod(num: list[int], den: list[int], p: int):
    """Division with remainder in Z_p[x]; den must be monic-normalizable."""
    num = list(num)
    dlead = den[-1]
    dinv = pow(dlead, -1, p)
    dd = len(den) - 1
    quot = [0] * max(1, len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] * dinv % p
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * dc) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quot, num


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            cand = []
            c = code
            for _ in range(d):
                cand.append(c % p)
                c //= p
            cand.append(1)
            _, rem = _poly_divmod(poly, cand, p)
            if rem == [0]:
                return False
    return True


class Field:
    """GF(p^r) with fixed modulus and fixed element enumeration order."""

    def __init__(self, p: int, r: int):
        if p == 2 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if r < 1:
            raise ValueError(f"extension degree must be >= 1, got {r}")
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = self._smallest_irreducible()
        self.zero = (0,) * r
        self.one = (1,) + (0,) * (r - 1)

    def _smallest_irreducible(self) -> tuple[int, ...]:
        p, r = self.p, self.r
        if r == 1:
            return (0, 1)  # convention: x, elements are plain residues
        for code in range(p**r):
            low = []
            c = code
            for _ in range(r):
                low.append(c % p)
                c //= p
            poly = low + [1]
            if _is_irreducible(poly, p):
                return tuple(poly)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    # -- element indexing: lexicographic rank of the coefficient vector ------

    def index(self, e: tuple[int, ...]) -> int:
        idx = 0
        for c in e:
            idx = idx * self.p + c
        return idx

    def element(self, idx: int) -> tuple[int, ...]:
        coeffs = []
        for _ in range(self.r):
            coeffs.append(idx % self.p)
            idx //= self.p
        return tuple(reversed(coeffs))

    def elements(self) -> list[tuple[int, ...]]:
        return [self.element(i) for i in range(self.q)]

    # -- arithmetic -----------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def mul(self, a, b):
        p, r = self.p, self.r
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce by the monic modulus, highest degree first
        for i in range(2 * r - 2, r - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(r):
                    prod[i - r + j] = (prod[i - r + j] - c * self.modulus[j]) % p
        return tuple(prod[:r])

    def pow(self, a, e: int):
        if e < 0:
            raise ValueError("negative exponent; use inv first")
        acc = self.one
        base = a
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero in GF(q)")
        return self.pow(a, self.q - 2)

    def mult_order(self, a) -> int:
        if a == self.zero:
            raise ValueError("zero has no multiplicative order")
        acc = a
        order = 1
        while acc != self.one:
            acc = self.mul(acc, a)
            order += 1
        return order

    # -- derived sets ----------------------------------------------------------

    def squares(self) -> set[tuple[int, ...]]:
        """Nonzero squares, computed by enumerating x^2 over all x != 0."""
        return {self.mul(e, e) for e in self.elements() if e != self.zero}

    def primitive_root(self) -> tuple[int, ...]:
        """First element in enumeration order with multiplicative order q-1."""
        for e in self.elements():
            if e == self.zero:
                continue
            if self.mult_order(e) == self.q - 1:
                return e
        raise AssertionError("no primitive root found")  # unreachable


@lru_cache(maxsize=None)
def field_make(p: int, r: int) -> Field:
    """Build GF(p^r); cached since fields recur across constructions."""
    return Field(p, r)


@lru_cache(maxsize=None)
def field_for_order(q: int) -> Field:
    p, r = factor_prime_power(q)
    return field_make(p, r)
