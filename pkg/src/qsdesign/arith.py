"""Exact integer/rational arithmetic and elementary number theory.

Rationals are plain :class:`fractions.Fraction` values; they are always
reduced with a positive denominator, which is the normalization this
package relies on everywhere.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

RationalLike = Union[int, Fraction]

TRIAL_BOUND = 10**6


class DomainError(ValueError):
    """Argument outside the domain of a number-theoretic function."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ValueError:
            raise DomainError(f"not a rational: {x!r}") from None
    raise TypeError(f"not an exact rational: {x!r}")


# -- primality --------------------------------------------------------------

def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES: list[int] | None = None


def small_primes() -> list[int]:
    """Primes below ``TRIAL_BOUND``, computed once."""
    global _SMALL_PRIMES
    if _SMALL_PRIMES is None:
        _SMALL_PRIMES = _sieve(TRIAL_BOUND)
    return _SMALL_PRIMES


# deterministic below 3.317e24 (Sorenson & Webster)
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def _mr_composite_witness(a: int, d: int, s: int, n: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, 64 random rounds above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        bases: Iterable[int] = _MR_BASES
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(64)]
    return not any(_mr_composite_witness(a, d, s, n) for a in bases)


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    return len(factorize(q).factors) == 1


# -- factorization ----------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        out = self.sign
        for p, e in self.factors:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def _pollard_brent(n: int, seed: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    rng = random.Random(seed)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = math.isqrt(n)
    if r * r == n:
        _split_large(r, out)
        _split_large(r, out)
        return
    d = _pollard_brent(n, seed=n & 0xFFFF)
    _split_large(d, out)
    _split_large(n // d, out)


@lru_cache(maxsize=1 << 16)
def _factor_positive(n: int) -> tuple[tuple[int, int], ...]:
    out: dict[int, int] = {}
    rem = n
    for p in small_primes():
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            out[p] = e
    if rem > 1:
        if rem < TRIAL_BOUND * TRIAL_BOUND:
            # no factor below sqrt(rem) survived trial division
            out[rem] = out.get(rem, 0) + 1
        else:
            _split_large(rem, out)
    return tuple(sorted(out.items()))


def factorize(n: int) -> Factorization:
    """Prime factorization of a nonzero integer, primes ascending."""
    if n == 0:
        raise DomainError("cannot factor 0")
    return Factorization(1 if n > 0 else -1, _factor_positive(abs(n)))


# -- valuations and square classes ------------------------------------------

def _int_valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def valuation(x: RationalLike, p: int) -> int:
    """p-adic valuation v_p(x) of a nonzero rational."""
    x = as_rational(x)
    if x == 0:
        raise DomainError("valuation of 0 is undefined")
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def squarefree_part(n: int) -> int:
    """Square-free part of a positive integer."""
    out = 1
    for p, e in factorize(n).factors:
        if e % 2:
            out *= p
    return out


@dataclass(frozen=True)
class SquareClass:
    """An element of Q^x / (Q^x)^2: sign times a positive square-free integer."""

    sign: int
    squarefree: int

    @property
    def value(self) -> int:
        return self.sign * self.squarefree

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        g = math.gcd(self.squarefree, other.squarefree)
        return SquareClass(self.sign * other.sign,
                           (self.squarefree // g) * (other.squarefree // g))

    def __pow__(self, e: int) -> "SquareClass":
        return self if e % 2 else ONE

    def is_trivial(self) -> bool:
        return self.sign == 1 and self.squarefree == 1

    def __str__(self) -> str:
        return f"{self.value:+d}"


ONE = SquareClass(1, 1)


def square_class(x: RationalLike) -> SquareClass:
    x = as_rational(x)
    if x == 0:
        raise DomainError("0 has no square class")
    sign = 1 if x > 0 else -1
    return SquareClass(sign, squarefree_part(x.numerator * x.denominator * sign))


def square_class_of_power(base: RationalLike, exponent: int) -> SquareClass:
    """Class of base**exponent without forming the power."""
    if exponent < 0:
        raise DomainError("negative exponent")
    return square_class(base) ** exponent


def is_perfect_square(x: RationalLike) -> bool:
    x = as_rational(x)
    if x < 0:
        return False
    a, b = x.numerator, x.denominator
    return math.isqrt(a) ** 2 == a and math.isqrt(b) ** 2 == b


def exact_sqrt(x: RationalLike) -> Fraction:
    x = as_rational(x)
    if not is_perfect_square(x):
        raise DomainError(f"{x} is not a rational square")
    return Fraction(math.isqrt(x.numerator), math.isqrt(x.denominator))


# -- residue symbols ----------------------------------------------------------

def _num_times_den(u: RationalLike) -> int:
    if isinstance(u, int):
        return u
    u = as_rational(u)
    return u.numerator * u.denominator


def legendre(u: RationalLike, p: int) -> int:
    """Legendre symbol (u/p) for an odd prime p not dividing u.

    A rational u = a/b is evaluated as (ab/p), which has the same value.
    """
    n = _num_times_den(u)
    if p == 2 or n % p == 0:
        raise DomainError(f"legendre symbol needs odd p not dividing u (u={u}, p={p})")
    return 1 if pow(n % p, (p - 1) // 2, p) == 1 else -1


def two_adic_chars(u: RationalLike) -> tuple[int, int]:
    """(epsilon, omega) of a 2-adic unit.

    epsilon(u) = 0 iff u = 1 mod 4; omega(u) = 0 iff u = +-1 mod 8.
    """
    n = _num_times_den(u)
    if n % 2 == 0:
        raise DomainError(f"{u} is not a 2-adic unit")
    eps = 0 if n % 4 == 1 else 1
    omega = 0 if n % 8 in (1, 7) else 1
    return eps, omega


def is_sum_two_squares(n: int) -> bool:
    if n < 1:
        raise DomainError("n must be positive")
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3)


def divisors(n: int) -> list[int]:
    """Positive divisors of n >= 1, ascending."""
    if n < 1:
        raise DomainError("n must be positive")
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
