"""Hilbert symbols over Q_p and the real place."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Union

from .arith import (
    DomainError,
    RationalLike,
    as_rational,
    factorize,
    is_prime,
    legendre,
    square_class,
    two_adic_chars,
)


@dataclass(frozen=True)
class Place:
    """A prime place, or the real place when ``prime`` is None."""

    prime: Optional[int] = None

    def __post_init__(self):
        if self.prime is not None and not is_prime(self.prime):
            raise DomainError(f"{self.prime} is not prime")

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def __str__(self) -> str:
        return "inf" if self.prime is None else str(self.prime)


REAL = Place(None)


def _split(x, p: int) -> tuple[int, int]:
    """Write x = p^alpha * u; return (alpha, num*den of u) as integers."""
    x = as_rational(x)
    if x == 0:
        raise DomainError("valuation of 0 is undefined")
    num, den = x.numerator, x.denominator
    alpha = 0
    while num % p == 0:
        num //= p
        alpha += 1
    while den % p == 0:
        den //= p
        alpha -= 1
    return alpha, num * den


def local_data(x: RationalLike, p: int) -> tuple[int, int, int, int]:
    """Precomputed (alpha mod 2, unit residue data) for repeated symbol calls.

    For odd p the last three slots are (legendre(u), 0, 0); for p = 2 they
    are (0, eps(u), omega(u)).
    """
    alpha, u = _split(x, p)
    if p == 2:
        eps, omega = two_adic_chars(u)
        return alpha & 1, 0, eps, omega
    return alpha & 1, legendre(u, p), 0, 0


def symbol_from_local(da: tuple, db: tuple, p: int) -> int:
    a_alpha, a_leg, a_eps, a_om = da
    b_alpha, b_leg, b_eps, b_om = db
    if p == 2:
        e = a_eps * b_eps + a_alpha * b_om + b_alpha * a_om
        return -1 if e & 1 else 1
    out = 1
    if a_alpha and b_alpha and p % 4 == 3:
        out = -out
    if b_alpha and a_leg == -1:
        out = -out
    if a_alpha and b_leg == -1:
        out = -out
    return out


@lru_cache(maxsize=1024)
def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def hilbert_symbol(a: RationalLike, b: RationalLike, p: int) -> int:
    """(a, b)_p for nonzero rationals a, b and a prime p."""
    a, b = as_rational(a), as_rational(b)
    if a == 0 or b == 0:
        raise DomainError("Hilbert symbol needs nonzero arguments")
    _check_prime(p)
    return symbol_from_local(local_data(a, p), local_data(b, p), p)


def real_symbol(a: RationalLike, b: RationalLike) -> int:
    a, b = as_rational(a), as_rational(b)
    if a == 0 or b == 0:
        raise DomainError("Hilbert symbol needs nonzero arguments")
    return -1 if (a < 0 and b < 0) else 1


def symbol_at(a: RationalLike, b: RationalLike, place: Union[Place, int]) -> int:
    if isinstance(place, Place):
        return real_symbol(a, b) if place.is_real else hilbert_symbol(a, b, place.prime)
    return hilbert_symbol(a, b, place)


def relevant_primes(values: Iterable[RationalLike]) -> list[int]:
    """2 together with every odd prime dividing some square-free part."""
    out = {2}
    for x in values:
        sc = square_class(x)
        out.update(factorize(sc.squarefree).primes())
    return sorted(out)


@dataclass(frozen=True)
class Solvability:
    solvable: bool
    witness: Optional[int] = None
    failing: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.solvable


def legendre_eq_solvable(a: RationalLike, b: RationalLike) -> Solvability:
    """Does a x^2 + b y^2 = z^2 have a nontrivial rational solution?"""
    # a real obstruction always shows up at some finite prime (product formula)
    bad = tuple(p for p in relevant_primes([a, b]) if hilbert_symbol(a, b, p) == -1)
    if bad:
        return Solvability(False, bad[0], bad)
    return Solvability(True)


def sum_two_squares_via_hilbert(n: int) -> bool:
    if n < 1:
        raise DomainError("n must be positive")
    return all(hilbert_symbol(-1, n, p) == 1 for p in relevant_primes([-1, n]))
