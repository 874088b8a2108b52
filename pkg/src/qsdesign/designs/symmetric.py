"""Classical nonexistence tests for symmetric 2-designs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..arith import DomainError, is_perfect_square
from ..hilbert import legendre_eq_solvable

PASS, REJECT, NOT_APPLICABLE = "pass", "reject", "not-applicable"


@dataclass(frozen=True)
class Verdict:
    status: str
    rule: str
    witness: Optional[object] = None
    failing_primes: tuple[int, ...] = ()

    @property
    def rejected(self) -> bool:
        return self.status == REJECT

    def __str__(self) -> str:
        if self.failing_primes:
            tail = f" (fails at p in {list(self.failing_primes)})"
        elif self.witness is not None:
            tail = f" (witness {self.witness})"
        else:
            tail = ""
        return f"{self.status}: {self.rule}{tail}"


def schutzenberger(v: int, nu: int) -> Verdict:
    """Even v forces the order to be a perfect square."""
    rule = "Schutzenberger: order must be a square when v is even"
    if v % 2:
        return Verdict(NOT_APPLICABLE, rule)
    if is_perfect_square(nu):
        return Verdict(PASS, rule)
    return Verdict(REJECT, rule, f"nu={nu} is not a square")


def chowla_ryser(v: int, lam: int, nu: int) -> Verdict:
    """Odd v: nu x^2 + (-1)^((v-1)/2) lambda y^2 = z^2 must be solvable.

    The witness is the least odd failing prime: by the product formula the
    2-adic symbol is determined by the odd primes and the real place.
    """
    rule = "Shrikhande-Chowla-Ryser"
    if v % 2 == 0:
        return Verdict(NOT_APPLICABLE, rule)
    sign = -1 if ((v - 1) // 2) % 2 else 1
    res = legendre_eq_solvable(nu, sign * lam)
    if res:
        return Verdict(PASS, rule)
    odd = [p for p in res.failing if p != 2]
    return Verdict(REJECT, rule, odd[0] if odd else res.witness, res.failing)


def symmetric_test(v: int, k: int, lam: int) -> Verdict:
    """Dispatch on the parity of v for a symmetric 2-(v, k, lambda) design."""
    if not (0 < k < v) or lam < 1 or k * (k - 1) != lam * (v - 1):
        raise DomainError(f"(v,k,lambda)=({v},{k},{lam}) violates k(k-1) = lambda(v-1)")
    nu = k - lam
    if v % 2 == 0:
        return schutzenberger(v, nu)
    return chowla_ryser(v, lam, nu)
