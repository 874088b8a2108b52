"""Design parameters from block-graph spectra, and parametric feasibility."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from ..arith import DomainError, is_perfect_square
from ..srg import SpectralParams

FIELDS = ("b", "v", "r", "k", "lambda", "lambda1", "lambda2", "mu", "nu")


class InfeasibleError(ValueError):
    def __init__(self, report: "FeasibilityReport"):
        labels = ", ".join(c.label for c in report.failed)
        super().__init__(f"parameters are infeasible (failed: {labels})")
        self.report = report


@dataclass(frozen=True, order=True)
class DesignParams:
    """Parameters of a quasi-symmetric 2-design candidate."""

    b: int
    v: int
    r: int
    k: int
    lam: int
    lam1: int
    lam2: int

    def __post_init__(self):
        if min(self.b, self.v, self.r, self.k, self.lam, self.lam1) < 0:
            raise DomainError(f"negative design parameter in {self}")
        if self.b * self.k != self.r * self.v:
            raise DomainError(f"bk != rv for {self}")
        if self.r * (self.k - 1) != self.lam * (self.v - 1):
            raise DomainError(f"r(k-1) != lambda(v-1) for {self}")
        if not self.lam1 < self.lam2:
            raise DomainError("need lambda1 < lambda2")
        if not self.b > self.v:
            raise DomainError("a quasi-symmetric design needs b > v")

    @property
    def mu(self) -> int:
        return self.lam2 - self.lam1

    @property
    def nu(self) -> int:
        return self.r - self.lam

    def as_dict(self) -> dict[str, int]:
        return dict(zip(FIELDS, (self.b, self.v, self.r, self.k, self.lam,
                                 self.lam1, self.lam2, self.mu, self.nu)))

    def __str__(self) -> str:
        return (f"2-({self.v},{self.k},{self.lam}) b={self.b} r={self.r} "
                f"x,y=({self.lam1},{self.lam2})")


def complement(D: DesignParams) -> DesignParams:
    """Complementary design: k' = v-k, r' = b-r, lambda_i' = v-2k+lambda_i."""
    return DesignParams(
        b=D.b, v=D.v, r=D.b - D.r, k=D.v - D.k,
        lam=D.b - 2 * D.r + D.lam,
        lam1=D.v - 2 * D.k + D.lam1,
        lam2=D.v - 2 * D.k + D.lam2,
    )


def canonical(pair: tuple[DesignParams, DesignParams]) -> tuple[DesignParams, DesignParams]:
    """Order a complementary pair with the k <= v/2 member first."""
    x, y = pair
    kx, ky = 2 * x.k, 2 * y.k
    if kx < ky or (kx == ky and x.lam1 <= y.lam1):
        return x, y
    return y, x


@dataclass(frozen=True)
class Condition:
    label: str
    passed: bool
    witness: Any = None

    def as_dict(self) -> dict:
        w = self.witness
        if isinstance(w, Fraction):
            w = str(w)
        return {"label": self.label, "passed": self.passed, "witness": w}


@dataclass
class FeasibilityReport:
    query: str
    conditions: list[Condition] = field(default_factory=list)
    params: Optional[tuple[DesignParams, DesignParams]] = None

    @property
    def failed(self) -> list[Condition]:
        return [c for c in self.conditions if not c.passed]

    @property
    def feasible(self) -> bool:
        return not self.failed

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible"

    def add(self, label: str, passed: bool, witness=None) -> bool:
        self.conditions.append(Condition(label, bool(passed), witness))
        return bool(passed)


def mu_bounds(sp: SpectralParams) -> tuple[Fraction, Fraction]:
    """Closed interval for the defect from the non-negativity of lambda1."""
    f, g, rho, sigma = sp.f, sp.g, sp.rho, sp.sigma
    lo = -Fraction(f + 1, f + g + 1) * Fraction(f * rho + (g + 1) * sigma, sigma * sigma)
    hi = -Fraction(f + 1, 2 * sigma)
    return lo, hi


def mu_window(sp: SpectralParams) -> range:
    lo, hi = mu_bounds(sp)
    return range(max(1, math.ceil(lo)), math.floor(hi) + 1)


def discriminant(sp: SpectralParams, mu: int) -> Fraction:
    B = sp.f + sp.g + 1
    nu = (sp.rho - sp.sigma) * mu
    return B * (B - Fraction(4 * sp.f * nu, sp.f + 1))


def _params_from_lambda(sp: SpectralParams, mu: int, lam: Fraction):
    """Parameter set built from one root lambda; returns (params, witness)."""
    f, g, rho, sigma = sp.f, sp.g, sp.rho, sp.sigma
    B = f + g + 1
    nu = (rho - sigma) * mu
    lam1 = Fraction((f + 1) * (lam + rho * mu) + g * sigma * mu, B)
    values = {
        "b": Fraction(B), "v": Fraction(f + 1), "r": lam + nu,
        "k": lam1 - sigma * mu, "lambda": lam, "lambda1": lam1, "lambda2": lam1 + mu,
    }
    for name, x in values.items():
        if x.denominator != 1:
            return None, f"{name}={x} is not an integer"
        if x < 0:
            return None, f"{name}={x} is negative"
    ints = {name: int(x) for name, x in values.items()}
    try:
        D = DesignParams(ints["b"], ints["v"], ints["r"], ints["k"], ints["lambda"],
                         ints["lambda1"], ints["lambda2"])
    except DomainError as exc:
        return None, str(exc)
    return D, None


def feasibility(sp: SpectralParams, mu: int, query: str = "") -> FeasibilityReport:
    """Evaluate the five feasibility conditions exactly."""
    rep = FeasibilityReport(query or f"spectral {sp.rho},{sp.sigma},{sp.f},{sp.g} mu={mu}")
    if mu < 1:
        rep.add("2.3b", False, f"mu={mu} is not positive")
        return rep
    f, g, rho, sigma = sp.f, sp.g, sp.rho, sp.sigma
    B = f + g + 1
    nu = (rho - sigma) * mu

    # (a) holds by construction: SpectralParams only carries integral spectra
    rep.add("2.3a", True, "integral spectrum")
    lo, hi = mu_bounds(sp)
    rep.add("2.3b", lo <= mu <= hi, None if lo <= mu <= hi else f"{lo} <= mu <= {hi} violated")
    c_ok = (g * nu) % (f + 1) == 0
    rep.add("2.3c", c_ok, None if c_ok else f"{f + 1} does not divide {g * nu}")
    d_ok = (f * g * nu) % B == 0
    rep.add("2.3d", d_ok, None if d_ok else f"{B} does not divide {f * g * nu}")
    delta = discriminant(sp, mu)
    e_ok = is_perfect_square(delta)
    rep.add("2.3e", e_ok, None if e_ok else f"Delta={delta} is not a square")

    if not rep.feasible:
        return rep
    root = Fraction(math.isqrt(delta.numerator), math.isqrt(delta.denominator))
    s = B - 2 * nu
    built = []
    for lam in ((s - root) / 2, (s + root) / 2):
        D, why = _params_from_lambda(sp, mu, lam)
        if D is None:
            # conditions (b)-(e) are sufficient, so this would be an arithmetic bug
            raise AssertionError(f"feasible input produced bad parameters: {why}")
        built.append(D)
    rep.params = canonical((built[0], built[1]))
    return rep


def derive_params(sp: SpectralParams, mu: int) -> tuple[DesignParams, DesignParams]:
    """Both members of the complementary pair, smaller block size first."""
    rep = feasibility(sp, mu)
    if not rep.feasible:
        raise InfeasibleError(rep)
    assert rep.params is not None
    return rep.params


def spectral_from_design(D: DesignParams) -> SpectralParams:
    """Spectral parameters of the block graph forced by the design parameters."""
    mu = D.mu
    sigma_mu = D.lam1 - D.k
    if sigma_mu % mu:
        raise DomainError("k - lambda1 is not a multiple of the defect")
    sigma = sigma_mu // mu
    if D.nu % mu:
        raise DomainError("order is not a multiple of the defect")
    rho = D.nu // mu + sigma
    f = D.v - 1
    return SpectralParams(rho, sigma, f, D.b - 1 - f)
