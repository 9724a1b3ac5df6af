"""The four generalized Arnold-Viro inequalities and the Petrovskii bounds."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .qform import InertiaTriple, RationalSymmetricForm, format_rational, inertia
from .scheme import CurveScheme, assemble_partition_form, chi_xr, total_milnor

__all__ = ["Verdict", "InequalityReport", "check_theorem_a", "check_petrovskii", "b2_plus_Y", "b2_minus_Y"]


class Verdict(str, Enum):
    CONSISTENT = "CONSISTENT"
    PROHIBITED = "PROHIBITED"


def b2_plus_Y(k: int, mu_plus: int) -> Fraction:
    return Fraction((k - 1) * (k - 2), 2) - Fraction(mu_plus, 2)


def b2_minus_Y(k: int, chi_XR: int, mu_minus: int) -> Fraction:
    return Fraction(3 * k * (k - 1), 2) + Fraction(chi_XR, 2) - Fraction(mu_minus, 2)


STATEMENTS = (
    "sigma+ <= (k-1)(k-2)/2 - mu+/2",
    "sigma+ + sigma0 <= (k-1)(k-2)/2 - mu+/2 + (r - nu)",
    "sigma- <= 3k(k-1)/2 + chi(X_R)/2 - mu-/2",
    "sigma- + sigma0 <= 3k(k-1)/2 + chi(X_R)/2 - mu-/2 + (r - nu)",
)


@dataclass(frozen=True)
class InequalityReport:
    sigma: InertiaTriple
    lhs: tuple[int, int, int, int]
    rhs: tuple[Fraction, Fraction, Fraction, Fraction]
    holds: tuple[bool, bool, bool, bool]
    b2_plus_Y: Fraction
    b2_minus_Y: Fraction
    k: int
    r: int
    nu: int
    mu_plus: int
    mu_minus: int
    chi_XR: int
    form: RationalSymmetricForm
    petrovskii_lower_holds: bool | None = None
    petrovskii_upper_holds: bool | None = None

    def __post_init__(self):
        # the first and third right-hand sides are the b2 values of the quotient
        assert self.rhs[0] == self.b2_plus_Y and self.rhs[2] == self.b2_minus_Y

    @property
    def verdict(self) -> Verdict:
        return Verdict.CONSISTENT if all(self.holds) else Verdict.PROHIBITED

    def to_json(self) -> dict:
        petro = None
        if self.petrovskii_lower_holds is not None:
            petro = {"lower_holds": self.petrovskii_lower_holds, "upper_holds": self.petrovskii_upper_holds}
        return {
            "verdict": self.verdict.value,
            "degree": 2 * self.k,
            "k": self.k,
            "r": self.r,
            "nu": self.nu,
            "sigma": {
                "plus": self.sigma.sigma_plus,
                "minus": self.sigma.sigma_minus,
                "zero": self.sigma.sigma_zero,
            },
            "mu_plus": self.mu_plus,
            "mu_minus": self.mu_minus,
            "chi_XR": self.chi_XR,
            "b2_plus_Y": format_rational(self.b2_plus_Y),
            "b2_minus_Y": format_rational(self.b2_minus_Y),
            "inequalities": [
                {
                    "index": i + 1,
                    "statement": STATEMENTS[i],
                    "lhs": self.lhs[i],
                    "rhs": format_rational(self.rhs[i]),
                    "holds": self.holds[i],
                }
                for i in range(4)
            ],
            "petrovskii": petro,
            "partition_form": self.form.to_json(),
        }


def check_petrovskii(chi_W: int, k: int) -> tuple[bool, bool]:
    """(lower, upper): -3k(k-1)/2 <= chi(W) <= 3k(k-1)/2 + 1."""
    bound = Fraction(3 * k * (k - 1), 2)
    return (chi_W >= -bound, chi_W <= bound + 1)


def check_theorem_a(s: CurveScheme, jobs: int = 1) -> InequalityReport:
    q = assemble_partition_form(s, jobs=jobs)
    sig = inertia(q)
    mu_plus, mu_minus = total_milnor(s)
    chi = chi_xr(s)
    bp = b2_plus_Y(s.k, mu_plus)
    bm = b2_minus_Y(s.k, chi, mu_minus)
    slack = s.r - s.nu
    lhs = (
        sig.sigma_plus,
        sig.sigma_plus + sig.sigma_zero,
        sig.sigma_minus,
        sig.sigma_minus + sig.sigma_zero,
    )
    rhs = (bp, bp + slack, bm, bm + slack)
    holds = tuple(a <= b for a, b in zip(lhs, rhs))

    lower = upper = None
    if not s.singular_points:
        chi_w = s.chi_W
        if chi_w is None and chi % 2 == 0:
            chi_w = chi // 2
        if chi_w is not None:
            lower, upper = check_petrovskii(chi_w, s.k)
    return InequalityReport(
        sigma=sig,
        lhs=lhs,
        rhs=rhs,
        holds=holds,
        b2_plus_Y=bp,
        b2_minus_Y=bm,
        k=s.k,
        r=s.r,
        nu=s.nu,
        mu_plus=mu_plus,
        mu_minus=mu_minus,
        chi_XR=chi,
        form=q,
        petrovskii_lower_holds=lower,
        petrovskii_upper_holds=upper,
    )
