"""Machine-readable verification records and JSON helpers."""

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import Poly, render

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def rat_str(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def poly_json(p):
    return {"degree": p.degree, "coeffs": [rat_str(c) for c in p.coeffs]}


@dataclass
class VerifyReport:
    theorem: int
    k: int
    j: int
    factor: Fraction = Fraction(0)
    status: str = SKIPPED
    reason: str = ""
    lhs: Poly = None
    rhs: Poly = None
    witness: Poly = None
    instance: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == PASS

    def to_json(self, verbose=False):
        out = {
            "theorem": self.theorem,
            "k": self.k,
            "j": self.j,
            "factor": rat_str(self.factor),
            "status": self.status,
            "reason": self.reason,
        }
        if verbose:
            if self.instance:
                out["instance"] = self.instance
            for name in ("lhs", "rhs", "witness"):
                value = getattr(self, name)
                if value is not None:
                    out[name] = poly_json(value)
        return out


def compare(theorem, k, j, lhs, rhs, factor, instance=None):
    """Report for the exact identity ``lhs == factor * rhs``."""
    witness = lhs - rhs * factor
    ok = witness.is_zero()
    return VerifyReport(
        theorem=theorem, k=k, j=j, factor=Fraction(factor),
        status=PASS if ok else FAIL,
        reason="" if ok else "NONZERO_DIFFERENCE",
        lhs=lhs, rhs=rhs, witness=witness,
        instance=instance or {},
    )


def skipped(theorem, k, j, reason, instance=None):
    return VerifyReport(theorem=theorem, k=k, j=j, status=SKIPPED, reason=reason,
                        instance=instance or {})


def describe(f, g, seed=None):
    out = {"f": render(f), "g": render(g)}
    if seed is not None:
        out["seed"] = seed
    return out
