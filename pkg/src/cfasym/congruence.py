"""Quadratic congruences x^2 + nx + (-1)^s = 0 (mod alpha) and their expansions.

Covers root finding by residue scan, the finite set of moduli where the
length-parity conclusion can fail, the pairs among those moduli whose
expansions never reach the target anticontinuant, and the n = +-2 family
of fractions b*n^2 / (b*a*n - eps) with its three quotient patterns.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Literal, Optional

from .asymmetry import AsymmetryDecomposition, decompose
from .cf import expand, representations
from .continuants import anticontinuant
from .errors import DomainError, FoldedFormError

Condition = Literal["small_alpha", "gamma_condition", "eta_condition"]


@dataclass(frozen=True)
class CongruenceSpec:
    """The pair (n, s) defining x^2 + nx + (-1)^s = 0 (mod alpha), s in {0, 1}."""

    n: int
    s: int

    def __post_init__(self):
        if not isinstance(self.n, int):
            raise DomainError(f"n must be an integer, got {self.n!r}")
        if self.s not in (0, 1):
            raise DomainError(f"s must be 0 or 1, got {self.s!r}")

    @property
    def unit(self) -> int:
        return 1 if self.s == 0 else -1

    def negated(self) -> "CongruenceSpec":
        return CongruenceSpec(-self.n, self.s)


@dataclass(frozen=True)
class ExceptionalCertificate:
    """Which excluding condition a modulus satisfies, with its witness if any."""

    modulus: int
    condition: Condition
    witness: Optional[int] = None


@dataclass(frozen=True)
class FoldedParams:
    """Parameters (b, n, a, epsilon) of the fraction b*n^2 / (b*a*n - epsilon).

    Normalization moves gcd(a, n)^2 into b, so b need not stay square-free.
    """

    b: int
    n: int
    a: int
    epsilon: int

    def __post_init__(self):
        for name in ("b", "n", "a"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise DomainError(f"{name} must be a positive integer, got {v!r}")
        if self.epsilon not in (1, -1):
            raise DomainError(f"epsilon must be +1 or -1, got {self.epsilon!r}")

    @property
    def alpha(self) -> int:
        return self.b * self.n * self.n

    @property
    def beta(self) -> int:
        return self.b * self.a * self.n - self.epsilon


@dataclass(frozen=True)
class FoldedForm:
    """Which of the three folded quotient patterns matched.

    Pattern cores, reading the two marked end entries as (first, pivot):
      form 1: (pivot +- 2, pivot)
      form 2: (pivot + 1, x, 1, pivot)
      form 3: (pivot - 1, 1, x, pivot)
    surrounded by a symmetric outer layer.
    """

    form: int
    x: Optional[int]
    pivot: int


def _require_workable(spec: CongruenceSpec, op: str) -> None:
    if spec.n == 0:
        raise DomainError(f"{op} needs n != 0 (value 0 is the symmetric class)")
    if spec.s == 0 and abs(spec.n) == 2:
        raise DomainError(
            f"{op} excludes (n = +-2, s = 0); use the folded-family operations")


def solve_quadratic(spec: CongruenceSpec, alpha: int) -> list[int]:
    """All beta in (0, alpha) with beta^2 + n*beta + (-1)^s = 0 (mod alpha).

    Full residue scan; every root is automatically coprime to alpha.
    """
    if not isinstance(alpha, int) or alpha < 1:
        raise DomainError(f"alpha must be a positive integer, got {alpha!r}")
    n, e = spec.n, spec.unit
    return [b for b in range(1, alpha) if (b * b + n * b + e) % alpha == 0]


def _divisors(v: int) -> set[int]:
    out = set()
    for d in range(1, isqrt(v) + 1):
        if v % d == 0:
            out.add(d)
            out.add(v // d)
    return out


def exceptional_candidates(spec: CongruenceSpec) -> dict[int, tuple[ExceptionalCertificate, ...]]:
    """Moduli where the root/length-parity conclusion may fail, with certificates.

    Union of three finite conditions, for a = |n|:
      (1) alpha <= 2a;
      (2) alpha divides gamma*(gamma - a) + (-1)^s for some gamma in [1, a - 1];
      (3) alpha divides eta*(eta - 2a) + 4*(-1)^s for some eta in [1, 2a - 1].
    Rejected for (s = 0, n = +-2), where condition values can vanish.
    """
    _require_workable(spec, "exceptional_candidates")
    a = abs(spec.n)
    e = spec.unit
    certs: dict[int, list[ExceptionalCertificate]] = {}

    def add(modulus: int, condition: Condition, witness: Optional[int]) -> None:
        certs.setdefault(modulus, []).append(
            ExceptionalCertificate(modulus, condition, witness))

    for alpha in range(1, 2 * a + 1):
        add(alpha, "small_alpha", None)
    for gamma in range(1, a):
        value = gamma * (gamma - a) + e
        assert value != 0
        for alpha in _divisors(abs(value)):
            add(alpha, "gamma_condition", gamma)
    for eta in range(1, 2 * a):
        value = eta * (eta - 2 * a) + 4 * e
        assert value != 0
        for alpha in _divisors(abs(value)):
            add(alpha, "eta_condition", eta)

    return {m: tuple(certs[m]) for m in sorted(certs)}


def candidate_pairs(spec: CongruenceSpec, include_negated: bool = True) -> list[tuple[int, int]]:
    """Solved (alpha, beta) over the exceptional moduli, for n (and -n if asked)."""
    pairs = []
    for alpha in exceptional_candidates(spec):
        roots = set(solve_quadratic(spec, alpha))
        if include_negated:
            roots |= set(solve_quadratic(spec.negated(), alpha))
        pairs.extend((alpha, beta) for beta in sorted(roots))
    return pairs


def true_exceptions(spec: CongruenceSpec, include_negated: bool = True) -> list[tuple[int, int]]:
    """Solved pairs over the exceptional moduli with no expansion reaching the target.

    A pair survives when neither representation of alpha/beta has
    anticontinuant n (or -n when the negated congruence is included).
    """
    targets = {spec.n, -spec.n} if include_negated else {spec.n}
    out = []
    for alpha, beta in candidate_pairs(spec, include_negated):
        if not any(anticontinuant(q) in targets for q in representations(alpha, beta)):
            out.append((alpha, beta))
    return out


def folded_normalize(p: FoldedParams) -> FoldedParams:
    """Move gcd(a, n)^2 into b; idempotent, preserves alpha and b*a*n."""
    d = gcd(p.a, p.n)
    if d == 1:
        return p
    return FoldedParams(p.b * d * d, p.n // d, p.a // d, p.epsilon)


def _match_form(dec: AsymmetryDecomposition) -> Optional[FoldedForm]:
    if dec.c == 0 or dec.pivot is None:
        return None
    displayed = dec.pivot + (dec.c if dec.depth % 2 == 0 else -dec.c)
    core = dec.core
    if core == () and abs(dec.c) == 2:
        return FoldedForm(form=1, x=None, pivot=dec.pivot)
    if len(core) == 2 and displayed == dec.pivot + 1 and core[1] == 1:
        return FoldedForm(form=2, x=core[0], pivot=dec.pivot)
    if len(core) == 2 and displayed == dec.pivot - 1 and core[0] == 1:
        return FoldedForm(form=3, x=core[1], pivot=dec.pivot)
    return None


def folded_expand_classify(p: FoldedParams) -> tuple[tuple[int, ...], FoldedForm]:
    """Expand alpha/beta and match it against the three folded patterns.

    The selected expansion is tried first and returned when it matches; when
    the pattern only shows in the alternate representation (the selected one
    can come out symmetric), that representation is returned instead, unless
    the selected expansion is too short to carry any pattern (length <= 2,
    the collapsed case), in which case it is returned with the form matched
    on the alternate.  b = 1 must give form 1; b >= 2 must give form 2 or 3
    with x = b - 1.
    """
    if gcd(p.a, p.n) != 1:
        raise DomainError(f"params must be normalized first: gcd({p.a}, {p.n}) != 1")
    alpha, beta = p.alpha, p.beta
    if not 1 <= beta < alpha:
        raise DomainError(f"denominator {beta} outside (0, {alpha})")
    conv = expand(alpha, beta)
    seq = conv
    match = None
    for cand in representations(alpha, beta):
        match = _match_form(decompose(cand))
        if match is not None:
            if len(conv) > 2:
                seq = cand
            break
    if match is None:
        raise FoldedFormError(
            f"no folded pattern matches {alpha}/{beta} with quotients {seq}", seq)
    if p.b == 1 and match.form != 1:
        raise FoldedFormError(
            f"b = 1 requires form 1, got form {match.form} for {alpha}/{beta}", seq)
    if p.b >= 2 and (match.form == 1 or match.x != p.b - 1):
        raise FoldedFormError(
            f"b = {p.b} requires form 2 or 3 with x = {p.b - 1}, got {match} "
            f"for {alpha}/{beta}", seq)
    return seq, match
