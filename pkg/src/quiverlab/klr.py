"""Decision procedures for induction products of simple modules.

Every test here reduces a module-category question about the induction
product L(mu) o L(nu) to exact quiver-side computations:

* ``is_support_pair``: (mu, nu) is a support pair when no middle term
  strictly below the split class realizes (mu, nu) as a component label
  of its Grassmannian (membership in ext_ger presupposes realization,
  so only members of ext_set need scanning).
* ``simplicity_necessary``: a failed support-pair test means the
  product cannot be simple; the verdict carries the full hom-count
  table so a failure is explainable, not just boolean.  Passing is only
  ever reported as "passes_necessary_test" — the converse is not
  claimed.
* ``rigid_simplicity``: for rigid classes the test is exact — the
  product is simple iff both extension groups vanish.
* ``socle_prediction``: predicts the socle class mu*nu when the
  defining hypothesis ((mu, nu) in ext_ger(mu*nu)) holds, and abstains
  otherwise.
* ``length_two_report``: when ext_dim(mu, nu) = 1 the product has
  exactly the two factors mu*nu (socle) and mu (+) nu (head).
* ``head_socle_bounds``: interval bounds for head and socle classes in
  the degeneration order (the head interval is anchored at nu*mu, the
  reversed product).
* ``semicuspidal_pairs``: proper pairs whose generic extension is a
  given root class, with all parts of mu strictly below and all parts
  of nu strictly above that root in the enumeration order.
* ``degree_report``: per middle term, the bookkeeping d, e, the degree
  bound 2e + d, genericity flags, and on the split row the pairing
  exponent epsilon from the repetition-quiver calculus.

Grading shifts (powers of q on composition factors) are uniformly out
of scope; statements are about ungraded classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .extensions import d_lambda, degree_bound, e_lambda, ext_set, generic_ext
from .grassmannian import ext_ger, generic_pairs
from .homs import ext_dim, hom_dim
from .order import interval, is_rigid
from .quiver import (
    KostantPartition,
    PartitionError,
    RootTable,
    kp_enumerate,
    kp_format,
    kp_single,
)
from .repetition import build_repetition, epsilon, v_lambda, w_gamma

__all__ = [
    "CANNOT_BE_SIMPLE",
    "PASSES_NECESSARY_TEST",
    "DegreeReport",
    "DegreeRow",
    "HeadSocleBounds",
    "InequalityRow",
    "LengthTwoReport",
    "SimplicityVerdict",
    "SoclePrediction",
    "SupportPairResult",
    "degree_report",
    "head_socle_bounds",
    "is_support_pair",
    "length_two_report",
    "rigid_simplicity",
    "semicuspidal_pairs",
    "simplicity_necessary",
    "socle_prediction",
]

CANNOT_BE_SIMPLE = "cannot_be_simple"
PASSES_NECESSARY_TEST = "passes_necessary_test"


@dataclass(frozen=True)
class SupportPairResult:
    ok: bool
    witness: KostantPartition | None

    def __bool__(self) -> bool:
        return self.ok


def is_support_pair(
    mu: KostantPartition,
    nu: KostantPartition,
    *,
    fields: Sequence[int] = (2, 3),
    cap: int = linalg.DEFAULT_CAP,
) -> SupportPairResult:
    """True iff no strictly-smaller middle term has (mu, nu) among the
    component labels of its Grassmannian; on failure the first offending
    middle term is returned as the witness."""
    split = mu + nu
    alpha, beta = mu.total, nu.total
    classes = ext_set(mu, nu, fields=fields, cap=cap).classes
    for lam in sorted(classes - {split}, key=lambda x: x.parts):
        if (mu, nu) in ext_ger(lam, alpha, beta, fields=fields, cap=cap):
            return SupportPairResult(False, lam)
    return SupportPairResult(True, None)


@dataclass(frozen=True)
class InequalityRow:
    """Hom counts entering the twin strictness test for one nontrivial
    middle term."""

    lam: KostantPartition
    hom_nu_split: int
    hom_nu_lam: int
    hom_mu_split: int
    hom_mu_lam: int

    @property
    def nu_strict(self) -> bool:
        return self.hom_nu_split > self.hom_nu_lam

    @property
    def mu_strict(self) -> bool:
        return self.hom_mu_split > self.hom_mu_lam


@dataclass(frozen=True)
class SimplicityVerdict:
    mu: KostantPartition
    nu: KostantPartition
    verdict: str
    witness: KostantPartition | None
    rows: tuple[InequalityRow, ...]

    def to_json_dict(self) -> dict:
        return {
            "mu": kp_format(self.mu),
            "nu": kp_format(self.nu),
            "verdict": self.verdict,
            "witness": kp_format(self.witness) if self.witness else None,
            "inequalities": [
                {
                    "lambda": kp_format(r.lam),
                    "hom_nu_split": r.hom_nu_split,
                    "hom_nu_lambda": r.hom_nu_lam,
                    "hom_mu_split": r.hom_mu_split,
                    "hom_mu_lambda": r.hom_mu_lam,
                }
                for r in self.rows
            ],
        }


def simplicity_necessary(
    mu: KostantPartition,
    nu: KostantPartition,
    *,
    fields: Sequence[int] = (2, 3),
    cap: int = linalg.DEFAULT_CAP,
) -> SimplicityVerdict:
    """Necessary condition: if the product were simple, (mu, nu) would
    be a support pair.  The verdict never claims sufficiency."""
    split = mu + nu
    support = is_support_pair(mu, nu, fields=fields, cap=cap)
    classes = ext_set(mu, nu, fields=fields, cap=cap).classes
    rows = tuple(
        InequalityRow(
            lam,
            hom_dim(nu, split),
            hom_dim(nu, lam),
            hom_dim(mu, split),
            hom_dim(mu, lam),
        )
        for lam in sorted(classes - {split}, key=lambda x: x.parts)
    )
    verdict = PASSES_NECESSARY_TEST if support.ok else CANNOT_BE_SIMPLE
    return SimplicityVerdict(mu, nu, verdict, support.witness, rows)


def rigid_simplicity(mu: KostantPartition, nu: KostantPartition) -> bool:
    """For rigid classes the product is simple iff both extension
    spaces vanish (equivalently, the direct sum is rigid)."""
    if not (is_rigid(mu) and is_rigid(nu)):
        raise PartitionError("rigid_simplicity requires both classes rigid")
    return ext_dim(mu, nu) == 0 and ext_dim(nu, mu) == 0


@dataclass(frozen=True)
class SoclePrediction:
    mu: KostantPartition
    nu: KostantPartition
    generic_product: KostantPartition
    predicted: KostantPartition | None

    @property
    def abstained(self) -> bool:
        return self.predicted is None

    def to_json_dict(self) -> dict:
        return {
            "mu": kp_format(self.mu),
            "nu": kp_format(self.nu),
            "generic_product": kp_format(self.generic_product),
            "predicted": kp_format(self.predicted) if self.predicted else None,
            "abstained": self.abstained,
        }


def socle_prediction(
    mu: KostantPartition,
    nu: KostantPartition,
    *,
    fields: Sequence[int] = (2, 3),
    cap: int = linalg.DEFAULT_CAP,
) -> SoclePrediction:
    """Predict the socle class mu*nu when (mu, nu) labels a component
    of the Grassmannian of mu*nu; abstain when that hypothesis fails."""
    gen = generic_ext(mu, nu, fields=fields, cap=cap)
    components = ext_ger(gen, mu.total, nu.total, fields=fields, cap=cap)
    predicted = gen if (mu, nu) in components else None
    return SoclePrediction(mu, nu, gen, predicted)


@dataclass(frozen=True)
class LengthTwoReport:
    socle: KostantPartition
    head: KostantPartition

    @property
    def factors(self) -> tuple[KostantPartition, KostantPartition]:
        return (self.socle, self.head)


def length_two_report(
    mu: KostantPartition,
    nu: KostantPartition,
    *,
    fields: Sequence[int] = (2, 3),
    cap: int = linalg.DEFAULT_CAP,
) -> LengthTwoReport:
    """When ext_dim(mu, nu) = 1 the product has length two: socle
    mu*nu, head mu (+) nu."""
    if ext_dim(mu, nu) != 1:
        raise PartitionError(
            f"length-two decomposition needs ext_dim(mu, nu) = 1, "
            f"got {ext_dim(mu, nu)}"
        )
    return LengthTwoReport(generic_ext(mu, nu, fields=fields, cap=cap), mu + nu)


@dataclass(frozen=True)
class HeadSocleBounds:
    head_interval: frozenset[KostantPartition]
    socle_interval: frozenset[KostantPartition]


def head_socle_bounds(
    mu: KostantPartition,
    nu: KostantPartition,
    *,
    fields: Sequence[int] = (2, 3),
    cap: int = linalg.DEFAULT_CAP,
) -> HeadSocleBounds:
    """Head class lies between nu*mu and the split class, socle class
    between mu*nu and the split class; both returned as explicit sets."""
    split = mu + nu
    head_low = generic_ext(nu, mu, fields=fields, cap=cap)
    socle_low = generic_ext(mu, nu, fields=fields, cap=cap)
    return HeadSocleBounds(
        frozenset(interval(head_low, split)),
        frozenset(interval(socle_low, split)),
    )


def semicuspidal_pairs(
    table: RootTable,
    alpha_root: Sequence[int],
    *,
    fields: Sequence[int] = (2, 3),
    cap: int = linalg.DEFAULT_CAP,
) -> frozenset[tuple[KostantPartition, KostantPartition]]:
    """Proper pairs (mu, nu) with generic extension the class of the
    given root, all parts of mu strictly earlier and all parts of nu
    strictly later than that root in the enumeration order."""
    root = tuple(alpha_root)
    a_idx = table.index_of(root)
    target = kp_single(table, a_idx)
    out = set()
    rank = table.quiver.rank
    for split_vec in itertools.product(*(range(c + 1) for c in root)):
        gamma_mu = tuple(split_vec)
        gamma_nu = tuple(root[i] - gamma_mu[i] for i in range(rank))
        if sum(gamma_mu) == 0 or sum(gamma_nu) == 0:
            continue
        mus = [
            m
            for m in kp_enumerate(table, gamma_mu)
            if all(idx < a_idx for idx in m.parts)
        ]
        nus = [
            n
            for n in kp_enumerate(table, gamma_nu)
            if all(idx > a_idx for idx in n.parts)
        ]
        for m in mus:
            for n in nus:
                if generic_ext(m, n, fields=fields, cap=cap) == target:
                    out.add((m, n))
    return frozenset(out)


@dataclass(frozen=True)
class DegreeRow:
    lam: KostantPartition
    d: int
    e: int
    bound: int
    is_generic_pair: bool
    in_ext_ger: bool
    eps: int | None

    def to_json_dict(self) -> dict:
        return {
            "lambda": kp_format(self.lam),
            "d": self.d,
            "e": self.e,
            "bound": self.bound,
            "generic_pair": self.is_generic_pair,
            "ext_ger": self.in_ext_ger,
            "epsilon": self.eps,
        }


@dataclass(frozen=True)
class DegreeReport:
    mu: KostantPartition
    nu: KostantPartition
    rows: tuple[DegreeRow, ...]

    def row_for(self, lam: KostantPartition) -> DegreeRow:
        for row in self.rows:
            if row.lam == lam:
                return row
        raise KeyError(kp_format(lam))

    def to_json_dict(self) -> dict:
        return {
            "mu": kp_format(self.mu),
            "nu": kp_format(self.nu),
            "rows": [r.to_json_dict() for r in self.rows],
        }


def degree_report(
    mu: KostantPartition,
    nu: KostantPartition,
    *,
    fields: Sequence[int] = (2, 3),
    cap: int = linalg.DEFAULT_CAP,
) -> DegreeReport:
    """One row per middle term: d, e, the bound 2e + d, whether
    (mu, nu) is a generic pair / component label for that term, and on
    the split row the pairing exponent epsilon."""
    split = mu + nu
    alpha, beta = mu.total, nu.total
    classes = ext_set(mu, nu, fields=fields, cap=cap).classes
    quiver = mu.table.quiver
    rq = build_repetition(quiver)
    eps_split = epsilon(
        rq,
        v_lambda(rq, mu),
        w_gamma(rq, alpha),
        v_lambda(rq, nu),
        w_gamma(rq, beta),
    )
    rows = []
    for lam in sorted(classes, key=lambda x: x.parts):
        gp = generic_pairs(lam, alpha, beta, fields=fields, cap=cap)
        eg = ext_ger(lam, alpha, beta, fields=fields, cap=cap)
        rows.append(
            DegreeRow(
                lam,
                d_lambda(lam, mu, nu),
                e_lambda(lam, mu, nu, fields=fields, cap=cap),
                degree_bound(lam, mu, nu, fields=fields, cap=cap),
                (mu, nu) in gp,
                (mu, nu) in eg,
                eps_split if lam == split else None,
            )
        )
    return DegreeReport(mu, nu, tuple(rows))
