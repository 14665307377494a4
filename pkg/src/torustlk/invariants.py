"""Closed-form triple linking numbers and the triple-point lower bound."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .braid import BraidWord, full_twist, is_pure
from .errors import InvariantViolation, NotCommutingError, NotPureError, PreconditionError
from .linking import LinkingMatrix, linking_matrix
from .pairs import CommutingPair
from .tensor import Triple, TripleLinkingTensor, admissible_triples


def _formula(m: int, la: LinkingMatrix, lb: LinkingMatrix) -> TripleLinkingTensor:
    return TripleLinkingTensor(m, {
        (i, j, k): -la.lk(i, j) * lb.lk(j, k) + lb.lk(i, j) * la.lk(j, k)
        for i, j, k in admissible_triples(m)
    })


def tlk_formula(pair: CommutingPair) -> TripleLinkingTensor:
    """Tlk_{i,j,k} = -Lk_ij(a) Lk_jk(b) + Lk_ij(b) Lk_jk(a) for a certified pair."""
    if not isinstance(pair, CommutingPair):
        raise NotCommutingError("tlk_formula needs a certified CommutingPair")
    if pair.m < 3:
        raise PreconditionError(f"need m >= 3, got {pair.m}")
    return _formula(pair.m, linking_matrix(pair.a), linking_matrix(pair.b))


def tlk_abs_sum(t: TripleLinkingTensor) -> int:
    return t.abs_sum()


def tlk_b_delta(b: BraidWord, n: int) -> TripleLinkingTensor:
    """Tlk of the pair ``(b, D^n)``: ``-n (Lk_ij(b) - Lk_jk(b))``."""
    if not is_pure(b):
        raise NotPureError(f"b = [{b}] is not a pure braid")
    if b.m < 3:
        raise PreconditionError(f"need m >= 3, got {b.m}")
    lk = linking_matrix(b)
    return TripleLinkingTensor(b.m, {
        (i, j, k): -n * (lk.lk(i, j) - lk.lk(j, k)) for i, j, k in admissible_triples(b.m)
    })


@dataclass
class BoundReport:
    m: int
    n: int
    mu: int
    nu: int
    nu_terms: dict[Triple, int]
    lower_bound: int
    tlk_abs_sum: int
    realized_r3_count: Optional[int] = None
    tensor: Optional[TripleLinkingTensor] = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "mu": self.mu,
            "nu": self.nu,
            "nu_terms": [{"i": i, "j": j, "k": k, "v": v} for (i, j, k), v in sorted(self.nu_terms.items())],
            "lower_bound": self.lower_bound,
            "tlk_abs_sum": self.tlk_abs_sum,
            "realized_r3_count": self.realized_r3_count,
        }


def _nu_term(lk: LinkingMatrix, i: int, j: int, k: int) -> int:
    x, y = lk.lk(i, j), lk.lk(j, k)
    return min(abs(x), abs(y)) if x * y > 0 else 0


def thm2_bound(b: BraidWord, n: int) -> BoundReport:
    """The lower bound ``4n(mu(m-2) - nu)`` on the triple point number of the pair ``(b, D^n)``.

    The bound is also recomputed as the absolute sum of the formula tensor and
    the two must agree; a mismatch raises :class:`InvariantViolation`.
    """
    if not is_pure(b):
        raise NotPureError(f"b = [{b}] is not a pure braid")
    if b.m < 3:
        raise PreconditionError(f"need m >= 3, got {b.m}")
    if n < 0:
        raise PreconditionError(f"n must be non-negative, got {n}")
    m = b.m
    lk = linking_matrix(b)
    mu = sum(abs(lk.lk(i, j)) for i, j in combinations(range(1, m + 1), 2))
    nu_terms: dict[Triple, int] = {}
    for i, j, k in combinations(range(1, m + 1), 3):
        for t in ((i, j, k), (j, k, i), (k, i, j)):
            nu_terms[t] = _nu_term(lk, *t)
    nu = sum(nu_terms.values())
    lower = 4 * n * (mu * (m - 2) - nu)

    tensor = tlk_formula(CommutingPair(b, full_twist(m, n)))
    abs_sum = tensor.abs_sum()
    if lower < 0 or abs_sum != lower:
        raise InvariantViolation(
            f"bound {lower} disagrees with the absolute Tlk sum {abs_sum} for b = [{b}], n = {n}"
        )
    return BoundReport(m, n, mu, nu, nu_terms, lower, abs_sum, tensor=tensor)
