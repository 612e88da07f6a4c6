"""Generalized Newton identity: lowering counts, expansion coefficients, and
the brute-force left-hand side.

The identity relates the raising series built from a creation sequence R to
products of generalized complete functions.  Everything here is generic over
the defining sequence d (with d_n specialized to q^n - 1 by the rest of the
package) so the identity can be exercised on arbitrary sequences as well.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import factorial
from typing import Callable

from .errors import InternalCheckError
from .partitions import Partition, mult_factorial, subtract
from .scalars import CycRat, ParamMode
from .symfunc import PExpr, p_multiply, q_to_p, qprod_to_p, r_times_qprod

__all__ = [
    "DSeq",
    "qpow_dseq",
    "nl_brute",
    "nl_closed",
    "nl_falling",
    "d_mu",
    "d_lambda_mu",
    "newton_lhs",
    "r_from_recursion",
]

# a defining sequence: n >= 1 -> scalar
DSeq = Callable[[int], CycRat]


def qpow_dseq(mode: ParamMode) -> DSeq:
    """The sequence d_n = q^n - 1 driving the rest of the package."""
    return lambda n: mode.qpow(n) - 1


def nl_brute(lam: Partition, nu: Partition) -> int:
    """Count tuples (i_1..i_s), 1 <= i_j <= lam_j, whose positive leftovers
    lam_j - i_j form exactly nu (zeros discarded)."""
    target = nu.parts
    count = 0
    for tup in iproduct(*(range(1, p + 1) for p in lam.parts)):
        left = sorted((p - i for p, i in zip(lam.parts, tup) if p - i > 0), reverse=True)
        if tuple(left) == target:
            count += 1
    return count


def _clamped_quotient(prod: int, nu: Partition, formula: str) -> int:
    if prod <= 0:
        return 0
    mf = mult_factorial(nu)
    if prod % mf:
        raise InternalCheckError(
            f"{formula} gave {prod}, not divisible by m(nu)! = {mf} "
            f"(nu={nu.parts}); the closed form is broken"
        )
    return prod // mf


def nl_closed(lam: Partition, nu: Partition) -> int:
    """Multiplicity-product closed form for the lowering count.

    Product over part values i of nu and 1 <= k <= m_i(nu) of
    (1 - k + sum_{j > i} (m_j(lam) - m_j(nu))), divided by m(nu)!.
    A positive product must divide exactly; a non-positive product means
    the count is zero.
    """
    ml = lam.multiplicities()
    mn = nu.multiplicities()
    prod = 1
    for i, mi in mn.items():
        tail = sum(v for j, v in ml.items() if j > i) - sum(v for j, v in mn.items() if j > i)
        for k in range(1, mi + 1):
            prod *= 1 - k + tail
    return _clamped_quotient(prod, nu, "multiplicity form")


def nl_falling(lam: Partition, nu: Partition) -> int:
    """Falling-product closed form: k_1 (k_2 - 1) ... (k_t - (t-1)) / m(nu)!,
    where k_i counts the parts of lam strictly above nu_i."""
    prod = 1
    for idx, v in enumerate(nu.parts):
        prod *= sum(1 for p in lam.parts if p > v) - idx
    return _clamped_quotient(prod, nu, "falling form")


def d_mu(mu: Partition, d: DSeq) -> CycRat:
    """Expansion coefficient of the creation series over q-products:
    (-1)^{l-1} (l-1)!/m(mu)! * sum_k m_k(mu) d_k."""
    if mu.length == 0:
        raise ValueError("the coefficient is undefined for the empty partition")
    acc = None
    for k, mk in mu.multiplicities().items():
        t = d(k) * mk
        acc = t if acc is None else acc + t
    l = mu.length
    scale = Fraction(factorial(l - 1), mult_factorial(mu))
    if (l - 1) % 2:
        scale = -scale
    return acc * scale


def _proper_submultisets(mu: Partition):
    values = sorted(mu.multiplicities().items(), reverse=True)
    ranges = [range(mk + 1) for _, mk in values]
    for choice in iproduct(*ranges):
        if all(c == mk for c, (_, mk) in zip(choice, values)):
            continue  # nu = mu leaves an empty difference
        parts = []
        for c, (k, _) in zip(choice, values):
            parts.extend([k] * c)
        yield Partition(sorted(parts, reverse=True))


def d_lambda_mu(lam: Partition, mu: Partition, d: DSeq) -> CycRat:
    """Coefficient of q_mu in the raising sum for lam: sum over proper
    sub-multisets nu of mu of N_l(lam, nu) * d_{mu \\ nu}."""
    if lam.length == 0:
        raise ValueError("lam must be nonempty")
    if lam.weight != mu.weight:
        raise ValueError(f"weight mismatch: |{lam.parts}| != |{mu.parts}|")
    total = None
    for nu in _proper_submultisets(mu):
        c = nl_closed(lam, nu)
        if not c:
            continue
        t = d_mu(subtract(mu, nu), d) * c
        total = t if total is None else total + t
    if total is None:
        return CycRat(d(1).m)
    return total


def newton_lhs(lam: Partition, mode: ParamMode, rs: list[PExpr] | None = None) -> PExpr:
    """Brute-force left-hand side of the generalized Newton identity.

    Sums R_{i_1+...+i_s} q_{lam_1-i_1} ... q_{lam_s-i_s} over all tuples with
    every i_j >= 1, in the p basis.  Tuples are enumerated exhaustively and
    grouped only by their (total, leftover-partition) signature before the
    ring products are taken.  `rs` overrides the creation sequence (index by
    total degree); by default the closed-form expansion is used.
    """
    if lam.length == 0:
        raise ValueError("the identity is stated for nonempty partitions")
    counts: dict[tuple[int, Partition], int] = {}
    for tup in iproduct(*(range(1, p + 1) for p in lam.parts)):
        k = sum(tup)
        left = Partition(sorted((p - i for p, i in zip(lam.parts, tup) if p - i > 0), reverse=True))
        key = (k, left)
        counts[key] = counts.get(key, 0) + 1
    out = PExpr.zero(mode.m)
    for (k, nu), c in counts.items():
        if rs is None:
            term = r_times_qprod(k, nu, mode)
        else:
            term = p_multiply(rs[k], qprod_to_p(nu, mode))
        out = out + term.scale(c)
    return out


def r_from_recursion(nmax: int, d: DSeq, mode: ParamMode) -> list[PExpr]:
    """Rebuild the creation sequence for an arbitrary d from the convolution
    R_n = d_n q_n - sum_{i<n} R_i q_{n-i}; returns [R_0..R_nmax]."""
    rs = [PExpr.one(mode.m)]
    for n in range(1, nmax + 1):
        acc = q_to_p(n, mode).scale(d(n))
        for i in range(1, n):
            acc = acc - p_multiply(rs[i], q_to_p(n - i, mode))
        rs.append(acc)
    return rs
