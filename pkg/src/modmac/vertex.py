"""The degree-preserving zero mode of the vertex operator on the modular ring.

Two independent implementations are kept side by side: a raising-series sum
over lowering tuples, and a normal-ordered product of a creation
multiplication with an annihilation derivation.  Their agreement, the
dominance triangularity, and the closed-form diagonal are the load-bearing
checks for everything downstream.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product as iproduct

from .errors import EigenvalueCollisionAtEvaluation, InternalCheckError
from .partitions import (
    Partition,
    dominance_linear_extension,
    dominates,
    enumerate_partitions,
    mult_factorial,
)
from .scalars import Cyc, CycRat, ParamMode, scalar_to_json, zeta
from .symfunc import (
    PExpr,
    d_dp,
    p_multiply,
    p_to_q_reduced,
    r_times_qprod,
    r_to_p,
)

__all__ = [
    "eigenvalue_c",
    "f_main",
    "eigen_collision",
    "x0_apply_series",
    "s_apply",
    "x0_apply_diff",
    "X0Matrix",
    "x0_matrix",
]


def eigenvalue_c(lam: Partition, mode: ParamMode) -> CycRat:
    """Diagonal coefficient 1 + (1 - xi) sum_i (q^{lam_i} - 1) xi^{i-1}."""
    m = mode.m
    acc = mode.zero()
    for i, part in enumerate(lam.parts):
        acc = acc + (mode.qpow(part) - 1) * zeta(m, i)
    return mode.one() + acc * (Cyc(m, (1,)) - zeta(m))


def f_main(lam: Partition, m: int) -> CycRat:
    """Main part of the diagonal: sum_i (q^{lam_i} - 1) xi^{i-1}, symbolic in q."""
    out = CycRat(m)
    for i, part in enumerate(lam.parts):
        out = out + (CycRat.q(m, part) - 1) * zeta(m, i)
    return out


def eigen_collision(lam: Partition, mu: Partition, m: int) -> bool:
    """True iff the diagonal coefficients of lam and mu coincide identically,
    which happens exactly when all multiplicities agree mod m."""
    values = set(lam.multiplicities()) | set(mu.multiplicities())
    return all((lam.mult(i) - mu.mult(i)) % m == 0 for i in values)


@lru_cache(maxsize=None)
def x0_apply_series(lam: Partition, mode: ParamMode) -> PExpr:
    """Raising-series implementation of the zero mode on q_lam.

    Sums R_{i_1+...+i_s} a_{i_1} q_{lam_1-i_1} ... a_{i_s} q_{lam_s-i_s} over
    all tuples with i_j >= 0, where a_0 = 1 and a_k = 1 - xi for k >= 1.
    """
    m = mode.m
    counts: dict[tuple[int, int, Partition], int] = {}
    for tup in iproduct(*(range(0, p + 1) for p in lam.parts)):
        k = sum(tup)
        t = sum(1 for i in tup if i)
        left = Partition(sorted((p - i for p, i in zip(lam.parts, tup) if p - i > 0), reverse=True))
        key = (k, t, left)
        counts[key] = counts.get(key, 0) + 1
    one_minus_xi = Cyc(m, (1,)) - zeta(m)
    out = PExpr.zero(m)
    for (k, t, nu), c in counts.items():
        w = CycRat.from_const(m, one_minus_xi**t * c)
        out = out + r_times_qprod(k, nu, mode).scale(w)
    return out


def s_apply(k: int, f: PExpr, mode: ParamMode) -> PExpr:
    """Degree-k component of the annihilation exponential applied to f.

    Closed form: sum over m-regular rho of weight k of
    prod_i (q^{rho_i} - 1) c^{-rho_i} / m(rho)! times the iterated derivative
    d^rho.  Pinned against a direct operator exponential by the tests.
    """
    if k < 0:
        raise ValueError("lowering degree must be non-negative")
    if k == 0:
        return f
    m = mode.m
    out = PExpr.zero(m)
    for rho in enumerate_partitions(k, "m_regular", m):
        g = f
        for part in rho.parts:
            g = d_dp(part, g)
            if g.is_zero:
                break
        if g.is_zero:
            continue
        w = mode.one()
        for part in rho.parts:
            w = w * (mode.qpow(part) - 1) * mode.c_pow(-part)
        out = out + g.scale(w / mult_factorial(rho))
    return out


def x0_apply_diff(f: PExpr, mode: ParamMode) -> PExpr:
    """Normal-ordered implementation of the zero mode on a homogeneous element:
    sum_k (multiplication by R_k) after the degree-k annihilation component."""
    if f.m != mode.m:
        raise ValueError("mixed moduli")
    if f.is_zero:
        return f
    n = f.homogeneous_degree()
    out = PExpr.zero(mode.m)
    for k in range(0, n + 1):
        low = s_apply(k, f, mode)
        if low.is_zero:
            continue
        out = out + p_multiply(r_to_p(k, mode), low)
    return out


@dataclass(frozen=True)
class X0Matrix:
    """Matrix of the zero mode on the m-reduced q-basis of one weight.

    `order` is the dominance linear extension (greatest first); the entry at
    (row nu, column lam) is the q_nu coefficient of the image of q_lam, so
    the matrix is upper triangular with the eigenvalues on the diagonal.
    """

    m: int
    n: int
    mode: ParamMode
    order: tuple[Partition, ...]
    entries: tuple[tuple[CycRat, ...], ...]

    def index(self, lam: Partition) -> int:
        return self.order.index(lam)

    def entry(self, nu: Partition, lam: Partition) -> CycRat:
        return self.entries[self.index(nu)][self.index(lam)]

    def diagonal(self) -> list[CycRat]:
        return [self.entries[i][i] for i in range(len(self.order))]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "order": [lam.to_json() for lam in self.order],
            "entries": [[scalar_to_json(x) for x in row] for row in self.entries],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        labels = ["+".join(map(str, lam.parts)) for lam in self.order]
        writer.writerow([""] + labels)
        for label, row in zip(labels, self.entries):
            writer.writerow([label] + [str(x) for x in row])
        return buf.getvalue()


def _collision_precheck(order: tuple[Partition, ...], mode: ParamMode) -> None:
    values = [eigenvalue_c(lam, mode) for lam in order]
    for (i, lam), (j, mu) in combinations(enumerate(order), 2):
        if eigen_collision(lam, mu, mode.m):
            raise InternalCheckError(
                f"identical eigenvalues for distinct m-reduced {lam.parts} and "
                f"{mu.parts}: separation on the reduced set failed"
            )
        if values[i] == values[j]:
            raise EigenvalueCollisionAtEvaluation(
                f"eigenvalues of {lam.parts} and {mu.parts} coincide at "
                f"{mode.describe()}; choose a different q0"
            )


@lru_cache(maxsize=None)
def x0_matrix(n: int, mode: ParamMode) -> X0Matrix:
    """Assemble and check the zero-mode matrix on the m-reduced basis of weight n."""
    if n < 1:
        raise ValueError(f"weight must be positive, got {n}")
    order = tuple(dominance_linear_extension(enumerate_partitions(n, "m_reduced", mode.m)))
    if not mode.is_symbolic:
        _collision_precheck(order, mode)
    columns = {lam: p_to_q_reduced(x0_apply_series(lam, mode), mode) for lam in order}
    for lam in order:
        col = columns[lam]
        for nu in col.support():
            if not dominates(nu, lam):
                raise InternalCheckError(
                    "raising property violated: image of q_" + str(lam.parts)
                    + f" has support at non-dominating {nu.parts} "
                    + f"(coefficient {col.coeff(nu)}); dump: {json.dumps(col.to_json())}"
                )
        diag = col.coeff(lam)
        expected = eigenvalue_c(lam, mode)
        if diag != expected:
            raise InternalCheckError(
                f"diagonal mismatch at {lam.parts}: got {diag}, eigenvalue "
                f"formula gives {expected}"
            )
    entries = tuple(
        tuple(columns[lam].coeff(nu) for lam in order) for nu in order
    )
    return X0Matrix(mode.m, n, mode, order, entries)
