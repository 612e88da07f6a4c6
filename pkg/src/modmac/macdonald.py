"""Distinguished eigenvectors of the vertex-operator zero mode.

Each m-reduced partition indexes a unique monic eigenvector supported on the
dominance-above part of the m-reduced q-basis.  The coefficients come from a
triangular recursion; the eigenvector property is re-verified through the
independent normal-ordered implementation before anything is returned.

The q -> 0 limit is taken on symbolically computed coefficients, never by
re-running the solve at q = 0: there the eigenvalues depend only on the
length mod m and collide, so the recursion's denominators vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import EigenvalueCollisionAtEvaluation, InternalCheckError, PoleAtSpecialization
from .partitions import Partition, dominates, enumerate_partitions, z_of
from .scalars import CycRat, ParamMode, evaluate, scalar_to_json
from .symfunc import PExpr, p_multiply, qprod_to_p, scalar_product
from .vertex import eigenvalue_c, x0_apply_diff, x0_matrix

__all__ = [
    "ModularMacdonald",
    "solve_q",
    "all_q",
    "gram",
    "specialize_q0",
    "schur_q_oracle",
]


@dataclass(frozen=True)
class ModularMacdonald:
    """A monic eigenvector of the zero mode, indexed by an m-reduced partition.

    q_coeffs lists the coordinates on the m-reduced q-basis, the indexing
    partition first and then ascending in dominance; the leading coefficient
    is one and the support dominates the index.
    """

    m: int
    shape: Partition
    mode: ParamMode
    q_coeffs: tuple[tuple[Partition, CycRat], ...]
    p_form: PExpr
    eigenvalue: CycRat

    def coeff(self, mu) -> CycRat:
        if not isinstance(mu, Partition):
            mu = Partition(mu)
        for lam, c in self.q_coeffs:
            if lam == mu:
                return c
        return CycRat(self.m)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "lambda": self.shape.to_json(),
            "eigenvalue": scalar_to_json(self.eigenvalue),
            "q_coeffs": [
                {"partition": lam.to_json(), "coeff": scalar_to_json(c)}
                for lam, c in self.q_coeffs
            ],
            "p_form": self.p_form.to_json(),
        }


@lru_cache(maxsize=None)
def solve_q(lam: Partition, mode: ParamMode) -> ModularMacdonald:
    """Solve the triangular recursion for the eigenvector indexed by lam.

    Walking the dominance-above support upward from lam, each coordinate is
    sum of already-known coordinates against the operator matrix, divided by
    the eigenvalue gap.  The result is checked to be an exact eigenvector of
    the independent implementation of the operator.
    """
    m = mode.m
    if not lam.is_reduced(m):
        raise ValueError(f"{lam.parts} is not m-reduced for m = {m}")
    ev = eigenvalue_c(lam, mode)
    if lam.length == 0:
        return ModularMacdonald(
            m, lam, mode, ((lam, mode.one()),), PExpr.one(m), ev
        )
    mat = x0_matrix(lam.weight, mode)
    support = [nu for nu in mat.order if dominates(nu, lam)]
    coeffs: dict[Partition, CycRat] = {lam: mode.one()}
    for nu in reversed(support):
        if nu == lam:
            continue
        num = mode.zero()
        for mu, c in coeffs.items():
            num = num + c * mat.entry(nu, mu)
        gap = ev - eigenvalue_c(nu, mode)
        if gap.is_zero:
            raise EigenvalueCollisionAtEvaluation(
                f"eigenvalue gap between {lam.parts} and {nu.parts} vanishes at "
                f"{mode.describe()}; choose a different q0"
            )
        c = num / gap
        if not c.is_zero:
            coeffs[nu] = c
    p_form = PExpr.zero(m)
    for mu, c in coeffs.items():
        p_form = p_form + qprod_to_p(mu, mode).scale(c)
    if x0_apply_diff(p_form, mode) != p_form.scale(ev):
        raise InternalCheckError(
            f"solved coordinates for {lam.parts} are not an eigenvector of the "
            "normal-ordered implementation"
        )
    ordered = tuple((nu, coeffs[nu]) for nu in [lam] + [x for x in reversed(support) if x in coeffs and x != lam])
    return ModularMacdonald(m, lam, mode, ordered, p_form, ev)


def all_q(n: int, mode: ParamMode) -> list[ModularMacdonald]:
    """One eigenvector per m-reduced partition of n, greatest index first."""
    if n < 1:
        raise ValueError(f"weight must be positive, got {n}")
    return [solve_q(lam, mode) for lam in x0_matrix(n, mode).order]


def gram(n: int, mode: ParamMode) -> list[list[CycRat]]:
    """Pairings of the weight-n eigenvectors; must come out diagonal."""
    qs = all_q(n, mode)
    out = []
    for i, a in enumerate(qs):
        row = []
        for j, b in enumerate(qs):
            v = scalar_product(a.p_form, b.p_form, mode)
            if i != j and not v.is_zero:
                raise InternalCheckError(
                    f"Gram matrix is not diagonal: <Q_{a.shape.parts}, "
                    f"Q_{b.shape.parts}> = {v}"
                )
            row.append(v)
        out.append(row)
    return out


def specialize_q0(mac: ModularMacdonald) -> PExpr:
    """Substitute q = 0 into every coefficient of the p-basis form.

    Requires a symbolically solved eigenvector; the solve itself must not be
    re-run at q = 0 (the eigenvalues collide there).
    """
    if not mac.mode.is_symbolic:
        raise ValueError("specialization requires a symbolically solved eigenvector")
    terms = {}
    for lam, c in mac.p_form.terms.items():
        try:
            terms[lam] = CycRat.from_const(mac.m, evaluate(c, 0))
        except PoleAtSpecialization as exc:
            raise PoleAtSpecialization(
                f"coefficient of p_{lam.parts} in Q_{mac.shape.parts} has a pole at q = 0"
            ) from exc
    return PExpr(mac.m, terms)


# ---------------------------------------------------------------------------
# classical Schur Q oracle (independent of everything above)


@lru_cache(maxsize=None)
def _classical_q(r: int) -> PExpr:
    # degree-r coefficient of exp(2 sum_{odd k} p_k z^k / k)
    if r == 0:
        return PExpr.one(2)
    terms = {}
    for rho in enumerate_partitions(r, "m_regular", 2):
        terms[rho] = Fraction(2**rho.length, z_of(rho))
    return PExpr(2, terms)


@lru_cache(maxsize=None)
def _classical_pair(a: int, b: int) -> PExpr:
    # two-row case: q_a q_b + 2 sum_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}
    if b == 0:
        return _classical_q(a)
    out = p_multiply(_classical_q(a), _classical_q(b))
    for i in range(1, b + 1):
        term = p_multiply(_classical_q(a + i), _classical_q(b - i)).scale(2)
        out = out + term if i % 2 == 0 else out - term
    return out


@lru_cache(maxsize=None)
def _pfaffian(values: tuple[int, ...]) -> PExpr:
    # even-length strictly decreasing sequence, possibly padded with a final 0
    if not values:
        return PExpr.one(2)
    out = PExpr.zero(2)
    head = values[0]
    for j in range(1, len(values)):
        rest = values[1:j] + values[j + 1:]
        term = p_multiply(_classical_pair(head, values[j]), _pfaffian(rest))
        out = out + term if j % 2 == 1 else out - term
    return out


def schur_q_oracle(lam: Partition) -> PExpr:
    """Classical Schur Q-function of a strict partition, in the p basis.

    Built from the textbook generating function exp(2 sum_{odd} p_r z^r / r)
    and the Pfaffian reduction to two-row blocks; used as an external check
    for the q -> 0 specialization at m = 2.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    if not lam.is_strict():
        raise ValueError(f"Schur Q-functions are indexed by strict partitions, got {lam.parts}")
    vals = lam.parts
    if len(vals) % 2:
        vals = vals + (0,)
    return _pfaffian(vals)
