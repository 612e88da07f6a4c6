"""The graded ring generated by the power sums p_n with n prime to m.

The canonical internal representation is the power-sum basis, where
multiplication is union of partitions and derivations act term by term.
The generalized complete basis (the q's) appears only as input/output
coordinates; conversion to the m-reduced q-basis is an exact linear solve.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InternalCheckError, VerificationError
from .partitions import (
    Partition,
    dominance_linear_extension,
    enumerate_partitions,
    union,
    z_of,
)
from .scalars import Cyc, CycRat, ParamMode, epsilon, scalar_to_json, zeta

__all__ = [
    "PExpr",
    "QExpr",
    "p_multiply",
    "q_to_p",
    "qprod_to_p",
    "r_to_p",
    "r_times_qprod",
    "epsilon_product",
    "scalar_product",
    "d_dp",
    "p_to_q_reduced",
    "modular_relation_check",
]


def _sort_key(lam: Partition):
    # weight ascending, then reverse-lexicographic (dominance-compatible) within a weight
    return (lam.weight, tuple(-p for p in lam.parts))


class PExpr:
    """Finitely supported map from m-regular partitions to scalars (p basis)."""

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms=None):
        self.m = m
        clean: dict[Partition, CycRat] = {}
        for lam, c in (terms or {}).items():
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            if not lam.is_regular(m):
                raise ValueError(f"p-basis key {lam.parts} has a part divisible by {m}")
            if not isinstance(c, CycRat):
                c = CycRat.from_const(m, c)
            elif c.m != m:
                raise ValueError(f"mixed moduli: {m} vs {c.m}")
            if not c.is_zero:
                clean[lam] = c
        self.terms = clean

    @classmethod
    def zero(cls, m: int) -> "PExpr":
        return cls(m)

    @classmethod
    def one(cls, m: int) -> "PExpr":
        return cls(m, {Partition(): 1})

    @classmethod
    def monomial(cls, m: int, lam, coeff=1) -> "PExpr":
        return cls(m, {Partition(lam): coeff})

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "PExpr") -> None:
        if self.m != other.m:
            raise ValueError(f"mixed moduli: {self.m} vs {other.m}")

    def __add__(self, other: "PExpr") -> "PExpr":
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return PExpr(self.m, out)

    def __sub__(self, other: "PExpr") -> "PExpr":
        return self + (-other)

    def __neg__(self) -> "PExpr":
        return PExpr(self.m, {lam: -c for lam, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PExpr):
            self._check(other)
            out: dict[Partition, CycRat] = {}
            for la, ca in self.terms.items():
                for lb, cb in other.terms.items():
                    key = union(la, lb)
                    c = ca * cb
                    out[key] = out[key] + c if key in out else c
            return PExpr(self.m, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "PExpr":
        if not isinstance(c, CycRat):
            c = CycRat.from_const(self.m, c)
        if c.is_zero:
            return PExpr.zero(self.m)
        return PExpr(self.m, {lam: v * c for lam, v in self.terms.items()})

    # -- structure ----------------------------------------------------------

    def coeff(self, lam) -> CycRat:
        if not isinstance(lam, Partition):
            lam = Partition(lam)
        return self.terms.get(lam, CycRat(self.m))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def homogeneous_degree(self) -> int | None:
        """The common weight of the support; None when zero."""
        if not self.terms:
            return None
        weights = {lam.weight for lam in self.terms}
        if len(weights) > 1:
            raise ValueError(f"not homogeneous: weights {sorted(weights)}")
        return weights.pop()

    def sorted_items(self) -> list[tuple[Partition, CycRat]]:
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PExpr):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "PExpr(0)"
        bits = [f"({c})*p{list(lam.parts)}" for lam, c in self.sorted_items()]
        return "PExpr(" + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "basis": "p",
            "terms": [
                {"partition": lam.to_json(), "coeff": scalar_to_json(c)}
                for lam, c in self.sorted_items()
            ],
        }


class QExpr:
    """Coordinates of a ring element in the generalized complete basis.

    In the reduced flavor every key is m-reduced (the keys then form a basis
    and the coordinates are unique); the plain flavor allows any partition.
    """

    __slots__ = ("m", "terms", "reduced")

    def __init__(self, m: int, terms=None, reduced: bool = False):
        self.m = m
        self.reduced = reduced
        clean: dict[Partition, CycRat] = {}
        for lam, c in (terms or {}).items():
            if not isinstance(lam, Partition):
                lam = Partition(lam)
            if reduced and not lam.is_reduced(m):
                raise ValueError(f"q-basis key {lam.parts} has a multiplicity >= {m}")
            if not isinstance(c, CycRat):
                c = CycRat.from_const(m, c)
            elif c.m != m:
                raise ValueError(f"mixed moduli: {m} vs {c.m}")
            if not c.is_zero:
                clean[lam] = c
        self.terms = clean

    def coeff(self, lam) -> CycRat:
        if not isinstance(lam, Partition):
            lam = Partition(lam)
        return self.terms.get(lam, CycRat(self.m))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def support(self) -> list[Partition]:
        return sorted(self.terms, key=_sort_key)

    def to_p(self, mode: ParamMode) -> PExpr:
        """Expand back into the power-sum basis."""
        out = PExpr.zero(self.m)
        for lam, c in self.sorted_items():
            out = out + qprod_to_p(lam, mode).scale(c)
        return out

    def sorted_items(self) -> list[tuple[Partition, CycRat]]:
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QExpr):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "QExpr(0)"
        bits = [f"({c})*q{list(lam.parts)}" for lam, c in self.sorted_items()]
        return "QExpr(" + " + ".join(bits) + ")"

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "basis": "q_reduced" if self.reduced else "q",
            "terms": [
                {"partition": lam.to_json(), "coeff": scalar_to_json(c)}
                for lam, c in self.sorted_items()
            ],
        }


def p_multiply(f: PExpr, g: PExpr) -> PExpr:
    """Product in the ring: bilinear extension of partition union."""
    return f * g


@lru_cache(maxsize=None)
def epsilon_product(lam: Partition, mode: ParamMode) -> CycRat:
    """Product of epsilon over the parts (empty partition gives 1)."""
    out = mode.one()
    for part in lam.parts:
        out = out * epsilon(part, mode)
    return out


@lru_cache(maxsize=None)
def q_to_p(n: int, mode: ParamMode) -> PExpr:
    """The degree-n generalized complete function over power sums.

    Sum of p_rho / (z_rho eps_rho) over m-regular rho of weight n; zero for
    negative n, one for n = 0.
    """
    if n < 0:
        return PExpr.zero(mode.m)
    if n == 0:
        return PExpr.one(mode.m)
    terms = {}
    for rho in enumerate_partitions(n, "m_regular", mode.m):
        terms[rho] = mode.one() / (epsilon_product(rho, mode) * z_of(rho))
    return PExpr(mode.m, terms)


@lru_cache(maxsize=None)
def qprod_to_p(lam: Partition, mode: ParamMode) -> PExpr:
    """Product of the generalized complete functions over the parts of lam."""
    if lam.length == 0:
        return PExpr.one(mode.m)
    rest = Partition(lam.parts[1:])
    return q_to_p(lam.parts[0], mode) * qprod_to_p(rest, mode)


@lru_cache(maxsize=None)
def r_to_p(n: int, mode: ParamMode) -> PExpr:
    """Degree-n coefficient of the creation exponential, in the p basis.

    Closed form: c^n * sum over m-regular rho of weight n of
    prod_i (1 - xi^{rho_i}) p_rho / z_rho.  The series-expansion tests pin
    this against a direct truncated exponential.
    """
    if n < 0:
        return PExpr.zero(mode.m)
    if n == 0:
        return PExpr.one(mode.m)
    m = mode.m
    one = Cyc(m, (1,))
    cn = mode.c_pow(n)
    terms = {}
    for rho in enumerate_partitions(n, "m_regular", m):
        w = cn
        for part in rho.parts:
            w = w * (one - zeta(m, part))
        terms[rho] = CycRat.from_const(m, w) / z_of(rho)
    return PExpr(m, terms)


@lru_cache(maxsize=None)
def r_times_qprod(k: int, nu: Partition, mode: ParamMode) -> PExpr:
    """Cached product R_k * q_nu; shared by the Newton and operator sums."""
    return r_to_p(k, mode) * qprod_to_p(nu, mode)


def scalar_product(f: PExpr, g: PExpr, mode: ParamMode) -> CycRat:
    """Deformed Hall pairing: <p_lam, p_mu> = delta * z_lam * eps_lam."""
    if f.m != g.m or f.m != mode.m:
        raise ValueError("mixed moduli in scalar product")
    out = mode.zero()
    small, large = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    for lam, c in small.terms.items():
        d = large.terms.get(lam)
        if d is not None:
            out = out + c * d * epsilon_product(lam, mode) * z_of(lam)
    return out


def d_dp(n: int, f: PExpr) -> PExpr:
    """Formal partial derivative with respect to the degree-n power sum."""
    if n <= 0:
        raise ValueError(f"derivative index must be positive, got {n}")
    if n % f.m == 0:
        raise ValueError(f"p_{n} is not a generator: {f.m} divides {n}")
    out: dict[Partition, CycRat] = {}
    for lam, c in f.terms.items():
        k = lam.mult(n)
        if not k:
            continue
        rest = list(lam.parts)
        rest.remove(n)
        key = Partition(rest)
        c = c * k
        out[key] = out[key] + c if key in out else c
    return PExpr(f.m, out)


# ---------------------------------------------------------------------------
# change of basis to the m-reduced q-basis


def _scalar_size(a: CycRat) -> int:
    return len(a.num) + len(a.den)


def _exact_inverse(a: list[list[CycRat]], m: int) -> list[list[CycRat]]:
    """Gauss-Jordan over the rational-function field, pivoting on the entry of
    smallest symbolic degree to limit coefficient growth."""
    n = len(a)
    one = CycRat.from_const(m, 1)
    zero = CycRat(m)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not aug[r][col].is_zero:
                if pivot is None or _scalar_size(aug[r][col]) < _scalar_size(aug[pivot][col]):
                    pivot = r
        if pivot is None:
            raise InternalCheckError(
                f"singular change-of-basis matrix at column {col}: the m-reduced "
                "q's failed to span, which contradicts the basis theorem"
            )
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero:
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _reduced_basis_solver(n: int, mode: ParamMode):
    rows = tuple(enumerate_partitions(n, "m_regular", mode.m))
    cols = tuple(dominance_linear_extension(enumerate_partitions(n, "m_reduced", mode.m)))
    if len(rows) != len(cols):
        raise InternalCheckError(
            f"|m-regular| != |m-reduced| at weight {n}: {len(rows)} vs {len(cols)}"
        )
    matrix = [[qprod_to_p(c, mode).coeff(r) for c in cols] for r in rows]
    return rows, cols, _exact_inverse(matrix, mode.m)


def p_to_q_reduced(f: PExpr, mode: ParamMode) -> QExpr:
    """Unique coordinates of a homogeneous element in the m-reduced q-basis."""
    if f.m != mode.m:
        raise ValueError("mixed moduli")
    if f.is_zero:
        return QExpr(mode.m, {}, reduced=True)
    n = f.homogeneous_degree()
    rows, cols, inv = _reduced_basis_solver(n, mode)
    b = [f.coeff(r) for r in rows]
    coeffs = {}
    for j, col in enumerate(cols):
        x = mode.zero()
        for k, bk in enumerate(b):
            if not bk.is_zero:
                x = x + inv[j][k] * bk
        if not x.is_zero:
            coeffs[col] = x
    return QExpr(mode.m, coeffs, reduced=True)


# ---------------------------------------------------------------------------
# the modular relation among the q's


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def modular_relation_check(k: int, mode: ParamMode) -> QExpr:
    """Degree-km coefficient of the m-fold twisted product of the q series.

    The product over i of Y(xi^i z) telescopes to 1, so the coefficient must
    vanish identically; it is expanded in the p basis and asserted zero.
    Returns the intermediate q-coordinates (the relation itself) on success.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    m = mode.m
    total = k * m
    acc: dict[Partition, Cyc] = {}
    for comp in _compositions(total, m):
        expo = sum((i + 1) * ni for i, ni in enumerate(comp))
        key = Partition(sorted((x for x in comp if x), reverse=True))
        w = zeta(m, expo)
        acc[key] = acc[key] + w if key in acc else w
    relation = QExpr(m, {lam: CycRat.from_const(m, c) for lam, c in acc.items()})
    delta = relation.to_p(mode)
    if not delta.is_zero:
        raise VerificationError(
            f"twisted q-series product has a nonzero z^{total} coefficient: {delta!r}"
        )
    return relation
