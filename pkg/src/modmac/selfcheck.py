"""Identity sweeps behind the `selfcheck` command.

Each function checks one family of identities over ranges scaled by a
max-weight knob and returns a JSON-able report; nothing here is a test
oracle, it is the runtime verification surface of the package.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import InternalCheckError, VerificationError
from .macdonald import all_q, gram, schur_q_oracle, solve_q, specialize_q0
from .newton import (
    d_lambda_mu,
    d_mu,
    newton_lhs,
    nl_brute,
    nl_closed,
    nl_falling,
    qpow_dseq,
    r_from_recursion,
)
from .partitions import Partition, count_check, dominates, enumerate_partitions
from .scalars import CycRat, eval_mode, symbolic_mode
from .symfunc import (
    PExpr,
    modular_relation_check,
    p_multiply,
    q_to_p,
    qprod_to_p,
    r_to_p,
    scalar_product,
)
from .vertex import eigen_collision, eigenvalue_c, x0_apply_diff, x0_apply_series, x0_matrix

__all__ = ["run_selfcheck"]


def _report(identity: str, m: int, ok: bool, detail: str, **extra) -> dict:
    out = {"identity": identity, "m": m, "status": "ok" if ok else "fail", "detail": detail}
    out.update(extra)
    return out


def _check_equinumerosity(m: int, max_n: int) -> dict:
    top = max(max_n, 25)
    for n in range(0, top + 1):
        c = count_check(n, m)
        if not c.equal:
            return _report("equinumerosity", m, False, f"counts differ at n={n}: {c}")
    return _report("equinumerosity", m, True, f"n<={top}")


def _newton_sweep(m: int, bound: int, mode, d, rs=None) -> dict | None:
    for n in range(1, bound + 1):
        for lam in enumerate_partitions(n):
            lhs = newton_lhs(lam, mode, rs=rs)
            rhs = PExpr.zero(m)
            for mu in enumerate_partitions(n):
                if dominates(mu, lam):
                    rhs = rhs + qprod_to_p(mu, mode).scale(d_lambda_mu(lam, mu, d))
            delta = lhs - rhs
            if not delta.is_zero:
                return _report("traisesq", m, False, "lhs != rhs",
                               **{"lambda": lam.to_json(), "delta": delta.to_json()})
            lead = d_lambda_mu(lam, lam, d)
            want = d(lam.parts[-1])
            if (lam.length - 1) % 2:
                want = -want
            if lead != want:
                return _report("traisesq", m, False, "leading coefficient off",
                               **{"lambda": lam.to_json()})
    return None


def _check_newton(m: int, max_n: int, seed: int) -> dict:
    bound = min(max_n, 8)
    mode = symbolic_mode(m)
    bad = _newton_sweep(m, bound, mode, qpow_dseq(mode))
    if bad:
        return bad
    rng = random.Random(seed)
    emode = eval_mode(m, 2)
    for _ in range(3):
        vals = {n: CycRat.from_const(m, Fraction(rng.randint(-9, 9), rng.randint(1, 7)))
                for n in range(1, bound + 1)}
        d = lambda n: vals[n]
        rs = r_from_recursion(bound, d, emode)
        bad = _newton_sweep(m, bound, emode, d, rs=rs)
        if bad:
            bad["detail"] += " (random d-sequence)"
            return bad
    return _report("traisesq", m, True, f"|lambda|<={bound}, instance + 3 random d-sequences")


def _check_nl(m: int, max_n: int) -> dict:
    bound = min(max_n + 1, 9)
    for a in range(0, bound + 1):
        for lam in enumerate_partitions(a):
            for b in range(0, a + 1):
                for nu in enumerate_partitions(b):
                    ref = nl_brute(lam, nu)
                    if nl_closed(lam, nu) != ref or nl_falling(lam, nu) != ref:
                        return _report("lowering-count", m, False,
                                       f"mismatch at lam={lam.parts}, nu={nu.parts}")
    return _report("lowering-count", m, True, f"|lambda|<={bound}")


def _check_r_expansion(m: int, max_n: int) -> dict:
    bound = min(max_n, 10)
    mode = symbolic_mode(m)
    d = qpow_dseq(mode)
    for n in range(1, bound + 1):
        if n % m == 0:
            continue
        rhs = PExpr.zero(m)
        for mu in enumerate_partitions(n):
            rhs = rhs + qprod_to_p(mu, mode).scale(d_mu(mu, d))
        if r_to_p(n, mode) != rhs:
            return _report("creation-expansion", m, False, f"mismatch at n={n}")
    return _report("creation-expansion", m, True, f"n<={bound}")


def _check_convolution(m: int, max_n: int) -> dict:
    bound = min(max_n, 10)
    mode = symbolic_mode(m)
    for n in range(1, bound + 1):
        acc = PExpr.zero(m)
        for i in range(1, n + 1):
            acc = acc + p_multiply(r_to_p(i, mode), q_to_p(n - i, mode))
        if acc != q_to_p(n, mode).scale(mode.qpow(n) - 1):
            return _report("convolution", m, False, f"mismatch at n={n}")
    return _report("convolution", m, True, f"n<={bound}")


def _check_modular_relation(m: int, max_n: int) -> dict:
    top = min(2 * max_n, 12)
    ks = [k for k in range(1, top // m + 1)]
    try:
        for k in ks:
            modular_relation_check(k, symbolic_mode(m))
    except VerificationError as exc:
        return _report("twisted-product", m, False, str(exc))
    return _report("twisted-product", m, True, f"km<={m * len(ks) if ks else 0}")


def _operator_bound(m: int, max_n: int) -> int:
    return min(max_n, 8 if m == 2 else 6)


def _check_operator_agreement(m: int, max_n: int) -> dict:
    bound = _operator_bound(m, max_n)
    mode = symbolic_mode(m)
    for n in range(0, bound + 1):
        for lam in enumerate_partitions(n):
            if x0_apply_series(lam, mode) != x0_apply_diff(qprod_to_p(lam, mode), mode):
                return _report("operator-agreement", m, False, f"mismatch at {lam.parts}")
    return _report("operator-agreement", m, True, f"|lambda|<={bound}")


def _check_triangularity(m: int, max_n: int) -> dict:
    bound = _operator_bound(m, max_n)
    mode = symbolic_mode(m)
    try:
        for n in range(1, bound + 1):
            mat = x0_matrix(n, mode)
            for i, lam in enumerate(mat.order):
                if mat.entries[i][i] != eigenvalue_c(lam, mode):
                    return _report("raising-triangular", m, False, f"diagonal off at {lam.parts}")
    except InternalCheckError as exc:
        return _report("raising-triangular", m, False, str(exc))
    return _report("raising-triangular", m, True, f"n<={bound}")


def _check_self_adjoint(m: int, max_n: int) -> dict:
    for mode, bound in ((symbolic_mode(m), min(max_n, 6)), (eval_mode(m, 2), min(max_n, 8))):
        for n in range(1, bound + 1):
            basis = [qprod_to_p(lam, mode) for lam in enumerate_partitions(n, "m_reduced", m)]
            images = [x0_apply_diff(f, mode) for f in basis]
            for i, f in enumerate(basis):
                for j, g in enumerate(basis):
                    if scalar_product(images[i], g, mode) != scalar_product(f, images[j], mode):
                        return _report("self-adjoint", m, False,
                                       f"fails at n={n}, pair ({i},{j}), {mode.describe()}")
    return _report("self-adjoint", m, True,
                   f"symbolic n<={min(max_n, 6)}, eval(q0=2) n<={min(max_n, 8)}")


def _check_separation(m: int, max_n: int, seed: int) -> dict:
    bound = min(max_n + 2, 10)
    mode = symbolic_mode(m)
    for n in range(1, bound + 1):
        ps = enumerate_partitions(n, "m_reduced", m)
        for i, lam in enumerate(ps):
            for mu in ps[i + 1:]:
                if eigenvalue_c(lam, mode) == eigenvalue_c(mu, mode):
                    return _report("eigenvalue-separation", m, False,
                                   f"collision {lam.parts} vs {mu.parts}")
    rng = random.Random(seed)
    pool = [lam for n in range(0, 9) for lam in enumerate_partitions(n)]
    for _ in range(100):
        lam, mu = rng.choice(pool), rng.choice(pool)
        if eigen_collision(lam, mu, m) != (eigenvalue_c(lam, mode) == eigenvalue_c(mu, mode)):
            return _report("eigenvalue-separation", m, False,
                           f"predicate mismatch {lam.parts} vs {mu.parts}")
    for k in range(0, 3):
        for l in range(0, 3):
            lam = Partition([2] * (m + l) + [1] * k)
            mu = Partition([2] * l + [1] * (k + 2 * m))
            if not eigen_collision(lam, mu, m) or eigenvalue_c(lam, mode) != eigenvalue_c(mu, mode):
                return _report("eigenvalue-separation", m, False,
                               f"known collision family broke at k={k}, l={l}")
    return _report("eigenvalue-separation", m, True, f"n<={bound} + 100 random pairs")


def _check_eigenbasis(m: int, max_n: int) -> dict:
    try:
        for mode, bound in ((symbolic_mode(m), min(max_n, 5)), (eval_mode(m, 2), min(max_n, 8))):
            for n in range(1, bound + 1):
                for mac in all_q(n, mode):
                    if mac.coeff(mac.shape) != mode.one():
                        return _report("eigenbasis", m, False, f"not monic at {mac.shape.parts}")
                    for nu, _ in mac.q_coeffs:
                        if not dominates(nu, mac.shape):
                            return _report("eigenbasis", m, False,
                                           f"support below index at {mac.shape.parts}")
                gram(n, mode)
    except InternalCheckError as exc:
        return _report("eigenbasis", m, False, str(exc))
    return _report("eigenbasis", m, True,
                   f"symbolic n<={min(max_n, 5)}, eval(q0=2) n<={min(max_n, 8)}")


def _check_schur_q(m: int, max_n: int) -> dict:
    if m != 2:
        return {"identity": "schur-q-limit", "m": m, "status": "skipped",
                "detail": "only stated for m=2"}
    bound = min(max_n, 8)
    mode = symbolic_mode(2)
    for n in range(1, bound + 1):
        for lam in enumerate_partitions(n):
            if not lam.is_strict():
                continue
            if specialize_q0(solve_q(lam, mode)) != schur_q_oracle(lam):
                return _report("schur-q-limit", 2, False, f"mismatch at {lam.parts}")
    return _report("schur-q-limit", 2, True, f"strict |lambda|<={bound}")


def run_selfcheck(m: int, max_n: int, seed: int = 0) -> list[dict]:
    """Run every identity family at ranges scaled by max_n; returns reports."""
    return [
        _check_equinumerosity(m, max_n),
        _check_newton(m, max_n, seed),
        _check_nl(m, max_n),
        _check_r_expansion(m, max_n),
        _check_convolution(m, max_n),
        _check_modular_relation(m, max_n),
        _check_operator_agreement(m, max_n),
        _check_triangularity(m, max_n),
        _check_self_adjoint(m, max_n),
        _check_separation(m, max_n, seed),
        _check_eigenbasis(m, max_n),
        _check_schur_q(m, max_n),
    ]
