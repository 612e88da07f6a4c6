"""Acceptance suite: every identity the package is contracted to satisfy,
checked exactly (no tolerances anywhere; all arithmetic is exact).

Each criterion prints one pass/fail line; run with `pytest -s` to see them.
"""

import random
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations

from modmac.macdonald import all_q, gram, schur_q_oracle, solve_q, specialize_q0
from modmac.newton import (
    d_lambda_mu,
    d_mu,
    newton_lhs,
    nl_brute,
    nl_closed,
    nl_falling,
    qpow_dseq,
    r_from_recursion,
)
from modmac.partitions import Partition, count_check, dominates, enumerate_partitions
from modmac.scalars import CycRat, eval_mode, symbolic_mode
from modmac.symfunc import (
    PExpr,
    modular_relation_check,
    p_multiply,
    q_to_p,
    qprod_to_p,
    r_to_p,
    scalar_product,
)
from modmac.vertex import (
    eigen_collision,
    eigenvalue_c,
    x0_apply_diff,
    x0_apply_series,
    x0_matrix,
)

P = Partition
F = Fraction


@contextmanager
def criterion(num, name):
    try:
        yield
    except BaseException:
        print(f"criterion {num:2d} [{name}]: FAIL")
        raise
    print(f"criterion {num:2d} [{name}]: PASS")


def test_c01_equinumerosity():
    with criterion(1, "equinumerosity of m-regular and m-reduced"):
        for m in (2, 3, 4, 5):
            for n in range(0, 26):
                c = count_check(n, m)
                assert c.equal, (m, n, c)


def _newton_rhs(lam, mode, d):
    out = PExpr.zero(mode.m)
    for mu in enumerate_partitions(lam.weight):
        if dominates(mu, lam):
            out = out + qprod_to_p(mu, mode).scale(d_lambda_mu(lam, mu, d))
    return out


def _newton_sweep(mode, d, rs=None):
    for n in range(1, 9):
        for lam in enumerate_partitions(n):
            assert newton_lhs(lam, mode, rs=rs) == _newton_rhs(lam, mode, d), lam
            lead = d_lambda_mu(lam, lam, d)
            want = d(lam.parts[-1])
            if (lam.length - 1) % 2:
                want = -want
            assert lead == want, lam


def test_c02_generalized_newton_identity():
    with criterion(2, "generalized Newton identity"):
        for m in (2, 3):
            mode = symbolic_mode(m)
            _newton_sweep(mode, qpow_dseq(mode))
        rng = random.Random(20240815)
        for m in (2, 3):
            emode = eval_mode(m, 2)
            for _ in range(20):
                vals = {n: CycRat.from_const(m, F(rng.randint(-9, 9), rng.randint(1, 7)))
                        for n in range(1, 9)}
                d = lambda n: vals[n]
                _newton_sweep(emode, d, rs=r_from_recursion(8, d, emode))


def test_c03_lowering_count_agreement():
    with criterion(3, "lowering-count closed forms vs direct count"):
        for a in range(0, 10):
            for lam in enumerate_partitions(a):
                for b in range(0, a + 1):
                    for nu in enumerate_partitions(b):
                        ref = nl_brute(lam, nu)
                        assert nl_closed(lam, nu) == ref, (lam, nu)
                        assert nl_falling(lam, nu) == ref, (lam, nu)


def test_c04_creation_series_expansion():
    with criterion(4, "creation-series expansion over q-products"):
        for m in (2, 3):
            mode = symbolic_mode(m)
            d = qpow_dseq(mode)
            for n in range(1, 11):
                if n % m == 0:
                    continue
                rhs = PExpr.zero(m)
                for mu in enumerate_partitions(n):
                    rhs = rhs + qprod_to_p(mu, mode).scale(d_mu(mu, d))
                assert r_to_p(n, mode) == rhs, (m, n)


def test_c05_convolution_identity():
    with criterion(5, "convolution of creation and complete series"):
        for m in (2, 3):
            mode = symbolic_mode(m)
            for n in range(1, 11):
                acc = PExpr.zero(m)
                for i in range(1, n + 1):
                    acc = acc + p_multiply(r_to_p(i, mode), q_to_p(n - i, mode))
                assert acc == q_to_p(n, mode).scale(mode.qpow(n) - 1), (m, n)


def test_c06_modular_relation():
    with criterion(6, "twisted product of the q-generating series"):
        for m in (2, 3, 4):
            mode = symbolic_mode(m)
            for k in range(1, 12 // m + 1):
                rel = modular_relation_check(k, mode)  # raises if nonzero
                assert rel.coeff(P((k * m,))) == m


def test_c07_operator_cross_validation():
    with criterion(7, "series vs normal-ordered operator implementations"):
        for m, top in ((2, 8), (3, 6)):
            mode = symbolic_mode(m)
            for n in range(0, top + 1):
                for lam in enumerate_partitions(n):
                    assert x0_apply_series(lam, mode) == x0_apply_diff(
                        qprod_to_p(lam, mode), mode
                    ), (m, lam)


def test_c08_raising_triangularity_and_diagonal():
    with criterion(8, "dominance triangularity with closed-form diagonal"):
        for m, top in ((2, 8), (3, 6)):
            mode = symbolic_mode(m)
            for n in range(1, top + 1):
                mat = x0_matrix(n, mode)
                for i, nu in enumerate(mat.order):
                    for j, lam in enumerate(mat.order):
                        if not mat.entries[i][j].is_zero:
                            assert dominates(nu, lam), (m, n, nu, lam)
                    assert mat.entries[i][i] == eigenvalue_c(nu, mode), (m, n, nu)


def test_c09_self_adjointness():
    with criterion(9, "self-adjointness of the zero mode"):
        for m in (2, 3):
            for mode, top in ((symbolic_mode(m), 6), (eval_mode(m, 2), 8)):
                for n in range(1, top + 1):
                    basis = [qprod_to_p(l, mode)
                             for l in enumerate_partitions(n, "m_reduced", m)]
                    images = [x0_apply_diff(f, mode) for f in basis]
                    for i in range(len(basis)):
                        for j in range(len(basis)):
                            assert scalar_product(images[i], basis[j], mode) == \
                                scalar_product(basis[i], images[j], mode), (m, n, i, j)


def test_c10_eigenvalue_separation():
    with criterion(10, "eigenvalue separation and collision predicate"):
        for m in (2, 3, 4):
            mode = symbolic_mode(m)
            for n in range(1, 11):
                ps = enumerate_partitions(n, "m_reduced", m)
                for lam, mu in combinations(ps, 2):
                    diff = eigenvalue_c(lam, mode) - eigenvalue_c(mu, mode)
                    assert not diff.is_zero, (m, lam, mu)
                    assert diff.is_polynomial
        rng = random.Random(97)
        pool = [lam for n in range(0, 11) for lam in enumerate_partitions(n)]
        for m in (2, 3):
            mode = symbolic_mode(m)
            pairs = [(rng.choice(pool), rng.choice(pool)) for _ in range(500)]
            for k in range(0, 3):
                for l in range(0, 3):
                    pairs.append((P([2] * (m + l) + [1] * k),
                                  P([2] * l + [1] * (k + 2 * m))))
            for lam, mu in pairs:
                assert eigen_collision(lam, mu, m) == (
                    eigenvalue_c(lam, mode) == eigenvalue_c(mu, mode)
                ), (m, lam, mu)


def test_c11_eigenbasis_and_orthogonality():
    with criterion(11, "triangular eigen-solve and orthogonality"):
        for m in (2, 3):
            for mode, top in ((symbolic_mode(m), 5), (eval_mode(m, 2), 8)):
                for n in range(1, top + 1):
                    macs = all_q(n, mode)
                    for mac in macs:
                        assert mac.coeff(mac.shape) == 1, mac.shape
                        for nu, c in mac.q_coeffs:
                            assert dominates(nu, mac.shape) and not c.is_zero
                        # eigenvector through both operator implementations
                        scaled = mac.p_form.scale(mac.eigenvalue)
                        assert x0_apply_diff(mac.p_form, mode) == scaled, (m, n, mac.shape)
                        by_series = PExpr.zero(m)
                        for nu, c in mac.q_coeffs:
                            by_series = by_series + x0_apply_series(nu, mode).scale(c)
                        assert by_series == scaled, (m, n, mac.shape)
                        assert mac.eigenvalue == eigenvalue_c(mac.shape, mode)
                    g = gram(n, mode)  # raises on a nonzero off-diagonal entry
                    for i in range(len(g)):
                        for j in range(len(g)):
                            assert g[i][j].is_zero == (i != j), (m, n, i, j)


def test_c12_schur_q_specialization():
    with criterion(12, "Schur Q-functions at the q -> 0 limit"):
        mode = symbolic_mode(2)
        for n in range(1, 9):
            for lam in enumerate_partitions(n):
                if not lam.is_strict():
                    continue
                assert specialize_q0(solve_q(lam, mode)) == schur_q_oracle(lam), lam
