"""Symmetric-function evaluation: elementary, complete homogeneous and Schur
polynomials, principal specializations, q-dimensions, the dual Cauchy
identity and the Chebyshev bridge.

Schur polynomials are evaluated by the Jacobi-Trudi determinant of complete
homogeneous polynomials: division-free, exact in any scalar field and valid
at repeated points.  The bialternant ratio is provided only as a
cross-check at distinct points.
"""

from __future__ import annotations

from fractions import Fraction

from . import partitions as pt
from .scalars import QRat, det_exact, qnum_symmetric


def elementary_all(kmax: int, z: list) -> list:
    """e_0..e_kmax of the point vector z, one variable at a time."""
    e = [1] + [0] * kmax
    for x in z:
        for k in range(kmax, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e


def complete_h_all(kmax: int, z: list) -> list:
    """h_0..h_kmax of the point vector z, one variable at a time."""
    h = [1] + [0] * kmax
    for x in z:
        for k in range(1, kmax + 1):
            h[k] = h[k] + x * h[k - 1]
    return h


def elementary(k: int, z: list):
    if k < 0:
        raise ValueError("elementary needs k >= 0")
    if k > len(z):
        return 0
    return elementary_all(k, z)[k]


def complete_h(k: int, z: list):
    if k < 0:
        raise ValueError("complete_h needs k >= 0")
    return complete_h_all(k, z)[k]


def schur_eval(lam, z: list):
    """s_lam(z) by Jacobi-Trudi: det[h_{lam_i - i + j}], 1 <= i,j <= l(lam)."""
    lam = pt.canonical(lam)
    if not lam:
        return 1
    if len(lam) > len(z):
        return 0
    n = len(lam)
    h = complete_h_all(lam[0] + n - 1, z)
    mat = [[(h[lam[i] - (i + 1) + (j + 1)]
             if 0 <= lam[i] - (i + 1) + (j + 1) <= lam[0] + n - 1 else 0)
            for j in range(n)] for i in range(n)]
    return det_exact(mat)


def schur_bialternant(lam, z: list):
    """s_lam(z) as det[z_i^(lam_j + M - j)] / det[z_i^(M - j)].

    Requires pairwise distinct points; used only to cross-check the
    Jacobi-Trudi evaluator.
    """
    lam = pt.canonical(lam)
    m = len(z)
    if len(lam) > m:
        return 0
    exps = [pt.part(lam, j) + m - j for j in range(1, m + 1)]
    num = det_exact([[zi ** e for e in exps] for zi in z])
    den = det_exact([[zi ** (m - j) for j in range(1, m + 1)] for zi in z])
    return num / den


def schur_principal(lam, m: int) -> Fraction:
    """s_lam(1^m) by the hook-content product; 0 when l(lam) > m."""
    lam = pt.canonical(lam)
    if len(lam) > m:
        return Fraction(0)
    r = Fraction(1)
    for (_, hook, content) in pt.hook_content_data(lam):
        r *= Fraction(m + content, hook)
    return r


def qdim(mu, m: int) -> QRat:
    """q-dimension of the U(m) representation mu.

    prod_{1<=j<k<=m} [mu_j - j - mu_k + k]_q / [k - j]_q.  The denominator
    uses the positive argument k - j, which normalizes dim_q(empty) = 1 and
    matches the q -> 1 limit s_mu(1^m); the opposite convention [j - k]_q
    would rescale everything by (-1)^(m(m-1)/2).
    """
    mu = pt.canonical(mu)
    if len(mu) > m:
        raise ValueError(f"qdim needs l(mu) <= {m}")
    r = QRat.const(1)
    for j in range(1, m + 1):
        for k in range(j + 1, m + 1):
            r = r * qnum_symmetric(pt.part(mu, j) - j - pt.part(mu, k) + k)
            r = r / qnum_symmetric(k - j)
    return r


def dual_cauchy_check(t: list, z: list):
    """Both sides of prod_{i,j} (1 + t_i z_j) = sum_lam s_lam(t) s_lam'(z).

    The sum runs over partitions in the len(t) x len(z) rectangle.  Returns
    (lhs, rhs); the caller asserts equality.
    """
    lhs = 1
    for ti in t:
        for zj in z:
            lhs = lhs * (1 + ti * zj)
    rhs = 0
    for lam in pt.enumerate_bounded(len(t), len(z)):
        rhs = rhs + schur_eval(lam, t) * schur_eval(pt.conjugate(lam), z)
    return lhs, rhs


def chebyshev_u(k: int, w):
    """Chebyshev U_k(w) via U_{k+1}(w) = 2w U_k(w) - U_{k-1}(w)."""
    if k < 0:
        raise ValueError("chebyshev_u needs k >= 0")
    u_prev, u = 1, 2 * w
    if k == 0:
        return 1
    for _ in range(k - 1):
        u_prev, u = u, 2 * w * u - u_prev
    return u
