"""Characteristic polynomials and roots of small-degree complex polynomials.

Coefficient arrays are in ascending order: ``c[k]`` multiplies ``x**k``.
"""
from __future__ import annotations

import math

import numpy as np
import numpy.polynomial.polynomial as P

from .errors import NonConvergence

DK_INITIAL = 0.4 + 0.9j
DK_STEP_TOL = 1e-13
DK_MAX_ITER = 500

EPS = np.finfo(float).eps

# Radius (relative to root magnitude) within which m computed roots are taken
# to be one root of multiplicity m. Perturbing a polynomial by eps moves an
# m-fold root by about eps**(1/m).
CLUSTER_RADIUS = {2: 1e-6, 3: 1e-4, 4: 1e-3}
CLUSTER_SAFETY = 4.0
CLUSTER_COEFF_TOL = 1e-11
# Roots closer than this (relative to root magnitude) are re-solved about
# their common centre, where evaluating the polynomial no longer cancels.
CLUSTER_LINK = 0.05


def faddeev_leverrier(m):
    """Coefficients of ``det(m - x*I)``, ascending, by the Faddeev-LeVerrier recurrence."""
    m = np.asarray(m, dtype=complex)
    d = m.shape[0]
    eye = np.eye(d, dtype=complex)
    monic = np.zeros(d + 1, dtype=complex)  # det(x*I - m)
    monic[d] = 1
    acc = np.zeros_like(m)
    for k in range(1, d + 1):
        acc = m @ acc + monic[d - k + 1] * eye
        monic[d - k] = -np.trace(m @ acc) / k
    return (-1) ** d * monic


def horner(c, z):
    """Value of the polynomial at ``z`` and its rounding-error bound."""
    value = 0j
    bound = 0.0
    az = abs(z)
    for coef in c[::-1]:
        value = value * z + coef
        bound = bound * az + abs(coef)
    return value, 2 * len(c) * EPS * bound


def _derivative_value(c, z):
    return horner(np.arange(1, len(c)) * c[1:], z)[0]


def quadratic_roots(c):
    """Both roots of ``c0 + c1 x + c2 x**2``.

    The larger-magnitude root comes from the cancellation-free branch and the
    other from the product of roots.
    """
    c0, c1, c2 = (complex(x) for x in c)
    s = np.sqrt(c1 * c1 - 4 * c2 * c0 + 0j)
    if (c1.conjugate() * s).real < 0:
        s = -s
    big = -(c1 + s) / (2 * c2)
    if big == 0:
        return np.zeros(2, dtype=complex)
    return np.array([big, c0 / (c2 * big)])


def durand_kerner(c, tol=DK_STEP_TOL, max_iter=DK_MAX_ITER):
    """All roots of the polynomial by simultaneous Weierstrass iteration.

    Iteration stops once every update is below ``tol`` (relative to the root
    magnitude) or every root evaluates to zero within rounding error. Roots
    that already evaluate to zero within rounding error are left in place.
    """
    c = np.asarray(c, dtype=complex)
    c = c / c[-1]
    degree = len(c) - 1
    z = DK_INITIAL ** np.arange(degree)
    for _ in range(max_iter):
        biggest = 0.0
        at_rounding_level = True
        for i in range(degree):
            value, err = horner(c, z[i])
            if abs(value) <= err:
                # already a root to working precision; moving it would only
                # kick a coincident copy away through a tiny denominator
                continue
            at_rounding_level = False
            denom = np.prod([z[i] - z[j] for j in range(degree) if j != i])
            if denom == 0:
                denom = EPS
            step = value / denom
            z[i] -= step
            biggest = max(biggest, abs(step) / max(1.0, abs(z[i])))
        if biggest < tol or at_rounding_level:
            return z
    raise NonConvergence(f"Durand-Kerner did not converge in {max_iter} iterations")


def newton_polish(c, roots):
    """One Newton step per root, kept only when it lowers the residual."""
    c = np.asarray(c, dtype=complex)
    out = np.array(roots, dtype=complex)
    for i, z in enumerate(out):
        value = horner(c, z)[0]
        slope = _derivative_value(c, z)
        if slope == 0:
            continue
        candidate = z - value / slope
        if abs(horner(c, candidate)[0]) < abs(value):
            out[i] = candidate
    return out


def _partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def refine_multiple_root(c, z, multiplicity, max_iter=20):
    """Newton iteration on the ``(multiplicity-1)``-th derivative, where the root is simple."""
    dc = np.asarray(c, dtype=complex)
    if multiplicity == len(dc) - 1:
        # every root coincides, so it is the mean of the roots
        return -dc[-2] / (multiplicity * dc[-1])
    for _ in range(multiplicity - 1):
        dc = P.polyder(dc)
    slope_c = P.polyder(dc)
    for _ in range(max_iter):
        slope = P.polyval(z, slope_c)
        if slope == 0:
            break
        step = P.polyval(z, dc) / slope
        z = z - step
        if abs(step) <= 4 * EPS * max(1.0, abs(z)):
            break
    return z


def _cluster_radius(c, z, m, scale):
    """How far rounding can scatter an m-fold root at ``z``.

    The fixed floor covers well separated roots; near other roots the m-th
    derivative shrinks and the scatter (m! err / |p^(m)|)**(1/m) takes over.
    """
    _, err = horner(c, z)
    dm = abs(P.polyval(z, P.polyder(c, m)))
    spread = (math.factorial(m) * err / dm) ** (1 / m) if dm > 0 else np.inf
    return max(CLUSTER_RADIUS[m] * scale, CLUSTER_SAFETY * spread)


def _merge_block(c, roots, block, scale):
    """Multiple root standing in for ``roots[block]``, or None if too spread out."""
    m = len(block)
    centre = roots[block].mean()
    radius = _cluster_radius(c, centre, m, scale)
    if float(np.max(np.abs(roots[block] - centre))) > radius:
        return None
    refined = refine_multiple_root(c, centre, m)
    return centre if abs(refined - centre) > radius else refined


def merge_clusters(c, roots):
    """Collapse each tight group of computed roots onto one multiple root.

    Iterates for an m-fold root scatter by about eps**(1/m); the group is
    replaced by the root of the (m-1)-th derivative found from its mean.
    Among the groupings, the coarsest one whose roots rebuild the
    coefficients about as well as the best grouping does wins, so two
    nearby but distinct multiple roots are not fused.
    """
    roots = np.asarray(roots, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(roots)))) if roots.size else 1.0
    monic = np.asarray(c, dtype=complex) / c[-1]
    merged = {}
    candidates = []
    for part in _partitions(list(range(len(roots)))):
        out = roots.copy()
        spread = 0.0
        for block in part:
            if len(block) == 1:
                continue
            key = tuple(block)
            if key not in merged:
                merged[key] = _merge_block(c, roots, block, scale)
            if merged[key] is None:
                break
            out[block] = merged[key]
            spread += float(np.max(np.abs(roots[block] - merged[key])))
        else:
            mismatch = float(np.max(np.abs(P.polyfromroots(out) - monic)))
            candidates.append(((len(part), spread), mismatch, out))
    best = min(mismatch for _, mismatch, _ in candidates)
    tol = max(CLUSTER_COEFF_TOL * float(np.max(np.abs(monic))), CLUSTER_SAFETY * best)
    candidates.sort(key=lambda item: item[0])
    return next(out for _, mismatch, out in candidates if mismatch <= tol)


def sort_roots(roots):
    return np.array(sorted(np.asarray(roots, dtype=complex), key=lambda z: (z.real, z.imag)))


def taylor_shift(c, a):
    """Coefficients of ``p(a + w)`` as a polynomial in ``w``."""
    b = np.array(c, dtype=complex)
    d = len(b) - 1
    for i in range(d):
        for j in range(d - 1, i - 1, -1):
            b[j] += a * b[j + 1]
    return b


def _groups(roots, link):
    """Single-linkage groups of root indices, as lists."""
    owner = list(range(len(roots)))

    def find(i):
        while owner[i] != i:
            i = owner[i]
        return i

    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if abs(roots[i] - roots[j]) <= link:
                owner[find(j)] = find(i)
    groups = {}
    for i in range(len(roots)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def recentre_clusters(c, roots):
    """Re-solve each group of close roots in coordinates centred on the group.

    Near a cluster the polynomial's value is a difference of large terms, so
    roots found there are individually acceptable but jointly inconsistent
    with the coefficients. After the shift the cluster's local factor has
    small coefficients and its roots come out consistent.
    """
    roots = np.array(roots, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(roots))))
    for block in _groups(roots, CLUSTER_LINK * scale):
        if len(block) < 2:
            continue
        centre = roots[block].mean()
        q = taylor_shift(c, centre)
        w = newton_polish(q, durand_kerner(q))
        nearest = np.argsort(np.abs(w))[: len(block)]
        roots[block] = centre + w[nearest]
    return roots


def polynomial_roots(c):
    """All roots of a degree 2 or 4 polynomial, multiple roots merged, sorted by (Re, Im)."""
    c = np.asarray(c, dtype=complex)
    degree = len(c) - 1
    if degree == 2:
        roots = quadratic_roots(c)
    elif degree >= 1:
        roots = recentre_clusters(c, newton_polish(c, durand_kerner(c)))
    else:
        raise ValueError("polynomial must have positive degree")
    return sort_roots(merge_clusters(c, roots))

