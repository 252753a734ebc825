"""Independent floating-point oracles used to cross-check exact results.

Everything here goes through numpy's eigensolvers and companion-matrix
root finding, never through the package's exact code paths.
"""

from __future__ import annotations

import cmath

import numpy as np


def b_matrix_float(entries, phi: float) -> np.ndarray:
    """B(e^(i phi)) = (1-w)V + (1-conj(w))V^T in complex floats."""
    v = np.array(entries, dtype=complex)
    w = cmath.exp(1j * phi)
    return (1 - w) * v + (1 - w.conjugate()) * v.T


def signature_float(entries, phi: float, tol: float = 1e-9) -> int:
    ev = np.linalg.eigvalsh(b_matrix_float(entries, phi))
    return int(np.sum(ev > tol) - np.sum(ev < -tol))


def inertia_float(matrix: np.ndarray, tol: float = 1e-9) -> tuple[int, int, int]:
    ev = np.linalg.eigvalsh(matrix)
    pos = int(np.sum(ev > tol))
    neg = int(np.sum(ev < -tol))
    return pos, neg, len(ev) - pos - neg


def distinct_real_roots_float(
    coeffs_ascending, lo: float = -2.0, hi: float = 2.0,
    imag_tol: float = 1e-8, cluster_tol: float = 1e-6,
) -> list[float]:
    """Distinct real roots of an integer polynomial in the open interval (lo, hi).

    Companion-matrix roots, filtered to (numerically) real ones and merged
    into clusters, so a multiple root counts once.
    """
    coeffs = list(coeffs_ascending)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    roots = np.roots(coeffs[::-1])
    real = sorted(r.real for r in roots if abs(r.imag) < imag_tol and lo < r.real < hi)
    merged: list[float] = []
    for r in real:
        if merged and abs(r - merged[-1]) < cluster_tol:
            continue
        merged.append(r)
    return merged
