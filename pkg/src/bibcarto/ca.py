"""Correspondence Analysis of a contingency table.

Writing N for the grand total, f_ij = n_ij / N, and f_i, f_j for the
row and column masses (marginals), the analysis decomposes the
standardized departure from independence

    s_ij = (f_ij - f_i f_j) / sqrt(f_i f_j)

by singular value decomposition. Squared singular values are the axis
eigenvalues; their sum is the total inertia, which equals the table's
chi-squared statistic divided by N. Row and column factor coordinates
are principal coordinates on both sides (symmetric map):

    psi_ik = u_ik sigma_k / sqrt(f_i)      phi_jk = v_jk sigma_k / sqrt(f_j)

so the transition formulas hold exactly: sqrt(lambda_k) psi_ik equals
the f_ij/f_i - weighted average of the phi_jk, and dually. Supplementary
rows or columns are projected post hoc through those formulas using
their own conditional profile.

The SVD is a one-sided (Hestenes) Jacobi with deterministic cyclic
sweeps, ample for the small dense matrices handled here. Axes whose
eigenvalue falls below 1e-12 are dropped. Per-axis signs are
canonicalized by flipping so the row coordinate of largest magnitude is
negative (ties broken by the alphabetically first row label).
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .corpus import ContingencyTable

EIGENVALUE_TOL = 1e-12


class CaError(ValueError):
    pass


class ZeroMassError(CaError):
    def __init__(self, kind: str, label):
        super().__init__(f"{kind} {label!r} has zero mass")
        self.kind = kind
        self.label = label


class DegenerateTableError(CaError):
    pass


class EmptySupplementaryError(CaError):
    pass


class ShapeMismatchError(CaError):
    pass


@dataclass(frozen=True)
class CaResult:
    """Fitted factors: eigenvalues descending, principal coordinates for
    rows (psi) and columns (phi), masses, and the total inertia."""

    row_labels: tuple[str, ...]
    col_labels: tuple
    eigenvalues: np.ndarray
    row_coords: np.ndarray
    col_coords: np.ndarray
    row_masses: np.ndarray
    col_masses: np.ndarray
    total_inertia: float

    @property
    def n_axes(self) -> int:
        return len(self.eigenvalues)

    @property
    def inertia_percentages(self) -> np.ndarray:
        total = self.eigenvalues.sum()
        if total == 0.0:
            return np.zeros(0)
        return 100.0 * self.eigenvalues / total


def _one_sided_jacobi_svd(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100):
    """SVD by cyclically rotating column pairs until all are mutually
    orthogonal to relative tolerance ``tol``. Returns (u, sigma, v) with
    sigma descending; u columns for zero singular values are zeroed."""
    a = np.array(a, dtype=float)
    transposed = a.shape[0] < a.shape[1]
    if transposed:
        a = a.T
    n = a.shape[1]
    u = a.copy()
    v = np.eye(n)
    for _ in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = u[:, p] @ u[:, p]
                beta = u[:, q] @ u[:, q]
                gamma = u[:, p] @ u[:, q]
                if abs(gamma) <= tol * np.sqrt(alpha * beta):
                    continue
                rotated = True
                zeta = (beta - alpha) / (2.0 * gamma)
                if zeta == 0.0:
                    t = 1.0
                else:
                    t = np.sign(zeta) / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t
                up, uq = u[:, p].copy(), u[:, q].copy()
                u[:, p] = c * up - s * uq
                u[:, q] = s * up + c * uq
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        if not rotated:
            break
    else:
        raise ArithmeticError("Jacobi SVD did not converge")
    sigma = np.sqrt(np.einsum("ij,ij->j", u, u))
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    u = u[:, order]
    v = v[:, order]
    nonzero = sigma > 0.0
    u[:, nonzero] /= sigma[nonzero]
    u[:, ~nonzero] = 0.0
    if transposed:
        return v, sigma, u
    return u, sigma, v


def ca_fit(table: ContingencyTable) -> CaResult:
    """Fit the correspondence analysis of a contingency table.

    Requires at least two rows and two columns and strictly positive
    masses. A table exactly at independence comes back with zero axes,
    which is a valid (empty) result, not an error.
    """
    if len(table.row_labels) < 2 or len(table.col_labels) < 2:
        raise DegenerateTableError("need at least a 2x2 table")
    f = table.frequencies
    fi = f.sum(axis=1)
    fj = f.sum(axis=0)
    for label, mass in zip(table.row_labels, fi):
        if mass == 0.0:
            raise ZeroMassError("row", label)
    for label, mass in zip(table.col_labels, fj):
        if mass == 0.0:
            raise ZeroMassError("column", label)

    expected = np.outer(fi, fj)
    residuals = (f - expected) / np.sqrt(expected)
    u, sigma, v = _one_sided_jacobi_svd(residuals)

    keep = sigma * sigma >= EIGENVALUE_TOL
    sigma = sigma[keep]
    eigenvalues = sigma * sigma
    psi = u[:, keep] * sigma / np.sqrt(fi)[:, None]
    phi = v[:, keep] * sigma / np.sqrt(fj)[:, None]
    _canonicalize_signs(psi, phi, table.row_labels)

    return CaResult(
        row_labels=table.row_labels,
        col_labels=table.col_labels,
        eigenvalues=eigenvalues,
        row_coords=psi,
        col_coords=phi,
        row_masses=fi,
        col_masses=fj,
        total_inertia=float((residuals * residuals).sum()),
    )


def _canonicalize_signs(psi: np.ndarray, phi: np.ndarray, row_labels) -> None:
    for k in range(psi.shape[1]):
        magnitudes = np.abs(psi[:, k])
        top = magnitudes.max()
        lead = min(
            (i for i in range(len(row_labels)) if magnitudes[i] == top),
            key=lambda i: row_labels[i],
        )
        if psi[lead, k] > 0.0:
            psi[:, k] *= -1.0
            phi[:, k] *= -1.0


def project_supplementary_row(counts, result: CaResult) -> np.ndarray:
    """Project a row of counts over the fitted columns into factor space.

    Uses the transition formula with the row's own conditional profile:
    psi_k = (1/sqrt(lambda_k)) * sum_j (f_j|row) phi_jk. Only the
    retained axes are reported, so no division by a vanishing eigenvalue
    ever happens.
    """
    counts = np.asarray(counts, dtype=float)
    if counts.shape != (len(result.col_labels),):
        raise ShapeMismatchError(
            f"expected {len(result.col_labels)} column counts, got {counts.shape}"
        )
    total = counts.sum()
    if total <= 0.0:
        raise EmptySupplementaryError("supplementary row has no incidences")
    profile = counts / total
    return (profile @ result.col_coords) / np.sqrt(result.eigenvalues)


def project_supplementary_col(counts, result: CaResult) -> np.ndarray:
    """Dual of :func:`project_supplementary_row` for a column of counts."""
    counts = np.asarray(counts, dtype=float)
    if counts.shape != (len(result.row_labels),):
        raise ShapeMismatchError(
            f"expected {len(result.row_labels)} row counts, got {counts.shape}"
        )
    total = counts.sum()
    if total <= 0.0:
        raise EmptySupplementaryError("supplementary column has no incidences")
    profile = counts / total
    return (profile @ result.row_coords) / np.sqrt(result.eigenvalues)


def inertia_report(result: CaResult) -> list[tuple[int, float, float, float]]:
    """Rows of (axis, eigenvalue, percentage, cumulative percentage);
    empty when the table carries no inertia."""
    report = []
    cumulative = 0.0
    percentages = result.inertia_percentages
    for k, (lam, pct) in enumerate(zip(result.eigenvalues, percentages), 1):
        cumulative += pct
        report.append((k, float(lam), float(pct), cumulative))
    return report


def _fmt(x: float) -> str:
    return format(x, ".12g")


def write_coordinates_csv(
    result: CaResult,
    supplementary: list[tuple[str, np.ndarray]] = (),
    axes: int | None = None,
) -> str:
    """Coordinates as CSV rows (label, kind, axis1..axisK) covering the
    fitted rows, the fitted columns, and any supplementary projections."""
    k = result.n_axes if axes is None else min(axes, result.n_axes)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "kind", *(f"axis{i}" for i in range(1, k + 1))])
    for label, coords in zip(result.row_labels, result.row_coords):
        writer.writerow([label, "row", *(_fmt(c) for c in coords[:k])])
    for label, coords in zip(result.col_labels, result.col_coords):
        writer.writerow([label, "col", *(_fmt(c) for c in coords[:k])])
    for label, coords in supplementary:
        writer.writerow([label, "sup", *(_fmt(c) for c in coords[:k])])
    return buf.getvalue()


def write_inertia_csv(result: CaResult) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["axis", "eigenvalue", "percentage", "cumulative"])
    for axis, lam, pct, cum in inertia_report(result):
        writer.writerow([axis, _fmt(lam), _fmt(pct), _fmt(cum)])
    return buf.getvalue()
