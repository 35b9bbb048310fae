"""Questionnaire reliability and construct-validity analysis.

Internal consistency (coefficient alpha), item correlation, symmetric
eigenvalue extraction by cyclic Jacobi rotations, and eigenvalue-above-one
retention with a scree series.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

SYMMETRY_TOL = 1e-10
JACOBI_TOL = 1e-12


class ZeroVarianceError(ValueError):
    """An item (or the total score) has no variance to analyze."""


@dataclass(frozen=True)
class ResponseMatrix:
    """Respondents by items score matrix; rectangular, complete, n >= 2."""

    data: np.ndarray
    items: tuple[str, ...]

    def __post_init__(self):
        data = np.asarray(self.data, dtype=float)
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "items", tuple(self.items))
        if data.ndim != 2:
            raise ValueError("response matrix must be 2-dimensional")
        n, k = data.shape
        if n < 2:
            raise ValueError(f"need at least 2 respondents, got {n}")
        if k != len(self.items):
            raise ValueError(f"{k} columns but {len(self.items)} item names")
        if not np.all(np.isfinite(data)):
            raise ValueError("response matrix contains missing or non-finite entries")

    @property
    def n_respondents(self) -> int:
        return self.data.shape[0]

    @property
    def n_items(self) -> int:
        return self.data.shape[1]


def load_response_csv(path: str) -> ResponseMatrix:
    """Read a comma-separated file with a header row of item names."""
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError("empty CSV file") from None
        items = tuple(name.strip() for name in header)
        rows = []
        for line_no, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(items):
                raise ValueError(
                    f"line {line_no}: expected {len(items)} values, got {len(row)}"
                )
            try:
                rows.append([float(cell) for cell in row])
            except ValueError:
                raise ValueError(f"line {line_no}: non-numeric value in {row}") from None
    if len(rows) < 2:
        raise ValueError("need at least 2 respondent rows")
    return ResponseMatrix(np.array(rows), items)


def cronbach_alpha(m: ResponseMatrix) -> float:
    """(k/(k-1)) * (1 - sum of item variances / variance of row sums).

    Sample variances (divisor n-1); the divisor convention cancels in
    the ratio, so the population convention gives the same alpha.
    """
    if m.n_items < 2:
        raise ValueError("alpha needs at least 2 items")
    item_vars = m.data.var(axis=0, ddof=1)
    total_var = m.data.sum(axis=1).var(ddof=1)
    if total_var == 0.0:
        raise ZeroVarianceError("total score has zero variance")
    k = m.n_items
    return (k / (k - 1.0)) * (1.0 - item_vars.sum() / total_var)


def correlation_matrix(m: ResponseMatrix) -> np.ndarray:
    """Pearson item correlations; symmetric with unit diagonal."""
    variances = m.data.var(axis=0, ddof=1)
    dead = [m.items[i] for i in np.flatnonzero(variances == 0.0)]
    if dead:
        raise ZeroVarianceError(f"zero-variance item(s): {', '.join(dead)}")
    corr = np.corrcoef(m.data, rowvar=False)
    corr = np.clip((corr + corr.T) / 2.0, -1.0, 1.0)
    np.fill_diagonal(corr, 1.0)
    return corr


def jacobi_eigh(a: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = 100):
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps run until the off-diagonal Frobenius norm drops below tol.
    Returns (eigenvalues descending, rotation matrix V with matching
    column order) so that V @ diag(w) @ V.T reconstructs the input.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2.0
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return a.diagonal().copy(), v

    def off_norm(mat):
        lower = np.tril(mat, -1)
        return np.sqrt(2.0 * np.sum(lower * lower))

    converged = False
    for _ in range(max_sweeps):
        if off_norm(a) < tol:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                # 2x2 symmetric Schur rotation zeroing a[p, q]
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.hypot(1.0, tau))
                else:
                    t = -1.0 / (-tau + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    if not converged and off_norm(a) >= tol:
        raise RuntimeError(f"Jacobi did not converge in {max_sweeps} sweeps")
    w = a.diagonal().copy()
    order = np.argsort(w)[::-1]
    return w[order], v[:, order]


@dataclass(frozen=True)
class EigenReport:
    """Eigenvalues sorted descending, the retained subset, and the scree series."""

    eigenvalues: tuple[float, ...]
    retained: tuple[float, ...]
    scree: tuple[tuple[int, float], ...]


def kaiser_retained(eigenvalues) -> tuple[float, ...]:
    """Eigenvalues strictly greater than one."""
    return tuple(w for w in eigenvalues if w > 1.0)


def eigenvalues_symmetric(a: np.ndarray) -> EigenReport:
    """Spectrum of a symmetric matrix with retention and scree series."""
    w, _ = jacobi_eigh(a)
    values = tuple(float(x) for x in w)
    return EigenReport(
        eigenvalues=values,
        retained=kaiser_retained(values),
        scree=tuple((i + 1, x) for i, x in enumerate(values)),
    )


def analyze(m: ResponseMatrix) -> dict:
    """Full reliability pipeline: alpha plus the correlation-matrix spectrum."""
    alpha = cronbach_alpha(m)
    report = eigenvalues_symmetric(correlation_matrix(m))
    return {
        "n_respondents": m.n_respondents,
        "n_items": m.n_items,
        "cronbach_alpha": alpha,
        "eigenvalues": list(report.eigenvalues),
        "retained": list(report.retained),
        "retained_count": len(report.retained),
        "scree": [list(pair) for pair in report.scree],
    }
