"""Self-contained Hermitian eigensolver (cyclic complex Jacobi) and spectral helpers.

All dense spectral work in the package goes through this module so that the
numerical engine is a single, auditable piece of code.  Accuracy at the sizes
handled here (N <= 24) is ~1e-13 relative.
"""

import numpy as np

# convergence: every off-diagonal magnitude below OFF_TOLERANCE * ||A||_F
OFF_TOLERANCE = 1e-14
MAX_SWEEPS = 100
# eigenvalues of nominally PSD matrices above -NEG_CLAMP are clamped to zero;
# anything more negative means the input was not PSD and is treated as an error
NEG_CLAMP = 1e-12
# resolution floor of the Gram-matrix route to singular values: eigenvalues of
# A*A below GRAM_NOISE * max are indistinguishable from zero and reported as 0,
# otherwise square roots would inflate them to ~1e-7 * s_max phantom values
GRAM_NOISE = 1e-13


class JacobiError(RuntimeError):
    pass


def hermitian_eigh(a, off_tolerance=OFF_TOLERANCE, max_sweeps=MAX_SWEEPS):
    """Eigendecomposition A = V diag(w) V* of a Hermitian matrix.

    Cyclic Jacobi with complex rotations.  Returns (w, v) with w real and
    sorted descending, v unitary with deterministically fixed column phases.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError("expected a square matrix")
    a = (a + a.conj().T) / 2.0
    v = np.eye(n, dtype=complex)
    if n == 1:
        return np.array([a[0, 0].real]), v

    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v
    thresh = off_tolerance * scale

    for _ in range(max_sweeps):
        off = np.abs(np.triu(a, 1)).max()
        if off <= thresh:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= thresh:
                    continue
                phase = apq / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = 1.0 / (abs(tau) + np.sqrt(1.0 + tau * tau))
                if tau < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # U = diag(1, conj(phase)) followed by the real rotation
                u = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                a[:, [p, q]] = a[:, [p, q]] @ u
                a[[p, q], :] = u.conj().T @ a[[p, q], :]
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, [p, q]] = v[:, [p, q]] @ u
    else:
        if np.abs(np.triu(a, 1)).max() > thresh:
            raise JacobiError(f"no convergence after {max_sweeps} sweeps")

    w = a.diagonal().real.copy()
    order = np.argsort(-w, kind="stable")
    w = w[order]
    v = v[:, order]
    return w, _fix_phases(v)


def _fix_phases(v):
    """Multiply each column by a unit phase so its largest entry is real positive."""
    for j in range(v.shape[1]):
        col = v[:, j]
        k = int(np.argmax(np.abs(col)))
        mag = abs(col[k])
        if mag > 0:
            v[:, j] = col * (np.conj(col[k]) / mag)
    return v


def clamp_psd_eigenvalues(w):
    """Zero out small negative eigenvalues of a nominally PSD matrix."""
    w = np.asarray(w, dtype=float)
    floor = -NEG_CLAMP * max(1.0, float(w.max(initial=0.0)))
    if w.min(initial=0.0) < floor:
        raise JacobiError(f"matrix is not positive semidefinite (eigenvalue {w.min()})")
    return np.maximum(w, 0.0)


def clean_gram_eigenvalues(w):
    w = clamp_psd_eigenvalues(w)
    w[w < GRAM_NOISE * w.max(initial=0.0)] = 0.0
    return w


def gram_singular_values(a):
    """Singular values of a general complex matrix, descending.

    Hermitian Jacobi eigendecomposition of A*A, then square roots.
    """
    a = np.asarray(a, dtype=complex)
    w, _ = hermitian_eigh(a.conj().T @ a)
    return np.sqrt(clean_gram_eigenvalues(w))


def gram_svd(a, truncate=1e-12):
    """Truncated SVD (u, s, vh) of a general complex matrix via the Gram matrix.

    Keeps singular values s > truncate * s_max; u is reconstructed as A v / s.
    """
    a = np.asarray(a, dtype=complex)
    w, v = hermitian_eigh(a.conj().T @ a)
    s = np.sqrt(clean_gram_eigenvalues(w))
    if s.size == 0 or s[0] == 0.0:
        return (np.zeros((a.shape[0], 0), dtype=complex),
                np.zeros(0),
                np.zeros((0, a.shape[1]), dtype=complex))
    keep = s > truncate * s[0]
    s = s[keep]
    v = v[:, keep]
    u = (a @ v) / s
    return u, s, v.conj().T


def psd_power(a, p):
    """Spectral power A^p of a Hermitian PSD matrix."""
    w, v = hermitian_eigh(a)
    w = clamp_psd_eigenvalues(w)
    if p < 1.0:
        # 0^negative-free: fractional powers of exact zeros stay zero
        powered = np.where(w > 0.0, w, 0.0) ** p
    else:
        powered = w ** p
    return (v * powered) @ v.conj().T


def hermitian_expm(a, factor=1.0):
    """exp(factor * A) for Hermitian A via the eigendecomposition."""
    w, v = hermitian_eigh(a)
    return (v * np.exp(factor * w)) @ v.conj().T
