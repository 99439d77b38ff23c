"""Floating-point eigenstructure of weighted Laplacians.

Grouped eigendecompositions, spectral embeddings and the edge-isometry
check, effective resistances, Kirchhoff index, spanning-tree counts and
majorization. Everything here is numeric; the exact deciders in
``rigidity`` are the ground truth whenever both apply.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailureError,
    DisconnectingWeightsError,
    LengthMismatchError,
)
from .exactmat import det_exact
from .graphs import Graph, WeightVector, adjoint_apply, laplacian

DEFAULT_GROUP_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Grouped eigendecomposition of a symmetric PSD matrix.

    eigenvalues are the r distinct values (ascending, group means),
    projectors the corresponding orthogonal eigenprojectors, and bases
    orthonormal n x m_i bases of each eigenspace.
    """

    eigenvalues: tuple[float, ...]
    multiplicities: tuple[int, ...]
    projectors: tuple[np.ndarray, ...]
    bases: tuple[np.ndarray, ...]
    group_tol: float

    @property
    def r(self) -> int:
        return len(self.eigenvalues)

    @property
    def n(self) -> int:
        return self.projectors[0].shape[0]


def group_eigenvalues(evals: np.ndarray, group_tol: float) -> list[slice]:
    """Slices of consecutive (ascending) eigenvalues within the group gap."""
    gap = group_tol * max(1.0, float(np.max(np.abs(evals))) if len(evals) else 1.0)
    slices = []
    start = 0
    for i in range(1, len(evals)):
        if evals[i] - evals[i - 1] > gap:
            slices.append(slice(start, i))
            start = i
    slices.append(slice(start, len(evals)))
    return slices


def spectrum(Lw: np.ndarray, group_tol: float = DEFAULT_GROUP_TOL) -> Spectrum:
    """Full symmetric eigendecomposition with eigenvalue grouping."""
    Lw = np.asarray(Lw, dtype=float)
    try:
        evals, evecs = np.linalg.eigh(Lw)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailureError(str(exc)) from exc
    groups = group_eigenvalues(evals, group_tol)
    values, mults, projectors, bases = [], [], [], []
    for sl in groups:
        V = evecs[:, sl]
        values.append(float(np.mean(evals[sl])))
        mults.append(V.shape[1])
        projectors.append(V @ V.T)
        bases.append(V)
    return Spectrum(
        eigenvalues=tuple(values),
        multiplicities=tuple(mults),
        projectors=tuple(projectors),
        bases=tuple(bases),
        group_tol=group_tol,
    )


@dataclass(frozen=True)
class IsometryCheck:
    """Per nontrivial eigenspace: mean adjoint value and whether it is constant."""

    gammas: tuple[float, ...]
    constant: tuple[bool, ...]
    spreads: tuple[float, ...]
    tol: float

    @property
    def all_constant(self) -> bool:
        return all(self.constant)

    @property
    def gamma_anomalies(self) -> tuple[int, ...]:
        """1-based eigenspace indices whose gamma is not clearly positive.

        Edge-isometric embeddings should have gamma > 0; a vanishing value
        is anomalous and reported rather than asserted away.
        """
        return tuple(i + 2 for i, g in enumerate(self.gammas) if g <= 1e-12)


def edge_isometry_check(g: Graph, s: Spectrum, tol: float = 1e-8) -> IsometryCheck:
    """Check adjoint(E_i) for constancy on every nontrivial eigenspace.

    An eigenspace passes when max - min of its adjoint vector is at most
    tol * max(1, mean); gamma_i is the mean. The overall verdict (every
    eigenspace constant) is the floating-point edge-rigidity test.
    """
    gammas, constant, spreads = [], [], []
    for i in range(1, s.r):
        vec = adjoint_apply(g, s.projectors[i])
        mean = float(np.mean(vec))
        spread = float(np.max(vec) - np.min(vec))
        gammas.append(mean)
        spreads.append(spread)
        constant.append(spread <= tol * max(1.0, mean))
    return IsometryCheck(tuple(gammas), tuple(constant), tuple(spreads), tol)


@dataclass(frozen=True)
class Embedding:
    """Canonical spectral embedding onto one nontrivial eigenspace."""

    index: int  # 1-based eigenvalue group, 2..r
    coordinates: np.ndarray  # n rows, one per vertex

    @property
    def dimension(self) -> int:
        return self.coordinates.shape[1]

    def to_csv(self) -> str:
        header = "vertex," + ",".join(f"c{j + 1}" for j in range(self.dimension))
        rows = [header]
        for v, row in enumerate(self.coordinates):
            rows.append(str(v) + "," + ",".join(repr(float(x)) for x in row))
        return "\n".join(rows) + "\n"


def embedding(g: Graph, s: Spectrum, i: int) -> Embedding:
    """Rows of an orthonormal eigenbasis of the i-th eigenvalue group.

    i is 1-based with 2 <= i <= r (the trivial kernel group is excluded).
    The squared edge lengths of the embedding equal adjoint(E_i).
    """
    if not 2 <= i <= s.r:
        raise IndexError(f"eigenspace index {i} out of range 2..{s.r}")
    U = s.bases[i - 1]
    lengths = np.sum((U[[a for a, _ in g.edges]] - U[[b for _, b in g.edges]]) ** 2, axis=1)
    target = adjoint_apply(g, s.projectors[i - 1])
    if np.max(np.abs(lengths - target)) > 1e-8 * max(1.0, float(np.max(np.abs(target)))):
        raise ConvergenceFailureError("embedding lengths disagree with projector adjoint")
    return Embedding(index=i, coordinates=U)


# ---------------------------------------------------------------------------
# resistance / tree-count functionals
# ---------------------------------------------------------------------------

def _nontrivial_eigenvalues(g: Graph, w: WeightVector | None, tol: float) -> np.ndarray | None:
    """Ascending eigenvalues lambda_2..lambda_n, or None if w disconnects."""
    evals = np.linalg.eigvalsh(laplacian(g, w).astype(float))
    scale = max(1.0, float(evals[-1]))
    if evals[1] <= tol * scale:
        return None
    return evals[1:]


def effective_resistances(g: Graph, w: WeightVector | None = None, tol: float = 1e-9) -> np.ndarray:
    """Per-edge effective resistance z_e^T L(w)^+ z_e in canonical edge order.

    The pseudoinverse is taken on the complement of the known kernel
    (the all-ones vector), never by generic singular-value thresholding.
    """
    L = laplacian(g, w).astype(float)
    evals, evecs = np.linalg.eigh(L)
    scale = max(1.0, float(evals[-1]))
    if evals[1] <= tol * scale:
        raise DisconnectingWeightsError("weights disconnect the graph (rank < n - 1)")
    pinv = (evecs[:, 1:] / evals[1:]) @ evecs[:, 1:].T
    return adjoint_apply(g, pinv)


def kirchhoff_index(g: Graph, w: WeightVector | None = None, tol: float = 1e-9) -> float:
    """n * sum of reciprocal nontrivial eigenvalues; +inf when disconnected."""
    evals = _nontrivial_eigenvalues(g, w, tol)
    if evals is None:
        return math.inf
    return float(g.n * np.sum(1.0 / evals))


def weighted_tree_count(g: Graph, w: WeightVector | None = None) -> float:
    """Weighted spanning-tree count (1/n) * prod of nontrivial eigenvalues."""
    evals = np.linalg.eigvalsh(laplacian(g, w).astype(float))
    return float(np.prod(evals[1:]) / g.n)


def tree_count_exact(g: Graph) -> int:
    """Exact spanning-tree count: any cofactor of the integer Laplacian."""
    L = laplacian(g)
    return det_exact(L[1:, 1:])


def majorization_check(x, y, tol: float = 1e-9) -> bool:
    """Is x majorized by y? Descending convention.

    True when every top-k partial sum of x is at most the matching partial
    sum of y (within tol) and the totals agree (within tol).
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1:
        raise LengthMismatchError(f"got shapes {x.shape} and {y.shape}")
    xs = np.sort(x)[::-1].cumsum()
    ys = np.sort(y)[::-1].cumsum()
    if abs(xs[-1] - ys[-1]) > tol:
        return False
    return bool(np.all(xs <= ys + tol))
