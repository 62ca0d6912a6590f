"""Weight schemes, coboundary matrices, and Laplacian assembly.

The up, down and full Laplacians acting on i-cochains are assembled in
matrix form from the signed coboundary matrices ``D_i`` and the diagonal
weight matrices ``W_i``::

    L_i_up   = W_i^{-1} D_i^T W_{i+1} D_i
    L_i_down = D_{i-1} W_{i-1}^{-1} D_{i-1}^T W_i
    L_i      = L_i_up + L_i_down

Three weight schemes are supported.  ``combinatorial`` puts weight 1 on
every face (the classical higher-order Laplacian; at i = 0 up this is the
graph Laplacian).  ``normalized`` assigns weight 1 to every maximal face
and the degree -- the sum of the weights of the cofaces -- to every other
face, computed top-down by dimension; at i = 0 up this is the normalized
graph Laplacian, and in general the up spectrum lies in [0, i+2].
``custom`` takes an explicit positive weight per face; the helper
:func:`normalized_weight_map` produces the weighted-normalized maps (free
positive base weights on the facets, degrees below) in custom-map form.

i-faces with no coface have degree zero: they are excluded from the up
operator's domain (zero row, marked in ``domain_mask``) and each
contributes one zero eigenvalue, which keeps the zero-multiplicity counting
exactly right while avoiding any division by a zero degree.  Under the
normalized scheme such faces are maximal and therefore carry base weight 1,
so no weight is ever zero.

Everything here is a pure function of immutable inputs; matrices are
assembled sparse and densified at the end, which is comfortably fast at
the intended scale (up to a few thousand faces per dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np
import scipy.sparse as sp

from .core import Face, SimplicialComplex, boundary_sign, boundary_triples
from .errors import DimensionError, WeightError

COMBINATORIAL = "combinatorial"
NORMALIZED = "normalized"
CUSTOM = "custom"


@dataclass(frozen=True)
class WeightScheme:
    """Selects the weight function: combinatorial, normalized, or custom.

    ``custom`` carries an explicit map from face tuples to positive reals;
    it must cover every face of the complex it is used with (the weight of
    the empty face defaults to 1 when omitted).
    """

    kind: str
    custom: Mapping[Face, float] | None = None

    def __post_init__(self):
        if self.kind not in (COMBINATORIAL, NORMALIZED, CUSTOM):
            raise WeightError(f"unknown weight scheme kind {self.kind!r}")
        if self.kind == CUSTOM and self.custom is None:
            raise WeightError("custom scheme needs a weight map")

    @classmethod
    def combinatorial(cls) -> "WeightScheme":
        return cls(COMBINATORIAL)

    @classmethod
    def normalized(cls) -> "WeightScheme":
        return cls(NORMALIZED)

    @classmethod
    def from_map(cls, mapping: Mapping[Face, float]) -> "WeightScheme":
        return cls(CUSTOM, {tuple(k): float(v) for k, v in mapping.items()})


def normalized_weight_map(
    complex_: SimplicialComplex, facet_base: Mapping[Face, float] | None = None
) -> dict[Face, float]:
    """Weights of the (weighted) normalized Laplacian, as an explicit map.

    Every maximal face gets its base weight (1 unless overridden through
    ``facet_base``); every other face gets its degree, computed by
    descending dimension so that higher-dimensional weights are already
    known.  The empty face gets the sum of the vertex weights.
    """
    base = {}
    if facet_base is not None:
        for f, w in facet_base.items():
            f = tuple(sorted(f))
            if w <= 0:
                raise WeightError(f"facet base weight for {f!r} must be positive")
            base[f] = float(w)
    weights: dict[Face, float] = {}
    for d in range(complex_.dim, -2, -1):
        for f in complex_.faces_by_dim[d]:
            cofs = complex_.cofaces(f)
            if not cofs:
                weights[f] = base.get(f, 1.0)
            else:
                weights[f] = sum(weights[g] for g in cofs)
    return weights


def weight_map(complex_: SimplicialComplex, scheme: WeightScheme) -> dict[Face, float]:
    """Full face -> weight map for a scheme, validated positive."""
    if scheme.kind == COMBINATORIAL:
        key = ("wmap", COMBINATORIAL)
        if key not in complex_._memo:
            complex_._memo[key] = {f: 1.0 for f in complex_.all_faces()}
        return complex_._memo[key]
    if scheme.kind == NORMALIZED:
        key = ("wmap", NORMALIZED)
        if key not in complex_._memo:
            complex_._memo[key] = normalized_weight_map(complex_)
        return complex_._memo[key]
    out: dict[Face, float] = {}
    for f in complex_.all_faces():
        if f == ():
            out[f] = float(scheme.custom.get((), 1.0))
        else:
            try:
                out[f] = float(scheme.custom[f])
            except KeyError:
                raise WeightError(f"custom scheme is missing face {f!r}") from None
        if out[f] <= 0:
            raise WeightError(f"weight of face {f!r} must be positive, got {out[f]}")
    return out


@dataclass(frozen=True)
class WeightVector:
    """Diagonal of W_i in the canonical face order of dimension ``dim``.

    ``zero_degree`` marks the i-faces with no (i+1)-coface; under any
    scheme those faces fall outside the up operator's domain.
    """

    dim: int
    values: np.ndarray
    zero_degree: np.ndarray


def weight_vector(complex_: SimplicialComplex, i: int, scheme: WeightScheme) -> WeightVector:
    if not -1 <= i <= complex_.dim:
        raise DimensionError(f"weight vector dimension {i} out of range")
    wmap = weight_map(complex_, scheme)
    faces = complex_.faces_by_dim[i]
    values = np.array([wmap[f] for f in faces], dtype=float)
    zero_degree = np.array([len(complex_.cofaces(f)) == 0 for f in faces], dtype=bool)
    return WeightVector(i, values, zero_degree)


@dataclass(frozen=True)
class CoboundaryMatrix:
    """Signed incidence matrix of delta_i: rows S_{i+1}, columns S_i."""

    i: int
    matrix: sp.csr_matrix  # integer entries in {-1, 0, +1}


def coboundary_matrix(complex_: SimplicialComplex, i: int) -> CoboundaryMatrix:
    """D_i under the canonical ascending-vertex orientation.

    ``i = -1`` gives the all-ones column over the vertices; ``i = dim``
    gives a matrix with zero rows.  ``D_i @ D_{i-1} == 0`` holds in exact
    integer arithmetic.
    """
    if not -1 <= i <= complex_.dim:
        raise DimensionError(f"coboundary index {i} out of range -1..{complex_.dim}")
    key = ("cobound", i)
    if key not in complex_._memo:
        rows, cols, vals = [], [], []
        for r, c, s in boundary_triples(complex_, i):
            rows.append(r)
            cols.append(c)
            vals.append(s)
        shape = (complex_.n_faces(i + 1), complex_.n_faces(i))
        mat = sp.csr_matrix(
            (np.array(vals, dtype=np.int64), (rows, cols)), shape=shape, dtype=np.int64
        )
        complex_._memo[key] = CoboundaryMatrix(i, mat)
    return complex_._memo[key]


@dataclass(frozen=True)
class LaplacianMatrix:
    """A Laplacian with the metadata needed to interpret its spectrum.

    ``matrix`` is dense, indexed by the canonical order of the i-faces;
    ``weights`` is the diagonal of W_i; ``domain_mask`` is False on faces
    excluded from the up domain (no cofaces) -- their rows are zero and
    each contributes one zero eigenvalue.
    """

    i: int
    direction: str  # up | down | full
    scheme: WeightScheme
    matrix: np.ndarray
    weights: np.ndarray
    domain_mask: np.ndarray

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


def laplacian(
    complex_: SimplicialComplex, i: int, direction: str, scheme: WeightScheme
) -> LaplacianMatrix:
    """Assemble L_i^up / L_i^down / L_i in the canonical basis.

    Degenerate boundary cases are well defined rather than errors: the up
    operator at the top dimension and the down operator at i = -1 are zero
    maps, whose spectra are all zeros of length |S_i|.
    """
    if direction not in ("up", "down", "full"):
        raise ValueError(f"direction must be up/down/full, got {direction!r}")
    if not -1 <= i <= complex_.dim:
        raise DimensionError(f"laplacian dimension {i} out of range -1..{complex_.dim}")
    wmap = weight_map(complex_, scheme)
    faces = complex_.faces_by_dim[i]
    n = len(faces)
    w_i = np.array([wmap[f] for f in faces], dtype=float)
    mat = np.zeros((n, n))
    if direction in ("up", "full") and complex_.n_faces(i + 1) > 0:
        d_i = coboundary_matrix(complex_, i).matrix.astype(float)
        w_up = np.array([wmap[f] for f in complex_.faces_by_dim[i + 1]])
        up = (d_i.T.multiply(w_up).dot(d_i)).toarray() / w_i[:, None]
        mat += up
    if direction in ("down", "full") and i >= 0:
        d_im1 = coboundary_matrix(complex_, i - 1).matrix.astype(float)
        w_dn = np.array([wmap[f] for f in complex_.faces_by_dim[i - 1]])
        down = (d_im1.multiply(1.0 / w_dn).dot(d_im1.T)).toarray() * w_i[None, :]
        mat += down
    if direction == "up":
        mask = np.array([len(complex_.cofaces(f)) > 0 for f in faces], dtype=bool)
    else:
        mask = np.ones(n, dtype=bool)
    return LaplacianMatrix(i, direction, scheme, mat, w_i, mask)


def symmetrize(lap: LaplacianMatrix) -> np.ndarray:
    """Conjugate by W^{1/2}: same spectrum, symmetric to 1e-12 entrywise.

    The Laplacians are self-adjoint for the weighted inner product, so
    ``W^{1/2} L W^{-1/2}`` is symmetric positive semidefinite.
    """
    s = np.sqrt(lap.weights)
    sym = lap.matrix * s[:, None] / s[None, :]
    assert np.abs(sym - sym.T).max() <= 1e-12, "symmetrization drift exceeds 1e-12"
    return 0.5 * (sym + sym.T)


def entrywise_laplacian(
    complex_: SimplicialComplex, i: int, direction: str, scheme: WeightScheme
) -> np.ndarray:
    """Reference assembly straight from the entrywise operator formulas.

    Diagonal of the up operator is deg(F)/w(F); the off-diagonal entry for
    faces sharing a coface is the product of their boundary signs times
    w(coface)/w(row face).  The down operator mirrors this one dimension
    below, with the asymmetric factor w(col face)/w(shared face).  Used to
    cross-check the matrix-product assembly.
    """
    wmap = weight_map(complex_, scheme)
    faces = complex_.faces_by_dim[i]
    n = len(faces)
    out = np.zeros((n, n))
    if direction in ("up", "full"):
        for g in complex_.faces_by_dim.get(i + 1, []):
            subs = [(g[:k] + g[k + 1 :], -1 if k % 2 else 1) for k in range(len(g))]
            for fa, sa in subs:
                a = complex_.index(fa)
                out[a, a] += wmap[g] / wmap[fa]
                for fb, sb in subs:
                    if fb != fa:
                        out[a, complex_.index(fb)] += sa * sb * wmap[g] / wmap[fa]
    if direction in ("down", "full") and i >= 0:
        for fa in faces:
            a = complex_.index(fa)
            for k in range(len(fa)):
                e = fa[:k] + fa[k + 1 :]
                out[a, a] += wmap[fa] / wmap[e]
                se = boundary_sign(fa, e)
                for fb in complex_.cofaces(e):
                    if fb != fa and len(set(fa) & set(fb)) == len(fa) - 1:
                        b = complex_.index(fb)
                        out[a, b] += se * boundary_sign(fb, e) * wmap[fb] / wmap[e]
    return out
