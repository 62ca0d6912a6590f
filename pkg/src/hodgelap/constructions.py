"""Generators for the named families and the complex-building operations.

Families with closed-form reference spectra:

* ``simplex`` -- full complex on n vertices; the i-up spectrum of the
  normalized operator is n/(n-i-1) with multiplicity C(n-1, i+1) plus
  zeros with multiplicity C(n-1, i).
* ``circuit`` -- orientable i-circuit of length m, realized with an
  (i-1)-vertex center and an m-vertex ring: the faces are
  {centers} + {u_j, u_j+1 mod m}, so consecutive faces share an
  (i-1)-face and non-consecutive ones only the center.  The i-down
  spectrum is {i - cos(2 pi j / m)}.
* ``path`` -- same construction without the wraparound; the i-down
  spectrum is {i + cos(pi k / m) : k = 0..m-1}.  (Stated equivalently as
  i - cos(pi k / m) over k = 1..m: the trace, which must equal i*m + 1,
  pins the k range; the length-1 path is a single simplex with down
  spectrum {i+1}.)
* ``star`` -- m faces through one common (i-1)-face; the i-down spectrum
  is i with multiplicity m-1 and i+1 once (no zeros).
* ``moebius-circuit`` -- the 5-vertex Moebius band (triangles
  {j, j+1, j+2 mod 5}), the canonical non-orientable 2-circuit of odd
  length 5; its 2-down spectrum is {2 + cos(2 pi j / 5)}.

For non-orientable circuits of length m the shifted-basis argument gives
eigenvalues i - cos((2j+1) pi / m): for odd m this equals the
i + cos(2 pi j / m) form, and it is what the Moebius fixture realizes.
Graph cycles (i = 1) are always orientable, so no non-orientable family
exists there.

Building operations: combinatorial k-wedge (gluing along one identified
k-face), join, cone, motif duplication, and the direct product of graphs.
Each returns the relabeling it performed alongside the complex, so tests
can trace faces through the construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, cos, pi
from typing import Mapping

from .core import (
    Face,
    Motif,
    SimplicialComplex,
    closure_of,
    closure_star_link,
    from_facets,
    motif as make_motif,
)
from .errors import (
    DimensionError,
    FamilyParameterError,
    InvalidMotifError,
    UnknownFaceError,
)
from .spectra import Spectrum

FAMILIES = ("simplex", "circuit", "path", "star", "moebius-circuit")


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance: simplex(n) or an (i, m)-parameterized chain.

    For ``simplex`` the optional ``i`` selects the operator order that
    :func:`reference_spectrum` reports (the complex itself only needs n).
    """

    family: str
    n: int | None = None
    i: int | None = None
    m: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise FamilyParameterError(f"unknown family {self.family!r}")
        if self.family == "simplex":
            if self.n is None or self.n < 1:
                raise FamilyParameterError("simplex needs n >= 1")
        elif self.family == "moebius-circuit":
            if self.i not in (None, 2) or self.m not in (None, 5):
                if self.i == 1:
                    raise FamilyParameterError(
                        "every graph cycle is orientable; there is no "
                        "non-orientable circuit at i = 1"
                    )
                raise FamilyParameterError(
                    "the moebius-circuit fixture is fixed at i = 2, m = 5"
                )
        else:
            if self.i is None or self.i < 1:
                raise FamilyParameterError(f"{self.family} needs i >= 1")
            if self.m is None:
                raise FamilyParameterError(f"{self.family} needs a length m")
            if self.family == "circuit" and self.m < 3:
                raise FamilyParameterError("circuit needs m >= 3")
            if self.family in ("path", "star") and self.m < 1:
                raise FamilyParameterError(f"{self.family} needs m >= 1")


def generate(spec: FamilySpec) -> SimplicialComplex:
    """Build the complex of a family instance."""
    if spec.family == "simplex":
        return from_facets([list(range(spec.n))])
    if spec.family == "moebius-circuit":
        return from_facets([[j % 5, (j + 1) % 5, (j + 2) % 5] for j in range(5)])
    i, m = spec.i, spec.m
    centers = list(range(i - 1))
    if spec.family == "circuit":
        ring = [i - 1 + k for k in range(m)]
        faces = [centers + [ring[j], ring[(j + 1) % m]] for j in range(m)]
    elif spec.family == "path":
        ring = [i - 1 + k for k in range(m + 1)]
        faces = [centers + [ring[j], ring[j + 1]] for j in range(m)]
    else:  # star: common (i-1)-face plus m apexes
        shared = list(range(i))
        faces = [shared + [i + k] for k in range(m)]
    return from_facets(faces)


def reference_spectrum(spec: FamilySpec) -> Spectrum:
    """Closed-form spectrum of a family instance.

    For circuit/path/star/moebius this is the i-down spectrum at the
    family's own i; for the simplex it is the i-up spectrum at ``spec.i``.
    """
    if spec.family == "simplex":
        n, i = spec.n, spec.i
        if i is None or not -1 <= i <= n - 1:
            raise FamilyParameterError(f"simplex spectrum needs -1 <= i <= {n - 1}")
        mult = comb(n - 1, i + 1)
        zeros = comb(n - 1, i + 1 - 1) if i >= 0 else 0
        values = [0.0] * zeros
        if mult:
            values += [n / (n - i - 1)] * mult
        return Spectrum.from_values(values)
    if spec.family == "moebius-circuit":
        return Spectrum.from_values([2.0 + cos(2 * pi * j / 5) for j in range(5)])
    i, m = spec.i, spec.m
    if spec.family == "circuit":
        values = [i - cos(2 * pi * j / m) for j in range(m)]
    elif spec.family == "path":
        values = [i + cos(pi * k / m) for k in range(m)]
    else:  # star
        values = [float(i)] * (m - 1) + [float(i + 1)]
    return Spectrum.from_values(values)


def nonorientable_circuit_spectrum(i: int, m: int) -> Spectrum:
    """i-down spectrum of a non-orientable i-circuit of length m.

    The twisted shift basis gives i - cos((2j+1) pi / m); for odd m this is
    the multiset {i + cos(2 pi j / m)}.
    """
    return Spectrum.from_values([i - cos((2 * j + 1) * pi / m) for j in range(m)])


# ---------------------------------------------------------------------------
# wedge / join / cone
# ---------------------------------------------------------------------------


def wedge(
    k1: SimplicialComplex, k2: SimplicialComplex, f1: Face, f2: Face
) -> tuple[SimplicialComplex, dict[int, int]]:
    """Combinatorial k-wedge: disjoint union with ``f2`` identified to ``f1``.

    Vertices of ``f2`` map onto those of ``f1`` in ascending order; the
    remaining vertices of ``k2`` get fresh labels above ``k1``.  Returns the
    wedge and the full old-to-new vertex map for ``k2``.
    """
    f1, f2 = tuple(sorted(f1)), tuple(sorted(f2))
    if len(f1) != len(f2):
        raise DimensionError("wedge faces must share a dimension")
    if f1 not in k1 or f2 not in k2:
        raise UnknownFaceError("wedge faces must belong to their complexes")
    fresh = max(k1.vertices(), default=-1) + 1
    relabel = dict(zip(f2, f1))
    for v in k2.vertices():
        if v not in relabel:
            relabel[v] = fresh
            fresh += 1
    faces = set(k1.all_faces())
    faces.update(
        tuple(sorted(relabel[v] for v in f))
        for f in k2.all_faces()
    )
    return SimplicialComplex(faces), relabel


def join(
    k1: SimplicialComplex, k2: SimplicialComplex
) -> tuple[SimplicialComplex, dict[int, int]]:
    """Join: every union of a face of ``k1`` with a shifted face of ``k2``.

    ``k2`` is relabeled above the largest vertex of ``k1`` (the classical
    cardinality shift, made collision-safe for non-contiguous labels).
    """
    shift = max(k1.vertices(), default=-1) + 1
    relabel = {v: v + shift for v in k2.vertices()}
    faces = set()
    for fa in k1.all_faces():
        for fb in k2.all_faces():
            faces.add(fa + tuple(relabel[v] for v in fb))
    return SimplicialComplex(faces), relabel


def cone(k: SimplicialComplex) -> tuple[SimplicialComplex, int]:
    """Cone: join with a single fresh apex vertex (labels of ``k`` kept)."""
    apex = max(k.vertices(), default=-1) + 1
    faces = set(k.all_faces())
    faces.update(f + (apex,) for f in k.all_faces())
    return SimplicialComplex(faces), apex


def split_join_face(face: Face, shift: int) -> tuple[Face, Face]:
    """Decompose a face of a join into its two factors (second unshifted)."""
    left = tuple(v for v in face if v < shift)
    right = tuple(v - shift for v in face if v >= shift)
    return left, right


def product_weight_map(
    joined: SimplicialComplex,
    shift: int,
    w1: Mapping[Face, float],
    w2: Mapping[Face, float],
) -> dict[Face, float]:
    """Product weights on a join: w(F1 * F2) = w1(F1) * w2(F2)."""
    out = {}
    for f in joined.all_faces():
        a, b = split_join_face(f, shift)
        out[f] = w1[a] * w2[b]
    return out


@dataclass(frozen=True)
class JoinWeighting:
    """Dimension-graded scale factors (p, q) for tensor-product weights.

    The join of two normalized operators stays normalized exactly when
    p(i+1)/p(i) + q(j+1)/q(j) = 1 for all valid i, j.
    """

    p: Mapping[int, float]
    q: Mapping[int, float]

    def is_normalized_for(self, d1: int, d2: int, tol: float = 1e-12) -> bool:
        for i in range(-1, d1):
            for j in range(-1, d2):
                lhs = self.p[i + 1] / self.p[i] + self.q[j + 1] / self.q[j]
                if abs(lhs - 1.0) > tol:
                    return False
        return True


# ---------------------------------------------------------------------------
# motif duplication
# ---------------------------------------------------------------------------


def duplicate_motif(
    k: SimplicialComplex, sigma: Motif | tuple[int, ...]
) -> tuple[SimplicialComplex, dict[int, int]]:
    """Duplicate a motif: add a primed copy glued through the motif's link.

    For every face of ``k`` made of motif vertices (at least one) and link
    vertices, the face with the motif part primed is added.  The closed
    stars of the motif and of its primed copy are isomorphic in the result;
    this is asserted.  Returns the duplicated complex and the map from
    motif vertices to their primed labels.
    """
    sig = sigma if isinstance(sigma, Motif) else make_motif(k, sigma)
    vset = set(sig.vertices)
    link_vertices = set(sig.link.vertices())
    fresh = max(k.vertices()) + 1
    primed = {v: fresh + rank for rank, v in enumerate(sorted(vset))}
    faces = set(k.all_faces())
    for f in k.all_faces():
        fs = set(f)
        if fs & vset and fs <= vset | link_vertices:
            faces.add(tuple(sorted(primed.get(v, v) for v in f)))
    dup = SimplicialComplex(faces)
    image = {
        tuple(sorted(primed.get(v, v) for v in f))
        for f in closure_of(sig.star).all_faces()
    }
    _, st_primed, _ = closure_star_link(dup, [(primed[v],) for v in sorted(vset)])
    if set(closure_of(st_primed).all_faces()) != image:
        raise InvalidMotifError("duplication failed: primed star is not isomorphic")
    return dup, primed


# ---------------------------------------------------------------------------
# direct product of graphs
# ---------------------------------------------------------------------------


def cartesian_product(
    g1: SimplicialComplex, g2: SimplicialComplex
) -> tuple[SimplicialComplex, dict[tuple[int, int], int]]:
    """Direct product of two graphs, as a 1-dimensional complex.

    Vertices are the pairs (u, v); (u, v) ~ (u', v) when u ~ u' and
    (u, v) ~ (u, v') when v ~ v'.  Returns the product and the pair-to-id
    map (ids follow the lexicographic pair order).
    """
    if g1.dim > 1 or g2.dim > 1:
        raise DimensionError("graph product needs 1-dimensional inputs")
    v1, v2 = g1.vertices(), g2.vertices()
    pair_id = {
        (u, v): k for k, (u, v) in enumerate((u, v) for u in v1 for v in v2)
    }
    faces = [(k,) for k in pair_id.values()]
    for (a, b) in g1.faces_by_dim.get(1, []):
        for v in v2:
            faces.append(tuple(sorted((pair_id[(a, v)], pair_id[(b, v)]))))
    for (a, b) in g2.faces_by_dim.get(1, []):
        for u in v1:
            faces.append(tuple(sorted((pair_id[(u, a)], pair_id[(u, b)]))))
    return closure_of(faces), pair_id


def product_tensor_weight_map(
    product: SimplicialComplex,
    pair_id: Mapping[tuple[int, int], int],
    g1: SimplicialComplex,
    g2: SimplicialComplex,
    w1: Mapping[Face, float],
    w2: Mapping[Face, float],
    p_ratio: float = 0.5,
    q_ratio: float = 0.5,
) -> dict[Face, float]:
    """Tensor-product weights on a graph product.

    Vertex (u, v) gets w1(u) * w2(v); an edge in the first direction gets
    p_ratio * w1(uu') * w2(v), one in the second q_ratio * w1(u) * w2(vv').
    With normalized factor weights and p_ratio + q_ratio = 1 the resulting
    operator is again normalized.
    """
    id_pair = {k: uv for uv, k in pair_id.items()}
    out: dict[Face, float] = {}
    for (k,) in product.faces_by_dim[0]:
        u, v = id_pair[k]
        out[(k,)] = w1[(u,)] * w2[(v,)]
    for (a, b) in product.faces_by_dim.get(1, []):
        (u1, v1), (u2, v2) = id_pair[a], id_pair[b]
        if v1 == v2:
            out[(a, b)] = p_ratio * w1[tuple(sorted((u1, u2)))] * w2[(v1,)]
        else:
            out[(a, b)] = q_ratio * w1[(u1,)] * w2[tuple(sorted((v1, v2)))]
    out[()] = sum(out[(k,)] for (k,) in product.faces_by_dim[0])
    return out
