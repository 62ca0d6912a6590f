import numpy as np
import pytest

from hodgelap.constructions import FamilySpec, generate
from hodgelap.core import from_facets


@pytest.fixture(scope="session")
def fixtures():
    """Small named complexes reused across test modules."""
    return {
        "filled-triangle": from_facets([[0, 1, 2]]),
        "hollow-triangle": from_facets([[0, 1], [1, 2], [0, 2]]),
        "k3-graph": from_facets([[0, 1], [0, 2], [1, 2]]),
        "p3-path": from_facets([[0, 1], [1, 2]]),
        "c4-cycle": from_facets([[0, 1], [1, 2], [2, 3], [0, 3]]),
        "k13-star": from_facets([[0, 1], [0, 2], [0, 3]]),
        "delta3": from_facets([[0, 1, 2, 3]]),
        "boundary-delta3": from_facets([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]),
        "two-triangles-shared-edge": from_facets([[0, 1, 2], [1, 2, 3]]),
        "two-triangles-shared-vertex": from_facets([[0, 1, 2], [2, 3, 4]]),
        "moebius": generate(FamilySpec("moebius-circuit")),
        "single-edge": from_facets([[0, 1]]),
    }


@pytest.fixture(scope="session")
def random_complexes():
    """Deterministic random complexes for property-style loops."""
    from hodgelap.corpus import random_complex

    rng = np.random.default_rng(12345)
    return [random_complex(rng, max_faces=40) for _ in range(12)]
