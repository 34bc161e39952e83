"""Simplices inside the chain endomorphism semiring.

Fixing a set A of k chain values, the maps whose image lies inside A form a
subsemiring of order C(n + k - 1, k - 1), here called the k-simplex on A.
Its vertices are the k constant maps, its faces are the simplices on the
subsets of A, and its interior consists of the maps hitting every value of
A.  Grouping elements by how often they take one fixed vertex value slices
the simplex into layers; a vertex together with the layers of highest
multiplicity forms its discrete neighborhood, the radius-t ball around the
constant map in the layer metric.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from . import analysis
from .core import ChainEndo, OutOfRange, constant


@dataclass(frozen=True)
class SimplexSpec:
    """A chain size n and a nonempty vertex set inside 0..n-1."""

    n: int
    vertices: tuple[int, ...]

    def __post_init__(self):
        vertices = tuple(sorted(set(self.vertices)))
        object.__setattr__(self, "vertices", vertices)
        if self.n < 1:
            raise OutOfRange(f"chain size must be >= 1, got {self.n}")
        if not vertices:
            raise ValueError("vertex set must be nonempty")
        if vertices[0] < 0 or vertices[-1] >= self.n:
            raise OutOfRange(
                f"vertices {vertices} outside the chain 0..{self.n - 1}"
            )

    @property
    def k(self) -> int:
        """Number of vertices; the simplex has order C(n + k - 1, k - 1)."""
        return len(self.vertices)

    def vertex_constants(self) -> tuple[ChainEndo, ...]:
        return tuple(constant(self.n, v) for v in self.vertices)


def enumerate_simplex(spec: SimplexSpec) -> tuple[ChainEndo, ...]:
    """All maps with image inside the vertex set, in lexicographic order."""
    return tuple(
        ChainEndo._wrap(spec.n, values)
        for values in combinations_with_replacement(spec.vertices, spec.n)
    )


def interior(spec: SimplexSpec) -> tuple[ChainEndo, ...]:
    """Elements whose image is the whole vertex set."""
    want = spec.vertices
    return tuple(e for e in enumerate_simplex(spec) if e.image() == want)


def boundary(spec: SimplexSpec) -> tuple[ChainEndo, ...]:
    """Elements missing at least one vertex value."""
    want = spec.vertices
    return tuple(e for e in enumerate_simplex(spec) if e.image() != want)


def face(spec: SimplexSpec, vertices) -> SimplexSpec:
    """The sub-simplex on a nonempty subset of the vertices."""
    sub = tuple(sorted(set(vertices)))
    if not set(sub) <= set(spec.vertices):
        raise OutOfRange(f"{sub} is not a subset of {spec.vertices}")
    return SimplexSpec(spec.n, sub)


def proper_faces(spec: SimplexSpec) -> tuple[SimplexSpec, ...]:
    """Faces on the nonempty proper vertex subsets, smallest first."""
    result = []
    for size in range(1, spec.k):
        for sub in combinations(spec.vertices, size):
            result.append(SimplexSpec(spec.n, sub))
    return tuple(result)


def is_internal(spec: SimplexSpec) -> bool:
    """Neither chain endpoint is a vertex."""
    return 0 not in spec.vertices and (spec.n - 1) not in spec.vertices


@dataclass(frozen=True)
class LayerId:
    """Layer s of vertex index m: the value vertices[m] occurs s times."""

    spec: SimplexSpec
    m: int
    s: int

    def __post_init__(self):
        if not 0 <= self.m < self.spec.k:
            raise OutOfRange(f"vertex index {self.m} outside 0..{self.spec.k - 1}")
        if not 0 <= self.s <= self.spec.n:
            raise OutOfRange(f"layer index {self.s} outside 0..{self.spec.n}")


def layer(layer_id: LayerId) -> tuple[ChainEndo, ...]:
    """Elements taking the chosen vertex value exactly s times."""
    value = layer_id.spec.vertices[layer_id.m]
    return tuple(
        e
        for e in enumerate_simplex(layer_id.spec)
        if e.values.count(value) == layer_id.s
    )


def layers(spec: SimplexSpec, m: int) -> tuple[tuple[ChainEndo, ...], ...]:
    """All layers of one vertex, s = 0 first; they partition the simplex."""
    return tuple(layer(LayerId(spec, m, s)) for s in range(spec.n + 1))


def discrete_neighborhood(
    spec: SimplexSpec, m: int, t: int
) -> tuple[ChainEndo, ...]:
    """The vertex constant plus the t layers of highest multiplicity."""
    if not 1 <= t <= spec.n:
        raise OutOfRange(f"radius {t} outside 1..{spec.n}")
    members = {constant(spec.n, spec.vertices[m])}
    for s in range(spec.n - t, spec.n):
        members.update(layer(LayerId(spec, m, s)))
    return tuple(sorted(members))


@dataclass(frozen=True)
class RadiusScan:
    """Subsemiring verdicts for every neighborhood radius of one vertex.

    closed[t - 1] says whether the radius-t neighborhood is a subsemiring.
    least is the smallest radius that is one (the full simplex at t = n
    guarantees existence).  semiring_prefix is the largest t with all radii
    1..t closed, so it equals n exactly when no radius fails.
    """

    spec: SimplexSpec
    m: int
    closed: tuple[bool, ...]

    @property
    def least(self) -> int:
        return self.closed.index(True) + 1

    @property
    def semiring_prefix(self) -> int:
        prefix = 0
        for ok in self.closed:
            if not ok:
                break
            prefix += 1
        return prefix


def min_semiring_radius(spec: SimplexSpec, m: int) -> RadiusScan:
    """Scan every neighborhood radius of one vertex for closure."""
    verdicts = []
    for t in range(1, spec.n + 1):
        ok, _ = analysis.is_subsemiring(discrete_neighborhood(spec, m, t))
        verdicts.append(ok)
    return RadiusScan(spec, m, tuple(verdicts))


def nilpotent_in_neighborhood(spec: SimplexSpec, alpha: ChainEndo) -> bool:
    """Pointwise-descent test inside the least vertex's fixing neighborhood.

    The neighborhood in question consists of the simplex members fixing the
    least vertex a0.  A member passes when it is constantly a0 up to the
    second vertex a1 and drops strictly below the diagonal after a1; passing
    forces some power to collapse onto the constant a0.
    """
    a0 = spec.vertices[0]
    if alpha.n != spec.n or not set(alpha.image()) <= set(spec.vertices):
        raise ValueError(f"{alpha} is not a member of the simplex {spec}")
    if alpha.values[a0] != a0:
        raise ValueError(f"{alpha} does not fix the least vertex {a0}")
    if spec.k == 1:
        return alpha == constant(spec.n, a0)
    a1 = spec.vertices[1]
    if any(alpha.values[i] != a0 for i in range(a1 + 1)):
        return False
    return all(alpha.values[i] < i for i in range(a1 + 1, spec.n))
