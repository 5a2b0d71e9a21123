"""Cone points, the reduced external activity complex, and its homotopy type."""

from __future__ import annotations

from dataclasses import dataclass

from . import bits
from .activity import absolute_elements
from .complexes import (
    SimplicialComplex,
    euler_characteristic,
    external_activity_complex,
    h_vector,
    strip_cone,
)
from .matroid import OrderedMatroid, coloops, has_intersecting_circuits, loops, remove_coloops


def predicted_cone_points(M: OrderedMatroid) -> int:
    """AEP + bar(AEA), plus both copies of every coloop."""
    aea, aep = absolute_elements(M)
    co = coloops(M)
    return aep | co | bits.barred(aea | co, M.n)


def reduced_complex(M: OrderedMatroid) -> SimplicialComplex:
    """Act with its cone points deleted; the ground set is the set of remaining vertices."""
    return strip_cone(external_activity_complex(M))


def predicted_reduced_ground(M: OrderedMatroid) -> int:
    """{e : e not AEP} + {bar e : e not AEA}, without coloops and without plain loops."""
    aea, aep = absolute_elements(M)
    keep = M.ground & ~coloops(M)
    return (keep & ~aep & ~loops(M)) | bits.barred(keep & ~aea, M.n)


@dataclass(frozen=True)
class Topology:
    kind: str  # "contractible-u31" or "sphere"
    dim: int | None = None

    def to_json(self) -> dict:
        if self.kind == "sphere":
            return {"class": "sphere", "dim": self.dim}
        return {"class": self.kind}


CONTRACTIBLE = "contractible-u31"


class TopologyInconsistency(RuntimeError):
    pass


def classify_topology(M: OrderedMatroid) -> Topology:
    """Contractible when two circuits meet (a U_{3,1} minor), otherwise a sphere.

    Coloops only add cone points, so the decision is made on the coloop-free
    part. The sphere dimension is rank - 1 of that part, and the dimension of
    the reduced complex must equal n + r - 1 - |AE| - 2 * #coloops.
    """
    core = remove_coloops(M)
    aea, aep = absolute_elements(M)
    ncol = bits.popcount(coloops(M))
    expected_dim = M.size + M.rank - 1 - bits.popcount(aea | aep) - 2 * ncol
    actual_dim = reduced_complex(M).facet_size - 1
    if expected_dim != actual_dim:
        raise TopologyInconsistency(f"reduced complex has dimension {actual_dim}, expected {expected_dim}")
    if has_intersecting_circuits(core):
        return Topology(CONTRACTIBLE)
    if actual_dim != core.rank - 1:
        raise TopologyInconsistency("disjoint-circuit matroid whose reduced complex is not of dimension r - 1")
    return Topology("sphere", core.rank - 1)


@dataclass(frozen=True)
class TopologyWitness:
    """Cheap invariants of the reduced complex: top h-entry and Euler characteristics."""

    h_top: int
    chi: int
    reduced_chi: int
    dim: int


def topology_witness(M: OrderedMatroid) -> TopologyWitness:
    K = reduced_complex(M)
    h = h_vector(K)
    chi, rchi = euler_characteristic(K)
    return TopologyWitness(h[-1], chi, rchi, K.facet_size - 1)


def embedding_images(M: OrderedMatroid) -> dict[int, int]:
    """Vertex map on non-loop, non-coloop elements: e if absolutely externally active, else bar e."""
    aea, _ = absolute_elements(M)
    domain = M.ground & ~loops(M) & ~coloops(M)
    return {
        e: (bits.bit(e) if aea & bits.bit(e) else bits.barred(bits.bit(e), M.n))
        for e in bits.elements(domain)
    }


@dataclass(frozen=True)
class EmbeddingReport:
    is_embedding: bool
    is_isomorphism: bool


def embedding_check(M: OrderedMatroid) -> EmbeddingReport:
    """Image of every basis lies in its reduced facet; equality everywhere means isomorphism."""
    image = embedding_images(M)
    K = reduced_complex(M)
    inside = True
    equal = set(image.values()) == set(bits.iter_bits(K.ground))
    for B, F in zip(M.bases, K.facets):
        img = 0
        for e in bits.elements(B):
            img |= image.get(e, 0)
        inside &= img & ~F == 0
        equal &= img == F
    return EmbeddingReport(inside, inside and equal)
