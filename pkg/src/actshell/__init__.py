"""External activity complexes of ordered matroids."""

from .activity import (
    BasisActivity,
    TuttePolynomial,
    absolute_elements,
    activities,
    basis_activity,
    crapo_partition_check,
    tutte_polynomial,
)
from .complexes import (
    ShellingReport,
    SignedVertex,
    SimplicialComplex,
    check_orders,
    cone_points,
    euler_characteristic,
    external_activity_complex,
    f_vector,
    h_vector,
    independence_complex,
    minimal_nonfaces,
    restriction_sets_predicted,
    shelling_check,
    verify_stanley_reisner,
)
from .errors import MatroidError
from .matroid import (
    OrderedMatroid,
    circuits,
    coloops,
    contract,
    delete,
    dual,
    from_bases,
    from_graph,
    fundamental_circuit,
    fundamental_cocircuit,
    has_intersecting_circuits,
    has_u31_minor,
    loops,
    uniform,
    with_order,
)
from .orders import (
    BasisPoset,
    build_poset,
    extension_orders,
    hasse,
    is_linear_extension,
    leq_ext,
    leq_extint,
    leq_int,
    linear_extensions,
)
from .topology import Topology, classify_topology, embedding_check, reduced_complex

__version__ = "0.1.0"
