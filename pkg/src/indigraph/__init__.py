"""Independence graphs of finite groups.

Build groups from multiplication tables or named recipes, enumerate their
minimal generating sets, construct the independence graph (two elements are
adjacent when some minimal generating set contains both), its rank-u and
induced variants and the generating-tuple swap graph, analyze those graphs
exactly (connectivity, planarity with certificates, clique and independence
numbers, Hamiltonicity, complete-multipartite recognition), and run a
registry of verification checks over a catalog of groups.
"""

from ._kernels import IS_COMPILED
from .analysis import (
    DegreeProfile,
    GraphReport,
    PlanarityCertificate,
    analyze_graph,
    classify_kuratowski,
    clique_number,
    components,
    degree_profile,
    hamiltonian_cycle,
    independence_number,
    is_connected,
    is_planar,
    recognize_complete_multipartite,
    validate_embedding,
)
from .catalog import (
    CatalogEntry,
    catalog_entry,
    default_catalog,
    import_cayley,
    load_catalog_file,
)
from .errors import (
    BudgetExceeded,
    CatalogError,
    ClassDegreeMismatch,
    IndigraphError,
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotNormal,
    OrderTooLarge,
    PreconditionViolated,
    UnknownRecipe,
)
from .gensets import (
    MinGenEnumeration,
    enumerate_min_gen_sets,
    is_generating,
    is_minimal_generating,
    rank_bounds,
    relative_rank,
    replacement_witness,
)
from .graphs import (
    IndependenceGraph,
    VertexSupports,
    build_graph,
    build_swap_graph,
    edge_test,
    vertex_supports,
)
from .groups import (
    FiniteGroup,
    StructureFlags,
    Subgroup,
    class_partition,
    closure,
    element_order,
    frattini,
    group_from_cayley_table,
    quotient,
    structure_flags,
    subgroup_lattice,
)
from .recipes import make_named_group, resolve_group
from .verify import CHECK_IDS, CheckOutcome, VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CHECK_IDS",
    "CatalogEntry",
    "CatalogError",
    "CheckOutcome",
    "ClassDegreeMismatch",
    "DegreeProfile",
    "FiniteGroup",
    "GraphReport",
    "IS_COMPILED",
    "IndependenceGraph",
    "IndigraphError",
    "MalformedTable",
    "MinGenEnumeration",
    "NoIdentity",
    "NoInverse",
    "NotAssociative",
    "NotNormal",
    "OrderTooLarge",
    "PlanarityCertificate",
    "PreconditionViolated",
    "StructureFlags",
    "Subgroup",
    "UnknownRecipe",
    "VerificationReport",
    "VertexSupports",
    "analyze_graph",
    "build_graph",
    "build_swap_graph",
    "catalog_entry",
    "class_partition",
    "classify_kuratowski",
    "clique_number",
    "closure",
    "components",
    "default_catalog",
    "degree_profile",
    "edge_test",
    "element_order",
    "enumerate_min_gen_sets",
    "frattini",
    "group_from_cayley_table",
    "hamiltonian_cycle",
    "import_cayley",
    "independence_number",
    "is_connected",
    "is_generating",
    "is_minimal_generating",
    "is_planar",
    "load_catalog_file",
    "make_named_group",
    "quotient",
    "rank_bounds",
    "recognize_complete_multipartite",
    "relative_rank",
    "replacement_witness",
    "resolve_group",
    "run_suite",
    "structure_flags",
    "subgroup_lattice",
    "validate_embedding",
    "vertex_supports",
    "__version__",
]
