"""Graph engine: cliques, intersection graphs, spectra, automorphisms."""
from .automorphism import (
    AutResult,
    CanonicalForm,
    SearchBudgetExceeded,
    automorphism_order,
    canonical_form,
    is_isomorphic,
)
from .cliques import CliqueFamily, dual_graph, intersection_graph, maximal_cliques
from .graph import (
    Graph,
    bits,
    cocktail_party,
    complement,
    complete,
    complete_multipartite,
    connected_components,
    cycle,
    degree_histogram,
    empty,
    hypercube,
    line_graph,
    mask_of,
    named_graph,
)
from .spectrum import Spectrum, SpectrumCertificationError, exact_rank, spectrum, srg_params

__all__ = [
    "AutResult",
    "CanonicalForm",
    "CliqueFamily",
    "Graph",
    "SearchBudgetExceeded",
    "Spectrum",
    "SpectrumCertificationError",
    "automorphism_order",
    "bits",
    "canonical_form",
    "cocktail_party",
    "complement",
    "complete",
    "complete_multipartite",
    "connected_components",
    "cycle",
    "degree_histogram",
    "dual_graph",
    "empty",
    "exact_rank",
    "hypercube",
    "intersection_graph",
    "is_isomorphic",
    "line_graph",
    "mask_of",
    "maximal_cliques",
    "named_graph",
    "spectrum",
    "srg_params",
]
