//! Graph minors toolkit: small dense graphs as bit rows, minor testing with
//! witnesses, cockade construction and recognition, isomorph-free
//! enumeration and exhaustive verification drivers.

pub mod canon;
pub mod cockades;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod minors;
pub mod named;

pub use canon::{are_isomorphic, canonical_form, canonical_graph, canonical_labeling, CanonicalForm};
pub use cockades::{
    build_cockade, enumerate_cockades, random_cockade, recognize_cockade, recognize_in_family,
    CockadeCertificate, CockadeFamily, CockadeSpec, Glue, Piece,
};
pub use enumerate::{enumerate_all, enumerate_min_degree, EnumFilter, MinDegreeEnumeration};
pub use error::{Error, Result};
pub use graph::{Graph, GraphStats, VertexSet, MAX_VERTICES};
pub use lemmas::{
    check_theorem, spot_check_theorem2, threshold, verify_lemma, verify_lemma8, Caps, LemmaReport,
    LemmaRun, Lemma8Options, Verdict, Witness,
};
pub use minors::{
    contains_subgraph, has_family_minor, has_minor, has_rooted_k4, is_k_connected, min_separator,
    vertex_connectivity, Family, FamilyWitness, MinorModel, RootedModel, SubgraphPattern,
};
pub use named::NamedGraph;
