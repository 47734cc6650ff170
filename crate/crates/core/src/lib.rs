//! Rooted lists and rooted orders for cover ideals of paths and chordal
//! graphs: construction of the ordered generating sets, enumeration of
//! minimal generators of ideal powers (fast pairwise characterization checked
//! against a brute-force oracle), linear-quotients certification, the
//! regularity formula, and a search over rooted lists of chordal graphs.

pub mod covers;
pub mod error;
pub mod explore;
pub mod graph;
pub mod lq;
pub mod monomial;
pub mod powers;
pub mod rooted;

pub use error::{Error, Result};
pub use explore::{explore, enumerate_rooted_lists, ExploreReport, ExploreSummary};
pub use graph::{diamond, Graph, GraphFile};
pub use lq::{has_linear_quotients, reg_formula, verify_main_theorem, verify_regularity, LqReport};
pub use monomial::{Monomial, MonomialSet};
pub use powers::{
    bad_pair_table, min_gens_power_brute, min_gens_power_pairs, s_fold_products, BadPairTable,
    Method, PowerGens,
};
pub use rooted::{
    compare_rooted, maximal_expression, rooted_list_chordal, rooted_list_path, sort_rooted,
    ChordalChooser, Expression, GeneratorList, Provenance,
};
