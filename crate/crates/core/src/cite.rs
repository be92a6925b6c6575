//! Result identifiers carried by justification traces and JSJ diagnostics.

pub const VC_GROUP: &str = "Thm 1.1(1)";
pub const FREE_PRODUCT_OF_VC: &str = "Thm 1.1(2)";
pub const CONTAINS_Z3: &str = "Thm 1.1(3)";
pub const GENERIC_CASE: &str = "Thm 1.1(4)";

pub const GEOMETRIC_VC: &str = "Cor 1.2(1)";
pub const GEOMETRIC_FREE_PRODUCT: &str = "Cor 1.2(2)";
pub const GEOMETRIC_FLAT: &str = "Cor 1.2(3)";
pub const GEOMETRIC_GENERIC: &str = "Cor 1.2(4)";

pub const CRYSTALLOGRAPHIC: &str = "Lemma 2.1(3)";
pub const ACYLINDRICAL_BOUND: &str = "Cor 4.8";
pub const PRIME_SUM_WINDOW: &str = "Thm 4.9";

pub const TABLE1_SPHERICAL_BASE: &str = "Table 1 / Prop 5.3";
pub const TABLE1_HYPERBOLIC_BASE: &str = "Table 1 / Prop 5.5";
pub const TABLE1_EUCLIDEAN_BASE: &str = "Table 1 / Prop 5.6";
pub const TABLE1_HYPERBOLIC: &str = "Table 1 / Prop 6.1";

pub const BOUNDED_BASE: &str = "Lemma 5.9";
pub const TABLE2_EUCLIDEAN_BASE: &str = "Table 2 / Prop 5.10";
pub const TABLE2_HYPERBOLIC_BASE: &str = "Table 2 / Prop 5.11";
pub const TABLE2_HYPERBOLIC: &str = "Table 2 / Prop 6.1";

pub const TRIVIAL_PIECE: &str = "Lemma 7.1";
pub const TORUS_BUNDLE: &str = "Prop 7.2";
pub const DOUBLE_OF_K: &str = "Prop 7.3";
pub const PIECE_TYPES: &str = "Cor 7.4";

pub const JSJ_WINDOW: &str = "Thm 8.1";
pub const ACYLINDRICAL: &str = "Prop 8.2";
pub const FIBRATIONS_MATCH: &str = "Prop 8.2(e)";
pub const EIGEN_SLOPE_MATCH: &str = "Prop 8.2(f)";
pub const NON_GEOMETRIC_PRIME: &str = "Prop 9.1";
