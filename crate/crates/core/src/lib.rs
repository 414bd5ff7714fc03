//! Linear complementary dual (LCD) abelian codes over finite fields.
//!
//! An abelian code is an ideal of a group algebra `F[G]` with `G` finite
//! abelian. For `F = GF(p^nu)` (Euclidean duality) or `F = GF(p^(2 nu))`
//! (Hermitian duality) the number of LCD abelian codes is `2^(r_one + r_two)`,
//! where the exponent counts self-paired and paired cyclotomic classes of
//! the `p'`-part of `G`.
//!
//! - [`group`], [`arith`]: finite abelian groups and the number theory
//!   behind them.
//! - [`cyclotomic`]: cyclotomic classes, their types, and closed forms for
//!   the exponent.
//! - [`counting`]: code counts and per-order tables.
//! - [`field`], [`linalg`], [`algebra`]: exact arithmetic and an exhaustive
//!   ideal enumerator used to check the counts on small cases.
//! - [`cli`]: the `abelian-lcd` command line.

pub mod algebra;
pub mod arith;
pub mod cli;
pub mod counting;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod group;
pub mod linalg;

pub use algebra::{
    build_algebra, verify_counts, Capacity, GroupAlgebra, IdealCode, VerificationReport,
};
pub use counting::{
    count_cyclic_lcd, count_lcd, generate_table, CountReport, OrderFilter, TableRow,
};
pub use cyclotomic::{
    classify, ClassType, CyclotomicClass, DualityContext, RCounts, TypedPartition, Variant,
};
pub use error::{Error, Result};
pub use field::{build_field, FieldDescriptor, FieldElement};
pub use group::{abelian_groups_of_order, parse_group_spec, AbelianGroup, GroupElement};
pub use linalg::{null_space, rank, rref, stacked_rank, EchelonBasis, GfMatrix};
