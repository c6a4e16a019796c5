//! Classical and unitary group data, Adams-Johnson parameters, and the two
//! expansions of their twisted trace.
//!
//! The GL side ([`lhs_expansion`]) multiplies twisted Speh traces. The
//! transfer side ([`composite_expansion`]) recurses through the packet
//! bijection, one elementary block at a time. [`verify_main_identity`]
//! compares them exactly.

mod expand;
mod group;
pub mod grid;
mod param;

pub use expand::{
    composite_expansion, ell_v_from_clan, elementary_expansion, is_homogeneous, lhs_expansion, product,
    quasisplit_clan, transfer_of_involution, verify_main_identity, ElementaryBlock, Report, Status, WitnessRow,
};
pub use group::{kottwitz_sign, q_value, Case, GroupDatum, GroupFamily};
pub use param::{
    check_ordering, levi_quasisplit, std_compose, validate_aj, validated, AJParameter, Issue, LeviData,
    LeviFactor, SpehBlock, TailAtom, TailBlock, TailEps, Validated,
};
