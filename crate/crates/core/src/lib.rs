//! The (24,12,8) binary Golay code built as the direct sum of a (24,8,8)
//! product code and a (24,4,12) repetition array code.
//!
//! - [`gf2`]: bit vectors and matrices over GF(2)
//! - [`component`]: the systematic (8,4,4) seed and its eight companions
//! - [`golay`]: direct-sum assembly and verification
//! - [`analysis`]: weight-4 tables, intersection properties, incidence matrix
//! - [`codec`]: encoder, ML and trellis decoders, channel simulation
//! - [`cli`]: the `golay` command line

pub mod analysis;
pub mod cli;
pub mod codec;
pub mod component;
pub mod error;
pub mod gf2;
pub mod golay;

pub use analysis::{incidence_matrix, table1, to_decimal, verify_properties, Weight4Table};
pub use codec::{
    build_trellis, decode_ml, decode_trellis, encode, simulate_bsc, DecodeResult, SimulationStats,
    Trellis,
};
pub use component::{
    apply_permutation, build_g7_g8, build_systematic, check_permutation_criteria,
    check_weight4_distinct, enumerate_nonsystematic_companions, enumerate_valid_permutations,
    validate_g78_choices, weight4_codewords, Code844, G78Choices, ParitySubmatrix,
    PermutationIndex,
};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector};
pub use golay::{
    build_array_c, build_array_c_prime, build_variant, check_forney_equivalence,
    check_turyn_equivalence, direct_sum, verify_golay, ConstructionReport, GolayCode,
};
