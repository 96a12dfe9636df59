//! Direct sum of the (24,8,8) and (24,4,12) array codes.
//!
//! The generator stacks `G2 ⊗ G1` (with `G2` the (3,2,2) parity-check
//! generator) over `(1 1 1) ⊗ G1'`, so every codeword has the form
//! `|a+x|b+x|a+b+x|` with `a, b` in the seed and `x` in the companion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::component::{
    build_g7_g8, build_systematic, check_weight4_distinct, enumerate_nonsystematic_companions,
    Code844, ParitySubmatrix,
};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

pub const N: usize = 24;
pub const K: usize = 12;

/// Weight distribution of the extended Golay code.
pub const GOLAY_WEIGHTS: [(usize, usize); 5] = [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)];

pub fn golay_weight_distribution() -> BTreeMap<usize, usize> {
    GOLAY_WEIGHTS.into_iter().collect()
}

fn spc_generator() -> BitMatrix {
    BitMatrix::from_rows(&["101", "011"]).unwrap()
}

fn repetition_generator() -> BitMatrix {
    BitMatrix::from_rows(&["111"]).unwrap()
}

/// The 8x24 product generator `[G1 0 G1; 0 G1 G1]`.
pub fn build_array_c(c1: &Code844) -> BitMatrix {
    spc_generator().kronecker(c1.generator())
}

/// The 4x24 repetition generator `(G1' G1' G1')`.
pub fn build_array_c_prime(c1p: &Code844) -> BitMatrix {
    repetition_generator().kronecker(c1p.generator())
}

/// A (24,12) code built by direct sum, with its 4096 codewords cached.
///
/// `codewords[m]` is the encoding of the message whose integer value is `m`
/// (message bit `i` is bit `i` of `m`); codewords are packed the same way,
/// position 0 in the least significant bit.
#[derive(Clone)]
pub struct GolayCode {
    generator: BitMatrix,
    seed: Code844,
    companion: Code844,
    rows: [u32; K],
    codewords: Vec<u32>,
    messages: HashMap<u32, u16>,
}

impl GolayCode {
    fn from_parts(generator: BitMatrix, seed: Code844, companion: Code844) -> Result<Self> {
        let rank = generator.rank();
        if generator.n_rows() != K || generator.n_cols() != N || rank != K {
            return Err(Error::NotDisjoint { rank });
        }
        let rows: [u32; K] = std::array::from_fn(|i| generator.row(i).as_u64() as u32);
        let mut codewords = vec![0u32; 1 << K];
        for m in 1..(1usize << K) {
            let low = m.trailing_zeros() as usize;
            codewords[m] = codewords[m & (m - 1)] ^ rows[low];
        }
        let messages = codewords
            .iter()
            .enumerate()
            .map(|(m, &c)| (c, m as u16))
            .collect();
        Ok(Self {
            generator,
            seed,
            companion,
            rows,
            codewords,
            messages,
        })
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn seed(&self) -> &Code844 {
        &self.seed
    }

    pub fn companion(&self) -> &Code844 {
        &self.companion
    }

    /// Packed generator rows.
    pub fn packed_rows(&self) -> &[u32; K] {
        &self.rows
    }

    /// All codewords, indexed by message value.
    pub fn packed_codewords(&self) -> &[u32] {
        &self.codewords
    }

    pub fn message_of(&self, codeword: u32) -> Option<u16> {
        self.messages.get(&codeword).copied()
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == N && self.messages.contains_key(&(v.as_u64() as u32))
    }

    pub fn codebook(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.codewords
            .iter()
            .map(|&c| BitVector::from_u64(c as u64, N))
    }

    pub fn weight_distribution(&self) -> BTreeMap<usize, usize> {
        let mut dist = BTreeMap::new();
        for c in &self.codewords {
            *dist.entry(c.count_ones() as usize).or_insert(0) += 1;
        }
        dist
    }

    /// Same set of codewords.
    pub fn same_code(&self, other: &GolayCode) -> bool {
        let mut a = self.codewords.clone();
        let mut b = other.codewords.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// Stacks an arbitrary 12x24 generator without the component checks.
    #[doc(hidden)]
    pub fn from_generator_unchecked(
        generator: BitMatrix,
        seed: Code844,
        companion: Code844,
    ) -> Result<Self> {
        Self::from_parts(generator, seed, companion)
    }
}

impl fmt::Debug for GolayCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GolayCode")
            .field("generator", &self.generator)
            .finish_non_exhaustive()
    }
}

/// Stacks the product rows over the repetition rows and checks that the two
/// subspaces are disjoint (stacked rank 12).
pub fn direct_sum(c1: &Code844, c1p: &Code844) -> Result<GolayCode> {
    let g = build_array_c(c1).vstack(&build_array_c_prime(c1p))?;
    GolayCode::from_parts(g, c1.clone(), c1p.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub weight_dist: BTreeMap<usize, usize>,
    pub self_dual: bool,
    pub doubly_even: bool,
    pub disjoint: bool,
    pub weight4_distinct: bool,
}

impl ConstructionReport {
    /// Parameters, weights, self-duality and double evenness all match the
    /// extended Golay code, and the construction preconditions held.
    pub fn is_golay(&self) -> bool {
        self.n == N
            && self.k == K
            && self.d == 8
            && self.weight_dist == golay_weight_distribution()
            && self.self_dual
            && self.doubly_even
            && self.disjoint
            && self.weight4_distinct
    }

    /// `key: value` lines.
    pub fn to_text(&self) -> String {
        let dist: Vec<String> = self
            .weight_dist
            .iter()
            .map(|(w, c)| format!("{w}:{c}"))
            .collect();
        format!(
            "n: {}\nk: {}\nd: {}\nweight_dist: {}\nself_dual: {}\ndoubly_even: {}\ndisjoint: {}\nweight4_distinct: {}\n",
            self.n,
            self.k,
            self.d,
            dist.join(" "),
            self.self_dual,
            self.doubly_even,
            self.disjoint,
            self.weight4_distinct
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn verify_golay(g: &GolayCode) -> ConstructionReport {
    let weight_dist = g.weight_distribution();
    let d = weight_dist.keys().copied().find(|&w| w > 0).unwrap_or(0);
    let gram = g
        .generator()
        .mul(&g.generator().transpose())
        .expect("square Gram matrix");
    ConstructionReport {
        n: g.generator().n_cols(),
        k: g.generator().rank(),
        d,
        self_dual: gram.rank() == 0 && 2 * g.generator().rank() == g.generator().n_cols(),
        doubly_even: weight_dist.keys().all(|w| w % 4 == 0),
        disjoint: g.generator().rank() == K,
        weight4_distinct: check_weight4_distinct(g.seed(), g.companion()),
        weight_dist,
    }
}

/// The extended (7,4,3) Hamming pair used by the Turyn construction.
pub fn turyn_generators() -> (BitMatrix, BitMatrix) {
    let g = BitMatrix::from_rows(&["00011011", "00110101", "01101001", "11010001"]).unwrap();
    let gp = BitMatrix::from_rows(&["10110001", "01011001", "00101101", "00010111"]).unwrap();
    (g, gp)
}

/// The seed `G1` and `C'(4)` of the worked example span the same spaces as
/// the Turyn pair.
pub fn check_turyn_equivalence() -> bool {
    let p = ParitySubmatrix::example();
    let c1 = build_systematic(&p);
    let Ok(c4) = crate::component::apply_permutation(
        &p,
        &crate::component::PermutationIndex::numbered(4).unwrap(),
    ) else {
        return false;
    };
    let (g_ex, gp_ex) = turyn_generators();
    c1.generator().row_space_equal(&g_ex).unwrap_or(false)
        && c4.generator().row_space_equal(&gp_ex).unwrap_or(false)
}

/// Parity rows of the systematic first-order Reed-Muller seed used in
/// Forney's construction. The printed rows carry a stray eighth symbol;
/// removing it leaves `(I4 | P)` with these rows.
pub const FORNEY_PARITY: &str = "0111,1101,1110,1011";

/// Forney's non-systematic companion, rows as printed.
pub const FORNEY_COMPANION: [&str; 4] = ["10101010", "11001100", "11110000", "11111111"];

pub fn forney_generators() -> Result<(ParitySubmatrix, BitMatrix)> {
    let p: ParitySubmatrix = FORNEY_PARITY.parse()?;
    let gp = BitMatrix::from_rows(&FORNEY_COMPANION)?;
    Ok((p, gp))
}

/// The Forney seed has parity rows in the weight-3 set, its companion spans
/// one of the two rule-built subspaces for that seed, and the pair yields a
/// (24,12,8) code with the Golay weight distribution.
pub fn check_forney_equivalence() -> bool {
    let Ok((p, gp)) = forney_generators() else {
        return false;
    };
    let seed = build_systematic(&p);
    let Ok(companion) = Code844::from_generator(gp) else {
        return false;
    };
    let rule_built = enumerate_nonsystematic_companions(&p);
    if !rule_built.iter().any(|c| c.same_subspace(&companion)) {
        return false;
    }
    direct_sum(&seed, &companion)
        .map(|g| verify_golay(&g).is_golay())
        .unwrap_or(false)
}

/// The eight Golay codes from one seed, companions `C'(1)..C'(8)` in order.
pub fn golay_family(
    p: &ParitySubmatrix,
    ch: &crate::component::G78Choices,
) -> Result<Vec<GolayCode>> {
    let fam = crate::component::CompanionFamily::build(p, ch)?;
    fam.companions
        .iter()
        .map(|c| direct_sum(&fam.seed, c))
        .collect()
}

/// Companions for an arbitrary seed: six permutations followed by the two
/// rule-built subspaces from an exhaustive sweep.
pub fn sweep_companions(p: &ParitySubmatrix) -> Result<Vec<Code844>> {
    let mut out = Vec::with_capacity(8);
    for r in 1..=6 {
        out.push(crate::component::apply_permutation(
            p,
            &crate::component::PermutationIndex::numbered(r).unwrap(),
        )?);
    }
    out.extend(enumerate_nonsystematic_companions(p));
    Ok(out)
}

/// Builds a Golay code for a seed and a choice of companion, taking
/// `C'(7)`/`C'(8)` from `ch`.
pub fn build_variant(
    p: &ParitySubmatrix,
    variant: usize,
    ch: &crate::component::G78Choices,
) -> Result<GolayCode> {
    let seed = build_systematic(p);
    let companion = match variant {
        1..=6 => crate::component::apply_permutation(
            p,
            &crate::component::PermutationIndex::numbered(variant).unwrap(),
        )?,
        7 | 8 => {
            let (g7, g8) = build_g7_g8(p, ch)?;
            if variant == 7 {
                g7
            } else {
                g8
            }
        }
        _ => {
            return Err(Error::InvalidPermutation(format!(
                "variant {variant} outside 1..=8"
            )))
        }
    };
    direct_sum(&seed, &companion)
}
