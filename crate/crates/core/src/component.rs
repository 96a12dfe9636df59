//! The (8,4,4) component codes: a systematic seed `(I4 | P)` and the eight
//! companions that pair with it to form the Golay code.
//!
//! Six companions are systematic and come from row permutations of `P`
//! that pass the permutation criteria. The remaining two are non-systematic
//! and are assembled from weight-2 halves under the construction rules.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// The four weight-3 4-tuples.
pub const WEIGHT3_SET: [&str; 4] = ["1110", "1101", "1011", "0111"];

/// The half-weight row `g_h`, canonicalized to ones on the right.
pub const HALF_ROW: &str = "00001111";

pub const ALL_ONES: &str = "11111111";

/// The six valid permutations in their conventional numbering, so that
/// `NUMBERED_PERMUTATIONS[r - 1]` produces companion `C'(r)`.
pub const NUMBERED_PERMUTATIONS: [[u8; 4]; 6] = [
    [3, 1, 4, 2],
    [4, 1, 2, 3],
    [2, 4, 1, 3],
    [4, 3, 1, 2],
    [2, 3, 4, 1],
    [3, 4, 2, 1],
];

/// The parity block of a systematic seed: the four weight-3 4-tuples in
/// some order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParitySubmatrix {
    rows: [BitVector; 4],
}

impl ParitySubmatrix {
    pub fn new(rows: [BitVector; 4]) -> Result<Self> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != 4 || r.weight() != 3 {
                return Err(Error::InvalidParity(format!(
                    "row {} ({r}) is not a weight-3 4-tuple",
                    i + 1
                )));
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if rows[i] == rows[j] {
                    return Err(Error::InvalidParity(format!(
                        "rows {} and {} repeat {}",
                        i + 1,
                        j + 1,
                        rows[i]
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    /// The seed used in the worked example: rows 1101, 0111, 1110, 1011.
    pub fn example() -> Self {
        "1101,0111,1110,1011"
            .parse()
            .expect("example parity is valid")
    }

    /// All 24 orderings of the weight-3 set, in lexicographic order of the
    /// index permutation applied to [`WEIGHT3_SET`].
    pub fn all_orderings() -> Vec<Self> {
        all_index_permutations()
            .into_iter()
            .map(|perm| {
                let rows = perm.map(|i| WEIGHT3_SET[i as usize - 1].parse().unwrap());
                Self::new(rows).expect("orderings of S are valid")
            })
            .collect()
    }

    pub fn rows(&self) -> &[BitVector; 4] {
        &self.rows
    }

    /// Row `i`, 1-based.
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i - 1]
    }

    /// `P_i + P_j`, 1-based.
    pub fn pair_sum(&self, i: usize, j: usize) -> BitVector {
        self.row(i) + self.row(j)
    }

    /// `P'_i = P_{L[i]}`.
    pub fn permuted(&self, l: &PermutationIndex) -> ParitySubmatrix {
        ParitySubmatrix {
            rows: l.mapping.map(|k| self.rows[k as usize - 1].clone()),
        }
    }
}

impl FromStr for ParitySubmatrix {
    type Err = Error;

    /// Comma-separated 4-bit rows, e.g. `1101,0111,1110,1011`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let rows: [&str; 4] = parts.try_into().map_err(|p: Vec<&str>| {
            Error::InvalidParity(format!("expected 4 comma-separated rows, got {}", p.len()))
        })?;
        let rows = rows
            .iter()
            .map(|r| {
                r.parse::<BitVector>()
                    .map_err(|_| Error::InvalidParity(format!("malformed row {r:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows.try_into().unwrap())
    }
}

impl fmt::Display for ParitySubmatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&rows.join(","))
    }
}

impl fmt::Debug for ParitySubmatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParitySubmatrix({self})")
    }
}

/// A permutation of `{1,2,3,4}` read as `P'_i = P_{mapping[i]}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationIndex {
    mapping: [u8; 4],
}

impl PermutationIndex {
    pub fn new(mapping: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &k in &mapping {
            if !(1..=4).contains(&k) || std::mem::replace(&mut seen[k as usize - 1], true) {
                return Err(Error::InvalidPermutation(format!("{mapping:?}")));
            }
        }
        Ok(Self { mapping })
    }

    pub fn identity() -> Self {
        Self {
            mapping: [1, 2, 3, 4],
        }
    }

    /// `L(r)` for `r` in `1..=6`.
    pub fn numbered(r: usize) -> Option<Self> {
        NUMBERED_PERMUTATIONS
            .get(r.checked_sub(1)?)
            .map(|&mapping| Self { mapping })
    }

    pub fn mapping(&self) -> [u8; 4] {
        self.mapping
    }

    pub fn has_fixed_point(&self) -> bool {
        (0..4).any(|i| self.mapping[i] as usize == i + 1)
    }

    /// Length of the cycle through position 1.
    pub fn cycle_len(&self) -> usize {
        let mut pos = 1usize;
        let mut n = 0;
        loop {
            pos = self.mapping[pos - 1] as usize;
            n += 1;
            if pos == 1 {
                return n;
            }
        }
    }
}

impl fmt::Display for PermutationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.mapping;
        write!(f, "{{{a}, {b}, {c}, {d}}}")
    }
}

impl fmt::Debug for PermutationIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{self}")
    }
}

fn all_index_permutations() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 1..=4u8 {
        for b in 1..=4u8 {
            for c in 1..=4u8 {
                for d in 1..=4u8 {
                    let m = [a, b, c, d];
                    if PermutationIndex::new(m).is_ok() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// A validated (8,4,4) code with its codebook and weight-4 words cached.
#[derive(Clone, PartialEq, Eq)]
pub struct Code844 {
    generator: BitMatrix,
    parity: Option<ParitySubmatrix>,
    codebook: BTreeSet<BitVector>,
    weight4: BTreeSet<BitVector>,
}

impl Code844 {
    /// Wraps a 4x8 generator after checking rank 4 and weight distribution
    /// `{0:1, 4:14, 8:1}`.
    pub fn from_generator(generator: BitMatrix) -> Result<Self> {
        Self::with_parity(generator, None)
    }

    fn with_parity(generator: BitMatrix, parity: Option<ParitySubmatrix>) -> Result<Self> {
        if generator.n_rows() != 4 || generator.n_cols() != 8 {
            return Err(Error::NotComponentCode(format!(
                "generator is {}x{}, expected 4x8",
                generator.n_rows(),
                generator.n_cols()
            )));
        }
        let codebook = generator.enumerate_codebook()?;
        if codebook.len() != 16 {
            return Err(Error::NotComponentCode(format!(
                "rank {} < 4",
                generator.rank()
            )));
        }
        let mut dist = BTreeMap::new();
        for w in &codebook {
            *dist.entry(w.weight()).or_insert(0usize) += 1;
        }
        if dist != BTreeMap::from([(0, 1), (4, 14), (8, 1)]) {
            return Err(Error::NotComponentCode(format!(
                "weight distribution {dist:?}"
            )));
        }
        let weight4 = codebook
            .iter()
            .filter(|w| w.weight() == 4)
            .cloned()
            .collect();
        Ok(Self {
            generator,
            parity,
            codebook,
            weight4,
        })
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn is_systematic(&self) -> bool {
        self.parity.is_some()
    }

    pub fn parity(&self) -> Option<&ParitySubmatrix> {
        self.parity.as_ref()
    }

    pub fn codebook(&self) -> &BTreeSet<BitVector> {
        &self.codebook
    }

    pub fn weight4(&self) -> &BTreeSet<BitVector> {
        &self.weight4
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.codebook.contains(v)
    }

    pub fn same_subspace(&self, other: &Code844) -> bool {
        self.codebook == other.codebook
    }
}

impl fmt::Debug for Code844 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Code844")
            .field("generator", &self.generator)
            .field("systematic", &self.is_systematic())
            .finish()
    }
}

/// Generator `(I4 | P)`.
pub fn build_systematic(p: &ParitySubmatrix) -> Code844 {
    let rows = (0..4)
        .map(|i| {
            let unit = BitVector::from_u64(1 << i, 4);
            BitVector::concat(&[&unit, &p.rows[i]]).unwrap()
        })
        .collect();
    let g = BitMatrix::new(rows).unwrap();
    Code844::with_parity(g, Some(p.clone()))
        .expect("(I4 | P) with P drawn from S is an (8,4,4) code")
}

/// No fixed point, and no pair of positions whose rows map onto the same
/// unordered pair.
pub fn check_permutation_criteria(p: &ParitySubmatrix, l: &PermutationIndex) -> bool {
    let permuted = p.permuted(l);
    let (old, new) = (p.rows(), permuted.rows());
    let fixed = (0..4).any(|i| new[i] == old[i]);
    let pair_kept = (0..4).any(|i| {
        (i + 1..4).any(|j| {
            (new[i] == old[i] && new[j] == old[j]) || (new[i] == old[j] && new[j] == old[i])
        })
    });
    !fixed && !pair_kept
}

/// Every permutation passing the criteria, in lexicographic order. Because
/// the rows of a parity submatrix are distinct, the answer does not depend
/// on which one is used.
pub fn enumerate_valid_permutations() -> Vec<PermutationIndex> {
    let p = ParitySubmatrix::example();
    all_index_permutations()
        .into_iter()
        .map(|m| PermutationIndex { mapping: m })
        .filter(|l| check_permutation_criteria(&p, l))
        .collect()
}

pub fn apply_permutation(p: &ParitySubmatrix, l: &PermutationIndex) -> Result<Code844> {
    if !check_permutation_criteria(p, l) {
        return Err(Error::CriteriaViolated(l.to_string()));
    }
    Ok(build_systematic(&p.permuted(l)))
}

/// Left halves `x`, `y` and the right halves of the first two rows of the
/// two non-systematic companions (`r71`, `r72` for the first, `r81`, `r82`
/// for the second).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct G78Choices {
    pub x: BitVector,
    pub y: BitVector,
    pub r71: BitVector,
    pub r72: BitVector,
    pub r81: BitVector,
    pub r82: BitVector,
}

impl G78Choices {
    pub fn new(fields: [BitVector; 6]) -> Result<Self> {
        for (name, v) in ["x", "y", "r71", "r72", "r81", "r82"].iter().zip(&fields) {
            if v.len() != 4 || v.weight() != 2 {
                return Err(Error::InvalidChoices(format!(
                    "{name} = {v} is not a weight-2 4-tuple"
                )));
            }
        }
        let [x, y, r71, r72, r81, r82] = fields;
        Ok(Self {
            x,
            y,
            r71,
            r72,
            r81,
            r82,
        })
    }

    /// x=0101, y=0011, r71=0110, r72=0011, r81=0101, r82=1001.
    pub fn example() -> Self {
        "0101,0011,0110,0011,0101,1001"
            .parse()
            .expect("example choices are valid")
    }

    /// Every assignment of weight-2 4-tuples to the six fields.
    pub fn all() -> impl Iterator<Item = G78Choices> {
        let halves = weight2_tuples();
        (0..6usize.pow(6)).map(move |mut n| {
            let mut f: [BitVector; 6] = std::array::from_fn(|_| BitVector::zeros(4));
            for slot in f.iter_mut() {
                *slot = halves[n % 6].clone();
                n /= 6;
            }
            G78Choices::new(f).unwrap()
        })
    }
}

impl FromStr for G78Choices {
    type Err = Error;

    /// Six comma-separated 4-bit strings in the order x, y, r71, r72, r81, r82.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|r| {
                r.trim()
                    .parse::<BitVector>()
                    .map_err(|_| Error::InvalidChoices(format!("malformed half {r:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let fields: [BitVector; 6] = parts.try_into().map_err(|p: Vec<BitVector>| {
            Error::InvalidChoices(format!(
                "expected 6 comma-separated halves, got {}",
                p.len()
            ))
        })?;
        Self::new(fields)
    }
}

impl fmt::Display for G78Choices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{},{},{},{}",
            self.x, self.y, self.r71, self.r72, self.r81, self.r82
        )
    }
}

impl fmt::Debug for G78Choices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G78Choices({self})")
    }
}

fn weight2_tuples() -> Vec<BitVector> {
    (0u64..16)
        .filter(|v| v.count_ones() == 2)
        .map(|v| BitVector::from_u64(v, 4))
        .collect()
}

// Neither equal nor complementary.
fn apart(a: &BitVector, b: &BitVector) -> bool {
    a != b && *a != b.complement()
}

fn support_pair(v: &BitVector) -> (usize, usize) {
    let s = v.support();
    (s[0] + 1, s[1] + 1)
}

/// Checks the three construction rules. The second clause of each
/// inequality pair is read as "not complementary", so every compared pair of
/// halves must be neither equal nor complementary.
pub fn validate_g78_choices(p: &ParitySubmatrix, ch: &G78Choices) -> bool {
    let halves = [&ch.x, &ch.y, &ch.r71, &ch.r72, &ch.r81, &ch.r82];
    if halves.iter().any(|h| h.len() != 4 || h.weight() != 2) {
        return false;
    }
    let rule1 = apart(&ch.x, &ch.y);
    let rule2 = apart(&ch.r71, &ch.r81)
        && apart(&ch.r72, &ch.r82)
        && apart(&ch.r71, &ch.r72)
        && apart(&ch.r81, &ch.r82);
    let (i, j) = support_pair(&ch.x);
    let (i2, j2) = support_pair(&ch.y);
    let px = p.pair_sum(i, j);
    let py = p.pair_sum(i2, j2);
    let rule3 =
        apart(&ch.r71, &px) && apart(&ch.r81, &px) && apart(&ch.r72, &py) && apart(&ch.r82, &py);
    rule1 && rule2 && rule3
}

fn half_generator(x: &BitVector, r1: &BitVector, y: &BitVector, r2: &BitVector) -> BitMatrix {
    BitMatrix::new(vec![
        BitVector::concat(&[x, r1]).unwrap(),
        BitVector::concat(&[y, r2]).unwrap(),
        HALF_ROW.parse().unwrap(),
        ALL_ONES.parse().unwrap(),
    ])
    .unwrap()
}

/// Builds the two non-systematic companions from rule-valid choices.
pub fn build_g7_g8(p: &ParitySubmatrix, ch: &G78Choices) -> Result<(Code844, Code844)> {
    if !validate_g78_choices(p, ch) {
        return Err(Error::InvalidChoices(format!(
            "{ch} violates the construction rules for P = {p}"
        )));
    }
    let g7 = Code844::from_generator(half_generator(&ch.x, &ch.r71, &ch.y, &ch.r72))?;
    let g8 = Code844::from_generator(half_generator(&ch.x, &ch.r81, &ch.y, &ch.r82))?;
    Ok((g7, g8))
}

pub fn weight4_codewords(c: &Code844) -> &BTreeSet<BitVector> {
    c.weight4()
}

pub fn check_weight4_distinct(a: &Code844, b: &Code844) -> bool {
    a.weight4().is_disjoint(b.weight4())
}

/// Sweeps every rule-valid choice set and returns the distinct code
/// subspaces produced, as codebooks in ascending order.
pub fn enumerate_nonsystematic_companions(p: &ParitySubmatrix) -> Vec<Code844> {
    let all: Vec<G78Choices> = G78Choices::all().collect();
    let found: BTreeMap<Vec<BitVector>, Code844> = all
        .par_iter()
        .filter(|ch| validate_g78_choices(p, ch))
        .flat_map_iter(|ch| {
            let (g7, g8) = build_g7_g8(p, ch).expect("validated choices build");
            [g7, g8]
        })
        .map(|c| (c.codebook().iter().cloned().collect::<Vec<_>>(), c))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    found.into_values().collect()
}

/// The nine codes for one seed: `C1` followed by `C'(1)..C'(8)`.
#[derive(Clone, Debug)]
pub struct CompanionFamily {
    pub seed: Code844,
    pub companions: Vec<Code844>,
}

impl CompanionFamily {
    /// `C'(1..6)` from the numbered permutations, `C'(7)`, `C'(8)` from the
    /// given choices.
    pub fn build(p: &ParitySubmatrix, ch: &G78Choices) -> Result<Self> {
        let mut companions = Vec::with_capacity(8);
        for r in 1..=6 {
            companions.push(apply_permutation(
                p,
                &PermutationIndex::numbered(r).unwrap(),
            )?);
        }
        let (g7, g8) = build_g7_g8(p, ch)?;
        companions.push(g7);
        companions.push(g8);
        Ok(Self {
            seed: build_systematic(p),
            companions,
        })
    }

    /// Companion `C'(r)` for `r` in `1..=8`.
    pub fn companion(&self, r: usize) -> Option<&Code844> {
        self.companions.get(r.checked_sub(1)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn decimals(set: &BTreeSet<BitVector>) -> Vec<u64> {
        set.iter().map(BitVector::as_u64).collect()
    }

    #[test]
    fn example_seed_matches_printed_g1() {
        let c1 = build_systematic(&ParitySubmatrix::example());
        let g1 = BitMatrix::from_rows(&["10001101", "01000111", "00101110", "00011011"]).unwrap();
        assert_eq!(c1.generator(), &g1);
        assert!(c1.is_systematic());
        assert!(c1.contains(&bv(ALL_ONES)));
        assert_eq!(c1.weight4().len(), 14);
    }

    #[test]
    fn parity_validation() {
        assert!("1101,1101,1110,1011".parse::<ParitySubmatrix>().is_err());
        assert!("1100,0111,1110,1011".parse::<ParitySubmatrix>().is_err());
        assert!("1101,0111,1110".parse::<ParitySubmatrix>().is_err());
        assert!("1101,0111,1110,10x1".parse::<ParitySubmatrix>().is_err());
        assert_eq!(
            ParitySubmatrix::example().to_string(),
            "1101,0111,1110,1011"
        );
    }

    #[test]
    fn all_24_orderings_give_844_codes() {
        let orderings = ParitySubmatrix::all_orderings();
        assert_eq!(orderings.len(), 24);
        for p in &orderings {
            let c = build_systematic(p);
            // brute force: count words by weight
            let mut counts = BTreeMap::new();
            for w in c.generator().enumerate_codebook().unwrap() {
                *counts.entry(w.weight()).or_insert(0) += 1;
            }
            assert_eq!(counts, BTreeMap::from([(0, 1), (4, 14), (8, 1)]), "{p}");
        }
    }

    #[test]
    fn permutation_criteria_examples() {
        let p = ParitySubmatrix::example();
        let ok = |m| check_permutation_criteria(&p, &PermutationIndex::new(m).unwrap());
        assert!(ok([3, 1, 4, 2]));
        assert!(!ok([1, 2, 3, 4]));
        assert!(!ok([2, 1, 3, 4]));
        // derangement made of two swaps keeps both pairs
        assert!(!ok([2, 1, 4, 3]));
        assert!(PermutationIndex::new([1, 1, 2, 3]).is_err());
        assert!(PermutationIndex::new([0, 1, 2, 3]).is_err());
    }

    #[test]
    fn six_valid_permutations_all_four_cycles() {
        let valid = enumerate_valid_permutations();
        assert_eq!(valid.len(), 6);
        let mut numbered: Vec<_> = (1..=6)
            .map(|r| PermutationIndex::numbered(r).unwrap())
            .collect();
        numbered.sort();
        assert_eq!(valid, numbered);
        for l in &valid {
            assert!(!l.has_fixed_point());
            assert_eq!(l.cycle_len(), 4);
        }
        assert!(PermutationIndex::numbered(0).is_none());
        assert!(PermutationIndex::numbered(7).is_none());
    }

    #[test]
    fn six_valid_for_every_seed() {
        let all: Vec<_> = all_index_permutations()
            .into_iter()
            .map(|m| PermutationIndex::new(m).unwrap())
            .collect();
        for p in ParitySubmatrix::all_orderings() {
            let n = all
                .iter()
                .filter(|l| check_permutation_criteria(&p, l))
                .count();
            assert_eq!(n, 6, "{p}");
        }
    }

    #[test]
    fn apply_permutation_reproduces_printed_matrices() {
        let p = ParitySubmatrix::example();
        let p1 = p.permuted(&PermutationIndex::numbered(1).unwrap());
        assert_eq!(p1.to_string(), "1110,1101,1011,0111");
        let p4 = p.permuted(&PermutationIndex::numbered(4).unwrap());
        assert_eq!(p4.to_string(), "1011,1110,1101,0111");
        let c4 = apply_permutation(&p, &PermutationIndex::numbered(4).unwrap()).unwrap();
        assert_eq!(c4.parity(), Some(&p4));
        assert!(matches!(
            apply_permutation(&p, &PermutationIndex::identity()),
            Err(Error::CriteriaViolated(_))
        ));
    }

    #[test]
    fn weight4_distinct_for_all_seeds_and_permutations() {
        let valid = enumerate_valid_permutations();
        for p in ParitySubmatrix::all_orderings() {
            let c1 = build_systematic(&p);
            for l in &valid {
                let c = apply_permutation(&p, l).unwrap();
                assert!(check_weight4_distinct(&c1, &c), "{p} {l}");
            }
            assert!(!check_weight4_distinct(&c1, &c1));
        }
    }

    #[test]
    fn systematic_pair_words_are_complementary() {
        // cw1..cw6 are the sums of two rows; pairs with complementary left
        // halves are themselves complementary.
        for p in ParitySubmatrix::all_orderings() {
            let g = build_systematic(&p);
            let rows = g.generator().rows();
            let two = |i: usize, j: usize| &rows[i] + &rows[j];
            let ones = bv(ALL_ONES);
            assert_eq!(two(2, 3), &two(0, 1) + &ones);
            assert_eq!(two(1, 3), &two(0, 2) + &ones);
            assert_eq!(two(1, 2), &two(0, 3) + &ones);
        }
    }

    #[test]
    fn example_choices_are_valid() {
        let p = ParitySubmatrix::example();
        let ch = G78Choices::example();
        assert!(validate_g78_choices(&p, &ch));
        assert_eq!(ch.to_string(), "0101,0011,0110,0011,0101,1001");
    }

    #[test]
    fn invalid_choices() {
        let p = ParitySubmatrix::example();
        let mut same = G78Choices::example();
        same.y = same.x.clone();
        assert!(!validate_g78_choices(&p, &same));

        // x = 0101 selects P2 + P4 = 0111 + 1011 = 1100.
        assert_eq!(p.pair_sum(2, 4), bv("1100"));
        let mut clash = G78Choices::example();
        clash.r71 = bv("1100");
        assert!(!validate_g78_choices(&p, &clash));
        // the complement is forbidden as well
        clash.r71 = bv("0011");
        assert!(!validate_g78_choices(&p, &clash));

        assert!("0101,0011,0110".parse::<G78Choices>().is_err());
        assert!("0111,0011,0110,0011,0101,1001"
            .parse::<G78Choices>()
            .is_err());
        assert!(build_g7_g8(&p, &same).is_err());
    }

    #[test]
    fn g7_g8_match_printed_matrices() {
        let p = ParitySubmatrix::example();
        let (g7, g8) = build_g7_g8(&p, &G78Choices::example()).unwrap();
        let printed7 =
            BitMatrix::from_rows(&["01010110", "00110011", "00001111", "11111111"]).unwrap();
        let printed8 =
            BitMatrix::from_rows(&["01010101", "00111001", "00001111", "11111111"]).unwrap();
        assert_eq!(g7.generator(), &printed7);
        assert_eq!(g8.generator(), &printed8);
        for c in [&g7, &g8] {
            assert!(!c.is_systematic());
            assert_eq!(c.generator().rank(), 4);
            assert_eq!(c.weight4().len(), 14);
            assert!(c.contains(&bv("00001111")));
            assert!(c.contains(&bv("11110000")));
            for w in c.weight4() {
                if w.as_u64() == 15 || w.as_u64() == 240 {
                    continue;
                }
                assert_eq!(w.slice(0, 4).weight(), 2, "{w}");
                assert_eq!(w.slice(4, 8).weight(), 2, "{w}");
            }
        }
        assert_eq!(
            decimals(g7.weight4()),
            vec![15, 51, 60, 86, 89, 101, 106, 149, 154, 166, 169, 195, 204, 240]
        );
    }

    #[test]
    fn seed_weight4_matches_table_row() {
        let c1 = build_systematic(&ParitySubmatrix::example());
        assert_eq!(
            decimals(weight4_codewords(&c1)),
            vec![29, 39, 58, 78, 83, 105, 116, 139, 150, 172, 177, 197, 216, 226]
        );
    }

    #[test]
    fn seed_weight4_disjoint_from_companions() {
        let p = ParitySubmatrix::example();
        let fam = CompanionFamily::build(&p, &G78Choices::example()).unwrap();
        for c in &fam.companions {
            assert!(check_weight4_distinct(&fam.seed, c));
        }
        assert!(fam.companion(0).is_none());
        assert!(fam.companion(9).is_none());
    }

    #[test]
    fn nonsystematic_census_for_example() {
        let p = ParitySubmatrix::example();
        let found = enumerate_nonsystematic_companions(&p);
        assert_eq!(found.len(), 2);
        let (g7, g8) = build_g7_g8(&p, &G78Choices::example()).unwrap();
        assert!(found.iter().any(|c| c.same_subspace(&g7)));
        assert!(found.iter().any(|c| c.same_subspace(&g8)));
        for c in &found {
            assert!(c.contains(&bv("11110000")));
        }
    }
}
