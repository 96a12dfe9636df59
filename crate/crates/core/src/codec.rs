//! Encoding, hard-decision decoding and channel simulation for a
//! [`GolayCode`].
//!
//! Both decoders minimize Hamming distance and break ties toward the
//! codeword with the smallest integer value (position 0 least significant),
//! so they agree bit for bit.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::golay::{GolayCode, K, N};

/// Symbols per trellis section.
pub const SECTION_LEN: usize = 8;
const SECTIONS: usize = N / SECTION_LEN;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub codeword: BitVector,
    pub message: BitVector,
    pub distance: usize,
    /// Another codeword lies at the same distance.
    pub tie: bool,
}

fn check_len(v: &BitVector, expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: v.len(),
        });
    }
    Ok(())
}

fn result_for(codeword: u32, message: u16, distance: usize, tie: bool) -> DecodeResult {
    DecodeResult {
        codeword: BitVector::from_u64(codeword as u64, N),
        message: BitVector::from_u64(message as u64, K),
        distance,
        tie,
    }
}

/// `msg * G` over GF(2).
pub fn encode(msg: &BitVector, g: &GolayCode) -> Result<BitVector> {
    check_len(msg, K)?;
    let c = g.packed_codewords()[msg.as_u64() as usize];
    Ok(BitVector::from_u64(c as u64, N))
}

/// Exhaustive nearest-codeword search.
pub fn decode_ml(r: &BitVector, g: &GolayCode) -> Result<DecodeResult> {
    check_len(r, N)?;
    let r = r.as_u64() as u32;
    let mut best = (u32::MAX, u32::MAX);
    let mut best_msg = 0u16;
    let mut ties = 0usize;
    for (m, &c) in g.packed_codewords().iter().enumerate() {
        let d = (c ^ r).count_ones();
        if d < best.0 {
            best = (d, c);
            best_msg = m as u16;
            ties = 1;
        } else if d == best.0 {
            ties += 1;
            if c < best.1 {
                best.1 = c;
                best_msg = m as u16;
            }
        }
    }
    Ok(result_for(best.1, best_msg, best.0 as usize, ties > 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: u16,
    pub to: u16,
    pub label: u8,
}

/// A three-section trellis over boundaries `0, 8, 16, 24`.
///
/// States at a boundary are the classes of codeword prefixes that admit the
/// same set of suffixes, which gives the minimal trellis for this
/// sectionalization.
#[derive(Clone, Debug)]
pub struct Trellis {
    profile: [usize; SECTIONS + 1],
    sections: Vec<Vec<Edge>>,
    messages: HashMap<u32, u16>,
}

pub fn build_trellis(g: &GolayCode) -> Trellis {
    let words = g.packed_codewords();
    let state_maps: Vec<HashMap<u32, u16>> = (0..=SECTIONS)
        .map(|s| boundary_states(words, s * SECTION_LEN))
        .collect();
    let profile: [usize; SECTIONS + 1] =
        std::array::from_fn(|s| state_maps[s].values().collect::<BTreeSet<_>>().len());
    let sections = (0..SECTIONS)
        .map(|s| {
            let t = s * SECTION_LEN;
            let edges: BTreeSet<Edge> = words
                .iter()
                .map(|&c| Edge {
                    from: state_maps[s][&prefix(c, t)],
                    to: state_maps[s + 1][&prefix(c, t + SECTION_LEN)],
                    label: (c >> t) as u8,
                })
                .collect();
            edges.into_iter().collect()
        })
        .collect();
    let messages = words
        .iter()
        .enumerate()
        .map(|(m, &c)| (c, m as u16))
        .collect();
    Trellis {
        profile,
        sections,
        messages,
    }
}

fn prefix(c: u32, t: usize) -> u32 {
    if t >= 32 {
        c
    } else {
        c & ((1u32 << t) - 1)
    }
}

// Prefix -> state id. Ids follow the order of the smallest prefix in each
// class.
fn boundary_states(words: &[u32], t: usize) -> HashMap<u32, u16> {
    let mut futures: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &c in words {
        let suffix = if t >= 32 { 0 } else { c >> t };
        futures.entry(prefix(c, t)).or_default().push(suffix);
    }
    let mut ids: HashMap<Vec<u32>, u16> = HashMap::new();
    let mut out = HashMap::with_capacity(futures.len());
    for (p, mut f) in futures {
        f.sort_unstable();
        f.dedup();
        let next = ids.len() as u16;
        let id = *ids.entry(f).or_insert(next);
        out.insert(p, id);
    }
    out
}

impl Trellis {
    /// State counts at boundaries 0, 8, 16, 24.
    pub fn boundary_profile(&self) -> [usize; SECTIONS + 1] {
        self.profile
    }

    pub fn sections(&self) -> &[Vec<Edge>] {
        &self.sections
    }

    pub fn edge_count(&self) -> usize {
        self.sections.iter().map(Vec::len).sum()
    }

    /// Number of start-to-end paths.
    pub fn path_count(&self) -> u64 {
        let mut counts = vec![0u64; self.profile[0]];
        counts[0] = 1;
        for (s, edges) in self.sections.iter().enumerate() {
            let mut next = vec![0u64; self.profile[s + 1]];
            for e in edges {
                next[e.to as usize] += counts[e.from as usize];
            }
            counts = next;
        }
        counts.iter().sum()
    }

    /// Whether some path spells `codeword`.
    pub fn spells(&self, codeword: &BitVector) -> bool {
        if codeword.len() != N {
            return false;
        }
        let c = codeword.as_u64() as u32;
        let mut frontier: BTreeSet<u16> = BTreeSet::from([0]);
        for (s, edges) in self.sections.iter().enumerate() {
            let label = (c >> (s * SECTION_LEN)) as u8;
            frontier = edges
                .iter()
                .filter(|e| e.label == label && frontier.contains(&e.from))
                .map(|e| e.to)
                .collect();
        }
        !frontier.is_empty()
    }
}

#[derive(Clone, Copy)]
struct Survivor {
    dist: u32,
    value: u32,
    count: u32,
}

const UNREACHED: Survivor = Survivor {
    dist: u32::MAX,
    value: u32::MAX,
    count: 0,
};

/// Viterbi search run from the last section backward, so that each state
/// keeps the suffix with the smallest (distance, value) pair.
pub fn decode_trellis(r: &BitVector, t: &Trellis) -> Result<DecodeResult> {
    check_len(r, N)?;
    let r = r.as_u64() as u32;
    let mut best = vec![
        Survivor {
            dist: 0,
            value: 0,
            count: 1,
        };
        t.profile[SECTIONS]
    ];
    for s in (0..SECTIONS).rev() {
        let received = (r >> (s * SECTION_LEN)) as u8;
        let mut cur = vec![UNREACHED; t.profile[s]];
        for e in &t.sections[s] {
            let next = best[e.to as usize];
            if next.count == 0 {
                continue;
            }
            let dist = (e.label ^ received).count_ones() + next.dist;
            let value = (next.value << SECTION_LEN) | e.label as u32;
            let slot = &mut cur[e.from as usize];
            if dist < slot.dist {
                *slot = Survivor {
                    dist,
                    value,
                    count: next.count,
                };
            } else if dist == slot.dist {
                slot.count = slot.count.saturating_add(next.count);
                slot.value = slot.value.min(value);
            }
        }
        best = cur;
    }
    let root = best[0];
    let message = t.messages[&root.value];
    Ok(result_for(
        root.value,
        message,
        root.dist as usize,
        root.count > 1,
    ))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulationStats {
    pub p: f64,
    pub trials: u64,
    pub seed: u64,
    pub word_errors: u64,
    pub wer: f64,
    pub channel_ber: f64,
}

impl SimulationStats {
    pub fn to_text(&self) -> String {
        format!(
            "p: {}\ntrials: {}\nseed: {}\nword_errors: {}\nwer: {}\nchannel_ber: {}\n",
            self.p, self.trials, self.seed, self.word_errors, self.wer, self.channel_ber
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize")
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Sends uniformly random messages through a binary symmetric channel and
/// decodes with the trellis. Trial `i` draws from its own ChaCha stream
/// keyed by `(seed, i)`, so results do not depend on scheduling.
pub fn simulate_bsc(g: &GolayCode, p: f64, trials: u64, seed: u64) -> Result<SimulationStats> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    if trials == 0 {
        return Err(Error::InvalidTrials);
    }
    let trellis = build_trellis(g);
    let words = g.packed_codewords();
    let (word_errors, flips) = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(seed, i);
            let msg = rng.random_range(0..1u32 << K) as usize;
            let sent = words[msg];
            let mut noise = 0u32;
            for bit in 0..N {
                if rng.random_bool(p) {
                    noise |= 1 << bit;
                }
            }
            let received = BitVector::from_u64((sent ^ noise) as u64, N);
            let decoded = decode_trellis(&received, &trellis).expect("length checked");
            let wrong = decoded.codeword.as_u64() as u32 != sent;
            (wrong as u64, noise.count_ones() as u64)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(SimulationStats {
        p,
        trials,
        seed,
        word_errors,
        wer: word_errors as f64 / trials as f64,
        channel_ber: flips as f64 / (trials as f64 * N as f64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::component::{G78Choices, ParitySubmatrix};
    use crate::golay::build_variant;

    fn example_code(variant: usize) -> GolayCode {
        build_variant(&ParitySubmatrix::example(), variant, &G78Choices::example()).unwrap()
    }

    fn bits(v: u64, len: usize) -> BitVector {
        BitVector::from_u64(v, len)
    }

    #[test]
    fn encode_basics() {
        let g = example_code(4);
        assert!(encode(&bits(0, K), &g).unwrap().is_zero());
        assert_eq!(&encode(&bits(1, K), &g).unwrap(), g.generator().row(0));
        assert!(encode(&bits(0, 11), &g).is_err());
        for m in 1..(1u64 << K) {
            let c = encode(&bits(m, K), &g).unwrap();
            assert!(c.weight() >= 8);
            assert_eq!(c, g.generator().combine(&bits(m, K)).unwrap());
        }
    }

    #[test]
    fn ml_decodes_codewords_and_three_errors() {
        let g = example_code(1);
        let c = encode(&bits(0xabc, K), &g).unwrap();
        let res = decode_ml(&c, &g).unwrap();
        assert_eq!((res.distance, res.tie), (0, false));
        assert_eq!(res.message, bits(0xabc, K));
        let mut r = c.clone();
        for i in [0, 11, 23] {
            r.flip(i);
        }
        let res = decode_ml(&r, &g).unwrap();
        assert_eq!(res.codeword, c);
        assert_eq!((res.distance, res.tie), (3, false));
        assert!(decode_ml(&bits(0, 23), &g).is_err());
    }

    #[test]
    fn weight4_error_produces_tie() {
        let g = example_code(1);
        // Search for a weight-4 pattern on the zero word with a tie.
        let mut found = None;
        'outer: for a in 0..N {
            for b in a + 1..N {
                for c in b + 1..N {
                    for d in c + 1..N {
                        let e = (1u64 << a) | (1 << b) | (1 << c) | (1 << d);
                        let res = decode_ml(&bits(e, N), &g).unwrap();
                        if res.tie {
                            found = Some(res);
                            break 'outer;
                        }
                    }
                }
            }
        }
        let res = found.expect("some weight-4 pattern ties");
        assert_eq!(res.distance, 4);
        // ties resolve to the smallest value, which is the zero word here
        assert!(res.codeword.is_zero());
    }

    #[test]
    fn trellis_profile_and_paths() {
        for v in [1, 4, 7, 8] {
            let t = build_trellis(&example_code(v));
            assert_eq!(t.boundary_profile(), [1, 64, 64, 1]);
            assert_eq!(t.path_count(), 4096);
        }
    }

    #[test]
    fn trellis_spells_codewords() {
        let g = example_code(2);
        let t = build_trellis(&g);
        for m in (0..4096u64).step_by(41) {
            assert!(t.spells(&encode(&bits(m, K), &g).unwrap()));
        }
        let mut not_code = encode(&bits(5, K), &g).unwrap();
        not_code.flip(3);
        assert!(!t.spells(&not_code));
    }

    #[test]
    fn trellis_matches_ml_exhaustively_on_low_weight() {
        let g = example_code(7);
        let t = build_trellis(&g);
        // every received word of weight <= 4 around zero
        let mut checked = 0;
        for e in 0u64..(1 << N) {
            if e.count_ones() > 4 {
                continue;
            }
            let r = bits(e, N);
            let a = decode_ml(&r, &g).unwrap();
            let b = decode_trellis(&r, &t).unwrap();
            assert_eq!(a, b, "{r}");
            checked += 1;
        }
        assert_eq!(checked, 1 + 24 + 276 + 2024 + 10626);
    }

    #[test]
    fn trellis_rejects_wrong_length() {
        let g = example_code(3);
        let t = build_trellis(&g);
        assert!(decode_trellis(&bits(0, 25), &t).is_err());
    }

    #[test]
    fn simulation_validation_and_determinism() {
        let g = example_code(5);
        assert_eq!(
            simulate_bsc(&g, 1.5, 10, 1),
            Err(Error::InvalidProbability(1.5))
        );
        assert!(simulate_bsc(&g, -0.1, 10, 1).is_err());
        assert_eq!(simulate_bsc(&g, 0.1, 0, 1), Err(Error::InvalidTrials));
        let clean = simulate_bsc(&g, 0.0, 500, 9).unwrap();
        assert_eq!((clean.word_errors, clean.channel_ber), (0, 0.0));
        let a = simulate_bsc(&g, 0.05, 2000, 42).unwrap();
        let b = simulate_bsc(&g, 0.05, 2000, 42).unwrap();
        assert_eq!(a, b);
        let all = simulate_bsc(&g, 1.0, 50, 3).unwrap();
        assert_eq!(all.channel_ber, 1.0);
        // all-ones is a codeword, so complementing every bit is undetectable
        assert_eq!(all.word_errors, 50);
    }

    #[test]
    fn stats_serialization() {
        let g = example_code(6);
        let s = simulate_bsc(&g, 0.02, 100, 7).unwrap();
        assert!(s.to_text().starts_with("p: 0.02\ntrials: 100\nseed: 7\n"));
        let v: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(
            keys,
            ["channel_ber", "p", "seed", "trials", "wer", "word_errors"]
        );
    }
}
