//! The two antirecord involutions Phi and Psi.
//!
//! Let `AREC(pi) = (i_1 < ... < i_l)` be the antirecord positions. For an
//! antirecord rank k the four sub-maps complement, within its own alphabet,
//! the subword of letters greater than the current value at `i_k` taken
//! from a window of positions:
//!
//! - `phi1`: positions left of `i_k`
//! - `phi2`: positions left of `i_{k-1}` (identity for k = 1)
//! - `psi1`: positions right of `i_{k-1}` (the whole word for k = 1)
//! - `psi2`: positions right of `i_k`
//!
//! `Phi` composes `phi2 . phi1` over ranks l down to 1 and preserves
//! antirecord positions and values; `Psi` composes `psi2 . psi1` over
//! ranks 1 up to l and preserves antirecord positions. Both are
//! involutions. Every application can be traced step by step; a trace
//! replays the intermediate permutations panel by panel.

use serde::Serialize;

use crate::error::Error;
use crate::mesh::MeshPattern;
use crate::perm::{word_complement, Permutation};

/// Which sub-map produced a trace step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepMap {
    Phi1,
    Phi2,
    Psi1,
    Psi2,
}

/// One sub-map application inside a composite involution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub map: StepMap,
    /// Antirecord rank k (1-based).
    pub rank: usize,
    /// The antirecord position `i_k` the sub-map is anchored at.
    pub position: usize,
    pub before: Permutation,
    pub after: Permutation,
}

/// Ordered record of every sub-map application.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct InvolutionTrace {
    pub steps: Vec<TraceStep>,
}

impl InvolutionTrace {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.steps).expect("trace serializes")
    }
}

/// Complement the letters greater than `threshold` within the 0-based
/// position range, in place.
fn complement_above(word: &mut [u32], threshold: u32, range: std::ops::Range<usize>) {
    let positions: Vec<usize> = range.filter(|&p| word[p] > threshold).collect();
    let letters: Vec<u32> = positions.iter().map(|&p| word[p]).collect();
    let complemented = word_complement(&letters).expect("letters of a permutation are distinct");
    for (&p, v) in positions.iter().zip(complemented) {
        word[p] = v;
    }
}

fn checked_rank(p: &Permutation, k: usize) -> Result<Vec<usize>, Error> {
    let arec = p.arec_positions();
    if k == 0 || k > arec.len() {
        return Err(Error::AntirecordRankOutOfRange { k, l: arec.len() });
    }
    Ok(arec)
}

/// phi1 at antirecord rank k of pi.
pub fn phi1(p: &Permutation, k: usize) -> Result<Permutation, Error> {
    let arec = checked_rank(p, k)?;
    let mut word = p.word().to_vec();
    phi1_at(&mut word, arec[k - 1]);
    Ok(Permutation::from_word_unchecked(word))
}

/// phi2 at antirecord rank k of pi; the identity for k = 1.
pub fn phi2(p: &Permutation, k: usize) -> Result<Permutation, Error> {
    let arec = checked_rank(p, k)?;
    let mut word = p.word().to_vec();
    if k > 1 {
        phi2_at(&mut word, arec[k - 1], arec[k - 2]);
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// The composite `phi2 . phi1` at rank k. Antirecord positions and values
/// are unchanged.
pub fn phi_step(p: &Permutation, k: usize) -> Result<Permutation, Error> {
    let arec = checked_rank(p, k)?;
    let mut word = p.word().to_vec();
    phi1_at(&mut word, arec[k - 1]);
    if k > 1 {
        phi2_at(&mut word, arec[k - 1], arec[k - 2]);
    }
    Ok(Permutation::from_word_unchecked(word))
}

/// psi1 at antirecord rank k of pi.
pub fn psi1(p: &Permutation, k: usize) -> Result<Permutation, Error> {
    let arec = checked_rank(p, k)?;
    let mut word = p.word().to_vec();
    let left = if k > 1 { arec[k - 2] } else { 0 };
    psi1_at(&mut word, arec[k - 1], left);
    Ok(Permutation::from_word_unchecked(word))
}

/// psi2 at antirecord rank k of pi.
pub fn psi2(p: &Permutation, k: usize) -> Result<Permutation, Error> {
    let arec = checked_rank(p, k)?;
    let mut word = p.word().to_vec();
    psi2_at(&mut word, arec[k - 1]);
    Ok(Permutation::from_word_unchecked(word))
}

/// The composite `psi2 . psi1` at rank k. Antirecord positions are
/// unchanged (values at them may move).
pub fn psi_step(p: &Permutation, k: usize) -> Result<Permutation, Error> {
    let arec = checked_rank(p, k)?;
    let mut word = p.word().to_vec();
    let left = if k > 1 { arec[k - 2] } else { 0 };
    psi1_at(&mut word, arec[k - 1], left);
    psi2_at(&mut word, arec[k - 1]);
    Ok(Permutation::from_word_unchecked(word))
}

fn phi1_at(word: &mut [u32], ik: usize) {
    let threshold = word[ik - 1];
    complement_above(word, threshold, 0..ik - 1);
}

fn phi2_at(word: &mut [u32], ik: usize, ik_prev: usize) {
    let threshold = word[ik - 1];
    complement_above(word, threshold, 0..ik_prev - 1);
}

fn psi1_at(word: &mut [u32], ik: usize, left: usize) {
    let threshold = word[ik - 1];
    complement_above(word, threshold, left..word.len());
}

fn psi2_at(word: &mut [u32], ik: usize) {
    let threshold = word[ik - 1];
    complement_above(word, threshold, ik..word.len());
}

fn record_step(
    trace: &mut Option<&mut Vec<TraceStep>>,
    map: StepMap,
    rank: usize,
    position: usize,
    before: &[u32],
    after: &[u32],
) {
    if let Some(steps) = trace.as_deref_mut() {
        steps.push(TraceStep {
            map,
            rank,
            position,
            before: Permutation::from_word_unchecked(before.to_vec()),
            after: Permutation::from_word_unchecked(after.to_vec()),
        });
    }
}

fn phi_with(p: &Permutation, mut trace: Option<&mut Vec<TraceStep>>) -> Permutation {
    let arec = p.arec_positions();
    let mut word = p.word().to_vec();
    for k in (1..=arec.len()).rev() {
        let ik = arec[k - 1];
        let before = word.clone();
        phi1_at(&mut word, ik);
        record_step(&mut trace, StepMap::Phi1, k, ik, &before, &word);
        let before = word.clone();
        if k > 1 {
            phi2_at(&mut word, ik, arec[k - 2]);
        }
        record_step(&mut trace, StepMap::Phi2, k, ik, &before, &word);
    }
    Permutation::from_word_unchecked(word)
}

fn psi_with(p: &Permutation, mut trace: Option<&mut Vec<TraceStep>>) -> Permutation {
    let arec = p.arec_positions();
    let mut word = p.word().to_vec();
    for k in 1..=arec.len() {
        let ik = arec[k - 1];
        let left = if k > 1 { arec[k - 2] } else { 0 };
        let before = word.clone();
        psi1_at(&mut word, ik, left);
        record_step(&mut trace, StepMap::Psi1, k, ik, &before, &word);
        let before = word.clone();
        psi2_at(&mut word, ik);
        record_step(&mut trace, StepMap::Psi2, k, ik, &before, &word);
    }
    Permutation::from_word_unchecked(word)
}

/// The involution Phi: composite of phi-steps over ranks l down to 1.
pub fn phi(p: &Permutation) -> Permutation {
    phi_with(p, None)
}

/// The involution Psi: composite of psi-steps over ranks 1 up to l.
pub fn psi(p: &Permutation) -> Permutation {
    psi_with(p, None)
}

pub fn phi_traced(p: &Permutation) -> (Permutation, InvolutionTrace) {
    let mut steps = Vec::new();
    let image = phi_with(p, Some(&mut steps));
    (image, InvolutionTrace { steps })
}

pub fn psi_traced(p: &Permutation) -> (Permutation, InvolutionTrace) {
    let mut steps = Vec::new();
    let image = psi_with(p, Some(&mut steps));
    (image, InvolutionTrace { steps })
}

/// Occurrences of `pattern` whose second (lower) point sits at the k-th
/// antirecord position. Supported patterns are the length-2 patterns on
/// word 21 with box (2,0) shaded: the shading forces the second point of
/// every occurrence onto an antirecord, so these gap counts sum to the
/// total count over k = 1..l.
pub fn count_in_gap(p: &Permutation, pattern: &MeshPattern, k: usize) -> Result<usize, Error> {
    if pattern.len() != 2 || pattern.word().word() != [2, 1] || !pattern.has_box(2, 0) {
        return Err(Error::UnsupportedGapPattern { pattern: pattern.to_string() });
    }
    let arec = checked_rank(p, k)?;
    let ik = arec[k - 1];
    Ok(pattern.occurrences(p).iter().filter(|o| o.0[1] == ik).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::iter_all;
    use crate::mesh::{catalog, PatternName};
    use crate::DEFAULT_CAP;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn phi_worked_example() {
        let p = perm("257189463");
        assert_eq!(phi1(&p, 2).unwrap(), perm("286154973"));
        assert_eq!(phi2(&perm("286154973"), 2).unwrap(), perm("268154973"));
        assert_eq!(phi1(&perm("268154973"), 1).unwrap(), perm("862154973"));
        assert_eq!(phi_step(&p, 2).unwrap(), perm("268154973"));
        assert_eq!(phi(&p), perm("862154973"));
        assert_eq!(phi(&perm("862154973")), p);
    }

    #[test]
    fn phi_trace_panels() {
        let (image, trace) = phi_traced(&perm("257189463"));
        assert_eq!(image, perm("862154973"));
        let panels: Vec<String> = trace.steps.iter().map(|s| s.after.to_string()).collect();
        assert_eq!(panels, vec!["286154973", "268154973", "862154973", "862154973"]);
        assert_eq!(trace.steps[0].map, StepMap::Phi1);
        assert_eq!(trace.steps[0].rank, 2);
        assert_eq!(trace.steps[0].position, 9);
        assert_eq!(trace.steps[2].position, 4);
    }

    #[test]
    fn psi_worked_example() {
        let p = perm("931582674");
        assert_eq!(psi1(&p, 1).unwrap(), perm("281639547"));
        assert_eq!(psi2(&perm("281639547"), 1).unwrap(), perm("281593674"));
        assert_eq!(psi1(&perm("281593674"), 2).unwrap(), perm("281743659"));
        assert_eq!(psi2(&perm("281743659"), 2).unwrap(), perm("281743695"));
        assert_eq!(psi(&p), perm("281743965"));
        assert_eq!(psi(&perm("281743965")), p);
    }

    #[test]
    fn psi_trace_panels() {
        let (image, trace) = psi_traced(&perm("931582674"));
        assert_eq!(image, perm("281743965"));
        let panels: Vec<String> = trace.steps.iter().map(|s| s.after.to_string()).collect();
        assert_eq!(
            panels,
            vec![
                "281639547",
                "281593674",
                "281743659",
                "281743695",
                "281743965",
                "281743965"
            ]
        );
    }

    #[test]
    fn identity_is_fixed() {
        for n in [0, 1, 5] {
            let id = Permutation::identity(n);
            assert_eq!(phi(&id), id);
            assert_eq!(psi(&id), id);
            for k in 1..=n {
                assert_eq!(phi1(&id, k).unwrap(), id);
                assert_eq!(phi2(&id, k).unwrap(), id);
                // psi1 alone flips the tail above the threshold; only the
                // composite step fixes the identity
                assert_eq!(psi_step(&id, k).unwrap(), id);
            }
        }
        assert_eq!(psi1(&Permutation::identity(5), 1).unwrap(), perm("15432"));
        assert_eq!(psi1(&perm("1"), 1).unwrap(), perm("1"));
        assert_eq!(psi2(&perm("1"), 1).unwrap(), perm("1"));
    }

    #[test]
    fn rank_bounds_are_checked() {
        let p = perm("257189463");
        assert!(phi1(&p, 0).is_err());
        assert!(phi1(&p, 3).is_err());
        assert!(psi2(&p, 3).is_err());
    }

    #[test]
    fn phi2_at_rank_one_is_identity() {
        for p in iter_all(5, DEFAULT_CAP).unwrap() {
            assert_eq!(phi2(&p, 1).unwrap(), p);
        }
    }

    #[test]
    fn involutions_exhaustive_small() {
        for n in 0..=6 {
            for p in iter_all(n, DEFAULT_CAP).unwrap() {
                assert_eq!(phi(&phi(&p)), p, "Phi on {p}");
                assert_eq!(psi(&psi(&p)), p, "Psi on {p}");
            }
        }
    }

    #[test]
    fn submaps_are_involutions_and_commute() {
        for n in 0..=5 {
            for p in iter_all(n, DEFAULT_CAP).unwrap() {
                let l = p.arec_positions().len();
                for k in 1..=l {
                    assert_eq!(phi1(&phi1(&p, k).unwrap(), k).unwrap(), p);
                    assert_eq!(phi2(&phi2(&p, k).unwrap(), k).unwrap(), p);
                    assert_eq!(
                        phi2(&phi1(&p, k).unwrap(), k).unwrap(),
                        phi1(&phi2(&p, k).unwrap(), k).unwrap()
                    );
                    assert_eq!(psi1(&psi1(&p, k).unwrap(), k).unwrap(), p);
                    assert_eq!(psi2(&psi2(&p, k).unwrap(), k).unwrap(), p);
                    assert_eq!(
                        psi2(&psi1(&p, k).unwrap(), k).unwrap(),
                        psi1(&psi2(&p, k).unwrap(), k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn steps_are_involutions() {
        for n in 0..=5 {
            for p in iter_all(n, DEFAULT_CAP).unwrap() {
                let l = p.arec_positions().len();
                for k in 1..=l {
                    assert_eq!(phi_step(&phi_step(&p, k).unwrap(), k).unwrap(), p, "phi rank {k} on {p}");
                    assert_eq!(psi_step(&psi_step(&p, k).unwrap(), k).unwrap(), p, "psi rank {k} on {p}");
                }
            }
        }
    }

    #[test]
    fn composites_agree_with_folded_steps() {
        // Phi applies ranks l..1, Psi ranks 1..l; antirecord positions are
        // stable at composite boundaries, so folding the public per-rank
        // steps reproduces the composite maps.
        for n in 0..=6 {
            for p in iter_all(n, DEFAULT_CAP).unwrap() {
                let l = p.arec_positions().len();
                let folded_phi =
                    (1..=l).rev().fold(p.clone(), |acc, k| phi_step(&acc, k).unwrap());
                assert_eq!(folded_phi, phi(&p), "{p}");
                let folded_psi = (1..=l).fold(p.clone(), |acc, k| psi_step(&acc, k).unwrap());
                assert_eq!(folded_psi, psi(&p), "{p}");
            }
        }
    }

    #[test]
    fn adjacent_steps_commute() {
        for n in 0..=5 {
            for p in iter_all(n, DEFAULT_CAP).unwrap() {
                let l = p.arec_positions().len();
                for k in 2..=l {
                    assert_eq!(
                        phi_step(&phi_step(&p, k).unwrap(), k - 1).unwrap(),
                        phi_step(&phi_step(&p, k - 1).unwrap(), k).unwrap(),
                        "phi steps {k},{} on {p}",
                        k - 1
                    );
                    assert_eq!(
                        psi_step(&psi_step(&p, k).unwrap(), k - 1).unwrap(),
                        psi_step(&psi_step(&p, k - 1).unwrap(), k).unwrap(),
                        "psi steps {k},{} on {p}",
                        k - 1
                    );
                }
            }
        }
    }

    #[test]
    fn phi_preserves_antirecord_positions_and_values() {
        for n in 0..=6 {
            for p in iter_all(n, DEFAULT_CAP).unwrap() {
                let arec = p.arec_positions();
                let (image, trace) = phi_traced(&p);
                for step in &trace.steps {
                    assert_eq!(step.after.arec_positions(), arec, "{:?} on {p}", step.map);
                    for &i in &arec {
                        assert_eq!(step.after.at(i), p.at(i));
                    }
                }
                assert_eq!(image.arec_positions(), arec);
            }
        }
    }

    #[test]
    fn psi_preserves_antirecord_positions_at_composite_steps() {
        for n in 0..=6 {
            for p in iter_all(n, DEFAULT_CAP).unwrap() {
                let arec = p.arec_positions();
                let (image, trace) = psi_traced(&p);
                for step in trace.steps.iter().filter(|s| s.map == StepMap::Psi2) {
                    assert_eq!(step.after.arec_positions(), arec, "after rank {}", step.rank);
                }
                assert_eq!(image.arec_positions(), arec);
            }
        }
    }

    #[test]
    fn gap_counts_on_running_example() {
        let p = perm("257189463");
        let erec1 = catalog(PatternName::Erec1);
        // the pairs (8,3) and (9,3) end at antirecord position 9
        assert_eq!(count_in_gap(&p, &erec1, 2).unwrap(), 2);
        // the pairs (2,1), (5,1), (7,1) end at antirecord position 4
        assert_eq!(count_in_gap(&p, &erec1, 1).unwrap(), 3);
        assert_eq!(erec1.count(&p), 5);
    }

    #[test]
    fn gap_counts_reject_unsupported_patterns() {
        let p = perm("321");
        assert!(count_in_gap(&p, &catalog(PatternName::Nr3), 1).is_err());
        assert!(count_in_gap(&p, &catalog(PatternName::Inv21), 1).is_err());
        for id in [PatternName::Erec1, PatternName::Star1, PatternName::Star4] {
            assert!(count_in_gap(&p, &catalog(id), 1).is_ok());
        }
        assert_eq!(count_in_gap(&Permutation::identity(4), &catalog(PatternName::Star2), 2).unwrap(), 0);
    }

    #[test]
    fn gap_counts_sum_to_total() {
        let supported = ["21|0,2;1,0;2,0", "21|0,1;1,0;2,0", "21|1,0;2,0;2,2", "21|1,0;1,1;1,2;2,0;2,1"];
        for n in 0..=5 {
            for p in iter_all(n, DEFAULT_CAP).unwrap() {
                let l = p.arec_positions().len();
                for dsl in supported {
                    let pattern: MeshPattern = dsl.parse().unwrap();
                    let total: usize =
                        (1..=l).map(|k| count_in_gap(&p, &pattern, k).unwrap()).sum();
                    assert_eq!(total, pattern.count(&p), "{dsl} on {p}");
                }
            }
        }
    }

    #[test]
    fn trace_json_shape() {
        let (_, trace) = phi_traced(&perm("257189463"));
        let json = trace.to_json();
        let steps = json.as_array().unwrap();
        assert_eq!(steps.len(), 4);
        assert_eq!(steps[0]["map"], "phi1");
        assert_eq!(steps[0]["rank"], 2);
        assert_eq!(steps[0]["position"], 9);
        assert_eq!(steps[0]["before"], "257189463");
        assert_eq!(steps[0]["after"], "286154973");
    }
}
