//! Joint distributions of pattern counts over S_n and the verification of
//! equidistribution and bijection claims.
//!
//! Tallies are built per rank partition and merged by addition, so sweeps
//! parallelize and the result never depends on the number of workers.
//! Divergence witnesses are deterministic: the smallest count vector (in
//! lexicographic order) whose multiplicities differ.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::enumerate::{factorial, rank, sweep_fold, SweepOptions};
use crate::error::Error;
use crate::involution::{phi, psi};
use crate::mesh::{catalog, MeshPattern, PatternName};
use crate::perm::Permutation;

/// Tally of the count vector `(p_1(pi), ..., p_m(pi))` over all of S_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDistribution {
    pub n: usize,
    pub patterns: Vec<MeshPattern>,
    pub counts: BTreeMap<Vec<u64>, u64>,
}

impl JointDistribution {
    /// Multiplicities always sum to n!.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// One row per count vector: tab-separated vector entries, then the
    /// multiplicity.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for (vector, mult) in &self.counts {
            for v in vector {
                out.push_str(&v.to_string());
                out.push('\t');
            }
            out.push_str(&mult.to_string());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "patterns": self.patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "counts": self.counts.iter().map(|(v, m)| {
                serde_json::json!({"vector": v, "multiplicity": m})
            }).collect::<Vec<_>>(),
        })
    }
}

/// Exhaustive tally of the given patterns' counts over S_n.
pub fn joint_distribution(
    n: usize,
    patterns: &[MeshPattern],
    opts: &SweepOptions,
) -> Result<JointDistribution, Error> {
    let counts = sweep_fold(
        n,
        opts,
        BTreeMap::new,
        |acc: &mut BTreeMap<Vec<u64>, u64>, p| {
            let vector: Vec<u64> = patterns.iter().map(|pat| pat.count(p) as u64).collect();
            *acc.entry(vector).or_default() += 1;
        },
        merge_tallies,
    )?;
    Ok(JointDistribution { n, patterns: patterns.to_vec(), counts })
}

fn merge_tallies(mut a: BTreeMap<Vec<u64>, u64>, b: BTreeMap<Vec<u64>, u64>) -> BTreeMap<Vec<u64>, u64> {
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Equal,
    Diverged,
}

/// A count vector whose multiplicities differ between the two sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivergenceWitness {
    pub vector: Vec<u64>,
    pub left_multiplicity: u64,
    pub right_multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquidistReport {
    pub n: usize,
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<DivergenceWitness>,
    pub elapsed_ms: u64,
}

impl EquidistReport {
    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Compare the joint distributions of two pattern tuples over S_n.
pub fn equidistributed(
    n: usize,
    left: &[MeshPattern],
    right: &[MeshPattern],
    opts: &SweepOptions,
) -> Result<EquidistReport, Error> {
    if left.len() != right.len() {
        return Err(Error::ArityMismatch { left: left.len(), right: right.len() });
    }
    let start = Instant::now();
    let dl = joint_distribution(n, left, opts)?;
    let dr = joint_distribution(n, right, opts)?;
    let witness = first_divergence(&dl.counts, &dr.counts);
    Ok(EquidistReport {
        n,
        left: left.iter().map(|p| p.to_string()).collect(),
        right: right.iter().map(|p| p.to_string()).collect(),
        verdict: if witness.is_none() { Verdict::Equal } else { Verdict::Diverged },
        witness,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn first_divergence(
    left: &BTreeMap<Vec<u64>, u64>,
    right: &BTreeMap<Vec<u64>, u64>,
) -> Option<DivergenceWitness> {
    let mut keys: Vec<&Vec<u64>> = left.keys().chain(right.keys()).collect();
    keys.sort();
    keys.dedup();
    for key in keys {
        let l = left.get(key).copied().unwrap_or(0);
        let r = right.get(key).copied().unwrap_or(0);
        if l != r {
            return Some(DivergenceWitness {
                vector: key.clone(),
                left_multiplicity: l,
                right_multiplicity: r,
            });
        }
    }
    None
}

/// The bijections whose transport identities can be checked pointwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedBijection {
    Phi,
    Psi,
    /// `pi -> s^{-1}(Phi(s(pi)))` with `s = reverse . inverse`.
    PhiConjugated,
}

impl NamedBijection {
    pub fn name(self) -> &'static str {
        match self {
            NamedBijection::Phi => "Phi",
            NamedBijection::Psi => "Psi",
            NamedBijection::PhiConjugated => "PhiConjugated",
        }
    }

    pub fn apply(self, p: &Permutation) -> Permutation {
        match self {
            NamedBijection::Phi => phi(p),
            NamedBijection::Psi => psi(p),
            NamedBijection::PhiConjugated => {
                let s = p.inverse().reverse();
                phi(&s).reverse().inverse()
            }
        }
    }
}

/// A permutation whose left vector differs from the image's right vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointwiseWitness {
    pub perm: Permutation,
    pub image: Permutation,
    pub left_vector: Vec<u64>,
    pub right_vector: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub n: usize,
    pub map: String,
    pub left: Vec<String>,
    pub right: Vec<String>,
    /// The image set has cardinality n!.
    pub bijective: bool,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PointwiseWitness>,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.bijective && self.verdict == Verdict::Equal
    }
}

struct BijectionAcc {
    seen: Vec<u64>,
    witness: Option<PointwiseWitness>,
}

/// Check `left(pi) = right(map(pi))` for every pi in S_n, and that `map`
/// is a bijection of S_n.
pub fn verify_bijection(
    n: usize,
    map: NamedBijection,
    left: &[MeshPattern],
    right: &[MeshPattern],
    opts: &SweepOptions,
) -> Result<BijectionReport, Error> {
    if left.len() != right.len() {
        return Err(Error::ArityMismatch { left: left.len(), right: right.len() });
    }
    let total = factorial(n)?;
    let words = total.div_ceil(64) as usize;
    let acc = sweep_fold(
        n,
        opts,
        || BijectionAcc { seen: vec![0u64; words], witness: None },
        |acc, p| {
            let image = map.apply(p);
            let r = rank(&image);
            acc.seen[(r / 64) as usize] |= 1 << (r % 64);
            if acc.witness.is_none() {
                let lv: Vec<u64> = left.iter().map(|pat| pat.count(p) as u64).collect();
                let rv: Vec<u64> = right.iter().map(|pat| pat.count(&image) as u64).collect();
                if lv != rv {
                    acc.witness = Some(PointwiseWitness {
                        perm: p.clone(),
                        image,
                        left_vector: lv,
                        right_vector: rv,
                    });
                }
            }
        },
        |mut a, b| {
            for (w, bw) in a.seen.iter_mut().zip(&b.seen) {
                *w |= bw;
            }
            // partitions are visited in rank order, so keep the earlier witness
            if a.witness.is_none() {
                a.witness = b.witness;
            }
            a
        },
    )?;
    let seen_count: u64 = acc.seen.iter().map(|w| w.count_ones() as u64).sum();
    Ok(BijectionReport {
        n,
        map: map.name().to_string(),
        left: left.iter().map(|p| p.to_string()).collect(),
        right: right.iter().map(|p| p.to_string()).collect(),
        bijective: seen_count == total,
        verdict: if acc.witness.is_none() { Verdict::Equal } else { Verdict::Diverged },
        witness: acc.witness,
    })
}

/// One entry of the distribution table: a claimed (or observed)
/// equidistribution between two pattern tuples, checked for every
/// n <= max_n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCheck {
    pub name: String,
    /// Asserted checks are failures when they diverge; observational ones
    /// are reported either way.
    pub asserted: bool,
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub verdict: Verdict,
    /// Smallest n with a divergence, with its witness vector.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divergence_at: Option<(usize, DivergenceWitness)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub max_n: usize,
    pub checks: Vec<TableCheck>,
}

impl SuiteReport {
    /// True when every asserted check is equal.
    pub fn all_asserted_hold(&self) -> bool {
        self.checks.iter().all(|c| !c.asserted || c.verdict == Verdict::Equal)
    }
}

fn names(list: &[PatternName]) -> Vec<MeshPattern> {
    list.iter().map(|&n| catalog(n)).collect()
}

/// The transported first coordinate of the triple identity: the erec
/// pattern EREC1 moved along `reverse . inverse`, i.e. `12|0,0;0,1;2,2`.
pub fn erec_transported() -> MeshPattern {
    use crate::mesh::Symmetry;
    catalog(PatternName::Erec1).transform(Symmetry::Reverse).transform(Symmetry::Inverse)
}

/// Run the full distribution table for every n <= max_n.
///
/// The literal triple `(Nr3, Nr48, Nr53) ~ (EREC1, Nr50, Nr54)` is kept
/// asserted even though the engine refutes it (first divergence at n = 2):
/// the transported variant that replaces EREC1 by `12|0,0;0,1;2,2` is the
/// identity the involution machinery actually proves, and is checked
/// alongside. The open pairs Nr57~Nr58 and Nr61~Nr62 are observational.
pub fn table_suite(max_n: usize, opts: &SweepOptions) -> Result<SuiteReport, Error> {
    let mut spec: Vec<(&str, bool, Vec<MeshPattern>, Vec<MeshPattern>)> = vec![
        (
            "Nr23~Nr24",
            true,
            names(&[PatternName::Nr23]),
            names(&[PatternName::Nr24]),
        ),
        (
            "Nr48~Nr49",
            true,
            names(&[PatternName::Nr48]),
            names(&[PatternName::Nr49]),
        ),
        (
            "Nr49~Nr50",
            true,
            names(&[PatternName::Nr49]),
            names(&[PatternName::Nr50]),
        ),
        (
            "(Nr3,Nr48,Nr53)~(EREC1,Nr50,Nr54)",
            true,
            names(&[PatternName::Nr3, PatternName::Nr48, PatternName::Nr53]),
            names(&[PatternName::Erec1, PatternName::Nr50, PatternName::Nr54]),
        ),
        (
            "(Nr3,Nr48,Nr53)~(EREC1-transported,Nr50,Nr54)",
            true,
            names(&[PatternName::Nr3, PatternName::Nr48, PatternName::Nr53]),
            vec![erec_transported(), catalog(PatternName::Nr50), catalog(PatternName::Nr54)],
        ),
        (
            "Star1~Star2",
            true,
            names(&[PatternName::Star1]),
            names(&[PatternName::Star2]),
        ),
        (
            "Star3~Star4",
            true,
            names(&[PatternName::Star3]),
            names(&[PatternName::Star4]),
        ),
        (
            "(Star1,Star3)~(Star2,Star4)",
            true,
            names(&[PatternName::Star1, PatternName::Star3]),
            names(&[PatternName::Star2, PatternName::Star4]),
        ),
        (
            "Nr57~Nr58",
            false,
            names(&[PatternName::Nr57]),
            names(&[PatternName::Nr58]),
        ),
        (
            "Nr61~Nr62",
            false,
            names(&[PatternName::Nr61]),
            names(&[PatternName::Nr62]),
        ),
    ];

    let mut checks = Vec::new();
    for (name, asserted, left, right) in spec.drain(..) {
        let mut divergence_at = None;
        for n in 0..=max_n {
            let report = equidistributed(n, &left, &right, opts)?;
            if let Some(w) = report.witness {
                divergence_at = Some((n, w));
                break;
            }
        }
        checks.push(TableCheck {
            name: name.to_string(),
            asserted,
            left: left.iter().map(|p| p.to_string()).collect(),
            right: right.iter().map(|p| p.to_string()).collect(),
            verdict: if divergence_at.is_none() { Verdict::Equal } else { Verdict::Diverged },
            divergence_at,
        });
    }
    Ok(SuiteReport { max_n, checks })
}
