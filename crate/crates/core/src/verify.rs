//! Named check suites: every identity the engine vouches for, run either
//! from the CLI (`verify --suite ...`) or from the acceptance tests.
//!
//! Sweep-based checks scale with the requested depth n (default 7); the
//! per-rank lemma and symmetry checks run one level lower (n - 1), and the
//! series checks use fixed truncation orders (7 for the five-variable
//! fraction, 8 for the one-variable fraction and the succession
//! identities). Check output never contains timings, so a suite run is
//! byte-identical across thread counts.

use std::fmt;
use std::str::FromStr;

use crate::cfrac;
use crate::enumerate::{factorial, iter_all, SweepOptions};
use crate::equidist::{self, NamedBijection, Verdict};
use crate::error::Error;
use crate::involution::{self, count_in_gap, phi, phi_step, phi_traced, psi, psi_step, psi_traced, StepMap};
use crate::mesh::{catalog, MeshPattern, PatternName, Symmetry};
use crate::perm::Permutation;
use crate::poly::Var;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Involutions,
    Theorems,
    Tables,
    Series,
    Symmetry,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::All,
        Suite::Involutions,
        Suite::Theorems,
        Suite::Tables,
        Suite::Series,
        Suite::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Involutions => "involutions",
            Suite::Theorems => "theorems",
            Suite::Tables => "tables",
            Suite::Series => "series",
            Suite::Symmetry => "symmetry",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    ObservedEqual,
    ObservedDiverged,
}

impl CheckStatus {
    pub fn label(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::ObservedEqual => "OBSERVED-EQUAL",
            CheckStatus::ObservedDiverged => "OBSERVED-DIVERGED",
        }
    }

    /// Observational outcomes never count as failures.
    pub fn is_failure(self) -> bool {
        self == CheckStatus::Fail
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &str, detail: String) -> Self {
        CheckResult { name: name.to_string(), status: CheckStatus::Pass, detail }
    }

    fn fail(name: &str, detail: String) -> Self {
        CheckResult { name: name.to_string(), status: CheckStatus::Fail, detail }
    }

    fn from_witness(name: &str, ok_detail: String, witness: Option<String>) -> Self {
        match witness {
            None => CheckResult::pass(name, ok_detail),
            Some(w) => CheckResult::fail(name, w),
        }
    }
}

/// The pattern triple transported by Phi (left on pi, right on Phi(pi)).
pub fn main1_left() -> Vec<MeshPattern> {
    parse_all(&["21|0,1;1,0;2,0", "21|0,1;0,2;1,0;1,2;2,0", "21|0,1;1,0;1,2;2,0"])
}

pub fn main1_right() -> Vec<MeshPattern> {
    parse_all(&["21|0,2;1,0;2,0", "21|0,1;0,2;1,0;1,1;2,0", "21|0,2;1,0;1,1;2,0"])
}

/// The pattern triple transported by Psi.
pub fn main2_left() -> Vec<MeshPattern> {
    vec![
        catalog(PatternName::Star1),
        catalog(PatternName::Star3),
        "21|1,0;1,1;1,2;2,0;2,2".parse().expect("valid"),
    ]
}

pub fn main2_right() -> Vec<MeshPattern> {
    vec![
        catalog(PatternName::Star2),
        catalog(PatternName::Star4),
        "21|1,0;1,1;1,2;2,0;2,1".parse().expect("valid"),
    ]
}

fn parse_all(dsl: &[&str]) -> Vec<MeshPattern> {
    dsl.iter().map(|s| s.parse().expect("valid pattern DSL")).collect()
}

/// Run one suite at depth n. `Suite::All` runs every suite in a fixed
/// order.
pub fn run_suite(suite: Suite, n: usize, opts: &SweepOptions) -> Result<Vec<CheckResult>, Error> {
    match suite {
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::Involutions, Suite::Theorems, Suite::Tables, Suite::Series, Suite::Symmetry] {
                out.extend(run_suite(s, n, opts)?);
            }
            Ok(out)
        }
        Suite::Involutions => involution_checks(n, opts),
        Suite::Theorems => theorem_checks(n, opts),
        Suite::Tables => table_checks(n, opts),
        Suite::Series => series_checks(opts),
        Suite::Symmetry => symmetry_checks(n, opts),
    }
}

fn for_all_perms_up_to(
    max_n: usize,
    cap: usize,
    mut f: impl FnMut(&Permutation) -> Option<String>,
) -> Result<Option<String>, Error> {
    for m in 0..=max_n {
        for p in iter_all(m, cap)? {
            if let Some(witness) = f(&p) {
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}

fn involution_checks(n: usize, opts: &SweepOptions) -> Result<Vec<CheckResult>, Error> {
    let shallow = n.saturating_sub(1);
    let mut out = Vec::new();

    let w = for_all_perms_up_to(n, opts.cap, |p| {
        (phi(&phi(p)) != *p).then(|| format!("Phi(Phi({p})) != {p}"))
    })?;
    out.push(CheckResult::from_witness("involution.phi", format!("Phi.Phi = id on S_m, m<={n}"), w));

    let w = for_all_perms_up_to(n, opts.cap, |p| {
        (psi(&psi(p)) != *p).then(|| format!("Psi(Psi({p})) != {p}"))
    })?;
    out.push(CheckResult::from_witness("involution.psi", format!("Psi.Psi = id on S_m, m<={n}"), w));

    out.push(random_involution_check());

    let w = for_all_perms_up_to(shallow, opts.cap, |p| {
        let l = p.arec_positions().len();
        for k in 1..=l {
            let a = involution::phi1(p, k).expect("rank in range");
            let b = involution::phi2(p, k).expect("rank in range");
            if involution::phi1(&a, k).expect("rank in range") != *p
                || involution::phi2(&b, k).expect("rank in range") != *p
                || involution::phi2(&a, k).expect("rank in range")
                    != involution::phi1(&b, k).expect("rank in range")
            {
                return Some(format!("phi sub-maps at {p}, rank {k}"));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "lemma.phi.submaps",
        format!("phi1/phi2 are commuting involutions, m<={shallow}"),
        w,
    ));

    let w = for_all_perms_up_to(shallow, opts.cap, |p| {
        let l = p.arec_positions().len();
        for k in 1..=l {
            let a = involution::psi1(p, k).expect("rank in range");
            let b = involution::psi2(p, k).expect("rank in range");
            if involution::psi1(&a, k).expect("rank in range") != *p
                || involution::psi2(&b, k).expect("rank in range") != *p
                || involution::psi2(&a, k).expect("rank in range")
                    != involution::psi1(&b, k).expect("rank in range")
            {
                return Some(format!("psi sub-maps at {p}, rank {k}"));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "lemma.psi.submaps",
        format!("psi1/psi2 are commuting involutions, m<={shallow}"),
        w,
    ));

    let w = for_all_perms_up_to(shallow, opts.cap, |p| {
        let l = p.arec_positions().len();
        for k in 2..=l {
            let pk = phi_step(p, k).expect("rank in range");
            let pk1 = phi_step(p, k - 1).expect("rank in range");
            if phi_step(&pk, k - 1).expect("rank in range")
                != phi_step(&pk1, k).expect("rank in range")
            {
                return Some(format!("phi steps {k},{} differ at {p}", k - 1));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "lemma.phi.adjacent-steps",
        format!("consecutive phi-steps commute, m<={shallow}"),
        w,
    ));

    let w = for_all_perms_up_to(shallow, opts.cap, |p| {
        let l = p.arec_positions().len();
        for k in 2..=l {
            let pk = psi_step(p, k).expect("rank in range");
            let pk1 = psi_step(p, k - 1).expect("rank in range");
            if psi_step(&pk, k - 1).expect("rank in range")
                != psi_step(&pk1, k).expect("rank in range")
            {
                return Some(format!("psi steps {k},{} differ at {p}", k - 1));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "lemma.psi.adjacent-steps",
        format!("consecutive psi-steps commute, m<={shallow}"),
        w,
    ));

    let w = for_all_perms_up_to(n, opts.cap, |p| {
        let arec = p.arec_positions();
        let (_, trace) = phi_traced(p);
        for step in &trace.steps {
            if step.after.arec_positions() != arec
                || arec.iter().any(|&i| step.after.at(i) != p.at(i))
            {
                return Some(format!("{:?} broke antirecords of {p}", step.map));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "invariant.phi.antirecords",
        format!("Phi keeps antirecord positions and values at every step, m<={n}"),
        w,
    ));

    let w = for_all_perms_up_to(n, opts.cap, |p| {
        let arec = p.arec_positions();
        let (_, trace) = psi_traced(p);
        for step in trace.steps.iter().filter(|s| s.map == StepMap::Psi2) {
            if step.after.arec_positions() != arec {
                return Some(format!("psi-step rank {} broke antirecord positions of {p}", step.rank));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "invariant.psi.antirecord-positions",
        format!("Psi keeps antirecord positions at every composite step, m<={n}"),
        w,
    ));

    Ok(out)
}

/// Involution property on seeded pseudo-random samples at n = 8, 9.
fn random_involution_check() -> CheckResult {
    const SAMPLES: usize = 10_000;
    let mut state = 0x9e3779b97f4a7c15u64;
    for n in [8usize, 9] {
        for _ in 0..SAMPLES {
            let p = random_perm(n, &mut state);
            if phi(&phi(&p)) != p {
                return CheckResult::fail("involution.random", format!("Phi fails on {p}"));
            }
            if psi(&psi(&p)) != p {
                return CheckResult::fail("involution.random", format!("Psi fails on {p}"));
            }
        }
    }
    CheckResult::pass(
        "involution.random",
        format!("Phi,Psi involutive on {SAMPLES} seeded samples at n=8 and n=9"),
    )
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn random_perm(n: usize, state: &mut u64) -> Permutation {
    let mut word: Vec<u32> = (1..=n as u32).collect();
    for i in (1..n).rev() {
        let j = (splitmix64(state) % (i as u64 + 1)) as usize;
        word.swap(i, j);
    }
    Permutation::from_word(word).expect("shuffle of identity is a permutation")
}

fn theorem_checks(n: usize, opts: &SweepOptions) -> Result<Vec<CheckResult>, Error> {
    let shallow = n.saturating_sub(1);
    let mut out = Vec::new();

    for (name, map, left, right, depth) in [
        ("theorem.phi.triple", NamedBijection::Phi, main1_left(), main1_right(), n),
        ("theorem.psi.triple", NamedBijection::Psi, main2_left(), main2_right(), n),
    ] {
        let mut witness = None;
        for m in 0..=depth {
            let report = equidist::verify_bijection(m, map, &left, &right, opts)?;
            if !report.holds() {
                witness = Some(match report.witness {
                    Some(w) => format!(
                        "n={m}: {} maps to {} but vectors {:?} vs {:?}",
                        w.perm, w.image, w.left_vector, w.right_vector
                    ),
                    None => format!("n={m}: image set is not all of S_{m}"),
                });
                break;
            }
        }
        out.push(CheckResult::from_witness(name, format!("pointwise on S_m, m<={depth}"), witness));
    }

    out.push(gap_identity_check(
        "gap.phi.identities",
        shallow,
        opts,
        phi_gap_pairs(),
        |p, k| phi_step(p, k).expect("rank in range"),
    )?);
    out.push(gap_identity_check(
        "gap.psi.identities",
        shallow,
        opts,
        psi_gap_pairs(),
        |p, k| psi_step(p, k).expect("rank in range"),
    )?);

    let supported: Vec<MeshPattern> = phi_gap_pairs()
        .into_iter()
        .chain(psi_gap_pairs())
        .flat_map(|(a, b)| [a, b])
        .collect();
    let w = for_all_perms_up_to(shallow, opts.cap, |p| {
        let l = p.arec_positions().len();
        for pat in &supported {
            let total: usize =
                (1..=l).map(|k| count_in_gap(p, pat, k).expect("supported pattern")).sum();
            if total != pat.count(p) {
                return Some(format!("gap counts of {pat} on {p} sum to {total}, not {}", pat.count(p)));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "gap.sum-consistency",
        format!("gap counts sum to the total count, m<={shallow}"),
        w,
    ));

    // The composed bijection behind the triple equidistribution claim. The
    // literal pairing with EREC1 is refuted (kept as an honest failure);
    // the transported pairing is the identity the machinery proves.
    let left = parse_all(&["12|0,0;0,1;1,2", "12|0,0;0,1;1,2;2,1;2,2", "12|0,0;0,1;1,2;2,1"]);
    let literal =
        vec![catalog(PatternName::Erec1), catalog(PatternName::Nr50), catalog(PatternName::Nr54)];
    let transported =
        vec![equidist::erec_transported(), catalog(PatternName::Nr50), catalog(PatternName::Nr54)];
    for (name, right) in
        [("bijection.conjugated.literal", literal), ("bijection.conjugated.transported", transported)]
    {
        let mut witness = None;
        for m in 0..=shallow {
            let report =
                equidist::verify_bijection(m, NamedBijection::PhiConjugated, &left, &right, opts)?;
            if !report.holds() {
                witness = Some(match report.witness {
                    Some(w) => format!(
                        "n={m}: {} maps to {} but vectors {:?} vs {:?}",
                        w.perm, w.image, w.left_vector, w.right_vector
                    ),
                    None => format!("n={m}: image set is not all of S_{m}"),
                });
                break;
            }
        }
        out.push(CheckResult::from_witness(name, format!("pointwise on S_m, m<={shallow}"), witness));
    }

    Ok(out)
}

/// (pattern on pi, pattern on the stepped image) pairs of the per-gap
/// transport identities.
fn phi_gap_pairs() -> Vec<(MeshPattern, MeshPattern)> {
    let left = parse_all(&["21|0,2;1,0;2,0", "21|0,2;1,0;1,1;2,0", "21|0,1;0,2;1,0;1,1;2,0"]);
    let right = parse_all(&["21|0,1;1,0;2,0", "21|0,1;1,0;1,2;2,0", "21|0,1;0,2;1,0;1,2;2,0"]);
    left.into_iter().zip(right).collect()
}

fn psi_gap_pairs() -> Vec<(MeshPattern, MeshPattern)> {
    let left = vec![
        catalog(PatternName::Star1),
        catalog(PatternName::Star3),
        "21|1,0;1,1;1,2;2,0;2,2".parse().expect("valid"),
    ];
    let right = vec![
        catalog(PatternName::Star2),
        catalog(PatternName::Star4),
        "21|1,0;1,1;1,2;2,0;2,1".parse().expect("valid"),
    ];
    left.into_iter().zip(right).collect()
}

fn gap_identity_check(
    name: &str,
    depth: usize,
    opts: &SweepOptions,
    pairs: Vec<(MeshPattern, MeshPattern)>,
    step: impl Fn(&Permutation, usize) -> Permutation,
) -> Result<CheckResult, Error> {
    let w = for_all_perms_up_to(depth, opts.cap, |p| {
        let l = p.arec_positions().len();
        for k in 1..=l {
            let image = step(p, k);
            for (a, b) in &pairs {
                // transported at the acted gap
                if count_in_gap(p, a, k).expect("supported") != count_in_gap(&image, b, k).expect("supported") {
                    return Some(format!("gap {k} of {p}: {a} vs {b} after step"));
                }
                // untouched at every other gap, on both sides
                for r in (1..=l).filter(|&r| r != k) {
                    for pat in [a, b] {
                        if count_in_gap(p, pat, r).expect("supported")
                            != count_in_gap(&image, pat, r).expect("supported")
                        {
                            return Some(format!("gap {r} of {p}: {pat} moved by step at {k}"));
                        }
                    }
                }
            }
        }
        None
    })?;
    Ok(CheckResult::from_witness(name, format!("per-gap transport identities, m<={depth}"), w))
}

fn table_checks(n: usize, opts: &SweepOptions) -> Result<Vec<CheckResult>, Error> {
    let suite = equidist::table_suite(n, opts)?;
    Ok(suite
        .checks
        .into_iter()
        .map(|check| {
            let name = format!("table.{}", check.name);
            let detail = match &check.divergence_at {
                None => format!("joint distributions equal for m<={n}"),
                Some((m, w)) => format!(
                    "diverges at n={m}, vector {:?}: {} vs {}",
                    w.vector, w.left_multiplicity, w.right_multiplicity
                ),
            };
            let status = match (check.asserted, check.verdict) {
                (true, Verdict::Equal) => CheckStatus::Pass,
                (true, Verdict::Diverged) => CheckStatus::Fail,
                (false, Verdict::Equal) => CheckStatus::ObservedEqual,
                (false, Verdict::Diverged) => CheckStatus::ObservedDiverged,
            };
            CheckResult { name, status, detail }
        })
        .collect())
}

fn series_checks(opts: &SweepOptions) -> Result<Vec<CheckResult>, Error> {
    let mut out = Vec::new();

    let order = 7;
    let brute = cfrac::brute_force_f(order, opts)?;
    let corrected = cfrac::apply_z_correction(&cfrac::sfraction_series(&cfrac::dkz_alpha(), order))?;
    out.push(if corrected == brute {
        CheckResult::pass("series.theorem-cf", format!("S-fraction with z-correction = enumeration through t^{order}"))
    } else {
        let d = (0..=order).find(|&d| corrected.coeff(d) != brute.coeff(d)).expect("some degree differs");
        CheckResult::fail("series.theorem-cf", format!("first differs at t^{d}"))
    });

    let jroute = cfrac::dkz_jfraction_series(order);
    out.push(if jroute == brute {
        CheckResult::pass("series.jfraction-head", format!("J-fraction with head x·z = enumeration through t^{order}"))
    } else {
        CheckResult::fail("series.jfraction-head", "J-fraction route diverges from enumeration".to_string())
    });

    let mut contraction_ok = true;
    for rule in [cfrac::dkz_alpha(), cfrac::conjecture_alpha()] {
        let (gamma, beta) = cfrac::contract_s_to_j(&rule);
        if cfrac::jfraction_series(&gamma, &beta, order) != cfrac::sfraction_series(&rule, order) {
            contraction_ok = false;
        }
    }
    out.push(if contraction_ok {
        CheckResult::pass("series.contraction", format!("contracted J-fraction = S-fraction through t^{order}"))
    } else {
        CheckResult::fail("series.contraction", "contraction identity fails".to_string())
    });

    let stable = cfrac::sfraction_series_depth(&cfrac::dkz_alpha(), order, order)
        == cfrac::sfraction_series_depth(&cfrac::dkz_alpha(), order, order + 2);
    out.push(if stable {
        CheckResult::pass("series.depth-stability", format!("depth {order} and {} agree", order + 2))
    } else {
        CheckResult::fail("series.depth-stability", "truncation depth is insufficient".to_string())
    });

    let order1 = 8;
    let cf = cfrac::sfraction_series(&cfrac::conjecture_alpha(), order1);
    let brute_nr3 = cfrac::brute_force_pattern_series(&catalog(PatternName::Nr3), order1, opts)?;
    out.push(if cf == brute_nr3 {
        CheckResult::pass("series.conjecture-cf", format!("fraction = sum over Nr3 counts through t^{order1}"))
    } else {
        let d = (0..=order1).find(|&d| cf.coeff(d) != brute_nr3.coeff(d)).expect("some degree differs");
        CheckResult::fail("series.conjecture-cf", format!("first differs at t^{d}"))
    });

    let factorial_ok = (0..=order1).all(|m| {
        brute_nr3.coeff(m).sum_of_coefficients() == factorial(m).expect("m <= 8").into()
    });
    out.push(if factorial_ok {
        CheckResult::pass("series.conjecture-factorial", format!("coefficients at y=1 are m! through t^{order1}"))
    } else {
        CheckResult::fail("series.conjecture-factorial", "some coefficient does not sum to m!".to_string())
    });

    let rising = cfrac::rising_product_series(order);
    let specialized = brute.map_coeffs(|c| c.substitute_one(&[Var::Y, Var::Z, Var::V]));
    let ladder_ok = specialized == rising
        && specialized.map_coeffs(|c| c.substitute_one(&[Var::Q]))
            == rising.map_coeffs(|c| c.substitute_one(&[Var::Q]));
    out.push(if ladder_ok {
        CheckResult::pass("series.specialization-ladder", format!("y=z=v=1 collapse equals the rising product through t^{order}"))
    } else {
        CheckResult::fail("series.specialization-ladder", "specialized series differs from the rising product".to_string())
    });

    let sane = (0..=order).all(|m| {
        brute.coeff(m).sum_of_coefficients() == factorial(m).expect("m <= 7").into()
    });
    out.push(if sane {
        CheckResult::pass("series.factorial-sanity", format!("all-ones coefficient is m! through t^{order}"))
    } else {
        CheckResult::fail("series.factorial-sanity", "some coefficient does not sum to m!".to_string())
    });

    out.push(if cfrac::ogf_check(order1, opts)? {
        CheckResult::pass("series.succession-ogf", format!("ordinary generating function identity through t^{order1}"))
    } else {
        CheckResult::fail("series.succession-ogf", "ogf identity fails".to_string())
    });

    out.push(if cfrac::egf_check(order1, opts)? {
        CheckResult::pass("series.succession-egf", format!("exponential generating function identity through t^{order1}"))
    } else {
        CheckResult::fail("series.succession-egf", "egf identity fails".to_string())
    });

    let polys = cfrac::succession_polys(order1, opts)?;
    let mut nr14_ok = None;
    'outer: for (m, poly) in polys.iter().enumerate() {
        let mut direct = crate::poly::MultiPoly::zero();
        for p in iter_all(m, opts.cap)? {
            direct.add_monomial(crate::poly::Monomial([p.succ() as u16, 0, 0, 0, 0]), 1);
        }
        if *poly != direct {
            nr14_ok = Some(format!("S_{m} from Nr14 differs from the succession statistic"));
            break 'outer;
        }
    }
    out.push(CheckResult::from_witness(
        "series.succession-nr14",
        format!("S_m via Nr14 = S_m via the succession scan, m<={order1}"),
        nr14_ok,
    ));

    Ok(out)
}

fn symmetry_checks(n: usize, opts: &SweepOptions) -> Result<Vec<CheckResult>, Error> {
    let shallow = n.saturating_sub(1);
    let mut out = Vec::new();

    let w = for_all_perms_up_to(shallow, opts.cap, |p| {
        for name in PatternName::ALL {
            let pat = name.pattern();
            for s in Symmetry::ALL {
                if pat.count(p) != pat.transform(s).count(&s.apply(p)) {
                    return Some(format!("{name} under {s} on {p}"));
                }
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "symmetry.compatibility",
        format!("count(p, pi) = count(T_s(p), s(pi)) for the catalog, m<={shallow}"),
        w,
    ));

    let mut transform_ok = None;
    for name in PatternName::ALL {
        let p = name.pattern();
        for s in Symmetry::ALL {
            if p.transform(s).transform(s) != p {
                transform_ok = Some(format!("{name} under {s} twice"));
            }
        }
    }
    out.push(CheckResult::from_witness(
        "symmetry.transform-involution",
        "pattern transforms are involutions on the catalog".to_string(),
        transform_ok,
    ));

    let erec = [PatternName::Erec1, PatternName::Erec2, PatternName::Erec3, PatternName::Erec4];
    let earec = [PatternName::Earec1, PatternName::Earec2, PatternName::Earec3, PatternName::Earec4];
    let w = for_all_perms_up_to(n, opts.cap, |p| {
        for name in erec {
            if name.pattern().count(p) != p.erec() {
                return Some(format!("{name} != erec on {p}"));
            }
        }
        for name in earec {
            if name.pattern().count(p) != p.earec() {
                return Some(format!("{name} != earec on {p}"));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "pattern.exclusive-characterizations",
        format!("all four EREC / EAREC patterns count erec / earec, m<={n}"),
        w,
    ));

    let w = for_all_perms_up_to(n, opts.cap, |p| {
        let pairs: [(PatternName, usize); 5] = [
            (PatternName::Rec, p.rec()),
            (PatternName::Arec, p.arec()),
            (PatternName::Rar, p.rar()),
            (PatternName::Nr14, p.succ()),
            (PatternName::Inv21, p.inv()),
        ];
        for (name, expected) in pairs {
            if name.pattern().count(p) != expected {
                return Some(format!("{name} miscounts on {p}"));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "pattern.statistic-agreement",
        format!("REC/AREC/RAR/Nr14/INV21 agree with the statistic scans, m<={n}"),
        w,
    ));

    // the displayed transform chains behind the triple equidistribution
    let chains: Vec<(MeshPattern, MeshPattern, MeshPattern)> = [
        PatternName::Nr3,
        PatternName::Nr48,
        PatternName::Nr53,
        PatternName::Nr50,
        PatternName::Nr54,
    ]
    .into_iter()
    .map(|name| {
        let p = name.pattern();
        let inv = p.transform(Symmetry::Inverse);
        let inv_rev = inv.transform(Symmetry::Reverse);
        (p, inv, inv_rev)
    })
    .collect();
    let w = for_all_perms_up_to(shallow, opts.cap, |p| {
        let pinv = p.inverse();
        let pinv_rev = pinv.reverse();
        for (orig, inv, inv_rev) in &chains {
            let c = orig.count(p);
            if c != inv.count(&pinv) || c != inv_rev.count(&pinv_rev) {
                return Some(format!("chain for {orig} breaks on {p}"));
            }
        }
        None
    })?;
    out.push(CheckResult::from_witness(
        "pattern.transform-chains",
        format!("inverse and reverse-of-inverse chains hold pointwise, m<={shallow}"),
        w,
    ));

    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn involution_suite_passes_at_small_depth() {
        let results = run_suite(Suite::Involutions, 5, &SweepOptions::default()).unwrap();
        assert_eq!(results.len(), 9);
        for r in &results {
            assert!(!r.status.is_failure(), "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn theorem_suite_flags_only_the_literal_triple() {
        let results = run_suite(Suite::Theorems, 4, &SweepOptions::default()).unwrap();
        for r in &results {
            if r.name == "bijection.conjugated.literal" {
                assert_eq!(r.status, CheckStatus::Fail, "{}", r.detail);
            } else {
                assert!(!r.status.is_failure(), "{}: {}", r.name, r.detail);
            }
        }
    }

    #[test]
    fn table_suite_statuses() {
        let results = run_suite(Suite::Tables, 3, &SweepOptions::default()).unwrap();
        let failing: Vec<&str> = results
            .iter()
            .filter(|r| r.status.is_failure())
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!(failing, ["table.(Nr3,Nr48,Nr53)~(EREC1,Nr50,Nr54)"]);
        let observed: Vec<&str> = results
            .iter()
            .filter(|r| matches!(r.status, CheckStatus::ObservedEqual | CheckStatus::ObservedDiverged))
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!(observed, ["table.Nr57~Nr58", "table.Nr61~Nr62"]);
    }

    #[test]
    fn symmetry_suite_passes_at_small_depth() {
        let results = run_suite(Suite::Symmetry, 4, &SweepOptions::default()).unwrap();
        for r in &results {
            assert!(!r.status.is_failure(), "{}: {}", r.name, r.detail);
        }
    }
}
