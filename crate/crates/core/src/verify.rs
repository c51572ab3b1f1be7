//! Exhaustive and sampled verification suites over small instances.
//!
//! Each suite maps an instance (an fpf involution, optionally with a corner,
//! or a permutation in a rectangular window) to a pass/fail outcome. Failing
//! and budget-exceeded instances carry a [`Replay`] that reruns them alone.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coxeter::{
    dominant_component, fpf_standardize, in_fpf_image, involutions, parse_fpf, permutations,
    rank_table, transitions_psi, Permutation,
};
use crate::groebner::{
    buchberger, is_groebner_basis, reduce, Budget, GroebnerError, MonomialIdeal,
};
use crate::grothendieck::dream_ideal_intersection;
use crate::pipedreams::{enumerate_rp, transition_bijection_check};
use crate::polyring::{Polynomial, TermOrder, Var, VarSpace};
use crate::schubert_ideals::{
    classical_generators, groebner_generators_ss, ssi_generators, ssj_generators, ssj_generators_of,
};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_CAP: usize = 6;
pub const DEFAULT_SAMPLES: usize = 20;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("window {0} is over the cap {1}")]
    OverCap(usize, usize),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("instance does not match suite {0}")]
    WrongInstance(Suite),
    #[error("bad instance: {0}")]
    BadInstance(String),
    #[error("thread pool: {0}")]
    Pool(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    MainSs,
    GroebnerBasisSs,
    PrimaryDecompositionSs,
    PrimaryDecompositionClassical,
    TransitionSs,
    ClassicalInitial,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::MainSs,
        Suite::GroebnerBasisSs,
        Suite::PrimaryDecompositionSs,
        Suite::PrimaryDecompositionClassical,
        Suite::TransitionSs,
        Suite::ClassicalInitial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainSs => "main-ss",
            Suite::GroebnerBasisSs => "groebner-basis-ss",
            Suite::PrimaryDecompositionSs => "primary-decomposition-ss",
            Suite::PrimaryDecompositionClassical => "primary-decomposition-classical",
            Suite::TransitionSs => "transition-ss",
            Suite::ClassicalInitial => "classical-initial",
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Suite::PrimaryDecompositionClassical | Suite::ClassicalInitial
        )
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Suite::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

/// One instance, serialized with enough data to rerun it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Instance {
    /// `z` in cycle notation (fpf tail), window `n`.
    Fpf { n: usize, z: String },
    /// `z` with a below-diagonal outer corner `(p,q)`.
    Corner {
        n: usize,
        z: String,
        p: usize,
        q: usize,
    },
    /// `w` in one-line notation, window `m × n`.
    Classical { m: usize, n: usize, w: String },
}

impl Instance {
    fn fpf(&self) -> Result<(Permutation, usize), VerifyError> {
        match self {
            Instance::Fpf { n, z } | Instance::Corner { n, z, .. } => parse_fpf(z, *n)
                .map(|z| (z, *n))
                .map_err(|e| VerifyError::BadInstance(e.to_string())),
            Instance::Classical { .. } => {
                Err(VerifyError::BadInstance("expected an fpf instance".into()))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail { witness: String },
    Error { message: String, budget: bool },
}

impl Outcome {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

/// A standalone rerun of one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Replay {
    pub suite: Suite,
    pub instance: Instance,
    pub budget: Budget,
    pub essential_only: bool,
}

impl Replay {
    pub fn run(&self, cache: Option<&dyn BasisCache>) -> Outcome {
        let cfg = VerifyConfig {
            budget: self.budget,
            essential_only: self.essential_only,
            ..VerifyConfig::default()
        };
        check_instance(self.suite, &self.instance, &cfg, cache)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub instance: Instance,
    #[serde(flatten)]
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<Replay>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub m: Option<usize>,
    pub n: usize,
    pub seed: u64,
    pub exhaustive: bool,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    /// The only field that differs between identical runs.
    pub wall_time_ms: u64,
    pub results: Vec<InstanceResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.instances
    }

    pub fn budget_errors(&self) -> usize {
        self.results
            .iter()
            .filter(|r| matches!(r.outcome, Outcome::Error { budget: true, .. }))
            .count()
    }

    pub fn replays(&self) -> impl Iterator<Item = &Replay> {
        self.results.iter().filter_map(|r| r.replay.as_ref())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Header line plus one line per non-passing instance.
    pub fn summary(&self) -> String {
        let window = match self.m {
            Some(m) => format!("{m}x{}", self.n),
            None => self.n.to_string(),
        };
        let mut s = format!(
            "{:<32} {:>6} {:>9} {:>6} {:>6} {:>6} {:>8}ms\n",
            self.suite.name(),
            window,
            self.instances,
            self.passed,
            self.failed,
            self.errors,
            self.wall_time_ms
        );
        for r in &self.results {
            match &r.outcome {
                Outcome::Pass => {}
                Outcome::Fail { witness } => s.push_str(&format!(
                    "  FAIL {}: {witness}\n",
                    instance_text(&r.instance)
                )),
                Outcome::Error { message, .. } => s.push_str(&format!(
                    "  ERROR {}: {message}\n",
                    instance_text(&r.instance)
                )),
            }
        }
        s
    }

    pub fn summary_header() -> String {
        format!(
            "{:<32} {:>6} {:>9} {:>6} {:>6} {:>6} {:>10}\n",
            "suite", "window", "instances", "pass", "fail", "error", "time"
        )
    }
}

fn instance_text(i: &Instance) -> String {
    match i {
        Instance::Fpf { z, .. } => z.clone(),
        Instance::Corner { z, p, q, .. } => format!("{z} at ({p},{q})"),
        Instance::Classical { w, .. } => w.clone(),
    }
}

/// Storage for reduced Gröbner bases keyed by generators and order.
pub trait BasisCache: Sync {
    fn lookup(
        &self,
        gens: &[Polynomial],
        space: VarSpace,
        order: TermOrder,
    ) -> Option<Vec<Polynomial>>;
    fn store(&self, gens: &[Polynomial], space: VarSpace, order: TermOrder, basis: &[Polynomial]);
    /// Whether hits are re-checked before use.
    fn paranoid(&self) -> bool {
        true
    }
}

/// Buchberger through an optional cache. In paranoid mode a hit is only
/// used when it passes the Gröbner criterion and contains every generator.
pub fn cached_basis(
    gens: &[Polynomial],
    space: VarSpace,
    order: TermOrder,
    budget: Budget,
    cache: Option<&dyn BasisCache>,
) -> Result<Vec<Polynomial>, GroebnerError> {
    if let Some(c) = cache {
        if let Some(b) = c.lookup(gens, space, order) {
            if !c.paranoid()
                || is_groebner_basis(&b, order)
                    && gens.iter().all(|f| reduce(f, &b, order).is_zero())
            {
                return Ok(b);
            }
        }
    }
    let gb = buchberger(gens, space, order, budget)?;
    if let Some(c) = cache {
        c.store(gens, space, order, &gb.basis);
    }
    Ok(gb.basis)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub exhaustive: bool,
    /// Sample size for fpf windows `n ≥ 6` and classical windows over 4.
    pub samples: usize,
    pub cap: usize,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub budget: Budget,
    pub essential_only: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            exhaustive: false,
            samples: DEFAULT_SAMPLES,
            cap: DEFAULT_CAP,
            jobs: None,
            budget: Budget::default(),
            essential_only: false,
        }
    }
}

/// `FPF_n(I_n)` in the order of [`involutions`].
pub fn fpf_instances(n: usize) -> Vec<Permutation> {
    involutions(n)
        .iter()
        .map(|y| fpf_standardize(y, n).expect("involution of [n]"))
        .collect()
}

fn sample<T: Clone>(items: Vec<T>, cfg: &VerifyConfig, big: bool) -> Vec<T> {
    if cfg.exhaustive || !big || items.len() <= cfg.samples {
        return items;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut idx: Vec<usize> = (0..items.len()).collect();
    idx.shuffle(&mut rng);
    let mut keep: Vec<usize> = idx.into_iter().take(cfg.samples).collect();
    keep.sort_unstable();
    keep.into_iter().map(|i| items[i].clone()).collect()
}

/// Instances of `suite` on window `n` (and `m` for classical suites).
pub fn instances(
    suite: Suite,
    m: usize,
    n: usize,
    cfg: &VerifyConfig,
) -> Result<Vec<Instance>, VerifyError> {
    if suite.is_classical() {
        let k = m.min(n);
        if k > cfg.cap {
            return Err(VerifyError::OverCap(k, cfg.cap));
        }
        let all: Vec<Instance> = permutations(k)
            .into_iter()
            .map(|w| Instance::Classical {
                m,
                n,
                w: w.to_one_line(),
            })
            .collect();
        return Ok(sample(all, cfg, k > 4));
    }
    if n > cfg.cap {
        return Err(VerifyError::OverCap(n, cfg.cap));
    }
    let zs = sample(fpf_instances(n), cfg, n >= 6);
    let mut out = Vec::new();
    for z in zs {
        let zt = z.to_cycle_string();
        if suite == Suite::TransitionSs {
            let (_, corners) = dominant_component(&z);
            for c in corners.iter().filter(|c| c.row > c.col && c.row <= n) {
                out.push(Instance::Corner {
                    n,
                    z: zt.clone(),
                    p: c.row,
                    q: c.col,
                });
            }
        } else {
            out.push(Instance::Fpf { n, z: zt });
        }
    }
    Ok(out)
}

/// Runs `suite`. `m` is ignored for fpf suites.
pub fn run_suite(
    suite: Suite,
    m: usize,
    n: usize,
    cfg: &VerifyConfig,
    cache: Option<&dyn BasisCache>,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let list = instances(suite, m, n, cfg)?;
    let job = |inst: &Instance| {
        let outcome = check_instance(suite, inst, cfg, cache);
        let replay = (!outcome.passed()).then(|| Replay {
            suite,
            instance: inst.clone(),
            budget: cfg.budget,
            essential_only: cfg.essential_only,
        });
        InstanceResult {
            instance: inst.clone(),
            outcome,
            replay,
        }
    };
    let mut results: Vec<InstanceResult> = match cfg.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| VerifyError::Pool(e.to_string()))?
            .install(|| list.par_iter().map(job).collect()),
        None => list.par_iter().map(job).collect(),
    };
    results.sort_by(|a, b| a.instance.cmp(&b.instance));
    let passed = results.iter().filter(|r| r.outcome.passed()).count();
    let errors = results
        .iter()
        .filter(|r| matches!(r.outcome, Outcome::Error { .. }))
        .count();
    Ok(VerificationReport {
        suite,
        m: suite.is_classical().then_some(m),
        n,
        seed: cfg.seed,
        exhaustive: cfg.exhaustive,
        instances: results.len(),
        passed,
        failed: results.len() - passed - errors,
        errors,
        wall_time_ms: start.elapsed().as_millis() as u64,
        results,
    })
}

pub fn verify_main_ss(
    n: usize,
    cfg: &VerifyConfig,
    cache: Option<&dyn BasisCache>,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::MainSs, n, n, cfg, cache)
}

pub fn verify_groebner_basis_ss(
    n: usize,
    cfg: &VerifyConfig,
    cache: Option<&dyn BasisCache>,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::GroebnerBasisSs, n, n, cfg, cache)
}

pub fn verify_primary_decomposition_ss(
    n: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::PrimaryDecompositionSs, n, n, cfg, None)
}

pub fn verify_primary_decomposition_classical(
    m: usize,
    n: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::PrimaryDecompositionClassical, m, n, cfg, None)
}

pub fn verify_transition_ss(
    n: usize,
    cfg: &VerifyConfig,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::TransitionSs, n, n, cfg, None)
}

pub fn verify_classical_initial(
    m: usize,
    n: usize,
    cfg: &VerifyConfig,
    cache: Option<&dyn BasisCache>,
) -> Result<VerificationReport, VerifyError> {
    run_suite(Suite::ClassicalInitial, m, n, cfg, cache)
}

fn err(e: impl fmt::Display) -> Outcome {
    Outcome::Error {
        message: e.to_string(),
        budget: false,
    }
}

fn gb_err(e: GroebnerError) -> Outcome {
    let budget = matches!(
        e,
        GroebnerError::PairBudget(_)
            | GroebnerError::StepBudget(_)
            | GroebnerError::DimensionBudget { .. }
    );
    Outcome::Error {
        message: e.to_string(),
        budget,
    }
}

fn compare(got: &MonomialIdeal, want: &MonomialIdeal, what: &str) -> Outcome {
    if got == want {
        Outcome::Pass
    } else {
        Outcome::Fail {
            witness: format!("{what}: got {} want {}", got.to_text(), want.to_text()),
        }
    }
}

fn initial_ideal(basis: &[Polynomial], space: VarSpace) -> MonomialIdeal {
    MonomialIdeal::new(
        basis
            .iter()
            .filter_map(|f| f.leading_monomial(TermOrder::RevLex)),
        space,
    )
}

/// Runs one instance of `suite`.
pub fn check_instance(
    suite: Suite,
    inst: &Instance,
    cfg: &VerifyConfig,
    cache: Option<&dyn BasisCache>,
) -> Outcome {
    let order = TermOrder::RevLex;
    match (suite, inst) {
        (Suite::MainSs, Instance::Fpf { .. }) => {
            let (z, n) = match inst.fpf() {
                Ok(v) => v,
                Err(e) => return err(e),
            };
            let gens = match ssi_generators(&z, n, cfg.essential_only) {
                Ok(g) => g,
                Err(e) => return err(e),
            };
            let basis =
                match cached_basis(&gens.generators, VarSpace::Skew, order, cfg.budget, cache) {
                    Ok(b) => b,
                    Err(e) => return gb_err(e),
                };
            match ssj_generators_of(&z, n) {
                Ok(j) => compare(
                    &initial_ideal(&basis, VarSpace::Skew),
                    &j,
                    "init(I^ss) vs J^ss",
                ),
                Err(e) => err(e),
            }
        }
        (Suite::GroebnerBasisSs, Instance::Fpf { .. }) => {
            let (z, n) = match inst.fpf() {
                Ok(v) => v,
                Err(e) => return err(e),
            };
            let (h, gens) = match (
                groebner_generators_ss(&z, n),
                ssi_generators(&z, n, cfg.essential_only),
            ) {
                (Ok(h), Ok(g)) => (h, g),
                (Err(e), _) | (_, Err(e)) => return err(e),
            };
            if !is_groebner_basis(&h.generators, order) {
                return Outcome::Fail {
                    witness: "f_AB set fails the Groebner criterion".into(),
                };
            }
            if let Some(f) = gens
                .generators
                .iter()
                .find(|f| !reduce(f, &h.generators, order).is_zero())
            {
                return Outcome::Fail {
                    witness: format!("{} not in ideal(f_AB)", f.to_text(order)),
                };
            }
            let basis =
                match cached_basis(&gens.generators, VarSpace::Skew, order, cfg.budget, cache) {
                    Ok(b) => b,
                    Err(e) => return gb_err(e),
                };
            match h
                .generators
                .iter()
                .find(|f| !reduce(f, &basis, order).is_zero())
            {
                Some(f) => Outcome::Fail {
                    witness: format!("{} not in I^ss", f.to_text(order)),
                },
                None => Outcome::Pass,
            }
        }
        (Suite::PrimaryDecompositionSs, Instance::Fpf { .. }) => {
            let (z, n) = match inst.fpf() {
                Ok(v) => v,
                Err(e) => return err(e),
            };
            match (dream_ideal_intersection(&z, n), ssj_generators_of(&z, n)) {
                (Ok(got), Ok(want)) => compare(&got, &want, "meet over FP vs J^ss"),
                (Err(e), _) => err(e),
                (_, Err(e)) => err(e),
            }
        }
        (Suite::TransitionSs, Instance::Corner { p, q, .. }) => {
            let (z, n) = match inst.fpf() {
                Ok(v) => v,
                Err(e) => return err(e),
            };
            check_transition(&z, n, *p, *q)
        }
        (Suite::PrimaryDecompositionClassical, Instance::Classical { m, n, w }) => {
            let w = match Permutation::parse_one_line(w) {
                Ok(w) => w,
                Err(e) => return err(e),
            };
            let (_, j) = match classical_generators(&w, *m, *n) {
                Ok(v) => v,
                Err(e) => return err(e),
            };
            let ideals: Vec<MonomialIdeal> = match enumerate_rp(&w, *m, *n) {
                Ok(rp) => rp
                    .iter()
                    .map(|d| {
                        MonomialIdeal::of_variables(
                            d.iter().map(|c| (c.row, c.col)),
                            VarSpace::General,
                        )
                    })
                    .collect(),
                Err(e) => return err(e),
            };
            compare(
                &MonomialIdeal::intersect_all(&ideals, VarSpace::General),
                &j,
                "meet over RP vs J_w",
            )
        }
        (Suite::ClassicalInitial, Instance::Classical { m, n, w }) => {
            let w = match Permutation::parse_one_line(w) {
                Ok(w) => w,
                Err(e) => return err(e),
            };
            let (gens, j) = match classical_generators(&w, *m, *n) {
                Ok(v) => v,
                Err(e) => return err(e),
            };
            match cached_basis(
                &gens.generators,
                VarSpace::General,
                order,
                cfg.budget,
                cache,
            ) {
                Ok(b) => compare(
                    &initial_ideal(&b, VarSpace::General),
                    &j,
                    "init(I_w) vs J_w",
                ),
                Err(e) => gb_err(e),
            }
        }
        _ => err(VerifyError::WrongInstance(suite)),
    }
}

fn check_transition(z: &Permutation, n: usize, p: usize, q: usize) -> Outcome {
    let psi = match transitions_psi(z, p) {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    if let Some(v) = psi.iter().find(|v| !in_fpf_image(v, n)) {
        return Outcome::Fail {
            witness: format!("{v} in Psi is outside the fpf image of {n}"),
        };
    }
    let jz = match ssj_generators_of(z, n) {
        Ok(j) => j,
        Err(e) => return err(e),
    };
    let mut parts = Vec::new();
    for v in &psi {
        match ssj_generators(&rank_table(v, n, n)) {
            Ok(j) => parts.push(j),
            Err(e) => return err(e),
        }
    }
    let lhs = jz.add_variable(Var::new(p, q));
    let rhs = MonomialIdeal::intersect_all(&parts, VarSpace::Skew);
    let out = compare(&lhs, &rhs, "J^ss + (u_pq) vs meet over Psi");
    if !out.passed() {
        return out;
    }
    match transition_bijection_check(z, n, p, q) {
        Ok(true) => Outcome::Pass,
        Ok(false) => Outcome::Fail {
            witness: "pipe dream map D -> D + (p,q) is not a bijection".into(),
        },
        Err(e) => err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_counts() {
        let cfg = VerifyConfig::default();
        let counts: Vec<usize> = (1..=5)
            .map(|n| instances(Suite::MainSs, n, n, &cfg).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26]);
        assert_eq!(
            instances(Suite::MainSs, 6, 6, &cfg).unwrap().len(),
            DEFAULT_SAMPLES
        );
        let ex = VerifyConfig {
            exhaustive: true,
            ..cfg
        };
        assert_eq!(instances(Suite::MainSs, 6, 6, &ex).unwrap().len(), 76);
        assert_eq!(instances(Suite::TransitionSs, 2, 2, &cfg).unwrap().len(), 1);
        assert!(instances(Suite::MainSs, 7, 7, &cfg).is_err());
    }

    #[test]
    fn sampling_is_seeded() {
        let a = VerifyConfig::default();
        let b = VerifyConfig { seed: 7, ..a };
        let i1 = instances(Suite::MainSs, 6, 6, &a).unwrap();
        assert_eq!(i1, instances(Suite::MainSs, 6, 6, &a).unwrap());
        assert_ne!(i1, instances(Suite::MainSs, 6, 6, &b).unwrap());
    }

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig::default();
        for suite in Suite::ALL {
            for n in 1..=4 {
                let r = run_suite(suite, n, n, &cfg, None).unwrap();
                assert!(r.all_passed(), "{}", r.summary());
            }
        }
    }

    #[test]
    fn instance_round_trip() {
        for inst in instances(Suite::TransitionSs, 4, 4, &VerifyConfig::default()).unwrap() {
            let (z, n) = inst.fpf().unwrap();
            assert_eq!(n, 4);
            assert_eq!(
                z.to_cycle_string(),
                instance_text(&inst).split(" at").next().unwrap()
            );
        }
    }

    #[test]
    fn budget_failure_replays() {
        let cfg = VerifyConfig {
            budget: Budget {
                max_pairs: 1,
                max_steps: 10,
            },
            ..VerifyConfig::default()
        };
        let r = verify_main_ss(4, &cfg, None).unwrap();
        assert!(r.budget_errors() > 0);
        let replay = r.replays().next().unwrap().clone();
        let back = Replay::from_json(&replay.to_json()).unwrap();
        assert!(matches!(
            back.run(None),
            Outcome::Error { budget: true, .. }
        ));
    }

    #[test]
    fn suite_names() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(
                serde_json::to_string(&s).unwrap(),
                format!("\"{}\"", s.name())
            );
        }
    }
}
