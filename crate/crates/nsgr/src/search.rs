//! Corpus machinery: enumeration of numerical semigroups by bounded minimal
//! generating systems, a sweep that re-checks the whole battery of structure
//! theorems on every member, and hunts for counterexamples to the two open
//! questions (symmetric + Buchsbaum => s_J = r? M-pure + Buchsbaum => CM?).

use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::graded::{AnalysisReport, GradedRing};
use crate::semigroup::{NumericalSemigroup, SemigroupError};
use crate::threegen;

// hard sanity rails for enumeration requests
const MAX_VALUE_CAP: u64 = 500;
const MAX_NGENS_CAP: u32 = 10;
const DEFAULT_SYSTEM_CAP: usize = 2_000_000;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid bounds: {0}")]
    InvalidBounds(String),
    #[error("bounds too large: {0}")]
    BoundsTooLarge(String),
    #[error("cannot read corpus: {0}")]
    Io(#[from] std::io::Error),
    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },
    #[error("invalid generator system {generators:?}: {source}")]
    InvalidSystem {
        generators: Vec<u64>,
        source: SemigroupError,
    },
}

/// Bounds and filters for corpus enumeration.
#[derive(Debug, Clone)]
pub struct EnumerationParams {
    /// Largest number of minimal generators, at least 2.
    pub max_generators: u32,
    /// Largest allowed generator value, at least 1.
    pub max_generator_value: u64,
    /// Keep only semigroups with Frobenius number at most this.
    pub max_frobenius: Option<i64>,
    pub symmetric_only: bool,
    pub m_pure_only: bool,
    pub three_generated_only: bool,
    /// Cap on the number of emitted systems; `None` for the default cap.
    pub max_systems: Option<usize>,
}

impl EnumerationParams {
    pub fn new(max_generators: u32, max_generator_value: u64) -> Self {
        EnumerationParams {
            max_generators,
            max_generator_value,
            max_frobenius: None,
            symmetric_only: false,
            m_pure_only: false,
            three_generated_only: false,
            max_systems: None,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.max_generators < 2 {
            return Err(SearchError::InvalidBounds(format!(
                "max_generators = {}, need at least 2",
                self.max_generators
            )));
        }
        if self.max_generator_value < 1 {
            return Err(SearchError::InvalidBounds(
                "max_generator_value must be positive".into(),
            ));
        }
        if self.max_generator_value > MAX_VALUE_CAP {
            return Err(SearchError::BoundsTooLarge(format!(
                "max_generator_value = {} exceeds cap {MAX_VALUE_CAP}",
                self.max_generator_value
            )));
        }
        if self.max_generators > MAX_NGENS_CAP {
            return Err(SearchError::BoundsTooLarge(format!(
                "max_generators = {} exceeds cap {MAX_NGENS_CAP}",
                self.max_generators
            )));
        }
        Ok(())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All minimal generating systems within the bounds, each exactly once, in
/// lexicographic order. A strictly increasing tuple stays minimal when the
/// next generator lies outside the semigroup spanned by the prefix, so the
/// tree is pruned on that membership test alone.
pub fn minimal_generating_systems(
    params: &EnumerationParams,
) -> Result<Vec<Vec<u64>>, SearchError> {
    params.validate()?;
    let cap = params.max_systems.unwrap_or(DEFAULT_SYSTEM_CAP);
    let max_val = params.max_generator_value as usize;
    let mut out = Vec::new();
    let mut membership = vec![false; max_val + 1];
    membership[0] = true;
    let mut prefix = Vec::new();
    descend(
        &mut prefix,
        &membership,
        params.max_generators as usize,
        max_val,
        cap,
        &mut out,
    )?;
    Ok(out)
}

fn descend(
    prefix: &mut Vec<u64>,
    membership: &[bool],
    max_ngens: usize,
    max_val: usize,
    cap: usize,
    out: &mut Vec<Vec<u64>>,
) -> Result<(), SearchError> {
    if !prefix.is_empty() && prefix.iter().fold(0, |a, &g| gcd(a, g)) == 1 {
        if out.len() >= cap {
            return Err(SearchError::BoundsTooLarge(format!(
                "enumeration exceeded {cap} systems"
            )));
        }
        out.push(prefix.clone());
    }
    if prefix.len() >= max_ngens {
        return Ok(());
    }
    let lo = prefix.last().map_or(1, |&g| g as usize + 1);
    for g in lo..=max_val {
        if membership[g] {
            continue;
        }
        let mut extended = membership.to_vec();
        for x in g..=max_val {
            if extended[x - g] {
                extended[x] = true;
            }
        }
        prefix.push(g as u64);
        let result = descend(prefix, &extended, max_ngens, max_val, cap, out);
        prefix.pop();
        result?;
    }
    Ok(())
}

/// Enumerates the semigroups themselves, applying the optional filters.
pub fn enumerate(params: &EnumerationParams) -> Result<Vec<NumericalSemigroup>, SearchError> {
    let systems = minimal_generating_systems(params)?;
    let mut out = Vec::new();
    for system in systems {
        if params.three_generated_only && system.len() != 3 {
            continue;
        }
        let s = NumericalSemigroup::new(&system).expect("enumerated systems are valid");
        if let Some(max_f) = params.max_frobenius {
            if s.frobenius() > max_f {
                continue;
            }
        }
        if params.symmetric_only && !s.is_symmetric() {
            continue;
        }
        if params.m_pure_only && !GradedRing::new(&s).is_m_pure() {
            continue;
        }
        out.push(s);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub generators: Vec<u64>,
    pub invariant: String,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hit {
    pub generators: Vec<u64>,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SweepResult {
    pub corpus_size: usize,
    pub violations: Vec<Violation>,
    pub hits: Vec<Hit>,
}

/// The two open questions hunted over corpora.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpenQuestion {
    /// Symmetric and Buchsbaum: must the nilpotency index equal the
    /// reduction number?
    Q57,
    /// M-pure and Buchsbaum: must the graded ring be Cohen-Macaulay?
    Q58,
}

impl std::fmt::Display for OpenQuestion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OpenQuestion::Q57 => write!(f, "5.7"),
            OpenQuestion::Q58 => write!(f, "5.8"),
        }
    }
}

fn build_corpus(systems: &[Vec<u64>]) -> Result<Vec<NumericalSemigroup>, SearchError> {
    systems
        .iter()
        .map(|g| {
            NumericalSemigroup::new(g).map_err(|source| SearchError::InvalidSystem {
                generators: g.clone(),
                source,
            })
        })
        .collect()
}

/// Runs the full invariant battery over every semigroup of the corpus.
/// Violations are data, not panics; the list is empty on a correct build.
pub fn sweep_theorems(systems: &[Vec<u64>]) -> Result<SweepResult, SearchError> {
    let corpus = build_corpus(systems)?;
    let mut violations: Vec<Violation> = corpus
        .par_iter()
        .flat_map_iter(check_invariants)
        .collect();
    violations.sort_by(|x, y| (&x.generators, &x.invariant).cmp(&(&y.generators, &y.invariant)));
    Ok(SweepResult {
        corpus_size: corpus.len(),
        violations,
        hits: Vec::new(),
    })
}

/// Hunts one open question over the corpus. Hits are findings, never
/// errors. The naturals are skipped: their maximal ideal is principal, so
/// the questions degenerate there.
pub fn hunt(question: OpenQuestion, systems: &[Vec<u64>]) -> Result<SweepResult, SearchError> {
    let corpus = build_corpus(systems)?;
    let mut hits: Vec<Hit> = corpus
        .par_iter()
        .filter(|s| s.multiplicity() > 1)
        .filter_map(|s| {
            let report = GradedRing::new(s).analyze();
            question_hit(question, &report)
        })
        .collect();
    hits.sort_by(|x, y| x.generators.cmp(&y.generators));
    Ok(SweepResult {
        corpus_size: corpus.len(),
        violations: Vec::new(),
        hits,
    })
}

fn question_hit(question: OpenQuestion, report: &AnalysisReport) -> Option<Hit> {
    match question {
        OpenQuestion::Q57 => {
            if report.symmetric
                && report.buchsbaum
                && report.nilpotency_index != report.reduction_number
            {
                return Some(Hit {
                    generators: report.generators.clone(),
                    description: format!(
                        "symmetric, Buchsbaum, s_J = {} != r = {}",
                        report.nilpotency_index, report.reduction_number
                    ),
                });
            }
        }
        OpenQuestion::Q58 => {
            if report.m_pure && report.buchsbaum && !report.cm {
                return Some(Hit {
                    generators: report.generators.clone(),
                    description: format!(
                        "M-pure, Buchsbaum, not CM (lambda = {})",
                        report.lambda
                    ),
                });
            }
        }
    }
    None
}

/// Reads a corpus file: one comma-separated generator list per line,
/// `#` starts a comment, blank lines are skipped.
pub fn load_corpus(path: &Path) -> Result<Vec<Vec<u64>>, SearchError> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut gens = Vec::new();
        for token in line.split(',') {
            let token = token.trim();
            gens.push(token.parse::<u64>().map_err(|e| SearchError::Corpus {
                line: idx + 1,
                message: format!("bad generator {token:?}: {e}"),
            })?);
        }
        out.push(gens);
    }
    Ok(out)
}

/// Evaluates every structure theorem on one semigroup, returning one
/// violation per broken invariant, identified by a stable machine-readable
/// name.
pub fn check_invariants(s: &NumericalSemigroup) -> Vec<Violation> {
    let mut out = Vec::new();
    let gens = s.generators().to_vec();
    let mut push = |invariant: &str, details: String| {
        out.push(Violation {
            generators: gens.clone(),
            invariant: invariant.to_string(),
            details,
        });
    };

    let graded = GradedRing::new(s);
    let report = graded.analyze();
    let g1 = s.multiplicity();
    let gmax = *s.generators().last().unwrap();
    let cstar = s.conductor().max(1);
    let r = report.reduction_number;
    let apery = s.apery();

    // apery-shape: one element per class, the largest being g + g1
    if apery.len() as u64 != g1 {
        push("apery-shape", format!("|Ap| = {} != {}", apery.len(), g1));
    }
    let ap_max = *apery.iter().max().unwrap() as i64;
    if ap_max != s.frobenius() + g1 as i64 {
        push(
            "apery-shape",
            format!("max Ap = {ap_max} != g + g1 = {}", s.frobenius() + g1 as i64),
        );
    }

    // apery-minimality: everything below omega_i in its class is a gap
    for (i, &w) in apery.iter().enumerate() {
        let mut x = i as u64;
        while x < w {
            if s.contains(x as i64) {
                push("apery-minimality", format!("{x} < omega_{i} = {w} is a member"));
            }
            x += g1;
        }
    }

    // symmetry-characterizations: direct test == gap count == Apéry pairing
    let by_gaps = 2 * s.genus() as i64 == s.frobenius() + 1;
    let pairing = apery.iter().all(|&wj| {
        apery
            .iter()
            .any(|&wi| wj as i64 + wi as i64 == s.frobenius() + g1 as i64)
    });
    if report.symmetric != by_gaps || report.symmetric != pairing {
        push(
            "symmetry-characterizations",
            format!(
                "direct = {}, gap count = {by_gaps}, pairing = {pairing}",
                report.symmetric
            ),
        );
    }

    // ord-superadditivity and closure on an initial block of members
    let sample: Vec<u64> = (0..cstar + 2 * g1)
        .filter(|&x| s.contains(x as i64))
        .take(25)
        .collect();
    for &x in &sample {
        for &y in &sample {
            if !s.contains((x + y) as i64) {
                push("ord-superadditivity", format!("{x} + {y} escaped the semigroup"));
            }
            let (ox, oy) = (graded.ord(x).unwrap(), graded.ord(y).unwrap());
            let oxy = graded.ord(x + y).unwrap();
            if oxy < ox + oy {
                push(
                    "ord-superadditivity",
                    format!("ord({x}+{y}) = {oxy} < {ox} + {oy}"),
                );
            }
        }
    }

    // ideal-power-stabilization: everything past cstar + (h-1) gmax is in hM
    for h in 1..=r.min(5) {
        let from = cstar + u64::from(h - 1) * gmax;
        for x in from..from + 2 * g1 {
            if !matches!(graded.ord(x), Some(o) if o >= h) {
                push(
                    "ideal-power-stabilization",
                    format!("{x} >= {from} but ord < {h}"),
                );
            }
        }
    }

    // oracle-socle-equivalence: the two socle routes agree
    let basis = report.socle_basis.clone();
    let oracle = graded.socle_basis_oracle();
    if basis != oracle {
        push(
            "oracle-socle-equivalence",
            format!("basis {:?} vs oracle {:?}", basis.entries, oracle.entries),
        );
    }

    // defect-socle-equivalence: a_i > b_i iff omega_i is a socle member
    for rec in &report.apery_records {
        if rec.class_index == 0 {
            continue;
        }
        let member = graded.socle_membership(rec.omega).unwrap();
        if rec.is_defect() != member {
            push(
                "defect-socle-equivalence",
                format!(
                    "class {}: a = {}, b = {}, socle member = {member}",
                    rec.class_index, rec.a, rec.b
                ),
            );
        }
    }

    // socle-members-equal-basis: scanning all members finds exactly the
    // basis exponents (monomial form plus down-closedness in one test)
    let scan_top = cstar + u64::from(r.max(2) - 1) * gmax + g1;
    let mut scanned = Vec::new();
    for x in 1..=scan_top {
        if s.contains(x as i64) && graded.socle_membership(x).unwrap() {
            scanned.push(x);
        }
    }
    if scanned != basis.exponents() {
        push(
            "socle-members-equal-basis",
            format!("scan {scanned:?} vs basis {:?}", basis.exponents()),
        );
    }

    // annihilator-chain: (0:M^r) membership via iterated products equals the
    // socle test, and the chain (0:M^k) grows with k on basis exponents
    for x in 1..=scan_top {
        if s.contains(x as i64) {
            let via_power = graded.annihilated_by_m_power(x, r).unwrap();
            let via_socle = graded.socle_membership(x).unwrap();
            if via_power != via_socle {
                push(
                    "annihilator-chain",
                    format!("at {x}: M^r product test = {via_power}, socle = {via_socle}"),
                );
            }
        }
    }
    for e in &basis.entries {
        let mut previous = false;
        for k in 1..=r {
            let now = graded.annihilated_by_m_power(e.exponent, k).unwrap();
            if previous && !now {
                push(
                    "annihilator-chain",
                    format!("chain broke at exponent {} between powers {} and {k}", e.exponent, k - 1),
                );
            }
            previous = now;
        }
        if graded.annihilated_by_m(e.exponent).unwrap()
            && !graded.annihilated_by_m_power(e.exponent, r).unwrap()
        {
            push(
                "annihilator-chain",
                format!("(0:M) member {} escaped (0:M^r)", e.exponent),
            );
        }
    }

    // buchsbaum-colon-agree: Buchsbaum iff every socle member dies in degree 1
    let colon = scanned
        .iter()
        .all(|&x| graded.annihilated_by_m(x).unwrap());
    if report.buchsbaum != colon {
        push(
            "buchsbaum-colon-agree",
            format!("decider = {}, colon scan = {colon}", report.buchsbaum),
        );
    }

    // buchsbaum-fastpath-agree
    if let Some(fast) = graded.buchsbaum_fast_path() {
        if fast != report.buchsbaum {
            push(
                "buchsbaum-fastpath-agree",
                format!("fast = {fast}, general = {}", report.buchsbaum),
            );
        }
    }

    // buchsbaum-structure: consequences of Buchsbaumness
    if report.buchsbaum {
        let mam = report.max_ap_m.clone();
        let defect_records: Vec<_> = report
            .apery_records
            .iter()
            .filter(|rec| rec.is_defect())
            .collect();
        for rec in &defect_records {
            if !mam.contains(&rec.omega) {
                push(
                    "buchsbaum-structure",
                    format!("defect omega_{} = {} not in maxAp_M", rec.class_index, rec.omega),
                );
            }
            let level = rec.level.unwrap();
            if level >= rec.a - rec.b {
                push(
                    "buchsbaum-structure",
                    format!("l_{} = {level} >= a - b = {}", rec.class_index, rec.a - rec.b),
                );
            }
        }
        for x in &defect_records {
            for y in &defect_records {
                if x.class_index != y.class_index && graded.le_m(x.omega, y.omega).unwrap() {
                    push(
                        "buchsbaum-structure",
                        format!("defect elements {} <=_M {} are comparable", x.omega, y.omega),
                    );
                }
            }
        }
        let level_sum: usize = defect_records
            .iter()
            .map(|rec| rec.level.unwrap() as usize + 1)
            .sum();
        if report.lambda != level_sum {
            push(
                "buchsbaum-structure",
                format!("lambda = {} != sum(l_i + 1) = {level_sum}", report.lambda),
            );
        }
        let gap_sum: usize = defect_records
            .iter()
            .map(|rec| (rec.a - rec.b) as usize)
            .sum();
        if report.lambda > gap_sum {
            push(
                "buchsbaum-structure",
                format!("lambda = {} > sum(a_i - b_i) = {gap_sum}", report.lambda),
            );
        }
        if defect_records.iter().all(|rec| rec.a - rec.b == 1)
            && report.lambda != defect_records.len()
        {
            push(
                "buchsbaum-structure",
                format!(
                    "all gaps are 1 but lambda = {} != |I| = {}",
                    report.lambda,
                    defect_records.len()
                ),
            );
        }
    }

    // cm-criteria-agree
    if graded.is_cm_full() != graded.is_cm_maxap() {
        push(
            "cm-criteria-agree",
            format!(
                "full = {}, maxAp = {}",
                graded.is_cm_full(),
                graded.is_cm_maxap()
            ),
        );
    }

    // lambda-le-1-buchsbaum
    if report.lambda <= 1 && !report.buchsbaum {
        push(
            "lambda-le-1-buchsbaum",
            format!("lambda = {} without Buchsbaum", report.lambda),
        );
    }

    // m-pure-maxap-coincide: purity collapses maxAp_M to the <=_S maxima
    if report.m_pure && report.max_ap_m != graded.max_ap_s() {
        push(
            "m-pure-maxap-coincide",
            format!("maxAp_M {:?} vs maxAp_S {:?}", report.max_ap_m, graded.max_ap_s()),
        );
    }

    // report-consistency: the cheap global relations
    if report.nilpotency_index > r {
        push(
            "report-consistency",
            format!("s_J = {} > r = {r}", report.nilpotency_index),
        );
    }
    if report.cm && !report.buchsbaum {
        push("report-consistency", "CM without Buchsbaum".into());
    }
    if report.g_gorenstein && !report.cm {
        push("report-consistency", "Gorenstein without CM".into());
    }
    if report.g_gorenstein != (report.symmetric && report.m_pure && report.buchsbaum) {
        push("report-consistency", "Gorenstein flag mismatch".into());
    }
    if report.cm != report.socle_basis.is_empty() {
        push("report-consistency", "CM flag vs socle emptiness".into());
    }
    if report.lambda != report.socle_basis.len() {
        push("report-consistency", "lambda vs basis size".into());
    }
    for rec in &report.apery_records {
        if rec.class_index == 0 {
            if rec.a != 0 || rec.b != 0 {
                push("report-consistency", format!("class 0 has a = {}, b = {}", rec.a, rec.b));
            }
        } else if !(1 <= rec.b && rec.b <= rec.a) {
            push(
                "report-consistency",
                format!("class {}: need 1 <= b <= a, got a = {}, b = {}", rec.class_index, rec.a, rec.b),
            );
        }
        if rec.is_defect() {
            if r < rec.b + 2 {
                push(
                    "report-consistency",
                    format!("defect class {} but r = {r} < b + 2", rec.class_index),
                );
            }
            match rec.level {
                Some(level) if level <= r.saturating_sub(2 + rec.b) => {}
                other => push(
                    "report-consistency",
                    format!("defect class {} level {other:?} out of range", rec.class_index),
                ),
            }
        } else if rec.level.is_some() {
            push(
                "report-consistency",
                format!("non-defect class {} carries a level", rec.class_index),
            );
        }
    }
    if report.cm != report.defect_classes.is_empty() {
        push("report-consistency", "CM flag vs defect classes".into());
    }

    // threegen-structure and the symmetric corollary
    if s.generators().len() == 3 {
        match threegen::report_from_analysis(s, &report) {
            Ok(tg) => {
                if !tg.equivalences_hold {
                    push(
                        "threegen-structure",
                        format!("equivalences broken: {tg:?}, lambda = {}", report.lambda),
                    );
                }
                if report.buchsbaum && !report.cm {
                    if !(tg.defect_unique && tg.defect_is_k_g3 && report.lambda == 1) {
                        push("threegen-structure", format!("Buchsbaum-not-CM shape broken: {tg:?}"));
                    }
                    let kg3 = u64::from(tg.k) * s.generators()[2];
                    if graded.ord(kg3) != Some(tg.k) {
                        push(
                            "threegen-structure",
                            format!("ord({kg3}) = {:?} != k = {}", graded.ord(kg3), tg.k),
                        );
                    }
                }
            }
            Err(e) => push("threegen-structure", format!("unexpected error: {e}")),
        }
        if report.symmetric && report.buchsbaum && !report.cm {
            push("threegen-symmetric", "symmetric 3-generated Buchsbaum must be CM".into());
        }
    }

    out
}
