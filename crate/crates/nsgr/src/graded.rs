//! Invariants of the associated graded ring G(m) of a numerical semigroup
//! ring, computed at the semigroup level: the blow-up, the per-class Apéry
//! invariants a_i and b_i, the reduction number, the nilpotency index, the
//! monomial basis of the socle (0 : M^r) together with an independently
//! derived oracle for it, the ≤_M ordering with its maximal Apéry elements,
//! M-purity, and the Cohen-Macaulay / Buchsbaum / Gorenstein deciders.
//!
//! The socle module (0 : M^r) of G(m) is spanned by monomials, so every
//! annihilator question below is decided on monomial classes only.

use std::cell::RefCell;
use std::collections::HashMap;

use thiserror::Error;

use crate::semigroup::{NumericalSemigroup, OrderTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradedError {
    #[error("{0} is not an element of the semigroup")]
    NotInSemigroup(u64),
    #[error("residue class {0} is not a defect class (a = b)")]
    NotDefectClass(usize),
}

/// Per residue class data: the Apéry element of the semigroup, the Apéry
/// element of the blow-up in the same class, the shift `a` between them in
/// multiplicity steps, the order `b` of the Apéry element, and (for defect
/// classes, where `a > b`) the level of the class inside the socle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyRecord {
    pub class_index: usize,
    pub omega: u64,
    pub omega_prime: u64,
    pub a: u32,
    pub b: u32,
    /// Largest `l` with `omega + l * multiplicity` in the socle; present
    /// exactly for defect classes.
    pub level: Option<u32>,
}

impl AperyRecord {
    pub fn is_defect(&self) -> bool {
        self.a > self.b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SocleEntry {
    pub exponent: u64,
    pub order: u32,
}

/// Monomial basis of the socle (0 : M^r): one entry per exponent, sorted.
/// Empty exactly when G(m) is Cohen-Macaulay.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SocleBasis {
    pub entries: Vec<SocleEntry>,
}

impl SocleBasis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn exponents(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.exponent).collect()
    }
}

/// Aggregated verdicts for one semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub generators: Vec<u64>,
    pub multiplicity: u64,
    pub frobenius: i64,
    pub symmetric: bool,
    pub reduction_number: u32,
    pub nilpotency_index: u32,
    pub apery_records: Vec<AperyRecord>,
    pub defect_classes: Vec<usize>,
    pub socle_basis: SocleBasis,
    pub lambda: usize,
    pub max_ap_m: Vec<u64>,
    pub m_pure: bool,
    pub cm: bool,
    pub buchsbaum: bool,
    pub g_gorenstein: bool,
}

/// The blow-up semigroup, generated by the multiplicity together with the
/// other generators shifted down by it (re-minimalized; the multiplicity of
/// the original semigroup need not stay the smallest element).
pub fn blowup(s: &NumericalSemigroup) -> NumericalSemigroup {
    let g1 = s.multiplicity();
    let mut raw: Vec<u64> = Vec::with_capacity(s.generators().len());
    raw.push(g1);
    raw.extend(s.generators()[1..].iter().map(|&g| g - g1));
    NumericalSemigroup::new(&raw).expect("blow-up generators keep gcd 1")
}

/// Analysis context for the associated graded ring of one semigroup.
///
/// Construction performs the full pipeline: blow-up, reduction number,
/// Apéry invariants and defect levels. Queries extend the shared order
/// table on demand, so the context is single-threaded by design;
/// parallelize across semigroups, not within one.
pub struct GradedRing<'a> {
    sgp: &'a NumericalSemigroup,
    blow: NumericalSemigroup,
    reduction: u32,
    records: Vec<AperyRecord>,
    ord: RefCell<OrderTable>,
    ann_memo: RefCell<HashMap<(u64, u32), bool>>,
}

impl<'a> GradedRing<'a> {
    pub fn new(sgp: &'a NumericalSemigroup) -> GradedRing<'a> {
        let g1 = sgp.multiplicity();
        let gmax = *sgp.generators().last().unwrap();
        let cstar = sgp.conductor().max(1);
        let blow = blowup(sgp);

        let mut ord = sgp.order_table(cstar + gmax + g1 + 2);

        // least h >= 1 with (h+1)M = g1 + hM; both sides agree beyond
        // cstar + h * gmax, so the window below is a complete check
        let cap = sgp.conductor() + gmax;
        let mut reduction = 0u32;
        for h in 1.. {
            assert!(u64::from(h) <= cap, "reduction number exceeded conductor + max generator");
            let hi = cstar + u64::from(h) * gmax + g1;
            ord.extend_to(hi + 1);
            let lo = u64::from(h + 1) * g1;
            let equal = (lo..=hi).all(|s| match ord.ord(s) {
                Some(o) if o > h => {
                    s >= g1 && matches!(ord.ord(s - g1), Some(p) if p >= h)
                }
                _ => true,
            });
            if equal {
                reduction = h;
                break;
            }
        }

        ord.extend_to(cstar + (u64::from(reduction) + 3) * gmax + 2);

        let ap = sgp.apery();
        let ap_prime = blow.apery_mod(g1);
        let mut records: Vec<AperyRecord> = ap
            .iter()
            .zip(ap_prime.iter())
            .enumerate()
            .map(|(i, (&omega, &omega_prime))| AperyRecord {
                class_index: i,
                omega,
                omega_prime,
                a: ((omega - omega_prime) / g1) as u32,
                b: ord.ord(omega).expect("Apéry elements are members"),
                level: None,
            })
            .collect();

        // defect levels: exhaustive scan of l in [0, r - 2 - b]; the scan is
        // nonempty for defect classes since l = 0 passes exactly when a > b
        for rec in records.iter_mut().filter(|rec| rec.a > rec.b) {
            let mut level = None;
            if reduction >= rec.b + 2 {
                for l in 0..=(reduction - 2 - rec.b) {
                    let s = rec.omega + u64::from(l) * g1;
                    if socle_member_impl(&mut ord, &blow, g1, reduction, s)
                        .expect("class representatives are members")
                    {
                        level = Some(l.max(level.unwrap_or(0)));
                    }
                }
            }
            rec.level = Some(level.unwrap_or_else(|| {
                panic!(
                    "defect class {} of {:?} has no socle member",
                    rec.class_index,
                    sgp.generators()
                )
            }));
        }

        GradedRing {
            sgp,
            blow,
            reduction,
            records,
            ord: RefCell::new(ord),
            ann_memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        self.sgp
    }

    pub fn blowup_semigroup(&self) -> &NumericalSemigroup {
        &self.blow
    }

    /// Least h with (h+1)M = g1 + hM; always >= 1.
    pub fn reduction_number(&self) -> u32 {
        self.reduction
    }

    /// Largest order of an Apéry element; never exceeds the reduction number.
    pub fn nilpotency_index(&self) -> u32 {
        self.records.iter().map(|r| r.b).max().unwrap_or(0)
    }

    pub fn apery_invariants(&self) -> &[AperyRecord] {
        &self.records
    }

    pub fn defect_classes(&self) -> Vec<usize> {
        self.records
            .iter()
            .filter(|r| r.is_defect())
            .map(|r| r.class_index)
            .collect()
    }

    /// `ord(s)`, extending the shared table as needed.
    pub fn ord(&self, s: u64) -> Option<u32> {
        self.ord.borrow_mut().ord_extending(s)
    }

    /// Whether the monomial class of `s` lies in the socle (0 : M^r): with
    /// `h = ord(s)`, true iff `1 <= h <= r - 2` and `s - (h+1) g1` is in the
    /// blow-up.
    pub fn socle_membership(&self, s: u64) -> Result<bool, GradedError> {
        let mut ord = self.ord.borrow_mut();
        socle_member_impl(
            &mut ord,
            &self.blow,
            self.sgp.multiplicity(),
            self.reduction,
            s,
        )
        .ok_or(GradedError::NotInSemigroup(s))
    }

    /// Largest level of a defect class; errors on classes with `a = b`.
    pub fn defect_level(&self, class_index: usize) -> Result<u32, GradedError> {
        self.records
            .get(class_index)
            .and_then(|r| r.level)
            .ok_or(GradedError::NotDefectClass(class_index))
    }

    /// Socle basis via defect classes and their levels: exponents
    /// `omega_i + l g1` for `0 <= l <= l_i`.
    pub fn socle_basis(&self) -> SocleBasis {
        let g1 = self.sgp.multiplicity();
        let mut entries = Vec::new();
        for rec in self.records.iter().filter(|r| r.is_defect()) {
            for l in 0..=rec.level.expect("defect classes carry a level") {
                let exponent = rec.omega + u64::from(l) * g1;
                let order = self.ord(exponent).expect("basis exponents are members");
                entries.push(SocleEntry { exponent, order });
            }
        }
        entries.sort_unstable();
        SocleBasis { entries }
    }

    /// Independent derivation of the socle basis straight from the colon
    /// ideal description: `s` qualifies when `h = ord(s)` lies in
    /// `[1, r - 2]` and `s + u` is in `(h + r + 1)M` for every `u` in `rM`,
    /// the quantifier checked up to the bound past which membership is
    /// automatic. Must coincide with `socle_basis` on every input.
    pub fn socle_basis_oracle(&self) -> SocleBasis {
        let r = self.reduction;
        if r <= 2 {
            return SocleBasis::default();
        }
        let g1 = self.sgp.multiplicity();
        let gmax = *self.sgp.generators().last().unwrap();
        let cstar = self.sgp.conductor().max(1);

        let mut ord = self.ord.borrow_mut();
        // everything at or above cstar + (r-2) gmax has order >= r - 1
        let smax = cstar + u64::from(r - 2) * gmax;
        ord.extend_to(cstar + u64::from(2 * r - 2) * gmax + 2);

        let mut entries = Vec::new();
        for s in 1..smax {
            let Some(h) = ord.ord(s) else { continue };
            if h < 1 || h + 2 > r {
                continue;
            }
            let ub = cstar + u64::from(h + r) * gmax - s;
            let good = (u64::from(r) * g1..=ub).all(|u| match ord.ord(u) {
                Some(ou) if ou >= r => {
                    matches!(ord.ord(s + u), Some(osu) if osu > h + r)
                }
                _ => true,
            });
            if good {
                entries.push(SocleEntry {
                    exponent: s,
                    order: h,
                });
            }
        }
        SocleBasis { entries }
    }

    /// Whether the monomial class of `s` is killed by every degree-one
    /// generator of the graded ring: `ord(s + g_j) >= ord(s) + 2` for all j.
    pub fn annihilated_by_m(&self, s: u64) -> Result<bool, GradedError> {
        let h = self.ord(s).ok_or(GradedError::NotInSemigroup(s))?;
        Ok(self
            .sgp
            .generators()
            .iter()
            .all(|&g| matches!(self.ord(s + g), Some(o) if o >= h + 2)))
    }

    /// Membership of the monomial class of `s` in (0 : M^k), k >= 1. For
    /// k > 1, each degree-one product must either vanish or be annihilated
    /// by M^(k-1).
    pub fn annihilated_by_m_power(&self, s: u64, k: u32) -> Result<bool, GradedError> {
        assert!(k >= 1, "annihilator power must be at least 1");
        let h = self.ord(s).ok_or(GradedError::NotInSemigroup(s))?;
        Ok(self.ann_mk(s, h, k))
    }

    fn ann_mk(&self, s: u64, h: u32, k: u32) -> bool {
        if let Some(&v) = self.ann_memo.borrow().get(&(s, k)) {
            return v;
        }
        let value = if k == 1 {
            self.sgp
                .generators()
                .iter()
                .all(|&g| matches!(self.ord(s + g), Some(o) if o >= h + 2))
        } else {
            self.sgp.generators().iter().all(|&g| {
                let hg = self.ord(s + g).expect("sum of members is a member");
                hg >= h + 2 || self.ann_mk(s + g, hg, k - 1)
            })
        };
        self.ann_memo.borrow_mut().insert((s, k), value);
        value
    }

    /// Cohen-Macaulayness via every residue class: `a_i = b_i` for all i.
    pub fn is_cm_full(&self) -> bool {
        self.records.iter().all(|r| r.a == r.b)
    }

    /// Cohen-Macaulayness via the classes whose Apéry element is ≤_M-maximal
    /// only. Agrees with `is_cm_full` on every input.
    pub fn is_cm_maxap(&self) -> bool {
        let maximal = self.max_ap_m();
        self.records
            .iter()
            .filter(|r| maximal.binary_search(&r.omega).is_ok())
            .all(|r| r.a == r.b)
    }

    /// The ≤_M comparison: `u ≤_M v` iff `v - u` is a member and orders add
    /// exactly, `ord(u) + ord(v - u) = ord(v)`.
    pub fn le_m(&self, u: u64, v: u64) -> Result<bool, GradedError> {
        let ou = self.ord(u).ok_or(GradedError::NotInSemigroup(u))?;
        let ov = self.ord(v).ok_or(GradedError::NotInSemigroup(v))?;
        if v < u {
            return Ok(false);
        }
        Ok(match self.ord(v - u) {
            Some(od) => ou + od == ov,
            None => false,
        })
    }

    /// Apéry elements maximal under ≤_M, sorted ascending.
    pub fn max_ap_m(&self) -> Vec<u64> {
        let ap: Vec<u64> = self.records.iter().map(|r| r.omega).collect();
        let mut out: Vec<u64> = ap
            .iter()
            .copied()
            .filter(|&w| {
                !ap.iter()
                    .any(|&w2| w2 != w && self.le_m(w, w2).expect("Apéry elements are members"))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Apéry elements maximal under the plain semigroup ordering ≤_S,
    /// sorted ascending. Always a subset of `max_ap_m`.
    pub fn max_ap_s(&self) -> Vec<u64> {
        let ap: Vec<u64> = self.records.iter().map(|r| r.omega).collect();
        let mut out: Vec<u64> = ap
            .iter()
            .copied()
            .filter(|&w| {
                !ap.iter()
                    .any(|&w2| w2 != w && self.sgp.contains(w2 as i64 - w as i64))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Whether all ≤_M-maximal Apéry elements share the same order.
    pub fn is_m_pure(&self) -> bool {
        let mut orders = self
            .max_ap_m()
            .into_iter()
            .map(|w| self.ord(w).expect("Apéry elements are members"));
        match orders.next() {
            None => true,
            Some(first) => orders.all(|o| o == first),
        }
    }

    /// Buchsbaum decider: every socle basis monomial must be annihilated by
    /// the maximal ideal itself.
    pub fn is_buchsbaum(&self) -> bool {
        let general = self
            .socle_basis()
            .entries
            .iter()
            .all(|e| self.annihilated_by_m(e.exponent).expect("basis exponents are members"));
        debug_assert!(
            self.buchsbaum_fast_path().is_none_or(|fast| fast == general),
            "fast path disagrees with the general Buchsbaum test"
        );
        general
    }

    /// Shortcut valid when every defect class has `a - b = 1`: only the
    /// Apéry elements themselves need the degree-one annihilation test.
    /// `None` when some defect class has `a - b >= 2`.
    pub fn buchsbaum_fast_path(&self) -> Option<bool> {
        let defects: Vec<&AperyRecord> = self.records.iter().filter(|r| r.is_defect()).collect();
        if defects.iter().any(|r| r.a - r.b >= 2) {
            return None;
        }
        Some(defects.iter().all(|r| {
            self.annihilated_by_m(r.omega)
                .expect("Apéry elements are members")
        }))
    }

    /// Length of the socle as a module over the graded ring: the number of
    /// basis monomials.
    pub fn socle_length(&self) -> usize {
        self.socle_basis().len()
    }

    /// Gorenstein decider for the graded ring: symmetric, M-pure and
    /// Buchsbaum.
    pub fn is_g_gorenstein(&self) -> bool {
        let result = self.sgp.is_symmetric() && self.is_m_pure() && self.is_buchsbaum();
        debug_assert!(!result || self.is_cm_full());
        result
    }

    pub fn analyze(&self) -> AnalysisReport {
        let socle_basis = self.socle_basis();
        let lambda = socle_basis.len();
        let cm = self.is_cm_full();
        let buchsbaum = self.is_buchsbaum();
        let g_gorenstein = self.is_g_gorenstein();
        let report = AnalysisReport {
            generators: self.sgp.generators().to_vec(),
            multiplicity: self.sgp.multiplicity(),
            frobenius: self.sgp.frobenius(),
            symmetric: self.sgp.is_symmetric(),
            reduction_number: self.reduction,
            nilpotency_index: self.nilpotency_index(),
            apery_records: self.records.clone(),
            defect_classes: self.defect_classes(),
            socle_basis,
            lambda,
            max_ap_m: self.max_ap_m(),
            m_pure: self.is_m_pure(),
            cm,
            buchsbaum,
            g_gorenstein,
        };
        debug_assert!(!report.cm || report.buchsbaum);
        debug_assert!(!report.g_gorenstein || (report.symmetric && report.m_pure && report.buchsbaum));
        debug_assert!(report.cm == report.socle_basis.is_empty());
        debug_assert!(report.nilpotency_index <= report.reduction_number);
        debug_assert_eq!(report.cm, self.is_cm_maxap());
        report
    }
}

/// Full analysis of one semigroup.
pub fn analyze(s: &NumericalSemigroup) -> AnalysisReport {
    GradedRing::new(s).analyze()
}

/// `None` when `s` is not a member; otherwise the socle test of the class
/// of `s`.
fn socle_member_impl(
    ord: &mut OrderTable,
    blow: &NumericalSemigroup,
    g1: u64,
    r: u32,
    s: u64,
) -> Option<bool> {
    let h = ord.ord_extending(s)?;
    if h < 1 || h + 2 > r {
        return Some(false);
    }
    Some(blow.contains(s as i64 - i64::from(h + 1) * g1 as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    /// Binds the owning semigroup and the graded ring in one go.
    macro_rules! ring {
        ($g:ident, $gens:expr) => {
            let owner = sgp($gens);
            let $g = GradedRing::new(&owner);
        };
    }

    #[test]
    fn blowup_examples() {
        assert_eq!(
            blowup(&sgp(&[12, 19, 29, 104])).generators(),
            &[7, 12, 17]
        );
        assert_eq!(blowup(&sgp(&[4, 5, 11])).generators(), &[1]);
        assert_eq!(blowup(&sgp(&[1])).generators(), &[1]);
        assert_eq!(blowup(&sgp(&[3, 7, 8])).generators(), &[3, 4, 5]);
    }

    #[test]
    fn reduction_number_examples() {
        assert_eq!(GradedRing::new(&sgp(&[12, 19, 29, 104])).reduction_number(), 8);
        assert_eq!(GradedRing::new(&sgp(&[4, 5, 11])).reduction_number(), 3);
        assert_eq!(GradedRing::new(&sgp(&[1])).reduction_number(), 1);
        assert_eq!(GradedRing::new(&sgp(&[8, 9, 15])).reduction_number(), 6);
    }

    #[test]
    fn nilpotency_examples() {
        assert_eq!(GradedRing::new(&sgp(&[4, 5, 11])).nilpotency_index(), 2);
        assert_eq!(GradedRing::new(&sgp(&[9, 10, 11, 23])).nilpotency_index(), 4);
        assert_eq!(GradedRing::new(&sgp(&[1])).nilpotency_index(), 0);
        assert_eq!(GradedRing::new(&sgp(&[12, 19, 29, 104])).nilpotency_index(), 7);
    }

    #[test]
    fn apery_invariants_examples() {
        let s = sgp(&[12, 19, 29, 104]);
        let g = GradedRing::new(&s);
        let rec = &g.apery_invariants()[8];
        assert_eq!((rec.omega, rec.a, rec.b), (104, 4, 1));
        assert_eq!(g.defect_classes(), vec![8]);

        let s = sgp(&[17, 18, 21, 28, 29, 32, 33]);
        let g = GradedRing::new(&s);
        let r7 = &g.apery_invariants()[7];
        let r10 = &g.apery_invariants()[10];
        assert_eq!((r7.omega, r7.a, r7.b), (58, 3, 2));
        assert_eq!((r10.omega, r10.a, r10.b), (61, 3, 2));
        assert_eq!(g.defect_classes(), vec![7, 10]);

        let rec0 = &g.apery_invariants()[0];
        assert_eq!((rec0.omega, rec0.omega_prime, rec0.a, rec0.b), (0, 0, 0, 0));

        let s = sgp(&[8, 9, 12, 13, 19]);
        let g = GradedRing::new(&s);
        let rec = &g.apery_invariants()[3];
        assert_eq!((rec.omega, rec.a, rec.b), (19, 2, 1));
        assert_eq!(g.defect_classes(), vec![3]);
    }

    #[test]
    fn apery_record_bounds() {
        for gens in [&[4u64, 5, 11][..], &[12, 19, 29, 104], &[10, 13, 14]] {
            let s = sgp(gens);
            let g = GradedRing::new(&s);
            for rec in g.apery_invariants() {
                if rec.class_index == 0 {
                    assert_eq!((rec.a, rec.b), (0, 0));
                } else {
                    assert!(1 <= rec.b && rec.b <= rec.a);
                }
                assert_eq!(rec.omega % s.multiplicity(), rec.class_index as u64);
                assert_eq!(rec.omega_prime % s.multiplicity(), rec.class_index as u64);
                if let Some(level) = rec.level {
                    assert!(g.reduction_number() >= rec.b + 2);
                    assert!(level <= g.reduction_number() - 2 - rec.b);
                }
            }
        }
    }

    #[test]
    fn socle_membership_examples() {
        let s = sgp(&[12, 19, 29, 104]);
        let g = GradedRing::new(&s);
        assert_eq!(g.socle_membership(104), Ok(true));
        assert_eq!(g.socle_membership(116), Ok(true));
        // 121 is the Frobenius number, not a member
        assert_eq!(
            g.socle_membership(121),
            Err(GradedError::NotInSemigroup(121))
        );

        let s = sgp(&[10, 13, 14]);
        let g = GradedRing::new(&s);
        assert_eq!(g.socle_membership(55), Ok(false));
        assert_eq!(g.socle_membership(0), Ok(false));
    }

    #[test]
    fn defect_level_examples() {
        let s = sgp(&[12, 19, 29, 104]);
        let g = GradedRing::new(&s);
        assert_eq!(g.defect_level(8), Ok(3));
        assert_eq!(g.defect_level(1), Err(GradedError::NotDefectClass(1)));

        let s = sgp(&[8, 9, 12, 13, 19]);
        assert_eq!(GradedRing::new(&s).defect_level(3), Ok(0));

        let s = sgp(&[17, 18, 21, 28, 29, 32, 33]);
        let g = GradedRing::new(&s);
        assert_eq!(g.defect_level(7), Ok(0));
        assert_eq!(g.defect_level(10), Ok(0));
    }

    #[test]
    fn socle_basis_examples() {
        ring!(g, &[17, 18, 21, 28, 29, 32, 33]);
        assert_eq!(g.socle_basis().exponents(), vec![58, 61]);

        ring!(g, &[10, 13, 14]);
        assert!(g.socle_basis().is_empty());

        ring!(g, &[4, 5, 11]);
        let basis = g.socle_basis();
        assert_eq!(basis.exponents(), vec![11]);
        assert_eq!(basis.entries[0].order, 1);

        // the defect class of <12,19,29,104> carries levels 0..=3
        ring!(g, &[12, 19, 29, 104]);
        assert_eq!(g.socle_basis().exponents(), vec![104, 116, 128, 140]);
    }

    #[test]
    fn socle_oracle_matches_basis() {
        for gens in [
            &[12u64, 19, 29, 104][..],
            &[10, 13, 14],
            &[8, 9, 12, 13, 19],
            &[17, 18, 21, 28, 29, 32, 33],
            &[4, 5, 11],
            &[8, 9, 15],
            &[9, 10, 11, 23],
            &[1],
        ] {
            let s = sgp(gens);
            let g = GradedRing::new(&s);
            assert_eq!(g.socle_basis(), g.socle_basis_oracle(), "{gens:?}");
        }
    }

    #[test]
    fn socle_oracle_examples() {
        ring!(g, &[12, 19, 29, 104]);
        assert!(g.socle_basis_oracle().exponents().contains(&116));

        ring!(g, &[8, 9, 12, 13, 19]);
        assert_eq!(g.socle_basis_oracle().exponents(), vec![19]);
    }

    #[test]
    fn annihilated_by_m_examples() {
        ring!(g, &[12, 19, 29, 104]);
        assert_eq!(g.annihilated_by_m(104), Ok(true));
        assert_eq!(g.annihilated_by_m(116), Ok(false));
        assert_eq!(g.annihilated_by_m(5), Err(GradedError::NotInSemigroup(5)));

        ring!(g, &[17, 18, 21, 28, 29, 32, 33]);
        assert_eq!(g.annihilated_by_m(58), Ok(true));
    }

    #[test]
    fn annihilated_by_m_power_examples() {
        ring!(g, &[12, 19, 29, 104]);
        assert_eq!(g.annihilated_by_m_power(116, 8), Ok(true));
        assert_eq!(g.annihilated_by_m_power(116, 1), Ok(false));

        // power r recovers socle membership on a scan of members
        for gens in [&[12u64, 19, 29, 104][..], &[4, 5, 11], &[9, 10, 11, 23]] {
            let s = sgp(gens);
            let g = GradedRing::new(&s);
            let r = g.reduction_number();
            for x in 1..200 {
                if s.contains(x) {
                    let x = x as u64;
                    assert_eq!(
                        g.annihilated_by_m_power(x, r),
                        g.socle_membership(x),
                        "{gens:?} at {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn cm_examples() {
        ring!(g, &[10, 13, 14]);
        assert!(g.is_cm_full());
        assert!(g.is_cm_maxap());

        ring!(g, &[7, 8, 9, 19]);
        assert!(!g.is_cm_full());
        assert!(!g.is_cm_maxap());
        let rec = &g.apery_invariants()[5];
        assert_eq!((rec.omega, rec.a, rec.b), (19, 2, 1));

        assert!(GradedRing::new(&sgp(&[1])).is_cm_full());
    }

    #[test]
    fn le_m_examples() {
        ring!(g, &[8, 9, 15]);
        assert_eq!(g.le_m(30, 45), Ok(false));
        assert_eq!(g.le_m(0, 30), Ok(true));
        assert_eq!(g.le_m(30, 30), Ok(true));
        assert_eq!(g.le_m(45, 30), Ok(false));
        assert_eq!(g.le_m(7, 30), Err(GradedError::NotInSemigroup(7)));

        // 23 is not maximal in <9,10,11,23>: some Apéry element sits above it
        let s = sgp(&[9, 10, 11, 23]);
        let g = GradedRing::new(&s);
        let above = s
            .apery()
            .into_iter()
            .any(|w| w != 23 && g.le_m(23, w).unwrap());
        assert!(above);
        assert!(!g.max_ap_m().contains(&23));
    }

    #[test]
    fn max_ap_examples() {
        ring!(g, &[8, 9, 15]);
        assert_eq!(g.max_ap_m(), vec![30, 45]);
        assert_eq!(g.max_ap_s(), vec![45]);

        ring!(g, &[1]);
        assert_eq!(g.max_ap_m(), vec![0]);

        ring!(g, &[10, 13, 14]);
        assert_eq!(g.max_ap_m(), vec![39, 55]);

        ring!(g, &[7, 8, 9, 19]);
        assert_eq!(g.max_ap_s(), vec![17, 27]);
        assert_eq!(g.max_ap_m(), vec![17, 19, 27]);
    }

    #[test]
    fn m_pure_examples() {
        assert!(!GradedRing::new(&sgp(&[10, 13, 14])).is_m_pure());
        assert!(GradedRing::new(&sgp(&[4, 5])).is_m_pure());
        assert!(GradedRing::new(&sgp(&[1])).is_m_pure());
        assert!(!GradedRing::new(&sgp(&[8, 9, 12, 13, 19])).is_m_pure());
    }

    #[test]
    fn buchsbaum_examples() {
        assert!(GradedRing::new(&sgp(&[17, 18, 21, 28, 29, 32, 33])).is_buchsbaum());
        assert!(!GradedRing::new(&sgp(&[12, 19, 29, 104])).is_buchsbaum());
        assert!(!GradedRing::new(&sgp(&[9, 10, 11, 23])).is_buchsbaum());
        assert!(GradedRing::new(&sgp(&[10, 13, 14])).is_buchsbaum());
        assert!(GradedRing::new(&sgp(&[8, 9, 12, 13, 19])).is_buchsbaum());
        assert!(GradedRing::new(&sgp(&[4, 5, 11])).is_buchsbaum());
    }

    #[test]
    fn buchsbaum_fast_path_agrees() {
        // defect gap a - b = 1 everywhere: fast path applies
        ring!(g, &[8, 9, 12, 13, 19]);
        assert_eq!(g.buchsbaum_fast_path(), Some(true));
        // <12,19,29,104> has a - b = 3: no fast path
        ring!(g, &[12, 19, 29, 104]);
        assert_eq!(g.buchsbaum_fast_path(), None);
        // CM: vacuous fast path
        ring!(g, &[10, 13, 14]);
        assert_eq!(g.buchsbaum_fast_path(), Some(true));
    }

    #[test]
    fn socle_length_examples() {
        assert_eq!(GradedRing::new(&sgp(&[17, 18, 21, 28, 29, 32, 33])).socle_length(), 2);
        assert_eq!(GradedRing::new(&sgp(&[4, 5, 11])).socle_length(), 1);
        assert_eq!(GradedRing::new(&sgp(&[10, 13, 14])).socle_length(), 0);
        assert_eq!(GradedRing::new(&sgp(&[12, 19, 29, 104])).socle_length(), 4);
    }

    #[test]
    fn gorenstein_examples() {
        assert!(GradedRing::new(&sgp(&[4, 5])).is_g_gorenstein());
        assert!(!GradedRing::new(&sgp(&[8, 9, 12, 13, 19])).is_g_gorenstein());
        assert!(!GradedRing::new(&sgp(&[4, 5, 11])).is_g_gorenstein());
        assert!(GradedRing::new(&sgp(&[1])).is_g_gorenstein());
    }

    #[test]
    fn analyze_examples() {
        let report = analyze(&sgp(&[9, 10, 11, 23]));
        assert!(report.symmetric);
        assert_eq!(report.nilpotency_index, 4);
        assert_eq!(report.reduction_number, 4);
        assert!(!report.buchsbaum);

        let report = analyze(&sgp(&[4, 5, 11]));
        assert!(report.buchsbaum);
        assert_eq!(report.nilpotency_index, 2);
        assert_eq!(report.reduction_number, 3);
        assert_eq!(report.lambda, 1);

        let report = analyze(&sgp(&[1]));
        assert!(report.cm);
        assert_eq!(report.lambda, 0);
        assert_eq!(report.reduction_number, 1);
        assert!(report.g_gorenstein);
    }
}
