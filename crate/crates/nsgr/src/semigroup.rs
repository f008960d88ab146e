//! Numerical semigroup arithmetic: construction with canonical minimal
//! generators, membership, Apéry sets, Frobenius number, symmetry, and the
//! order function `ord(s)` together with the ideal powers `hM`.

use once_cell::sync::Lazy;
use thiserror::Error;

/// Cap on materialized table sizes, taken from the `NSGR_MAX_TABLE`
/// environment variable. Unset (or unparsable) means unlimited.
static TABLE_CAP: Lazy<Option<u64>> = Lazy::new(|| {
    std::env::var("NSGR_MAX_TABLE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
});

fn check_table_cap(bound: u64) {
    if let Some(cap) = *TABLE_CAP {
        if bound > cap {
            panic!("table bound {bound} exceeds NSGR_MAX_TABLE={cap}");
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(u64),
}

/// A numerical semigroup: a cofinite additive submonoid of the naturals,
/// stored as its canonical minimal generating system plus a membership table
/// up to the conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    /// membership over `[0, conductor]`; everything past the conductor is in.
    membership: Vec<bool>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reducing the input to the
    /// minimal generating system. Zeros are ignored.
    ///
    /// Membership is sieved up to `max(raw)^2 + max(raw)`, which lies past
    /// the largest gap of any gcd-1 system, and the Frobenius number is the
    /// last gap of the sieve.
    pub fn new(raw: &[u64]) -> Result<Self, SemigroupError> {
        let mut gens: Vec<u64> = raw.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(SemigroupError::EmptyInput);
        }
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(SemigroupError::GcdNotOne(d));
        }

        let gmax = *gens.last().unwrap();
        let bound = gmax * gmax + gmax + 1;
        check_table_cap(bound);
        let mut membership = vec![false; bound as usize];
        membership[0] = true;
        for x in 1..membership.len() {
            membership[x] = gens
                .iter()
                .any(|&g| g as usize <= x && membership[x - g as usize]);
        }
        // a full run of gmax members at the top certifies the sieve reached
        // the cofinite tail
        debug_assert!(membership[membership.len() - gmax as usize..]
            .iter()
            .all(|&m| m));

        let frobenius = match membership.iter().rposition(|&m| !m) {
            Some(x) => x as i64,
            None => -1,
        };

        // minimal generators are exactly the members of M not in M + M
        let generators: Vec<u64> = gens
            .into_iter()
            .filter(|&h| !(1..h).any(|x| membership[x as usize] && membership[(h - x) as usize]))
            .collect();

        membership.truncate((frobenius + 2) as usize);
        Ok(NumericalSemigroup {
            generators,
            frobenius,
            membership,
        })
    }

    /// The minimal generating system, sorted ascending.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The least nonzero element (the first minimal generator).
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// The largest integer not in the semigroup; `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.membership.iter().filter(|&&m| !m).count() as u64
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let x = x as u64;
        x >= self.conductor() || self.membership[x as usize]
    }

    /// True iff for every integer `x` in `[0, g]` exactly one of `x`,
    /// `g - x` belongs to the semigroup (g the Frobenius number).
    pub fn is_symmetric(&self) -> bool {
        let g = self.frobenius;
        (0..=g).all(|x| self.contains(x) != self.contains(g - x))
    }

    /// The Apéry set with respect to the multiplicity, indexed by residue
    /// class: entry `i` is the least member congruent to `i`.
    pub fn apery(&self) -> Vec<u64> {
        self.apery_mod(self.multiplicity())
    }

    /// Apéry set with respect to an arbitrary positive modulus. Needed
    /// internally for the blow-up, which is probed modulo the multiplicity
    /// of the original semigroup.
    pub(crate) fn apery_mod(&self, modulus: u64) -> Vec<u64> {
        assert!(modulus > 0);
        let mut out = vec![None; modulus as usize];
        let mut found = 0usize;
        let mut s = 0u64;
        while found < modulus as usize {
            let class = (s % modulus) as usize;
            if out[class].is_none() && self.contains(s as i64) {
                out[class] = Some(s);
                found += 1;
            }
            s += 1;
        }
        out.into_iter().map(|v| v.unwrap()).collect()
    }

    /// Materializes `ord` over `[0, bound)`.
    pub fn order_table(&self, bound: u64) -> OrderTable {
        let mut table = OrderTable {
            generators: self.generators.clone(),
            ord: Vec::new(),
        };
        table.extend_to(bound);
        table
    }
}

/// Dynamic-programming table of the order function: `ord(s)` is the largest
/// `h` with `s` in the h-fold sumset `hM` of the maximal ideal.
///
/// Entry `s` is `None` exactly when `s` is not a member; extension appends
/// entries, so previously read values never change.
#[derive(Debug, Clone)]
pub struct OrderTable {
    generators: Vec<u64>,
    ord: Vec<Option<u32>>,
}

impl OrderTable {
    /// Exclusive upper end of the materialized range.
    pub fn bound(&self) -> u64 {
        self.ord.len() as u64
    }

    /// Grows the table to cover `[0, bound)` using
    /// `ord(s) = 1 + max ord(s - g_j)` over generators with `s - g_j` in S.
    pub fn extend_to(&mut self, bound: u64) {
        if bound <= self.ord.len() as u64 {
            return;
        }
        check_table_cap(bound);
        self.ord.reserve(bound as usize - self.ord.len());
        for s in self.ord.len() as u64..bound {
            let value = if s == 0 {
                Some(0)
            } else {
                self.generators
                    .iter()
                    .filter(|&&g| g <= s)
                    .filter_map(|&g| self.ord[(s - g) as usize])
                    .map(|o| o + 1)
                    .max()
            };
            self.ord.push(value);
        }
    }

    /// `ord(s)`, `None` when `s` is not a member. Panics if `s` is beyond
    /// the materialized bound.
    pub fn ord(&self, s: u64) -> Option<u32> {
        self.ord[s as usize]
    }

    /// `ord(s)`, growing the table as needed.
    pub fn ord_extending(&mut self, s: u64) -> Option<u32> {
        self.extend_to(s + 1);
        self.ord[s as usize]
    }

    /// Membership of `s` in the ideal power `hM`, with `0M` taken to be the
    /// whole semigroup.
    pub fn in_ideal_power(&mut self, s: i64, h: u32) -> bool {
        if s < 0 {
            return false;
        }
        match self.ord_extending(s as u64) {
            None => false,
            Some(_) if h == 0 => true,
            Some(o) => o >= h,
        }
    }
}
