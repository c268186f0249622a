//! Orbit enumeration for stable covectors under the adjoint torus and the
//! diagram rotations, and the check that orbits coincide with the fibers of
//! the invariant Delta.
//!
//! Everything runs in discrete-log coordinates: fixing a primitive element
//! g of k^x, a stable covector is a vector of exponents in Z/(q-1), and
//! both the torus generators and the rotation representatives act as
//! permute-and-add maps on those digits. Orbits are then connected
//! components under a handful of exact integer maps, found by union-find.

use crate::chevalley::ChevalleyTable;
use crate::covectors::Covector;
use crate::gf::{Field, FieldElem};
use crate::root_data::RootDatum;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrbitError {
    #[error("orbit sweep needs {needed} actions, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

/// The set of stable covectors over a fixed field, in discrete-log
/// coordinates: index = sum_j d_j (q-1)^j for digit vector d.
#[derive(Debug, Clone)]
pub struct StableSet {
    field: Field,
    width: usize,
    radix: u64,
    /// exponent of the unit with a given position in the canonical unit list
    unit_exp: Vec<u64>,
    /// canonical unit position for a given exponent
    exp_unit: Vec<usize>,
    units: Vec<FieldElem>,
}

impl StableSet {
    pub fn new(datum: &RootDatum, field: &Field) -> StableSet {
        let radix = u64::try_from(field.order() - 1).expect("field too large for orbit work");
        let units: Vec<FieldElem> = field.units().collect();
        let g = field.primitive_element();
        let mut unit_exp = vec![0u64; radix as usize];
        let mut exp_unit = vec![0usize; radix as usize];
        let mut cur = field.one();
        for e in 0..radix {
            let pos = usize::try_from(field.index_of(&cur) - 1).unwrap();
            unit_exp[pos] = e;
            exp_unit[e as usize] = pos;
            cur = field.mul(&cur, &g);
        }
        StableSet {
            field: field.clone(),
            width: datum.rank() + 1,
            radix,
            unit_exp,
            exp_unit,
            units,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn radix(&self) -> u64 {
        self.radix
    }

    pub fn size(&self) -> u64 {
        self.radix.pow(self.width as u32)
    }

    pub fn digits(&self, idx: u64) -> Vec<u64> {
        let mut rem = idx;
        (0..self.width)
            .map(|_| {
                let d = rem % self.radix;
                rem /= self.radix;
                d
            })
            .collect()
    }

    pub fn index_from_digits(&self, digits: &[u64]) -> u64 {
        digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.radix + d)
    }

    pub fn covector(&self, datum: &RootDatum, idx: u64) -> Covector {
        let entries = self
            .digits(idx)
            .iter()
            .map(|&d| self.units[self.exp_unit[d as usize]].clone())
            .collect();
        Covector::new(datum, &self.field, entries).expect("width matches the datum")
    }

    /// Index of a stable covector; None when some coordinate vanishes.
    pub fn index_of_covector(&self, cov: &Covector) -> Option<u64> {
        let mut digits = Vec::with_capacity(self.width);
        for a in cov.entries() {
            if self.field.is_zero(a) {
                return None;
            }
            let pos = usize::try_from(self.field.index_of(a) - 1).unwrap();
            digits.push(self.unit_exp[pos]);
        }
        Some(self.index_from_digits(&digits))
    }

    /// Discrete log of Delta: sum_j c_j d_j mod (q-1).
    pub fn delta_exponent(&self, datum: &RootDatum, idx: u64) -> u64 {
        if self.radix == 1 {
            return 0;
        }
        self.digits(idx)
            .iter()
            .zip(datum.marks())
            .map(|(&d, &c)| d % self.radix * (c % self.radix) % self.radix)
            .sum::<u64>()
            % self.radix
    }
}

/// A permute-and-add map on digit vectors: out[perm[j]] = d[j] + add[j].
#[derive(Debug, Clone)]
pub struct AffineGen {
    pub perm: Vec<usize>,
    pub add: Vec<u64>,
}

impl AffineGen {
    fn apply(&self, radix: u64, digits: &[u64], out: &mut [u64]) {
        for (j, &d) in digits.iter().enumerate() {
            out[self.perm[j]] = (d + self.add[j]) % radix;
        }
    }
}

/// One generator per torus coordinate: t_i = g in slot i multiplies a_0 by
/// g^{c_i} and divides a_i by g.
pub fn torus_generators(datum: &RootDatum, set: &StableSet) -> Vec<AffineGen> {
    let w = datum.rank() + 1;
    (0..datum.rank())
        .map(|i| {
            let mut add = vec![0u64; w];
            add[0] = datum.marks()[i + 1] % set.radix;
            add[i + 1] = set.radix - 1; // -1 mod (q-1)
            AffineGen {
                perm: (0..w).collect(),
                add,
            }
        })
        .collect()
}

/// The nontrivial diagram rotations as permute-and-add maps: the
/// permutation is the rotation itself and the added exponent encodes the
/// sign (+1 adds nothing, -1 adds dlog(-1)).
pub fn omega_generators(
    datum: &RootDatum,
    set: &StableSet,
    table: &ChevalleyTable,
) -> Vec<AffineGen> {
    let omega = datum.omega();
    let signs = table.omega_signs(&omega);
    let minus_one_exp = if set.field().characteristic() == 2 {
        0
    } else {
        set.radix / 2
    };
    (1..omega.order())
        .map(|e| AffineGen {
            perm: omega.perm(e).to_vec(),
            add: signs[e]
                .iter()
                .map(|&s| if s == -1 { minus_one_exp } else { 0 })
                .collect(),
        })
        .collect()
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (big, small) = if self.size[ra as usize] >= self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
    }
}

/// A partition of the stable set into orbit classes, with dense class ids
/// ordered by smallest member.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    class_of: Vec<u32>,
    sizes: Vec<u64>,
    reps: Vec<u64>,
}

impl OrbitPartition {
    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn class_of(&self, idx: u64) -> usize {
        self.class_of[idx as usize] as usize
    }

    pub fn same_class(&self, a: u64, b: u64) -> bool {
        self.class_of[a as usize] == self.class_of[b as usize]
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    /// Smallest member index of each class.
    pub fn reps(&self) -> &[u64] {
        &self.reps
    }
}

/// Connected components of the stable set under the given generators.
pub fn orbits(set: &StableSet, gens: &[AffineGen], budget: u64) -> Result<OrbitPartition, OrbitError> {
    let n = u128::from(set.radix).pow(set.width as u32);
    let needed = n * (gens.len() as u128).max(1);
    if needed > u128::from(budget) || n > u128::from(u32::MAX) {
        return Err(OrbitError::BudgetExceeded {
            needed,
            budget,
        });
    }
    let n = n as u64;
    let mut uf = UnionFind::new(n as usize);
    let mut out = vec![0u64; set.width];
    for idx in 0..n {
        let digits = set.digits(idx);
        for g in gens {
            g.apply(set.radix, &digits, &mut out);
            let jdx = set.index_from_digits(&out);
            uf.union(idx as u32, jdx as u32);
        }
    }
    let mut class_of = vec![u32::MAX; n as usize];
    let mut sizes = Vec::new();
    let mut reps = Vec::new();
    for idx in 0..n {
        let root = uf.find(idx as u32) as usize;
        if class_of[root] == u32::MAX {
            class_of[root] = sizes.len() as u32;
            sizes.push(0);
            reps.push(idx);
        }
        class_of[idx as usize] = class_of[root];
        sizes[class_of[root] as usize] += 1;
    }
    Ok(OrbitPartition {
        class_of,
        sizes,
        reps,
    })
}

/// Orbits under the adjoint torus alone.
pub fn torus_orbits(
    datum: &RootDatum,
    field: &Field,
    budget: u64,
) -> Result<OrbitPartition, OrbitError> {
    precheck(datum, field, datum.rank() as u128, budget)?;
    let set = StableSet::new(datum, field);
    orbits(&set, &torus_generators(datum, &set), budget)
}

/// Orbits under the full stabilizer group: torus plus diagram rotations.
pub fn hx_orbits(
    datum: &RootDatum,
    field: &Field,
    table: &ChevalleyTable,
    budget: u64,
) -> Result<OrbitPartition, OrbitError> {
    let gens_count = datum.rank() as u128 + (datum.omega_order() as u128 - 1);
    precheck(datum, field, gens_count, budget)?;
    let set = StableSet::new(datum, field);
    let mut gens = torus_generators(datum, &set);
    gens.extend(omega_generators(datum, &set, table));
    orbits(&set, &gens, budget)
}

/// Guard against building tables for a sweep that would blow the budget.
fn precheck(datum: &RootDatum, field: &Field, gens: u128, budget: u64) -> Result<(), OrbitError> {
    let n = (field.order() - 1)
        .checked_pow(datum.rank() as u32 + 1)
        .unwrap_or(u128::MAX);
    let needed = n.saturating_mul(gens.max(1));
    if needed > u128::from(budget) || n > u128::from(u32::MAX) {
        return Err(OrbitError::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// The classification statement, checked computationally for one (type, q):
/// torus orbits on stable covectors are exactly the fibers of Delta.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub datum: String,
    pub q: u64,
    pub num_stable: u64,
    pub num_orbits: usize,
    pub num_delta_values: usize,
    pub orbits_match_delta_fibers: bool,
    /// orbit sizes, sorted
    pub orbit_sizes: Vec<u64>,
}

pub fn check_delta_classification(
    datum: &RootDatum,
    field: &Field,
    budget: u64,
) -> Result<ClassificationReport, OrbitError> {
    precheck(datum, field, datum.rank() as u128, budget)?;
    let set = StableSet::new(datum, field);
    let part = orbits(&set, &torus_generators(datum, &set), budget)?;
    // Delta must be constant on each orbit; count the distinct values.
    let mut class_delta: Vec<Option<u64>> = vec![None; part.num_classes()];
    let mut refines = true;
    for idx in 0..set.size() {
        let d = set.delta_exponent(datum, idx);
        let c = part.class_of(idx);
        match class_delta[c] {
            None => class_delta[c] = Some(d),
            Some(prev) => {
                if prev != d {
                    refines = false;
                }
            }
        }
    }
    let mut values: Vec<u64> = class_delta.iter().flatten().copied().collect();
    values.sort_unstable();
    values.dedup();
    let num_delta_values = values.len();
    let mut orbit_sizes = part.sizes().to_vec();
    orbit_sizes.sort_unstable();
    Ok(ClassificationReport {
        datum: datum.to_string(),
        q: u64::try_from(field.order()).expect("field too large for orbit work"),
        num_stable: set.size(),
        num_orbits: part.num_classes(),
        num_delta_values,
        orbits_match_delta_fibers: refines && part.num_classes() == num_delta_values,
        orbit_sizes,
    })
}
