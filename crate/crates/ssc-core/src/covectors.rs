//! Covectors on the lowest positive Moy-Prasad layer at the barycenter of
//! the fundamental alcove, with the torus and diagram-rotation actions under
//! which they are classified.
//!
//! A covector assigns one coordinate in a finite field k to each node of the
//! affine Dynkin diagram: a_0 to the affine node (the root -alpha_0 for the
//! highest root alpha_0) and a_i to the i-th simple root. The adjoint torus
//! T(k) = (k^x)^rank acts with weights read off the diagram, the invariant
//! polynomial Delta = prod a_j^{c_j} (marks c_j, c_0 = 1) is constant on
//! orbits, and a covector is stable exactly when no coordinate vanishes.

use crate::gf::{Field, FieldElem};
use crate::root_data::RootDatum;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CovectorError {
    #[error("expected {expected} coordinates (affine node + rank), got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("torus coordinates must be units")]
    NotAUnit,
}

/// A covector on the affine diagram: entries[0] sits on the affine node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covector {
    field: Field,
    entries: Vec<FieldElem>,
}

impl Covector {
    pub fn new(
        datum: &RootDatum,
        field: &Field,
        entries: Vec<FieldElem>,
    ) -> Result<Covector, CovectorError> {
        if entries.len() != datum.rank() + 1 {
            return Err(CovectorError::RankMismatch {
                expected: datum.rank() + 1,
                got: entries.len(),
            });
        }
        Ok(Covector {
            field: field.clone(),
            entries,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn entries(&self) -> &[FieldElem] {
        &self.entries
    }

    /// Stable means every affine-diagram coordinate is nonzero.
    pub fn is_stable(&self) -> bool {
        self.entries.iter().all(|a| !self.field.is_zero(a))
    }

    /// The orbit invariant Delta = prod_j a_j^{c_j} over all nodes.
    pub fn delta(&self, datum: &RootDatum) -> FieldElem {
        let mut acc = self.field.one();
        for (a, &c) in self.entries.iter().zip(datum.marks()) {
            acc = self.field.mul(&acc, &self.field.pow(a, u128::from(c)));
        }
        acc
    }

    pub fn scale(&self, c: &FieldElem) -> Covector {
        Covector {
            field: self.field.clone(),
            entries: self
                .entries
                .iter()
                .map(|a| self.field.mul(a, c))
                .collect(),
        }
    }

    /// The adjoint-torus action: a_0 picks up prod_i t_i^{c_i}, and a_i is
    /// divided by t_i.
    pub fn torus_act(&self, datum: &RootDatum, t: &TorusElem) -> Covector {
        let f = &self.field;
        let mut entries = Vec::with_capacity(self.entries.len());
        let mut head = self.entries[0].clone();
        for (i, ti) in t.coords.iter().enumerate() {
            head = f.mul(&head, &f.pow(ti, u128::from(datum.marks()[i + 1])));
        }
        entries.push(head);
        for (i, a) in self.entries.iter().enumerate().skip(1) {
            entries.push(f.div(a, &t.coords[i - 1]));
        }
        Covector {
            field: f.clone(),
            entries,
        }
    }

    /// The action of a diagram rotation given by its node permutation and
    /// the signs its Weyl representative picks up on root vectors:
    /// b_{perm(j)} = sign_j * a_j.
    pub fn omega_act(&self, perm: &[usize], signs: &[i64]) -> Covector {
        let f = &self.field;
        let mut entries = vec![f.zero(); self.entries.len()];
        for (j, a) in self.entries.iter().enumerate() {
            entries[perm[j]] = if signs[j] == -1 { f.neg(a) } else { a.clone() };
        }
        Covector {
            field: f.clone(),
            entries,
        }
    }
}

/// A point of the adjoint torus T(k) = (k^x)^rank in simple-root
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusElem {
    field: Field,
    coords: Vec<FieldElem>,
}

impl TorusElem {
    pub fn new(
        datum: &RootDatum,
        field: &Field,
        coords: Vec<FieldElem>,
    ) -> Result<TorusElem, CovectorError> {
        if coords.len() != datum.rank() {
            return Err(CovectorError::RankMismatch {
                expected: datum.rank(),
                got: coords.len(),
            });
        }
        if coords.iter().any(|c| field.is_zero(c)) {
            return Err(CovectorError::NotAUnit);
        }
        Ok(TorusElem {
            field: field.clone(),
            coords,
        })
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }
}
