//! The labeled inventory of simple supercuspidal representations.
//!
//! A representation is induced from a pair (lambda, chi) where lambda is a
//! stable covector and chi is an additive character, recorded here by its
//! scalar c relative to a fixed base character.  Two pairs give the same
//! induced representation exactly when Delta(lambda) * Delta(lambda')^{-1}
//! equals c^h for the scalar ratio c and the Coxeter number h, so the whole
//! classification reduces to arithmetic in the coefficient field.  Each
//! equivalence class splits further into |Omega| constituents, labeled by
//! characters of the diagram-rotation group, for a total of
//! (q - 1) * |Omega| irreducibles.

use crate::covectors::Covector;
use crate::gf::{Embedding, Field, FieldElem, GfError};
use crate::poly::{IntPoly, RatFunc};
use crate::root_data::RootDatum;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InventoryError {
    /// The two pairs live over different fields or reference base characters
    /// pulled back through traces of different degrees; their scalars are
    /// not comparable.
    #[error("pairs are not over a common field and base character")]
    FieldMismatch,
    #[error("covector is not stable (some coordinate vanishes)")]
    NotStable,
    #[error("character scalar must be a unit")]
    ZeroScalar,
    #[error("no embedding into the requested extension: {0}")]
    NotASubfield(#[from] GfError),
    #[error("base-change degree must be positive")]
    InvalidDegree,
}

/// A stable covector together with the scalar c standing for the character
/// c * chi_0.  After unramified base change the reference character is
/// chi_0 composed with a field trace; `trace_marker` records the total
/// degree of that composition (1 for a pair built directly over its field).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputPair {
    lam: Covector,
    char_scalar: FieldElem,
    trace_marker: u32,
}

impl InputPair {
    pub fn new(lam: Covector, char_scalar: FieldElem) -> Result<InputPair, InventoryError> {
        if !lam.is_stable() {
            return Err(InventoryError::NotStable);
        }
        if lam.field().is_zero(&char_scalar) {
            return Err(InventoryError::ZeroScalar);
        }
        Ok(InputPair {
            lam,
            char_scalar,
            trace_marker: 1,
        })
    }

    pub fn lam(&self) -> &Covector {
        &self.lam
    }

    pub fn char_scalar(&self) -> &FieldElem {
        &self.char_scalar
    }

    pub fn trace_marker(&self) -> u32 {
        self.trace_marker
    }

    pub fn field(&self) -> &Field {
        self.lam.field()
    }
}

/// One irreducible constituent: the Delta-value of its class representative
/// and the character of the rotation group Omega it transforms by (a row
/// index into `OmegaGroup::character_table`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SscLabel {
    pub delta_class: FieldElem,
    pub psi: usize,
}

/// Whether two pairs induce the same representation: with c = c2 * c1^{-1},
/// this holds exactly when Delta(lambda1) * Delta(lambda2)^{-1} = c^h.
pub fn equivalent(
    datum: &RootDatum,
    p1: &InputPair,
    p2: &InputPair,
) -> Result<bool, InventoryError> {
    if p1.field() != p2.field() || p1.trace_marker != p2.trace_marker {
        return Err(InventoryError::FieldMismatch);
    }
    let f = p1.field();
    let c = f.div(&p2.char_scalar, &p1.char_scalar);
    let ratio = f.div(&p1.lam.delta(datum), &p2.lam.delta(datum));
    Ok(ratio == f.pow(&c, datum.coxeter_number() as u128))
}

/// The Delta-value of the canonical representative of a pair's class:
/// Delta(lambda) * c^h.  Two pairs are equivalent iff these agree.
pub fn delta_class(datum: &RootDatum, p: &InputPair) -> FieldElem {
    let f = p.field();
    f.mul(
        &p.lam.delta(datum),
        &f.pow(&p.char_scalar, datum.coxeter_number() as u128),
    )
}

/// The q - 1 canonical class representatives: lambda_c has coordinate c at
/// the affine node and 1 elsewhere, paired with the scalar 1, so
/// Delta(lambda_c) = c.
pub fn class_representatives(datum: &RootDatum, field: &Field) -> Vec<InputPair> {
    field
        .units()
        .map(|c| {
            let mut entries = vec![c];
            entries.resize(datum.rank() + 1, field.one());
            let lam = Covector::new(datum, field, entries).expect("rank matches");
            InputPair::new(lam, field.one()).expect("representative is stable")
        })
        .collect()
}

/// Every irreducible: one label per (Delta-class, character of Omega),
/// giving (q - 1) * |Omega| in total.  Ordering is class-major in the
/// field's canonical unit order.
pub fn enumerate_representations(datum: &RootDatum, field: &Field) -> Vec<SscLabel> {
    let omega_order = datum.omega_order();
    field
        .units()
        .flat_map(|c| {
            (0..omega_order).map(move |psi| SscLabel {
                delta_class: c.clone(),
                psi,
            })
        })
        .collect()
}

/// A formal degree together with the algebraic steps that produced it.
#[derive(Debug, Clone)]
pub struct FormalDegree {
    pub value: RatFunc,
    pub derivation: Vec<String>,
}

/// The formal degree of a simple supercuspidal in Euler-Poincare units:
/// prod_i (q^{m_i + 1} - 1)/(q^{m_i} - 1) over the exponents m_i, obtained
/// by eliminating the volume of the inducing subgroup between the
/// Euler-Poincare volume identity and Kostant's principal-parameter ratio.
pub fn formal_degree_ep(datum: &RootDatum) -> FormalDegree {
    let mut num = IntPoly::one("q");
    let mut den = IntPoly::one("q");
    for &m in datum.exponents() {
        num = &num * &IntPoly::power_minus_one(m + 1, "q");
        den = &den * &IntPoly::power_minus_one(m, "q");
    }
    let value = RatFunc::new(num, den).expect("exponents are positive");
    let derivation = vec![
        "each of the (q - 1)|Omega| simple supercuspidals has formal degree \
         1 / (|Omega| * mu(J)) in Euler-Poincare normalization"
            .to_string(),
        "Euler-Poincare volume identity: |Omega| * q^l * mu(J) equals the \
         adjoint L-value ratio L(1)/L(0) of the principal parameter"
            .to_string(),
        "Kostant: that ratio is q^l * prod_i (q^{m_i} - 1)/(q^{m_i+1} - 1) \
         over the exponents m_i"
            .to_string(),
        "eliminating mu(J): deg = prod_i (q^{m_i+1} - 1)/(q^{m_i} - 1)".to_string(),
    ];
    FormalDegree { value, derivation }
}

/// The result of transporting a pair to an unramified extension, keeping
/// the embedding so labels can be moved the same way.
#[derive(Debug, Clone)]
pub struct BaseChange {
    pub pair: InputPair,
    pub embedding: Embedding,
}

impl BaseChange {
    /// Labels travel along the same embedding: the Delta-class is embedded
    /// and the Omega-character index is unchanged (Omega does not depend on
    /// the field).
    pub fn transport_label(&self, label: &SscLabel) -> SscLabel {
        SscLabel {
            delta_class: self.embedding.apply(&label.delta_class),
            psi: label.psi,
        }
    }
}

/// Unramified base change of degree m: coefficients and scalar are embedded
/// into the degree-m extension and the trace marker is multiplied by m,
/// recording that the new character is the old one composed with the trace.
/// Stability is preserved since embeddings kill nothing.
pub fn base_change(
    datum: &RootDatum,
    p: &InputPair,
    m: u32,
) -> Result<BaseChange, InventoryError> {
    if m == 0 {
        return Err(InventoryError::InvalidDegree);
    }
    let small = p.field();
    let top = Field::new(
        small.characteristic(),
        small.degree() * m as usize,
    )?;
    let embedding = Embedding::new(small, &top)?;
    let entries = p.lam.entries().iter().map(|e| embedding.apply(e)).collect();
    let lam = Covector::new(datum, &top, entries).expect("rank unchanged");
    let pair = InputPair {
        lam,
        char_scalar: embedding.apply(&p.char_scalar),
        trace_marker: p.trace_marker * m,
    };
    Ok(BaseChange { pair, embedding })
}
