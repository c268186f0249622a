//! Exact univariate polynomials over the integers and the rational
//! functions they generate.
//!
//! Rational functions are kept in a canonical reduced form: numerator and
//! denominator are coprime as polynomials, the pair carries no common
//! integer content, and the denominator has a positive leading coefficient.
//! Equality is therefore structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(String, String),
}

/// A polynomial with BigInt coefficients, little-endian, trailing zeros
/// trimmed (the zero polynomial has an empty coefficient vector). The
/// variable name travels with the polynomial so that substitutions between
/// t, u = q^(1/2), and q stay legible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
    var: String,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>, var: &str) -> IntPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly {
            coeffs,
            var: var.to_string(),
        }
    }

    pub fn from_i64s(cs: &[i64], var: &str) -> IntPoly {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect(), var)
    }

    pub fn zero(var: &str) -> IntPoly {
        IntPoly::new(Vec::new(), var)
    }

    pub fn one(var: &str) -> IntPoly {
        IntPoly::from_i64s(&[1], var)
    }

    pub fn constant(c: BigInt, var: &str) -> IntPoly {
        IntPoly::new(vec![c], var)
    }

    /// The monomial var^k.
    pub fn monomial(k: usize, var: &str) -> IntPoly {
        let mut cs = vec![BigInt::zero(); k + 1];
        cs[k] = BigInt::one();
        IntPoly::new(cs, var)
    }

    /// var^a - 1.
    pub fn power_minus_one(a: usize, var: &str) -> IntPoly {
        let mut cs = vec![BigInt::zero(); a + 1];
        cs[0] = BigInt::from(-1);
        cs[a] = BigInt::one();
        IntPoly::new(cs, var)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_else(BigInt::zero)
    }

    fn same_var(&self, other: &IntPoly) {
        debug_assert_eq!(self.var, other.var, "mixing polynomial variables");
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut acc = IntPoly::one(&self.var);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute var -> var^k. For k = 0 this is evaluation at 1
    /// (a constant polynomial).
    pub fn substitute_monomial(&self, k: usize) -> IntPoly {
        if k == 0 {
            let sum: BigInt = self.coeffs.iter().sum();
            return IntPoly::new(vec![sum], &self.var);
        }
        let mut cs = vec![BigInt::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        if self.coeffs.is_empty() {
            return IntPoly::zero(&self.var);
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            cs[i * k] += c;
        }
        IntPoly::new(cs, &self.var)
    }

    /// Rename the variable (used when shifting between t, u, q views).
    pub fn with_var(&self, var: &str) -> IntPoly {
        IntPoly::new(self.coeffs.clone(), var)
    }

    /// Keep only even powers, halving exponents (u^2 -> q). None when an
    /// odd-degree term is present.
    pub fn even_part_exact(&self, new_var: &str) -> Option<IntPoly> {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % 2 == 1 && !c.is_zero() {
                return None;
            }
        }
        let cs = self
            .coeffs
            .iter()
            .step_by(2)
            .cloned()
            .collect::<Vec<_>>();
        Some(IntPoly::new(cs, new_var))
    }

    /// True when only odd powers appear (and the polynomial is nonzero).
    pub fn is_odd_supported(&self) -> bool {
        !self.is_zero()
            && self
                .coeffs
                .iter()
                .enumerate()
                .all(|(i, c)| i % 2 == 1 || c.is_zero())
    }

    /// Divide by the monomial var^k; requires the low k coefficients to be 0.
    pub fn shift_down(&self, k: usize) -> Option<IntPoly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(
            self.coeffs.iter().skip(k).cloned().collect(),
            &self.var,
        ))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Divide out the content; sign convention: leading coefficient > 0.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect(), &self.var)
    }

    /// Pseudo-remainder of self by other (other nonzero). Each step scales
    /// by the divisor's leading coefficient, so everything stays integral;
    /// the leading terms cancel exactly and the degree strictly drops.
    fn pseudo_rem(&self, other: &IntPoly) -> IntPoly {
        let d = other.degree().expect("pseudo_rem by zero");
        let lead = other.leading();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < d {
                break;
            }
            let r_lead = r.leading();
            let mut scaled: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lead).collect();
            for (i, c) in other.coeffs.iter().enumerate() {
                scaled[i + dr - d] -= c * &r_lead;
            }
            r = IntPoly::new(scaled, &self.var);
        }
        r
    }

    /// Polynomial gcd over the integers (primitive PRS), normalized to be
    /// primitive with positive leading coefficient. gcd(0, b) = primitive(b).
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        a.same_var(b);
        let mut x = a.primitive_part();
        let mut y = b.primitive_part();
        if x.is_zero() {
            return y;
        }
        while !y.is_zero() {
            let r = x.pseudo_rem(&y).primitive_part();
            x = y;
            y = r;
        }
        x.primitive_part()
    }

    /// Exact division; None when other does not divide self over the
    /// rationals or the quotient is not integral.
    pub fn divide_exact(&self, other: &IntPoly) -> Option<IntPoly> {
        self.same_var(other);
        if self.is_zero() {
            return Some(IntPoly::zero(&self.var));
        }
        let db = other.degree()?;
        let da = self.degree()?;
        if da < db {
            return None;
        }
        let lead = other.leading();
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut quo = vec![BigRational::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = rem[k + db].clone() / BigRational::from_integer(lead.clone());
            quo[k] = c.clone();
            for (i, oc) in other.coeffs.iter().enumerate() {
                let t = &c * BigRational::from_integer(oc.clone());
                rem[k + i] -= t;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = Vec::with_capacity(quo.len());
        for c in quo {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(IntPoly::new(out, &self.var))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        self.same_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut cs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            cs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            cs[i] += c;
        }
        IntPoly::new(cs, &self.var)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect(), &self.var)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        self.same_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero(&self.var);
        }
        let mut cs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                cs[i + j] += a * b;
            }
        }
        IntPoly::new(cs, &self.var)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{}", self.var)?,
                (1, false) => write!(f, "{mag}*{}", self.var)?,
                (i, true) => write!(f, "{}^{i}", self.var)?,
                (i, false) => write!(f, "{mag}*{}^{i}", self.var)?,
            }
        }
        Ok(())
    }
}

/// A rational function num/den in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<RatFunc, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        num.same_var(&den);
        let mut r = RatFunc { num, den };
        r.reduce();
        Ok(r)
    }

    pub fn from_poly(p: IntPoly) -> RatFunc {
        let var = p.var().to_string();
        RatFunc {
            num: p,
            den: IntPoly::one(&var),
        }
    }

    pub fn one(var: &str) -> RatFunc {
        RatFunc::from_poly(IntPoly::one(var))
    }

    pub fn from_ratio(num: BigInt, den: BigInt, var: &str) -> Result<RatFunc, PolyError> {
        RatFunc::new(IntPoly::constant(num, var), IntPoly::constant(den, var))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn var(&self) -> &str {
        self.num.var()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = IntPoly::one(self.num.var());
            return;
        }
        let g = IntPoly::gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.divide_exact(&g).expect("gcd divides numerator");
            self.den = self.den.divide_exact(&g).expect("gcd divides denominator");
        }
        let cg = self.num.content().gcd(&self.den.content());
        if !cg.is_one() && !cg.is_zero() {
            self.num = IntPoly::new(
                self.num.coeffs().iter().map(|c| c / &cg).collect(),
                self.num.var(),
            );
            self.den = IntPoly::new(
                self.den.coeffs().iter().map(|c| c / &cg).collect(),
                self.den.var(),
            );
        }
        if self.den.leading().is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        let mut r = RatFunc {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        };
        r.reduce();
        r
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, PolyError> {
        if rhs.num.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        let mut r = RatFunc {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        };
        r.reduce();
        Ok(r)
    }

    pub fn recip(&self) -> Result<RatFunc, PolyError> {
        RatFunc::one(self.var()).div(self)
    }

    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval_rational(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_rational(x) / d)
    }

    /// Substitute u -> q^(1/2), i.e. map a rational function of u with only
    /// even structure to the same function of q. Handles the case where
    /// numerator and denominator are both odd-supported (the shared factor
    /// of u cancels). None when a genuine half-power remains.
    pub fn halve_exponents(&self, new_var: &str) -> Option<RatFunc> {
        let (n, d) = if self.num.is_odd_supported() && self.den.is_odd_supported() {
            (self.num.shift_down(1)?, self.den.shift_down(1)?)
        } else {
            (self.num.clone(), self.den.clone())
        };
        let n2 = n.even_part_exact(new_var)?;
        let d2 = d.even_part_exact(new_var)?;
        Some(RatFunc::new(n2, d2).expect("denominator stays nonzero"))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs, "q")
    }

    #[test]
    fn display_and_basics() {
        let p = qp(&[-1, 0, 1]);
        assert_eq!(p.to_string(), "q^2 - 1");
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.constant_term(), BigInt::from(-1));
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // a = (q-1)^2 (q+1), b = (q-1)(q+1)^2, gcd = (q-1)(q+1) = q^2 - 1
        let a = &qp(&[-1, 1]) * &qp(&[-1, 0, 1]);
        let b = &qp(&[-1, 0, 1]) * &qp(&[1, 1]);
        let g = IntPoly::gcd(&a, &b);
        assert_eq!(g, qp(&[-1, 0, 1]));
        assert!(a.divide_exact(&g).is_some());
        assert!(b.divide_exact(&g).is_some());
    }

    #[test]
    fn ratfunc_reduces_to_lowest_terms() {
        let r = RatFunc::new(
            &qp(&[-1, 0, 1]) * &qp(&[-1, 1]), // (q^2-1)(q-1)
            qp(&[-1, 1]),                     // q-1
        )
        .unwrap();
        assert_eq!(r.num(), &qp(&[-1, 0, 1]));
        assert!(r.den().is_one());
    }

    #[test]
    fn ratfunc_integer_content_cancels() {
        let r = RatFunc::new(qp(&[2]), qp(&[0, 2])).unwrap();
        assert_eq!(r.to_string(), "(1) / (q)");
    }

    #[test]
    fn formal_degree_shape_a2() {
        // (q^2-1)(q^3-1) / ((q-1)(q^2-1)) = q^2 + q + 1
        let num = &IntPoly::power_minus_one(2, "q") * &IntPoly::power_minus_one(3, "q");
        let den = &IntPoly::power_minus_one(1, "q") * &IntPoly::power_minus_one(2, "q");
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.num(), &qp(&[1, 1, 1]));
        assert!(r.den().is_one());
    }

    #[test]
    fn halve_exponents_even_and_odd_pair() {
        // (1 + u^2)^2 / (1 + u^2) reduces to 1 + u^2 before halving
        let even = RatFunc::new(
            IntPoly::from_i64s(&[1, 0, 2, 0, 1], "u"),
            IntPoly::from_i64s(&[1, 0, 1], "u"),
        )
        .unwrap();
        let h = even.halve_exponents("q").unwrap();
        assert_eq!(h.num(), &qp(&[1, 1]));
        assert!(h.den().is_one());

        let odd = RatFunc::new(
            IntPoly::from_i64s(&[0, 1, 0, 1], "u"),
            IntPoly::from_i64s(&[0, 2], "u"),
        )
        .unwrap();
        let h2 = odd.halve_exponents("q").unwrap();
        assert_eq!(h2.to_string(), "(q + 1) / (2)");

        let bad = RatFunc::new(
            IntPoly::from_i64s(&[0, 1], "u"),
            IntPoly::from_i64s(&[1], "u"),
        )
        .unwrap();
        assert!(bad.halve_exponents("q").is_none());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(qp(&[1]), qp(&[])).unwrap_err(),
            PolyError::ZeroDenominator
        );
    }

    proptest! {
        #[test]
        fn mul_by_reciprocal_is_one(
            a in proptest::collection::vec(-6i64..6, 1..5),
            b in proptest::collection::vec(-6i64..6, 1..5),
        ) {
            let pa = qp(&a);
            let pb = qp(&b);
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            let r = RatFunc::new(pa, pb).unwrap();
            prop_assume!(!r.num().is_zero());
            let prod = r.mul(&r.recip().unwrap());
            prop_assert!(prod.is_one());
        }

        #[test]
        fn reduction_is_idempotent_and_canonical(
            a in proptest::collection::vec(-6i64..6, 1..5),
            b in proptest::collection::vec(-6i64..6, 1..5),
            c in proptest::collection::vec(-4i64..4, 1..4),
        ) {
            let pa = qp(&a);
            let pb = qp(&b);
            let pc = qp(&c);
            prop_assume!(!pb.is_zero() && !pc.is_zero());
            // scaling num and den by a common factor must not change the value
            let r1 = RatFunc::new(pa.clone(), pb.clone()).unwrap();
            let r2 = RatFunc::new(&pa * &pc, &pb * &pc).unwrap();
            prop_assert_eq!(r1, r2);
        }

        #[test]
        fn gcd_divides_both(
            a in proptest::collection::vec(-5i64..5, 1..5),
            b in proptest::collection::vec(-5i64..5, 1..5),
        ) {
            let pa = qp(&a);
            let pb = qp(&b);
            prop_assume!(!pa.is_zero() && !pb.is_zero());
            let g = IntPoly::gcd(&pa, &pb);
            prop_assert!(pa.divide_exact(&g).is_some());
            prop_assert!(pb.divide_exact(&g).is_some());
        }
    }
}
