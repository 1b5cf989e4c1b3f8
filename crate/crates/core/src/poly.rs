use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Polynomial in `z` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    coefficients: BTreeMap<u32, i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coefficients([(0, 1)])
    }

    /// Builds from `(degree, coefficient)` pairs; repeated degrees add up.
    pub fn from_coefficients(terms: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    /// Dense form: `coeffs[i]` is the coefficient of `z^i`.
    pub fn from_dense(coeffs: &[i64]) -> Self {
        Self::from_coefficients(coeffs.iter().enumerate().map(|(d, &c)| (d as u32, c)))
    }

    pub fn add_term(&mut self, degree: u32, c: i64) {
        let e = self.coefficients.entry(degree).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coefficients.remove(&degree);
        }
    }

    pub fn coefficient(&self, degree: u32) -> i64 {
        self.coefficients.get(&degree).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<u32> {
        self.coefficients.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coefficients.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn eval(&self, z: i64) -> i128 {
        self.terms().map(|(d, c)| c as i128 * (z as i128).pow(d)).sum()
    }

    /// `self + z^shift * other * factor`.
    pub fn add_shifted(&self, other: &Self, shift: u32, factor: i64) -> Self {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d + shift, c * factor);
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            match d {
                0 => write!(f, "{mag}")?,
                _ if mag != 1 => write!(f, "{mag}")?,
                _ => {}
            }
            match d {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_eval() {
        let p = IntPolynomial::from_dense(&[1, 0, -2, 0, 1]);
        assert_eq!(p.to_string(), "1 - 2z^2 + z^4");
        assert_eq!(p.eval(2), 1 - 8 + 16);
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_dense(&[0, -1]).to_string(), "-z");
        assert_eq!(p.degree(), Some(4));
    }

    #[test]
    fn cancelling_terms_vanish() {
        let mut p = IntPolynomial::one();
        p.add_term(0, -1);
        assert!(p.is_zero());
        let q = IntPolynomial::one().add_shifted(&IntPolynomial::one(), 2, 3);
        assert_eq!(q, IntPolynomial::from_dense(&[1, 0, 3]));
    }
}
