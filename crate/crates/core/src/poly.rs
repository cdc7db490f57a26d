use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

/// Univariate polynomial in `z` with nonnegative integer coefficients.
///
/// `coeffs[k]` is the coefficient of `z^k`. Trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigUint>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `z^frame * p(1/z)`; requires `frame >= degree`.
    pub fn reversed(&self, frame: usize) -> Poly {
        assert!(
            self.degree().is_none_or(|d| d <= frame),
            "reversal frame {frame} below degree"
        );
        let mut coeffs = vec![BigUint::zero(); frame + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[frame - k] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// Value at `z = 1`.
    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Derivative evaluated at `z = 1`.
    pub fn derivative_at_one(&self) -> BigUint {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * BigUint::from(k))
            .sum()
    }

    /// Inverse of [`Poly::to_decimal_strings`]; `None` on a malformed entry.
    pub fn from_decimal_strings<S: AsRef<str>>(coeffs: &[S]) -> Option<Self> {
        coeffs
            .iter()
            .map(|c| c.as_ref().parse::<BigUint>().ok())
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    /// Coefficients as decimal strings.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

/// Lowest degree first, e.g. `1 + 6z + 8z^2 + 2z^3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let one = *c == BigUint::from(1u8);
            match k {
                0 => write!(f, "{c}")?,
                1 if one => f.write_str("z")?,
                1 => write!(f, "{c}z")?,
                _ if one => write!(f, "z^{k}")?,
                _ => write!(f, "{c}z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(Poly::from_u64s(&[1, 6, 8, 2]).to_string(), "1 + 6z + 8z^2 + 2z^3");
        assert_eq!(
            Poly::from_u64s(&[0, 0, 0, 2, 8, 6, 1]).to_string(),
            "2z^3 + 8z^4 + 6z^5 + z^6"
        );
        assert_eq!(Poly::from_u64s(&[1, 1, 4]).to_string(), "1 + z + 4z^2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn trims_and_degrees() {
        let p = Poly::from_u64s(&[0, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.low_degree(), Some(1));
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn reversal_and_calculus() {
        let p = Poly::from_u64s(&[1, 6, 8, 2]);
        assert_eq!(p.reversed(6), Poly::from_u64s(&[0, 0, 0, 2, 8, 6, 1]));
        let cut = Poly::from_u64s(&[1, 1, 4, 10, 9, 5, 2]);
        assert_eq!(cut.sum(), BigUint::from(32u32));
        assert_eq!(cut.derivative_at_one(), BigUint::from(112u32));
    }

    #[test]
    fn decimal_strings() {
        let big = Poly::new(vec![BigUint::from(1u8), BigUint::from(u64::MAX) * 7u8]);
        let strs = big.to_decimal_strings();
        assert_eq!(strs[1], "129127208515966861305");
        assert_eq!(Poly::from_decimal_strings(&strs), Some(big));
        assert_eq!(Poly::from_decimal_strings(&["1", "x"]), None);
    }
}
