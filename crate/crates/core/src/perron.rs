//! Certified enclosure of the left Perron direction of a primitive matrix.
//!
//! For primitive `C` with left Perron vector `l > 0`, `l` is a positive
//! combination of the rows of every power `C^m`, so after normalizing rows to
//! sum 1 the normalized `l` lies in their convex hull. Squaring the power
//! shrinks the hull onto `l`. Consequently `⟨l, v⟩` has the sign of
//! `C^m v` whenever the latter is nonnegative or nonpositive and nonzero.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{is_primitive, Matrix};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct PerronEnclosure {
    power: Matrix<BigInt>,
    exponent: BigInt,
    pub lower: Vec<BigRational>,
    pub upper: Vec<BigRational>,
}

impl PerronEnclosure {
    pub fn new<T: Scalar>(c: &Matrix<T>) -> Result<Self> {
        if !is_primitive(c)?.is_yes() {
            return Err(Error::Precondition("Perron enclosure needs a primitive matrix".into()));
        }
        let mut e = PerronEnclosure {
            power: c.to_bigint(),
            exponent: BigInt::from(1),
            lower: Vec::new(),
            upper: Vec::new(),
        };
        e.update_bounds();
        Ok(e)
    }

    /// The enclosure currently uses the rows of `C^exponent`.
    pub fn exponent(&self) -> &BigInt {
        &self.exponent
    }

    /// Largest interval width over the components.
    pub fn width(&self) -> BigRational {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| hi - lo)
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn refine(&mut self) {
        self.power = self.power.mul(&self.power).expect("square matrix");
        self.exponent *= 2;
        self.update_bounds();
    }

    /// Sign of `⟨l, v⟩` when the current enclosure certifies it.
    pub fn pairing_sign(&self, v: &[BigInt]) -> Option<Ordering> {
        let w = self.power.mul_vec(v).ok()?;
        vector_sign(&w)
    }

    fn update_bounds(&mut self) {
        let n = self.power.rows();
        let rows: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let row = self.power.row(i);
                let total: BigInt = row.iter().sum();
                row.iter().map(|x| BigRational::new(x.clone(), total.clone())).collect()
            })
            .collect();
        self.lower = (0..n)
            .map(|j| rows.iter().map(|r| r[j].clone()).min().expect("rows"))
            .collect();
        self.upper = (0..n)
            .map(|j| rows.iter().map(|r| r[j].clone()).max().expect("rows"))
            .collect();
    }
}

/// `Greater` for a nonzero vector with nonnegative entries, `Less` for a
/// nonzero nonpositive one, `Equal` for zero, `None` for mixed signs.
pub fn vector_sign<T: Scalar>(v: &[T]) -> Option<Ordering> {
    let pos = v.iter().any(|x| x.is_positive());
    let neg = v.iter().any(|x| x.is_negative());
    match (pos, neg) {
        (false, false) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (true, true) => None,
    }
}
