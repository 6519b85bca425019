use std::fmt::{Debug, Display};

use num_bigint::{BigInt, ToBigInt};
use num_traits::{FromPrimitive, Num, Signed};

/// Integer scalar used by matrices and group elements.
///
/// Implemented for every type with exact signed integer arithmetic, in
/// particular `BigInt`, `i64` and `i128`. Fixed-width types overflow on deep
/// products; `BigInt` is the default everywhere a product can grow.
pub trait Scalar:
    Clone + Debug + Display + Ord + Num + Signed + FromPrimitive + ToBigInt + TryFrom<BigInt> + Send + Sync + 'static
{
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count does not fit the scalar type")
    }

    fn from_big(x: &BigInt) -> Self {
        Self::try_from(x.clone())
            .ok()
            .expect("integer does not fit the scalar type")
    }

    fn to_big(&self) -> BigInt {
        self.to_bigint().expect("integer scalar converts to BigInt")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Num
        + Signed
        + FromPrimitive
        + ToBigInt
        + TryFrom<BigInt>
        + Send
        + Sync
        + 'static
{
}
