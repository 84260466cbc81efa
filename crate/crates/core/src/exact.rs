//! Two-tier exact evaluation of integer polynomials.
//!
//! Every predicate is written once, generic over [`Scalar`]. It is first
//! evaluated in checked `i128`; on overflow it is re-evaluated with big
//! integers. The sign is exact in both cases.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

pub(crate) trait Scalar: Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {
    fn int(v: i64) -> Self;
    /// Sign of the value, or `None` if it could not be represented.
    fn signum_exact(&self) -> Option<Ordering>;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Wide(Option<i128>);

impl Add for Wide {
    type Output = Wide;
    fn add(self, o: Wide) -> Wide {
        Wide(self.0.zip(o.0).and_then(|(a, b)| a.checked_add(b)))
    }
}

impl Sub for Wide {
    type Output = Wide;
    fn sub(self, o: Wide) -> Wide {
        Wide(self.0.zip(o.0).and_then(|(a, b)| a.checked_sub(b)))
    }
}

impl Mul for Wide {
    type Output = Wide;
    fn mul(self, o: Wide) -> Wide {
        Wide(self.0.zip(o.0).and_then(|(a, b)| a.checked_mul(b)))
    }
}

impl Scalar for Wide {
    fn int(v: i64) -> Self {
        Wide(Some(v as i128))
    }
    fn signum_exact(&self) -> Option<Ordering> {
        self.0.map(|v| v.cmp(&0))
    }
}

impl Scalar for BigInt {
    fn int(v: i64) -> Self {
        BigInt::from(v)
    }
    fn signum_exact(&self) -> Option<Ordering> {
        Some(if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        })
    }
}

/// Evaluates a generic polynomial `f::<T>(args..)` and returns its exact sign.
macro_rules! exact_sign {
    ($f:ident ( $($arg:expr),* $(,)? )) => {{
        use $crate::exact::Scalar as _;
        match $f::<$crate::exact::Wide>($($arg),*).signum_exact() {
            Some(s) => s,
            None => $f::<num_bigint::BigInt>($($arg),*)
                .signum_exact()
                .expect("big integers never overflow"),
        }
    }};
}

pub(crate) use exact_sign;

#[cfg(test)]
mod tests {
    use super::*;

    fn square_diff<T: Scalar>(a: i64, b: i64) -> T {
        let d = T::int(a) - T::int(b);
        d.clone() * d - T::int(1)
    }

    #[test]
    fn falls_back_on_overflow() {
        assert_eq!(exact_sign!(square_diff(i64::MAX, i64::MIN)), Ordering::Greater);
        assert_eq!(exact_sign!(square_diff(3, 2)), Ordering::Equal);
        assert!(square_diff::<Wide>(i64::MAX, i64::MIN).signum_exact().is_none());
        let big = Wide::int(i64::MAX) * Wide::int(i64::MAX) * Wide::int(4);
        assert!(big.signum_exact().is_none());
    }
}
