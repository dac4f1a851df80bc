//! Floating-point scalar abstraction for the numeric core.
//!
//! Everything numeric (sampling, training, dynamics, selection scores) is
//! written against [`Scalar`] so the same code runs at f32 or f64. The
//! pipeline and CLI instantiate at f64; see the aliases at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssignOps, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{de::DeserializeOwned, Serialize};

pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + Sum
    + Debug
    + Display
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Floor applied to probabilities before taking logarithms.
    fn prob_floor() -> Self;

    /// Tolerance for row-stochasticity checks on transition matrices.
    fn row_sum_tol() -> Self;

    fn cast(v: f64) -> Self;

    fn as_f64(self) -> f64;

    /// One standard-normal draw.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One uniform draw from [0, 1).
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

macro_rules! impl_scalar {
    ($t:ty, $row_tol:expr) => {
        impl Scalar for $t {
            fn prob_floor() -> Self {
                1e-12
            }

            fn row_sum_tol() -> Self {
                $row_tol
            }

            fn cast(v: f64) -> Self {
                v as $t
            }

            fn as_f64(self) -> f64 {
                self as f64
            }

            fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                StandardNormal.sample(rng)
            }

            fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rng.random::<$t>()
            }
        }
    };
}

impl_scalar!(f64, 1e-9);
// f32 sums of a few hundred entries cannot hold a 1e-9 row tolerance.
impl_scalar!(f32, 1e-5);

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn uniform_draws_stay_in_unit_interval() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let u = f64::unit_uniform(&mut rng);
            assert!((0.0..1.0).contains(&u));
            let v = f32::unit_uniform(&mut rng);
            assert!((0.0..1.0).contains(&v));
        }
    }

    #[test]
    fn normal_draws_have_sane_moments() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let n = 50_000;
        let draws: Vec<f64> = (0..n).map(|_| f64::standard_normal(&mut rng)).collect();
        let mean = draws.iter().sum::<f64>() / n as f64;
        let var = draws.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.02, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "var {var}");
    }
}
