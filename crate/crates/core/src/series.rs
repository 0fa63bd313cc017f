//! Truncated formal power series in `t` over Gaussian rationals.
//!
//! A series carries its truncation order: coefficients of `t^0..=t^order`
//! are exact, nothing beyond is represented. Binary operations truncate to
//! the smaller of the two orders, so an order is never silently extended.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{gaussian_to_string, GaussianRational, Scalar};

#[derive(Clone, PartialEq)]
pub struct FormalSeries {
    coeffs: Vec<GaussianRational>,
}

impl FormalSeries {
    /// Series with the given coefficients; the order is `coeffs.len() − 1`.
    pub fn new(coeffs: Vec<GaussianRational>) -> Self {
        assert!(!coeffs.is_empty(), "a formal series needs at least one coefficient");
        FormalSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        FormalSeries::new(vec![GaussianRational::zero(); order + 1])
    }

    pub fn constant(c: GaussianRational, order: usize) -> Self {
        let mut s = FormalSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        FormalSeries::constant(GaussianRational::one(), order)
    }

    /// `c·t`
    pub fn monomial(c: GaussianRational, order: usize) -> Self {
        let mut s = FormalSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = c;
        }
        s
    }

    /// Builds `Σ f(k) t^k` up to `order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> GaussianRational) -> Self {
        FormalSeries::new((0..=order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &GaussianRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        FormalSeries::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        FormalSeries::from_fn(order, |k| self.coeffs[k].clone() + rhs.coeffs[k].clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        FormalSeries::from_fn(order, |k| self.coeffs[k].clone() - rhs.coeffs[k].clone())
    }

    /// Cauchy product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        FormalSeries::from_fn(order, |k| {
            (0..=k).fold(GaussianRational::zero(), |acc, j| {
                acc + self.coeffs[j].clone() * rhs.coeffs[k - j].clone()
            })
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        FormalSeries::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Substitutes `t → c·t`.
    pub fn dilate(&self, c: &GaussianRational) -> Self {
        let mut pow = GaussianRational::one();
        FormalSeries::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let v = a.clone() * pow.clone();
                    pow = pow.clone() * c.clone();
                    v
                })
                .collect(),
        )
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain("reciprocal of a series with zero constant term".into()));
        }
        let inv0 = GaussianRational::one() / c0.clone();
        let mut out: Vec<GaussianRational> = vec![inv0.clone()];
        for k in 1..=self.order() {
            let s = (1..=k).fold(GaussianRational::zero(), |acc, j| {
                acc + self.coeffs[j].clone() * out[k - j].clone()
            });
            out.push(-s * inv0.clone());
        }
        Ok(FormalSeries::new(out))
    }

    /// `(1 − t)^s = Σ (−s)_k/k! t^k`.
    pub fn one_minus_t_pow(s: &GaussianRational, order: usize) -> Self {
        let mut c = GaussianRational::one();
        FormalSeries::from_fn(order, |k| {
            let v = c.clone();
            let kk = GaussianRational::from_int(k as i64);
            c = c.clone() * (kk.clone() - s.clone()) / (kk + GaussianRational::one());
            v
        })
    }

    /// `Σ_k (num)_k / ((den)_k k!) · arg^k` for a series `arg` with zero
    /// constant term, by Horner's scheme on the term ratios.
    pub fn hypergeometric(
        numer: &[GaussianRational],
        denom: &[GaussianRational],
        arg: &FormalSeries,
    ) -> Result<Self> {
        if !arg.coeffs[0].is_zero() {
            return Err(Error::Domain("hypergeometric argument must vanish at t = 0".into()));
        }
        let order = arg.order();
        // ratio_k = Π(a_i + k) / (Π(b_j + k)·(k+1)), term_{k+1} = term_k · ratio_k · arg
        let mut ratios = Vec::with_capacity(order);
        for k in 0..order {
            let kk = GaussianRational::from_int(k as i64);
            let mut num = GaussianRational::one();
            for a in numer {
                num *= a.clone() + kk.clone();
            }
            let mut den = GaussianRational::from_int(k as i64 + 1);
            for b in denom {
                den *= b.clone() + kk.clone();
            }
            if den.is_zero() {
                return Err(Error::ParameterPole {
                    family: "hypergeometric series",
                    term: k + 1,
                });
            }
            ratios.push(num / den);
        }
        // 1 + r_0 arg (1 + r_1 arg (1 + …))
        let mut acc = FormalSeries::one(order);
        for r in ratios.iter().rev() {
            acc = FormalSeries::one(order).add(&arg.mul(&acc).scale(r));
        }
        Ok(acc)
    }

    /// First coefficient in which `self` and `other` differ, as
    /// `(index, self − other)`.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, GaussianRational)> {
        let d = self.sub(other);
        d.coeffs
            .into_iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
    }
}

impl fmt::Debug for FormalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(gaussian_to_string).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.order() + 1)
    }
}
