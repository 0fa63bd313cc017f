//! Scalars shared by the exact and floating code paths, and univariate
//! polynomials over them.
//!
//! Exact arithmetic runs over Gaussian rationals `ℚ(i)`, represented as
//! `Complex<BigRational>`; the floating path runs over `Complex64`. Every
//! hypergeometric construction in this crate is generic over [`Scalar`] so
//! the two paths share one implementation of each series.

use std::fmt::{self, Debug};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use twofloat::TwoFloat;

/// Exact element of `ℚ(i)`. `BigRational` keeps both parts in lowest terms
/// with positive denominators.
pub type GaussianRational = Complex<BigRational>;

pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + Num + Neg<Output = Self> {
    fn from_int(n: i64) -> Self;
    fn imag_unit() -> Self;
    fn conjugate(&self) -> Self;
    fn to_complex64(&self) -> Complex64;
}

impl Scalar for Complex64 {
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn imag_unit() -> Self {
        Complex64::i()
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn to_complex64(&self) -> Complex64 {
        *self
    }
}

impl Scalar for GaussianRational {
    fn from_int(n: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }
    fn imag_unit() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Double-double real (about 32 significant digits) backed by `twofloat`.
///
/// `twofloat` 0.8 forms the reciprocal residual of a double-double quotient
/// without a fused multiply-add, which loses the low word (`1/3` comes back
/// with `lo = 0`). This wrapper keeps its addition and multiplication and
/// replaces division with three rounds of residual correction.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct Dd(pub TwoFloat);

impl Dd {
    pub fn from_f64(x: f64) -> Self {
        Dd(TwoFloat::from(x))
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.0)
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        Dd(self.0 + rhs.0)
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        Dd(self.0 - rhs.0)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        Dd(self.0 * rhs.0)
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let d = rhs.0.hi();
        let q1 = self.0.hi() / d;
        let r = self.0 - rhs.0 * q1;
        let q2 = r.hi() / d;
        let r = r - rhs.0 * q2;
        let q3 = r.hi() / d;
        Dd(TwoFloat::new_add(q1, q2) + q3)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, rhs: Dd) -> Dd {
        let q = (self / rhs).0.trunc();
        Dd(self.0 - q * rhs.0)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd(-self.0)
    }
}

impl Zero for Dd {
    fn zero() -> Self {
        Dd::from_f64(0.0)
    }
    fn is_zero(&self) -> bool {
        self.0.hi() == 0.0 && self.0.lo() == 0.0
    }
}

impl One for Dd {
    fn one() -> Self {
        Dd::from_f64(1.0)
    }
}

impl Num for Dd {
    type FromStrRadixErr = <f64 as Num>::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        f64::from_str_radix(s, radix).map(Dd::from_f64)
    }
}

/// Complex double-double. Floating evaluation of terminating series runs in
/// this type and rounds once, so cancellation between large alternating
/// terms does not reach the result.
pub type ComplexDD = Complex<Dd>;

impl Scalar for ComplexDD {
    fn from_int(n: i64) -> Self {
        Complex::new(Dd::from_f64(n as f64), Dd::zero())
    }
    fn imag_unit() -> Self {
        Complex::new(Dd::zero(), Dd::one())
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn to_complex64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

pub fn widen(z: Complex64) -> ComplexDD {
    Complex::new(Dd::from_f64(z.re), Dd::from_f64(z.im))
}

/// `p/q` as a real Gaussian rational.
pub fn rational(p: i64, q: i64) -> GaussianRational {
    Complex::new(BigRational::new(p.into(), q.into()), BigRational::zero())
}

/// `(p_re/q_re) + (p_im/q_im)·i`.
pub fn gaussian(p_re: i64, q_re: i64, p_im: i64, q_im: i64) -> GaussianRational {
    Complex::new(
        BigRational::new(p_re.into(), q_re.into()),
        BigRational::new(p_im.into(), q_im.into()),
    )
}

pub fn is_real(z: &GaussianRational) -> bool {
    z.im.is_zero()
}

/// `i^k` for any integer `k`.
pub fn i_pow<S: Scalar>(k: i64) -> S {
    match k.rem_euclid(4) {
        0 => S::one(),
        1 => S::imag_unit(),
        2 => -S::one(),
        _ => -S::imag_unit(),
    }
}

/// Rising factorial over any scalar.
pub fn rising<S: Scalar>(a: &S, k: usize) -> S {
    let mut acc = S::one();
    for j in 0..k {
        acc = acc * (a.clone() + S::from_int(j as i64));
    }
    acc
}

pub fn factorial<S: Scalar>(n: usize) -> S {
    rising(&S::one(), n)
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human-readable `a+bi` form; real values print without the imaginary part.
pub fn gaussian_to_string(z: &GaussianRational) -> String {
    if z.im.is_zero() {
        return z.re.to_string();
    }
    let im = if z.im.is_one() {
        String::new()
    } else if (-z.im.clone()).is_one() {
        "-".to_string()
    } else {
        z.im.to_string()
    };
    if z.re.is_zero() {
        format!("{im}i")
    } else if z.im > BigRational::zero() {
        format!("{}+{im}i", z.re)
    } else {
        format!("{}{im}i", z.re)
    }
}

#[derive(Serialize, Deserialize)]
struct GaussianRepr {
    re: String,
    im: String,
}

fn parse_rational_field(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Serde adapter for a single coefficient: `{"re": "p/q", "im": "p/q"}`.
pub struct GaussianJson<'a>(pub &'a GaussianRational);

impl Serialize for GaussianJson<'_> {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        GaussianRepr {
            re: rational_to_string(&self.0.re),
            im: rational_to_string(&self.0.im),
        }
        .serialize(s)
    }
}

fn gaussian_from_repr(repr: GaussianRepr) -> Option<GaussianRational> {
    Some(Complex::new(
        parse_rational_field(&repr.re)?,
        parse_rational_field(&repr.im)?,
    ))
}

/// Univariate polynomial, coefficients in ascending degree, never with a
/// trailing zero coefficient.
#[derive(Clone, PartialEq)]
pub struct Poly<S> {
    coeffs: Vec<S>,
}

pub type ExactPoly = Poly<GaussianRational>;

impl<S: Scalar> Poly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(S::one())
    }

    /// `c0 + c1·x`
    pub fn linear(c0: S, c1: S) -> Self {
        Poly::new(vec![c0, c1])
    }

    pub fn x() -> Self {
        Poly::linear(S::zero(), S::one())
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * S::from_int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &S) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn conjugate(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.conjugate()).collect())
    }

    /// `q(c·x)`
    pub fn rescale_argument(&self, c: &S) -> Self {
        let mut pow = S::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * pow.clone());
            pow = pow * c.clone();
        }
        Poly::new(out)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<S: Scalar> Add for &Poly<S> {
    type Output = Poly<S>;
    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Sub for &Poly<S> {
    type Output = Poly<S>;
    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<S: Scalar> Mul for &Poly<S> {
    type Output = Poly<S>;
    fn mul(self, rhs: &Poly<S>) -> Poly<S> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;
    fn neg(self) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<S: Debug> Debug for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let c = gaussian_to_string(c);
                let c = if c.contains(['+', 'i']) || c[1..].contains('-') {
                    format!("({c})")
                } else {
                    c
                };
                match k {
                    0 => c,
                    1 => format!("{c}*x"),
                    _ => format!("{c}*x^{k}"),
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Serialize for ExactPoly {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        s.collect_seq(self.coeffs.iter().map(GaussianJson))
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let reprs = Vec::<GaussianRepr>::deserialize(d)?;
        let coeffs = reprs
            .into_iter()
            .map(|r| {
                let shown = format!("{{re: {}, im: {}}}", r.re, r.im);
                gaussian_from_repr(r)
                    .ok_or_else(|| D::Error::custom(format!("bad coefficient {shown}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}
