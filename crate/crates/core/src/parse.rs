//! Input grammar shared by every command line flag and config value.
//!
//! A real is an integer, a fraction `p/q`, or (floating inputs only) a
//! decimal such as `0.25` or `1e-3`. A complex value is `re`, `re+imi`,
//! `re-imi` or `imi`, where a bare `i` stands for one. Exact inputs must be
//! integers or fractions: `0.1` would otherwise be ambiguous between the
//! rational `1/10` and the nearest double.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::GaussianRational;

#[derive(Debug, Clone, PartialEq)]
enum Real {
    Rational(BigRational),
    Decimal(f64),
}

impl Real {
    fn to_f64(&self) -> f64 {
        match self {
            Real::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Real::Decimal(x) => *x,
        }
    }
}

fn parse_error(input: &str, why: &str) -> Error {
    Error::Parse(format!("{why}: {input:?}"))
}

fn parse_real(s: &str, input: &str) -> Result<Real> {
    let s = s.trim();
    if s.is_empty() {
        return Err(parse_error(input, "missing number"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| parse_error(input, "bad numerator"))?;
        let q: BigInt = q.trim().parse().map_err(|_| parse_error(input, "bad denominator"))?;
        if q.is_zero() {
            return Err(parse_error(input, "zero denominator"));
        }
        return Ok(Real::Rational(BigRational::new(p, q)));
    }
    if let Ok(k) = s.parse::<BigInt>() {
        return Ok(Real::Rational(BigRational::from_integer(k)));
    }
    let looks_numeric = s.chars().all(|c| c.is_ascii_digit() || "+-.eE".contains(c));
    match s.parse::<f64>() {
        Ok(x) if looks_numeric && x.is_finite() => Ok(Real::Decimal(x)),
        _ => Err(parse_error(input, "not a number")),
    }
}

/// Splits `re±imi` at the sign that starts the imaginary part.
fn split_complex(s: &str) -> (Option<&str>, Option<&str>) {
    let Some(body) = s.strip_suffix('i') else {
        return (Some(s), None);
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => (Some(&body[..k]), Some(&body[k..])),
        None => (None, Some(body)),
    }
}

fn parse_parts(input: &str) -> Result<(Real, Real)> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(parse_error(input, "empty value"));
    }
    let (re, im) = split_complex(&s);
    let re = match re {
        Some(r) => parse_real(r, input)?,
        None => Real::Rational(BigRational::zero()),
    };
    let im = match im {
        None => Real::Rational(BigRational::zero()),
        Some("" | "+") => Real::Rational(BigRational::from_integer(1.into())),
        Some("-") => Real::Rational(BigRational::from_integer((-1).into())),
        Some(v) => parse_real(v, input)?,
    };
    Ok((re, im))
}

/// Floating complex value.
pub fn parse_complex(input: &str) -> Result<Complex64> {
    let (re, im) = parse_parts(input)?;
    Ok(Complex64::new(re.to_f64(), im.to_f64()))
}

/// Floating real value; an imaginary part is an error.
pub fn parse_real_f64(input: &str) -> Result<f64> {
    let z = parse_complex(input)?;
    if z.im != 0.0 {
        return Err(parse_error(input, "expected a real number"));
    }
    Ok(z.re)
}

/// Exact Gaussian rational; decimals are rejected.
pub fn parse_gaussian(input: &str) -> Result<GaussianRational> {
    let (re, im) = parse_parts(input)?;
    match (re, im) {
        (Real::Rational(re), Real::Rational(im)) => Ok(Complex::new(re, im)),
        _ => Err(parse_error(input, "exact mode needs integers or fractions p/q")),
    }
}

/// Comma-separated list of floating complex values.
pub fn parse_complex_list(input: &str) -> Result<Vec<Complex64>> {
    input.split(',').map(parse_complex).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gaussian, rational};
    use proptest::prelude::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_complex("1/2").unwrap(), Complex64::new(0.5, 0.0));
        assert_eq!(parse_complex("0.5+0.25i").unwrap(), Complex64::new(0.5, 0.25));
        assert_eq!(parse_complex("3/4-1/4i").unwrap(), Complex64::new(0.75, -0.25));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("1/2+i").unwrap(), Complex64::new(0.5, 1.0));
        assert_eq!(parse_complex("2.5i").unwrap(), Complex64::new(0.0, 2.5));
        assert_eq!(parse_complex("1e-3-2E+1i").unwrap(), Complex64::new(1e-3, -20.0));
        assert_eq!(parse_complex(" -1 / 3 ").unwrap(), Complex64::new(-1.0 / 3.0, 0.0));
        assert_eq!(parse_real_f64("-2").unwrap(), -2.0);
    }

    #[test]
    fn exact_examples() {
        assert_eq!(parse_gaussian("1/2").unwrap(), rational(1, 2));
        assert_eq!(parse_gaussian("-3/4+5/6i").unwrap(), gaussian(-3, 4, 5, 6));
        assert_eq!(parse_gaussian("i").unwrap(), gaussian(0, 1, 1, 1));
        assert_eq!(parse_gaussian("2/4").unwrap(), rational(1, 2));
        assert!(matches!(parse_gaussian("0.5"), Err(Error::Parse(_))));
        assert!(matches!(parse_gaussian("1+0.5i"), Err(Error::Parse(_))));
    }

    #[test]
    fn malformed_inputs_are_parse_errors() {
        for bad in ["", "abc", "1/0", "1/", "/2", "1+", "1+2", "inf", "nan", "1+2j", "1++2i", "i i"] {
            assert!(matches!(parse_complex(bad), Err(Error::Parse(_))), "{bad}");
        }
        assert!(parse_real_f64("1+i").is_err());
    }

    proptest! {
        #[test]
        fn formatted_fractions_round_trip(p in -1000i64..1000, q in 1i64..1000, r in -1000i64..1000, s in 1i64..1000) {
            let z = gaussian(p, q, r, s);
            let text = crate::exact::gaussian_to_string(&z);
            prop_assert_eq!(parse_gaussian(&text).unwrap(), z);
        }

        #[test]
        fn floats_round_trip(re in -1e6f64..1e6, im in -1e6f64..1e6) {
            let text = crate::orthogonality::format_complex(Complex64::new(re, im));
            prop_assert_eq!(parse_complex(&text).unwrap(), Complex64::new(re, im));
        }
    }
}
