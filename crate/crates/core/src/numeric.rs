//! Exact rational helpers plus certified enclosures for the handful of
//! transcendental values the recipes need (natural logs, rational powers).
//!
//! Ceilings of irrational expressions are computed by bracketing the value
//! between rationals with directed rounding and escalating precision until
//! the ceiling is pinned, so results are deterministic across platforms.
//! Exactly-rational cases (integer exponents, perfect roots) are detected
//! first; without that, bracketing an exact integer would never terminate.

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number used throughout the crate.
pub type Rational = Ratio<BigInt>;

/// A certified enclosure `lo <= x <= hi` of a real value.
#[derive(Debug, Clone)]
pub struct Brackets {
    pub lo: Rational,
    pub hi: Rational,
}

impl Brackets {
    fn exact(v: Rational) -> Self {
        Brackets { lo: v.clone(), hi: v }
    }

    /// Midpoint; only for reporting, never for certification.
    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

pub fn rat_u64(n: u64, d: u64) -> Rational {
    Ratio::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_nat(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

pub fn rat_of(n: &BigUint, d: &BigUint) -> Rational {
    Ratio::new(BigInt::from(n.clone()), BigInt::from(d.clone()))
}

/// Ceiling division of naturals.
pub fn ceil_div_nat(a: &BigUint, b: &BigUint) -> BigUint {
    assert!(!b.is_zero());
    (a + b - BigUint::one()) / b
}

/// Least integer root: smallest `r` with `r^n >= v`.
pub fn ceil_nth_root(v: &BigUint, n: u32) -> BigUint {
    if v.is_zero() {
        return BigUint::zero();
    }
    let r = v.nth_root(n);
    if r.pow(n) == *v {
        r
    } else {
        r + BigUint::one()
    }
}

fn two_pow(e: u64) -> BigInt {
    BigInt::one() << e
}

/// Split positive `x` as `m * 2^e` with `m` in `[1, 2)`.
fn split_pow2(x: &Rational) -> (Rational, i64) {
    debug_assert!(x.is_positive());
    let bits_n = x.numer().magnitude().bits() as i64;
    let bits_d = x.denom().magnitude().bits() as i64;
    let mut e = bits_n - bits_d;
    // bits-based estimate can be off by one either way
    loop {
        let m = if e >= 0 {
            x / Rational::from_integer(two_pow(e as u64))
        } else {
            x * Rational::from_integer(two_pow((-e) as u64))
        };
        if m < Rational::one() {
            e -= 1;
        } else if m >= Rational::from_integer(BigInt::from(2)) {
            e += 1;
        } else {
            return (m, e);
        }
    }
}

/// `ln 2` enclosure via `2 atanh(1/3)`.
fn ln2_brackets(prec: u32) -> Brackets {
    atanh_series(&rat_u64(1, 3), prec)
}

/// Enclosure of `2 atanh(z)` for `0 <= z <= 1/3` from the odd power series.
/// The truncation remainder is bounded by the geometric tail.
fn atanh_series(z: &Rational, prec: u32) -> Brackets {
    debug_assert!(!z.is_negative() && *z <= rat_u64(1, 3));
    if z.is_zero() {
        return Brackets::exact(Rational::zero());
    }
    // each extra term gains log2(9) ~ 3.17 bits
    let terms = (prec as usize) / 3 + 3;
    let z2 = z * z;
    let mut power = z.clone(); // z^(2j+1)
    let mut sum = Rational::zero();
    for j in 0..terms {
        sum += &power / Rational::from_integer(BigInt::from(2 * j as u64 + 1));
        power *= &z2;
    }
    // remainder of 2*sum: 2 * z^(2J+1) / ((2J+1)(1-z^2)) <= 2 * power / (1 - z2)
    let tail = Rational::from_integer(BigInt::from(2)) * &power
        / ((Rational::one() - &z2) * Rational::from_integer(BigInt::from(2 * terms as u64 + 1)));
    let lo = Rational::from_integer(BigInt::from(2)) * &sum;
    let hi = &lo + tail * Rational::from_integer(BigInt::from(2));
    Brackets { lo, hi }
}

/// Enclosure of the natural log of a positive rational.
pub fn ln_brackets(x: &Rational, prec: u32) -> Brackets {
    assert!(x.is_positive(), "ln of non-positive value");
    let (m, e) = split_pow2(x);
    // ln m = 2 atanh((m-1)/(m+1)), argument in [0, 1/3) for m in [1, 2)
    let z = (&m - Rational::one()) / (&m + Rational::one());
    let lnm = atanh_series(&z, prec);
    if e == 0 {
        return lnm;
    }
    let l2 = ln2_brackets(prec);
    let ee = Rational::from_integer(BigInt::from(e));
    if e > 0 {
        Brackets {
            lo: &ee * &l2.lo + lnm.lo,
            hi: &ee * &l2.hi + lnm.hi,
        }
    } else {
        Brackets {
            lo: &ee * &l2.hi + lnm.lo,
            hi: &ee * &l2.lo + lnm.hi,
        }
    }
}

fn factorial(n: u64) -> BigUint {
    let mut f = BigUint::one();
    for j in 2..=n {
        f *= BigUint::from(j);
    }
    f
}

/// Enclosure of `e^f` for `0 <= f < 1` by Taylor series with geometric tail bound.
fn exp_frac(f: &Rational, prec: u32) -> Brackets {
    debug_assert!(!f.is_negative() && *f < Rational::one());
    if f.is_zero() {
        return Brackets::exact(Rational::one());
    }
    let mut terms: u64 = 2;
    while (factorial(terms).bits() as u32) < prec + 2 {
        terms += 1;
    }
    let mut sum = Rational::one();
    let mut power = Rational::one();
    for j in 1..terms {
        power *= f;
        power /= Rational::from_integer(BigInt::from(j));
        sum += &power;
    }
    // remainder <= f^J/J! * 1/(1 - f/(J+1)) <= 2 * f^J/J!  for J >= 1
    let last = power * f / Rational::from_integer(BigInt::from(terms));
    let hi = &sum + last * Rational::from_integer(BigInt::from(2));
    Brackets { lo: sum, hi }
}

/// Enclosure of `e^1`.
pub fn e_brackets(prec: u32) -> Brackets {
    let mut terms: u64 = 2;
    while (factorial(terms).bits() as u32) < prec + 2 {
        terms += 1;
    }
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for j in 1..=terms {
        term /= Rational::from_integer(BigInt::from(j));
        sum += &term;
    }
    // remainder <= 2/(J+1)!
    let tail = Rational::from_integer(BigInt::from(2))
        / Rational::from_integer(BigInt::from(factorial(terms + 1)));
    Brackets {
        lo: sum.clone(),
        hi: sum + tail,
    }
}

/// Enclosure of `exp(x)` for rational `x`.
pub fn exp_brackets(x: &Rational, prec: u32) -> Brackets {
    if x.is_negative() {
        let b = exp_brackets(&(-x.clone()), prec);
        return Brackets {
            lo: b.hi.recip(),
            hi: b.lo.recip(),
        };
    }
    let n = x.floor().to_integer();
    let n_u = n
        .to_u32()
        .expect("exp argument out of supported range");
    let f = x - Rational::from_integer(n);
    let ef = exp_frac(&f, prec);
    if n_u == 0 {
        return ef;
    }
    let e = e_brackets(prec + 2 * n_u);
    Brackets {
        lo: pow_rational_int(&e.lo, n_u) * ef.lo,
        hi: pow_rational_int(&e.hi, n_u) * ef.hi,
    }
}

fn pow_rational_int(base: &Rational, n: u32) -> Rational {
    Ratio::new(base.numer().pow(n), base.denom().pow(n))
}

/// Exact value of `base^expo` when it is rational: integer exponents, or
/// fractional exponents of perfect powers.
pub fn exact_pow(base: &Rational, expo: &Rational) -> Option<Rational> {
    if base.is_zero() {
        return if expo.is_positive() {
            Some(Rational::zero())
        } else {
            None
        };
    }
    if expo.is_integer() {
        let n = expo.to_integer();
        let n_u = n.magnitude().to_u32()?;
        let p = pow_rational_int(base, n_u);
        return Some(if n.is_negative() { p.recip() } else { p });
    }
    if base.is_negative() {
        return None;
    }
    let q = expo.denom().to_u32()?;
    let a = base.numer().magnitude();
    let b = base.denom().magnitude();
    let ra = a.nth_root(q);
    let rb = b.nth_root(q);
    if ra.pow(q) == *a && rb.pow(q) == *b {
        let root = Ratio::new(BigInt::from(ra), BigInt::from(rb));
        let p = expo.numer();
        let p_u = p.magnitude().to_u32()?;
        let powed = pow_rational_int(&root, p_u);
        Some(if p.is_negative() { powed.recip() } else { powed })
    } else {
        None
    }
}

/// Enclosure of `base^expo` for positive rational base via `exp(expo * ln base)`.
pub fn pow_brackets(base: &Rational, expo: &Rational, prec: u32) -> Brackets {
    assert!(base.is_positive());
    if let Some(v) = exact_pow(base, expo) {
        return Brackets::exact(v);
    }
    let l = ln_brackets(base, prec);
    let (t_lo, t_hi) = if expo.is_negative() {
        (expo * &l.hi, expo * &l.lo)
    } else {
        (expo * &l.lo, expo * &l.hi)
    };
    Brackets {
        lo: exp_brackets(&t_lo, prec).lo,
        hi: exp_brackets(&t_hi, prec).hi,
    }
}

const PRECISIONS: [u32; 7] = [64, 128, 256, 512, 1024, 2048, 4096];

/// Ceiling of a real value given an enclosure at each precision. The closure
/// must enclose the same irrational value at every precision.
pub fn ceil_certified(f: impl Fn(u32) -> Brackets) -> Result<BigInt> {
    for prec in PRECISIONS {
        let b = f(prec);
        let cl = b.lo.ceil().to_integer();
        let ch = b.hi.ceil().to_integer();
        if cl == ch {
            return Ok(cl);
        }
    }
    Err(Error::Unsupported(
        "ceiling did not stabilize under precision escalation; \
         value may be an undetected exact integer"
            .into(),
    ))
}

/// Floor counterpart of [`ceil_certified`].
pub fn floor_certified(f: impl Fn(u32) -> Brackets) -> Result<BigInt> {
    for prec in PRECISIONS {
        let b = f(prec);
        let fl = b.lo.floor().to_integer();
        let fh = b.hi.floor().to_integer();
        if fl == fh {
            return Ok(fl);
        }
    }
    Err(Error::Unsupported(
        "floor did not stabilize under precision escalation".into(),
    ))
}

/// Render a rational to `sig` significant digits, rounding half away from zero.
/// Plain fixed-point when the magnitude is moderate, scientific otherwise.
pub fn decimal_string(x: &Rational, sig: usize) -> String {
    assert!(sig >= 1);
    if x.is_zero() {
        return "0".into();
    }
    let neg = x.is_negative();
    let ax = x.abs();
    let (num, den) = (ax.numer().magnitude().clone(), ax.denom().magnitude().clone());
    // decimal exponent: number of digits before the point, minus one
    let mut exp10: i64 = 0;
    let ten = BigUint::from(10u32);
    let mut scaled_num = num.clone();
    let mut scaled_den = den.clone();
    while scaled_num < scaled_den {
        scaled_num *= &ten;
        exp10 -= 1;
    }
    while scaled_num >= &scaled_den * &ten {
        scaled_den *= &ten;
        exp10 += 1;
    }
    // now 1 <= scaled_num/scaled_den < 10; take sig digits with half-away rounding
    let shift = ten.pow(sig as u32 - 1);
    let n2 = &scaled_num * &shift * 2u32 + &scaled_den;
    let digits_val = n2 / (&scaled_den * 2u32);
    let mut digits = digits_val.to_str_radix(10);
    if digits.len() > sig {
        // rounding overflowed to the next power of ten
        digits.truncate(sig);
        exp10 += 1;
    }
    let sign = if neg { "-" } else { "" };
    if (-6..=(sig as i64 + 6)).contains(&exp10) {
        // fixed-point
        let s = if exp10 >= 0 {
            let ip_len = (exp10 + 1) as usize;
            if ip_len >= digits.len() {
                format!("{}{}", digits, "0".repeat(ip_len - digits.len()))
            } else {
                format!("{}.{}", &digits[..ip_len], &digits[ip_len..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-exp10 - 1) as usize), digits)
        };
        format!("{sign}{}", trim_fraction(&s))
    } else {
        let rest = trim_zeros(&digits[1..]);
        if rest.is_empty() {
            format!("{sign}{}e{exp10}", &digits[..1])
        } else {
            format!("{sign}{}.{rest}e{exp10}", &digits[..1])
        }
    }
}

fn trim_fraction(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}

fn trim_zeros(s: &str) -> String {
    s.trim_end_matches('0').to_string()
}

/// Format a rational as "num/den".
pub fn ratio_string(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close_enough(b: &Brackets, truth: f64, tol: f64) {
        let lo = b.lo.to_f64().unwrap();
        let hi = b.hi.to_f64().unwrap();
        assert!(lo <= truth + tol && truth - tol <= hi, "[{lo}, {hi}] vs {truth}");
        assert!(hi - lo < tol, "width {} too large", hi - lo);
    }

    #[test]
    fn ln_matches_f64() {
        for v in [2u64, 3, 10, 21, 638, 1_000_003] {
            let b = ln_brackets(&Rational::from_integer(BigInt::from(v)), 64);
            close_enough(&b, (v as f64).ln(), 1e-12);
        }
        let b = ln_brackets(&rat_u64(1, 7), 64);
        close_enough(&b, (1.0f64 / 7.0).ln(), 1e-12);
    }

    #[test]
    fn exp_matches_f64() {
        for v in [0i64, 1, 2, 5, 13, -3] {
            let b = exp_brackets(&Rational::from_integer(BigInt::from(v)), 64);
            close_enough(&b, (v as f64).exp(), (v as f64).exp() * 1e-12 + 1e-12);
        }
        let b = exp_brackets(&rat_u64(7, 2), 64);
        close_enough(&b, 33.11545195869231, 1e-10);
    }

    #[test]
    fn e_floor_table() {
        // floor(e^j) for small j
        let expected = [2u64, 7, 20, 54, 148, 403];
        for (j, want) in expected.iter().enumerate() {
            let j = j as i64 + 1;
            let f = floor_certified(|p| exp_brackets(&Rational::from_integer(BigInt::from(j)), p))
                .unwrap();
            assert_eq!(f, BigInt::from(*want), "floor(e^{j})");
        }
    }

    #[test]
    fn exact_pow_detects_perfect_roots() {
        // 8^(2/3) = 4
        let v = exact_pow(
            &Rational::from_integer(BigInt::from(8)),
            &Ratio::new(BigInt::from(2), BigInt::from(3)),
        )
        .unwrap();
        assert_eq!(v, Rational::from_integer(BigInt::from(4)));
        // 2^(1/2) is irrational
        assert!(exact_pow(
            &Rational::from_integer(BigInt::from(2)),
            &Ratio::new(BigInt::from(1), BigInt::from(2)),
        )
        .is_none());
    }

    #[test]
    fn certified_ceil_of_power() {
        // ceil(5^(3/2)) = ceil(11.18) = 12
        let base = Rational::from_integer(BigInt::from(5));
        let expo = Ratio::new(BigInt::from(3), BigInt::from(2));
        let c = ceil_certified(|p| pow_brackets(&base, &expo, p)).unwrap();
        assert_eq!(c, BigInt::from(12));
    }

    #[test]
    fn ceil_nth_root_boundaries() {
        assert_eq!(ceil_nth_root(&BigUint::from(8u32), 3), BigUint::from(2u32));
        assert_eq!(ceil_nth_root(&BigUint::from(9u32), 3), BigUint::from(3u32));
        assert_eq!(ceil_nth_root(&BigUint::from(1u32), 5), BigUint::from(1u32));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat_u64(11, 5), 5), "2.2");
        assert_eq!(decimal_string(&rat_u64(1, 3), 5), "0.33333");
        assert_eq!(decimal_string(&rat_u64(2, 3), 4), "0.6667");
        assert_eq!(decimal_string(&Rational::zero(), 5), "0");
        let tiny = Ratio::new(BigInt::from(1), BigInt::from(10u64).pow(30));
        assert_eq!(decimal_string(&tiny, 3), "1e-30");
    }
}
