//! Exact evaluation of floor-difference (Sturmian-style) sequences
//! s_n = ⌊(n+1)α+ρ⌋ − ⌊nα+ρ⌋ without floating-point guesswork.
//!
//! Quadratic irrationals (p+q√d)/r are compared by integer squaring, so
//! every floor is exact. π is held as a 64-digit decimal truncation and
//! every floor is checked against both interval ends; if they disagree the
//! sampler refuses rather than guessing.

use num_bigint::BigInt;
use num_traits::{Euclid, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// 64 decimal digits of π after the point, prefixed by the integer part.
const PI_DIGITS: &str = "31415926535897932384626433832795028841971693993751058209749445923";
const PI_SCALE_POW: u32 = 64;

/// The real number (p + q√d)/r with integer coefficients, r > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticReal {
    p: i64,
    q: i64,
    d: u64,
    r: i64,
}

fn is_square(d: u64) -> bool {
    let s = d.isqrt();
    s * s == d
}

impl QuadraticReal {
    pub fn new(p: i64, q: i64, d: u64, r: i64) -> Result<Self> {
        if r == 0 {
            return Err(Error::BadConstant("denominator must be nonzero".into()));
        }
        let (p, q, r) = if r < 0 { (-p, -q, -r) } else { (p, q, r) };
        if q == 0 {
            return Ok(QuadraticReal { p, q: 0, d: 0, r });
        }
        if d == 0 || is_square(d) {
            return Err(Error::BadConstant(format!(
                "√{d} is rational; fold it into the rational part"
            )));
        }
        Ok(QuadraticReal { p, q, d, r })
    }

    pub fn rational(p: i64, r: i64) -> Result<Self> {
        Self::new(p, 0, 0, r)
    }

    pub fn is_rational(&self) -> bool {
        self.q == 0
    }

    pub fn parts(&self) -> (i64, i64, u64, i64) {
        (self.p, self.q, self.d, self.r)
    }

    fn approx(&self) -> f64 {
        (self.p as f64 + self.q as f64 * (self.d as f64).sqrt()) / self.r as f64
    }
}

/// True iff a ≤ b√d, decided by sign analysis and exact squaring. For
/// non-square d equality a = b√d is impossible unless a = b = 0.
fn le_sqrt(a: &BigInt, b: &BigInt, d: u64) -> bool {
    let rhs_sign = b.sign();
    match (a.is_positive(), rhs_sign) {
        (false, num_bigint::Sign::Plus) => true,          // a ≤ 0 < b√d
        (false, num_bigint::Sign::NoSign) => !a.is_positive(), // a ≤ 0
        (true, num_bigint::Sign::Minus) | (true, num_bigint::Sign::NoSign) => false,
        (true, num_bigint::Sign::Plus) => a * a <= b * b * d, // both positive
        (false, num_bigint::Sign::Minus) => {
            if a.is_zero() {
                return false; // 0 ≤ negative is false
            }
            // both negative: a ≤ -|b|√d ⟺ a² ≥ b²d
            a * a >= b * b * d
        }
    }
}

/// ⌊(a + b√d)/r⌋ for r > 0, exact.
fn floor_quadratic(a: &BigInt, b: &BigInt, d: u64, r: &BigInt) -> BigInt {
    let approx = {
        let af = a.to_f64().unwrap_or(0.0);
        let bf = b.to_f64().unwrap_or(0.0);
        let rf = r.to_f64().unwrap_or(1.0);
        ((af + bf * (d as f64).sqrt()) / rf).floor()
    };
    let mut m = BigInt::from(approx as i64);
    // largest m with m·r − a ≤ b√d
    while !le_sqrt(&(&m * r - a), b, d) {
        m -= 1;
    }
    loop {
        let next = &m + 1;
        if le_sqrt(&(&next * r - a), b, d) {
            m = next;
        } else {
            return m;
        }
    }
}

/// A slope or offset for the sampler: exact quadratic, or π by truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Angle {
    Quadratic(QuadraticReal),
    Pi,
}

impl Angle {
    pub fn zero() -> Self {
        Angle::Quadratic(QuadraticReal::rational(0, 1).unwrap())
    }

    fn approx(&self) -> f64 {
        match self {
            Angle::Quadratic(x) => x.approx(),
            Angle::Pi => std::f64::consts::PI,
        }
    }
}

/// Evaluates ⌊nα+ρ⌋ and the letter sequence of the word s_n.
#[derive(Debug, Clone)]
pub struct SturmianSampler {
    alpha: Angle,
    rho: Angle,
    /// ⌊α⌋; the word's two letters are this and this + 1.
    base: i64,
}

impl SturmianSampler {
    pub fn new(alpha: Angle, rho: Angle) -> Result<Self> {
        match &alpha {
            Angle::Quadratic(x) if x.is_rational() => {
                return Err(Error::BadConstant(
                    "slope must be irrational; a rational slope gives a periodic word".into(),
                ));
            }
            Angle::Quadratic(x) => {
                if let Angle::Quadratic(y) = &rho {
                    if !y.is_rational() && y.d != x.d {
                        return Err(Error::BadConstant(format!(
                            "offset uses √{} but slope uses √{}; they must share a radicand",
                            y.d, x.d
                        )));
                    }
                } else {
                    return Err(Error::BadConstant(
                        "a quadratic slope needs a quadratic (or rational) offset".into(),
                    ));
                }
            }
            Angle::Pi => {
                if let Angle::Quadratic(y) = &rho {
                    if !y.is_rational() {
                        return Err(Error::BadConstant(
                            "a π slope supports only rational offsets".into(),
                        ));
                    }
                }
            }
        }
        let base = match &alpha {
            Angle::Quadratic(x) => {
                floor_quadratic(&BigInt::from(x.p), &BigInt::from(x.q), x.d, &BigInt::from(x.r))
                    .to_i64()
                    .ok_or_else(|| Error::BadConstant("slope out of range".into()))?
            }
            Angle::Pi => 3,
        };
        Ok(SturmianSampler { alpha, rho, base })
    }

    /// The two letter values the word can take: (⌊α⌋, ⌊α⌋+1).
    pub fn letters(&self) -> (i64, i64) {
        (self.base, self.base + 1)
    }

    /// ⌊nα+ρ⌋, exact or a loud precision failure.
    pub fn floor_at(&self, n: u64) -> Result<BigInt> {
        match (&self.alpha, &self.rho) {
            (Angle::Quadratic(a), Angle::Quadratic(o)) => {
                // nα+ρ = (n·pa·ro + po·ra + (n·qa·ro + qo·ra)√d) / (ra·ro)
                let n = BigInt::from(n);
                let (pa, qa, da, ra) = (a.p, a.q, a.d, a.r);
                let (po, qo, r#do, ro) = (o.p, o.q, o.d, o.r);
                let d = if qo == 0 { da } else { r#do.max(da) };
                let num_rat = &n * pa * ro + BigInt::from(po) * ra;
                let num_irr = &n * qa * ro + BigInt::from(qo) * ra;
                let den = BigInt::from(ra) * ro;
                Ok(floor_quadratic(&num_rat, &num_irr, d, &den))
            }
            (Angle::Pi, rho) => {
                let (po, ro) = match rho {
                    Angle::Quadratic(o) => (o.p, o.r),
                    Angle::Pi => (0, 1), // unreachable: rejected in new(); π+π handled below
                };
                let scale = BigInt::from(10u32).pow(PI_SCALE_POW);
                let truncated: BigInt = PI_DIGITS.parse().expect("π constant parses");
                let extra = if matches!(rho, Angle::Pi) { 1u64 } else { 0 };
                let n = BigInt::from(n + extra);
                let lo_num = &n * &truncated * ro + BigInt::from(po) * &scale;
                let hi_num = &n * (&truncated + 1u32) * ro + BigInt::from(po) * &scale;
                let den = &scale * ro;
                let lo = lo_num.div_euclid(&den);
                let hi = hi_num.div_euclid(&den);
                if lo == hi {
                    Ok(lo)
                } else {
                    Err(Error::PrecisionExhausted {
                        n: n.to_usize().unwrap_or(usize::MAX),
                    })
                }
            }
            (Angle::Quadratic(_), Angle::Pi) => unreachable!("rejected in new()"),
        }
    }

    /// s_n = ⌊(n+1)α+ρ⌋ − ⌊nα+ρ⌋.
    pub fn symbol(&self, n: u64) -> Result<i64> {
        let diff = self.floor_at(n + 1)? - self.floor_at(n)?;
        diff.to_i64()
            .ok_or_else(|| Error::BadConstant("floor difference out of range".into()))
    }

    /// Naive f64 evaluation of s_n, as an independent cross-check only.
    pub fn symbol_f64(&self, n: u64) -> i64 {
        let a = self.alpha.approx();
        let r = self.rho.approx();
        (((n + 1) as f64 * a + r).floor() - (n as f64 * a + r).floor()) as i64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> SturmianSampler {
        // α = (3−√5)/2, ρ = 3−√5
        let alpha = Angle::Quadratic(QuadraticReal::new(3, -1, 5, 2).unwrap());
        let rho = Angle::Quadratic(QuadraticReal::new(3, -1, 5, 1).unwrap());
        SturmianSampler::new(alpha, rho).unwrap()
    }

    #[test]
    fn quadratic_floors() {
        let s = golden();
        assert_eq!(s.letters(), (0, 1));
        // ⌊ρ⌋ = ⌊0.7639…⌋ = 0, ⌊α+ρ⌋ = ⌊1.1458…⌋ = 1
        assert_eq!(s.floor_at(0).unwrap(), BigInt::from(0));
        assert_eq!(s.floor_at(1).unwrap(), BigInt::from(1));
        let word: Vec<i64> = (0..12).map(|n| s.symbol(n).unwrap()).collect();
        assert_eq!(word, vec![1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1]);
    }

    #[test]
    fn pi_floors() {
        let s = SturmianSampler::new(Angle::Pi, Angle::zero()).unwrap();
        assert_eq!(s.letters(), (3, 4));
        assert_eq!(s.floor_at(7).unwrap(), BigInt::from(21));
        assert_eq!(s.floor_at(8).unwrap(), BigInt::from(25));
        let word: Vec<i64> = (0..8).map(|n| s.symbol(n).unwrap()).collect();
        assert_eq!(word, vec![3, 3, 3, 3, 3, 3, 3, 4]);
    }

    #[test]
    fn exact_agrees_with_floats_at_desk_scale() {
        let s = golden();
        let p = SturmianSampler::new(Angle::Pi, Angle::zero()).unwrap();
        for n in 0..2000 {
            assert_eq!(s.symbol(n).unwrap(), s.symbol_f64(n), "golden at {n}");
            assert_eq!(p.symbol(n).unwrap(), p.symbol_f64(n), "pi at {n}");
        }
    }

    #[test]
    fn rejects_rational_slope() {
        let alpha = Angle::Quadratic(QuadraticReal::rational(1, 3).unwrap());
        assert!(SturmianSampler::new(alpha, Angle::zero()).is_err());
    }

    #[test]
    fn rejects_square_radicand() {
        assert!(QuadraticReal::new(1, 1, 9, 2).is_err());
        assert!(QuadraticReal::new(1, 1, 0, 2).is_err());
        assert!(QuadraticReal::new(1, 0, 0, 2).is_ok());
    }

    #[test]
    fn mixed_radicands_rejected() {
        let alpha = Angle::Quadratic(QuadraticReal::new(3, -1, 5, 2).unwrap());
        let rho = Angle::Quadratic(QuadraticReal::new(0, 1, 2, 1).unwrap());
        assert!(SturmianSampler::new(alpha, rho).is_err());
    }
}
