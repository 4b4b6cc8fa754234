//! Dense polynomials with multiprecision complex coefficients, plus an exact
//! integer variant used by the differentiation recurrence.
//!
//! The zero polynomial is the empty coefficient sequence; asking for its
//! degree yields `None` so callers must handle it explicitly.

use std::fmt;

use rug::Integer;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, DEFAULT_PREC};

/// Coefficients indexed by power, highest entry nonzero.
#[derive(Clone)]
pub struct Polynomial {
    coeffs: Vec<Complex>,
    is_real: bool,
}

impl Polynomial {
    /// Build from coefficients (index = power). Trailing coefficients that are
    /// exactly zero are stripped; the zero polynomial has no coefficients.
    pub fn new(mut coeffs: Vec<Complex>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let is_real = coeffs.iter().all(|c| c.im().is_zero());
        Polynomial { coeffs, is_real }
    }

    pub fn zero() -> Self {
        Polynomial {
            coeffs: Vec::new(),
            is_real: true,
        }
    }

    pub fn one(prec: u32) -> Self {
        Polynomial::new(vec![Complex::one(prec)])
    }

    pub fn constant(c: Complex) -> Self {
        Polynomial::new(vec![c])
    }

    /// `z - a` for a real shift, the building block for products of linear factors.
    pub fn linear_from_root(a: &Scalar) -> Self {
        let p = a.prec();
        Polynomial::new(vec![Complex::from_real(a.neg()), Complex::one(p)])
    }

    pub fn from_real_coeffs(coeffs: &[Scalar]) -> Self {
        Polynomial::new(coeffs.iter().map(|s| Complex::from_real(s.clone())).collect())
    }

    pub fn from_i64_coeffs(coeffs: &[i64], prec: u32) -> Self {
        Polynomial::new(
            coeffs
                .iter()
                .map(|&c| Complex::from_i64s(c, 0, prec))
                .collect(),
        )
    }

    /// Parse each coefficient from a decimal string at the given precision.
    pub fn from_decimal_strs(coeffs: &[&str], prec: u32) -> Result<Self> {
        let mut v = Vec::with_capacity(coeffs.len());
        for s in coeffs {
            v.push(Complex::from_real(Scalar::parse(s, prec)?));
        }
        Ok(Polynomial::new(v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// Coefficient of `z^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> Complex {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| Complex::zero(self.precision()))
    }

    pub fn lead(&self) -> Option<&Complex> {
        self.coeffs.last()
    }

    /// True when every coefficient has an exactly zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.is_real
    }

    /// True when every coefficient is an exact (real) integer.
    pub fn is_exact_integer(&self) -> bool {
        self.is_real && self.coeffs.iter().all(|c| c.re().is_integer())
    }

    /// Largest coefficient precision (DEFAULT_PREC for the zero polynomial).
    pub fn precision(&self) -> u32 {
        self.coeffs
            .iter()
            .map(|c| c.prec())
            .max()
            .unwrap_or(DEFAULT_PREC)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &Complex) -> Complex {
        let p = self.precision().max(z.prec());
        let mut acc = Complex::zero(p);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    /// Termwise derivative; drops the degree by exactly one for deg >= 1.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Scalar::from_u64(k as u64, c.prec())))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, s: &Complex) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn scale_real(&self, s: &Scalar) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }

    /// Quotient and remainder with `deg r < deg den`.
    pub fn divrem(&self, den: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let dd = den.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let prec = self.precision().max(den.precision());
        let Some(dn) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if dn < dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let lead = den.coeffs[dd].clone();
        let mut rem: Vec<Complex> = self.coeffs.clone();
        let mut quo = vec![Complex::zero(prec); dn - dd + 1];
        for i in (dd..=dn).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] / &lead;
            for j in 0..dd {
                rem[i - dd + j] = &rem[i - dd + j] - &(&c * &den.coeffs[j]);
            }
            // the leading term is annihilated by construction
            rem[i] = Complex::zero(prec);
            quo[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quo), Polynomial::new(rem)))
    }

    /// Cauchy root bound `1 + max_{i<n} |c_i / c_n|`; every root has modulus
    /// at most this value.
    pub fn root_bound(&self) -> Result<Scalar> {
        let n = self.degree().ok_or(Error::ConstantPolynomial)?;
        if n < 1 {
            return Err(Error::ConstantPolynomial);
        }
        let prec = self.precision();
        let lead = self.coeffs[n].abs();
        let mut m = Scalar::zero(prec);
        for c in &self.coeffs[..n] {
            let r = &c.abs() / &lead;
            if r > m {
                m = r;
            }
        }
        Ok(&m + &Scalar::one(prec))
    }

    /// Largest `|c_j|` (zero polynomial gives 0); a scale for residual tests.
    pub fn max_coeff_abs(&self) -> Scalar {
        let prec = self.precision();
        let mut m = Scalar::zero(prec);
        for c in &self.coeffs {
            let a = c.abs();
            if a > m {
                m = a;
            }
        }
        m
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let prec = self.precision().max(rhs.precision());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let a = self.coeffs.get(j);
            let b = rhs.coeffs.get(j);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => Complex::zero(prec),
            });
        }
        Polynomial::new(out)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let prec = self.precision().max(rhs.precision());
        let mut out = vec![Complex::zero(prec); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "Polynomial(0)");
        }
        write!(f, "Polynomial(deg {}, lead {})", self.coeffs.len() - 1, self.coeffs.last().unwrap())
    }
}

/// Real polynomial with exact arbitrary-precision integer coefficients.
///
/// This carries the cofactor recurrence bit-exactly; conversion to
/// [`Polynomial`] promotes the precision so no coefficient is rounded.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn lead(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Integer::from(c * k as u64))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let mut c = self.coeffs.get(j).cloned().unwrap_or_default();
            if let Some(b) = rhs.coeffs.get(j) {
                c += b;
            }
            out.push(c);
        }
        IntPoly::new(out)
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Integer::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Integer::from(a * b);
            }
        }
        IntPoly::new(out)
    }

    /// Exact conversion; raises precision as needed for wide coefficients.
    pub fn to_polynomial(&self, prec: u32) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| Complex::from_real(Scalar::from_integer(c, prec)))
                .collect(),
        )
    }

    /// Extract an exact integer view of a [`Polynomial`], when it has one.
    pub fn try_from_polynomial(p: &Polynomial) -> Option<IntPoly> {
        if !p.is_real() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(p.coeffs().len());
        for c in p.coeffs() {
            coeffs.push(c.re().to_integer_exact()?);
        }
        Some(IntPoly::new(coeffs))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> u32 {
        256
    }

    fn close(a: &Complex, b: &Complex, tol: f64) -> bool {
        a.dist(b).to_f64() <= tol
    }

    #[test]
    fn eval_fixture_values() {
        // z^2 + 1 at i is a root
        let p = Polynomial::from_i64_coeffs(&[1, 0, 1], prec());
        let at_i = p.eval(&Complex::i(prec()));
        assert!(at_i.is_zero() || at_i.abs().to_f64() < 1e-70);

        // 3z^2 at 2
        let p = Polynomial::from_i64_coeffs(&[0, 0, 3], prec());
        let v = p.eval(&Complex::from_i64s(2, 0, prec()));
        assert_eq!(v, Complex::from_i64s(12, 0, prec()));

        // constant term of 27z^6 + 54z^3 + 6
        let p = Polynomial::from_i64_coeffs(&[6, 0, 0, 54, 0, 0, 27], prec());
        let v = p.eval(&Complex::zero(prec()));
        assert_eq!(v, Complex::from_i64s(6, 0, prec()));
    }

    #[test]
    fn derivative_fixture_values() {
        let p = Polynomial::from_i64_coeffs(&[0, 0, 0, 1], prec()); // z^3
        assert_eq!(
            p.derivative().coeffs(),
            Polynomial::from_i64_coeffs(&[0, 0, 3], prec()).coeffs()
        );

        let c = Polynomial::from_i64_coeffs(&[5], prec());
        assert!(c.derivative().is_zero());

        let p = Polynomial::from_i64_coeffs(&[6, 0, 0, 54, 0, 0, 27], prec());
        let expected = Polynomial::from_i64_coeffs(&[0, 0, 162, 0, 0, 162], prec());
        assert_eq!(p.derivative().coeffs(), expected.coeffs());
    }

    #[test]
    fn ring_arithmetic_fixtures() {
        let zp1 = Polynomial::from_i64_coeffs(&[1, 1], prec());
        let zm1 = Polynomial::from_i64_coeffs(&[-1, 1], prec());
        let prod = &zp1 * &zm1;
        assert_eq!(prod.coeffs(), Polynomial::from_i64_coeffs(&[-1, 0, 1], prec()).coeffs());

        let z2 = Polynomial::from_i64_coeffs(&[0, 0, 1], prec());
        let sum = &z2 + &(-&z2);
        assert!(sum.is_zero());
        assert!(sum.degree().is_none());

        let t = Polynomial::from_i64_coeffs(&[0, 0, 3], prec());
        let sq = &t * &t;
        assert_eq!(sq.coeffs(), Polynomial::from_i64_coeffs(&[0, 0, 0, 0, 9], prec()).coeffs());
    }

    #[test]
    fn divrem_fixtures() {
        let num = Polynomial::from_i64_coeffs(&[-1, 0, 0, 1], prec()); // z^3 - 1
        let den = Polynomial::from_i64_coeffs(&[-1, 1], prec()); // z - 1
        let (q, r) = num.divrem(&den).unwrap();
        assert_eq!(q.coeffs(), Polynomial::from_i64_coeffs(&[1, 1, 1], prec()).coeffs());
        assert!(r.is_zero());

        let num = Polynomial::from_i64_coeffs(&[1, 0, 1], prec()); // z^2 + 1
        let den = Polynomial::from_i64_coeffs(&[0, 1], prec()); // z
        let (q, r) = num.divrem(&den).unwrap();
        assert_eq!(q.coeffs(), Polynomial::from_i64_coeffs(&[0, 1], prec()).coeffs());
        assert_eq!(r.coeffs(), Polynomial::from_i64_coeffs(&[1], prec()).coeffs());

        assert!(num.divrem(&Polynomial::zero()).is_err());
    }

    #[test]
    fn divrem_rolle_product_remainder_is_exactly_zero() {
        // h = (z^2-1)(z^2-4): h' = 4z^3 - 10z = 4 * B with B = z^3 - 2.5z, and
        // the scaling by 1/4 is exact in binary. Dividing h' * A by B must
        // leave a bit-exact zero remainder for any exact A.
        let hp = Polynomial::from_i64_coeffs(&[0, -10, 0, 4], prec());
        let quarter = Complex::from_f64s(0.25, 0.0, prec());
        let b = hp.scale(&quarter);
        let a = {
            // prod (z - a_j) over {-2,-1,1,2}
            let mut acc = Polynomial::one(prec());
            for r in [-2i64, -1, 1, 2] {
                acc = &acc * &Polynomial::linear_from_root(&Scalar::from_i64(r, prec()));
            }
            acc
        };
        let num = &hp * &a;
        let (q, r) = num.divrem(&b).unwrap();
        assert!(r.is_zero(), "remainder must be exactly zero, got {r:?}");
        let four_a = a.scale(&Complex::from_i64s(4, 0, prec()));
        assert_eq!(q.coeffs(), four_a.coeffs());
    }

    #[test]
    fn root_bound_fixtures() {
        let z3 = Polynomial::from_i64_coeffs(&[0, 0, 0, 1], prec());
        assert_eq!(z3.root_bound().unwrap(), Scalar::one(prec()));

        let p = Polynomial::from_i64_coeffs(&[3, 4, 1], prec());
        assert_eq!(p.root_bound().unwrap(), Scalar::from_i64(5, prec()));

        let p = Polynomial::from_i64_coeffs(&[6, 0, 0, 54, 0, 0, 27], prec());
        assert_eq!(p.root_bound().unwrap(), Scalar::from_i64(3, prec()));

        assert!(Polynomial::from_i64_coeffs(&[7], prec()).root_bound().is_err());
    }

    #[test]
    fn int_poly_round_trip_and_ops() {
        let p = IntPoly::from_i64s(&[6, 0, 0, 54, 0, 0, 27]);
        let q = p.to_polynomial(prec());
        assert_eq!(IntPoly::try_from_polynomial(&q).unwrap(), p);
        assert_eq!(p.derivative(), IntPoly::from_i64s(&[0, 0, 162, 0, 0, 162]));

        let a = IntPoly::from_i64s(&[1, 1]);
        let b = IntPoly::from_i64s(&[-1, 1]);
        assert_eq!(a.mul(&b), IntPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(a.add(&b), IntPoly::from_i64s(&[0, 2]));
    }

    #[test]
    fn mul_eval_homomorphism_spot() {
        let p = Polynomial::from_i64_coeffs(&[2, -3, 0, 5], prec());
        let q = Polynomial::from_i64_coeffs(&[1, 4, -2], prec());
        let z = Complex::from_f64s(0.3, -1.2, prec());
        let lhs = (&p * &q).eval(&z);
        let rhs = &p.eval(&z) * &q.eval(&z);
        assert!(close(&lhs, &rhs, 1e-70));
    }
}
