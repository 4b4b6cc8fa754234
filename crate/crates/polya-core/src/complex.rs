//! Complex numbers over [`Scalar`], with the principal-branch logarithm.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone)]
pub struct Complex {
    re: Scalar,
    im: Scalar,
}

impl Complex {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Scalar) -> Self {
        let p = re.prec();
        Complex {
            re,
            im: Scalar::zero(p),
        }
    }

    pub fn from_f64s(re: f64, im: f64, prec: u32) -> Self {
        Complex {
            re: Scalar::from_f64(re, prec),
            im: Scalar::from_f64(im, prec),
        }
    }

    pub fn from_i64s(re: i64, im: i64, prec: u32) -> Self {
        Complex {
            re: Scalar::from_i64(re, prec),
            im: Scalar::from_i64(im, prec),
        }
    }

    pub fn zero(prec: u32) -> Self {
        Complex {
            re: Scalar::zero(prec),
            im: Scalar::zero(prec),
        }
    }

    pub fn one(prec: u32) -> Self {
        Complex {
            re: Scalar::one(prec),
            im: Scalar::zero(prec),
        }
    }

    pub fn i(prec: u32) -> Self {
        Complex {
            re: Scalar::zero(prec),
            im: Scalar::one(prec),
        }
    }

    pub fn re(&self) -> &Scalar {
        &self.re
    }

    pub fn im(&self) -> &Scalar {
        &self.im
    }

    pub fn into_parts(self) -> (Scalar, Scalar) {
        (self.re, self.im)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn to_prec(&self, prec: u32) -> Self {
        Complex {
            re: self.re.to_prec(prec),
            im: self.im.to_prec(prec),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// True when the imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn abs(&self) -> Scalar {
        self.re.hypot(&self.im)
    }

    pub fn norm_sqr(&self) -> Scalar {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> Scalar {
        self.im.atan2(&self.re)
    }

    /// Principal-branch logarithm: `ln|z| + i arg z`.
    pub fn ln(&self) -> Self {
        Complex {
            re: self.abs().ln(),
            im: self.arg(),
        }
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Complex {
            re: &m * &c,
            im: &m * &s,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Complex {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        Complex {
            re: &self.re / &d,
            im: &self.im.neg() / &d,
        }
    }

    /// Unit point `e^{i theta}`.
    pub fn cis(theta: &Scalar) -> Self {
        let (s, c) = theta.sin_cos();
        Complex { re: c, im: s }
    }

    pub fn dist(&self, other: &Self) -> Scalar {
        (self - other).abs()
    }
}

impl std::ops::Add for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl std::ops::Sub for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl std::ops::Mul for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        Complex { re, im }
    }
}

impl std::ops::Div for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        // plain formula; the MPFR exponent range makes overflow a non-issue
        let d = rhs.norm_sqr();
        let re = &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &d;
        let im = &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &d;
        Complex { re, im }
    }
}

impl std::ops::Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }
}

macro_rules! complex_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl std::ops::$trait for Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
        impl std::ops::$trait<&Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: &Complex) -> Complex {
                std::ops::$trait::$method(&self, rhs)
            }
        }
    )*};
}

complex_owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl std::ops::Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{:e}-{:e}i", self.re, self.im.abs())
        } else {
            write!(f, "{:e}+{:e}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex({})", self)
    }
}
