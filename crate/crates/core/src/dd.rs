//! Pair arithmetic ("double-double"): each value is the unevaluated sum of
//! two f64 words, giving roughly 106 significand bits. This backs the
//! extended precision mode, where alternating sums need error far below the
//! identity-check tolerances.
//!
//! The primitives are the classic error-free transformations; products use
//! `f64::mul_add`, which is correctly rounded on every platform Rust targets.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Sum of two f64 words with |lo| at most half an ulp of hi.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum of two arbitrary doubles.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    (s, (a - (s - v)) + (b - v))
}

/// Error-free sum assuming |a| >= |b|.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// Error-free product.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

// ln 2 and pi/2 split into two words.
const LN2: DoubleDouble = DoubleDouble {
    hi: std::f64::consts::LN_2,
    lo: 2.319_046_813_846_299_6e-17,
};
const FRAC_PI_2: DoubleDouble = DoubleDouble {
    hi: std::f64::consts::FRAC_PI_2,
    lo: 6.123_233_995_736_766e-17,
};

impl DoubleDouble {
    pub const ZERO: Self = Self { hi: 0.0, lo: 0.0 };
    pub const ONE: Self = Self { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (h, l) = quick_two_sum(hi, lo);
        Self { hi: h, lo: l }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    /// Exact value of a product of two doubles.
    #[inline]
    pub fn from_product(a: f64, b: f64) -> Self {
        let (p, e) = two_prod(a, b);
        Self { hi: p, lo: e }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    /// Multiply by an exact power of two.
    #[inline]
    fn scale_pow2(self, f: f64) -> Self {
        Self {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    pub fn recip(self) -> Self {
        Self::ONE / self
    }

    /// e^x by range reduction over ln 2 and a Taylor tail on the remainder.
    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Self::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Self::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = self - LN2 * Self::from_f64(k);
        // |r| <= ln2/2; terms fall below pair precision well before i = 40
        let mut sum = Self::ONE;
        let mut term = Self::ONE;
        for i in 1..=40 {
            term = term * r / Self::from_f64(f64::from(i));
            sum = sum + term;
            if term.hi.abs() < 1.0e-40 * sum.hi.abs() {
                break;
            }
        }
        sum.scale_pow2(2.0f64.powi(k as i32))
    }

    /// Natural logarithm for strictly positive values: an f64 seed refined by
    /// two Newton steps y ← y + x·e^{−y} − 1, each of which doubles the
    /// correct digits.
    pub fn ln(self) -> Self {
        assert!(self.hi > 0.0, "ln: argument must be positive");
        let mut y = Self::from_f64(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - Self::ONE;
        }
        y
    }

    /// Simultaneous sine and cosine. Arguments are reduced modulo pi/2, which
    /// keeps full pair precision for the moderate arguments used here.
    pub fn sin_cos(self) -> (Self, Self) {
        let k = (self.hi / FRAC_PI_2.hi).round();
        let y = self - FRAC_PI_2 * Self::from_f64(k);
        let quadrant = ((k as i64 % 4) + 4) % 4;

        // Taylor tails on |y| <= pi/4
        let y2 = y * y;
        let mut sin = y;
        let mut term = y;
        for i in 1..=20 {
            let d = f64::from(2 * i) * f64::from(2 * i + 1);
            term = -(term * y2) / Self::from_f64(d);
            sin = sin + term;
            if term.hi.abs() < 1.0e-40 {
                break;
            }
        }
        let mut cos = Self::ONE;
        term = Self::ONE;
        for i in 1..=20 {
            let d = f64::from(2 * i - 1) * f64::from(2 * i);
            term = -(term * y2) / Self::from_f64(d);
            cos = cos + term;
            if term.hi.abs() < 1.0e-40 {
                break;
            }
        }

        match quadrant {
            0 => (sin, cos),
            1 => (cos, -sin),
            2 => (-sin, -cos),
            _ => (-cos, sin),
        }
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self::from_f64(x)
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        // accurate variant: survives cancellation between the high words
        let (sh, sl) = two_sum(self.hi, rhs.hi);
        let (th, tl) = two_sum(self.lo, rhs.lo);
        let (s1, e1) = quick_two_sum(sh, sl + th);
        let (h, l) = quick_two_sum(s1, e1 + tl);
        Self { hi: h, lo: l }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (h, l) = quick_two_sum(p, e);
        Self { hi: h, lo: l }
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        // long division: three f64 quotient corrections
        let q1 = self.hi / rhs.hi;
        let mut r = self - rhs * Self::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        r = r - rhs * Self::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (h, l) = quick_two_sum(q1, q2);
        Self { hi: h, lo: l } + Self::from_f64(q3)
    }
}

/// Complex value with pair-arithmetic components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ComplexDd {
    pub re: DoubleDouble,
    pub im: DoubleDouble,
}

impl ComplexDd {
    pub const ZERO: Self = Self {
        re: DoubleDouble::ZERO,
        im: DoubleDouble::ZERO,
    };
    pub const ONE: Self = Self {
        re: DoubleDouble::ONE,
        im: DoubleDouble::ZERO,
    };

    #[inline]
    pub fn new(re: DoubleDouble, im: DoubleDouble) -> Self {
        Self { re, im }
    }

    #[inline]
    pub fn from_complex(z: num_complex::Complex64) -> Self {
        Self {
            re: DoubleDouble::from_f64(z.re),
            im: DoubleDouble::from_f64(z.im),
        }
    }

    #[inline]
    pub fn to_complex(self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// |z| evaluated in plain f64; plenty for tolerance decisions.
    pub fn magnitude(self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    /// e^z = e^re · (cos im + i sin im).
    pub fn exp(self) -> Self {
        let scale = self.re.exp();
        let (sin, cos) = self.im.sin_cos();
        Self {
            re: scale * cos,
            im: scale * sin,
        }
    }

    pub fn recip(self) -> Self {
        let den = self.re * self.re + self.im * self.im;
        Self {
            re: self.re / den,
            im: -self.im / den,
        }
    }

    /// z^k by binary powering; negative exponents go through the reciprocal.
    pub fn powi(self, k: i32) -> Self {
        if k < 0 {
            return self.powi(-k).recip();
        }
        let mut result = Self::ONE;
        let mut base = self;
        let mut e = k as u32;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base;
            }
            base = base * base;
            e >>= 1;
        }
        result
    }
}

impl Neg for ComplexDd {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Add for ComplexDd {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for ComplexDd {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for ComplexDd {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Div for ComplexDd {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}
