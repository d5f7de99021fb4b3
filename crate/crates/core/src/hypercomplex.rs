//! The commutative ring of hyperbolic complex numbers `x + iy + jv + ijw`
//! with `i² = -1`, `j² = +1` and `(ij)² = -1`.
//!
//! Every element splits along the idempotents `P± = (1 ± j)/2` into a pair
//! of ordinary complex numbers, `z = P₊ z₊ + P₋ z₋`. Products, inverses and
//! exponentials act componentwise on that pair, which is how `exp` and
//! `invert` are computed here. Zero divisors are exactly the elements with a
//! vanishing split component, e.g. `1 ± j`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative guard band below which a split component counts as zero.
pub const ZERO_DIVISOR_TOL: f64 = 1e-12;

/// Hyperbolic complex number with coefficients on the basis `(1, i, j, ij)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawHNumber")]
pub struct HNumber {
    pub x: f64,
    pub y: f64,
    pub v: f64,
    pub w: f64,
}

#[derive(Deserialize)]
struct RawHNumber {
    x: f64,
    y: f64,
    v: f64,
    w: f64,
}

impl TryFrom<RawHNumber> for HNumber {
    type Error = Error;

    fn try_from(raw: RawHNumber) -> Result<Self> {
        HNumber::new(raw.x, raw.y, raw.v, raw.w)
    }
}

/// Components of an [`HNumber`] along the idempotents `P₊` and `P₋`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SplitPair {
    pub plus: Complex64,
    pub minus: Complex64,
}

impl SplitPair {
    pub fn new(plus: Complex64, minus: Complex64) -> Self {
        Self { plus, minus }
    }

    pub fn join(self) -> HNumber {
        HNumber::join(self)
    }
}

impl Mul for SplitPair {
    type Output = SplitPair;

    fn mul(self, rhs: SplitPair) -> SplitPair {
        SplitPair::new(self.plus * rhs.plus, self.minus * rhs.minus)
    }
}

impl HNumber {
    pub const ZERO: HNumber = HNumber::raw(0.0, 0.0, 0.0, 0.0);
    pub const ONE: HNumber = HNumber::raw(1.0, 0.0, 0.0, 0.0);
    pub const I: HNumber = HNumber::raw(0.0, 1.0, 0.0, 0.0);
    pub const J: HNumber = HNumber::raw(0.0, 0.0, 1.0, 0.0);
    pub const IJ: HNumber = HNumber::raw(0.0, 0.0, 0.0, 1.0);
    /// Idempotent `(1 + j)/2`.
    pub const P_PLUS: HNumber = HNumber::raw(0.5, 0.0, 0.5, 0.0);
    /// Idempotent `(1 - j)/2`.
    pub const P_MINUS: HNumber = HNumber::raw(0.5, 0.0, -0.5, 0.0);

    /// Checked constructor; rejects NaN and infinities.
    pub fn new(x: f64, y: f64, v: f64, w: f64) -> Result<Self> {
        if [x, y, v, w].iter().all(|c| c.is_finite()) {
            Ok(Self::raw(x, y, v, w))
        } else {
            Err(Error::NonFinite("HNumber"))
        }
    }

    pub(crate) const fn raw(x: f64, y: f64, v: f64, w: f64) -> Self {
        Self { x, y, v, w }
    }

    pub const fn real(x: f64) -> Self {
        Self::raw(x, 0.0, 0.0, 0.0)
    }

    /// Embeds an ordinary complex number `re + i·im`.
    pub fn complex(c: Complex64) -> Self {
        Self::raw(c.re, c.im, 0.0, 0.0)
    }

    /// `a + j b` for complex `a`, `b`.
    pub fn from_complex_parts(a: Complex64, b: Complex64) -> Self {
        Self::raw(a.re, a.im, b.re, b.im)
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.x, self.y, self.v, self.w]
    }

    pub fn from_array(c: [f64; 4]) -> Self {
        Self::raw(c[0], c[1], c[2], c[3])
    }

    pub fn is_finite(self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// Flips the sign of both `i` and `j` (the scalar part of conjugation).
    pub fn conj_full(self) -> Self {
        Self::raw(self.x, -self.y, -self.v, self.w)
    }

    /// Flips the sign of `i` only (the scalar part of reversion).
    pub fn conj_i(self) -> Self {
        Self::raw(self.x, -self.y, self.v, -self.w)
    }

    /// Flips the sign of `j` only.
    pub fn conj_j(self) -> Self {
        Self::raw(self.x, self.y, -self.v, -self.w)
    }

    pub fn split(self) -> SplitPair {
        SplitPair {
            plus: Complex64::new(self.x + self.v, self.y + self.w),
            minus: Complex64::new(self.x - self.v, self.y - self.w),
        }
    }

    pub fn join(pair: SplitPair) -> Self {
        let SplitPair { plus, minus } = pair;
        Self::raw(
            0.5 * (plus.re + minus.re),
            0.5 * (plus.im + minus.im),
            0.5 * (plus.re - minus.re),
            0.5 * (plus.im - minus.im),
        )
    }

    pub fn exp(self) -> Self {
        let s = self.split();
        Self::join(SplitPair::new(s.plus.exp(), s.minus.exp()))
    }

    /// Euclidean norm of the four real components. Used for tolerances only;
    /// it is not multiplicative on this ring.
    pub fn norm(self) -> f64 {
        let [x, y, v, w] = self.to_array();
        (x * x + y * y + v * v + w * w).sqrt()
    }

    pub fn norm_sqr(self) -> f64 {
        let [x, y, v, w] = self.to_array();
        x * x + y * y + v * v + w * w
    }

    /// Zero-divisor test: a split component below `ZERO_DIVISOR_TOL·(1 + |z|)`.
    pub fn is_invertible(self) -> bool {
        let s = self.split();
        let guard = ZERO_DIVISOR_TOL * (1.0 + self.norm());
        s.plus.norm() >= guard && s.minus.norm() >= guard
    }

    pub fn invert(self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let s = self.split();
        Ok(Self::join(SplitPair::new(s.plus.inv(), s.minus.inv())))
    }

    pub fn scale(self, k: f64) -> Self {
        Self::raw(k * self.x, k * self.y, k * self.v, k * self.w)
    }

    /// `|self - other| <= tol·max(1, |self|, |other|)`.
    pub fn approx_eq(self, other: HNumber, tol: f64) -> bool {
        let scale = 1f64.max(self.norm()).max(other.norm());
        (self - other).norm() <= tol * scale
    }
}

impl From<f64> for HNumber {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl From<Complex64> for HNumber {
    fn from(c: Complex64) -> Self {
        Self::complex(c)
    }
}

impl Add for HNumber {
    type Output = HNumber;

    fn add(self, o: HNumber) -> HNumber {
        HNumber::raw(self.x + o.x, self.y + o.y, self.v + o.v, self.w + o.w)
    }
}

impl Sub for HNumber {
    type Output = HNumber;

    fn sub(self, o: HNumber) -> HNumber {
        HNumber::raw(self.x - o.x, self.y - o.y, self.v - o.v, self.w - o.w)
    }
}

impl Neg for HNumber {
    type Output = HNumber;

    fn neg(self) -> HNumber {
        HNumber::raw(-self.x, -self.y, -self.v, -self.w)
    }
}

impl Mul for HNumber {
    type Output = HNumber;

    // (A + jB)(C + jD) = (AC + BD) + j(AD + BC), with A, B, C, D complex in i.
    fn mul(self, o: HNumber) -> HNumber {
        let (a, b) = (Complex64::new(self.x, self.y), Complex64::new(self.v, self.w));
        let (c, d) = (Complex64::new(o.x, o.y), Complex64::new(o.v, o.w));
        HNumber::from_complex_parts(a * c + b * d, a * d + b * c)
    }
}

impl Mul<f64> for HNumber {
    type Output = HNumber;

    fn mul(self, k: f64) -> HNumber {
        self.scale(k)
    }
}

impl Mul<HNumber> for f64 {
    type Output = HNumber;

    fn mul(self, z: HNumber) -> HNumber {
        z.scale(self)
    }
}

impl Div<f64> for HNumber {
    type Output = HNumber;

    fn div(self, k: f64) -> HNumber {
        self.scale(1.0 / k)
    }
}

impl AddAssign for HNumber {
    fn add_assign(&mut self, o: HNumber) {
        *self = *self + o;
    }
}

impl SubAssign for HNumber {
    fn sub_assign(&mut self, o: HNumber) {
        *self = *self - o;
    }
}

impl MulAssign for HNumber {
    fn mul_assign(&mut self, o: HNumber) {
        *self = *self * o;
    }
}

impl std::iter::Sum for HNumber {
    fn sum<I: Iterator<Item = HNumber>>(iter: I) -> HNumber {
        iter.fold(HNumber::ZERO, |acc, z| acc + z)
    }
}

impl fmt::Display for HNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}i {:+}j {:+}ij", self.x, self.y, self.v, self.w)
    }
}
