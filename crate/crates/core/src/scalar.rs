use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar the whole library is generic over. Implemented for `f32` and `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Default + Debug + Display + Send + Sync + 'static
{
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal fits the scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

pub type C<T> = Complex<T>;

pub fn c<T: Real>(re: T, im: T) -> C<T> {
    Complex::new(re, im)
}

pub fn re<T: Real>(x: T) -> C<T> {
    Complex::new(x, T::zero())
}

pub fn one<T: Real>() -> C<T> {
    Complex::new(T::one(), T::zero())
}

pub fn zero<T: Real>() -> C<T> {
    Complex::new(T::zero(), T::zero())
}

/// `exp(i phi)`.
pub fn cis<T: Real>(phi: T) -> C<T> {
    Complex::new(phi.cos(), phi.sin())
}

pub fn to_c64<T: Real>(z: C<T>) -> Complex<f64> {
    Complex::new(z.re.as_f64(), z.im.as_f64())
}

pub fn from_c64<T: Real>(z: Complex<f64>) -> C<T> {
    Complex::new(T::lit(z.re), T::lit(z.im))
}
