//! Exact scalar fields for rank computations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::Rng;

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
}

/// Modulus of [`Fp`]: `2^64 - 59`, the largest prime below `2^64`.
pub const PRIME: u64 = 18_446_744_073_709_551_557;

/// Element of the prime field `Z / PRIME`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub fn new(x: u64) -> Self {
        Fp(x % PRIME)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Uniform nonzero element.
    pub fn random_nonzero(rng: &mut impl Rng) -> Self {
        Fp(rng.gen_range(1..PRIME))
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        Fp(((self.0 as u128 + rhs.0 as u128) % PRIME as u128) as u64)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.0 == 0 {
            self
        } else {
            Fp(PRIME - self.0)
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp(((self.0 as u128 * rhs.0 as u128) % PRIME as u128) as u64)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(1)
    }
}

impl Field for Fp {
    fn inverse(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(PRIME - 2))
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + fmt::Debug + num_integer::Integer + Neg<Output = T>,
{
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}
