use std::fmt;

/// An exact rational with a power-of-two denominator.
///
/// Every ratio in this crate has denominator 2^n or 2^2n (counts over the
/// input space, scaled spectra), so a dyadic fraction covers all of them
/// without rounding. The value is kept unreduced: `num` is the raw count
/// and `den` the raw scale, which keeps reports audit-friendly.
#[derive(Debug, Clone, Copy)]
pub struct Fraction {
    pub num: i64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: i64, den: u64) -> Self {
        assert!(den.is_power_of_two(), "denominator must be a power of two");
        Fraction { num, den }
    }

    /// Equivalent fraction in lowest terms.
    pub fn reduced(self) -> Self {
        if self.num == 0 {
            return Fraction { num: 0, den: 1 };
        }
        let g = gcd(self.num.unsigned_abs(), self.den);
        Fraction {
            num: self.num / g as i64,
            den: self.den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Exact strict comparison against a float.
    ///
    /// `den` is a power of two, so `rhs * den` only shifts the exponent and
    /// the comparison below is performed without any rounding as long as
    /// `|num| < 2^53`, which holds for every count this crate produces.
    pub fn lt_f64(self, rhs: f64) -> bool {
        debug_assert!(self.num.unsigned_abs() < (1 << 53));
        (self.num as f64) < rhs * self.den as f64
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_one(self) -> bool {
        self.num >= 0 && self.num as u64 == self.den
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        // Cross-multiplication; dens are <= 2^48 so i128 never overflows.
        self.num as i128 * other.den as i128 == other.num as i128 * self.den as i128
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
