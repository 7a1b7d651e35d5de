use std::collections::BTreeMap;
use std::fmt;

/// A Laurent polynomial in q with nonnegative integer coefficients, the
/// carrier for graded ranks.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i64, u64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_degrees(&[0])
    }

    /// One summand q^d per listed degree.
    pub fn from_degrees(degrees: &[i64]) -> Self {
        let mut coeffs = BTreeMap::new();
        for &d in degrees {
            *coeffs.entry(d).or_insert(0) += 1;
        }
        Self { coeffs }
    }

    /// The quantum integer `[n] = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
    pub fn quantum(n: u32) -> Self {
        let n = n as i64;
        let mut coeffs = BTreeMap::new();
        let mut d = 1 - n;
        while d < n {
            coeffs.insert(d, 1);
            d += 2;
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, degree: i64) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = (&i64, &u64)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (&d, &c) in &other.coeffs {
            *coeffs.entry(d).or_insert(0) += c;
        }
        Self { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs = BTreeMap::new();
        for (&a, &ca) in &self.coeffs {
            for (&b, &cb) in &other.coeffs {
                *coeffs.entry(a + b).or_insert(0) += ca * cb;
            }
        }
        Self { coeffs }
    }

    pub fn scale(&self, k: u64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&d, &c)| (d, c * k)).collect(),
        }
    }

    pub fn shifted(&self, s: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&d, &c)| (d + s, c)).collect(),
        }
    }

    /// Center so min degree + max degree = 0; returns the shifted value and
    /// the shift applied. When min+max is odd no integer shift can center
    /// the support and the value is returned unshifted.
    pub fn centered(&self) -> (Self, i64) {
        let (Some((&min, _)), Some((&max, _))) =
            (self.coeffs.first_key_value(), self.coeffs.last_key_value())
        else {
            return (self.clone(), 0);
        };
        if (min + max) % 2 != 0 {
            return (self.clone(), 0);
        }
        let s = -(min + max) / 2;
        (self.shifted(s), s)
    }

    pub fn total(&self) -> u64 {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (&d, &c)) in self.coeffs.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            match (c, d) {
                (1, 0) => write!(f, "1")?,
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (c, 1) => write!(f, "{c}*q")?,
                (1, d) => write!(f, "q^{d}")?,
                (c, d) => write!(f, "{c}*q^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
