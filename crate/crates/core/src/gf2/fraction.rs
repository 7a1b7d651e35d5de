use std::fmt;

use super::poly::Gf2Poly;

/// An element of the localization `GF(2)[X1,X2,X3][(Xi+Xj)^-1]`.
///
/// Denominators are restricted by construction to products of the three
/// binomials (X1+X2), (X1+X3), (X2+X3); `den[k]` is the exponent of the
/// k-th factor. Values are kept fully reduced: the numerator is not
/// divisible by any factor carrying a positive exponent.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Gf2Fraction {
    num: Gf2Poly,
    den: [u16; 3],
}

impl Gf2Fraction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(Gf2Poly::one(), [0, 0, 0])
    }

    /// Build and reduce. Reduction divides out each binomial while the
    /// numerator is divisible; the factors are pairwise non-associate
    /// primes of a UFD, so the result does not depend on the order.
    pub fn new(num: Gf2Poly, den: [u16; 3]) -> Self {
        let mut num = num;
        let mut den = den;
        if num.is_zero() {
            return Self::zero();
        }
        for k in 0..3 {
            while den[k] > 0 && num.divisible_by_pair(k) {
                num = num
                    .divide_exact(&Gf2Poly::pair_binomial(k))
                    .expect("divisibility was just checked");
                den[k] -= 1;
            }
        }
        Self { num, den }
    }

    /// Build from signed binomial exponents: a negative exponent means the
    /// corresponding power multiplies the numerator.
    pub fn from_signed(num: Gf2Poly, exps: [i32; 3]) -> Self {
        let mut n = num;
        let mut den = [0u16; 3];
        for k in 0..3 {
            if exps[k] >= 0 {
                den[k] = exps[k] as u16;
            } else {
                n = n.mul(&Gf2Poly::pair_binomial(k).pow((-exps[k]) as u16));
            }
        }
        Self::new(n, den)
    }

    pub fn numerator(&self) -> &Gf2Poly {
        &self.num
    }

    pub fn denominator_exponents(&self) -> [u16; 3] {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the reduced denominator is trivial.
    pub fn is_polynomial(&self) -> bool {
        self.den == [0, 0, 0]
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = [
            self.den[0].max(other.den[0]),
            self.den[1].max(other.den[1]),
            self.den[2].max(other.den[2]),
        ];
        let mut num = Gf2Poly::zero();
        for part in [self, other] {
            let mut t = part.num.clone();
            for k in 0..3 {
                t = t.mul(&Gf2Poly::pair_binomial(k).pow(den[k] - part.den[k]));
            }
            num = num.add(&t);
        }
        Self::new(num, den)
    }

    /// Common-denominator sum of a family, fully reduced.
    pub fn sum<'a, I: IntoIterator<Item = &'a Self>>(fracs: I) -> Self {
        fracs.into_iter().fold(Self::zero(), |acc, f| acc.add(f))
    }
}

impl fmt::Display for Gf2Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ", self.num)?;
        let names = ["(X1+X2)", "(X1+X3)", "(X2+X3)"];
        let mut first = true;
        for k in 0..3 {
            if self.den[k] == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if self.den[k] == 1 {
                write!(f, "{}", names[k])?;
            } else {
                write!(f, "{}^{}", names[k], self.den[k])?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
