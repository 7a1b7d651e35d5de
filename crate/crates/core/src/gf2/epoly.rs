use std::collections::BTreeSet;
use std::fmt;

/// A univariate polynomial over GF(2) in the degree-6 variable E.
/// Stored as its set of exponents (characteristic two).
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct EPoly {
    exps: BTreeSet<u32>,
}

impl EPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn var() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(exp: u32) -> Self {
        let mut exps = BTreeSet::new();
        exps.insert(exp);
        Self { exps }
    }

    pub fn from_exponents<I: IntoIterator<Item = u32>>(it: I) -> Self {
        let mut p = Self::zero();
        for e in it {
            p.toggle(e);
        }
        p
    }

    fn toggle(&mut self, e: u32) {
        if !self.exps.remove(&e) {
            self.exps.insert(e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.exps.len() == 1 && self.exps.contains(&0)
    }

    /// Units of `GF(2)[E]` are exactly the nonzero constants, i.e. 1.
    pub fn is_unit(&self) -> bool {
        self.is_one()
    }

    /// Degree in E, or None for zero. The graded degree is 6 times this.
    pub fn degree(&self) -> Option<u32> {
        self.exps.iter().next_back().copied()
    }

    /// A monomial E^k, if the polynomial has exactly one term.
    pub fn as_monomial(&self) -> Option<u32> {
        if self.exps.len() == 1 {
            self.exps.iter().next().copied()
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for e in &other.exps {
            out.toggle(*e);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in &self.exps {
            for b in &other.exps {
                out.toggle(a + b);
            }
        }
        out
    }

    pub fn shift(&self, k: u32) -> Self {
        Self::from_exponents(self.exps.iter().map(|e| e + k))
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    /// Panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let k = rd - dd;
            q.toggle(k);
            r = r.add(&d.shift(k));
        }
        (q, r)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    /// Evaluate at E = 0 or E = 1 (the two GF(2)-points).
    pub fn eval_gf2(&self, e: bool) -> bool {
        if e {
            self.exps.len() % 2 == 1
        } else {
            self.exps.contains(&0)
        }
    }
}

impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "0");
        }
        for (n, e) in self.exps.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "E")?,
                _ => write!(f, "E^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_reconstructs() {
        let a = EPoly::from_exponents([5, 3, 1, 0]);
        let d = EPoly::from_exponents([2, 0]);
        let (q, r) = a.divrem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn gcd_of_multiples() {
        let g = EPoly::from_exponents([1, 0]);
        let a = g.mul(&EPoly::from_exponents([3]));
        let b = g.mul(&EPoly::from_exponents([2, 0]));
        assert_eq!(a.gcd(&b), g);
    }

    #[test]
    fn gf2_evaluations() {
        let p = EPoly::from_exponents([2, 1]);
        assert!(!p.eval_gf2(false));
        assert!(!p.eval_gf2(true)); // E^2 + E has two terms
        let q = EPoly::from_exponents([2, 0]);
        assert!(q.eval_gf2(false));
        assert!(!q.eval_gf2(true));
    }

    #[test]
    fn display_descending() {
        assert_eq!(EPoly::from_exponents([0, 1, 3]).to_string(), "E^3 + E + 1");
    }
}
