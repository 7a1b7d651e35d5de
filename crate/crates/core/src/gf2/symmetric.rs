use std::collections::BTreeSet;
use std::fmt;

use super::poly::{write_terms, Gf2Poly};
use super::Gf2RingError;

/// A symmetric polynomial written in the elementary basis: an element of
/// GF(2)[E1, E2, E3] with deg(E1, E2, E3) = (2, 4, 6).
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct SymPoly {
    terms: BTreeSet<[u16; 3]>,
}

impl SymPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0, 0, 0])
    }

    /// E_{i+1} for i in 0..3.
    pub fn elementary(i: usize) -> Self {
        assert!(i < 3);
        let mut e = [0u16; 3];
        e[i] = 1;
        Self::monomial(e)
    }

    pub fn monomial(exp: [u16; 3]) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(exp);
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = [u16; 3]>>(it: I) -> Self {
        let mut p = Self::zero();
        for m in it {
            p.toggle(m);
        }
        p
    }

    fn toggle(&mut self, m: [u16; 3]) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains(&[0, 0, 0])
    }

    pub fn terms(&self) -> impl Iterator<Item = &[u16; 3]> {
        self.terms.iter()
    }

    /// The GF(2) coefficient of the constant term.
    pub fn constant_term(&self) -> bool {
        self.terms.contains(&[0, 0, 0])
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for m in &other.terms {
            out.toggle(*m);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle([a[0] + b[0], a[1] + b[1], a[2] + b[2]]);
            }
        }
        out
    }

    fn term_degree(m: &[u16; 3]) -> u32 {
        2 * m[0] as u32 + 4 * m[1] as u32 + 6 * m[2] as u32
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(Self::term_degree).max()
    }

    /// Whether every monomial has the same weighted degree; returns it.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(Self::term_degree);
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Expand back into GF(2)[X1, X2, X3].
    pub fn expand(&self) -> Gf2Poly {
        let e: [Gf2Poly; 3] = [
            Gf2Poly::from_terms([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
            Gf2Poly::from_terms([[1, 1, 0], [1, 0, 1], [0, 1, 1]]),
            Gf2Poly::monomial([1, 1, 1]),
        ];
        let mut out = Gf2Poly::zero();
        for m in &self.terms {
            let mut t = Gf2Poly::one();
            for i in 0..3 {
                t = t.mul(&e[i].pow(m[i]));
            }
            out = out.add(&t);
        }
        out
    }

    /// Rewrite a symmetric polynomial in X-variables into the elementary
    /// basis. Classical leading-monomial reduction in lex order: the lex
    /// leading exponent (a, b, c) of a symmetric polynomial satisfies
    /// a >= b >= c, and subtracting the expansion of E1^(a-b) E2^(b-c) E3^c
    /// strictly lowers it.
    pub fn rewrite(p: &Gf2Poly) -> Result<Self, Gf2RingError> {
        if !p.is_symmetric() {
            return Err(Gf2RingError::NotSymmetric(p.to_string()));
        }
        let mut rem = p.clone();
        let mut out = Self::zero();
        while let Some(lead) = rem.leading_term() {
            debug_assert!(lead[0] >= lead[1] && lead[1] >= lead[2]);
            let e_mono = [lead[0] - lead[1], lead[1] - lead[2], lead[2]];
            out.toggle(e_mono);
            rem = rem.add(&Self::monomial(e_mono).expand());
        }
        Ok(out)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, &["E1", "E2", "E3"], |m| {
            m[0] as u32 + 2 * m[1] as u32 + 3 * m[2] as u32
        })
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
