use std::collections::BTreeSet;
use std::fmt;

/// A polynomial in GF(2)[X1, X2, X3].
///
/// Characteristic two means every coefficient is 0 or 1, so a polynomial is
/// just the set of its monomials. The zero polynomial is the empty set.
/// Each `X_i` sits in degree 2, so the degree of the monomial
/// `X1^a X2^b X3^c` is `2(a + b + c)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Gf2Poly {
    terms: BTreeSet<[u16; 3]>,
}

/// Factor indices for the three binomials: 0 ↔ X1+X2, 1 ↔ X1+X3, 2 ↔ X2+X3.
pub(crate) const PAIR_VARS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

impl Gf2Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0, 0, 0])
    }

    /// The variable X_{i+1} for i in 0..3.
    pub fn var(i: usize) -> Self {
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

    /// The binomial X_u + X_v for pair index k in 0..3 (see [`PAIR_VARS`]).
    pub fn pair_binomial(k: usize) -> Self {
        let (u, v) = PAIR_VARS[k];
        let mut p = Self::var(u);
        p.toggle({
            let mut e = [0u16; 3];
            e[v] = 1;
            e
        });
        p
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

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn toggle(&mut self, m: [u16; 3]) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Addition = symmetric difference of term sets (char 2).
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

    pub fn pow(&self, n: u16) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Degree with deg(X_i) = 2, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .map(|m| 2 * (m[0] as u32 + m[1] as u32 + m[2] as u32))
            .max()
    }

    /// Whether every monomial has the same degree; returns it.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self
            .terms
            .iter()
            .map(|m| 2 * (m[0] as u32 + m[1] as u32 + m[2] as u32));
        let first = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Apply a permutation of the variables: `X_i -> X_{perm[i]}`.
    pub fn permute_vars(&self, perm: [usize; 3]) -> Self {
        let mut out = Self::zero();
        for m in &self.terms {
            let mut e = [0u16; 3];
            for i in 0..3 {
                e[perm[i]] = m[i];
            }
            out.toggle(e);
        }
        out
    }

    /// Invariance under all six permutations of X1, X2, X3 (it suffices to
    /// check the two generating transpositions).
    pub fn is_symmetric(&self) -> bool {
        self.permute_vars([1, 0, 2]) == *self && self.permute_vars([0, 2, 1]) == *self
    }

    /// Leading term in pure lexicographic order with X1 > X2 > X3.
    pub fn leading_term(&self) -> Option<[u16; 3]> {
        self.terms.iter().next_back().copied()
    }

    /// Exact multivariate division: returns `q` with `self = q * d`, or
    /// None when `d` does not divide `self`. Greedy cancellation of the
    /// lex-leading term; for an exact division the remainder hits zero.
    pub fn divide_exact(&self, d: &Self) -> Option<Self> {
        let dl = d.leading_term()?;
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some(rl) = rem.leading_term() {
            if rl[0] < dl[0] || rl[1] < dl[1] || rl[2] < dl[2] {
                return None;
            }
            let t = [rl[0] - dl[0], rl[1] - dl[1], rl[2] - dl[2]];
            q.toggle(t);
            rem = rem.add(&Self::monomial(t).mul(d));
        }
        Some(q)
    }

    /// Remainder of substituting `X_u := X_v`, i.e. reduction mod `X_u + X_v`.
    /// The result is zero exactly when X_u + X_v divides self.
    pub fn divisible_by_pair(&self, k: usize) -> bool {
        let (u, v) = PAIR_VARS[k];
        let mut r = Self::zero();
        for m in &self.terms {
            let mut e = *m;
            e[v] += e[u];
            e[u] = 0;
            r.toggle(e);
        }
        r.is_zero()
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, &["X1", "X2", "X3"], |m| {
            m[0] as u32 + m[1] as u32 + m[2] as u32
        })
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical rendering: graded-lex descending (total degree first, then lex
/// with the first variable most significant), `*` between factors, `^` for
/// exponents, `1` for the constant term, `0` for the empty sum.
pub(crate) fn write_terms<F>(
    f: &mut fmt::Formatter<'_>,
    terms: &BTreeSet<[u16; 3]>,
    names: &[&str; 3],
    weight: F,
) -> fmt::Result
where
    F: Fn(&[u16; 3]) -> u32,
{
    if terms.is_empty() {
        return write!(f, "0");
    }
    let mut sorted: Vec<&[u16; 3]> = terms.iter().collect();
    sorted.sort_by(|a, b| (weight(b), b).cmp(&(weight(a), a)));
    for (n, m) in sorted.iter().enumerate() {
        if n > 0 {
            write!(f, " + ")?;
        }
        let mut wrote = false;
        for (i, &e) in m.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                write!(f, "*")?;
            }
            wrote = true;
            if e == 1 {
                write!(f, "{}", names[i])?;
            } else {
                write!(f, "{}^{}", names[i], e)?;
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
    }
    Ok(())
}
