use super::base_change::BaseChange;
use super::epoly::EPoly;
use super::laurent::Laurent;
use super::poly::Gf2Poly;
use super::Gf2RingError;

/// A matrix over `GF(2)[E]` with a degree contract: entry `(r, c)`, when
/// nonzero, is homogeneous of graded degree `rowDegrees[r] + colDegrees[c]`.
/// Since deg(E) = 6, a homogeneous element is a single monomial E^k, so
/// the contract forces every nonzero entry to be a monomial with
/// 6k = rowDeg + colDeg. GF(2)-valued matrices are the degree-zero case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    nrows: usize,
    ncols: usize,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
    entries: Vec<EPoly>,
}

impl GradedMatrix {
    pub fn new(
        row_degrees: Vec<i64>,
        col_degrees: Vec<i64>,
        rows: Vec<Vec<EPoly>>,
    ) -> Result<Self, Gf2RingError> {
        let nrows = row_degrees.len();
        let ncols = col_degrees.len();
        if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
            return Err(Gf2RingError::InvalidMatrix(format!(
                "expected {nrows} x {ncols} entries"
            )));
        }
        let mut entries = Vec::with_capacity(nrows * ncols);
        for (r, row) in rows.into_iter().enumerate() {
            for (c, e) in row.into_iter().enumerate() {
                if !e.is_zero() {
                    let d = row_degrees[r] + col_degrees[c];
                    match e.as_monomial() {
                        Some(k) if 6 * k as i64 == d => {}
                        _ => {
                            return Err(Gf2RingError::InvalidMatrix(format!(
                                "entry ({r}, {c}) = {e} is not homogeneous of degree {d}"
                            )))
                        }
                    }
                }
                entries.push(e);
            }
        }
        Ok(Self {
            nrows,
            ncols,
            row_degrees,
            col_degrees,
            entries,
        })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn entry(&self, r: usize, c: usize) -> &EPoly {
        &self.entries[r * self.ncols + c]
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn rows(&self) -> Vec<Vec<EPoly>> {
        (0..self.nrows)
            .map(|r| (0..self.ncols).map(|c| self.entry(r, c).clone()).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && (0..self.nrows).all(|r| {
                (0..self.ncols).all(|c| {
                    if r == c {
                        self.entry(r, c).is_one()
                    } else {
                        self.entry(r, c).is_zero()
                    }
                })
            })
    }
}

/// Rank and graded-rank data for a graded matrix under a base change.
#[derive(Clone, Debug)]
pub struct GradedRankReport {
    pub rank: usize,
    pub invariant_factors: Vec<EPoly>,
    pub unimodular: bool,
    pub pivot_columns: Vec<usize>,
    pub graded_rank_raw: Laurent,
    pub graded_rank_centered: Laurent,
    pub shift: i64,
}

/// Minimal ring interface for the shared elimination routines.
pub(crate) trait EntryRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn divide_exact(&self, o: &Self) -> Option<Self>;
}

impl EntryRing for EPoly {
    fn zero() -> Self {
        EPoly::zero()
    }
    fn one() -> Self {
        EPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn divide_exact(&self, o: &Self) -> Option<Self> {
        let (q, r) = self.divrem(o);
        r.is_zero().then_some(q)
    }
}

impl EntryRing for Gf2Poly {
    fn zero() -> Self {
        Gf2Poly::zero()
    }
    fn one() -> Self {
        Gf2Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn divide_exact(&self, o: &Self) -> Option<Self> {
        self.divide_exact(o)
    }
}

/// Fraction-free (Bareiss, characteristic two) elimination over an
/// integral domain. Pivot columns are chosen greedily left to right, so
/// the returned set is the lexicographically first independent one.
/// Returns (rank over the fraction field, pivot columns, last pivot).
pub(crate) fn bareiss<T: EntryRing>(rows: &[Vec<T>]) -> (usize, Vec<usize>, T) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut prev = T::one();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for c in 0..ncols {
        let Some(pr) = (r0..nrows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(r0, pr);
        for r in r0 + 1..nrows {
            for cc in c + 1..ncols {
                let t = m[r0][c].mul(&m[r][cc]).add(&m[r][c].mul(&m[r0][cc]));
                m[r][cc] = t
                    .divide_exact(&prev)
                    .expect("Bareiss division is exact by the Sylvester identity");
            }
            m[r][c] = T::zero();
        }
        prev = m[r0][c].clone();
        pivots.push(c);
        r0 += 1;
        if r0 == nrows {
            break;
        }
    }
    (r0, pivots, prev)
}

/// Rank over the fraction field of `GF(2)[X1,X2,X3]` (hence over Frac(R)
/// for matrices of symmetric polynomials expanded into X-variables).
pub fn rank_over_fraction_field(rows: &[Vec<Gf2Poly>]) -> usize {
    bareiss(rows).0
}

/// Rank, greedy pivot columns and final pivot (the determinant for a
/// square full-rank input) over the fraction field of `GF(2)[X1,X2,X3]`.
pub fn rank_pivots_det(rows: &[Vec<Gf2Poly>]) -> (usize, Vec<usize>, Gf2Poly) {
    bareiss(rows)
}

/// Exact determinant of a square matrix over `GF(2)[E]`.
pub fn det_epoly(rows: &[Vec<EPoly>]) -> EPoly {
    let n = rows.len();
    assert!(
        rows.iter().all(|r| r.len() == n),
        "determinant of non-square matrix"
    );
    if n == 0 {
        return EPoly::one();
    }
    let (rank, _, last) = bareiss(rows);
    if rank < n {
        EPoly::zero()
    } else {
        last
    }
}

/// Rank of a GF(2) matrix by XOR elimination.
pub fn gf2_rank(rows: &[Vec<bool>]) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m = rows.to_vec();
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pr) = (rank..nrows).find(|&r| m[r][c]) else {
            continue;
        };
        m.swap(rank, pr);
        for r in 0..nrows {
            if r != rank && m[r][c] {
                for cc in 0..ncols {
                    m[r][cc] ^= m[rank][cc];
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Smith normal form over the Euclidean domain `GF(2)[E]`.
///
/// Returns the nonzero invariant factors `d_1 | d_2 | ...` (units are the
/// constant 1). Deterministic: pivots are chosen of minimal degree with
/// smallest (row, col) as tie break.
pub fn smith_normal_form(rows: &[Vec<EPoly>]) -> Vec<EPoly> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut m = rows.to_vec();
    let mut factors = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // minimal-degree nonzero pivot in the trailing submatrix
        let mut best: Option<(u32, usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if let Some(d) = m[i][j].degree() {
                    if best.map_or(true, |(bd, _, _)| d < bd) {
                        best = Some((d, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        'reduce: loop {
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let (q, r) = m[i][t].divrem(&m[t][t]);
                for j in t..ncols {
                    let s = q.mul(&m[t][j]);
                    m[i][j] = m[i][j].add(&s);
                }
                debug_assert_eq!(m[i][t], r);
                if !r.is_zero() {
                    m.swap(t, i);
                    continue 'reduce;
                }
            }
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let (q, r) = m[t][j].divrem(&m[t][t]);
                for i in t..nrows {
                    let s = q.mul(&m[i][t]);
                    m[i][j] = m[i][j].add(&s);
                }
                debug_assert_eq!(m[t][j], r);
                if !r.is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    continue 'reduce;
                }
            }
            // pivot divides the rest of the submatrix, or pull in a bad row
            let mut bad = None;
            'scan: for i in t + 1..nrows {
                for j in t + 1..ncols {
                    if !m[t][t].divides(&m[i][j]) {
                        bad = Some(i);
                        break 'scan;
                    }
                }
            }
            match bad {
                Some(i) => {
                    for j in t..ncols {
                        let s = m[i][j].clone();
                        m[t][j] = m[t][j].add(&s);
                    }
                    continue 'reduce;
                }
                None => break 'reduce,
            }
        }
        factors.push(m[t][t].clone());
        t += 1;
    }
    factors
}

/// Rank, invariant factors, pivot columns and graded rank of a graded
/// matrix, over `GF(2)[E]` (Smith normal form) or over GF(2) after
/// specializing E to 0 when the base change has target GF(2).
pub fn graded_rank(m: &GradedMatrix, phi: &BaseChange) -> GradedRankReport {
    let rows = m.rows();
    let (rank, pivots, factors) = if phi.target_is_gf2() {
        let bits: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| r.iter().map(|e| e.eval_gf2(false)).collect())
            .collect();
        let (rank, pivots, _) = bareiss(
            &bits
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|&b| if b { EPoly::one() } else { EPoly::zero() })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        );
        (rank, pivots, vec![EPoly::one(); rank])
    } else {
        let (rank, pivots, _) = bareiss(&rows);
        let factors = smith_normal_form(&rows);
        debug_assert_eq!(factors.len(), rank);
        (rank, pivots, factors)
    };
    let unimodular = m.nrows == m.ncols && rank == m.nrows && factors.iter().all(|f| f.is_unit());
    let degrees: Vec<i64> = pivots.iter().map(|&c| m.col_degrees[c]).collect();
    let raw = Laurent::from_degrees(&degrees);
    let (centered, shift) = raw.centered();
    GradedRankReport {
        rank,
        invariant_factors: factors,
        unimodular,
        pivot_columns: pivots,
        graded_rank_raw: raw,
        graded_rank_centered: centered,
        shift,
    }
}

/// Maximal generator set whose principal Gram submatrix is invertible over
/// the target ring (unit determinant), grown greedily in column order.
/// Generators outside the set are accounted for by the non-unit invariant
/// factors of the full form.
pub fn quotient_by_kernel(m: &GradedMatrix, phi: &BaseChange) -> Vec<usize> {
    assert_eq!(m.nrows, m.ncols, "Gram matrix must be square");
    let over_gf2 = phi.target_is_gf2();
    let mut chosen: Vec<usize> = Vec::new();
    for c in 0..m.ncols {
        let mut trial = chosen.clone();
        trial.push(c);
        let sub: Vec<Vec<EPoly>> = trial
            .iter()
            .map(|&r| trial.iter().map(|&cc| m.entry(r, cc).clone()).collect())
            .collect();
        let det = det_epoly(&sub);
        let unit = if over_gf2 {
            det.eval_gf2(false)
        } else {
            det.is_unit()
        };
        if unit {
            chosen = trial;
        }
    }
    chosen
}
