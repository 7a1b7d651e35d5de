//! Universal-construction state spaces from finite cup/cap generator
//! families.
//!
//! For a Kempe-small web the family has one dotted cup per (Kempe class,
//! dot vector) pair; caps are mirror cups carrying the dual dot vectors.
//! Pairing entries are closed double-cone evaluations mapped through a
//! base change, and ranks come from the graded linear algebra in [`crate::gf2`].

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::foam::{double_cone, EvalMode, FoamError};
use crate::gf2::{
    graded_rank, BaseChange, EPoly, Gf2Poly, Gf2RingError, GradedMatrix, Laurent, SymPoly,
};
use crate::web::{TaitColoring, Web, WebError};

#[derive(Debug, Error)]
pub enum StateSpaceError {
    #[error("web is not Kempe-small; the generator-family recipe does not apply")]
    Unsupported,
    #[error("web has no vertices to anchor the dotted cup family")]
    NoVertex,
    #[error("the three edges at the chosen vertex are not distinct")]
    DegenerateVertex,
    #[error(transparent)]
    Web(#[from] WebError),
    #[error(transparent)]
    Foam(#[from] FoamError),
    #[error("pairing matrix violates its degree contract: {0}")]
    Degree(#[from] Gf2RingError),
}

/// The x-dot vectors on the edges (e1, e2, e3) at the chosen vertex.
pub const X_DOT_VECTORS: [[u32; 3]; 6] = [
    [2, 1, 0],
    [2, 0, 0],
    [1, 1, 0],
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 0],
];

/// The dual y-dot vectors, as formal sums handled by linearity of closed
/// evaluation: y3 and y4 have two summands each.
pub fn y_dot_vectors() -> [Vec<[u32; 3]>; 6] {
    [
        vec![[0, 0, 0]],
        vec![[0, 0, 1]],
        vec![[0, 1, 0], [0, 0, 1]],
        vec![[0, 1, 1], [0, 0, 2]],
        vec![[0, 1, 1]],
        vec![[0, 1, 2]],
    ]
}

fn dot_total(v: &[u32; 3]) -> u32 {
    v.iter().sum()
}

/// One dotted cup generator: the cone over the web adorned with the class
/// representative, with an x-dot vector at the chosen vertex.
#[derive(Clone, Debug)]
pub struct Cup {
    pub class_index: usize,
    pub dot_index: usize,
    pub dots: [u32; 3],
    pub degree_raw: i64,
}

/// The finite generator family of a Kempe-small web (or of the empty web,
/// whose single generator is the empty foam).
#[derive(Clone, Debug)]
pub struct GeneratorFamily {
    pub web: Web,
    /// None exactly for the empty web.
    pub vertex: Option<String>,
    /// The three edges at the vertex, in canonical end order.
    pub edges: Vec<String>,
    /// One representative per Kempe class, sorted canonically.
    pub class_reps: Vec<TaitColoring>,
    pub cups: Vec<Cup>,
}

impl GeneratorFamily {
    pub fn size(&self) -> usize {
        self.cups.len()
    }

    /// Centered cup degree: 2 #dots - 3 for every supported family.
    fn centered_cup_degree(dots: u32) -> i64 {
        2 * dots as i64 - 3
    }
}

/// Build the family: one cup per (Kempe class, x-dot vector).
/// `vertex = None` picks the lexicographically first vertex.
pub fn build_generator_family(
    web: &Web,
    vertex: Option<&str>,
) -> Result<GeneratorFamily, StateSpaceError> {
    if web.vertex_count() == 0 && web.edge_count() == 0 {
        return Ok(GeneratorFamily {
            web: web.clone(),
            vertex: None,
            edges: Vec::new(),
            class_reps: vec![TaitColoring::new(BTreeMap::new())],
            cups: vec![Cup {
                class_index: 0,
                dot_index: 5,
                dots: [0, 0, 0],
                degree_raw: 0,
            }],
        });
    }
    if !web.is_kempe_small() {
        return Err(StateSpaceError::Unsupported);
    }
    let v = match vertex {
        Some(v) => {
            if !web.vertices().contains(&v.to_string()) {
                return Err(StateSpaceError::Web(WebError::UnknownVertex(v.to_string())));
            }
            v.to_string()
        }
        None => web
            .vertices()
            .first()
            .cloned()
            .ok_or(StateSpaceError::NoVertex)?,
    };
    let edge_ids: Vec<String> = web
        .ends_at(&v)
        .into_iter()
        .map(|(ei, _)| web.edges()[ei].id.clone())
        .collect();
    if edge_ids[0] == edge_ids[1] || edge_ids[1] == edge_ids[2] || edge_ids[0] == edge_ids[2] {
        return Err(StateSpaceError::DegenerateVertex);
    }
    let partition = web.kempe_partition();
    let kempe_degree = partition
        .kempe_degree
        .expect("a vertexful Kempe-small web is homogeneous") as i64;
    let class_reps: Vec<TaitColoring> = partition
        .classes
        .iter()
        .map(|class| class[0].clone())
        .collect();
    let edge_count = web.edge_count() as i64;
    let mut cups = Vec::new();
    for class_index in 0..class_reps.len() {
        for (dot_index, dots) in X_DOT_VECTORS.iter().enumerate() {
            // open-cone degree: dots, seam arc tree, triangle facets, class defect
            let degree_raw = 2 * dot_total(dots) as i64 - 3 - 2 * edge_count - (kempe_degree - 3);
            cups.push(Cup {
                class_index,
                dot_index,
                dots: *dots,
                degree_raw,
            });
        }
    }
    Ok(GeneratorFamily {
        web: web.clone(),
        vertex: Some(v),
        edges: edge_ids,
        class_reps,
        cups,
    })
}

/// The Gram matrix of the cap/cup pairing. Rows are caps (mirror cups
/// with y-dots), columns are cups (x-dots); the entry is the closed
/// double-cone evaluation, held over R and optionally specialized.
#[derive(Clone, Debug)]
pub struct PairingMatrix {
    pub base_change: BaseChange,
    pub n: usize,
    /// Row-major entries over R (before base change).
    pub entries_r: Vec<SymPoly>,
    /// Centered cap degrees (rows) and cup degrees (columns).
    pub row_degrees: Vec<i64>,
    pub col_degrees: Vec<i64>,
    /// The specialized graded matrix; None under the identity base change.
    pub graded: Option<GradedMatrix>,
}

impl PairingMatrix {
    pub fn entry_r(&self, r: usize, c: usize) -> &SymPoly {
        &self.entries_r[r * self.n + c]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|r| {
            (0..self.n).all(|c| {
                let e = self.entry_r(r, c);
                if r == c {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    /// Reuse the computed R-entries under another base change.
    pub fn specialize(&self, phi: &BaseChange) -> Result<PairingMatrix, StateSpaceError> {
        let graded = build_graded(
            phi,
            self.n,
            &self.entries_r,
            &self.row_degrees,
            &self.col_degrees,
        )?;
        Ok(PairingMatrix {
            base_change: phi.clone(),
            n: self.n,
            entries_r: self.entries_r.clone(),
            row_degrees: self.row_degrees.clone(),
            col_degrees: self.col_degrees.clone(),
            graded,
        })
    }
}

fn build_graded(
    phi: &BaseChange,
    n: usize,
    entries_r: &[SymPoly],
    row_degrees: &[i64],
    col_degrees: &[i64],
) -> Result<Option<GradedMatrix>, StateSpaceError> {
    if matches!(phi, BaseChange::Identity) {
        return Ok(None);
    }
    let rows: Vec<Vec<EPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| phi.apply_to_epoly(&entries_r[r * n + c]))
                .collect()
        })
        .collect();
    Ok(Some(GradedMatrix::new(
        row_degrees.to_vec(),
        col_degrees.to_vec(),
        rows,
    )?))
}

/// Entry for cap (j, i) against cup (j', i'): the closed composite
/// evaluation, expanded by linearity over the y-dot summands.
fn pairing_entry(fam: &GeneratorFamily, cap: &Cup, cup: &Cup) -> Result<SymPoly, StateSpaceError> {
    if fam.vertex.is_none() {
        // empty web: the only composite is the empty foam
        let foam = double_cone(
            &fam.web,
            &fam.class_reps[0],
            &fam.class_reps[0],
            &BTreeMap::new(),
        )?;
        let report = foam.evaluate(EvalMode::Homogeneous)?;
        return Ok(report
            .value
            .expect("homogeneous mode returns the E-basis value"));
    }
    let y_parts = &y_dot_vectors()[cap.dot_index];
    let mut total = SymPoly::zero();
    for part in y_parts {
        let mut dots: BTreeMap<String, u32> = BTreeMap::new();
        for k in 0..3 {
            let d = cup.dots[k] + part[k];
            if d > 0 {
                dots.insert(fam.edges[k].clone(), d);
            }
        }
        let foam = double_cone(
            &fam.web,
            &fam.class_reps[cap.class_index],
            &fam.class_reps[cup.class_index],
            &dots,
        )?;
        let report = foam.evaluate(EvalMode::Homogeneous)?;
        total = total.add(
            &report
                .value
                .expect("homogeneous mode returns the E-basis value"),
        );
    }
    Ok(total)
}

/// Assemble the pairing matrix under a base change. Entries are computed
/// in parallel and gathered in deterministic row-major order.
pub fn pairing_matrix(
    fam: &GeneratorFamily,
    phi: &BaseChange,
) -> Result<PairingMatrix, StateSpaceError> {
    let n = fam.size();
    let indices: Vec<(usize, usize)> = (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).collect();
    let entries_r: Vec<SymPoly> = indices
        .par_iter()
        .map(|&(r, c)| pairing_entry(fam, &fam.cups[r], &fam.cups[c]))
        .collect::<Result<_, _>>()?;
    let row_degrees: Vec<i64> = fam
        .cups
        .iter()
        .map(|cup| {
            // cap dual to cup i carries 3 - n_i dots
            let cap_dots = 3 - dot_total(&cup.dots) as i64;
            2 * cap_dots - 3
        })
        .collect();
    let col_degrees: Vec<i64> = fam
        .cups
        .iter()
        .map(|cup| GeneratorFamily::centered_cup_degree(dot_total(&cup.dots)))
        .collect();
    let graded = build_graded(phi, n, &entries_r, &row_degrees, &col_degrees)?;
    Ok(PairingMatrix {
        base_change: phi.clone(),
        n,
        entries_r,
        row_degrees,
        col_degrees,
        graded,
    })
}

/// Rank, graded rank and basis data of the state space spanned by the
/// generator family, under a base change.
#[derive(Clone, Debug)]
pub struct StateSpaceReport {
    pub web_name: Option<String>,
    pub phi: String,
    pub rank: usize,
    pub graded_rank_raw: Laurent,
    pub graded_rank_centered: Laurent,
    pub degree_shift: i64,
    /// Pivot cup indices forming the reported basis.
    pub basis: Vec<usize>,
    /// Invariant factors over `GF(2)[E]` / GF(2); None when the pairing was
    /// computed over R itself and is not scalar.
    pub invariant_factors: Option<Vec<EPoly>>,
    pub pairing_is_identity: bool,
}

impl StateSpaceReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "web": self.web_name,
            "phi": self.phi,
            "rank": self.rank,
            "gradedRankRaw": self.graded_rank_raw.to_string(),
            "gradedRankCentered": self.graded_rank_centered.to_string(),
            "degreeShift": self.degree_shift,
            "basis": self.basis,
            "pairingIsIdentity": self.pairing_is_identity,
            "invariantFactors": self
                .invariant_factors
                .as_ref()
                .map(|fs| fs.iter().map(|f| f.to_string()).collect::<Vec<_>>()),
        })
    }
}

pub fn state_space(
    fam: &GeneratorFamily,
    phi: &BaseChange,
) -> Result<StateSpaceReport, StateSpaceError> {
    let pm = pairing_matrix(fam, phi)?;
    state_space_from_pairing(fam, &pm)
}

/// Build the report from an already-computed pairing matrix (the entries
/// over R are reused across base changes).
pub fn state_space_from_pairing(
    fam: &GeneratorFamily,
    pm: &PairingMatrix,
) -> Result<StateSpaceReport, StateSpaceError> {
    let (rank, pivots, factors) = match &pm.graded {
        Some(g) => {
            let report = graded_rank(g, &pm.base_change);
            (
                report.rank,
                report.pivot_columns,
                Some(report.invariant_factors),
            )
        }
        None => {
            let rows: Vec<Vec<Gf2Poly>> = (0..pm.n)
                .map(|r| (0..pm.n).map(|c| pm.entry_r(r, c).expand()).collect())
                .collect();
            let (rank, pivots, _) = crate::gf2::rank_pivots_det(&rows);
            // invariant factors are only defined over a PID; report them
            // in the scalar case where the matrix already lives over GF(2)
            let scalar = pm.entries_r.iter().all(|e| e.is_zero() || e.is_one());
            let factors = scalar.then(|| vec![EPoly::one(); rank]);
            (rank, pivots, factors)
        }
    };
    let raw_degrees: Vec<i64> = pivots.iter().map(|&c| fam.cups[c].degree_raw).collect();
    let graded_rank_raw = Laurent::from_degrees(&raw_degrees);
    let (graded_rank_centered, degree_shift) = graded_rank_raw.centered();
    Ok(StateSpaceReport {
        web_name: fam.web.name().map(|s| s.to_string()),
        phi: pm.base_change.label().to_string(),
        rank,
        graded_rank_raw,
        graded_rank_centered,
        degree_shift,
        basis: pivots,
        invariant_factors: factors,
        pairing_is_identity: pm.is_identity(),
    })
}

/// The scalar shadow of the idempotent decomposition: the pairing matrix
/// must be idempotent (P² = P) and, by the orthogonality computation,
/// the identity. Every deviation from the identity is reported.
#[derive(Clone, Debug)]
pub struct IdempotentReport {
    pub entries_checked: usize,
    pub pairing_is_identity: bool,
    pub idempotent: bool,
    pub mismatches: Vec<(usize, usize, String)>,
}

impl IdempotentReport {
    pub fn passed(&self) -> bool {
        self.pairing_is_identity && self.idempotent
    }
}

pub fn verify_idempotent_identity(
    fam: &GeneratorFamily,
) -> Result<IdempotentReport, StateSpaceError> {
    let pm = pairing_matrix(fam, &BaseChange::Identity)?;
    let n = pm.n;
    let mut mismatches = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let e = pm.entry_r(r, c);
            let expected = r == c;
            if (expected && !e.is_one()) || (!expected && !e.is_zero()) {
                mismatches.push((r, c, e.to_string()));
            }
        }
    }
    // P·P = P over R
    let mut idempotent = true;
    'outer: for r in 0..n {
        for c in 0..n {
            let mut acc = SymPoly::zero();
            for k in 0..n {
                acc = acc.add(&pm.entry_r(r, k).mul(pm.entry_r(k, c)));
            }
            if acc != *pm.entry_r(r, c) {
                idempotent = false;
                break 'outer;
            }
        }
    }
    Ok(IdempotentReport {
        entries_checked: n * n,
        pairing_is_identity: mismatches.is_empty(),
        idempotent,
        mismatches,
    })
}

/// Compare ranks before and after a base change: a unimodular Gram matrix
/// never drops rank, otherwise the drop is reported.
#[derive(Clone, Debug)]
pub struct BaseChangeReport {
    pub rank_source: usize,
    pub rank_target: usize,
    pub rank_drop: usize,
    /// Determinant over R is a unit (only meaningful for square Gram
    /// matrices of full rank).
    pub source_unimodular: bool,
    pub surjection_is_isomorphism: bool,
}

pub fn base_change_comparison(
    fam: &GeneratorFamily,
    psi: &BaseChange,
) -> Result<BaseChangeReport, StateSpaceError> {
    let pm = pairing_matrix(fam, &BaseChange::Identity)?;
    let rows: Vec<Vec<Gf2Poly>> = (0..pm.n)
        .map(|r| (0..pm.n).map(|c| pm.entry_r(r, c).expand()).collect())
        .collect();
    let (rank_source, _, last_pivot) = crate::gf2::rank_pivots_det(&rows);
    let source_unimodular = rank_source == pm.n && last_pivot.is_one();
    let specialized = pm.specialize(psi)?;
    let target = state_space_from_pairing(fam, &specialized)?;
    let rank_target = target.rank;
    Ok(BaseChangeReport {
        rank_source,
        rank_target,
        rank_drop: rank_source.saturating_sub(rank_target),
        source_unimodular,
        surjection_is_isomorphism: rank_source == rank_target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::web::builtin_web;

    #[test]
    fn theta_family_has_six_cups_with_raw_degrees() {
        let web = builtin_web("theta").unwrap();
        let fam = build_generator_family(&web, None).unwrap();
        assert_eq!(fam.size(), 6);
        let degrees: Vec<i64> = fam.cups.iter().map(|c| c.degree_raw).collect();
        assert_eq!(degrees, vec![-3, -5, -5, -7, -7, -9]);
    }

    #[test]
    fn k4_family_pairing_is_identity() {
        let web = builtin_web("k4").unwrap();
        let fam = build_generator_family(&web, None).unwrap();
        assert_eq!(fam.size(), 6);
        let pm = pairing_matrix(&fam, &BaseChange::Identity).unwrap();
        assert!(pm.is_identity());
        let report = state_space_from_pairing(&fam, &pm).unwrap();
        assert_eq!(report.rank, 6);
        // raw degrees 2#dots - 15 center to [2][3] with shift +12
        assert_eq!(
            report.graded_rank_centered,
            Laurent::quantum(2).mul(&Laurent::quantum(3))
        );
        assert_eq!(report.degree_shift, 12);
    }

    #[test]
    fn cube_family_is_unsupported() {
        let web = builtin_web("cube").unwrap();
        assert!(matches!(
            build_generator_family(&web, None),
            Err(StateSpaceError::Unsupported)
        ));
    }

    #[test]
    fn empty_web_state_space_has_rank_one() {
        let fam = build_generator_family(&Web::empty(), None).unwrap();
        assert_eq!(fam.size(), 1);
        let report = state_space(&fam, &BaseChange::Identity).unwrap();
        assert_eq!(report.rank, 1);
        assert_eq!(report.graded_rank_centered, Laurent::one());
        assert!(report.pairing_is_identity);
    }

    #[test]
    fn theta_state_space_under_all_base_changes() {
        let web = builtin_web("theta").unwrap();
        let fam = build_generator_family(&web, None).unwrap();
        let pm = pairing_matrix(&fam, &BaseChange::Identity).unwrap();
        let expected = Laurent::quantum(2).mul(&Laurent::quantum(3));
        for phi in [BaseChange::Identity, BaseChange::PhiE, BaseChange::Phi0] {
            let report = state_space_from_pairing(&fam, &pm.specialize(&phi).unwrap()).unwrap();
            assert!(report.pairing_is_identity, "{phi}");
            assert_eq!(report.rank, 6);
            assert_eq!(report.graded_rank_centered, expected);
            assert_eq!(report.degree_shift, 6);
        }
    }

    #[test]
    fn theta_idempotent_verification_36_cases() {
        let web = builtin_web("theta").unwrap();
        let fam = build_generator_family(&web, None).unwrap();
        let report = verify_idempotent_identity(&fam).unwrap();
        assert_eq!(report.entries_checked, 36);
        assert!(report.passed());
    }

    #[test]
    fn dodecahedron_idempotent_verification_3600_cases() {
        let web = builtin_web("dodecahedron").unwrap();
        let fam = build_generator_family(&web, None).unwrap();
        let report = verify_idempotent_identity(&fam).unwrap();
        assert_eq!(report.entries_checked, 3600);
        assert!(report.passed());
        assert!(report.mismatches.is_empty());
    }

    #[test]
    fn theta_base_change_comparison_has_no_drop() {
        let web = builtin_web("theta").unwrap();
        let fam = build_generator_family(&web, None).unwrap();
        let report = base_change_comparison(&fam, &BaseChange::Phi0).unwrap();
        assert_eq!(report.rank_source, 6);
        assert_eq!(report.rank_target, 6);
        assert!(report.source_unimodular);
        assert!(report.surjection_is_isomorphism);
    }
}
