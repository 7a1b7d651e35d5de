//! Closed conical-foam presentations and their exact evaluation.
//!
//! A foam is stored purely combinatorially: facets with Euler
//! characteristic and dot count, seam edges/circles with their three facet
//! germs, and singular points carrying a link web with a Kempe-class
//! adornment. Evaluation depends only on this data.

mod builders;
mod eval;

pub use builders::{
    builtin_foam, closed_surface, double_cone, double_cone_unchecked, square_counterexample,
    theta_foam, BUILTIN_FOAMS,
};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::{Gf2Fraction, SymPoly};
use crate::web::{Color, TaitColoring, Web};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FoamError {
    #[error("invalid foam presentation: {0}")]
    Invalid(String),
    #[error("unknown builtin foam '{0}'")]
    UnknownBuiltin(String),
    #[error("adorned class at singular point '{0}' is not homogeneous")]
    NotHomogeneous(String),
    #[error("coloring is not admissible: {0}")]
    NotAdmissible(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("evaluation integrity: {0}")]
    Integrity(String),
    #[error(transparent)]
    Web(#[from] crate::web::WebError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagnosticCode {
    DuplicateId,
    UnknownFacet,
    BadSeamEnds,
    UnknownSingularPoint,
    LinkHasNoColorings,
    InvalidAdornment,
    LinkFacetMapIncomplete,
    LinkGermMismatch,
    InhomogeneousAdornment,
}

/// One validation finding; `InhomogeneousAdornment` is the only
/// non-structural code (raw-mode evaluation tolerates it).
#[derive(Clone, Debug)]
pub struct Diagnostic {
    pub code: DiagnosticCode,
    pub message: String,
}

impl Diagnostic {
    pub fn is_structural(&self) -> bool {
        self.code != DiagnosticCode::InhomogeneousAdornment
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] {}", self.code, self.message)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Facet {
    pub id: String,
    pub chi: i64,
    #[serde(default)]
    pub dots: u32,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Seam {
    pub id: String,
    /// The three facets adjacent along the seam (repeats allowed; repeated
    /// germs simply admit no colorings).
    pub germs: [String; 3],
    #[serde(default)]
    pub circle: bool,
    /// Singular-point ids of the two endpoints; absent for seam circles.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ends: Option<[String; 2]>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SingularPoint {
    pub id: String,
    pub link: Web,
    #[serde(rename = "edgeToFacet")]
    pub edge_to_facet: BTreeMap<String, String>,
    pub adornment: TaitColoring,
}

/// A closed conical foam, presented combinatorially.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FoamPresentation {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub facets: Vec<Facet>,
    #[serde(default)]
    pub seams: Vec<Seam>,
    #[serde(default)]
    pub singular: Vec<SingularPoint>,
}

/// A facet coloring satisfying the seam and Kempe-class constraints.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AdmissibleColoring {
    assignment: BTreeMap<String, Color>,
}

impl AdmissibleColoring {
    pub fn new(assignment: BTreeMap<String, Color>) -> Self {
        AdmissibleColoring { assignment }
    }

    pub fn color(&self, facet: &str) -> Option<Color> {
        self.assignment.get(facet).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<String, Color> {
        &self.assignment
    }
}

/// Per-coloring term of an evaluation.
#[derive(Clone, Debug)]
pub struct PerColoring {
    pub coloring: AdmissibleColoring,
    pub fraction: Gf2Fraction,
    /// Euler characteristics of the bicolored surfaces for the pairs
    /// {1,2}, {1,3}, {2,3}.
    pub chi: [i64; 3],
}

/// The outcome of evaluating a closed foam.
#[derive(Clone, Debug)]
pub struct EvaluationReport {
    /// E-basis form; present in homogeneous mode.
    pub value: Option<SymPoly>,
    /// The reduced fraction before symmetrization (always present; equal
    /// to the expansion of `value` in homogeneous mode).
    pub raw: Gf2Fraction,
    /// d(F); present when every adorned class is homogeneous.
    pub degree: Option<i64>,
    /// Whether every adorned class is homogeneous.
    pub homogeneous: bool,
    pub per_coloring: Vec<PerColoring>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EvalMode {
    /// Assert polynomial + symmetric + homogeneous of degree d(F).
    Homogeneous,
    /// Return the reduced fraction with no assertions (supports the
    /// non-homogeneous counterexample).
    Raw,
}

impl FoamPresentation {
    pub fn from_json(s: &str) -> Result<Self, FoamError> {
        serde_json::from_str(s).map_err(|e| FoamError::Invalid(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("foam serialization cannot fail")
    }

    /// Euler characteristic of the seam graph: singular points are the CW
    /// vertices, seam edges the CW edges, circles contribute zero.
    pub fn chi_seam_graph(&self) -> i64 {
        let edges = self.seams.iter().filter(|s| !s.circle).count() as i64;
        self.singular.len() as i64 - edges
    }

    pub fn total_dots(&self) -> u32 {
        self.facets.iter().map(|f| f.dots).sum()
    }

    pub fn facet(&self, id: &str) -> Option<&Facet> {
        self.facets.iter().find(|f| f.id == id)
    }

    /// Check every presentation invariant; each violation is a distinct
    /// diagnostic. Structural soundness and homogeneity are reported
    /// separately so that raw-mode evaluation can accept inhomogeneous
    /// adornments.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let mut push = |code, message: String| out.push(Diagnostic { code, message });

        let mut facet_ids = BTreeSet::new();
        for f in &self.facets {
            if !facet_ids.insert(&f.id) {
                push(
                    DiagnosticCode::DuplicateId,
                    format!("duplicate facet id '{}'", f.id),
                );
            }
        }
        let mut seam_ids = BTreeSet::new();
        for s in &self.seams {
            if !seam_ids.insert(&s.id) {
                push(
                    DiagnosticCode::DuplicateId,
                    format!("duplicate seam id '{}'", s.id),
                );
            }
            for g in &s.germs {
                if !facet_ids.contains(g) {
                    push(
                        DiagnosticCode::UnknownFacet,
                        format!("seam '{}' germ '{g}' unknown", s.id),
                    );
                }
            }
            match (&s.ends, s.circle) {
                (None, true) => {}
                (Some(_), true) | (None, false) => push(
                    DiagnosticCode::BadSeamEnds,
                    format!(
                        "seam '{}' must have ends exactly when it is not a circle",
                        s.id
                    ),
                ),
                (Some(ends), false) => {
                    for p in ends {
                        if !self.singular.iter().any(|sp| sp.id == *p) {
                            push(
                                DiagnosticCode::UnknownSingularPoint,
                                format!("seam '{}' end '{p}' unknown", s.id),
                            );
                        }
                    }
                }
            }
        }
        let mut point_ids = BTreeSet::new();
        for p in &self.singular {
            if !point_ids.insert(&p.id) {
                push(
                    DiagnosticCode::DuplicateId,
                    format!("duplicate singular point id '{}'", p.id),
                );
            }
            let compiled = p.link.compiled();
            let link_colorings = compiled.enumerate();
            if link_colorings.is_empty() {
                push(
                    DiagnosticCode::LinkHasNoColorings,
                    format!("link of '{}' admits no Tait coloring", p.id),
                );
                continue;
            }
            let Ok(adorn) = link_coloring_vec(&p.link, &p.adornment) else {
                push(
                    DiagnosticCode::InvalidAdornment,
                    format!("adornment of '{}' is not a Tait coloring of its link", p.id),
                );
                continue;
            };
            for e in p.link.edges() {
                match p.edge_to_facet.get(&e.id) {
                    None => push(
                        DiagnosticCode::LinkFacetMapIncomplete,
                        format!("link edge '{}' of '{}' has no facet", e.id, p.id),
                    ),
                    Some(fid) if !facet_ids.contains(fid) => push(
                        DiagnosticCode::UnknownFacet,
                        format!(
                            "link edge '{}' of '{}' maps to unknown facet '{fid}'",
                            e.id, p.id
                        ),
                    ),
                    _ => {}
                }
            }
            // seam-end germs at the point match the link-vertex facet triples
            let mut end_multisets: Vec<Vec<&String>> = Vec::new();
            for s in &self.seams {
                if let Some(ends) = &s.ends {
                    for end in ends {
                        if *end == p.id {
                            let mut g: Vec<&String> = s.germs.iter().collect();
                            g.sort();
                            end_multisets.push(g);
                        }
                    }
                }
            }
            end_multisets.sort();
            let mut vertex_multisets: Vec<Vec<&String>> = Vec::new();
            for v in p.link.vertices() {
                let mut fs: Vec<&String> = p
                    .link
                    .ends_at(v)
                    .into_iter()
                    .filter_map(|(ei, _)| p.edge_to_facet.get(&p.link.edges()[ei].id))
                    .collect();
                fs.sort();
                vertex_multisets.push(fs);
            }
            vertex_multisets.sort();
            if end_multisets != vertex_multisets {
                push(
                    DiagnosticCode::LinkGermMismatch,
                    format!(
                        "seam germs at '{}' do not match the link-vertex facets ({} ends, {} link vertices)",
                        p.id,
                        end_multisets.len(),
                        vertex_multisets.len()
                    ),
                );
            }
            let class = compiled.kempe_class_of(&adorn);
            let degrees: BTreeSet<u32> = class.iter().map(|c| compiled.degree(c)).collect();
            if degrees.len() > 1 {
                push(
                    DiagnosticCode::InhomogeneousAdornment,
                    format!("adorned class at '{}' has degrees {:?}", p.id, degrees),
                );
            }
        }
        out
    }

    pub fn structural_diagnostics(&self) -> Vec<Diagnostic> {
        self.validate()
            .into_iter()
            .filter(|d| d.is_structural())
            .collect()
    }

    fn require_structure(&self) -> Result<(), FoamError> {
        let diags = self.structural_diagnostics();
        if diags.is_empty() {
            Ok(())
        } else {
            Err(FoamError::Invalid(
                diags
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
            ))
        }
    }

    /// All admissible colorings in deterministic lexicographic order over
    /// the sorted facet ids.
    pub fn enumerate_admissible_colorings(&self) -> Result<Vec<AdmissibleColoring>, FoamError> {
        self.require_structure()?;
        Ok(eval::Compiled::new(self)?.admissible())
    }

    /// χ of the bicolored surface F_ij(c): the seam-graph and facet terms
    /// plus the smoothing correction at every singular point.
    pub fn bicolored_euler(
        &self,
        c: &AdmissibleColoring,
        pair: crate::web::ColorPair,
    ) -> Result<i64, FoamError> {
        self.require_structure()?;
        let compiled = eval::Compiled::new(self)?;
        let v = compiled.coloring_vec(c)?;
        let k = crate::web::ColorPair::all()
            .iter()
            .position(|p| *p == pair)
            .expect("three pairs");
        let chi = compiled.chi_triple(&v)[k];
        if chi % 2 != 0 {
            return Err(FoamError::Inconsistency(format!(
                "odd Euler characteristic {chi} for pair {pair}"
            )));
        }
        Ok(chi)
    }

    /// d(F) = 2#dots − 3χ(s(F)) − 2Σχ(f) − Σ_p (d(κ(p)) − 3); requires
    /// every adorned class homogeneous.
    pub fn foam_degree(&self) -> Result<i64, FoamError> {
        self.require_structure()?;
        let compiled = eval::Compiled::new(self)?;
        compiled.degree()
    }

    pub fn evaluate(&self, mode: EvalMode) -> Result<EvaluationReport, FoamError> {
        self.require_structure()?;
        eval::evaluate(self, mode)
    }
}

/// Convert a coloring of a link web into index form, validating it.
pub(crate) fn link_coloring_vec(link: &Web, c: &TaitColoring) -> Result<Vec<u8>, FoamError> {
    let mut out = vec![0u8; link.edge_count()];
    for (i, e) in link.edges().iter().enumerate() {
        let col = c
            .color(&e.id)
            .ok_or_else(|| FoamError::Invalid(format!("adornment misses link edge '{}'", e.id)))?;
        out[i] = col.index() as u8;
    }
    if !link.compiled().is_valid(&out) {
        return Err(FoamError::Invalid(
            "adornment violates a vertex constraint".into(),
        ));
    }
    Ok(out)
}
