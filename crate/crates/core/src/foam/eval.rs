//! Admissible-coloring enumeration and closed-foam evaluation.

use std::collections::{BTreeMap, BTreeSet};

use crate::gf2::{Gf2Fraction, Gf2Poly, SymPoly};
use crate::web::{Color, ColorPair, CompiledWeb};

use super::{
    link_coloring_vec, AdmissibleColoring, EvalMode, EvaluationReport, FoamError, FoamPresentation,
    PerColoring,
};

pub(super) struct CompiledPoint {
    pub link: CompiledWeb,
    /// link edge index -> facet index
    pub edge_facet: Vec<usize>,
    pub class: BTreeSet<Vec<u8>>,
    pub class_degrees: BTreeSet<u32>,
}

pub(super) struct Compiled<'a> {
    foam: &'a FoamPresentation,
    pub facet_ids: Vec<String>,
    pub facet_chi: Vec<i64>,
    pub facet_dots: Vec<u32>,
    pub seam_germs: Vec<[usize; 3]>,
    pub seams_by_facet: Vec<Vec<usize>>,
    pub chi_s: i64,
    pub points: Vec<CompiledPoint>,
}

impl<'a> Compiled<'a> {
    pub fn new(foam: &'a FoamPresentation) -> Result<Self, FoamError> {
        let mut facet_ids: Vec<String> = foam.facets.iter().map(|f| f.id.clone()).collect();
        facet_ids.sort();
        let index: BTreeMap<&str, usize> = facet_ids
            .iter()
            .enumerate()
            .map(|(i, id)| (id.as_str(), i))
            .collect();
        let mut facet_chi = vec![0i64; facet_ids.len()];
        let mut facet_dots = vec![0u32; facet_ids.len()];
        for f in &foam.facets {
            facet_chi[index[f.id.as_str()]] = f.chi;
            facet_dots[index[f.id.as_str()]] = f.dots;
        }
        let seam_germs: Vec<[usize; 3]> = foam
            .seams
            .iter()
            .map(|s| {
                [
                    index[s.germs[0].as_str()],
                    index[s.germs[1].as_str()],
                    index[s.germs[2].as_str()],
                ]
            })
            .collect();
        let mut seams_by_facet = vec![Vec::new(); facet_ids.len()];
        for (si, germs) in seam_germs.iter().enumerate() {
            for &g in germs {
                if !seams_by_facet[g].contains(&si) {
                    seams_by_facet[g].push(si);
                }
            }
        }
        let mut points = Vec::new();
        for p in &foam.singular {
            let link = p.link.compiled();
            let adorn = link_coloring_vec(&p.link, &p.adornment)?;
            let edge_facet: Vec<usize> = p
                .link
                .edges()
                .iter()
                .map(|e| index[p.edge_to_facet[&e.id].as_str()])
                .collect();
            let class = link.kempe_class_of(&adorn);
            let class_degrees = class.iter().map(|c| link.degree(c)).collect();
            points.push(CompiledPoint {
                link,
                edge_facet,
                class,
                class_degrees,
            });
        }
        Ok(Compiled {
            foam,
            facet_ids,
            facet_chi,
            facet_dots,
            seam_germs,
            seams_by_facet,
            chi_s: foam.chi_seam_graph(),
            points,
        })
    }

    pub fn coloring_vec(&self, c: &AdmissibleColoring) -> Result<Vec<u8>, FoamError> {
        let mut out = vec![0u8; self.facet_ids.len()];
        for (i, id) in self.facet_ids.iter().enumerate() {
            let col = c
                .color(id)
                .ok_or_else(|| FoamError::NotAdmissible(format!("facet '{id}' uncolored")))?;
            out[i] = col.index() as u8;
        }
        if !self.seam_constraints_hold(&out) {
            return Err(FoamError::NotAdmissible("seam germs not tricolored".into()));
        }
        if !self.class_constraints_hold(&out) {
            return Err(FoamError::NotAdmissible(
                "an induced link coloring leaves its adorned Kempe class".into(),
            ));
        }
        Ok(out)
    }

    fn seam_constraints_hold(&self, coloring: &[u8]) -> bool {
        self.seam_germs.iter().all(|g| {
            let mask = g.iter().fold(0u8, |m, &f| m | 1 << coloring[f]);
            mask == 0b111
        })
    }

    fn class_constraints_hold(&self, coloring: &[u8]) -> bool {
        self.points.iter().all(|p| {
            let induced: Vec<u8> = p.edge_facet.iter().map(|&f| coloring[f]).collect();
            p.class.contains(&induced)
        })
    }

    /// Backtracking over facets in id order with seam constraint
    /// propagation; Kempe-class membership filters complete assignments.
    pub fn admissible(&self) -> Vec<AdmissibleColoring> {
        let n = self.facet_ids.len();
        let mut assign = vec![3u8; n]; // 3 = unassigned
        let mut out = Vec::new();
        self.backtrack(0, &mut assign, &mut out);
        out.into_iter()
            .map(|v| {
                AdmissibleColoring::new(
                    self.facet_ids
                        .iter()
                        .zip(&v)
                        .map(|(id, &c)| (id.clone(), Color::from_index(c as usize)))
                        .collect(),
                )
            })
            .collect()
    }

    fn backtrack(&self, f: usize, assign: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if f == assign.len() {
            if self.class_constraints_hold(assign) {
                out.push(assign.clone());
            }
            return;
        }
        'colors: for c in 0..3u8 {
            for &si in &self.seams_by_facet[f] {
                for &g in &self.seam_germs[si] {
                    if g != f && assign[g] != 3 && assign[g] == c {
                        continue 'colors;
                    }
                    // repeated germ: the same facet cannot carry two colors
                    if g == f && self.seam_germs[si].iter().filter(|&&x| x == f).count() > 1 {
                        continue 'colors;
                    }
                }
            }
            assign[f] = c;
            self.backtrack(f + 1, assign, out);
            assign[f] = 3;
        }
    }

    /// χ(F_ij(c)) for the three pairs.
    pub fn chi_triple(&self, coloring: &[u8]) -> [i64; 3] {
        let mut out = [0i64; 3];
        for (k, pair) in ColorPair::all().iter().enumerate() {
            let (i, j) = pair.indices();
            let mut chi = self.chi_s;
            for (f, &c) in coloring.iter().enumerate() {
                if c as usize == i || c as usize == j {
                    chi += self.facet_chi[f];
                }
            }
            for p in &self.points {
                let induced: Vec<u8> = p.edge_facet.iter().map(|&f| coloring[f]).collect();
                chi += p.link.components(&induced, *pair).len() as i64 - 1;
            }
            out[k] = chi;
        }
        out
    }

    pub fn all_classes_homogeneous(&self) -> bool {
        self.points.iter().all(|p| p.class_degrees.len() <= 1)
    }

    /// d(F); requires homogeneous adorned classes.
    pub fn degree(&self) -> Result<i64, FoamError> {
        let mut class_term = 0i64;
        for (p, meta) in self.points.iter().zip(&self.foam.singular) {
            if p.class_degrees.len() > 1 {
                return Err(FoamError::NotHomogeneous(meta.id.clone()));
            }
            let d = *p.class_degrees.iter().next().expect("nonempty class") as i64;
            class_term += d - 3;
        }
        let dots = self.foam.total_dots() as i64;
        let chi_f: i64 = self.facet_chi.iter().sum();
        Ok(2 * dots - 3 * self.chi_s - 2 * chi_f - class_term)
    }
}

pub(super) fn evaluate(
    foam: &FoamPresentation,
    mode: EvalMode,
) -> Result<EvaluationReport, FoamError> {
    let compiled = Compiled::new(foam)?;
    let homogeneous = compiled.all_classes_homogeneous();
    if mode == EvalMode::Homogeneous && !homogeneous {
        let bad = foam
            .singular
            .iter()
            .zip(&compiled.points)
            .find(|(_, p)| p.class_degrees.len() > 1)
            .map(|(m, _)| m.id.clone())
            .unwrap_or_default();
        return Err(FoamError::NotHomogeneous(bad));
    }
    let degree = if homogeneous {
        Some(compiled.degree().expect("classes homogeneous"))
    } else {
        None
    };
    let mut per_coloring = Vec::new();
    let mut total = Gf2Fraction::zero();
    for coloring in compiled.admissible() {
        let v = compiled
            .coloring_vec(&coloring)
            .expect("enumerated colorings are admissible");
        let chi = compiled.chi_triple(&v);
        let mut exps = [0i32; 3];
        for k in 0..3 {
            if chi[k] % 2 != 0 {
                return Err(FoamError::Inconsistency(format!(
                    "odd Euler characteristic {} for pair {}",
                    chi[k],
                    ColorPair::all()[k]
                )));
            }
            exps[k] = (chi[k] / 2) as i32;
        }
        let mut dot_mono = [0u16; 3];
        for (f, &c) in v.iter().enumerate() {
            dot_mono[c as usize] += compiled.facet_dots[f] as u16;
        }
        let fraction = Gf2Fraction::from_signed(Gf2Poly::monomial(dot_mono), exps);
        total = total.add(&fraction);
        per_coloring.push(PerColoring {
            coloring,
            fraction,
            chi,
        });
    }
    let value = match mode {
        EvalMode::Raw => None,
        EvalMode::Homogeneous => {
            if !total.is_polynomial() {
                return Err(FoamError::Integrity(format!(
                    "evaluation is not a polynomial: {total}"
                )));
            }
            let sym = SymPoly::rewrite(total.numerator())
                .map_err(|e| FoamError::Integrity(format!("evaluation is not symmetric: {e}")))?;
            let d = degree.expect("homogeneous mode");
            if !sym.is_zero() {
                if d < 0 {
                    return Err(FoamError::Integrity(format!(
                        "nonzero evaluation {sym} in negative degree {d}"
                    )));
                }
                if sym.homogeneous_degree() != Some(d as u32) {
                    return Err(FoamError::Integrity(format!(
                        "evaluation {sym} is not homogeneous of degree {d}"
                    )));
                }
            }
            Some(sym)
        }
    };
    Ok(EvaluationReport {
        value,
        raw: total,
        degree,
        homogeneous,
        per_coloring,
    })
}
