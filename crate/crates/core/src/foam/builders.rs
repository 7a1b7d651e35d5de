//! Constructors for the closed foams used throughout: theta foams, closed
//! surfaces, double cones over a web, and the square-web counterexample.

use std::collections::BTreeMap;

use crate::web::{builtin_web, TaitColoring, Web};

use super::{Facet, FoamError, FoamPresentation, Seam, SingularPoint};

/// Θ(k, ℓ, m): three disk facets sharing one seam circle, with k, ℓ, m
/// dots on the left, right and middle facet.
pub fn theta_foam(k: u32, l: u32, m: u32) -> FoamPresentation {
    FoamPresentation {
        name: Some(format!("theta({k},{l},{m})")),
        facets: vec![
            Facet {
                id: "left".into(),
                chi: 1,
                dots: k,
            },
            Facet {
                id: "right".into(),
                chi: 1,
                dots: l,
            },
            Facet {
                id: "middle".into(),
                chi: 1,
                dots: m,
            },
        ],
        seams: vec![Seam {
            id: "s0".into(),
            germs: ["left".into(), "right".into(), "middle".into()],
            circle: true,
            ends: None,
        }],
        singular: vec![],
    }
}

/// A closed orientable surface of the given genus with dots: one facet,
/// no seams.
pub fn closed_surface(genus: u32, dots: u32) -> FoamPresentation {
    FoamPresentation {
        name: Some(format!("surface(genus={genus},dots={dots})")),
        facets: vec![Facet {
            id: "f0".into(),
            chi: 2 - 2 * genus as i64,
            dots,
        }],
        seams: vec![],
        singular: vec![],
    }
}

/// Two cones over `web` glued along it. Facets are the edges of the web
/// (free circles suspend to dot-carrying spheres with no seam), seam edges
/// are the suspension arcs through the vertices, and the two apexes are
/// singular points with link the circle-free part of the web, adorned by
/// the Kempe classes of the given colorings.
///
/// Errors when either adorned class is not homogeneous; the unchecked
/// variant skips that requirement (used by the non-homogeneous
/// counterexample and the raw evaluation path).
pub fn double_cone(
    web: &Web,
    top: &TaitColoring,
    bottom: &TaitColoring,
    dots: &BTreeMap<String, u32>,
) -> Result<FoamPresentation, FoamError> {
    let foam = double_cone_unchecked(web, top, bottom, dots)?;
    for p in &foam.singular {
        let link = p.link.compiled();
        let adorn = super::link_coloring_vec(&p.link, &p.adornment)?;
        let class = link.kempe_class_of(&adorn);
        let mut degrees = class.iter().map(|c| link.degree(c));
        let first = degrees.next().expect("class contains the adornment");
        if degrees.any(|d| d != first) {
            return Err(FoamError::NotHomogeneous(p.id.clone()));
        }
    }
    Ok(foam)
}

pub fn double_cone_unchecked(
    web: &Web,
    top: &TaitColoring,
    bottom: &TaitColoring,
    dots: &BTreeMap<String, u32>,
) -> Result<FoamPresentation, FoamError> {
    for id in dots.keys() {
        if web.edge(id).is_none() {
            return Err(FoamError::Invalid(format!(
                "dot map references unknown edge '{id}'"
            )));
        }
    }
    let facets: Vec<Facet> = web
        .edges()
        .iter()
        .map(|e| Facet {
            id: e.id.clone(),
            chi: if e.is_circle() { 2 } else { 1 },
            dots: dots.get(&e.id).copied().unwrap_or(0),
        })
        .collect();
    let core_edges: Vec<crate::web::Edge> = web
        .edges()
        .iter()
        .filter(|e| !e.is_circle())
        .cloned()
        .collect();
    let mut seams = Vec::new();
    let mut singular = Vec::new();
    if !web.vertices().is_empty() {
        let core = Web::new(None, web.vertices().to_vec(), core_edges).map_err(FoamError::Web)?;
        for v in web.vertices() {
            let germs: Vec<String> = web
                .ends_at(v)
                .into_iter()
                .map(|(ei, _)| web.edges()[ei].id.clone())
                .collect();
            seams.push(Seam {
                id: format!("s.{v}"),
                germs: [germs[0].clone(), germs[1].clone(), germs[2].clone()],
                circle: false,
                ends: Some(["p0".into(), "p1".into()]),
            });
        }
        let core_edge_ids: Vec<&str> = core.edges().iter().map(|e| e.id.as_str()).collect();
        let identity: BTreeMap<String, String> = core_edge_ids
            .iter()
            .map(|id| (id.to_string(), id.to_string()))
            .collect();
        for (pid, adornment) in [("p0", top), ("p1", bottom)] {
            singular.push(SingularPoint {
                id: pid.into(),
                link: core.clone(),
                edge_to_facet: identity.clone(),
                adornment: adornment.restricted_to(core_edge_ids.iter().copied()),
            });
        }
    }
    Ok(FoamPresentation {
        name: web.name().map(|n| format!("double-cone({n})")),
        facets,
        seams,
        singular,
    })
}

/// The non-homogeneous counterexample: a double cone over the cube web
/// (the web whose planar drawing is a square inside a square; its single
/// Kempe class is not homogeneous) with two dots on one facet and one dot
/// on an adjacent facet. Raw-mode evaluation yields a genuinely
/// non-polynomial, non-homogeneous rational function.
pub fn square_counterexample() -> FoamPresentation {
    let cube = builtin_web("cube").expect("builtin");
    let coloring = cube
        .tait_colorings()
        .into_iter()
        .next()
        .expect("cube is colorable");
    let dots: BTreeMap<String, u32> = [("e00".to_string(), 2), ("e01".to_string(), 1)].into();
    let mut foam = double_cone_unchecked(&cube, &coloring, &coloring, &dots)
        .expect("cube double cone is well formed");
    foam.name = Some("square-counterexample".into());
    foam
}

pub const BUILTIN_FOAMS: [&str; 10] = [
    "sphere",
    "sphere-2dots",
    "torus",
    "genus2",
    "theta-000",
    "theta-012",
    "double-cone-theta",
    "double-cone-k4",
    "double-cone-dodecahedron",
    "square-foam",
];

/// Foam presentations shipped with the CLI; every foam named in the
/// acceptance checks is available here.
pub fn builtin_foam(name: &str) -> Result<FoamPresentation, FoamError> {
    let dc = |web_name: &str| -> Result<FoamPresentation, FoamError> {
        let web = builtin_web(web_name)?;
        let c = web
            .tait_colorings()
            .into_iter()
            .next()
            .ok_or_else(|| FoamError::Invalid(format!("'{web_name}' has no colorings")))?;
        double_cone(&web, &c, &c, &BTreeMap::new())
    };
    match name {
        "sphere" => Ok(closed_surface(0, 0)),
        "sphere-2dots" => Ok(closed_surface(0, 2)),
        "torus" => Ok(closed_surface(1, 0)),
        "genus2" => Ok(closed_surface(2, 0)),
        "theta-000" => Ok(theta_foam(0, 0, 0)),
        "theta-012" => Ok(theta_foam(0, 1, 2)),
        "double-cone-theta" => dc("theta"),
        "double-cone-k4" => dc("k4"),
        "double-cone-dodecahedron" => dc("dodecahedron"),
        "square-foam" => Ok(square_counterexample()),
        other => Err(FoamError::UnknownBuiltin(other.to_string())),
    }
}
