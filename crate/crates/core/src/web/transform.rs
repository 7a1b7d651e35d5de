//! Web transformations: vertex blow-up, digon collapse, vertex-connected
//! sums. Each carries its canonical coloring map.

use std::collections::BTreeMap;

use super::{Color, Edge, TaitColoring, Web, WebError};

/// Result of blowing up a vertex into a triangle, together with the
/// canonical degree-preserving bijection of colorings.
#[derive(Clone, Debug)]
pub struct BlowUp {
    pub web: Web,
    pub vertex: String,
    pub triangle_vertices: [String; 3],
    /// `triangle_edges[k]` is the edge opposite corner k (joining the other
    /// two corners); under the bijection it inherits the color of leg k.
    pub triangle_edges: [String; 3],
    legs: [String; 3],
}

impl BlowUp {
    /// Coloring of the original web -> coloring of the blown-up web.
    pub fn forward(&self, c: &TaitColoring) -> Result<TaitColoring, WebError> {
        let mut assignment: BTreeMap<String, Color> = c.assignment().clone();
        for k in 0..3 {
            let leg_color = c.color(&self.legs[k]).ok_or_else(|| {
                WebError::InvalidColoring(format!("leg '{}' uncolored", self.legs[k]))
            })?;
            assignment.insert(self.triangle_edges[k].clone(), leg_color);
        }
        Ok(TaitColoring::new(assignment))
    }

    /// Coloring of the blown-up web -> coloring of the original web.
    pub fn backward(&self, c: &TaitColoring) -> TaitColoring {
        let mut assignment = c.assignment().clone();
        for e in &self.triangle_edges {
            assignment.remove(e);
        }
        TaitColoring::new(assignment)
    }
}

/// Replace a vertex by a triangle. The three edge-ends at the vertex, in
/// canonical (edge id, slot) order, are attached to the three new corners.
pub(super) fn blow_up_vertex(web: &Web, v: &str) -> Result<BlowUp, WebError> {
    if !web.vertices().contains(&v.to_string()) {
        return Err(WebError::UnknownVertex(v.to_string()));
    }
    let legs = web.ends_at(v);
    debug_assert_eq!(legs.len(), 3);
    let corner = |k: usize| format!("{v}.b{k}");
    let tri_edge_names = [
        format!("{v}.b12"), // joins corners 1 and 2, opposite leg 0
        format!("{v}.b02"),
        format!("{v}.b01"),
    ];
    let mut vertices: Vec<String> = web
        .vertices()
        .iter()
        .filter(|x| x.as_str() != v)
        .cloned()
        .collect();
    vertices.extend((0..3).map(corner));
    let mut edges: Vec<Edge> = web.edges().to_vec();
    for (k, &(ei, slot)) in legs.iter().enumerate() {
        edges[ei].ends[slot] = corner(k);
    }
    edges.push(Edge::between(&tri_edge_names[0], corner(1), corner(2)));
    edges.push(Edge::between(&tri_edge_names[1], corner(0), corner(2)));
    edges.push(Edge::between(&tri_edge_names[2], corner(0), corner(1)));
    let name = web.name().map(|n| format!("{n}+blowup({v})"));
    let new_web = Web::new(name, vertices, edges)?;
    Ok(BlowUp {
        web: new_web,
        vertex: v.to_string(),
        triangle_vertices: [corner(0), corner(1), corner(2)],
        triangle_edges: tri_edge_names,
        legs: [
            web.edges()[legs[0].0].id.clone(),
            web.edges()[legs[1].0].id.clone(),
            web.edges()[legs[2].0].id.clone(),
        ],
    })
}

/// Result of collapsing a digon, together with the canonical 2-to-1
/// coloring map (it forgets the order of the two digon colors and lowers
/// the degree by exactly one).
#[derive(Clone, Debug)]
pub struct DigonCollapse {
    pub web: Web,
    pub digon: [String; 2],
    /// The two outer edges that were merged, and the id of the merged edge
    /// (a free circle when they coincide).
    pub merged_from: (String, String),
    pub merged_id: String,
}

impl DigonCollapse {
    /// Coloring of the original web -> coloring of the collapsed web.
    pub fn forward(&self, c: &TaitColoring) -> Result<TaitColoring, WebError> {
        let outer_color = c.color(&self.merged_from.0).ok_or_else(|| {
            WebError::InvalidColoring(format!("edge '{}' uncolored", self.merged_from.0))
        })?;
        let mut assignment = c.assignment().clone();
        assignment.remove(&self.digon[0]);
        assignment.remove(&self.digon[1]);
        assignment.remove(&self.merged_from.0);
        assignment.remove(&self.merged_from.1);
        assignment.insert(self.merged_id.clone(), outer_color);
        Ok(TaitColoring::new(assignment))
    }
}

pub(super) fn collapse_digon(web: &Web, e1: &str, e2: &str) -> Result<DigonCollapse, WebError> {
    let a = web
        .edge(e1)
        .ok_or_else(|| WebError::UnknownEdge(e1.to_string()))?;
    let b = web
        .edge(e2)
        .ok_or_else(|| WebError::UnknownEdge(e2.to_string()))?;
    let digon_err = || WebError::NotADigon(e1.to_string(), e2.to_string());
    if e1 == e2 || a.is_circle() || b.is_circle() {
        return Err(digon_err());
    }
    let (u, w) = (a.ends[0].clone(), a.ends[1].clone());
    if u == w {
        return Err(digon_err());
    }
    let mut b_ends = b.ends.clone();
    b_ends.sort();
    let mut a_ends = a.ends.clone();
    a_ends.sort();
    if a_ends != b_ends {
        return Err(digon_err());
    }
    // the third edge-end at each digon vertex
    let third = |v: &str| -> (usize, usize) {
        web.ends_at(v)
            .into_iter()
            .find(|&(ei, _)| {
                let id = &web.edges()[ei].id;
                id != e1 && id != e2
            })
            .expect("trivalent vertex has a third edge-end")
    };
    let (gi, _gslot) = third(&u);
    let (hi, _hslot) = third(&w);
    let g = web.edges()[gi].clone();
    let h = web.edges()[hi].clone();

    let vertices: Vec<String> = web
        .vertices()
        .iter()
        .filter(|x| **x != u && **x != w)
        .cloned()
        .collect();
    let mut edges: Vec<Edge> = web
        .edges()
        .iter()
        .filter(|e| e.id != *e1 && e.id != *e2 && e.id != g.id && e.id != h.id)
        .cloned()
        .collect();

    let merged_id;
    if g.id == h.id {
        // theta configuration: the third edge closes into a free circle
        merged_id = g.id.clone();
        edges.push(Edge::circle(&merged_id));
    } else {
        let other_end = |e: &Edge, at: &str| -> String {
            if e.ends[0] == at {
                e.ends[1].clone()
            } else {
                e.ends[0].clone()
            }
        };
        let p = other_end(&g, &u);
        let q = other_end(&h, &w);
        merged_id = g.id.clone().min(h.id.clone());
        edges.push(Edge::between(&merged_id, p, q));
    }
    let name = web.name().map(|n| format!("{n}-digon({e1},{e2})"));
    let new_web = Web::new(name, vertices, edges)?;
    Ok(DigonCollapse {
        web: new_web,
        digon: [e1.to_string(), e2.to_string()],
        merged_from: (g.id, h.id),
        merged_id,
    })
}

/// Glue two webs by deleting a vertex from each and soldering the three
/// dangling edge-ends according to `matching`: leg k of `v1` (canonical
/// end order) joins leg `matching[k]` of `v2`. Chains of soldered edges
/// merge into single edges; a closed chain becomes a free circle.
pub fn vertex_connected_sum(
    w1: &Web,
    v1: &str,
    w2: &Web,
    v2: &str,
    matching: [usize; 3],
) -> Result<Web, WebError> {
    if !w1.vertices().contains(&v1.to_string()) {
        return Err(WebError::UnknownVertex(v1.to_string()));
    }
    if !w2.vertices().contains(&v2.to_string()) {
        return Err(WebError::UnknownVertex(v2.to_string()));
    }
    {
        let mut seen = [false; 3];
        for &m in &matching {
            if m >= 3 || seen[m] {
                return Err(WebError::InvalidMatching);
            }
            seen[m] = true;
        }
    }

    // Endpoint of an edge after deletion: a real vertex or a solder joint.
    #[derive(Clone, PartialEq, Debug)]
    enum End {
        Real(String),
        Joint(usize),
    }

    let legs1 = w1.ends_at(v1);
    let legs2 = w2.ends_at(v2);
    // (prefixed edge id, slot) -> joint index
    let mut joint_of: BTreeMap<(String, usize), usize> = BTreeMap::new();
    for k in 0..3 {
        let (e1, s1) = legs1[k];
        let (e2, s2) = legs2[matching[k]];
        joint_of.insert((format!("l.{}", w1.edges()[e1].id), s1), k);
        joint_of.insert((format!("r.{}", w2.edges()[e2].id), s2), k);
    }

    let mut vertices: Vec<String> = Vec::new();
    let mut ends_of: BTreeMap<String, Vec<End>> = BTreeMap::new();
    let mut circles: Vec<String> = Vec::new();
    for (prefix, web, skip) in [("l", w1, v1), ("r", w2, v2)] {
        for v in web.vertices() {
            if v != skip {
                vertices.push(format!("{prefix}.{v}"));
            }
        }
        for e in web.edges() {
            let id = format!("{prefix}.{}", e.id);
            if e.is_circle() {
                circles.push(id);
                continue;
            }
            let ends: Vec<End> = e
                .ends
                .iter()
                .enumerate()
                .map(|(slot, v)| match joint_of.get(&(id.clone(), slot)) {
                    Some(&j) => End::Joint(j),
                    None => End::Real(format!("{prefix}.{v}")),
                })
                .collect();
            ends_of.insert(id, ends);
        }
    }

    // joint -> the two (edge, end position) attachments
    let mut joint_ends: BTreeMap<usize, Vec<(String, usize)>> = BTreeMap::new();
    for (id, ends) in &ends_of {
        for (pos, end) in ends.iter().enumerate() {
            if let End::Joint(j) = end {
                joint_ends.entry(*j).or_default().push((id.clone(), pos));
            }
        }
    }

    let mut edges: Vec<Edge> = circles.into_iter().map(Edge::circle).collect();
    let mut used: BTreeMap<String, bool> = ends_of.keys().map(|k| (k.clone(), false)).collect();

    // walk open chains starting from real endpoints
    let ids: Vec<String> = ends_of.keys().cloned().collect();
    for id in &ids {
        if used[id] {
            continue;
        }
        let ends = &ends_of[id];
        let Some(start_pos) = ends.iter().position(|e| matches!(e, End::Real(_))) else {
            continue;
        };
        let End::Real(start_vertex) = ends[start_pos].clone() else {
            unreachable!()
        };
        let mut chain = vec![id.clone()];
        used.insert(id.clone(), true);
        let mut cur = (id.clone(), 1 - start_pos);
        let end_vertex = loop {
            match ends_of[&cur.0][cur.1].clone() {
                End::Real(v) => break v,
                End::Joint(j) => {
                    let pair = &joint_ends[&j];
                    let next = pair
                        .iter()
                        .find(|(e, p)| !(*e == cur.0 && *p == cur.1))
                        .expect("joint has two attachments")
                        .clone();
                    chain.push(next.0.clone());
                    used.insert(next.0.clone(), true);
                    cur = (next.0, 1 - next.1);
                }
            }
        };
        chain.sort();
        edges.push(Edge::between(chain[0].clone(), start_vertex, end_vertex));
    }

    // remaining unvisited chains are closed: they become free circles
    for id in &ids {
        if used[id] {
            continue;
        }
        let mut chain = vec![id.clone()];
        used.insert(id.clone(), true);
        let mut cur = (id.clone(), 1usize);
        loop {
            let End::Joint(j) = ends_of[&cur.0][cur.1].clone() else {
                unreachable!("closed chain has only joints")
            };
            let pair = &joint_ends[&j];
            let next = pair
                .iter()
                .find(|(e, p)| !(*e == cur.0 && *p == cur.1))
                .expect("joint has two attachments")
                .clone();
            if used[&next.0] {
                break;
            }
            chain.push(next.0.clone());
            used.insert(next.0.clone(), true);
            cur = (next.0, 1 - next.1);
        }
        chain.sort();
        edges.push(Edge::circle(chain[0].clone()));
    }

    let name = match (w1.name(), w2.name()) {
        (Some(a), Some(b)) => Some(format!("{a}#{b}")),
        _ => None,
    };
    Web::new(name, vertices, edges)
}
