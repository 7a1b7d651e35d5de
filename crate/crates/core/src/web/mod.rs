//! Trivalent webs, Tait colorings and Kempe equivalence.
//!
//! A web is stored as an abstract trivalent multigraph: loops and
//! vertexless free circles are allowed, planar embedding data is not kept
//! (none of the algorithms here need it). All operations are pure and
//! deterministic: vertices and edges are kept sorted by identifier and
//! colorings are reported in lexicographic order over the sorted edge ids.

mod builtins;
mod transform;

pub use builtins::{builtin_web, BUILTIN_WEBS};
pub use transform::{vertex_connected_sum, BlowUp, DigonCollapse};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WebError {
    #[error("invalid web: {0}")]
    Invalid(String),
    #[error("unknown builtin web '{0}'")]
    UnknownBuiltin(String),
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("unknown edge '{0}'")]
    UnknownEdge(String),
    #[error("edges '{0}' and '{1}' do not form a digon")]
    NotADigon(String, String),
    #[error("leg matching must be a permutation of 0..3")]
    InvalidMatching,
    #[error("color pair must consist of two distinct colors")]
    InvalidColorPair,
    #[error("edge set is not a component of the bicolored subgraph")]
    NotAComponent,
    #[error("not a valid Tait coloring: {0}")]
    InvalidColoring(String),
    #[error("web is not Kempe-small")]
    NotKempeSmall,
}

/// An edge color, one of 1, 2, 3.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Color(u8);

impl Color {
    pub fn new(v: u8) -> Result<Self, WebError> {
        if (1..=3).contains(&v) {
            Ok(Color(v))
        } else {
            Err(WebError::InvalidColoring(format!("color {v} out of range")))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub(crate) fn from_index(i: usize) -> Self {
        Color(i as u8 + 1)
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn all() -> [Color; 3] {
        [Color(1), Color(2), Color(3)]
    }
}

impl TryFrom<u8> for Color {
    type Error = WebError;
    fn try_from(v: u8) -> Result<Self, Self::Error> {
        Color::new(v)
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c.0
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered pair of distinct colors {i, j}.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColorPair {
    lo: Color,
    hi: Color,
}

impl ColorPair {
    pub fn new(a: Color, b: Color) -> Result<Self, WebError> {
        if a == b {
            return Err(WebError::InvalidColorPair);
        }
        Ok(if a < b {
            ColorPair { lo: a, hi: b }
        } else {
            ColorPair { lo: b, hi: a }
        })
    }

    pub fn colors(self) -> (Color, Color) {
        (self.lo, self.hi)
    }

    pub(crate) fn indices(self) -> (usize, usize) {
        (self.lo.index(), self.hi.index())
    }

    /// The three pairs in the fixed order {1,2}, {1,3}, {2,3}, matching the
    /// binomial factor order of the evaluation ring.
    pub fn all() -> [ColorPair; 3] {
        [
            ColorPair {
                lo: Color(1),
                hi: Color(2),
            },
            ColorPair {
                lo: Color(1),
                hi: Color(3),
            },
            ColorPair {
                lo: Color(2),
                hi: Color(3),
            },
        ]
    }

    pub fn contains(self, c: Color) -> bool {
        self.lo == c || self.hi == c
    }

    /// The swap i <-> j on color indices, identity elsewhere.
    pub(crate) fn swap_index(self, idx: usize) -> usize {
        let (i, j) = self.indices();
        if idx == i {
            j
        } else if idx == j {
            i
        } else {
            idx
        }
    }
}

impl fmt::Display for ColorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub id: String,
    /// Two endpoint vertex ids, or empty for a vertexless free circle.
    #[serde(default)]
    pub ends: Vec<String>,
}

impl Edge {
    pub fn between(id: impl Into<String>, u: impl Into<String>, v: impl Into<String>) -> Self {
        Edge {
            id: id.into(),
            ends: vec![u.into(), v.into()],
        }
    }

    pub fn circle(id: impl Into<String>) -> Self {
        Edge {
            id: id.into(),
            ends: Vec::new(),
        }
    }

    pub fn is_circle(&self) -> bool {
        self.ends.is_empty()
    }
}

/// A finite trivalent multigraph: every vertex carries exactly three
/// edge-ends (a loop counts twice), free circles carry none.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawWeb")]
pub struct Web {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

#[derive(Deserialize)]
struct RawWeb {
    #[serde(default)]
    name: Option<String>,
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl TryFrom<RawWeb> for Web {
    type Error = WebError;
    fn try_from(raw: RawWeb) -> Result<Self, WebError> {
        Web::new(raw.name, raw.vertices, raw.edges)
    }
}

impl Web {
    pub fn new(
        name: Option<String>,
        mut vertices: Vec<String>,
        mut edges: Vec<Edge>,
    ) -> Result<Self, WebError> {
        vertices.sort();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(WebError::Invalid("duplicate vertex id".into()));
        }
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        if edges.windows(2).any(|w| w[0].id == w[1].id) {
            return Err(WebError::Invalid("duplicate edge id".into()));
        }
        let vset: BTreeSet<&String> = vertices.iter().collect();
        let mut incidence: BTreeMap<&String, u32> = BTreeMap::new();
        for e in &edges {
            match e.ends.len() {
                0 => {}
                2 => {
                    for v in &e.ends {
                        if !vset.contains(v) {
                            return Err(WebError::Invalid(format!(
                                "edge '{}' references unknown vertex '{v}'",
                                e.id
                            )));
                        }
                        *incidence.entry(v).or_insert(0) += 1;
                    }
                }
                n => {
                    return Err(WebError::Invalid(format!(
                        "edge '{}' has {n} endpoints; expected 0 or 2",
                        e.id
                    )))
                }
            }
        }
        for v in &vertices {
            let deg = incidence.get(v).copied().unwrap_or(0);
            if deg != 3 {
                return Err(WebError::Invalid(format!(
                    "vertex '{v}' has {deg} edge-ends; a web is trivalent"
                )));
            }
        }
        Ok(Web {
            name,
            vertices,
            edges,
        })
    }

    /// The empty web: one (empty) Tait coloring of degree 0.
    pub fn empty() -> Self {
        Web {
            name: Some("empty".into()),
            vertices: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn free_circle_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_circle()).count()
    }

    pub fn from_json(s: &str) -> Result<Self, WebError> {
        serde_json::from_str(s).map_err(|e| WebError::Invalid(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("web serialization cannot fail")
    }

    /// Edge-ends at a vertex in canonical order: (edge index, slot) sorted
    /// by (edge id, slot). A loop contributes both slots.
    pub(crate) fn ends_at(&self, v: &str) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (ei, e) in self.edges.iter().enumerate() {
            for (slot, end) in e.ends.iter().enumerate() {
                if end == v {
                    out.push((ei, slot));
                }
            }
        }
        out
    }

    pub(crate) fn compiled(&self) -> CompiledWeb {
        CompiledWeb::compile(self)
    }

    fn coloring_to_vec(&self, c: &TaitColoring) -> Result<Vec<u8>, WebError> {
        let mut out = vec![0u8; self.edges.len()];
        if c.assignment.len() != self.edges.len() {
            return Err(WebError::InvalidColoring(
                "assignment does not cover the edge set".into(),
            ));
        }
        for (i, e) in self.edges.iter().enumerate() {
            let col = c
                .assignment
                .get(&e.id)
                .ok_or_else(|| WebError::InvalidColoring(format!("edge '{}' uncolored", e.id)))?;
            out[i] = col.index() as u8;
        }
        let compiled = self.compiled();
        if !compiled.is_valid(&out) {
            return Err(WebError::InvalidColoring(
                "colors are not distinct at some vertex".into(),
            ));
        }
        Ok(out)
    }

    fn vec_to_coloring(&self, v: &[u8]) -> TaitColoring {
        TaitColoring {
            assignment: self
                .edges
                .iter()
                .zip(v)
                .map(|(e, &c)| (e.id.clone(), Color::from_index(c as usize)))
                .collect(),
        }
    }

    /// All Tait colorings, each exactly once, sorted lexicographically over
    /// the sorted edge identifiers.
    pub fn tait_colorings(&self) -> Vec<TaitColoring> {
        self.compiled()
            .enumerate()
            .into_iter()
            .map(|v| self.vec_to_coloring(&v))
            .collect()
    }

    pub fn bicolored_subgraph(
        &self,
        c: &TaitColoring,
        pair: ColorPair,
    ) -> Result<BicoloredSubgraph, WebError> {
        let v = self.coloring_to_vec(c)?;
        let comps = self.compiled().components(&v, pair);
        Ok(BicoloredSubgraph {
            pair,
            components: comps
                .into_iter()
                .map(|comp| comp.into_iter().map(|e| self.edges[e].id.clone()).collect())
                .collect(),
        })
    }

    /// Swap the two colors of `pair` along one connected component of the
    /// bicolored subgraph. An involution: applying the same move twice
    /// returns the input.
    pub fn kempe_move(
        &self,
        c: &TaitColoring,
        pair: ColorPair,
        component: &BTreeSet<String>,
    ) -> Result<TaitColoring, WebError> {
        let v = self.coloring_to_vec(c)?;
        let compiled = self.compiled();
        let comps = compiled.components(&v, pair);
        let as_indices: BTreeSet<usize> = component
            .iter()
            .map(|id| {
                compiled
                    .edge_index(id)
                    .ok_or_else(|| WebError::UnknownEdge(id.clone()))
            })
            .collect::<Result<_, _>>()?;
        if !comps.iter().any(|comp| {
            comp.len() == as_indices.len() && comp.iter().all(|e| as_indices.contains(e))
        }) {
            return Err(WebError::NotAComponent);
        }
        let mut out = v;
        for &e in &as_indices {
            out[e] = pair.swap_index(out[e] as usize) as u8;
        }
        debug_assert!(compiled.is_valid(&out));
        Ok(self.vec_to_coloring(&out))
    }

    /// Kempe classes by breadth-first closure on the coloring graph, with
    /// per-class degree multisets and the homogeneity flags.
    pub fn kempe_partition(&self) -> KempePartition {
        let compiled = self.compiled();
        let colorings = compiled.enumerate();
        let index: BTreeMap<&Vec<u8>, usize> =
            colorings.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let mut class_of = vec![usize::MAX; colorings.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..colorings.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut queue = vec![start];
            class_of[start] = id;
            let mut members = vec![start];
            while let Some(cur) = queue.pop() {
                for n in compiled.kempe_neighbors(&colorings[cur]) {
                    let ni = index[&n];
                    if class_of[ni] == usize::MAX {
                        class_of[ni] = id;
                        members.push(ni);
                        queue.push(ni);
                    }
                }
            }
            members.sort();
            classes.push(members);
        }
        let degrees_per_class: Vec<Vec<u32>> = classes
            .iter()
            .map(|members| {
                let mut d: Vec<u32> = members
                    .iter()
                    .map(|&i| compiled.degree(&colorings[i]))
                    .collect();
                d.sort();
                d
            })
            .collect();
        let has_colorings = !colorings.is_empty();
        let class_homog: Vec<bool> = degrees_per_class
            .iter()
            .map(|d| d.iter().all(|&x| x == d[0]))
            .collect();
        let weakly = has_colorings && class_homog.iter().any(|&b| b);
        let semi = has_colorings && class_homog.iter().all(|&b| b);
        let homogeneous = semi && degrees_per_class.windows(2).all(|w| w[0][0] == w[1][0]);
        let kempe_degree = homogeneous.then(|| degrees_per_class[0][0]);
        let kempe_small = has_colorings
            && colorings.iter().all(|c| {
                ColorPair::all()
                    .iter()
                    .all(|&p| compiled.components(c, p).len() <= 1)
            });
        KempePartition {
            classes: classes
                .iter()
                .map(|members| {
                    members
                        .iter()
                        .map(|&i| self.vec_to_coloring(&colorings[i]))
                        .collect()
                })
                .collect(),
            degrees_per_class,
            weakly_homogeneous: weakly,
            semi_homogeneous: semi,
            homogeneous,
            kempe_small,
            kempe_degree,
        }
    }

    /// True when the web has colorings and every bicolored subgraph of
    /// every coloring is connected (at most one component; an empty
    /// subgraph counts as vacuously connected, which is what makes the
    /// circle web Kempe-small).
    pub fn is_kempe_small(&self) -> bool {
        let compiled = self.compiled();
        let colorings = compiled.enumerate();
        !colorings.is_empty()
            && colorings.iter().all(|c| {
                ColorPair::all()
                    .iter()
                    .all(|&p| compiled.components(c, p).len() <= 1)
            })
    }

    /// The deduplicated set of bicolored edge sets over all colorings and
    /// pairs; for a Kempe-small web each nonempty member is a Hamiltonian
    /// cycle.
    pub fn hamiltonian_cycles(&self) -> Result<BTreeSet<BTreeSet<String>>, WebError> {
        if !self.is_kempe_small() {
            return Err(WebError::NotKempeSmall);
        }
        let compiled = self.compiled();
        let mut out = BTreeSet::new();
        for c in compiled.enumerate() {
            for pair in ColorPair::all() {
                let (i, j) = pair.indices();
                let cycle: BTreeSet<String> = c
                    .iter()
                    .enumerate()
                    .filter(|(_, &col)| col as usize == i || col as usize == j)
                    .map(|(e, _)| self.edges[e].id.clone())
                    .collect();
                if !cycle.is_empty() {
                    out.insert(cycle);
                }
            }
        }
        Ok(out)
    }

    pub fn blow_up_vertex(&self, v: &str) -> Result<BlowUp, WebError> {
        transform::blow_up_vertex(self, v)
    }

    pub fn collapse_digon(&self, e1: &str, e2: &str) -> Result<DigonCollapse, WebError> {
        transform::collapse_digon(self, e1, e2)
    }
}

/// A Tait coloring: a total assignment of colors to edges with all three
/// colors distinct around every vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TaitColoring {
    assignment: BTreeMap<String, Color>,
}

impl TaitColoring {
    pub fn new(assignment: BTreeMap<String, Color>) -> Self {
        TaitColoring { assignment }
    }

    pub fn color(&self, edge: &str) -> Option<Color> {
        self.assignment.get(edge).copied()
    }

    pub fn assignment(&self) -> &BTreeMap<String, Color> {
        &self.assignment
    }

    /// Apply a permutation of the three colors: color with index i becomes
    /// color with index `perm[i]`.
    pub fn permute_colors(&self, perm: &[usize; 3]) -> TaitColoring {
        TaitColoring {
            assignment: self
                .assignment
                .iter()
                .map(|(e, c)| (e.clone(), Color::from_index(perm[c.index()])))
                .collect(),
        }
    }

    /// Restriction to a subset of edges.
    pub fn restricted_to<'a, I: IntoIterator<Item = &'a str>>(&self, edges: I) -> TaitColoring {
        TaitColoring {
            assignment: edges
                .into_iter()
                .filter_map(|e| self.assignment.get(e).map(|c| (e.to_string(), *c)))
                .collect(),
        }
    }
}

/// The six permutations of the color indices {0, 1, 2}.
pub fn color_permutations() -> [[usize; 3]; 6] {
    [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
}

/// The subgraph of edges colored i or j, split into connected components.
/// Every component is an even cycle; a free circle colored i or j is its
/// own component.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BicoloredSubgraph {
    pub pair: ColorPair,
    pub components: Vec<BTreeSet<String>>,
}

impl BicoloredSubgraph {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }
}

/// The partition of Tait(Γ) into Kempe classes together with the
/// homogeneity classification.
#[derive(Clone, Debug)]
pub struct KempePartition {
    /// Classes sorted by their minimal coloring; colorings sorted within.
    pub classes: Vec<Vec<TaitColoring>>,
    /// Sorted multiset of d(Γ,c) over each class.
    pub degrees_per_class: Vec<Vec<u32>>,
    pub weakly_homogeneous: bool,
    pub semi_homogeneous: bool,
    pub homogeneous: bool,
    pub kempe_small: bool,
    /// Present exactly when the web is homogeneous.
    pub kempe_degree: Option<u32>,
}

impl KempePartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn coloring_count(&self) -> usize {
        self.classes.iter().map(|c| c.len()).sum()
    }
}

/// Index-level web with the enumeration and Kempe machinery. Edge order is
/// the sorted-id order of the owning [`Web`].
pub(crate) struct CompiledWeb {
    pub edge_ids: Vec<String>,
    pub ends: Vec<Option<(usize, usize)>>,
    pub n_vertices: usize,
}

impl CompiledWeb {
    fn compile(web: &Web) -> Self {
        let vindex: BTreeMap<&String, usize> = web
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        CompiledWeb {
            edge_ids: web.edges.iter().map(|e| e.id.clone()).collect(),
            ends: web
                .edges
                .iter()
                .map(|e| {
                    if e.is_circle() {
                        None
                    } else {
                        Some((vindex[&e.ends[0]], vindex[&e.ends[1]]))
                    }
                })
                .collect(),
            n_vertices: web.vertices.len(),
        }
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edge_ids.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    pub fn is_valid(&self, coloring: &[u8]) -> bool {
        let mut used = vec![0u8; self.n_vertices];
        for (e, &c) in self.ends.iter().zip(coloring) {
            if let Some((u, v)) = *e {
                let bit = 1u8 << (c % 3);
                if used[u] & bit != 0 {
                    return false;
                }
                used[u] |= bit;
                if used[v] & bit != 0 {
                    return false;
                }
                used[v] |= bit;
            }
        }
        true
    }

    /// Backtracking enumeration: non-circle edges in id order with vertex
    /// constraint propagation, free circles enumerated last; the result is
    /// then sorted into lexicographic order over the id-sorted edge list.
    pub fn enumerate(&self) -> Vec<Vec<u8>> {
        let mut order: Vec<usize> = (0..self.ends.len())
            .filter(|&e| self.ends[e].is_some())
            .collect();
        let circles: Vec<usize> = (0..self.ends.len())
            .filter(|&e| self.ends[e].is_none())
            .collect();
        order.extend(&circles);
        let mut used = vec![0u8; self.n_vertices];
        let mut assign = vec![0u8; self.ends.len()];
        let mut out = Vec::new();
        self.backtrack(&order, 0, &mut used, &mut assign, &mut out);
        out.sort();
        out
    }

    fn backtrack(
        &self,
        order: &[usize],
        depth: usize,
        used: &mut [u8],
        assign: &mut [u8],
        out: &mut Vec<Vec<u8>>,
    ) {
        if depth == order.len() {
            out.push(assign.to_vec());
            return;
        }
        let e = order[depth];
        for c in 0..3u8 {
            let bit = 1u8 << c;
            match self.ends[e] {
                Some((u, v)) => {
                    if used[u] & bit != 0 {
                        continue;
                    }
                    used[u] |= bit;
                    // a loop (u == v) always conflicts with itself
                    if used[v] & bit != 0 {
                        used[u] &= !bit;
                        continue;
                    }
                    used[v] |= bit;
                    assign[e] = c;
                    self.backtrack(order, depth + 1, used, assign, out);
                    used[u] &= !bit;
                    used[v] &= !bit;
                }
                None => {
                    assign[e] = c;
                    self.backtrack(order, depth + 1, used, assign, out);
                }
            }
        }
    }

    /// Connected components (as sorted edge-index sets) of the subgraph of
    /// edges colored in the pair. Sorted by first edge.
    pub fn components(&self, coloring: &[u8], pair: ColorPair) -> Vec<Vec<usize>> {
        let (i, j) = pair.indices();
        let mut parent: Vec<usize> = (0..self.n_vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut circles = Vec::new();
        let mut members: Vec<usize> = Vec::new();
        for (e, &c) in coloring.iter().enumerate() {
            if c as usize != i && c as usize != j {
                continue;
            }
            match self.ends[e] {
                Some((u, v)) => {
                    members.push(e);
                    let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                    if ru != rv {
                        parent[ru] = rv;
                    }
                }
                None => circles.push(vec![e]),
            }
        }
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for e in members {
            let root = find(&mut parent, self.ends[e].unwrap().0);
            by_root.entry(root).or_default().push(e);
        }
        let mut comps: Vec<Vec<usize>> = by_root.into_values().collect();
        comps.extend(circles);
        for c in comps.iter_mut() {
            c.sort();
        }
        comps.sort();
        comps
    }

    /// d(Γ,c) = d_12 + d_13 + d_23.
    pub fn degree(&self, coloring: &[u8]) -> u32 {
        ColorPair::all()
            .iter()
            .map(|&p| self.components(coloring, p).len() as u32)
            .sum()
    }

    /// All colorings one Kempe move away.
    pub fn kempe_neighbors(&self, coloring: &[u8]) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for pair in ColorPair::all() {
            for comp in self.components(coloring, pair) {
                let mut next = coloring.to_vec();
                for e in comp {
                    next[e] = pair.swap_index(next[e] as usize) as u8;
                }
                out.push(next);
            }
        }
        out
    }

    /// The Kempe class of a coloring, by breadth-first closure.
    pub fn kempe_class_of(&self, start: &[u8]) -> BTreeSet<Vec<u8>> {
        let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
        let mut queue = vec![start.to_vec()];
        seen.insert(start.to_vec());
        while let Some(cur) = queue.pop() {
            for n in self.kempe_neighbors(&cur) {
                if seen.insert(n.clone()) {
                    queue.push(n);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring_of(_web: &Web, colors: &[(&str, u8)]) -> TaitColoring {
        TaitColoring::new(
            colors
                .iter()
                .map(|(e, c)| (e.to_string(), Color::new(*c).unwrap()))
                .collect(),
        )
    }

    #[test]
    fn circle_has_three_colorings() {
        let w = builtin_web("circle").unwrap();
        let cols = w.tait_colorings();
        assert_eq!(cols.len(), 3);
        let p = w.kempe_partition();
        assert_eq!(p.class_count(), 1);
        assert_eq!(p.kempe_degree, Some(2));
        assert!(p.kempe_small);
    }

    #[test]
    fn theta_has_six_colorings_one_class_degree_three() {
        let w = builtin_web("theta").unwrap();
        assert_eq!(w.vertex_count(), 2);
        assert_eq!(w.edge_count(), 3);
        assert_eq!(w.tait_colorings().len(), 6);
        let p = w.kempe_partition();
        assert_eq!(p.class_count(), 1);
        assert!(p.homogeneous);
        assert_eq!(p.kempe_degree, Some(3));
    }

    #[test]
    fn empty_web_has_one_coloring_of_degree_zero() {
        let w = Web::empty();
        let cols = w.tait_colorings();
        assert_eq!(cols.len(), 1);
        let p = w.kempe_partition();
        assert_eq!(p.degrees_per_class, vec![vec![0]]);
        assert_eq!(p.kempe_degree, Some(0));
    }

    #[test]
    fn loop_web_has_no_colorings() {
        // two vertices, a loop at each, connected by an edge
        let w = Web::new(
            None,
            vec!["u".into(), "v".into()],
            vec![
                Edge::between("e0", "u", "v"),
                Edge {
                    id: "lu".into(),
                    ends: vec!["u".into(), "u".into()],
                },
                Edge {
                    id: "lv".into(),
                    ends: vec!["v".into(), "v".into()],
                },
            ],
        )
        .unwrap();
        assert!(w.tait_colorings().is_empty());
        assert!(!w.is_kempe_small());
        let p = w.kempe_partition();
        assert!(!p.weakly_homogeneous && !p.kempe_small);
        assert_eq!(p.kempe_degree, None);
    }

    #[test]
    fn theta_bicolored_single_component() {
        let w = builtin_web("theta").unwrap();
        let c = coloring_of(&w, &[("e0", 1), ("e1", 2), ("e2", 3)]);
        let pair = ColorPair::new(Color::new(1).unwrap(), Color::new(2).unwrap()).unwrap();
        let b = w.bicolored_subgraph(&c, pair).unwrap();
        assert_eq!(b.component_count(), 1);
    }

    #[test]
    fn circle_bicolored_components() {
        let w = builtin_web("circle").unwrap();
        let c = coloring_of(&w, &[("e0", 1)]);
        let c12 = ColorPair::new(Color::new(1).unwrap(), Color::new(2).unwrap()).unwrap();
        let c23 = ColorPair::new(Color::new(2).unwrap(), Color::new(3).unwrap()).unwrap();
        assert_eq!(w.bicolored_subgraph(&c, c12).unwrap().component_count(), 1);
        assert_eq!(w.bicolored_subgraph(&c, c23).unwrap().component_count(), 0);
    }

    #[test]
    fn kempe_move_is_involution() {
        let w = builtin_web("k4").unwrap();
        for c in w.tait_colorings() {
            for pair in ColorPair::all() {
                let b = w.bicolored_subgraph(&c, pair).unwrap();
                for comp in &b.components {
                    let once = w.kempe_move(&c, pair, comp).unwrap();
                    let twice = w.kempe_move(&once, pair, comp).unwrap();
                    assert_eq!(twice, c);
                }
            }
        }
    }

    #[test]
    fn kempe_move_rejects_non_component() {
        let w = builtin_web("theta").unwrap();
        let c = coloring_of(&w, &[("e0", 1), ("e1", 2), ("e2", 3)]);
        let pair = ColorPair::new(Color::new(1).unwrap(), Color::new(2).unwrap()).unwrap();
        let bogus: BTreeSet<String> = ["e0".to_string()].into();
        assert_eq!(w.kempe_move(&c, pair, &bogus), Err(WebError::NotAComponent));
    }

    #[test]
    fn circle_kempe_move_recolors() {
        let w = builtin_web("circle").unwrap();
        let c = coloring_of(&w, &[("e0", 1)]);
        let pair = ColorPair::new(Color::new(1).unwrap(), Color::new(2).unwrap()).unwrap();
        let comp: BTreeSet<String> = ["e0".to_string()].into();
        let moved = w.kempe_move(&c, pair, &comp).unwrap();
        assert_eq!(moved, coloring_of(&w, &[("e0", 2)]));
    }

    #[test]
    fn bicolored_components_are_even_cycles() {
        for name in ["theta", "k4", "cube", "square"] {
            let w = builtin_web(name).unwrap();
            let compiled = w.compiled();
            for c in compiled.enumerate() {
                for pair in ColorPair::all() {
                    for comp in compiled.components(&c, pair) {
                        let has_ends = comp.iter().any(|&e| compiled.ends[e].is_some());
                        if has_ends {
                            assert_eq!(comp.len() % 2, 0, "odd cycle in {name}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cube_is_bipartite_one_class_not_weakly_homogeneous() {
        let w = builtin_web("cube").unwrap();
        let cols = w.tait_colorings();
        assert_eq!(cols.len(), 24);
        let p = w.kempe_partition();
        assert_eq!(p.class_count(), 1);
        assert!(!p.weakly_homogeneous);
        assert!(!p.kempe_small);
        let degrees: BTreeSet<u32> = p.degrees_per_class[0].iter().copied().collect();
        assert_eq!(degrees, BTreeSet::from([4, 6]));
    }

    #[test]
    fn cube_has_coloring_with_degree_multiset_2_1_1() {
        let w = builtin_web("cube").unwrap();
        let compiled = w.compiled();
        let found = compiled.enumerate().iter().any(|c| {
            let mut counts: Vec<usize> = ColorPair::all()
                .iter()
                .map(|&p| compiled.components(c, p).len())
                .collect();
            counts.sort();
            counts == vec![1, 1, 2]
        });
        assert!(found);
    }

    #[test]
    fn cube_inner_square_kempe_move_changes_degree() {
        let w = builtin_web("cube").unwrap();
        let compiled = w.compiled();
        let mut found = false;
        for c in compiled.enumerate() {
            if compiled.degree(&c) != 6 {
                continue;
            }
            for pair in ColorPair::all() {
                for comp in compiled.components(&c, pair) {
                    if comp.len() != 4 {
                        continue;
                    }
                    let mut next = c.clone();
                    for e in comp {
                        next[e] = pair.swap_index(next[e] as usize) as u8;
                    }
                    if compiled.degree(&next) == 4 {
                        found = true;
                    }
                }
            }
        }
        assert!(found, "no Kempe move along a square from degree 6 to 4");
    }

    #[test]
    fn s3_action_permutes_classes() {
        let w = builtin_web("dodecahedron").unwrap();
        let p = w.kempe_partition();
        let class_sets: Vec<BTreeSet<TaitColoring>> = p
            .classes
            .iter()
            .map(|c| c.iter().cloned().collect())
            .collect();
        for perm in color_permutations() {
            for class in &class_sets {
                let image: BTreeSet<TaitColoring> =
                    class.iter().map(|c| c.permute_colors(&perm)).collect();
                assert!(class_sets.contains(&image));
            }
        }
    }

    #[test]
    fn web_json_round_trip_is_bit_exact() {
        let w = builtin_web("theta").unwrap();
        let s = w.to_json();
        let back = Web::from_json(&s).unwrap();
        assert_eq!(back, w);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn web_json_rejects_broken_documents() {
        // four edge-ends at one vertex
        let bad = r#"{"vertices":["a","b"],"edges":[
            {"id":"e0","ends":["a","b"]},{"id":"e1","ends":["a","b"]},
            {"id":"e2","ends":["a","b"]},{"id":"e3","ends":["a","b"]}]}"#;
        assert!(Web::from_json(bad).is_err());
        let one_end = r#"{"vertices":["a"],"edges":[{"id":"e0","ends":["a"]}]}"#;
        assert!(Web::from_json(one_end).is_err());
    }
}
