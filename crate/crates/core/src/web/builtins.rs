use super::{Edge, Web, WebError};

/// The named webs shipped with the engine, with fixed canonical labelings.
///
/// * `circle` — one vertexless free circle.
/// * `theta` — two vertices joined by three edges.
/// * `k4` — the tetrahedral web.
/// * `cube` — the 1-skeleton of the cube (drawn in the plane as a square
///   inside a square); bipartite, one Kempe class, not weakly homogeneous.
/// * `dodecahedron` — the dodecahedral web, 20 vertices and 30 edges.
/// * `square` — a 4-cycle with two doubled opposite sides (4 vertices,
///   6 edges, a single Kempe class of 12 colorings).
pub fn builtin_web(name: &str) -> Result<Web, WebError> {
    match name {
        "circle" => Web::new(Some("circle".into()), vec![], vec![Edge::circle("e0")]),
        "theta" => Web::new(
            Some("theta".into()),
            vec!["v0".into(), "v1".into()],
            vec![
                Edge::between("e0", "v0", "v1"),
                Edge::between("e1", "v0", "v1"),
                Edge::between("e2", "v0", "v1"),
            ],
        ),
        "k4" => {
            let v = |i: usize| format!("v{i}");
            let mut edges = Vec::new();
            let mut n = 0;
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push(Edge::between(format!("e{n}"), v(i), v(j)));
                    n += 1;
                }
            }
            Web::new(Some("k4".into()), (0..4).map(v).collect(), edges)
        }
        "cube" => {
            let v = |i: usize| format!("v{i}");
            let mut edges = Vec::new();
            // e00..e03 outer square, e04..e07 inner square, e08..e11 spokes
            for i in 0..4 {
                edges.push(Edge::between(format!("e{:02}", i), v(i), v((i + 1) % 4)));
            }
            for i in 0..4 {
                edges.push(Edge::between(
                    format!("e{:02}", 4 + i),
                    v(4 + i),
                    v(4 + (i + 1) % 4),
                ));
            }
            for i in 0..4 {
                edges.push(Edge::between(format!("e{:02}", 8 + i), v(i), v(4 + i)));
            }
            Web::new(Some("cube".into()), (0..8).map(v).collect(), edges)
        }
        "dodecahedron" => {
            let v = |i: usize| format!("v{:02}", i);
            let mut edges = Vec::new();
            let mut n = 0;
            let mut add = |edges: &mut Vec<Edge>, a: usize, b: usize| {
                edges.push(Edge::between(format!("e{:02}", n), v(a), v(b)));
                n += 1;
            };
            // outer pentagon
            for i in 0..5 {
                add(&mut edges, i, (i + 1) % 5);
            }
            // spokes to the second ring
            for i in 0..5 {
                add(&mut edges, i, 5 + i);
            }
            // middle decagon alternating between rings two and three
            for i in 0..5 {
                add(&mut edges, 5 + i, 10 + i);
                add(&mut edges, 10 + i, 5 + (i + 1) % 5);
            }
            // spokes to the inner pentagon
            for i in 0..5 {
                add(&mut edges, 10 + i, 15 + i);
            }
            // inner pentagon
            for i in 0..5 {
                add(&mut edges, 15 + i, 15 + (i + 1) % 5);
            }
            Web::new(Some("dodecahedron".into()), (0..20).map(v).collect(), edges)
        }
        "square" => Web::new(
            Some("square".into()),
            (0..4).map(|i| format!("v{i}")).collect(),
            vec![
                Edge::between("e0", "v0", "v1"),
                Edge::between("e1", "v0", "v1"),
                Edge::between("e2", "v1", "v2"),
                Edge::between("e3", "v2", "v3"),
                Edge::between("e4", "v2", "v3"),
                Edge::between("e5", "v3", "v0"),
            ],
        ),
        other => Err(WebError::UnknownBuiltin(other.to_string())),
    }
}

pub const BUILTIN_WEBS: [&str; 6] = ["circle", "theta", "k4", "cube", "dodecahedron", "square"];
