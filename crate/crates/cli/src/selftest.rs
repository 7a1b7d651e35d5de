//! Recorded reference checks: every documented example value the engine
//! is expected to reproduce, runnable as one batch with per-item results.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde_json::json;

use foamlab_core::foam::{
    closed_surface, double_cone, square_counterexample, theta_foam, EvalMode, FoamError,
};
use foamlab_core::gf2::{
    graded_rank, BaseChange, EPoly, Gf2Fraction, Gf2Poly, GradedMatrix, Laurent, SymPoly,
};
use foamlab_core::statespace::{
    build_generator_family, pairing_matrix, state_space_from_pairing, verify_idempotent_identity,
};
use foamlab_core::web::{
    builtin_web, color_permutations, vertex_connected_sum, ColorPair, TaitColoring, Web,
};

use crate::output::{emit, CliError, OutputArgs};

type CheckResult = Result<String, String>;

fn ensure(cond: bool, detail: String) -> CheckResult {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn web_census(name: &str, colorings: usize, classes: usize, degree: Option<u32>) -> CheckResult {
    let w = builtin_web(name).map_err(|e| e.to_string())?;
    let p = w.kempe_partition();
    ensure(
        p.coloring_count() == colorings && p.class_count() == classes && p.kempe_degree == degree,
        format!(
            "{name}: |Tait| = {}, classes = {}, degree = {:?}",
            p.coloring_count(),
            p.class_count(),
            p.kempe_degree
        ),
    )
}

fn checks() -> Vec<(&'static str, Box<dyn Fn() -> CheckResult>)> {
    let mut out: Vec<(&'static str, Box<dyn Fn() -> CheckResult>)> = Vec::new();
    macro_rules! check {
        ($name:expr, $body:expr) => {
            out.push(($name, Box::new($body)));
        };
    }

    check!("circle census", || web_census("circle", 3, 1, Some(2)));
    check!("theta census", || web_census("theta", 6, 1, Some(3)));
    check!("k4 census", || web_census("k4", 6, 1, Some(3)));
    check!("dodecahedron census", || web_census(
        "dodecahedron",
        60,
        10,
        Some(3)
    ));
    check!("cube census", || {
        let w = builtin_web("cube").map_err(|e| e.to_string())?;
        let p = w.kempe_partition();
        ensure(
            p.coloring_count() == 24 && p.class_count() == 1 && !p.weakly_homogeneous,
            format!(
                "cube: |Tait| = {}, classes = {}, weakly homogeneous = {}",
                p.coloring_count(),
                p.class_count(),
                p.weakly_homogeneous
            ),
        )
    });
    check!("empty web census", || {
        let p = Web::empty().kempe_partition();
        ensure(
            p.coloring_count() == 1 && p.kempe_degree == Some(0),
            format!("1 empty coloring of degree {:?}", p.kempe_degree),
        )
    });
    check!("cube degree multisets", || {
        let w = builtin_web("cube").map_err(|e| e.to_string())?;
        let p = w.kempe_partition();
        let degrees: BTreeSet<u32> = p.degrees_per_class[0].iter().copied().collect();
        ensure(
            degrees == BTreeSet::from([4, 6]),
            format!("degrees over the single class: {degrees:?}"),
        )
    });
    check!("cube square move drops degree 6 to 4", || {
        let w = builtin_web("cube").map_err(|e| e.to_string())?;
        let mut witness = None;
        'outer: for c in w.tait_colorings() {
            for pair in ColorPair::all() {
                let b = w.bicolored_subgraph(&c, pair).map_err(|e| e.to_string())?;
                for comp in &b.components {
                    if comp.len() != 4 {
                        continue;
                    }
                    let moved = w.kempe_move(&c, pair, comp).map_err(|e| e.to_string())?;
                    let d = |x: &TaitColoring| -> u32 {
                        ColorPair::all()
                            .iter()
                            .map(|&p| w.bicolored_subgraph(x, p).unwrap().component_count() as u32)
                            .sum()
                    };
                    if d(&c) == 6 && d(&moved) == 4 {
                        witness = Some(comp.len());
                        break 'outer;
                    }
                }
            }
        }
        ensure(witness.is_some(), "found a 4-edge Kempe move 6 -> 4".into())
    });
    check!("dodecahedron classes are color-orbit classes", || {
        let w = builtin_web("dodecahedron").map_err(|e| e.to_string())?;
        let p = w.kempe_partition();
        let ok = p.classes.iter().all(|class| {
            let set: BTreeSet<&TaitColoring> = class.iter().collect();
            let rep = class.first().expect("nonempty");
            color_permutations()
                .iter()
                .all(|perm| set.contains(&rep.permute_colors(perm)))
        });
        ensure(
            ok,
            format!("{} classes, each one orbit of size 6", p.class_count()),
        )
    });
    check!("kempe-smallness of the builtin webs", || {
        let mut got = Vec::new();
        for (name, expected) in [
            ("circle", true),
            ("theta", true),
            ("k4", true),
            ("dodecahedron", true),
            ("cube", false),
        ] {
            let w = builtin_web(name).map_err(|e| e.to_string())?;
            let v = w.is_kempe_small();
            if v != expected {
                return Err(format!("{name}: kempe-small = {v}, expected {expected}"));
            }
            got.push(format!("{name}={v}"));
        }
        Ok(got.join(" "))
    });
    check!("loopy web has no colorings and is not kempe-small", || {
        let w = Web::new(
            None,
            vec!["u".into(), "v".into()],
            vec![
                foamlab_core::web::Edge::between("e", "u", "v"),
                foamlab_core::web::Edge {
                    id: "lu".into(),
                    ends: vec!["u".into(), "u".into()],
                },
                foamlab_core::web::Edge {
                    id: "lv".into(),
                    ends: vec!["v".into(), "v".into()],
                },
            ],
        )
        .map_err(|e| e.to_string())?;
        ensure(
            w.tait_colorings().is_empty() && !w.is_kempe_small(),
            "no colorings, not kempe-small".into(),
        )
    });
    check!("dodecahedron hamiltonian cycles", || {
        let w = builtin_web("dodecahedron").map_err(|e| e.to_string())?;
        let n = w.hamiltonian_cycles().map_err(|e| e.to_string())?.len();
        ensure(n == 30, format!("{n} cycles"))
    });
    check!("theta and k4 hamiltonian cycles", || {
        let t = builtin_web("theta").map_err(|e| e.to_string())?;
        let k = builtin_web("k4").map_err(|e| e.to_string())?;
        let (nt, nk) = (
            t.hamiltonian_cycles().map_err(|e| e.to_string())?.len(),
            k.hamiltonian_cycles().map_err(|e| e.to_string())?.len(),
        );
        ensure(nt == 3 && nk == 3, format!("theta: {nt}, k4: {nk}"))
    });
    check!("blow-up preserves the coloring census", || {
        for name in ["theta", "k4"] {
            let w = builtin_web(name).map_err(|e| e.to_string())?;
            let v = w.vertices()[0].clone();
            let b = w.blow_up_vertex(&v).map_err(|e| e.to_string())?;
            let (p, q) = (w.kempe_partition(), b.web.kempe_partition());
            if p.coloring_count() != q.coloring_count()
                || p.class_count() != q.class_count()
                || p.degrees_per_class != q.degrees_per_class
            {
                return Err(format!("census changed for {name}"));
            }
        }
        let k4 = builtin_web("k4").map_err(|e| e.to_string())?;
        let blown = k4.blow_up_vertex("v0").map_err(|e| e.to_string())?;
        ensure(
            blown.web.is_kempe_small(),
            "blown-up k4 stays kempe-small".into(),
        )
    });
    check!("digon collapse on theta is 2-to-1 with degree drop", || {
        let theta = builtin_web("theta").map_err(|e| e.to_string())?;
        let d = theta
            .collapse_digon("e0", "e1")
            .map_err(|e| e.to_string())?;
        let mut fibers: BTreeMap<TaitColoring, usize> = BTreeMap::new();
        for c in theta.tait_colorings() {
            *fibers
                .entry(d.forward(&c).map_err(|e| e.to_string())?)
                .or_insert(0) += 1;
        }
        ensure(
            d.web.free_circle_count() == 1 && fibers.len() == 3 && fibers.values().all(|&n| n == 2),
            format!(
                "collapsed to a circle; fibers {:?}",
                fibers.values().collect::<Vec<_>>()
            ),
        )
    });
    check!("theta is neutral for the connected sum", || {
        let theta = builtin_web("theta").map_err(|e| e.to_string())?;
        let k4 = builtin_web("k4").map_err(|e| e.to_string())?;
        for base in [&theta, &k4] {
            let s = vertex_connected_sum(base, "v0", &theta, "v0", [0, 1, 2])
                .map_err(|e| e.to_string())?;
            let (p, q) = (base.kempe_partition(), s.kempe_partition());
            if p.coloring_count() != q.coloring_count()
                || p.degrees_per_class != q.degrees_per_class
            {
                return Err("census changed under sum with theta".into());
            }
        }
        Ok("census preserved".into())
    });
    check!("connected sum with k4 matches a blow-up", || {
        let theta = builtin_web("theta").map_err(|e| e.to_string())?;
        let k4 = builtin_web("k4").map_err(|e| e.to_string())?;
        let s =
            vertex_connected_sum(&theta, "v0", &k4, "v0", [0, 1, 2]).map_err(|e| e.to_string())?;
        let b = theta.blow_up_vertex("v0").map_err(|e| e.to_string())?;
        let (p, q) = (s.kempe_partition(), b.web.kempe_partition());
        ensure(
            p.coloring_count() == q.coloring_count() && p.degrees_per_class == q.degrees_per_class,
            "censuses agree".into(),
        )
    });
    check!("k4 # k4 is kempe-small with six colorings", || {
        let k4 = builtin_web("k4").map_err(|e| e.to_string())?;
        let s = vertex_connected_sum(&k4, "v0", &k4, "v3", [0, 1, 2]).map_err(|e| e.to_string())?;
        ensure(
            s.tait_colorings().len() == 6 && s.is_kempe_small(),
            format!("{} colorings", s.tait_colorings().len()),
        )
    });
    check!("theta-foam table", || {
        for k in 0..3u32 {
            for l in 0..3u32 {
                for m in 0..3u32 {
                    let report = theta_foam(k, l, m)
                        .evaluate(EvalMode::Homogeneous)
                        .map_err(|e| e.to_string())?;
                    let mut s = [k, l, m];
                    s.sort();
                    let expected = if s == [0, 1, 2] {
                        SymPoly::one()
                    } else {
                        SymPoly::zero()
                    };
                    if report.value != Some(expected) {
                        return Err(format!("theta({k},{l},{m}) evaluated wrong"));
                    }
                }
            }
        }
        Ok("27 values match the 0/1 rule".into())
    });
    check!("sphere and torus evaluations", || {
        let cases = [
            (0u32, 0u32, SymPoly::zero()),
            (0, 2, SymPoly::one()),
            (1, 0, SymPoly::one()),
        ];
        for (g, d, expected) in cases {
            let report = closed_surface(g, d)
                .evaluate(EvalMode::Homogeneous)
                .map_err(|e| e.to_string())?;
            if report.value != Some(expected) {
                return Err(format!("surface genus {g} dots {d} wrong"));
            }
        }
        Ok("sphere 0, dotted sphere 1, torus 1".into())
    });
    check!("dodecahedron double-cone colorings", || {
        let w = builtin_web("dodecahedron").map_err(|e| e.to_string())?;
        let p = w.kempe_partition();
        let same = double_cone(&w, &p.classes[0][0], &p.classes[0][0], &BTreeMap::new())
            .map_err(|e| e.to_string())?;
        let diff = double_cone(&w, &p.classes[0][0], &p.classes[1][0], &BTreeMap::new())
            .map_err(|e| e.to_string())?;
        let n_same = same
            .enumerate_admissible_colorings()
            .map_err(|e| e.to_string())?
            .len();
        let n_diff = diff
            .enumerate_admissible_colorings()
            .map_err(|e| e.to_string())?
            .len();
        let v_diff = diff
            .evaluate(EvalMode::Homogeneous)
            .map_err(|e| e.to_string())?
            .value
            .expect("homogeneous");
        ensure(
            n_same == 6 && n_diff == 0 && v_diff.is_zero(),
            format!("same class: {n_same} colorings; distinct classes: {n_diff}, value 0"),
        )
    });
    check!("cube double cone is rejected as inhomogeneous", || {
        let w = builtin_web("cube").map_err(|e| e.to_string())?;
        let c = w.tait_colorings().into_iter().next().expect("colorable");
        match double_cone(&w, &c, &c, &BTreeMap::new()) {
            Err(FoamError::NotHomogeneous(_)) => Ok("rejected".into()),
            other => Err(format!("expected inhomogeneity rejection, got {other:?}")),
        }
    });
    check!("square-web counterexample fraction", || {
        let report = square_counterexample()
            .evaluate(EvalMode::Raw)
            .map_err(|e| e.to_string())?;
        let expected = Gf2Fraction::new(
            Gf2Poly::from_terms([
                [0, 0, 0],
                [2, 0, 0],
                [0, 2, 0],
                [0, 0, 2],
                [1, 1, 0],
                [1, 0, 1],
                [0, 1, 1],
            ]),
            [1, 1, 1],
        );
        ensure(
            report.raw == expected && !report.homogeneous,
            format!("value {}", report.raw),
        )
    });
    check!("ladder square web evaluates to zero", || {
        let w = builtin_web("square").map_err(|e| e.to_string())?;
        let c = w.tait_colorings().into_iter().next().expect("colorable");
        let dots: BTreeMap<String, u32> = [("e0".to_string(), 2), ("e1".to_string(), 1)].into();
        let report = double_cone(&w, &c, &c, &dots)
            .map_err(|e| e.to_string())?
            .evaluate(EvalMode::Raw)
            .map_err(|e| e.to_string())?;
        ensure(report.raw.is_zero(), format!("value {}", report.raw))
    });
    check!("generator family sizes", || {
        let theta = builtin_web("theta").map_err(|e| e.to_string())?;
        let dodec = builtin_web("dodecahedron").map_err(|e| e.to_string())?;
        let k4 = builtin_web("k4").map_err(|e| e.to_string())?;
        let nt = build_generator_family(&theta, None)
            .map_err(|e| e.to_string())?
            .size();
        let nd = build_generator_family(&dodec, None)
            .map_err(|e| e.to_string())?
            .size();
        let nk = build_generator_family(&k4, None)
            .map_err(|e| e.to_string())?
            .size();
        ensure(
            nt == 6 && nd == 60 && nk == 6,
            format!("theta {nt}, k4 {nk}, dodecahedron {nd}"),
        )
    });
    check!("theta pairing identity over 36 composites", || {
        let theta = builtin_web("theta").map_err(|e| e.to_string())?;
        let fam = build_generator_family(&theta, None).map_err(|e| e.to_string())?;
        let report = verify_idempotent_identity(&fam).map_err(|e| e.to_string())?;
        ensure(
            report.passed() && report.entries_checked == 36,
            format!(
                "{} entries, identity and idempotent",
                report.entries_checked
            ),
        )
    });
    check!("theta state space is [2][3] under id, E and 0", || {
        let theta = builtin_web("theta").map_err(|e| e.to_string())?;
        let fam = build_generator_family(&theta, None).map_err(|e| e.to_string())?;
        let pm = pairing_matrix(&fam, &BaseChange::Identity).map_err(|e| e.to_string())?;
        let expected = Laurent::quantum(2).mul(&Laurent::quantum(3));
        for phi in [BaseChange::Identity, BaseChange::PhiE, BaseChange::Phi0] {
            let spec = pm.specialize(&phi).map_err(|e| e.to_string())?;
            let r = state_space_from_pairing(&fam, &spec).map_err(|e| e.to_string())?;
            if r.rank != 6 || r.graded_rank_centered != expected || !r.pairing_is_identity {
                return Err(format!(
                    "under phi_{}: rank {}, {}",
                    r.phi, r.rank, r.graded_rank_centered
                ));
            }
        }
        Ok("rank 6, centered q^3 + 2*q + 2*q^-1 + q^-3".into())
    });
    check!("empty web state space", || {
        let fam = build_generator_family(&Web::empty(), None).map_err(|e| e.to_string())?;
        let pm = pairing_matrix(&fam, &BaseChange::Identity).map_err(|e| e.to_string())?;
        let r = state_space_from_pairing(&fam, &pm).map_err(|e| e.to_string())?;
        ensure(
            r.rank == 1 && r.graded_rank_centered == Laurent::one(),
            format!("rank {}, graded rank {}", r.rank, r.graded_rank_centered),
        )
    });
    check!("rank drop of the Gram matrix (E)", || {
        let m = GradedMatrix::new(vec![3], vec![3], vec![vec![EPoly::var()]])
            .map_err(|e| e.to_string())?;
        let over_e = graded_rank(&m, &BaseChange::PhiE);
        let over_k = graded_rank(&m, &BaseChange::Phi0);
        ensure(
            over_e.rank == 1 && !over_e.unimodular && over_k.rank == 0,
            format!(
                "rank {} over GF(2)[E], {} after E -> 0",
                over_e.rank, over_k.rank
            ),
        )
    });
    check!("dodecahedron pairing and state space", || {
        let w = builtin_web("dodecahedron").map_err(|e| e.to_string())?;
        let fam = build_generator_family(&w, None).map_err(|e| e.to_string())?;
        let pm = pairing_matrix(&fam, &BaseChange::Identity).map_err(|e| e.to_string())?;
        if !pm.is_identity() {
            return Err("pairing matrix is not the identity".into());
        }
        let expected = Laurent::quantum(2).mul(&Laurent::quantum(3)).scale(10);
        for phi in [BaseChange::PhiE, BaseChange::Phi0] {
            let spec = pm.specialize(&phi).map_err(|e| e.to_string())?;
            let r = state_space_from_pairing(&fam, &spec).map_err(|e| e.to_string())?;
            if r.rank != 60 || r.graded_rank_centered != expected {
                return Err(format!(
                    "under phi_{}: rank {}, {}",
                    r.phi, r.rank, r.graded_rank_centered
                ));
            }
        }
        Ok("60x60 identity; rank 60; centered 10*q^3 + 20*q + 20*q^-1 + 10*q^-3".into())
    });

    out
}

pub fn run(out: OutputArgs) -> Result<(), CliError> {
    let t0 = Instant::now();
    let mut human = String::new();
    let mut rows = Vec::new();
    let mut failures = 0usize;
    let list = checks();
    let total = list.len();
    for (name, body) in list {
        let result = body();
        let (pass, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if !pass {
            failures += 1;
        }
        human.push_str(&format!(
            "[{}] {name}: {detail}\n",
            if pass { "PASS" } else { "FAIL" }
        ));
        rows.push(json!({"name": name, "pass": pass, "detail": detail}));
    }
    human.push_str(&format!(
        "{}/{} checks passed in {:.2}s",
        total - failures,
        total,
        t0.elapsed().as_secs_f64()
    ));
    let value = json!({
        "checks": rows,
        "passed": total - failures,
        "total": total,
        "seconds": t0.elapsed().as_secs_f64(),
    });
    emit(&out, human, value)?;
    if failures == 0 {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!(
            "{failures} of {total} selftest checks failed"
        )))
    }
}
