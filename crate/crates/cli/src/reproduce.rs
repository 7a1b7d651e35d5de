//! End-to-end reproduction of the dodecahedron results.

use std::collections::BTreeSet;
use std::time::Instant;

use serde_json::json;

use foamlab_core::gf2::{BaseChange, Laurent};
use foamlab_core::statespace::{build_generator_family, pairing_matrix, state_space_from_pairing};
use foamlab_core::web::{builtin_web, color_permutations, TaitColoring};

use crate::output::{emit, CliError, OutputArgs};

struct Check {
    name: &'static str,
    expected: String,
    got: String,
    pass: bool,
}

impl Check {
    fn new(name: &'static str, expected: impl ToString, got: impl ToString) -> Self {
        let expected = expected.to_string();
        let got = got.to_string();
        let pass = expected == got;
        Check {
            name,
            expected,
            got,
            pass,
        }
    }
}

pub fn run(out: OutputArgs) -> Result<(), CliError> {
    let t0 = Instant::now();
    let mut checks: Vec<Check> = Vec::new();
    let web = builtin_web("dodecahedron").map_err(CliError::precondition)?;
    checks.push(Check::new(
        "vertex and edge counts",
        "20 vertices, 30 edges",
        format!(
            "{} vertices, {} edges",
            web.vertex_count(),
            web.edge_count()
        ),
    ));

    let partition = web.kempe_partition();
    checks.push(Check::new("tait colorings", 60, partition.coloring_count()));
    let sizes: BTreeSet<usize> = partition.classes.iter().map(|c| c.len()).collect();
    checks.push(Check::new(
        "kempe partition",
        "10 classes, all of size 6, homogeneous of degree 3",
        format!(
            "{} classes, sizes {:?}, homogeneous {} of degree {:?}",
            partition.class_count(),
            sizes,
            partition.homogeneous,
            partition.kempe_degree
        ),
    ));
    checks.last_mut().unwrap().pass = partition.class_count() == 10
        && sizes == BTreeSet::from([6])
        && partition.kempe_degree == Some(3);

    checks.push(Check::new("kempe-small", true, partition.kempe_small));

    let cycles = web.hamiltonian_cycles().map_err(CliError::precondition)?;
    checks.push(Check::new("hamiltonian cycles", 30, cycles.len()));

    // each Kempe class is a single orbit of the color permutations
    let class_sets: Vec<BTreeSet<TaitColoring>> = partition
        .classes
        .iter()
        .map(|c| c.iter().cloned().collect())
        .collect();
    let orbits_ok = class_sets.iter().all(|class| {
        let rep = class.iter().next().expect("nonempty class");
        let orbit: BTreeSet<TaitColoring> = color_permutations()
            .iter()
            .map(|p| rep.permute_colors(p))
            .collect();
        orbit == *class
    });
    checks.push(Check::new(
        "classes are color-permutation orbits",
        true,
        orbits_ok,
    ));

    let fam = build_generator_family(&web, None).map_err(CliError::from_statespace)?;
    checks.push(Check::new("generator family size", 60, fam.size()));

    let pm = pairing_matrix(&fam, &BaseChange::Identity).map_err(CliError::from_statespace)?;
    checks.push(Check::new(
        "pairing matrix is the 60x60 identity",
        true,
        pm.is_identity(),
    ));

    let expected_rank = Laurent::quantum(2).mul(&Laurent::quantum(3)).scale(10);
    for phi in [BaseChange::Phi0, BaseChange::PhiE] {
        let specialized = pm.specialize(&phi).map_err(CliError::from_statespace)?;
        let report =
            state_space_from_pairing(&fam, &specialized).map_err(CliError::from_statespace)?;
        let name: &'static str = match phi {
            BaseChange::Phi0 => "state space under phi_0",
            _ => "state space under phi_E",
        };
        checks.push(Check::new(
            name,
            format!("rank 60, centered graded rank {expected_rank}"),
            format!(
                "rank {}, centered graded rank {}",
                report.rank, report.graded_rank_centered
            ),
        ));
    }

    let elapsed = t0.elapsed();
    let passed = checks.iter().filter(|c| c.pass).count();
    let mut human = String::new();
    for c in &checks {
        human.push_str(&format!(
            "[{}] {}: expected {}, got {}\n",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.expected,
            c.got
        ));
    }
    human.push_str(&format!(
        "{passed}/{} checks passed in {:.2}s",
        checks.len(),
        elapsed.as_secs_f64()
    ));
    let value = json!({
        "checks": checks.iter().map(|c| json!({
            "name": c.name,
            "expected": c.expected,
            "got": c.got,
            "pass": c.pass,
        })).collect::<Vec<_>>(),
        "passed": passed,
        "total": checks.len(),
        "seconds": elapsed.as_secs_f64(),
    });
    emit(&out, human, value)?;
    if passed == checks.len() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!(
            "{} of {} dodecahedron checks failed",
            checks.len() - passed,
            checks.len()
        )))
    }
}
