//! Property tests for the ring and web invariants.

use proptest::prelude::*;

use foamlab_core::gf2::{Gf2Fraction, Gf2Poly, SymPoly};
use foamlab_core::web::{builtin_web, color_permutations, ColorPair, Web};

fn arb_poly() -> impl Strategy<Value = Gf2Poly> {
    proptest::collection::vec((0u16..4, 0u16..4, 0u16..4), 0..8)
        .prop_map(|v| Gf2Poly::from_terms(v.into_iter().map(|(a, b, c)| [a, b, c])))
}

fn arb_sympoly() -> impl Strategy<Value = SymPoly> {
    proptest::collection::vec((0u16..3, 0u16..3, 0u16..3), 0..6)
        .prop_map(|v| SymPoly::from_terms(v.into_iter().map(|(a, b, c)| [a, b, c])))
}

fn arb_fraction() -> impl Strategy<Value = Gf2Fraction> {
    (arb_poly(), 0u16..3, 0u16..3, 0u16..3).prop_map(|(p, a, b, c)| Gf2Fraction::new(p, [a, b, c]))
}

fn symmetrize(p: &Gf2Poly) -> Gf2Poly {
    let mut out = Gf2Poly::zero();
    for perm in color_permutations() {
        out = out.add(&p.permute_vars(perm));
    }
    out
}

fn test_webs() -> Vec<Web> {
    ["circle", "theta", "k4", "cube", "square"]
        .iter()
        .map(|n| builtin_web(n).unwrap())
        .collect()
}

proptest! {
    #[test]
    fn poly_addition_is_an_involution(p in arb_poly(), q in arb_poly()) {
        prop_assert_eq!(p.add(&q).add(&q), p);
    }

    #[test]
    fn poly_multiplication_distributes(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in arb_poly(), q in arb_poly()) {
        prop_assume!(!q.is_zero());
        let prod = p.mul(&q);
        if p.is_zero() {
            prop_assert!(prod.is_zero());
        } else {
            prop_assert_eq!(prod.divide_exact(&q), Some(p));
        }
    }

    #[test]
    fn fraction_reduction_is_idempotent(f in arb_fraction()) {
        let again = Gf2Fraction::new(f.numerator().clone(), f.denominator_exponents());
        prop_assert_eq!(f, again);
    }

    #[test]
    fn fraction_sum_is_order_independent(fs in proptest::collection::vec(arb_fraction(), 0..6)) {
        let forward = Gf2Fraction::sum(fs.iter());
        let reversed = Gf2Fraction::sum(fs.iter().rev());
        prop_assert_eq!(&forward, &reversed);
        if !fs.is_empty() {
            let rotated: Vec<_> = fs.iter().cycle().skip(fs.len() / 2 + 1).take(fs.len()).collect();
            prop_assert_eq!(&forward, &Gf2Fraction::sum(rotated.into_iter()));
        }
    }

    #[test]
    fn symmetric_rewrite_round_trips(p in arb_poly()) {
        let sym = symmetrize(&p);
        let e = SymPoly::rewrite(&sym).unwrap();
        prop_assert_eq!(e.expand(), sym);
    }

    #[test]
    fn elementary_basis_round_trips(s in arb_sympoly()) {
        prop_assert_eq!(SymPoly::rewrite(&s.expand()).unwrap(), s.clone());
        // and the expansion really is symmetric
        prop_assert!(s.expand().is_symmetric());
    }

    #[test]
    fn homogeneity_is_preserved_by_multiplication(
        a in (0u16..3, 0u16..3, 0u16..3),
        b in (0u16..3, 0u16..3, 0u16..3),
    ) {
        let p = SymPoly::monomial([a.0, a.1, a.2]);
        let q = SymPoly::monomial([b.0, b.1, b.2]);
        let (dp, dq) = (p.homogeneous_degree().unwrap(), q.homogeneous_degree().unwrap());
        prop_assert_eq!(p.mul(&q).homogeneous_degree(), Some(dp + dq));
    }

    #[test]
    fn bicolored_components_are_even_cycles_and_moves_are_involutions(
        widx in 0usize..5,
        cidx in 0usize..64,
        pidx in 0usize..3,
        kidx in 0usize..4,
    ) {
        let webs = test_webs();
        let web = &webs[widx];
        let colorings = web.tait_colorings();
        prop_assume!(!colorings.is_empty());
        let c = &colorings[cidx % colorings.len()];
        let pair = ColorPair::all()[pidx];
        let sub = web.bicolored_subgraph(c, pair).unwrap();
        for comp in &sub.components {
            let has_vertices = comp.iter().any(|e| !web.edge(e).unwrap().is_circle());
            if has_vertices {
                prop_assert_eq!(comp.len() % 2, 0, "odd cycle");
            }
        }
        if !sub.components.is_empty() {
            let comp = &sub.components[kidx % sub.components.len()];
            let moved = web.kempe_move(c, pair, comp).unwrap();
            // the moved coloring is a valid Tait coloring: the library
            // accepts it as input again
            let back = web.kempe_move(&moved, pair, comp).unwrap();
            prop_assert_eq!(&back, c);
        }
    }

    #[test]
    fn color_permutations_act_on_colorings(widx in 0usize..5, cidx in 0usize..64, pidx in 0usize..6) {
        let webs = test_webs();
        let web = &webs[widx];
        let colorings = web.tait_colorings();
        prop_assume!(!colorings.is_empty());
        let c = &colorings[cidx % colorings.len()];
        let perm = color_permutations()[pidx];
        let image = c.permute_colors(&perm);
        prop_assert!(colorings.contains(&image));
    }
}

#[test]
fn enumeration_is_deterministic() {
    for web in test_webs() {
        let a = web.tait_colorings();
        let b = web.tait_colorings();
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(
            a, sorted,
            "colorings must come out lexicographically sorted"
        );
    }
}
