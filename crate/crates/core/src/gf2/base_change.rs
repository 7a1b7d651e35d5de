use std::fmt;

use super::epoly::EPoly;
use super::symmetric::SymPoly;

/// A graded ring homomorphism out of `R = GF(2)[E1, E2, E3]`.
///
/// `PhiE` sends E1, E2 to 0 and E3 to E; `Phi0` kills all three (taking the
/// constant term); `Custom` records arbitrary images of E1, E2, E3 in
/// `GF(2)[E]`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub enum BaseChange {
    #[default]
    Identity,
    PhiE,
    Phi0,
    Custom([EPoly; 3]),
}

/// An element of the target ring of a base change.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingElem {
    /// Element of R itself (identity base change).
    Sym(SymPoly),
    /// Element of `GF(2)[E]`; constants double as GF(2) scalars.
    E(EPoly),
}

impl BaseChange {
    pub fn phi_e() -> Self {
        BaseChange::PhiE
    }

    pub fn phi_0() -> Self {
        BaseChange::Phi0
    }

    pub fn apply(&self, s: &SymPoly) -> RingElem {
        match self {
            BaseChange::Identity => RingElem::Sym(s.clone()),
            _ => RingElem::E(self.apply_to_epoly(s)),
        }
    }

    /// Image in `GF(2)[E]` for the non-identity kinds. For `Phi0` the result
    /// is a constant: the value of the constant term.
    pub fn apply_to_epoly(&self, s: &SymPoly) -> EPoly {
        match self {
            BaseChange::Identity => {
                panic!("identity base change has target R, not GF(2)[E]")
            }
            BaseChange::PhiE => {
                let mut out = EPoly::zero();
                for m in s.terms() {
                    if m[0] == 0 && m[1] == 0 {
                        out = out.add(&EPoly::monomial(m[2] as u32));
                    }
                }
                out
            }
            BaseChange::Phi0 => {
                if s.constant_term() {
                    EPoly::one()
                } else {
                    EPoly::zero()
                }
            }
            BaseChange::Custom(images) => {
                let mut out = EPoly::zero();
                for m in s.terms() {
                    let mut t = EPoly::one();
                    for i in 0..3 {
                        for _ in 0..m[i] {
                            t = t.mul(&images[i]);
                        }
                    }
                    out = out.add(&t);
                }
                out
            }
        }
    }

    /// Whether the target is the commutative ring GF(2) (every image is a
    /// constant polynomial).
    pub fn target_is_gf2(&self) -> bool {
        match self {
            BaseChange::Phi0 => true,
            BaseChange::Custom(images) => images.iter().all(|p| p.degree().unwrap_or(0) == 0),
            _ => false,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            BaseChange::Identity => "id",
            BaseChange::PhiE => "E",
            BaseChange::Phi0 => "0",
            BaseChange::Custom(_) => "custom",
        }
    }
}

impl fmt::Display for BaseChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseChange::Custom(images) => {
                write!(
                    f,
                    "custom(E1 -> {}, E2 -> {}, E3 -> {})",
                    images[0], images[1], images[2]
                )
            }
            other => write!(f, "phi_{}", other.label()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_e_keeps_only_e3_powers() {
        // E3^2 + E1*E2 maps to E^2
        let s = SymPoly::from_terms([[0, 0, 2], [1, 1, 0]]);
        assert_eq!(BaseChange::PhiE.apply_to_epoly(&s), EPoly::monomial(2));
    }

    #[test]
    fn phi_0_takes_constant_term() {
        let s = SymPoly::from_terms([[0, 0, 0], [1, 0, 0]]);
        assert_eq!(BaseChange::Phi0.apply_to_epoly(&s), EPoly::one());
        assert_eq!(
            BaseChange::Phi0.apply_to_epoly(&SymPoly::elementary(1)),
            EPoly::zero()
        );
    }

    #[test]
    fn identity_returns_input() {
        let s = SymPoly::from_terms([[1, 0, 0]]);
        assert_eq!(BaseChange::Identity.apply(&s), RingElem::Sym(s));
    }

    #[test]
    fn custom_matches_phi_e() {
        let custom = BaseChange::Custom([EPoly::zero(), EPoly::zero(), EPoly::var()]);
        let s = SymPoly::from_terms([[0, 0, 1], [2, 1, 1]]);
        assert_eq!(
            custom.apply_to_epoly(&s),
            BaseChange::PhiE.apply_to_epoly(&s)
        );
    }
}
