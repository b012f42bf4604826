//! The Weyl group `S₃` acting on roots and structure parameters.

use serde::{Deserialize, Serialize};

use crate::bundles::Root;
use crate::extalg::RealScalar;
use crate::params::StructureParams;

/// Generators `p₁, p₂, p₃` (transpositions, which also flip `ε`) and the
/// order-3 element `σ = p₁∘p₂` (apply `p₂` first).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylElement {
    P1,
    P2,
    P3,
    Sigma,
}

impl WeylElement {
    pub const ALL: [WeylElement; 4] = [WeylElement::P1, WeylElement::P2, WeylElement::P3, WeylElement::Sigma];

    /// New slot `i` takes old slot `perm[i]`.
    pub fn permutation(self) -> [usize; 3] {
        match self {
            WeylElement::P1 => [0, 2, 1],
            WeylElement::P2 => [2, 1, 0],
            WeylElement::P3 => [1, 0, 2],
            WeylElement::Sigma => [2, 0, 1],
        }
    }

    /// Multiplier applied to every `ε_i`.
    pub fn eps_sign(self) -> i64 {
        match self {
            WeylElement::Sigma => 1,
            _ => -1,
        }
    }

    pub fn act_root(self, root: Root) -> Root {
        let perm = self.permutation();
        let new_slot = perm.iter().position(|&p| p == root.slot()).expect("permutation");
        Root::from_slot(new_slot).expect("slot < 3")
    }

    pub fn act_params<R: RealScalar>(self, params: &StructureParams<R>) -> StructureParams<R> {
        params.relabel(self.permutation(), self.eps_sign())
    }
}

/// `(root, params) ↦ (g·root, g·params)`.
pub fn weyl_act<R: RealScalar>(g: WeylElement, root: Root, params: &StructureParams<R>) -> (Root, StructureParams<R>) {
    (g.act_root(root), g.act_params(params))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_cycles_roots() {
        use WeylElement::*;
        assert_eq!(Sigma.act_root(Root::R1), Root::R2);
        assert_eq!(Sigma.act_root(Root::R2), Root::R3);
        assert_eq!(Sigma.act_root(Root::R3), Root::R1);
        let p = StructureParams::from_f64([1.0, 2.0, 3.0], [0.5, -1.0, 2.0]).unwrap();
        let mut q = p.clone();
        for _ in 0..3 {
            q = Sigma.act_params(&q);
        }
        assert_eq!(q, p);
    }

    #[test]
    fn generators_match_root_action() {
        use WeylElement::*;
        assert_eq!(P1.act_root(Root::R1), Root::R1);
        assert_eq!(P1.act_root(Root::R2), Root::R3);
        assert_eq!(P2.act_root(Root::R2), Root::R2);
        assert_eq!(P2.act_root(Root::R1), Root::R3);
        assert_eq!(P3.act_root(Root::R3), Root::R3);
        assert_eq!(P3.act_root(Root::R1), Root::R2);
    }

    #[test]
    fn sigma_is_p1_after_p2() {
        use WeylElement::*;
        let p = StructureParams::from_f64([1.0, 2.0, 3.0], [0.5, -1.0, 2.0]).unwrap();
        assert_eq!(Sigma.act_params(&p), P1.act_params(&P2.act_params(&p)));
        for r in Root::ALL {
            assert_eq!(Sigma.act_root(r), P1.act_root(P2.act_root(r)));
        }
        assert_eq!(Sigma.act_params(&p).a(), &[3.0, 1.0, 2.0]);
        assert_eq!(Sigma.act_params(&p).eps(), &[2.0, 0.5, -1.0]);
    }

    #[test]
    fn involutions() {
        let p = StructureParams::from_f64([1.0, 2.0, 3.0], [0.5, -1.0, 2.0]).unwrap();
        for g in [WeylElement::P1, WeylElement::P2, WeylElement::P3] {
            assert_eq!(g.act_params(&g.act_params(&p)), p);
        }
    }
}
