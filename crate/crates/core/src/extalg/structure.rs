//! Structure equations of the invariant coframe.
//!
//! The table is derived at first use by expanding `dμ = −μ∧μ` for the
//! Maurer-Cartan form
//!
//! ```text
//!         ⎡ iβ₁        θ₃ + iη₃   −θ₂ + iη₂ ⎤
//! μ   =   ⎢ −θ₃ + iη₃  iβ₂         θ₁ + iη₁ ⎥ ,   β₃ = −(β₁ + β₂)
//!         ⎣ θ₂ + iη₂   −θ₁ + iη₁  iβ₃       ⎦
//! ```
//!
//! over the Gaussian rationals and reading off the real 2-forms `de^i`.

use std::sync::OnceLock;

use super::coframe::{CoframeIndex, COFRAME_DIM};
use super::form::Form;
use super::scalar::{ExactComplex, Rational, Scalar};
use crate::error::{Error, Result};

/// `de^i` for each basis 1-form, with exact rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTable {
    derivatives: [Form<Rational>; COFRAME_DIM],
}

impl StructureTable {
    /// The validated table of SU(3), derived once.
    pub fn standard() -> &'static StructureTable {
        static TABLE: OnceLock<StructureTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            StructureTable::derive_from_maurer_cartan()
                .expect("Maurer-Cartan expansion must yield a valid structure table")
        })
    }

    /// Builds a table from explicit entries and checks `d∘d = 0` exactly.
    pub fn new(derivatives: [Form<Rational>; COFRAME_DIM]) -> Result<Self> {
        for (i, d) in derivatives.iter().enumerate() {
            if !d.is_empty() && d.homogeneous_degree() != Some(2) {
                return Err(Error::Inconsistent {
                    check: "structure-table",
                    detail: format!("d{} is not a 2-form", CoframeIndex::ALL[i]),
                });
            }
        }
        let table = StructureTable { derivatives };
        if let Some(i) = table.d_squared_failures().first() {
            return Err(Error::Inconsistent {
                check: "structure-table",
                detail: format!("d(d{}) != 0", CoframeIndex::ALL[*i]),
            });
        }
        Ok(table)
    }

    pub fn derivative(&self, i: CoframeIndex) -> &Form<Rational> {
        &self.derivatives[i.index()]
    }

    /// Basis indices on which `d(de^i)` is not identically zero.
    pub fn d_squared_failures(&self) -> Vec<usize> {
        (0..COFRAME_DIM)
            .filter(|&i| !self.derivatives[i].d(self).is_empty())
            .collect()
    }

    /// Expands `dμ = −μ∧μ` symbolically.
    pub fn derive_from_maurer_cartan() -> Result<Self> {
        let mu = maurer_cartan_matrix();
        let mut dmu: [[Form<ExactComplex>; 3]; 3] = Default::default();
        for (a, row) in dmu.iter_mut().enumerate() {
            for (c, entry) in row.iter_mut().enumerate() {
                let mut acc = Form::zero();
                for b in 0..3 {
                    acc = acc + mu[a][b].wedge(&mu[b][c]);
                }
                *entry = -acc;
            }
        }

        let minus_i = -ExactComplex::i();
        let real = |f: &Form<ExactComplex>, what: &str| -> Result<Form<Rational>> {
            if !f.im().is_empty() {
                return Err(Error::Inconsistent {
                    check: "maurer-cartan",
                    detail: format!("{what} has a non-real coefficient"),
                });
            }
            Ok(f.map(|c| c.re.clone()))
        };
        let db1 = real(&dmu[0][0].scale(&minus_i), "dβ₁")?;
        let db2 = real(&dmu[1][1].scale(&minus_i), "dβ₂")?;
        // μ₂₃ = θ₁ + iη₁, μ₃₁ = θ₂ + iη₂, μ₁₂ = θ₃ + iη₃
        let pairs = [(1, 2), (2, 0), (0, 1)];
        let mut eta = Vec::new();
        let mut theta = Vec::new();
        for (a, c) in pairs {
            theta.push(dmu[a][c].re().map(|z| z.re.clone()));
            eta.push(dmu[a][c].im().map(|z| z.re.clone()));
            // anti-Hermitian partner: μ_ca = −θ + iη
            let partner = dmu[c][a].clone();
            let expected = dmu[a][c].conj().scale(&-ExactComplex::one());
            if partner != expected {
                return Err(Error::Inconsistent {
                    check: "maurer-cartan",
                    detail: format!("entries ({a},{c}) and ({c},{a}) are not anti-Hermitian"),
                });
            }
        }
        let trace = dmu[0][0].clone() + dmu[1][1].clone() + dmu[2][2].clone();
        if !trace.is_empty() {
            return Err(Error::Inconsistent {
                check: "maurer-cartan",
                detail: "dμ is not traceless".into(),
            });
        }
        StructureTable::new([
            db1,
            db2,
            eta[0].clone(),
            theta[0].clone(),
            eta[1].clone(),
            theta[1].clone(),
            eta[2].clone(),
            theta[2].clone(),
        ])
    }
}

fn maurer_cartan_matrix() -> [[Form<ExactComplex>; 3]; 3] {
    use CoframeIndex::*;
    let e = |i: CoframeIndex| Form::<ExactComplex>::generator(i);
    let i = |f: Form<ExactComplex>| f.times_i();
    let b3 = -(e(Beta1) + e(Beta2));
    [
        [i(e(Beta1)), e(Theta3) + i(e(Eta3)), -e(Theta2) + i(e(Eta2))],
        [-e(Theta3) + i(e(Eta3)), i(e(Beta2)), e(Theta1) + i(e(Eta1))],
        [e(Theta2) + i(e(Eta2)), -e(Theta1) + i(e(Eta1)), i(b3)],
    ]
}

/// Exterior derivative of `f` with respect to `table`.
pub fn exterior_derivative<S: Scalar>(f: &Form<S>, table: &StructureTable) -> Form<S> {
    f.d(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extalg::coframe::Blade;
    use crate::extalg::scalar::ratio;

    fn two_form(i: usize, j: usize) -> Blade {
        Blade::from_indices(&[i, j]).unwrap()
    }

    #[test]
    fn d_squared_vanishes_exactly() {
        let t = StructureTable::standard();
        assert!(t.d_squared_failures().is_empty());
        for i in CoframeIndex::ALL {
            let f = Form::<Rational>::generator(i);
            assert!(f.d(t).d(t).is_empty());
        }
    }

    #[test]
    fn isotropy_derivatives() {
        use CoframeIndex::*;
        let t = StructureTable::standard();
        // dβ₁ = 2η₃∧θ₃ − 2η₂∧θ₂, dβ₂ = 2η₁∧θ₁ − 2η₃∧θ₃
        let db1 = Form::from_terms([
            (two_form(Eta3.index(), Theta3.index()), ratio(2, 1)),
            (two_form(Eta2.index(), Theta2.index()), ratio(-2, 1)),
        ]);
        let db2 = Form::from_terms([
            (two_form(Eta1.index(), Theta1.index()), ratio(2, 1)),
            (two_form(Eta3.index(), Theta3.index()), ratio(-2, 1)),
        ]);
        assert_eq!(t.derivative(Beta1), &db1);
        assert_eq!(t.derivative(Beta2), &db2);
    }

    #[test]
    fn rejects_tables_with_nonzero_d_squared() {
        let mut entries = StructureTable::standard().derivatives.clone();
        // perturb dη₁ by a non-closed term
        entries[2] = entries[2].clone()
            + Form::monomial(two_form(4, 6), ratio(1, 1));
        assert!(StructureTable::new(entries).is_err());
    }

    #[test]
    fn every_entry_is_a_two_form() {
        let t = StructureTable::standard();
        for i in CoframeIndex::ALL {
            assert_eq!(t.derivative(i).homogeneous_degree(), Some(2));
        }
    }
}
