//! Parameter literals: decimals select the float backend, integers and
//! `p/q` fractions the exact one.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use flagdt_core::{Error, Result, StructureParams};

#[derive(Clone, Debug, PartialEq)]
pub enum Literal {
    Exact(BigRational),
    Float(f64),
}

impl Literal {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let is_exact = !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || matches!(c, '/' | '-' | '+'));
        if is_exact {
            let q = match s.split_once('/') {
                Some((n, d)) => {
                    let (n, d) = (parse_int(n, s)?, parse_int(d, s)?);
                    if d == 0.into() {
                        return Err(Error::InvalidParams(format!("zero denominator in {s:?}")));
                    }
                    BigRational::new(n, d)
                }
                None => BigRational::from_integer(parse_int(s, s)?),
            };
            return Ok(Literal::Exact(q));
        }
        f64::from_str(s)
            .ok()
            .filter(|x| x.is_finite())
            .map(Literal::Float)
            .ok_or_else(|| Error::InvalidParams(format!("cannot parse {s:?} as a number")))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Literal::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Literal::Float(x) => *x,
        }
    }
}

fn parse_int(part: &str, whole: &str) -> Result<num_bigint::BigInt> {
    part.parse()
        .map_err(|_| Error::InvalidParams(format!("cannot parse {whole:?} as a rational")))
}

/// Parsed `A₁ A₂ A₃ ε₁ ε₂ ε₃`, validated on both backends.
#[derive(Clone, Debug)]
pub struct ParamInput {
    pub float: StructureParams,
    pub exact: Option<StructureParams<BigRational>>,
}

impl ParamInput {
    pub fn parse(raw: &[String]) -> Result<Self> {
        if raw.len() != 6 {
            return Err(Error::InvalidParams(format!("expected 6 values A₁ A₂ A₃ ε₁ ε₂ ε₃, got {}", raw.len())));
        }
        let lits = raw.iter().map(|s| Literal::parse(s)).collect::<Result<Vec<_>>>()?;
        let f: Vec<f64> = lits.iter().map(Literal::to_f64).collect();
        let float = StructureParams::from_f64([f[0], f[1], f[2]], [f[3], f[4], f[5]])?;
        let exact: Option<Vec<BigRational>> = lits
            .iter()
            .map(|l| match l {
                Literal::Exact(q) => Some(q.clone()),
                Literal::Float(_) => None,
            })
            .collect();
        let exact = match exact {
            Some(q) => Some(StructureParams::new(
                [q[0].clone(), q[1].clone(), q[2].clone()],
                [q[3].clone(), q[4].clone(), q[5].clone()],
            )?),
            None => None,
        };
        Ok(ParamInput { float, exact })
    }

    pub fn backend(&self) -> &'static str {
        if self.exact.is_some() {
            "exact"
        } else {
            "float"
        }
    }
}
