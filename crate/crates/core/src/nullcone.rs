//! Invariants of the nilpotent cone of `g_1`: orbit dimensions, irreducible
//! components, rank, and the search for N-regular automorphisms.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chevalley::{LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::grading::{enumerate_kac_diagrams, KacDiagram, ThetaGrading};
use crate::linalg::{self, Q};
use crate::method1::{self, fmt_vec, OrbitRecord, SearchConfig};
use crate::method2;
use crate::rootsys::RootSystem;
use crate::weyl;

/// Coset index above which the automatic choice switches to Method II.
pub const METHOD_ONE_MAX_INDEX: u128 = 5000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    Auto,
    One,
    Two,
}

impl Method {
    /// The method actually used for a grading.
    pub fn resolve(self, gr: &ThetaGrading) -> Method {
        match self {
            Method::Auto if method1::coset_index(gr) <= METHOD_ONE_MAX_INDEX => Method::One,
            Method::Auto => Method::Two,
            m => m,
        }
    }
}

/// Runs the selected classification method.
pub fn classify(gr: &ThetaGrading, method: Method, cfg: &SearchConfig) -> Result<Vec<OrbitRecord>> {
    match method.resolve(gr) {
        Method::One => method1::method1(gr, cfg),
        _ => method2::method2(gr, cfg),
    }
}

/// `dim [g_0, e]` for `e ∈ g_1`.
pub fn orbit_dimension(gr: &ThetaGrading, e: &LieElement) -> usize {
    if e.is_zero() {
        return 0;
    }
    let alg = gr.algebra();
    let den = linalg::common_denominator(&e.coeffs);
    let coef: Vec<(usize, BigInt)> = e
        .terms()
        .map(|(b, c)| (b, (c * Q::from_integer(den.clone())).to_integer()))
        .collect();
    let phi1 = gr.phi1();
    let row: std::collections::HashMap<usize, usize> =
        phi1.iter().enumerate().map(|(i, &r)| (alg.x(r), i)).collect();
    let cols = gr.component_basis(0);
    let mut m = vec![vec![BigInt::zero(); cols.len()]; phi1.len()];
    for (j, &x) in cols.iter().enumerate() {
        for (b, c) in &coef {
            for (k, n) in alg.bracket_basis(x, *b) {
                if let Some(&i) = row.get(&k) {
                    m[i][j] += c * BigInt::from(n);
                }
            }
        }
    }
    linalg::rank_int(m)
}

/// Weighted Dynkin diagram of the `G`-orbit whose characteristic is `h`.
pub fn ambient_wdd(rs: &RootSystem, h: &[Q]) -> Result<Vec<u8>> {
    let vals = weyl::to_dominant(rs, &weyl::values_of_cartan(rs, h));
    (0..rs.rank())
        .map(|i| {
            let v = &vals[i];
            if v.is_integer() && *v >= Q::zero() && *v <= Q::from_integer(2.into()) {
                Ok(v.to_integer().try_into().expect("0..=2"))
            } else {
                Err(Error::Inconsistent(format!(
                    "{} is not the characteristic of a nilpotent orbit",
                    fmt_vec(h)
                )))
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullconeSummary {
    /// Nonzero orbits.
    pub orbit_count: usize,
    pub component_count: usize,
    pub component_dim: usize,
    pub rank: usize,
    pub nregular: bool,
    pub very_nregular: bool,
}

impl NullconeSummary {
    /// Component count with a `*` when not very N-regular.
    pub fn components_label(&self) -> String {
        if self.nregular && !self.very_nregular {
            format!("{}*", self.component_count)
        } else {
            self.component_count.to_string()
        }
    }
}

pub fn summarize(gr: &ThetaGrading, records: &[OrbitRecord]) -> NullconeSummary {
    let dim1 = gr.dim(1);
    let nonzero: Vec<&OrbitRecord> = records.iter().filter(|r| !r.is_zero()).collect();
    let component_dim = nonzero.iter().map(|r| r.dim).max().unwrap_or(0);
    let top: Vec<&OrbitRecord> = nonzero
        .iter()
        .copied()
        .filter(|r| r.dim == component_dim)
        .collect();
    let component_count = top.len().max(1);
    let nregular = records.iter().any(|r| !r.wdd.is_empty() && r.wdd.iter().all(|&d| d == 2));
    let very_nregular = nregular && top.windows(2).all(|w| w[0].wdd == w[1].wdd);
    NullconeSummary {
        orbit_count: nonzero.len(),
        component_count,
        component_dim,
        rank: dim1 - component_dim,
        nregular,
        very_nregular,
    }
}

#[derive(Clone, Debug)]
pub struct SurveyHit {
    pub kac: KacDiagram,
    pub summary: NullconeSummary,
    pub records: Vec<OrbitRecord>,
    pub method: Method,
}

/// Finds the N-regular inner automorphism of order `m`.
///
/// Only Kac diagrams whose component dimensions agree with those of the
/// principal grading of order `m` are classified: the N-regular grading is
/// conjugate to that grading, so other diagrams cannot qualify.
pub fn nregular_survey(alg: &Arc<LieAlgebra>, m: u32, method: Method, cfg: &SearchConfig) -> Result<SurveyHit> {
    let rs = alg.root_system();
    let principal = ThetaGrading::principal(Arc::clone(alg), m)?;
    let dims = principal.dims();
    let candidates: Vec<ThetaGrading> = enumerate_kac_diagrams(rs, m)
        .into_iter()
        .filter(|k| k.gcd() == 1)
        .map(|k| ThetaGrading::from_kac(Arc::clone(alg), &k))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| g.dims() == dims)
        .collect();
    log::info!(
        "survey {} m={}: {} diagrams with principal dimensions",
        rs.simple_type(),
        m,
        candidates.len()
    );
    let results: Vec<Option<SurveyHit>> = candidates
        .par_iter()
        .map(|g| {
            let used = method.resolve(g);
            let records = classify(g, used, cfg)?;
            let summary = summarize(g, &records);
            Ok(summary.nregular.then(|| SurveyHit {
                kac: g.kac().expect("built from a Kac diagram").clone(),
                summary,
                records,
                method: used,
            }))
        })
        .collect::<Result<_>>()?;
    let mut hits: Vec<SurveyHit> = results.into_iter().flatten().collect();
    match hits.len() {
        1 => Ok(hits.pop().expect("one hit")),
        n => Err(Error::Inconsistent(format!(
            "{n} N-regular Kac diagrams of order {m} for {}",
            rs.simple_type()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::rootsys::RootSystem;

    fn alg(t: &str) -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::new(Arc::new(RootSystem::new(t.parse().unwrap()))))
    }

    #[test]
    fn orbit_dimension_examples() {
        let a = alg("A1");
        let g = ThetaGrading::from_kac(Arc::clone(&a), &"1,1".parse().unwrap()).unwrap();
        assert_eq!(orbit_dimension(&g, &a.zero()), 0);
        assert_eq!(orbit_dimension(&g, &a.basis_element(0)), 1);
    }

    #[test]
    fn ambient_wdd_examples() {
        let a = alg("A2");
        let rs = a.root_system();
        assert_eq!(ambient_wdd(rs, &[q(0), q(0)]).unwrap(), vec![0, 0]);
        assert_eq!(ambient_wdd(rs, &[q(2), q(2)]).unwrap(), vec![2, 2]);
        // characteristic of x_{α1}: h_{α1}, conjugate to h_1 + h_2
        assert_eq!(ambient_wdd(rs, &[q(1), q(0)]).unwrap(), vec![1, 1]);
        assert!(ambient_wdd(rs, &[q(3), q(3)]).is_err());
    }

    #[test]
    fn g2_survey_order_two() {
        let hit = nregular_survey(&alg("G2"), 2, Method::Auto, &SearchConfig::default()).unwrap();
        let s = hit.summary;
        assert_eq!(
            (s.orbit_count, s.component_count, s.component_dim, s.rank),
            (5, 1, 6, 2)
        );
        assert!(s.very_nregular);
    }
}
