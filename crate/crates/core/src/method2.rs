//! Nilpotent orbits in `g_1` through carrier algebras: regular Z-graded
//! semisimple subalgebras `s` with `dim s_0 = dim s_1`, described by a base
//! `Π = Π_0 ∪ Π_1` of degree-0 and degree-1 roots. Each locally flat
//! completion yields the characteristic `2h_0` of an orbit.

use std::collections::{BTreeSet, HashSet};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chevalley::{root_value, CartanElement, LieElement};
use crate::error::{Error, Result};
use crate::grading::ThetaGrading;
use crate::linalg::{self, q, Q};
use crate::method1::{decide_normal, finish_records, fmt_vec, OrbitRecord, SearchConfig};
use crate::pisys;
use crate::rootsys::{RootIndex, RootSystem};
use crate::weyl;

/// A base `Π_0 ∪ Π_1` with `Π_0 ⊂ Φ_0`, `Π_1 ⊂ Φ_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedCandidate {
    pub pi0: Vec<RootIndex>,
    pub pi1: Vec<RootIndex>,
}

impl GradedCandidate {
    pub fn roots(&self) -> Vec<RootIndex> {
        let mut r = self.pi0.clone();
        r.extend_from_slice(&self.pi1);
        r
    }

    pub fn is_empty(&self) -> bool {
        self.pi0.is_empty() && self.pi1.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletionResult {
    /// Defining element: `α(h_0) = deg(α)` on `Π`.
    pub h0: CartanElement,
    /// Basis of the Cartan elements killed by `Π`.
    pub z_basis: Vec<CartanElement>,
    pub psi0: Vec<RootIndex>,
    pub psi1: Vec<RootIndex>,
    pub flat: bool,
}

fn colored(c: &GradedCandidate) -> Vec<(RootIndex, u32)> {
    c.pi0
        .iter()
        .map(|&r| (r, 0))
        .chain(c.pi1.iter().map(|&r| (r, 1)))
        .collect()
}

/// Maximal `Π_1 ⊂ Φ_1` such that `Π_0 ∪ Π_1` is a π-system.
pub fn maximal_extensions(rs: &RootSystem, pi0: &[RootIndex], phi1: &[RootIndex]) -> Vec<Vec<RootIndex>> {
    let compatible = |set: &[RootIndex], r: RootIndex| -> bool {
        let mut all = set.to_vec();
        all.push(r);
        pi0.iter().chain(set).all(|&s| s != r && rs.sub(s, r).is_none())
            && {
                all.extend_from_slice(pi0);
                rs.independent(&all)
            }
    };
    let start: Vec<RootIndex> = phi1
        .iter()
        .copied()
        .filter(|&r| compatible(&[], r))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(
        cand: &[RootIndex],
        from: usize,
        cur: &mut Vec<RootIndex>,
        compatible: &dyn Fn(&[RootIndex], RootIndex) -> bool,
        out: &mut Vec<Vec<RootIndex>>,
    ) {
        let mut extended = false;
        for (i, &r) in cand.iter().enumerate() {
            if cur.contains(&r) || !compatible(cur, r) {
                continue;
            }
            extended = true;
            if i < from {
                continue;
            }
            cur.push(r);
            rec(cand, i + 1, cur, compatible, out);
            cur.pop();
        }
        if !extended {
            out.push(cur.clone());
        }
    }
    rec(&start, 0, &mut cur, &compatible, &mut out);
    out
}

/// The candidate set: every W_0-class of π-systems `Π_0` of `Φ_0`, each
/// maximal extension `Π_1` up to joint `W_0`-conjugacy, and all subsets of
/// those extensions. The empty candidate comes first.
pub fn candidate_pi_systems(gr: &ThetaGrading) -> Vec<GradedCandidate> {
    let rs = gr.root_system();
    let delta0 = gr.delta0();
    let p0 = pisys::classify_all_in(rs, delta0);
    let phi1 = gr.phi1();
    let maximal: Vec<GradedCandidate> = p0
        .par_iter()
        .flat_map_iter(|pi0| {
            let exts = maximal_extensions(rs, pi0, phi1);
            let mut reps: Vec<GradedCandidate> = Vec::new();
            for pi1 in exts {
                let c = GradedCandidate {
                    pi0: pi0.clone(),
                    pi1,
                };
                let cc = colored(&c);
                if !reps
                    .iter()
                    .any(|r| weyl::conjugate_colored_sets(rs, delta0, &colored(r), &cc))
                {
                    reps.push(c);
                }
            }
            reps
        })
        .collect();
    let mut seen: HashSet<GradedCandidate> = HashSet::new();
    let mut out = vec![GradedCandidate {
        pi0: Vec::new(),
        pi1: Vec::new(),
    }];
    seen.insert(out[0].clone());
    for c in maximal {
        let n = c.pi1.len();
        for mask in 0u32..(1 << n) {
            let pi1: Vec<RootIndex> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| c.pi1[i]).collect();
            let cand = GradedCandidate {
                pi0: c.pi0.clone(),
                pi1,
            };
            if seen.insert(cand.clone()) {
                out.push(cand);
            }
        }
    }
    out
}

/// Defining element and completion of the graded subalgebra with base
/// `cand`; `None` when the degrees cannot be realized.
pub fn completion(gr: &ThetaGrading, cand: &GradedCandidate) -> Result<Option<CompletionResult>> {
    if cand.is_empty() {
        return Err(Error::Precondition("empty candidate".into()));
    }
    let rs = gr.root_system();
    let l = rs.rank();
    let pi = cand.roots();
    let degs: Vec<Q> = cand
        .pi0
        .iter()
        .map(|_| Q::zero())
        .chain(cand.pi1.iter().map(|_| q(1)))
        .collect();
    // h_0 = Σ c_β h_β with Σ_β c_β <α, β^∨> = deg α
    let cm: Vec<Vec<Q>> = pi
        .iter()
        .map(|&a| pi.iter().map(|&b| q(rs.cartan_int(a, b))).collect())
        .collect();
    let Some(c) = linalg::solve(&cm, &degs, pi.len()) else {
        return Ok(None);
    };
    let mut h0 = vec![Q::zero(); l];
    for (cb, &b) in c.iter().zip(&pi) {
        for (i, k) in rs.coroot_coords(b).into_iter().enumerate() {
            h0[i] += cb * q(k);
        }
    }
    let rows: Vec<Vec<Q>> = pi
        .iter()
        .map(|&b| (0..l).map(|i| q(gr.algebra().root_on_simple_coroot(b, i))).collect())
        .collect();
    let z_basis = linalg::nullspace(&rows, l);
    let in_span = |r: RootIndex| {
        z_basis
            .iter()
            .all(|z| root_value(rs, r, z).is_zero())
    };
    let psi0: Vec<RootIndex> = gr
        .phi0()
        .iter()
        .copied()
        .filter(|&r| root_value(rs, r, &h0).is_zero() && in_span(r))
        .collect();
    let one = q(1);
    let psi1: Vec<RootIndex> = gr
        .phi1()
        .iter()
        .copied()
        .filter(|&r| root_value(rs, r, &h0) == one && in_span(r))
        .collect();
    let flat = pi.len() + psi0.len() == psi1.len();
    Ok(Some(CompletionResult {
        h0,
        z_basis,
        psi0,
        psi1,
        flat,
    }))
}

/// `W_0`-dominant conjugate of a Cartan element.
pub fn canonical_h(gr: &ThetaGrading, h: &[Q]) -> CartanElement {
    let rs = gr.root_system();
    let vals = weyl::to_subdominant(rs, gr.delta0(), &weyl::values_of_cartan(rs, h));
    crate::chevalley::cartan_from_values(rs, &vals[..rs.rank()])
}

/// Random element of the span of the `Ψ_1` root vectors in general
/// position, i.e. with `[s_0, e] = s_1`; `None` if none is found.
pub fn carrier_element(gr: &ThetaGrading, comp: &CompletionResult, seed: u64) -> Option<LieElement> {
    let alg = gr.algebra();
    let rs = alg.root_system();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // s'_0 = t + Σ_{Ψ_0} g_α with t spanned by the coroots of Ψ_1 ∪ Ψ_0
    let mut s0: Vec<LieElement> = comp.psi0.iter().map(|&r| alg.basis_element(alg.x(r))).collect();
    let tor: Vec<Vec<Q>> = comp
        .psi1
        .iter()
        .chain(&comp.psi0)
        .map(|&r| rs.coroot_coords(r).into_iter().map(q).collect())
        .collect();
    for t in linalg::span_basis(&tor, rs.rank()) {
        s0.push(alg.cartan_element(&t));
    }
    let s1: Vec<LieElement> = comp.psi1.iter().map(|&r| alg.basis_element(alg.x(r))).collect();
    let mut n = 4i64;
    for _ in 0..16 {
        let mut e = alg.zero();
        for &r in &comp.psi1 {
            e.coeffs[alg.x(r)] = q(rng.gen_range(1..=n));
        }
        let m = alg.ad_matrix(&e, &s0, &s1).ok()?;
        if linalg::rank(&m) == s1.len() {
            return Some(e);
        }
        n *= 2;
    }
    None
}

/// Classifies the nilpotent `G_0`-orbits in `g_1` by Method II.
pub fn method2(gr: &ThetaGrading, cfg: &SearchConfig) -> Result<Vec<OrbitRecord>> {
    let alg = gr.algebra();
    let rs = alg.root_system();
    let cands = candidate_pi_systems(gr);
    log::info!("method II: {} candidate π-systems", cands.len());
    let hs: Vec<Option<CartanElement>> = cands[1..]
        .par_iter()
        .map(|c| {
            Ok(completion(gr, c)?
                .filter(|r| r.flat)
                .map(|r| {
                    let h: Vec<Q> = r.h0.iter().map(|x| x * q(2)).collect();
                    canonical_h(gr, &h)
                }))
        })
        .collect::<Result<_>>()?;
    let unique: BTreeSet<CartanElement> = hs.into_iter().flatten().collect();
    log::info!("method II: {} distinct characteristics", unique.len());
    let recs: Vec<OrbitRecord> = unique
        .into_par_iter()
        .map(|h| {
            let t = decide_normal(gr, &h, cfg)?.ok_or_else(|| {
                Error::Inconsistent(format!(
                    "flat carrier algebra gives non-normal characteristic {}",
                    fmt_vec(&h)
                ))
            })?;
            Ok(OrbitRecord {
                dim: crate::nullcone::orbit_dimension(gr, &t.e),
                wdd: crate::nullcone::ambient_wdd(rs, &h)?,
                h,
                e: t.e,
                f: t.f,
            })
        })
        .collect::<Result<_>>()?;
    finish_records(alg, recs)
}
