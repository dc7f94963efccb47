//! π-systems: linearly independent sets of roots with no pairwise difference
//! a root. Classification up to conjugacy under W or under the Weyl group of
//! a subsystem given by its base.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::rootsys::{components, RootIndex, RootSystem};
use crate::weyl;

/// Whether `gamma` satisfies both π-system conditions.
pub fn is_pi_system(rs: &RootSystem, gamma: &[RootIndex]) -> bool {
    for (i, &a) in gamma.iter().enumerate() {
        for &b in &gamma[i + 1..] {
            if a == b || rs.sub(a, b).is_some() {
                return false;
            }
        }
    }
    rs.independent(gamma)
}

/// Coordinate-vector version of [`is_pi_system`]; non-roots are an error.
pub fn is_pi_system_coords(rs: &RootSystem, gamma: &[Vec<i64>]) -> Result<bool> {
    let idx = gamma
        .iter()
        .map(|g| rs.expect_root(g))
        .collect::<Result<Vec<_>>>()?;
    Ok(is_pi_system(rs, &idx))
}

/// Validates a π-system, returning its sorted root indices.
pub fn pi_system(rs: &RootSystem, gamma: &[RootIndex]) -> Result<Vec<RootIndex>> {
    if !is_pi_system(rs, gamma) {
        return Err(Error::NotPiSystem(format!("{:?}", coords(rs, gamma))));
    }
    let mut g = gamma.to_vec();
    g.sort_unstable();
    Ok(g)
}

fn coords(rs: &RootSystem, gamma: &[RootIndex]) -> Vec<Vec<i64>> {
    gamma.iter().map(|&g| rs.root(g).to_vec()).collect()
}

/// For each connected component `D`, adjoin the lowest root of the
/// subsystem with base `D` and erase one of the original roots of `D`.
pub fn elementary_transformations(rs: &RootSystem, gamma: &[RootIndex]) -> Vec<Vec<RootIndex>> {
    let cm = rs.cartan_of(gamma);
    let mut out: Vec<Vec<RootIndex>> = Vec::new();
    let mut seen: HashSet<Vec<RootIndex>> = HashSet::new();
    for comp in components(&cm) {
        let d: Vec<RootIndex> = comp.iter().map(|&i| gamma[i]).collect();
        let low = rs
            .lowest_root_of_subsystem(&d)
            .expect("component of a π-system is a connected base");
        for &r in &d {
            let mut next: Vec<RootIndex> = gamma.iter().copied().filter(|&g| g != r).collect();
            next.push(low);
            next.sort_unstable();
            if is_pi_system(rs, &next) && seen.insert(next.clone()) {
                out.push(next);
            }
        }
    }
    out
}

/// Invariants of a root set under the Weyl group, used to bucket candidates
/// before pairwise conjugacy tests.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetInvariant {
    pub dynkin: String,
    pub norms: Vec<i64>,
    pub orthogonal_roots: usize,
    pub roots_in_span: usize,
}

pub fn invariant(rs: &RootSystem, gamma: &[RootIndex]) -> SetInvariant {
    let mut norms: Vec<i64> = gamma.iter().map(|&g| rs.norm(g)).collect();
    norms.sort_unstable();
    let orthogonal_roots = (0..rs.num_roots())
        .filter(|&r| gamma.iter().all(|&g| rs.inner_roots(r, g) == 0))
        .count();
    // r lies in span(Γ) iff it is orthogonal to span(Γ)^⊥
    let gram: Vec<Vec<Q>> = gamma
        .iter()
        .map(|&g| {
            let row: Vec<i64> = (0..rs.rank()).map(|j| {
                (0..rs.rank()).map(|i| rs.root(g)[i] * rs.form()[i][j]).sum()
            }).collect();
            row.into_iter().map(q).collect()
        })
        .collect();
    let perp = linalg::nullspace(&gram, rs.rank());
    let roots_in_span = (0..rs.num_roots())
        .filter(|&r| {
            let v: Vec<Q> = rs.root(r).iter().map(|&x| q(x)).collect();
            perp.iter().all(|c| rs.inner(&v, c) == q(0))
        })
        .count();
    SetInvariant {
        dynkin: rs.dynkin_type(gamma),
        norms,
        orthogonal_roots,
        roots_in_span,
    }
}

/// One representative per conjugacy class under the group with base `base`,
/// keeping the first occurrence of each class in input order.
pub fn dedup_classes(
    rs: &RootSystem,
    base: &[RootIndex],
    candidates: Vec<Vec<RootIndex>>,
) -> Vec<Vec<RootIndex>> {
    let keyed: Vec<(SetInvariant, usize, Vec<RootIndex>)> = candidates
        .into_par_iter()
        .enumerate()
        .map(|(i, c)| (invariant(rs, &c), i, c))
        .collect();
    let mut buckets: BTreeMap<SetInvariant, Vec<(usize, Vec<RootIndex>)>> = BTreeMap::new();
    for (k, i, c) in keyed {
        buckets.entry(k).or_default().push((i, c));
    }
    let mut reps: Vec<(usize, Vec<RootIndex>)> = buckets
        .into_par_iter()
        .flat_map_iter(|(_, items)| {
            let mut reps: Vec<(usize, Vec<RootIndex>)> = Vec::new();
            for (i, c) in items {
                if !reps.iter().any(|(_, r)| weyl::conjugate_sets(rs, base, r, &c)) {
                    reps.push((i, c));
                }
            }
            reps
        })
        .collect();
    reps.sort_by_key(|(i, _)| *i);
    reps.into_iter().map(|(_, c)| c).collect()
}

/// Classes of maximal π-systems reachable from `base` by elementary
/// transformations, up to conjugacy by the Weyl group of `base`.
///
/// The plain closure of `base` contains every maximal π-system as a set and
/// grows like the Weyl group in large types, so only one representative per
/// conjugacy class is expanded: transformations of conjugate systems are
/// conjugate, which makes this equivalent.
pub fn classify_maximal_in(rs: &RootSystem, base: &[RootIndex]) -> Vec<Vec<RootIndex>> {
    let mut start = base.to_vec();
    start.sort_unstable();
    let mut classes: BTreeMap<SetInvariant, Vec<Vec<RootIndex>>> = BTreeMap::new();
    let mut order: Vec<Vec<RootIndex>> = Vec::new();
    let mut seen: HashSet<Vec<RootIndex>> = HashSet::new();
    let mut frontier = vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in frontier {
            if !seen.insert(g.clone()) {
                continue;
            }
            let key = invariant(rs, &g);
            let bucket = classes.entry(key).or_default();
            if bucket.iter().any(|r| weyl::conjugate_sets(rs, base, r, &g)) {
                continue;
            }
            bucket.push(g.clone());
            order.push(g.clone());
            next.extend(elementary_transformations(rs, &g));
        }
        frontier = next;
    }
    order
}

pub fn classify_maximal(rs: &RootSystem) -> Vec<Vec<RootIndex>> {
    let simple: Vec<RootIndex> = (0..rs.rank()).collect();
    classify_maximal_in(rs, &simple)
}

/// All π-systems inside the subsystem with base `base`, up to conjugacy by
/// its Weyl group, including the empty system (listed first).
pub fn classify_all_in(rs: &RootSystem, base: &[RootIndex]) -> Vec<Vec<RootIndex>> {
    let maximal = classify_maximal_in(rs, base);
    let mut candidates: Vec<Vec<RootIndex>> = Vec::new();
    let mut seen: HashSet<Vec<RootIndex>> = HashSet::new();
    for m in &maximal {
        let n = m.len();
        for mask in 0u32..(1 << n) {
            let s: Vec<RootIndex> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| m[i]).collect();
            if seen.insert(s.clone()) {
                candidates.push(s);
            }
        }
    }
    candidates.sort_by_key(|c| c.len());
    dedup_classes(rs, base, candidates)
}

pub fn classify_all(rs: &RootSystem) -> Vec<Vec<RootIndex>> {
    let simple: Vec<RootIndex> = (0..rs.rank()).collect();
    classify_all_in(rs, &simple)
}
