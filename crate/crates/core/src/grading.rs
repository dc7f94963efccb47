//! Z/mZ-gradings of a simple Lie algebra coming from inner automorphisms of
//! finite order, described by Kac diagrams.
//!
//! The automorphism is never built as a matrix: everything downstream only
//! needs the degree of each root, `deg(Σ k_i α_i) = Σ k_i s_i mod m`, while
//! the Cartan subalgebra always lies in degree 0.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::chevalley::{root_value, CartanElement, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};
use crate::rootsys::{RootIndex, RootSystem};

/// Labels `s_0, …, s_l` on the nodes of the extended Dynkin diagram, node 0
/// being the affine node and the others in Bourbaki order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KacDiagram {
    pub labels: Vec<u32>,
}

impl KacDiagram {
    pub fn new(labels: Vec<u32>) -> Self {
        KacDiagram { labels }
    }

    /// `m = Σ a_i s_i`.
    pub fn order(&self, rs: &RootSystem) -> u32 {
        self.labels
            .iter()
            .zip(rs.marks())
            .map(|(&s, &a)| s * a as u32)
            .sum()
    }

    pub fn gcd(&self) -> u32 {
        self.labels.iter().fold(0u32, |g, &s| g.gcd(&s))
    }

    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        if self.labels.len() != rs.rank() + 1 {
            return Err(Error::InvalidKac(format!(
                "{} labels given, type {} needs {}",
                self.labels.len(),
                rs.simple_type(),
                rs.rank() + 1
            )));
        }
        if self.labels.iter().all(|&s| s == 0) {
            return Err(Error::InvalidKac("all labels are zero (order 0)".into()));
        }
        Ok(())
    }
}

impl fmt::Display for KacDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.labels.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for KacDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad Kac label {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(KacDiagram { labels })
    }
}

#[derive(Debug)]
pub struct ThetaGrading {
    alg: Arc<LieAlgebra>,
    m: u32,
    simple_degrees: Vec<u32>,
    deg: Vec<u32>,
    phi: Vec<Vec<RootIndex>>,
    delta0: Vec<RootIndex>,
    kac: Option<KacDiagram>,
}

impl ThetaGrading {
    /// Grading with `deg(α_i) = simple_degrees[i] mod m`.
    pub fn from_simple_degrees(alg: Arc<LieAlgebra>, simple_degrees: &[i64], m: u32) -> Result<Self> {
        let rs = alg.root_system();
        if m == 0 {
            return Err(Error::InvalidKac("order 0".into()));
        }
        if simple_degrees.len() != rs.rank() {
            return Err(Error::Precondition(format!(
                "{} simple degrees for rank {}",
                simple_degrees.len(),
                rs.rank()
            )));
        }
        let md = m as i64;
        let simple_degrees: Vec<u32> = simple_degrees
            .iter()
            .map(|&s| s.rem_euclid(md) as u32)
            .collect();
        let deg: Vec<u32> = (0..rs.num_roots())
            .map(|r| {
                let d: i64 = rs
                    .root(r)
                    .iter()
                    .zip(&simple_degrees)
                    .map(|(&k, &s)| k * s as i64)
                    .sum();
                d.rem_euclid(md) as u32
            })
            .collect();
        let mut phi = vec![Vec::new(); m as usize];
        for (r, &d) in deg.iter().enumerate() {
            phi[d as usize].push(r);
        }
        let pos0: Vec<RootIndex> = phi[0].iter().copied().filter(|&r| rs.is_positive(r)).collect();
        let delta0: Vec<RootIndex> = pos0
            .iter()
            .copied()
            .filter(|&r| {
                !pos0
                    .iter()
                    .any(|&a| rs.sub(r, a).is_some_and(|b| rs.is_positive(b) && deg[b] == 0))
            })
            .collect();
        Ok(ThetaGrading {
            alg,
            m,
            simple_degrees,
            deg,
            phi,
            delta0,
            kac: None,
        })
    }

    /// Grading defined by a Kac diagram, of order `Σ a_i s_i`.
    pub fn from_kac(alg: Arc<LieAlgebra>, kd: &KacDiagram) -> Result<Self> {
        let rs = alg.root_system();
        kd.validate(rs)?;
        let m = kd.order(rs);
        let s: Vec<i64> = kd.labels[1..].iter().map(|&x| x as i64).collect();
        let mut g = Self::from_simple_degrees(alg, &s, m)?;
        g.kac = Some(kd.clone());
        Ok(g)
    }

    /// Folding mod `m` of the even grading of a principal sl2-triple:
    /// every simple root gets degree 1.
    pub fn principal(alg: Arc<LieAlgebra>, m: u32) -> Result<Self> {
        let l = alg.root_system().rank();
        let mut g = Self::from_simple_degrees(Arc::clone(&alg), &vec![1; l], m)?;
        g.kac = Some(kac_diagram_of_simple_values(
            alg.root_system(),
            &vec![q(1); l],
            m,
        ));
        Ok(g)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn algebra_arc(&self) -> Arc<LieAlgebra> {
        Arc::clone(&self.alg)
    }

    pub fn root_system(&self) -> &RootSystem {
        self.alg.root_system()
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn kac(&self) -> Option<&KacDiagram> {
        self.kac.as_ref()
    }

    pub fn simple_degrees(&self) -> &[u32] {
        &self.simple_degrees
    }

    pub fn deg(&self, r: RootIndex) -> u32 {
        self.deg[r]
    }

    /// Residue class of an integer.
    pub fn residue(&self, i: i64) -> usize {
        i.rem_euclid(self.m as i64) as usize
    }

    /// Roots whose root spaces lie in `g_i`.
    pub fn phi(&self, i: i64) -> &[RootIndex] {
        &self.phi[self.residue(i)]
    }

    pub fn phi0(&self) -> &[RootIndex] {
        self.phi(0)
    }

    pub fn phi1(&self) -> &[RootIndex] {
        self.phi(1)
    }

    /// Simple roots of `Φ_0`, all positive in `Φ`.
    pub fn delta0(&self) -> &[RootIndex] {
        &self.delta0
    }

    pub fn dim(&self, i: i64) -> usize {
        let extra = if self.residue(i) == 0 {
            self.root_system().rank()
        } else {
            0
        };
        self.phi(i).len() + extra
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..self.m as i64).map(|i| self.dim(i)).collect()
    }

    /// Basis indices (in the Chevalley basis) spanning `g_i`.
    pub fn component_basis(&self, i: i64) -> Vec<usize> {
        let mut b: Vec<usize> = self.phi(i).iter().map(|&r| self.alg.x(r)).collect();
        if self.residue(i) == 0 {
            b.extend((0..self.root_system().rank()).map(|k| self.alg.h(k)));
        }
        b
    }

    /// Basis of the centre `r` of `g_0`: Cartan elements killed by `Δ_0`.
    pub fn center_basis(&self) -> Vec<CartanElement> {
        let rows: Vec<Vec<Q>> = self
            .delta0
            .iter()
            .map(|&b| {
                (0..self.root_system().rank())
                    .map(|i| q(self.alg.root_on_simple_coroot(b, i)))
                    .collect()
            })
            .collect();
        linalg::nullspace(&rows, self.root_system().rank())
    }

    /// Coroots of `Δ_0`, a basis of the Cartan subalgebra of `[g_0, g_0]`.
    pub fn semisimple_cartan_basis(&self) -> Vec<CartanElement> {
        self.delta0
            .iter()
            .map(|&b| self.root_system().coroot_coords(b).into_iter().map(q).collect())
            .collect()
    }

    /// Dynkin type of `Φ_0`, with the dimension of the centre appended as `T_k`.
    pub fn g0_type(&self) -> String {
        let t = self.root_system().dynkin_type(&self.delta0);
        let z = self.root_system().rank() - self.delta0.len();
        match (t.as_str(), z) {
            ("0", _) => format!("T{z}"),
            (_, 0) => t,
            _ => format!("{t}+T{z}"),
        }
    }

    /// Roots of `g_i(k) = {x ∈ g_i : [h, x] = kx}` for a Cartan element `h`,
    /// plus the whole Cartan subalgebra when `i ≡ 0` and `k = 0`.
    pub fn eigenspace(&self, h: &[Q], k: &Q, i: i64) -> Vec<usize> {
        let rs = self.root_system();
        let mut b: Vec<usize> = self
            .phi(i)
            .iter()
            .copied()
            .filter(|&r| &root_value(rs, r, h) == k)
            .map(|r| self.alg.x(r))
            .collect();
        if self.residue(i) == 0 && k.is_zero() {
            b.extend((0..rs.rank()).map(|j| self.alg.h(j)));
        }
        b
    }

    /// Irreducible `g_0`-submodules of `g_i` for `i ≢ 0`, as sets of roots,
    /// largest first.
    ///
    /// `g_i` is a sum of distinct root spaces, so a submodule is a sum of
    /// root spaces and the summands are the classes of `Φ_i` under adding
    /// roots of `Φ_0`. Each class must contain exactly one highest weight.
    pub fn module_decomposition(&self, i: i64) -> Result<Vec<Vec<RootIndex>>> {
        if self.residue(i) == 0 {
            return Err(Error::Precondition("g_0 is not decomposed".into()));
        }
        let rs = self.root_system();
        let phi = self.phi(i);
        let mut class: HashMap<RootIndex, usize> = HashMap::new();
        let mut out: Vec<Vec<RootIndex>> = Vec::new();
        for &start in phi {
            if class.contains_key(&start) {
                continue;
            }
            let id = out.len();
            let mut comp = vec![start];
            class.insert(start, id);
            let mut k = 0;
            while k < comp.len() {
                let b = comp[k];
                for &a in self.phi0() {
                    if let Some(c) = rs.add(b, a) {
                        if let std::collections::hash_map::Entry::Vacant(v) = class.entry(c) {
                            v.insert(id);
                            comp.push(c);
                        }
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        for comp in &out {
            let highest = comp
                .iter()
                .filter(|&&b| self.delta0.iter().all(|&a| rs.add(b, a).is_none()))
                .count();
            if highest != 1 {
                return Err(Error::Inconsistent(format!(
                    "class of {} roots in g_{i} has {highest} highest weights",
                    comp.len()
                )));
            }
        }
        out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }
}

/// Automorphisms of the extended Dynkin diagram as permutations of the
/// nodes `0..=l`.
pub fn extended_diagram_automorphisms(rs: &RootSystem) -> Vec<Vec<usize>> {
    let a = rs.extended_cartan();
    let n = a.len();
    let mut out = Vec::new();
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(a: &[Vec<i64>], perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let k = perm.len();
        if k == a.len() {
            out.push(perm.clone());
            return;
        }
        for j in 0..a.len() {
            if used[j] {
                continue;
            }
            if (0..k).all(|i| a[perm[i]][j] == a[i][k] && a[j][perm[i]] == a[k][i]) {
                used[j] = true;
                perm.push(j);
                rec(a, perm, used, out);
                perm.pop();
                used[j] = false;
            }
        }
    }
    rec(&a, &mut perm, &mut used, &mut out);
    out
}

/// All Kac diagrams of order `m` up to diagram automorphisms, including
/// those whose labels have a common factor. Each class is represented by
/// its lexicographically largest label vector; output is sorted descending.
pub fn enumerate_kac_diagrams(rs: &RootSystem, m: u32) -> Vec<KacDiagram> {
    let marks: Vec<u32> = rs.marks().iter().map(|&a| a as u32).collect();
    let autos = extended_diagram_automorphisms(rs);
    let mut out = std::collections::BTreeSet::new();
    let mut labels = vec![0u32; marks.len()];
    fn rec(
        i: usize,
        rest: u32,
        marks: &[u32],
        labels: &mut Vec<u32>,
        found: &mut Vec<Vec<u32>>,
    ) {
        if i == marks.len() {
            if rest == 0 {
                found.push(labels.clone());
            }
            return;
        }
        for s in 0..=rest / marks[i] {
            labels[i] = s;
            rec(i + 1, rest - s * marks[i], marks, labels, found);
        }
        labels[i] = 0;
    }
    let mut found = Vec::new();
    rec(0, m, &marks, &mut labels, &mut found);
    for f in found {
        let canon = autos
            .iter()
            .map(|p| {
                let mut v = vec![0u32; f.len()];
                for (i, &pi) in p.iter().enumerate() {
                    v[pi] = f[i];
                }
                v
            })
            .max()
            .expect("identity is an automorphism");
        out.insert(canon);
    }
    out.into_iter().rev().map(KacDiagram::new).collect()
}

/// Kac diagram of the inner automorphism `exp(2πi·ad x)`, where `x` is the
/// Cartan element with `α_i(x) = values[i]/m`. The point is moved into the
/// fundamental alcove by the affine Weyl group and the labels read off.
pub fn kac_diagram_of_simple_values(rs: &RootSystem, values: &[Q], m: u32) -> KacDiagram {
    let mq = q(m as i64);
    let h = crate::chevalley::cartan_from_values(rs, values);
    // x = h/m, tracked through its values on every root
    let mut v: Vec<Q> = (0..rs.num_roots())
        .map(|r| root_value(rs, r, &h) / &mq)
        .collect();
    let theta = rs.highest_root();
    loop {
        if let Some(i) = (0..rs.rank()).find(|&i| v[i].is_negative()) {
            // x ↦ s_i x
            let c = v[i].clone();
            v = (0..rs.num_roots())
                .map(|r| &v[r] - &c * q(rs.cartan_int(r, i)))
                .collect();
            continue;
        }
        if v[theta] > q(1) {
            // affine reflection x ↦ x - (θ(x) - 1) θ^∨
            let c = &v[theta] - q(1);
            v = (0..rs.num_roots())
                .map(|r| &v[r] - &c * q(rs.cartan_int(r, theta)))
                .collect();
            continue;
        }
        break;
    }
    let to_u32 = |x: Q| -> u32 {
        assert!(x.is_integer(), "non-integral Kac label");
        x.to_integer().to_u32().expect("small label")
    };
    let mut labels = vec![to_u32((q(1) - &v[theta]) * &mq)];
    labels.extend((0..rs.rank()).map(|i| to_u32(&v[i] * &mq)));
    KacDiagram::new(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn alg(t: &str) -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::new(Arc::new(RootSystem::new(t.parse().unwrap()))))
    }

    fn check_bracket_degrees(g: &ThetaGrading) {
        let a = g.algebra();
        let m = g.order() as i64;
        for i in 0..m {
            for j in 0..m {
                let target: std::collections::HashSet<usize> =
                    g.component_basis(i + j).into_iter().collect();
                for &x in &g.component_basis(i) {
                    for &y in &g.component_basis(j) {
                        for (z, _) in a.bracket_basis(x, y) {
                            assert!(target.contains(&z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn a1_order_two() {
        let g = ThetaGrading::from_kac(alg("A1"), &"1,1".parse().unwrap()).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.dims(), vec![1, 2]);
        check_bracket_degrees(&g);
    }

    #[test]
    fn sl4_order_three_example() {
        let g = ThetaGrading::from_kac(alg("A3"), &"1,1,1,0".parse().unwrap()).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.dim(0), 5);
        assert_eq!(g.dim(1), 5);
        assert_eq!(g.g0_type(), "A1+T2");
        assert_eq!(g.center_basis().len(), 2);
        let sizes: Vec<usize> = g.module_decomposition(1).unwrap().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![2, 2, 1]);
        assert!(g.module_decomposition(0).is_err());
        check_bracket_degrees(&g);
    }

    #[test]
    fn all_zero_labels_rejected() {
        assert!(ThetaGrading::from_kac(alg("A2"), &"0,0,0".parse().unwrap()).is_err());
        assert!(ThetaGrading::from_kac(alg("A2"), &"1,0".parse().unwrap()).is_err());
    }

    #[test]
    fn kac_enumeration_small() {
        let a1 = RootSystem::new("A1".parse().unwrap());
        assert_eq!(enumerate_kac_diagrams(&a1, 2).len(), 2);
        let g2 = RootSystem::new("G2".parse().unwrap());
        let d = enumerate_kac_diagrams(&g2, 2);
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|k| k.order(&g2) == 2));
        assert_eq!(enumerate_kac_diagrams(&g2, 1), vec![KacDiagram::new(vec![1, 0, 0])]);
        assert_eq!(extended_diagram_automorphisms(&g2).len(), 1);
        let e6 = RootSystem::new("E6".parse().unwrap());
        assert_eq!(extended_diagram_automorphisms(&e6).len(), 6);
        let a3 = RootSystem::new("A3".parse().unwrap());
        assert_eq!(extended_diagram_automorphisms(&a3).len(), 8);
    }

    #[test]
    fn principal_grading_dims_and_kac() {
        let g = ThetaGrading::principal(alg("A1"), 2).unwrap();
        assert_eq!(g.dims(), vec![1, 2]);
        assert_eq!(g.kac().unwrap().labels, vec![1, 1]);
        let g2 = ThetaGrading::principal(alg("G2"), 2).unwrap();
        assert_eq!(g2.dims(), vec![6, 8]);
        let k = g2.kac().unwrap().clone();
        assert_eq!(k.order(g2.root_system()), 2);
        let from_kac = ThetaGrading::from_kac(alg("G2"), &k).unwrap();
        assert_eq!(from_kac.dims(), g2.dims());
        check_bracket_degrees(&g2);
    }

    #[test]
    fn eigenspaces() {
        let g = ThetaGrading::from_kac(alg("A3"), &"1,1,1,0".parse().unwrap()).unwrap();
        let zero = vec![q(0); 3];
        assert_eq!(g.eigenspace(&zero, &q(0), 1).len(), 5);
        assert!(g.eigenspace(&zero, &q(7), 1).is_empty());
    }
}
