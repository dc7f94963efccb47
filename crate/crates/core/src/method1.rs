//! Nilpotent orbits in `g_1` through normal sl2-triples: every nilpotent
//! `G_0`-orbit contains a unique triple `(h, e, f)` with `h ∈ g_0`, `e ∈ g_1`,
//! `f ∈ g_{-1}` and `h` in the `W_0`-dominant chamber. Candidates for `h`
//! are the conjugates of the characteristics of the nilpotent `G`-orbits.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chevalley::{root_value, CartanElement, LieAlgebra, LieElement, Sl2Triple};
use crate::error::{Error, Result};
use crate::grading::ThetaGrading;
use crate::linalg::{self, fmt_q, q, Q};
use crate::rootsys::{RootIndex, RootSystem, SimpleType};
use crate::weyl::{self, WeylElement};

/// Random search parameters for the general-position element of `g_1(2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    /// Coefficients are drawn from `0..=n`, `n` starting at 4 and doubling
    /// after each failure until it exceeds this cap.
    pub omega_cap: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 20_240_601,
            omega_cap: 1 << 20,
        }
    }
}

/// One nilpotent `G_0`-orbit in `g_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    /// Canonical characteristic, `W_0`-dominant.
    pub h: CartanElement,
    pub e: LieElement,
    pub f: LieElement,
    /// Dimension of the `G_0`-orbit.
    pub dim: usize,
    /// Weighted Dynkin diagram of the ambient `G`-orbit.
    pub wdd: Vec<u8>,
}

impl OrbitRecord {
    pub fn zero(alg: &LieAlgebra) -> Self {
        OrbitRecord {
            h: vec![Q::zero(); alg.root_system().rank()],
            e: alg.zero(),
            f: alg.zero(),
            dim: 0,
            wdd: vec![0; alg.root_system().rank()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_zero()
    }
}

/// Cartan element with `α_i(h) = d_i`.
pub fn h_from_wdd(rs: &RootSystem, d: &[u8]) -> CartanElement {
    let v: Vec<Q> = d.iter().map(|&x| q(x as i64)).collect();
    crate::chevalley::cartan_from_values(rs, &v)
}

fn seed_for(seed: u64, h: &[Q]) -> u64 {
    // FNV-1a over the printed coordinates, stable across platforms
    let mut x: u64 = 0xcbf2_9ce4_8422_2325;
    for c in h {
        for b in fmt_q(c).bytes().chain(std::iter::once(b';')) {
            x ^= b as u64;
            x = x.wrapping_mul(0x0100_0000_01b3);
        }
    }
    x ^ seed
}

/// Decides whether `h` lies in a normal sl2-triple and returns one if so.
///
/// `Ok(None)` is a definite answer; running out of random attempts is
/// reported as [`Error::RetryBudget`].
pub fn decide_normal(gr: &ThetaGrading, h: &[Q], cfg: &SearchConfig) -> Result<Option<Sl2Triple>> {
    let alg = gr.algebra();
    let rs = alg.root_system();
    let l = rs.rank();
    if h.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    let vals: Vec<Q> = (0..rs.num_roots()).map(|r| root_value(rs, r, h)).collect();
    let two = q(2);
    let r2: Vec<RootIndex> = gr.phi1().iter().copied().filter(|&r| vals[r] == two).collect();
    if r2.is_empty() {
        return Ok(None);
    }
    let rm2: Vec<RootIndex> = r2.iter().map(|&r| rs.negate(r)).collect();
    // [g_1(2), g_{-1}(-2)] ∩ h is spanned by the coroots of g_1(2)
    let coroots: Vec<Vec<Q>> = r2
        .iter()
        .map(|&r| rs.coroot_coords(r).into_iter().map(q).collect())
        .collect();
    if !linalg::in_span(&coroots, h) {
        return Ok(None);
    }
    let g00: Vec<RootIndex> = gr
        .phi0()
        .iter()
        .copied()
        .filter(|&r| vals[r].is_zero())
        .collect();
    if g00.len() + l < r2.len() {
        return Err(Error::Inconsistent(format!(
            "g_0(0) smaller than g_1(2) for h = {}",
            fmt_vec(h)
        )));
    }
    let row_of: HashMap<RootIndex, usize> = r2.iter().enumerate().map(|(i, &r)| (r, i)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(cfg.seed, h));
    let mut n: u64 = 4;
    let coeffs = loop {
        if n > cfg.omega_cap {
            return Err(Error::RetryBudget {
                bound: cfg.omega_cap,
                h: fmt_vec(h),
            });
        }
        let c: Vec<i64> = r2.iter().map(|_| rng.gen_range(0..=n) as i64).collect();
        let mut m = vec![vec![0i64; g00.len() + l]; r2.len()];
        for (col, &g) in g00.iter().enumerate() {
            for (k, &a) in r2.iter().enumerate() {
                if c[k] == 0 {
                    continue;
                }
                if let Some(s) = rs.add(g, a) {
                    if let Some(&row) = row_of.get(&s) {
                        m[row][col] += c[k] * alg.structure_constant(g, a);
                    }
                }
            }
        }
        for i in 0..l {
            for (k, &a) in r2.iter().enumerate() {
                m[k][g00.len() + i] += c[k] * alg.root_on_simple_coroot(a, i);
            }
        }
        if linalg::rank_mod_p(&m) == r2.len() {
            break c;
        }
        n *= 2;
    };

    // [e, f] = h with f supported on g_{-1}(-2)
    let zero_rows: Vec<RootIndex> = gr
        .phi0()
        .iter()
        .copied()
        .filter(|&r| vals[r].is_zero())
        .collect();
    let zrow: HashMap<RootIndex, usize> = zero_rows.iter().enumerate().map(|(i, &r)| (r, l + i)).collect();
    let nrows = l + zero_rows.len();
    let mut a = vec![vec![BigInt::zero(); rm2.len()]; nrows];
    for (k, &al) in r2.iter().enumerate() {
        if coeffs[k] == 0 {
            continue;
        }
        for (j, &ga) in rm2.iter().enumerate() {
            if ga == rs.negate(al) {
                for (i, c) in rs.coroot_coords(al).into_iter().enumerate() {
                    a[i][j] += BigInt::from(coeffs[k] * c);
                }
            } else if let Some(s) = rs.add(al, ga) {
                if let Some(&row) = zrow.get(&s) {
                    a[row][j] += BigInt::from(coeffs[k] * alg.structure_constant(al, ga));
                }
            }
        }
    }
    let mut rhs: Vec<Q> = h.to_vec();
    rhs.extend(std::iter::repeat_n(Q::zero(), zero_rows.len()));
    let Some(d) = linalg::solve_int(a, &rhs, rm2.len()) else {
        return Ok(None);
    };
    let mut e = alg.zero();
    for (k, &al) in r2.iter().enumerate() {
        e.coeffs[alg.x(al)] = q(coeffs[k]);
    }
    let mut f = alg.zero();
    for (j, &ga) in rm2.iter().enumerate() {
        f.coeffs[alg.x(ga)] = d[j].clone();
    }
    let he = alg.cartan_element(h);
    if !alg.is_sl2_triple(&he, &e, &f) {
        return Err(Error::Inconsistent(format!(
            "solved triple fails the sl2 relations for h = {}",
            fmt_vec(h)
        )));
    }
    Ok(Some(Sl2Triple { h: he, e, f }))
}

pub fn fmt_vec(v: &[Q]) -> String {
    let s: Vec<String> = v.iter().map(fmt_q).collect();
    format!("({})", s.join(","))
}

/// A nilpotent `G`-orbit of `g`: its weighted Dynkin diagram and
/// dominant characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characteristic {
    pub wdd: Vec<u8>,
    pub h: CartanElement,
}

fn sl2_dimension_filter(rs: &RootSystem, d: &[u8]) -> bool {
    // eigenvalue multiplicities of an sl2-module are unimodal in steps of 2
    let mut count: BTreeMap<i64, usize> = BTreeMap::new();
    for r in 0..rs.num_positive() {
        let v: i64 = rs.root(r).iter().zip(d).map(|(&k, &x)| k * x as i64).sum();
        *count.entry(v).or_default() += 1;
    }
    let c = |k: i64| count.get(&k).copied().unwrap_or(0);
    let top = count.keys().next_back().copied().unwrap_or(0);
    let zero = 2 * c(0) + rs.rank();
    if zero < c(2) {
        return false;
    }
    (1..=top).all(|k| c(k) >= c(k + 2))
}

fn nilpotent_cache() -> &'static Mutex<HashMap<SimpleType, Arc<Vec<Characteristic>>>> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<Vec<Characteristic>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All nilpotent `G`-orbits of `g`, zero orbit first, then in lexicographic
/// order of the weighted Dynkin diagram. Cached per type.
pub fn classify_nilpotent_g(alg: &Arc<LieAlgebra>, cfg: &SearchConfig) -> Result<Arc<Vec<Characteristic>>> {
    let ty = alg.root_system().simple_type();
    if let Some(c) = nilpotent_cache().lock().expect("cache lock").get(&ty) {
        return Ok(Arc::clone(c));
    }
    let rs = alg.root_system();
    let l = rs.rank();
    let trivial = ThetaGrading::from_simple_degrees(Arc::clone(alg), &vec![0; l], 1)?;
    let total = 3usize.pow(l as u32);
    let diagrams: Vec<Vec<u8>> = (0..total)
        .map(|mut x| {
            let mut d = vec![0u8; l];
            for slot in d.iter_mut().rev() {
                *slot = (x % 3) as u8;
                x /= 3;
            }
            d
        })
        .collect();
    let found: Vec<Option<Characteristic>> = diagrams
        .into_par_iter()
        .map(|d| {
            if d.iter().all(|&x| x == 0) {
                return Ok(Some(Characteristic { h: vec![Q::zero(); l], wdd: d }));
            }
            if !sl2_dimension_filter(rs, &d) {
                return Ok(None);
            }
            let h = h_from_wdd(rs, &d);
            Ok(decide_normal(&trivial, &h, cfg)?.map(|_| Characteristic { wdd: d, h }))
        })
        .collect::<Result<_>>()?;
    let out: Arc<Vec<Characteristic>> = Arc::new(found.into_iter().flatten().collect());
    nilpotent_cache()
        .lock()
        .expect("cache lock")
        .insert(ty, Arc::clone(&out));
    Ok(out)
}

/// The distinct conjugates `w·h` over the coset representatives, for a
/// dominant `h`. All of them lie in the `W_0`-dominant chamber.
pub fn coset_images(rs: &RootSystem, reps: &[WeylElement], h: &[Q]) -> Vec<CartanElement> {
    let vals = weyl::values_of_cartan(rs, h);
    let a: Vec<Vec<Q>> = rs
        .cartan()
        .iter()
        .map(|row| row.iter().map(|&x| q(x)).collect())
        .collect();
    let ainv = linalg::inverse(&a).expect("Cartan matrix is invertible");
    let mut seen: HashSet<Vec<Q>> = HashSet::new();
    let mut out = Vec::new();
    for w in reps {
        let v = w.apply_values(&vals);
        let simple: Vec<Q> = v[..rs.rank()].to_vec();
        if seen.insert(simple.clone()) {
            let c: Vec<Q> = ainv
                .iter()
                .map(|row| row.iter().zip(&simple).map(|(x, y)| x * y).sum())
                .collect();
            out.push(c);
        }
    }
    out
}

/// Normal sl2-triples whose `h` is one of the `W_0`-dominant conjugates of
/// the dominant characteristic `h`.
pub fn normal_list(
    gr: &ThetaGrading,
    reps: &[WeylElement],
    h: &[Q],
    cfg: &SearchConfig,
) -> Result<Vec<Sl2Triple>> {
    let images = coset_images(gr.root_system(), reps, h);
    let found: Vec<Option<Sl2Triple>> = images
        .par_iter()
        .map(|x| decide_normal(gr, x, cfg))
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Number of coset representatives `|W| / |W_0|`.
pub fn coset_index(gr: &ThetaGrading) -> u128 {
    let rs = gr.root_system();
    rs.simple_type().weyl_order() / rs.weyl_order_of(gr.delta0())
}

/// Classifies the nilpotent `G_0`-orbits in `g_1` by Method I.
pub fn method1(gr: &ThetaGrading, cfg: &SearchConfig) -> Result<Vec<OrbitRecord>> {
    let alg_arc = gr.algebra_arc();
    let alg = gr.algebra();
    let rs = alg.root_system();
    let chars = classify_nilpotent_g(&alg_arc, cfg)?;
    let reps = weyl::coset_representatives(rs, gr.delta0());
    log::info!(
        "method I: {} characteristics, {} coset representatives",
        chars.len(),
        reps.len()
    );
    let mut jobs: Vec<(usize, CartanElement)> = Vec::new();
    for (k, c) in chars.iter().enumerate() {
        if c.wdd.iter().all(|&x| x == 0) {
            continue;
        }
        for img in coset_images(rs, &reps, &c.h) {
            jobs.push((k, img));
        }
    }
    log::info!("method I: {} candidate characteristics in the chamber", jobs.len());
    let found: Vec<Option<OrbitRecord>> = jobs
        .par_iter()
        .map(|(k, h)| {
            Ok(decide_normal(gr, h, cfg)?.map(|t| OrbitRecord {
                dim: crate::nullcone::orbit_dimension(gr, &t.e),
                h: h.clone(),
                e: t.e,
                f: t.f,
                wdd: chars[*k].wdd.clone(),
            }))
        })
        .collect::<Result<_>>()?;
    finish_records(alg, found.into_iter().flatten().collect())
}

/// Sorts records by canonical `h`, checks distinctness and prepends the
/// zero orbit.
pub(crate) fn finish_records(alg: &LieAlgebra, mut recs: Vec<OrbitRecord>) -> Result<Vec<OrbitRecord>> {
    recs.sort_by(|a, b| a.h.cmp(&b.h));
    for w in recs.windows(2) {
        if w[0].h == w[1].h {
            return Err(Error::Inconsistent(format!(
                "two orbits share the characteristic {}",
                fmt_vec(&w[0].h)
            )));
        }
    }
    let mut out = vec![OrbitRecord::zero(alg)];
    out.extend(recs);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::ThetaGrading;
    use crate::rootsys::RootSystem;

    fn alg(t: &str) -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::new(Arc::new(RootSystem::new(t.parse().unwrap()))))
    }

    #[test]
    fn h_from_wdd_examples() {
        let a = alg("A2");
        let rs = a.root_system();
        assert_eq!(h_from_wdd(rs, &[0, 0]), vec![q(0), q(0)]);
        assert_eq!(h_from_wdd(rs, &[1, 1]), vec![q(1), q(1)]);
        assert_eq!(h_from_wdd(alg("A1").root_system(), &[2]), vec![q(1)]);
    }

    #[test]
    fn wdd_counts_type_a() {
        let cfg = SearchConfig::default();
        for (t, n) in [("A1", 2), ("A2", 3), ("A3", 5), ("A4", 7)] {
            assert_eq!(classify_nilpotent_g(&alg(t), &cfg).unwrap().len(), n, "{t}");
        }
    }

    #[test]
    fn a1_order_two_has_three_orbits() {
        let g = ThetaGrading::from_kac(alg("A1"), &"1,1".parse().unwrap()).unwrap();
        let recs = method1(&g, &SearchConfig::default()).unwrap();
        assert_eq!(recs.len(), 3);
        assert!(recs[0].is_zero());
        assert_eq!(recs[1].h, vec![q(-1)]);
        assert_eq!(recs[2].h, vec![q(1)]);
        assert!(recs[1..].iter().all(|r| r.dim == 1));
    }

    #[test]
    fn zero_h_is_not_normal() {
        let g = ThetaGrading::from_kac(alg("G2"), &"0,0,1".parse().unwrap()).unwrap();
        assert!(decide_normal(&g, &[q(0), q(0)], &SearchConfig::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn retry_budget_is_reported() {
        let g = ThetaGrading::from_kac(alg("A1"), &"1,1".parse().unwrap()).unwrap();
        let cfg = SearchConfig { seed: 1, omega_cap: 2 };
        assert!(matches!(
            decide_normal(&g, &[q(1)], &cfg),
            Err(Error::RetryBudget { .. })
        ));
    }
}
