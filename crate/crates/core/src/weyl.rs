//! Weyl group elements as permutations of the roots, coset representatives,
//! dominance and conjugacy of root tuples and root sets.
//!
//! A Cartan element `h` is often handled through its vector of root values
//! `v[r] = α_r(h)`. The action `w·h` then permutes values: `(w·h)(α) =
//! h(w⁻¹α)`, so no rational arithmetic is needed to move it around.

use std::collections::HashSet;

use crate::linalg::{q, Q};
use crate::rootsys::{RootIndex, RootSystem};

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Simple reflection indices: `w = s_{word[0]} s_{word[1]} ⋯`.
    pub word: Vec<u8>,
    perm: Vec<u16>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            word: Vec::new(),
            perm: (0..rs.num_roots() as u16).collect(),
        }
    }

    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut w = Self::identity(rs);
        for &i in word {
            w = w.times_simple(rs, i);
        }
        w
    }

    /// `w·s_i`.
    pub fn times_simple(&self, rs: &RootSystem, i: usize) -> Self {
        let s = rs.reflection_table(i);
        let mut word = self.word.clone();
        word.push(i as u8);
        WeylElement {
            word,
            perm: s.iter().map(|&r| self.perm[r as usize]).collect(),
        }
    }

    /// Permutation `r ↦ w(r)` of root indices.
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn apply_root(&self, r: RootIndex) -> RootIndex {
        self.perm[r] as RootIndex
    }

    pub fn inverse(&self) -> Self {
        let mut perm = vec![0u16; self.perm.len()];
        for (r, &img) in self.perm.iter().enumerate() {
            perm[img as usize] = r as u16;
        }
        WeylElement {
            word: self.word.iter().rev().copied().collect(),
            perm,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            word,
            perm: other.perm.iter().map(|&r| self.perm[r as usize]).collect(),
        }
    }

    /// Length of the stored word; equals the Coxeter length for elements
    /// produced by [`coset_representatives`].
    pub fn word_len(&self) -> usize {
        self.word.len()
    }

    /// Coxeter length, the number of positive roots sent to negative ones.
    pub fn length(&self, rs: &RootSystem) -> usize {
        (0..rs.num_positive())
            .filter(|&r| !rs.is_positive(self.perm[r] as usize))
            .count()
    }

    /// Action on a rational weight given in simple-root coordinates.
    pub fn apply_weight(&self, rs: &RootSystem, lambda: &[Q]) -> Vec<Q> {
        let l = rs.rank();
        let mut out = vec![q(0); l];
        for (j, c) in lambda.iter().enumerate() {
            let img = rs.root(self.perm[j] as usize);
            for k in 0..l {
                if img[k] != 0 {
                    out[k] += c * q(img[k]);
                }
            }
        }
        out
    }

    /// Action on a root-value vector.
    pub fn apply_values<T: Clone>(&self, values: &[T]) -> Vec<T> {
        // (w·h)(α) = h(w⁻¹α): the value at w(r) is the old value at r
        let mut out = values.to_vec();
        for (r, &img) in self.perm.iter().enumerate() {
            out[img as usize] = values[r].clone();
        }
        out
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            return "1".into();
        }
        self.word
            .iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Root-value vector `α_r(h)` of a Cartan element.
pub fn values_of_cartan(rs: &RootSystem, h: &[Q]) -> Vec<Q> {
    (0..rs.num_roots())
        .map(|r| crate::chevalley::root_value(rs, r, h))
        .collect()
}

/// Applies the reflection `s_b` to a root-value vector.
pub fn reflect_values<T: Clone>(rs: &RootSystem, b: RootIndex, values: &[T]) -> Vec<T> {
    let s = rs.reflection_table(b);
    s.iter().map(|&r| values[r as usize].clone()).collect()
}

/// Moves a root-value vector into the dominant chamber of the reflection
/// group with base `basis` by reflecting in the first negative base root.
pub fn to_subdominant<T>(rs: &RootSystem, basis: &[RootIndex], values: &[T]) -> Vec<T>
where
    T: Clone + PartialOrd + Default,
{
    let zero = T::default();
    let mut v = values.to_vec();
    while let Some(&b) = basis.iter().find(|&&b| v[b] < zero) {
        v = reflect_values(rs, b, &v);
    }
    v
}

/// W-dominant representative of a root-value vector.
pub fn to_dominant<T>(rs: &RootSystem, values: &[T]) -> Vec<T>
where
    T: Clone + PartialOrd + Default,
{
    let simple: Vec<RootIndex> = (0..rs.rank()).collect();
    to_subdominant(rs, &simple, values)
}

/// Representatives `w` of `W_Γ \ W`, `W_Γ` generated by the reflections in
/// the base `basis`, characterized by `w⁻¹(β) > 0` for all `β ∈ basis`.
/// For a dominant `h`, `{w·h}` then runs over the points of `W·h` that lie
/// in the `W_Γ`-dominant chamber. Returned in order of increasing length.
pub fn coset_representatives(rs: &RootSystem, basis: &[RootIndex]) -> Vec<WeylElement> {
    let l = rs.rank();
    let id = WeylElement::identity(rs);
    // w⁻¹(β) for each base root, carried alongside each element
    let mut level: Vec<(WeylElement, Vec<u16>)> =
        vec![(id, basis.iter().map(|&b| b as u16).collect())];
    let mut out = Vec::new();
    while !level.is_empty() {
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        let mut next = Vec::new();
        for (w, inv) in &level {
            for i in 0..l {
                if !rs.is_positive(w.apply_root(i)) {
                    continue;
                }
                let s = rs.reflection_table(i);
                let inv2: Vec<u16> = inv.iter().map(|&r| s[r as usize]).collect();
                if inv2.iter().any(|&r| !rs.is_positive(r as usize)) {
                    continue;
                }
                let u = w.times_simple(rs, i);
                if seen.insert(u.perm.clone()) {
                    next.push((u, inv2));
                }
            }
        }
        out.extend(level.into_iter().map(|(w, _)| w));
        level = next;
    }
    out
}

/// Base of the stabilizer, inside the group with base `basis`, of a
/// root-value vector already dominant for that group.
pub fn stabilizer_basis<T>(basis: &[RootIndex], dominant: &[T]) -> Vec<RootIndex>
where
    T: PartialEq + Default,
{
    let zero = T::default();
    basis
        .iter()
        .copied()
        .filter(|&b| dominant[b] == zero)
        .collect()
}

/// Moves `target` to the dominant chamber of the group with base `basis`,
/// applying the same reflections to `others`. Roots are treated as weights.
fn dominate_root(
    rs: &RootSystem,
    basis: &[RootIndex],
    target: RootIndex,
    others: &mut [RootIndex],
) -> RootIndex {
    let mut t = target;
    while let Some(&b) = basis.iter().find(|&&b| rs.inner_roots(t, b) < 0) {
        t = rs.reflect_root(b, t);
        for o in others.iter_mut() {
            *o = rs.reflect_root(b, *o);
        }
    }
    t
}

/// Whether some `w` in the group with base `basis` maps `a[i]` to `b[i]`
/// for every `i`.
pub fn conjugate_tuples(
    rs: &RootSystem,
    basis: &[RootIndex],
    a: &[RootIndex],
    b: &[RootIndex],
) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    let mut basis = basis.to_vec();
    for k in 0..a.len() {
        let (head_a, rest_a) = a[k..].split_first_mut().expect("nonempty");
        let da = dominate_root(rs, &basis, *head_a, rest_a);
        let (head_b, rest_b) = b[k..].split_first_mut().expect("nonempty");
        let db = dominate_root(rs, &basis, *head_b, rest_b);
        if da != db {
            return false;
        }
        a[k] = da;
        b[k] = db;
        basis.retain(|&g| rs.inner_roots(da, g) == 0);
    }
    true
}

/// Whether the unordered root sets are conjugate under the group with base
/// `basis`. Optional colors must be preserved by the matching.
pub fn conjugate_colored_sets(
    rs: &RootSystem,
    basis: &[RootIndex],
    a: &[(RootIndex, u32)],
    b: &[(RootIndex, u32)],
) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let key = |s: &[(RootIndex, u32)]| {
        let mut k: Vec<(i64, u32)> = s.iter().map(|&(r, c)| (rs.norm(r), c)).collect();
        k.sort_unstable();
        k
    };
    if key(a) != key(b) {
        return false;
    }
    let n = a.len();
    let mut used = vec![false; n];
    let mut perm = Vec::with_capacity(n);
    let ra: Vec<RootIndex> = a.iter().map(|p| p.0).collect();
    fn rec(
        rs: &RootSystem,
        basis: &[RootIndex],
        a: &[(RootIndex, u32)],
        ra: &[RootIndex],
        b: &[(RootIndex, u32)],
        used: &mut [bool],
        perm: &mut Vec<RootIndex>,
    ) -> bool {
        let k = perm.len();
        if k == a.len() {
            return conjugate_tuples(rs, basis, ra, perm);
        }
        for j in 0..b.len() {
            if used[j] || b[j].1 != a[k].1 || rs.norm(b[j].0) != rs.norm(a[k].0) {
                continue;
            }
            let ok = (0..k).all(|i| rs.inner_roots(perm[i], b[j].0) == rs.inner_roots(ra[i], a[k].0));
            if !ok {
                continue;
            }
            used[j] = true;
            perm.push(b[j].0);
            if rec(rs, basis, a, ra, b, used, perm) {
                return true;
            }
            perm.pop();
            used[j] = false;
        }
        false
    }
    rec(rs, basis, a, &ra, b, &mut used, &mut perm)
}

/// Whether the unordered root sets are conjugate under the group with base
/// `basis`.
pub fn conjugate_sets(
    rs: &RootSystem,
    basis: &[RootIndex],
    a: &[RootIndex],
    b: &[RootIndex],
) -> bool {
    let ca: Vec<(RootIndex, u32)> = a.iter().map(|&r| (r, 0)).collect();
    let cb: Vec<(RootIndex, u32)> = b.iter().map(|&r| (r, 0)).collect();
    conjugate_colored_sets(rs, basis, &ca, &cb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use std::collections::HashSet;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn all_elements(rs: &RootSystem) -> Vec<WeylElement> {
        let mut seen = HashSet::new();
        let id = WeylElement::identity(rs);
        seen.insert(id.clone());
        let mut queue = vec![id];
        let mut k = 0;
        while k < queue.len() {
            for i in 0..rs.rank() {
                let u = queue[k].times_simple(rs, i);
                if seen.insert(u.clone()) {
                    queue.push(u);
                }
            }
            k += 1;
        }
        queue
    }

    #[test]
    fn group_orders() {
        for t in ["A1", "A3", "B3", "C3", "G2", "D4"] {
            let r = rs(t);
            assert_eq!(all_elements(&r).len() as u128, r.simple_type().weyl_order(), "{t}");
        }
    }

    #[test]
    fn full_coset_set_is_whole_group_for_trivial_subgroup() {
        let r = rs("B3");
        assert_eq!(coset_representatives(&r, &[]).len(), 48);
        assert_eq!(coset_representatives(&r, &[0, 1, 2]).len(), 1);
    }

    #[test]
    fn inverse_and_compose() {
        let r = rs("G2");
        let w = WeylElement::from_word(&r, &[0, 1, 0]);
        let id = WeylElement::identity(&r);
        assert_eq!(w.compose(&w.inverse()), id);
        assert_eq!(w.length(&r), 3);
        let lam = vec![q(1), q(0)];
        let back = w.inverse().apply_weight(&r, &w.apply_weight(&r, &lam));
        assert_eq!(back, lam);
    }

    #[test]
    fn value_action_matches_weight_action() {
        let r = rs("B3");
        let h = vec![q(1), q(-2), q(3)];
        let vals = values_of_cartan(&r, &h);
        for w in all_elements(&r).iter().take(20) {
            let lam = crate::chevalley::cartan_to_weight(&r, &h);
            let wl = w.apply_weight(&r, &lam);
            let wh = crate::chevalley::weight_to_cartan(&r, &wl);
            assert_eq!(values_of_cartan(&r, &wh), w.apply_values(&vals));
        }
    }

    #[test]
    fn dominant_values_are_nonnegative_on_positive_roots() {
        let r = rs("F4");
        let h = vec![q(-3), q(1), q(2), q(-1)];
        let d = to_dominant(&r, &values_of_cartan(&r, &h));
        assert!((0..r.num_positive()).all(|i| d[i] >= q(0)));
    }

    #[test]
    fn conjugacy_of_roots_by_length() {
        let r = rs("G2");
        let all: Vec<RootIndex> = (0..2).collect();
        assert!(conjugate_tuples(&r, &all, &[0], &[3]));
        assert!(!conjugate_tuples(&r, &all, &[0], &[1]));
        assert!(conjugate_sets(&r, &all, &[0, 1], &[1, 0]));
        assert!(!conjugate_tuples(&r, &[], &[0], &[2]));
    }
}
