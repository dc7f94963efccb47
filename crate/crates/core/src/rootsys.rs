//! Root systems of the simple types A–G built from their Cartan matrices.
//!
//! Simple roots follow Bourbaki numbering; for G2, α1 is short and α2 long.
//! The bilinear form is normalized so that short roots have squared length 2,
//! which makes it integral for every type. Roots are stored in simple-root
//! coordinates: the positive roots first, ordered by height and then
//! descending lexicographic coordinates (so the simple roots come first in
//! index order), followed by their negatives in the same order.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};

/// Index of a root inside [`RootSystem::roots`].
pub type RootIndex = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl TryFrom<char> for TypeLabel {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => TypeLabel::A,
            'B' => TypeLabel::B,
            'C' => TypeLabel::C,
            'D' => TypeLabel::D,
            'E' => TypeLabel::E,
            'F' => TypeLabel::F,
            'G' => TypeLabel::G,
            _ => return Err(Error::Parse(format!("unknown Lie type letter {c:?}"))),
        })
    }
}

/// A type label together with a rank, e.g. `E8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub label: TypeLabel,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(label: TypeLabel, rank: usize) -> Result<Self> {
        let bad = |reason| {
            Err(Error::InvalidType {
                label: label.to_string(),
                rank,
                reason,
            })
        };
        match label {
            TypeLabel::A if rank < 1 => bad("type A needs rank >= 1"),
            TypeLabel::B if rank < 2 => bad("type B needs rank >= 2"),
            TypeLabel::C if rank < 3 => bad("type C needs rank >= 3 (C2 is B2)"),
            TypeLabel::D if rank < 4 => bad("type D needs rank >= 4"),
            TypeLabel::E if !(6..=8).contains(&rank) => bad("type E needs rank 6, 7 or 8"),
            TypeLabel::F if rank != 4 => bad("type F only exists in rank 4"),
            TypeLabel::G if rank != 2 => bad("type G only exists in rank 2"),
            _ => Ok(SimpleType { label, rank }),
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.label {
            TypeLabel::A => fact(n + 1),
            TypeLabel::B | TypeLabel::C => (1u128 << n) * fact(n),
            TypeLabel::D => (1u128 << (n - 1)) * fact(n),
            TypeLabel::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            TypeLabel::F => 1152,
            TypeLabel::G => 12,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let c = chars
            .next()
            .ok_or_else(|| Error::Parse("empty type".into()))?;
        let label = TypeLabel::try_from(c)?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        SimpleType::new(label, rank)
    }
}

/// Cartan matrix `A[i][j] = <α_i, α_j^∨>` in Bourbaki numbering.
pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let l = t.rank;
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.label {
        TypeLabel::A | TypeLabel::B | TypeLabel::C => {
            for i in 0..l.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        TypeLabel::D => {
            for i in 0..l - 2 {
                link(i, i + 1);
            }
            link(l - 3, l - 1);
        }
        TypeLabel::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..l - 1 {
                link(i, i + 1);
            }
        }
        TypeLabel::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        TypeLabel::G => link(0, 1),
    }
    match t.label {
        // α_l short
        TypeLabel::B => a[l - 2][l - 1] = -2,
        // α_l long
        TypeLabel::C => a[l - 1][l - 2] = -2,
        // α1, α2 long; α3, α4 short
        TypeLabel::F => a[1][2] = -2,
        // α1 short, α2 long
        TypeLabel::G => a[1][0] = -3,
        _ => {}
    }
    a
}

/// Squared lengths `(α_i, α_i)` of the simple roots, short roots normalized to 2.
fn simple_norms(t: SimpleType) -> Vec<i64> {
    let l = t.rank;
    match t.label {
        TypeLabel::A | TypeLabel::D | TypeLabel::E => vec![2; l],
        TypeLabel::B => (0..l).map(|i| if i == l - 1 { 2 } else { 4 }).collect(),
        TypeLabel::C => (0..l).map(|i| if i == l - 1 { 4 } else { 2 }).collect(),
        TypeLabel::F => vec![4, 4, 2, 2],
        TypeLabel::G => vec![2, 6],
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: SimpleType,
    cartan: Vec<Vec<i64>>,
    form: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    n_pos: usize,
    index: HashMap<Vec<i64>, RootIndex>,
    norms: Vec<i64>,
    heights: Vec<i64>,
    marks: Vec<i64>,
    /// `reflect[r][s]` is the index of `s_r(s)`.
    reflect: Vec<Vec<u16>>,
}

impl RootSystem {
    /// Builds the root system of a simple type.
    pub fn new(t: SimpleType) -> Self {
        let l = t.rank;
        let cartan = cartan_matrix(t);
        let sn = simple_norms(t);
        // (α_i, α_j) = <α_i, α_j^∨> (α_j, α_j) / 2
        let form: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|j| cartan[i][j] * sn[j] / 2).collect())
            .collect();

        let unit = |i: usize| {
            let mut v = vec![0i64; l];
            v[i] = 1;
            v
        };
        let mut pos: Vec<Vec<i64>> = (0..l).map(unit).collect();
        let mut seen: HashSet<Vec<i64>> = pos.iter().cloned().collect();
        let mut k = 0;
        while k < pos.len() {
            let beta = pos[k].clone();
            for i in 0..l {
                if beta == unit(i) {
                    continue;
                }
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..l).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        pos.push(up);
                    }
                }
            }
            k += 1;
        }
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let n_pos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, RootIndex> =
            roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let inner = |a: &[i64], b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..l {
                if a[i] == 0 {
                    continue;
                }
                for j in 0..l {
                    s += a[i] * form[i][j] * b[j];
                }
            }
            s
        };
        let norms: Vec<i64> = roots.iter().map(|r| inner(r, r)).collect();
        let heights: Vec<i64> = roots.iter().map(|r| r.iter().sum()).collect();
        let highest = pos[n_pos - 1].clone();
        let mut marks = vec![1];
        marks.extend(highest.iter().copied());

        let reflect: Vec<Vec<u16>> = (0..roots.len())
            .map(|r| {
                (0..roots.len())
                    .map(|s| {
                        let c = 2 * inner(&roots[s], &roots[r]) / norms[r];
                        let img: Vec<i64> =
                            (0..l).map(|i| roots[s][i] - c * roots[r][i]).collect();
                        index[&img] as u16
                    })
                    .collect()
            })
            .collect();

        RootSystem {
            ty: t,
            cartan,
            form,
            roots,
            n_pos,
            index,
            norms,
            heights,
            marks,
            reflect,
        }
    }

    /// Validating constructor from a type letter and rank.
    pub fn build(label: TypeLabel, rank: usize) -> Result<Self> {
        Ok(Self::new(SimpleType::new(label, rank)?))
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots.
    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, r: RootIndex) -> &[i64] {
        &self.roots[r]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<RootIndex> {
        self.index.get(coords).copied()
    }

    /// Index of a root, or an error naming the offending vector.
    pub fn expect_root(&self, coords: &[i64]) -> Result<RootIndex> {
        if coords.len() != self.rank() {
            return Err(Error::NotARoot(coords.to_vec()));
        }
        self.index_of(coords)
            .ok_or_else(|| Error::NotARoot(coords.to_vec()))
    }

    pub fn is_positive(&self, r: RootIndex) -> bool {
        r < self.n_pos
    }

    pub fn negate(&self, r: RootIndex) -> RootIndex {
        if r < self.n_pos {
            r + self.n_pos
        } else {
            r - self.n_pos
        }
    }

    pub fn simple(&self, i: usize) -> RootIndex {
        i
    }

    pub fn height(&self, r: RootIndex) -> i64 {
        self.heights[r]
    }

    /// Squared length `(α, α)`.
    pub fn norm(&self, r: RootIndex) -> i64 {
        self.norms[r]
    }

    /// Marks `a_0, …, a_l` of the extended diagram, `a_0 = 1`.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn highest_root(&self) -> RootIndex {
        self.n_pos - 1
    }

    pub fn lowest_root(&self) -> RootIndex {
        self.negate(self.highest_root())
    }

    /// Index of `a + b` when it is a root.
    pub fn add(&self, a: RootIndex, b: RootIndex) -> Option<RootIndex> {
        let s: Vec<i64> = self.roots[a]
            .iter()
            .zip(&self.roots[b])
            .map(|(x, y)| x + y)
            .collect();
        self.index_of(&s)
    }

    /// Index of `a - b` when it is a root.
    pub fn sub(&self, a: RootIndex, b: RootIndex) -> Option<RootIndex> {
        self.add(a, self.negate(b))
    }

    /// Inner product of two integer vectors in simple-root coordinates.
    pub fn inner_int(&self, a: &[i64], b: &[i64]) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if a[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += a[i] * self.form[i][j] * b[j];
            }
        }
        s
    }

    pub fn inner_roots(&self, a: RootIndex, b: RootIndex) -> i64 {
        self.inner_int(&self.roots[a], &self.roots[b])
    }

    /// Inner product of two rational weights.
    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        let l = self.rank();
        let mut s = Q::zero();
        for i in 0..l {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..l {
                if b[j].is_zero() || self.form[i][j] == 0 {
                    continue;
                }
                s += &a[i] * &b[j] * q(self.form[i][j]);
            }
        }
        s
    }

    /// `<a, b^∨>` for roots `a`, `b`.
    pub fn cartan_int(&self, a: RootIndex, b: RootIndex) -> i64 {
        2 * self.inner_roots(a, b) / self.norms[b]
    }

    /// `<λ, μ^∨> = 2(λ, μ)/(μ, μ)` for a rational weight `λ` and root `μ`.
    pub fn pairing(&self, lambda: &[Q], mu: RootIndex) -> Q {
        let m: Vec<Q> = self.roots[mu].iter().map(|&x| q(x)).collect();
        self.inner(lambda, &m) * q(2) / q(self.norms[mu])
    }

    /// `<λ, μ^∨>` for an arbitrary nonzero vector `μ` of the root lattice.
    pub fn pairing_vec(&self, lambda: &[Q], mu: &[i64]) -> Result<Q> {
        if mu.iter().all(|&x| x == 0) {
            return Err(Error::NotARoot(mu.to_vec()));
        }
        let m: Vec<Q> = mu.iter().map(|&x| q(x)).collect();
        Ok(self.inner(lambda, &m) * q(2) / self.inner(&m, &m))
    }

    /// Index of `s_r(s)`.
    pub fn reflect_root(&self, r: RootIndex, s: RootIndex) -> RootIndex {
        self.reflect[r][s] as RootIndex
    }

    pub fn reflection_table(&self, r: RootIndex) -> &[u16] {
        &self.reflect[r]
    }

    /// `s_r(λ) = λ - <λ, r^∨> r` on a rational weight.
    pub fn reflect_weight(&self, r: RootIndex, lambda: &[Q]) -> Vec<Q> {
        let c = self.pairing(lambda, r);
        lambda
            .iter()
            .zip(&self.roots[r])
            .map(|(x, &y)| x - &c * q(y))
            .collect()
    }

    /// Coroot `α^∨` expressed in the basis of simple coroots.
    pub fn coroot_coords(&self, r: RootIndex) -> Vec<i64> {
        // α^∨ = 2α/(α,α) = Σ k_i (α_i,α_i)/(α,α) α_i^∨
        (0..self.rank())
            .map(|i| self.roots[r][i] * self.norms[i] / self.norms[r])
            .collect()
    }

    pub fn weight_of_root(&self, r: RootIndex) -> Vec<Q> {
        self.roots[r].iter().map(|&x| q(x)).collect()
    }

    /// Matrix `<γ_i, γ_j^∨>` for a list of roots.
    pub fn cartan_of(&self, gamma: &[RootIndex]) -> Vec<Vec<i64>> {
        gamma
            .iter()
            .map(|&a| gamma.iter().map(|&b| self.cartan_int(a, b)).collect())
            .collect()
    }

    /// Whether the roots are linearly independent over the rationals.
    pub fn independent(&self, gamma: &[RootIndex]) -> bool {
        let rows: Vec<Vec<i64>> = gamma.iter().map(|&g| self.roots[g].clone()).collect();
        linalg::rank_i64(&rows) == gamma.len()
    }

    /// The root subsystem generated by `basis` under its own reflections,
    /// returned with coordinates relative to `basis`.
    pub fn subsystem(&self, basis: &[RootIndex]) -> Vec<(RootIndex, Vec<i64>)> {
        let s = basis.len();
        let mut out: Vec<(RootIndex, Vec<i64>)> = Vec::new();
        let mut seen: HashSet<RootIndex> = HashSet::new();
        let mut queue: VecDeque<(RootIndex, Vec<i64>)> = VecDeque::new();
        for (k, &b) in basis.iter().enumerate() {
            let mut c = vec![0; s];
            c[k] = 1;
            if seen.insert(b) {
                queue.push_back((b, c));
            }
        }
        while let Some((r, c)) = queue.pop_front() {
            for (k, &b) in basis.iter().enumerate() {
                let img = self.reflect_root(b, r);
                if seen.insert(img) {
                    let mut c2 = c.clone();
                    c2[k] -= self.cartan_int(r, b);
                    queue.push_back((img, c2));
                }
            }
            out.push((r, c));
        }
        out
    }

    /// Lowest root of the subsystem with the connected basis `basis`.
    pub fn lowest_root_of_subsystem(&self, basis: &[RootIndex]) -> Result<RootIndex> {
        if basis.is_empty() || !self.independent(basis) {
            return Err(Error::NotPiSystem("basis is empty or dependent".into()));
        }
        if components(&self.cartan_of(basis)).len() != 1 {
            return Err(Error::NotPiSystem("basis is not connected".into()));
        }
        let sub = self.subsystem(basis);
        let (top, _) = sub
            .iter()
            .max_by_key(|(_, c)| c.iter().sum::<i64>())
            .expect("nonempty");
        Ok(self.negate(*top))
    }

    /// Same as [`lowest_root_of_subsystem`](Self::lowest_root_of_subsystem)
    /// but taking coordinate vectors.
    pub fn lowest_root_of(&self, basis: &[Vec<i64>]) -> Result<Vec<i64>> {
        let idx = basis
            .iter()
            .map(|b| self.expect_root(b))
            .collect::<Result<Vec<_>>>()?;
        let r = self.lowest_root_of_subsystem(&idx)?;
        Ok(self.roots[r].clone())
    }

    /// Simple roots, positive in Φ, of the subsystem generated by `gens`.
    pub fn positive_basis(&self, gens: &[RootIndex]) -> Vec<RootIndex> {
        let sub: HashSet<RootIndex> = self
            .subsystem(gens)
            .into_iter()
            .map(|(r, _)| r)
            .filter(|&r| self.is_positive(r))
            .collect();
        let mut basis: Vec<RootIndex> = sub
            .iter()
            .copied()
            .filter(|&r| {
                !sub.iter().any(|&a| {
                    self.sub(r, a)
                        .is_some_and(|b| self.is_positive(b) && sub.contains(&b))
                })
            })
            .collect();
        basis.sort_unstable();
        basis
    }

    /// Extended Cartan matrix on nodes `0..=l`, node 0 being the lowest root.
    pub fn extended_cartan(&self) -> Vec<Vec<i64>> {
        let nodes: Vec<RootIndex> = std::iter::once(self.lowest_root())
            .chain(0..self.rank())
            .collect();
        self.cartan_of(&nodes)
    }

    /// Dynkin type of the subsystem with basis `gamma`, e.g. `"A5+A1"`.
    pub fn dynkin_type(&self, gamma: &[RootIndex]) -> String {
        let cm = self.cartan_of(gamma);
        let mut parts: Vec<(usize, char)> = components(&cm)
            .into_iter()
            .map(|comp| {
                let sub: Vec<RootIndex> = comp.iter().map(|&i| gamma[i]).collect();
                component_type(self, &sub)
            })
            .collect();
        format_type(&mut parts)
    }

    /// Order of the Weyl group of the subsystem with basis `gamma`.
    pub fn weyl_order_of(&self, gamma: &[RootIndex]) -> u128 {
        let cm = self.cartan_of(gamma);
        components(&cm)
            .into_iter()
            .map(|comp| {
                let sub: Vec<RootIndex> = comp.iter().map(|&i| gamma[i]).collect();
                let (n, c) = component_type(self, &sub);
                let label = TypeLabel::try_from(c).expect("valid letter");
                SimpleType { label, rank: n }.weyl_order()
            })
            .product()
    }

    /// Multi-line textual dump: Cartan matrix, marks and positive roots.
    pub fn dump(&self) -> String {
        let mut s = format!(
            "type {}  roots {}  positive {}\n",
            self.ty,
            self.num_roots(),
            self.n_pos
        );
        s.push_str("cartan matrix:\n");
        for row in &self.cartan {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            s.push_str(&format!("  {}\n", cells.join("")));
        }
        let marks: Vec<String> = self.marks.iter().map(|m| m.to_string()).collect();
        s.push_str(&format!("marks: {}\n", marks.join(",")));
        s.push_str("positive roots:\n");
        for r in 0..self.n_pos {
            let c: Vec<String> = self.roots[r].iter().map(|x| x.to_string()).collect();
            s.push_str(&format!(
                "  [{}]  height {}  norm {}\n",
                c.join(","),
                self.heights[r],
                self.norms[r]
            ));
        }
        s
    }
}

/// Connected components of the Dynkin diagram of a Cartan-type matrix.
pub fn components(cm: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cm.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut k = 0;
        while k < members.len() {
            let i = members[k];
            for j in 0..n {
                if comp[j] == usize::MAX && cm[i][j] != 0 {
                    comp[j] = id;
                    members.push(j);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn component_type(rs: &RootSystem, comp: &[RootIndex]) -> (usize, char) {
    let n = comp.len();
    let cm = rs.cartan_of(comp);
    let edge = |i: usize, j: usize| cm[i][j] * cm[j][i];
    let degree = |i: usize| (0..n).filter(|&j| j != i && cm[i][j] != 0).count();
    if n == 1 {
        return (1, 'A');
    }
    let mut max_mult = 0;
    let mut double = None;
    for i in 0..n {
        for j in 0..n {
            if i != j && edge(i, j) > max_mult {
                max_mult = edge(i, j);
                double = Some((i, j));
            }
        }
    }
    match max_mult {
        3 => (2, 'G'),
        2 => {
            if n == 2 {
                return (2, 'B');
            }
            let (i, j) = double.expect("double edge");
            if degree(i) == 2 && degree(j) == 2 {
                return (4, 'F');
            }
            // end node of the double edge decides between B and C
            let end = if degree(i) == 1 { i } else { j };
            let other = if end == i { j } else { i };
            if rs.norm(comp[end]) < rs.norm(comp[other]) {
                (n, 'B')
            } else {
                (n, 'C')
            }
        }
        _ => {
            let Some(branch) = (0..n).find(|&i| degree(i) == 3) else {
                return (n, 'A');
            };
            let mut arms: Vec<usize> = (0..n)
                .filter(|&j| j != branch && cm[branch][j] != 0)
                .map(|start| {
                    let mut len = 1;
                    let mut prev = branch;
                    let mut cur = start;
                    loop {
                        let next = (0..n).find(|&k| k != cur && k != prev && cm[cur][k] != 0);
                        match next {
                            Some(k) => {
                                prev = cur;
                                cur = k;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            if arms[0] == 1 && arms[1] == 1 {
                (n, 'D')
            } else {
                (n, 'E')
            }
        }
    }
}

fn format_type(parts: &mut [(usize, char)]) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        let k = j - i;
        let (n, c) = parts[i];
        if k > 1 {
            out.push(format!("{k}{c}{n}"));
        } else {
            out.push(format!("{c}{n}"));
        }
        i = j;
    }
    out.join("+")
}

/// Converts a list of root coordinate vectors into indices.
pub fn indices_of(rs: &RootSystem, roots: &[Vec<i64>]) -> Result<Vec<RootIndex>> {
    roots.iter().map(|r| rs.expect_root(r)).collect()
}

/// Zero weight of the right dimension.
pub fn zero_weight(rs: &RootSystem) -> Vec<Q> {
    vec![Q::zero(); rs.rank()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn root_counts_match_classical_values() {
        for (t, n) in [
            ("A1", 2),
            ("A2", 6),
            ("A4", 20),
            ("B3", 18),
            ("C3", 18),
            ("D4", 24),
            ("D5", 40),
            ("G2", 12),
            ("F4", 48),
            ("E6", 72),
            ("E7", 126),
            ("E8", 240),
        ] {
            assert_eq!(rs(t).num_roots(), n, "{t}");
        }
    }

    #[test]
    fn g2_marks_and_pairings() {
        let g = rs("G2");
        assert_eq!(g.num_positive(), 6);
        assert_eq!(g.marks(), &[1, 3, 2][..]);
        assert_eq!(g.cartan_int(0, 1), -1);
        assert_eq!(g.cartan_int(1, 0), -3);
        assert_eq!(g.root(g.highest_root()), &[3, 2][..]);
        assert_eq!(g.norm(0), 2);
        assert_eq!(g.norm(1), 6);
    }

    #[test]
    fn a1_single_positive_root() {
        let a = rs("A1");
        assert_eq!(a.num_positive(), 1);
        assert_eq!(a.root(a.highest_root()), &[1][..]);
    }

    #[test]
    fn pairing_examples() {
        let a2 = rs("A2");
        let a1 = a2.weight_of_root(0);
        assert_eq!(a2.pairing(&a1, 0), q(2));
        let sum = vec![q(1), q(1)];
        assert_eq!(a2.pairing(&sum, 0), q(1));
        let g = rs("G2");
        assert_eq!(g.pairing(&g.weight_of_root(0), 1), q(-1));
        assert_eq!(g.pairing(&g.weight_of_root(1), 0), q(-3));
        assert!(g.pairing_vec(&g.weight_of_root(0), &[0, 0]).is_err());
    }

    #[test]
    fn invalid_types_are_rejected() {
        assert!(SimpleType::new(TypeLabel::C, 2).is_err());
        assert!(SimpleType::new(TypeLabel::D, 3).is_err());
        assert!(SimpleType::new(TypeLabel::E, 5).is_err());
        assert!(SimpleType::new(TypeLabel::G, 3).is_err());
        assert!("X3".parse::<SimpleType>().is_err());
        let err = SimpleType::new(TypeLabel::B, 1).unwrap_err();
        assert!(err.to_string().contains("rank >= 2"));
    }

    #[test]
    fn lowest_roots_of_subsystems() {
        let a2 = rs("A2");
        assert_eq!(a2.lowest_root_of(&[vec![1, 0], vec![0, 1]]).unwrap(), vec![-1, -1]);
        assert_eq!(a2.lowest_root_of(&[vec![0, 1]]).unwrap(), vec![0, -1]);
        let g = rs("G2");
        assert_eq!(g.lowest_root_of(&[vec![1, 0], vec![0, 1]]).unwrap(), vec![-3, -2]);
        let a3 = rs("A3");
        assert!(a3.lowest_root_of(&[vec![1, 0, 0], vec![0, 0, 1]]).is_err());
        assert!(a3.lowest_root_of(&[vec![1, 0, 0], vec![1, 0, 0]]).is_err());
    }

    #[test]
    fn dynkin_types_of_subsystems() {
        let e8 = rs("E8");
        assert_eq!(e8.dynkin_type(&(0..8).collect::<Vec<_>>()), "E8");
        let f4 = rs("F4");
        assert_eq!(f4.dynkin_type(&[0, 1, 2, 3]), "F4");
        assert_eq!(f4.dynkin_type(&[0, 1, 2]), "B3");
        assert_eq!(f4.dynkin_type(&[1, 2, 3]), "C3");
        assert_eq!(rs("D5").dynkin_type(&[0, 1, 2, 3, 4]), "D5");
        assert_eq!(rs("E6").dynkin_type(&[0, 2, 4, 5]), "2A2");
        assert_eq!(rs("B3").dynkin_type(&[]), "0");
    }

    #[test]
    fn positive_basis_of_extended_minus_node() {
        let e8 = rs("E8");
        let gens: Vec<RootIndex> = std::iter::once(e8.lowest_root())
            .chain((0..8).filter(|&i| i != 4))
            .collect();
        let b = e8.positive_basis(&gens);
        assert_eq!(b.len(), 8);
        assert_eq!(e8.dynkin_type(&b), "2A4");
        assert_eq!(e8.weyl_order_of(&b), 14_400);
    }

    #[test]
    fn form_is_positive_definite() {
        for t in ["B4", "C4", "F4", "G2", "E7", "D6"] {
            let r = rs(t);
            let l = r.rank();
            for k in 1..=l {
                let minor: Vec<Vec<Q>> = (0..k)
                    .map(|i| (0..k).map(|j| q(r.form()[i][j])).collect())
                    .collect();
                assert!(linalg::det(&minor) > Q::zero(), "{t} minor {k}");
            }
        }
    }

    #[test]
    fn reflections_permute_roots_and_pairings_are_integral() {
        for t in ["B3", "C3", "G2", "F4", "D4"] {
            let r = rs(t);
            for a in 0..r.num_roots() {
                for b in 0..r.num_roots() {
                    let c = 2 * r.inner_roots(b, a);
                    assert_eq!(c % r.norm(a), 0);
                    let img = r.reflect_root(a, b);
                    assert_eq!(r.norm(img), r.norm(b));
                }
            }
        }
    }

    #[test]
    fn root_strings_match_cartan_integers() {
        // p - q = <β, α^∨> for the α-string β - pα, …, β + qα.
        for t in ["G2", "F4", "B3", "C3"] {
            let r = rs(t);
            for a in 0..r.num_roots() {
                for b in 0..r.num_roots() {
                    if b == a || b == r.negate(a) {
                        continue;
                    }
                    let step = |sign: i64| {
                        let mut k = 0;
                        loop {
                            let v: Vec<i64> = r
                                .root(b)
                                .iter()
                                .zip(r.root(a))
                                .map(|(x, y)| x + sign * (k + 1) * y)
                                .collect();
                            if r.index_of(&v).is_some() {
                                k += 1;
                            } else {
                                break k;
                            }
                        }
                    };
                    assert_eq!(step(-1) - step(1), r.cartan_int(b, a));
                }
            }
        }
    }

    #[test]
    fn highest_root_is_sum_of_marks() {
        for t in ["E6", "E7", "E8", "F4", "G2", "B5", "C4", "D6", "A5"] {
            let r = rs(t);
            assert_eq!(&r.marks()[1..], r.root(r.highest_root()));
        }
    }
}
