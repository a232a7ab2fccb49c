//! Finite abelian groups, subgroups, quotients, and characters.
//!
//! Groups are presented by invariant factors `ℤ/n₁ × … × ℤ/n_d`.  All
//! structure theory (quotients, the invariant factors of a subgroup)
//! reduces to the Smith normal form of an integer matrix, computed here
//! with full transformation matrices so that explicit coordinate maps —
//! projections, sections, generator lifts — come out of the same
//! computation.

use crate::error::{Result, ZcrossError};
use crate::scalar::Phase;
use num::rational::Ratio;
use std::collections::{BTreeSet, HashMap, VecDeque};

/// A group element in coordinates relative to the invariant factors.
pub type Elem = Vec<i64>;

/// Smith normal form `D = U · M · V` of an integer matrix.
///
/// `U` and `V` are unimodular; `D` is diagonal (rectangular) with
/// `d₁ | d₂ | …` along the diagonal, all entries non-negative.
pub struct Smith {
    pub d: Vec<Vec<i64>>,
    pub u: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
}

/// Compute the Smith normal form with transformations.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Smith {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut d: Vec<Vec<i64>> = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    loop {
        diagonalize(&mut d, &mut u, &mut v);
        // Enforce the divisibility chain: if dᵢ ∤ dᵢ₊₁, mixing the two
        // columns and re-diagonalizing replaces the pair with
        // (gcd, lcm).  Each mix strictly decreases dᵢ, so this terminates.
        let k = rows.min(cols);
        let violation = (0..k.saturating_sub(1)).find(|&i| {
            let (a, b) = (d[i][i], d[i + 1][i + 1]);
            a != 0 && b % a != 0
        });
        match violation {
            Some(i) => add_col(&mut d, &mut v, i, i + 1, 1),
            None => break,
        }
    }

    // Normalize signs to non-negative.
    for i in 0..rows.min(cols) {
        if d[i][i] < 0 {
            for j in 0..cols {
                d[i][j] = -d[i][j];
            }
            negate_row(&mut u, i);
        }
    }
    Smith { d, u, v }
}

/// Bring `d` to diagonal form by unimodular row/column operations,
/// mirrored into `u` and `v`.
fn diagonalize(d: &mut Vec<Vec<i64>>, u: &mut Vec<Vec<i64>>, v: &mut Vec<Vec<i64>>) {
    let rows = d.len();
    let cols = if rows == 0 { 0 } else { d[0].len() };
    let mut t = 0; // current pivot index
    while t < rows.min(cols) {
        // Find a nonzero pivot in the remaining block.
        let mut pivot = None;
        'search: for i in t..rows {
            for j in t..cols {
                if d[i][j] != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(d, u, t, pi);
        swap_cols(d, v, t, pj);

        // Eliminate the pivot row and column, restarting whenever an
        // elimination step leaves a nonzero remainder (standard SNF loop;
        // each pass strictly decreases |pivot|, so it terminates).
        loop {
            let mut clean = true;
            for i in (t + 1)..rows {
                while d[i][t] != 0 {
                    let q = d[i][t].div_euclid(d[t][t]);
                    add_row(d, u, i, t, -q);
                    if d[i][t] != 0 {
                        swap_rows(d, u, t, i);
                        clean = false;
                    }
                }
            }
            for j in (t + 1)..cols {
                while d[t][j] != 0 {
                    let q = d[t][j].div_euclid(d[t][t]);
                    add_col(d, v, j, t, -q);
                    if d[t][j] != 0 {
                        swap_cols(d, v, t, j);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        t += 1;
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

fn swap_rows(d: &mut [Vec<i64>], u: &mut [Vec<i64>], a: usize, b: usize) {
    d.swap(a, b);
    u.swap(a, b);
}

fn swap_cols(d: &mut [Vec<i64>], v: &mut [Vec<i64>], a: usize, b: usize) {
    for row in d.iter_mut() {
        row.swap(a, b);
    }
    for row in v.iter_mut() {
        row.swap(a, b);
    }
}

/// row_i += c · row_j (applied to both `d` and `u`).
fn add_row(d: &mut [Vec<i64>], u: &mut [Vec<i64>], i: usize, j: usize, c: i64) {
    for k in 0..d[0].len() {
        d[i][k] += c * d[j][k];
    }
    for k in 0..u[0].len() {
        u[i][k] += c * u[j][k];
    }
}

/// col_i += c · col_j (applied to both `d` and `v`).
fn add_col(d: &mut [Vec<i64>], v: &mut [Vec<i64>], i: usize, j: usize, c: i64) {
    for row in d.iter_mut() {
        row[i] += c * row[j];
    }
    for row in v.iter_mut() {
        row[i] += c * row[j];
    }
}

fn negate_row(u: &mut [Vec<i64>], i: usize) {
    for x in &mut u[i] {
        *x = -*x;
    }
}

/// Integer matrix product.
pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let k = if n == 0 { 0 } else { a[0].len() };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
        .collect()
}

/// Inverse of a unimodular integer matrix (exact, via rational elimination).
pub fn unimodular_inverse(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> =
        m.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect()).collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| (0..n).map(|j| Ratio::from_integer((i == j) as i64)).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Ratio::from_integer(0))
            .expect("unimodular matrix must be invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] = a[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for r in 0..n {
            if r != col && a[r][col] != Ratio::from_integer(0) {
                let f = a[r][col];
                for j in 0..n {
                    let t = f * a[col][j];
                    a[r][j] = a[r][j] - t;
                    let t = f * inv[col][j];
                    inv[r][j] = inv[r][j] - t;
                }
            }
        }
    }
    inv.iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    assert!(x.denom() == &1, "inverse of unimodular matrix must be integral");
                    *x.numer()
                })
                .collect()
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

/// A finite abelian group `ℤ/n₁ × … × ℤ/n_d` with `n₁ | n₂ | …` not
/// required (any list of moduli ≥ 1 is accepted; invariant factors are
/// produced by the structure computations when needed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbGroup {
    pub factors: Vec<i64>,
}

impl AbGroup {
    pub fn new(factors: Vec<i64>) -> Result<Self> {
        if factors.iter().any(|&n| n < 1) {
            return Err(ZcrossError::InvalidInput(format!(
                "invariant factors must be ≥ 1, got {:?}",
                factors
            )));
        }
        Ok(AbGroup { factors })
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        AbGroup { factors: vec![] }
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> i64 {
        self.factors.iter().product()
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.factors.len()]
    }

    /// Reduce coordinates into canonical range `0 ≤ xᵢ < nᵢ`.
    pub fn normalize(&self, x: &[i64]) -> Elem {
        x.iter().zip(&self.factors).map(|(&a, &n)| a.rem_euclid(n)).collect()
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Elem {
        self.normalize(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: &[i64]) -> Elem {
        self.normalize(&a.iter().map(|x| -x).collect::<Vec<_>>())
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: i64, a: &[i64]) -> Elem {
        self.normalize(&a.iter().map(|x| k * x).collect::<Vec<_>>())
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    /// All elements in lexicographic order of coordinates.
    pub fn elements(&self) -> Vec<Elem> {
        let mut out = vec![vec![]];
        for &n in &self.factors {
            let mut next = Vec::with_capacity(out.len() * n as usize);
            for prefix in &out {
                for x in 0..n {
                    let mut e = prefix.clone();
                    e.push(x);
                    next.push(e);
                }
            }
            out = next;
        }
        out
    }

    /// Index of an element in the lexicographic enumeration.
    pub fn index_of(&self, a: &[i64]) -> usize {
        let a = self.normalize(a);
        let mut idx = 0usize;
        for (x, &n) in a.iter().zip(&self.factors) {
            idx = idx * n as usize + *x as usize;
        }
        idx
    }

    /// Element at a lexicographic index.
    pub fn elem_at(&self, mut idx: usize) -> Elem {
        let mut out = vec![0i64; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            let n = self.factors[i] as usize;
            out[i] = (idx % n) as i64;
            idx /= n;
        }
        out
    }

    /// The standard generators (unit coordinate vectors).
    pub fn standard_generators(&self) -> Vec<Elem> {
        (0..self.factors.len())
            .map(|i| {
                let mut e = self.zero();
                e[i] = 1;
                e
            })
            .collect()
    }

    /// The additive order of an element.
    pub fn elem_order(&self, a: &[i64]) -> i64 {
        let mut k = 1;
        let mut acc = self.normalize(a);
        while !self.is_zero(&acc) {
            acc = self.add(&acc, a);
            k += 1;
        }
        k
    }

    /// The character `χ_c(x) = e(Σ cᵢxᵢ/nᵢ)` indexed by dual coordinates
    /// `c` (which range over the same coordinate boxes as elements).
    pub fn character(&self, c: &[i64], x: &[i64]) -> Phase {
        let mut r = Ratio::from_integer(0);
        for ((ci, xi), &n) in c.iter().zip(x).zip(&self.factors) {
            r += Ratio::new(ci * xi, n);
        }
        Phase::new(r)
    }

    /// Closure of a generating set: the full sorted element list of the
    /// subgroup generated by `gens`.
    pub fn span(&self, gens: &[Elem]) -> BTreeSet<Elem> {
        let mut seen: BTreeSet<Elem> = BTreeSet::new();
        let mut queue: VecDeque<Elem> = VecDeque::new();
        seen.insert(self.zero());
        queue.push_back(self.zero());
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = self.add(&x, g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// The quotient `G / ⟨gens⟩` together with explicit projection data.
    pub fn quotient(&self, gens: &[Elem]) -> Quotient {
        let d = self.factors.len();
        // Relations of the quotient ℤ^d-presentation: the moduli rows and
        // the subgroup generators.
        let mut m: Vec<Vec<i64>> = Vec::new();
        for i in 0..d {
            let mut row = vec![0i64; d];
            row[i] = self.factors[i];
            m.push(row);
        }
        for g in gens {
            m.push(g.clone());
        }
        let s = smith_normal_form(&m);
        // Quotient coordinates of x are (x·V) mod dᵢ; factors with dᵢ = 1
        // are dropped.
        let mut kept = Vec::new();
        let mut factors = Vec::new();
        for i in 0..d {
            let di = s.d[i][i];
            assert!(di > 0, "quotient of a finite group must be finite");
            if di > 1 {
                kept.push(i);
                factors.push(di);
            }
        }
        let group = AbGroup { factors };
        let v = s.v;
        let mut q = Quotient { group, v, kept, ambient_factors: self.factors.clone(), section: HashMap::new() };
        // Section: the first element (in ambient lexicographic order)
        // mapping onto each coset is its canonical representative.
        for x in self.elements() {
            let key = q.project_raw(&x);
            q.section.entry(key).or_insert(x);
        }
        q
    }

    /// The quotient `G / 2G` (cokernel of multiplication by 2).
    pub fn mod2_quotient(&self) -> Quotient {
        let gens: Vec<Elem> =
            self.standard_generators().iter().map(|g| self.scale(2, g)).collect();
        self.quotient(&gens)
    }

    /// Invariant factors and matching generators of the subgroup
    /// generated by `gens`.
    ///
    /// The relation lattice `R = {x ∈ ℤᵏ : Σ xᵢ gᵢ = 0}` is the left
    /// kernel of the stacked matrix `[gens; diag(n)]` restricted to its
    /// first `k` coordinates; the Smith form of `R` then yields both the
    /// invariant factors and the change of generators.
    pub fn subgroup_structure(&self, gens: &[Elem]) -> (Vec<i64>, Vec<Elem>) {
        let k = gens.len();
        if k == 0 {
            return (vec![], vec![]);
        }
        let d = self.factors.len();
        let mut m: Vec<Vec<i64>> = gens.to_vec();
        for i in 0..d {
            let mut row = vec![0i64; d];
            row[i] = self.factors[i];
            m.push(row);
        }
        // Left kernel basis: rows of U corresponding to zero rows of D.
        let s = smith_normal_form(&m);
        let rank = (0..(k + d).min(d)).filter(|&i| s.d[i][i] != 0).count();
        let mut relations: Vec<Vec<i64>> = Vec::new();
        for i in rank..(k + d) {
            relations.push(s.u[i][..k].to_vec());
        }
        let rs = smith_normal_form(&relations);
        let vinv = unimodular_inverse(&rs.v);
        let mut factors = Vec::new();
        let mut new_gens = Vec::new();
        for i in 0..k {
            let di = if i < relations.len() { rs.d[i][i] } else { 0 };
            assert!(di != 0, "subgroup of a finite group must be finite");
            if di > 1 {
                factors.push(di);
                // Generator i in the new coordinates is Σⱼ (V⁻¹)ᵢⱼ·gⱼ.
                let mut g = self.zero();
                for j in 0..k {
                    g = self.add(&g, &self.scale(vinv[i][j], &gens[j]));
                }
                new_gens.push(g);
            }
        }
        (factors, new_gens)
    }

    /// Every subgroup, as a sorted element set, found by closing under
    /// single-element extensions from the trivial subgroup.  Practical for
    /// the small orders this crate targets.
    pub fn all_subgroups(&self) -> Vec<BTreeSet<Elem>> {
        let elements = self.elements();
        let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
        let trivial: BTreeSet<Elem> = [self.zero()].into_iter().collect();
        let mut queue: VecDeque<BTreeSet<Elem>> = VecDeque::new();
        found.insert(trivial.iter().cloned().collect());
        queue.push_back(trivial);
        while let Some(sub) = queue.pop_front() {
            for x in &elements {
                if sub.contains(x) {
                    continue;
                }
                let mut gens: Vec<Elem> = sub.iter().cloned().collect();
                gens.push(x.clone());
                let bigger = self.span(&gens);
                let key: Vec<Elem> = bigger.iter().cloned().collect();
                if found.insert(key) {
                    queue.push_back(bigger);
                }
            }
        }
        found.into_iter().map(|v| v.into_iter().collect()).collect()
    }
}

/// A quotient `G/H` with its projection and a chosen section.
#[derive(Debug)]
pub struct Quotient {
    /// The quotient group (factors > 1 only).
    pub group: AbGroup,
    /// Column transform from the Smith computation.
    v: Vec<Vec<i64>>,
    /// Indices of the diagonal entries > 1.
    kept: Vec<usize>,
    ambient_factors: Vec<i64>,
    /// Canonical coset representatives, keyed by quotient coordinates.
    section: HashMap<Elem, Elem>,
}

impl Quotient {
    fn project_raw(&self, x: &[i64]) -> Elem {
        let d = self.ambient_factors.len();
        let mut y = vec![0i64; d];
        for j in 0..d {
            for i in 0..d {
                y[j] += x[i] * self.v[i][j];
            }
        }
        self.kept
            .iter()
            .zip(&self.group.factors)
            .map(|(&i, &n)| y[i].rem_euclid(n))
            .collect()
    }

    /// Image of an ambient element in the quotient.
    pub fn project(&self, x: &[i64]) -> Elem {
        self.project_raw(x)
    }

    /// The canonical representative of a coset (first in ambient
    /// lexicographic order).
    pub fn lift(&self, q: &[i64]) -> Elem {
        self.section
            .get(&self.group.normalize(q))
            .expect("quotient coordinates out of range")
            .clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::Ratio;
    use proptest::prelude::*;

    fn check_snf(m: &[Vec<i64>]) {
        let s = smith_normal_form(m);
        // D = U·M·V
        assert_eq!(s.d, mat_mul(&mat_mul(&s.u, m), &s.v), "D = U·M·V failed for {:?}", m);
        // U, V unimodular
        let ui = unimodular_inverse(&s.u);
        assert_eq!(mat_mul(&s.u, &ui), identity(s.u.len()));
        let vi = unimodular_inverse(&s.v);
        assert_eq!(mat_mul(&s.v, &vi), identity(s.v.len()));
        // Diagonal, non-negative, divisibility chain
        let rows = s.d.len();
        let cols = if rows == 0 { 0 } else { s.d[0].len() };
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    assert_eq!(s.d[i][j], 0, "off-diagonal in SNF of {:?}", m);
                }
            }
        }
        let mut prev: Option<i64> = None;
        for i in 0..rows.min(cols) {
            let di = s.d[i][i];
            assert!(di >= 0);
            if let Some(p) = prev {
                if p == 0 {
                    assert_eq!(di, 0, "zero must be last in the chain");
                } else {
                    assert_eq!(di % p, 0, "divisibility chain broken in {:?}", m);
                }
            }
            prev = Some(di);
        }
    }

    #[test]
    fn snf_known_examples() {
        check_snf(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        let s = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
        assert_eq!((s.d[0][0], s.d[1][1], s.d[2][2]), (2, 2, 156));
        check_snf(&[vec![0, 0], vec![0, 0]]);
        check_snf(&[vec![1]]);
        check_snf(&[vec![6, 4], vec![4, 6]]);
        check_snf(&[vec![3, 0, 0]]);
        check_snf(&[vec![3], vec![0], vec![5]]);
    }

    proptest! {
        #[test]
        fn snf_random_matrices(rows in 1usize..4, cols in 1usize..4, seed in proptest::collection::vec(-9i64..10, 16)) {
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[i * cols + j]).collect())
                .collect();
            check_snf(&m);
        }
    }

    #[test]
    fn group_arithmetic() {
        let g = AbGroup::new(vec![2, 4]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.add(&[1, 3], &[1, 2]), vec![0, 1]);
        assert_eq!(g.neg(&[1, 1]), vec![1, 3]);
        assert_eq!(g.elements().len(), 8);
        for (i, e) in g.elements().iter().enumerate() {
            assert_eq!(g.index_of(e), i);
            assert_eq!(&g.elem_at(i), e);
        }
        assert_eq!(g.elem_order(&[1, 2]), 2);
        assert_eq!(g.elem_order(&[0, 1]), 4);
    }

    #[test]
    fn characters_are_multiplicative_and_separate_points() {
        let g = AbGroup::new(vec![2, 4]).unwrap();
        let duals = g.elements();
        for c in &duals {
            for x in g.elements() {
                for y in g.elements() {
                    let lhs = g.character(c, &g.add(&x, &y));
                    let rhs = g.character(c, &x) * g.character(c, &y);
                    assert_eq!(lhs, rhs);
                }
            }
        }
        // Orthogonality: Σ_x χ_c(x) = |G|·δ_{c,0}.
        for c in &duals {
            let mut s = crate::scalar::ScalarSum::zero();
            for x in g.elements() {
                s.push(crate::scalar::ScaledScalar::from_phase(g.character(c, &x)));
            }
            if g.is_zero(c) {
                assert!(s.eq_rational(Ratio::from_integer(g.order())));
            } else {
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn quotient_z4z2_by_diagonal() {
        // (ℤ₄×ℤ₂)/⟨(2,1)⟩ ≅ ℤ₄.
        let g = AbGroup::new(vec![4, 2]).unwrap();
        let q = g.quotient(&[vec![2, 1]]);
        assert_eq!(q.group.order(), 4);
        assert_eq!(q.group.factors, vec![4]);
        // Projection is a surjective homomorphism with the right kernel.
        let mut kernel = 0;
        for x in g.elements() {
            for y in g.elements() {
                assert_eq!(
                    q.project(&g.add(&x, &y)),
                    q.group.add(&q.project(&x), &q.project(&y))
                );
            }
            if q.group.is_zero(&q.project(&x)) {
                kernel += 1;
            }
        }
        assert_eq!(kernel, 2);
        // The section is a set-theoretic right inverse.
        for c in q.group.elements() {
            assert_eq!(q.project(&q.lift(&c)), c);
        }
    }

    #[test]
    fn mod2_quotient_shapes() {
        let g = AbGroup::new(vec![3]).unwrap();
        assert_eq!(g.mod2_quotient().group.order(), 1);
        let g = AbGroup::new(vec![2, 4]).unwrap();
        let q = g.mod2_quotient();
        assert_eq!(q.group.factors, vec![2, 2]);
        let g = AbGroup::new(vec![12]).unwrap();
        assert_eq!(g.mod2_quotient().group.factors, vec![2]);
    }

    #[test]
    fn subgroup_structure_examples() {
        let g = AbGroup::new(vec![4, 4]).unwrap();
        // ⟨(2,0),(0,2)⟩ ≅ ℤ₂×ℤ₂.
        let (f, gens) = g.subgroup_structure(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(f, vec![2, 2]);
        assert_eq!(g.span(&gens).len(), 4);
        // ⟨(1,1)⟩ ≅ ℤ₄.
        let (f, gens) = g.subgroup_structure(&[vec![1, 1]]);
        assert_eq!(f, vec![4]);
        assert_eq!(g.span(&gens).len(), 4);
        // ⟨(2,2),(1,1)⟩ ≅ ℤ₄ (redundant generator).
        let (f, _) = g.subgroup_structure(&[vec![2, 2], vec![1, 1]]);
        assert_eq!(f, vec![4]);
        // Trivial.
        let (f, _) = g.subgroup_structure(&[vec![0, 0]]);
        assert_eq!(f, Vec::<i64>::new());
    }

    #[test]
    fn subgroup_structure_generators_generate() {
        let g = AbGroup::new(vec![2, 8]).unwrap();
        for sub in g.all_subgroups() {
            let gens: Vec<Elem> = sub.iter().cloned().collect();
            let (f, new_gens) = g.subgroup_structure(&gens);
            let order: i64 = f.iter().product();
            assert_eq!(order, sub.len() as i64);
            let spanned = g.span(&new_gens);
            assert_eq!(spanned, sub);
            // Orders of the generators match the invariant factors.
            for (fi, gi) in f.iter().zip(&new_gens) {
                assert_eq!(g.elem_order(gi), *fi);
            }
        }
    }

    #[test]
    fn subgroup_counts() {
        // ℤ₄ has 3 subgroups; ℤ₂×ℤ₂ has 5; ℤ₉ has 3; ℤ₃×ℤ₃ has 6.
        assert_eq!(AbGroup::new(vec![4]).unwrap().all_subgroups().len(), 3);
        assert_eq!(AbGroup::new(vec![2, 2]).unwrap().all_subgroups().len(), 5);
        assert_eq!(AbGroup::new(vec![9]).unwrap().all_subgroups().len(), 3);
        assert_eq!(AbGroup::new(vec![3, 3]).unwrap().all_subgroups().len(), 6);
    }
}
