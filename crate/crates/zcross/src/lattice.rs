//! Even positive-definite lattices from Gram matrices: discriminant
//! forms with deterministic representative lifts, the lattice-valued
//! 2-cocycle `u`, the `ε` sign bicharacter, and eigenlattice splitting
//! for involutive isometries.
//!
//! Conventions: lattice elements are integer coordinate vectors in the
//! basis `α₁..α_d` underlying the Gram matrix; dual vectors are integer
//! coordinate vectors in the dual basis `α₁*..α_d*`, so that `L ⊂ L*` is
//! the row span of the Gram matrix and `Γ = L*/L` is computed by Smith
//! reduction of the Gram matrix.  The same Smith transform fixes, once
//! and for all, the generator lifts `â ∈ L*` that every downstream
//! cocycle table depends on.

use crate::abgroup::{mat_mul, smith_normal_form, unimodular_inverse, AbGroup, Elem};
use crate::error::{Result, ZcrossError};
use crate::qform::QuadForm;
use crate::scalar::{Phase, Rational};
use num::{One, Zero};

/// An even positive-definite lattice presented by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeData {
    pub gram: Vec<Vec<i64>>,
}

impl LatticeData {
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let d = gram.len();
        if gram.iter().any(|r| r.len() != d) {
            return Err(ZcrossError::InvalidInput("Gram matrix must be square".into()));
        }
        for i in 0..d {
            for j in 0..d {
                if gram[i][j] != gram[j][i] {
                    return Err(ZcrossError::InvalidInput("Gram matrix must be symmetric".into()));
                }
            }
            if gram[i][i] % 2 != 0 {
                return Err(ZcrossError::AssumptionViolated(format!(
                    "lattice is not even: ⟨α{},α{}⟩ = {}",
                    i, i, gram[i][i]
                )));
            }
        }
        let l = LatticeData { gram };
        for k in 1..=d {
            if l.leading_minor(k) <= Rational::zero() {
                return Err(ZcrossError::AssumptionViolated(
                    "Gram matrix is not positive definite".into(),
                ));
            }
        }
        Ok(l)
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    fn leading_minor(&self, k: usize) -> Rational {
        let mut m: Vec<Vec<Rational>> = (0..k)
            .map(|i| (0..k).map(|j| Rational::from_integer(self.gram[i][j])).collect())
            .collect();
        let mut det = Rational::one();
        for col in 0..k {
            let pivot = match (col..k).find(|&r| !m[r][col].is_zero()) {
                Some(p) => p,
                None => return Rational::zero(),
            };
            if pivot != col {
                m.swap(col, pivot);
                det = -det;
            }
            det *= m[col][col];
            let p = m[col][col];
            for r in (col + 1)..k {
                if !m[r][col].is_zero() {
                    let f = m[r][col] / p;
                    for j in col..k {
                        let t = f * m[col][j];
                        m[r][j] = m[r][j] - t;
                    }
                }
            }
        }
        det
    }

    /// `det(gram)`, which equals the order of the discriminant group.
    pub fn determinant(&self) -> i64 {
        let d = self.leading_minor(self.rank());
        assert!(d.is_integer());
        *d.numer()
    }

    /// `⟨u, v⟩` for lattice vectors in basis coordinates.
    pub fn pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        let d = self.rank();
        let mut s = 0;
        for i in 0..d {
            for j in 0..d {
                s += u[i] * self.gram[i][j] * v[j];
            }
        }
        s
    }

    /// True iff every Gram entry is even (so `⟨u,v⟩ ∈ 2ℤ` for all `u,v`).
    pub fn is_strongly_even(&self) -> bool {
        self.gram.iter().all(|r| r.iter().all(|&x| x % 2 == 0))
    }

    /// The sign bicharacter `ε(αᵢ,αⱼ) = e(⟨αᵢ,αⱼ⟩/2)` for `i > j`, else 1,
    /// extended bimultiplicatively to `L×L`.
    ///
    /// Its skew form is the parity of the pairing:
    /// `ε(u,v)·ε(v,u)⁻¹ = e(⟨u,v⟩/2)`; it is identically 1 iff the
    /// lattice is strongly even.
    pub fn epsilon(&self, u: &[i64], v: &[i64]) -> Phase {
        let d = self.rank();
        let mut s = 0i64;
        for i in 0..d {
            for j in 0..i {
                s += u[i] * v[j] * self.gram[i][j];
            }
        }
        Phase::new(Rational::new(s, 2))
    }

    /// The discriminant pipeline: `Γ = L*/L` with its quadratic form and
    /// deterministic lifts.
    pub fn discriminant(&self) -> Result<DiscPipeline> {
        DiscPipeline::new(self.clone())
    }
}

/// An involutive isometry `g` of a lattice, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Involution {
    pub matrix: Vec<Vec<i64>>,
}

impl Involution {
    pub fn new(lattice: &LatticeData, matrix: Vec<Vec<i64>>) -> Result<Self> {
        let d = lattice.rank();
        if matrix.len() != d || matrix.iter().any(|r| r.len() != d) {
            return Err(ZcrossError::InvalidInput("involution matrix has wrong shape".into()));
        }
        let ident: Vec<Vec<i64>> =
            (0..d).map(|i| (0..d).map(|j| (i == j) as i64).collect()).collect();
        if mat_mul(&matrix, &matrix) != ident {
            return Err(ZcrossError::AssumptionViolated("matrix is not an involution".into()));
        }
        let gt: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| matrix[j][i]).collect()).collect();
        if mat_mul(&mat_mul(&gt, &lattice.gram), &matrix) != lattice.gram {
            return Err(ZcrossError::AssumptionViolated("matrix is not an isometry".into()));
        }
        Ok(Involution { matrix })
    }

    pub fn minus_identity(d: usize) -> Self {
        Involution {
            matrix: (0..d).map(|i| (0..d).map(|j| if i == j { -1 } else { 0 }).collect()).collect(),
        }
    }

    pub fn identity(d: usize) -> Self {
        Involution {
            matrix: (0..d).map(|i| (0..d).map(|j| (i == j) as i64).collect()).collect(),
        }
    }

    /// Apply to a column vector in lattice coordinates.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.matrix.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    /// Apply the dual action (transpose) to a vector in dual-basis
    /// coordinates: `(g·x)ᵢ = ⟨g x, αᵢ⟩ = ⟨x, g αᵢ⟩` transforms dual
    /// coordinates by `gᵀ`.
    pub fn apply_dual(&self, x: &[i64]) -> Vec<i64> {
        let d = self.matrix.len();
        (0..d).map(|i| (0..d).map(|j| self.matrix[j][i] * x[j]).sum()).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.matrix.len()).map(|i| self.matrix[i][i]).sum()
    }
}

/// The outcome of splitting a lattice along an involution.
#[derive(Debug)]
pub struct EigenSplit {
    /// Basis of `L₊ = L ∩ ker(g − 1)` in ambient lattice coordinates
    /// (one basis vector per row), with its induced Gram matrix.
    pub plus_basis: Vec<Vec<i64>>,
    pub plus: Option<LatticeData>,
    pub minus_basis: Vec<Vec<i64>>,
    pub minus: Option<LatticeData>,
    /// Dimension of the real (+1)-eigenspace.
    pub d0: usize,
    /// Dimension of the real (−1)-eigenspace.
    pub d1: usize,
    /// True iff `⟨α, gα⟩ ∈ 2ℤ` for all `α ∈ L`.
    pub no_order_doubling: bool,
    /// Index of `L₊ ⊕ L₋` in `L` (reported only).
    pub index: i64,
}

/// Split a lattice into eigenlattices of an involutive isometry.
pub fn eigen_split(lattice: &LatticeData, g: &Involution) -> Result<EigenSplit> {
    let d = lattice.rank();
    let tr = g.trace();
    assert!((d as i64 + tr) % 2 == 0);
    let d0 = ((d as i64 + tr) / 2) as usize;
    let d1 = d - d0;

    let kernel_basis = |sign: i64| -> Vec<Vec<i64>> {
        // Solve (g − sign·1)·x = 0 over ℤ: columns of V at zero columns
        // of the Smith form are a basis of the integer kernel.
        let m: Vec<Vec<i64>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| g.matrix[i][j] - if i == j { sign } else { 0 })
                    .collect()
            })
            .collect();
        let s = smith_normal_form(&m);
        let mut basis = Vec::new();
        for j in 0..d {
            let zero_col = (0..d).all(|i| s.d[i][j] == 0);
            if zero_col {
                basis.push((0..d).map(|i| s.v[i][j]).collect());
            }
        }
        basis
    };

    let plus_basis = kernel_basis(1);
    let minus_basis = kernel_basis(-1);
    assert_eq!(plus_basis.len(), d0, "integer kernel rank must match the eigenspace dimension");
    assert_eq!(minus_basis.len(), d1);

    let induced = |basis: &[Vec<i64>]| -> Result<Option<LatticeData>> {
        if basis.is_empty() {
            return Ok(None);
        }
        let gram: Vec<Vec<i64>> = basis
            .iter()
            .map(|u| basis.iter().map(|v| lattice.pairing(u, v)).collect())
            .collect();
        LatticeData::new(gram).map(Some)
    };
    let plus = induced(&plus_basis)?;
    let minus = induced(&minus_basis)?;

    // ⟨α,gα⟩ parity is a quadratic condition; it holds on all of L iff it
    // holds on the basis and on pairwise basis sums.
    let gens: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| (i == j) as i64).collect())
        .collect();
    let mut no_order_doubling = true;
    for i in 0..d {
        if lattice.pairing(&gens[i], &g.apply(&gens[i])) % 2 != 0 {
            no_order_doubling = false;
        }
        for j in (i + 1)..d {
            let sum: Vec<i64> = (0..d).map(|k| gens[i][k] + gens[j][k]).collect();
            if lattice.pairing(&sum, &g.apply(&sum)) % 2 != 0 {
                no_order_doubling = false;
            }
        }
    }

    // [L : L₊ ⊕ L₋] = √(det(L₊)·det(L₋)/det(L)).
    let det_plus = plus.as_ref().map_or(1, |l| l.determinant());
    let det_minus = minus.as_ref().map_or(1, |l| l.determinant());
    let prod = det_plus * det_minus;
    let det_l = lattice.determinant();
    assert!(prod % det_l == 0, "determinant bookkeeping failed");
    let ratio = prod / det_l;
    let index = (ratio as f64).sqrt().round() as i64;
    assert_eq!(index * index, ratio, "index must be integral");

    Ok(EigenSplit { plus_basis, plus, minus_basis, minus, d0, d1, no_order_doubling, index })
}

/// The discriminant form of an even lattice together with all the
/// representative data downstream constructions need: generator lifts,
/// the lift map `a ↦ â`, and the `L`-valued 2-cocycle
/// `u(a,b) = â + b̂ − (a+b)^`.
#[derive(Debug)]
pub struct DiscPipeline {
    pub lattice: LatticeData,
    pub group: AbGroup,
    pub form: QuadForm,
    /// Lift of the `i`-th group generator, in dual-basis coordinates.
    pub gen_lifts: Vec<Vec<i64>>,
    /// Inverse Gram matrix (the Gram matrix of the dual basis).
    gram_inv: Vec<Vec<Rational>>,
    /// Column transform of the Smith reduction of the Gram matrix.
    v: Vec<Vec<i64>>,
    /// Indices of diagonal entries > 1 in the Smith form.
    kept: Vec<usize>,
}

impl DiscPipeline {
    fn new(lattice: LatticeData) -> Result<Self> {
        let d = lattice.rank();
        let s = smith_normal_form(&lattice.gram);
        let mut kept = Vec::new();
        let mut factors = Vec::new();
        for i in 0..d {
            let di = s.d[i][i];
            assert!(di > 0, "positive-definite Gram matrix has full rank");
            if di > 1 {
                kept.push(i);
                factors.push(di);
            }
        }
        let group = AbGroup::new(factors)?;
        let vinv = unimodular_inverse(&s.v);
        let gen_lifts: Vec<Vec<i64>> = kept.iter().map(|&i| vinv[i].clone()).collect();

        // Inverse Gram matrix over ℚ.
        let gram_inv = rational_inverse(&lattice.gram);

        let mut p = DiscPipeline {
            lattice,
            group: group.clone(),
            form: QuadForm::trivial(),
            gen_lifts,
            gram_inv,
            v: s.v,
            kept,
        };
        // Q(a) = ⟨â,â⟩/2 mod 1 on generator data.
        let rank = group.rank();
        let mut gen_values = Vec::new();
        let mut gen_pairs = Vec::new();
        for i in 0..rank {
            gen_values.push(half_norm(&p, &p.gen_lifts[i]));
            for j in (i + 1)..rank {
                let b = p.dual_pairing(&p.gen_lifts[i], &p.gen_lifts[j]);
                gen_pairs.push(b - b.floor());
            }
        }
        p.form = QuadForm::new(group, gen_values, gen_pairs)?;
        // Sanity guard: the generator form agrees with the lift-based
        // evaluation everywhere.
        for a in p.group.elements() {
            assert_eq!(p.form.eval(&a), p.q_from_lift(&a));
        }
        if !p.form.is_nondegenerate() {
            return Err(ZcrossError::AssumptionViolated(
                "discriminant pairing is degenerate".into(),
            ));
        }
        Ok(p)
    }

    /// `⟨x, y⟩ = x·G⁻¹·yᵀ` for dual-coordinate vectors.
    pub fn dual_pairing(&self, x: &[i64], y: &[i64]) -> Rational {
        let d = self.lattice.rank();
        let mut s = Rational::zero();
        for i in 0..d {
            for j in 0..d {
                s += Rational::from_integer(x[i]) * self.gram_inv[i][j]
                    * Rational::from_integer(y[j]);
            }
        }
        s
    }

    /// The canonical lift `â ∈ L*` (dual coordinates) of a group element.
    pub fn lift(&self, a: &[i64]) -> Vec<i64> {
        let a = self.group.normalize(a);
        let d = self.lattice.rank();
        let mut x = vec![0i64; d];
        for (k, lift) in a.iter().zip(&self.gen_lifts) {
            for i in 0..d {
                x[i] += k * lift[i];
            }
        }
        x
    }

    /// Project a dual vector onto `Γ = L*/L`.
    pub fn project(&self, x: &[i64]) -> Elem {
        let d = self.lattice.rank();
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

    fn q_from_lift(&self, a: &[i64]) -> Rational {
        half_norm(self, &self.lift(a))
    }

    /// `u(a,b) = â + b̂ − (a+b)^`, in dual coordinates; always lies in `L`.
    pub fn u_dual(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        let la = self.lift(a);
        let lb = self.lift(b);
        let ls = self.lift(&self.group.add(a, b));
        (0..la.len()).map(|i| la[i] + lb[i] - ls[i]).collect()
    }

    /// `u(a,b)` converted to lattice-basis coordinates (exactly integral).
    pub fn u_lattice(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.dual_to_lattice(&self.u_dual(a, b))
    }

    /// Convert a dual vector lying in `L` to lattice coordinates.
    pub fn dual_to_lattice(&self, x: &[i64]) -> Vec<i64> {
        let d = self.lattice.rank();
        (0..d)
            .map(|j| {
                let mut s = Rational::zero();
                for i in 0..d {
                    s += Rational::from_integer(x[i]) * self.gram_inv[i][j];
                }
                assert!(s.is_integer(), "vector does not lie in the lattice");
                *s.numer()
            })
            .collect()
    }

    /// Lattice coordinates back to dual coordinates (`x ↦ x·G`).
    pub fn lattice_to_dual(&self, x: &[i64]) -> Vec<i64> {
        let d = self.lattice.rank();
        (0..d).map(|j| (0..d).map(|i| x[i] * self.lattice.gram[i][j]).sum()).collect()
    }

    /// The involution induced on `Γ` by an involutive isometry, as a
    /// permutation in enumeration order.
    pub fn induced_map(&self, g: &Involution) -> Vec<Elem> {
        self.group
            .elements()
            .iter()
            .map(|a| self.project(&g.apply_dual(&self.lift(a))))
            .collect()
    }
}

fn half_norm(p: &DiscPipeline, x: &[i64]) -> Rational {
    let n = p.dual_pairing(x, x) / Rational::from_integer(2);
    n - n.floor()
}

/// Exact inverse of an integer matrix with nonzero determinant.
fn rational_inverse(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> =
        m.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer((i == j) as i64)).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("matrix must be invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let t = f * a[col][j];
                    a[r][j] -= t;
                    let t = f * inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}
