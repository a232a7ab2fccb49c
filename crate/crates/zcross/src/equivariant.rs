//! ℤ₂-equivariantisation of a crossed category: equivariant simple
//! objects, the fusion ring computed by the character/trace projector
//! formula, twists, quantum dimensions, and the unnormalized modular
//! data with its consistency checks (symmetry, invertibility over a
//! cyclotomic field, Verlinde diagonalization, ribbon identity).

use crate::crossedcat::{CrossedCat, Report, SimpleId};
use crate::error::{Result, ZcrossError};
use crate::scalar::{
    field_matrix_inverse, CycField, CycSum, FieldElem, Phase, Rational, ScalarSum, ScaledScalar,
};
use num::{One, Zero};

/// Label of a simple object in the equivariantisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EqLabel {
    /// An action-fixed underlying simple with one of its two equivariant
    /// structures.
    Fixed { object: SimpleId, sign: i8 },
    /// A two-element orbit `{y, g·y}` carrying its unique equivariant
    /// structure.
    Free { orbit: (SimpleId, SimpleId) },
}

/// A simple object of the equivariantisation in skeletal form.
#[derive(Clone, Debug)]
pub struct EqSimple {
    pub label: EqLabel,
    /// Underlying simple summands, in id order.
    pub summands: Vec<SimpleId>,
    /// The equivariant structure `φ: g_*Z → Z`.  `phi[i][j]` is the
    /// component from the slot carrying `g·summands[j]` into
    /// `summands[i]`; `None` means zero.  The matrix is monomial.
    pub phi: Vec<Vec<Option<Phase>>>,
    pub dim: ScaledScalar,
    pub theta: Phase,
}

impl EqSimple {
    /// Inverse of the monomial structure matrix, indexed `[slot][summand]`.
    pub fn phi_inv(&self) -> Vec<Vec<Option<Phase>>> {
        let n = self.summands.len();
        let mut inv = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                if let Some(p) = self.phi[i][j] {
                    inv[j][i] = Some(p.inv());
                }
            }
        }
        inv
    }
}

/// List the simple objects of the equivariantisation: two per fixed
/// underlying simple (structure scalars `±γ` with `γ² = T₂(y)⁻¹`), one
/// per free orbit.
pub fn equivariant_simples(cat: &CrossedCat) -> Result<Vec<EqSimple>> {
    let n = cat.n_simples();
    for x in 0..n {
        let gx = cat.act(x);
        if cat.t2[x] != cat.t2[gx] || cat.theta[x] != cat.theta[gx] || cat.dims[x] != cat.dims[gx]
        {
            return Err(ZcrossError::AssumptionViolated(format!(
                "composition scalar, twist, and dimension must agree along the orbit of simple {}",
                x
            )));
        }
    }
    let mut out = Vec::new();
    for x in 0..n {
        let gx = cat.act(x);
        if gx == x {
            // γ = principal square root of χ⁻¹ with χ = T₂(x).
            let gamma = cat.t2[x].principal_sqrt().inv();
            for sign in [1i8, -1] {
                let phi = Phase::from_sign(sign) * gamma;
                let theta = if cat.grade(x) == 0 { cat.theta[x] } else { phi * cat.theta[x] };
                out.push(EqSimple {
                    label: EqLabel::Fixed { object: x, sign },
                    summands: vec![x],
                    phi: vec![vec![Some(phi)]],
                    dim: cat.dims[x],
                    theta,
                });
            }
        } else if x < gx {
            if cat.grade(x) != 0 {
                return Err(ZcrossError::AssumptionViolated(
                    "a free orbit in the nontrivially graded sector has no scalar twist".into(),
                ));
            }
            let d = cat.dims[x];
            out.push(EqSimple {
                label: EqLabel::Free { orbit: (x, gx) },
                summands: vec![x, gx],
                phi: vec![
                    vec![None, Some(cat.t2[x].inv())],
                    vec![Some(Phase::one()), None],
                ],
                dim: ScaledScalar::new(d.m * Rational::from_integer(4), d.phase),
                theta: cat.theta[x],
            });
        }
    }
    Ok(out)
}

/// The equivariantisation: simples, fusion ring, duals, and the data
/// needed for modularity checks.
#[derive(Clone, Debug)]
pub struct EquivariantCat {
    pub cat: CrossedCat,
    pub simples: Vec<EqSimple>,
    /// `fusion[i][j][k]` = multiplicity of simple `k` in `i ⊗ j`.
    pub fusion: Vec<Vec<Vec<u64>>>,
    /// `dual[i]` = the unique `k` with the unit in `i ⊗ k`.
    pub dual: Vec<usize>,
}

/// Extract the exact integer value of a cyclotomic sum, if it is one.
fn cycsum_integer(s: &CycSum) -> Option<i64> {
    let (re, _, _) = s.eval();
    let n = re.round() as i64;
    if s.sub(&CycSum::constant(Rational::from_integer(n))).is_zero() {
        Some(n)
    } else {
        None
    }
}

/// Compute the equivariantisation of a verified crossed category.
///
/// Fusion multiplicities use the projector formula
/// `N = ½(dim Hom + tr σ_g)` where `σ_g` is the induced involution on
/// the underlying morphism space; every multiplicity is certified to be
/// a nonnegative integer in exact arithmetic.
pub fn equivariantise(cat: &CrossedCat) -> Result<EquivariantCat> {
    let n_c = cat.n_simples();
    for x in 0..n_c {
        for y in 0..n_c {
            let list = cat.fus(x, y);
            let mut seen = std::collections::HashSet::new();
            if !list.iter().all(|t| seen.insert(*t)) {
                return Err(ZcrossError::AssumptionViolated(format!(
                    "pairwise fusion must be multiplicity-free, violated at ({}, {})",
                    x, y
                )));
            }
        }
    }
    let simples = equivariant_simples(cat)?;
    let n = simples.len();
    let mut fusion = vec![vec![vec![0u64; n]; n]; n];
    for i in 0..n {
        let pinv = simples[i].phi_inv();
        for j in 0..n {
            let qinv = simples[j].phi_inv();
            for k in 0..n {
                let z = &simples[k];
                let mut dim: i64 = 0;
                let mut trace = CycSum::constant(Rational::zero());
                for (a, &xa) in simples[i].summands.iter().enumerate() {
                    for (b, &yb) in simples[j].summands.iter().enumerate() {
                        for (c, &zc) in z.summands.iter().enumerate() {
                            if !cat.has_channel(xa, yb, zc) {
                                continue;
                            }
                            dim += 1;
                            let (pa, qb, xc) = match (pinv[a][a], qinv[b][b], z.phi[c][c]) {
                                (Some(pa), Some(qb), Some(xc)) => (pa, qb, xc),
                                _ => continue,
                            };
                            let tau = cat.tau_phase(xa, yb, zc).ok_or_else(|| {
                                ZcrossError::AssumptionViolated(format!(
                                    "missing tensor-structure scalar at ({}, {}, {})",
                                    xa, yb, zc
                                ))
                            })?;
                            trace =
                                trace.add(&CycSum::term(Rational::one(), pa * qb * tau.inv() * xc));
                        }
                    }
                }
                let tr = cycsum_integer(&trace).ok_or_else(|| {
                    ZcrossError::NonIntegerMultiplicity(format!(
                        "trace of the involution on Hom({} ⊗ {}, {}) is not an integer",
                        i, j, k
                    ))
                })?;
                let total = dim + tr;
                if total < 0 || total % 2 != 0 {
                    return Err(ZcrossError::NonIntegerMultiplicity(format!(
                        "projector rank ({} + {})/2 at ({}, {}, {}) is not a nonnegative integer",
                        dim, tr, i, j, k
                    )));
                }
                fusion[i][j][k] = (total / 2) as u64;
            }
        }
    }
    let mut dual = Vec::with_capacity(n);
    for i in 0..n {
        let partners: Vec<usize> = (0..n).filter(|&k| fusion[i][k][0] > 0).collect();
        if partners.len() != 1 || fusion[i][partners[0]][0] != 1 {
            return Err(ZcrossError::AssumptionViolated(format!(
                "simple {} does not have a unique dual (unit multiplicities {:?})",
                i, partners
            )));
        }
        dual.push(partners[0]);
    }
    Ok(EquivariantCat { cat: cat.clone(), simples, fusion, dual })
}

/// Outcome of the modular-data checks.
#[derive(Clone, Debug)]
pub struct ModularReport {
    pub symmetric: bool,
    pub invertible: bool,
    /// `None` when the matrix is singular (nothing to diagonalize).
    pub verlinde_ok: Option<bool>,
    pub conductor: u64,
}

impl EquivariantCat {
    pub fn n_simples(&self) -> usize {
        self.simples.len()
    }

    pub fn dims(&self) -> Vec<ScaledScalar> {
        self.simples.iter().map(|s| s.dim).collect()
    }

    pub fn thetas(&self) -> Vec<Phase> {
        self.simples.iter().map(|s| s.theta).collect()
    }

    /// Squared global dimension `Σ d²` (dimensions are real, so `d² = m`).
    pub fn global_dim_sq(&self) -> Rational {
        self.simples.iter().map(|s| s.dim.m).fold(Rational::zero(), |a, b| a + b)
    }

    /// Squared global dimension of the underlying category.
    pub fn underlying_dim_sq(&self) -> Rational {
        self.cat.dims.iter().map(|d| d.m).fold(Rational::zero(), |a, b| a + b)
    }

    /// Ring checks: unit object, commutativity, associativity, and
    /// duality pairing consistency.
    pub fn check_fusion(&self) -> Report {
        let n = self.n_simples();
        let mut rep = Report::default();
        for j in 0..n {
            for k in 0..n {
                rep.checked += 1;
                let expect = if j == k { 1 } else { 0 };
                if self.fusion[0][j][k] != expect || self.fusion[j][0][k] != expect {
                    rep.violations.push(format!("unit fails at ({}, {})", j, k));
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                rep.checked += 1;
                if self.fusion[i][j] != self.fusion[j][i] {
                    rep.violations.push(format!("commutativity fails at ({}, {})", i, j));
                }
            }
        }
        // Associativity: Σ_m N_{ij}^m N_{mk}^l = Σ_m N_{jk}^m N_{im}^l.
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let lhs: u64 =
                            (0..n).map(|m| self.fusion[i][j][m] * self.fusion[m][k][l]).sum();
                        let rhs: u64 =
                            (0..n).map(|m| self.fusion[j][k][m] * self.fusion[i][m][l]).sum();
                        rep.checked += 1;
                        if lhs != rhs {
                            rep.violations.push(format!(
                                "associativity fails at ({}, {}, {}, {})",
                                i, j, k, l
                            ));
                            if rep.violations.len() > 20 {
                                return rep;
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    /// The unnormalized S-matrix
    /// `S̃_{ij} = Σ_k N_{i*,j}^k · θ_k/(θ_i θ_j) · d_k`.
    pub fn s_tilde(&self) -> Vec<Vec<ScalarSum>> {
        let n = self.n_simples();
        let mut s = vec![vec![ScalarSum::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = ScalarSum::zero();
                for k in 0..n {
                    let mult = self.fusion[self.dual[i]][j][k];
                    if mult == 0 {
                        continue;
                    }
                    let ratio = self.simples[k].theta
                        * (self.simples[i].theta * self.simples[j].theta).inv();
                    let d = self.simples[k].dim;
                    let m2 = Rational::from_integer((mult * mult) as i64);
                    acc.push(ScaledScalar::new(d.m * m2, d.phase * ratio));
                }
                s[i][j] = acc;
            }
        }
        s
    }

    /// Check symmetry, invertibility over the smallest common cyclotomic
    /// field, and the Verlinde property (columns of S̃ are simultaneous
    /// eigenvectors of every fusion matrix with eigenvalues
    /// `S̃_{im}/S̃_{0m}`).
    pub fn modular_checks(&self) -> ModularReport {
        let n = self.n_simples();
        let s = self.s_tilde();
        let mut symmetric = true;
        for i in 0..n {
            for j in 0..i {
                if !s[i][j].eq_value(&s[j][i]) {
                    symmetric = false;
                }
            }
        }
        let cyc: Vec<Vec<CycSum>> =
            s.iter().map(|row| row.iter().map(|e| e.to_cycsum()).collect()).collect();
        let conductor =
            cyc.iter().flatten().fold(1u64, |acc, c| num_integer::lcm(acc, c.n));
        let field = CycField::new(conductor);
        let sm: Vec<Vec<FieldElem>> =
            cyc.iter().map(|row| row.iter().map(|c| field.embed(c)).collect()).collect();
        let invertible = field_matrix_inverse(&field, &sm).is_some();
        let verlinde_ok = if invertible {
            let mut ok = true;
            // λ_{im} = S̃_{im} / S̃_{0m}; the unit row is (d_m) ≠ 0.
            let d_inv: Vec<FieldElem> = (0..n).map(|m| field.inv(&sm[0][m])).collect();
            'outer: for i in 0..n {
                for m in 0..n {
                    let lam = field.mul(&sm[i][m], &d_inv[m]);
                    for r in 0..n {
                        // (N_i · S̃)[r][m] vs λ · S̃[r][m]
                        let mut lhs = field.zero();
                        for k in 0..n {
                            let mult = self.fusion[i][r][k];
                            if mult > 0 {
                                let t = field_scale(&sm[k][m], mult as i64);
                                lhs = field.add(&lhs, &t);
                            }
                        }
                        let rhs = field.mul(&lam, &sm[r][m]);
                        if field.sub(&lhs, &rhs).iter().any(|c| !c.is_zero()) {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            Some(ok)
        } else {
            None
        };
        ModularReport { symmetric, invertible, verlinde_ok, conductor }
    }

    /// Ribbon identity: on every fusion channel the double braiding,
    /// projected to the equivariant subspace, acts as the scalar
    /// `θ_k/(θ_i θ_j)`.  Also verifies that the induced involution on
    /// each underlying morphism space squares to the identity.
    pub fn ribbon_check(&self) -> Report {
        let n = self.n_simples();
        let mut rep = Report::default();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.fusion[i][j][k] == 0 {
                        continue;
                    }
                    rep.checked += 1;
                    if let Some(v) = self.ribbon_channel(i, j, k) {
                        rep.violations.push(v);
                        if rep.violations.len() > 20 {
                            return rep;
                        }
                    }
                }
            }
        }
        rep
    }

    /// Check one channel; returns a violation description on failure.
    fn ribbon_channel(&self, i: usize, j: usize, k: usize) -> Option<String> {
        let cat = &self.cat;
        let (x, y, z) = (&self.simples[i], &self.simples[j], &self.simples[k]);
        // Basis of the underlying Hom(X ⊗ Y, Z): channel triples.
        let mut basis = Vec::new();
        for (a, &xa) in x.summands.iter().enumerate() {
            for (b, &yb) in y.summands.iter().enumerate() {
                for (c, &zc) in z.summands.iter().enumerate() {
                    if cat.has_channel(xa, yb, zc) {
                        basis.push((a, b, c));
                    }
                }
            }
        }
        let dim = basis.len();
        if dim == 0 {
            return Some(format!("channel ({}, {}, {}) has positive multiplicity but no underlying morphisms", i, j, k));
        }
        let zero = || CycSum::constant(Rational::zero());
        let term = |p: Phase| CycSum::term(Rational::one(), p);
        // Involution matrix M on the Hom basis.
        let pinv = x.phi_inv();
        let qinv = y.phi_inv();
        let mut m = vec![vec![zero(); dim]; dim];
        for (col, &(p, q, r)) in basis.iter().enumerate() {
            for (row, &(a, b, c)) in basis.iter().enumerate() {
                let (fa, fb, fc) = match (pinv[p][a], qinv[q][b], z.phi[c][r]) {
                    (Some(fa), Some(fb), Some(fc)) => (fa, fb, fc),
                    _ => continue,
                };
                let tau = match cat.tau_phase(x.summands[p], y.summands[q], z.summands[r]) {
                    Some(t) => t,
                    None => {
                        return Some(format!(
                            "missing tensor-structure scalar on Hom({} ⊗ {}, {})",
                            i, j, k
                        ))
                    }
                };
                m[row][col] = term(fa * fb * tau.inv() * fc);
            }
        }
        // M² must be the identity.
        for r in 0..dim {
            for c in 0..dim {
                let mut acc = zero();
                for t in 0..dim {
                    acc = acc.add(&m[r][t].mul(&m[t][c]));
                }
                let expect = if r == c { Rational::one() } else { Rational::zero() };
                if !acc.sub(&CycSum::constant(expect)).is_zero() {
                    return Some(format!(
                        "involution on Hom({} ⊗ {}, {}) does not square to 1",
                        i, j, k
                    ));
                }
            }
        }
        // Double braiding D on X ⊗ Y, per target summand of Z, then the
        // induced operator on Hom (transpose per target).
        let mut dmat = vec![vec![zero(); dim]; dim];
        for (col, &(a, b, c)) in basis.iter().enumerate() {
            let (xa, yb, t) = (x.summands[a], y.summands[b], z.summands[c]);
            for (row, &(a2, b2, c2)) in basis.iter().enumerate() {
                if c2 != c {
                    continue;
                }
                // Coefficient of channel (a2, b2 → t) in D(channel (a, b → t)),
                // transposed into the Hom-space action.
                let r1 = match cat.r_phase(xa, yb, t) {
                    Some(p) => p,
                    None => continue,
                };
                let w_y = if cat.grade(xa) == 1 {
                    y.phi[b2][b]
                } else if b2 == b {
                    Some(Phase::one())
                } else {
                    None
                };
                let wy = match w_y {
                    Some(p) => p,
                    None => continue,
                };
                let yb2 = y.summands[b2];
                let r2 = match cat.r_phase(yb2, xa, t) {
                    Some(p) => p,
                    None => continue,
                };
                let w_x = if cat.grade(yb2) == 1 {
                    x.phi[a2][a]
                } else if a2 == a {
                    Some(Phase::one())
                } else {
                    None
                };
                let wx = match w_x {
                    Some(p) => p,
                    None => continue,
                };
                // Hom-space operator is the transpose of the object map.
                dmat[col][row] = dmat[col][row].add(&term(r1 * wy * r2 * wx));
            }
        }
        // Projector P = ½(1 + M); require D·P = (θ_k/(θ_iθ_j))·P.
        let scalar = z.theta * (x.theta * y.theta).inv();
        for r in 0..dim {
            for c in 0..dim {
                let mut lhs = zero();
                for t in 0..dim {
                    let mut p_tc = m[t][c].clone();
                    if t == c {
                        p_tc = p_tc.add(&CycSum::constant(Rational::one()));
                    }
                    lhs = lhs.add(&dmat[r][t].mul(&p_tc));
                }
                let mut p_rc = m[r][c].clone();
                if r == c {
                    p_rc = p_rc.add(&CycSum::constant(Rational::one()));
                }
                let rhs = p_rc.mul(&term(scalar));
                if !lhs.sub(&rhs).is_zero() {
                    return Some(format!(
                        "double braiding is not θ_{}/(θ_{}θ_{}) on its projected channel",
                        k, i, j
                    ));
                }
            }
        }
        None
    }
}

/// Multiply a field element by an integer.
fn field_scale(a: &FieldElem, c: i64) -> FieldElem {
    let c = Rational::from_integer(c);
    a.iter().map(|x| *x * c).collect()
}
