//! Constructors for the concrete braided ℤ₂-crossed categories.
//!
//! Two families are built:
//!
//! - **TY over an odd metric group** `(Γ, Q)` with a sign `ε`: simples
//!   `Γ ⊔ {X}` with `X ⊗ X = ⊕_{t∈Γ} ℂ_t`.  Since `|Γ|` is odd, the
//!   symmetric bicharacter `B` and the form `Q` have unique square
//!   roots `σ = B^{1/2}`, `q = Q^{1/2}` obtained by halving exponents
//!   (inverting 2 modulo the odd denominators).  The coherence data:
//!   `F^{a,X,b}_X = σ(a,b)`, `F^{X,a,X}_t = σ(a,t)`,
//!   `F^{X,X,X}[t,r] = ε|Γ|^{-1/2}σ(t,r)^{-1}`, braidings
//!   `R(a,b) = σ(a,b)`, `R(a,X) = R(X,a) = q(a)^{-1}`,
//!   `R(X,X;t) = α·q(t)` with `α² = ε·|Γ|^{-1/2}·Σ_a q(a)^{-1}` (an
//!   exact root of unity, certified by snapping) and `β = ε/α`; twists
//!   `θ_{ℂ_a} = q(a)² = Q(a)`, `θ_X = β`; the grading action is
//!   `a ↦ −a`, `X ↦ X` with trivial `τ` and `T₂`.
//!
//! - **The even-order lattice family** over a strongly even positive
//!   definite lattice `L` with a sign `ε`: the untwisted sector is the
//!   discriminant group `Γ = L'/L` with the lattice-derived abelian
//!   cocycle `(σ̄, ω)`; the twisted simples `X^χ` are labelled by the
//!   characters `χ` of `L/2L`, identified with `Γ/2Γ` through
//!   `c ↦ σ̄(ĉ,·)|_L`.  Fusion, the eight associator families, the four
//!   `τ` scalars, and the four braidings are rational expressions in the
//!   dual pairing, the carrying cocycle `u(a,b) = â + b̂ − (a+b)^`, and
//!   `q̄(x) = e(⟨x,x⟩/4)`; `α² = ε·|2Γ|^{-1/2}·Σ_{t∈δ} q̄(t̂)^{-1}`
//!   where `δ` is the solution coset of `σ̄(t̂,·)|_L = q̄|_L`.
//!
//! The sign formula `ε = e(−d₀/8)·(2/|Γ|)` relates the sign to the
//! signature `d₀` of the fixed sublattice of an involution and the
//! Jacobi symbol of the (odd) discriminant group order; the companion
//! consistency check is `β² = e(d₁/8)` with `d₁` the rank of the
//! reflected sublattice.

use crate::abgroup::AbGroup;
use crate::crossedcat::{CrossedCat, FMat, Report, SimpleId};
use crate::error::{Result, ZcrossError};
use crate::lattice::LatticeData;
use crate::pointedcat::AbelianCocycle;
use crate::qform::{kronecker2, QuadForm};
use crate::scalar::{snap_to_root, CycSum, Phase, Rational, ScaledScalar};
use std::collections::HashMap;

/// Build the TY-type category over an odd metric group.
///
/// `form` is the quadratic form `Q` on `Γ`; `epsilon` is the associator
/// sign `±1`.  Fails with `EvenOrder` when `|Γ|` is even and with
/// `Degenerate` when the associated bicharacter is degenerate.
pub fn build_ty(form: &QuadForm, epsilon: i8) -> Result<CrossedCat> {
    if form.group.order() % 2 == 0 {
        return Err(ZcrossError::EvenOrder(format!(
            "the twisted-sector construction requires odd group order, got {}",
            form.group.order()
        )));
    }
    if !form.is_nondegenerate() {
        return Err(ZcrossError::Degenerate(
            "the bicharacter of the form must be nondegenerate".into(),
        ));
    }
    build_ty_with_branch(form, epsilon, false)
}

/// As [`build_ty`] but selecting the other ribbon branch
/// (`β = −ε/α`, negative quantum dimension for `X`) when `flip_beta`
/// is set.
pub fn build_ty_with_branch(form: &QuadForm, epsilon: i8, flip_beta: bool) -> Result<CrossedCat> {
    if form.group.order() % 2 == 0 {
        return Err(ZcrossError::EvenOrder("odd group order required".into()));
    }
    let half = form.odd_sqrt()?;
    let half_q = half.clone();
    build_ty_from_phases(
        form.group.clone(),
        move |a, b| Phase::new(half.bilinear_exp(a, b)),
        move |a| Phase::new(half_q.eval(a)),
        epsilon,
        flip_beta,
    )
}

/// Build a TY-type category directly from a symmetric bicharacter `σ`
/// and a compatible square root `q` of the braiding data
/// (`q(a+b) = q(a)·q(b)·σ(a,b)`), without the odd-order gate.  This is
/// the general-input constructor; the compatibility of `(σ, q)` is what
/// the downstream axiom verifier certifies.
pub fn build_ty_from_phases(
    group: AbGroup,
    sigma: impl Fn(&[i64], &[i64]) -> Phase,
    q: impl Fn(&[i64]) -> Phase,
    epsilon: i8,
    flip_beta: bool,
) -> Result<CrossedCat> {
    assert!(epsilon == 1 || epsilon == -1);
    let n = group.order() as usize;
    let elems = group.elements();
    let x_id: SimpleId = n;
    let n_s = n + 1;

    // Fusion: group law on the untwisted sector, `a⊗X = X⊗a = X`,
    // `X⊗X = ⊕_t ℂ_t`.
    let mut fusion = vec![vec![Vec::new(); n_s]; n_s];
    for a in 0..n {
        for b in 0..n {
            fusion[a][b] = vec![group.index_of(&group.add(&elems[a], &elems[b]))];
        }
        fusion[a][x_id] = vec![x_id];
        fusion[x_id][a] = vec![x_id];
    }
    fusion[x_id][x_id] = (0..n).collect();

    // α from the certified snap of ε·Σ_a q(a)^{-1} = √|Γ|·(root of unity).
    let mut gauss = CycSum::zero(1);
    for e in &elems {
        gauss = gauss.add(&CycSum::term(Rational::from_integer(epsilon as i64), q(e).inv()));
    }
    let alpha_sq = snap_to_root(&gauss, Rational::from_integer(n as i64), 16)
        .map_err(ZcrossError::Snap)?;
    let alpha = alpha_sq.principal_sqrt();
    let mut beta = Phase::from_sign(epsilon) / alpha;
    if flip_beta {
        beta = beta * Phase::minus_one();
    }

    let cat_sigma = |ai: usize, bi: usize| sigma(&elems[ai], &elems[bi]);
    let grade = |s: SimpleId| (s == x_id) as u8;

    // Associators, filled per admissible quadruple by grade pattern.
    let mut f = HashMap::new();
    let m_x = Rational::new(1, n as i64);
    for x in 0..n_s {
        for y in 0..n_s {
            for z in 0..n_s {
                let mut targets: Vec<SimpleId> = Vec::new();
                for &u in &fusion[x][y] {
                    targets.extend_from_slice(&fusion[u][z]);
                }
                targets.sort_unstable();
                targets.dedup();
                for s in targets {
                    let rows: Vec<SimpleId> = fusion[x][y]
                        .iter()
                        .copied()
                        .filter(|&u| fusion[u][z].contains(&s))
                        .collect();
                    let cols: Vec<SimpleId> = fusion[y][z]
                        .iter()
                        .copied()
                        .filter(|&r| fusion[x][r].contains(&s))
                        .collect();
                    let mut entries = Vec::with_capacity(rows.len() * cols.len());
                    for &u in &rows {
                        for &r in &cols {
                            let v = match (grade(x), grade(y), grade(z)) {
                                (0, 1, 0) => ScaledScalar::from_phase(cat_sigma(x, z)),
                                (1, 0, 1) => ScaledScalar::from_phase(cat_sigma(y, s)),
                                (1, 1, 1) => ScaledScalar::new(
                                    m_x,
                                    Phase::from_sign(epsilon) * cat_sigma(u, r).inv(),
                                ),
                                _ => ScaledScalar::one(),
                            };
                            entries.push(v);
                        }
                    }
                    f.insert((x, y, z, s), FMat { rows, cols, entries });
                }
            }
        }
    }

    // Braidings and the (trivial) action tensor structure.
    let mut r = HashMap::new();
    let mut tau = HashMap::new();
    for x in 0..n_s {
        for y in 0..n_s {
            for &t in &fusion[x][y].clone() {
                let v = match (grade(x), grade(y)) {
                    (0, 0) => cat_sigma(x, y),
                    (0, 1) => q(&elems[x]).inv(),
                    (1, 0) => q(&elems[y]).inv(),
                    (1, 1) => alpha * q(&elems[t]),
                    _ => unreachable!(),
                };
                r.insert((x, y, t), v);
                tau.insert((x, y, t), Phase::one());
            }
        }
    }

    // Action: a ↦ −a, X ↦ X.
    let mut action: Vec<SimpleId> = (0..n_s).collect();
    for a in 0..n {
        action[a] = group.index_of(&group.neg(&elems[a]));
    }

    let mut theta: Vec<Phase> = (0..n).map(|a| q(&elems[a]).pow(2)).collect();
    theta.push(beta);

    let mut dims = vec![ScaledScalar::one(); n];
    let dim_sign = epsilon * (alpha * beta).as_sign().expect("αβ is a sign by construction");
    dims.push(ScaledScalar::new(
        Rational::from_integer(n as i64),
        Phase::from_sign(dim_sign),
    ));

    Ok(CrossedCat {
        group,
        twisted: vec!["X".into()],
        fusion,
        f,
        r,
        tau,
        t2: vec![Phase::one(); n_s],
        action,
        theta,
        epsilon_sign: epsilon,
        alpha,
        beta,
        dims,
    })
}

/// Build the even-order lattice family over a strongly even positive
/// definite Gram matrix.
pub fn build_glm(lattice: &LatticeData, epsilon: i8) -> Result<CrossedCat> {
    assert!(epsilon == 1 || epsilon == -1);
    if !lattice.is_strongly_even() {
        return Err(ZcrossError::NotStronglyEven(
            "all Gram matrix entries must be even".into(),
        ));
    }
    let p = lattice.discriminant()?;
    let group = p.group.clone();
    if !p.form.is_nondegenerate() {
        return Err(ZcrossError::Degenerate("discriminant form is degenerate".into()));
    }
    let coc = AbelianCocycle::from_lattice(&p);
    let q2 = group.mod2_quotient();
    let elems = group.elements();
    let n = elems.len();
    let qelems = q2.group.elements();
    let n_t = qelems.len();
    let n_s = n + n_t;
    let rank = lattice.rank();

    // Dual representatives â ∈ L' (integer coordinates in the dual
    // basis) and the character χ_c(x) = e(⟨ĉ,x⟩/2) on L/2L attached to a
    // class c ∈ Γ/2Γ.
    let dual_rep: Vec<Vec<i64>> = elems.iter().map(|a| p.lift(a)).collect();
    let chi_rep: Vec<Vec<i64>> = qelems.iter().map(|c| p.lift(&q2.lift(c))).collect();
    let chi = |ci: usize, u: &[i64]| -> Phase {
        Phase::new(p.dual_pairing(&chi_rep[ci], &p.lattice_to_dual(u)) / Rational::from_integer(2))
    };
    // Bicharacter σ̄ and carrying-vector forms, all on dual coordinates.
    let sd = |x: &[i64], y: &[i64]| Phase::new(p.dual_pairing(x, y) / Rational::from_integer(2));
    let sl = |x: &[i64], u: &[i64]| {
        Phase::new(p.dual_pairing(x, &p.lattice_to_dual(u)) / Rational::from_integer(2))
    };
    let qbar_d = |x: &[i64]| Phase::new(p.dual_pairing(x, x) / Rational::from_integer(4));
    let qbar_l = |u: &[i64]| {
        Phase::new(Rational::new(lattice.pairing(u, u), 4))
    };

    // Injectivity of c ↦ χ_c: a nonzero class must pair oddly with some
    // lattice basis vector.
    let basis: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| (i == j) as i64).collect())
        .collect();
    for ci in 1..n_t {
        if basis.iter().all(|e| chi(ci, e).is_one()) {
            return Err(ZcrossError::Degenerate(
                "the character attached to a nonzero 2-torsion class is trivial".into(),
            ));
        }
    }

    // Fusion.  Twisted simple `n + c` carries the character χ_c; fusing
    // with ℂ_a shifts the class by [a]; a twisted pair fuses to the
    // solution set of the character equation σ̄(t̂,·)|_L = q̄·χ_c·χ_e.
    let cls = |a: usize| q2.group.index_of(&q2.project(&elems[a]));
    let qadd = |c: usize, d: usize| q2.group.index_of(&q2.group.add(&qelems[c], &qelems[d]));
    let mut fusion = vec![vec![Vec::new(); n_s]; n_s];
    for a in 0..n {
        for b in 0..n {
            fusion[a][b] = vec![group.index_of(&group.add(&elems[a], &elems[b]))];
        }
        for c in 0..n_t {
            fusion[a][n + c] = vec![n + qadd(cls(a), c)];
            fusion[n + c][a] = vec![n + qadd(cls(a), c)];
        }
    }
    for c in 0..n_t {
        for e in 0..n_t {
            let mut ch: Vec<SimpleId> = Vec::new();
            for t in 0..n {
                let ok = basis.iter().all(|x| {
                    sl(&dual_rep[t], x) == qbar_l(x) * chi(c, x) * chi(e, x)
                });
                if ok {
                    ch.push(t);
                }
            }
            if ch.is_empty() {
                return Err(ZcrossError::Degenerate(format!(
                    "empty twisted fusion product for classes {} and {}",
                    c, e
                )));
            }
            fusion[n + c][n + e] = ch;
        }
    }
    let two_gamma = n as i64 / n_t as i64;

    // α from the certified snap of ε·Σ_{t∈δ} q̄(t̂)^{-1} = √|2Γ|·(root
    // of unity), δ the channel set of X⁰ ⊗ X⁰.
    let mut delta_sum = CycSum::zero(1);
    for &t in &fusion[n][n] {
        delta_sum = delta_sum.add(&CycSum::term(
            Rational::from_integer(epsilon as i64),
            qbar_d(&dual_rep[t]).inv(),
        ));
    }
    let alpha_sq = snap_to_root(&delta_sum, Rational::from_integer(two_gamma), 16)
        .map_err(ZcrossError::Snap)?;
    let alpha = alpha_sq.principal_sqrt();
    let beta = Phase::from_sign(epsilon) / alpha;

    let grade = |s: SimpleId| (s >= n) as u8;
    let vsum = |x: &[i64], y: &[i64]| -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    };

    // The eight associator families, filled per admissible quadruple.
    let mut f = HashMap::new();
    let m_x = Rational::new(1, two_gamma);
    for x in 0..n_s {
        for y in 0..n_s {
            for z in 0..n_s {
                let mut targets: Vec<SimpleId> = Vec::new();
                for &u in &fusion[x][y] {
                    targets.extend_from_slice(&fusion[u][z]);
                }
                targets.sort_unstable();
                targets.dedup();
                for s in targets {
                    let rows: Vec<SimpleId> = fusion[x][y]
                        .iter()
                        .copied()
                        .filter(|&u| fusion[u][z].contains(&s))
                        .collect();
                    let cols: Vec<SimpleId> = fusion[y][z]
                        .iter()
                        .copied()
                        .filter(|&r| fusion[x][r].contains(&s))
                        .collect();
                    let mut entries = Vec::with_capacity(rows.len() * cols.len());
                    for &u in &rows {
                        for &r in &cols {
                            let v = match (grade(x), grade(y), grade(z)) {
                                (0, 0, 0) => ScaledScalar::from_phase(coc.omega(
                                    &elems[x], &elems[y], &elems[z],
                                )),
                                (1, 0, 0) => {
                                    let uv = p.u_lattice(&elems[y], &elems[z]);
                                    ScaledScalar::from_phase(chi(x - n, &uv) * qbar_l(&uv))
                                }
                                (0, 1, 0) => {
                                    ScaledScalar::from_phase(sd(&dual_rep[x], &dual_rep[z]))
                                }
                                (0, 0, 1) => {
                                    let uv = p.u_lattice(&elems[x], &elems[y]);
                                    ScaledScalar::from_phase(
                                        chi(z - n, &uv)
                                            * sl(&vsum(&dual_rep[x], &dual_rep[y]), &uv),
                                    )
                                }
                                (1, 1, 0) => {
                                    // u is the untwisted channel t of x⊗y.
                                    let uv = p.u_lattice(&elems[u], &elems[z]);
                                    ScaledScalar::from_phase(chi(x - n, &uv))
                                }
                                (1, 0, 1) => {
                                    ScaledScalar::from_phase(sd(&dual_rep[s], &dual_rep[y]))
                                }
                                (0, 1, 1) => {
                                    // r is the untwisted channel t of y⊗z.
                                    let uv = p.u_lattice(&elems[x], &elems[r]);
                                    ScaledScalar::from_phase(
                                        chi(y - n, &uv) * sl(&dual_rep[x], &uv),
                                    )
                                }
                                (1, 1, 1) => ScaledScalar::new(
                                    m_x,
                                    Phase::from_sign(epsilon)
                                        * sd(&dual_rep[u], &dual_rep[r]).inv(),
                                ),
                                _ => unreachable!(),
                            };
                            entries.push(v);
                        }
                    }
                    f.insert((x, y, z, s), FMat { rows, cols, entries });
                }
            }
        }
    }

    // Braidings and the action's tensor structure.
    let neg = |a: usize| group.index_of(&group.neg(&elems[a]));
    let mut r = HashMap::new();
    let mut tau = HashMap::new();
    for x in 0..n_s {
        for y in 0..n_s {
            for &t in &fusion[x][y].clone() {
                let (rv, tv) = match (grade(x), grade(y)) {
                    (0, 0) => {
                        let uy = p.u_lattice(&elems[y], &elems[neg(y)]);
                        (
                            sd(&dual_rep[x], &dual_rep[y]),
                            sl(&dual_rep[x], &uy).inv(),
                        )
                    }
                    (0, 1) => {
                        let ux = p.u_lattice(&elems[x], &elems[neg(x)]);
                        (
                            qbar_d(&dual_rep[x]).inv(),
                            sl(&dual_rep[x], &ux) * chi(y - n, &ux),
                        )
                    }
                    (1, 0) => {
                        let uy = p.u_lattice(&elems[y], &elems[neg(y)]);
                        (
                            qbar_d(&dual_rep[y]).inv() * sl(&dual_rep[y], &uy) * chi(x - n, &uy),
                            qbar_l(&uy) * chi(x - n, &uy),
                        )
                    }
                    (1, 1) => {
                        let ut = p.u_lattice(&elems[t], &elems[neg(t)]);
                        (alpha * qbar_d(&dual_rep[t]), chi(x - n, &ut))
                    }
                    _ => unreachable!(),
                };
                r.insert((x, y, t), rv);
                tau.insert((x, y, t), tv);
            }
        }
    }

    // Action: ℂ_a ↦ ℂ_{−a}, X^χ ↦ X^χ.
    let mut action: Vec<SimpleId> = (0..n_s).collect();
    for a in 0..n {
        action[a] = neg(a);
    }

    let mut theta: Vec<Phase> = (0..n)
        .map(|a| Phase::new(p.dual_pairing(&dual_rep[a], &dual_rep[a]) / Rational::from_integer(2)))
        .collect();
    theta.extend(std::iter::repeat(beta).take(n_t));

    let mut dims = vec![ScaledScalar::one(); n];
    dims.extend(std::iter::repeat(ScaledScalar::new(
        Rational::from_integer(two_gamma),
        Phase::one(),
    )).take(n_t));

    Ok(CrossedCat {
        group,
        twisted: (0..n_t).map(|c| format!("X{}", c)).collect(),
        fusion,
        f,
        r,
        tau,
        t2: vec![Phase::one(); n_s],
        action,
        theta,
        epsilon_sign: epsilon,
        alpha,
        beta,
        dims,
    })
}

/// The sign of the twisted-sector associator from involution geometry:
/// `ε = e(−d0/8)·(2/n)` where `d0` is the signature of the fixed
/// sublattice (must be divisible by 4 for the value to be a sign) and
/// `n` the odd order of the discriminant group.
pub fn epsilon_from_geometry(d0: i64, gamma_order: i64) -> Result<i8> {
    if d0.rem_euclid(4) != 0 {
        return Err(ZcrossError::BadD0(format!(
            "e(−d0/8) is a sign only for d0 ≡ 0 mod 4, got d0 = {}",
            d0
        )));
    }
    let sign_d = if d0.rem_euclid(8) == 0 { 1 } else { -1 };
    Ok(sign_d * kronecker2(gamma_order)?)
}

/// Consistency of the ribbon root against involution geometry:
/// `β² = e(d1/8)` with `d1` the rank of the reflected sublattice.
pub fn twist_consistency(cat: &CrossedCat, d1: i64) -> Report {
    let mut rep = Report::default();
    rep.checked = 1;
    let expect = Phase::new(Rational::new(d1, 8));
    if cat.beta.pow(2) != expect {
        rep.violations.push(format!(
            "β² = {:?} but the reflected-rank prediction is {:?}",
            cat.beta.pow(2),
            expect
        ));
    }
    rep
}
