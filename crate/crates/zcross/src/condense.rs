//! Condensation of pointed braided categories by isotropic subgroups,
//! lifting of actions across the lattice-to-discriminant condensation,
//! and condensation of the TY-type categories.
//!
//! The setting: a pointed braided category on `Γ̄` with trivial
//! associator and bimultiplicative braiding `σ̄`, and an isotropic
//! subgroup `I` (the quadratic form vanishes on `I`).  The subgroup
//! supports a commutative algebra structure given by a 2-cochain `ε` on
//! `I` whose skew form is `σ̄|_I`; condensing by it produces
//!
//! - a tensor category pointed on `Γ̄/I` with associator
//!   `ω(a,b,c) = σ̄(â, u(b,c))·ε(u(b,c), u(a,b+c))·ε(u(a,b), u(a+b,c))⁻¹`
//!   where `u(a,b) = â + b̂ − (a+b)^ ∈ I` measures the failure of the
//!   chosen coset section to be additive, and
//! - a braided (local) part pointed on `I^⊥/I` with
//!   `σ(a,b) = σ̄(â,b̂)` and the same associator formula, carrying the
//!   induced quadratic form.
//!
//! An ambient group automorphism `g` preserving the braiding lifts to
//! the condensed category with object map `a ↦ ḡ.a` and tensor
//! structure `τ(a,b) = σ̄(â, ḡ.b̂ − (ḡ.b)^)`; this is implemented for
//! the lattice pipeline (where the condensation is by the lattice
//! itself and the quotient is the discriminant group).

use crate::abgroup::{AbGroup, Elem};
use crate::crossedcat::{CrossedCat, Report};
use crate::error::{Result, ZcrossError};
use crate::lattice::{DiscPipeline, Involution};
use crate::pointedcat::{AbelianCocycle, GroupCocycle3};
use crate::qform::{Condensation, QuadForm};
use crate::scalar::{Phase, Rational};
use std::collections::HashMap;

/// A pointed braided category with strict associator plus a chosen
/// isotropic subgroup and algebra cochain, ready for condensation.
pub struct CondensationInput {
    /// The ambient cocycle; `ω ≡ 1` and `σ` bimultiplicative.
    pub ambient: AbelianCocycle,
    /// Generators of the isotropic subgroup `I`.
    pub iso_gens: Vec<Elem>,
    /// All elements of `I`.
    pub iso_elements: Vec<Elem>,
    /// Invariant-factor basis of `I` and its cyclic orders.
    pub iso_basis: Vec<Elem>,
    pub iso_factors: Vec<i64>,
    /// Coordinates of each element of `I` in the invariant-factor basis.
    coords: HashMap<Elem, Elem>,
}

impl CondensationInput {
    /// Validate the ambient data and construct the canonical algebra
    /// cochain on `I`: `ε(tᵢ,tⱼ) = σ̄(tᵢ,tⱼ)` for basis indices
    /// `i > j`, else 1, extended bimultiplicatively.  This is
    /// well-defined because `σ̄` restricted to an isotropic subgroup is
    /// alternating, and its skew form is `σ̄|_I` as required.
    pub fn new(ambient: AbelianCocycle, iso_gens: Vec<Elem>) -> Result<Self> {
        let g = &ambient.group;
        let elems = g.elements();
        // Strict associator.
        if !ambient.omega.iter().all(|p| p.is_one()) {
            return Err(ZcrossError::AssumptionViolated(
                "condensation requires a strict (trivial) ambient associator".into(),
            ));
        }
        // Bimultiplicative braiding (index-table sweep; σ is symmetric in
        // cost, so one-sided additivity over all triples suffices).
        {
            let n = elems.len();
            let add = crate::pointedcat::index_add_table(g);
            let s = |i: usize, j: usize| ambient.sigma[i * n + j];
            for a in 0..n {
                for b in 0..n {
                    let ab = add[a * n + b];
                    for c in 0..n {
                        if s(ab, c) != s(a, c) * s(b, c) || s(c, ab) != s(c, a) * s(c, b) {
                            return Err(ZcrossError::AssumptionViolated(
                                "the ambient braiding is not bimultiplicative".into(),
                            ));
                        }
                    }
                }
            }
        }
        let iso_elements: Vec<Elem> = g.span(&iso_gens).into_iter().collect();
        // Isotropy: the quadratic form σ̄(i,i) vanishes on I.
        for i in &iso_elements {
            if !ambient.sigma(i, i).is_one() {
                return Err(ZcrossError::NotIsotropic(format!(
                    "σ({:?},{:?}) = {:?} ≠ 1",
                    i,
                    i,
                    ambient.sigma(i, i)
                )));
            }
        }
        let (iso_factors, iso_basis) = g.subgroup_structure(&iso_gens);
        // Coordinates of I-elements in the basis.
        let shape = AbGroup::new(iso_factors.clone())?;
        let mut coords = HashMap::new();
        for c in shape.elements() {
            let mut x = g.zero();
            for (k, t) in c.iter().zip(&iso_basis) {
                x = g.add(&x, &g.scale(*k, t));
            }
            coords.insert(x, c);
        }
        Ok(CondensationInput { ambient, iso_gens, iso_elements, iso_basis, iso_factors, coords })
    }

    /// The algebra 2-cochain `ε` on `I × I`.
    pub fn eps(&self, u: &[i64], v: &[i64]) -> Phase {
        let g = &self.ambient.group;
        let cu = self.coords.get(&g.normalize(u)).expect("argument must lie in I");
        let cv = self.coords.get(&g.normalize(v)).expect("argument must lie in I");
        let mut out = Phase::one();
        for i in 0..self.iso_basis.len() {
            for j in 0..i {
                out = out
                    * self
                        .ambient
                        .sigma(&self.iso_basis[i], &self.iso_basis[j])
                        .pow(cu[i] * cv[j]);
            }
        }
        out
    }
}

/// The two outputs of condensing a pointed category by an isotropic
/// subgroup: the pointed tensor category on the full coset group and
/// the braided (local) part on `I^⊥/I`.
pub struct CondensedPointed {
    /// The quotient `Γ̄/I` underlying the tensor category of modules.
    pub tensor_group: AbGroup,
    /// Its associator.
    pub tensor_omega: GroupCocycle3,
    /// Coset bookkeeping and the induced quadratic form on `I^⊥/I`.
    pub local: Condensation,
    /// The braided cocycle of the local part.
    pub braided: AbelianCocycle,
}

/// Condense a strict pointed braided category by an isotropic subgroup.
pub fn condense_pointed(input: &CondensationInput) -> Result<CondensedPointed> {
    let g = input.ambient.group.clone();
    // The tensor part on Γ̄/I.
    let quot = g.quotient(&input.iso_gens);
    let carry = |a: &[i64], b: &[i64]| -> Elem {
        let sum = g.add(a, b);
        g.sub(&g.add(a, b), &quot.lift(&quot.project(&sum)))
    };
    let tensor_group = quot.group.clone();
    let tensor_omega = GroupCocycle3::from_fn(tensor_group.clone(), |a, b, c| {
        let la = quot.lift(a);
        let lb = quot.lift(b);
        let lc = quot.lift(c);
        let u_bc = carry(&lb, &lc);
        let u_a_bc = carry(&la, &g.add(&lb, &g.sub(&lc, &u_bc)));
        let u_ab = carry(&la, &lb);
        let u_ab_c = carry(&g.add(&la, &g.sub(&lb, &u_ab)), &lc);
        input.ambient.sigma(&la, &u_bc)
            * input.eps(&u_bc, &u_a_bc)
            * input.eps(&u_ab, &u_ab_c).inv()
    });

    // The braided local part on I^⊥/I.
    let q = input.ambient.extract_q()?;
    let local = q.condense(&input.iso_gens)?;
    let braided = {
        let g2 = g.clone();
        let lc = &local;
        let amb = &input.ambient;
        let inp = input;
        let lift = |a: &[i64]| lc.lift(a);
        let carry2 = |a: &[i64], b: &[i64]| -> Elem {
            let sum = g2.add(a, b);
            g2.sub(&sum, &lift(&lc.project(&sum)))
        };
        AbelianCocycle::from_fns(
            local.quotient.group.clone(),
            |a, b| amb.sigma(&lift(a), &lift(b)),
            |a, b, c| {
                let la = lift(a);
                let lb = lift(b);
                let lcv = lift(c);
                let u_bc = carry2(&lb, &lcv);
                let u_a_bc = carry2(&la, &g2.add(&lb, &g2.sub(&lcv, &u_bc)));
                let u_ab = carry2(&la, &lb);
                let u_ab_c = carry2(&g2.add(&la, &g2.sub(&lb, &u_ab)), &lcv);
                amb.sigma(&la, &u_bc) * inp.eps(&u_bc, &u_a_bc) * inp.eps(&u_ab, &u_ab_c).inv()
            },
        )
    };
    Ok(CondensedPointed { tensor_group, tensor_omega, local, braided })
}

/// A lift of a lattice isometry to the condensed (discriminant) pointed
/// category: the object permutation and the tensor structure of the
/// lifted functor.
pub struct LiftedAction {
    /// Image of each simple (discriminant group enumeration order).
    pub object_map: Vec<usize>,
    /// `τ(a,b)` in row-major enumeration order.
    pub tau: Vec<Phase>,
    n: usize,
}

impl LiftedAction {
    pub fn tau_at(&self, a: usize, b: usize) -> Phase {
        self.tau[a * self.n + b]
    }

    /// Verify the monoidal coherence of the lifted functor against the
    /// condensed associator, and the composition constraint of an
    /// involutive action with trivial `T₂`:
    /// `τ(a+b,c)·τ(a,b)·ω(ga,gb,gc) = ω(a,b,c)·τ(b,c)·τ(a,b+c)` and
    /// `τ(ga,gb)·τ(a,b) = 1`.
    pub fn verify(&self, coc: &AbelianCocycle) -> Report {
        let mut rep = Report::default();
        let g = &coc.group;
        let elems = g.elements();
        let n = elems.len();
        for a in 0..n {
            for b in 0..n {
                let ab = g.index_of(&g.add(&elems[a], &elems[b]));
                rep.checked += 1;
                if !(self.tau_at(self.object_map[a], self.object_map[b]) * self.tau_at(a, b))
                    .is_one()
                {
                    rep.violations.push(format!("involution constraint at ({},{})", a, b));
                }
                for c in 0..n {
                    rep.checked += 1;
                    let bc = g.index_of(&g.add(&elems[b], &elems[c]));
                    let lhs = self.tau_at(ab, c)
                        * self.tau_at(a, b)
                        * coc.omega(
                            &elems[self.object_map[a]],
                            &elems[self.object_map[b]],
                            &elems[self.object_map[c]],
                        );
                    let rhs = coc.omega(&elems[a], &elems[b], &elems[c])
                        * self.tau_at(b, c)
                        * self.tau_at(a, bc);
                    if lhs != rhs {
                        rep.violations
                            .push(format!("monoidal coherence at ({},{},{})", a, b, c));
                    }
                }
            }
        }
        rep
    }
}

/// Lift a lattice isometry across the lattice-to-discriminant
/// condensation: objects map by the induced permutation of `Γ = L'/L`
/// and the tensor structure is `τ(a,b) = σ̄(â, g.b̂ − (g.b)^)`.
///
/// The construction assumes the algebra cochain on the lattice and the
/// lift datum of the isometry are trivial.  The canonical lattice
/// cochain is trivial exactly when all off-diagonal Gram entries are
/// even; the only supported exception is `g = −id` over an odd-order
/// discriminant group, where the resulting tensor structure is provably
/// trivial and is verified exhaustively below.
pub fn lift_action(p: &DiscPipeline, g: &Involution) -> Result<LiftedAction> {
    let d = p.lattice.rank();
    let off_diag_even = (0..d)
        .all(|i| (0..d).all(|j| i == j || p.lattice.gram[i][j] % 2 == 0));
    let minus_id = g.matrix == Involution::minus_identity(d).matrix;
    if !off_diag_even && !(minus_id && p.group.order() % 2 == 1) {
        return Err(ZcrossError::AssumptionViolated(
            "the lattice algebra cochain is nontrivial (odd off-diagonal Gram entry) \
             and no formula is available except for −id over an odd discriminant group"
                .into(),
        ));
    }
    let elems = p.group.elements();
    let n = elems.len();
    let object_map: Vec<usize> = elems
        .iter()
        .map(|a| p.group.index_of(&p.project(&g.apply_dual(&p.lift(a)))))
        .collect();
    let mut tau = Vec::with_capacity(n * n);
    for a in &elems {
        let ahat = p.lift(a);
        for (bi, b) in elems.iter().enumerate() {
            let _ = b;
            let gb_hat = g.apply_dual(&p.lift(&elems[bi]));
            let gb_rep = p.lift(&elems[object_map[bi]]);
            let w: Vec<i64> = gb_hat.iter().zip(&gb_rep).map(|(x, y)| x - y).collect();
            // w is a lattice vector; the pairing ⟨â, w⟩ is an integer
            // (â ∈ L'), so τ is a sign when w/2 is half-integral.
            let pair = p.dual_pairing(&ahat, &w);
            debug_assert!(pair.is_integer(), "⟨â, w⟩ must be integral for w ∈ L");
            tau.push(Phase::new(pair / Rational::from_integer(2)));
        }
    }
    let out = LiftedAction { object_map, tau, n };
    let rep = out.verify(&AbelianCocycle::from_lattice(p));
    if !rep.pass() {
        return Err(ZcrossError::AssumptionViolated(format!(
            "lifted tensor structure fails coherence: {}",
            rep.violations.join("; ")
        )));
    }
    Ok(out)
}

/// Condense a TY-type crossed category by an isotropic, action-stable
/// subgroup `I` of its untwisted sector.
///
/// The untwisted sector condenses through [`condense_pointed`]; the
/// twisted sector collapses to a single simple because the locality
/// condition on an `I`-character `ρ` reads `ρ(2i) = 1` for all `i ∈ I`
/// (trivial algebra cochain), which over an odd-order `I` forces
/// `ρ ≡ 1`.  The output is the TY-type category over `(I^⊥/I,
/// induced Q)` with the same sign `ε`.
pub fn ty_condense(cat: &CrossedCat, iso_gens: &[Elem]) -> Result<CrossedCat> {
    let g = &cat.group;
    let n = g.order() as usize;
    if g.order() % 2 == 0 {
        return Err(ZcrossError::EvenOrder("odd untwisted sector required".into()));
    }
    if cat.twisted.len() != 1 || cat.n_simples() != n + 1 {
        return Err(ZcrossError::InvalidInput(
            "expected a TY-type category with a single twisted simple".into(),
        ));
    }
    // Reconstruct the braiding bicharacter σ from the R table.
    let elems = g.elements();
    let sigma_tbl: Vec<Phase> = (0..n * n)
        .map(|k| {
            let (a, b) = (k / n, k % n);
            let t = cat.fus(a, b)[0];
            cat.r_phase(a, b, t).unwrap()
        })
        .collect();
    // Stability of I under the grading action a ↦ −a.
    let iso_elements: Vec<Elem> = g.span(&iso_gens.to_vec()).into_iter().collect();
    for i in &iso_elements {
        let idx = g.index_of(i);
        if !iso_elements.contains(&elems[cat.act(idx)]) {
            return Err(ZcrossError::NotStable(format!(
                "the action does not preserve the subgroup at {:?}",
                i
            )));
        }
    }
    // Isotropy via the twists (θ on the untwisted sector is Q).
    for i in &iso_elements {
        if !cat.theta[g.index_of(i)].is_one() {
            return Err(ZcrossError::NotIsotropic(format!(
                "Q({:?}) ≠ 0 on the subgroup",
                i
            )));
        }
    }
    // Locality: solve ρ(2i) = 1 over the characters of I and demand a
    // unique solution (the surviving twisted simple).
    let (iso_factors, iso_basis) = g.subgroup_structure(iso_gens);
    let shape = AbGroup::new(iso_factors)?;
    let mut local_chars = 0usize;
    for c in shape.elements() {
        let ok = shape.elements().iter().all(|x| shape.character(&c, &shape.add(x, x)).is_one());
        if ok {
            local_chars += 1;
        }
    }
    let _ = iso_basis;
    if local_chars != 1 {
        return Err(ZcrossError::AssumptionViolated(format!(
            "expected a unique local character on the odd subgroup, found {}",
            local_chars
        )));
    }
    // Condense the untwisted sector and rebuild over the induced form.
    let ambient = AbelianCocycle::from_fns(
        g.clone(),
        |a, b| sigma_tbl[g.index_of(a) * n + g.index_of(b)],
        |_, _, _| Phase::one(),
    );
    let input = CondensationInput::new(ambient, iso_gens.to_vec())?;
    let condensed = condense_pointed(&input)?;
    let induced_q = condensed.braided.extract_q()?;
    crate::builders::build_ty(&induced_q, cat.epsilon_sign)
}

/// Convenience: the quadratic form of a TY-type category's untwisted
/// sector, read off the twists.
pub fn untwisted_form(cat: &CrossedCat) -> Result<QuadForm> {
    let g = &cat.group;
    let gens = g.standard_generators();
    let gen_values: Vec<Rational> = gens.iter().map(|a| cat.theta[g.index_of(a)].exponent()).collect();
    let mut gen_pairs = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let sum = g.add(&gens[i], &gens[j]);
            let b = cat.theta[g.index_of(&sum)].exponent()
                - cat.theta[g.index_of(&gens[i])].exponent()
                - cat.theta[g.index_of(&gens[j])].exponent();
            gen_pairs.push(b);
        }
    }
    QuadForm::new(g.clone(), gen_values, gen_pairs)
}
