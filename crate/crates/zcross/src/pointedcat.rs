//! Pointed braided categories as explicit abelian-3-cocycle tables.
//!
//! A pointed braided category on a finite abelian group `Γ` is presented
//! by a pair `(ω, σ)` of an associator 3-cocycle and a braiding table
//! subject to the two hexagon identities; such pairs correspond
//! bijectively to quadratic forms `Q(a) = σ(a,a)` on `Γ`.  This module
//! builds the standard representative from an even lattice, verifies the
//! defining identities exhaustively, extracts `Q` and the modular data,
//! and computes the cocycle-twisting maps `γ` and `μ` used to twist a
//! crossed extension by a group 3-cocycle.

use crate::abgroup::{AbGroup, Elem};
use crate::error::{Result, ZcrossError};
use crate::lattice::DiscPipeline;
use crate::qform::QuadForm;
use crate::scalar::{Phase, Rational, ScaledScalar};

/// A braided structure on `Vect_Γ`: dense tables for the braiding `σ`
/// and the associator `ω`, indexed in group enumeration order.
#[derive(Clone, Debug)]
pub struct AbelianCocycle {
    pub group: AbGroup,
    /// `σ(a,b)` at index `a·n + b`.
    pub sigma: Vec<Phase>,
    /// `ω(a,b,c)` at index `(a·n + b)·n + c`.
    pub omega: Vec<Phase>,
}

/// Dense addition table on element indices: entry `i·n + j` is the index
/// of `elems[i] + elems[j]`.
pub fn index_add_table(g: &AbGroup) -> Vec<usize> {
    let elems = g.elements();
    let n = elems.len();
    let mut t = vec![0usize; n * n];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            t[i * n + j] = g.index_of(&g.add(a, b));
        }
    }
    t
}

impl AbelianCocycle {
    /// Build from closures over group elements.
    pub fn from_fns(
        group: AbGroup,
        sigma: impl Fn(&[i64], &[i64]) -> Phase,
        omega: impl Fn(&[i64], &[i64], &[i64]) -> Phase,
    ) -> Self {
        let elems = group.elements();
        let mut s = Vec::with_capacity(elems.len() * elems.len());
        let mut w = Vec::with_capacity(elems.len().pow(3));
        for a in &elems {
            for b in &elems {
                s.push(sigma(a, b));
            }
        }
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    w.push(omega(a, b, c));
                }
            }
        }
        AbelianCocycle { group, sigma: s, omega: w }
    }

    /// The trivial structure (`σ ≡ 1`, `ω ≡ 1`).
    pub fn trivial(group: AbGroup) -> Self {
        let n = group.order() as usize;
        AbelianCocycle { group, sigma: vec![Phase::one(); n * n], omega: vec![Phase::one(); n * n * n] }
    }

    pub fn sigma(&self, a: &[i64], b: &[i64]) -> Phase {
        let n = self.group.order() as usize;
        self.sigma[self.group.index_of(a) * n + self.group.index_of(b)]
    }

    pub fn omega(&self, a: &[i64], b: &[i64], c: &[i64]) -> Phase {
        let n = self.group.order() as usize;
        self.omega[(self.group.index_of(a) * n + self.group.index_of(b)) * n
            + self.group.index_of(c)]
    }

    /// The standard representative attached to an even lattice:
    /// `σ(a,b) = e(⟨â,b̂⟩/2)` and
    /// `ω(a,b,c) = e(⟨â,u(b,c)⟩/2)·ε(u(b,c),u(a,b+c))·ε(u(a,b),u(a+b,c))⁻¹`,
    /// where `u` is the lift-defect 2-cocycle and `ε` the sign
    /// bicharacter of the lattice.
    pub fn from_lattice(p: &DiscPipeline) -> Self {
        AbelianCocycle::from_fns(
            p.group.clone(),
            |a, b| Phase::new(p.dual_pairing(&p.lift(a), &p.lift(b)) / Rational::from_integer(2)),
            |a, b, c| {
                let u_bc = p.u_lattice(b, c);
                let u_a_bc = p.u_lattice(a, &p.group.add(b, c));
                let u_ab = p.u_lattice(a, b);
                let u_ab_c = p.u_lattice(&p.group.add(a, b), c);
                let pair = p.dual_pairing(&p.lift(a), &p.lattice_to_dual(&u_bc));
                Phase::new(pair / Rational::from_integer(2))
                    * p.lattice.epsilon(&u_bc, &u_a_bc)
                    * p.lattice.epsilon(&u_ab, &u_ab_c).inv()
            },
        )
    }

    /// Exhaustively verify the two hexagon identities and the 3-cocycle
    /// identity; all violating tuples are reported.
    ///
    /// Runs on a precomputed index addition table so the quadruple loop
    /// touches only dense arrays.
    pub fn check(&self) -> CocycleReport {
        let elems = self.group.elements();
        let n = elems.len();
        let add = index_add_table(&self.group);
        let s = |i: usize, j: usize| self.sigma[i * n + j];
        let w = |i: usize, j: usize, k: usize| self.omega[(i * n + j) * n + k];
        let mut report = CocycleReport::default();
        for a in 0..n {
            for b in 0..n {
                let ab = add[a * n + b];
                for c in 0..n {
                    let bc = add[b * n + c];
                    // ω(b,a,c) / (ω(a,b,c)·ω(b,c,a)) = σ(a,b+c) / (σ(a,b)·σ(a,c))
                    let lhs = w(b, a, c) / (w(a, b, c) * w(b, c, a));
                    let rhs = s(a, bc) / (s(a, b) * s(a, c));
                    if lhs != rhs {
                        report.hexagon1.push((elems[a].clone(), elems[b].clone(), elems[c].clone()));
                    }
                    // ω(a,b,c)·ω(c,a,b) / ω(a,c,b) = σ(a+b,c) / (σ(a,c)·σ(b,c))
                    let lhs = w(a, b, c) * w(c, a, b) / w(a, c, b);
                    let rhs = s(ab, c) / (s(a, c) * s(b, c));
                    if lhs != rhs {
                        report.hexagon2.push((elems[a].clone(), elems[b].clone(), elems[c].clone()));
                    }
                    for d in 0..n {
                        let cd = add[c * n + d];
                        let lhs = w(b, c, d) * w(a, bc, d) * w(a, b, c);
                        let rhs = w(ab, c, d) * w(a, b, cd);
                        if lhs != rhs {
                            report.cocycle.push((
                                elems[a].clone(),
                                elems[b].clone(),
                                elems[c].clone(),
                                elems[d].clone(),
                            ));
                        }
                    }
                }
            }
        }
        report
    }

    /// The quadratic form `Q(a) = σ(a,a)` in generator data, with a
    /// pointwise consistency check against the table.
    pub fn extract_q(&self) -> Result<QuadForm> {
        let gens = self.group.standard_generators();
        let mut gen_values = Vec::new();
        let mut gen_pairs = Vec::new();
        for (i, gi) in gens.iter().enumerate() {
            gen_values.push(self.sigma(gi, gi).exponent());
            for gj in gens.iter().skip(i + 1) {
                gen_pairs.push((self.sigma(gi, gj) * self.sigma(gj, gi)).exponent());
            }
        }
        let q = QuadForm::new(self.group.clone(), gen_values, gen_pairs)?;
        for a in self.group.elements() {
            if Phase::new(q.eval(&a)) != self.sigma(&a, &a) {
                return Err(ZcrossError::AssumptionViolated(format!(
                    "σ(a,a) is not a quadratic form: mismatch at {:?}",
                    a
                )));
            }
            for b in self.group.elements() {
                if Phase::new(q.bilinear_exp(&a, &b)) != self.sigma(&a, &b) * self.sigma(&b, &a)
                {
                    return Err(ZcrossError::AssumptionViolated(format!(
                        "double braiding is not bimultiplicative at ({:?},{:?})",
                        a, b
                    )));
                }
            }
        }
        Ok(q)
    }

    /// S- and T-matrices of the pointed category (all dimensions 1):
    /// `S_{ab} = |Γ|^{-1/2}·e(B(a,b))`, `T_a = e(Q(a))`.
    pub fn modular_data(&self) -> Result<ModularData> {
        let q = self.extract_q()?;
        if !q.is_nondegenerate() {
            return Err(ZcrossError::AssumptionViolated(
                "modular data requires a nondegenerate double braiding".into(),
            ));
        }
        let elems = self.group.elements();
        let norm = Rational::new(1, self.group.order());
        let s = elems
            .iter()
            .map(|a| {
                elems
                    .iter()
                    .map(|b| ScaledScalar::new(norm, self.sigma(a, b) * self.sigma(b, a)))
                    .collect()
            })
            .collect();
        let t = elems.iter().map(|a| self.sigma(a, a)).collect();
        Ok(ModularData { group: self.group.clone(), s, t })
    }
}

/// Violations found by [`AbelianCocycle::check`].
#[derive(Default, Debug)]
pub struct CocycleReport {
    pub hexagon1: Vec<(Elem, Elem, Elem)>,
    pub hexagon2: Vec<(Elem, Elem, Elem)>,
    pub cocycle: Vec<(Elem, Elem, Elem, Elem)>,
}

impl CocycleReport {
    pub fn pass(&self) -> bool {
        self.hexagon1.is_empty() && self.hexagon2.is_empty() && self.cocycle.is_empty()
    }
}

/// Modular data of a pointed category.
#[derive(Debug)]
pub struct ModularData {
    pub group: AbGroup,
    pub s: Vec<Vec<ScaledScalar>>,
    pub t: Vec<Phase>,
}

// ---------------------------------------------------------------------------
// Twisting maps from a group 3-cocycle
// ---------------------------------------------------------------------------

/// A 3-cocycle on a finite abelian group, as a dense phase table.
#[derive(Clone, Debug)]
pub struct GroupCocycle3 {
    pub group: AbGroup,
    /// `ω(g,h,k)` at index `(g·n + h)·n + k`.
    pub table: Vec<Phase>,
}

impl GroupCocycle3 {
    pub fn from_fn(group: AbGroup, f: impl Fn(&[i64], &[i64], &[i64]) -> Phase) -> Self {
        let elems = group.elements();
        let mut table = Vec::with_capacity(elems.len().pow(3));
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    table.push(f(a, b, c));
                }
            }
        }
        GroupCocycle3 { group, table }
    }

    pub fn get(&self, a: &[i64], b: &[i64], c: &[i64]) -> Phase {
        let n = self.group.order() as usize;
        self.table[(self.group.index_of(a) * n + self.group.index_of(b)) * n
            + self.group.index_of(c)]
    }

    /// Does the table satisfy the 3-cocycle identity?
    pub fn is_cocycle(&self) -> bool {
        let n = self.group.order() as usize;
        let add = index_add_table(&self.group);
        let w = |i: usize, j: usize, k: usize| self.table[(i * n + j) * n + k];
        for a in 0..n {
            for b in 0..n {
                let ab = add[a * n + b];
                for c in 0..n {
                    let bc = add[b * n + c];
                    for d in 0..n {
                        let cd = add[c * n + d];
                        if w(b, c, d) * w(a, bc, d) * w(a, b, c) != w(ab, c, d) * w(a, b, cd) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The coboundary `dκ` of a 2-cochain.
    pub fn coboundary(group: AbGroup, kappa: impl Fn(&[i64], &[i64]) -> Phase) -> Self {
        let g = group.clone();
        GroupCocycle3::from_fn(group, move |a, b, c| {
            kappa(b, c) * kappa(a, &g.add(b, c)) / (kappa(&g.add(a, b), c) * kappa(a, b))
        })
    }
}

/// The twisting maps of a group 3-cocycle on an abelian group:
/// `μ_g(x,y) = ω(x,g,y) / (ω(x,y,g)·ω(g,x,y))` and
/// `γ_{g,h}(x) = ω(g,h,x)·ω(x,g,h) / ω(g,x,h)`.
#[derive(Debug)]
pub struct TwistingMaps {
    pub group: AbGroup,
    /// `μ_g(x,y)` at index `(g·n + x)·n + y`.
    pub mu: Vec<Phase>,
    /// `γ_{g,h}(x)` at index `(g·n + h)·n + x`.
    pub gamma: Vec<Phase>,
}

impl TwistingMaps {
    pub fn mu(&self, g: &[i64], x: &[i64], y: &[i64]) -> Phase {
        let n = self.group.order() as usize;
        self.mu[(self.group.index_of(g) * n + self.group.index_of(x)) * n
            + self.group.index_of(y)]
    }

    pub fn gamma(&self, g: &[i64], h: &[i64], x: &[i64]) -> Phase {
        let n = self.group.order() as usize;
        self.gamma[(self.group.index_of(g) * n + self.group.index_of(h)) * n
            + self.group.index_of(x)]
    }
}

/// Compute the twisting maps, verifying the 3-cocycle precondition and
/// that every `μ_g` is itself a 2-cocycle.
pub fn twisting_maps(omega3: &GroupCocycle3) -> Result<TwistingMaps> {
    if !omega3.is_cocycle() {
        return Err(ZcrossError::AssumptionViolated(
            "twisting maps require a 3-cocycle".into(),
        ));
    }
    let g = &omega3.group;
    let elems = g.elements();
    let n = elems.len();
    let mut mu = Vec::with_capacity(n * n * n);
    let mut gamma = Vec::with_capacity(n * n * n);
    for a in &elems {
        for x in &elems {
            for y in &elems {
                mu.push(omega3.get(x, a, y) / (omega3.get(x, y, a) * omega3.get(a, x, y)));
            }
        }
    }
    for a in &elems {
        for b in &elems {
            for x in &elems {
                gamma.push(
                    omega3.get(a, b, x) * omega3.get(x, a, b) / omega3.get(a, x, b),
                );
            }
        }
    }
    let maps = TwistingMaps { group: g.clone(), mu, gamma };
    // Each μ_g must be a 2-cocycle on the abelian group.
    for gg in &elems {
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    let lhs = maps.mu(gg, y, z) * maps.mu(gg, x, &g.add(y, z));
                    let rhs = maps.mu(gg, &g.add(x, y), z) * maps.mu(gg, x, y);
                    if lhs != rhs {
                        return Err(ZcrossError::AssumptionViolated(format!(
                            "μ_{:?} is not a 2-cocycle at ({:?},{:?},{:?})",
                            gg, x, y, z
                        )));
                    }
                }
            }
        }
    }
    Ok(maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeData;

    fn lat(gram: Vec<Vec<i64>>) -> DiscPipeline {
        LatticeData::new(gram).unwrap().discriminant().unwrap()
    }

    #[test]
    fn from_lattice_rank_one_values() {
        let p = lat(vec![vec![2]]);
        let c = AbelianCocycle::from_lattice(&p);
        assert_eq!(c.sigma(&[1], &[1]), Phase::of(1, 4));
        assert_eq!(c.omega(&[1], &[1], &[1]), Phase::minus_one());
        assert!(c.check().pass());
    }

    #[test]
    fn from_lattice_a2_values() {
        let p = lat(vec![vec![2, -1], vec![-1, 2]]);
        let c = AbelianCocycle::from_lattice(&p);
        // σ(a,a) = e(⟨â,â⟩/2) with the fundamental-weight norm 2/3.
        assert_eq!(c.sigma(&[1], &[1]), Phase::of(1, 3));
        assert!(c.check().pass());
    }

    #[test]
    fn from_lattice_trivial_group() {
        let p = lat(vec![
            vec![2, -1, 0, 0, 0, 0, 0, 0],
            vec![-1, 2, -1, 0, 0, 0, 0, 0],
            vec![0, -1, 2, -1, 0, 0, 0, -1],
            vec![0, 0, -1, 2, -1, 0, 0, 0],
            vec![0, 0, 0, -1, 2, -1, 0, 0],
            vec![0, 0, 0, 0, -1, 2, -1, 0],
            vec![0, 0, 0, 0, 0, -1, 2, 0],
            vec![0, 0, -1, 0, 0, 0, 0, 2],
        ]);
        let c = AbelianCocycle::from_lattice(&p);
        assert_eq!(c.sigma.len(), 1);
        assert!(c.sigma[0].is_one() && c.omega[0].is_one());
    }

    #[test]
    fn check_passes_on_lattice_battery_and_catches_faults() {
        for gram in [
            vec![vec![2]],
            vec![vec![2, -1], vec![-1, 2]],
            vec![vec![2, 0], vec![0, 2]],
            vec![vec![2, 0], vec![0, 4]],
            vec![vec![4, 0], vec![0, 6]],
        ] {
            let c = AbelianCocycle::from_lattice(&lat(gram.clone()));
            assert!(c.check().pass(), "gram {:?}", gram);
            if c.group.order() > 1 {
                // Perturbing one associator entry must be caught and the
                // offending tuple reported.
                let mut bad = c.clone();
                let last = bad.omega.len() - 1;
                bad.omega[last] = bad.omega[last] * Phase::of(1, 3);
                let report = bad.check();
                assert!(!report.pass());
                let worst = c.group.elements().last().unwrap().clone();
                assert!(report.cocycle.iter().any(|(_, _, c_, d)| *c_ == worst || *d == worst));
            }
        }
        assert!(AbelianCocycle::trivial(AbGroup::new(vec![4]).unwrap()).check().pass());
    }

    #[test]
    fn extract_q_matches_pipeline_form() {
        for gram in [vec![vec![2]], vec![vec![2, -1], vec![-1, 2]], vec![vec![2, 0], vec![0, 4]]] {
            let p = lat(gram);
            let c = AbelianCocycle::from_lattice(&p);
            let q = c.extract_q().unwrap();
            for a in p.group.elements() {
                assert_eq!(q.eval(&a), p.form.eval(&a));
            }
        }
    }

    #[test]
    fn modular_data_examples() {
        // (ℤ₂, Q = 1/4) from the [[2]] lattice.
        let c = AbelianCocycle::from_lattice(&lat(vec![vec![2]]));
        let md = c.modular_data().unwrap();
        assert_eq!(md.t, vec![Phase::one(), Phase::of(1, 4)]);
        let half = Rational::new(1, 2);
        assert_eq!(md.s[0][0], ScaledScalar::new(half, Phase::one()));
        assert_eq!(md.s[0][1], ScaledScalar::new(half, Phase::one()));
        assert_eq!(md.s[1][1], ScaledScalar::new(half, Phase::minus_one()));
        // (ℤ₃, a²/3) from A₂: S₁₁ = 3^{-1/2}·e(2/3).
        let c = AbelianCocycle::from_lattice(&lat(vec![vec![2, -1], vec![-1, 2]]));
        let md = c.modular_data().unwrap();
        assert_eq!(md.s[1][1], ScaledScalar::new(Rational::new(1, 3), Phase::of(2, 3)));
    }

    #[test]
    fn s_matrix_squares_to_charge_conjugation() {
        for gram in [vec![vec![2]], vec![vec![2, -1], vec![-1, 2]], vec![vec![2, 0], vec![0, 4]]] {
            let p = lat(gram);
            let c = AbelianCocycle::from_lattice(&p);
            let md = c.modular_data().unwrap();
            let elems = p.group.elements();
            for (i, a) in elems.iter().enumerate() {
                for (j, b) in elems.iter().enumerate() {
                    // (S²)_{ab} = |Γ|⁻¹·Σ_c e(B(a,c)+B(c,b)) = δ_{b,−a}.
                    let mut sum = crate::scalar::ScalarSum::zero();
                    for k in 0..elems.len() {
                        sum.push(md.s[i][k] * md.s[k][j]);
                    }
                    if *b == p.group.neg(a) {
                        assert!(sum.eq_rational(Rational::from_integer(1)));
                    } else {
                        assert!(sum.is_zero());
                    }
                }
            }
            // Symmetry.
            for i in 0..elems.len() {
                for j in 0..elems.len() {
                    assert_eq!(md.s[i][j], md.s[j][i]);
                }
            }
        }
    }

    #[test]
    fn twisting_maps_trivial_cocycle() {
        let g = AbGroup::new(vec![2]).unwrap();
        let omega = GroupCocycle3::from_fn(g, |_, _, _| Phase::one());
        let maps = twisting_maps(&omega).unwrap();
        assert!(maps.mu.iter().all(|p| p.is_one()));
        assert!(maps.gamma.iter().all(|p| p.is_one()));
    }

    /// The nontrivial class on ℤ₂: `ω(a,b,c) = (−1)^{abc}`.
    pub(crate) fn z2_nontrivial() -> GroupCocycle3 {
        GroupCocycle3::from_fn(AbGroup::new(vec![2]).unwrap(), |a, b, c| {
            Phase::new(Rational::new(a[0] * b[0] * c[0], 2))
        })
    }

    #[test]
    fn twisting_maps_nontrivial_z2() {
        let omega = z2_nontrivial();
        assert!(omega.is_cocycle());
        let maps = twisting_maps(&omega).unwrap();
        assert_eq!(maps.mu(&[1], &[1], &[1]), Phase::minus_one());
        assert_eq!(maps.gamma(&[1], &[1], &[1]), Phase::minus_one());
        // μ is symmetric here.
        assert_eq!(maps.mu(&[1], &[0], &[1]), maps.mu(&[1], &[1], &[0]));
    }

    #[test]
    fn twisting_maps_reject_non_cocycle() {
        let g = AbGroup::new(vec![2]).unwrap();
        let bad = GroupCocycle3::from_fn(g, |a, b, c| {
            // An arbitrary asymmetric table that fails the identity.
            Phase::new(Rational::new(a[0] + b[0] * c[0], 3))
        });
        assert!(!bad.is_cocycle());
        assert!(twisting_maps(&bad).is_err());
    }

    #[test]
    fn coboundary_gives_cohomologically_trivial_mu() {
        // ω = dκ for a 2-cochain κ on ℤ₂; each μ_g must then be a
        // 2-coboundary, found by searching over 1-cochains.
        let g = AbGroup::new(vec![2]).unwrap();
        let omega = GroupCocycle3::coboundary(g.clone(), |a, b| {
            Phase::new(Rational::new(a[0] * b[0], 4))
        });
        assert!(omega.is_cocycle());
        let maps = twisting_maps(&omega).unwrap();
        for gg in g.elements() {
            // Search f: ℤ₂ → 8th roots with f(0)=1 such that
            // μ_g(x,y) = f(x)·f(y)/f(x+y).
            let found = (0..8).any(|k| {
                let f = |x: &[i64]| {
                    if x[0] == 0 {
                        Phase::one()
                    } else {
                        Phase::of(k, 8)
                    }
                };
                g.elements().iter().all(|x| {
                    g.elements().iter().all(|y| {
                        maps.mu(&gg, x, y) == f(x) * f(y) / f(&g.add(x, y))
                    })
                })
            });
            assert!(found, "μ must be a coboundary for a coboundary ω");
        }
    }
}
