//! Quadratic forms on finite abelian groups and discriminant-form
//! operations: Gauss sums and signatures, isotropic condensation, and
//! odd-order square roots.
//!
//! A quadratic form `Q: Γ → ℚ/ℤ` is stored by its values on the chosen
//! generators together with the off-diagonal values of the associated
//! bilinear form `B(a,b) = Q(a+b) − Q(a) − Q(b)`; every value is then
//! determined by
//! `Q(Σ xᵢgᵢ) = Σ xᵢ²Q(gᵢ) + Σ_{i<j} xᵢxⱼ B(gᵢ,gⱼ)`.

use crate::abgroup::{AbGroup, Elem, Quotient};
use crate::error::{Result, ZcrossError};
use crate::scalar::{snap_to_root, CycSum, Phase, Rational};
use num::{One, Zero};
use std::collections::{BTreeSet, HashMap};

/// A quadratic form on a finite abelian group, in generator data.
#[derive(Clone, Debug)]
pub struct QuadForm {
    pub group: AbGroup,
    /// `Q(gᵢ)` as exponents in `[0,1)`.
    pub gen_values: Vec<Rational>,
    /// `B(gᵢ,gⱼ)` for `i < j`, row-major, as exponents in `[0,1)`.
    pub gen_pairs: Vec<Rational>,
}

fn mod1(r: Rational) -> Rational {
    r - r.floor()
}

impl QuadForm {
    /// Build and validate a quadratic form from generator data.
    ///
    /// Well-definedness on the quotient requires `nᵢ²·Q(gᵢ) ∈ ℤ`,
    /// `2nᵢ·Q(gᵢ) ∈ ℤ`, and `nᵢ·B(gᵢ,gⱼ) ∈ ℤ` for each modulus `nᵢ`.
    pub fn new(group: AbGroup, gen_values: Vec<Rational>, gen_pairs: Vec<Rational>) -> Result<Self> {
        let d = group.rank();
        if gen_values.len() != d || gen_pairs.len() != d * d.saturating_sub(1) / 2 {
            return Err(ZcrossError::InvalidInput(format!(
                "expected {} generator values and {} pair values",
                d,
                d * d.saturating_sub(1) / 2
            )));
        }
        let gen_values: Vec<Rational> = gen_values.into_iter().map(mod1).collect();
        let gen_pairs: Vec<Rational> = gen_pairs.into_iter().map(mod1).collect();
        for (i, &q) in gen_values.iter().enumerate() {
            let n = Rational::from_integer(group.factors[i]);
            if !(n * n * q).is_integer() || !(Rational::from_integer(2) * n * q).is_integer() {
                return Err(ZcrossError::InvalidInput(format!(
                    "Q(g{}) = {} is not well-defined on ℤ/{}",
                    i, q, group.factors[i]
                )));
            }
        }
        let form = QuadForm { group, gen_values, gen_pairs };
        for i in 0..d {
            for j in (i + 1)..d {
                let b = form.pair(i, j);
                for &n in [form.group.factors[i], form.group.factors[j]].iter() {
                    if !(Rational::from_integer(n) * b).is_integer() {
                        return Err(ZcrossError::InvalidInput(format!(
                            "B(g{},g{}) = {} is not well-defined",
                            i, j, b
                        )));
                    }
                }
            }
        }
        Ok(form)
    }

    /// A form `Q(a) = k·a²/n` on the cyclic group ℤ/n.
    pub fn cyclic(n: i64, k: i64) -> Result<Self> {
        QuadForm::new(AbGroup::new(vec![n])?, vec![Rational::new(k, n)], vec![])
    }

    /// The trivial form on the trivial group.
    pub fn trivial() -> Self {
        QuadForm { group: AbGroup::trivial(), gen_values: vec![], gen_pairs: vec![] }
    }

    fn pair(&self, i: usize, j: usize) -> Rational {
        assert!(i < j);
        let d = self.group.rank();
        // Row-major index into the strict upper triangle.
        let idx = i * d - i * (i + 1) / 2 + (j - i - 1);
        self.gen_pairs[idx]
    }

    /// `Q(a)` as an exponent in `[0,1)`.
    pub fn eval(&self, a: &[i64]) -> Rational {
        let a = self.group.normalize(a);
        let mut r = Rational::zero();
        for (i, &x) in a.iter().enumerate() {
            r += Rational::from_integer(x * x) * self.gen_values[i];
            for j in (i + 1)..a.len() {
                r += Rational::from_integer(x * a[j]) * self.pair(i, j);
            }
        }
        mod1(r)
    }

    /// `e(Q(a))`.
    pub fn q_phase(&self, a: &[i64]) -> Phase {
        Phase::new(self.eval(a))
    }

    /// `B(a,b) = Q(a+b) − Q(a) − Q(b)` as an exponent in `[0,1)`.
    pub fn bilinear_exp(&self, a: &[i64], b: &[i64]) -> Rational {
        let a = self.group.normalize(a);
        let b = self.group.normalize(b);
        let mut r = Rational::zero();
        for i in 0..a.len() {
            r += Rational::from_integer(2 * a[i] * b[i]) * self.gen_values[i];
            for j in (i + 1)..a.len() {
                r += Rational::from_integer(a[i] * b[j] + a[j] * b[i]) * self.pair(i, j);
            }
        }
        mod1(r)
    }

    /// `e(B(a,b))`.
    pub fn bilinear(&self, a: &[i64], b: &[i64]) -> Phase {
        Phase::new(self.bilinear_exp(a, b))
    }

    /// The inverse form `−Q` (with bilinear form `−B`).
    pub fn inverse(&self) -> QuadForm {
        QuadForm {
            group: self.group.clone(),
            gen_values: self.gen_values.iter().map(|q| mod1(-q)).collect(),
            gen_pairs: self.gen_pairs.iter().map(|b| mod1(-b)).collect(),
        }
    }

    /// Is the pairing `a ↦ B(a,·)` injective into the character group?
    pub fn is_nondegenerate(&self) -> bool {
        let gens = self.group.standard_generators();
        self.group.elements().iter().all(|a| {
            self.group.is_zero(a)
                || gens.iter().any(|g| !self.bilinear_exp(a, g).is_zero())
        })
    }

    /// The Gauss sum `Σ_a e(Q(a))` as an exact cyclotomic sum.
    pub fn gauss_sum(&self) -> CycSum {
        let mut s = CycSum::constant(Rational::zero());
        for a in self.group.elements() {
            s = s.add(&CycSum::term(Rational::one(), self.q_phase(&a)));
        }
        s
    }

    /// The signature `s ∈ ℤ/8` with `Σ_a e(Q(a)) = √|Γ|·e(s/8)`.
    ///
    /// Exact up to the certified snapping step; a snap failure means the
    /// form is degenerate (the Gauss sum then has the wrong modulus).
    pub fn gauss_signature(&self) -> Result<u8> {
        let s = self.gauss_sum();
        let p = snap_to_root(&s, Rational::from_integer(self.group.order()), 8)?;
        Ok((*p.exponent().numer() * 8 / *p.exponent().denom()) as u8)
    }

    /// Is `Q ≡ 0` on the subgroup generated by `gens`?  Returns a
    /// witnessing element on failure.
    pub fn isotropic_witness(&self, gens: &[Elem]) -> Option<Elem> {
        self.group.span(gens).into_iter().find(|x| !self.eval(x).is_zero())
    }

    /// All isotropic subgroups, as sorted element sets.
    pub fn all_isotropic_subgroups(&self) -> Vec<BTreeSet<Elem>> {
        self.group
            .all_subgroups()
            .into_iter()
            .filter(|s| s.iter().all(|x| self.eval(x).is_zero()))
            .collect()
    }

    /// The orthogonal complement `I^⊥ = {a : B(a,i)=0 ∀i∈I}` of the
    /// subgroup generated by `gens`, as an element list in enumeration
    /// order.
    pub fn orthogonal_complement(&self, gens: &[Elem]) -> Vec<Elem> {
        self.group
            .elements()
            .into_iter()
            .filter(|a| gens.iter().all(|i| self.bilinear_exp(a, i).is_zero()))
            .collect()
    }

    /// Condense by an isotropic subgroup: form the subquotient `I^⊥/I`
    /// with the induced quadratic form.
    pub fn condense(&self, gens: &[Elem]) -> Result<Condensation> {
        if let Some(w) = self.isotropic_witness(gens) {
            return Err(ZcrossError::NotIsotropic(format!(
                "Q({:?}) = {} ≠ 0",
                w,
                self.eval(&w)
            )));
        }
        let perp = self.orthogonal_complement(gens);
        let (h_factors, h_gens) = self.group.subgroup_structure(&perp);
        let h = AbGroup::new(h_factors)?;
        // Coordinates of each ambient element of I^⊥ relative to the
        // subgroup generators.
        let mut h_coords: HashMap<Elem, Elem> = HashMap::new();
        for c in h.elements() {
            let mut x = self.group.zero();
            for (k, g) in c.iter().zip(&h_gens) {
                x = self.group.add(&x, &self.group.scale(*k, g));
            }
            h_coords.insert(x, c);
        }
        assert_eq!(h_coords.len(), perp.len(), "subgroup coordinates must be a bijection");
        let gens_in_h: Vec<Elem> = gens
            .iter()
            .map(|g| {
                h_coords
                    .get(&self.group.normalize(g))
                    .expect("an isotropic subgroup lies in its own complement")
                    .clone()
            })
            .collect();
        let quot = h.quotient(&gens_in_h);

        let lift_to_ambient = |c: &[i64], quot: &Quotient, h_gens: &[Elem], amb: &AbGroup| -> Elem {
            let hc = quot.lift(c);
            let mut x = amb.zero();
            for (k, g) in hc.iter().zip(h_gens) {
                x = amb.add(&x, &amb.scale(*k, g));
            }
            x
        };

        // Induced form on the quotient generators via chosen lifts.
        let qd = quot.group.rank();
        let mut gen_values = Vec::new();
        let mut gen_pairs = Vec::new();
        let std_gens = quot.group.standard_generators();
        let lifts: Vec<Elem> = std_gens
            .iter()
            .map(|g| lift_to_ambient(g, &quot, &h_gens, &self.group))
            .collect();
        for i in 0..qd {
            gen_values.push(self.eval(&lifts[i]));
            for j in (i + 1)..qd {
                gen_pairs.push(self.bilinear_exp(&lifts[i], &lifts[j]));
            }
        }
        let induced = QuadForm::new(quot.group.clone(), gen_values, gen_pairs)?;
        // Independence from the chosen representatives: Q descends because
        // B(I^⊥, I) = 0 and Q(I) = 0; verify pointwise as a guard.
        for c in quot.group.elements() {
            let x = lift_to_ambient(&c, &quot, &h_gens, &self.group);
            assert_eq!(induced.eval(&c), self.eval(&x), "induced form must match representatives");
        }
        Ok(Condensation {
            ambient: self.group.clone(),
            perp_elements: perp,
            subgroup: h,
            subgroup_gens: h_gens,
            h_coords,
            quotient: quot,
            induced,
        })
    }

    /// For odd group order: the unique form `q` with `2q = Q` (and then
    /// the bilinear form of `q` is the unique bimultiplicative square
    /// root of `B`).
    pub fn odd_sqrt(&self) -> Result<QuadForm> {
        if self.group.order() % 2 == 0 {
            return Err(ZcrossError::AssumptionViolated(format!(
                "halving a form requires odd group order, got {}",
                self.group.order()
            )));
        }
        let gen_values = self.gen_values.iter().map(|&r| halve_odd(r)).collect();
        let gen_pairs = self.gen_pairs.iter().map(|&r| halve_odd(r)).collect();
        QuadForm::new(self.group.clone(), gen_values, gen_pairs)
    }
}

/// Halve an exponent with odd denominator in ℚ/ℤ:
/// `p/s ↦ p·((s+1)/2)/s`, using that `(s+1)/2` inverts 2 mod odd `s`.
pub fn halve_odd(r: Rational) -> Rational {
    let s = *r.denom();
    assert!(s % 2 == 1, "denominator must be odd to halve exactly, got {}", r);
    let inv2 = (s + 1) / 2;
    mod1(Rational::new(*r.numer() * inv2, s))
}

/// The result of condensing by an isotropic subgroup.
#[derive(Debug)]
pub struct Condensation {
    /// The group that was condensed.
    pub ambient: AbGroup,
    /// Ambient elements of `I^⊥` in enumeration order.
    pub perp_elements: Vec<Elem>,
    /// `I^⊥` in invariant-factor form.
    pub subgroup: AbGroup,
    /// Generators of `I^⊥` inside the ambient group.
    pub subgroup_gens: Vec<Elem>,
    h_coords: HashMap<Elem, Elem>,
    /// The quotient `I^⊥/I` with its section.
    pub quotient: Quotient,
    /// The induced form on `I^⊥/I`.
    pub induced: QuadForm,
}

impl Condensation {
    /// Project an ambient element of `I^⊥` to the condensed group.
    pub fn project(&self, x: &[i64]) -> Elem {
        let c = self
            .h_coords
            .get(&self.ambient.normalize(x))
            .expect("element does not lie in the orthogonal complement");
        self.quotient.project(c)
    }

    /// Ambient representative of a condensed element (via the chosen
    /// section).
    pub fn lift(&self, c: &[i64]) -> Elem {
        let hc = self.quotient.lift(c);
        let mut x = self.ambient.zero();
        for (k, g) in hc.iter().zip(&self.subgroup_gens) {
            x = self.ambient.add(&x, &self.ambient.scale(*k, g));
        }
        x
    }
}

/// The Kronecker symbol `(2/n) = (−1)^((n²−1)/8)` for odd `n ≥ 1`.
pub fn kronecker2(n: i64) -> Result<i8> {
    if n < 1 || n % 2 == 0 {
        return Err(ZcrossError::InvalidInput(format!("kronecker2 requires odd n ≥ 1, got {}", n)));
    }
    Ok(if ((n * n - 1) / 8) % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    /// The standard battery of nondegenerate forms used across tests.
    pub(crate) fn battery() -> Vec<(&'static str, QuadForm)> {
        vec![
            ("Z3 a^2/3", QuadForm::cyclic(3, 1).unwrap()),
            ("Z5 a^2/5", QuadForm::cyclic(5, 1).unwrap()),
            ("Z7 a^2/7", QuadForm::cyclic(7, 1).unwrap()),
            ("Z9 a^2/9", QuadForm::cyclic(9, 1).unwrap()),
            ("Z25 a^2/25", QuadForm::cyclic(25, 1).unwrap()),
            ("Z27 a^2/27", QuadForm::cyclic(27, 1).unwrap()),
            (
                "Z3xZ3 (a^2+b^2)/3",
                QuadForm::new(
                    AbGroup::new(vec![3, 3]).unwrap(),
                    vec![rat(1, 3), rat(1, 3)],
                    vec![rat(0, 1)],
                )
                .unwrap(),
            ),
            (
                "Z2xZ2 ab/2",
                QuadForm::new(
                    AbGroup::new(vec![2, 2]).unwrap(),
                    vec![rat(0, 1), rat(0, 1)],
                    vec![rat(1, 2)],
                )
                .unwrap(),
            ),
            (
                "Z4xZ4 ab/4",
                QuadForm::new(
                    AbGroup::new(vec![4, 4]).unwrap(),
                    vec![rat(0, 1), rat(0, 1)],
                    vec![rat(1, 4)],
                )
                .unwrap(),
            ),
            (
                "Z2 1/4",
                QuadForm::new(AbGroup::new(vec![2]).unwrap(), vec![rat(1, 4)], vec![]).unwrap(),
            ),
        ]
    }

    #[test]
    fn cyclic_form_values() {
        // ℤ₂ with Q(a) = a²/4... the cyclic constructor uses k·a²/n, so
        // (ℤ₂, Q(1)=1/4) is cyclic(2,1) with denominator 2·? — check the
        // actual contract: cyclic(n,k) gives Q(a) = k·a²/n.
        let q = QuadForm::cyclic(2, 1).unwrap();
        assert_eq!(q.eval(&[1]), rat(1, 2));
    }

    #[test]
    fn quarter_form_on_z2() {
        // Q(1) = 1/4 is well-defined on ℤ₂ (2·2·(1/4) ∈ ℤ, 4·(1/4) ∈ ℤ).
        let q = QuadForm::new(AbGroup::new(vec![2]).unwrap(), vec![rat(1, 4)], vec![]).unwrap();
        assert_eq!(q.eval(&[1]), rat(1, 4));
        assert_eq!(q.bilinear_exp(&[1], &[1]), rat(1, 2));
        assert!(q.is_nondegenerate());
        assert_eq!(q.gauss_signature().unwrap(), 1);
    }

    #[test]
    fn bilinear_examples() {
        let q3 = QuadForm::cyclic(3, 1).unwrap();
        assert_eq!(q3.bilinear_exp(&[1], &[1]), rat(2, 3));
        assert_eq!(q3.bilinear_exp(&[1], &[0]), rat(0, 1));
        // B always matches its defining difference.
        for (_, q) in battery() {
            for a in q.group.elements() {
                for b in q.group.elements() {
                    let diff =
                        mod1(q.eval(&q.group.add(&a, &b)) - q.eval(&a) - q.eval(&b));
                    assert_eq!(q.bilinear_exp(&a, &b), diff);
                }
            }
        }
    }

    #[test]
    fn quadratic_refinement_property() {
        // Q(na) = n²Q(a) for all elements and a range of scalars.
        for (_, q) in battery() {
            for a in q.group.elements() {
                for n in 0..12i64 {
                    let lhs = q.eval(&q.group.scale(n, &a));
                    let rhs = mod1(Rational::from_integer(n * n) * q.eval(&a));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn gauss_signature_examples() {
        assert_eq!(QuadForm::cyclic(3, 1).unwrap().gauss_signature().unwrap(), 2);
        assert_eq!(QuadForm::trivial().gauss_signature().unwrap(), 0);
        let q = QuadForm::new(AbGroup::new(vec![2]).unwrap(), vec![rat(1, 4)], vec![]).unwrap();
        assert_eq!(q.gauss_signature().unwrap(), 1);
        // Hyperbolic planes have signature 0.
        for name in ["Z2xZ2 ab/2", "Z4xZ4 ab/4"] {
            let q = battery().into_iter().find(|(n, _)| *n == name).unwrap().1;
            assert_eq!(q.gauss_signature().unwrap(), 0, "{}", name);
        }
    }

    #[test]
    fn degenerate_form_fails_to_snap() {
        // Q ≡ 0 on ℤ₂ is degenerate: Gauss sum is 2, not √2·(root).
        let q = QuadForm::new(AbGroup::new(vec![2]).unwrap(), vec![rat(0, 1)], vec![]).unwrap();
        assert!(!q.is_nondegenerate());
        assert!(q.gauss_signature().is_err());
    }

    #[test]
    fn kronecker2_values() {
        assert_eq!(kronecker2(1).unwrap(), 1);
        assert_eq!(kronecker2(3).unwrap(), -1);
        assert_eq!(kronecker2(5).unwrap(), -1);
        assert_eq!(kronecker2(7).unwrap(), 1);
        assert_eq!(kronecker2(9).unwrap(), 1);
        assert!(kronecker2(2).is_err());
    }

    #[test]
    fn odd_sqrt_examples() {
        let q3 = QuadForm::cyclic(3, 1).unwrap();
        let h = q3.odd_sqrt().unwrap();
        assert_eq!(h.eval(&[1]), rat(2, 3));
        let q5 = QuadForm::cyclic(5, 1).unwrap();
        assert_eq!(q5.odd_sqrt().unwrap().eval(&[1]), rat(3, 5));
        assert!(QuadForm::cyclic(2, 1).unwrap().odd_sqrt().is_err());
        assert_eq!(QuadForm::trivial().odd_sqrt().unwrap().group.order(), 1);
    }

    #[test]
    fn odd_sqrt_doubles_back() {
        for (name, q) in battery() {
            if q.group.order() % 2 == 0 {
                continue;
            }
            let h = q.odd_sqrt().unwrap();
            for a in q.group.elements() {
                assert_eq!(mod1(h.eval(&a) + h.eval(&a)), q.eval(&a), "{}", name);
                // B_h is the square root of B: doubling recovers B.
                for b in q.group.elements() {
                    assert_eq!(
                        mod1(h.bilinear_exp(&a, &b) + h.bilinear_exp(&a, &b)),
                        q.bilinear_exp(&a, &b),
                        "{}",
                        name
                    );
                }
            }
        }
    }

    #[test]
    fn condense_z9_by_3z9() {
        let q = QuadForm::cyclic(9, 1).unwrap();
        let c = q.condense(&[vec![3]]).unwrap();
        assert_eq!(c.perp_elements.len(), 3, "I^⊥ = I for the maximal isotropic of ℤ₉");
        assert_eq!(c.induced.group.order(), 1);
    }

    #[test]
    fn condense_by_trivial_subgroup_is_identity() {
        for (name, q) in battery() {
            let c = q.condense(&[]).unwrap();
            assert_eq!(c.induced.group.order(), q.group.order(), "{}", name);
            for a in q.group.elements() {
                let p = c.project(&a);
                assert_eq!(c.induced.eval(&p), q.eval(&a), "{}", name);
            }
        }
    }

    #[test]
    fn condense_hyperbolic_planes() {
        // ab/2 on ℤ₂×ℤ₂, I = ⟨(1,0)⟩: I^⊥ = I, trivial result.
        let q = QuadForm::new(
            AbGroup::new(vec![2, 2]).unwrap(),
            vec![rat(0, 1), rat(0, 1)],
            vec![rat(1, 2)],
        )
        .unwrap();
        let c = q.condense(&[vec![1, 0]]).unwrap();
        assert_eq!(c.perp_elements, vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(c.induced.group.order(), 1);
        // Variant with Q(0,1)=1/2: the diagonal is isotropic and
        // self-orthogonal.
        let q = QuadForm::new(
            AbGroup::new(vec![2, 2]).unwrap(),
            vec![rat(0, 1), rat(1, 2)],
            vec![rat(1, 2)],
        )
        .unwrap();
        assert!(q.is_nondegenerate());
        assert_eq!(q.eval(&[1, 1]), rat(0, 1));
        let c = q.condense(&[vec![1, 1]]).unwrap();
        assert_eq!(c.perp_elements.len(), 2);
        assert_eq!(c.induced.group.order(), 1);
    }

    #[test]
    fn condense_rejects_non_isotropic() {
        let q = QuadForm::cyclic(9, 1).unwrap();
        let err = q.condense(&[vec![1]]).unwrap_err();
        assert!(matches!(err, ZcrossError::NotIsotropic(_)));
    }

    #[test]
    fn signature_is_condensation_invariant() {
        // For every form in the battery and every isotropic subgroup,
        // the induced form is nondegenerate with the same signature.
        for (name, q) in battery() {
            let s0 = q.gauss_signature().unwrap();
            for iso in q.all_isotropic_subgroups() {
                let gens: Vec<Elem> = iso.iter().cloned().collect();
                let c = q.condense(&gens).unwrap();
                assert!(c.induced.is_nondegenerate(), "{}", name);
                assert_eq!(c.induced.gauss_signature().unwrap(), s0, "{} / {:?}", name, gens);
                // Order bookkeeping: |I^⊥|·|I| = |Γ|.
                assert_eq!(
                    c.perp_elements.len() as i64 * iso.len() as i64,
                    q.group.order(),
                    "{}",
                    name
                );
            }
        }
    }

    #[test]
    fn inverse_form_signature_identity() {
        // For odd |Γ| and h the half-form: e(sig(−h)/8) = (2/|Γ|)·e(−sig(Q)/8).
        for (name, q) in battery() {
            if q.group.order() % 2 == 0 {
                continue;
            }
            let h = q.odd_sqrt().unwrap();
            let s_inv = h.inverse().gauss_signature().unwrap();
            let s_q = q.gauss_signature().unwrap();
            let lhs = Phase::of(s_inv as i64, 8);
            let rhs = Phase::from_sign(kronecker2(q.group.order()).unwrap())
                * Phase::of(-(s_q as i64), 8);
            assert_eq!(lhs, rhs, "{}", name);
        }
    }

    #[test]
    fn nondegeneracy_matches_character_injectivity() {
        for (name, q) in battery() {
            assert!(q.is_nondegenerate(), "{}", name);
            // Explicit injectivity: distinct elements induce distinct
            // characters B(a,·).
            let elems = q.group.elements();
            for a in &elems {
                for b in &elems {
                    if a != b {
                        let differ = elems
                            .iter()
                            .any(|x| q.bilinear_exp(a, x) != q.bilinear_exp(b, x));
                        assert!(differ, "{}", name);
                    }
                }
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]
            #[test]
            fn cyclic_form_bilinearity(n in 2i64..12, k in 1i64..12, a in 0i64..12, b in 0i64..12, c in 0i64..12) {
                let q = QuadForm::cyclic(n, k).unwrap();
                let (a, b, c) = (vec![a % n], vec![b % n], vec![c % n]);
                // Symmetry and the defining polarization identity.
                prop_assert_eq!(q.bilinear_exp(&a, &b), q.bilinear_exp(&b, &a));
                let sum = vec![(a[0] + b[0]) % n];
                let lhs = q.eval(&sum);
                let rhs = q.eval(&a) + q.eval(&b) + q.bilinear_exp(&a, &b);
                prop_assert_eq!(lhs, rhs - rhs.floor());
                // Bilinearity in the first slot.
                let ac = vec![(a[0] + c[0]) % n];
                let l = q.bilinear_exp(&ac, &b);
                let r = q.bilinear_exp(&a, &b) + q.bilinear_exp(&c, &b);
                prop_assert_eq!(l, r - r.floor());
                // Q(-a) = Q(a).
                let neg = vec![(n - a[0]) % n];
                prop_assert_eq!(q.eval(&neg), q.eval(&a));
            }

            #[test]
            fn odd_signature_matches_direct_sum(n in 1i64..6, k in 1i64..6, m in 1i64..6, l in 1i64..6) {
                // Signature of an orthogonal direct sum is the sum of
                // signatures, via a rank-2 diagonal form.
                let (n, m) = (2 * n + 1, 2 * m + 1);
                let q1 = QuadForm::cyclic(n, k % n).unwrap();
                let q2 = QuadForm::cyclic(m, l % m).unwrap();
                prop_assume!(q1.is_nondegenerate() && q2.is_nondegenerate());
                let joint = QuadForm::new(
                    AbGroup::new(vec![n, m]).unwrap(),
                    vec![Rational::new(k % n, n), Rational::new(l % m, m)],
                    vec![Rational::zero()],
                ).unwrap();
                let s1 = q1.gauss_signature().unwrap();
                let s2 = q2.gauss_signature().unwrap();
                let s = joint.gauss_signature().unwrap();
                prop_assert_eq!(s as u64 % 8, (s1 as u64 + s2 as u64) % 8);
            }
        }
    }
}
