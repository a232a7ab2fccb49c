//! The skeletal ℤ₂-crossed category container and its exhaustive
//! verification engine.
//!
//! A category is stored as a multiplicity-free fusion table over simple
//! objects (the untwisted sector is a finite abelian group of invertible
//! simples; the twisted sector is a finite label set) together with all
//! coherence scalars: associators `F`, crossed braidings `R`, the tensor
//! structure `τ` and composition constraint `T₂` of the group action,
//! twists `θ`, and the sign/root data `ε, α, β`.
//!
//! Because fusion is multiplicity-free, every associator component is a
//! matrix indexed by intermediate simple objects and every braiding
//! component is a scalar per fusion channel, and all axioms become exact
//! scalar identities.  The skeletal forms of the axioms (with associators
//! reinstated at the canonical insertion points) are:
//!
//! - **Pentagon** — for simples `x,y,z,w`, target `s`, and all
//!   `(u ∈ x⊗y, t ∈ u⊗z)`, `(v ∈ z⊗w, r ∈ y⊗v)` with `s ∈ t⊗w, s ∈ x⊗r`:
//!   `F^{u,z,w}_s[t,v]·F^{x,y,v}_s[u,r] = Σ_p F^{x,y,z}_t[u,p]·F^{x,p,w}_s[t,r]·F^{y,z,w}_r[p,v]`.
//! - **Action coherence** — `g_*` is a strict permutation on objects;
//!   `τ^g` intertwines the associators
//!   (`τ^g(u,z;s)·τ^g(x,y;u)·F^{g_*x,g_*y,g_*z}_{g_*s}[g_*u,g_*p]
//!    = F^{x,y,z}_s[u,p]·τ^g(y,z;p)·τ^g(x,p;s)`) and `T₂` measures the
//!   failure of `g_*∘g_* = id` monoidally
//!   (`T₂(x)·T₂(y) = τ^g(g_*x,g_*y;g_*u)·τ^g(x,y;u)·T₂(u)`).
//! - **Braiding/action compatibility** —
//!   `τ^g(x,y;t)·R(g_*x,g_*y;g_*t) = R(x,y;t)·τ^g(h_*y,x;t)` for `x` of
//!   grade `h`.
//! - **Crossed hexagons** — with `x` of grade `g`, `y` of grade `h`:
//!   first: `Σ_p F^{x,y,z}_s[u,p]·R(x,p;s)·τ^g(y,z;p)·F^{g_*y,g_*z,x}_s[g_*p,v]
//!           = R(x,y;u)·F^{g_*y,x,z}_s[u,v]·R(x,z;v)`;
//!   second: `δ_{u,u'}·R(u,z;s)·T₂^{g,h}(z)
//!           = Σ_{p,q} F^{x,y,z}_s[u,p]·R(y,z;p)·(F^{x,h_*z,y}_s)⁻¹[p,q]
//!                     ·R(x,h_*z;q)·F^{(gh)_*z,x,y}_s[q,u']`.
//!
//! The braiding maps a fusion channel to the channel of the same label
//! (`x⊗y ⊇ ℂ_t ↦ ℂ_t ⊆ (h_*y)⊗x`); this channel-label preservation is a
//! structural precondition checked before the scalar identities.

use crate::abgroup::AbGroup;
use crate::error::{Result, ZcrossError};
use crate::pointedcat::{twisting_maps, GroupCocycle3};
use crate::scalar::{field_matrix_inverse, CycField, Phase, Rational, ScalarSum, ScaledScalar};
use num::{Integer, One};
use std::collections::HashMap;

/// Index of a simple object.  Untwisted simples come first, in group
/// enumeration order; twisted simples follow.
pub type SimpleId = usize;

/// One associator component `F^{x,y,z}_s` as a matrix over intermediate
/// simples: rows are `u ∈ x⊗y` with `s ∈ u⊗z`; columns are `r ∈ y⊗z`
/// with `s ∈ x⊗r`.
#[derive(Clone, Debug, PartialEq)]
pub struct FMat {
    pub rows: Vec<SimpleId>,
    pub cols: Vec<SimpleId>,
    /// Row-major entries.
    pub entries: Vec<ScaledScalar>,
}

impl FMat {
    pub fn entry(&self, u: SimpleId, r: SimpleId) -> Option<ScaledScalar> {
        let i = self.rows.iter().position(|&x| x == u)?;
        let j = self.cols.iter().position(|&x| x == r)?;
        Some(self.entries[i * self.cols.len() + j])
    }
}

/// A braided ℤ₂-crossed category in skeletal form.
#[derive(Clone, Debug)]
pub struct CrossedCat {
    /// The untwisted sector: invertible simples labelled by this group.
    pub group: AbGroup,
    /// Labels of the twisted simples.
    pub twisted: Vec<String>,
    /// Fusion channels per ordered pair, sorted, multiplicity-free.
    pub fusion: Vec<Vec<Vec<SimpleId>>>,
    /// Associator components per admissible `(x,y,z,s)`.
    pub f: HashMap<(SimpleId, SimpleId, SimpleId, SimpleId), FMat>,
    /// Braiding scalars `R(x,y;t)` per channel `t ∈ x⊗y`.
    pub r: HashMap<(SimpleId, SimpleId, SimpleId), Phase>,
    /// Tensor structure `τ^g(x,y;t)` of the nontrivial action, per
    /// channel `t ∈ x⊗y`.
    pub tau: HashMap<(SimpleId, SimpleId, SimpleId), Phase>,
    /// Composition constraint `T₂^{g,g}(x)` of the nontrivial action.
    pub t2: Vec<Phase>,
    /// The nontrivial group action on simples.
    pub action: Vec<SimpleId>,
    /// Ribbon twists.
    pub theta: Vec<Phase>,
    /// The sign `ε` of the twisted-sector associator normalization.
    pub epsilon_sign: i8,
    /// The braiding root `α` and ribbon root `β` of the twisted sector.
    pub alpha: Phase,
    pub beta: Phase,
    /// Quantum dimensions.
    pub dims: Vec<ScaledScalar>,
}

impl CrossedCat {
    pub fn n_untwisted(&self) -> usize {
        self.group.order() as usize
    }

    pub fn n_simples(&self) -> usize {
        self.n_untwisted() + self.twisted.len()
    }

    /// The ℤ₂-grade of a simple (0 = untwisted, 1 = twisted).
    pub fn grade(&self, x: SimpleId) -> u8 {
        (x >= self.n_untwisted()) as u8
    }

    pub fn fus(&self, x: SimpleId, y: SimpleId) -> &[SimpleId] {
        &self.fusion[x][y]
    }

    pub fn has_channel(&self, x: SimpleId, y: SimpleId, t: SimpleId) -> bool {
        self.fusion[x][y].contains(&t)
    }

    /// The associator entry `F^{x,y,z}_s[u,r]`, or `None` when the index
    /// pair is not admissible (coefficient zero).
    pub fn f_entry(
        &self,
        x: SimpleId,
        y: SimpleId,
        z: SimpleId,
        s: SimpleId,
        u: SimpleId,
        r: SimpleId,
    ) -> Option<ScaledScalar> {
        self.f.get(&(x, y, z, s))?.entry(u, r)
    }

    pub fn r_phase(&self, x: SimpleId, y: SimpleId, t: SimpleId) -> Option<Phase> {
        self.r.get(&(x, y, t)).copied()
    }

    /// `τ^g(x,y;t)` for the nontrivial `g`; the identity functor's
    /// tensor structure (trivial `g`) is the constant 1 and is not
    /// stored.
    pub fn tau_phase(&self, x: SimpleId, y: SimpleId, t: SimpleId) -> Option<Phase> {
        self.tau.get(&(x, y, t)).copied()
    }

    pub fn act(&self, x: SimpleId) -> SimpleId {
        self.action[x]
    }

    /// Apply `g_*` for `g ∈ ℤ₂` given by `grade` (0 = identity).
    pub fn act_pow(&self, g: u8, x: SimpleId) -> SimpleId {
        if g % 2 == 0 {
            x
        } else {
            self.action[x]
        }
    }

    /// `τ^{g}(x,y;t)` where `g` is a ℤ₂ element (identity functor gives 1).
    fn tau_pow(&self, g: u8, x: SimpleId, y: SimpleId, t: SimpleId) -> Option<Phase> {
        if g % 2 == 0 {
            Some(Phase::one())
        } else {
            self.tau_phase(x, y, t)
        }
    }

    /// `T₂^{g,h}(x)`: nontrivial only when both grades are nontrivial.
    fn t2_pow(&self, g: u8, h: u8, x: SimpleId) -> Phase {
        if g % 2 == 1 && h % 2 == 1 {
            self.t2[x]
        } else {
            Phase::one()
        }
    }

    // -----------------------------------------------------------------
    // Structural verification
    // -----------------------------------------------------------------

    /// Check the fusion ring: grading, multiplicity-freeness, strict
    /// unit, Grothendieck associativity, action compatibility, and the
    /// structural (channel-label) requirements of braiding and action
    /// tables.
    pub fn verify_fusion_ring(&self) -> Report {
        let mut rep = Report::default();
        let n = self.n_simples();
        let nu = self.n_untwisted();
        if self.fusion.len() != n || self.fusion.iter().any(|row| row.len() != n) {
            rep.violations.push("fusion table has wrong shape".into());
            return rep;
        }
        for x in 0..n {
            for y in 0..n {
                rep.checked += 1;
                let ch = self.fus(x, y);
                let mut sorted = ch.to_vec();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != ch.len() || sorted != ch {
                    rep.violations
                        .push(format!("fusion {}⊗{} not sorted multiplicity-free", x, y));
                }
                for &t in ch {
                    if self.grade(t) != (self.grade(x) + self.grade(y)) % 2 {
                        rep.violations.push(format!("grading violated in {}⊗{}∋{}", x, y, t));
                    }
                }
                // Action is a grade-preserving involution compatible with ⊗.
                let mut image: Vec<SimpleId> = ch.iter().map(|&t| self.act(t)).collect();
                image.sort_unstable();
                if image != self.fus(self.act(x), self.act(y)) {
                    rep.violations
                        .push(format!("action does not permute the channels of {}⊗{}", x, y));
                }
            }
            if self.act(self.act(x)) != x {
                rep.violations.push(format!("action is not an involution at {}", x));
            }
            if self.grade(self.act(x)) != self.grade(x) {
                rep.violations.push(format!("action does not preserve the grade of {}", x));
            }
            if self.t2[self.act(x)] != self.t2[x] {
                rep.violations.push(format!("T₂ is not action-invariant at {}", x));
            }
            // Strict unit.
            if self.fus(0, x) != [x] || self.fus(x, 0) != [x] {
                rep.violations.push(format!("unit is not strict at {}", x));
            }
        }
        // Untwisted sector realizes the group.
        for a in 0..nu {
            for b in 0..nu {
                let expect = self
                    .group
                    .index_of(&self.group.add(&self.group.elem_at(a), &self.group.elem_at(b)));
                if self.fus(a, b) != [expect] {
                    rep.violations.push(format!("untwisted fusion {}⊗{} ≠ group law", a, b));
                }
            }
        }
        // Grothendieck associativity as multiset equality.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    rep.checked += 1;
                    let mut left: Vec<SimpleId> = Vec::new();
                    for &u in self.fus(x, y) {
                        left.extend_from_slice(self.fus(u, z));
                    }
                    let mut right: Vec<SimpleId> = Vec::new();
                    for &p in self.fus(y, z) {
                        right.extend_from_slice(self.fus(x, p));
                    }
                    left.sort_unstable();
                    right.sort_unstable();
                    if left != right {
                        rep.violations
                            .push(format!("fusion not associative at ({},{},{})", x, y, z));
                    }
                }
            }
        }
        // Braiding and τ tables: defined exactly on the channels, with
        // channel labels preserved by the braiding target.
        for (&(x, y, t), _) in &self.r {
            let h = self.grade(x);
            if !self.has_channel(x, y, t) {
                rep.violations.push(format!("R({},{};{}) off-channel", x, y, t));
            } else if !self.has_channel(self.act_pow(h, y), x, t) {
                rep.violations
                    .push(format!("braiding target channel missing for R({},{};{})", x, y, t));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for &t in self.fus(x, y) {
                    if self.r_phase(x, y, t).is_none() {
                        rep.violations.push(format!("R({},{};{}) missing", x, y, t));
                    }
                    if self.tau_phase(x, y, t).is_none() {
                        rep.violations.push(format!("τ({},{};{}) missing", x, y, t));
                    }
                }
            }
        }
        // Associator components present for every admissible quadruple.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for &u in self.fus(x, y) {
                        for &s in self.fus(u, z) {
                            match self.f.get(&(x, y, z, s)) {
                                None => rep.violations.push(format!(
                                    "F({},{},{};{}) missing",
                                    x, y, z, s
                                )),
                                Some(m) => {
                                    let rows_ok = m.rows.iter().all(|&uu| {
                                        self.has_channel(x, y, uu) && self.has_channel(uu, z, s)
                                    });
                                    let cols_ok = m.cols.iter().all(|&rr| {
                                        self.has_channel(y, z, rr) && self.has_channel(x, rr, s)
                                    });
                                    if !rows_ok || !cols_ok || !m.rows.contains(&u) {
                                        rep.violations.push(format!(
                                            "F({},{},{};{}) has bad index sets",
                                            x, y, z, s
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    // -----------------------------------------------------------------
    // Pentagon
    // -----------------------------------------------------------------

    /// Exhaustively verify the pentagon identity.  `budget` caps the
    /// number of scalar identities checked; the report records whether
    /// the sweep completed.
    pub fn verify_pentagon(&self, budget: Option<u64>) -> Report {
        let mut rep = Report::default();
        let n = self.n_simples();
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        for &u in self.fus(x, y) {
                            for &t in self.fus(u, z) {
                                for &s in self.fus(t, w) {
                                    for &v in self.fus(z, w) {
                                        for &r in self.fus(y, v) {
                                            if !self.has_channel(x, r, s) {
                                                continue;
                                            }
                                            if let Some(b) = budget {
                                                if rep.checked >= b {
                                                    rep.complete = false;
                                                    break 'outer;
                                                }
                                            }
                                            rep.checked += 1;
                                            if !self.pentagon_instance(x, y, z, w, s, u, t, v, r)
                                            {
                                                rep.violations.push(format!(
                                                    "pentagon ({},{},{},{}→{}) [u={},t={},v={},r={}]",
                                                    x, y, z, w, s, u, t, v, r
                                                ));
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        rep
    }

    fn pentagon_instance(
        &self,
        x: SimpleId,
        y: SimpleId,
        z: SimpleId,
        w: SimpleId,
        s: SimpleId,
        u: SimpleId,
        t: SimpleId,
        v: SimpleId,
        r: SimpleId,
    ) -> bool {
        let mut lhs = ScalarSum::zero();
        if let (Some(a), Some(b)) =
            (self.f_entry(u, z, w, s, t, v), self.f_entry(x, y, v, s, u, r))
        {
            lhs.push(a * b);
        }
        let mut rhs = ScalarSum::zero();
        for &p in self.fus(y, z) {
            if let (Some(a), Some(b), Some(c)) = (
                self.f_entry(x, y, z, t, u, p),
                self.f_entry(x, p, w, s, t, r),
                self.f_entry(y, z, w, r, p, v),
            ) {
                rhs.push(a * b * c);
            }
        }
        lhs.eq_value(&rhs)
    }

    // -----------------------------------------------------------------
    // Associator inversion
    // -----------------------------------------------------------------

    /// The inverse of `F^{x,y,z}_s` as a matrix from rows to columns
    /// (`(F⁻¹)[r,u]`).  Primary path: the conjugate transpose, verified
    /// exactly; fallback: Gaussian elimination over a cyclotomic field.
    pub fn f_inverse(&self, key: (SimpleId, SimpleId, SimpleId, SimpleId)) -> FMat {
        let m = self.f.get(&key).expect("associator component must exist");
        let (nr, nc) = (m.rows.len(), m.cols.len());
        assert_eq!(nr, nc, "associator components are square on admissible bases");
        // Candidate: conjugate transpose.
        let mut cand = FMat {
            rows: m.cols.clone(),
            cols: m.rows.clone(),
            entries: vec![ScaledScalar::one(); nr * nc],
        };
        for i in 0..nr {
            for j in 0..nc {
                cand.entries[j * nr + i] = m.entries[i * nc + j].conj();
            }
        }
        let is_inverse = |inv: &FMat| -> bool {
            for i in 0..nr {
                for j in 0..nr {
                    let mut sum = ScalarSum::zero();
                    for k in 0..nc {
                        sum.push(m.entries[i * nc + k] * inv.entries[k * nr + j]);
                    }
                    let ok = if i == j {
                        sum.eq_rational(Rational::one())
                    } else {
                        sum.is_zero()
                    };
                    if !ok {
                        return false;
                    }
                }
            }
            true
        };
        if is_inverse(&cand) {
            return cand;
        }
        // Exact fallback over ℚ(ζ_N).
        let mut conductor: u64 = 8;
        for e in &m.entries {
            conductor = conductor.lcm(&(*e.phase.exponent().denom() as u64));
            let (_, m0) = crate::scalar::sqrt_split(e.m);
            // √m₀ lives in the conductor lcm(8, odd primes of m₀) field.
            let mut rest = m0;
            let mut p = 2u64;
            while p <= rest {
                if rest % p == 0 {
                    rest /= p;
                    conductor = conductor.lcm(&if p == 2 { 8 } else { p });
                }
                p += 1;
            }
        }
        let field = CycField::new(conductor);
        let elems: Vec<Vec<_>> = (0..nr)
            .map(|i| {
                (0..nc)
                    .map(|j| {
                        field.embed_scalar_sum(&ScalarSum::from_scalar(m.entries[i * nc + j]))
                    })
                    .collect()
            })
            .collect();
        let inv = field_matrix_inverse(&field, &elems)
            .expect("admissible associator components are invertible");
        // Convert back: every entry of the inverse of a matrix of
        // `√m·e(r)` scalars in our categories is again of that shape; we
        // recover it by matching against the conjugate-transpose entry
        // magnitudes.  If that fails the data is outside the supported
        // shape.
        let out = cand;
        for j in 0..nr {
            for i in 0..nc {
                let target = &inv[i][j];
                let guess = out.entries[i * nr + j];
                let ok = field.embed_scalar_sum(&ScalarSum::from_scalar(guess)) == *target;
                assert!(ok, "associator inverse entry is not of the form √m·e(r)");
            }
        }
        out
    }

    // -----------------------------------------------------------------
    // Action and crossed braiding
    // -----------------------------------------------------------------

    /// Verify the action coherence, the braiding/action compatibility,
    /// and both crossed hexagons.
    pub fn verify_crossed_braiding(&self, budget: Option<u64>) -> Report {
        let mut rep = Report::default();
        self.check_action_coherence(&mut rep, budget);
        if rep.complete {
            self.check_braiding_action(&mut rep, budget);
        }
        if rep.complete {
            self.check_hexagon_one(&mut rep, budget);
        }
        if rep.complete {
            self.check_hexagon_two(&mut rep, budget);
        }
        rep
    }

    fn budget_hit(rep: &mut Report, budget: Option<u64>) -> bool {
        if let Some(b) = budget {
            if rep.checked >= b {
                rep.complete = false;
                return true;
            }
        }
        rep.checked += 1;
        false
    }

    /// `τ^g` is monoidal for the associators, and `T₂` satisfies the
    /// composition constraint (the two coherence diagrams of the tensor
    /// structure of the action).
    fn check_action_coherence(&self, rep: &mut Report, budget: Option<u64>) {
        let n = self.n_simples();
        for x in 0..n {
            for y in 0..n {
                // Diagram 2 (composition of the action with itself).
                for &u in self.fus(x, y) {
                    if Self::budget_hit(rep, budget) {
                        return;
                    }
                    let (gx, gy, gu) = (self.act(x), self.act(y), self.act(u));
                    let lhs = self.t2[x] * self.t2[y];
                    let rhs = self.tau_phase(gx, gy, gu).unwrap()
                        * self.tau_phase(x, y, u).unwrap()
                        * self.t2[u];
                    if lhs != rhs {
                        rep.violations
                            .push(format!("action composition at ({},{};{})", x, y, u));
                    }
                }
                // Diagram 1 (monoidality of τ against F).
                for z in 0..n {
                    for &u in self.fus(x, y) {
                        for &s in self.fus(u, z) {
                            for &p in self.fus(y, z) {
                                if !self.has_channel(x, p, s) {
                                    continue;
                                }
                                if Self::budget_hit(rep, budget) {
                                    return;
                                }
                                let fe = self.f_entry(x, y, z, s, u, p);
                                let gfe = self.f_entry(
                                    self.act(x),
                                    self.act(y),
                                    self.act(z),
                                    self.act(s),
                                    self.act(u),
                                    self.act(p),
                                );
                                let (Some(fe), Some(gfe)) = (fe, gfe) else {
                                    rep.violations.push(format!(
                                        "action does not preserve admissibility at ({},{},{};{})",
                                        x, y, z, s
                                    ));
                                    continue;
                                };
                                let lhs = ScaledScalar::from_phase(
                                    self.tau_phase(u, z, s).unwrap()
                                        * self.tau_phase(x, y, u).unwrap(),
                                ) * gfe;
                                let rhs = fe
                                    * ScaledScalar::from_phase(
                                        self.tau_phase(y, z, p).unwrap()
                                            * self.tau_phase(x, p, s).unwrap(),
                                    );
                                if lhs != rhs {
                                    rep.violations.push(format!(
                                        "τ monoidality at ({},{},{};{}) [u={},p={}]",
                                        x, y, z, s, u, p
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// `τ^g(x,y;t)·R(g_*x,g_*y;g_*t) = R(x,y;t)·τ^g(h_*y,x;t)`, `h` the
    /// grade of `x`.
    fn check_braiding_action(&self, rep: &mut Report, budget: Option<u64>) {
        let n = self.n_simples();
        for x in 0..n {
            for y in 0..n {
                let h = self.grade(x);
                for &t in self.fus(x, y) {
                    if Self::budget_hit(rep, budget) {
                        return;
                    }
                    let lhs = self.tau_phase(x, y, t).unwrap()
                        * self.r_phase(self.act(x), self.act(y), self.act(t)).unwrap();
                    let rhs = self.r_phase(x, y, t).unwrap()
                        * self.tau_phase(self.act_pow(h, y), x, t).unwrap();
                    if lhs != rhs {
                        rep.violations
                            .push(format!("braiding/action compatibility at ({},{};{})", x, y, t));
                    }
                }
            }
        }
    }

    /// First crossed hexagon (braiding past a product).
    fn check_hexagon_one(&self, rep: &mut Report, budget: Option<u64>) {
        let n = self.n_simples();
        for x in 0..n {
            let g = self.grade(x);
            for y in 0..n {
                for z in 0..n {
                    let (gy, gz) = (self.act_pow(g, y), self.act_pow(g, z));
                    for &u in self.fus(x, y) {
                        for &s in self.fus(u, z) {
                            for &v in self.fus(gz, x) {
                                if !self.has_channel(gy, v, s) {
                                    continue;
                                }
                                if Self::budget_hit(rep, budget) {
                                    return;
                                }
                                let mut lhs = ScalarSum::zero();
                                for &p in self.fus(y, z) {
                                    let (Some(f1), Some(rr), Some(tt), Some(f2)) = (
                                        self.f_entry(x, y, z, s, u, p),
                                        self.r_phase(x, p, s),
                                        self.tau_pow(g, y, z, p),
                                        self.f_entry(gy, gz, x, s, self.act_pow(g, p), v),
                                    ) else {
                                        continue;
                                    };
                                    lhs.push(f1 * ScaledScalar::from_phase(rr * tt) * f2);
                                }
                                let mut rhs = ScalarSum::zero();
                                if let (Some(r1), Some(fm), Some(r2)) = (
                                    self.r_phase(x, y, u),
                                    self.f_entry(gy, x, z, s, u, v),
                                    self.r_phase(x, z, v),
                                ) {
                                    rhs.push(ScaledScalar::from_phase(r1) * fm
                                        * ScaledScalar::from_phase(r2));
                                }
                                if !lhs.eq_value(&rhs) {
                                    rep.violations.push(format!(
                                        "crossed hexagon 1 at ({},{},{}→{}) [u={},v={}]",
                                        x, y, z, s, u, v
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// Second crossed hexagon (a product braiding past an object),
    /// which is where `T₂` enters.
    fn check_hexagon_two(&self, rep: &mut Report, budget: Option<u64>) {
        let n = self.n_simples();
        let mut inverse_cache: HashMap<(SimpleId, SimpleId, SimpleId, SimpleId), FMat> =
            HashMap::new();
        for x in 0..n {
            let g = self.grade(x);
            for y in 0..n {
                let h = self.grade(y);
                for z in 0..n {
                    let hz = self.act_pow(h, z);
                    let ghz = self.act_pow((g + h) % 2, z);
                    for &u in self.fus(x, y) {
                        for &s in self.fus(u, z) {
                            for &u2 in self.fus(x, y) {
                                if !self.has_channel(ghz, u2, s) {
                                    continue;
                                }
                                if Self::budget_hit(rep, budget) {
                                    return;
                                }
                                let mut lhs = ScalarSum::zero();
                                if u == u2 {
                                    if let Some(ru) = self.r_phase(u, z, s) {
                                        lhs.push(ScaledScalar::from_phase(
                                            ru * self.t2_pow(g, h, z),
                                        ));
                                    }
                                }
                                let mut rhs = ScalarSum::zero();
                                for &p in self.fus(y, z) {
                                    let (Some(f1), Some(r1)) = (
                                        self.f_entry(x, y, z, s, u, p),
                                        self.r_phase(y, z, p),
                                    ) else {
                                        continue;
                                    };
                                    let key = (x, hz, y, s);
                                    if self.f.get(&key).is_none() {
                                        continue;
                                    }
                                    let finv = inverse_cache
                                        .entry(key)
                                        .or_insert_with(|| self.f_inverse(key));
                                    for qi in 0..finv.cols.len() {
                                        let q = finv.cols[qi];
                                        let Some(fi) = finv.entry(p, q) else { continue };
                                        let (Some(r2), Some(f2)) = (
                                            self.r_phase(x, hz, q),
                                            self.f_entry(ghz, x, y, s, q, u2),
                                        ) else {
                                            continue;
                                        };
                                        rhs.push(
                                            f1 * ScaledScalar::from_phase(r1)
                                                * fi
                                                * ScaledScalar::from_phase(r2)
                                                * f2,
                                        );
                                    }
                                }
                                if !lhs.eq_value(&rhs) {
                                    rep.violations.push(format!(
                                        "crossed hexagon 2 at ({},{},{}→{}) [u={},u'={}]",
                                        x, y, z, s, u, u2
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // -----------------------------------------------------------------
    // Dimensions, twisting, fingerprints
    // -----------------------------------------------------------------

    /// Quantum dimensions and pseudo-unitarity (`αβ = ε`).
    pub fn quantum_dims(&self) -> (Vec<ScaledScalar>, bool) {
        let pseudo = (self.alpha * self.beta).as_sign() == Some(self.epsilon_sign);
        (self.dims.clone(), pseudo)
    }

    /// Twist the category by a group 3-cocycle on ℤ₂: the associator is
    /// multiplied by `ω` of the grades, and the action tables absorb the
    /// induced `μ` and `γ` maps.
    pub fn twist_by_h3(&self, omega3: &GroupCocycle3) -> Result<CrossedCat> {
        if omega3.group.factors != vec![2] {
            return Err(ZcrossError::InvalidInput("twisting requires a 3-cocycle on ℤ₂".into()));
        }
        if !omega3.is_cocycle() {
            return Err(ZcrossError::NotCocycle("the grading 3-cochain is not closed".into()));
        }
        let maps = twisting_maps(omega3)?;
        let mut out = self.clone();
        let gr = |x: SimpleId| vec![self.grade(x) as i64];
        let mut f = HashMap::new();
        for (&(x, y, z, s), m) in &self.f {
            let w = omega3.get(&gr(x), &gr(y), &gr(z));
            let mut m2 = m.clone();
            for e in &mut m2.entries {
                *e = *e * ScaledScalar::from_phase(w);
            }
            f.insert((x, y, z, s), m2);
        }
        out.f = f;
        let gvec = vec![1i64];
        let mut tau = HashMap::new();
        for (&(x, y, t), &v) in &self.tau {
            tau.insert((x, y, t), v * maps.mu(&gvec, &gr(x), &gr(y)));
        }
        out.tau = tau;
        for x in 0..self.n_simples() {
            out.t2[x] = self.t2[x] * maps.gamma(&gvec, &gvec, &gr(x));
        }
        Ok(out)
    }

    /// The sign fingerprint of the twisted-sector associator: the phase
    /// of the all-twisted component at the first channel pair, divided
    /// by its magnitude-and-braiding-independent part.  For the built
    /// categories this recovers `ε`.
    pub fn epsilon_fingerprint(&self) -> Option<i8> {
        let x = self.n_untwisted();
        if self.twisted.is_empty() {
            return None;
        }
        let ch = self.fus(x, x);
        let t0 = *ch.first()?;
        let m = self.f.get(&(x, x, x, x))?;
        let e = m.entry(t0, t0)?;
        // e = ε·|ch|^{-1/2}·σ(t₀,t₀)⁻¹ with σ read off the pointed data:
        // divide by the reference entry shape using the stored tables.
        let sigma_inv = self.sigma_ref(t0, t0).inv();
        (e.phase / sigma_inv).as_sign()
    }

    /// The untwisted braiding phase `σ(a,b)` read from the R table.
    fn sigma_ref(&self, a: SimpleId, b: SimpleId) -> Phase {
        let t = self.fus(a, b)[0];
        self.r_phase(a, b, t).unwrap()
    }
}

/// Embed a pointed braided category, given by an abelian cocycle
/// `(σ, ω)`, as a crossed category with empty twisted sector: one
/// invertible simple per group element, `F` components the associator
/// `ω`, braiding `R = σ`, trivial grading action.
pub fn embed_pointed(cocycle: &crate::pointedcat::AbelianCocycle) -> CrossedCat {
    let group = cocycle.group.clone();
    let n = group.order() as usize;
    let elems = group.elements();
    let idx = |a: &[i64]| group.index_of(a);
    let mut fusion = vec![vec![Vec::new(); n]; n];
    for a in 0..n {
        for b in 0..n {
            fusion[a][b] = vec![idx(&group.add(&elems[a], &elems[b]))];
        }
    }
    let mut f = HashMap::new();
    let mut r = HashMap::new();
    let mut tau = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            let ab = fusion[a][b][0];
            r.insert((a, b, ab), cocycle.sigma(&elems[a], &elems[b]));
            tau.insert((a, b, ab), Phase::one());
            for c in 0..n {
                let s = fusion[ab][c][0];
                f.insert(
                    (a, b, c, s),
                    FMat {
                        rows: vec![ab],
                        cols: vec![fusion[b][c][0]],
                        entries: vec![ScaledScalar::from_phase(cocycle.omega(
                            &elems[a],
                            &elems[b],
                            &elems[c],
                        ))],
                    },
                );
            }
        }
    }
    let theta = (0..n).map(|a| cocycle.sigma(&elems[a], &elems[a])).collect();
    CrossedCat {
        group,
        twisted: Vec::new(),
        fusion,
        f,
        r,
        tau,
        t2: vec![Phase::one(); n],
        action: (0..n).collect(),
        theta,
        epsilon_sign: 1,
        alpha: Phase::one(),
        beta: Phase::one(),
        dims: vec![ScaledScalar::one(); n],
    }
}

/// A verification report: violations found, identities checked, and
/// whether the sweep ran to completion (no budget cap hit).
#[derive(Debug)]
pub struct Report {
    pub violations: Vec<String>,
    pub checked: u64,
    pub complete: bool,
}

impl Default for Report {
    fn default() -> Self {
        Report { violations: Vec::new(), checked: 0, complete: true }
    }
}

impl Report {
    pub fn pass(&self) -> bool {
        self.violations.is_empty() && self.complete
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
        self.checked += other.checked;
        self.complete &= other.complete;
    }
}
