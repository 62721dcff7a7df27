//! Partial groupoid actions on a split ring.
//!
//! A partial action assigns to every morphism `g` an ideal `A_g ⊆ A_{tgt g}`
//! and a ring isomorphism `α_g : A_{g⁻¹} → A_g`, subject to
//!
//!   (P1) `A_g` is an ideal of `A_{tgt g}` and `α_g` is an isomorphism,
//!   (P2) `α_x = id` on `A_x` for every object `x`,
//!   (P3) `α_h⁻¹(A_{g⁻¹} ∩ A_h) ⊆ A_{(gh)⁻¹}` for composable `(g, h)`,
//!   (P4) `α_g(α_h(a)) = α_{gh}(a)` on that set.
//!
//! The action is *global* when `A_g = A_{tgt g}` for every `g`, equivalently
//! when `α_g α_h = α_{gh}` holds exactly. Actions are immutable once built;
//! verification sweeps are data-parallel over morphisms and composable pairs.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::groupoid::{Groupoid, Mor, Obj, Transversal};
use crate::par;
use crate::ring::{Ideal, PartialRingIso, RingElement, SplitRing};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ActionError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("groupoid is not connected")]
    NotConnected,
    #[error("actions live over different groupoids or rings")]
    DifferentContext,
}

/// A single axiom violation, with witnesses by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// (P1) shape: the iso attached to `mor` does not run A_{mor⁻¹} → A_mor.
    Shape { mor: String, detail: String },
    /// (P1): A_g is not contained in A_{tgt g}.
    IdealNotInObjectIdeal { mor: String },
    /// (P2): the identity morphism of `object` does not act as the identity.
    IdentityNotIdentity { object: String },
    /// (P3): `atom` lies in α_h⁻¹(A_{g⁻¹} ∩ A_h) but not in A_{(gh)⁻¹}.
    DomainEscape { g: String, h: String, atom: String },
    /// (P4): α_g(α_h(atom)) ≠ α_{gh}(atom).
    CompositionMismatch { g: String, h: String, atom: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct ActionReport {
    pub violations: Vec<Violation>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A partial action of a groupoid on a split ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialAction {
    groupoid: Arc<Groupoid>,
    ring: Arc<SplitRing>,
    ideals: Vec<Ideal>,
    isos: Vec<PartialRingIso>,
}

impl PartialAction {
    /// Assemble an action candidate. No axioms are checked here; run
    /// [`verify`](Self::verify) to validate it.
    pub fn new(
        groupoid: Arc<Groupoid>,
        ring: Arc<SplitRing>,
        ideals: Vec<Ideal>,
        isos: Vec<PartialRingIso>,
    ) -> PartialAction {
        assert_eq!(ideals.len(), groupoid.num_morphisms());
        assert_eq!(isos.len(), groupoid.num_morphisms());
        PartialAction { groupoid, ring, ideals, isos }
    }

    /// The global action where every morphism acts as the identity of a
    /// fixed ideal family (used for trivial instances).
    pub fn identity_action(
        groupoid: Arc<Groupoid>,
        ring: Arc<SplitRing>,
        object_ideals: &[Ideal],
    ) -> PartialAction {
        let ideals: Vec<Ideal> =
            groupoid.morphisms().map(|g| object_ideals[groupoid.tgt(g)]).collect();
        let isos = groupoid
            .morphisms()
            .map(|g| PartialRingIso::identity(object_ideals[groupoid.tgt(g)]))
            .collect();
        PartialAction::new(groupoid, ring, ideals, isos)
    }

    pub fn groupoid(&self) -> &Arc<Groupoid> {
        &self.groupoid
    }

    pub fn ring(&self) -> &Arc<SplitRing> {
        &self.ring
    }

    /// The ideal `A_g` (the codomain of `α_g`).
    pub fn ideal(&self, g: Mor) -> Ideal {
        self.ideals[g]
    }

    /// The isomorphism `α_g : A_{g⁻¹} → A_g`.
    pub fn iso(&self, g: Mor) -> &PartialRingIso {
        &self.isos[g]
    }

    /// `1_g`, the identity of the unital ideal `A_g`.
    pub fn range_unit(&self, g: Mor) -> RingElement {
        self.ring.idem(self.ideals[g])
    }

    /// Union of the object ideals; under the direct-sum hypothesis this is
    /// the carrier the trace and invariant machinery works in.
    pub fn carrier(&self) -> Ideal {
        self.groupoid
            .objects()
            .fold(Ideal::EMPTY, |acc, y| acc.union(&self.ideals[self.groupoid.identity(y)]))
    }

    /// Are the object ideals pairwise disjoint (A = ⊕_y A_y on the carrier)?
    pub fn object_ideals_disjoint(&self) -> bool {
        let mut seen = Ideal::EMPTY;
        for y in self.groupoid.objects() {
            let iy = self.ideals[self.groupoid.identity(y)];
            if !seen.disjoint(&iy) {
                return false;
            }
            seen = seen.union(&iy);
        }
        true
    }

    /// `α_g(a · 1_{g⁻¹})`: the action applied after projecting into its domain.
    pub fn act(&self, g: Mor, a: &RingElement) -> RingElement {
        let masked = self.ring.mask(a, self.isos[g].dom());
        self.isos[g].apply(&masked).expect("masked into domain")
    }

    fn p3_p4_violations(&self, g: Mor, h: Mor, all: bool) -> Vec<Violation> {
        let mut out = Vec::new();
        let gd = &self.groupoid;
        let gh = gd.compose(g, h).expect("composable");
        let overlap = self.ideals[gd.inv(g)].intersect(&self.ideals[h]);
        let pre = self.isos[h].preimage(overlap);
        for atom in pre.atoms() {
            if !self.ideals[gd.inv(gh)].contains(atom) {
                out.push(Violation::DomainEscape {
                    g: gd.mor_name(g).into(),
                    h: gd.mor_name(h).into(),
                    atom: self.ring.atom_name(atom).into(),
                });
                if !all {
                    return out;
                }
                continue;
            }
            let via = self.isos[h].map_atom(atom).and_then(|b| self.isos[g].map_atom(b));
            if via != self.isos[gh].map_atom(atom) {
                out.push(Violation::CompositionMismatch {
                    g: gd.mor_name(g).into(),
                    h: gd.mor_name(h).into(),
                    atom: self.ring.atom_name(atom).into(),
                });
                if !all {
                    return out;
                }
            }
        }
        out
    }

    /// Check (P1)–(P4). With `enumerate_all` the report carries every
    /// violation; otherwise only the first witness in canonical order
    /// (P1 by morphism, P2 by object, then P3/P4 by composable pair).
    pub fn verify(&self, enumerate_all: bool) -> ActionReport {
        let gd = &self.groupoid;
        let mut violations = Vec::new();
        for g in gd.morphisms() {
            let dom_ok = self.isos[g].dom() == self.ideals[gd.inv(g)];
            let cod_ok = self.isos[g].cod() == self.ideals[g];
            if !(dom_ok && cod_ok) {
                violations.push(Violation::Shape {
                    mor: gd.mor_name(g).into(),
                    detail: format!(
                        "iso runs {} -> {}, ideals are {} and {}",
                        self.ring.describe_ideal(self.isos[g].dom()),
                        self.ring.describe_ideal(self.isos[g].cod()),
                        self.ring.describe_ideal(self.ideals[gd.inv(g)]),
                        self.ring.describe_ideal(self.ideals[g]),
                    ),
                });
                if !enumerate_all {
                    return ActionReport { violations };
                }
            }
            if !self.ideals[g].is_subset(&self.ideals[gd.identity(gd.tgt(g))]) {
                violations.push(Violation::IdealNotInObjectIdeal { mor: gd.mor_name(g).into() });
                if !enumerate_all {
                    return ActionReport { violations };
                }
            }
        }
        for x in gd.objects() {
            let id = gd.identity(x);
            if self.isos[id] != PartialRingIso::identity(self.ideals[id]) {
                violations.push(Violation::IdentityNotIdentity { object: gd.object_name(x).into() });
                if !enumerate_all {
                    return ActionReport { violations };
                }
            }
        }
        let pairs = gd.composable_pairs();
        if enumerate_all {
            let mut rest = par::flat_map_collect(pairs.len(), |i| {
                let (g, h) = pairs[i];
                self.p3_p4_violations(g, h, true)
            });
            violations.append(&mut rest);
        } else if let Some(v) = par::find_map_first(pairs.len(), |i| {
            let (g, h) = pairs[i];
            self.p3_p4_violations(g, h, false).into_iter().next()
        }) {
            violations.push(v);
        }
        ActionReport { violations }
    }

    /// Is the action global? Checks `A_g = A_{tgt g}` and cross-checks that
    /// `α_g α_h = α_{gh}` holds exactly on every composable pair.
    pub fn is_global(&self) -> bool {
        let by_ideals = self
            .groupoid
            .morphisms()
            .all(|g| self.ideals[g] == self.ideals[self.groupoid.identity(self.groupoid.tgt(g))]);
        let by_composites = self.groupoid.composable_pairs().into_iter().all(|(g, h)| {
            let gh = self.groupoid.compose(g, h).unwrap();
            PartialRingIso::compose(&self.isos[g], &self.isos[h]) == self.isos[gh]
        });
        assert_eq!(by_ideals, by_composites, "globality criteria disagree");
        by_ideals
    }

    /// Every ideal of a split ring is unital; this checks the structure
    /// anyway: each `1_g` is idempotent, central, and acts as identity on A_g.
    pub fn is_unital(&self) -> bool {
        self.groupoid.morphisms().all(|g| {
            let unit = self.range_unit(g);
            let idem = self.ring.mul(&unit, &unit) == unit;
            let neutral = self.ideals[g].atoms().all(|a| {
                let e = self.ring.atom_elem(a);
                self.ring.mul(&unit, &e) == e && self.ring.mul(&e, &unit) == e
            });
            idem && neutral
        })
    }

    /// The restriction to the isotropy group at `x`: a partial action of
    /// G(x) on the ideal A_x, presented over the one-object groupoid.
    pub fn restrict_to_isotropy(&self, x: Obj) -> Result<IsotropyAction, ActionError> {
        if x >= self.groupoid.num_objects() {
            return Err(ActionError::UnknownObject(format!("#{x}")));
        }
        let (group, loops) = self
            .groupoid
            .isotropy(x)
            .map_err(|_| ActionError::UnknownObject(format!("#{x}")))?;
        let ideals = loops.iter().map(|&g| self.ideals[g]).collect();
        let isos = loops.iter().map(|&g| self.isos[g].clone()).collect();
        let action =
            PartialAction::new(Arc::new(group), Arc::clone(&self.ring), ideals, isos);
        Ok(IsotropyAction { action, loops })
    }

    /// The extension order: `self ≤ other` iff every `A_g^self ⊆ A_g^other`
    /// and `α_g^other` extends `α_g^self`.
    pub fn leq(&self, other: &PartialAction) -> bool {
        self.groupoid == other.groupoid
            && self.ring == other.ring
            && self
                .groupoid
                .morphisms()
                .all(|g| other.isos[g].extends(&self.isos[g]))
    }

    /// Is the action group-type with respect to `(x, τ)`:
    /// `A_{τ_y⁻¹} = A_x` and `A_{τ_y} = A_y` for every object `y`?
    pub fn is_group_type(&self, tau: &Transversal) -> bool {
        let gd = &self.groupoid;
        gd.objects().all(|y| {
            self.ideals[gd.inv(tau.pick[y])] == self.ideals[gd.identity(tau.base)]
                && self.ideals[tau.pick[y]] == self.ideals[gd.identity(y)]
        })
    }

    /// Does `(x, τ)` recover the action through restriction + extension:
    /// `A_g ⊆ A_{τ_{tgt g}}` for every non-identity `g`?
    pub fn is_recoverable_at(&self, tau: &Transversal) -> bool {
        let gd = &self.groupoid;
        let narrow = gd
            .morphisms()
            .filter(|&g| !gd.is_identity(g))
            .all(|g| self.ideals[g].is_subset(&self.ideals[tau.pick[gd.tgt(g)]]));
        // the one-sided condition is equivalent to the two-sided one
        let wide = gd.morphisms().filter(|&g| !gd.is_identity(g)).all(|g| {
            let right = gd.compose(g, tau.pick[gd.src(g)]).expect("src matches");
            self.ideals[g].is_subset(&self.ideals[tau.pick[gd.tgt(g)]])
                && self.ideals[g].is_subset(&self.ideals[right])
        });
        assert_eq!(narrow, wide, "recoverability criteria disagree");
        narrow
    }

    /// Exhaustive search for a recovering base and transversal, in
    /// lexicographic order.
    pub fn recoverable_witness(&self) -> Result<RecoverabilityReport, ActionError> {
        if !self.groupoid.is_connected() {
            return Err(ActionError::NotConnected);
        }
        let mut checked = 0;
        let mut witness = None;
        for x in self.groupoid.objects() {
            for tau in self.groupoid.transversals(x).expect("connected") {
                checked += 1;
                if self.is_recoverable_at(&tau) && witness.is_none() {
                    witness = Some((x, tau));
                }
            }
        }
        Ok(RecoverabilityReport { witness, pairs_checked: checked })
    }
}

/// A partial action of an isotropy group, with the map from the one-object
/// groupoid's morphisms back to the ambient loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyAction {
    pub action: PartialAction,
    pub loops: Vec<Mor>,
}

impl IsotropyAction {
    /// Local morphism id of an ambient loop.
    pub fn local(&self, parent: Mor) -> Option<Mor> {
        self.loops.binary_search(&parent).ok()
    }
}

#[derive(Debug, Clone)]
pub struct RecoverabilityReport {
    pub witness: Option<(Obj, Transversal)>,
    pub pairs_checked: usize,
}

impl RecoverabilityReport {
    pub fn recoverable(&self) -> bool {
        self.witness.is_some()
    }
}

/// A family of ring homomorphisms between ideals, one per source atom,
/// sending each atom to an idempotent with the listed support. Distinct
/// atoms must land on disjoint supports; that makes the induced linear map
/// multiplicative, hence a ring homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    dom: Ideal,
    images: Vec<Ideal>, // aligned with dom.atoms() ascending
}

impl RingMap {
    pub fn new(dom: Ideal, images: Vec<Ideal>) -> Result<RingMap, ActionError> {
        if images.len() != dom.len() {
            return Err(ActionError::ShapeMismatch("one image per domain atom".into()));
        }
        let mut seen = Ideal::EMPTY;
        for img in &images {
            if !seen.disjoint(img) {
                return Err(ActionError::ShapeMismatch(
                    "atom images overlap; not multiplicative".into(),
                ));
            }
            seen = seen.union(img);
        }
        Ok(RingMap { dom, images })
    }

    pub fn identity(ideal: Ideal) -> RingMap {
        RingMap { dom: ideal, images: ideal.atoms().map(Ideal::single).collect() }
    }

    /// The inclusion of a sub-ideal, as a ring map.
    pub fn inclusion(ideal: Ideal) -> RingMap {
        RingMap::identity(ideal)
    }

    pub fn zero(ideal: Ideal) -> RingMap {
        RingMap { dom: ideal, images: ideal.atoms().map(|_| Ideal::EMPTY).collect() }
    }

    pub fn dom(&self) -> Ideal {
        self.dom
    }

    pub fn image_of_atom(&self, a: usize) -> Option<Ideal> {
        self.dom.atoms().position(|b| b == a).map(|i| self.images[i])
    }

    pub fn image_ideal(&self, sub: Ideal) -> Ideal {
        self.dom
            .atoms()
            .zip(&self.images)
            .filter(|&(a, _)| sub.contains(a))
            .fold(Ideal::EMPTY, |acc, (_, img)| acc.union(img))
    }

    pub fn apply(&self, ring: &SplitRing, a: &RingElement) -> Result<RingElement, ActionError> {
        if !a.support().is_subset(&self.dom) {
            return Err(ActionError::ShapeMismatch("element outside map domain".into()));
        }
        let mut out = ring.zero();
        for (atom, img) in self.dom.atoms().zip(&self.images) {
            let c = a.coeff(atom);
            if c != 0 {
                out = ring.add(&out, &ring.scale(c, &ring.idem(*img)));
            }
        }
        Ok(out)
    }
}

/// A morphism of partial actions: one ring map `ψ_y : A_y → A'_y` per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParMorphism {
    pub maps: Vec<RingMap>,
}

impl ParMorphism {
    pub fn identity(action: &PartialAction) -> ParMorphism {
        let maps = action
            .groupoid()
            .objects()
            .map(|y| RingMap::identity(action.ideal(action.groupoid().identity(y))))
            .collect();
        ParMorphism { maps }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum MorphismViolation {
    /// ψ_{tgt g}(A_g) is not contained in A'_g.
    Containment { mor: String },
    /// α'_g ψ_{src g} ≠ ψ_{tgt g} α_g on A_{g⁻¹}.
    Intertwining { mor: String, atom: String },
    /// ψ_y is not a map A_y → A'_y of the right shape.
    Shape { object: String },
}

/// Check that a family `ψ` is a morphism of partial actions `from → to`.
pub fn verify_par_morphism(
    psi: &ParMorphism,
    from: &PartialAction,
    to: &PartialAction,
) -> Result<Vec<MorphismViolation>, ActionError> {
    if from.groupoid() != to.groupoid() || from.ring() != to.ring() {
        return Err(ActionError::DifferentContext);
    }
    let gd = from.groupoid();
    if psi.maps.len() != gd.num_objects() {
        return Err(ActionError::ShapeMismatch("one map per object".into()));
    }
    let ring = from.ring();
    let mut out = Vec::new();
    for y in gd.objects() {
        let id = gd.identity(y);
        let ok = psi.maps[y].dom() == from.ideal(id)
            && psi.maps[y].image_ideal(psi.maps[y].dom()).is_subset(&to.ideal(id));
        if !ok {
            out.push(MorphismViolation::Shape { object: gd.object_name(y).into() });
        }
    }
    for g in gd.morphisms() {
        let t = gd.tgt(g);
        let s = gd.src(g);
        if !psi.maps[t].image_ideal(from.ideal(g)).is_subset(&to.ideal(g)) {
            out.push(MorphismViolation::Containment { mor: gd.mor_name(g).into() });
            continue;
        }
        for atom in from.ideal(gd.inv(g)).atoms() {
            let e = ring.atom_elem(atom);
            let lhs = to.act(g, &psi.maps[s].apply(ring, &e).unwrap_or_else(|_| ring.zero()));
            let rhs = psi.maps[t]
                .apply(ring, &from.act(g, &e))
                .unwrap_or_else(|_| ring.zero());
            if lhs != rhs {
                out.push(MorphismViolation::Intertwining {
                    mor: gd.mor_name(g).into(),
                    atom: ring.atom_name(atom).into(),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn b2_satisfies_the_axioms() {
        let b2 = fixtures::b2_action(3);
        assert!(b2.verify(true).passed());
        assert!(b2.is_unital());
        assert!(!b2.is_global()); // A_g = ke1 ⊊ A_x
    }

    #[test]
    fn gamma_action_is_global() {
        let gamma = fixtures::gamma22_action(3);
        assert!(gamma.verify(true).passed());
        assert!(gamma.is_global());
    }

    #[test]
    fn trivial_identity_action_is_global() {
        let g = Arc::new(crate::groupoid::cyclic_group(1));
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 1));
        let full = ring.full_ideal();
        let a = PartialAction::identity_action(g, ring, &[full]);
        assert!(a.verify(true).passed());
        assert!(a.is_global());
    }

    #[test]
    fn redirected_b2_fails_with_a_p3_witness() {
        // send α_l to ke5 instead of ke4 (and α_{l⁻¹} back): the first
        // violation in canonical order is (P3) at (l⁻¹, m), because
        // α_m⁻¹(A_l ∩ A_m) = {e3} escapes A_{g⁻¹} = {e1}.
        let b2 = fixtures::b2_action(3);
        let gd = Arc::clone(b2.groupoid());
        let by = |n: &str| gd.mor_by_name(n).unwrap();
        let mut ideals: Vec<Ideal> = gd.morphisms().map(|g| b2.ideal(g)).collect();
        let mut isos: Vec<PartialRingIso> =
            gd.morphisms().map(|g| b2.iso(g).clone()).collect();
        ideals[by("l")] = Ideal::single(4);
        isos[by("l")] = PartialRingIso::new(vec![(1, 4)]).unwrap();
        isos[by("l_inv")] = PartialRingIso::new(vec![(4, 1)]).unwrap();
        let broken = PartialAction::new(gd, Arc::clone(b2.ring()), ideals, isos);
        let report = broken.verify(false);
        assert_eq!(
            report.violations,
            vec![Violation::DomainEscape { g: "l_inv".into(), h: "m".into(), atom: "e3".into() }]
        );
    }

    #[test]
    fn restriction_to_isotropy() {
        let b2 = fixtures::b2_action(3);
        let x = b2.groupoid().object_by_name("x").unwrap();
        let res = b2.restrict_to_isotropy(x).unwrap();
        assert!(res.action.verify(true).passed());
        assert_eq!(res.loops.len(), 2);
        let g_local = res.local(b2.groupoid().mor_by_name("g").unwrap()).unwrap();
        assert_eq!(res.action.ideal(g_local), Ideal::single(0)); // ke1
        assert!(!res.action.is_global());

        let gamma = fixtures::gamma22_action(3);
        let res = gamma.restrict_to_isotropy(0).unwrap();
        assert!(res.action.is_global());
    }

    #[test]
    fn extension_order() {
        let b2 = fixtures::b2_action(3);
        assert!(b2.leq(&b2));
        // a copy with A_h shrunk to nothing sits strictly below
        let gd = Arc::clone(b2.groupoid());
        let h = gd.mor_by_name("h").unwrap();
        let mut ideals: Vec<Ideal> = gd.morphisms().map(|g| b2.ideal(g)).collect();
        let mut isos: Vec<PartialRingIso> =
            gd.morphisms().map(|g| b2.iso(g).clone()).collect();
        ideals[h] = Ideal::EMPTY;
        isos[h] = PartialRingIso::empty();
        let small = PartialAction::new(gd, Arc::clone(b2.ring()), ideals, isos);
        assert!(small.verify(true).passed());
        assert!(small.leq(&b2));
        assert!(!b2.leq(&small));
    }

    #[test]
    fn recoverability_search() {
        let b2 = fixtures::b2_action(3);
        let rep = b2.recoverable_witness().unwrap();
        assert!(!rep.recoverable());
        assert_eq!(rep.pairs_checked, 4); // 2 bases × 2 transversals

        let gamma = fixtures::gamma22_action(3);
        let rep = gamma.recoverable_witness().unwrap();
        assert!(rep.recoverable()); // group-type, hence recoverable
        let (x, tau) = rep.witness.unwrap();
        assert!(gamma.is_group_type(&tau));
        assert_eq!(x, 0);

        // a global action on the coarse groupoid is recoverable at any base
        let coarse = Arc::new(crate::groupoid::coarse_groupoid(&["1", "2"]).unwrap());
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 2));
        let ideals = vec![Ideal::single(0), Ideal::single(1)];
        let mut mor_ideals = vec![Ideal::EMPTY; coarse.num_morphisms()];
        let mut isos = vec![PartialRingIso::empty(); coarse.num_morphisms()];
        for g in coarse.morphisms() {
            mor_ideals[g] = ideals[coarse.tgt(g)];
            isos[g] = PartialRingIso::new(
                ideals[coarse.src(g)]
                    .atoms()
                    .zip(ideals[coarse.tgt(g)].atoms())
                    .collect(),
            )
            .unwrap();
        }
        let glob = PartialAction::new(coarse, ring, mor_ideals, isos);
        assert!(glob.verify(true).passed());
        assert!(glob.is_global());
        let rep = glob.recoverable_witness().unwrap();
        assert!(rep.recoverable());
    }

    #[test]
    fn par_morphism_checks() {
        let b2 = fixtures::b2_action(3);
        let id = ParMorphism::identity(&b2);
        assert!(verify_par_morphism(&id, &b2, &b2).unwrap().is_empty());

        // identity family into an action with shrunken A_l: containment fails
        let gd = Arc::clone(b2.groupoid());
        let l = gd.mor_by_name("l").unwrap();
        let mut ideals: Vec<Ideal> = gd.morphisms().map(|g| b2.ideal(g)).collect();
        let mut isos: Vec<PartialRingIso> =
            gd.morphisms().map(|g| b2.iso(g).clone()).collect();
        ideals[l] = Ideal::EMPTY;
        ideals[gd.mor_by_name("l_inv").unwrap()] = Ideal::EMPTY;
        isos[l] = PartialRingIso::empty();
        isos[gd.mor_by_name("l_inv").unwrap()] = PartialRingIso::empty();
        let small = PartialAction::new(gd, Arc::clone(b2.ring()), ideals, isos);
        let vs = verify_par_morphism(&id, &b2, &small).unwrap();
        assert!(vs
            .iter()
            .any(|v| matches!(v, MorphismViolation::Containment { mor } if mor == "l")));
    }

    #[test]
    fn inverse_and_overlap_identities_hold() {
        // α_g⁻¹ = α_{g⁻¹} and α_g(A_{g⁻¹} ∩ A_h) = A_g ∩ A_{gh}
        for pa in [fixtures::b2_action(3), fixtures::gamma22_action(3)] {
            let gd = pa.groupoid();
            for g in gd.morphisms() {
                assert_eq!(&pa.iso(g).inverse(), pa.iso(gd.inv(g)));
            }
            for (g, h) in gd.composable_pairs() {
                let gh = gd.compose(g, h).unwrap();
                let lhs = pa.iso(g).image(pa.ideal(gd.inv(g)).intersect(&pa.ideal(h)));
                assert_eq!(lhs, pa.ideal(g).intersect(&pa.ideal(gh)));
            }
        }
    }
}
