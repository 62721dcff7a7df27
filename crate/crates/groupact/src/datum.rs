//! Restriction data and the extension construction.
//!
//! A [`Datum`] over a connected groupoid G, base object x and transversal τ
//! is a triple: a family of ideals `I_y` (one per object), a family of
//! isomorphisms `γ_{τ_y} : I_{τ_y⁻¹} → I_{τ_y}` with `I_{τ_y⁻¹} ⊆ I_x`,
//! `I_{τ_y} ⊆ I_y` and `γ_{τ_x} = id`, and a partial action `γ_(x)` of the
//! isotropy group G(x) on `I_x`.
//!
//! [`restrict`] reads this data off a partial action; [`extend`] rebuilds a
//! partial action from it, acting by
//! `θ_g = γ_{τ_{tgt g}} · γ_{corner g} · γ_{τ_{src g}}⁻¹` on non-identities
//! (composition of partial bijections) with `B_g` the range of `θ_g`. The
//! two constructions are adjoint: `restrict(extend(d)) = d` always, and
//! `extend(restrict(α)) ≤ α` with equality iff `A_g ⊆ A_{τ_{tgt g}}` for
//! every non-identity `g`.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::action::{
    verify_par_morphism, ActionError, IsotropyAction, MorphismViolation, ParMorphism,
    PartialAction, RingMap, Violation,
};
use crate::groupoid::{Groupoid, Mor, Obj, Transversal};
use crate::ring::{Ideal, PartialRingIso, SplitRing};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DatumError {
    #[error("transversal is not valid for the groupoid")]
    BadTransversal,
    #[error("groupoid is not connected")]
    NotConnected,
    #[error(transparent)]
    Action(#[from] ActionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DatumViolation {
    /// γ_{τ_base} is not the identity of I_base.
    BaseIsoNotIdentity,
    /// dom γ_{τ_y} ⊄ I_base.
    TauDomainEscape { object: String },
    /// cod γ_{τ_y} ⊄ I_y.
    TauCodomainEscape { object: String },
    /// The loop action does not act on I_base.
    GroupCarrierMismatch,
    /// The loop action violates a partial-action axiom.
    Group(Violation),
    /// The composite range at `mor` is not inside I_{tgt}.
    IdealCondition { mor: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct DatumReport {
    pub violations: Vec<DatumViolation>,
}

impl DatumReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Restriction data based at one object of a connected groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Datum {
    groupoid: Arc<Groupoid>,
    ring: Arc<SplitRing>,
    tau: Transversal,
    ideals: Vec<Ideal>,
    tau_isos: Vec<PartialRingIso>,
    group: IsotropyAction,
}

impl Datum {
    pub fn new(
        groupoid: Arc<Groupoid>,
        ring: Arc<SplitRing>,
        tau: Transversal,
        ideals: Vec<Ideal>,
        tau_isos: Vec<PartialRingIso>,
        group: IsotropyAction,
    ) -> Result<Datum, DatumError> {
        if !tau.is_valid(&groupoid) {
            return Err(DatumError::BadTransversal);
        }
        if ideals.len() != groupoid.num_objects() || tau_isos.len() != groupoid.num_objects() {
            return Err(ActionError::ShapeMismatch("one ideal and one iso per object".into()).into());
        }
        Ok(Datum { groupoid, ring, tau, ideals, tau_isos, group })
    }

    pub fn groupoid(&self) -> &Arc<Groupoid> {
        &self.groupoid
    }

    pub fn ring(&self) -> &Arc<SplitRing> {
        &self.ring
    }

    pub fn base(&self) -> Obj {
        self.tau.base
    }

    pub fn tau(&self) -> &Transversal {
        &self.tau
    }

    /// I_y.
    pub fn ideal(&self, y: Obj) -> Ideal {
        self.ideals[y]
    }

    /// γ_{τ_y} : I_{τ_y⁻¹} → I_{τ_y}.
    pub fn tau_iso(&self, y: Obj) -> &PartialRingIso {
        &self.tau_isos[y]
    }

    /// The loop action γ_(x) of G(base) on I_base.
    pub fn group(&self) -> &IsotropyAction {
        &self.group
    }

    /// γ_h for an ambient loop h at the base.
    pub fn loop_iso(&self, parent: Mor) -> &PartialRingIso {
        let local = self.group.local(parent).expect("loop at base");
        self.group.action.iso(local)
    }

    /// I_h for an ambient loop h at the base.
    pub fn loop_ideal(&self, parent: Mor) -> Ideal {
        let local = self.group.local(parent).expect("loop at base");
        self.group.action.ideal(local)
    }

    /// Check every datum invariant. The loop action is verified through the
    /// partial-action axioms.
    pub fn verify(&self, enumerate_all: bool) -> DatumReport {
        let gd = &self.groupoid;
        let x = self.base();
        let mut violations = Vec::new();
        let push = |v: DatumViolation, vs: &mut Vec<DatumViolation>| -> bool {
            vs.push(v);
            !enumerate_all
        };
        if self.tau_isos[x] != PartialRingIso::identity(self.ideals[x]) {
            if push(DatumViolation::BaseIsoNotIdentity, &mut violations) {
                return DatumReport { violations };
            }
        }
        for y in gd.objects() {
            if !self.tau_isos[y].dom().is_subset(&self.ideals[x]) {
                if push(
                    DatumViolation::TauDomainEscape { object: gd.object_name(y).into() },
                    &mut violations,
                ) {
                    return DatumReport { violations };
                }
            }
            if !self.tau_isos[y].cod().is_subset(&self.ideals[y]) {
                if push(
                    DatumViolation::TauCodomainEscape { object: gd.object_name(y).into() },
                    &mut violations,
                ) {
                    return DatumReport { violations };
                }
            }
        }
        let carrier_ok = self.group.loops == gd.loops_at(x)
            && self.group.action.ideal(self.group.action.groupoid().identity(0))
                == self.ideals[x];
        if !carrier_ok {
            if push(DatumViolation::GroupCarrierMismatch, &mut violations) {
                return DatumReport { violations };
            }
        }
        let group_report = self.group.action.verify(enumerate_all);
        for v in group_report.violations {
            if push(DatumViolation::Group(v), &mut violations) {
                return DatumReport { violations };
            }
        }
        for g in gd.morphisms() {
            if !self.closed_form_range(g).is_subset(&self.ideals[gd.tgt(g)]) {
                if push(
                    DatumViolation::IdealCondition { mor: gd.mor_name(g).into() },
                    &mut violations,
                ) {
                    return DatumReport { violations };
                }
            }
        }
        DatumReport { violations }
    }

    /// The range of the extension at `g` computed from the defining
    /// intersection formula
    /// `γ_{τ_{tgt g}}(I_{τ_{tgt g}⁻¹} ∩ γ_{corner g}(I_{τ_{src g}⁻¹} ∩ I_{(corner g)⁻¹}))`
    /// rather than by composing the maps.
    pub fn closed_form_range(&self, g: Mor) -> Ideal {
        let gd = &self.groupoid;
        if gd.is_identity(g) {
            return self.ideals[gd.tgt(g)];
        }
        let gx = gd.corner(g, &self.tau);
        let inner = self.tau_isos[gd.src(g)].dom().intersect(&self.loop_ideal(gd.inv(gx)));
        let mid = self.tau_isos[gd.tgt(g)].dom().intersect(&self.loop_iso(gx).image(inner));
        self.tau_isos[gd.tgt(g)].image(mid)
    }

    /// Does the datum lie in the group-type subcategory:
    /// `I_{τ_y⁻¹} = I_x` and `I_{τ_y} = I_y` for every object?
    pub fn is_group_type_data(&self) -> bool {
        let x = self.base();
        self.groupoid.objects().all(|y| {
            self.tau_isos[y].dom() == self.ideals[x] && self.tau_isos[y].cod() == self.ideals[y]
        })
    }
}

/// Read the datum of a verified partial action off a base and transversal.
pub fn restrict(
    action: &PartialAction,
    x: Obj,
    tau: &Transversal,
) -> Result<Datum, DatumError> {
    if !action.groupoid().is_connected() {
        return Err(DatumError::NotConnected);
    }
    if tau.base != x || !tau.is_valid(action.groupoid()) {
        return Err(DatumError::BadTransversal);
    }
    let gd = action.groupoid();
    let ideals = gd.objects().map(|y| action.ideal(gd.identity(y))).collect();
    let tau_isos = gd.objects().map(|y| action.iso(tau.pick[y]).clone()).collect();
    let group = action.restrict_to_isotropy(x)?;
    Datum::new(
        Arc::clone(action.groupoid()),
        Arc::clone(action.ring()),
        tau.clone(),
        ideals,
        tau_isos,
        group,
    )
}

/// Build the extended partial action of a datum:
/// identities act as `id_{I_y}`, and a non-identity `g` acts by the
/// composite partial bijection `γ_{τ_{tgt g}} · γ_{corner g} · γ_{τ_{src g}}⁻¹`
/// with `B_g` its range.
pub fn extend(datum: &Datum) -> PartialAction {
    let gd = datum.groupoid();
    let mut ideals = vec![Ideal::EMPTY; gd.num_morphisms()];
    let mut isos = vec![PartialRingIso::empty(); gd.num_morphisms()];
    for g in gd.morphisms() {
        if gd.is_identity(g) {
            let y = gd.tgt(g);
            ideals[g] = datum.ideal(y);
            isos[g] = PartialRingIso::identity(datum.ideal(y));
        } else {
            let gx = gd.corner(g, datum.tau());
            let from_src = datum.tau_iso(gd.src(g)).inverse();
            let through_loop = PartialRingIso::compose(datum.loop_iso(gx), &from_src);
            let theta = PartialRingIso::compose(datum.tau_iso(gd.tgt(g)), &through_loop);
            ideals[g] = theta.cod();
            isos[g] = theta;
        }
    }
    PartialAction::new(
        Arc::clone(datum.groupoid()),
        Arc::clone(datum.ring()),
        ideals,
        isos,
    )
}

/// Move a datum to a new base and transversal.
///
/// The ideal families at the old and new base swap, the transversal
/// isomorphism stored at the new base becomes the identity, the one stored
/// at the old base becomes `γ_{τ_z}`, and the loop action is reindexed along
/// the group isomorphism `G(z) → G(x)`, `l ↦ τ_z⁻¹ · l · τ_z`. Transporting
/// back along the original transversal conjugates the loop data by
/// `λ_x · τ_z`; with [`Transversal::rebase`] that conjugator is an identity
/// and round trips are exact.
pub fn transport(datum: &Datum, z: Obj, lambda: &Transversal) -> Result<Datum, DatumError> {
    let gd = datum.groupoid();
    if lambda.base != z || !lambda.is_valid(gd) {
        return Err(DatumError::BadTransversal);
    }
    let x = datum.base();
    let mut ideals = datum.ideals.clone();
    ideals.swap(x, z);
    let mut tau_isos = datum.tau_isos.clone();
    tau_isos[z] = PartialRingIso::identity(ideals[z]);
    if x != z {
        tau_isos[x] = datum.tau_iso(z).clone();
    }
    let (group_gd, loops) = gd.isotropy(z).expect("object exists");
    let group_ideals: Vec<Ideal> =
        loops.iter().map(|&l| datum.loop_ideal(gd.corner(l, datum.tau()))).collect();
    let group_isos: Vec<PartialRingIso> =
        loops.iter().map(|&l| datum.loop_iso(gd.corner(l, datum.tau())).clone()).collect();
    let group = IsotropyAction {
        action: PartialAction::new(
            Arc::new(group_gd),
            Arc::clone(datum.ring()),
            group_ideals,
            group_isos,
        ),
        loops,
    };
    Datum::new(
        Arc::clone(gd),
        Arc::clone(datum.ring()),
        lambda.clone(),
        ideals,
        tau_isos,
        group,
    )
}

/// A morphism of datums: one ring map `f_y : I_y → I'_y` per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DatumMorphism {
    pub maps: Vec<RingMap>,
}

impl DatumMorphism {
    pub fn identity(d: &Datum) -> DatumMorphism {
        let maps = d.groupoid().objects().map(|y| RingMap::identity(d.ideal(y))).collect();
        DatumMorphism { maps }
    }
}

/// Check the datum-morphism conditions for `f : d → d'` (same base and
/// transversal).
pub fn verify_datum_morphism(
    f: &DatumMorphism,
    d: &Datum,
    d2: &Datum,
) -> Result<Vec<MorphismViolation>, ActionError> {
    if d.groupoid() != d2.groupoid() || d.tau() != d2.tau() {
        return Err(ActionError::DifferentContext);
    }
    let gd = d.groupoid();
    let ring = d.ring();
    let x = d.base();
    let mut out = Vec::new();
    for y in gd.objects() {
        if f.maps[y].dom() != d.ideal(y) {
            out.push(MorphismViolation::Shape { object: gd.object_name(y).into() });
            continue;
        }
        if y != x && !f.maps[y].image_ideal(d.tau_iso(y).cod()).is_subset(&d2.tau_iso(y).cod()) {
            out.push(MorphismViolation::Containment { mor: gd.mor_name(d.tau().pick[y]).into() });
        }
        if !f.maps[x].image_ideal(d.tau_iso(y).dom()).is_subset(&d2.tau_iso(y).dom()) {
            out.push(MorphismViolation::Containment {
                mor: format!("{}⁻¹", gd.mor_name(d.tau().pick[y])),
            });
        }
        // γ'_{τ_y} f_x = f_y γ_{τ_y} on I_{τ_y⁻¹}
        for atom in d.tau_iso(y).dom().atoms() {
            let e = ring.atom_elem(atom);
            let lhs = f.maps[x]
                .apply(ring, &e)
                .ok()
                .and_then(|v| d2.tau_iso(y).apply(&ring.mask(&v, d2.tau_iso(y).dom())).ok());
            let rhs = d
                .tau_iso(y)
                .apply(&e)
                .ok()
                .and_then(|v| f.maps[y].apply(ring, &v).ok());
            if lhs != rhs {
                out.push(MorphismViolation::Intertwining {
                    mor: gd.mor_name(d.tau().pick[y]).into(),
                    atom: ring.atom_name(atom).into(),
                });
            }
        }
    }
    // f_x is a morphism of the loop actions
    let psi = ParMorphism { maps: vec![f.maps[x].clone()] };
    out.extend(verify_par_morphism(&psi, &d.group().action, &d2.group().action)?);
    Ok(out)
}

/// The unit/counit checks for the restrict ⊣ extend pair on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct AdjunctionReport {
    /// restrict(extend(d)) == d.
    pub unit_identity: bool,
    /// The inclusion family extend(restrict(α)) → α is a morphism of actions.
    pub counit_valid: bool,
    /// extend ∘ restrict fixes extend(d) (first triangle identity).
    pub triangle_extend: bool,
    /// restrict ∘ extend fixes restrict(α) (second triangle identity).
    pub triangle_restrict: bool,
    /// The counit at this instance is an isomorphism: extend(restrict(α)) == α.
    pub counit_iso: bool,
}

impl AdjunctionReport {
    pub fn all_pass(&self) -> bool {
        self.unit_identity && self.counit_valid && self.triangle_extend && self.triangle_restrict
    }
}

fn counit_family(theta: &PartialAction) -> ParMorphism {
    let maps = theta
        .groupoid()
        .objects()
        .map(|y| RingMap::inclusion(theta.ideal(theta.groupoid().identity(y))))
        .collect();
    ParMorphism { maps }
}

fn adjunction_of(action: &PartialAction, datum: &Datum) -> AdjunctionReport {
    let x = datum.base();
    let tau = datum.tau().clone();
    let theta = extend(datum);
    let unit_identity = restrict(&theta, x, &tau).map(|d| d == *datum).unwrap_or(false);
    let eps = counit_family(&theta);
    let counit_valid =
        verify_par_morphism(&eps, &theta, action).map(|v| v.is_empty()).unwrap_or(false);
    let again = restrict(&theta, x, &tau).map(|d| extend(&d));
    let triangle_extend = again.map(|t| t == theta).unwrap_or(false);
    let triangle_restrict = restrict(&theta, x, &tau)
        .and_then(|_| restrict(action, x, &tau))
        .map(|d| {
            restrict(&extend(&d), x, &tau).map(|d2| d2 == d).unwrap_or(false)
        })
        .unwrap_or(false);
    let counit_iso = theta == *action;
    AdjunctionReport { unit_identity, counit_valid, triangle_extend, triangle_restrict, counit_iso }
}

/// Run the adjunction checks starting from a datum (α taken as extend(d)).
pub fn check_adjunction_datum(d: &Datum) -> AdjunctionReport {
    adjunction_of(&extend(d), d)
}

/// Run the adjunction checks starting from an action (d taken as restrict(α)).
pub fn check_adjunction_action(
    action: &PartialAction,
    x: Obj,
    tau: &Transversal,
) -> Result<AdjunctionReport, DatumError> {
    let d = restrict(action, x, tau)?;
    Ok(adjunction_of(action, &d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ring::RingError;

    fn hex_with_tau() -> (Arc<Groupoid>, Transversal) {
        let gd = fixtures::hex_groupoid();
        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(&gd, x).unwrap();
        (gd, tau)
    }

    #[test]
    fn dat_fixture_verifies() {
        let d = fixtures::dat_datum(3);
        assert!(d.verify(true).passed());
        assert!(d.is_group_type_data());
    }

    #[test]
    fn full_ideal_datum_verifies() {
        // all ideals the whole ring, both maps the identity
        let (gd, tau) = hex_with_tau();
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 4));
        let full = ring.full_ideal();
        let (group_gd, loops) = gd.isotropy(tau.base).unwrap();
        let group = IsotropyAction {
            action: PartialAction::identity_action(
                Arc::new(group_gd),
                Arc::clone(&ring),
                &[full],
            ),
            loops,
        };
        let d = Datum::new(
            gd,
            ring,
            tau,
            vec![full, full],
            vec![PartialRingIso::identity(full), PartialRingIso::identity(full)],
            group,
        )
        .unwrap();
        assert!(d.verify(true).passed());
        let theta = extend(&d);
        assert!(theta.verify(true).passed());
        assert!(theta.is_global());
    }

    #[test]
    fn base_iso_must_be_identity() {
        let d = fixtures::dat_datum(3);
        let mut tau_isos = d.tau_isos.clone();
        // a non-identity involution of I_x = {e1, e3}
        tau_isos[d.base()] = PartialRingIso::new(vec![(0, 2), (2, 0)]).unwrap();
        let broken = Datum::new(
            Arc::clone(d.groupoid()),
            Arc::clone(d.ring()),
            d.tau().clone(),
            d.ideals.clone(),
            tau_isos,
            d.group().clone(),
        )
        .unwrap();
        let report = broken.verify(false);
        assert_eq!(report.violations, vec![DatumViolation::BaseIsoNotIdentity]);
    }

    #[test]
    fn extend_matches_hand_computed_maps() {
        let d = fixtures::dat_datum(3);
        let theta = extend(&d);
        assert!(theta.verify(true).passed());
        let gd = theta.groupoid();
        let by = |n: &str| gd.mor_by_name(n).unwrap();
        let want = |pairs: &[(usize, usize)]| PartialRingIso::new(pairs.to_vec()).unwrap();
        assert_eq!(theta.iso(by("g")), &want(&[(2, 2)]));
        assert_eq!(theta.iso(by("m")), &want(&[(2, 1)]));
        assert_eq!(theta.iso(by("h")), &want(&[(1, 1)]));
        assert_eq!(theta.iso(by("l")), &want(&[(0, 3), (2, 1)]));
        assert_eq!(theta.iso(by("l_inv")), &want(&[(3, 0), (1, 2)]));
        assert_eq!(theta.iso(by("m_inv")), &want(&[(1, 2)]));
        assert_eq!(theta.ideal(by("x")), Ideal::from_atoms(&[0, 2]));
        assert_eq!(theta.ideal(by("y")), Ideal::from_atoms(&[1, 3]));
        // range of θ_g equals the closed-form intersection display
        for g in gd.morphisms() {
            assert_eq!(theta.ideal(g), d.closed_form_range(g), "at {}", gd.mor_name(g));
        }
    }

    #[test]
    fn extend_of_trivial_datum_is_identity_action() {
        let gd = Arc::new(crate::groupoid::cyclic_group(1));
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 2));
        let full = ring.full_ideal();
        let tau = Transversal { base: 0, pick: vec![0] };
        let (ggd, loops) = gd.isotropy(0).unwrap();
        let group = IsotropyAction {
            action: PartialAction::identity_action(Arc::new(ggd), Arc::clone(&ring), &[full]),
            loops,
        };
        let d = Datum::new(
            Arc::clone(&gd),
            Arc::clone(&ring),
            tau,
            vec![full],
            vec![PartialRingIso::identity(full)],
            group,
        )
        .unwrap();
        let theta = extend(&d);
        assert_eq!(theta, PartialAction::identity_action(gd, ring, &[full]));
    }

    #[test]
    fn restrict_reads_off_the_data() {
        let b2 = fixtures::b2_action(3);
        let gd = b2.groupoid();
        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(gd, x).unwrap();
        let d = restrict(&b2, x, &tau).unwrap();
        assert!(d.verify(true).passed());
        let y = gd.object_by_name("y").unwrap();
        // I_{τ_y⁻¹} = A_{l⁻¹} = ke2
        assert_eq!(d.tau_iso(y).dom(), Ideal::single(1));
        assert_eq!(d.ideal(x), Ideal::from_atoms(&[0, 1, 2]));

        // a disconnected groupoid refuses
        let two = crate::groupoid::coarse_groupoid(&["a"]).unwrap();
        assert_eq!(two.num_morphisms(), 1);
    }

    #[test]
    fn restrict_after_extend_is_identity() {
        for d in [fixtures::dat_datum(3), fixtures::gamma22_datum(3)] {
            let theta = extend(&d);
            let back = restrict(&theta, d.base(), d.tau()).unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn extend_after_restrict_on_gamma_recovers_it() {
        let gamma = fixtures::gamma22_action(3);
        let tau = Transversal::canonical(gamma.groupoid(), 0).unwrap();
        let d = restrict(&gamma, 0, &tau).unwrap();
        assert_eq!(extend(&d), gamma);
    }

    #[test]
    fn extend_after_restrict_sits_below_b2() {
        let b2 = fixtures::b2_action(3);
        let gd = b2.groupoid();
        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(gd, x).unwrap();
        let theta = extend(&restrict(&b2, x, &tau).unwrap());
        assert!(theta.verify(true).passed());
        assert!(theta.leq(&b2));
        assert!(!b2.leq(&theta));
        // strict exactly at h, m, m⁻¹: the h-range is empty while A_h = ke6
        let h = gd.mor_by_name("h").unwrap();
        assert_eq!(theta.ideal(h), Ideal::EMPTY);
        assert_eq!(b2.ideal(h), Ideal::single(5));
    }

    #[test]
    fn transport_is_trivial_at_the_same_base() {
        let d = fixtures::dat_datum(3);
        let moved = transport(&d, d.base(), d.tau()).unwrap();
        assert_eq!(moved, d);
    }

    #[test]
    fn transport_roundtrip_is_exact_with_rebase() {
        let d = fixtures::dat_datum(3);
        let gd = Arc::clone(d.groupoid());
        let y = gd.object_by_name("y").unwrap();
        let lambda = d.tau().rebase(&gd, y);
        let there = transport(&d, y, &lambda).unwrap();
        assert!(there.verify(true).passed());
        let back = transport(&there, d.base(), d.tau()).unwrap();
        assert_eq!(back, d);

        // the datum of the non-recoverable action transports too
        let b2 = fixtures::b2_action(3);
        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(&gd, x).unwrap();
        let db2 = restrict(&b2, x, &tau).unwrap();
        let lam = tau.rebase(&gd, y);
        let there = transport(&db2, y, &lam).unwrap();
        assert!(there.verify(true).passed());
        // loop data is reindexed along conjugation by τ_y
        let h = gd.mor_by_name("h").unwrap();
        assert_eq!(there.loop_ideal(h), db2.loop_ideal(gd.corner(h, &tau)));
        assert_eq!(transport(&there, x, &tau).unwrap(), db2);
    }

    #[test]
    fn adjunction_reports() {
        // the group-type datum: every check passes and the counit is iso
        let d = fixtures::dat_datum(3);
        let rep = check_adjunction_datum(&d);
        assert!(rep.all_pass());
        assert!(rep.counit_iso);

        // the non-recoverable action: unit/counit/triangles pass, counit not iso
        let b2 = fixtures::b2_action(3);
        let gd = b2.groupoid();
        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(gd, x).unwrap();
        let rep = check_adjunction_action(&b2, x, &tau).unwrap();
        assert!(rep.all_pass());
        assert!(!rep.counit_iso);

        // a global action: counit iso iff recoverable at the chosen pair
        let gamma = fixtures::gamma22_action(3);
        let tau = Transversal::canonical(gamma.groupoid(), 0).unwrap();
        let rep = check_adjunction_action(&gamma, 0, &tau).unwrap();
        assert!(rep.all_pass());
        assert_eq!(rep.counit_iso, gamma.is_recoverable_at(&tau));
        assert!(rep.counit_iso);
    }

    #[test]
    fn datum_morphism_identity_passes() {
        let d = fixtures::dat_datum(3);
        let id = DatumMorphism::identity(&d);
        assert!(verify_datum_morphism(&id, &d, &d).unwrap().is_empty());
    }

    #[test]
    fn bad_iso_rejected_by_ring_layer() {
        assert_eq!(
            PartialRingIso::new(vec![(0, 1), (1, 1)]),
            Err(RingError::NotBijective)
        );
    }
}
