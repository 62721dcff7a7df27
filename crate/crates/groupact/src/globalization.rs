//! Globalization: presenting a partial action as the restriction of a
//! global one.
//!
//! A global action `(C_g, β_g)` on a ring B globalizes a partial action
//! `(A_g, α_g)` on an ideal A of B when
//!
//!   (G1) each `A_x` is an ideal of `C_x`,
//!   (G2) `A_g = A_{tgt g} ∩ β_g(A_{src g})`,
//!   (G3) `β_g` agrees with `α_g` on `A_{g⁻¹}`,
//!   (G4) `C_g = Σ_{tgt h = tgt g} β_h(A_{src h})`.
//!
//! For an extension `θ = extend(d)` of group-type data, a globalization is
//! assembled from three ingredients (the conditions (C1)–(C3)): the data is
//! group-type, the loop action has a globalization `(J_x, γ̃_(x))`, and the
//! transversal isomorphisms extend to isomorphisms `γ̃_{τ_y} : J_x → J_y`
//! inside B. Then `β_g = γ̃_{τ_{tgt g}} · γ̃_{corner g} · γ̃_{τ_{src g}}⁻¹`
//! with `C_g = J_{tgt g}` globalizes θ.
//!
//! Group-level globalizations are built by the enveloping quotient: atoms of
//! `J_x` are classes of pairs `(h, a)` with `h` a loop and `a` an atom of
//! `I_x`, identified by `(h, a) ~ (h·l⁻¹, γ_l(a))` whenever `a ∈ dom γ_l`,
//! with loops translating the first coordinate. The construction is not
//! trusted: its output is re-verified against (G1)–(G4).

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::action::{IsotropyAction, PartialAction};
use crate::datum::Datum;
use crate::dsu::UnionFind;
use crate::groupoid::Mor;
use crate::ring::{Ideal, PartialRingIso, SplitRing};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GlobError {
    #[error("(C1) violated: {0}")]
    C1Violation(String),
    #[error("(C2) violated: {0}")]
    C2Violation(String),
    #[error("(C3) violated: {0}")]
    C3Violation(String),
    #[error("atom `{0}` of the acted ring is missing from the enveloping ring")]
    AtomMissing(String),
    #[error("groupoids differ between the partial and the global action")]
    GroupoidMismatch,
    #[error("synthesis failed: {0}")]
    SynthesisFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GlobViolation {
    /// (G1): A_y is not contained in C_y.
    G1 { object: String },
    /// (G2): A_g ≠ A_{tgt g} ∩ β_g(A_{src g}).
    G2 { mor: String },
    /// (G3): β_g and α_g disagree at `atom` of A_{g⁻¹}.
    G3 { mor: String, atom: String },
    /// (G4): C_g ≠ Σ_{tgt h = tgt g} β_h(A_{src h}).
    G4 { mor: String },
}

/// Check (G1)–(G4) for `beta` (an action on a ring containing `alpha`'s by
/// named atoms) against the partial action `alpha`.
pub fn verify_globalization(
    alpha: &PartialAction,
    beta: &PartialAction,
) -> Result<Vec<GlobViolation>, GlobError> {
    if alpha.groupoid() != beta.groupoid() {
        return Err(GlobError::GroupoidMismatch);
    }
    let gd = alpha.groupoid();
    let a_ring = alpha.ring();
    let b_ring = beta.ring();
    let mut atom_map: HashMap<usize, usize> = HashMap::new();
    let mut map_ideal = |ideal: Ideal| -> Result<Ideal, GlobError> {
        let mut atoms = Vec::new();
        for a in ideal.atoms() {
            let b = match atom_map.get(&a) {
                Some(&b) => b,
                None => {
                    let name = a_ring.atom_name(a);
                    let b = b_ring
                        .atom_by_name(name)
                        .ok_or_else(|| GlobError::AtomMissing(name.to_string()))?;
                    atom_map.insert(a, b);
                    b
                }
            };
            atoms.push(b);
        }
        Ok(Ideal::from_atoms(&atoms))
    };

    let mut violations = Vec::new();
    for y in gd.objects() {
        let ay = map_ideal(alpha.ideal(gd.identity(y)))?;
        if !ay.is_subset(&beta.ideal(gd.identity(y))) {
            violations.push(GlobViolation::G1 { object: gd.object_name(y).into() });
        }
    }
    for g in gd.morphisms() {
        let a_g = map_ideal(alpha.ideal(g))?;
        let a_t = map_ideal(alpha.ideal(gd.identity(gd.tgt(g))))?;
        let a_s = map_ideal(alpha.ideal(gd.identity(gd.src(g))))?;
        if a_g != a_t.intersect(&beta.iso(g).image(a_s)) {
            violations.push(GlobViolation::G2 { mor: gd.mor_name(g).into() });
        }
        for atom in alpha.ideal(gd.inv(g)).atoms() {
            let b = map_ideal(Ideal::single(atom))?.atoms().next().unwrap();
            let through_alpha = alpha
                .iso(g)
                .map_atom(atom)
                .map(|img| map_ideal(Ideal::single(img)))
                .transpose()?
                .map(|i| i.atoms().next().unwrap());
            if beta.iso(g).map_atom(b) != through_alpha {
                violations.push(GlobViolation::G3 {
                    mor: gd.mor_name(g).into(),
                    atom: a_ring.atom_name(atom).into(),
                });
            }
        }
    }
    for g in gd.morphisms() {
        let mut total = Ideal::EMPTY;
        for h in gd.morphisms() {
            if gd.tgt(h) == gd.tgt(g) {
                let a_s = map_ideal(alpha.ideal(gd.identity(gd.src(h))))?;
                total = total.union(&beta.iso(h).image(a_s));
            }
        }
        if total != beta.ideal(g) {
            violations.push(GlobViolation::G4 { mor: gd.mor_name(g).into() });
        }
    }
    Ok(violations)
}

/// The enveloping globalization of a partial group action.
#[derive(Debug, Clone)]
pub struct GroupGlobalization {
    /// The enveloping ring J. Atoms in the image of the embedding keep
    /// their original names; the others are named `loop~atom`.
    pub ring: Arc<SplitRing>,
    /// The global action of the group on J (same one-object groupoid).
    pub action: PartialAction,
    /// Atom of the acted ideal (original indices) → atom of J.
    pub embedding: Vec<(usize, usize)>,
}

/// Build the enveloping action of a partial group action by the quotient of
/// pairs construction.
pub fn globalize_group(group: &IsotropyAction) -> GroupGlobalization {
    let pa = &group.action;
    let gd = pa.groupoid();
    debug_assert_eq!(gd.num_objects(), 1);
    let k = gd.num_morphisms();
    let carrier = pa.ideal(gd.identity(0));
    let atoms: Vec<usize> = carrier.atoms().collect();
    let pos: HashMap<usize, usize> = atoms.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let idx = |h: Mor, i: usize| h * atoms.len() + i;

    let mut uf = UnionFind::new(k * atoms.len());
    for l in gd.morphisms() {
        let li = gd.inv(l);
        for &a in &atoms {
            if let Some(b) = pa.iso(l).map_atom(a) {
                // (h, a) ~ (h·l⁻¹, γ_l(a))
                for h in gd.morphisms() {
                    let hl = gd.compose(h, li).expect("group is total");
                    uf.union(idx(h, pos[&a]), idx(hl, pos[&b]));
                }
            }
        }
    }

    // classes ordered by minimal member
    let mut members: HashMap<usize, Vec<usize>> = HashMap::new();
    for h in 0..k {
        for i in 0..atoms.len() {
            members.entry(uf.find(idx(h, i))).or_default().push(idx(h, i));
        }
    }
    let mut classes: Vec<Vec<usize>> = members.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    let mut class_of = vec![0usize; k * atoms.len()];
    for (ci, c) in classes.iter().enumerate() {
        for &m in c {
            class_of[m] = ci;
        }
    }

    let names: Vec<String> = classes
        .iter()
        .map(|c| {
            let id_member = c.iter().find(|&&m| m / atoms.len() == gd.identity(0));
            match id_member {
                Some(&m) => pa.ring().atom_name(atoms[m % atoms.len()]).to_string(),
                None => {
                    let m = c[0];
                    format!(
                        "{}~{}",
                        gd.mor_name(m / atoms.len()),
                        pa.ring().atom_name(atoms[m % atoms.len()])
                    )
                }
            }
        })
        .collect();
    let j_ring = Arc::new(SplitRing::new(pa.ring().p(), names).expect("distinct class names"));
    let full = Ideal::full(classes.len());

    let isos: Vec<PartialRingIso> = gd
        .morphisms()
        .map(|g| {
            let mut pairs = Vec::with_capacity(classes.len());
            for (ci, c) in classes.iter().enumerate() {
                let m = c[0];
                let (h, i) = (m / atoms.len(), m % atoms.len());
                let gh = gd.compose(g, h).expect("group is total");
                pairs.push((ci, class_of[idx(gh, i)]));
            }
            PartialRingIso::new(pairs).expect("translation is a bijection")
        })
        .collect();
    let action = PartialAction::new(
        Arc::clone(gd),
        Arc::clone(&j_ring),
        vec![full; k],
        isos,
    );
    let embedding = atoms
        .iter()
        .enumerate()
        .map(|(i, &a)| (a, class_of[idx(gd.identity(0), i)]))
        .collect();
    GroupGlobalization { ring: j_ring, action, embedding }
}

/// The (C1)–(C3) package: a datum plus a globalization of its loop action
/// and compatible enveloping data inside a ring B.
#[derive(Debug, Clone, PartialEq)]
pub struct GlobalizationData {
    pub datum: Datum,
    pub ring_b: Arc<SplitRing>,
    /// J_y per object, as ideals of B.
    pub j_ideals: Vec<Ideal>,
    /// γ̃_{τ_y} : J_x → J_y per object; the base entry is the identity of J_x.
    pub tilde_tau: Vec<PartialRingIso>,
    /// The global loop action (J_x, γ̃_(x)) over B.
    pub tilde_group: IsotropyAction,
}

impl GlobalizationData {
    /// Check (C1)–(C3).
    pub fn check(&self) -> Result<(), GlobError> {
        let d = &self.datum;
        let gd = d.groupoid();
        let x = d.base();
        if !d.is_group_type_data() {
            return Err(GlobError::C1Violation(
                "datum is not group-type: some I_{τ_y⁻¹} ≠ I_x or I_{τ_y} ≠ I_y".into(),
            ));
        }
        // (C2): γ̃_(x) is a verified global action on J_x globalizing γ_(x)
        let jx = self.j_ideals[x];
        let tg = &self.tilde_group.action;
        if tg.ideal(tg.groupoid().identity(0)) != jx {
            return Err(GlobError::C2Violation("loop globalization does not live on J_x".into()));
        }
        if !tg.verify(false).passed() || !tg.is_global() {
            return Err(GlobError::C2Violation("loop globalization is not a global action".into()));
        }
        let vs = verify_globalization(&d.group().action, tg)?;
        if let Some(v) = vs.first() {
            return Err(GlobError::C2Violation(format!(
                "loop globalization fails the group case: {v:?}"
            )));
        }
        // (C3): γ̃_{τ_y} : J_x → J_y extends γ_{τ_y}, and I_y is an ideal of J_y
        if self.tilde_tau[x] != PartialRingIso::identity(jx) {
            return Err(GlobError::C3Violation("base entry must be the identity of J_x".into()));
        }
        for y in gd.objects() {
            let tt = &self.tilde_tau[y];
            if tt.dom() != jx || tt.cod() != self.j_ideals[y] {
                return Err(GlobError::C3Violation(format!(
                    "γ̃_{} must run J_x → J_y",
                    gd.object_name(y)
                )));
            }
            let iy = self.map_ideal(d.ideal(y))?;
            if !iy.is_subset(&self.j_ideals[y]) {
                return Err(GlobError::C3Violation(format!(
                    "I_{} is not an ideal of J_{}",
                    gd.object_name(y),
                    gd.object_name(y)
                )));
            }
            for atom in d.tau_iso(y).dom().atoms() {
                let b = self.map_atom(atom)?;
                let want = self.map_atom(d.tau_iso(y).map_atom(atom).expect("in domain"))?;
                if tt.map_atom(b) != Some(want) {
                    return Err(GlobError::C3Violation(format!(
                        "γ̃_{} does not extend γ_{} at atom {}",
                        gd.object_name(y),
                        gd.object_name(y),
                        d.ring().atom_name(atom)
                    )));
                }
            }
        }
        Ok(())
    }

    fn map_atom(&self, a: usize) -> Result<usize, GlobError> {
        let name = self.datum.ring().atom_name(a);
        self.ring_b
            .atom_by_name(name)
            .ok_or_else(|| GlobError::AtomMissing(name.to_string()))
    }

    fn map_ideal(&self, ideal: Ideal) -> Result<Ideal, GlobError> {
        let mut atoms = Vec::new();
        for a in ideal.atoms() {
            atoms.push(self.map_atom(a)?);
        }
        Ok(Ideal::from_atoms(&atoms))
    }
}

/// Assemble the global action `β_g = γ̃_{τ_{tgt g}} · γ̃_{corner g} · γ̃_{τ_{src g}}⁻¹`
/// with `C_g = J_{tgt g}` from a checked (C1)–(C3) package.
pub fn build_globalization(data: &GlobalizationData) -> Result<PartialAction, GlobError> {
    data.check()?;
    let d = &data.datum;
    let gd = d.groupoid();
    let mut ideals = vec![Ideal::EMPTY; gd.num_morphisms()];
    let mut isos = vec![PartialRingIso::empty(); gd.num_morphisms()];
    for g in gd.morphisms() {
        let gx = gd.corner(g, d.tau());
        let local = d.group().local(gx).expect("corner is a loop");
        let from_src = data.tilde_tau[gd.src(g)].inverse();
        let through = PartialRingIso::compose(data.tilde_group.action.iso(local), &from_src);
        let beta = PartialRingIso::compose(&data.tilde_tau[gd.tgt(g)], &through);
        ideals[g] = data.j_ideals[gd.tgt(g)];
        debug_assert_eq!(beta.cod(), ideals[g]);
        isos[g] = beta;
    }
    Ok(PartialAction::new(
        Arc::clone(gd),
        Arc::clone(&data.ring_b),
        ideals,
        isos,
    ))
}

/// Globalizability of the extension of a datum: in the split model every
/// ideal is unital, so this reduces to the loop action being globalizable.
/// The check is run structurally rather than assumed: the enveloping
/// construction is built and verified against the group case of (G1)–(G4).
pub fn is_globalizable(d: &Datum) -> (bool, Vec<String>) {
    let mut notes = Vec::new();
    let gd = d.groupoid();
    let ring = d.ring();
    let mut ok = true;
    for y in gd.objects() {
        let unit = ring.idem(d.tau_iso(y).dom());
        if ring.mul(&unit, &unit) != unit {
            ok = false;
            notes.push(format!("I_{{τ_{}⁻¹}} has no identity", gd.object_name(y)));
        }
    }
    let env = globalize_group(d.group());
    match verify_globalization(&d.group().action, &env.action) {
        Ok(vs) if vs.is_empty() => {
            notes.push(format!(
                "loop action globalizes; enveloping ring has {} atoms",
                env.ring.num_atoms()
            ));
        }
        Ok(vs) => {
            ok = false;
            notes.push(format!("enveloping action fails the group case: {:?}", vs[0]));
        }
        Err(e) => {
            ok = false;
            notes.push(format!("enveloping action could not be compared: {e}"));
        }
    }
    (ok, notes)
}

/// Synthesize (C2)/(C3) data for group-type data with pairwise disjoint
/// object ideals: J_y are relabeled copies of the enveloping ring of the
/// loop action, B is their disjoint union, and γ̃_{τ_y} is the relabeling.
pub fn synthesize_globalization_data(d: &Datum) -> Result<GlobalizationData, GlobError> {
    if !d.is_group_type_data() {
        return Err(GlobError::SynthesisFailed("datum is not group-type".into()));
    }
    let gd = d.groupoid();
    let ring = d.ring();
    let x = d.base();
    {
        let mut seen = Ideal::EMPTY;
        for y in gd.objects() {
            if !seen.disjoint(&d.ideal(y)) {
                return Err(GlobError::SynthesisFailed(
                    "object ideals overlap; no disjoint enveloping sum exists".into(),
                ));
            }
            seen = seen.union(&d.ideal(y));
        }
    }
    let env = globalize_group(d.group());
    let emb: HashMap<usize, usize> = env.embedding.iter().copied().collect();
    let emb_rev: HashMap<usize, usize> = env.embedding.iter().map(|&(a, c)| (c, a)).collect();

    // name the copy of each J_x atom at each object
    let mut names: Vec<String> = Vec::new();
    let mut block: Vec<Vec<usize>> = Vec::new(); // per object, B-atom per class
    for y in gd.objects() {
        let mut this = Vec::new();
        for c in 0..env.ring.num_atoms() {
            let name = match emb_rev.get(&c) {
                Some(&a) => {
                    let img = d.tau_iso(y).map_atom(a).expect("group-type: dom is I_x");
                    ring.atom_name(img).to_string()
                }
                None => {
                    if y == x {
                        env.ring.atom_name(c).to_string()
                    } else {
                        format!("{}~{}", gd.object_name(y), env.ring.atom_name(c))
                    }
                }
            };
            this.push(names.len());
            names.push(name);
        }
        block.push(this);
    }
    let ring_b = Arc::new(
        SplitRing::new(ring.p(), names)
            .map_err(|e| GlobError::SynthesisFailed(format!("bad enveloping atoms: {e}")))?,
    );
    let j_ideals: Vec<Ideal> =
        block.iter().map(|b| Ideal::from_atoms(b)).collect();
    let tilde_tau: Vec<PartialRingIso> = gd
        .objects()
        .map(|y| {
            PartialRingIso::new(
                (0..env.ring.num_atoms()).map(|c| (block[x][c], block[y][c])).collect(),
            )
            .expect("blockwise relabeling")
        })
        .collect();
    let tg_isos: Vec<PartialRingIso> = env
        .action
        .groupoid()
        .morphisms()
        .map(|g| {
            PartialRingIso::new(
                env.action
                    .iso(g)
                    .pairs()
                    .iter()
                    .map(|&(s, t)| (block[x][s], block[x][t]))
                    .collect(),
            )
            .expect("relabel of a bijection")
        })
        .collect();
    let tilde_group = IsotropyAction {
        action: PartialAction::new(
            Arc::clone(env.action.groupoid()),
            Arc::clone(&ring_b),
            vec![j_ideals[x]; env.action.groupoid().num_morphisms()],
            tg_isos,
        ),
        loops: d.group().loops.clone(),
    };
    // sanity: embedded I_x atoms kept their ambient names
    for (&a, &c) in emb.iter() {
        debug_assert_eq!(
            ring_b.atom_name(block[x][c]),
            ring.atom_name(d.tau_iso(x).map_atom(a).unwrap())
        );
    }
    Ok(GlobalizationData {
        datum: d.clone(),
        ring_b,
        j_ideals,
        tilde_tau,
        tilde_group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::extend;
    use crate::fixtures;
    use crate::groupoid::Transversal;

    /// Naive fixed-point closure of the pair relation, used as an oracle for
    /// the union-find construction.
    fn closure_classes(group: &IsotropyAction) -> usize {
        let pa = &group.action;
        let gd = pa.groupoid();
        let atoms: Vec<usize> = pa.ideal(gd.identity(0)).atoms().collect();
        let mut cls: Vec<Vec<(Mor, usize)>> = gd
            .morphisms()
            .flat_map(|h| atoms.iter().map(move |&a| vec![(h, a)]))
            .collect();
        loop {
            let mut merged = false;
            'outer: for i in 0..cls.len() {
                for j in i + 1..cls.len() {
                    let related = cls[i].iter().any(|&(h, a)| {
                        cls[j].iter().any(|&(h2, b)| {
                            gd.morphisms().any(|l| {
                                pa.iso(l).map_atom(a) == Some(b)
                                    && gd.compose(h, gd.inv(l)).unwrap() == h2
                            })
                        })
                    }) || cls[j].iter().any(|&(h, a)| {
                        cls[i].iter().any(|&(h2, b)| {
                            gd.morphisms().any(|l| {
                                pa.iso(l).map_atom(a) == Some(b)
                                    && gd.compose(h, gd.inv(l)).unwrap() == h2
                            })
                        })
                    });
                    if related {
                        let tail = cls.swap_remove(j);
                        cls[i].extend(tail);
                        merged = true;
                        break 'outer;
                    }
                }
            }
            if !merged {
                return cls.len();
            }
        }
    }

    #[test]
    fn enveloping_action_of_a_global_input_is_a_relabeling() {
        let gamma = fixtures::gamma22_action(3);
        let res = gamma.restrict_to_isotropy(0).unwrap();
        let env = globalize_group(&res);
        assert_eq!(env.ring.num_atoms(), res.action.ideal(0).len());
        assert!(env.action.is_global());
        assert!(verify_globalization(&res.action, &env.action).unwrap().is_empty());
    }

    #[test]
    fn enveloping_atoms_match_the_closure_oracle() {
        // identity action of Z₂ on ke3 inside I_x = {e1, e3}: three classes
        let d = fixtures::dat_datum(3);
        let env = globalize_group(d.group());
        assert_eq!(env.ring.num_atoms(), 3);
        assert_eq!(env.ring.num_atoms(), closure_classes(d.group()));
        assert!(verify_globalization(&d.group().action, &env.action).unwrap().is_empty());

        // Z₂ acting by the identity on ke1 inside F₃², I_x the whole ring
        let z2 = Arc::new(crate::groupoid::cyclic_group(2));
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 2));
        let full = ring.full_ideal();
        let pa = PartialAction::new(
            Arc::clone(&z2),
            ring,
            vec![full, Ideal::single(0)],
            vec![
                PartialRingIso::identity(full),
                PartialRingIso::identity(Ideal::single(0)),
            ],
        );
        assert!(pa.verify(true).passed());
        let group = IsotropyAction { action: pa, loops: vec![0, 1] };
        let env = globalize_group(&group);
        assert_eq!(env.ring.num_atoms(), 3);
        assert_eq!(closure_classes(&group), 3);
        assert!(verify_globalization(&group.action, &env.action).unwrap().is_empty());

        // minimality: every enveloping atom is hit by some translate of I_x
        let gd = env.action.groupoid();
        let emb = Ideal::from_atoms(
            &env.embedding.iter().map(|&(_, c)| c).collect::<Vec<_>>(),
        );
        let mut covered = Ideal::EMPTY;
        for g in gd.morphisms() {
            covered = covered.union(&env.action.iso(g).image(emb));
        }
        assert_eq!(covered, env.ring.full_ideal());
    }

    #[test]
    fn glob_fixture_passes_and_builds_the_expected_action() {
        let data = fixtures::glob_data(3);
        assert!(data.check().is_ok());
        let beta = build_globalization(&data).unwrap();
        assert!(beta.verify(true).passed());
        assert!(beta.is_global());
        let theta = extend(&data.datum);
        assert!(verify_globalization(&theta, &beta).unwrap().is_empty());
    }

    #[test]
    fn already_global_data_globalizes_to_itself() {
        // the global Γ-action with J_y = I_y and γ̃ the original maps
        let d = fixtures::gamma22_datum(3);
        let action = fixtures::gamma22_action(3);
        let gd = d.groupoid();
        let tilde_group = d.group().clone();
        let data = GlobalizationData {
            datum: d.clone(),
            ring_b: Arc::clone(d.ring()),
            j_ideals: gd.objects().map(|y| d.ideal(y)).collect(),
            tilde_tau: gd.objects().map(|y| d.tau_iso(y).clone()).collect(),
            tilde_group,
        };
        assert!(data.check().is_ok());
        let beta = build_globalization(&data).unwrap();
        assert_eq!(beta, action);
    }

    #[test]
    fn c_violations_are_reported() {
        let good = fixtures::glob_data(3);

        // break (C1): shrink the domain of γ_{τ_y} in the datum
        let d = &good.datum;
        let gd = d.groupoid();
        let y = gd.object_by_name("y").unwrap();
        let mut tau_isos: Vec<PartialRingIso> =
            gd.objects().map(|o| d.tau_iso(o).clone()).collect();
        tau_isos[y] = tau_isos[y].restrict(Ideal::single(0)).unwrap();
        let smaller = Datum::new(
            Arc::clone(gd),
            Arc::clone(d.ring()),
            d.tau().clone(),
            gd.objects().map(|o| d.ideal(o)).collect(),
            tau_isos,
            d.group().clone(),
        )
        .unwrap();
        assert!(smaller.verify(true).passed());
        let broken = GlobalizationData { datum: smaller, ..good.clone() };
        assert!(matches!(broken.check(), Err(GlobError::C1Violation(_))));

        // break (C2): make the loop globalization partial
        let mut tg = good.tilde_group.clone();
        let jx = good.j_ideals[0];
        let small = Ideal::from_atoms(&[0, 1]);
        tg.action = PartialAction::new(
            Arc::clone(tg.action.groupoid()),
            Arc::clone(&good.ring_b),
            vec![jx, small],
            vec![
                PartialRingIso::identity(jx),
                good.tilde_group.action.iso(1).restrict(small).unwrap(),
            ],
        );
        let broken = GlobalizationData { tilde_group: tg, ..good.clone() };
        assert!(matches!(broken.check(), Err(GlobError::C2Violation(_))));

        // break (C3): detach γ̃_{τ_y} from γ_{τ_y}
        let mut tilde_tau = good.tilde_tau.clone();
        tilde_tau[y] = PartialRingIso::new(vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let broken = GlobalizationData { tilde_tau, ..good.clone() };
        assert!(matches!(broken.check(), Err(GlobError::C3Violation(_))));
    }

    #[test]
    fn corrupted_beta_fails_the_right_conditions() {
        let data = fixtures::glob_data(3);
        let beta = build_globalization(&data).unwrap();
        let theta = extend(&data.datum);
        let gd = theta.groupoid();
        let h = gd.mor_by_name("h").unwrap();
        let l = gd.mor_by_name("l").unwrap();

        // β_h := identity of J_y. θ_h is already the identity on ke2, so
        // (G3) still holds; the failure shows up in (G2) at h.
        let mut isos: Vec<PartialRingIso> = gd.morphisms().map(|g| beta.iso(g).clone()).collect();
        isos[h] = PartialRingIso::identity(beta.ideal(h));
        let bad = PartialAction::new(
            Arc::clone(gd),
            Arc::clone(beta.ring()),
            gd.morphisms().map(|g| beta.ideal(g)).collect(),
            isos,
        );
        let vs = verify_globalization(&theta, &bad).unwrap();
        assert!(vs.contains(&GlobViolation::G2 { mor: "h".into() }));

        // β_l := γσ on J_x genuinely disagrees with θ_l on A_{l⁻¹}: (G3) at l.
        let m = gd.mor_by_name("m").unwrap();
        let mut isos: Vec<PartialRingIso> = gd.morphisms().map(|g| beta.iso(g).clone()).collect();
        isos[l] = beta.iso(m).clone();
        let bad = PartialAction::new(
            Arc::clone(gd),
            Arc::clone(beta.ring()),
            gd.morphisms().map(|g| beta.ideal(g)).collect(),
            isos,
        );
        let vs = verify_globalization(&theta, &bad).unwrap();
        assert!(vs.iter().any(|v| matches!(v, GlobViolation::G3 { mor, .. } if mor == "l")));
    }

    #[test]
    fn self_globalization_of_a_global_action() {
        let gamma = fixtures::gamma22_action(3);
        assert!(verify_globalization(&gamma, &gamma).unwrap().is_empty());
    }

    #[test]
    fn globalizability_in_the_split_model() {
        let (ok, _) = is_globalizable(&fixtures::dat_datum(3));
        assert!(ok);
        let (ok, _) = is_globalizable(&fixtures::gamma22_datum(3));
        assert!(ok);
        // the restriction datum of the non-recoverable action is still globalizable
        let b2 = fixtures::b2_action(3);
        let gd = b2.groupoid();
        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(gd, x).unwrap();
        let d = crate::datum::restrict(&b2, x, &tau).unwrap();
        let (ok, _) = is_globalizable(&d);
        assert!(ok);
    }

    #[test]
    fn synthesized_data_globalizes_the_extension() {
        let d = fixtures::dat_datum(3);
        let data = synthesize_globalization_data(&d).unwrap();
        assert!(data.check().is_ok());
        let beta = build_globalization(&data).unwrap();
        assert!(beta.is_global());
        // B is the disjoint union of the J_y
        assert_eq!(data.ring_b.num_atoms(), 6);
        assert!(data.j_ideals[0].disjoint(&data.j_ideals[1]));
        let theta = extend(&d);
        assert!(verify_globalization(&theta, &beta).unwrap().is_empty());
    }
}
