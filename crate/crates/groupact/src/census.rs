//! Deterministic enumeration of partial actions and restriction data over a
//! fixed groupoid and ring, with classification tabulations.
//!
//! The candidate space factors over object-ideal assignments ("cells", the
//! cartesian product of one ideal per object); the candidate budget is
//! split evenly across cells so truncation never starves whole regions of
//! the space. Within a cell, candidates are enumerated lexicographically by
//! inverse-pair choice (ideal masks ascending, then atom-permutation
//! order). Cells fan out in parallel and results are merged in cell order,
//! so output order is independent of the thread count.

use std::sync::Arc;

use itertools::Itertools;
use serde::Serialize;

use crate::action::{IsotropyAction, PartialAction};
use crate::datum::{extend, restrict, Datum};
use crate::galois::GaloisSetup;
use crate::groupoid::{Groupoid, Mor, Obj, Transversal};
use crate::par;
use crate::ring::{Ideal, PartialRingIso, SplitRing};

#[derive(Debug, Clone, Copy)]
pub struct CensusOpts {
    /// Cap on candidates examined (not candidates kept).
    pub max_candidates: u64,
}

impl Default for CensusOpts {
    fn default() -> Self {
        CensusOpts { max_candidates: 1_000_000 }
    }
}

#[derive(Debug, Clone)]
pub struct ActionCensus {
    pub actions: Vec<PartialAction>,
    pub candidates: u64,
    pub truncated: bool,
}

#[derive(Debug, Clone)]
pub struct DatumCensus {
    pub datums: Vec<Datum>,
    pub candidates: u64,
    pub truncated: bool,
}

/// All subsets of an ideal, ascending by selection index.
fn subsets(of: Ideal) -> Vec<Ideal> {
    let atoms: Vec<usize> = of.atoms().collect();
    (0..1u64 << atoms.len())
        .map(|sel| {
            let chosen: Vec<usize> = atoms
                .iter()
                .enumerate()
                .filter(|&(i, _)| sel >> i & 1 == 1)
                .map(|(_, &a)| a)
                .collect();
            Ideal::from_atoms(&chosen)
        })
        .collect()
}

/// All bijections dom → cod between equal-sized ideals, in lexicographic
/// order of the image sequence.
fn bijections(dom: Ideal, cod: Ideal) -> Vec<PartialRingIso> {
    let dom_atoms: Vec<usize> = dom.atoms().collect();
    let cod_atoms: Vec<usize> = cod.atoms().collect();
    if dom_atoms.is_empty() {
        return vec![PartialRingIso::empty()];
    }
    cod_atoms
        .iter()
        .copied()
        .permutations(cod_atoms.len())
        .map(|perm| {
            PartialRingIso::new(dom_atoms.iter().copied().zip(perm).collect())
                .expect("permutation is a bijection")
        })
        .collect()
}

/// One enumeration choice for an inverse-closed set of arrows.
#[derive(Debug, Clone)]
struct ArrowChoice {
    /// (morphism, its ideal, its iso) — covers both members of a cross pair.
    parts: Vec<(Mor, Ideal, PartialRingIso)>,
}

enum Rep {
    SelfInv(Mor),
    Cross(Mor, Mor),
}

fn pair_reps(gd: &Groupoid) -> Vec<Rep> {
    gd.morphisms()
        .filter(|&g| !gd.is_identity(g))
        .filter_map(|g| {
            let gi = gd.inv(g);
            if gi == g {
                Some(Rep::SelfInv(g))
            } else if g < gi {
                Some(Rep::Cross(g, gi))
            } else {
                None
            }
        })
        .collect()
}

fn choices_for(rep: &Rep, gd: &Groupoid, cell: &[Ideal]) -> Vec<ArrowChoice> {
    match *rep {
        Rep::SelfInv(g) => {
            let mut out = Vec::new();
            for s in subsets(cell[gd.tgt(g)]) {
                for iso in bijections(s, s) {
                    // self-inverse arrows need involutive isos; anything else
                    // fails (P4) at (g, g) anyway, so skip it here
                    if PartialRingIso::compose(&iso, &iso) == PartialRingIso::identity(s) {
                        out.push(ArrowChoice { parts: vec![(g, s, iso)] });
                    }
                }
            }
            out
        }
        Rep::Cross(g, gi) => {
            let mut out = Vec::new();
            for dom in subsets(cell[gd.src(g)]) {
                for cod in subsets(cell[gd.tgt(g)]) {
                    if dom.len() != cod.len() {
                        continue;
                    }
                    for iso in bijections(dom, cod) {
                        let inv = iso.inverse();
                        out.push(ArrowChoice {
                            parts: vec![(g, cod, iso), (gi, dom, inv)],
                        });
                    }
                }
            }
            out
        }
    }
}

/// All object-ideal assignments, lexicographic.
fn cells(gd: &Groupoid, ring: &SplitRing) -> Vec<Vec<Ideal>> {
    let per_object = subsets(ring.full_ideal());
    let mut out: Vec<Vec<Ideal>> = vec![Vec::new()];
    for _ in gd.objects() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                per_object.iter().map(move |&i| {
                    let mut v = prefix.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
    }
    out
}

fn assemble(
    gd: &Arc<Groupoid>,
    ring: &Arc<SplitRing>,
    cell: &[Ideal],
    choice_lists: &[Vec<ArrowChoice>],
    indices: &[usize],
) -> PartialAction {
    let mut ideals = vec![Ideal::EMPTY; gd.num_morphisms()];
    let mut isos = vec![PartialRingIso::empty(); gd.num_morphisms()];
    for y in gd.objects() {
        let id = gd.identity(y);
        ideals[id] = cell[y];
        isos[id] = PartialRingIso::identity(cell[y]);
    }
    for (list, &i) in choice_lists.iter().zip(indices) {
        for (g, ideal, iso) in &list[i].parts {
            ideals[*g] = *ideal;
            isos[*g] = iso.clone();
        }
    }
    PartialAction::new(Arc::clone(gd), Arc::clone(ring), ideals, isos)
}

/// Enumerate verified partial actions, visiting at most `max_candidates`
/// candidates split evenly over the object-ideal cells.
pub fn enumerate_actions(
    gd: &Arc<Groupoid>,
    ring: &Arc<SplitRing>,
    opts: CensusOpts,
) -> ActionCensus {
    let all_cells = cells(gd, ring);
    let per_cell = std::cmp::max(1, opts.max_candidates / all_cells.len() as u64);
    let reps = pair_reps(gd);
    let results = par::map_collect(all_cells.len(), |ci| {
        let cell = &all_cells[ci];
        let choice_lists: Vec<Vec<ArrowChoice>> =
            reps.iter().map(|r| choices_for(r, gd, cell)).collect();
        let space: u128 = choice_lists.iter().map(|l| l.len() as u128).product();
        let take = std::cmp::min(space, per_cell as u128) as u64;
        let mut found = Vec::new();
        let mut indices = vec![0usize; choice_lists.len()];
        for _ in 0..take {
            let cand = assemble(gd, ring, cell, &choice_lists, &indices);
            if cand.verify(false).passed() {
                found.push(cand);
            }
            // odometer, last component fastest
            for pos in (0..indices.len()).rev() {
                indices[pos] += 1;
                if indices[pos] < choice_lists[pos].len() {
                    break;
                }
                indices[pos] = 0;
            }
            if choice_lists.is_empty() {
                break;
            }
        }
        (found, take, space > per_cell as u128)
    });
    let mut census = ActionCensus { actions: Vec::new(), candidates: 0, truncated: false };
    for (found, take, trunc) in results {
        census.actions.extend(found);
        census.candidates += take;
        census.truncated |= trunc;
    }
    census
}

/// Verified group actions of the isotropy groupoid on a fixed carrier ideal.
fn group_action_choices(
    group_gd: &Arc<Groupoid>,
    ring: &Arc<SplitRing>,
    carrier: Ideal,
) -> Vec<PartialAction> {
    let reps = pair_reps(group_gd);
    let cell = vec![carrier];
    let choice_lists: Vec<Vec<ArrowChoice>> =
        reps.iter().map(|r| choices_for(r, group_gd, &cell)).collect();
    let space: u128 = choice_lists.iter().map(|l| l.len() as u128).product();
    let mut out = Vec::new();
    let mut indices = vec![0usize; choice_lists.len()];
    for _ in 0..space {
        let cand = assemble(group_gd, ring, &cell, &choice_lists, &indices);
        if cand.verify(false).passed() {
            out.push(cand);
        }
        for pos in (0..indices.len()).rev() {
            indices[pos] += 1;
            if indices[pos] < choice_lists[pos].len() {
                break;
            }
            indices[pos] = 0;
        }
        if choice_lists.is_empty() {
            break;
        }
    }
    out
}

/// Enumerate verified restriction data at `(x, τ)`: object ideals, one
/// transversal isomorphism per non-base object, and a loop action on the
/// base ideal.
pub fn enumerate_datums(
    gd: &Arc<Groupoid>,
    ring: &Arc<SplitRing>,
    x: Obj,
    tau: &Transversal,
    opts: CensusOpts,
) -> DatumCensus {
    let all_cells = cells(gd, ring);
    let per_cell = std::cmp::max(1, opts.max_candidates / all_cells.len() as u64);
    let (group_gd, loops) = gd.isotropy(x).expect("base exists");
    let group_gd = Arc::new(group_gd);
    let results = par::map_collect(all_cells.len(), |ci| {
        let cell = &all_cells[ci];
        let mut lists: Vec<Vec<ArrowChoice>> = Vec::new();
        for y in gd.objects() {
            if y == x {
                continue;
            }
            // pseudo-rep for γ_{τ_y}: dom ⊆ I_x, cod ⊆ I_y
            let mut choices = Vec::new();
            for dom in subsets(cell[x]) {
                for cod in subsets(cell[y]) {
                    if dom.len() != cod.len() {
                        continue;
                    }
                    for iso in bijections(dom, cod) {
                        choices.push(ArrowChoice { parts: vec![(y, cod, iso)] });
                    }
                }
            }
            lists.push(choices);
        }
        let groups = group_action_choices(&group_gd, ring, cell[x]);
        let space: u128 = lists.iter().map(|l| l.len() as u128).product::<u128>()
            * groups.len().max(1) as u128;
        let take = std::cmp::min(space, per_cell as u128) as u64;
        let mut found = Vec::new();
        let mut indices = vec![0usize; lists.len() + 1];
        if groups.is_empty() {
            return (found, 0u64, false);
        }
        for _ in 0..take {
            let mut tau_isos = vec![PartialRingIso::identity(cell[x]); gd.num_objects()];
            let mut pos = 0;
            for y in gd.objects() {
                if y == x {
                    continue;
                }
                tau_isos[y] = lists[pos][indices[pos]].parts[0].2.clone();
                pos += 1;
            }
            let group = IsotropyAction {
                action: groups[indices[lists.len()]].clone(),
                loops: loops.clone(),
            };
            if let Ok(d) = Datum::new(
                Arc::clone(gd),
                Arc::clone(ring),
                tau.clone(),
                cell.clone(),
                tau_isos,
                group,
            ) {
                if d.verify(false).passed() {
                    found.push(d);
                }
            }
            for p in (0..indices.len()).rev() {
                indices[p] += 1;
                let limit = if p == lists.len() { groups.len() } else { lists[p].len() };
                if indices[p] < limit {
                    break;
                }
                indices[p] = 0;
            }
        }
        (found, take, space > per_cell as u128)
    });
    let mut census = DatumCensus { datums: Vec::new(), candidates: 0, truncated: false };
    for (found, take, trunc) in results {
        census.datums.extend(found);
        census.candidates += take;
        census.truncated |= trunc;
    }
    census
}

/// Per-action evaluation of the recovery conditions over every base and
/// transversal:
/// (a) extend(restrict(α)) == α,
/// (b) A_g ⊆ A_{τ_{tgt g}} ∩ A_{g·τ_{src g}} off the identities,
/// (c) A_g ⊆ A_{τ_{tgt g}} off the identities.
/// The three are theorems-equal; disagreements are counted, not repaired.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ActionCensusReport {
    pub candidates: u64,
    pub truncated: bool,
    pub valid: usize,
    pub global: usize,
    pub group_type_somewhere: usize,
    pub recoverable: usize,
    pub pairs_evaluated: usize,
    pub condition_disagreements: usize,
}

pub fn classify_actions(census: &ActionCensus) -> ActionCensusReport {
    let rows = par::map_collect(census.actions.len(), |i| {
        let a = &census.actions[i];
        let gd = a.groupoid();
        let mut global = a.is_global();
        let mut group_type = false;
        let mut recover = false;
        let mut pairs = 0usize;
        let mut disagreements = 0usize;
        for x in gd.objects() {
            for tau in gd.transversals(x).expect("connected") {
                pairs += 1;
                let ca = restrict(a, x, &tau)
                    .map(|d| extend(&d) == *a)
                    .unwrap_or(false);
                let cb = gd.morphisms().filter(|&g| !gd.is_identity(g)).all(|g| {
                    let right = gd.compose(g, tau.pick[gd.src(g)]).expect("src");
                    a.ideal(g).is_subset(&a.ideal(tau.pick[gd.tgt(g)]))
                        && a.ideal(g).is_subset(&a.ideal(right))
                });
                let cc = gd
                    .morphisms()
                    .filter(|&g| !gd.is_identity(g))
                    .all(|g| a.ideal(g).is_subset(&a.ideal(tau.pick[gd.tgt(g)])));
                if !(ca == cb && cb == cc) {
                    disagreements += 1;
                }
                recover |= cc;
                group_type |= a.is_group_type(&tau);
            }
        }
        global &= true;
        (global, group_type, recover, pairs, disagreements)
    });
    let mut report = ActionCensusReport {
        candidates: census.candidates,
        truncated: census.truncated,
        valid: census.actions.len(),
        ..Default::default()
    };
    for (global, group_type, recover, pairs, disagreements) in rows {
        report.global += usize::from(global);
        report.group_type_somewhere += usize::from(group_type);
        report.recoverable += usize::from(recover);
        report.pairs_evaluated += pairs;
        report.condition_disagreements += disagreements;
    }
    report
}

/// Datum classification: extension axioms, the round-trip identity, the
/// closed-form ranges, and — on instances meeting the standing hypotheses —
/// the four-way equivalence, checked across every transversal of the base.
#[derive(Debug, Clone, Default, Serialize)]
pub struct DatumCensusReport {
    pub candidates: u64,
    pub truncated: bool,
    pub valid: usize,
    pub extension_verified: usize,
    pub roundtrip_identity: usize,
    pub closed_form_matches: usize,
    pub group_type_data: usize,
    pub ext_global: usize,
    pub applications_eligible: usize,
    pub galois: usize,
    pub equivalence_inconsistencies: usize,
    pub transversal_disagreements: usize,
}

pub fn classify_datums(census: &DatumCensus) -> DatumCensusReport {
    let rows = par::map_collect(census.datums.len(), |i| {
        let d = &census.datums[i];
        let gd = d.groupoid();
        let theta = extend(d);
        let ext_ok = theta.verify(false).passed();
        let round = restrict(&theta, d.base(), d.tau()).map(|b| b == *d).unwrap_or(false);
        let closed = gd.morphisms().all(|g| theta.ideal(g) == d.closed_form_range(g));
        let gt = d.is_group_type_data();
        let global = ext_ok && theta.is_global();
        let mut eligible = false;
        let mut galois = false;
        let mut inconsistent = 0usize;
        let mut tau_disagree = 0usize;
        if let Ok(setup) = GaloisSetup::new(&theta, d.base(), d.tau()) {
            eligible = true;
            match setup.equivalence_report() {
                Ok(rep) => {
                    galois = rep.verdict();
                    // the verdict should not depend on the transversal
                    for tau2 in gd.transversals(d.base()).expect("connected") {
                        if tau2 == *d.tau() {
                            continue;
                        }
                        if let Ok(s2) = GaloisSetup::new(&theta, d.base(), &tau2) {
                            match s2.equivalence_report() {
                                Ok(r2) if r2.verdict() == galois => {}
                                Ok(_) => tau_disagree += 1,
                                Err(_) => inconsistent += 1,
                            }
                        }
                    }
                }
                Err(_) => inconsistent += 1,
            }
        }
        (ext_ok, round, closed, gt, global, eligible, galois, inconsistent, tau_disagree)
    });
    let mut report = DatumCensusReport {
        candidates: census.candidates,
        truncated: census.truncated,
        valid: census.datums.len(),
        ..Default::default()
    };
    for (ext_ok, round, closed, gt, global, eligible, galois, inc, taud) in rows {
        report.extension_verified += usize::from(ext_ok);
        report.roundtrip_identity += usize::from(round);
        report.closed_form_matches += usize::from(closed);
        report.group_type_data += usize::from(gt);
        report.ext_global += usize::from(global);
        report.applications_eligible += usize::from(eligible);
        report.galois += usize::from(galois);
        report.equivalence_inconsistencies += inc;
        report.transversal_disagreements += taud;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn action_enumeration_is_deterministic_and_valid() {
        let gd = fixtures::hex_groupoid();
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 2));
        let opts = CensusOpts { max_candidates: 20_000 };
        let c1 = enumerate_actions(&gd, &ring, opts);
        let c2 = enumerate_actions(&gd, &ring, opts);
        assert_eq!(c1.actions.len(), c2.actions.len());
        assert!(!c1.actions.is_empty());
        assert!(c1.actions.iter().zip(&c2.actions).all(|(a, b)| a == b));
        for a in c1.actions.iter().take(50) {
            assert!(a.verify(true).passed());
        }
    }

    #[test]
    fn datum_enumeration_yields_verified_data() {
        let gd = fixtures::hex_groupoid();
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 2));
        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(&gd, x).unwrap();
        let census =
            enumerate_datums(&gd, &ring, x, &tau, CensusOpts { max_candidates: 20_000 });
        assert!(!census.datums.is_empty());
        for d in census.datums.iter().take(50) {
            assert!(d.verify(true).passed());
        }
    }

    #[test]
    fn small_classification_runs_clean() {
        let gd = fixtures::hex_groupoid();
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 2));
        let census = enumerate_actions(&gd, &ring, CensusOpts { max_candidates: 5_000 });
        let report = classify_actions(&census);
        assert_eq!(report.condition_disagreements, 0);
        assert!(report.valid > 0);

        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(&gd, x).unwrap();
        let dc = enumerate_datums(&gd, &ring, x, &tau, CensusOpts { max_candidates: 5_000 });
        let dreport = classify_datums(&dc);
        assert_eq!(dreport.extension_verified, dreport.valid);
        assert_eq!(dreport.roundtrip_identity, dreport.valid);
        assert_eq!(dreport.closed_form_matches, dreport.valid);
        assert_eq!(dreport.equivalence_inconsistencies, 0);
        assert_eq!(dreport.transversal_disagreements, 0);
    }
}
