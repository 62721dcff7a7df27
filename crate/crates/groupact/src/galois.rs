//! Invariants, trace maps, Morita strictness and Galois certificates.
//!
//! For a verified unital action θ with pairwise disjoint object ideals the
//! carrier is `A = ⊕_y B_y`. An element is *invariant* when
//! `θ_g(a·1_{g⁻¹}) = a·1_g` for every `g`; the *trace*
//! `t_θ(a) = Σ_g θ_g(a·1_{g⁻¹})` lands in the invariant subring A^θ.
//!
//! The deeper results are stated for extensions of group-type data based at
//! `(x, τ)` — the standing hypotheses bundled in [`GaloisSetup`]:
//!
//! * every `B_g = A·1_g` with `1_g = γ_{τ_{tgt g}}(1_{corner g})`;
//! * invariants correspond to loop invariants:
//!   `b ∈ A^θ  ⟺  b_x ∈ B_x^{loop}` and `b_y = γ_{τ_y}(b_x)`;
//! * the trace transports along the transversal, so `t_θ` is onto iff the
//!   loop trace is;
//! * the bimodule maps `Γ : a⊗b ↦ t_θ(ab)` and
//!   `Γ' : a⊗b ↦ Σ_g a·θ_g(b·1_{g⁻¹})δ_g` give a Morita context between
//!   A ⋆_θ G and A^θ, strict iff the loop-level one is;
//! * A is a Galois extension of A^θ iff there are pairs `(a_i, b_i)` with
//!   `Σ_i a_i θ_g(b_i 1_{g⁻¹}) = δ_{y,g} 1_y`, iff Γ' is onto.
//!
//! Γ and Γ' surjectivity are decided by F_p-spans over pure tensors of
//! atoms (both maps are biadditive and F_p-bilinear in the split model, so
//! the image equals that span; no tensor product is materialized), and
//! Galois certificates come from one linear solve against the target 1_R.
//! The final four-way equivalence is evaluated with each leg computed
//! independently and any disagreement reported as an internal inconsistency
//! rather than accepted.

use serde::Serialize;
use thiserror::Error;

use crate::action::PartialAction;
use crate::datum::{extend, restrict, Datum};
use crate::groupoid::{Obj, Transversal};
use crate::modp::{solve_combination, SpanBuilder};
use crate::ring::RingElement;
use crate::skew::{SkewAlgebra, SkewElement};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GaloisError {
    #[error("standing hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error("element is not invariant")]
    NotInvariant,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// `t_θ(a) = Σ_g θ_g(a·1_{g⁻¹})`.
pub fn trace(action: &PartialAction, a: &RingElement) -> RingElement {
    let ring = action.ring();
    action
        .groupoid()
        .morphisms()
        .fold(ring.zero(), |acc, g| ring.add(&acc, &action.act(g, a)))
}

/// Is `θ_g(a·1_{g⁻¹}) = a·1_g` for every morphism?
pub fn is_invariant(action: &PartialAction, a: &RingElement) -> bool {
    let ring = action.ring();
    action
        .groupoid()
        .morphisms()
        .all(|g| action.act(g, a) == ring.mul(a, &action.range_unit(g)))
}

fn require_carrier(action: &PartialAction) -> Result<Vec<usize>, GaloisError> {
    if !action.is_unital() {
        return Err(GaloisError::HypothesesNotMet("action is not unital".into()));
    }
    if !action.object_ideals_disjoint() {
        return Err(GaloisError::HypothesesNotMet(
            "object ideals overlap; no direct-sum carrier".into(),
        ));
    }
    Ok(action.carrier().atoms().collect())
}

/// Echelonized F_p-basis of the invariant subring A^θ, solved as the kernel
/// of the stacked maps `a ↦ θ_g(a·1_{g⁻¹}) − a·1_g` over the carrier.
pub fn invariant_basis(action: &PartialAction) -> Result<Vec<RingElement>, GaloisError> {
    let vars = require_carrier(action)?;
    let ring = action.ring();
    let p = ring.p();
    let n = ring.num_atoms();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in action.groupoid().morphisms() {
        // one ambient row per output atom; columns are carrier atoms
        let cols: Vec<RingElement> = vars
            .iter()
            .map(|&j| {
                let e = ring.atom_elem(j);
                ring.sub(&action.act(g, &e), &ring.mul(&e, &action.range_unit(g)))
            })
            .collect();
        for i in 0..n {
            let row: Vec<u64> = cols.iter().map(|c| c.coeff(i)).collect();
            if row.iter().any(|&c| c != 0) {
                rows.push(row);
            }
        }
    }
    let kernel = crate::modp::kernel_basis(&rows, vars.len(), p);
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut coeffs = vec![0u64; n];
            for (pos, &j) in vars.iter().enumerate() {
                coeffs[j] = v[pos];
            }
            ring.elem(coeffs).expect("carrier-sized")
        })
        .collect())
}

/// Is the trace map onto the invariant subring?
pub fn trace_onto(action: &PartialAction) -> Result<bool, GaloisError> {
    let vars = require_carrier(action)?;
    let ring = action.ring();
    let invariants = invariant_basis(action)?;
    let mut inv_span = SpanBuilder::new(ring.p(), ring.num_atoms());
    for v in &invariants {
        inv_span.insert(v.coeffs());
    }
    let mut image = SpanBuilder::new(ring.p(), ring.num_atoms());
    for &j in &vars {
        let t = trace(action, &ring.atom_elem(j));
        if !inv_span.contains(t.coeffs()) {
            return Err(GaloisError::InternalInconsistency(
                "trace image escapes the invariant subring".into(),
            ));
        }
        image.insert(t.coeffs());
    }
    Ok(image.rank() == inv_span.rank())
}

/// `Γ(a ⊗ b) = t_θ(ab)`.
pub fn gamma_map(action: &PartialAction, a: &RingElement, b: &RingElement) -> RingElement {
    trace(action, &action.ring().mul(a, b))
}

/// `Γ'(a ⊗ b) = Σ_g a·θ_g(b·1_{g⁻¹}) δ_g`.
pub fn gamma_prime(skew: &SkewAlgebra, a: &RingElement, b: &RingElement) -> SkewElement {
    let action = skew.action();
    let ring = action.ring();
    let coeffs = skew
        .basis()
        .iter()
        .map(|&(g, t)| ring.mul(a, &action.act(g, b)).coeff(t))
        .collect();
    SkewElement { coeffs }
}

/// Is Γ' onto? Decided by the F_p-span of `Γ'(e_i ⊗ e_j)` over carrier
/// atom pairs against the dimension of the skew ring.
pub fn gamma_prime_surjective(skew: &SkewAlgebra) -> Result<bool, GaloisError> {
    let vars = require_carrier(skew.action())?;
    let ring = skew.action().ring();
    let mut span = SpanBuilder::new(ring.p(), skew.dim());
    for &i in &vars {
        for &j in &vars {
            span.insert(&gamma_prime(skew, &ring.atom_elem(i), &ring.atom_elem(j)).coeffs);
        }
    }
    Ok(span.rank() == skew.dim())
}

/// Galois coordinates: pairs with `Σ_i a_i θ_g(b_i 1_{g⁻¹}) = δ_{y,g} 1_y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisCertificate {
    pub pairs: Vec<(RingElement, RingElement)>,
}

/// Check a certificate against its defining display, morphism by morphism.
pub fn verify_certificate(action: &PartialAction, cert: &GaloisCertificate) -> bool {
    let ring = action.ring();
    let gd = action.groupoid();
    gd.morphisms().all(|g| {
        let sum = cert
            .pairs
            .iter()
            .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, &action.act(g, b))));
        let want = if gd.is_identity(g) { action.range_unit(g) } else { ring.zero() };
        sum == want
    })
}

/// Solve `Σ_{ij} c_{ij} Γ'(e_i ⊗ e_j) = 1_R` for coefficients over carrier
/// atom pairs; a solution yields the pairs `(c_{ij} e_i, e_j)`. Returns
/// `None` exactly when `1_R` is outside the span.
pub fn galois_coordinates(skew: &SkewAlgebra) -> Result<Option<GaloisCertificate>, GaloisError> {
    let vars = require_carrier(skew.action())?;
    let ring = skew.action().ring();
    let mut columns = Vec::with_capacity(vars.len() * vars.len());
    for &i in &vars {
        for &j in &vars {
            columns.push(gamma_prime(skew, &ring.atom_elem(i), &ring.atom_elem(j)).coeffs);
        }
    }
    let Some(c) = solve_combination(&columns, &skew.unit().coeffs, ring.p()) else {
        return Ok(None);
    };
    let mut pairs = Vec::new();
    for (k, &coeff) in c.iter().enumerate() {
        if coeff != 0 {
            let (i, j) = (vars[k / vars.len()], vars[k % vars.len()]);
            pairs.push((ring.scale(coeff, &ring.atom_elem(i)), ring.atom_elem(j)));
        }
    }
    let cert = GaloisCertificate { pairs };
    if !verify_certificate(skew.action(), &cert) {
        return Err(GaloisError::InternalInconsistency(
            "solved coordinates fail their defining display".into(),
        ));
    }
    Ok(Some(cert))
}

/// The four statements of the final equivalence, each computed on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    /// A is Galois over A^θ and t_θ is onto.
    pub galois_and_trace: bool,
    /// The context (A^θ, A⋆_θG, A, A, Γ, Γ') is strict.
    pub groupoid_context_strict: bool,
    /// The loop-level context is strict.
    pub group_context_strict: bool,
    /// B_x is Galois over its loop invariants and the loop trace is onto.
    pub group_galois_and_trace: bool,
    pub agree: bool,
}

impl EquivalenceReport {
    pub fn verdict(&self) -> bool {
        self.galois_and_trace
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MoritaStrictnessReport {
    pub gamma_surjective: bool,
    pub gamma_prime_surjective: bool,
    pub group_gamma_surjective: bool,
    pub group_gamma_prime_surjective: bool,
    pub strict: bool,
    pub group_strict: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceEquivReport {
    pub invariant_correspondence: bool,
    pub trace_transport: bool,
    pub trace_decomposition: bool,
    pub trace_onto: bool,
    pub group_trace_onto: bool,
    pub equivalent: bool,
}

/// The standing hypotheses of the applications: a verified unital action
/// with direct-sum carrier that is group-type at `(x, τ)` — equivalently,
/// the extension of its own restriction data there.
pub struct GaloisSetup {
    action: PartialAction,
    datum: Datum,
    skew: SkewAlgebra,
}

impl GaloisSetup {
    pub fn new(
        action: &PartialAction,
        x: Obj,
        tau: &Transversal,
    ) -> Result<GaloisSetup, GaloisError> {
        if !action.verify(false).passed() {
            return Err(GaloisError::HypothesesNotMet("action fails the axioms".into()));
        }
        require_carrier(action)?;
        if !action.groupoid().is_connected() {
            return Err(GaloisError::HypothesesNotMet("groupoid is not connected".into()));
        }
        if !action.is_group_type(tau) {
            return Err(GaloisError::HypothesesNotMet(format!(
                "action is not group-type at base {}",
                action.groupoid().object_name(x)
            )));
        }
        let datum = restrict(action, x, tau)
            .map_err(|e| GaloisError::HypothesesNotMet(e.to_string()))?;
        if extend(&datum) != *action {
            return Err(GaloisError::InternalInconsistency(
                "group-type action is not recovered by its own restriction data".into(),
            ));
        }
        let skew = SkewAlgebra::build(action)
            .map_err(|e| GaloisError::HypothesesNotMet(e.to_string()))?;
        Ok(GaloisSetup { action: action.clone(), datum, skew })
    }

    pub fn action(&self) -> &PartialAction {
        &self.action
    }

    pub fn datum(&self) -> &Datum {
        &self.datum
    }

    pub fn skew(&self) -> &SkewAlgebra {
        &self.skew
    }

    fn base_ideal(&self) -> crate::ring::Ideal {
        self.datum.ideal(self.datum.base())
    }

    /// The same hypotheses at loop level: the isotropy restriction over the
    /// one-object groupoid with the trivial transversal.
    pub fn group_setup(&self) -> Result<GaloisSetup, GaloisError> {
        let res = self
            .action
            .restrict_to_isotropy(self.datum.base())
            .map_err(|e| GaloisError::HypothesesNotMet(e.to_string()))?;
        let trivial = Transversal { base: 0, pick: vec![0] };
        GaloisSetup::new(&res.action, 0, &trivial)
    }

    /// Split an invariant into its base component: returns `b_x = b·1_x`,
    /// checking that `b_x` is loop-invariant and that
    /// `b = Σ_y γ_{τ_y}(b_x)` reconstructs the input.
    pub fn invariant_decompose(&self, b: &RingElement) -> Result<RingElement, GaloisError> {
        if !is_invariant(&self.action, b) {
            return Err(GaloisError::NotInvariant);
        }
        let ring = self.action.ring();
        let bx = ring.mask(b, self.base_ideal());
        let res = self
            .action
            .restrict_to_isotropy(self.datum.base())
            .map_err(|e| GaloisError::HypothesesNotMet(e.to_string()))?;
        if !is_invariant(&res.action, &bx) {
            return Err(GaloisError::InternalInconsistency(
                "base component of an invariant is not loop-invariant".into(),
            ));
        }
        let rebuilt = self.reconstruct_invariant(&bx);
        if rebuilt != *b {
            return Err(GaloisError::InternalInconsistency(
                "transversal reconstruction does not return the input".into(),
            ));
        }
        Ok(bx)
    }

    /// `Σ_y γ_{τ_y}(b_x)` for a base element.
    pub fn reconstruct_invariant(&self, bx: &RingElement) -> RingElement {
        let ring = self.action.ring();
        self.action.groupoid().objects().fold(ring.zero(), |acc, y| {
            ring.add(&acc, &self.datum.tau_iso(y).apply(bx).expect("b_x lies in I_x"))
        })
    }

    /// `B_g = A·1_g` with `1_g = γ_{τ_{tgt g}}(1_{corner g})`, together with
    /// the two transport displays for ranges and maps.
    pub fn unit_form_check(&self) -> Result<(), String> {
        let gd = self.action.groupoid();
        let ring = self.action.ring();
        for g in gd.morphisms() {
            let gx = gd.corner(g, self.datum.tau());
            let unit_x = ring.idem(self.datum.loop_ideal(gx));
            let unit = self
                .datum
                .tau_iso(gd.tgt(g))
                .apply(&unit_x)
                .map_err(|_| format!("1_{{corner {}}} escapes I_x", gd.mor_name(g)))?;
            if unit != self.action.range_unit(g) {
                return Err(format!("1_g mismatch at {}", gd.mor_name(g)));
            }
            let range = self.datum.tau_iso(gd.tgt(g)).image(self.datum.loop_ideal(gx));
            if range != self.action.ideal(g) {
                return Err(format!("B_g ≠ γ_{{τ}}(I_{{corner}}) at {}", gd.mor_name(g)));
            }
            for a in self.datum.loop_ideal(gd.inv(gx)).atoms() {
                let e = ring.atom_elem(a);
                let lhs = self.action.act(g, &self.datum.tau_iso(gd.src(g)).apply(&e).unwrap());
                let rhs = self
                    .datum
                    .tau_iso(gd.tgt(g))
                    .apply(&self.datum.loop_iso(gx).apply(&e).unwrap())
                    .unwrap();
                if lhs != rhs {
                    return Err(format!(
                        "transport display fails at {} atom {}",
                        gd.mor_name(g),
                        ring.atom_name(a)
                    ));
                }
            }
        }
        Ok(())
    }

    /// Both directions of the invariant correspondence, over the computed
    /// bases.
    pub fn invariant_correspondence_check(&self) -> Result<(), String> {
        let res = self
            .action
            .restrict_to_isotropy(self.datum.base())
            .map_err(|e| e.to_string())?;
        for b in invariant_basis(&self.action).map_err(|e| e.to_string())? {
            self.invariant_decompose(&b).map_err(|e| e.to_string())?;
        }
        for c in invariant_basis(&res.action).map_err(|e| e.to_string())? {
            let rebuilt = self.reconstruct_invariant(&c);
            if !is_invariant(&self.action, &rebuilt) {
                return Err("reconstruction of a loop invariant is not invariant".into());
            }
        }
        Ok(())
    }

    /// `t_θ(γ_{τ_z}(b_x)) = Σ_y γ_{τ_y}(t_loop(b_x))` on every base atom.
    pub fn trace_transport_check(&self) -> Result<(), String> {
        let ring = self.action.ring();
        let gd = self.action.groupoid();
        let res = self
            .action
            .restrict_to_isotropy(self.datum.base())
            .map_err(|e| e.to_string())?;
        for a in self.base_ideal().atoms() {
            let e = ring.atom_elem(a);
            let rhs = self.reconstruct_invariant(&trace(&res.action, &e));
            for z in gd.objects() {
                let bz = self.datum.tau_iso(z).apply(&e).unwrap();
                if trace(&self.action, &bz) != rhs {
                    return Err(format!(
                        "trace transport fails at atom {} object {}",
                        ring.atom_name(a),
                        gd.object_name(z)
                    ));
                }
            }
        }
        Ok(())
    }

    /// `t_θ(a) = Σ_y γ_{τ_y}(t_loop(c_x))` with `c_x = Σ_z γ_{τ_z}⁻¹(a·1_z)`,
    /// on carrier atoms and on the full carrier idempotent.
    pub fn trace_decomposition_check(&self) -> Result<(), String> {
        let ring = self.action.ring();
        let gd = self.action.groupoid();
        let res = self
            .action
            .restrict_to_isotropy(self.datum.base())
            .map_err(|e| e.to_string())?;
        let mut inputs: Vec<RingElement> =
            self.action.carrier().atoms().map(|a| ring.atom_elem(a)).collect();
        inputs.push(ring.idem(self.action.carrier()));
        for a in inputs {
            let cx = gd.objects().fold(ring.zero(), |acc, z| {
                let bz = ring.mask(&a, self.action.ideal(gd.identity(z)));
                ring.add(&acc, &self.datum.tau_iso(z).inverse().apply(&bz).expect("B_z = I_τz"))
            });
            let rhs = self.reconstruct_invariant(&trace(&res.action, &cx));
            if trace(&self.action, &a) != rhs {
                return Err("trace decomposition display fails".into());
            }
        }
        Ok(())
    }

    /// The trace-surjectivity equivalence, with the three lemma displays
    /// re-checked on the instance before the iff is asserted.
    pub fn prop_trace_equiv(&self) -> Result<TraceEquivReport, GaloisError> {
        let invariant_correspondence = self.invariant_correspondence_check().is_ok();
        let trace_transport = self.trace_transport_check().is_ok();
        let trace_decomposition = self.trace_decomposition_check().is_ok();
        let onto = trace_onto(&self.action)?;
        let res = self
            .action
            .restrict_to_isotropy(self.datum.base())
            .map_err(|e| GaloisError::HypothesesNotMet(e.to_string()))?;
        let group_onto = trace_onto(&res.action)?;
        let report = TraceEquivReport {
            invariant_correspondence,
            trace_transport,
            trace_decomposition,
            trace_onto: onto,
            group_trace_onto: group_onto,
            equivalent: onto == group_onto,
        };
        if !report.equivalent {
            return Err(GaloisError::InternalInconsistency(
                "trace surjectivity differs between the groupoid and loop level".into(),
            ));
        }
        Ok(report)
    }

    /// Surjectivity of Γ and Γ' at both levels; the two strictness verdicts
    /// must agree.
    pub fn morita_strictness(&self) -> Result<MoritaStrictnessReport, GaloisError> {
        let gamma = trace_onto(&self.action)?;
        let gamma_prime_onto = gamma_prime_surjective(&self.skew)?;
        let gs = self.group_setup()?;
        let g_gamma = trace_onto(&gs.action)?;
        let g_gamma_prime = gamma_prime_surjective(&gs.skew)?;
        let report = MoritaStrictnessReport {
            gamma_surjective: gamma,
            gamma_prime_surjective: gamma_prime_onto,
            group_gamma_surjective: g_gamma,
            group_gamma_prime_surjective: g_gamma_prime,
            strict: gamma && gamma_prime_onto,
            group_strict: g_gamma && g_gamma_prime,
            agree: (gamma && gamma_prime_onto) == (g_gamma && g_gamma_prime),
        };
        if !report.agree {
            return Err(GaloisError::InternalInconsistency(
                "strictness differs between the groupoid and loop contexts".into(),
            ));
        }
        Ok(report)
    }

    /// Evaluate the four equivalent statements independently; any
    /// disagreement is an error, never a silently chosen answer.
    pub fn equivalence_report(&self) -> Result<EquivalenceReport, GaloisError> {
        let galois = galois_coordinates(&self.skew)?.is_some();
        let onto = trace_onto(&self.action)?;
        let strict = trace_onto(&self.action)? && gamma_prime_surjective(&self.skew)?;
        let gs = self.group_setup()?;
        let g_onto = trace_onto(&gs.action)?;
        let g_strict = trace_onto(&gs.action)? && gamma_prime_surjective(&gs.skew)?;
        let g_galois = galois_coordinates(&gs.skew)?.is_some();
        let report = EquivalenceReport {
            galois_and_trace: galois && onto,
            groupoid_context_strict: strict,
            group_context_strict: g_strict,
            group_galois_and_trace: g_galois && g_onto,
            agree: [strict, g_strict, g_galois && g_onto].iter().all(|&b| b == (galois && onto)),
        };
        if !report.agree {
            return Err(GaloisError::InternalInconsistency(format!(
                "four-way equivalence legs disagree: {report:?}"
            )));
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ring::{Ideal, SplitRing};
    use std::sync::Arc;

    fn b2() -> PartialAction {
        fixtures::b2_action(3)
    }

    fn dat_setup() -> GaloisSetup {
        let d = fixtures::dat_datum(3);
        let theta = extend(&d);
        GaloisSetup::new(&theta, d.base(), d.tau()).unwrap()
    }

    fn gamma_setup() -> GaloisSetup {
        let d = fixtures::gamma22_datum(3);
        let theta = fixtures::gamma22_action(3);
        GaloisSetup::new(&theta, d.base(), d.tau()).unwrap()
    }

    #[test]
    fn traces_on_the_hexagon_action() {
        let pa = b2();
        let ring = pa.ring();
        // only x and g contribute at e1; x and l at e2
        let t1 = trace(&pa, &ring.atom_elem(0));
        assert_eq!(t1, ring.scale(2, &ring.atom_elem(0)));
        let t2 = trace(&pa, &ring.atom_elem(1));
        assert_eq!(t2, ring.add(&ring.atom_elem(1), &ring.atom_elem(3)));
        assert_eq!(trace(&pa, &ring.zero()), ring.zero());
        // the trace lands in the invariants
        let basis = invariant_basis(&pa).unwrap();
        let mut span = SpanBuilder::new(3, 6);
        for b in &basis {
            span.insert(b.coeffs());
        }
        for j in 0..6 {
            assert!(span.contains(trace(&pa, &ring.atom_elem(j)).coeffs()));
        }
    }

    #[test]
    fn invariants_of_the_hexagon_action() {
        let pa = b2();
        let ring = pa.ring();
        let basis = invariant_basis(&pa).unwrap();
        let want: Vec<RingElement> = vec![
            ring.atom_elem(0),
            ring.add(&ring.atom_elem(1), &ring.atom_elem(3)),
            ring.add(&ring.atom_elem(2), &ring.atom_elem(4)),
            ring.atom_elem(5),
        ];
        assert_eq!(basis, want);
        assert!(trace_onto(&pa).unwrap());
    }

    #[test]
    fn invariants_of_identity_and_gamma_actions() {
        let gd = Arc::new(crate::groupoid::cyclic_group(1));
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 3));
        let full = ring.full_ideal();
        let id = PartialAction::identity_action(gd, ring, &[full]);
        assert_eq!(invariant_basis(&id).unwrap().len(), 3); // A^θ = A
        assert!(trace_onto(&id).unwrap());

        let gamma = fixtures::gamma22_action(3);
        let basis = invariant_basis(&gamma).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], gamma.ring().one()); // a1+a2+b1+b2
    }

    #[test]
    fn invariant_decomposition() {
        let s = dat_setup();
        let ring = s.action().ring();
        // b = (e1+e3) + γ(e1+e3) decomposes to b_x = e1+e3
        let b = ring.one();
        let bx = s.invariant_decompose(&b).unwrap();
        assert_eq!(bx, ring.add(&ring.atom_elem(0), &ring.atom_elem(2)));
        assert_eq!(s.invariant_decompose(&ring.zero()).unwrap(), ring.zero());
        assert_eq!(s.invariant_decompose(&ring.atom_elem(0)), Err(GaloisError::NotInvariant));

        let gs = gamma_setup();
        let ring = gs.action().ring();
        let bx = gs.invariant_decompose(&ring.one()).unwrap();
        assert_eq!(bx, ring.add(&ring.atom_elem(0), &ring.atom_elem(1)));
    }

    #[test]
    fn lemma_displays_hold_on_the_fixtures() {
        for s in [dat_setup(), gamma_setup()] {
            s.unit_form_check().unwrap();
            s.invariant_correspondence_check().unwrap();
            s.trace_transport_check().unwrap();
            s.trace_decomposition_check().unwrap();
            let rep = s.prop_trace_equiv().unwrap();
            assert!(rep.equivalent);
            assert!(rep.trace_onto);
        }
    }

    #[test]
    fn gamma_prime_values() {
        let gs = gamma_setup();
        let ring = gs.action().ring();
        let v = gamma_prime(gs.skew(), &ring.atom_elem(0), &ring.atom_elem(0));
        // e_a1 δ_(1,e,1): only the identity loop at 1 survives
        let gd = gs.action().groupoid();
        let id1 = gd.identity(gd.object_by_name("1").unwrap());
        let want_index = gs.skew().basis_index(id1, 0).unwrap();
        for (i, &c) in v.coeffs.iter().enumerate() {
            assert_eq!(c, u64::from(i == want_index));
        }

        // Γ(e2 ⊗ e2) = t(e2) = e2 + e4 on the hexagon action
        let pa = b2();
        let ring = pa.ring();
        assert_eq!(
            gamma_map(&pa, &ring.atom_elem(1), &ring.atom_elem(1)),
            ring.add(&ring.atom_elem(1), &ring.atom_elem(3))
        );
    }

    #[test]
    fn galois_certificate_for_the_global_fixture() {
        let gs = gamma_setup();
        let cert = galois_coordinates(gs.skew()).unwrap().unwrap();
        assert!(verify_certificate(gs.action(), &cert));
        // the canonical atom-pair certificate verifies too
        let ring = gs.action().ring();
        let canonical = GaloisCertificate {
            pairs: (0..4).map(|i| (ring.atom_elem(i), ring.atom_elem(i))).collect(),
        };
        assert!(verify_certificate(gs.action(), &canonical));

        // trivial instance: {(1, 1)} over F₃
        let gd = Arc::new(crate::groupoid::cyclic_group(1));
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 1));
        let full = ring.full_ideal();
        let id = PartialAction::identity_action(gd, ring, &[full]);
        let skew = SkewAlgebra::build(&id).unwrap();
        let cert = galois_coordinates(&skew).unwrap().unwrap();
        assert!(verify_certificate(&id, &cert));
    }

    #[test]
    fn the_extension_fixture_is_not_galois() {
        let s = dat_setup();
        // Γ' misses the loop coordinates that pair with the identity part
        assert!(!gamma_prime_surjective(s.skew()).unwrap());
        assert_eq!(galois_coordinates(s.skew()).unwrap(), None);
        // the trace is onto nevertheless
        assert!(trace_onto(s.action()).unwrap());
    }

    #[test]
    fn equivalence_reports_agree() {
        let rep = gamma_setup().equivalence_report().unwrap();
        assert!(rep.agree);
        assert!(rep.verdict());
        assert_eq!(
            (rep.galois_and_trace, rep.groupoid_context_strict, rep.group_context_strict, rep.group_galois_and_trace),
            (true, true, true, true)
        );

        let rep = dat_setup().equivalence_report().unwrap();
        assert!(rep.agree);
        assert!(!rep.verdict()); // all four legs are false here

        let m = gamma_setup().morita_strictness().unwrap();
        assert!(m.strict && m.group_strict && m.agree);
        let m = dat_setup().morita_strictness().unwrap();
        assert!(!m.strict && !m.group_strict && m.agree);
    }

    #[test]
    fn hypotheses_gate() {
        // FX-B2 is not group-type anywhere, so the setup refuses it
        let pa = b2();
        let gd = pa.groupoid();
        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(gd, x).unwrap();
        assert!(matches!(
            GaloisSetup::new(&pa, x, &tau),
            Err(GaloisError::HypothesesNotMet(_))
        ));

        // overlapping object ideals are refused
        let coarse = Arc::new(crate::groupoid::coarse_groupoid(&["1", "2"]).unwrap());
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 1));
        let full = ring.full_ideal();
        let olap = PartialAction::identity_action(coarse, ring, &[full, full]);
        assert!(matches!(
            invariant_basis(&olap),
            Err(GaloisError::HypothesesNotMet(_))
        ));
        let _ = Ideal::EMPTY;
    }
}
