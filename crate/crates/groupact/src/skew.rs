//! The partial skew groupoid ring A ⋆_θ G.
//!
//! For a verified unital action θ with pairwise disjoint object ideals, the
//! skew ring is the F_p-space with basis `{ e_a δ_g : g ∈ G, a ∈ B_g }` and
//! multiplication
//!
//! ```text
//! (b δ_g)(b' δ_h) = b · θ_g(b' · 1_{g⁻¹}) δ_{gh}   when src g = tgt h,
//!                   0                              otherwise,
//! ```
//!
//! with unit `1_R = Σ_y 1_y δ_y`. On basis elements the product is another
//! basis element or zero, so the structure constants form a dense
//! dim × dim table of optional indices (materialized up to dimension 128,
//! recomputed on the fly beyond that).
//!
//! Fixing a base object x, `1_S = 1_x δ_x` cuts out the corners
//! `U = R·1_S` (basis over `src g = x`), `V = 1_S·R` (basis over
//! `tgt g = x`) and `S' = 1_S·R·1_S`, which is the skew group ring of the
//! restricted isotropy action. `(R, S, U, V, u⊗v ↦ uv, v⊗u ↦ vu)` is a
//! Morita context; the sixtuple is strict iff both product maps are
//! surjective, which is decided by the span of pairwise basis products.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::action::{IsotropyAction, PartialAction};
use crate::groupoid::{Mor, Obj};
use crate::par;


/// Dense structure-constant table limit.
const TABLE_LIMIT: usize = 128;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SkewError {
    #[error("the action is not unital")]
    NotUnital,
    #[error("object ideals are not pairwise disjoint")]
    RingNotDirectSum,
    #[error("the action does not satisfy the partial-action axioms")]
    NotAnAction,
    #[error("unknown object `{0}`")]
    UnknownObject(String),
}

/// An element of the skew ring, as coefficients over the basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkewElement {
    pub coeffs: Vec<u64>,
}

impl SkewElement {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// A partial skew groupoid ring with materialized basis.
#[derive(Debug, Clone)]
pub struct SkewAlgebra {
    action: PartialAction,
    basis: Vec<(Mor, usize)>,
    index: HashMap<(Mor, usize), usize>,
    table: Option<Vec<Option<usize>>>,
}

impl SkewAlgebra {
    /// Build the skew ring of a verified unital action whose object ideals
    /// are pairwise disjoint.
    pub fn build(action: &PartialAction) -> Result<SkewAlgebra, SkewError> {
        if !action.verify(false).passed() {
            return Err(SkewError::NotAnAction);
        }
        if !action.is_unital() {
            return Err(SkewError::NotUnital);
        }
        if !action.object_ideals_disjoint() {
            return Err(SkewError::RingNotDirectSum);
        }
        let gd = action.groupoid();
        let mut basis = Vec::new();
        for g in gd.morphisms() {
            for a in action.ideal(g).atoms() {
                basis.push((g, a));
            }
        }
        let index = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut algebra = SkewAlgebra { action: action.clone(), basis, index, table: None };
        if algebra.dim() <= TABLE_LIMIT {
            let dim = algebra.dim();
            let table =
                par::map_collect(dim * dim, |ij| algebra.mul_basis_raw(ij / dim, ij % dim));
            algebra.table = Some(table);
        }
        Ok(algebra)
    }

    pub fn action(&self) -> &PartialAction {
        &self.action
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(Mor, usize)] {
        &self.basis
    }

    pub fn basis_index(&self, g: Mor, atom: usize) -> Option<usize> {
        self.index.get(&(g, atom)).copied()
    }

    pub fn describe_basis(&self, i: usize) -> String {
        let (g, a) = self.basis[i];
        format!(
            "{}δ_{}",
            self.action.ring().atom_name(a),
            self.action.groupoid().mor_name(g)
        )
    }

    fn mul_basis_raw(&self, i: usize, j: usize) -> Option<usize> {
        let (g, a) = self.basis[i];
        let (h, b) = self.basis[j];
        let gd = self.action.groupoid();
        let gh = gd.compose(g, h)?;
        // e_a · θ_g(e_b 1_{g⁻¹}) is e_a exactly when θ_g maps b to a
        if self.action.ideal(gd.inv(g)).contains(b)
            && self.action.iso(g).map_atom(b) == Some(a)
        {
            Some(self.index[&(gh, a)])
        } else {
            None
        }
    }

    /// Product of two basis elements: another basis element or zero, always
    /// with coefficient one.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<usize> {
        match &self.table {
            Some(t) => t[i * self.dim() + j],
            None => self.mul_basis_raw(i, j),
        }
    }

    pub fn zero(&self) -> SkewElement {
        SkewElement { coeffs: vec![0; self.dim()] }
    }

    pub fn basis_elem(&self, i: usize) -> SkewElement {
        let mut e = self.zero();
        e.coeffs[i] = 1;
        e
    }

    /// `1_R = Σ_y 1_y δ_y`.
    pub fn unit(&self) -> SkewElement {
        let gd = self.action.groupoid();
        let mut e = self.zero();
        for y in gd.objects() {
            let id = gd.identity(y);
            for a in self.action.ideal(id).atoms() {
                e.coeffs[self.index[&(id, a)]] = 1;
            }
        }
        e
    }

    /// `1_S = 1_x δ_x` for a base object.
    pub fn base_unit(&self, x: Obj) -> SkewElement {
        let gd = self.action.groupoid();
        let id = gd.identity(x);
        let mut e = self.zero();
        for a in self.action.ideal(id).atoms() {
            e.coeffs[self.index[&(id, a)]] = 1;
        }
        e
    }

    pub fn add(&self, a: &SkewElement, b: &SkewElement) -> SkewElement {
        let p = self.action.ring().p();
        SkewElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % p).collect(),
        }
    }

    pub fn scale(&self, c: u64, a: &SkewElement) -> SkewElement {
        let p = self.action.ring().p();
        SkewElement { coeffs: a.coeffs.iter().map(|x| x * (c % p) % p).collect() }
    }

    pub fn mul(&self, a: &SkewElement, b: &SkewElement) -> SkewElement {
        let p = self.action.ring().p();
        let mut out = self.zero();
        for (i, &ca) in a.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                if let Some(k) = self.mul_basis(i, j) {
                    out.coeffs[k] = (out.coeffs[k] + ca * cb) % p;
                }
            }
        }
        out
    }

    /// Is 1_R neutral on every basis element?
    pub fn unit_check(&self) -> bool {
        let one = self.unit();
        (0..self.dim()).all(|i| {
            let e = self.basis_elem(i);
            self.mul(&one, &e) == e && self.mul(&e, &one) == e
        })
    }

    /// Associativity over all dim³ basis triples; returns the first failing
    /// triple, if any.
    pub fn assoc_check(&self) -> Option<(usize, usize, usize)> {
        let dim = self.dim();
        par::find_map_first(dim, |i| {
            for j in 0..dim {
                let ij = self.mul_basis(i, j);
                for k in 0..dim {
                    let left = ij.and_then(|x| self.mul_basis(x, k));
                    let right = self.mul_basis(j, k).and_then(|x| self.mul_basis(i, x));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
            None
        })
    }

    /// Basis index sets of the corners U = R·1_S, V = 1_S·R and
    /// S' = 1_S·R·1_S at a base object.
    pub fn corners(&self, x: Obj) -> Corners {
        let gd = self.action.groupoid();
        let u = (0..self.dim()).filter(|&i| gd.src(self.basis[i].0) == x).collect();
        let v = (0..self.dim()).filter(|&i| gd.tgt(self.basis[i].0) == x).collect();
        let s_prime = (0..self.dim())
            .filter(|&i| {
                let g = self.basis[i].0;
                gd.src(g) == x && gd.tgt(g) == x
            })
            .collect();
        Corners { u, v, s_prime }
    }

    /// Check that right multiplication by 1_S fixes the `src = x`
    /// coordinates and kills the others (and dually on the left).
    pub fn corner_projections_check(&self, x: Obj) -> bool {
        let gd = self.action.groupoid();
        let one_s = self.base_unit(x);
        (0..self.dim()).all(|i| {
            let e = self.basis_elem(i);
            let right = self.mul(&e, &one_s);
            let left = self.mul(&one_s, &e);
            let want_right = if gd.src(self.basis[i].0) == x { e.clone() } else { self.zero() };
            let want_left = if gd.tgt(self.basis[i].0) == x { e } else { self.zero() };
            right == want_right && left == want_left
        })
    }

    /// The skew group ring of the isotropy restriction at `x`.
    pub fn group_skew(&self, x: Obj) -> Result<(SkewAlgebra, IsotropyAction), SkewError> {
        let res = self
            .action
            .restrict_to_isotropy(x)
            .map_err(|_| SkewError::UnknownObject(format!("#{x}")))?;
        Ok((SkewAlgebra::build(&res.action)?, res))
    }

    /// 1_S·R·1_S is the skew group ring of the isotropy action: match the
    /// corner basis with the group basis and compare all products.
    pub fn corner_group_match(&self, x: Obj) -> Result<(), String> {
        let (s, res) = self.group_skew(x).map_err(|e| e.to_string())?;
        let corners = self.corners(x);
        if corners.s_prime.len() != s.dim() {
            return Err(format!(
                "corner has dimension {}, group skew ring {}",
                corners.s_prime.len(),
                s.dim()
            ));
        }
        // (g, a) in the corner ↔ (local g, a) in the group ring
        let to_group: Vec<usize> = corners
            .s_prime
            .iter()
            .map(|&i| {
                let (g, a) = self.basis[i];
                let local = res.local(g).expect("loop at x");
                s.basis_index(local, a).expect("same atoms")
            })
            .collect();
        for (pi, &i) in corners.s_prime.iter().enumerate() {
            for (pj, &j) in corners.s_prime.iter().enumerate() {
                let here = self.mul_basis(i, j).map(|k| {
                    corners.s_prime.iter().position(|&c| c == k).expect("corner closed")
                });
                let there = s.mul_basis(to_group[pi], to_group[pj]).map(|k| {
                    to_group.iter().position(|&t| t == k).expect("bijection")
                });
                if here != there {
                    return Err(format!(
                        "products disagree at ({}, {})",
                        self.describe_basis(i),
                        self.describe_basis(j)
                    ));
                }
            }
        }
        Ok(())
    }

    /// Does R·1_S·R span R? Products of basis pairs are basis elements, so
    /// this is reachability of every basis index.
    pub fn r1sr_spans(&self, x: Obj) -> bool {
        let corners = self.corners(x);
        let mut hit = vec![false; self.dim()];
        for &u in &corners.u {
            for &v in &corners.v {
                if let Some(k) = self.mul_basis(u, v) {
                    hit[k] = true;
                }
            }
        }
        hit.iter().all(|&b| b)
    }

    /// The Morita context checks between R and the corner ring at `x`.
    pub fn morita_check(&self, x: Obj) -> MoritaSkewReport {
        let corners = self.corners(x);
        // associativity conditions u(vu') = (uv)u' and v(uv') = (vu)v'
        let assoc_failure = par::find_map_first(corners.u.len(), |iu| {
            let u = corners.u[iu];
            for &v in &corners.v {
                let uv = self.mul_basis(u, v);
                for &u2 in &corners.u {
                    let left = self.mul_basis(v, u2).and_then(|k| self.mul_basis(u, k));
                    let right = uv.and_then(|k| self.mul_basis(k, u2));
                    if left != right {
                        return Some((u, v, u2));
                    }
                }
                for &v2 in &corners.v {
                    let left = self.mul_basis(u, v2).and_then(|k| self.mul_basis(v, k));
                    let right = self.mul_basis(v, u).and_then(|k| self.mul_basis(k, v2));
                    if left != right {
                        return Some((v, u, v2));
                    }
                }
            }
            None
        });
        // μ: U⊗V → R surjective iff the products uv reach every basis index
        let mut hit_r = vec![false; self.dim()];
        for &u in &corners.u {
            for &v in &corners.v {
                if let Some(k) = self.mul_basis(u, v) {
                    hit_r[k] = true;
                }
            }
        }
        let mu_surjective = hit_r.iter().all(|&b| b);
        // ν: V⊗U → S surjective iff the products vu reach every corner index
        let mut hit_s: HashMap<usize, bool> =
            corners.s_prime.iter().map(|&i| (i, false)).collect();
        for &v in &corners.v {
            for &u in &corners.u {
                if let Some(k) = self.mul_basis(v, u) {
                    if let Some(flag) = hit_s.get_mut(&k) {
                        *flag = true;
                    }
                }
            }
        }
        let nu_surjective = hit_s.values().all(|&b| b);
        MoritaSkewReport {
            associativity_witness: assoc_failure.map(|(a, b, c)| {
                (self.describe_basis(a), self.describe_basis(b), self.describe_basis(c))
            }),
            mu_surjective,
            nu_surjective,
        }
    }
}

/// Basis index sets of the three corners cut out by 1_S.
#[derive(Debug, Clone)]
pub struct Corners {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub s_prime: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MoritaSkewReport {
    pub associativity_witness: Option<(String, String, String)>,
    pub mu_surjective: bool,
    pub nu_surjective: bool,
}

impl MoritaSkewReport {
    pub fn strict(&self) -> bool {
        self.associativity_witness.is_none() && self.mu_surjective && self.nu_surjective
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::{extend, restrict};
    use crate::fixtures;
    use crate::groupoid::Transversal;
    use crate::ring::{PartialRingIso, SplitRing};
    use std::sync::Arc;

    fn dat_skew() -> SkewAlgebra {
        SkewAlgebra::build(&extend(&fixtures::dat_datum(3))).unwrap()
    }

    #[test]
    fn dimension_counts_ideal_atoms() {
        let r = dat_skew();
        assert_eq!(r.dim(), 12); // 2+2+1+1+2+2+1+1
    }

    #[test]
    fn trivial_skew_ring_is_the_base_field() {
        let gd = Arc::new(crate::groupoid::cyclic_group(1));
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 1));
        let full = ring.full_ideal();
        let pa = PartialAction::identity_action(gd, ring, &[full]);
        let r = SkewAlgebra::build(&pa).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.mul_basis(0, 0), Some(0));
        assert!(r.unit_check());
    }

    #[test]
    fn squares_follow_the_twisted_rule() {
        // (e3 δ_g)² = e3 δ_x since θ_g is the identity on ke3 and g² = x
        let r = dat_skew();
        let gd = r.action().groupoid();
        let g = gd.mor_by_name("g").unwrap();
        let x = gd.mor_by_name("x").unwrap();
        let i = r.basis_index(g, 2).unwrap();
        assert_eq!(r.mul_basis(i, i), r.basis_index(x, 2));
    }

    #[test]
    fn unit_and_associativity() {
        let r = dat_skew();
        assert!(r.unit_check());
        assert_eq!(r.assoc_check(), None);

        // the group algebra of Z₂ over F₃ (global action on the field)
        let z2 = Arc::new(crate::groupoid::cyclic_group(2));
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 1));
        let full = ring.full_ideal();
        let pa = PartialAction::new(
            Arc::clone(&z2),
            ring,
            vec![full, full],
            vec![PartialRingIso::identity(full), PartialRingIso::identity(full)],
        );
        let r = SkewAlgebra::build(&pa).unwrap();
        assert_eq!(r.dim(), 2);
        assert!(r.unit_check());
        assert_eq!(r.assoc_check(), None);
    }

    #[test]
    fn corrupted_table_yields_a_witness() {
        let mut r = dat_skew();
        let table = r.table.as_mut().unwrap();
        let dim = 12;
        // break one structure constant: (e3δ_g)·(e3δ_g) ↦ 0
        let g = r.index[&(fixtures::hex_groupoid().mor_by_name("g").unwrap(), 2)];
        table[g * dim + g] = None;
        assert!(r.assoc_check().is_some());
    }

    #[test]
    fn corners_at_the_base() {
        let r = dat_skew();
        let gd = r.action().groupoid();
        let x = gd.object_by_name("x").unwrap();
        let c = r.corners(x);
        assert_eq!(c.u.len(), 6); // B_x + B_g + B_l + B_m = 2+1+2+1
        assert_eq!(c.v.len(), 6);
        assert_eq!(c.s_prime.len(), 3);
        assert!(r.corner_projections_check(x));
        assert!(r.r1sr_spans(x));
        r.corner_group_match(x).unwrap();
        let (s, _) = r.group_skew(x).unwrap();
        assert_eq!(s.dim(), 3);
    }

    #[test]
    fn one_object_corners_are_everything() {
        let z2 = Arc::new(crate::groupoid::cyclic_group(2));
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 2));
        let full = ring.full_ideal();
        let swap = PartialRingIso::new(vec![(0, 1), (1, 0)]).unwrap();
        let pa = PartialAction::new(
            z2,
            ring,
            vec![full, full],
            vec![PartialRingIso::identity(full), swap],
        );
        let r = SkewAlgebra::build(&pa).unwrap();
        let c = r.corners(0);
        assert_eq!(c.u.len(), r.dim());
        assert_eq!(c.v.len(), r.dim());
        assert_eq!(c.s_prime.len(), r.dim());
        let rep = r.morita_check(0);
        assert!(rep.strict());
    }

    #[test]
    fn morita_context_between_r_and_the_corner() {
        let r = dat_skew();
        let x = r.action().groupoid().object_by_name("x").unwrap();
        let rep = r.morita_check(x);
        assert!(rep.strict());

        // the restriction datum of FX-B2 is not group-type, and the corner
        // context genuinely fails to be strict there: R·1_S·R misses the
        // e5/e6 part of B_y.
        let b2 = fixtures::b2_action(3);
        let gd = b2.groupoid();
        let x = gd.object_by_name("x").unwrap();
        let tau = Transversal::canonical(gd, x).unwrap();
        let theta = extend(&restrict(&b2, x, &tau).unwrap());
        let r = SkewAlgebra::build(&theta).unwrap();
        assert_eq!(r.dim(), 9);
        let rep = r.morita_check(x);
        assert!(rep.associativity_witness.is_none());
        assert!(!rep.mu_surjective);
        assert!(!r.r1sr_spans(x));
    }

    #[test]
    fn rejects_overlapping_object_ideals() {
        let gd = Arc::new(crate::groupoid::coarse_groupoid(&["1", "2"]).unwrap());
        let ring = Arc::new(SplitRing::with_unit_atoms(3, 1));
        let full = ring.full_ideal();
        let pa = PartialAction::identity_action(gd, ring, &[full, full]);
        assert!(pa.verify(true).passed());
        assert!(matches!(SkewAlgebra::build(&pa), Err(SkewError::RingNotDirectSum)));
    }
}
