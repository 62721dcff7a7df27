//! Finite groupoids as explicit composition tables.
//!
//! A groupoid is a small category in which every morphism is invertible.
//! Objects are identified with their identity morphisms: the morphisms of a
//! validated [`Groupoid`] are numbered `0..n` with the first `num_objects`
//! ids being the identities, so `identity(x) == x` as indices. For a
//! morphism `g` we write `src(g)` and `tgt(g)`; composition `compose(g, h)`
//! is defined exactly when `src(g) == tgt(h)` and satisfies
//! `src(gh) = src(h)`, `tgt(gh) = tgt(g)`.
//!
//! Connected groupoids factor as (coarse groupoid on the objects) × (isotropy
//! group): picking one morphism `τ_y: x → y` per object (a [`Transversal`])
//! sends `g` to the pair `((src g, tgt g), corner(g))` with
//! `corner(g) = τ_{tgt g}⁻¹ · g · τ_{src g}`, a loop at the base.

use std::collections::HashMap;

use thiserror::Error;

/// Object index. Equal to the id of the object's identity morphism.
pub type Obj = usize;
/// Morphism index.
pub type Mor = usize;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("empty object set")]
    EmptyObjectSet,
    #[error("composition is not associative at ({g}, {h}, {k})")]
    NonAssociative { g: String, h: String, k: String },
    #[error("identity of object `{object}` is not neutral")]
    MissingIdentity { object: String },
    #[error("`{morphism}` has a bad inverse")]
    BadInverse { morphism: String },
    #[error("bad composition domain at ({g}, {h})")]
    BadCompositionDomain { g: String, h: String },
    #[error("conflicting composition rows for ({g}, {h})")]
    ConflictingComposition { g: String, h: String },
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("groupoid is not connected")]
    NotConnected,
    #[error("expected a one-object groupoid (a group)")]
    NotAGroup,
}

/// Raw composition table, as read from a scenario file or a builder.
///
/// Objects double as their identity morphisms and need no arrow entries;
/// rows for pairs with an identity operand are filled in automatically.
#[derive(Debug, Clone, Default)]
pub struct GroupoidTable {
    pub objects: Vec<String>,
    /// (name, src object, tgt object, inverse name) per non-identity arrow.
    pub arrows: Vec<(String, String, String, String)>,
    /// (g, h, gh) rows for composable non-identity pairs.
    pub compositions: Vec<(String, String, String)>,
}

/// A validated finite groupoid with dense composition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    names: Vec<String>,
    num_objects: usize,
    src: Vec<Obj>,
    tgt: Vec<Obj>,
    inv: Vec<Mor>,
    comp: Vec<Option<Mor>>,
    by_name: HashMap<String, Mor>,
}

impl Groupoid {
    pub fn num_objects(&self) -> usize {
        self.num_objects
    }

    pub fn num_morphisms(&self) -> usize {
        self.names.len()
    }

    pub fn objects(&self) -> std::ops::Range<Obj> {
        0..self.num_objects
    }

    pub fn morphisms(&self) -> std::ops::Range<Mor> {
        0..self.names.len()
    }

    pub fn object_name(&self, x: Obj) -> &str {
        &self.names[x]
    }

    pub fn mor_name(&self, g: Mor) -> &str {
        &self.names[g]
    }

    pub fn mor_by_name(&self, name: &str) -> Option<Mor> {
        self.by_name.get(name).copied()
    }

    pub fn object_by_name(&self, name: &str) -> Option<Obj> {
        self.by_name.get(name).copied().filter(|&m| m < self.num_objects)
    }

    pub fn src(&self, g: Mor) -> Obj {
        self.src[g]
    }

    pub fn tgt(&self, g: Mor) -> Obj {
        self.tgt[g]
    }

    pub fn inv(&self, g: Mor) -> Mor {
        self.inv[g]
    }

    /// The identity morphism of an object. Identities occupy ids `0..num_objects`.
    pub fn identity(&self, x: Obj) -> Mor {
        x
    }

    pub fn is_identity(&self, g: Mor) -> bool {
        g < self.num_objects
    }

    /// `g ∘ h`, defined iff `src(g) == tgt(h)`.
    pub fn compose(&self, g: Mor, h: Mor) -> Option<Mor> {
        self.comp[g * self.names.len() + h]
    }

    pub fn composable(&self, g: Mor, h: Mor) -> bool {
        self.src[g] == self.tgt[h]
    }

    /// All composable pairs `(g, h)` in lexicographic order.
    pub fn composable_pairs(&self) -> Vec<(Mor, Mor)> {
        let n = self.names.len();
        let mut out = Vec::new();
        for g in 0..n {
            for h in 0..n {
                if self.src[g] == self.tgt[h] {
                    out.push((g, h));
                }
            }
        }
        out
    }

    /// Hom-set G(x, y) = { g : src g = x, tgt g = y }, ascending.
    pub fn hom(&self, x: Obj, y: Obj) -> Vec<Mor> {
        self.morphisms()
            .filter(|&g| self.src[g] == x && self.tgt[g] == y)
            .collect()
    }

    /// Loops at `x`: the isotropy group G(x) as a morphism list.
    pub fn loops_at(&self, x: Obj) -> Vec<Mor> {
        self.hom(x, x)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Partition of the objects by the relation "G(x, y) ≠ ∅".
    pub fn connected_components(&self) -> Vec<Vec<Obj>> {
        let mut dsu = crate::dsu::UnionFind::new(self.num_objects);
        for g in self.morphisms() {
            dsu.union(self.src[g], self.tgt[g]);
        }
        let mut buckets: Vec<Vec<Obj>> = vec![Vec::new(); self.num_objects];
        for x in self.objects() {
            buckets[dsu.find(x)].push(x);
        }
        buckets.retain(|b| !b.is_empty());
        buckets.sort_by_key(|b| b[0]);
        buckets
    }

    /// The full subgroupoid on a subset of objects, with the map from new
    /// morphism ids back to the ambient ones.
    pub fn full_subgroupoid(&self, objs: &[Obj]) -> (Groupoid, Vec<Mor>) {
        let keep_obj: Vec<bool> = {
            let mut v = vec![false; self.num_objects];
            for &x in objs {
                v[x] = true;
            }
            v
        };
        let mut old_mors: Vec<Mor> = Vec::new();
        // identities of the kept objects first, then the kept arrows
        for x in self.objects() {
            if keep_obj[x] {
                old_mors.push(x);
            }
        }
        for g in self.num_objects..self.names.len() {
            if keep_obj[self.src[g]] && keep_obj[self.tgt[g]] {
                old_mors.push(g);
            }
        }
        let new_id: HashMap<Mor, Mor> =
            old_mors.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let num_objects = objs.len();
        let n = old_mors.len();
        let mut comp = vec![None; n * n];
        for (i, &g) in old_mors.iter().enumerate() {
            for (j, &h) in old_mors.iter().enumerate() {
                if let Some(k) = self.compose(g, h) {
                    comp[i * n + j] = Some(new_id[&k]);
                }
            }
        }
        let names: Vec<String> = old_mors.iter().map(|&g| self.names[g].clone()).collect();
        let by_name = names.iter().cloned().zip(0..).collect();
        let mut obj_new: HashMap<Obj, Obj> = HashMap::new();
        for (i, &g) in old_mors.iter().enumerate().take(num_objects) {
            obj_new.insert(g, i);
        }
        let sub = Groupoid {
            names,
            num_objects,
            src: old_mors.iter().map(|&g| obj_new[&self.src[g]]).collect(),
            tgt: old_mors.iter().map(|&g| obj_new[&self.tgt[g]]).collect(),
            inv: old_mors.iter().map(|&g| new_id[&self.inv[g]]).collect(),
            comp,
            by_name,
        };
        (sub, old_mors)
    }

    /// The isotropy group G(x) as a one-object groupoid, with the map from
    /// its morphism ids to the ambient loop ids (ascending).
    pub fn isotropy(&self, x: Obj) -> Result<(Groupoid, Vec<Mor>), GroupoidError> {
        if x >= self.num_objects {
            return Err(GroupoidError::UnknownObject(format!("#{x}")));
        }
        let loops = self.loops_at(x);
        let n = loops.len();
        let new_id: HashMap<Mor, Mor> = loops.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut comp = vec![None; n * n];
        for (i, &g) in loops.iter().enumerate() {
            for (j, &h) in loops.iter().enumerate() {
                comp[i * n + j] = Some(new_id[&self.compose(g, h).expect("loops compose")]);
            }
        }
        let names: Vec<String> = loops.iter().map(|&g| self.names[g].clone()).collect();
        let by_name = names.iter().cloned().zip(0..).collect();
        let group = Groupoid {
            names,
            num_objects: 1,
            src: vec![0; n],
            tgt: vec![0; n],
            inv: loops.iter().map(|&g| new_id[&self.inv[g]]).collect(),
            comp,
            by_name,
        };
        Ok((group, loops))
    }

    /// All transversals based at `x`, in lexicographic order by
    /// (object, chosen morphism). Requires a connected groupoid; the count is
    /// ∏_{y≠x} |G(x, y)|.
    pub fn transversals(&self, x: Obj) -> Result<Vec<Transversal>, GroupoidError> {
        if x >= self.num_objects {
            return Err(GroupoidError::UnknownObject(format!("#{x}")));
        }
        if !self.is_connected() {
            return Err(GroupoidError::NotConnected);
        }
        let choices: Vec<Vec<Mor>> = self
            .objects()
            .map(|y| if y == x { vec![self.identity(x)] } else { self.hom(x, y) })
            .collect();
        let mut out = vec![Transversal { base: x, pick: vec![0; self.num_objects] }];
        for (y, alts) in choices.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * alts.len());
            for t in &out {
                for &m in alts {
                    let mut t2 = t.clone();
                    t2.pick[y] = m;
                    next.push(t2);
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// `corner(g) = τ_{tgt g}⁻¹ · g · τ_{src g}`, a loop at the base of `tau`.
    pub fn corner(&self, g: Mor, tau: &Transversal) -> Mor {
        let right = self.compose(g, tau.pick[self.src[g]]).expect("src matches");
        self.compose(self.inv(tau.pick[self.tgt[g]]), right).expect("tgt matches")
    }

    /// Factor a morphism through the coarse × isotropy decomposition:
    /// `g ↦ ((src g, tgt g), corner(g))`.
    pub fn factor(&self, g: Mor, tau: &Transversal) -> ((Obj, Obj), Mor) {
        ((self.src[g], self.tgt[g]), self.corner(g, tau))
    }

    /// Inverse of [`factor`](Self::factor): `((y, z), h) ↦ τ_z · h · τ_y⁻¹`.
    pub fn assemble(&self, pair: (Obj, Obj), loop_mor: Mor, tau: &Transversal) -> Mor {
        let (y, z) = pair;
        let right = self.compose(loop_mor, self.inv(tau.pick[y])).expect("loop at base");
        self.compose(tau.pick[z], right).expect("base matches")
    }
}

/// One chosen morphism `τ_y ∈ G(base, y)` per object, with `τ_base` the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transversal {
    pub base: Obj,
    pub pick: Vec<Mor>,
}

impl Transversal {
    /// Lexicographically first transversal at `x`.
    pub fn canonical(g: &Groupoid, x: Obj) -> Result<Transversal, GroupoidError> {
        let mut all = g.transversals(x)?;
        if all.is_empty() {
            return Err(GroupoidError::NotConnected);
        }
        Ok(all.swap_remove(0))
    }

    pub fn is_valid(&self, g: &Groupoid) -> bool {
        self.base < g.num_objects()
            && self.pick.len() == g.num_objects()
            && self.pick[self.base] == g.identity(self.base)
            && self
                .pick
                .iter()
                .enumerate()
                .all(|(y, &m)| g.src(m) == self.base && g.tgt(m) == y)
    }

    /// The transversal at `z` induced by this one: `λ_w = τ_w · τ_z⁻¹`.
    ///
    /// Rebasing with this choice makes datum transport round-trips exact;
    /// an arbitrary transversal at `z` conjugates the loop data by
    /// `λ_base · τ_z` on the way back.
    pub fn rebase(&self, g: &Groupoid, z: Obj) -> Transversal {
        let tz_inv = g.inv(self.pick[z]);
        let pick = self
            .pick
            .iter()
            .map(|&tw| g.compose(tw, tz_inv).expect("same base"))
            .collect();
        Transversal { base: z, pick }
    }

    pub fn describe(&self, g: &Groupoid) -> String {
        let picks: Vec<String> = self
            .pick
            .iter()
            .enumerate()
            .map(|(y, &m)| format!("{}←{}", g.object_name(y), g.mor_name(m)))
            .collect();
        format!("base {} [{}]", g.object_name(self.base), picks.join(", "))
    }
}

/// Validate a raw table against the groupoid axioms.
///
/// Checks, in order: name resolution, totality of the composition on
/// composable pairs, source/target of composites, neutrality of identities,
/// inverses, and associativity on all composable triples. The returned
/// groupoid numbers identities `0..num_objects` in declaration order,
/// followed by the arrows in declaration order.
pub fn validate_groupoid(table: &GroupoidTable) -> Result<Groupoid, GroupoidError> {
    if table.objects.is_empty() {
        return Err(GroupoidError::EmptyObjectSet);
    }
    let num_objects = table.objects.len();
    let mut names: Vec<String> = table.objects.clone();
    names.extend(table.arrows.iter().map(|a| a.0.clone()));
    let mut by_name: HashMap<String, Mor> = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if by_name.insert(n.clone(), i).is_some() {
            return Err(GroupoidError::DuplicateName(n.clone()));
        }
    }
    let lookup = |n: &str| -> Result<Mor, GroupoidError> {
        by_name.get(n).copied().ok_or_else(|| GroupoidError::UnknownName(n.to_string()))
    };

    let n = names.len();
    let mut src: Vec<Obj> = (0..num_objects).collect();
    let mut tgt: Vec<Obj> = (0..num_objects).collect();
    let mut inv: Vec<Mor> = (0..num_objects).collect();
    for (name, s, t, i) in &table.arrows {
        let s = lookup(s)?;
        let t = lookup(t)?;
        if s >= num_objects || t >= num_objects {
            return Err(GroupoidError::UnknownObject(format!("endpoint of {name}")));
        }
        src.push(s);
        tgt.push(t);
        inv.push(lookup(i)?);
    }

    let mut comp: Vec<Option<Mor>> = vec![None; n * n];
    // identity operands compose by neutrality: id_{tgt g} ∘ g = g = g ∘ id_{src g}
    for g in 0..n {
        comp[tgt[g] * n + g] = Some(g);
        comp[g * n + src[g]] = Some(g);
    }
    for (gn, hn, kn) in &table.compositions {
        let g = lookup(gn)?;
        let h = lookup(hn)?;
        let k = lookup(kn)?;
        if src[g] != tgt[h] {
            return Err(GroupoidError::BadCompositionDomain { g: gn.clone(), h: hn.clone() });
        }
        let cell = &mut comp[g * n + h];
        match *cell {
            Some(prev) if prev != k => {
                // an explicit row may only contradict another row or neutrality
                if g < num_objects || h < num_objects {
                    let x = if g < num_objects { g } else { h };
                    return Err(GroupoidError::MissingIdentity { object: names[x].clone() });
                }
                return Err(GroupoidError::ConflictingComposition {
                    g: gn.clone(),
                    h: hn.clone(),
                });
            }
            _ => *cell = Some(k),
        }
    }
    // totality on composable pairs, and nothing else
    for g in 0..n {
        for h in 0..n {
            let defined = comp[g * n + h].is_some();
            if (src[g] == tgt[h]) != defined {
                return Err(GroupoidError::BadCompositionDomain {
                    g: names[g].clone(),
                    h: names[h].clone(),
                });
            }
            if let Some(k) = comp[g * n + h] {
                if src[k] != src[h] || tgt[k] != tgt[g] {
                    return Err(GroupoidError::BadCompositionDomain {
                        g: names[g].clone(),
                        h: names[h].clone(),
                    });
                }
            }
        }
    }
    // inverses: g⁻¹g = id_src(g), gg⁻¹ = id_tgt(g), involutive
    for g in 0..n {
        let gi = inv[g];
        let ok = inv[gi] == g
            && src[gi] == tgt[g]
            && tgt[gi] == src[g]
            && comp[gi * n + g] == Some(src[g])
            && comp[g * n + gi] == Some(tgt[g]);
        if !ok {
            return Err(GroupoidError::BadInverse { morphism: names[g].clone() });
        }
    }
    // associativity on all composable triples
    for g in 0..n {
        for h in 0..n {
            if src[g] != tgt[h] {
                continue;
            }
            let gh = comp[g * n + h].unwrap();
            for k in 0..n {
                if src[h] != tgt[k] {
                    continue;
                }
                let hk = comp[h * n + k].unwrap();
                if comp[gh * n + k] != comp[g * n + hk] {
                    return Err(GroupoidError::NonAssociative {
                        g: names[g].clone(),
                        h: names[h].clone(),
                        k: names[k].clone(),
                    });
                }
            }
        }
    }

    Ok(Groupoid { names, num_objects, src, tgt, inv, comp, by_name })
}

/// The coarse groupoid Y²: one morphism `y → z` per ordered pair, composing
/// by `(z,w)(y,z) = (y,w)`.
pub fn coarse_groupoid(names: &[&str]) -> Result<Groupoid, GroupoidError> {
    if names.is_empty() {
        return Err(GroupoidError::EmptyObjectSet);
    }
    let arrow = |y: &str, z: &str| format!("{y}_{z}");
    let mut table = GroupoidTable {
        objects: names.iter().map(|s| s.to_string()).collect(),
        ..Default::default()
    };
    let nm = |y: usize, z: usize| {
        if y == z {
            names[y].to_string()
        } else {
            arrow(names[y], names[z])
        }
    };
    for y in 0..names.len() {
        for z in 0..names.len() {
            if y != z {
                table.arrows.push((
                    nm(y, z),
                    names[y].to_string(),
                    names[z].to_string(),
                    nm(z, y),
                ));
            }
        }
    }
    for y in 0..names.len() {
        for z in 0..names.len() {
            for w in 0..names.len() {
                // (z,w) ∘ (y,z) = (y,w)
                if y != z && z != w {
                    table.compositions.push((nm(z, w), nm(y, z), nm(y, w)));
                }
            }
        }
    }
    validate_groupoid(&table)
}

/// The cyclic group Z_n as a one-object groupoid with object `e` and arrows
/// `r1..r{n-1}`.
pub fn cyclic_group(n: usize) -> Groupoid {
    assert!(n >= 1);
    let mut table =
        GroupoidTable { objects: vec!["e".to_string()], ..Default::default() };
    let nm = |k: usize| if k == 0 { "e".to_string() } else { format!("r{k}") };
    for k in 1..n {
        table.arrows.push((nm(k), "e".into(), "e".into(), nm((n - k) % n)));
    }
    for a in 1..n {
        for b in 1..n {
            table.compositions.push((nm(a), nm(b), nm((a + b) % n)));
        }
    }
    validate_groupoid(&table).expect("cyclic group is valid")
}

/// The connected groupoid with objects `1..=m` over a group `H`: morphisms
/// `(i, g, j): j → i` named `i_g_j`, composing by `(i,g,j)(j,h,l) = (i,gh,l)`.
pub fn brandt_groupoid(m: usize, h: &Groupoid) -> Result<Groupoid, GroupoidError> {
    if m == 0 {
        return Err(GroupoidError::EmptyObjectSet);
    }
    if h.num_objects() != 1 {
        return Err(GroupoidError::NotAGroup);
    }
    let gname = |g: Mor| h.mor_name(g);
    let nm = |i: usize, g: Mor, j: usize| {
        if i == j && h.is_identity(g) {
            format!("{i}")
        } else {
            format!("{i}_{}_{j}", gname(g))
        }
    };
    let mut table = GroupoidTable {
        objects: (1..=m).map(|i| i.to_string()).collect(),
        ..Default::default()
    };
    for i in 1..=m {
        for g in h.morphisms() {
            for j in 1..=m {
                if i == j && h.is_identity(g) {
                    continue;
                }
                // s(i,g,j) = j, t(i,g,j) = i
                table.arrows.push((
                    nm(i, g, j),
                    j.to_string(),
                    i.to_string(),
                    nm(j, h.inv(g), i),
                ));
            }
        }
    }
    for i in 1..=m {
        for g in h.morphisms() {
            for j in 1..=m {
                if i == j && h.is_identity(g) {
                    continue;
                }
                for g2 in h.morphisms() {
                    for l in 1..=m {
                        if j == l && h.is_identity(g2) {
                            continue;
                        }
                        let prod = h.compose(g, g2).expect("group is total");
                        table.compositions.push((
                            nm(i, g, j),
                            nm(j, g2, l),
                            nm(i, prod, l),
                        ));
                    }
                }
            }
        }
    }
    validate_groupoid(&table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::hex_table;

    #[test]
    fn hex_table_is_valid() {
        let g = validate_groupoid(&hex_table()).unwrap();
        assert_eq!(g.num_objects(), 2);
        assert_eq!(g.num_morphisms(), 8);
        // s(gh) = s(h), t(gh) = t(g) on every composable pair
        for (a, b) in g.composable_pairs() {
            let ab = g.compose(a, b).unwrap();
            assert_eq!(g.src(ab), g.src(b));
            assert_eq!(g.tgt(ab), g.tgt(a));
        }
    }

    #[test]
    fn trivial_group_is_valid() {
        let g = cyclic_group(1);
        assert_eq!(g.num_morphisms(), 1);
        assert!(g.is_connected());
    }

    #[test]
    fn broken_hex_is_non_associative() {
        let mut t = hex_table();
        for row in &mut t.compositions {
            if row.0 == "l" && row.1 == "g" {
                row.2 = "l".into(); // was m
            }
        }
        match validate_groupoid(&t) {
            Err(GroupoidError::NonAssociative { .. }) => {}
            other => panic!("expected NonAssociative, got {other:?}"),
        }
    }

    #[test]
    fn components() {
        let hex = validate_groupoid(&hex_table()).unwrap();
        assert_eq!(hex.connected_components(), vec![vec![0, 1]]);

        // two disjoint copies of Z₂
        let two = GroupoidTable {
            objects: vec!["a".into(), "b".into()],
            arrows: vec![
                ("g".into(), "a".into(), "a".into(), "g".into()),
                ("h".into(), "b".into(), "b".into(), "h".into()),
            ],
            compositions: vec![
                ("g".into(), "g".into(), "a".into()),
                ("h".into(), "h".into(), "b".into()),
            ],
        };
        let two = validate_groupoid(&two).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps, vec![vec![0], vec![1]]);
        let (sub, mors) = two.full_subgroupoid(&comps[0]);
        assert_eq!(sub.num_morphisms(), 2);
        assert_eq!(mors, vec![0, 2]);
        let total: usize =
            comps.iter().map(|c| two.full_subgroupoid(c).1.len()).sum();
        assert_eq!(total, two.num_morphisms());

        let gamma = brandt_groupoid(2, &cyclic_group(2)).unwrap();
        assert_eq!(gamma.connected_components().len(), 1);
        let one = gamma.object_by_name("1").unwrap();
        let two_ = gamma.object_by_name("2").unwrap();
        assert!(!gamma.hom(one, two_).is_empty());
    }

    #[test]
    fn isotropy_groups() {
        let hex = validate_groupoid(&hex_table()).unwrap();
        let x = hex.object_by_name("x").unwrap();
        let (gx, loops) = hex.isotropy(x).unwrap();
        assert_eq!(gx.num_morphisms(), 2);
        assert_eq!(loops, vec![x, hex.mor_by_name("g").unwrap()]);
        let g = 1;
        assert_eq!(gx.compose(g, g), Some(0)); // g² = x

        let coarse = coarse_groupoid(&["1", "2"]).unwrap();
        let (triv, _) = coarse.isotropy(0).unwrap();
        assert_eq!(triv.num_morphisms(), 1);

        let gamma = brandt_groupoid(2, &cyclic_group(2)).unwrap();
        let (gz, loops) = gamma.isotropy(gamma.object_by_name("1").unwrap()).unwrap();
        assert_eq!(gz.num_morphisms(), 2);
        assert_eq!(loops.len(), 2);
    }

    #[test]
    fn transversal_enumeration() {
        let hex = validate_groupoid(&hex_table()).unwrap();
        let x = hex.object_by_name("x").unwrap();
        let ts = hex.transversals(x).unwrap();
        assert_eq!(ts.len(), 2); // τ_y ∈ {l, m}
        assert_eq!(ts[0].pick[1], hex.mor_by_name("l").unwrap());
        assert_eq!(ts[1].pick[1], hex.mor_by_name("m").unwrap());

        let triv = cyclic_group(1);
        assert_eq!(triv.transversals(0).unwrap().len(), 1);

        let gamma = brandt_groupoid(2, &cyclic_group(2)).unwrap();
        let one = gamma.object_by_name("1").unwrap();
        let ts = gamma.transversals(one).unwrap();
        assert_eq!(ts.len(), 2); // |G(1,2)| = 2
        // counts multiply over objects
        let y = gamma.object_by_name("2").unwrap();
        let expected: usize = gamma
            .objects()
            .filter(|&w| w != one)
            .map(|w| gamma.hom(one, w).len())
            .product();
        assert_eq!(ts.len(), expected);
        assert_eq!(gamma.hom(one, y).len(), 2);
    }

    #[test]
    fn corners_match_hand_values() {
        let hex = validate_groupoid(&hex_table()).unwrap();
        let x = hex.object_by_name("x").unwrap();
        let tau = Transversal::canonical(&hex, x).unwrap(); // τ_y = l
        let by = |n: &str| hex.mor_by_name(n).unwrap();
        let g = by("g");
        // g_x = h_x = m_x = (m⁻¹)_x = g
        for n in ["g", "h", "m", "m_inv"] {
            assert_eq!(hex.corner(by(n), &tau), g, "corner of {n}");
        }
        // l_x = (l⁻¹)_x = x_x = y_x = x
        for n in ["l", "l_inv", "x", "y"] {
            assert_eq!(hex.corner(by(n), &tau), x, "corner of {n}");
        }
        // corner of an identity is the base identity
        assert_eq!(hex.corner(hex.identity(1), &tau), hex.identity(x));
        // functorial: (gh)_x = g_x · h_x
        for (a, b) in hex.composable_pairs() {
            let ab = hex.compose(a, b).unwrap();
            let want = hex
                .compose(hex.corner(a, &tau), hex.corner(b, &tau))
                .unwrap();
            assert_eq!(hex.corner(ab, &tau), want);
        }
    }

    #[test]
    fn factor_assemble_roundtrip() {
        let hex = validate_groupoid(&hex_table()).unwrap();
        let x = hex.object_by_name("x").unwrap();
        let y = hex.object_by_name("y").unwrap();
        let tau = Transversal::canonical(&hex, x).unwrap();
        let m = hex.mor_by_name("m").unwrap();
        let g = hex.mor_by_name("g").unwrap();
        assert_eq!(hex.factor(m, &tau), ((x, y), g));
        assert_eq!(hex.factor(hex.identity(x), &tau), ((x, x), hex.identity(x)));
        for mor in hex.morphisms() {
            let ((s, t), c) = hex.factor(mor, &tau);
            assert_eq!(hex.assemble((s, t), c, &tau), mor);
        }
        // homomorphism into (coarse) × G(x)
        for (a, b) in hex.composable_pairs() {
            let ((sa, ta), ca) = hex.factor(a, &tau);
            let ((sb, tb), cb) = hex.factor(b, &tau);
            assert_eq!(sa, tb);
            let ((sc, tc), cc) = hex.factor(hex.compose(a, b).unwrap(), &tau);
            assert_eq!((sc, tc), (sb, ta));
            assert_eq!(cc, hex.compose(ca, cb).unwrap());
        }
    }

    #[test]
    fn builders() {
        let coarse = coarse_groupoid(&["1", "2"]).unwrap();
        assert_eq!(coarse.num_morphisms(), 4);
        assert!(coarse_groupoid(&[]).is_err());

        let z2 = cyclic_group(2);
        let gamma = brandt_groupoid(2, &z2).unwrap();
        assert_eq!(gamma.num_morphisms(), 8); // m·|H|·m
        let m = gamma.mor_by_name("1_r1_2").unwrap();
        // s(i,g,j) = j, t(i,g,j) = i
        assert_eq!(gamma.object_name(gamma.src(m)), "2");
        assert_eq!(gamma.object_name(gamma.tgt(m)), "1");

        let gamma1 = brandt_groupoid(1, &z2).unwrap();
        assert_eq!(gamma1.num_morphisms(), z2.num_morphisms());
        assert_eq!(gamma1.loops_at(0).len(), 2);
    }

    #[test]
    fn rebase_transversal() {
        let hex = validate_groupoid(&hex_table()).unwrap();
        let x = hex.object_by_name("x").unwrap();
        let y = hex.object_by_name("y").unwrap();
        let tau = Transversal::canonical(&hex, x).unwrap();
        let lam = tau.rebase(&hex, y);
        assert!(lam.is_valid(&hex));
        assert_eq!(lam.base, y);
        // λ_x = τ_y⁻¹
        assert_eq!(lam.pick[x], hex.inv(tau.pick[y]));
        // rebasing back recovers τ
        assert_eq!(lam.rebase(&hex, x), tau);
    }
}
