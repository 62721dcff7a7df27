//! The split ring model A = F_p^n.
//!
//! A [`SplitRing`] is a product of n copies of the prime field, with one
//! named central idempotent atom per coordinate. Every ideal is the span of
//! a subset of atoms ([`Ideal`], a bitmask), and every ring isomorphism
//! between two ideals permutes atoms ([`PartialRingIso`], an atom
//! bijection), because the only ring automorphism of F_p is the identity.
//! Partial isomorphisms compose like partial bijections:
//! `f′f : f⁻¹(X′ ∩ Y) → f′(X′ ∩ Y)` for `f: X → Y`, `f′: X′ → Y′`.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("atom names must be distinct and nonempty")]
    BadAtoms,
    #[error("at most 64 atoms are supported, got {0}")]
    TooManyAtoms(usize),
    #[error("element has support outside the domain ideal")]
    OutsideDomain,
    #[error("not a sub-ideal of the domain")]
    NotSubIdeal,
    #[error("atom pairs do not form a bijection")]
    NotBijective,
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("coefficient vector has wrong length")]
    WrongLength,
}

/// An ideal of a split ring: the sub-F_p-space spanned by a set of atoms.
/// It is itself a unital ring with identity Σ_{i∈S} e_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct Ideal(u64);

impl Ideal {
    pub const EMPTY: Ideal = Ideal(0);

    pub fn from_atoms(atoms: &[usize]) -> Ideal {
        let mut bits = 0u64;
        for &a in atoms {
            debug_assert!(a < 64);
            bits |= 1 << a;
        }
        Ideal(bits)
    }

    pub fn full(n: usize) -> Ideal {
        if n == 64 {
            Ideal(!0)
        } else {
            Ideal((1u64 << n) - 1)
        }
    }

    pub fn single(a: usize) -> Ideal {
        Ideal(1 << a)
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0 >> a & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn atoms(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |&a| self.contains(a))
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersect(&self, other: &Ideal) -> Ideal {
        Ideal(self.0 & other.0)
    }

    pub fn union(&self, other: &Ideal) -> Ideal {
        Ideal(self.0 | other.0)
    }

    pub fn minus(&self, other: &Ideal) -> Ideal {
        Ideal(self.0 & !other.0)
    }

    pub fn disjoint(&self, other: &Ideal) -> bool {
        self.0 & other.0 == 0
    }
}

/// An element of F_p^n as a dense coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RingElement {
    coeffs: Vec<u64>,
}

impl RingElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, atom: usize) -> u64 {
        self.coeffs[atom]
    }

    pub fn support(&self) -> Ideal {
        let mut bits = 0u64;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                bits |= 1 << i;
            }
        }
        Ideal(bits)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// F_p^n with named atoms. All arithmetic is coordinatewise mod p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitRing {
    p: u64,
    atoms: Vec<String>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl SplitRing {
    pub fn new(p: u64, atoms: Vec<String>) -> Result<SplitRing, RingError> {
        if !is_prime(p) {
            return Err(RingError::NotPrime(p));
        }
        if atoms.len() > 64 {
            return Err(RingError::TooManyAtoms(atoms.len()));
        }
        let mut seen = std::collections::HashSet::new();
        if atoms.is_empty() || atoms.iter().any(|a| a.is_empty() || !seen.insert(a)) {
            return Err(RingError::BadAtoms);
        }
        Ok(SplitRing { p, atoms })
    }

    /// Convenience constructor with atoms `e1..e{n}`.
    pub fn with_unit_atoms(p: u64, n: usize) -> SplitRing {
        SplitRing::new(p, (1..=n).map(|i| format!("e{i}")).collect()).expect("valid")
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn num_atoms(&self) -> usize {
        self.atoms.len()
    }

    pub fn atom_name(&self, i: usize) -> &str {
        &self.atoms[i]
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_by_name(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    pub fn full_ideal(&self) -> Ideal {
        Ideal::full(self.atoms.len())
    }

    pub fn zero(&self) -> RingElement {
        RingElement { coeffs: vec![0; self.atoms.len()] }
    }

    pub fn one(&self) -> RingElement {
        RingElement { coeffs: vec![1; self.atoms.len()] }
    }

    pub fn atom_elem(&self, i: usize) -> RingElement {
        let mut e = self.zero();
        e.coeffs[i] = 1;
        e
    }

    pub fn elem(&self, coeffs: Vec<u64>) -> Result<RingElement, RingError> {
        if coeffs.len() != self.atoms.len() {
            return Err(RingError::WrongLength);
        }
        Ok(RingElement { coeffs: coeffs.into_iter().map(|c| c % self.p).collect() })
    }

    /// The central idempotent 1_S = Σ_{i∈S} e_i of an ideal.
    pub fn idem(&self, ideal: Ideal) -> RingElement {
        let mut e = self.zero();
        for a in ideal.atoms() {
            e.coeffs[a] = 1;
        }
        e
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| (x + y) % self.p).collect(),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(x, y)| (x + self.p - y) % self.p)
                .collect(),
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x * y % self.p).collect(),
        }
    }

    pub fn scale(&self, c: u64, a: &RingElement) -> RingElement {
        RingElement { coeffs: a.coeffs.iter().map(|x| x * (c % self.p) % self.p).collect() }
    }

    /// `a · 1_S`: the projection of `a` onto an ideal's atoms.
    pub fn mask(&self, a: &RingElement, ideal: Ideal) -> RingElement {
        RingElement {
            coeffs: a
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| if ideal.contains(i) { c } else { 0 })
                .collect(),
        }
    }

    pub fn describe_ideal(&self, ideal: Ideal) -> String {
        let names: Vec<&str> = ideal.atoms().map(|a| self.atom_name(a)).collect();
        format!("[{}]", names.join(", "))
    }
}

/// A ring isomorphism between two ideals of the same split ring, stored as
/// an atom bijection (pairs sorted by source atom).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialRingIso {
    pairs: Vec<(usize, usize)>,
    dom: Ideal,
    cod: Ideal,
}

impl PartialRingIso {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<PartialRingIso, RingError> {
        pairs.sort_unstable();
        let dom = Ideal::from_atoms(&pairs.iter().map(|p| p.0).collect::<Vec<_>>());
        let cod = Ideal::from_atoms(&pairs.iter().map(|p| p.1).collect::<Vec<_>>());
        if dom.len() != pairs.len() || cod.len() != pairs.len() {
            return Err(RingError::NotBijective);
        }
        Ok(PartialRingIso { pairs, dom, cod })
    }

    pub fn empty() -> PartialRingIso {
        PartialRingIso { pairs: Vec::new(), dom: Ideal::EMPTY, cod: Ideal::EMPTY }
    }

    pub fn identity(ideal: Ideal) -> PartialRingIso {
        PartialRingIso {
            pairs: ideal.atoms().map(|a| (a, a)).collect(),
            dom: ideal,
            cod: ideal,
        }
    }

    pub fn dom(&self) -> Ideal {
        self.dom
    }

    pub fn cod(&self) -> Ideal {
        self.cod
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn map_atom(&self, a: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&a, |p| p.0)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn unmap_atom(&self, b: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.1 == b).map(|p| p.0)
    }

    pub fn inverse(&self) -> PartialRingIso {
        let mut pairs: Vec<(usize, usize)> = self.pairs.iter().map(|&(a, b)| (b, a)).collect();
        pairs.sort_unstable();
        PartialRingIso { pairs, dom: self.cod, cod: self.dom }
    }

    /// Transport coefficients along the atom bijection. Errors when the
    /// element has support off the domain.
    pub fn apply(&self, a: &RingElement) -> Result<RingElement, RingError> {
        if !a.support().is_subset(&self.dom) {
            return Err(RingError::OutsideDomain);
        }
        let mut out = vec![0u64; a.coeffs.len()];
        for &(s, t) in &self.pairs {
            out[t] = a.coeffs[s];
        }
        Ok(RingElement { coeffs: out })
    }

    /// Image of `ideal ∩ dom`.
    pub fn image(&self, ideal: Ideal) -> Ideal {
        let atoms: Vec<usize> = self
            .pairs
            .iter()
            .filter(|&&(s, _)| ideal.contains(s))
            .map(|&(_, t)| t)
            .collect();
        Ideal::from_atoms(&atoms)
    }

    /// Preimage of `ideal ∩ cod`.
    pub fn preimage(&self, ideal: Ideal) -> Ideal {
        let atoms: Vec<usize> = self
            .pairs
            .iter()
            .filter(|&&(_, t)| ideal.contains(t))
            .map(|&(s, _)| s)
            .collect();
        Ideal::from_atoms(&atoms)
    }

    /// Restriction to a sub-ideal of the domain.
    pub fn restrict(&self, ideal: Ideal) -> Result<PartialRingIso, RingError> {
        if !ideal.is_subset(&self.dom) {
            return Err(RingError::NotSubIdeal);
        }
        let pairs = self.pairs.iter().copied().filter(|&(s, _)| ideal.contains(s)).collect();
        Ok(PartialRingIso { pairs, dom: ideal, cod: self.image(ideal) })
    }

    /// Composition of partial bijections:
    /// `compose(f′, f) : f⁻¹(dom f′ ∩ cod f) → f′(dom f′ ∩ cod f)`.
    pub fn compose(outer: &PartialRingIso, inner: &PartialRingIso) -> PartialRingIso {
        let mid = outer.dom.intersect(&inner.cod);
        let pairs: Vec<(usize, usize)> = inner
            .pairs
            .iter()
            .filter(|&&(_, t)| mid.contains(t))
            .map(|&(s, t)| (s, outer.map_atom(t).expect("t in outer domain")))
            .collect();
        PartialRingIso::new(pairs).expect("composite of bijections")
    }

    /// Does this isomorphism extend `other` (restrict to it on its domain)?
    pub fn extends(&self, other: &PartialRingIso) -> bool {
        other.dom.is_subset(&self.dom)
            && other.pairs.iter().all(|&(s, t)| self.map_atom(s) == Some(t))
    }

    pub fn describe(&self, ring: &SplitRing) -> String {
        let maps: Vec<String> = self
            .pairs
            .iter()
            .map(|&(s, t)| format!("{} -> {}", ring.atom_name(s), ring.atom_name(t)))
            .collect();
        format!("[{}]", maps.join(", "))
    }
}
