//! Built-in instances used by the test suites and the CLI.
//!
//! * `FX-HEX` — the two-object groupoid {x, y, g, h, l, m, l⁻¹, m⁻¹} with
//!   g² = x, h² = y and lg = m = hl.
//! * `FX-B2` — the non-recoverable partial action of FX-HEX on F_p^6.
//! * `FX-GAMMA` — the global action of the 2×2 matrix groupoid over Z₂ on
//!   F_p^4 (atoms a1, a2, b1, b2).
//! * `FX-DAT` — group-type restriction data over FX-HEX on F_p^4 with
//!   σ = (e1 e2), γ = (e1 e4)(e2 e3) and carrier idempotent e1 + e3.
//! * `FX-GLOB` — FX-DAT plus minimal enveloping data J_x = [e1,e2,e3],
//!   J_y = [e2,e3,e4] inside B = F_p^4.
//!
//! Every loader verifies its fixture before returning it.

use std::sync::Arc;

use crate::action::{IsotropyAction, PartialAction};
use crate::datum::{extend, Datum};
use crate::globalization::GlobalizationData;
use crate::groupoid::{
    brandt_groupoid, cyclic_group, validate_groupoid, Groupoid, GroupoidTable, Transversal,
};
use crate::ring::{Ideal, PartialRingIso, SplitRing};

pub const FIXTURE_NAMES: [&str; 5] = ["FX-HEX", "FX-B2", "FX-GAMMA", "FX-DAT", "FX-GLOB"];

/// The raw table of the hexagon groupoid.
pub fn hex_table() -> GroupoidTable {
    let a = |n: &str, s: &str, t: &str, i: &str| {
        (n.to_string(), s.to_string(), t.to_string(), i.to_string())
    };
    let c = |g: &str, h: &str, k: &str| (g.to_string(), h.to_string(), k.to_string());
    GroupoidTable {
        objects: vec!["x".into(), "y".into()],
        arrows: vec![
            a("g", "x", "x", "g"),
            a("h", "y", "y", "h"),
            a("l", "x", "y", "l_inv"),
            a("l_inv", "y", "x", "l"),
            a("m", "x", "y", "m_inv"),
            a("m_inv", "y", "x", "m"),
        ],
        compositions: vec![
            c("g", "g", "x"),
            c("h", "h", "y"),
            c("l", "g", "m"),
            c("m", "g", "l"),
            c("h", "l", "m"),
            c("h", "m", "l"),
            c("l_inv", "h", "m_inv"),
            c("m_inv", "h", "l_inv"),
            c("g", "l_inv", "m_inv"),
            c("g", "m_inv", "l_inv"),
            c("l", "l_inv", "y"),
            c("l", "m_inv", "h"),
            c("m", "l_inv", "h"),
            c("m", "m_inv", "y"),
            c("l_inv", "l", "x"),
            c("l_inv", "m", "g"),
            c("m_inv", "l", "g"),
            c("m_inv", "m", "x"),
        ],
    }
}

pub fn hex_groupoid() -> Arc<Groupoid> {
    Arc::new(validate_groupoid(&hex_table()).expect("hexagon table is valid"))
}

fn iso(pairs: &[(usize, usize)]) -> PartialRingIso {
    PartialRingIso::new(pairs.to_vec()).expect("fixture bijection")
}

/// The non-recoverable action on F_p^6: identities on A_x = [e1,e2,e3] and
/// A_y = [e4,e5,e6], loops acting as identities of ke1 and ke6, and
/// l: ke2 → ke4, m: ke3 → ke5.
pub fn b2_action(p: u64) -> PartialAction {
    let gd = hex_groupoid();
    let ring = Arc::new(SplitRing::with_unit_atoms(p, 6));
    let by = |n: &str| gd.mor_by_name(n).unwrap();
    let ax = Ideal::from_atoms(&[0, 1, 2]);
    let ay = Ideal::from_atoms(&[3, 4, 5]);
    let mut ideals = vec![Ideal::EMPTY; gd.num_morphisms()];
    let mut isos = vec![PartialRingIso::empty(); gd.num_morphisms()];
    ideals[by("x")] = ax;
    ideals[by("y")] = ay;
    ideals[by("g")] = Ideal::single(0);
    ideals[by("h")] = Ideal::single(5);
    ideals[by("l")] = Ideal::single(3);
    ideals[by("l_inv")] = Ideal::single(1);
    ideals[by("m")] = Ideal::single(4);
    ideals[by("m_inv")] = Ideal::single(2);
    isos[by("x")] = PartialRingIso::identity(ax);
    isos[by("y")] = PartialRingIso::identity(ay);
    isos[by("g")] = PartialRingIso::identity(Ideal::single(0));
    isos[by("h")] = PartialRingIso::identity(Ideal::single(5));
    isos[by("l")] = iso(&[(1, 3)]);
    isos[by("l_inv")] = iso(&[(3, 1)]);
    isos[by("m")] = iso(&[(2, 4)]);
    isos[by("m_inv")] = iso(&[(4, 2)]);
    let pa = PartialAction::new(gd, ring, ideals, isos);
    assert!(pa.verify(false).passed(), "FX-B2 must satisfy the axioms");
    pa
}

/// Group-type restriction data over the hexagon groupoid on F_p^4.
pub fn dat_datum(p: u64) -> Datum {
    let gd = hex_groupoid();
    let ring = Arc::new(SplitRing::with_unit_atoms(p, 4));
    let x = gd.object_by_name("x").unwrap();
    let tau = Transversal::canonical(&gd, x).unwrap(); // τ_y = l
    let ix = Ideal::from_atoms(&[0, 2]); // e1, e3
    let iy = Ideal::from_atoms(&[1, 3]); // e2, e4
    let (group_gd, loops) = gd.isotropy(x).unwrap();
    let group_gd = Arc::new(group_gd);
    let ig = Ideal::single(2); // ke3 = I_x · σ(I_x)
    let group = IsotropyAction {
        action: PartialAction::new(
            Arc::clone(&group_gd),
            Arc::clone(&ring),
            vec![ix, ig],
            vec![PartialRingIso::identity(ix), PartialRingIso::identity(ig)],
        ),
        loops,
    };
    let d = Datum::new(
        gd,
        ring,
        tau,
        vec![ix, iy],
        vec![PartialRingIso::identity(ix), iso(&[(0, 3), (2, 1)])],
        group,
    )
    .expect("FX-DAT shape");
    assert!(d.verify(false).passed(), "FX-DAT must satisfy the datum axioms");
    d
}

/// Restriction data for the 2×2 matrix groupoid over Z₂ acting on F_p^4.
pub fn gamma22_datum(p: u64) -> Datum {
    let gd = Arc::new(brandt_groupoid(2, &cyclic_group(2)).expect("valid"));
    let ring = Arc::new(
        SplitRing::new(p, vec!["a1".into(), "a2".into(), "b1".into(), "b2".into()])
            .expect("valid ring"),
    );
    let one = gd.object_by_name("1").unwrap();
    let tau = Transversal::canonical(&gd, one).unwrap(); // τ_2 = (2,e,1)
    let i1 = Ideal::from_atoms(&[0, 1]);
    let i2 = Ideal::from_atoms(&[2, 3]);
    let (group_gd, loops) = gd.isotropy(one).unwrap();
    let group = IsotropyAction {
        action: PartialAction::new(
            Arc::new(group_gd),
            Arc::clone(&ring),
            vec![i1, i1],
            vec![PartialRingIso::identity(i1), iso(&[(0, 1), (1, 0)])],
        ),
        loops,
    };
    let d = Datum::new(
        gd,
        ring,
        tau,
        vec![i1, i2],
        vec![PartialRingIso::identity(i1), iso(&[(0, 2), (1, 3)])],
        group,
    )
    .expect("FX-GAMMA shape");
    assert!(d.verify(false).passed(), "FX-GAMMA datum must verify");
    d
}

/// The global action extended from [`gamma22_datum`].
pub fn gamma22_action(p: u64) -> PartialAction {
    let theta = extend(&gamma22_datum(p));
    assert!(theta.verify(false).passed() && theta.is_global());
    theta
}

/// FX-DAT together with its minimal enveloping data inside B = F_p^4:
/// J_x = [e1,e2,e3] with the loop acting by σ = (e1 e2), J_y = [e2,e3,e4]
/// and γ̃_{τ_y} = γ restricted to J_x.
pub fn glob_data(p: u64) -> GlobalizationData {
    let datum = dat_datum(p);
    let ring_b = Arc::clone(datum.ring());
    let jx = Ideal::from_atoms(&[0, 1, 2]);
    let jy = Ideal::from_atoms(&[1, 2, 3]);
    let (group_gd, loops) = datum.groupoid().isotropy(datum.base()).unwrap();
    let tilde_group = IsotropyAction {
        action: PartialAction::new(
            Arc::new(group_gd),
            Arc::clone(&ring_b),
            vec![jx, jx],
            vec![
                PartialRingIso::identity(jx),
                iso(&[(0, 1), (1, 0), (2, 2)]), // σ on J_x
            ],
        ),
        loops,
    };
    let data = GlobalizationData {
        datum,
        ring_b,
        j_ideals: vec![jx, jy],
        tilde_tau: vec![
            PartialRingIso::identity(jx),
            iso(&[(0, 3), (1, 2), (2, 1)]), // γ on J_x
        ],
        tilde_group,
    };
    data.check().expect("FX-GLOB satisfies (C1)-(C3)");
    data
}

/// A fixture together with everything it defines.
pub struct LoadedFixture {
    pub name: String,
    pub groupoid: Arc<Groupoid>,
    pub ring: Arc<SplitRing>,
    pub action: Option<PartialAction>,
    pub datum: Option<Datum>,
    pub globalization: Option<GlobalizationData>,
}

/// Load a built-in fixture by name at the given prime (the default is 3).
pub fn load_fixture(name: &str, p: u64) -> Result<LoadedFixture, String> {
    let canon = name.to_ascii_uppercase();
    match canon.as_str() {
        "FX-HEX" => {
            let gd = hex_groupoid();
            Ok(LoadedFixture {
                name: canon,
                groupoid: gd,
                ring: Arc::new(SplitRing::with_unit_atoms(p, 4)),
                action: None,
                datum: None,
                globalization: None,
            })
        }
        "FX-B2" => {
            let a = b2_action(p);
            Ok(LoadedFixture {
                name: canon,
                groupoid: Arc::clone(a.groupoid()),
                ring: Arc::clone(a.ring()),
                action: Some(a),
                datum: None,
                globalization: None,
            })
        }
        "FX-GAMMA" => {
            let d = gamma22_datum(p);
            let a = gamma22_action(p);
            Ok(LoadedFixture {
                name: canon,
                groupoid: Arc::clone(d.groupoid()),
                ring: Arc::clone(d.ring()),
                action: Some(a),
                datum: Some(d),
                globalization: None,
            })
        }
        "FX-DAT" => {
            let d = dat_datum(p);
            Ok(LoadedFixture {
                name: canon,
                groupoid: Arc::clone(d.groupoid()),
                ring: Arc::clone(d.ring()),
                action: Some(extend(&d)),
                datum: Some(d),
                globalization: None,
            })
        }
        "FX-GLOB" => {
            let g = glob_data(p);
            Ok(LoadedFixture {
                name: canon,
                groupoid: Arc::clone(g.datum.groupoid()),
                ring: Arc::clone(g.datum.ring()),
                action: Some(extend(&g.datum)),
                datum: Some(g.datum.clone()),
                globalization: Some(g),
            })
        }
        _ => Err(format!("unknown fixture `{name}`; known: {}", FIXTURE_NAMES.join(", "))),
    }
}

/// One documented fixture property, evaluated.
#[derive(Debug, Clone)]
pub struct FixtureCheck {
    pub fixture: &'static str,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Evaluate every documented fixture property in one pass.
pub fn fixture_checks(p: u64) -> Vec<FixtureCheck> {
    use crate::datum::{check_adjunction_action, check_adjunction_datum, restrict};
    use crate::galois::{self, GaloisSetup};
    use crate::globalization::{build_globalization, globalize_group, verify_globalization};
    use crate::skew::SkewAlgebra;

    fn ok(cond: bool, msg: &str) -> Result<(), String> {
        if cond {
            Ok(())
        } else {
            Err(msg.to_string())
        }
    }

    let mut out: Vec<FixtureCheck> = Vec::new();
    let mut check = |fixture: &'static str, name: &'static str, result: Result<(), String>| {
        out.push(FixtureCheck {
            fixture,
            name,
            pass: result.is_ok(),
            detail: result.err().unwrap_or_default(),
        });
    };

    // FX-HEX
    let hex = hex_groupoid();
    let x = hex.object_by_name("x").unwrap();
    check(
        "FX-HEX",
        "table validates with 2 objects and 8 arrows",
        ok(hex.num_objects() == 2 && hex.num_morphisms() == 8, "wrong shape"),
    );
    check(
        "FX-HEX",
        "single connected component",
        ok(hex.connected_components().len() == 1, "disconnected"),
    );
    check(
        "FX-HEX",
        "isotropy at x is the 2-element group",
        (|| {
            let (gx, _) = hex.isotropy(x).map_err(|e| e.to_string())?;
            ok(gx.num_morphisms() == 2 && gx.compose(1, 1) == Some(0), "not the 2-element group")
        })(),
    );
    check(
        "FX-HEX",
        "two transversals at x, lexicographic",
        (|| {
            let ts = hex.transversals(x).map_err(|e| e.to_string())?;
            ok(
                ts.len() == 2
                    && hex.mor_name(ts[0].pick[1]) == "l"
                    && hex.mor_name(ts[1].pick[1]) == "m",
                "transversal enumeration",
            )
        })(),
    );
    check(
        "FX-HEX",
        "corner values at the transversal through l",
        (|| {
            let tau = Transversal::canonical(&hex, x).map_err(|e| e.to_string())?;
            let g = hex.mor_by_name("g").unwrap();
            let to_g = ["g", "h", "m", "m_inv"]
                .iter()
                .all(|n| hex.corner(hex.mor_by_name(n).unwrap(), &tau) == g);
            let to_x = ["l", "l_inv", "x", "y"]
                .iter()
                .all(|n| hex.corner(hex.mor_by_name(n).unwrap(), &tau) == hex.identity(x));
            ok(to_g && to_x, "corner disagrees with the hand computation")
        })(),
    );
    check(
        "FX-HEX",
        "factorization round-trips all 8 arrows",
        (|| {
            let tau = Transversal::canonical(&hex, x).map_err(|e| e.to_string())?;
            let round = hex.morphisms().all(|m| {
                let ((s, t), c) = hex.factor(m, &tau);
                hex.assemble((s, t), c, &tau) == m
            });
            let m = hex.mor_by_name("m").unwrap();
            let g = hex.mor_by_name("g").unwrap();
            ok(round && hex.factor(m, &tau) == ((0, 1), g), "factor/assemble mismatch")
        })(),
    );
    check(
        "FX-HEX",
        "builders: coarse pair groupoid has 4 arrows, the Z2 matrix groupoid 8",
        (|| {
            let coarse =
                crate::groupoid::coarse_groupoid(&["1", "2"]).map_err(|e| e.to_string())?;
            let gamma = brandt_groupoid(2, &cyclic_group(2)).map_err(|e| e.to_string())?;
            let m = gamma.mor_by_name("1_r1_2").unwrap();
            ok(
                coarse.num_morphisms() == 4
                    && gamma.num_morphisms() == 8
                    && gamma.object_name(gamma.src(m)) == "2"
                    && gamma.object_name(gamma.tgt(m)) == "1"
                    && brandt_groupoid(1, &cyclic_group(2)).unwrap().num_morphisms() == 2,
                "builder shapes",
            )
        })(),
    );

    // FX-B2
    let b2 = b2_action(p);
    let ring6 = Arc::clone(b2.ring());
    check(
        "FX-B2",
        "satisfies the partial-action axioms",
        ok(b2.verify(true).passed(), "axiom violation"),
    );
    check(
        "FX-B2",
        "not global: A_g = ke1 is proper in A_x",
        ok(
            !b2.is_global() && b2.ideal(hex.mor_by_name("g").unwrap()) == Ideal::single(0),
            "globality",
        ),
    );
    check(
        "FX-B2",
        "isotropy restriction at x is a valid group action on ke1",
        (|| {
            let res = b2.restrict_to_isotropy(x).map_err(|e| e.to_string())?;
            ok(
                res.action.verify(true).passed() && res.action.ideal(1) == Ideal::single(0),
                "restriction",
            )
        })(),
    );
    check(
        "FX-B2",
        "not recoverable: all 4 (base, transversal) pairs fail",
        (|| {
            let rep = b2.recoverable_witness().map_err(|e| e.to_string())?;
            ok(!rep.recoverable() && rep.pairs_checked == 4, "recoverability search")
        })(),
    );
    check(
        "FX-B2",
        "extend after restrict sits strictly below, strict at h",
        (|| {
            let tau = Transversal::canonical(&hex, x).map_err(|e| e.to_string())?;
            let theta = extend(&restrict(&b2, x, &tau).map_err(|e| e.to_string())?);
            let h = hex.mor_by_name("h").unwrap();
            ok(theta.leq(&b2) && !b2.leq(&theta) && theta.ideal(h).is_empty(), "extension order")
        })(),
    );
    check(
        "FX-B2",
        "restriction datum has the ke2 transversal domain",
        (|| {
            let tau = Transversal::canonical(&hex, x).map_err(|e| e.to_string())?;
            let d = restrict(&b2, x, &tau).map_err(|e| e.to_string())?;
            ok(d.tau_iso(1).dom() == Ideal::single(1), "datum domain")
        })(),
    );
    check(
        "FX-B2",
        "adjunction checks pass; the counit is not an isomorphism",
        (|| {
            let tau = Transversal::canonical(&hex, x).map_err(|e| e.to_string())?;
            let rep = check_adjunction_action(&b2, x, &tau).map_err(|e| e.to_string())?;
            ok(rep.all_pass() && !rep.counit_iso, "adjunction")
        })(),
    );
    check(
        "FX-B2",
        "trace values 2e1 at e1 and e2+e4 at e2",
        ok(
            galois::trace(&b2, &ring6.atom_elem(0)) == ring6.scale(2, &ring6.atom_elem(0))
                && galois::trace(&b2, &ring6.atom_elem(1))
                    == ring6.add(&ring6.atom_elem(1), &ring6.atom_elem(3)),
            "trace values",
        ),
    );
    check(
        "FX-B2",
        "invariants have dimension 4 with the echelon basis",
        (|| {
            let basis = galois::invariant_basis(&b2).map_err(|e| e.to_string())?;
            let want = vec![
                ring6.atom_elem(0),
                ring6.add(&ring6.atom_elem(1), &ring6.atom_elem(3)),
                ring6.add(&ring6.atom_elem(2), &ring6.atom_elem(4)),
                ring6.atom_elem(5),
            ];
            ok(basis == want, "invariant basis")
        })(),
    );
    check(
        "FX-B2",
        "trace image spans the invariants",
        (|| ok(galois::trace_onto(&b2).map_err(|e| e.to_string())?, "trace not onto"))(),
    );

    // FX-GAMMA
    let gamma_d = gamma22_datum(p);
    let gamma_a = gamma22_action(p);
    let ring4 = Arc::clone(gamma_a.ring());
    check(
        "FX-GAMMA",
        "extension is a verified global action",
        ok(gamma_a.verify(true).passed() && gamma_a.is_global(), "globality"),
    );
    check(
        "FX-GAMMA",
        "group-type at the witness transversal, hence recoverable",
        (|| {
            let rep = gamma_a.recoverable_witness().map_err(|e| e.to_string())?;
            let Some((_, tau)) = &rep.witness else {
                return Err("no witness".into());
            };
            ok(gamma_a.is_group_type(tau), "recoverability")
        })(),
    );
    check(
        "FX-GAMMA",
        "restrict after extend is the identity on the datum",
        (|| {
            let back = restrict(&gamma_a, gamma_d.base(), gamma_d.tau())
                .map_err(|e| e.to_string())?;
            ok(back == gamma_d, "roundtrip")
        })(),
    );
    check(
        "FX-GAMMA",
        "invariants are spanned by the orbit sum",
        (|| {
            let basis = galois::invariant_basis(&gamma_a).map_err(|e| e.to_string())?;
            ok(basis.len() == 1 && basis[0] == ring4.one(), "invariant basis")
        })(),
    );
    check(
        "FX-GAMMA",
        "the pure tensor a1 against a1 lands on the identity loop",
        (|| {
            let skew = SkewAlgebra::build(&gamma_a).map_err(|e| e.to_string())?;
            let v = galois::gamma_prime(&skew, &ring4.atom_elem(0), &ring4.atom_elem(0));
            let want = skew
                .basis_index(gamma_a.groupoid().identity(0), 0)
                .ok_or("missing basis element")?;
            ok(
                v.coeffs.iter().enumerate().all(|(i, &c)| c == u64::from(i == want)),
                "gamma-prime value",
            )
        })(),
    );
    check(
        "FX-GAMMA",
        "the atom-pair certificate verifies on all 8 arrows",
        (|| {
            let cert = galois::GaloisCertificate {
                pairs: (0..4).map(|i| (ring4.atom_elem(i), ring4.atom_elem(i))).collect(),
            };
            ok(galois::verify_certificate(&gamma_a, &cert), "certificate")
        })(),
    );
    check(
        "FX-GAMMA",
        "four-way equivalence report is all true",
        (|| {
            let setup = GaloisSetup::new(&gamma_a, gamma_d.base(), gamma_d.tau())
                .map_err(|e| e.to_string())?;
            let rep = setup.equivalence_report().map_err(|e| e.to_string())?;
            ok(rep.agree && rep.galois_and_trace && rep.groupoid_context_strict, "equivalence")
        })(),
    );

    // FX-DAT
    let dat = dat_datum(p);
    let theta = extend(&dat);
    check("FX-DAT", "datum satisfies all invariants", ok(dat.verify(true).passed(), "datum axioms"));
    check(
        "FX-DAT",
        "extension matches the closed-form atom maps",
        (|| {
            let by = |n: &str| hex.mor_by_name(n).unwrap();
            let want =
                |pairs: &[(usize, usize)]| PartialRingIso::new(pairs.to_vec()).unwrap();
            ok(
                theta.iso(by("g")) == &want(&[(2, 2)])
                    && theta.iso(by("m")) == &want(&[(2, 1)])
                    && theta.iso(by("h")) == &want(&[(1, 1)])
                    && theta.iso(by("l")) == &want(&[(0, 3), (2, 1)]),
                "closed-form maps",
            )
        })(),
    );
    check(
        "FX-DAT",
        "restrict after extend is the identity on the datum",
        (|| {
            let back = restrict(&theta, dat.base(), dat.tau()).map_err(|e| e.to_string())?;
            ok(back == dat, "roundtrip")
        })(),
    );
    check(
        "FX-DAT",
        "ranges equal the closed-form intersection formula",
        ok(
            hex.morphisms().all(|g| theta.ideal(g) == dat.closed_form_range(g)),
            "range formula",
        ),
    );
    check(
        "FX-DAT",
        "adjunction checks pass with an isomorphic counit",
        (|| {
            let rep = check_adjunction_datum(&dat);
            ok(rep.all_pass() && rep.counit_iso, "adjunction")
        })(),
    );
    check(
        "FX-DAT",
        "skew ring has dimension 12 and passes unit/associativity",
        (|| {
            let skew = SkewAlgebra::build(&theta).map_err(|e| e.to_string())?;
            ok(skew.dim() == 12 && skew.unit_check() && skew.assoc_check().is_none(), "skew ring")
        })(),
    );
    check(
        "FX-DAT",
        "corner dimensions (6, 6, 3) with the group ring match",
        (|| {
            let skew = SkewAlgebra::build(&theta).map_err(|e| e.to_string())?;
            let c = skew.corners(dat.base());
            skew.corner_group_match(dat.base())?;
            ok(
                c.u.len() == 6
                    && c.v.len() == 6
                    && c.s_prime.len() == 3
                    && skew.r1sr_spans(dat.base()),
                "corners",
            )
        })(),
    );
    check(
        "FX-DAT",
        "corner Morita context is strict",
        (|| {
            let skew = SkewAlgebra::build(&theta).map_err(|e| e.to_string())?;
            ok(skew.morita_check(dat.base()).strict(), "strictness")
        })(),
    );
    check(
        "FX-DAT",
        "enveloping ring of the loop action has 3 atoms",
        (|| {
            let env = globalize_group(dat.group());
            let vs = verify_globalization(&dat.group().action, &env.action)
                .map_err(|e| e.to_string())?;
            ok(env.ring.num_atoms() == 3 && vs.is_empty(), "enveloping action")
        })(),
    );
    check(
        "FX-DAT",
        "trace and invariant displays hold; four legs agree on false",
        (|| {
            let setup =
                GaloisSetup::new(&theta, dat.base(), dat.tau()).map_err(|e| e.to_string())?;
            setup.unit_form_check()?;
            setup.invariant_correspondence_check()?;
            setup.trace_transport_check()?;
            setup.trace_decomposition_check()?;
            let rep = setup.equivalence_report().map_err(|e| e.to_string())?;
            ok(rep.agree && !rep.galois_and_trace, "equivalence legs")
        })(),
    );

    // FX-GLOB
    let data = glob_data(p);
    check(
        "FX-GLOB",
        "the three enveloping conditions hold for the supplied package",
        data.check().map_err(|e| e.to_string()),
    );
    check(
        "FX-GLOB",
        "the enveloping action agrees with the stated permutation composites",
        (|| {
            let beta = build_globalization(&data).map_err(|e| e.to_string())?;
            let by = |n: &str| hex.mor_by_name(n).unwrap();
            let want_h = PartialRingIso::new(vec![(1, 1), (2, 3), (3, 2)]).unwrap();
            let want_m = PartialRingIso::new(vec![(0, 2), (1, 3), (2, 1)]).unwrap();
            let want_l = PartialRingIso::new(vec![(0, 3), (1, 2), (2, 1)]).unwrap();
            ok(
                beta.iso(by("h")) == &want_h
                    && beta.iso(by("m")) == &want_m
                    && beta.iso(by("l")) == &want_l,
                "beta maps",
            )
        })(),
    );
    check(
        "FX-GLOB",
        "the enveloping action globalizes the extension",
        (|| {
            let beta = build_globalization(&data).map_err(|e| e.to_string())?;
            let vs = verify_globalization(&theta, &beta).map_err(|e| e.to_string())?;
            ok(beta.is_global() && vs.is_empty(), "globalization conditions")
        })(),
    );

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load_and_verify() {
        for name in FIXTURE_NAMES {
            let f = load_fixture(name, 3).unwrap();
            if let Some(a) = &f.action {
                assert!(a.verify(true).passed(), "{name} action");
            }
            if let Some(d) = &f.datum {
                assert!(d.verify(true).passed(), "{name} datum");
            }
            if let Some(g) = &f.globalization {
                assert!(g.check().is_ok(), "{name} globalization data");
            }
        }
        assert!(load_fixture("FX-NOPE", 3).is_err());
    }

    #[test]
    fn fixtures_respect_the_prime_argument() {
        let a = b2_action(5);
        assert_eq!(a.ring().p(), 5);
        assert!(a.verify(true).passed());
    }
}
