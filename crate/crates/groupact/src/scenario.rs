//! Line-oriented text format for rings, groupoids, actions, restriction
//! data and globalization packages.
//!
//! ```text
//! # comment
//! ring p=3 atoms=[e1, e2, e3, e4]
//!
//! groupoid {
//!   objects = [x, y]
//!   arrow g : x -> x inv g
//!   arrow l : x -> y inv l_inv
//!   arrow l_inv : y -> x inv l
//!   comp g g = x
//!   comp l g = m
//! }
//!
//! action {
//!   ideal x = [e1, e2]
//!   ideal g = [e1]
//!   iso g = [e1 -> e1]
//! }
//!
//! datum {
//!   base = x
//!   tau y = l
//!   ideal x = [e1, e3]
//!   gamma y = [e1 -> e4, e3 -> e2]
//!   loop_ideal g = [e3]
//!   loop_iso g = [e3 -> e3]
//! }
//!
//! globalization {
//!   ring p=3 atoms=[e1, e2, e3, e4]
//!   J x = [e1, e2, e3]
//!   tilde_tau y = [e1 -> e4, e2 -> e3, e3 -> e2]
//!   tilde_loop g = [e1 -> e2, e2 -> e1, e3 -> e3]
//! }
//! ```
//!
//! One declaration per line; stanzas open with `name {` and close with `}`
//! on their own line. The `ring` line comes first, then `groupoid`, then
//! any of `action`, `datum`, `globalization` (the last requires a datum).
//! Composition rows cover composable non-identity pairs; rows with identity
//! operands are implied. Every morphism of an action carries an `ideal`
//! row, every non-identity arrow an `iso` row; identity isomorphisms are
//! implied. Parsing is total: the first offending token is reported with
//! its line and column.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::action::{IsotropyAction, PartialAction};
use crate::datum::Datum;
use crate::fixtures::LoadedFixture;
use crate::globalization::GlobalizationData;
use crate::groupoid::{validate_groupoid, Groupoid, GroupoidTable, Transversal};
use crate::ring::{Ideal, PartialRingIso, SplitRing};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScenarioError {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unresolved reference `{name}` at {line}:{col}")]
    Unresolved { line: usize, col: usize, name: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub ring: Arc<SplitRing>,
    pub groupoid: Arc<Groupoid>,
    pub action: Option<PartialAction>,
    pub datum: Option<Datum>,
    pub globalization: Option<GlobalizationData>,
}

#[derive(Debug, Clone)]
struct Tok {
    text: String,
    line: usize,
    col: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '~' | '.')
}

fn tokenize(text: &str) -> Result<Vec<Vec<Tok>>, ScenarioError> {
    let mut lines = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line_no = li + 1;
        let mut toks = Vec::new();
        let chars: Vec<char> = raw.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c == '#' {
                break;
            } else if c == '-' && chars.get(i + 1) == Some(&'>') {
                toks.push(Tok { text: "->".into(), line: line_no, col });
                i += 2;
            } else if matches!(c, '=' | '[' | ']' | ',' | '{' | '}' | ':') {
                toks.push(Tok { text: c.to_string(), line: line_no, col });
                i += 1;
            } else if is_ident_char(c) {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                toks.push(Tok {
                    text: chars[start..i].iter().collect(),
                    line: line_no,
                    col,
                });
            } else {
                return Err(ScenarioError::Parse {
                    line: line_no,
                    col,
                    msg: format!("unexpected character `{c}`"),
                });
            }
        }
        if !toks.is_empty() {
            lines.push(toks);
        }
    }
    Ok(lines)
}

struct Cursor<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(toks: &'a [Tok]) -> Self {
        Cursor { toks, pos: 0 }
    }

    fn err_here(&self, msg: impl Into<String>) -> ScenarioError {
        let (line, col) = self
            .toks
            .get(self.pos.min(self.toks.len().saturating_sub(1)))
            .map(|t| (t.line, t.col))
            .unwrap_or((0, 0));
        ScenarioError::Parse { line, col, msg: msg.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next_tok(&mut self) -> Result<&'a Tok, ScenarioError> {
        let t = self.toks.get(self.pos).ok_or_else(|| {
            let (line, col) =
                self.toks.last().map(|t| (t.line, t.col + t.text.len())).unwrap_or((0, 0));
            ScenarioError::Parse { line, col, msg: "unexpected end of line".into() }
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, text: &str) -> Result<(), ScenarioError> {
        let t = self.next_tok()?;
        if t.text != text {
            return Err(ScenarioError::Parse {
                line: t.line,
                col: t.col,
                msg: format!("expected `{text}`, found `{}`", t.text),
            });
        }
        Ok(())
    }

    fn ident(&mut self) -> Result<&'a Tok, ScenarioError> {
        let t = self.next_tok()?;
        if t.text.chars().all(is_ident_char) && !t.text.is_empty() {
            Ok(t)
        } else {
            Err(ScenarioError::Parse {
                line: t.line,
                col: t.col,
                msg: format!("expected a name, found `{}`", t.text),
            })
        }
    }

    fn finished(&self) -> bool {
        self.pos == self.toks.len()
    }

    fn end_of_line(&self) -> Result<(), ScenarioError> {
        if self.finished() {
            Ok(())
        } else {
            Err(self.err_here("trailing tokens"))
        }
    }
}

fn resolve_atom(ring: &SplitRing, t: &Tok) -> Result<usize, ScenarioError> {
    ring.atom_by_name(&t.text).ok_or(ScenarioError::Unresolved {
        line: t.line,
        col: t.col,
        name: t.text.clone(),
    })
}

fn parse_atom_list(cur: &mut Cursor, ring: &SplitRing) -> Result<Ideal, ScenarioError> {
    cur.expect("[")?;
    let mut atoms = Vec::new();
    loop {
        match cur.peek().map(|t| t.text.as_str()) {
            Some("]") => {
                cur.next_tok()?;
                break;
            }
            _ => {
                let t = cur.ident()?;
                atoms.push(resolve_atom(ring, t)?);
                if cur.peek().map(|t| t.text.as_str()) == Some(",") {
                    cur.next_tok()?;
                }
            }
        }
    }
    Ok(Ideal::from_atoms(&atoms))
}

fn parse_pair_list(cur: &mut Cursor, ring: &SplitRing) -> Result<PartialRingIso, ScenarioError> {
    cur.expect("[")?;
    let mut pairs = Vec::new();
    loop {
        match cur.peek().map(|t| t.text.as_str()) {
            Some("]") => {
                cur.next_tok()?;
                break;
            }
            _ => {
                let a = cur.ident()?;
                let from = resolve_atom(ring, a)?;
                cur.expect("->")?;
                let b = cur.ident()?;
                let to = resolve_atom(ring, b)?;
                pairs.push((from, to));
                if cur.peek().map(|t| t.text.as_str()) == Some(",") {
                    cur.next_tok()?;
                }
            }
        }
    }
    let first = (0, 0);
    PartialRingIso::new(pairs).map_err(|e| ScenarioError::Parse {
        line: first.0,
        col: first.1,
        msg: e.to_string(),
    })
}

fn parse_ring_line(line: &[Tok]) -> Result<Arc<SplitRing>, ScenarioError> {
    let mut cur = Cursor::new(line);
    cur.expect("ring")?;
    cur.expect("p")?;
    cur.expect("=")?;
    let p_tok = cur.ident()?;
    let p: u64 = p_tok.text.parse().map_err(|_| ScenarioError::Parse {
        line: p_tok.line,
        col: p_tok.col,
        msg: format!("`{}` is not a number", p_tok.text),
    })?;
    cur.expect("atoms")?;
    cur.expect("=")?;
    cur.expect("[")?;
    let mut atoms = Vec::new();
    loop {
        match cur.peek().map(|t| t.text.as_str()) {
            Some("]") => {
                cur.next_tok()?;
                break;
            }
            _ => {
                atoms.push(cur.ident()?.text.clone());
                if cur.peek().map(|t| t.text.as_str()) == Some(",") {
                    cur.next_tok()?;
                }
            }
        }
    }
    cur.end_of_line()?;
    let ring = SplitRing::new(p, atoms).map_err(|e| ScenarioError::Parse {
        line: p_tok.line,
        col: p_tok.col,
        msg: e.to_string(),
    })?;
    Ok(Arc::new(ring))
}

fn mor_by_name(gd: &Groupoid, t: &Tok) -> Result<usize, ScenarioError> {
    gd.mor_by_name(&t.text).ok_or(ScenarioError::Unresolved {
        line: t.line,
        col: t.col,
        name: t.text.clone(),
    })
}

fn obj_by_name(gd: &Groupoid, t: &Tok) -> Result<usize, ScenarioError> {
    gd.object_by_name(&t.text).ok_or(ScenarioError::Unresolved {
        line: t.line,
        col: t.col,
        name: t.text.clone(),
    })
}

/// Parse a scenario file.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let lines = tokenize(text)?;
    if lines.is_empty() {
        return Err(ScenarioError::Parse { line: 1, col: 1, msg: "empty scenario".into() });
    }
    let mut it = lines.iter();

    let ring = parse_ring_line(it.next().ok_or(ScenarioError::Parse {
        line: 1,
        col: 1,
        msg: "expected a ring line".into(),
    })?)?;

    // groupoid stanza
    let header = it.next().ok_or(ScenarioError::Parse {
        line: 1,
        col: 1,
        msg: "expected `groupoid {`".into(),
    })?;
    {
        let mut cur = Cursor::new(header);
        cur.expect("groupoid")?;
        cur.expect("{")?;
        cur.end_of_line()?;
    }
    let mut table = GroupoidTable::default();
    let header_pos = (header[0].line, header[0].col);
    loop {
        let line = it.next().ok_or(ScenarioError::Parse {
            line: header_pos.0,
            col: header_pos.1,
            msg: "unterminated groupoid stanza".into(),
        })?;
        let mut cur = Cursor::new(line);
        let head = cur.next_tok()?;
        match head.text.as_str() {
            "}" => break,
            "objects" => {
                cur.expect("=")?;
                cur.expect("[")?;
                loop {
                    match cur.peek().map(|t| t.text.as_str()) {
                        Some("]") => {
                            cur.next_tok()?;
                            break;
                        }
                        _ => {
                            table.objects.push(cur.ident()?.text.clone());
                            if cur.peek().map(|t| t.text.as_str()) == Some(",") {
                                cur.next_tok()?;
                            }
                        }
                    }
                }
                cur.end_of_line()?;
            }
            "arrow" => {
                let name = cur.ident()?.text.clone();
                cur.expect(":")?;
                let src = cur.ident()?.text.clone();
                cur.expect("->")?;
                let tgt = cur.ident()?.text.clone();
                cur.expect("inv")?;
                let inv = cur.ident()?.text.clone();
                cur.end_of_line()?;
                table.arrows.push((name, src, tgt, inv));
            }
            "comp" => {
                let g = cur.ident()?.text.clone();
                let h = cur.ident()?.text.clone();
                cur.expect("=")?;
                let k = cur.ident()?.text.clone();
                cur.end_of_line()?;
                table.compositions.push((g, h, k));
            }
            other => {
                return Err(ScenarioError::Parse {
                    line: head.line,
                    col: head.col,
                    msg: format!("unknown groupoid entry `{other}`"),
                })
            }
        }
    }
    let groupoid = Arc::new(validate_groupoid(&table).map_err(|e| ScenarioError::Parse {
        line: header_pos.0,
        col: header_pos.1,
        msg: e.to_string(),
    })?);

    let mut scenario = Scenario {
        ring: Arc::clone(&ring),
        groupoid: Arc::clone(&groupoid),
        action: None,
        datum: None,
        globalization: None,
    };

    while let Some(header) = it.next() {
        let mut cur = Cursor::new(header);
        let kind = cur.ident()?.text.clone();
        cur.expect("{")?;
        cur.end_of_line()?;
        let header_pos = (header[0].line, header[0].col);
        let mut body: Vec<&Vec<Tok>> = Vec::new();
        loop {
            let line = it.next().ok_or(ScenarioError::Parse {
                line: header_pos.0,
                col: header_pos.1,
                msg: format!("unterminated {kind} stanza"),
            })?;
            if line.len() == 1 && line[0].text == "}" {
                break;
            }
            body.push(line);
        }
        match kind.as_str() {
            "action" => {
                scenario.action =
                    Some(parse_action(&body, &groupoid, &ring, header_pos)?);
            }
            "datum" => {
                scenario.datum = Some(parse_datum(&body, &groupoid, &ring, header_pos)?);
            }
            "globalization" => {
                let datum = scenario.datum.clone().ok_or(ScenarioError::Parse {
                    line: header_pos.0,
                    col: header_pos.1,
                    msg: "globalization requires a datum stanza".into(),
                })?;
                scenario.globalization =
                    Some(parse_globalization(&body, datum, header_pos)?);
            }
            other => {
                return Err(ScenarioError::Parse {
                    line: header_pos.0,
                    col: header_pos.1,
                    msg: format!("unknown stanza `{other}`"),
                })
            }
        }
    }
    Ok(scenario)
}

fn parse_action(
    body: &[&Vec<Tok>],
    gd: &Arc<Groupoid>,
    ring: &Arc<SplitRing>,
    at: (usize, usize),
) -> Result<PartialAction, ScenarioError> {
    let mut ideals: Vec<Option<Ideal>> = vec![None; gd.num_morphisms()];
    let mut isos: Vec<Option<PartialRingIso>> = vec![None; gd.num_morphisms()];
    for line in body {
        let mut cur = Cursor::new(line);
        let head = cur.next_tok()?;
        match head.text.as_str() {
            "ideal" => {
                let m = mor_by_name(gd, cur.ident()?)?;
                cur.expect("=")?;
                ideals[m] = Some(parse_atom_list(&mut cur, ring)?);
                cur.end_of_line()?;
            }
            "iso" => {
                let t = cur.ident()?;
                let m = mor_by_name(gd, t)?;
                if gd.is_identity(m) {
                    return Err(ScenarioError::Parse {
                        line: t.line,
                        col: t.col,
                        msg: "identity isomorphisms are implied".into(),
                    });
                }
                cur.expect("=")?;
                isos[m] = Some(parse_pair_list(&mut cur, ring)?);
                cur.end_of_line()?;
            }
            other => {
                return Err(ScenarioError::Parse {
                    line: head.line,
                    col: head.col,
                    msg: format!("unknown action entry `{other}`"),
                })
            }
        }
    }
    let missing_err = |what: String| ScenarioError::Parse { line: at.0, col: at.1, msg: what };
    let ideals: Vec<Ideal> = gd
        .morphisms()
        .map(|m| {
            ideals[m].ok_or_else(|| missing_err(format!("missing ideal for `{}`", gd.mor_name(m))))
        })
        .collect::<Result<_, _>>()?;
    let isos: Vec<PartialRingIso> = gd
        .morphisms()
        .map(|m| {
            if gd.is_identity(m) {
                Ok(PartialRingIso::identity(ideals[m]))
            } else {
                isos[m]
                    .clone()
                    .ok_or_else(|| missing_err(format!("missing iso for `{}`", gd.mor_name(m))))
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(PartialAction::new(Arc::clone(gd), Arc::clone(ring), ideals, isos))
}

fn parse_datum(
    body: &[&Vec<Tok>],
    gd: &Arc<Groupoid>,
    ring: &Arc<SplitRing>,
    at: (usize, usize),
) -> Result<Datum, ScenarioError> {
    let mut base: Option<usize> = None;
    let mut tau_pick: HashMap<usize, usize> = HashMap::new();
    let mut ideals: Vec<Option<Ideal>> = vec![None; gd.num_objects()];
    let mut gammas: HashMap<usize, PartialRingIso> = HashMap::new();
    let mut loop_ideals: HashMap<usize, Ideal> = HashMap::new();
    let mut loop_isos: HashMap<usize, PartialRingIso> = HashMap::new();
    for line in body {
        let mut cur = Cursor::new(line);
        let head = cur.next_tok()?;
        match head.text.as_str() {
            "base" => {
                cur.expect("=")?;
                base = Some(obj_by_name(gd, cur.ident()?)?);
                cur.end_of_line()?;
            }
            "tau" => {
                let y = obj_by_name(gd, cur.ident()?)?;
                cur.expect("=")?;
                let m = mor_by_name(gd, cur.ident()?)?;
                cur.end_of_line()?;
                tau_pick.insert(y, m);
            }
            "ideal" => {
                let y = obj_by_name(gd, cur.ident()?)?;
                cur.expect("=")?;
                ideals[y] = Some(parse_atom_list(&mut cur, ring)?);
                cur.end_of_line()?;
            }
            "gamma" => {
                let y = obj_by_name(gd, cur.ident()?)?;
                cur.expect("=")?;
                gammas.insert(y, parse_pair_list(&mut cur, ring)?);
                cur.end_of_line()?;
            }
            "loop_ideal" => {
                let m = mor_by_name(gd, cur.ident()?)?;
                cur.expect("=")?;
                loop_ideals.insert(m, parse_atom_list(&mut cur, ring)?);
                cur.end_of_line()?;
            }
            "loop_iso" => {
                let m = mor_by_name(gd, cur.ident()?)?;
                cur.expect("=")?;
                loop_isos.insert(m, parse_pair_list(&mut cur, ring)?);
                cur.end_of_line()?;
            }
            other => {
                return Err(ScenarioError::Parse {
                    line: head.line,
                    col: head.col,
                    msg: format!("unknown datum entry `{other}`"),
                })
            }
        }
    }
    let err_at = |msg: String| ScenarioError::Parse { line: at.0, col: at.1, msg };
    let base = base.ok_or_else(|| err_at("missing `base`".into()))?;
    let mut pick = vec![0usize; gd.num_objects()];
    for y in gd.objects() {
        pick[y] = if y == base {
            gd.identity(base)
        } else {
            *tau_pick
                .get(&y)
                .ok_or_else(|| err_at(format!("missing `tau {}`", gd.object_name(y))))?
        };
    }
    let tau = Transversal { base, pick };
    let ideals: Vec<Ideal> = gd
        .objects()
        .map(|y| {
            ideals[y].ok_or_else(|| err_at(format!("missing `ideal {}`", gd.object_name(y))))
        })
        .collect::<Result<_, _>>()?;
    let tau_isos: Vec<PartialRingIso> = gd
        .objects()
        .map(|y| {
            if y == base {
                Ok(PartialRingIso::identity(ideals[base]))
            } else {
                gammas
                    .get(&y)
                    .cloned()
                    .ok_or_else(|| err_at(format!("missing `gamma {}`", gd.object_name(y))))
            }
        })
        .collect::<Result<_, _>>()?;
    let (group_gd, loops) = gd.isotropy(base).expect("object exists");
    let mut g_ideals = Vec::with_capacity(loops.len());
    let mut g_isos = Vec::with_capacity(loops.len());
    for &l in &loops {
        if gd.is_identity(l) {
            g_ideals.push(ideals[base]);
            g_isos.push(PartialRingIso::identity(ideals[base]));
        } else {
            g_ideals.push(
                *loop_ideals
                    .get(&l)
                    .ok_or_else(|| err_at(format!("missing `loop_ideal {}`", gd.mor_name(l))))?,
            );
            g_isos.push(
                loop_isos
                    .get(&l)
                    .cloned()
                    .ok_or_else(|| err_at(format!("missing `loop_iso {}`", gd.mor_name(l))))?,
            );
        }
    }
    let group = IsotropyAction {
        action: PartialAction::new(Arc::new(group_gd), Arc::clone(ring), g_ideals, g_isos),
        loops,
    };
    Datum::new(Arc::clone(gd), Arc::clone(ring), tau, ideals, tau_isos, group)
        .map_err(|e| err_at(e.to_string()))
}

fn parse_globalization(
    body: &[&Vec<Tok>],
    datum: Datum,
    at: (usize, usize),
) -> Result<GlobalizationData, ScenarioError> {
    let gd = Arc::clone(datum.groupoid());
    let mut ring_b: Option<Arc<SplitRing>> = None;
    let mut j_ideals: Vec<Option<Ideal>> = vec![None; gd.num_objects()];
    let mut tilde_tau: HashMap<usize, PartialRingIso> = HashMap::new();
    let mut tilde_loops: HashMap<usize, PartialRingIso> = HashMap::new();
    for line in body {
        let mut cur = Cursor::new(line);
        let head = cur.next_tok()?;
        match head.text.as_str() {
            "ring" => {
                ring_b = Some(parse_ring_line(line)?);
            }
            "J" => {
                let ring = ring_b.as_ref().ok_or(ScenarioError::Parse {
                    line: head.line,
                    col: head.col,
                    msg: "the globalization ring must come first".into(),
                })?;
                let y = obj_by_name(&gd, cur.ident()?)?;
                cur.expect("=")?;
                j_ideals[y] = Some(parse_atom_list(&mut cur, ring)?);
                cur.end_of_line()?;
            }
            "tilde_tau" => {
                let ring = ring_b.as_ref().ok_or(ScenarioError::Parse {
                    line: head.line,
                    col: head.col,
                    msg: "the globalization ring must come first".into(),
                })?;
                let y = obj_by_name(&gd, cur.ident()?)?;
                cur.expect("=")?;
                tilde_tau.insert(y, parse_pair_list(&mut cur, ring)?);
                cur.end_of_line()?;
            }
            "tilde_loop" => {
                let ring = ring_b.as_ref().ok_or(ScenarioError::Parse {
                    line: head.line,
                    col: head.col,
                    msg: "the globalization ring must come first".into(),
                })?;
                let m = mor_by_name(&gd, cur.ident()?)?;
                cur.expect("=")?;
                tilde_loops.insert(m, parse_pair_list(&mut cur, ring)?);
                cur.end_of_line()?;
            }
            other => {
                return Err(ScenarioError::Parse {
                    line: head.line,
                    col: head.col,
                    msg: format!("unknown globalization entry `{other}`"),
                })
            }
        }
    }
    let err_at = |msg: String| ScenarioError::Parse { line: at.0, col: at.1, msg };
    let ring_b = ring_b.ok_or_else(|| err_at("missing globalization `ring`".into()))?;
    let base = datum.base();
    let j_ideals: Vec<Ideal> = gd
        .objects()
        .map(|y| {
            j_ideals[y].ok_or_else(|| err_at(format!("missing `J {}`", gd.object_name(y))))
        })
        .collect::<Result<_, _>>()?;
    let tilde_tau: Vec<PartialRingIso> = gd
        .objects()
        .map(|y| {
            if y == base {
                Ok(PartialRingIso::identity(j_ideals[base]))
            } else {
                tilde_tau
                    .get(&y)
                    .cloned()
                    .ok_or_else(|| err_at(format!("missing `tilde_tau {}`", gd.object_name(y))))
            }
        })
        .collect::<Result<_, _>>()?;
    let (group_gd, loops) = gd.isotropy(base).expect("object exists");
    let mut g_isos = Vec::with_capacity(loops.len());
    for &l in &loops {
        if gd.is_identity(l) {
            g_isos.push(PartialRingIso::identity(j_ideals[base]));
        } else {
            g_isos.push(
                tilde_loops
                    .get(&l)
                    .cloned()
                    .ok_or_else(|| err_at(format!("missing `tilde_loop {}`", gd.mor_name(l))))?,
            );
        }
    }
    let tilde_group = IsotropyAction {
        action: PartialAction::new(
            Arc::new(group_gd),
            Arc::clone(&ring_b),
            vec![j_ideals[base]; loops.len()],
            g_isos,
        ),
        loops,
    };
    Ok(GlobalizationData { datum, ring_b, j_ideals, tilde_tau, tilde_group })
}

fn write_atom_list(out: &mut String, ring: &SplitRing, ideal: Ideal) {
    let names: Vec<&str> = ideal.atoms().map(|a| ring.atom_name(a)).collect();
    let _ = write!(out, "[{}]", names.join(", "));
}

fn write_pairs(out: &mut String, ring: &SplitRing, iso: &PartialRingIso) {
    let entries: Vec<String> = iso
        .pairs()
        .iter()
        .map(|&(a, b)| format!("{} -> {}", ring.atom_name(a), ring.atom_name(b)))
        .collect();
    let _ = write!(out, "[{}]", entries.join(", "));
}

fn write_ring_line(out: &mut String, ring: &SplitRing) {
    let _ = write!(out, "ring p={} atoms=[", ring.p());
    let _ = write!(out, "{}", ring.atom_names().join(", "));
    out.push_str("]\n");
}

/// Serialize a scenario in the format [`parse_scenario`] reads.
pub fn serialize_scenario(s: &Scenario) -> String {
    let mut out = String::new();
    let gd = &s.groupoid;
    let ring = &s.ring;
    write_ring_line(&mut out, ring);
    out.push('\n');
    out.push_str("groupoid {\n");
    let obj_names: Vec<&str> = gd.objects().map(|y| gd.object_name(y)).collect();
    let _ = writeln!(out, "  objects = [{}]", obj_names.join(", "));
    for g in gd.morphisms().filter(|&g| !gd.is_identity(g)) {
        let _ = writeln!(
            out,
            "  arrow {} : {} -> {} inv {}",
            gd.mor_name(g),
            gd.object_name(gd.src(g)),
            gd.object_name(gd.tgt(g)),
            gd.mor_name(gd.inv(g)),
        );
    }
    for (g, h) in gd.composable_pairs() {
        if gd.is_identity(g) || gd.is_identity(h) {
            continue;
        }
        let k = gd.compose(g, h).unwrap();
        let _ = writeln!(out, "  comp {} {} = {}", gd.mor_name(g), gd.mor_name(h), gd.mor_name(k));
    }
    out.push_str("}\n");

    if let Some(a) = &s.action {
        out.push_str("\naction {\n");
        for m in gd.morphisms() {
            let _ = write!(out, "  ideal {} = ", gd.mor_name(m));
            write_atom_list(&mut out, ring, a.ideal(m));
            out.push('\n');
        }
        for m in gd.morphisms().filter(|&m| !gd.is_identity(m)) {
            let _ = write!(out, "  iso {} = ", gd.mor_name(m));
            write_pairs(&mut out, ring, a.iso(m));
            out.push('\n');
        }
        out.push_str("}\n");
    }
    if let Some(d) = &s.datum {
        out.push_str("\ndatum {\n");
        let _ = writeln!(out, "  base = {}", gd.object_name(d.base()));
        for y in gd.objects().filter(|&y| y != d.base()) {
            let _ = writeln!(out, "  tau {} = {}", gd.object_name(y), gd.mor_name(d.tau().pick[y]));
        }
        for y in gd.objects() {
            let _ = write!(out, "  ideal {} = ", gd.object_name(y));
            write_atom_list(&mut out, ring, d.ideal(y));
            out.push('\n');
        }
        for y in gd.objects().filter(|&y| y != d.base()) {
            let _ = write!(out, "  gamma {} = ", gd.object_name(y));
            write_pairs(&mut out, ring, d.tau_iso(y));
            out.push('\n');
        }
        for &l in &d.group().loops {
            if gd.is_identity(l) {
                continue;
            }
            let _ = write!(out, "  loop_ideal {} = ", gd.mor_name(l));
            write_atom_list(&mut out, ring, d.loop_ideal(l));
            out.push('\n');
            let _ = write!(out, "  loop_iso {} = ", gd.mor_name(l));
            write_pairs(&mut out, ring, d.loop_iso(l));
            out.push('\n');
        }
        out.push_str("}\n");
    }
    if let Some(g) = &s.globalization {
        out.push_str("\nglobalization {\n  ");
        write_ring_line(&mut out, &g.ring_b);
        for y in gd.objects() {
            let _ = write!(out, "  J {} = ", gd.object_name(y));
            write_atom_list(&mut out, &g.ring_b, g.j_ideals[y]);
            out.push('\n');
        }
        for y in gd.objects().filter(|&y| y != g.datum.base()) {
            let _ = write!(out, "  tilde_tau {} = ", gd.object_name(y));
            write_pairs(&mut out, &g.ring_b, &g.tilde_tau[y]);
            out.push('\n');
        }
        for (pos, &l) in g.tilde_group.loops.iter().enumerate() {
            if gd.is_identity(l) {
                continue;
            }
            let _ = write!(out, "  tilde_loop {} = ", gd.mor_name(l));
            write_pairs(&mut out, &g.ring_b, g.tilde_group.action.iso(pos));
            out.push('\n');
        }
        out.push_str("}\n");
    }
    out
}

/// Present a built-in fixture as a scenario.
pub fn scenario_of_fixture(f: &LoadedFixture) -> Scenario {
    Scenario {
        ring: Arc::clone(&f.ring),
        groupoid: Arc::clone(&f.groupoid),
        action: f.action.clone(),
        datum: f.datum.clone(),
        globalization: f.globalization.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixture_scenarios_roundtrip() {
        for name in ["FX-B2", "FX-DAT", "FX-GAMMA", "FX-GLOB"] {
            let f = fixtures::load_fixture(name, 3).unwrap();
            let s = scenario_of_fixture(&f);
            let text = serialize_scenario(&s);
            let back = parse_scenario(&text).unwrap_or_else(|e| panic!("{name}: {e}\n{text}"));
            assert_eq!(back, s, "{name} does not round-trip");
        }
    }

    #[test]
    fn empty_input_is_a_parse_error() {
        assert!(matches!(
            parse_scenario(""),
            Err(ScenarioError::Parse { line: 1, col: 1, .. })
        ));
        assert!(matches!(parse_scenario("# only a comment\n"), Err(ScenarioError::Parse { .. })));
    }

    #[test]
    fn unknown_atom_is_reported_with_its_position() {
        let f = fixtures::load_fixture("FX-DAT", 3).unwrap();
        let text = serialize_scenario(&scenario_of_fixture(&f));
        let bad = text.replace("ideal x = [e1, e3]", "ideal x = [e1, e9]");
        assert_ne!(bad, text);
        match parse_scenario(&bad) {
            Err(ScenarioError::Unresolved { name, line, col }) => {
                assert_eq!(name, "e9");
                assert!(line > 0 && col > 0);
            }
            other => panic!("expected an unresolved reference, got {other:?}"),
        }
    }

    #[test]
    fn bad_tokens_are_positioned() {
        match parse_scenario("ring p=3 atoms=[e1]\ngroupoid ?\n") {
            Err(ScenarioError::Parse { line: 2, col, .. }) => assert_eq!(col, 10),
            other => panic!("unexpected {other:?}"),
        }
    }
}
