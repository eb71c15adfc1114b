//! Parsers and serializers for the two model formats, plus graph and report
//! exports.
//!
//! Both formats share one formula grammar:
//!
//! ```text
//! atom     : [A-Za-z_][A-Za-z0-9_]*
//! formula  : or ( "->" formula )?          right-associative
//! or       : and ( "|" and )*
//! and      : unary ( "&" unary )*
//! unary    : "!" unary | "(" formula ")" | "0" | "1" | atom
//! ```
//!
//! with precedence `!` > `&` > `|` > `->`, ASCII operators, and
//! whitespace-insensitive tokens. `#` starts a comment that runs to the end
//! of the line.
//!
//! The framework format is statement-based: `s(a).` declares an atom,
//! `ac(a, <formula>).` assigns its acceptance condition. The network format
//! is line-based in the BoolNet style: a `targets, factors` header, then one
//! `<variable>, <formula>` line per variable; a variable used only as a
//! factor becomes an input node with itself as its function.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::dynamics::{Stg, TrapReport};
use crate::error::{ParseError, Result};
use crate::formula::{AtomId, Formula};
use crate::model::{Adf, AtomTable, BooleanNetwork, Classification};
use crate::semantics::{Interp3, State};
use crate::structure::{ExistenceReport, SignedCycle};

/// The two text formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceFormat {
    Adf,
    Bnet,
}

impl SourceFormat {
    /// Guesses the format from a file extension.
    pub fn from_path(path: &str) -> Option<SourceFormat> {
        let ext = path.rsplit('.').next()?;
        match ext.to_ascii_lowercase().as_str() {
            "adf" => Some(SourceFormat::Adf),
            "bnet" => Some(SourceFormat::Bnet),
            _ => None,
        }
    }
}

/// What kind of statement a parsed declaration came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatementKind {
    /// `s(a).`
    AtomDeclaration,
    /// `ac(a, ...).`
    AcceptanceCondition,
    /// A `target, formula` line.
    UpdateFunction,
    /// A variable that appeared only as a factor and was completed to an
    /// input node.
    ImplicitInput,
}

/// One parsed statement with its source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub kind: StatementKind,
    pub name: String,
    pub line: usize,
    pub col: usize,
}

/// The positioned statement list of a parsed document, in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceDocument {
    pub format: SourceFormat,
    pub statements: Vec<Statement>,
}

// ---------------------------------------------------------------------------
// scanning
// ---------------------------------------------------------------------------

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
}

impl Cursor {
    fn new(text: &str) -> Cursor {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek2(&self) -> Option<char> {
        self.chars.get(self.pos + 1).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    /// Skips spaces and comments; newlines only when `multiline` is set.
    fn skip_ws(&mut self, multiline: bool) {
        loop {
            match self.peek() {
                Some(' ') | Some('\t') | Some('\r') => {
                    self.bump();
                }
                Some('\n') if multiline => {
                    self.bump();
                }
                Some('#') => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                    if !multiline {
                        return;
                    }
                }
                _ => return,
            }
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col, message)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.bump();
                Ok(())
            }
            Some(found) => Err(self.error(format!("expected `{c}`, found `{found}`")).into()),
            None => Err(self.error(format!("expected `{c}`, found end of input")).into()),
        }
    }

    fn read_ident(&mut self) -> Result<(String, usize, usize)> {
        let (line, col) = (self.line, self.col);
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            Some(c) => return Err(self.error(format!("expected a name, found `{c}`")).into()),
            None => return Err(self.error("expected a name, found end of input").into()),
        }
        let mut name = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                name.push(c);
                self.bump();
            } else {
                break;
            }
        }
        Ok((name, line, col))
    }
}

/// Names used in formulas before declarations are complete: atoms get
/// provisional indices, remapped once the full atom set is known.
#[derive(Default)]
struct PendingAtoms {
    table: AtomTable,
    first_use: Vec<(usize, usize)>,
}

impl PendingAtoms {
    fn resolve(&mut self, name: &str, line: usize, col: usize) -> AtomId {
        if let Some(id) = self.table.id(name) {
            return id;
        }
        self.first_use.push((line, col));
        self.table.push(name).expect("name was absent")
    }
}

// ---------------------------------------------------------------------------
// formula parsing
// ---------------------------------------------------------------------------

struct FormulaParser<'a> {
    cursor: &'a mut Cursor,
    pending: &'a mut PendingAtoms,
    multiline: bool,
}

impl FormulaParser<'_> {
    fn skip(&mut self) {
        self.cursor.skip_ws(self.multiline);
    }

    fn parse(&mut self) -> Result<Formula> {
        self.skip();
        let lhs = self.parse_or()?;
        self.skip();
        if self.cursor.peek() == Some('-') && self.cursor.peek2() == Some('>') {
            self.cursor.bump();
            self.cursor.bump();
            let rhs = self.parse()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn parse_or(&mut self) -> Result<Formula> {
        let mut items = vec![self.parse_and()?];
        loop {
            self.skip();
            if self.cursor.peek() == Some('|') {
                self.cursor.bump();
                items.push(self.parse_and()?);
            } else {
                break;
            }
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Formula::Or(items)
        })
    }

    fn parse_and(&mut self) -> Result<Formula> {
        let mut items = vec![self.parse_unary()?];
        loop {
            self.skip();
            if self.cursor.peek() == Some('&') {
                self.cursor.bump();
                items.push(self.parse_unary()?);
            } else {
                break;
            }
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Formula::And(items)
        })
    }

    fn parse_unary(&mut self) -> Result<Formula> {
        self.skip();
        match self.cursor.peek() {
            Some('!') => {
                self.cursor.bump();
                Ok(Formula::not(self.parse_unary()?))
            }
            Some('(') => {
                self.cursor.bump();
                let inner = self.parse()?;
                self.skip();
                self.cursor.expect(')')?;
                Ok(inner)
            }
            Some('0') => {
                self.cursor.bump();
                Ok(Formula::False)
            }
            Some('1') => {
                self.cursor.bump();
                Ok(Formula::True)
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let (name, line, col) = self.cursor.read_ident()?;
                Ok(Formula::Atom(self.pending.resolve(&name, line, col)))
            }
            Some(c) => Err(self
                .cursor
                .error(format!("expected a formula, found `{c}`"))
                .into()),
            None => Err(self
                .cursor
                .error("expected a formula, found end of input")
                .into()),
        }
    }
}

/// Remaps provisional formula atoms onto final atom indices, reporting the
/// first unknown name at its first use.
fn remap_pending(
    pending: &PendingAtoms,
    atoms: &AtomTable,
    formulas: Vec<Formula>,
) -> Result<Vec<Formula>> {
    let mut mapping = Vec::with_capacity(pending.table.len());
    for (id, name) in pending.table.iter() {
        match atoms.id(name) {
            Some(target) => mapping.push(target),
            None => {
                let (line, col) = pending.first_use[id.index()];
                return Err(ParseError::new(line, col, format!("unknown atom `{name}`")).into());
            }
        }
    }
    Ok(formulas
        .into_iter()
        .map(|f| f.map_atoms(&|a| mapping[a.index()]))
        .collect())
}

// ---------------------------------------------------------------------------
// framework format
// ---------------------------------------------------------------------------

/// Parses the statement-based framework format.
pub fn parse_adf(text: &str) -> Result<Adf> {
    parse_adf_document(text).map(|(adf, _)| adf)
}

/// Parses the framework format, also returning the positioned statements.
pub fn parse_adf_document(text: &str) -> Result<(Adf, SourceDocument)> {
    let mut cursor = Cursor::new(text);
    let mut pending = PendingAtoms::default();
    let mut atoms = AtomTable::new();
    let mut statements = Vec::new();
    // target name -> (position, parsed condition)
    let mut conditions: Vec<(String, usize, usize, Formula)> = Vec::new();
    let mut declared_at: Vec<(usize, usize)> = Vec::new();

    loop {
        cursor.skip_ws(true);
        if cursor.at_end() {
            break;
        }
        let (keyword, line, col) = cursor.read_ident()?;
        match keyword.as_str() {
            "s" => {
                cursor.skip_ws(true);
                cursor.expect('(')?;
                cursor.skip_ws(true);
                let (name, nline, ncol) = cursor.read_ident()?;
                cursor.skip_ws(true);
                cursor.expect(')')?;
                cursor.skip_ws(true);
                cursor.expect('.')?;
                if atoms.push(&name).is_none() {
                    return Err(
                        ParseError::new(nline, ncol, format!("duplicate atom `{name}`")).into(),
                    );
                }
                declared_at.push((nline, ncol));
                statements.push(Statement {
                    kind: StatementKind::AtomDeclaration,
                    name,
                    line,
                    col,
                });
            }
            "ac" => {
                cursor.skip_ws(true);
                cursor.expect('(')?;
                cursor.skip_ws(true);
                let (name, nline, ncol) = cursor.read_ident()?;
                cursor.skip_ws(true);
                cursor.expect(',')?;
                let formula = FormulaParser {
                    cursor: &mut cursor,
                    pending: &mut pending,
                    multiline: true,
                }
                .parse()?;
                cursor.skip_ws(true);
                cursor.expect(')')?;
                cursor.skip_ws(true);
                cursor.expect('.')?;
                if conditions.iter().any(|(n, ..)| *n == name) {
                    return Err(ParseError::new(
                        nline,
                        ncol,
                        format!("duplicate acceptance condition for `{name}`"),
                    )
                    .into());
                }
                conditions.push((name.clone(), nline, ncol, formula));
                statements.push(Statement {
                    kind: StatementKind::AcceptanceCondition,
                    name,
                    line,
                    col,
                });
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("expected `s` or `ac`, found `{other}`"),
                )
                .into())
            }
        }
    }

    let mut per_atom: Vec<Option<Formula>> = vec![None; atoms.len()];
    for (name, line, col, formula) in conditions {
        match atoms.id(&name) {
            Some(id) => per_atom[id.index()] = Some(formula),
            None => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("acceptance condition for undeclared atom `{name}`"),
                )
                .into())
            }
        }
    }
    let mut resolved = Vec::with_capacity(atoms.len());
    for (id, slot) in per_atom.into_iter().enumerate() {
        match slot {
            Some(f) => resolved.push(f),
            None => {
                let (line, col) = declared_at[id];
                let name = atoms.name(AtomId(id));
                return Err(ParseError::new(
                    line,
                    col,
                    format!("atom `{name}` has no acceptance condition"),
                )
                .into());
            }
        }
    }
    let resolved = remap_pending(&pending, &atoms, resolved)?;
    let adf = Adf::new(atoms, resolved)?;
    Ok((
        adf,
        SourceDocument {
            format: SourceFormat::Adf,
            statements,
        },
    ))
}

// ---------------------------------------------------------------------------
// network format
// ---------------------------------------------------------------------------

/// Parses the BoolNet-style network format.
pub fn parse_bnet(text: &str) -> Result<BooleanNetwork> {
    parse_bnet_document(text).map(|(bn, _)| bn)
}

/// Parses the network format, also returning the positioned statements.
pub fn parse_bnet_document(text: &str) -> Result<(BooleanNetwork, SourceDocument)> {
    let mut cursor = Cursor::new(text);
    let mut pending = PendingAtoms::default();
    let mut statements = Vec::new();

    cursor.skip_ws(true);
    let (header, hline, hcol) = cursor.read_ident()?;
    if !header.eq_ignore_ascii_case("targets") {
        return Err(ParseError::new(
            hline,
            hcol,
            format!("expected `targets, factors` header, found `{header}`"),
        )
        .into());
    }
    cursor.skip_ws(false);
    cursor.expect(',')?;
    cursor.skip_ws(false);
    let (factors, fline, fcol) = cursor.read_ident()?;
    if !factors.eq_ignore_ascii_case("factors") {
        return Err(ParseError::new(
            fline,
            fcol,
            format!("expected `factors` in the header, found `{factors}`"),
        )
        .into());
    }

    let mut variables = AtomTable::new();
    let mut functions: Vec<Formula> = Vec::new();
    loop {
        cursor.skip_ws(true);
        if cursor.at_end() {
            break;
        }
        let (target, line, col) = cursor.read_ident()?;
        cursor.skip_ws(false);
        cursor.expect(',')?;
        let formula = FormulaParser {
            cursor: &mut cursor,
            pending: &mut pending,
            multiline: false,
        }
        .parse()?;
        cursor.skip_ws(false);
        if !cursor.at_end() && cursor.peek() != Some('\n') {
            let c = cursor.peek().unwrap();
            return Err(cursor.error(format!("unexpected `{c}` after formula")).into());
        }
        if variables.push(&target).is_none() {
            return Err(
                ParseError::new(line, col, format!("duplicate target `{target}`")).into(),
            );
        }
        functions.push(formula);
        statements.push(Statement {
            kind: StatementKind::UpdateFunction,
            name: target,
            line,
            col,
        });
    }

    // factors that are not targets become input nodes
    for (id, name) in pending.table.iter() {
        if variables.id(name).is_none() {
            let (line, col) = pending.first_use[id.index()];
            let new_id = variables.push(name).expect("name was absent");
            functions.push(Formula::Atom(new_id));
            statements.push(Statement {
                kind: StatementKind::ImplicitInput,
                name: name.to_string(),
                line,
                col,
            });
        }
    }
    // the implicit input functions already use final indices; remapping is
    // identity for them, so only remap the parsed prefix
    let parsed_count = functions.len() - statements
        .iter()
        .filter(|s| s.kind == StatementKind::ImplicitInput)
        .count();
    let (parsed, implicit) = {
        let mut parsed = functions;
        let implicit = parsed.split_off(parsed_count);
        (parsed, implicit)
    };
    let mut resolved = remap_pending(&pending, &variables, parsed)?;
    resolved.extend(implicit);

    let network = BooleanNetwork::new(variables, resolved)?;
    Ok((
        network,
        SourceDocument {
            format: SourceFormat::Bnet,
            statements,
        },
    ))
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

const PREC_IMPLIES: u8 = 0;
const PREC_OR: u8 = 1;
const PREC_AND: u8 = 2;
const PREC_NOT: u8 = 3;
const PREC_LEAF: u8 = 4;

fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Implies(..) => PREC_IMPLIES,
        Formula::Or(..) => PREC_OR,
        Formula::And(..) => PREC_AND,
        Formula::Not(..) => PREC_NOT,
        Formula::Atom(..) | Formula::True | Formula::False => PREC_LEAF,
    }
}

fn write_formula(f: &Formula, atoms: &AtomTable, out: &mut String, ctx: u8) {
    let needs_parens = precedence(f) < ctx;
    if needs_parens {
        out.push('(');
    }
    match f {
        Formula::Atom(a) => out.push_str(atoms.name(*a)),
        Formula::True => out.push('1'),
        Formula::False => out.push('0'),
        Formula::Not(x) => {
            out.push('!');
            write_formula(x, atoms, out, PREC_LEAF);
        }
        Formula::And(xs) => match xs.len() {
            0 => out.push('1'),
            _ => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" & ");
                    }
                    write_formula(x, atoms, out, PREC_AND + 1);
                }
            }
        },
        Formula::Or(xs) => match xs.len() {
            0 => out.push('0'),
            _ => {
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        out.push_str(" | ");
                    }
                    write_formula(x, atoms, out, PREC_OR + 1);
                }
            }
        },
        Formula::Implies(l, r) => {
            write_formula(l, atoms, out, PREC_IMPLIES + 1);
            out.push_str(" -> ");
            write_formula(r, atoms, out, PREC_IMPLIES);
        }
    }
    if needs_parens {
        out.push(')');
    }
}

/// Renders a formula in the shared grammar with minimal parentheses.
pub fn format_formula(f: &Formula, atoms: &AtomTable) -> String {
    let mut out = String::new();
    write_formula(f, atoms, &mut out, 0);
    out
}

/// Serializes a framework: all atom declarations, then all acceptance
/// conditions, in atom order.
pub fn serialize_adf(adf: &Adf) -> String {
    let mut out = String::new();
    for (_, name) in adf.atoms().iter() {
        writeln!(out, "s({name}).").unwrap();
    }
    for (atom, name) in adf.atoms().iter() {
        writeln!(
            out,
            "ac({name}, {}).",
            format_formula(adf.condition(atom), adf.atoms())
        )
        .unwrap();
    }
    out
}

/// Serializes a network in the BoolNet style, input nodes spelled out.
pub fn serialize_bnet(network: &BooleanNetwork) -> String {
    let mut out = String::from("targets, factors\n");
    for (var, name) in network.variables().iter() {
        writeln!(
            out,
            "{name}, {}",
            format_formula(network.function(var), network.variables())
        )
        .unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// graph and report exports
// ---------------------------------------------------------------------------

/// Renders a transition graph in DOT format. States are node ids in atom
/// order; members of the given attractors are double-circled.
pub fn stg_dot(stg: &Stg, attractors: &[Vec<State>]) -> String {
    let mut in_attractor = vec![false; stg.num_states()];
    for attractor in attractors {
        for s in attractor {
            in_attractor[s.to_index()] = true;
        }
    }
    let mut out = String::from("digraph stg {\n");
    for (i, state) in stg.states().enumerate() {
        if in_attractor[i] {
            writeln!(out, "  {state} [peripheries=2];").unwrap();
        } else {
            writeln!(out, "  {state};").unwrap();
        }
    }
    for i in 0..stg.num_states() {
        let mut targets: Vec<usize> = stg.successor_indices(i).to_vec();
        targets.sort_unstable();
        let source = State::from_index(i, stg.num_atoms());
        for t in targets {
            writeln!(out, "  {source} -> {};", State::from_index(t, stg.num_atoms())).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Interpretations as framework-style strings (`u` for undecided).
pub fn interps_json(set: &[Interp3]) -> Value {
    Value::Array(set.iter().map(|i| Value::String(i.render_adf())).collect())
}

/// Subspaces as network-style strings (`-` for free).
pub fn subspaces_json(set: &[Interp3]) -> Value {
    Value::Array(
        set.iter()
            .map(|i| Value::String(i.render_subspace()))
            .collect(),
    )
}

pub fn states_json(set: &[State]) -> Value {
    Value::Array(set.iter().map(|s| Value::String(s.to_string())).collect())
}

pub fn atoms_json(atoms: &AtomTable) -> Value {
    Value::Array(
        atoms
            .iter()
            .map(|(_, name)| Value::String(name.to_string()))
            .collect(),
    )
}

pub fn trap_report_json(report: &TrapReport) -> Value {
    json!({
        "scheme": report.scheme.to_string(),
        "trap_spaces": subspaces_json(&report.trap_spaces),
        "minimal": subspaces_json(&report.minimal),
        "maximal": subspaces_json(&report.maximal),
        "attractors": Value::Array(report.attractors.iter().map(|a| states_json(a)).collect()),
        "basins": Value::Array(report.basins.iter().map(|b| states_json(b)).collect()),
        "stable_states": states_json(&report.stable_states),
    })
}

pub fn classification_json(classification: &Classification, atoms: &AtomTable) -> Value {
    let links: Vec<Value> = classification
        .links
        .iter()
        .map(|(&(u, v), polarity)| {
            json!({
                "from": atoms.name(u),
                "to": atoms.name(v),
                "polarity": format!("{polarity:?}").to_lowercase(),
            })
        })
        .collect();
    json!({
        "bipolar": classification.bipolar,
        "links": links,
    })
}

pub fn cycles_json(cycles: &[SignedCycle], atoms: &AtomTable) -> Value {
    Value::Array(
        cycles
            .iter()
            .map(|c| {
                json!({
                    "vertices": c.vertices.iter().map(|v| atoms.name(*v)).collect::<Vec<_>>(),
                    "sign": c.sign.as_str(),
                })
            })
            .collect(),
    )
}

pub fn existence_json(report: &ExistenceReport, atoms: &AtomTable) -> Value {
    json!({
        "acyclic": report.acyclic,
        "has_positive_cycle": report.has_positive_cycle,
        "has_negative_cycle": report.has_negative_cycle,
        "negative_closed_scc": report.negative_closed_scc,
        "ambiguous_cycle": report.ambiguous_cycle,
        "conclusion": report.conclusion.as_str(),
        "fvs_size": report.fvs_size,
        "fvs_witness": report.fvs_witness.iter().map(|v| atoms.name(*v)).collect::<Vec<_>>(),
        "exact_count": report.exact_count,
    })
}

/// Deterministic, sorted edge list of a framework's links (helper for
/// diagnostics and tests).
pub fn links_as_names(adf: &Adf) -> BTreeSet<(String, String)> {
    adf.links()
        .iter()
        .map(|&(u, v)| {
            (
                adf.atoms().name(u).to_string(),
                adf.atoms().name(v).to_string(),
            )
        })
        .collect()
}
