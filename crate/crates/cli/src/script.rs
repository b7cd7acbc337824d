//! The session script format: declarations and commands, one per line.
//!
//! ```text
//! ring A = QQ[x] / (x^2)
//! module M = coker [[x]]
//! rees M --method both --max-degree 4
//! ```

use std::collections::HashMap;
use std::fmt;

use reeskit::poly::{parse_polynomial, MonomialOrder, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

/// 1-based position of a statement in the source.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub col: usize,
}

/// Parsed script. Equality ignores source positions.
#[derive(Clone, Debug, Default)]
pub struct SessionScript {
    pub statements: Vec<Statement>,
    pub positions: Vec<Position>,
}

impl PartialEq for SessionScript {
    fn eq(&self, other: &Self) -> bool {
        self.statements == other.statements
    }
}

impl Eq for SessionScript {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Ring {
        name: String,
        variables: Vec<String>,
        relations: Vec<Polynomial>,
    },
    Ideal {
        name: String,
        generators: Vec<Polynomial>,
    },
    Module {
        name: String,
        definition: ModuleDef,
    },
    Map {
        name: String,
        source: String,
        target: String,
        matrix: Vec<Vec<Polynomial>>,
    },
    Algebra {
        name: String,
        definition: AlgebraDef,
    },
    Command(Command),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleDef {
    /// Rows of the relation matrix; relations are its columns.
    Coker(Vec<Vec<Polynomial>>),
    Free(usize),
    Ideal(String),
    DirectSum(Vec<String>),
    Dual(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraDef {
    Sym(String),
    /// Of a module through its versal map, or of a map into a free module.
    Rees(String),
    ReesIdeal(String),
    Tensor(String, String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Groebner,
    Dual,
    Versal,
    Sym,
    Rees,
    ReesIdeal,
    Gamma,
    Hilbert,
    VerifyTheoremA,
    Tensor,
    Equal,
}

impl CommandKind {
    pub const ALL: [CommandKind; 11] = [
        CommandKind::Groebner,
        CommandKind::Dual,
        CommandKind::Versal,
        CommandKind::Sym,
        CommandKind::Rees,
        CommandKind::ReesIdeal,
        CommandKind::Gamma,
        CommandKind::Hilbert,
        CommandKind::VerifyTheoremA,
        CommandKind::Tensor,
        CommandKind::Equal,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            CommandKind::Groebner => "groebner",
            CommandKind::Dual => "dual",
            CommandKind::Versal => "versal",
            CommandKind::Sym => "sym",
            CommandKind::Rees => "rees",
            CommandKind::ReesIdeal => "rees-ideal",
            CommandKind::Gamma => "gamma",
            CommandKind::Hilbert => "hilbert",
            CommandKind::VerifyTheoremA => "verify-theorem-a",
            CommandKind::Tensor => "tensor",
            CommandKind::Equal => "equal",
        }
    }

    fn from_keyword(word: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == word)
    }

    /// Accepted kinds for each positional argument.
    fn arguments(self) -> &'static [&'static [Kind]] {
        use Kind::*;
        match self {
            CommandKind::Groebner | CommandKind::ReesIdeal => &[&[Ideal]],
            CommandKind::Dual | CommandKind::Sym | CommandKind::Gamma | CommandKind::VerifyTheoremA => {
                &[&[Module]]
            }
            CommandKind::Versal | CommandKind::Rees => &[&[Module, Map]],
            CommandKind::Hilbert => &[&[Algebra, Module]],
            CommandKind::Tensor | CommandKind::Equal => &[&[Algebra], &[Algebra]],
        }
    }

    fn takes_max_degree(self) -> bool {
        matches!(
            self,
            CommandKind::Rees | CommandKind::Gamma | CommandKind::Hilbert | CommandKind::VerifyTheoremA
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Versal,
    Gamma,
    Both,
}

impl Method {
    pub fn keyword(self) -> &'static str {
        match self {
            Method::Versal => "versal",
            Method::Gamma => "gamma",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub kind: CommandKind,
    pub args: Vec<String>,
    pub method: Option<Method>,
    pub max_degree: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Ring,
    Ideal,
    Module,
    Map,
    Algebra,
}

impl Kind {
    fn noun(self) -> &'static str {
        match self {
            Kind::Ring => "ring",
            Kind::Ideal => "ideal",
            Kind::Module => "module",
            Kind::Map => "map",
            Kind::Algebra => "algebra",
        }
    }
}

/// Cursor over one line; columns are 1-based character positions.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn col_of(&self, byte: usize) -> usize {
        self.text[..byte].chars().count() + 1
    }

    fn error_at(&self, byte: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col_of(byte),
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error(format!("unexpected '{}'", self.rest())))
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", token)))
        }
    }

    /// A non-whitespace word such as a keyword, flag or number.
    fn word(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().find(char::is_whitespace).unwrap_or(self.rest().len());
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.text[start..start + len]))
    }

    fn identifier(&mut self) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphabetic() || c == '_' || (i > 0 && c.is_ascii_digit())))
            .map(|(i, _)| i)
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.error("expected an identifier"));
        }
        self.pos += len;
        Ok((start, &self.text[start..start + len]))
    }

    /// Contents of a bracketed group starting at the cursor, as `(byte offset, text)`.
    fn group(&mut self, open: char, close: char) -> Result<(usize, &'a str), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !self.rest().starts_with(open) {
            return Err(self.error(format!("expected '{}'", open)));
        }
        let mut depth = 0usize;
        for (i, c) in self.rest().char_indices() {
            if c == open {
                depth += 1;
            } else if c == close {
                depth -= 1;
                if depth == 0 {
                    let inner = &self.text[start + 1..start + i];
                    self.pos = start + i + 1;
                    return Ok((start + 1, inner));
                }
            }
        }
        Err(self.error_at(start, format!("unclosed '{}'", open)))
    }
}

/// Splits on commas outside brackets; yields `(byte offset, piece)`.
fn split_top_level(base: usize, text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((base + start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((base + start, &text[start..]));
    out
}

struct Parser {
    kinds: HashMap<String, Kind>,
    variables: Option<Vec<String>>,
}

impl Parser {
    fn polynomial(&self, cur: &Cursor, offset: usize, text: &str) -> Result<Polynomial, ParseError> {
        let names = self
            .variables
            .as_ref()
            .ok_or_else(|| cur.error_at(offset, "no ring declared"))?;
        let lead = text.len() - text.trim_start().len();
        let body = text.trim();
        if body.is_empty() {
            return Err(cur.error_at(offset, "empty expression"));
        }
        parse_polynomial(body, names).map_err(|e| match e {
            reeskit::Error::Parse { offset: o, message } => cur.error_at(offset + lead + o, message),
            other => cur.error_at(offset + lead, other.to_string()),
        })
    }

    fn polynomial_list(&self, cur: &mut Cursor) -> Result<Vec<Polynomial>, ParseError> {
        let (base, inner) = cur.group('(', ')')?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        split_top_level(base, inner)
            .into_iter()
            .map(|(o, t)| self.polynomial(cur, o, t))
            .collect()
    }

    fn matrix(&self, cur: &mut Cursor) -> Result<Vec<Vec<Polynomial>>, ParseError> {
        let (base, inner) = cur.group('[', ']')?;
        let mut rows = Vec::new();
        for (o, row) in split_top_level(base, inner) {
            let lead = row.len() - row.trim_start().len();
            let row = row.trim();
            let at = o + lead;
            if !(row.starts_with('[') && row.ends_with(']')) {
                return Err(cur.error_at(at, "expected a matrix row '[...]'"));
            }
            let entries = split_top_level(at + 1, &row[1..row.len() - 1])
                .into_iter()
                .map(|(eo, e)| self.polynomial(cur, eo, e))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(first) = rows.first() {
                let first: &Vec<Polynomial> = first;
                if first.len() != entries.len() {
                    return Err(cur.error_at(
                        at,
                        format!("row has {} entries, expected {}", entries.len(), first.len()),
                    ));
                }
            }
            rows.push(entries);
        }
        Ok(rows)
    }

    fn declare(&mut self, cur: &Cursor, at: usize, name: &str, kind: Kind) -> Result<String, ParseError> {
        if let Some(k) = self.kinds.get(name) {
            return Err(cur.error_at(at, format!("'{}' is already declared as a {}", name, k.noun())));
        }
        self.kinds.insert(name.to_string(), kind);
        Ok(name.to_string())
    }

    fn reference(&self, cur: &mut Cursor, accepted: &[Kind]) -> Result<String, ParseError> {
        let (at, name) = cur.identifier()?;
        self.check_reference(cur, at, name, accepted)
    }

    fn check_reference(&self, cur: &Cursor, at: usize, name: &str, accepted: &[Kind]) -> Result<String, ParseError> {
        match self.kinds.get(name) {
            None => Err(cur.error_at(at, format!("unknown identifier '{}'", name))),
            Some(k) if accepted.contains(k) => Ok(name.to_string()),
            Some(k) => {
                let wanted: Vec<&str> = accepted.iter().map(|k| k.noun()).collect();
                Err(cur.error_at(
                    at,
                    format!("'{}' is a {}, expected {}", name, k.noun(), wanted.join(" or ")),
                ))
            }
        }
    }

    fn statement(&mut self, cur: &mut Cursor) -> Result<Statement, ParseError> {
        let (at, keyword) = cur.word().expect("nonempty line");
        match keyword {
            "ring" => self.ring(cur),
            "ideal" => {
                let (at, name) = cur.identifier()?;
                cur.expect("=")?;
                self.require_ring(cur, at)?;
                let generators = self.polynomial_list(cur)?;
                cur.expect_end()?;
                let name = self.declare(cur, at, name, Kind::Ideal)?;
                Ok(Statement::Ideal { name, generators })
            }
            "module" => self.module(cur),
            "map" => self.map(cur),
            "algebra" => self.algebra(cur),
            word => match CommandKind::from_keyword(word) {
                Some(kind) => self.command(cur, kind).map(Statement::Command),
                None => Err(cur.error_at(at, format!("unknown statement '{}'", word))),
            },
        }
    }

    fn require_ring(&self, cur: &Cursor, at: usize) -> Result<(), ParseError> {
        if self.variables.is_none() {
            return Err(cur.error_at(at, "no ring declared"));
        }
        Ok(())
    }

    fn ring(&mut self, cur: &mut Cursor) -> Result<Statement, ParseError> {
        let (at, name) = cur.identifier()?;
        cur.expect("=")?;
        cur.expect("QQ")?;
        let mut variables = Vec::new();
        if !cur.at_end() && cur.rest().starts_with('[') {
            let (base, inner) = cur.group('[', ']')?;
            if !inner.trim().is_empty() {
                for (o, v) in split_top_level(base, inner) {
                    let lead = v.len() - v.trim_start().len();
                    let v = v.trim();
                    let mut sub = Cursor {
                        text: v,
                        pos: 0,
                        line: cur.line,
                    };
                    let ok = sub.identifier().map(|(_, id)| id.len() == v.len()).unwrap_or(false);
                    if !ok {
                        return Err(cur.error_at(o + lead, format!("invalid variable name '{}'", v)));
                    }
                    if variables.iter().any(|w: &String| w == v) {
                        return Err(cur.error_at(o + lead, format!("duplicate variable '{}'", v)));
                    }
                    variables.push(v.to_string());
                }
            }
        }
        let previous = self.variables.replace(variables.clone());
        let relations = if cur.eat("/") {
            self.polynomial_list(cur)
        } else {
            Ok(Vec::new())
        };
        let relations = match relations.and_then(|r| cur.expect_end().map(|_| r)) {
            Ok(r) => r,
            Err(e) => {
                self.variables = previous;
                return Err(e);
            }
        };
        let name = self.declare(cur, at, name, Kind::Ring)?;
        Ok(Statement::Ring {
            name,
            variables,
            relations,
        })
    }

    fn module(&mut self, cur: &mut Cursor) -> Result<Statement, ParseError> {
        let (at, name) = cur.identifier()?;
        cur.expect("=")?;
        let (kw_at, kw) = cur.word().ok_or_else(|| cur.error("expected a module expression"))?;
        let definition = match kw {
            "coker" => {
                self.require_ring(cur, kw_at)?;
                ModuleDef::Coker(self.matrix(cur)?)
            }
            "free" => {
                self.require_ring(cur, kw_at)?;
                let (n_at, n) = cur.word().ok_or_else(|| cur.error("expected a rank"))?;
                let n = n.parse().map_err(|_| cur.error_at(n_at, format!("invalid rank '{}'", n)))?;
                ModuleDef::Free(n)
            }
            "ideal" => ModuleDef::Ideal(self.reference(cur, &[Kind::Ideal])?),
            "dual" => ModuleDef::Dual(self.reference(cur, &[Kind::Module])?),
            "directsum" => {
                let mut parts = vec![self.reference(cur, &[Kind::Module])?];
                while !cur.at_end() {
                    parts.push(self.reference(cur, &[Kind::Module])?);
                }
                ModuleDef::DirectSum(parts)
            }
            other => return Err(cur.error_at(kw_at, format!("unknown module expression '{}'", other))),
        };
        cur.expect_end()?;
        let name = self.declare(cur, at, name, Kind::Module)?;
        Ok(Statement::Module { name, definition })
    }

    fn map(&mut self, cur: &mut Cursor) -> Result<Statement, ParseError> {
        let (at, name) = cur.identifier()?;
        cur.expect(":")?;
        let source = self.reference(cur, &[Kind::Module])?;
        cur.expect("->")?;
        let target = self.reference(cur, &[Kind::Module])?;
        cur.expect("=")?;
        self.require_ring(cur, at)?;
        let matrix = self.matrix(cur)?;
        cur.expect_end()?;
        let name = self.declare(cur, at, name, Kind::Map)?;
        Ok(Statement::Map {
            name,
            source,
            target,
            matrix,
        })
    }

    fn algebra(&mut self, cur: &mut Cursor) -> Result<Statement, ParseError> {
        let (at, name) = cur.identifier()?;
        cur.expect("=")?;
        let (kw_at, kw) = cur.word().ok_or_else(|| cur.error("expected an algebra expression"))?;
        let definition = match kw {
            "sym" => AlgebraDef::Sym(self.reference(cur, &[Kind::Module])?),
            "rees" => AlgebraDef::Rees(self.reference(cur, &[Kind::Module, Kind::Map])?),
            "rees-ideal" => AlgebraDef::ReesIdeal(self.reference(cur, &[Kind::Ideal])?),
            "tensor" => {
                let b = self.reference(cur, &[Kind::Algebra])?;
                let c = self.reference(cur, &[Kind::Algebra])?;
                AlgebraDef::Tensor(b, c)
            }
            other => return Err(cur.error_at(kw_at, format!("unknown algebra expression '{}'", other))),
        };
        cur.expect_end()?;
        let name = self.declare(cur, at, name, Kind::Algebra)?;
        Ok(Statement::Algebra { name, definition })
    }

    fn command(&mut self, cur: &mut Cursor, kind: CommandKind) -> Result<Command, ParseError> {
        let expected = kind.arguments();
        let mut args = Vec::new();
        let mut method = None;
        let mut max_degree = None;
        while let Some((at, word)) = cur.word() {
            match word {
                "--method" if kind == CommandKind::Rees => {
                    let (v_at, v) = cur.word().ok_or_else(|| cur.error("expected versal, gamma or both"))?;
                    method = Some(match v {
                        "versal" => Method::Versal,
                        "gamma" => Method::Gamma,
                        "both" => Method::Both,
                        _ => return Err(cur.error_at(v_at, format!("unknown method '{}'", v))),
                    });
                }
                "--max-degree" if kind.takes_max_degree() => {
                    let (v_at, v) = cur.word().ok_or_else(|| cur.error("expected a degree"))?;
                    max_degree =
                        Some(v.parse().map_err(|_| cur.error_at(v_at, format!("invalid degree '{}'", v)))?);
                }
                flag if flag.starts_with("--") => {
                    return Err(cur.error_at(at, format!("unknown flag '{}' for {}", flag, kind.keyword())))
                }
                name => {
                    let Some(accepted) = expected.get(args.len()) else {
                        return Err(cur.error_at(
                            at,
                            format!("{} takes {} argument(s)", kind.keyword(), expected.len()),
                        ));
                    };
                    args.push(self.check_reference(cur, at, name, accepted)?);
                }
            }
        }
        if args.len() != expected.len() {
            return Err(cur.error(format!(
                "{} takes {} argument(s), found {}",
                kind.keyword(),
                expected.len(),
                args.len()
            )));
        }
        Ok(Command {
            kind,
            args,
            method,
            max_degree,
        })
    }
}

/// Parses a whole script; `#` starts a comment.
pub fn parse(text: &str) -> Result<SessionScript, ParseError> {
    let mut parser = Parser {
        kinds: HashMap::new(),
        variables: None,
    };
    let mut script = SessionScript::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor {
            text: line,
            pos: 0,
            line: i + 1,
        };
        if cur.at_end() {
            continue;
        }
        let position = Position {
            line: i + 1,
            col: cur.col_of(cur.pos),
        };
        script.statements.push(parser.statement(&mut cur)?);
        script.positions.push(position);
    }
    Ok(script)
}

fn render_list(ps: &[Polynomial], names: &[String]) -> String {
    let order = MonomialOrder::Grevlex;
    ps.iter().map(|p| p.render(names, &order)).collect::<Vec<_>>().join(", ")
}

fn render_matrix(rows: &[Vec<Polynomial>], names: &[String]) -> String {
    let rows: Vec<String> = rows.iter().map(|r| format!("[{}]", render_list(r, names))).collect();
    format!("[{}]", rows.join(", "))
}

/// Canonical text of a script; `parse(&render(s)) == s`.
pub fn render(script: &SessionScript) -> String {
    let mut names: Vec<String> = Vec::new();
    let mut out = String::new();
    for s in &script.statements {
        let line = match s {
            Statement::Ring {
                name,
                variables,
                relations,
            } => {
                names = variables.clone();
                let head = format!("ring {} = QQ[{}]", name, variables.join(", "));
                if relations.is_empty() {
                    head
                } else {
                    format!("{} / ({})", head, render_list(relations, &names))
                }
            }
            Statement::Ideal { name, generators } => {
                format!("ideal {} = ({})", name, render_list(generators, &names))
            }
            Statement::Module { name, definition } => {
                let def = match definition {
                    ModuleDef::Coker(rows) => format!("coker {}", render_matrix(rows, &names)),
                    ModuleDef::Free(n) => format!("free {}", n),
                    ModuleDef::Ideal(i) => format!("ideal {}", i),
                    ModuleDef::DirectSum(parts) => format!("directsum {}", parts.join(" ")),
                    ModuleDef::Dual(m) => format!("dual {}", m),
                };
                format!("module {} = {}", name, def)
            }
            Statement::Map {
                name,
                source,
                target,
                matrix,
            } => format!("map {} : {} -> {} = {}", name, source, target, render_matrix(matrix, &names)),
            Statement::Algebra { name, definition } => {
                let def = match definition {
                    AlgebraDef::Sym(m) => format!("sym {}", m),
                    AlgebraDef::Rees(m) => format!("rees {}", m),
                    AlgebraDef::ReesIdeal(i) => format!("rees-ideal {}", i),
                    AlgebraDef::Tensor(b, c) => format!("tensor {} {}", b, c),
                };
                format!("algebra {} = {}", name, def)
            }
            Statement::Command(c) => {
                let mut line = format!("{} {}", c.kind.keyword(), c.args.join(" "));
                if let Some(m) = c.method {
                    line.push_str(&format!(" --method {}", m.keyword()));
                }
                if let Some(d) = c.max_degree {
                    line.push_str(&format!(" --max-degree {}", d));
                }
                line
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn first_error(text: &str) -> ParseError {
        parse(text).unwrap_err()
    }

    #[test]
    fn declarations() {
        let s = parse("ring A = QQ[x] / (x^2)\nmodule M = coker [[x]]\nrees M --method both --max-degree 4\n").unwrap();
        assert_eq!(s.statements.len(), 3);
        match &s.statements[0] {
            Statement::Ring {
                variables,
                relations,
                ..
            } => {
                assert_eq!(variables, &["x"]);
                assert_eq!(relations.len(), 1);
            }
            other => panic!("{:?}", other),
        }
        match &s.statements[1] {
            Statement::Module {
                definition: ModuleDef::Coker(rows),
                ..
            } => assert_eq!((rows.len(), rows[0].len()), (1, 1)),
            other => panic!("{:?}", other),
        }
        assert_eq!(
            s.statements[2],
            Statement::Command(Command {
                kind: CommandKind::Rees,
                args: vec!["M".into()],
                method: Some(Method::Both),
                max_degree: Some(4),
            })
        );
        assert_eq!(s.positions[2], Position { line: 3, col: 1 });
    }

    #[test]
    fn comments_and_blank_lines() {
        let s = parse("# header\n\nring R = QQ[x, y]   # plane\nideal I = (x, y)\n").unwrap();
        assert_eq!(s.statements.len(), 2);
        assert_eq!(s.positions[1].line, 4);
    }

    #[test]
    fn render_round_trip() {
        let text = "ring A = QQ[x]/(x^2)\nmodule M = coker [[x]]\nmodule F = free 1\nmap f : M -> F = [[ x ]]\nmodule N = directsum M M\nalgebra R = rees M\nalgebra T = tensor R R\nequal R T\nrees M --method gamma\n";
        let s = parse(text).unwrap();
        let again = parse(&render(&s)).unwrap();
        assert_eq!(s, again);
        assert_eq!(render(&again), render(&s));
    }

    #[test]
    fn unknown_identifier_position() {
        let e = first_error("ring A = QQ[x]\nrees N\n");
        assert_eq!((e.line, e.col), (2, 6));
        assert!(e.message.contains("unknown identifier"));
    }

    #[test]
    fn polynomial_error_position() {
        let e = first_error("ring A = QQ[x]\nideal I = (x, y)\n");
        assert_eq!((e.line, e.col), (2, 15));
    }

    #[test]
    fn ragged_matrix() {
        let e = first_error("ring A = QQ[x]\nmodule M = coker [[x, 1], [x]]\n");
        assert_eq!(e.line, 2);
        assert!(e.message.contains("expected 2"), "{}", e.message);
    }

    #[test]
    fn arity_and_kinds() {
        assert!(first_error("ring A = QQ[x]\nideal I = (x)\ntensor I\n").message.contains("is a ideal"));
        assert!(first_error("ring A = QQ[x]\nmodule M = free 1\ndual M M\n").message.contains("takes 1"));
        assert!(first_error("ring A = QQ[x]\nmodule M = free 1\ndual M --method gamma\n").message.contains("unknown flag"));
        assert!(first_error("module M = free 1\n").message.contains("no ring"));
        assert!(first_error("ring A = QQ[x]\nring A = QQ[y]\n").message.contains("already declared"));
    }

    #[test]
    fn unknown_statement() {
        let e = first_error("frobnicate\n");
        assert_eq!((e.line, e.col), (1, 1));
    }
}
