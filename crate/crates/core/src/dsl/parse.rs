use std::collections::HashMap;

use crate::error::Error;
use crate::finset::Label;

use super::env::Environment;
use super::lex::{lex, Tok, Token};
use super::ops::{self, Arg};
use super::{Command, DslError, DslErrorKind, Item, Script, Statement};

/// Parses and validates a script: syntax, name resolution, and the values
/// themselves (labels in range, functions total and single-valued).
pub fn parse_script(text: &str) -> Result<Script, DslError> {
    let mut names = Names::default();
    let mut items = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens = lex(raw, line)?;
        if tokens.is_empty() {
            continue;
        }
        let end = raw.chars().count() + 1;
        let mut p = Parser {
            tokens,
            pos: 0,
            line,
            end,
            names: &mut names,
        };
        let col = p.tokens[0].col;
        let stmt = p.statement()?;
        items.push(Item { line, col, stmt });
    }
    let script = Script { items };
    Environment::build(&script)?;
    Ok(script)
}

#[derive(Default)]
struct Names {
    /// sets and pointed sets; the flag marks a pointed set
    objects: HashMap<String, bool>,
    subsets: HashMap<String, ()>,
    partitions: HashMap<String, ()>,
    /// functions and relations; the flag marks a function
    arrows: HashMap<String, bool>,
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    end: usize,
    names: &'a mut Names,
}

fn syntax(expected: impl Into<String>, found: impl Into<String>) -> DslErrorKind {
    DslErrorKind::Syntax {
        expected: expected.into(),
        found: found.into(),
    }
}

fn is_name(w: &str) -> bool {
    let mut chars = w.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn col(&self) -> usize {
        self.peek().map_or(self.end, |t| t.col)
    }

    fn err(&self, col: usize, kind: DslErrorKind) -> DslError {
        DslError::new(self.line, col, kind)
    }

    fn found(&self) -> String {
        self.peek()
            .map_or_else(|| "end of line".to_string(), |t| t.tok.to_string())
    }

    fn expect(&mut self, tok: Tok) -> Result<(), DslError> {
        match self.peek() {
            Some(t) if t.tok == tok => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(self.col(), syntax(tok.to_string(), self.found()))),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek().map(|t| &t.tok) == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, usize), DslError> {
        match self.peek() {
            Some(Token {
                tok: Tok::Word(w),
                col,
            }) => {
                let out = (w.clone(), *col);
                self.pos += 1;
                Ok(out)
            }
            _ => Err(self.err(self.col(), syntax(what, self.found()))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), DslError> {
        let col = self.col();
        match self.word(&format!("`{kw}`"))? {
            (w, _) if w == kw => Ok(()),
            (w, _) => Err(self.err(col, syntax(format!("`{kw}`"), format!("`{w}`")))),
        }
    }

    fn name(&mut self) -> Result<(String, usize), DslError> {
        let (w, col) = self.word("a name")?;
        if is_name(&w) {
            Ok((w, col))
        } else {
            Err(self.err(col, syntax("a name", format!("`{w}`"))))
        }
    }

    fn label(&mut self) -> Result<String, DslError> {
        let (w, col) = self.word("a label")?;
        if Label::is_valid(&w) {
            Ok(w)
        } else {
            Err(self.err(col, Error::InvalidLabel(w).into()))
        }
    }

    fn finish(&self) -> Result<(), DslError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.err(t.col, syntax("end of line", t.tok.to_string()))),
        }
    }

    /// `{a,b,c}`, possibly empty.
    fn label_list(&mut self) -> Result<Vec<String>, DslError> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBrace) {
            return Ok(out);
        }
        loop {
            out.push(self.label()?);
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            if !self.eat(&Tok::Comma) {
                return Err(self.err(self.col(), syntax("`,` or `}`", self.found())));
            }
        }
    }

    fn block_list(&mut self) -> Result<Vec<Vec<String>>, DslError> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBrace) {
            return Ok(out);
        }
        loop {
            out.push(self.label_list()?);
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            if !self.eat(&Tok::Comma) {
                return Err(self.err(self.col(), syntax("`,` or `}`", self.found())));
            }
        }
    }

    fn pair_list(&mut self) -> Result<Vec<(String, String)>, DslError> {
        self.expect(Tok::LBrace)?;
        let mut out = Vec::new();
        if self.eat(&Tok::RBrace) {
            return Ok(out);
        }
        loop {
            let a = self.label()?;
            self.expect(Tok::Arrow)?;
            let b = self.label()?;
            out.push((a, b));
            if self.eat(&Tok::RBrace) {
                return Ok(out);
            }
            if !self.eat(&Tok::Comma) {
                return Err(self.err(self.col(), syntax("`,` or `}`", self.found())));
            }
        }
    }

    fn declare<V>(
        line: usize,
        table: &mut HashMap<String, V>,
        kind: &'static str,
        (name, col): (String, usize),
        value: V,
    ) -> Result<String, DslError> {
        if table.contains_key(&name) {
            return Err(DslError::new(
                line,
                col,
                DslErrorKind::DuplicateName { name, kind },
            ));
        }
        table.insert(name.clone(), value);
        Ok(name)
    }

    fn object_ref(&mut self) -> Result<String, DslError> {
        let (name, col) = self.name()?;
        self.resolve(Arg::Object, &name, col)?;
        Ok(name)
    }

    fn resolve(&self, arg: Arg, name: &str, col: usize) -> Result<(), DslError> {
        let n = &self.names;
        let (ok, kind) = match arg {
            Arg::Object => (n.objects.contains_key(name), "set"),
            Arg::Pointed => (n.objects.get(name) == Some(&true), "pointed set"),
            Arg::Subset => (n.subsets.contains_key(name), "subset"),
            Arg::Partition => (n.partitions.contains_key(name), "partition"),
            Arg::Fn => (n.arrows.get(name) == Some(&true), "function"),
            Arg::Arrow => (n.arrows.contains_key(name), "relation"),
            Arg::Choice(words) => {
                if words.contains(&name) {
                    return Ok(());
                }
                return Err(self.err(col, syntax(arg.describe(), format!("`{name}`"))));
            }
        };
        if ok {
            Ok(())
        } else {
            Err(self.err(
                col,
                DslErrorKind::UnknownReference {
                    name: name.to_string(),
                    kind,
                },
            ))
        }
    }

    fn statement(&mut self) -> Result<Statement, DslError> {
        let line = self.line;
        let (head, col) = self.word("a statement")?;
        let stmt = match head.as_str() {
            "set" => {
                let name = self.name()?;
                self.expect(Tok::Eq)?;
                let elems = self.label_list()?;
                let name = Self::declare(line, &mut self.names.objects, "set", name, false)?;
                Statement::Set { name, elems }
            }
            "pset" => {
                let name = self.name()?;
                self.expect(Tok::Eq)?;
                let elems = self.label_list()?;
                self.keyword("base")?;
                let base = self.label()?;
                let name = Self::declare(line, &mut self.names.objects, "set", name, true)?;
                Statement::Pset { name, elems, base }
            }
            "subset" => {
                let name = self.name()?;
                self.keyword("of")?;
                let of = self.object_ref()?;
                self.expect(Tok::Eq)?;
                let elems = self.label_list()?;
                let name = Self::declare(line, &mut self.names.subsets, "subset", name, ())?;
                Statement::Subset { name, of, elems }
            }
            "partition" => {
                let name = self.name()?;
                self.keyword("on")?;
                let on = self.object_ref()?;
                self.expect(Tok::Eq)?;
                let blocks = self.block_list()?;
                let name = Self::declare(line, &mut self.names.partitions, "partition", name, ())?;
                Statement::Partition { name, on, blocks }
            }
            "fn" | "rel" => {
                let name = self.name()?;
                self.expect(Tok::Colon)?;
                let dom = self.object_ref()?;
                self.expect(Tok::Arrow)?;
                let cod = self.object_ref()?;
                let pairs = self.pair_list()?;
                let is_fn = head == "fn";
                let name = Self::declare(line, &mut self.names.arrows, "function", name, is_fn)?;
                if is_fn {
                    Statement::Fn {
                        name,
                        dom,
                        cod,
                        pairs,
                    }
                } else {
                    Statement::Rel {
                        name,
                        dom,
                        cod,
                        pairs,
                    }
                }
            }
            "compute" => Statement::Compute(self.command()?),
            other => {
                return Err(self.err(
                    col,
                    syntax(
                        "`set`, `subset`, `partition`, `fn`, `rel`, `pset` or `compute`",
                        format!("`{other}`"),
                    ),
                ))
            }
        };
        self.finish()?;
        Ok(stmt)
    }

    fn number<T: std::str::FromStr>(&mut self) -> Result<T, DslError> {
        let (w, col) = self.word("a number")?;
        w.parse()
            .map_err(|_| self.err(col, syntax("a number", format!("`{w}`"))))
    }

    fn command(&mut self) -> Result<Command, DslError> {
        let (op, op_col) = self.word("an operation")?;
        if !ops::is_op(&op) {
            return Err(self.err(op_col, syntax("an operation", format!("`{op}`"))));
        }
        let mut args: Vec<(String, usize)> = Vec::new();
        let mut budget = None;
        let mut probe = None;
        while let Some(t) = self.peek() {
            let col = t.col;
            let (w, _) = self.word("an argument")?;
            match w.as_str() {
                "--budget" if budget.is_none() => budget = Some(self.number()?),
                "--probe" if probe.is_none() && ops::takes_probe(&op) => {
                    probe = Some(self.number()?)
                }
                _ if w.starts_with("--") => {
                    return Err(self.err(col, syntax("an argument", format!("`{w}`"))))
                }
                _ => args.push((w, col)),
            }
        }
        let sig = ops::signature(&op, args.first().map(|(w, _)| w.as_str()));
        for (i, arg) in sig.iter().enumerate() {
            match args.get(i) {
                Some((w, col)) => self.resolve(*arg, w, *col)?,
                None => return Err(self.err(self.end, syntax(arg.describe(), "end of line"))),
            }
        }
        if let Some((w, col)) = args.get(sig.len()) {
            return Err(self.err(*col, syntax("end of line", format!("`{w}`"))));
        }
        Ok(Command {
            op,
            args: args.into_iter().map(|(w, _)| w).collect(),
            budget,
            probe,
        })
    }
}
