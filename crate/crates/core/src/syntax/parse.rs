use thiserror::Error;

use super::env::{Env, EnvItem};
use super::term::{Binder, Flat, SortIndex, Term};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: expected {expected}")]
    SyntaxError { pos: usize, expected: String },
    #[error("unbound name `{name}` at byte {pos}")]
    UnboundName { name: String, pos: usize },
    #[error("environment must end in a sort (byte {pos})")]
    MissingSortHead { pos: usize },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match self {
            ParseError::SyntaxError { pos, .. }
            | ParseError::UnboundName { pos, .. }
            | ParseError::MissingSortHead { pos } => *pos,
        }
    }
}

/// Parses a closed term.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    parse_term_in(text, &[] as &[String])
}

/// Parses a term whose free names are bound by `names` (outermost first).
pub fn parse_term_in<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Term, ParseError> {
    let mut p = Parser::new(text, names);
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_env(text: &str) -> Result<Env, ParseError> {
    parse_env_named(text).map(|(e, _)| e)
}

/// Parses an environment, also returning its binder names outermost first.
pub fn parse_env_named(text: &str) -> Result<(Env, Vec<String>), ParseError> {
    let mut p = Parser::new(text, &[] as &[String]);
    let mut items = Vec::new();
    while let Some(item) = p.item()? {
        items.push(item);
    }
    p.skip_ws();
    let pos = p.pos;
    let head = match p.atom()? {
        Atom::Sort(h) => h,
        Atom::Name(_) => return Err(ParseError::MissingSortHead { pos }),
    };
    p.finish()?;
    Ok((Env::with_items(items, head), p.names))
}

enum Atom {
    Sort(SortIndex),
    Name(usize),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: Vec<String>,
}

impl<'a> Parser<'a> {
    fn new<S: AsRef<str>>(src: &'a str, names: &[S]) -> Parser<'a> {
        Parser {
            src,
            pos: 0,
            names: names.iter().map(|s| s.as_ref().to_owned()).collect(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        loop {
            let rest = self.rest();
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                return;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError::SyntaxError {
            pos: self.pos,
            expected: expected.to_owned(),
        })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.error(&format!("`{c}`"))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            self.error("end of input")
        } else {
            Ok(())
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return self.error("identifier"),
        }
        let end = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_' || c == '\''))
            .map_or(rest.len(), |(n, _)| n);
        self.pos += end;
        Ok(rest[..end].to_owned())
    }

    fn nat(&mut self) -> Result<SortIndex, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if end == 0 {
            return self.error("natural number");
        }
        match rest[..end].parse() {
            Ok(h) => {
                self.pos += end;
                Ok(h)
            }
            Err(_) => self.error("sort index in range"),
        }
    }

    fn resolve(&self, name: &str, pos: usize) -> Result<usize, ParseError> {
        match self.names.iter().rposition(|n| n == name) {
            Some(level) => Ok(self.names.len() - 1 - level),
            None => Err(ParseError::UnboundName {
                name: name.to_owned(),
                pos,
            }),
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        match self.peek() {
            Some('*') => {
                self.pos += 1;
                Ok(Atom::Sort(self.nat()?))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let pos = self.pos;
                let name = self.ident()?;
                Ok(Atom::Name(self.resolve(&name, pos)?))
            }
            _ => self.error("item or atom"),
        }
    }

    /// Parses one item; a binder's name is pushed onto the scope.
    fn item(&mut self) -> Result<Option<EnvItem>, ParseError> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let name = self.ident()?;
                let binder = match self.peek() {
                    Some(':') => {
                        self.pos += 1;
                        Binder::Abst(Box::new(self.term()?))
                    }
                    Some('=') => {
                        self.pos += 1;
                        Binder::Abbr(Box::new(self.term()?))
                    }
                    Some(']') => Binder::Void,
                    _ => return self.error("`:`, `=` or `]`"),
                };
                self.expect(']')?;
                self.names.push(name);
                Ok(Some(EnvItem::Bind(binder)))
            }
            Some('(') => {
                self.pos += 1;
                let v = self.term()?;
                self.expect(')')?;
                Ok(Some(EnvItem::Flat(Flat::Appl(Box::new(v)))))
            }
            Some('<') => {
                self.pos += 1;
                let w = self.term()?;
                self.expect('>')?;
                Ok(Some(EnvItem::Flat(Flat::Cast(Box::new(w)))))
            }
            _ => Ok(None),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mark = self.names.len();
        let mut items = Vec::new();
        while let Some(item) = self.item()? {
            items.push(item);
        }
        let atom = self.atom();
        self.names.truncate(mark);
        let tail = match atom? {
            Atom::Sort(h) => Term::Sort(h),
            Atom::Name(i) => Term::Ref(i),
        };
        Ok(Env::with_items(items, 0).close(tail))
    }
}
