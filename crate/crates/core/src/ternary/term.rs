//! Terms over variables, the ternary bracket and the skew, plus identities
//! written in a compact notation: `[[abc]cd] = [[ab[bcd]][bcd]d]`, with a
//! postfix `'` for the skew (`a'` is the skew of `a`).

use std::fmt;

use super::TernaryOps;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Bracket(Box<[Term; 3]>),
    Skew(Box<Term>),
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn bracket(x: Term, y: Term, z: Term) -> Term {
        Term::Bracket(Box::new([x, y, z]))
    }

    pub fn skew(t: Term) -> Term {
        Term::Skew(Box::new(t))
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            Term::Var(i) => Some(*i),
            Term::Bracket(args) => args.iter().filter_map(Term::max_var).max(),
            Term::Skew(t) => t.max_var(),
        }
    }

    pub fn uses_skew(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Bracket(args) => args.iter().any(Term::uses_skew),
            Term::Skew(_) => true,
        }
    }

    fn write_with(&self, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => match names.get(*i) {
                Some(n) => f.write_str(n),
                None => write!(f, "v{i}"),
            },
            Term::Bracket(args) => {
                f.write_str("[")?;
                for a in args.iter() {
                    a.write_with(names, f)?;
                }
                f.write_str("]")
            }
            Term::Skew(t) => {
                t.write_with(names, f)?;
                f.write_str("'")
            }
        }
    }
}

/// Structural evaluation of a term in `s` under `env`.
pub fn eval_term(s: &dyn TernaryOps, t: &Term, env: &[usize]) -> Result<usize> {
    Ok(match t {
        Term::Var(i) => *env
            .get(*i)
            .ok_or_else(|| Error::Internal(format!("variable {i} is unbound")))?,
        Term::Bracket(args) => {
            let x = eval_term(s, &args[0], env)?;
            let y = eval_term(s, &args[1], env)?;
            let z = eval_term(s, &args[2], env)?;
            s.bracket(x, y, z)
        }
        Term::Skew(inner) => s.skew(eval_term(s, inner, env)?)?,
    })
}

/// A chain of terms that must all be equal: `sides[0] = sides[1] = ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    name: String,
    sides: Vec<Term>,
    vars: Vec<String>,
}

impl Identity {
    /// Parses `lhs = rhs [= ...]`. Variables are a letter followed by
    /// optional digits and are numbered by first appearance.
    pub fn parse(name: &str, text: &str) -> Result<Identity> {
        let mut p = Parser {
            chars: text.char_indices().collect(),
            pos: 0,
            vars: Vec::new(),
        };
        let mut sides = vec![p.term()?];
        loop {
            p.skip_ws();
            match p.peek() {
                None => break,
                Some('=') => {
                    p.pos += 1;
                    sides.push(p.term()?);
                }
                Some(c) => return Err(p.err(format!("unexpected `{c}`"))),
            }
        }
        if sides.len() < 2 {
            return Err(Error::parse(1, text.len() + 1, "an identity needs `=`"));
        }
        Ok(Identity {
            name: name.to_string(),
            sides,
            vars: p.vars,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sides(&self) -> &[Term] {
        &self.sides
    }

    pub fn lhs(&self) -> &Term {
        &self.sides[0]
    }

    pub fn rhs(&self) -> &Term {
        self.sides.last().unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn uses_skew(&self) -> bool {
        self.sides.iter().any(Term::uses_skew)
    }

    pub(crate) fn compile(&self) -> Vec<Program> {
        self.sides.iter().map(Program::compile).collect()
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sides.iter().enumerate() {
            if i > 0 {
                f.write_str(" = ")?;
            }
            s.write_with(&self.vars, f)?;
        }
        Ok(())
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn col(&self) -> usize {
        self.chars.get(self.pos).map_or_else(
            || self.chars.last().map_or(1, |&(i, c)| i + c.len_utf8() + 1),
            |&(i, _)| i + 1,
        )
    }

    fn err(&self, msg: String) -> Error {
        Error::parse(1, self.col(), msg)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        let mut t = match self.peek() {
            Some('[') => {
                self.pos += 1;
                let x = self.term()?;
                let y = self.term()?;
                let z = self.term()?;
                self.skip_ws();
                if self.peek() != Some(']') {
                    return Err(self.err("expected `]`".into()));
                }
                self.pos += 1;
                Term::bracket(x, y, z)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let mut name = c.to_string();
                self.pos += 1;
                while let Some(d) = self.peek().filter(char::is_ascii_digit) {
                    name.push(d);
                    self.pos += 1;
                }
                let idx = match self.vars.iter().position(|v| *v == name) {
                    Some(i) => i,
                    None => {
                        self.vars.push(name);
                        self.vars.len() - 1
                    }
                };
                Term::Var(idx)
            }
            Some(c) => return Err(self.err(format!("unexpected `{c}`"))),
            None => return Err(self.err("unexpected end of identity".into())),
        };
        while self.peek() == Some('\'') {
            self.pos += 1;
            t = Term::skew(t);
        }
        Ok(t)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) enum Op {
    Push(usize),
    Bracket,
    Skew,
}

/// Postfix form of a term for tight evaluation loops.
#[derive(Debug, Clone)]
pub(crate) struct Program {
    ops: Vec<Op>,
}

impl Program {
    pub fn compile(t: &Term) -> Program {
        fn emit(t: &Term, ops: &mut Vec<Op>) {
            match t {
                Term::Var(i) => ops.push(Op::Push(*i)),
                Term::Bracket(args) => {
                    for a in args.iter() {
                        emit(a, ops);
                    }
                    ops.push(Op::Bracket);
                }
                Term::Skew(inner) => {
                    emit(inner, ops);
                    ops.push(Op::Skew);
                }
            }
        }
        let mut ops = Vec::new();
        emit(t, &mut ops);
        Program { ops }
    }

    /// `skew` must be present whenever the program contains a skew.
    pub fn run(
        &self,
        s: &dyn TernaryOps,
        skew: Option<&[usize]>,
        env: &[usize],
        stack: &mut Vec<usize>,
    ) -> usize {
        stack.clear();
        for op in &self.ops {
            match *op {
                Op::Push(i) => stack.push(env[i]),
                Op::Bracket => {
                    let z = stack.pop().unwrap();
                    let y = stack.pop().unwrap();
                    let x = stack.pop().unwrap();
                    stack.push(s.bracket(x, y, z));
                }
                Op::Skew => {
                    let x = stack.pop().unwrap();
                    stack.push(skew.expect("skew map")[x]);
                }
            }
        }
        stack[0]
    }
}
