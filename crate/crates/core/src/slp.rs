//! Straight-line programs of pairwise additions and subtractions.
//!
//! Execution starts from a copy of the input vector (the initialization
//! block is implicit and not counted), then applies each statement in
//! order: `add T S` is `out[T] += out[S]`, `sub T S` is `out[T] -= out[S]`.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::oracle::TransformMatrix;
use crate::par::Strategy;
use crate::poset::ElemId;

/// Exact scalar used for evaluation and matrices.
pub type Value = i128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Add,
    Sub,
}

impl Op {
    pub fn inverse(self) -> Op {
        match self {
            Op::Add => Op::Sub,
            Op::Sub => Op::Add,
        }
    }

    fn keyword(self) -> &'static str {
        match self {
            Op::Add => "add",
            Op::Sub => "sub",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Statement {
    pub op: Op,
    pub target: ElemId,
    pub source: ElemId,
}

impl Statement {
    pub fn add(target: ElemId, source: ElemId) -> Self {
        Statement { op: Op::Add, target, source }
    }

    pub fn sub(target: ElemId, source: ElemId) -> Self {
        Statement { op: Op::Sub, target, source }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.op.keyword(), self.target, self.source)
    }
}

/// Which transform a program claims to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Zeta,
    Moebius,
    Unknown,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Zeta => "zeta",
            Kind::Moebius => "moebius",
            Kind::Unknown => "unknown",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeta" => Ok(Kind::Zeta),
            "moebius" => Ok(Kind::Moebius),
            "unknown" => Ok(Kind::Unknown),
            other => Err(Error::InvalidParameter(format!("unknown program kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slp {
    width: usize,
    statements: Vec<Statement>,
    kind: Kind,
}

impl Slp {
    pub fn new(width: usize, statements: Vec<Statement>, kind: Kind) -> Result<Self> {
        for (index, s) in statements.iter().enumerate() {
            for id in [s.target, s.source] {
                if id >= width {
                    return Err(Error::IdOutOfRange { id, size: width });
                }
            }
            if s.target == s.source {
                return Err(Error::TargetIsSource { index, id: s.target });
            }
        }
        Ok(Slp { width, statements, kind })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn statements(&self) -> &[Statement] {
        &self.statements
    }

    /// Number of arithmetic operations.
    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Runs `self` and then `after` on the same registers.
    pub fn then(&self, after: &Slp) -> Result<Slp> {
        if after.width != self.width {
            return Err(Error::WidthMismatch { got: after.width, want: self.width });
        }
        let mut statements = self.statements.clone();
        statements.extend_from_slice(&after.statements);
        Ok(Slp { width: self.width, statements, kind: Kind::Unknown })
    }

    pub fn evaluate(&self, input: &[Value]) -> Result<Vec<Value>> {
        if input.len() != self.width {
            return Err(Error::WidthMismatch { got: input.len(), want: self.width });
        }
        let mut out = input.to_vec();
        for s in &self.statements {
            let rhs = out[s.source];
            let lhs = &mut out[s.target];
            *lhs = match s.op {
                Op::Add => lhs.checked_add(rhs),
                Op::Sub => lhs.checked_sub(rhs),
            }
            .ok_or(Error::Overflow)?;
        }
        Ok(out)
    }

    /// The matrix `M` with `evaluate(x) = x·M`; row `r` is the image of the unit vector `e_r`.
    pub fn to_matrix(&self) -> Result<TransformMatrix> {
        self.to_matrix_with(Strategy::default())
    }

    pub fn to_matrix_with(&self, strategy: Strategy) -> Result<TransformMatrix> {
        let v = self.width;
        let rows = strategy.map_indices(v, |r| {
            let mut unit = vec![0; v];
            unit[r] = 1;
            self.evaluate(&unit)
        });
        let mut entries = Vec::with_capacity(v * v);
        for row in rows {
            entries.extend(row?);
        }
        Ok(TransformMatrix::from_entries(v, entries, self.kind))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let syntax = |line: usize, message: String| Error::Syntax { line, message };

        let (lineno, header) = lines
            .next()
            .ok_or_else(|| syntax(1, "missing `slp v=<v> kind=<kind>` header".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let (width, kind) = match tokens.as_slice() {
            ["slp", v, k] => {
                let width = v
                    .strip_prefix("v=")
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or_else(|| syntax(lineno, format!("bad width `{v}`")))?;
                let kind = k
                    .strip_prefix("kind=")
                    .ok_or_else(|| syntax(lineno, format!("bad kind `{k}`")))?
                    .parse::<Kind>()
                    .map_err(|e| syntax(lineno, e.to_string()))?;
                (width, kind)
            }
            _ => return Err(syntax(lineno, "expected `slp v=<v> kind=<kind>`".into())),
        };

        let mut statements = Vec::new();
        for (lineno, line) in lines {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let (op, t, s) = match tokens.as_slice() {
                ["add", t, s] => (Op::Add, t, s),
                ["sub", t, s] => (Op::Sub, t, s),
                _ => return Err(syntax(lineno, format!("malformed statement `{line}`"))),
            };
            let id = |tok: &str| {
                tok.parse::<usize>()
                    .map_err(|_| syntax(lineno, format!("bad element id `{tok}`")))
            };
            statements.push(Statement { op, target: id(t)?, source: id(s)? });
        }
        Slp::new(width, statements, kind)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("slp v={} kind={}\n", self.width, self.kind);
        for s in &self.statements {
            writeln!(out, "{s}").unwrap();
        }
        out
    }
}
