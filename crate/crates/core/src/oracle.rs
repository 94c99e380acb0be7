//! Dense ζ and μ matrices used as ground truth for emitted programs.

use crate::error::{Error, Result};
use crate::par::Strategy;
use crate::poset::{ElemId, Poset};
use crate::slp::{Kind, Slp, Value};

/// Exact `v × v` integer matrix, row-major. Vectors act on the left: `g = f·M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformMatrix {
    size: usize,
    entries: Vec<Value>,
    kind: Kind,
}

impl TransformMatrix {
    pub(crate) fn from_entries(size: usize, entries: Vec<Value>, kind: Kind) -> Self {
        debug_assert_eq!(entries.len(), size * size);
        TransformMatrix { size, entries, kind }
    }

    pub fn identity(size: usize) -> Self {
        let mut entries = vec![0; size * size];
        for i in 0..size {
            entries[i * size + i] = 1;
        }
        TransformMatrix { size, entries, kind: Kind::Unknown }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> Value {
        self.entries[r * self.size + c]
    }

    /// Row vector times matrix.
    pub fn apply(&self, input: &[Value]) -> Result<Vec<Value>> {
        if input.len() != self.size {
            return Err(Error::WidthMismatch { got: input.len(), want: self.size });
        }
        let mut out = vec![0 as Value; self.size];
        for (r, &f) in input.iter().enumerate() {
            if f == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let term = f.checked_mul(self.get(r, c)).ok_or(Error::Overflow)?;
                *o = o.checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &TransformMatrix) -> Result<TransformMatrix> {
        if rhs.size != self.size {
            return Err(Error::WidthMismatch { got: rhs.size, want: self.size });
        }
        let n = self.size;
        let mut entries = vec![0 as Value; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    let term = a.checked_mul(rhs.get(k, c)).ok_or(Error::Overflow)?;
                    let slot = &mut entries[r * n + c];
                    *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(TransformMatrix { size: n, entries, kind: Kind::Unknown })
    }

    /// First entry `(r, c)` where `self` and `other` differ, scanning row-major.
    pub fn first_difference(&self, other: &TransformMatrix) -> Option<(usize, usize)> {
        assert_eq!(self.size, other.size);
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.size, k % self.size))
    }
}

/// `ζ[x][y] = 1` iff `x ≤ y`.
pub fn zeta_matrix(poset: &Poset) -> TransformMatrix {
    let v = poset.len();
    let mut entries = vec![0; v * v];
    for x in 0..v {
        for y in poset.up_set(x).iter() {
            entries[x * v + y] = 1;
        }
    }
    TransformMatrix { size: v, entries, kind: Kind::Zeta }
}

/// `μ = ζ⁻¹` by back-substitution along the linear extension:
/// `μ(x, x) = 1` and `μ(x, y) = −Σ_{x ≤ z < y} μ(x, z)`.
pub fn mobius_matrix(poset: &Poset) -> TransformMatrix {
    let v = poset.len();
    let order = poset.linear_extension();
    let mut entries = vec![0 as Value; v * v];
    for x in 0..v {
        entries[x * v + x] = 1;
        for &y in order {
            if y == x || !poset.leq(x, y) {
                continue;
            }
            let sum: Value = poset
                .down_set(y)
                .iter()
                .filter(|&z| z != y && poset.leq(x, z))
                .map(|z| entries[x * v + z])
                .sum();
            entries[x * v + y] = -sum;
        }
    }
    TransformMatrix { size: v, entries, kind: Kind::Moebius }
}

pub fn matrix_for(poset: &Poset, kind: Kind) -> TransformMatrix {
    match kind {
        Kind::Moebius => mobius_matrix(poset),
        Kind::Zeta | Kind::Unknown => zeta_matrix(poset),
    }
}

/// Mismatching entry between a program's matrix and the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Discrepancy {
    pub row: ElemId,
    pub col: ElemId,
    pub got: Value,
    pub want: Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch(Discrepancy),
}

impl Verdict {
    pub fn is_match(&self) -> bool {
        matches!(self, Verdict::Match)
    }

    pub fn discrepancy(&self) -> Option<Discrepancy> {
        match self {
            Verdict::Match => None,
            Verdict::Mismatch(d) => Some(*d),
        }
    }
}

/// Compares the full matrix of `program` against ζ or μ of `poset`.
pub fn verify_slp(poset: &Poset, program: &Slp, kind: Kind) -> Result<Verdict> {
    verify_slp_with(poset, program, kind, Strategy::default())
}

pub fn verify_slp_with(
    poset: &Poset,
    program: &Slp,
    kind: Kind,
    strategy: Strategy,
) -> Result<Verdict> {
    if program.width() != poset.len() {
        return Err(Error::WidthMismatch { got: program.width(), want: poset.len() });
    }
    let got = program.to_matrix_with(strategy)?;
    let want = matrix_for(poset, kind);
    Ok(match got.first_difference(&want) {
        None => Verdict::Match,
        Some((row, col)) => Verdict::Mismatch(Discrepancy {
            row,
            col,
            got: got.get(row, col),
            want: want.get(row, col),
        }),
    })
}
