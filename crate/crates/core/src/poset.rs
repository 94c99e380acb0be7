//! Finite posets given by their Hasse diagram.
//!
//! A [`Poset`] is built from element names and cover edges. The order
//! relation is derived once as a dense bit matrix; inputs whose covers are
//! not a transitive reduction are rejected instead of being reduced, so the
//! edge count `e` always matches what the caller wrote.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::bits::{BitMatrix, BitRow};
use crate::error::{Error, Result};

/// Element index into a [`Poset`].
pub type ElemId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, ElemId>,
    covers: Vec<(ElemId, ElemId)>,
    /// `up[x]` holds every `y` with `x ≤ y`.
    up: BitMatrix,
    /// `down[y]` holds every `x` with `x ≤ y`.
    down: BitMatrix,
    cover_matrix: BitMatrix,
    upper_edges: Vec<Vec<usize>>,
    lower_edges: Vec<Vec<usize>>,
    height: Vec<usize>,
    linear_extension: Vec<ElemId>,
}

impl Poset {
    /// Builds a poset from names and cover edges `(x, y)` meaning `x ⋖ y`.
    pub fn new(names: Vec<String>, covers: Vec<(ElemId, ElemId)>) -> Result<Self> {
        let v = names.len();
        let mut index = HashMap::with_capacity(v);
        for (id, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains('#') || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), id).is_some() {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }

        let mut cover_matrix = BitMatrix::new(v);
        let mut upper_edges = vec![Vec::new(); v];
        let mut lower_edges = vec![Vec::new(); v];
        for (k, &(x, y)) in covers.iter().enumerate() {
            for id in [x, y] {
                if id >= v {
                    return Err(Error::IdOutOfRange { id, size: v });
                }
            }
            if x == y {
                return Err(Error::SelfLoop(names[x].clone(), names[y].clone()));
            }
            if cover_matrix.get(x, y) {
                return Err(Error::DuplicateCover(names[x].clone(), names[y].clone()));
            }
            cover_matrix.set(x, y);
            upper_edges[x].push(k);
            lower_edges[y].push(k);
        }

        // Kahn's algorithm; ties resolved by ascending id.
        let mut indegree: Vec<usize> = lower_edges.iter().map(Vec::len).collect();
        let mut ready: std::collections::BinaryHeap<std::cmp::Reverse<ElemId>> = (0..v)
            .filter(|&x| indegree[x] == 0)
            .map(std::cmp::Reverse)
            .collect();
        let mut topo = Vec::with_capacity(v);
        while let Some(std::cmp::Reverse(x)) = ready.pop() {
            topo.push(x);
            for &k in &upper_edges[x] {
                let y = covers[k].1;
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    ready.push(std::cmp::Reverse(y));
                }
            }
        }
        if topo.len() < v {
            let stuck = (0..v).find(|&x| indegree[x] > 0).unwrap();
            return Err(Error::Cycle(names[stuck].clone()));
        }

        let mut up = BitMatrix::new(v);
        for &x in topo.iter().rev() {
            let mut row = BitRow::new(v);
            row.insert(x);
            for &k in &upper_edges[x] {
                row.union_with(up.row(covers[k].1));
            }
            *up.row_mut(x) = row;
        }

        // A cover (x, y) is redundant when y is reachable from another upper cover of x.
        for x in 0..v {
            for &k in &upper_edges[x] {
                let y = covers[k].1;
                let implied = upper_edges[x]
                    .iter()
                    .map(|&j| covers[j].1)
                    .any(|z| z != y && up.get(z, y));
                if implied {
                    return Err(Error::NotTransitivelyReduced(
                        names[x].clone(),
                        names[y].clone(),
                    ));
                }
            }
        }

        let mut height = vec![0; v];
        for &y in &topo {
            height[y] = lower_edges[y]
                .iter()
                .map(|&k| height[covers[k].0] + 1)
                .max()
                .unwrap_or(0);
        }
        let mut linear_extension: Vec<ElemId> = (0..v).collect();
        linear_extension.sort_by_key(|&x| (height[x], x));

        let down = up.transpose();
        Ok(Poset {
            names,
            index,
            covers,
            up,
            down,
            cover_matrix,
            upper_edges,
            lower_edges,
            height,
            linear_extension,
        })
    }

    /// Parses the line-oriented poset format (`elem NAME`, `cover A B`, `#` comments).
    ///
    /// Element ids follow first appearance; `cover` lines introduce unseen
    /// names implicitly, while a repeated `elem` declaration is an error.
    pub fn parse(text: &str) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, ElemId> = HashMap::new();
        let mut covers = Vec::new();
        fn intern(
            name: &str,
            names: &mut Vec<String>,
            index: &mut HashMap<String, ElemId>,
        ) -> ElemId {
            *index.entry(name.to_string()).or_insert_with(|| {
                names.push(name.to_string());
                names.len() - 1
            })
        }

        for (lineno, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let syntax = |message: &str| Error::Syntax {
                line: lineno + 1,
                message: message.to_string(),
            };
            match tokens.as_slice() {
                [] => {}
                ["elem", name] => {
                    if index.contains_key(*name) {
                        return Err(Error::DuplicateElement(name.to_string()));
                    }
                    intern(name, &mut names, &mut index);
                }
                ["cover", a, b] => {
                    let x = intern(a, &mut names, &mut index);
                    let y = intern(b, &mut names, &mut index);
                    covers.push((x, y));
                }
                ["elem", ..] => return Err(syntax("expected `elem NAME`")),
                ["cover", ..] => return Err(syntax("expected `cover A B`")),
                [other, ..] => return Err(syntax(&format!("unknown directive `{other}`"))),
            }
        }
        Poset::new(names, covers)
    }

    /// Canonical text form: all `elem` lines in id order, then covers in edge order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            writeln!(out, "elem {name}").unwrap();
        }
        for &(x, y) in &self.covers {
            writeln!(out, "cover {} {}", self.names[x], self.names[y]).unwrap();
        }
        out
    }

    /// Order dual: every cover reversed, edge indices preserved.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        Poset::new(self.names.clone(), covers).expect("dual of a valid poset is valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.covers.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: ElemId) -> &str {
        &self.names[x]
    }

    pub fn id_of(&self, name: &str) -> Option<ElemId> {
        self.index.get(name).copied()
    }

    pub fn covers(&self) -> &[(ElemId, ElemId)] {
        &self.covers
    }

    #[inline]
    pub fn leq(&self, x: ElemId, y: ElemId) -> bool {
        self.up.get(x, y)
    }

    #[inline]
    pub fn is_cover(&self, x: ElemId, y: ElemId) -> bool {
        self.cover_matrix.get(x, y)
    }

    /// Index of the cover edge `x ⋖ y`, if there is one.
    pub fn edge_index(&self, x: ElemId, y: ElemId) -> Option<usize> {
        if !self.is_cover(x, y) {
            return None;
        }
        self.upper_edges[x]
            .iter()
            .copied()
            .find(|&k| self.covers[k].1 == y)
    }

    /// Elements above or equal to `x`.
    pub fn up_set(&self, x: ElemId) -> &BitRow {
        self.up.row(x)
    }

    /// Elements below or equal to `y`.
    pub fn down_set(&self, y: ElemId) -> &BitRow {
        self.down.row(y)
    }

    /// Indices of cover edges leaving `x` upward.
    pub fn upper_edges(&self, x: ElemId) -> &[usize] {
        &self.upper_edges[x]
    }

    /// Indices of cover edges entering `y` from below.
    pub fn lower_edges(&self, y: ElemId) -> &[usize] {
        &self.lower_edges[y]
    }

    pub fn upper_covers(&self, x: ElemId) -> impl Iterator<Item = ElemId> + '_ {
        self.upper_edges[x].iter().map(|&k| self.covers[k].1)
    }

    pub fn lower_covers(&self, y: ElemId) -> impl Iterator<Item = ElemId> + '_ {
        self.lower_edges[y].iter().map(|&k| self.covers[k].0)
    }

    /// Length of the longest chain from a minimal element to `x`.
    pub fn height(&self, x: ElemId) -> usize {
        self.height[x]
    }

    /// Elements sorted by `(height, id)`.
    pub fn linear_extension(&self) -> &[ElemId] {
        &self.linear_extension
    }

    /// Elements covering exactly one element, ascending.
    pub fn join_irreducibles(&self) -> Vec<ElemId> {
        (0..self.len())
            .filter(|&x| self.lower_edges[x].len() == 1)
            .collect()
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}
