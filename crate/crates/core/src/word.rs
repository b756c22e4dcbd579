//! Words on `S_I` and on `Σ_I ∪ Σ_I⁻¹`, the projection `θ*`, free reduction
//! and the elementary moves relating equivalent Artin words.
//!
//! Text syntax is whitespace separated: a simple word is `a b a`, an Artin
//! word is `a b^-1 c`, and the lone token `e` is the empty word.

use std::fmt;
use std::ops::{Deref, Mul, Neg};

use rand::Rng;

use crate::error::{Error, Result};
use crate::presentation::{CoxeterGraph, Vertex, VertexSubset};

/// A word on the Coxeter generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SimpleWord(pub Vec<Vertex>);

impl SimpleWord {
    pub fn empty() -> Self {
        SimpleWord(Vec::new())
    }

    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "e" {
            return Ok(Self::empty());
        }
        text.split_whitespace()
            .map(|tok| {
                graph.vertex(tok).map_err(|_| {
                    if tok.contains('^') {
                        Error::BadWord(tok.to_string())
                    } else {
                        Error::UnknownVertex(tok.to_string())
                    }
                })
            })
            .collect::<Result<_>>()
            .map(SimpleWord)
    }

    pub fn reverse(&self) -> Self {
        SimpleWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SimpleWord(v)
    }

    pub fn is_on(&self, subset: VertexSubset) -> bool {
        self.0.iter().all(|&v| subset.contains(v))
    }

    /// The positive Artin word with the same letters.
    pub fn lift(&self) -> ArtinWord {
        ArtinWord(self.0.iter().map(|&v| ArtinLetter::new(v, Sign::Plus)).collect())
    }

    pub fn display<'a>(&'a self, graph: &'a CoxeterGraph) -> impl fmt::Display + 'a {
        DisplaySimple(graph, &self.0)
    }
}

impl Deref for SimpleWord {
    type Target = [Vertex];
    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

impl FromIterator<Vertex> for SimpleWord {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        SimpleWord(iter.into_iter().collect())
    }
}

struct DisplaySimple<'a>(&'a CoxeterGraph, &'a [Vertex]);

impl fmt::Display for DisplaySimple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1.is_empty() {
            return f.write_str("e");
        }
        for (k, &v) in self.1.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.0.name(v))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// `σ_v^{sign}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArtinLetter {
    pub vertex: Vertex,
    pub sign: Sign,
}

impl ArtinLetter {
    pub fn new(vertex: Vertex, sign: Sign) -> Self {
        ArtinLetter { vertex, sign }
    }

    pub fn inverse(self) -> Self {
        ArtinLetter::new(self.vertex, -self.sign)
    }
}

/// A word on `Σ_I ∪ Σ_I⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ArtinWord(pub Vec<ArtinLetter>);

impl ArtinWord {
    pub fn empty() -> Self {
        ArtinWord(Vec::new())
    }

    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "e" {
            return Ok(Self::empty());
        }
        text.split_whitespace()
            .map(|tok| {
                let (name, sign) = match tok.split_once('^') {
                    None => (tok, Sign::Plus),
                    Some((name, "1" | "+1")) => (name, Sign::Plus),
                    Some((name, "-1")) => (name, Sign::Minus),
                    Some(_) => return Err(Error::BadWord(tok.to_string())),
                };
                Ok(ArtinLetter::new(graph.vertex(name)?, sign))
            })
            .collect::<Result<_>>()
            .map(ArtinWord)
    }

    /// `θ*`: erase the signs.
    pub fn theta_star(&self) -> SimpleWord {
        self.0.iter().map(|l| l.vertex).collect()
    }

    /// Formal inverse: reversed, every sign flipped.
    pub fn invert(&self) -> Self {
        ArtinWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Deletes cancelling pairs `σ^ε σ^-ε` until none is left.
    ///
    /// A single stack pass deletes exactly what repeated leftmost deletion
    /// would, so the result is the free normal form.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<ArtinLetter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        ArtinWord(out)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| l.sign == Sign::Plus)
    }

    pub fn is_on(&self, subset: VertexSubset) -> bool {
        self.0.iter().all(|l| subset.contains(l.vertex))
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ArtinWord(v)
    }

    pub fn display<'a>(&'a self, graph: &'a CoxeterGraph) -> impl fmt::Display + 'a {
        DisplayArtin(graph, &self.0)
    }
}

impl Deref for ArtinWord {
    type Target = [ArtinLetter];
    fn deref(&self) -> &[ArtinLetter] {
        &self.0
    }
}

impl Mul for &ArtinWord {
    type Output = ArtinWord;
    fn mul(self, rhs: &ArtinWord) -> ArtinWord {
        self.concat(rhs)
    }
}

impl FromIterator<ArtinLetter> for ArtinWord {
    fn from_iter<T: IntoIterator<Item = ArtinLetter>>(iter: T) -> Self {
        ArtinWord(iter.into_iter().collect())
    }
}

struct DisplayArtin<'a>(&'a CoxeterGraph, &'a [ArtinLetter]);

impl fmt::Display for DisplayArtin<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.1.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.0.name(l.vertex))?;
            if l.sign == Sign::Minus {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// One application of a defining relation of the Artin group.
///
/// Positions are 1-based. `FreeInsert` puts `σ_v^ε σ_v^-ε` so that its first
/// letter lands at `position`; `FreeDelete` removes the cancelling pair that
/// starts at `position`; `Braid` rewrites the alternating factor of `m(i, j)`
/// equally signed letters starting at `position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementaryMove {
    FreeInsert {
        position: usize,
        vertex: Vertex,
        sign: Sign,
    },
    FreeDelete {
        position: usize,
    },
    Braid {
        position: usize,
        edge: (Vertex, Vertex),
    },
}

fn braid_site(graph: &CoxeterGraph, w: &[ArtinLetter], start: usize) -> Option<(Vertex, Vertex, usize)> {
    let first = *w.get(start)?;
    let second = *w.get(start + 1)?;
    if first.vertex == second.vertex || first.sign != second.sign {
        return None;
    }
    let m = graph.label(first.vertex, second.vertex).finite()? as usize;
    let factor = w.get(start..start + m)?;
    let alternates = factor.iter().enumerate().all(|(k, l)| {
        l.sign == first.sign && l.vertex == if k % 2 == 0 { first.vertex } else { second.vertex }
    });
    alternates.then_some((first.vertex, second.vertex, m))
}

fn ordered(i: Vertex, j: Vertex) -> (Vertex, Vertex) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl ElementaryMove {
    pub fn position(&self) -> usize {
        match *self {
            ElementaryMove::FreeInsert { position, .. }
            | ElementaryMove::FreeDelete { position }
            | ElementaryMove::Braid { position, .. } => position,
        }
    }

    /// Applies the move, failing if it is not legal on `w`.
    pub fn apply(&self, graph: &CoxeterGraph, w: &ArtinWord) -> Result<ArtinWord> {
        let illegal = || Error::PreconditionViolated(format!("{self:?} is not legal here"));
        let mut out = w.0.clone();
        match *self {
            ElementaryMove::FreeInsert {
                position,
                vertex,
                sign,
            } => {
                if position == 0 || position > w.len() + 1 {
                    return Err(illegal());
                }
                let l = ArtinLetter::new(vertex, sign);
                out.splice(position - 1..position - 1, [l, l.inverse()]);
            }
            ElementaryMove::FreeDelete { position } => {
                if position == 0 || position + 1 > w.len() || w[position] != w[position - 1].inverse()
                {
                    return Err(illegal());
                }
                out.drain(position - 1..position + 1);
            }
            ElementaryMove::Braid { position, edge } => {
                let start = position.checked_sub(1).ok_or_else(illegal)?;
                let (i, j, m) = braid_site(graph, w, start).ok_or_else(illegal)?;
                if ordered(i, j) != ordered(edge.0, edge.1) {
                    return Err(illegal());
                }
                for (k, l) in out[start..start + m].iter_mut().enumerate() {
                    l.vertex = if k % 2 == 0 { j } else { i };
                }
            }
        }
        Ok(ArtinWord(out))
    }

    /// The move undoing `self`, given the word `before` it was applied to.
    pub fn inverse(&self, before: &ArtinWord) -> ElementaryMove {
        match *self {
            ElementaryMove::FreeInsert { position, .. } => ElementaryMove::FreeDelete { position },
            ElementaryMove::FreeDelete { position } => {
                let l = before[position - 1];
                ElementaryMove::FreeInsert {
                    position,
                    vertex: l.vertex,
                    sign: l.sign,
                }
            }
            braid @ ElementaryMove::Braid { .. } => braid,
        }
    }
}

/// Every legal elementary move on `w`, in a fixed order: insertions by
/// position, vertex and sign, then deletions, then braid sites.
pub fn legal_moves(graph: &CoxeterGraph, w: &ArtinWord) -> Vec<ElementaryMove> {
    let mut moves = Vec::with_capacity(2 * graph.len() * (w.len() + 1) + 2 * w.len());
    for position in 1..=w.len() + 1 {
        for vertex in graph.vertices() {
            for sign in [Sign::Plus, Sign::Minus] {
                moves.push(ElementaryMove::FreeInsert {
                    position,
                    vertex,
                    sign,
                });
            }
        }
    }
    moves.extend(non_insert_moves(graph, w));
    moves
}

/// The deletion and braid moves on `w` (never empty-word insertions).
pub fn non_insert_moves(graph: &CoxeterGraph, w: &ArtinWord) -> Vec<ElementaryMove> {
    let mut moves = Vec::new();
    for k in 1..w.len() {
        if w[k] == w[k - 1].inverse() {
            moves.push(ElementaryMove::FreeDelete { position: k });
        }
    }
    for start in 0..w.len() {
        if let Some((i, j, _)) = braid_site(graph, w, start) {
            moves.push(ElementaryMove::Braid {
                position: start + 1,
                edge: ordered(i, j),
            });
        }
    }
    moves
}

/// A uniformly chosen legal move and the word it produces.
pub fn random_move<R: Rng + ?Sized>(
    graph: &CoxeterGraph,
    w: &ArtinWord,
    rng: &mut R,
) -> (ElementaryMove, ArtinWord) {
    let moves = legal_moves(graph, w);
    let mv = moves[rng.gen_range(0..moves.len())];
    let out = mv.apply(graph, w).expect("enumerated moves are legal");
    (mv, out)
}

/// Whether `b` is obtained from `a` by exactly one elementary move.
pub fn one_move_apart(graph: &CoxeterGraph, a: &ArtinWord, b: &ArtinWord) -> bool {
    if a.len() + 2 == b.len() {
        return one_move_apart(graph, b, a);
    }
    if a.len() == b.len() + 2 {
        return non_insert_moves(graph, a).iter().any(|mv| {
            matches!(mv, ElementaryMove::FreeDelete { .. })
                && mv.apply(graph, a).as_ref() == Ok(b)
        });
    }
    if a.len() != b.len() {
        return false;
    }
    non_insert_moves(graph, a).iter().any(|mv| {
        matches!(mv, ElementaryMove::Braid { .. }) && mv.apply(graph, a).as_ref() == Ok(b)
    })
}
