//! Reflection sequences `R(w)`, the odd-multiplicity set `N(w)`, and their
//! restriction to a standard parabolic subgroup.

use std::collections::{BTreeMap, BTreeSet};

use crate::coxeter::{CoxElement, Coxeter};
use crate::error::{Error, Result};
use crate::presentation::{Vertex, VertexSubset};
use crate::word::SimpleWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionEntry {
    /// 1-based position in the source word.
    pub position: usize,
    /// `s_{i1} … s_{ij} … s_{i1}`, of length `2j - 1`.
    pub word: SimpleWord,
    pub element: CoxElement,
    /// Membership of `element` in `W_X`, when a mask was requested.
    pub in_x: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReflectionSequence {
    pub entries: Vec<ReflectionEntry>,
}

impl ReflectionSequence {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &CoxElement> {
        self.entries.iter().map(|e| &e.element)
    }

    /// The entries flagged as lying in `W_X`, original positions kept.
    pub fn kept(&self) -> impl Iterator<Item = &ReflectionEntry> {
        self.entries.iter().filter(|e| e.in_x == Some(true))
    }

    pub fn kept_positions(&self) -> Vec<usize> {
        self.kept().map(|e| e.position).collect()
    }
}

/// The set of elements occurring an odd number of times in `R(w)`.
pub type NSet = BTreeSet<CoxElement>;

/// `r_j(w)` for 1-based `j`.
pub fn reflection_word(w: &[Vertex], j: usize) -> SimpleWord {
    let mut out = w[..j].to_vec();
    out.extend(w[..j - 1].iter().rev());
    SimpleWord(out)
}

pub fn reflection_sequence(cx: &Coxeter, w: &[Vertex]) -> Result<ReflectionSequence> {
    let entries = (1..=w.len())
        .map(|j| {
            let word = reflection_word(w, j);
            let element = cx.canonicalize(&word)?;
            Ok(ReflectionEntry {
                position: j,
                word,
                element,
                in_x: None,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ReflectionSequence { entries })
}

pub fn n_set(cx: &Coxeter, w: &[Vertex]) -> Result<NSet> {
    let mut counts: BTreeMap<CoxElement, usize> = BTreeMap::new();
    for e in reflection_sequence(cx, w)?.entries {
        *counts.entry(e.element).or_default() += 1;
    }
    Ok(counts
        .into_iter()
        .filter(|(_, c)| c % 2 == 1)
        .map(|(x, _)| x)
        .collect())
}

/// `R(w)` with every entry flagged by membership in `W_X`; the flagged
/// subsequence is `R̂_X(w)`.
pub fn masked_sequence(cx: &Coxeter, w: &[Vertex], subset: VertexSubset) -> Result<ReflectionSequence> {
    let mut seq = reflection_sequence(cx, w)?;
    for e in &mut seq.entries {
        e.in_x = Some(e.element.is_in_parabolic(subset));
    }
    Ok(seq)
}

fn alternating(i: Vertex, j: Vertex, m: usize) -> Vec<Vertex> {
    (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect()
}

/// Checks `r_n(s_i s_j s_i …) = r_{m-n+1}(s_j s_i s_j …)` for all `n ≤ m(i, j)`.
pub fn dihedral_palindrome_check(cx: &Coxeter, i: Vertex, j: Vertex) -> Result<bool> {
    let g = cx.graph();
    let m = match g.label(i, j).finite() {
        Some(m) if i != j => m as usize,
        _ => return Err(Error::NotAnEdge(g.name(i).into(), g.name(j).into())),
    };
    let ij = alternating(i, j, m);
    let ji = alternating(j, i, m);
    for n in 1..=m {
        let left = cx.canonicalize(&reflection_word(&ij, n))?;
        let right = cx.canonicalize(&reflection_word(&ji, m - n + 1))?;
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that `R(ww')` is `R(w)` followed by `w·R(w')·w⁻¹`, elementwise.
pub fn concat_decomposition_check(cx: &Coxeter, w: &[Vertex], w2: &[Vertex]) -> Result<bool> {
    let whole = reflection_sequence(cx, &[w, w2].concat())?;
    let head = reflection_sequence(cx, w)?;
    let tail = reflection_sequence(cx, w2)?;
    let we = cx.canonicalize(w)?;
    let mut expected: Vec<CoxElement> = head.elements().cloned().collect();
    for r in tail.elements() {
        expected.push(cx.conjugate(&we, r)?);
    }
    Ok(whole.elements().eq(expected.iter()))
}
