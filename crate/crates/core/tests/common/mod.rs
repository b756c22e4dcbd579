#![allow(dead_code)]

use coxart_core::{ArtinLetter, ArtinWord, Coxeter, CoxeterGraph, Sign, SimpleWord, Vertex, VertexSubset};
use proptest::prelude::*;

pub const A3: &str = "vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 2\n";
pub const DIHEDRAL5: &str = "vertices: i j\nedge: i j 5\n";
pub const AFFINE: &str = "vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 3\n";

pub fn cx(text: &str) -> Coxeter {
    Coxeter::new(CoxeterGraph::parse(text).unwrap())
}

pub fn a3() -> Coxeter {
    cx(A3)
}

pub fn artin_word(n: usize, max_len: usize) -> impl Strategy<Value = ArtinWord> {
    prop::collection::vec((0..n as u8, any::<bool>()), 0..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|(i, plus)| ArtinLetter::new(Vertex(i), if plus { Sign::Plus } else { Sign::Minus }))
            .collect()
    })
}

pub fn positive_word(n: usize, max_len: usize) -> impl Strategy<Value = ArtinWord> {
    simple_word(n, max_len).prop_map(|w| w.lift())
}

pub fn simple_word(n: usize, max_len: usize) -> impl Strategy<Value = SimpleWord> {
    prop::collection::vec(0..n as u8, 0..=max_len).prop_map(|v| v.into_iter().map(Vertex).collect())
}

pub fn subset(n: usize) -> impl Strategy<Value = VertexSubset> {
    (0..1u64 << n).prop_map(VertexSubset::from_bits)
}

/// Restricts a word to the letters of `s`.
pub fn restrict(w: &ArtinWord, s: VertexSubset) -> ArtinWord {
    w.iter().copied().filter(|l| s.contains(l.vertex)).collect()
}
