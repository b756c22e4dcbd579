//! Coxeter and Artin–Tits groups over labelled graphs: the Coxeter word
//! problem, reflection sequences, double-coset decompositions, the
//! retraction of Artin words onto standard parabolic subgroups, and
//! intersections of parabolic subgroups conjugated by lifted Coxeter
//! elements.

pub mod artin_parabolic;
pub mod cosets;
pub mod coxeter;
pub mod error;
pub mod oracle;
pub mod presentation;
pub mod reflections;
pub mod retraction;
pub mod verify;
pub mod word;

pub use coxeter::{CoxElement, Coxeter};
pub use error::{Error, Result};
pub use presentation::{CoxeterGraph, Label, Vertex, VertexSubset};
pub use word::{ArtinLetter, ArtinWord, ElementaryMove, Sign, SimpleWord};
