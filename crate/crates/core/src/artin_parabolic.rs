//! Positive lifts `κ`, colored words, and intersections
//! `κ(w)·A_Y·κ(w)⁻¹ ∩ A_X` of parabolic subgroups of the Artin group.
//!
//! Set equalities in `A_I` cannot be checked directly. A certificate instead
//! carries the data of the answer, and [`verify_certificate`] checks every
//! part that can be checked: the Coxeter shadow, and transport of each
//! paired generator through `π*`.

use std::collections::BTreeMap;

use crate::cosets::{coxeter_parabolic_intersection, double_decompose};
use crate::coxeter::{CoxElement, Coxeter};
use crate::error::{Error, Result};
use crate::presentation::{Vertex, VertexSubset};
use crate::retraction::retract;
use crate::word::{ArtinLetter, ArtinWord, Sign};

/// `κ(source)`: the positive lift of the canonical reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaLift {
    pub source: CoxElement,
    pub word: ArtinWord,
}

pub fn kappa(x: &CoxElement) -> KappaLift {
    KappaLift {
        source: x.clone(),
        word: x.word().lift(),
    }
}

/// True iff `θ(ω) = 1` in `W_I`.
pub fn is_colored(cx: &Coxeter, omega: &ArtinWord) -> Result<bool> {
    Ok(cx.canonicalize(&omega.theta_star())?.is_identity())
}

/// Data for `κ(w)·A_Y·κ(w)⁻¹ ∩ A_X = κ(w1)·A_{X1}·κ(w1)⁻¹` and the mirror
/// statement `κ(w)⁻¹·A_X·κ(w) ∩ A_Y = κ(w2p)⁻¹·A_{Y1}·κ(w2p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinIntersectionCertificate {
    pub x: VertexSubset,
    pub y: VertexSubset,
    pub w: CoxElement,
    pub w1_lift: KappaLift,
    pub x1: VertexSubset,
    pub y1: VertexSubset,
    /// `Y1 → X1`.
    pub pairing: BTreeMap<Vertex, Vertex>,
    pub core: CoxElement,
    pub y_tail_lift: KappaLift,
}

pub fn intersect_parabolic_kappa(
    cx: &Coxeter,
    x: VertexSubset,
    y: VertexSubset,
    w: &CoxElement,
) -> Result<ArtinIntersectionCertificate> {
    let dec = double_decompose(cx, w, x, y)?;
    let data = coxeter_parabolic_intersection(cx, x, y, &dec.w2)?;
    Ok(ArtinIntersectionCertificate {
        x,
        y,
        w: w.clone(),
        w1_lift: kappa(&dec.w1),
        x1: data.x1,
        y1: data.y1,
        pairing: data.pairing,
        core: dec.w2,
        y_tail_lift: kappa(&dec.w2p),
    })
}

fn conjugated_letter(outer: &ArtinWord, v: Vertex) -> ArtinWord {
    let mut word = outer.clone();
    word.0.push(ArtinLetter::new(v, Sign::Plus));
    word.0.extend(outer.invert().0);
    word
}

/// For `j ∈ Y1` returns `i = pairing(j)` after checking
/// `π*_X(κ(w2)·σ_j·κ(w2)⁻¹) = σ_i`.
pub fn generator_transport(cx: &Coxeter, cert: &ArtinIntersectionCertificate, j: Vertex) -> Result<Vertex> {
    let g = cx.graph();
    let &i = cert.pairing.get(&j).ok_or_else(|| {
        Error::PreconditionViolated(format!("`{}` is not in Y1", g.name(j)))
    })?;
    let word = conjugated_letter(&kappa(&cert.core).word, j);
    let got = retract(cx, &word, cert.x)?;
    if got.0 != [ArtinLetter::new(i, Sign::Plus)] {
        return Err(Error::AssertionFailure(format!(
            "transport of `{}` retracts to `{}`, expected `{}`",
            g.name(j),
            got.display(g),
            g.name(i)
        )));
    }
    Ok(i)
}

/// The mirror direction: for `i ∈ X1`, `π*_Y(κ(w2)⁻¹·σ_i·κ(w2))` is the
/// single letter paired with `i`.
pub fn mirror_transport(cx: &Coxeter, cert: &ArtinIntersectionCertificate, i: Vertex) -> Result<Vertex> {
    let g = cx.graph();
    let j = cert
        .pairing
        .iter()
        .find_map(|(&j, &p)| (p == i).then_some(j))
        .ok_or_else(|| Error::PreconditionViolated(format!("`{}` is not in X1", g.name(i))))?;
    let word = conjugated_letter(&kappa(&cert.core).word.invert(), i);
    let got = retract(cx, &word, cert.y)?;
    if got.0 != [ArtinLetter::new(j, Sign::Plus)] {
        return Err(Error::AssertionFailure(format!(
            "mirror transport of `{}` retracts to `{}`, expected `{}`",
            g.name(i),
            got.display(g),
            g.name(j)
        )));
    }
    Ok(j)
}

/// Checks the Coxeter shadow, the factorization `w = w1·core·w2p` with
/// additive lengths, and transport of every paired generator.
pub fn verify_certificate(cx: &Coxeter, cert: &ArtinIntersectionCertificate) -> Result<()> {
    let shadow = coxeter_parabolic_intersection(cx, cert.x, cert.y, &cert.w)?;
    if shadow.w1 != cert.w1_lift.source || shadow.x1 != cert.x1 || shadow.y1 != cert.y1 {
        return Err(Error::AssertionFailure(
            "certificate disagrees with the Coxeter intersection".into(),
        ));
    }
    if !cert.x1.is_subset(cert.x) || !cert.y1.is_subset(cert.y) {
        return Err(Error::AssertionFailure("X1 ⊄ X or Y1 ⊄ Y".into()));
    }
    let whole = cert
        .w1_lift
        .word
        .concat(&kappa(&cert.core).word)
        .concat(&cert.y_tail_lift.word);
    if cx.canonicalize(&whole.theta_star())? != cert.w || whole.len() != cert.w.length() {
        return Err(Error::AssertionFailure(
            "κ(w1)·κ(core)·κ(w2p) is not a reduced lift of w".into(),
        ));
    }
    for &j in cert.pairing.keys() {
        generator_transport(cx, cert, j)?;
    }
    for &i in cert.pairing.values() {
        mirror_transport(cx, cert, i)?;
    }
    Ok(())
}

/// One reduction step towards the colored form `Y ⊆ X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReduction {
    /// Old `Y`, the `X` of the reduced instance.
    pub new_x: VertexSubset,
    /// `Y1 ⊆ Y`, the `Y` of the reduced instance.
    pub new_y: VertexSubset,
    /// `κ(w1)⁻¹·ω·κ(w2p)⁻¹`, whose image is `(X,Y)`-reduced.
    pub normalized: ArtinWord,
    /// `ω₂ = κ(θ(normalized))`.
    pub omega2: ArtinWord,
    pub beta: ArtinWord,
}

pub fn conjecture_reduce(
    cx: &Coxeter,
    x: VertexSubset,
    y: VertexSubset,
    omega: &ArtinWord,
) -> Result<ConjectureReduction> {
    let w = cx.canonicalize(&omega.theta_star())?;
    let dec = double_decompose(cx, &w, x, y)?;
    let normalized = kappa(&dec.w1)
        .word
        .invert()
        .concat(omega)
        .concat(&kappa(&dec.w2p).word.invert());
    let omega2 = kappa(&dec.w2).word;
    let retracted = retract(cx, &normalized.concat(&omega2.invert()), x)?;
    let beta = normalized.invert().concat(&retracted).concat(&omega2).free_reduce();
    let data = coxeter_parabolic_intersection(cx, x, y, &dec.w2)?;
    Ok(ConjectureReduction {
        new_x: y,
        new_y: data.y1,
        normalized,
        omega2,
        beta,
    })
}
