//! The retraction `π*_{I,X}` of Artin words onto words over `Σ_X ∪ Σ_X⁻¹`.
//!
//! The main route is one pass over the word. It keeps the `(X,∅)`-reduced
//! part `w` of the current prefix image in `W_I`. At each letter `σ_i^ε` it
//! asks whether `w·s_i·w⁻¹` is a simple reflection `s_q` with `q ∈ X`. If so,
//! `σ_q^ε` is emitted and `w` is unchanged. Otherwise `w` becomes `w·s_i`.
//!
//! Two independent routes exist for auditing:
//! [`retract_star_via_reflections`] materializes `R̂_X(θ*(ω))` and recovers
//! the letters by iterated conjugation. [`retract_hat`] recomputes the coset
//! decomposition of every prefix and uses the two-branch sign rule.

use crate::cosets::{conjugates_into_sx, is_left_reduced, left_decompose};
use crate::coxeter::{CoxElement, Coxeter};
use crate::error::{Error, Result};
use crate::presentation::{Vertex, VertexSubset};
use crate::reflections::masked_sequence;
use crate::word::{ArtinLetter, ArtinWord, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Emitted { vertex: Vertex, sign: Sign },
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// 1-based position in the input word.
    pub position: usize,
    pub letter: ArtinLetter,
    pub decision: Decision,
    /// `(X,∅)`-reduced part of the prefix image after this letter.
    pub snapshot: CoxElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RetractionTrace {
    pub steps: Vec<TraceStep>,
}

impl RetractionTrace {
    pub fn emitted_positions(&self) -> Vec<usize> {
        self.steps
            .iter()
            .filter(|s| matches!(s.decision, Decision::Emitted { .. }))
            .map(|s| s.position)
            .collect()
    }

    /// The letters `t_1 … t_p` of `w_X`.
    pub fn t_letters(&self) -> Vec<Vertex> {
        self.steps
            .iter()
            .filter_map(|s| match s.decision {
                Decision::Emitted { vertex, .. } => Some(vertex),
                Decision::Skipped => None,
            })
            .collect()
    }

    /// The `(X,∅)`-reduced part of the whole image, or the identity.
    pub fn final_snapshot(&self) -> CoxElement {
        self.steps.last().map(|s| s.snapshot.clone()).unwrap_or_default()
    }
}

pub fn retract_star(cx: &Coxeter, omega: &ArtinWord, x: VertexSubset) -> Result<(ArtinWord, RetractionTrace)> {
    let mut current = CoxElement::identity();
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(omega.len());
    for (k, &letter) in omega.iter().enumerate() {
        let decision = match conjugates_into_sx(cx, &current, letter.vertex, x)? {
            Some(q) => {
                out.push(ArtinLetter::new(q, letter.sign));
                Decision::Emitted {
                    vertex: q,
                    sign: letter.sign,
                }
            }
            None => {
                current = cx.mul_right(&current, letter.vertex)?;
                Decision::Skipped
            }
        };
        steps.push(TraceStep {
            position: k + 1,
            letter,
            decision,
            snapshot: current.clone(),
        });
    }
    Ok((ArtinWord(out), RetractionTrace { steps }))
}

/// `π*_{I,X}(ω)` without the trace.
pub fn retract(cx: &Coxeter, omega: &ArtinWord, x: VertexSubset) -> Result<ArtinWord> {
    retract_star(cx, omega, x).map(|(w, _)| w)
}

/// `π*_{I,X}` through the reflection sequence: keep the entries of
/// `R(θ*(ω))` lying in `W_X`, then recover `t_n` from
/// `t_n = r_{j1} ⋯ r_{j(n-1)} · r_{jn} · r_{j(n-1)} ⋯ r_{j1}`.
pub fn retract_star_via_reflections(cx: &Coxeter, omega: &ArtinWord, x: VertexSubset) -> Result<ArtinWord> {
    let seq = masked_sequence(cx, &omega.theta_star(), x)?;
    let mut prefix = CoxElement::identity();
    let mut out = Vec::new();
    for entry in seq.kept() {
        let t = cx.conjugate(&prefix, &entry.element)?;
        let q = t
            .simple_letter()
            .filter(|&q| x.contains(q))
            .ok_or_else(|| {
                Error::AssertionFailure(format!(
                    "t_{} is not a generator of X",
                    out.len() + 1
                ))
            })?;
        out.push(ArtinLetter::new(q, omega[entry.position - 1].sign));
        prefix = cx.multiply(&prefix, &entry.element)?;
    }
    Ok(ArtinWord(out))
}

/// Runs the incremental route and checks it against the reflection route,
/// including emitted positions against the kept mask.
pub fn retract_star_audited(cx: &Coxeter, omega: &ArtinWord, x: VertexSubset) -> Result<(ArtinWord, RetractionTrace)> {
    let (word, trace) = retract_star(cx, omega, x)?;
    let via = retract_star_via_reflections(cx, omega, x)?;
    if via != word {
        return Err(Error::AssertionFailure(format!(
            "incremental retraction {:?} differs from reflection route {:?}",
            word.display(cx.graph()).to_string(),
            via.display(cx.graph()).to_string()
        )));
    }
    let kept = masked_sequence(cx, &omega.theta_star(), x)?.kept_positions();
    if kept != trace.emitted_positions() {
        return Err(Error::AssertionFailure(format!(
            "emitted positions {:?} differ from kept mask {:?}",
            trace.emitted_positions(),
            kept
        )));
    }
    Ok((word, trace))
}

/// The map `π̂_X`: for `ε_j = 1` conjugate `s_{i_j}` by `w_{j-1}`, for
/// `ε_j = -1` by `w_j`, where `w_j` is the `(X,∅)`-reduced part of the
/// image of the length-`j` prefix.
pub fn retract_hat(cx: &Coxeter, omega: &ArtinWord, x: VertexSubset) -> Result<ArtinWord> {
    let mut prefix = CoxElement::identity();
    let mut before = CoxElement::identity();
    let mut out = Vec::new();
    for &letter in omega.iter() {
        prefix = cx.mul_right(&prefix, letter.vertex)?;
        let after = left_decompose(cx, &prefix, x)?.w;
        let by = match letter.sign {
            Sign::Plus => &before,
            Sign::Minus => &after,
        };
        let t = cx.conjugate(by, &cx.generator(letter.vertex))?;
        if let Some(q) = t.simple_letter().filter(|&q| x.contains(q)) {
            out.push(ArtinLetter::new(q, letter.sign));
        }
        before = after;
    }
    Ok(ArtinWord(out))
}

/// Returns `(p, r)` with `p = θ(π(ω))` and `r = p⁻¹·θ(ω)`, after checking that
/// `r` is `(X,∅)`-reduced and `ℓ(θ(ω)) = ℓ(p) + ℓ(r)`.
pub fn theta_split_check(cx: &Coxeter, omega: &ArtinWord, x: VertexSubset) -> Result<(CoxElement, CoxElement)> {
    let whole = cx.canonicalize(&omega.theta_star())?;
    let p = cx.canonicalize(&retract(cx, omega, x)?.theta_star())?;
    let r = cx.multiply(&cx.inverse(&p)?, &whole)?;
    if !is_left_reduced(cx, &r, x)? {
        return Err(Error::AssertionFailure(
            "p⁻¹·θ(ω) is not (X,∅)-reduced".into(),
        ));
    }
    if whole.length() != p.length() + r.length() {
        return Err(Error::AssertionFailure(format!(
            "length {} is not {} + {}",
            whole.length(),
            p.length(),
            r.length()
        )));
    }
    Ok((p, r))
}

/// `π*_{Y, X∩Y}` computed inside the full subgraph `Γ_Y`, for `ω` on
/// `Σ_Y ∪ Σ_Y⁻¹`; the result is expressed back in the vertices of `Γ`.
pub fn retract_within(cx: &Coxeter, omega: &ArtinWord, y: VertexSubset, x: VertexSubset) -> Result<ArtinWord> {
    if !omega.is_on(y) {
        return Err(Error::PreconditionViolated(
            "word is not on the generators of Y".into(),
        ));
    }
    let (sub, back) = cx.graph().full_subgraph(y);
    let to_sub = |v: Vertex| Vertex(back.iter().position(|&b| b == v).expect("v in Y") as u8);
    let sub_word: ArtinWord = omega
        .iter()
        .map(|l| ArtinLetter::new(to_sub(l.vertex), l.sign))
        .collect();
    let sub_x = VertexSubset::from_vertices(x.intersection(y).iter().map(to_sub));
    let sub_cx = Coxeter::new(sub).with_max_orbit(cx.max_orbit());
    let got = retract(&sub_cx, &sub_word, sub_x)?;
    Ok(got
        .iter()
        .map(|l| ArtinLetter::new(back[l.vertex.index()], l.sign))
        .collect())
}
