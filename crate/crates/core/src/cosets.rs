//! Minimal coset representatives, double-coset decompositions and the
//! intersection `w·W_Y·w⁻¹ ∩ W_X` of conjugated standard parabolics.

use std::collections::BTreeMap;

use crate::coxeter::{CoxElement, Coxeter};
use crate::error::{Error, Result};
use crate::presentation::{Vertex, VertexSubset};

/// `u = v·w` (left form, `v ∈ W_X`) or `u = w·v` (right form, `v ∈ W_Y`)
/// with `w` the minimal representative of its coset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub v: CoxElement,
    pub w: CoxElement,
}

/// `u = w1·w2·w2p` with `w1 ∈ W_X`, `w2p ∈ W_Y` and `w2` `(X,Y)`-reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetDecomposition {
    pub w1: CoxElement,
    pub w2: CoxElement,
    pub w2p: CoxElement,
}

/// Which eligible generator a greedy strip takes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StripOrder {
    #[default]
    Least,
    Greatest,
}

impl StripOrder {
    fn pick(self, s: VertexSubset) -> Option<Vertex> {
        match self {
            StripOrder::Least => s.iter().next(),
            StripOrder::Greatest => s.iter().last(),
        }
    }
}

/// No generator of `X` shortens `w` on the left.
pub fn is_left_reduced(cx: &Coxeter, w: &CoxElement, x: VertexSubset) -> Result<bool> {
    Ok(cx.left_descents(w)?.intersection(x).is_empty())
}

/// No generator of `Y` shortens `w` on the right.
pub fn is_right_reduced(cx: &Coxeter, w: &CoxElement, y: VertexSubset) -> Result<bool> {
    Ok(cx.right_descents(w)?.intersection(y).is_empty())
}

pub fn left_decompose(cx: &Coxeter, u: &CoxElement, x: VertexSubset) -> Result<CosetDecomposition> {
    left_decompose_by(cx, u, x, StripOrder::Least)
}

pub fn left_decompose_by(
    cx: &Coxeter,
    u: &CoxElement,
    x: VertexSubset,
    order: StripOrder,
) -> Result<CosetDecomposition> {
    let mut v = CoxElement::identity();
    let mut w = u.clone();
    while let Some(s) = order.pick(cx.left_descents(&w)?.intersection(x)) {
        w = cx.mul_left(s, &w)?;
        v = cx.mul_right(&v, s)?;
    }
    Ok(CosetDecomposition { v, w })
}

pub fn right_decompose(cx: &Coxeter, u: &CoxElement, y: VertexSubset) -> Result<CosetDecomposition> {
    let mut v = CoxElement::identity();
    let mut w = u.clone();
    while let Some(s) = StripOrder::Least.pick(cx.right_descents(&w)?.intersection(y)) {
        w = cx.mul_right(&w, s)?;
        v = cx.mul_left(s, &v)?;
    }
    Ok(CosetDecomposition { v, w })
}

/// Alternates full left strips over `X` and right strips over `Y` until
/// neither side moves.
pub fn double_decompose(
    cx: &Coxeter,
    u: &CoxElement,
    x: VertexSubset,
    y: VertexSubset,
) -> Result<DoubleCosetDecomposition> {
    let mut w1 = CoxElement::identity();
    let mut w2p = CoxElement::identity();
    let mut core = u.clone();
    loop {
        let left = left_decompose(cx, &core, x)?;
        w1 = cx.multiply(&w1, &left.v)?;
        let right = right_decompose(cx, &left.w, y)?;
        w2p = cx.multiply(&right.v, &w2p)?;
        let settled = left.v.is_identity() && right.v.is_identity();
        core = right.w;
        if settled {
            break;
        }
    }
    Ok(DoubleCosetDecomposition { w1, w2: core, w2p })
}

/// For `w` `(X,∅)`-reduced: the `q ∈ X` with `w·s_i·w⁻¹ = s_q`, if any.
///
/// Either `w·s_i` is shorter than `w` (then it stays `(X,∅)`-reduced), or
/// it is longer and its only possible left descent in `X` is that `q`.
pub fn conjugates_into_sx(cx: &Coxeter, w: &CoxElement, i: Vertex, x: VertexSubset) -> Result<Option<Vertex>> {
    if !is_left_reduced(cx, w, x)? {
        return Err(Error::PreconditionViolated(format!(
            "`{}` is not (X,∅)-reduced",
            w.word().display(cx.graph())
        )));
    }
    let ws = cx.mul_right(w, i)?;
    if ws.length() < w.length() {
        return Ok(None);
    }
    Ok(cx.left_descents(&ws)?.intersection(x).iter().next())
}

/// Certificate of `w·W_Y·w⁻¹ ∩ W_X = w1·W_{X1}·w1⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicIntersectionData {
    pub x1: VertexSubset,
    pub y1: VertexSubset,
    /// `Y1 → X1`, with `w2·s_j·w2⁻¹ = s_{pairing[j]}`.
    pub pairing: BTreeMap<Vertex, Vertex>,
    pub w1: CoxElement,
    pub w2: CoxElement,
}

pub fn coxeter_parabolic_intersection(
    cx: &Coxeter,
    x: VertexSubset,
    y: VertexSubset,
    w: &CoxElement,
) -> Result<ParabolicIntersectionData> {
    let dec = double_decompose(cx, w, x, y)?;
    let core_inv = cx.inverse(&dec.w2)?;
    let mut x1 = VertexSubset::empty();
    let mut y1 = VertexSubset::empty();
    let mut pairing = BTreeMap::new();
    for i in x.iter() {
        let back = cx.conjugate(&core_inv, &cx.generator(i))?;
        if let Some(j) = back.simple_letter().filter(|&j| y.contains(j)) {
            x1.insert(i);
            y1.insert(j);
            pairing.insert(j, i);
        }
    }
    Ok(ParabolicIntersectionData {
        x1,
        y1,
        pairing,
        w1: dec.w1,
        w2: dec.w2,
    })
}

/// The three shapes of `w·W_{i,j}·w⁻¹ ∩ W_X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DihedralClass {
    Trivial,
    SingleReflection(CoxElement),
    FullDihedral {
        x1: VertexSubset,
        pairing: BTreeMap<Vertex, Vertex>,
    },
}

pub fn classify_dihedral(
    cx: &Coxeter,
    w: &CoxElement,
    i: Vertex,
    j: Vertex,
    x: VertexSubset,
) -> Result<DihedralClass> {
    if i == j {
        return Err(Error::PreconditionViolated("the two generators must differ".into()));
    }
    let data = coxeter_parabolic_intersection(cx, x, VertexSubset::from_vertices([i, j]), w)?;
    match data.y1.len() {
        0 => Ok(DihedralClass::Trivial),
        1 => {
            let q = data.x1.iter().next().expect("|X1| = |Y1|");
            Ok(DihedralClass::SingleReflection(
                cx.conjugate(&data.w1, &cx.generator(q))?,
            ))
        }
        _ => {
            let g = cx.graph();
            let (p, q) = (data.pairing[&i], data.pairing[&j]);
            if g.label(p, q) != g.label(i, j) {
                return Err(Error::AssertionFailure(format!(
                    "label m({}, {}) differs from m({}, {})",
                    g.name(p),
                    g.name(q),
                    g.name(i),
                    g.name(j)
                )));
            }
            Ok(DihedralClass::FullDihedral {
                x1: data.x1,
                pairing: data.pairing,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::CoxeterGraph;
    use crate::word::SimpleWord;

    fn a3() -> Coxeter {
        Coxeter::new(
            CoxeterGraph::parse("vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 2").unwrap(),
        )
    }

    fn canon(cx: &Coxeter, s: &str) -> CoxElement {
        cx.canonicalize(&SimpleWord::parse(cx.graph(), s).unwrap()).unwrap()
    }

    fn set(cx: &Coxeter, s: &str) -> VertexSubset {
        cx.graph().parse_subset(s).unwrap()
    }

    fn v(cx: &Coxeter, s: &str) -> Vertex {
        cx.graph().vertex(s).unwrap()
    }

    #[test]
    fn left_cosets() {
        let cx = a3();
        let ab = set(&cx, "a,b");
        let d = left_decompose(&cx, &canon(&cx, "a c"), ab).unwrap();
        assert_eq!((d.v, d.w), (canon(&cx, "a"), canon(&cx, "c")));

        let u = canon(&cx, "b a b");
        let d = left_decompose(&cx, &u, ab).unwrap();
        assert_eq!((d.v, d.w), (u, CoxElement::identity()));

        let d = left_decompose(&cx, &canon(&cx, "c"), ab).unwrap();
        assert_eq!((d.v, d.w), (CoxElement::identity(), canon(&cx, "c")));
    }

    #[test]
    fn double_cosets() {
        let cx = a3();
        let (ab, bc) = (set(&cx, "a,b"), set(&cx, "b,c"));
        let d = double_decompose(&cx, &canon(&cx, "c b a"), ab, bc).unwrap();
        assert!(d.w1.is_identity() && d.w2p.is_identity());
        assert_eq!(d.w2, canon(&cx, "c b a"));

        let d = double_decompose(&cx, &CoxElement::identity(), ab, bc).unwrap();
        assert!(d.w1.is_identity() && d.w2.is_identity() && d.w2p.is_identity());

        // W_X·acb·W_Y contains the identity, so the core is trivial.
        let d = double_decompose(&cx, &canon(&cx, "a c b"), ab, bc).unwrap();
        assert_eq!(d.w1, canon(&cx, "a"));
        assert!(d.w2.is_identity());
        assert_eq!(d.w2p, canon(&cx, "c b"));

        let d = double_decompose(&cx, &canon(&cx, "a c b a"), ab, bc).unwrap();
        assert_eq!(d.w1, canon(&cx, "a"));
        assert_eq!(d.w2, canon(&cx, "c b a"));
        assert!(d.w2p.is_identity());
    }

    #[test]
    fn conjugation_predicate() {
        let cx = a3();
        let ab = set(&cx, "a,b");
        let c = canon(&cx, "c");
        assert_eq!(conjugates_into_sx(&cx, &c, v(&cx, "a"), ab).unwrap(), Some(v(&cx, "a")));
        assert_eq!(
            conjugates_into_sx(&cx, &CoxElement::identity(), v(&cx, "a"), ab).unwrap(),
            Some(v(&cx, "a"))
        );
        assert_eq!(conjugates_into_sx(&cx, &c, v(&cx, "b"), ab).unwrap(), None);
        assert_eq!(
            conjugates_into_sx(&cx, &canon(&cx, "a c"), v(&cx, "b"), ab).unwrap_err().code(),
            "PreconditionViolated"
        );
    }

    #[test]
    fn intersections() {
        let cx = a3();
        let (ab, bc) = (set(&cx, "a,b"), set(&cx, "b,c"));
        let d = coxeter_parabolic_intersection(&cx, ab, bc, &CoxElement::identity()).unwrap();
        assert_eq!((d.x1, d.y1), (set(&cx, "b"), set(&cx, "b")));
        assert_eq!(d.pairing, BTreeMap::from([(v(&cx, "b"), v(&cx, "b"))]));

        let d = coxeter_parabolic_intersection(&cx, ab, bc, &canon(&cx, "c b a")).unwrap();
        assert_eq!((d.x1, d.y1), (ab, bc));
        assert_eq!(
            d.pairing,
            BTreeMap::from([(v(&cx, "c"), v(&cx, "b")), (v(&cx, "b"), v(&cx, "a"))])
        );
        assert!(d.w1.is_identity());

        let d = coxeter_parabolic_intersection(&cx, set(&cx, "a"), set(&cx, "c"), &CoxElement::identity())
            .unwrap();
        assert!(d.x1.is_empty() && d.y1.is_empty());
    }

    #[test]
    fn dihedral_classes() {
        let cx = a3();
        let ab = set(&cx, "a,b");
        assert_eq!(
            classify_dihedral(&cx, &CoxElement::identity(), v(&cx, "a"), v(&cx, "c"), ab).unwrap(),
            DihedralClass::SingleReflection(canon(&cx, "a"))
        );
        match classify_dihedral(&cx, &canon(&cx, "c b a"), v(&cx, "b"), v(&cx, "c"), ab).unwrap() {
            DihedralClass::FullDihedral { x1, .. } => assert_eq!(x1, ab),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            classify_dihedral(&cx, &CoxElement::identity(), v(&cx, "a"), v(&cx, "b"), set(&cx, "c"))
                .unwrap(),
            DihedralClass::Trivial
        );
        assert!(classify_dihedral(&cx, &CoxElement::identity(), v(&cx, "a"), v(&cx, "a"), ab).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_word(max: usize) -> impl Strategy<Value = Vec<Vertex>> {
            proptest::collection::vec((0u8..3).prop_map(Vertex), 0..max)
        }

        fn affine() -> Coxeter {
            Coxeter::new(
                CoxeterGraph::parse("vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 3")
                    .unwrap(),
            )
        }

        proptest! {
            #[test]
            fn left_strip_is_order_independent(w in arb_word(12), bits in 0u64..8) {
                for cx in [a3(), affine()] {
                    let u = cx.canonicalize(&w).unwrap();
                    let x = VertexSubset::from_bits(bits);
                    let a = left_decompose_by(&cx, &u, x, StripOrder::Least).unwrap();
                    let b = left_decompose_by(&cx, &u, x, StripOrder::Greatest).unwrap();
                    prop_assert_eq!(&a, &b);
                    prop_assert_eq!(cx.multiply(&a.v, &a.w).unwrap(), u.clone());
                    prop_assert_eq!(u.length(), a.v.length() + a.w.length());
                    prop_assert!(a.v.is_in_parabolic(x));
                    prop_assert!(is_left_reduced(&cx, &a.w, x).unwrap());
                }
            }

            #[test]
            fn reduced_representatives_are_length_additive(w in arb_word(10), xw in arb_word(6), bits in 0u64..8) {
                let cx = affine();
                let x = VertexSubset::from_bits(bits);
                let rep = left_decompose(&cx, &cx.canonicalize(&w).unwrap(), x).unwrap().w;
                let xs: Vec<Vertex> = xw.into_iter().filter(|&s| x.contains(s)).collect();
                let xe = cx.canonicalize(&xs).unwrap();
                prop_assert_eq!(cx.multiply(&xe, &rep).unwrap().length(), xe.length() + rep.length());
            }

            #[test]
            fn double_decomposition_invariants(w in arb_word(12), xb in 0u64..8, yb in 0u64..8) {
                for cx in [a3(), affine()] {
                    let (x, y) = (VertexSubset::from_bits(xb), VertexSubset::from_bits(yb));
                    let u = cx.canonicalize(&w).unwrap();
                    let d = double_decompose(&cx, &u, x, y).unwrap();
                    let prod = cx.multiply(&cx.multiply(&d.w1, &d.w2).unwrap(), &d.w2p).unwrap();
                    prop_assert_eq!(prod, u.clone());
                    prop_assert_eq!(u.length(), d.w1.length() + d.w2.length() + d.w2p.length());
                    prop_assert!(d.w1.is_in_parabolic(x) && d.w2p.is_in_parabolic(y));
                    prop_assert!(is_left_reduced(&cx, &d.w2, x).unwrap());
                    prop_assert!(is_right_reduced(&cx, &d.w2, y).unwrap());
                }
            }

            #[test]
            fn conjugation_predicate_matches_conjugation(w in arb_word(12), i in 0u8..3, bits in 0u64..8) {
                for cx in [a3(), affine()] {
                    let x = VertexSubset::from_bits(bits);
                    let rep = left_decompose(&cx, &cx.canonicalize(&w).unwrap(), x).unwrap().w;
                    let i = Vertex(i);
                    let got = conjugates_into_sx(&cx, &rep, i, x).unwrap();
                    let conj = cx.conjugate(&rep, &cx.generator(i)).unwrap();
                    let direct = conj.simple_letter().filter(|&q| x.contains(q));
                    prop_assert_eq!(got, direct);
                    let ws = cx.mul_right(&rep, i).unwrap();
                    prop_assert_eq!(got.is_none(), is_left_reduced(&cx, &ws, x).unwrap());
                    if got.is_some() {
                        // Then `rep` is also (X,{i})-reduced.
                        let d = double_decompose(&cx, &rep, x, VertexSubset::from_vertices([i])).unwrap();
                        prop_assert_eq!(&d.w2, &rep);
                    }
                }
            }

            #[test]
            fn pairing_conjugates_generators(w in arb_word(12), xb in 0u64..8, yb in 0u64..8) {
                for cx in [a3(), affine()] {
                    let (x, y) = (VertexSubset::from_bits(xb), VertexSubset::from_bits(yb));
                    let d = coxeter_parabolic_intersection(&cx, x, y, &cx.canonicalize(&w).unwrap()).unwrap();
                    prop_assert_eq!(d.x1.len(), d.y1.len());
                    prop_assert!(d.x1.is_subset(x) && d.y1.is_subset(y));
                    for (&j, &i) in &d.pairing {
                        prop_assert_eq!(cx.conjugate(&d.w2, &cx.generator(j)).unwrap(), cx.generator(i));
                    }
                }
            }
        }
    }
}
