mod common;

use common::*;
use coxart_core::retraction::{
    retract, retract_hat, retract_star, retract_star_audited, retract_star_via_reflections, retract_within,
    theta_split_check, Decision,
};
use coxart_core::word::one_move_apart;
use coxart_core::{ArtinWord, Coxeter};
use proptest::prelude::*;

fn graphs() -> Vec<Coxeter> {
    vec![cx(A3), cx(DIHEDRAL5), cx(AFFINE)]
}

fn for_each_graph(mut f: impl FnMut(&Coxeter, usize) -> Result<(), TestCaseError>) -> Result<(), TestCaseError> {
    for g in graphs() {
        let n = g.graph().len();
        f(&g, n)?;
    }
    Ok(())
}

fn is_prefix(a: &ArtinWord, b: &ArtinWord) -> bool {
    b.len() >= a.len() && b[..a.len()] == a[..]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn length_law(w in artin_word(3, 12), bits in 0u64..8) {
        for_each_graph(|g, n| {
            let x = coxart_core::VertexSubset::from_bits(bits & ((1 << n) - 1));
            let w = restrict(&w, g.graph().all());
            let out = retract(g, &w, x).unwrap();
            prop_assert!(out.len() <= w.len());
            prop_assert_eq!(out.len() == w.len(), w.is_on(x));
            if w.is_on(x) {
                prop_assert_eq!(&out, &w);
            }
            prop_assert!(out.is_on(x));
            Ok(())
        })?;
    }

    #[test]
    fn prefix_and_positivity(w in artin_word(3, 10), v in artin_word(3, 8), p in positive_word(3, 12), x in subset(3)) {
        for_each_graph(|g, _| {
            let all = g.graph().all();
            let (w, v, p) = (restrict(&w, all), restrict(&v, all), restrict(&p, all));
            let x = x.intersection(all);
            let head = retract(g, &w, x).unwrap();
            prop_assert!(is_prefix(&head, &retract(g, &(&w * &v), x).unwrap()));
            prop_assert!(retract(g, &p, x).unwrap().is_positive());
            Ok(())
        })?;
    }

    #[test]
    fn multiplicative_on_x_words_and_colored(w in artin_word(3, 10), v in artin_word(3, 10), x in subset(3)) {
        for_each_graph(|g, _| {
            let all = g.graph().all();
            let x = x.intersection(all);
            let (w, v) = (restrict(&w, all), restrict(&v, all));
            let on_x = restrict(&w, x);
            let colored = &w * &w.invert();
            for left in [on_x, colored] {
                prop_assert_eq!(
                    retract(g, &(&left * &v), x).unwrap(),
                    &retract(g, &left, x).unwrap() * &retract(g, &v, x).unwrap()
                );
            }
            Ok(())
        })?;
    }

    #[test]
    fn support_restriction(w in artin_word(3, 12), x in subset(3), y in subset(3)) {
        for_each_graph(|g, _| {
            let all = g.graph().all();
            let (x, y) = (x.intersection(all), y.intersection(all));
            let w = restrict(&w, y);
            let out = retract(g, &w, x).unwrap();
            prop_assert!(out.is_on(x.intersection(y)));
            prop_assert_eq!(retract_within(g, &w, y, x).unwrap(), out);
            Ok(())
        })?;
    }

    #[test]
    fn composition(w in artin_word(3, 12), x in subset(3), y in subset(3)) {
        for_each_graph(|g, _| {
            let all = g.graph().all();
            let (x, y) = (x.intersection(all), y.intersection(all));
            let w = restrict(&w, all);
            let xy = retract(g, &retract(g, &w, y).unwrap(), x).unwrap();
            let yx = retract(g, &retract(g, &w, x).unwrap(), y).unwrap();
            let direct = retract(g, &w, x.intersection(y)).unwrap();
            prop_assert_eq!(&xy, &direct);
            prop_assert_eq!(&yx, &direct);
            let big = x.union(y);
            prop_assert_eq!(retract(g, &retract(g, &w, big).unwrap(), x).unwrap(), retract(g, &w, x).unwrap());
            Ok(())
        })?;
    }

    #[test]
    fn routes_agree(w in artin_word(3, 12), x in subset(3)) {
        for_each_graph(|g, _| {
            let w = restrict(&w, g.graph().all());
            let x = x.intersection(g.graph().all());
            let (out, trace) = retract_star_audited(g, &w, x).unwrap();
            prop_assert_eq!(&retract_hat(g, &w, x).unwrap(), &out);
            prop_assert_eq!(&retract_star_via_reflections(g, &w, x).unwrap(), &out);
            let mut prev = coxart_core::CoxElement::identity();
            for step in &trace.steps {
                let emitted = matches!(step.decision, Decision::Emitted { .. });
                prop_assert_eq!(emitted, step.snapshot == prev);
                prev = step.snapshot.clone();
            }
            theta_split_check(g, &w, x).unwrap();
            Ok(())
        })?;
    }

    #[test]
    fn one_move_stability(w in artin_word(3, 10), x in subset(3), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for_each_graph(|g, _| {
            let w = restrict(&w, g.graph().all());
            let x = x.intersection(g.graph().all());
            let (_, moved) = coxart_core::word::random_move(g.graph(), &w, &mut rng);
            let a = retract(g, &w, x).unwrap();
            let b = retract(g, &moved, x).unwrap();
            prop_assert!(a == b || one_move_apart(g.graph(), &a, &b));
            Ok(())
        })?;
    }
}

#[test]
fn trace_lists_emissions() {
    let g = a3();
    let w = ArtinWord::parse(g.graph(), "c a c^-1 b").unwrap();
    let x = g.graph().parse_subset("a,b").unwrap();
    let (out, trace) = retract_star(&g, &w, x).unwrap();
    assert_eq!(trace.t_letters().len(), out.len());
    assert_eq!(trace.steps.len(), 4);
}
