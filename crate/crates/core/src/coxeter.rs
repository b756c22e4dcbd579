//! The word problem in `W_I`.
//!
//! Everything rests on braid-move orbits (Tits' method). Two routes are
//! provided:
//!
//! * [`Coxeter::reduce`] is the plain orbit scan: search the braid orbit of a
//!   word for an adjacent equal pair, delete it, repeat.
//! * [`Coxeter::canonicalize`] multiplies letter by letter. The running value
//!   is always a reduced word `u`, and `u·s` is non-reduced exactly when some
//!   word of the orbit of `u` ends with `s`; in that case the letter is
//!   dropped from that orbit word. Orbits are therefore only ever taken of
//!   reduced words, which keeps them small.
//!
//! Both routes are tested against each other and against permutation
//! oracles.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::presentation::{CoxeterGraph, Vertex, VertexSubset};
use crate::word::SimpleWord;

pub const DEFAULT_MAX_ORBIT: usize = 1_000_000;
pub const DEFAULT_CACHE_BOUND: usize = 1 << 18;

// Orbits up to this size register every member as a cache key.
const SHARE_ORBIT_KEYS: usize = 256;

/// An element of `W_I`, held as its canonical word: reduced and
/// shortlex-least among its reduced words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CoxElement {
    word: SimpleWord,
}

impl CoxElement {
    pub fn identity() -> Self {
        CoxElement::default()
    }

    pub fn word(&self) -> &SimpleWord {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// The generator, if the element is a simple reflection.
    pub fn simple_letter(&self) -> Option<Vertex> {
        match self.word[..] {
            [v] => Some(v),
            _ => None,
        }
    }

    /// Membership in `W_X`: by convexity, the reduced word uses only `X`.
    pub fn is_in_parabolic(&self, subset: VertexSubset) -> bool {
        self.word.is_on(subset)
    }
}

/// Shortlex: length first, then lexicographic in vertex order.
impl Ord for CoxElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.word.0.cmp(&other.word.0))
    }
}

impl PartialOrd for CoxElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// What one orbit computation on a reduced word tells us.
#[derive(Debug)]
struct OrbitInfo {
    canonical: Vec<Vertex>,
    left_descents: VertexSubset,
    right_descents: VertexSubset,
    // For each descent `s`: a reduced word of `s·u` (resp. `u·s`).
    left_strip: Vec<(Vertex, Vec<Vertex>)>,
    right_strip: Vec<(Vertex, Vec<Vertex>)>,
}

impl OrbitInfo {
    fn strip(list: &[(Vertex, Vec<Vertex>)], s: Vertex) -> Option<&[Vertex]> {
        list.iter().find(|(v, _)| *v == s).map(|(_, w)| &w[..])
    }
}

#[derive(Default)]
struct Cache {
    orbits: HashMap<Vec<Vertex>, Arc<OrbitInfo>>,
}

/// A Coxeter system attached to a graph, with a bounded memo of orbit data.
///
/// The memo sits behind a mutex, so a `Coxeter` can be shared across threads.
pub struct Coxeter {
    graph: CoxeterGraph,
    max_orbit: usize,
    cache_bound: usize,
    cache: Mutex<Cache>,
}

impl std::fmt::Debug for Coxeter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Coxeter")
            .field("graph", &self.graph)
            .field("max_orbit", &self.max_orbit)
            .finish_non_exhaustive()
    }
}

impl Coxeter {
    pub fn new(graph: CoxeterGraph) -> Self {
        Coxeter {
            graph,
            max_orbit: DEFAULT_MAX_ORBIT,
            cache_bound: DEFAULT_CACHE_BOUND,
            cache: Mutex::new(Cache::default()),
        }
    }

    pub fn with_max_orbit(mut self, cap: usize) -> Self {
        self.max_orbit = cap.max(1);
        self
    }

    pub fn with_cache_bound(mut self, bound: usize) -> Self {
        self.cache_bound = bound;
        self
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn max_orbit(&self) -> usize {
        self.max_orbit
    }

    /// Number of memoized orbit entries.
    pub fn cache_len(&self) -> usize {
        self.cache.lock().unwrap().orbits.len()
    }

    fn braid_neighbours(&self, w: &[Vertex], mut visit: impl FnMut(Vec<Vertex>)) {
        for start in 0..w.len().saturating_sub(1) {
            let (i, j) = (w[start], w[start + 1]);
            if i == j {
                continue;
            }
            let Some(m) = self.graph.label(i, j).finite() else {
                continue;
            };
            let m = m as usize;
            if start + m > w.len() {
                continue;
            }
            let alternates = (0..m).all(|k| w[start + k] == if k % 2 == 0 { i } else { j });
            if alternates {
                let mut next = w.to_vec();
                for k in 0..m {
                    next[start + k] = if k % 2 == 0 { j } else { i };
                }
                visit(next);
            }
        }
    }

    fn orbit_raw(&self, w: &[Vertex], cap: usize) -> Result<Vec<Vec<Vertex>>> {
        let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        while let Some(cur) = queue.pop_front() {
            let mut overflow = false;
            self.braid_neighbours(&cur, |next| {
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        overflow = true;
                        return;
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            });
            if overflow {
                return Err(Error::OrbitCapExceeded(cap));
            }
            order.push(cur);
        }
        Ok(order)
    }

    /// All words reachable from `w` by braid moves, sorted
    /// lexicographically (so the first one is the shortlex-least).
    pub fn braid_orbit(&self, w: &SimpleWord, cap: usize) -> Result<Vec<SimpleWord>> {
        let mut orbit = self.orbit_raw(w, cap)?;
        orbit.sort();
        Ok(orbit.into_iter().map(SimpleWord).collect())
    }

    fn orbit_info(&self, reduced: &[Vertex]) -> Result<Arc<OrbitInfo>> {
        if let Some(info) = self.cache.lock().unwrap().orbits.get(reduced) {
            return Ok(Arc::clone(info));
        }
        let orbit = self.orbit_raw(reduced, self.max_orbit)?;
        let canonical = orbit.iter().min().cloned().unwrap_or_default();
        let mut left_descents = VertexSubset::empty();
        let mut right_descents = VertexSubset::empty();
        let mut left_strip = Vec::new();
        let mut right_strip = Vec::new();
        for word in &orbit {
            if let (Some(&first), Some(&last)) = (word.first(), word.last()) {
                if !left_descents.contains(first) {
                    left_descents.insert(first);
                    left_strip.push((first, word[1..].to_vec()));
                }
                if !right_descents.contains(last) {
                    right_descents.insert(last);
                    right_strip.push((last, word[..word.len() - 1].to_vec()));
                }
            }
        }
        let info = Arc::new(OrbitInfo {
            canonical,
            left_descents,
            right_descents,
            left_strip,
            right_strip,
        });
        let mut cache = self.cache.lock().unwrap();
        if cache.orbits.len() + orbit.len() > self.cache_bound {
            cache.orbits.clear();
        }
        if self.cache_bound > 0 {
            if orbit.len() <= SHARE_ORBIT_KEYS {
                for word in orbit {
                    cache.orbits.insert(word, Arc::clone(&info));
                }
            } else {
                cache.orbits.insert(reduced.to_vec(), Arc::clone(&info));
                cache.orbits.insert(info.canonical.clone(), Arc::clone(&info));
            }
        }
        Ok(info)
    }

    /// Canonical element of a word already known to be reduced.
    fn element_of_reduced(&self, reduced: &[Vertex]) -> Result<CoxElement> {
        let info = self.orbit_info(reduced)?;
        Ok(CoxElement {
            word: SimpleWord(info.canonical.clone()),
        })
    }

    /// Tits' orbit scan: while some word of the braid orbit has an adjacent
    /// equal pair, delete the leftmost such pair of the least such word.
    pub fn reduce(&self, w: &SimpleWord) -> Result<SimpleWord> {
        let mut cur = w.clone();
        loop {
            let orbit = self.braid_orbit(&cur, self.max_orbit)?;
            let hit = orbit.into_iter().find_map(|word| {
                let k = word.windows(2).position(|p| p[0] == p[1])?;
                Some((word, k))
            });
            match hit {
                Some((mut word, k)) => {
                    word.0.drain(k..k + 2);
                    cur = word;
                }
                None => return Ok(cur),
            }
        }
    }

    pub fn mul_right(&self, x: &CoxElement, s: Vertex) -> Result<CoxElement> {
        let info = self.orbit_info(&x.word)?;
        match OrbitInfo::strip(&info.right_strip, s) {
            Some(shorter) => self.element_of_reduced(shorter),
            None => {
                let mut longer = x.word.0.clone();
                longer.push(s);
                self.element_of_reduced(&longer)
            }
        }
    }

    pub fn mul_left(&self, s: Vertex, x: &CoxElement) -> Result<CoxElement> {
        let info = self.orbit_info(&x.word)?;
        match OrbitInfo::strip(&info.left_strip, s) {
            Some(shorter) => self.element_of_reduced(shorter),
            None => {
                let mut longer = Vec::with_capacity(x.length() + 1);
                longer.push(s);
                longer.extend_from_slice(&x.word);
                self.element_of_reduced(&longer)
            }
        }
    }

    /// The element represented by `w`, in canonical form.
    pub fn canonicalize(&self, w: &[Vertex]) -> Result<CoxElement> {
        w.iter()
            .try_fold(CoxElement::identity(), |acc, &s| self.mul_right(&acc, s))
    }

    pub fn multiply(&self, x: &CoxElement, y: &CoxElement) -> Result<CoxElement> {
        y.word
            .iter()
            .try_fold(x.clone(), |acc, &s| self.mul_right(&acc, s))
    }

    pub fn inverse(&self, x: &CoxElement) -> Result<CoxElement> {
        self.element_of_reduced(&x.word.reverse())
    }

    /// `g·x·g⁻¹`.
    pub fn conjugate(&self, g: &CoxElement, x: &CoxElement) -> Result<CoxElement> {
        let gx = self.multiply(g, x)?;
        g.word
            .iter()
            .rev()
            .try_fold(gx, |acc, &s| self.mul_right(&acc, s))
    }

    pub fn equal(&self, a: &[Vertex], b: &[Vertex]) -> Result<bool> {
        Ok(self.canonicalize(a)? == self.canonicalize(b)?)
    }

    pub fn length_of(&self, w: &[Vertex]) -> Result<usize> {
        Ok(self.canonicalize(w)?.length())
    }

    pub fn generator(&self, s: Vertex) -> CoxElement {
        CoxElement {
            word: SimpleWord(vec![s]),
        }
    }

    /// Generators `s` with `ℓ(s·x) < ℓ(x)`.
    pub fn left_descents(&self, x: &CoxElement) -> Result<VertexSubset> {
        Ok(self.orbit_info(&x.word)?.left_descents)
    }

    /// Generators `s` with `ℓ(x·s) < ℓ(x)`.
    pub fn right_descents(&self, x: &CoxElement) -> Result<VertexSubset> {
        Ok(self.orbit_info(&x.word)?.right_descents)
    }

    /// Whether `w` is a reduced word.
    pub fn is_reduced(&self, w: &[Vertex]) -> Result<bool> {
        Ok(self.length_of(w)? == w.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> Coxeter {
        Coxeter::new(
            CoxeterGraph::parse("vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 2").unwrap(),
        )
    }

    fn sw(cx: &Coxeter, s: &str) -> SimpleWord {
        SimpleWord::parse(cx.graph(), s).unwrap()
    }

    fn canon(cx: &Coxeter, s: &str) -> CoxElement {
        cx.canonicalize(&sw(cx, s)).unwrap()
    }

    fn show(cx: &Coxeter, x: &CoxElement) -> String {
        x.word().display(cx.graph()).to_string()
    }

    fn orbit_strings(cx: &Coxeter, s: &str) -> Vec<String> {
        cx.braid_orbit(&sw(cx, s), 100)
            .unwrap()
            .iter()
            .map(|w| w.display(cx.graph()).to_string())
            .collect()
    }

    #[test]
    fn braid_orbits() {
        let cx = a3();
        assert_eq!(orbit_strings(&cx, "a b a"), vec!["a b a", "b a b"]);
        assert_eq!(orbit_strings(&cx, "a"), vec!["a"]);
        assert_eq!(orbit_strings(&cx, "a c"), vec!["a c", "c a"]);
    }

    #[test]
    fn orbit_cap_is_a_hard_error() {
        let cx = a3();
        assert_eq!(
            cx.braid_orbit(&sw(&cx, "a b a"), 1).unwrap_err(),
            Error::OrbitCapExceeded(1)
        );
        let tiny = a3().with_max_orbit(1);
        assert_eq!(
            tiny.canonicalize(&sw(&tiny, "a b a")).unwrap_err(),
            Error::OrbitCapExceeded(1)
        );
    }

    #[test]
    fn tits_reduction() {
        let cx = a3();
        let r = cx.reduce(&sw(&cx, "a b c a c b")).unwrap();
        assert_eq!(r.len(), 2);
        assert!(cx.equal(&r, &sw(&cx, "b a")).unwrap());
        assert_eq!(cx.reduce(&sw(&cx, "b b")).unwrap(), SimpleWord::empty());
        assert_eq!(cx.reduce(&sw(&cx, "a c a")).unwrap(), sw(&cx, "c"));
    }

    #[test]
    fn canonical_forms() {
        let cx = a3();
        assert_eq!(show(&cx, &canon(&cx, "a b c a c b")), "b a");
        assert_eq!(show(&cx, &canon(&cx, "b a b")), "a b a");
        assert!(canon(&cx, "e").is_identity());
    }

    #[test]
    fn group_operations() {
        let cx = a3();
        assert_eq!(canon(&cx, "a b a"), canon(&cx, "b a b"));
        let a = canon(&cx, "a");
        assert!(cx.multiply(&a, &a).unwrap().is_identity());
        assert_eq!(canon(&cx, "a b c a c b").length(), 2);
        let x = canon(&cx, "a b c");
        assert_eq!(show(&cx, &cx.inverse(&x).unwrap()), "c b a");
        let ab = canon(&cx, "a b");
        assert_eq!(cx.conjugate(&ab, &canon(&cx, "a")).unwrap(), canon(&cx, "b"));
    }

    #[test]
    fn parabolic_membership_and_simple_letters() {
        let cx = a3();
        let g = cx.graph();
        let ab = g.parse_subset("a,b").unwrap();
        assert!(canon(&cx, "c a c").is_in_parabolic(ab));
        assert!(!canon(&cx, "c").is_in_parabolic(ab));
        assert!(CoxElement::identity().is_in_parabolic(VertexSubset::empty()));
        assert_eq!(canon(&cx, "c a c").simple_letter(), Some(g.vertex("a").unwrap()));
        assert_eq!(CoxElement::identity().simple_letter(), None);
        assert_eq!(canon(&cx, "b a").simple_letter(), None);
    }

    #[test]
    fn descents() {
        let cx = a3();
        let g = cx.graph();
        let x = canon(&cx, "a c b a");
        assert_eq!(g.subset_names(cx.left_descents(&x).unwrap()), vec!["a", "c"]);
        assert_eq!(g.subset_names(cx.right_descents(&x).unwrap()), vec!["a", "b"]);
    }

    #[test]
    fn infinite_label_has_no_relation() {
        let cx = Coxeter::new(CoxeterGraph::parse("vertices: a b").unwrap());
        let w = sw(&cx, "a b a b a b");
        assert_eq!(cx.length_of(&w).unwrap(), 6);
        assert_eq!(cx.length_of(&sw(&cx, "a b b a")).unwrap(), 0);
    }

    #[test]
    fn cache_is_bounded() {
        let cx = a3().with_cache_bound(4);
        for w in ["a b c", "c b a", "a b a c", "b c b a"] {
            canon(&cx, w);
            assert!(cx.cache_len() <= 4);
        }
        let nocache = a3().with_cache_bound(0);
        assert_eq!(show(&nocache, &canon(&nocache, "b a b")), "a b a");
        assert_eq!(nocache.cache_len(), 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_word(n: u8, max: usize) -> impl Strategy<Value = SimpleWord> {
            proptest::collection::vec(0..n, 0..max)
                .prop_map(|v| v.into_iter().map(Vertex).collect())
        }

        fn affine() -> Coxeter {
            Coxeter::new(
                CoxeterGraph::parse("vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 3")
                    .unwrap(),
            )
        }

        proptest! {
            #[test]
            fn both_routes_agree(w in arb_word(3, 10)) {
                for cx in [a3(), affine()] {
                    let reduced = cx.reduce(&w).unwrap();
                    let via_orbit = cx.braid_orbit(&reduced, 10_000).unwrap()[0].clone();
                    let canonical = cx.canonicalize(&w).unwrap();
                    prop_assert_eq!(canonical.word(), &via_orbit);
                    prop_assert_eq!(reduced.len() % 2, w.len() % 2);
                }
            }

            #[test]
            fn canonical_words_are_fixpoints(w in arb_word(3, 14)) {
                let cx = affine();
                let x = cx.canonicalize(&w).unwrap();
                prop_assert_eq!(cx.canonicalize(x.word()).unwrap(), x.clone());
                prop_assert!(cx.is_reduced(x.word()).unwrap());
            }

            #[test]
            fn inverse_and_multiply(u in arb_word(3, 10), v in arb_word(3, 10)) {
                let cx = a3();
                let x = cx.canonicalize(&u).unwrap();
                let y = cx.canonicalize(&v).unwrap();
                prop_assert_eq!(cx.multiply(&x, &y).unwrap(), cx.canonicalize(&u.concat(&v)).unwrap());
                prop_assert!(cx.multiply(&x, &cx.inverse(&x).unwrap()).unwrap().is_identity());
                let on_left = u.iter().rev().try_fold(y.clone(), |acc, &s| cx.mul_left(s, &acc)).unwrap();
                prop_assert_eq!(on_left, cx.multiply(&x, &y).unwrap());
            }

            #[test]
            fn parabolic_membership_respects_intersections(w in arb_word(3, 10), xb in 0u64..8, yb in 0u64..8) {
                let cx = a3();
                let x = cx.canonicalize(&w).unwrap();
                let (xs, ys) = (VertexSubset::from_bits(xb), VertexSubset::from_bits(yb));
                prop_assert!(x.is_in_parabolic(cx.graph().all()));
                prop_assert_eq!(
                    x.is_in_parabolic(xs) && x.is_in_parabolic(ys),
                    x.is_in_parabolic(xs.intersection(ys))
                );
            }
        }
    }
}
