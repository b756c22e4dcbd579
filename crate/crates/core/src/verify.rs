//! Seeded verification suites.
//!
//! Every suite draws from its own ChaCha stream derived from the seed, so a
//! suite's output does not depend on which other suites ran. Reports carry
//! no timings and render identically for identical seeds.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::artin_parabolic::{
    conjecture_reduce, generator_transport, intersect_parabolic_kappa, is_colored, kappa, verify_certificate,
};
use crate::cosets::{classify_dihedral, coxeter_parabolic_intersection, DihedralClass};
use crate::coxeter::{CoxElement, Coxeter};
use crate::error::{Error, Result};
use crate::oracle::{
    brute_force_intersection, conjugated_subgroup, oracle_equal, oracle_length, perm_model, PermModel,
};
use crate::presentation::{CoxeterGraph, Vertex, VertexSubset};
use crate::reflections::{n_set, reflection_sequence};
use crate::retraction::{
    retract, retract_hat, retract_star_audited, retract_within, theta_split_check,
};
use crate::word::{non_insert_moves, one_move_apart, random_move, ArtinLetter, ArtinWord, Sign, SimpleWord};

pub const A3_GRAPH: &str = "vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 2\n";
pub const DIHEDRAL5_GRAPH: &str = "vertices: i j\nedge: i j 5\n";
pub const AFFINE_GRAPH: &str = "vertices: a b c\nedge: a b 3\nedge: b c 3\nedge: a c 3\n";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    WorkedExample,
    Oracle,
    NSet,
    Retraction,
    Stability,
    Intersection,
    Certificates,
    ConjReduce,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::WorkedExample,
        Suite::Oracle,
        Suite::NSet,
        Suite::Retraction,
        Suite::Stability,
        Suite::Intersection,
        Suite::Certificates,
        Suite::ConjReduce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::WorkedExample => "worked-example",
            Suite::Oracle => "oracle",
            Suite::NSet => "nset",
            Suite::Retraction => "retraction",
            Suite::Stability => "stability",
            Suite::Intersection => "intersection",
            Suite::Certificates => "certificates",
            Suite::ConjReduce => "conjreduce",
        }
    }

    /// Parses a suite name; `all` gives every suite.
    pub fn parse_list(name: &str) -> Option<Vec<Suite>> {
        if name == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().find(|s| s.name() == name).map(|&s| vec![s])
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_orbit: usize,
    pub oracle_random_pairs: usize,
    pub oracle_exhaustive_len: usize,
    pub nset_cases: usize,
    pub retraction_words: usize,
    pub stability_pairs: usize,
    pub conjreduce_instances: usize,
    /// A user graph exercised by the graph-generic suites alongside the
    /// built-in ones.
    pub extra_graph: Option<CoxeterGraph>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            max_orbit: crate::coxeter::DEFAULT_MAX_ORBIT,
            oracle_random_pairs: 10_000,
            oracle_exhaustive_len: 6,
            nset_cases: 1_000,
            retraction_words: 1_000,
            stability_pairs: 1_000,
            conjreduce_instances: 200,
            extra_graph: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    pub fn get(&self, suite: Suite) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == suite)
    }
}

/// Failure details shown per suite in the rendered report.
const SHOWN_FAILURES: usize = 5;

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for s in &self.suites {
            let status = if s.passed() { "ok" } else { "FAILED" };
            writeln!(
                f,
                "{:<15} {:>7} cases {:>5} failures  {}",
                s.suite.name(),
                s.cases,
                s.failures.len(),
                status
            )?;
            for msg in s.failures.iter().take(SHOWN_FAILURES) {
                writeln!(f, "    {msg}")?;
            }
        }
        write!(
            f,
            "total {} failures",
            self.failure_count()
        )
    }
}

pub fn run(suites: &[Suite], config: &VerifyConfig) -> Result<VerifyReport> {
    let mut out = Vec::new();
    for &suite in suites {
        let mut tally = Tally::default();
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(suite as u64 + 1)));
        let fixtures = Fixtures::new(config)?;
        match suite {
            Suite::WorkedExample => worked_example(&fixtures.a3, &mut tally),
            Suite::Oracle => oracle_suite(&fixtures, config, &mut rng, &mut tally),
            Suite::NSet => nset_suite(&fixtures, config, &mut rng, &mut tally),
            Suite::Retraction => retraction_suite(&fixtures, config, &mut rng, &mut tally),
            Suite::Stability => stability_suite(&fixtures, config, &mut rng, &mut tally),
            Suite::Intersection => intersection_suite(&fixtures.a3, &mut tally)?,
            Suite::Certificates => certificate_suite(&fixtures.a3, &mut tally)?,
            Suite::ConjReduce => conjreduce_suite(&fixtures.a3, config, &mut rng, &mut tally),
        }
        out.push(SuiteReport {
            suite,
            cases: tally.cases,
            failures: tally.failures,
        });
    }
    Ok(VerifyReport {
        seed: config.seed,
        suites: out,
    })
}

struct Fixtures {
    a3: Coxeter,
    graphs: Vec<(String, Coxeter)>,
}

impl Fixtures {
    fn new(config: &VerifyConfig) -> Result<Self> {
        let load = |text: &str| -> Result<Coxeter> {
            Ok(Coxeter::new(CoxeterGraph::parse(text)?).with_max_orbit(config.max_orbit))
        };
        let mut graphs = vec![
            ("a3".to_string(), load(A3_GRAPH)?),
            ("dihedral5".to_string(), load(DIHEDRAL5_GRAPH)?),
            ("affine".to_string(), load(AFFINE_GRAPH)?),
        ];
        if let Some(g) = &config.extra_graph {
            if graphs.iter().all(|(_, c)| c.graph() != g) {
                graphs.push((
                    "user".to_string(),
                    Coxeter::new(g.clone()).with_max_orbit(config.max_orbit),
                ));
            }
        }
        Ok(Fixtures {
            a3: load(A3_GRAPH)?,
            graphs,
        })
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, what: impl FnOnce() -> String, outcome: Result<bool>) {
        self.cases += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failures.push(what()),
            Err(e) => self.failures.push(format!("{}: error[{}] {e}", what(), e.code())),
        }
    }
}

pub fn random_simple_word<R: Rng + ?Sized>(g: &CoxeterGraph, max_len: usize, rng: &mut R) -> SimpleWord {
    if g.is_empty() {
        return SimpleWord::empty();
    }
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Vertex(rng.gen_range(0..g.len() as u8))).collect()
}

pub fn random_artin_word<R: Rng + ?Sized>(g: &CoxeterGraph, max_len: usize, rng: &mut R) -> ArtinWord {
    random_simple_word(g, max_len, rng)
        .iter()
        .map(|&v| ArtinLetter::new(v, if rng.gen() { Sign::Plus } else { Sign::Minus }))
        .collect()
}

pub fn random_subset<R: Rng + ?Sized>(g: &CoxeterGraph, rng: &mut R) -> VertexSubset {
    VertexSubset::from_vertices(g.vertices().filter(|_| rng.gen()))
}

/// One defining relation of `W` applied at a random site: insert `s s`,
/// delete an adjacent equal pair, or swap an alternating factor of length
/// `m(i, j)`. Returns `w` unchanged only when the graph is empty.
pub fn random_relation<R: Rng + ?Sized>(g: &CoxeterGraph, w: &SimpleWord, rng: &mut R) -> SimpleWord {
    let mut sites: Vec<(usize, usize, Vertex, Vertex)> = Vec::new();
    for start in 0..w.len() {
        for i in g.vertices() {
            for j in g.vertices() {
                if i == j {
                    continue;
                }
                if let Some(m) = g.label(i, j).finite() {
                    let m = m as usize;
                    let alt = (0..m).all(|k| w.get(start + k) == Some(if k % 2 == 0 { &i } else { &j }));
                    if alt {
                        sites.push((start, m, i, j));
                    }
                }
            }
        }
    }
    let deletions: Vec<usize> = (1..w.len()).filter(|&k| w[k] == w[k - 1]).collect();
    let choice = rng.gen_range(0..3);
    let mut out = w.0.clone();
    if choice == 0 && !sites.is_empty() {
        let &(start, m, i, j) = sites.choose(rng).expect("non-empty");
        for k in 0..m {
            out[start + k] = if k % 2 == 0 { j } else { i };
        }
    } else if choice == 1 && !deletions.is_empty() {
        let k = *deletions.choose(rng).expect("non-empty");
        out.drain(k - 1..=k);
    } else if !g.is_empty() {
        let at = rng.gen_range(0..=out.len());
        let v = Vertex(rng.gen_range(0..g.len() as u8));
        out.splice(at..at, [v, v]);
    }
    SimpleWord(out)
}

fn show(cx: &Coxeter, w: &[Vertex]) -> String {
    SimpleWord(w.to_vec()).display(cx.graph()).to_string()
}

fn show_artin(cx: &Coxeter, w: &ArtinWord) -> String {
    w.display(cx.graph()).to_string()
}

fn show_subset(cx: &Coxeter, s: VertexSubset) -> String {
    format!("{{{}}}", cx.graph().subset_names(s).join(","))
}

fn worked_example(cx: &Coxeter, t: &mut Tally) {
    let g = cx.graph();
    let parse = |s: &str| SimpleWord::parse(g, s).expect("fixture words parse");
    let w = parse("a b c a c b");
    let el = |s: &str| cx.canonicalize(&parse(s));
    t.check(
        || "N(a b c a c b) = {b, a b a}".into(),
        (|| Ok(n_set(cx, &w)? == BTreeSet::from([el("b")?, el("a b a")?])))(),
    );
    t.check(|| "length of a b c a c b is 2".into(), cx.length_of(&w).map(|l| l == 2));
    t.check(
        || "canonical form of a b c a c b is b a".into(),
        cx.canonicalize(&w).map(|x| *x.word() == parse("b a")),
    );
    t.check(
        || "reflection elements of a b c a c b".into(),
        (|| {
            let got: Vec<CoxElement> = reflection_sequence(cx, &w)?.elements().cloned().collect();
            let expected = ["a", "a b a", "a b c b a", "b", "a b c b a", "a"]
                .iter()
                .map(|s| el(s))
                .collect::<Result<Vec<_>>>()?;
            Ok(got == expected && got[2] == got[4] && got[5] == cx.generator(g.vertex("a")?))
        })(),
    );
}

fn exhaustive_words(g: &CoxeterGraph, max_len: usize) -> Vec<SimpleWord> {
    let mut out = vec![SimpleWord::empty()];
    let mut frontier = vec![SimpleWord::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for v in g.vertices() {
                let mut x = w.0.clone();
                x.push(v);
                next.push(SimpleWord(x));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn oracle_suite(fx: &Fixtures, config: &VerifyConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for (name, cx) in &fx.graphs {
        let Some(model) = perm_model(cx.graph()) else {
            continue;
        };
        oracle_on(name, cx, &model, config, rng, t);
    }
}

fn oracle_on(name: &str, cx: &Coxeter, model: &PermModel, config: &VerifyConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let g = cx.graph();
    let words = exhaustive_words(g, config.oracle_exhaustive_len);
    let canon: Vec<Result<CoxElement>> = words.iter().map(|w| cx.canonicalize(w)).collect();
    let perms: Vec<_> = words.iter().map(|w| model.eval(w)).collect();
    for (k, w) in words.iter().enumerate() {
        t.check(
            || format!("{name}: length of `{}`", show(cx, w)),
            canon[k].as_ref().map(|c| c.length() == oracle_length(model, w)).map_err(Clone::clone),
        );
    }
    // Every ordered pair, counted as one case per word so the report stays
    // readable; any mismatching pair is listed.
    for a in 0..words.len() {
        let mut bad = None;
        for b in 0..words.len() {
            let (Ok(x), Ok(y)) = (&canon[a], &canon[b]) else {
                continue;
            };
            if (x == y) != (perms[a] == perms[b]) {
                bad = Some(b);
                break;
            }
        }
        t.check(
            || match bad {
                Some(b) => format!(
                    "{name}: equality of `{}` and `{}`",
                    show(cx, &words[a]),
                    show(cx, &words[b])
                ),
                None => String::new(),
            },
            canon[a].as_ref().map(|_| bad.is_none()).map_err(Clone::clone),
        );
    }
    for _ in 0..config.oracle_random_pairs {
        let u = random_simple_word(g, 12, rng);
        let v = random_simple_word(g, 12, rng);
        t.check(
            || format!("{name}: `{}` vs `{}`", show(cx, &u), show(cx, &v)),
            (|| {
                Ok(cx.equal(&u, &v)? == oracle_equal(model, &u, &v)
                    && cx.length_of(&u)? == oracle_length(model, &u)
                    && cx.length_of(&v)? == oracle_length(model, &v))
            })(),
        );
    }
}

fn nset_suite(fx: &Fixtures, config: &VerifyConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for (name, cx) in &fx.graphs {
        let g = cx.graph();
        for _ in 0..config.nset_cases {
            let w = random_simple_word(g, 10, rng);
            let mut w2 = w.clone();
            for _ in 0..rng.gen_range(1..=4) {
                w2 = random_relation(g, &w2, rng);
            }
            t.check(
                || format!("{name}: N(`{}`) vs N(`{}`)", show(cx, &w), show(cx, &w2)),
                (|| Ok(n_set(cx, &w)? == n_set(cx, &w2)?))(),
            );
        }
        for _ in 0..config.nset_cases {
            let w = random_simple_word(g, 12, rng);
            t.check(
                || format!("{name}: N-set of `{}`", show(cx, &w)),
                (|| {
                    let len = cx.length_of(&w)?;
                    let elements: Vec<CoxElement> = reflection_sequence(cx, &w)?.elements().cloned().collect();
                    let distinct = elements.iter().collect::<BTreeSet<_>>().len() == elements.len();
                    Ok(n_set(cx, &w)?.len() == len && (len == w.len()) == distinct)
                })(),
            );
        }
    }
}

fn retraction_case(cx: &Coxeter, w: &ArtinWord, w2: &ArtinWord, x: VertexSubset, y: VertexSubset) -> Result<Option<&'static str>> {
    let out = retract(cx, w, x)?;
    if out.len() > w.len() || (out.len() == w.len()) != w.is_on(x) || (w.is_on(x) && out != *w) {
        return Ok(Some("length law"));
    }
    let whole = retract(cx, &(w * w2), x)?;
    if whole.len() < out.len() || whole[..out.len()] != out[..] {
        return Ok(Some("prefix"));
    }
    let positive: ArtinWord = w.iter().map(|l| ArtinLetter::new(l.vertex, Sign::Plus)).collect();
    if !retract(cx, &positive, x)?.is_positive() {
        return Ok(Some("positivity"));
    }
    let on_x: ArtinWord = w.iter().copied().filter(|l| x.contains(l.vertex)).collect();
    let colored = w * &kappa(&cx.canonicalize(&w.theta_star())?).word.invert();
    for left in [on_x, colored] {
        if retract(cx, &(&left * w2), x)? != &retract(cx, &left, x)? * &retract(cx, w2, x)? {
            return Ok(Some("multiplicativity"));
        }
    }
    let on_y: ArtinWord = w.iter().copied().filter(|l| y.contains(l.vertex)).collect();
    let restricted = retract(cx, &on_y, x)?;
    if !restricted.is_on(x.intersection(y)) || retract_within(cx, &on_y, y, x)? != restricted {
        return Ok(Some("support restriction"));
    }
    let direct = retract(cx, w, x.intersection(y))?;
    if retract(cx, &retract(cx, w, y)?, x)? != direct || retract(cx, &out, y)? != direct {
        return Ok(Some("composition"));
    }
    if retract(cx, &retract(cx, w, x.union(y))?, x)? != out {
        return Ok(Some("nested composition"));
    }
    theta_split_check(cx, w, x)?;
    if retract_hat(cx, w, x)? != out {
        return Ok(Some("hat route"));
    }
    retract_star_audited(cx, w, x)?;
    Ok(None)
}

fn retraction_suite(fx: &Fixtures, config: &VerifyConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for (name, cx) in &fx.graphs {
        let g = cx.graph();
        for _ in 0..config.retraction_words {
            let w = random_artin_word(g, 12, rng);
            let w2 = random_artin_word(g, 8, rng);
            let x = random_subset(g, rng);
            let y = random_subset(g, rng);
            let outcome = retraction_case(cx, &w, &w2, x, y);
            let what = match &outcome {
                Ok(Some(what)) => *what,
                _ => "",
            };
            t.check(
                || {
                    format!(
                        "{name}: {what} for `{}`, `{}`, X={}, Y={}",
                        show_artin(cx, &w),
                        show_artin(cx, &w2),
                        show_subset(cx, x),
                        show_subset(cx, y)
                    )
                },
                outcome.map(|r| r.is_none()),
            );
        }
    }
}

fn stability_suite(fx: &Fixtures, config: &VerifyConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for (name, cx) in &fx.graphs {
        let g = cx.graph();
        for k in 0..config.stability_pairs {
            let w = random_artin_word(g, 12, rng);
            let x = random_subset(g, rng);
            // Uniform moves are mostly insertions; every other case draws
            // from deletions and braid moves only, when there are any.
            let candidates = non_insert_moves(g, &w);
            let moved = if k % 2 == 1 && !candidates.is_empty() {
                candidates
                    .choose(rng)
                    .expect("non-empty")
                    .apply(g, &w)
                    .expect("enumerated moves are legal")
            } else {
                random_move(g, &w, rng).1
            };
            t.check(
                || {
                    format!(
                        "{name}: `{}` -> `{}`, X={}",
                        show_artin(cx, &w),
                        show_artin(cx, &moved),
                        show_subset(cx, x)
                    )
                },
                (|| {
                    let a = retract(cx, &w, x)?;
                    let b = retract(cx, &moved, x)?;
                    Ok(a == b || one_move_apart(g, &a, &b))
                })(),
            );
        }
    }
}

fn all_subsets(g: &CoxeterGraph) -> Vec<VertexSubset> {
    (0..1u64 << g.len()).map(VertexSubset::from_bits).collect()
}

fn intersection_suite(cx: &Coxeter, t: &mut Tally) -> Result<()> {
    let g = cx.graph();
    let model = perm_model(g).ok_or(Error::ModelUnavailable)?;
    let elements = model.elements_with_words();
    let subsets = all_subsets(g);
    for word in elements.values() {
        let w = cx.canonicalize(word)?;
        for &x in &subsets {
            for &y in &subsets {
                t.check(
                    || format!("w=`{}`, X={}, Y={}", show(cx, word), show_subset(cx, x), show_subset(cx, y)),
                    (|| {
                        let data = coxeter_parabolic_intersection(cx, x, y, &w)?;
                        let expected = conjugated_subgroup(&model, data.w1.word(), data.x1);
                        Ok(brute_force_intersection(&model, word, x, y) == expected)
                    })(),
                );
            }
        }
        for i in g.vertices() {
            for j in g.vertices().filter(|&j| j > i) {
                let pair = VertexSubset::from_vertices([i, j]);
                let m = g.label(i, j).finite().unwrap_or(0) as usize;
                for &x in &subsets {
                    t.check(
                        || {
                            format!(
                                "classification of w=`{}`, pair {},{}, X={}",
                                show(cx, word),
                                g.name(i),
                                g.name(j),
                                show_subset(cx, x)
                            )
                        },
                        (|| {
                            let size = brute_force_intersection(&model, word, x, pair).len();
                            Ok(match classify_dihedral(cx, &w, i, j, x)? {
                                DihedralClass::Trivial => size == 1,
                                DihedralClass::SingleReflection(r) => {
                                    size == 2 && brute_force_intersection(&model, word, x, pair)
                                        .contains(&model.eval(r.word()))
                                }
                                DihedralClass::FullDihedral { .. } => size == 2 * m,
                            })
                        })(),
                    );
                }
            }
        }
    }
    Ok(())
}

fn certificate_suite(cx: &Coxeter, t: &mut Tally) -> Result<()> {
    let g = cx.graph();
    let model = perm_model(g).ok_or(Error::ModelUnavailable)?;
    let subsets = all_subsets(g);
    for word in model.elements_with_words().values() {
        let w = cx.canonicalize(word)?;
        for &x in &subsets {
            for &y in &subsets {
                t.check(
                    || format!("w=`{}`, X={}, Y={}", show(cx, word), show_subset(cx, x), show_subset(cx, y)),
                    (|| {
                        let cert = intersect_parabolic_kappa(cx, x, y, &w)?;
                        for &j in cert.pairing.keys() {
                            generator_transport(cx, &cert, j)?;
                        }
                        verify_certificate(cx, &cert)?;
                        let shadow = coxeter_parabolic_intersection(cx, x, y, &w)?;
                        Ok(shadow.w1 == cert.w1_lift.source
                            && shadow.x1 == cert.x1
                            && shadow.y1 == cert.y1
                            && shadow.pairing == cert.pairing)
                    })(),
                );
            }
        }
    }
    Ok(())
}

fn conjreduce_suite(cx: &Coxeter, config: &VerifyConfig, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let g = cx.graph();
    for _ in 0..config.conjreduce_instances {
        let x = random_subset(g, rng);
        let y = random_subset(g, rng);
        let w = random_artin_word(g, 12, rng);
        t.check(
            || format!("X={}, Y={}, `{}`", show_subset(cx, x), show_subset(cx, y), show_artin(cx, &w)),
            (|| {
                let r = conjecture_reduce(cx, x, y, &w)?;
                Ok(is_colored(cx, &r.beta)? && r.new_y.is_subset(y) && r.new_x == y)
            })(),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            seed: 7,
            oracle_random_pairs: 50,
            oracle_exhaustive_len: 3,
            nset_cases: 20,
            retraction_words: 20,
            stability_pairs: 20,
            conjreduce_instances: 20,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn small_run_passes_and_repeats() {
        let a = run(&Suite::ALL, &small()).unwrap();
        assert!(a.passed(), "{a}");
        let b = run(&Suite::ALL, &small()).unwrap();
        assert_eq!(a.to_string(), b.to_string());
    }

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse_list("all").unwrap().len(), 8);
        assert_eq!(Suite::parse_list("nset").unwrap(), [Suite::NSet]);
        assert!(Suite::parse_list("nope").is_none());
    }

    #[test]
    fn relations_preserve_the_element() {
        let cx = Coxeter::new(CoxeterGraph::parse(A3_GRAPH).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let w = random_simple_word(cx.graph(), 8, &mut rng);
            let w2 = random_relation(cx.graph(), &w, &mut rng);
            assert!(cx.equal(&w, &w2).unwrap());
        }
    }
}
