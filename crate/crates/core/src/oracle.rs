//! Permutation models of small finite Coxeter groups, used as ground truth.
//!
//! Nothing here goes through the braid-orbit machinery except
//! [`enumerate_group`], which enumerates the group by canonical forms.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::coxeter::{CoxElement, Coxeter};
use crate::error::{Error, Result};
use crate::presentation::{CoxeterGraph, Vertex, VertexSubset};

/// A permutation of `0..n`, as the image list.
pub type Perm = Vec<u8>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// Disjoint chains with all other labels 2, acting by adjacent
    /// transpositions on consecutive blocks of points.
    TypeA,
    /// One edge with label `m`, acting on the vertices of an `m`-gon.
    Dihedral(u32),
}

#[derive(Debug, Clone)]
pub struct PermModel {
    pub kind: ModelKind,
    pub degree: usize,
    /// Indexed by vertex.
    pub generators: Vec<Perm>,
    /// Word length of each element; only filled for dihedral models.
    distances: HashMap<Perm, usize>,
}

fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

/// `p ∘ q`: apply `q` first.
pub fn compose(p: &[u8], q: &[u8]) -> Perm {
    q.iter().map(|&x| p[x as usize]).collect()
}

pub fn invert(p: &[u8]) -> Perm {
    let mut out = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

fn order(p: &[u8]) -> usize {
    let id = identity(p.len());
    let mut q = p.to_vec();
    let mut k = 1;
    while q != id {
        q = compose(&q, p);
        k += 1;
    }
    k
}

fn transposition(n: usize, a: usize, b: usize) -> Perm {
    let mut p = identity(n);
    p.swap(a, b);
    p
}

fn chains(g: &CoxeterGraph) -> Option<Vec<Vec<Vertex>>> {
    let n = g.len();
    let neighbours = |v: Vertex| {
        g.vertices()
            .filter(move |&u| u != v && g.label(u, v).finite() == Some(3))
            .collect::<Vec<_>>()
    };
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in g.vertices() {
        if seen[start.index()] || neighbours(start).len() > 1 {
            continue;
        }
        let mut chain = vec![start];
        seen[start.index()] = true;
        let mut prev = None;
        let mut cur = start;
        while let Some(&next) = neighbours(cur).iter().find(|&&u| Some(u) != prev) {
            if seen[next.index()] || neighbours(next).len() > 2 {
                return None;
            }
            seen[next.index()] = true;
            chain.push(next);
            prev = Some(cur);
            cur = next;
        }
        out.push(chain);
    }
    // Anything unvisited sits on a cycle.
    seen.iter().all(|&s| s).then_some(out)
}

fn type_a(g: &CoxeterGraph) -> Option<(usize, Vec<Perm>)> {
    let chains = chains(g)?;
    let degree = chains.iter().map(|c| c.len() + 1).sum();
    let mut generators = vec![Vec::new(); g.len()];
    let mut base = 0;
    for chain in &chains {
        for (k, v) in chain.iter().enumerate() {
            generators[v.index()] = transposition(degree, base + k, base + k + 1);
        }
        base += chain.len() + 1;
    }
    Some((degree, generators))
}

fn dihedral(g: &CoxeterGraph) -> Option<(u32, Vec<Perm>)> {
    if g.len() != 2 {
        return None;
    }
    let m = g.label(Vertex(0), Vertex(1)).finite()?;
    let n = m as usize;
    let reflect = |c: usize| (0..n).map(|x| ((c + n - x) % n) as u8).collect::<Perm>();
    Some((m, vec![reflect(0), reflect(1)]))
}

/// A faithful permutation model of `W_Γ`, when `Γ` is a disjoint union of
/// type-A chains or a single finite edge.
pub fn perm_model(g: &CoxeterGraph) -> Option<PermModel> {
    let candidates = [
        type_a(g).map(|(degree, gens)| (ModelKind::TypeA, degree, gens)),
        dihedral(g).map(|(m, gens)| (ModelKind::Dihedral(m), m as usize, gens)),
    ];
    let (kind, degree, generators) = candidates
        .into_iter()
        .flatten()
        .find(|(_, _, gens)| respects_labels(g, gens))?;
    let mut model = PermModel {
        kind,
        degree,
        generators,
        distances: HashMap::new(),
    };
    if let ModelKind::Dihedral(_) = kind {
        model.distances = model
            .bfs(VertexSubset::from_bits((1 << g.len()) - 1), usize::MAX)
            .expect("dihedral groups are small");
    }
    Some(model)
}

fn respects_labels(g: &CoxeterGraph, gens: &[Perm]) -> bool {
    g.vertices().all(|i| {
        g.vertices().all(|j| {
            g.label(i, j).finite().map(|m| m as usize)
                == Some(order(&compose(&gens[i.index()], &gens[j.index()])))
        })
    })
}

impl PermModel {
    pub fn identity(&self) -> Perm {
        identity(self.degree)
    }

    pub fn eval(&self, w: &[Vertex]) -> Perm {
        w.iter()
            .fold(self.identity(), |p, v| compose(&p, &self.generators[v.index()]))
    }

    /// Distances from the identity in the subgroup generated by `subset`.
    fn bfs(&self, subset: VertexSubset, cap: usize) -> Result<HashMap<Perm, usize>> {
        let mut dist = HashMap::from([(self.identity(), 0)]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(p) = queue.pop_front() {
            let d = dist[&p];
            for v in subset.iter() {
                let q = compose(&p, &self.generators[v.index()]);
                if !dist.contains_key(&q) {
                    if dist.len() >= cap {
                        return Err(Error::GroupTooLargeOrInfinite(cap));
                    }
                    dist.insert(q.clone(), d + 1);
                    queue.push_back(q);
                }
            }
        }
        Ok(dist)
    }

    /// All elements of the subgroup generated by `subset`.
    pub fn subgroup(&self, subset: VertexSubset) -> BTreeSet<Perm> {
        self.bfs(subset, usize::MAX)
            .expect("models are finite")
            .into_keys()
            .collect()
    }

    /// The whole group, each element with one shortest word.
    pub fn elements_with_words(&self) -> BTreeMap<Perm, Vec<Vertex>> {
        let gens: Vec<Vertex> = (0..self.generators.len() as u8).map(Vertex).collect();
        let mut out = BTreeMap::from([(self.identity(), Vec::new())]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(p) = queue.pop_front() {
            let word = out[&p].clone();
            for &v in &gens {
                let q = compose(&p, &self.generators[v.index()]);
                if !out.contains_key(&q) {
                    let mut next = word.clone();
                    next.push(v);
                    out.insert(q.clone(), next);
                    queue.push_back(q);
                }
            }
        }
        out
    }
}

pub fn oracle_equal(model: &PermModel, a: &[Vertex], b: &[Vertex]) -> bool {
    model.eval(a) == model.eval(b)
}

/// Inversion count for type-A models, BFS distance for dihedral ones.
pub fn oracle_length(model: &PermModel, w: &[Vertex]) -> usize {
    let p = model.eval(w);
    match model.kind {
        ModelKind::TypeA => (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count(),
        ModelKind::Dihedral(_) => model.distances[&p],
    }
}

/// `g·W_S·g⁻¹` as a set of permutations.
pub fn conjugated_subgroup(model: &PermModel, g: &[Vertex], subset: VertexSubset) -> BTreeSet<Perm> {
    let p = model.eval(g);
    let pi = invert(&p);
    model
        .subgroup(subset)
        .iter()
        .map(|h| compose(&compose(&p, h), &pi))
        .collect()
}

/// `w·W_Y·w⁻¹ ∩ W_X` by enumeration.
pub fn brute_force_intersection(
    model: &PermModel,
    w: &[Vertex],
    x: VertexSubset,
    y: VertexSubset,
) -> BTreeSet<Perm> {
    let wx = model.subgroup(x);
    conjugated_subgroup(model, w, y)
        .into_iter()
        .filter(|p| wx.contains(p))
        .collect()
}

/// Breadth-first closure of the identity under right multiplication by
/// generators, by canonical forms.
pub fn enumerate_group(cx: &Coxeter, cap: usize) -> Result<BTreeSet<CoxElement>> {
    let mut seen = BTreeSet::from([CoxElement::identity()]);
    let mut queue = VecDeque::from([CoxElement::identity()]);
    while let Some(x) = queue.pop_front() {
        for v in cx.graph().vertices() {
            let y = cx.mul_right(&x, v)?;
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::GroupTooLargeOrInfinite(cap));
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// The model for `cx`'s graph, or [`Error::ModelUnavailable`].
pub fn require_model(cx: &Coxeter) -> Result<PermModel> {
    perm_model(cx.graph()).ok_or(Error::ModelUnavailable)
}
