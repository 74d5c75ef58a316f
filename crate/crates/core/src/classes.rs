//! Graph-class recognizers. Each follows its own definition; the test
//! suite is where characterizations are compared against each other.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use crate::error::{ensure_at_most, Result};
use crate::graph::Graph;
use crate::invariants::{chromatic_number, clique_number, maximal_cliques, stability_number};
use crate::poset::{PatternKind, Poset};
use crate::vertex_set::VertexSet;

pub const TRIVIALLY_PERFECT_MAX_VERTICES: usize = 8;
pub const PERFECT_MAX_VERTICES: usize = 7;
pub const ORIENTATION_MAX_VERTICES: usize = 7;

/// Shape of the subgraph induced on four vertices, up to isomorphism,
/// for the three shapes the recognizers care about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourVertexShape {
    C4,
    P4,
    TwoK2,
    Other,
}

pub fn four_vertex_shape(g: &Graph, quad: [usize; 4]) -> FourVertexShape {
    let set: VertexSet = quad.into_iter().collect();
    let mut degrees: Vec<usize> = quad
        .iter()
        .map(|&v| g.neighbors(v).intersection(set).len())
        .collect();
    degrees.sort_unstable();
    match degrees.as_slice() {
        [2, 2, 2, 2] => FourVertexShape::C4,
        [1, 1, 2, 2] => FourVertexShape::P4,
        [1, 1, 1, 1] => FourVertexShape::TwoK2,
        _ => FourVertexShape::Other,
    }
}

/// First 4-subset (lexicographic) whose induced shape is in `shapes`.
pub fn find_induced_shape(g: &Graph, shapes: &[FourVertexShape]) -> Option<[usize; 4]> {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [a, b, c, d];
                    if shapes.contains(&four_vertex_shape(g, quad)) {
                        return Some(quad);
                    }
                }
            }
        }
    }
    None
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let s = side[u].unwrap();
            for v in g.neighbors(u) {
                match side[v] {
                    None => {
                        side[v] = Some(!s);
                        queue.push_back(v);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Some single vertex deletion leaves a bipartite graph. `K1` qualifies.
pub fn is_almost_bipartite(g: &Graph) -> bool {
    if g.n() == 1 {
        return true;
    }
    (0..g.n()).any(|v| is_bipartite(&g.delete_vertex(v).expect("n >= 2")))
}

pub fn is_c4_p4_free(g: &Graph) -> bool {
    find_induced_shape(g, &[FourVertexShape::C4, FourVertexShape::P4]).is_none()
}

/// `α = m` on every nonempty induced subgraph.
pub fn is_trivially_perfect_by_definition(g: &Graph) -> Result<bool> {
    ensure_at_most("trivially perfect check vertex count", g.n(), TRIVIALLY_PERFECT_MAX_VERTICES)?;
    for w in g.vertices().subsets().skip(1) {
        let sub = g.induced_subgraph(w)?;
        if stability_number(&sub) != maximal_cliques(&sub).len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ω = χ` on every nonempty induced subgraph.
pub fn is_perfect_desk(g: &Graph) -> Result<bool> {
    ensure_at_most("perfection check vertex count", g.n(), PERFECT_MAX_VERTICES)?;
    for w in g.vertices().subsets().skip(1) {
        let sub = g.induced_subgraph(w)?;
        if clique_number(&sub) != chromatic_number(&sub) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reducible to `K1` by repeatedly deleting an isolated vertex or a
/// dominating vertex, i.e. buildable by adding isolated vertices and
/// taking suspensions (one new vertex joined to everything).
pub fn is_threshold_constructive(g: &Graph) -> bool {
    let mut current = g.clone();
    while current.n() > 1 {
        let n = current.n();
        let removable = (0..n).find(|&v| {
            let d = current.degree(v);
            d == 0 || d == n - 1
        });
        match removable {
            Some(v) => current = current.delete_vertex(v).expect("n >= 2"),
            None => return false,
        }
    }
    true
}

pub fn is_threshold_forbidden(g: &Graph) -> bool {
    use FourVertexShape::*;
    find_induced_shape(g, &[C4, P4, TwoK2]).is_none()
}

/// Visits every transitive orientation of `g`. The visitor receives the
/// strict-order rows (`rows[u]` = vertices oriented above `u`).
pub fn for_each_transitive_orientation<F>(g: &Graph, mut visit: F) -> Result<()>
where
    F: FnMut(&[VertexSet]) -> ControlFlow<()>,
{
    ensure_at_most("orientation search vertex count", g.n(), ORIENTATION_MAX_VERTICES)?;
    let edges = g.edges();
    let mut state = Orienter {
        g,
        up: vec![VertexSet::EMPTY; g.n()],
    };
    let _ = state.search(&edges, 0, &mut visit);
    Ok(())
}

struct Orienter<'a> {
    g: &'a Graph,
    up: Vec<VertexSet>,
}

impl Orienter<'_> {
    fn oriented(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b) || self.up[b].contains(a)
    }

    /// Orients `a -> b` and everything transitivity forces from it.
    /// Returns false on contradiction; the caller restores `up`.
    fn assign(&mut self, a: usize, b: usize) -> bool {
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            if self.up[x].contains(y) {
                continue;
            }
            if self.up[y].contains(x) {
                return false;
            }
            self.up[x].insert(y);
            // w -> x -> y forces w -> y; x -> y -> z forces x -> z.
            let below_x: Vec<usize> = (0..self.g.n()).filter(|&w| self.up[w].contains(x)).collect();
            for w in below_x {
                if !self.g.has_edge(w, y) {
                    return false;
                }
                queue.push((w, y));
            }
            for z in self.up[y] {
                if !self.g.has_edge(x, z) {
                    return false;
                }
                queue.push((x, z));
            }
        }
        true
    }

    fn search<F>(&mut self, edges: &[(usize, usize)], k: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[VertexSet]) -> ControlFlow<()>,
    {
        let Some(pos) = (k..edges.len()).find(|&i| !self.oriented(edges[i].0, edges[i].1)) else {
            return visit(&self.up);
        };
        let (u, v) = edges[pos];
        for (a, b) in [(u, v), (v, u)] {
            let saved = self.up.clone();
            if self.assign(a, b) {
                self.search(edges, pos + 1, visit)?;
            }
            self.up = saved;
        }
        ControlFlow::Continue(())
    }
}

/// All transitive orientations as posets, order duals included. Empty iff
/// `g` is not a comparability graph.
pub fn transitive_orientations(g: &Graph) -> Result<Vec<Poset>> {
    let mut out = Vec::new();
    for_each_transitive_orientation(g, |rows| {
        out.push(Poset::from_closed(rows.to_vec()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn is_comparability(g: &Graph) -> Result<bool> {
    any_orientation(g, |_| true)
}

/// Some transitive orientation avoids the X pattern.
pub fn is_hl_comparability(g: &Graph) -> Result<bool> {
    any_orientation(g, |p| p.contains_pattern(PatternKind::X).is_none())
}

/// Some transitive orientation is a rooted forest.
pub fn has_tree_orientation(g: &Graph) -> Result<bool> {
    any_orientation(g, Poset::is_tree_by_definition)
}

fn any_orientation(g: &Graph, mut accept: impl FnMut(&Poset) -> bool) -> Result<bool> {
    let mut found = false;
    for_each_transitive_orientation(g, |rows| {
        if accept(&Poset::from_closed(rows.to_vec())) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}
