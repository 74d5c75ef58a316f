//! Brute-force oracles shared by the integration tests. Everything here is
//! deliberately naive: exhaustive over labelings, subsets or multisets,
//! and independent of the library's search code.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use stable_koszul::graph::Graph;
use stable_koszul::poset::Poset;
use stable_koszul::toric::SemigroupRing;

/// Every permutation of `0..n`, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                extend(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Least edge mask over all relabelings.
pub fn brute_graph_key(n: usize, adj: &[Vec<bool>], perms: &[Vec<usize>]) -> u32 {
    let pairs = pairs(n);
    perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(_, &(i, j))| adj[p[i]][p[j]])
                .fold(0u32, |m, (k, _)| m | 1 << k)
        })
        .min()
        .unwrap()
}

fn connected(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Isomorphism classes of labeled graphs on `n` vertices, by exhaustive
/// relabeling of all `2^(n choose 2)` edge sets.
pub fn brute_graph_count(n: usize, connected_only: bool) -> usize {
    let pairs = pairs(n);
    let perms = permutations(n);
    let mut keys = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let mut adj = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        if !connected_only || connected(&adj) {
            keys.insert(brute_graph_key(n, &adj, &perms));
        }
    }
    keys.len()
}

/// Isomorphism classes of posets on `n` elements: every assignment of
/// `<`, `>` or incomparable to each pair, kept when transitive, deduped by
/// exhaustive relabeling.
pub fn brute_posets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs = pairs(n);
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut lt = vec![vec![false; n]; n];
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => lt[i][j] = true,
                2 => lt[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !lt[a][b] || (0..n).all(|c| !lt[b][c] || lt[a][c]))
        });
        if !transitive {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| {
                let mut k = 0u64;
                for a in 0..n {
                    for b in 0..n {
                        k = k << 1 | lt[p[a]][p[b]] as u64;
                    }
                }
                k
            })
            .min()
            .unwrap();
        if seen.insert(key) {
            out.push(lt);
        }
    }
    out
}

pub fn poset_from_matrix(lt: &[Vec<bool>]) -> Poset {
    let n = lt.len();
    let rel: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| lt[a][b]).map(move |b| (a, b))).collect();
    Poset::new(n, &rel).unwrap()
}

pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

pub fn is_clique(g: &Graph, s: &[usize]) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| u == v || g.has_edge(u, v)))
}

pub fn is_stable(g: &Graph, s: &[usize]) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| !g.has_edge(u, v)))
}

pub fn brute_alpha(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| is_stable(g, s)).map(|s| s.len()).max().unwrap()
}

pub fn brute_omega(g: &Graph) -> usize {
    subsets(g.n()).filter(|s| is_clique(g, s)).map(|s| s.len()).max().unwrap()
}

pub fn brute_maximal_cliques(g: &Graph) -> BTreeSet<Vec<usize>> {
    subsets(g.n())
        .filter(|s| !s.is_empty() && is_clique(g, s))
        .filter(|s| {
            (0..g.n()).all(|v| s.contains(&v) || !s.iter().all(|&u| g.has_edge(u, v)))
        })
        .collect()
}

/// Least `k` admitting a proper colouring, trying all `k^n` colourings.
pub fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let colour: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
            if g.edges().iter().all(|&(u, v)| colour[u] != colour[v]) {
                return k;
            }
        }
    }
    unreachable!("n colours always suffice")
}

/// Whether some 4-subset induces a graph isomorphic to one of `shapes`
/// (given as 4-vertex edge lists), by trying all 24 bijections.
pub fn brute_has_induced(g: &Graph, shapes: &[&[(usize, usize)]]) -> bool {
    let perms = permutations(4);
    subsets(g.n()).filter(|s| s.len() == 4).any(|s| {
        shapes.iter().any(|shape| {
            perms.iter().any(|p| {
                pairs(4).iter().all(|&(a, b)| {
                    let want = shape.contains(&(a, b)) || shape.contains(&(b, a));
                    g.has_edge(s[p[a]], s[p[b]]) == want
                })
            })
        })
    })
}

pub const C4_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3), (3, 0)];
pub const P4_EDGES: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 3)];
pub const TWO_K2_EDGES: &[(usize, usize)] = &[(0, 1), (2, 3)];

pub fn brute_c4_p4_free(g: &Graph) -> bool {
    !brute_has_induced(g, &[C4_EDGES, P4_EDGES])
}

/// Generator multisets of size `d` over `count` generators, as sorted
/// index lists.
pub fn multisets(count: usize, d: usize) -> Vec<Vec<usize>> {
    fn extend(count: usize, d: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for g in start..count {
            cur.push(g);
            extend(count, d, g, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(count, d, 0, &mut Vec::new(), &mut out);
    out
}

/// Coordinate vector of a generator multiset.
pub fn vector_of(ring: &SemigroupRing, m: &[usize]) -> Vec<u32> {
    let len = ring.dim() + 1;
    let mut v = vec![0u32; len];
    for &g in m {
        for (k, c) in ring.coords(ring.generator(g)).into_iter().enumerate().take(len) {
            v[k] += c as u32;
        }
    }
    v
}

/// Degree-`d` semigroup elements, as plain coordinate vectors.
pub fn brute_level(ring: &SemigroupRing, d: usize) -> HashSet<Vec<u32>> {
    multisets(ring.generator_count(), d).iter().map(|m| vector_of(ring, m)).collect()
}

/// Pairwise principal-ideal intersection criterion evaluated straight from
/// generator multisets, without any lookup tables shared with the library.
pub fn brute_strongly_koszul(ring: &SemigroupRing, degree_bound: usize) -> bool {
    let count = ring.generator_count();
    let levels: Vec<HashSet<Vec<u32>>> = (0..=degree_bound).map(|d| brute_level(ring, d)).collect();
    let gens: Vec<Vec<u32>> = (0..count).map(|g| vector_of(ring, &[g])).collect();
    let sub = |a: &[u32], b: &[u32]| -> Option<Vec<u32>> {
        a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
    };
    let divides = |v: &[u32], w: &[u32], d: usize| sub(v, w).is_some_and(|r| levels[d].contains(&r));
    for i in 0..count {
        for j in i + 1..count {
            let in_both = |v: &[u32], d: usize| divides(v, &gens[i], d - 1) && divides(v, &gens[j], d - 1);
            let quadratic: Vec<&Vec<u32>> = levels[2].iter().filter(|w| in_both(w, 2)).collect();
            for d in 3..=degree_bound {
                for v in &levels[d] {
                    if in_both(v, d) && !quadratic.iter().any(|w| divides(v, w, d - 2)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Arbitrary simple graph on 1..=max_n vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = pairs(n);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

/// Arbitrary graph together with a permutation of its vertices.
pub fn arb_graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

/// Arbitrary poset: a random relation on a random element order, closed
/// transitively (edges only go from lower to higher position, so acyclic).
pub fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = pairs(n);
        (
            proptest::collection::vec(any::<bool>(), pairs.len()),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(bits, perm)| {
                let rel: Vec<(usize, usize)> = pairs
                    .iter()
                    .zip(&bits)
                    .filter(|(_, &b)| b)
                    .map(|(&(i, j), _)| (perm[i], perm[j]))
                    .collect();
                Poset::new(n, &rel).unwrap()
            })
    })
}

/// The four-element posets of the examples: Q1 orients C4, Q2 orients P4.
pub fn q1() -> Poset {
    Poset::new(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

/// Also the four-element example with 1 < 3, 2 < 3, 2 < 4 (elements
/// 0..4 standing for 1..4).
pub fn q2() -> Poset {
    Poset::new(4, &[(0, 2), (1, 2), (1, 3)]).unwrap()
}

