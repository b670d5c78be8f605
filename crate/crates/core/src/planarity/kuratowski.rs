//! Exhaustive search for a subdivision of K5 or K3,3.
//!
//! Branch vertices are chosen among vertices of sufficient degree, then the
//! required pairs are joined one at a time by simple paths whose interior
//! avoids every branch vertex and every previously used vertex. The search
//! is exponential and meant as an independent oracle on small graphs.

use crate::graph::SimpleGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision found in a graph: branch vertices and one path per
/// branch-vertex pair (endpoints included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiSubdivision {
    pub kind: KuratowskiKind,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

struct Search<'a> {
    g: &'a SimpleGraph,
    used: Vec<bool>,
    paths: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn connect_all(&mut self, pairs: &[(usize, usize)]) -> bool {
        let Some((&(a, b), rest)) = pairs.split_first() else {
            return true;
        };
        let mut path = vec![a];
        self.extend(a, b, &mut path, rest)
    }

    fn extend(&mut self, cur: usize, target: usize, path: &mut Vec<usize>, rest: &[(usize, usize)]) -> bool {
        for &w in self.g.neighbors(cur) {
            if w == target {
                path.push(w);
                self.paths.push(path.clone());
                if self.connect_all(rest) {
                    return true;
                }
                self.paths.pop();
                path.pop();
            } else if !self.used[w] {
                self.used[w] = true;
                path.push(w);
                if self.extend(w, target, path, rest) {
                    return true;
                }
                path.pop();
                self.used[w] = false;
            }
        }
        false
    }
}

fn combinations(pool: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if acc.len() == k {
        return f(acc);
    }
    for i in start..pool.len() {
        if pool.len() - i < k - acc.len() {
            break;
        }
        acc.push(pool[i]);
        if combinations(pool, k, i + 1, acc, f) {
            return true;
        }
        acc.pop();
    }
    false
}

fn try_branch(g: &SimpleGraph, branch: &[usize], pairs: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut used = vec![false; g.vertex_count()];
    for &b in branch {
        used[b] = true;
    }
    let mut s = Search {
        g,
        used,
        paths: Vec::new(),
    };
    if s.connect_all(pairs) {
        Some(s.paths)
    } else {
        None
    }
}

/// First subdivision found, trying K5 before K3,3.
pub fn find_kuratowski_subdivision(g: &SimpleGraph) -> Option<KuratowskiSubdivision> {
    let n = g.vertex_count();
    let deg4: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 4).collect();
    let mut found = None;
    combinations(&deg4, 5, 0, &mut Vec::new(), &mut |c| {
        let mut pairs = Vec::new();
        for i in 0..5 {
            for j in (i + 1)..5 {
                pairs.push((c[i], c[j]));
            }
        }
        if let Some(paths) = try_branch(g, c, &pairs) {
            found = Some(KuratowskiSubdivision {
                kind: KuratowskiKind::K5,
                branch: c.to_vec(),
                paths,
            });
            return true;
        }
        false
    });
    if found.is_some() {
        return found;
    }
    let deg3: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    combinations(&deg3, 6, 0, &mut Vec::new(), &mut |c| {
        // The side holding c[0] determines the split.
        for mask in 0u32..32 {
            if mask.count_ones() != 2 {
                continue;
            }
            let mut left = vec![c[0]];
            let mut right = Vec::new();
            for (i, &v) in c[1..].iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(v);
                } else {
                    right.push(v);
                }
            }
            let pairs: Vec<(usize, usize)> = left
                .iter()
                .flat_map(|&a| right.iter().map(move |&b| (a, b)))
                .collect();
            if let Some(paths) = try_branch(g, c, &pairs) {
                let mut branch = left.clone();
                branch.extend(&right);
                found = Some(KuratowskiSubdivision {
                    kind: KuratowskiKind::K33,
                    branch,
                    paths,
                });
                return true;
            }
        }
        false
    });
    found
}

/// Checks that `sub` really is a subdivision contained in `g`. For K3,3 the
/// first three branch vertices form one side.
pub fn verify_subdivision(g: &SimpleGraph, sub: &KuratowskiSubdivision) -> bool {
    let (branch_count, expected) = match sub.kind {
        KuratowskiKind::K5 => (5, 10),
        KuratowskiKind::K33 => (6, 9),
    };
    let mut distinct = sub.branch.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != branch_count || sub.branch.len() != branch_count || sub.paths.len() != expected {
        return false;
    }
    if sub.kind == KuratowskiKind::K33 {
        let left = &sub.branch[..3];
        let crosses = |p: &Vec<usize>| left.contains(&p[0]) != left.contains(&p[p.len() - 1]);
        if !sub.paths.iter().all(|p| p.len() >= 2 && crosses(p)) {
            return false;
        }
    }
    let mut interior_seen = vec![false; g.vertex_count()];
    for p in &sub.paths {
        if p.len() < 2 || !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return false;
        }
        if !sub.branch.contains(&p[0]) || !sub.branch.contains(&p[p.len() - 1]) {
            return false;
        }
        for &x in &p[1..p.len() - 1] {
            if sub.branch.contains(&x) || std::mem::replace(&mut interior_seen[x], true) {
                return false;
            }
        }
    }
    let mut ends: Vec<(usize, usize)> = sub
        .paths
        .iter()
        .map(|p| {
            let (a, b) = (p[0], p[p.len() - 1]);
            (a.min(b), a.max(b))
        })
        .collect();
    ends.sort();
    ends.dedup();
    ends.len() == expected
}
