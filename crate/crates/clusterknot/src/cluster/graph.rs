//! Level graphs of mutation classes.
//!
//! Starting from a seed, apply every mutable direction repeatedly and
//! merge seeds at the same depth that differ only by a relabeling of
//! mutable positions. The classes at successive depths, with transition
//! multiplicities counting how many directions carry one class to the
//! next, form a Bratteli diagram.

use std::collections::BTreeMap;

use serde_json::json;

use super::{ClusterError, CoefficientMode, Seed};

/// Mutation classes by depth with multiplicity-labeled transitions.
#[derive(Clone, Debug)]
pub struct BratteliDiagram {
    /// Per level, per node: the representative cluster, printed.
    levels: Vec<Vec<Vec<String>>>,
    /// Per level `l`: edges `(from node in l, to node in l+1, multiplicity)`.
    edges: Vec<Vec<(usize, usize, u32)>>,
}

impl BratteliDiagram {
    /// Number of mutation steps, one less than the number of levels.
    pub fn depth(&self) -> usize {
        self.edges.len()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// Representative cluster entries for each node at `level`.
    pub fn level_nodes(&self, level: usize) -> &[Vec<String>] {
        &self.levels[level]
    }

    /// Edges from `level` to `level + 1`.
    pub fn edges_between(&self, level: usize) -> &[(usize, usize, u32)] {
        &self.edges[level]
    }

    /// Multiplicity-weighted out-degrees of the nodes at `level`.
    pub fn out_degrees(&self, level: usize) -> Vec<u32> {
        let mut out = vec![0; self.levels[level].len()];
        for &(from, _, m) in &self.edges[level] {
            out[from] += m;
        }
        out
    }

    /// Multiplicity-weighted in-degrees of the nodes at `level`, counting
    /// edges arriving from `level - 1`. Level 0 has none.
    pub fn in_degrees(&self, level: usize) -> Vec<u32> {
        let mut degrees = vec![0; self.levels[level].len()];
        if level == 0 {
            return degrees;
        }
        for &(_, to, m) in &self.edges[level - 1] {
            degrees[to] += m;
        }
        degrees
    }

    /// Graphviz rendering with one subgraph per level; edges with
    /// multiplicity above one carry it as a label.
    pub fn to_dot(&self) -> String {
        let mut dot = String::from("digraph bratteli {\n  rankdir=TB;\n");
        for (level, nodes) in self.levels.iter().enumerate() {
            dot.push_str(&format!(
                "  subgraph cluster_level_{level} {{\n    label=\"level {level}\";\n    rank=same;\n"
            ));
            for i in 0..nodes.len() {
                dot.push_str(&format!("    n{level}_{i} [label=\"{level}.{i}\"];\n"));
            }
            dot.push_str("  }\n");
        }
        for (level, level_edges) in self.edges.iter().enumerate() {
            for &(from, to, mult) in level_edges {
                if mult > 1 {
                    dot.push_str(&format!(
                        "  n{level}_{from} -> n{}_{to} [label=\"{mult}\"];\n",
                        level + 1
                    ));
                } else {
                    dot.push_str(&format!("  n{level}_{from} -> n{}_{to};\n", level + 1));
                }
            }
        }
        dot.push_str("}\n");
        dot
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "level_sizes": self.level_sizes(),
            "levels": self.levels,
            "edges": self.edges.iter().map(|level| {
                level.iter().map(|&(f, t, m)| json!([f, t, m])).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// Expands `depth` rounds of mutation from `seed`, merging relabeled
/// seeds level by level.
pub fn mutation_graph(seed: &Seed, depth: usize) -> Result<BratteliDiagram, ClusterError> {
    let mut levels = vec![vec![cluster_strings(seed)]];
    let mut edges = Vec::new();
    let mut current = vec![seed.clone()];

    for _ in 0..depth {
        let mut reps: Vec<Seed> = Vec::new();
        let mut index_of: BTreeMap<String, usize> = BTreeMap::new();
        let mut level_edges: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (from, rep) in current.iter().enumerate() {
            for direction in rep.mutable_directions() {
                let child = rep.mutate_seed(direction)?;
                let key = canonical_key(&child);
                let to = *index_of.entry(key).or_insert_with(|| {
                    reps.push(child);
                    reps.len() - 1
                });
                *level_edges.entry((from, to)).or_insert(0) += 1;
            }
        }
        levels.push(reps.iter().map(cluster_strings).collect());
        edges.push(
            level_edges
                .into_iter()
                .map(|((f, t), m)| (f, t, m))
                .collect(),
        );
        current = reps;
    }

    Ok(BratteliDiagram { levels, edges })
}

fn cluster_strings(seed: &Seed) -> Vec<String> {
    seed.cluster().iter().map(|x| x.to_string()).collect()
}

/// A string that two seeds share exactly when one is the other with its
/// mutable positions relabeled: the minimum over such relabelings of the
/// serialized matrix, cluster, and (for universal coefficients) the
/// coefficient tuple.
fn canonical_key(seed: &Seed) -> String {
    let n = seed.rank();
    let mutable: Vec<usize> = (0..n).filter(|i| !seed.frozen_set().contains(i)).collect();
    let include_coeffs = seed.mode() == CoefficientMode::Universal;

    let cluster: Vec<String> = seed.cluster().iter().map(|x| x.to_string()).collect();
    let coeffs: Vec<String> = if include_coeffs {
        seed.coeffs().iter().map(|c| c.to_string()).collect()
    } else {
        Vec::new()
    };

    let mut best: Option<String> = None;
    for perm in permutations(&mutable) {
        let mut p: Vec<usize> = (0..n).collect();
        for (slot, &target) in perm.iter().enumerate() {
            p[mutable[slot]] = target;
        }

        let mut s = String::new();
        for i in 0..n {
            for j in 0..n {
                // entry of the relabeled matrix at (i, j)
                let oi = p.iter().position(|&v| v == i).unwrap();
                let oj = p.iter().position(|&v| v == j).unwrap();
                s.push_str(&seed.matrix().get(oi, oj).to_string());
                s.push(',');
            }
            s.push(';');
        }
        s.push('|');
        for i in 0..n {
            let oi = p.iter().position(|&v| v == i).unwrap();
            s.push_str(&cluster[oi]);
            s.push('\u{1f}');
        }
        if include_coeffs {
            s.push('|');
            for i in 0..n {
                let oi = p.iter().position(|&v| v == i).unwrap();
                s.push_str(&coeffs[oi]);
                s.push('\u{1f}');
            }
        }
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    }
    best.expect("at least the identity relabeling")
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}
