//! Nice tree decompositions (leaf / introduce / forget / join).

use serde::Serialize;

use super::decomposition::{TdError, TreeDecomposition};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type", content = "vertex")]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Nodes are stored children first, so index order is a bottom-up order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceDecomposition {
    pub fn width(&self) -> usize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Checks the node-type rules and that the bags form a valid decomposition of `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), TdError> {
        let bad = |i: usize, msg: &str| Err(TdError::Nice(format!("node {i}: {msg}")));
        if self.root + 1 != self.nodes.len() {
            return Err(TdError::Nice("root must be the last node".into()));
        }
        if !self.nodes[self.root].bag.is_empty() {
            return bad(self.root, "root bag must be empty");
        }
        let mut parent_count = vec![0; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            if node.bag.windows(2).any(|w| w[0] >= w[1]) {
                return bad(i, "bag not sorted");
            }
            for &c in &node.children {
                if c >= i {
                    return bad(i, "child must precede its parent");
                }
                parent_count[c] += 1;
            }
            let child_bag = |j: usize| &self.nodes[node.children[j]].bag;
            let ok = match node.kind {
                NiceKind::Leaf => node.children.is_empty() && node.bag.is_empty(),
                NiceKind::Introduce(v) => {
                    node.children.len() == 1
                        && !child_bag(0).contains(&v)
                        && with(child_bag(0), v) == node.bag
                }
                NiceKind::Forget(v) => {
                    node.children.len() == 1
                        && child_bag(0).contains(&v)
                        && with(&node.bag, v) == *child_bag(0)
                }
                NiceKind::Join => {
                    node.children.len() == 2
                        && *child_bag(0) == node.bag
                        && *child_bag(1) == node.bag
                }
            };
            if !ok {
                return bad(i, "bag does not match node type");
            }
        }
        if parent_count[..self.root].iter().any(|&p| p != 1) || parent_count[self.root] != 0 {
            return Err(TdError::Nice("nodes do not form a rooted tree".into()));
        }
        self.as_tree_decomposition().validate(g)
    }

    pub fn as_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|x| x.bag.clone()).collect();
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(i, x)| x.children.iter().map(move |&c| (c, i)))
            .collect();
        TreeDecomposition::new(bags, edges)
    }
}

fn with(bag: &[usize], v: usize) -> Vec<usize> {
    let mut out = bag.to_vec();
    let at = out.binary_search(&v).unwrap_or_else(|e| e);
    out.insert(at, v);
    out
}

/// Converts `td`, rooted at bag 0, into nice form of the same width.
///
/// Between a bag and its parent bag, vertices are forgotten before new ones
/// are introduced, so no intermediate bag outgrows the larger of the two.
pub fn make_nice(td: &TreeDecomposition) -> Result<NiceDecomposition, TdError> {
    td.validate_structure()?;
    let adj = td.tree_adjacency();
    let b = td.bags.len();
    // preorder from bag 0
    let mut parent = vec![usize::MAX; b];
    let mut pre = Vec::with_capacity(b);
    let mut stack = vec![0];
    let mut seen = vec![false; b];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        pre.push(x);
        for &y in adj[x].iter().rev() {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut nodes: Vec<NiceNode> = Vec::new();
    let mut push = |kind: NiceKind, bag: Vec<usize>, children: Vec<usize>| -> usize {
        nodes.push(NiceNode { kind, bag, children });
        nodes.len() - 1
    };
    // top node (with exactly the bag's vertices) built for each bag
    let mut top = vec![usize::MAX; b];
    for &x in pre.iter().rev() {
        let bag = td.bags[x].as_slice().to_vec();
        let mut arms = Vec::new();
        for &y in &adj[x] {
            if parent[y] != x {
                continue;
            }
            let mut cur = top[y];
            let mut cur_bag = td.bags[y].as_slice().to_vec();
            for &v in td.bags[y].as_slice() {
                if !td.bags[x].contains(v) {
                    cur_bag.retain(|&w| w != v);
                    cur = push(NiceKind::Forget(v), cur_bag.clone(), vec![cur]);
                }
            }
            for &v in &bag {
                if !cur_bag.contains(&v) {
                    cur_bag = with(&cur_bag, v);
                    cur = push(NiceKind::Introduce(v), cur_bag.clone(), vec![cur]);
                }
            }
            arms.push(cur);
        }
        if arms.is_empty() {
            let mut cur = push(NiceKind::Leaf, vec![], vec![]);
            let mut cur_bag = Vec::new();
            for &v in &bag {
                cur_bag.push(v);
                cur = push(NiceKind::Introduce(v), cur_bag.clone(), vec![cur]);
            }
            arms.push(cur);
        }
        let mut acc = arms[0];
        for &arm in &arms[1..] {
            acc = push(NiceKind::Join, bag.clone(), vec![acc, arm]);
        }
        top[x] = acc;
    }
    let mut cur = top[0];
    let mut cur_bag = td.bags[0].as_slice().to_vec();
    for &v in td.bags[0].as_slice() {
        cur_bag.retain(|&w| w != v);
        cur = push(NiceKind::Forget(v), cur_bag.clone(), vec![cur]);
    }
    Ok(NiceDecomposition { nodes, root: cur })
}

/// Bag of a nice node as a vertex set.
pub fn bag_set(node: &NiceNode) -> VertexSet {
    VertexSet::from(node.bag.clone())
}
