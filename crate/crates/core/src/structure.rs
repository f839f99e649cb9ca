//! Autonomous sets, cohorts and the autonomy tree of a finite patchwork.
//!
//! An autonomous set is a nonempty member overlapping no member. Autonomous
//! sets are laminar, so they form a tree under inclusion rooted at Ω. The
//! cohort under a node is its set of children, and every cohort's adjacency
//! graph is complete (with at least three vertices), a path, or edgeless.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::closure::Patchwork;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::setcore::{GroundSet, SetFamily, SubsetMask};

/// Nonempty members overlapping no member, in canonical order.
pub fn autonomous_sets(p: &Patchwork) -> Vec<SubsetMask> {
    let members = p.members();
    members
        .iter()
        .filter(|a| !a.is_empty() && !members.iter().any(|b| a.overlaps(b)))
        .cloned()
        .collect()
}

/// Disjoint nonempty members whose union is a member.
pub fn adjacent(p: &Patchwork, a: &SubsetMask, b: &SubsetMask) -> Result<bool> {
    for m in [a, b] {
        if !p.contains(m) {
            return Err(Error::NotAMember(format!("{m:?}")));
        }
    }
    Ok(is_adjacent(p, a, b))
}

pub(crate) fn is_adjacent(p: &Patchwork, a: &SubsetMask, b: &SubsetMask) -> bool {
    !a.is_empty() && !b.is_empty() && a.is_disjoint(b) && p.contains(&a.union(b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Which of the three cohort shapes a node has.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseLabel {
    /// At least three pairwise adjacent cohort members covering the node.
    CompleteI,
    /// Cohort adjacency is a path, stored from the canonically smaller endpoint.
    PathII(Vec<NodeId>),
    /// No two cohort members adjacent; may have non-cohort elements.
    EdgelessIII,
}

impl CaseLabel {
    pub fn name(&self) -> &'static str {
        match self {
            CaseLabel::CompleteI => "complete",
            CaseLabel::PathII(_) => "path",
            CaseLabel::EdgelessIII => "edgeless",
        }
    }

    /// Equality that treats a path and its reversal as the same label.
    pub fn same_as(&self, other: &CaseLabel) -> bool {
        match (self, other) {
            (CaseLabel::PathII(a), CaseLabel::PathII(b)) => a == b || a.iter().eq(b.iter().rev()),
            _ => self == other,
        }
    }
}

#[derive(Debug, Clone)]
pub struct TreeNode {
    pub mask: SubsetMask,
    pub parent: Option<NodeId>,
    /// The cohort, in canonical order.
    pub children: Vec<NodeId>,
    pub non_cohort: SubsetMask,
    pub label: CaseLabel,
}

/// Laminar tree of the autonomous sets. Nodes are stored in canonical mask
/// order, so the root (Ω) is always last.
#[derive(Debug, Clone)]
pub struct AutonomyTree {
    nodes: Vec<TreeNode>,
    root: NodeId,
}

impl AutonomyTree {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node(&self, id: NodeId) -> &TreeNode {
        &self.nodes[id.0]
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn ids(&self) -> impl Iterator<Item = NodeId> {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn find(&self, mask: &SubsetMask) -> Option<NodeId> {
        self.nodes
            .binary_search_by(|n| n.mask.cmp(mask))
            .ok()
            .map(NodeId)
    }

    /// The least node whose mask contains `mask`.
    pub fn least_containing(&self, mask: &SubsetMask) -> NodeId {
        let mut cur = self.root;
        'descend: loop {
            for &c in &self.node(cur).children {
                if mask.is_subset(&self.node(c).mask) {
                    cur = c;
                    continue 'descend;
                }
            }
            return cur;
        }
    }

    /// Children in the order the label prescribes: path order for
    /// [`CaseLabel::PathII`], canonical order otherwise.
    pub fn ordered_children(&self, id: NodeId) -> &[NodeId] {
        let node = self.node(id);
        match &node.label {
            CaseLabel::PathII(order) => order,
            _ => &node.children,
        }
    }

    pub fn to_json(&self, ground: &GroundSet) -> serde_json::Value {
        self.node_json(ground, self.root)
    }

    fn node_json(&self, ground: &GroundSet, id: NodeId) -> serde_json::Value {
        let node = self.node(id);
        serde_json::json!({
            "set": ground.labels_of(&node.mask),
            "case": node.label.name(),
            "non_cohort": ground.labels_of(&node.non_cohort),
            "children": self
                .ordered_children(id)
                .iter()
                .map(|&c| self.node_json(ground, c))
                .collect::<Vec<_>>(),
        })
    }

    pub fn shape(&self, ground: &GroundSet) -> TreeShape {
        self.node_shape(ground, self.root)
    }

    fn node_shape(&self, ground: &GroundSet, id: NodeId) -> TreeShape {
        let node = self.node(id);
        let kind = match node.label {
            CaseLabel::CompleteI => GraphKind::Complete,
            CaseLabel::PathII(_) => GraphKind::Path,
            CaseLabel::EdgelessIII => GraphKind::Edgeless,
        };
        let children = self
            .ordered_children(id)
            .iter()
            .map(|&c| self.node_shape(ground, c))
            .collect();
        TreeShape::new(kind, ground.labels_of(&node.non_cohort), children)
    }
}

/// Builds the autonomy tree and classifies every node.
pub fn autonomy_tree(p: &Patchwork) -> Result<AutonomyTree> {
    if p.ground().is_empty() {
        return Err(Error::EmptyUniverse);
    }
    let masks = autonomous_sets(p);
    let mut nodes: Vec<TreeNode> = masks
        .iter()
        .map(|m| TreeNode {
            mask: m.clone(),
            parent: None,
            children: Vec::new(),
            non_cohort: m.clone(),
            label: CaseLabel::EdgelessIII,
        })
        .collect();
    // Canonical order sorts by popcount first; the first proper superset
    // found is the least one because supersets of a laminar member form a chain.
    for i in 0..masks.len() {
        if let Some(j) = (i + 1..masks.len()).find(|&j| masks[i].is_subset(&masks[j])) {
            nodes[i].parent = Some(NodeId(j));
            nodes[j].children.push(NodeId(i));
        }
    }
    for i in 0..nodes.len() {
        let mut covered = SubsetMask::empty(p.ground().len());
        for c in &nodes[i].children {
            covered.union_with(&masks[c.0]);
        }
        nodes[i].non_cohort = masks[i].difference(&covered);
    }
    let root = NodeId(nodes.len() - 1);
    debug_assert!(nodes[root.0].mask.is_full());
    let mut tree = AutonomyTree { nodes, root };
    for id in 0..tree.nodes.len() {
        let label = classify_node(p, &tree, NodeId(id))?;
        tree.nodes[id].label = label;
    }
    Ok(tree)
}

/// Adjacency graph on the cohort under `node`; vertex `i` is the node's `i`-th child.
pub fn cohort_adjacency(p: &Patchwork, tree: &AutonomyTree, node: NodeId) -> Graph {
    let ground = p.ground();
    let children = &tree.node(node).children;
    let mut g = Graph::new(
        children
            .iter()
            .map(|&c| ground.render(&tree.node(c).mask))
            .collect(),
    );
    for (i, &a) in children.iter().enumerate() {
        for (j, &b) in children.iter().enumerate().skip(i + 1) {
            if is_adjacent(p, &tree.node(a).mask, &tree.node(b).mask) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Determines which case of the cohort trichotomy `node` falls under.
pub fn classify_node(p: &Patchwork, tree: &AutonomyTree, node: NodeId) -> Result<CaseLabel> {
    let g = cohort_adjacency(p, tree, node);
    if g.edge_count() == 0 {
        return Ok(CaseLabel::EdgelessIII);
    }
    let n = tree.node(node);
    let render = || p.ground().render(&n.mask);
    if !n.non_cohort.is_empty() {
        return Err(Error::NotAPatchwork(format!(
            "cohort under {} has adjacent members but does not cover it",
            render()
        )));
    }
    if !g.is_connected() {
        return Err(Error::NotAPatchwork(format!(
            "adjacency graph of the cohort under {} is disconnected",
            render()
        )));
    }
    if g.vertex_count() >= 3 && g.is_complete() {
        return Ok(CaseLabel::CompleteI);
    }
    match g.path_order() {
        Some(order) => Ok(CaseLabel::PathII(
            order.into_iter().map(|i| n.children[i]).collect(),
        )),
        None => Err(Error::NotAPatchwork(format!(
            "adjacency graph of the cohort under {} is neither complete, a path, nor edgeless",
            render()
        ))),
    }
}

/// The maximal autonomous subsets of a nonempty member `a`, in canonical
/// order. They are pairwise disjoint and cover `a`.
pub fn maximal_autonomous_decomposition(
    p: &Patchwork,
    tree: &AutonomyTree,
    a: &SubsetMask,
) -> Result<Vec<SubsetMask>> {
    if a.is_empty() || !p.contains(a) {
        return Err(Error::NotAMember(p.ground().render(a)));
    }
    let mut out = Vec::new();
    let mut stack = vec![tree.root()];
    while let Some(id) = stack.pop() {
        let node = tree.node(id);
        if node.mask.is_subset(a) {
            out.push(node.mask.clone());
        } else if node.mask.intersects(a) {
            stack.extend(node.children.iter().copied());
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    Complete,
    Path,
    Edgeless,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecNode {
    pub kind: GraphKind,
    #[serde(default)]
    pub labels: Vec<String>,
    #[serde(default)]
    pub children: Vec<SpecNode>,
}

/// A recipe for a finite patchwork: a rooted tree whose nodes carry the
/// shape of their cohort graph and, for edgeless nodes, fresh non-cohort labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeSpec {
    pub node: SpecNode,
}

impl TreeSpec {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        validate_node(&self.node, &mut seen)
    }

    pub fn shape(&self) -> TreeShape {
        node_spec_shape(&self.node)
    }
}

fn validate_node<'a>(
    node: &'a SpecNode,
    seen: &mut std::collections::HashSet<&'a str>,
) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidTreeSpec(msg));
    let k = node.children.len();
    match node.kind {
        GraphKind::Complete if k < 3 => return bad(format!("complete node with {k} children")),
        GraphKind::Path if k < 2 => return bad(format!("path node with {k} children")),
        GraphKind::Complete | GraphKind::Path if !node.labels.is_empty() => {
            return bad("only edgeless nodes may carry labels".into())
        }
        GraphKind::Edgeless if k <= 1 && node.labels.is_empty() => {
            return bad(format!("edgeless node with {k} children needs labels"))
        }
        _ => {}
    }
    for l in &node.labels {
        if !seen.insert(l) {
            return bad(format!("label {l:?} used twice"));
        }
    }
    node.children
        .iter()
        .try_for_each(|c| validate_node(c, seen))
}

fn node_spec_shape(node: &SpecNode) -> TreeShape {
    TreeShape::new(
        node.kind,
        node.labels.clone(),
        node.children.iter().map(node_spec_shape).collect(),
    )
}

/// Order-insensitive description of an autonomy tree, used to compare a
/// tree against the spec it was synthesized from.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TreeShape {
    pub kind: GraphKind,
    pub labels: Vec<String>,
    pub children: Vec<TreeShape>,
}

impl TreeShape {
    fn new(kind: GraphKind, mut labels: Vec<String>, mut children: Vec<TreeShape>) -> Self {
        labels.sort();
        // Two unlabeled edgeless children of a node that they exactly cover
        // are adjacent, so that node is indistinguishable from a 2-path.
        let kind = if kind == GraphKind::Edgeless && labels.is_empty() && children.len() == 2 {
            GraphKind::Path
        } else {
            kind
        };
        match kind {
            GraphKind::Path => {
                let mut rev = children.clone();
                rev.reverse();
                if rev < children {
                    children = rev;
                }
            }
            _ => children.sort(),
        }
        TreeShape {
            kind,
            labels,
            children,
        }
    }
}

/// Builds the patchwork described by `spec`: ∅, Ω, every node's set, and the
/// union of every connected subfamily of every cohort graph.
pub fn synthesize_patchwork(spec: &TreeSpec) -> Result<(GroundSet, Patchwork, AutonomyTree)> {
    spec.validate()?;
    let mut labels = Vec::new();
    collect_labels(&spec.node, &mut labels);
    let ground = GroundSet::new(labels)?;
    let mut members = vec![ground.empty_mask(), ground.full_mask()];
    node_members(&spec.node, &ground, &mut members);
    let family = SetFamily::new(ground.clone(), members)?;
    let count = family.len();
    let (g, sets) = family.into_parts();
    let p = Patchwork::from_members(g, sets, count);
    let tree = autonomy_tree(&p)?;
    Ok((ground, p, tree))
}

fn collect_labels(node: &SpecNode, out: &mut Vec<String>) {
    out.extend(node.labels.iter().cloned());
    for c in &node.children {
        collect_labels(c, out);
    }
}

/// Pushes the sets contributed by `node`'s subtree and returns its own set.
fn node_members(node: &SpecNode, ground: &GroundSet, out: &mut Vec<SubsetMask>) -> SubsetMask {
    let own = ground
        .mask_of(&node.labels)
        .expect("labels were collected from this spec");
    let kids: Vec<SubsetMask> = node
        .children
        .iter()
        .map(|c| node_members(c, ground, out))
        .collect();
    let mut whole = own;
    for k in &kids {
        whole.union_with(k);
    }
    let k = kids.len();
    match node.kind {
        GraphKind::Complete => {
            for pick in 0u64..(1 << k) {
                if pick.count_ones() >= 2 {
                    let mut u = ground.empty_mask();
                    for (i, kid) in kids.iter().enumerate() {
                        if pick >> i & 1 == 1 {
                            u.union_with(kid);
                        }
                    }
                    out.push(u);
                }
            }
        }
        GraphKind::Path => {
            for start in 0..k {
                let mut u = kids[start].clone();
                for kid in &kids[start + 1..] {
                    u.union_with(kid);
                    out.push(u.clone());
                }
            }
        }
        GraphKind::Edgeless => {}
    }
    out.push(whole.clone());
    whole
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{close, is_patchwork};
    use crate::setcore::parse_family;
    use crate::testkit::{interval_example, powerset_example};

    fn triangle() -> Patchwork {
        close(
            &parse_family(r#"{"omega":["x","y","z"],"sets":[["x","y"],["y","z"],["x","z"]]}"#)
                .unwrap(),
        )
    }

    fn mask(p: &Patchwork, labels: &[&str]) -> SubsetMask {
        p.ground().mask_of(labels).unwrap()
    }

    /// Brute-force scan: members overlapping nothing, compared against the
    /// production filter.
    fn brute_autonomous(p: &Patchwork) -> Vec<SubsetMask> {
        let mut out = Vec::new();
        for a in p.members() {
            if a.is_empty() {
                continue;
            }
            let mut ok = true;
            for b in p.members() {
                let meet = !a.intersection(b).is_empty();
                if meet && !a.is_subset(b) && !b.is_subset(a) {
                    ok = false;
                }
            }
            if ok {
                out.push(a.clone());
            }
        }
        out
    }

    #[test]
    fn autonomous_sets_of_fixtures() {
        let p = triangle();
        let auto = autonomous_sets(&p);
        assert_eq!(auto, brute_autonomous(&p));
        assert_eq!(
            auto,
            vec![
                mask(&p, &["x"]),
                mask(&p, &["y"]),
                mask(&p, &["z"]),
                mask(&p, &["x", "y", "z"])
            ]
        );

        let p = close(&parse_family(r#"{"omega":["a","b"],"sets":[["a"]]}"#).unwrap());
        assert_eq!(
            autonomous_sets(&p),
            vec![mask(&p, &["a"]), mask(&p, &["a", "b"])]
        );

        let p = close(&interval_example(3).unwrap());
        assert_eq!(p.len(), 17);
        let auto = autonomous_sets(&p);
        assert_eq!(auto, brute_autonomous(&p));
        let mut expected: Vec<SubsetMask> = ["-2", "-1", "0", "1", "2"]
            .iter()
            .map(|l| mask(&p, &[l]))
            .collect();
        expected.push(mask(&p, &["-2", "-1", "0", "1", "2"]));
        expected.push(p.ground().full_mask());
        assert_eq!(auto, expected);
    }

    #[test]
    fn adjacency() {
        let p = triangle();
        assert!(adjacent(&p, &mask(&p, &["x"]), &mask(&p, &["y"])).unwrap());
        let empty = p.ground().empty_mask();
        assert!(!adjacent(&p, &empty, &mask(&p, &["y"])).unwrap());

        let p = close(&interval_example(3).unwrap());
        assert!(!adjacent(&p, &mask(&p, &["-2"]), &mask(&p, &["0"])).unwrap());
        assert!(adjacent(&p, &mask(&p, &["-2"]), &mask(&p, &["-1"])).unwrap());
        assert!(matches!(
            adjacent(&p, &mask(&p, &["-3", "3"]), &mask(&p, &["0"])),
            Err(Error::NotAMember(_))
        ));
    }

    #[test]
    fn interval_three_tree() {
        let p = close(&interval_example(3).unwrap());
        let t = autonomy_tree(&p).unwrap();
        let root = t.node(t.root());
        assert!(root.mask.is_full());
        assert_eq!(root.non_cohort, mask(&p, &["-3", "3"]));
        assert_eq!(root.children.len(), 1);
        assert_eq!(root.label, CaseLabel::EdgelessIII);
        let mid = root.children[0];
        assert_eq!(t.node(mid).mask, mask(&p, &["-2", "-1", "0", "1", "2"]));
        assert_eq!(t.node(mid).children.len(), 5);

        let g = cohort_adjacency(&p, &t, mid);
        assert_eq!(g.path_order(), Some(vec![0, 1, 2, 3, 4]));
        let order: Vec<SubsetMask> = match classify_node(&p, &t, mid).unwrap() {
            CaseLabel::PathII(o) => o.iter().map(|&c| t.node(c).mask.clone()).collect(),
            other => panic!("{other:?}"),
        };
        let expected: Vec<SubsetMask> = ["-2", "-1", "0", "1", "2"]
            .iter()
            .map(|l| mask(&p, &[l]))
            .collect();
        assert_eq!(order, expected);
        let leaf = t.node(mid).children[0];
        assert_eq!(cohort_adjacency(&p, &t, leaf).vertex_count(), 0);
        assert_eq!(classify_node(&p, &t, leaf).unwrap(), CaseLabel::EdgelessIII);
    }

    #[test]
    fn single_set_tree() {
        let p = close(&parse_family(r#"{"omega":["a","b"],"sets":[["a"]]}"#).unwrap());
        let t = autonomy_tree(&p).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.node(t.root()).non_cohort, mask(&p, &["b"]));
    }

    /// With three generators the points other than the empty subset form an
    /// autonomous set of their own, sitting between Ω and the seven singletons.
    #[test]
    fn powerset_three_tree() {
        let p = close(&powerset_example(3).unwrap());
        let t = autonomy_tree(&p).unwrap();
        let root = t.node(t.root());
        assert_eq!(root.non_cohort, mask(&p, &[""]));
        assert_eq!(root.label, CaseLabel::EdgelessIII);
        assert_eq!(root.children.len(), 1);
        let inner = root.children[0];
        assert_eq!(
            t.node(inner).mask,
            p.ground().full_mask().difference(&mask(&p, &[""]))
        );
        assert_eq!(t.node(inner).children.len(), 7);
        assert!(t.node(inner).non_cohort.is_empty());
        assert_eq!(t.node(inner).label, CaseLabel::CompleteI);
        let g = cohort_adjacency(&p, &t, inner);
        assert!(g.is_complete());
        assert_eq!(g.edge_count(), 21);
    }

    #[test]
    fn powerset_two_tree() {
        let p = close(&powerset_example(2).unwrap());
        assert_eq!(p.len(), 8);
        let t = autonomy_tree(&p).unwrap();
        let inner = t.node(t.root()).children[0];
        assert!(matches!(t.node(inner).label, CaseLabel::PathII(ref o) if o.len() == 3));
        assert_eq!(
            t.nodes().iter().filter(|n| n.children.is_empty()).count(),
            3
        );
    }

    #[test]
    fn empty_universe_is_rejected() {
        let p = close(&parse_family(r#"{"omega":[],"sets":[]}"#).unwrap());
        assert!(matches!(autonomy_tree(&p), Err(Error::EmptyUniverse)));
    }

    #[test]
    fn non_closed_input_is_not_a_patchwork() {
        // A 4-cycle of adjacent singletons; closure would turn it into a clique.
        let f = parse_family(
            r#"{"omega":["a","b","c","d"],"sets":[[],["a"],["b"],["c"],["d"],
                ["a","b"],["b","c"],["c","d"],["a","d"],["a","b","c","d"]]}"#,
        )
        .unwrap();
        assert!(is_patchwork(&f).is_err());
        let n = f.len();
        let (g, sets) = f.into_parts();
        let p = Patchwork::from_members(g, sets, n);
        assert!(matches!(autonomy_tree(&p), Err(Error::NotAPatchwork(_))));
    }

    #[test]
    fn decomposition() {
        let p = triangle();
        let t = autonomy_tree(&p).unwrap();
        let xy = mask(&p, &["x", "y"]);
        assert_eq!(
            maximal_autonomous_decomposition(&p, &t, &xy).unwrap(),
            vec![mask(&p, &["x"]), mask(&p, &["y"])]
        );
        let x = mask(&p, &["x"]);
        assert_eq!(
            maximal_autonomous_decomposition(&p, &t, &x).unwrap(),
            vec![x]
        );

        let p = close(&interval_example(3).unwrap());
        let t = autonomy_tree(&p).unwrap();
        assert_eq!(
            maximal_autonomous_decomposition(&p, &t, &mask(&p, &["-1", "0", "1"])).unwrap(),
            vec![mask(&p, &["-1"]), mask(&p, &["0"]), mask(&p, &["1"])]
        );
        assert!(maximal_autonomous_decomposition(&p, &t, &mask(&p, &["-1", "1"])).is_err());
        assert!(maximal_autonomous_decomposition(&p, &t, &p.ground().empty_mask()).is_err());
    }

    fn spec(text: &str) -> TreeSpec {
        TreeSpec::parse(text).unwrap()
    }

    #[test]
    fn synthesize_examples() {
        let (_, p, t) =
            synthesize_patchwork(&spec(r#"{"node":{"kind":"edgeless","labels":["a"]}}"#)).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(t.len(), 1);

        let s = spec(
            r#"{"node":{"kind":"edgeless","children":[
                {"kind":"edgeless","labels":["a"]},{"kind":"edgeless","labels":["b"]}]}}"#,
        );
        let (_, p, t) = synthesize_patchwork(&s).unwrap();
        assert_eq!(p.len(), 4);
        // {a} ∪ {b} = Ω, so the two leaves are adjacent after all.
        assert!(matches!(t.node(t.root()).label, CaseLabel::PathII(_)));
        assert_eq!(t.shape(p.ground()), s.shape());

        let s = spec(
            r#"{"node":{"kind":"path","children":[
                {"kind":"edgeless","labels":["a"]},{"kind":"edgeless","labels":["b"]},
                {"kind":"edgeless","labels":["c"]}]}}"#,
        );
        let (g, p, t) = synthesize_patchwork(&s).unwrap();
        let expected: Vec<SubsetMask> = [
            vec![],
            vec!["a"],
            vec!["b"],
            vec!["c"],
            vec!["a", "b"],
            vec!["b", "c"],
            vec!["a", "b", "c"],
        ]
        .iter()
        .map(|ls| g.mask_of(ls).unwrap())
        .collect();
        let mut got = p.members().to_vec();
        got.sort();
        let mut exp = expected;
        exp.sort();
        assert_eq!(got, exp);
        assert!(is_patchwork(p.family()).is_ok());
        assert_eq!(t.shape(&g), s.shape());
    }

    #[test]
    fn synthesize_rejects_bad_specs() {
        for bad in [
            r#"{"node":{"kind":"complete","children":[{"kind":"edgeless","labels":["a"]},{"kind":"edgeless","labels":["b"]}]}}"#,
            r#"{"node":{"kind":"path","children":[{"kind":"edgeless","labels":["a"]}]}}"#,
            r#"{"node":{"kind":"edgeless"}}"#,
            r#"{"node":{"kind":"edgeless","labels":["a"],"children":[{"kind":"edgeless","labels":["a"]}]}}"#,
            r#"{"node":{"kind":"path","labels":["z"],"children":[{"kind":"edgeless","labels":["a"]},{"kind":"edgeless","labels":["b"]}]}}"#,
        ] {
            assert!(
                matches!(
                    synthesize_patchwork(&spec(bad)),
                    Err(Error::InvalidTreeSpec(_))
                ),
                "{bad}"
            );
        }
    }

    #[test]
    fn path_labels_compare_up_to_reversal() {
        let a = CaseLabel::PathII(vec![NodeId(0), NodeId(1), NodeId(2)]);
        let b = CaseLabel::PathII(vec![NodeId(2), NodeId(1), NodeId(0)]);
        assert!(a.same_as(&b));
        assert!(!a.same_as(&CaseLabel::PathII(vec![NodeId(1), NodeId(0), NodeId(2)])));
        assert!(!CaseLabel::CompleteI.same_as(&CaseLabel::EdgelessIII));
    }
}
