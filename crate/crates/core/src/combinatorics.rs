//! Partitions, multipartitions and node combinatorics.
//!
//! A multipartition of `r` with `m` components plays the role of a shape
//! for the cyclotomic algebra of rank `r` with `m` cyclotomic parameters.
//! Everything here is exact integer combinatorics: diagrams, duals,
//! dominance, removable/addable nodes and the two canonical fillings of a
//! diagram (row filling and column filling).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A partition: a weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Shape(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of (nonzero) rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part in 1-based row `i`; zero below the last row.
    pub fn part(&self, i: usize) -> usize {
        if (1..=self.0.len()).contains(&i) {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// The dual (conjugate) partition, read off column lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.0.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Removable nodes `(i, lambda_i)`, top to bottom.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        (1..=self.rows())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i, self.part(i)))
            .collect()
    }

    /// Addable nodes `(i, lambda_i + 1)`, top to bottom. Row 1 is always
    /// addable; below that, a row is addable when it is strictly shorter
    /// than the row above. The row just below the diagram is included.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        (1..=self.rows() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| (i, self.part(i) + 1))
            .collect()
    }

    /// True when no part value is repeated `l` or more times.
    pub fn is_l_regular(&self, l: usize) -> bool {
        self.0
            .chunk_by(|a, b| a == b)
            .all(|run| run.len() < l)
    }

    /// Prefix-sum dominance on partitions of equal size.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool, Error> {
        if self.size() != other.size() {
            return Err(Error::Mismatch(format!(
                "dominance needs equal sizes, got {} and {}",
                self.size(),
                other.size()
            )));
        }
        let rows = self.rows().max(other.rows());
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 1..=rows {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", body.join(","))
    }
}

/// A node `(i, j)_k`: row `i`, column `j` of component `k`, all 1-based.
///
/// The derived ordering (component, then row, then column) is the reading
/// order used for listing removable nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub component: usize,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(component: usize, row: usize, col: usize) -> Self {
        Node { component, row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})_{}", self.row, self.col, self.component)
    }
}

/// The interval vector `[a_0, a_1, ..., a_m]` of a multipartition:
/// `a_i` is the total size of the first `i` components (so `a_0 = 0` and
/// `a_m = r`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalVector(pub Vec<usize>);

impl IntervalVector {
    pub fn new(entries: Vec<usize>) -> Result<Self, Error> {
        if entries.first() != Some(&0) {
            return Err(Error::Shape(format!(
                "interval vector must start at 0: {entries:?}"
            )));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Shape(format!(
                "interval vector must be weakly increasing: {entries:?}"
            )));
        }
        Ok(IntervalVector(entries))
    }

    /// Number of intervals (`m`).
    pub fn m(&self) -> usize {
        self.0.len() - 1
    }

    pub fn r(&self) -> usize {
        *self.0.last().unwrap()
    }

    /// The complementary vector `[0, r - a_{m-1}, ..., r - a_1, r]`.
    ///
    /// It is the interval vector of the dual multipartition.
    pub fn dual(&self) -> IntervalVector {
        let r = self.r();
        let mut out = Vec::with_capacity(self.0.len());
        for a in self.0.iter().rev() {
            out.push(r - a);
        }
        IntervalVector(out)
    }
}

impl fmt::Display for IntervalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// An ordered tuple of `m >= 1` partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self, Error> {
        if components.is_empty() {
            return Err(Error::Shape("a multipartition needs at least one component".into()));
        }
        Ok(Multipartition(components))
    }

    pub fn from_parts(parts: &[&[usize]]) -> Result<Self, Error> {
        let comps = parts
            .iter()
            .map(|p| Partition::new(p.to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        Multipartition::new(comps)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// Component `k`, 1-based.
    pub fn component(&self, k: usize) -> &Partition {
        &self.0[k - 1]
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|p| p.size()).sum()
    }

    /// The dual multipartition: reverse the component order and conjugate
    /// each component.
    pub fn dual(&self) -> Multipartition {
        Multipartition(self.0.iter().rev().map(|p| p.conjugate()).collect())
    }

    /// Concatenation of all components into one composition of `r`.
    pub fn concatenated(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in &self.0 {
            out.extend_from_slice(p.parts());
        }
        out
    }

    pub fn interval_vector(&self) -> IntervalVector {
        let mut out = Vec::with_capacity(self.m() + 1);
        let mut acc = 0;
        out.push(0);
        for p in &self.0 {
            acc += p.size();
            out.push(acc);
        }
        IntervalVector(out)
    }

    /// Removable nodes in reading order: components first to last, rows top
    /// to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (k, p) in self.0.iter().enumerate() {
            for (i, j) in p.removable() {
                out.push(Node::new(k + 1, i, j));
            }
        }
        out
    }

    /// Addable nodes in the same reading order.
    pub fn addable_nodes(&self) -> Vec<Node> {
        let mut out = Vec::new();
        for (k, p) in self.0.iter().enumerate() {
            for (i, j) in p.addable() {
                out.push(Node::new(k + 1, i, j));
            }
        }
        out
    }

    pub fn remove_node(&self, node: Node) -> Result<Multipartition, Error> {
        if !self.removable_nodes().contains(&node) {
            return Err(Error::NotRemovable {
                node: node.to_string(),
                shape: self.to_string(),
            });
        }
        let mut comps = self.0.clone();
        let mut parts = comps[node.component - 1].parts().to_vec();
        parts[node.row - 1] -= 1;
        parts.retain(|&p| p > 0);
        comps[node.component - 1] = Partition(parts);
        Ok(Multipartition(comps))
    }

    pub fn add_node(&self, node: Node) -> Result<Multipartition, Error> {
        if !self.addable_nodes().contains(&node) {
            return Err(Error::NotAddable {
                node: node.to_string(),
                shape: self.to_string(),
            });
        }
        let mut comps = self.0.clone();
        let mut parts = comps[node.component - 1].parts().to_vec();
        if node.row > parts.len() {
            parts.push(1);
        } else {
            parts[node.row - 1] += 1;
        }
        comps[node.component - 1] = Partition(parts);
        Ok(Multipartition(comps))
    }

    /// True when every component is `l`-regular. `None` stands for
    /// infinite quantum characteristic, where every shape is regular.
    pub fn is_l_regular(&self, l: Option<usize>) -> bool {
        match l {
            None => true,
            Some(l) => self.0.iter().all(|p| p.is_l_regular(l)),
        }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", body.join("|"))
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Parses the `|`-separated textual form, e.g. `3,1|2,2|1`, where a
    /// bare `0` denotes an empty component.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut comps = Vec::new();
        for chunk in s.split('|') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                return Err(Error::Parse(format!("empty component in {s:?}")));
            }
            if chunk == "0" {
                comps.push(Partition::empty());
                continue;
            }
            let parts = chunk
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            comps.push(Partition::new(parts)?);
        }
        Multipartition::new(comps)
    }
}

#[derive(Serialize, Deserialize)]
struct MultipartitionRepr {
    components: Vec<Vec<usize>>,
}

impl Serialize for Multipartition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        MultipartitionRepr {
            components: self.0.iter().map(|p| p.parts().to_vec()).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = MultipartitionRepr::deserialize(de)?;
        let comps = repr
            .components
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Multipartition::new(comps).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// All multipartitions of `r` with `m` components. Deterministic order:
/// first-component size descending, partitions of each size in reverse
/// lexicographic order, later components recursively by the same rule.
pub fn enumerate_multipartitions(m: usize, r: usize) -> Vec<Multipartition> {
    assert!(m >= 1, "need at least one component");
    fn go(m: usize, r: usize) -> Vec<Vec<Partition>> {
        if m == 1 {
            return partitions_of(r).into_iter().map(|p| vec![p]).collect();
        }
        let mut out = Vec::new();
        for s in (0..=r).rev() {
            for first in partitions_of(s) {
                for rest in go(m - 1, r - s) {
                    let mut tuple = Vec::with_capacity(m);
                    tuple.push(first.clone());
                    tuple.extend(rest);
                    out.push(tuple);
                }
            }
        }
        out
    }
    go(m, r).into_iter().map(Multipartition).collect()
}

/// All interval vectors `0 = a_0 <= a_1 <= ... <= a_m = r`, in
/// lexicographic order.
pub fn enumerate_interval_vectors(m: usize, r: usize) -> Vec<IntervalVector> {
    fn go(left: usize, low: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<IntervalVector>) {
        if left == 0 {
            prefix.push(r);
            out.push(IntervalVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in low..=r {
            prefix.push(a);
            go(left - 1, a, r, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m - 1, 0, r, &mut vec![0], &mut out);
    out
}

/// Dominance on multipartitions of the same size and component count.
///
/// `a` is dominated by `b` when for every `i = 0..m-1` and every prefix
/// length `l`:
/// `sum_{j<=i} a_j + sum_{k<=l} a^{(i+1)}_k <= sum_{j<=i} b_j + sum_{k<=l} b^{(i+1)}_k`
/// where `[a_0..a_m]`, `[b_0..b_m]` are the interval vectors.
pub fn dominance_le(a: &Multipartition, b: &Multipartition) -> Result<bool, Error> {
    if a.m() != b.m() {
        return Err(Error::Mismatch(format!(
            "dominance needs equal component counts, got {} and {}",
            a.m(),
            b.m()
        )));
    }
    if a.size() != b.size() {
        return Err(Error::Mismatch(format!(
            "dominance needs equal sizes, got {} and {}",
            a.size(),
            b.size()
        )));
    }
    let av = a.interval_vector().0;
    let bv = b.interval_vector().0;
    for i in 0..a.m() {
        let abase: usize = av[1..=i].iter().sum();
        let bbase: usize = bv[1..=i].iter().sum();
        let pa = a.component(i + 1);
        let pb = b.component(i + 1);
        let rows = pa.rows().max(pb.rows());
        let mut asum = abase;
        let mut bsum = bbase;
        if asum > bsum {
            return Ok(false);
        }
        for l in 1..=rows {
            asum += pa.part(l);
            bsum += pb.part(l);
            if asum > bsum {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A filling of a multipartition diagram: entry at component `k`, row `i`,
/// column `j` sits at `filling[k-1][i-1][j-1]`.
pub type Filling = Vec<Vec<Vec<usize>>>;

/// The row filling: `1..r` written along the rows of component 1, then
/// component 2, and so on.
pub fn row_filling(mp: &Multipartition) -> Filling {
    let mut next = 1;
    mp.components()
        .iter()
        .map(|p| {
            p.parts()
                .iter()
                .map(|&len| {
                    let row: Vec<usize> = (next..next + len).collect();
                    next += len;
                    row
                })
                .collect()
        })
        .collect()
}

/// The column filling: components are filled from the last one back to the
/// first, and inside a component the numbers run down successive columns,
/// left to right.
pub fn column_filling(mp: &Multipartition) -> Filling {
    let mut out: Filling = mp
        .components()
        .iter()
        .map(|p| p.parts().iter().map(|&len| vec![0; len]).collect())
        .collect();
    let mut next = 1;
    for k in (0..mp.m()).rev() {
        let p = mp.component(k + 1);
        let col_lens = p.conjugate();
        for j in 1..=col_lens.rows() {
            for i in 1..=col_lens.part(j) {
                out[k][i - 1][j - 1] = next;
                next += 1;
            }
        }
    }
    out
}

/// Entries of the column filling at the removable nodes, in node reading
/// order. The resulting sequence is strictly decreasing.
pub fn j_numbers(mp: &Multipartition) -> Vec<usize> {
    let fill = column_filling(mp);
    mp.removable_nodes()
        .iter()
        .map(|n| fill[n.component - 1][n.row - 1][n.col - 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        let p = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 2, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        let q = Partition::new(vec![4, 1]).unwrap();
        assert_eq!(q.conjugate().parts(), &[2, 1, 1, 1]);
    }

    #[test]
    fn conjugate_is_an_involution() {
        for p in partitions_of(7) {
            assert_eq!(p.conjugate().conjugate(), p);
        }
    }

    #[test]
    fn dual_multipartition_example() {
        let l = mp("3,1|2,2|1");
        let expected = mp("1|2,2|2,1,1");
        assert_eq!(l.dual(), expected);
        assert_eq!(l.dual().dual(), l);
    }

    #[test]
    fn dual_is_an_involution() {
        for l in enumerate_multipartitions(3, 4) {
            assert_eq!(l.dual().dual(), l);
        }
    }

    #[test]
    fn concatenation_and_intervals() {
        let l = mp("3,1|2,2|1");
        assert_eq!(l.concatenated(), vec![3, 1, 2, 2, 1]);
        assert_eq!(l.interval_vector().0, vec![0, 4, 8, 9]);
        assert_eq!(l.interval_vector().dual().0, vec![0, 1, 5, 9]);
    }

    #[test]
    fn interval_vector_dual_matches_dual_multipartition() {
        for l in enumerate_multipartitions(3, 5) {
            assert_eq!(l.interval_vector().dual(), l.dual().interval_vector());
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["3,1|2,2|1", "0", "2|0", "0|0|0", "1,1,1"] {
            assert_eq!(mp(s).to_string(), s);
        }
        assert!("".parse::<Multipartition>().is_err());
        assert!("1,2".parse::<Multipartition>().is_err());
        assert!("a|1".parse::<Multipartition>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let l = mp("3,1|2,2|1");
        let text = serde_json::to_string(&l).unwrap();
        assert_eq!(text, r#"{"components":[[3,1],[2,2],[1]]}"#);
        let back: Multipartition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Multipartition>(r#"{"components":[[1,2]]}"#).is_err());
    }

    #[test]
    fn enumeration_order_and_counts() {
        let two_two: Vec<String> = enumerate_multipartitions(2, 2)
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(two_two, ["2|0", "1,1|0", "1|1", "0|2", "0|1,1"]);

        let one_three: Vec<String> = enumerate_multipartitions(1, 3)
            .iter()
            .map(|l| l.to_string())
            .collect();
        assert_eq!(one_three, ["3", "2,1", "1,1,1"]);

        assert_eq!(enumerate_multipartitions(2, 3).len(), 10);
        assert_eq!(enumerate_multipartitions(3, 2).len(), 9);
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_le(&mp("1,1|0"), &mp("2|0")).unwrap());
        assert!(!dominance_le(&mp("2|0"), &mp("1,1|0")).unwrap());
        assert!(dominance_le(&mp("0|2"), &mp("2|0")).unwrap());
        assert!(!dominance_le(&mp("2|0"), &mp("0|2")).unwrap());
        assert!(dominance_le(&mp("2,1"), &mp("3")).unwrap());
        assert!(dominance_le(&mp("1|1"), &mp("2|0")).unwrap());
        assert!(dominance_le(&mp("1|1"), &mp("1|1")).unwrap());
        assert!(dominance_le(&mp("0|2"), &mp("1|1")).unwrap());
        assert!(matches!(
            dominance_le(&mp("1|1"), &mp("3")),
            Err(Error::Mismatch(_))
        ));
        assert!(matches!(
            dominance_le(&mp("1|1"), &mp("1|1,1")),
            Err(Error::Mismatch(_))
        ));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        let all = enumerate_multipartitions(2, 3);
        for a in &all {
            assert!(dominance_le(a, a).unwrap());
            for b in &all {
                let ab = dominance_le(a, b).unwrap();
                let ba = dominance_le(b, a).unwrap();
                if ab && ba {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if ab && dominance_le(b, c).unwrap() {
                        assert!(dominance_le(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_restricted_to_fixed_intervals_is_componentwise() {
        // With equal interval vectors, dominance is exactly componentwise
        // partition dominance.
        for a in enumerate_multipartitions(2, 4) {
            for b in enumerate_multipartitions(2, 4) {
                if a.interval_vector() != b.interval_vector() {
                    continue;
                }
                let comp = (1..=2).all(|k| {
                    a.component(k).dominated_by(b.component(k)).unwrap()
                });
                assert_eq!(dominance_le(&a, &b).unwrap(), comp, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn removable_and_addable_nodes() {
        let l = mp("3,1|2,2|1");
        let rem: Vec<String> = l.removable_nodes().iter().map(|n| n.to_string()).collect();
        assert_eq!(rem, ["(1,3)_1", "(2,1)_1", "(2,2)_2", "(1,1)_3"]);
        let add: Vec<String> = l.addable_nodes().iter().map(|n| n.to_string()).collect();
        assert_eq!(
            add,
            ["(1,4)_1", "(2,2)_1", "(3,1)_1", "(1,3)_2", "(3,1)_2", "(1,2)_3", "(2,1)_3"]
        );

        let empty = mp("0");
        assert!(empty.removable_nodes().is_empty());
        assert_eq!(empty.addable_nodes(), vec![Node::new(1, 1, 1)]);
    }

    #[test]
    fn remove_and_add_round_trip() {
        for l in enumerate_multipartitions(2, 4) {
            for n in l.removable_nodes() {
                let smaller = l.remove_node(n).unwrap();
                assert_eq!(smaller.size() + 1, l.size());
                assert_eq!(smaller.add_node(n).unwrap(), l);
            }
            for n in l.addable_nodes() {
                let bigger = l.add_node(n).unwrap();
                assert_eq!(bigger.remove_node(n).unwrap(), l);
            }
        }
        let l = mp("2|1");
        assert!(l.remove_node(Node::new(1, 1, 1)).is_err());
        assert!(l.add_node(Node::new(1, 1, 1)).is_err());
    }

    #[test]
    fn duality_swaps_removable_nodes() {
        // (i,j)_k is removable from L exactly when (j,i)_{m-k+1} is
        // removable from the dual shape.
        for l in enumerate_multipartitions(3, 4) {
            let m = l.m();
            let dual = l.dual();
            let mut mapped: Vec<Node> = l
                .removable_nodes()
                .iter()
                .map(|n| Node::new(m - n.component + 1, n.col, n.row))
                .collect();
            mapped.sort();
            let mut expected = dual.removable_nodes();
            expected.sort();
            assert_eq!(mapped, expected);
        }
    }

    #[test]
    fn fillings_match_worked_examples() {
        let l = mp("3,2");
        assert_eq!(row_filling(&l), vec![vec![vec![1, 2, 3], vec![4, 5]]]);
        assert_eq!(column_filling(&l), vec![vec![vec![1, 3, 5], vec![2, 4]]]);

        let l = mp("3,1|2,2|1");
        assert_eq!(
            row_filling(&l),
            vec![
                vec![vec![1, 2, 3], vec![4]],
                vec![vec![5, 6], vec![7, 8]],
                vec![vec![9]],
            ]
        );
        assert_eq!(
            column_filling(&l),
            vec![
                vec![vec![6, 8, 9], vec![7]],
                vec![vec![2, 4], vec![3, 5]],
                vec![vec![1]],
            ]
        );
    }

    #[test]
    fn j_number_examples() {
        assert_eq!(j_numbers(&mp("3,1|2,2|1")), vec![9, 7, 5, 1]);
        assert_eq!(j_numbers(&mp("4")), vec![4]);
        // column filling of (2,1) is [1,3 / 2]; removable boxes (1,2), (2,1)
        assert_eq!(j_numbers(&mp("0|2,1")), vec![3, 2]);
    }

    #[test]
    fn j_numbers_are_strictly_decreasing() {
        for m in 1..=3 {
            for l in enumerate_multipartitions(m, 5) {
                let js = j_numbers(&l);
                assert!(js.windows(2).all(|w| w[0] > w[1]), "{l}: {js:?}");
            }
        }
    }

    #[test]
    fn first_removable_node_of_each_component_carries_r_minus_a() {
        // The first removable node of component i (in reading order) holds
        // the entry r - a_{i-1} of the column filling.
        for m in 1..=3 {
            for l in enumerate_multipartitions(m, 5) {
                let fill = column_filling(&l);
                let a = l.interval_vector().0;
                let r = l.size();
                for k in 1..=m {
                    if let Some(n) = l.removable_nodes().iter().find(|n| n.component == k) {
                        let entry = fill[k - 1][n.row - 1][n.col - 1];
                        assert_eq!(entry, r - a[k - 1], "{l} component {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn l_regularity() {
        assert!(mp("2,1").is_l_regular(Some(2)));
        assert!(!mp("1,1,1").is_l_regular(Some(2)));
        assert!(!mp("2|1,1").is_l_regular(Some(2)));
        assert!(mp("2,2").is_l_regular(Some(3)));
        assert!(!mp("2,2").is_l_regular(Some(2)));
        assert!(mp("1,1,1").is_l_regular(None));
        let two_regular: Vec<String> = enumerate_multipartitions(2, 3)
            .into_iter()
            .filter(|l| l.is_l_regular(Some(2)))
            .map(|l| l.to_string())
            .collect();
        assert_eq!(two_regular, ["3|0", "2,1|0", "2|1", "1|2", "0|3", "0|2,1"]);
    }

    #[test]
    fn partitions_of_small_n() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(8).len(), 22);
        let fours: Vec<String> = partitions_of(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(fours, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
    }
}
