//! Permutations of `1..r`, distinguished words attached to multipartitions,
//! and tableau combinatorics on top of them.
//!
//! Permutations act on the right: `(i)(uv) = ((i)u)v`, and the one-line
//! form lists images `[(1)w, ..., (r)w]`. With this convention a product of
//! generators taken along a reduced word reads left to right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{column_filling, row_filling, Filling, IntervalVector, Multipartition, Node};
use crate::error::Error;

/// A permutation of `1..=r` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (1..=r).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &v in &images {
            if v == 0 || v > r || seen[v - 1] {
                return Err(Error::Shape(format!("not a permutation: {images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&v| other.images[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.degree();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right product with the adjacent transposition `s_i` (swaps the
    /// values `i` and `i+1`).
    pub fn times_s(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        for v in images.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Permutation { images }
    }

    /// Left product `s_i * self` (swaps the entries at positions `i`, `i+1`).
    pub fn s_times(&self, i: usize) -> Permutation {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// Smallest `i` with `l(w s_i) < l(w)`, i.e. the value `i+1` occurs
    /// before the value `i` in one-line order.
    pub fn first_right_descent(&self) -> Option<usize> {
        let inv = self.inverse();
        (1..self.degree()).find(|&i| inv.images[i] < inv.images[i - 1])
    }

    /// The canonical reduced word, produced by repeatedly clearing the
    /// leftmost descent. Letters are generator subscripts in `1..r`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        'outer: loop {
            for j in 1..w.degree() {
                if w.images[j - 1] > w.images[j] {
                    word.push(j);
                    w = w.s_times(j);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// Extends to a permutation of `1..=r` fixing the new points.
    pub fn embed(&self, r: usize) -> Permutation {
        assert!(r >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=r);
        Permutation { images }
    }

    /// True when every point of each half-open block interval stays inside
    /// the block and points outside all blocks are fixed.
    pub fn preserves_blocks(&self, blocks: &[(usize, usize)]) -> bool {
        let in_block = |v: usize| blocks.iter().position(|&(lo, hi)| lo <= v && v <= hi);
        (1..=self.degree()).all(|i| in_block(i) == in_block(self.image(i)) && (in_block(i).is_some() || self.image(i) == i))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", body.join(","))
    }
}

/// The cycle `s_{i,j}`. For `i <= j` it sends `i -> j` and shifts the
/// values strictly between down by one; `s_{i,i}` is the identity; for
/// `i > j` it is the inverse of `s_{j,i}`.
pub fn cycle_element(i: usize, j: usize, r: usize) -> Permutation {
    assert!(i >= 1 && j >= 1 && i <= r && j <= r, "cycle out of range");
    let mut images: Vec<usize> = (1..=r).collect();
    if i <= j {
        images[i - 1] = j;
        for t in i + 1..=j {
            images[t - 1] = t - 1;
        }
    } else {
        images[i - 1] = j;
        for t in j..i {
            images[t - 1] = t + 1;
        }
    }
    Permutation { images }
}

/// The permutation `w_a` of an interval vector `[a_0..a_m]`: it maps
/// `a_{i-1} + l` to `r - a_i + l` for each nonempty interval `i` and
/// `1 <= l <= a_i - a_{i-1}`.
pub fn w_of_interval(a: &IntervalVector) -> Permutation {
    let r = a.r();
    let mut images = vec![0; r];
    for i in 1..a.0.len() {
        let lo = a.0[i - 1];
        let hi = a.0[i];
        for l in 1..=(hi - lo) {
            images[lo + l - 1] = r - hi + l;
        }
    }
    Permutation { images }
}

/// The permutation `w_L` carrying the row filling of `L` to the column
/// filling of `L`.
pub fn w_of_multipartition(mp: &Multipartition) -> Permutation {
    let rows = row_filling(mp);
    let cols = column_filling(mp);
    let r = mp.size();
    let mut images = vec![0; r];
    for (rk, ck) in rows.iter().zip(cols.iter()) {
        for (rrow, crow) in rk.iter().zip(ck.iter()) {
            for (&a, &b) in rrow.iter().zip(crow.iter()) {
                images[a - 1] = b;
            }
        }
    }
    Permutation { images }
}

/// A Young subgroup of `S_r`: the pointwise product of symmetric groups on
/// consecutive blocks cut out by a composition (zero parts are skipped).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungSubgroup {
    r: usize,
    blocks: Vec<(usize, usize)>,
}

impl YoungSubgroup {
    pub fn from_composition(parts: &[usize], r: usize) -> Result<Self, Error> {
        let total: usize = parts.iter().sum();
        if total > r {
            return Err(Error::Shape(format!(
                "composition sums to {total}, above the degree {r}"
            )));
        }
        let mut blocks = Vec::new();
        let mut lo = 1;
        for &p in parts {
            if p > 0 {
                blocks.push((lo, lo + p - 1));
                lo += p;
            }
        }
        Ok(YoungSubgroup { r, blocks })
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.blocks
    }

    pub fn order(&self) -> usize {
        self.blocks
            .iter()
            .map(|&(lo, hi)| (1..=hi - lo + 1).product::<usize>())
            .product()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        w.degree() == self.r && w.preserves_blocks(&self.blocks)
    }

    /// All elements, ordered lexicographically by one-line form.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.r)];
        for &(lo, hi) in &self.blocks {
            let block_perms = permutations_of_window(lo, hi, self.r);
            let mut next = Vec::with_capacity(out.len() * block_perms.len());
            for base in &out {
                for bp in &block_perms {
                    next.push(base.compose(bp));
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    /// Minimal-length representatives of the right cosets: permutations
    /// whose images ascend along every block.
    pub fn distinguished_coset_reps(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images = vec![0; self.r];
        let mut used = vec![false; self.r];
        self.fill_reps(1, &mut images, &mut used, &mut out);
        out.sort();
        out
    }

    fn fill_reps(
        &self,
        pos: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        if pos > self.r {
            out.push(Permutation {
                images: images.clone(),
            });
            return;
        }
        let floor = self
            .blocks
            .iter()
            .find(|&&(lo, hi)| lo <= pos && pos <= hi)
            .filter(|&&(lo, _)| lo < pos)
            .map(|_| images[pos - 2])
            .unwrap_or(0);
        for v in floor + 1..=self.r {
            if !used[v - 1] {
                used[v - 1] = true;
                images[pos - 1] = v;
                self.fill_reps(pos + 1, images, used, out);
                used[v - 1] = false;
            }
        }
    }

    pub fn is_distinguished(&self, w: &Permutation) -> bool {
        w.degree() == self.r
            && self
                .blocks
                .iter()
                .all(|&(lo, hi)| (lo..hi).all(|i| w.image(i) < w.image(i + 1)))
    }
}

fn permutations_of_window(lo: usize, hi: usize, r: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (lo..=hi).collect();
    loop {
        let mut images: Vec<usize> = (1..=r).collect();
        for (offset, &v) in current.iter().enumerate() {
            images[lo - 1 + offset] = v;
        }
        out.push(Permutation { images });
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

fn next_permutation(vals: &mut [usize]) -> bool {
    let n = vals.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && vals[i - 1] >= vals[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while vals[j] <= vals[i - 1] {
        j -= 1;
    }
    vals.swap(i - 1, j);
    vals[i..].reverse();
    true
}

/// Which base filling a tableau permutation is taken against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauFlavor {
    /// `d` with (column filling of `L`) `. d` standard.
    Column,
    /// `d` with (row filling of the dual of `L`) `. d` standard.
    DualRow,
}

/// All standard fillings of the diagram of `mp`: entries `1..r`, rows and
/// columns strictly increasing inside every component.
pub fn standard_fillings(mp: &Multipartition) -> Vec<Filling> {
    let r = mp.size();
    let mut shape: Vec<Vec<usize>> = mp
        .components()
        .iter()
        .map(|p| p.parts().to_vec())
        .collect();
    for rowlens in shape.iter_mut() {
        rowlens.push(0); // sentinel so `filled[k][i+1]` lookups stay in range
    }
    let mut filled: Vec<Vec<usize>> = shape.iter().map(|rows| vec![0; rows.len()]).collect();
    let mut fill: Filling = mp
        .components()
        .iter()
        .map(|p| p.parts().iter().map(|&len| vec![0; len]).collect())
        .collect();
    let mut out = Vec::new();
    place(1, r, &shape, &mut filled, &mut fill, &mut out);
    out
}

fn place(
    t: usize,
    r: usize,
    shape: &[Vec<usize>],
    filled: &mut [Vec<usize>],
    fill: &mut Filling,
    out: &mut Vec<Filling>,
) {
    if t > r {
        out.push(fill.clone());
        return;
    }
    for k in 0..shape.len() {
        for i in 0..shape[k].len() {
            let row_len = shape[k][i];
            let done = filled[k][i];
            if done < row_len && (i == 0 || filled[k][i - 1] > done) {
                filled[k][i] += 1;
                fill[k][i][done] = t;
                place(t + 1, r, shape, filled, fill, out);
                fill[k][i][done] = 0;
                filled[k][i] -= 1;
            }
        }
    }
}

/// The permutations `d` indexing a standard basis, against the chosen base
/// filling. Output is sorted by one-line form.
pub fn standard_tableau_perms(mp: &Multipartition, flavor: TableauFlavor) -> Vec<Permutation> {
    let (shape, base) = match flavor {
        TableauFlavor::Column => (mp.clone(), column_filling(mp)),
        TableauFlavor::DualRow => {
            let dual = mp.dual();
            let base = row_filling(&dual);
            (dual, base)
        }
    };
    let r = shape.size();
    let mut out: Vec<Permutation> = standard_fillings(&shape)
        .iter()
        .map(|t| {
            let mut images = vec![0; r];
            for (bk, tk) in base.iter().zip(t.iter()) {
                for (brow, trow) in bk.iter().zip(tk.iter()) {
                    for (&a, &b) in brow.iter().zip(trow.iter()) {
                        images[a - 1] = b;
                    }
                }
            }
            Permutation { images }
        })
        .collect();
    out.sort();
    out
}

/// The node holding `r` in the standard filling `t . d^{-1}`... rather:
/// for a permutation `d` in the column flavor, the box of the column
/// filling whose entry maps to `r` under `d`. Used to split a standard
/// basis along removable nodes.
pub fn node_of_last_entry(mp: &Multipartition, d: &Permutation) -> Node {
    let fill = column_filling(mp);
    let r = mp.size();
    for (k, comp) in fill.iter().enumerate() {
        for (i, row) in comp.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if d.image(e) == r {
                    return Node::new(k + 1, i + 1, j + 1);
                }
            }
        }
    }
    unreachable!("some entry must map to r");
}
