//! Exact sparse linear algebra over the coefficient field: reduced
//! row-echelon spans, right-submodule closure under generator action, and
//! Hom-space dimensions by exact kernel computation.

use std::collections::{BTreeMap, VecDeque};

use crate::algebra::{AlgebraContext, AlgebraElement};
use crate::coefficients::Field;
use crate::error::Error;

/// Sparse coordinate vector: basis index to nonzero entry.
pub type SparseVec<F> = BTreeMap<usize, <F as Field>::Elem>;

pub fn add_scaled<F: Field>(
    f: &F,
    target: &mut SparseVec<F>,
    source: &SparseVec<F>,
    scale: &F::Elem,
) {
    if f.is_zero(scale) {
        return;
    }
    for (&i, c) in source {
        let add = f.mul(c, scale);
        match target.entry(i) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                if !f.is_zero(&add) {
                    slot.insert(add);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let s = f.add(slot.get(), &add);
                if f.is_zero(&s) {
                    slot.remove();
                } else {
                    *slot.get_mut() = s;
                }
            }
        }
    }
}

/// `v . rows`, treating `v` as coordinates over the row list.
pub fn apply_rows<F: Field>(f: &F, rows: &[SparseVec<F>], v: &SparseVec<F>) -> SparseVec<F> {
    let mut out = SparseVec::<F>::new();
    for (&i, c) in v {
        add_scaled(f, &mut out, &rows[i], c);
    }
    out
}

/// Product of sparse row matrices under the row-vector convention:
/// `(AB)` acts as `A` then `B`.
pub fn mat_mul<F: Field>(f: &F, a: &[SparseVec<F>], b: &[SparseVec<F>]) -> Vec<SparseVec<F>> {
    a.iter().map(|row| apply_rows(f, b, row)).collect()
}

/// A subspace kept in reduced row-echelon form with monic pivots. The
/// representation is canonical: two spans are equal exactly when their
/// rows coincide.
#[derive(Clone, Debug)]
pub struct RowSpace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(field: F, ambient: usize) -> Self {
        RowSpace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let f = &self.field;
        let mut work = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = work.get(&p).cloned() {
                let neg = f.neg(&c);
                add_scaled(f, &mut work, row, &neg);
            }
        }
        work
    }

    /// Adds a vector to the span. Returns true when the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        debug_assert!(v.keys().all(|&i| i < self.ambient));
        let f = self.field.clone();
        let mut work = self.reduce(&v);
        let Some((&pivot, lead)) = work.first_key_value() else {
            return false;
        };
        let scale = f.inv(lead).expect("leading entry is nonzero");
        let mut monic = SparseVec::<F>::new();
        add_scaled(&f, &mut monic, &work, &scale);
        work = monic;
        for row in self.rows.iter_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                let neg = f.neg(&c);
                add_scaled(&f, row, &work, &neg);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, work);
        true
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` over the rows, or `None` when `v` is outside.
    pub fn express(&self, v: &SparseVec<F>) -> Option<SparseVec<F>> {
        let f = &self.field;
        let mut coords = SparseVec::<F>::new();
        let mut residual = v.clone();
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if let Some(c) = residual.get(&p).cloned() {
                let neg = f.neg(&c);
                add_scaled(f, &mut residual, row, &neg);
                coords.insert(i, c);
            }
        }
        if residual.is_empty() {
            Some(coords)
        } else {
            None
        }
    }

    pub fn is_subspace_of(&self, other: &RowSpace<F>) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn equals(&self, other: &RowSpace<F>) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

/// A right submodule of the regular module: an echelonized basis plus the
/// recorded action of each closing generator in that basis.
#[derive(Clone, Debug)]
pub struct Submodule<F: Field> {
    space: RowSpace<F>,
    action: BTreeMap<usize, Vec<SparseVec<F>>>,
}

impl<F: Field> Submodule<F> {
    pub fn dimension(&self) -> usize {
        self.space.rank()
    }

    pub fn ambient(&self) -> usize {
        self.space.ambient()
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        self.space.rows()
    }

    pub fn space(&self) -> &RowSpace<F> {
        &self.space
    }

    /// Action of `T_g` on the basis rows, in basis coordinates.
    pub fn action(&self, g: usize) -> Option<&Vec<SparseVec<F>>> {
        self.action.get(&g)
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.space.contains(v)
    }

    pub fn equals(&self, other: &Submodule<F>) -> bool {
        self.space.equals(&other.space)
    }

    pub fn is_subspace_of(&self, other: &Submodule<F>) -> bool {
        self.space.is_subspace_of(&other.space)
    }
}

/// Smallest subspace containing the generators and stable under right
/// multiplication by the listed `T_g`; the action of those generators is
/// recorded on the resulting basis.
pub fn submodule_closure<F: Field>(
    ctx: &AlgebraContext<F>,
    generators: &[AlgebraElement<F>],
    generator_set: &[usize],
) -> Submodule<F> {
    let f = ctx.field().clone();
    let mut space = RowSpace::new(f.clone(), ctx.dimension());
    let mut queue: VecDeque<SparseVec<F>> = VecDeque::new();
    for e in generators {
        let v = ctx.vectorize(e);
        if space.insert(v.clone()) {
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &g in generator_set {
            let img = ctx.apply_generator(g, &v);
            if space.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    let mut action = BTreeMap::new();
    for &g in generator_set {
        let rows: Vec<SparseVec<F>> = space
            .rows()
            .iter()
            .map(|row| {
                let img = ctx.apply_generator(g, row);
                space
                    .express(&img)
                    .expect("closure is stable under the generator")
            })
            .collect();
        action.insert(g, rows);
    }
    Submodule { space, action }
}

/// Closure inside an abstract module given by action matrices (used for
/// probing submodules of an already-computed module).
pub fn closure_with_action<F: Field>(
    f: &F,
    dim: usize,
    action: &BTreeMap<usize, Vec<SparseVec<F>>>,
    seeds: &[SparseVec<F>],
    generator_set: &[usize],
) -> RowSpace<F> {
    let mut space = RowSpace::new(f.clone(), dim);
    let mut queue: VecDeque<SparseVec<F>> = VecDeque::new();
    for v in seeds {
        if space.insert(v.clone()) {
            queue.push_back(v.clone());
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in generator_set {
            let rows = &action[g];
            let img = apply_rows(f, rows, &v);
            if space.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    space
}

/// Successive rank differences along an ascending chain; errors on the
/// first non-containment.
pub fn section_dimensions<F: Field>(chain: &[Submodule<F>]) -> Result<Vec<usize>, Error> {
    let mut out = Vec::with_capacity(chain.len());
    let mut prev_dim = 0;
    for (t, sub) in chain.iter().enumerate() {
        if t > 0 && !chain[t - 1].is_subspace_of(sub) {
            return Err(Error::Mismatch(format!(
                "chain member {t} does not contain member {}",
                t - 1
            )));
        }
        out.push(sub.dimension() - prev_dim);
        prev_dim = sub.dimension();
    }
    Ok(out)
}

/// Dimension of the space of module maps `M -> N` intertwining the listed
/// generators: the kernel of `F |-> A_g F - F B_g` over all `g`, computed
/// exactly on the `dim M * dim N` unknowns.
pub fn hom_dimension<F: Field>(
    f: &F,
    m: &Submodule<F>,
    n: &Submodule<F>,
    generator_set: &[usize],
) -> Result<usize, Error> {
    let dm = m.dimension();
    let dn = n.dimension();
    let unknowns = dm * dn;
    if unknowns == 0 {
        return Ok(0);
    }
    let mut equations = RowSpace::new(f.clone(), unknowns);
    for &g in generator_set {
        let a = m
            .action(g)
            .ok_or_else(|| Error::Mismatch(format!("missing action of T_{g} on the source")))?;
        let b = n
            .action(g)
            .ok_or_else(|| Error::Mismatch(format!("missing action of T_{g} on the target")))?;
        // equation (i,j): sum_k A[i][k] F[k][j] - sum_l F[i][l] B[l][j] = 0
        for i in 0..dm {
            for j in 0..dn {
                let mut row = SparseVec::<F>::new();
                for (&k, c) in &a[i] {
                    let slot = row.entry(k * dn + j).or_insert_with(|| f.zero());
                    *slot = f.add(slot, c);
                }
                for l in 0..dn {
                    for (&jj, c) in &b[l] {
                        if jj == j {
                            let slot = row.entry(i * dn + l).or_insert_with(|| f.zero());
                            *slot = f.sub(slot, c);
                        }
                    }
                }
                row.retain(|_, c| !f.is_zero(c));
                equations.insert(row);
            }
        }
    }
    Ok(unknowns - equations.rank())
}
