//! Specht modules `z_L . H`, the standard-basis verification, the rank-one
//! span check for `x_L H y_{L'}`, and the simple quotient representatives
//! `D^L` at separated parameter points.

use serde::Serialize;

use crate::algebra::AlgebraContext;
use crate::coefficients::{Field, ParameterSet};
use crate::combinatorics::Multipartition;
use crate::error::Error;
use crate::linalg::{
    closure_with_action, hom_dimension, submodule_closure, RowSpace, SparseVec, Submodule,
};
use crate::symmetric_group::{
    standard_fillings, standard_tableau_perms, w_of_multipartition, TableauFlavor,
};

pub fn all_generators(r: usize) -> Vec<usize> {
    (0..r).collect()
}

/// Errors unless the separation product of the parameters is nonzero.
pub fn require_separated<F: Field>(p: &ParameterSet<F>) -> Result<(), Error> {
    if p.field.is_zero(&p.separation_product()) {
        return Err(Error::Regime(format!(
            "separation product vanishes at {}",
            p.describe()
        )));
    }
    Ok(())
}

/// The submodule generated by `z_L` under right multiplication by all
/// generators.
pub fn specht_module<F: Field>(
    ctx: &AlgebraContext<F>,
    l: &Multipartition,
) -> Result<Submodule<F>, Error> {
    let z = ctx.z_of(l)?;
    Ok(submodule_closure(ctx, &[z], &all_generators(ctx.params().r)))
}

/// The submodule generated by `y_L T_{w_L} x_{L'}`.
pub fn twisted_specht_module<F: Field>(
    ctx: &AlgebraContext<F>,
    l: &Multipartition,
) -> Result<Submodule<F>, Error> {
    let z = ctx.twisted_z_of(l)?;
    Ok(submodule_closure(ctx, &[z], &all_generators(ctx.params().r)))
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

fn standard_count_by_hooks(l: &Multipartition) -> u128 {
    let r = l.size() as u64;
    let mut count = factorial(r);
    for comp in l.components() {
        let conj = comp.conjugate();
        count /= factorial(comp.size() as u64);
        let mut hooks: u128 = 1;
        for (i, &row) in comp.parts().iter().enumerate() {
            for j in 1..=row {
                let arm = row - j;
                let leg = conj.part(j) - (i + 1);
                hooks *= (arm + leg + 1) as u128;
            }
        }
        count = count * factorial(comp.size() as u64) / hooks;
    }
    count
}

/// Number of standard tableaux of shape `L`, computed independently by the
/// hook-length product formula and by direct enumeration; the two must
/// agree.
pub fn dimension_oracle(l: &Multipartition) -> Result<u64, Error> {
    let formula = standard_count_by_hooks(l);
    let listed = standard_fillings(l).len() as u128;
    if formula != listed {
        return Err(Error::Internal(format!(
            "tableau counts disagree for {l}: formula {formula}, enumeration {listed}"
        )));
    }
    u64::try_from(formula)
        .map_err(|_| Error::Internal(format!("tableau count for {l} exceeds u64")))
}

#[derive(Clone, Debug, Serialize)]
pub struct SpechtReport {
    pub shape: String,
    pub parameters: String,
    pub ambient_dimension: usize,
    pub module_dimension: usize,
    pub oracle_dimension: u64,
    pub column_vectors: usize,
    pub column_independent: bool,
    pub column_spans_module: bool,
    pub dual_row_vectors: usize,
    pub dual_row_independent: bool,
    pub dual_row_spans_module: bool,
    pub pass: bool,
}

/// Checks that `{z_L T_d}` over column-standard `d` and over dual-row
/// standard `d` are each linearly independent, each spans the Specht
/// module, and that the module dimension equals the tableau count.
pub fn verify_standard_basis<F: Field>(
    ctx: &AlgebraContext<F>,
    l: &Multipartition,
) -> Result<SpechtReport, Error> {
    let module = specht_module(ctx, l)?;
    let z = ctx.z_of(l)?;
    let oracle = dimension_oracle(l)?;
    let mut stats = Vec::new();
    for flavor in [TableauFlavor::Column, TableauFlavor::DualRow] {
        let perms = standard_tableau_perms(l, flavor);
        let mut span = RowSpace::new(ctx.field().clone(), ctx.dimension());
        let mut independent = true;
        for d in &perms {
            let v = ctx.vectorize(&ctx.right_mul_word(&z, d));
            if !span.insert(v) {
                independent = false;
            }
        }
        let spans = span.equals(module.space());
        stats.push((perms.len(), independent, spans));
    }
    let (column_vectors, column_independent, column_spans_module) = stats[0];
    let (dual_row_vectors, dual_row_independent, dual_row_spans_module) = stats[1];
    let pass = module.dimension() as u64 == oracle
        && column_vectors as u64 == oracle
        && dual_row_vectors as u64 == oracle
        && column_independent
        && column_spans_module
        && dual_row_independent
        && dual_row_spans_module;
    Ok(SpechtReport {
        shape: l.to_string(),
        parameters: ctx.params().describe(),
        ambient_dimension: ctx.dimension(),
        module_dimension: module.dimension(),
        oracle_dimension: oracle,
        column_vectors,
        column_independent,
        column_spans_module,
        dual_row_vectors,
        dual_row_independent,
        dual_row_spans_module,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RankOneReport {
    pub shape: String,
    pub parameters: String,
    pub rank: usize,
    pub z_nonzero: bool,
    pub z_in_span: bool,
    pub pass: bool,
}

/// Spans `{x_L . b . y_{L'}}` over every monomial basis element `b` and
/// checks the span is exactly the line through `z_L`.
pub fn rank_one_check<F: Field>(
    ctx: &AlgebraContext<F>,
    l: &Multipartition,
) -> Result<RankOneReport, Error> {
    let x = ctx.x_of(l)?;
    let y = ctx.y_of(&l.dual())?;
    let z = ctx.z_of(l)?;
    let mut span = RowSpace::new(ctx.field().clone(), ctx.dimension());
    for idx in 0..ctx.dimension() {
        let b = ctx.basis_element(idx);
        let prod = ctx.multiply(&ctx.multiply(&x, &b), &y);
        span.insert(ctx.vectorize(&prod));
    }
    let z_vec = ctx.vectorize(&z);
    let report = RankOneReport {
        shape: l.to_string(),
        parameters: ctx.params().describe(),
        rank: span.rank(),
        z_nonzero: !z.is_zero(),
        z_in_span: span.contains(&z_vec),
        pass: span.rank() == 1 && !z.is_zero() && span.contains(&z_vec),
    };
    Ok(report)
}

fn require_regular<F: Field>(p: &ParameterSet<F>, l: &Multipartition) -> Result<(), Error> {
    let lq = p.quantum_characteristic().map(|v| v as usize);
    if !l.is_l_regular(lq) {
        return Err(Error::Regime(format!(
            "{l} is not regular for quantum characteristic {}",
            lq.map_or("infinity".to_string(), |v| v.to_string())
        )));
    }
    Ok(())
}

/// The module generated by `y_{L'} T_{w_{L'}} z_L`, defined when the
/// separation product is nonzero and `L` is regular for the quantum
/// characteristic.
pub fn simple_module<F: Field>(
    ctx: &AlgebraContext<F>,
    l: &Multipartition,
) -> Result<Submodule<F>, Error> {
    require_separated(ctx.params())?;
    require_regular(ctx.params(), l)?;
    let dual = l.dual();
    let y = ctx.y_of(&dual)?;
    let moved = ctx.right_mul_word(&y, &w_of_multipartition(&dual));
    let gen = ctx.multiply(&moved, &ctx.z_of(l)?);
    Ok(submodule_closure(
        ctx,
        &[gen],
        &all_generators(ctx.params().r),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleReport {
    pub shape: String,
    pub parameters: String,
    pub dimension: usize,
    pub endomorphism_dimension: usize,
    pub probes: usize,
    pub proper_submodule_found: bool,
    pub pass: bool,
}

fn xorshift(state: &mut u64) -> u64 {
    let mut x = *state;
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    *state = x;
    x
}

/// Checks that the computed module is nonzero and simple: endomorphism
/// space of dimension one, and no random-vector closure probe finds a
/// proper nonzero submodule.
pub fn verify_simple<F: Field>(
    ctx: &AlgebraContext<F>,
    l: &Multipartition,
    probes: usize,
) -> Result<SimpleReport, Error> {
    let module = simple_module(ctx, l)?;
    let f = ctx.field().clone();
    let d = module.dimension();
    let gens = all_generators(ctx.params().r);
    let endo = if d == 0 {
        0
    } else {
        hom_dimension(&f, &module, &module, &gens)?
    };
    let action = gens
        .iter()
        .map(|&g| (g, module.action(g).unwrap().clone()))
        .collect();
    let mut proper = false;
    let mut state = 0x9e3779b97f4a7c15u64 ^ (d as u64);
    for _ in 0..probes {
        if d == 0 {
            break;
        }
        let mut seed = SparseVec::<F>::new();
        for i in 0..d {
            let c = f.from_i64((xorshift(&mut state) % 9) as i64 - 4);
            if !f.is_zero(&c) {
                seed.insert(i, c);
            }
        }
        if seed.is_empty() {
            seed.insert(0, f.one());
        }
        let reach = closure_with_action(&f, d, &action, &[seed], &gens);
        if reach.rank() < d {
            proper = true;
        }
    }
    Ok(SimpleReport {
        shape: l.to_string(),
        parameters: ctx.params().describe(),
        dimension: d,
        endomorphism_dimension: endo,
        probes,
        proper_submodule_found: proper,
        pass: d > 0 && endo == 1 && !proper,
    })
}
