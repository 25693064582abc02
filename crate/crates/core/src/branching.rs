//! Restriction to the subalgebra generated by `T_0 .. T_{r-2}`: the
//! branching filtration of a Specht module, the semisimple restriction
//! decomposition, normal and good node classification, and the socle
//! verification for restricted simple modules.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{AlgebraContext, AlgebraElement};
use crate::coefficients::{residue, Field, ParameterSet, Residue};
use crate::combinatorics::{enumerate_multipartitions, j_numbers, Multipartition, Node};
use crate::error::Error;
use crate::linalg::{hom_dimension, section_dimensions, submodule_closure, Submodule};
use crate::specht::{dimension_oracle, require_separated, simple_module, specht_module};
use crate::symmetric_group::cycle_element;

/// Generator labels of the rank `r-1` subalgebra inside rank `r`.
pub fn subalgebra_generators(r: usize) -> Vec<usize> {
    (0..r.saturating_sub(1)).collect()
}

fn child_parameters<F: Field>(p: &ParameterSet<F>) -> Result<ParameterSet<F>, Error> {
    if p.r < 2 {
        return Err(Error::Shape("restriction needs rank at least 2".into()));
    }
    ParameterSet::new(p.field.clone(), p.q.clone(), p.u.clone(), p.r - 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchRow {
    pub node: Node,
    pub j_number: usize,
    pub child: String,
    pub section_dimension: usize,
    pub expected_dimension: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchReport {
    pub shape: String,
    pub parameters: String,
    pub rows: Vec<BranchRow>,
    pub total_dimension: usize,
    pub top_equals_specht: bool,
    pub pass: bool,
}

/// Filters the Specht module by the subspaces generated by
/// `z_L T_{j,r}` for decreasing `j`-numbers, closed under the subalgebra;
/// the sections have the dimensions of the Specht modules of the shapes
/// with one node removed, and the top of the chain is the whole module.
pub fn ordinary_filtration<F: Field>(
    ctx: &AlgebraContext<F>,
    l: &Multipartition,
) -> Result<(Vec<Submodule<F>>, BranchReport), Error> {
    let r = ctx.params().r;
    let z = ctx.z_of(l)?;
    let nodes = l.removable_nodes();
    let js = j_numbers(l);
    if js.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::Internal(format!(
            "j-numbers of {l} are not strictly decreasing: {js:?}"
        )));
    }
    let sub_gens = subalgebra_generators(r);
    let mut chain: Vec<Submodule<F>> = Vec::new();
    let mut seeds: Vec<AlgebraElement<F>> = Vec::new();
    for &j in &js {
        let gen = ctx.right_mul_word(&z, &cycle_element(j, r, r));
        seeds.push(gen);
        let stage = submodule_closure(ctx, &seeds, &sub_gens);
        seeds = stage.rows().iter().map(|row| ctx.devectorize(row)).collect();
        chain.push(stage);
    }
    let sections = section_dimensions(&chain)?;
    let specht = specht_module(ctx, l)?;
    let top_equals_specht = chain
        .last()
        .map(|m| m.space().equals(specht.space()))
        .unwrap_or(specht.dimension() == 0);
    if !top_equals_specht {
        return Err(Error::Internal(format!(
            "filtration of {l} does not exhaust the Specht module"
        )));
    }
    let mut rows = Vec::new();
    let mut pass = true;
    for ((node, &j), &dim) in nodes.iter().zip(&js).zip(&sections) {
        let child = l.remove_node(*node)?;
        let expected = dimension_oracle(&child)?;
        if dim as u64 != expected {
            pass = false;
        }
        rows.push(BranchRow {
            node: *node,
            j_number: j,
            child: child.to_string(),
            section_dimension: dim,
            expected_dimension: expected,
        });
    }
    let report = BranchReport {
        shape: l.to_string(),
        parameters: ctx.params().describe(),
        rows,
        total_dimension: specht.dimension(),
        top_equals_specht,
        pass,
    };
    Ok((chain, report))
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionRow {
    pub node: Node,
    pub child: String,
    pub child_dimension: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub shape: String,
    pub parameters: String,
    pub rows: Vec<RestrictionRow>,
    pub summand_total: usize,
    pub specht_dimension: usize,
    pub pass: bool,
}

/// In the semisimple regime the restricted Specht module splits as the
/// direct sum of the Specht modules of the shapes with one node removed:
/// each occurs with multiplicity one and the dimensions add up.
pub fn restriction_decomposition_check<F: Field>(
    ctx: &AlgebraContext<F>,
    l: &Multipartition,
) -> Result<RestrictionReport, Error> {
    let p = ctx.params();
    if !p.is_semisimple() {
        return Err(Error::Regime(format!(
            "parameters {} are not in the semisimple regime",
            p.describe()
        )));
    }
    let child_ctx = AlgebraContext::new(child_parameters(p)?)?;
    let parent = specht_module(ctx, l)?;
    let sub_gens = subalgebra_generators(p.r);
    let f = ctx.field().clone();
    let mut rows = Vec::new();
    let mut total = 0usize;
    let mut pass = true;
    for node in l.removable_nodes() {
        let child = l.remove_node(node)?;
        let child_mod = specht_module(&child_ctx, &child)?;
        let mult = hom_dimension(&f, &child_mod, &parent, &sub_gens)?;
        if mult != 1 {
            pass = false;
        }
        total += child_mod.dimension();
        rows.push(RestrictionRow {
            node,
            child: child.to_string(),
            child_dimension: child_mod.dimension(),
            multiplicity: mult,
        });
    }
    if total != parent.dimension() {
        pass = false;
    }
    Ok(RestrictionReport {
        shape: l.to_string(),
        parameters: p.describe(),
        rows,
        summand_total: total,
        specht_dimension: parent.dimension(),
        pass,
    })
}

/// Which side of a removable node the addable nodes are matched on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatchingSide {
    #[default]
    Above,
    Below,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NodeStatus {
    RemovableOnly,
    Normal,
    Good,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeClassification {
    pub node: Node,
    pub residue: Residue,
    pub status: NodeStatus,
}

/// Same-residue removable and addable nodes of one component, as signed
/// markers sorted by row.
fn class_markers(
    l: &Multipartition,
    n: Node,
    res: Residue,
    lq: Option<u64>,
) -> (Vec<(usize, i32)>, Vec<(usize, i32)>) {
    let mut above = Vec::new();
    let mut below = Vec::new();
    let removable = l.removable_nodes();
    let addable = l.addable_nodes();
    for (list, sign) in [(&removable, 1i32), (&addable, -1i32)] {
        for &m in list.iter() {
            if m.component != n.component || m == n || residue(&m, lq) != res {
                continue;
            }
            if m.row < n.row {
                above.push((m.row, sign));
            } else if m.row > n.row {
                below.push((m.row, sign));
            }
        }
    }
    // nearest node first in each direction
    above.sort_by(|a, b| b.0.cmp(&a.0));
    below.sort_by(|a, b| a.0.cmp(&b.0));
    (above, below)
}

/// Signature criterion: walking away from the node, every addable node
/// must be preceded by more removable than addable nodes.
pub fn normal_by_signature(
    l: &Multipartition,
    n: Node,
    res: Residue,
    lq: Option<u64>,
    side: MatchingSide,
) -> bool {
    let (above, below) = class_markers(l, n, res, lq);
    let walk = match side {
        MatchingSide::Above => above,
        MatchingSide::Below => below,
    };
    let mut balance = 0i32;
    for (_, sign) in walk {
        balance += sign;
        if balance < 0 {
            return false;
        }
    }
    true
}

/// Literal matching criterion: an injective assignment of each same-residue
/// addable node on the chosen side to a distinct removable node strictly
/// between it and the node under test. Slower than the signature walk but
/// independent of it; the two are checked against each other.
pub fn normal_by_matching(
    l: &Multipartition,
    n: Node,
    res: Residue,
    lq: Option<u64>,
    side: MatchingSide,
) -> bool {
    let (above, below) = class_markers(l, n, res, lq);
    let markers = match side {
        MatchingSide::Above => above,
        MatchingSide::Below => below,
    };
    let between = |a_row: usize, r_row: usize| match side {
        // addable above at row a: removable strictly between has row in (a, n.row)
        MatchingSide::Above => a_row < r_row && r_row < n.row,
        MatchingSide::Below => n.row < r_row && r_row < a_row,
    };
    let addables: Vec<usize> = markers
        .iter()
        .filter(|&&(_, s)| s < 0)
        .map(|&(row, _)| row)
        .collect();
    let removables: Vec<usize> = markers
        .iter()
        .filter(|&&(_, s)| s > 0)
        .map(|&(row, _)| row)
        .collect();
    fn assign(
        addables: &[usize],
        removables: &[usize],
        used: &mut Vec<bool>,
        between: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        let Some((&a, rest)) = addables.split_first() else {
            return true;
        };
        for (i, &r) in removables.iter().enumerate() {
            if !used[i] && between(a, r) && {
                used[i] = true;
                let ok = assign(rest, removables, used, between);
                if !ok {
                    used[i] = false;
                }
                ok
            } {
                return true;
            }
        }
        false
    }
    let mut used = vec![false; removables.len()];
    assign(&addables, &removables, &mut used, &between)
}

/// Classifies every removable node of `L` as removable-only, normal, or
/// good, using canonical residues at the given parameters. A node is good
/// when it is the lowest normal node of its residue class.
pub fn classify_nodes<F: Field>(
    l: &Multipartition,
    p: &ParameterSet<F>,
    side: MatchingSide,
) -> Result<Vec<NodeClassification>, Error> {
    require_separated(p)?;
    let lq = p.quantum_characteristic();
    let mut rows: Vec<NodeClassification> = Vec::new();
    for n in l.removable_nodes() {
        let res = residue(&n, lq);
        let status = if normal_by_signature(l, n, res, lq, side) {
            NodeStatus::Normal
        } else {
            NodeStatus::RemovableOnly
        };
        rows.push(NodeClassification {
            node: n,
            residue: res,
            status,
        });
    }
    let mut lowest: BTreeMap<Residue, usize> = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        if row.status == NodeStatus::Normal {
            lowest
                .entry(row.residue)
                .and_modify(|best| {
                    if rows[*best].node.row < row.node.row {
                        *best = i;
                    }
                })
                .or_insert(i);
        }
    }
    for (_, i) in lowest {
        rows[i].status = NodeStatus::Good;
    }
    Ok(rows)
}

#[derive(Clone, Debug, Serialize)]
pub struct ModularRow {
    pub child: String,
    pub hom_from_specht: usize,
    pub hom_from_simple: usize,
    pub predicted_normal: bool,
    pub predicted_good: bool,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModularReport {
    pub shape: String,
    pub parameters: String,
    pub rows: Vec<ModularRow>,
    pub pass: bool,
}

/// Socle test for the restricted simple module: over all regular shapes
/// `rho` of size `r-1`, `Hom(S^rho, D^L|) = 1` exactly when `rho` is `L`
/// minus a normal node, and `Hom(D^rho, D^L|) = 1` exactly when the node
/// is good.
pub fn modular_branching_check<F: Field>(
    ctx: &AlgebraContext<F>,
    l: &Multipartition,
) -> Result<ModularReport, Error> {
    let p = ctx.params();
    let d_module = simple_module(ctx, l)?;
    let child_ctx = AlgebraContext::new(child_parameters(p)?)?;
    let classes = classify_nodes(l, p, MatchingSide::Above)?;
    let mut normal_children: BTreeMap<String, NodeStatus> = BTreeMap::new();
    for c in &classes {
        if c.status >= NodeStatus::Normal {
            normal_children.insert(l.remove_node(c.node)?.to_string(), c.status);
        }
    }
    let lq = p.quantum_characteristic().map(|v| v as usize);
    let sub_gens = subalgebra_generators(p.r);
    let f = ctx.field().clone();
    let mut rows = Vec::new();
    let mut pass = true;
    for rho in enumerate_multipartitions(p.m, p.r - 1) {
        if !rho.is_l_regular(lq) {
            continue;
        }
        let s_rho = specht_module(&child_ctx, &rho)?;
        let d_rho = simple_module(&child_ctx, &rho)?;
        let h_s = hom_dimension(&f, &s_rho, &d_module, &sub_gens)?;
        let h_d = hom_dimension(&f, &d_rho, &d_module, &sub_gens)?;
        let status = normal_children.get(&rho.to_string());
        let predicted_normal = status.is_some();
        let predicted_good = status == Some(&NodeStatus::Good);
        let ok = h_s == usize::from(predicted_normal) && h_d == usize::from(predicted_good);
        if !ok {
            pass = false;
        }
        rows.push(ModularRow {
            child: rho.to_string(),
            hom_from_specht: h_s,
            hom_from_simple: h_d,
            predicted_normal,
            predicted_good,
            ok,
        });
    }
    Ok(ModularReport {
        shape: l.to_string(),
        parameters: p.describe(),
        rows,
        pass,
    })
}
