//! Command line front end for the cyclotomic Hecke algebra library.
//!
//! Every command writes deterministic output; exit code 0 means success
//! (all checks passed), 1 means a verification failed (the output names
//! the counterexample), 2 means the invocation or the parameter regime
//! was invalid.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use akh_core::algebra::AlgebraContext;
use akh_core::branching::{
    classify_nodes, modular_branching_check, ordinary_filtration,
    restriction_decomposition_check, MatchingSide,
};
use akh_core::coefficients::{
    generic_parameters, Field, ParameterSet, ParamsFile, PrimeField, RealizedParams,
};
use akh_core::combinatorics::{dominance_le, enumerate_multipartitions, j_numbers, Multipartition};
use akh_core::error::Error;
use akh_core::specht::{
    dimension_oracle, rank_one_check, specht_module, verify_standard_basis,
};
use akh_core::symmetric_group::{standard_tableau_perms, w_of_multipartition, TableauFlavor};

#[derive(Parser)]
#[command(name = "akh", version, about = "Cyclotomic Hecke algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FlavorArg {
    Column,
    DualRow,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Above,
    Below,
}

#[derive(Args)]
struct CommonArgs {
    /// Parameter point: "generic", "f5", or a JSON file path
    #[arg(long, default_value = "generic")]
    params: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ShapeArgs {
    /// Multipartition, components separated by '|', e.g. "3,1|2" ("0" = empty)
    #[arg(long)]
    lambda: String,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct RankArgs {
    /// Number of cyclotomic parameters (components)
    #[arg(long)]
    m: usize,
    /// Rank: number of boxes
    #[arg(long)]
    r: usize,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Subcommand)]
enum Command {
    /// List all multipartitions of r with m components
    Enum(RankArgs),
    /// Compare two multipartitions in the dominance order
    Dominance {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the permutations indexing standard tableaux of a shape
    Tableaux {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = FlavorArg::Column)]
        flavor: FlavorArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the distinguished permutation and j-numbers of a shape
    WElements {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the defining relations in the regular representation
    AlgebraSelftest(RankArgs),
    /// Print the standard-tableau count of a shape
    SpechtDim {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify structural theorems for one shape
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Branching computations for one shape
    #[command(subcommand)]
    Branch(BranchCommand),
    /// Node-level classification
    #[command(subcommand)]
    Nodes(NodesCommand),
    /// Check that squared module dimensions sum to the algebra dimension
    SumOfSquares(RankArgs),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Standard basis: independence, spanning, and both tableau flavors
    StandardBasis(ShapeArgs),
    /// The span x_L . H . y_{L'} is the line through z_L
    RankOne(ShapeArgs),
}

#[derive(Subcommand)]
enum BranchCommand {
    /// Filtration of the restricted Specht module with Specht sections
    Ordinary(ShapeArgs),
    /// Semisimple decomposition of the restricted Specht module
    Semisimple(ShapeArgs),
    /// Socle of the restricted simple module against good nodes
    Modular(ShapeArgs),
}

#[derive(Subcommand)]
enum NodesCommand {
    /// Classify removable nodes as removable-only, normal, or good
    Classify {
        #[arg(long)]
        lambda: String,
        /// Side on which addable nodes oppose a removable node
        #[arg(long, value_enum, default_value_t = SideArg::Above)]
        convention: SideArg,
        #[command(flatten)]
        common: CommonArgs,
    },
}

struct CmdOutput {
    text: String,
    json: Value,
    ok: bool,
}

fn resolve_params(spec: &str, m: usize, r: usize) -> Result<RealizedParams, Error> {
    match spec {
        "generic" => Ok(RealizedParams::Rationals(generic_parameters(m, r))),
        "f5" => {
            if m != 2 {
                return Err(Error::Mismatch(format!(
                    "the f5 preset has 2 cyclotomic parameters, the task needs {m}"
                )));
            }
            let f = PrimeField::new(5)?;
            let q = f.from_i64(4);
            let u = vec![f.from_i64(1), f.from_i64(2)];
            Ok(RealizedParams::Prime(ParameterSet::new(f, q, u, r)?))
        }
        path => {
            let body = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
            let file: ParamsFile = serde_json::from_str(&body)
                .map_err(|e| Error::Parse(format!("cannot parse {path}: {e}")))?;
            if file.m != m || file.r != r {
                return Err(Error::Mismatch(format!(
                    "{path} describes level {} rank {}, the task needs level {m} rank {r}",
                    file.m, file.r
                )));
            }
            file.realize()
        }
    }
}

fn parse_shape(s: &str) -> Result<Multipartition, Error> {
    s.parse()
}

macro_rules! with_context {
    ($realized:expr, |$ctx:ident| $body:expr) => {
        match $realized {
            RealizedParams::Rationals(p) => {
                let $ctx = AlgebraContext::new(p)?;
                $body
            }
            RealizedParams::Prime(p) => {
                let $ctx = AlgebraContext::new(p)?;
                $body
            }
        }
    };
}

fn cmd_enum(args: &RankArgs) -> Result<CmdOutput, Error> {
    let shapes = enumerate_multipartitions(args.m, args.r);
    let mut text = String::new();
    for s in &shapes {
        writeln!(text, "{s}").unwrap();
    }
    writeln!(text, "count {}", shapes.len()).unwrap();
    let json = json!({
        "m": args.m,
        "r": args.r,
        "count": shapes.len(),
        "shapes": shapes.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    });
    Ok(CmdOutput { text, json, ok: true })
}

fn cmd_dominance(a: &str, b: &str) -> Result<CmdOutput, Error> {
    let pa = parse_shape(a)?;
    let pb = parse_shape(b)?;
    let a_le_b = dominance_le(&pa, &pb)?;
    let b_le_a = dominance_le(&pb, &pa)?;
    let mut text = String::new();
    writeln!(text, "{pa} <= {pb}: {a_le_b}").unwrap();
    writeln!(text, "{pb} <= {pa}: {b_le_a}").unwrap();
    let json = json!({
        "a": pa.to_string(),
        "b": pb.to_string(),
        "a_le_b": a_le_b,
        "b_le_a": b_le_a,
    });
    Ok(CmdOutput { text, json, ok: true })
}

fn cmd_tableaux(lambda: &str, flavor: FlavorArg) -> Result<CmdOutput, Error> {
    let l = parse_shape(lambda)?;
    let fl = match flavor {
        FlavorArg::Column => TableauFlavor::Column,
        FlavorArg::DualRow => TableauFlavor::DualRow,
    };
    let perms = standard_tableau_perms(&l, fl);
    let mut text = String::new();
    for d in &perms {
        writeln!(text, "{d}").unwrap();
    }
    writeln!(text, "count {}", perms.len()).unwrap();
    let json = json!({
        "shape": l.to_string(),
        "flavor": match flavor { FlavorArg::Column => "column", FlavorArg::DualRow => "dual-row" },
        "count": perms.len(),
        "perms": perms.iter().map(|d| d.one_line().to_vec()).collect::<Vec<_>>(),
    });
    Ok(CmdOutput { text, json, ok: true })
}

fn cmd_w_elements(lambda: &str) -> Result<CmdOutput, Error> {
    let l = parse_shape(lambda)?;
    let w = w_of_multipartition(&l);
    let js = j_numbers(&l);
    let a = l.interval_vector();
    let mut text = String::new();
    writeln!(text, "shape {l}").unwrap();
    writeln!(text, "interval vector {a}").unwrap();
    writeln!(text, "w {w}").unwrap();
    writeln!(
        text,
        "reduced word [{}]",
        w.reduced_word()
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
    .unwrap();
    writeln!(
        text,
        "j-numbers [{}]",
        js.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",")
    )
    .unwrap();
    let json = json!({
        "shape": l.to_string(),
        "interval_vector": a.0,
        "w": w.one_line().to_vec(),
        "reduced_word": w.reduced_word(),
        "j_numbers": js,
    });
    Ok(CmdOutput { text, json, ok: true })
}

fn cmd_selftest(args: &RankArgs) -> Result<CmdOutput, Error> {
    let realized = resolve_params(&args.common.params, args.m, args.r)?;
    with_context!(realized, |ctx| {
        let report = ctx.relations_selftest();
        let mut text = String::new();
        writeln!(text, "{}", report.description).unwrap();
        writeln!(text, "dimension {}", report.dimension).unwrap();
        for c in &report.checks {
            if c.failures == 0 {
                writeln!(text, "ok   {}", c.label).unwrap();
            } else {
                writeln!(text, "FAIL {} ({} failures)", c.label, c.failures).unwrap();
            }
        }
        let ok = report.ok();
        writeln!(text, "{}", if ok { "PASS" } else { "FAIL" }).unwrap();
        Ok(CmdOutput {
            text,
            json: serde_json::to_value(&report).unwrap(),
            ok,
        })
    })
}

fn cmd_specht_dim(lambda: &str) -> Result<CmdOutput, Error> {
    let l = parse_shape(lambda)?;
    let dim = dimension_oracle(&l)?;
    let text = format!("shape {l}\ndimension {dim}\n");
    let json = json!({ "shape": l.to_string(), "dimension": dim });
    Ok(CmdOutput { text, json, ok: true })
}

fn cmd_standard_basis(args: &ShapeArgs) -> Result<CmdOutput, Error> {
    let l = parse_shape(&args.lambda)?;
    let realized = resolve_params(&args.common.params, l.m(), l.size())?;
    with_context!(realized, |ctx| {
        let report = verify_standard_basis(&ctx, &l)?;
        let mut text = String::new();
        writeln!(text, "shape {}", report.shape).unwrap();
        writeln!(text, "{}", report.parameters).unwrap();
        writeln!(text, "module dimension {}", report.module_dimension).unwrap();
        writeln!(text, "tableau count {}", report.oracle_dimension).unwrap();
        writeln!(
            text,
            "column flavor: {} vectors, independent {}, spans {}",
            report.column_vectors, report.column_independent, report.column_spans_module
        )
        .unwrap();
        writeln!(
            text,
            "dual-row flavor: {} vectors, independent {}, spans {}",
            report.dual_row_vectors, report.dual_row_independent, report.dual_row_spans_module
        )
        .unwrap();
        writeln!(text, "{}", if report.pass { "PASS" } else { "FAIL" }).unwrap();
        let ok = report.pass;
        Ok(CmdOutput {
            text,
            json: serde_json::to_value(&report).unwrap(),
            ok,
        })
    })
}

fn cmd_rank_one(args: &ShapeArgs) -> Result<CmdOutput, Error> {
    let l = parse_shape(&args.lambda)?;
    let realized = resolve_params(&args.common.params, l.m(), l.size())?;
    with_context!(realized, |ctx| {
        let report = rank_one_check(&ctx, &l)?;
        let mut text = String::new();
        writeln!(text, "shape {}", report.shape).unwrap();
        writeln!(text, "{}", report.parameters).unwrap();
        writeln!(text, "span rank {}", report.rank).unwrap();
        writeln!(text, "z nonzero {}", report.z_nonzero).unwrap();
        writeln!(text, "z in span {}", report.z_in_span).unwrap();
        writeln!(text, "{}", if report.pass { "PASS" } else { "FAIL" }).unwrap();
        let ok = report.pass;
        Ok(CmdOutput {
            text,
            json: serde_json::to_value(&report).unwrap(),
            ok,
        })
    })
}

fn cmd_branch_ordinary(args: &ShapeArgs) -> Result<CmdOutput, Error> {
    let l = parse_shape(&args.lambda)?;
    let realized = resolve_params(&args.common.params, l.m(), l.size())?;
    with_context!(realized, |ctx| {
        let (_, report) = ordinary_filtration(&ctx, &l)?;
        let mut text = String::new();
        writeln!(text, "shape {}", report.shape).unwrap();
        writeln!(text, "{}", report.parameters).unwrap();
        for row in &report.rows {
            writeln!(
                text,
                "node ({},{},{}) j {} child {} section {} expected {}",
                row.node.component,
                row.node.row,
                row.node.col,
                row.j_number,
                row.child,
                row.section_dimension,
                row.expected_dimension
            )
            .unwrap();
        }
        writeln!(text, "total dimension {}", report.total_dimension).unwrap();
        writeln!(text, "top equals module {}", report.top_equals_specht).unwrap();
        writeln!(text, "{}", if report.pass { "PASS" } else { "FAIL" }).unwrap();
        let ok = report.pass;
        Ok(CmdOutput {
            text,
            json: serde_json::to_value(&report).unwrap(),
            ok,
        })
    })
}

fn cmd_branch_semisimple(args: &ShapeArgs) -> Result<CmdOutput, Error> {
    let l = parse_shape(&args.lambda)?;
    let realized = resolve_params(&args.common.params, l.m(), l.size())?;
    with_context!(realized, |ctx| {
        let report = restriction_decomposition_check(&ctx, &l)?;
        let mut text = String::new();
        writeln!(text, "shape {}", report.shape).unwrap();
        writeln!(text, "{}", report.parameters).unwrap();
        for row in &report.rows {
            writeln!(
                text,
                "node ({},{},{}) child {} dimension {} multiplicity {}",
                row.node.component,
                row.node.row,
                row.node.col,
                row.child,
                row.child_dimension,
                row.multiplicity
            )
            .unwrap();
        }
        writeln!(
            text,
            "summands {} module {}",
            report.summand_total, report.specht_dimension
        )
        .unwrap();
        writeln!(text, "{}", if report.pass { "PASS" } else { "FAIL" }).unwrap();
        let ok = report.pass;
        Ok(CmdOutput {
            text,
            json: serde_json::to_value(&report).unwrap(),
            ok,
        })
    })
}

fn cmd_branch_modular(args: &ShapeArgs) -> Result<CmdOutput, Error> {
    let l = parse_shape(&args.lambda)?;
    let realized = resolve_params(&args.common.params, l.m(), l.size())?;
    with_context!(realized, |ctx| {
        let report = modular_branching_check(&ctx, &l)?;
        let mut text = String::new();
        writeln!(text, "shape {}", report.shape).unwrap();
        writeln!(text, "{}", report.parameters).unwrap();
        for row in &report.rows {
            writeln!(
                text,
                "child {} homS {} homD {} normal {} good {} {}",
                row.child,
                row.hom_from_specht,
                row.hom_from_simple,
                row.predicted_normal,
                row.predicted_good,
                if row.ok { "ok" } else { "MISMATCH" }
            )
            .unwrap();
        }
        writeln!(text, "{}", if report.pass { "PASS" } else { "FAIL" }).unwrap();
        let ok = report.pass;
        Ok(CmdOutput {
            text,
            json: serde_json::to_value(&report).unwrap(),
            ok,
        })
    })
}

fn cmd_nodes_classify(lambda: &str, convention: SideArg, common: &CommonArgs) -> Result<CmdOutput, Error> {
    let l = parse_shape(lambda)?;
    let realized = resolve_params(&common.params, l.m(), l.size())?;
    let side = match convention {
        SideArg::Above => MatchingSide::Above,
        SideArg::Below => MatchingSide::Below,
    };
    let rows = match realized {
        RealizedParams::Rationals(p) => classify_nodes(&l, &p, side)?,
        RealizedParams::Prime(p) => classify_nodes(&l, &p, side)?,
    };
    let mut text = String::new();
    writeln!(text, "shape {l}").unwrap();
    for c in &rows {
        writeln!(
            text,
            "node ({},{},{}) residue {} {:?}",
            c.node.component, c.node.row, c.node.col, c.residue, c.status
        )
        .unwrap();
    }
    Ok(CmdOutput {
        text,
        json: json!({
            "shape": l.to_string(),
            "nodes": serde_json::to_value(&rows).unwrap(),
        }),
        ok: true,
    })
}

fn cmd_sum_of_squares(args: &RankArgs) -> Result<CmdOutput, Error> {
    let realized = resolve_params(&args.common.params, args.m, args.r)?;
    with_context!(realized, |ctx| {
        let mut text = String::new();
        let mut total = 0usize;
        let mut rows = Vec::new();
        for l in enumerate_multipartitions(args.m, args.r) {
            let dim = specht_module(&ctx, &l)?.dimension();
            total += dim * dim;
            writeln!(text, "{l} dimension {dim}").unwrap();
            rows.push(json!({ "shape": l.to_string(), "dimension": dim }));
        }
        let expected = ctx.dimension();
        let ok = total == expected;
        writeln!(text, "sum of squares {total}").unwrap();
        writeln!(text, "algebra dimension {expected}").unwrap();
        writeln!(text, "{}", if ok { "PASS" } else { "FAIL" }).unwrap();
        Ok(CmdOutput {
            text,
            json: json!({
                "m": args.m,
                "r": args.r,
                "modules": rows,
                "sum_of_squares": total,
                "algebra_dimension": expected,
                "pass": ok,
            }),
            ok,
        })
    })
}

fn dispatch(cli: &Cli) -> Result<(CmdOutput, Format), Error> {
    let (out, format) = match &cli.command {
        Command::Enum(args) => (cmd_enum(args)?, args.common.format),
        Command::Dominance { a, b, format } => (cmd_dominance(a, b)?, *format),
        Command::Tableaux { lambda, flavor, format } => (cmd_tableaux(lambda, *flavor)?, *format),
        Command::WElements { lambda, format } => (cmd_w_elements(lambda)?, *format),
        Command::AlgebraSelftest(args) => (cmd_selftest(args)?, args.common.format),
        Command::SpechtDim { lambda, format } => (cmd_specht_dim(lambda)?, *format),
        Command::Verify(VerifyCommand::StandardBasis(args)) => {
            (cmd_standard_basis(args)?, args.common.format)
        }
        Command::Verify(VerifyCommand::RankOne(args)) => {
            (cmd_rank_one(args)?, args.common.format)
        }
        Command::Branch(BranchCommand::Ordinary(args)) => {
            (cmd_branch_ordinary(args)?, args.common.format)
        }
        Command::Branch(BranchCommand::Semisimple(args)) => {
            (cmd_branch_semisimple(args)?, args.common.format)
        }
        Command::Branch(BranchCommand::Modular(args)) => {
            (cmd_branch_modular(args)?, args.common.format)
        }
        Command::Nodes(NodesCommand::Classify { lambda, convention, common }) => {
            (cmd_nodes_classify(lambda, *convention, common)?, common.format)
        }
        Command::SumOfSquares(args) => (cmd_sum_of_squares(args)?, args.common.format),
    };
    Ok((out, format))
}

/// Runs one invocation; output goes to `out`, exit code is returned.
pub fn run<W: std::io::Write>(argv: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return e.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok((result, format)) => {
            match format {
                Format::Text => {
                    let _ = write!(out, "{}", result.text);
                }
                Format::Json => {
                    let _ = writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&result.json).unwrap()
                    );
                }
            }
            if result.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            match e {
                Error::Internal(_) => 1,
                _ => 2,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &[&str]) -> (i32, String) {
        let argv: Vec<String> = std::iter::once("akh".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut buf = Vec::new();
        let code = run(&argv, &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn enumeration_counts_shapes() {
        let (code, out) = invoke(&["enum", "--m", "2", "--r", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("count 5"), "{out}");
        assert!(out.starts_with("2|0\n"), "{out}");
    }

    #[test]
    fn dominance_prints_both_directions() {
        let (code, out) = invoke(&["dominance", "--a", "1,1|1", "--b", "2|1"]);
        assert_eq!(code, 0);
        assert!(out.contains("1,1|1 <= 2|1: true"), "{out}");
        assert!(out.contains("2|1 <= 1,1|1: false"), "{out}");
        // mismatched sizes are a usage error
        let (code, _) = invoke(&["dominance", "--a", "1|0", "--b", "2|1"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn tableaux_lists_permutations() {
        let (code, out) = invoke(&["tableaux", "--lambda", "2|1"]);
        assert_eq!(code, 0);
        assert!(out.contains("count 3"), "{out}");
    }

    #[test]
    fn selftest_passes_on_presets() {
        let (code, out) = invoke(&["algebra-selftest", "--m", "2", "--r", "2"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("dimension 8"), "{out}");
        assert!(out.trim_end().ends_with("PASS"), "{out}");
        let (code, out) = invoke(&[
            "algebra-selftest",
            "--m",
            "2",
            "--r",
            "2",
            "--params",
            "f5",
        ]);
        assert_eq!(code, 0, "{out}");
    }

    #[test]
    fn standard_basis_command() {
        let (code, out) = invoke(&["verify", "standard-basis", "--lambda", "1|1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("module dimension 2"), "{out}");
        let (code, out) = invoke(&[
            "verify",
            "standard-basis",
            "--lambda",
            "2|1",
            "--params",
            "f5",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0, "{out}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["module_dimension"], 3);
        assert_eq!(v["pass"], true);
    }

    #[test]
    fn rank_one_command() {
        let (code, out) = invoke(&["verify", "rank-one", "--lambda", "1|1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("span rank 1"), "{out}");
    }

    #[test]
    fn branch_commands() {
        let (code, out) = invoke(&["branch", "ordinary", "--lambda", "2,1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("top equals module true"), "{out}");

        let (code, out) = invoke(&["branch", "semisimple", "--lambda", "2|1"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("summands 3 module 3"), "{out}");

        // non-semisimple parameters are a regime error
        let (code, out) = invoke(&[
            "branch",
            "semisimple",
            "--lambda",
            "2|1",
            "--params",
            "f5",
        ]);
        assert_eq!(code, 2, "{out}");
        assert!(out.starts_with("error:"), "{out}");
    }

    #[test]
    fn modular_branch_uses_fixture_file() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/f5.json");
        let (code, out) = invoke(&["branch", "modular", "--lambda", "2|1", "--params", path]);
        assert_eq!(code, 0, "{out}");
        let socle_rows: Vec<&str> = out
            .lines()
            .filter(|l| l.starts_with("child") && l.contains("homD 1"))
            .collect();
        assert_eq!(socle_rows.len(), 2, "{out}");
        // fixture rank must match the shape
        let (code, _) = invoke(&["branch", "modular", "--lambda", "1|1", "--params", path]);
        assert_eq!(code, 2);
    }

    #[test]
    fn nodes_classify_command() {
        let (code, out) = invoke(&[
            "nodes",
            "classify",
            "--lambda",
            "2|1",
            "--params",
            "f5",
        ]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("Good"), "{out}");
    }

    #[test]
    fn sum_of_squares_command() {
        let (code, out) = invoke(&["sum-of-squares", "--m", "2", "--r", "2"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("sum of squares 8"), "{out}");
        assert!(out.contains("algebra dimension 8"), "{out}");
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _) = invoke(&["verify", "standard-basis", "--lambda", "not-a-shape"]);
        assert_eq!(code, 2);
        let (code, _) = invoke(&["no-such-command"]);
        assert_eq!(code, 2);
        let (code, _) = invoke(&[
            "verify",
            "standard-basis",
            "--lambda",
            "1|1|1",
            "--params",
            "f5",
        ]);
        assert_eq!(code, 2);
    }

    #[test]
    fn json_output_is_deterministic() {
        let (_, first) = invoke(&["enum", "--m", "2", "--r", "3", "--format", "json"]);
        let (_, second) = invoke(&["enum", "--m", "2", "--r", "3", "--format", "json"]);
        assert_eq!(first, second);
        let v: Value = serde_json::from_str(&first).unwrap();
        assert_eq!(v["count"], 10);
    }
}
