//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a hypothesis fails or a requested
//! quantity is undefined for the input, 2 on malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::cox::{
    cox_presentation, lift_subtorus, variety_is_smooth, ClassGroupElement, CoxError,
    CoxPresentation,
};
use crate::fans::{Fan, SupportConvexity};
use crate::groups::{
    classify_quotient, commutes_with_torus, hyperplane_permutation_report, normalizes_torus,
    subgroup_from_weights, QuotientType, SubgroupDecomposition, WeightAction,
};
use crate::intlin::{self, CokernelInvariants};
use crate::json::{
    fan_json, int_json, matrix_json, parse_fan, parse_matrix, parse_weights, rational_json,
    vector_json, InputError,
};
use crate::pipeline::theorem_pipeline;

pub const EXIT_OK: i32 = 0;
pub const EXIT_HYPOTHESIS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "toric-cox",
    version,
    about = "Cox quotient presentations of toric varieties"
)]
struct Args {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a fan file describes a fan.
    Validate { fan: String },
    /// Nondegeneracy, completeness, convex support and smoothness.
    Properties { fan: String },
    /// The presentation (Q, Σ, H) with class group and complement codimension.
    Cox { fan: String },
    /// Class group and degrees of the Cox coordinates.
    Classgroup { fan: String },
    /// Lift a subtorus of the big torus to the Cox space.
    Lift {
        fan: String,
        /// n × r cocharacter matrix, inline JSON or a file.
        #[arg(long)]
        iota: String,
    },
    /// Quotient type of a corank-one diagonal subgroup and hyperplane reports.
    Diag { weights: String },
    /// Realize a codimension-one torus action inside the big torus.
    Pipeline {
        fan: String,
        /// (n−1) × m weight matrix, inline JSON or a file.
        #[arg(long)]
        weights: String,
    },
    /// Smith normal form of an integer matrix.
    Snf { matrix: String },
}

struct Outcome {
    value: Value,
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(value: Value, text: String) -> Outcome {
        Outcome {
            value,
            text,
            code: EXIT_OK,
        }
    }
}

/// Reads a file, or takes the argument itself when it is inline JSON.
fn load(arg: &str) -> Result<String, InputError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|source| InputError::Io {
        path: arg.to_string(),
        source,
    })
}

fn load_fan(arg: &str) -> Result<Fan, InputError> {
    parse_fan(&load(arg)?)
}

fn class_group_json(cl: &CokernelInvariants) -> Value {
    json!({"free": cl.free_rank, "torsion": vector_json(&cl.torsion)})
}

fn decomposition_json(d: &SubgroupDecomposition) -> Value {
    json!({"torus_rank": d.torus_rank, "cyclic_orders": vector_json(&d.cyclic_orders)})
}

fn degree_json(e: &ClassGroupElement) -> Value {
    json!({"free": vector_json(&e.free_part), "torsion": vector_json(&e.torsion_part)})
}

fn ray_degrees(p: &CoxPresentation) -> Option<Vec<ClassGroupElement>> {
    (0..p.m())
        .map(|i| {
            let mut e = vec![BigInt::from(0); p.m()];
            e[i] = BigInt::one();
            p.degree_of_monomial(&e).ok()
        })
        .collect()
}

fn support_json(s: &SupportConvexity) -> Value {
    match s {
        SupportConvexity::Convex => json!({"outcome": s.label()}),
        SupportConvexity::NotConvex { wall, witness } => json!({
            "outcome": s.label(),
            "wall": wall.rays().iter().map(|r| vector_json(r)).collect::<Vec<_>>(),
            "witness": vector_json(witness),
        }),
        SupportConvexity::NotCertified { reason } => {
            json!({"outcome": s.label(), "reason": reason})
        }
    }
}

fn fmt_vec(v: &[BigInt]) -> String {
    let items: Vec<String> = v.iter().map(BigInt::to_string).collect();
    format!("({})", items.join(", "))
}

fn fmt_class_group(cl: &CokernelInvariants) -> String {
    let mut parts = Vec::new();
    if cl.free_rank > 0 {
        parts.push(format!("Z^{}", cl.free_rank));
    }
    parts.extend(cl.torsion.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

fn validate(fan: &str) -> Result<Outcome, InputError> {
    let f = load_fan(fan)?;
    let value = json!({
        "valid": true,
        "rank": f.rank(),
        "rays": f.rays().len(),
        "max_cones": f.max_cones().len(),
        "cones": f.cones().len(),
    });
    let text = format!(
        "valid fan: rank {}, {} rays, {} maximal cones, {} cones\n",
        f.rank(),
        f.rays().len(),
        f.max_cones().len(),
        f.cones().len()
    );
    Ok(Outcome::ok(value, text))
}

fn properties(fan: &str) -> Result<Outcome, InputError> {
    let f = load_fan(fan)?;
    let support = f.has_convex_support();
    let simplicial = f.max_cones().iter().all(|c| c.is_simplicial());
    let value = json!({
        "nondegenerate": f.is_nondegenerate(),
        "complete": f.is_complete(),
        "convex_support": support_json(&support),
        "smooth": variety_is_smooth(&f),
        "simplicial": simplicial,
        "pure_full_dimensional": f.is_pure_full_dimensional(),
    });
    let mut text = format!(
        "nondegenerate: {}\ncomplete: {}\nconvex-support: {}\nsmooth: {}\nsimplicial: {}\n",
        f.is_nondegenerate(),
        f.is_complete(),
        support.label(),
        variety_is_smooth(&f),
        simplicial
    );
    if let SupportConvexity::NotConvex { witness, .. } = &support {
        text.push_str(&format!(
            "  witness outside the support: {}\n",
            fmt_vec(witness)
        ));
    }
    Ok(Outcome::ok(value, text))
}

fn cox(fan: &str) -> Result<Outcome, InputError> {
    let f = load_fan(fan)?;
    let p = cox_presentation(&f);
    let class_group = p.class_group().ok();
    let degrees = ray_degrees(&p);
    let h = p.kernel_group();
    let value = json!({
        "m": p.m(),
        "q_matrix": matrix_json(p.q_matrix()),
        "sigma": fan_json(p.sigma()),
        "h": {
            "relations": h.relation_basis().iter().map(|r| vector_json(r)).collect::<Vec<_>>(),
            "decomposition": decomposition_json(&p.kernel_decomposition()),
        },
        "class_group": class_group.as_ref().map(class_group_json),
        "ray_degrees": degrees.as_ref().map(|d| d.iter().map(degree_json).collect::<Vec<_>>()),
        "complement_codim": p.complement_codim(),
        "acts_freely": p.acts_freely(),
        "smooth": variety_is_smooth(&f),
    });
    let d = p.kernel_decomposition();
    let mut text = format!("m = {}\nQ =\n{}", p.m(), p.q_matrix());
    text.push_str(&format!(
        "Sigma maximal cones: {:?}\n",
        p.sigma().max_cone_ray_indices()
    ));
    text.push_str(&format!(
        "H: torus of dimension {} times cyclic groups {}\n",
        d.torus_rank,
        fmt_vec(&d.cyclic_orders)
    ));
    match &class_group {
        Some(cl) => text.push_str(&format!("class group: {}\n", fmt_class_group(cl))),
        None => text.push_str("class group: undefined (degenerate fan)\n"),
    }
    text.push_str(&format!(
        "complement codimension: {}\nH acts freely: {}\nsmooth: {}\n",
        p.complement_codim(),
        p.acts_freely(),
        variety_is_smooth(&f)
    ));
    let code = if class_group.is_some() {
        EXIT_OK
    } else {
        EXIT_HYPOTHESIS
    };
    Ok(Outcome { value, text, code })
}

fn classgroup(fan: &str) -> Result<Outcome, InputError> {
    let f = load_fan(fan)?;
    let p = cox_presentation(&f);
    match (p.class_group(), ray_degrees(&p)) {
        (Ok(cl), Some(degrees)) => {
            let mut value = class_group_json(&cl);
            value["ray_degrees"] = Value::Array(degrees.iter().map(degree_json).collect());
            let mut text = format!("class group: {}\n", fmt_class_group(&cl));
            for (i, d) in degrees.iter().enumerate() {
                text.push_str(&format!(
                    "deg z{i} = free {} torsion {}\n",
                    fmt_vec(&d.free_part),
                    fmt_vec(&d.torsion_part)
                ));
            }
            Ok(Outcome::ok(value, text))
        }
        _ => Ok(hypothesis_failure(
            "degenerate-fan",
            "the rays do not span the ambient space",
        )),
    }
}

fn hypothesis_failure(name: &str, message: &str) -> Outcome {
    Outcome {
        value: json!({"diagnostic": name, "message": message}),
        text: format!("{name}: {message}\n"),
        code: EXIT_HYPOTHESIS,
    }
}

fn lift(fan: &str, iota: &str) -> Result<Outcome, InputError> {
    let f = load_fan(fan)?;
    let iota = parse_matrix(&load(iota)?)?;
    let p = cox_presentation(&f);
    match lift_subtorus(&p, &iota) {
        Ok(l) => {
            let check = p
                .q_matrix()
                .mul(&l.weights.transpose())
                .expect("shapes agree");
            let value = json!({
                "degree": int_json(&l.degree),
                "column_degrees": vector_json(&l.column_degrees),
                "weights": matrix_json(&l.weights),
                "effective": l.effective,
                "q_weights_t": matrix_json(&check),
            });
            let text = format!(
                "minimal degree d = {}\nweights W =\n{}effective: {}\nQ*W^T = d*iota =\n{}",
                l.degree, l.weights, l.effective, check
            );
            Ok(Outcome::ok(value, text))
        }
        Err(
            e @ (CoxError::IotaShape { .. }
            | CoxError::IotaNotInjective { .. }
            | CoxError::ExponentLength { .. }),
        ) => Err(InputError::Shape(e.to_string())),
        Err(e) => Ok(hypothesis_failure("no-lift", &e.to_string())),
    }
}

fn diag(weights: &str) -> Result<Outcome, InputError> {
    let input = parse_weights(&load(weights)?)?;
    let action = WeightAction::new(input.weights.clone());
    let g0 = subgroup_from_weights(&action);
    let mut value = Map::new();
    value.insert("ambient".into(), json!(action.ambient()));
    value.insert("dimension".into(), json!(g0.dimension()));
    value.insert("effective".into(), json!(action.is_effective()));
    value.insert("decomposition".into(), decomposition_json(&g0.decompose()));
    let mut text = format!(
        "subgroup of dimension {} in a torus of rank {}; effective: {}\n",
        g0.dimension(),
        action.ambient(),
        action.is_effective()
    );
    let quotient = match classify_quotient(&g0) {
        Ok(q) => q,
        Err(e) => {
            value.insert("quotient".into(), Value::Null);
            value.insert("diagnostic".into(), json!(e.to_string()));
            text.push_str(&format!("quotient: undefined ({e})\n"));
            return Ok(Outcome {
                value: Value::Object(value),
                text,
                code: EXIT_HYPOTHESIS,
            });
        }
    };
    let a = match &quotient {
        QuotientType::Point => {
            value.insert("quotient".into(), json!({"type": "point"}));
            text.push_str("quotient: a point\n");
            None
        }
        QuotientType::Monomial(a) => {
            value.insert(
                "quotient".into(),
                json!({"type": "monomial", "exponents": vector_json(a)}),
            );
            text.push_str(&format!("quotient: the line, via z^{}\n", fmt_vec(a)));
            Some(a)
        }
    };
    let mut reports = Vec::new();
    for (index, g) in input.monomials.iter().enumerate() {
        let commutes = commutes_with_torus(g, &g0);
        let normalizes = normalizes_torus(g, &g0);
        let mut entry = json!({
            "perm": g.perm(),
            "scalars": g.scalars().iter().map(rational_json).collect::<Vec<_>>(),
            "commutes": commutes,
            "normalizes": normalizes,
        });
        text.push_str(&format!(
            "monomial matrix {index}: commutes {commutes}, normalizes {normalizes}"
        ));
        if let Some(a) = a {
            let r = hyperplane_permutation_report(g, a);
            entry["hyperplanes"] = json!({
                "pi": r.pi,
                "fixes_zero_support": r.fixes_zero_support,
                "permutes_positive_support": r.permutes_positive_support,
            });
            text.push_str(&format!(
                ", fixes zero support {}, permutes positive support {}",
                r.fixes_zero_support, r.permutes_positive_support
            ));
        }
        text.push('\n');
        reports.push(entry);
    }
    value.insert("monomials".into(), Value::Array(reports));
    Ok(Outcome::ok(Value::Object(value), text))
}

fn pipeline(fan: &str, weights: &str) -> Result<Outcome, InputError> {
    let f = load_fan(fan)?;
    let w = parse_weights(&load(weights)?)?.weights;
    let r = theorem_pipeline(&f, &w).map_err(|e| InputError::Shape(e.to_string()))?;
    let holes = match r.no_small_holes_certified() {
        Some(b) => json!(b),
        None => json!("not-certified"),
    };
    let value = json!({
        "nondegenerate": r.nondegenerate,
        "no_small_holes_certified": holes,
        "convex_support": support_json(&r.support),
        "cox": {
            "m": r.cox.m,
            "class_group": r.cox.class_group.as_ref().map(class_group_json),
            "h_decomposition": decomposition_json(&r.cox.h_decomposition),
        },
        "input_torus_rank": r.input_torus_rank,
        "combined_dimension": r.combined_dimension,
        "diagnostics": r.diagnostics.iter().map(|d| d.name()).collect::<Vec<_>>(),
        "hypotheses_met": r.hypotheses_met,
        "embedding": r.embedding.as_ref().map(matrix_json),
        "saturated_embedding": r.saturated_embedding.as_ref().map(matrix_json),
        "isogeny_degree": int_json(&r.isogeny_degree),
    });
    let mut text = format!(
        "nondegenerate: {}\nconvex support: {}\nm = {}, combined dimension {} (need {})\n",
        r.nondegenerate,
        r.support.label(),
        r.cox.m,
        r.combined_dimension,
        r.cox.m - 1
    );
    if r.hypotheses_met {
        let e = r.embedding.as_ref().expect("present when hypotheses hold");
        text.push_str(&format!("hypotheses met\nembedding Q*W^T =\n{e}"));
        if let Some(s) = &r.saturated_embedding {
            text.push_str(&format!("saturation =\n{s}"));
        }
    } else {
        let names: Vec<&str> = r.diagnostics.iter().map(|d| d.name()).collect();
        text.push_str(&format!("hypotheses not met: {}\n", names.join(", ")));
    }
    let code = if r.hypotheses_met {
        EXIT_OK
    } else {
        EXIT_HYPOTHESIS
    };
    Ok(Outcome { value, text, code })
}

fn snf(matrix: &str) -> Result<Outcome, InputError> {
    let a = parse_matrix(&load(matrix)?)?;
    let s = intlin::smith_normal_form(&a);
    let value = json!({
        "u": matrix_json(&s.u),
        "d": matrix_json(&s.d),
        "v": matrix_json(&s.v),
        "invariant_factors": vector_json(&s.invariant_factors()),
        "rank": s.rank(),
    });
    let text = format!(
        "invariant factors: {}\nD =\n{}U =\n{}V =\n{}",
        fmt_vec(&s.invariant_factors()),
        s.d,
        s.u,
        s.v
    );
    Ok(Outcome::ok(value, text))
}

/// Runs the tool on `argv` (including the program name), writing results to
/// `out` and errors to `err`; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let result = match &args.command {
        Command::Validate { fan } => validate(fan),
        Command::Properties { fan } => properties(fan),
        Command::Cox { fan } => cox(fan),
        Command::Classgroup { fan } => classgroup(fan),
        Command::Lift { fan, iota } => lift(fan, iota),
        Command::Diag { weights } => diag(weights),
        Command::Pipeline { fan, weights } => pipeline(fan, weights),
        Command::Snf { matrix } => snf(matrix),
    };
    match result {
        Ok(o) => {
            let written = if args.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.value).expect("values serialize")
                )
            } else {
                write!(out, "{}", o.text)
            };
            if written.is_err() {
                return EXIT_INPUT;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Entry point for the binary.
pub fn cli_main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
