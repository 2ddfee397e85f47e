//! Command implementations behind the `cdalg` binary. Each command returns
//! its rendered output so it can be tested without spawning a process.

pub mod expr;

use std::fmt::Write as _;

use cdalg::classification::classify;
use cdalg::harness::{self, RandomSpec, TheoremReport};
use cdalg::operators::{left_mult_matrix, right_mult_matrix};
use cdalg::structure_maps::{h_a_basis, octonion_span, quaternion_span};
use cdalg::table::structure_table;
use cdalg::{parse_element, rational, AlgebraError, CDElement, SubalgebraBasis};
use serde_json::json;

/// Levels above this produce very large tables; commands still run but warn.
pub const WARN_LEVEL: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Span {
    /// `{e0, ã, a, ẽ0}` (second element not used)
    Ha,
    Quaternion,
    Octonion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Side {
    Left,
    Right,
}

/// Output of a command and whether it succeeded.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, success: true }
    }
}

pub type CmdResult = Result<Output, AlgebraError>;

fn json_pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn cmd_table(n: u32, format: Format) -> CmdResult {
    let table = structure_table(n);
    let dim = table.len();
    let names: Vec<String> = (0..dim).map(|i| format!("e{i}")).collect();
    let cells: Vec<Vec<String>> = table.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
    let text = match format {
        Format::Json => json_pretty(&json!({ "level": n, "table": cells })),
        Format::Csv => {
            let mut out = format!(",{}\n", names.join(","));
            for (name, row) in names.iter().zip(&cells) {
                let _ = writeln!(out, "{name},{}", row.join(","));
            }
            out
        }
        Format::Text => {
            let width = cells.iter().flatten().chain(&names).map(String::len).max().unwrap_or(1);
            let mut out = format!("{:>width$} |", "");
            for name in &names {
                let _ = write!(out, " {name:>width$}");
            }
            out.push('\n');
            out.push_str(&"-".repeat(width + 2 + (width + 1) * dim));
            out.push('\n');
            for (name, row) in names.iter().zip(&cells) {
                let _ = write!(out, "{name:>width$} |");
                for c in row {
                    let _ = write!(out, " {c:>width$}");
                }
                out.push('\n');
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn render_element(x: &CDElement, format: Format) -> String {
    match format {
        Format::Text => format!("{x}\n"),
        Format::Json => json_pretty(x),
        Format::Csv => {
            let coeffs: Vec<String> = x.coeffs().iter().map(rational::to_pq).collect();
            coeffs.join(",") + "\n"
        }
    }
}

pub fn cmd_eval(n: u32, expression: &str, format: Format) -> CmdResult {
    let x = expr::evaluate(n, expression)?;
    Ok(Output::ok(render_element(&x, format)))
}

pub fn cmd_classify(n: u32, literal: &str, format: Format) -> CmdResult {
    let x = parse_element(n, literal)?;
    let c = classify(&x);
    let text = match format {
        Format::Json => json_pretty(&c),
        Format::Text | Format::Csv => {
            let mut out = format!(
                "element: {}\nlevel: {}\nalternative: {}\nstrongly_alternative: {}\n",
                c.element, c.level, c.alternative, c.strongly_alternative
            );
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "witness: {w}");
            }
            out
        }
    };
    Ok(Output::ok(text))
}

fn render_subalgebra(b: &SubalgebraBasis, format: Format) -> String {
    let k = b.len();
    let names: Vec<String> = (0..k).map(|i| format!("u{i}")).collect();
    let cell = |i: usize, j: usize| -> String {
        match &b.table[i][j] {
            None => "-".to_string(),
            Some(v) => {
                // A combination of the u_k, written like an element literal.
                let mut coeffs = vec![rational::zero(); k.next_power_of_two()];
                coeffs[..k].clone_from_slice(v);
                let level = k.next_power_of_two().trailing_zeros();
                let lit = CDElement::from_coeffs(level, coeffs).expect("length").to_string();
                relabel(&lit)
            }
        }
    };
    match format {
        Format::Json => json_pretty(b),
        Format::Csv => {
            let mut out = format!(",{}\n", names.join(","));
            for (i, name) in names.iter().enumerate() {
                let row: Vec<String> = (0..k).map(|j| cell(i, j)).collect();
                let _ = writeln!(out, "{name},{}", row.join(","));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for (name, e) in names.iter().zip(&b.elements) {
                let _ = writeln!(out, "{name} = {e}");
            }
            let _ = writeln!(out, "closed: {}", b.closed);
            let cells: Vec<Vec<String>> = (0..k).map(|i| (0..k).map(|j| cell(i, j)).collect()).collect();
            let width = cells.iter().flatten().chain(&names).map(String::len).max().unwrap_or(1);
            let _ = write!(out, "{:>width$} |", "");
            for name in &names {
                let _ = write!(out, " {name:>width$}");
            }
            out.push('\n');
            for (name, row) in names.iter().zip(&cells) {
                let _ = write!(out, "{name:>width$} |");
                for c in row {
                    let _ = write!(out, " {c:>width$}");
                }
                out.push('\n');
            }
            out
        }
    }
}

/// `e3` -> `u3`, bare scalars -> multiples of `u0`.
fn relabel(literal: &str) -> String {
    if literal == "0" {
        return literal.to_string();
    }
    let mut terms = Vec::new();
    for tok in literal.split(' ') {
        if tok == "+" || tok == "-" {
            terms.push(tok.to_string());
            continue;
        }
        let t = if let Some(pos) = tok.find('e') {
            format!("{}u{}", &tok[..pos], &tok[pos + 1..])
        } else if tok == "1" || tok == "-1" {
            format!("{}u0", tok.trim_end_matches('1'))
        } else {
            format!("{tok}*u0")
        };
        terms.push(t);
    }
    terms.join(" ")
}

pub fn cmd_subalgebra(n: u32, a: &str, b: Option<&str>, span: Span, rescale: bool, format: Format) -> CmdResult {
    let a = parse_element(n, a)?;
    let basis = match span {
        Span::Ha => h_a_basis(&a, rescale)?,
        Span::Quaternion | Span::Octonion => {
            let b = b.ok_or_else(|| AlgebraError::Hypothesis("this span needs a second element `b`".into()))?;
            let b = parse_element(n, b)?;
            if span == Span::Quaternion {
                quaternion_span(&a, &b)?
            } else {
                octonion_span(&a, &b)?
            }
        }
    };
    Ok(Output::ok(render_subalgebra(&basis, format)))
}

pub fn cmd_matrix(n: u32, literal: &str, side: Side) -> CmdResult {
    let a = parse_element(n, literal)?;
    let m = match side {
        Side::Left => left_mult_matrix(&a),
        Side::Right => right_mult_matrix(&a),
    };
    Ok(Output::ok(m.to_csv()))
}

pub fn cmd_norm_violation(n: u32, format: Format) -> CmdResult {
    let found = harness::find_norm_violation(n);
    let text = match (format, &found) {
        (Format::Json, None) => "null\n".to_string(),
        (Format::Json, Some((x, y))) => json_pretty(&json!({ "x": x, "y": y })),
        (_, None) => "none\n".to_string(),
        (_, Some((x, y))) => {
            let xy = x.multiply(y)?;
            format!(
                "x = {x}\ny = {y}\nxy = {xy}\nnorm_sq(xy) = {}, norm_sq(x) norm_sq(y) = {}\n",
                xy.norm_sq(),
                x.norm_sq() * y.norm_sq()
            )
        }
    };
    Ok(Output::ok(text))
}

/// Runs the registry (or one statement) at each level. JSON output is one
/// report per line; text output is a summary table.
pub fn cmd_verify(levels: &[u32], seed: u64, trials: usize, theorem: Option<&str>, format: Format) -> CmdResult {
    let spec = RandomSpec::new(seed, levels.first().copied().unwrap_or(4)).with_trials(trials);
    let reports: Vec<TheoremReport> = match theorem {
        None => harness::run_all(&spec, levels),
        Some(id) => {
            let mut out = Vec::new();
            for &level in levels {
                out.push(harness::run_theorem(id, &spec.at_level(level))?);
            }
            out
        }
    };
    let success = reports.iter().all(|r| r.passed);
    let text = match format {
        Format::Json => reports.iter().map(|r| r.to_json_line() + "\n").collect(),
        Format::Text | Format::Csv => harness::summary_table(&reports),
    };
    Ok(Output { text, success })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_entry() {
        let out = cmd_table(4, Format::Csv).unwrap().text;
        let row1: Vec<&str> = out.lines().nth(2).unwrap().split(',').collect();
        assert_eq!(row1[0], "e1");
        assert_eq!(row1[1 + 5], "-e4");
        let json: serde_json::Value = serde_json::from_str(&cmd_table(1, Format::Json).unwrap().text).unwrap();
        assert_eq!(json["table"], json!([["e0", "e1"], ["e1", "-e0"]]));
    }

    #[test]
    fn quaternion_table_text() {
        let out = cmd_table(2, Format::Text).unwrap().text;
        assert!(out.lines().nth(4).unwrap().ends_with("e2 -e3 -e0  e1"), "{out}");
    }

    #[test]
    fn eval_and_classify() {
        assert_eq!(cmd_eval(4, "(e1+e10)*e15", Format::Text).unwrap().text, "e5 - e14\n");
        let out = cmd_classify(4, "e8", Format::Text).unwrap().text;
        assert!(out.contains("strongly_alternative: true"));
        let json: serde_json::Value = serde_json::from_str(&cmd_classify(4, "e1", Format::Json).unwrap().text).unwrap();
        assert_eq!(json["alternative"], true);
        assert_eq!(json["strongly_alternative"], false);
        assert!(json["witness"].is_object());
    }

    #[test]
    fn subalgebra_output() {
        let out = cmd_subalgebra(4, "e1", None, Span::Ha, false, Format::Text).unwrap().text;
        assert!(out.contains("u1 = e9") && out.contains("closed: true"), "{out}");
        assert!(out.contains("u1 |  u1 -u0  u3 -u2"), "{out}");
        let json: serde_json::Value =
            serde_json::from_str(&cmd_subalgebra(4, "e1", Some("e2"), Span::Octonion, false, Format::Json).unwrap().text)
                .unwrap();
        assert_eq!(json["closed"], true);
        assert_eq!(json["table"][1][1], json!(["-1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1"]));
        assert!(cmd_subalgebra(4, "e1", Some("e9"), Span::Quaternion, false, Format::Json).is_err());
        assert!(cmd_subalgebra(4, "e1", None, Span::Octonion, false, Format::Json).is_err());
    }

    #[test]
    fn relabelling() {
        assert_eq!(relabel("1 - e3"), "u0 - u3");
        assert_eq!(relabel("-1/2 + 3*e1"), "-1/2*u0 + 3*u1");
        assert_eq!(relabel("-1"), "-u0");
    }

    #[test]
    fn norm_violation_output() {
        assert_eq!(cmd_norm_violation(3, Format::Text).unwrap().text, "none\n");
        assert!(cmd_norm_violation(4, Format::Text).unwrap().text.starts_with("x = e1 + e10\ny = e4 + e15\n"));
    }

    #[test]
    fn verify_single_theorem() {
        let out = cmd_verify(&[4], 7, 10, Some("theorem_4_2"), Format::Json).unwrap();
        assert!(out.success);
        let line: serde_json::Value = serde_json::from_str(out.text.lines().next().unwrap()).unwrap();
        assert_eq!(line["theorem_id"], "theorem_4_2");
        assert!(cmd_verify(&[3], 7, 10, Some("theorem_4_2"), Format::Json).is_err());
        assert!(cmd_verify(&[4], 7, 10, Some("nope"), Format::Json).is_err());
    }
}
