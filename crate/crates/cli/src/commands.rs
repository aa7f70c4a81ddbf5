use serde_json::{json, Value};
use spgauge_core::orders::{
    count_invariant_classes, gauge_invariant, gauge_modulus, gauge_necessary_equiv,
    mapping_group_order, modulus_factorization, q2_group_order, q2_group_order_formula,
    samelson_order, samelson_order_formula, ParityBranch,
};
use spgauge_core::report::discrepancy_report;
use spgauge_core::{BigInt, ChMode, CheckClass};

use crate::output::{CommandResult, Outcome, Tsv};
use crate::{Cli, CliError, Column, Command, GaugeSub, OrderKind, EXIT_OK, EXIT_VERIFY_FAILED};

/// Divisor lists are printed only up to this modulus.
pub const DIVISOR_LIST_LIMIT: u64 = 1_000_000;

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let mode = ChMode::from(cli.mode);
    let mut outcome = match &cli.command {
        Command::Order { kind, m, n } => cmd_order(*kind, *m, *n, mode)?,
        Command::Gauge {
            sub,
            m,
            n,
            k,
            kprime,
        } => cmd_gauge(*sub, *m, *n, k.as_ref(), kprime.as_ref(), mode)?,
        Command::Table { m, n, columns } => cmd_table(*m, *n, columns, mode)?,
        Command::Verify { max_n } => cmd_verify(*max_n, mode)?,
    };
    if mode == ChMode::PaperLiteral {
        outcome
            .result
            .warnings
            .push("paper mode evaluates printed sums and tables; use for auditing only".into());
    }
    Ok(outcome)
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn require_m(m: Option<u32>) -> Result<u32, CliError> {
    m.ok_or_else(|| usage("--m is required"))
}

pub fn cmd_order(
    kind: OrderKind,
    m: Option<u32>,
    n: u32,
    mode: ChMode,
) -> Result<Outcome, CliError> {
    let (name, order, closed) = match kind {
        OrderKind::Samelson => {
            let m = require_m(m)?;
            (
                "order samelson",
                samelson_order(m, n, mode)?,
                samelson_order_formula(m, n)?,
            )
        }
        OrderKind::MappingGroup => {
            let m = require_m(m)?;
            (
                "order mapping-group",
                mapping_group_order(m, n, mode)?,
                samelson_order_formula(m, n)?,
            )
        }
        OrderKind::Q2Group => (
            "order q2-group",
            q2_group_order(n, mode)?,
            q2_group_order_formula(n)?,
        ),
    };
    let agree = order == closed;
    let order = order.into_order().to_string();
    let closed = closed.into_order().to_string();

    let mut result = CommandResult::new(
        name,
        mode,
        json!({ "order": order, "closed_form": closed, "agree": agree }),
    );
    let m_cell = match (kind, m) {
        (OrderKind::Q2Group, Some(_)) => {
            result.warnings.push("--m is ignored for q2-group".into());
            String::new()
        }
        (OrderKind::Q2Group, None) => String::new(),
        (_, m) => m.map(|m| m.to_string()).unwrap_or_default(),
    };
    if !m_cell.is_empty() {
        result = result.param("m", &m_cell);
    }
    result = result.param("n", n);
    if !agree {
        result.warnings.push(format!(
            "computed order {order} differs from closed form {closed}"
        ));
    }

    let text = format!(
        "{order} (closed form {closed}, {})",
        if agree { "agree" } else { "DISAGREE" }
    );
    let kind_label = name.trim_start_matches("order ");
    let tsv = Tsv::new(&["kind", "m", "n", "mode", "order", "closed_form", "agree"]).row(vec![
        kind_label.into(),
        m_cell,
        n.to_string(),
        mode.to_string(),
        order,
        closed,
        agree.to_string(),
    ]);
    Ok(Outcome {
        result,
        text,
        tsv,
        exit_code: EXIT_OK,
    })
}

pub fn cmd_gauge(
    sub: GaugeSub,
    m: u32,
    n: u32,
    k: Option<&BigInt>,
    kprime: Option<&BigInt>,
    mode: ChMode,
) -> Result<Outcome, CliError> {
    let modulus = gauge_modulus(m, n)?;
    let d = modulus.to_string();
    let outcome = match sub {
        GaugeSub::Invariant => {
            let k = k.ok_or_else(|| usage("gauge invariant requires --k"))?;
            let inv = gauge_invariant(m, n, k)?.to_string();
            let result = CommandResult::new(
                "gauge invariant",
                mode,
                json!({ "invariant": inv, "modulus": d }),
            )
            .param("m", m)
            .param("n", n)
            .param("k", k);
            let tsv = Tsv::new(&["m", "n", "k", "modulus", "invariant"]).row(vec![
                m.to_string(),
                n.to_string(),
                k.to_string(),
                d.clone(),
                inv.clone(),
            ]);
            Outcome {
                result,
                text: format!("{inv} (D={d})"),
                tsv,
                exit_code: EXIT_OK,
            }
        }
        GaugeSub::Compare => {
            let (k, kp) = match (k, kprime) {
                (Some(k), Some(kp)) => (k, kp),
                _ => return Err(usage("gauge compare requires --k and --kprime")),
            };
            let same = gauge_necessary_equiv(m, n, k, kp)?;
            let inv_k = gauge_invariant(m, n, k)?.to_string();
            let inv_kp = gauge_invariant(m, n, kp)?.to_string();
            let result = CommandResult::new(
                "gauge compare",
                mode,
                json!({
                    "necessary_condition_holds": same,
                    "invariant_k": inv_k,
                    "invariant_kprime": inv_kp,
                    "modulus": d,
                }),
            )
            .param("m", m)
            .param("n", n)
            .param("k", k)
            .param("kprime", kp);
            let rel = if same { "=" } else { "≠" };
            let text = format!("{same} (inv {inv_k} {rel} inv {inv_kp}, D={d})");
            let tsv = Tsv::new(&[
                "m",
                "n",
                "k",
                "kprime",
                "modulus",
                "invariant_k",
                "invariant_kprime",
                "necessary_condition",
            ])
            .row(vec![
                m.to_string(),
                n.to_string(),
                k.to_string(),
                kp.to_string(),
                d.clone(),
                inv_k,
                inv_kp,
                same.to_string(),
            ]);
            Outcome {
                result,
                text,
                tsv,
                exit_code: EXIT_OK,
            }
        }
        GaugeSub::Classes => {
            let classes = count_invariant_classes(m, n)?.to_string();
            let divisors = if modulus <= BigInt::from(DIVISOR_LIST_LIMIT) {
                Some(
                    modulus_factorization(m, n)?
                        .divisors()
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>(),
                )
            } else {
                None
            };
            let result = CommandResult::new(
                "gauge classes",
                mode,
                json!({ "classes": classes, "modulus": d, "divisors": divisors }),
            )
            .param("m", m)
            .param("n", n);
            let mut text = classes.clone();
            let divisor_cell = divisors.as_ref().map(|ds| ds.join(" ")).unwrap_or_default();
            if divisors.is_some() {
                text.push_str(&format!("\ndivisors of D={d}: {divisor_cell}"));
            }
            let tsv = Tsv::new(&["m", "n", "modulus", "classes", "divisors"]).row(vec![
                m.to_string(),
                n.to_string(),
                d.clone(),
                classes,
                divisor_cell,
            ]);
            Outcome {
                result,
                text,
                tsv,
                exit_code: EXIT_OK,
            }
        }
        GaugeSub::Modulus => {
            let result = CommandResult::new("gauge modulus", mode, Value::String(d.clone()))
                .param("m", m)
                .param("n", n);
            let tsv =
                Tsv::new(&["m", "n", "modulus"]).row(vec![m.to_string(), n.to_string(), d.clone()]);
            Outcome {
                result,
                text: d,
                tsv,
                exit_code: EXIT_OK,
            }
        }
    };
    Ok(outcome)
}

pub fn cmd_table(
    (m_lo, m_hi): (u32, u32),
    (n_lo, n_hi): (u32, u32),
    columns: &[Column],
    mode: ChMode,
) -> Result<Outcome, CliError> {
    let columns: Vec<Column> = if columns.is_empty() {
        Column::ALL.to_vec()
    } else {
        columns.to_vec()
    };
    let cells: Vec<(u32, u32)> = (m_lo.max(1)..=m_hi)
        .flat_map(|m| (n_lo..=n_hi).filter(move |&n| m < n).map(move |n| (m, n)))
        .collect();
    if cells.is_empty() {
        return Err(usage("no (m, n) cell with 1 <= m < n in the given ranges"));
    }

    let mut header = vec!["m", "n"];
    header.extend(columns.iter().map(|c| c.header()));
    let mut tsv = Tsv::new(&header);
    let mut rows = Vec::with_capacity(cells.len());
    for (m, n) in cells {
        let mut cells = vec![m.to_string(), n.to_string()];
        for col in &columns {
            cells.push(match col {
                Column::Samelson => samelson_order(m, n, mode)?.into_order().to_string(),
                Column::Modulus => gauge_modulus(m, n)?.to_string(),
                Column::Classes => count_invariant_classes(m, n)?.to_string(),
                Column::Branch => ParityBranch::of(m, n).label().to_string(),
            });
        }
        let row: serde_json::Map<String, Value> = header
            .iter()
            .zip(&cells)
            .map(|(h, c)| (h.to_string(), Value::String(c.clone())))
            .collect();
        rows.push(Value::Object(row));
        tsv.push(cells);
    }

    let text = tsv
        .rows
        .iter()
        .map(|r| r.join(" "))
        .collect::<Vec<_>>()
        .join("\n");
    let text = format!("{}\n{text}", tsv.header.join(" "));
    let result = CommandResult::new("table", mode, Value::Array(rows))
        .param("m", format!("{m_lo}..{m_hi}"))
        .param("n", format!("{n_lo}..{n_hi}"))
        .param(
            "columns",
            columns
                .iter()
                .map(|c| c.header())
                .collect::<Vec<_>>()
                .join(","),
        );
    Ok(Outcome {
        result,
        text,
        tsv,
        exit_code: EXIT_OK,
    })
}

pub fn cmd_verify(max_n: u32, mode: ChMode) -> Result<Outcome, CliError> {
    let report = discrepancy_report(max_n)?;
    let ok = report.theorem_level_ok();

    let tallies: Vec<(CheckClass, (usize, usize))> = CheckClass::ALL
        .iter()
        .map(|&c| (c, report.tally(c)))
        .collect();
    let summary_line = tallies
        .iter()
        .map(|(c, (pass, total))| format!("({c}) {pass}/{total} pass"))
        .collect::<Vec<_>>()
        .join(", ");
    let summary: serde_json::Map<String, Value> = tallies
        .iter()
        .map(|(c, (pass, total))| {
            (
                c.letter().to_string(),
                Value::String(format!("{pass}/{total}")),
            )
        })
        .collect();

    let mut text = summary_line.clone();
    text.push_str(&format!(
        "\ntheorem-level checks: {}\n{} discrepancies (paper vs recomputed):",
        if ok { "PASS" } else { "FAIL" },
        report.discrepancies.len()
    ));
    for d in &report.discrepancies {
        let params = d
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",");
        text.push_str(&format!(
            "\n  {} [{params}]: paper {}, recomputed {}",
            d.location, d.paper_value, d.recomputed_value
        ));
    }

    let mut tsv = Tsv::new(&[
        "class", "name", "params", "mode", "expected", "actual", "pass",
    ]);
    for c in &report.checks {
        let params = c
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",");
        tsv.push(vec![
            c.class.to_string(),
            c.name.clone(),
            params,
            c.mode.to_string(),
            c.expected.clone(),
            c.actual.clone(),
            c.pass.to_string(),
        ]);
    }

    let mut result = CommandResult::new(
        "verify",
        mode,
        json!({ "summary": summary, "theorem_level_pass": ok }),
    )
    .param("max_n", max_n);
    if mode != ChMode::ClosedForm {
        result
            .warnings
            .push("verify always runs its own fixed modes; --mode is recorded only".into());
    }
    result.checks = Some(report);
    Ok(Outcome {
        result,
        text,
        tsv,
        exit_code: if ok { EXIT_OK } else { EXIT_VERIFY_FAILED },
    })
}
