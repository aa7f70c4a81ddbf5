//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each, and
//! exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use num_integer::Integer;
use spgauge_core::arith::{stirling2, stirling2_oracle};
use spgauge_core::chern::{beta_k_generators, ch_coeff, psi_generators, theta_generators, ChMode};
use spgauge_core::orders::{
    count_invariant_classes, gauge_coker_order, gauge_invariant, gauge_modulus, im_alpha_k,
    q2_group_order, samelson_order, CyclicGroup,
};
use spgauge_core::report::{discrepancy_report, CheckClass};
use spgauge_core::{BigInt, Error};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn fact(n: u32) -> BigInt {
    spgauge_core::arith::factorial(n)
}

fn order(g: spgauge_core::Result<CyclicGroup>) -> Result<BigInt, String> {
    g.map(CyclicGroup::into_order).map_err(|e| e.to_string())
}

fn literature_anchors() -> Outcome {
    let s12 = order(samelson_order(1, 2, ChMode::ClosedForm))?;
    ensure(s12 == big(40), || format!("samelson_order(1,2) = {s12}"))?;
    let d12 = gauge_modulus(1, 2).map_err(|e| e.to_string())?;
    ensure(d12 == big(40), || format!("gauge_modulus(1,2) = {d12}"))?;
    let s13 = order(samelson_order(1, 3, ChMode::ClosedForm))?;
    ensure(s13 == big(84), || format!("samelson_order(1,3) = {s13}"))?;
    for n in 2..=25u64 {
        let d = gauge_modulus(1, n as u32).map_err(|e| e.to_string())?;
        ensure(d == big(4 * n * (2 * n + 1)), || {
            format!("gauge_modulus(1,{n}) = {d}")
        })?;
    }
    Ok("40, 40, 84; D(1,n) = 4n(2n+1) for n = 2..25".into())
}

fn samelson_sweep() -> Outcome {
    let mut cells = 0;
    for n in 2..=25u32 {
        for m in 1..n {
            let got = order(samelson_order(m, n, ChMode::ClosedForm))?;
            let base = fact(2 * n + 1) / fact(2 * n - 2 * m + 1);
            let expected = if m % 2 == 0 { base } else { base * 2u32 };
            ensure(got == expected, || {
                format!("(m,n)=({m},{n}): gcd {got}, closed form {expected}")
            })?;
            cells += 1;
        }
    }
    Ok(format!("{cells} cells exact"))
}

fn q2_sweep() -> Outcome {
    for n in 2..=25u32 {
        let got = order(q2_group_order(n, ChMode::ClosedForm))?;
        let expected = if n % 2 == 0 {
            fact(2 * n + 1) * 2u32 / 6u32
        } else {
            fact(2 * n + 1) / 6u32
        };
        ensure(got == expected, || {
            format!("n={n}: gcd {got}, closed form {expected}")
        })?;
    }
    Ok("n = 2..25 exact".into())
}

fn oracle_equivalence() -> Outcome {
    let mut pairs = 0;
    for d in 1..=40u32 {
        for j in 1..=d {
            let closed = ch_coeff(d, j, ChMode::ClosedForm).map_err(|e| e.to_string())?;
            let conv = ch_coeff(d, j, ChMode::Convolution).map_err(|e| e.to_string())?;
            ensure(closed == conv, || {
                format!("ch_coeff({d},{j}): closed {closed}, convolution {conv}")
            })?;
            let rec = stirling2(d, j);
            let ie = stirling2_oracle(d, j).map_err(|e| e.to_string())?;
            ensure(rec == ie, || {
                format!("S({d},{j}): recurrence {rec}, inclusion-exclusion {ie}")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (d, j) pairs"))
}

fn integrality() -> Outcome {
    let ks: Vec<BigInt> = [0u64, 1, 7, 40].into_iter().map(big).collect();
    let mut images = 0;
    let check = |r: spgauge_core::Result<_>| -> Result<(), String> {
        match r {
            Ok(_) => Ok(()),
            Err(e @ Error::NonIntegral { .. }) => Err(e.to_string()),
            Err(e) => Err(format!("unexpected error: {e}")),
        }
    };
    for n in 2..=25u32 {
        for m in 1..n {
            check(psi_generators(m, n, ChMode::ClosedForm))?;
            check(theta_generators(m, n, ChMode::ClosedForm))?;
            images += 2;
            for k in &ks {
                check(beta_k_generators(m, n, k, ChMode::ClosedForm))?;
                images += 1;
            }
        }
    }
    Ok(format!("{images} images, every entry integral"))
}

/// `k = 0..=2D`, or 500 evenly spaced values of that range when it is larger.
fn k_samples(d: &BigInt) -> Vec<BigInt> {
    let span: BigInt = d * 2u32;
    if span < big(500) {
        let top: u64 = span.try_into().expect("small span");
        (0..=top).map(big).collect()
    } else {
        (0..500u32).map(|i| &span * i / 499u32).collect()
    }
}

fn paper_literal_consistency() -> Outcome {
    let mut samples = 0;
    let mut lagrange = 0;
    for n in 2..=12u32 {
        for m in 1..n {
            let d = gauge_modulus(m, n).map_err(|e| e.to_string())?;
            let total = order(q2_group_order(n, ChMode::PaperLiteral))?;
            for k in k_samples(&d) {
                let coker = order(gauge_coker_order(m, n, &k, ChMode::PaperLiteral))?;
                let inv = gauge_invariant(m, n, &k).map_err(|e| e.to_string())?;
                ensure(coker == inv, || {
                    format!("(m,n,k)=({m},{n},{k}): coker {coker}, (k,D) {inv}")
                })?;
                samples += 1;
                if let Ok(image) = order(im_alpha_k(m, n, &k, ChMode::PaperLiteral)) {
                    ensure(&image * &coker == total, || {
                        format!("(m,n,k)=({m},{n},{k}): |Im| {image} * |coker| {coker} != {total}")
                    })?;
                    lagrange += 1;
                }
            }
        }
    }
    let report = discrepancy_report(12).map_err(|e| e.to_string())?;
    let (pass, total) = report.tally(CheckClass::GaugeCoker);
    ensure(total > 0 && pass < total, || {
        "expected closed-vs-printed cokernel mismatches".into()
    })?;
    let listed = report
        .checks
        .iter()
        .filter(|c| c.class == CheckClass::GaugeCoker && !c.pass)
        .all(|c| {
            report
                .discrepancies
                .iter()
                .any(|d| d.params == c.params && d.recomputed_value == c.actual)
        });
    ensure(listed, || {
        "a failing cokernel check has no discrepancy entry".into()
    })?;
    Ok(format!(
        "{samples} samples, {lagrange} Lagrange identities; report lists {} closed-vs-printed mismatches",
        total - pass
    ))
}

fn class_counts() -> Outcome {
    const LIMIT: u64 = 1_000_000;
    let mut cells = 0;
    for n in 2u32.. {
        let mut any = false;
        for m in 1..n {
            let d = gauge_modulus(m, n).map_err(|e| e.to_string())?;
            if d > big(LIMIT) {
                continue;
            }
            any = true;
            let d: u64 = (&d).try_into().expect("bounded by LIMIT");
            let mut seen = vec![false; d as usize + 1];
            for k in 1..=d {
                seen[k.gcd(&d) as usize] = true;
            }
            let distinct = seen.iter().filter(|&&s| s).count() as u64;
            let divisors = (1..=d).filter(|v| d.is_multiple_of(*v)).count() as u64;
            let tau = count_invariant_classes(m, n).map_err(|e| e.to_string())?;
            ensure(big(distinct) == tau && distinct == divisors, || {
                format!("(m,n)=({m},{n}) D={d}: {distinct} values, {divisors} divisors, tau {tau}")
            })?;
            let all_divisors = (1..=d).all(|v| seen[v as usize] == d.is_multiple_of(v));
            ensure(all_divisors, || {
                format!("(m,n)=({m},{n}): value set is not the divisor set")
            })?;
            cells += 1;
        }
        // D(1,n) = 4n(2n+1) is the smallest modulus for each n and grows with n.
        if !any {
            break;
        }
    }
    Ok(format!("{cells} cells with D <= 10^6"))
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_spgauge");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| format!("spawn {bin}: {e}"))
    };
    let verify = run(&["verify", "--max-n", "10"])?;
    ensure(verify.status.code() == Some(0), || {
        format!("verify --max-n 10 exited {:?}", verify.status.code())
    })?;
    let summary = String::from_utf8_lossy(&verify.stdout);
    ensure(summary.starts_with("(a) 45/45 pass, (b) 9/9 pass"), || {
        format!(
            "unexpected summary: {}",
            summary.lines().next().unwrap_or("")
        )
    })?;

    let args = ["verify", "--max-n", "10", "--format", "json"];
    let first = run(&args)?;
    let second = run(&args)?;
    ensure(
        !first.stdout.is_empty() && first.stdout == second.stdout,
        || "JSON output differs between runs".into(),
    )?;

    let bad = run(&["order", "samelson", "--m", "2", "--n", "2"])?;
    ensure(bad.status.code() == Some(2), || {
        format!("m = n exited {:?}", bad.status.code())
    })?;
    Ok("verify exits 0, JSON byte-identical, m = n exits 2".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 literature anchors",
            Duration::from_secs(1),
            literature_anchors,
        ),
        (
            "2 Samelson order sweep (n <= 25)",
            Duration::from_secs(10),
            samelson_sweep,
        ),
        (
            "3 Q_2 mapping group sweep (n <= 25)",
            Duration::from_secs(5),
            q2_sweep,
        ),
        (
            "4 oracle equivalence (d, j <= 40)",
            Duration::from_secs(30),
            oracle_equivalence,
        ),
        (
            "5 integrality of generator images",
            Duration::from_secs(60),
            integrality,
        ),
        (
            "6 printed cokernel = (k, D), Lagrange",
            Duration::from_secs(60),
            paper_literal_consistency,
        ),
        (
            "7 invariant classes = tau(D)",
            Duration::from_secs(120),
            class_counts,
        ),
        ("8 CLI contract", Duration::from_secs(60), cli_contract),
    ];

    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] criterion {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 8 acceptance criteria passed");
}
