use std::process::ExitCode;
use std::time::Instant;

use llt_core::cli;
use llt_core::partition::Partition;
use llt_core::theorems::{
    conjugate_symmetry, hall_littlewood_column, max_closed_form_exponent, q_one_product, random_skew_tuple,
    reference_expansions, run_sweep, Sweep, SweepConfig,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<Vec<String>, String>;

fn sweep(which: Sweep, max_n: usize) -> Result<String, String> {
    let config = SweepConfig { max_n: Some(max_n), ..SweepConfig::default() };
    let r = run_sweep(which, &config).map_err(|e| format!("{which}: {e}"))?;
    let summary = format!("{} n<={max_n}: {} cases, {} ms", r.name, r.cases, r.elapsed_ms);
    if r.passed() {
        Ok(r.notes.iter().fold(summary, |acc, n| format!("{acc}; {n}")))
    } else {
        Err(format!("{summary}\n{r}"))
    }
}

fn reference_output() -> Result<Vec<String>, String> {
    let expected = [
        "L(6,(1,1)) = q^7 k[2,2,2] + (2q^6 + q^5) k[2,2,1,1] + (q^4 + 2q^3) k[2,1,1,1,1] + k[1,1,1,1,1,1]",
        "L(6,(2,1)) = q^6 k[2,2,2] + 3q^5 k[2,2,1,1] + 3q^3 k[2,1,1,1,1] + k[1,1,1,1,1,1]",
        "L(6,(3,1)) = q^5 k[2,2,2] + (q^5 + 2q^4) k[2,2,1,1] + (2q^3 + q^2) k[2,1,1,1,1] + k[1,1,1,1,1,1]",
    ];
    let mut lines = Vec::new();
    for ((lam, want), text) in reference_expansions().into_iter().zip(expected) {
        let arg = lam.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        let start = Instant::now();
        let (code, out, err) =
            cli::run(["llt", "--format", "json", "unicellular", "--n", "6", "--lambda", &arg, "--basis", "two-schur"]);
        if code != 0 {
            return Err(format!("lambda={lam}: exit {code}: {err}"));
        }
        let json: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        let got: llt_core::symfunc::TwoSchurVector =
            serde_json::from_value(json["expansion"].clone()).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("lambda={lam}: got {got}, want {want}"));
        }
        let (_, out, _) = cli::run(["llt", "unicellular", "--n", "6", "--lambda", &arg, "--basis", "two-schur"]);
        if out.trim_end() != text {
            return Err(format!("lambda={lam}: printed {out:?}"));
        }
        let ms = start.elapsed().as_millis();
        if ms >= 5000 {
            return Err(format!("lambda={lam}: {ms} ms"));
        }
        lines.push(format!("lambda={lam}: exact, {ms} ms"));
    }
    Ok(lines)
}

fn linear_relation() -> Result<Vec<String>, String> {
    let start = Instant::now();
    let line = sweep(Sweep::LinearRelation, 7)?;
    let secs = start.elapsed().as_secs();
    if secs >= 60 {
        return Err(format!("{line}; took {secs} s"));
    }
    Ok(vec![line])
}

fn domino() -> Result<Vec<String>, String> {
    Ok(vec![sweep(Sweep::Domino, 8)?])
}

fn g2schur() -> Result<Vec<String>, String> {
    Ok(vec![sweep(Sweep::G2schur, 8)?])
}

fn swap() -> Result<Vec<String>, String> {
    Ok(vec![sweep(Sweep::Swap, 8)?])
}

fn decomposition() -> Result<Vec<String>, String> {
    Ok(vec![sweep(Sweep::Linearity, 8)?, sweep(Sweep::Half, 8)?, sweep(Sweep::Less, 8)?])
}

fn two_diagonal() -> Result<Vec<String>, String> {
    Ok(vec![sweep(Sweep::Haiman2, 8)?])
}

fn product() -> Result<Vec<String>, String> {
    Ok(vec![sweep(Sweep::ProductFormula, 8)?])
}

fn properties() -> Result<Vec<String>, String> {
    let mut lines = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let samples = 300;
    for _ in 0..samples {
        let pieces = random_skew_tuple(&mut rng, 8);
        let (lhs, rhs) = q_one_product(&pieces).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("q=1 product {pieces:?}: {lhs} vs {rhs}"));
        }
    }
    lines.push(format!("q=1 product of skew Schur functions: {samples} seeded skew tuples, n<=8"));
    lines.push(sweep(Sweep::Positivity, 8)?);
    let mut count = 0;
    for n in 1..=7 {
        for lam in Partition::in_staircase_all(n) {
            let (a, b) = conjugate_symmetry(n, &lam).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("L({n},{lam}) != L({n},{})", lam.conjugate()));
            }
            count += 1;
        }
        let (a, b) = hall_littlewood_column(n).map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("Hall-Littlewood column n={n}: {a} vs {b}"));
        }
    }
    lines.push(format!("L(n,lambda) = L(n,lambda'): {count} partitions, n<=7"));
    lines.push("omega(llt) of n content-0 cells = H_(1^n), n<=7".to_string());
    for n in 1..=10 {
        for l in 0..=n / 2 {
            if max_closed_form_exponent(n, l) != Some((l * (n - l)) as i32) {
                return Err(format!("max exponent n={n} l={l}"));
            }
        }
    }
    lines.push("maximum exponent l(n-l), n<=10".to_string());
    lines.push(sweep(Sweep::Conventions, 6)?);
    Ok(lines)
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 9] = [
        ("reference two-Schur expansions at n=6", reference_output),
        ("linear relation G0 - G1 = q(G1 - G2), n<=7", linear_relation),
        ("domino tuples are single 2-Schur functions, n<=8", domino),
        ("two constructions of 2-Schur functions agree, |lambda|<=8", g2schur),
        ("adjacent H/V swap invariance and psi bijection", swap),
        ("decomposition of L(n,lambda) and closed forms, n<=8", decomposition),
        ("two-diagonal 2-Schur expansion, n<=8", two_diagonal),
        ("product of two column Hall-Littlewood functions, n<=8", product),
        ("property suite", properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(lines) => {
                println!("criterion {}: pass ({secs:.1} s) {name}", i + 1);
                for line in lines {
                    println!("    {line}");
                }
            }
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL ({secs:.1} s) {name}", i + 1);
                println!("    {msg}");
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
