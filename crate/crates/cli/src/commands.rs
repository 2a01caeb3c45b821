use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use tournament_cycles::cyclic_index::{self, run_search, SearchConfig, SearchReport, SearchScope, SkewSignMatrix};
use tournament_cycles::spectral::{self, ComplementaryMatrix, Matrix};
use tournament_cycles::tournament::{self, Tournament};
use tournament_cycles::tournamenton::{self, StepTournamenton};
use tournament_cycles::{Error, Result};

use crate::output::{cell, num, Report, Table};
use crate::{Outcome, RunConfig, Source};

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn load_tournament(config: &RunConfig, source: &Source) -> Result<Tournament> {
    if let Some(path) = &source.input {
        read(path)?.parse()
    } else if let Some(n) = source.carousel {
        tournament::make_carousel(n)
    } else if let Some(n) = source.transitive {
        tournament::make_transitive(n)
    } else if let Some(n) = source.random {
        tournament::sample_random(n, config.seed)
    } else {
        Err(Error::InvalidArgument(
            "give a tournament with --input, --carousel, --transitive or --random".into(),
        ))
    }
}

pub fn count(config: &RunConfig, source: &Source, length: usize) -> Result<(Report, Outcome)> {
    let t = load_tournament(config, source)?;
    let n = t.order();
    if length > n {
        return Err(Error::InvalidArgument(format!("cycle length {length} exceeds the order {n}")));
    }
    let count = if config.workers > 1 {
        tournament::exact_cycle_count_parallel(&t, length, config.workers)?
    } else {
        tournament::exact_cycle_count(&t, length)?
    };
    let expected = tournament::expected_random_count(n, length);
    let density = count as f64 / expected;
    let trace_density = spectral::trace_density(&t, length as u32)?;
    let report = Report::json(json!({
        "order": n,
        "length": length,
        "count": count,
        "expected_random": num(expected),
        "normalized_density": num(density),
        "trace_density": num(trace_density),
        "gap": num((density - trace_density).abs()),
    }));
    Ok((report, Outcome::Ok))
}

pub fn spectrum(
    config: &RunConfig,
    source: &Source,
    matrix: Option<&Path>,
    tolerance: f64,
) -> Result<(Report, Outcome)> {
    let a = match matrix {
        Some(path) => ComplementaryMatrix::new(read(path)?.parse::<Matrix>()?)?,
        None => spectral::tournament_matrix(&load_tournament(config, source)?),
    };
    let report = spectral::eigenvalues(a.matrix())?;
    let violations = report.complementary_violations(tolerance);
    let values: Vec<Value> = report.eigenvalues.iter().map(|z| json!({"re": num(z.re), "im": num(z.im)})).collect();
    let table = Table {
        headers: vec!["re".into(), "im".into(), "modulus".into()],
        rows: report.eigenvalues.iter().map(|z| vec![cell(z.re), cell(z.im), cell(z.norm())]).collect(),
    };
    let json = json!({
        "order": a.order(),
        "eigenvalues": values,
        "rho": report.rho.map(num),
        "radius": num(report.radius),
        "eig_sum_re": num(report.eig_sum.re),
        "eig_sum_im": num(report.eig_sum.im),
        "violations": violations,
    });
    let outcome = if violations.is_empty() { Outcome::Ok } else { Outcome::Mismatch(violations) };
    Ok((Report::json(json).with_table(table), outcome))
}

pub fn profile4(config: &RunConfig, source: &Source) -> Result<(Report, Outcome)> {
    let t = load_tournament(config, source)?;
    let p = tournament::four_profile(&t)?;
    let report = Report::json(json!({
        "order": t.order(),
        "t4": p.t4,
        "c4": p.c4,
        "l4": p.l4,
        "w4": p.w4,
        "total": p.total(),
    }));
    Ok((report, Outcome::Ok))
}

/// Differences between a search report and the known extremal result.
pub fn claim_differences(report: &SearchReport) -> Result<Vec<String>> {
    let (max, expected): (i64, Vec<(&str, SkewSignMatrix)>) = match report.order {
        4 => (8, vec![("D_4", cyclic_index::d4())]),
        8 => (2176, vec![("D_8", cyclic_index::d8()), ("D'_8", cyclic_index::d8_prime())]),
        n => return Err(Error::InvalidArgument(format!("no known result at order {n}"))),
    };
    let mut diff = Vec::new();
    if report.max_cyclic_index != max {
        diff.push(format!("max cyclic index {} (expected {max})", report.max_cyclic_index));
    }
    if report.achiever_classes.len() != expected.len() {
        diff.push(format!(
            "{} achiever classes (expected {})",
            report.achiever_classes.len(),
            expected.len()
        ));
    }
    for (name, m) in &expected {
        let mut found = false;
        for class in &report.achiever_classes {
            if cyclic_index::sign_equivalent(class, m)? {
                found = true;
                break;
            }
        }
        if !found {
            diff.push(format!("no achiever class is sign-equivalent to {name}"));
        }
    }
    Ok(diff)
}

pub fn verify_lemma(
    config: &RunConfig,
    order: usize,
    scope: SearchScope,
    checkpoint: Option<PathBuf>,
) -> Result<(Report, Outcome)> {
    let search = SearchConfig {
        order,
        scope,
        workers: config.workers,
        checkpoint,
    };
    let report = run_search(&search)?;
    let diff = claim_differences(&report)?;
    let mut json = serde_json::to_value(&report)?;
    json["claims_confirmed"] = Value::Bool(diff.is_empty());
    let outcome = if diff.is_empty() { Outcome::Ok } else { Outcome::Mismatch(diff) };
    Ok((Report::json(json), outcome))
}

/// Known maxima of the cycle densities for lengths 3 to 8 and the
/// tournamenton attaining each.
const KNOWN: [(u32, f64, &str); 6] = [
    (3, 1.0, "carousel"),
    (4, 4.0 / 3.0, "carousel"),
    (5, 1.0, "carousel"),
    (6, 1.0, "quasirandom"),
    (7, 1.0, "carousel"),
    (8, 332.0 / 315.0, "carousel"),
];

pub fn reproduce(k: usize, tolerance: f64) -> Result<(Report, Outcome)> {
    let carousel = tournamenton::carousel_tournamenton(k)?;
    let half = StepTournamenton::constant_half(k);
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let mut diff = Vec::new();
    for (len, known, construction) in KNOWN {
        let w = if construction == "carousel" { &carousel } else { &half };
        let density = tournamenton::cycle_density_w(w, len)?;
        let gap = (density - known).abs();
        let ok = gap <= tolerance;
        if !ok {
            diff.push(format!("length {len}: density {density} is {gap} from {known}"));
        }
        rows.push(vec![
            len.to_string(),
            cell(known),
            construction.to_string(),
            cell(density),
            cell(gap),
            ok.to_string(),
        ]);
        json_rows.push(json!({
            "length": len,
            "known": num(known),
            "construction": construction,
            "density": num(density),
            "gap": num(gap),
            "within_tolerance": ok,
        }));
    }
    let table = Table {
        headers: ["length", "known", "construction", "density", "gap", "within_tolerance"]
            .map(String::from)
            .to_vec(),
        rows,
    };
    let json = json!({"k": k, "tolerance": num(tolerance), "rows": json_rows});
    let outcome = if diff.is_empty() { Outcome::Ok } else { Outcome::Mismatch(diff) };
    Ok((Report::json(json).with_table(table), outcome))
}

pub fn conjecture_table(max_length: u32) -> Result<(Report, Outcome)> {
    if max_length < 4 {
        return Err(Error::InvalidArgument("max length must be at least 4".into()));
    }
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for len in (4..=max_length).step_by(4) {
        let c = tournamenton::conjectured_c(len)?;
        let lower = tournamenton::lower_bound_excess(len);
        rows.push(vec![len.to_string(), cell(c.value), cell(1.0 + lower), cell(c.excess), cell(lower)]);
        json_rows.push(json!({
            "length": len,
            "value": num(c.value),
            "lower_bound": num(1.0 + lower),
            "excess": num(c.excess),
            "lower_bound_excess": num(lower),
            "terms_used": c.terms_used,
            "truncation_bound": num(c.truncation_bound),
        }));
    }
    let table = Table {
        headers: ["length", "value", "lower_bound", "excess", "lower_bound_excess"].map(String::from).to_vec(),
        rows,
    };
    Ok((Report::json(json!({ "rows": json_rows })).with_table(table), Outcome::Ok))
}

pub fn carousel(k: usize, max_length: u32, grid: bool) -> Result<(Report, Outcome)> {
    let w = tournamenton::carousel_tournamenton(k)?;
    if max_length < 3 {
        return Err(Error::InvalidArgument("max length must be at least 3".into()));
    }
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for len in 3..=max_length {
        let d = tournamenton::cycle_density_w(&w, len)?;
        rows.push(vec![len.to_string(), cell(d)]);
        json_rows.push(json!({"length": len, "density": num(d)}));
    }
    let table = Table { headers: vec!["length".into(), "density".into()], rows };
    let mut report = Report::json(json!({"k": k, "densities": json_rows})).with_table(table);
    if grid {
        report = report.with_text(w.to_text());
    }
    Ok((report, Outcome::Ok))
}

pub fn sample(config: &RunConfig, n: usize, w: Option<&Path>) -> Result<(Report, Outcome)> {
    let (t, coords) = match w {
        Some(path) => {
            let w: StepTournamenton = read(path)?.parse()?;
            let s = tournament::sample_w_random_with_coords(&w, n, config.seed)?;
            (s.tournament, Some(s.coords))
        }
        None => (tournament::sample_random(n, config.seed)?, None),
    };
    let text = t.to_text();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    let json = json!({
        "order": n,
        "seed": config.seed,
        "rows": rows,
        "coords": coords.map(|c| c.into_iter().map(num).collect::<Vec<_>>()),
    });
    Ok((Report::json(json).with_text(text), Outcome::Ok))
}
