use serde_json::{json, Value};

use crate::arith::{PrecisionContext, Real};
use crate::bounds::{
    cho_claimed_bounds, janowski_gamma_bounds, janowski_mu_nu, mobius_lemma_bounds, ps_classify, ps_region_bound,
    reference_gamma_bounds, robertson_gamma_bounds, robertson_gamma_bounds_printed, series_rhs, BoundReport,
    WeightSpec,
};
use crate::classes::{
    member_from_schwarz, named_extremal, psi_series_closed, psi_series_recurrence, sample_schwarz, ClassSpec,
    ExtremalName, SampleKind,
};
use crate::error::{Error, Result};
use crate::logcoef::{gamma123_mobius, gamma123_robertson, log_coeffs};
use crate::probe::{hyper_ratio_identity_check, scan_theta, sugawa_predicate, table1};
use crate::series::decimal;
use crate::verify::{monte_carlo_class, sharpness_search_gamma, verify_tolerance, McConfig};

use super::config::RunConfig;
use super::report::{Report, Table};
use super::Command;

pub(super) fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Report> {
    let ctx = PrecisionContext::new(cfg.bits)?;
    match cmd {
        Command::Psi { class, closed } => psi(class, *closed, cfg, ctx),
        Command::Gamma {
            class,
            extremal,
            sample,
            count,
        } => gamma(class, *extremal, *sample, *count, ctx),
        Command::Bounds { class, printed, weight } => bounds(class, *printed, weight.as_ref(), cfg, ctx),
        Command::Region { mu, nu, class } => region(mu.as_deref(), nu.as_deref(), class.as_ref(), ctx),
        Command::Table1 { compare } => table1_cmd(*compare, ctx),
        Command::Scan { c, eps_list } => scan(c, eps_list, ctx),
        Command::Verify {
            class,
            weights,
            samples,
        } => verify(class, weights, *samples, cfg, ctx),
        Command::Sharpness { class, gamma, budget } => sharpness(class, *gamma, *budget, ctx),
        Command::HyperCheck { cs, n } => hyper_check(cs, *n, ctx),
        Command::RefuteCho { b } => refute_cho(*b, ctx),
    }
}

fn psi(class: &ClassSpec, closed: bool, cfg: &RunConfig, ctx: PrecisionContext) -> Result<Report> {
    let series = if closed {
        psi_series_closed(class, cfg.order, ctx)?
    } else {
        psi_series_recurrence(class, cfg.order, ctx)
    };
    let mut table = Table::new(&["n", "re", "im"]);
    let mut coeffs = Vec::new();
    for (n, c) in series.coeffs().iter().enumerate() {
        table.push(vec![n.to_string(), decimal(c.re()), decimal(c.im())]);
        coeffs.push(json!({ "n": n, "re": decimal(c.re()), "im": decimal(c.im()) }));
    }
    let results = json!({
        "method": if closed { "closed" } else { "recurrence" },
        "coefficients": coeffs,
    });
    Ok(Report::new("psi", results).class(class).table(table))
}

fn gamma(
    class: &ClassSpec,
    extremal: ExtremalName,
    sample: Option<u64>,
    count: usize,
    ctx: PrecisionContext,
) -> Result<Report> {
    if count == 0 {
        return Err(Error::InvalidParameter("--count must be at least 1".into()));
    }
    let order = count.max(3) + 1;
    let (member, source) = match sample {
        Some(seed) => {
            let w = sample_schwarz(seed, SampleKind::Mixed, order - 1, ctx)?;
            (member_from_schwarz(class, &w, order)?, format!("sample:{seed}"))
        }
        None => (named_extremal(class, extremal, order, ctx)?, extremal.to_string()),
    };
    let gammas = log_coeffs(member.series(), count.max(3))?;
    let w = member.omega();
    let (c1, c2, c3) = (w.coeff(1), w.coeff(2), w.coeff(3));
    let closed = match *class {
        ClassSpec::Robertson { alpha } => gamma123_robertson(c1, c2, c3, alpha)?,
        _ => {
            let (p, q) = class.phi_params(ctx);
            gamma123_mobius([c1, c2, c3], &p, &q)
        }
    };
    let deviation = (0..3)
        .map(|k| (gammas.get(k + 1) - &closed[k]).abs())
        .fold(ctx.real(0), |a, b| a.max(&b));

    let mut table = Table::new(&["n", "re", "im", "abs"]);
    let listed: Vec<_> = gammas.as_slice()[..count].to_vec();
    for (i, g) in listed.iter().enumerate() {
        table.push(vec![
            (i + 1).to_string(),
            decimal(g.re()),
            decimal(g.im()),
            decimal(&g.abs()),
        ]);
    }
    let results = json!({
        "member": source,
        "omega": w.describe(),
        "gamma": gammas.to_json().as_array().map(|a| a[..count].to_vec()),
        "closed_form_gamma_1_3": closed.iter().map(|g| json!([decimal(g.re()), decimal(g.im())])).collect::<Vec<_>>(),
        "closed_form_deviation": decimal(&deviation),
    });
    Ok(Report::new("gamma", results).class(class).table(table))
}

fn bound_table(bounds: &[BoundReport]) -> Table {
    let mut t = Table::new(&["gamma_index", "value", "branch", "region", "extremal"]);
    for b in bounds {
        t.push(vec![
            b.gamma_index.to_string(),
            decimal(&b.value),
            b.branch.clone(),
            b.region.map(|r| r.to_string()).unwrap_or_default(),
            b.extremal.clone(),
        ]);
    }
    t
}

fn bounds(
    class: &ClassSpec,
    printed: bool,
    weight: Option<&WeightSpec>,
    cfg: &RunConfig,
    ctx: PrecisionContext,
) -> Result<Report> {
    let mut findings = Vec::new();
    let mut warnings = Vec::new();
    let mut extra = serde_json::Map::new();
    let list: Vec<BoundReport> = match *class {
        ClassSpec::Robertson { alpha } => {
            let corrected = robertson_gamma_bounds(alpha, ctx)?;
            if printed {
                let shown = robertson_gamma_bounds_printed(alpha, ctx)?;
                let h2 = named_extremal(class, ExtremalName::H2, 4, ctx)?;
                let g = log_coeffs(h2.series(), 3)?;
                let mut rows = Vec::new();
                for k in 0..3 {
                    let measured = g.get(k + 1).abs();
                    let gap = ctx.real(&shown[k].value - &measured);
                    let attained = gap.clone().abs() < ctx.tolerance(32);
                    rows.push(json!({
                        "gamma_index": k + 1,
                        "h2_value": decimal(&measured),
                        "corrected": decimal(&corrected[k].value),
                        "printed": decimal(&shown[k].value),
                        "printed_attained": attained,
                    }));
                    if !attained {
                        findings.push(json!({
                            "kind": "printed_bound_not_attained",
                            "class": class.to_string(),
                            "statement": format!("|gamma_{}| <= printed value, attained by h2", k + 1),
                            "observed": decimal(&measured),
                            "bound": decimal(&shown[k].value),
                            "corrected_bound": decimal(&corrected[k].value),
                        }));
                    }
                }
                extra.insert("printed_comparison".into(), Value::Array(rows));
            }
            corrected.to_vec()
        }
        _ => match class.as_janowski() {
            Some((a, b)) => match janowski_gamma_bounds(a, b, ctx) {
                Ok(list) => list.to_vec(),
                Err(Error::UncoveredRegion(u)) => {
                    let lemma = mobius_lemma_bounds(a, b, ctx)?;
                    findings.push(json!({
                        "kind": "uncovered_region",
                        "class": class.to_string(),
                        "statement": "(mu, nu) lies in D1, D2, D6, D8 or D9",
                        "mu": u.mu,
                        "nu": u.nu,
                        "region": u.region.to_string(),
                        "lemma_bound_gamma_3": u.lemma_bound,
                    }));
                    warnings
                        .push("gamma_3 is reported from the Prokhorov-Szynal bound of the actual region".to_string());
                    lemma.to_vec()
                }
                Err(e) => return Err(e),
            },
            None => {
                warnings.push(format!("{class} is outside the proven range; lemma bounds only"));
                reference_gamma_bounds(class, ctx)?.to_vec()
            }
        },
    };
    if let Some(w) = weight {
        let rhs = series_rhs(class, w, cfg.order, ctx)?;
        extra.insert("weight".into(), json!(w.to_string()));
        extra.insert("series_rhs".into(), json!(decimal(&rhs)));
        warnings.extend(w.warnings());
    }
    let mut results = json!({
        "bounds": list.iter().map(BoundReport::to_json).collect::<Vec<_>>(),
        "warnings": warnings,
    });
    if let Value::Object(m) = &mut results {
        m.extend(extra);
    }
    Ok(Report::new("bounds", results)
        .class(class)
        .table(bound_table(&list))
        .findings(findings))
}

fn region(mu: Option<&str>, nu: Option<&str>, class: Option<&ClassSpec>, ctx: PrecisionContext) -> Result<Report> {
    let (mu, nu) = match (mu, nu, class) {
        (Some(m), Some(n), None) => (ctx.parse_real(m)?, ctx.parse_real(n)?),
        (None, None, Some(spec)) => {
            let (a, b) = spec
                .as_janowski()
                .ok_or_else(|| Error::InvalidSpec(format!("{spec} has no real (mu, nu); use a Janowski class")))?;
            janowski_mu_nu(a, b, ctx)
        }
        _ => return Err(Error::Parse("give either --mu and --nu or --class".into())),
    };
    let r = ps_classify(&mu, &nu)?;
    let bound = ps_region_bound(r, &mu, &nu);
    let results = json!({
        "mu": decimal(&mu),
        "nu": decimal(&nu),
        "region": r.to_string(),
        "bound": decimal(&bound),
    });
    let mut rep = Report::new("region", results);
    if let Some(c) = class {
        rep = rep.class(c);
    }
    Ok(rep)
}

fn table1_cmd(compare: bool, ctx: PrecisionContext) -> Result<Report> {
    let rows = table1(ctx)?;
    let mut head = vec!["c", "eps", "theta_description", "re_psi", "bits"];
    if compare {
        head.extend([
            "printed_re_psi",
            "sign_agrees",
            "magnitude_ratio",
            "radial_re_psi",
            "radial_sign_agrees",
        ]);
    }
    let mut table = Table::new(&head);
    let mut out = Vec::new();
    let mut findings = Vec::new();
    for r in &rows {
        let mut row = vec![
            r.c.clone(),
            r.eps.clone(),
            r.theta_description(),
            decimal(&r.boundary.re_psi_cap),
            r.boundary.bits_used.to_string(),
        ];
        let mut obj = json!({
            "c": r.c,
            "eps": r.eps,
            "theta_description": r.theta_description(),
            "re_psi": decimal(&r.boundary.re_psi_cap),
            "bits": r.boundary.bits_used,
        });
        if compare {
            row.extend([
                format!("{:e}", r.printed_re_psi),
                r.sign_agrees().to_string(),
                format!("{:e}", r.magnitude_ratio()),
                decimal(&r.radial.re_psi_cap),
                r.radial_sign_agrees().to_string(),
            ]);
            if let Value::Object(m) = &mut obj {
                m.insert("printed_re_psi".into(), json!(r.printed_re_psi));
                m.insert("sign_agrees".into(), json!(r.sign_agrees()));
                m.insert("radial_re_psi".into(), json!(decimal(&r.radial.re_psi_cap)));
                m.insert("radial_sign_agrees".into(), json!(r.radial_sign_agrees()));
            }
            if !r.sign_agrees() {
                findings.push(json!({
                    "kind": "boundary_sign",
                    "class": format!("fc={}", r.c),
                    "statement": format!("Re Psi < 0 at theta = {}", r.theta_description()),
                    "observed": decimal(&r.boundary.re_psi_cap),
                    "printed": r.printed_re_psi,
                    "radial_observed": decimal(&r.radial.re_psi_cap),
                }));
            }
        }
        table.push(row);
        out.push(obj);
    }
    Ok(Report::new("table1", json!({ "rows": out }))
        .table(table)
        .csv_by_default()
        .findings(findings))
}

fn scan(c: &str, eps_list: &[String], ctx: PrecisionContext) -> Result<Report> {
    let cr = ctx.parse_real(c)?;
    let grid = eps_list
        .iter()
        .map(|e| ctx.parse_real(e))
        .collect::<Result<Vec<Real>>>()?;
    let s = scan_theta(&cr, &grid, ctx);
    let mut table = Table::new(&["c", "eps", "re_psi", "bits", "error"]);
    let mut points = Vec::new();
    for ((eps, p), text) in s.points.iter().zip(eps_list) {
        let _ = eps;
        match p {
            Ok(p) => {
                table.push(vec![
                    c.to_string(),
                    text.clone(),
                    decimal(&p.re_psi_cap),
                    p.bits_used.to_string(),
                    String::new(),
                ]);
                points.push(json!({ "eps": text, "re_psi": decimal(&p.re_psi_cap), "bits": p.bits_used }));
            }
            Err(e) => {
                table.push(vec![
                    c.to_string(),
                    text.clone(),
                    String::new(),
                    String::new(),
                    e.to_string(),
                ]);
                points.push(json!({ "eps": text, "error": e.to_string() }));
            }
        }
    }
    let min = s
        .min()
        .map(|(i, v)| json!({ "index": i, "eps": eps_list[i], "re_psi": decimal(v) }));
    let results = json!({ "c": c, "points": points, "min": min });
    Ok(Report::new("scan", results).table(table).csv_by_default())
}

fn verify(
    class: &ClassSpec,
    weights: &[WeightSpec],
    samples: usize,
    cfg: &RunConfig,
    ctx: PrecisionContext,
) -> Result<Report> {
    let mc = McConfig {
        samples,
        seed: cfg.seed,
        order: cfg.order,
        kind: SampleKind::Mixed,
        weights: weights.to_vec(),
    };
    let r = monte_carlo_class(class, &mc, ctx)?;
    let findings = r.findings.iter().map(|f| f.to_json()).collect();
    Ok(Report::new("verify", r.to_json()).class(class).findings(findings))
}

fn sharpness(class: &ClassSpec, k: u8, budget: usize, ctx: PrecisionContext) -> Result<Report> {
    let r = sharpness_search_gamma(class, k, budget, ctx)?;
    let mut findings = Vec::new();
    if r.excess() > verify_tolerance(ctx) {
        findings.push(json!({
            "kind": "gamma_bound",
            "class": class.to_string(),
            "statement": format!("|gamma_{k}| <= bound ({})", r.bound.branch),
            "observed": decimal(&r.best),
            "bound": decimal(&r.bound.value),
            "witness": r.witness.to_json(),
        }));
    }
    Ok(Report::new("sharpness", r.to_json()).class(class).findings(findings))
}

fn hyper_check(cs: &[f64], n: usize, ctx: PrecisionContext) -> Result<Report> {
    let tol = ctx.tolerance(24);
    let mut failed = false;
    let mut table = Table::new(&["c", "deviation", "pass"]);
    let mut rows = Vec::new();
    for &c in cs {
        let d = hyper_ratio_identity_check(c, n, ctx)?;
        let pass = d < tol;
        failed |= !pass;
        table.push(vec![c.to_string(), decimal(&d), pass.to_string()]);
        rows.push(json!({ "c": c, "deviation": decimal(&d), "pass": pass }));
    }
    // the predicate on (c, 1, 2): true on an interior grid of (1/2, 2), false at the ends and beyond
    let interior = (1..=100).map(|i| 0.5 + 1.5 * i as f64 / 101.0);
    let interior_true = interior.clone().filter(|&c| sugawa_predicate(c, 1.0, 2.0)).count();
    let outside: Vec<Value> = [0.5, 2.0, 2.5]
        .iter()
        .map(|&c| json!({ "c": c, "predicate": sugawa_predicate(c, 1.0, 2.0) }))
        .collect();
    let outside_false = outside.iter().all(|v| v["predicate"] == false);
    failed |= interior_true != 100 || !outside_false;
    let results = json!({
        "n": n,
        "tolerance": decimal(&tol),
        "identity": rows,
        "predicate": {
            "interior_points": 100,
            "interior_true": interior_true,
            "outside": outside,
        },
    });
    let mut rep = Report::new("hyper-check", results).table(table);
    rep.failed = failed;
    Ok(rep)
}

fn refute_cho(b: f64, ctx: PrecisionContext) -> Result<Report> {
    let claimed = cho_claimed_bounds(b, ctx)?;
    let spec = ClassSpec::janowski(0.0, b)?;
    let mut table = Table::new(&["member", "k", "abs_gamma", "claimed_bound", "exceeds"]);
    let mut rows = Vec::new();
    let mut findings = Vec::new();
    let tol = verify_tolerance(ctx);
    for name in [ExtremalName::G1, ExtremalName::G2, ExtremalName::G3] {
        let f = named_extremal(&spec, name, 4, ctx)?;
        let g = log_coeffs(f.series(), 3)?;
        for (k, claim) in claimed.iter().enumerate() {
            let v = g.get(k + 1).abs();
            let exceeds = v > ctx.real(claim + &tol);
            table.push(vec![
                name.to_string(),
                (k + 1).to_string(),
                decimal(&v),
                decimal(claim),
                exceeds.to_string(),
            ]);
            rows.push(json!({
                "member": name.to_string(),
                "k": k + 1,
                "abs_gamma": decimal(&v),
                "claimed_bound": decimal(claim),
                "exceeds": exceeds,
            }));
            if exceeds {
                findings.push(json!({
                    "kind": "claimed_bound_violated",
                    "class": spec.to_string(),
                    "statement": format!("|gamma_{}| <= claimed bound for C(0, B)", k + 1),
                    "member": name.to_string(),
                    "observed": decimal(&v),
                    "bound": decimal(claim),
                }));
            }
        }
    }
    Ok(Report::new("refute-cho", json!({ "b": b, "rows": rows }))
        .class(spec)
        .table(table)
        .findings(findings))
}
