//! One function per subcommand. Each returns the structured envelope, its
//! text rendering and the exit status.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use tcalg_core::bounds::expected_bracket;
use tcalg_core::expr::evaluate_str;
use tcalg_core::genfun::describe;
use tcalg_core::{
    expand_series, fn_tc_bounds, for_each_basis_monomial, genfun_of, oracle_cup_length,
    poincare_polynomial, principal_residues, recurrence_check, DifferencePool, Params, Regime,
    TcSequence,
};

use crate::report::{int, to_value, BoundsDoc, Envelope, ParamsDoc, PolynomialDoc, TPolyDoc};
use crate::{CliError, Exit};

#[derive(Debug)]
pub struct Outcome {
    pub envelope: Envelope,
    pub text: String,
    pub exit: Exit,
}

fn params_args(p: &Params) -> Value {
    json!({ "d": p.d(), "m": p.m(), "n": p.n(), "r": p.r(), "max_word_len": p.max_word_len() })
}

pub fn cmd_bounds(params: &Params) -> Result<Outcome, CliError> {
    let report = fn_tc_bounds(params)?;
    let verified = report.certificate.verify().is_ok();
    let doc = BoundsDoc::new(&report, verified);

    let mut text = String::new();
    let _ = writeln!(text, "bounds {params} regime={}", doc.regime);
    let _ = writeln!(text, "lower={} upper={} exact={}", doc.lower, doc.upper, doc.exact);
    let _ = writeln!(text, "certificate: k={} verified={}", doc.certificate.k, verified);
    for (idx, f) in doc.certificate.factors.iter().enumerate() {
        let _ = writeln!(text, "  factor {:>2}: {f}", idx + 1);
    }
    let _ = writeln!(text, "  witness: {}", doc.certificate.witness);
    let _ = writeln!(text, "  coefficient: {}", doc.certificate.coefficient);
    let _ = writeln!(text, "  product terms: {}", doc.certificate.product_terms);

    let exit = if verified { Exit::Ok } else { Exit::VerificationFailed };
    let envelope = Envelope::new("bounds", params_args(params), Some(params), to_value(&doc));
    Ok(Outcome { envelope, text, exit })
}

#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub d_set: Vec<u32>,
    pub m_max: u32,
    pub n_max: u32,
    pub r_max: u32,
    pub max_word_len: usize,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            d_set: vec![2, 3, 4, 5],
            m_max: 4,
            n_max: 3,
            r_max: 4,
            max_word_len: tcalg_core::params::DEFAULT_MAX_WORD_LEN,
        }
    }
}

#[derive(Debug, Serialize)]
struct CellDoc {
    params: ParamsDoc,
    regime: &'static str,
    lower: Option<u64>,
    upper: Option<u64>,
    exact: Option<bool>,
    expected_lower: u64,
    expected_upper: u64,
    witness: Option<String>,
    coefficient: Option<String>,
    ok: bool,
    error: Option<String>,
}

/// Sweeps `d in d_set`, `2 <= m <= m_max`, `1 <= n <= n_max`,
/// `2 <= r <= r_max`, in lexicographic order of `(d, m, n, r)`.
pub fn cmd_verify(sweep: &SweepSpec, max_cells: usize) -> Result<Outcome, CliError> {
    let mut ds = sweep.d_set.clone();
    ds.sort_unstable();
    ds.dedup();
    if ds.is_empty() || sweep.m_max < 2 || sweep.n_max < 1 || sweep.r_max < 2 {
        return Err(CliError::usage("empty sweep: need a nonempty d set, m_max >= 2, n_max >= 1, r_max >= 2"));
    }
    let cells = ds.len() * (sweep.m_max as usize - 1) * sweep.n_max as usize * (sweep.r_max as usize - 1);
    if cells > max_cells {
        return Err(CliError {
            exit: Exit::ResourceLimit,
            message: format!("sweep has {cells} cells, cap is {max_cells} (set TCALG_MAX_CELLS to raise it)"),
        });
    }

    let mut docs = Vec::with_capacity(cells);
    let mut resource_hit = false;
    // (d, m, n) -> bounds in increasing r
    let mut columns: BTreeMap<(u32, u32, u32), Vec<(u64, u64)>> = BTreeMap::new();
    for &d in &ds {
        for m in 2..=sweep.m_max {
            for n in 1..=sweep.n_max {
                for r in 2..=sweep.r_max {
                    let params = Params::new(d, m, n, r)?.with_max_word_len(sweep.max_word_len);
                    let (expected_lower, expected_upper) = expected_bracket(&params);
                    let regime = Regime::of(&params);
                    let mut doc = CellDoc {
                        params: ParamsDoc::from(&params),
                        regime: regime.name(),
                        lower: None,
                        upper: None,
                        exact: None,
                        expected_lower,
                        expected_upper,
                        witness: None,
                        coefficient: None,
                        ok: false,
                        error: None,
                    };
                    match fn_tc_bounds(&params) {
                        Ok(rep) => {
                            let verified = rep.certificate.verify().is_ok();
                            let exact_ok = match regime {
                                Regime::EvenDGe4 => !rep.exact,
                                _ => rep.exact,
                            };
                            doc.ok = verified
                                && exact_ok
                                && rep.lower == expected_lower
                                && rep.upper == expected_upper;
                            doc.lower = Some(rep.lower);
                            doc.upper = Some(rep.upper);
                            doc.exact = Some(rep.exact);
                            doc.witness = Some(rep.certificate.witness().to_string());
                            doc.coefficient = Some(int(rep.certificate.coefficient()));
                            columns.entry((d, m, n)).or_default().push((rep.lower, rep.upper));
                        }
                        Err(e) => {
                            resource_hit |= matches!(e, tcalg_core::Error::ResourceLimit { .. });
                            doc.error = Some(e.to_string());
                        }
                    }
                    docs.push(doc);
                }
            }
        }
    }

    let monotone = columns.values().all(|col| {
        col.windows(2).all(|w| w[1].0 >= w[0].0 && w[1].1 >= w[0].1)
    });
    let failures = docs.iter().filter(|c| !c.ok).count();
    let passed = failures == 0 && monotone;

    let mut text = String::new();
    let _ = writeln!(text, "{:>3} {:>3} {:>3} {:>3}  {:<11} {:>5} {:>5}  {:<5}  status", "d", "m", "n", "r", "regime", "lower", "upper", "exact");
    for c in &docs {
        let show = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            text,
            "{:>3} {:>3} {:>3} {:>3}  {:<11} {:>5} {:>5}  {:<5}  {}",
            c.params.d,
            c.params.m,
            c.params.n,
            c.params.r,
            c.regime,
            show(c.lower),
            show(c.upper),
            c.exact.map_or("-".to_string(), |e| e.to_string()),
            if c.ok { "ok".to_string() } else { format!("FAIL {}", c.error.as_deref().unwrap_or("")) }
        );
    }
    let _ = writeln!(text, "r-monotonicity: {}", if monotone { "ok" } else { "FAIL" });
    let _ = writeln!(text, "cells: {} failures: {} passed: {}", docs.len(), failures, passed);

    let arguments = json!({
        "d_set": ds,
        "m_max": sweep.m_max,
        "n_max": sweep.n_max,
        "r_max": sweep.r_max,
        "max_word_len": sweep.max_word_len,
    });
    let result = json!({
        "cells": to_value(&docs),
        "monotone_in_r": monotone,
        "failures": failures,
        "passed": passed,
    });
    let exit = if passed {
        Exit::Ok
    } else if resource_hit {
        Exit::ResourceLimit
    } else {
        Exit::VerificationFailed
    };
    Ok(Outcome { envelope: Envelope::new("verify", arguments, None, result), text, exit })
}

pub fn cmd_normal_form(expr: &str, params: &Params) -> Result<Outcome, CliError> {
    let p = evaluate_str(expr, params)?;
    let doc = PolynomialDoc::new(&p);
    let text = format!("{}\n", doc.text);
    let mut arguments = params_args(params);
    arguments["expr"] = json!(expr);
    let envelope = Envelope::new("normal-form", arguments, Some(params), json!({ "polynomial": to_value(&doc) }));
    Ok(Outcome { envelope, text, exit: Exit::Ok })
}

pub fn cmd_poincare(params: &Params, check: bool) -> Result<Outcome, CliError> {
    let poly = poincare_polynomial(params);
    let mut text = format!("{poly}\n");
    let mut result = json!({
        "poincare": to_value(&TPolyDoc::new(&poly)),
        "top_degree": params.top_degree(),
    });
    let mut exit = Exit::Ok;
    if check {
        let mut counts = vec![0u64; params.max_basis_len() + 1];
        for_each_basis_monomial(params, None, |w| counts[w.len()] += 1);
        let g = params.generator_degree() as usize;
        let passed = poly.degree().is_some_and(|top| top as u64 == params.top_degree())
            && (0..=poly.degree().unwrap_or(0)).all(|deg| {
                let expected = if deg % g == 0 { counts.get(deg / g).copied().unwrap_or(0) } else { 0 };
                poly.coeff(deg) == BigInt::from(expected)
            });
        let _ = writeln!(text, "enumeration check: {}", if passed { "pass" } else { "FAIL" });
        result["check"] = json!({
            "passed": passed,
            "basis_counts_by_length": counts,
        });
        if !passed {
            exit = Exit::VerificationFailed;
        }
    }
    let mut arguments = params_args(params);
    arguments["check"] = json!(check);
    Ok(Outcome { envelope: Envelope::new("poincare", arguments, Some(params), result), text, exit })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Bundle {
    FnOdd,
    FnPlanar,
    Hopf,
    FnFiber,
}

impl Bundle {
    pub fn sequence(self, m: u32, n: u32) -> TcSequence {
        match self {
            Bundle::FnOdd => TcSequence::FadellNeuwirthOdd { m, n },
            Bundle::FnPlanar => TcSequence::FadellNeuwirthPlanar { m, n },
            Bundle::Hopf => TcSequence::Hopf,
            Bundle::FnFiber => TcSequence::FnFiber { n },
        }
    }
}

pub fn cmd_genfun(bundle: Bundle, m: u32, n: u32, terms: usize) -> Result<Outcome, CliError> {
    let seq = bundle.sequence(m, n);
    let f = genfun_of(&seq)?;
    let (fraction, pole) = describe(&f);
    let (a, b) = principal_residues(&f)?;
    let series = expand_series(&f, terms)?;
    let recurrence = recurrence_check(&seq, 10)?;
    let pole = pole.unwrap_or_default();

    let series_text: Vec<String> = series.iter().map(ToString::to_string).collect();
    let mut text = String::new();
    let _ = writeln!(text, "{} generating function", seq.name());
    let _ = writeln!(text, "F(t) = {fraction}");
    let _ = writeln!(text, "pole form: {pole}");
    let _ = writeln!(text, "residues: A = {a}, B = {b}");
    let _ = writeln!(text, "terms: [{}]", series_text.join(", "));
    let _ = writeln!(text, "recurrence: TC_(r+1) = TC_r + {recurrence}");

    let pf = f.pole_form().expect("residues exist");
    let result = json!({
        "bundle": seq.name(),
        "rational_function": {
            "text": fraction,
            "numerator": f.numerator().coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "denominator": f.denominator().coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        },
        "pole_form": {
            "text": pole,
            "a": a.to_string(),
            "b": b.to_string(),
            "p": pf.p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        },
        "terms": series_text,
        "recurrence_a": int(&recurrence),
    });
    let arguments = json!({ "bundle": seq.name(), "m": m, "n": n, "terms": terms });
    Ok(Outcome { envelope: Envelope::new("genfun", arguments, None, result), text, exit: Exit::Ok })
}

pub fn cmd_oracle(params: &Params, budget: usize, extended_pool: bool) -> Result<Outcome, CliError> {
    let mut pool = DifferencePool::lemma_differences(params)?;
    if extended_pool {
        pool = pool.with_base_multiples()?;
    }
    let out = oracle_cup_length(params, &pool, budget)?;
    let factors = pool.describe(&out.choice);
    let mut text = String::new();
    let _ = writeln!(text, "oracle {params} pool={} budget={budget}", pool.len());
    let _ = writeln!(text, "cup length >= {}{}", out.k, if out.truncated { " (truncated by budget)" } else { "" });
    for (idx, f) in factors.iter().enumerate() {
        let _ = writeln!(text, "  factor {:>2}: {f}", idx + 1);
    }
    let mut arguments = params_args(params);
    arguments["budget"] = json!(budget);
    arguments["extended_pool"] = json!(extended_pool);
    let result = json!({
        "k": out.k,
        "truncated": out.truncated,
        "pool_size": pool.len(),
        "factors": factors,
    });
    Ok(Outcome { envelope: Envelope::new("oracle", arguments, Some(params), result), text, exit: Exit::Ok })
}
