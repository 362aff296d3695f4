//! Subcommand implementations other than `verify`.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use hypseries::bernoulli::{
    bernoulli_numbers, bernoulli_poly, gen_bernoulli_polynomial, reduced_even_values, reduced_odd_values,
};
use hypseries::bigc::{format_sig, BigComplex};
use hypseries::coefficients::{c_table, d_table};
use hypseries::polynomials::{a_sinh_trunc, calA, calB, calB_residue, calS, frak_b, gen_ramanujan, ramanujan};
use hypseries::series::{
    euler_gamma, eval_S, eval_S_cosh, eval_S_exp, eval_S_sinh, eval_S_sinh_exp, eval_S_sinh_via_lambert,
    eval_S_via_lambert, eval_lambert, eval_pi_poly, eval_symbolic, qpolygamma_one, zeta_int,
};
use hypseries::zeros::{find_zeros, to_csv, verify_unruh_zero, ZeroSet};
use hypseries::{CoeffKind, CoeffTable, Error, PiPolynomial, Rational, RationalPolynomial, Route, SeriesValue};

use crate::render::{digits, json_string, parse_phi, phi_json, pipoly_csv_rows, rational_json};
use crate::{BernoulliKind, CliError, CliResult, CoeffArg, Command, Common, Format, Outcome, PolyFamily, SeriesKind};

pub fn run(cmd: &Command, c: &Common) -> CliResult<Outcome> {
    match cmd {
        Command::Poly { family, m, i, s, r, k_trunc } => poly(*family, *m, *i, *s, *r, *k_trunc, c).map(Outcome::ok),
        Command::Coeffs { kind, m, route } => coeffs(*kind, *m, route, c),
        Command::Bernoulli { kind, n, m, order } => bernoulli(*kind, *n, *m, *order, c).map(Outcome::ok),
        Command::Eval { series, m, gamma, s, phi, k_trunc } => {
            eval(*series, *m, *gamma, *s, phi, *k_trunc, c).map(Outcome::ok)
        }
        Command::Verify { target, m, m_max, phi, gamma, kind, k_trunc } => {
            let req = crate::verify::Request {
                target: target.clone(),
                m: *m,
                m_max: *m_max,
                phi: phi.clone(),
                gamma: *gamma,
                kind: *kind,
                k_trunc: *k_trunc,
            };
            crate::verify::run(&req, c)
        }
        Command::Zeros { m, m_max } => zeros(*m, *m_max, c),
    }
}

// ---- poly ----

fn family_name(f: PolyFamily) -> &'static str {
    match f {
        PolyFamily::CalB => "calB",
        PolyFamily::CalA => "calA",
        PolyFamily::CalBResidue => "calB-residue",
        PolyFamily::Ramanujan => "ramanujan",
        PolyFamily::GenRamanujan => "gen-ramanujan",
        PolyFamily::FrakB => "frak-b",
        PolyFamily::CalS => "calS",
        PolyFamily::ASinh => "a-sinh",
    }
}

fn single_poly(p: &PiPolynomial, header: Value, c: &Common) -> String {
    match c.format {
        Format::Text => format!("{p}\n"),
        Format::Json => {
            let mut v = header;
            v["terms"] = p.to_json();
            v["canonical"] = json!(p.to_canonical());
            json_string(&v)
        }
        Format::Csv => {
            let mut out = String::from("phi_pow,pi_pow,num,den\n");
            pipoly_csv_rows(p, "", &mut out);
            out
        }
    }
}

fn poly(family: PolyFamily, m: usize, i: usize, s: usize, r: i64, k_trunc: usize, c: &Common) -> CliResult<String> {
    let name = family_name(family);
    let header = json!({"family": name, "m": m});
    let out = match family {
        PolyFamily::CalB => single_poly(&calB(m), header, c),
        PolyFamily::CalA => single_poly(&calA(m), header, c),
        PolyFamily::CalBResidue => single_poly(&calB_residue(m), header, c),
        PolyFamily::Ramanujan => single_poly(&ramanujan(m), header, c),
        PolyFamily::GenRamanujan => {
            let p = gen_ramanujan(m, s, r)?;
            single_poly(&p, json!({"family": name, "m": m, "s": s, "r": r}), c)
        }
        PolyFamily::FrakB => {
            let row = frak_b(i);
            match c.format {
                Format::Text => row.iter().enumerate().map(|(k, v)| format!("k={k}: {v}\n")).collect(),
                Format::Json => {
                    let vals: Vec<Value> = row.iter().map(|v| v.to_json()).collect();
                    json_string(&json!({"family": name, "i": i, "values": vals}))
                }
                Format::Csv => {
                    let mut out = String::from("k,pi_pow,num,den\n");
                    for (k, v) in row.iter().enumerate() {
                        for (b, q) in v.terms() {
                            let _ = writeln!(out, "{k},{b},{},{}", q.numer(), q.denom());
                        }
                    }
                    out
                }
            }
        }
        PolyFamily::CalS => {
            let polys = calS(m);
            match c.format {
                Format::Text => polys.iter().enumerate().map(|(k, p)| format!("i={k}: {p}\n")).collect(),
                Format::Json => {
                    let vals: Vec<Value> = polys.iter().map(|p| p.to_json()).collect();
                    json_string(&json!({"family": name, "m": m, "polynomials": vals}))
                }
                Format::Csv => {
                    let mut out = String::from("i,phi_pow,pi_pow,num,den\n");
                    for (k, p) in polys.iter().enumerate() {
                        pipoly_csv_rows(p, &format!("{k},"), &mut out);
                    }
                    out
                }
            }
        }
        PolyFamily::ASinh => {
            let p = a_sinh_trunc(m, k_trunc);
            match c.format {
                Format::Text => format!("{p}\n"),
                Format::Json => {
                    let terms: Vec<Value> = p
                        .terms()
                        .map(|(a, sym, q)| json!({"phi_pow": a, "symbol": sym.to_string(), "num": q.numer().to_string(), "den": q.denom().to_string()}))
                        .collect();
                    json_string(&json!({"family": name, "m": m, "k_trunc": k_trunc, "terms": terms}))
                }
                Format::Csv => {
                    let mut out = String::from("phi_pow,symbol,num,den\n");
                    for (a, sym, q) in p.terms() {
                        let _ = writeln!(out, "{a},{sym},{},{}", q.numer(), q.denom());
                    }
                    out
                }
            }
        }
    };
    Ok(out)
}

// ---- coeffs ----

fn coeff_label(kind: CoeffKind, i: usize) -> usize {
    match kind {
        CoeffKind::C => 2 * i + 1,
        CoeffKind::D => 2 * i,
    }
}

fn coeffs(kind: CoeffArg, m: usize, route: &str, c: &Common) -> CliResult<Outcome> {
    let build = |r: Route| match kind {
        CoeffArg::C => c_table(m, r),
        CoeffArg::D => d_table(m, r),
    };
    let (tables, skipped): (Vec<CoeffTable>, Vec<Route>) = if route == "all" {
        let mut t = Vec::new();
        let mut skip = Vec::new();
        for r in Route::ALL {
            match build(r) {
                Ok(tab) => t.push(tab),
                Err(Error::RouteUnsupported { .. }) => skip.push(r),
                Err(e) => return Err(e.into()),
            }
        }
        (t, skip)
    } else {
        (vec![build(Route::from_str(route)?)?], Vec::new())
    };
    let agree = tables.windows(2).all(|w| w[0].values == w[1].values);
    let letter = if kind == CoeffArg::C { "c" } else { "d" };
    let body = match c.format {
        Format::Text => {
            let mut out = String::new();
            for t in &tables {
                if tables.len() > 1 {
                    let _ = writeln!(out, "# {}", t.route.as_str());
                }
                for (i, v) in t.values.iter().enumerate() {
                    let _ = writeln!(out, "{letter}_{}^({m}) = {v}", coeff_label(t.kind, i));
                }
            }
            for r in &skipped {
                let _ = writeln!(out, "# {}: not available for m = {m}", r.as_str());
            }
            if tables.len() > 1 {
                let _ = writeln!(out, "routes agree: {}", if agree { "yes" } else { "NO" });
            }
            out
        }
        Format::Json => {
            let routes: Vec<Value> = tables
                .iter()
                .map(|t| {
                    let vals: Vec<Value> = t.values.iter().map(rational_json).collect();
                    json!({"route": t.route.as_str(), "values": vals})
                })
                .collect();
            let skipped: Vec<&str> = skipped.iter().map(|r| r.as_str()).collect();
            json_string(&json!({"kind": letter, "m": m, "routes": routes, "unsupported": skipped, "agree": agree}))
        }
        Format::Csv => {
            let mut out = String::from("route,index,num,den\n");
            for t in &tables {
                for (i, v) in t.values.iter().enumerate() {
                    let _ =
                        writeln!(out, "{},{},{},{}", t.route.as_str(), coeff_label(t.kind, i), v.numer(), v.denom());
                }
            }
            out
        }
    };
    Ok(Outcome { body, failed: !agree })
}

// ---- bernoulli ----

fn rational_list(label: &str, vals: &[Rational], c: &Common, header: Value) -> String {
    match c.format {
        Format::Text => vals.iter().enumerate().map(|(k, v)| format!("{label}_{k} = {v}\n")).collect(),
        Format::Json => {
            let mut h = header;
            h["values"] = Value::Array(vals.iter().map(rational_json).collect());
            json_string(&h)
        }
        Format::Csv => {
            let mut out = String::from("k,num,den\n");
            for (k, v) in vals.iter().enumerate() {
                let _ = writeln!(out, "{k},{},{}", v.numer(), v.denom());
            }
            out
        }
    }
}

fn rational_poly(p: &RationalPolynomial, c: &Common, header: Value) -> String {
    match c.format {
        Format::Text => format!("{p}\n"),
        Format::Json => {
            let mut h = header;
            h["coeffs"] = Value::Array(p.coeffs().iter().map(rational_json).collect());
            json_string(&h)
        }
        Format::Csv => {
            let mut out = String::from("power,num,den\n");
            for (k, v) in p.coeffs().iter().enumerate() {
                let _ = writeln!(out, "{k},{},{}", v.numer(), v.denom());
            }
            out
        }
    }
}

fn bernoulli(kind: BernoulliKind, n: usize, m: usize, order: usize, c: &Common) -> CliResult<String> {
    Ok(match kind {
        BernoulliKind::Numbers => rational_list("B", &bernoulli_numbers(n), c, json!({"kind": "numbers", "n": n})),
        BernoulliKind::Poly => rational_poly(&bernoulli_poly(n), c, json!({"kind": "poly", "n": n})),
        BernoulliKind::Gen => {
            rational_poly(&gen_bernoulli_polynomial(n, order), c, json!({"kind": "gen", "n": n, "order": order}))
        }
        BernoulliKind::ReducedEven => {
            rational_list("B", &reduced_even_values(n, m), c, json!({"kind": "reduced-even", "n": n, "m": m}))
        }
        BernoulliKind::ReducedOdd => {
            rational_list("B", &reduced_odd_values(n, m), c, json!({"kind": "reduced-odd", "n": n, "m": m}))
        }
    })
}

// ---- eval ----

fn series_name(s: SeriesKind) -> &'static str {
    match s {
        SeriesKind::S => "S",
        SeriesKind::SCosh => "S-cosh",
        SeriesKind::SSinh => "S-sinh",
        SeriesKind::SExp => "S-exp",
        SeriesKind::SSinhExp => "S-sinh-exp",
        SeriesKind::SViaLambert => "S-via-lambert",
        SeriesKind::SSinhViaLambert => "S-sinh-via-lambert",
        SeriesKind::Lambert => "lambert",
        SeriesKind::QPolygamma => "qpolygamma",
        SeriesKind::Zeta => "zeta",
        SeriesKind::EulerGamma => "euler-gamma",
        SeriesKind::CalB => "calB",
        SeriesKind::ASinh => "a-sinh",
    }
}

fn exact(value: BigComplex) -> SeriesValue {
    SeriesValue { value, tail_log2: f64::NEG_INFINITY, terms_used: 0 }
}

fn nonneg(name: &str, v: i64) -> CliResult<usize> {
    usize::try_from(v).map_err(|_| CliError::Usage(format!("--{name} must be nonnegative, got {v}")))
}

fn eval(series: SeriesKind, m: usize, gamma: i64, s: i64, phi: &str, k_trunc: usize, c: &Common) -> CliResult<String> {
    let p = c.prec;
    let z = parse_phi(phi, p)?;
    let w = z.prec();
    let uses_phi = !matches!(series, SeriesKind::Zeta | SeriesKind::EulerGamma);
    let sv = match series {
        SeriesKind::S => eval_S(m, &z, p)?,
        SeriesKind::SCosh => eval_S_cosh(m, gamma, &z, p)?,
        SeriesKind::SSinh => eval_S_sinh(m, gamma, &z, p)?,
        SeriesKind::SExp => eval_S_exp(m, &z, p)?,
        SeriesKind::SSinhExp => eval_S_sinh_exp(m, &z, p)?,
        SeriesKind::SViaLambert => eval_S_via_lambert(m, &z, p)?,
        SeriesKind::SSinhViaLambert => eval_S_sinh_via_lambert(m, &z, p)?,
        SeriesKind::Lambert => eval_lambert(&z, s, p)?,
        SeriesKind::QPolygamma => qpolygamma_one(&z, nonneg("s", s)?, p)?,
        SeriesKind::Zeta => exact(BigComplex::real(zeta_int(nonneg("s", s)?, p)?, w)),
        SeriesKind::EulerGamma => exact(BigComplex::real(euler_gamma(p)?, w)),
        SeriesKind::CalB => exact(eval_pi_poly(&calB(m), &z, p)),
        SeriesKind::ASinh => exact(eval_symbolic(&a_sinh_trunc(m, k_trunc), &z, p)?),
    };
    let d = digits(p);
    let (re, im) = sv.value.to_decimal(d);
    let name = series_name(series);
    Ok(match c.format {
        Format::Text => {
            let mut out = format!("{name}: {re}");
            if !sv.value.is_real() {
                let _ = write!(out, ",{im}");
            }
            out.push('\n');
            if sv.terms_used > 0 {
                let _ = writeln!(out, "tail_log2 <= {:.1}, terms = {}", sv.tail_log2, sv.terms_used);
            }
            out
        }
        Format::Json => {
            let mut v = json!({
                "series": name, "m": m, "prec": p, "re": re, "im": im,
                "terms": sv.terms_used,
                "tail_log2": if sv.tail_log2.is_finite() { json!(sv.tail_log2) } else { Value::Null },
            });
            if uses_phi {
                v["phi"] = phi_json(&z, d);
            }
            json_string(&v)
        }
        Format::Csv => format!("re,im,tail_log2,terms\n{re},{im},{},{}\n", sv.tail_log2, sv.terms_used),
    })
}

// ---- zeros ----

fn zero_set_json(set: &ZeroSet, unruh: bool) -> Value {
    let d = (set.prec / 4).max(1);
    let zs: Vec<Value> = set.zeros.iter().map(|z| phi_json(z, d)).collect();
    let rs: Vec<String> = set.residuals.iter().map(|r| format_sig(r, 6)).collect();
    let checks = set.checks();
    json!({
        "m": set.m,
        "method": set.method,
        "zeros": zs,
        "residuals": rs,
        "checks": checks,
        "unruh_exact": unruh,
        "pass": checks.pass(set.prec) && unruh,
    })
}

fn zeros(m: Option<usize>, m_max: Option<usize>, c: &Common) -> CliResult<Outcome> {
    let ms: Vec<usize> = match (m, m_max) {
        (Some(m), _) => vec![m],
        (None, Some(mm)) => (0..=mm).collect(),
        (None, None) => vec![0],
    };
    let prec = c.prec;
    let sets: Vec<ZeroSet> = ms.par_iter().map(|&m| find_zeros(m, prec)).collect::<Result<Vec<_>, _>>()?;
    let unruh: Vec<bool> = sets.iter().map(|s| verify_unruh_zero(s.m)).collect();
    let all_pass = sets.iter().zip(&unruh).all(|(s, &u)| u && s.checks().pass(prec));
    let rows: usize = sets.iter().map(|s| s.zeros.len()).sum();
    let min_dist = sets.iter().map(|s| s.min_unit_circle_distance()).fold(f64::INFINITY, f64::min);
    let body = match c.format {
        Format::Csv => to_csv(&sets),
        Format::Json => {
            let v: Vec<Value> = sets.iter().zip(&unruh).map(|(s, &u)| zero_set_json(s, u)).collect();
            json_string(&json!({
                "prec": prec, "rows": rows, "min_unit_circle_distance": min_dist,
                "pass": all_pass, "sets": v,
            }))
        }
        Format::Text => {
            let mut out = String::new();
            for (s, &u) in sets.iter().zip(&unruh) {
                let k = s.checks();
                let _ = writeln!(
                    out,
                    "{} m={} zeros={} max_residual_log2={:.1} symmetry_log2={:.1} vieta_log2={:.1} min_unit_circle_distance={:.6} unruh_exact={}",
                    if k.pass(prec) && u { "PASS" } else { "FAIL" },
                    s.m,
                    k.count,
                    k.max_residual_log2,
                    k.symmetry_log2,
                    k.vieta_log2,
                    k.min_unit_circle_distance,
                    u
                );
                for (z, r) in s.zeros.iter().zip(&s.residuals) {
                    let (re, im) = z.to_decimal(20);
                    let _ = writeln!(out, "  {re} {im} residual={}", format_sig(r, 3));
                }
            }
            let _ = writeln!(out, "rows={rows} min_unit_circle_distance={min_dist:.6} pass={all_pass}");
            out
        }
    };
    Ok(Outcome { body, failed: !all_pass })
}
