//! `verify`: the exact identity suite and the numeric relation checks.
//!
//! Checks are planned as a flat job list, evaluated in parallel, and
//! reported in plan order.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde_json::{json, Value};

use hypseries::relations::{
    check_asymptotic_S, check_asymptotic_sinh, check_exp_representation, check_funcrel_S, check_lambert_neg,
    check_lambert_pos, check_linearity, check_reduction, check_sinh_linearity,
};
use hypseries::{identity_suite, BigComplex, IdentityCheck, ReductionKind, RelationId, RelationReport, Status};

use crate::render::{json_string, parse_phi};
use crate::{CliError, CliResult, Common, Format, KindArg, Outcome};

pub const FUNCREL_GRID: [&str; 5] = ["1", "0.5", "2pi", "2,1", "-3"];
pub const LAMBERT_POS_GRID: [&str; 4] = ["1", "2pi", "9", "2,1"];
pub const LAMBERT_NEG_GRID: [&str; 3] = ["1", "2pi", "3,2"];
pub const LINEARITY_GRID: [&str; 4] = ["1", "-1", "0.3,4", "2,1"];
pub const EXP_GRID: [&str; 2] = ["1", "2,1"];
pub const ASYMPTOTIC_SINH_PAIRS: [(usize, usize); 3] = [(0, 0), (1, 1), (1, 2)];

const DEFAULT_IDENTITY_M_MAX: usize = 10;
const DEFAULT_ALL_M_MAX: usize = 6;

pub struct Request {
    pub target: String,
    pub m: Option<usize>,
    pub m_max: Option<usize>,
    pub phi: Option<String>,
    pub gamma: Option<usize>,
    pub kind: Option<KindArg>,
    pub k_trunc: Option<usize>,
}

type Job = Box<dyn Fn() -> hypseries::Result<Vec<RelationReport>> + Send + Sync>;

struct Plan {
    prec: usize,
    jobs: Vec<Job>,
}

impl Plan {
    fn push(&mut self, f: impl Fn(usize) -> hypseries::Result<Vec<RelationReport>> + Send + Sync + 'static) {
        let prec = self.prec;
        self.jobs.push(Box::new(move || f(prec)));
    }
}

fn one(r: hypseries::Result<RelationReport>) -> hypseries::Result<Vec<RelationReport>> {
    r.map(|x| vec![x])
}

fn kind_of(k: KindArg) -> ReductionKind {
    match k {
        KindArg::Cosh => ReductionKind::Cosh,
        KindArg::SinhEven => ReductionKind::SinhEven,
        KindArg::SinhOdd => ReductionKind::SinhOdd,
    }
}

fn points(req: &Request, grid: &[&str], prec: usize) -> CliResult<Vec<BigComplex>> {
    match &req.phi {
        Some(p) => Ok(vec![parse_phi(p, prec)?]),
        None => grid.iter().map(|p| parse_phi(p, prec)).collect(),
    }
}

fn m_range(req: &Request, lo: usize) -> Vec<usize> {
    match (req.m, req.m_max) {
        (Some(m), _) => vec![m],
        (None, Some(mm)) => (lo..=mm).collect(),
        (None, None) => vec![lo],
    }
}

fn pointwise(
    plan: &mut Plan,
    ms: &[usize],
    phis: &[BigComplex],
    check: fn(usize, &BigComplex, usize) -> hypseries::Result<RelationReport>,
) {
    for &m in ms {
        for z in phis {
            let z = z.clone();
            plan.push(move |p| one(check(m, &z, p)));
        }
    }
}

/// Every admissible `(gamma, kind)` for order `m`, or just the requested one.
fn reduction_cases(m: usize, gamma: Option<usize>, kind: Option<KindArg>) -> Vec<(usize, ReductionKind)> {
    let kinds = match kind {
        Some(k) => vec![kind_of(k)],
        None => vec![ReductionKind::Cosh, ReductionKind::SinhEven, ReductionKind::SinhOdd],
    };
    let gammas: Vec<usize> = match gamma {
        Some(g) => vec![g],
        None => (1..=m).collect(),
    };
    let mut out = Vec::new();
    for &k in &kinds {
        for &g in &gammas {
            let ok = match k {
                ReductionKind::Cosh => true,
                ReductionKind::SinhEven => g % 2 == 0,
                ReductionKind::SinhOdd => g % 2 == 1,
            };
            if ok || gamma.is_some() {
                out.push((g, k));
            }
        }
    }
    out
}

fn reductions(plan: &mut Plan, req: &Request, ms: &[usize]) -> CliResult<()> {
    for &m in ms {
        for (g, k) in reduction_cases(m, req.gamma, req.kind) {
            let default_phi = if k == ReductionKind::Cosh { "2" } else { "1.5" };
            let z = parse_phi(req.phi.as_deref().unwrap_or(default_phi), plan.prec)?;
            plan.push(move |p| one(check_reduction(m, g, k, &z, p)));
        }
    }
    Ok(())
}

fn plan_relation(plan: &mut Plan, id: RelationId, req: &Request) -> CliResult<()> {
    let prec = plan.prec;
    match id {
        RelationId::FuncrelS => pointwise(plan, &m_range(req, 0), &points(req, &FUNCREL_GRID, prec)?, check_funcrel_S),
        RelationId::LambertPos => {
            pointwise(plan, &m_range(req, 0), &points(req, &LAMBERT_POS_GRID, prec)?, check_lambert_pos)
        }
        RelationId::LambertNeg => {
            pointwise(plan, &m_range(req, 1), &points(req, &LAMBERT_NEG_GRID, prec)?, check_lambert_neg)
        }
        RelationId::Linearity => {
            pointwise(plan, &m_range(req, 0), &points(req, &LINEARITY_GRID, prec)?, check_linearity)
        }
        RelationId::SinhLinearity => {
            pointwise(plan, &m_range(req, 0), &points(req, &LINEARITY_GRID, prec)?, check_sinh_linearity)
        }
        RelationId::ExpRepresentation => {
            for m in m_range(req, 0) {
                for z in points(req, &EXP_GRID, prec)? {
                    plan.push(move |p| check_exp_representation(m, &z, p));
                }
            }
        }
        RelationId::Reduction => reductions(plan, req, &m_range(req, 1))?,
        RelationId::AsymptoticS => {
            for m in m_range(req, 0) {
                plan.push(move |p| check_asymptotic_S(m, p));
            }
        }
        RelationId::AsymptoticSinh => {
            let pairs: Vec<(usize, usize)> = match (req.m, req.k_trunc) {
                (None, None) if req.m_max.is_none() => ASYMPTOTIC_SINH_PAIRS.to_vec(),
                _ => {
                    let k = req.k_trunc.unwrap_or(1);
                    m_range(req, 0).into_iter().map(|m| (m, k)).collect()
                }
            };
            for (m, k) in pairs {
                plan.push(move |p| check_asymptotic_sinh(m, k, p));
            }
        }
    }
    Ok(())
}

fn plan_all(plan: &mut Plan, m_max: usize) -> CliResult<()> {
    let base = Request {
        target: String::new(),
        m: None,
        m_max: Some(m_max),
        phi: None,
        gamma: None,
        kind: None,
        k_trunc: None,
    };
    for id in RelationId::ALL {
        match id {
            RelationId::AsymptoticSinh => {
                for (m, k) in ASYMPTOTIC_SINH_PAIRS {
                    plan.push(move |p| check_asymptotic_sinh(m, k, p));
                }
            }
            _ => plan_relation(plan, id, &base)?,
        }
    }
    Ok(())
}

fn identity_text(c: &IdentityCheck, out: &mut String) {
    if c.pass() {
        let _ = writeln!(out, "PASS identity {} cases={}", c.name, c.cases);
    } else {
        let _ = writeln!(
            out,
            "FAIL identity {} cases={} failures={} first={}",
            c.name,
            c.cases,
            c.failures.len(),
            c.failures[0]
        );
    }
}

fn render(ids: &[IdentityCheck], reports: &[RelationReport], c: &Common) -> (String, bool) {
    let id_fail = ids.iter().filter(|x| !x.pass()).count();
    let rel_fail = reports.iter().filter(|r| r.status == Status::Fail).count();
    let rel_warn = reports.iter().filter(|r| r.status == Status::Warn).count();
    let failed = id_fail + rel_fail > 0;
    let body = match c.format {
        Format::Text => {
            let mut out = String::new();
            for x in ids {
                identity_text(x, &mut out);
            }
            for r in reports {
                out.push_str(&r.summary_line());
                out.push('\n');
            }
            let total = ids.len() + reports.len();
            let _ = writeln!(
                out,
                "summary: {} checks, {} passed, {} warned, {} failed",
                total,
                total - id_fail - rel_fail - rel_warn,
                rel_warn,
                id_fail + rel_fail
            );
            out
        }
        Format::Json => {
            let rel: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
            json_string(&json!({"identities": ids, "relations": rel, "pass": !failed}))
        }
        Format::Csv => {
            let mut out = String::from("kind,name,m,phi_re,phi_im,prec,residual,status\n");
            for x in ids {
                let _ = writeln!(out, "identity,{},,,,,,{}", x.name, if x.pass() { "PASS" } else { "FAIL" });
            }
            for r in reports {
                let (re, im) = r.phi.as_ref().map(|z| (z.re_f64(), z.im_f64())).unwrap_or((f64::NAN, f64::NAN));
                let _ = writeln!(
                    out,
                    "relation,{},{},{},{},{},{},{}",
                    r.relation_id,
                    r.m,
                    re,
                    im,
                    r.prec,
                    r.residual_string(),
                    r.status
                );
            }
            out
        }
    };
    (body, failed)
}

pub fn run(req: &Request, c: &Common) -> CliResult<Outcome> {
    let mut plan = Plan { prec: c.prec, jobs: Vec::new() };
    let mut ids: Vec<IdentityCheck> = Vec::new();
    match req.target.as_str() {
        "identities" => ids = identity_suite(req.m_max.unwrap_or(DEFAULT_IDENTITY_M_MAX))?,
        "all" => {
            let m_max = req.m_max.unwrap_or(DEFAULT_ALL_M_MAX);
            ids = identity_suite(m_max.max(1))?;
            plan_all(&mut plan, m_max)?;
        }
        t => {
            let id = RelationId::from_str(t).map_err(|_| {
                let names: Vec<&str> = RelationId::ALL.iter().map(|r| r.as_str()).collect();
                CliError::Usage(format!("unknown verify target `{t}`; expected identities, all, {}", names.join(", ")))
            })?;
            plan_relation(&mut plan, id, req)?;
        }
    }
    let results: Vec<hypseries::Result<Vec<RelationReport>>> = plan.jobs.par_iter().map(|j| j()).collect();
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    let (body, failed) = render(&ids, &reports, c);
    Ok(Outcome { body, failed })
}
