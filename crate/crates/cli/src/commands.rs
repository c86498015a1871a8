use std::collections::BTreeMap;
use std::path::Path;

use serde_json::{json, Value};

use homforge::expr::{parse_monomial, parse_poly};
use homforge::fdalg::{
    akivis_of, check_identity, check_power_associative, check_sabinin_axioms, load_algebra, load_morphism,
    resolve_op, sabinin_from, yau_twist, AlgebraSpec, CheckReport, OpFamily, SabininClass,
};
use homforge::hombialg::{
    check_antipode, check_bialgebra, default_antipode_bounds, delta_poly, free_hom_associative,
    is_primitive, u_hom, AntipodeStatus,
};
use homforge::homify::{catalog, homify_identity, identity_from_json, IdentitySystem};
use homforge::linalg::{is_zero_vector, Matrix};
use homforge::qops::{q_alpha, q_symbolic, yiii_hom, Numeric};
use homforge::rational::q;
use homforge::{Error, Poly, Result, Signature};

use crate::report::{Report, Status, WitnessOut};
use crate::Cmd;

pub fn run(cmd: &Cmd, command: String, jobs: usize) -> Result<Report> {
    match cmd {
        Cmd::Homify {
            builtin,
            identity,
            expr,
        } => homify(command, builtin.as_deref(), identity.as_deref(), expr.as_deref()),
        Cmd::Check {
            algebra,
            identity,
            twist,
        } => check(command, algebra, identity, twist.as_deref(), jobs),
        Cmd::Qalpha {
            n,
            m,
            algebra,
            ..
        } => qalpha(command, *n, *m, algebra.as_deref()),
        Cmd::Sabinin {
            algebra,
            class,
            cutoff,
        } => sabinin(command, algebra, class, *cutoff, jobs),
        Cmd::Coproduct { expr } => coproduct(command, expr),
        Cmd::Primitive { expr } => primitive(command, expr),
        Cmd::Envelope {
            algebra,
            class,
            degree,
            zero_alpha,
        } => envelope(command, algebra, class, *degree, *zero_alpha),
        Cmd::Antipode {
            expr,
            degree,
            exp_bound,
        } => antipode(command, expr, *degree, *exp_bound),
        Cmd::Powerassoc {
            algebra,
            max,
            samples,
            seed,
        } => powerassoc(command, algebra, *max, *samples, *seed),
    }
}

fn load_identity(arg: &str) -> Result<IdentitySystem> {
    let path = Path::new(arg);
    if !path.is_file() {
        return catalog(arg);
    }
    let (signature, poly) = identity_from_json(&std::fs::read_to_string(path)?)?;
    let hom_form = poly.monomials().any(|m| m.is_decorated());
    Ok(IdentitySystem {
        name: path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| arg.to_string()),
        signature,
        identities: vec![poly],
        hom_form,
    })
}

fn inferred_signature(p: &Poly) -> Result<Signature> {
    let mut ops: BTreeMap<String, usize> = BTreeMap::new();
    let mut clash = None;
    for m in p.monomials() {
        m.for_each_node(&mut |sym, arity| {
            if let Some(&a) = ops.get(sym) {
                if a != arity {
                    clash = Some(Error::Arity {
                        symbol: sym.to_string(),
                        expected: a,
                        got: arity,
                    });
                }
            } else {
                ops.insert(sym.to_string(), arity);
            }
        });
    }
    if let Some(e) = clash {
        return Err(e);
    }
    Signature::new(ops, false)
}

fn homify(
    command: String,
    builtin: Option<&str>,
    identity: Option<&str>,
    expr: Option<&str>,
) -> Result<Report> {
    let identities = match (builtin, identity, expr) {
        (Some(name), _, _) | (None, Some(name), None) => load_identity(name)?.homified()?.identities,
        (None, None, Some(src)) => {
            let p = parse_poly(src)?;
            vec![homify_identity(&p, &inferred_signature(&p)?)?]
        }
        _ => {
            return Err(Error::Invalid(
                "one of --builtin, --identity or --expr is required".into(),
            ))
        }
    };
    let mut r = Report::new(command, Status::Pass);
    r.lines = identities.iter().map(|p| p.to_string()).collect();
    r.result = json!(r.lines);
    r.bare = true;
    Ok(r)
}

fn witnesses(spec: &AlgebraSpec, report: &CheckReport) -> Vec<WitnessOut> {
    report
        .witnesses
        .iter()
        .map(|w| WitnessOut {
            label: w.label.clone(),
            input: w.assignment.clone(),
            defect: spec.format_vector(&w.defect),
        })
        .collect()
}

fn check(
    command: String,
    algebra: &str,
    identity: &str,
    twist: Option<&str>,
    jobs: usize,
) -> Result<Report> {
    let base = load_algebra(algebra)?;
    let sys = load_identity(identity)?;
    let beta = twist.map(load_morphism).transpose()?;
    let missing = sys
        .signature
        .ops()
        .iter()
        .any(|op| resolve_op(&base, &op.symbol, op.arity).is_err());
    let derive = missing && base.ops.len() == 1 && base.binary_product().is_ok();
    let spec = match (&beta, derive) {
        (_, true) => {
            let alpha = beta.as_ref().map_or(base.alpha.clone(), |b| b.mul(&base.alpha));
            akivis_of(&base.clone().with_alpha(alpha))?
        }
        (Some(b), false) => yau_twist(&base, b)?,
        (None, false) => base.clone(),
    };
    let report = check_identity(&spec, &sys, jobs)?;
    let mut r = Report::new(command, Status::from_bool(report.passed()));
    if derive {
        r.notes.push(format!(
            "checked the Akivis structure (commutator, Hom-associator) of `{}`",
            base.name
        ));
    }
    r.witnesses = witnesses(&spec, &report);
    r.lines.push(format!(
        "{}: {} identities on {} basis tuples",
        sys.name,
        sys.identities.len(),
        report.tuples
    ));
    for (name, op) in &spec.ops {
        if op.is_zero() {
            r.notes.push(format!("operation {name} vanishes identically"));
        }
    }
    if !spec.ops.is_empty() && spec.ops.values().all(|op| op.is_zero()) {
        r.notes.push("operations vanish: the algebra is trivial".into());
    }
    r.result = json!({ "identity": sys.name, "tuples": report.tuples });
    Ok(r)
}

fn qalpha(
    command: String,
    n: usize,
    m: usize,
    algebra: Option<&str>,
) -> Result<Report> {
    let mut r = Report::new(command, Status::Pass);
    match algebra {
        None => {
            let p = q_symbolic(n, m, true);
            r.lines.push(p.to_string());
            r.result = json!(p.to_string());
            r.bare = true;
        }
        Some(a) => {
            let spec = load_algebra(a)?;
            let alg = Numeric::new(&spec)?;
            let dim = spec.dim();
            let mut values = serde_json::Map::new();
            for t in homforge::fdalg::tuples(dim, n + m + 1) {
                let e: Vec<_> = t.iter().map(|&i| spec.basis_vector(i)).collect();
                let v = q_alpha(&alg, &e[..n], &e[n..n + m], &e[n + m]);
                if is_zero_vector(&v) {
                    continue;
                }
                let name = |s: &[usize]| {
                    s.iter().map(|&i| spec.basis[i].as_str()).collect::<Vec<_>>().join(",")
                };
                let key = format!(
                    "q({};{};{})",
                    name(&t[..n]),
                    name(&t[n..n + m]),
                    name(&t[n + m..])
                );
                let val = spec.format_vector(&v);
                r.lines.push(format!("{key} = {val}"));
                values.insert(key, Value::String(val));
            }
            if values.is_empty() {
                r.notes.push(format!("q_{{{n},{m}}} vanishes on all basis tuples"));
            }
            r.result = Value::Object(values);
        }
    }
    Ok(r)
}

fn family(spec: &AlgebraSpec, class: &str, cutoff: usize) -> Result<OpFamily> {
    if class.eq_ignore_ascii_case("yiii") {
        yiii_hom(spec, cutoff)
    } else {
        sabinin_from(spec, class.parse::<SabininClass>()?, cutoff)
    }
}

fn sabinin(
    command: String,
    algebra: &str,
    class: &str,
    cutoff: usize,
    jobs: usize,
) -> Result<Report> {
    let spec = load_algebra(algebra)?;
    let fam = family(&spec, class, cutoff + 1)?;
    let report = check_sabinin_axioms(&fam, &spec, cutoff, jobs)?;
    let mut r = Report::new(command, Status::from_bool(report.passed())).bound("cutoff", cutoff as u64);
    r.witnesses = witnesses(&spec, &report.report);
    for (label, tuples) in &report.checked {
        r.lines.push(format!("{label}: {tuples} basis tuples"));
    }
    if !report.skipped.is_empty() {
        r.notes.push(format!(
            "{} instances skipped (brackets beyond the cutoff)",
            report.skipped.len()
        ));
    }
    r.result = json!({ "checked": report.checked, "skipped": report.skipped });
    Ok(r)
}

fn coproduct(command: String, expr: &str) -> Result<Report> {
    let d = delta_poly(&parse_poly(expr)?)?;
    let text = d.to_circ_string().unwrap_or_else(|| d.to_string());
    let mut r = Report::new(command, Status::Pass);
    r.lines.push(text.clone());
    r.result = json!({ "coproduct": text, "summands": d.len() });
    r.bare = true;
    Ok(r)
}

fn primitive(command: String, expr: &str) -> Result<Report> {
    let p = parse_poly(expr)?;
    let ok = is_primitive(&p)?;
    let mut r = Report::new(command, Status::from_bool(ok));
    r.lines.push(format!("Δ({p})"));
    if !ok {
        let mut residual = delta_poly(&p)?;
        residual.add_product(&Poly::unit(), &p, &q(-1));
        residual.add_product(&p, &Poly::unit(), &q(-1));
        r.witnesses.push(WitnessOut {
            label: "Δ(p) - u⊗p - p⊗u".into(),
            input: vec![("p".into(), p.to_string())],
            defect: residual.to_string(),
        });
    }
    Ok(r)
}

fn envelope(
    command: String,
    algebra: &str,
    class: &str,
    degree: usize,
    zero_alpha: bool,
) -> Result<Report> {
    let mut spec = load_algebra(algebra)?;
    if zero_alpha {
        let n = spec.dim();
        spec = spec.with_alpha(Matrix::zeros(n, n));
    }
    let fam = family(&spec, class, degree.saturating_sub(2).max(1))?;
    let u = u_hom(&fam, &spec, degree)?;
    let dims = u.dimensions();
    let mut r = Report::new(command, Status::Pass).bound("degree", degree as u64);
    let mut result = serde_json::Map::new();
    for (deg, info) in &dims {
        r.lines.push(format!(
            "degree {deg}: dimension {}, relation rank {}",
            info.dimension, info.relation_rank
        ));
        result.insert(deg.to_string(), json!([info.dimension, info.relation_rank]));
    }
    let alg = u.algebra();
    let mut samples: Vec<Poly> = spec.basis.iter().map(|b| Poly::var(b)).collect();
    if spec.dim() >= 2 {
        samples.push(parse_poly(&format!("{}*{}", spec.basis[0], spec.basis[1]))?);
    }
    let check = check_bialgebra(&alg, &samples, Some(&u))?;
    for o in check.counit.iter().chain(&check.generators) {
        if !o.holds {
            r.witnesses.push(WitnessOut {
                label: "bialgebra compatibility".into(),
                input: vec![("element".into(), o.element.clone())],
                defect: "coproduct leaves the ideal".into(),
            });
        }
    }
    r.status = Status::from_bool(check.passed());
    r.notes.push(format!(
        "{} generating relations checked for coproduct compatibility",
        check.generators.len()
    ));
    r.result = Value::Object(result);
    Ok(r)
}

fn antipode(
    command: String,
    expr: &str,
    degree: Option<usize>,
    exp_bound: Option<u32>,
) -> Result<Report> {
    let u = parse_monomial(expr)?;
    let (d0, e0) = default_antipode_bounds(&u);
    let (d, e) = (degree.unwrap_or(d0), exp_bound.unwrap_or(e0));
    let mut gens: Vec<String> = u.leaves().iter().map(|g| g.base.clone()).collect();
    gens.sort();
    gens.dedup();
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    let report = check_antipode(&u, &free_hom_associative(&refs, d, e)?)?;
    let status = match report.status {
        AntipodeStatus::Holds => Status::Pass,
        AntipodeStatus::InconclusiveWithinBounds => Status::Inconclusive,
    };
    let mut r = Report::new(command, status)
        .bound("degree", d as u64)
        .bound("exp_bound", e as u64);
    r.lines.push(format!(
        "α(Σ u(1)·S(u(2))) - ε(u)·1 for u = {} ({} coproduct summands)",
        report.monomial, report.summands
    ));
    match (&report.normal_form, &report.reason) {
        (Some(nf), _) => r.lines.push(format!("normal form: {nf}")),
        (None, Some(why)) => r.notes.push(why.clone()),
        (None, None) => r.lines.push("normal form: 0".into()),
    }
    r.result = serde_json::to_value(&report)?;
    Ok(r)
}

fn powerassoc(
    command: String,
    algebra: &str,
    max: usize,
    samples: usize,
    seed: u64,
) -> Result<Report> {
    let spec = load_algebra(algebra)?;
    let report = check_power_associative(&spec, max, samples, seed)?;
    let mut r = Report::new(command, Status::from_bool(report.passed()))
        .bound("max", max as u64)
        .bound("samples", samples as u64);
    r.seed = Some(seed);
    r.witnesses = report
        .failures
        .iter()
        .map(|f| WitnessOut {
            label: format!("x^{} = α^{}(x^{})·α^{}(x^{})", f.n + f.m, f.m - 1, f.n, f.n - 1, f.m),
            input: vec![("vector".into(), f.vector.to_string())],
            defect: f.defect.clone(),
        })
        .collect();
    r.lines.push(format!(
        "{} vectors, all n + m ≤ {max}",
        report.vectors
    ));
    r.lines.push(format!(
        "x²α(x) = α(x)x²: {}; x⁴ = α(x²)α(x²): {}",
        report.condition1, report.condition2
    ));
    r.result = serde_json::to_value(&report)?;
    Ok(r)
}
