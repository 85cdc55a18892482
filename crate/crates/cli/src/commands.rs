use serde_json::{json, Value};
use z4uk::codes::{CyclicCode, FactorSystem};
use z4uk::duality::{count_self_dual, dual_code, enumerate_self_dual};
use z4uk::graymap::{QcCode, QcParameters};
use z4uk::idealenum::{closed_form_count, count_formulas, enumerate_ideal_specs, Case};
use z4uk::specparse::parse_code_specs;
use z4uk::Error;

use crate::output::{big, digits, say, CliResult, Report};
use crate::Options;

/// Factor indices in display order.
fn order(opts: &Options, system: &FactorSystem) -> Vec<usize> {
    if opts.paper_order {
        system.block_order().to_vec()
    } else {
        (0..system.r()).collect()
    }
}

fn check_k(k: usize) -> CliResult {
    if k < 2 {
        return Err(Error::InvalidChainLength(k).into());
    }
    Ok(())
}

fn load_code(opts: &Options, n: usize, k: usize, specs: &str) -> CliResult<CyclicCode> {
    check_k(k)?;
    let system = FactorSystem::new(n)?;
    let parsed = parse_code_specs(specs, &system, k, opts.paper_order)?;
    Ok(CyclicCode::new(system, k, parsed)?)
}

fn spec_tuple(opts: &Options, code: &CyclicCode) -> String {
    let texts: Vec<String> = order(opts, code.system()).iter().map(|&j| code.specs()[j].to_string()).collect();
    texts.join(";")
}

fn code_json(opts: &Options, code: &CyclicCode) -> Value {
    let idx = order(opts, code.system());
    json!({
        "n": code.n(),
        "k": code.k(),
        "factors": idx.iter().map(|&j| code.system().factor(j).f.to_string()).collect::<Vec<_>>(),
        "specs": idx.iter().map(|&j| &code.specs()[j]).collect::<Vec<_>>(),
        "spec_text": spec_tuple(opts, code),
        "log2_size": code.log2_cardinality(),
    })
}

pub fn factor(opts: &Options, n: usize) -> CliResult {
    let system = FactorSystem::new(n)?;
    let idx = order(opts, &system);
    let pos = |j: usize| idx.iter().position(|&p| p == j).unwrap_or(j) + 1;
    let mut items = Vec::new();
    let mut rows = Vec::new();
    for (p, &j) in idx.iter().enumerate() {
        let fac = system.factor(j);
        let (sigma, delta) = (pos(system.sigma(j)), system.delta(j));
        say(format_args!("f_{} = {}  (d = {}, mod 2: {})", p + 1, fac.f, fac.d, fac.fbar));
        say(format_args!("e_{} = {}", p + 1, fac.e));
        say(format_args!("sigma({}) = {}, delta_{} = {}", p + 1, sigma, p + 1, delta));
        items.push(json!({
            "index": p + 1,
            "f": fac.f.coeffs(),
            "f_text": fac.f.to_string(),
            "fbar": fac.fbar.coeffs(),
            "d": fac.d,
            "e": fac.e.coeffs(),
            "e_text": fac.e.to_string(),
            "sigma": sigma,
            "delta": delta,
        }));
        rows.push(vec![
            (p + 1).to_string(),
            fac.f.to_string(),
            fac.fbar.to_string(),
            fac.d.to_string(),
            fac.e.to_string(),
            sigma.to_string(),
            delta.to_string(),
        ]);
    }
    say(format_args!("r = {}, lambda = {}, epsilon = {}", system.r(), system.lambda(), system.epsilon()));
    Report {
        json: json!({"n": n, "r": system.r(), "lambda": system.lambda(), "epsilon": system.epsilon(), "factors": items}),
        header: vec!["index", "f", "fbar", "d", "e", "sigma", "delta"],
        rows,
    }
    .write(opts)
}

pub fn count(opts: &Options, n: usize, k: usize) -> CliResult {
    check_k(k)?;
    let system = FactorSystem::new(n)?;
    let mut items = Vec::new();
    let mut rows = Vec::new();
    for (p, &j) in order(opts, &system).iter().enumerate() {
        let fac = system.factor(j);
        let ideals = count_formulas(fac.d, k)?.total;
        say(format_args!("f_{} = {}  d = {}  ideals = {}", p + 1, fac.f, fac.d, ideals));
        items.push(json!({"index": p + 1, "f": fac.f.to_string(), "d": fac.d, "ideals": big(&ideals)}));
        rows.push(vec![(p + 1).to_string(), fac.f.to_string(), fac.d.to_string(), ideals.to_string()]);
    }
    let total = system.count_codes(k)?;
    say(&total);
    rows.push(vec!["total".into(), String::new(), String::new(), total.to_string()]);
    Report {
        json: json!({"n": n, "k": k, "factors": items, "total": big(&total)}),
        header: vec!["index", "f", "d", "ideals"],
        rows,
    }
    .write(opts)
}

pub fn ideals(opts: &Options, d: usize, k: usize, count_only: bool) -> CliResult {
    let counts = count_formulas(d, k)?;
    let mut items = Vec::new();
    let mut rows = Vec::new();
    if !count_only {
        for spec in enumerate_ideal_specs(d, k)? {
            let log = spec.log2_cardinality();
            say(format_args!("{:<4} {}  |C| = 2^{}", spec.case.to_string(), spec, log));
            rows.push(vec![spec.case.to_string(), spec.to_string(), log.to_string()]);
            let mut v = serde_json::to_value(&spec).unwrap_or(Value::Null);
            if let Value::Object(m) = &mut v {
                m.insert("text".into(), json!(spec.to_string()));
                m.insert("log2_size".into(), json!(log));
            }
            items.push(v);
        }
    }
    for case in Case::ALL {
        say(format_args!("case {:<3} {}", case.to_string(), counts.per_case[case.index()]));
    }
    say(&counts.total);
    let per_case: serde_json::Map<String, Value> =
        Case::ALL.iter().map(|c| (c.to_string(), big(&counts.per_case[c.index()]))).collect();
    Report {
        json: json!({
            "d": d,
            "k": k,
            "per_case": per_case,
            "total": big(&counts.total),
            "closed_form": big(&closed_form_count(d, k)),
            "ideals": items,
        }),
        header: vec!["case", "ideal", "log2_size"],
        rows,
    }
    .write(opts)
}

pub fn dual(opts: &Options, n: usize, k: usize, specs: &str) -> CliResult {
    let code = load_code(opts, n, k, specs)?;
    let dual = dual_code(&code)?;
    say(spec_tuple(opts, &dual));
    Report {
        json: json!({"code": code_json(opts, &code), "dual": code_json(opts, &dual)}),
        header: vec!["code", "dual", "log2_size_code", "log2_size_dual"],
        rows: vec![vec![
            spec_tuple(opts, &code),
            spec_tuple(opts, &dual),
            code.log2_cardinality().to_string(),
            dual.log2_cardinality().to_string(),
        ]],
    }
    .write(opts)
}

pub fn selfdual(opts: &Options, n: usize, k: usize, count_only: bool) -> CliResult {
    check_k(k)?;
    let system = FactorSystem::new(n)?;
    let total = count_self_dual(&system, k)?;
    let mut items = Vec::new();
    let mut rows = Vec::new();
    if !count_only {
        for (c, code) in enumerate_self_dual(&system, k, opts.budget)?.enumerate() {
            let code = code?;
            let text = spec_tuple(opts, &code);
            say(format_args!("{}: {}", c + 1, text));
            items.push(code_json(opts, &code));
            rows.push(vec![(c + 1).to_string(), text, code.log2_cardinality().to_string()]);
        }
    }
    say(&total);
    Report {
        json: json!({"n": n, "k": k, "count": big(&total), "codes": items}),
        header: vec!["index", "specs", "log2_size"],
        rows,
    }
    .write(opts)
}

fn triple(p: &QcParameters) -> String {
    match p.min_lee_distance {
        Some(d) => format!("[{}, {}, {}]", p.length, p.log2_size, d),
        None => format!("[{}, {}, empty]", p.length, p.log2_size),
    }
}

fn params_json(p: &QcParameters) -> Value {
    json!({
        "length": p.length,
        "log2_size": p.log2_size,
        "min_lee_distance": p.min_lee_distance.map_or(json!("empty"), |d| json!(d)),
    })
}

fn gray_code(opts: &Options, n: usize, specs: &str) -> CliResult<(CyclicCode, QcCode, QcParameters)> {
    let code = load_code(opts, n, 4, specs)?;
    let qc = QcCode::from_code(&code)?;
    let params = qc.parameters(opts.budget)?;
    Ok((code, qc, params))
}

pub fn gray(opts: &Options, n: usize, specs: &str) -> CliResult {
    let (code, qc, params) = gray_code(opts, n, specs)?;
    say(triple(&params));
    Report {
        json: json!({"code": code_json(opts, &code), "parameters": params_json(&params), "generator_matrix": qc.rows()}),
        header: Vec::new(),
        rows: qc.rows().iter().map(|r| r.iter().map(u8::to_string).collect()).collect(),
    }
    .write(opts)
}

pub fn distance(opts: &Options, n: usize, specs: &str) -> CliResult {
    let (code, _, params) = gray_code(opts, n, specs)?;
    say(triple(&params));
    let d = params.min_lee_distance.map_or("empty".to_string(), |d| d.to_string());
    Report {
        json: json!({"code": code_json(opts, &code), "parameters": params_json(&params)}),
        header: vec!["length", "log2_size", "min_lee_distance"],
        rows: vec![vec![params.length.to_string(), params.log2_size.to_string(), d]],
    }
    .write(opts)
}

pub fn codewords(opts: &Options, n: usize, k: usize, specs: &str) -> CliResult {
    let code = load_code(opts, n, k, specs)?;
    let words = code.codewords(opts.budget)?;
    let cols: Vec<Vec<u8>> = words.iter().map(|w| w.column_major()).collect();
    say(format_args!("{} codewords", words.len()));
    let header: Vec<&'static str> = Vec::new();
    Report {
        json: json!({"code": code_json(opts, &code), "codewords": cols.iter().map(|c| digits(c)).collect::<Vec<_>>()}),
        header,
        rows: cols.iter().map(|c| c.iter().map(u8::to_string).collect()).collect(),
    }
    .write(opts)
}
