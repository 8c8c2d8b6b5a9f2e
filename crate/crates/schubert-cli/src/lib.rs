//! Report assembly and rendering for the `schubert` command-line tool.
//!
//! Every stdout format (human table, `--json`, `--csv`) is byte-deterministic
//! for fixed flags: fixed orderings everywhere and no timestamps or durations
//! in the data sections. Timings are collected but only surfaced on stderr
//! when `SCHUBERT_LOG` is set.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use schubert::bruhat::{CosetElement, GrassmannShape};
use schubert::goodsets::{
    count_good_multisets, max_uniset_cardinality, multiplicity, HilbertRecursion,
};
use schubert::groebner::buchberger_is_groebner;
use schubert::ideals::{jw_generators, monomial_quotient_hilbert, squarefree_quotient_degree};
use schubert::plucker::ideal_generators;
use schubert::standard_monomials::StandardMonomialCounter;
use schubert::tangent_cone::{
    check_conjectures, ConjectureReport, OracleLimits, PointedSchubertDatum,
};

/// Fatal CLI conditions mapped to exit codes: invalid input exits 3, resource
/// limits exit 4. Method disagreement is not an error (the report carries it)
/// but makes the process exit 2.
#[derive(Debug)]
pub enum CliError {
    InvalidInput(String),
    ResourceLimit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidInput(_) => 3,
            CliError::ResourceLimit(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::InvalidInput(m) | CliError::ResourceLimit(m) => m,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Exit codes shared by `main`: agreement failures.
pub const EXIT_DISAGREE: i32 = 2;

/// Caps set by `--max-degree` and `--max-lattice`.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_degree: usize,
    pub max_lattice: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 12,
            max_lattice: 400,
        }
    }
}

/// Variables cap under which the square-free cross-check of `mult` still
/// enumerates subsets.
pub const CROSSCHECK_MAX_VARIABLES: usize = 20;

pub fn parse_shape(d: usize, n: usize) -> CliResult<GrassmannShape> {
    GrassmannShape::new(d, n).map_err(|e| CliError::InvalidInput(e.to_string()))
}

/// Parses "2,4" into a validated element.
pub fn parse_element(shape: GrassmannShape, text: &str) -> CliResult<CosetElement> {
    let entries: Result<Vec<usize>, _> =
        text.split(',').map(|p| p.trim().parse::<usize>()).collect();
    let entries = entries.map_err(|_| {
        CliError::InvalidInput(format!("cannot parse '{text}' as a comma-separated tuple"))
    })?;
    CosetElement::new(shape, entries).map_err(|e| CliError::InvalidInput(e.to_string()))
}

fn check_lattice(shape: GrassmannShape, limits: &Limits) -> CliResult<()> {
    let count = shape.element_count();
    if count > limits.max_lattice {
        return Err(CliError::ResourceLimit(format!(
            "|I({},{})| = {count} exceeds --max-lattice {}",
            shape.d(),
            shape.n(),
            limits.max_lattice
        )));
    }
    Ok(())
}

/// Order-preserving parallel map with a fixed worker count.
pub fn par_map<T, R, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync,
{
    let jobs = jobs.max(1);
    if jobs == 1 || items.len() <= 1 {
        return items.into_iter().map(f).collect();
    }
    let mut slots: Vec<Option<R>> = Vec::with_capacity(items.len());
    slots.resize_with(items.len(), || None);
    let work: Vec<(usize, T)> = items.into_iter().enumerate().collect();
    let queue = std::sync::Mutex::new(work);
    {
        let slots_ref = std::sync::Mutex::new(&mut slots);
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let item = queue.lock().unwrap().pop();
                    match item {
                        Some((idx, value)) => {
                            let result = f(value);
                            slots_ref.lock().unwrap()[idx] = Some(result);
                        }
                        None => break,
                    }
                });
            }
        });
    }
    slots.into_iter().map(|s| s.unwrap()).collect()
}

// ---------------------------------------------------------------------------
// hilbert

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Multiset,
    StandardMonomial,
    InitialIdeal,
    Recursion,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Multiset,
        Method::StandardMonomial,
        Method::InitialIdeal,
        Method::Recursion,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Multiset => "multiset",
            Method::StandardMonomial => "standard-monomial",
            Method::InitialIdeal => "initial-ideal",
            Method::Recursion => "recursion",
        }
    }

    pub fn parse_list(text: &str) -> CliResult<Vec<Method>> {
        let mut out = Vec::new();
        for part in text.split(',') {
            let m = match part.trim() {
                "multiset" => Method::Multiset,
                "standard-monomial" => Method::StandardMonomial,
                "initial-ideal" => Method::InitialIdeal,
                "recursion" => Method::Recursion,
                other => {
                    return Err(CliError::InvalidInput(format!(
                        "unknown method '{other}' (expected multiset, standard-monomial, initial-ideal, recursion)"
                    )))
                }
            };
            if !out.contains(&m) {
                out.push(m);
            }
        }
        if out.is_empty() {
            return Err(CliError::InvalidInput("no methods selected".into()));
        }
        Ok(out)
    }
}

pub struct MethodColumn {
    pub method: Method,
    pub values: Vec<BigInt>,
    pub elapsed: Duration,
}

pub struct HilbertReport {
    pub w: CosetElement,
    pub m_max: usize,
    pub columns: Vec<MethodColumn>,
    pub agree: bool,
}

pub fn compute_hilbert(
    w: &CosetElement,
    m_max: usize,
    methods: &[Method],
    limits: &Limits,
    jobs: usize,
) -> CliResult<HilbertReport> {
    if m_max > limits.max_degree {
        return Err(CliError::ResourceLimit(format!(
            "m_max {m_max} exceeds --max-degree {}",
            limits.max_degree
        )));
    }
    check_lattice(w.shape(), limits)?;
    let columns = par_map(methods.to_vec(), jobs, |method| {
        let start = Instant::now();
        let values: Vec<BigInt> = match method {
            Method::Multiset => (0..=m_max).map(|m| count_good_multisets(w, m)).collect(),
            Method::StandardMonomial => {
                let mut counter = StandardMonomialCounter::new(w.shape());
                (0..=m_max).map(|m| counter.count(w, m)).collect()
            }
            Method::InitialIdeal => {
                let ideal = jw_generators(w);
                (0..=m_max)
                    .map(|m| monomial_quotient_hilbert(&ideal, m))
                    .collect()
            }
            Method::Recursion => {
                let mut rec = HilbertRecursion::new();
                (0..=m_max).map(|m| rec.eval(w, m)).collect()
            }
        };
        MethodColumn {
            method,
            values,
            elapsed: start.elapsed(),
        }
    });
    let agree = columns
        .windows(2)
        .all(|pair| pair[0].values == pair[1].values);
    Ok(HilbertReport {
        w: w.clone(),
        m_max,
        columns,
        agree,
    })
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

impl HilbertReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let shape = self.w.shape();
        writeln!(out, "{shape}  w={}", self.w).unwrap();
        let headers: Vec<String> = self
            .columns
            .iter()
            .map(|c| c.method.name().to_string())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .zip(&headers)
            .map(|(c, h)| {
                c.values
                    .iter()
                    .map(|v| v.to_string().len())
                    .chain([h.len()])
                    .max()
                    .unwrap()
            })
            .collect();
        write!(out, "{:>6}", "degree").unwrap();
        for (h, w) in headers.iter().zip(&widths) {
            write!(out, "  {h:>w$}").unwrap();
        }
        writeln!(out).unwrap();
        for m in 0..=self.m_max {
            write!(out, "{m:>6}").unwrap();
            for (c, w) in self.columns.iter().zip(&widths) {
                write!(out, "  {:>w$}", c.values[m].to_string()).unwrap();
            }
            writeln!(out).unwrap();
        }
        writeln!(out, "agree: {}", yes_no(self.agree)).unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        let shape = self.w.shape();
        let mut methods = serde_json::Map::new();
        for c in &self.columns {
            methods.insert(
                c.method.name().to_string(),
                serde_json::Value::Array(c.values.iter().map(json_int).collect()),
            );
        }
        let value = serde_json::json!({
            "shape": {"d": shape.d(), "n": shape.n()},
            "w": self.w.entries(),
            "m_max": self.m_max,
            "methods": methods,
            "agree": self.agree,
        });
        format!("{value}\n")
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("degree");
        for c in &self.columns {
            write!(out, ",{}", c.method.name()).unwrap();
        }
        out.push('\n');
        for m in 0..=self.m_max {
            write!(out, "{m}").unwrap();
            for c in &self.columns {
                write!(out, ",{}", c.values[m]).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn timing_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.columns {
            writeln!(out, "timing {}: {:?}", c.method.name(), c.elapsed).unwrap();
        }
        out
    }
}

/// Arbitrary-precision integers as JSON numbers.
fn json_int(v: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(
        serde_json::Number::from_str(&v.to_string()).expect("decimal integer"),
    )
}

// ---------------------------------------------------------------------------
// mult

pub enum CrossCheck {
    Ran {
        degree: usize,
        count: BigInt,
        agrees: bool,
    },
    Skipped(String),
}

pub struct MultReport {
    pub w: CosetElement,
    pub degree_w: usize,
    pub max_cardinality: usize,
    pub multiplicity: BigInt,
    pub crosscheck: CrossCheck,
}

impl MultReport {
    pub fn agrees(&self) -> bool {
        !matches!(self.crosscheck, CrossCheck::Ran { agrees: false, .. })
    }
}

pub fn compute_mult(w: &CosetElement, limits: &Limits) -> CliResult<MultReport> {
    let shape = w.shape();
    let top = max_uniset_cardinality(w);
    let mult = multiplicity(w);
    let crosscheck = if shape.num_variables() > CROSSCHECK_MAX_VARIABLES {
        CrossCheck::Skipped(format!(
            "{} variables exceed the cross-check limit of {CROSSCHECK_MAX_VARIABLES}",
            shape.num_variables()
        ))
    } else if shape.element_count() > limits.max_lattice {
        CrossCheck::Skipped(format!(
            "|I({},{})| = {} exceeds --max-lattice {}",
            shape.d(),
            shape.n(),
            shape.element_count(),
            limits.max_lattice
        ))
    } else {
        let (degree, count) = squarefree_quotient_degree(&jw_generators(w))
            .map_err(|e| CliError::InvalidInput(e.to_string()))?;
        let agrees = degree == top && count == mult;
        CrossCheck::Ran {
            degree,
            count,
            agrees,
        }
    };
    Ok(MultReport {
        w: w.clone(),
        degree_w: w.degree(),
        max_cardinality: top,
        multiplicity: mult,
        crosscheck,
    })
}

impl MultReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}  w={}", self.w.shape(), self.w).unwrap();
        writeln!(out, "d_w: {}", self.degree_w).unwrap();
        writeln!(out, "M: {}", self.max_cardinality).unwrap();
        writeln!(out, "multiplicity: {}", self.multiplicity).unwrap();
        match &self.crosscheck {
            CrossCheck::Ran {
                degree,
                count,
                agrees,
            } => writeln!(
                out,
                "square-free quotient check: M={degree} count={count} ({})",
                if *agrees { "agrees" } else { "DISAGREES" }
            )
            .unwrap(),
            CrossCheck::Skipped(reason) => {
                writeln!(out, "square-free quotient check: skipped ({reason})").unwrap()
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        let shape = self.w.shape();
        let crosscheck = match &self.crosscheck {
            CrossCheck::Ran {
                degree,
                count,
                agrees,
            } => serde_json::json!({"M": degree, "count": json_int(count), "agrees": agrees}),
            CrossCheck::Skipped(reason) => serde_json::json!({"skipped": reason}),
        };
        let value = serde_json::json!({
            "shape": {"d": shape.d(), "n": shape.n()},
            "w": self.w.entries(),
            "d_w": self.degree_w,
            "M": self.max_cardinality,
            "multiplicity": json_int(&self.multiplicity),
            "crosscheck": crosscheck,
        });
        format!("{value}\n")
    }

    pub fn render_csv(&self) -> String {
        let entries: Vec<String> = self.w.entries().iter().map(|e| e.to_string()).collect();
        let crosscheck = match &self.crosscheck {
            CrossCheck::Ran { agrees, .. } => yes_no(*agrees).to_string(),
            CrossCheck::Skipped(_) => "skipped".to_string(),
        };
        format!(
            "d,n,w,d_w,M,multiplicity,crosscheck\n{},{},\"{}\",{},{},{},{}\n",
            self.w.shape().d(),
            self.w.shape().n(),
            entries.join(","),
            self.degree_w,
            self.max_cardinality,
            self.multiplicity,
            crosscheck
        )
    }
}

// ---------------------------------------------------------------------------
// groebner-check

pub struct GroebnerReport {
    pub shape: GrassmannShape,
    pub rows: Vec<(CosetElement, bool)>,
}

impl GroebnerReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|(_, ok)| *ok).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.rows.len()
    }
}

pub fn compute_groebner(
    shape: GrassmannShape,
    target: Option<CosetElement>,
    limits: &Limits,
    jobs: usize,
) -> CliResult<GroebnerReport> {
    check_lattice(shape, limits)?;
    let targets = match target {
        Some(w) => vec![w],
        None => shape.elements(),
    };
    let rows = par_map(targets, jobs, |w| {
        let ok = buchberger_is_groebner(&ideal_generators(&w));
        (w, ok)
    });
    Ok(GroebnerReport { shape, rows })
}

impl GroebnerReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.shape).unwrap();
        for (w, ok) in &self.rows {
            writeln!(out, "w={w}: {}", if *ok { "pass" } else { "FAIL" }).unwrap();
        }
        writeln!(out, "{}/{} pass", self.passed(), self.rows.len()).unwrap();
        out
    }

    pub fn render_json(&self) -> String {
        let results: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|(w, ok)| serde_json::json!({"w": w.entries(), "pass": ok}))
            .collect();
        let value = serde_json::json!({
            "shape": {"d": self.shape.d(), "n": self.shape.n()},
            "results": results,
            "passed": self.passed(),
            "total": self.rows.len(),
        });
        format!("{value}\n")
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("w,pass\n");
        for (w, ok) in &self.rows {
            let entries: Vec<String> = w.entries().iter().map(|e| e.to_string()).collect();
            writeln!(out, "\"{}\",{}", entries.join(","), yes_no(*ok)).unwrap();
        }
        out
    }
}

// ---------------------------------------------------------------------------
// conjecture

pub struct ConjectureBatch {
    pub reports: Vec<ConjectureReport>,
}

impl ConjectureBatch {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.reports.len()
    }
}

pub fn compute_conjectures(
    shape: GrassmannShape,
    pair: Option<(CosetElement, CosetElement)>,
    j_max: usize,
    limits: &Limits,
    jobs: usize,
) -> CliResult<ConjectureBatch> {
    if j_max > limits.max_degree {
        return Err(CliError::ResourceLimit(format!(
            "j_max {j_max} exceeds --max-degree {}",
            limits.max_degree
        )));
    }
    let oracle_limits = OracleLimits {
        max_truncation: limits.max_degree,
        max_variables: 12,
    };
    let data: Vec<PointedSchubertDatum> = match pair {
        Some((w, tau)) => {
            vec![PointedSchubertDatum::new(w, tau)
                .map_err(|e| CliError::InvalidInput(e.to_string()))?]
        }
        None => {
            check_lattice(shape, limits)?;
            let elements = shape.elements();
            let mut out = Vec::new();
            for w in &elements {
                for tau in &elements {
                    if tau.leq(w) {
                        out.push(PointedSchubertDatum::new(w.clone(), tau.clone()).unwrap());
                    }
                }
            }
            out
        }
    };
    let results = par_map(data, jobs, |datum| {
        check_conjectures(&datum, j_max, &oracle_limits)
    });
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        reports.push(r.map_err(|e| CliError::ResourceLimit(e.to_string()))?);
    }
    Ok(ConjectureBatch { reports })
}

impl ConjectureBatch {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        for (k, r) in self.reports.iter().enumerate() {
            if k > 0 {
                writeln!(out).unwrap();
            }
            writeln!(out, "{}  w={}  tau={}", r.w.shape(), r.w, r.tau).unwrap();
            let width = r
                .degrees
                .iter()
                .map(|d| d.predicted.to_string().len())
                .chain(["predicted".len()])
                .max()
                .unwrap();
            writeln!(
                out,
                "{:>6}  {:>width$}  {:>12}  {:>5}",
                "degree", "predicted", "tangent-cone", "equal"
            )
            .unwrap();
            for d in &r.degrees {
                writeln!(
                    out,
                    "{:>6}  {:>width$}  {:>12}  {:>5}",
                    d.degree,
                    d.predicted.to_string(),
                    d.oracle,
                    yes_no(d.matches)
                )
                .unwrap();
            }
            match (&r.oracle_multiplicity, &r.multiplicity_matches) {
                (Some(om), Some(eq)) => writeln!(
                    out,
                    "multiplicity: predicted={} oracle={om} equal={}",
                    r.predicted_multiplicity,
                    yes_no(*eq)
                )
                .unwrap(),
                _ => writeln!(
                    out,
                    "multiplicity: predicted={} oracle=indeterminate at this truncation",
                    r.predicted_multiplicity
                )
                .unwrap(),
            }
            writeln!(out, "result: {}", if r.pass { "PASS" } else { "FAIL" }).unwrap();
        }
        if self.reports.len() > 1 {
            writeln!(
                out,
                "\npairs: {}/{} pass",
                self.passed(),
                self.reports.len()
            )
            .unwrap();
        }
        out
    }

    pub fn render_json(&self) -> String {
        let pairs: Vec<serde_json::Value> = self
            .reports
            .iter()
            .map(|r| {
                let degrees: Vec<serde_json::Value> = r
                    .degrees
                    .iter()
                    .map(|d| {
                        serde_json::json!({
                            "degree": d.degree,
                            "predicted": json_int(&d.predicted),
                            "oracle": d.oracle,
                            "equal": d.matches,
                        })
                    })
                    .collect();
                serde_json::json!({
                    "w": r.w.entries(),
                    "tau": r.tau.entries(),
                    "degrees": degrees,
                    "multiplicity": {
                        "predicted": json_int(&r.predicted_multiplicity),
                        "oracle": r.oracle_multiplicity.as_ref().map(json_int),
                        "equal": r.multiplicity_matches,
                    },
                    "pass": r.pass,
                })
            })
            .collect();
        let shape = self.reports[0].w.shape();
        let value = serde_json::json!({
            "shape": {"d": shape.d(), "n": shape.n()},
            "pairs": pairs,
            "passed": self.passed(),
            "total": self.reports.len(),
        });
        format!("{value}\n")
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("w,tau,degree,predicted,oracle,equal\n");
        for r in &self.reports {
            let w: Vec<String> = r.w.entries().iter().map(|e| e.to_string()).collect();
            let tau: Vec<String> = r.tau.entries().iter().map(|e| e.to_string()).collect();
            for d in &r.degrees {
                writeln!(
                    out,
                    "\"{}\",\"{}\",{},{},{},{}",
                    w.join(","),
                    tau.join(","),
                    d.degree,
                    d.predicted,
                    d.oracle,
                    yes_no(d.matches)
                )
                .unwrap();
            }
        }
        out
    }
}
