//! The subcommands, each producing a [`Report`].

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::str::FromStr;

use clap::ValueEnum;
use crystal::{check_h_admissible, edges_up_to, field_value, h_admissible_expansion, Colouring, Status};
use exactalg::RingElem;
use gqe::{solve, verify_solution, GqeEquation, GqeSolution, SolveOutcome};
use repmod::{
    build_l, decompose_into_irreducibles, freudenthal_char, langlands_dual_char, verify_slf_relations, weyl_dimension, Gen,
};
use rootdata::{all_finite_types, check_lemma_ad, check_lemma_ad0, check_lemma_dominant, langlands_isogeny, named, CartanMatrix, RootDatum};

use crate::config::{parse_colouring, parse_config, parse_weight};
use crate::error::CliError;
use crate::report::{CheckRecord, CheckStatus, Format, Report};
use crate::{acceptance, Cli, Command, LiqAction, DEFAULT_SEED};

/// Flag values with config-file fallbacks.
struct Settings<'a> {
    cli: &'a Cli,
    file: BTreeMap<String, String>,
}

impl Settings<'_> {
    fn file_value<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        match self.file.get(key) {
            None => Ok(None),
            Some(v) => v.parse().map(Some).map_err(|_| CliError::Config { line: 0, msg: format!("bad value '{}' for '{}'", v, key) }),
        }
    }

    /// The flag if given, else the config value, else `default`.
    fn pick<T: FromStr + Clone>(&self, flag: &Option<T>, key: &str, default: T) -> Result<T, CliError> {
        match flag {
            Some(v) => Ok(v.clone()),
            None => Ok(self.file_value(key)?.unwrap_or(default)),
        }
    }

    fn required<T: FromStr + Clone>(&self, flag: &Option<T>, key: &str) -> Result<T, CliError> {
        match flag {
            Some(v) => Ok(v.clone()),
            None => self.file_value(key)?.ok_or_else(|| CliError::Usage(format!("missing --{}", key.replace('_', "-")))),
        }
    }

    fn order(&self, default: usize) -> Result<usize, CliError> {
        let k = self.pick(&self.cli.order, "order", default)?;
        if k == 0 {
            return Err(CliError::Usage("orders must be at least 1".into()));
        }
        Ok(k)
    }

    fn seed(&self) -> Result<u64, CliError> {
        self.pick(&self.cli.seed, "seed", DEFAULT_SEED)
    }

    fn format(&self) -> Result<Format, CliError> {
        if let Some(f) = self.cli.format {
            return Ok(f);
        }
        match self.file.get("format") {
            None => Ok(Format::Text),
            Some(v) => Format::from_str(v, true).map_err(|_| CliError::Config { line: 0, msg: format!("bad format '{}'", v) }),
        }
    }

    /// A colouring from the flag or config key. A value naming an existing
    /// file is read as a config file whose `psi` key holds the colouring.
    fn colouring(&self, flag: &Option<String>, key: &str, default: &str, order: usize) -> Result<Colouring, CliError> {
        let spec = self.pick(flag, key, default.to_string())?;
        if Path::new(&spec).is_file() {
            let text = std::fs::read_to_string(&spec)?;
            let cfg = parse_config(&text)?;
            let inner = cfg.get("psi").ok_or_else(|| CliError::Usage(format!("{} has no 'psi' key", spec)))?;
            return parse_input(parse_colouring(inner, order));
        }
        parse_input(parse_colouring(&spec, order))
    }
}

/// Parse failures in user input are usage errors.
fn parse_input<T>(r: Result<T, CliError>) -> Result<T, CliError> {
    r.map_err(|e| match e {
        CliError::Crystal(c) => CliError::Usage(c.to_string()),
        other => other,
    })
}

/// Runs the command and returns its report with the chosen format.
pub fn execute(cli: &Cli) -> Result<(Report, Format), CliError> {
    let file = match &cli.config {
        Some(p) => parse_config(&std::fs::read_to_string(p)?)?,
        None => BTreeMap::new(),
    };
    let s = Settings { cli, file };
    let format = s.format()?;
    let seed = s.seed()?;
    let report = match &cli.command {
        Command::Solve { psi, psi2, degree } => {
            let order = s.order(6)?;
            let degree = s.pick(degree, "degree", -1)?;
            if degree != -1 && degree != 0 {
                return Err(CliError::Usage(format!("degree must be -1 or 0, got {}", degree)));
            }
            let psi1 = s.colouring(psi, "psi", "classical", order)?;
            let psi2 = match (psi2, s.file.contains_key("psi2"), degree) {
                (None, false, -1) => psi1.clone(),
                _ => s.colouring(psi2, "psi2", "classical", order)?,
            };
            let pmax = s.pick(&cli.pmax, "pmax", 24)?;
            cmd_solve(psi1, psi2, degree, order, pmax, seed)?
        }
        Command::Axioms { psi } => {
            let order = s.order(6)?;
            cmd_axioms(&s.colouring(psi, "psi", "classical", order)?, order, seed)?
        }
        Command::Expand { psi, depth } => {
            let depth = s.pick(depth, "depth", 3)?;
            cmd_expand(&s.colouring(psi, "psi", "classical", 4)?, depth, seed)?
        }
        Command::Rep { psi, n } => {
            let order = s.order(6)?;
            let n = s.pick(n, "n", 2)?;
            cmd_rep(&s.colouring(psi, "psi", "classical", order)?, n, order, seed)?
        }
        Command::Char { cartan, weight } => {
            let (cm, w) = (s.required(cartan, "type")?, s.required(weight, "weight")?);
            cmd_char(&cm, &parse_weight(&w)?, seed)?
        }
        Command::DualChar { cartan, weight } => {
            let (cm, w) = (s.required(cartan, "type")?, s.required(weight, "weight")?);
            cmd_dual_char(&cm, &parse_weight(&w)?, seed)?
        }
        Command::Liq { action: LiqAction::Check { g, n } } => {
            let kh = s.order(4)?;
            let khp = s.pick(&cli.order_hp, "order_hp", kh)?;
            if khp == 0 {
                return Err(CliError::Usage("orders must be at least 1".into()));
            }
            cmd_liq(s.required(g, "g")?, s.required(n, "n")?, kh, khp, seed)?
        }
        Command::Rootcombi { max_rank } => cmd_rootcombi(s.pick(max_rank, "max_rank", 4)?, seed)?,
        Command::VerifyAll => cmd_verify_all(seed)?,
    };
    Ok((report, format))
}

/// `(u, 1, 0, ...)`: the `h^0` part of each entry.
pub fn h_zero_tuple(sol: &GqeSolution) -> String {
    let mut parts: Vec<String> = sol.at_h_zero().iter().map(|p| p.to_string()).collect();
    parts.push("0".into());
    parts.push("...".into());
    format!("({})", parts.join(", "))
}

pub fn cmd_solve(psi1: Colouring, psi2: Colouring, degree: i64, order: usize, pmax: usize, seed: u64) -> Result<Report, CliError> {
    let mut r = Report::new("solve", seed);
    r.line(format!("equation: E({}, {})^{} mod h^{}, pmax {}", psi1.describe(), psi2.describe(), degree, order, pmax));
    let eq = GqeEquation::new(psi1, psi2, degree, order).with_pmax(pmax);
    match solve(&eq) {
        Ok(SolveOutcome::Solved(sol)) => {
            let name = if degree == -1 { "S" } else { "Sbar" };
            r.line(format!("{} = {} at h = 0", name, h_zero_tuple(&sol)));
            r.output.extend(sol.to_string().lines().map(String::from));
            r.check(CheckRecord::pass("solvable"));
            let residual = verify_solution(&eq, &sol)?;
            r.check(CheckRecord::from_bool("residual T(psi1) M = N(psi2)[d]", residual.is_none(), || {
                residual.as_ref().map(|w| w.to_string()).unwrap_or_default()
            }));
        }
        Ok(SolveOutcome::NoSolution(w)) => {
            r.line("no solution");
            let mut c = CheckRecord::fail("solvable", w.to_string());
            c.nonzero_order = Some(w.order);
            r.check(c);
        }
        Err(e) => {
            r.line("inconclusive");
            r.check(CheckRecord::fail("solvable", e.to_string()));
        }
    }
    Ok(r)
}

pub fn cmd_axioms(psi: &Colouring, order: usize, seed: u64) -> Result<Report, CliError> {
    let mut r = Report::new("axioms", seed);
    r.line(format!("colouring: {}", psi.describe()));
    r.line(format!("order: h^{}", order));
    for v in check_h_admissible(psi, order)? {
        let name = format!("{} axiom", v.axiom);
        r.check(match v.status {
            Status::Pass => CheckRecord::pass(name),
            Status::Fail { order, witness } => CheckRecord { nonzero_order: Some(order), ..CheckRecord::fail(name, witness) },
            Status::Undecidable => CheckRecord::fail(name, "undecidable: no closed form"),
        });
    }
    Ok(r)
}

pub fn cmd_expand(psi: &Colouring, depth: usize, seed: u64) -> Result<Report, CliError> {
    let mut r = Report::new("expand", seed);
    r.line(format!("colouring: {}", psi.describe()));
    let e = h_admissible_expansion(psi, depth)?;
    for (m, (pm, pp)) in e.minus.iter().zip(&e.plus).enumerate() {
        r.line(format!("P-_{} = {}", m, pm));
        r.line(format!("P+_{} = {}", m, pp));
    }
    let mut bad = None;
    for edge in edges_up_to(depth as i64) {
        if e.at_h_one(edge.sign, edge.n, edge.k) != field_value(psi, edge.sign, edge.n, edge.k)? {
            bad = Some(edge);
            break;
        }
    }
    r.check(CheckRecord::from_bool(format!("reconstruction at h = 1 on edges n <= {}", depth), bad.is_none(), || {
        bad.map(|e| format!("{:?}", e)).unwrap_or_default()
    }));
    let verdicts = check_h_admissible(&e.colouring(), depth + 1)?;
    let failed: Vec<String> = verdicts.iter().filter(|v| !v.passed()).map(|v| v.axiom.to_string()).collect();
    r.check(CheckRecord::from_bool("expansion is h-admissible", failed.is_empty(), || failed.join(", ")));
    Ok(r)
}

pub fn cmd_rep(psi: &Colouring, n: usize, order: usize, seed: u64) -> Result<Report, CliError> {
    let mut r = Report::new("rep", seed);
    r.line(format!("module: L({}, {}) mod h^{}", n, psi.describe(), order));
    let m = build_l(n, psi, order)?;
    let labels = m.labels();
    for (i, l) in labels.iter().enumerate() {
        r.line(format!("{} weight {:?}", l, m.weights()[i]));
    }
    for g in [Gen::Raise(0), Gen::Lower(0)] {
        let op = m.op(g);
        for ((row, col), a) in op.entries() {
            r.line(format!("{} {} = ({}) {}", g, labels[*col], a, labels[*row]));
        }
    }
    for c in verify_slf_relations(&m).checks {
        r.check(CheckRecord::from_bool(c.name, c.passed, || c.witness.unwrap_or_default()));
    }
    let ef = m.op(Gen::Raise(0)).mul(&m.op(Gen::Lower(0)));
    let mut bad = ef.entries().find(|((row, col), a)| row != col && !a.is_zero_elem()).map(|((_, col), _)| labels[*col].clone());
    for j in 0..=n {
        let k = j as i64 + 1;
        let want = if j < n { psi.congruence(n as i64, k, order)? } else { exactalg::Series::zero(order) };
        let got = ef.get(j, j).cloned().unwrap_or_else(|| exactalg::Series::zero(order));
        if bad.is_none() && got != want {
            bad = Some(labels[j].clone());
        }
    }
    r.check(CheckRecord::from_bool("X+ X- acts by the congruence values", bad.is_none(), || bad.unwrap_or_default()));
    Ok(r)
}

fn datum(cartan: &str) -> Result<RootDatum, CliError> {
    let cm = named(cartan).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(RootDatum::simply_connected(cm)?)
}

fn check_rank(w: &[i64], rank: usize) -> Result<(), CliError> {
    if w.len() != rank {
        return Err(CliError::Usage(format!("weight has {} coordinates, rank is {}", w.len(), rank)));
    }
    Ok(())
}

pub fn cmd_char(cartan: &str, weight: &[i64], seed: u64) -> Result<Report, CliError> {
    let d = datum(cartan)?;
    check_rank(weight, d.lattice_rank())?;
    if !d.is_dominant(weight) {
        return Err(CliError::Usage(format!("weight {:?} is not dominant", weight)));
    }
    let mut r = Report::new("char", seed);
    let chi = freudenthal_char(&d, weight)?;
    r.line(format!("L({:?}) for {}: dimension {}", weight, cartan, chi.dim()));
    let csv = chi.to_csv(&d);
    r.output.extend(csv.lines().map(String::from));
    let w = weyl_dimension(&d, weight)?;
    r.check(CheckRecord::from_bool("Freudenthal total = Weyl dimension", w == exactalg::ri(chi.dim() as i64), || {
        format!("{} vs {}", chi.dim(), w)
    }));
    r.csv = Some(csv);
    Ok(r)
}

pub fn cmd_dual_char(cartan: &str, weight: &[i64], seed: u64) -> Result<Report, CliError> {
    let cm = named(cartan).map_err(|e| CliError::Usage(e.to_string()))?;
    let xi = langlands_isogeny(&cm)?;
    check_rank(weight, xi.target().lattice_rank())?;
    if !xi.target().is_dominant(weight) {
        return Err(CliError::Usage(format!("weight {:?} is not dominant", weight)));
    }
    let mut r = Report::new("dual-char", seed);
    let chi = freudenthal_char(xi.target(), weight)?;
    let dual = langlands_dual_char(&chi, &xi);
    r.line(format!("L({:?}) for {}: dual character of dimension {}", weight, cartan, dual.dim()));
    let parts = decompose_into_irreducibles(&dual, xi.source())?;
    for (mu, c) in &parts {
        r.line(format!("L^({:?}) x {}", mu, c));
    }
    let negative: Vec<String> = parts.iter().filter(|(_, c)| **c < 0).map(|(m, c)| format!("{:?}: {}", m, c)).collect();
    r.check(CheckRecord::from_bool("nonnegative integer coefficients", negative.is_empty(), || negative.join(", ")));
    match xi.preimage(weight) {
        Some(mu) => {
            let c = parts.get(&mu).copied().unwrap_or(0);
            r.check(CheckRecord::from_bool(format!("contains the dual irreducible {:?}", mu), c >= 1, || {
                format!("coefficient {}", c)
            }));
        }
        None => r.check(CheckRecord {
            status: CheckStatus::Info,
            ..CheckRecord::pass("weight is outside the dual-embedded lattice")
        }),
    }
    r.csv = Some(dual.to_csv(xi.source()));
    Ok(r)
}

pub fn cmd_liq(g: u32, n: i64, kh: usize, khp: usize, seed: u64) -> Result<Report, CliError> {
    if g == 0 || n < 0 || n % g as i64 != 0 {
        return Err(CliError::Usage(format!("need g >= 1, n >= 0 and g | n, got g = {}, n = {}", g, n)));
    }
    let suite = langint::liq_suite(g, n, kh, khp)?;
    let mut r = Report::new("liq check", seed);
    r.line(format!("g = {}, n = {}, mod h^{} h'^{}", g, n, kh, khp));
    for c in &suite.checks {
        r.check(CheckRecord::from_identity(c, false));
    }
    for c in &suite.informational {
        r.check(CheckRecord::from_identity(c, true));
    }
    Ok(r)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every finite-type Cartan matrix of rank 2 to `max_rank`, under every
/// relabelling of the simple roots, without repeats. The lemmas need two
/// simple roots.
pub fn relabelled_finite_types(max_rank: usize) -> Vec<(String, CartanMatrix)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (name, cm) in all_finite_types(max_rank).into_iter().filter(|(_, c)| c.rank() >= 2) {
        for p in permutations(cm.rank()) {
            let q = cm.permuted(&p);
            if seen.insert(q.rows().to_vec()) {
                out.push((name.clone(), q));
            }
        }
    }
    out
}

pub fn cmd_rootcombi(max_rank: usize, seed: u64) -> Result<Report, CliError> {
    if max_rank < 2 {
        return Err(CliError::Usage("max rank must be at least 2".into()));
    }
    let all = relabelled_finite_types(max_rank);
    let mut r = Report::new("rootcombi", seed);
    r.line(format!("{} Cartan matrices of finite type and rank 2 to {}", all.len(), max_rank));
    let mut totals: BTreeMap<&'static str, (usize, Option<String>)> = BTreeMap::new();
    for (name, cm) in &all {
        for rep in [check_lemma_dominant(cm)?, check_lemma_ad(cm)?, check_lemma_ad0(cm)] {
            let t = totals.entry(rep.name).or_default();
            t.0 += rep.checked;
            if t.1.is_none() {
                t.1 = rep.counterexample.map(|c| format!("{} {:?}: {}", name, cm.rows(), c));
            }
        }
    }
    for (name, (checked, counter)) in totals {
        r.line(format!("{}: {} membership tests", name, checked));
        r.check(CheckRecord::from_bool(name, counter.is_none(), || counter.unwrap_or_default()));
    }
    Ok(r)
}

pub fn cmd_verify_all(seed: u64) -> Result<Report, CliError> {
    Ok(verify_all_report(&acceptance::run_all(seed)?, seed))
}

/// The `verify-all` report for already computed criteria.
pub fn verify_all_report(criteria: &[acceptance::Criterion], seed: u64) -> Report {
    let mut r = Report::new("verify-all", seed);
    for c in criteria {
        for d in &c.detail {
            r.line(format!("criterion {}: {}", c.id, d));
        }
        r.check(CheckRecord::from_bool(format!("criterion {}: {}", c.id, c.title), c.passed(), || c.failures.join("; ")));
    }
    r
}
