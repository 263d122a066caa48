use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Read;
use std::ops::RangeInclusive;

use galileo_core::analysis::{classify_polynomial, growth_bounds_check, scale_invariance_check};
use galileo_core::analysis::{GrowthOptions, LowerTermConstant, MonomialResult, PolynomialExact};
use galileo_core::bfile::{
    parse_rational, read_factor_table, read_prefix, read_terms, records, write_factor_table, write_prefix,
};
use galileo_core::continuous::{
    verify_integral_relation, verify_pointwise_identity, GalileoFunctionSpec, Profile, Verdict,
};
use galileo_core::generators::{
    equal_split, from_splitting, odd_number_split, poly_family, tattersall, unit_left_split, PolyFamilyParams,
    TattersallParams,
};
use galileo_core::search::{enumerate_monotone, extinction_depth_with, SearchSpec};
use galileo_core::tree::{extract_factors, path_to, product_form, Move, SplittingFactors};
use galileo_core::{check_global, check_local, Rational, SequencePrefix, VerificationReport};
use galileo_oeis::{Cache, Client, MatchOptions, Mode, OeisId, Source};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::args::{Budget, Cli, Command, Continuous, Generate, Oeis, Remote, Rule};
use crate::error::{exit, CliError, Result};
use crate::output::{render, Format, Record};

/// What a successful run prints and how it exits.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    /// Diagnostics for standard error.
    pub notes: Vec<String>,
    pub code: u8,
}

impl Outcome {
    fn text(stdout: String) -> Self {
        Self {
            stdout,
            ..Self::default()
        }
    }

    fn negative_unless(mut self, ok: bool) -> Self {
        if !ok {
            self.code = exit::NEGATIVE;
        }
        self
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Generate(g) => generate(g).map(|p| Outcome::text(write_prefix(&p))),
        Command::Verify { input, k } => verify(input, k, fmt),
        Command::Factors { input, k } => {
            let prefix = load_prefix(input, k)?;
            let factors = extract_factors(&prefix)?;
            Ok(Outcome::text(write_factor_table(factors.pairs())))
        }
        Command::Path { n } => {
            let path = path_to(*n)?;
            let moves: String = path
                .moves()
                .iter()
                .map(|m| if *m == Move::Left { 'L' } else { 'R' })
                .collect();
            let nodes: Vec<String> = path.nodes().iter().map(u64::to_string).collect();
            let rec = Record::new()
                .field("n", n)
                .field("depth", path.len())
                .field("moves", moves)
                .field("nodes", nodes.join(","));
            Ok(Outcome::text(render(&[rec], fmt)))
        }
        Command::Product { n, factors_file, a1, k } => {
            let table = read_factor_table(&read_input(factors_file)?)?;
            let k = match k {
                Some(k) => rational("--k", k)?,
                None => {
                    let (b, c) = table
                        .values()
                        .next()
                        .ok_or_else(|| CliError::Usage("factor file is empty; pass --k".into()))?;
                    b + c
                }
            };
            let a1 = rational("--a1", a1)?;
            let factors = SplittingFactors::new(k.clone(), table)?;
            let value = product_form(*n, &a1, &k, &factors)?;
            let rec = Record::new()
                .field("n", n)
                .field("k", &k)
                .field("a1", &a1)
                .field("value", value);
            Ok(Outcome::text(render(&[rec], fmt)))
        }
        Command::Classify { coeffs, k } => classify(coeffs, k, fmt),
        Command::Growth {
            input,
            k,
            precision,
            per_index,
        } => growth(input, k, *precision, *per_index, fmt),
        Command::Search {
            k,
            a1,
            length,
            max_survivors,
            cap,
            budget,
        } => search(*k, *a1, *length, *max_survivors, *cap, budget, fmt),
        Command::Extinction {
            k,
            a1_max,
            length_max,
            budget,
        } => {
            let limit = budget.limit();
            let rows = extinction_depth_with(*k, *a1_max, *length_max, |s| s.with_node_budget(limit))?;
            let recs: Vec<Record> = rows
                .iter()
                .map(|r| {
                    Record::new()
                        .field("a1", r.a1)
                        .field("extinction_depth", depth_label(r.depth, r.complete))
                        .field("complete", r.complete)
                })
                .collect();
            Ok(Outcome::text(render(&recs, fmt)))
        }
        Command::Continuous(Continuous::Verify {
            a,
            b,
            profile,
            x,
            tol,
            pointwise_tol,
        }) => continuous(a, b, profile, x, *tol, *pointwise_tol, fmt),
        Command::Oeis(Oeis::Fetch { id, remote }) => {
            let id: OeisId = id.parse()?;
            let (entry, source) = client(remote).fetch_with_source(id)?;
            let mut out = Outcome::text(entry.to_bfile());
            out.notes.push(format!(
                "{id}: {} terms from {}",
                entry.terms.len(),
                source_label(source)
            ));
            Ok(out)
        }
        Command::Oeis(Oeis::Match {
            input,
            candidates,
            shifts,
            scalars,
            min_length,
            remote,
        }) => oeis_match(input, candidates, shifts, scalars, *min_length, remote, fmt),
    }
}

pub fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|source| CliError::Read {
        path: path.to_string(),
        source,
    })?;
    Ok(text)
}

fn rational(flag: &str, s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| CliError::Usage(format!("{flag}: `{s}` is not an exact rational")))
}

/// A float, or an exact rational such as `1/2`.
fn real(flag: &str, s: &str) -> Result<f64> {
    let s = s.trim();
    s.parse::<f64>()
        .ok()
        .or_else(|| parse_rational(s).and_then(|r| r.to_f64()))
        .ok_or_else(|| CliError::Usage(format!("{flag}: `{s}` is not a number")))
}

fn reals(flag: &str, s: &str) -> Result<Vec<f64>> {
    s.split(',').map(|v| real(flag, v)).collect()
}

fn load_prefix(input: &str, k: &str) -> Result<SequencePrefix> {
    let k = rational("--k", k)?;
    Ok(read_prefix(&read_input(input)?, k)?)
}

fn generate(g: &Generate) -> Result<SequencePrefix> {
    Ok(match g {
        Generate::Poly { c, d, n } => poly_family(&PolyFamilyParams::new(rational("--C", c)?, *d)?, *n)?,
        Generate::Tattersall { k, n } => tattersall(TattersallParams::new(*k)?, *n)?,
        Generate::Tree {
            k,
            a1,
            rule,
            factors_file,
            n,
        } => {
            let k = rational("--k", k)?;
            let a1 = rational("--a1", a1)?;
            match rule {
                Rule::Equal => from_splitting(a1, k.clone(), equal_split(k), *n)?,
                Rule::Unequal => from_splitting(a1, k.clone(), unit_left_split(k), *n)?,
                Rule::Odd => from_splitting(a1, k, odd_number_split, *n)?,
                Rule::File => {
                    let path = factors_file
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("--rule file needs --factors-file".into()))?;
                    let table = read_factor_table(&read_input(path)?)?;
                    tree_from_table(a1, k, &table, *n)?
                }
            }
        }
    })
}

fn tree_from_table(
    a1: Rational,
    k: Rational,
    table: &BTreeMap<u64, (Rational, Rational)>,
    n: usize,
) -> Result<SequencePrefix> {
    // nodes 2..=ceil(n / 2) are consulted; report the first gap up front
    let last = (n as u64).div_ceil(2);
    if let Some(node) = (2..=last).find(|m| !table.contains_key(m)) {
        return Err(galileo_core::Error::MissingFactor { node }.into());
    }
    Ok(from_splitting(a1, k, |m| table[&m].clone(), n)?)
}

fn relation_record(r: &VerificationReport) -> Record {
    let first = r.first_failure();
    Record::new()
        .field("relation", r.relation)
        .field("status", if r.passed() { "pass" } else { "fail" })
        .field("checked", r.verified_up_to)
        .field("failures", r.failures.len())
        .field(
            "first_failure",
            first.map_or("none".to_string(), |f| f.index.to_string()),
        )
        .field("residual", first.map_or("0".to_string(), |f| f.residual.to_string()))
}

fn verify(input: &str, k: &str, fmt: Format) -> Result<Outcome> {
    let prefix = load_prefix(input, k)?;
    let global = check_global(&prefix);
    let local = check_local(&prefix);
    let ok = global.passed() && local.passed();
    Ok(Outcome::text(render(&[relation_record(&global), relation_record(&local)], fmt)).negative_unless(ok))
}

fn classify(coeffs: &str, k: &str, fmt: Format) -> Result<Outcome> {
    let cs = coeffs
        .split(',')
        .map(|c| rational("--coeffs", c))
        .collect::<Result<Vec<_>>>()?;
    let p = PolynomialExact::new(cs);
    let k = rational("--k", k)?;
    let verdict = classify_polynomial(&p, &k)?;
    let rec = Record::new().field("polynomial", &p).field("k", &k);
    let (rec, ok) = match verdict {
        MonomialResult::Monomial { c, d } => (rec.field("verdict", "galileo").field("C", c).field("d", d), true),
        MonomialResult::NotEigenfunction { degree } => (
            rec.field("verdict", "not-galileo").field("witness_degree", degree),
            false,
        ),
        MonomialResult::Zero => (rec.field("verdict", "not-galileo"), false),
    };
    Ok(Outcome::text(render(&[rec], fmt)).negative_unless(ok))
}

fn growth(input: &str, k: &str, precision: u32, per_index: bool, fmt: Format) -> Result<Outcome> {
    let prefix = load_prefix(input, k)?;
    let report = growth_bounds_check(&prefix, GrowthOptions::with_precision(precision))?;
    let scale = scale_invariance_check(&prefix);
    use galileo_core::analysis::BoundStatus::*;
    let mut recs = vec![Record::new()
        .field("k", &report.k)
        .field("exponent", report.exponent)
        .field("C1", &report.c1)
        .field("C2", &report.c2)
        .field("D1", &report.d1)
        .field(
            "D1_choice",
            match report.d1_choice {
                LowerTermConstant::Proof => "proof",
                LowerTermConstant::FirstTerm => "first-term",
            },
        )
        .field("D2", &report.d2)
        .field("indices", report.records.len())
        .field("holds", report.count(Holds))
        .field("violated", report.count(Violated))
        .field("indeterminate", report.count(Indeterminate))
        .field("scale_invariance", if scale.passed() { "pass" } else { "fail" })
        .field("precision_bits", report.precision_bits)
        .field("max_precision_used", report.max_precision_used)];
    if per_index {
        recs.extend(report.records.iter().map(|r| {
            Record::new()
                .field("n", r.n)
                .field("sum_lower", r.sum_lower)
                .field("sum_upper", r.sum_upper)
                .field("term_lower", r.term_lower)
                .field("term_upper", r.term_upper)
                .field("precision", r.precision_bits)
        }));
    }
    let ok = report.all_hold() && scale.passed();
    Ok(Outcome::text(render(&recs, fmt)).negative_unless(ok))
}

fn depth_label(depth: Option<usize>, complete: bool) -> String {
    match depth {
        Some(d) => d.to_string(),
        None if complete => "none".into(),
        None => "unknown".into(),
    }
}

fn search(
    k: u64,
    a1: u64,
    length: usize,
    max_survivors: usize,
    cap: Option<u64>,
    budget: &Budget,
    fmt: Format,
) -> Result<Outcome> {
    let spec = SearchSpec::new(k, a1, length)?
        .with_max_survivors(max_survivors)
        .with_value_cap(cap)
        .with_node_budget(budget.limit());
    let out = enumerate_monotone(&spec)?;
    let mut text = String::new();
    for (i, s) in out.survivors.iter().enumerate() {
        let _ = writeln!(text, "# survivor {}", i + 1);
        for (j, t) in s.iter().enumerate() {
            let _ = writeln!(text, "{} {t}", j + 1);
        }
        text.push('\n');
    }
    let counts: Vec<String> = out.counts.iter().map(u64::to_string).collect();
    let rec = Record::new()
        .field("survivors", out.survivor_count())
        .field("extinction_depth", depth_label(out.extinction_depth, out.complete))
        .field("complete", out.complete)
        .field("expanded", out.nodes)
        .field("counts_by_length", counts.join(","));
    text.push_str(&render(&[rec], fmt));
    Ok(Outcome::text(text))
}

fn parse_profile(s: &str) -> Result<Profile> {
    let (kind, arg) = s
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("--profile: expected kind:argument, got `{s}`")))?;
    Ok(match kind {
        "const" => Profile::Constant(real("--profile", arg)?).validated()?,
        "sin" => {
            let v = reals("--profile", arg)?;
            let [offset, amp, freq] = v[..] else {
                return Err(CliError::Usage("--profile sin: needs offset,amp,freq".into()));
            };
            if freq.fract() != 0.0 || freq < 1.0 {
                return Err(CliError::Usage(
                    "--profile sin: frequency must be a positive integer".into(),
                ));
            }
            Profile::sine(offset, amp, freq as u32)?
        }
        "file" => {
            let text = read_input(arg)?;
            let mut points = Vec::new();
            for (line, fields) in records(&text) {
                let [u, g] = fields[..] else {
                    return Err(CliError::Usage(format!("{arg}:{line}: expected `u g`")));
                };
                points.push((real(arg, u)?, real(arg, g)?));
            }
            Profile::samples(points)?
        }
        other => return Err(CliError::Usage(format!("--profile: unknown kind `{other}`"))),
    })
}

fn continuous(a: &str, b: &str, profile: &str, x: &str, tol: f64, pointwise_tol: f64, fmt: Format) -> Result<Outcome> {
    let spec = GalileoFunctionSpec::new(real("--a", a)?, real("--b", b)?, parse_profile(profile)?)?;
    let xs = reals("--x", x)?;
    let mut recs = Vec::new();
    let mut ok = true;
    for &x in &xs {
        let c = verify_integral_relation(&spec, x, tol)?;
        ok &= c.verdict == Verdict::Pass;
        recs.push(
            Record::new()
                .field("check", "integral")
                .field("x", x)
                .field("lhs", format!("{:e}", c.lhs))
                .field("rhs", format!("{:e}", c.rhs))
                .field("relative", format!("{:e}", c.relative))
                .field("verdict", format!("{:?}", c.verdict).to_lowercase()),
        );
    }
    let p = verify_pointwise_identity(&spec, &xs, pointwise_tol)?;
    ok &= p.passed;
    recs.push(
        Record::new()
            .field("check", "pointwise")
            .field("max_relative", format!("{:e}", p.max_relative))
            .field("worst_x", p.worst_x)
            .field("verdict", if p.passed { "pass" } else { "fail" }),
    );
    Ok(Outcome::text(render(&recs, fmt)).negative_unless(ok))
}

fn client(remote: &Remote) -> Client {
    let cache = remote.cache_dir.clone().map_or_else(Cache::from_env, Cache::new);
    Client::new(cache, if remote.offline { Mode::Offline } else { Mode::Online })
}

fn source_label(s: Source) -> &'static str {
    match s {
        Source::Cache => "cache",
        Source::Network => "network",
        Source::Fixture => "fixture",
    }
}

fn shift_range(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = || CliError::Usage(format!("--shifts: expected lo..hi, got `{s}`"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    Ok(lo.trim().parse().map_err(|_| bad())?..=hi.trim().parse().map_err(|_| bad())?)
}

fn oeis_match(
    input: &str,
    candidates: &str,
    shifts: &str,
    scalars: &str,
    min_length: usize,
    remote: &Remote,
    fmt: Format,
) -> Result<Outcome> {
    let terms = read_terms(&read_input(input)?)?;
    let terms: Vec<BigInt> = terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            if t.is_integer() {
                Ok(t.to_integer())
            } else {
                Err(CliError::Usage(format!("term {} = {t} is not an integer", i + 1)))
            }
        })
        .collect::<Result<_>>()?;
    let ids = candidates
        .split(',')
        .map(|c| c.trim().parse::<OeisId>())
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let options = MatchOptions {
        shifts: shift_range(shifts)?,
        scalars: scalars
            .split(',')
            .map(|s| rational("--scalars", s))
            .collect::<Result<_>>()?,
        min_length,
    };
    let report = client(remote).match_identifiers(&terms, 1, &ids, &options)?;
    let mut recs = Vec::new();
    let mut out = Outcome::default();
    for id in &ids {
        if let Some((_, reason)) = report.skipped.iter().find(|(s, _)| s == id) {
            recs.push(Record::new().field("candidate", id).field("status", "unavailable"));
            out.notes.push(format!("skipped {id}: {reason}"));
            continue;
        }
        let hits: Vec<_> = report.matches.iter().filter(|m| m.candidate == *id).collect();
        if hits.is_empty() {
            recs.push(Record::new().field("candidate", id).field("status", "no-match"));
        }
        for m in hits {
            recs.push(
                Record::new()
                    .field("candidate", id)
                    .field("status", "match")
                    .field("shift", m.shift)
                    .field("scalar", &m.scalar)
                    .field("matched", m.matched_length),
            );
        }
    }
    out.stdout = render(&recs, fmt);
    out.code = if !report.matches.is_empty() {
        exit::SUCCESS
    } else if report.skipped.len() == ids.len() {
        exit::ENVIRONMENT
    } else {
        exit::NEGATIVE
    };
    Ok(out)
}
