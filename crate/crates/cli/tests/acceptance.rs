//! Acceptance runner: one PASS/FAIL line per criterion.
//!
//! Every criterion is checked against an oracle written here, independent of
//! the library path it exercises. Criteria listed in `KNOWN_RED` are reported
//! as FAIL without failing the run; set `GALILEO_ACCEPTANCE_STRICT=1` to make
//! them fatal as well.

use std::collections::BTreeMap;
use std::f64::consts::{E, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use galileo_core::analysis::polynomial::difference_of_powers;
use galileo_core::analysis::{
    classify_polynomial, growth_bounds_check, scale_invariance_check, BoundStatus, GrowthOptions, MonomialResult,
    PolynomialExact,
};
use galileo_core::continuous::{
    extract_profile, integral_relation_residual, unit_grid, verify_integral_relation, verify_pointwise_identity,
    GalileoFunctionSpec, Integrand, PowerEnvelope, Profile, QuadraturePolicy, Verdict,
};
use galileo_core::generators::{
    closed_equal_children, closed_unequal_children, equal_split, from_splitting, poly_family, tattersall,
    unit_left_split, PolyFamilyParams, TattersallParams,
};
use galileo_core::search::{enumerate_monotone, extinction_depth_with, SearchSpec};
use galileo_core::tree::{extract_factors, product_form, SplittingFactors};
use galileo_core::{
    bfile, check_global, check_local, frac, int, partial_sums, Rational, SequencePrefix, VerificationReport,
};
use galileo_oeis::{match_sequence, Cache, Client, MatchOptions, Mode, OeisEntry};
use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact comparisons: no tolerance.
const EXACT: &str = "exact";
/// Relative residual of the integral relation.
const INTEGRAL_TOL: f64 = 1e-9;
/// Relative residual of `a f(ax) = b f(x)`.
const POINTWISE_TOL: f64 = 1e-12;
/// Periodicity defect and round-trip error of an extracted profile.
const PROFILE_TOL: f64 = 1e-10;
/// The aperiodic control must exceed this relative residual somewhere.
const CONTROL_MIN: f64 = 1e-3;

/// Criteria that cannot pass as stated, with the reason.
const KNOWN_RED: &[(u32, &str)] = &[
    (
        5,
        "k = 3 seeds a1 = 3, 5, 6, 7, 8 still have verified monotone survivors at length 64; \
         a1 = 3 and 5 die at 91 and 99, so extinction is finite but later than 64",
    ),
    (
        8,
        "A385587 and A385643 have no shipped fixture and cannot be fetched offline; \
         put their b-files in $GALILEO_CACHE_DIR to check them",
    ),
];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let strict = std::env::var("GALILEO_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let criteria = [
        Criterion {
            id: 1,
            name: "global/local equivalence",
            budget: secs(5),
            run: equivalence,
        },
        Criterion {
            id: 2,
            name: "polynomial family and classifier",
            budget: secs(10),
            run: polynomial,
        },
        Criterion {
            id: 3,
            name: "splitting-tree examples",
            budget: secs(5),
            run: tree_examples,
        },
        Criterion {
            id: 4,
            name: "tree round trip",
            budget: secs(10),
            run: tree_round_trip,
        },
        Criterion {
            id: 5,
            name: "monotone structure",
            budget: secs(60),
            run: monotone,
        },
        Criterion {
            id: 6,
            name: "growth bounds",
            budget: secs(60),
            run: growth,
        },
        Criterion {
            id: 7,
            name: "continuous analog",
            budget: secs(30),
            run: continuous,
        },
        Criterion {
            id: 8,
            name: "OEIS correspondences",
            budget: secs(5),
            run: oeis,
        },
        Criterion {
            id: 9,
            name: "Tattersall sequences",
            budget: secs(10),
            run: tattersall_checks,
        },
    ];
    let mut unexpected = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.budget;
        let pass = outcome.pass && in_time;
        let known = KNOWN_RED.iter().find(|(id, _)| *id == c.id);
        let timing = format!("{:.2}s of {}s", elapsed.as_secs_f64(), c.budget.as_secs());
        let status = if pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {}: {status} ({}; {timing}{})",
            c.id,
            c.name,
            outcome.detail,
            if in_time { "" } else { ", over budget" }
        );
        if !pass {
            match known {
                Some((_, why)) if !strict => println!("  known red: {why}"),
                _ => unexpected += 1,
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criterion(s) failed unexpectedly");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Positive rational `p / q`.
fn random_positive(r: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    frac(r.gen_range(1..=max_num), r.gen_range(1..=max_den))
}

/// `k` in `(1, 10]`.
fn random_k(r: &mut ChaCha8Rng) -> Rational {
    let q = r.gen_range(1..=12i64);
    Rational::one() + frac(r.gen_range(1..=9 * q), q)
}

/// A pair `(b, c)` with `b + c = k`, both positive.
fn random_pair(r: &mut ChaCha8Rng, k: &Rational) -> (Rational, Rational) {
    let q = r.gen_range(2..=40i64);
    let b = k * frac(r.gen_range(1..q), q);
    let c = k - &b;
    (b, c)
}

fn integers(p: &SequencePrefix) -> Vec<BigInt> {
    p.terms().iter().map(|t| t.to_integer()).collect()
}

// ---- 1 ---------------------------------------------------------------------

/// First `n` with `S_{2n} != k S_n`, summing from scratch.
fn naive_first_global_failure(p: &SequencePrefix) -> Option<usize> {
    let mut sums = vec![Rational::zero()];
    for t in p.terms() {
        let next = sums.last().unwrap() + t;
        sums.push(next);
    }
    (1..=p.len() / 2).find(|&n| sums[2 * n] != p.k() * &sums[n])
}

/// Agreement on `1..=N/2`: same verdict, same first failure, and the global
/// residual equals the running sum of local residuals at every index.
/// Returns the shared verdict, or `None` on disagreement.
fn agree(p: &SequencePrefix) -> Option<bool> {
    let g = check_global(p);
    let l = check_local(p);
    let residuals = |r: &VerificationReport| -> BTreeMap<usize, Rational> {
        r.failures.iter().map(|f| (f.index, f.residual.clone())).collect()
    };
    let (global, local) = (residuals(&g), residuals(&l));
    let zero = Rational::zero();
    let mut acc = Rational::zero();
    let running = (1..=p.len() / 2).all(|n| {
        acc += local.get(&n).unwrap_or(&zero);
        global.get(&n).unwrap_or(&zero) == &acc
    });
    let first = g.first_failure().map(|f| f.index);
    let same = g.verified_up_to == l.verified_up_to
        && g.passed() == l.passed()
        && first == l.first_failure().map(|f| f.index)
        && first == naive_first_global_failure(p)
        && running;
    same.then(|| g.passed())
}

fn equivalence() -> Outcome {
    let mut r = rng(1);
    let (mut clean_ok, mut corrupt_ok) = (0, 0);
    for _ in 0..1000 {
        let k = random_k(&mut r);
        let pairs: Vec<_> = (0..=128).map(|_| random_pair(&mut r, &k)).collect();
        let a1 = random_positive(&mut r, 50, 20);
        let clean = from_splitting(a1, k.clone(), |n| pairs[n as usize].clone(), 256).unwrap();
        if agree(&clean) == Some(true) {
            clean_ok += 1;
        }
        let mut terms = clean.terms().to_vec();
        let i = r.gen_range(0..256);
        let factor = loop {
            let f = random_positive(&mut r, 30, 30);
            if !f.is_one() {
                break f;
            }
        };
        terms[i] *= factor;
        let bad = SequencePrefix::new(terms, k).unwrap();
        // every index of a length-256 prefix lies in the verifiable range
        if agree(&bad) == Some(false) {
            corrupt_ok += 1;
        }
    }
    Outcome::new(
        clean_ok == 1000 && corrupt_ok == 1000,
        format!("{clean_ok}/1000 clean and {corrupt_ok}/1000 corrupted prefixes agree, {EXACT}"),
    )
}

// ---- 2 ---------------------------------------------------------------------

fn binomial(n: u32, j: u32) -> i64 {
    (0..j).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

/// `C (x^d - (x-1)^d)` expanded by the binomial theorem.
fn expanded_term(c: &Rational, d: u32) -> PolynomialExact {
    let coeffs = (0..d)
        .map(|j| {
            // (x-1)^d contributes binom(d, j) (-1)^(d-j) x^j
            let sign = if (d - j).is_multiple_of(2) { -1 } else { 1 };
            c * int(sign * binomial(d, j))
        })
        .collect();
    PolynomialExact::new(coeffs)
}

/// First `n <= 64` with `S_{2n} != k S_n` for `a_n = p(n)`.
fn direct_violation(p: &PolynomialExact, k: &Rational) -> Option<usize> {
    let mut sums = vec![Rational::zero()];
    for n in 1..=128i64 {
        let next = sums.last().unwrap() + p.eval(&int(n));
        sums.push(next);
    }
    (1..=64).find(|&n| sums[2 * n] != k * &sums[n])
}

fn polynomial() -> Outcome {
    let mut failures = Vec::new();
    for c in [int(1), int(2), frac(7, 3)] {
        for d in 1..=8u32 {
            let params = PolyFamilyParams::new(c.clone(), d).unwrap();
            let k = int(2).pow(d);
            let p = poly_family(&params, 4096).unwrap();
            let n = int(4096);
            // S_N = C N^d
            let closed = partial_sums(&p).get(4096) == &(&c * n.pow(d));
            let term = expanded_term(&c, d);
            let recovered = classify_polynomial(&term, &k).unwrap()
                == MonomialResult::Monomial {
                    c: c.clone(),
                    d: d as usize,
                };
            if !(p.k() == &k && check_global(&p).passed() && closed && recovered && term == difference_of_powers(&c, d))
            {
                failures.push(format!("C={c} d={d}"));
            }
        }
    }
    let mut r = rng(2);
    let mut rejected = 0;
    for _ in 0..200 {
        let c = random_positive(&mut r, 20, 6);
        let d = r.gen_range(1..=8u32);
        let k = int(2).pow(d);
        // at least one term of degree >= 1; a constant alone would keep d = 1 Galileo
        let mut p = expanded_term(&c, d);
        for _ in 0..r.gen_range(1..=3) {
            let mut coef = frac(r.gen_range(-30..=30), r.gen_range(1..=7));
            if coef.is_zero() {
                coef = int(1);
            }
            p = &p + &PolynomialExact::monomial(coef, r.gen_range(1..=9));
        }
        if p.is_zero() {
            continue;
        }
        let accepted = matches!(classify_polynomial(&p, &k).unwrap(), MonomialResult::Monomial { .. });
        if !accepted && direct_violation(&p, &k).is_some() {
            rejected += 1;
        }
    }
    Outcome::new(
        failures.is_empty() && rejected == 200,
        format!(
            "{}/24 families exact to N=4096, {rejected}/200 perturbations rejected with a direct violation at n<=64",
            24 - failures.len()
        ),
    )
}

// ---- 3 ---------------------------------------------------------------------

fn tree_examples() -> Outcome {
    let one = Rational::one();
    let equal = from_splitting(one.clone(), int(4), equal_split(int(4)), 8).unwrap();
    let unequal = from_splitting(one.clone(), int(4), unit_left_split(int(4)), 8).unwrap();
    let lines = |v: &[i64]| -> String { v.iter().enumerate().map(|(i, t)| format!("{} {t}\n", i + 1)).collect() };
    let equal_ok = bfile::write_prefix(&equal) == lines(&[1, 3, 6, 6, 12, 12, 12, 12]);
    let unequal_ok = bfile::write_prefix(&unequal) == lines(&[1, 3, 3, 9, 3, 9, 9, 27]);

    let n = 1 << 16;
    let tree1 = from_splitting(one.clone(), int(4), equal_split(int(4)), n).unwrap();
    let tree2 = from_splitting(one, int(4), unit_left_split(int(4)), n).unwrap();
    let big = |v: BigInt| Rational::from_integer(v);
    let closed1 = |m: u64| {
        if m == 1 {
            int(1)
        } else {
            big(BigInt::from(3) << (m - 1).ilog2())
        }
    };
    let closed2 = |m: u64| big(BigInt::from(3).pow((m - 1).count_ones()));
    let agree1 = (1..=n as u64).all(|m| tree1.term(m as usize) == &closed1(m));
    let agree2 = (1..=n as u64).all(|m| tree2.term(m as usize) == &closed2(m));
    let library = closed_equal_children(n).unwrap() == tree1 && closed_unequal_children(n).unwrap() == tree2;
    Outcome::new(
        equal_ok && unequal_ok && agree1 && agree2 && library,
        format!(
            "equal children {}, unequal children {}, closed forms to 2^16 {}, {EXACT}",
            verdict(equal_ok),
            verdict(unequal_ok),
            verdict(agree1 && agree2 && library)
        ),
    )
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "MISMATCH"
    }
}

// ---- 4 ---------------------------------------------------------------------

fn tree_round_trip() -> Outcome {
    let n = 1usize << 12;
    let mut r = rng(4);
    let mut good = 0;
    for _ in 0..100 {
        let k = random_k(&mut r);
        let oracle: Vec<_> = (0..=n / 2).map(|_| random_pair(&mut r, &k)).collect();
        let a1 = random_positive(&mut r, 9, 9);
        let p = from_splitting(a1.clone(), k.clone(), |m| oracle[m as usize].clone(), n).unwrap();
        let extracted = extract_factors(&p).unwrap();
        let identity = extracted.len() == n / 2 - 1 && (2..=n / 2).all(|m| extracted.get(m as u64) == Some(&oracle[m]));
        let table = (2..=n as u64 / 2).map(|m| (m, oracle[m as usize].clone())).collect();
        let factors = SplittingFactors::new(k.clone(), table).unwrap();
        let products = (2..=n as u64).all(|m| product_form(m, &a1, &k, &factors).unwrap() == *p.term(m as usize));
        if identity && products {
            good += 1;
        }
    }
    Outcome::new(good == 100, format!("{good}/100 oracles round-trip to N=4096, {EXACT}"))
}

// ---- 5 ---------------------------------------------------------------------

/// Measured with no node budget; the first two are the only seeds that die
/// within length 64 apart from a1 = 4.
const K3_DEPTHS_64: [Option<usize>; 8] = [Some(7), Some(11), None, Some(59), None, None, None, None];
/// Survivors of length 64 for the seeds still alive there.
const K3_SURVIVORS_64: [(u64, u64); 5] = [(3, 285), (5, 15_094), (6, 5_607_580), (7, 36_974_584), (8, 387_386_256)];

fn monotone() -> Outcome {
    let constant = (1..=5u64).all(|a1| {
        let out = enumerate_monotone(&SearchSpec::new(2, a1, 32).unwrap().with_max_survivors(usize::MAX)).unwrap();
        out.complete && out.survivors == vec![vec![a1; 32]]
    });
    let rows = extinction_depth_with(3, 8, 64, |s| s.with_node_budget(None)).unwrap();
    let depths: Vec<Option<usize>> = rows.iter().map(|r| r.depth).collect();
    let complete = rows.iter().all(|r| r.complete);
    let anchors = complete && depths == K3_DEPTHS_64;
    let counts_ok = K3_SURVIVORS_64.iter().all(|&(a1, expected)| {
        let spec = SearchSpec::new(3, a1, 64)
            .unwrap()
            .with_max_survivors(0)
            .with_node_budget(None);
        enumerate_monotone(&spec).unwrap().survivor_count() == expected
    });
    let finite = complete && depths.iter().all(Option::is_some);
    let shown: Vec<String> = rows
        .iter()
        .map(|r| format!("{}:{}", r.a1, r.depth.map_or("alive".into(), |d| d.to_string())))
        .collect();
    Outcome::new(
        constant && anchors && counts_ok && finite,
        format!(
            "k=2 constant only {}, k=3 depths [{}] anchors {}, survivor counts {}, finite depth for every seed within 64 {}",
            yes(constant),
            shown.join(" "),
            verdict(anchors),
            verdict(counts_ok),
            yes(finite)
        ),
    )
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// ---- 6 ---------------------------------------------------------------------

/// Exact statuses at `n = 2^j`, where `n^d = k^j` is rational.
fn exact_at_powers_of_two(p: &SequencePrefix, c: [&Rational; 4]) -> bool {
    let sums = partial_sums(p);
    let mut j = 0u32;
    while (1usize << j) <= p.len() {
        let n = 1usize << j;
        let nd = p.k().clone().pow(j);
        let nd1 = &nd / int(n as i64);
        let (s, a) = (sums.get(n), p.term(n));
        if !(&(c[0] * &nd) <= s && s <= &(c[1] * &nd) && &(c[2] * &nd1) <= a && a <= &(c[3] * &nd1)) {
            return false;
        }
        j += 1;
    }
    true
}

fn growth() -> Outcome {
    let mut cases: Vec<(String, SequencePrefix)> = vec![
        (
            "odd".into(),
            poly_family(&PolyFamilyParams::new(int(1), 2).unwrap(), 1 << 16).unwrap(),
        ),
        (
            "equal-children".into(),
            from_splitting(int(1), int(4), equal_split(int(4)), 1 << 16).unwrap(),
        ),
    ];
    for k in 4..=8 {
        cases.push((
            format!("tattersall{k}"),
            tattersall(TattersallParams::new(k).unwrap(), 1 << 14).unwrap(),
        ));
    }
    let mut bad = Vec::new();
    let mut odd_constants = false;
    for (name, p) in &cases {
        let report = growth_bounds_check(p, GrowthOptions::with_precision(128)).unwrap();
        let s1 = p.term(1);
        // C1 = S_1 / k, C2 = S_1 k, D2 = (k - 1) C2
        let constants =
            report.c1 == s1 / p.k() && report.c2 == s1 * p.k() && report.d2 == (p.k() - int(1)) * &report.c2;
        if name == "odd" {
            odd_constants = report.c1 == frac(1, 4) && report.c2 == int(4);
        }
        let clean = report.all_hold()
            && report.count(BoundStatus::Indeterminate) == 0
            && report.max_precision_used <= 128
            && report.records.len() == p.len();
        let exact = exact_at_powers_of_two(p, [&report.c1, &report.c2, &report.d1, &report.d2]);
        let scale = scale_invariance_check(p);
        if !(constants && clean && exact && scale.passed() && scale.verified_up_to == p.len()) {
            bad.push(name.clone());
        }
    }
    Outcome::new(
        bad.is_empty() && odd_constants,
        format!(
            "{}/7 sequences hold every bound at 128 bits with no indeterminates and exact scale invariance, odd numbers C1=1/4 C2=4 {}{}",
            7 - bad.len(),
            yes(odd_constants),
            if bad.is_empty() { String::new() } else { format!(", failing: {}", bad.join(" ")) }
        ),
    )
}

// ---- 7 ---------------------------------------------------------------------

fn continuous() -> Outcome {
    let mut r = rng(7);
    let random_samples: Vec<f64> = (0..9).map(|_| r.gen_range(0.0..4.0)).collect();
    let profiles = [
        ("constant", Profile::Constant(1.7)),
        ("sine", Profile::sine(2.0, 1.0, 1).unwrap()),
        ("piecewise", Profile::uniform(random_samples).unwrap()),
    ];
    let pairs = [(2.0, 8.0), (3.0, 27.0), (0.5, 0.125)];
    let xs = [0.5, 1.0, E, 10.0, 100.0];
    let mut worst_integral: f64 = 0.0;
    let mut worst_pointwise: f64 = 0.0;
    let mut worst_profile: f64 = 0.0;
    let mut all_pass = true;
    for (_, profile) in &profiles {
        for &(a, b) in &pairs {
            let spec = GalileoFunctionSpec::new(a, b, profile.clone()).unwrap();
            for &x in &xs {
                let check = verify_integral_relation(&spec, x, INTEGRAL_TOL).unwrap();
                all_pass &= check.verdict == Verdict::Pass && check.relative < INTEGRAL_TOL;
                worst_integral = worst_integral.max(check.relative);
            }
            let pw = verify_pointwise_identity(&spec, &xs, POINTWISE_TOL).unwrap();
            all_pass &= pw.passed && pw.max_relative < POINTWISE_TOL;
            worst_pointwise = worst_pointwise.max(pw.max_relative);
            let out = extract_profile(|x| spec.eval_f(x).unwrap(), a, b, &unit_grid(200)).unwrap();
            let round_trip = out
                .points
                .iter()
                .map(|&(u, g)| (g - profile.eval(u)).abs() / (1.0 + g.abs()))
                .fold(0.0, f64::max);
            worst_profile = worst_profile.max(out.periodicity_defect).max(round_trip);
            all_pass &= out.periodicity_defect < PROFILE_TOL && round_trip < PROFILE_TOL;
        }
    }
    // constant profile, a = 2, b = 8: f = c x^2, int_0^x f = c x^3 / 3
    let spec = GalileoFunctionSpec::new(2.0, 8.0, Profile::Constant(1.7)).unwrap();
    let closed = xs.iter().all(|&x| {
        let c = verify_integral_relation(&spec, x, INTEGRAL_TOL).unwrap();
        let exact = 1.7 * x.powi(3) / 3.0;
        (c.rhs / 8.0 - exact).abs() <= INTEGRAL_TOL * exact
    });

    // g(u) = 2 + sin(2 pi u / 1.1) has period 1.1, so f is not a Galileo function
    let (a, b) = (2.0f64, 8.0f64);
    let e = (b / a).ln() / a.ln();
    let control = Integrand {
        f: move |x: f64| (2.0 + (2.0 * PI * x.log2() / 1.1).sin()) * x.powf(e),
        log_period: a.ln(),
        offsets: Vec::new(),
        envelope: PowerEnvelope {
            scale: 3.0,
            exponent: e,
        },
    };
    let control_worst = xs
        .iter()
        .map(|&x| {
            integral_relation_residual(&control, a, b, x, INTEGRAL_TOL, QuadraturePolicy::default())
                .unwrap()
                .relative
        })
        .fold(0.0, f64::max);
    let control_ok = control_worst > CONTROL_MIN;
    Outcome::new(
        all_pass && closed && control_ok,
        format!(
            "worst integral {worst_integral:.1e} < {INTEGRAL_TOL:.0e}, pointwise {worst_pointwise:.1e} < {POINTWISE_TOL:.0e}, \
             profile {worst_profile:.1e} < {PROFILE_TOL:.0e}, closed form {}, aperiodic control {control_worst:.1e} > {CONTROL_MIN:.0e}",
            verdict(closed)
        ),
    )
}

// ---- 8 ---------------------------------------------------------------------

struct Expected {
    label: &'static str,
    terms: Vec<BigInt>,
    first_index: i64,
    id: &'static str,
    options: MatchOptions,
    /// `None` accepts any passing shift and scalar.
    want: Option<(i64, Rational)>,
}

fn oeis() -> Outcome {
    let client = Client::new(Cache::from_env(), Mode::Offline);
    let poly = |d: u32| poly_family(&PolyFamilyParams::new(int(1), d).unwrap(), 200).unwrap();
    let tat = |k: u64| tattersall(TattersallParams::new(k).unwrap(), 200).unwrap();
    let ratio_opts = |p: &SequencePrefix| MatchOptions::for_ratio(p.k());
    let mut cases = vec![
        Expected {
            label: "equal-children",
            // a_1 = 1 sits outside the closed form
            terms: integers(&closed_equal_children(200).unwrap())[1..].to_vec(),
            first_index: 2,
            id: "A053644",
            options: MatchOptions::default(),
            want: Some((1, int(3))),
        },
        Expected {
            label: "unequal-children",
            terms: integers(&closed_unequal_children(200).unwrap()),
            first_index: 1,
            id: "A048883",
            options: MatchOptions::default(),
            want: Some((1, int(1))),
        },
    ];
    for (d, id, shift) in [
        (1, "A000012", 0),
        (2, "A005408", 1),
        (3, "A003215", 1),
        (4, "A005917", 0),
        (5, "A022521", 1),
    ] {
        let p = poly(d);
        cases.push(Expected {
            label: ["poly1", "poly2", "poly3", "poly4", "poly5"][d as usize - 1],
            terms: integers(&p),
            first_index: 1,
            id,
            options: ratio_opts(&p),
            want: Some((shift, int(1))),
        });
    }
    for (k, id, want) in [
        (4, "A005408", Some((1, int(1)))),
        (5, "A385587", None),
        (6, "A385643", None),
    ] {
        let p = tat(k);
        cases.push(Expected {
            label: ["tattersall4", "tattersall5", "tattersall6"][k as usize - 4],
            terms: integers(&p),
            first_index: 1,
            id,
            options: ratio_opts(&p),
            want,
        });
    }
    let mut confirmed = Vec::new();
    let mut missing = Vec::new();
    for case in &cases {
        let entry: OeisEntry = match client.fetch(case.id) {
            Ok(e) => e,
            Err(_) => {
                missing.push(format!("{} {} unavailable", case.label, case.id));
                continue;
            }
        };
        let found = match_sequence(&case.terms, case.first_index, &[entry], &case.options).unwrap();
        let hit = found.iter().find(|m| {
            m.matched_length >= 50 && case.want.as_ref().is_none_or(|(s, c)| m.shift == *s && &m.scalar == c)
        });
        match hit {
            Some(m) => confirmed.push(format!("{}={}@{}x{}", case.label, case.id, m.shift, m.scalar)),
            None => missing.push(format!("{} {} no match", case.label, case.id)),
        }
    }
    Outcome::new(
        missing.is_empty(),
        format!(
            "{}/{} confirmed [{}]{}",
            confirmed.len(),
            cases.len(),
            confirmed.join(" "),
            if missing.is_empty() {
                String::new()
            } else {
                format!(", missing: {}", missing.join(", "))
            }
        ),
    )
}

// ---- 9 ---------------------------------------------------------------------

fn tattersall_checks() -> Outcome {
    let n = 100_000;
    let four = tattersall(TattersallParams::new(4).unwrap(), n).unwrap();
    let odd = (1..=n as i64).all(|m| four.term(m as usize) == &int(2 * m - 1));
    let increasing: Vec<u64> = (4..=12u64)
        .filter(|&k| {
            let p = tattersall(TattersallParams::new(k).unwrap(), n).unwrap();
            p.terms().windows(2).all(|w| w[0] < w[1])
        })
        .collect();
    Outcome::new(
        odd && increasing.len() == 9,
        format!(
            "k=4 equals 2n-1 to 10^5 {}, strictly increasing for {}/9 k in 4..=12, {EXACT}",
            yes(odd),
            increasing.len()
        ),
    )
}
