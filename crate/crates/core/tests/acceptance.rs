//! Acceptance criteria, one pass/fail line each. Exits non-zero on failure.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;

use common::{check_invariants, corpus, describe, toy};
use multibwt::distance::normalize;
use multibwt::intervals::{interesting_intervals, max_runs_bound};
use multibwt::oracle::{
    brute_force_interval_max_runs, brute_force_optimal_runs, naive_rotation_sort, LastColumn, OracleLimits,
    RotationMatrix,
};
use multibwt::ordering::{canonical_rotation, lex_compare, omega_compare};
use multibwt::perm::{enumerate_feasible, gamma, input_rank_permutation, is_feasible, pi_conc};
use multibwt::report::{analyze, AnalyzeOptions};
use multibwt::runs::{count_runs, optimal_order, runs_of};
use multibwt::synth::{generate, GenSpec};
use multibwt::transform::{ebwt, invert_ebwt, invert_separator_based, mdol_bwt, Transform};
use multibwt::{build, build_comparable, Collection, Perm, Variant};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn within(what: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:.2?}, limit {limit:?}"))
}

fn text(v: Variant, c: &Collection) -> String {
    build(v, c).unwrap().to_text()
}

fn fixture_tables() -> BTreeMap<String, Vec<String>> {
    let mut tables: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut current = String::new();
    for line in include_str!("fixtures/toy_matrices.txt").lines() {
        if let Some(name) = line.strip_prefix("# ") {
            current = name.to_string();
        } else if !line.is_empty() {
            tables.entry(current.clone()).or_default().push(line.to_string());
        }
    }
    tables
}

fn rendered(m: &RotationMatrix) -> Vec<String> {
    m.render().lines().map(str::to_string).collect()
}

fn criterion_1() -> Outcome {
    let c = toy();
    eq("eBWT", text(Variant::Ebwt, &c), "CGGGATGTACGTTAAAAA".into())?;
    eq("dolEBWT", text(Variant::DolEbwt, &c), "GGAAACGG$$$TTACTGT$AAA$".into())?;
    eq("mdolBWT", text(Variant::Mdol, &c), "GAGAAGCG$$$TTATCTG$AAA$".into())?;
    eq("concBWT raw", text(Variant::Conc, &c), "$AAGAGGGC$#$TTACTGT$AAA$".into())?;
    eq("concBWT", build_comparable(Variant::Conc, &c).unwrap().to_text(), "AAGAGGGC$$$TTACTGT$AAA$".into())?;
    eq("colexBWT", text(Variant::Colex, &c), "AAAGGCGG$$$TTACTGT$AAA$".into())?;

    let tables = fixture_tables();
    let limits = OracleLimits::default();
    for (name, v) in [
        ("mdol", Variant::Mdol),
        ("dolebwt", Variant::DolEbwt),
        ("conc", Variant::Conc),
        ("ebwt", Variant::Ebwt),
        ("colex", Variant::Colex),
    ] {
        let (m, _) = naive_rotation_sort(v, &c, &limits).unwrap();
        let m = if v == Variant::Conc { m.normalized() } else { m };
        eq(&format!("{name} matrix"), rendered(&m), tables[name].clone())?;
    }
    let opt = optimal_order(&c).unwrap();
    let (m, _) = naive_rotation_sort(Variant::Mdol, &c.permuted(&opt.permutation).unwrap(), &limits).unwrap();
    let plain: Vec<String> = m.render_as(LastColumn::Plain).lines().map(str::to_string).collect();
    eq("optimum matrix", plain, tables["optimum"].clone())?;
    Ok("five transforms and six matrices match".into())
}

fn criterion_2() -> Outcome {
    let gt = Collection::from_seqs(["GTC", "GT"]).unwrap();
    eq("eBWT({GTC,GT})", text(Variant::Ebwt, &gt), "TCTGG".into())?;
    let banana = Collection::from_seqs(["banana"]).unwrap();
    let t = build(Variant::Single, &banana).unwrap();
    eq("BWT(banana)", t.to_text(), "nnbaaa".into())?;
    eq("r(banana)", count_runs(&t).unwrap().r, 3)?;
    eq("BWT(banana$)", text(Variant::Mdol, &banana), "annb$aa".into())?;
    eq("omega(GTC, GT)", omega_compare(b"GTC", b"GT").unwrap(), std::cmp::Ordering::Less)?;
    eq("lex(GT, GTC)", lex_compare(b"GT", b"GTC"), std::cmp::Ordering::Less)?;
    Ok("eBWT, BWT, runs and orders".into())
}

fn percent_ok(k: usize, printed: &str, tolerance_hundredths: u64) -> Result<String, String> {
    let count = enumerate_feasible(k, 10).map_err(|e| e.to_string())?;
    // compare feasible/total * 100 against the printed value in units of 1e-4 percent
    let got = count.feasible as u128 * 100 * 10_000 / count.total as u128;
    let (int, frac) = printed.split_once('.').unwrap();
    let want = (int.parse::<u128>().unwrap() * 10_000) + frac.parse::<u128>().unwrap() * 10u128.pow(4 - frac.len() as u32);
    let diff = got.abs_diff(want);
    let max = tolerance_hundredths as u128 * 100;
    ensure(diff <= max, || format!("k={k}: {count} vs printed {printed}%"))?;
    Ok(count.to_string())
}

fn criterion_3() -> Outcome {
    eq("rho(toy)", input_rank_permutation(&toy()).to_string(), "25134".into())?;
    let rho: Perm = "25134".parse().unwrap();
    eq("pi_conc(25134)", pi_conc(&rho).unwrap().to_string(), "45132".into())?;
    for (r, p) in [("123", "312"), ("132", "231"), ("312", "231"), ("213", "321"), ("231", "132"), ("321", "123")] {
        eq(&format!("pi_conc({r})"), pi_conc(&r.parse().unwrap()).unwrap().to_string(), p.to_string())?;
    }
    let g = gamma(&Collection::from_seqs(["GAA", "ACA", "TGA"]).unwrap());
    eq("gamma", g.to_string(), "213".into())?;
    eq("213 feasible", is_feasible(&g).unwrap(), None)?;

    // exact at the printed precision: the printed value is the rounded percentage
    let printed = ["83.33", "75.0", "68.33", "63.89", "60.12", "57.29"];
    let start = Instant::now();
    for (k, p) in (3..=8).zip(printed) {
        let count = enumerate_feasible(k, 10).map_err(|e| e.to_string())?;
        let places = p.split_once('.').unwrap().1.len() as u32;
        let shown = multibwt::fixed::format_fixed(count.feasible * 100, count.total, places);
        eq(&format!("k={k} percentage"), shown, p.to_string())?;
    }
    within("k=3..8", start.elapsed(), Duration::from_secs(10))?;
    let start = Instant::now();
    let nine = percent_ok(9, "54.8", 1)?;
    let ten = percent_ok(10, "52.81", 1)?;
    within("k=9,10", start.elapsed(), Duration::from_secs(300))?;
    Ok(format!("k=3..8 exact; k=9 {nine}; k=10 {ten}"))
}

fn criterion_4() -> Outcome {
    let eight = Collection::from_seqs(["AAAA", "AGCA", "GCAA", "GTCA", "CAAA", "CGCA", "TCAA", "TTCA"]).unwrap();
    eq("mdol text", text(Variant::Mdol, &eight), "AAAAAAAAACACACACACACAC$$GTGTGT$$AC$$GT$$".into())?;
    eq("mdol runs", runs_of(&mdol_bwt(&eight).unwrap().symbols), 28)?;
    eq("colex text", text(Variant::Colex, &eight), "AAAAAAAAAAAACCCCAACCAC$$GGTTGT$$AC$$GT$$".into())?;
    eq("colex runs", runs_of(&build(Variant::Colex, &eight).unwrap().symbols), 18)?;

    let three = Collection::from_seqs(["GAA", "ACA", "TGA"]).unwrap();
    eq("colex {GAA,ACA,TGA}", runs_of(&build(Variant::Colex, &three).unwrap().symbols), 7)?;
    let mut feasible = BTreeSet::new();
    for order in (1..=3).permutations(3) {
        let d = three.permuted(&Perm::new(order).unwrap()).unwrap();
        feasible.insert(build_comparable(Variant::Conc, &d).unwrap().to_text());
    }
    let listed: BTreeSet<String> =
        ["AAAGACG$AT$$", "AAACGAG$AT$$", "AAAAGCG$AT$$", "AAAGCAG$AT$$", "AAACAGG$AT$$"].map(String::from).into();
    eq("feasible concatenated transforms", &feasible, &listed)?;
    let min_feasible = feasible.iter().map(|t| runs_of(&Transform::from_text(Variant::Conc, t.as_bytes()).symbols)).min();
    eq("feasible minimum", min_feasible, Some(8))?;

    let c = toy();
    eq("toy colex", runs_of(&build(Variant::Colex, &c).unwrap().symbols), 14)?;
    eq("toy optimal_order", optimal_order(&c).unwrap().r_opt, 12)?;
    eq("toy brute force", brute_force_optimal_runs(&c, &OracleLimits::default()).unwrap().0, 12)?;
    Ok("28/18, 7 vs 8, 14 vs 12".into())
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let limits = OracleLimits::default();
    let corpus = corpus(500);
    let mut optimal_checked = 0;
    for c in &corpus {
        let variants: Vec<Variant> =
            if c.k() == 1 { Variant::ALL.into_iter().chain([Variant::Single]).collect() } else { Variant::ALL.to_vec() };
        for v in variants {
            let fast = build(v, c).unwrap();
            let (_, naive) = naive_rotation_sort(v, c, &limits).unwrap();
            ensure(fast.symbols == naive.symbols, || format!("{v}: {fast} vs naive {naive} for {}", describe(c)))?;
        }
        if c.k() <= 7 {
            let fast = optimal_order(c).unwrap().r_opt;
            let (exhaustive, _) = brute_force_optimal_runs(c, &limits).unwrap();
            ensure(fast == exhaustive, || format!("r_opt {fast} vs exhaustive {exhaustive} for {}", describe(c)))?;
            optimal_checked += 1;
        }
    }
    let mut multisets = 0;
    for sigma in 1..=4usize {
        for counts in (0..sigma).map(|_| 1..=10usize).multi_cartesian_product() {
            if counts.iter().sum::<usize>() > 10 {
                continue;
            }
            let parikh: BTreeMap<usize, usize> = counts.into_iter().enumerate().collect();
            let bound = max_runs_bound(&parikh).unwrap();
            let brute = brute_force_interval_max_runs(&parikh, &limits).unwrap();
            ensure(bound == brute, || format!("bound {bound} vs exhaustive {brute} for {parikh:?}"))?;
            multisets += 1;
        }
    }
    within("oracle suite", start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{} collections, {optimal_checked} optimal orders, {multisets} multisets", corpus.len()))
}

fn criterion_6() -> Outcome {
    let corpus = corpus(500);
    for c in &corpus {
        check_invariants(c, true)?;
    }
    Ok(format!("{} collections", corpus.len()))
}

fn criterion_7() -> Outcome {
    let corpus = corpus(500);
    let mut primitive = 0;
    for c in &corpus {
        let t = mdol_bwt(c).unwrap();
        let back = invert_separator_based(&t).map_err(|e| format!("{e} for {}", describe(c)))?;
        ensure(back.seqs().eq(c.seqs()), || format!("mdol inversion differs for {}", describe(c)))?;

        let e = ebwt(c).unwrap();
        let strings = invert_ebwt(&e).map_err(|err| format!("{err} for {}", describe(c)))?;
        let again = ebwt(&Collection::from_seqs(strings.iter().map(|s| s.as_slice())).unwrap()).unwrap();
        ensure(again.symbols == e.symbols, || format!("ebwt of inverse differs for {}", describe(c)))?;

        if c.seqs().all(|s| multibwt::ordering::primitive_root(s).unwrap().exponent == 1) {
            let mut want: Vec<Vec<u8>> = c.seqs().map(canonical_rotation).collect();
            let mut got = strings;
            want.sort();
            got.sort();
            ensure(got == want, || format!("eBWT inversion is not the input up to rotation for {}", describe(c)))?;
            primitive += 1;
        }
    }
    Ok(format!("{} round trips, {primitive} primitive collections", corpus.len()))
}

fn criterion_8() -> Outcome {
    let c = generate(&GenSpec::reads(2024, 5000, 100, 0.01)).unwrap();
    let start = Instant::now();
    let report = analyze(&c, &AnalyzeOptions::default()).unwrap();
    let elapsed = start.elapsed();
    within("analyze on 5000 x 100", elapsed, Duration::from_secs(30))?;
    check_invariants(&c, false)?;
    let hamming_max = report.hamming.absolute.iter().flatten().copied().max().unwrap_or(0);
    ensure(hamming_max <= report.dataset.interval_length, || "hamming above the interval bound".into())?;
    eq("interval count", report.dataset.interesting_intervals, interesting_intervals(&c).count_intervals)?;

    let toy_json = analyze(&toy(), &AnalyzeOptions { edit_subset: Some(5) }).unwrap().to_json();
    eq("toy golden JSON", toy_json.as_str(), include_str!("golden/toy_report.json"))?;
    eq("normalized Hamming", normalize(3_014_183, 25_500_000, 25_500_000).to_string(), "0.11820".into())?;
    eq("normalized edit", normalize(28_702, 255_000, 250_000).to_string(), "0.11256".into())?;
    Ok(format!("analyze {elapsed:.2?}, {} intervals", report.dataset.interesting_intervals))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("golden transforms and matrices", criterion_1),
        ("single-string and order fixtures", criterion_2),
        ("permutation fixtures and feasible counts", criterion_3),
        ("run-count fixtures", criterion_4),
        ("oracle equivalence", criterion_5),
        ("structural properties", criterion_6),
        ("inversion round trips", criterion_7),
        ("desk-scale analysis and report format", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}) [{:.2?}]", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{:.2?}]", i + 1, start.elapsed());
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
