mod common;

use sataug::gen::{gen_corpus, gen_pr, gen_sr, power_law_weights, GenSpec, PowerLawSampler};
use sataug::oracle::solve_brute;
use sataug::rng::rng_from_seed;
use sataug::Label;

/// Probability that each variable lands in a clause of `k` distinct variables
/// drawn one after another proportionally to `weights`, skipping repeats.
fn inclusion_probabilities(weights: &[f64], k: usize) -> Vec<f64> {
    fn walk(weights: &[f64], k: usize, picked: &mut Vec<usize>, p: f64, out: &mut [f64]) {
        if picked.len() == k {
            for &i in picked.iter() {
                out[i] += p;
            }
            return;
        }
        let rest: f64 = (0..weights.len())
            .filter(|i| !picked.contains(i))
            .map(|i| weights[i])
            .sum();
        for i in 0..weights.len() {
            if !picked.contains(&i) {
                picked.push(i);
                walk(weights, k, picked, p * weights[i] / rest, out);
                picked.pop();
            }
        }
    }
    let mut out = vec![0.0; weights.len()];
    walk(weights, k, &mut Vec::new(), 1.0, &mut out);
    out
}

#[test]
fn pr_variable_frequencies_follow_the_power_law() {
    let weights = power_law_weights(10, 1.7);
    let expected_p = inclusion_probabilities(&weights, 3);
    assert!((expected_p.iter().sum::<f64>() - 3.0).abs() < 1e-12);

    let clauses = 10_000;
    let sampler = PowerLawSampler::new(10, 3, 1.7).unwrap();
    let mut rng = rng_from_seed(2024);
    let mut counts = [0u64; 10];
    for _ in 0..clauses {
        let c = sampler.sample_clause(&mut rng);
        assert_eq!(c.len(), 3);
        for l in c.literals() {
            counts[l.var().pos()] += 1;
        }
    }
    let chi2: f64 = counts
        .iter()
        .zip(&expected_p)
        .map(|(&o, &p)| {
            let e = p * clauses as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    // 99.9th percentile of chi-squared with 9 degrees of freedom
    assert!(chi2 < 27.88, "chi2 = {chi2:.2}, counts {counts:?}");
}

#[test]
fn pr_instances_have_distinct_clauses() {
    for seed in 0..200 {
        let inst = gen_pr(10, 41, 3, 1.7, seed).unwrap();
        let f = &inst.formula;
        assert_eq!(f.num_clauses(), 41);
        let distinct: std::collections::HashSet<_> = f.clauses().iter().collect();
        assert_eq!(distinct.len(), 41);
        assert!(f.clauses().iter().all(|c| c.len() == 3));
        assert_eq!(inst.label, solve_brute(f).unwrap());
    }
    assert!(gen_pr(3, 25, 3, 1.7, 0).is_err());
}

#[test]
fn ur_sat_fraction_near_threshold() {
    let corpus = gen_corpus(&GenSpec::ur(12, 51, 3), 1000, 0).unwrap();
    let sat = corpus.iter().filter(|i| i.label == Label::Sat).count() as f64 / 1000.0;
    // pinned from the first run: 0.78; the standard error is about 0.013
    assert!((0.72..=0.84).contains(&sat), "sat fraction {sat}");
    for inst in corpus.iter().take(100) {
        assert_eq!(inst.label, solve_brute(&inst.formula).unwrap());
        assert!(inst.formula.clauses().iter().all(|c| c.len() == 3));
    }
}

#[test]
fn sr_clause_lengths() {
    // length = 1 + Bernoulli(0.3) + Geometric(0.4) on {1, 2, ...}
    let expect = |len: usize| -> f64 {
        let geo = |g: usize| if g == 0 { 0.0 } else { 0.4 * 0.6f64.powi(g as i32 - 1) };
        0.7 * geo(len - 1) + 0.3 * if len >= 3 { geo(len - 2) } else { 0.0 }
    };
    let mut counts = [0u64; 7];
    let mut total = 0u64;
    for seed in 0..300 {
        let (sat, _) = gen_sr(40, seed).unwrap();
        let clauses = sat.formula.clauses();
        // the last clause was edited by the flip, the rest are raw draws
        for c in &clauses[..clauses.len() - 1] {
            total += 1;
            counts[c.len().min(6)] += 1;
        }
    }
    let mut chi2 = 0.0;
    for (len, &o) in counts.iter().enumerate().skip(2) {
        let p = if len == 6 {
            1.0 - (2..6).map(expect).sum::<f64>()
        } else {
            expect(len)
        };
        let e = p * total as f64;
        chi2 += (o as f64 - e).powi(2) / e;
    }
    assert_eq!(counts[1], 0);
    // 99.9th percentile, 4 degrees of freedom
    assert!(chi2 < 18.47, "chi2 = {chi2:.2}, counts {counts:?}");
}

#[test]
fn sr_pairs_and_ranges() {
    let corpus = gen_corpus(&GenSpec::sr_range(5, 12), 30, 8).unwrap();
    assert_eq!(corpus.len(), 60);
    for pair in corpus.chunks(2) {
        assert_eq!(pair[0].label, Label::Sat);
        assert_eq!(pair[1].label, Label::Unsat);
        assert_eq!(pair[0].formula.num_vars(), pair[1].formula.num_vars());
        assert!((5..=12).contains(&pair[0].formula.num_vars()));
        assert_eq!(solve_brute(&pair[0].formula).unwrap(), Label::Sat);
        assert_eq!(solve_brute(&pair[1].formula).unwrap(), Label::Unsat);
    }
}

#[test]
fn corpora_are_deterministic() {
    for spec in [GenSpec::sr(10), GenSpec::ur(12, 51, 3), GenSpec::pr10(), GenSpec::pr40()] {
        let a = gen_corpus(&spec, 20, 99).unwrap();
        let b = gen_corpus(&spec, 20, 99).unwrap();
        assert_eq!(a, b);
        let c = gen_corpus(&spec, 20, 100).unwrap();
        assert_ne!(a, c);
    }
}

#[test]
fn invalid_specs_are_rejected() {
    assert!(gen_corpus(&GenSpec::ur(3, 10, 4), 1, 0).is_err());
    assert!(gen_corpus(&GenSpec::pr(10, 41, 3, 1.0), 1, 0).is_err());
    assert!(gen_corpus(&GenSpec::sr_range(9, 4), 1, 0).is_err());
    assert!(gen_corpus(&GenSpec::sr(1), 1, 0).is_err());
}
