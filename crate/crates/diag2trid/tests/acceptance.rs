//! Acceptance suite: one test per shipped accuracy/behaviour criterion,
//! each printing a `[PASS]`/`[FAIL]` line (run with `-- --nocapture` to see
//! them). Tolerances are pinned here, not tuned at runtime.

use diag2trid::bench::{
    Algorithm, ExperimentConfig, random_spectrum, realization_spectrum, run_experiment,
    worst_error,
};
use diag2trid::householder::{conjugate_diagonal, reflection_to_uniform, tridiagonalize};
use diag2trid::poly::Polynomial;
use diag2trid::schmeisser::naive_solve;
use diag2trid::tridiagonal::SymmetricTridiagonal;
use diag2trid::verify::{dptz_identity_residual, equal_up_to_offdiag_sign};
use diag2trid::{diag2trid, verify};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pass(name: &str, detail: String) {
    println!("[PASS] {name}: {detail}");
}

#[test]
fn criterion_1_hand_example_exactness() {
    let b2 = (2.0_f64 / 3.0).sqrt();
    let b3 = (1.0_f64 / 3.0).sqrt();

    let t = naive_solve(&[-1.0, 0.0, 1.0]).unwrap();
    for (i, &a) in t.diag().iter().enumerate() {
        assert!(a.abs() <= 1e-12, "naive diag[{i}] = {a:e}");
    }
    assert!((t.offdiag()[0] - b2).abs() <= 1e-12, "naive offdiag[0]");
    assert!((t.offdiag()[1] - b3).abs() <= 1e-12, "naive offdiag[1]");

    let (s, _) = diag2trid(&[-1.0, 0.0, 1.0]).unwrap();
    for (i, &a) in s.diag().iter().enumerate() {
        assert!(a.abs() <= 1e-10, "diag2trid diag[{i}] = {a:e}");
    }
    assert!((s.offdiag()[0].abs() - b2).abs() <= 1e-10, "diag2trid |offdiag[0]|");
    assert!((s.offdiag()[1].abs() - b3).abs() <= 1e-10, "diag2trid |offdiag[1]|");

    pass(
        "criterion 1",
        format!(
            "λ = (−1, 0, 1) gives diag (0,0,0) and offdiag (√(2/3), √(1/3)) on both routes \
             (naive to 1e−12, diag2trid to 1e−10 in magnitude)"
        ),
    );
}

#[test]
fn criterion_2_equivalence_at_desk_scale() {
    let start = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC2);
    let mut worst_dev = 0.0_f64;
    for trial in 0..50usize {
        let n = 2 + trial % 11; // cycles 2..=12
        let lambdas = random_spectrum(n, (-10.0, 10.0), 0.5, &mut rng).unwrap();
        let s = naive_solve(&lambdas)
            .unwrap_or_else(|e| panic!("naive route broke down at n = {n}: {e}"));
        let (t, _) = diag2trid(&lambdas).unwrap();
        let cmp = equal_up_to_offdiag_sign(&s, &t, 1e-6).unwrap();
        assert!(
            cmp.is_equal(),
            "trial {trial} (n = {n}): routes disagree: {cmp}"
        );
        worst_dev = worst_dev
            .max(cmp.max_diag_deviation)
            .max(cmp.max_offdiag_deviation);
    }
    pass(
        "criterion 2",
        format!(
            "both routes agree up to off-diagonal signs on 50 spectra (n = 2..12, gaps ≥ 0.5); \
             worst deviation {worst_dev:.2e} vs tol 1e-6, in {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_3_naive_route_collapse() {
    let start = std::time::Instant::now();
    let cfg = ExperimentConfig {
        n_values: vec![10, 20, 25, 30, 35],
        algorithms: vec![Algorithm::Naive],
        ..Default::default()
    };
    let records = run_experiment(&cfg).unwrap();
    let mean_at = |n: usize| {
        records
            .iter()
            .find(|r| r.n == n)
            .map(|r| (r.mean_worst_error, r.failures))
            .unwrap()
    };
    let (m10, _f10) = mean_at(10);
    let (m20, f20) = mean_at(20);
    let (m30, f30) = mean_at(30);
    let (m35, f35) = mean_at(35);

    assert!(
        m10 < 1e-4,
        "naive mean_worst_error at n = 10 should be < 1e-4, got {m10:e}"
    );
    assert!(
        m30 > 1.0 && m20 <= 1.0 && m35 > 1.0,
        "naive-route mean_worst_error must cross 1 within n ∈ [20, 35] and exceed 1 at n = 30; \
         measured means (breakdowns excluded): n=20 → {m20:.3e} ({f20}/100 breakdowns), \
         n=25 → {:.3e}, n=30 → {m30:.3e} ({f30}/100), n=35 → {m35:.3e} ({f35}/100). \
         The realizations that would carry errors ≥ 1 terminate with non-positive γ in the \
         division chain and are excluded from the mean by design, so the surviving mean \
         saturates near 1e-2 while the failure count explodes instead; the collapse shows up \
         in the `failures` column, not in this mean. See the decisions ledger for the analysis.",
        mean_at(25).0
    );

    pass(
        "criterion 3",
        format!(
            "naive route: mean {m10:.2e} at n=10, {m30:.2e} at n=30, crossing 1 in [20,35], \
             in {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_4_stable_route_accuracy() {
    let start = std::time::Instant::now();
    let cfg = ExperimentConfig::default();
    let mut worst_ratio = 0.0_f64;
    for n in [10usize, 50, 100, 200] {
        for idx in 0..20 {
            let lambdas = realization_spectrum(&cfg, n, idx).unwrap();
            let (t, _) = diag2trid(&lambdas).unwrap();
            let err = worst_error(&lambdas, &t.eigenvalues()).unwrap();
            let max_abs = lambdas.iter().fold(0.0_f64, |m, l| m.max(l.abs()));
            let bound = 1e-10 * n as f64 * max_abs;
            assert!(
                err <= bound,
                "n = {n}, realization {idx}: worst error {err:e} exceeds {bound:e}"
            );
            worst_ratio = worst_ratio.max(err / bound);
        }
    }
    pass(
        "criterion 4",
        format!(
            "diag2trid recovers uniform spectra at n ∈ {{10,50,100,200}} within \
             1e-10·n·max|λ| (worst margin ratio {worst_ratio:.2e}), in {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_5_first_row_uniformity() {
    let start = std::time::Instant::now();
    let cfg = ExperimentConfig::default();
    let mut worst = 0.0_f64;
    for n in 2..=100usize {
        for idx in 0..10 {
            let lambdas = realization_spectrum(&cfg, n, idx).unwrap();
            let (_, w) = diag2trid(&lambdas).unwrap();
            let r = verify::first_row_uniform_residual(&w);
            assert!(r <= 1e-10, "n = {n}, realization {idx}: residual {r:e}");
            worst = worst.max(r);
        }
    }
    pass(
        "criterion 5",
        format!(
            "first row of W equals e/√n to 1e-10 for n = 2..100, 10 spectra each \
             (worst {worst:.2e}), in {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_6_eigenvector_component_identity() {
    let start = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC6);
    let mut worst = 0.0_f64;
    for trial in 0..50 {
        let n = 1 + (trial as usize % 15);
        // Weak diagonal disorder relative to the coupling keeps the
        // eigenvectors delocalized, so their first components stay well
        // above the f64 noise floor and the identity is actually testable.
        let diag: Vec<f64> = (0..n).map(|_| rng.random_range(-0.2..=0.2)).collect();
        let offdiag: Vec<f64> = (0..n.saturating_sub(1))
            .map(|_| rng.random_range(0.9..=1.1))
            .collect();
        let t = SymmetricTridiagonal::new(diag, offdiag).unwrap();
        let residuals = dptz_identity_residual(&t).unwrap();
        for (i, r) in residuals.iter().enumerate() {
            assert!(
                *r <= 1e-8,
                "trial {trial} (n = {n}), eigenvalue {i}: residual {r:e}"
            );
            worst = worst.max(*r);
        }
    }
    pass(
        "criterion 6",
        format!(
            "|v₁|²·p′(λ) = p_M₁(λ) holds to 1e-8 on 50 random unreduced matrices \
             (n ≤ 15, separated spectra); worst residual {worst:.2e}, in {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_7_accurate_charpoly_despite_eigenvalue_damage() {
    let start = std::time::Instant::now();
    let cfg = ExperimentConfig::default();
    let n = 30;
    let mut damaged = 0usize;
    let mut worst_coeff_rel = 0.0_f64;
    let mut worst_eig_err = 0.0_f64;
    for idx in 0..100 {
        let lambdas = realization_spectrum(&cfg, n, idx).unwrap();
        let Ok(t) = naive_solve(&lambdas) else {
            continue; // breakdowns carry no matrix to compare
        };
        let eig_err = worst_error(&lambdas, &t.eigenvalues()).unwrap();
        if eig_err < 1e-5 {
            continue; // keep realizations with genuine eigenvalue damage
        }
        damaged += 1;
        worst_eig_err = worst_eig_err.max(eig_err);
        let u = Polynomial::from_roots(&lambdas);
        let p = t.charpoly();
        for k in 0..=n {
            let (a, b) = (p.coeff(k), u.coeff(k));
            let rel = (a - b).abs() / a.abs().max(b.abs()).max(f64::MIN_POSITIVE);
            assert!(
                rel <= 1e-6,
                "realization {idx}, coefficient {k}: relative error {rel:e} \
                 (eigenvalue error was {eig_err:e})"
            );
            worst_coeff_rel = worst_coeff_rel.max(rel);
        }
    }
    assert!(
        damaged >= 10,
        "expected a healthy population of damaged realizations at n = 30, found {damaged}"
    );
    pass(
        "criterion 7",
        format!(
            "{damaged} realizations at n = 30 with eigenvalue errors up to {worst_eig_err:.2e} \
             still reproduce the expanded coefficients to {worst_coeff_rel:.2e} relative \
             (tol 1e-6), in {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_8_permutation_invariance() {
    let start = std::time::Instant::now();
    let cfg = ExperimentConfig::default();
    let n = 20;
    let sorted = realization_spectrum(&cfg, n, 0).unwrap();
    let (t_ref, _) = diag2trid(&sorted).unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(0xC8);
    let mut worst = 0.0_f64;
    for perm_index in 0..5 {
        let mut permuted = sorted.clone();
        permuted.shuffle(&mut rng);
        // The construction pipeline itself has no ordering requirement;
        // only the validated diag2trid entry point does.
        let q = reflection_to_uniform(n);
        let a = conjugate_diagonal(&permuted, &q).unwrap();
        let (t_perm, _) = tridiagonalize(&a);
        for i in 0..n {
            let dev = (t_ref.diag()[i] - t_perm.diag()[i]).abs();
            assert!(dev <= 1e-10, "permutation {perm_index}, diag {i}: dev {dev:e}");
            worst = worst.max(dev);
        }
        for i in 0..n - 1 {
            let dev = (t_ref.offdiag()[i].abs() - t_perm.offdiag()[i].abs()).abs();
            assert!(
                dev <= 1e-10,
                "permutation {perm_index}, |offdiag| {i}: dev {dev:e}"
            );
            worst = worst.max(dev);
        }
    }
    pass(
        "criterion 8",
        format!(
            "5 random permutations of an n = 20 spectrum give identical diag and |offdiag| \
             (worst deviation {worst:.2e} vs tol 1e-10), in {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_9_bench_determinism() {
    let start = std::time::Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let out_a = dir.path().join("a.csv");
    let out_b = dir.path().join("b.csv");
    let flags = |out: &std::path::Path| {
        std::process::Command::new(env!("CARGO_BIN_EXE_diag2trid"))
            .args([
                "bench",
                "--n-min",
                "2",
                "--n-max",
                "40",
                "--step",
                "2",
                "--realizations",
                "30",
                "--seed",
                "1234",
                "--out",
            ])
            .arg(out)
            .output()
            .unwrap()
    };
    let run_a = flags(&out_a);
    let run_b = flags(&out_b);
    assert!(run_a.status.success(), "first run failed: {run_a:?}");
    assert!(run_b.status.success(), "second run failed: {run_b:?}");
    let bytes_a = std::fs::read(&out_a).unwrap();
    let bytes_b = std::fs::read(&out_b).unwrap();
    assert_eq!(bytes_a, bytes_b, "CSV outputs differ between identical runs");
    // Summary tables match too, once the destination-path line is dropped.
    let table = |out: &[u8]| {
        String::from_utf8_lossy(out)
            .lines()
            .filter(|l| !l.starts_with("wrote "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(table(&run_a.stdout), table(&run_b.stdout), "summary tables differ");
    pass(
        "criterion 9",
        format!(
            "two `bench` runs with identical flags produced byte-identical CSV \
             ({} bytes), in {:.2?}",
            bytes_a.len(),
            start.elapsed()
        ),
    );
}
