use std::f64::consts::PI;

use num_complex::Complex64;
use tournament_cycles::cyclic_index::{self, cyclic_index_fast};
use tournament_cycles::spectral::{self, Matrix};
use tournament_cycles::tournament::{self, make_carousel, make_transitive};
use tournament_cycles::tournamenton::{self, StepTournamenton};

#[test]
fn goodman_on_carousels() {
    assert_eq!(tournament::goodman_count3(&make_carousel(9).unwrap()), 30);
    assert_eq!(tournament::exact_cycle_count(&make_carousel(9).unwrap(), 3).unwrap(), 30);
    assert_eq!(tournament::goodman_count3(&make_transitive(5).unwrap()), 0);
}

#[test]
fn carousel_nine_matrix_pattern() {
    let a = spectral::tournament_matrix(&make_carousel(9).unwrap());
    let m = a.matrix();
    for i in 0..9 {
        for d in 1..9 {
            let expected = if d <= 4 { 1.0 / 9.0 } else { 0.0 };
            assert_eq!(m[(i, (i + d) % 9)], expected);
        }
        assert_eq!(m[(i, i)], 1.0 / 18.0);
    }
}

#[test]
fn trace_densities() {
    let d = spectral::trace_density(&make_transitive(10).unwrap(), 3).unwrap();
    assert!((d - 0.01).abs() < 1e-15);
    let c101 = make_carousel(101).unwrap();
    let d3 = spectral::trace_density(&c101, 3).unwrap();
    assert!((d3 - 1.0).abs() < 0.05);
    assert!((tournament::normalized_density(&c101, 3).unwrap() - 1.0).abs() < 0.05);
    let d4 = spectral::trace_density(&make_carousel(201).unwrap(), 4).unwrap();
    assert!((d4 - 4.0 / 3.0).abs() < 0.05, "{d4}");
}

#[test]
fn carousel_nine_cubic_trace_matches_eigenvalues() {
    let a = spectral::tournament_matrix(&make_carousel(9).unwrap());
    let report = spectral::eigenvalues(a.matrix()).unwrap();
    let cubes: Complex64 = report.eigenvalues.iter().map(|z| z.powu(3)).sum();
    let tr = spectral::trace_power(a.matrix(), 3).unwrap();
    assert!((cubes.re - tr).abs() <= 1e-10 && cubes.im.abs() <= 1e-10);
    assert!((tr - 0.125).abs() < 0.01);
    assert!((report.eig_sum.re - a.matrix().trace()).abs() <= 1e-10);
}

#[test]
fn regular_tournaments_have_the_all_ones_eigenvector() {
    for n in [3, 7, 15, 31] {
        let a = spectral::tournament_matrix(&make_carousel(n).unwrap());
        let v = a.matrix().mul_vec(&vec![1.0; n]);
        assert!(v.iter().all(|x| (x - 0.5).abs() < 1e-14));
        let ones = vec![Complex64::new(1.0, 0.0); n];
        assert!(spectral::residual(a.matrix(), Complex64::new(0.5, 0.0), &ones) < 1e-14);
    }
}

#[test]
fn eigenpair_residuals_on_random_tournaments() {
    for seed in 0..20 {
        let t = tournament::sample_random(5 + seed as usize, seed).unwrap();
        let a = spectral::tournament_matrix(&t);
        let norm = a.matrix().frobenius_norm();
        for (lambda, v) in spectral::eigenpairs(a.matrix()).unwrap() {
            assert!(spectral::residual(a.matrix(), lambda, &v) <= 1e-8 * norm, "seed {seed}, {lambda}");
        }
    }
}

#[test]
fn transitive_spectrum_is_exact() {
    let report = spectral::eigenvalues(spectral::tournament_matrix(&make_transitive(5).unwrap()).matrix()).unwrap();
    assert!(report.eigenvalues.iter().all(|z| *z == Complex64::new(0.1, 0.0)));
    assert_eq!(report.rho, Some(0.1));
}

#[test]
fn carousel_limit_spectrum() {
    let spectrum = tournamenton::regular_spectrum(&tournamenton::carousel_tournamenton(512).unwrap()).unwrap();
    assert!((spectrum[0] - Complex64::new(0.5, 0.0)).norm() < 1e-9);
    // the pair +-i/pi, then +-i/(3 pi)
    assert!((spectrum[1].norm() - 1.0 / PI).abs() < 0.01);
    assert!((spectrum[2] - spectrum[1].conj()).norm() < 1e-9);
    assert!((spectrum[3].norm() - 1.0 / (3.0 * PI)).abs() < 0.01);
    assert!(spectrum[1].re.abs() < 0.01 && spectrum[3].re.abs() < 0.01);
    let second = tournamenton::regular_second_eigenvalue(&tournamenton::carousel_tournamenton(512).unwrap()).unwrap();
    assert!((second - 1.0 / PI).abs() < 0.01);
}

#[test]
fn dominant_traces_bound_cyclic_index() {
    let tr = spectral::trace_power(spectral::make_dominant(8).unwrap().matrix(), 8).unwrap();
    assert!(tr >= cyclic_index_fast(&cyclic_index::d8()) as f64);
    assert_eq!(cyclic_index_fast(&cyclic_index::d8_prime()), 2176);
    assert_eq!(cyclic_index_fast(&cyclic_index::d8_double_prime()), 2176);
}

#[test]
fn w_random_samples_approach_the_limit_density() {
    // samples from the carousel grid have about 4/3 of the random number of 4-cycles
    let w = tournamenton::carousel_tournamenton(64).unwrap();
    let mut total = 0.0;
    for seed in 0..8 {
        let t = tournament::sample_w_random(&w, 24, seed).unwrap();
        total += tournament::normalized_density(&t, 4).unwrap();
    }
    let mean = total / 8.0;
    assert!((mean - 4.0 / 3.0).abs() < 0.15, "{mean}");
    let half = StepTournamenton::constant_half(4);
    let t = tournament::sample_w_random(&half, 12, 1).unwrap();
    assert_eq!(t.order(), 12);
}

#[test]
fn two_c4_tournament_matrix_is_half_sum() {
    let t = cyclic_index::two_c4_tournament();
    let b = cyclic_index::d8_double_prime().to_skew_matrix();
    let expected = Matrix::ones(8).add(b.matrix()).scale(0.5);
    let adj = spectral::tournament_matrix(&t).matrix().scale(8.0);
    for i in 0..8 {
        for j in 0..8 {
            if i != j {
                assert_eq!(adj[(i, j)], expected[(i, j)]);
            }
        }
    }
}
