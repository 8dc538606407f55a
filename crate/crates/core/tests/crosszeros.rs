use std::f64::consts::PI;

use annulus_core::crosszeros::*;

#[test]
fn reference_zeros() {
    let cases = [
        (0.0, 2.0, 1, 3.1230309195956922051),
        (0.0, 2.0, 6, 18.846248038288379066),
        (0.0, 2.0, 7, 21.988311475481625268),
        (5.0, 1.5, 1, 7.4515676416076872679),
    ];
    for (nu, r, k, want) in cases {
        let z = zero(nu, r, k, 1e-12).unwrap();
        assert!((z.value - want).abs() < 1e-11, "nu = {nu}, R = {r}, k = {k}: {}", z.value);
        assert!(z.bracket.0 <= z.value && z.value <= z.bracket.1);
        assert!(z.bracket.1 - z.bracket.0 <= 1e-12);
        assert!(z.residual < 1e-10);
    }
}

#[test]
fn bracket_certifies_sign_change() {
    for (nu, r, k) in [(0.0, 1.1, 3), (2.5, 4.0, 9), (10.3, 1.5, 2)] {
        let z = zero(nu, r, k, 1e-6).unwrap();
        let (lo, hi) = z.bracket;
        let (flo, fhi) = (eval_cross(nu, r, lo).unwrap(), eval_cross(nu, r, hi).unwrap());
        assert!(flo * fhi <= 0.0);
        assert!(hi - lo <= 1e-6);
    }
}

#[test]
fn zeros_increase_with_order() {
    for r in [1.5, 2.0, 4.0] {
        for k in [1, 2, 5] {
            let mut prev = 0.0;
            for nu in [0.0, 0.25, 0.5, 1.0, 2.0, 3.5, 7.0] {
                let v = zero(nu, r, k, 1e-11).unwrap().value;
                assert!(v > prev, "R = {r}, k = {k}, nu = {nu}");
                prev = v;
            }
        }
    }
}

#[test]
fn one_sign_change_between_consecutive_zeros() {
    for (nu, r) in [(0.0, 2.0), (3.0, 1.5), (1.0, 4.0)] {
        let zs = first_zeros(nu, r, 12, 1e-12).unwrap();
        let step = PI / (8.0 * (r - 1.0));
        for w in zs.windows(2) {
            let (a, b) = (w[0].value + 1e-9, w[1].value - 1e-9);
            let n = ((b - a) / step).ceil() as usize;
            let mut changes = 0;
            let mut prev = eval_cross(nu, r, a).unwrap();
            for i in 1..=n {
                let z = (a + i as f64 * step).min(b);
                let f = eval_cross(nu, r, z).unwrap();
                if f.signum() != prev.signum() {
                    changes += 1;
                }
                prev = f;
            }
            assert_eq!(changes, 0, "nu = {nu}, R = {r}, between k = {} and {}", w[0].k, w[1].k);
        }
        for z in &zs {
            let (l, h) = (z.value - 1e-7, z.value + 1e-7);
            assert!(eval_cross(nu, r, l).unwrap() * eval_cross(nu, r, h).unwrap() < 0.0);
        }
    }
}

#[test]
fn mcmahon_rate() {
    let r = 2.0;
    for nu in [0.0, 1.0, 2.5] {
        let scaled: Vec<f64> = [8, 16, 32, 64, 128]
            .iter()
            .map(|&k| {
                let a = zero(nu, r, k, 1e-12).unwrap().value;
                k as f64 * (a - PI * k as f64 / (r - 1.0)).abs()
            })
            .collect();
        // k·|a − πk/(R−1)| tends to |4ν² − 1|(R − 1)/(8πR).
        let limit = (4.0 * nu * nu - 1.0).abs() * (r - 1.0) / (8.0 * PI * r);
        for v in &scaled {
            assert!(*v <= 2.0 * scaled[0] + 1e-9, "nu = {nu}: {scaled:?}");
        }
        assert!((scaled[4] - limit).abs() < 0.05 * limit.max(1e-3), "nu = {nu}: {} vs {limit}", scaled[4]);
    }
}

#[test]
fn zeros_up_to_matches_first_zeros() {
    let all = zeros_up_to(1.0, 2.0, 40.0, 1e-12).unwrap();
    let first = first_zeros(1.0, 2.0, all.len(), 1e-12).unwrap();
    assert_eq!(all.len(), 12);
    for (a, b) in all.iter().zip(&first) {
        assert_eq!(a.k, b.k);
        assert!((a.value - b.value).abs() < 1e-12);
    }
}

#[test]
fn bound_report_example() {
    let rep = check_bounds(5.0, 1.5, 3, 1e-10).unwrap();
    assert!(rep.lower_margin > 0.0 && rep.upper_margin > 0.0);
    assert!(rep.order0_margin.is_none());
    assert!(rep.holds());
}
