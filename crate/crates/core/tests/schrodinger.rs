use quartic_core::example::section4;
use quartic_core::ratcore::{int, rat, to_f64};
use quartic_core::schrodinger::*;
use quartic_core::spectra::{default_window, solve_constraints};
use quartic_core::{Error, MultiPoly};

fn values(v: &[Eigenvalue]) -> Vec<f64> {
    v.iter().map(|e| e.value).collect()
}

#[test]
fn harmonic_levels() {
    let pot = PotentialSpec::harmonic_y().with_domain(-20.0, 20.0);
    let ev = eigenvalues_1d(&pot, 4000, 3).unwrap();
    for (k, e) in ev.iter().enumerate() {
        assert!((e.value - (k as f64 + 0.5)).abs() < 1e-4, "{:?}", e);
        assert!(e.error_estimate < 1e-4);
    }
    let finer = eigenvalues_1d(&pot, 8000, 3).unwrap();
    for (a, b) in ev.iter().zip(&finer) {
        assert!((a.value - b.value).abs() < 1e-4);
    }
}

#[test]
fn extended_oscillator_spacing() {
    for l in 0..=2 {
        let ev = values(&eigenvalues_1d(&PotentialSpec::extended_x(int(l)), 4000, 4).unwrap());
        assert!((ev[0] - (l as f64 + 1.0)).abs() < 5e-3, "l={} {:?}", l, ev);
        for w in ev.windows(2) {
            assert!((w[1] - w[0] - 2.0).abs() < 1e-3, "l={} {:?}", l, ev);
        }
    }
}

#[test]
fn degeneracies_match_algebraic_levels() {
    let l = 1;
    let x = values(&eigenvalues_1d(&PotentialSpec::extended_x(int(l)), 4000, 6).unwrap());
    let y = values(&eigenvalues_1d(&PotentialSpec::harmonic_y(), 4000, 12).unwrap());
    let table = combined_spectrum(&x, &y, 11.0, 5e-3);
    for p in 0..=2usize {
        let e = 2.0 * p as f64 + l as f64 + 1.5;
        let lv = table.nearest(e).unwrap();
        assert!((lv.energy - e).abs() < 5e-3);
        assert_eq!(lv.multiplicity, p + 1);
    }

    let ex = section4(&MultiPoly::from_int(l)).unwrap();
    let (lo, hi) = default_window();
    let sol = solve_constraints(&ex.spec, &ex.casimir_of_h, 2, (&lo, &hi)).unwrap();
    let picked: Vec<_> = sol
        .candidates
        .into_iter()
        .filter(|c| c.energy.value() == int(2 * c.p as i64 + l) + rat(3, 2))
        .filter(|c| c.lattice_positive)
        .collect();
    assert_eq!(picked.len(), 3);
    let cmp = compare_with_algebraic(&table, &picked, 5e-3);
    assert!(cmp.all_pass(), "{:?}", cmp);
    assert!(cmp.rows.iter().all(|r| !r.excess));
    assert!(compare_with_algebraic(&table, &[], 5e-3).rows.is_empty());
    assert_eq!(to_f64(&picked[2].energy.value()), 6.5);
}

#[test]
fn small_domain_is_detected() {
    let pot = PotentialSpec::harmonic_y().with_domain(-3.0, 3.0);
    assert!(matches!(eigenvalues_1d(&pot, 1000, 6), Err(Error::BoundaryDecay { .. })));
}

#[test]
fn invalid_inputs() {
    assert!(eigenvalues_1d(&PotentialSpec::harmonic_y(), 100, 1).is_err());
    assert!(eigenvalues_1d(&PotentialSpec::extended_x(int(-1)), 1000, 1).is_err());
    let bad = PotentialSpec::extended_x(int(1)).with_domain(-1.0, 5.0);
    assert!(eigenvalues_1d(&bad, 1000, 1).is_err());
}
