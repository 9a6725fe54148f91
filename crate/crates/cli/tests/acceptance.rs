//! End-to-end acceptance checks. Run with `cargo test --test acceptance`;
//! prints one timed PASS/FAIL line per criterion and exits nonzero if any
//! fails.

use std::cell::OnceCell;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use quartic_core::algebra::{casimir_coefficients, close_jacobi, reduction_check, AlgebraSpec, HConst, Mode, H};
use quartic_core::example::{factored_phi, section4, u_roots};
use quartic_core::oscillator::{phi_closed, phi_oracle, realize, CaseKind, N, U};
use quartic_core::poisson::{jacobi_residual, solve_casimir};
use quartic_core::ratcore::{int, rat, to_f64, MultiPoly, Rational};
use quartic_core::schrodinger::{combined_spectrum_estimated, compare_with_algebraic, eigenvalues_1d, PotentialSpec};
use quartic_core::spectra::{
    build_rep, default_window, fit_casimir_coefficients, solve_constraints, verify_algebra, verify_identities, FockRep,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const MATRIX_TOL: f64 = 1e-9;
const FIT_TOL: f64 = 1e-8;
const CLUSTER_TOL: f64 = 5e-3;
const GRID_POINTS: usize = 4000;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn h_poly(rng: &mut StdRng, deg: u32) -> MultiPoly {
    (0..=deg).fold(MultiPoly::zero(), |acc, k| {
        &acc + &(&MultiPoly::constant(small(rng)) * &MultiPoly::var(H).pow(k))
    })
}

fn random_spec(rng: &mut StdRng, mode: Mode, with_h: bool) -> AlgebraSpec {
    let mut s = AlgebraSpec::zero(mode);
    s.tau = small(rng);
    s.lambda = small(rng);
    s.beta = small(rng);
    for c in HConst::ALL {
        let deg = if with_h { rng.gen_range(0..=c.cap().min(2)) } else { 0 };
        *s.get_mut(c) = h_poly(rng, deg);
    }
    close_jacobi(&s)
}

fn classical_casimir() -> Outcome {
    let mut rng = StdRng::seed_from_u64(101);
    for i in 0..50 {
        let s = random_spec(&mut rng, Mode::Classical, i % 2 == 0);
        let solved = solve_casimir(&s).map_err(|e| format!("spec {}: {}", i, e))?;
        ensure(solved == casimir_coefficients(&s), || format!("spec {}: solver and closed form differ", i))?;
    }
    Ok("50 specs, exact match".into())
}

fn classical_jacobi() -> Outcome {
    let mut rng = StdRng::seed_from_u64(102);
    for i in 0..20 {
        let s = random_spec(&mut rng, Mode::Classical, i % 3 == 0);
        ensure(jacobi_residual(&s).map_err(|e| e.to_string())?.is_zero(), || format!("closed spec {} has residual", i))?;
        let mut bad = s.clone();
        let d = bad.derived.as_mut().expect("closed spec carries derived constants");
        let (name, target) = match i % 4 {
            0 => ("omega", &mut d.omega),
            1 => ("sigma", &mut d.sigma),
            2 => ("rho", &mut d.rho),
            _ => ("eta", &mut d.eta),
        };
        *target = &*target + &MultiPoly::constant(rat(1, 1 + i as i64));
        ensure(!jacobi_residual(&bad).map_err(|e| e.to_string())?.is_zero(), || {
            format!("perturbing {} in case {} went unnoticed", name, i)
        })?;
    }
    Ok("20 closed specs zero, 20 perturbations nonzero".into())
}

struct ExampleReps {
    reps: Vec<(i64, FockRep, AlgebraSpec)>,
}

fn example_reps(ls: &[i64], p_max: usize) -> Result<ExampleReps, String> {
    let mut reps = Vec::new();
    for &l in ls {
        let ex = section4(&MultiPoly::from_int(l)).map_err(|e| e.to_string())?;
        let (lo, hi) = default_window();
        let sol = solve_constraints(&ex.spec, &ex.casimir_of_h, p_max, (&lo, &hi)).map_err(|e| e.to_string())?;
        let real = realize(&ex.spec).map_err(|e| e.to_string())?;
        let sf = phi_closed(&ex.spec, &ex.casimir_of_h, &MultiPoly::var(U)).map_err(|e| e.to_string())?;
        for p in 0..=p_max {
            let e = int(2 * p as i64 + l) + rat(3, 2);
            let c = sol
                .candidates
                .iter()
                .find(|c| c.p == p && c.energy.exact.as_ref() == Some(&e))
                .ok_or_else(|| format!("l={} p={}: no candidate at E = {}", l, p, e))?;
            let rep = build_rep(&real, &sf, c).map_err(|e| format!("l={} p={}: {}", l, p, e))?;
            reps.push((l, rep, ex.spec.clone()));
        }
    }
    Ok(ExampleReps { reps })
}

fn matrix_relations(reps: &ExampleReps) -> Outcome {
    let mut worst = 0.0f64;
    for (l, rep, spec) in &reps.reps {
        let v = verify_algebra(rep, spec, MATRIX_TOL).map_err(|e| e.to_string())?;
        for name in ["[A,B] = C", "[A,C]", "[B,C]", "K scalar", "Jacobi"] {
            ensure(v.get(name).is_some(), || format!("missing check {}", name))?;
        }
        ensure(v.all_pass(), || format!("l={} p={}: {:?}", l, rep.p, v.entries.iter().filter(|e| !e.pass).collect::<Vec<_>>()))?;
        worst = worst.max(v.max_residual());
    }
    Ok(format!("{} reps, max residual {:.1e}", reps.reps.len(), worst))
}

fn identities(reps: &ExampleReps) -> Outcome {
    let mut worst = 0.0f64;
    for (l, rep, spec) in &reps.reps {
        let v = verify_identities(rep, spec, MATRIX_TOL).map_err(|e| e.to_string())?;
        ensure(v.entries.len() == 31, || format!("expected 31 checks, got {}", v.entries.len()))?;
        ensure(v.all_pass(), || format!("l={} p={}: {:?}", l, rep.p, v.entries.iter().filter(|e| !e.pass).collect::<Vec<_>>()))?;
        worst = worst.max(v.max_residual());
    }
    Ok(format!("29 identities + 2 closing relations on {} reps, max residual {:.1e}", reps.reps.len(), worst))
}

fn oscillator_spec(rng: &mut StdRng, case: CaseKind) -> AlgebraSpec {
    let mut s = AlgebraSpec::zero(Mode::Quantum);
    s.tau = small(rng);
    s.lambda = small(rng);
    for p in [&mut s.alpha, &mut s.gamma, &mut s.epsilon, &mut s.mu, &mut s.nu, &mut s.xi, &mut s.zeta] {
        *p = MultiPoly::constant(small(rng));
    }
    if case == CaseKind::Case1 {
        let d = rat(rng.gen_range(1..=6), rng.gen_range(1..=3));
        s.delta = MultiPoly::constant(&d * &d);
    } else {
        s.delta = MultiPoly::constant(small(rng));
        s.beta = rat(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 }, rng.gen_range(1..=3));
    }
    close_jacobi(&s)
}

fn structure_functions() -> Outcome {
    let mut rng = StdRng::seed_from_u64(105);
    let mut skipped = 0;
    for case in [CaseKind::Case1, CaseKind::Case2] {
        let mut done = 0;
        while done < 30 {
            let s = oscillator_spec(&mut rng, case);
            let k = small(&mut rng);
            // s = n + u is never 0, −1 or −1/2, so Case 2 ρ² stays finite.
            let u = rat(2 * rng.gen_range(-20..=20) + 1, 7);
            let sf = phi_closed(&s, &MultiPoly::constant(k.clone()), &MultiPoly::constant(u.clone()))
                .map_err(|e| format!("{:?}: {}", case, e))?;
            let oracle: Result<Vec<Rational>, _> = (0..=12).map(|n| phi_oracle(&s, &k, &u, n)).collect();
            let Ok(oracle) = oracle else {
                skipped += 1;
                continue;
            };
            for (n, want) in oracle.iter().enumerate() {
                let got = sf.eval(n as i64, &[]).map_err(|e| e.to_string())?;
                ensure(got == *want, || format!("{:?} set {}: N = {}: closed {} vs oracle {}", case, done, n, got, want))?;
            }
            done += 1;
        }
    }
    Ok(format!("30 + 30 parameter sets, N = 0..12 exact ({} singular draws redrawn)", skipped))
}

fn example_exactness() -> Outcome {
    let l = MultiPoly::var("l");
    let e = MultiPoly::var(H);
    let x = MultiPoly::var(N);
    let k = |n: i64| MultiPoly::from_int(n);
    let ex = section4(&l).map_err(|e| e.to_string())?;
    let sf = phi_closed(&ex.spec, &ex.casimir_of_h, &MultiPoly::var(U)).map_err(|e| e.to_string())?;
    ensure(sf.phi == factored_phi(&l), || "closed form differs from the factored structure function".into())?;

    let phi0 = sf.phi.subs(&[(N, MultiPoly::zero())]);
    let roots = u_roots(&l, &e);
    let lead = phi0.coefficient_of(U, 5);
    let product = roots.iter().fold(lead, |acc, r| &acc * &(&MultiPoly::var(U) - r));
    ensure(phi0.degree_in(U) == 5 && product == phi0, || "Phi(0) is not the product over u1..u5".into())?;

    let at_u5 = sf.phi.subs(&[(U, roots[4].clone())]);
    let two_l = l.scale(&int(2));
    let two_x = x.scale(&int(2));
    let want = [
        &(&(&k(1) + &e.scale(&int(2))) - &two_l) - &x.scale(&int(4)),
        &(&k(-1) + &two_l) + &two_x,
        &(&k(1) + &two_l) + &two_x,
        &(&k(3) + &two_l) + &two_x,
    ]
    .iter()
    .fold(x.scale(&rat(1, 2)), |acc, f| &acc * f);
    ensure(at_u5 == want, || format!("Phi at u5 is {}", at_u5))?;

    let mut levels = 0;
    for li in 0..=2i64 {
        let exl = section4(&MultiPoly::from_int(li)).map_err(|e| e.to_string())?;
        let (lo, hi) = default_window();
        let sol = solve_constraints(&exl.spec, &exl.casimir_of_h, 4, (&lo, &hi)).map_err(|e| e.to_string())?;
        let sfl = phi_closed(&exl.spec, &exl.casimir_of_h, &MultiPoly::var(U)).map_err(|e| e.to_string())?;
        for p in 0..=4i64 {
            let en = int(2 * p + li) + rat(3, 2);
            let c = sol
                .candidates
                .iter()
                .find(|c| c.p == p as usize && c.energy.exact.as_ref() == Some(&en) && c.lattice_positive)
                .ok_or_else(|| format!("l={} p={}: E = {} not found", li, p, en))?;
            let u = c.u.exact.clone().ok_or("inexact u")?;
            let phi_x = sfl.at(&[(U, u), (H, en.clone())]);
            let lm = k(li);
            let want = [
                &k(p + 1) - &x,
                &(&two_x + &lm.scale(&int(2))) - &k(1),
                &(&two_x + &lm.scale(&int(2))) + &k(1),
                &(&two_x + &lm.scale(&int(2))) + &k(3),
            ]
            .iter()
            .fold(x.scale(&int(2)), |acc, f| &acc * f);
            ensure(phi_x == want, || format!("l={} p={}: Phi(x) = {}", li, p, phi_x))?;
            levels += 1;
        }
    }
    Ok(format!("factored form, u1..u5, Phi at u5, and {} levels E = 2p+l+3/2 exact", levels))
}

fn casimir_fit() -> Outcome {
    let reps = example_reps(&[1], 6)?;
    let (_, rep, spec) = reps.reps.into_iter().find(|(_, r, _)| r.dim() == 7).ok_or("no dim-7 rep")?;
    let fit = fit_casimir_coefficients(&rep).map_err(|e| e.to_string())?;
    let want = casimir_coefficients(&spec.at_energy_value(&rep.energy)).eval(&[]).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for (i, w) in want.iter().enumerate() {
        let w = to_f64(w);
        let err = (fit.c[i] - w).abs() / (1.0 + w.abs());
        worst = worst.max(err);
        ensure(err < FIT_TOL, || format!("c{}: fit {} vs {}", i + 1, fit.c[i], w))?;
    }
    let kerr = (fit.casimir_value - rep.casimir_value).abs() / (1.0 + rep.casimir_value.abs());
    ensure(kerr < FIT_TOL, || format!("K: fit {} vs {}", fit.casimir_value, rep.casimir_value))?;
    Ok(format!("l=1, p=6, max scaled error {:.1e}", worst.max(kerr)))
}

fn numerical_spectrum() -> Outcome {
    let l = 1i64;
    let x = eigenvalues_1d(&PotentialSpec::extended_x(int(l)), GRID_POINTS, 6).map_err(|e| e.to_string())?;
    let y = eigenvalues_1d(&PotentialSpec::harmonic_y(), GRID_POINTS, 12).map_err(|e| e.to_string())?;
    let table = combined_spectrum_estimated(&x, &y, 11.0, CLUSTER_TOL);
    let mut worst = 0.0f64;
    for p in 0..=2usize {
        let e = 2.0 * p as f64 + l as f64 + 1.5;
        let lv = table.nearest(e).ok_or("empty table")?;
        worst = worst.max((lv.energy - e).abs());
        ensure((lv.energy - e).abs() < CLUSTER_TOL, || format!("p={}: nearest level {}", p, lv.energy))?;
        ensure(lv.multiplicity == p + 1, || format!("p={}: multiplicity {}", p, lv.multiplicity))?;
    }
    let ex = section4(&MultiPoly::from_int(l)).map_err(|e| e.to_string())?;
    let (lo, hi) = default_window();
    let sol = solve_constraints(&ex.spec, &ex.casimir_of_h, 2, (&lo, &hi)).map_err(|e| e.to_string())?;
    let physical: Vec<_> = sol
        .candidates
        .into_iter()
        .filter(|c| c.lattice_positive && c.energy.exact == Some(int(2 * c.p as i64 + l) + rat(3, 2)))
        .collect();
    let cmp = compare_with_algebraic(&table, &physical, CLUSTER_TOL);
    ensure(cmp.rows.len() == 3 && cmp.all_pass() && cmp.rows.iter().all(|r| !r.excess), || format!("{:?}", cmp))?;
    Ok(format!("l=1, {} points, levels p=0..2 within {:.1e}, multiplicities 1,2,3", GRID_POINTS, worst))
}

fn reductions() -> Outcome {
    let mut rng = StdRng::seed_from_u64(109);
    let mut specs = Vec::new();
    for mode in [Mode::Classical, Mode::Quantum] {
        for i in 0..10 {
            specs.push(random_spec(&mut rng, mode, i % 2 == 0));
        }
    }
    specs.push(section4(&MultiPoly::var("l")).map_err(|e| e.to_string())?.spec);
    let mut checks = 0;
    for (i, s) in specs.iter().enumerate() {
        let r = reduction_check(s);
        ensure(r.all_pass(), || format!("spec {}: {:?}", i, r.checks.iter().filter(|c| !c.1).collect::<Vec<_>>()))?;
        checks += r.checks.len();
    }
    Ok(format!("{} specs, {} symbolic checks", specs.len(), checks))
}

fn main() -> ExitCode {
    let mut all = true;
    let mut run = |id: u32, name: &str, budget: Option<Duration>, f: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let res = f();
        let dt = t.elapsed();
        let over = budget.is_some_and(|b| dt > b);
        let (status, detail) = match (&res, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{} but exceeded {:?}", d, budget.unwrap())),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        all &= status == "PASS";
        let limit = budget.map_or(String::new(), |b| format!(" (limit {}s)", b.as_secs()));
        println!("{} criterion {} {}: {:.2}s{}: {}", status, id, name, dt.as_secs_f64(), limit, detail);
    };

    let secs = |s: u64| Some(Duration::from_secs(s));
    run(1, "classical Casimir vs bracket solver", secs(60), &classical_casimir);
    run(2, "classical Jacobi residual", None, &classical_jacobi);
    let reps: OnceCell<Result<ExampleReps, String>> = OnceCell::new();
    let with_reps = |f: fn(&ExampleReps) -> Outcome| {
        let reps = &reps;
        move || match reps.get_or_init(|| example_reps(&[0, 1, 2], 4)) {
            Ok(r) => f(r),
            Err(e) => Err(e.clone()),
        }
    };
    run(3, "quantum relations on example reps", secs(10), &with_reps(matrix_relations));
    run(4, "identities and closing relations", None, &with_reps(identities));
    run(5, "structure functions vs oracle", secs(120), &structure_functions);
    run(6, "example reproduced exactly", None, &example_exactness);
    run(7, "dim-7 Casimir fit", None, &casimir_fit);
    run(8, "finite-difference spectrum", secs(30), &numerical_spectrum);
    run(9, "limit reductions", None, &reductions);

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
