//! Randomized identity suites for the ring, the algebra, the spin group and
//! the hyperbolic unitary groups.

use std::f64::consts::PI;

use hyperpauli::pauli::levi_civita;
use hyperpauli::sampling::{rand_element, rand_hnumber, rand_paravector, rand_unit_vector, trial_rng, TrialRng};
use hyperpauli::unitary::{group_audit, lie_dimension_audit, rep_j3_k3, verify_rep_consistency, HalfInt};
use hyperpauli::{minkowski, AlgebraElement, HNumber, Paravector, SpinTransform};
use num_complex::Complex64;
use rand::Rng;

use crate::report::Report;

fn rel(a: HNumber, b: HNumber) -> f64 {
    (a - b).norm() / 1f64.max(a.norm()).max(b.norm())
}

fn rel_el(a: AlgebraElement, b: AlgebraElement) -> f64 {
    a.distance(b) / 1f64.max(a.norm()).max(b.norm())
}

#[derive(Default)]
struct Max(f64);

impl Max {
    fn see(&mut self, r: f64) {
        // propagate NaN as a failure
        if r.is_nan() || r > self.0 {
            self.0 = r;
        }
    }
}

/// A spin transform drawn as a rotor composed with a boost.
pub fn random_spin(rng: &mut TrialRng) -> SpinTransform {
    let rot = SpinTransform::rotor(rand_unit_vector(rng), rng.gen_range(-PI..PI)).expect("unit axis");
    let boost = SpinTransform::boost(rand_unit_vector(rng), rng.gen_range(-2.0..2.0)).expect("unit axis");
    rot.compose(&boost)
}

fn ring_checks(report: &mut Report, seed: u64, trials: usize, tol: impl Fn(f64) -> f64) {
    let (mut assoc, mut comm, mut dist, mut split, mut invol, mut exp) =
        (Max::default(), Max::default(), Max::default(), Max::default(), Max::default(), Max::default());
    for k in 0..trials {
        let mut rng = trial_rng(seed, k as u64);
        let a = rand_hnumber(&mut rng, 5.0);
        let b = rand_hnumber(&mut rng, 5.0);
        let c = rand_hnumber(&mut rng, 5.0);
        assoc.see(rel((a * b) * c, a * (b * c)));
        comm.see(rel(a * b, b * a));
        dist.see(rel(a * (b + c), a * b + a * c));
        split.see(rel((a * b).split().join(), (a.split() * b.split()).join()));
        for f in [HNumber::conj_full, HNumber::conj_i, HNumber::conj_j] {
            invol.see(rel(f(a * b), f(a) * f(b)));
            invol.see(rel(f(f(a)), a));
        }
        exp.see(rel(a.exp() * (-a).exp(), HNumber::ONE));
    }
    let (p, m) = (HNumber::P_PLUS, HNumber::P_MINUS);
    let idem = [rel(p * p, p), rel(m * m, m), (p * m).norm(), rel(p + m, HNumber::ONE)].into_iter().fold(0.0, f64::max);
    report.push("ring.associativity", assoc.0, tol(1e-13));
    report.push("ring.commutativity", comm.0, tol(1e-13));
    report.push("ring.distributivity", dist.0, tol(1e-13));
    report.push("ring.split_homomorphism", split.0, tol(1e-13));
    report.push("ring.involutions", invol.0, tol(1e-13));
    report.push("ring.exp_inverse", exp.0, tol(1e-10));
    report.push("ring.idempotents", idem, tol(0.0));
}

fn algebra_checks(report: &mut Report, seed: u64, trials: usize, tol: impl Fn(f64) -> f64) {
    let mut table = 0.0f64;
    for k in 1..=3 {
        for l in 1..=3 {
            let want: AlgebraElement = if k == l {
                AlgebraElement::ONE
            } else {
                (1..=3).map(|m| HNumber::IJ * AlgebraElement::e(m) * levi_civita(k, l, m)).sum()
            };
            table = table.max((AlgebraElement::e(k) * AlgebraElement::e(l)).distance(want));
        }
    }
    let mut eta = 0.0f64;
    for mu in 0..4 {
        for nu in 0..4 {
            let want = if mu != nu {
                0.0
            } else if mu == 0 {
                1.0
            } else {
                -1.0
            };
            let got = minkowski(Paravector::basis(mu), Paravector::basis(nu)).unwrap_or(f64::NAN);
            eta = eta.max((got - want).abs());
        }
    }
    let (mut assoc, mut oracle, mut rev, mut conj, mut form) =
        (Max::default(), Max::default(), Max::default(), Max::default(), Max::default());
    for k in 0..trials {
        let mut rng = trial_rng(seed, (1 << 32) + k as u64);
        let a = rand_element(&mut rng, 1.0);
        let b = rand_element(&mut rng, 1.0);
        let c = rand_element(&mut rng, 1.0);
        assoc.see(rel_el((a * b) * c, a * (b * c)));
        let coeff = (a * b).matrix_rep();
        let matrix = &a.matrix_rep() * &b.matrix_rep();
        oracle.see(coeff.entries().iter().zip(matrix.entries()).map(|(&x, &y)| (x - y).norm()).fold(0.0, f64::max));
        rev.see(rel_el((a * b).reversion(), b.reversion() * a.reversion()));
        conj.see(rel_el((a * b).conjugation(), b.conjugation() * a.conjugation()));
        let x = rand_paravector(&mut rng, 3.0);
        let q = minkowski(x, x).unwrap_or(f64::NAN);
        let xx = x.embed() * x.embed().conjugation();
        form.see(xx.distance(AlgebraElement::ONE * q) / (1.0 + q.abs()));
    }
    report.push("algebra.product_table", table, tol(1e-14));
    report.push("algebra.eta_table", eta, tol(1e-14));
    report.push("algebra.associativity", assoc.0, tol(1e-12));
    report.push("algebra.matrix_oracle", oracle.0, tol(1e-13));
    report.push("algebra.reversion_antihomomorphism", rev.0, tol(1e-12));
    report.push("algebra.conjugation_antihomomorphism", conj.0, tol(1e-12));
    report.push("algebra.paravector_quadratic_form", form.0, tol(1e-12));
}

fn spin_checks(report: &mut Report, seed: u64, trials: usize, tol: impl Fn(f64) -> f64) {
    let (mut unit, mut companion, mut residue, mut drift, mut hom, mut det, mut additivity) = (
        Max::default(),
        Max::default(),
        Max::default(),
        Max::default(),
        Max::default(),
        Max::default(),
        Max::default(),
    );
    let one = Complex64::new(1.0, 0.0);
    for k in 0..trials {
        let mut rng = trial_rng(seed, (2 << 32) + k as u64);
        let g = random_spin(&mut rng);
        let h = random_spin(&mut rng);
        unit.see(g.unitarity_residual());
        companion.see(g.companion_residual());
        let x = rand_paravector(&mut rng, 2.0);
        let (y, res) = Paravector::extract(&g.sandwich(&x.embed()));
        residue.see(res / (1.0 + x.euclidean_norm() * g.element().norm().powi(2)));
        let n2 = x.euclidean_norm().powi(2);
        drift.see((y.interval() - x.interval()).abs() / (1.0 + n2));
        let (gp, gm) = g.to_complex_pair();
        let (hp, hm) = h.to_complex_pair();
        let (ghp, ghm) = g.compose(&h).to_complex_pair();
        hom.see(((ghp - &gp * hp).norm()).max((ghm - &gm * hm).norm()));
        det.see((gp.determinant() - one).norm().max((gm.determinant() - one).norm()));
        let dir = rand_unit_vector(&mut rng);
        let (a, b) = (rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
        let composed = SpinTransform::boost(dir, a).unwrap().compose(&SpinTransform::boost(dir, b).unwrap());
        let t = composed.apply(Paravector::basis(0)).map(|p| p.0).unwrap_or([f64::NAN; 4]);
        let speed = (t[1] * t[1] + t[2] * t[2] + t[3] * t[3]).sqrt() / t[0];
        additivity.see((speed - (a + b).tanh().abs()).abs());
    }
    let z = [0.0, 0.0, 1.0];
    let cover = [
        SpinTransform::rotor(z, 2.0 * PI).unwrap().element().distance(-AlgebraElement::ONE),
        SpinTransform::rotor(z, 4.0 * PI).unwrap().element().distance(AlgebraElement::ONE),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    report.push("spin.unitarity", unit.0, tol(1e-11));
    report.push("spin.companion_unitarity", companion.0, tol(1e-11));
    report.push("spin.paravector_residue", residue.0, tol(1e-11));
    report.push("spin.norm_drift", drift.0, tol(1e-10));
    report.push("spin.double_cover", cover, tol(1e-12));
    report.push("spin.rapidity_additivity", additivity.0, tol(1e-10));
    report.push("spin.complex_pair_homomorphism", hom.0, tol(1e-12));
    report.push("spin.sl2c_determinant", det.0, tol(1e-11));
}

fn group_checks(report: &mut Report, seed: u64, trials: usize, tol: impl Fn(f64) -> f64) {
    let mut closure = Max::default();
    let mut det = Max::default();
    for (n, special) in [(2, true), (3, true), (2, false), (3, false)] {
        match group_audit(n, special, trials, seed) {
            Ok(a) => {
                closure.see(a.closure_residual);
                det.see(a.det_residual);
            }
            Err(_) => closure.see(f64::NAN),
        }
    }
    let mut rank_defect = 0.0f64;
    for n in 1..=4 {
        for special in [true, false] {
            if n == 1 && special {
                continue;
            }
            let audit = lie_dimension_audit(n, special);
            let defect = audit.map_or(f64::NAN, |a| {
                let expected = if special { n * n - 1 } else { n * n };
                (a.generator_count.abs_diff(expected) + a.numeric_rank.abs_diff(2 * expected)) as f64
            });
            rank_defect = if defect.is_nan() { f64::NAN } else { rank_defect.max(defect) };
        }
    }
    let h = HalfInt::from_twice;
    let mut eigen = 0.0f64;
    for (s, r) in [(h(1), h(0)), (h(0), h(1)), (h(1), h(1))] {
        for e in rep_j3_k3(s, r).unwrap_or_default() {
            let (sigma, rho) = (e.state.sigma.value(), e.state.rho.value());
            eigen =
                eigen.max((e.j3 - HNumber::real(rho + sigma)).norm()).max((e.k3 - HNumber::IJ * (rho - sigma)).norm());
        }
    }
    let chirality = match verify_rep_consistency() {
        Ok(r) if r.consistent => 0.0,
        _ => 1.0,
    };
    report.push("group.closure", closure.0, tol(1e-11));
    report.push("group.det_multiplicativity", det.0, tol(1e-11));
    report.push("group.dimension_audit", rank_defect, 0.0);
    report.push("group.rep_eigenvalues", eigen, tol(1e-14));
    report.push("group.chirality_sectors", chirality, 0.0);
}

/// Runs every identity suite. `tol_override` replaces each check's own
/// tolerance except for the exact integer checks.
pub fn check_identities(seed: u64, trials: usize, tol_override: Option<f64>) -> Report {
    assert!(trials >= 1, "trials must be at least 1");
    let tol = |t: f64| tol_override.unwrap_or(t);
    let mut report = Report::new("identities", seed, trials);
    ring_checks(&mut report, seed, trials, tol);
    algebra_checks(&mut report, seed, trials, tol);
    spin_checks(&mut report, seed, trials, tol);
    group_checks(&mut report, seed, trials.min(200), tol);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_and_are_deterministic() {
        let a = check_identities(42, 50, None);
        if let Some(c) = a.failures().next() {
            panic!("{c:?}");
        }
        assert!(a.pass);
        let b = check_identities(42, 50, None);
        assert_eq!(a, b);
    }

    #[test]
    fn absurd_tolerance_fails() {
        let r = check_identities(1, 5, Some(-1.0));
        assert!(!r.pass);
    }
}
