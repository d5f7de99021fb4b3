//! Cross-checks of the public API against independent constructions: a
//! hand-written multiplication table, ordinary complex Pauli matrices on the
//! two idempotent sectors, and textbook Lorentz matrices.

use std::f64::consts::PI;

use hyperpauli::fields::{kg_residual_lattice, LatticeField, LatticeGeometry, PlaneWaveSpinor};
use hyperpauli::sampling::{rand_element, rand_hnumber, rand_paravector, rand_unit_vector, rng};
use hyperpauli::unitary::{det_h, generate, is_unitary_h, su_basis};
use hyperpauli::{AlgebraElement, HNumber, HSpinor, Paravector, SpinTransform};
use nalgebra::{Matrix2, Matrix4, Vector4};
use num_complex::Complex64;
use rand::Rng;

type C2 = Matrix2<Complex64>;

/// Left multiplication by `a` on the basis `(1, i, j, ij)`, written out from
/// `i² = −1`, `j² = 1`, `ij = ji`.
fn left_mul(a: HNumber) -> Matrix4<f64> {
    let [x, y, v, w] = a.to_array();
    Matrix4::new(
        x, -y, v, -w, //
        y, x, w, v, //
        v, -w, x, -y, //
        w, v, y, x,
    )
}

#[test]
fn hnumber_product_matches_regular_representation() {
    let mut r = rng(1);
    for _ in 0..500 {
        let a = rand_hnumber(&mut r, 3.0);
        let b = rand_hnumber(&mut r, 3.0);
        let want = left_mul(a) * Vector4::from(b.to_array());
        let got = Vector4::from((a * b).to_array());
        assert!((want - got).norm() < 1e-13);
        // the representation is a ring homomorphism
        assert!((left_mul(a * b) - left_mul(a) * left_mul(b)).norm() < 1e-12);
    }
}

fn pauli(k: usize) -> C2 {
    let (o, z, i) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0));
    match k {
        0 => C2::new(o, z, z, o),
        1 => C2::new(z, o, o, z),
        2 => C2::new(z, -i, i, z),
        _ => C2::new(o, z, z, -o),
    }
}

/// `a` as the pair of complex matrices `Σ c_k^± σ_k` on the two sectors.
fn sectors(a: AlgebraElement) -> (C2, C2) {
    let mut plus = C2::zeros();
    let mut minus = C2::zeros();
    for k in 0..4 {
        let s = a.c[k].split();
        plus += pauli(k) * s.plus;
        minus += pauli(k) * s.minus;
    }
    (plus, minus)
}

#[test]
fn algebra_product_matches_pauli_matrices_per_sector() {
    let mut r = rng(2);
    for _ in 0..500 {
        let a = rand_element(&mut r, 1.0);
        let b = rand_element(&mut r, 1.0);
        let (ap, am) = sectors(a);
        let (bp, bm) = sectors(b);
        let (cp, cm) = sectors(a * b);
        assert!((cp - ap * bp).norm() < 1e-13);
        assert!((cm - am * bm).norm() < 1e-13);
    }
}

#[test]
fn exponential_matches_sector_matrix_exponential() {
    let mut r = rng(3);
    for _ in 0..100 {
        let a = rand_element(&mut r, 1.5);
        let (ap, am) = sectors(a);
        let (ep, em) = sectors(a.exp());
        assert!((ep - ap.exp()).norm() < 1e-11 * (1.0 + ep.norm()));
        assert!((em - am.exp()).norm() < 1e-11 * (1.0 + em.norm()));
    }
}

fn boost_matrix(n: [f64; 3], xi: f64) -> Matrix4<f64> {
    let (c, s) = (xi.cosh(), xi.sinh());
    let mut m = Matrix4::identity();
    m[(0, 0)] = c;
    for a in 0..3 {
        m[(0, a + 1)] = s * n[a];
        m[(a + 1, 0)] = s * n[a];
        for b in 0..3 {
            m[(a + 1, b + 1)] += (c - 1.0) * n[a] * n[b];
        }
    }
    m
}

fn rotation_matrix(n: [f64; 3], theta: f64) -> Matrix4<f64> {
    let (c, s) = (theta.cos(), theta.sin());
    let mut m = Matrix4::identity();
    let cross = [[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]];
    for a in 0..3 {
        for b in 0..3 {
            let delta = if a == b { 1.0 } else { 0.0 };
            m[(a + 1, b + 1)] = c * delta + s * cross[a][b] + (1.0 - c) * n[a] * n[b];
        }
    }
    m
}

#[test]
fn spin_transforms_match_lorentz_matrices() {
    let mut r = rng(4);
    for _ in 0..200 {
        let n = rand_unit_vector(&mut r);
        let x = rand_paravector(&mut r, 2.0);
        let xv = Vector4::from(x.0);

        let xi = r.gen_range(-2.0..2.0);
        let got = SpinTransform::boost(n, xi).unwrap().apply(x).unwrap();
        assert!((Vector4::from(got.0) - boost_matrix(n, xi) * xv).norm() < 1e-12 * (1.0 + xv.norm() * xi.cosh()));

        let theta = r.gen_range(-PI..PI);
        let got = SpinTransform::rotor(n, theta).unwrap().apply(x).unwrap();
        assert!((Vector4::from(got.0) - rotation_matrix(n, theta) * xv).norm() < 1e-12 * (1.0 + xv.norm()));
    }
}

#[test]
fn generated_group_elements_are_special_unitary() {
    let mut r = rng(5);
    for n in 2..=4 {
        let basis = su_basis(n);
        for _ in 0..20 {
            let phi: Vec<f64> = basis.iter().map(|_| r.gen_range(-1.0..1.0)).collect();
            let xi: Vec<f64> = basis.iter().map(|_| r.gen_range(-1.0..1.0)).collect();
            let g = generate(&basis, &phi, &xi).unwrap();
            assert!(is_unitary_h(&g, 1e-11));
            assert!((det_h(&g) - HNumber::ONE).norm() < 1e-11);
        }
    }
}

#[test]
fn lattice_residual_matches_sine_dispersion() {
    // On a commensurate grid, a plane wave is an exact eigenvector of the
    // periodic central-difference d'Alembertian, with eigenvalue
    // Σ_μ η_μμ (2/h)² sin²(p_μ h / 2).
    let p = Paravector::new([1.0, 0.0, 0.0, 0.6]);
    let wave = PlaneWaveSpinor { u: HSpinor::new(HNumber::ONE, HNumber::J), p };
    for n in [16usize, 32, 64] {
        let h = 10.0 * PI / n as f64;
        let g = LatticeGeometry::new(vec![n, n], h).unwrap();
        let field = LatticeField::sample_spinor_wave(g, &wave).unwrap();
        let s = |k: f64| (2.0 / h * (k * h / 2.0).sin()).powi(2);
        let lambda = s(p.0[0]) - s(p.0[3]);
        let m = 0.8;
        let got = kg_residual_lattice(&field, m).unwrap();
        assert!((got - (lambda - m * m).abs()).abs() < 1e-12, "n={n}: {got} vs {}", (lambda - m * m).abs());
        assert!(kg_residual_lattice(&field, lambda.sqrt()).unwrap() < 1e-12);
    }
}
