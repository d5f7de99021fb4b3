//! Rectangle-rule action of a free gauge field and a free massive spinor:
//! `S = Σ h^D [ ½ tr(Ā M²A) + ψ̄ (M² − m²) ψ ]` over one periodic box.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypercomplex::HNumber;
use crate::pauli::{scalar_product_general, AlgebraElement};
use crate::spin::HSpinor;

use super::lattice::{pairwise_sum, FieldValue, LatticeField};

/// All four real components are kept; the action is HNumber-valued.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ActionValue {
    pub gauge: HNumber,
    pub spinor: HNumber,
    pub total: HNumber,
}

fn gauge_part(a: &LatticeField<AlgebraElement>) -> HNumber {
    let ma = a.mass_operator();
    let density: Vec<HNumber> =
        a.values().par_iter().zip(ma.values()).map(|(&ax, &max)| scalar_product_general(ax, max)).collect();
    pairwise_sum(&density).scaled(a.geometry().cell_volume())
}

fn spinor_part(psi: &LatticeField<HSpinor>, m: f64) -> HNumber {
    let m2 = m * m;
    let mpsi = psi.mass_operator();
    let density: Vec<HNumber> =
        psi.values().par_iter().zip(mpsi.values()).map(|(&p, &mp)| p.scalar_product(&(mp - p.scaled(m2)))).collect();
    pairwise_sum(&density).scaled(psi.geometry().cell_volume())
}

/// Either field may be absent, which counts as the zero field.
pub fn action(
    gauge: Option<&LatticeField<AlgebraElement>>,
    spinor: Option<&LatticeField<HSpinor>>,
    m: f64,
) -> Result<ActionValue> {
    if let (Some(a), Some(psi)) = (gauge, spinor) {
        a.check_same_grid(psi)?;
    }
    if gauge.is_none() && spinor.is_none() {
        return Err(Error::InvalidArgument("action needs at least one field".into()));
    }
    let gauge = gauge.map_or(HNumber::ZERO, gauge_part);
    let spinor = spinor.map_or(HNumber::ZERO, |psi| spinor_part(psi, m));
    Ok(ActionValue { gauge, spinor, total: gauge + spinor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{lattice_mass_squared, LatticeGeometry, PlaneWaveGauge, PlaneWaveSpinor};
    use crate::pauli::Paravector;
    use std::f64::consts::PI;

    fn grid(n: usize, length: f64) -> LatticeGeometry {
        LatticeGeometry::new(vec![n, n], length / n as f64).unwrap()
    }

    fn spinor_field(g: &LatticeGeometry, p: [f64; 4], amp: f64) -> LatticeField<HSpinor> {
        let wave = PlaneWaveSpinor {
            u: HSpinor::new(HNumber::real(amp), HNumber::new(0.1, 0.2, -0.3, 0.4).unwrap()),
            p: Paravector::new(p),
        };
        LatticeField::sample_spinor_wave(g.clone(), &wave).unwrap()
    }

    fn null_gauge(g: &LatticeGeometry) -> LatticeField<AlgebraElement> {
        let wave = PlaneWaveGauge {
            epsilon: Paravector::new([0.2, 1.0, -0.5, 0.2]),
            k: Paravector::new([1.0, 0.0, 0.0, 1.0]),
            real_part: true,
        };
        LatticeField::sample_gauge_wave(g.clone(), &wave).unwrap()
    }

    #[test]
    fn on_shell_parts_vanish() {
        let g = grid(32, 10.0 * PI);
        let p = Paravector::new([1.0, 0.0, 0.0, 0.6]);
        let m = lattice_mass_squared(p, &g).sqrt();
        let s = action(Some(&null_gauge(&g)), Some(&spinor_field(&g, p.0, 1.0)), m).unwrap();
        let vol = g.box_volume();
        assert!(s.gauge.norm() <= 1e-9 * vol);
        assert!(s.spinor.norm() <= 1e-9 * vol);
    }

    #[test]
    fn additivity_and_bilinearity() {
        let g = grid(16, 10.0 * PI);
        let a = null_gauge(&g);
        let psi = spinor_field(&g, [1.0, 0.0, 0.0, 0.6], 1.0);
        let both = action(Some(&a), Some(&psi), 0.3).unwrap();
        let only_a = action(Some(&a), None, 0.3).unwrap();
        let only_psi = action(None, Some(&psi), 0.3).unwrap();
        assert_eq!(both.total, only_a.total + only_psi.total);

        let doubled = psi.map(|v| v.scaled(2.0));
        let s2 = action(None, Some(&doubled), 0.3).unwrap();
        assert!(s2.spinor.approx_eq(only_psi.spinor.scaled(4.0), 1e-13));
    }

    #[test]
    fn global_phase_invariance() {
        let g = grid(16, 10.0 * PI);
        let psi = spinor_field(&g, [1.0, 0.0, 0.0, 0.6], 1.0);
        let base = action(None, Some(&psi), 0.3).unwrap().spinor;
        let phase = (HNumber::I * -0.7 + HNumber::J * 0.4).exp();
        let rotated = psi.map(|v| v.scale(phase));
        let after = action(None, Some(&rotated), 0.3).unwrap().spinor;
        assert!(after.approx_eq(base, 1e-12));
    }

    #[test]
    fn grid_mismatch() {
        let a = null_gauge(&grid(16, 2.0 * PI));
        let psi = spinor_field(&grid(32, 2.0 * PI), [1.0, 0.0, 0.0, 0.0], 1.0);
        assert!(matches!(action(Some(&a), Some(&psi), 1.0), Err(Error::GridMismatch(_))));
        assert!(action(None, None, 1.0).is_err());
    }
}
