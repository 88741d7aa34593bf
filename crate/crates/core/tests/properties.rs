use ncq_core::isoenergetic::{
    alpha1_by_root, alpha1_closed, efficiency_isoenergetic, ground_probability, IsoenergeticCycleSpec,
};
use ncq_core::isomagnetic::{efficiency_isomagnetic, IsomagneticCycleSpec};
use ncq_core::nc::{EffectiveField, Orientation};
use ncq_core::SolverSettings;
use proptest::prelude::*;

fn orientation() -> impl Strategy<Value = Orientation> {
    prop_oneof![Just(Orientation::Positive), Just(Orientation::Reversed)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn isomagnetic_efficiency_below_one(
        n in 0.0f64..200.0, te in -0.9f64..0.9, g in 0.0f64..2.0, alpha in 1.0f64..10.0, o in orientation()
    ) {
        let hot = EffectiveField::from_flux_quanta(n, o, g, 1.0, (1.0 - te).sqrt()).unwrap();
        let r = efficiency_isomagnetic(&IsomagneticCycleSpec::new(hot, alpha, 1.0).unwrap());
        prop_assert!(r.efficiency < 1.0);
        prop_assert!(r.q_in > 0.0 && r.q_out < 0.0);
        prop_assert!((r.work - (r.q_in + r.q_out)).abs() <= 1e-12 * r.q_in);
    }

    #[test]
    fn isoenergetic_cycle_is_consistent(
        n in 3.0f64..500.0, te in -0.9f64..0.9, g in 0.0f64..1.0, alpha in 1.01f64..5.0, o in orientation()
    ) {
        let spec = IsoenergeticCycleSpec::new(n, (1.0 - te).sqrt(), g, alpha, o).unwrap();
        if let Ok(r) = efficiency_isoenergetic(&spec) {
            let a1 = r.alpha1.unwrap();
            let a3 = r.alpha3.unwrap();
            prop_assert!(a1 > 1.0 && a3 < 1.0);
            prop_assert!(r.efficiency > 0.0 && r.efficiency < 1.0);
            prop_assert!((r.efficiency - r.efficiency_from_heats()).abs() < 1e-9);

            let root = alpha1_by_root(&spec, &SolverSettings::default()).unwrap();
            prop_assert!((a1 - root).abs() <= 1e-9 * root);

            let sp = spec.spectrum();
            let b1 = spec.b1();
            let b2 = b1 / (a1 * a1);
            let b3 = b2 / (alpha * alpha);
            let b4 = b3 / (a3 * a3);
            for k in 0..=50 {
                let t = k as f64 / 50.0;
                prop_assert!(ground_probability(&sp, b1 + (b2 - b1) * t, b1, 1.0).is_ok());
                prop_assert!(ground_probability(&sp, b3 + (b4 - b3) * t, b3, 0.0).is_ok());
            }
        }
    }

    #[test]
    fn positive_orientation_above_threshold_is_admissible(
        te in -0.9f64..0.9, g in 0.0f64..1.0, alpha in 1.01f64..5.0, extra in 0.01f64..100.0
    ) {
        // N_Φ ≥ 2√2 σ is enough when the field and γ point the same way
        let sigma = (1.0 - te).sqrt();
        let n = 8f64.sqrt() * sigma + extra;
        let spec = IsoenergeticCycleSpec::new(n, sigma, g, alpha, Orientation::Positive).unwrap();
        prop_assert!(alpha1_closed(&spec).is_ok());
        prop_assert!(efficiency_isoenergetic(&spec).is_ok());
    }
}
