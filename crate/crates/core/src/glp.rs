//! The explicit local model groupoid in double precision: arrows (z, u) over
//! the punctured disc with source z and target exp(u z^m) z, where
//! m = n(k-1) is the level-n exponent.
//!
//! The composition law is forced by target coherence: from
//! t(z, u) = exp(u z^m) z one gets
//! (z2, u2) . (z1, u1) = (z1, u2 exp(m u1 z1^m) + u1) whenever z2 = t(z1, u1).
//! At level n = 1 this is the classical chart; for n > 1 the exponent m
//! replaces k-1 uniformly, which is the unique choice closing the axioms
//! (associativity is then exact up to rounding).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Chart parameters: pole order k >= 2, level n >= 1, composability tolerance.
#[derive(Clone, Copy, Debug)]
pub struct GlpChart {
    pub k: u32,
    pub n: u32,
    pub tol: f64,
}

/// An arrow of the chart at base point z with unipotent parameter u.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GlpArrow {
    pub z: Complex64,
    pub u: Complex64,
}

impl GlpChart {
    pub fn new(k: u32, n: u32, tol: f64) -> Result<GlpChart> {
        if k < 2 {
            return Err(Error::Argument("pole order k must be >= 2".into()));
        }
        if n < 1 {
            return Err(Error::Argument("level n must be >= 1".into()));
        }
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::Argument("tolerance must be positive".into()));
        }
        Ok(GlpChart { k, n, tol })
    }

    /// The exponent m = n(k-1).
    pub fn exponent(&self) -> i32 {
        (self.n * (self.k - 1)) as i32
    }

    pub fn arrow(&self, z: Complex64, u: Complex64) -> Result<GlpArrow> {
        if z.norm() == 0.0 {
            return Err(Error::Argument("base point must be nonzero".into()));
        }
        Ok(GlpArrow { z, u })
    }

    pub fn source(&self, a: &GlpArrow) -> Complex64 {
        a.z
    }

    /// t(z, u) = exp(u z^m) z.
    pub fn target(&self, a: &GlpArrow) -> Complex64 {
        (a.u * a.z.powi(self.exponent())).exp() * a.z
    }

    /// Composability defect |z2 - t(a1)| relative to the magnitudes involved.
    pub fn gap(&self, second: &GlpArrow, first: &GlpArrow) -> f64 {
        let t = self.target(first);
        (second.z - t).norm() / t.norm().max(second.z.norm()).max(1e-300)
    }

    /// second . first, defined when the source of `second` matches the target
    /// of `first` within tolerance. The result sits at the first arrow's base.
    pub fn compose(&self, second: &GlpArrow, first: &GlpArrow) -> Result<GlpArrow> {
        let gap = self.gap(second, first);
        if gap > self.tol {
            return Err(Error::Composability { gap, tol: self.tol });
        }
        let m = self.exponent();
        let zm = first.z.powi(m);
        let u = second.u * (Complex64::from(m as f64) * first.u * zm).exp() + first.u;
        Ok(GlpArrow { z: first.z, u })
    }

    /// Closed-form inverse: an arrow at t(a) with u' = -u exp(-m u z^m).
    pub fn inverse(&self, a: &GlpArrow) -> GlpArrow {
        let m = self.exponent();
        let zm = a.z.powi(m);
        let u = -a.u * (-Complex64::from(m as f64) * a.u * zm).exp();
        GlpArrow { z: self.target(a), u }
    }

    /// The identity arrow at z.
    pub fn unit(&self, z: Complex64) -> GlpArrow {
        GlpArrow { z, u: Complex64::new(0.0, 0.0) }
    }
}

/// Numerical audit of the groupoid axioms over seeded random data.
#[derive(Clone, Debug, Serialize)]
pub struct GlpReport {
    pub k: u32,
    pub n: u32,
    pub trials: u32,
    pub seed: u64,
    pub tol: f64,
    pub max_assoc_err: f64,
    pub max_roundtrip_err: f64,
    pub max_target_coherence_err: f64,
    pub units_exact: bool,
    pub pass: bool,
}

/// Runs `trials` random composable triples with |z| in [0.1, 0.9] and
/// |u| <= 1, measuring associativity in the u coordinate, inverse round
/// trips, target coherence, and unit exactness.
pub fn run_trials(chart: &GlpChart, trials: u32, seed: u64) -> GlpReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_assoc: f64 = 0.0;
    let mut max_roundtrip: f64 = 0.0;
    let mut max_coherence: f64 = 0.0;
    let mut units_exact = true;

    let sample = |rng: &mut ChaCha8Rng, lo: f64, hi: f64| -> Complex64 {
        let r = rng.gen_range(lo..hi);
        let th = rng.gen_range(0.0..std::f64::consts::TAU);
        Complex64::from_polar(r, th)
    };

    for _ in 0..trials {
        let z1 = sample(&mut rng, 0.1, 0.9);
        let u1 = sample(&mut rng, 0.0, 1.0);
        let u2 = sample(&mut rng, 0.0, 1.0);
        let u3 = sample(&mut rng, 0.0, 1.0);

        let a = GlpArrow { z: z1, u: u1 };
        let b = GlpArrow { z: chart.target(&a), u: u2 };
        let c = GlpArrow { z: chart.target(&b), u: u3 };

        // associativity measured on the unipotent coordinate
        let ba = chart.compose(&b, &a).expect("chained targets compose");
        let cb = chart.compose(&c, &b).expect("chained targets compose");
        let left = chart.compose(&c, &ba).expect("chained targets compose");
        let right = chart.compose(&cb, &a).expect("chained targets compose");
        let scale = left.u.norm().max(right.u.norm()).max(1.0);
        max_assoc = max_assoc.max((left.u - right.u).norm() / scale);

        // source/target coherence of the composite
        let tb = chart.target(&b);
        let tba = chart.target(&ba);
        max_coherence = max_coherence.max((tb - tba).norm() / tb.norm().max(1.0));
        if ba.z != a.z {
            units_exact = false;
        }

        // inverse round trip lands on the unit within tolerance
        let inv = chart.inverse(&a);
        let round = chart.compose(&inv, &a).expect("inverse composes");
        max_roundtrip = max_roundtrip.max(round.u.norm());
        let double = chart.inverse(&inv);
        max_roundtrip = max_roundtrip.max((double.u - a.u).norm().max((double.z - a.z).norm()));

        // units are strict in z and rounding-level in u
        let unit = chart.unit(chart.target(&a));
        let with_unit = chart.compose(&unit, &a).expect("unit composes");
        if with_unit.z != a.z {
            units_exact = false;
        }
        max_roundtrip = max_roundtrip.max((with_unit.u - a.u).norm());
    }

    let pass = max_assoc <= chart.tol
        && max_roundtrip <= chart.tol
        && max_coherence <= chart.tol
        && units_exact;
    GlpReport {
        k: chart.k,
        n: chart.n,
        trials,
        seed,
        tol: chart.tol,
        max_assoc_err: max_assoc,
        max_roundtrip_err: max_roundtrip,
        max_target_coherence_err: max_coherence,
        units_exact,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart(k: u32, n: u32) -> GlpChart {
        GlpChart::new(k, n, 1e-9).unwrap()
    }

    #[test]
    fn unit_arrows_fix_the_base_point() {
        let ch = chart(2, 1);
        let z = Complex64::new(0.5, 0.1);
        let a = ch.unit(z);
        assert_eq!(ch.target(&a), z);
    }

    #[test]
    fn target_matches_independent_series_evaluation() {
        // k = 2, n = 1, z = 0.5, u = 0.3: target = 0.5 e^{0.15}; compare
        // against a Taylor-series exponential as an independent oracle.
        let ch = chart(2, 1);
        let a = ch.arrow(Complex64::new(0.5, 0.0), Complex64::new(0.3, 0.0)).unwrap();
        let t = ch.target(&a);
        let x = 0.15f64;
        let mut series = 0.0f64;
        let mut term = 1.0f64;
        for i in 1..=30 {
            series += term;
            term *= x / i as f64;
        }
        assert!((t.re - 0.5 * series).abs() < 1e-12, "{t}");
        assert!(t.im.abs() < 1e-15);
    }

    #[test]
    fn purely_imaginary_exponent_preserves_modulus() {
        let ch = chart(3, 1);
        let z = Complex64::from_polar(0.7, 0.3);
        // pick u so that u z^m is purely imaginary
        let zm = z.powi(ch.exponent());
        let u = Complex64::new(0.0, 0.4) / zm;
        let a = ch.arrow(z, u).unwrap();
        assert!((ch.target(&a).norm() - z.norm()).abs() < 1e-12);
    }

    #[test]
    fn composition_formula_on_reference_values() {
        // k = 2, n = 1, z1 = 0.5, u1 = 0.3, u2 = 0.2: u = 0.2 e^{0.15} + 0.3
        let ch = chart(2, 1);
        let a = ch.arrow(Complex64::new(0.5, 0.0), Complex64::new(0.3, 0.0)).unwrap();
        let b = ch.arrow(ch.target(&a), Complex64::new(0.2, 0.0)).unwrap();
        let ba = ch.compose(&b, &a).unwrap();
        assert_eq!(ba.z, a.z);
        let expected = 0.2 * (0.15f64).exp() + 0.3;
        assert!((ba.u.re - expected).abs() < 1e-14);
    }

    #[test]
    fn units_are_neutral_on_both_sides() {
        let ch = chart(4, 2);
        let a = ch.arrow(Complex64::new(0.3, 0.2), Complex64::new(0.1, -0.4)).unwrap();
        // unit after a: exact in z, within 1e-15 in u
        let unit = ch.unit(ch.target(&a));
        let r = ch.compose(&unit, &a).unwrap();
        assert_eq!(r.z, a.z);
        assert!((r.u - a.u).norm() < 1e-15);
        // a after unit at the source: bit-exact
        let unit = ch.unit(a.z);
        let r = ch.compose(&a, &unit).unwrap();
        assert_eq!(r.z, a.z);
        assert_eq!(r.u, a.u);
    }

    #[test]
    fn composability_violation_reports_the_gap() {
        let ch = chart(2, 1);
        let a = ch.arrow(Complex64::new(0.5, 0.0), Complex64::new(0.3, 0.0)).unwrap();
        let b = ch.arrow(Complex64::new(0.9, 0.0), Complex64::new(0.2, 0.0)).unwrap();
        match ch.compose(&b, &a) {
            Err(Error::Composability { gap, tol }) => assert!(gap > tol),
            other => panic!("expected composability error, got {other:?}"),
        }
    }

    #[test]
    fn seeded_trials_pass_for_all_supported_parameters() {
        for k in [2u32, 3, 4] {
            for n in [1u32, 2] {
                let ch = chart(k, n);
                let report = run_trials(&ch, 1000, 7);
                assert!(report.pass, "k={k} n={n}: {report:?}");
                assert!(report.max_assoc_err < 1e-9);
                assert!(report.max_roundtrip_err < 1e-12);
            }
        }
    }

    #[test]
    fn trials_are_deterministic_per_seed() {
        let ch = chart(3, 2);
        let a = run_trials(&ch, 200, 42);
        let b = run_trials(&ch, 200, 42);
        assert_eq!(a.max_assoc_err, b.max_assoc_err);
        assert_eq!(a.max_roundtrip_err, b.max_roundtrip_err);
    }
}
