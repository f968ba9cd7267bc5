//! Projective measurement.
//!
//! The general postulate: outcome `m` occurs with probability
//! `⟨ψ|M†M|ψ⟩` and leaves the system in `M|ψ⟩ / √p`. For the standard
//! projector pair onto |0⟩ and |1⟩ this gives `p(0) = |α|²`, `p(1) = |β|²`.
//!
//! Computational basis states are the special case that makes the whole
//! pipeline workable: measuring |0⟩ or |1⟩ is deterministic and leaves the
//! state untouched, so [`measure_cbs`] needs no randomness at all. The
//! seeded [`measure_sampled`] covers every other state.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::pao::Qubit;
use crate::seeding::rng_from_seed;

/// Entrywise tolerance when checking `Σ M†M = I`.
pub const COMPLETENESS_TOLERANCE: f64 = 1e-12;

/// How far the z-projection may sit from a pole for a state to still count
/// as that computational basis state.
pub const CBS_TOLERANCE: f64 = 1e-9;

/// Outcome probabilities below this are treated as impossible.
const MIN_OUTCOME_PROBABILITY: f64 = 1e-30;

/// A single measurement operator: a 2×2 matrix with an outcome label.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementOperator {
    matrix: [[Complex64; 2]; 2],
    label: u8,
}

impl MeasurementOperator {
    pub fn new(matrix: [[Complex64; 2]; 2], label: u8) -> Self {
        Self { matrix, label }
    }

    /// `|0⟩⟨0|`, labelled 0.
    pub fn projector_zero() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let nil = Complex64::new(0.0, 0.0);
        Self::new([[one, nil], [nil, nil]], 0)
    }

    /// `|1⟩⟨1|`, labelled 1.
    pub fn projector_one() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let nil = Complex64::new(0.0, 0.0);
        Self::new([[nil, nil], [nil, one]], 1)
    }

    /// The standard complete pair `{|0⟩⟨0|, |1⟩⟨1|}`.
    pub fn standard_pair() -> [Self; 2] {
        [Self::projector_zero(), Self::projector_one()]
    }

    pub fn label(&self) -> u8 {
        self.label
    }

    pub fn matrix(&self) -> &[[Complex64; 2]; 2] {
        &self.matrix
    }

    /// `M|ψ⟩`, unnormalized.
    fn apply(&self, q: &Qubit) -> (Complex64, Complex64) {
        let m = &self.matrix;
        (
            m[0][0] * q.alpha() + m[0][1] * q.beta(),
            m[1][0] * q.alpha() + m[1][1] * q.beta(),
        )
    }

    /// `M†M`.
    fn gram(&self) -> [[Complex64; 2]; 2] {
        let m = &self.matrix;
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..2).map(|k| m[k][i].conj() * m[k][j]).sum();
            }
        }
        out
    }
}

/// Probability that this operator's outcome occurs: `⟨ψ|M†M|ψ⟩ = ‖M|ψ⟩‖²`.
pub fn outcome_probability(q: &Qubit, op: &MeasurementOperator) -> f64 {
    let (a, b) = op.apply(q);
    (a.norm_sqr() + b.norm_sqr()).min(1.0)
}

/// State after observing this operator's outcome: `M|ψ⟩ / √p`.
pub fn post_measurement_state(q: &Qubit, op: &MeasurementOperator) -> Result<Qubit> {
    let p = outcome_probability(q, op);
    if p < MIN_OUTCOME_PROBABILITY {
        return Err(Error::ImpossibleOutcome { label: op.label });
    }
    let scale = p.sqrt();
    let (a, b) = op.apply(q);
    Qubit::new(a / scale, b / scale)
}

/// True iff the operators satisfy the completeness relation `Σ M†M = I`
/// within [`COMPLETENESS_TOLERANCE`] per entry.
pub fn check_completeness(ops: &[MeasurementOperator]) -> Result<bool> {
    if ops.is_empty() {
        return Err(Error::Structure(
            "completeness check needs at least one operator".into(),
        ));
    }
    let mut sum = [[Complex64::new(0.0, 0.0); 2]; 2];
    for op in ops {
        let g = op.gram();
        for i in 0..2 {
            for j in 0..2 {
                sum[i][j] += g[i][j];
            }
        }
    }
    for (i, row) in sum.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let expected = if i == j { 1.0 } else { 0.0 };
            if (entry - Complex64::new(expected, 0.0)).norm() > COMPLETENESS_TOLERANCE {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Deterministic, collapse-free measurement of a computational basis state.
///
/// A state counts as |0⟩ (or |1⟩) when its z-projection is within
/// [`CBS_TOLERANCE`] of 1 (or 0); the returned state is the exact basis
/// state, so repeated measurement is idempotent. Anything else must go
/// through [`measure_sampled`].
pub fn measure_cbs(q: &Qubit) -> Result<(bool, Qubit)> {
    let projection = q.z_projection();
    if (1.0 - projection).abs() <= CBS_TOLERANCE {
        Ok((false, Qubit::zero()))
    } else if projection.abs() <= CBS_TOLERANCE {
        Ok((true, Qubit::one()))
    } else {
        Err(Error::NotCbs { projection })
    }
}

/// Seeded probabilistic measurement in the standard basis.
///
/// Draws the outcome from `p(0) = |α|²` and collapses to the corresponding
/// basis state. The same seed always yields the same outcome.
pub fn measure_sampled(q: &Qubit, seed: u64) -> (bool, Qubit) {
    let p_zero = outcome_probability(q, &MeasurementOperator::projector_zero());
    let draw: f64 = rng_from_seed(seed).random();
    if draw < p_zero {
        (false, Qubit::zero())
    } else {
        (true, Qubit::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pao::BlochAngles;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn photon() -> Qubit {
        Qubit::new(Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0)).unwrap()
    }

    #[test]
    fn probabilities_of_the_standard_pair() {
        let [m0, m1] = MeasurementOperator::standard_pair();
        assert_eq!(outcome_probability(&Qubit::zero(), &m0), 1.0);
        assert_eq!(outcome_probability(&Qubit::zero(), &m1), 0.0);
        let q = photon();
        assert!((outcome_probability(&q, &m0) - 0.36).abs() < 1e-15);
        assert!((outcome_probability(&q, &m1) - 0.64).abs() < 1e-15);
    }

    #[test]
    fn collapse_of_the_photon_example() {
        let [m0, m1] = MeasurementOperator::standard_pair();
        let q = photon();
        assert_eq!(post_measurement_state(&q, &m1).unwrap(), Qubit::one());
        assert_eq!(post_measurement_state(&q, &m0).unwrap(), Qubit::zero());
    }

    #[test]
    fn basis_states_are_fixed_points() {
        let [m0, _] = MeasurementOperator::standard_pair();
        assert_eq!(
            post_measurement_state(&Qubit::zero(), &m0).unwrap(),
            Qubit::zero()
        );
    }

    #[test]
    fn impossible_outcome_is_an_error() {
        let [m0, _] = MeasurementOperator::standard_pair();
        assert!(matches!(
            post_measurement_state(&Qubit::one(), &m0),
            Err(Error::ImpossibleOutcome { label: 0 })
        ));
    }

    #[test]
    fn standard_pair_is_complete() {
        assert!(check_completeness(&MeasurementOperator::standard_pair()).unwrap());
    }

    #[test]
    fn partial_or_duplicated_sets_are_incomplete() {
        let m0 = MeasurementOperator::projector_zero();
        assert!(!check_completeness(&[m0]).unwrap());
        assert!(!check_completeness(&[m0, m0]).unwrap());
        assert!(check_completeness(&[]).is_err());
    }

    #[test]
    fn cbs_measurement_is_deterministic_and_idempotent() {
        let (bit, state) = measure_cbs(&Qubit::zero()).unwrap();
        assert_eq!((bit, state), (false, Qubit::zero()));
        let (bit, state) = measure_cbs(&Qubit::one()).unwrap();
        assert_eq!((bit, state), (true, Qubit::one()));
        for _ in 0..5 {
            let (again, next) = measure_cbs(&state).unwrap();
            assert_eq!((again, next), (bit, state));
        }
    }

    #[test]
    fn equator_state_is_not_cbs() {
        let q = Qubit::from_angles(BlochAngles::new(PI / 2.0, 0.0).unwrap());
        assert!(matches!(measure_cbs(&q), Err(Error::NotCbs { .. })));
    }

    #[test]
    fn sampling_a_pole_is_certain() {
        for seed in 0..32 {
            assert!(!measure_sampled(&Qubit::zero(), seed).0);
            assert!(measure_sampled(&Qubit::one(), seed).0);
        }
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let q = photon();
        for seed in [0, 1, 42, u64::MAX] {
            assert_eq!(measure_sampled(&q, seed), measure_sampled(&q, seed));
        }
    }

    #[test]
    fn sampled_frequency_matches_the_born_rule() {
        // χ² over the two bins at n = 1e5; 10.83 is the 0.001 critical
        // value at one degree of freedom.
        let q = photon();
        let n = 100_000u64;
        let zeros = (0..n).filter(|&s| !measure_sampled(&q, s).0).count() as f64;
        let ones = n as f64 - zeros;
        let (e0, e1) = (0.36 * n as f64, 0.64 * n as f64);
        let chi_sq = (zeros - e0).powi(2) / e0 + (ones - e1).powi(2) / e1;
        assert!(chi_sq < 10.83, "chi² = {chi_sq}, zeros = {zeros}");
    }

    proptest! {
        #[test]
        fn probabilities_sum_to_one(theta in 0.0..=PI, phi in 0.0..std::f64::consts::TAU) {
            let q = Qubit::from_angles(BlochAngles::new(theta, phi).unwrap());
            let [m0, m1] = MeasurementOperator::standard_pair();
            let total = outcome_probability(&q, &m0) + outcome_probability(&q, &m1);
            prop_assert!((total - 1.0).abs() <= 1e-12);
        }

        #[test]
        fn post_states_are_normalized(theta in 0.01..PI - 0.01, phi in 0.0..std::f64::consts::TAU) {
            let q = Qubit::from_angles(BlochAngles::new(theta, phi).unwrap());
            for op in MeasurementOperator::standard_pair() {
                let post = post_measurement_state(&q, &op).unwrap();
                let norm_sq = post.alpha().norm_sqr() + post.beta().norm_sqr();
                prop_assert!((norm_sq - 1.0).abs() <= 1e-12);
            }
        }
    }
}
