//! Qubit state model and pole-to-pole-axis-only (PAO) logic.
//!
//! Under the PAO criterion only the projection of a state onto the z axis of
//! the Bloch sphere matters. The projection `α = cos(θ/2)` is 1 at the North
//! Pole (|0⟩) and 0 at the South Pole (|1⟩); its conversion `μ = 1 − α`
//! aligns with classical pixel intensity. Logic then reduces to ordering by
//! μ: AND selects the argument with the smaller μ, OR the larger — the same
//! min/max pair fuzzy logic uses — and NOT swaps the two amplitudes. XOR is
//! composed from those three. On computational basis states the four
//! operations agree with Boolean logic exactly.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::image_io::max_level;

/// Allowed deviation of `|α|² + |β|²` from 1.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Two μ values within this distance count as a tie; ties select the first
/// argument so that φ can never influence a PAO decision.
pub const MU_TIE_TOLERANCE: f64 = 1e-12;

/// Below this magnitude a component is treated as zero when choosing the
/// global-phase reference during canonicalization.
const CANONICAL_EPS: f64 = 1e-12;

/// A normalized single-qubit state in canonical form.
///
/// Canonical form strips the unobservable global phase: the dominant
/// component (α, or β when α vanishes) is real and nonnegative, so equality
/// of states is well-defined and the computational basis states are exactly
/// `(1, 0)` and `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qubit {
    alpha: Complex64,
    beta: Complex64,
}

impl Qubit {
    /// Build a state from its |0⟩ and |1⟩ amplitudes.
    ///
    /// Fails if the amplitudes are not normalized within [`NORM_TOLERANCE`].
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm_sq = alpha.norm_sqr() + beta.norm_sqr();
        if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::Domain(format!(
                "amplitudes are not normalized: |α|² + |β|² = {norm_sq}"
            )));
        }
        Ok(Self::canonical(alpha, beta))
    }

    /// |0⟩, the North Pole.
    pub fn zero() -> Self {
        Self {
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    /// |1⟩, the South Pole.
    pub fn one() -> Self {
        Self {
            alpha: Complex64::new(0.0, 0.0),
            beta: Complex64::new(1.0, 0.0),
        }
    }

    /// State at the given Bloch angles: `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
    pub fn from_angles(angles: BlochAngles) -> Self {
        let half = angles.theta / 2.0;
        let alpha = Complex64::new(half.cos(), 0.0);
        let beta = Complex64::from_polar(half.sin(), angles.phi);
        Self::canonical(alpha, beta)
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// Projection onto the z axis: `cos(θ/2) = |α|`, clamped to `[0, 1]`.
    pub fn z_projection(&self) -> f64 {
        self.alpha.norm().min(1.0)
    }

    /// The converted projection `μ = 1 − α`, the sole comparison key of PAO
    /// logic: 0 at |0⟩, 1 at |1⟩.
    pub fn mu(&self) -> f64 {
        1.0 - self.z_projection()
    }

    /// Componentwise distance, for tolerance comparisons in tests.
    pub fn distance(&self, other: &Self) -> f64 {
        ((self.alpha - other.alpha).norm_sqr() + (self.beta - other.beta).norm_sqr()).sqrt()
    }

    pub fn approx_eq(&self, other: &Self, tolerance: f64) -> bool {
        self.distance(other) <= tolerance
    }

    /// Strip the global phase so the dominant component is real nonnegative.
    fn canonical(alpha: Complex64, beta: Complex64) -> Self {
        let reference = if alpha.norm() > CANONICAL_EPS {
            alpha
        } else {
            beta
        };
        let magnitude = reference.norm();
        if magnitude == 0.0 || (reference.im == 0.0 && reference.re >= 0.0) {
            return Self { alpha, beta };
        }
        let phase = reference / magnitude;
        Self {
            alpha: alpha * phase.conj(),
            beta: beta * phase.conj(),
        }
    }
}

/// Point on the Bloch sphere: polar angle `θ ∈ [0, π]` from the North Pole
/// and azimuth `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochAngles {
    theta: f64,
    phi: f64,
}

impl BlochAngles {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::Domain(format!("theta {theta} outside [0, π]")));
        }
        if !(0.0..std::f64::consts::TAU).contains(&phi) {
            return Err(Error::Domain(format!("phi {phi} outside [0, 2π)")));
        }
        Ok(Self { theta, phi })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// A computational basis state of a `2^B`-level qudit: the one-hot vector
/// with the 1 at position `level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuditCbs {
    depth_bits: u8,
    level: u16,
}

impl QuditCbs {
    pub fn new(depth_bits: u8, level: u16) -> Result<Self> {
        if depth_bits == 0 || depth_bits > 16 {
            return Err(Error::Domain(format!(
                "qudit depth must be in 1..=16, got {depth_bits}"
            )));
        }
        if level > max_level(depth_bits) {
            return Err(Error::Domain(format!(
                "level {level} does not fit in {depth_bits} bits"
            )));
        }
        Ok(Self { depth_bits, level })
    }

    pub fn depth_bits(&self) -> u8 {
        self.depth_bits
    }

    pub fn level(&self) -> u16 {
        self.level
    }

    /// Number of basis vectors, `2^B`.
    pub fn dimension(&self) -> usize {
        1usize << self.depth_bits
    }

    /// Dense one-hot amplitude vector.
    pub fn amplitudes(&self) -> Vec<f64> {
        let mut v = vec![0.0; self.dimension()];
        v[self.level as usize] = 1.0;
        v
    }

    /// Multilevel μ of this basis state, `(2^B − 1) − level`.
    pub fn mu(&self) -> f64 {
        classical_convert_multilevel(f64::from(self.level), self.depth_bits)
            .expect("level is validated on construction")
    }
}

/// The classical converter `μ = 1 − α` for a unit-range projection.
pub fn classical_convert(alpha: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Domain(format!("projection {alpha} outside [0, 1]")));
    }
    Ok(1.0 - alpha)
}

/// The multilevel classical converter `μ = (2^B − 1) − α` for projections
/// expressed as levels in `[0, 2^B − 1]`. With `B = 1` this is
/// [`classical_convert`].
pub fn classical_convert_multilevel(alpha: f64, depth_bits: u8) -> Result<f64> {
    if depth_bits == 0 || depth_bits > 16 {
        return Err(Error::Domain(format!(
            "bit depth must be in 1..=16, got {depth_bits}"
        )));
    }
    let max = f64::from(max_level(depth_bits));
    if !(0.0..=max).contains(&alpha) {
        return Err(Error::Domain(format!(
            "projection {alpha} outside [0, {max}]"
        )));
    }
    Ok(max - alpha)
}

/// Output of the quantum converter `|0⟩ − |ψ⟩`: the first component is μ,
/// the second is overlooked by PAO and kept only for completeness. The pair
/// is not a normalized state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvertedPair {
    /// `1 − α`, the μ value read out by the Mode II interface.
    pub mu: f64,
    /// `−β`; carries no meaning downstream.
    pub overlooked: Complex64,
}

/// The quantum converter: componentwise `|0⟩ − |ψ⟩`.
pub fn quantum_convert(q: Qubit) -> ConvertedPair {
    ConvertedPair {
        mu: 1.0 - q.z_projection(),
        overlooked: -q.beta(),
    }
}

/// NOT: swap the two amplitudes. Norm is preserved; the result is re-stated
/// in canonical form.
pub fn pao_not(q: Qubit) -> Qubit {
    Qubit::canonical(q.beta, q.alpha)
}

/// AND: the argument with the smaller μ (the more northern state). Ties
/// within [`MU_TIE_TOLERANCE`] select the first argument.
pub fn pao_and(q1: Qubit, q2: Qubit) -> Qubit {
    let (m1, m2) = (q1.mu(), q2.mu());
    if (m1 - m2).abs() <= MU_TIE_TOLERANCE || m1 < m2 {
        q1
    } else {
        q2
    }
}

/// OR: the argument with the larger μ (the more southern state). Ties select
/// the first argument.
pub fn pao_or(q1: Qubit, q2: Qubit) -> Qubit {
    let (m1, m2) = (q1.mu(), q2.mu());
    if (m1 - m2).abs() <= MU_TIE_TOLERANCE || m1 > m2 {
        q1
    } else {
        q2
    }
}

/// XOR composed from the other three:
/// `(q1 AND NOT q2) OR (NOT q1 AND q2)`.
pub fn pao_xor(q1: Qubit, q2: Qubit) -> Qubit {
    pao_or(pao_and(q1, pao_not(q2)), pao_and(pao_not(q1), q2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn angles(theta: f64, phi: f64) -> BlochAngles {
        BlochAngles::new(theta, phi).unwrap()
    }

    #[test]
    fn north_pole_is_zero_ket_for_any_phi() {
        for phi in [0.0, 1.0, 3.0, 6.0] {
            let q = Qubit::from_angles(angles(0.0, phi));
            assert_eq!(q, Qubit::zero());
        }
    }

    #[test]
    fn south_pole_is_one_ket_for_any_phi() {
        for phi in [0.0, 1.0, 3.0, 6.0] {
            let q = Qubit::from_angles(angles(PI, phi));
            assert!(q.approx_eq(&Qubit::one(), 1e-12), "phi={phi}: {q:?}");
        }
    }

    #[test]
    fn equator_state_is_balanced() {
        let q = Qubit::from_angles(angles(PI / 2.0, 0.0));
        let half_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        assert!((q.alpha().re - half_sqrt2).abs() < 1e-15);
        assert!((q.beta().re - half_sqrt2).abs() < 1e-15);
    }

    #[test]
    fn projections_at_the_poles() {
        assert_eq!(Qubit::zero().z_projection(), 1.0);
        assert_eq!(Qubit::one().z_projection(), 0.0);
        assert_eq!(Qubit::zero().mu(), 0.0);
        assert_eq!(Qubit::one().mu(), 1.0);
    }

    #[test]
    fn projection_at_sixty_degrees() {
        let q = Qubit::from_angles(angles(PI / 3.0, 0.0));
        assert!((q.z_projection() - (PI / 6.0).cos()).abs() < 1e-12);
    }

    #[test]
    fn mu_at_two_thirds_pi() {
        let q = Qubit::from_angles(angles(2.0 * PI / 3.0, 0.0));
        assert!((q.mu() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn classical_converter_endpoints() {
        assert_eq!(classical_convert(1.0).unwrap(), 0.0);
        assert_eq!(classical_convert(0.0).unwrap(), 1.0);
        assert_eq!(classical_convert(0.25).unwrap(), 0.75);
        assert!(classical_convert(1.5).is_err());
        assert!(classical_convert(-0.1).is_err());
    }

    #[test]
    fn multilevel_converter_endpoints() {
        assert_eq!(classical_convert_multilevel(255.0, 8).unwrap(), 0.0);
        assert_eq!(classical_convert_multilevel(0.0, 8).unwrap(), 255.0);
        assert!(classical_convert_multilevel(256.0, 8).is_err());
    }

    #[test]
    fn multilevel_converter_reduces_to_unit_range_at_depth_one() {
        for alpha in [0.0, 0.25, 0.5, 1.0] {
            assert_eq!(
                classical_convert_multilevel(alpha, 1).unwrap(),
                classical_convert(alpha).unwrap()
            );
        }
    }

    #[test]
    fn quantum_converter_on_basis_states() {
        let z = quantum_convert(Qubit::zero());
        assert_eq!((z.mu, z.overlooked), (0.0, Complex64::new(0.0, 0.0)));
        let o = quantum_convert(Qubit::one());
        assert_eq!((o.mu, o.overlooked), (1.0, Complex64::new(-1.0, 0.0)));
        let q = Qubit::new(Complex64::new(0.6, 0.0), Complex64::new(0.8, 0.0)).unwrap();
        let c = quantum_convert(q);
        assert!((c.mu - 0.4).abs() < 1e-15);
        assert!((c.overlooked.re + 0.8).abs() < 1e-15);
    }

    #[test]
    fn not_swaps_the_poles() {
        assert_eq!(pao_not(Qubit::zero()), Qubit::one());
        assert_eq!(pao_not(Qubit::one()), Qubit::zero());
    }

    #[test]
    fn and_or_on_mixed_latitudes() {
        let north = Qubit::from_angles(angles(PI / 3.0, 0.0)); // μ ≈ 0.134
        let south = Qubit::from_angles(angles(2.0 * PI / 3.0, 0.0)); // μ = 0.5
        assert_eq!(pao_and(north, south), north);
        assert_eq!(pao_and(south, north), north);
        assert_eq!(pao_or(north, south), south);
        assert_eq!(pao_or(south, north), south);
    }

    #[test]
    fn ties_select_the_first_argument() {
        let a = Qubit::from_angles(angles(PI / 2.0, 0.0));
        let b = Qubit::from_angles(angles(PI / 2.0, 1.0));
        assert_eq!(pao_and(a, b), a);
        assert_eq!(pao_or(a, b), a);
        assert_eq!(pao_and(b, a), b);
    }

    #[test]
    fn self_xor_of_basis_states_is_zero_ket() {
        assert_eq!(pao_xor(Qubit::zero(), Qubit::zero()), Qubit::zero());
        assert_eq!(pao_xor(Qubit::one(), Qubit::one()), Qubit::zero());
    }

    #[test]
    fn de_morgan_on_basis_state_pairs() {
        let cbs = [Qubit::zero(), Qubit::one()];
        for a in cbs {
            for b in cbs {
                assert_eq!(pao_not(pao_and(a, b)), pao_or(pao_not(a), pao_not(b)));
            }
        }
    }

    #[test]
    fn out_of_range_angles_are_rejected() {
        assert!(BlochAngles::new(-0.1, 0.0).is_err());
        assert!(BlochAngles::new(PI + 0.1, 0.0).is_err());
        assert!(BlochAngles::new(0.0, std::f64::consts::TAU).is_err());
    }

    #[test]
    fn unnormalized_amplitudes_are_rejected() {
        assert!(Qubit::new(Complex64::new(1.0, 0.0), Complex64::new(0.5, 0.0)).is_err());
    }

    #[test]
    fn qudit_cbs_levels() {
        let q = QuditCbs::new(8, 0).unwrap();
        assert_eq!(q.dimension(), 256);
        assert_eq!(q.mu(), 255.0);
        let top = QuditCbs::new(8, 255).unwrap();
        assert_eq!(top.mu(), 0.0);
        let amps = top.amplitudes();
        assert_eq!(amps.iter().filter(|&&a| a == 1.0).count(), 1);
        assert_eq!(amps[255], 1.0);
        assert!(QuditCbs::new(8, 256).is_err());
    }

    fn arb_qubit() -> impl Strategy<Value = Qubit> {
        (0.0..=PI, 0.0..std::f64::consts::TAU)
            .prop_map(|(theta, phi)| Qubit::from_angles(angles(theta, phi)))
    }

    proptest! {
        #[test]
        fn construction_is_normalized(q in arb_qubit()) {
            let norm_sq = q.alpha().norm_sqr() + q.beta().norm_sqr();
            prop_assert!((norm_sq - 1.0).abs() <= NORM_TOLERANCE);
        }

        #[test]
        fn not_is_an_involution(q in arb_qubit()) {
            prop_assert!(pao_not(pao_not(q)).approx_eq(&q, 1e-12));
        }

        #[test]
        fn not_preserves_the_norm(q in arb_qubit()) {
            let n = pao_not(q);
            let norm_sq = n.alpha().norm_sqr() + n.beta().norm_sqr();
            prop_assert!((norm_sq - 1.0).abs() <= NORM_TOLERANCE);
        }

        #[test]
        fn and_or_pick_mu_extremes(a in arb_qubit(), b in arb_qubit()) {
            // Exact except at near-ties, where the first argument wins.
            prop_assert!((pao_and(a, b).mu() - a.mu().min(b.mu())).abs() <= MU_TIE_TOLERANCE);
            prop_assert!((pao_or(a, b).mu() - a.mu().max(b.mu())).abs() <= MU_TIE_TOLERANCE);
        }

        #[test]
        fn and_or_are_idempotent_on_mu(a in arb_qubit()) {
            prop_assert_eq!(pao_and(a, a).mu(), a.mu());
            prop_assert_eq!(pao_or(a, a).mu(), a.mu());
        }

        #[test]
        fn results_are_always_one_of_the_arguments(a in arb_qubit(), b in arb_qubit()) {
            let and = pao_and(a, b);
            prop_assert!(and == a || and == b);
            let or = pao_or(a, b);
            prop_assert!(or == a || or == b);
        }

        #[test]
        fn projection_matches_half_angle_cosine(theta in 0.0..=PI, phi in 0.0..std::f64::consts::TAU) {
            let q = Qubit::from_angles(angles(theta, phi));
            prop_assert!((q.z_projection() - (theta / 2.0).cos()).abs() <= 1e-12);
        }
    }
}
