//! Frobenius powers, Hilbert-Kunz function sampling and extrapolation,
//! Hilbert-Samuel multiplicities by finite differences, and the regularity
//! test.
//!
//! Everything is exact: colengths are integers, normalized values and
//! multiplicity estimates are exact rationals. No floating point anywhere.

use std::sync::Arc;

use num::{BigRational, Signed, Zero};
use thiserror::Error;

use crate::error::ArithError;
use crate::groebner::{
    buchberger, count_standard_monomials, is_zero_dimensional, krull_dimension, BuchbergerConfig,
    GroebnerBasis, GroebnerError,
};
use crate::ideal::IdealPresentation;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{is_power_of, PolyRing};
use crate::rational::{pow_u64, rat_u64};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error(transparent)]
    Arith(#[from] ArithError),

    #[error(transparent)]
    Groebner(#[from] GroebnerError),

    #[error("{q} is not a power of the ring characteristic {p}")]
    NotPowerOfCharacteristic { q: u64, p: u32 },

    #[error("ideal is not m-primary in `{ring}`")]
    NotMPrimary { ring: String },

    #[error("ring `{0}` is declared graded but generator `{1}` is not homogeneous")]
    NotHomogeneous(String, String),

    #[error("ring `{name}`: computed dimension {computed} != declared dimension {declared}")]
    DimensionMismatch {
        name: String,
        computed: usize,
        declared: usize,
    },

    #[error("sampling failed at e = {e} (q = {q}): {source}")]
    Sample {
        e: u32,
        q: u64,
        #[source]
        source: Box<EngineError>,
    },

    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),

    #[error("e_max must be at least 1")]
    BadSampleRange,

    #[error("Hilbert-Samuel multiplicity requires a ring declared graded")]
    NotGraded,

    #[error("no stabilization within n_max = {n_max}: need n_max > d + 1 = {min}")]
    NoStabilization { n_max: u32, min: u32 },

    #[error("q = {0} exceeds the exponent width")]
    FrobeniusOverflow(u64),
}

/// Declared, externally sourced facts about a ring. The engine consumes
/// these as hypotheses; it never computes them.
#[derive(Debug, Clone, PartialEq)]
pub struct RingMetadata {
    pub name: String,
    pub expected_dimension: Option<usize>,
    pub graded: bool,
    pub unmixed: bool,
    pub cm_image: bool,
    pub cohen_macaulay: Option<bool>,
    pub singularity: Option<String>,
    pub char_restrictions: Option<String>,
    pub known_e_hk: Option<KnownValue>,
}

/// A reference value with its provenance note.
#[derive(Debug, Clone, PartialEq)]
pub struct KnownValue {
    pub value: BigRational,
    pub provenance: String,
}

impl RingMetadata {
    pub fn bare(name: &str) -> Self {
        RingMetadata {
            name: name.to_string(),
            expected_dimension: None,
            graded: true,
            unmixed: true,
            cm_image: true,
            cohen_macaulay: None,
            singularity: None,
            char_restrictions: None,
            known_e_hk: None,
        }
    }
}

/// A quotient ring presentation: the ambient prime-field polynomial ring
/// and the defining ideal (empty for the polynomial ring itself).
#[derive(Debug, Clone, PartialEq)]
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    defining_ideal: IdealPresentation,
    declared: RingMetadata,
}

impl RingPresentation {
    pub fn new(
        ring: &Arc<PolyRing>,
        defining_ideal: IdealPresentation,
        declared: RingMetadata,
    ) -> Result<Self, EngineError> {
        if defining_ideal.ring() != ring {
            return Err(ArithError::RingMismatch.into());
        }
        if declared.graded {
            for g in defining_ideal.generators() {
                if !g.is_homogeneous() {
                    return Err(EngineError::NotHomogeneous(
                        declared.name.clone(),
                        g.to_string(),
                    ));
                }
            }
        }
        Ok(RingPresentation {
            ring: Arc::clone(ring),
            defining_ideal,
            declared,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn prime(&self) -> u32 {
        self.ring.prime()
    }

    pub fn defining_ideal(&self) -> &IdealPresentation {
        &self.defining_ideal
    }

    pub fn declared(&self) -> &RingMetadata {
        &self.declared
    }

    pub fn name(&self) -> &str {
        &self.declared.name
    }

    pub fn maximal_ideal(&self, order: MonomialOrder) -> IdealPresentation {
        IdealPresentation::maximal_ideal(&self.ring, order)
    }

    /// Groebner basis of the defining ideal plus the computed dimension,
    /// cross-checked against the declared dimension (mismatch is a hard
    /// error).
    pub fn analyze(
        &self,
        order: MonomialOrder,
        config: &BuchbergerConfig,
    ) -> Result<RingAnalysis, EngineError> {
        let gb = buchberger(&self.defining_ideal, order, config)?;
        let dimension = krull_dimension(&gb);
        if let Some(expected) = self.declared.expected_dimension {
            if expected != dimension {
                return Err(EngineError::DimensionMismatch {
                    name: self.declared.name.clone(),
                    computed: dimension,
                    declared: expected,
                });
            }
        }
        Ok(RingAnalysis {
            defining_basis: gb,
            dimension,
        })
    }
}

#[derive(Debug, Clone)]
pub struct RingAnalysis {
    pub defining_basis: GroebnerBasis,
    pub dimension: usize,
}

/// One Hilbert-Kunz sample: e, q = p^e, the exact colength, and the
/// normalized value colength / q^d.
#[derive(Debug, Clone, PartialEq)]
pub struct HKSample {
    pub e: u32,
    pub q: u64,
    pub colength: u64,
    pub normalized: BigRational,
}

/// The sampled Hilbert-Kunz function of an ideal in a ring.
#[derive(Debug, Clone, PartialEq)]
pub struct HKFunction {
    pub ring_name: String,
    pub ideal_label: String,
    pub dimension: usize,
    pub samples: Vec<HKSample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateMethod {
    ExactVolume,
    Richardson,
    LeadingDifference,
}

impl EstimateMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            EstimateMethod::ExactVolume => "exact-volume",
            EstimateMethod::Richardson => "richardson",
            EstimateMethod::LeadingDifference => "leading-difference",
        }
    }
}

/// An exact rational estimate with an exact half-width uncertainty.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicityEstimate {
    pub value: BigRational,
    pub method: EstimateMethod,
    pub uncertainty: BigRational,
    pub samples_used: usize,
}

impl MultiplicityEstimate {
    pub fn exact(value: BigRational, method: EstimateMethod) -> Self {
        MultiplicityEstimate {
            value,
            method,
            uncertainty: BigRational::zero(),
            samples_used: 0,
        }
    }

    pub fn lo(&self) -> BigRational {
        self.value.clone() - self.uncertainty.clone()
    }

    pub fn hi(&self) -> BigRational {
        self.value.clone() + self.uncertainty.clone()
    }

    pub fn is_exact(&self) -> bool {
        self.uncertainty.is_zero()
    }
}

/// The Frobenius power I^[q]: generators raised to the q-th power,
/// q a power of the characteristic.
pub fn frobenius_power(
    ideal: &IdealPresentation,
    q: u64,
) -> Result<IdealPresentation, EngineError> {
    let p = ideal.ring().prime();
    if !is_power_of(q, u64::from(p)) {
        return Err(EngineError::NotPowerOfCharacteristic { q, p });
    }
    if u32::try_from(q).is_err() {
        return Err(EngineError::FrobeniusOverflow(q));
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.frobenius_power(q))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IdealPresentation::new(ideal.ring(), ideal.order(), gens)?)
}

/// Exact colength lambda(R/I): the standard-monomial count of the defining
/// ideal joined with I, which must be m-primary.
pub fn colength(
    presentation: &RingPresentation,
    ideal: &IdealPresentation,
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<u64, EngineError> {
    colength_with_stats(presentation, ideal, order, config).map(|(c, _)| c)
}

/// Colength plus the reduced-basis size (for cache statistics).
pub fn colength_with_stats(
    presentation: &RingPresentation,
    ideal: &IdealPresentation,
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<(u64, usize), EngineError> {
    let joined = presentation
        .defining_ideal()
        .with_order(order)
        .joined(&ideal.with_order(order))?;
    let gb = buchberger(&joined, order, config)?;
    if !is_zero_dimensional(&gb) {
        return Err(EngineError::NotMPrimary {
            ring: presentation.name().to_string(),
        });
    }
    let count = count_standard_monomials(&gb, config)?;
    Ok((count, gb.len()))
}

/// Samples lambda(R/I^[q]) for e = 1..e_max through a caller-supplied
/// colength source (the CLI injects its cache here).
pub fn hk_function_via<F>(
    presentation: &RingPresentation,
    ideal: &IdealPresentation,
    ideal_label: &str,
    e_max: u32,
    dimension: usize,
    mut sample: F,
) -> Result<HKFunction, EngineError>
where
    F: FnMut(&IdealPresentation, u64) -> Result<u64, EngineError>,
{
    if e_max < 1 {
        return Err(EngineError::BadSampleRange);
    }
    let p = u64::from(presentation.prime());
    let mut samples = Vec::with_capacity(e_max as usize);
    for e in 1..=e_max {
        let q = p.pow(e);
        let frob = frobenius_power(ideal, q).map_err(|err| EngineError::Sample {
            e,
            q,
            source: Box::new(err),
        })?;
        let col = sample(&frob, q).map_err(|err| EngineError::Sample {
            e,
            q,
            source: Box::new(err),
        })?;
        samples.push(HKSample {
            e,
            q,
            colength: col,
            normalized: rat_u64(col) / pow_u64(q, dimension),
        });
    }
    Ok(HKFunction {
        ring_name: presentation.name().to_string(),
        ideal_label: ideal_label.to_string(),
        dimension,
        samples,
    })
}

/// Samples the Hilbert-Kunz function of `ideal` by direct computation.
pub fn hk_function(
    presentation: &RingPresentation,
    ideal: &IdealPresentation,
    ideal_label: &str,
    e_max: u32,
    dimension: usize,
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<HKFunction, EngineError> {
    hk_function_via(presentation, ideal, ideal_label, e_max, dimension, |frob, _| {
        colength(presentation, frob, order, config)
    })
}

/// Solves for the leading coefficient `a` of the model
/// lambda(q) = a q^{powers[0]} + ... through the given points.
#[allow(clippy::needless_range_loop)] // index form matches the elimination
fn solve_leading(points: &[(u64, u64)], powers: &[usize]) -> BigRational {
    let m = points.len();
    debug_assert_eq!(m, powers.len());
    // Gaussian elimination on the m x (m+1) system, exact rationals
    let mut mat: Vec<Vec<BigRational>> = points
        .iter()
        .map(|&(q, lam)| {
            let mut row: Vec<BigRational> =
                powers.iter().map(|&t| pow_u64(q, t)).collect();
            row.push(rat_u64(lam));
            row
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !mat[r][col].is_zero())
            .expect("Vandermonde-type system is nonsingular");
        mat.swap(col, pivot);
        let inv = mat[col][col].clone();
        for c in col..=m {
            let v = mat[col][c].clone() / inv.clone();
            mat[col][c] = v;
        }
        for r in 0..m {
            if r != col && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                for c in col..=m {
                    let v = mat[r][c].clone() - f.clone() * mat[col][c].clone();
                    mat[r][c] = v;
                }
            }
        }
    }
    mat[0][m].clone()
}

/// The extrapolant from the last min(d+1, k) samples of `samples[..k]`.
///
/// Model: with two points, a q^d + c (the q^{d-1} term is dropped); with
/// m >= 3 points, the full consecutive tail a q^d + b q^{d-1} + ...
fn extrapolant(samples: &[HKSample], k: usize, d: usize) -> BigRational {
    let m = (d + 1).min(k);
    let window = &samples[k - m..k];
    let points: Vec<(u64, u64)> = window.iter().map(|s| (s.q, s.colength)).collect();
    match m {
        1 => window[0].normalized.clone(),
        2 => solve_leading(&points, &[d, 0]),
        _ => {
            let powers: Vec<usize> = (0..m).map(|t| d - t).collect();
            solve_leading(&points, &powers)
        }
    }
}

/// Richardson-style extrapolation of the sampled Hilbert-Kunz function.
///
/// The estimate is the leading coefficient solved from the last
/// min(d+1, samples) points; the uncertainty is the gap between the last
/// two successive extrapolants. The gap is a heuristic, not a proven
/// convergence bound, which is why downstream checks treat it as an
/// interval half-width.
pub fn hk_estimate(function: &HKFunction, d: usize) -> Result<MultiplicityEstimate, EngineError> {
    let k = function.samples.len();
    if k < 2 {
        return Err(EngineError::TooFewSamples(k));
    }
    let last = extrapolant(&function.samples, k, d);
    let prev = extrapolant(&function.samples, k - 1, d);
    Ok(MultiplicityEstimate {
        value: last.clone(),
        method: EstimateMethod::Richardson,
        uncertainty: (last - prev).abs(),
        samples_used: k,
    })
}

/// Counts the degree-j standard monomials of a (possibly positive
/// dimensional) leading-term ideal: the graded piece dimension of the
/// quotient.
fn graded_dimension(basis: &GroebnerBasis, nvars: usize, degree: u32) -> u64 {
    let mut count = 0u64;
    let mut exps = vec![0u32; nvars];
    fn rec(
        basis: &GroebnerBasis,
        exps: &mut Vec<u32>,
        var: usize,
        remaining: u32,
        count: &mut u64,
    ) {
        let n = exps.len();
        if var == n - 1 {
            exps[var] = remaining;
            let m = Monomial::new(exps.clone());
            if !basis.leading_terms().iter().any(|lt| m.divisible_by(lt)) {
                *count += 1;
            }
            return;
        }
        for e in 0..=remaining {
            exps[var] = e;
            rec(basis, exps, var + 1, remaining - e, count);
        }
        exps[var] = 0;
    }
    rec(basis, &mut exps, 0, degree, &mut count);
    count
}

/// Hilbert-Samuel multiplicity e(R) by stabilized d-th finite differences
/// of lambda(R/m^n), computed as cumulative sums of graded piece dimensions.
pub fn hs_multiplicity(
    presentation: &RingPresentation,
    n_max: u32,
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<MultiplicityEstimate, EngineError> {
    let analysis = presentation.analyze(order, config)?;
    hs_multiplicity_with(presentation, &analysis, n_max)
}

pub fn hs_multiplicity_with(
    presentation: &RingPresentation,
    analysis: &RingAnalysis,
    n_max: u32,
) -> Result<MultiplicityEstimate, EngineError> {
    if !presentation.declared.graded {
        return Err(EngineError::NotGraded);
    }
    let d = analysis.dimension;
    let nvars = presentation.ring.nvars();
    // lambda(R/m^n) = sum of graded dimensions below degree n
    let mut colengths: Vec<i64> = Vec::with_capacity(n_max as usize);
    let mut acc: i64 = 0;
    for j in 0..n_max {
        acc += graded_dimension(&analysis.defining_basis, nvars, j) as i64;
        colengths.push(acc);
    }
    stabilized_difference(&colengths, d, n_max)
}

/// Hilbert-Samuel multiplicity of an arbitrary homogeneous m-primary ideal,
/// from lambda(R/I^n) for n = 1..n_max. Used for the parameter-ideal
/// cross-checks.
pub fn hs_multiplicity_of_ideal(
    presentation: &RingPresentation,
    ideal: &IdealPresentation,
    n_max: u32,
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<MultiplicityEstimate, EngineError> {
    if !presentation.declared.graded {
        return Err(EngineError::NotGraded);
    }
    let analysis = presentation.analyze(order, config)?;
    let d = analysis.dimension;
    let mut colengths: Vec<i64> = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let power = ideal.power(n)?;
        colengths.push(colength(presentation, &power, order, config)? as i64);
    }
    stabilized_difference(&colengths, d, n_max)
}

fn stabilized_difference(
    colengths: &[i64],
    d: usize,
    n_max: u32,
) -> Result<MultiplicityEstimate, EngineError> {
    // need at least two d-th differences to witness stabilization
    if colengths.len() < d + 2 {
        return Err(EngineError::NoStabilization {
            n_max,
            min: (d + 1) as u32,
        });
    }
    let mut diffs: Vec<i64> = colengths.to_vec();
    for _ in 0..d {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    let last = diffs[diffs.len() - 1];
    let prev = diffs[diffs.len() - 2];
    Ok(MultiplicityEstimate {
        value: BigRational::from_integer(last.into()),
        method: EstimateMethod::LeadingDifference,
        uncertainty: BigRational::from_integer((last - prev).abs().into()),
        samples_used: colengths.len(),
    })
}

/// Regularity test: lambda(R/m^[p]) equals p^d exactly iff R is regular.
pub fn is_regular(
    presentation: &RingPresentation,
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<bool, EngineError> {
    let analysis = presentation.analyze(order, config)?;
    is_regular_with(presentation, &analysis, order, config)
}

pub fn is_regular_with(
    presentation: &RingPresentation,
    analysis: &RingAnalysis,
    order: MonomialOrder,
    config: &BuchbergerConfig,
) -> Result<bool, EngineError> {
    let p = u64::from(presentation.prime());
    let m = presentation.maximal_ideal(order);
    let frob = frobenius_power(&m, p)?;
    let lambda = colength(presentation, &frob, order, config)?;
    let qd = p.pow(analysis.dimension as u32);
    Ok(lambda == qd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::rational::{rat, rat_int};

    const ORD: MonomialOrder = MonomialOrder::GrevLex;

    fn presentation(p: u32, vars: &[&str], relations: &[&str], name: &str) -> RingPresentation {
        let ring = PolyRing::new(p, vars).unwrap();
        let gens = relations
            .iter()
            .map(|s| parse_polynomial(s, &ring, ORD).unwrap())
            .collect();
        let ideal = IdealPresentation::new(&ring, ORD, gens).unwrap();
        RingPresentation::new(&ring, ideal, RingMetadata::bare(name)).unwrap()
    }

    fn cfg() -> BuchbergerConfig {
        BuchbergerConfig::default()
    }

    #[test]
    fn frobenius_power_examples() {
        let ring = PolyRing::new(3, &["x", "y", "z"]).unwrap();
        let gens = vec![
            parse_polynomial("x", &ring, ORD).unwrap(),
            parse_polynomial("y+z", &ring, ORD).unwrap(),
        ];
        let ideal = IdealPresentation::new(&ring, ORD, gens).unwrap();
        let cubed = frobenius_power(&ideal, 3).unwrap();
        let strings: Vec<String> = cubed.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(strings, vec!["x^3", "y^3 + z^3"]);
        // q = 1 is the identity
        assert_eq!(frobenius_power(&ideal, 1).unwrap(), ideal);
        // q must be a power of p
        assert!(matches!(
            frobenius_power(&ideal, 2),
            Err(EngineError::NotPowerOfCharacteristic { q: 2, p: 3 })
        ));
    }

    #[test]
    fn frobenius_of_monomial_ideal_scales_exponents() {
        let ring = PolyRing::new(3, &["x", "y"]).unwrap();
        let m2 = IdealPresentation::maximal_ideal(&ring, ORD).power(2).unwrap();
        let frob = frobenius_power(&m2, 3).unwrap();
        let mut strings: Vec<String> = frob.generators().iter().map(|g| g.to_string()).collect();
        strings.sort();
        assert_eq!(strings, vec!["x^3*y^3", "x^6", "y^6"]);
    }

    #[test]
    fn colength_examples() {
        // F_2[x,y] with I = (x^2, y^2)
        let reg = presentation(2, &["x", "y"], &[], "regular-p2-d2");
        let ring = reg.ring().clone();
        let i = IdealPresentation::new(
            &ring,
            ORD,
            vec![
                parse_polynomial("x^2", &ring, ORD).unwrap(),
                parse_polynomial("y^2", &ring, ORD).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(colength(&reg, &i, ORD, &cfg()).unwrap(), 4);

        // residue field
        let m = reg.maximal_ideal(ORD);
        assert_eq!(colength(&reg, &m, ORD, &cfg()).unwrap(), 1);

        // the quadric cone section
        let a1 = presentation(3, &["x", "y", "z"], &["x^2+y*z"], "a1");
        let m3 = frobenius_power(&a1.maximal_ideal(ORD), 3).unwrap();
        assert_eq!(colength(&a1, &m3, ORD, &cfg()).unwrap(), 13);
    }

    #[test]
    fn colength_rejects_non_primary_ideals() {
        let a1 = presentation(3, &["x", "y", "z"], &["x^2+y*z"], "a1");
        let ring = a1.ring().clone();
        let i = IdealPresentation::new(
            &ring,
            ORD,
            vec![parse_polynomial("y", &ring, ORD).unwrap()],
        )
        .unwrap();
        assert!(matches!(
            colength(&a1, &i, ORD, &cfg()),
            Err(EngineError::NotMPrimary { .. })
        ));
    }

    #[test]
    fn hk_function_of_regular_ring_is_q_to_the_d() {
        let reg = presentation(3, &["x", "y"], &[], "regular");
        let m = reg.maximal_ideal(ORD);
        let f = hk_function(&reg, &m, "m", 3, 2, ORD, &cfg()).unwrap();
        let cols: Vec<u64> = f.samples.iter().map(|s| s.colength).collect();
        assert_eq!(cols, vec![9, 81, 729]);
        for s in &f.samples {
            assert_eq!(s.normalized, rat_int(1));
        }
        let est = hk_estimate(&f, 2).unwrap();
        assert_eq!(est.value, rat_int(1));
        assert!(est.uncertainty.is_zero());
    }

    #[test]
    fn hk_function_of_the_quadric_cone() {
        let a1 = presentation(3, &["x", "y", "z"], &["x^2+y*z"], "a1");
        let m = a1.maximal_ideal(ORD);
        let f = hk_function(&a1, &m, "m", 2, 2, ORD, &cfg()).unwrap();
        let cols: Vec<u64> = f.samples.iter().map(|s| s.colength).collect();
        assert_eq!(cols, vec![13, 121]);
        let est = hk_estimate(&f, 2).unwrap();
        assert_eq!(est.value, rat(3, 2));
        assert_eq!(est.uncertainty, rat(1, 18));
    }

    #[test]
    fn hk_function_of_a_monomial_ideal() {
        let reg = presentation(3, &["x", "y"], &[], "regular");
        let m2 = reg.maximal_ideal(ORD).power(2).unwrap();
        let f = hk_function(&reg, &m2, "m^2", 2, 2, ORD, &cfg()).unwrap();
        let cols: Vec<u64> = f.samples.iter().map(|s| s.colength).collect();
        assert_eq!(cols, vec![27, 243]);
        let est = hk_estimate(&f, 2).unwrap();
        assert_eq!(est.value, rat_int(3));
        assert!(est.uncertainty.is_zero());
    }

    #[test]
    fn estimate_needs_two_samples() {
        let reg = presentation(3, &["x", "y"], &[], "regular");
        let m = reg.maximal_ideal(ORD);
        let f = hk_function(&reg, &m, "m", 1, 2, ORD, &cfg()).unwrap();
        assert!(matches!(
            hk_estimate(&f, 2),
            Err(EngineError::TooFewSamples(1))
        ));
    }

    #[test]
    fn three_point_estimate_recovers_exact_quadratic() {
        let a1 = presentation(3, &["x", "y", "z"], &["x^2+y*z"], "a1");
        let m = a1.maximal_ideal(ORD);
        let f = hk_function(&a1, &m, "m", 3, 2, ORD, &cfg()).unwrap();
        assert_eq!(f.samples[2].colength, 1093); // (3*27^2 - 1) / 2
        let est = hk_estimate(&f, 2).unwrap();
        assert_eq!(est.value, rat(3, 2));
        assert!(est.uncertainty.is_zero(), "full quadratic fit is exact");
    }

    #[test]
    fn hs_multiplicity_examples() {
        let a1 = presentation(5, &["x", "y", "z"], &["x^2+y*z"], "a1-p5");
        let est = hs_multiplicity(&a1, 8, ORD, &cfg()).unwrap();
        assert_eq!(est.value, rat_int(2));
        assert!(est.uncertainty.is_zero());

        let reg = presentation(5, &["x", "y"], &[], "regular");
        let est = hs_multiplicity(&reg, 8, ORD, &cfg()).unwrap();
        assert_eq!(est.value, rat_int(1));
        assert!(est.uncertainty.is_zero());

        let cusp = presentation(3, &["x", "y"], &["x^3"], "cusp");
        let est = hs_multiplicity(&cusp, 8, ORD, &cfg()).unwrap();
        assert_eq!(est.value, rat_int(3));
        assert!(est.uncertainty.is_zero());
    }

    #[test]
    fn hs_multiplicity_requires_graded_and_depth() {
        let ring = PolyRing::new(3, &["x", "y"]).unwrap();
        let ideal = IdealPresentation::new(&ring, ORD, vec![]).unwrap();
        let mut meta = RingMetadata::bare("nongraded");
        meta.graded = false;
        let r = RingPresentation::new(&ring, ideal, meta).unwrap();
        assert!(matches!(
            hs_multiplicity(&r, 8, ORD, &cfg()),
            Err(EngineError::NotGraded)
        ));

        let reg = presentation(3, &["x", "y"], &[], "regular");
        assert!(matches!(
            hs_multiplicity(&reg, 3, ORD, &cfg()),
            Err(EngineError::NoStabilization { .. })
        ));
    }

    #[test]
    fn regularity_test() {
        let reg = presentation(3, &["x", "y"], &[], "regular");
        assert!(is_regular(&reg, ORD, &cfg()).unwrap());

        let a1 = presentation(3, &["x", "y", "z"], &["x^2+y*z"], "a1");
        assert!(!is_regular(&a1, ORD, &cfg()).unwrap());

        // the double line: lambda(R/m^[2]) = 4 > 2
        let line2 = presentation(2, &["x", "y"], &["y^2"], "line2");
        assert!(!is_regular(&line2, ORD, &cfg()).unwrap());
    }

    #[test]
    fn graded_validation_and_dimension_cross_check() {
        let ring = PolyRing::new(5, &["x", "y"]).unwrap();
        let gens = vec![parse_polynomial("x^3 - y^2", &ring, ORD).unwrap()];
        let ideal = IdealPresentation::new(&ring, ORD, gens).unwrap();
        let err = RingPresentation::new(&ring, ideal, RingMetadata::bare("cusp-affine"))
            .unwrap_err();
        assert!(matches!(err, EngineError::NotHomogeneous(..)));

        let mut meta = RingMetadata::bare("wrong-dim");
        meta.expected_dimension = Some(3);
        let ring = PolyRing::new(3, &["x", "y"]).unwrap();
        let ideal = IdealPresentation::new(&ring, ORD, vec![]).unwrap();
        let r = RingPresentation::new(&ring, ideal, meta).unwrap();
        assert!(matches!(
            r.analyze(ORD, &cfg()),
            Err(EngineError::DimensionMismatch { computed: 2, declared: 3, .. })
        ));
    }

    #[test]
    fn frobenius_composition() {
        let ring = PolyRing::new(3, &["x", "y", "z"]).unwrap();
        let gens = vec![
            parse_polynomial("x^2+y*z", &ring, ORD).unwrap(),
            parse_polynomial("x*y", &ring, ORD).unwrap(),
        ];
        let ideal = IdealPresentation::new(&ring, ORD, gens).unwrap();
        let twice = frobenius_power(&frobenius_power(&ideal, 3).unwrap(), 3).unwrap();
        let once = frobenius_power(&ideal, 9).unwrap();
        assert_eq!(twice, once);
    }
}
