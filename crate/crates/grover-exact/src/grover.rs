//! Closed-form model of the Grover iteration: rotation angle, floating
//! and exact success probabilities, optimal iteration count, exactness
//! classification, and the 3-out-of-4 post-measurement strategy.

use std::f64::consts::PI;
use std::fmt;

use crate::error::Error;
use crate::exactmath::{chebyshev_like, Rational};

/// A search instance: database size N and number of targets t.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct InstanceParams {
    database_size: u64,
    target_count: u64,
}

impl InstanceParams {
    pub fn new(target_count: u64, database_size: u64) -> Result<Self, Error> {
        if database_size == 0 {
            return Err(Error::EmptyDatabase);
        }
        if target_count > database_size {
            return Err(Error::TooManyTargets { targets: target_count, size: database_size });
        }
        Ok(InstanceParams { database_size, target_count })
    }

    pub fn database_size(&self) -> u64 {
        self.database_size
    }

    pub fn target_count(&self) -> u64 {
        self.target_count
    }

    /// Rotation half-angle θ = arcsin(√(t/N)), in [0, π/2].
    pub fn theta(&self) -> f64 {
        (self.target_count as f64 / self.database_size as f64).sqrt().asin()
    }

    /// Exact cos(2θ) = 1 - 2t/N in reduced form.
    pub fn cos_two_theta(&self) -> Rational {
        let n = self.database_size as i128;
        let t = self.target_count as i128;
        Rational::new(n - 2 * t, n).expect("N >= 1")
    }

    /// Success probability after n iterations, sin²((2n+1)θ), in double
    /// precision.
    pub fn success_probability_float(&self, n: u64) -> f64 {
        let angle = (2 * n + 1) as f64 * self.theta();
        angle.sin().powi(2)
    }

    /// Exact success probability after n iterations.
    ///
    /// With φ = 2θ and m = 2n+1, p_n = (1 - cos(mφ))/2 and 2cos(mφ) =
    /// f_m(2cos φ), so p_n = (2 - f_m(2 - 4t/N)) / 4 in exact rational
    /// arithmetic.
    pub fn success_probability_exact(&self, n: u64) -> Rational {
        let m = 2 * n + 1;
        let value = chebyshev_like(m).eval(&self.two_cos_two_theta());
        prob_from_cheb_value(&value)
    }

    /// Exact success probabilities for all iteration counts 0..=n_max.
    ///
    /// Evaluates the f_m values at the fixed argument 2cos(2θ) by the
    /// three-term recurrence instead of building each polynomial; agrees
    /// with `success_probability_exact` entry by entry.
    pub fn success_probabilities_exact(&self, n_max: u64) -> Vec<Rational> {
        let x = self.two_cos_two_theta();
        let mut out = Vec::with_capacity(n_max as usize + 1);
        // f_m(x) for m = 0, 1, ...; keep the last two values.
        let mut prev = Rational::from_integer(2);
        let mut cur = x.clone();
        let mut m = 1u64;
        loop {
            if m % 2 == 1 {
                out.push(prob_from_cheb_value(&cur));
                if out.len() as u64 == n_max + 1 {
                    return out;
                }
            }
            let next = &(&x * &cur) - &prev;
            prev = cur;
            cur = next;
            m += 1;
        }
    }

    fn two_cos_two_theta(&self) -> Rational {
        let n = self.database_size as i128;
        let t = self.target_count as i128;
        Rational::new(2 * n - 4 * t, n).expect("N >= 1")
    }

    /// The iteration count maximizing the success probability, per the
    /// floor/ceil rule around π/(4θ) - 1/2, together with that
    /// probability. Ties break toward the smaller count.
    pub fn optimal_iterations(&self) -> Result<(u64, f64), Error> {
        if self.target_count == 0 {
            return Err(Error::NoTargets);
        }
        let raw = PI / (4.0 * self.theta()) - 0.5;
        let lo = raw.floor().max(0.0) as u64;
        let hi = raw.ceil().max(0.0) as u64;
        let p_lo = self.success_probability_float(lo);
        let p_hi = self.success_probability_float(hi);
        if p_hi > p_lo {
            Ok((hi, p_hi))
        } else {
            Ok((lo, p_lo))
        }
    }

    /// The five-case exactness analysis for this instance, decided
    /// purely in rational arithmetic on cos(2θ).
    pub fn classify_exactness(&self) -> ExactnessVerdict {
        let c = self.cos_two_theta();
        let r = |n: i64, d: i64| Rational::new(n, d).unwrap();
        if c == r(1, 1) {
            ExactnessVerdict::TrivialNoTargets
        } else if c == r(-1, 1) {
            ExactnessVerdict::TrivialAllTargets
        } else if c == r(0, 1) {
            ExactnessVerdict::NeverExactConstantHalf
        } else if c == r(-1, 2) {
            let p = self.post_measurement_strategy().expect("cos2θ = -1/2 implies t/N = 3/4");
            ExactnessVerdict::NeverExactThreeQuarters { post_measurement_prob: p }
        } else if c == r(1, 2) {
            ExactnessVerdict::Exact { iterations: 1 }
        } else {
            ExactnessVerdict::NeverExactIrrationalAngle { cos_two_theta: c }
        }
    }

    /// Smallest n ≤ n_max with exact success probability 1, if any.
    ///
    /// Decided by exact rational equality; serves as an independent
    /// oracle against `classify_exactness`.
    pub fn exact_hit_search(&self, n_max: u64) -> Option<u64> {
        let one = Rational::one();
        self.success_probabilities_exact(n_max)
            .iter()
            .position(|p| p == &one)
            .map(|n| n as u64)
    }

    /// Success probability of the 3-out-of-4 post-measurement strategy:
    /// run one iteration (which lands entirely in the non-target
    /// subspace), measure, then guess uniformly among the other N-1
    /// entries. Equals t/(N-1); defined only for t/N = 3/4.
    pub fn post_measurement_strategy(&self) -> Result<Rational, Error> {
        if 4 * self.target_count != 3 * self.database_size {
            let ratio = Rational::new(self.target_count as i64, self.database_size as i64).unwrap();
            return Err(Error::NotThreeQuarters(ratio.to_string()));
        }
        Ok(Rational::new(self.target_count as i64, (self.database_size - 1) as i64).unwrap())
    }
}

fn prob_from_cheb_value(value: &Rational) -> Rational {
    (&Rational::from_integer(2) - value).checked_div(&Rational::from_integer(4)).unwrap()
}

/// Outcome of the exactness case analysis for one instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExactnessVerdict {
    /// t = 0: the search never succeeds.
    TrivialNoTargets,
    /// t = N: measuring the initial state already succeeds.
    TrivialAllTargets,
    /// p_n = 1 exactly at the carried (smallest) iteration count.
    Exact { iterations: u64 },
    /// t/N = 1/2: p_n = 1/2 for every n.
    NeverExactConstantHalf,
    /// t/N = 3/4: p_n cycles through 0 and 3/4; carries the success
    /// probability of the post-measurement strategy.
    NeverExactThreeQuarters { post_measurement_prob: Rational },
    /// cos(2θ) is rational but θ is not a rational multiple of π.
    NeverExactIrrationalAngle { cos_two_theta: Rational },
}

impl ExactnessVerdict {
    /// Variant name without payload, for counting and reports.
    pub fn class_name(&self) -> &'static str {
        match self {
            ExactnessVerdict::TrivialNoTargets => "TrivialNoTargets",
            ExactnessVerdict::TrivialAllTargets => "TrivialAllTargets",
            ExactnessVerdict::Exact { .. } => "Exact",
            ExactnessVerdict::NeverExactConstantHalf => "NeverExactConstantHalf",
            ExactnessVerdict::NeverExactThreeQuarters { .. } => "NeverExactThreeQuarters",
            ExactnessVerdict::NeverExactIrrationalAngle { .. } => "NeverExactIrrationalAngle",
        }
    }

    /// The iteration count at which success is certain, when it exists.
    pub fn exact_iterations(&self) -> Option<u64> {
        match self {
            ExactnessVerdict::Exact { iterations } => Some(*iterations),
            ExactnessVerdict::TrivialAllTargets => Some(0),
            _ => None,
        }
    }
}

impl fmt::Display for ExactnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactnessVerdict::TrivialNoTargets => write!(f, "TrivialNoTargets"),
            ExactnessVerdict::TrivialAllTargets => write!(f, "TrivialAllTargets"),
            ExactnessVerdict::Exact { iterations } => write!(f, "Exact({iterations})"),
            ExactnessVerdict::NeverExactConstantHalf => write!(f, "NeverExactConstantHalf"),
            ExactnessVerdict::NeverExactThreeQuarters { post_measurement_prob } => {
                write!(f, "NeverExactThreeQuarters({post_measurement_prob})")
            }
            ExactnessVerdict::NeverExactIrrationalAngle { cos_two_theta } => {
                write!(f, "NeverExactIrrationalAngle({cos_two_theta})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(t: u64, n: u64) -> InstanceParams {
        InstanceParams::new(t, n).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn theta_examples() {
        assert!((params(1, 4).theta() - PI / 6.0).abs() < 1e-15);
        assert_eq!(params(0, 7).theta(), 0.0);
        assert!((params(1, 2).theta() - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn cos_two_theta_examples() {
        assert_eq!(params(1, 4).cos_two_theta(), r(1, 2));
        assert_eq!(params(3, 4).cos_two_theta(), r(-1, 2));
        assert_eq!(params(1, 5).cos_two_theta(), r(3, 5));
    }

    #[test]
    fn float_probability_examples() {
        assert!((params(1, 4).success_probability_float(1) - 1.0).abs() < 1e-12);
        assert!((params(1, 2).success_probability_float(17) - 0.5).abs() < 1e-12);
        assert!((params(3, 3).success_probability_float(0) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_probability_examples() {
        assert_eq!(params(1, 4).success_probability_exact(1), Rational::one());
        for n in [0, 1, 7, 40] {
            assert_eq!(params(1, 2).success_probability_exact(n), r(1, 2));
        }
        assert_eq!(params(3, 4).success_probability_exact(1), Rational::zero());
        assert_eq!(params(3, 4).success_probability_exact(2), r(3, 4));
    }

    #[test]
    fn batch_matches_pointwise() {
        for (t, n) in [(1, 4), (1, 5), (2, 7), (0, 3), (3, 3), (5, 13)] {
            let p = params(t, n);
            let batch = p.success_probabilities_exact(12);
            for (i, expected) in batch.iter().enumerate() {
                assert_eq!(&p.success_probability_exact(i as u64), expected, "t={t} N={n} n={i}");
            }
        }
    }

    #[test]
    fn optimal_iterations_examples() {
        let (n, p) = params(1, 4).optimal_iterations().unwrap();
        assert_eq!(n, 1);
        assert!((p - 1.0).abs() < 1e-12);

        // candidates 0 and 1 tie at 1/2; the smaller wins
        let (n, p) = params(1, 2).optimal_iterations().unwrap();
        assert_eq!(n, 0);
        assert!((p - 0.5).abs() < 1e-12);

        // brute-force argmax oracle over the first rotation pass
        // (later passes can land closer to π/2 but cost more queries)
        let inst = params(1, 100);
        let (n, _) = inst.optimal_iterations().unwrap();
        let bound = (PI * 100f64.sqrt() / 4.0).ceil() as u64 + 2;
        let brute = (0..=bound)
            .max_by(|&a, &b| {
                inst.success_probability_float(a)
                    .partial_cmp(&inst.success_probability_float(b))
                    .unwrap()
            })
            .unwrap();
        assert_eq!(n, brute);
    }

    #[test]
    fn optimal_iterations_rejects_no_targets() {
        assert_eq!(params(0, 4).optimal_iterations(), Err(Error::NoTargets));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(params(1, 4).classify_exactness(), ExactnessVerdict::Exact { iterations: 1 });
        assert_eq!(params(2, 8).classify_exactness(), ExactnessVerdict::Exact { iterations: 1 });
        assert_eq!(
            params(1, 5).classify_exactness(),
            ExactnessVerdict::NeverExactIrrationalAngle { cos_two_theta: r(3, 5) }
        );
        assert_eq!(params(1, 2).classify_exactness(), ExactnessVerdict::NeverExactConstantHalf);
        assert_eq!(params(7, 7).classify_exactness(), ExactnessVerdict::TrivialAllTargets);
        assert_eq!(params(0, 9).classify_exactness(), ExactnessVerdict::TrivialNoTargets);
        assert_eq!(
            params(3, 4).classify_exactness(),
            ExactnessVerdict::NeverExactThreeQuarters { post_measurement_prob: r(1, 1) }
        );
    }

    #[test]
    fn exact_hit_search_examples() {
        assert_eq!(params(1, 4).exact_hit_search(8), Some(1));
        assert_eq!(params(1, 2).exact_hit_search(100), None);
        assert_eq!(params(5, 5).exact_hit_search(8), Some(0));
    }

    #[test]
    fn post_measurement_examples() {
        assert_eq!(params(3, 4).post_measurement_strategy().unwrap(), Rational::one());
        assert_eq!(params(6, 8).post_measurement_strategy().unwrap(), r(6, 7));
        assert_eq!(params(12, 16).post_measurement_strategy().unwrap(), r(4, 5));
        assert!(params(1, 4).post_measurement_strategy().is_err());
    }

    #[test]
    fn invalid_params_rejected() {
        assert_eq!(InstanceParams::new(5, 4), Err(Error::TooManyTargets { targets: 5, size: 4 }));
        assert_eq!(InstanceParams::new(0, 0), Err(Error::EmptyDatabase));
    }

    #[test]
    fn verdict_display() {
        assert_eq!(params(1, 4).classify_exactness().to_string(), "Exact(1)");
        assert_eq!(params(3, 4).classify_exactness().to_string(), "NeverExactThreeQuarters(1)");
        assert_eq!(params(1, 5).classify_exactness().to_string(), "NeverExactIrrationalAngle(3/5)");
    }
}
