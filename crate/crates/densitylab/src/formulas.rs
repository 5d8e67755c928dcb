//! Closed-form asymptotic density formulas and numeric bound evaluators.
//!
//! Evaluators use double precision; the desk-scale acceptance tolerances
//! (0.01 at n = 2000) dominate floating error by orders of magnitude.

use crate::counting::binomial_u128;
use crate::{Error, Result};

/// Edge density `gamma` together with `eta = 1 - sqrt(1 - gamma)`.
///
/// Invariant: `gamma = 2 eta - eta^2`, both in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EtaGamma {
    pub gamma: f64,
    pub eta: f64,
}

impl EtaGamma {
    pub fn from_gamma(gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::ParamOutOfRange {
                name: "gamma",
                value: gamma,
                range: "[0, 1]",
            });
        }
        Ok(EtaGamma {
            gamma,
            eta: 1.0 - (1.0 - gamma).sqrt(),
        })
    }

    pub fn from_eta(eta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&eta) {
            return Err(Error::ParamOutOfRange {
                name: "eta",
                value: eta,
                range: "[0, 1]",
            });
        }
        Ok(EtaGamma {
            gamma: 2.0 * eta - eta * eta,
            eta,
        })
    }
}

/// Largest asymptotic k-star density at edge density `gamma`:
/// `max(gamma^((k+1)/2), eta + (1-eta) eta^k)`, attained by a clique with
/// isolated vertices or its complement.
pub fn star_lower_bound(gamma: f64, k: usize) -> Result<f64> {
    if k < 1 {
        return Err(Error::ParamOutOfRange {
            name: "k",
            value: k as f64,
            range: ">= 1",
        });
    }
    let eg = EtaGamma::from_gamma(gamma)?;
    let clique = gamma.powf((k as f64 + 1.0) / 2.0);
    let coclique = eg.eta + (1.0 - eg.eta) * eg.eta.powi(k as i32);
    Ok(clique.max(coclique))
}

/// Asymptotic monotone-path3 density of the spider construction:
/// `-eta (eta^2 - 3) / 2`.
pub fn spider_limit(x: f64) -> Result<f64> {
    let eg = EtaGamma::from_gamma(x)?;
    let eta = eg.eta;
    Ok(-0.5 * eta * (eta * eta - 3.0))
}

/// Asymptotic monotone-path3 density of the banded construction, piecewise
/// around `eta = 1/2`; both branches give 3/4 there.
pub fn banded_limit(x: f64) -> Result<f64> {
    let eg = EtaGamma::from_gamma(x)?;
    let eta = eg.eta;
    if eta <= 0.5 {
        Ok(6.0 * eta.powi(3) + 6.0 * (1.0 - 2.0 * eta) * eta * eta)
    } else {
        Ok(2.0 * eta.powi(3) - 6.0 * eta * eta + 6.0 * eta - 1.0)
    }
}

/// The unique interior crossing of the spider and banded limits, found by
/// bisection to 1e-10. The spider construction dominates below, the banded
/// construction above.
pub fn crossing_x0() -> f64 {
    let h = |x: f64| spider_limit(x).unwrap() - banded_limit(x).unwrap();
    let mut lo = 0.01;
    let mut hi = 0.75;
    debug_assert!(h(lo) > 0.0 && h(hi) < 0.0);
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Value of the maximum asymptotic two-clique-pattern density; the regime
/// `sqrt(x_b) + sqrt(x_g) > 1` with `s != t` is open and reported as such.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ColoredMax {
    Known(f64),
    Unknown,
}

impl ColoredMax {
    pub fn known(self) -> Option<f64> {
        match self {
            ColoredMax::Known(v) => Some(v),
            ColoredMax::Unknown => None,
        }
    }
}

impl std::fmt::Display for ColoredMax {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ColoredMax::Known(v) => write!(f, "{v}"),
            ColoredMax::Unknown => write!(f, "unknown"),
        }
    }
}

/// Maximum asymptotic density of the two-clique pattern with parts `s <= t`
/// in hosts with blue and green densities `(x_b, x_g)`:
/// `x_b^(s/2) x_g^(t/2) C(s+t, s)` when `sqrt(x_b) + sqrt(x_g) <= 1`, and
/// `(x_r / 2)^s C(2s, s)` when it exceeds 1 and `s = t`.
pub fn colored_max_density(s: usize, t: usize, x_b: f64, x_g: f64) -> Result<ColoredMax> {
    if s < 2 || s > t {
        return Err(Error::ParamOutOfRange {
            name: "s",
            value: s as f64,
            range: "2 <= s <= t",
        });
    }
    for (name, v) in [("x_b", x_b), ("x_g", x_g)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::ParamOutOfRange {
                name,
                value: v,
                range: "[0, 1]",
            });
        }
    }
    if x_b + x_g > 1.0 {
        return Err(Error::ParamOutOfRange {
            name: "x_b + x_g",
            value: x_b + x_g,
            range: "<= 1",
        });
    }
    if x_b.sqrt() + x_g.sqrt() <= 1.0 {
        let choose = binomial_u128((s + t) as u64, s as u64) as f64;
        Ok(ColoredMax::Known(
            x_b.powf(s as f64 / 2.0) * x_g.powf(t as f64 / 2.0) * choose,
        ))
    } else if s == t {
        let x_r = 1.0 - x_b - x_g;
        let choose = binomial_u128(2 * s as u64, s as u64) as f64;
        Ok(ColoredMax::Known((x_r / 2.0).powi(s as i32) * choose))
    } else {
        Ok(ColoredMax::Unknown)
    }
}

/// Inducibility of the balanced two-clique pattern: `(1/4)^s C(2s, s)`,
/// the maximum of `colored_max_density(s, s, ., .)`, attained at (1/4, 1/4).
pub fn inducibility_kss(s: usize) -> Result<f64> {
    if s < 2 {
        return Err(Error::ParamOutOfRange {
            name: "s",
            value: s as f64,
            range: ">= 2",
        });
    }
    let choose = binomial_u128(2 * s as u64, s as u64) as f64;
    Ok(0.25f64.powi(s as i32) * choose)
}

/// Clique bound: the induced density of an r-clique at edge density `x` is
/// at most `x^(r/2)`.
pub fn kruskal_katona_bound(r: usize, x: f64) -> Result<f64> {
    if r < 2 {
        return Err(Error::ParamOutOfRange {
            name: "r",
            value: r as f64,
            range: ">= 2",
        });
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::ParamOutOfRange {
            name: "x",
            value: x,
            range: "[0, 1]",
        });
    }
    Ok(x.powf(r as f64 / 2.0))
}

/// Balanced-biclique bound: induced density of `K_{s,s}` at edge density `x`
/// is at most `C(2s, s) x^s / 2^s`.
pub fn lmr_bound(s: usize, x: f64) -> Result<f64> {
    if s < 2 {
        return Err(Error::ParamOutOfRange {
            name: "s",
            value: s as f64,
            range: ">= 2",
        });
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::ParamOutOfRange {
            name: "x",
            value: x,
            range: "[0, 1]",
        });
    }
    let choose = binomial_u128(2 * s as u64, s as u64) as f64;
    Ok(choose * x.powi(s as i32) / 2.0f64.powi(s as i32))
}
