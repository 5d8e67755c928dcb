//! Step-graphon engine: degree functionals, corner operators, degree
//! sorting, the density-preserving perturbation move, and the Jensen part
//! split.
//!
//! A step graphon is piecewise constant on a product partition of `[0, 1]`
//! with part masses `alpha` and a symmetric value matrix `beta`. All
//! functionals are evaluated in double precision. Part indices in the public
//! API are 1-based, matching the vertex convention elsewhere.

use crate::formulas;
use crate::{Error, Result};

const MASS_TOLERANCE: f64 = 1e-12;

/// Step graphon with `k` parts: masses `alpha` (positive, summing to 1) and
/// symmetric values `beta` in `[0, 1]` stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct StepGraphon {
    alpha: Vec<f64>,
    beta: Vec<f64>,
}

impl StepGraphon {
    pub fn new(alpha: Vec<f64>, beta: Vec<f64>) -> Result<Self> {
        let k = alpha.len();
        if k == 0 {
            return Err(Error::InvalidGraphon("needs at least one part".into()));
        }
        if beta.len() != k * k {
            return Err(Error::InvalidGraphon(format!(
                "beta has {} entries, expected {}",
                beta.len(),
                k * k
            )));
        }
        let total: f64 = alpha.iter().sum();
        if (total - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::InvalidGraphon(format!(
                "part masses sum to {total}, expected 1"
            )));
        }
        if alpha.iter().any(|&a| a <= 0.0) {
            return Err(Error::InvalidGraphon("part masses must be positive".into()));
        }
        for i in 0..k {
            for j in 0..k {
                let b = beta[i * k + j];
                if !(0.0..=1.0).contains(&b) {
                    return Err(Error::InvalidGraphon(format!(
                        "beta[{},{}] = {b} outside [0, 1]",
                        i + 1,
                        j + 1
                    )));
                }
                if b != beta[j * k + i] {
                    return Err(Error::InvalidGraphon(format!(
                        "beta not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(StepGraphon { alpha, beta })
    }

    /// One-part graphon with constant value `c`.
    pub fn constant(c: f64) -> Result<Self> {
        StepGraphon::new(vec![1.0], vec![c])
    }

    pub fn parts(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    /// Value on part pair `(i, j)`, 1-based.
    pub fn beta_at(&self, i: usize, j: usize) -> f64 {
        let k = self.parts();
        assert!(i >= 1 && i <= k && j >= 1 && j <= k, "part index out of range");
        self.beta[(i - 1) * k + (j - 1)]
    }

    #[inline]
    fn b(&self, i: usize, j: usize) -> f64 {
        self.beta[i * self.parts() + j]
    }

    /// Part degrees `d_i = sum_j alpha_j beta_ij`.
    pub fn degree_vector(&self) -> Vec<f64> {
        let k = self.parts();
        (0..k)
            .map(|i| (0..k).map(|j| self.alpha[j] * self.b(i, j)).sum())
            .collect()
    }

    /// Edge density `t = sum_ij alpha_i alpha_j beta_ij`.
    pub fn edge_density(&self) -> f64 {
        let k = self.parts();
        let mut t = 0.0;
        for i in 0..k {
            for j in 0..k {
                t += self.alpha[i] * self.alpha[j] * self.b(i, j);
            }
        }
        t
    }

    /// Star homomorphism density `t(S_k, W) = sum_i alpha_i d_i^k`.
    pub fn star_hom_density(&self, k: usize) -> f64 {
        assert!(k >= 1);
        self.degree_vector()
            .iter()
            .zip(&self.alpha)
            .map(|(d, a)| a * d.powi(k as i32))
            .sum()
    }

    /// Degree second moment `T(W) = sum_i alpha_i d_i^2`.
    pub fn second_moment(&self) -> f64 {
        self.star_hom_density(2)
    }

    /// Pointwise complement `1 - W`.
    pub fn complement(&self) -> StepGraphon {
        StepGraphon {
            alpha: self.alpha.clone(),
            beta: self.beta.iter().map(|b| 1.0 - b).collect(),
        }
    }

    /// Zero corner: prepend a part of mass `lambda` valued 0 against
    /// everything and rescale the existing masses by `1 - lambda`.
    pub fn corner_zero(&self, lambda: f64) -> Result<StepGraphon> {
        self.corner(lambda, 0.0)
    }

    /// One corner: append a part of mass `lambda` valued 1 against
    /// everything and rescale the existing masses by `1 - lambda`.
    pub fn corner_one(&self, lambda: f64) -> Result<StepGraphon> {
        self.corner(lambda, 1.0)
    }

    fn corner(&self, lambda: f64, value: f64) -> Result<StepGraphon> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::ParamOutOfRange {
                name: "lambda",
                value: lambda,
                range: "[0, 1]",
            });
        }
        if lambda == 0.0 {
            return Ok(self.clone());
        }
        if lambda == 1.0 {
            return StepGraphon::new(vec![1.0], vec![value]);
        }
        let k = self.parts();
        let mut alpha = Vec::with_capacity(k + 1);
        let mut beta = vec![value; (k + 1) * (k + 1)];
        // New part first for the zero corner, last for the one corner.
        let offset = if value == 0.0 { 1 } else { 0 };
        if value == 0.0 {
            alpha.push(lambda);
        }
        alpha.extend(self.alpha.iter().map(|a| a * (1.0 - lambda)));
        if value != 0.0 {
            alpha.push(lambda);
        }
        for i in 0..k {
            for j in 0..k {
                beta[(i + offset) * (k + 1) + (j + offset)] = self.b(i, j);
            }
        }
        StepGraphon::new(alpha, beta)
    }

    /// Parts permuted so the degree vector is nondecreasing. All functionals
    /// are invariant under the permutation.
    pub fn sort_by_degree(&self) -> StepGraphon {
        let k = self.parts();
        let degrees = self.degree_vector();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&i, &j| degrees[i].partial_cmp(&degrees[j]).unwrap());
        let alpha = order.iter().map(|&i| self.alpha[i]).collect();
        let mut beta = vec![0.0; k * k];
        for i in 0..k {
            for j in 0..k {
                beta[i * k + j] = self.b(order[i], order[j]);
            }
        }
        StepGraphon { alpha, beta }
    }

    pub fn is_degree_sorted(&self) -> bool {
        let d = self.degree_vector();
        d.windows(2).all(|w| w[0] <= w[1])
    }

    /// The density-preserving perturbation move on parts `(i, r, s)`,
    /// 1-based, `r < s`: decrease `beta_ir`, increase `beta_is` in the ratio
    /// that keeps the edge density fixed, pushed to the largest step that
    /// keeps all values in `[0, 1]`.
    ///
    /// Requires `beta_ir > 0` and `beta_is < 1`; at the returned step size at
    /// least one touched entry sits exactly on its bound (clipped to an exact
    /// 0 or 1, never a float a hair inside).
    pub fn perturb(&self, i: usize, r: usize, s: usize) -> Result<PerturbResult> {
        let k = self.parts();
        if !(1 <= r && r < s && s <= k) || i < 1 || i > k {
            return Err(Error::PerturbInapplicable {
                i,
                r,
                s,
                reason: format!("need 1 <= r < s <= {k} and 1 <= i <= {k}"),
            });
        }
        let (i0, r0, s0) = (i - 1, r - 1, s - 1);
        let b_ir = self.b(i0, r0);
        let b_is = self.b(i0, s0);
        if b_ir <= 0.0 {
            return Err(Error::PerturbInapplicable {
                i,
                r,
                s,
                reason: format!("beta[{i},{r}] = 0"),
            });
        }
        if b_is >= 1.0 {
            return Err(Error::PerturbInapplicable {
                i,
                r,
                s,
                reason: format!("beta[{i},{s}] = 1"),
            });
        }
        let delta_ir = if i == r { 1.0 } else { 0.0 };
        let delta_is = if i == s { 1.0 } else { 0.0 };
        let down_rate = (1.0 + delta_ir) * self.alpha[s0];
        let up_rate = (1.0 + delta_is) * self.alpha[r0];
        let eps_down = b_ir / down_rate;
        let eps_up = (1.0 - b_is) / up_rate;
        let epsilon = eps_down.min(eps_up);

        let mut beta = self.beta.clone();
        let mut set = |a: usize, b: usize, v: f64| {
            beta[a * k + b] = v;
            beta[b * k + a] = v;
        };
        let new_ir = if eps_down <= eps_up {
            0.0
        } else {
            b_ir - epsilon * down_rate
        };
        let new_is = if eps_up <= eps_down {
            1.0
        } else {
            b_is + epsilon * up_rate
        };
        set(i0, r0, new_ir.clamp(0.0, 1.0));
        set(i0, s0, new_is.clamp(0.0, 1.0));
        let result = StepGraphon::new(self.alpha.clone(), beta)?;
        Ok(PerturbResult { epsilon, result })
    }

    /// Jensen split of the last part. Requires the structure the perturbation
    /// endgame produces: degree-sorted, first row zero up to part `k-1`,
    /// last column one from part 2 on, and `beta_1k = fraction` strictly
    /// inside `(0, 1)`. The last part splits into masses
    /// `(1 - fraction) alpha_k` and `fraction * alpha_k`; the new last part
    /// is valued 1 against everything, the first row becomes 0 up to part k.
    ///
    /// Preserves edge density and weakly increases `D(F, .)` for convex `F`.
    pub fn split_part(&self, part: usize, fraction: f64) -> Result<StepGraphon> {
        let k = self.parts();
        if part != k {
            return Err(Error::SplitUnavailable(format!(
                "only the last part (index {k}) can be split, got {part}"
            )));
        }
        if k < 2 {
            return Err(Error::SplitUnavailable("need at least two parts".into()));
        }
        if !self.is_degree_sorted() {
            return Err(Error::SplitUnavailable("parts must be sorted by degree".into()));
        }
        let b_1k = self.b(0, k - 1);
        if !(b_1k > 0.0 && b_1k < 1.0) {
            return Err(Error::SplitUnavailable(format!(
                "beta[1,{k}] = {b_1k} must lie strictly inside (0, 1)"
            )));
        }
        if (fraction - b_1k).abs() > MASS_TOLERANCE {
            return Err(Error::SplitUnavailable(format!(
                "fraction {fraction} must equal beta[1,{k}] = {b_1k}"
            )));
        }
        for j in 1..k {
            if self.b(0, j - 1) != 0.0 {
                return Err(Error::SplitUnavailable(format!(
                    "beta[1,{j}] must be 0"
                )));
            }
        }
        for j in 2..=k {
            if self.b(j - 1, k - 1) != 1.0 {
                return Err(Error::SplitUnavailable(format!(
                    "beta[{j},{k}] must be 1"
                )));
            }
        }
        let mut alpha: Vec<f64> = self.alpha[..k - 1].to_vec();
        alpha.push((1.0 - b_1k) * self.alpha[k - 1]);
        alpha.push(b_1k * self.alpha[k - 1]);
        let kk = k + 1;
        let mut beta = vec![0.0; kk * kk];
        for i in 1..=kk {
            for j in 1..=kk {
                let v = if i == kk || j == kk {
                    1.0
                } else if i == 1 || j == 1 {
                    0.0
                } else {
                    self.b(i - 1, j - 1)
                };
                beta[(i - 1) * kk + (j - 1)] = v;
            }
        }
        StepGraphon::new(alpha, beta)
    }
}

/// Result of a perturbation move: the maximal step and the moved graphon.
#[derive(Clone, Debug)]
pub struct PerturbResult {
    pub epsilon: f64,
    pub result: StepGraphon,
}

/// A convex test function together with its derivative. The standard
/// instance is `x^k`.
pub struct ConvexTestFunction {
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    df: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl ConvexTestFunction {
    /// The power function `x^k`, `k >= 1`.
    pub fn power(k: usize) -> Self {
        assert!(k >= 1);
        ConvexTestFunction {
            f: Box::new(move |x| x.powi(k as i32)),
            df: Box::new(move |x| k as f64 * x.powi(k as i32 - 1)),
        }
    }

    /// User-supplied evaluator and derivative. Convexity is spot-checked on
    /// a 1000-point grid (derivative nondecreasing); a violation is a
    /// diagnostic error, not a proof of non-convexity.
    pub fn from_fns(
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        df: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let grid = 1000;
        let mut prev = df(0.0);
        for i in 1..=grid {
            let x = i as f64 / grid as f64;
            let cur = df(x);
            if cur < prev - 1e-9 {
                return Err(Error::NotConvex { x });
            }
            prev = cur;
        }
        Ok(ConvexTestFunction {
            f: Box::new(f),
            df: Box::new(df),
        })
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn deriv(&self, x: f64) -> f64 {
        (self.df)(x)
    }
}

/// `D(F, W) = sum_i alpha_i F(d_i)`, the integral of `F` over the degree
/// profile.
pub fn d_functional(f: &ConvexTestFunction, w: &StepGraphon) -> f64 {
    w.degree_vector()
        .iter()
        .zip(w.alpha())
        .map(|(d, a)| a * f.eval(*d))
        .sum()
}

/// `MAX(gamma, F)`: the larger of the two extremal degree profiles,
/// `(1 - sqrt(gamma)) F(0) + sqrt(gamma) F(sqrt(gamma))` and
/// `(1 - eta) F(eta) + eta F(1)` with `eta = 1 - sqrt(1 - gamma)`.
pub fn max_functional(gamma: f64, f: &ConvexTestFunction) -> Result<f64> {
    let eg = formulas::EtaGamma::from_gamma(gamma)?;
    let root = gamma.sqrt();
    let clique = (1.0 - root) * f.eval(0.0) + root * f.eval(root);
    let coclique = (1.0 - eg.eta) * f.eval(eg.eta) + eg.eta * f.eval(1.0);
    Ok(clique.max(coclique))
}

/// Strict check `D(F, W) < MAX(gamma, F) + delta` at `gamma = t(|, W)`.
pub fn is_delta_good(f: &ConvexTestFunction, w: &StepGraphon, delta: f64) -> bool {
    assert!(delta >= 0.0, "delta must be nonnegative");
    let gamma = w.edge_density();
    d_functional(f, w) < max_functional(gamma.clamp(0.0, 1.0), f).unwrap() + delta
}

/// True iff `t(S_k, W)` respects the extremal star bound at the graphon's
/// own edge density, with 1e-9 slack.
pub fn verify_star_density_bound(w: &StepGraphon, k: usize) -> bool {
    let gamma = w.edge_density().clamp(0.0, 1.0);
    w.star_hom_density(k) <= formulas::star_lower_bound(gamma, k).unwrap() + 1e-9
}

// ---------------------------------------------------------------------------
// Step graphon text format: a line "alpha <k reals>" followed by a line
// "beta <k*k reals>" (row-major symmetric matrix). Values are written with
// full round-trip precision.
// ---------------------------------------------------------------------------

pub fn parse_graphon(text: &str) -> Result<StepGraphon> {
    let mut alpha: Option<Vec<f64>> = None;
    let mut beta: Option<Vec<f64>> = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let field = tokens.next().unwrap();
        let values: std::result::Result<Vec<f64>, _> =
            tokens.map(|t| t.parse::<f64>()).collect();
        let values = values.map_err(|e| Error::Parse {
            line: lineno + 1,
            msg: format!("invalid real: {e}"),
        })?;
        match field {
            "alpha" => alpha = Some(values),
            "beta" => beta = Some(values),
            other => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    msg: format!("unknown field {other:?}, expected alpha or beta"),
                })
            }
        }
    }
    let alpha = alpha.ok_or(Error::Parse {
        line: 0,
        msg: "missing alpha line".into(),
    })?;
    let beta = beta.ok_or(Error::Parse {
        line: 0,
        msg: "missing beta line".into(),
    })?;
    StepGraphon::new(alpha, beta)
}

pub fn write_graphon(w: &StepGraphon) -> String {
    let k = w.parts();
    let mut out = String::from("alpha");
    for a in w.alpha() {
        out.push_str(&format!(" {a}"));
    }
    out.push_str("\nbeta");
    for i in 1..=k {
        for j in 1..=k {
            out.push_str(&format!(" {}", w.beta_at(i, j)));
        }
    }
    out.push('\n');
    out
}

/// Outcome of the iterated perturbation ascent.
#[derive(Clone, Debug)]
pub struct AscentOutcome {
    pub graphon: StepGraphon,
    pub steps: usize,
    /// True when no applicable move remains (for every part triple
    /// `i, r < s`: `beta_ir > 0` implies `beta_is = 1`).
    pub converged: bool,
}

/// Default step cap for [`ascend`].
pub const DEFAULT_ASCENT_CAP: usize = 10_000;

/// Repeatedly apply the perturbation move at the lexicographically first
/// applicable `(i, r, s)` after degree sorting, up to `cap` steps
/// ([`DEFAULT_ASCENT_CAP`] is the conventional choice).
///
/// No termination guarantee is known for the iteration, so hitting the cap
/// is a reported outcome, not an error.
pub fn ascend(w: &StepGraphon, cap: usize) -> AscentOutcome {
    let mut current = w.sort_by_degree();
    let mut steps = 0;
    loop {
        let k = current.parts();
        let mut next_move = None;
        'search: for i in 1..=k {
            for r in 1..=k {
                for s in (r + 1)..=k {
                    if current.beta_at(i, r) > 0.0 && current.beta_at(i, s) < 1.0 {
                        next_move = Some((i, r, s));
                        break 'search;
                    }
                }
            }
        }
        match next_move {
            None => {
                return AscentOutcome {
                    graphon: current,
                    steps,
                    converged: true,
                }
            }
            Some((i, r, s)) => {
                if steps == cap {
                    return AscentOutcome {
                        graphon: current,
                        steps,
                        converged: false,
                    };
                }
                current = current.perturb(i, r, s).unwrap().result.sort_by_degree();
                steps += 1;
            }
        }
    }
}
