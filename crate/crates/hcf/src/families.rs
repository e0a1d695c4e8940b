//! Digit-restricted HCF families as certificate trees, with the
//! closed-form exponent bounds attached to them.
//!
//! Stage-`n` nodes are the admissible digit strings of length `n` under
//! the filter; since every filter here forces `|a| >= sqrt 8`, the
//! transition system stays on the full box and admissibility is
//! automatic. Diameters come from the sandwich
//! `gamma/|q_n|^2 <= diam <= 2/|q_n|^2`, globally scaled by 1/2 so the
//! root has diameter at most 1.
//!
//! All constants that enter certificates (`c2` through `c5`, the
//! separation coefficients) are produced by the derivation routines in
//! this module, each traceable through its `derivation` log; none are
//! hard-coded.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::bigc::BigFloat;
use crate::error::{HcfError, Result};
use crate::gauss::GaussianInt;
use crate::geometry::SeparationConstants;
use crate::jarnik::{DimensionCertificate, TreeFamily};

/// A positive, nondecreasing depth schedule `n -> real`, 1-indexed.
pub type Schedule = Arc<dyn Fn(usize) -> f64 + Send + Sync>;

/// `n -> scale * (n + offset)`.
pub fn linear_schedule(scale: f64, offset: f64) -> Schedule {
    Arc::new(move |n| scale * (n as f64 + offset))
}

/// Modulus bound for any tail value of a continued fraction whose digits
/// all have `|a| >= sqrt 8`: `|[0; a_1, a_2, ...]| <= 1/(sqrt 8 - 1/sqrt 2)`.
pub fn tail_modulus_bound() -> f64 {
    1.0 / (8f64.sqrt() - 1.0 / 2f64.sqrt())
}

#[derive(Clone)]
pub enum DigitFilter {
    /// `l <= |a| <= m`, Euclidean norm (the E_L^M sets).
    AnnulusConstant { l: f64, m: f64 },
    /// `|a| >= l` (the E_L sets); infinitely many digits per node.
    AnnulusLower { l: f64 },
    /// `f(n) <= ||a|| <= g(n)`, sup norm (the E_{f,g} sets).
    SupNormSchedule { f: Schedule, g: Schedule, c_prime: f64 },
}

impl fmt::Debug for DigitFilter {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DigitFilter::AnnulusConstant { l, m } => write!(w, "AnnulusConstant({l}, {m})"),
            DigitFilter::AnnulusLower { l } => write!(w, "AnnulusLower({l})"),
            DigitFilter::SupNormSchedule { c_prime, .. } => {
                write!(w, "SupNormSchedule(c'={c_prime})")
            }
        }
    }
}

/// A digit-string node: the string itself plus the running Q-pair
/// denominators. Components stay within `i128`; families are built for
/// finite depths where this cannot overflow.
#[derive(Debug, Clone)]
pub struct FamilyNode {
    pub digits: Vec<(i64, i64)>,
    pub q_prev: (i128, i128),
    pub q: (i128, i128),
}

impl FamilyNode {
    fn root() -> Self {
        Self { digits: Vec::new(), q_prev: (0, 0), q: (1, 0) }
    }

    pub fn depth(&self) -> usize {
        self.digits.len()
    }

    /// `|q_n|^2` as a float.
    pub fn q_norm(&self) -> f64 {
        let (a, b) = self.q;
        (a as f64) * (a as f64) + (b as f64) * (b as f64)
    }

    fn child_q(&self, b: (i64, i64)) -> (i128, i128) {
        let (br, bi) = (b.0 as i128, b.1 as i128);
        let (qr, qi) = self.q;
        let (pr, pi) = self.q_prev;
        (br * qr - bi * qi + pr, br * qi + bi * qr + pi)
    }
}

pub struct HcfTreeFamily {
    pub filter: DigitFilter,
    pub max_depth: usize,
    gamma: f64,
    k_sep: f64,
    /// Digit lists per depth: index `d` holds the digits available to a
    /// stage-`d` node. For `AnnulusLower` this is a finite representative
    /// subset; sums over all descendants go through the analytic tail
    /// bound instead.
    digit_lists: Vec<Vec<(i64, i64)>>,
}

const SQRT8: f64 = 2.8284271247461903;

/// Builds the certificate tree of a digit filter.
///
/// Every filter must keep all digits at modulus `>= sqrt 8`; below that
/// the Lemma-2.1-style lower diameter bound is unavailable and the family
/// is rejected with `FilterTooWeak`.
pub fn build_family(
    filter: DigitFilter,
    max_depth: usize,
    constants: &SeparationConstants,
) -> Result<HcfTreeFamily> {
    assert!(max_depth >= 1);
    let mut digit_lists = Vec::with_capacity(max_depth);
    match &filter {
        DigitFilter::AnnulusConstant { l, m } => {
            if *l < SQRT8 {
                return Err(HcfError::FilterTooWeak(*l));
            }
            let pts = euclidean_annulus(*l, *m);
            for _ in 0..max_depth {
                digit_lists.push(pts.clone());
            }
        }
        DigitFilter::AnnulusLower { l } => {
            if *l < SQRT8 {
                return Err(HcfError::FilterTooWeak(*l));
            }
            let reps = representative_digits(*l, 8);
            for _ in 0..max_depth {
                digit_lists.push(reps.clone());
            }
        }
        DigitFilter::SupNormSchedule { f, g, c_prime } => {
            assert!(*c_prime > 0.0 && *c_prime < 1.0);
            for d in 0..max_depth {
                let (fs, gs) = (f(d + 1), g(d + 1));
                if fs < SQRT8 {
                    return Err(HcfError::FilterTooWeak(fs));
                }
                assert!(fs <= c_prime * gs, "schedule must satisfy f <= c' g");
                digit_lists.push(sup_annulus(fs, gs));
            }
        }
    }
    for list in &digit_lists {
        assert!(!list.is_empty(), "filter admits no digits at some depth");
    }
    Ok(HcfTreeFamily {
        filter,
        max_depth,
        gamma: constants.gamma,
        k_sep: constants.k_sep,
        digit_lists,
    })
}

fn euclidean_annulus(lo: f64, hi: f64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let bound = hi.ceil() as i64;
    let (lo2, hi2) = (lo * lo, hi * hi);
    for re in -bound..=bound {
        for im in -bound..=bound {
            let n = (re * re + im * im) as f64;
            if n >= lo2 && n <= hi2 && n >= 2.0 {
                out.push((re, im));
            }
        }
    }
    out
}

fn sup_annulus(lo: f64, hi: f64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let bound = hi.floor() as i64;
    let lo_i = lo.ceil() as i64;
    for re in -bound..=bound {
        for im in -bound..=bound {
            let s = re.abs().max(im.abs());
            if s >= lo_i && re * re + im * im >= 2 {
                out.push((re, im));
            }
        }
    }
    out
}

/// The lowest-modulus digits of `{|b| >= l}`: a finite stand-in stage for
/// the infinite digit set, enlarged until it holds at least `want` points.
fn representative_digits(l: f64, want: usize) -> Vec<(i64, i64)> {
    let mut width = 16.0f64.max(l / 8.0);
    loop {
        let hi = (l * l + width).sqrt();
        let pts = euclidean_annulus(l, hi);
        if pts.len() >= want {
            return pts;
        }
        width *= 2.0;
    }
}

impl HcfTreeFamily {
    fn digits_at(&self, depth: usize) -> &[(i64, i64)] {
        &self.digit_lists[depth.min(self.digit_lists.len() - 1)]
    }

    /// `Sigma (|b|+1)^{-2s}` over the depth-`d` digit list: the lattice
    /// factor of the per-node lower descendant-sum bound.
    fn lower_lattice_sum(&self, depth: usize, s: f64) -> f64 {
        self.digits_at(depth)
            .iter()
            .map(|&(re, im)| {
                let r = ((re * re + im * im) as f64).sqrt();
                (r + 1.0).powf(-2.0 * s)
            })
            .sum()
    }

    fn upper_lattice_sum(&self, depth: usize, s: f64) -> f64 {
        self.digits_at(depth)
            .iter()
            .map(|&(re, im)| {
                let r = ((re * re + im * im) as f64).sqrt();
                (r - 1.0).powf(-2.0 * s)
            })
            .sum()
    }
}

impl TreeFamily for HcfTreeFamily {
    type Node = FamilyNode;

    fn root(&self) -> FamilyNode {
        FamilyNode::root()
    }

    fn descendants(&self, node: &FamilyNode) -> Vec<FamilyNode> {
        self.digits_at(node.depth())
            .iter()
            .map(|&b| {
                let mut digits = node.digits.clone();
                digits.push(b);
                FamilyNode { digits, q_prev: node.q, q: node.child_q(b) }
            })
            .collect()
    }

    fn diameter_bounds(&self, node: &FamilyNode) -> (f64, f64) {
        let nq = node.q_norm();
        (self.gamma / (2.0 * nq), 1.0 / nq)
    }

    fn descendant_sum(&self, node: &FamilyNode, s: f64, lower: bool) -> (f64, Option<f64>) {
        if !lower {
            if let DigitFilter::AnnulusLower { l } = self.filter {
                // every descendant is covered analytically:
                // |q_{n+1}| >= (|b|-1)|q_n|, so the full child sum is at
                // most S(l, s)/|q_n|^{2s} with S the certified lattice tail
                let tail = lattice_tail_bound(l, s).bound / node.q_norm().powf(s);
                return (0.0, Some(tail));
            }
        }
        let sum = self
            .digits_at(node.depth())
            .iter()
            .map(|&b| {
                let (cr, ci) = node.child_q(b);
                let nq = (cr as f64) * (cr as f64) + (ci as f64) * (ci as f64);
                if lower {
                    (self.gamma / (2.0 * nq)).powf(s)
                } else {
                    nq.powf(-s)
                }
            })
            .sum();
        let tail = match self.filter {
            // omitted digits only enlarge a lower sum; for upper sums the
            // enumeration is complete
            DigitFilter::AnnulusLower { .. } => Some(0.0),
            _ => Some(0.0),
        };
        (sum, tail)
    }

    fn separation_coefficient(&self, depth: usize) -> Option<f64> {
        let u = tail_modulus_bound();
        match &self.filter {
            DigitFilter::AnnulusConstant { m, .. } => {
                Some(self.k_sep / (4.0 * (1.0 + u).powi(2) * (m + 1.0).powi(2)))
            }
            DigitFilter::AnnulusLower { .. } => None,
            DigitFilter::SupNormSchedule { g, .. } => {
                let c3 = self.k_sep / (16.0 * (1.0 + u).powi(2));
                Some(c3 / g(depth + 1).powi(2))
            }
        }
    }

    fn descendant_separation(&self, node: &FamilyNode) -> Option<f64> {
        let u = tail_modulus_bound();
        let nq = node.q_norm();
        match &self.filter {
            // distinct digits b, c: the image points differ by at least
            // k/(|b+beta||c+alpha|) before the contraction by
            // 1/(|q_n|^2 (1+u)^2); the global 1/2 scale is included
            DigitFilter::AnnulusConstant { m, .. } => {
                Some(self.k_sep / (2.0 * (1.0 + u).powi(2) * (m + 1.0).powi(2) * nq))
            }
            DigitFilter::AnnulusLower { .. } => None,
            DigitFilter::SupNormSchedule { g, .. } => {
                let gs = g(node.depth() + 1);
                Some(self.k_sep / (4.0 * (1.0 + u).powi(2) * (gs + 1.0).powi(2) * nq))
            }
        }
    }

    fn node_label(&self, node: &FamilyNode) -> String {
        let parts: Vec<String> = node
            .digits
            .iter()
            .map(|(re, im)| GaussianInt::new(*re, *im).to_string())
            .collect();
        format!("[{}]", parts.join(", "))
    }

    fn uniform_lower_ratio(&self, s: f64) -> Option<f64> {
        // sum of child lower diameters over parent upper diameter:
        // (gamma/2)^s Sigma (|b|+1)^{-2s}, valid at every node since
        // |q_{n+1}| <= (|b|+1)|q_n|
        let base = (self.gamma / 2.0).powf(s);
        (0..self.max_depth)
            .map(|d| base * self.lower_lattice_sum(d, s))
            .fold(None, |acc: Option<f64>, v| {
                Some(acc.map_or(v, |a| a.min(v)))
            })
    }

    fn uniform_upper_ratio(&self, s: f64) -> Option<f64> {
        let base = (2.0 / self.gamma).powf(s);
        match self.filter {
            DigitFilter::AnnulusLower { l } => {
                if s <= 1.0 {
                    return None;
                }
                Some(base * lattice_tail_bound(l, s).bound)
            }
            _ => (0..self.max_depth)
                .map(|d| base * self.upper_lattice_sum(d, s))
                .fold(None, |acc: Option<f64>, v| {
                    Some(acc.map_or(v, |a| a.max(v)))
                }),
        }
    }

    fn uniform_separation_margin(&self) -> Option<f64> {
        match &self.filter {
            // by construction B_n is half of what the certified distance
            // bound supports, at every node
            DigitFilter::AnnulusConstant { .. } => Some(1.0),
            DigitFilter::AnnulusLower { .. } => None,
            DigitFilter::SupNormSchedule { g, .. } => {
                let g1 = g(1);
                Some(4.0 * (g1 / (g1 + 1.0)).powi(2) - 1.0)
            }
        }
    }
}

/// Certified upper bound on `Sigma_{|b| >= l} (|b|-1)^{-2s}` for `s > 1`,
/// `l >= 3`, from the annulus count `#{b: r <= |b| < r+1} <= 2 pi (r+1) + 4`
/// and an integral comparison; the derivation log records each step.
#[derive(Debug, Clone, Serialize)]
pub struct TailBound {
    pub bound: f64,
    pub derivation: Vec<String>,
}

pub fn lattice_tail_bound(l: f64, s: f64) -> TailBound {
    assert!(s > 1.0, "tail converges only for s > 1");
    assert!(l >= 3.0, "bound uses |b| - 1 >= 2");
    let r0 = l.floor();
    let t0 = r0 - 1.0;
    // every b with |b| >= l lies in an annulus [r, r+1) with r >= floor(l)
    // and satisfies |b| - 1 >= r - 1 =: t; the count per annulus is at
    // most 2 pi (r+1) + 4 = 2 pi t + 4 pi + 4
    let p = 2.0 * s - 1.0;
    let sum_p = t0.powf(-p) + t0.powf(1.0 - p) / (p - 1.0);
    let q = 2.0 * s;
    let sum_q = t0.powf(-q) + t0.powf(1.0 - q) / (q - 1.0);
    let bound = 2.0 * PI * sum_p + (4.0 * PI + 4.0) * sum_q;
    TailBound {
        bound,
        derivation: vec![
            format!("annulus count: #{{b: r <= |b| < r+1}} <= 2*pi*(r+1) + 4"),
            format!("substitute t = r - 1 >= {t0}: sum <= Sigma_t (2*pi*t + 4*pi + 4) t^(-2s)"),
            format!(
                "integral comparison: Sigma_{{t>={t0}}} t^(-{p}) <= {t0}^(-{p}) + {t0}^(1-{p})/({p}-1) = {sum_p}"
            ),
            format!(
                "integral comparison: Sigma_{{t>={t0}}} t^(-{q}) <= {t0}^(-{q}) + {t0}^(1-{q})/({q}-1) = {sum_q}"
            ),
            format!("total: 2*pi*{sum_p} + (4*pi+4)*{sum_q} = {bound}"),
        ],
    }
}

/// The closed-form lower dimension bound for E_L^M:
/// `s(M) = 2 log M / (2 log M + 2 log(1 + 1/M) - log(gamma/2))`.
pub fn lower_exponent_closed_form(m: f64, gamma: f64) -> f64 {
    assert!(m > 1.0);
    assert!(gamma > 0.0 && gamma <= 2.0);
    let lm = m.ln();
    2.0 * lm / (2.0 * lm + 2.0 * (1.0 + 1.0 / m).ln() - (gamma / 2.0).ln())
}

/// The same formula evaluated in 256-bit fixed point, with `gamma` taken
/// at full precision; used as an independent cross-check of the `f64`
/// path.
pub fn lower_exponent_closed_form_hp(m: u64, constants: &SeparationConstants) -> f64 {
    let bits = 256;
    let two = BigFloat::from_u32(2, bits);
    let m_bf = BigFloat::from_ratio(m as i64, 1, bits);
    let lm = m_bf.ln();
    let l1p = BigFloat::from_ratio(m as i64 + 1, m as i64, bits).ln();
    // gamma/2 recomputed from |xi| at matching precision
    let xi_abs = rescale_bf(&constants.xi_abs, bits);
    let one = BigFloat::from_u32(1, bits);
    let den = xi_abs.add(&one);
    let half_gamma = xi_abs.div(&den.mul(&den));
    let num = two.mul(&lm);
    let denom = num.add(&two.mul(&l1p)).sub(&half_gamma.ln());
    num.div(&denom).to_f64()
}

fn rescale_bf(x: &BigFloat, bits: u32) -> BigFloat {
    use num_bigint::BigInt;
    let m = if x.bits <= bits {
        &x.m << (bits - x.bits)
    } else {
        let k = x.bits - bits;
        (&x.m + (BigInt::from(1) << (k - 1))) >> k
    };
    BigFloat { m, bits }
}

/// The derived (L_min, c2) pair certifying `dim_H E_L <= 1 + epsilon` for
/// all `L >= L_min`: the smallest integer `L` where the per-node upper
/// descendant-sum ratio `(2/gamma)^(1+eps) * S(L, 1+eps)` drops to 1.
#[derive(Debug, Clone, Serialize)]
pub struct UpperThreshold {
    pub l_min: f64,
    pub c2: f64,
    pub epsilon: f64,
    pub derivation: Vec<String>,
}

pub fn upper_exponent_threshold(epsilon: f64, gamma: f64) -> UpperThreshold {
    assert!(epsilon > 0.0 && epsilon < 1.0);
    let s = 1.0 + epsilon;
    let base = (2.0 / gamma).powf(s);
    let ratio = |l: f64| base * lattice_tail_bound(l, s).bound;
    let (mut lo, mut hi) = (3i64, 8i64);
    while ratio(hi as f64) > 1.0 {
        hi *= 2;
        assert!(hi < 1 << 40, "threshold search diverged");
    }
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if ratio(mid as f64) <= 1.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let l_min = hi as f64;
    let tb = lattice_tail_bound(l_min, s);
    let c2 = base * tb.bound * l_min.powf(2.0 * epsilon);
    let mut derivation = vec![
        format!("per-node ratio: sum of child upper diam^s over parent lower diam^s <= (2/gamma)^{s} * S(L, {s})"),
        format!("(2/gamma)^{s} = {base}"),
    ];
    derivation.extend(tb.derivation);
    derivation.push(format!(
        "L_min = {l_min}: ratio = {} <= 1; c2 = ratio * L^(2*eps) = {c2}",
        base * tb.bound
    ));
    UpperThreshold { l_min, c2, epsilon, derivation }
}

/// One evaluation of the schedule growth condition: the ratio
/// `(2 log g(n+1) + log(1 - f^2/g^2) + log c5) /
///  (2 log g(n+1) + 2 log(1 + 1/g(n+1)) - log(gamma/2))`
/// must exceed `s`.
#[derive(Debug, Clone, Serialize)]
pub struct ScheduleCheck {
    pub n: usize,
    pub ratio: f64,
    pub holds: bool,
    pub margin: f64,
    pub c4: f64,
    pub c5: f64,
}

pub fn schedule_condition(
    f: &Schedule,
    g: &Schedule,
    c_prime: f64,
    s: f64,
    n: usize,
    gamma: f64,
) -> ScheduleCheck {
    assert!(c_prime > 0.0 && c_prime < 1.0);
    let (fs, gs) = (f(n + 1), g(n + 1));
    assert!(fs <= c_prime * gs, "schedule must satisfy f <= c' g");
    let (c4, c5) = schedule_constants(g, c_prime, s);
    let num = 2.0 * gs.ln() + (1.0 - (fs / gs).powi(2)).ln() + c5.ln();
    let den = 2.0 * gs.ln() + 2.0 * (1.0 + 1.0 / gs).ln() - (gamma / 2.0).ln();
    let ratio = num / den;
    ScheduleCheck { n, ratio, holds: ratio > s, margin: ratio - s, c4, c5 }
}

/// Derives `(c4, c5)` for the schedule chain:
/// `c4 = 2^{-s}` absorbs the sup-to-Euclidean norm gap
/// (`|b| + 1 <= sqrt 2 (g+1)`), and
/// `c5 = 4 c4 (1 - 1/((1-c') g(1)))` comes from the square-annulus count
/// `#{f <= ||b|| <= g} >= (2g-1)^2 - (2f+1)^2 = 4 (g^2-f^2)(1 - 1/(g-f))`
/// with `g - f >= (1-c') g >= (1-c') g(1)`.
pub fn schedule_constants(g: &Schedule, c_prime: f64, s: f64) -> (f64, f64) {
    let c4 = 2f64.powf(-s);
    let g1 = g(1);
    let slack = 1.0 - 1.0 / ((1.0 - c_prime) * g1);
    assert!(slack > 0.0, "schedule starts too low for the count bound");
    (c4, 4.0 * c4 * slack)
}

/// The least `N` such that the schedule condition holds for every
/// `n in N..=n_max`, if any.
pub fn schedule_threshold(
    f: &Schedule,
    g: &Schedule,
    c_prime: f64,
    s: f64,
    n_max: usize,
    gamma: f64,
) -> Option<usize> {
    let mut threshold = 1;
    let mut any = false;
    for n in 1..=n_max {
        let c = schedule_condition(f, g, c_prime, s, n, gamma);
        if !c.holds {
            threshold = n + 1;
        } else {
            any = true;
        }
    }
    (any && threshold <= n_max).then_some(threshold)
}

/// Finite-depth distortion check behind `dim E_L(N) = dim E_L`: cylinders
/// prefixed by a fixed admissible string are bi-Lipschitz images of the
/// unprefixed ones. Writing `u` for the tail modulus bound, the stage
/// covering sums must satisfy
/// `Lambda_s(prefixed) * |q(prefix)|^{2s} / Lambda_s(base)
///     in [(1+u)^{-2s}, (1-u)^{-2s}]`.
#[derive(Debug, Clone, Serialize)]
pub struct DistortionReport {
    pub normalized_ratio: f64,
    pub lo: f64,
    pub hi: f64,
    pub within: bool,
}

pub fn el_n_distortion_check(
    prefix: &[GaussianInt],
    family: &HcfTreeFamily,
    depth: usize,
    s: f64,
) -> Result<DistortionReport> {
    use num_bigint::BigInt;
    assert!(depth >= 1);
    for d in prefix {
        if d.norm() < BigInt::from(8) {
            return Err(HcfError::LowerBoundInapplicable(d.to_string()));
        }
    }
    let mut stage = vec![family.root()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for n in &stage {
            next.extend(family.descendants(n));
        }
        stage = next;
    }
    let base: f64 = stage.iter().map(|n| n.q_norm().powf(-s)).sum();
    let qp_prefix = crate::cf::q_pair(prefix);
    let prefix_norm = crate::gauss::big_to_f64(&qp_prefix.q.norm());
    let prefixed: f64 = stage
        .iter()
        .map(|n| {
            let mut all: Vec<GaussianInt> = prefix.to_vec();
            all.extend(n.digits.iter().map(|(re, im)| GaussianInt::new(*re, *im)));
            let qp = crate::cf::q_pair(&all);
            crate::gauss::big_to_f64(&qp.q.norm()).powf(-s)
        })
        .sum();
    let u = tail_modulus_bound();
    let normalized_ratio = prefixed / base * prefix_norm.powf(s);
    let lo = (1.0 + u).powf(-2.0 * s);
    let hi = (1.0 - u).powf(-2.0 * s);
    Ok(DistortionReport {
        normalized_ratio,
        lo,
        hi,
        within: normalized_ratio >= lo && normalized_ratio <= hi,
    })
}

/// CSV of the closed-form bound over a list of M values.
pub fn csv_m_scan(ms: &[f64], gamma: f64) -> String {
    let mut out = String::from("M,s_closed_form\n");
    for &m in ms {
        out.push_str(&format!("{},{:.15}\n", m, lower_exponent_closed_form(m, gamma)));
    }
    out
}

/// CSV of `(epsilon, L_min, c2)`.
pub fn csv_epsilon_scan(epsilons: &[f64], gamma: f64) -> String {
    let mut out = String::from("epsilon,L_min,c2\n");
    for &e in epsilons {
        let t = upper_exponent_threshold(e, gamma);
        out.push_str(&format!("{},{},{:.6}\n", e, t.l_min, t.c2));
    }
    out
}

/// CSV of the schedule-condition ratio over `n`.
pub fn csv_schedule_scan(
    f: &Schedule,
    g: &Schedule,
    c_prime: f64,
    s: f64,
    ns: &[usize],
    gamma: f64,
) -> String {
    let mut out = String::from("n,ratio,holds\n");
    for &n in ns {
        let c = schedule_condition(f, g, c_prime, s, n, gamma);
        out.push_str(&format!("{},{:.12},{}\n", n, c.ratio, c.holds));
    }
    out
}

/// CSV of `(depth, Lambda_s)` from a certificate.
pub fn csv_lambda(cert: &DimensionCertificate) -> String {
    let mut out = String::from("depth,lambda_s\n");
    for (d, v) in &cert.lambda_by_depth {
        out.push_str(&format!("{},{:.12e}\n", d, v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{derive_constants, valid_digits, FeasibleShape, NormFilter};
    use crate::jarnik::{check_lower_conditions, check_upper_conditions, CheckOptions};

    fn constants() -> SeparationConstants {
        derive_constants(192)
    }

    #[test]
    fn stage_digits_match_valid_digits() {
        let c = constants();
        let fam = build_family(DigitFilter::AnnulusConstant { l: 3.0, m: 4.0 }, 2, &c).unwrap();
        let root = fam.root();
        let kids = fam.descendants(&root);
        let oracle =
            valid_digits(FeasibleShape::FULL, NormFilter::Euclidean { lo: 3.0, hi: 4.0 }).unwrap();
        assert_eq!(kids.len(), oracle.len());
        assert_eq!(kids.len(), 24);
    }

    #[test]
    fn filter_too_weak_below_sqrt8() {
        let c = constants();
        assert!(matches!(
            build_family(DigitFilter::AnnulusConstant { l: 2.0, m: 5.0 }, 2, &c),
            Err(HcfError::FilterTooWeak(_))
        ));
    }

    #[test]
    fn closed_form_properties() {
        let gamma = constants().gamma;
        let mut prev = 0.0;
        for m in [10.0, 100.0, 1e3, 1e4, 1e5, 1e6, 1e9] {
            let s = lower_exponent_closed_form(m, gamma);
            assert!(s > prev && s < 1.0, "M={m}: {s}");
            prev = s;
        }
        // gamma = 2 drops the log(gamma/2) term entirely
        let s = lower_exponent_closed_form(100.0, 2.0);
        let expect = 2.0 * 100f64.ln() / (2.0 * 100f64.ln() + 2.0 * 1.01f64.ln());
        assert!((s - expect).abs() < 1e-15);
    }

    #[test]
    fn closed_form_hp_agrees() {
        let c = constants();
        for m in [10u64, 10_000, 1_000_000] {
            let fast = lower_exponent_closed_form(m as f64, c.gamma);
            let hp = lower_exponent_closed_form_hp(m, &c);
            assert!((fast - hp).abs() < 1e-12, "M={m}: {fast} vs {hp}");
        }
    }

    #[test]
    fn small_annulus_lower_certificate() {
        let c = constants();
        let s = lower_exponent_closed_form(6.0, c.gamma) - 1e-6;
        let fam = build_family(DigitFilter::AnnulusConstant { l: 3.0, m: 6.0 }, 2, &c).unwrap();
        let out = check_lower_conditions(&fam, s, 2, 0, &CheckOptions::default()).unwrap();
        let cert = out.certificate().expect("certificate below the closed form");
        assert!(cert.conditions[0].margin > 0.0);
        assert!(cert.conditions[1].margin > 0.0);
    }

    #[test]
    fn separation_supports_coefficient_with_factor_two() {
        let c = constants();
        let fam = build_family(DigitFilter::AnnulusConstant { l: 3.0, m: 6.0 }, 2, &c).unwrap();
        let node = &fam.descendants(&fam.root())[5];
        let sep = fam.descendant_separation(node).unwrap();
        let bn = fam.separation_coefficient(node.depth()).unwrap();
        let (_, upper) = fam.diameter_bounds(node);
        assert!((sep / (bn * upper) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn tail_bound_dominates_truncated_sum() {
        // direct summation up to |b| = 300 plus a remainder bound stays
        // below the one-shot bound from |b| = 40
        let s = 1.5;
        let direct: f64 = euclidean_annulus(40.0, 300.0)
            .iter()
            .map(|&(re, im)| {
                let r = ((re * re + im * im) as f64).sqrt();
                (r - 1.0).powf(-2.0 * s)
            })
            .sum();
        let remainder = lattice_tail_bound(301.0, s).bound;
        let bound = lattice_tail_bound(40.0, s).bound;
        assert!(direct + remainder < bound, "{direct} + {remainder} vs {bound}");
        assert!(direct < bound);
    }

    #[test]
    fn upper_threshold_and_certificate() {
        let c = constants();
        let t = upper_exponent_threshold(0.5, c.gamma);
        assert!(t.l_min > 2.0, "tail bound needs L > 2");
        assert!(t.c2 / t.l_min.powf(1.0) <= 1.0 + 1e-12);
        // larger epsilon must not need a larger L
        let t2 = upper_exponent_threshold(0.9, c.gamma);
        assert!(t2.l_min <= t.l_min);

        let fam = build_family(DigitFilter::AnnulusLower { l: t.l_min }, 2, &c).unwrap();
        let out = check_upper_conditions(&fam, 1.5, 2, 0, &CheckOptions::default()).unwrap();
        let cert = out.certificate().expect("upper certificate at 1+eps");
        assert!(cert.conditions.iter().all(|cond| cond.satisfied));
    }

    #[test]
    fn schedule_condition_behaviour() {
        let gamma = constants().gamma;
        let f = linear_schedule(1.0, 3.0);
        let g = linear_schedule(10.0, 3.0);
        let n0 = schedule_threshold(&f, &g, 0.1, 0.9, 200, gamma).expect("threshold exists");
        assert!(n0 <= 100, "N = {n0}");
        // below the threshold the condition fails, above it holds
        if n0 > 1 {
            assert!(!schedule_condition(&f, &g, 0.1, 0.9, n0 - 1, gamma).holds);
        }
        assert!(schedule_condition(&f, &g, 0.1, 0.9, n0, gamma).holds);
        // ratio is monotone and approaches 1 from below
        let mut prev = 0.0;
        for n in [1, 10, 100, 1000, 10_000] {
            let c = schedule_condition(&f, &g, 0.1, 0.9, n, gamma);
            assert!(c.ratio > prev);
            assert!(c.ratio < 1.0);
            prev = c.ratio;
        }
        // convergence is logarithmic: the gap shrinks like 1/ln g(n)
        assert!(prev > 0.94, "{prev}");
    }

    #[test]
    fn schedule_family_lower_check() {
        let c = constants();
        let f = linear_schedule(1.0, 3.0);
        let g = linear_schedule(10.0, 3.0);
        let fam = build_family(
            DigitFilter::SupNormSchedule { f, g, c_prime: 0.1 },
            2,
            &c,
        )
        .unwrap();
        let out = check_lower_conditions(&fam, 0.8, 2, 0, &CheckOptions::default()).unwrap();
        assert!(out.is_pass());
    }

    #[test]
    fn distortion_of_prefixed_family() {
        let c = constants();
        let fam = build_family(DigitFilter::AnnulusConstant { l: 3.0, m: 5.0 }, 2, &c).unwrap();
        let prefix = [GaussianInt::new(3, 4), GaussianInt::new(-4, 3)];
        let r = el_n_distortion_check(&prefix, &fam, 2, 0.8).unwrap();
        assert!(r.within, "{r:?}");
        // a small-digit prefix is rejected: no certified lower diameters
        let bad = [GaussianInt::new(1, 1)];
        assert!(el_n_distortion_check(&bad, &fam, 1, 0.8).is_err());
    }
}
