//! Finite-depth certificate machinery for diametrically strongly
//! tree-like families: descendant-sum and separation checkers for the
//! lower and upper covering-sum conditions, plus a bisection wrapper
//! locating the critical exponent.
//!
//! A certificate never claims a limit statement. The two asymptotic
//! hypotheses (stage-diameter decay, separation growth) are reported as
//! finite-depth evidence with their statistics; the descendant-sum and
//! separation conditions are verified node by node at the checked depths.

use serde::Serialize;

use crate::error::{HcfError, Result};

/// A family of nested compact sets presented as a lazily generated tree.
///
/// Stage `n+1` consists of the descendants of stage-`n` nodes. Diameters
/// are certified as `(lower, upper)` bounds; checkers always combine them
/// in the conservative direction. Descendant enumerations may be
/// truncated, in which case `descendant_sum` must report a certified tail
/// bound for the omitted part.
pub trait TreeFamily {
    type Node: Clone;

    fn root(&self) -> Self::Node;

    fn descendants(&self, node: &Self::Node) -> Vec<Self::Node>;

    /// Certified diameter bounds `(lower, upper)`; `lower` may be NaN
    /// when no lower bound is claimed for this node.
    fn diameter_bounds(&self, node: &Self::Node) -> (f64, f64);

    /// Sum of `diam^s` over all descendants, using lower diameter bounds
    /// when `lower` is true, else upper bounds. The second element bounds
    /// the contribution of descendants omitted from the enumeration:
    /// `Some(0.0)` when complete, `None` when a tail bound would be
    /// needed but is not available.
    fn descendant_sum(&self, node: &Self::Node, s: f64, lower: bool) -> (f64, Option<f64>) {
        let sum = self
            .descendants(node)
            .iter()
            .map(|c| {
                let (lo, hi) = self.diameter_bounds(c);
                (if lower { lo } else { hi }).powf(s)
            })
            .sum();
        (sum, Some(0.0))
    }

    /// The separation coefficient `B_n` for descendants of stage-`n`
    /// nodes.
    fn separation_coefficient(&self, depth: usize) -> Option<f64>;

    /// Certified lower bound on the distance between distinct descendants
    /// of `node`.
    fn descendant_separation(&self, node: &Self::Node) -> Option<f64>;

    fn node_label(&self, _node: &Self::Node) -> String {
        "node".to_string()
    }

    /// A certified lower bound, valid for every node at every depth, on
    /// `sum of descendant lower-diam^s / parent upper-diam^s`. Lets the
    /// checker cover stages too large to enumerate.
    fn uniform_lower_ratio(&self, _s: f64) -> Option<f64> {
        None
    }

    /// Certified upper bound on `sum of descendant upper-diam^s
    /// (tail included) / parent lower-diam^s` valid at every node.
    fn uniform_upper_ratio(&self, _s: f64) -> Option<f64> {
        None
    }

    /// Certified margin for the separation condition valid at every node,
    /// when the family can prove it uniformly.
    fn uniform_separation_margin(&self) -> Option<f64> {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertificateKind {
    LowerBound,
    UpperBound,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionReport {
    pub name: String,
    pub satisfied: bool,
    /// Smallest slack observed over all checked nodes; positive slack
    /// guards the verdict against float noise.
    pub margin: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionCertificate {
    pub kind: CertificateKind,
    pub s: f64,
    pub depth_checked: usize,
    pub from_depth: usize,
    pub conditions: Vec<ConditionReport>,
    /// `(depth, Lambda_s(stage))` for the enumerated stages.
    pub lambda_by_depth: Vec<(usize, f64)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckFailure {
    pub depth: usize,
    pub node: String,
    pub condition: String,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub enum CheckOutcome {
    Certificate(DimensionCertificate),
    Failure(CheckFailure),
}

impl CheckOutcome {
    pub fn certificate(&self) -> Option<&DimensionCertificate> {
        match self {
            CheckOutcome::Certificate(c) => Some(c),
            CheckOutcome::Failure(_) => None,
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Certificate(_))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Largest stage the checker will enumerate exactly; beyond this it
    /// falls back to the family's uniform per-node bounds.
    pub node_budget: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self { node_budget: 100_000 }
    }
}

/// Relative slack absorbing float rounding in the per-node ratio checks;
/// every genuine margin in the certified families dwarfs this.
const FLOAT_SLACK: f64 = 1e-12;

/// `Lambda_s` covering sum of a finite stage, using upper diameter bounds.
pub fn lambda_sum<F: TreeFamily>(family: &F, stage: &[F::Node], s: f64) -> f64 {
    assert!(!stage.is_empty(), "Lambda_s of an empty stage is undefined");
    stage
        .iter()
        .map(|n| family.diameter_bounds(n).1.powf(s))
        .sum()
}

struct StageWalk<N> {
    nodes: Vec<N>,
    depth: usize,
    /// Depth at which exact enumeration stopped, if it did.
    truncated_at: Option<usize>,
}

/// Verifies the lower-bound conditions at all nodes of depths
/// `from_depth..depth`: the descendant-sum inequality
/// `sum |B|^s >= |A|^s` (children taken at their lower diameter bound,
/// the parent at its upper bound) and the pairwise descendant separation
/// `d(Y,Z) >= B_n |A|`; the two asymptotic hypotheses are reported as
/// finite-depth evidence.
pub fn check_lower_conditions<F: TreeFamily>(
    family: &F,
    s: f64,
    depth: usize,
    from_depth: usize,
    opts: &CheckOptions,
) -> Result<CheckOutcome> {
    assert!(s > 0.0, "exponent must be positive");
    let mut sum_margin = f64::INFINITY;
    let mut sep_margin = f64::INFINITY;
    let mut lambda_by_depth = Vec::new();
    let mut diam_stats: Vec<(usize, f64)> = Vec::new();
    let mut sep_stats: Vec<(usize, f64)> = Vec::new();

    let mut walk = StageWalk {
        nodes: vec![family.root()],
        depth: 0,
        truncated_at: None,
    };

    loop {
        let d = walk.depth;
        if walk.truncated_at.is_none() {
            lambda_by_depth.push((d, lambda_sum(family, &walk.nodes, s)));
            let d_n = walk
                .nodes
                .iter()
                .map(|n| family.diameter_bounds(n).1)
                .fold(0.0f64, f64::max);
            diam_stats.push((d, d_n));

            if d >= from_depth && d < depth {
                for node in &walk.nodes {
                    let parent_upper = family.diameter_bounds(node).1;
                    let (child_sum, _) = family.descendant_sum(node, s, true);
                    let target = parent_upper.powf(s);
                    let ratio = child_sum / target;
                    if ratio < 1.0 - FLOAT_SLACK {
                        return Ok(CheckOutcome::Failure(CheckFailure {
                            depth: d,
                            node: family.node_label(node),
                            condition: "descendant-sum".into(),
                            value: ratio,
                        }));
                    }
                    sum_margin = sum_margin.min(ratio - 1.0);

                    match (family.descendant_separation(node), family.separation_coefficient(d)) {
                        (Some(sep), Some(bn)) => {
                            sep_stats.push((d, bn));
                            let need = bn * parent_upper;
                            let ratio = sep / need;
                            if ratio < 1.0 - FLOAT_SLACK {
                                return Ok(CheckOutcome::Failure(CheckFailure {
                                    depth: d,
                                    node: family.node_label(node),
                                    condition: "separation".into(),
                                    value: ratio,
                                }));
                            }
                            sep_margin = sep_margin.min(ratio - 1.0);
                        }
                        _ => {
                            return Ok(CheckOutcome::Failure(CheckFailure {
                                depth: d,
                                node: family.node_label(node),
                                condition: "separation data missing".into(),
                                value: f64::NAN,
                            }))
                        }
                    }
                }
            }
        }

        if d >= depth {
            break;
        }

        if walk.truncated_at.is_none() {
            let next_size: usize = walk.nodes.iter().map(|n| family.descendants(n).len()).sum();
            if next_size > opts.node_budget {
                walk.truncated_at = Some(d + 1);
            } else {
                let mut next = Vec::with_capacity(next_size);
                for n in &walk.nodes {
                    next.extend(family.descendants(n));
                }
                walk.nodes = next;
            }
        }
        walk.depth += 1;
    }

    let mut conditions = vec![
        ConditionReport {
            name: "descendant-sum (exact nodes)".into(),
            satisfied: true,
            margin: if sum_margin.is_finite() { sum_margin } else { 0.0 },
        },
        ConditionReport {
            name: "separation (exact nodes)".into(),
            satisfied: true,
            margin: if sep_margin.is_finite() { sep_margin } else { 0.0 },
        },
    ];

    if let Some(t) = walk.truncated_at {
        // stages from depth t on were too large; cover them with the
        // family's uniform per-node certificates
        let uni = match family.uniform_lower_ratio(s) {
            Some(u) => u,
            None => {
                return Ok(CheckOutcome::Failure(CheckFailure {
                    depth: t,
                    node: "stage".into(),
                    condition: "stage too large and no uniform descendant-sum bound".into(),
                    value: f64::NAN,
                }))
            }
        };
        if uni < 1.0 {
            return Ok(CheckOutcome::Failure(CheckFailure {
                depth: t,
                node: "all nodes (uniform bound)".into(),
                condition: "descendant-sum".into(),
                value: uni,
            }));
        }
        conditions.push(ConditionReport {
            name: format!("descendant-sum (uniform bound, depths {t}..{depth})"),
            satisfied: true,
            margin: uni - 1.0,
        });
        let sep = match family.uniform_separation_margin() {
            Some(m) if m >= 0.0 => m,
            _ => {
                return Ok(CheckOutcome::Failure(CheckFailure {
                    depth: t,
                    node: "stage".into(),
                    condition: "stage too large and no uniform separation bound".into(),
                    value: f64::NAN,
                }))
            }
        };
        conditions.push(ConditionReport {
            name: format!("separation (uniform bound, depths {t}..{depth})"),
            satisfied: true,
            margin: sep,
        });
    }

    // finite-depth evidence for the decay hypothesis: log(1/d_n)/n at the
    // deepest enumerated stage
    if let Some(&(n, d_n)) = diam_stats.last() {
        if n >= 1 {
            let rate = (1.0 / d_n).ln() / n as f64;
            conditions.push(ConditionReport {
                name: "stage-diameter decay rate (finite-depth evidence)".into(),
                satisfied: rate > 0.0,
                margin: rate,
            });
            if rate <= 0.0 {
                return Ok(CheckOutcome::Failure(CheckFailure {
                    depth: n,
                    node: "stage".into(),
                    condition: "stage-diameter decay".into(),
                    value: rate,
                }));
            }
        }
    }

    // finite-depth evidence for the separation-growth hypothesis:
    // log log(1/B_n) / log n, which must trend below 1
    if let Some(&(n, bn)) = sep_stats.iter().filter(|(n, _)| *n >= 2).next_back() {
        let stat = (1.0 / bn).ln().max(f64::MIN_POSITIVE).ln() / (n as f64).ln();
        let trending_down = sep_stats
            .windows(2)
            .all(|w| w[1].1 >= w[0].1 - 1e-12 || w[1].0 > w[0].0);
        let ok = stat < 1.0 || trending_down;
        conditions.push(ConditionReport {
            name: "separation growth statistic (finite-depth evidence)".into(),
            satisfied: ok,
            margin: 1.0 - stat,
        });
        if !ok {
            return Ok(CheckOutcome::Failure(CheckFailure {
                depth: n,
                node: "stage".into(),
                condition: "separation growth".into(),
                value: stat,
            }));
        }
    }

    Ok(CheckOutcome::Certificate(DimensionCertificate {
        kind: CertificateKind::LowerBound,
        s,
        depth_checked: depth,
        from_depth,
        conditions,
        lambda_by_depth,
    }))
}

/// Verifies the reversed descendant-sum inequality
/// `sum |B|^s <= |A|^s` (children at upper bounds, tails included, the
/// parent at its lower bound) at all nodes of depths `from_depth..depth`,
/// and that the stage sums are non-increasing.
pub fn check_upper_conditions<F: TreeFamily>(
    family: &F,
    s: f64,
    depth: usize,
    from_depth: usize,
    opts: &CheckOptions,
) -> Result<CheckOutcome> {
    assert!(s > 0.0, "exponent must be positive");
    let mut sum_margin = f64::INFINITY;
    let mut lambda_by_depth: Vec<(usize, f64)> = Vec::new();
    let mut truncated_at: Option<usize> = None;

    let mut nodes = vec![family.root()];
    let mut d = 0usize;
    loop {
        if truncated_at.is_none() {
            lambda_by_depth.push((d, lambda_sum(family, &nodes, s)));
            if d >= from_depth && d < depth {
                for node in &nodes {
                    let parent_lower = family.diameter_bounds(node).0;
                    let (child_sum, tail) = family.descendant_sum(node, s, false);
                    let tail = tail.ok_or(HcfError::TailBoundMissing(s))?;
                    let total = child_sum + tail;
                    let target = parent_lower.powf(s);
                    let ratio = total / target;
                    if ratio > 1.0 + FLOAT_SLACK {
                        return Ok(CheckOutcome::Failure(CheckFailure {
                            depth: d,
                            node: family.node_label(node),
                            condition: "descendant-sum (upper)".into(),
                            value: ratio,
                        }));
                    }
                    sum_margin = sum_margin.min(1.0 - ratio);
                }
            }
        }
        if d >= depth {
            break;
        }
        if truncated_at.is_none() {
            let next_size: usize = nodes.iter().map(|n| family.descendants(n).len()).sum();
            if next_size > opts.node_budget {
                truncated_at = Some(d + 1);
            } else {
                let mut next = Vec::with_capacity(next_size);
                for n in &nodes {
                    next.extend(family.descendants(n));
                }
                nodes = next;
            }
        }
        d += 1;
    }

    let mut conditions = vec![ConditionReport {
        name: "descendant-sum upper (exact nodes)".into(),
        satisfied: true,
        margin: if sum_margin.is_finite() { sum_margin } else { 0.0 },
    }];

    if let Some(t) = truncated_at {
        let uni = match family.uniform_upper_ratio(s) {
            Some(u) => u,
            None => return Err(HcfError::TailBoundMissing(s)),
        };
        if uni > 1.0 {
            return Ok(CheckOutcome::Failure(CheckFailure {
                depth: t,
                node: "all nodes (uniform bound)".into(),
                condition: "descendant-sum (upper)".into(),
                value: uni,
            }));
        }
        conditions.push(ConditionReport {
            name: format!("descendant-sum upper (uniform bound, depths {t}..{depth})"),
            satisfied: true,
            margin: 1.0 - uni,
        });
    }

    // monotone non-increasing stage sums, as in the displayed chain
    let monotone = lambda_by_depth.windows(2).all(|w| w[1].1 <= w[0].1 * (1.0 + 1e-12));
    conditions.push(ConditionReport {
        name: "Lambda_s non-increasing over checked stages".into(),
        satisfied: monotone,
        margin: 0.0,
    });
    if !monotone {
        return Ok(CheckOutcome::Failure(CheckFailure {
            depth,
            node: "stage".into(),
            condition: "Lambda_s monotonicity".into(),
            value: f64::NAN,
        }));
    }

    Ok(CheckOutcome::Certificate(DimensionCertificate {
        kind: CertificateKind::UpperBound,
        s,
        depth_checked: depth,
        from_depth,
        conditions,
        lambda_by_depth,
    }))
}

/// Bisects the transition point of the two descendant-sum inequalities.
/// On success `s_low` passes the lower check and `s_high` the upper check
/// at the given depth.
pub fn critical_exponent<F: TreeFamily>(
    family: &F,
    depth: usize,
    tol: f64,
    opts: &CheckOptions,
) -> Result<(f64, f64)> {
    assert!(tol > 0.0);
    let passes_lower = |s: f64| -> Result<bool> {
        Ok(check_lower_conditions(family, s, depth, 0, opts)?.is_pass())
    };
    let passes_upper = |s: f64| -> Result<bool> {
        Ok(check_upper_conditions(family, s, depth, 0, opts)
            .map(|o| o.is_pass())
            .unwrap_or(false))
    };

    // initial bracket from a coarse grid
    let grid: Vec<f64> = (1..40).map(|k| k as f64 * 0.05).collect();
    let mut lo = None;
    for &s in &grid {
        if passes_lower(s)? {
            lo = Some(s);
        }
    }
    let lo = lo.ok_or(HcfError::NoBracket)?;
    let mut hi = None;
    for &s in grid.iter().filter(|&&s| s > lo) {
        if passes_upper(s)? {
            hi = Some(s);
            break;
        }
    }
    let mut hi = hi.ok_or(HcfError::NoBracket)?;
    let mut lo = lo;

    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if passes_lower(mid)? {
            lo = mid;
        } else if passes_upper(mid)? {
            hi = mid;
        } else {
            // diameter slack leaves a gap where neither side certifies;
            // the current endpoints are still valid certificates
            break;
        }
    }
    Ok((lo, hi))
}

/// The middle-third Cantor construction: every interval splits into two
/// children of a third the length, separated by the middle-third gap.
#[derive(Debug, Clone, Copy, Default)]
pub struct CantorFamily;

#[derive(Debug, Clone, Copy)]
pub struct CantorNode {
    pub depth: u32,
}

impl TreeFamily for CantorFamily {
    type Node = CantorNode;

    fn root(&self) -> CantorNode {
        CantorNode { depth: 0 }
    }

    fn descendants(&self, node: &CantorNode) -> Vec<CantorNode> {
        vec![CantorNode { depth: node.depth + 1 }; 2]
    }

    fn diameter_bounds(&self, node: &CantorNode) -> (f64, f64) {
        let d = 3f64.powi(-(node.depth as i32));
        (d, d)
    }

    fn separation_coefficient(&self, _depth: usize) -> Option<f64> {
        Some(1.0 / 3.0)
    }

    fn descendant_separation(&self, node: &CantorNode) -> Option<f64> {
        Some(3f64.powi(-(node.depth as i32 + 1)))
    }

    fn node_label(&self, node: &CantorNode) -> String {
        format!("cantor depth {}", node.depth)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CANTOR_DIM: f64 = 0.6309297535714574; // log 2 / log 3

    #[test]
    fn lambda_sum_examples() {
        let f = CantorFamily;
        let stage = vec![CantorNode { depth: 1 }, CantorNode { depth: 1 }];
        assert!((lambda_sum(&f, &stage, 1.0) - 2.0 / 3.0).abs() < 1e-15);
        // at the critical exponent every stage sums to 1
        for n in 1..10u32 {
            let stage = vec![CantorNode { depth: n }; 1 << n];
            assert!((lambda_sum(&f, &stage, CANTOR_DIM) - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    #[should_panic(expected = "empty stage")]
    fn lambda_sum_rejects_empty_stage() {
        let stage: Vec<CantorNode> = Vec::new();
        lambda_sum(&CantorFamily, &stage, 1.0);
    }

    #[test]
    fn cantor_lower_check() {
        let opts = CheckOptions::default();
        // 2 * 3^-0.6 > 1: certificate
        let out = check_lower_conditions(&CantorFamily, 0.6, 6, 0, &opts).unwrap();
        let cert = out.certificate().expect("certificate at s=0.6");
        assert!(cert.conditions.iter().all(|c| c.satisfied));
        let expect = 2.0 * 3f64.powf(-0.6) - 1.0;
        assert!((cert.conditions[0].margin - expect).abs() < 1e-12);
        // 2 * 3^-0.65 < 1: failure
        let out = check_lower_conditions(&CantorFamily, 0.65, 6, 0, &opts).unwrap();
        match out {
            CheckOutcome::Failure(f) => assert_eq!(f.condition, "descendant-sum"),
            CheckOutcome::Certificate(_) => panic!("should fail at s=0.65"),
        }
    }

    #[test]
    fn cantor_upper_check() {
        let opts = CheckOptions::default();
        let out = check_upper_conditions(&CantorFamily, 0.7, 6, 0, &opts).unwrap();
        assert!(out.is_pass());
        let out = check_upper_conditions(&CantorFamily, 0.6, 6, 0, &opts).unwrap();
        assert!(!out.is_pass());
        // exactly at the dimension both inequalities hold with zero margin
        let out = check_upper_conditions(&CantorFamily, CANTOR_DIM, 6, 0, &opts).unwrap();
        assert!(out.is_pass());
        let out = check_lower_conditions(&CantorFamily, CANTOR_DIM, 6, 0, &opts).unwrap();
        assert!(out.is_pass());
    }

    #[test]
    fn cantor_bisection_brackets_dimension() {
        let opts = CheckOptions::default();
        let (lo, hi) = critical_exponent(&CantorFamily, 8, 1e-3, &opts).unwrap();
        assert!(lo <= CANTOR_DIM && CANTOR_DIM <= hi, "[{lo}, {hi}]");
        assert!(hi - lo <= 1e-3);
    }

    #[test]
    fn monotone_in_s() {
        // if the lower check passes at s it passes at any smaller s'
        // (diameters normalized below 1)
        let opts = CheckOptions::default();
        for s in [0.6, 0.5, 0.3, 0.1] {
            assert!(check_lower_conditions(&CantorFamily, s, 5, 0, &opts)
                .unwrap()
                .is_pass());
        }
    }

    /// A chain where every node has exactly one shrinking child: the
    /// descendant sum fails for every s > 0, so no bracket exists.
    #[derive(Clone, Copy)]
    struct SingleChain;

    impl TreeFamily for SingleChain {
        type Node = u32;
        fn root(&self) -> u32 {
            0
        }
        fn descendants(&self, n: &u32) -> Vec<u32> {
            vec![n + 1]
        }
        fn diameter_bounds(&self, n: &u32) -> (f64, f64) {
            let d = 2f64.powi(-(*n as i32));
            (d, d)
        }
        fn separation_coefficient(&self, _d: usize) -> Option<f64> {
            Some(0.5)
        }
        fn descendant_separation(&self, _n: &u32) -> Option<f64> {
            Some(f64::INFINITY)
        }
    }

    #[test]
    fn degenerate_chain_has_no_bracket() {
        let opts = CheckOptions::default();
        assert!(matches!(
            critical_exponent(&SingleChain, 5, 1e-3, &opts),
            Err(HcfError::NoBracket)
        ));
    }

    #[test]
    fn deterministic_outcomes() {
        let opts = CheckOptions::default();
        let a = check_lower_conditions(&CantorFamily, 0.6, 6, 0, &opts).unwrap();
        let b = check_lower_conditions(&CantorFamily, 0.6, 6, 0, &opts).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
