//! Analytic storage/repair-bandwidth curves: the functional-repair outer
//! bound, the MSR and MBR extremes, space sharing, the whole-file-repair
//! baseline, and the two small-to-big constructions together with the
//! convex regions they span.
//!
//! Every value is an exact [`Rational`]. Points are reported per unit file
//! size; the `*_raw` variants keep the unnormalized values.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{hypergeom_weight, int, Rational};

/// The big system: `n` nodes, any `k` reconstruct, `d` helpers repair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub file_size: Rational,
}

impl SystemParams {
    pub fn new(n: usize, k: usize, d: usize) -> Result<Self> {
        Self::with_file_size(n, k, d, Rational::one())
    }

    pub fn with_file_size(n: usize, k: usize, d: usize, file_size: Rational) -> Result<Self> {
        if k < 1 || k > d || d + 1 > n {
            return Err(Error::InvalidParams(format!(
                "need 1 <= k <= d <= n-1, got (n,k,d) = ({n},{k},{d})"
            )));
        }
        if file_size <= Rational::zero() {
            return Err(Error::InvalidParams(format!(
                "file size must be positive, got {file_size}"
            )));
        }
        Ok(SystemParams { n, k, d, file_size })
    }

    /// Same `n` and `d`, reconstruction degree raised to `d`.
    fn repair_view(&self) -> SystemParams {
        SystemParams {
            k: self.d,
            ..self.clone()
        }
    }
}

impl fmt::Display for SystemParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.d)
    }
}

/// How the small code's parity count is tied to the big system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParityRule {
    /// `n_hat - k_hat = n - k`; used by construction 1 and the d = k region.
    Reconstruction,
    /// `n_hat - k_hat = n - d`; used by construction 2.
    Repair,
}

/// The embedded `(n_hat, k_hat)` MSR building block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallCode {
    pub n_hat: usize,
    pub k_hat: usize,
    pub alpha_hat: Rational,
}

impl SmallCode {
    pub fn new(n_hat: usize, k_hat: usize, alpha_hat: Rational) -> Result<Self> {
        if k_hat < 1 || k_hat >= n_hat {
            return Err(Error::InvalidParams(format!(
                "small code needs 1 <= k_hat < n_hat, got ({n_hat},{k_hat})"
            )));
        }
        if alpha_hat <= Rational::zero() {
            return Err(Error::InvalidParams("alpha_hat must be positive".into()));
        }
        Ok(SmallCode {
            n_hat,
            k_hat,
            alpha_hat,
        })
    }

    pub fn file_size(&self) -> Rational {
        int(self.k_hat as i64) * &self.alpha_hat
    }

    /// Ideal repair bandwidth at degree `d_hat` for an MSR code that is
    /// bandwidth-optimal at every degree: `d_hat * alpha_hat / (d_hat - k_hat + 1)`.
    pub fn bandwidth(&self, d_hat: usize) -> Result<Rational> {
        if d_hat < self.k_hat || d_hat + 1 > self.n_hat {
            return Err(Error::OutOfRange {
                name: "d_hat",
                value: d_hat as i64,
                lo: self.k_hat as i64,
                hi: self.n_hat as i64 - 1,
            });
        }
        Ok(Rational::new(
            (d_hat as i64).into(),
            ((d_hat - self.k_hat + 1) as i64).into(),
        ) * &self.alpha_hat)
    }
}

pub fn small_code_bandwidth(code: &SmallCode, d_hat: usize) -> Result<Rational> {
    code.bandwidth(d_hat)
}

/// Where a point came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Provenance {
    Msr,
    Mbr,
    FunctionalVertex(usize),
    SpaceShare,
    Baseline(usize),
    Construction1(usize),
    Construction2(usize),
}

impl Provenance {
    pub fn label(&self) -> &'static str {
        match self {
            Provenance::Msr => "MSR",
            Provenance::Mbr => "MBR",
            Provenance::FunctionalVertex(_) => "FUNCTIONAL-VERTEX",
            Provenance::SpaceShare => "SPACE-SHARE",
            Provenance::Baseline(_) => "BASELINE",
            Provenance::Construction1(_) => "CONSTRUCTION1",
            Provenance::Construction2(_) => "CONSTRUCTION2",
        }
    }

    /// The small-code `k_hat` for construction and baseline points.
    pub fn k_hat(&self) -> Option<usize> {
        match *self {
            Provenance::Baseline(k)
            | Provenance::Construction1(k)
            | Provenance::Construction2(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k_hat() {
            Some(k) => write!(f, "{}({k})", self.label()),
            None => f.write_str(self.label()),
        }
    }
}

/// A storage/bandwidth pair per unit file size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TradeoffPoint {
    pub alpha: Rational,
    pub gamma: Rational,
    pub provenance: Provenance,
}

impl TradeoffPoint {
    pub fn new(alpha: Rational, gamma: Rational, provenance: Provenance) -> Self {
        TradeoffPoint {
            alpha,
            gamma,
            provenance,
        }
    }

    pub fn same_value(&self, other: &TradeoffPoint) -> bool {
        self.alpha == other.alpha && self.gamma == other.gamma
    }

    /// `self` is at least as good in both coordinates and strictly better in one.
    pub fn dominates(&self, other: &TradeoffPoint) -> bool {
        self.alpha <= other.alpha
            && self.gamma <= other.gamma
            && (self.alpha < other.alpha || self.gamma < other.gamma)
    }
}

impl fmt::Display for TradeoffPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) [{}]", self.alpha, self.gamma, self.provenance)
    }
}

/// Unnormalized construction output: per-node storage, repair bandwidth and
/// the file size they carry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPoint {
    pub alpha: Rational,
    pub gamma: Rational,
    pub file_size: Rational,
}

impl RawPoint {
    pub fn normalized(&self, provenance: Provenance) -> TradeoffPoint {
        TradeoffPoint::new(
            &self.alpha / &self.file_size,
            &self.gamma / &self.file_size,
            provenance,
        )
    }
}

fn check_k_hat(k_hat: usize, max: usize) -> Result<()> {
    if k_hat < 1 || k_hat > max {
        return Err(Error::OutOfRange {
            name: "k_hat",
            value: k_hat as i64,
            lo: 1,
            hi: max as i64,
        });
    }
    Ok(())
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new((num as i64).into(), (den as i64).into())
}

/// Largest file storable under functional repair:
/// `sum_{i<k} min(alpha, (d-i) gamma / d)`.
pub fn functional_capacity(params: &SystemParams, alpha: &Rational, gamma: &Rational) -> Rational {
    (0..params.k)
        .map(|i| {
            let term = gamma * ratio(params.d - i, params.d);
            if *alpha < term {
                alpha.clone()
            } else {
                term
            }
        })
        .sum()
}

/// Whether a normalized point respects the functional-repair outer bound.
pub fn satisfies_outer_bound(params: &SystemParams, p: &TradeoffPoint) -> bool {
    functional_capacity(params, &p.alpha, &p.gamma) >= Rational::one()
}

/// Smallest `gamma` with `functional_capacity(alpha, gamma) >= file_size`.
pub fn min_functional_gamma(params: &SystemParams, alpha: &Rational) -> Result<Rational> {
    let m = &params.file_size;
    let min_alpha = m / int(params.k as i64);
    if *alpha < min_alpha {
        return Err(Error::Infeasible {
            alpha: alpha.to_string(),
            min: min_alpha.to_string(),
        });
    }
    // If the first `t` terms sit at alpha and the rest at (d-i) gamma / d,
    // gamma = (M - t alpha) d / sum_{i>=t} (d-i). The true minimum is the
    // smallest such candidate that actually reaches M.
    let d = params.d;
    (0..params.k)
        .filter_map(|t| {
            let rest = m - int(t as i64) * alpha;
            if rest <= Rational::zero() {
                return None;
            }
            let weight: usize = (t..params.k).map(|i| d - i).sum();
            Some(rest * ratio(d, weight))
        })
        .filter(|g| functional_capacity(params, alpha, g) >= *m)
        .min()
        .ok_or_else(|| Error::Infeasible {
            alpha: alpha.to_string(),
            min: min_alpha.to_string(),
        })
}

/// Corner points of the functional-repair curve, ordered from MSR to MBR.
pub fn functional_vertices(params: &SystemParams) -> Vec<TradeoffPoint> {
    let (k, d) = (params.k, params.d);
    (0..k)
        .rev()
        .map(|p| {
            let weight = (p + 1) * (d - p) + (p + 1..k).map(|i| d - i).sum::<usize>();
            let gamma = ratio(d, weight);
            let alpha = &gamma * ratio(d - p, d);
            TradeoffPoint::new(alpha, gamma, Provenance::FunctionalVertex(p))
        })
        .collect()
}

pub fn msr_point(params: &SystemParams) -> TradeoffPoint {
    let (k, d) = (params.k, params.d);
    TradeoffPoint::new(ratio(1, k), ratio(d, k * (d - k + 1)), Provenance::Msr)
}

pub fn mbr_point(params: &SystemParams) -> TradeoffPoint {
    let (k, d) = (params.k, params.d);
    let v = ratio(2 * d, k * (2 * d - k + 1));
    TradeoffPoint::new(v.clone(), v, Provenance::Mbr)
}

/// Small code for a given `k_hat`, with `alpha_hat = file_size / k_hat`.
pub fn match_small_code(
    params: &SystemParams,
    k_hat: usize,
    rule: ParityRule,
) -> Result<SmallCode> {
    let (max, parity) = match rule {
        ParityRule::Reconstruction => (params.k, params.n - params.k),
        ParityRule::Repair => (params.d, params.n - params.d),
    };
    check_k_hat(k_hat, max)?;
    SmallCode::new(k_hat + parity, k_hat, &params.file_size / int(k_hat as i64))
}

/// Distribution of the number of small-code nodes among `d` helpers drawn
/// from the `n - 1` survivors of a failed small-code node.
///
/// Returns `(d_hat, P[d_hat])` for `d_hat` in
/// `max(k_hat, d - (n - n_hat))..=min(n_hat - 1, d)`.
pub fn helper_overlap_weights(params: &SystemParams, small: &SmallCode) -> Vec<(usize, Rational)> {
    let (n, d) = (params.n, params.d);
    let lo = small.k_hat.max((d + small.n_hat).saturating_sub(n));
    let hi = (small.n_hat - 1).min(d);
    (lo..=hi)
        .map(|d_hat| {
            let w = hypergeom_weight(
                (n - 1) as u64,
                (small.n_hat - 1) as u64,
                d as u64,
                d_hat as i64,
            );
            (d_hat, w)
        })
        .collect()
}

/// Average storage per node and average repair bandwidth of the
/// heterogeneous code (small code plus `n - n_hat` empty nodes).
fn glued_storage_and_bandwidth(params: &SystemParams, small: &SmallCode) -> (Rational, Rational) {
    let alpha = ratio(small.n_hat, params.n) * &small.alpha_hat;
    let weights = helper_overlap_weights(params, small);
    debug_assert_eq!(
        weights.iter().map(|(_, w)| w).sum::<Rational>(),
        Rational::one()
    );
    let gamma = weights
        .iter()
        .map(|(d_hat, w)| ratio(*d_hat, d_hat - small.k_hat + 1) * w)
        .sum::<Rational>()
        * &alpha;
    (alpha, gamma)
}

pub fn construction1_raw(params: &SystemParams, k_hat: usize) -> Result<RawPoint> {
    let small = match_small_code(params, k_hat, ParityRule::Reconstruction)?;
    let (alpha, gamma) = glued_storage_and_bandwidth(params, &small);
    Ok(RawPoint {
        alpha,
        gamma,
        file_size: small.file_size(),
    })
}

/// Construction 1: the small `(k_hat + n - k, k_hat)` universal MSR code
/// padded with empty nodes and glued over all permutations.
pub fn construction1_point(params: &SystemParams, k_hat: usize) -> Result<TradeoffPoint> {
    Ok(construction1_raw(params, k_hat)?.normalized(Provenance::Construction1(k_hat)))
}

/// Average information held by `k` nodes when the small code occupies a
/// uniformly random set of `n_hat` positions: `sum_w min(w, k_hat) Q_w alpha_hat`.
pub fn construction2_file_size(params: &SystemParams, small: &SmallCode) -> Result<Rational> {
    let expected = params.n - params.d;
    if small.n_hat - small.k_hat != expected {
        return Err(Error::ParityMismatch {
            small: small.n_hat - small.k_hat,
            expected,
        });
    }
    let (n, k) = (params.n as u64, params.k as u64);
    let total: Rational = (0..=params.k)
        .map(|w| {
            int(w.min(small.k_hat) as i64) * hypergeom_weight(n, small.n_hat as u64, k, w as i64)
        })
        .sum();
    Ok(total * &small.alpha_hat)
}

pub fn construction2_raw(params: &SystemParams, k_hat: usize) -> Result<RawPoint> {
    let small = match_small_code(params, k_hat, ParityRule::Repair)?;
    let (alpha, gamma) = glued_storage_and_bandwidth(&params.repair_view(), &small);
    let file_size = construction2_file_size(params, &small)?;
    Ok(RawPoint {
        alpha,
        gamma,
        file_size,
    })
}

/// Construction 2: the `(n, d, d)` construction-1 code pre-coded so that any
/// `k` nodes recover the information they jointly hold.
pub fn construction2_point(params: &SystemParams, k_hat: usize) -> Result<TradeoffPoint> {
    Ok(construction2_raw(params, k_hat)?.normalized(Provenance::Construction2(k_hat)))
}

pub fn baseline_raw(params: &SystemParams, k_hat: usize) -> Result<RawPoint> {
    let small = match_small_code(params, k_hat, ParityRule::Repair)?;
    let alpha = ratio(small.n_hat, params.n) * &small.alpha_hat;
    let gamma = int(k_hat as i64) * &alpha;
    let file_size = construction2_file_size(params, &small)?;
    Ok(RawPoint {
        alpha,
        gamma,
        file_size,
    })
}

/// Same layout as the constructions but every repair downloads the whole
/// small-code file. `k_hat` runs up to `d` (equal to `k` when `d = k`).
pub fn baseline_point(params: &SystemParams, k_hat: usize) -> Result<TradeoffPoint> {
    Ok(baseline_raw(params, k_hat)?.normalized(Provenance::Baseline(k_hat)))
}

/// Construction 1 anchors for every `k_hat` plus MSR and MBR. Requires `d = k`.
pub fn theorem1_region(params: &SystemParams) -> Result<Region> {
    if params.d != params.k {
        return Err(Error::InvalidParams(format!(
            "the d = k region needs d = k, got {params}"
        )));
    }
    let mut anchors = (1..=params.k)
        .map(|kh| construction1_point(params, kh))
        .collect::<Result<Vec<_>>>()?;
    anchors.push(msr_point(params));
    anchors.push(mbr_point(params));
    Ok(Region::new(anchors))
}

/// Both constructions' anchors plus MSR and MBR.
pub fn theorem2_region(params: &SystemParams) -> Result<Region> {
    let mut anchors = (1..=params.k)
        .map(|kh| construction1_point(params, kh))
        .collect::<Result<Vec<_>>>()?;
    for kh in 1..=params.d {
        anchors.push(construction2_point(params, kh)?);
    }
    anchors.push(msr_point(params));
    anchors.push(mbr_point(params));
    Ok(Region::new(anchors))
}

pub fn space_sharing_curve(params: &SystemParams) -> Region {
    Region::new(vec![msr_point(params), mbr_point(params)])
}

/// The convex hull of the union of up-right quadrants anchored at each point.
///
/// All anchors are kept, including dominated ones; only
/// [`hull_vertices`](Region::hull_vertices) filters them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Region {
    pub anchors: Vec<TradeoffPoint>,
}

impl Region {
    pub fn new(anchors: Vec<TradeoffPoint>) -> Self {
        Region { anchors }
    }

    pub fn union(mut self, other: Region) -> Region {
        self.anchors.extend(other.anchors);
        self
    }

    /// Pareto-minimal anchors on the lower convex envelope, by increasing
    /// alpha. Consecutive slopes strictly increase.
    pub fn hull_vertices(&self) -> Result<Vec<TradeoffPoint>> {
        if self.anchors.is_empty() {
            return Err(Error::EmptyRegion);
        }
        let mut sorted: Vec<&TradeoffPoint> = self.anchors.iter().collect();
        sorted.sort_by(|a, b| {
            a.alpha
                .cmp(&b.alpha)
                .then_with(|| a.gamma.cmp(&b.gamma))
                .then_with(|| a.provenance.cmp(&b.provenance))
        });

        // Sorted by alpha, a point survives only if it beats every earlier gamma.
        let mut frontier: Vec<&TradeoffPoint> = Vec::new();
        for p in sorted {
            if frontier.last().is_none_or(|q| p.gamma < q.gamma) {
                frontier.push(p);
            }
        }

        let mut hull: Vec<&TradeoffPoint> = Vec::with_capacity(frontier.len());
        for p in frontier {
            while hull.len() >= 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if cross(a, b, p) <= Rational::zero() {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        Ok(hull.into_iter().cloned().collect())
    }

    /// Lower boundary of the region at `alpha`, or `None` left of every anchor.
    pub fn envelope_at(&self, alpha: &Rational) -> Result<Option<Rational>> {
        let hull = self.hull_vertices()?;
        if *alpha < hull[0].alpha {
            return Ok(None);
        }
        for pair in hull.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if *alpha <= b.alpha {
                let t = (alpha - &a.alpha) / (&b.alpha - &a.alpha);
                return Ok(Some(&a.gamma + t * (&b.gamma - &a.gamma)));
            }
        }
        Ok(Some(hull[hull.len() - 1].gamma.clone()))
    }

    /// Whether `(alpha, gamma)` lies in the region.
    pub fn contains(&self, alpha: &Rational, gamma: &Rational) -> Result<bool> {
        Ok(match self.envelope_at(alpha)? {
            Some(g) => *gamma >= g,
            None => false,
        })
    }
}

/// Free-function form of [`Region::hull_vertices`].
pub fn hull_vertices(region: &Region) -> Result<Vec<TradeoffPoint>> {
    region.hull_vertices()
}

/// Orientation of `a -> b -> c`; positive for a strict left (convex) turn.
fn cross(a: &TradeoffPoint, b: &TradeoffPoint, c: &TradeoffPoint) -> Rational {
    (&b.alpha - &a.alpha) * (&c.gamma - &a.gamma) - (&b.gamma - &a.gamma) * (&c.alpha - &a.alpha)
}

/// Compares slopes of consecutive hull segments; used by tests and callers
/// that want to assert strict convexity.
pub fn slopes_strictly_increase(hull: &[TradeoffPoint]) -> bool {
    let slopes: Vec<Rational> = hull
        .windows(2)
        .map(|w| (&w[1].gamma - &w[0].gamma) / (&w[1].alpha - &w[0].alpha))
        .collect();
    slopes.windows(2).all(|s| s[0].cmp(&s[1]) == Ordering::Less)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    fn p533() -> SystemParams {
        SystemParams::new(5, 3, 3).unwrap()
    }

    fn pt(a: (i64, i64), g: (i64, i64), prov: Provenance) -> TradeoffPoint {
        TradeoffPoint::new(rat(a.0, a.1), rat(g.0, g.1), prov)
    }

    #[test]
    fn params_validation() {
        assert!(SystemParams::new(5, 3, 3).is_ok());
        assert!(SystemParams::new(5, 0, 3).is_err());
        assert!(SystemParams::new(5, 4, 3).is_err());
        assert!(SystemParams::new(5, 3, 5).is_err());
        assert!(SystemParams::with_file_size(5, 3, 3, rat(0, 1)).is_err());
    }

    #[test]
    fn functional_capacity_at_extremes() {
        let p = p533();
        assert_eq!(functional_capacity(&p, &rat(1, 3), &rat(1, 1)), rat(1, 1));
        assert_eq!(functional_capacity(&p, &rat(1, 2), &rat(1, 2)), rat(1, 1));
        assert_eq!(functional_capacity(&p, &rat(0, 1), &rat(7, 1)), rat(0, 1));
    }

    #[test]
    fn min_functional_gamma_values() {
        let p = p533();
        assert_eq!(min_functional_gamma(&p, &rat(2, 5)).unwrap(), rat(3, 5));
        assert_eq!(min_functional_gamma(&p, &rat(1, 3)).unwrap(), rat(1, 1));
        assert_eq!(min_functional_gamma(&p, &rat(1, 2)).unwrap(), rat(1, 2));
        assert_eq!(min_functional_gamma(&p, &rat(3, 1)).unwrap(), rat(1, 2));
        assert!(matches!(
            min_functional_gamma(&p, &rat(1, 4)),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn min_functional_gamma_scales_with_file_size() {
        let p = SystemParams::with_file_size(5, 3, 3, rat(4, 1)).unwrap();
        assert_eq!(min_functional_gamma(&p, &rat(8, 5)).unwrap(), rat(12, 5));
    }

    #[test]
    fn functional_vertices_533() {
        let v = functional_vertices(&p533());
        let vals: Vec<_> = v
            .iter()
            .map(|p| (p.alpha.clone(), p.gamma.clone()))
            .collect();
        assert_eq!(
            vals,
            vec![
                (rat(1, 3), rat(1, 1)),
                (rat(2, 5), rat(3, 5)),
                (rat(1, 2), rat(1, 2))
            ]
        );
    }

    #[test]
    fn extreme_points() {
        let p = p533();
        assert_eq!(msr_point(&p), pt((1, 3), (1, 1), Provenance::Msr));
        assert_eq!(mbr_point(&p), pt((1, 2), (1, 2), Provenance::Mbr));
        let big = SystemParams::new(61, 55, 59).unwrap();
        assert_eq!(msr_point(&big), pt((1, 55), (59, 275), Provenance::Msr));
        assert_eq!(mbr_point(&big), pt((59, 1760), (59, 1760), Provenance::Mbr));
        let one = SystemParams::new(2, 1, 1).unwrap();
        assert_eq!(msr_point(&one), pt((1, 1), (1, 1), Provenance::Msr));
        for d in 1..6 {
            let p = SystemParams::new(d + 1, 1, d).unwrap();
            assert_eq!(mbr_point(&p), pt((1, 1), (1, 1), Provenance::Mbr));
        }
    }

    #[test]
    fn small_code_bandwidths() {
        let c = SmallCode::new(4, 2, rat(1, 2)).unwrap();
        assert_eq!(c.bandwidth(3).unwrap(), rat(3, 4));
        assert_eq!(c.bandwidth(2).unwrap(), rat(1, 1));
        assert_eq!(c.bandwidth(2).unwrap(), c.file_size());
        assert!(c.bandwidth(1).is_err());
        assert!(c.bandwidth(4).is_err());
    }

    #[test]
    fn small_code_matching() {
        let p = p533();
        let s = match_small_code(&p, 2, ParityRule::Reconstruction).unwrap();
        assert_eq!((s.n_hat, s.k_hat, s.alpha_hat), (4, 2, rat(1, 2)));
        let big = SystemParams::new(61, 55, 59).unwrap();
        assert_eq!(
            match_small_code(&big, 1, ParityRule::Reconstruction)
                .unwrap()
                .n_hat,
            7
        );
        assert_eq!(
            match_small_code(&big, 2, ParityRule::Repair).unwrap().n_hat,
            4
        );
        assert!(match_small_code(&big, 56, ParityRule::Reconstruction).is_err());
        assert!(match_small_code(&big, 59, ParityRule::Repair).is_ok());
        assert!(match_small_code(&big, 0, ParityRule::Repair).is_err());
    }

    #[test]
    fn construction1_new_point() {
        assert_eq!(
            construction1_point(&p533(), 2).unwrap(),
            pt((2, 5), (3, 4), Provenance::Construction1(2))
        );
        assert!(construction1_point(&p533(), 4).is_err());
    }

    #[test]
    fn construction1_top_k_hat_is_msr() {
        let big = SystemParams::new(61, 55, 59).unwrap();
        assert!(construction1_point(&big, 55)
            .unwrap()
            .same_value(&msr_point(&big)));
    }

    #[test]
    fn baseline_values() {
        assert_eq!(
            baseline_point(&p533(), 2).unwrap(),
            pt((2, 5), (4, 5), Provenance::Baseline(2))
        );
        // n_hat = 36, alpha = 36/61 * 1/30, gamma = 30 alpha.
        let p = SystemParams::new(61, 55, 55).unwrap();
        assert_eq!(
            baseline_point(&p, 30).unwrap(),
            pt((6, 305), (36, 61), Provenance::Baseline(30))
        );
        for n in 3..9 {
            let p = SystemParams::new(n, n - 2, n - 2).unwrap();
            assert!(baseline_point(&p, n - 2)
                .unwrap()
                .same_value(&msr_point(&p)));
        }
    }

    #[test]
    fn construction2_file_size_rejects_wrong_parity() {
        let p = SystemParams::new(6, 3, 4).unwrap();
        let wrong = match_small_code(&p, 2, ParityRule::Reconstruction).unwrap();
        assert!(matches!(
            construction2_file_size(&p, &wrong),
            Err(Error::ParityMismatch { .. })
        ));
        let right = match_small_code(&p, 2, ParityRule::Repair).unwrap();
        assert_eq!(construction2_file_size(&p, &right).unwrap(), rat(9, 10));
    }

    #[test]
    fn theorem1_needs_d_equal_k() {
        assert!(theorem1_region(&SystemParams::new(6, 3, 4).unwrap()).is_err());
        let hull = theorem1_region(&p533()).unwrap().hull_vertices().unwrap();
        let vals: Vec<_> = hull
            .iter()
            .map(|p| (p.alpha.clone(), p.gamma.clone()))
            .collect();
        assert_eq!(
            vals,
            vec![
                (rat(1, 3), rat(1, 1)),
                (rat(2, 5), rat(3, 4)),
                (rat(1, 2), rat(1, 2))
            ]
        );
    }

    #[test]
    fn hull_examples() {
        let r = Region::new(vec![
            pt((1, 3), (1, 1), Provenance::Msr),
            pt((2, 5), (3, 4), Provenance::Construction1(2)),
            pt((2, 5), (4, 5), Provenance::Baseline(2)),
            pt((1, 2), (1, 2), Provenance::Mbr),
        ]);
        let h = r.hull_vertices().unwrap();
        assert_eq!(h.len(), 3);
        assert_eq!(h[1].provenance, Provenance::Construction1(2));

        let single = Region::new(vec![pt((1, 2), (1, 2), Provenance::Mbr)]);
        assert_eq!(single.hull_vertices().unwrap().len(), 1);

        let collinear = Region::new(vec![
            pt((0, 1), (3, 1), Provenance::SpaceShare),
            pt((1, 1), (2, 1), Provenance::SpaceShare),
            pt((2, 1), (1, 1), Provenance::SpaceShare),
        ]);
        let h = collinear.hull_vertices().unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h[0].alpha, rat(0, 1));
        assert_eq!(h[1].alpha, rat(2, 1));

        assert_eq!(Region::default().hull_vertices(), Err(Error::EmptyRegion));
    }

    #[test]
    fn hull_drops_dominated_and_duplicates() {
        let r = Region::new(vec![
            pt((1, 2), (1, 2), Provenance::Mbr),
            pt((1, 2), (1, 2), Provenance::Construction1(1)),
            pt((3, 5), (1, 2), Provenance::Baseline(1)),
            pt((1, 1), (1, 1), Provenance::Baseline(2)),
        ]);
        let h = r.hull_vertices().unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].provenance, Provenance::Mbr);
    }

    #[test]
    fn space_sharing_segment() {
        let r = space_sharing_curve(&p533());
        assert_eq!(r.anchors.len(), 2);
        assert_eq!(r.envelope_at(&rat(5, 12)).unwrap(), Some(rat(3, 4)));
        assert_eq!(r.envelope_at(&rat(2, 5)).unwrap(), Some(rat(4, 5)));
        assert!(r.contains(&rat(2, 5), &rat(4, 5)).unwrap());
        assert!(!r.contains(&rat(2, 5), &rat(3, 4)).unwrap());
        assert_eq!(r.envelope_at(&rat(1, 4)).unwrap(), None);
        assert_eq!(r.envelope_at(&rat(1, 1)).unwrap(), Some(rat(1, 2)));
    }
}
