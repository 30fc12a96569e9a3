//! Randomized verification suites over seeded instances, and the (q,s)-plane
//! scan comparing two channels.
//!
//! Each suite draws deterministic instances (per-trial seeds derived from the
//! run seed), evaluates one family of inequalities across the parameter grid,
//! and aggregates the worst violation per grid point. Assertion-mode checks
//! fail a suite; exploratory checks (parameter regions where nothing is
//! claimed) are recorded but never fail.

use rand::Rng;

use crate::bounds::{
    additivity_combination, choi_frobenius_distance, choi_trace_distance,
    fannes_frobenius_global_bound, fannes_frobenius_small_bound, fannes_trace_bound,
    frobenius_distance_as_2mean, map_entropy,
};
use crate::channel::{
    derive_seed, ginibre, haar_unitary_with, random_channel_with, random_density_with, rng_from,
    standard_channel, ChannelKind, KrausSet,
};
use crate::entropy::{unified_entropy, unified_entropy_spectrum, EntropyParams};
use crate::error::{QseError, Result};
use crate::exchange::{entangled_output, entropy_exchange, entropy_exchange_via_purification};
use crate::linalg::{
    schatten_bound_factor, schatten_norm, support_dim, CMatrix,
};
use crate::report::{assertion_tolerance, CheckReport, QsParams, SuiteReport};
use crate::unraveling::{effect_gram, extremal_unraveling, trace_condition_holds};

/// Default q grid covering both bound regions and every special line.
pub const DEFAULT_GRID_Q: [f64; 7] = [0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 3.0];
/// Default s grid.
pub const DEFAULT_GRID_S: [f64; 7] = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0];
/// Parameter pairs (all with q > 1, s >= 1/q) used by the triangle and
/// entangled-output suites.
pub const TRIANGLE_QS: [(f64, f64); 5] =
    [(1.5, 1.0), (2.0, 0.5), (2.0, 1.0), (3.0, 1.0), (1.25, 0.8)];
/// Remixings tried per instance in the extremal-minimality suite.
pub const REMIX_TRIALS: usize = 100;

/// The full default (q, s) grid.
pub fn default_grid() -> Vec<EntropyParams> {
    let mut out = Vec::new();
    for &q in &DEFAULT_GRID_Q {
        for &s in &DEFAULT_GRID_S {
            out.push(EntropyParams::new(q, s).expect("default grid is valid"));
        }
    }
    out
}

/// Suite configuration: dimensions, instance count, run seed, grid.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub dims: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    /// Include the Rényi q > 1 line of the extremal-minimality suite as an
    /// exploratory counterexample scan.
    pub renyi_scan: bool,
    pub grid: Vec<EntropyParams>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { dims: vec![2, 3], trials: 50, seed: 0, renyi_scan: false, grid: default_grid() }
    }
}

pub const SUITE_NAMES: [&str; 7] =
    ["theorem1", "theorem2", "theorem4", "theorem5", "additivity", "fannes", "schatten"];

/// Run a named suite ("all" runs every suite in order).
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    match name {
        "theorem1" => Ok(vec![extremal_minimality_suite(config)?]),
        "theorem2" => Ok(vec![input_entropy_bound_suite(config)?]),
        "theorem4" => Ok(vec![triangle_suite(config)?]),
        "theorem5" => Ok(vec![entangled_output_suite(config)?]),
        "additivity" => Ok(vec![additivity_suite(config)?]),
        "fannes" => Ok(vec![fannes_suite(config)?]),
        "schatten" => Ok(vec![schatten_suite(config)?]),
        "all" => {
            let mut out = Vec::new();
            for suite in SUITE_NAMES {
                out.extend(run_suite(suite, config)?);
            }
            Ok(out)
        }
        other => Err(QseError::InvalidParameter(format!(
            "unknown suite '{other}'; expected one of {SUITE_NAMES:?} or 'all'"
        ))),
    }
}

/// Extremal unravelings minimize the effect entropy over `REMIX_TRIALS`
/// random remixings, for every grid point outside the Rényi q > 1 line.
fn extremal_minimality_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report =
        SuiteReport::new("theorem1", config.dims.clone(), config.trials, config.seed);
    let tol = assertion_tolerance();
    let grid = &config.grid;
    let mut worst = vec![f64::NEG_INFINITY; grid.len()];

    for &d in &config.dims {
        for trial in 0..config.trials {
            let mut rng = rng_from(derive_seed(config.seed, (d as u64) << 32 | trial as u64));
            let rank = rng.gen_range(1..=d * d);
            let chan = random_channel_with(&mut rng, d, rank)?;
            let rho = random_density_with(&mut rng, d);
            let ex = extremal_unraveling(&chan, &rho)?;
            let mut distributions = vec![effect_gram(&chan, &rho)?.probabilities()?];
            for _ in 0..REMIX_TRIALS {
                let u = haar_unitary_with(&mut rng, chan.len());
                distributions.push(effect_gram(&chan.transform(&u)?, &rho)?.probabilities()?);
            }
            for (gi, params) in grid.iter().enumerate() {
                let h_ex = ex.entropy(params);
                for p in &distributions {
                    worst[gi] = worst[gi].max(h_ex - unified_entropy_spectrum(p, params));
                }
            }
        }
    }

    for (gi, params) in grid.iter().enumerate() {
        let asserted = !(params.s() == 0.0 && params.q() > 1.0);
        if !asserted && !config.renyi_scan {
            continue;
        }
        let mut check = CheckReport::new("theorem1", params);
        check.trials = config.trials * (REMIX_TRIALS + 1) * config.dims.len();
        check.max_violation = worst[gi];
        check.applicable = asserted;
        check.pass = !asserted || worst[gi] <= tol;
        if !asserted {
            check.note = Some("Rényi order q > 1: exploratory counterexample scan".into());
        }
        report.push(check);
    }
    Ok(report)
}

/// Input-entropy lower bound on instances where the unit-trace condition
/// holds; rank-one basis pinchings guarantee applicability, coarse pinchings
/// exercise the not-applicable path.
fn input_entropy_bound_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report =
        SuiteReport::new("theorem2", config.dims.clone(), config.trials, config.seed);
    let tol = assertion_tolerance();
    let grid = &config.grid;
    let mut worst = vec![f64::NEG_INFINITY; grid.len()];
    let mut applicable_instances = 0usize;
    let mut skipped_instances = 0usize;

    for &d in &config.dims {
        for trial in 0..config.trials {
            let mut rng =
                rng_from(derive_seed(config.seed, 0x7E0_0000 | (d as u64) << 32 | trial as u64));
            // random orthonormal basis; every third instance coarsens it
            let basis = haar_unitary_with(&mut rng, d);
            let coarse = d > 2 && trial % 3 == 2;
            let projectors: Vec<CMatrix> = if coarse {
                let cut = 1 + rng.gen_range(0..d - 1);
                let mut p0 = CMatrix::zeros(d, d);
                let mut p1 = CMatrix::zeros(d, d);
                for j in 0..d {
                    let col = CMatrix::from_columns(&[basis.matrix().column(j).into_owned()]);
                    let proj = &col * col.adjoint();
                    if j < cut {
                        p0 += proj;
                    } else {
                        p1 += proj;
                    }
                }
                vec![p0, p1]
            } else {
                (0..d)
                    .map(|j| {
                        let col =
                            CMatrix::from_columns(&[basis.matrix().column(j).into_owned()]);
                        &col * col.adjoint()
                    })
                    .collect()
            };
            let chan = standard_channel(ChannelKind::Pinching(projectors))?;
            let rho = random_density_with(&mut rng, d);
            let ex = extremal_unraveling(&chan, &rho)?;
            if !trace_condition_holds(&ex) {
                skipped_instances += 1;
                continue;
            }
            applicable_instances += 1;
            let h_rho_cache: Vec<f64> =
                grid.iter().map(|params| unified_entropy(&rho, params)).collect();
            for (gi, params) in grid.iter().enumerate() {
                worst[gi] = worst[gi].max(h_rho_cache[gi] - ex.entropy(params));
            }
        }
    }

    for (gi, params) in grid.iter().enumerate() {
        let asserted = !(params.s() == 0.0 && params.q() > 1.0);
        let mut check = CheckReport::new("theorem2", params);
        check.trials = applicable_instances;
        check.max_violation = worst[gi];
        check.applicable = asserted && applicable_instances > 0;
        check.pass = !check.applicable || worst[gi] <= tol;
        if !asserted {
            check.note = Some("Rényi order q > 1: bound not asserted".into());
        } else if skipped_instances > 0 {
            check.note =
                Some(format!("{skipped_instances} instances skipped (condition fails)"));
        }
        report.push(check);
    }
    Ok(report)
}

/// Triangle/subadditivity relations between input entropy, output entropy
/// and entropy exchange at the asserted parameter set.
fn triangle_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report =
        SuiteReport::new("theorem4", config.dims.clone(), config.trials, config.seed);
    let tol = assertion_tolerance();
    let qs: Vec<EntropyParams> =
        TRIANGLE_QS.iter().map(|&(q, s)| EntropyParams::new(q, s).unwrap()).collect();
    let mut worst = vec![f64::NEG_INFINITY; qs.len()];
    let mut spectral_worst: f64 = 0.0;

    for &d in &config.dims {
        for trial in 0..config.trials {
            let mut rng =
                rng_from(derive_seed(config.seed, 0x400_0000 | (d as u64) << 32 | trial as u64));
            let rank = rng.gen_range(1..=d * d);
            let chan = random_channel_with(&mut rng, d, rank)?;
            let rho = random_density_with(&mut rng, d);
            let out = chan.apply(&rho)?;
            for (gi, params) in qs.iter().enumerate() {
                let a = unified_entropy(&rho, params);
                let b = unified_entropy(&out, params);
                let s = entropy_exchange(&rho, &chan, params)?;
                let violation = (b - (a + s)).max(a - (b + s)).max(s - (a + b));
                worst[gi] = worst[gi].max(violation);
            }
            // cross-route check on one parameter pair per instance
            let params = &qs[trial % qs.len()];
            let via_w = entropy_exchange(&rho, &chan, params)?;
            let via_pure = entropy_exchange_via_purification(&rho, &chan, params)?;
            spectral_worst = spectral_worst.max((via_w - via_pure).abs());
        }
    }

    for (gi, params) in qs.iter().enumerate() {
        let mut check = CheckReport::new("theorem4", params);
        check.trials = config.trials * config.dims.len();
        check.max_violation = worst[gi];
        check.pass = worst[gi] <= tol;
        report.push(check);
    }
    let mut cross = CheckReport::new("theorem4", &qs[0]);
    cross.trials = config.trials * config.dims.len();
    cross.max_violation = spectral_worst;
    cross.pass = spectral_worst <= tol;
    cross.note = Some("exchange route agreement (W matrix vs purification)".into());
    report.push(cross);
    Ok(report)
}

/// Two-sided bounds on the output entropy of a maximally entangled input in
/// terms of the two map entropies; every fifth pair takes Φ₁ = id, where the
/// upper and lower bounds collapse onto M₂.
fn entangled_output_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report =
        SuiteReport::new("theorem5", config.dims.clone(), config.trials, config.seed);
    let tol = assertion_tolerance();
    let qs: Vec<EntropyParams> =
        TRIANGLE_QS.iter().map(|&(q, s)| EntropyParams::new(q, s).unwrap()).collect();
    let mut worst = vec![f64::NEG_INFINITY; qs.len()];
    let mut tight_worst: f64 = 0.0;
    let mut tight_cases = 0usize;

    for &d in &config.dims {
        for trial in 0..config.trials {
            let mut rng =
                rng_from(derive_seed(config.seed, 0x500_0000 | (d as u64) << 32 | trial as u64));
            let tight = trial % 5 == 4;
            let k1 = if tight {
                standard_channel(ChannelKind::Identity { d })?
            } else {
                let rank = rng.gen_range(1..=d * d);
                random_channel_with(&mut rng, d, rank)?
            };
            let rank2 = rng.gen_range(1..=d * d);
            let k2 = random_channel_with(&mut rng, d, rank2)?;
            let c1 = k1.to_choi()?;
            let c2 = k2.to_choi()?;
            let out = entangled_output(&k1, &k2)?;
            for (gi, params) in qs.iter().enumerate() {
                let m1 = map_entropy(&c1, params);
                let m2 = map_entropy(&c2, params);
                let h = unified_entropy(&out, params);
                let violation = (h - (m1 + m2)).max((m1 - m2).abs() - h);
                worst[gi] = worst[gi].max(violation);
                if tight {
                    tight_worst = tight_worst.max((h - m2).abs());
                }
            }
            if tight {
                tight_cases += 1;
            }
        }
    }

    for (gi, params) in qs.iter().enumerate() {
        let mut check = CheckReport::new("theorem5", params);
        check.trials = config.trials * config.dims.len();
        check.max_violation = worst[gi];
        check.pass = worst[gi] <= tol;
        report.push(check);
    }
    let mut tight = CheckReport::new("theorem5", &qs[0]);
    tight.trials = tight_cases;
    tight.max_violation = tight_worst;
    tight.pass = tight_worst <= tol;
    tight.note = Some("identity ⊗ channel: output entropy equals the map entropy".into());
    report.push(tight);
    Ok(report)
}

/// Exact additivity identity for the map entropy of product channels over
/// the full grid.
fn additivity_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report =
        SuiteReport::new("additivity", config.dims.clone(), config.trials, config.seed);
    let tol = assertion_tolerance();
    let grid = &config.grid;
    let mut worst = vec![f64::NEG_INFINITY; grid.len()];

    for &d in &config.dims {
        for trial in 0..config.trials {
            let mut rng =
                rng_from(derive_seed(config.seed, 0x600_0000 | (d as u64) << 32 | trial as u64));
            let r1 = rng.gen_range(1..=d * d);
            let r2 = rng.gen_range(1..=d * d);
            let c1 = random_channel_with(&mut rng, d, r1)?.to_choi()?;
            let c2 = random_channel_with(&mut rng, d, r2)?.to_choi()?;
            let joint = c1.tensor(&c2)?;
            for (gi, params) in grid.iter().enumerate() {
                let m1 = map_entropy(&c1, params);
                let m2 = map_entropy(&c2, params);
                let m12 = map_entropy(&joint, params);
                worst[gi] = worst[gi].max((m12 - additivity_combination(m1, m2, params)).abs());
            }
        }
    }

    for (gi, params) in grid.iter().enumerate() {
        let mut check = CheckReport::new("additivity", params);
        check.trials = config.trials * config.dims.len();
        check.max_violation = worst[gi];
        check.pass = worst[gi] <= tol;
        report.push(check);
    }
    Ok(report)
}

/// Soundness of every continuity-bound evaluator on random channel pairs:
/// wherever a bound reports valid, it must dominate the observed map-entropy
/// difference. Also rechecks the 2-mean identity for the Frobenius distance.
fn fannes_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("fannes", config.dims.clone(), config.trials, config.seed);
    let tol = assertion_tolerance();
    let grid = &config.grid;
    // per grid point: worst soundness violation and tightness tally
    let mut worst = vec![f64::NEG_INFINITY; grid.len()];
    let mut applicable = vec![false; grid.len()];
    let mut small_tighter = 0usize;
    let mut global_tighter = 0usize;
    let mut two_mean_worst: f64 = 0.0;

    for &d in &config.dims {
        for trial in 0..config.trials {
            let mut rng =
                rng_from(derive_seed(config.seed, 0x0FA_0000 | (d as u64) << 32 | trial as u64));
            let r1 = rng.gen_range(1..=d * d);
            let r2 = rng.gen_range(1..=d * d);
            let k1 = random_channel_with(&mut rng, d, r1)?;
            let k2 = random_channel_with(&mut rng, d, r2)?;
            let c1 = k1.to_choi()?;
            let c2 = k2.to_choi()?;
            let t = choi_trace_distance(&c1, &c2)?;
            let tau = choi_frobenius_distance(&c1, &c2)?;
            two_mean_worst = two_mean_worst
                .max((frobenius_distance_as_2mean(&k1, &k2)? - 2.0 * tau).abs());
            for (gi, params) in grid.iter().enumerate() {
                let delta = (map_entropy(&c1, params) - map_entropy(&c2, params)).abs();
                let evaluations = [
                    fannes_trace_bound(params, d, t),
                    fannes_frobenius_small_bound(params, d, tau),
                    fannes_frobenius_global_bound(params, d, tau),
                ];
                let mut small_value = None;
                let mut global_value = None;
                for (which, evaluation) in evaluations.into_iter().enumerate() {
                    match evaluation {
                        Ok(bound) => {
                            applicable[gi] = true;
                            if bound.valid {
                                worst[gi] = worst[gi].max(delta - bound.bound_value);
                                if which == 1 {
                                    small_value = Some(bound.bound_value);
                                }
                                if which == 2 {
                                    global_value = Some(bound.bound_value);
                                }
                            }
                        }
                        Err(QseError::NotApplicable(_)) => {}
                        Err(e) => return Err(e),
                    }
                }
                if let (Some(sv), Some(gv)) = (small_value, global_value) {
                    if sv <= gv {
                        small_tighter += 1;
                    } else {
                        global_tighter += 1;
                    }
                }
            }
        }
    }

    for (gi, params) in grid.iter().enumerate() {
        let mut check = CheckReport::new("fannes", params);
        check.trials = config.trials * config.dims.len();
        check.max_violation = worst[gi];
        check.applicable = applicable[gi];
        check.pass = !applicable[gi] || worst[gi] <= tol;
        if !applicable[gi] {
            check.note = Some("no bound proved at these parameters".into());
        }
        report.push(check);
    }
    let mut identity_check = CheckReport::new("fannes", &grid[0]);
    identity_check.trials = config.trials * config.dims.len();
    identity_check.max_violation = two_mean_worst;
    identity_check.pass = two_mean_worst <= 1e-10;
    identity_check.note = Some(format!(
        "2-mean identity; where both Frobenius bounds were valid the small-distance form was tighter {small_tighter}x, the global form {global_tighter}x"
    ));
    report.push(identity_check);
    Ok(report)
}

/// Support-dimension Schatten norm bounds ‖x‖_p <= d^{(q−1)/(pq)}·‖x‖_{pq}
/// on random (including rank-deficient) matrices, with equality on scaled
/// partial isometries.
fn schatten_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("schatten", config.dims.clone(), config.trials, config.seed);
    let ps = [1.0, 2.0];
    let qs = [2.0, 3.0, f64::INFINITY];
    let mut worst = vec![f64::NEG_INFINITY; ps.len() * qs.len()];
    let mut equality_worst: f64 = 0.0;
    let placeholder = EntropyParams::von_neumann();

    for trial in 0..config.trials {
        let mut rng = rng_from(derive_seed(config.seed, 0x5CA_0000 | trial as u64));
        let n = rng.gen_range(2..=8);
        let r = rng.gen_range(1..=n);
        let equality_case = trial % 4 == 3;
        let x = if equality_case {
            // c times a rank-r partial isometry: flat singular values on the support
            let u = haar_unitary_with(&mut rng, n);
            let w = haar_unitary_with(&mut rng, n);
            let mut m = CMatrix::zeros(n, n);
            for j in 0..r {
                m += CMatrix::from_columns(&[u.matrix().column(j).into_owned()])
                    * CMatrix::from_columns(&[w.matrix().column(j).into_owned()]).adjoint();
            }
            m.scale(0.5 + rng.gen::<f64>())
        } else {
            ginibre(&mut rng, n, r) * ginibre(&mut rng, r, n)
        };
        let d = support_dim(&x);
        for (pi, &p) in ps.iter().enumerate() {
            for (qi, &q) in qs.iter().enumerate() {
                let lhs = schatten_norm(&x, p)?;
                let pq = if q.is_infinite() { f64::INFINITY } else { p * q };
                let rhs = schatten_bound_factor(d, p, q)? * schatten_norm(&x, pq)?;
                let slot = pi * qs.len() + qi;
                worst[slot] = worst[slot].max(lhs - rhs);
                if equality_case {
                    equality_worst = equality_worst.max((lhs - rhs).abs());
                }
            }
        }
    }

    for (pi, &p) in ps.iter().enumerate() {
        for (qi, &q) in qs.iter().enumerate() {
            let slot = pi * qs.len() + qi;
            let mut check = CheckReport::new(format!("schatten[p={p},q={q}]"), &placeholder);
            check.params = QsParams { q: 1.0, s: 0.0 };
            check.trials = config.trials;
            check.max_violation = worst[slot];
            check.pass = worst[slot] <= 1e-10;
            report.push(check);
        }
    }
    let mut equality = CheckReport::new("schatten[equality]", &placeholder);
    equality.trials = config.trials / 4;
    equality.max_violation = equality_worst;
    equality.pass = equality_worst <= 1e-9;
    equality.note = Some("tightness on scaled partial isometries".into());
    report.push(equality);
    Ok(report)
}

// --- (q,s)-plane scan --------------------------------------------------------

/// One row of the scan output.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ScanRow {
    pub q: f64,
    pub s: f64,
    pub d: usize,
    pub distance: f64,
    pub norm_kind: String,
    pub bound_kind: String,
    pub bound_value: Option<f64>,
    pub valid: bool,
    pub observed_delta: f64,
    pub sound: bool,
}

/// Evaluate every continuity bound for a channel pair across the grid.
pub fn scan_channels(
    k1: &KrausSet,
    k2: &KrausSet,
    grid: &[EntropyParams],
) -> Result<Vec<ScanRow>> {
    let d = k1.dim();
    if d != k2.dim() {
        return Err(QseError::DimensionMismatch(format!(
            "channels act on different dimensions: {} vs {}",
            d,
            k2.dim()
        )));
    }
    let c1 = k1.to_choi()?;
    let c2 = k2.to_choi()?;
    let t = choi_trace_distance(&c1, &c2)?;
    let tau = choi_frobenius_distance(&c1, &c2)?;
    let tol = assertion_tolerance();

    let mut rows = Vec::new();
    for params in grid {
        let delta = (map_entropy(&c1, params) - map_entropy(&c2, params)).abs();
        let evaluations: [(&str, f64, &str, _); 3] = [
            ("trace", t, "trace", fannes_trace_bound(params, d, t)),
            ("frobenius_small", tau, "frobenius", fannes_frobenius_small_bound(params, d, tau)),
            ("frobenius_global", tau, "frobenius", fannes_frobenius_global_bound(params, d, tau)),
        ];
        for (bound_kind, distance, norm_kind, evaluation) in evaluations {
            let row = match evaluation {
                Ok(bound) => {
                    let sound = !bound.valid || delta <= bound.bound_value + tol;
                    ScanRow {
                        q: params.q(),
                        s: params.s(),
                        d,
                        distance,
                        norm_kind: norm_kind.into(),
                        bound_kind: bound_kind.into(),
                        bound_value: bound.bound_value.is_finite().then_some(bound.bound_value),
                        valid: bound.valid,
                        observed_delta: delta,
                        sound,
                    }
                }
                Err(QseError::NotApplicable(_)) => ScanRow {
                    q: params.q(),
                    s: params.s(),
                    d,
                    distance,
                    norm_kind: norm_kind.into(),
                    bound_kind: bound_kind.into(),
                    bound_value: None,
                    valid: false,
                    observed_delta: delta,
                    sound: true,
                },
                Err(e) => return Err(e),
            };
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Significant-digit formatting used for computed values in CLI and CSV
/// output (12 significant digits).
pub fn fmt_value(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{x:.11e}")
}

/// Render scan rows as CSV ('.' decimal separator, ',' field separator,
/// mandatory header row).
pub fn scan_to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(
        "q,s,d,distance,norm_kind,bound_kind,bound_value,valid,observed_delta,sound\n",
    );
    for r in rows {
        let bound = r.bound_value.map(fmt_value).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.q,
            r.s,
            r.d,
            fmt_value(r.distance),
            r.norm_kind,
            r.bound_kind,
            bound,
            r.valid,
            fmt_value(r.observed_delta),
            r.sound
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::random_channel;

    fn quick_config() -> SuiteConfig {
        SuiteConfig { dims: vec![2], trials: 4, seed: 7, renyi_scan: false, grid: default_grid() }
    }

    #[test]
    fn all_suites_pass_on_small_runs() {
        let reports = run_suite("all", &quick_config()).unwrap();
        assert_eq!(reports.len(), SUITE_NAMES.len());
        for r in &reports {
            assert!(r.pass, "suite {} failed with {} violations", r.suite, r.violations);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("theorem3", &quick_config()).is_err());
    }

    #[test]
    fn renyi_scan_adds_exploratory_checks() {
        let mut config = quick_config();
        let base = run_suite("theorem1", &config).unwrap()[0].checks.len();
        config.renyi_scan = true;
        let scanned = run_suite("theorem1", &config).unwrap()[0].checks.len();
        assert!(scanned > base);
    }

    #[test]
    fn scan_rows_cover_grid_and_are_sound() {
        let k1 = random_channel(2, 2, 1).unwrap();
        let k2 = random_channel(2, 3, 2).unwrap();
        let grid = default_grid();
        let rows = scan_channels(&k1, &k2, &grid).unwrap();
        assert_eq!(rows.len(), grid.len() * 3);
        assert!(rows.iter().all(|r| r.sound));
        // identical channels: all observed deltas vanish
        let rows = scan_channels(&k1, &k1, &grid).unwrap();
        assert!(rows.iter().all(|r| r.observed_delta.abs() < 1e-12));
    }

    #[test]
    fn csv_is_deterministic() {
        let k1 = random_channel(2, 2, 3).unwrap();
        let k2 = random_channel(2, 4, 4).unwrap();
        let grid = default_grid();
        let a = scan_to_csv(&scan_channels(&k1, &k2, &grid).unwrap());
        let b = scan_to_csv(&scan_channels(&k1, &k2, &grid).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with("q,s,d,distance,norm_kind,bound_kind"));
    }
}
