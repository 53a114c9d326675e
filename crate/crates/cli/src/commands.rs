//! Implementations behind the CLI subcommands. Everything returns data; the
//! binary decides about files, stdout, and exit codes.

use std::f64::consts::PI;

use crate::spaces::Space;
use crate::table::CurveTable;
use crate::CliError;
use specbounds::bounds::{
    eigenvalue_lower_bound_swept, li_bound, li_improved_bound, sphere_gap_bound, BoundResult,
};
use specbounds::geometry::omega_d;
use specbounds::heat::{
    heat_bound_compact_gap, heat_bound_exponential, heat_bound_polynomial,
    hyperbolic_heat_kernel_odd, sphere_heat_diagonal, verify_exp_growth, verify_poly_growth,
    ExpGrowthHypothesis, PolyGrowthHypothesis,
};
use specbounds::specialfns::QuadratureConfig;

/// Sampling request for a curve command.
#[derive(Clone, Copy, Debug)]
pub struct SampleSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub log: bool,
}

/// Expands a sampling request into a strictly increasing grid; a degenerate
/// range gives a single row.
pub fn sample_grid(spec: &SampleSpec) -> Result<Vec<f64>, CliError> {
    if !spec.min.is_finite() || !spec.max.is_finite() {
        return Err(CliError::Usage("range bounds must be finite".into()));
    }
    if spec.points == 0 {
        return Err(CliError::Usage("need at least one sample point".into()));
    }
    if spec.min > spec.max {
        return Err(CliError::Usage(format!(
            "empty range: min {} exceeds max {}",
            spec.min, spec.max
        )));
    }
    if spec.min == spec.max || spec.points == 1 {
        return Ok(vec![spec.min]);
    }
    if spec.log && spec.min <= 0.0 {
        return Err(CliError::Usage(
            "logarithmic sampling needs a positive lower bound".into(),
        ));
    }
    let n = spec.points;
    let grid: Vec<f64> = (0..n)
        .map(|i| {
            let s = i as f64 / (n - 1) as f64;
            if spec.log {
                spec.min * (spec.max / spec.min).powf(s)
            } else {
                spec.min + (spec.max - spec.min) * s
            }
        })
        .collect();
    if !grid.windows(2).all(|w| w[0] < w[1]) {
        return Err(CliError::Usage(
            "sampling grid collapsed; reduce the point count or widen the range".into(),
        ));
    }
    Ok(grid)
}

/// Quadrature configuration with an optional `--tol` override of the
/// absolute tolerance (the relative tolerance follows ten times looser).
pub fn quadrature_config(tol: Option<f64>) -> Result<QuadratureConfig, CliError> {
    match tol {
        None => Ok(QuadratureConfig::default()),
        Some(t) if t > 0.0 && t.is_finite() => Ok(QuadratureConfig {
            abs_tol: t,
            rel_tol: 10.0 * t,
            ..QuadratureConfig::default()
        }),
        Some(t) => Err(CliError::Usage(format!(
            "tolerance must be positive and finite, got {t}"
        ))),
    }
}

fn windowed(lambda: f64, bound: &BoundResult) -> Option<f64> {
    if lambda >= bound.valid_from {
        Some(bound.value)
    } else {
        None
    }
}

/// `bound`: the counting bound alone, in integral or alpha form.
pub fn cmd_bound(
    space: Space,
    spec: &SampleSpec,
    alpha: Option<f64>,
    cfg: &QuadratureConfig,
) -> Result<CurveTable, CliError> {
    let grid = sample_grid(spec)?;
    let ctx = space.bound_context()?;
    let mut cells = Vec::with_capacity(grid.len());
    for &lambda in &grid {
        let b = ctx.counting_bound(lambda, alpha, cfg)?;
        cells.push(windowed(lambda, &b));
    }
    let mut table = CurveTable::new("lambda", grid);
    table.push_column("bound", cells);
    Ok(table)
}

/// Outcome summary of `compare`: the worst signed margin `bound - exact`.
#[derive(Clone, Copy, Debug)]
pub struct CompareSummary {
    pub min_gap: f64,
    pub at_abscissa: f64,
    pub rows: usize,
}

impl CompareSummary {
    /// The bound must never drop below the exact curve (tolerance -1e-9).
    pub fn violated(&self) -> bool {
        self.min_gap < -1e-9
    }
}

/// `compare`: exact counting next to the integral bound, plus the worst
/// margin across the grid.
pub fn cmd_compare(
    space: Space,
    spec: &SampleSpec,
    cfg: &QuadratureConfig,
) -> Result<(CurveTable, CompareSummary), CliError> {
    let grid = sample_grid(spec)?;
    let ctx = space.bound_context()?;
    let mut exact_cells = Vec::with_capacity(grid.len());
    let mut bound_cells = Vec::with_capacity(grid.len());
    let mut min_gap = f64::INFINITY;
    let mut at = grid[0];
    for &lambda in &grid {
        let exact = space.exact_counting(lambda, cfg)?;
        let bound = ctx.counting_bound(lambda, None, cfg)?;
        let gap = bound.value - exact;
        if gap < min_gap {
            min_gap = gap;
            at = lambda;
        }
        exact_cells.push(Some(exact));
        bound_cells.push(windowed(lambda, &bound));
    }
    let rows = grid.len();
    let mut table = CurveTable::new("lambda", grid);
    table.push_column("exact", exact_cells);
    table.push_column("bound", bound_cells);
    Ok((
        table,
        CompareSummary {
            min_gap,
            at_abscissa: at,
            rows,
        },
    ))
}

/// What `heat` should tabulate: a model space with exact diagonal and
/// verified growth constants, or explicit hypothesis constants.
#[derive(Clone, Debug)]
pub enum HeatTarget {
    Space(Space),
    Hypotheses {
        poly: Option<PolyGrowthHypothesis>,
        exp: Option<ExpGrowthHypothesis>,
    },
}

/// `heat`: exact diagonal (where known) next to the applicable bounds on a
/// time grid.
pub fn cmd_heat(
    target: &HeatTarget,
    spec: &SampleSpec,
    cfg: &QuadratureConfig,
) -> Result<CurveTable, CliError> {
    let grid = sample_grid(spec)?;
    let num = |e: specbounds::Error| CliError::Numerical(e.to_string());

    struct HeatColumns {
        exact: Option<Box<dyn Fn(f64) -> Result<f64, CliError>>>,
        poly: Option<PolyGrowthHypothesis>,
        exp: Option<ExpGrowthHypothesis>,
        gap: Option<(f64, f64, f64, f64)>, // (vol, c, beta, lambda_star)
    }

    let cols = match target {
        HeatTarget::Space(space) => match *space {
            Space::RealHyperbolic(d) if d % 2 == 1 => {
                let exact = move |t: f64| {
                    hyperbolic_heat_kernel_odd(d, 0.0, t)
                        .map_err(|e| CliError::Numerical(e.to_string()))
                };
                HeatColumns {
                    exact: Some(Box::new(exact)),
                    poly: Some(
                        PolyGrowthHypothesis::new(
                            omega_d(d),
                            d as f64,
                            f64::INFINITY,
                            f64::INFINITY,
                        )
                        .map_err(num)?,
                    ),
                    exp: Some(hyperbolic_exp_hypothesis(d)?),
                    gap: None,
                }
            }
            Space::Sphere(2) => {
                let exact = |t: f64| {
                    sphere_heat_diagonal(2, t).map_err(|e| CliError::Numerical(e.to_string()))
                };
                // V(r) >= (4/pi) r^2 on (0, pi] and lambda_1 = 2; checked here
                // so a regression in the profile cannot silently unsound the bound
                let profile = Space::Sphere(2)
                    .model()
                    .volume_profile()
                    .map_err(num)?;
                if !verify_poly_growth(&profile, 4.0 / PI, 2.0, PI, 400) {
                    return Err(CliError::Numerical(
                        "quadratic growth constant for the 2-sphere failed verification".into(),
                    ));
                }
                HeatColumns {
                    exact: Some(Box::new(exact)),
                    poly: Some(
                        PolyGrowthHypothesis::new(4.0 / PI, 2.0, PI, 4.0 * PI).map_err(num)?,
                    ),
                    exp: None,
                    gap: Some((4.0 * PI, 4.0 / PI, 2.0, 2.0)),
                }
            }
            other => {
                return Err(CliError::Usage(format!(
                    "heat tables support h3, h5, h7, s2, or explicit hypothesis flags; got {other}"
                )))
            }
        },
        HeatTarget::Hypotheses { poly, exp } => {
            if poly.is_none() && exp.is_none() {
                return Err(CliError::Usage(
                    "hypothesis mode needs --c/--beta and/or --c0/--c1/--c2/--r0/--dim".into(),
                ));
            }
            HeatColumns {
                exact: None,
                poly: poly.clone(),
                exp: exp.clone(),
                gap: None,
            }
        }
    };

    let mut exact_cells = Vec::new();
    let mut poly_cells = Vec::new();
    let mut exp_cells = Vec::new();
    let mut exp_gap_cells = Vec::new();
    let mut gap_cells = Vec::new();
    for &t in &grid {
        if let Some(exact) = &cols.exact {
            exact_cells.push(Some(exact(t)?));
        }
        if let Some(h) = &cols.poly {
            let b = heat_bound_polynomial(h, t, cfg).map_err(num)?;
            poly_cells.push(windowed(t, &b));
        }
        if let Some(h) = &cols.exp {
            let (first, second) = heat_bound_exponential(h, t).map_err(num)?;
            exp_cells.push(windowed(t, &first));
            if let Some(second) = second {
                exp_gap_cells.push(windowed(t, &second));
            }
        }
        if let Some((vol, c, beta, gap)) = cols.gap {
            let b = heat_bound_compact_gap(vol, c, beta, gap, t, cfg).map_err(num)?;
            gap_cells.push(windowed(t, &b));
        }
    }

    let mut table = CurveTable::new("t", grid);
    if !exact_cells.is_empty() {
        table.push_column("exact", exact_cells);
    }
    if !poly_cells.is_empty() {
        table.push_column("poly_bound", poly_cells);
    }
    if !exp_cells.is_empty() {
        table.push_column("exp_bound", exp_cells);
    }
    if !exp_gap_cells.is_empty() {
        table.push_column("exp_gap_bound", exp_gap_cells);
    }
    if !gap_cells.is_empty() {
        table.push_column("gap_bound", gap_cells);
    }
    Ok(table)
}

/// Verified exponential-growth constants for odd-dimensional `H^d`:
/// `c2 = d-1` (the true growth rate), `c1` from a grid minimum of
/// `V(r) e^(-c2 r)` on `[1, 60]`, and the spectral gap at the bottom
/// `(d-1)^2/4`.
fn hyperbolic_exp_hypothesis(d: u32) -> Result<ExpGrowthHypothesis, CliError> {
    let num = |e: specbounds::Error| CliError::Numerical(e.to_string());
    let profile = Space::RealHyperbolic(d).model().volume_profile().map_err(num)?;
    let c2 = (d - 1) as f64;
    let r0 = 1.0;
    let mut c1 = f64::INFINITY;
    for i in 0..=590 {
        let r = r0 + 0.1 * i as f64;
        c1 = c1.min(profile.evaluate(r) * (-c2 * r).exp());
    }
    let c1 = 0.999 * c1;
    if !verify_exp_growth(&profile, c1, c2, r0, 60.0, 600) {
        return Err(CliError::Numerical(format!(
            "exponential growth constant for h{d} failed verification"
        )));
    }
    let bottom = ((d - 1) as f64 / 2.0).powi(2);
    ExpGrowthHypothesis::new(omega_d(d), c1, c2, d, r0, Some(bottom)).map_err(num)
}

/// One labelled value in the `eigmin` report.
pub struct EigminReport {
    pub space: Space,
    pub li: f64,
    pub li_improved: f64,
    pub sphere_gap: Option<f64>,
    pub true_sqrt_lambda_1: Option<f64>,
    pub k: Option<(u64, f64, Option<f64>)>, // (k, swept bound, true value)
}

/// `eigmin`: every applicable lower bound on `sqrt(lambda_1)` and, on
/// request, the inverse-volume bound on `sqrt(lambda_k)`.
pub fn cmd_eigmin(space: Space, k: Option<u64>) -> Result<EigminReport, CliError> {
    if !space.is_compact() {
        return Err(CliError::Usage(format!(
            "eigenvalue reports need a compact space, got {space}"
        )));
    }
    let data = space.compact_data()?;
    let li = li_bound(data.diameter);
    let improved = li_improved_bound(&data).map_err(|e| CliError::Numerical(e.to_string()))?;
    // spheres of every dimension, and the circle, are round
    let gap = Some(sphere_gap_bound(data.diameter));
    let k_entry = match k {
        None => None,
        Some(k) => {
            let swept = eigenvalue_lower_bound_swept(&data, k)
                .map_err(|e| CliError::Numerical(e.to_string()))?;
            Some((k, swept, space.true_sqrt_eigenvalue(k)))
        }
    };
    Ok(EigminReport {
        space,
        li,
        li_improved: improved,
        sphere_gap: gap,
        true_sqrt_lambda_1: space.true_sqrt_eigenvalue(1),
        k: k_entry,
    })
}

impl EigminReport {
    pub fn render_text(&self) -> String {
        use crate::table::format_float as ff;
        let mut out = String::new();
        out.push_str(&format!("space: {}\n", self.space));
        out.push_str(&format!("li_bound: {}\n", ff(self.li)));
        out.push_str(&format!("li_improved_bound: {}\n", ff(self.li_improved)));
        if let Some(g) = self.sphere_gap {
            out.push_str(&format!("sphere_gap_bound: {}\n", ff(g)));
        }
        if let Some(t) = self.true_sqrt_lambda_1 {
            out.push_str(&format!("true_sqrt_lambda_1: {}\n", ff(t)));
        }
        if let Some((k, swept, truth)) = self.k {
            out.push_str(&format!("k: {k}\n"));
            out.push_str(&format!("eigenvalue_lower_bound_swept: {}\n", ff(swept)));
            if let Some(t) = truth {
                out.push_str(&format!("true_sqrt_lambda_k: {}\n", ff(t)));
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut obj = serde_json::json!({
            "space": self.space.to_string(),
            "li_bound": self.li,
            "li_improved_bound": self.li_improved,
        });
        if let Some(g) = self.sphere_gap {
            obj["sphere_gap_bound"] = g.into();
        }
        if let Some(t) = self.true_sqrt_lambda_1 {
            obj["true_sqrt_lambda_1"] = t.into();
        }
        if let Some((k, swept, truth)) = self.k {
            obj["k"] = k.into();
            obj["eigenvalue_lower_bound_swept"] = swept.into();
            if let Some(t) = truth {
                obj["true_sqrt_lambda_k"] = t.into();
            }
        }
        format!("{}\n", serde_json::to_string_pretty(&obj).expect("serializable report"))
    }
}
