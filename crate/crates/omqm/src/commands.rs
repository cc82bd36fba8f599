//! One function per subcommand, each turning a configuration plus arguments
//! into a [`Report`] (and optionally a plot).

use std::f64::consts::PI;
use std::num::NonZeroUsize;
use std::path::Path;

use omqm_core::dynamics::{feigenbaum_delta, lyapunov_spectrum_with, LyapunovConfig, RosslerParams};
use omqm_core::moduli::{reduce_to_om_knot, Point};
use omqm_core::numtheory::{chebyshev_psi_lcm_table, chebyshev_psi_sum_table, decompose_prime_power};
use omqm_core::omqm::{
    alpha_inverse, alpha_limit_ratio, cosmological_constant, einstein_factorization, epsilon_tilde,
    gravitational_constant, heisenberg_product, holography_split_with, prime_power_rank, zeros_required_for,
    GravityMode,
};
use omqm_core::zeta::{find_zeros, ZetaZero, MAX_COMPUTED_ZEROS};
use omqm_core::Error;

use crate::config::{mode_name, RunConfig, ZeroSource};
use crate::error::{AppError, AppResult};
use crate::io;
use crate::spectrum::parallel_spectrum;
use crate::svg::{self, Style};
use crate::table::{col, Report, Table};

/// Reference value the Feigenbaum estimate is compared against.
pub const DELTA_REFERENCE: &str = "4.669201609102990671853203820466";

/// A report plus the SVG the command would draw, if it draws one.
pub struct Output {
    pub report: Report,
    pub plot: Option<String>,
}

fn report(command: &str, cfg: &RunConfig, table: Table) -> Report {
    Report {
        command: command.to_string(),
        config: cfg.describe(),
        table,
        notes: Vec::new(),
        flags: vec![("g_mode", mode_name(cfg.mode).to_string())],
    }
}

/// Zeros for a command that needs `needed` of them. A zero file is used as
/// given (truncated to `zero_count` if set); otherwise `zero_count` zeros are
/// computed, defaulting to `needed`.
pub fn load_zeros(cfg: &RunConfig, needed: usize) -> AppResult<Vec<ZetaZero>> {
    match &cfg.zeros {
        ZeroSource::File(path) => {
            let mut zeros = io::read_zero_file(path)?;
            if let Some(n) = cfg.zero_count {
                zeros.truncate(n);
            }
            Ok(zeros)
        }
        ZeroSource::Compute => match cfg.zero_count {
            Some(n) => Ok(find_zeros(n)?),
            None if needed > MAX_COMPUTED_ZEROS => Err(Error::InsufficientZeros {
                required: needed,
                available: MAX_COMPUTED_ZEROS,
            }
            .into()),
            None => Ok(find_zeros(needed)?),
        },
    }
}

fn require_positive(name: &str, n: u64) -> AppResult<()> {
    if n == 0 {
        Err(AppError::Argument(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

pub fn mangoldt(cfg: &RunConfig, nmax: u64) -> AppResult<Output> {
    require_positive("Nmax", nmax)?;
    let mut table = Table::new(vec![
        col("N", "N"),
        col("Lambda", "ln p if N = p^k else 0"),
        col("is_prime_power", "N = p^k with k >= 1"),
        col("psi", "sum_{n<=N} Lambda(n)"),
    ]);
    let psi = chebyshev_psi_sum_table(nmax);
    let mut points = Vec::new();
    for n in 1..=nmax {
        let entry = decompose_prime_power(n);
        table.push(vec![
            n.into(),
            entry.mangoldt.into(),
            entry.is_prime_power().into(),
            psi[n as usize].into(),
        ]);
        points.push((n as f64, entry.mangoldt));
    }
    Ok(Output {
        report: report("mangoldt", cfg, table),
        plot: Some(svg::plot("von Mangoldt function", "N", "Lambda(N)", &points, Style::Scatter)),
    })
}

pub fn psi(cfg: &RunConfig, nmax: u64) -> AppResult<Output> {
    require_positive("Nmax", nmax)?;
    let mut table = Table::new(vec![
        col("N", "N"),
        col("psi_sum", "sum_{n<=N} Lambda(n)"),
        col("psi_lcm", "ln lcm(1..N)"),
        col("discrepancy", "|psi_sum - psi_lcm|"),
    ]);
    let sum = chebyshev_psi_sum_table(nmax);
    let lcm = chebyshev_psi_lcm_table(nmax);
    let mut points = Vec::new();
    for n in 1..=nmax as usize {
        table.push(vec![
            n.into(),
            sum[n].into(),
            lcm[n].into(),
            (sum[n] - lcm[n]).abs().into(),
        ]);
        points.push((n as f64, sum[n]));
    }
    Ok(Output {
        report: report("psi", cfg, table),
        plot: Some(svg::plot("Chebyshev psi", "N", "psi(N)", &points, Style::Line)),
    })
}

/// Zeros listed as a table; also written as a zero-list file when `write`
/// is given.
pub fn zeros(cfg: &RunConfig, count: usize, write: Option<&Path>) -> AppResult<Output> {
    let zeros = match &cfg.zeros {
        ZeroSource::Compute => find_zeros(count)?,
        ZeroSource::File(_) => {
            let all = load_zeros(cfg, count)?;
            if all.len() < count {
                return Err(Error::InsufficientZeros {
                    required: count,
                    available: all.len(),
                }
                .into());
            }
            all[..count].to_vec()
        }
    };
    if let Some(path) = write {
        io::write_zero_file(path, &zeros)?;
    }
    let mut table = Table::new(vec![
        col("index", "n"),
        col("sigma", "Im rho_n with Z(sigma) = 0"),
        col("tolerance", "bound on |sigma - true ordinate|"),
    ]);
    let mut points = Vec::new();
    for z in &zeros {
        table.push(vec![z.index.into(), z.sigma.into(), z.tolerance.into()]);
        points.push((z.index as f64, z.sigma));
    }
    Ok(Output {
        report: report("zeros", cfg, table),
        plot: Some(svg::plot("Zeta zero ordinates", "n", "sigma_n", &points, Style::Scatter)),
    })
}

pub fn alpha(cfg: &RunConfig, limit_n: Option<u64>) -> AppResult<Output> {
    let c = cfg.constants()?;
    let ratio = limit_n.map(alpha_limit_ratio).transpose()?;
    let mut table = Table::new(vec![
        col("A", "exp(sqrt(pi*delta))"),
        col("D", "configured fractal dimension"),
        col("alpha_inverse", "D*A"),
        col("epsilon_tilde", "D*A/2"),
        col("e_tilde", "2*pi"),
        col("charge_residual", "|e^2/epsilon - 8*pi^2/(D*A)|"),
        col("limit_ratio", "((N-1)ln(N-1)-(N-2)ln(N-2))/(N ln N-(N-1)ln(N-1))"),
    ]);
    let eps = epsilon_tilde(&c);
    let charge = (c.e_tilde() * c.e_tilde() / eps - 8.0 * PI * PI / (c.dimension() * c.scaling())).abs();
    table.push(vec![
        c.scaling().into(),
        c.dimension().into(),
        alpha_inverse(&c).into(),
        eps.into(),
        c.e_tilde().into(),
        charge.into(),
        ratio.into(),
    ]);
    Ok(Output {
        report: report("alpha", cfg, table),
        plot: None,
    })
}

pub fn spectrum(cfg: &RunConfig, nmax: u64) -> AppResult<Output> {
    require_positive("Nmax", nmax)?;
    let c = cfg.constants()?;
    let zeros = load_zeros(cfg, zeros_required_for(nmax))?;
    let threads = NonZeroUsize::new(cfg.threads).ok_or_else(|| AppError::Argument("threads must be at least 1".into()))?;
    let rows = parallel_spectrum(nmax, &zeros, &c, threads)?;
    let mut table = Table::new(vec![
        col("N", "N"),
        col("is_prime_power", "N = p^k"),
        col("sigma", "ordinate paired with N by rank"),
        col("m_tilde", "s/N on prime powers else 0"),
        col("R_tilde", "m/s"),
        col("E2_tilde", "P0^2*(s^2*sigma*N*ln N + s/N + 2*s^2/N^2)"),
    ]);
    let mut points = Vec::new();
    for r in &rows {
        table.push(vec![
            r.n.into(),
            r.is_prime_power.into(),
            r.sigma_used.into(),
            r.m_tilde.into(),
            r.r_tilde.into(),
            r.e_squared.into(),
        ]);
        if r.is_prime_power {
            points.push((r.n as f64, r.e_squared.norm()));
        }
    }
    let mut rep = report("spectrum", cfg, table);
    rep.flags.push(("pairing", "i-th zero with i-th prime power".into()));
    Ok(Output {
        report: rep,
        plot: Some(svg::plot("OM energy spectrum", "N", "|E2(N)|", &points, Style::Scatter)),
    })
}

pub struct DynamicsArgs {
    pub levels: usize,
    pub dt: f64,
    pub settle: usize,
    pub span: usize,
}

impl Default for DynamicsArgs {
    fn default() -> Self {
        let l = LyapunovConfig::default();
        DynamicsArgs {
            levels: 12,
            dt: l.dt,
            settle: l.settle,
            span: l.span,
        }
    }
}

pub fn dynamics_report(cfg: &RunConfig, args: &DynamicsArgs) -> AppResult<Output> {
    let fe = feigenbaum_delta(args.levels, cfg.precision_digits)?;
    let lyap = lyapunov_spectrum_with(
        &RosslerParams::classic(),
        &LyapunovConfig {
            dt: args.dt,
            settle: args.settle,
            span: args.span,
            ..LyapunovConfig::default()
        },
    )?;
    let reference: f64 = DELTA_REFERENCE.parse().expect("valid literal");
    let [l1, l2, l3] = lyap.exponents;
    let mut table = Table::new(vec![
        col("lambda1", "Benettin exponent 1 (a=b=0.2 c=5.7)"),
        col("lambda2", "Benettin exponent 2"),
        col("lambda3", "Benettin exponent 3"),
        col("ky_dimension", "2 + (lambda1+lambda2)/|lambda3|"),
        col("configured_D", "D used by the OM formulas"),
        col("D_mismatch", "configured_D - ky_dimension"),
        col("feigenbaum_delta", "ratio of successive superstable gaps"),
        col("delta_error", "|delta - 4.669201609102990...|"),
        col("delta_digits", "digits on which the last two ratios agree"),
    ]);
    table.push(vec![
        l1.into(),
        l2.into(),
        l3.into(),
        lyap.ky_dimension.into(),
        cfg.dimension.into(),
        (cfg.dimension - lyap.ky_dimension).into(),
        format!("{:.*}", cfg.precision_digits as usize, fe.delta).into(),
        (fe.delta_f64() - reference).abs().into(),
        (fe.achieved_digits as u64).into(),
    ]);
    let mut rep = report("dynamics-report", cfg, table);
    rep.config.push(("levels", args.levels.to_string()));
    rep.config.push(("dt", args.dt.to_string()));
    rep.config.push(("span", args.span.to_string()));
    rep.notes.push(format!(
        "Kaplan-Yorke dimension of the Rossler attractor is {:.4}, not the configured D = {} (difference {:.4}); D stays a configured constant.",
        lyap.ky_dimension,
        cfg.dimension,
        cfg.dimension - lyap.ky_dimension
    ));
    Ok(Output {
        report: rep,
        plot: None,
    })
}

pub fn holography(cfg: &RunConfig, n: u64) -> AppResult<Output> {
    let c = cfg.constants()?;
    let h = holography_split_with(n, &c, cfg.mode)?;
    let mut table = Table::new(vec![
        col("N", "N"),
        col("m_tilde", "s/N"),
        col("R_H", "s"),
        col("R_L", "m/R_H"),
        col("R_total", "R_H + R_L"),
        col("product_residual", "|R_H*R_L - m|"),
        col("square_residual", "|R^2 - R_H^2 - R_L^2 - 2m|"),
        col("area_L", "R_L^2"),
        col("area_H", "2m - area_L"),
        col("area_H_direct", "R^2 - R_H^2"),
        col("area_sign_gap", "area_H - area_H_direct"),
        col("area_residual", "|area_L + area_H - 2m|"),
        col("G_tilde", "pi(1-D/2)/(2^k*s)"),
        col("entropy_L", "area_H/(4G) - m/(2G)"),
    ]);
    table.push(vec![
        n.into(),
        h.m_tilde.into(),
        h.r_h.into(),
        h.r_l.into(),
        h.r_total.into(),
        h.product_residual().into(),
        h.square_residual().into(),
        h.area_l.into(),
        h.area_h.into(),
        h.area_h_direct.into(),
        (h.area_h - h.area_h_direct).into(),
        h.area_residual().into(),
        h.g_tilde.into(),
        h.entropy_l.into(),
    ]);
    let mut rep = report("holography", cfg, table);
    rep.flags.push((
        "G_exponent",
        match cfg.mode {
            GravityMode::Derived => "3/2",
            GravityMode::Literal => "2/3",
        }
        .into(),
    ));
    if h.entropy_l.is_none() {
        rep.notes.push("G_tilde vanishes at D = 2; entropy_L is undefined.".into());
    }
    rep.notes.push(
        "area_H is fixed so that area_L = -area_H + 2m holds; expanding R^2 directly gives area_H_direct, which differs by -2 R_L^2."
            .into(),
    );
    Ok(Output {
        report: rep,
        plot: None,
    })
}

/// Uncertainty, first-order factorization and cosmological term between
/// consecutive prime powers `i`, `i + 1` for `i = 1..=count`.
pub fn relations(cfg: &RunConfig, count: usize) -> AppResult<Output> {
    require_positive("count", count as u64)?;
    let c = cfg.constants()?;
    let zeros = load_zeros(cfg, count + 1)?;
    let g = gravitational_constant(&c, cfg.mode);
    let mut table = Table::new(vec![
        col("i", "i"),
        col("q_i", "i-th prime power"),
        col("q_next", "(i+1)-th prime power"),
        col("sigma_gap", "sigma_{i+1} - sigma_i"),
        col("heisenberg_lhs", "sqrt(P0^2 s^2 D^2 A dsigma)/(D*A*sqrt(dsigma))"),
        col("heisenberg_rhs", "P0*s"),
        col("heisenberg_ratio", "lhs/rhs"),
        col("first_order", "P0*s*(sqrt2*dR + i*sqrt(d(sigma q ln q)))"),
        col("second_order_residual", "|F*conj(F) - (2dR^2 + d(sigma q ln q))(P0 s)^2|"),
        col("Lambda_tilde", "(i*pi/sqrt2)((1-D/2)/D)sqrt(d(sigma q ln q))"),
        col("negative_branch", "radicand < 0 (principal root taken)"),
        col("G_tilde", "pi(1-D/2)/(2^k*s)"),
    ]);
    let mut points = Vec::new();
    for i in 1..=count {
        let h = heisenberg_product(i, &zeros, &c)?;
        let e = einstein_factorization(i, &zeros, &c)?;
        let l = cosmological_constant(i, &zeros, &c)?;
        table.push(vec![
            i.into(),
            e.prime_powers[0].into(),
            e.prime_powers[1].into(),
            h.sigma_gap.into(),
            h.lhs.into(),
            h.rhs.into(),
            h.ratio.into(),
            e.first_order.into(),
            e.second_order_residual.into(),
            l.value.into(),
            e.negative_branch.into(),
            g.into(),
        ]);
        points.push((i as f64, h.ratio.norm()));
    }
    let mut rep = report("relations", cfg, table);
    rep.notes.push("Ratios and residuals are reported as computed; none is asserted to equal 1 or 0.".into());
    Ok(Output {
        report: rep,
        plot: Some(svg::plot("Uncertainty ratio", "i", "|lhs/rhs|", &points, Style::Line)),
    })
}

pub fn knot(cfg: &RunConfig, path: &Path, center: Point, cell_radius: f64) -> AppResult<Output> {
    let p = io::read_path_file(path)?;
    let k = reduce_to_om_knot(&p, center, cell_radius)?;
    let mut table = Table::new(vec![
        col("vertices", "path vertex count"),
        col("length", "polygon length"),
        col("scale", "max(1, round(length))"),
        col("winding", "sum of signed edge angles / 2pi"),
        col("scale_is_prime_power", "scale = p^k"),
        col("rank", "position among prime powers"),
    ]);
    table.push(vec![
        p.vertices().len().into(),
        p.length().into(),
        k.scale.into(),
        k.winding.into(),
        decompose_prime_power(k.scale).is_prime_power().into(),
        prime_power_rank(k.scale).into(),
    ]);
    Ok(Output {
        report: report("knot", cfg, table),
        plot: None,
    })
}
