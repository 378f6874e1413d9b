//! Reproducible numerical experiments: rational exactness, elliptic
//! convergence and the Kummer eigenproblem.

use serde::Serialize;

use crate::diffmat::{
    algebraic_matrix, periodic_meromorphic_matrix, rational_power, trigonometric_matrix, Basis, DiffMatrix,
};
use crate::eigen::{build_kummer_operator, gauge_max_entry, smallest_eigenpair, EigenOptions};
use crate::error::{Error, Result};
use crate::linalg::CVector;
use crate::nodes::{segment_nodes, validate_against_poles, NodeSet, Pole, PoleSet};
use crate::scalar::Complex64;
use crate::specfun::{jacobi_sn_cn_dn, kummer_m, rational_test, weierstrass_p, JacobiParams, WeierstrassParams};

/// Order of the pole at the origin of the rational test function.
pub const TABLE1_POLE_ORDER: u32 = 10;
/// Derivative order used by the rational exactness table.
pub const TABLE1_DERIVATIVE: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorPoint {
    #[serde(rename = "N")]
    pub n: usize,
    pub error: f64,
}

/// `max_j |approx_j − exact_j|`.
pub fn max_abs_error(approx: &[Complex64], exact: &[Complex64]) -> f64 {
    approx.iter().zip(exact).map(|(a, e)| (a - e).norm()).fold(0.0, f64::max)
}

/// `max_j |(exact_j − approx_j) / exact_j|`.
pub fn max_rel_error(approx: &[Complex64], exact: &[Complex64]) -> f64 {
    approx
        .iter()
        .zip(exact)
        .map(|(a, e)| (a - e).norm() / e.norm())
        .fold(0.0, f64::max)
}

fn sample(nodes: &NodeSet, f: impl Fn(Complex64) -> Result<Complex64>) -> Result<CVector> {
    CVector::new(nodes.points().iter().map(|&z| f(z)).collect::<Result<Vec<_>>>()?)
}

/// Nodes `(1+i)(1 + k/N)/2`, `k = 1..N`.
pub fn diagonal_ray_nodes(n: usize) -> Result<NodeSet> {
    segment_nodes(Complex64::new(1.0, 1.0), 0.5, 1.0, n)
}

/// Relative error of the third-derivative matrix for `z⁻³ + z⁻⁹ + z⁻¹⁰`
/// with a tenth-order pole at the origin.
pub fn table1_error(n: usize) -> Result<f64> {
    let nodes = diagonal_ray_nodes(n)?;
    let poles = PoleSet::single(Complex64::new(0.0, 0.0), TABLE1_POLE_ORDER);
    let d = rational_power(&nodes, &poles, TABLE1_DERIVATIVE)?;
    let f = sample(&nodes, |z| rational_test(z, 0))?;
    let exact = sample(&nodes, |z| rational_test(z, TABLE1_DERIVATIVE))?;
    let approx = d.apply(&f)?;
    Ok(max_rel_error(approx.as_slice(), exact.as_slice()))
}

pub fn table1(n_min: usize, n_max: usize) -> Result<Vec<ErrorPoint>> {
    if n_min < 4 || n_min > n_max {
        return Err(Error::InvalidInput(format!(
            "need 4 <= n_min <= n_max, got {n_min}..{n_max}"
        )));
    }
    (n_min..=n_max)
        .map(|n| Ok(ErrorPoint { n, error: table1_error(n)? }))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipticFunction {
    /// `sn(z|m)` with derivative `cn·dn`.
    Jacobi,
    /// `℘(z)` with derivative `℘′`.
    Weierstrass,
}

impl std::str::FromStr for EllipticFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jacobi" => Ok(EllipticFunction::Jacobi),
            "weierstrass" => Ok(EllipticFunction::Weierstrass),
            other => Err(Error::InvalidInput(format!("unknown elliptic function '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EllipticConfig {
    pub function: EllipticFunction,
    /// Jacobi parameter `m`.
    pub m: f64,
    /// Full Weierstrass periods.
    pub omega1: Complex64,
    pub omega2: Complex64,
    /// Nodes are `ray·(1 + k/N)/2`.
    pub ray: Complex64,
    /// Order assigned to every pole; `None` keeps the natural order.
    pub pole_order: Option<u32>,
}

impl EllipticConfig {
    /// `sn(z|1/2)` on the ray `2+i`, simple poles at `iK′` and `2K+iK′`.
    pub fn jacobi() -> Self {
        EllipticConfig {
            function: EllipticFunction::Jacobi,
            m: 0.5,
            omega1: Complex64::new(2.0, 0.0),
            omega2: Complex64::new(0.0, 2.0),
            ray: Complex64::new(2.0, 1.0),
            pole_order: None,
        }
    }

    /// `℘` for periods `2`, `2i` on the ray `1+i`, double pole at the origin.
    pub fn weierstrass() -> Self {
        EllipticConfig {
            function: EllipticFunction::Weierstrass,
            ray: Complex64::new(1.0, 1.0),
            ..Self::jacobi()
        }
    }

    pub fn for_function(function: EllipticFunction) -> Self {
        match function {
            EllipticFunction::Jacobi => Self::jacobi(),
            EllipticFunction::Weierstrass => Self::weierstrass(),
        }
    }

    pub fn nodes(&self, n: usize) -> Result<NodeSet> {
        segment_nodes(self.ray, 0.5, 1.0, n)
    }
}

enum EllipticOracle {
    Jacobi(JacobiParams),
    Weierstrass(WeierstrassParams),
}

impl EllipticOracle {
    fn new(cfg: &EllipticConfig) -> Result<Self> {
        Ok(match cfg.function {
            EllipticFunction::Jacobi => EllipticOracle::Jacobi(JacobiParams::new(cfg.m)?),
            EllipticFunction::Weierstrass => {
                EllipticOracle::Weierstrass(WeierstrassParams::from_periods(cfg.omega1, cfg.omega2)?)
            }
        })
    }

    fn poles(&self, order: Option<u32>) -> Result<PoleSet> {
        match self {
            EllipticOracle::Jacobi(p) => PoleSet::new(
                p.cell_poles()
                    .iter()
                    .map(|&a| Pole::new(a, order.unwrap_or(1)))
                    .collect(),
            ),
            EllipticOracle::Weierstrass(_) => Ok(PoleSet::single(Complex64::new(0.0, 0.0), order.unwrap_or(2))),
        }
    }

    fn value_and_derivative(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        match self {
            EllipticOracle::Jacobi(p) => {
                let (sn, cn, dn) = jacobi_sn_cn_dn(z, p.m)?;
                Ok((sn, cn * dn))
            }
            EllipticOracle::Weierstrass(p) => Ok((weierstrass_p(z, p, 0)?, weierstrass_p(z, p, 1)?)),
        }
    }
}

/// Max-norm error of the periodic-meromorphic first derivative at `n` nodes.
pub fn elliptic_error(cfg: &EllipticConfig, n: usize) -> Result<f64> {
    elliptic_sweep(cfg, &[n]).map(|rows| rows[0].error)
}

pub fn elliptic_sweep(cfg: &EllipticConfig, ns: &[usize]) -> Result<Vec<ErrorPoint>> {
    if let Some(&n) = ns.iter().find(|&&n| n % 2 == 0) {
        return Err(Error::EvenNodeCount(n));
    }
    let oracle = EllipticOracle::new(cfg)?;
    let poles = oracle.poles(cfg.pole_order)?;
    ns.iter()
        .map(|&n| {
            let nodes = cfg.nodes(n)?;
            validate_against_poles(&nodes, &poles)?;
            let d = periodic_meromorphic_matrix(&nodes, &poles)?;
            let (f, df): (Vec<_>, Vec<_>) = nodes
                .points()
                .iter()
                .map(|&z| oracle.value_and_derivative(z))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .unzip();
            let approx = d.apply(&CVector::new(f)?)?;
            Ok(ErrorPoint {
                n,
                error: max_abs_error(approx.as_slice(), &df),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Gauge {
    /// Largest-modulus entry of each vector set to `1 + 0i`.
    #[default]
    MaxEntry,
    /// Oracle gauged by its largest entry; eigenvector scaled by the
    /// least-squares complex factor onto it.
    LeastSquares,
}

impl std::str::FromStr for Gauge {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max-entry" => Ok(Gauge::MaxEntry),
            "least-squares" => Ok(Gauge::LeastSquares),
            other => Err(Error::InvalidInput(format!("unknown gauge '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KummerConfig {
    pub b: Complex64,
    pub n: usize,
    /// Nodes are `scale·k/N`, `k = 1..N`.
    pub scale: Complex64,
    pub basis: Basis,
    pub gauge: Gauge,
    pub eigen: EigenOptions,
}

impl KummerConfig {
    pub fn new(b: Complex64) -> Self {
        KummerConfig {
            b,
            n: 21,
            scale: Complex64::new(5.0, 5.0),
            basis: Basis::Algebraic,
            gauge: Gauge::MaxEntry,
            eigen: EigenOptions::default(),
        }
    }

    pub fn nodes(&self) -> Result<NodeSet> {
        segment_nodes(self.scale, 0.0, 1.0, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KummerRow {
    pub k: usize,
    pub z: Complex64,
    /// Gauged eigenvector entry.
    pub f: Complex64,
    /// Gauged `M(λ, b, z)`.
    pub m: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KummerResult {
    pub lambda_m: Complex64,
    /// Max-norm distance between the gauged eigenvector and oracle.
    pub error: f64,
    pub residual: f64,
    pub iterations: usize,
    pub basis: Basis,
    /// The operator was singular to pivot tolerance, so `lambda_m ≈ 0`.
    pub near_singular: bool,
    pub rows: Vec<KummerRow>,
}

fn kummer_matrix(cfg: &KummerConfig, nodes: &NodeSet) -> Result<DiffMatrix> {
    match cfg.basis {
        Basis::Algebraic => algebraic_matrix(nodes),
        Basis::Trigonometric => trigonometric_matrix(nodes),
        other => Err(Error::UnsupportedBasis {
            basis: other.name(),
            what: "Kummer operator",
        }),
    }
}

pub fn kummer(cfg: &KummerConfig) -> Result<KummerResult> {
    let b = cfg.b;
    if b.im == 0.0 && b.re <= 0.0 && b.re.fract() == 0.0 {
        return Err(Error::Domain(format!("b = {b} is a non-positive integer")));
    }
    let nodes = cfg.nodes()?;
    let d = kummer_matrix(cfg, &nodes)?;
    let l = build_kummer_operator(&nodes, b, &d)?;
    // A pivot below tolerance means the smallest eigenvalue is ≈ 0; its
    // eigenvector is then recovered by iterating on the unguarded factors.
    let (pair, near_singular) = match smallest_eigenpair(&l, &cfg.eigen) {
        Err(Error::SingularOperator { .. }) => {
            let opts = EigenOptions {
                pivot_tol: 0.0,
                ..cfg.eigen
            };
            (smallest_eigenpair(&l, &opts)?, true)
        }
        other => (other?, false),
    };
    let oracle = gauge_max_entry(&sample(&nodes, |z| kummer_m(pair.lambda, b, z))?);
    let f = match cfg.gauge {
        Gauge::MaxEntry => pair.vector.clone(),
        Gauge::LeastSquares => {
            let c = pair.vector.dot_conj(&oracle) / pair.vector.dot_conj(&pair.vector);
            pair.vector.scale(c)
        }
    };
    let rows = nodes
        .points()
        .iter()
        .zip(f.iter().zip(oracle.iter()))
        .enumerate()
        .map(|(k, (&z, (&f, &m)))| KummerRow { k: k + 1, z, f, m })
        .collect();
    Ok(KummerResult {
        lambda_m: pair.lambda,
        error: max_abs_error(f.as_slice(), oracle.as_slice()),
        residual: pair.residual,
        iterations: pair.iterations,
        basis: cfg.basis,
        near_singular,
        rows,
    })
}
