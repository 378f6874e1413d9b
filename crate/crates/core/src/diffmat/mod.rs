//! Differentiation matrices for algebraic, trigonometric, rational and
//! periodic-meromorphic interpolants on arbitrary complex nodes.
//!
//! A [`DiffMatrix`] maps samples `f(z_j)` to derivative values at the same
//! nodes. It is exact whenever `f` lies in the interpolation space of its
//! basis:
//!
//! | basis                  | space                                              |
//! |------------------------|----------------------------------------------------|
//! | `Algebraic`            | polynomials of degree ≤ N − 1                      |
//! | `Trigonometric`        | trigonometric polynomials of degree ≤ (N − 1)/2    |
//! | `Rational`             | `q(z) / ∏(z − α_k)^{μ_k}`, `deg q ≤ N − 1`         |
//! | `PeriodicMeromorphic`  | trigonometric polynomials over `∏(z − α_k)^{μ_k}`  |
//!
//! Higher derivatives of the rational families are not matrix powers: each
//! differentiation raises every pole order by one, so the `n`-th derivative
//! matrix is the ordered product of first-derivative matrices with shifted
//! orders (see [`rational_power`]).

pub mod exactness;
pub mod interp;
pub mod kernels;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{mat_vec, CMatrix, CVector};
use crate::nodes::{validate_against_poles, NodeSet, Pole, PoleSet};
use crate::scalar::Complex64;

pub use exactness::{min_nodes_exact, ExactnessBound};
pub use interp::{gauss_trig_eval, lagrange_eval, rational_interp_eval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    Algebraic,
    Trigonometric,
    Rational,
    PeriodicMeromorphic,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Algebraic => "algebraic",
            Basis::Trigonometric => "trigonometric",
            Basis::Rational => "rational",
            Basis::PeriodicMeromorphic => "periodic-meromorphic",
        }
    }

    pub fn has_poles(self) -> bool {
        matches!(self, Basis::Rational | Basis::PeriodicMeromorphic)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "algebraic" => Ok(Basis::Algebraic),
            "trigonometric" | "trig" => Ok(Basis::Trigonometric),
            "rational" => Ok(Basis::Rational),
            "periodic-meromorphic" | "periodic" => Ok(Basis::PeriodicMeromorphic),
            other => Err(Error::InvalidInput(format!("unknown basis `{other}`"))),
        }
    }
}

/// A square differentiation matrix together with what it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffMatrix {
    matrix: CMatrix,
    basis: Basis,
    nodes: NodeSet,
    poles: Option<PoleSet>,
    order: u32,
}

impl DiffMatrix {
    fn new(matrix: CMatrix, basis: Basis, nodes: NodeSet, poles: Option<PoleSet>, order: u32) -> Self {
        debug_assert_eq!(matrix.rows(), nodes.len());
        debug_assert_eq!(poles.is_some(), basis.has_poles());
        DiffMatrix {
            matrix,
            basis,
            nodes,
            poles,
            order,
        }
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    /// Base pole orders (before any per-factor shift).
    pub fn poles(&self) -> Option<&PoleSet> {
        self.poles.as_ref()
    }

    /// Derivative order this matrix produces.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    /// Derivative samples `D f`.
    pub fn apply(&self, samples: &CVector) -> Result<CVector> {
        mat_vec(&self.matrix, samples)
    }

    /// `D^n` for the polynomial families, whose derivatives stay in the space.
    pub fn power(&self, n: u32) -> Result<DiffMatrix> {
        if self.basis.has_poles() {
            return Err(Error::UnsupportedBasis {
                basis: self.basis.name(),
                what: "plain matrix powers (use the shifted-order product)",
            });
        }
        if n == 0 {
            return Err(Error::InvalidInput("derivative order must be at least 1".into()));
        }
        Ok(DiffMatrix::new(
            self.matrix.pow(n)?,
            self.basis,
            self.nodes.clone(),
            None,
            self.order * n,
        ))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&DiffMatrixDoc::from(self))?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: DiffMatrixDoc = serde_json::from_str(s)?;
        doc.try_into()
    }
}

/// Serialized form: matrix entries row-major as `[re, im]` pairs.
#[derive(Debug, Serialize, Deserialize)]
struct DiffMatrixDoc {
    basis: Basis,
    order: u32,
    nodes: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    poles: Option<Vec<Pole>>,
    matrix: Vec<[f64; 2]>,
}

impl From<&DiffMatrix> for DiffMatrixDoc {
    fn from(d: &DiffMatrix) -> Self {
        DiffMatrixDoc {
            basis: d.basis,
            order: d.order,
            nodes: d.nodes.points().iter().map(|z| [z.re, z.im]).collect(),
            poles: d.poles.as_ref().map(|p| p.poles().to_vec()),
            matrix: d.matrix.as_slice().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl TryFrom<DiffMatrixDoc> for DiffMatrix {
    type Error = Error;
    fn try_from(doc: DiffMatrixDoc) -> Result<Self> {
        let nodes = NodeSet::new(doc.nodes.iter().map(|&[re, im]| Complex64::new(re, im)).collect())?;
        let n = nodes.len();
        let matrix = CMatrix::from_row_major(
            n,
            n,
            doc.matrix.iter().map(|&[re, im]| Complex64::new(re, im)).collect(),
        )?;
        let poles = doc.poles.map(PoleSet::new).transpose()?;
        if poles.is_some() != doc.basis.has_poles() {
            return Err(Error::InvalidInput(format!(
                "basis {} {} a pole set",
                doc.basis,
                if doc.basis.has_poles() { "requires" } else { "does not take" }
            )));
        }
        Ok(DiffMatrix::new(matrix, doc.basis, nodes, poles, doc.order))
    }
}

fn pole_specs(poles: &PoleSet) -> Vec<kernels::PoleSpec<Complex64>> {
    poles.poles().iter().map(|p| (p.location(), p.order)).collect()
}

/// `ω′(z_i) = ∏_{k≠i}(z_i − z_k)`.
pub fn omega_prime(nodes: &NodeSet, i: usize) -> Complex64 {
    kernels::omega_prime(nodes.points(), i)
}

/// Exact first derivative of polynomials of degree ≤ N − 1.
pub fn algebraic_matrix(nodes: &NodeSet) -> Result<DiffMatrix> {
    let m = kernels::rational_entries(nodes.points(), &[])?;
    Ok(DiffMatrix::new(m, Basis::Algebraic, nodes.clone(), None, 1))
}

/// Exact first derivative of trigonometric polynomials of degree ≤ (N − 1)/2.
/// Requires an odd node count.
pub fn trigonometric_matrix(nodes: &NodeSet) -> Result<DiffMatrix> {
    let m = kernels::periodic_entries(nodes.points(), &[])?;
    Ok(DiffMatrix::new(m, Basis::Trigonometric, nodes.clone(), None, 1))
}

/// The trigonometric matrix on the vertical line `z_k = i·y_k`, written in
/// hyperbolic functions of the real ordinates.
pub fn hyperbolic_matrix(imag_parts: &[f64]) -> Result<DiffMatrix> {
    let n = imag_parts.len();
    let nodes = NodeSet::new(imag_parts.iter().map(|&y| Complex64::new(0.0, y)).collect())?;
    if n.is_multiple_of(2) {
        return Err(Error::EvenNodeCount(n));
    }
    let sh = |a: usize, b: usize| ((imag_parts[a] - imag_parts[b]) / 2.0).sinh();
    let minus_half_i = Complex64::new(0.0, -0.5);
    let m = CMatrix::from_fn(n, |i, j| {
        if i == j {
            let coth_sum: f64 = (0..n)
                .filter(|&k| k != i)
                .map(|k| 1.0 / ((imag_parts[i] - imag_parts[k]) / 2.0).tanh())
                .sum();
            minus_half_i * coth_sum
        } else {
            let mut ratio = -1.0;
            for k in (0..n).filter(|&k| k != i && k != j) {
                ratio *= sh(i, k) / sh(j, k);
            }
            minus_half_i * (ratio / sh(i, j))
        }
    });
    if !m.is_finite() {
        return Err(Error::NonFinite("hyperbolic matrix"));
    }
    Ok(DiffMatrix::new(m, Basis::Trigonometric, nodes, None, 1))
}

/// First derivative of `q(z)/∏(z − α_k)^{μ_k}`, `deg q ≤ N − 1`.
pub fn rational_matrix(nodes: &NodeSet, poles: &PoleSet) -> Result<DiffMatrix> {
    validate_against_poles(nodes, poles)?;
    let m = kernels::rational_entries(nodes.points(), &pole_specs(poles))?;
    Ok(DiffMatrix::new(m, Basis::Rational, nodes.clone(), Some(poles.clone()), 1))
}

/// `n`-th derivative matrix `D_{μ+n−1} ⋯ D_{μ+1} D_μ` for the rational family.
pub fn rational_power(nodes: &NodeSet, poles: &PoleSet, n: u32) -> Result<DiffMatrix> {
    validate_against_poles(nodes, poles)?;
    let z = nodes.points();
    let m = kernels::shifted_product(&pole_specs(poles), n, |p| kernels::rational_entries(z, p))?;
    Ok(DiffMatrix::new(m, Basis::Rational, nodes.clone(), Some(poles.clone()), n))
}

/// Trigonometric matrix with the pole factors `∏(z − α_k)^{μ_k}` divided out;
/// approximates derivatives of periodic meromorphic functions along a line.
pub fn periodic_meromorphic_matrix(nodes: &NodeSet, poles: &PoleSet) -> Result<DiffMatrix> {
    validate_against_poles(nodes, poles)?;
    let m = kernels::periodic_entries(nodes.points(), &pole_specs(poles))?;
    Ok(DiffMatrix::new(
        m,
        Basis::PeriodicMeromorphic,
        nodes.clone(),
        Some(poles.clone()),
        1,
    ))
}

pub fn periodic_meromorphic_power(nodes: &NodeSet, poles: &PoleSet, n: u32) -> Result<DiffMatrix> {
    validate_against_poles(nodes, poles)?;
    let z = nodes.points();
    let m = kernels::shifted_product(&pole_specs(poles), n, |p| kernels::periodic_entries(z, p))?;
    Ok(DiffMatrix::new(
        m,
        Basis::PeriodicMeromorphic,
        nodes.clone(),
        Some(poles.clone()),
        n,
    ))
}

/// Builds the `order`-th derivative matrix of any family.
pub fn differentiation_matrix(
    basis: Basis,
    nodes: &NodeSet,
    poles: Option<&PoleSet>,
    order: u32,
) -> Result<DiffMatrix> {
    let need_poles = || {
        poles.ok_or_else(|| Error::InvalidInput(format!("basis {basis} needs a pole set")))
    };
    match basis {
        Basis::Algebraic => algebraic_matrix(nodes)?.power(order),
        Basis::Trigonometric => trigonometric_matrix(nodes)?.power(order),
        Basis::Rational => rational_power(nodes, need_poles()?, order),
        Basis::PeriodicMeromorphic => periodic_meromorphic_power(nodes, need_poles()?, order),
    }
}
