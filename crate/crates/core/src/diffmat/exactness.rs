//! Node counts at which the shifted-order product is exact.

use crate::nodes::PoleSet;

/// Minimum node counts for exact `n`-th derivatives of
/// `q(z)/∏(z − α_k)^{μ_k}` with `deg q = M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactnessBound {
    /// `M + (n − 1)(r − 1) + 1`: each differentiation raises the numerator
    /// degree by `r − 1`, and every factor must see a numerator of degree
    /// at most `N − 1`. One node fewer can suffice when `M − s = Σμ_k` for
    /// some `s < n`, since the leading coefficient then cancels.
    pub tight: usize,
    /// The conservative count `M + n·r − 1`.
    pub conservative: usize,
}

pub fn min_nodes_exact(numer_degree: usize, poles: &PoleSet, n: u32) -> ExactnessBound {
    let r = poles.len();
    let n = n.max(1) as usize;
    let growth = r.saturating_sub(1);
    ExactnessBound {
        tight: numer_degree + (n - 1) * growth + 1,
        conservative: (numer_degree + n * r).saturating_sub(1),
    }
}

/// Bound when the function's true pole orders are below the orders the
/// matrix is built with: the numerator absorbs the difference
/// `Σ (built_k − actual_k)`.
pub fn min_nodes_exact_with_slack(numer_degree: usize, poles: &PoleSet, actual_orders: &[u32], n: u32) -> ExactnessBound {
    let slack: usize = poles
        .poles()
        .iter()
        .zip(actual_orders)
        .map(|(p, &a)| p.order.saturating_sub(a) as usize)
        .sum();
    min_nodes_exact(numer_degree + slack, poles, n)
}
