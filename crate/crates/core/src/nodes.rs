//! Collocation node sets and pole sets.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Complex64;

/// Relative separation below which two nodes count as coincident.
pub const DISTINCT_REL_TOL: f64 = 1e-12;
/// Relative distance below which a node counts as sitting on a pole.
pub const POLE_REL_TOL: f64 = 1e-8;

/// Ordered, pairwise distinct complex collocation points (at least two).
#[derive(Debug, Clone, PartialEq)]
pub struct NodeSet {
    points: Vec<Complex64>,
}

impl NodeSet {
    pub fn new(points: Vec<Complex64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewNodes(points.len()));
        }
        if let Some(bad) = points.iter().position(|z| !z.is_finite()) {
            return Err(Error::InvalidInput(format!("node {bad} is not finite")));
        }
        let diam = diameter(&points);
        let threshold = DISTINCT_REL_TOL * diam;
        for j in 0..points.len() {
            for k in j + 1..points.len() {
                if (points[j] - points[k]).norm() <= threshold {
                    return Err(Error::CoincidentNodes(j, k));
                }
            }
        }
        Ok(NodeSet { points })
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn diameter(&self) -> f64 {
        diameter(&self.points)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(&NodesDoc::from(self))?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: NodesDoc = serde_json::from_str(s)?;
        doc.try_into()
    }
}

fn diameter(points: &[Complex64]) -> f64 {
    let mut d: f64 = 0.0;
    for j in 0..points.len() {
        for k in j + 1..points.len() {
            d = d.max((points[j] - points[k]).norm());
        }
    }
    d
}

/// A pole location with its order. Order zero is allowed and contributes nothing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Pole {
    pub re: f64,
    pub im: f64,
    pub order: u32,
}

impl Pole {
    pub fn new(location: Complex64, order: u32) -> Self {
        Pole {
            re: location.re,
            im: location.im,
            order,
        }
    }

    pub fn location(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Pole locations `α_k` with orders `μ_k`; locations pairwise distinct.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct PoleSet {
    poles: Vec<Pole>,
}

impl PoleSet {
    pub fn new(poles: Vec<Pole>) -> Result<Self> {
        for (j, p) in poles.iter().enumerate() {
            if !p.location().is_finite() {
                return Err(Error::InvalidInput(format!("pole {j} is not finite")));
            }
            for (k, q) in poles.iter().enumerate().skip(j + 1) {
                if p.location() == q.location() {
                    return Err(Error::CoincidentPoles(j, k));
                }
            }
        }
        Ok(PoleSet { poles })
    }

    pub fn empty() -> Self {
        PoleSet { poles: Vec::new() }
    }

    pub fn single(location: Complex64, order: u32) -> Self {
        PoleSet {
            poles: vec![Pole::new(location, order)],
        }
    }

    pub fn poles(&self) -> &[Pole] {
        &self.poles
    }

    /// Number of distinct poles, `r`.
    pub fn len(&self) -> usize {
        self.poles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poles.is_empty()
    }

    /// Same locations with every order raised by `k`.
    pub fn shifted(&self, k: u32) -> PoleSet {
        PoleSet {
            poles: self
                .poles
                .iter()
                .map(|p| Pole {
                    order: p.order + k,
                    ..*p
                })
                .collect(),
        }
    }

    /// Same locations with every order replaced by `order`.
    pub fn with_uniform_order(&self, order: u32) -> PoleSet {
        PoleSet {
            poles: self.poles.iter().map(|p| Pole { order, ..*p }).collect(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: PoleSet = serde_json::from_str(s)?;
        PoleSet::new(raw.poles)
    }
}

/// `{"nodes": [[re, im], ...]}`
#[derive(Debug, Serialize, Deserialize)]
struct NodesDoc {
    nodes: Vec<[f64; 2]>,
}

impl From<&NodeSet> for NodesDoc {
    fn from(n: &NodeSet) -> Self {
        NodesDoc {
            nodes: n.points.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

impl TryFrom<NodesDoc> for NodeSet {
    type Error = Error;
    fn try_from(doc: NodesDoc) -> Result<Self> {
        NodeSet::new(doc.nodes.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
    }
}

/// `z_k = direction · (t0 + (t1 − t0)·k/n)` for `k = 1..=n`.
pub fn segment_nodes(direction: Complex64, t0: f64, t1: f64, n: usize) -> Result<NodeSet> {
    if n < 2 {
        return Err(Error::TooFewNodes(n));
    }
    if !(t0 < t1) {
        return Err(Error::InvalidInput(format!("degenerate segment: t0 = {t0}, t1 = {t1}")));
    }
    if direction.norm() == 0.0 || !direction.is_finite() {
        return Err(Error::InvalidInput("segment direction must be finite and non-zero".into()));
    }
    let points = (1..=n)
        .map(|k| direction * (t0 + (t1 - t0) * k as f64 / n as f64))
        .collect();
    NodeSet::new(points)
}

/// `x_j = −π + 2πj/n`, `j = 1..=n`, on the real axis.
pub fn equispaced_periodic_nodes(n: usize) -> Result<NodeSet> {
    if n < 2 {
        return Err(Error::TooFewNodes(n));
    }
    let points = (1..=n)
        .map(|j| Complex64::new(-PI + 2.0 * PI * j as f64 / n as f64, 0.0))
        .collect();
    NodeSet::new(points)
}

/// Every node must keep a distance above `1e-8 · diameter` from every pole.
pub fn validate_against_poles(nodes: &NodeSet, poles: &PoleSet) -> Result<()> {
    let threshold = POLE_REL_TOL * nodes.diameter();
    for (j, z) in nodes.points().iter().enumerate() {
        for (k, p) in poles.poles().iter().enumerate() {
            if (z - p.location()).norm() <= threshold {
                return Err(Error::NodeTooCloseToPole { node: j, pole: k });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn segment_matches_experiment_layouts() {
        let n = segment_nodes(c(1.0, 1.0), 0.5, 1.0, 8).unwrap();
        for (k, z) in n.points().iter().enumerate() {
            let k = (k + 1) as f64;
            let expect = c(1.0, 1.0) * (1.0 + k / 8.0) / 2.0;
            assert!((z - expect).norm() < 1e-15);
        }
        let n = segment_nodes(c(2.0, 1.0), 0.5, 1.0, 10).unwrap();
        assert!((n.points()[9] - c(2.0, 1.0)).norm() < 1e-15);
        assert!((n.points()[0] - c(2.0, 1.0) * 1.1 / 2.0).norm() < 1e-15);
        let n = segment_nodes(c(5.0, 5.0), 0.0, 1.0, 21).unwrap();
        for (k, z) in n.points().iter().enumerate() {
            let expect = c(5.0, 5.0) * (k + 1) as f64 / 21.0;
            assert!((z - expect).norm() < 1e-14);
        }
    }

    #[test]
    fn segment_errors() {
        assert_eq!(segment_nodes(c(1.0, 0.0), 0.0, 1.0, 1), Err(Error::TooFewNodes(1)));
        assert!(matches!(segment_nodes(c(1.0, 0.0), 1.0, 1.0, 4), Err(Error::InvalidInput(_))));
        assert!(matches!(segment_nodes(c(0.0, 0.0), 0.0, 1.0, 4), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn segment_is_affine_in_k() {
        let n = segment_nodes(c(0.3, -2.0), -1.0, 2.5, 17).unwrap();
        let p = n.points();
        let step = p[1] - p[0];
        for w in p.windows(2) {
            assert!((w[1] - w[0] - step).norm() < 1e-14);
        }
    }

    #[test]
    fn equispaced_examples() {
        let n2 = equispaced_periodic_nodes(2).unwrap();
        assert!((n2.points()[0] - c(0.0, 0.0)).norm() < 1e-15);
        assert!((n2.points()[1] - c(PI, 0.0)).norm() < 1e-15);
        let n4 = equispaced_periodic_nodes(4).unwrap();
        let want = [-PI / 2.0, 0.0, PI / 2.0, PI];
        for (z, w) in n4.points().iter().zip(want) {
            assert!((z.re - w).abs() < 1e-15 && z.im == 0.0);
        }
        let n3 = equispaced_periodic_nodes(3).unwrap();
        let want = [-PI / 3.0, PI / 3.0, PI];
        for (z, w) in n3.points().iter().zip(want) {
            assert!((z.re - w).abs() < 1e-15);
        }
        assert_eq!(equispaced_periodic_nodes(1), Err(Error::TooFewNodes(1)));
    }

    #[test]
    fn equispaced_distinct_mod_two_pi() {
        for n in 2..40 {
            let p = equispaced_periodic_nodes(n).unwrap();
            for j in 0..n {
                for k in j + 1..n {
                    let d = (p.points()[j].re - p.points()[k].re).rem_euclid(2.0 * PI);
                    assert!(d > 1e-9 && 2.0 * PI - d > 1e-9);
                }
            }
        }
    }

    #[test]
    fn coincident_nodes_rejected() {
        let e = NodeSet::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 1e-14)]);
        assert_eq!(e, Err(Error::CoincidentNodes(1, 2)));
        assert_eq!(NodeSet::new(vec![c(0.0, 0.0)]), Err(Error::TooFewNodes(1)));
    }

    #[test]
    fn pole_validation() {
        let nodes = segment_nodes(c(1.0, 1.0), 0.5, 1.0, 8).unwrap();
        assert!(validate_against_poles(&nodes, &PoleSet::single(c(0.0, 0.0), 10)).is_ok());

        let on = PoleSet::single(nodes.points()[3], 1);
        assert_eq!(
            validate_against_poles(&nodes, &on),
            Err(Error::NodeTooCloseToPole { node: 3, pole: 0 })
        );

        let near = PoleSet::single(nodes.points()[5] + c(1e-15, 0.0), 2);
        assert!(matches!(
            validate_against_poles(&nodes, &near),
            Err(Error::NodeTooCloseToPole { node: 5, .. })
        ));
    }

    #[test]
    fn pole_set_rejects_duplicates() {
        let p = Pole::new(c(1.0, 2.0), 1);
        assert_eq!(PoleSet::new(vec![p, p]), Err(Error::CoincidentPoles(0, 1)));
    }

    #[test]
    fn json_documents() {
        let nodes = NodeSet::from_json(r#"{"nodes":[[0,0],[1,0.5],[2,-1]]}"#).unwrap();
        assert_eq!(nodes.points()[1], c(1.0, 0.5));
        assert_eq!(NodeSet::from_json(&nodes.to_json().unwrap()).unwrap(), nodes);

        let poles = PoleSet::from_json(r#"{"poles":[{"re":0,"im":1.5,"order":2}]}"#).unwrap();
        assert_eq!(poles.poles()[0].location(), c(0.0, 1.5));
        assert_eq!(poles.poles()[0].order, 2);
        assert_eq!(PoleSet::from_json(&poles.to_json().unwrap()).unwrap(), poles);

        assert!(NodeSet::from_json(r#"{"nodes":[[0,0]]}"#).is_err());
        assert!(matches!(NodeSet::from_json("{"), Err(Error::Parse(_))));
    }
}
