//! Reference implementations of the test functions used as ground truth:
//! the rational test function, Jacobi and Weierstrass elliptic functions,
//! and Kummer's confluent hypergeometric function.
//!
//! Nothing in here touches the differentiation matrices.

mod elliptic;
mod kummer;
mod rational;
mod weierstrass;

pub use elliptic::{elliptic_k, jacobi_sn_cn_dn, JacobiParams};
pub use kummer::kummer_m;
pub use rational::rational_test;
pub use weierstrass::{weierstrass_p, WeierstrassParams};
