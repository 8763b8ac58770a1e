//! Small named posets used throughout the tests, the acceptance suite and
//! the documentation.

use std::sync::Arc;

use crate::poset::SpectralPoset;

fn build(name: &str, elements: &[&str], covers: &[(&str, &str)]) -> Arc<SpectralPoset> {
    Arc::new(SpectralPoset::new(name, elements, covers).expect("fixture is a valid poset"))
}

/// A single point.
pub fn point() -> Arc<SpectralPoset> {
    build("point", &["x"], &[])
}

/// Two incomparable points.
pub fn antichain2() -> Arc<SpectralPoset> {
    build("antichain2", &["x", "y"], &[])
}

/// `a < b`
pub fn chain2() -> Arc<SpectralPoset> {
    build("C2", &["a", "b"], &[("a", "b")])
}

/// `a < b < c`
pub fn chain3() -> Arc<SpectralPoset> {
    build("C3", &["a", "b", "c"], &[("a", "b"), ("b", "c")])
}

/// `a < b < c < d`
pub fn chain4() -> Arc<SpectralPoset> {
    build("C4", &["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")])
}

/// Spectrum of `k[[x,y,z]]/(xy,xz)`: `p = (x)` sits under the height-one
/// prime `r`, the other minimal prime `q = (y,z)` sits directly under the
/// maximal ideal `m`.
pub fn vee() -> Arc<SpectralPoset> {
    build(
        "V",
        &["p", "q", "r", "m"],
        &[("p", "r"), ("r", "m"), ("q", "m")],
    )
}

/// Two-dimensional local domain with two height-one primes.
pub fn diamond() -> Arc<SpectralPoset> {
    build(
        "D",
        &["0", "p1", "p2", "m"],
        &[("0", "p1"), ("0", "p2"), ("p1", "m"), ("p2", "m")],
    )
}

/// Height one, local: `a < c`, `b < c`.
pub fn wedge() -> Arc<SpectralPoset> {
    build("wedge", &["a", "b", "c"], &[("a", "c"), ("b", "c")])
}

/// Height one, not local: `a < b`, `a < c`.
pub fn fork() -> Arc<SpectralPoset> {
    build("fork", &["a", "b", "c"], &[("a", "b"), ("a", "c")])
}

/// Height one crown: `a, b < c, d`.
pub fn crown() -> Arc<SpectralPoset> {
    build(
        "crown",
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
}

/// Height two, local, catenary, two minimal primes under one height-one
/// prime: `a1, a2 < b < m`. Assh has two elements.
pub fn shared_middle() -> Arc<SpectralPoset> {
    build(
        "shared_middle",
        &["a1", "a2", "b", "m"],
        &[("a1", "b"), ("a2", "b"), ("b", "m")],
    )
}

/// Height two, local, catenary: two chains `a_i < b_i < m` glued at the top.
pub fn two_branch() -> Arc<SpectralPoset> {
    build(
        "two_branch",
        &["a1", "b1", "a2", "b2", "m"],
        &[("a1", "b1"), ("b1", "m"), ("a2", "b2"), ("b2", "m")],
    )
}

/// Height two, local, catenary: three chains `a_i < b_i < m` glued at the top.
pub fn three_branch() -> Arc<SpectralPoset> {
    build(
        "three_branch",
        &["a1", "b1", "a2", "b2", "a3", "b3", "m"],
        &[
            ("a1", "b1"),
            ("b1", "m"),
            ("a2", "b2"),
            ("b2", "m"),
            ("a3", "b3"),
            ("b3", "m"),
        ],
    )
}

/// Local but not catenary: saturated chains of lengths 3 and 2 from `0` to `m`.
pub fn non_catenary() -> Arc<SpectralPoset> {
    build(
        "non_catenary",
        &["0", "x", "y", "z", "m"],
        &[("0", "x"), ("x", "y"), ("y", "m"), ("0", "z"), ("z", "m")],
    )
}

/// Catenary but not graded below; the height function breaks (B3) at
/// `y < z`.
pub fn uneven() -> Arc<SpectralPoset> {
    build(
        "uneven",
        &["x", "y", "z", "w", "v"],
        &[("x", "v"), ("v", "z"), ("y", "z"), ("y", "w")],
    )
}

/// Every named fixture.
pub fn battery() -> Vec<Arc<SpectralPoset>> {
    vec![
        point(),
        antichain2(),
        chain2(),
        chain3(),
        chain4(),
        vee(),
        diamond(),
        wedge(),
        fork(),
        crown(),
        shared_middle(),
        two_branch(),
        three_branch(),
        non_catenary(),
        uneven(),
    ]
}

/// Fixtures with at most `n` elements.
pub fn battery_up_to(n: usize) -> Vec<Arc<SpectralPoset>> {
    battery().into_iter().filter(|p| p.len() <= n).collect()
}
