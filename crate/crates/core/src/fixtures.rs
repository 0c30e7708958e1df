//! Small quivers used throughout the tests, the CLI and the verifier.

use crate::quiver::ValuedQuiver;

/// `1 -> 2 -> 3`, simply laced.
pub fn a3() -> ValuedQuiver {
    ValuedQuiver::new(&[1, 2, 3], &[(1, 2, 1, 1), (2, 3, 1, 1)], &[(1, 1), (2, 1), (3, 1)], &[(1, 2), (2, 3)])
        .expect("A3 fixture")
}

/// `1 -> 2` simply laced.
pub fn a2() -> ValuedQuiver {
    ValuedQuiver::new(&[1, 2], &[(1, 2, 1, 1)], &[(1, 1), (2, 1)], &[(1, 2)]).expect("A2 fixture")
}

/// Kronecker quiver: `1 -> 2` with `b_12 = b_21 = 2`.
pub fn k2() -> ValuedQuiver {
    ValuedQuiver::new(&[1, 2], &[(1, 2, 2, 2)], &[(1, 1), (2, 1)], &[(1, 2)]).expect("K2 fixture")
}

/// `1 -> 2` with `b_12 = 1`, `b_21 = 2`, `d = (2, 1)`.
pub fn b2() -> ValuedQuiver {
    ValuedQuiver::new(&[1, 2], &[(1, 2, 1, 2)], &[(1, 2), (2, 1)], &[(1, 2)]).expect("B2 fixture")
}

/// `1 -> 2 -> 3` together with the bypassed arrow `1 -> 3`.
pub fn triangle() -> ValuedQuiver {
    ValuedQuiver::new(
        &[1, 2, 3],
        &[(1, 2, 1, 1), (2, 3, 1, 1), (1, 3, 1, 1)],
        &[(1, 1), (2, 1), (3, 1)],
        &[(1, 2), (2, 3), (1, 3)],
    )
    .expect("triangle fixture")
}
