//! Fixture constructors shared by the integration suites.

use algebroids::exactlin::basis_vec;
use algebroids::{CommAlg, Rat, RatMatrix, Trilinear, VertexAlgebroid};

/// 1, x with x*x = 0.
pub fn dual_numbers() -> CommAlg {
    let mut mul = Trilinear::zero(2, 2, 2);
    mul.set(0, 0, 0, Rat::one());
    mul.set(0, 1, 1, Rat::one());
    mul.set(1, 0, 1, Rat::one());
    CommAlg::new(2, basis_vec(2, 0), mul)
}

/// sl2 with the invariant form <e,f> = 1, <h,h> = 2, viewed as an
/// algebroid over the scalars (zero anchor and boundary map).
pub fn sl2_killing_algebroid() -> VertexAlgebroid {
    let mut form = Trilinear::zero(3, 3, 1);
    form.set(0, 1, 0, Rat::one());
    form.set(1, 0, 0, Rat::one());
    form.set(2, 2, 0, Rat::from(2));
    VertexAlgebroid::from_lie_with_form(&algebroids::sl2(), &form).unwrap()
}

/// Dual numbers with the one-dimensional degree-1 space spanned by d(x):
/// zero pairing and anchor, nonzero boundary map.
pub fn zero_pairing_algebroid() -> VertexAlgebroid {
    let a = dual_numbers();
    let mut mact = Trilinear::zero(2, 1, 1);
    mact.set(0, 0, 0, Rat::one());
    let mut partial = RatMatrix::zero(1, 2);
    *partial.at_mut(0, 1) = Rat::one();
    VertexAlgebroid::new(
        a,
        1,
        mact,
        Trilinear::zero(1, 1, 1),
        Trilinear::zero(1, 1, 2),
        Trilinear::zero(1, 2, 2),
        partial,
    )
}

/// The scalars with no degree-1 space.
pub fn trivial_algebroid() -> VertexAlgebroid {
    VertexAlgebroid::new(
        CommAlg::scalar(),
        0,
        Trilinear::zero(1, 0, 0),
        Trilinear::zero(0, 0, 0),
        Trilinear::zero(0, 0, 1),
        Trilinear::zero(0, 1, 1),
        RatMatrix::zero(0, 1),
    )
}
