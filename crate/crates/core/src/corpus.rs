//! Small named algebras, representations and morphisms used by tests,
//! benches and the command line examples.

use crate::algebra::{antisymmetric_bracket, LieYamagutiAlgebra, MorphismLYA};
use crate::linalg::{q, zero_vec, Matrix};

fn lie(dim: usize, entries: &[(usize, usize, usize, i64)]) -> LieYamagutiAlgebra {
    let e: Vec<_> = entries.iter().map(|&(i, j, k, c)| (i, j, k, q(c))).collect();
    LieYamagutiAlgebra::from_lie(dim, antisymmetric_bracket(dim, &e)).expect("corpus Lie algebra")
}

/// The two-dimensional non-abelian Lie algebra, `[e1, e2] = e1`.
pub fn affine2() -> LieYamagutiAlgebra {
    lie(2, &[(0, 1, 0, 1)])
}

/// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h` with basis `(h, e, f)`.
pub fn sl2() -> LieYamagutiAlgebra {
    lie(3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)])
}

/// `[e1, e2] = e3`.
pub fn heisenberg() -> LieYamagutiAlgebra {
    lie(3, &[(0, 1, 2, 1)])
}

/// The Lie triple system of a Lie algebra: zero binary bracket and
/// `{a, b, c} = [[a, b], c]`.
pub fn triple_system(l: &LieYamagutiAlgebra) -> LieYamagutiAlgebra {
    LieYamagutiAlgebra::new(l.dim(), zero_vec(l.dim().pow(3)), l.ternary_tensor().to_vec())
        .expect("shapes carried over")
}

/// `k → aff2`, `e1 ↦ e2`.
pub fn line_into_affine2() -> MorphismLYA {
    MorphismLYA::new(
        LieYamagutiAlgebra::abelian(1),
        affine2(),
        Matrix::from_i64(&[&[0], &[1]]),
    )
    .expect("shape")
}

/// The quotient of the Heisenberg algebra by its centre.
pub fn heisenberg_projection() -> MorphismLYA {
    MorphismLYA::new(
        heisenberg(),
        LieYamagutiAlgebra::abelian(2),
        Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]),
    )
    .expect("shape")
}

/// Every algebra in the corpus with a short name.
pub fn algebras() -> Vec<(&'static str, LieYamagutiAlgebra)> {
    vec![
        ("abelian1", LieYamagutiAlgebra::abelian(1)),
        ("abelian2", LieYamagutiAlgebra::abelian(2)),
        ("abelian3", LieYamagutiAlgebra::abelian(3)),
        ("aff2", affine2()),
        ("sl2", sl2()),
        ("heisenberg", heisenberg()),
        ("aff2_lts", triple_system(&affine2())),
        ("sl2_lts", triple_system(&sl2())),
        ("heisenberg_lts", triple_system(&heisenberg())),
    ]
}

/// Every morphism in the corpus with a short name.
pub fn morphisms() -> Vec<(&'static str, MorphismLYA)> {
    vec![
        ("id_aff2", MorphismLYA::identity(&affine2())),
        ("id_sl2", MorphismLYA::identity(&sl2())),
        ("id_heisenberg", MorphismLYA::identity(&heisenberg())),
        ("zero_aff2", MorphismLYA::zero(&affine2(), &affine2())),
        ("line_into_aff2", line_into_affine2()),
        ("heisenberg_projection", heisenberg_projection()),
    ]
}
