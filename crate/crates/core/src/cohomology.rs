//! Coboundary operators as exact matrices, and cohomology at degree (2,3).
//!
//! For `(f, g) ∈ C^{(2n,2n+1)}(L, V)` the coboundary is `(δ_I f, δ_II g)`
//! with
//!
//! ```text
//! δ_I f(x_1..x_{2n+2}) = ρ(x_{2n+1}) g(x_1..x_{2n}, x_{2n+2})
//!                      - ρ(x_{2n+2}) g(x_1..x_{2n}, x_{2n+1})
//!                      - g(x_1..x_{2n}, [x_{2n+1}, x_{2n+2}])
//!   + Σ_{k=1}^{n} (-1)^{n+k+1} D(x_{2k-1}, x_{2k}) f(.. pair k removed ..)
//!   + Σ_{k=1}^{n} Σ_{j=2k+1}^{2n+2} (-1)^{n+k} f(.. pair k removed, x_j -> {x_{2k-1}, x_{2k}, x_j} ..)
//!
//! δ_II g(x_1..x_{2n+3}) = θ(x_{2n+2}, x_{2n+3}) g(x_1..x_{2n+1})
//!                       - θ(x_{2n+1}, x_{2n+3}) g(x_1..x_{2n}, x_{2n+2})
//!   + Σ_{k=1}^{n+1} (-1)^{n+k+1} D(x_{2k-1}, x_{2k}) g(.. pair k removed ..)
//!   + Σ_{k=1}^{n+1} Σ_{j=2k+1}^{2n+3} (-1)^{n+k} g(.. pair k removed, x_j -> {x_{2k-1}, x_{2k}, x_j} ..)
//! ```
//!
//! The case `n = 0` with `f = g` a linear map `L → V` is the coboundary of
//! the diagonal 1-cochains.

use num_traits::Zero;

use crate::algebra::LieYamagutiAlgebra;
use crate::cochain::{
    pair_dim, pair_postcompose_matrix, pair_pullback_matrix, postcompose_matrix, pullback_matrix,
    CochainPair, CochainSpace, DiagonalCochain, MorphismCochain23, MorphismCochain45, MorphismShape,
};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, solve, Matrix, Rational, Subspace};
use crate::representation::{MorphismRepresentation, Representation};

/// Where an input cochain's coordinates sit among the matrix columns.
#[derive(Clone, Copy)]
struct Slot {
    space: CochainSpace,
    offset: usize,
}

struct Assembler<'a> {
    l: &'a LieYamagutiAlgebra,
    rep: &'a Representation,
    out: Matrix,
    m: usize,
}

fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::from_integer(1.into())
    } else {
        Rational::from_integer((-1).into())
    }
}

impl Assembler<'_> {
    /// Adds `coef * A c(args)` to rows `row0..row0+m`, where `A` is an `m x m`
    /// matrix acting on the value of the input cochain.
    fn action(&mut self, row0: usize, a: &Matrix, coef: &Rational, src: Slot, args: &[usize]) {
        let Some((neg, base)) = src.space.locate(args) else {
            return;
        };
        let c = if neg { -coef } else { coef.clone() };
        for r in 0..self.m {
            for s in 0..self.m {
                let v = a.get(r, s);
                if !v.is_zero() {
                    self.out.add_at(row0 + r, src.offset + base * self.m + s, &(&c * v));
                }
            }
        }
    }

    /// Adds `coef * c(args)` to rows `row0..row0+m`.
    fn value(&mut self, row0: usize, coef: &Rational, src: Slot, args: &[usize]) {
        let Some((neg, base)) = src.space.locate(args) else {
            return;
        };
        let c = if neg { -coef } else { coef.clone() };
        for r in 0..self.m {
            self.out.add_at(row0 + r, src.offset + base * self.m + r, &c);
        }
    }

    /// The two sums over pairs `k = 1..=pairs` shared by `δ_I` and `δ_II`;
    /// `n` is the input pair count used in the signs.
    fn pair_sums(&mut self, row0: usize, x: &[usize], n: usize, pairs: usize, src: Slot) {
        for k in 1..=pairs {
            let (a, b) = (x[2 * k - 2], x[2 * k - 1]);
            let mut rest: Vec<usize> = x[..2 * k - 2].to_vec();
            rest.extend_from_slice(&x[2 * k..]);
            let s = sign(n + k + 1);
            self.action(row0, self.rep.d(a, b), &s, src, &rest);
            let s = sign(n + k);
            for (j0, &xj) in x.iter().enumerate().skip(2 * k) {
                let t = self.l.tern(a, b, xj).to_vec();
                let pos = j0 - 2;
                for (idx, c) in t.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut args = rest.clone();
                    args[pos] = idx;
                    self.value(row0, &(&s * c), src, &args);
                }
            }
        }
    }
}

/// Builds the coboundary from pair count `n` to `n + 1`. `f` is absent when
/// `n = 0`, where `g` is a linear map.
fn assemble(rep: &Representation, n: usize, f: Option<Slot>, g: Slot, cols: usize) -> Matrix {
    let l = rep.algebra();
    let (d, m) = (l.dim(), rep.module_dim());
    let te = CochainSpace::even(n + 1, d, m);
    let to = CochainSpace::odd(n + 1, d, m);
    let mut asm = Assembler {
        l,
        rep,
        out: Matrix::zeros(te.dim() + to.dim(), cols),
        m,
    };
    let one = sign(0);
    let minus = sign(1);

    for base in 0..te.bases() {
        let x = te.args_of(base);
        let row0 = base * m;
        let (p, q) = (x[2 * n], x[2 * n + 1]);
        let mut args = x[..2 * n].to_vec();
        args.push(q);
        asm.action(row0, rep.rho(p), &one, g, &args);
        args[2 * n] = p;
        asm.action(row0, rep.rho(q), &minus, g, &args);
        for (idx, c) in l.bin(p, q).iter().enumerate() {
            if !c.is_zero() {
                args[2 * n] = idx;
                asm.value(row0, &-c, g, &args);
            }
        }
        if let Some(f) = f {
            asm.pair_sums(row0, &x, n, n, f);
        }
    }

    let shift = te.dim();
    for base in 0..to.bases() {
        let x = to.args_of(base);
        let row0 = shift + base * m;
        let (a, b, c) = (x[2 * n], x[2 * n + 1], x[2 * n + 2]);
        asm.action(row0, rep.theta(b, c), &one, g, &x[..2 * n + 1]);
        let mut args = x[..2 * n].to_vec();
        args.push(b);
        asm.action(row0, rep.theta(a, c), &minus, g, &args);
        asm.pair_sums(row0, &x, n, n + 1, g);
    }
    asm.out
}

/// Matrix of `f ↦ δ(f, f)` from `Hom(L, V)` to `C^{(2,3)}(L, V)`.
pub fn delta_diagonal_matrix(rep: &Representation) -> Matrix {
    let (d, m) = (rep.algebra().dim(), rep.module_dim());
    let g = Slot {
        space: CochainSpace::linear_maps(d, m),
        offset: 0,
    };
    assemble(rep, 0, None, g, d * m)
}

/// Matrix of `δ` from `C^{(2n,2n+1)}(L, V)` to `C^{(2n+2,2n+3)}(L, V)`, `n ≥ 1`.
pub fn delta_pair_matrix(rep: &Representation, n: usize) -> Matrix {
    assert!(n >= 1, "pair coboundary needs at least one pair");
    let (d, m) = (rep.algebra().dim(), rep.module_dim());
    let f = CochainSpace::even(n, d, m);
    let g = CochainSpace::odd(n, d, m);
    assemble(
        rep,
        n,
        Some(Slot { space: f, offset: 0 }),
        Slot {
            space: g,
            offset: f.dim(),
        },
        f.dim() + g.dim(),
    )
}

fn check_rep(l: &LieYamagutiAlgebra, rep: &Representation) -> Result<()> {
    if rep.algebra() != l {
        return Err(Error::Invalid("representation is over a different algebra".into()));
    }
    Ok(())
}

pub fn delta_diagonal(l: &LieYamagutiAlgebra, rep: &Representation, f: &DiagonalCochain) -> Result<CochainPair> {
    check_rep(l, rep)?;
    if f.map.shape() != (rep.module_dim(), l.dim()) {
        return Err(Error::Dimension("diagonal cochain has the wrong shape".into()));
    }
    let v = delta_diagonal_matrix(rep).mul_vec(&f.to_vec());
    CochainPair::from_vec(1, l.dim(), rep.module_dim(), &v)
}

pub fn delta_pair(l: &LieYamagutiAlgebra, rep: &Representation, c: &CochainPair) -> Result<CochainPair> {
    check_rep(l, rep)?;
    let n = c.pairs();
    if n == 0 || c.algebra_dim() != l.dim() || c.module_dim() != rep.module_dim() {
        return Err(Error::Dimension("cochain pair does not fit the representation".into()));
    }
    let v = delta_pair_matrix(rep, n).mul_vec(&c.to_vec());
    CochainPair::from_vec(n + 1, l.dim(), rep.module_dim(), &v)
}

/// Source degree of a coboundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    /// Linear maps `L → V` into `C^{(2,3)}`.
    Diagonal,
    /// `C^{(2n,2n+1)}` into `C^{(2n+2,2n+3)}`.
    Pairs(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryMatrix {
    pub source: String,
    pub target: String,
    pub matrix: Matrix,
}

pub fn coboundary_matrix(l: &LieYamagutiAlgebra, rep: &Representation, degree: Degree) -> Result<CoboundaryMatrix> {
    check_rep(l, rep)?;
    Ok(match degree {
        Degree::Diagonal => CoboundaryMatrix {
            source: "C^1".into(),
            target: "C^(2,3)".into(),
            matrix: delta_diagonal_matrix(rep),
        },
        Degree::Pairs(0) => return Err(Error::Invalid("pair degree starts at 1".into())),
        Degree::Pairs(n) => CoboundaryMatrix {
            source: format!("C^({},{})", 2 * n, 2 * n + 1),
            target: format!("C^({},{})", 2 * n + 2, 2 * n + 3),
            matrix: delta_pair_matrix(rep, n),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyReport {
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
}

/// Cohomology at the middle of `incoming` then `outgoing`. The inclusion of
/// coboundaries in cocycles is checked, never assumed.
pub fn cohomology_between(incoming: &Matrix, outgoing: &Matrix) -> Result<CohomologyReport> {
    if incoming.rows() != outgoing.cols() {
        return Err(Error::Dimension("differentials do not compose".into()));
    }
    let z = kernel_basis(outgoing);
    let b = Subspace::column_space(incoming);
    if !z.contains_subspace(&b)? {
        return Err(Error::Consistency(
            "coboundaries are not cocycles; the two differentials do not compose to zero".into(),
        ));
    }
    Ok(CohomologyReport {
        dim_z: z.dim(),
        dim_b: b.dim(),
        dim_h: z.dim() - b.dim(),
        cocycles: z,
        coboundaries: b,
    })
}

/// `H^{(2,3)}(L, V)`: cocycles of `C^{(2,3)} → C^{(4,5)}` modulo the image of
/// the diagonal coboundary.
pub fn cohomology_23(l: &LieYamagutiAlgebra, rep: &Representation) -> Result<CohomologyReport> {
    check_rep(l, rep)?;
    cohomology_between(&delta_diagonal_matrix(rep), &delta_pair_matrix(rep, 1))
}

/// The differential of the morphism complex leaving degree `k`.
///
/// Degree 0 is `(λ1, λ2)` with `d(λ1, λ2) = (δλ1, δλ2, ψ∘λ1 - λ2∘φ)`. From
/// degree `k ≥ 1`, `d(α, β, γ) = (δ'α, δ''β, ψ∘α - β∘∧φ - δ'''γ)` where `δ'''`
/// is the coboundary for the pullback representation `W_φ` of `L1` on `W`.
pub fn morphism_differential(mr: &MorphismRepresentation, k: usize) -> Matrix {
    let s = MorphismShape::of(mr);
    let (phi, psi) = (mr.phi(), mr.psi());
    let mut out = Matrix::zeros(s.degree_dim(k + 1), s.degree_dim(k));
    if k == 0 {
        let a = delta_diagonal_matrix(mr.rep_v());
        let b = delta_diagonal_matrix(mr.rep_w());
        let (c0, r0) = (s.d1 * s.mv, pair_dim(1, s.d1, s.mv));
        let r1 = r0 + pair_dim(1, s.d2, s.mw);
        out.put_block(0, 0, &a);
        out.put_block(r0, c0, &b);
        out.put_block(r1, 0, &postcompose_matrix(&CochainSpace::linear_maps(s.d1, s.mv), psi));
        out.put_block(r1, c0, &-&pullback_matrix(&CochainSpace::linear_maps(s.d1, s.mw), phi));
        return out;
    }
    let a = delta_pair_matrix(mr.rep_v(), k);
    let b = delta_pair_matrix(mr.rep_w(), k);
    let c = if k == 1 {
        delta_diagonal_matrix(mr.pulled_back())
    } else {
        delta_pair_matrix(mr.pulled_back(), k - 1)
    };
    let (c0, r0) = (pair_dim(k, s.d1, s.mv), pair_dim(k + 1, s.d1, s.mv));
    let (c1, r1) = (c0 + pair_dim(k, s.d2, s.mw), r0 + pair_dim(k + 1, s.d2, s.mw));
    out.put_block(0, 0, &a);
    out.put_block(r0, c0, &b);
    out.put_block(r1, 0, &pair_postcompose_matrix(k, s.d1, psi));
    out.put_block(r1, c0, &-&pair_pullback_matrix(k, phi, s.mw));
    out.put_block(r1, c1, &-&c);
    out
}

/// Cohomology of a morphism at degree (2,3), with the simple variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCohomology {
    pub full: CohomologyReport,
    /// Coboundaries restricted to the simple form `(δλ1, δλ2, ψ∘λ1 - λ2∘φ)`.
    /// With degree 0 built from pairs `(λ1, λ2)` this coincides with `full`.
    pub simple: CohomologyReport,
}

pub fn morphism_cohomology_23(mr: &MorphismRepresentation) -> Result<MorphismCohomology> {
    let full = cohomology_between(&morphism_differential(mr, 0), &morphism_differential(mr, 1))?;
    Ok(MorphismCohomology {
        simple: full.clone(),
        full,
    })
}

pub fn morphism_delta23(mr: &MorphismRepresentation, c: &MorphismCochain23) -> Result<MorphismCochain45> {
    let s = MorphismShape::of(mr);
    c.check_shape(s)?;
    MorphismCochain45::from_vec(s, &morphism_differential(mr, 1).mul_vec(&c.to_vec()))
}

/// The differential from degree (4,5); its output is returned as a flat
/// coordinate vector of `C^{(6,7)}(L1,V) ⊕ C^{(6,7)}(L2,W) ⊕ C^{(4,5)}(L1,W)`.
pub fn morphism_delta_45(mr: &MorphismRepresentation, c: &MorphismCochain45) -> Result<Vec<Rational>> {
    let s = MorphismShape::of(mr);
    let v = c.to_vec();
    if v.len() != s.degree_dim(2) {
        return Err(Error::Dimension("morphism cochain does not fit the morphism representation".into()));
    }
    Ok(morphism_differential(mr, 2).mul_vec(&v))
}

/// `d(λ1, λ2)` for linear maps `λ1: L1 → V`, `λ2: L2 → W`.
pub fn morphism_d1(mr: &MorphismRepresentation, l1: &Matrix, l2: &Matrix) -> Result<MorphismCochain23> {
    let s = MorphismShape::of(mr);
    if l1.shape() != (s.mv, s.d1) || l2.shape() != (s.mw, s.d2) {
        return Err(Error::Dimension("linear maps do not fit the morphism representation".into()));
    }
    let mut v = DiagonalCochain::new(l1.clone()).to_vec();
    v.extend(DiagonalCochain::new(l2.clone()).to_vec());
    MorphismCochain23::from_vec(s, &morphism_differential(mr, 0).mul_vec(&v))
}

/// Some `(λ1, λ2)` with `d(λ1, λ2) = z`, or `None` if `z` is not a
/// coboundary. Fails if `z` is not a cocycle.
pub fn coboundary_preimage(mr: &MorphismRepresentation, z: &MorphismCochain23) -> Result<Option<(Matrix, Matrix)>> {
    let s = MorphismShape::of(mr);
    z.check_shape(s)?;
    let v = z.to_vec();
    if !morphism_differential(mr, 1).mul_vec(&v).iter().all(Zero::is_zero) {
        return Err(Error::Invalid("cochain is not a cocycle".into()));
    }
    Ok(solve(&morphism_differential(mr, 0), &v)?.map(|x| {
        let split = s.d1 * s.mv;
        let l1 = DiagonalCochain::from_vec(s.d1, s.mv, &x[..split]).expect("sized by shape");
        let l2 = DiagonalCochain::from_vec(s.d2, s.mw, &x[split..]).expect("sized by shape");
        (l1.map, l2.map)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MorphismLYA;
    use crate::corpus;
    use crate::linalg::q;
    use crate::representation::self_morphism_representation;

    #[test]
    fn diagonal_values_on_affine_line() {
        let l = corpus::affine2();
        let rep = Representation::adjoint(&l);
        let c = delta_diagonal(&l, &rep, &DiagonalCochain::new(Matrix::identity(2))).unwrap();
        assert_eq!(c.f.evaluate(&[0, 1]).unwrap(), vec![q(1), q(0)]);
        assert_eq!(c.g.evaluate(&[0, 1, 1]).unwrap(), vec![q(2), q(0)]);
    }

    #[test]
    fn trivial_cases_vanish() {
        let a = LieYamagutiAlgebra::abelian(3);
        let rep = Representation::zero(&a, 2);
        assert!(delta_diagonal_matrix(&rep).is_zero());
        assert!(delta_pair_matrix(&rep, 1).is_zero());
        let one = LieYamagutiAlgebra::abelian(1);
        let m = coboundary_matrix(&one, &Representation::adjoint(&one), Degree::Diagonal).unwrap();
        assert_eq!(m.matrix.shape(), (0, 1));
    }

    #[test]
    fn small_cohomology_dims() {
        let a = LieYamagutiAlgebra::abelian(2);
        let r = cohomology_23(&a, &Representation::trivial(&a)).unwrap();
        assert_eq!((r.dim_z, r.dim_b, r.dim_h), (3, 0, 3));
        let one = LieYamagutiAlgebra::abelian(1);
        let r = cohomology_23(&one, &Representation::adjoint(&one)).unwrap();
        assert_eq!((r.dim_z, r.dim_b, r.dim_h), (0, 0, 0));
    }

    #[test]
    fn morphism_small_dims() {
        let one = LieYamagutiAlgebra::abelian(1);
        let r = morphism_cohomology_23(&self_morphism_representation(&MorphismLYA::identity(&one))).unwrap();
        assert_eq!((r.full.dim_z, r.full.dim_b, r.full.dim_h), (1, 1, 0));
        let a = LieYamagutiAlgebra::abelian(2);
        let r = morphism_cohomology_23(&self_morphism_representation(&MorphismLYA::zero(&a, &a))).unwrap();
        assert_eq!(r.full.dim_h, 16);
        assert_eq!(r.simple, r.full);
    }

    #[test]
    fn squares_vanish_on_corpus() {
        for (name, l) in corpus::algebras() {
            for rep in [Representation::adjoint(&l), Representation::trivial(&l)] {
                let d0 = delta_diagonal_matrix(&rep);
                let d1 = delta_pair_matrix(&rep, 1);
                assert!((&d1 * &d0).is_zero(), "{name}");
            }
        }
    }

    #[test]
    fn preimage_round_trip_and_absent() {
        let phi = MorphismLYA::identity(&corpus::affine2());
        let mr = self_morphism_representation(&phi);
        let l1 = Matrix::from_i64(&[&[1, 2], &[0, -1]]);
        let l2 = Matrix::from_i64(&[&[3, 0], &[1, 1]]);
        let z = morphism_d1(&mr, &l1, &l2).unwrap();
        let (p1, p2) = coboundary_preimage(&mr, &z).unwrap().unwrap();
        assert_eq!(morphism_d1(&mr, &p1, &p2).unwrap(), z);
        let zero = MorphismCochain23::zero(MorphismShape::of(&mr));
        let (p1, p2) = coboundary_preimage(&mr, &zero).unwrap().unwrap();
        assert!(p1.is_zero() && p2.is_zero());

        let a = LieYamagutiAlgebra::abelian(2);
        let mr = self_morphism_representation(&MorphismLYA::zero(&a, &a));
        let mut z = MorphismCochain23::zero(MorphismShape::of(&mr));
        z.gamma.map.set(0, 0, q(1));
        assert_eq!(coboundary_preimage(&mr, &z).unwrap(), None);
    }
}
