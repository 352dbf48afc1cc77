//! Cochain spaces `C^{2n}(L, V)` and `C^{2n+1}(L, V)` in a fixed coordinate
//! basis, and the cochains of the morphism complex.
//!
//! A cochain takes `n` argument pairs (plus one free trailing argument in
//! odd degree) and is antisymmetric within each pair. Only canonical pairs
//! `i < j` are stored. Coordinates are ordered lexicographically by
//! `(pair_1, ..., pair_n, free, output)`, with pairs enumerated as
//! `(0,1), (0,2), ..., (1,2), ...`.

use num_traits::{One, Zero};

use crate::algebra::MorphismLYA;
use crate::error::{Error, Result};
use crate::linalg::{zero_vec, Matrix, Rational};
use crate::representation::MorphismRepresentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CochainKind {
    Even,
    Odd,
}

/// Number of canonical pairs `i < j` in `0..d`.
pub fn pair_count(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// Index of the canonical pair `(i, j)`, `i < j`.
pub fn pair_index(d: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < d);
    i * (2 * d - i - 1) / 2 + (j - i - 1)
}

pub fn pair_at(d: usize, mut p: usize) -> (usize, usize) {
    for i in 0..d {
        let row = d - i - 1;
        if p < row {
            return (i, i + 1 + p);
        }
        p -= row;
    }
    panic!("pair index out of range")
}

/// The coordinate space of one cochain kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CochainSpace {
    pub kind: CochainKind,
    pub pairs: usize,
    pub algebra_dim: usize,
    pub module_dim: usize,
}

impl CochainSpace {
    pub fn even(pairs: usize, algebra_dim: usize, module_dim: usize) -> Self {
        CochainSpace {
            kind: CochainKind::Even,
            pairs,
            algebra_dim,
            module_dim,
        }
    }

    pub fn odd(pairs: usize, algebra_dim: usize, module_dim: usize) -> Self {
        CochainSpace {
            kind: CochainKind::Odd,
            pairs,
            algebra_dim,
            module_dim,
        }
    }

    /// `Hom(L, V)`, viewed as the odd space with no pairs.
    pub fn linear_maps(algebra_dim: usize, module_dim: usize) -> Self {
        CochainSpace::odd(0, algebra_dim, module_dim)
    }

    pub fn arity(&self) -> usize {
        2 * self.pairs + usize::from(self.kind == CochainKind::Odd)
    }

    /// Number of canonical argument tuples.
    pub fn bases(&self) -> usize {
        let p = pair_count(self.algebra_dim).pow(self.pairs as u32);
        match self.kind {
            CochainKind::Even => p,
            CochainKind::Odd => p * self.algebra_dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.bases() * self.module_dim
    }

    /// Canonical tuple index of `args` and whether reordering the pairs
    /// flipped the sign; `None` if some pair repeats an index.
    pub fn locate(&self, args: &[usize]) -> Option<(bool, usize)> {
        debug_assert_eq!(args.len(), self.arity());
        let d = self.algebra_dim;
        let p = pair_count(d);
        let mut base = 0;
        let mut negate = false;
        for k in 0..self.pairs {
            let (a, b) = (args[2 * k], args[2 * k + 1]);
            let idx = match a.cmp(&b) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => pair_index(d, a, b),
                std::cmp::Ordering::Greater => {
                    negate = !negate;
                    pair_index(d, b, a)
                }
            };
            base = base * p + idx;
        }
        if self.kind == CochainKind::Odd {
            base = base * d + args[2 * self.pairs];
        }
        Some((negate, base))
    }

    /// The canonical argument tuple with index `base`.
    pub fn args_of(&self, mut base: usize) -> Vec<usize> {
        let d = self.algebra_dim;
        let p = pair_count(d);
        let mut args = vec![0; self.arity()];
        if self.kind == CochainKind::Odd {
            args[2 * self.pairs] = base % d;
            base /= d;
        }
        for k in (0..self.pairs).rev() {
            let (i, j) = pair_at(d, base % p);
            args[2 * k] = i;
            args[2 * k + 1] = j;
            base /= p;
        }
        args
    }

    /// Argument tuple and output index of coordinate `index`.
    pub fn decode(&self, index: usize) -> (Vec<usize>, usize) {
        (self.args_of(index / self.module_dim), index % self.module_dim)
    }

    pub fn check_vector(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "cochain vector has {} coordinates, expected {}",
                v.len(),
                self.dim()
            )));
        }
        Ok(())
    }
}

/// Dimension of `C^{2n}` or `C^{2n+1}`.
pub fn cochain_space_dim(kind: CochainKind, n: usize, d: usize, m: usize) -> usize {
    CochainSpace {
        kind,
        pairs: n,
        algebra_dim: d,
        module_dim: m,
    }
    .dim()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    space: CochainSpace,
    coeffs: Vec<Rational>,
}

impl Cochain {
    pub fn zero(space: CochainSpace) -> Self {
        Cochain {
            space,
            coeffs: zero_vec(space.dim()),
        }
    }

    pub fn from_coeffs(space: CochainSpace, coeffs: Vec<Rational>) -> Result<Self> {
        space.check_vector(&coeffs)?;
        Ok(Cochain { space, coeffs })
    }

    /// Fills the canonical coefficients from a function on canonical tuples.
    pub fn from_fn(space: CochainSpace, mut f: impl FnMut(&[usize]) -> Vec<Rational>) -> Self {
        let m = space.module_dim;
        let mut coeffs = Vec::with_capacity(space.dim());
        for base in 0..space.bases() {
            let v = f(&space.args_of(base));
            assert_eq!(v.len(), m, "cochain value has wrong length");
            coeffs.extend(v);
        }
        Cochain { space, coeffs }
    }

    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Value on basis arguments. Descending pairs flip the sign and repeated
    /// pairs give zero.
    pub fn evaluate(&self, args: &[usize]) -> Result<Vec<Rational>> {
        if args.len() != self.space.arity() {
            return Err(Error::Invalid(format!(
                "cochain takes {} arguments, got {}",
                self.space.arity(),
                args.len()
            )));
        }
        if let Some(&bad) = args.iter().find(|&&a| a >= self.space.algebra_dim) {
            return Err(Error::Invalid(format!("argument index {bad} out of range")));
        }
        let m = self.space.module_dim;
        Ok(match self.space.locate(args) {
            None => zero_vec(m),
            Some((neg, base)) => {
                let v = &self.coeffs[base * m..(base + 1) * m];
                if neg {
                    v.iter().map(|x| -x).collect()
                } else {
                    v.to_vec()
                }
            }
        })
    }

    /// Sets the value on `args`, adjusting the sign for descending pairs.
    pub fn set(&mut self, args: &[usize], value: &[Rational]) -> Result<()> {
        let m = self.space.module_dim;
        if args.len() != self.space.arity() || value.len() != m {
            return Err(Error::Dimension("cochain entry has the wrong shape".into()));
        }
        let (neg, base) = self
            .space
            .locate(args)
            .ok_or_else(|| Error::Invalid("cochain entry on a repeated pair".into()))?;
        for (slot, v) in self.coeffs[base * m..(base + 1) * m].iter_mut().zip(value) {
            *slot = if neg { -v } else { v.clone() };
        }
        Ok(())
    }

    /// `(c ∘ φ)(x_1, ..., x_k) = c(φx_1, ..., φx_k)`.
    pub fn pullback(&self, phi: &MorphismLYA) -> Result<Cochain> {
        if self.space.algebra_dim != phi.target().dim() {
            return Err(Error::Dimension("pullback: cochain is not over the morphism target".into()));
        }
        let target = CochainSpace {
            algebra_dim: phi.source().dim(),
            ..self.space
        };
        let mat = pullback_matrix(&target, phi);
        Ok(Cochain {
            space: target,
            coeffs: mat.mul_vec(&self.coeffs),
        })
    }

    /// `ψ ∘ c`.
    pub fn postcompose(&self, psi: &Matrix) -> Result<Cochain> {
        if psi.cols() != self.space.module_dim {
            return Err(Error::Dimension("postcompose: psi does not act on the value space".into()));
        }
        let space = CochainSpace {
            module_dim: psi.rows(),
            ..self.space
        };
        Ok(Cochain {
            space,
            coeffs: postcompose_matrix(&self.space, psi).mul_vec(&self.coeffs),
        })
    }
}

/// The matrix of `c ↦ c ∘ φ` from the space over `φ.target` to `target`,
/// which must be the same kind of space over `φ.source`.
///
/// Each pair contributes the 2x2 minor of `φ` on the two pairs involved.
pub fn pullback_matrix(target: &CochainSpace, phi: &MorphismLYA) -> Matrix {
    let (d1, d2) = (phi.source().dim(), phi.target().dim());
    assert_eq!(target.algebra_dim, d1, "pullback target must be over the morphism source");
    let source = CochainSpace {
        algebra_dim: d2,
        ..*target
    };
    let f = phi.matrix();
    let (p1, p2) = (pair_count(d1), pair_count(d2));
    let mut minor = vec![Rational::zero(); p2 * p1];
    for sp in 0..p2 {
        let (b1, b2) = pair_at(d2, sp);
        for tp in 0..p1 {
            let (a1, a2) = pair_at(d1, tp);
            minor[sp * p1 + tp] = f.get(b1, a1) * f.get(b2, a2) - f.get(b2, a1) * f.get(b1, a2);
        }
    }
    let m = target.module_dim;
    let mut out = Matrix::zeros(target.dim(), source.dim());
    let source_args: Vec<Vec<usize>> = (0..source.bases()).map(|b| source.args_of(b)).collect();
    for tb in 0..target.bases() {
        let a = target.args_of(tb);
        for (sb, b) in source_args.iter().enumerate() {
            let mut c = Rational::one();
            for k in 0..target.pairs {
                let tp = pair_index(d1, a[2 * k], a[2 * k + 1]);
                let sp = pair_index(d2, b[2 * k], b[2 * k + 1]);
                c *= &minor[sp * p1 + tp];
                if c.is_zero() {
                    break;
                }
            }
            if target.kind == CochainKind::Odd {
                let k = 2 * target.pairs;
                c *= f.get(b[k], a[k]);
            }
            if c.is_zero() {
                continue;
            }
            for r in 0..m {
                out.set(tb * m + r, sb * m + r, c.clone());
            }
        }
    }
    out
}

/// The matrix of `c ↦ ψ ∘ c` from `source` to the same space with values in
/// `ψ`'s codomain.
pub fn postcompose_matrix(source: &CochainSpace, psi: &Matrix) -> Matrix {
    assert_eq!(psi.cols(), source.module_dim, "psi must act on the value space");
    let (mv, mw) = (psi.cols(), psi.rows());
    let mut out = Matrix::zeros(source.bases() * mw, source.dim());
    for b in 0..source.bases() {
        out.put_block(b * mw, b * mv, psi);
    }
    out
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    out.put_block(0, 0, a);
    out.put_block(a.rows(), a.cols(), b);
    out
}

/// An element `(f, g)` of `C^{(2n, 2n+1)}(L, V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainPair {
    pub f: Cochain,
    pub g: Cochain,
}

/// `dim C^{(2n, 2n+1)}(L, V)`.
pub fn pair_dim(n: usize, d: usize, m: usize) -> usize {
    cochain_space_dim(CochainKind::Even, n, d, m) + cochain_space_dim(CochainKind::Odd, n, d, m)
}

impl CochainPair {
    pub fn new(f: Cochain, g: Cochain) -> Result<Self> {
        let (sf, sg) = (f.space, g.space);
        if sf.kind != CochainKind::Even
            || sg.kind != CochainKind::Odd
            || sf.pairs != sg.pairs
            || sf.algebra_dim != sg.algebra_dim
            || sf.module_dim != sg.module_dim
        {
            return Err(Error::Dimension("cochain pair components do not match".into()));
        }
        Ok(CochainPair { f, g })
    }

    pub fn zero(n: usize, d: usize, m: usize) -> Self {
        CochainPair {
            f: Cochain::zero(CochainSpace::even(n, d, m)),
            g: Cochain::zero(CochainSpace::odd(n, d, m)),
        }
    }

    pub fn pairs(&self) -> usize {
        self.f.space.pairs
    }

    pub fn algebra_dim(&self) -> usize {
        self.f.space.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.f.space.module_dim
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    /// Coordinates of `f` followed by those of `g`.
    pub fn to_vec(&self) -> Vec<Rational> {
        let mut v = self.f.coeffs.clone();
        v.extend_from_slice(&self.g.coeffs);
        v
    }

    pub fn from_vec(n: usize, d: usize, m: usize, v: &[Rational]) -> Result<Self> {
        let (se, so) = (CochainSpace::even(n, d, m), CochainSpace::odd(n, d, m));
        if v.len() != se.dim() + so.dim() {
            return Err(Error::Dimension(format!(
                "cochain pair vector has {} coordinates, expected {}",
                v.len(),
                se.dim() + so.dim()
            )));
        }
        Ok(CochainPair {
            f: Cochain::from_coeffs(se, v[..se.dim()].to_vec())?,
            g: Cochain::from_coeffs(so, v[se.dim()..].to_vec())?,
        })
    }

    pub fn pullback(&self, phi: &MorphismLYA) -> Result<CochainPair> {
        Ok(CochainPair {
            f: self.f.pullback(phi)?,
            g: self.g.pullback(phi)?,
        })
    }

    pub fn postcompose(&self, psi: &Matrix) -> Result<CochainPair> {
        Ok(CochainPair {
            f: self.f.postcompose(psi)?,
            g: self.g.postcompose(psi)?,
        })
    }
}

pub fn pullback_cochain(beta: &CochainPair, phi: &MorphismLYA) -> Result<CochainPair> {
    beta.pullback(phi)
}

pub fn postcompose_cochain(alpha: &CochainPair, psi: &Matrix) -> Result<CochainPair> {
    alpha.postcompose(psi)
}

/// Matrix of `(f, g) ↦ (f ∘ ∧φ, g ∘ ∧φ)` on `C^{(2n,2n+1)}` with values in an
/// `m`-dimensional module.
pub fn pair_pullback_matrix(n: usize, phi: &MorphismLYA, m: usize) -> Matrix {
    let d1 = phi.source().dim();
    block_diag(
        &pullback_matrix(&CochainSpace::even(n, d1, m), phi),
        &pullback_matrix(&CochainSpace::odd(n, d1, m), phi),
    )
}

/// Matrix of `(f, g) ↦ (ψ ∘ f, ψ ∘ g)` on `C^{(2n,2n+1)}(L, V)`, `d = dim L`.
pub fn pair_postcompose_matrix(n: usize, d: usize, psi: &Matrix) -> Matrix {
    let mv = psi.cols();
    block_diag(
        &postcompose_matrix(&CochainSpace::even(n, d, mv), psi),
        &postcompose_matrix(&CochainSpace::odd(n, d, mv), psi),
    )
}

/// A linear map `L → V`, as an `m x d` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalCochain {
    pub map: Matrix,
}

impl DiagonalCochain {
    pub fn new(map: Matrix) -> Self {
        DiagonalCochain { map }
    }

    pub fn zero(d: usize, m: usize) -> Self {
        DiagonalCochain {
            map: Matrix::zeros(m, d),
        }
    }

    /// Coordinates in the order of [`CochainSpace::linear_maps`]: input index
    /// major, output index minor.
    pub fn to_vec(&self) -> Vec<Rational> {
        self.map.transpose().entries().to_vec()
    }

    pub fn from_vec(d: usize, m: usize, v: &[Rational]) -> Result<Self> {
        Ok(DiagonalCochain {
            map: Matrix::from_vec(d, m, v.to_vec())?.transpose(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }
}

/// Dimensions of the two morphisms and two modules of a morphism complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismShape {
    pub d1: usize,
    pub d2: usize,
    pub mv: usize,
    pub mw: usize,
}

impl MorphismShape {
    pub fn of(mr: &MorphismRepresentation) -> Self {
        MorphismShape {
            d1: mr.phi().source().dim(),
            d2: mr.phi().target().dim(),
            mv: mr.rep_v().module_dim(),
            mw: mr.rep_w().module_dim(),
        }
    }

    /// Dimension of the morphism complex in degree `k`: `k = 0` holds the
    /// pairs `(λ1, λ2)`, degree `k ≥ 1` holds `C^{(2k,2k+1)}(L1,V) ⊕
    /// C^{(2k,2k+1)}(L2,W) ⊕ C^{(2k-2,2k-1)}(L1,W)`, where the last summand
    /// is `Hom(L1, W)` for `k = 1`.
    pub fn degree_dim(&self, k: usize) -> usize {
        let MorphismShape { d1, d2, mv, mw } = *self;
        match k {
            0 => d1 * mv + d2 * mw,
            1 => pair_dim(1, d1, mv) + pair_dim(1, d2, mw) + d1 * mw,
            _ => pair_dim(k, d1, mv) + pair_dim(k, d2, mw) + pair_dim(k - 1, d1, mw),
        }
    }
}

/// `(α, β, γ)` in degree (2,3) of the morphism complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCochain23 {
    pub alpha: CochainPair,
    pub beta: CochainPair,
    pub gamma: DiagonalCochain,
}

/// `(α, β, γ)` in degree (4,5) of the morphism complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismCochain45 {
    pub alpha: CochainPair,
    pub beta: CochainPair,
    pub gamma: CochainPair,
}

impl MorphismCochain23 {
    pub fn zero(s: MorphismShape) -> Self {
        MorphismCochain23 {
            alpha: CochainPair::zero(1, s.d1, s.mv),
            beta: CochainPair::zero(1, s.d2, s.mw),
            gamma: DiagonalCochain::zero(s.d1, s.mw),
        }
    }

    pub fn shape(&self) -> MorphismShape {
        MorphismShape {
            d1: self.alpha.algebra_dim(),
            d2: self.beta.algebra_dim(),
            mv: self.alpha.module_dim(),
            mw: self.beta.module_dim(),
        }
    }

    /// Checks that the components fit together and match `s`.
    pub fn check_shape(&self, s: MorphismShape) -> Result<()> {
        let ok = self.alpha.pairs() == 1
            && self.beta.pairs() == 1
            && self.shape() == s
            && self.gamma.map.shape() == (s.mw, s.d1);
        if ok {
            Ok(())
        } else {
            Err(Error::Dimension("morphism cochain does not fit the morphism representation".into()))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        let mut v = self.alpha.to_vec();
        v.extend(self.beta.to_vec());
        v.extend(self.gamma.to_vec());
        v
    }

    pub fn from_vec(s: MorphismShape, v: &[Rational]) -> Result<Self> {
        if v.len() != s.degree_dim(1) {
            return Err(Error::Dimension(format!(
                "morphism cochain vector has {} coordinates, expected {}",
                v.len(),
                s.degree_dim(1)
            )));
        }
        let a = pair_dim(1, s.d1, s.mv);
        let b = a + pair_dim(1, s.d2, s.mw);
        Ok(MorphismCochain23 {
            alpha: CochainPair::from_vec(1, s.d1, s.mv, &v[..a])?,
            beta: CochainPair::from_vec(1, s.d2, s.mw, &v[a..b])?,
            gamma: DiagonalCochain::from_vec(s.d1, s.mw, &v[b..])?,
        })
    }
}

impl MorphismCochain45 {
    pub fn zero(s: MorphismShape) -> Self {
        MorphismCochain45 {
            alpha: CochainPair::zero(2, s.d1, s.mv),
            beta: CochainPair::zero(2, s.d2, s.mw),
            gamma: CochainPair::zero(1, s.d1, s.mw),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    pub fn to_vec(&self) -> Vec<Rational> {
        let mut v = self.alpha.to_vec();
        v.extend(self.beta.to_vec());
        v.extend(self.gamma.to_vec());
        v
    }

    pub fn from_vec(s: MorphismShape, v: &[Rational]) -> Result<Self> {
        if v.len() != s.degree_dim(2) {
            return Err(Error::Dimension(format!(
                "morphism cochain vector has {} coordinates, expected {}",
                v.len(),
                s.degree_dim(2)
            )));
        }
        let a = pair_dim(2, s.d1, s.mv);
        let b = a + pair_dim(2, s.d2, s.mw);
        Ok(MorphismCochain45 {
            alpha: CochainPair::from_vec(2, s.d1, s.mv, &v[..a])?,
            beta: CochainPair::from_vec(2, s.d2, s.mw, &v[a..b])?,
            gamma: CochainPair::from_vec(1, s.d1, s.mw, &v[b..])?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::linalg::q;

    #[test]
    fn dims() {
        assert_eq!(cochain_space_dim(CochainKind::Even, 1, 2, 1), 1);
        assert_eq!(cochain_space_dim(CochainKind::Odd, 1, 2, 1), 2);
        assert_eq!(cochain_space_dim(CochainKind::Even, 2, 4, 4), 144);
        assert_eq!(cochain_space_dim(CochainKind::Even, 1, 1, 3), 0);
    }

    #[test]
    fn dim_matches_enumeration() {
        for kind in [CochainKind::Even, CochainKind::Odd] {
            for n in 1..=2 {
                for d in 0..=4 {
                    let s = CochainSpace {
                        kind,
                        pairs: n,
                        algebra_dim: d,
                        module_dim: 1,
                    };
                    let mut count = 0;
                    let arity = s.arity();
                    let mut args = vec![0; arity];
                    let total = d.pow(arity as u32);
                    for mut code in 0..total {
                        for a in args.iter_mut().rev() {
                            *a = code % d;
                            code /= d;
                        }
                        let canonical = (0..n).all(|k| args[2 * k] < args[2 * k + 1]);
                        if canonical {
                            assert_eq!(s.locate(&args), Some((false, count)));
                            assert_eq!(s.args_of(count), args);
                            count += 1;
                        }
                    }
                    assert_eq!(count, s.bases(), "{kind:?} n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn evaluate_signs() {
        let mut c = Cochain::zero(CochainSpace::even(1, 2, 1));
        c.set(&[0, 1], &[q(1)]).unwrap();
        assert_eq!(c.evaluate(&[1, 0]).unwrap(), vec![q(-1)]);
        assert_eq!(c.evaluate(&[0, 0]).unwrap(), vec![q(0)]);
        assert_eq!(c.evaluate(&[0, 1]).unwrap(), vec![q(1)]);
        assert!(c.evaluate(&[0]).is_err());
    }

    #[test]
    fn pullback_identity_and_zero() {
        let l = corpus::sl2();
        let space = CochainSpace::odd(1, 3, 2);
        let c = Cochain::from_fn(space, |a| vec![q((a[0] * 7 + a[1] * 3 + a[2]) as i64), q(a[2] as i64 - 1)]);
        assert_eq!(c.pullback(&MorphismLYA::identity(&l)).unwrap(), c);
        assert!(c.pullback(&MorphismLYA::zero(&l, &l)).unwrap().is_zero());
    }

    #[test]
    fn pullback_into_dimension_one_is_empty() {
        let phi = corpus::line_into_affine2();
        let beta = CochainPair::zero(1, 2, 2);
        let pulled = beta.pullback(&phi).unwrap();
        assert_eq!(pulled.to_vec().len(), 0);
    }

    #[test]
    fn postcompose_examples() {
        let space = CochainSpace::even(1, 3, 2);
        let c = Cochain::from_fn(space, |a| vec![q(a[0] as i64 + 1), q(a[1] as i64)]);
        assert_eq!(c.postcompose(&Matrix::identity(2)).unwrap(), c);
        assert!(c.postcompose(&Matrix::zeros(2, 2)).unwrap().is_zero());
        let doubled = c.postcompose(&Matrix::identity(2).scale(&q(2))).unwrap();
        let expect: Vec<_> = c.coeffs().iter().map(|x| x * q(2)).collect();
        assert_eq!(doubled.coeffs(), &expect[..]);
    }

    #[test]
    fn diagonal_vec_order() {
        let f = DiagonalCochain::new(Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6]]));
        let v = f.to_vec();
        assert_eq!(v, [1, 4, 2, 5, 3, 6].map(q).to_vec());
        assert_eq!(DiagonalCochain::from_vec(3, 2, &v).unwrap(), f);
    }
}
