//! Lie-Yamaguti algebras given by structure constants, and their morphisms.
//!
//! A Lie-Yamaguti algebra on `k^d` is stored as two dense tensors:
//! `[e_i, e_j] = sum_k B[i][j][k] e_k` and `{e_i, e_j, e_k} = sum_l T[i][j][k][l] e_l`.
//! Both are stored on all ordered index tuples; antisymmetry is an axiom
//! that [`LieYamagutiAlgebra::check_axioms`] verifies, not an encoding.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, q, zero_vec, Matrix, Rational};
use crate::report::{Verdict, Witness};

/// Evaluates the bilinear map with tensor `t` (`d x d x d`) on two vectors.
pub(crate) fn bilinear(t: &[Rational], d: usize, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = zero_vec(d);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let c = xi * yj;
            axpy(&mut out, &c, &t[(i * d + j) * d..(i * d + j + 1) * d]);
        }
    }
    out
}

/// Evaluates the trilinear map with tensor `t` (`d^4` entries) on three vectors.
pub(crate) fn trilinear(
    t: &[Rational],
    d: usize,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Vec<Rational> {
    let mut out = zero_vec(d);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let xy = xi * yj;
            for (k, zk) in z.iter().enumerate() {
                if zk.is_zero() {
                    continue;
                }
                let c = &xy * zk;
                let base = ((i * d + j) * d + k) * d;
                axpy(&mut out, &c, &t[base..base + d]);
            }
        }
    }
    out
}

pub(crate) fn unit(d: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(d);
    v[i] = q(1);
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieYamagutiAlgebra {
    dim: usize,
    binary: Vec<Rational>,
    ternary: Vec<Rational>,
}

/// Which Leibniz identity a product is expected to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeibnizConvention {
    /// `a(bc) = (ab)c + b(ac)`
    Left,
    /// `(ab)c = (ac)b + a(bc)`
    Right,
}

impl LieYamagutiAlgebra {
    /// Wraps raw tensors. Only shapes are checked here; use
    /// [`check_axioms`](Self::check_axioms) for the algebra identities.
    pub fn new(dim: usize, binary: Vec<Rational>, ternary: Vec<Rational>) -> Result<Self> {
        if binary.len() != dim.pow(3) {
            return Err(Error::Dimension(format!(
                "binary tensor has {} entries, expected {}",
                binary.len(),
                dim.pow(3)
            )));
        }
        if ternary.len() != dim.pow(4) {
            return Err(Error::Dimension(format!(
                "ternary tensor has {} entries, expected {}",
                ternary.len(),
                dim.pow(4)
            )));
        }
        Ok(LieYamagutiAlgebra {
            dim,
            binary,
            ternary,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        LieYamagutiAlgebra {
            dim,
            binary: zero_vec(dim.pow(3)),
            ternary: zero_vec(dim.pow(4)),
        }
    }

    /// The algebra induced by a Lie bracket, with `{a, b, c} = [[a, b], c]`.
    ///
    /// `lie` is the `d x d x d` bracket tensor. Antisymmetry and the Jacobi
    /// identity are verified on basis triples.
    pub fn from_lie(dim: usize, lie: Vec<Rational>) -> Result<Self> {
        let alg = LieYamagutiAlgebra::new(dim, lie, zero_vec(dim.pow(4)))?;
        for i in 0..dim {
            for j in 0..dim {
                let s: Vec<Rational> = alg
                    .bin(i, j)
                    .iter()
                    .zip(alg.bin(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                if !is_zero_vec(&s) {
                    return Err(Error::rejected(
                        "Lie bracket is not antisymmetric",
                        Witness::new("antisymmetry", vec![i, j]),
                    ));
                }
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let mut acc = zero_vec(dim);
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let ab = alg.bin(a, b).to_vec();
                        let v = alg.bracket(&ab, &unit(dim, c));
                        axpy(&mut acc, &q(1), &v);
                    }
                    if !is_zero_vec(&acc) {
                        return Err(Error::rejected(
                            "Lie bracket violates the Jacobi identity",
                            Witness::new("Jacobi", vec![i, j, k]),
                        ));
                    }
                }
            }
        }
        let mut ternary = zero_vec(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                let ij = alg.bin(i, j).to_vec();
                for k in 0..dim {
                    let v = alg.bracket(&ij, &unit(dim, k));
                    let base = ((i * dim + j) * dim + k) * dim;
                    ternary[base..base + dim].clone_from_slice(&v);
                }
            }
        }
        Ok(LieYamagutiAlgebra { ternary, ..alg })
    }

    /// The algebra of a Leibniz algebra with `[a, b] = ab - ba` and
    /// `{a, b, c} = -(ab)c`.
    ///
    /// The chosen Leibniz identity is verified first; the constructed algebra
    /// is then run through [`check_axioms`](Self::check_axioms) and rejected
    /// with the failing axiom if it does not pass.
    pub fn from_leibniz(
        dim: usize,
        product: Vec<Rational>,
        convention: LeibnizConvention,
    ) -> Result<Self> {
        if product.len() != dim.pow(3) {
            return Err(Error::Dimension(format!(
                "product tensor has {} entries, expected {}",
                product.len(),
                dim.pow(3)
            )));
        }
        let mul = |x: &[Rational], y: &[Rational]| bilinear(&product, dim, x, y);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let (a, b, c) = (unit(dim, i), unit(dim, j), unit(dim, k));
                    let (lhs, rhs) = match convention {
                        LeibnizConvention::Left => {
                            let lhs = mul(&a, &mul(&b, &c));
                            let mut rhs = mul(&mul(&a, &b), &c);
                            axpy(&mut rhs, &q(1), &mul(&b, &mul(&a, &c)));
                            (lhs, rhs)
                        }
                        LeibnizConvention::Right => {
                            let lhs = mul(&mul(&a, &b), &c);
                            let mut rhs = mul(&mul(&a, &c), &b);
                            axpy(&mut rhs, &q(1), &mul(&a, &mul(&b, &c)));
                            (lhs, rhs)
                        }
                    };
                    if lhs != rhs {
                        let name = match convention {
                            LeibnizConvention::Left => "left Leibniz identity",
                            LeibnizConvention::Right => "right Leibniz identity",
                        };
                        return Err(Error::rejected(
                            "product violates the chosen Leibniz identity",
                            Witness::new(name, vec![i, j, k]),
                        ));
                    }
                }
            }
        }
        let mut binary = zero_vec(dim.pow(3));
        let mut ternary = zero_vec(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                let ij = (i * dim + j) * dim;
                let ji = (j * dim + i) * dim;
                for k in 0..dim {
                    binary[ij + k] = &product[ij + k] - &product[ji + k];
                }
                let ab = product[ij..ij + dim].to_vec();
                for k in 0..dim {
                    let v = mul(&ab, &unit(dim, k));
                    let base = ((i * dim + j) * dim + k) * dim;
                    for l in 0..dim {
                        ternary[base + l] = -v[l].clone();
                    }
                }
            }
        }
        let alg = LieYamagutiAlgebra {
            dim,
            binary,
            ternary,
        };
        match alg.check_axioms() {
            Verdict::Pass => Ok(alg),
            Verdict::Fail(w) => Err(Error::rejected(
                "Leibniz construction does not satisfy the Lie-Yamaguti axioms",
                w,
            )),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn binary_tensor(&self) -> &[Rational] {
        &self.binary
    }

    pub fn ternary_tensor(&self) -> &[Rational] {
        &self.ternary
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bin(&self, i: usize, j: usize) -> &[Rational] {
        let d = self.dim;
        &self.binary[(i * d + j) * d..(i * d + j + 1) * d]
    }

    /// Coordinates of `{e_i, e_j, e_k}`.
    pub fn tern(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        let d = self.dim;
        let base = ((i * d + j) * d + k) * d;
        &self.ternary[base..base + d]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        bilinear(&self.binary, self.dim, x, y)
    }

    pub fn triple(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        trilinear(&self.ternary, self.dim, x, y, z)
    }

    pub fn is_abelian(&self) -> bool {
        is_zero_vec(&self.binary) && is_zero_vec(&self.ternary)
    }

    /// Checks the six defining identities on every basis tuple, in order,
    /// returning the first failing axiom and tuple.
    ///
    /// Axiom (5) is `{x,y,[u,v]} = [{x,y,u},v] + [u,{x,y,v}]`.
    pub fn check_axioms(&self) -> Verdict {
        let d = self.dim;
        // Sparse copies of the structure tensors keep the quintic loops cheap.
        let sb: Vec<Sparse> = (0..d * d).map(|ij| sparse(&self.binary[ij * d..(ij + 1) * d])).collect();
        let st: Vec<Sparse> = (0..d * d * d).map(|ijk| sparse(&self.ternary[ijk * d..(ijk + 1) * d])).collect();
        let b = |i: usize, j: usize| &sb[i * d + j];
        let t = |i: usize, j: usize, k: usize| &st[(i * d + j) * d + k];
        let one = |i: usize| vec![(i, q(1))];
        let brk = |acc: &mut Vec<Rational>, sign: i64, x: &Sparse, y: &Sparse| {
            for (i, a) in x {
                for (j, c) in y {
                    let ac = a * c * q(sign);
                    for (l, v) in b(*i, *j) {
                        acc[*l] += &ac * v;
                    }
                }
            }
        };
        let tri = |acc: &mut Vec<Rational>, sign: i64, x: &Sparse, y: &Sparse, z: &Sparse| {
            for (i, a) in x {
                for (j, c) in y {
                    let ac = a * c;
                    for (k, e) in z {
                        let ace = &ac * e * q(sign);
                        for (l, v) in t(*i, *j, *k) {
                            acc[*l] += &ace * v;
                        }
                    }
                }
            }
        };

        for i in 0..d {
            for j in 0..d {
                let s: Vec<Rational> = self.bin(i, j).iter().zip(self.bin(j, i)).map(|(a, b)| a + b).collect();
                if !is_zero_vec(&s) {
                    return Verdict::fail("axiom (1)", vec![i, j]);
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let s: Vec<Rational> =
                        self.tern(i, j, k).iter().zip(self.tern(j, i, k)).map(|(a, b)| a + b).collect();
                    if !is_zero_vec(&s) {
                        return Verdict::fail("axiom (2)", vec![i, j, k]);
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut acc = zero_vec(d);
                    for (a, c, e) in [(i, j, k), (j, k, i), (k, i, j)] {
                        brk(&mut acc, 1, b(a, c), &one(e));
                        axpy(&mut acc, &q(1), self.tern(a, c, e));
                    }
                    if !is_zero_vec(&acc) {
                        return Verdict::fail("axiom (3)", vec![i, j, k]);
                    }
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for u in 0..d {
                        let mut acc = zero_vec(d);
                        for (a, c, e) in [(i, j, k), (j, k, i), (k, i, j)] {
                            tri(&mut acc, 1, b(a, c), &one(e), &one(u));
                        }
                        if !is_zero_vec(&acc) {
                            return Verdict::fail("axiom (4)", vec![i, j, k, u]);
                        }
                    }
                }
            }
        }
        for x in 0..d {
            for y in 0..d {
                for u in 0..d {
                    for v in 0..d {
                        let mut acc = zero_vec(d);
                        tri(&mut acc, 1, &one(x), &one(y), b(u, v));
                        brk(&mut acc, -1, t(x, y, u), &one(v));
                        brk(&mut acc, -1, &one(u), t(x, y, v));
                        if !is_zero_vec(&acc) {
                            return Verdict::fail("axiom (5)", vec![x, y, u, v]);
                        }
                    }
                }
            }
        }
        for x in 0..d {
            for y in 0..d {
                for u in 0..d {
                    for v in 0..d {
                        for w in 0..d {
                            let mut acc = zero_vec(d);
                            tri(&mut acc, 1, &one(x), &one(y), t(u, v, w));
                            tri(&mut acc, -1, t(x, y, u), &one(v), &one(w));
                            tri(&mut acc, -1, &one(u), t(x, y, v), &one(w));
                            tri(&mut acc, -1, &one(u), &one(v), t(x, y, w));
                            if !is_zero_vec(&acc) {
                                return Verdict::fail("axiom (6)", vec![x, y, u, v, w]);
                            }
                        }
                    }
                }
            }
        }
        Verdict::Pass
    }
}

type Sparse = Vec<(usize, Rational)>;

fn sparse(v: &[Rational]) -> Sparse {
    v.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| (i, a.clone())).collect()
}

/// A linear map between two algebras, `target.dim x source.dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismLYA {
    source: LieYamagutiAlgebra,
    target: LieYamagutiAlgebra,
    matrix: Matrix,
}

impl MorphismLYA {
    pub fn new(source: LieYamagutiAlgebra, target: LieYamagutiAlgebra, matrix: Matrix) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::Dimension(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(MorphismLYA {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(l: &LieYamagutiAlgebra) -> Self {
        MorphismLYA {
            source: l.clone(),
            target: l.clone(),
            matrix: Matrix::identity(l.dim()),
        }
    }

    pub fn zero(source: &LieYamagutiAlgebra, target: &LieYamagutiAlgebra) -> Self {
        MorphismLYA {
            source: source.clone(),
            target: target.clone(),
            matrix: Matrix::zeros(target.dim(), source.dim()),
        }
    }

    pub fn source(&self) -> &LieYamagutiAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieYamagutiAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(x)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MorphismLYA) -> Result<MorphismLYA> {
        if inner.target != self.source {
            return Err(Error::Invalid(
                "composition: inner target differs from outer source".into(),
            ));
        }
        Ok(MorphismLYA {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.checked_mul(&inner.matrix)?,
        })
    }

    /// Axioms of the source and target, then [`check_morphism`](Self::check_morphism).
    pub fn check(&self) -> Verdict {
        let tag = |v: Verdict, name: &str| match v {
            Verdict::Pass => Verdict::Pass,
            Verdict::Fail(w) => Verdict::Fail(Witness::new(format!("{name} {}", w.check), w.tuple)),
        };
        tag(self.source.check_axioms(), "source")
            .and_then(|| tag(self.target.check_axioms(), "target"))
            .and_then(|| self.check_morphism())
    }

    /// Checks `φ[x,y] = [φx,φy]'` on basis pairs, then `φ{x,y,z} = {φx,φy,φz}'`
    /// on basis triples.
    pub fn check_morphism(&self) -> Verdict {
        let d = self.source.dim();
        let images: Vec<Vec<Rational>> = (0..d).map(|i| self.matrix.column(i)).collect();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.apply(self.source.bin(i, j));
                let rhs = self.target.bracket(&images[i], &images[j]);
                if lhs != rhs {
                    return Verdict::fail("bracket preserved", vec![i, j]);
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = self.apply(self.source.tern(i, j, k));
                    let rhs = self.target.triple(&images[i], &images[j], &images[k]);
                    if lhs != rhs {
                        return Verdict::fail("triple preserved", vec![i, j, k]);
                    }
                }
            }
        }
        Verdict::Pass
    }
}

/// Checks that `(α, β)` is a homomorphism from `φ: L1 → L2` to `φ': L1' → L2'`:
/// both are morphisms and `φ' ∘ α = β ∘ φ`.
pub fn check_homomorphism_pair(
    alpha: &MorphismLYA,
    beta: &MorphismLYA,
    phi: &MorphismLYA,
    phi_prime: &MorphismLYA,
) -> Result<Verdict> {
    if alpha.source() != phi.source()
        || alpha.target() != phi_prime.source()
        || beta.source() != phi.target()
        || beta.target() != phi_prime.target()
    {
        return Err(Error::Dimension(
            "homomorphism pair does not connect the two morphisms".into(),
        ));
    }
    let prefix = |v: Verdict, name: &str| match v {
        Verdict::Pass => Verdict::Pass,
        Verdict::Fail(w) => Verdict::Fail(Witness::new(format!("{name}: {}", w.check), w.tuple)),
    };
    let verdict = prefix(alpha.check_morphism(), "alpha")
        .and_then(|| prefix(beta.check_morphism(), "beta"))
        .and_then(|| {
            let lhs = phi_prime.matrix() * alpha.matrix();
            let rhs = beta.matrix() * phi.matrix();
            match (0..lhs.cols()).find(|&c| lhs.column(c) != rhs.column(c)) {
                Some(c) => Verdict::fail("phi' . alpha = beta . phi", vec![c]),
                None => Verdict::Pass,
            }
        });
    Ok(verdict)
}

/// Fills a bracket tensor from sparse entries `(i, j, k, c)` meaning
/// `[e_i, e_j] += c e_k` and `[e_j, e_i] -= c e_k` (0-based).
pub fn antisymmetric_bracket(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Vec<Rational> {
    let mut t = zero_vec(dim.pow(3));
    for (i, j, k, c) in entries {
        t[(i * dim + j) * dim + k] += c;
        t[(j * dim + i) * dim + k] -= c;
    }
    t
}
