//! Representations `(ρ, D, θ)` of a Lie-Yamaguti algebra on `k^m`, and
//! representations of morphisms.

use num_traits::Zero;

use crate::algebra::{check_homomorphism_pair, unit, LieYamagutiAlgebra, MorphismLYA};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::report::{Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: LieYamagutiAlgebra,
    module_dim: usize,
    rho: Vec<Matrix>,
    dmap: Vec<Matrix>,
    theta: Vec<Matrix>,
}

fn combine(mats: &[&Matrix], coeffs: &[Rational], m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (a, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            out = &out + &a.scale(c);
        }
    }
    out
}

impl Representation {
    /// `rho` has one `m x m` matrix per basis vector; `d` and `theta` have
    /// one per ordered basis pair, indexed `i * dim + j`.
    pub fn new(
        algebra: LieYamagutiAlgebra,
        module_dim: usize,
        rho: Vec<Matrix>,
        d: Vec<Matrix>,
        theta: Vec<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        if rho.len() != n || d.len() != n * n || theta.len() != n * n {
            return Err(Error::Dimension(format!(
                "representation maps: got {}/{}/{} matrices for an algebra of dimension {n}",
                rho.len(),
                d.len(),
                theta.len()
            )));
        }
        if let Some(bad) = rho
            .iter()
            .chain(&d)
            .chain(&theta)
            .find(|a| a.shape() != (module_dim, module_dim))
        {
            return Err(Error::Dimension(format!(
                "representation matrix is {}x{}, expected {module_dim}x{module_dim}",
                bad.rows(),
                bad.cols()
            )));
        }
        Ok(Representation {
            algebra,
            module_dim,
            rho,
            dmap: d,
            theta,
        })
    }

    /// All three maps zero. With `m = 1` this is the trivial representation.
    pub fn zero(algebra: &LieYamagutiAlgebra, module_dim: usize) -> Self {
        let n = algebra.dim();
        let z = Matrix::zeros(module_dim, module_dim);
        Representation {
            algebra: algebra.clone(),
            module_dim,
            rho: vec![z.clone(); n],
            dmap: vec![z.clone(); n * n],
            theta: vec![z; n * n],
        }
    }

    pub fn trivial(algebra: &LieYamagutiAlgebra) -> Self {
        Representation::zero(algebra, 1)
    }

    /// `ρ(x)y = [x, y]`, `D(x, y)z = {x, y, z}`, `θ(x, y)z = {z, x, y}`.
    pub fn adjoint(algebra: &LieYamagutiAlgebra) -> Self {
        let n = algebra.dim();
        let rho = (0..n)
            .map(|i| Matrix::from_columns(n, &(0..n).map(|j| algebra.bin(i, j).to_vec()).collect::<Vec<_>>()))
            .collect();
        let mut dmap = Vec::with_capacity(n * n);
        let mut theta = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let dcols: Vec<_> = (0..n).map(|k| algebra.tern(i, j, k).to_vec()).collect();
                let tcols: Vec<_> = (0..n).map(|k| algebra.tern(k, i, j).to_vec()).collect();
                dmap.push(Matrix::from_columns(n, &dcols));
                theta.push(Matrix::from_columns(n, &tcols));
            }
        }
        Representation {
            algebra: algebra.clone(),
            module_dim: n,
            rho,
            dmap,
            theta,
        }
    }

    /// The representation `W_φ` of `φ.source` on the module of `rep`:
    /// `ρ(x) = ρ_W(φx)`, `D(x, y) = D_W(φx, φy)`, `θ(x, y) = θ_W(φx, φy)`.
    pub fn pullback(phi: &MorphismLYA, rep: &Representation) -> Result<Self> {
        if phi.target() != rep.algebra() {
            return Err(Error::Invalid(
                "pullback: representation is not over the morphism target".into(),
            ));
        }
        let n = phi.source().dim();
        let images: Vec<Vec<Rational>> = (0..n).map(|i| phi.matrix().column(i)).collect();
        let rho = images.iter().map(|x| rep.rho_of(x)).collect();
        let mut dmap = Vec::with_capacity(n * n);
        let mut theta = Vec::with_capacity(n * n);
        for x in &images {
            for y in &images {
                dmap.push(rep.d_of(x, y));
                theta.push(rep.theta_of(x, y));
            }
        }
        Ok(Representation {
            algebra: phi.source().clone(),
            module_dim: rep.module_dim,
            rho,
            dmap,
            theta,
        })
    }

    pub fn algebra(&self) -> &LieYamagutiAlgebra {
        &self.algebra
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn d(&self, i: usize, j: usize) -> &Matrix {
        &self.dmap[i * self.algebra.dim() + j]
    }

    pub fn theta(&self, i: usize, j: usize) -> &Matrix {
        &self.theta[i * self.algebra.dim() + j]
    }

    pub fn rho_of(&self, x: &[Rational]) -> Matrix {
        let mats: Vec<&Matrix> = self.rho.iter().collect();
        combine(&mats, x, self.module_dim)
    }

    fn pair_of(&self, table: &[Matrix], x: &[Rational], y: &[Rational]) -> Matrix {
        let n = self.algebra.dim();
        let mut mats = Vec::new();
        let mut coeffs = Vec::new();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                mats.push(&table[i * n + j]);
                coeffs.push(&x[i] * &y[j]);
            }
        }
        combine(&mats, &coeffs, self.module_dim)
    }

    pub fn d_of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        self.pair_of(&self.dmap, x, y)
    }

    pub fn theta_of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        self.pair_of(&self.theta, x, y)
    }

    /// Checks the seven representation identities on basis tuples, in order:
    ///
    /// 1. `D(x,y) + θ(x,y) - θ(y,x) + ρ([x,y]) - [ρ(x), ρ(y)] = 0`
    /// 2. `D([x,y],z) + D([y,z],x) + D([z,x],y) = 0`
    /// 3. `θ([x,y],z) = θ(x,z)ρ(y) - θ(y,z)ρ(x)`
    /// 4. `D(x,y)ρ(z) = ρ(z)D(x,y) + ρ({x,y,z})`
    /// 5. `θ(x,[y,z]) = ρ(y)θ(x,z) - ρ(z)θ(x,y)`
    /// 6. `D(x,y)θ(u,v) = θ(u,v)D(x,y) + θ({x,y,u},v) + θ(u,{x,y,v})`
    /// 7. `θ(x,{y,z,u}) = θ(z,u)θ(x,y) - θ(y,u)θ(x,z) + D(y,z)θ(x,u)`
    pub fn check_representation(&self) -> Verdict {
        let l = &self.algebra;
        let n = l.dim();
        let e = |i: usize| unit(n, i);
        let rho = |i: usize| &self.rho[i];
        let dm = |i: usize, j: usize| &self.dmap[i * n + j];
        let th = |i: usize, j: usize| &self.theta[i * n + j];
        let fail = |k: usize, t: Vec<usize>| Verdict::fail(format!("axiom ({k})"), t);

        for x in 0..n {
            for y in 0..n {
                let lhs = &(&(&(dm(x, y) + th(x, y)) - th(y, x)) + &self.rho_of(l.bin(x, y)))
                    - &(&(rho(x) * rho(y)) - &(rho(y) * rho(x)));
                if !lhs.is_zero() {
                    return fail(1, vec![x, y]);
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let s = &(&self.d_of(l.bin(x, y), &e(z)) + &self.d_of(l.bin(y, z), &e(x)))
                        + &self.d_of(l.bin(z, x), &e(y));
                    if !s.is_zero() {
                        return fail(2, vec![x, y, z]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.theta_of(l.bin(x, y), &e(z));
                    let rhs = &(th(x, z) * rho(y)) - &(th(y, z) * rho(x));
                    if lhs != rhs {
                        return fail(3, vec![x, y, z]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = dm(x, y) * rho(z);
                    let rhs = &(rho(z) * dm(x, y)) + &self.rho_of(l.tern(x, y, z));
                    if lhs != rhs {
                        return fail(4, vec![x, y, z]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.theta_of(&e(x), l.bin(y, z));
                    let rhs = &(rho(y) * th(x, z)) - &(rho(z) * th(x, y));
                    if lhs != rhs {
                        return fail(5, vec![x, y, z]);
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for u in 0..n {
                    for v in 0..n {
                        let lhs = dm(x, y) * th(u, v);
                        let rhs = &(&(th(u, v) * dm(x, y)) + &self.theta_of(l.tern(x, y, u), &e(v)))
                            + &self.theta_of(&e(u), l.tern(x, y, v));
                        if lhs != rhs {
                            return fail(6, vec![x, y, u, v]);
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for u in 0..n {
                        let lhs = self.theta_of(&e(x), l.tern(y, z, u));
                        let rhs = &(&(th(z, u) * th(x, y)) - &(th(y, u) * th(x, z)))
                            + &(dm(y, z) * th(x, u));
                        if lhs != rhs {
                            return fail(7, vec![x, y, z, u]);
                        }
                    }
                }
            }
        }
        Verdict::Pass
    }
}

/// A representation of `φ: L1 → L2`: representations `V` of `L1`, `W` of
/// `L2`, and a linear `ψ: V → W` intertwining `V` with the pullback `W_φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismRepresentation {
    phi: MorphismLYA,
    rep_v: Representation,
    rep_w: Representation,
    psi: Matrix,
    pulled: Representation,
}

impl MorphismRepresentation {
    /// Checks shapes and that the representations sit over the right
    /// algebras. The intertwining identities are checked separately by
    /// [`check`](Self::check).
    pub fn new(phi: MorphismLYA, rep_v: Representation, rep_w: Representation, psi: Matrix) -> Result<Self> {
        if rep_v.algebra() != phi.source() || rep_w.algebra() != phi.target() {
            return Err(Error::Invalid(
                "morphism representation: V must be over the source and W over the target".into(),
            ));
        }
        if psi.shape() != (rep_w.module_dim(), rep_v.module_dim()) {
            return Err(Error::Dimension(format!(
                "psi is {}x{}, expected {}x{}",
                psi.rows(),
                psi.cols(),
                rep_w.module_dim(),
                rep_v.module_dim()
            )));
        }
        let pulled = Representation::pullback(&phi, &rep_w)?;
        Ok(MorphismRepresentation {
            phi,
            rep_v,
            rep_w,
            psi,
            pulled,
        })
    }

    pub fn phi(&self) -> &MorphismLYA {
        &self.phi
    }

    pub fn rep_v(&self) -> &Representation {
        &self.rep_v
    }

    pub fn rep_w(&self) -> &Representation {
        &self.rep_w
    }

    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    /// `W_φ`, the pullback of `W` along `φ`.
    pub fn pulled_back(&self) -> &Representation {
        &self.pulled
    }

    /// Checks `V`, `W`, that `φ` is a morphism, and then
    /// `ψρ_V(x) = ρ_W(φx)ψ`, `ψD_V(x,y) = D_W(φx,φy)ψ`, `ψθ_V(x,y) = θ_W(φx,φy)ψ`.
    pub fn check(&self) -> Verdict {
        let tag = |v: Verdict, name: &str| match v {
            Verdict::Pass => Verdict::Pass,
            Verdict::Fail(w) => Verdict::Fail(Witness::new(format!("{name} {}", w.check), w.tuple)),
        };
        let n = self.phi.source().dim();
        tag(self.phi.check_morphism(), "phi")
            .and_then(|| tag(self.rep_v.check_representation(), "V"))
            .and_then(|| tag(self.rep_w.check_representation(), "W"))
            .and_then(|| {
                for i in 0..n {
                    if &self.psi * self.rep_v.rho(i) != self.pulled.rho(i) * &self.psi {
                        return Verdict::fail("intertwines rho", vec![i]);
                    }
                }
                for i in 0..n {
                    for j in 0..n {
                        if &self.psi * self.rep_v.d(i, j) != self.pulled.d(i, j) * &self.psi {
                            return Verdict::fail("intertwines D", vec![i, j]);
                        }
                    }
                }
                for i in 0..n {
                    for j in 0..n {
                        if &self.psi * self.rep_v.theta(i, j) != self.pulled.theta(i, j) * &self.psi {
                            return Verdict::fail("intertwines theta", vec![i, j]);
                        }
                    }
                }
                Verdict::Pass
            })
    }
}

/// `φ` represented on itself: adjoint representations with `ψ = φ`.
pub fn self_morphism_representation(phi: &MorphismLYA) -> MorphismRepresentation {
    MorphismRepresentation::new(
        phi.clone(),
        Representation::adjoint(phi.source()),
        Representation::adjoint(phi.target()),
        phi.matrix().clone(),
    )
    .expect("adjoint representations have matching shapes")
}

/// The representation of `φ: L1 → L2` on `φ': L1' → L2'` induced by a
/// homomorphism pair `(α, β)`: `L1` acts on `L1'` through `α`, `L2` acts on
/// `L2'` through `β`, and `ψ = φ'`.
pub fn hom_induced_representation(
    alpha: &MorphismLYA,
    beta: &MorphismLYA,
    phi: &MorphismLYA,
    phi_prime: &MorphismLYA,
) -> Result<MorphismRepresentation> {
    if let Verdict::Fail(w) = check_homomorphism_pair(alpha, beta, phi, phi_prime)? {
        return Err(Error::rejected("not a homomorphism of morphisms", w));
    }
    let v = Representation::pullback(alpha, &Representation::adjoint(phi_prime.source()))?;
    let w = Representation::pullback(beta, &Representation::adjoint(phi_prime.target()))?;
    MorphismRepresentation::new(phi.clone(), v, w, phi_prime.matrix().clone())
}
