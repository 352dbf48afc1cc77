//! Abelian extensions of a morphism `φ: L1 → L2` by a morphism
//! representation `(V, W, ψ)`.
//!
//! An extension is a pair of short exact sequences
//! `0 → V →i L̂1 →p L1 → 0` and `0 → W →ī L̂2 →p̄ L2 → 0` with abelian fibers,
//! linked by `φ̂: L̂1 → L̂2` so that `p̄ φ̂ = φ p` and `φ̂ i = ī ψ`. Maps are
//! stored as explicit matrices, so extensions in arbitrary bases can be
//! checked. Extensions built from cocycles use the block form
//! `L̂1 = L1 ⊕ V`, `L̂2 = L2 ⊕ W`.

use num_traits::Zero;

use crate::algebra::{check_homomorphism_pair, unit, LieYamagutiAlgebra, MorphismLYA};
use crate::cochain::{Cochain, CochainPair, CochainSpace, DiagonalCochain, MorphismCochain23, MorphismShape};
use crate::cohomology::{coboundary_preimage, morphism_d1, morphism_differential};
use crate::error::{Error, Result};
use crate::linalg::{rref, solve, vec_sub, zero_vec, Matrix, Rational};
use crate::report::{Verdict, Witness};
use crate::representation::{MorphismRepresentation, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianExtension {
    pub phi: MorphismLYA,
    pub phi_hat: MorphismLYA,
    pub psi: Matrix,
    pub i: Matrix,
    pub p: Matrix,
    pub i_bar: Matrix,
    pub p_bar: Matrix,
}

/// Right inverses `s` of `p` and `s̄` of `p̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub s: Matrix,
    pub s_bar: Matrix,
}

/// An isomorphism `(α, β)` between two extensions built from cohomologous
/// cocycles: `α(x, v) = (x, v + ξx)`, `β(a, w) = (a, w + ξ'a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionIso {
    pub alpha: MorphismLYA,
    pub beta: MorphismLYA,
    pub xi: Matrix,
    pub xi_bar: Matrix,
}

fn prefixed(v: Verdict, name: &str) -> Verdict {
    match v {
        Verdict::Pass => Verdict::Pass,
        Verdict::Fail(w) => Verdict::Fail(Witness::new(format!("{name} {}", w.check), w.tuple)),
    }
}

fn first_column_mismatch(a: &Matrix, b: &Matrix) -> Option<usize> {
    (0..a.cols()).find(|&c| a.column(c) != b.column(c))
}

/// Exactness of one row `V →i L̂ →p L`.
fn check_row(i: &Matrix, p: &Matrix, tag: &str) -> Verdict {
    if i.rank() != i.cols() {
        return Verdict::fail(format!("{tag}: i injective"), vec![]);
    }
    if p.rank() != p.rows() {
        return Verdict::fail(format!("{tag}: p surjective"), vec![]);
    }
    let pi = p * i;
    if let Some(c) = (0..pi.cols()).find(|&c| pi.column(c).iter().any(|x| !x.is_zero())) {
        return Verdict::fail(format!("{tag}: p i = 0"), vec![c]);
    }
    if i.cols() + p.rows() != p.cols() {
        return Verdict::fail(format!("{tag}: im i = ker p"), vec![]);
    }
    Verdict::Pass
}

/// Brackets of two fiber elements vanish, and triple products with at
/// least two fiber arguments vanish.
fn check_abelian_fiber(l: &LieYamagutiAlgebra, i: &Matrix, tag: &str) -> Verdict {
    let n = l.dim();
    let fib: Vec<Vec<Rational>> = (0..i.cols()).map(|c| i.column(c)).collect();
    for (a, u) in fib.iter().enumerate() {
        for (b, v) in fib.iter().enumerate() {
            if l.bracket(u, v).iter().any(|x| !x.is_zero()) {
                return Verdict::fail(format!("{tag}: abelian fiber bracket"), vec![a, b]);
            }
            for x in 0..n {
                let e = unit(n, x);
                let vals = [l.triple(u, v, &e), l.triple(u, &e, v), l.triple(&e, u, v)];
                if vals.iter().any(|t| t.iter().any(|x| !x.is_zero())) {
                    return Verdict::fail(format!("{tag}: abelian fiber triple"), vec![a, b, x]);
                }
            }
        }
    }
    Verdict::Pass
}

/// Whether a linear map between two algebras preserves both brackets.
fn check_linear_morphism(src: &LieYamagutiAlgebra, tgt: &LieYamagutiAlgebra, m: &Matrix, tag: &str) -> Verdict {
    match MorphismLYA::new(src.clone(), tgt.clone(), m.clone()) {
        Ok(f) => prefixed(f.check_morphism(), tag),
        Err(_) => Verdict::fail(format!("{tag} shape"), vec![]),
    }
}

impl AbelianExtension {
    fn check_shapes(&self) -> Result<()> {
        let (h1, h2) = (self.phi_hat.source().dim(), self.phi_hat.target().dim());
        let (d1, d2) = (self.phi.source().dim(), self.phi.target().dim());
        let (mv, mw) = (self.psi.cols(), self.psi.rows());
        let ok = self.i.shape() == (h1, mv)
            && self.p.shape() == (d1, h1)
            && self.i_bar.shape() == (h2, mw)
            && self.p_bar.shape() == (d2, h2);
        if ok {
            Ok(())
        } else {
            Err(Error::Dimension("extension maps do not fit the algebras".into()))
        }
    }

    pub fn module_dims(&self) -> (usize, usize) {
        (self.psi.cols(), self.psi.rows())
    }
}

/// Checks exactness of both rows, the commuting squares, abelian fibers,
/// the axioms of `L̂1` and `L̂2`, and that `φ̂`, `φ`, `p`, `p̄` are morphisms.
pub fn check_extension(e: &AbelianExtension) -> Result<Verdict> {
    e.check_shapes()?;
    let (h1, h2) = (e.phi_hat.source(), e.phi_hat.target());
    let (l1, l2) = (e.phi.source(), e.phi.target());
    Ok(check_row(&e.i, &e.p, "source row")
        .and_then(|| check_row(&e.i_bar, &e.p_bar, "target row"))
        .and_then(|| match first_column_mismatch(&(&e.p_bar * e.phi_hat.matrix()), &(e.phi.matrix() * &e.p)) {
            Some(c) => Verdict::fail("p_bar phi_hat = phi p", vec![c]),
            None => Verdict::Pass,
        })
        .and_then(|| match first_column_mismatch(&(e.phi_hat.matrix() * &e.i), &(&e.i_bar * &e.psi)) {
            Some(c) => Verdict::fail("phi_hat i = i_bar psi", vec![c]),
            None => Verdict::Pass,
        })
        .and_then(|| check_abelian_fiber(h1, &e.i, "source row"))
        .and_then(|| check_abelian_fiber(h2, &e.i_bar, "target row"))
        .and_then(|| prefixed(h1.check_axioms(), "extended source"))
        .and_then(|| prefixed(h2.check_axioms(), "extended target"))
        .and_then(|| prefixed(e.phi_hat.check_morphism(), "phi_hat"))
        .and_then(|| prefixed(e.phi.check_morphism(), "phi"))
        .and_then(|| check_linear_morphism(h1, l1, &e.p, "p"))
        .and_then(|| check_linear_morphism(h2, l2, &e.p_bar, "p_bar")))
}

/// `p s = id` and `p̄ s̄ = id`.
pub fn check_section(e: &AbelianExtension, sec: &Section) -> Verdict {
    let (d1, d2) = (e.p.rows(), e.p_bar.rows());
    if sec.s.shape() != (e.p.cols(), d1) || sec.s_bar.shape() != (e.p_bar.cols(), d2) {
        return Verdict::fail("section shape", vec![]);
    }
    if let Some(c) = first_column_mismatch(&(&e.p * &sec.s), &Matrix::identity(d1)) {
        return Verdict::fail("p s = id", vec![c]);
    }
    if let Some(c) = first_column_mismatch(&(&e.p_bar * &sec.s_bar), &Matrix::identity(d2)) {
        return Verdict::fail("p_bar s_bar = id", vec![c]);
    }
    Verdict::Pass
}

/// A right inverse of a surjective `p` supported on the pivot columns of
/// its reduced row echelon form.
fn pivot_right_inverse(p: &Matrix) -> Result<Matrix> {
    let (d, n) = p.shape();
    let red = rref(&p.hstack(&Matrix::identity(d)));
    if red.rank != d || red.pivots.iter().any(|&c| c >= n) {
        return Err(Error::Invalid("projection is not surjective".into()));
    }
    let mut s = Matrix::zeros(n, d);
    for (r, &c) in red.pivots.iter().enumerate() {
        for k in 0..d {
            s.set(c, k, red.matrix.get(r, n + k).clone());
        }
    }
    Ok(s)
}

pub fn canonical_section(e: &AbelianExtension) -> Result<Section> {
    e.check_shapes()?;
    Ok(Section {
        s: pivot_right_inverse(&e.p)?,
        s_bar: pivot_right_inverse(&e.p_bar)?,
    })
}

/// `i^{-1}(y)`, failing when `y` is outside the image of `i`.
fn fiber_coords(i: &Matrix, y: &[Rational], what: &str) -> Result<Vec<Rational>> {
    solve(i, y)?.ok_or_else(|| Error::Invalid(format!("malformed extension: {what} leaves the fiber")))
}

fn require_section(e: &AbelianExtension, sec: &Section) -> Result<()> {
    match check_section(e, sec) {
        Verdict::Pass => Ok(()),
        Verdict::Fail(w) => Err(Error::rejected("not a section", w)),
    }
}

fn induced_on_row(hat: &LieYamagutiAlgebra, base: &LieYamagutiAlgebra, i: &Matrix, s: &Matrix) -> Result<Representation> {
    let (d, m) = (base.dim(), i.cols());
    let sx: Vec<Vec<Rational>> = (0..d).map(|a| s.column(a)).collect();
    let iv: Vec<Vec<Rational>> = (0..m).map(|v| i.column(v)).collect();
    let build = |f: &dyn Fn(&[Rational]) -> Vec<Rational>, what: &str| -> Result<Matrix> {
        let cols = iv.iter().map(|v| fiber_coords(i, &f(v), what)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(m, &cols))
    };
    let mut rho = Vec::with_capacity(d);
    for x in &sx {
        rho.push(build(&|v| hat.bracket(x, v), "[s(x), i(v)]")?);
    }
    let mut dm = Vec::with_capacity(d * d);
    let mut th = Vec::with_capacity(d * d);
    for x in &sx {
        for y in &sx {
            dm.push(build(&|v| hat.triple(x, y, v), "{s(x), s(y), i(v)}")?);
            th.push(build(&|v| hat.triple(v, x, y), "{i(v), s(x), s(y)}")?);
        }
    }
    Representation::new(base.clone(), m, rho, dm, th)
}

/// `ρ_V(x)v = i^{-1}[s x, i v]`, `D_V(x,y)v = i^{-1}{s x, s y, i v}`,
/// `θ_V(x,y)v = i^{-1}{i v, s x, s y}`, and the same on the target row.
pub fn induced_representation(e: &AbelianExtension, sec: &Section) -> Result<MorphismRepresentation> {
    e.check_shapes()?;
    require_section(e, sec)?;
    let v = induced_on_row(e.phi_hat.source(), e.phi.source(), &e.i, &sec.s)?;
    let w = induced_on_row(e.phi_hat.target(), e.phi.target(), &e.i_bar, &sec.s_bar)?;
    let mr = MorphismRepresentation::new(e.phi.clone(), v, w, e.psi.clone())?;
    if let Verdict::Fail(w) = mr.check() {
        return Err(Error::Consistency(format!(
            "representation induced by an extension fails its identities: {w}"
        )));
    }
    Ok(mr)
}

fn row_cocycle(hat: &LieYamagutiAlgebra, base: &LieYamagutiAlgebra, i: &Matrix, s: &Matrix) -> Result<CochainPair> {
    let (d, m) = (base.dim(), i.cols());
    let sx: Vec<Vec<Rational>> = (0..d).map(|a| s.column(a)).collect();
    let mut err = None;
    let f = Cochain::from_fn(CochainSpace::even(1, d, m), |a| {
        let y = vec_sub(&hat.bracket(&sx[a[0]], &sx[a[1]]), &s.mul_vec(base.bin(a[0], a[1])));
        fiber_coords(i, &y, "[s x, s y] - s[x, y]").unwrap_or_else(|e| {
            err.get_or_insert(e);
            zero_vec(m)
        })
    });
    let g = Cochain::from_fn(CochainSpace::odd(1, d, m), |a| {
        let y = vec_sub(&hat.triple(&sx[a[0]], &sx[a[1]], &sx[a[2]]), &s.mul_vec(base.tern(a[0], a[1], a[2])));
        fiber_coords(i, &y, "{s x, s y, s z} - s{x, y, z}").unwrap_or_else(|e| {
            err.get_or_insert(e);
            zero_vec(m)
        })
    });
    match err {
        Some(e) => Err(e),
        None => CochainPair::new(f, g),
    }
}

/// The cocycle of an extension with respect to a section:
/// `α_I(x,y) = i^{-1}([s x, s y] - s[x,y])`, `α_II` likewise, `β_I`, `β_II`
/// on the target row, and `γ(x) = ī^{-1}(φ̂ s x - s̄ φ x)`. It is verified to
/// be a cocycle for the induced representation.
pub fn cocycle_from_extension(e: &AbelianExtension, sec: &Section) -> Result<MorphismCochain23> {
    let mr = induced_representation(e, sec)?;
    let alpha = row_cocycle(e.phi_hat.source(), e.phi.source(), &e.i, &sec.s)?;
    let beta = row_cocycle(e.phi_hat.target(), e.phi.target(), &e.i_bar, &sec.s_bar)?;
    let diff = &(e.phi_hat.matrix() * &sec.s) - &(&sec.s_bar * e.phi.matrix());
    let cols = (0..diff.cols())
        .map(|c| fiber_coords(&e.i_bar, &diff.column(c), "phi_hat s - s_bar phi"))
        .collect::<Result<Vec<_>>>()?;
    let gamma = DiagonalCochain::new(Matrix::from_columns(e.i_bar.cols(), &cols));
    let c = MorphismCochain23 { alpha, beta, gamma };
    if !morphism_differential(&mr, 1).mul_vec(&c.to_vec()).iter().all(Zero::is_zero) {
        return Err(Error::Consistency("the cocycle of an extension is not closed".into()));
    }
    Ok(c)
}

/// `L ⊕ M` with `[(x,u),(y,v)] = ([x,y], ρ(x)v - ρ(y)u + c_I(x,y))` and
/// `{(x,u),(y,v),(z,w)} = ({x,y,z}, θ(y,z)u - θ(x,z)v + D(x,y)w + c_II(x,y,z))`.
fn twisted_sum(rep: &Representation, c: &CochainPair) -> LieYamagutiAlgebra {
    let l = rep.algebra();
    let (d, m) = (l.dim(), rep.module_dim());
    let n = d + m;
    let mut bin = zero_vec(n.pow(3));
    let mut tern = zero_vec(n.pow(4));
    let bidx = |a: usize, b: usize, k: usize| (a * n + b) * n + k;
    let tidx = |a: usize, b: usize, cc: usize, k: usize| ((a * n + b) * n + cc) * n + k;
    for a in 0..d {
        for b in 0..d {
            for (k, x) in l.bin(a, b).iter().enumerate() {
                bin[bidx(a, b, k)] = x.clone();
            }
            for (k, x) in c.f.evaluate(&[a, b]).expect("arity").into_iter().enumerate() {
                bin[bidx(a, b, d + k)] = x;
            }
            for cc in 0..d {
                for (k, x) in l.tern(a, b, cc).iter().enumerate() {
                    tern[tidx(a, b, cc, k)] = x.clone();
                }
                for (k, x) in c.g.evaluate(&[a, b, cc]).expect("arity").into_iter().enumerate() {
                    tern[tidx(a, b, cc, d + k)] = x;
                }
            }
        }
        for s in 0..m {
            for k in 0..m {
                let r = rep.rho(a).get(k, s);
                bin[bidx(a, d + s, d + k)] = r.clone();
                bin[bidx(d + s, a, d + k)] = -r;
            }
        }
    }
    for a in 0..d {
        for b in 0..d {
            for s in 0..m {
                for k in 0..m {
                    tern[tidx(d + s, a, b, d + k)] = rep.theta(a, b).get(k, s).clone();
                    tern[tidx(a, d + s, b, d + k)] = -rep.theta(a, b).get(k, s);
                    tern[tidx(a, b, d + s, d + k)] = rep.d(a, b).get(k, s).clone();
                }
            }
        }
    }
    LieYamagutiAlgebra::new(n, bin, tern).expect("sized above")
}

fn block(top_left: &Matrix, bottom_left: &Matrix, bottom_right: &Matrix) -> Matrix {
    let (r0, c0) = top_left.shape();
    let mut out = Matrix::zeros(r0 + bottom_right.rows(), c0 + bottom_right.cols());
    out.put_block(0, 0, top_left);
    out.put_block(r0, 0, bottom_left);
    out.put_block(r0, c0, bottom_right);
    out
}

fn require_cocycle(mr: &MorphismRepresentation, c: &MorphismCochain23) -> Result<()> {
    c.check_shape(MorphismShape::of(mr))?;
    let image = morphism_differential(mr, 1).mul_vec(&c.to_vec());
    if let Some(pos) = image.iter().position(|x| !x.is_zero()) {
        return Err(Error::rejected("not a cocycle", Witness::new("cocycle coordinate", vec![pos])));
    }
    Ok(())
}

/// `L̂1 = L1 ⊕ V`, `L̂2 = L2 ⊕ W` with brackets twisted by the cocycle, and
/// `φ̂(x, v) = (φx, ψv + γx)`.
pub fn extension_from_cocycle(mr: &MorphismRepresentation, c: &MorphismCochain23) -> Result<AbelianExtension> {
    require_cocycle(mr, c)?;
    let s = MorphismShape::of(mr);
    let h1 = twisted_sum(mr.rep_v(), &c.alpha);
    let h2 = twisted_sum(mr.rep_w(), &c.beta);
    let phi_hat = MorphismLYA::new(h1, h2, block(mr.phi().matrix(), &c.gamma.map, mr.psi()))?;
    let inclusion = |d: usize, m: usize| block(&Matrix::zeros(d, m), &Matrix::identity(m), &Matrix::zeros(m, 0));
    let projection = |d: usize, m: usize| Matrix::identity(d).hstack(&Matrix::zeros(d, m));
    let e = AbelianExtension {
        phi: mr.phi().clone(),
        phi_hat,
        psi: mr.psi().clone(),
        i: inclusion(s.d1, s.mv),
        p: projection(s.d1, s.mv),
        i_bar: inclusion(s.d2, s.mw),
        p_bar: projection(s.d2, s.mw),
    };
    if let Verdict::Fail(w) = check_extension(&e)? {
        return Err(Error::rejected("cocycle does not define an extension", w));
    }
    Ok(e)
}

/// Coordinates of the two cyclic identities a pair `(f, g)` must satisfy for
/// the twisted sum `L ⊕ M` to obey axioms (3) and (4):
///
/// ```text
/// Σ_cyc f([x,y],z) - ρ(z) f(x,y) + g(x,y,z) = 0
/// Σ_cyc θ(z,u) f(x,y) + g([x,y],z,u) = 0        (cyclic in x, y, z)
/// ```
///
/// Neither follows from `δ(f, g) = 0`, so a cocycle need not define an
/// extension.
pub fn twisting_defect(rep: &Representation, c: &CochainPair) -> Vec<Rational> {
    let l = rep.algebra();
    let (d, m) = (l.dim(), rep.module_dim());
    let f = |a: usize, b: usize| c.f.evaluate(&[a, b]).expect("arity");
    let g = |a: usize, b: usize, cc: usize| c.g.evaluate(&[a, b, cc]).expect("arity");
    let f_vec = |x: &[Rational], b: usize| {
        let mut acc = zero_vec(m);
        for (a, xa) in x.iter().enumerate() {
            if !xa.is_zero() {
                crate::linalg::axpy(&mut acc, xa, &f(a, b));
            }
        }
        acc
    };
    let g_vec = |x: &[Rational], b: usize, cc: usize| {
        let mut acc = zero_vec(m);
        for (a, xa) in x.iter().enumerate() {
            if !xa.is_zero() {
                crate::linalg::axpy(&mut acc, xa, &g(a, b, cc));
            }
        }
        acc
    };
    let mut out = Vec::new();
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                let mut acc = zero_vec(m);
                for (a, b, cc) in [(x, y, z), (y, z, x), (z, x, y)] {
                    crate::linalg::axpy(&mut acc, &Rational::from_integer(1.into()), &f_vec(l.bin(a, b), cc));
                    acc = vec_sub(&acc, &rep.rho(cc).mul_vec(&f(a, b)));
                    crate::linalg::axpy(&mut acc, &Rational::from_integer(1.into()), &g(a, b, cc));
                }
                out.extend(acc);
            }
        }
    }
    for x in 0..d {
        for y in 0..d {
            for z in 0..d {
                for u in 0..d {
                    let mut acc = zero_vec(m);
                    for (a, b, cc) in [(x, y, z), (y, z, x), (z, x, y)] {
                        crate::linalg::axpy(&mut acc, &Rational::from_integer(1.into()), &rep.theta(cc, u).mul_vec(&f(a, b)));
                        crate::linalg::axpy(&mut acc, &Rational::from_integer(1.into()), &g_vec(l.bin(a, b), cc, u));
                    }
                    out.extend(acc);
                }
            }
        }
    }
    out
}

/// The cocycles of degree (2,3) whose two rows also satisfy the twisting
/// identities of [`twisting_defect`]; these are exactly the cocycles that
/// [`extension_from_cocycle`] accepts.
pub fn extension_cocycles(mr: &MorphismRepresentation) -> Result<crate::linalg::Subspace> {
    let s = MorphismShape::of(mr);
    let d1 = morphism_differential(mr, 1);
    let n = s.degree_dim(1);
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let mut v = zero_vec(n);
        v[k] = Rational::from_integer(1.into());
        let c = MorphismCochain23::from_vec(s, &v)?;
        let mut col = d1.column(k);
        col.extend(twisting_defect(mr.rep_v(), &c.alpha));
        col.extend(twisting_defect(mr.rep_w(), &c.beta));
        cols.push(col);
    }
    let rows = cols.first().map_or(0, Vec::len);
    Ok(crate::linalg::kernel_basis(&Matrix::from_columns(rows, &cols)))
}

/// Checks that `(α, β)` is a homomorphism from `e1.φ̂` to `e2.φ̂` that is
/// the identity on fibers and bases: `α i1 = i2`, `p2 α = p1`, and the
/// barred analogues.
pub fn check_extension_iso(e1: &AbelianExtension, e2: &AbelianExtension, alpha: &MorphismLYA, beta: &MorphismLYA) -> Result<Verdict> {
    let pair = check_homomorphism_pair(alpha, beta, &e1.phi_hat, &e2.phi_hat)?;
    let eq = |a: Matrix, b: &Matrix, name: &str| match first_column_mismatch(&a, b) {
        Some(c) => Verdict::fail(name, vec![c]),
        None => Verdict::Pass,
    };
    Ok(pair
        .and_then(|| eq(alpha.matrix() * &e1.i, &e2.i, "alpha i = i'"))
        .and_then(|| eq(&e2.p * alpha.matrix(), &e1.p, "p' alpha = p"))
        .and_then(|| eq(beta.matrix() * &e1.i_bar, &e2.i_bar, "beta i_bar = i_bar'"))
        .and_then(|| eq(&e2.p_bar * beta.matrix(), &e1.p_bar, "p_bar' beta = p_bar")))
}

/// The isomorphism between the extensions of `c1` and `c2` when
/// `c1 - c2 = d(ξ, ξ')`. If `xi` is `None` a suitable `(ξ, ξ')` is solved
/// for; otherwise the given pair is verified.
pub fn isomorphism_from_cohomologous(
    mr: &MorphismRepresentation,
    c1: &MorphismCochain23,
    c2: &MorphismCochain23,
    xi: Option<(Matrix, Matrix)>,
) -> Result<ExtensionIso> {
    let e1 = extension_from_cocycle(mr, c1)?;
    let e2 = extension_from_cocycle(mr, c2)?;
    let s = MorphismShape::of(mr);
    let diff = MorphismCochain23::from_vec(s, &vec_sub(&c1.to_vec(), &c2.to_vec()))?;
    let (xi, xi_bar) = match xi {
        Some((a, b)) => {
            if morphism_d1(mr, &a, &b)? != diff {
                return Err(Error::rejected(
                    "c1 - c2 is not d(xi, xi')",
                    Witness::new("cohomologous", vec![]),
                ));
            }
            (a, b)
        }
        None => coboundary_preimage(mr, &diff)?.ok_or_else(|| {
            Error::rejected("cocycles are not cohomologous", Witness::new("cohomologous", vec![]))
        })?,
    };
    let shear = |d: usize, m: usize, x: &Matrix| block(&Matrix::identity(d), x, &Matrix::identity(m));
    let alpha = MorphismLYA::new(
        e1.phi_hat.source().clone(),
        e2.phi_hat.source().clone(),
        shear(s.d1, s.mv, &xi),
    )?;
    let beta = MorphismLYA::new(
        e1.phi_hat.target().clone(),
        e2.phi_hat.target().clone(),
        shear(s.d2, s.mw, &xi_bar),
    )?;
    if let Verdict::Fail(w) = check_extension_iso(&e1, &e2, &alpha, &beta)? {
        return Err(Error::Consistency(format!("sheared maps are not an isomorphism of extensions: {w}")));
    }
    Ok(ExtensionIso {
        alpha,
        beta,
        xi,
        xi_bar,
    })
}
