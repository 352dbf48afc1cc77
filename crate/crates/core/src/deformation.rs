//! Truncated one-parameter formal deformations of a morphism `φ: L1 → L2`.
//!
//! A deformation of order `N` carries series
//! `f_t = [,] + Σ f_i t^i`, `g_t = {,,} + Σ g_i t^i` on `L1`, the analogous
//! `f'_t`, `g'_t` on `L2`, and `φ_t = φ + Σ φ_i t^i`. All arithmetic is
//! modulo `t^{N+1}`.
//!
//! Equivalences act by transport of structure: for `ψ_t = id + Σ ψ_i t^i`
//! on `L1` and `ψ'_t` on `L2`,
//! `F_t(x, y) = ψ_t f_t(ψ_t^{-1} x, ψ_t^{-1} y)`, likewise for the ternary
//! maps, and `Φ_t = ψ'_t φ_t ψ_t^{-1}`. With these formulas `Φ_t` is again a
//! morphism, and the order-1 terms change by `f_1 - F_1 = δ_I ψ_1`.

use num_traits::Zero;

use crate::algebra::{bilinear, trilinear, unit, MorphismLYA};
use crate::cochain::{Cochain, CochainPair, CochainSpace, DiagonalCochain, MorphismCochain23};
use crate::cohomology::{coboundary_preimage, morphism_cohomology_23, morphism_differential};
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, q, zero_vec, Matrix, Rational};
use crate::report::{Verdict, Witness};
use crate::representation::self_morphism_representation;

/// `f_i, g_i` with values in the algebra itself are cochain pairs over
/// `(L, L)`; index `i - 1` holds the order-`i` term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalDeformation {
    pub phi: MorphismLYA,
    pub l1_terms: Vec<CochainPair>,
    pub l2_terms: Vec<CochainPair>,
    pub phi_terms: Vec<Matrix>,
}

/// `ψ_t = id + Σ ψ_i t^i` on `L1` and `ψ'_t` on `L2`; index `i - 1` holds
/// the order-`i` term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceData {
    pub psi_terms: Vec<Matrix>,
    pub psip_terms: Vec<Matrix>,
}

type Series = Vec<Vec<Rational>>;

/// `[I, a_1, ..., a_N]`.
fn with_identity(n: usize, terms: &[Matrix]) -> Vec<Matrix> {
    let mut s = vec![Matrix::identity(n)];
    s.extend(terms.iter().cloned());
    s
}

fn series_mul(a: &[Matrix], b: &[Matrix]) -> Vec<Matrix> {
    let order = a.len().min(b.len());
    (0..order)
        .map(|n| {
            let mut acc = Matrix::zeros(a[0].rows(), b[0].cols());
            for i in 0..=n {
                acc = &acc + &(&a[i] * &b[n - i]);
            }
            acc
        })
        .collect()
}

/// Inverse of a series with identity constant term.
fn series_inverse(s: &[Matrix]) -> Vec<Matrix> {
    let n = s[0].rows();
    let mut inv = vec![Matrix::identity(n)];
    for k in 1..s.len() {
        let mut acc = Matrix::zeros(n, n);
        for i in 1..=k {
            acc = &acc - &(&s[i] * &inv[k - i]);
        }
        inv.push(acc);
    }
    inv
}

fn apply_series(m: &[Matrix], v: &Series) -> Series {
    (0..v.len())
        .map(|n| {
            let mut acc = zero_vec(m[0].rows());
            for i in 0..=n {
                axpy(&mut acc, &q(1), &m[i].mul_vec(&v[n - i]));
            }
            acc
        })
        .collect()
}

fn constant(v: Vec<Rational>, len: usize) -> Series {
    let d = v.len();
    let mut s = vec![v];
    s.resize(len, zero_vec(d));
    s
}

/// The structure series of one algebra as full tensors per order.
struct Structure {
    d: usize,
    bin: Vec<Vec<Rational>>,
    tern: Vec<Vec<Rational>>,
}

fn full_tensor(c: &Cochain) -> Vec<Rational> {
    let s = c.space();
    let (d, arity) = (s.algebra_dim, s.arity());
    let mut out = Vec::with_capacity(d.pow(arity as u32 + 1));
    let mut args = vec![0; arity];
    for code in 0..d.pow(arity as u32) {
        let mut r = code;
        for a in args.iter_mut().rev() {
            *a = r % d;
            r /= d;
        }
        out.extend(c.evaluate(&args).expect("arity matches"));
    }
    out
}

impl Structure {
    fn new(base: &crate::algebra::LieYamagutiAlgebra, terms: &[CochainPair]) -> Self {
        let mut bin = vec![base.binary_tensor().to_vec()];
        let mut tern = vec![base.ternary_tensor().to_vec()];
        for t in terms {
            bin.push(full_tensor(&t.f));
            tern.push(full_tensor(&t.g));
        }
        Structure {
            d: base.dim(),
            bin,
            tern,
        }
    }

    fn len(&self) -> usize {
        self.bin.len()
    }

    #[allow(clippy::needless_range_loop)]
    fn br(&self, x: &Series, y: &Series) -> Series {
        let len = self.len();
        (0..len)
            .map(|n| {
                let mut acc = zero_vec(self.d);
                for i in 0..=n {
                    for j in 0..=n - i {
                        let k = n - i - j;
                        if is_zero_vec(&x[j]) || is_zero_vec(&y[k]) {
                            continue;
                        }
                        axpy(&mut acc, &q(1), &bilinear(&self.bin[i], self.d, &x[j], &y[k]));
                    }
                }
                acc
            })
            .collect()
    }

    #[allow(clippy::needless_range_loop)]
    fn tr(&self, x: &Series, y: &Series, z: &Series) -> Series {
        let len = self.len();
        (0..len)
            .map(|n| {
                let mut acc = zero_vec(self.d);
                for i in 0..=n {
                    for j in 0..=n - i {
                        for k in 0..=n - i - j {
                            let l = n - i - j - k;
                            if is_zero_vec(&x[j]) || is_zero_vec(&y[k]) || is_zero_vec(&z[l]) {
                                continue;
                            }
                            axpy(&mut acc, &q(1), &trilinear(&self.tern[i], self.d, &x[j], &y[k], &z[l]));
                        }
                    }
                }
                acc
            })
            .collect()
    }

    fn basis(&self, i: usize) -> Series {
        constant(unit(self.d, i), self.len())
    }
}

fn add(a: &Series, b: &Series) -> Series {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect()).collect()
}

fn sub(a: &Series, b: &Series) -> Series {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}

/// First order at which a residual series is nonzero.
fn first_nonzero(s: &Series) -> Option<usize> {
    s.iter().position(|v| !is_zero_vec(v))
}

fn tuples(d: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d.pow(k as u32)).map(move |mut code| {
        let mut t = vec![0; k];
        for a in t.iter_mut().rev() {
            *a = code % d;
            code /= d;
        }
        t
    })
}

/// Residuals of the six axioms for one structure series, in axiom order.
fn axiom_residuals(s: &Structure, eq_base: usize, found: &mut Option<(usize, usize, Vec<usize>)>) {
    let d = s.d;
    let mut note = |eq: usize, t: &[usize], r: &Series| {
        if let Some(n) = first_nonzero(r) {
            let cand = (n, eq_base + eq, t.to_vec());
            if found.as_ref().is_none_or(|f| cand < *f) {
                *found = Some(cand);
            }
        }
    };
    for t in tuples(d, 2) {
        let (x, y) = (s.basis(t[0]), s.basis(t[1]));
        note(0, &t, &add(&s.br(&x, &y), &s.br(&y, &x)));
    }
    for t in tuples(d, 3) {
        let (x, y, z) = (s.basis(t[0]), s.basis(t[1]), s.basis(t[2]));
        note(1, &t, &add(&s.tr(&x, &y, &z), &s.tr(&y, &x, &z)));
        let mut acc = s.tr(&x, &y, &z);
        acc = add(&acc, &s.tr(&y, &z, &x));
        acc = add(&acc, &s.tr(&z, &x, &y));
        acc = add(&acc, &s.br(&s.br(&x, &y), &z));
        acc = add(&acc, &s.br(&s.br(&y, &z), &x));
        acc = add(&acc, &s.br(&s.br(&z, &x), &y));
        note(2, &t, &acc);
    }
    for t in tuples(d, 4) {
        let (x, y, u, v) = (s.basis(t[0]), s.basis(t[1]), s.basis(t[2]), s.basis(t[3]));
        let mut acc = s.tr(&s.br(&x, &y), &u, &v);
        acc = add(&acc, &s.tr(&s.br(&y, &u), &x, &v));
        acc = add(&acc, &s.tr(&s.br(&u, &x), &y, &v));
        note(3, &t, &acc);
        let lhs = s.tr(&x, &y, &s.br(&u, &v));
        let rhs = add(&s.br(&s.tr(&x, &y, &u), &v), &s.br(&u, &s.tr(&x, &y, &v)));
        note(4, &t, &sub(&lhs, &rhs));
    }
    for t in tuples(d, 5) {
        let (x, y, u, v, w) = (s.basis(t[0]), s.basis(t[1]), s.basis(t[2]), s.basis(t[3]), s.basis(t[4]));
        let lhs = s.tr(&x, &y, &s.tr(&u, &v, &w));
        let mut rhs = s.tr(&s.tr(&x, &y, &u), &v, &w);
        rhs = add(&rhs, &s.tr(&u, &s.tr(&x, &y, &v), &w));
        rhs = add(&rhs, &s.tr(&u, &v, &s.tr(&x, &y, &w)));
        note(5, &t, &sub(&lhs, &rhs));
    }
}

const EQUATIONS: [&str; 14] = [
    "L1 axiom (1)",
    "L1 axiom (2)",
    "L1 axiom (3)",
    "L1 axiom (4)",
    "L1 axiom (5)",
    "L1 axiom (6)",
    "L2 axiom (1)",
    "L2 axiom (2)",
    "L2 axiom (3)",
    "L2 axiom (4)",
    "L2 axiom (5)",
    "L2 axiom (6)",
    "morphism bracket",
    "morphism triple",
];

impl FormalDeformation {
    /// The deformation with every term zero.
    pub fn trivial(phi: &MorphismLYA, order: usize) -> Self {
        let (d1, d2) = (phi.source().dim(), phi.target().dim());
        FormalDeformation {
            phi: phi.clone(),
            l1_terms: vec![CochainPair::zero(1, d1, d1); order],
            l2_terms: vec![CochainPair::zero(1, d2, d2); order],
            phi_terms: vec![Matrix::zeros(d2, d1); order],
        }
    }

    pub fn order(&self) -> usize {
        self.l1_terms.len()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let (d1, d2) = (self.phi.source().dim(), self.phi.target().dim());
        let n = self.order();
        let fits = |t: &CochainPair, d: usize| t.pairs() == 1 && t.algebra_dim() == d && t.module_dim() == d;
        if self.l2_terms.len() != n || self.phi_terms.len() != n {
            return Err(Error::Dimension("deformation term lists have different lengths".into()));
        }
        if !self.l1_terms.iter().all(|t| fits(t, d1))
            || !self.l2_terms.iter().all(|t| fits(t, d2))
            || !self.phi_terms.iter().all(|m| m.shape() == (d2, d1))
        {
            return Err(Error::Dimension("deformation term does not fit the morphism".into()));
        }
        Ok(())
    }

    /// The order-`i` component triple `((f_i, g_i), (f'_i, g'_i), φ_i)`, `i ≥ 1`.
    pub fn component(&self, i: usize) -> MorphismCochain23 {
        MorphismCochain23 {
            alpha: self.l1_terms[i - 1].clone(),
            beta: self.l2_terms[i - 1].clone(),
            gamma: DiagonalCochain::new(self.phi_terms[i - 1].clone()),
        }
    }

    /// Whether all terms through order `N` vanish.
    pub fn is_trivial(&self) -> bool {
        (1..=self.order()).all(|i| self.component(i).is_zero())
    }
}

/// Checks every coefficient of `t^n`, `0 ≤ n ≤ N`, of the axioms for both
/// deformed algebras and of `φ_t f_t = f'_t(φ_t, φ_t)` and its ternary
/// analogue, on all basis tuples. Reports the smallest failing
/// (order, equation, tuple).
pub fn verify_deformation(def: &FormalDeformation) -> Result<Verdict> {
    def.check_shapes()?;
    let s1 = Structure::new(def.phi.source(), &def.l1_terms);
    let s2 = Structure::new(def.phi.target(), &def.l2_terms);
    let mut found = None;
    axiom_residuals(&s1, 0, &mut found);
    axiom_residuals(&s2, 6, &mut found);

    let phis = {
        let mut v = vec![def.phi.matrix().clone()];
        v.extend(def.phi_terms.iter().cloned());
        v
    };
    let image = |x: &Series| apply_series(&phis, x);
    let d1 = s1.d;
    for t in tuples(d1, 2) {
        let (x, y) = (s1.basis(t[0]), s1.basis(t[1]));
        let r = sub(&image(&s1.br(&x, &y)), &s2.br(&image(&x), &image(&y)));
        if let Some(n) = first_nonzero(&r) {
            let cand = (n, 12, t.clone());
            if found.as_ref().is_none_or(|f| cand < *f) {
                found = Some(cand);
            }
        }
    }
    for t in tuples(d1, 3) {
        let (x, y, z) = (s1.basis(t[0]), s1.basis(t[1]), s1.basis(t[2]));
        let r = sub(&image(&s1.tr(&x, &y, &z)), &s2.tr(&image(&x), &image(&y), &image(&z)));
        if let Some(n) = first_nonzero(&r) {
            let cand = (n, 13, t.clone());
            if found.as_ref().is_none_or(|f| cand < *f) {
                found = Some(cand);
            }
        }
    }
    Ok(match found {
        None => Verdict::Pass,
        Some((n, eq, tuple)) => Verdict::Fail(Witness::new(EQUATIONS[eq], tuple).at_order(n)),
    })
}

/// The smallest `n` with a nonzero order-`n` component, and that component.
pub fn n_infinitesimal(def: &FormalDeformation) -> Option<(usize, MorphismCochain23)> {
    (1..=def.order()).map(|i| (i, def.component(i))).find(|(_, c)| !c.is_zero())
}

fn require_verified(def: &FormalDeformation) -> Result<()> {
    match verify_deformation(def)? {
        Verdict::Pass => Ok(()),
        Verdict::Fail(w) => Err(Error::rejected("deformation does not satisfy its equations", w)),
    }
}

/// Checks that the infinitesimal of a verified deformation is a cocycle of
/// the morphism complex of `φ` with coefficients in itself. A failure here
/// means the deformation equations and the coboundary conventions disagree,
/// and is reported as a consistency error.
pub fn infinitesimal_cocycle_check(def: &FormalDeformation) -> Result<Verdict> {
    require_verified(def)?;
    let Some((n, z)) = n_infinitesimal(def) else {
        return Ok(Verdict::Pass);
    };
    let mr = self_morphism_representation(&def.phi);
    let image = morphism_differential(&mr, 1).mul_vec(&z.to_vec());
    if !image.iter().all(Zero::is_zero) {
        return Err(Error::Consistency(format!(
            "the order-{n} infinitesimal of a verified deformation is not a cocycle"
        )));
    }
    Ok(Verdict::Pass)
}

impl EquivalenceData {
    pub fn identity(d1: usize, d2: usize, order: usize) -> Self {
        EquivalenceData {
            psi_terms: vec![Matrix::zeros(d1, d1); order],
            psip_terms: vec![Matrix::zeros(d2, d2); order],
        }
    }

    /// `ψ_t = id + λ1 t^n`, `ψ'_t = id + λ2 t^n`, truncated at `order`.
    pub fn monomial(l1: &Matrix, l2: &Matrix, n: usize, order: usize) -> Self {
        let mut e = EquivalenceData::identity(l1.rows(), l2.rows(), order);
        if (1..=order).contains(&n) {
            e.psi_terms[n - 1] = l1.clone();
            e.psip_terms[n - 1] = l2.clone();
        }
        e
    }

    pub fn order(&self) -> usize {
        self.psi_terms.len()
    }

    fn series(&self) -> (Vec<Matrix>, Vec<Matrix>) {
        let d1 = self.psi_terms.first().map_or(0, Matrix::rows);
        let d2 = self.psip_terms.first().map_or(0, Matrix::rows);
        (with_identity(d1, &self.psi_terms), with_identity(d2, &self.psip_terms))
    }

    /// The inverse series `(ψ_t^{-1}, ψ'_t^{-1})`.
    pub fn inverse(&self) -> Self {
        let (a, b) = self.series();
        EquivalenceData {
            psi_terms: series_inverse(&a)[1..].to_vec(),
            psip_terms: series_inverse(&b)[1..].to_vec(),
        }
    }

    /// Applying `self` and then `next` equals applying the result once.
    pub fn then(&self, next: &EquivalenceData) -> Self {
        let (a, b) = self.series();
        let (na, nb) = next.series();
        EquivalenceData {
            psi_terms: series_mul(&na, &a)[1..].to_vec(),
            psip_terms: series_mul(&nb, &b)[1..].to_vec(),
        }
    }

    fn check_against(&self, def: &FormalDeformation) -> Result<()> {
        let (d1, d2) = (def.phi.source().dim(), def.phi.target().dim());
        if self.order() != def.order() || self.psip_terms.len() != def.order() {
            return Err(Error::Dimension("equivalence and deformation orders differ".into()));
        }
        if !self.psi_terms.iter().all(|m| m.shape() == (d1, d1)) || !self.psip_terms.iter().all(|m| m.shape() == (d2, d2)) {
            return Err(Error::Dimension("equivalence terms do not fit the algebras".into()));
        }
        Ok(())
    }
}

/// Transports one structure series along `ψ_t`, returning terms `1..=N`.
fn transport(s: &Structure, psi: &[Matrix], psi_inv: &[Matrix]) -> Vec<CochainPair> {
    let d = s.d;
    let len = s.len();
    let pulled: Vec<Series> = (0..d)
        .map(|a| psi_inv.iter().map(|m| m.column(a)).collect())
        .collect();
    let fs: Vec<Series> = (0..d * d)
        .map(|ab| apply_series(psi, &s.br(&pulled[ab / d], &pulled[ab % d])))
        .collect();
    let gs: Vec<Series> = (0..d * d * d)
        .map(|abc| apply_series(psi, &s.tr(&pulled[abc / (d * d)], &pulled[(abc / d) % d], &pulled[abc % d])))
        .collect();
    (1..len)
        .map(|n| {
            let f = Cochain::from_fn(CochainSpace::even(1, d, d), |a| fs[a[0] * d + a[1]][n].clone());
            let g = Cochain::from_fn(CochainSpace::odd(1, d, d), |a| gs[(a[0] * d + a[1]) * d + a[2]][n].clone());
            CochainPair { f, g }
        })
        .collect()
}

/// The deformation transported along an equivalence:
/// `F_t = ψ_t f_t(ψ_t^{-1}, ψ_t^{-1})`, `G_t` likewise, `Φ_t = ψ'_t φ_t ψ_t^{-1}`.
pub fn apply_equivalence(def: &FormalDeformation, e: &EquivalenceData) -> Result<FormalDeformation> {
    def.check_shapes()?;
    e.check_against(def)?;
    let (psi, psip) = {
        let (d1, d2) = (def.phi.source().dim(), def.phi.target().dim());
        (with_identity(d1, &e.psi_terms), with_identity(d2, &e.psip_terms))
    };
    let psi_inv = series_inverse(&psi);
    let s1 = Structure::new(def.phi.source(), &def.l1_terms);
    let s2 = Structure::new(def.phi.target(), &def.l2_terms);
    let mut phis = vec![def.phi.matrix().clone()];
    phis.extend(def.phi_terms.iter().cloned());
    let new_phi = series_mul(&series_mul(&psip, &phis), &psi_inv);
    Ok(FormalDeformation {
        phi: def.phi.clone(),
        l1_terms: transport(&s1, &psi, &psi_inv),
        l2_terms: transport(&s2, &psip, &series_inverse(&psip)),
        phi_terms: new_phi[1..].to_vec(),
    })
}

/// Why [`try_reduce`] stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ReductionStop {
    /// Every term through order `N` vanishes.
    Trivial,
    /// The infinitesimal at `order` is not a coboundary.
    NotCoboundary { order: usize, infinitesimal: MorphismCochain23 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub deformation: FormalDeformation,
    /// The composite equivalence taking the input to `deformation`.
    pub equivalence: EquivalenceData,
    pub changed: bool,
    pub stop: ReductionStop,
}

/// Repeatedly removes the lowest-order term while it is a coboundary
/// `d(λ1, λ2)`, by applying `ψ_t = id + λ1 t^n`, `ψ'_t = id + λ2 t^n`.
pub fn try_reduce(def: &FormalDeformation) -> Result<Reduction> {
    require_verified(def)?;
    let (d1, d2, order) = (def.phi.source().dim(), def.phi.target().dim(), def.order());
    let mr = self_morphism_representation(&def.phi);
    let mut cur = def.clone();
    let mut total = EquivalenceData::identity(d1, d2, order);
    let mut changed = false;
    loop {
        let Some((n, z)) = n_infinitesimal(&cur) else {
            return Ok(Reduction {
                deformation: cur,
                equivalence: total,
                changed,
                stop: ReductionStop::Trivial,
            });
        };
        let Some((l1, l2)) = coboundary_preimage(&mr, &z)? else {
            return Ok(Reduction {
                deformation: cur,
                equivalence: total,
                changed,
                stop: ReductionStop::NotCoboundary {
                    order: n,
                    infinitesimal: z,
                },
            });
        };
        let step = EquivalenceData::monomial(&l1, &l2, n, order);
        let next = apply_equivalence(&cur, &step)?;
        if n_infinitesimal(&next).is_some_and(|(m, _)| m <= n) {
            return Err(Error::Consistency(format!(
                "reducing the order-{n} term by its coboundary preimage did not remove it"
            )));
        }
        cur = next;
        total = total.then(&step);
        changed = true;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub dim_h: usize,
    /// `true` when the cohomology vanishes. A nonzero group is inconclusive:
    /// vanishing is sufficient for rigidity, not necessary.
    pub rigid: bool,
}

pub fn rigidity_check(phi: &MorphismLYA) -> Result<RigidityReport> {
    if let Verdict::Fail(w) = phi.check_morphism() {
        return Err(Error::rejected("not a morphism", w));
    }
    let h = morphism_cohomology_23(&self_morphism_representation(phi))?;
    Ok(RigidityReport {
        dim_h: h.full.dim_h,
        rigid: h.full.dim_h == 0,
    })
}
