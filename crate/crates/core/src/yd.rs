//! Yetter-Drinfeld modules over `H`, comodules over the braided group `B`
//! in the category of `H`-modules, and the explicit equivalence between
//! them.

use rayon::prelude::*;

use crate::braided::BraidedGroup;
use crate::error::{Error, Result};
use crate::linalg::tensor::apply_legs;
use crate::linalg::{Matrix, SVec, Subspace};
use crate::repcat::{maps_satisfying, pair_action, unitors, HModule};
use crate::report::Report;
use crate::wha::{split_terms, RMatrix, WeakHopfAlgebra};

/// Left `H`-module with a left `H`-coaction `ρ: M → H ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDModule {
    pub module: HModule,
    pub coaction: Matrix,
}

/// Left `H`-module with a left `B`-coaction `ρ_R: M → B ⊗ M` (in the basis of `B`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BComodule {
    pub module: HModule,
    pub coaction: Matrix,
}

impl YDModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn zero(h: &WeakHopfAlgebra) -> YDModule {
        YDModule { module: HModule::zero(h), coaction: Matrix::zeros(0, 0) }
    }
}

impl BComodule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn zero(h: &WeakHopfAlgebra) -> BComodule {
        BComodule { module: HModule::zero(h), coaction: Matrix::zeros(0, 0) }
    }

    /// `B` itself with the adjoint action and `Δ_B`.
    pub fn regular(bg: &BraidedGroup) -> BComodule {
        BComodule { module: bg.module.clone(), coaction: bg.comult.clone() }
    }

    /// A subcoalgebra `D ⊆ B` (stable under the adjoint action) with `Δ_B|_D`.
    pub fn from_subcoalgebra(bg: &BraidedGroup, d: &Subspace) -> Result<BComodule> {
        let bd = bg.dim();
        let module = bg.module.submodule(d)?;
        let incl = d.inclusion();
        let coords = d.coord_map();
        let delta = bg.comult.compose(&incl);
        let coaction = Matrix::from_columns(bd * d.dim(), delta.columns().iter().map(|v| {
            apply_legs(v, &[bd, bd], &[(1, &coords)])
        }).collect());
        let back = Matrix::from_columns(bd * bd, coaction.columns().iter().map(|v| {
            apply_legs(v, &[bd, d.dim()], &[(1, &incl)])
        }).collect());
        if back != delta {
            return Err(Error::IllFormed("Δ_B(D) ⊄ B ⊗ D".into()));
        }
        Ok(BComodule { module, coaction })
    }

    /// The unit object `H_t` with coaction `Δ_B ∘ u_B`.
    pub fn unit(bg: &BraidedGroup) -> Result<BComodule> {
        let ht = Subspace::span(bg.dim(), bg.unit.columns().to_vec());
        let c = BComodule::from_subcoalgebra(bg, &ht)?;
        // Move from the echelon basis of u_B(H_t) to the canonical basis of H_t.
        let e = ht.coords_matrix(&bg.unit)?;
        let e_inv = e.inverse()?;
        let module = c.module.conjugate(&e_inv, &e);
        let coaction = Matrix::identity(bg.dim()).kron(&e_inv).compose(&c.coaction).compose(&e);
        Ok(BComodule { module, coaction })
    }

    pub fn direct_sum(&self, other: &BComodule, coalg_dim: usize) -> BComodule {
        BComodule {
            module: self.module.direct_sum(&other.module),
            coaction: coaction_sum(&self.coaction, self.dim(), &other.coaction, other.dim(), coalg_dim),
        }
    }
}

/// Coaction of `M ⊕ N` given those of `M` and `N` into `C ⊗ M`, `C ⊗ N`.
pub fn coaction_sum(a: &Matrix, m: usize, b: &Matrix, n: usize, c: usize) -> Matrix {
    let embed = |v: &SVec, off: usize, own: usize| v.reindex(|k| (k / own) * (m + n) + off + k % own);
    let cols = a
        .columns()
        .iter()
        .map(|v| embed(v, 0, m))
        .chain(b.columns().iter().map(|v| embed(v, m, n)))
        .collect();
    Matrix::from_columns(c * (m + n), cols)
}

fn first_col(cols: usize, f: impl Fn(usize) -> bool + Sync + Send) -> Option<usize> {
    (0..cols).into_par_iter().find_first(|&j| !f(j))
}

/// Exhaustive Yetter-Drinfeld checks.
pub fn yd_verify(h: &WeakHopfAlgebra, y: &YDModule) -> Report {
    let n = h.dim();
    let m = y.dim();
    let rho = &y.coaction;
    let acts = y.module.action();
    let mut rep = Report::new();
    rep.extend(y.module.verify(h));
    if rho.rows() != n * m || rho.cols() != m {
        rep.check("coaction shape", Some(format!("{}×{}, expected {}×{m}", rho.rows(), rho.cols(), n * m)));
        return rep;
    }
    let reg = HModule::regular(h);
    let p1 = pair_action(&reg, &y.module, h.delta_one(), n);
    let lands = first_col(m, |j| p1.apply(rho.col(j)) == *rho.col(j));
    rep.check("coaction lands in H ⊗_t M", lands.map(|j| format!("m = {j}")));

    let compat = (0..n).into_par_iter().find_first(|&i| {
        let lhs = pair_action(&reg, &y.module, h.comult_matrix().col(i), n).compose(rho);
        let rhs = h.delta_terms(i).into_iter().fold(Matrix::zeros(n * m, m), |acc, (a, b, c)| {
            let t = h.rmul()[b].kron(&Matrix::identity(m)).compose(rho).compose(&acts[a]);
            acc.add(&t.scale(&c))
        });
        lhs != rhs
    });
    rep.check("YD compatibility", compat.map(|i| format!("h = {}", h.witness(i))));

    let coassoc = first_col(m, |j| {
        let v = rho.col(j);
        apply_legs(v, &[n, m], &[(0, h.comult_matrix())]) == apply_legs(v, &[n, m], &[(1, rho)])
    });
    rep.check("coaction coassociative", coassoc.map(|j| format!("m = {j}")));

    let eps = Matrix::from_columns(1, (0..n).map(|i| SVec::single(0, h.eps(&SVec::unit(i)))).collect());
    let counit = first_col(m, |j| apply_legs(rho.col(j), &[n, m], &[(0, &eps)]) == SVec::unit(j));
    rep.check("coaction counital", counit.map(|j| format!("m = {j}")));
    rep
}

/// Comodule checks over the braided group, in the category of `H`-modules.
pub fn bcomod_verify(h: &WeakHopfAlgebra, bg: &BraidedGroup, c: &BComodule) -> Result<Report> {
    let n = h.dim();
    let bd = bg.dim();
    let m = c.dim();
    let rho = &c.coaction;
    let mut rep = Report::new();
    rep.extend(c.module.verify(h));
    if rho.rows() != bd * m || rho.cols() != m {
        rep.check("coaction shape", Some(format!("{}×{}, expected {}×{m}", rho.rows(), rho.cols(), bd * m)));
        return Ok(rep);
    }
    let p1 = pair_action(&bg.module, &c.module, h.delta_one(), n);
    let lands = first_col(m, |j| p1.apply(rho.col(j)) == *rho.col(j));
    rep.check("coaction lands in B ⊗_t M", lands.map(|j| format!("m = {j}")));

    let lin = (0..n).into_par_iter().find_first(|&i| {
        pair_action(&bg.module, &c.module, h.comult_matrix().col(i), n).compose(rho)
            != rho.compose(&c.module.action()[i])
    });
    rep.check("coaction is H-linear", lin.map(|i| h.witness(i)));

    let coassoc = first_col(m, |j| {
        let v = rho.col(j);
        apply_legs(v, &[bd, m], &[(0, &bg.comult)]) == apply_legs(v, &[bd, m], &[(1, rho)])
    });
    rep.check("coaction coassociative", coassoc.map(|j| format!("m = {j}")));

    let u = unitors(h, &c.module)?;
    let counit = first_col(m, |j| {
        u.l.apply(&apply_legs(rho.col(j), &[bd, m], &[(0, &bg.counit)])) == SVec::unit(j)
    });
    rep.check("coaction counital", counit.map(|j| format!("m = {j}")));
    Ok(rep)
}

/// `ρ_R(m) = m_(-1) S(R²) ⊗ R¹ m_(0)`.
pub fn to_bcomod(h: &WeakHopfAlgebra, bg: &BraidedGroup, r: &RMatrix, y: &YDModule) -> Result<BComodule> {
    let n = h.dim();
    let m = y.dim();
    let mut acc = Matrix::zeros(n * m, m);
    for (p, q, d) in split_terms(&r.r, n) {
        let right = right_mult(h, &h.s(&SVec::unit(q)));
        let op = right.kron(&y.module.action()[p]);
        acc = acc.add(&op.compose(&y.coaction).scale(&d));
    }
    let coaction = Matrix::from_columns(
        bg.dim() * m,
        acc.columns().iter().map(|v| apply_legs(v, &[n, m], &[(0, &bg.coords)])).collect(),
    );
    let back = Matrix::from_columns(
        n * m,
        coaction.columns().iter().map(|v| apply_legs(v, &[bg.dim(), m], &[(0, &bg.incl)])).collect(),
    );
    if back != acc {
        return Err(Error::IllFormed("m_(-1) S(R²) ∉ B".into()));
    }
    Ok(BComodule { module: y.module.clone(), coaction })
}

/// `ρ(m) = m^(-1) R² ⊗ R¹ m^(0)`.
pub fn to_yd(h: &WeakHopfAlgebra, bg: &BraidedGroup, r: &RMatrix, c: &BComodule) -> YDModule {
    let n = h.dim();
    let m = c.dim();
    let mut acc = Matrix::zeros(n * m, m);
    for (p, q, d) in split_terms(&r.r, n) {
        let op = h.rmul()[q].compose(&bg.incl).kron(&c.module.action()[p]);
        acc = acc.add(&op.compose(&c.coaction).scale(&d));
    }
    YDModule { module: c.module.clone(), coaction: acc }
}

fn right_mult(h: &WeakHopfAlgebra, y: &SVec) -> Matrix {
    y.iter().fold(Matrix::zeros(h.dim(), h.dim()), |acc, (k, c)| acc.add(&h.rmul()[*k].scale(c)))
}

/// Maps `f: M → N` (row-major `p × m`) with `f A_M(h) = A_N(h) f` for all
/// basis `h` and `ρ_N f = (id ⊗ f) ρ_M` for coactions into `C ⊗ -`.
/// `modules` may be `None` to drop the `H`-linearity constraint.
pub fn comodule_hom(
    modules: Option<(&HModule, &HModule)>,
    rho_m: &Matrix,
    rho_n: &Matrix,
    c: usize,
    m: usize,
    p: usize,
) -> Subspace {
    // Entries of ρ_M grouped by the M-index of the output leg.
    let mut by_k: Vec<Vec<(usize, usize, crate::scalars::Scalar)>> = vec![Vec::new(); m];
    for j in 0..m {
        for (row, coef) in rho_m.col(j).iter() {
            by_k[row % m].push((row / m, j, coef.clone()));
        }
    }
    let pairs: Vec<(Matrix, Matrix)> = match modules {
        Some((mm, nn)) => nn.action().iter().zip(mm.action()).map(|(b, a)| (b.clone(), a.transpose())).collect(),
        None => Vec::new(),
    };
    let block = c * p * m;
    maps_satisfying(p, m, |f| {
        // ρ_N f - (id ⊗ f) ρ_M, as a (c·p) × m matrix flattened row-major.
        let mut out = apply_legs(f, &[p, m], &[(0, rho_n)]);
        let mut terms = Vec::new();
        for (idx, coef) in f.iter() {
            let (i, k) = (idx / m, idx % m);
            for (b, j, r) in &by_k[k] {
                terms.push(((b * p + i) * m + j, -(coef * r)));
            }
        }
        out = out.add(&SVec::from_terms(terms));
        let mut off = block;
        for (b, at) in &pairs {
            let d = apply_legs(f, &[p, m], &[(0, b)]).sub(&apply_legs(f, &[p, m], &[(1, at)]));
            out = out.add(&d.shifted(off));
            off += p * m;
        }
        out
    })
}

/// Morphisms of Yetter-Drinfeld modules.
pub fn hom_yd(h: &WeakHopfAlgebra, a: &YDModule, b: &YDModule) -> Subspace {
    comodule_hom(Some((&a.module, &b.module)), &a.coaction, &b.coaction, h.dim(), a.dim(), b.dim())
}

/// Morphisms of `B`-comodules in the category of `H`-modules.
pub fn hom_bcomod(bg: &BraidedGroup, a: &BComodule, b: &BComodule) -> Subspace {
    comodule_hom(Some((&a.module, &b.module)), &a.coaction, &b.coaction, bg.dim(), a.dim(), b.dim())
}

/// Schur criterion: nonzero with one-dimensional endomorphism space.
pub fn is_simple(h: &WeakHopfAlgebra, y: &YDModule) -> bool {
    y.dim() > 0 && hom_yd(h, y, y).dim() == 1
}

/// Both round trips are the identity on coaction matrices.
pub fn roundtrip_report(h: &WeakHopfAlgebra, bg: &BraidedGroup, r: &RMatrix, c: &BComodule) -> Result<Report> {
    let y = to_yd(h, bg, r, c);
    let c2 = to_bcomod(h, bg, r, &y)?;
    let y2 = to_yd(h, bg, r, &c2);
    let mut rep = Report::new();
    rep.check(
        "toBComod ∘ toYD = id",
        c.coaction.first_difference(&c2.coaction).map(|j| format!("column {j}")),
    );
    rep.check(
        "toYD ∘ toBComod = id",
        y.coaction.first_difference(&y2.coaction).map(|j| format!("column {j}")),
    );
    Ok(rep)
}
