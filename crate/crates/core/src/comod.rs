//! Comodules over subcoalgebras of the braided group: cotensor products,
//! internal Homs, induction, endomorphism algebras, tensor products over
//! them, and the enumeration of simple Yetter-Drinfeld modules.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braided::{BraidedGroup, Component};
use crate::error::{Error, Result};
use crate::linalg::commalg::{split_commutative, SplitOptions};
use crate::linalg::tensor::{apply_legs, permutation_matrix, permute};
use crate::linalg::{Algebra, Matrix, SVec, Subspace};
use crate::repcat::{ttensor, unflatten, HModule};
use crate::report::Report;
use crate::wha::{RMatrix, WeakHopfAlgebra};
use crate::yd::{comodule_hom, hom_bcomod, hom_yd, is_simple, to_yd, yd_verify, bcomod_verify, BComodule, YDModule};

/// Left `B`-comodule without an `H`-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainComodule {
    pub dim: usize,
    pub coaction: Matrix,
}

impl PlainComodule {
    /// A subcoalgebra `D` as a comodule over itself.
    pub fn regular(bg: &BraidedGroup, d: &Subspace) -> Result<PlainComodule> {
        let c = BComodule::from_subcoalgebra(bg, d)?;
        Ok(PlainComodule { dim: c.dim(), coaction: c.coaction })
    }

    pub fn forget(c: &BComodule) -> PlainComodule {
        PlainComodule { dim: c.dim(), coaction: c.coaction.clone() }
    }

    /// Coassociativity and the counit law for the plain counit `ε|_B`.
    pub fn verify(&self, h: &WeakHopfAlgebra, bg: &BraidedGroup) -> Report {
        let (bd, m) = (bg.dim(), self.dim);
        let eps = bg.plain_counit(h);
        let mut rep = Report::new();
        let coassoc = (0..m).find(|&j| {
            let v = self.coaction.col(j);
            apply_legs(v, &[bd, m], &[(0, &bg.comult)]) != apply_legs(v, &[bd, m], &[(1, &self.coaction)])
        });
        rep.check("plain coaction coassociative", coassoc.map(|j| format!("w = {j}")));
        let counit = (0..m).find(|&j| apply_legs(self.coaction.col(j), &[bd, m], &[(0, &eps)]) != SVec::unit(j));
        rep.check("plain coaction counital", counit.map(|j| format!("w = {j}")));
        rep
    }
}

/// `Hom^D(W, M)`: colinear maps, ignoring any `H`-action.
pub fn hom_colinear(bg: &BraidedGroup, w: &PlainComodule, m: &PlainComodule) -> Subspace {
    comodule_hom(None, &w.coaction, &m.coaction, bg.dim(), w.dim, m.dim)
}

/// Right coaction `φ ↦ φ_(0) ⊗ φ_(1)` on `M*` with `⟨φ_(0), m⟩ φ_(1) = m_(-1) ⟨φ, m_(0)⟩`,
/// as a matrix `M* → M* ⊗ B`.
pub fn dual_right_coaction(rho: &Matrix, m: usize, c: usize) -> Matrix {
    let mut cols: Vec<Vec<(usize, crate::scalars::Scalar)>> = vec![Vec::new(); m];
    for k in 0..m {
        for (row, coef) in rho.col(k).iter() {
            let (b, j) = (row / m, row % m);
            cols[j].push((k * c + b, coef.clone()));
        }
    }
    Matrix::from_columns(m * c, cols.into_iter().map(SVec::from_terms).collect())
}

/// `*M`: the dual space with `(h·φ)(m) = φ(S⁻¹(h) m)`.
pub fn dual_module(h: &WeakHopfAlgebra, m: &HModule) -> Result<HModule> {
    let s_inv = h.antipode_inv()?;
    let action = (0..h.dim()).map(|i| m.act(s_inv.col(i)).transpose()).collect();
    HModule::new(h, m.dim(), action)
}

/// Kernel of `ρ_X ⊗ id - id ⊗ ρ_Y` on `X ⊗ Y`, for a right coaction on `X`
/// and a left coaction on `Y`.
pub fn cotensor(right: &Matrix, x: usize, left: &Matrix, y: usize) -> Subspace {
    let a = right.kron(&Matrix::identity(y));
    let b = Matrix::identity(x).kron(left);
    a.sub(&b).kernel()
}

/// The internal-Hom action `(h·f)(m) = h_(2) f(S⁻¹(h_(1)) m)` on row-major
/// maps `M → N`.
pub fn internal_hom_action(h: &WeakHopfAlgebra, m: &HModule, n: &HModule) -> Result<Vec<Matrix>> {
    let s_inv = h.antipode_inv()?;
    let (dm, dn) = (m.dim(), n.dim());
    let s_inv_t: Vec<Matrix> = (0..h.dim()).map(|i| m.act(s_inv.col(i)).transpose()).collect();
    Ok((0..h.dim())
        .into_par_iter()
        .map(|i| {
            h.delta_terms(i).into_iter().fold(Matrix::zeros(dn * dm, dn * dm), |acc, (a, b, c)| {
                acc.add(&n.action()[b].kron(&s_inv_t[a]).scale(&c))
            })
        })
        .collect())
}

/// `Hom^D(M, N)` with the internal-Hom `H`-action, compared with the
/// cotensor product `*M □_D N` through `φ ⊗ n ↦ n φ(-)`.
pub fn internal_hom_report(h: &WeakHopfAlgebra, bg: &BraidedGroup, m: &BComodule, n: &BComodule) -> Result<Report> {
    let (dm, dn, bd) = (m.dim(), n.dim(), bg.dim());
    let homd = comodule_hom(None, &m.coaction, &n.coaction, bd, dm, dn);
    let right = dual_right_coaction(&m.coaction, dm, bd);
    let cot = cotensor(&right, dm, &n.coaction, dn);
    let dual = dual_module(h, &m.module)?;
    let comparison = permutation_matrix(&[dm, dn], &[1, 0]);
    let mut rep = Report::new();

    rep.check(
        "dim Hom^D(M, N) = dim *M □_D N",
        (homd.dim() != cot.dim()).then(|| format!("{} vs {}", homd.dim(), cot.dim())),
    );
    let image = cot.map(&comparison);
    rep.check(
        "comparison map is bijective",
        (image != homd).then(|| format!("image has dim {} inside Hom of dim {}", image.dim(), homd.dim())),
    );

    let tt = ttensor(h, &dual, &n.module);
    rep.check(
        "*M □_D N ⊆ *M ⊗_t N",
        (!tt.carrier.contains_space(&cot)).then(|| "cotensor leaves the carrier".to_string()),
    );
    let closed = (0..h.dim()).find(|&i| cot.basis().iter().any(|v| !cot.contains(&tt.ambient[i].apply(v))));
    rep.check("*M □_D N is an H-submodule", closed.map(|i| h.witness(i)));

    let act = internal_hom_action(h, &m.module, &n.module)?;
    let closed = (0..h.dim()).find(|&i| homd.basis().iter().any(|f| !homd.contains(&act[i].apply(f))));
    rep.check("Hom^D(M, N) is an H-submodule", closed.map(|i| h.witness(i)));
    let equivariant = (0..h.dim()).find(|&i| {
        cot.basis().iter().any(|v| comparison.apply(&tt.ambient[i].apply(v)) != act[i].apply(&comparison.apply(v)))
    });
    rep.check("comparison map is H-linear", equivariant.map(|i| h.witness(i)));
    Ok(rep)
}

/// `id ∈ Hom^D(M, M)` is fixed by the internal-Hom action up to `S⁻¹ ε_t`:
/// `h·id = A(S⁻¹(ε_t(h)))`.
pub fn internal_end_unit_report(h: &WeakHopfAlgebra, m: &BComodule) -> Result<Report> {
    let d = m.dim();
    let act = internal_hom_action(h, &m.module, &m.module)?;
    let id = crate::linalg::tensor::flatten(&Matrix::identity(d));
    let s_inv = h.antipode_inv()?;
    let bad = (0..h.dim()).find(|&i| {
        let target = m.module.act(&s_inv.apply(&h.eps_t(&SVec::unit(i))));
        act[i].apply(&id) != crate::linalg::tensor::flatten(&target)
    });
    let mut rep = Report::new();
    rep.check("h·id = S⁻¹(ε_t(h)) on the internal End", bad.map(|i| h.witness(i)));
    Ok(rep)
}

/// `Ind(W) ⊆ H ⊗ W` with its `H`-action and `B`-coaction.
#[derive(Clone, Debug)]
pub struct Induced {
    pub carrier: Subspace,
    pub comodule: BComodule,
}

/// `Ind(W)` spanned by `ε(h_(1)·w_(-1)) h_(2) ⊗ w_(0)`, with `H` acting on
/// the first leg and coaction `h_(1)·w_(-1) ⊗ h_(2) ⊗ w_(0)`.
pub fn induce(h: &WeakHopfAlgebra, bg: &BraidedGroup, w: &PlainComodule) -> Result<Induced> {
    let (n, bd, dw) = (h.dim(), bg.dim(), w.dim);
    let amb = n * dw;
    let ad_incl: Vec<Vec<SVec>> =
        (0..n).map(|a| (0..bd).map(|k| h.ad()[a].apply(bg.incl.col(k))).collect()).collect();
    let rho_terms: Vec<Vec<(usize, usize, crate::scalars::Scalar)>> = (0..dw)
        .map(|j| w.coaction.col(j).iter().map(|(row, c)| (row / dw, row % dw, c.clone())).collect())
        .collect();

    let gens: Vec<SVec> = (0..amb)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / dw, idx % dw);
            let mut terms = Vec::new();
            for (a, b, c) in h.delta_terms(i) {
                for (k, j0, coef) in &rho_terms[j] {
                    let e = h.eps(&ad_incl[a][*k]);
                    if !e.is_zero() {
                        terms.push((b * dw + j0, &(&c * coef) * &e));
                    }
                }
            }
            SVec::from_terms(terms)
        })
        .collect();
    let carrier = Subspace::span_par(amb, gens);

    let ambient_action: Vec<Matrix> = h.lmul().iter().map(|l| l.kron(&Matrix::identity(dw))).collect();
    let ambient = HModule::new(h, amb, ambient_action)?;
    let module = ambient.submodule(&carrier).map_err(|_| Error::IllFormed("Ind(W) is not H-stable".into()))?;

    let coords = carrier.coord_map();
    let incl = carrier.inclusion();
    let cols = (0..carrier.dim())
        .into_par_iter()
        .map(|col| {
            let v = &carrier.basis()[col];
            let mut acc = Vec::new();
            for (idx, coef) in v.iter() {
                let (i, j) = (idx / dw, idx % dw);
                for (a, b, c) in h.delta_terms(i) {
                    for (k, j0, r) in &rho_terms[j] {
                        let x = bg.coords.apply(&ad_incl[a][*k]);
                        let cc = &(&c * coef) * r;
                        acc.extend(x.iter().map(|(bi, xv)| (bi * amb + b * dw + j0, xv * &cc)));
                    }
                }
            }
            let full = SVec::from_terms(acc);
            let reduced = apply_legs(&full, &[bd, amb], &[(1, &coords)]);
            if apply_legs(&reduced, &[bd, carrier.dim()], &[(1, &incl)]) != full {
                return Err(Error::IllFormed("coaction leaves B ⊗ Ind(W)".into()));
            }
            Ok(reduced)
        })
        .collect::<Result<Vec<_>>>()?;
    let coaction = Matrix::from_columns(bd * carrier.dim(), cols);
    Ok(Induced { carrier, comodule: BComodule { module, coaction } })
}

/// `dim Hom_H^D(Ind W, M)` against `dim Hom^D(W, M)`.
pub fn adjunction_report(bg: &BraidedGroup, w: &PlainComodule, ind: &Induced, m: &BComodule) -> Report {
    let left = hom_bcomod(bg, &ind.comodule, m).dim();
    let right = hom_colinear(bg, w, &PlainComodule::forget(m)).dim();
    let mut rep = Report::new();
    rep.check(
        "dim Hom_H^D(Ind W, M) = dim Hom^D(W, M)",
        (left != right).then(|| format!("{left} vs {right}")),
    );
    rep
}

/// One Wedderburn block of an endomorphism algebra.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Block {
    pub block_dim: usize,
    pub d: usize,
    pub isotypic_dim: usize,
    pub simple_dim: usize,
}

/// `End_H^D(M)` under composition.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Algebra,
    /// Basis maps `M → M`.
    pub maps: Vec<Matrix>,
    /// Central primitive idempotents in algebra coordinates.
    pub idempotents: Vec<SVec>,
    pub blocks: Vec<Block>,
}

impl EndAlgebra {
    pub fn element_map(&self, a: &SVec) -> Matrix {
        let m = self.maps.first().map_or(0, Matrix::rows);
        a.iter().fold(Matrix::zeros(m, m), |acc, (k, c)| acc.add(&self.maps[*k].scale(c)))
    }
}

fn exact_sqrt(x: usize) -> Option<usize> {
    let r = (x as f64).sqrt().round() as usize;
    (r * r == x).then_some(r)
}

pub fn end_algebra(h: &WeakHopfAlgebra, bg: &BraidedGroup, m: &BComodule, opts: &SplitOptions) -> Result<EndAlgebra> {
    let d = m.dim();
    if d == 0 {
        return Err(Error::DimensionMismatch("End of the zero module".into()));
    }
    let space = hom_bcomod(bg, m, m);
    let maps: Vec<Matrix> = space.basis().iter().map(|f| unflatten(f, d, d)).collect();
    let r = maps.len();
    let table = (0..r * r)
        .into_par_iter()
        .map(|t| {
            let prod = crate::linalg::tensor::flatten(&maps[t / r].compose(&maps[t % r]));
            space.coords(&prod).ok_or_else(|| Error::IllFormed("End is not closed under composition".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = space
        .coords(&crate::linalg::tensor::flatten(&Matrix::identity(d)))
        .ok_or_else(|| Error::IllFormed("identity is not an endomorphism".into()))?;
    let algebra = Algebra::new(h.field().clone(), r, table, unit)?;
    if !algebra.is_semisimple() {
        return Err(Error::NotSemisimple("End_H^D(M) has a nonzero trace-form radical".into()));
    }
    let center = algebra.center();
    let z = algebra.restrict(&center, algebra.unit())?;
    let idempotents: Vec<SVec> = split_commutative(&z, opts)?.iter().map(|e| center.element(e)).collect();
    let mut end = EndAlgebra { algebra, maps, idempotents, blocks: Vec::new() };
    let blocks = end
        .idempotents
        .iter()
        .map(|e| {
            let block_dim = Subspace::span(r, (0..r).map(|k| end.algebra.mul(e, &SVec::unit(k)))).dim();
            let dd = exact_sqrt(block_dim)
                .ok_or_else(|| Error::NotSplit(format!("block of dimension {block_dim} is not a matrix algebra")))?;
            let isotypic_dim = end.element_map(e).rank();
            Ok(Block { block_dim, d: dd, isotypic_dim, simple_dim: isotypic_dim / dd })
        })
        .collect::<Result<Vec<_>>>()?;
    end.blocks = blocks;
    Ok(end)
}

/// Right module over an endomorphism algebra: `u·a = action[a] u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl RightModule {
    /// The right ideal `eA` with right multiplication.
    pub fn ideal(a: &Algebra, e: &SVec) -> RightModule {
        let r = a.dim();
        let space = Subspace::span(r, (0..r).map(|k| a.mul(e, &SVec::unit(k))));
        let incl = space.inclusion();
        let action = (0..r)
            .map(|k| {
                let m = a.right_matrix(&SVec::unit(k)).compose(&incl);
                space.coords_matrix(&m).expect("right ideal is closed")
            })
            .collect();
        RightModule { dim: space.dim(), action }
    }

    pub fn verify(&self, a: &Algebra) -> Report {
        let r = a.dim();
        let mut rep = Report::new();
        let shape = self.action.len() == r && self.action.iter().all(|m| m.rows() == self.dim && m.cols() == self.dim);
        rep.check("right module shape", (!shape).then(|| format!("expected {r} matrices of size {}", self.dim)));
        if !shape {
            return rep;
        }
        let act = |x: &SVec| x.iter().fold(Matrix::zeros(self.dim, self.dim), |acc, (k, c)| acc.add(&self.action[*k].scale(c)));
        let bad = (0..r * r).find(|&t| act(a.basis_product(t / r, t % r)) != self.action[t % r].compose(&self.action[t / r]));
        rep.check("right module associativity", bad.map(|t| format!("({}, {})", t / r, t % r)));
        rep.check(
            "right module unit",
            (act(a.unit()) != Matrix::identity(self.dim)).then(|| "1 does not act as the identity".to_string()),
        );
        rep
    }
}

/// `U ⊗_A M = (U ⊗ M) / span{u·a ⊗ m - u ⊗ a(m)}` with the inherited
/// `H`-action and `B`-coaction.
pub fn tensor_over_algebra(bg: &BraidedGroup, u: &RightModule, end: &EndAlgebra, m: &BComodule) -> Result<BComodule> {
    let (du, dm, bd) = (u.dim, m.dim(), bg.dim());
    let amb = du * dm;
    let rels: Vec<SVec> = (0..end.maps.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let ua = &u.action[a];
            let fa = &end.maps[a];
            (0..amb).map(move |idx| {
                let v = SVec::unit(idx);
                apply_legs(&v, &[du, dm], &[(0, ua)]).sub(&apply_legs(&v, &[du, dm], &[(1, fa)]))
            })
        })
        .collect();
    let relations = Subspace::span_par(amb, rels);
    let q = relations.quotient();
    let qd = q.dim();
    let proj = q.projection();
    let lift = Matrix::from_columns(amb, (0..qd).map(|k| q.lift(&SVec::unit(k))).collect());
    let id_u = Matrix::identity(du);

    let ambient_coact = |v: &SVec| {
        let w = apply_legs(v, &[du, dm], &[(1, &m.coaction)]);
        permute(&w, &[du, bd, dm], &[1, 0, 2])
    };
    let descend_ok = relations.basis().par_iter().all(|rel| {
        m.module.action().iter().all(|a| proj.apply(&apply_legs(rel, &[du, dm], &[(1, a)])).is_zero())
            && apply_legs(&ambient_coact(rel), &[bd, amb], &[(1, &proj)]).is_zero()
    });
    if !descend_ok {
        return Err(Error::IllFormed("relations of U ⊗_A M are not stable".into()));
    }
    let action = m
        .module
        .action()
        .iter()
        .map(|a| proj.compose(&id_u.kron(a)).compose(&lift))
        .collect();
    let module = HModule::from_parts(qd, action);
    let cols = (0..qd).map(|k| apply_legs(&ambient_coact(lift.col(k)), &[bd, amb], &[(1, &proj)])).collect();
    Ok(BComodule { module, coaction: Matrix::from_columns(bd * qd, cols) })
}

/// A user-supplied simple right module for one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UserModule {
    pub component: usize,
    pub block: usize,
    pub module: RightModule,
}

/// Per-component enumeration data.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComponentRecord {
    pub index: usize,
    pub dim: usize,
    pub induced_dim: usize,
    pub end_dim: usize,
    pub blocks: Vec<BlockRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BlockRecord {
    #[serde(flatten)]
    pub block: Block,
    pub constructed: bool,
}

/// An explicitly constructed simple object.
#[derive(Clone, Debug)]
pub struct SimpleObject {
    pub component: usize,
    pub block: usize,
    pub comodule: BComodule,
    pub yd: YDModule,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub components: Vec<ComponentRecord>,
    pub simples: Vec<SimpleObject>,
    pub induced: Vec<(PlainComodule, Induced, EndAlgebra)>,
    pub report: Report,
}

impl Enumeration {
    pub fn simple_count(&self) -> usize {
        self.components.iter().map(|c| c.blocks.len()).sum()
    }

    /// Dimensions of all simples, sorted.
    pub fn simple_dims(&self) -> Vec<usize> {
        let mut v: Vec<usize> =
            self.components.iter().flat_map(|c| c.blocks.iter().map(|b| b.block.simple_dim)).collect();
        v.sort_unstable();
        v
    }

    pub fn sum_of_squares(&self) -> usize {
        self.simple_dims().iter().map(|d| d * d).sum()
    }

    pub fn all_constructed(&self) -> bool {
        self.components.iter().all(|c| c.blocks.iter().all(|b| b.constructed))
    }
}

fn tag(e: Error, index: usize) -> Error {
    match e {
        Error::NotSplit(s) => Error::NotSplit(format!("component {index}: {s}")),
        Error::NotSemisimple(s) => Error::NotSemisimple(format!("component {index}: {s}")),
        other => other,
    }
}

/// Induces from each component, splits the endomorphism algebra, and
/// constructs the simples reachable from one-dimensional-block idempotents
/// or from user-supplied modules.
pub fn enumerate_yd(
    h: &WeakHopfAlgebra,
    bg: &BraidedGroup,
    r: &RMatrix,
    comps: &[Component],
    opts: &SplitOptions,
    user_modules: &[UserModule],
) -> Result<Enumeration> {
    let per: Vec<(PlainComodule, Induced, EndAlgebra)> = comps
        .par_iter()
        .map(|c| {
            let w = PlainComodule::regular(bg, &c.space).map_err(|e| tag(e, c.index))?;
            let ind = induce(h, bg, &w).map_err(|e| tag(e, c.index))?;
            let end = end_algebra(h, bg, &ind.comodule, opts).map_err(|e| tag(e, c.index))?;
            Ok((w, ind, end))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = Report::new();
    let mut components = Vec::new();
    let mut simples = Vec::new();
    for (c, (w, ind, end)) in comps.iter().zip(&per) {
        report.extend(prefixed(&format!("component {}: ", c.index), w.verify(h, bg)));
        report.extend(prefixed(&format!("component {}: ", c.index), bcomod_verify(h, bg, &ind.comodule)?));
        let book: usize = end.blocks.iter().map(|b| b.d * b.simple_dim).sum();
        report.check(
            format!("component {}: Σ d·dim V = dim Ind(W)", c.index),
            (book != ind.comodule.dim()).then(|| format!("{book} vs {}", ind.comodule.dim())),
        );
        let mut blocks = Vec::new();
        for (bi, (blk, e)) in end.blocks.iter().zip(&end.idempotents).enumerate() {
            let user = user_modules.iter().find(|u| u.component == c.index && u.block == bi);
            let u = match (blk.d, user) {
                (1, _) => Some(RightModule::ideal(&end.algebra, e)),
                (_, Some(um)) => {
                    let vr = um.module.verify(&end.algebra);
                    let ok = vr.passed();
                    report.extend(prefixed(&format!("component {} block {bi}: ", c.index), vr));
                    ok.then(|| um.module.clone())
                }
                _ => None,
            };
            let built = match u {
                Some(u) => {
                    let v = tensor_over_algebra(bg, &u, end, &ind.comodule)?;
                    let y = to_yd(h, bg, r, &v);
                    let label = format!("component {} block {bi}: ", c.index);
                    report.extend(prefixed(&label, bcomod_verify(h, bg, &v)?));
                    report.extend(prefixed(&label, yd_verify(h, &y)));
                    let simple = is_simple(h, &y);
                    report.check(format!("{label}constructed module is simple"), (!simple).then(|| "dim End ≠ 1".into()));
                    report.check(
                        format!("{label}constructed dimension"),
                        (v.dim() != blk.simple_dim).then(|| format!("{} vs {}", v.dim(), blk.simple_dim)),
                    );
                    simples.push(SimpleObject { component: c.index, block: bi, comodule: v, yd: y });
                    true
                }
                None => false,
            };
            blocks.push(BlockRecord { block: blk.clone(), constructed: built });
        }
        components.push(ComponentRecord {
            index: c.index,
            dim: c.space.dim(),
            induced_dim: ind.comodule.dim(),
            end_dim: end.algebra.dim(),
            blocks,
        });
    }
    let clash = simples.iter().enumerate().find_map(|(i, a)| {
        simples[i + 1..].iter().find(|b| hom_yd(h, &a.yd, &b.yd).dim() != 0).map(|b| {
            format!("({}, {}) and ({}, {})", a.component, a.block, b.component, b.block)
        })
    });
    report.check("constructed simples are pairwise non-isomorphic", clash);
    Ok(Enumeration { components, simples, induced: per, report })
}

/// `Σ_V dim Hom_YD(V, M)·dim V = dim M` over the constructed simples.
pub fn expansion_report(h: &WeakHopfAlgebra, simples: &[SimpleObject], m: &YDModule) -> Report {
    let total: usize = simples.iter().map(|s| hom_yd(h, &s.yd, m).dim() * s.yd.dim()).sum();
    let mut rep = Report::new();
    rep.check(
        "semisimple expansion",
        (total != m.dim()).then(|| format!("Σ dim Hom(V, M)·dim V = {total}, dim M = {}", m.dim())),
    );
    rep
}

fn prefixed(prefix: &str, rep: Report) -> Report {
    let mut out = Report::new();
    for c in rep.checks {
        out.push(crate::report::Check { name: format!("{prefix}{}", c.name), ..c });
    }
    out
}
