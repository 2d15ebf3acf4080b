//! The braided group `B = C_H(H_s)` of a quasi-triangular weak Hopf
//! algebra, its braided Hopf structure, and its decomposition into minimal
//! adjoint-stable subcoalgebras.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::commalg::{split_commutative, SplitOptions};
use crate::linalg::tensor::apply_legs;
use crate::linalg::{Algebra, Matrix, SVec, Subspace};
use crate::repcat::{braiding, ttensor, unitors, HModule};
use crate::report::Report;
use crate::scalars::Scalar;
use crate::wha::{RMatrix, WeakHopfAlgebra};

/// `{b : b y = y b for all y ∈ H_s}`.
pub fn centralizer_hs(h: &WeakHopfAlgebra) -> Subspace {
    let n = h.dim();
    let hs = h.h_s().basis().to_vec();
    let k = hs.len();
    let m = Matrix::from_fn(n * k, n, |i| {
        let b = SVec::unit(i);
        SVec::from_terms(hs.iter().enumerate().flat_map(|(t, y)| {
            h.mul(&b, y).sub(&h.mul(y, &b)).shifted(t * n).into_entries()
        }))
    });
    m.kernel()
}

/// Span of `1_(1) h S(1_(2))` over basis `h`.
pub fn centralizer_image(h: &WeakHopfAlgebra) -> Subspace {
    let n = h.dim();
    let d1: Vec<(usize, usize, Scalar)> = crate::wha::split_terms(h.delta_one(), n);
    let vs = (0..n)
        .map(|i| {
            let x = SVec::unit(i);
            d1.iter().fold(SVec::zero(), |acc, (a, b, c)| {
                acc.axpy(c, &h.mul(&h.mul(&SVec::unit(*a), &x), &h.s(&SVec::unit(*b))))
            })
        })
        .collect();
    Subspace::span_par(n, vs)
}

/// `B` with all structure maps as matrices in the canonical basis of `B`.
#[derive(Clone, Debug)]
pub struct BraidedGroup {
    pub carrier: Subspace,
    /// Adjoint action on `B`.
    pub module: HModule,
    /// `B → H`.
    pub incl: Matrix,
    /// `H → B`, valid on `B`.
    pub coords: Matrix,
    /// `B ⊗ B → B`.
    pub mult: Matrix,
    /// `H_t → B`.
    pub unit: Matrix,
    /// `B → B ⊗ B`.
    pub comult: Matrix,
    /// `B → H_t`.
    pub counit: Matrix,
    pub antipode: Matrix,
    pub antipode_inv: Matrix,
    /// Both characterizations of `B` agree.
    pub centralizer_agrees: bool,
}

fn ill(msg: &str) -> Error {
    Error::IllFormed(msg.to_string())
}

impl BraidedGroup {
    pub fn build(h: &WeakHopfAlgebra, r: &RMatrix) -> Result<BraidedGroup> {
        let n = h.dim();
        let carrier = centralizer_hs(h);
        let centralizer_agrees = carrier == centralizer_image(h);
        let bd = carrier.dim();
        let incl = carrier.inclusion();
        let coords = carrier.coord_map();
        let to_b = |v: &SVec| carrier.coords(v).ok_or_else(|| ill("element outside B"));
        let module = HModule::adjoint(h).submodule(&carrier).map_err(|_| ill("B is not adjoint-stable"))?;

        let basis = carrier.basis();
        let mult = (0..bd * bd)
            .into_par_iter()
            .map(|t| to_b(&h.mul(&basis[t / bd], &basis[t % bd])))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| ill("B is not a subalgebra"))?;
        let mult = Matrix::from_columns(bd, mult);

        let ht = h.h_t();
        let unit = ht.basis().iter().map(to_b).collect::<Result<Vec<_>>>().map_err(|_| ill("H_t ⊄ B"))?;
        let unit = Matrix::from_columns(bd, unit);
        let counit = basis
            .iter()
            .map(|b| ht.coords(&h.eps_t(b)).ok_or_else(|| ill("ε_t(B) ⊄ H_t")))
            .collect::<Result<Vec<_>>>()?;
        let counit = Matrix::from_columns(ht.dim(), counit);

        let rterms = crate::wha::split_terms(&r.r, n);
        let comult = basis
            .par_iter()
            .map(|b| {
                let db = h.delta(b);
                let mut acc = SVec::zero();
                for (i, j, c) in crate::wha::split_terms(&db, n) {
                    for (p, q, d) in &rterms {
                        let left = h.mul(&SVec::unit(i), &h.s(&SVec::unit(*q)));
                        let right = h.ad()[*p].apply(&SVec::unit(j));
                        acc = acc.axpy(&(&c * d), &left.kron(&right, n));
                    }
                }
                let inb = apply_legs(&acc, &[n, n], &[(0, &coords), (1, &coords)]);
                if apply_legs(&inb, &[bd, bd], &[(0, &incl), (1, &incl)]) != acc {
                    return Err(ill("Δ_B(b) ⊄ B ⊗ B"));
                }
                Ok(inb)
            })
            .collect::<Result<Vec<_>>>()?;
        let comult = Matrix::from_columns(bd * bd, comult);

        let antipode = basis
            .iter()
            .map(|b| {
                let v = rterms.iter().fold(SVec::zero(), |acc, (p, q, d)| {
                    acc.axpy(d, &h.mul(&SVec::unit(*q), &h.s(&h.ad()[*p].apply(b))))
                });
                to_b(&v)
            })
            .collect::<Result<Vec<_>>>()?;
        let antipode = Matrix::from_columns(bd, antipode);
        let antipode_inv = antipode.inverse().map_err(|_| ill("S_B is not invertible"))?;

        Ok(BraidedGroup {
            carrier,
            module,
            incl,
            coords,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inv,
            centralizer_agrees,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Plain counit `ε|_B` as a `1 × dim B` matrix.
    pub fn plain_counit(&self, h: &WeakHopfAlgebra) -> Matrix {
        Matrix::from_columns(1, self.carrier.basis().iter().map(|b| SVec::single(0, h.eps(b))).collect())
    }

    /// `Δ_B` on the ambient `H ⊗ H` side, for elements given in `H`.
    pub fn comult_ambient(&self, x: &SVec) -> SVec {
        let v = self.comult.apply(&self.coords.apply(x));
        let b = self.dim();
        apply_legs(&v, &[b, b], &[(0, &self.incl), (1, &self.incl)])
    }

    /// A copy with the two tensor legs of `Δ_B` swapped (a deliberately
    /// broken structure for negative tests).
    pub fn with_flipped_comult(&self) -> BraidedGroup {
        let b = self.dim();
        let swap = crate::linalg::tensor::permutation_matrix(&[b, b], &[1, 0]);
        BraidedGroup { comult: swap.compose(&self.comult), ..self.clone() }
    }
}

fn first_vec<F>(vs: &[SVec], f: F) -> Option<String>
where
    F: Fn(&SVec) -> bool + Sync + Send,
{
    vs.par_iter().position_first(|v| !f(v)).map(|k| format!("vector {k}"))
}

/// Every axiom of the braided Hopf algebra `B` in the category of
/// `H`-modules, plus cocommutativity against the regular module.
pub fn braided_group_verify(h: &WeakHopfAlgebra, bg: &BraidedGroup, r: &RMatrix) -> Result<Report> {
    let bd = bg.dim();
    let basis: Vec<SVec> = (0..bd).map(SVec::unit).collect();
    let u = HModule::unit(h);
    let t = u.dim();
    let mut rep = Report::new();
    rep.check(
        "B = C_H(H_s) = {1_(1) h S(1_(2))}",
        (!bg.centralizer_agrees).then(|| "the two characterizations differ".to_string()),
    );

    let bb = ttensor(h, &bg.module, &bg.module);
    let carrier = bb.carrier.basis().to_vec();

    // m_B(1_(1)·a ⊗ 1_(2)·b) = ab
    let p1 = crate::repcat::pair_action(&bg.module, &bg.module, h.delta_one(), h.dim());
    let well_def = (0..bd * bd).into_par_iter().find_first(|&k| {
        let w = p1.apply(&SVec::unit(k));
        bg.mult.apply(&w) != bg.mult.col(k).clone()
    });
    rep.check("m_B well defined on B ⊗_t B", well_def.map(|k| format!("pair {} ⊗ {}", k / bd, k % bd)));

    let lands = first_vec(&basis, |b| bb.carrier.contains(&bg.comult.apply(b)));
    rep.check("Δ_B lands in B ⊗_t B", lands);

    let lin = (0..h.dim()).into_par_iter().find_first(|&i| {
        basis.iter().any(|b| {
            bg.comult.apply(&bg.module.action()[i].apply(b)) != bb.ambient[i].apply(&bg.comult.apply(b))
                || bg.antipode.apply(&bg.module.action()[i].apply(b)) != bg.module.action()[i].apply(&bg.antipode.apply(b))
        })
    });
    rep.check("Δ_B and S_B are H-linear", lin.map(|i| h.witness(i)));

    let bbb = crate::repcat::triple_carrier(h, [&bg.module, &bg.module, &bg.module]);
    let assoc = first_vec(bbb.basis(), |v| {
        let left = bg.mult.apply(&apply_legs(v, &[bd * bd, bd], &[(0, &bg.mult)]));
        let right = bg.mult.apply(&apply_legs(v, &[bd, bd * bd], &[(1, &bg.mult)]));
        left == right
    });
    rep.check("m_B associative", assoc);

    let ub = unitors(h, &bg.module)?;
    let unit_l = first_vec(&basis, |x| {
        let v = apply_legs(&ub.l_inv.apply(x), &[t, bd], &[(0, &bg.unit)]);
        bg.mult.apply(&v) == *x
    });
    let unit_r = first_vec(&basis, |x| {
        let v = apply_legs(&ub.r_inv.apply(x), &[bd, t], &[(1, &bg.unit)]);
        bg.mult.apply(&v) == *x
    });
    rep.check("unit laws", unit_l.or(unit_r));

    let coassoc = first_vec(&basis, |x| {
        let d = bg.comult.apply(x);
        apply_legs(&d, &[bd, bd], &[(0, &bg.comult)]) == apply_legs(&d, &[bd, bd], &[(1, &bg.comult)])
    });
    rep.check("Δ_B coassociative", coassoc);

    let counit = first_vec(&basis, |x| {
        let d = bg.comult.apply(x);
        let l = ub.l.apply(&apply_legs(&d, &[bd, bd], &[(0, &bg.counit)]));
        let r_ = ub.r.apply(&apply_legs(&d, &[bd, bd], &[(1, &bg.counit)]));
        l == *x && r_ == *x
    });
    rep.check("counit laws", counit);

    let (c_bb, _) = braiding(h, &bg.module, &bg.module, r);
    let bialg = first_vec(&carrier, |w| {
        let lhs = bg.comult.apply(&bg.mult.apply(w));
        let v = apply_legs(w, &[bd, bd], &[(0, &bg.comult), (1, &bg.comult)]);
        let v = apply_legs(&v, &[bd, bd * bd, bd], &[(1, &c_bb)]);
        let rhs = apply_legs(&v, &[bd * bd, bd * bd], &[(0, &bg.mult), (1, &bg.mult)]);
        lhs == rhs
    });
    rep.check("bialgebra law", bialg);

    let uu = unitors(h, &u)?;
    let eps_mult = first_vec(&carrier, |w| {
        let lhs = bg.counit.apply(&bg.mult.apply(w));
        let rhs = uu.l.apply(&apply_legs(w, &[bd, bd], &[(0, &bg.counit), (1, &bg.counit)]));
        lhs == rhs
    });
    rep.check("ε_B m_B = l(ε_B ⊗ ε_B)", eps_mult);

    let zs: Vec<SVec> = (0..t).map(SVec::unit).collect();
    let delta_unit = first_vec(&zs, |z| {
        let lhs = bg.comult.apply(&bg.unit.apply(z));
        let rhs = apply_legs(&uu.l_inv.apply(z), &[t, t], &[(0, &bg.unit), (1, &bg.unit)]);
        lhs == rhs
    });
    rep.check("Δ_B u_B = (u_B ⊗ u_B) l⁻¹", delta_unit);

    let antipode = first_vec(&basis, |x| {
        let d = bg.comult.apply(x);
        let target = bg.unit.apply(&bg.counit.apply(x));
        let left = bg.mult.apply(&apply_legs(&d, &[bd, bd], &[(0, &bg.antipode)]));
        let right = bg.mult.apply(&apply_legs(&d, &[bd, bd], &[(1, &bg.antipode)]));
        left == target && right == target
    });
    rep.check("antipode laws", antipode);

    let id = Matrix::identity(bd);
    let inv = bg.antipode.compose(&bg.antipode_inv) == id && bg.antipode_inv.compose(&bg.antipode) == id;
    rep.check("S_B T_B = T_B S_B = id", (!inv).then(|| "T_B is not a two-sided inverse".to_string()));

    rep.extend(cocommutativity(h, bg, r));

    let eps = bg.plain_counit(h);
    let kco = first_vec(&basis, |x| {
        let d = bg.comult.apply(x);
        apply_legs(&d, &[bd, bd], &[(0, &eps)]) == *x && apply_legs(&d, &[bd, bd], &[(1, &eps)]) == *x
    });
    rep.check("ε|_B is a counit of Δ_B", kco);
    Ok(rep)
}

/// `(id ⊗ α)(Δ_B ⊗ id) = (id ⊗ α)(c_{B,B} ⊗ id)(id ⊗ c_{X,B} c_{B,X})(Δ_B ⊗ id)`
/// on `B ⊗_t X` for `X` the regular module, `α(b ⊗ x) = bx`.
pub fn cocommutativity(h: &WeakHopfAlgebra, bg: &BraidedGroup, r: &RMatrix) -> Report {
    let n = h.dim();
    let bd = bg.dim();
    let x = HModule::regular(h);
    let bx = ttensor(h, &bg.module, &x);
    let alpha = Matrix::from_fn(n, bd * n, |k| h.mul(bg.incl.col(k / n), &SVec::unit(k % n)));
    let (c_bx, _) = braiding(h, &bg.module, &x, r);
    let (c_xb, _) = braiding(h, &x, &bg.module, r);
    let double = c_xb.compose(&c_bx);
    let (c_bb, _) = braiding(h, &bg.module, &bg.module, r);
    let bad = bx.carrier.basis().par_iter().position_first(|w| {
        let v = apply_legs(w, &[bd, n], &[(0, &bg.comult)]);
        let lhs = apply_legs(&v, &[bd, bd * n], &[(1, &alpha)]);
        let v = apply_legs(&v, &[bd, bd * n], &[(1, &double)]);
        let v = apply_legs(&v, &[bd * bd, n], &[(0, &c_bb)]);
        let rhs = apply_legs(&v, &[bd, bd * n], &[(1, &alpha)]);
        lhs != rhs
    });
    let mut rep = Report::new();
    rep.check("cocommutativity on the regular module", bad.map(|k| format!("carrier vector {k}")));
    rep
}

/// A minimal adjoint-stable subcoalgebra `D_i ⊆ B`, in `B` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub index: usize,
    pub space: Subspace,
}

/// The algebra `B*` dual to `(B, Δ_B, ε|_B)`.
pub fn dual_algebra(h: &WeakHopfAlgebra, bg: &BraidedGroup) -> Result<Algebra> {
    let bd = bg.dim();
    let table = (0..bd * bd)
        .map(|t| SVec::from_terms((0..bd).map(|k| (k, bg.comult.col(k).get(t)))))
        .collect();
    let unit = bg.plain_counit(h).transpose().col(0).clone();
    Algebra::new(h.field().clone(), bd, table, unit)
}

/// Adjoint closure of a subspace of `B`.
pub fn adjoint_closure(bg: &BraidedGroup, start: &Subspace) -> Subspace {
    let mut cur = start.clone();
    loop {
        let grown = Subspace::span(
            cur.ambient(),
            cur.basis()
                .iter()
                .cloned()
                .chain(bg.module.action().iter().flat_map(|a| cur.basis().iter().map(move |v| a.apply(v)))),
        );
        if grown.dim() == cur.dim() {
            return cur;
        }
        cur = grown;
    }
}

pub fn decompose_braided_group(h: &WeakHopfAlgebra, bg: &BraidedGroup, opts: &SplitOptions) -> Result<Vec<Component>> {
    let bd = bg.dim();
    let dual = dual_algebra(h, bg)?;
    if dual.unit_failure().is_some() || dual.associativity_failure().is_some() {
        return Err(Error::IllFormed("(B, Δ_B, ε|_B) is not a coalgebra".into()));
    }
    if !dual.is_semisimple() {
        return Err(Error::NotCosemisimple("B* has a nonzero trace-form radical".into()));
    }
    let center = dual.center();
    let z = dual.restrict(&center, dual.unit())?;
    let idems = split_commutative(&z, opts)?;
    let pieces: Vec<Subspace> = idems
        .par_iter()
        .map(|p| {
            let p = center.element(p);
            let row = Matrix::from_columns(1, (0..bd).map(|k| SVec::single(0, p.get(k))).collect());
            let vs = (0..bd).map(|b| {
                let d = bg.comult.apply(&SVec::unit(b));
                let d2 = apply_legs(&d, &[bd, bd], &[(0, &bg.comult)]);
                apply_legs(&d2, &[bd, bd, bd], &[(0, &row), (2, &row)])
            });
            adjoint_closure(bg, &Subspace::span(bd, vs))
        })
        .collect();
    let mut merged: Vec<Subspace> = Vec::new();
    for mut s in pieces {
        loop {
            let hit = merged.iter().position(|m| m.intersect(&s).map_or(false, |i| !i.is_zero()));
            match hit {
                Some(k) => s = merged.remove(k).sum(&s)?,
                None => break,
            }
        }
        merged.push(s);
    }
    merged.sort_by_key(|s| (s.dim(), s.pivots().to_vec()));
    let total_dim: usize = merged.iter().map(Subspace::dim).sum();
    if total_dim != bd {
        return Err(Error::IllFormed(format!("components span dimension {total_dim} of {bd}")));
    }
    Ok(merged.into_iter().enumerate().map(|(index, space)| Component { index, space }).collect())
}

/// Checks independence, adjoint stability and the subcoalgebra property.
pub fn verify_components(bg: &BraidedGroup, comps: &[Component]) -> Report {
    let bd = bg.dim();
    let mut rep = Report::new();
    let sum = comps.iter().fold(Subspace::zero(bd), |acc, c| acc.sum(&c.space).expect("same ambient"));
    let dims: usize = comps.iter().map(|c| c.space.dim()).sum();
    rep.check(
        "components form a direct sum equal to B",
        (sum.dim() != bd || dims != bd).then(|| format!("sum has dim {} with total {dims}", sum.dim())),
    );
    for c in comps {
        let stable = c.space.basis().iter().all(|v| bg.module.action().iter().all(|a| c.space.contains(&a.apply(v))));
        rep.check(format!("component {} adjoint-stable", c.index), (!stable).then(|| "H·D ⊄ D".to_string()));
        let dd = tensor_square(&c.space);
        let sub = c.space.basis().iter().all(|v| dd.contains(&bg.comult.apply(v)));
        rep.check(format!("component {} subcoalgebra", c.index), (!sub).then(|| "Δ_B(D) ⊄ D ⊗ D".to_string()));
    }
    rep
}

/// `D ⊗ D` inside `B ⊗ B`.
pub fn tensor_square(d: &Subspace) -> Subspace {
    let b = d.ambient();
    Subspace::span(
        b * b,
        d.basis().iter().flat_map(|x| d.basis().iter().map(move |y| x.kron(y, b))),
    )
}
