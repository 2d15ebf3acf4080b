//! Finite-dimensional `H`-modules and the braided rigid structure of their
//! category: truncated tensor products, the unit object `H_t`, left duals
//! and the braiding induced by an R-matrix.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::tensor::{apply_element, apply_legs, permutation_matrix, permute, total};
use crate::linalg::{Matrix, SVec, Subspace};
use crate::report::Report;
use crate::wha::{RMatrix, WeakHopfAlgebra};

/// Basis element `b_i` of `H` acts by `action[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModule {
    dim: usize,
    action: Vec<Matrix>,
}

impl HModule {
    pub fn new(h: &WeakHopfAlgebra, dim: usize, action: Vec<Matrix>) -> Result<HModule> {
        if action.len() != h.dim() || action.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "module action needs {} matrices of size {dim}",
                h.dim()
            )));
        }
        Ok(HModule { dim, action })
    }

    /// Assembles a module from matrices already known to have matching sizes.
    pub(crate) fn from_parts(dim: usize, action: Vec<Matrix>) -> HModule {
        HModule { dim, action }
    }

    pub fn zero(h: &WeakHopfAlgebra) -> HModule {
        HModule { dim: 0, action: vec![Matrix::zeros(0, 0); h.dim()] }
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(h: &WeakHopfAlgebra) -> HModule {
        HModule { dim: h.dim(), action: h.lmul().to_vec() }
    }

    /// `H` acting on itself by `h·x = h_(1) x S(h_(2))`. Unital only when
    /// `Δ(1) = 1 ⊗ 1`; restrict to the braided group otherwise.
    pub fn adjoint(h: &WeakHopfAlgebra) -> HModule {
        HModule { dim: h.dim(), action: h.ad().to_vec() }
    }

    /// The unit object `H_t` with `h·z = ε_t(hz)`, in the canonical basis of `H_t`.
    pub fn unit(h: &WeakHopfAlgebra) -> HModule {
        let ht = h.h_t();
        let action = (0..h.dim())
            .map(|i| {
                let cols = ht
                    .basis()
                    .iter()
                    .map(|z| {
                        let v = h.eps_t(&h.mul(&SVec::unit(i), z));
                        ht.coords(&v).expect("ε_t lands in H_t")
                    })
                    .collect();
                Matrix::from_columns(ht.dim(), cols)
            })
            .collect();
        HModule { dim: ht.dim(), action }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of an arbitrary element of `H`.
    pub fn act(&self, x: &SVec) -> Matrix {
        x.iter().fold(Matrix::zeros(self.dim, self.dim), |acc, (i, c)| acc.add(&self.action[*i].scale(c)))
    }

    /// Restriction to an invariant subspace, in its canonical basis.
    pub fn submodule(&self, sub: &Subspace) -> Result<HModule> {
        let incl = sub.inclusion();
        let action = self
            .action
            .iter()
            .map(|a| sub.coords_matrix(&a.compose(&incl)))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::IllFormed("subspace is not invariant".into()))?;
        Ok(HModule { dim: sub.dim(), action })
    }

    /// Transports the action along an isomorphism `f: self → target`.
    pub fn conjugate(&self, f: &Matrix, f_inv: &Matrix) -> HModule {
        let action = self.action.iter().map(|a| f.compose(a).compose(f_inv)).collect();
        HModule { dim: f.rows(), action }
    }

    pub fn direct_sum(&self, other: &HModule) -> HModule {
        let (m, n) = (self.dim, other.dim);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let cols = (0..m).map(|j| a.col(j).clone()).chain((0..n).map(|j| b.col(j).shifted(m))).collect();
                Matrix::from_columns(m + n, cols)
            })
            .collect();
        HModule { dim: m + n, action }
    }

    /// `⟨h·φ, x⟩ = ⟨φ, S(h)x⟩`.
    pub fn dual(&self, h: &WeakHopfAlgebra) -> HModule {
        let action = (0..h.dim()).map(|i| self.act(&h.s(&SVec::unit(i))).transpose()).collect();
        HModule { dim: self.dim, action }
    }

    pub fn verify(&self, h: &WeakHopfAlgebra) -> Report {
        let n = h.dim();
        let mut rep = Report::new();
        let bad = (0..n * n).into_par_iter().find_first(|&t| {
            let (i, j) = (t / n, t % n);
            self.action[i].compose(&self.action[j]) != self.act(h.algebra().basis_product(i, j))
        });
        rep.check(
            "module multiplicativity",
            bad.map(|t| format!("({}, {})", h.witness(t / n), h.witness(t % n))),
        );
        let unit = self.act(h.unit()) == Matrix::identity(self.dim);
        rep.check("module unit", (!unit).then(|| "1 does not act as the identity".to_string()));
        rep
    }

    /// `Hom_H(self, other)` as a subspace of `other ⊗ self*` (row-major matrices).
    pub fn hom(&self, other: &HModule) -> Subspace {
        let (m, p) = (self.dim, other.dim);
        let pairs: Vec<(&Matrix, Matrix)> =
            other.action.iter().zip(&self.action).map(|(b, a)| (b, a.transpose())).collect();
        maps_satisfying(p, m, |f| {
            let mut out = SVec::zero();
            let mut off = 0;
            for (b, at) in &pairs {
                let d = apply_legs(f, &[p, m], &[(0, b)]).sub(&apply_legs(f, &[p, m], &[(1, at)]));
                out = out.add(&d.shifted(off));
                off += p * m;
            }
            out
        })
    }
}

/// `{f ∈ k^{rows × cols} : constraint(f) = 0}` with `f` flattened row-major.
pub fn maps_satisfying(rows: usize, cols: usize, constraint: impl Fn(&SVec) -> SVec + Sync + Send) -> Subspace {
    let unknowns = rows * cols;
    let images: Vec<SVec> = (0..unknowns).into_par_iter().map(|k| constraint(&SVec::unit(k))).collect();
    let height = images.iter().filter_map(SVec::max_index).max().map_or(0, |x| x + 1);
    Matrix::from_columns(height, images).kernel()
}

/// Row-major matrix of the flattened map `f ∈ k^{rows × cols}`.
pub fn unflatten(f: &SVec, rows: usize, cols: usize) -> Matrix {
    crate::linalg::tensor::reshape(f, rows, cols)
}

/// The action of `x ∈ H ⊗ H` on `M ⊗ N`.
pub fn pair_action(m: &HModule, n: &HModule, x: &SVec, dim_h: usize) -> Matrix {
    let mut acc = Matrix::zeros(m.dim * n.dim, m.dim * n.dim);
    for (k, c) in x.iter() {
        acc = acc.add(&m.action[k / dim_h].kron(&n.action[k % dim_h]).scale(c));
    }
    acc
}

/// `M ⊗_t N = Δ(1)(M ⊗ N)` with its `H`-action in carrier coordinates.
#[derive(Clone, Debug)]
pub struct TruncatedTensor {
    pub left_dim: usize,
    pub right_dim: usize,
    pub carrier: Subspace,
    pub module: HModule,
    /// `M ⊗ N → carrier coordinates`, the action of `Δ(1)` followed by coordinates.
    pub proj: Matrix,
    /// Ambient action matrices `Δ(b_i)` on `M ⊗ N`.
    pub ambient: Vec<Matrix>,
}

pub fn ttensor(h: &WeakHopfAlgebra, m: &HModule, n: &HModule) -> TruncatedTensor {
    let dh = h.dim();
    let ambient: Vec<Matrix> =
        (0..dh).into_par_iter().map(|i| pair_action(m, n, h.comult_matrix().col(i), dh)).collect();
    let p = pair_action(m, n, h.delta_one(), dh);
    let carrier = p.image();
    let incl = carrier.inclusion();
    let action = ambient
        .iter()
        .map(|a| carrier.coords_matrix(&a.compose(&incl)).expect("carrier is invariant"))
        .collect();
    let proj = carrier.coords_matrix(&p).expect("Δ(1) projects onto the carrier");
    TruncatedTensor {
        left_dim: m.dim,
        right_dim: n.dim,
        module: HModule { dim: carrier.dim(), action },
        carrier,
        proj,
        ambient,
    }
}

/// Image of `Δ²(1)` on `M ⊗ N ⊗ P`.
pub fn triple_carrier(h: &WeakHopfAlgebra, mods: [&HModule; 3]) -> Subspace {
    let n = h.dim();
    let d2 = apply_legs(h.delta_one(), &[n, n], &[(0, h.comult_matrix())]);
    let dims: Vec<usize> = mods.iter().map(|m| m.dim).collect();
    let legs: Vec<(usize, &[Matrix])> = mods.iter().enumerate().map(|(k, m)| (k, m.action())).collect();
    let vs: Vec<SVec> =
        (0..total(&dims)).into_par_iter().map(|j| apply_element(&SVec::unit(j), &dims, &d2, n, &legs)).collect();
    Subspace::span_par(total(&dims), vs)
}

/// Unit isomorphisms `l: H_t ⊗_t M → M` and `r: M ⊗_t H_t → M`, as maps on
/// the ambient tensor product (meaningful on the carrier), with their
/// inverses into the ambient.
#[derive(Clone, Debug)]
pub struct Unitors {
    pub l: Matrix,
    pub l_inv: Matrix,
    pub r: Matrix,
    pub r_inv: Matrix,
}

pub fn unitors(h: &WeakHopfAlgebra, m: &HModule) -> Result<Unitors> {
    let u = HModule::unit(h);
    let one = h.h_t().coords(h.unit()).expect("1 ∈ H_t");
    let dh = h.dim();
    let (t, d) = (u.dim, m.dim);
    // l⁻¹(x) = Δ(1)·(1 ⊗ x), r⁻¹(x) = Δ(1)·(x ⊗ 1).
    let pl = pair_action(&u, m, h.delta_one(), dh);
    let l_inv = Matrix::from_fn(t * d, d, |j| pl.apply(&one.kron(&SVec::unit(j), d)));
    let pr = pair_action(m, &u, h.delta_one(), dh);
    let r_inv = Matrix::from_fn(d * t, d, |j| pr.apply(&SVec::unit(j).kron(&one, t)));
    let l = left_inverse_on_image(&l_inv, &pl)?;
    let r = left_inverse_on_image(&r_inv, &pr)?;
    Ok(Unitors { l, l_inv, r, r_inv })
}

/// Given injective `g: X → V` whose image is the image of the projector `p`,
/// returns `V → X` inverting `g` on that image (via `p`).
fn left_inverse_on_image(g: &Matrix, p: &Matrix) -> Result<Matrix> {
    let img = g.image();
    if img.dim() != g.cols() {
        return Err(Error::IllFormed("unit isomorphism is not injective".into()));
    }
    let c = img.coords_matrix(g)?;
    let c_inv = c.inverse()?;
    let proj = img.coords_matrix(p).map_err(|_| Error::IllFormed("unit carrier mismatch".into()))?;
    Ok(c_inv.compose(&proj))
}

/// Evaluation `M* ⊗ M → H_t` and coevaluation `H_t → M ⊗ M*` on ambients.
#[derive(Clone, Debug)]
pub struct Duality {
    pub dual: HModule,
    pub ev: Matrix,
    pub coev: Matrix,
}

pub fn duality(h: &WeakHopfAlgebra, m: &HModule) -> Duality {
    let d = m.dim;
    let dual = m.dual(h);
    let ht = h.h_t();
    let n = h.dim();
    let d1 = h.delta_one();
    // ev(φ ⊗ x) = ⟨φ, 1_(1) x⟩ 1_(2)
    let ev = Matrix::from_fn(ht.dim(), d * d, |k| {
        let (p, q) = (k / d, k % d);
        let mut acc = SVec::zero();
        for (idx, c) in d1.iter() {
            let (a, b) = (idx / n, idx % n);
            let pairing = m.action[a].entry(p, q);
            if !pairing.is_zero() {
                acc = acc.axpy(&(&pairing * c), &SVec::unit(b));
            }
        }
        ht.coords(&acc).expect("ev lands in H_t")
    });
    // coev(z) = z·Σ x_i ⊗ x_i*
    let casimir = SVec::from_terms((0..d).map(|i| (i * d + i, crate::scalars::Scalar::one())));
    let coev = Matrix::from_columns(
        d * d,
        ht.basis()
            .iter()
            .map(|z| pair_action(m, &dual, &h.delta(z), n).apply(&casimir))
            .collect(),
    );
    Duality { dual, ev, coev }
}

/// Rigidity checks: `ev`, `coev` are module maps and both zig-zags hold.
pub fn verify_duality(h: &WeakHopfAlgebra, m: &HModule) -> Result<Report> {
    let d = m.dim;
    let dual_data = duality(h, m);
    let (ev, coev, dual) = (&dual_data.ev, &dual_data.coev, &dual_data.dual);
    let u = HModule::unit(h);
    let t = u.dim;
    let mut rep = Report::new();

    let dm = ttensor(h, dual, m);
    let ev_lin = (0..h.dim()).find(|&i| {
        let lhs = ev.compose(&dm.ambient[i]).compose(&dm.carrier.inclusion());
        let rhs = u.action[i].compose(ev).compose(&dm.carrier.inclusion());
        lhs != rhs
    });
    rep.check("ev is H-linear", ev_lin.map(|i| h.witness(i)));
    let md = ttensor(h, m, dual);
    let coev_lin = (0..h.dim()).find(|&i| md.ambient[i].compose(coev) != coev.compose(&u.action[i]));
    rep.check("coev is H-linear", coev_lin.map(|i| h.witness(i)));
    let in_carrier = coev.columns().iter().all(|c| md.carrier.contains(c));
    rep.check("coev lands in M ⊗_t M*", (!in_carrier).then(|| "coev(z) outside the carrier".to_string()));

    let um = unitors(h, m)?;
    let ud = unitors(h, dual)?;
    // x ↦ r((id ⊗ ev)(coev ⊗ id)(l⁻¹ x))
    let zig = Matrix::from_fn(d, d, |j| {
        let v = um.l_inv.apply(&SVec::unit(j));
        let v = apply_legs(&v, &[t, d], &[(0, coev)]);
        let v = apply_legs(&v, &[d, d * d], &[(1, ev)]);
        um.r.apply(&v)
    });
    rep.check("zig-zag on M", zig.first_difference(&Matrix::identity(d)).map(|j| format!("basis vector {j}")));
    // φ ↦ l((ev ⊗ id)(id ⊗ coev)(r⁻¹ φ))
    let zag = Matrix::from_fn(d, d, |j| {
        let v = ud.r_inv.apply(&SVec::unit(j));
        let v = apply_legs(&v, &[d, t], &[(1, coev)]);
        let v = apply_legs(&v, &[d * d, d], &[(0, ev)]);
        ud.l.apply(&v)
    });
    rep.check("zig-zag on M*", zag.first_difference(&Matrix::identity(d)).map(|j| format!("basis vector {j}")));
    Ok(rep)
}

/// `c_{M,N} = τ ∘ R·` on `M ⊗ N → N ⊗ M`, and its inverse `R̄· ∘ τ`.
pub fn braiding(h: &WeakHopfAlgebra, m: &HModule, n: &HModule, r: &RMatrix) -> (Matrix, Matrix) {
    let dh = h.dim();
    let swap_mn = permutation_matrix(&[m.dim, n.dim], &[1, 0]);
    let swap_nm = permutation_matrix(&[n.dim, m.dim], &[1, 0]);
    let c = swap_mn.compose(&pair_action(m, n, &r.r, dh));
    let c_inv = pair_action(m, n, &r.rbar, dh).compose(&swap_nm);
    (c, c_inv)
}

/// Braiding checks for a pair of modules: carriers preserved, inverse,
/// `H`-linearity.
pub fn verify_braiding(h: &WeakHopfAlgebra, m: &HModule, n: &HModule, r: &RMatrix) -> Report {
    let mut rep = Report::new();
    let (c, c_inv) = braiding(h, m, n, r);
    let mn = ttensor(h, m, n);
    let nm = ttensor(h, n, m);
    let maps_in = mn.carrier.basis().iter().all(|v| nm.carrier.contains(&c.apply(v)));
    rep.check("braiding preserves carriers", (!maps_in).then(|| "c(M ⊗_t N) ⊄ N ⊗_t M".to_string()));
    let inv1 = mn.carrier.basis().iter().position(|v| c_inv.apply(&c.apply(v)) != *v);
    let inv2 = nm.carrier.basis().iter().position(|v| c.apply(&c_inv.apply(v)) != *v);
    rep.check(
        "braiding inverse",
        inv1.map(|k| format!("c⁻¹c at carrier vector {k}"))
            .or_else(|| inv2.map(|k| format!("cc⁻¹ at carrier vector {k}"))),
    );
    let lin = (0..h.dim()).find(|&i| {
        mn.carrier.basis().iter().any(|v| c.apply(&mn.ambient[i].apply(v)) != nm.ambient[i].apply(&c.apply(v)))
    });
    rep.check("braiding is H-linear", lin.map(|i| h.witness(i)));
    rep
}

/// Both hexagon identities on the carrier of `M ⊗ N ⊗ P`.
pub fn verify_hexagons(h: &WeakHopfAlgebra, mods: [&HModule; 3], r: &RMatrix) -> Report {
    let dh = h.dim();
    let dims: Vec<usize> = mods.iter().map(|m| m.dim).collect();
    let acts: Vec<&[Matrix]> = mods.iter().map(|m| m.action()).collect();
    let carrier = triple_carrier(h, mods);
    let id_delta = apply_legs(&r.r, &[dh, dh], &[(1, h.comult_matrix())]);
    let delta_id = apply_legs(&r.r, &[dh, dh], &[(0, h.comult_matrix())]);
    let mut rep = Report::new();

    let hex1 = carrier.basis().par_iter().position_first(|v| {
        let lhs = apply_element(v, &dims, &id_delta, dh, &[(0, acts[0]), (1, acts[1]), (2, acts[2])]);
        let lhs = permute(&lhs, &dims, &[1, 2, 0]);
        let w = apply_element(v, &dims, &r.r, dh, &[(0, acts[0]), (1, acts[1])]);
        let w = permute(&w, &dims, &[1, 0, 2]);
        let d2 = [dims[1], dims[0], dims[2]];
        let w = apply_element(&w, &d2, &r.r, dh, &[(1, acts[0]), (2, acts[2])]);
        let rhs = permute(&w, &d2, &[0, 2, 1]);
        lhs != rhs
    });
    rep.check("hexagon c_{M,N⊗P}", hex1.map(|k| format!("carrier vector {k}")));

    let hex2 = carrier.basis().par_iter().position_first(|v| {
        let lhs = apply_element(v, &dims, &delta_id, dh, &[(0, acts[0]), (1, acts[1]), (2, acts[2])]);
        let lhs = permute(&lhs, &dims, &[2, 0, 1]);
        let w = apply_element(v, &dims, &r.r, dh, &[(1, acts[1]), (2, acts[2])]);
        let w = permute(&w, &dims, &[0, 2, 1]);
        let d2 = [dims[0], dims[2], dims[1]];
        let w = apply_element(&w, &d2, &r.r, dh, &[(0, acts[0]), (1, acts[2])]);
        let rhs = permute(&w, &d2, &[1, 0, 2]);
        lhs != rhs
    });
    rep.check("hexagon c_{M⊗N,P}", hex2.map(|k| format!("carrier vector {k}")));
    rep
}

/// Naturality of `c_{H,N}` and `c_{N,H}` under right multiplications of
/// the regular module, and `l ∘ c_{M,H_t} = r`.
pub fn verify_naturality(h: &WeakHopfAlgebra, n: &HModule, r: &RMatrix) -> Result<Report> {
    let reg = HModule::regular(h);
    let dh = h.dim();
    let mut rep = Report::new();
    let (c_hn, _) = braiding(h, &reg, n, r);
    let (c_nh, _) = braiding(h, n, &reg, r);
    let hn = ttensor(h, &reg, n);
    let nh = ttensor(h, n, &reg);
    let idn = Matrix::identity(n.dim);
    let bad = (0..dh).into_par_iter().find_first(|&a| {
        let ra = &h.rmul()[a];
        let left = c_hn.compose(&ra.kron(&idn));
        let right = idn.kron(ra).compose(&c_hn);
        let left2 = c_nh.compose(&idn.kron(ra));
        let right2 = ra.kron(&idn).compose(&c_nh);
        hn.carrier.basis().iter().any(|v| left.apply(v) != right.apply(v))
            || nh.carrier.basis().iter().any(|v| left2.apply(v) != right2.apply(v))
    });
    rep.check("braiding natural in right multiplications", bad.map(|a| format!("a = {}", h.witness(a))));

    let u = HModule::unit(h);
    let un = unitors(h, n)?;
    let (c_nu, _) = braiding(h, n, &u, r);
    let nu = ttensor(h, n, &u);
    let bad = nu.carrier.basis().iter().position(|v| un.l.apply(&c_nu.apply(v)) != un.r.apply(v));
    rep.check("l ∘ c_{M,H_t} = r", bad.map(|k| format!("carrier vector {k}")));
    Ok(rep)
}
