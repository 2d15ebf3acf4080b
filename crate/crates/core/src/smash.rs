//! Module algebras, the weak smash product `A#H`, the isomorphism
//! `H ⊗_{H_t} A ≅ A#H` of right `A`-modules, invariants with the `β_M`
//! isomorphism, and consistency checks for `(A#H)#H*`.

use rayon::prelude::*;

use crate::braided::BraidedGroup;
use crate::error::{Error, Result};
use crate::linalg::commalg::{split_commutative, SplitOptions};
use crate::linalg::tensor::apply_legs;
use crate::linalg::{Algebra, Matrix, Quotient, SVec, Subspace};
use crate::repcat::{maps_satisfying, unflatten, HModule};
use crate::report::Report;
use crate::wha::{split_terms, WeakHopfAlgebra};

/// An algebra `A` with an `H`-action on the same carrier.
#[derive(Clone, Debug)]
pub struct ModuleAlgebra {
    pub algebra: Algebra,
    pub module: HModule,
}

impl ModuleAlgebra {
    /// `H_t` with `h·z = ε_t(hz)`.
    pub fn target_subalgebra(h: &WeakHopfAlgebra) -> Result<ModuleAlgebra> {
        let ht = h.h_t();
        let algebra = h.algebra().restrict(ht, h.unit())?;
        Ok(ModuleAlgebra { algebra, module: HModule::unit(h) })
    }

    /// The braided group `B` with the adjoint action.
    pub fn braided_group(h: &WeakHopfAlgebra, bg: &BraidedGroup) -> Result<ModuleAlgebra> {
        let algebra = h.algebra().restrict(&bg.carrier, h.unit())?;
        Ok(ModuleAlgebra { algebra, module: bg.module.clone() })
    }

    /// `H*` with `(h ⇀ f)(x) = f(xh)`.
    pub fn dual_hit(h: &WeakHopfAlgebra) -> Result<ModuleAlgebra> {
        let dual = h.dual()?;
        let n = h.dim();
        let action = (0..n)
            .map(|i| Matrix::from_fn(n, n, |k| SVec::from_terms((0..n).map(|j| (j, h.algebra().basis_product(j, i).get(k))))))
            .collect();
        Ok(ModuleAlgebra { algebra: dual.algebra().clone(), module: HModule::new(h, n, action)? })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Multiplicativity `h·(ab) = (h_(1)·a)(h_(2)·b)` and `h·1 = ε_t(h)·1`,
    /// on all basis triples.
    pub fn verify(&self, h: &WeakHopfAlgebra) -> Report {
        let (n, d) = (h.dim(), self.dim());
        let a = &self.algebra;
        let acts = self.module.action();
        let mut rep = Report::new();
        rep.check(
            "module algebra associativity",
            a.associativity_failure().map(|(i, j, k)| format!("({i}, {j}, {k})")),
        );
        rep.check("module algebra unit", a.unit_failure().map(|i| format!("basis {i}")));
        rep.extend(self.module.verify(h));
        let bad = (0..n * d * d).into_par_iter().find_first(|&t| {
            let (i, x, y) = (t / (d * d), (t / d) % d, t % d);
            let lhs = acts[i].apply(a.basis_product(x, y));
            let rhs = h.delta_terms(i).into_iter().fold(SVec::zero(), |acc, (p, q, c)| {
                acc.axpy(&c, &a.mul(acts[p].col(x), acts[q].col(y)))
            });
            lhs != rhs
        });
        rep.check(
            "h·(ab) = (h_(1)·a)(h_(2)·b)",
            bad.map(|t| format!("h = {}, a = {}, b = {}", h.witness(t / (d * d)), (t / d) % d, t % d)),
        );
        let unit = (0..n).find(|&i| {
            acts[i].apply(a.unit()) != self.module.act(&h.eps_t(&SVec::unit(i))).apply(a.unit())
        });
        rep.check("h·1 = ε_t(h)·1", unit.map(|i| h.witness(i)));
        rep
    }
}

/// `A#H`: the image of the balancing projector `a ⊗ h ↦ 1_(1)·a ⊗ 1_(2)h`
/// on `A ⊗ H`, with the smash multiplication in the basis of that image.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub a_dim: usize,
    pub h_dim: usize,
    pub projector: Matrix,
    pub carrier: Subspace,
    /// `A ⊗ H → carrier coordinates`, through the projector.
    pub to_carrier: Matrix,
    pub algebra: Algebra,
    /// Products of ambient basis pairs in `A ⊗ H` (before projection).
    ambient_table: Vec<SVec>,
}

impl SmashProduct {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Class of `a ⊗ h` in carrier coordinates.
    pub fn class(&self, a: &SVec, hh: &SVec) -> SVec {
        self.to_carrier.apply(&a.kron(hh, self.h_dim))
    }

    fn ambient_mul(&self, x: &SVec, y: &SVec) -> SVec {
        let amb = self.a_dim * self.h_dim;
        SVec::from_terms(x.iter().flat_map(|(i, a)| {
            y.iter().flat_map(move |(j, b)| {
                let ab = a * b;
                self.ambient_table[i * amb + j].iter().map(move |(k, c)| (*k, c * &ab)).collect::<Vec<_>>()
            })
        }))
    }
}

/// The balancing relations `(S⁻¹(z)·a) ⊗ h - a ⊗ zh` for `z ∈ H_t`.
pub fn balancing_relations(h: &WeakHopfAlgebra, ma: &ModuleAlgebra) -> Result<Subspace> {
    let (n, d) = (h.dim(), ma.dim());
    let targets = h.h_t().basis().iter().map(|z| Ok((z.clone(), h.s_inv(z)?))).collect::<Result<Vec<_>>>()?;
    let gens: Vec<SVec> = targets
        .par_iter()
        .flat_map_iter(|(z, s_z)| {
            let sz = ma.module.act(s_z);
            let lz = h.algebra().left_matrix(z);
            (0..d * n).map(move |idx| {
                let v = SVec::unit(idx);
                apply_legs(&v, &[d, n], &[(0, &sz)]).sub(&apply_legs(&v, &[d, n], &[(1, &lz)]))
            })
        })
        .collect();
    Ok(Subspace::span_par(d * n, gens))
}

pub fn smash_build(h: &WeakHopfAlgebra, ma: &ModuleAlgebra) -> Result<SmashProduct> {
    let (n, d) = (h.dim(), ma.dim());
    let amb = n * d;
    let acts = ma.module.action();
    let projector = split_terms(h.delta_one(), n).into_iter().fold(Matrix::zeros(amb, amb), |acc, (x, y, c)| {
        acc.add(&acts[x].kron(&h.lmul()[y]).scale(&c))
    });
    if projector.compose(&projector) != projector {
        return Err(Error::IllFormed("balancing projector is not idempotent".into()));
    }
    let carrier = projector.image();
    let to_carrier = carrier.coords_matrix(&projector)?;

    let a = &ma.algebra;
    let ambient_table: Vec<SVec> = (0..amb * amb)
        .into_par_iter()
        .map(|t| {
            let (u, v) = (t / amb, t % amb);
            let (ai, hi) = (u / n, u % n);
            let (bi, gi) = (v / n, v % n);
            let mut acc = SVec::zero();
            for (x, y, c) in h.delta_terms(hi) {
                let left = a.mul(&SVec::unit(ai), acts[x].col(bi));
                let right = h.algebra().basis_product(y, gi);
                acc = acc.axpy(&c, &left.kron(right, n));
            }
            acc
        })
        .collect();
    let mut sp = SmashProduct {
        a_dim: d,
        h_dim: n,
        projector,
        carrier,
        to_carrier,
        algebra: Algebra::new(h.field().clone(), 0, Vec::new(), SVec::zero())?,
        ambient_table,
    };
    let s = sp.dim();
    let basis = sp.carrier.basis().to_vec();
    let table = (0..s * s)
        .into_par_iter()
        .map(|t| sp.to_carrier.apply(&sp.ambient_mul(&basis[t / s], &basis[t % s])))
        .collect();
    let unit = sp.class(a.unit(), h.unit());
    sp.algebra = Algebra::new(h.field().clone(), s, table, unit)?;
    Ok(sp)
}

/// Structural checks of `A#H`: the projector's kernel is the balancing
/// relation space, products descend to classes, associativity and unit.
pub fn smash_verify(h: &WeakHopfAlgebra, ma: &ModuleAlgebra, sp: &SmashProduct, exhaustive: bool) -> Result<Report> {
    let amb = sp.a_dim * sp.h_dim;
    let rels = balancing_relations(h, ma)?;
    let kernel = sp.projector.kernel();
    let mut rep = Report::new();
    rep.check("ker P = balancing relations", (kernel != rels).then(|| format!("dim ker P = {}, relations {}", kernel.dim(), rels.dim())));
    let descend = rels.basis().par_iter().position_first(|r| {
        (0..amb).any(|k| {
            let e = SVec::unit(k);
            !sp.to_carrier.apply(&sp.ambient_mul(r, &e)).is_zero() || !sp.to_carrier.apply(&sp.ambient_mul(&e, r)).is_zero()
        })
    });
    rep.check("smash product descends to classes", descend.map(|k| format!("relation {k}")));
    if exhaustive {
        rep.check(
            "smash associativity",
            sp.algebra.associativity_failure().map(|(i, j, k)| format!("({i}, {j}, {k})")),
        );
    }
    rep.check("smash unit", sp.algebra.unit_failure().map(|i| format!("basis {i}")));
    Ok(rep)
}

/// `Φ: H ⊗_{H_t} A → A#H`, `h ⊗ a ↦ (h_(1)·a) # h_(2)`, with the inverse
/// `a # h ↦ h_(2) ⊗ S⁻¹(h_(1))·a`.
pub fn phi_check(h: &WeakHopfAlgebra, ma: &ModuleAlgebra, sp: &SmashProduct) -> Result<Report> {
    let (n, d) = (h.dim(), ma.dim());
    let amb = n * d;
    let acts = ma.module.action();
    let a = &ma.algebra;
    let s_inv = h.antipode_inv()?;

    // H ⊗ A modulo hz ⊗ a - h ⊗ z·a.
    let gens: Vec<SVec> = h
        .h_t()
        .basis()
        .iter()
        .flat_map(|z| {
            let rz = h.algebra().right_matrix(z);
            let az = ma.module.act(z);
            (0..amb).map(move |idx| {
                let v = SVec::unit(idx);
                apply_legs(&v, &[n, d], &[(0, &rz)]).sub(&apply_legs(&v, &[n, d], &[(1, &az)]))
            })
        })
        .collect();
    let rels = Subspace::span_par(amb, gens);
    let q: Quotient = rels.quotient();

    let phi_amb = Matrix::from_fn(amb, amb, |idx| {
        let (hi, ai) = (idx / d, idx % d);
        h.delta_terms(hi).into_iter().fold(SVec::zero(), |acc, (x, y, c)| acc.axpy(&c, &acts[x].col(ai).kron(&SVec::unit(y), n)))
    });
    let psi_amb = Matrix::from_fn(amb, amb, |idx| {
        let (ai, hi) = (idx / n, idx % n);
        h.delta_terms(hi).into_iter().fold(SVec::zero(), |acc, (x, y, c)| {
            let sa = ma.module.act(s_inv.col(x)).apply(&SVec::unit(ai));
            acc.axpy(&c, &SVec::unit(y).kron(&sa, d))
        })
    });
    let lift = Matrix::from_columns(amb, (0..q.dim()).map(|k| q.lift(&SVec::unit(k))).collect());
    let proj = q.projection();
    let phi = sp.to_carrier.compose(&phi_amb).compose(&lift);
    let psi = proj.compose(&psi_amb).compose(&sp.carrier.inclusion());

    let mut rep = Report::new();
    let wd = rels.basis().iter().position(|r| !sp.to_carrier.apply(&phi_amb.apply(r)).is_zero());
    rep.check("Φ well defined", wd.map(|k| format!("relation {k}")));
    let wd_inv = sp.projector.kernel().basis().iter().position(|r| !proj.apply(&psi_amb.apply(r)).is_zero());
    rep.check("Φ⁻¹ well defined", wd_inv.map(|k| format!("relation {k}")));
    let square = phi.rows() == phi.cols() && phi.rank() == phi.cols();
    rep.check("Φ bijective", (!square).then(|| format!("{}×{} of rank {}", phi.rows(), phi.cols(), phi.rank())));
    let id1 = phi.compose(&psi).first_difference(&Matrix::identity(sp.dim()));
    let id2 = psi.compose(&phi).first_difference(&Matrix::identity(q.dim()));
    rep.check(
        "Φ⁻¹ is the inverse",
        id1.map(|j| format!("Φ Φ⁻¹ at column {j}")).or(id2.map(|j| format!("Φ⁻¹ Φ at column {j}"))),
    );

    // Right A-actions: (h ⊗ a)·b = h ⊗ ab and x·b = x (b # 1).
    let lin = (0..d).into_par_iter().find_first(|&b| {
        let rb = a.right_matrix(&SVec::unit(b));
        let on_q = proj.compose(&Matrix::identity(n).kron(&rb)).compose(&lift);
        let b1 = sp.class(&SVec::unit(b), h.unit());
        let on_s = sp.algebra.right_matrix(&b1);
        phi.compose(&on_q) != on_s.compose(&phi)
    });
    rep.check("Φ right A-linear", lin.map(|b| format!("b = {b}")));
    Ok(rep)
}

/// `Inv M`, `Inv M*` and the isomorphism `β_M: Inv M* → Hom_H(M, H_t)`.
#[derive(Clone, Debug)]
pub struct Invariants {
    pub inv: Subspace,
    pub inv_dual: Subspace,
    pub hom_to_unit: Subspace,
    pub report: Report,
}

pub fn invariants_beta(h: &WeakHopfAlgebra, m: &HModule) -> Invariants {
    let (n, dm) = (h.dim(), m.dim());
    let u = HModule::unit(h);
    let t = u.dim();
    let stack = |f: &(dyn Fn(usize) -> Matrix + Sync)| {
        Matrix::from_fn(n * dm, dm, |j| {
            SVec::from_terms((0..n).flat_map(|i| f(i).col(j).shifted(i * dm).into_entries()))
        })
    };
    let inv = stack(&|i| m.action()[i].sub(&m.act(&h.eps_t(&SVec::unit(i))))).kernel();
    let inv_dual = stack(&|i| m.action()[i].sub(&m.act(&h.eps_s(&SVec::unit(i)))).transpose()).kernel();
    let hom_to_unit = m.hom(&u);

    // β(φ) as a row-major t × dm matrix; (φ(-·m) ⊗ id)Δ(1) always lies in H_t.
    let ht = h.h_t();
    let d1 = split_terms(h.delta_one(), n);
    let beta = Matrix::from_fn(t * dm, dm, |k| {
        let phi = SVec::unit(k);
        let rows: Vec<SVec> = d1.iter().map(|(x, _, _)| m.action()[*x].transpose().apply(&phi)).collect();
        let mut terms = Vec::new();
        for col in 0..dm {
            let v = SVec::from_terms(d1.iter().zip(&rows).map(|((_, y, c), row)| (*y, c * &row.get(col))));
            let z = ht.coords(&v).expect("(φ ⊗ id)Δ(1) lies in H_t");
            terms.extend(z.into_entries().into_iter().map(|(zi, zc)| (zi * dm + col, zc)));
        }
        SVec::from_terms(terms)
    });
    let eps_row = Matrix::from_columns(1, ht.basis().iter().map(|z| SVec::single(0, h.eps(z))).collect());
    let beta_inv = Matrix::from_fn(dm, t * dm, |idx| {
        let f = unflatten(&SVec::unit(idx), t, dm);
        eps_row.compose(&f).transpose().col(0).clone()
    });

    let mut report = Report::new();
    let image = inv_dual.map(&beta);
    report.check(
        "β maps Inv M* onto Hom_H(M, H_t)",
        (image != hom_to_unit).then(|| format!("image dim {} vs Hom dim {}", image.dim(), hom_to_unit.dim())),
    );
    let left = inv_dual.basis().iter().position(|v| beta_inv.apply(&beta.apply(v)) != *v);
    let right = hom_to_unit.basis().iter().position(|f| beta.apply(&beta_inv.apply(f)) != *f);
    report.check(
        "β⁻¹ β = id and β β⁻¹ = id",
        left.map(|k| format!("Inv M* vector {k}")).or(right.map(|k| format!("Hom vector {k}"))),
    );
    Invariants { inv, inv_dual, hom_to_unit, report }
}

/// Block dimensions of a split semisimple algebra, sorted; `None` if not semisimple.
pub fn block_dims(a: &Algebra, opts: &SplitOptions) -> Result<Option<Vec<usize>>> {
    if !a.is_semisimple() {
        return Ok(None);
    }
    let center = a.center();
    let z = a.restrict(&center, a.unit())?;
    let idems = split_commutative(&z, opts)?;
    let mut dims: Vec<usize> = idems
        .iter()
        .map(|e| {
            let e = center.element(e);
            Subspace::span(a.dim(), (0..a.dim()).map(|k| a.mul(&e, &SVec::unit(k)))).dim()
        })
        .collect();
    dims.sort_unstable();
    Ok(Some(dims))
}

/// Data gathered by [`dual_smash_check`].
#[derive(Clone, Debug)]
pub struct DualSmash {
    pub smash_dim: usize,
    pub double_smash_dim: usize,
    pub end_dim: usize,
    pub double_blocks: Option<Vec<usize>>,
    pub end_blocks: Option<Vec<usize>>,
    pub report: Report,
}

/// Builds `(A#H)#H*` with `f·(a#h) = a # (f ⇀ h)` and compares it with
/// `End(A#H)_A`.
pub fn dual_smash_check(h: &WeakHopfAlgebra, ma: &ModuleAlgebra, sp: &SmashProduct, opts: &SplitOptions) -> Result<DualSmash> {
    let n = h.dim();
    let d = ma.dim();
    let hd = h.dual()?;
    let s = sp.dim();
    let incl = sp.carrier.inclusion();

    // f_k ⇀ b_i = Σ b_x ⟨f_k, b_y⟩ over Δ(b_i) = Σ b_x ⊗ b_y.
    let hit: Vec<Matrix> = (0..n)
        .map(|k| {
            Matrix::from_fn(n, n, |i| {
                SVec::from_terms(h.delta_terms(i).into_iter().filter(|(_, y, _)| *y == k).map(|(x, _, c)| (x, c)))
            })
        })
        .collect();
    let action: Vec<Matrix> = hit
        .iter()
        .map(|m| sp.to_carrier.compose(&Matrix::identity(d).kron(m)).compose(&incl))
        .collect();
    let smash_alg = ModuleAlgebra { algebra: sp.algebra.clone(), module: HModule::new(&hd, s, action)? };
    let mut report = Report::new();
    let mav = smash_alg.verify(&hd);
    let ok = mav.passed();
    for c in mav.checks {
        report.push(crate::report::Check { name: format!("A#H as H*-module algebra: {}", c.name), ..c });
    }
    if !ok {
        return Ok(DualSmash {
            smash_dim: s,
            double_smash_dim: 0,
            end_dim: 0,
            double_blocks: None,
            end_blocks: None,
            report,
        });
    }
    let double = smash_build(&hd, &smash_alg)?;

    // End(A#H)_A: commutant of right multiplication by b # 1.
    let rights: Vec<Matrix> =
        (0..d).map(|b| sp.algebra.right_matrix(&sp.class(&SVec::unit(b), h.unit()))).collect();
    let pairs: Vec<(Matrix, Matrix)> = rights.iter().map(|r| (r.clone(), r.transpose())).collect();
    let end_space = maps_satisfying(s, s, |f| {
        let mut out = SVec::zero();
        for (k, (r, rt)) in pairs.iter().enumerate() {
            let diff = apply_legs(f, &[s, s], &[(0, r)]).sub(&apply_legs(f, &[s, s], &[(1, rt)]));
            out = out.add(&diff.shifted(k * s * s));
        }
        out
    });
    let maps: Vec<Matrix> = end_space.basis().iter().map(|f| unflatten(f, s, s)).collect();
    let e = maps.len();
    let table = (0..e * e)
        .into_par_iter()
        .map(|t| {
            end_space
                .coords(&crate::linalg::tensor::flatten(&maps[t / e].compose(&maps[t % e])))
                .ok_or_else(|| Error::IllFormed("commutant not closed".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = end_space
        .coords(&crate::linalg::tensor::flatten(&Matrix::identity(s)))
        .ok_or_else(|| Error::IllFormed("identity outside the commutant".into()))?;
    let end_alg = Algebra::new(h.field().clone(), e, table, unit)?;

    report.check(
        "dim (A#H)#H* = dim End(A#H)_A",
        (double.dim() != e).then(|| format!("{} vs {e}", double.dim())),
    );
    let double_blocks = block_dims(&double.algebra, opts)?;
    let end_blocks = block_dims(&end_alg, opts)?;
    if let (Some(x), Some(y)) = (&double_blocks, &end_blocks) {
        report.check("block dimensions agree", (x != y).then(|| format!("{x:?} vs {y:?}")));
    }
    let a_ss = ma.algebra.is_semisimple();
    let smash_ss = sp.algebra.is_semisimple();
    let h_cosemisimple = hd.algebra().is_semisimple();
    report.check(
        "A#H semisimple and H cosemisimple ⇒ A semisimple",
        (smash_ss && h_cosemisimple && !a_ss).then(|| "A has a nonzero radical".to_string()),
    );
    Ok(DualSmash {
        smash_dim: s,
        double_smash_dim: double.dim(),
        end_dim: e,
        double_blocks,
        end_blocks,
        report,
    })
}
