//! Group algebras, groupoid algebras and Drinfeld doubles from finite tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SVec};
use crate::scalars::{Field, Scalar};
use crate::wha::WeakHopfAlgebra;

/// A finite group by its Cayley table; `mult[a][b] = ab`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub labels: Vec<String>,
    pub mult: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub identity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite groupoid; `compose[f][g] = f ∘ g` when `source(f) = target(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidTable {
    pub objects: usize,
    pub morphisms: Vec<Morphism>,
    pub compose: Vec<Vec<Option<usize>>>,
    pub identities: Vec<usize>,
    pub inverse: Vec<usize>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        let bad = |m: String| Err(Error::InvalidTable(m));
        if n == 0 {
            return bad("empty group".into());
        }
        if self.mult.len() != n || self.mult.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return bad("multiplication table has the wrong shape".into());
        }
        if self.inverse.len() != n || self.identity >= n {
            return bad("inverse table or identity out of range".into());
        }
        let e = self.identity;
        for a in 0..n {
            if self.mult[e][a] != a || self.mult[a][e] != a {
                return bad(format!("{} is not an identity for {}", self.labels[e], self.labels[a]));
            }
            if self.mult[a][self.inverse[a]] != e || self.mult[self.inverse[a]][a] != e {
                return bad(format!("wrong inverse for {}", self.labels[a]));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]] {
                        return bad(format!(
                            "not associative at ({}, {}, {})",
                            self.labels[a], self.labels[b], self.labels[c]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The group of permutations of `0..k`, composed right to left.
    pub fn symmetric(k: usize) -> GroupTable {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..k {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let mut elems = perms(k);
        elems.sort();
        let index = |p: &Vec<usize>| elems.iter().position(|q| q == p).unwrap();
        let compose = |p: &Vec<usize>, q: &Vec<usize>| q.iter().map(|&i| p[i]).collect::<Vec<_>>();
        let mult = elems.iter().map(|p| elems.iter().map(|q| index(&compose(p, q))).collect()).collect();
        let inverse = elems
            .iter()
            .map(|p| {
                let mut inv = vec![0; k];
                for (i, &x) in p.iter().enumerate() {
                    inv[x] = i;
                }
                index(&inv)
            })
            .collect();
        let labels = elems.iter().map(|p| cycle_label(p)).collect();
        GroupTable { labels, mult, inverse, identity: index(&(0..k).collect()) }
    }

    pub fn cyclic(n: usize) -> GroupTable {
        GroupTable {
            labels: (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g^{i}") }).collect(),
            mult: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            inverse: (0..n).map(|a| (n - a) % n).collect(),
            identity: 0,
        }
    }

    /// Conjugacy classes by brute force, each sorted, in order of first element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.mult[self.mult[g][a]][self.inverse[g]]).collect();
            class.sort();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.order()).filter(|&g| self.mult[g][a] == self.mult[a][g]).collect()
    }

    /// The groupoid with one object.
    pub fn as_groupoid(&self) -> GroupoidTable {
        GroupoidTable {
            objects: 1,
            morphisms: self.labels.iter().map(|l| Morphism { label: l.clone(), source: 0, target: 0 }).collect(),
            compose: self.mult.iter().map(|r| r.iter().map(|&x| Some(x)).collect()).collect(),
            identities: vec![self.identity],
            inverse: self.inverse.clone(),
        }
    }
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut x = p[s];
        while x != s {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

impl GroupoidTable {
    pub fn size(&self) -> usize {
        self.morphisms.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.size();
        let bad = |m: String| Err(Error::InvalidTable(m));
        if self.compose.len() != n || self.compose.iter().any(|r| r.len() != n) {
            return bad("composition table has the wrong shape".into());
        }
        if self.identities.len() != self.objects || self.inverse.len() != n {
            return bad("identity or inverse table has the wrong length".into());
        }
        if self.morphisms.iter().any(|m| m.source >= self.objects || m.target >= self.objects) {
            return bad("object index out of range".into());
        }
        let m = &self.morphisms;
        for f in 0..n {
            for g in 0..n {
                let defined = m[f].source == m[g].target;
                match self.compose[f][g] {
                    Some(h) if defined => {
                        if h >= n || m[h].source != m[g].source || m[h].target != m[f].target {
                            return bad(format!("bad composite {} ∘ {}", m[f].label, m[g].label));
                        }
                    }
                    None if !defined => {}
                    _ => return bad(format!("composability mismatch for {} ∘ {}", m[f].label, m[g].label)),
                }
            }
        }
        for (x, &id) in self.identities.iter().enumerate() {
            if id >= n || m[id].source != x || m[id].target != x {
                return bad(format!("identity of object {x} is not an endomorphism of it"));
            }
        }
        for f in 0..n {
            let (s, t) = (m[f].source, m[f].target);
            if self.compose[f][self.identities[s]] != Some(f) || self.compose[self.identities[t]][f] != Some(f) {
                return bad(format!("identity law fails at {}", m[f].label));
            }
            let inv = self.inverse[f];
            if inv >= n
                || self.compose[f][inv] != Some(self.identities[t])
                || self.compose[inv][f] != Some(self.identities[s])
            {
                return bad(format!("wrong inverse for {}", m[f].label));
            }
            for g in 0..n {
                for h in 0..n {
                    let left = self.compose[f][g].and_then(|fg| self.compose[fg][h]);
                    let right = self.compose[g][h].and_then(|gh| self.compose[f][gh]);
                    if left != right {
                        return bad(format!("not associative at ({}, {}, {})", m[f].label, m[g].label, m[h].label));
                    }
                }
            }
        }
        Ok(())
    }

    /// All morphisms `i → j` for `objects` objects, one per ordered pair.
    pub fn indiscrete(objects: usize) -> GroupoidTable {
        let idx = |s: usize, t: usize| t * objects + s;
        let morphisms = (0..objects * objects)
            .map(|k| {
                let (t, s) = (k / objects, k % objects);
                let label = if s == t { format!("id{}", s + 1) } else { format!("f{}{}", t + 1, s + 1) };
                Morphism { label, source: s, target: t }
            })
            .collect::<Vec<_>>();
        let compose = morphisms
            .iter()
            .map(|f| morphisms.iter().map(|g| (f.source == g.target).then(|| idx(g.source, f.target))).collect())
            .collect();
        GroupoidTable {
            objects,
            compose,
            identities: (0..objects).map(|x| idx(x, x)).collect(),
            inverse: morphisms.iter().map(|f| idx(f.target, f.source)).collect(),
            morphisms,
        }
    }

    /// Only identity morphisms.
    pub fn discrete(objects: usize) -> GroupoidTable {
        GroupoidTable {
            objects,
            morphisms: (0..objects)
                .map(|x| Morphism { label: format!("id{}", x + 1), source: x, target: x })
                .collect(),
            compose: (0..objects).map(|f| (0..objects).map(|g| (f == g).then_some(f)).collect()).collect(),
            identities: (0..objects).collect(),
            inverse: (0..objects).collect(),
        }
    }
}

/// A weak Hopf algebra with a candidate R-matrix.
#[derive(Clone, Debug)]
pub struct Example {
    pub algebra: WeakHopfAlgebra,
    pub r: SVec,
}

/// `k G` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹` and `R = 1 ⊗ 1`.
pub fn build_group_algebra(g: &GroupTable, field: &Field) -> Result<Example> {
    g.validate()?;
    let mut ex = build_groupoid_algebra(&g.as_groupoid(), field)?;
    let n = g.order();
    ex.r = SVec::unit(g.identity * n + g.identity);
    Ok(ex)
}

/// The groupoid algebra with `R = Δ(1)`.
pub fn build_groupoid_algebra(gd: &GroupoidTable, field: &Field) -> Result<Example> {
    gd.validate()?;
    let n = gd.size();
    let mult = (0..n * n).map(|t| gd.compose[t / n][t % n].map_or_else(SVec::zero, SVec::unit)).collect();
    let unit = SVec::from_terms(gd.identities.iter().map(|&i| (i, Scalar::one())));
    let comult = (0..n).map(|g| SVec::unit(g * n + g)).collect();
    let counit = SVec::from_terms((0..n).map(|g| (g, Scalar::one())));
    let antipode = Matrix::from_columns(n, gd.inverse.iter().map(|&i| SVec::unit(i)).collect());
    let labels = gd.morphisms.iter().map(|m| m.label.clone()).collect();
    let algebra = WeakHopfAlgebra::new(field.clone(), labels, mult, unit, comult, counit, antipode)?;
    let r = algebra.delta_one().clone();
    Ok(Example { algebra, r })
}

/// `D(G)` on the basis `δ_a ⋈ g` (index `a·|G| + g`) with its canonical R-matrix.
pub fn build_drinfeld_double(g: &GroupTable, field: &Field) -> Result<Example> {
    g.validate()?;
    let n = g.order();
    let (m, inv, e) = (&g.mult, &g.inverse, g.identity);
    let idx = |a: usize, x: usize| a * n + x;
    let conj = |x: usize, b: usize| m[m[x][b]][inv[x]];
    let dim = n * n;
    let mult = (0..dim * dim)
        .map(|t| {
            let ((a, x), (b, y)) = ((t / dim / n, t / dim % n), (t % dim / n, t % dim % n));
            if a == conj(x, b) {
                SVec::unit(idx(a, m[x][y]))
            } else {
                SVec::zero()
            }
        })
        .collect();
    let unit = SVec::from_terms((0..n).map(|a| (idx(a, e), Scalar::one())));
    let comult = (0..dim)
        .map(|k| {
            let (a, x) = (k / n, k % n);
            SVec::from_terms((0..n).map(|b| {
                let c = m[inv[b]][a];
                (idx(b, x) * dim + idx(c, x), Scalar::one())
            }))
        })
        .collect();
    let counit = SVec::from_terms((0..n).map(|x| (idx(e, x), Scalar::one())));
    let antipode = Matrix::from_columns(
        dim,
        (0..dim)
            .map(|k| {
                let (a, x) = (k / n, k % n);
                SVec::unit(idx(conj(inv[x], inv[a]), inv[x]))
            })
            .collect(),
    );
    let labels = (0..dim).map(|k| format!("δ[{}]⋈{}", g.labels[k / n], g.labels[k % n])).collect();
    let algebra = WeakHopfAlgebra::new(field.clone(), labels, mult, unit, comult, counit, antipode)?;
    let r = SVec::from_terms(
        (0..n).flat_map(|x| (0..n).map(move |a| (idx(x, e) * dim + idx(a, x), Scalar::one()))),
    );
    Ok(Example { algebra, r })
}
