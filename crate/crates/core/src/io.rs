//! JSON file formats: algebra files with sparse structure constants, group
//! and groupoid tables, and user-supplied simple modules.
//!
//! Coefficients are strings in the notation accepted by [`Field::parse`].
//! Sparse tensors are arrays `[indices…, coefficient]`:
//!
//! * `mult`: `[i, j, k, c]` means `b_i b_j` has coefficient `c` at `b_k`;
//! * `comult`: `[i, j, k, c]` means `Δ(b_i)` has coefficient `c` at `b_j ⊗ b_k`;
//! * `antipode`: `[i, j, c]` means `S(b_i)` has coefficient `c` at `b_j`;
//! * `rmatrix`: `[i, j, c]` is the coefficient of `b_i ⊗ b_j` in `R`;
//! * `unit`, `counit`: `[i, c]`.

use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::builders::{GroupTable, GroupoidTable};
use crate::comod::{RightModule, UserModule};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SVec};
use crate::scalars::{Field, FieldSpec, Scalar};
use crate::wha::WeakHopfAlgebra;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    pub field: FieldSpec,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub mult: Vec<(usize, usize, usize, String)>,
    pub unit: Vec<(usize, String)>,
    pub comult: Vec<(usize, usize, usize, String)>,
    pub counit: Vec<(usize, String)>,
    pub antipode: Vec<(usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<Vec<(usize, usize, String)>>,
}

fn pairs(v: &SVec) -> Vec<(usize, String)> {
    v.iter().map(|(i, c)| (*i, c.to_string())).collect()
}

fn check_version(v: u32) -> Result<()> {
    if v == FORMAT_VERSION {
        Ok(())
    } else {
        Err(Error::Parse(format!("unsupported format_version {v}")))
    }
}

fn coeff(field: &Field, s: &str) -> Result<Scalar> {
    field.parse(s).map_err(|e| Error::Parse(format!("coefficient {s:?}: {e}")))
}

fn in_range(what: &str, idx: &[usize], bound: usize) -> Result<()> {
    match idx.iter().find(|&&i| i >= bound) {
        Some(i) => Err(Error::Parse(format!("{what}: index {i} out of range (dim {bound})"))),
        None => Ok(()),
    }
}

fn gather(field: &Field, what: &str, entries: &[(usize, String)], bound: usize) -> Result<SVec> {
    let mut terms = Vec::with_capacity(entries.len());
    for (i, c) in entries {
        in_range(what, &[*i], bound)?;
        terms.push((*i, coeff(field, c)?));
    }
    Ok(SVec::from_terms(terms))
}

impl AlgebraFile {
    pub fn from_algebra(h: &WeakHopfAlgebra, r: Option<&SVec>) -> AlgebraFile {
        let n = h.dim();
        let a = h.algebra();
        let mult = (0..n * n)
            .flat_map(|t| a.basis_product(t / n, t % n).iter().map(move |(k, c)| (t / n, t % n, *k, c.to_string())))
            .collect();
        let comult = (0..n)
            .flat_map(|i| h.comult_matrix().col(i).iter().map(move |(t, c)| (i, t / n, t % n, c.to_string())))
            .collect();
        let antipode = (0..n)
            .flat_map(|i| h.antipode().col(i).iter().map(move |(j, c)| (i, *j, c.to_string())))
            .collect();
        let default_labels = h.labels().iter().enumerate().all(|(i, l)| *l == format!("b{i}"));
        AlgebraFile {
            format_version: FORMAT_VERSION,
            field: h.field().spec(),
            dim: n,
            labels: if default_labels { Vec::new() } else { h.labels().to_vec() },
            mult,
            unit: pairs(h.unit()),
            comult,
            counit: pairs(h.counit()),
            antipode,
            rmatrix: r.map(|r| r.iter().map(|(t, c)| (t / n, t % n, c.to_string())).collect()),
        }
    }

    /// The algebra and, if present, the R-matrix as a vector in `H ⊗ H`.
    pub fn to_algebra(&self) -> Result<(WeakHopfAlgebra, Option<SVec>)> {
        check_version(self.format_version)?;
        let field = Field::new(self.field).map_err(|e| Error::Parse(e.to_string()))?;
        let n = self.dim;
        let labels = if self.labels.is_empty() {
            (0..n).map(|i| format!("b{i}")).collect()
        } else if self.labels.len() == n {
            self.labels.clone()
        } else {
            return Err(Error::Parse(format!("{} labels for dim {n}", self.labels.len())));
        };
        let mut mult = vec![Vec::new(); n * n];
        for (i, j, k, c) in &self.mult {
            in_range("mult", &[*i, *j, *k], n)?;
            mult[i * n + j].push((*k, coeff(&field, c)?));
        }
        let mut comult = vec![Vec::new(); n];
        for (i, j, k, c) in &self.comult {
            in_range("comult", &[*i, *j, *k], n)?;
            comult[*i].push((j * n + k, coeff(&field, c)?));
        }
        let mut antipode = vec![Vec::new(); n];
        for (i, j, c) in &self.antipode {
            in_range("antipode", &[*i, *j], n)?;
            antipode[*i].push((*j, coeff(&field, c)?));
        }
        let unit = gather(&field, "unit", &self.unit, n)?;
        let counit = gather(&field, "counit", &self.counit, n)?;
        let r = match &self.rmatrix {
            None => None,
            Some(entries) => {
                let mut terms = Vec::with_capacity(entries.len());
                for (i, j, c) in entries {
                    in_range("rmatrix", &[*i, *j], n)?;
                    terms.push((i * n + j, coeff(&field, c)?));
                }
                Some(SVec::from_terms(terms))
            }
        };
        let h = WeakHopfAlgebra::new(
            field,
            labels,
            mult.into_iter().map(SVec::from_terms).collect(),
            unit,
            comult.into_iter().map(SVec::from_terms).collect(),
            counit,
            Matrix::from_columns(n, antipode.into_iter().map(SVec::from_terms).collect()),
        )
        .map_err(|e| Error::Parse(e.to_string()))?;
        Ok((h, r))
    }

    pub fn parse(text: &str) -> Result<AlgebraFile> {
        from_json(text)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

/// A group or groupoid table, optionally with the field to build over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile<T> {
    pub format_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub table: T,
}

pub type GroupFile = TableFile<GroupTable>;
pub type GroupoidFile = TableFile<GroupoidTable>;

impl<T: Serialize + DeserializeOwned> TableFile<T> {
    pub fn parse(text: &str) -> Result<TableFile<T>> {
        let f: TableFile<T> = from_json(text)?;
        check_version(f.format_version)?;
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

/// `Q(ζ_e)` for the exponent `e` of a group (rationals when `e ≤ 2`); it
/// splits every group algebra of a subgroup.
pub fn splitting_field(g: &GroupTable) -> FieldSpec {
    let exponent = (0..g.order()).map(|a| element_order(g, a)).fold(1, num_integer::lcm);
    if exponent <= 2 {
        FieldSpec::Rationals
    } else {
        FieldSpec::Cyclotomic { order: exponent as u32 }
    }
}

fn element_order(g: &GroupTable, a: usize) -> usize {
    let mut x = a;
    let mut k = 1;
    while x != g.identity {
        x = g.mult[x][a];
        k += 1;
    }
    k
}

/// Vertex-group splitting field of a groupoid.
pub fn groupoid_splitting_field(gd: &GroupoidTable) -> FieldSpec {
    let exponent = (0..gd.morphisms.len())
        .filter(|&f| gd.morphisms[f].source == gd.morphisms[f].target)
        .map(|f| {
            let id = gd.identities[gd.morphisms[f].source];
            let (mut x, mut k) = (f, 1);
            while x != id {
                x = gd.compose[x][f].expect("loops compose");
                k += 1;
            }
            k
        })
        .fold(1, num_integer::lcm);
    if exponent <= 2 {
        FieldSpec::Rationals
    } else {
        FieldSpec::Cyclotomic { order: exponent as u32 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleEntry {
    pub component: usize,
    pub block: usize,
    pub dim: usize,
    /// Right action of each basis element of the endomorphism algebra, as
    /// sparse `[row, col, c]` entries.
    pub action: Vec<Vec<(usize, usize, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModulesFile {
    pub format_version: u32,
    pub modules: Vec<ModuleEntry>,
}

impl ModulesFile {
    pub fn from_modules(modules: &[UserModule]) -> ModulesFile {
        let modules = modules
            .iter()
            .map(|u| ModuleEntry {
                component: u.component,
                block: u.block,
                dim: u.module.dim,
                action: u
                    .module
                    .action
                    .iter()
                    .map(|m| {
                        (0..m.cols())
                            .flat_map(|j| m.col(j).iter().map(move |(i, c)| (*i, j, c.to_string())))
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        ModulesFile { format_version: FORMAT_VERSION, modules }
    }

    pub fn parse(text: &str) -> Result<ModulesFile> {
        let f: ModulesFile = from_json(text)?;
        check_version(f.format_version)?;
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    /// Matrices are parsed over `field`; validation against the algebra
    /// happens in the enumeration.
    pub fn to_modules(&self, field: &Field) -> Result<Vec<UserModule>> {
        self.modules
            .iter()
            .map(|e| {
                let action = e
                    .action
                    .iter()
                    .map(|entries| {
                        let mut cols = vec![Vec::new(); e.dim];
                        for (i, j, c) in entries {
                            in_range("module action", &[*i, *j], e.dim)?;
                            cols[*j].push((*i, coeff(field, c)?));
                        }
                        Ok(Matrix::from_columns(e.dim, cols.into_iter().map(SVec::from_terms).collect()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(UserModule { component: e.component, block: e.block, module: RightModule { dim: e.dim, action } })
            })
            .collect()
    }
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
