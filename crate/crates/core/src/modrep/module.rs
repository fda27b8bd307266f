use std::fmt;
use std::sync::{Arc, Mutex};

use super::embedding::Embedding;
use super::lru::Lru;
use super::ModrepError;
use crate::ffla::{is_supported_prime, GFMatrix};
use crate::grpalg::{class_elements, Permutation};
use crate::par::Exec;
use crate::symfun::{CycleType, Partition};

const WORD_MEMO: usize = 64;
const SUM_MEMO: usize = 16;

/// What a module is, as far as its constructor knows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Lie,
    Regular,
    Specht(Partition),
    Trivial,
    Sign,
    /// Given directly by generator matrices (e.g. read from a cache file).
    Generators,
    Submodule,
}

impl ModuleKind {
    /// Short name used in cache file names.
    pub fn tag(&self) -> String {
        match self {
            ModuleKind::Lie => "lie".into(),
            ModuleKind::Regular => "regular".into(),
            ModuleKind::Specht(l) => format!("specht-{}", l.parts().iter().map(u32::to_string).collect::<Vec<_>>().join("-")),
            ModuleKind::Trivial => "trivial".into(),
            ModuleKind::Sign => "sign".into(),
            ModuleKind::Generators => "generators".into(),
            ModuleKind::Submodule => "submodule".into(),
        }
    }
}

pub(super) enum Realization {
    Abstract,
    Embedded(Embedding),
    /// Row space of `basis` (reduced, with `pivots`) inside `parent`.
    Submodule { parent: ModuleRep, basis: GFMatrix, pivots: Vec<usize> },
}

struct Inner {
    n: usize,
    p: u32,
    dim: usize,
    gens: Vec<GFMatrix>,
    kind: ModuleKind,
    realization: Realization,
    exec: Exec,
    words: Mutex<Lru<Permutation, GFMatrix>>,
    sums: Mutex<Lru<Vec<u64>, GFMatrix>>,
}

/// A right F𝔖_n-module: matrices for `s_1, …, s_{n−1}` acting on row vectors.
///
/// Cloning is cheap; clones share the matrices and the action caches.
#[derive(Clone)]
pub struct ModuleRep {
    inner: Arc<Inner>,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("kind", &self.inner.kind)
            .field("n", &self.inner.n)
            .field("p", &self.inner.p)
            .field("dim", &self.inner.dim)
            .finish()
    }
}

impl ModuleRep {
    pub(super) fn assemble(
        n: usize,
        p: u32,
        dim: usize,
        gens: Vec<GFMatrix>,
        kind: ModuleKind,
        realization: Realization,
        exec: Exec,
    ) -> Self {
        debug_assert_eq!(gens.len(), n.saturating_sub(1));
        ModuleRep {
            inner: Arc::new(Inner {
                n,
                p,
                dim,
                gens,
                kind,
                realization,
                exec,
                words: Mutex::new(Lru::new(WORD_MEMO)),
                sums: Mutex::new(Lru::new(SUM_MEMO)),
            }),
        }
    }

    /// A module given by its generator matrices. Shapes and moduli are
    /// checked; the Coxeter relations are not (see [`ModuleRep::check_relations`]).
    pub fn from_generators(n: usize, p: u32, gens: Vec<GFMatrix>) -> Result<Self, ModrepError> {
        if !is_supported_prime(p) {
            return Err(ModrepError::UnsupportedPrime(p));
        }
        if n == 0 || gens.len() != n - 1 {
            return Err(ModrepError::InvalidGenerators(format!("expected {} matrices, found {}", n.saturating_sub(1), gens.len())));
        }
        let dim = gens.first().map_or(0, GFMatrix::rows);
        if let Some(bad) = gens.iter().position(|g| g.rows() != dim || g.cols() != dim || g.modulus() != p) {
            return Err(ModrepError::InvalidGenerators(format!("matrix for s_{} has the wrong shape or modulus", bad + 1)));
        }
        Ok(Self::assemble(n, p, dim, gens, ModuleKind::Generators, Realization::Abstract, Exec::default()))
    }

    pub fn degree(&self) -> usize {
        self.inner.n
    }

    pub fn modulus(&self) -> u32 {
        self.inner.p
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn kind(&self) -> &ModuleKind {
        &self.inner.kind
    }

    pub fn exec(&self) -> Exec {
        self.inner.exec
    }

    /// Matrices of `s_1, …, s_{n−1}`; entry `i − 1` is `s_i`.
    pub fn gen_actions(&self) -> &[GFMatrix] {
        &self.inner.gens
    }

    pub fn has_embedding(&self) -> bool {
        matches!(self.inner.realization, Realization::Embedded(_))
    }

    pub(super) fn embedding(&self) -> Option<&Embedding> {
        match &self.inner.realization {
            Realization::Embedded(e) => Some(e),
            _ => None,
        }
    }

    /// Basis rows inside F^{n!} (or the tabloid space) and their pivots, for
    /// modules built with an embedding.
    pub fn embedding_basis(&self) -> Option<(Vec<Vec<(usize, u32)>>, Vec<usize>)> {
        let e = self.embedding()?;
        let rows = (0..e.dim()).map(|k| e.row(k).iter().map(|&(c, v)| (c as usize, v)).collect()).collect();
        Some((rows, e.pivots().to_vec()))
    }

    fn check_degree(&self, g: &Permutation) -> Result<(), ModrepError> {
        if g.degree() != self.inner.n {
            return Err(ModrepError::DegreeMismatch { expected: self.inner.n, found: g.degree() });
        }
        Ok(())
    }

    /// Matrix of `g`.
    pub fn action_of_perm(&self, g: &Permutation) -> Result<GFMatrix, ModrepError> {
        self.check_degree(g)?;
        let (d, p) = (self.inner.dim, self.inner.p);
        if g.is_identity() {
            return Ok(GFMatrix::identity(d, p));
        }
        match &self.inner.realization {
            Realization::Embedded(e) => Ok(e.operator(std::slice::from_ref(g), self.inner.exec)),
            Realization::Submodule { parent, .. } => self.restrict(&parent.action_of_perm(g)?),
            Realization::Abstract => {
                if let Some(m) = self.inner.words.lock().expect("memo lock").get(g) {
                    return Ok(m);
                }
                let mut acc = GFMatrix::identity(d, p);
                for i in g.reduced_word() {
                    acc = acc.mat_mul_with(&self.inner.gens[i - 1], self.inner.exec)?;
                }
                self.inner.words.lock().expect("memo lock").insert(g.clone(), acc.clone());
                Ok(acc)
            }
        }
    }

    /// Matrix of `Σ_{g ∈ perms} g`. Results are memoized per element set.
    pub fn sum_of_actions(&self, perms: &[Permutation]) -> Result<GFMatrix, ModrepError> {
        for g in perms {
            self.check_degree(g)?;
        }
        let mut key: Vec<u64> = perms.iter().map(Permutation::lehmer_rank).collect();
        key.sort_unstable();
        if let Some(m) = self.inner.sums.lock().expect("memo lock").get(&key) {
            return Ok(m);
        }
        let (d, p) = (self.inner.dim, self.inner.p);
        let out = match &self.inner.realization {
            Realization::Embedded(e) => e.operator(perms, self.inner.exec),
            Realization::Submodule { parent, .. } => self.restrict(&parent.sum_of_actions(perms)?)?,
            Realization::Abstract => {
                let mut acc = GFMatrix::zeros(d, d, p);
                for g in perms {
                    acc.add_assign_scaled(&self.action_of_perm(g)?, 1);
                }
                acc
            }
        };
        self.inner.sums.lock().expect("memo lock").insert(key, out.clone());
        Ok(out)
    }

    /// Class-sum operator `Σ_{g ∈ C} g`.
    pub fn action_of_central_class(&self, class: &CycleType) -> Result<GFMatrix, ModrepError> {
        if class.size() as usize != self.inner.n {
            return Err(ModrepError::DegreeMismatch { expected: self.inner.n, found: class.size() as usize });
        }
        let elements: Vec<Permutation> = class_elements(class).collect();
        self.sum_of_actions(&elements)
    }

    /// For a submodule, the matrix induced by an operator `x` on the parent.
    fn restrict(&self, x: &GFMatrix) -> Result<GFMatrix, ModrepError> {
        match &self.inner.realization {
            Realization::Submodule { basis, pivots, .. } => {
                Ok(basis.mat_mul_with(x, self.inner.exec)?.select_columns(pivots))
            }
            _ => unreachable!("restrict is only called on submodules"),
        }
    }

    /// The submodule spanned by `rows` (row vectors in this module's basis).
    /// Its basis is the reduced echelon basis of the row space.
    pub fn submodule_from_rows(&self, rows: &GFMatrix) -> Result<ModuleRep, ModrepError> {
        if rows.cols() != self.inner.dim || rows.modulus() != self.inner.p {
            return Err(ModrepError::InvalidGenerators(format!(
                "rows are {}x{} over GF({}), module has dimension {} over GF({})",
                rows.rows(),
                rows.cols(),
                rows.modulus(),
                self.inner.dim,
                self.inner.p
            )));
        }
        let space = rows.row_space();
        let basis = space.reduced;
        let pivots = space.pivots;
        let exec = self.inner.exec;
        let mut gens = Vec::with_capacity(self.inner.gens.len());
        for (i, a) in self.inner.gens.iter().enumerate() {
            let image = basis.mat_mul_with(a, exec)?;
            let coords = image.select_columns(&pivots);
            if coords.mat_mul_with(&basis, exec)? != image {
                return Err(ModrepError::NotInvariant { generator: i + 1 });
            }
            gens.push(coords);
        }
        let dim = pivots.len();
        Ok(Self::assemble(
            self.inner.n,
            self.inner.p,
            dim,
            gens,
            ModuleKind::Submodule,
            Realization::Submodule { parent: self.clone(), basis, pivots },
            exec,
        ))
    }

    /// Basis of a submodule expressed in the parent's coordinates.
    pub fn basis_in_parent(&self) -> Option<&GFMatrix> {
        match &self.inner.realization {
            Realization::Submodule { basis, .. } => Some(basis),
            _ => None,
        }
    }

    /// Checks `s_i² = 1`, the braid relations and far commutation exactly.
    pub fn check_relations(&self) -> Result<(), ModrepError> {
        let g = &self.inner.gens;
        let exec = self.inner.exec;
        let mul = |a: &GFMatrix, b: &GFMatrix| a.mat_mul_with(b, exec);
        for i in 0..g.len() {
            if !mul(&g[i], &g[i])?.is_identity() {
                return Err(ModrepError::RelationViolated(format!("s_{}^2 != 1", i + 1)));
            }
            if i + 1 < g.len() {
                let left = mul(&mul(&g[i], &g[i + 1])?, &g[i])?;
                let right = mul(&mul(&g[i + 1], &g[i])?, &g[i + 1])?;
                if left != right {
                    return Err(ModrepError::RelationViolated(format!("braid relation for s_{}, s_{}", i + 1, i + 2)));
                }
            }
            for j in i + 2..g.len() {
                if mul(&g[i], &g[j])? != mul(&g[j], &g[i])? {
                    return Err(ModrepError::RelationViolated(format!("s_{} and s_{} do not commute", i + 1, j + 1)));
                }
            }
        }
        Ok(())
    }
}
