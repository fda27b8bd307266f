use std::collections::BTreeMap;

use super::{BlockSignature, BlocksError, CentralIdempotent};
use crate::ffla::{intersect_rowspaces, GFMatrix};
use crate::modrep::ModuleRep;
use crate::symfun::Partition;

/// Largest degree for the idempotent splitting, which needs every class
/// operator.
pub const MAX_OSIMA_DEGREE: usize = 6;

/// Block components keyed by core. Every block appears, possibly with a
/// zero-dimensional component.
pub type BlockComponents = BTreeMap<Partition, ModuleRep>;

fn check_complete(m: &ModuleRep, comps: &BlockComponents) -> Result<(), BlocksError> {
    let found: usize = comps.values().map(ModuleRep::dim).sum();
    if found != m.dim() {
        return Err(BlocksError::DecompositionIncomplete { found, expected: m.dim() });
    }
    let bases: Vec<&GFMatrix> = comps.values().filter(|c| c.dim() > 0).filter_map(ModuleRep::basis_in_parent).collect();
    if !bases.is_empty() {
        let span = GFMatrix::vstack(&bases)?.rank_with(m.exec());
        if span != m.dim() {
            return Err(BlocksError::DecompositionIncomplete { found: span, expected: m.dim() });
        }
    }
    Ok(())
}

/// Splits `m` into block components: the component of core κ is the
/// intersection over the signature classes C of the generalized eigenspace
/// of the class-sum operator for the eigenvalue `θ_κ(C)`.
pub fn block_split(m: &ModuleRep, sig: &BlockSignature) -> Result<BlockComponents, BlocksError> {
    if sig.n as usize != m.degree() || sig.p != m.modulus() {
        return Err(BlocksError::SignatureMismatch { n: sig.n as usize, p: sig.p });
    }
    let (d, p) = (m.dim(), m.modulus());
    // Distinct (class, eigenvalue) pairs; each needs one stabilized kernel.
    let mut pairs: Vec<(usize, u32)> = Vec::new();
    for row in &sig.values {
        for (j, v) in row.iter().enumerate() {
            if !pairs.contains(&(j, v.value())) {
                pairs.push((j, v.value()));
            }
        }
    }
    let operators: Vec<GFMatrix> =
        sig.classes.iter().map(|c| m.action_of_central_class(c)).collect::<Result<_, _>>()?;
    let kernels: Vec<GFMatrix> = m
        .exec()
        .map(&pairs, |&(j, t)| operators[j].minus_scalar(t).and_then(|a| a.stabilized_left_kernel()))
        .into_iter()
        .collect::<Result<_, _>>()?;
    let kernel_for = |j: usize, t: u32| &kernels[pairs.iter().position(|&q| q == (j, t)).expect("pair listed")];

    let mut comps = BlockComponents::new();
    for (core, row) in sig.cores.iter().zip(&sig.values) {
        let mut space: Option<GFMatrix> = None;
        for (j, v) in row.iter().enumerate() {
            let k = kernel_for(j, v.value());
            space = Some(match space {
                None => k.clone(),
                Some(s) => intersect_rowspaces(&s, k)?,
            });
        }
        let rows = space.unwrap_or_else(|| GFMatrix::identity(d, p));
        comps.insert(core.clone(), m.submodule_from_rows(&rows)?);
    }
    check_complete(m, &comps)?;
    Ok(comps)
}

/// Splits `m` by the action of explicit block idempotents: the component of
/// B is the image `M e_B`.
pub fn block_split_osima(m: &ModuleRep, idems: &[CentralIdempotent]) -> Result<BlockComponents, BlocksError> {
    if m.degree() > MAX_OSIMA_DEGREE {
        return Err(BlocksError::DegreeTooLarge { n: m.degree(), max: MAX_OSIMA_DEGREE });
    }
    let (d, p) = (m.dim(), m.modulus());
    let mut comps = BlockComponents::new();
    for e in idems {
        let mut action = GFMatrix::zeros(d, d, p);
        for (class, c) in &e.coeffs {
            if !c.is_zero() {
                action.add_assign_scaled(&m.action_of_central_class(class)?, c.value());
            }
        }
        comps.insert(e.label.core.clone(), m.submodule_from_rows(&action)?);
    }
    check_complete(m, &comps)?;
    Ok(comps)
}

/// Both splittings must give the same subspace (equal reduced bases) at
/// every core.
pub fn compare_splittings(a: &BlockComponents, b: &BlockComponents) -> Result<(), BlocksError> {
    for core in a.keys().chain(b.keys()) {
        let same = match (a.get(core), b.get(core)) {
            (Some(x), Some(y)) => x.basis_in_parent() == y.basis_in_parent(),
            _ => false,
        };
        if !same {
            return Err(BlocksError::MethodDisagreement { core: core.clone() });
        }
    }
    Ok(())
}
