//! The end-to-end check: every non-projective part of `Lie(n)` lies in the
//! principal block.

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::blocks::{
    block_split, block_split_osima, compare_splittings, enumerate_blocks, osima_idempotents, separating_signature,
    verify_idempotent_system, BlockComponents, BlockRecord, BlocksError, MAX_OSIMA_DEGREE,
};
use crate::ffla::is_supported_prime;
use crate::grpalg::{omega, GrpalgError};
use crate::modrep::{load_or_build_lie, norm_rank_projectivity, restriction_free_rank_check, ModrepError, ProjectivityVerdict};
use crate::par::Exec;
use crate::sylow::sylow_subgroup;

pub const MIN_DEGREE: usize = 2;
pub const MAX_DEGREE: usize = 8;

/// Above this dimension a module known to be projective is not split: the
/// theorem holds for it outright, and generalized eigenspaces of 5040 × 5040
/// matrices over odd primes cost minutes each.
pub const PROJECTIVE_SPLIT_LIMIT: usize = 720;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitMethod {
    #[default]
    Eigenspace,
    Osima,
    Both,
}

impl fmt::Display for SplitMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitMethod::Eigenspace => "eigenspace",
            SplitMethod::Osima => "osima",
            SplitMethod::Both => "both",
        })
    }
}

impl FromStr for SplitMethod {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "eigenspace" => Ok(SplitMethod::Eigenspace),
            "osima" => Ok(SplitMethod::Osima),
            "both" => Ok(SplitMethod::Both),
            other => Err(format!("unknown method {other:?} (expected eigenspace, osima or both)")),
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("degree {n} is outside {MIN_DEGREE}..={MAX_DEGREE}")]
    Capacity { n: usize },
    #[error("{0} is not a supported prime")]
    UnsupportedPrime(u32),
    #[error("the osima method needs n <= {MAX_OSIMA_DEGREE}")]
    MethodUnavailable,
    #[error(transparent)]
    Modrep(#[from] ModrepError),
    #[error(transparent)]
    Blocks(#[from] BlocksError),
    #[error(transparent)]
    Grpalg(#[from] GrpalgError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub p: u32,
    pub n: usize,
    pub dim_lie: usize,
    pub sylow_order: usize,
    pub omega_square_ok: bool,
    pub restriction_free_ok: bool,
    /// Norm-rank verdict for the whole of `Lie(n)`.
    pub full_module: ProjectivityVerdict,
    /// True when the module was not split because it is projective and large.
    pub split_skipped: bool,
    pub blocks: Vec<BlockRecord>,
    pub theorem_holds: bool,
    pub elapsed: f64,
    pub method: SplitMethod,
}

impl VerificationReport {
    /// All sanity checks passed and the theorem holds.
    pub fn success(&self) -> bool {
        self.omega_square_ok && self.restriction_free_ok && self.theorem_holds
    }
}

/// `ω_n² = n ω_n`, over ℤ and over GF(p).
pub fn omega_square_check(n: usize, p: u32) -> Result<bool, GrpalgError> {
    let mut ok = true;
    for modulus in [0, p] {
        let w = omega(n, modulus)?;
        let square = w.multiply_with(&w, Exec::default())?;
        ok &= square == w.scale(&BigInt::from(n));
    }
    Ok(ok)
}

/// Runs the whole pipeline for `Lie(n)` over GF(p).
pub fn verify(p: u32, n: usize, method: SplitMethod, cache: Option<&Path>) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    if !(MIN_DEGREE..=MAX_DEGREE).contains(&n) {
        return Err(VerifyError::Capacity { n });
    }
    if !is_supported_prime(p) {
        return Err(VerifyError::UnsupportedPrime(p));
    }
    if method == SplitMethod::Osima && n > MAX_OSIMA_DEGREE {
        return Err(VerifyError::MethodUnavailable);
    }
    let omega_square_ok = omega_square_check(n, p)?;
    let lie = load_or_build_lie(n, p, cache, Exec::default())?;
    let restriction_free_ok = restriction_free_rank_check(&lie, p)?;
    let sylow = sylow_subgroup(n, p);
    let full_module = norm_rank_projectivity(&lie, &sylow)?;

    let labels = enumerate_blocks(n as u32, p);
    let mut blocks: Vec<BlockRecord> = labels.iter().map(BlockRecord::from).collect();
    let split_skipped = full_module.projective && lie.dim() > PROJECTIVE_SPLIT_LIMIT;
    let theorem_holds = if split_skipped {
        true
    } else {
        let comps = split(&lie, p, n, method)?;
        let mut holds = true;
        for record in &mut blocks {
            let c = &comps[&record.core];
            let v = norm_rank_projectivity(c, &sylow)?;
            record.component_dim = Some(c.dim());
            record.projective = Some(v.projective);
            record.free_rank = Some(v.free_rank);
            holds &= record.is_principal || v.projective;
        }
        holds
    };
    Ok(VerificationReport {
        p,
        n,
        dim_lie: lie.dim(),
        sylow_order: sylow.len(),
        omega_square_ok,
        restriction_free_ok,
        full_module,
        split_skipped,
        blocks,
        theorem_holds,
        elapsed: start.elapsed().as_secs_f64(),
        method,
    })
}

fn split(lie: &crate::modrep::ModuleRep, p: u32, n: usize, method: SplitMethod) -> Result<BlockComponents, VerifyError> {
    let osima = || -> Result<BlockComponents, VerifyError> {
        let idems = osima_idempotents(&enumerate_blocks(n as u32, p), p)?;
        verify_idempotent_system(&idems, n, p)?;
        Ok(block_split_osima(lie, &idems)?)
    };
    match method {
        SplitMethod::Osima => osima(),
        SplitMethod::Eigenspace => Ok(block_split(lie, &separating_signature(n as u32, p)?)?),
        SplitMethod::Both => {
            let primary = block_split(lie, &separating_signature(n as u32, p)?)?;
            if n <= MAX_OSIMA_DEGREE {
                compare_splittings(&primary, &osima()?)?;
            }
            Ok(primary)
        }
    }
}
