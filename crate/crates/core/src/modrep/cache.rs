//! Binary module cache.
//!
//! Layout: the magic bytes `SNMOD1`, then `n`, `p` and `dim` as little-endian
//! `u32`, then the `n − 1` generator matrices row-major. Entries are packed
//! least significant bit first with `⌈log₂ p⌉` bits each; every matrix is
//! padded to a whole byte.

use std::fs;
use std::path::{Path, PathBuf};

use super::builders::{build_lie_module_with, lie_embedding};
use super::module::{ModuleKind, ModuleRep, Realization};
use super::ModrepError;
use crate::ffla::{is_supported_prime, GFMatrix};
use crate::grpalg::Permutation;
use crate::par::Exec;

pub const CACHE_MAGIC: &[u8; 6] = b"SNMOD1";

/// Rows of the first generator compared against a fresh computation when a
/// cached Lie module is loaded.
const SPOT_CHECK_ROWS: usize = 64;

fn bits_per_entry(p: u32) -> u32 {
    32 - (p - 1).leading_zeros()
}

pub fn cache_path(dir: &Path, n: usize, p: u32, kind: &ModuleKind) -> PathBuf {
    dir.join(format!("{}-n{n}-p{p}.snmod", kind.tag()))
}

pub fn write_module(m: &ModuleRep, path: &Path) -> Result<(), ModrepError> {
    let p = m.modulus();
    let bits = bits_per_entry(p);
    let dim = m.dim();
    let mut out = Vec::with_capacity(18 + m.gen_actions().len() * (dim * dim * bits as usize).div_ceil(8));
    out.extend_from_slice(CACHE_MAGIC);
    for x in [m.degree() as u32, p, dim as u32] {
        out.extend_from_slice(&x.to_le_bytes());
    }
    for g in m.gen_actions() {
        let mut acc = 0u64;
        let mut filled = 0u32;
        for r in 0..dim {
            for v in g.row(r) {
                acc |= (v as u64) << filled;
                filled += bits;
                while filled >= 8 {
                    out.push(acc as u8);
                    acc >>= 8;
                    filled -= 8;
                }
            }
        }
        if filled > 0 {
            out.push(acc as u8);
        }
    }
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, out)?;
    Ok(())
}

fn read_u32(bytes: &[u8], at: usize) -> Result<u32, ModrepError> {
    let chunk = bytes.get(at..at + 4).ok_or_else(|| ModrepError::CacheFormat("truncated header".into()))?;
    Ok(u32::from_le_bytes(chunk.try_into().expect("four bytes")))
}

/// Header fields and generator matrices of a cache file.
fn read_parts(path: &Path) -> Result<(usize, u32, Vec<GFMatrix>), ModrepError> {
    let bytes = fs::read(path)?;
    if bytes.len() < 18 || &bytes[..6] != CACHE_MAGIC {
        return Err(ModrepError::CacheFormat("missing SNMOD1 magic".into()));
    }
    let n = read_u32(&bytes, 6)? as usize;
    let p = read_u32(&bytes, 10)?;
    let dim = read_u32(&bytes, 14)? as usize;
    if n == 0 || !is_supported_prime(p) {
        return Err(ModrepError::CacheFormat(format!("bad header n={n} p={p}")));
    }
    let bits = bits_per_entry(p);
    let per_matrix = (dim * dim * bits as usize).div_ceil(8);
    if bytes.len() != 18 + (n - 1) * per_matrix {
        return Err(ModrepError::CacheFormat(format!(
            "expected {} bytes, found {}",
            18 + (n - 1) * per_matrix,
            bytes.len()
        )));
    }
    let mask = (1u64 << bits) - 1;
    let mut gens = Vec::with_capacity(n - 1);
    for k in 0..n - 1 {
        let data = &bytes[18 + k * per_matrix..18 + (k + 1) * per_matrix];
        let mut g = GFMatrix::zeros(dim, dim, p);
        let mut pos = 0usize;
        for r in 0..dim {
            for c in 0..dim {
                let byte = pos / 8;
                let shift = pos % 8;
                let mut window = data[byte] as u64;
                if let Some(&next) = data.get(byte + 1) {
                    window |= (next as u64) << 8;
                }
                let v = ((window >> shift) & mask) as u32;
                if v >= p {
                    return Err(ModrepError::CacheFormat(format!("entry {v} out of range for GF({p})")));
                }
                if v != 0 {
                    g.set(r, c, v);
                }
                pos += bits as usize;
            }
        }
        gens.push(g);
    }
    Ok((n, p, gens))
}

/// Reads a module stored by [`write_module`]. The result has no embedding.
pub fn read_module(path: &Path) -> Result<ModuleRep, ModrepError> {
    let (n, p, gens) = read_parts(path)?;
    ModuleRep::from_generators(n, p, gens)
}

/// `Lie(n)` over GF(p), read from `dir` when a matching cache file exists and
/// written there otherwise. A loaded module gets its embedding rebuilt, and
/// the first rows of `s_1` are compared with a fresh computation.
pub fn load_or_build_lie(n: usize, p: u32, dir: Option<&Path>, exec: Exec) -> Result<ModuleRep, ModrepError> {
    let Some(dir) = dir else {
        return build_lie_module_with(n, p, exec);
    };
    let path = cache_path(dir, n, p, &ModuleKind::Lie);
    if !path.exists() {
        let m = build_lie_module_with(n, p, exec)?;
        write_module(&m, &path)?;
        return Ok(m);
    }
    let (cn, cp, gens) = read_parts(&path)?;
    let e = lie_embedding(n, p)?;
    if cn != n || cp != p || gens.first().map_or(0, GFMatrix::rows) != e.dim() {
        return Err(ModrepError::CacheFormat(format!("{} does not hold Lie({n}) over GF({p})", path.display())));
    }
    let fresh = e.operator(&[Permutation::coxeter(1, n)], exec);
    let rows: Vec<usize> = (0..e.dim().min(SPOT_CHECK_ROWS)).collect();
    if fresh.select_rows(&rows) != gens[0].select_rows(&rows) {
        return Err(ModrepError::CacheFormat(format!("{} disagrees with a fresh computation", path.display())));
    }
    let dim = e.dim();
    Ok(ModuleRep::assemble(n, p, dim, gens, ModuleKind::Lie, Realization::Embedded(e), exec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::build_lie_module;

    #[test]
    fn bit_widths() {
        assert_eq!(bits_per_entry(2), 1);
        assert_eq!(bits_per_entry(3), 2);
        assert_eq!(bits_per_entry(5), 3);
        assert_eq!(bits_per_entry(7), 3);
        assert_eq!(bits_per_entry(251), 8);
    }

    #[test]
    fn round_trip_and_reload() {
        let dir = std::env::temp_dir().join(format!("snmod-test-{}", std::process::id()));
        for p in [2, 3, 5, 7] {
            let m = build_lie_module(5, p).unwrap();
            let path = cache_path(&dir, 5, p, m.kind());
            write_module(&m, &path).unwrap();
            let back = read_module(&path).unwrap();
            assert_eq!(back.gen_actions(), m.gen_actions());
            let again = load_or_build_lie(5, p, Some(&dir), Exec::default()).unwrap();
            assert!(again.has_embedding());
            assert_eq!(again.gen_actions(), m.gen_actions());
        }
        let bad = dir.join("bad.snmod");
        fs::write(&bad, b"NOTMOD").unwrap();
        assert!(matches!(read_module(&bad), Err(ModrepError::CacheFormat(_))));
        fs::remove_dir_all(&dir).unwrap();
    }
}
