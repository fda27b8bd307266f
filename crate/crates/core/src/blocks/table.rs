use serde::{Deserialize, Serialize};

use super::BlockLabel;
use crate::symfun::Partition;

/// One row of a block table. The component fields are filled in when a
/// module has been split and tested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecord {
    pub core: Partition,
    pub weight: usize,
    pub members: Vec<Partition>,
    pub is_principal: bool,
    pub component_dim: Option<usize>,
    pub projective: Option<bool>,
    pub free_rank: Option<usize>,
}

impl From<&BlockLabel> for BlockRecord {
    fn from(l: &BlockLabel) -> Self {
        BlockRecord {
            core: l.core.clone(),
            weight: l.weight,
            members: l.members.clone(),
            is_principal: l.is_principal,
            component_dim: None,
            projective: None,
            free_rank: None,
        }
    }
}

fn cell<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// Aligned text table, one row per block, principal block marked with `*`.
pub fn format_block_table(records: &[BlockRecord]) -> String {
    let header = ["core", "weight", "principal", "members", "dim", "projective", "free rank"];
    let rows: Vec<[String; 7]> = records
        .iter()
        .map(|r| {
            [
                r.core.to_string(),
                r.weight.to_string(),
                if r.is_principal { "*".into() } else { String::new() },
                r.members.iter().map(|m| format!("({m})")).collect::<Vec<_>>().join(" "),
                cell(r.component_dim),
                cell(r.projective.map(|b| if b { "yes" } else { "no" })),
                cell(r.free_rank),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out.join("\n") + "\n"
}
