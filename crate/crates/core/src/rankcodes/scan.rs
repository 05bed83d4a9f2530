//! Minimum-rank search over affine families of matrices.
//!
//! Every family is `offset + span_{F_p}(generators)`, walked with an odometer
//! over `F_p` digits so that each step costs one matrix addition (plus one
//! more on a carry). Matrices are flat row-major buffers of base-field indices.

use crate::gf::{BaseField, FieldOps};
use crate::linalg::dense;

/// One affine family `offset + span_{F_p}(generators)`.
pub(crate) struct Family {
    pub offset: Vec<u32>,
    pub generators: Vec<Vec<u32>>,
    /// Whether the offset itself (all digits zero) is a member to be scored.
    pub include_offset: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ScanOutcome {
    pub min_rank: usize,
    pub visited: u64,
    pub witness: Vec<u32>,
    /// True when the scan stopped early at `stop_at`.
    pub stopped_early: bool,
}

/// Number of members of the families, saturating at `u128::MAX`.
pub(crate) fn family_count(p: u32, families: &[Family]) -> u128 {
    families.iter().fold(0u128, |acc, f| {
        let size = (p as u128)
            .checked_pow(f.generators.len() as u32)
            .unwrap_or(u128::MAX);
        let members = if f.include_offset { size } else { size - 1 };
        acc.saturating_add(members)
    })
}

/// Minimum rank over all members, stopping as soon as a member of rank
/// `<= stop_at` is seen. Returns `None` if the families are empty.
pub(crate) fn min_rank(
    base: &BaseField,
    rows: usize,
    cols: usize,
    families: &[Family],
    stop_at: usize,
) -> Option<ScanOutcome> {
    let p = base.p();
    let mut best: Option<ScanOutcome> = None;
    let mut scratch = vec![0u32; rows * cols];
    let mut visited = 0u64;

    let mut score = |buf: &[u32], best: &mut Option<ScanOutcome>, visited: &mut u64| -> bool {
        *visited += 1;
        scratch.copy_from_slice(buf);
        let r = dense::rank_flat_in_place(base, &mut scratch, rows, cols);
        if best.as_ref().is_none_or(|b| r < b.min_rank) {
            *best = Some(ScanOutcome {
                min_rank: r,
                visited: 0,
                witness: buf.to_vec(),
                stopped_early: false,
            });
        }
        r <= stop_at
    };

    'families: for fam in families {
        let mut buf = fam.offset.clone();
        if fam.include_offset && score(&buf, &mut best, &mut visited) {
            break 'families;
        }
        let g = fam.generators.len();
        let mut digits = vec![0u32; g];
        loop {
            // advance the odometer; every touched position adds its generator once
            let mut pos = 0;
            loop {
                if pos == g {
                    continue 'families;
                }
                add_assign(base, &mut buf, &fam.generators[pos]);
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if score(&buf, &mut best, &mut visited) {
                break 'families;
            }
        }
    }

    best.map(|mut b| {
        b.visited = visited;
        b.stopped_early = b.min_rank <= stop_at;
        b
    })
}

fn add_assign(base: &BaseField, acc: &mut [u32], other: &[u32]) {
    if base.degree() == 1 {
        let p = base.p();
        for (a, b) in acc.iter_mut().zip(other) {
            let s = *a + *b;
            *a = if s >= p { s - p } else { s };
        }
    } else {
        for (a, b) in acc.iter_mut().zip(other) {
            *a = base.add(a, b);
        }
    }
}
