//! Reduced simplicial homology over the two-element field, and the
//! exhaustive d-Leray check built on it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Face, SimplicialComplex, VertexLabel};
use crate::{Error, Guards, Result};

/// Reduced Betti numbers over GF(2), indices 0..=dim K.
///
/// Computed as rank deficiencies of the boundary matrices of the augmented
/// chain complex, so the 0-th entry counts components minus one. Returns an
/// empty vector for the empty complex.
pub fn betti_z2(k: &SimplicialComplex, guards: &Guards) -> Result<Vec<usize>> {
    let Some(dim) = k.dim() else {
        return Ok(Vec::new());
    };
    let dim = dim as usize;
    let faces = k.faces(guards)?;
    // faces grouped and indexed by dimension
    let mut by_dim: Vec<Vec<&Face>> = vec![Vec::new(); dim + 1];
    for f in &faces {
        by_dim[f.len() - 1].push(f);
    }
    for bucket in &mut by_dim {
        bucket.sort();
    }
    let index_of = |d: usize, f: &Face| -> usize {
        by_dim[d].binary_search_by(|g| (*g).cmp(&f)).expect("face present")
    };

    // rank of each boundary map; index d = rank of ∂_d : C_d -> C_{d-1}
    let mut ranks = vec![0usize; dim + 2];
    ranks[0] = 1; // augmentation C_0 -> GF(2), nonzero since there is a vertex
    for d in 1..=dim {
        let rows = by_dim[d - 1].len();
        let mut columns: Vec<Vec<u64>> = Vec::with_capacity(by_dim[d].len());
        for f in &by_dim[d] {
            let mut col = vec![0u64; rows.div_ceil(64)];
            for v in f.iter() {
                let sub = Face::new(f.iter().filter(|w| *w != v).cloned());
                let r = index_of(d - 1, &sub);
                col[r / 64] |= 1 << (r % 64);
            }
            columns.push(col);
        }
        ranks[d] = gf2_rank(&mut columns);
    }
    ranks[dim + 1] = 0;

    let betti = (0..=dim)
        .map(|d| by_dim[d].len() - ranks[d] - ranks[d + 1])
        .collect();
    Ok(betti)
}

/// Column-reduction rank over GF(2).
fn gf2_rank(columns: &mut [Vec<u64>]) -> usize {
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (column index, pivot bit)
    let mut rank = 0;
    for c in 0..columns.len() {
        loop {
            let Some(bit) = leading_bit(&columns[c]) else {
                break;
            };
            if let Some(&(pc, _)) = pivots.iter().find(|&&(_, pb)| pb == bit) {
                let (a, b) = split_two(columns, pc, c);
                for (x, y) in a.iter().zip(b.iter_mut()) {
                    *y ^= *x;
                }
            } else {
                pivots.push((c, bit));
                rank += 1;
                break;
            }
        }
    }
    rank
}

fn leading_bit(col: &[u64]) -> Option<usize> {
    for (i, &b) in col.iter().enumerate() {
        if b != 0 {
            return Some(i * 64 + b.trailing_zeros() as usize);
        }
    }
    None
}

fn split_two(cols: &mut [Vec<u64>], a: usize, b: usize) -> (&Vec<u64>, &mut Vec<u64>) {
    assert!(a != b);
    if a < b {
        let (l, r) = cols.split_at_mut(b);
        (&l[a], &mut r[0])
    } else {
        let (l, r) = cols.split_at_mut(a);
        (&r[0], &mut l[b])
    }
}

/// Outcome of the d-Leray check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LerayCheck {
    Ok,
    /// An induced subcomplex with nonvanishing reduced homology in a
    /// dimension >= d.
    Witness { vertices: Vec<VertexLabel>, dim: usize },
}

/// Exhaustive d-Leray test: every induced subcomplex must have vanishing
/// reduced GF(2)-homology in all dimensions >= d.
pub fn is_d_leray(k: &SimplicialComplex, d: usize, guards: &Guards) -> Result<LerayCheck> {
    let n = k.vertices().len();
    if n > guards.leray_vertices {
        return Err(Error::SizeGuard(format!(
            "d-Leray check on {n} vertices exceeds bound {}",
            guards.leray_vertices
        )));
    }
    for mask in 1u64..(1u64 << n) {
        let w: BTreeSet<VertexLabel> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| k.vertices()[i].clone())
            .collect();
        let sub = k.induced_subcomplex(&w)?;
        let betti = betti_z2(&sub, guards)?;
        for (m, b) in betti.iter().enumerate() {
            if m >= d && *b > 0 {
                return Ok(LerayCheck::Witness {
                    vertices: w.into_iter().collect(),
                    dim: m,
                });
            }
        }
    }
    Ok(LerayCheck::Ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::Guards;

    #[test]
    fn betti_of_simplices_vanish() {
        let g = Guards::default();
        for d in 1..=4 {
            let betti = betti_z2(&fixtures::simplex(d), &g).unwrap();
            assert!(betti.iter().all(|&b| b == 0), "simplex d={d}: {betti:?}");
        }
    }

    #[test]
    fn betti_of_sphere_boundaries() {
        let g = Guards::default();
        // boundary of the n-simplex is an (n-1)-sphere
        for n in 2..=4 {
            let k = SimplicialComplex::simplex_skeleton(n, n - 1);
            let betti = betti_z2(&k, &g).unwrap();
            let mut expect = vec![0; n];
            expect[n - 1] = 1;
            assert_eq!(betti, expect, "boundary of simplex n={n}");
        }
    }

    #[test]
    fn betti_fig2_contractible() {
        let g = Guards::default();
        let betti = betti_z2(&fixtures::fig2(), &g).unwrap();
        assert!(betti.iter().all(|&b| b == 0));
    }

    #[test]
    fn betti_disconnected_counts_components() {
        let g = Guards::default();
        let k = SimplicialComplex::from_facet_labels(&[&["1", "2"], &["3", "4"], &["5"]]).unwrap();
        let betti = betti_z2(&k, &g).unwrap();
        assert_eq!(betti, vec![2, 0]);
    }

    #[test]
    fn leray_cases() {
        let g = Guards::default();
        assert_eq!(is_d_leray(&fixtures::fig2(), 1, &g).unwrap(), LerayCheck::Ok);
        match is_d_leray(&fixtures::boundary_triangle(), 1, &g).unwrap() {
            LerayCheck::Witness { vertices, dim } => {
                assert_eq!(vertices.len(), 3);
                assert_eq!(dim, 1);
            }
            LerayCheck::Ok => panic!("boundary triangle is not 1-Leray"),
        }
        assert_eq!(is_d_leray(&fixtures::mobius(), 2, &g).unwrap(), LerayCheck::Ok);
    }

    #[test]
    fn leray_guard_fires() {
        let g = Guards {
            leray_vertices: 3,
            ..Guards::default()
        };
        assert!(is_d_leray(&fixtures::fig2(), 1, &g).is_err());
    }
}
