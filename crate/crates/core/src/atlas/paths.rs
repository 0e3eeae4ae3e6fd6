//! Explicit curves in the fan-triangulated 4g-gon.
//!
//! A curve is recorded by the cyclic sequence of polygon sides it exits
//! through; between consecutive exits it runs as a chord of the polygon,
//! crossing the fan diagonals separating the two sides. Chords between fixed
//! sides of a disk are unique up to isotopy, so the side sequence determines
//! the curve. The induced edge-crossing word is freely reduced (an arc
//! entering and leaving a triangle through the same edge is pulled across
//! it); on a one-vertex triangulation a reduced transversal is taut, so the
//! crossing counts are the normal coordinates.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::surface::{NormalCurve, OrEdge, Triangulation};

/// Edge id of the side pair containing polygon side `j`.
pub fn side_edge(g: usize, j: usize) -> usize {
    debug_assert!(j < 4 * g);
    let block = j / 4;
    match j % 4 {
        0 | 2 => 2 * block,
        _ => 2 * block + 1,
    }
}

/// The polygon side glued to side `j`.
pub fn partner(j: usize) -> usize {
    if j % 4 < 2 {
        j + 2
    } else {
        j - 2
    }
}

/// Edge id of the fan diagonal d_k (2 <= k <= 4g-2).
pub fn diag_edge(g: usize, k: usize) -> usize {
    debug_assert!((2..=4 * g - 2).contains(&k));
    2 * g + (k - 2)
}

/// Diagonals crossed by a chord from side `p` to side `q`, in traversal order.
fn chord_diagonals(g: usize, p: usize, q: usize, out: &mut Vec<usize>) {
    let (lo, hi) = (p.min(q), p.max(q));
    let ks: Vec<usize> = (lo + 1..=hi).filter(|&k| (2..=4 * g - 2).contains(&k)).collect();
    if p < q {
        out.extend(ks.iter().map(|&k| diag_edge(g, k)));
    } else {
        out.extend(ks.iter().rev().map(|&k| diag_edge(g, k)));
    }
}

/// Remove cyclically adjacent equal pairs until none remain.
pub fn reduce_cyclic(mut seq: Vec<usize>) -> Vec<usize> {
    loop {
        let n = seq.len();
        if n < 2 {
            return seq;
        }
        let mut removed = false;
        let mut i = 0;
        while i + 1 < seq.len() {
            if seq[i] == seq[i + 1] {
                seq.drain(i..=i + 1);
                removed = true;
                if i > 0 {
                    i -= 1;
                }
            } else {
                i += 1;
            }
        }
        if seq.len() >= 2 && seq[0] == *seq.last().unwrap() {
            seq.remove(seq.len() - 1);
            seq.remove(0);
            removed = true;
        }
        if !removed {
            return seq;
        }
    }
}

/// Build a normal curve from its cyclic sequence of exit sides.
pub fn curve_from_jumps(tri: &Triangulation, jumps: &[usize]) -> Result<NormalCurve> {
    let g = tri.genus;
    if jumps.is_empty() {
        return Err(Error::InvalidCoordinates("empty jump sequence".into()));
    }
    let mut seq: Vec<usize> = Vec::new();
    for (m, &q) in jumps.iter().enumerate() {
        let prev = jumps[(m + jumps.len() - 1) % jumps.len()];
        chord_diagonals(g, partner(prev), q, &mut seq);
        seq.push(side_edge(g, q));
    }
    let seq = reduce_cyclic(seq);
    if seq.is_empty() {
        return Err(Error::InvalidCoordinates("curve reduces to nothing".into()));
    }
    let mut w = vec![BigUint::default(); tri.num_edges()];
    for &e in &seq {
        w[e] += 1u32;
    }
    NormalCurve::new(tri, w)
}

/// All ways of re-routing one corner passage of the curve around the other
/// side of the vertex. The arc between consecutive crossings (X, Y) cuts a
/// corner sector at the vertex; replacing it by the complementary tour, which
/// crosses every other edge end around the vertex once, yields the same curve
/// of the closed surface pushed across the marked point. Candidates are
/// produced for every route position and every matching sector, in a fixed
/// order; callers filter them by their intersection contracts.
pub fn vertex_pushed_variants(tri: &Triangulation, seq: &[usize]) -> Vec<Vec<usize>> {
    let rot = tri.vertex_rotation();
    let n = rot.len();
    let m = seq.len();
    let mut out = Vec::new();
    for pos in 0..m {
        let x = seq[pos];
        let y = seq[(pos + 1) % m];
        for k in 0..n {
            let prev = rot[(k + n - 1) % n].edge();
            let here = rot[k].edge();
            let tour: Option<Vec<usize>> = if (prev, here) == (x, y) {
                // complementary tour crossing R[k-2], R[k-3], ..., R[k+1]
                Some((1..n - 1).map(|s| rot[(k + n - 1 - s) % n].edge()).collect())
            } else if (prev, here) == (y, x) {
                Some((1..n - 1).map(|s| rot[(k + s) % n].edge()).collect())
            } else {
                None
            };
            if let Some(tour) = tour {
                let mut v = Vec::with_capacity(m + tour.len());
                v.extend_from_slice(&seq[..=pos]);
                v.extend_from_slice(&tour);
                v.extend_from_slice(&seq[pos + 1..]);
                let v = reduce_cyclic(v);
                if !v.is_empty() {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// The two push-offs of the loop formed by edge `e`: the curves running
/// parallel to `e` and closing up around the vertex on either side, each
/// crossing the edge ends swept on its side once. Twisting one way about the
/// first and the other way about the second realizes the point push along
/// the loop.
pub fn edge_pushoffs(tri: &Triangulation, e: usize) -> Result<(NormalCurve, NormalCurve)> {
    let rot = tri.vertex_rotation();
    let n = rot.len();
    let pos_f = rot.iter().position(|&o| o == OrEdge::fwd(e)).unwrap();
    let pos_b = rot.iter().position(|&o| o == OrEdge::bwd(e)).unwrap();
    let arc = |from: usize, to: usize| -> Vec<usize> {
        let mut v = Vec::new();
        let mut i = (from + 1) % n;
        while i != to {
            v.push(rot[i].edge());
            i = (i + 1) % n;
        }
        v
    };
    let c1 = curve_from_sequence(tri, &arc(pos_f, pos_b))?;
    let c2 = curve_from_sequence(tri, &arc(pos_b, pos_f))?;
    Ok((c1, c2))
}

/// Normal curve from an explicit edge-crossing sequence.
pub fn curve_from_sequence(tri: &Triangulation, seq: &[usize]) -> Result<NormalCurve> {
    let seq = reduce_cyclic(seq.to_vec());
    let mut w = vec![BigUint::default(); tri.num_edges()];
    for &e in &seq {
        w[e] += 1u32;
    }
    NormalCurve::new(tri, w)
}

/// Crossing sequence of a jump route, reduced.
pub fn jump_sequence(tri: &Triangulation, jumps: &[usize]) -> Vec<usize> {
    let g = tri.genus;
    let mut seq: Vec<usize> = Vec::new();
    for (m, &q) in jumps.iter().enumerate() {
        let prev = jumps[(m + jumps.len() - 1) % jumps.len()];
        chord_diagonals(g, partner(prev), q, &mut seq);
        seq.push(side_edge(g, q));
    }
    reduce_cyclic(seq)
}

/// The boundary push-off of the fan diagonal d_{4j}, pushed into the side
/// holding handles 1..j: the curve runs parallel to the diagonal and closes
/// up around the vertex, crossing every region-interior edge end it passes.
/// This is the separating curve splitting off the first j handles, with the
/// vertex on the other side.
pub fn diagonal_pushoff(tri: &Triangulation, j: usize) -> Result<NormalCurve> {
    let g = tri.genus;
    if !(1..=g - 1).contains(&j) {
        return Err(Error::Other(format!("no separating curve index {j} at genus {g}")));
    }
    let d = diag_edge(g, 4 * j);
    let rotation = tri.vertex_rotation();
    let n = rotation.len();
    let pos_f = rotation.iter().position(|&o| o == OrEdge::fwd(d)).unwrap();
    let pos_b = rotation.iter().position(|&o| o == OrEdge::bwd(d)).unwrap();
    // interior edges of the handle region: side pairs of handles 1..j and
    // diagonals d_2 .. d_{4j-1}
    let mut interior = vec![false; tri.num_edges()];
    for i in 0..2 * j {
        interior[i] = true;
    }
    for k in 2..4 * j {
        interior[diag_edge(g, k)] = true;
    }
    let arc = |from: usize, to: usize| -> Vec<usize> {
        let mut v = Vec::new();
        let mut i = (from + 1) % n;
        while i != to {
            v.push(rotation[i].edge());
            i = (i + 1) % n;
        }
        v
    };
    let a1 = arc(pos_f, pos_b);
    let a2 = arc(pos_b, pos_f);
    let pick = if a1.iter().all(|&e| interior[e]) {
        a1
    } else if a2.iter().all(|&e| interior[e]) {
        a2
    } else {
        return Err(Error::Other("handle region is not contiguous at the vertex".into()));
    };
    if pick.len() != 12 * j - 4 {
        return Err(Error::Other(format!(
            "push-off tour has length {} instead of {}",
            pick.len(),
            12 * j - 4
        )));
    }
    let seq = reduce_cyclic(pick);
    let mut w = vec![BigUint::default(); tri.num_edges()];
    for &e in &seq {
        w[e] += 1u32;
    }
    NormalCurve::new(tri, w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_standard_curves() {
        let t = Triangulation::base(1).unwrap();
        let a1 = curve_from_jumps(&t, &[1]).unwrap();
        assert_eq!(a1, NormalCurve::from_u32(&t, &[0, 1, 1]).unwrap());
        let b1 = curve_from_jumps(&t, &[0]).unwrap();
        assert_eq!(b1, NormalCurve::from_u32(&t, &[1, 0, 1]).unwrap());
    }

    #[test]
    fn reduce_handles_wraparound() {
        assert_eq!(reduce_cyclic(vec![3, 1, 2, 2, 1, 3]), Vec::<usize>::new());
        assert_eq!(reduce_cyclic(vec![1, 2, 3]), vec![1, 2, 3]);
        assert_eq!(reduce_cyclic(vec![5, 1, 1, 5, 7]), vec![7]);
    }

    #[test]
    fn genus2_pushoff_profile() {
        let t = Triangulation::base(2).unwrap();
        let d1 = diagonal_pushoff(&t, 1).unwrap();
        // crosses a1, b1, d2, d3 twice each and nothing else
        let mut want = vec![0u32; 9];
        want[0] = 2; // a1
        want[1] = 2; // b1
        want[4] = 2; // d2
        want[5] = 2; // d3
        assert_eq!(d1, NormalCurve::from_u32(&t, &want).unwrap());
    }
}
