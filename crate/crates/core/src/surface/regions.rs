use num_bigint::BigUint;

use super::trace::Strands;
use super::Triangulation;
use crate::error::Result;

/// Complementary regions of a normal multicurve.
///
/// Within a triangle the corner arcs cut the interior into a tip piece at
/// each corner, a stack of strips behind each arc, and a central piece; the
/// pieces glue across the edge intervals between consecutive crossing
/// points. The single vertex lies in the region all tip pieces merge into.
pub struct Regions {
    uf: Vec<usize>,
    /// piece id ranges per triangle
    tri_base: Vec<usize>,
    corner: Vec<[usize; 3]>,
    vertex_piece: usize,
}

fn find(uf: &mut Vec<usize>, x: usize) -> usize {
    if uf[x] != x {
        let r = find(uf, uf[x]);
        uf[x] = r;
        r
    } else {
        x
    }
}

fn union(uf: &mut Vec<usize>, a: usize, b: usize) {
    let ra = find(uf, a);
    let rb = find(uf, b);
    if ra != rb {
        uf[ra] = rb;
    }
}

impl Regions {
    /// Piece layout per triangle: tips 0..3, then strips for each corner
    /// (corner i contributes n_i strips), then one central piece.
    pub fn new(tri: &Triangulation, weights: &[BigUint]) -> Result<Regions> {
        let strands = Strands::new(tri, weights)?;
        let nt = tri.triangles.len();
        let mut tri_base = Vec::with_capacity(nt);
        let mut corner = Vec::with_capacity(nt);
        let mut total = 0usize;
        for t in 0..nt {
            tri_base.push(total);
            let c = [strands_corner(&strands, t, 0), strands_corner(&strands, t, 1), strands_corner(&strands, t, 2)];
            total += 3 + c[0] + c[1] + c[2] + 1;
            corner.push(c);
        }
        let mut uf: Vec<usize> = (0..total).collect();
        let piece = |base: usize, c: &[usize; 3], kind: Piece| -> usize {
            match kind {
                Piece::Tip(i) => base + i,
                Piece::Strip(i, k) => {
                    debug_assert!(k < c[i]);
                    base + 3 + c[..i].iter().sum::<usize>() + k
                }
                Piece::Center => base + 3 + c[0] + c[1] + c[2],
            }
        };
        // a corner with no arcs opens into the centre
        for t in 0..nt {
            for i in 0..3 {
                if corner[t][i] == 0 {
                    union(&mut uf, piece(tri_base[t], &corner[t], Piece::Tip(i)), piece(tri_base[t], &corner[t], Piece::Center));
                }
            }
        }
        // glue across each edge: the pieces along the two sides of interval k
        let (fwd, bwd) = tri.slots();
        for e in 0..tri.num_edges() {
            let w: usize = usize::try_from(&weights[e]).unwrap();
            for k in 0..=w {
                let pa = side_piece(tri, &strands, &corner, &tri_base, fwd[e], k, w, &piece);
                let pb = side_piece(tri, &strands, &corner, &tri_base, bwd[e], k, w, &piece);
                union(&mut uf, pa, pb);
            }
        }
        // all tips surround the single vertex
        let v0 = piece(tri_base[0], &corner[0], Piece::Tip(0));
        for t in 0..nt {
            for i in 0..3 {
                union(&mut uf, v0, piece(tri_base[t], &corner[t], Piece::Tip(i)));
            }
        }
        let vertex_piece = find(&mut uf, v0);
        Ok(Regions { uf, tri_base, corner, vertex_piece })
    }

    fn piece_id(&self, t: usize, kind: Piece) -> usize {
        let base = self.tri_base[t];
        let c = &self.corner[t];
        match kind {
            Piece::Tip(i) => base + i,
            Piece::Strip(i, k) => base + 3 + c[..i].iter().sum::<usize>() + k,
            Piece::Center => base + 3 + c[0] + c[1] + c[2],
        }
    }

    /// Whether the arc stack at corner `i` of triangle `t`, depth `k` (zero
    /// nearest the corner), has the vertex region on its corner side.
    pub fn arc_faces_vertex(&mut self, t: usize, i: usize, k: usize) -> bool {
        let inner = if k == 0 { self.piece_id(t, Piece::Tip(i)) } else { self.piece_id(t, Piece::Strip(i, k - 1)) };
        find(&mut self.uf, inner) == self.vertex_piece
    }

    pub fn vertex_region(&mut self) -> usize {
        self.vertex_piece
    }

    pub fn region_of(&mut self, t: usize, kind: Piece) -> usize {
        let id = self.piece_id(t, kind);
        find(&mut self.uf, id)
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Piece {
    Tip(usize),
    Strip(usize, usize),
    Center,
}

fn strands_corner(s: &Strands<'_>, t: usize, i: usize) -> usize {
    s.corner_count(t, i)
}

#[allow(clippy::too_many_arguments)]
fn side_piece(
    tri: &Triangulation,
    strands: &Strands<'_>,
    corner: &[[usize; 3]],
    tri_base: &[usize],
    slot: (usize, usize),
    k: usize,
    w: usize,
    piece: &dyn Fn(usize, &[usize; 3], Piece) -> usize,
) -> usize {
    let (t, i) = slot;
    let o = tri.triangles[t][i];
    // local interval index along the side as the triangle reads it
    let lk = if o.is_fwd() { k } else { w - k };
    let n_prev = corner[t][(i + 2) % 3]; // corner at the tail of side i
    let n_next = corner[t][i]; // corner at the head of side i
    debug_assert_eq!(n_prev + n_next, w);
    let _ = strands;
    let c = &corner[t];
    let base = tri_base[t];
    if lk == 0 {
        piece(base, c, Piece::Tip((i + 2) % 3))
    } else if lk < n_prev {
        piece(base, c, Piece::Strip((i + 2) % 3, lk - 1))
    } else if lk == w {
        piece(base, c, Piece::Tip(i))
    } else if lk > n_prev {
        piece(base, c, Piece::Strip(i, w - lk - 1))
    } else {
        // lk == n_prev, strictly between the two blocks
        piece(base, c, Piece::Center)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::NormalCurve;

    #[test]
    fn torus_curve_complement_is_one_region() {
        let t = Triangulation::base(1).unwrap();
        let c = NormalCurve::from_u32(&t, &[0, 1, 1]).unwrap();
        let mut r = Regions::new(&t, &c.weights).unwrap();
        // complement of a nonseparating curve on the torus is connected:
        // every piece is the vertex region
        let vr = r.vertex_region();
        for t_i in 0..2 {
            assert_eq!(r.region_of(t_i, Piece::Center), vr);
        }
    }
}

/// Whether the essential curve `z`, disjoint from the multicurve `walls`,
/// lies in the same complementary region of the walls as the vertex.
///
/// The union walls + z is traced with component labels; `z` is in the vertex
/// region exactly when one of its arcs has the vertex piece on a side.
pub fn shares_region_with_vertex(
    tri: &Triangulation,
    walls: &[BigUint],
    z: &[BigUint],
) -> Result<bool> {
    use super::trace::State;
    let sum: Vec<BigUint> = walls.iter().zip(z).map(|(a, b)| a + b).collect();
    super::coords::validate(tri, &sum)?;
    let strands = Strands::new(tri, &sum)?;
    let mut regions = Regions::new(tri, &sum)?;
    // find a directed state whose orbit is a z-component: walk orbits and
    // compare per-edge crossing counts with z
    let zc: Vec<usize> = z.iter().map(|x| usize::try_from(x).unwrap()).collect();
    let mut seen = vec![false; 2 * strands.total_points()];
    let id = |st: &Strands, s: State| -> usize {
        2 * (st.point_base(s.edge) + s.point) + (s.into_bwd as usize)
    };
    for e in 0..sum.len() {
        let we = usize::try_from(&sum[e]).unwrap();
        for p in 0..we {
            for into_bwd in [false, true] {
                let start = State { edge: e, point: p, into_bwd };
                if seen[id(&strands, start)] {
                    continue;
                }
                let mut counts = vec![0usize; sum.len()];
                let mut arcs = Vec::new();
                let mut s = start;
                loop {
                    seen[id(&strands, start)] = true;
                    seen[id(&strands, s)] = true;
                    arcs.push(strands.arc_info(s));
                    let (next, _, _) = strands.step(s);
                    counts[next.edge] += 1;
                    s = next;
                    if s == start {
                        break;
                    }
                }
                if counts == zc {
                    let vr = regions.vertex_region();
                    for (t, i, k) in arcs {
                        let n = strands.corner_count(t, i);
                        let inner = if k == 0 {
                            regions.region_of(t, Piece::Tip(i))
                        } else {
                            regions.region_of(t, Piece::Strip(i, k - 1))
                        };
                        let outer = if k + 1 == n {
                            regions.region_of(t, Piece::Center)
                        } else {
                            regions.region_of(t, Piece::Strip(i, k))
                        };
                        if inner == vr || outer == vr {
                            return Ok(true);
                        }
                    }
                    return Ok(false);
                }
            }
        }
    }
    Err(crate::error::Error::Other("curve not found in union".into()))
}
