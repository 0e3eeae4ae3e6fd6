use num_bigint::BigUint;

use super::{Triangulation};
use crate::error::{Error, Result};

/// Hard cap on the number of crossing points a curve may have before we
/// refuse to walk it point by point.
const TRACE_CAP: usize = 20_000_000;

/// Explicit strand structure of a normal multicurve: the weight vector is
/// unfolded into individual crossing points and the corner-arc pairing is
/// followed through the triangles. Within one corner the parallel arcs are
/// nested, so the innermost point on one side meets the innermost point on
/// the other; this determines the whole multicurve.
pub(crate) struct Strands<'a> {
    pub tri: &'a Triangulation,
    pub w: Vec<usize>,
    base: Vec<usize>,
    fwd: Vec<(usize, usize)>,
    bwd: Vec<(usize, usize)>,
    /// corner[t][i] = number of arcs between sides i and i+1 of triangle t
    corner: Vec<[usize; 3]>,
}

/// A directed strand state: the strand has just crossed `edge` at `point`
/// and is entering the triangle glued to the given side (0 = forward slot).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct State {
    pub edge: usize,
    pub point: usize,
    pub into_bwd: bool,
}

impl<'a> Strands<'a> {
    pub fn new(tri: &'a Triangulation, weights: &[BigUint]) -> Result<Self> {
        let w: Vec<usize> = weights
            .iter()
            .map(|x| usize::try_from(x).map_err(|_| Error::Other("curve too heavy to trace".into())))
            .collect::<Result<_>>()?;
        let total: usize = w.iter().sum();
        if total > TRACE_CAP {
            return Err(Error::Other("curve too heavy to trace".into()));
        }
        let mut base = Vec::with_capacity(w.len());
        let mut acc = 0usize;
        for &x in &w {
            base.push(acc);
            acc += x;
        }
        let (fwd, bwd) = tri.slots();
        let mut corner = Vec::with_capacity(tri.triangles.len());
        for (t, tris) in tri.triangles.iter().enumerate() {
            let mut c = [0usize; 3];
            for i in 0..3 {
                let x = w[tris[i].edge()];
                let y = w[tris[(i + 1) % 3].edge()];
                let z = w[tris[(i + 2) % 3].edge()];
                let sum = x + y;
                if sum < z || (sum - z) % 2 != 0 {
                    return Err(Error::InvalidCoordinates(format!("corner underflow in triangle {t}")));
                }
                c[i] = (sum - z) / 2;
            }
            corner.push(c);
        }
        Ok(Strands { tri, w, base, fwd, bwd, corner })
    }

    pub fn total_points(&self) -> usize {
        self.w.iter().sum()
    }

    pub fn corner_count(&self, t: usize, i: usize) -> usize {
        self.corner[t][i]
    }

    /// Triangle, corner index, and nesting depth (0 nearest the corner) of
    /// the arc traversed when stepping from `s`.
    pub fn arc_info(&self, s: State) -> (usize, usize, usize) {
        let (t, i) = if s.into_bwd { self.bwd[s.edge] } else { self.fwd[s.edge] };
        let o = self.tri.triangles[t][i];
        let we = self.w[s.edge];
        let l = if o.is_fwd() { s.point } else { we - 1 - s.point };
        let n_prev = self.corner[t][(i + 2) % 3];
        if l < n_prev {
            (t, (i + 2) % 3, l)
        } else {
            (t, i, we - 1 - l)
        }
    }

    fn state_id(&self, s: State) -> usize {
        2 * (self.base[s.edge] + s.point) + (s.into_bwd as usize)
    }

    pub fn point_base(&self, e: usize) -> usize {
        self.base[e]
    }

    /// Follow the strand across one triangle. Returns the next state plus the
    /// slot it exits through and the sign of the exit crossing (+1 when the
    /// strand leaves through the forward side of the exit edge).
    pub fn step(&self, s: State) -> (State, (usize, usize), i64) {
        let (t, i) = if s.into_bwd { self.bwd[s.edge] } else { self.fwd[s.edge] };
        let o = self.tri.triangles[t][i];
        debug_assert_eq!(o.edge(), s.edge);
        let we = self.w[s.edge];
        let l = if o.is_fwd() { s.point } else { we - 1 - s.point };
        let n_prev = self.corner[t][(i + 2) % 3];
        let (j, lp) = if l < n_prev {
            // corner between sides i-1 and i; depth k = l
            let j = (i + 2) % 3;
            let wj = self.w[self.tri.triangles[t][j].edge()];
            (j, wj - 1 - l)
        } else {
            // corner between sides i and i+1; depth k = we-1-l
            let j = (i + 1) % 3;
            (j, we - 1 - l)
        };
        let o2 = self.tri.triangles[t][j];
        let e2 = o2.edge();
        let p2 = if o2.is_fwd() { lp } else { self.w[e2] - 1 - lp };
        let (next, sign) = if o2.is_fwd() {
            (State { edge: e2, point: p2, into_bwd: true }, 1)
        } else {
            (State { edge: e2, point: p2, into_bwd: false }, -1)
        };
        (next, (t, j), sign)
    }

    /// Trace all strands. Returns for each component the per-edge signed
    /// crossing totals (sign conventions fixed by the traversal direction).
    pub fn trace_all(&self) -> Vec<Vec<i64>> {
        let n = self.total_points();
        let mut seen = vec![false; 2 * n];
        let mut out = Vec::new();
        for e in 0..self.w.len() {
            for p in 0..self.w[e] {
                for into_bwd in [false, true] {
                    let start = State { edge: e, point: p, into_bwd };
                    if seen[self.state_id(start)] {
                        continue;
                    }
                    // walk the orbit
                    let mut signs = vec![0i64; self.w.len()];
                    let mut s = start;
                    loop {
                        seen[self.state_id(s)] = true;
                        let (next, _slot, sign) = self.step(s);
                        signs[next.edge] += sign;
                        s = next;
                        if s == start {
                            break;
                        }
                    }
                    // mark the reverse orbit as seen so each component counts once
                    let mut r = reverse_of(self, start);
                    if !seen[self.state_id(r)] {
                        let rstart = r;
                        loop {
                            seen[self.state_id(r)] = true;
                            let (next, _, _) = self.step(r);
                            r = next;
                            if r == rstart {
                                break;
                            }
                        }
                    }
                    out.push(signs);
                }
            }
        }
        out
    }
}

/// The state describing the same point traversed in the opposite direction.
fn reverse_of(_s: &Strands<'_>, st: State) -> State {
    State { edge: st.edge, point: st.point, into_bwd: !st.into_bwd }
}

/// Result of tracing a multicurve.
#[derive(Debug, Clone)]
pub struct Traced {
    pub components: usize,
    pub signed_crossings: Vec<Vec<i64>>,
}

pub fn components(tri: &Triangulation, weights: &[BigUint]) -> Result<usize> {
    let s = Strands::new(tri, weights)?;
    Ok(s.trace_all().len())
}

/// Per-edge signed crossing numbers of a connected curve (sign of the whole
/// vector depends on the traversal direction and is irrelevant downstream).
pub fn homology_vector(tri: &Triangulation, weights: &[BigUint]) -> Result<Vec<i64>> {
    let s = Strands::new(tri, weights)?;
    let all = s.trace_all();
    if all.len() != 1 {
        return Err(Error::Disconnected(all.len()));
    }
    Ok(all.into_iter().next().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::NormalCurve;

    fn torus_curve(p: i64, q: i64) -> Vec<BigUint> {
        [q.unsigned_abs(), p.unsigned_abs(), (p - q).unsigned_abs()]
            .iter()
            .map(|&x| BigUint::from(x))
            .collect()
    }

    #[test]
    fn torus_primitive_curves_connected() {
        let t = Triangulation::base(1).unwrap();
        for (p, q) in [(1i64, 0i64), (0, 1), (1, 1), (2, 3), (3, -5)] {
            assert_eq!(components(&t, &torus_curve(p, q)).unwrap(), 1, "({p},{q})");
        }
    }

    #[test]
    fn torus_multiple_components() {
        let t = Triangulation::base(1).unwrap();
        assert_eq!(components(&t, &torus_curve(2, 0)).unwrap(), 2);
        assert_eq!(components(&t, &torus_curve(3, 3)).unwrap(), 3);
    }

    #[test]
    fn vertex_link_single_component() {
        for g in 1..=3 {
            let t = Triangulation::base(g).unwrap();
            let w: Vec<BigUint> = vec![BigUint::from(2u32); t.num_edges()];
            assert_eq!(components(&t, &w).unwrap(), 1);
            // null-homologous: all signed crossings cancel
            let h = homology_vector(&t, &w).unwrap();
            assert!(h.iter().all(|&x| x == 0), "{h:?}");
        }
    }

    #[test]
    fn torus_homology_signs() {
        let t = Triangulation::base(1).unwrap();
        let c = NormalCurve::from_u32(&t, &[0, 1, 1]).unwrap();
        let h = homology_vector(&t, &c.weights).unwrap();
        // the (1,0) curve crosses edge b once and edge d once, edge a never
        assert_eq!(h[0], 0);
        assert_eq!(h[1].abs(), 1);
        assert_eq!(h[2].abs(), 1);
    }
}
