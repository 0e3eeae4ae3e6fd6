//! Combinatorics of one-vertex triangulations of a closed oriented surface
//! and the exact calculus of isotopy classes of curves in normal coordinates.

mod coords;
pub mod regions;
mod intersect;
mod shorten;
mod trace;
mod twist;

pub use coords::NormalCurve;
pub use intersect::intersection;
pub use shorten::{shorten, ShortenOutcome};
pub use trace::{components, homology_vector, Traced};
pub use twist::TwistRecipe;

use crate::error::{Error, Result};

/// An edge together with a direction of traversal.
///
/// Edge `e` traversed forwards is `2e`, backwards `2e + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrEdge(pub usize);

impl OrEdge {
    pub fn fwd(e: usize) -> Self {
        OrEdge(2 * e)
    }
    pub fn bwd(e: usize) -> Self {
        OrEdge(2 * e + 1)
    }
    pub fn edge(self) -> usize {
        self.0 / 2
    }
    pub fn is_fwd(self) -> bool {
        self.0 % 2 == 0
    }
    pub fn rev(self) -> Self {
        OrEdge(self.0 ^ 1)
    }
}

impl std::fmt::Debug for OrEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_fwd() {
            write!(f, "+{}", self.edge())
        } else {
            write!(f, "-{}", self.edge())
        }
    }
}

/// A one-vertex triangulation: a list of oriented triangles, each a cyclic
/// triple of directed edges read counterclockwise. Orientability means every
/// edge appears exactly once forwards and once backwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    pub genus: usize,
    pub triangles: Vec<[OrEdge; 3]>,
}

/// Location of a directed edge: (triangle index, side index).
pub type Slot = (usize, usize);

impl Triangulation {
    pub fn num_edges(&self) -> usize {
        6 * self.genus - 3
    }

    pub fn num_triangles(&self) -> usize {
        4 * self.genus - 2
    }

    /// The canonical fan triangulation of the identified 4g-gon with boundary
    /// word a1 b1 a1' b1' ... ag bg ag' bg'. Edges 0..2g-1 are the side pairs
    /// (a_i = 2(i-1), b_i = 2(i-1)+1); edges 2g..6g-4 are the fan diagonals
    /// d_2..d_{4g-2} drawn from polygon corner 0.
    pub fn base(genus: usize) -> Result<Self> {
        if genus == 0 {
            return Err(Error::UnsupportedGenus(0));
        }
        let g = genus;
        // The directed edge lying on polygon side j, traversed counterclockwise.
        let side = |j: usize| -> OrEdge {
            let i = j / 4;
            match j % 4 {
                0 => OrEdge::fwd(2 * i),
                1 => OrEdge::fwd(2 * i + 1),
                2 => OrEdge::bwd(2 * i),
                _ => OrEdge::bwd(2 * i + 1),
            }
        };
        let diag = |k: usize| -> usize { 2 * g + (k - 2) }; // edge id of d_k, 2 <= k <= 4g-2
        let mut triangles = Vec::with_capacity(4 * g - 2);
        if g == 1 {
            triangles.push([side(0), side(1), OrEdge::bwd(diag(2))]);
            triangles.push([OrEdge::fwd(diag(2)), side(2), side(3)]);
        } else {
            triangles.push([side(0), side(1), OrEdge::bwd(diag(2))]);
            for k in 2..=(4 * g - 3) {
                triangles.push([OrEdge::fwd(diag(k)), side(k), OrEdge::bwd(diag(k + 1))]);
            }
            triangles.push([OrEdge::fwd(diag(4 * g - 2)), side(4 * g - 2), side(4 * g - 1)]);
        }
        let t = Triangulation { genus: g, triangles };
        t.check()?;
        Ok(t)
    }

    /// Verify the structural invariants: counts, orientability, Euler characteristic.
    pub fn check(&self) -> Result<()> {
        let e = self.num_edges();
        if self.triangles.len() != self.num_triangles() {
            return Err(Error::InvalidCoordinates("wrong triangle count".into()));
        }
        let mut seen_fwd = vec![false; e];
        let mut seen_bwd = vec![false; e];
        for tri in &self.triangles {
            for &s in tri {
                if s.edge() >= e {
                    return Err(Error::InvalidCoordinates("edge id out of range".into()));
                }
                let seen = if s.is_fwd() { &mut seen_fwd } else { &mut seen_bwd };
                if seen[s.edge()] {
                    return Err(Error::InvalidCoordinates(format!(
                        "edge {} repeats with the same direction",
                        s.edge()
                    )));
                }
                seen[s.edge()] = true;
            }
        }
        if !(seen_fwd.iter().all(|&b| b) && seen_bwd.iter().all(|&b| b)) {
            return Err(Error::InvalidCoordinates("missing edge side".into()));
        }
        Ok(())
    }

    /// Slots of the forward and backward sides of every edge.
    pub fn slots(&self) -> (Vec<Slot>, Vec<Slot>) {
        let e = self.num_edges();
        let mut fwd = vec![(usize::MAX, usize::MAX); e];
        let mut bwd = vec![(usize::MAX, usize::MAX); e];
        for (t, tri) in self.triangles.iter().enumerate() {
            for (i, &s) in tri.iter().enumerate() {
                if s.is_fwd() {
                    fwd[s.edge()] = (t, i);
                } else {
                    bwd[s.edge()] = (t, i);
                }
            }
        }
        (fwd, bwd)
    }

    pub fn slot_of(&self, o: OrEdge) -> Slot {
        for (t, tri) in self.triangles.iter().enumerate() {
            for (i, &s) in tri.iter().enumerate() {
                if s == o {
                    return (t, i);
                }
            }
        }
        unreachable!("oriented edge not present")
    }

    /// The four peripheral sides of the square around edge `e`, in the cyclic
    /// order (A, B, C, D) where the triangle containing +e reads (+e, A, B)
    /// and the one containing -e reads (-e, C, D). Opposite pairs are (A, C)
    /// and (B, D). Fails on a square whose two triangles coincide.
    pub fn square(&self, e: usize) -> Result<SquareFrame> {
        let (tp, ip) = self.slot_of(OrEdge::fwd(e));
        let (tn, inn) = self.slot_of(OrEdge::bwd(e));
        if tp == tn {
            return Err(Error::NotFlippable(e));
        }
        let a = self.triangles[tp][(ip + 1) % 3];
        let b = self.triangles[tp][(ip + 2) % 3];
        let c = self.triangles[tn][(inn + 1) % 3];
        let d = self.triangles[tn][(inn + 2) % 3];
        Ok(SquareFrame { e, a, b, c, d, tp, tn })
    }

    /// Flip edge `e` in place. The new diagonal reuses the id `e`.
    pub fn flip(&mut self, e: usize) -> Result<SquareFrame> {
        let f = self.square(e)?;
        self.triangles[f.tp] = [f.d, f.a, OrEdge::fwd(e)];
        self.triangles[f.tn] = [f.b, f.c, OrEdge::bwd(e)];
        Ok(f)
    }

    /// Relabel edges by the permutation `perm` (old id -> new id).
    pub fn relabel(&mut self, perm: &[usize]) {
        for tri in &mut self.triangles {
            for s in tri.iter_mut() {
                let e = perm[s.edge()];
                *s = if s.is_fwd() { OrEdge::fwd(e) } else { OrEdge::bwd(e) };
            }
        }
    }

    /// Canonical form for hashing: rotate each triple to start at its least
    /// side, sort triples.
    pub fn canonical(&self) -> Vec<[OrEdge; 3]> {
        let mut tris: Vec<[OrEdge; 3]> = self
            .triangles
            .iter()
            .map(|tri| {
                let k = (0..3).min_by_key(|&i| tri[i].0).unwrap();
                [tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]]
            })
            .collect();
        tris.sort();
        tris
    }

    /// Whether `other` is the same labelled triangulation up to reordering
    /// triangles, rotating triples, and reversing the intrinsic orientation
    /// of some edges. Orientation and order are pure bookkeeping: normal
    /// coordinates never see them. An edge reversed in one occurrence must be
    /// reversed in the other, so reversals are matched globally.
    pub fn same_up_to_reorientation(&self, other: &Triangulation) -> bool {
        if self.triangles.len() != other.triangles.len() {
            return false;
        }
        let mut used = vec![false; other.triangles.len()];
        let mut reversed: Vec<Option<bool>> = vec![None; self.num_edges()];
        fn assign(
            mine: &[[OrEdge; 3]],
            theirs: &[[OrEdge; 3]],
            t: usize,
            used: &mut [bool],
            reversed: &mut [Option<bool>],
        ) -> bool {
            if t == mine.len() {
                return true;
            }
            let old = &mine[t];
            for (u, cand) in theirs.iter().enumerate() {
                if used[u] {
                    continue;
                }
                for r in 0..3 {
                    if !(0..3).all(|i| cand[(i + r) % 3].edge() == old[i].edge()) {
                        continue;
                    }
                    let mut touched: Vec<usize> = Vec::new();
                    let mut ok = true;
                    for i in 0..3 {
                        let o = old[i];
                        let n = cand[(i + r) % 3];
                        let rev = o.is_fwd() != n.is_fwd();
                        match reversed[o.edge()] {
                            None => {
                                reversed[o.edge()] = Some(rev);
                                touched.push(o.edge());
                            }
                            Some(b) if b == rev => {}
                            _ => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        used[u] = true;
                        if assign(mine, theirs, t + 1, used, reversed) {
                            return true;
                        }
                        used[u] = false;
                    }
                    for e in touched {
                        reversed[e] = None;
                    }
                }
            }
            false
        }
        assign(&self.triangles, &other.triangles, 0, &mut used, &mut reversed)
    }

    /// The cyclic order of directed-edge *tails* around the vertex, i.e. the
    /// rotation system at the single vertex. Entry `o` means: the sector swept
    /// just after crossing the outgoing end of `o` (counterclockwise).
    ///
    /// Walking counterclockwise around the vertex from the corner of triangle
    /// t between sides i (head) and i+1 (tail) crosses the end of side i+1 and
    /// lands in the corner of the neighbouring triangle where the same edge
    /// end is a head.
    pub fn vertex_rotation(&self) -> Vec<OrEdge> {
        // Corner (t, i) sits between head(tri[t][i]) and tail(tri[t][i+1]).
        // Crossing the tail end of o = tri[t][i+1] lands in the corner whose
        // head end is the same geometric end. The same end of edge(o) viewed
        // from the other slot is the head of o.rev() there.
        let mut order = Vec::with_capacity(3 * self.triangles.len());
        let mut at: Slot = (0, 0);
        let start = at;
        loop {
            let (t, i) = at;
            let o = self.triangles[t][(i + 1) % 3];
            order.push(o);
            // find slot of o.rev(); in that triangle o.rev() is at side j, and
            // its head-corner is (t', j).
            let (t2, j) = self.slot_of(o.rev());
            at = (t2, j);
            if at == start {
                break;
            }
        }
        assert_eq!(
            order.len(),
            3 * self.triangles.len(),
            "one-vertex rotation must visit every corner"
        );
        order
    }
}

impl std::fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Triangulation(g={}, {:?})", self.genus, self.triangles)
    }
}

/// The data of one flip: the flipped edge and the square periphery at the
/// moment of the flip. Enough to transform coordinate vectors without
/// consulting the triangulation again.
#[derive(Clone, Copy, Debug)]
pub struct SquareFrame {
    pub e: usize,
    pub a: OrEdge,
    pub b: OrEdge,
    pub c: OrEdge,
    pub d: OrEdge,
    pub tp: usize,
    pub tn: usize,
}

impl SquareFrame {
    /// Update a weight vector across this flip:
    /// w'_e = max(w_A + w_C, w_B + w_D) - w_e.
    pub fn apply(&self, w: &mut [num_bigint::BigUint]) {
        let ac = &w[self.a.edge()] + &w[self.c.edge()];
        let bd = &w[self.b.edge()] + &w[self.d.edge()];
        let m = ac.max(bd);
        w[self.e] = m - &w[self.e];
    }
}

/// A coordinate change: a sequence of flips and relabellings taking one
/// triangulation to another. Reversing the move list (flips are involutions)
/// yields the inverse transform.
#[derive(Clone, Debug)]
pub enum Move {
    Flip(usize),
    Relabel(Vec<usize>),
}

#[derive(Clone, Debug, Default)]
pub struct Encoding {
    pub moves: Vec<Move>,
}

impl Encoding {
    pub fn apply(&self, tri: &mut Triangulation, w: &mut Vec<num_bigint::BigUint>) -> Result<()> {
        for m in &self.moves {
            match m {
                Move::Flip(e) => {
                    let f = tri.flip(*e)?;
                    f.apply(w);
                }
                Move::Relabel(p) => {
                    tri.relabel(p);
                    let mut nw = w.clone();
                    for (old, &new) in p.iter().enumerate() {
                        nw[new] = w[old].clone();
                    }
                    *w = nw;
                }
            }
        }
        Ok(())
    }

    pub fn reversed(&self) -> Encoding {
        let moves = self
            .moves
            .iter()
            .rev()
            .map(|m| match m {
                Move::Flip(e) => Move::Flip(*e),
                Move::Relabel(p) => {
                    let mut inv = vec![0; p.len()];
                    for (old, &new) in p.iter().enumerate() {
                        inv[new] = old;
                    }
                    Move::Relabel(inv)
                }
            })
            .collect();
        Encoding { moves }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn w(v: &[u32]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn base_counts() {
        for g in 1..=8 {
            let t = Triangulation::base(g).unwrap();
            assert_eq!(t.num_edges(), 6 * g - 3);
            assert_eq!(t.num_triangles(), 4 * g - 2);
            t.check().unwrap();
        }
    }

    #[test]
    fn genus_zero_rejected() {
        assert!(Triangulation::base(0).is_err());
    }

    #[test]
    fn rotation_visits_all_corners() {
        for g in 1..=5 {
            let t = Triangulation::base(g).unwrap();
            let rot = t.vertex_rotation();
            assert_eq!(rot.len(), 12 * g - 6);
            // every directed edge appears exactly once
            let mut seen = vec![false; 2 * t.num_edges()];
            for o in rot {
                assert!(!seen[o.0]);
                seen[o.0] = true;
            }
        }
    }

    #[test]
    fn flip_is_involution_on_weights() {
        let t0 = Triangulation::base(1).unwrap();
        // torus curve (p,q) has weights (|q|, |p|, |p-q|)
        let cases = [w(&[0, 1, 1]), w(&[1, 0, 1]), w(&[2, 3, 1]), w(&[5, 2, 3])];
        for e in 0..3 {
            for c in &cases {
                let mut tri = t0.clone();
                let mut v = c.clone();
                let f1 = tri.flip(e).unwrap();
                f1.apply(&mut v);
                let f2 = tri.flip(e).unwrap();
                f2.apply(&mut v);
                assert_eq!(&v, c, "double flip of {} changed weights", e);
                assert!(tri.same_up_to_reorientation(&t0));
            }
        }
    }

    #[test]
    fn flip_square_hand_check() {
        // Crossing arc pair from the contract: a=c=1, b=d=0, e=1 -> max(2,0)-1 = 1.
        let t = Triangulation::base(2).unwrap();
        // pick an edge whose square has four distinct periphery edges
        for e in 0..t.num_edges() {
            if let Ok(f) = t.square(e) {
                let ids = [f.a.edge(), f.b.edge(), f.c.edge(), f.d.edge()];
                if ids.iter().collect::<std::collections::HashSet<_>>().len() == 4 {
                    let mut v = w(&vec![0; t.num_edges()]);
                    v[f.a.edge()] = 1u32.into();
                    v[f.c.edge()] = 1u32.into();
                    v[f.e] = 1u32.into();
                    let mut tri = t.clone();
                    let fr = tri.flip(e).unwrap();
                    fr.apply(&mut v);
                    assert_eq!(v[f.e], 1u32.into());
                    return;
                }
            }
        }
        panic!("no generic square found");
    }

    #[test]
    fn disjoint_square_unchanged() {
        let t = Triangulation::base(2).unwrap();
        let mut tri = t.clone();
        let mut v = w(&vec![0; t.num_edges()]);
        let f = tri.flip(4).unwrap();
        f.apply(&mut v);
        assert!(v.iter().all(|x| x == &BigUint::from(0u32)));
    }
}
