use std::collections::{HashMap, VecDeque};

use num_bigint::BigUint;

use super::{Encoding, Move, NormalCurve, Triangulation};
use crate::error::{Error, Result};

const PLATEAU_CAP: usize = 50_000;

/// Result of driving a curve to a weight-minimal position by flips.
pub enum ShortenOutcome {
    /// Total weight 2: the curve crosses two edges once each and is the core
    /// of the annulus formed by their two triangles.
    Short {
        encoding: Encoding,
        tri: Triangulation,
        weights: Vec<BigUint>,
        e1: usize,
        e2: usize,
    },
    /// No flip reduces the weight (after a bounded plateau search). This is
    /// the terminal catalog position; separating curves end here.
    Terminal {
        encoding: Encoding,
        tri: Triangulation,
        weights: Vec<BigUint>,
    },
}

impl ShortenOutcome {
    pub fn encoding(&self) -> &Encoding {
        match self {
            ShortenOutcome::Short { encoding, .. } => encoding,
            ShortenOutcome::Terminal { encoding, .. } => encoding,
        }
    }
    pub fn weights(&self) -> &[BigUint] {
        match self {
            ShortenOutcome::Short { weights, .. } => weights,
            ShortenOutcome::Terminal { weights, .. } => weights,
        }
    }
}

fn flip_delta(tri: &Triangulation, w: &[BigUint], e: usize) -> Option<(BigUint, BigUint)> {
    // returns (new_e, old_e)
    let f = tri.square(e).ok()?;
    let ac = &w[f.a.edge()] + &w[f.c.edge()];
    let bd = &w[f.b.edge()] + &w[f.d.edge()];
    let m = ac.max(bd);
    Some((m - &w[e], w[e].clone()))
}

/// Greedy weight-reducing flips with lexicographic tie-breaking, falling back
/// to a breadth-first walk across equal-weight positions when stuck.
///
/// A weight-2 position crosses one edge loop exactly once, so it pairs
/// nontrivially with that loop's homology class; null-homologous curves can
/// never get there and skip the plateau search.
pub fn shorten(tri: &Triangulation, c: &NormalCurve) -> Result<ShortenOutcome> {
    let null_homologous = super::trace::homology_vector(tri, &c.weights)
        .map(|h| h.iter().all(|&x| x == 0))
        .unwrap_or(false);
    let mut t = tri.clone();
    let mut w = c.weights.clone();
    let mut moves: Vec<Move> = Vec::new();

    'outer: loop {
        // strictly reducing flip with the greatest drop, smallest edge id first
        let mut best: Option<(BigUint, usize)> = None;
        for e in 0..t.num_edges() {
            if let Some((new, old)) = flip_delta(&t, &w, e) {
                if new < old {
                    let drop = &old - &new;
                    match &best {
                        Some((d, _)) if *d >= drop => {}
                        _ => best = Some((drop, e)),
                    }
                }
            }
        }
        if let Some((_, e)) = best {
            let f = t.flip(e)?;
            f.apply(&mut w);
            moves.push(Move::Flip(e));
            continue;
        }
        let total: BigUint = w.iter().sum();
        if total == BigUint::from(2u32) {
            break;
        }
        if null_homologous {
            return Ok(ShortenOutcome::Terminal { encoding: Encoding { moves }, tri: t, weights: w });
        }
        // plateau: breadth-first over weight-preserving flips
        let key = |t: &Triangulation, w: &[BigUint]| (t.canonical(), w.to_vec());
        let mut queue = VecDeque::new();
        let mut seen: HashMap<_, ()> = HashMap::new();
        seen.insert(key(&t, &w), ());
        queue.push_back((t.clone(), w.clone(), Vec::<usize>::new()));
        while let Some((qt, qw, path)) = queue.pop_front() {
            if seen.len() > PLATEAU_CAP {
                break;
            }
            for e in 0..qt.num_edges() {
                if let Some((new, old)) = flip_delta(&qt, &qw, e) {
                    if new < old {
                        // adopt this plateau path, then the reducing flip
                        for &pe in &path {
                            let f = t.flip(pe)?;
                            f.apply(&mut w);
                            moves.push(Move::Flip(pe));
                        }
                        let f = t.flip(e)?;
                        f.apply(&mut w);
                        moves.push(Move::Flip(e));
                        continue 'outer;
                    }
                    if new == old {
                        let mut nt = qt.clone();
                        let mut nw = qw.clone();
                        let f = nt.flip(e)?;
                        f.apply(&mut nw);
                        let k = key(&nt, &nw);
                        if !seen.contains_key(&k) {
                            seen.insert(k, ());
                            let mut np = path.clone();
                            np.push(e);
                            queue.push_back((nt, nw, np));
                        }
                    }
                }
            }
        }
        // no reduction reachable: terminal catalog position
        return Ok(ShortenOutcome::Terminal { encoding: Encoding { moves }, tri: t, weights: w });
    }

    let ones: Vec<usize> = (0..t.num_edges())
        .filter(|&e| w[e] == BigUint::from(1u32))
        .collect();
    if ones.len() != 2 {
        return Err(Error::UnsupportedTwist(format!(
            "weight-2 position not annular: {ones:?}"
        )));
    }
    Ok(ShortenOutcome::Short {
        encoding: Encoding { moves },
        tri: t,
        weights: w,
        e1: ones[0],
        e2: ones[1],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn already_short_is_empty() {
        let t = Triangulation::base(1).unwrap();
        let c = NormalCurve::from_u32(&t, &[0, 1, 1]).unwrap();
        match shorten(&t, &c).unwrap() {
            ShortenOutcome::Short { encoding, e1, e2, .. } => {
                assert!(encoding.moves.is_empty());
                assert_eq!((e1, e2), (1, 2));
            }
            _ => panic!("expected short"),
        }
    }

    #[test]
    fn torus_slope_curves_shorten_to_weight_two() {
        let t = Triangulation::base(1).unwrap();
        for (p, q) in [(2i64, 1i64), (3, 2), (5, -3), (8, 13)] {
            let w = [q.unsigned_abs() as u32, p.unsigned_abs() as u32, (p - q).unsigned_abs() as u32];
            let c = NormalCurve::from_u32(&t, &w).unwrap();
            match shorten(&t, &c).unwrap() {
                ShortenOutcome::Short { .. } => {}
                ShortenOutcome::Terminal { weights, .. } => {
                    panic!("({p},{q}) stuck at {weights:?}")
                }
            }
        }
    }

    #[test]
    fn encoding_round_trips() {
        let t = Triangulation::base(1).unwrap();
        let c = NormalCurve::from_u32(&t, &[3, 5, 2]).unwrap();
        let out = shorten(&t, &c).unwrap();
        let enc = out.encoding();
        let mut tri = t.clone();
        let mut w = c.weights.clone();
        enc.apply(&mut tri, &mut w).unwrap();
        assert_eq!(&w, out.weights());
        enc.reversed().apply(&mut tri, &mut w).unwrap();
        assert_eq!(w, c.weights);
        assert!(tri.same_up_to_reorientation(&t));
    }
}
