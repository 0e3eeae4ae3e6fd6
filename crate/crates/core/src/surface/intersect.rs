use num_bigint::BigUint;
use num_traits::Zero;

use super::trace::{State, Strands};
use super::{shorten, NormalCurve, OrEdge, ShortenOutcome, Triangulation};
use crate::error::{Error, Result};

/// Geometric intersection number of two normal multicurves.
///
/// One of the curves is carried to its annular position; there the other
/// curve meets the annulus in strands, and i(a, b) is the number of strands
/// that cross from one boundary side to the other. Strands that enter and
/// leave through the same side can be pushed off the core, and strands
/// trapped in the annulus are parallel to it.
pub fn intersection(base: &Triangulation, a: &NormalCurve, b: &NormalCurve) -> Result<BigUint> {
    if a.weights == b.weights {
        return Ok(BigUint::zero());
    }
    match try_one_side(base, a, b) {
        Ok(n) => Ok(n),
        Err(first) => match try_one_side(base, b, a) {
            Ok(n) => Ok(n),
            Err(_) => Err(first),
        },
    }
}

fn try_one_side(base: &Triangulation, a: &NormalCurve, b: &NormalCurve) -> Result<BigUint> {
    let out = shorten(base, a)?;
    let (enc, tri_s, e1, e2) = match out {
        ShortenOutcome::Short { encoding, tri, e1, e2, .. } => (encoding, tri, e1, e2),
        ShortenOutcome::Terminal { .. } => {
            return Err(Error::IntersectionUnsupported(
                "neither curve reaches an annular position".into(),
            ))
        }
    };
    let mut tri = base.clone();
    let mut wb = b.weights.clone();
    enc.apply(&mut tri, &mut wb)?;
    debug_assert!(tri.same_up_to_reorientation(&tri_s));
    Ok(BigUint::from(through_strands(&tri_s, &wb, e1, e2)?))
}

/// Number of strands of the multicurve `wb` crossing the two-triangle annulus
/// around the weight-(1,1) core on edges `e1`, `e2`.
fn through_strands(tri: &Triangulation, wb: &[BigUint], e1: usize, e2: usize) -> Result<usize> {
    let (t_x, _) = tri.slot_of(OrEdge::fwd(e1));
    let (t_y, _) = tri.slot_of(OrEdge::bwd(e1));
    debug_assert_ne!(t_x, t_y);
    let third = |t: usize| -> usize {
        (0..3)
            .find(|&i| {
                let e = tri.triangles[t][i].edge();
                e != e1 && e != e2
            })
            .expect("annulus triangle has a boundary side")
    };
    let ix = third(t_x);
    let iy = third(t_y);
    let x_side = tri.triangles[t_x][ix];
    let strands = Strands::new(tri, wb)?;
    let mut through = 0usize;
    for p in 0..strands.w[x_side.edge()] {
        // enter triangle t_x through its x side
        let mut s = State { edge: x_side.edge(), point: p, into_bwd: !x_side.is_fwd() };
        loop {
            let (next, exit_slot, _) = strands.step(s);
            let exit_edge = tri.triangles[exit_slot.0][exit_slot.1].edge();
            if exit_edge == e1 || exit_edge == e2 {
                s = next;
                continue;
            }
            if exit_slot == (t_y, iy) {
                through += 1;
            } else {
                debug_assert_eq!(exit_slot, (t_x, ix), "strand left the annulus sideways");
            }
            break;
        }
    }
    Ok(through)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn torus() -> Triangulation {
        Triangulation::base(1).unwrap()
    }

    fn slope(t: &Triangulation, p: i64, q: i64) -> NormalCurve {
        NormalCurve::from_u32(
            t,
            &[q.unsigned_abs() as u32, p.unsigned_abs() as u32, (p - q).unsigned_abs() as u32],
        )
        .unwrap()
    }

    #[test]
    fn torus_intersections_match_determinant() {
        let t = torus();
        let cases = [
            ((1i64, 0i64), (0i64, 1i64)),
            ((1, 0), (1, 1)),
            ((1, 1), (1, -1)),
            ((2, 1), (1, 1)),
            ((3, 2), (2, 1)),
            ((5, 2), (1, -3)),
        ];
        for ((p1, q1), (p2, q2)) in cases {
            let a = slope(&t, p1, q1);
            let b = slope(&t, p2, q2);
            let want = (p1 * q2 - p2 * q1).unsigned_abs();
            let got = intersection(&t, &a, &b).unwrap();
            assert_eq!(got, BigUint::from(want), "i(({p1},{q1}),({p2},{q2}))");
            let sym = intersection(&t, &b, &a).unwrap();
            assert_eq!(sym, BigUint::from(want));
        }
    }

    #[test]
    fn self_intersection_zero() {
        let t = torus();
        let a = slope(&t, 3, 2);
        assert_eq!(intersection(&t, &a, &a).unwrap(), BigUint::zero());
    }

    #[test]
    fn twist_intersection_growth() {
        // i(T_b^n(a), a) = |n| * i(b, a)^2 on the torus
        let t = torus();
        let a = slope(&t, 1, 0);
        let b = slope(&t, 0, 1);
        let rb = crate::surface::TwistRecipe::build(&t, &b).unwrap();
        for n in 1i64..=3 {
            let img = rb.apply(n, &a.weights);
            let img = NormalCurve::new(&t, img).unwrap();
            let got = intersection(&t, &img, &a).unwrap();
            assert_eq!(got, BigUint::from(n as u64), "n={n}");
        }
    }
}
