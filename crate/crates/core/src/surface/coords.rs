use num_bigint::BigUint;
use num_traits::Zero;

use super::Triangulation;
use crate::error::{Error, Result};

/// An isotopy class of an essential normal multicurve, recorded by its exact
/// geometric intersection numbers with the edges of a fixed triangulation.
/// On a one-vertex triangulation the weight vector is a complete invariant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalCurve {
    pub weights: Vec<BigUint>,
}

impl NormalCurve {
    pub fn new(tri: &Triangulation, weights: Vec<BigUint>) -> Result<Self> {
        validate(tri, &weights)?;
        Ok(NormalCurve { weights })
    }

    pub fn from_u32(tri: &Triangulation, weights: &[u32]) -> Result<Self> {
        Self::new(tri, weights.iter().map(|&x| BigUint::from(x)).collect())
    }

    pub fn total_weight(&self) -> BigUint {
        self.weights.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(|w| w.is_zero())
    }
}

impl std::fmt::Debug for NormalCurve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "[{}]", ws.join(" "))
    }
}

/// Corner-arc solvability: in every triangle the three side weights have even
/// sum and satisfy the triangle inequalities. Rejects the empty curve.
pub fn validate(tri: &Triangulation, w: &[BigUint]) -> Result<()> {
    if w.len() != tri.num_edges() {
        return Err(Error::DimensionMismatch { got: w.len(), want: tri.num_edges() });
    }
    if w.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidCoordinates("zero vector".into()));
    }
    for (t, tris) in tri.triangles.iter().enumerate() {
        let a = &w[tris[0].edge()];
        let b = &w[tris[1].edge()];
        let c = &w[tris[2].edge()];
        let sum = a + b + c;
        if (&sum % 2u32) != BigUint::zero() {
            return Err(Error::InvalidCoordinates(format!("odd sum in triangle {t}")));
        }
        if a > &(b + c) || b > &(a + c) || c > &(a + b) {
            return Err(Error::InvalidCoordinates(format!(
                "triangle inequality fails in triangle {t}"
            )));
        }
    }
    Ok(())
}

/// Number of corner arcs in triangle `t` of `tri` at the corner between sides
/// `i` and `i+1` (counterclockwise), for the weight vector `w`.
pub fn corner_count(tri: &Triangulation, w: &[BigUint], t: usize, i: usize) -> BigUint {
    let x = &w[tri.triangles[t][i].edge()];
    let y = &w[tri.triangles[t][(i + 1) % 3].edge()];
    let z = &w[tri.triangles[t][(i + 2) % 3].edge()];
    (x + y - z) / 2u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_vector_rejected() {
        let t = Triangulation::base(2).unwrap();
        assert!(NormalCurve::from_u32(&t, &[0; 9]).is_err());
    }

    #[test]
    fn odd_sum_rejected() {
        let t = Triangulation::base(1).unwrap();
        assert!(NormalCurve::from_u32(&t, &[1, 0, 0]).is_err());
    }

    #[test]
    fn torus_curves_valid() {
        let t = Triangulation::base(1).unwrap();
        for (p, q) in [(1i64, 0i64), (0, 1), (1, 1), (2, 3), (-5, 2)] {
            let w = [q.unsigned_abs() as u32, p.unsigned_abs() as u32, (p - q).unsigned_abs() as u32];
            assert!(NormalCurve::from_u32(&t, &w).is_ok(), "({p},{q})");
        }
    }

    #[test]
    fn dimension_mismatch() {
        let t = Triangulation::base(2).unwrap();
        assert!(matches!(
            NormalCurve::from_u32(&t, &[1, 1]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
