use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::NewtonError;
use crate::linalg;
use crate::lp::{LinearProgram, LpOutcome, Relation};
use crate::poly::{ExponentVector, Polynomial, Rational, WeightVector};

/// A face, as the sorted indices of the polytope vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub dim: usize,
}

/// Convex hull of the support of a polynomial, in exact arithmetic.
#[derive(Clone, Debug)]
pub struct NewtonPolytope {
    source: Polynomial,
    vertices: Vec<ExponentVector>,
    dim: usize,
    lineality: Vec<Vec<i64>>,
    /// Facets with their primitive outer normals (orthogonal to the lineality space).
    facets: Vec<(Face, Vec<i64>)>,
    faces: Vec<Face>,
}

fn to_q(e: &ExponentVector) -> Vec<Rational> {
    e.entries()
        .iter()
        .map(|&x| Rational::from_integer(x.into()))
        .collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `p` is a convex combination of `others`.
fn in_hull(p: &[Rational], others: &[Vec<Rational>]) -> bool {
    if others.is_empty() {
        return false;
    }
    let m = others.len();
    let mut lp = LinearProgram::new(m);
    lp.add(vec![Rational::one(); m], Relation::Eq, Rational::one());
    for i in 0..p.len() {
        lp.add(others.iter().map(|o| o[i].clone()).collect(), Relation::Eq, p[i].clone());
    }
    !matches!(lp.solve(), LpOutcome::Infeasible)
}

fn affine_dim(points: &[Vec<Rational>], n: usize) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    linalg::rank(&diffs, n)
}

fn k_subsets(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn newton_polytope(f: &Polynomial) -> Result<NewtonPolytope, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    let n = f.nvars();
    let support: Vec<ExponentVector> = f.support().cloned().collect();
    let pts: Vec<Vec<Rational>> = support.iter().map(to_q).collect();

    let mut vertices: Vec<ExponentVector> = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let others: Vec<Vec<Rational>> = pts
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        if !in_hull(p, &others) {
            vertices.push(support[i].clone());
        }
    }
    vertices.sort_by(|a, b| a.lex_cmp(b));
    let vq: Vec<Vec<Rational>> = vertices.iter().map(to_q).collect();

    let dim = affine_dim(&vq, n);
    let diffs: Vec<Vec<Rational>> = vq.iter().skip(1).map(|p| sub(p, &vq[0])).collect();
    let lin_q = if diffs.is_empty() {
        (0..n)
            .map(|i| {
                let mut e = vec![Rational::zero(); n];
                e[i] = Rational::one();
                e
            })
            .collect()
    } else {
        linalg::canonical_basis(&linalg::nullspace(&diffs, n), n)
    };
    let lineality: Vec<Vec<i64>> = lin_q
        .iter()
        .map(|v| linalg::primitive_i64(v).ok_or(NewtonError::Overflow))
        .collect::<Result<_, _>>()?;

    let mut facets: Vec<(Face, Vec<i64>)> = Vec::new();
    if dim >= 1 {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut err = None;
        k_subsets(vq.len(), dim, |sub_idx| {
            let mut rows: Vec<Vec<Rational>> = lin_q.clone();
            for &k in &sub_idx[1..] {
                rows.push(sub(&vq[k], &vq[sub_idx[0]]));
            }
            let ns = linalg::nullspace(&rows, n);
            if ns.len() != 1 {
                return;
            }
            let mut h = ns[0].clone();
            let level = linalg::dot(&h, &vq[sub_idx[0]]);
            let vals: Vec<Rational> = vq.iter().map(|v| linalg::dot(&h, v)).collect();
            let above = vals.iter().any(|x| x > &level);
            let below = vals.iter().any(|x| x < &level);
            if above && below {
                return;
            }
            if above {
                h = h.iter().map(|x| -x).collect();
            }
            let on: Vec<usize> = (0..vq.len()).filter(|&i| vals[i] == level).collect();
            if affine_dim(&on.iter().map(|&i| vq[i].clone()).collect::<Vec<_>>(), n) + 1 != dim {
                return;
            }
            if seen.insert(on.clone()) {
                match linalg::primitive_i64(&h) {
                    Some(normal) => facets.push((Face { vertices: on, dim: dim - 1 }, normal)),
                    None => err = Some(NewtonError::Overflow),
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        facets.sort();
    }

    let mut faces: BTreeSet<Vec<usize>> = facets.iter().map(|(f, _)| f.vertices.clone()).collect();
    loop {
        let current: Vec<Vec<usize>> = faces.iter().cloned().collect();
        let mut added = false;
        for i in 0..current.len() {
            for j in i + 1..current.len() {
                let meet: Vec<usize> = current[i]
                    .iter()
                    .filter(|x| current[j].contains(x))
                    .copied()
                    .collect();
                if !meet.is_empty() && faces.insert(meet) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    faces.insert((0..vq.len()).collect());
    let faces: Vec<Face> = faces
        .into_iter()
        .map(|vs| {
            let pts: Vec<Vec<Rational>> = vs.iter().map(|&i| vq[i].clone()).collect();
            Face {
                dim: affine_dim(&pts, n),
                vertices: vs,
            }
        })
        .collect();

    Ok(NewtonPolytope {
        source: f.clone(),
        vertices,
        dim,
        lineality,
        facets,
        faces,
    })
}

impl NewtonPolytope {
    pub fn source(&self) -> &Polynomial {
        &self.source
    }

    pub fn ambient_dim(&self) -> usize {
        self.source.nvars()
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis of the directions orthogonal to the affine hull.
    pub fn lineality(&self) -> &[Vec<i64>] {
        &self.lineality
    }

    pub fn facets(&self) -> &[(Face, Vec<i64>)] {
        &self.facets
    }

    /// All nonempty faces, including the polytope itself.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face_points(&self, face: &Face) -> Vec<ExponentVector> {
        face.vertices.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    /// Vertex indices maximizing `wᵀa`.
    pub fn face_of(&self, w: &WeightVector) -> Face {
        let vals: Vec<Rational> = self.vertices.iter().map(|v| w.dot(v)).collect();
        let best = vals.iter().max().cloned().unwrap_or_else(Rational::zero);
        let vertices: Vec<usize> = (0..vals.len()).filter(|&i| vals[i] == best).collect();
        self.faces
            .iter()
            .find(|f| f.vertices == vertices)
            .cloned()
            .expect("maximizing set of a linear functional is a face")
    }

    /// Support points of the source polynomial lying on `face`.
    pub fn support_on(&self, face: &Face) -> Vec<ExponentVector> {
        let pts: Vec<Vec<Rational>> = face.vertices.iter().map(|&i| to_q(&self.vertices[i])).collect();
        self.source
            .support()
            .filter(|s| {
                let p = to_q(s);
                face.vertices.iter().any(|&i| self.vertices[i] == **s) || in_hull(&p, &pts)
            })
            .cloned()
            .collect()
    }

    /// Outer normals of the facets containing `face`.
    pub fn facet_normals_containing(&self, face: &Face) -> Vec<Vec<i64>> {
        self.facets
            .iter()
            .filter(|(fct, _)| face.vertices.iter().all(|v| fct.vertices.contains(v)))
            .map(|(_, h)| h.clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn triangle_vertices() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let p = newton_polytope(&r.parse("x^4+x^2*y^2-1").unwrap()).unwrap();
        let v: Vec<Vec<u32>> = p.vertices().iter().map(|e| e.entries().to_vec()).collect();
        assert_eq!(v, vec![vec![0, 0], vec![2, 2], vec![4, 0]]);
        assert_eq!(p.dim(), 2);
        assert_eq!(p.facets().len(), 3);
        assert_eq!(p.faces().len(), 7);
    }

    #[test]
    fn tetrahedron_from_dissonance() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let p = newton_polytope(&r.parse("(x-y-z)^4+(x-y-1)^2").unwrap()).unwrap();
        let v: Vec<Vec<u32>> = p.vertices().iter().map(|e| e.entries().to_vec()).collect();
        assert_eq!(v, vec![vec![0, 0, 0], vec![0, 0, 4], vec![0, 4, 0], vec![4, 0, 0]]);
        assert_eq!(p.facets().len(), 4);
        assert_eq!(p.faces().len(), 15);
        let mut normals: Vec<Vec<i64>> = p.facets().iter().map(|f| f.1.clone()).collect();
        normals.sort();
        assert_eq!(
            normals,
            vec![vec![-1, 0, 0], vec![0, -1, 0], vec![0, 0, -1], vec![1, 1, 1]]
        );
    }

    #[test]
    fn degenerate_polytopes() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let c = newton_polytope(&r.parse("7").unwrap()).unwrap();
        assert_eq!(c.vertices(), &[ExponentVector::zero(2)]);
        assert_eq!(c.dim(), 0);
        assert_eq!(c.lineality().len(), 2);
        let s = newton_polytope(&r.parse("x-y^2").unwrap()).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.lineality(), &[vec![2, 1]]);
        assert_eq!(s.facets().len(), 2);
        let h = newton_polytope(&r.parse("x^2+x*y+y^2").unwrap()).unwrap();
        assert_eq!(h.vertices().len(), 2);
        let on = h.support_on(&h.faces().iter().find(|f| f.dim == 1).unwrap().clone());
        assert_eq!(on.len(), 3);
    }

    #[test]
    fn subsets() {
        let mut all = Vec::new();
        k_subsets(4, 2, |s| all.push(s.to_vec()));
        assert_eq!(all.len(), 6);
        let mut one = Vec::new();
        k_subsets(3, 3, |s| one.push(s.to_vec()));
        assert_eq!(one, vec![vec![0, 1, 2]]);
    }
}
