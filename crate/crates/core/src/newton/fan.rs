use serde::Serialize;

use super::{Face, NewtonError, NewtonPolytope};
use crate::linalg;
use crate::lp;
use crate::poly::{ExponentVector, Rational, WeightVector};

/// Normal cone of a face: `rays` are primitive outer facet normals,
/// `lineality` spans the directions constant on the whole polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cone {
    pub id: usize,
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub lineality: Vec<Vec<i64>>,
    pub dual_face_vertices: Vec<ExponentVector>,
    /// Ids of the proper faces of this cone.
    pub faces: Vec<usize>,
    #[serde(skip)]
    pub dual_face: Face,
}

impl Cone {
    /// Sum of the rays: a point in the relative interior.
    pub fn interior_point(&self, n: usize) -> WeightVector {
        let mut acc = vec![0i64; n];
        for r in &self.rays {
            for (a, x) in acc.iter_mut().zip(r) {
                *a += x;
            }
        }
        WeightVector::from_ints(&acc)
    }

    pub fn dual_face_dim(&self) -> usize {
        self.dual_face.dim
    }

    pub fn is_vertex_cone(&self) -> bool {
        self.dual_face.dim == 0
    }

    /// Relative-interior membership from the generators alone, without
    /// consulting the polytope.
    pub fn contains_in_relint(&self, w: &WeightVector) -> bool {
        let rays: Vec<Vec<Rational>> = self.rays.iter().map(|r| linalg::from_i64(r)).collect();
        let lin: Vec<Vec<Rational>> = self.lineality.iter().map(|r| linalg::from_i64(r)).collect();
        lp::in_relint(&rays, &lin, w.entries())
    }

    pub fn contains(&self, w: &WeightVector) -> bool {
        let rays: Vec<Vec<Rational>> = self.rays.iter().map(|r| linalg::from_i64(r)).collect();
        let lin: Vec<Vec<Rational>> = self.lineality.iter().map(|r| linalg::from_i64(r)).collect();
        let mut gens = rays;
        gens.extend(lin.iter().cloned());
        gens.extend(lin.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
        if gens.is_empty() {
            return linalg::is_zero_vec(w.entries());
        }
        let mut prog = lp::LinearProgram::new(gens.len());
        for i in 0..w.dim() {
            prog.add(
                gens.iter().map(|g| g[i].clone()).collect(),
                lp::Relation::Eq,
                w.entries()[i].clone(),
            );
        }
        !matches!(prog.solve(), lp::LpOutcome::Infeasible)
    }
}

/// Normal fan of a Newton polytope: one cone per nonempty face, with ids
/// ordered by dimension and then by rays.
#[derive(Clone, Debug)]
pub struct Fan {
    polytope: NewtonPolytope,
    cones: Vec<Cone>,
}

pub fn normal_fan(p: &NewtonPolytope) -> Fan {
    let n = p.ambient_dim();
    let mut cones: Vec<Cone> = p
        .faces()
        .iter()
        .map(|f| {
            let mut rays = if f.dim == p.dim() {
                Vec::new()
            } else {
                p.facet_normals_containing(f)
            };
            rays.sort();
            Cone {
                id: 0,
                dim: n - f.dim,
                rays,
                lineality: p.lineality().to_vec(),
                dual_face_vertices: p.face_points(f),
                faces: Vec::new(),
                dual_face: f.clone(),
            }
        })
        .collect();
    cones.sort_by(|a, b| {
        (a.dim, &a.rays, &a.dual_face_vertices).cmp(&(b.dim, &b.rays, &b.dual_face_vertices))
    });
    for (i, c) in cones.iter_mut().enumerate() {
        c.id = i;
    }
    let faces: Vec<Vec<usize>> = cones
        .iter()
        .map(|c| {
            cones
                .iter()
                .filter(|d| {
                    d.id != c.id
                        && c
                            .dual_face
                            .vertices
                            .iter()
                            .all(|v| d.dual_face.vertices.contains(v))
                })
                .map(|d| d.id)
                .collect()
        })
        .collect();
    for (c, fs) in cones.iter_mut().zip(faces) {
        c.faces = fs;
    }
    Fan {
        polytope: p.clone(),
        cones,
    }
}

impl Fan {
    pub fn polytope(&self) -> &NewtonPolytope {
        &self.polytope
    }

    pub fn ambient_dim(&self) -> usize {
        self.polytope.ambient_dim()
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn cone(&self, id: usize) -> Result<&Cone, NewtonError> {
        self.cones.get(id).ok_or(NewtonError::UnknownCone(id))
    }

    pub fn cone_of_face(&self, face: &Face) -> &Cone {
        self.cones
            .iter()
            .find(|c| c.dual_face.vertices == face.vertices)
            .expect("every face has a normal cone")
    }

    /// The unique cone containing `w` in its relative interior.
    pub fn cone_containing(&self, w: &WeightVector) -> &Cone {
        self.cone_of_face(&self.polytope.face_of(w))
    }

    pub fn maximal_cones(&self) -> impl Iterator<Item = &Cone> {
        self.cones.iter().filter(|c| c.is_vertex_cone())
    }

    /// `w` in the interior point of cone `id`.
    pub fn interior_point(&self, id: usize) -> Result<WeightVector, NewtonError> {
        Ok(self.cone(id)?.interior_point(self.ambient_dim()))
    }
}
