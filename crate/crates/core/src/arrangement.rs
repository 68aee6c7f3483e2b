//! Oriented rational hyperplane arrangements, their polytopes, and the
//! regular/simplicial/smooth classification.
//!
//! A hyperplane is the zero set of ⟨u, x⟩ + λ with u a fixed primitive
//! integer normal; the orientation sign only flips which side counts as
//! nonnegative. The polytope of an arrangement is the intersection of the
//! chosen half-spaces, computed exactly by tight-set enumeration: at desk
//! scale (d ≤ 12, n ≤ 4) exhaustive enumeration beats every asymptotically
//! clever alternative and is trivially exact.

use crate::error::Error;
use crate::exactla::{
    combinations, dot_int, dot_int_rat, int_to_rat_vec, integer_kernel,
    make_primitive, primitive_direction, rank, simplex_max, solve_particular_rat, Int, IntMatrix,
    IntVector, LpOutcome, Rat, RatVector,
};
use crate::par;
use crate::quotient::QuotientData;
use crate::Result;
use num::{One, Signed, Zero};

/// Orientation sign of one hyperplane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Orientation {
    Plus,
    Minus,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Plus => 1,
            Orientation::Minus => -1,
        }
    }

    pub fn from_sign(s: i8) -> Self {
        if s < 0 {
            Orientation::Minus
        } else {
            Orientation::Plus
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Orientation::Plus => Orientation::Minus,
            Orientation::Minus => Orientation::Plus,
        }
    }
}

/// One oriented hyperplane {x : ⟨normal, x⟩ + offset = 0}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: IntVector,
    pub offset: Rat,
    pub orientation: Orientation,
}

impl Hyperplane {
    /// Constraint data after applying the orientation: the half-space is
    /// {x : ⟨eff_normal, x⟩ + eff_offset ≥ 0}.
    pub fn effective(&self) -> (IntVector, Rat) {
        match self.orientation {
            Orientation::Plus => (self.normal.clone(), self.offset.clone()),
            Orientation::Minus => (
                self.normal.iter().map(|x| -x).collect(),
                -self.offset.clone(),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedArrangement {
    n: usize,
    items: Vec<Hyperplane>,
}

impl OrientedArrangement {
    /// `n = 0` is allowed (arrangements induced on a point); normals must be
    /// nonzero primitive otherwise.
    pub fn new(n: usize, items: Vec<Hyperplane>) -> Result<Self> {
        for (i, h) in items.iter().enumerate() {
            if h.normal.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: h.normal.len(),
                });
            }
            if n > 0 && !crate::exactla::is_primitive(&h.normal) {
                return Err(Error::NonPrimitiveGenerator { index: i });
            }
        }
        Ok(OrientedArrangement { n, items })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.items.len()
    }

    pub fn items(&self) -> &[Hyperplane] {
        &self.items
    }

    pub fn item(&self, i: usize) -> &Hyperplane {
        &self.items[i]
    }

    /// Effective (normal, offset) pairs of all constraints.
    pub fn effective_constraints(&self) -> Vec<(IntVector, Rat)> {
        self.items.iter().map(|h| h.effective()).collect()
    }
}

/// Arrangement of the hyperplanes ⟨u_i, x⟩ + λ_i = 0 from a lift λ of a
/// moment value, with orientations ε.
pub fn arrangement_from_lift(
    q: &QuotientData,
    lift: &[Rat],
    epsilon: &[Orientation],
) -> Result<OrientedArrangement> {
    if lift.len() != q.d() {
        return Err(Error::LengthMismatch {
            expected: q.d(),
            got: lift.len(),
        });
    }
    if epsilon.len() != q.d() {
        return Err(Error::LengthMismatch {
            expected: q.d(),
            got: epsilon.len(),
        });
    }
    let items = (0..q.d())
        .map(|i| Hyperplane {
            normal: q.fan().ray(i).clone(),
            offset: lift[i].clone(),
            orientation: epsilon[i],
        })
        .collect();
    OrientedArrangement::new(q.n(), items)
}

pub fn all_plus(d: usize) -> Vec<Orientation> {
    vec![Orientation::Plus; d]
}

/// Flip the orientation of H_i where ε(i) = −1. Involutive.
pub fn reorient(arr: &OrientedArrangement, epsilon: &[Orientation]) -> Result<OrientedArrangement> {
    if epsilon.len() != arr.d() {
        return Err(Error::LengthMismatch {
            expected: arr.d(),
            got: epsilon.len(),
        });
    }
    let items = arr
        .items
        .iter()
        .zip(epsilon)
        .map(|(h, &e)| Hyperplane {
            normal: h.normal.clone(),
            offset: h.offset.clone(),
            orientation: match e {
                Orientation::Plus => h.orientation,
                Orientation::Minus => h.orientation.flip(),
            },
        })
        .collect();
    OrientedArrangement::new(arr.n, items)
}

/// Exact H- and V-representation of the half-space intersection of an
/// arrangement, with the edge graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    pub ambient_dim: usize,
    /// Effective constraints ⟨normal, x⟩ + offset ≥ 0.
    pub hrep: Vec<(IntVector, Rat)>,
    /// Lexicographically sorted vertex list.
    pub vertices: Vec<RatVector>,
    /// Tight constraint indices per vertex (ascending), aligned with
    /// `vertices`.
    pub tight_sets: Vec<Vec<usize>>,
    /// Recession cone generators, primitive integer directions.
    pub rays: Vec<IntVector>,
    /// Bounded edges as vertex index pairs (i < j).
    pub edges: Vec<(usize, usize)>,
    /// Unbounded edges as (vertex index, ray index) incidences.
    pub vertex_rays: Vec<(usize, usize)>,
    pub bounded: bool,
    pub empty: bool,
}

impl Polytope {
    /// Dimension of the affine hull (0 for a point; 0 by convention when
    /// empty).
    pub fn dim(&self) -> usize {
        if self.vertices.is_empty() {
            return if self.empty { 0 } else { self.ambient_dim };
        }
        let v0 = &self.vertices[0];
        let mut dirs: Vec<RatVector> = self
            .vertices
            .iter()
            .skip(1)
            .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        dirs.extend(self.rays.iter().map(|r| int_to_rat_vec(r)));
        rank(&dirs, self.ambient_dim)
    }

    /// Vertex degree in the edge graph, unbounded edges included.
    pub fn degree(&self, v: usize) -> usize {
        let e = self
            .edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count();
        let r = self.vertex_rays.iter().filter(|&&(a, _)| a == v).count();
        e + r
    }

    /// Every vertex has exactly dim(P) incident edges (unbounded included).
    pub fn is_simple(&self) -> bool {
        let d = self.dim();
        (0..self.vertices.len()).all(|v| self.degree(v) == d)
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.hrep
            .iter()
            .all(|(w, mu)| !(dot_int_rat(w, x) + mu).is_negative())
    }
}

/// Exact vertex/ray/edge enumeration of Δ = ∩ H_i^{≥0}.
pub fn polytope_of(arr: &OrientedArrangement) -> Polytope {
    let n = arr.n();
    let cons = arr.effective_constraints();
    let d = cons.len();

    // vertices: feasible solutions of n independent tight constraints
    let subsets = combinations(d, n);
    let candidates = par::map_slice(&subsets, |s| {
        let rows: Vec<RatVector> = s.iter().map(|&i| int_to_rat_vec(&cons[i].0)).collect();
        if rank(&rows, n) < n {
            return None;
        }
        let rhs: RatVector = s.iter().map(|&i| -cons[i].1.clone()).collect();
        let x = solve_particular_rat(&rows, n, &rhs)?;
        let feasible = cons
            .iter()
            .all(|(w, mu)| !(dot_int_rat(w, &x) + mu).is_negative());
        feasible.then_some(x)
    });
    let mut vertices: Vec<RatVector> = candidates.into_iter().flatten().collect();
    vertices.sort();
    vertices.dedup();

    let tight_sets: Vec<Vec<usize>> = vertices
        .iter()
        .map(|v| {
            (0..d)
                .filter(|&i| (dot_int_rat(&cons[i].0, v) + &cons[i].1).is_zero())
                .collect()
        })
        .collect();

    let rays = recession_generators(n, &cons);

    let empty = if !vertices.is_empty() {
        false
    } else {
        !halfspace_system_feasible(n, &cons)
    };

    // bounded edges: two vertices adjacent iff their common tight
    // constraints span a rank n−1 space (the 1-dimensional face containing
    // both, which then has no room for a third vertex)
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let common: Vec<usize> = tight_sets[i]
                .iter()
                .filter(|x| tight_sets[j].contains(x))
                .copied()
                .collect();
            let rows: Vec<RatVector> = common
                .iter()
                .map(|&k| int_to_rat_vec(&cons[k].0))
                .collect();
            if n > 0 && rank(&rows, n) == n - 1 {
                edges.push((i, j));
            }
        }
    }

    // unbounded edges: a recession generator r sticks out of vertex v iff
    // the constraints tight along v + t·r still span rank n−1
    let mut vertex_rays = Vec::new();
    for (vi, v) in vertices.iter().enumerate() {
        for (ri, r) in rays.iter().enumerate() {
            if tight_sets[vi]
                .iter()
                .any(|&k| dot_int(&cons[k].0, r).is_negative())
            {
                continue;
            }
            let along: Vec<RatVector> = tight_sets[vi]
                .iter()
                .filter(|&&k| dot_int(&cons[k].0, r).is_zero())
                .map(|&k| int_to_rat_vec(&cons[k].0))
                .collect();
            if n > 0 && rank(&along, n) == n - 1 {
                vertex_rays.push((vi, ri));
            }
        }
        let _ = v;
    }

    Polytope {
        ambient_dim: n,
        hrep: cons,
        bounded: rays.is_empty(),
        empty,
        vertices,
        tight_sets,
        rays,
        edges,
        vertex_rays,
    }
}

/// Is {x : ⟨w_i, x⟩ + μ_i ≥ 0} nonempty? Free x split into x⁺ − x⁻ with a
/// surplus variable per constraint.
fn halfspace_system_feasible(n: usize, cons: &[(IntVector, Rat)]) -> bool {
    let d = cons.len();
    let nv = 2 * n + d;
    let mut rows: Vec<RatVector> = Vec::with_capacity(d);
    let mut rhs: RatVector = Vec::with_capacity(d);
    for (i, (w, mu)) in cons.iter().enumerate() {
        let mut row = vec![Rat::zero(); nv];
        for k in 0..n {
            row[k] = Rat::from_integer(w[k].clone());
            row[n + k] = -Rat::from_integer(w[k].clone());
        }
        row[2 * n + i] = -Rat::from_integer(Int::from(1));
        rows.push(row);
        rhs.push(-mu.clone());
    }
    matches!(
        simplex_max(&vec![Rat::zero(); nv], &rows, &rhs),
        LpOutcome::Optimal { .. }
    )
}

/// Generators of the recession cone {r : ⟨w_i, r⟩ ≥ 0 ∀i}, computed from the
/// homogenized system. Lineality directions come in ± pairs; the pointed
/// part contributes its extreme rays.
fn recession_generators(n: usize, cons: &[(IntVector, Rat)]) -> Vec<IntVector> {
    if n == 0 {
        return Vec::new();
    }
    let normal_rows = IntMatrix::from_rows_with_cols(
        cons.iter().map(|(w, _)| w.clone()).collect(),
        n,
    );
    let lineality = integer_kernel(&normal_rows);
    let mut gens: Vec<IntVector> = Vec::new();
    if lineality.rows() == 0 {
        gens.extend(pointed_extreme_rays(n, cons));
    } else {
        for r in 0..lineality.rows() {
            gens.push(lineality.row(r).to_vec());
            gens.push(lineality.row(r).iter().map(|x| -x).collect());
        }
        // quotient out the lineality and enumerate the pointed part there
        let proj = crate::exactla::cokernel_map(&lineality);
        let np = proj.rows();
        if np > 0 {
            // each normal w vanishes on the lineality, so it descends: find
            // w̄ with projᵀ·w̄ = w
            let projt = proj.transpose();
            let mut descended: Vec<(IntVector, Rat)> = Vec::new();
            for (w, _) in cons {
                let wbar = solve_particular_rat(
                    &projt.to_rat_rows(),
                    np,
                    &int_to_rat_vec(w),
                )
                .expect("normals orthogonal to the lineality descend");
                descended.push((
                    primitive_scaled(&wbar),
                    Rat::zero(),
                ));
            }
            for ray in pointed_extreme_rays(np, &descended) {
                // lift through the projection: any preimage is in the cone
                let lift = solve_particular_rat(
                    &proj.to_rat_rows(),
                    n,
                    &int_to_rat_vec(&ray),
                )
                .expect("projection is surjective");
                gens.push(primitive_direction(&lift));
            }
        }
    }
    gens.sort();
    gens.dedup();
    gens
}

/// Clear denominators of a rational vector that is known to represent an
/// integer functional direction (keeps orientation).
fn primitive_scaled(v: &[Rat]) -> IntVector {
    if v.iter().all(|x| x.is_zero()) {
        return vec![Int::zero(); v.len()];
    }
    primitive_direction(v)
}

/// Extreme rays of a pointed cone {r : ⟨w_i, r⟩ ≥ 0}: every extreme ray is
/// the 1-dimensional null space of n−1 independent tight constraints.
fn pointed_extreme_rays(n: usize, cons: &[(IntVector, Rat)]) -> Vec<IntVector> {
    let d = cons.len();
    let subsets = combinations(d, n - 1);
    let found = par::map_slice(&subsets, |s| {
        let m = IntMatrix::from_rows_with_cols(
            s.iter().map(|&i| cons[i].0.clone()).collect(),
            n,
        );
        let null = integer_kernel(&m);
        if null.rows() != 1 {
            return Vec::new();
        }
        let v = null.row(0).to_vec();
        let mut out = Vec::new();
        for cand in [v.clone(), v.iter().map(|x| -x).collect::<IntVector>()] {
            if cons.iter().all(|(w, _)| !dot_int(w, &cand).is_negative()) {
                out.push(make_primitive(&cand));
            }
        }
        out
    });
    let mut rays: Vec<IntVector> = found.into_iter().flatten().collect();
    rays.sort();
    rays.dedup();
    rays
}

/// A flat where simpliciality fails: incident hyperplanes exceed the
/// codimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularFlat {
    /// All hyperplane indices containing the flat.
    pub incident: Vec<usize>,
    pub codim: usize,
    /// One point of the flat.
    pub point: RatVector,
    /// Basis of the flat's direction lattice (rows).
    pub directions: IntMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrangementClass {
    pub regular: bool,
    pub simplicial: bool,
    pub smooth: bool,
    pub singular_flats: Vec<SingularFlat>,
}

/// Regular/simplicial/smooth classification.
///
/// Regular is the determinant criterion on the normals; simplicial means
/// every k hyperplanes with a common point meet in codimension exactly k.
/// Coincident hyperplanes count as distinct incidences, so a superposed pair
/// already breaks simpliciality.
pub fn classify(arr: &OrientedArrangement) -> ArrangementClass {
    let n = arr.n();
    let d = arr.d();
    let mut offending = false;
    for subset in combinations(d, n) {
        let m = IntMatrix::from_rows_with_cols(
            subset.iter().map(|&i| arr.item(i).normal.clone()).collect(),
            n,
        );
        let det = crate::exactla::determinant(&m);
        if !det.is_zero() && !det.abs().is_one() {
            offending = true;
            break;
        }
    }
    let regular = !offending;

    // a violating subset of k hyperplanes always contains one of size
    // rank+1 ≤ n+1 with the same flat, so small subsets see everything
    let mut flats: Vec<SingularFlat> = Vec::new();
    let max_size = d.min(n + 1);
    for size in 2..=max_size {
        for subset in combinations(d, size) {
            let rows: Vec<RatVector> = subset
                .iter()
                .map(|&i| int_to_rat_vec(&arr.item(i).normal))
                .collect();
            let r = rank(&rows, n);
            if r >= size {
                continue;
            }
            let rhs: RatVector = subset.iter().map(|&i| -arr.item(i).offset.clone()).collect();
            let Some(point) = solve_particular_rat(&rows, n, &rhs) else {
                continue; // empty intersection
            };
            let normal_mat = IntMatrix::from_rows_with_cols(
                subset.iter().map(|&i| arr.item(i).normal.clone()).collect(),
                n,
            );
            let directions = integer_kernel(&normal_mat);
            let incident: Vec<usize> = (0..d)
                .filter(|&j| {
                    let h = arr.item(j);
                    (dot_int_rat(&h.normal, &point) + &h.offset).is_zero()
                        && (0..directions.rows())
                            .all(|k| dot_int(&h.normal, directions.row(k)).is_zero())
                })
                .collect();
            if incident.len() <= r {
                continue;
            }
            if flats.iter().any(|f| f.incident == incident) {
                continue;
            }
            flats.push(SingularFlat {
                incident,
                codim: r,
                point,
                directions,
            });
        }
    }
    flats.sort_by(|a, b| a.codim.cmp(&b.codim).then(a.incident.cmp(&b.incident)));

    let simplicial = flats.is_empty();
    ArrangementClass {
        regular,
        simplicial,
        smooth: regular && simplicial,
        singular_flats: flats,
    }
}

/// Chart of an affine flat: x = origin + tᵀ·basis with t the intrinsic
/// coordinates and basis rows an integral basis of the direction lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatChart {
    pub origin: RatVector,
    /// flat_dim × n rows.
    pub basis: IntMatrix,
}

/// Restrict the arrangement to the common flat of the hyperplanes in
/// `flat_indices`: the remaining hyperplanes are re-expressed in intrinsic
/// coordinates. Fails if the flat is empty or a remaining hyperplane
/// contains or misses the flat entirely.
pub fn restrict_to_flat(
    arr: &OrientedArrangement,
    flat_indices: &[usize],
) -> Result<(OrientedArrangement, FlatChart)> {
    let n = arr.n();
    let rows: Vec<RatVector> = flat_indices
        .iter()
        .map(|&i| int_to_rat_vec(&arr.item(i).normal))
        .collect();
    let rhs: RatVector = flat_indices
        .iter()
        .map(|&i| -arr.item(i).offset.clone())
        .collect();
    let origin = solve_particular_rat(&rows, n, &rhs).ok_or(Error::NotOnWall)?;
    let normal_mat = IntMatrix::from_rows_with_cols(
        flat_indices.iter().map(|&i| arr.item(i).normal.clone()).collect(),
        n,
    );
    let basis = integer_kernel(&normal_mat);
    let flat_dim = basis.rows();

    let mut items = Vec::new();
    for j in 0..arr.d() {
        if flat_indices.contains(&j) {
            continue;
        }
        let h = arr.item(j);
        let mut normal: IntVector = (0..flat_dim)
            .map(|k| dot_int(&h.normal, basis.row(k)))
            .collect();
        let mut offset = dot_int_rat(&h.normal, &origin) + &h.offset;
        if flat_dim > 0 {
            if normal.iter().all(|x| x.is_zero()) {
                return Err(Error::DegenerateRestriction { index: j });
            }
            // rescale to a primitive normal; positive scaling preserves the
            // hyperplane and both half-spaces
            let g = crate::exactla::gcd_all(&normal);
            if !g.is_zero() && !num::One::is_one(&g) {
                normal = normal.iter().map(|x| x / &g).collect();
                offset /= Rat::from_integer(g);
            }
        }
        items.push(Hyperplane {
            normal,
            offset,
            orientation: h.orientation,
        });
    }
    let restricted = OrientedArrangement::new(flat_dim, items)?;
    Ok((restricted, FlatChart { origin, basis }))
}

pub(crate) trait FromRowsWithCols {
    fn from_rows_with_cols(rows: Vec<IntVector>, cols: usize) -> IntMatrix;
}

impl IntMatrix {
    /// Like `from_rows`, but keeps the column count when the row list is
    /// empty.
    pub fn from_rows_with_cols(rows: Vec<IntVector>, cols: usize) -> IntMatrix {
        if rows.is_empty() {
            return IntMatrix::zero(0, cols);
        }
        IntMatrix::from_rows(rows)
    }
}
