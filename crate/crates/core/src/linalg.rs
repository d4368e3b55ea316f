//! Exact rank computations on sparse vectors.
//!
//! A matrix is given as a list of sparse vectors (coordinate, scalar). It is
//! first split into connected components (vectors sharing a coordinate are
//! linked); rank is additive over components. Real components are scaled to
//! integers and reduced by fraction-free Bareiss elimination; components
//! with complex entries use Gauss-Jordan over ℚ(i).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::par;
use crate::scalar::Scalar;

pub type SparseVec = Vec<(usize, Scalar)>;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Groups vectors into independent blocks with local coordinates.
fn components(vectors: &[SparseVec]) -> Vec<(usize, Vec<SparseVec>)> {
    let mut index: HashMap<usize, usize> = HashMap::new();
    for v in vectors {
        for (c, _) in v {
            let n = index.len();
            index.entry(*c).or_insert(n);
        }
    }
    let mut uf = UnionFind::new(index.len());
    for v in vectors {
        let mut it = v.iter().map(|(c, _)| index[c]);
        if let Some(first) = it.next() {
            for other in it {
                uf.union(first, other);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<SparseVec>> = HashMap::new();
    for v in vectors {
        if let Some((c, _)) = v.first() {
            let root = uf.find(index[c]);
            groups.entry(root).or_default().push(v.clone());
        }
    }
    let mut out: Vec<(usize, Vec<SparseVec>)> = groups
        .into_values()
        .map(|vs| {
            let mut local: HashMap<usize, usize> = HashMap::new();
            let remapped = vs
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .map(|(c, s)| {
                            let n = local.len();
                            (*local.entry(c).or_insert(n), s)
                        })
                        .collect()
                })
                .collect();
            (local.len(), remapped)
        })
        .collect();
    out.sort_by_key(|(n, vs)| (*n, vs.len()));
    out
}

/// Rank of a set of sparse vectors over ℚ(i).
pub fn rank(vectors: &[SparseVec]) -> usize {
    let comps = components(vectors);
    par::map(&comps, |(width, vs)| {
        if vs.iter().all(|v| v.iter().all(|(_, s)| s.is_real())) {
            bareiss_rank(&to_integer_rows(*width, vs))
        } else {
            field_rank(*width, vs)
        }
    })
    .into_iter()
    .sum()
}

fn to_integer_rows(width: usize, vs: &[SparseVec]) -> Vec<Vec<BigInt>> {
    vs.iter()
        .map(|v| {
            let l = v
                .iter()
                .fold(BigInt::one(), |acc, (_, s)| acc.lcm(s.re().denom()));
            let mut row = vec![BigInt::zero(); width];
            for (c, s) in v {
                row[*c] = s.re().numer() * (&l / s.re().denom());
            }
            row
        })
        .collect()
}

/// Fraction-free (Bareiss) elimination; every division is exact.
pub fn bareiss_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = a.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = a[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let pivot = pivot_row[col].clone();
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for j in col + 1..ncols {
                let v = &pivot * &row[j] - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

fn field_rank(width: usize, vs: &[SparseVec]) -> usize {
    let mut a: Vec<Vec<Scalar>> = vs
        .iter()
        .map(|v| {
            let mut row = vec![Scalar::zero(); width];
            for (c, s) in v {
                row[*c] = s.clone();
            }
            row
        })
        .collect();
    let nrows = a.len();
    let mut rank = 0;
    for col in 0..width {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let inv = pivot_row[col].inv().expect("nonzero pivot");
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] * &inv;
            for j in col + 1..width {
                if !pivot_row[j].is_zero() {
                    let d = &f * &pivot_row[j];
                    row[j] -= &d;
                }
            }
            row[col] = Scalar::zero();
        }
        rank += 1;
    }
    rank
}

/// Basis of `{c : Σ c_i v_i = 0}` via reduced row echelon form over ℚ(i).
/// Dense; intended for small systems.
pub fn kernel(vectors: &[SparseVec], width: usize) -> Vec<Vec<Scalar>> {
    let n = vectors.len();
    // rows = coordinates, columns = vectors
    let mut a = vec![vec![Scalar::zero(); n]; width];
    for (j, v) in vectors.iter().enumerate() {
        for (c, s) in v {
            a[*c][j] = s.clone();
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..width).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == width {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); n];
            v[f] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&a[row][f];
            }
            v
        })
        .collect()
}
