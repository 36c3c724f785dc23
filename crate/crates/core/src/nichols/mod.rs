//! Braided vector spaces, quantum symmetrizers and graded Nichols-algebra
//! dimensions.
//!
//! The braiding of a Yetter-Drinfeld module is c(v (x) w) = v_(-1) . w (x)
//! v_(0); it satisfies the Yang-Baxter equation. The degree-n component of
//! the Nichols algebra is V^(x)n / ker S_n where S_n is the quantum
//! symmetrizer, so graded dimensions are exact symmetrizer ranks. Ranks are
//! computed by streaming symmetrizer images of basis words into an
//! incremental elimination; the full d^n x d^n endomorphism is only
//! materialized on demand and under a size cap.

mod dynkin;
mod probe;
mod profile;

pub use dynkin::{dynkin, DynkinData, DynkinVerdict, PathType};
pub use probe::{conjecture_probe, eigen_probe_w1a, EigenProbe, GgChoice};
pub use profile::{
    factorize, factorized_profile, gk_estimate, graded_dims, graded_dims_braided, profile_of_sum,
    GkEstimateError, GradedProfile, Provenance, Verdict,
};

use crate::cyclo::{sparse_scale, Cyclo, RowEliminator, SparseVec};
use crate::yd::YdModule;
use sha2::{Digest, Sha256, Sha512};
use std::collections::BTreeMap;

/// A finite-dimensional braided vector space: the braid operator given
/// columnwise on the tensor-square basis. Column index i*d + j is the basis
/// vector e_i (x) e_j.
#[derive(Clone)]
pub struct BraidedSpace {
    pub dim: usize,
    /// braid[i*d + j] = image of e_i (x) e_j as a sparse vector over the
    /// same pair indexing.
    pub braid: Vec<SparseVec>,
}

/// Braiding-level failure (non-invertibility or a Yang-Baxter violation
/// signal a broken module).
#[derive(Debug, Clone, thiserror::Error)]
pub enum BraidError {
    #[error("braid operator is not invertible")]
    NotInvertible,
    #[error("Yang-Baxter equation fails at basis index {0}")]
    YangBaxter(usize),
}

impl BraidedSpace {
    /// Braiding of a Yetter-Drinfeld module on its given basis.
    pub fn from_module(m: &YdModule) -> Self {
        let d = m.dim;
        let mut braid = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                // c(e_i (x) e_j) = sum over rho(e_i) of (e_a . e_j) (x) e_m
                let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
                for (c, a, mm) in &m.coaction[i] {
                    for (k, v) in m.actions[*a].col(j) {
                        let e = acc.entry(k * d + mm).or_insert_with(Cyclo::zero);
                        *e += c * &v;
                    }
                }
                braid.push(
                    acc.into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect::<SparseVec>(),
                );
            }
        }
        BraidedSpace { dim: d, braid }
    }

    /// Diagonal braiding from a q-matrix: c(e_i (x) e_j) = q_ij e_j (x) e_i.
    pub fn diagonal(q: &[Vec<Cyclo>]) -> Self {
        let d = q.len();
        let mut braid = Vec::with_capacity(d * d);
        for i in 0..d {
            assert_eq!(q[i].len(), d, "q-matrix must be square");
            for j in 0..d {
                braid.push(vec![(j * d + i, q[i][j].clone())]);
            }
        }
        BraidedSpace { dim: d, braid }
    }

    /// Applies the braid operator to a vector over the pair basis.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
        for (k, x) in v {
            for (t, c) in &self.braid[*k] {
                let e = acc.entry(*t).or_insert_with(Cyclo::zero);
                *e += c * x;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Checks invertibility and the Yang-Baxter equation
    /// (c (x) 1)(1 (x) c)(c (x) 1) = (1 (x) c)(c (x) 1)(1 (x) c) on V^(x)3.
    pub fn verify(&self) -> Result<(), BraidError> {
        let d = self.dim;
        let mut elim = RowEliminator::new();
        let mut rank = 0;
        for col in &self.braid {
            if elim.insert(col.clone()) {
                rank += 1;
            }
        }
        if rank != d * d {
            return Err(BraidError::NotInvertible);
        }
        for w in 0..d * d * d {
            let v: SparseVec = vec![(w, Cyclo::one())];
            let lhs = apply_braid_at(self, &apply_braid_at(self, &apply_braid_at(self, &v, 3, 1), 3, 2), 3, 1);
            let rhs = apply_braid_at(self, &apply_braid_at(self, &apply_braid_at(self, &v, 3, 2), 3, 1), 3, 2);
            if lhs != rhs {
                return Err(BraidError::YangBaxter(w));
            }
        }
        Ok(())
    }

    /// Content hash of the braid matrix (dimensions + canonical entries).
    /// Twist-equal modules share braidings entrywise, hence cache entries.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.canonical_bytes());
        hex_string(&hasher.finalize())
    }

    /// Second, independent digest for collision checking in caches.
    pub fn second_digest(&self) -> String {
        let mut hasher = Sha512::new();
        hasher.update(self.canonical_bytes());
        hex_string(&hasher.finalize()[..32])
    }

    fn canonical_bytes(&self) -> Vec<u8> {
        let mut s = format!("braid dim {}\n", self.dim);
        for (k, col) in self.braid.iter().enumerate() {
            for (t, c) in col {
                s.push_str(&format!("{} {} {}\n", k, t, c.to_canonical_string()));
            }
        }
        s.into_bytes()
    }
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{:02x}", b)).collect()
}

/// Applies the elementary braiding c_slot (acting on tensor slots slot,
/// slot+1; slots are 1-based) to a vector over the basis of V^(x)n.
/// Word codes are big-endian: the first tensor slot is the most significant
/// digit, matching the pair index i*d + j on the square.
pub fn apply_braid_at(c: &BraidedSpace, v: &SparseVec, n: usize, slot: usize) -> SparseVec {
    debug_assert!(slot >= 1 && slot < n + 1);
    let d = c.dim;
    // stride of the slot pair: digits at positions slot-1, slot (0-based from the left)
    let right_digits = n - slot - 1;
    let stride = d.pow(right_digits as u32);
    let pair_stride = stride * d * d;
    let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
    for (code, x) in v {
        let low = code % stride;
        let pair = (code / stride) % (d * d);
        let high = code / pair_stride;
        for (t, cc) in &c.braid[pair] {
            let new_code = high * pair_stride + t * stride + low;
            let e = acc.entry(new_code).or_insert_with(Cyclo::zero);
            *e += cc * x;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Applies the partial symmetrizer S_{n,1} = id + c_n + c_n c_{n-1} + ... +
/// c_n ... c_1, an endomorphism of V^(x)(n+1), via the Horner-style nesting
/// S_{n,1} = id + c_n S_{n-1,1}. `width` is the total tensor length of the
/// ambient word space (at least n + 1); the operator acts on slots 1..=n+1.
fn apply_partial_symmetrizer_in(
    c: &BraidedSpace,
    n: usize,
    width: usize,
    v: &SparseVec,
) -> SparseVec {
    let mut w = v.clone();
    for slot in 1..=n {
        let im = apply_braid_at(c, &w, width, slot);
        w = im;
        let mut sum = v.clone();
        crate::cyclo::sparse_axpy(&mut sum, &Cyclo::one(), &w);
        w = sum;
    }
    w
}

/// Applies the partial symmetrizer S_{n,1} on V^(x)(n+1).
pub fn apply_partial_symmetrizer(c: &BraidedSpace, n: usize, v: &SparseVec) -> SparseVec {
    apply_partial_symmetrizer_in(c, n, n + 1, v)
}

/// Applies the full quantum symmetrizer S_n of V^(x)n. Unrolling the
/// recursion S_n = (S_{n-1} (x) id) S_{n-1,1} gives the product of prefix
/// operators S_{1,1}, S_{2,1}, ..., S_{n-1,1}, each acting on a leading
/// block of tensor slots, applied right to left.
pub fn apply_symmetrizer(c: &BraidedSpace, n: usize, v: &SparseVec) -> SparseVec {
    if n <= 1 {
        return v.clone();
    }
    let mut w = v.clone();
    for k in (1..n).rev() {
        w = apply_partial_symmetrizer_in(c, k, n, &w);
    }
    w
}

/// Size-cap violation for materializing a symmetrizer.
#[derive(Debug, Clone, thiserror::Error)]
#[error("symmetrizer of degree {degree} needs dimension {needed}, over the cap {cap}")]
pub struct SizeCapExceeded {
    pub degree: usize,
    pub needed: usize,
    pub cap: usize,
}

/// Materializes the quantum symmetrizer S_n as its list of columns, under a
/// total-dimension cap (default 4096).
pub fn symmetrizer(
    c: &BraidedSpace,
    n: usize,
    cap: usize,
) -> Result<Vec<SparseVec>, SizeCapExceeded> {
    assert!(n >= 1);
    let needed = c.dim.checked_pow(n as u32).unwrap_or(usize::MAX);
    if needed > cap {
        return Err(SizeCapExceeded {
            degree: n,
            needed,
            cap,
        });
    }
    let mut cols = Vec::with_capacity(needed);
    for w in 0..needed {
        let v: SparseVec = vec![(w, Cyclo::one())];
        cols.push(apply_symmetrizer(c, n, &v));
    }
    Ok(cols)
}

/// Detects a diagonal braiding in the given basis: returns the q-matrix
/// with c(e_i (x) e_j) = q_ij e_j (x) e_i when every column is a scalar
/// multiple of the flipped basis vector. No basis search is attempted.
pub fn diagonal_form(c: &BraidedSpace) -> Option<Vec<Vec<Cyclo>>> {
    let d = c.dim;
    let mut q = vec![vec![Cyclo::zero(); d]; d];
    for i in 0..d {
        for j in 0..d {
            let col = &c.braid[i * d + j];
            if col.len() != 1 {
                return None;
            }
            let (t, v) = &col[0];
            if *t != j * d + i {
                return None;
            }
            q[i][j] = v.clone();
        }
    }
    Some(q)
}

/// Predicted rank of S_2 for a diagonal braiding: the diagonal pair
/// e_i (x) e_i survives iff 1 + q_ii is nonzero, and the off-diagonal pair
/// {ij, ji} contributes 1 when q_ij q_ji = 1 and 2 otherwise.
pub fn diagonal_rank2_prediction(q: &[Vec<Cyclo>]) -> usize {
    let d = q.len();
    let mut rank = 0;
    for i in 0..d {
        if !(Cyclo::one() + q[i][i].clone()).is_zero() {
            rank += 1;
        }
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let prod = &q[i][j] * &q[j][i];
            rank += if prod.is_one() { 1 } else { 2 };
        }
    }
    rank
}

/// Cross-braiding restricted to a block pair of a direct sum, as a map
/// keyed by (i in a, j in b) -> terms over (k in b, l in a).
pub(crate) fn cross_braiding(
    a: &YdModule,
    b: &YdModule,
) -> Vec<Vec<SparseVec>> {
    // c_{A,B}(e_i (x) f_j) = sum rho_A(e_i) legs acting on f_j (x) e_m
    let mut out = vec![vec![Vec::new(); b.dim]; a.dim];
    for i in 0..a.dim {
        for j in 0..b.dim {
            let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
            for (c, h, mm) in &a.coaction[i] {
                for (k, v) in b.actions[*h].col(j) {
                    let e = acc.entry(k * a.dim + mm).or_insert_with(Cyclo::zero);
                    *e += c * &v;
                }
            }
            out[i][j] = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
    }
    out
}

/// Scales a braided space column set (test helper for scalar braidings).
pub fn scalar_braiding(q: Cyclo) -> BraidedSpace {
    BraidedSpace {
        dim: 1,
        braid: vec![sparse_scale(&vec![(0usize, Cyclo::one())], &q)],
    }
}

#[cfg(test)]
mod tests;
