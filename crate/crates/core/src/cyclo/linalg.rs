//! Exact linear algebra over Q(zeta_8): sparse vectors, matrices, rank,
//! kernels and linear solves.
//!
//! Rank and kernel run by column-pivoted elimination with incremental row
//! insertion, so callers can stream rows (symmetrizer images) one at a time
//! without materializing a dense endomorphism.

use super::number::Cyclo;
use std::collections::BTreeMap;

/// Sparse vector: strictly increasing indices, no explicit zeros.
pub type SparseVec = Vec<(usize, Cyclo)>;

/// Builds a sparse vector from arbitrary (index, value) pairs, merging
/// duplicates and dropping zeros.
pub fn sparse_from_pairs(pairs: impl IntoIterator<Item = (usize, Cyclo)>) -> SparseVec {
    let mut map: BTreeMap<usize, Cyclo> = BTreeMap::new();
    for (i, v) in pairs {
        if v.is_zero() {
            continue;
        }
        match map.entry(i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
    map.into_iter().collect()
}

pub fn sparse_scale(v: &SparseVec, s: &Cyclo) -> SparseVec {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * s)).collect()
}

/// w += s * v
pub fn sparse_axpy(w: &mut SparseVec, s: &Cyclo, v: &SparseVec) {
    if s.is_zero() || v.is_empty() {
        return;
    }
    let mut out: SparseVec = Vec::with_capacity(w.len() + v.len());
    let mut a = w.iter();
    let mut b = v.iter();
    let mut na = a.next();
    let mut nb = b.next();
    loop {
        match (na, nb) {
            (Some((ia, xa)), Some((ib, xb))) => {
                if ia < ib {
                    out.push((*ia, xa.clone()));
                    na = a.next();
                } else if ib < ia {
                    out.push((*ib, xb * s));
                    nb = b.next();
                } else {
                    let sum = xa.clone() + xb * s;
                    if !sum.is_zero() {
                        out.push((*ia, sum));
                    }
                    na = a.next();
                    nb = b.next();
                }
            }
            (Some((ia, xa)), None) => {
                out.push((*ia, xa.clone()));
                na = a.next();
            }
            (None, Some((ib, xb))) => {
                out.push((*ib, xb * s));
                nb = b.next();
            }
            (None, None) => break,
        }
    }
    *w = out;
}

/// Matrix over Q(zeta_8) with sparse storage. Entries absent from the map
/// are zero; the dense and sparse views agree entrywise by construction.
#[derive(Clone, PartialEq, Eq)]
pub struct CycloMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), Cyclo>,
}

impl CycloMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        CycloMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CycloMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Cyclo::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclo>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = CycloMatrix::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Cyclo {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Cyclo::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclo) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Cyclo)> {
        self.entries.iter()
    }

    pub fn row(&self, i: usize) -> SparseVec {
        self.entries
            .range((i, 0)..=(i, self.cols.saturating_sub(1)))
            .map(|(&(_, j), v)| (j, v.clone()))
            .collect()
    }

    pub fn col(&self, j: usize) -> SparseVec {
        let mut v: SparseVec = self
            .entries
            .iter()
            .filter(|(&(_, jj), _)| jj == j)
            .map(|(&(i, _), x)| (i, x.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn transpose(&self) -> CycloMatrix {
        let mut m = CycloMatrix::zero(self.cols, self.rows);
        for (&(i, j), v) in &self.entries {
            m.set(j, i, v.clone());
        }
        m
    }

    pub fn matmul(&self, rhs: &CycloMatrix) -> CycloMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = CycloMatrix::zero(self.rows, rhs.cols);
        let mut acc: BTreeMap<(usize, usize), Cyclo> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for (&(kk, j), b) in rhs.entries.range((k, 0)..=(k, rhs.cols.saturating_sub(1))) {
                debug_assert_eq!(k, kk);
                let p = a * b;
                if p.is_zero() {
                    continue;
                }
                let e = acc.entry((i, j)).or_insert_with(Cyclo::zero);
                *e += p;
            }
        }
        for ((i, j), v) in acc {
            out.set(i, j, v);
        }
        out
    }

    pub fn add(&self, rhs: &CycloMatrix) -> CycloMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        let mut out = self.clone();
        for (&(i, j), v) in &rhs.entries {
            let s = out.get(i, j) + v.clone();
            out.set(i, j, s);
        }
        out
    }

    pub fn scale(&self, s: &Cyclo) -> CycloMatrix {
        let mut out = CycloMatrix::zero(self.rows, self.cols);
        for (&(i, j), v) in &self.entries {
            out.set(i, j, v * s);
        }
        out
    }

    /// Matrix-vector product with a sparse vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out: BTreeMap<usize, Cyclo> = BTreeMap::new();
        for (j, x) in v {
            for (&(i, jj), a) in self
                .entries
                .iter()
                .filter(|(&(_, col), _)| col == *j)
            {
                debug_assert_eq!(jj, *j);
                let p = a * x;
                if p.is_zero() {
                    continue;
                }
                let e = out.entry(i).or_insert_with(Cyclo::zero);
                *e += p;
            }
        }
        out.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Exact rank via streaming row elimination.
    pub fn rank(&self) -> usize {
        let mut elim = RowEliminator::new();
        for i in 0..self.rows {
            elim.insert(self.row(i));
        }
        elim.rank()
    }

    /// Basis of the right kernel {v : Mv = 0}. Each basis vector has a 1 in
    /// its distinguishing free coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<Cyclo>> {
        // Reduced row echelon form over the ordered columns.
        let mut rows: Vec<SparseVec> = (0..self.rows).map(|i| self.row(i)).filter(|r| !r.is_empty()).collect();
        let mut pivots: Vec<(usize, SparseVec)> = Vec::new(); // (pivot col, normalized row)
        while let Some(mut r) = rows.pop() {
            for (pc, pr) in &pivots {
                if let Some(pos) = r.iter().position(|(j, _)| j == pc) {
                    let coef = r[pos].1.clone();
                    sparse_axpy(&mut r, &(-coef), pr);
                }
            }
            if let Some((lead, lv)) = r.first().cloned() {
                let inv = lv.inv().expect("nonzero leading coefficient");
                let r = sparse_scale(&r, &inv);
                // Back-substitute into existing pivot rows.
                for (_, pr) in pivots.iter_mut() {
                    if let Some(pos) = pr.iter().position(|(j, _)| *j == lead) {
                        let coef = pr[pos].1.clone();
                        sparse_axpy(pr, &(-coef), &r);
                    }
                }
                pivots.push((lead, r));
            }
        }
        pivots.sort_by_key(|(c, _)| *c);
        let pivot_cols: Vec<usize> = pivots.iter().map(|(c, _)| *c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Cyclo::zero(); self.cols];
            v[free] = Cyclo::one();
            for (pc, pr) in &pivots {
                if let Some((_, coef)) = pr.iter().find(|(j, _)| *j == free) {
                    v[*pc] = -coef.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Inverse of a square matrix, if it exists. Column j of the inverse is
    /// the coefficient vector expressing e_j over the columns of `self`.
    pub fn inverse(&self) -> Option<CycloMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let t = self.transpose();
        let mut solver = Solver::new();
        for i in 0..n {
            if !solver.insert(t.row(i), i) {
                return None;
            }
        }
        let mut inv = CycloMatrix::zero(n, n);
        for j in 0..n {
            let target: SparseVec = vec![(j, Cyclo::one())];
            let coeffs = solver.solve(&target)?;
            for (i, c) in coeffs {
                inv.set(i, j, c);
            }
        }
        Some(inv)
    }
}

impl std::fmt::Debug for CycloMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CycloMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows.min(16) {
            let row: Vec<String> = (0..self.cols.min(16)).map(|j| format!("{}", self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Incremental row eliminator: rank grows as rows stream in. Pivot rows are
/// kept normalized (leading coefficient one) and indexed by leading column.
pub struct RowEliminator {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Default for RowEliminator {
    fn default() -> Self {
        Self::new()
    }
}

impl RowEliminator {
    pub fn new() -> Self {
        RowEliminator {
            pivots: BTreeMap::new(),
        }
    }

    /// Reduces `row` against the current pivots; if a nonzero remainder
    /// survives it becomes a new pivot and the rank grows. Returns whether
    /// the rank grew.
    pub fn insert(&mut self, mut row: SparseVec) -> bool {
        loop {
            let Some((lead, lv)) = row.first().cloned() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    sparse_axpy(&mut row, &(-lv), p);
                }
                None => {
                    let inv = lv.inv().expect("nonzero leading coefficient");
                    let row = sparse_scale(&row, &inv);
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Reduce a row without inserting; returns the remainder.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        loop {
            let Some((lead, lv)) = row.first().cloned() else {
                return row;
            };
            match self.pivots.get(&lead) {
                Some(p) => sparse_axpy(&mut row, &(-lv), p),
                None => return row,
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Elimination with coefficient tracking: expresses new vectors as linear
/// combinations of previously inserted ones (used for normal-form solves).
pub struct Solver {
    /// (pivot column, reduced vector, combination over inserted tags)
    pivots: Vec<(usize, SparseVec, Vec<(usize, Cyclo)>)>,
    rank: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Self::new()
    }
}

impl Solver {
    pub fn new() -> Self {
        Solver {
            pivots: Vec::new(),
            rank: 0,
        }
    }

    fn reduce_tracked(&self, mut v: SparseVec) -> (SparseVec, Vec<(usize, Cyclo)>) {
        let mut combo: Vec<(usize, Cyclo)> = Vec::new();
        loop {
            let Some((lead, lv)) = v.first().cloned() else {
                return (v, combo);
            };
            let Some((_, pv, pc)) = self.pivots.iter().find(|(c, _, _)| *c == lead) else {
                return (v, combo);
            };
            sparse_axpy(&mut v, &(-lv.clone()), pv);
            let neg = -lv;
            for (tag, coef) in pc {
                let add = coef * &neg;
                if add.is_zero() {
                    continue;
                }
                if let Some(e) = combo.iter_mut().find(|(t, _)| t == tag) {
                    e.1 += add;
                } else {
                    combo.push((*tag, add));
                }
            }
            combo.retain(|(_, c)| !c.is_zero());
        }
    }

    /// Inserts a tagged vector. Returns true when independent of the span so
    /// far (rank grew).
    pub fn insert(&mut self, v: SparseVec, tag: usize) -> bool {
        let (rem, mut combo) = self.reduce_tracked(v);
        let Some((lead, lv)) = rem.first().cloned() else {
            return false;
        };
        // rem = v + combo . tagged; normalize so pivot = tagged combo form.
        let inv = lv.inv().expect("nonzero leading coefficient");
        let normalized = sparse_scale(&rem, &inv);
        for (_, c) in combo.iter_mut() {
            *c = &*c * &inv;
        }
        if let Some(e) = combo.iter_mut().find(|(t, _)| *t == tag) {
            e.1 += inv;
        } else {
            combo.push((tag, inv));
        }
        self.pivots.push((lead, normalized, combo));
        self.rank += 1;
        true
    }

    /// Expresses `target` as a combination of inserted vectors, if possible.
    pub fn solve(&self, target: &SparseVec) -> Option<Vec<(usize, Cyclo)>> {
        let (rem, combo) = self.reduce_tracked(target.clone());
        if rem.is_empty() {
            Some(combo.into_iter().map(|(t, c)| (t, -c)).collect())
        } else {
            None
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Independent dense Gaussian elimination, used as the rank oracle.
    fn dense_rank(m: &CycloMatrix) -> usize {
        let mut a: Vec<Vec<Cyclo>> = (0..m.rows)
            .map(|i| (0..m.cols).map(|j| m.get(i, j)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot);
            let inv = a[rank][col].inv().unwrap();
            for j in 0..m.cols {
                a[rank][j] = &a[rank][j] * &inv;
            }
            for r in 0..m.rows {
                if r != rank && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..m.cols {
                        let sub = &a[rank][j] * &f;
                        a[r][j] = a[r][j].clone() - sub;
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn identity_rank() {
        assert_eq!(CycloMatrix::identity(3).rank(), 3);
    }

    #[test]
    fn rank_one_with_gaussian_entries() {
        // second row is i times the first
        let i = Cyclo::i();
        let m = CycloMatrix::from_rows(vec![
            vec![Cyclo::one(), i.clone()],
            vec![i.clone(), Cyclo::from_int(-1)],
        ]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn zero_matrix_rank() {
        assert_eq!(CycloMatrix::zero(5, 7).rank(), 0);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(CycloMatrix::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_row_sum() {
        let m = CycloMatrix::from_rows(vec![vec![Cyclo::one(), Cyclo::one()]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![Cyclo::from_int(-1), Cyclo::one()]);
        // spanned by (1, -1) up to scaling
        let scaled: Vec<Cyclo> = k[0].iter().map(|v| v.clone() * Cyclo::from_int(-1)).collect();
        assert_eq!(scaled, vec![Cyclo::one(), Cyclo::from_int(-1)]);
    }

    fn random_sparse(rng: &mut StdRng, rows: usize, cols: usize) -> CycloMatrix {
        let mut m = CycloMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if rng.gen_bool(0.25) {
                    let n = rng.gen_range(-4i64..=4);
                    if n != 0 {
                        let mut v = Cyclo::from_int(n);
                        if rng.gen_bool(0.3) {
                            v = v * Cyclo::zeta_pow(rng.gen_range(0i64..8));
                        }
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }

    #[test]
    fn rank_plus_kernel_dimension_on_random_instances() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..12 {
            let m = random_sparse(&mut rng, 20, 20);
            let r = m.rank();
            assert_eq!(r, dense_rank(&m), "streaming rank disagrees with dense oracle");
            let null = m.kernel_basis().len();
            assert_eq!(r + null, m.cols);
            for v in m.kernel_basis() {
                let sv: SparseVec = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, x)| (i, x.clone()))
                    .collect();
                assert!(m.apply(&sv).is_empty(), "kernel vector not annihilated");
            }
        }
    }

    #[test]
    fn rank_invariant_under_row_permutation_and_scaling() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..8 {
            let m = random_sparse(&mut rng, 10, 12);
            let r = m.rank();
            let mut rows: Vec<SparseVec> = (0..m.rows).map(|i| m.row(i)).collect();
            // permute
            for i in (1..rows.len()).rev() {
                let j = rng.gen_range(0..=i);
                rows.swap(i, j);
            }
            // scale by nonzero scalars
            let mut m2 = CycloMatrix::zero(m.rows, m.cols);
            for (i, row) in rows.iter().enumerate() {
                let mut s = Cyclo::zeta_pow(rng.gen_range(0i64..8));
                s = s * Cyclo::from_int(rng.gen_range(1i64..=3));
                for (j, v) in row {
                    m2.set(i, *j, v * &s);
                }
            }
            assert_eq!(m2.rank(), r);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..6 {
            let mut m = random_sparse(&mut rng, 6, 6);
            for i in 0..6 {
                // nudge towards invertibility
                let d = m.get(i, i) + Cyclo::from_int(3);
                m.set(i, i, d);
            }
            if let Some(inv) = m.inverse() {
                assert_eq!(m.matmul(&inv), CycloMatrix::identity(6));
                assert_eq!(inv.matmul(&m), CycloMatrix::identity(6));
            }
        }
    }

    #[test]
    fn solver_expresses_dependent_vectors() {
        let mut s = Solver::new();
        let v1: SparseVec = vec![(0, Cyclo::one()), (1, Cyclo::one())];
        let v2: SparseVec = vec![(1, Cyclo::one()), (2, Cyclo::one())];
        assert!(s.insert(v1.clone(), 0));
        assert!(s.insert(v2.clone(), 1));
        // target = v1 + 2*v2
        let mut target = v1.clone();
        sparse_axpy(&mut target, &Cyclo::from_int(2), &v2);
        let combo = s.solve(&target).unwrap();
        let mut recon: SparseVec = Vec::new();
        for (tag, c) in combo {
            let v = if tag == 0 { &v1 } else { &v2 };
            sparse_axpy(&mut recon, &c, v);
        }
        assert_eq!(recon, target);
    }
}
