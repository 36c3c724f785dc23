//! Finite-dimensional Hopf algebras presented by structure constants, with
//! exhaustive axiom verification, plus the Kac-Paljutkin algebra itself:
//! its idempotents, automorphism group and characters.
//!
//! The Kac-Paljutkin algebra is the 8-dimensional semisimple Hopf algebra
//! generated by x, y, z with
//!   x^2 = y^2 = 1,  z^2 = (1 + x + y - xy)/2,  xy = yx,  zx = yz,  zy = xz,
//! and Delta(z) = [(1+y)z (x) z + (1-y)z (x) xz]/2. It is neither
//! commutative nor cocommutative. We fix the basis {1, x, y, xy, z, xz, yz,
//! xyz} throughout; index = (two bits for the group part) + 4*(z-exponent).

use crate::cyclo::{sparse_axpy, sparse_from_pairs, Cyclo, CycloMatrix, SparseVec};
use rayon::prelude::*;

/// Dense element of a finite-dimensional algebra on its fixed basis.
pub type Element = Vec<Cyclo>;

/// Comultiplication of one basis element: list of (coefficient, left basis
/// index, right basis index).
pub type ComultTerms = Vec<(Cyclo, usize, usize)>;

/// Optional multiplicative generating data: lets verification factor
/// pairwise checks through generators on large algebras (the factored check
/// implies the exhaustive one by bilinearity and induction on word length).
#[derive(Clone, Debug)]
pub struct GeneratorSpec {
    /// Basis indices that generate the algebra multiplicatively.
    pub generators: Vec<usize>,
    /// For each basis index, a word in generator indices whose product is
    /// exactly that basis element.
    pub words: Vec<Vec<usize>>,
}

/// A finite-dimensional Hopf algebra by structure constants.
#[derive(Clone)]
pub struct HopfAlgebra {
    pub dim: usize,
    pub basis_labels: Vec<String>,
    /// mult[i][j] = sparse coefficient vector of e_i * e_j.
    pub mult: Vec<Vec<SparseVec>>,
    pub unit: usize,
    pub comult: Vec<ComultTerms>,
    pub counit: Vec<Cyclo>,
    pub antipode: CycloMatrix,
    pub generators: Option<GeneratorSpec>,
}

impl HopfAlgebra {
    pub fn product(&self, a: &Element, b: &Element) -> Element {
        let mut out = vec![Cyclo::zero(); self.dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let f = ai * bj;
                for (k, c) in &self.mult[i][j] {
                    out[*k] += c * &f;
                }
            }
        }
        out
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn unit_element(&self) -> Element {
        let mut e = vec![Cyclo::zero(); self.dim];
        e[self.unit] = Cyclo::one();
        e
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = vec![Cyclo::zero(); self.dim];
        e[i] = Cyclo::one();
        e
    }

    pub fn counit_of(&self, a: &Element) -> Cyclo {
        let mut s = Cyclo::zero();
        for (i, ai) in a.iter().enumerate() {
            s += &self.counit[i] * ai;
        }
        s
    }

    pub fn antipode_of(&self, a: &Element) -> Element {
        let sv: SparseVec = a
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        let out = self.antipode.apply(&sv);
        let mut dense = vec![Cyclo::zero(); self.dim];
        for (i, v) in out {
            dense[i] = v;
        }
        dense
    }

    /// Comultiplication of an arbitrary element as sparse tensor terms.
    pub fn comult_of(&self, a: &Element) -> Vec<(Cyclo, usize, usize)> {
        let mut acc: std::collections::BTreeMap<(usize, usize), Cyclo> = Default::default();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (c, l, r) in &self.comult[i] {
                let e = acc.entry((*l, *r)).or_insert_with(Cyclo::zero);
                *e += c * ai;
            }
        }
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((l, r), c)| (c, l, r))
            .collect()
    }

    /// Iterated comultiplication: (Delta (x) id)Delta(e_i) as a list of
    /// (coefficient, i1, i2, i3).
    pub fn comult2_of_basis(&self, i: usize) -> Vec<(Cyclo, usize, usize, usize)> {
        let mut acc: std::collections::BTreeMap<(usize, usize, usize), Cyclo> = Default::default();
        for (c, l, r) in &self.comult[i] {
            for (c2, l2, r2) in &self.comult[*l] {
                let e = acc.entry((*l2, *r2, *r)).or_insert_with(Cyclo::zero);
                *e += c * c2;
            }
        }
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((a, b, d), c)| (c, a, b, d))
            .collect()
    }
}

/// Outcome of one axiom check.
#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub name: String,
    pub ok: bool,
    /// First failing tuple, when not ok.
    pub detail: Option<String>,
}

/// Verification report for a Hopf algebra; `all_ok` is the gate.
#[derive(Clone, Debug)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
    pub fn failing(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.ok).collect()
    }
}

fn sparse_eq(a: &SparseVec, b: &SparseVec) -> bool {
    a == b
}

fn tensor_product_terms(
    h: &HopfAlgebra,
    a: &[(Cyclo, usize, usize)],
    b: &[(Cyclo, usize, usize)],
) -> Vec<(Cyclo, usize, usize)> {
    // product in H (x) H: (u1 (x) u2)(v1 (x) v2) = u1 v1 (x) u2 v2
    let mut acc: std::collections::BTreeMap<(usize, usize), Cyclo> = Default::default();
    for (ca, la, ra) in a {
        for (cb, lb, rb) in b {
            let f = ca * cb;
            if f.is_zero() {
                continue;
            }
            for (kl, cl) in &h.mult[*la][*lb] {
                for (kr, cr) in &h.mult[*ra][*rb] {
                    let v = &(cl * cr) * &f;
                    if v.is_zero() {
                        continue;
                    }
                    let e = acc.entry((*kl, *kr)).or_insert_with(Cyclo::zero);
                    *e += v;
                }
            }
        }
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((l, r), c)| (c, l, r))
        .collect()
}

/// Exhaustive verification of all Hopf axioms. Associativity and the
/// algebra-map property of Delta are checked on all basis tuples when no
/// generator data is attached; with generator data the checks run on
/// (basis x generator) tuples, which implies the exhaustive statement.
pub fn verify_hopf(h: &HopfAlgebra) -> HopfReport {
    let mut checks = Vec::new();
    let d = h.dim;

    // unit laws
    let mut unit_fail = None;
    for i in 0..d {
        let e = h.basis_element(i);
        if h.product(&h.unit_element(), &e) != e || h.product(&e, &h.unit_element()) != e {
            unit_fail = Some(format!("basis {}", i));
            break;
        }
    }
    checks.push(AxiomCheck {
        name: "unit law".into(),
        ok: unit_fail.is_none(),
        detail: unit_fail,
    });

    // associativity
    let assoc_triples: Vec<(usize, usize, usize)> = match &h.generators {
        Some(g) if d > 16 => {
            let mut t = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    for &k in &g.generators {
                        t.push((i, j, k));
                    }
                }
            }
            t
        }
        _ => {
            let mut t = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        t.push((i, j, k));
                    }
                }
            }
            t
        }
    };
    let assoc_fail: Option<String> = assoc_triples
        .par_iter()
        .find_map_any(|&(i, j, k)| {
            // (e_i e_j) e_k
            let mut lhs: SparseVec = Vec::new();
            for (t, c) in &h.mult[i][j] {
                sparse_axpy(&mut lhs, c, &h.mult[*t][k]);
            }
            let mut rhs: SparseVec = Vec::new();
            for (t, c) in &h.mult[j][k] {
                sparse_axpy(&mut rhs, c, &h.mult[i][*t]);
            }
            if sparse_eq(&lhs, &rhs) {
                None
            } else {
                Some(format!("({}, {}, {})", i, j, k))
            }
        });
    checks.push(AxiomCheck {
        name: "associativity".into(),
        ok: assoc_fail.is_none(),
        detail: assoc_fail,
    });

    // generator factorization validity (when present)
    if let Some(g) = &h.generators {
        let mut fail = None;
        for (i, word) in g.words.iter().enumerate() {
            let mut acc = h.unit_element();
            for &gi in word {
                acc = h.product(&acc, &h.basis_element(gi));
            }
            if acc != h.basis_element(i) {
                fail = Some(format!("basis {} is not the product of its word", i));
                break;
            }
        }
        checks.push(AxiomCheck {
            name: "generator factorization".into(),
            ok: fail.is_none(),
            detail: fail,
        });
    }

    // coassociativity + counit laws
    let mut coassoc_fail = None;
    let mut counit_fail = None;
    for i in 0..d {
        let lhs = h.comult2_of_basis(i);
        // (id (x) Delta) Delta
        let mut acc: std::collections::BTreeMap<(usize, usize, usize), Cyclo> = Default::default();
        for (c, l, r) in &h.comult[i] {
            for (c2, l2, r2) in &h.comult[*r] {
                let e = acc.entry((*l, *l2, *r2)).or_insert_with(Cyclo::zero);
                *e += c * c2;
            }
        }
        let rhs: Vec<(Cyclo, usize, usize, usize)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((a, b, cc), c)| (c, a, b, cc))
            .collect();
        if lhs != rhs && coassoc_fail.is_none() {
            coassoc_fail = Some(format!("basis {}", i));
        }
        // (eps (x) id) Delta = id = (id (x) eps) Delta
        let mut left = vec![Cyclo::zero(); d];
        let mut right = vec![Cyclo::zero(); d];
        for (c, l, r) in &h.comult[i] {
            left[*r] += c * &h.counit[*l];
            right[*l] += c * &h.counit[*r];
        }
        if (left != h.basis_element(i) || right != h.basis_element(i)) && counit_fail.is_none() {
            counit_fail = Some(format!("basis {}", i));
        }
    }
    checks.push(AxiomCheck {
        name: "coassociativity".into(),
        ok: coassoc_fail.is_none(),
        detail: coassoc_fail,
    });
    checks.push(AxiomCheck {
        name: "counit law".into(),
        ok: counit_fail.is_none(),
        detail: counit_fail,
    });

    // Delta and eps are algebra maps
    let pairs: Vec<(usize, usize)> = match &h.generators {
        Some(g) if d > 16 => {
            let mut t = Vec::new();
            for i in 0..d {
                for &k in &g.generators {
                    t.push((i, k));
                }
            }
            t
        }
        _ => {
            let mut t = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    t.push((i, j));
                }
            }
            t
        }
    };
    let delta_fail: Option<String> = pairs
        .par_iter()
        .find_map_any(|&(i, j)| {
            let mut lhs: std::collections::BTreeMap<(usize, usize), Cyclo> = Default::default();
            for (k, c) in &h.mult[i][j] {
                for (c2, l, r) in &h.comult[*k] {
                    let e = lhs.entry((*l, *r)).or_insert_with(Cyclo::zero);
                    *e += c * c2;
                }
            }
            let lhs: Vec<(Cyclo, usize, usize)> = lhs
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((l, r), c)| (c, l, r))
                .collect();
            let rhs = tensor_product_terms(h, &h.comult[i], &h.comult[j]);
            if lhs == rhs {
                None
            } else {
                Some(format!("Delta not multiplicative at ({}, {})", i, j))
            }
        });
    checks.push(AxiomCheck {
        name: "comultiplication is an algebra map".into(),
        ok: delta_fail.is_none(),
        detail: delta_fail,
    });
    let eps_fail: Option<String> = pairs
        .par_iter()
        .find_map_any(|&(i, j)| {
            let mut lhs = Cyclo::zero();
            for (k, c) in &h.mult[i][j] {
                lhs += c * &h.counit[*k];
            }
            if lhs == &h.counit[i] * &h.counit[j] {
                None
            } else {
                Some(format!("({}, {})", i, j))
            }
        });
    checks.push(AxiomCheck {
        name: "counit is an algebra map".into(),
        ok: eps_fail.is_none(),
        detail: eps_fail,
    });
    // Delta(1) = 1 (x) 1, eps(1) = 1
    let unit_coalg_ok = h.comult[h.unit]
        == vec![(Cyclo::one(), h.unit, h.unit)]
        && h.counit[h.unit].is_one();
    checks.push(AxiomCheck {
        name: "unit is group-like".into(),
        ok: unit_coalg_ok,
        detail: if unit_coalg_ok { None } else { Some("unit".into()) },
    });

    // antipode convolution law, both sides
    let mut antipode_fail = None;
    for i in 0..d {
        let target = {
            let mut t = vec![Cyclo::zero(); d];
            t[h.unit] = h.counit[i].clone();
            t
        };
        let mut left = vec![Cyclo::zero(); d];
        let mut right = vec![Cyclo::zero(); d];
        for (c, l, r) in &h.comult[i] {
            let sl = h.antipode_of(&h.basis_element(*l));
            let term = h.product(&sl, &h.basis_element(*r));
            for (k, v) in term.iter().enumerate() {
                left[k] += v * c;
            }
            let sr = h.antipode_of(&h.basis_element(*r));
            let term = h.product(&h.basis_element(*l), &sr);
            for (k, v) in term.iter().enumerate() {
                right[k] += v * c;
            }
        }
        if left != target || right != target {
            antipode_fail = Some(format!("basis {}", i));
            break;
        }
    }
    checks.push(AxiomCheck {
        name: "antipode convolution law".into(),
        ok: antipode_fail.is_none(),
        detail: antipode_fail,
    });

    let inv_ok = h.antipode.rank() == d;
    checks.push(AxiomCheck {
        name: "antipode invertible".into(),
        ok: inv_ok,
        detail: if inv_ok { None } else { Some("antipode matrix singular".into()) },
    });

    HopfReport { checks }
}

// ---------------------------------------------------------------------------
// The Kac-Paljutkin algebra on basis {1, x, y, xy, z, xz, yz, xyz}.
// ---------------------------------------------------------------------------

/// Basis indices of the fixed Kac-Paljutkin basis.
pub mod h8 {
    pub const ONE: usize = 0;
    pub const X: usize = 1;
    pub const Y: usize = 2;
    pub const XY: usize = 3;
    pub const Z: usize = 4;
    pub const XZ: usize = 5;
    pub const YZ: usize = 6;
    pub const XYZ: usize = 7;
}

/// Group part of a basis index (two bits: bit0 = x, bit1 = y).
fn grp(i: usize) -> usize {
    i & 3
}
/// z-exponent of a basis index.
fn zexp(i: usize) -> usize {
    i >> 2
}
/// sigma swaps x and y; it is conjugation by z on the group part.
fn sigma(g: usize) -> usize {
    ((g & 1) << 1) | ((g & 2) >> 1)
}

/// Builds the Kac-Paljutkin algebra with its full Hopf structure.
pub fn build_h8() -> HopfAlgebra {
    let labels = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"];
    let half = Cyclo::from_ratio(1, 2);
    let mut mult = vec![vec![Vec::<(usize, Cyclo)>::new(); 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let g = grp(i) ^ if zexp(i) == 1 { sigma(grp(j)) } else { grp(j) };
            let e = zexp(i) + zexp(j);
            mult[i][j] = if e < 2 {
                vec![(g | (e << 2), Cyclo::one())]
            } else {
                // z^2 = (1 + x + y - xy)/2
                sparse_from_pairs(vec![
                    (g, half.clone()),
                    (g ^ 1, half.clone()),
                    (g ^ 2, half.clone()),
                    (g ^ 3, -half.clone()),
                ])
            };
        }
    }
    let mut comult: Vec<ComultTerms> = Vec::with_capacity(8);
    for i in 0..8 {
        let g = grp(i);
        if zexp(i) == 0 {
            comult.push(vec![(Cyclo::one(), g, g)]);
        } else {
            // (g (x) g) . Delta(z), Delta(z) = (z(x)z + yz(x)z + z(x)xz - yz(x)xz)/2
            let gz = g | 4;
            let gyz = (g ^ 2) | 4;
            let gxz = (g ^ 1) | 4;
            let mut terms = vec![
                (half.clone(), gz, gz),
                (half.clone(), gyz, gz),
                (half.clone(), gz, gxz),
                (-half.clone(), gyz, gxz),
            ];
            terms.sort_by_key(|(_, l, r)| (*l, *r));
            comult.push(terms);
        }
    }
    let counit = vec![Cyclo::one(); 8];
    // S fixes the group part pointwise and sends gz to sigma(g)z.
    let mut antipode = CycloMatrix::zero(8, 8);
    for i in 0..8 {
        let img = if zexp(i) == 0 { i } else { sigma(grp(i)) | 4 };
        antipode.set(img, i, Cyclo::one());
    }
    HopfAlgebra {
        dim: 8,
        basis_labels: labels.iter().map(|s| s.to_string()).collect(),
        mult,
        unit: 0,
        comult,
        counit,
        antipode,
        generators: Some(GeneratorSpec {
            generators: vec![h8::X, h8::Y, h8::Z],
            words: vec![
                vec![],
                vec![h8::X],
                vec![h8::Y],
                vec![h8::X, h8::Y],
                vec![h8::Z],
                vec![h8::X, h8::Z],
                vec![h8::Y, h8::Z],
                vec![h8::X, h8::Y, h8::Z],
            ],
        }),
    }
}

/// Element constructors for H8.
pub fn h8_elem(pairs: &[(usize, Cyclo)]) -> Element {
    let mut e = vec![Cyclo::zero(); 8];
    for (i, c) in pairs {
        e[*i] += c.clone();
    }
    e
}

/// The central orthogonal idempotents e1..e5 plus the non-central pair
/// e5', e5'' refining e5.
pub struct Idempotents {
    pub e: [Element; 5],
    pub e5_prime: Element,
    pub e5_double_prime: Element,
}

pub fn idempotents() -> Idempotents {
    let h = build_h8();
    let one = h.basis_element(h8::ONE);
    let x = h.basis_element(h8::X);
    let y = h.basis_element(h8::Y);
    let z = h.basis_element(h8::Z);
    let xy = h.basis_element(h8::XY);
    let add = |a: &Element, b: &Element| -> Element {
        a.iter().zip(b).map(|(u, v)| u.clone() + v.clone()).collect()
    };
    let sub = |a: &Element, b: &Element| -> Element {
        a.iter().zip(b).map(|(u, v)| u.clone() - v.clone()).collect()
    };
    let scale = |a: &Element, s: Cyclo| -> Element { a.iter().map(|u| u * &s).collect() };
    let iz = scale(&z, Cyclo::i());
    let eighth = Cyclo::from_ratio(1, 8);
    let quarter = Cyclo::from_ratio(1, 4);
    let e1 = scale(
        &h.product(&h.product(&add(&one, &x), &add(&one, &y)), &add(&one, &z)),
        eighth.clone(),
    );
    let e2 = scale(
        &h.product(&h.product(&add(&one, &x), &add(&one, &y)), &sub(&one, &z)),
        eighth.clone(),
    );
    let e3 = scale(
        &h.product(&h.product(&sub(&one, &x), &sub(&one, &y)), &add(&one, &iz)),
        eighth.clone(),
    );
    let e4 = scale(
        &h.product(&h.product(&sub(&one, &x), &sub(&one, &y)), &sub(&one, &iz)),
        eighth,
    );
    let e5 = scale(&sub(&one, &xy), Cyclo::from_ratio(1, 2));
    let e5p = scale(&h.product(&sub(&one, &xy), &add(&one, &z)), quarter.clone());
    let e5pp = scale(&h.product(&sub(&one, &xy), &sub(&one, &z)), quarter);
    Idempotents {
        e: [e1, e2, e3, e4, e5],
        e5_prime: e5p,
        e5_double_prime: e5pp,
    }
}

/// f_{jk} = [1 + (-1)^j x][1 + (-1)^k y]/4 for j, k in {0, 1}.
pub fn f_idem(j: usize, k: usize) -> Element {
    assert!(j < 2 && k < 2);
    let q = Cyclo::from_ratio(1, 4);
    let sx = if j == 0 { Cyclo::one() } else { Cyclo::from_int(-1) };
    let sy = if k == 0 { Cyclo::one() } else { Cyclo::from_int(-1) };
    h8_elem(&[
        (h8::ONE, q.clone()),
        (h8::X, q.clone() * sx.clone()),
        (h8::Y, q.clone() * sy.clone()),
        (h8::XY, q * sx * sy),
    ])
}

/// A linear map between Hopf algebras, given by its matrix on the bases
/// (column j = image of source basis j).
#[derive(Clone)]
pub struct HopfMorphism {
    pub matrix: CycloMatrix,
}

impl HopfMorphism {
    pub fn apply(&self, a: &Element) -> Element {
        let sv: SparseVec = a
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        let out = self.matrix.apply(&sv);
        let mut dense = vec![Cyclo::zero(); self.matrix.rows];
        for (i, v) in out {
            dense[i] = v;
        }
        dense
    }

    pub fn compose(&self, inner: &HopfMorphism) -> HopfMorphism {
        HopfMorphism {
            matrix: self.matrix.matmul(&inner.matrix),
        }
    }
}

/// Checks that `m` is a Hopf algebra morphism from `src` to `tgt`:
/// multiplicative, unital, comultiplicative, counital on the basis.
pub fn verify_morphism(src: &HopfAlgebra, tgt: &HopfAlgebra, m: &HopfMorphism) -> HopfReport {
    let mut checks = Vec::new();
    let unital = m.apply(&src.unit_element()) == tgt.unit_element();
    checks.push(AxiomCheck {
        name: "unital".into(),
        ok: unital,
        detail: None,
    });
    let mut mult_fail = None;
    'outer: for i in 0..src.dim {
        for j in 0..src.dim {
            let mut lhs = vec![Cyclo::zero(); tgt.dim];
            for (k, c) in &src.mult[i][j] {
                let img = m.apply(&src.basis_element(*k));
                for (t, v) in img.iter().enumerate() {
                    lhs[t] += v * c;
                }
            }
            let rhs = tgt.product(
                &m.apply(&src.basis_element(i)),
                &m.apply(&src.basis_element(j)),
            );
            if lhs != rhs {
                mult_fail = Some(format!("({}, {})", i, j));
                break 'outer;
            }
        }
    }
    checks.push(AxiomCheck {
        name: "multiplicative".into(),
        ok: mult_fail.is_none(),
        detail: mult_fail,
    });
    let mut comult_fail = None;
    let mut counit_fail = None;
    for i in 0..src.dim {
        // (m (x) m) Delta_src(e_i)
        let mut lhs: std::collections::BTreeMap<(usize, usize), Cyclo> = Default::default();
        for (c, l, r) in &src.comult[i] {
            let iml = m.apply(&src.basis_element(*l));
            let imr = m.apply(&src.basis_element(*r));
            for (a, va) in iml.iter().enumerate() {
                if va.is_zero() {
                    continue;
                }
                for (b, vb) in imr.iter().enumerate() {
                    if vb.is_zero() {
                        continue;
                    }
                    let e = lhs.entry((a, b)).or_insert_with(Cyclo::zero);
                    *e += &(va * vb) * c;
                }
            }
        }
        let lhs: Vec<(Cyclo, usize, usize)> = lhs
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((l, r), c)| (c, l, r))
            .collect();
        let rhs = tgt.comult_of(&m.apply(&src.basis_element(i)));
        if lhs != rhs && comult_fail.is_none() {
            comult_fail = Some(format!("basis {}", i));
        }
        if tgt.counit_of(&m.apply(&src.basis_element(i))) != src.counit[i] && counit_fail.is_none()
        {
            counit_fail = Some(format!("basis {}", i));
        }
    }
    checks.push(AxiomCheck {
        name: "comultiplicative".into(),
        ok: comult_fail.is_none(),
        detail: comult_fail,
    });
    checks.push(AxiomCheck {
        name: "counital".into(),
        ok: counit_fail.is_none(),
        detail: counit_fail,
    });
    HopfReport { checks }
}

/// The four Hopf algebra automorphisms of the Kac-Paljutkin algebra; they
/// form a Klein four-group under composition.
pub fn automorphisms() -> [HopfMorphism; 4] {
    let h = build_h8();
    let half = Cyclo::from_ratio(1, 2);
    let build = |x_img: Element, y_img: Element, z_img: Element| -> HopfMorphism {
        // extend multiplicatively along each basis word 1, x, y, xy, z, ...
        let imgs: [&Element; 3] = [&x_img, &y_img, &z_img];
        let mut matrix = CycloMatrix::zero(8, 8);
        let words: [&[usize]; 8] = [
            &[],
            &[0],
            &[1],
            &[0, 1],
            &[2],
            &[0, 2],
            &[1, 2],
            &[0, 1, 2],
        ];
        for (col, word) in words.iter().enumerate() {
            let mut acc = h.unit_element();
            for &gi in word.iter() {
                acc = h.product(&acc, imgs[gi]);
            }
            for (row, v) in acc.into_iter().enumerate() {
                matrix.set(row, col, v);
            }
        }
        HopfMorphism { matrix }
    };
    let x = h.basis_element(h8::X);
    let y = h.basis_element(h8::Y);
    let z = h.basis_element(h8::Z);
    let t1 = build(x.clone(), y.clone(), z.clone());
    let t2 = build(x.clone(), y.clone(), h.basis_element(h8::XYZ));
    let t3 = build(
        y.clone(),
        x.clone(),
        h8_elem(&[
            (h8::Z, half.clone()),
            (h8::XZ, half.clone()),
            (h8::YZ, half.clone()),
            (h8::XYZ, -half.clone()),
        ]),
    );
    let t4 = build(
        y,
        x,
        h8_elem(&[
            (h8::Z, -half.clone()),
            (h8::XZ, half.clone()),
            (h8::YZ, half.clone()),
            (h8::XYZ, half),
        ]),
    );
    [t1, t2, t3, t4]
}

/// Invalid character parameter: b must be a 4th root of unity.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("character parameter must be one of 1, -1, i, -i")]
pub struct BadCharacterParameter;

/// The algebra map chi_b : H8 -> Q(zeta_8) attached to a 4th root of unity
/// b. On the fixed basis it takes the values
///   [1, b^2, b^2, 1, b, b^3, b^3, b],
/// i.e. chi_b(x) = chi_b(y) = b^2 and chi_b(z) = b, matching the action of
/// H8 on the one-dimensional module with z-eigenvalue b.
pub fn character(b: &Cyclo) -> Result<Vec<Cyclo>, BadCharacterParameter> {
    if b.pow(4) != Cyclo::one() {
        return Err(BadCharacterParameter);
    }
    let b2 = b.pow(2);
    let b3 = b.pow(3);
    Ok(vec![
        Cyclo::one(),
        b2.clone(),
        b2,
        Cyclo::one(),
        b.clone(),
        b3.clone(),
        b3,
        b.clone(),
    ])
}

// ---------------------------------------------------------------------------
// Structured-text serialization (used by the CLI --dump flag).
// ---------------------------------------------------------------------------

impl HopfAlgebra {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("hopf-algebra v1\n");
        out.push_str(&format!("dim {}\n", self.dim));
        for (i, l) in self.basis_labels.iter().enumerate() {
            out.push_str(&format!("label {} {}\n", i, l.replace(' ', "_")));
        }
        out.push_str(&format!("unit {}\n", self.unit));
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (k, c) in &self.mult[i][j] {
                    out.push_str(&format!("mult {} {} {} := {}\n", i, j, k, c.to_canonical_string()));
                }
            }
        }
        for (i, terms) in self.comult.iter().enumerate() {
            for (c, l, r) in terms {
                out.push_str(&format!("comult {} {} {} := {}\n", i, l, r, c.to_canonical_string()));
            }
        }
        for (i, c) in self.counit.iter().enumerate() {
            if !c.is_zero() {
                out.push_str(&format!("counit {} := {}\n", i, c.to_canonical_string()));
            }
        }
        for (&(i, j), c) in self.antipode.iter() {
            out.push_str(&format!("antipode {} {} := {}\n", i, j, c.to_canonical_string()));
        }
        if let Some(g) = &self.generators {
            out.push_str("generators");
            for gi in &g.generators {
                out.push_str(&format!(" {}", gi));
            }
            out.push('\n');
            for (i, w) in g.words.iter().enumerate() {
                out.push_str(&format!("word {}", i));
                for gi in w {
                    out.push_str(&format!(" {}", gi));
                }
                out.push('\n');
            }
        }
        out.push_str("end\n");
        out
    }

    pub fn from_text(text: &str) -> Result<HopfAlgebra, String> {
        let mut dim = None;
        let mut labels: Vec<(usize, String)> = Vec::new();
        let mut unit = 0usize;
        let mut mult_entries = Vec::new();
        let mut comult_entries = Vec::new();
        let mut counit_entries = Vec::new();
        let mut antipode_entries = Vec::new();
        let mut generators: Option<Vec<usize>> = None;
        let mut words: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut lines = text.lines();
        let header = lines.next().ok_or("empty document")?;
        if header.trim() != "hopf-algebra v1" {
            return Err(format!("unknown header: {}", header));
        }
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if line == "end" {
                break;
            }
            let (head, rest) = line.split_once(' ').ok_or_else(|| format!("bad line: {}", line))?;
            match head {
                "dim" => dim = Some(rest.trim().parse::<usize>().map_err(|e| e.to_string())?),
                "label" => {
                    let (i, l) = rest.split_once(' ').ok_or("bad label line")?;
                    labels.push((i.parse().map_err(|_| "bad label index")?, l.to_string()));
                }
                "unit" => unit = rest.trim().parse().map_err(|_| "bad unit index")?,
                "mult" | "comult" | "antipode" => {
                    let (idx_part, coeff) = rest.split_once(":=").ok_or("missing :=")?;
                    let idx: Vec<usize> = idx_part
                        .split_whitespace()
                        .map(|t| t.parse::<usize>().map_err(|_| "bad index".to_string()))
                        .collect::<Result<_, _>>()?;
                    let c = Cyclo::parse_canonical(coeff.trim())?;
                    match head {
                        "mult" => mult_entries.push((idx[0], idx[1], idx[2], c)),
                        "comult" => comult_entries.push((idx[0], idx[1], idx[2], c)),
                        _ => antipode_entries.push((idx[0], idx[1], c)),
                    }
                }
                "counit" => {
                    let (idx_part, coeff) = rest.split_once(":=").ok_or("missing :=")?;
                    let i: usize = idx_part.trim().parse().map_err(|_| "bad index")?;
                    counit_entries.push((i, Cyclo::parse_canonical(coeff.trim())?));
                }
                "generators" => {
                    generators = Some(
                        rest.split_whitespace()
                            .map(|t| t.parse::<usize>().map_err(|_| "bad generator".to_string()))
                            .collect::<Result<_, _>>()?,
                    );
                }
                "word" => {
                    let mut it = rest.split_whitespace();
                    let i: usize = it.next().ok_or("bad word line")?.parse().map_err(|_| "bad word index")?;
                    let w: Vec<usize> = it
                        .map(|t| t.parse::<usize>().map_err(|_| "bad word entry".to_string()))
                        .collect::<Result<_, _>>()?;
                    words.push((i, w));
                }
                other => return Err(format!("unknown directive: {}", other)),
            }
        }
        let dim = dim.ok_or("missing dim")?;
        let mut basis_labels = vec![String::new(); dim];
        for (i, l) in labels {
            basis_labels[i] = l;
        }
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for (i, j, k, c) in mult_entries {
            mult[i][j].push((k, c));
        }
        for row in mult.iter_mut() {
            for cell in row.iter_mut() {
                cell.sort_by_key(|(k, _)| *k);
            }
        }
        let mut comult = vec![Vec::new(); dim];
        for (i, l, r, c) in comult_entries {
            comult[i].push((c, l, r));
        }
        for terms in comult.iter_mut() {
            terms.sort_by_key(|(_, l, r)| (*l, *r));
        }
        let mut counit = vec![Cyclo::zero(); dim];
        for (i, c) in counit_entries {
            counit[i] = c;
        }
        let mut antipode = CycloMatrix::zero(dim, dim);
        for (i, j, c) in antipode_entries {
            antipode.set(i, j, c);
        }
        let generators = generators.map(|g| {
            let mut ws = vec![Vec::new(); dim];
            for (i, w) in words {
                ws[i] = w;
            }
            GeneratorSpec {
                generators: g,
                words: ws,
            }
        });
        Ok(HopfAlgebra {
            dim,
            basis_labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            generators,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_z_x_is_yz() {
        let h = build_h8();
        let p = h.product(&h.basis_element(h8::Z), &h.basis_element(h8::X));
        assert_eq!(p, h.basis_element(h8::YZ));
    }

    #[test]
    fn z_squared_expands_in_the_group_algebra() {
        let h = build_h8();
        let p = h.product(&h.basis_element(h8::Z), &h.basis_element(h8::Z));
        let half = Cyclo::from_ratio(1, 2);
        let expect = h8_elem(&[
            (h8::ONE, half.clone()),
            (h8::X, half.clone()),
            (h8::Y, half.clone()),
            (h8::XY, -half),
        ]);
        assert_eq!(p, expect);
    }

    #[test]
    fn comultiplication_of_z() {
        let h = build_h8();
        let half = Cyclo::from_ratio(1, 2);
        // Delta(z) = [(1+y)z (x) z + (1-y)z (x) xz]/2
        let mut expect = vec![
            (half.clone(), h8::Z, h8::Z),
            (half.clone(), h8::YZ, h8::Z),
            (half.clone(), h8::Z, h8::XZ),
            (-half, h8::YZ, h8::XZ),
        ];
        expect.sort_by_key(|(_, l, r)| (*l, *r));
        let mut got = h.comult[h8::Z].clone();
        got.sort_by_key(|(_, l, r)| (*l, *r));
        assert_eq!(got, expect);
    }

    #[test]
    fn antipode_is_an_involution() {
        let h = build_h8();
        for i in 0..8 {
            let twice = h.antipode_of(&h.antipode_of(&h.basis_element(i)));
            assert_eq!(twice, h.basis_element(i));
        }
        assert_eq!(h.antipode_of(&h.basis_element(h8::X)), h.basis_element(h8::X));
        assert_eq!(h.antipode_of(&h.basis_element(h8::Z)), h.basis_element(h8::Z));
        assert_eq!(h.antipode_of(&h.basis_element(h8::XZ)), h.basis_element(h8::YZ));
    }

    #[test]
    fn kac_paljutkin_passes_all_axioms() {
        let report = verify_hopf(&build_h8());
        assert!(report.all_ok(), "failures: {:?}", report.failing());
    }

    #[test]
    fn corrupting_the_coproduct_is_detected() {
        let mut h = build_h8();
        // replace Delta(z) by the group-like z (x) z
        h.comult[h8::Z] = vec![(Cyclo::one(), h8::Z, h8::Z)];
        let report = verify_hopf(&h);
        assert!(!report.all_ok());
        let failed: Vec<&str> = report.failing().iter().map(|c| c.name.as_str()).collect();
        assert!(
            failed.contains(&"comultiplication is an algebra map"),
            "expected the algebra-map axiom to fail, failing: {:?}",
            failed
        );
    }

    #[test]
    fn group_algebra_of_c2_passes() {
        // 2-dimensional group algebra: basis {1, x}, x^2 = 1, Delta(x) = x (x) x.
        let mut mult = vec![vec![Vec::new(); 2]; 2];
        mult[0][0] = vec![(0, Cyclo::one())];
        mult[0][1] = vec![(1, Cyclo::one())];
        mult[1][0] = vec![(1, Cyclo::one())];
        mult[1][1] = vec![(0, Cyclo::one())];
        let h = HopfAlgebra {
            dim: 2,
            basis_labels: vec!["1".into(), "x".into()],
            mult,
            unit: 0,
            comult: vec![
                vec![(Cyclo::one(), 0, 0)],
                vec![(Cyclo::one(), 1, 1)],
            ],
            counit: vec![Cyclo::one(), Cyclo::one()],
            antipode: CycloMatrix::identity(2),
            generators: None,
        };
        assert!(verify_hopf(&h).all_ok());
    }

    #[test]
    fn central_idempotents_are_orthogonal_and_complete() {
        let h = build_h8();
        let id = idempotents();
        for j in 0..5 {
            for k in 0..5 {
                let p = h.product(&id.e[j], &id.e[k]);
                if j == k {
                    assert_eq!(p, id.e[j], "e{} not idempotent", j + 1);
                } else {
                    assert!(p.iter().all(|c| c.is_zero()), "e{} e{} != 0", j + 1, k + 1);
                }
            }
        }
        let mut sum = vec![Cyclo::zero(); 8];
        for e in &id.e {
            for (k, v) in e.iter().enumerate() {
                sum[k] += v.clone();
            }
        }
        assert_eq!(sum, h.unit_element());
        // e5 = e5' + e5'', both idempotent
        let mut e5sum = vec![Cyclo::zero(); 8];
        for (k, v) in id.e5_prime.iter().enumerate() {
            e5sum[k] = v.clone() + id.e5_double_prime[k].clone();
        }
        assert_eq!(e5sum, id.e[4]);
        assert_eq!(h.product(&id.e5_prime, &id.e5_prime), id.e5_prime);
        assert_eq!(
            h.product(&id.e5_double_prime, &id.e5_double_prime),
            id.e5_double_prime
        );
    }

    #[test]
    fn f_idempotents_decompose_the_group_algebra() {
        let h = build_h8();
        let mut sum = vec![Cyclo::zero(); 8];
        for j in 0..2 {
            for k in 0..2 {
                let f = f_idem(j, k);
                assert_eq!(h.product(&f, &f), f, "f{}{} not idempotent", j, k);
                for (t, v) in f.iter().enumerate() {
                    sum[t] += v.clone();
                }
            }
        }
        assert_eq!(sum, h.unit_element());
    }

    #[test]
    fn automorphism_images_match_the_table() {
        let h = build_h8();
        let taus = automorphisms();
        // tau3: x -> y, y -> x
        assert_eq!(taus[2].apply(&h.basis_element(h8::X)), h.basis_element(h8::Y));
        assert_eq!(taus[2].apply(&h.basis_element(h8::Y)), h.basis_element(h8::X));
        // tau2: z -> xyz
        assert_eq!(taus[1].apply(&h.basis_element(h8::Z)), h.basis_element(h8::XYZ));
    }

    #[test]
    fn automorphisms_pass_morphism_checks_and_form_klein_four() {
        let h = build_h8();
        let taus = automorphisms();
        for (i, t) in taus.iter().enumerate() {
            let report = verify_morphism(&h, &h, t);
            assert!(report.all_ok(), "tau{} fails: {:?}", i + 1, report.failing());
        }
        // composition table of the Klein four-group: indices under composition
        let expect = [
            [0, 1, 2, 3],
            [1, 0, 3, 2],
            [2, 3, 0, 1],
            [3, 2, 1, 0],
        ];
        for a in 0..4 {
            for b in 0..4 {
                let comp = taus[a].compose(&taus[b]);
                let found = (0..4).find(|&k| taus[k].matrix == comp.matrix);
                assert_eq!(found, Some(expect[a][b]), "tau{} . tau{}", a + 1, b + 1);
            }
        }
        assert_eq!(taus[0].matrix, CycloMatrix::identity(8));
    }

    #[test]
    fn h8_is_neither_commutative_nor_cocommutative() {
        let h = build_h8();
        let zx = h.product(&h.basis_element(h8::Z), &h.basis_element(h8::X));
        let xz = h.product(&h.basis_element(h8::X), &h.basis_element(h8::Z));
        assert_ne!(zx, xz);
        let mut flipped: Vec<(Cyclo, usize, usize)> = h.comult[h8::Z]
            .iter()
            .map(|(c, l, r)| (c.clone(), *r, *l))
            .collect();
        flipped.sort_by_key(|(_, l, r)| (*l, *r));
        let mut direct = h.comult[h8::Z].clone();
        direct.sort_by_key(|(_, l, r)| (*l, *r));
        assert_ne!(direct, flipped);
    }

    #[test]
    fn characters_are_algebra_maps_for_all_four_parameters() {
        let h = build_h8();
        for b in [
            Cyclo::one(),
            Cyclo::from_int(-1),
            Cyclo::i(),
            -Cyclo::i(),
        ] {
            let chi = character(&b).unwrap();
            assert_eq!(chi[h8::ONE], Cyclo::one());
            // on generators: chi(x) = chi(y) = b^2, chi(z) = b
            assert_eq!(chi[h8::X], b.pow(2));
            assert_eq!(chi[h8::Y], b.pow(2));
            assert_eq!(chi[h8::Z], b);
            for i in 0..8 {
                for j in 0..8 {
                    let mut lhs = Cyclo::zero();
                    for (k, c) in &h.mult[i][j] {
                        lhs += c * &chi[*k];
                    }
                    assert_eq!(lhs, &chi[i] * &chi[j], "chi not multiplicative at ({}, {})", i, j);
                }
            }
        }
        assert!(character(&Cyclo::from_int(2)).is_err());
    }

    #[test]
    fn serialization_roundtrips() {
        let h = build_h8();
        let text = h.to_text();
        let back = HopfAlgebra::from_text(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert!(verify_hopf(&back).all_ok());
    }
}
