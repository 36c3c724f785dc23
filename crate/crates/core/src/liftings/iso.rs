//! Hopf algebra isomorphism checking through explicit generator maps: the
//! induced linear map must be bijective, multiplicative and
//! comultiplicative on the basis.

use crate::cyclo::{Cyclo, CycloMatrix, SparseVec};
use crate::hopf::HopfAlgebra;
use std::collections::BTreeMap;

/// Result of an isomorphism check.
#[derive(Clone, Debug)]
pub struct IsoReport {
    pub bijective: bool,
    pub multiplicative: bool,
    pub comultiplicative: bool,
    pub unital: bool,
    pub counital: bool,
}

impl IsoReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.multiplicative && self.comultiplicative && self.unital && self.counital
    }
}

fn prod(h: &HopfAlgebra, a: &SparseVec, b: &SparseVec) -> SparseVec {
    let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
    for (i, ci) in a {
        for (j, cj) in b {
            let f = ci * cj;
            for (t, c) in h.basis_product(*i, *j) {
                let e = acc.entry(*t).or_insert_with(Cyclo::zero);
                *e += c * &f;
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Checks whether the generator images define a Hopf algebra isomorphism
/// from `a` to `b`. `a` must carry generator metadata; `images[k]` is the
/// image in `b` of the k-th generator of `a` (same order as the metadata).
/// The induced map sends each basis element, written as its generator word,
/// to the corresponding product of images.
pub fn iso_check(a: &HopfAlgebra, b: &HopfAlgebra, images: &[SparseVec]) -> IsoReport {
    let gens = a
        .generators
        .as_ref()
        .expect("iso_check needs generator metadata on the source");
    assert_eq!(gens.generators.len(), images.len(), "one image per generator");
    if a.dim != b.dim {
        return IsoReport {
            bijective: false,
            multiplicative: false,
            comultiplicative: false,
            unital: false,
            counital: false,
        };
    }
    let image_of_gen: BTreeMap<usize, &SparseVec> = gens
        .generators
        .iter()
        .copied()
        .zip(images.iter())
        .collect();
    // map each basis element through its generator word
    let unit_b: SparseVec = vec![(b.unit, Cyclo::one())];
    let mut phi: Vec<SparseVec> = Vec::with_capacity(a.dim);
    for w in &gens.words {
        let mut acc = unit_b.clone();
        for g in w {
            acc = prod(b, &acc, image_of_gen[g]);
        }
        phi.push(acc);
    }
    // bijectivity
    let mut matrix = CycloMatrix::zero(b.dim, a.dim);
    for (j, v) in phi.iter().enumerate() {
        for (i, c) in v {
            matrix.set(*i, j, c.clone());
        }
    }
    let bijective = matrix.rank() == a.dim;
    // multiplicativity on basis x generator (with generator-word validity
    // this extends to all pairs by induction)
    let mut multiplicative = true;
    'mult: for i in 0..a.dim {
        for &g in &gens.generators {
            let mut lhs: BTreeMap<usize, Cyclo> = BTreeMap::new();
            for (k, c) in a.basis_product(i, g) {
                for (t, v) in &phi[*k] {
                    let e = lhs.entry(*t).or_insert_with(Cyclo::zero);
                    *e += v * c;
                }
            }
            let lhs: SparseVec = lhs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            let rhs = prod(b, &phi[i], &phi[g]);
            if lhs != rhs {
                multiplicative = false;
                break 'mult;
            }
        }
    }
    // comultiplicativity on the basis
    let mut comultiplicative = true;
    'comult: for i in 0..a.dim {
        let mut lhs: BTreeMap<(usize, usize), Cyclo> = BTreeMap::new();
        for (c, l, r) in &a.comult[i] {
            for (tl, cl) in &phi[*l] {
                for (tr, cr) in &phi[*r] {
                    let v = &(cl * cr) * c;
                    if v.is_zero() {
                        continue;
                    }
                    let e = lhs.entry((*tl, *tr)).or_insert_with(Cyclo::zero);
                    *e += v;
                }
            }
        }
        lhs.retain(|_, c| !c.is_zero());
        let mut rhs: BTreeMap<(usize, usize), Cyclo> = BTreeMap::new();
        for (t, c) in &phi[i] {
            for (c2, l, r) in &b.comult[*t] {
                let e = rhs.entry((*l, *r)).or_insert_with(Cyclo::zero);
                *e += c2 * c;
            }
        }
        rhs.retain(|_, c| !c.is_zero());
        if lhs != rhs {
            comultiplicative = false;
            break 'comult;
        }
    }
    let unital = phi[a.unit] == unit_b;
    let mut counital = true;
    for i in 0..a.dim {
        let mut eps = Cyclo::zero();
        for (t, c) in &phi[i] {
            eps += &b.counit[*t] * c;
        }
        if eps != a.counit[i] {
            counital = false;
            break;
        }
    }
    IsoReport {
        bijective,
        multiplicative,
        comultiplicative,
        unital,
        counital,
    }
}
