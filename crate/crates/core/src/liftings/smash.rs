//! Truncated smash products T(M) # H8 up to a word-degree bound: enough
//! structure to multiply and take coproducts of low-degree elements, used
//! to check the coproduct identities behind the lifting relations.
//!
//! On the free part nothing is divided out, so every identity verified here
//! is an identity of the genuine smash product.

use crate::cyclo::Cyclo;
use crate::hopf::HopfAlgebra;
use crate::hopf::h8 as hx;
use crate::yd::{h8, YdModule};
use std::collections::BTreeMap;

/// Basis label: a word in module basis letters and an algebra basis index.
type Key = (Vec<u8>, usize);

/// Element of the truncated smash product.
#[derive(Clone, Debug, PartialEq)]
pub struct SmashElem {
    pub terms: BTreeMap<Key, Cyclo>,
}

impl SmashElem {
    pub fn zero() -> Self {
        SmashElem {
            terms: BTreeMap::new(),
        }
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_term(&mut self, k: Key, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(Cyclo::zero);
        *e += c;
        self.terms.retain(|_, v| !v.is_zero());
    }
    pub fn add(&self, rhs: &SmashElem) -> SmashElem {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            let e = out.terms.entry(k.clone()).or_insert_with(Cyclo::zero);
            *e += c.clone();
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
    pub fn sub(&self, rhs: &SmashElem) -> SmashElem {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            let e = out.terms.entry(k.clone()).or_insert_with(Cyclo::zero);
            *e -= c.clone();
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
    pub fn scale(&self, s: &Cyclo) -> SmashElem {
        if s.is_zero() {
            return SmashElem::zero();
        }
        SmashElem {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }
    /// Maximal word degree among the terms.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|(w, _)| w.len()).max().unwrap_or(0)
    }
}

/// Element of the tensor square of the truncated smash product.
#[derive(Clone, Debug, PartialEq)]
pub struct SmashTensor {
    pub terms: BTreeMap<(Key, Key), Cyclo>,
}

impl SmashTensor {
    pub fn zero() -> Self {
        SmashTensor {
            terms: BTreeMap::new(),
        }
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn add(&self, rhs: &SmashTensor) -> SmashTensor {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            let e = out.terms.entry(k.clone()).or_insert_with(Cyclo::zero);
            *e += c.clone();
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
    pub fn sub(&self, rhs: &SmashTensor) -> SmashTensor {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            let e = out.terms.entry(k.clone()).or_insert_with(Cyclo::zero);
            *e -= c.clone();
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
    pub fn scale(&self, s: &Cyclo) -> SmashTensor {
        if s.is_zero() {
            return SmashTensor::zero();
        }
        SmashTensor {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }
    /// a (x) b as a tensor element.
    pub fn of(a: &SmashElem, b: &SmashElem) -> SmashTensor {
        let mut out = SmashTensor::zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                let v = ca * cb;
                if v.is_zero() {
                    continue;
                }
                let e = out
                    .terms
                    .entry((ka.clone(), kb.clone()))
                    .or_insert_with(Cyclo::zero);
                *e += v;
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }
}

/// Degree bound exceeded while multiplying in the truncation.
#[derive(Debug, Clone, thiserror::Error)]
#[error("smash truncation degree overflow: needed {needed}, bound {bound}")]
pub struct DegreeOverflow {
    pub needed: usize,
    pub bound: usize,
}

/// The truncated smash product of the free braided algebra on a
/// Yetter-Drinfeld module with the base Hopf algebra.
pub struct SmashTruncation {
    pub module: YdModule,
    pub bound: usize,
    h: &'static HopfAlgebra,
}

impl SmashTruncation {
    pub fn new(module: YdModule, bound: usize) -> Self {
        assert!(bound >= 2, "degree bound must be at least 2");
        SmashTruncation {
            module,
            bound,
            h: h8(),
        }
    }

    /// Number of basis elements of word degree at most d.
    pub fn dim_up_to(&self, d: usize) -> usize {
        let m = self.module.dim;
        let words: usize = (0..=d).map(|k| m.pow(k as u32)).sum();
        words * 8
    }

    /// The element letter # 1.
    pub fn letter(&self, idx: usize) -> SmashElem {
        assert!(idx < self.module.dim);
        let mut e = SmashElem::zero();
        e.add_term((vec![idx as u8], 0), Cyclo::one());
        e
    }

    /// The element 1 # h for an algebra element.
    pub fn of_h8(&self, elem: &[Cyclo]) -> SmashElem {
        let mut e = SmashElem::zero();
        for (i, c) in elem.iter().enumerate() {
            e.add_term((Vec::new(), i), c.clone());
        }
        e
    }

    pub fn one(&self) -> SmashElem {
        self.of_h8(&self.h.basis_element(hx::ONE))
    }

    /// Action of an algebra basis element on a word, diagonally through the
    /// iterated coproduct.
    fn act_word(&self, hi: usize, w: &[u8]) -> Vec<(Cyclo, Vec<u8>)> {
        if w.is_empty() {
            return vec![(self.h.counit[hi].clone(), Vec::new())];
        }
        if w.len() == 1 {
            return self.module.actions[hi]
                .col(w[0] as usize)
                .into_iter()
                .map(|(t, c)| (c, vec![t as u8]))
                .collect();
        }
        // split off the last letter through Delta(h)
        let mut out: BTreeMap<Vec<u8>, Cyclo> = BTreeMap::new();
        let (head, tail) = w.split_at(w.len() - 1);
        for (c, l, r) in &self.h.comult[hi] {
            for (c1, w1) in self.act_word(*l, head) {
                for (t, c2) in self.module.actions[*r].col(tail[0] as usize) {
                    let mut nw = w1.clone();
                    nw.push(t as u8);
                    let v = &(c1.clone() * c2) * c;
                    if v.is_zero() {
                        continue;
                    }
                    let e = out.entry(nw).or_insert_with(Cyclo::zero);
                    *e += v;
                }
            }
        }
        out.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (c, w))
            .collect()
    }

    /// Smash multiplication
    /// (w # h)(w' # h') = sum w . (h_(1) . w') # h_(2) h'.
    pub fn mul(&self, a: &SmashElem, b: &SmashElem) -> Result<SmashElem, DegreeOverflow> {
        let mut out = SmashElem::zero();
        for ((wa, ha), ca) in &a.terms {
            for ((wb, hb), cb) in &b.terms {
                if wa.len() + wb.len() > self.bound {
                    return Err(DegreeOverflow {
                        needed: wa.len() + wb.len(),
                        bound: self.bound,
                    });
                }
                let f = ca * cb;
                for (c, h1, h2) in &self.h.comult[*ha] {
                    for (cw, w2) in self.act_word(*h1, wb) {
                        // algebra part: e_h2 * e_hb
                        for (ht, hc) in self.h.basis_product(*h2, *hb) {
                            let mut nw = wa.clone();
                            nw.extend_from_slice(&w2);
                            let v = &(&f * &(c * &cw)) * hc;
                            if v.is_zero() {
                                continue;
                            }
                            let e = out
                                .terms
                                .entry((nw.clone(), *ht))
                                .or_insert_with(Cyclo::zero);
                            *e += v;
                        }
                    }
                }
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Coproduct of a generator-level term, extended multiplicatively to
    /// arbitrary elements:
    ///   Delta(letter # 1) = letter (x) 1 + (1 # coaction legs) (x) letter,
    ///   Delta(1 # h) from the base algebra.
    pub fn delta(&self, a: &SmashElem) -> Result<SmashTensor, DegreeOverflow> {
        let mut out = SmashTensor::zero();
        for ((w, h), c) in &a.terms {
            let mut acc = self.delta_unit();
            for &letter in w {
                acc = self.tensor_mul(&acc, &self.delta_letter(letter as usize))?;
            }
            acc = self.tensor_mul(&acc, &self.delta_h8_basis(*h))?;
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }

    fn delta_unit(&self) -> SmashTensor {
        let one = self.one();
        SmashTensor::of(&one, &one)
    }

    fn delta_letter(&self, idx: usize) -> SmashTensor {
        let mut t = SmashTensor::of(&self.letter(idx), &self.one());
        for (c, a, m) in &self.module.coaction[idx] {
            let left = self.of_h8(&self.h.basis_element(*a));
            let right = self.letter(*m);
            t = t.add(&SmashTensor::of(&left, &right).scale(c));
        }
        t
    }

    fn delta_h8_basis(&self, h: usize) -> SmashTensor {
        let mut t = SmashTensor::zero();
        for (c, l, r) in &self.h.comult[h] {
            let left = self.of_h8(&self.h.basis_element(*l));
            let right = self.of_h8(&self.h.basis_element(*r));
            t = t.add(&SmashTensor::of(&left, &right).scale(c));
        }
        t
    }

    /// Componentwise multiplication in the tensor square.
    pub fn tensor_mul(
        &self,
        a: &SmashTensor,
        b: &SmashTensor,
    ) -> Result<SmashTensor, DegreeOverflow> {
        let mut out = SmashTensor::zero();
        for ((al, ar), ca) in &a.terms {
            for ((bl, br), cb) in &b.terms {
                let f = ca * cb;
                if f.is_zero() {
                    continue;
                }
                let la = SmashElem {
                    terms: [(al.clone(), Cyclo::one())].into_iter().collect(),
                };
                let lb = SmashElem {
                    terms: [(bl.clone(), Cyclo::one())].into_iter().collect(),
                };
                let ra = SmashElem {
                    terms: [(ar.clone(), Cyclo::one())].into_iter().collect(),
                };
                let rb = SmashElem {
                    terms: [(br.clone(), Cyclo::one())].into_iter().collect(),
                };
                let left = self.mul(&la, &lb)?;
                let right = self.mul(&ra, &rb)?;
                out = out.add(&SmashTensor::of(&left, &right).scale(&f));
            }
        }
        Ok(out)
    }

    /// The canonical projection to the base algebra: pi(w # h) is zero for
    /// nonempty words and h on empty ones.
    pub fn pi(&self, a: &SmashElem) -> Vec<Cyclo> {
        let mut out = vec![Cyclo::zero(); 8];
        for ((w, h), c) in &a.terms {
            if w.is_empty() {
                out[*h] += c.clone();
            }
        }
        out
    }

    /// The canonical inclusion of the base algebra.
    pub fn iota(&self, elem: &[Cyclo]) -> SmashElem {
        self.of_h8(elem)
    }

    /// The grading component of word degree d.
    pub fn component(&self, a: &SmashElem, d: usize) -> SmashElem {
        SmashElem {
            terms: a
                .terms
                .iter()
                .filter(|((w, _), _)| w.len() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Checks that an element's coproduct equals an expected tensor
    /// expression exactly.
    pub fn check_identity(
        &self,
        elem: &SmashElem,
        expected: &SmashTensor,
    ) -> Result<bool, DegreeOverflow> {
        Ok(self.delta(elem)?.sub(expected).is_zero())
    }
}
