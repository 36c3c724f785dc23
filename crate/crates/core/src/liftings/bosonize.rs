//! The Radford biproduct B(V) # H8 of a finite-dimensional Nichols algebra
//! with the base Hopf algebra, as explicit structure constants.
//!
//! The Nichols algebra is realized concretely: a monomial basis is selected
//! per degree whose symmetrizer images are independent, and normal forms
//! are linear solves against those images. When the input splits into
//! summands with pairwise trivial cross-braiding, candidate monomials come
//! from concatenating factor bases (the multiplication map is a graded
//! isomorphism); independence is still certified by elimination, so a wrong
//! split surfaces as a hard error rather than a wrong answer.

use super::rewrite::Word;
use crate::cyclo::{Cyclo, CycloMatrix, Solver, SparseVec};
use crate::hopf::{GeneratorSpec, HopfAlgebra};
use crate::nichols::{apply_symmetrizer, factorize, BraidedSpace};
use crate::hopf::h8 as hx;
use crate::yd::{direct_sum, YdModule};
use std::collections::{BTreeMap, HashMap};

/// Bosonization failure.
#[derive(Debug, thiserror::Error)]
pub enum BosonizeError {
    #[error("Nichols algebra not finite within degree {0}; bosonization needs a finite total")]
    NotFinite(usize),
    #[error("candidate monomials are dependent at degree {degree}: got rank {got}, expected {expected}")]
    DependentCandidates { degree: usize, got: usize, expected: usize },
    #[error("normal form solve failed at degree {0}; candidate basis does not span")]
    SolveFailed(usize),
    #[error("degree cap {0} exceeded while building the Nichols basis")]
    Cap(usize),
}

/// A concrete finite-dimensional Nichols algebra: per-degree monomial bases
/// with normal-form solvers and letter-multiplication matrices.
pub struct NicholsAlgebra {
    pub module: YdModule,
    /// kept monomials per degree (words over the module basis)
    pub kept: Vec<Vec<Word>>,
    /// solver per degree holding the symmetrizer images of the kept words
    solvers: Vec<Solver>,
    braided: BraidedSpace,
}

impl NicholsAlgebra {
    pub fn dims(&self) -> Vec<u64> {
        self.kept.iter().map(|k| k.len() as u64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.kept.iter().map(|k| k.len()).sum()
    }

    /// Global index of the kept word `w` at degree `deg`.
    fn offset(&self, deg: usize) -> usize {
        self.kept[..deg].iter().map(|k| k.len()).sum()
    }

    /// Normal form of a tensor-space vector of homogeneous degree `deg`,
    /// expressed over the kept monomials of that degree.
    pub fn normal_form(&self, deg: usize, v: &SparseVec) -> Result<SparseVec, BosonizeError> {
        if v.is_empty() {
            return Ok(Vec::new());
        }
        let img = apply_symmetrizer(&self.braided, deg, v);
        if img.is_empty() {
            return Ok(Vec::new());
        }
        let combo = self.solvers[deg]
            .solve(&img)
            .ok_or(BosonizeError::SolveFailed(deg))?;
        Ok(combo
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect::<BTreeMap<_, _>>()
            .into_iter()
            .collect())
    }

    /// Builds the Nichols algebra of a direct sum of modules. Factor bases
    /// are computed directly (streaming ranks over all words) for blocks
    /// whose cross-braidings are nontrivial; blocks multiply together by
    /// concatenation.
    pub fn build(parts: &[YdModule], cap: usize) -> Result<NicholsAlgebra, BosonizeError> {
        assert!(!parts.is_empty());
        // group parts into blocks linked by nontrivial cross-braiding
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut assigned = vec![false; parts.len()];
        for i in 0..parts.len() {
            if assigned[i] {
                continue;
            }
            let mut block = vec![i];
            assigned[i] = true;
            let mut changed = true;
            while changed {
                changed = false;
                for j in 0..parts.len() {
                    if assigned[j] {
                        continue;
                    }
                    if block.iter().any(|&k| !factorize(&parts[k], &parts[j])) {
                        block.push(j);
                        assigned[j] = true;
                        changed = true;
                    }
                }
            }
            blocks.push(block);
        }
        let module = direct_sum(parts).expect("nonempty");
        let braided = BraidedSpace::from_module(&module);
        // per-block letter offsets in the sum
        let offsets: Vec<usize> = {
            let mut acc = 0;
            parts
                .iter()
                .map(|p| {
                    let o = acc;
                    acc += p.dim;
                    o
                })
                .collect()
        };
        // basis words of each block, translated to sum letters
        let mut block_bases: Vec<Vec<Vec<Word>>> = Vec::new(); // block -> degree -> words
        for block in &blocks {
            let members: Vec<YdModule> = block.iter().map(|&i| parts[i].clone()).collect();
            let bmod = direct_sum(&members).expect("nonempty block");
            let bwords = direct_basis_words(&bmod, cap)?;
            // translate letters: block-local letter -> sum letter
            let mut letter_map = Vec::new();
            for &i in block {
                for l in 0..parts[i].dim {
                    letter_map.push(offsets[i] + l);
                }
            }
            let translated: Vec<Vec<Word>> = bwords
                .into_iter()
                .map(|per_deg| {
                    per_deg
                        .into_iter()
                        .map(|w| w.into_iter().map(|l| letter_map[l as usize] as u8).collect())
                        .collect()
                })
                .collect();
            block_bases.push(translated);
        }
        // kept words of the sum: concatenations across blocks, degree by degree
        let top: usize = block_bases.iter().map(|b| b.len() - 1).sum();
        let mut kept: Vec<Vec<Word>> = vec![Vec::new(); top + 1];
        // cartesian product over blocks of (degree, word)
        fn assemble(
            blocks: &[Vec<Vec<Word>>],
            idx: usize,
            deg_so_far: usize,
            word_so_far: &Word,
            kept: &mut Vec<Vec<Word>>,
        ) {
            if idx == blocks.len() {
                kept[deg_so_far].push(word_so_far.clone());
                return;
            }
            for (d, words) in blocks[idx].iter().enumerate() {
                for w in words {
                    let mut nw = word_so_far.clone();
                    nw.extend_from_slice(w);
                    assemble(blocks, idx + 1, deg_so_far + d, &nw, kept);
                }
            }
        }
        assemble(&block_bases, 0, 0, &Word::new(), &mut kept);
        for per_deg in kept.iter_mut() {
            per_deg.sort();
        }
        // certify independence degree by degree
        let d = module.dim;
        let mut solvers = Vec::with_capacity(kept.len());
        for (deg, words) in kept.iter().enumerate() {
            let mut solver = Solver::new();
            for (tag, w) in words.iter().enumerate() {
                let code = word_code(w, d);
                let img = apply_symmetrizer(&braided, deg, &vec![(code, Cyclo::one())]);
                if !solver.insert(img, tag) {
                    return Err(BosonizeError::DependentCandidates {
                        degree: deg,
                        got: solver.rank(),
                        expected: words.len(),
                    });
                }
            }
            solvers.push(solver);
        }
        Ok(NicholsAlgebra {
            module,
            kept,
            solvers,
            braided,
        })
    }
}

fn word_code(w: &Word, d: usize) -> usize {
    w.iter().fold(0usize, |acc, &l| acc * d + l as usize)
}

/// Per-degree basis words of a module by direct streaming ranks over all
/// words, stopping after a verified zero degree.
fn direct_basis_words(m: &YdModule, cap: usize) -> Result<Vec<Vec<Word>>, BosonizeError> {
    let braided = BraidedSpace::from_module(m);
    let d = m.dim;
    let mut out: Vec<Vec<Word>> = vec![vec![Word::new()]];
    let mut deg = 1usize;
    loop {
        let size = d.checked_pow(deg as u32).unwrap_or(usize::MAX);
        if size > cap {
            return Err(BosonizeError::NotFinite(deg - 1));
        }
        let mut solver = Solver::new();
        let mut words = Vec::new();
        for code in 0..size {
            let img = apply_symmetrizer(&braided, deg, &vec![(code, Cyclo::one())]);
            if solver.insert(img, words.len()) {
                let mut w = Vec::with_capacity(deg);
                let mut c = code;
                for _ in 0..deg {
                    w.push((c % d) as u8);
                    c /= d;
                }
                w.reverse();
                words.push(w);
            }
        }
        if words.is_empty() {
            // verify the zero propagates one degree further
            let size2 = d.checked_pow(deg as u32 + 1).unwrap_or(usize::MAX);
            if size2 <= cap {
                for code in 0..size2 {
                    let img =
                        apply_symmetrizer(&braided, deg + 1, &vec![(code, Cyclo::one())]);
                    assert!(img.is_empty(), "zero-tail invariant violated");
                }
            }
            return Ok(out);
        }
        out.push(words);
        deg += 1;
        if deg > 24 {
            return Err(BosonizeError::Cap(24));
        }
    }
}

/// Builds the Radford biproduct B(V) # H8 as explicit structure constants
/// with generator metadata. `parts` are the direct summands of the module
/// (a single entry for a simple module).
pub fn bosonize(parts: &[YdModule], cap: usize) -> Result<HopfAlgebra, BosonizeError> {
    let nich = NicholsAlgebra::build(parts, cap)?;
    let n_total = nich.total_dim();
    let dim = n_total * 8;
    let h = crate::yd::h8();
    let d = nich.module.dim;

    // flat indexing: (nichols global index, h8 index)
    let flat = |n: usize, a: usize| n * 8 + a;
    // global nichols index of kept word position
    let mut word_index: HashMap<Word, usize> = HashMap::new();
    let mut word_of: Vec<(usize, Word)> = Vec::new(); // global -> (degree, word)
    for (deg, words) in nich.kept.iter().enumerate() {
        for w in words {
            word_index.insert(w.clone(), word_of.len());
            word_of.push((deg, w.clone()));
        }
    }

    // right multiplication by a letter on the nichols basis, degreewise
    let mut letter_mul: Vec<Vec<SparseVec>> = vec![Vec::new(); d];
    for (letter, lm) in letter_mul.iter_mut().enumerate() {
        for (gidx, (deg, w)) in word_of.iter().enumerate() {
            let _ = gidx;
            if deg + 1 >= nich.kept.len() {
                lm.push(Vec::new());
                continue;
            }
            let mut nw = w.clone();
            nw.push(letter as u8);
            let code = word_code(&nw, d);
            let nf = nich
                .normal_form(deg + 1, &vec![(code, Cyclo::one())])
                .expect("normal form within the certified basis");
            let off = nich.offset(deg + 1);
            lm.push(nf.into_iter().map(|(t, c)| (off + t, c)).collect());
        }
    }
    // product of nichols basis elements by chaining letters
    let nich_product = |a: usize, b: usize| -> SparseVec {
        let mut v: SparseVec = vec![(a, Cyclo::one())];
        for &letter in &word_of[b].1 {
            let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
            for (n, c) in &v {
                for (t, rc) in &letter_mul[letter as usize][*n] {
                    let e = acc.entry(*t).or_insert_with(Cyclo::zero);
                    *e += rc * c;
                }
            }
            v = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        v
    };

    // H8 action on the nichols basis: act diagonally on the tensor word and
    // take normal forms; memoized recursion through prefixes would also
    // work, but degrees stay small enough to act directly.
    let mut h_action: Vec<Vec<SparseVec>> = vec![Vec::new(); 8];
    for (hi, ha) in h_action.iter_mut().enumerate() {
        for (deg, w) in word_of.iter() {
            if *deg == 0 {
                ha.push(if h.counit[hi].is_zero() {
                    Vec::new()
                } else {
                    vec![(0usize, h.counit[hi].clone())]
                });
                continue;
            }
            // expand h . (m_1 (x) ... (x) m_k) recursively along Delta
            fn act(
                h: &HopfAlgebra,
                m: &YdModule,
                hi: usize,
                w: &[u8],
            ) -> BTreeMap<Vec<u8>, Cyclo> {
                let mut out: BTreeMap<Vec<u8>, Cyclo> = BTreeMap::new();
                if w.len() == 1 {
                    for (t, c) in m.actions[hi].col(w[0] as usize) {
                        out.insert(vec![t as u8], c);
                    }
                    return out;
                }
                let (head, tail) = w.split_at(w.len() - 1);
                for (c, l, r) in &h.comult[hi] {
                    let sub = act(h, m, *l, head);
                    for (w1, c1) in &sub {
                        for (t, c2) in m.actions[*r].col(tail[0] as usize) {
                            let mut nw = w1.clone();
                            nw.push(t as u8);
                            let v = &(c1 * &c2) * c;
                            if v.is_zero() {
                                continue;
                            }
                            let e = out.entry(nw).or_insert_with(Cyclo::zero);
                            *e += v;
                        }
                    }
                }
                out.retain(|_, c| !c.is_zero());
                out
            }
            let expanded = act(h, &nich.module, hi, w);
            let tensor: SparseVec = expanded
                .into_iter()
                .map(|(nw, c)| (word_code(&nw, d), c))
                .collect::<BTreeMap<_, _>>()
                .into_iter()
                .collect();
            let nf = nich
                .normal_form(*deg, &tensor)
                .expect("action stays in the component");
            let off = nich.offset(*deg);
            ha.push(nf.into_iter().map(|(t, c)| (off + t, c)).collect());
        }
    }

    // smash multiplication table
    let mut mult = vec![vec![Vec::new(); dim]; dim];
    for n1 in 0..n_total {
        for a1 in 0..8 {
            for n2 in 0..n_total {
                for a2 in 0..8 {
                    let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
                    for (c, l, r) in &h.comult[a1] {
                        // l acts on the second nichols part
                        for (nmid, cm) in &h_action[*l][n2] {
                            for (nt, cp) in nich_product(n1, *nmid) {
                                for (ht, hc) in h.basis_product(*r, a2) {
                                    let v = &(&(c * cm) * &cp) * hc;
                                    if v.is_zero() {
                                        continue;
                                    }
                                    let e = acc
                                        .entry(flat(nt, *ht))
                                        .or_insert_with(Cyclo::zero);
                                    *e += v;
                                }
                            }
                        }
                    }
                    mult[flat(n1, a1)][flat(n2, a2)] = acc
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect();
                }
            }
        }
    }

    // coproducts: multiplicative extension along letters and the H8 part
    // Delta(letter # 1) = letter (x) 1 + coaction legs (x) letter
    let tensor_index = |l: usize, r: usize| (l, r);
    type Tensor = BTreeMap<(usize, usize), Cyclo>;
    let tensor_mul = |a: &Tensor, b: &Tensor, mult: &Vec<Vec<SparseVec>>| -> Tensor {
        let mut out: Tensor = BTreeMap::new();
        for ((al, ar), ca) in a {
            for ((bl, br), cb) in b {
                let f = ca * cb;
                if f.is_zero() {
                    continue;
                }
                for (l, cl) in &mult[*al][*bl] {
                    for (r, cr) in &mult[*ar][*br] {
                        let v = &(cl * cr) * &f;
                        if v.is_zero() {
                            continue;
                        }
                        let e = out.entry(tensor_index(*l, *r)).or_insert_with(Cyclo::zero);
                        *e += v;
                    }
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    };
    let unit_flat = flat(0, hx::ONE);
    let letter_flat: Vec<usize> = (0..d)
        .map(|l| {
            let w = vec![l as u8];
            flat(word_index[&w], hx::ONE)
        })
        .collect();
    let mut delta_letter: Vec<Tensor> = Vec::with_capacity(d);
    for l in 0..d {
        let mut t: Tensor = BTreeMap::new();
        t.insert((letter_flat[l], unit_flat), Cyclo::one());
        for (c, a, m) in &nich.module.coaction[l] {
            let e = t
                .entry((flat(0, *a), letter_flat[*m]))
                .or_insert_with(Cyclo::zero);
            *e += c.clone();
        }
        delta_letter.push(t);
    }
    let mut delta_h: Vec<Tensor> = Vec::with_capacity(8);
    for a in 0..8 {
        let mut t: Tensor = BTreeMap::new();
        for (c, l, r) in &h.comult[a] {
            t.insert((flat(0, *l), flat(0, *r)), c.clone());
        }
        delta_h.push(t);
    }
    let mut comult: Vec<Vec<(Cyclo, usize, usize)>> = Vec::with_capacity(dim);
    // prefix-shared extension: delta of each nichols word, then the H8 leg
    let mut delta_word: Vec<Tensor> = Vec::with_capacity(n_total);
    for (n, (deg, w)) in word_of.iter().enumerate() {
        let t = if *deg == 0 {
            let mut t: Tensor = BTreeMap::new();
            t.insert((unit_flat, unit_flat), Cyclo::one());
            t
        } else {
            let prefix = w[..w.len() - 1].to_vec();
            let pidx = word_index[&prefix];
            let last = w[w.len() - 1] as usize;
            tensor_mul(&delta_word[pidx], &delta_letter[last], &mult)
        };
        delta_word.push(t);
        let _ = n;
    }
    for n in 0..n_total {
        for a in 0..8 {
            let t = tensor_mul(&delta_word[n], &delta_h[a], &mult);
            let mut terms: Vec<(Cyclo, usize, usize)> = t
                .into_iter()
                .map(|((l, r), c)| (c, l, r))
                .collect();
            terms.sort_by_key(|(_, l, r)| (*l, *r));
            comult.push(terms);
        }
    }

    // counit
    let mut counit = vec![Cyclo::zero(); dim];
    for a in 0..8 {
        counit[flat(0, a)] = h.counit[a].clone();
    }

    // antipode: S(1 # h) from the base algebra; on letters the convolution
    // law gives S(letter) = - sum (1 # S(leg)) (letter-part # 1); extend
    // anti-multiplicatively.
    let mut s_gen_letter: Vec<SparseVec> = Vec::with_capacity(d);
    for l in 0..d {
        let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
        for (c, a, m) in &nich.module.coaction[l] {
            let s_leg = h.antipode_of(&h.basis_element(*a));
            // (1 # s_leg) * (letter_m # 1): smash product via the table
            for (hi, hv) in s_leg.iter().enumerate() {
                if hv.is_zero() {
                    continue;
                }
                for (t, c2) in &mult[flat(0, hi)][letter_flat[*m]] {
                    let v = &(&(-c.clone()) * hv) * c2;
                    if v.is_zero() {
                        continue;
                    }
                    let e = acc.entry(*t).or_insert_with(Cyclo::zero);
                    *e += v;
                }
            }
        }
        s_gen_letter.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    }
    let prod_flat = |a: &SparseVec, b: &SparseVec| -> SparseVec {
        let mut acc: BTreeMap<usize, Cyclo> = BTreeMap::new();
        for (i, ci) in a {
            for (j, cj) in b {
                let f = ci * cj;
                for (t, c) in &mult[*i][*j] {
                    let e = acc.entry(*t).or_insert_with(Cyclo::zero);
                    *e += c * &f;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    };
    let mut s_word: Vec<SparseVec> = Vec::with_capacity(n_total);
    for (deg, w) in word_of.iter() {
        if *deg == 0 {
            s_word.push(vec![(unit_flat, Cyclo::one())]);
            continue;
        }
        let prefix = w[..w.len() - 1].to_vec();
        let pidx = word_index[&prefix];
        let last = w[w.len() - 1] as usize;
        let prev = s_word[pidx].clone();
        s_word.push(prod_flat(&s_gen_letter[last], &prev));
    }
    let mut antipode = CycloMatrix::zero(dim, dim);
    for n in 0..n_total {
        for a in 0..8 {
            // S(w # h) = S(1 # h) S(w # 1)
            let sh: SparseVec = {
                let img = h.antipode_of(&h.basis_element(a));
                img.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(hi, c)| (flat(0, hi), c))
                    .collect()
            };
            let v = prod_flat(&sh, &s_word[n]);
            for (t, c) in v {
                antipode.set(t, flat(n, a), c);
            }
        }
    }

    // labels and generator metadata
    let mut labels = Vec::with_capacity(dim);
    for (_, w) in word_of.iter() {
        for a in 0..8 {
            let wname = if w.is_empty() {
                String::new()
            } else {
                w.iter()
                    .map(|&l| format!("m{}", l))
                    .collect::<Vec<_>>()
                    .join("*")
            };
            let hname = h.basis_labels[a].clone();
            labels.push(if wname.is_empty() {
                hname
            } else if a == hx::ONE {
                wname
            } else {
                format!("{}*{}", wname, hname)
            });
        }
    }
    let mut generators = vec![flat(0, hx::X), flat(0, hx::Y), flat(0, hx::Z)];
    generators.extend(letter_flat.iter().copied());
    let h8_words: [&[usize]; 8] = [
        &[],
        &[0],
        &[1],
        &[0, 1],
        &[2],
        &[0, 2],
        &[1, 2],
        &[0, 1, 2],
    ];
    let mut words = Vec::with_capacity(dim);
    for (_, w) in word_of.iter() {
        for a in 0..8 {
            let mut gw: Vec<usize> = w.iter().map(|&l| letter_flat[l as usize]).collect();
            gw.extend(h8_words[a].iter().map(|&k| [flat(0, hx::X), flat(0, hx::Y), flat(0, hx::Z)][k]));
            words.push(gw);
        }
    }

    Ok(HopfAlgebra {
        dim,
        basis_labels: labels,
        mult,
        unit: unit_flat,
        comult,
        counit,
        antipode,
        generators: Some(GeneratorSpec { generators, words }),
    })
}
