//! Ground-term noncommutative rewriting: oriented rules replace a fixed
//! left-hand word by a linear combination of smaller words. Confluence is
//! certified exhaustively by resolving every overlap ambiguity between
//! left-hand sides; the normal-form monomials then form a basis of the
//! presented algebra and the dimension is their count.

use crate::cyclo::Cyclo;
use std::collections::{BTreeMap, HashMap};

pub type GenId = u8;
pub type Word = Vec<GenId>;

/// Noncommutative polynomial: sorted map from words to coefficients.
pub type NcPoly = BTreeMap<Word, Cyclo>;

pub fn poly_add_term(p: &mut NcPoly, w: Word, c: Cyclo) {
    if c.is_zero() {
        return;
    }
    match p.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().clone() + c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub fn poly_scale(p: &NcPoly, s: &Cyclo) -> NcPoly {
    if s.is_zero() {
        return NcPoly::new();
    }
    p.iter().map(|(w, c)| (w.clone(), c * s)).collect()
}

pub fn poly_of_word(w: Word) -> NcPoly {
    let mut p = NcPoly::new();
    p.insert(w, Cyclo::one());
    p
}

/// One oriented rewrite rule lhs -> rhs.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

/// A failed overlap: the two reduction routes of `word` disagree.
#[derive(Clone, Debug, thiserror::Error)]
#[error("non-confluent overlap between rules {rule_a} and {rule_b} on word {word:?}: routes differ by {difference:?}")]
pub struct OverlapFailure {
    pub rule_a: usize,
    pub rule_b: usize,
    pub word: Word,
    pub difference: NcPoly,
}

/// Rewriting ran away; indicates a non-terminating rule set (a bug in the
/// family tables, not a user input condition).
#[derive(Clone, Debug, thiserror::Error)]
#[error("rewriting exceeded {0} steps; rule set looks non-terminating")]
pub struct StepLimit(pub usize);

pub struct RewriteSystem {
    pub rules: Vec<Rule>,
    /// rules indexed by first letter for the scan
    by_first: HashMap<GenId, Vec<usize>>,
    memo: HashMap<Word, NcPoly>,
}

const STEP_LIMIT: usize = 50_000_000;

impl RewriteSystem {
    pub fn new(rules: Vec<Rule>) -> Self {
        let mut by_first: HashMap<GenId, Vec<usize>> = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            assert!(!r.lhs.is_empty(), "empty rule left-hand side");
            by_first.entry(r.lhs[0]).or_default().push(i);
        }
        RewriteSystem {
            rules,
            by_first,
            memo: HashMap::new(),
        }
    }

    /// Leftmost redex of `w`: (position, rule index).
    fn find_redex(&self, w: &[GenId]) -> Option<(usize, usize)> {
        for pos in 0..w.len() {
            if let Some(cands) = self.by_first.get(&w[pos]) {
                for &ri in cands {
                    let l = &self.rules[ri].lhs;
                    if pos + l.len() <= w.len() && &w[pos..pos + l.len()] == l.as_slice() {
                        return Some((pos, ri));
                    }
                }
            }
        }
        None
    }

    /// True when no rule left-hand side occurs in `w`.
    #[allow(dead_code)]
    pub fn is_normal(&self, w: &[GenId]) -> bool {
        self.find_redex(w).is_none()
    }

    /// Fully reduces a word to its normal-form polynomial.
    pub fn reduce_word(&mut self, w: &Word) -> Result<NcPoly, StepLimit> {
        if let Some(hit) = self.memo.get(w) {
            return Ok(hit.clone());
        }
        let mut out = NcPoly::new();
        let mut stack: Vec<(Cyclo, Word)> = vec![(Cyclo::one(), w.clone())];
        let mut steps = 0usize;
        while let Some((c, word)) = stack.pop() {
            steps += 1;
            if steps > STEP_LIMIT {
                return Err(StepLimit(STEP_LIMIT));
            }
            match self.find_redex(&word) {
                None => poly_add_term(&mut out, word, c),
                Some((pos, ri)) => {
                    let l_len = self.rules[ri].lhs.len();
                    // reduce the remainder of the word against the memo when
                    // the redex sits at the front: common fast path
                    let rhs = self.rules[ri].rhs.clone();
                    for (rw, rc) in rhs {
                        let mut nw = Vec::with_capacity(word.len() - l_len + rw.len());
                        nw.extend_from_slice(&word[..pos]);
                        nw.extend_from_slice(&rw);
                        nw.extend_from_slice(&word[pos + l_len..]);
                        stack.push((&c * &rc, nw));
                    }
                }
            }
        }
        self.memo.insert(w.clone(), out.clone());
        Ok(out)
    }

    /// Normalizes a polynomial.
    pub fn normalize(&mut self, p: &NcPoly) -> Result<NcPoly, StepLimit> {
        let mut out = NcPoly::new();
        for (w, c) in p {
            for (nw, nc) in self.reduce_word(w)? {
                poly_add_term(&mut out, nw, &nc * c);
            }
        }
        Ok(out)
    }

    /// Exhaustively certifies local confluence: every suffix-prefix overlap
    /// and every containment of one left-hand side in another reduces to the
    /// same normal form along both routes. With termination this gives
    /// global confluence.
    pub fn certify_confluence(&mut self) -> Result<(), OverlapFailure> {
        let n = self.rules.len();
        for a in 0..n {
            for b in 0..n {
                let la = self.rules[a].lhs.clone();
                let lb = self.rules[b].lhs.clone();
                // suffix of la = prefix of lb, overlap length k < min
                for k in 1..la.len().min(lb.len()) {
                    if la[la.len() - k..] == lb[..k] {
                        let mut word = la.clone();
                        word.extend_from_slice(&lb[k..]);
                        // route A: rule a at position 0
                        let mut pa = NcPoly::new();
                        for (rw, rc) in self.rules[a].rhs.clone() {
                            let mut nw = rw.clone();
                            nw.extend_from_slice(&lb[k..]);
                            poly_add_term(&mut pa, nw, rc);
                        }
                        // route B: rule b at position |la| - k
                        let mut pb = NcPoly::new();
                        for (rw, rc) in self.rules[b].rhs.clone() {
                            let mut nw = la[..la.len() - k].to_vec();
                            nw.extend_from_slice(&rw);
                            poly_add_term(&mut pb, nw, rc);
                        }
                        self.check_routes(a, b, word, pa, pb)?;
                    }
                }
                // containment: lb inside la (strictly smaller or different rule)
                if a != b && lb.len() <= la.len() {
                    for pos in 0..=(la.len() - lb.len()) {
                        if la[pos..pos + lb.len()] == lb[..] {
                            let word = la.clone();
                            let pa = self.rules[a].rhs.clone();
                            let mut pb = NcPoly::new();
                            for (rw, rc) in self.rules[b].rhs.clone() {
                                let mut nw = la[..pos].to_vec();
                                nw.extend_from_slice(&rw);
                                nw.extend_from_slice(&la[pos + lb.len()..]);
                                poly_add_term(&mut pb, nw, rc);
                            }
                            self.check_routes(a, b, word, pa, pb)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_routes(
        &mut self,
        a: usize,
        b: usize,
        word: Word,
        pa: NcPoly,
        pb: NcPoly,
    ) -> Result<(), OverlapFailure> {
        let na = self.normalize(&pa).map_err(|_| OverlapFailure {
            rule_a: a,
            rule_b: b,
            word: word.clone(),
            difference: NcPoly::new(),
        })?;
        let nb = self.normalize(&pb).map_err(|_| OverlapFailure {
            rule_a: a,
            rule_b: b,
            word: word.clone(),
            difference: NcPoly::new(),
        })?;
        if na != nb {
            let mut diff = na;
            for (w, c) in nb {
                poly_add_term(&mut diff, w, -c);
            }
            return Err(OverlapFailure {
                rule_a: a,
                rule_b: b,
                word,
                difference: diff,
            });
        }
        Ok(())
    }

    /// Enumerates all irreducible words over `n_gens` generators, giving up
    /// (with None) once more than `limit` are found. Prefixes of irreducible
    /// words are irreducible, so depth-first extension with a suffix check
    /// is exhaustive.
    pub fn enumerate_basis(&self, n_gens: usize, limit: usize) -> Option<Vec<Word>> {
        let mut out: Vec<Word> = Vec::new();
        let mut stack: Vec<Word> = vec![Vec::new()];
        while let Some(w) = stack.pop() {
            out.push(w.clone());
            if out.len() > limit {
                return None;
            }
            for g in (0..n_gens as GenId).rev() {
                let mut nw = w.clone();
                nw.push(g);
                // a new redex can only appear as a suffix
                let reducible = self.rules.iter().any(|r| {
                    r.lhs.len() <= nw.len() && nw[nw.len() - r.lhs.len()..] == r.lhs[..]
                });
                if !reducible {
                    stack.push(nw);
                }
            }
        }
        out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> Cyclo {
        Cyclo::one()
    }

    #[test]
    fn exterior_algebra_on_two_letters() {
        // x y + y x = 0, x^2 = y^2 = 0 oriented with x < y
        let rules = vec![
            Rule {
                lhs: vec![0, 0],
                rhs: NcPoly::new(),
            },
            Rule {
                lhs: vec![1, 1],
                rhs: NcPoly::new(),
            },
            Rule {
                lhs: vec![1, 0],
                rhs: poly_scale(&poly_of_word(vec![0, 1]), &-one()),
            },
        ];
        let mut rs = RewriteSystem::new(rules);
        rs.certify_confluence().unwrap();
        let basis = rs.enumerate_basis(2, 100).unwrap();
        assert_eq!(basis.len(), 4); // 1, x, y, xy
        let nf = rs.reduce_word(&vec![1, 0, 1]).unwrap();
        assert!(nf.is_empty()); // yxy = -xyy = 0
    }

    #[test]
    fn inconsistent_rules_fail_confluence() {
        // x^2 = 0 and x^2 = 1 cannot coexist; encode as xx -> 0 and
        // xxx -> x (which with xx -> 0 forces 0 = x)
        let rules = vec![
            Rule {
                lhs: vec![0, 0],
                rhs: NcPoly::new(),
            },
            Rule {
                lhs: vec![0, 0, 0],
                rhs: poly_of_word(vec![0]),
            },
        ];
        let mut rs = RewriteSystem::new(rules);
        let err = rs.certify_confluence().unwrap_err();
        assert!(!err.difference.is_empty());
    }
}
