//! The five built-in lifted-algebra presentations. Each family fixes a
//! generator list (module letters first, then x, y, z), the oriented
//! rewrite rules carrying the defining relations, and the coproduct
//! assignments of the generators.
//!
//! Monomial order: module letters in listing order, then x < y < z; words
//! compare by module-letter degree, then the printed relations orient
//! left-to-right (every right-hand side is smaller).

use super::rewrite::{poly_add_term, NcPoly, Rule, Word};
use crate::cyclo::Cyclo;
use crate::hopf::f_idem;

/// z-conjugation data of a module letter: z . m = scalar * target * x^a * z.
#[derive(Clone, Debug)]
pub struct ZRule {
    pub scalar: Cyclo,
    pub target: usize,
    pub with_x: bool,
}

/// One module letter of a presentation.
#[derive(Clone, Debug)]
pub struct Letter {
    pub name: String,
    /// sign in x m = sign * m x
    pub sx: i64,
    /// sign in y m = sign * m y
    pub sy: i64,
    pub z: ZRule,
    /// square of the letter as a group-algebra element (length-8 vector)
    pub square: Vec<Cyclo>,
    /// coproduct terms (coefficient, left H8 element, right letter index);
    /// the term m (x) 1 is implicit.
    pub coproduct: Vec<(Cyclo, Vec<Cyclo>, usize)>,
}

/// Relation between two distinct letters lo < hi.
#[derive(Clone, Debug)]
pub enum PairKind {
    /// hi lo + lo hi = defect
    Anticommute,
    /// hi lo - lo hi = -defect, i.e. the rule hi lo -> lo hi + defect
    Commute,
}

#[derive(Clone, Debug)]
pub struct PairRule {
    pub lo: usize,
    pub hi: usize,
    pub kind: PairKind,
    /// group-algebra defect (length-8 vector over the fixed basis)
    pub defect: Vec<Cyclo>,
}

/// A degree-four block relation hi lo hi lo + lo hi lo hi = defect.
#[derive(Clone, Debug)]
pub struct QuarticRule {
    pub lo: usize,
    pub hi: usize,
    pub defect: Vec<Cyclo>,
}

/// Full presentation data of one lifted algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub family: String,
    pub letters: Vec<Letter>,
    pub pairs: Vec<PairRule>,
    pub quartics: Vec<QuarticRule>,
    pub expected_dim: usize,
}

impl Presentation {
    pub fn n_gens(&self) -> usize {
        self.letters.len() + 3
    }
    pub fn x_id(&self) -> u8 {
        self.letters.len() as u8
    }
    pub fn y_id(&self) -> u8 {
        self.letters.len() as u8 + 1
    }
    pub fn z_id(&self) -> u8 {
        self.letters.len() as u8 + 2
    }

    pub fn gen_name(&self, g: u8) -> String {
        let n = self.letters.len() as u8;
        if g < n {
            self.letters[g as usize].name.clone()
        } else {
            ["x", "y", "z"][(g - n) as usize].to_string()
        }
    }

    pub fn word_name(&self, w: &[u8]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&g| self.gen_name(g)).collect::<Vec<_>>().join("*")
    }

    /// The normal-form word of an H8 basis element over this presentation's
    /// group generators.
    pub fn group_word(&self, h8_index: usize) -> Word {
        let mut w = Word::new();
        if h8_index & 1 != 0 {
            w.push(self.x_id());
        }
        if h8_index & 2 != 0 {
            w.push(self.y_id());
        }
        if h8_index & 4 != 0 {
            w.push(self.z_id());
        }
        w
    }

    /// Converts a group-algebra element to a normal-form polynomial.
    pub fn group_poly(&self, elem: &[Cyclo]) -> NcPoly {
        let mut p = NcPoly::new();
        for (i, c) in elem.iter().enumerate() {
            poly_add_term(&mut p, self.group_word(i), c.clone());
        }
        p
    }

    /// Assembles the oriented rewrite rules.
    pub fn rules(&self) -> Vec<Rule> {
        let x = self.x_id();
        let y = self.y_id();
        let z = self.z_id();
        let one = Cyclo::one();
        let half = Cyclo::from_ratio(1, 2);
        let mut rules = Vec::new();
        // group relations
        rules.push(Rule {
            lhs: vec![x, x],
            rhs: super::rewrite::poly_of_word(vec![]),
        });
        rules.push(Rule {
            lhs: vec![y, y],
            rhs: super::rewrite::poly_of_word(vec![]),
        });
        let mut zz = NcPoly::new();
        poly_add_term(&mut zz, vec![], half.clone());
        poly_add_term(&mut zz, vec![x], half.clone());
        poly_add_term(&mut zz, vec![y], half.clone());
        poly_add_term(&mut zz, vec![x, y], -half.clone());
        rules.push(Rule {
            lhs: vec![z, z],
            rhs: zz,
        });
        rules.push(Rule {
            lhs: vec![y, x],
            rhs: super::rewrite::poly_of_word(vec![x, y]),
        });
        rules.push(Rule {
            lhs: vec![z, x],
            rhs: super::rewrite::poly_of_word(vec![y, z]),
        });
        rules.push(Rule {
            lhs: vec![z, y],
            rhs: super::rewrite::poly_of_word(vec![x, z]),
        });
        // group letters move right past module letters
        for (m, l) in self.letters.iter().enumerate() {
            let m = m as u8;
            let mut rx = NcPoly::new();
            poly_add_term(&mut rx, vec![m, x], Cyclo::from_int(l.sx));
            rules.push(Rule {
                lhs: vec![x, m],
                rhs: rx,
            });
            let mut ry = NcPoly::new();
            poly_add_term(&mut ry, vec![m, y], Cyclo::from_int(l.sy));
            rules.push(Rule {
                lhs: vec![y, m],
                rhs: ry,
            });
            let mut rz = NcPoly::new();
            let mut w = vec![l.z.target as u8];
            if l.z.with_x {
                w.push(x);
            }
            w.push(z);
            poly_add_term(&mut rz, w, l.z.scalar.clone());
            rules.push(Rule {
                lhs: vec![z, m],
                rhs: rz,
            });
            // square
            rules.push(Rule {
                lhs: vec![m, m],
                rhs: self.group_poly(&l.square),
            });
        }
        // pair rules: hi lo -> (+-) lo hi + defect
        for p in &self.pairs {
            let lo = p.lo as u8;
            let hi = p.hi as u8;
            let mut rhs = self.group_poly(&p.defect);
            let sign = match p.kind {
                PairKind::Anticommute => -one.clone(),
                PairKind::Commute => one.clone(),
            };
            poly_add_term(&mut rhs, vec![lo, hi], sign);
            rules.push(Rule {
                lhs: vec![hi, lo],
                rhs,
            });
        }
        // quartic rules: hi lo hi lo -> - lo hi lo hi + defect
        for q in &self.quartics {
            let lo = q.lo as u8;
            let hi = q.hi as u8;
            let mut rhs = self.group_poly(&q.defect);
            poly_add_term(&mut rhs, vec![lo, hi, lo, hi], -one.clone());
            rules.push(Rule {
                lhs: vec![hi, lo, hi, lo],
                rhs,
            });
        }
        rules
    }

    /// Coproduct of a generator as (coefficient, left word, right word)
    /// terms over the free generators.
    pub fn coproduct_terms(&self, g: u8) -> Vec<(Cyclo, Word, Word)> {
        let n = self.letters.len() as u8;
        if g < n {
            let l = &self.letters[g as usize];
            let mut out = vec![(Cyclo::one(), vec![g], Word::new())];
            for (c, h_elem, target) in &l.coproduct {
                for (i, hc) in h_elem.iter().enumerate() {
                    if hc.is_zero() {
                        continue;
                    }
                    out.push((c * hc, self.group_word(i), vec![*target as u8]));
                }
            }
            out
        } else if g == self.x_id() || g == self.y_id() {
            vec![(Cyclo::one(), vec![g], vec![g])]
        } else {
            // Delta(z) = (z (x) z + yz (x) z + z (x) xz - yz (x) xz)/2
            let x = self.x_id();
            let y = self.y_id();
            let z = self.z_id();
            let half = Cyclo::from_ratio(1, 2);
            vec![
                (half.clone(), vec![z], vec![z]),
                (half.clone(), vec![y, z], vec![z]),
                (half.clone(), vec![z], vec![x, z]),
                (-half, vec![y, z], vec![x, z]),
            ]
        }
    }

    /// Counit of a generator.
    pub fn counit_gen(&self, g: u8) -> Cyclo {
        if (g as usize) < self.letters.len() {
            Cyclo::zero()
        } else {
            Cyclo::one()
        }
    }
}

fn group_elem(coeffs: &[(usize, Cyclo)]) -> Vec<Cyclo> {
    let mut v = vec![Cyclo::zero(); 8];
    for (i, c) in coeffs {
        v[*i] = v[*i].clone() + c.clone();
    }
    v
}

fn zero8() -> Vec<Cyclo> {
    vec![Cyclo::zero(); 8]
}

/// c * (1 - xy)
fn one_minus_xy(c: &Cyclo) -> Vec<Cyclo> {
    group_elem(&[(0, c.clone()), (3, -c.clone())])
}

/// [f00 + c11 f11 + c10 f10 + c01 f01] z as a length-8 element.
fn fcomb_z(c00: Cyclo, c11: Cyclo, c10: Cyclo, c01: Cyclo) -> Vec<Cyclo> {
    let mut acc = vec![Cyclo::zero(); 8];
    for (f, s) in [
        (f_idem(0, 0), c00),
        (f_idem(1, 1), c11),
        (f_idem(1, 0), c10),
        (f_idem(0, 1), c01),
    ] {
        for (k, v) in f.iter().enumerate() {
            acc[k] = acc[k].clone() + v * &s;
        }
    }
    // multiply by z on the right: group elements shift into the z-block
    let mut out = vec![Cyclo::zero(); 8];
    for k in 0..4 {
        out[k + 4] = acc[k].clone();
    }
    out
}

/// Scalar set of the first family: anticommutator defect coefficients
/// between the four letter groups.
#[derive(Clone, Debug, Default)]
pub struct ScalarsA1 {
    pub lambda: Vec<Vec<Cyclo>>, // X x p
    pub mu: Vec<Vec<Cyclo>>,     // X x q
    pub zeta: Vec<Vec<Cyclo>>,   // Y x p
    pub theta: Vec<Vec<Cyclo>>,  // Y x q
}

impl ScalarsA1 {
    pub fn zero(n: [usize; 4]) -> Self {
        ScalarsA1 {
            lambda: vec![vec![Cyclo::zero(); n[2]]; n[0]],
            mu: vec![vec![Cyclo::zero(); n[3]]; n[0]],
            zeta: vec![vec![Cyclo::zero(); n[2]]; n[1]],
            theta: vec![vec![Cyclo::zero(); n[3]]; n[1]],
        }
    }
    pub fn constant(n: [usize; 4], c: Cyclo) -> Self {
        ScalarsA1 {
            lambda: vec![vec![c.clone(); n[2]]; n[0]],
            mu: vec![vec![c.clone(); n[3]]; n[0]],
            zeta: vec![vec![c.clone(); n[2]]; n[1]],
            theta: vec![vec![c; n[3]]; n[1]],
        }
    }
}

/// Scalar set of the fourth family.
#[derive(Clone, Debug)]
pub struct ScalarsA4 {
    pub lambda1: Cyclo,
    pub lambda2: Cyclo,
    /// lambda_{j,k} for the X-Y anticommutators
    pub lambda_jk: Vec<Vec<Cyclo>>,
}

impl ScalarsA4 {
    pub fn zero(n1: usize, n2: usize) -> Self {
        ScalarsA4 {
            lambda1: Cyclo::zero(),
            lambda2: Cyclo::zero(),
            lambda_jk: vec![vec![Cyclo::zero(); n2]; n1],
        }
    }
}

/// Parameters selecting a built-in family instance.
#[derive(Clone, Debug)]
pub enum LiftingParams {
    A1 {
        n: [usize; 4],
        scalars: ScalarsA1,
    },
    A2Bos {
        n1: usize,
        n2: usize,
        /// resolved exclusion probe: a nonzero value wires the forbidden
        /// cross relation p1 X_1 - X_1 p1 = c (1 - y) into the rule set
        cross_deformation: Option<Cyclo>,
    },
    A4 {
        n1: usize,
        n2: usize,
        scalars: ScalarsA4,
        /// the forbidden deformation p1 X_j - X_j p1 = c [f10 - i f01] z
        forbidden_mu: Option<Cyclo>,
    },
    A6 {
        lambda: Cyclo,
        /// the forbidden extra relation p1 q2 - q2 p1 = c (1 - xy)
        lambda3: Option<Cyclo>,
    },
    A7 {
        /// lambda_1 .. lambda_5
        scalars: [Cyclo; 5],
    },
}

impl LiftingParams {
    pub fn family_name(&self) -> &'static str {
        match self {
            LiftingParams::A1 { .. } => "A1",
            LiftingParams::A2Bos { .. } => "A2bos",
            LiftingParams::A4 { .. } => "A4",
            LiftingParams::A6 { .. } => "A6",
            LiftingParams::A7 { .. } => "A7",
        }
    }
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{}{}", prefix, i)).collect()
}

/// Builds the presentation data for a parameter choice.
pub fn presentation(params: &LiftingParams) -> Presentation {
    let i = Cyclo::i();
    let one = Cyclo::one();
    match params {
        LiftingParams::A1 { n, scalars } => {
            let mut letters = Vec::new();
            let groups: [(&str, Cyclo, usize); 4] = [
                ("X", i.clone(), 1),   // coacts along x
                ("Y", -i.clone(), 1),  // coacts along x
                ("p", i.clone(), 2),   // coacts along y
                ("q", -i.clone(), 2),  // coacts along y
            ];
            let mut index_of_group: Vec<Vec<usize>> = Vec::new();
            for (gi, (prefix, zs, coact)) in groups.iter().enumerate() {
                let mut ids = Vec::new();
                for name in numbered(prefix, n[gi]) {
                    ids.push(letters.len());
                    letters.push(Letter {
                        name,
                        sx: -1,
                        sy: -1,
                        z: ZRule {
                            scalar: zs.clone(),
                            target: letters.len(),
                            with_x: true,
                        },
                        square: zero8(),
                        coproduct: vec![(
                            Cyclo::one(),
                            group_elem(&[(*coact, one.clone())]),
                            letters.len(),
                        )],
                    });
                }
                index_of_group.push(ids);
            }
            let mut pairs = Vec::new();
            let defect = |a: usize, b: usize, s: &ScalarsA1, idx: &[Vec<usize>], lo: usize, hi: usize| -> Vec<Cyclo> {
                // a, b are the group indices of lo and hi
                let pos = |g: usize, id: usize| idx[g].iter().position(|&x| x == id).unwrap();
                match (a, b) {
                    (0, 2) => one_minus_xy(&s.lambda[pos(0, lo)][pos(2, hi)]),
                    (0, 3) => one_minus_xy(&s.mu[pos(0, lo)][pos(3, hi)]),
                    (1, 2) => one_minus_xy(&s.zeta[pos(1, lo)][pos(2, hi)]),
                    (1, 3) => one_minus_xy(&s.theta[pos(1, lo)][pos(3, hi)]),
                    _ => zero8(),
                }
            };
            for lo in 0..letters.len() {
                for hi in (lo + 1)..letters.len() {
                    let ga = index_of_group.iter().position(|g| g.contains(&lo)).unwrap();
                    let gb = index_of_group.iter().position(|g| g.contains(&hi)).unwrap();
                    pairs.push(PairRule {
                        lo,
                        hi,
                        kind: PairKind::Anticommute,
                        defect: defect(ga, gb, scalars, &index_of_group, lo, hi),
                    });
                }
            }
            Presentation {
                family: "A1".into(),
                letters,
                pairs,
                quartics: vec![],
                expected_dim: 8 * (1 << (n[0] + n[1] + n[2] + n[3])),
            }
        }
        LiftingParams::A2Bos {
            n1,
            n2,
            cross_deformation,
        } => {
            let mut letters = Vec::new();
            for name in numbered("X", *n1) {
                letters.push(Letter {
                    name,
                    sx: -1,
                    sy: -1,
                    z: ZRule {
                        scalar: i.clone(),
                        target: letters.len(),
                        with_x: true,
                    },
                    square: zero8(),
                    coproduct: vec![(one.clone(), group_elem(&[(1, one.clone())]), letters.len())],
                });
            }
            for name in numbered("Y", *n2) {
                letters.push(Letter {
                    name,
                    sx: -1,
                    sy: -1,
                    z: ZRule {
                        scalar: -i.clone(),
                        target: letters.len(),
                        with_x: true,
                    },
                    square: zero8(),
                    coproduct: vec![(one.clone(), group_elem(&[(1, one.clone())]), letters.len())],
                });
            }
            let p1 = letters.len();
            let p2 = p1 + 1;
            letters.push(Letter {
                name: "p1".into(),
                sx: 1,
                sy: -1,
                z: ZRule {
                    scalar: one.clone(),
                    target: p2,
                    with_x: false,
                },
                square: zero8(),
                coproduct: vec![(one.clone(), group_elem(&[(3, one.clone())]), p1)],
            });
            letters.push(Letter {
                name: "p2".into(),
                sx: -1,
                sy: 1,
                z: ZRule {
                    scalar: one.clone(),
                    target: p1,
                    with_x: true,
                },
                square: zero8(),
                coproduct: vec![(one.clone(), group_elem(&[(1, one.clone())]), p2)],
            });
            let mut pairs = Vec::new();
            for lo in 0..(p1) {
                for hi in (lo + 1)..p1 {
                    pairs.push(PairRule {
                        lo,
                        hi,
                        kind: PairKind::Anticommute,
                        defect: zero8(),
                    });
                }
            }
            for m in 0..p1 {
                // p1 commutes with every one-dimensional letter, p2
                // anticommutes
                let mut defect = zero8();
                if m == 0 {
                    if let Some(c) = cross_deformation {
                        defect = group_elem(&[(0, c.clone()), (2, -c.clone())]);
                    }
                }
                pairs.push(PairRule {
                    lo: m,
                    hi: p1,
                    kind: PairKind::Commute,
                    defect,
                });
                pairs.push(PairRule {
                    lo: m,
                    hi: p2,
                    kind: PairKind::Anticommute,
                    defect: zero8(),
                });
            }
            Presentation {
                family: "A2bos".into(),
                letters,
                pairs,
                quartics: vec![QuarticRule {
                    lo: p1,
                    hi: p2,
                    defect: zero8(),
                }],
                expected_dim: 8 * (1 << (n1 + n2)) * 8,
            }
        }
        LiftingParams::A6 { lambda, lambda3 } => {
            let mk = |name: &str, sx: i64, sy: i64, target: usize, with_x: bool, coact: usize, idx: usize| Letter {
                name: name.into(),
                sx,
                sy,
                z: ZRule {
                    scalar: one.clone(),
                    target,
                    with_x,
                },
                square: zero8(),
                coproduct: vec![(one.clone(), group_elem(&[(coact, one.clone())]), idx)],
            };
            let letters = vec![
                mk("p1", 1, -1, 1, false, 2, 0),  // coacts along y
                mk("p2", -1, 1, 0, true, 3, 1),   // coacts along xy
                mk("q1", 1, -1, 3, false, 3, 2),  // coacts along xy
                mk("q2", -1, 1, 2, true, 1, 3),   // coacts along x
            ];
            let mut pairs = vec![
                PairRule {
                    lo: 0,
                    hi: 2,
                    kind: PairKind::Anticommute,
                    defect: group_elem(&[(0, lambda.clone()), (1, -lambda.clone())]),
                },
                PairRule {
                    lo: 1,
                    hi: 3,
                    kind: PairKind::Anticommute,
                    defect: group_elem(&[(0, lambda.clone()), (2, -lambda.clone())]),
                },
                PairRule {
                    lo: 1,
                    hi: 2,
                    kind: PairKind::Anticommute,
                    defect: zero8(),
                },
            ];
            let cross = PairRule {
                lo: 0,
                hi: 3,
                kind: PairKind::Commute,
                defect: match lambda3 {
                    None => zero8(),
                    Some(c) => group_elem(&[(0, -c.clone()), (3, c.clone())]),
                },
            };
            pairs.push(cross);
            Presentation {
                family: "A6".into(),
                letters,
                pairs,
                quartics: vec![
                    QuarticRule {
                        lo: 0,
                        hi: 1,
                        defect: zero8(),
                    },
                    QuarticRule {
                        lo: 2,
                        hi: 3,
                        defect: zero8(),
                    },
                ],
                expected_dim: 512,
            }
        }
        LiftingParams::A7 { scalars } => {
            let [l1, l2, l3, l4, l5] = scalars.clone();
            let letters = vec![
                Letter {
                    name: "p1".into(),
                    sx: 1,
                    sy: 1,
                    z: ZRule {
                        scalar: -one.clone(),
                        target: 0,
                        with_x: false,
                    },
                    square: one_minus_xy(&l1),
                    coproduct: vec![
                        (one.clone(), fcomb_z(one.clone(), -i.clone(), Cyclo::zero(), Cyclo::zero()), 0),
                        (one.clone(), fcomb_z(Cyclo::zero(), Cyclo::zero(), one.clone(), i.clone()), 1),
                    ],
                },
                Letter {
                    name: "p2".into(),
                    sx: -1,
                    sy: -1,
                    z: ZRule {
                        scalar: i.clone(),
                        target: 1,
                        with_x: true,
                    },
                    square: one_minus_xy(&(i.clone() * l1.clone())),
                    coproduct: vec![
                        (one.clone(), fcomb_z(one.clone(), i.clone(), Cyclo::zero(), Cyclo::zero()), 1),
                        (one.clone(), fcomb_z(Cyclo::zero(), Cyclo::zero(), one.clone(), -i.clone()), 0),
                    ],
                },
                Letter {
                    name: "q1".into(),
                    sx: 1,
                    sy: 1,
                    z: ZRule {
                        scalar: -one.clone(),
                        target: 2,
                        with_x: false,
                    },
                    square: one_minus_xy(&l3),
                    coproduct: vec![
                        (one.clone(), fcomb_z(one.clone(), i.clone(), Cyclo::zero(), Cyclo::zero()), 2),
                        (one.clone(), fcomb_z(Cyclo::zero(), Cyclo::zero(), one.clone(), -i.clone()), 3),
                    ],
                },
                Letter {
                    name: "q2".into(),
                    sx: -1,
                    sy: -1,
                    z: ZRule {
                        scalar: -i.clone(),
                        target: 3,
                        with_x: true,
                    },
                    square: one_minus_xy(&(-i.clone() * l3.clone())),
                    coproduct: vec![
                        (one.clone(), fcomb_z(one.clone(), -i.clone(), Cyclo::zero(), Cyclo::zero()), 3),
                        (one.clone(), fcomb_z(Cyclo::zero(), Cyclo::zero(), one.clone(), i.clone()), 2),
                    ],
                },
            ];
            let pairs = vec![
                PairRule {
                    lo: 0,
                    hi: 2,
                    kind: PairKind::Anticommute,
                    // lambda5 (x + y - 2)
                    defect: group_elem(&[
                        (1, l5.clone()),
                        (2, l5.clone()),
                        (0, -(l5.clone() + l5.clone())),
                    ]),
                },
                PairRule {
                    lo: 0,
                    hi: 3,
                    kind: PairKind::Anticommute,
                    defect: zero8(),
                },
                PairRule {
                    lo: 1,
                    hi: 2,
                    kind: PairKind::Anticommute,
                    defect: zero8(),
                },
                PairRule {
                    lo: 1,
                    hi: 3,
                    kind: PairKind::Commute,
                    // q2 p2 = p2 q2 + i lambda5 (x - y)
                    defect: group_elem(&[(1, i.clone() * l5.clone()), (2, -(i.clone() * l5.clone()))]),
                },
            ];
            Presentation {
                family: "A7".into(),
                letters,
                pairs,
                quartics: vec![
                    QuarticRule {
                        lo: 0,
                        hi: 1,
                        defect: one_minus_xy(&l2),
                    },
                    QuarticRule {
                        lo: 2,
                        hi: 3,
                        defect: one_minus_xy(&l4),
                    },
                ],
                expected_dim: 512,
            }
        }
        LiftingParams::A4 {
            n1,
            n2,
            scalars,
            forbidden_mu,
        } => {
            let mut letters = Vec::new();
            for name in numbered("X", *n1) {
                letters.push(Letter {
                    name,
                    sx: -1,
                    sy: -1,
                    z: ZRule {
                        scalar: i.clone(),
                        target: letters.len(),
                        with_x: true,
                    },
                    square: zero8(),
                    coproduct: vec![(one.clone(), group_elem(&[(1, one.clone())]), letters.len())],
                });
            }
            for name in numbered("Y", *n2) {
                letters.push(Letter {
                    name,
                    sx: -1,
                    sy: -1,
                    z: ZRule {
                        scalar: i.clone(),
                        target: letters.len(),
                        with_x: true,
                    },
                    square: zero8(),
                    coproduct: vec![(one.clone(), group_elem(&[(2, one.clone())]), letters.len())],
                });
            }
            let p1 = letters.len();
            let p2 = p1 + 1;
            letters.push(Letter {
                name: "p1".into(),
                sx: 1,
                sy: 1,
                z: ZRule {
                    scalar: -one.clone(),
                    target: p1,
                    with_x: false,
                },
                square: one_minus_xy(&scalars.lambda1),
                coproduct: vec![
                    (one.clone(), fcomb_z(one.clone(), -i.clone(), Cyclo::zero(), Cyclo::zero()), p1),
                    (one.clone(), fcomb_z(Cyclo::zero(), Cyclo::zero(), one.clone(), i.clone()), p2),
                ],
            });
            letters.push(Letter {
                name: "p2".into(),
                sx: -1,
                sy: -1,
                z: ZRule {
                    scalar: i.clone(),
                    target: p2,
                    with_x: true,
                },
                square: one_minus_xy(&(i.clone() * scalars.lambda1.clone())),
                coproduct: vec![
                    (one.clone(), fcomb_z(one.clone(), i.clone(), Cyclo::zero(), Cyclo::zero()), p2),
                    (one.clone(), fcomb_z(Cyclo::zero(), Cyclo::zero(), one.clone(), -i.clone()), p1),
                ],
            });
            let mut pairs = Vec::new();
            for j1 in 0..*n1 {
                for j2 in (j1 + 1)..*n1 {
                    pairs.push(PairRule {
                        lo: j1,
                        hi: j2,
                        kind: PairKind::Anticommute,
                        defect: zero8(),
                    });
                }
            }
            for k1 in 0..*n2 {
                for k2 in (k1 + 1)..*n2 {
                    pairs.push(PairRule {
                        lo: n1 + k1,
                        hi: n1 + k2,
                        kind: PairKind::Anticommute,
                        defect: zero8(),
                    });
                }
            }
            for j in 0..*n1 {
                for k in 0..*n2 {
                    pairs.push(PairRule {
                        lo: j,
                        hi: n1 + k,
                        kind: PairKind::Anticommute,
                        defect: one_minus_xy(&scalars.lambda_jk[j][k]),
                    });
                }
            }
            for m in 0..(n1 + n2) {
                // p1 commutes, p2 anticommutes with each one-dim letter
                let mut defect = zero8();
                if m == 0 {
                    if let Some(c) = forbidden_mu {
                        // c [f10 - i f01] z
                        defect = fcomb_z(Cyclo::zero(), Cyclo::zero(), c.clone(), -(i.clone() * c.clone()));
                    }
                }
                pairs.push(PairRule {
                    lo: m,
                    hi: p1,
                    kind: PairKind::Commute,
                    defect,
                });
                pairs.push(PairRule {
                    lo: m,
                    hi: p2,
                    kind: PairKind::Anticommute,
                    defect: zero8(),
                });
            }
            Presentation {
                family: "A4".into(),
                letters,
                pairs,
                quartics: vec![QuarticRule {
                    lo: p1,
                    hi: p2,
                    defect: one_minus_xy(&scalars.lambda2),
                }],
                expected_dim: 8 * (1 << (n1 + n2)) * 8,
            }
        }
    }
}
