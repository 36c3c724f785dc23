//! The catalog of the 22 simple Yetter-Drinfeld modules over the
//! Kac-Paljutkin algebra, the two simple plain modules they are built from,
//! and the standard direct-sum families.
//!
//! Catalog constructors emit the preferred bases in which the diagonal-type
//! braiding analysis is carried out: the two-dimensional W modules come in
//! the p-basis (actions diagonal), with the original w-basis available
//! separately; the square-root family comes in its w-basis, where the
//! braiding is not diagonal.

use super::{direct_sum, h8, H8Module, YdModule};
use crate::cyclo::{Cyclo, CycloMatrix};
use crate::hopf::{f_idem, h8 as hx};

/// A 4th root of unity parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fourth {
    One,
    MinusOne,
    I,
    MinusI,
}

impl Fourth {
    pub fn to_cyclo(self) -> Cyclo {
        match self {
            Fourth::One => Cyclo::one(),
            Fourth::MinusOne => Cyclo::from_int(-1),
            Fourth::I => Cyclo::i(),
            Fourth::MinusI => -Cyclo::i(),
        }
    }
    pub fn token(self) -> &'static str {
        match self {
            Fourth::One => "1",
            Fourth::MinusOne => "-1",
            Fourth::I => "i",
            Fourth::MinusI => "-i",
        }
    }
}

/// A sign parameter (+1 or -1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_cyclo(self) -> Cyclo {
        match self {
            Sign::Plus => Cyclo::one(),
            Sign::Minus => Cyclo::from_int(-1),
        }
    }
    pub fn token(self) -> &'static str {
        match self {
            Sign::Plus => "1",
            Sign::Minus => "-1",
        }
    }
}

/// Group-like element of the Kac-Paljutkin algebra (the group part).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElt {
    One,
    X,
    Y,
    Xy,
}

impl GroupElt {
    pub fn index(self) -> usize {
        match self {
            GroupElt::One => hx::ONE,
            GroupElt::X => hx::X,
            GroupElt::Y => hx::Y,
            GroupElt::Xy => hx::XY,
        }
    }
    pub fn token(self) -> &'static str {
        match self {
            GroupElt::One => "1",
            GroupElt::X => "x",
            GroupElt::Y => "y",
            GroupElt::Xy => "xy",
        }
    }
}

/// The four admissible (g1, g2) pairs for the two-dimensional modules built
/// on the two-dimensional simple plain module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GgPair {
    OneY,
    XOne,
    XyX,
    YXy,
}

impl GgPair {
    pub fn pair(self) -> (GroupElt, GroupElt) {
        match self {
            GgPair::OneY => (GroupElt::One, GroupElt::Y),
            GgPair::XOne => (GroupElt::X, GroupElt::One),
            GgPair::XyX => (GroupElt::Xy, GroupElt::X),
            GgPair::YXy => (GroupElt::Y, GroupElt::Xy),
        }
    }
    pub fn all() -> [GgPair; 4] {
        [GgPair::OneY, GgPair::XOne, GgPair::XyX, GgPair::YXy]
    }
}

/// Branch of the parameter a with (a + 1)^2 = 2: a = -1 + sqrt(2) (Plus) or
/// a = -1 - sqrt(2) (Minus).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SqrtBranch {
    Plus,
    Minus,
}

impl SqrtBranch {
    /// The value of a itself.
    pub fn a(self) -> Cyclo {
        match self {
            SqrtBranch::Plus => Cyclo::sqrt2() - Cyclo::one(),
            SqrtBranch::Minus => -Cyclo::sqrt2() - Cyclo::one(),
        }
    }
    /// a + 1 = +-sqrt(2).
    pub fn a_plus_one(self) -> Cyclo {
        match self {
            SqrtBranch::Plus => Cyclo::sqrt2(),
            SqrtBranch::Minus => -Cyclo::sqrt2(),
        }
    }
    pub fn token(self) -> &'static str {
        match self {
            SqrtBranch::Plus => "s2p",
            SqrtBranch::Minus => "s2m",
        }
    }
}

/// Label of a simple Yetter-Drinfeld module. Exactly 22 labels are
/// constructible: 8 one-dimensional and 14 two-dimensional.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleLabel {
    /// One-dimensional module with z-eigenvalue b and group-like coaction g.
    OneDim(Fourth, GroupElt),
    /// Two-dimensional module with coaction legs 1 and xy.
    Pair1Xy,
    /// Two-dimensional module with coaction legs x and y.
    PairXy,
    /// Two-dimensional module on the 2-dimensional simple plain module with
    /// coaction legs (g1, g2).
    PairGg(GgPair),
    /// Two-dimensional module with z-heavy coaction, parameters b1, b2.
    W(Sign, Sign),
    /// First square-root family member.
    W1(SqrtBranch),
    /// Second square-root family member.
    W2(SqrtBranch),
}

impl SimpleLabel {
    /// All 22 labels in a fixed order.
    pub fn all() -> Vec<SimpleLabel> {
        let mut v = Vec::with_capacity(22);
        for (b, g) in [
            (Fourth::One, GroupElt::One),
            (Fourth::MinusOne, GroupElt::One),
            (Fourth::One, GroupElt::Xy),
            (Fourth::MinusOne, GroupElt::Xy),
            (Fourth::I, GroupElt::X),
            (Fourth::MinusI, GroupElt::X),
            (Fourth::I, GroupElt::Y),
            (Fourth::MinusI, GroupElt::Y),
        ] {
            v.push(SimpleLabel::OneDim(b, g));
        }
        v.push(SimpleLabel::Pair1Xy);
        v.push(SimpleLabel::PairXy);
        for gg in GgPair::all() {
            v.push(SimpleLabel::PairGg(gg));
        }
        for b1 in [Sign::Plus, Sign::Minus] {
            for b2 in [Sign::Plus, Sign::Minus] {
                v.push(SimpleLabel::W(b1, b2));
            }
        }
        for a in [SqrtBranch::Plus, SqrtBranch::Minus] {
            v.push(SimpleLabel::W1(a));
        }
        for a in [SqrtBranch::Plus, SqrtBranch::Minus] {
            v.push(SimpleLabel::W2(a));
        }
        v
    }

    pub fn dim(&self) -> usize {
        match self {
            SimpleLabel::OneDim(..) => 1,
            _ => 2,
        }
    }

    pub fn display(&self) -> String {
        match self {
            SimpleLabel::OneDim(b, g) => format!("M({},{})", b.token(), g.token()),
            SimpleLabel::Pair1Xy => "P1xy".into(),
            SimpleLabel::PairXy => "Pxy".into(),
            SimpleLabel::PairGg(gg) => {
                let (g1, g2) = gg.pair();
                format!("M2({},{})", g1.token(), g2.token())
            }
            SimpleLabel::W(b1, b2) => format!("W({},{})", b1.token(), b2.token()),
            SimpleLabel::W1(a) => format!("W1({})", a.token()),
            SimpleLabel::W2(a) => format!("W2({})", a.token()),
        }
    }
}

impl std::fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display())
    }
}

/// Invalid simple-module parameters.
#[derive(Debug, Clone, thiserror::Error)]
#[error("invalid simple label: {reason}")]
pub struct InvalidLabel {
    pub reason: String,
}

/// The one-dimensional simple plain module with z-eigenvalue b (x and y act
/// by b^2).
pub fn v1(b: Fourth) -> H8Module {
    let bc = b.to_cyclo();
    let b2 = bc.pow(2);
    let one = |v: Cyclo| {
        let mut m = CycloMatrix::zero(1, 1);
        m.set(0, 0, v);
        m
    };
    H8Module::from_generators(one(b2.clone()), one(b2), one(bc))
}

/// The two-dimensional simple plain module.
pub fn v2() -> H8Module {
    let x = CycloMatrix::from_rows(vec![
        vec![Cyclo::zero(), Cyclo::one()],
        vec![Cyclo::one(), Cyclo::zero()],
    ]);
    let y = CycloMatrix::from_rows(vec![
        vec![Cyclo::zero(), Cyclo::from_int(-1)],
        vec![Cyclo::from_int(-1), Cyclo::zero()],
    ]);
    let z = CycloMatrix::from_rows(vec![
        vec![Cyclo::one(), Cyclo::zero()],
        vec![Cyclo::zero(), Cyclo::from_int(-1)],
    ]);
    H8Module::from_generators(x, y, z)
}

fn diag2(a: Cyclo, b: Cyclo) -> CycloMatrix {
    let mut m = CycloMatrix::zero(2, 2);
    m.set(0, 0, a);
    m.set(1, 1, b);
    m
}

fn offdiag2(top: Cyclo, bottom: Cyclo) -> CycloMatrix {
    // [[0, top], [bottom, 0]]
    let mut m = CycloMatrix::zero(2, 2);
    m.set(0, 1, top);
    m.set(1, 0, bottom);
    m
}

/// Coaction terms from an algebra element paired with a module index.
fn coact_elem(elem: &[Cyclo], m: usize) -> Vec<(Cyclo, usize, usize)> {
    elem.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(a, c)| (c.clone(), a, m))
        .collect()
}

/// The w element: the order-two generator that replaces z in the
/// alternative presentation of the algebra,
/// w = (f00 + sqrt(i) f10 + f01/sqrt(i) + i f11) z.
pub fn w_element() -> Vec<Cyclo> {
    let h = h8();
    let zeta = Cyclo::zeta();
    let inv_sqrt_i = -Cyclo::zeta_pow(3);
    let mut acc = vec![Cyclo::zero(); 8];
    for (f, s) in [
        (f_idem(0, 0), Cyclo::one()),
        (f_idem(1, 0), zeta),
        (f_idem(0, 1), inv_sqrt_i),
        (f_idem(1, 1), Cyclo::i()),
    ] {
        for (k, v) in f.iter().enumerate() {
            acc[k] += v * &s;
        }
    }
    h.product(&acc, &h.basis_element(hx::Z))
}

/// Constructs the simple module for a label, in its preferred basis.
pub fn simple(label: &SimpleLabel) -> Result<YdModule, InvalidLabel> {
    let h = h8();
    match label {
        SimpleLabel::OneDim(b, g) => {
            let ok = matches!(
                (b, g),
                (Fourth::One | Fourth::MinusOne, GroupElt::One | GroupElt::Xy)
                    | (Fourth::I | Fourth::MinusI, GroupElt::X | GroupElt::Y)
            );
            if !ok {
                return Err(InvalidLabel {
                    reason: format!(
                        "one-dimensional modules require b in {{1,-1}} with g in {{1,xy}} or b in {{i,-i}} with g in {{x,y}}; got ({},{})",
                        b.token(),
                        g.token()
                    ),
                });
            }
            let m = v1(*b);
            let coaction = vec![vec![(Cyclo::one(), g.index(), 0)]];
            Ok(YdModule::new(label.display(), m.actions, coaction))
        }
        SimpleLabel::Pair1Xy => {
            let m = H8Module::from_generators(
                diag2(Cyclo::from_int(-1), Cyclo::from_int(-1)),
                diag2(Cyclo::from_int(-1), Cyclo::from_int(-1)),
                offdiag2(Cyclo::i(), Cyclo::i()),
            );
            let coaction = vec![
                vec![(Cyclo::one(), hx::ONE, 0)],
                vec![(Cyclo::one(), hx::XY, 1)],
            ];
            Ok(YdModule::new(label.display(), m.actions, coaction))
        }
        SimpleLabel::PairXy => {
            let m = H8Module::from_generators(
                CycloMatrix::identity(2),
                CycloMatrix::identity(2),
                offdiag2(Cyclo::one(), Cyclo::one()),
            );
            let coaction = vec![
                vec![(Cyclo::one(), hx::X, 0)],
                vec![(Cyclo::one(), hx::Y, 1)],
            ];
            Ok(YdModule::new(label.display(), m.actions, coaction))
        }
        SimpleLabel::PairGg(gg) => {
            let (g1, g2) = gg.pair();
            let m = H8Module::from_generators(
                diag2(Cyclo::one(), Cyclo::from_int(-1)),
                diag2(Cyclo::from_int(-1), Cyclo::one()),
                offdiag2(Cyclo::one(), Cyclo::one()),
            );
            let coaction = vec![
                vec![(Cyclo::one(), g1.index(), 0)],
                vec![(Cyclo::one(), g2.index(), 1)],
            ];
            Ok(YdModule::new(label.display(), m.actions, coaction))
        }
        SimpleLabel::W(b1, b2) => {
            // p-basis: p1 = w1 + i b1 w2, p2 = w1 - i b1 w2; actions diagonal.
            let ib1 = Cyclo::i() * b1.to_cyclo();
            let b2c = b2.to_cyclo();
            let m = H8Module::from_generators(
                diag2(Cyclo::one(), Cyclo::from_int(-1)),
                diag2(Cyclo::one(), Cyclo::from_int(-1)),
                diag2(b2c.clone(), -(ib1.clone() * b2c)),
            );
            let z = h.basis_element(hx::Z);
            let comb = |c00: Cyclo, c11: Cyclo, c10: Cyclo, c01: Cyclo| -> Vec<Cyclo> {
                let mut acc = vec![Cyclo::zero(); 8];
                for (f, s) in [
                    (f_idem(0, 0), c00),
                    (f_idem(1, 1), c11),
                    (f_idem(1, 0), c10),
                    (f_idem(0, 1), c01),
                ] {
                    for (k, v) in f.iter().enumerate() {
                        acc[k] += v * &s;
                    }
                }
                h.product(&acc, &z)
            };
            // rho(p1) = [f00 - i b1 f11] z (x) p1 + [f10 + i b1 f01] z (x) p2
            let leg11 = comb(Cyclo::one(), -ib1.clone(), Cyclo::zero(), Cyclo::zero());
            let leg12 = comb(Cyclo::zero(), Cyclo::zero(), Cyclo::one(), ib1.clone());
            // rho(p2) = [f00 + i b1 f11] z (x) p2 + [f10 - i b1 f01] z (x) p1
            let leg22 = comb(Cyclo::one(), ib1.clone(), Cyclo::zero(), Cyclo::zero());
            let leg21 = comb(Cyclo::zero(), Cyclo::zero(), Cyclo::one(), -ib1);
            let mut row1 = coact_elem(&leg11, 0);
            row1.extend(coact_elem(&leg12, 1));
            let mut row2 = coact_elem(&leg21, 0);
            row2.extend(coact_elem(&leg22, 1));
            Ok(YdModule::new(label.display(), m.actions, vec![row1, row2]))
        }
        SimpleLabel::W1(a) | SimpleLabel::W2(a) => {
            let ap1 = a.a_plus_one();
            let half = Cyclo::from_ratio(1, 2);
            let z_up = half.clone() * (Cyclo::one() + Cyclo::i()) * ap1.clone();
            let z_dn = half.clone() * (Cyclo::one() - Cyclo::i()) * ap1;
            // W1: x = diag(-1, 1), y = diag(1, -1); W2 swaps the signs.
            let (xm, ym) = match label {
                SimpleLabel::W1(_) => (
                    diag2(Cyclo::from_int(-1), Cyclo::one()),
                    diag2(Cyclo::one(), Cyclo::from_int(-1)),
                ),
                _ => (
                    diag2(Cyclo::one(), Cyclo::from_int(-1)),
                    diag2(Cyclo::from_int(-1), Cyclo::one()),
                ),
            };
            let zm = offdiag2(z_up, z_dn);
            let m = H8Module::from_generators(xm, ym, zm);
            let w = w_element();
            let x = h.basis_element(hx::X);
            let y = h.basis_element(hx::Y);
            let xy = h.basis_element(hx::XY);
            let one = h.unit_element();
            let add = |a: &[Cyclo], b: &[Cyclo]| -> Vec<Cyclo> {
                a.iter().zip(b).map(|(u, v)| u.clone() + v.clone()).collect()
            };
            let sub = |a: &[Cyclo], b: &[Cyclo]| -> Vec<Cyclo> {
                a.iter().zip(b).map(|(u, v)| u.clone() - v.clone()).collect()
            };
            let scale = |a: &[Cyclo], s: &Cyclo| -> Vec<Cyclo> { a.iter().map(|u| u * s).collect() };
            let s_half = half.clone();
            let s_half_zeta = half * Cyclo::zeta();
            // rho(w1) = (x+y)w/2 (x) w1 + sqrt(i)(x-y)w/2 (x) w2
            let leg11 = scale(&h.product(&add(&x, &y), &w), &s_half);
            let leg12 = scale(&h.product(&sub(&x, &y), &w), &s_half_zeta);
            // rho(w2) = (1+xy)w/2 (x) w2 + sqrt(i)(1-xy)w/2 (x) w1
            let leg22 = scale(&h.product(&add(&one, &xy), &w), &s_half);
            let leg21 = scale(&h.product(&sub(&one, &xy), &w), &s_half_zeta);
            let mut row1 = coact_elem(&leg11, 0);
            row1.extend(coact_elem(&leg12, 1));
            let mut row2 = coact_elem(&leg21, 0);
            row2.extend(coact_elem(&leg22, 1));
            Ok(YdModule::new(label.display(), m.actions, vec![row1, row2]))
        }
    }
}

/// The W modules in their original w-basis: w1 = v (x) (1 + i b1 y)z,
/// w2 = v (x) x(1 - i b1 y)z.  The p-basis constructor is the catalog
/// default; this variant exists for basis-independence checks.
pub fn simple_w_basis(b1: Sign, b2: Sign) -> YdModule {
    let h = h8();
    let ib1 = Cyclo::i() * b1.to_cyclo();
    let alpha = Cyclo::from_ratio(1, 2) * (Cyclo::one() - ib1.clone()) * b2.to_cyclo();
    let xm = offdiag2(-ib1.clone(), ib1.clone());
    let ym = xm.clone();
    let mut zm = CycloMatrix::zero(2, 2);
    zm.set(0, 0, alpha.clone());
    zm.set(0, 1, alpha.clone());
    zm.set(1, 0, -alpha.clone());
    zm.set(1, 1, alpha);
    let m = H8Module::from_generators(xm, ym, zm);
    let half = Cyclo::from_ratio(1, 2);
    let z = h.basis_element(hx::Z);
    let x = h.basis_element(hx::X);
    let y = h.basis_element(hx::Y);
    let one = h.unit_element();
    let add = |a: &[Cyclo], b: &[Cyclo]| -> Vec<Cyclo> {
        a.iter().zip(b).map(|(u, v)| u.clone() + v.clone()).collect()
    };
    let sub = |a: &[Cyclo], b: &[Cyclo]| -> Vec<Cyclo> {
        a.iter().zip(b).map(|(u, v)| u.clone() - v.clone()).collect()
    };
    let scale = |a: &[Cyclo], s: &Cyclo| -> Vec<Cyclo> { a.iter().map(|u| u * s).collect() };
    // rho(w1) = (1+y)z/2 (x) w1 + (1-y)z/2 (x) w2
    let leg11 = scale(&h.product(&add(&one, &y), &z), &half);
    let leg12 = scale(&h.product(&sub(&one, &y), &z), &half);
    // rho(w2) = x(1+y)z/2 (x) w2 + x(1-y)z/2 (x) w1
    let leg22 = scale(&h.product(&x, &h.product(&add(&one, &y), &z)), &half);
    let leg21 = scale(&h.product(&x, &h.product(&sub(&one, &y), &z)), &half);
    let mut row1 = coact_elem(&leg11, 0);
    row1.extend(coact_elem(&leg12, 1));
    let mut row2 = coact_elem(&leg21, 0);
    row2.extend(coact_elem(&leg22, 1));
    YdModule::new(
        format!("Ww({},{})", b1.token(), b2.token()),
        m.actions,
        vec![row1, row2],
    )
}

/// Specification of the direct-sum families whose Nichols algebras are
/// finite dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OmegaSpec {
    /// n1 copies of M(i,x), n2 of M(-i,x), n3 of M(i,y), n4 of M(-i,y);
    /// at least one copy in total.
    Omega1(usize, usize, usize, usize),
    /// n1 M(i,x) + n2 M(-i,x) + M2(xy,x).
    Omega2(usize, usize),
    /// n1 M(i,y) + n2 M(-i,y) + M2(y,xy).
    Omega3(usize, usize),
    /// n1 M(i,x) + n2 M(i,y) + W(1,-1).
    Omega4(usize, usize),
    /// n1 M(-i,x) + n2 M(-i,y) + W(-1,-1).
    Omega5(usize, usize),
    /// M2(xy,x) + M2(y,xy).
    Omega6,
    /// W(1,-1) + W(-1,-1).
    Omega7,
}

/// Invalid multiplicities for an Omega family.
#[derive(Debug, Clone, thiserror::Error)]
#[error("invalid Omega specification: {reason}")]
pub struct InvalidOmega {
    pub reason: String,
}

/// Builds the direct-sum module for an Omega specification.
pub fn realize(spec: &OmegaSpec) -> Result<YdModule, InvalidOmega> {
    let s = |l: SimpleLabel| simple(&l).expect("catalog label");
    let mut parts: Vec<YdModule> = Vec::new();
    let push_copies = |parts: &mut Vec<YdModule>, m: YdModule, n: usize| {
        for _ in 0..n {
            parts.push(m.clone());
        }
    };
    match spec {
        OmegaSpec::Omega1(n1, n2, n3, n4) => {
            if n1 + n2 + n3 + n4 == 0 {
                return Err(InvalidOmega {
                    reason: "Omega1 requires at least one summand".into(),
                });
            }
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::I, GroupElt::X)), *n1);
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::MinusI, GroupElt::X)), *n2);
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::I, GroupElt::Y)), *n3);
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::MinusI, GroupElt::Y)), *n4);
        }
        OmegaSpec::Omega2(n1, n2) => {
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::I, GroupElt::X)), *n1);
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::MinusI, GroupElt::X)), *n2);
            parts.push(s(SimpleLabel::PairGg(GgPair::XyX)));
        }
        OmegaSpec::Omega3(n1, n2) => {
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::I, GroupElt::Y)), *n1);
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::MinusI, GroupElt::Y)), *n2);
            parts.push(s(SimpleLabel::PairGg(GgPair::YXy)));
        }
        OmegaSpec::Omega4(n1, n2) => {
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::I, GroupElt::X)), *n1);
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::I, GroupElt::Y)), *n2);
            parts.push(s(SimpleLabel::W(Sign::Plus, Sign::Minus)));
        }
        OmegaSpec::Omega5(n1, n2) => {
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::MinusI, GroupElt::X)), *n1);
            push_copies(&mut parts, s(SimpleLabel::OneDim(Fourth::MinusI, GroupElt::Y)), *n2);
            parts.push(s(SimpleLabel::W(Sign::Minus, Sign::Minus)));
        }
        OmegaSpec::Omega6 => {
            parts.push(s(SimpleLabel::PairGg(GgPair::XyX)));
            parts.push(s(SimpleLabel::PairGg(GgPair::YXy)));
        }
        OmegaSpec::Omega7 => {
            parts.push(s(SimpleLabel::W(Sign::Plus, Sign::Minus)));
            parts.push(s(SimpleLabel::W(Sign::Minus, Sign::Minus)));
        }
    }
    direct_sum(&parts).map_err(|e| InvalidOmega { reason: e })
}
