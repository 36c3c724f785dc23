use super::*;
use crate::cyclo::{Cyclo, CycloMatrix};
use crate::hopf::{automorphisms, h8 as hx};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn all_twenty_two_simples_pass_verification() {
    let labels = SimpleLabel::all();
    assert_eq!(labels.len(), 22);
    for label in labels {
        let m = simple(&label).unwrap();
        assert_eq!(m.dim, label.dim());
        let report = verify_yd(&m);
        assert!(report.all_ok(), "{} fails: {:?}", label, report.failing());
    }
}

#[test]
fn w_basis_variants_pass_verification() {
    for b1 in [Sign::Plus, Sign::Minus] {
        for b2 in [Sign::Plus, Sign::Minus] {
            let m = simple_w_basis(b1, b2);
            let report = verify_yd(&m);
            assert!(report.all_ok(), "{} fails: {:?}", m.name, report.failing());
        }
    }
}

#[test]
fn one_dimensional_module_action_and_coaction() {
    let m = simple(&SimpleLabel::OneDim(Fourth::I, GroupElt::X)).unwrap();
    assert_eq!(m.actions[hx::Z].get(0, 0), Cyclo::i());
    assert_eq!(m.actions[hx::X].get(0, 0), Cyclo::from_int(-1));
    assert_eq!(m.coaction[0], vec![(Cyclo::one(), hx::X, 0)]);
}

#[test]
fn invalid_one_dimensional_labels_are_rejected() {
    assert!(simple(&SimpleLabel::OneDim(Fourth::I, GroupElt::One)).is_err());
    assert!(simple(&SimpleLabel::OneDim(Fourth::One, GroupElt::X)).is_err());
    assert!(simple(&SimpleLabel::OneDim(Fourth::MinusOne, GroupElt::Y)).is_err());
}

#[test]
fn pair_gg_matrices_match_the_construction() {
    let m = simple(&SimpleLabel::PairGg(GgPair::XyX)).unwrap();
    assert_eq!(
        m.actions[hx::X],
        CycloMatrix::from_rows(vec![
            vec![Cyclo::one(), Cyclo::zero()],
            vec![Cyclo::zero(), Cyclo::from_int(-1)],
        ])
    );
    assert_eq!(
        m.actions[hx::Z],
        CycloMatrix::from_rows(vec![
            vec![Cyclo::zero(), Cyclo::one()],
            vec![Cyclo::one(), Cyclo::zero()],
        ])
    );
    assert_eq!(m.coaction[0], vec![(Cyclo::one(), hx::XY, 0)]);
    assert_eq!(m.coaction[1], vec![(Cyclo::one(), hx::X, 1)]);
}

#[test]
fn w_module_coaction_in_w_basis() {
    // rho(w1) = (1+y)z/2 (x) w1 + (1-y)z/2 (x) w2
    let m = simple_w_basis(Sign::Plus, Sign::Minus);
    let half = Cyclo::from_ratio(1, 2);
    let mut expect = vec![
        (half.clone(), hx::Z, 0),
        (half.clone(), hx::YZ, 0),
        (half.clone(), hx::Z, 1),
        (-half, hx::YZ, 1),
    ];
    expect.sort_by_key(|(_, a, m)| (*a, *m));
    assert_eq!(m.coaction[0], expect);
}

#[test]
fn w_module_p_basis_and_w_basis_agree_under_the_basis_change() {
    for b1 in [Sign::Plus, Sign::Minus] {
        for b2 in [Sign::Plus, Sign::Minus] {
            let w = simple_w_basis(b1, b2);
            let p = simple(&SimpleLabel::W(b1, b2)).unwrap();
            // p1 = w1 + i b1 w2, p2 = w1 - i b1 w2
            let ib1 = Cyclo::i() * b1.to_cyclo();
            let basis = CycloMatrix::from_rows(vec![
                vec![Cyclo::one(), Cyclo::one()],
                vec![ib1.clone(), -ib1],
            ]);
            let transformed = w.change_basis("transformed", &basis);
            assert_eq!(transformed.actions, p.actions, "actions differ for ({:?},{:?})", b1, b2);
            assert_eq!(transformed.coaction, p.coaction, "coactions differ for ({:?},{:?})", b1, b2);
        }
    }
}

#[test]
fn w_module_z_action_is_diagonal_in_p_basis() {
    let m = simple(&SimpleLabel::W(Sign::Plus, Sign::Minus)).unwrap();
    assert_eq!(m.actions[hx::Z].get(0, 0), Cyclo::from_int(-1));
    assert_eq!(m.actions[hx::Z].get(1, 1), Cyclo::i());
    assert_eq!(m.actions[hx::Z].get(0, 1), Cyclo::zero());
}

#[test]
fn sqrt_family_w_action_matches_the_expanded_w_element() {
    let half = Cyclo::from_ratio(1, 2);
    let inv_sqrt_i = -Cyclo::zeta_pow(3);
    let sqrt_i = Cyclo::zeta();
    for branch in [SqrtBranch::Plus, SqrtBranch::Minus] {
        let ap1 = branch.a_plus_one();
        let w = w_element();
        let m1 = simple(&SimpleLabel::W1(branch)).unwrap();
        let act = m1.action_of(&w);
        let c1 = half.clone() * inv_sqrt_i.clone() * (Cyclo::one() - Cyclo::i()) * ap1.clone();
        let c2 = half.clone() * sqrt_i.clone() * (Cyclo::one() + Cyclo::i()) * ap1.clone();
        // w . w1 = c1 w2, w . w2 = c2 w1
        assert_eq!(act.get(1, 0), c1);
        assert_eq!(act.get(0, 1), c2);
        assert_eq!(act.get(0, 0), Cyclo::zero());

        let m2 = simple(&SimpleLabel::W2(branch)).unwrap();
        let act = m2.action_of(&w);
        let c1 = half.clone() * sqrt_i.clone() * (Cyclo::one() - Cyclo::i()) * ap1.clone();
        let c2 = half.clone() * inv_sqrt_i.clone() * (Cyclo::one() + Cyclo::i()) * ap1;
        assert_eq!(act.get(1, 0), c1);
        assert_eq!(act.get(0, 1), c2);
    }
    // w itself squares to 1
    let h = h8();
    let w = w_element();
    assert_eq!(h.product(&w, &w), h.unit_element());
}

#[test]
fn sqrt_family_p_basis_has_plus_minus_z_action() {
    // p1 = sqrt(i) w1 + w2, p2 = -sqrt(i) w1 + w2 diagonalize x, y into swaps
    // and z into diag(b, -b) where a + 1 = b sqrt(2).
    for (branch, b) in [(SqrtBranch::Plus, Cyclo::one()), (SqrtBranch::Minus, Cyclo::from_int(-1))] {
        let m = simple(&SimpleLabel::W1(branch)).unwrap();
        let basis = CycloMatrix::from_rows(vec![
            vec![Cyclo::zeta(), -Cyclo::zeta()],
            vec![Cyclo::one(), Cyclo::one()],
        ]);
        let t = m.change_basis("p-basis", &basis);
        assert_eq!(
            t.actions[hx::X],
            CycloMatrix::from_rows(vec![
                vec![Cyclo::zero(), Cyclo::one()],
                vec![Cyclo::one(), Cyclo::zero()],
            ])
        );
        assert_eq!(t.actions[hx::Z].get(0, 0), b);
        assert_eq!(t.actions[hx::Z].get(1, 1), -b);
    }
}

#[test]
fn mutating_any_entry_breaks_an_axiom() {
    let mut rng = StdRng::seed_from_u64(2024);
    for label in SimpleLabel::all() {
        let m = simple(&label).unwrap();
        for _ in 0..10 {
            let mut bad = m.clone();
            if rng.gen_bool(0.5) {
                let hi = rng.gen_range(0..8);
                let i = rng.gen_range(0..m.dim);
                let j = rng.gen_range(0..m.dim);
                let v = bad.actions[hi].get(i, j) + Cyclo::one();
                bad.actions[hi].set(i, j, v);
            } else {
                let j = rng.gen_range(0..m.dim);
                let a = rng.gen_range(0..8);
                let mm = rng.gen_range(0..m.dim);
                let mut terms = bad.coaction[j].clone();
                if let Some(t) = terms.iter_mut().find(|(_, aa, mmm)| *aa == a && *mmm == mm) {
                    t.0 += Cyclo::one();
                } else {
                    terms.push((Cyclo::one(), a, mm));
                }
                terms.sort_by_key(|(_, a, m)| (*a, *m));
                bad.coaction[j] = terms;
            }
            assert!(
                !verify_yd(&bad).all_ok(),
                "mutation of {} went undetected",
                label
            );
        }
    }
}

#[test]
fn swapping_w_coaction_rows_fails_compatibility() {
    let m = simple(&SimpleLabel::W(Sign::Plus, Sign::Minus)).unwrap();
    let mut bad = m.clone();
    bad.coaction.swap(0, 1);
    // re-point the module indices so only the algebra legs are swapped
    for (j, terms) in bad.coaction.iter_mut().enumerate() {
        for t in terms.iter_mut() {
            t.2 = if t.2 == 0 { 1 } else { 0 };
        }
        let _ = j;
    }
    let report = verify_yd(&bad);
    assert!(!report.all_ok());
}

#[test]
fn direct_sum_passes_and_errors_on_empty() {
    let a = simple(&SimpleLabel::OneDim(Fourth::I, GroupElt::X)).unwrap();
    let b = simple(&SimpleLabel::PairGg(GgPair::XyX)).unwrap();
    let s = direct_sum(&[a, b]).unwrap();
    assert_eq!(s.dim, 3);
    assert!(verify_yd(&s).all_ok());
    assert!(direct_sum(&[]).is_err());
}

#[test]
fn omega_realizations() {
    let o6 = realize(&OmegaSpec::Omega6).unwrap();
    assert_eq!(o6.dim, 4);
    assert!(verify_yd(&o6).all_ok());
    let o7 = realize(&OmegaSpec::Omega7).unwrap();
    assert_eq!(o7.dim, 4);
    let o1 = realize(&OmegaSpec::Omega1(1, 0, 0, 0)).unwrap();
    let m = simple(&SimpleLabel::OneDim(Fourth::I, GroupElt::X)).unwrap();
    assert_eq!(o1.actions, m.actions);
    assert_eq!(o1.coaction, m.coaction);
    assert!(realize(&OmegaSpec::Omega1(0, 0, 0, 0)).is_err());
}

#[test]
fn twist_by_identity_is_verbatim() {
    let taus = automorphisms();
    let m = simple(&SimpleLabel::W(Sign::Plus, Sign::Minus)).unwrap();
    let t = twist(&m, &taus[0]);
    assert_eq!(t.actions, m.actions);
    assert_eq!(t.coaction, m.coaction);
}

#[test]
fn twist_moves_one_dimensionals_as_expected() {
    let taus = automorphisms();
    let m = simple(&SimpleLabel::OneDim(Fourth::I, GroupElt::X)).unwrap();
    let t = twist(&m, &taus[2]);
    assert!(verify_yd(&t).all_ok());
    let target = simple(&SimpleLabel::OneDim(Fourth::MinusI, GroupElt::Y)).unwrap();
    assert_eq!(hom_space(&t, &target).len(), 1);
    assert!(is_isomorphic(&t, &target));
}

#[test]
fn twist_moves_w_modules_as_expected() {
    let taus = automorphisms();
    let m = simple(&SimpleLabel::W(Sign::Plus, Sign::Minus)).unwrap();
    let t = twist(&m, &taus[2]);
    assert!(verify_yd(&t).all_ok());
    let target = simple(&SimpleLabel::W(Sign::Minus, Sign::Minus)).unwrap();
    assert!(is_isomorphic(&t, &target));
}

#[test]
fn each_twist_of_a_simple_is_a_single_simple() {
    let taus = automorphisms();
    for label in SimpleLabel::all() {
        let m = simple(&label).unwrap();
        for tau in &taus {
            let t = twist(&m, tau);
            let dec = decompose(&t).unwrap();
            let nonzero: Vec<_> = dec.multiplicities.iter().filter(|(_, n)| *n > 0).collect();
            assert_eq!(nonzero.len(), 1, "twist of {} is not simple", label);
            assert_eq!(nonzero[0].1, 1);
        }
    }
}

#[test]
fn schur_property_within_the_catalog() {
    let simples: Vec<(SimpleLabel, YdModule)> = SimpleLabel::all()
        .into_iter()
        .map(|l| {
            let m = simple(&l).unwrap();
            (l, m)
        })
        .collect();
    for (la, ma) in &simples {
        for (lb, mb) in &simples {
            let d = hom_space(ma, mb).len();
            if la == lb {
                assert_eq!(d, 1, "hom({}, {}) should be 1", la, lb);
            } else {
                assert_eq!(d, 0, "hom({}, {}) should be 0", la, lb);
            }
        }
    }
}

#[test]
fn radford_of_v1_has_dimension_eight_and_verifies() {
    for b in [Fourth::One, Fourth::MinusOne, Fourth::I, Fourth::MinusI] {
        let r = radford(&v1(b));
        assert_eq!(r.dim, 8);
        assert!(verify_yd(&r).all_ok(), "radford(V1({:?})) fails", b);
    }
    let r = radford(&v2());
    assert_eq!(r.dim, 16);
    assert!(verify_yd(&r).all_ok());
}

#[test]
fn z_action_on_radford_group_slice_matches_the_closed_form() {
    // z . (v (x) 1) = (b v / 4) (x) [1 + x + b^2(1-x)][1 + y + b^2(1-y)]
    let h = h8();
    for b in [Fourth::One, Fourth::MinusOne, Fourth::I, Fourth::MinusI] {
        let bc = b.to_cyclo();
        let b2 = bc.pow(2);
        let r = radford(&v1(b));
        let col = r.actions[hx::Z].col(0); // basis (v (x) 1) sits at index 0
        let one = h.unit_element();
        let x = h.basis_element(hx::X);
        let y = h.basis_element(hx::Y);
        let mut fx = vec![Cyclo::zero(); 8];
        let mut fy = vec![Cyclo::zero(); 8];
        for k in 0..8 {
            fx[k] = one[k].clone() + x[k].clone() + b2.clone() * (one[k].clone() - x[k].clone());
            fy[k] = one[k].clone() + y[k].clone() + b2.clone() * (one[k].clone() - y[k].clone());
        }
        let prod = h.product(&fx, &fy);
        let quarter = Cyclo::from_ratio(1, 4);
        let expect: Vec<Cyclo> = prod.iter().map(|c| c * &(bc.clone() * quarter.clone())).collect();
        let mut got = vec![Cyclo::zero(); 8];
        for (i, v) in col {
            got[i] = v; // module index = 0*8 + algebra index
        }
        assert_eq!(got, expect, "closed form fails for b = {:?}", b);
    }
}

#[test]
fn radford_z_slice_of_v1_splits_into_w_modules() {
    for (b, sign) in [(Fourth::One, Sign::Plus), (Fourth::MinusOne, Sign::Minus)] {
        let r = radford(&v1(b));
        let span = r.submodule("z-slice", &[4, 5, 6, 7]).unwrap();
        assert!(verify_yd(&span).all_ok());
        let dec = decompose(&span).unwrap();
        let mut labels = dec.labels();
        labels.sort();
        let mut expect = vec![
            SimpleLabel::W(Sign::Plus, sign),
            SimpleLabel::W(Sign::Minus, sign),
        ];
        expect.sort();
        assert_eq!(labels, expect);
        // two-dimensional hom space against the direct sum
        let sum = direct_sum(&[
            simple(&SimpleLabel::W(Sign::Plus, sign)).unwrap(),
            simple(&SimpleLabel::W(Sign::Minus, sign)).unwrap(),
        ])
        .unwrap();
        assert_eq!(hom_space(&sum, &span).len(), 2);
    }
}

#[test]
fn radford_of_v2_contains_both_sqrt_branches() {
    let r = radford(&v2());
    let dec = decompose(&r).unwrap();
    let labels = dec.labels();
    for branch in [SqrtBranch::Plus, SqrtBranch::Minus] {
        assert!(labels.contains(&SimpleLabel::W1(branch)), "missing W1({:?})", branch);
        assert!(labels.contains(&SimpleLabel::W2(branch)), "missing W2({:?})", branch);
    }
}

#[test]
fn radford_union_covers_the_whole_catalog() {
    let mut seen = std::collections::BTreeSet::new();
    for b in [Fourth::One, Fourth::MinusOne, Fourth::I, Fourth::MinusI] {
        let dec = decompose(&radford(&v1(b))).unwrap();
        for l in dec.labels() {
            seen.insert(l);
        }
    }
    for l in decompose(&radford(&v2())).unwrap().labels() {
        seen.insert(l);
    }
    assert_eq!(seen.len(), 22, "union misses labels: seen {:?}", seen);
}

#[test]
fn decompose_is_additive_on_random_sums() {
    let mut rng = StdRng::seed_from_u64(31);
    let labels = SimpleLabel::all();
    for _ in 0..6 {
        let pick_a = labels[rng.gen_range(0..labels.len())].clone();
        let pick_b = labels[rng.gen_range(0..labels.len())].clone();
        let a = simple(&pick_a).unwrap();
        let b = simple(&pick_b).unwrap();
        let sum = direct_sum(&[a.clone(), b.clone()]).unwrap();
        let da = decompose(&a).unwrap();
        let db = decompose(&b).unwrap();
        let ds = decompose(&sum).unwrap();
        let mut merged: std::collections::BTreeMap<SimpleLabel, usize> = Default::default();
        for (l, n) in da.multiplicities.into_iter().chain(db.multiplicities) {
            *merged.entry(l).or_insert(0) += n;
        }
        let got: std::collections::BTreeMap<SimpleLabel, usize> =
            ds.multiplicities.into_iter().collect();
        assert_eq!(merged, got);
    }
}

#[test]
fn radford_z_slice_of_gaussian_v1_reports_its_decomposition() {
    // The group slice of the module built on V1(+-i) is addressed by the
    // closed form; the z-slice decomposition is recorded output.
    for b in [Fourth::I, Fourth::MinusI] {
        let r = radford(&v1(b));
        let span = r.submodule("z-slice", &[4, 5, 6, 7]).unwrap();
        assert!(verify_yd(&span).all_ok());
        let dec = decompose(&span).unwrap();
        assert_eq!(dec.total_dim(), 4);
        let mut labels = dec.labels();
        labels.sort();
        // computed output, pinned as a regression value
        let mut expect = match b {
            Fourth::I => vec![
                SimpleLabel::W(Sign::Plus, Sign::Minus),
                SimpleLabel::W(Sign::Minus, Sign::Plus),
            ],
            _ => vec![
                SimpleLabel::W(Sign::Plus, Sign::Plus),
                SimpleLabel::W(Sign::Minus, Sign::Minus),
            ],
        };
        expect.sort();
        assert_eq!(labels, expect, "z-slice of V1({:?}) decomposed differently", b);
    }
}
