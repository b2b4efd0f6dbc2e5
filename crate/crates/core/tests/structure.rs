use qfock::fock::*;
use qfock::linalg::Matrix;
use qfock::structure::*;
use qfock::QuadScalar;

fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

fn key(k: &[u32], l: &[u8]) -> BasisKey {
    BasisKey::new(k.to_vec(), l.to_vec()).unwrap()
}

#[test]
fn multiplicities() {
    let p = 5;
    assert_eq!(mult_bar(&w(&[p - 3, 2, 1]), 2, p as u64), 4);
    assert_eq!(mult_bar(&w(&[p, 0, 0]), 2, p as u64), 1);
    assert_eq!(mult_bar(&w(&[p + 1, -1, 0]), 2, p as u64), 0);
    for p in 2..=5u64 {
        assert_eq!(vp_mult(&w(&[p as i64 - 1, 1]), 1, p), 2);
        assert_eq!(vp_mult(&w(&[0, p as i64]), 1, p), 1);
        assert_eq!(vp_mult(&w(&[-1, p as i64 + 1]), 1, p), 0);
        assert_eq!(vp_mult(&w(&[-1, 1, p as i64]), 2, p), 0);
    }
}

#[test]
fn representatives() {
    let p = 4;
    assert_eq!(vp_representatives(&w(&[3, 1]), 1, p).unwrap(), vec![key(&[1], &[0]), key(&[0], &[1])]);
    assert_eq!(vp_representatives(&w(&[0, 4]), 1, p).unwrap(), vec![key(&[3], &[1])]);
    let reps = vp_representatives(&w(&[0, 1, 1]), 2, 2).unwrap();
    assert_eq!(reps.len(), 2);
    assert!(reps.contains(&key(&[1, 0], &[0, 1])) && reps.contains(&key(&[0, 0], &[1, 1])));
    assert!(vp_representatives(&w(&[-1, 5]), 1, p).is_err());
}

#[test]
fn level_p_quotient_is_spanned_by_representatives() {
    for n in 1..=3 {
        for p in 1..=3u64 {
            for m in occupations_at_level(n, p as u32) {
                let weight = Weight::from_occupation(&m, p);
                let mut span = EchelonSpan::new(p);
                for v in mp_basis(&weight, n, p, p as u32 + 2).unwrap() {
                    span.insert(&v);
                }
                for k in vp_representatives(&weight, n, p).unwrap() {
                    assert!(span.insert(&FockState::basis(k, p)));
                }
                assert_eq!(span.dim() as u64, mult_bar(&weight, n, p));
            }
        }
    }
}

#[test]
fn mp_basis_examples() {
    let p = 3;
    let b = mp_basis(&w(&[0, 3]), 1, p, 5).unwrap();
    assert_eq!(b.len(), 1);
    let mut prim = FockState::basis(key(&[3], &[0]), p);
    prim.add_term(key(&[2], &[1]), -QuadScalar::sqrt_p(p));
    assert_eq!(span_dim(&[b[0].clone(), prim], p), 1);
    let b = mp_basis(&w(&[0, 1, 1]), 2, 2, 4).unwrap();
    assert_eq!((b.len(), span_dim(&b, 2)), (2, 2));
    assert!(mp_basis(&w(&[1, 1]), 1, 2, 4).unwrap().is_empty());
    assert_eq!(mp_basis(&w(&[-1, 1, 2]), 2, 2, 4).unwrap().len(), 4);
}

#[test]
fn mp_is_killed_and_orthogonal() {
    for n in 1..=3 {
        for p in 1..=3u64 {
            for m in occupations_at_level(n, p as u32) {
                let weight = Weight::from_occupation(&m, p);
                for v in mp_basis(&weight, n, p, p as u32 + 2).unwrap() {
                    assert!(surviving_annihilators(&v).is_empty());
                    for k in keys_with_occupation(&m) {
                        assert!(inner_product(&v, &FockState::basis(k, p)).is_zero());
                    }
                }
            }
        }
    }
}

#[test]
fn dimension_examples() {
    assert_eq!(dim_vp(1, 3), 6);
    assert_eq!(dim_vp(2, 2), 9);
    assert_eq!(dim_vp(2, 1), 3);
    for p in 1..=6 {
        assert_eq!(dim_vp(1, p), 2 * p);
    }
}

#[test]
fn decomposition_examples() {
    for p in 2..=5u64 {
        assert_eq!(gl_decomposition(1, p), vec![vec![p as i64, 0], vec![p as i64 - 1, 1]]);
    }
    assert_eq!(gl_decomposition(1, 1), vec![vec![1, 0]]);
    assert_eq!(gl_decomposition(3, 2), vec![vec![2, 0, 0, 0], vec![1, 1, 0, 0]]);
    assert_eq!(gl_decomposition(2, 1), vec![vec![1, 0, 0]]);
}

/// Dimension of V_p as the total rank of the V̄_p Grams, independent of the
/// multiplicity formula.
fn dim_by_gram_rank(n: usize, p: u64) -> u64 {
    (0..=p as u32)
        .flat_map(|lvl| occupations_at_level(n, lvl))
        .map(|m| gram_bar(&Weight::from_occupation(&m, p), n, p).unwrap().entries.rank() as u64)
        .sum()
}

#[test]
fn dimension_cross_checks() {
    for n in 1..=3 {
        for p in 1..=5u64 {
            let enumerated: u64 = vp_weights(n, p).iter().map(|wt| vp_mult(wt, n, p)).sum();
            let weyl: u64 = gl_decomposition(n, p).iter().map(|l| weyl_dim(l)).sum();
            assert_eq!(dim_vp(n, p), enumerated, "n={n} p={p}");
            assert_eq!(dim_vp(n, p), weyl, "n={n} p={p}");
        }
    }
    for n in 1..=2 {
        for p in 1..=4u64 {
            assert_eq!(dim_vp(n, p), dim_by_gram_rank(n, p), "n={n} p={p}");
        }
    }
}

#[test]
fn weyl_dimensions() {
    assert_eq!(weyl_dim(&[1, 0, 0]), 3);
    assert_eq!(weyl_dim(&[1, 1, 0]), 3);
    assert_eq!(weyl_dim(&[2, 0, 0]), 6);
    assert_eq!(weyl_dim(&[2, 1, 0]), 8);
    assert_eq!(weyl_dim(&[3, 0]), 4);
}

#[test]
fn gram_examples() {
    for p in 2..=5u64 {
        let g = gram(&w(&[p as i64 - 1, 1]), 1, p).unwrap();
        let (pp, sp) = (QuadScalar::from_int(p as i64, p), QuadScalar::sqrt_p(p));
        assert_eq!(g.entries, Matrix::from_rows(vec![vec![pp.clone(), sp.clone()], vec![sp, pp]], &p));
        assert!(is_positive_definite(&g).positive_definite);
    }
    let g = gram_bar(&w(&[0, 1]), 1, 1).unwrap();
    let one = QuadScalar::from_int(1, 1);
    assert_eq!(g.entries, Matrix::from_rows(vec![vec![one.clone(), one.clone()], vec![one.clone(), one]], &1));
    assert!(!is_positive_definite(&g).positive_definite);
    let g = gram(&w(&[3, 0]), 1, 3).unwrap();
    assert_eq!(g.entries, Matrix::identity(1, &3));
}

#[test]
fn sylvester_examples() {
    let p = 3;
    let g = gram(&w(&[2, 1]), 1, p).unwrap();
    let cert = is_positive_definite(&g);
    assert_eq!(cert.minors, vec![QuadScalar::from_int(3, p), QuadScalar::from_int(6, p)]);
    assert!(cert.positive_definite);
    assert!(sylvester(&Matrix::identity(1, &p)).positive_definite);
}

#[test]
fn positivity() {
    for n in 1..=3 {
        for p in 1..=4u64 {
            for weight in vp_weights(n, p) {
                let g = gram(&weight, n, p).unwrap();
                assert!(g.entries.is_symmetric());
                assert!(is_positive_definite(&g).positive_definite, "n={n} p={p} {weight}");
            }
        }
    }
}

#[test]
fn level_p_gram_rank() {
    for n in 1..=3 {
        for p in 1..=4u64 {
            for m in occupations_at_level(n, p as u32) {
                let weight = Weight::from_occupation(&m, p);
                let g = gram_bar(&weight, n, p).unwrap();
                assert_eq!(2 * g.entries.rank(), g.order(), "n={n} p={p} {weight}");
            }
        }
    }
}

#[test]
fn singular_vector_properties() {
    let p = 3;
    let mut expected = FockState::basis(key(&[3], &[0]), p).scale(&QuadScalar::sqrt_p(p));
    expected.add_term(key(&[2], &[1]), QuadScalar::from_int(-3, p));
    assert_eq!(singular_vector(1, p), expected);
    for n in 1..=3 {
        for p in 1..=3u64 {
            let v = singular_vector(n, p);
            assert!(surviving_annihilators(&v).is_empty());
            let mut weight = vec![0; n + 1];
            weight[1] = p as i64;
            assert_eq!(v.weight(), Some(Weight(weight)));
        }
    }
}

#[test]
fn gram_closed_form() {
    assert!(gram_closed_form_check(&w(&[1, 2, 1]), 2, 4).unwrap());
    assert!(gram_closed_form_check(&w(&[2, 1]), 1, 3).unwrap());
    assert!(gram_closed_form_check(&w(&[2, 1, 0]), 2, 3).is_err());
    for n in 1..=3 {
        for p in 2..=5u64 {
            for lvl in 1..p as u32 {
                for m in occupations_at_level(n, lvl).into_iter().filter(|m| m.iter().all(|&x| x > 0)) {
                    assert!(gram_closed_form_check(&Weight::from_occupation(&m, p), n, p).unwrap());
                }
            }
        }
    }
}

#[test]
fn closure_generates_mp() {
    let report = cao_closure_check(2, 2, 4);
    assert!(report.passed(), "{report:?}");
    assert!(!report.weights.is_empty());
    assert!(cao_closure_check(1, 3, 5).passed());
}

#[test]
fn closure_needs_cap_above_p() {
    assert!(!cao_closure_check(2, 2, 2).passed());
    assert!(cao_closure_check(2, 2, 3).passed());
}

#[test]
fn report_json() {
    let r = weight_report(&w(&[1, 1]), 1, 2).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    for field in ["weight", "level", "dim_bar", "dim_vp", "gram_minors", "positive_definite"] {
        assert!(json.get(field).is_some(), "{field}");
    }
    assert_eq!(json["dim_vp"], 2);
    assert_eq!(json["positive_definite"], true);
}
