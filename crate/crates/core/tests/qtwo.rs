use qfock::fock::{apply_cao, inner_product, FockState};
use qfock::qtwo::*;
use qfock::structure::{dim_vp, gl_decomposition, vp_mult, vp_weights};
use qfock::QuadScalar;

const TOL: f64 = 1e-10;

fn int(x: i64, p: u64) -> QuadScalar {
    QuadScalar::from_int(x, p)
}

fn labels(max_k: u32) -> Vec<Q2Label> {
    (0..=max_k).map(Q2Label::V).chain((1..=max_k).map(Q2Label::W)).collect()
}

#[test]
fn closed_form_examples() {
    for p in 1..=4u64 {
        let b = q2_act(Q2Op::BMinus, &Q2State::basis(Q2Label::V(1), p));
        assert_eq!(b, Q2State::basis(Q2Label::V(0), p).scale(&int(p as i64, p)));
        let f = q2_act(Q2Op::FMinus, &Q2State::basis(Q2Label::W(2), p));
        let mut expected = Q2State::basis(Q2Label::V(1), p).scale(&int(p as i64, p));
        expected.add_term(Q2Label::W(1), -QuadScalar::sqrt_p(p));
        assert_eq!(f, expected);
    }
}

#[test]
fn closed_forms_match_fock_module() {
    for p in 1..=4u64 {
        for l in labels(6) {
            let s = Q2State::basis(l, p);
            for op in Q2Op::ALL {
                let via_fock = Q2State::from_fock(&apply_cao(op.cao(), &s.to_fock()));
                assert_eq!(q2_act(op, &s), via_fock, "{op} {l} p={p}");
            }
        }
    }
}

#[test]
fn inner_products_match_fock_module() {
    assert_eq!(q2_inner(Q2Label::V(2), Q2Label::V(2), 3), int(12, 3));
    for p in 1..=4u64 {
        assert_eq!(q2_inner(Q2Label::V(1), Q2Label::W(1), p), QuadScalar::sqrt_p(p));
        assert!(q2_inner(Q2Label::V(p as u32 + 1), Q2Label::V(p as u32 + 1), p).is_zero());
        for a in labels(6) {
            for b in labels(6) {
                let direct = inner_product(&Q2State::basis(a, p).to_fock(), &Q2State::basis(b, p).to_fock());
                assert_eq!(q2_inner(a, b, p), direct, "<{a}|{b}> p={p}");
            }
        }
    }
}

#[test]
fn w0_is_rejected() {
    assert!(Q2Label::w(0).is_err());
    assert!(Q2Label::w(1).is_ok());
    assert!(std::panic::catch_unwind(|| Q2State::basis(Q2Label::W(0), 2)).is_err());
}

#[test]
fn primitive_vector() {
    let p1 = q2_primitive(1);
    let mut expected = Q2State::basis(Q2Label::V(1), 1);
    expected.add_term(Q2Label::W(1), int(-1, 1));
    assert_eq!(p1, expected);
    let p4 = q2_primitive(4);
    let mut expected = Q2State::basis(Q2Label::V(4), 4);
    expected.add_term(Q2Label::W(4), int(-2, 4));
    assert_eq!(p4, expected);
    for p in 1..=6u64 {
        let v = q2_primitive(p);
        assert!(q2_act(Q2Op::BMinus, &v).is_zero());
        assert!(q2_act(Q2Op::FMinus, &v).is_zero());
    }
}

#[test]
fn primitive_vector_is_unique() {
    for p in 1..=6u64 {
        for (k, sols) in q2_primitive_solutions(p, p as u32) {
            if k as u64 == p {
                assert_eq!(sols.len(), 1);
                let (a, b) = (&sols[0][0], &sols[0][1]);
                assert_eq!(b.clone() / a.clone(), -QuadScalar::sqrt_p(p));
            } else {
                assert!(sols.is_empty(), "p={p} k={k}");
            }
        }
    }
}

#[test]
fn orthonormal_basis() {
    for p in 1..=6u64 {
        let basis = q2_ortho_basis(p);
        assert_eq!(basis.len() as u64, 2 * p);
        assert_eq!(basis.len() as u64, dim_vp(1, p));
        assert_eq!(basis.iter().filter(|o| o.kind == OrthoKind::Phi).count() as u64, p);
        assert!(basis.iter().filter(|o| o.kind == OrthoKind::Phi).all(|o| (1..=p as u32).contains(&o.k)));
        assert!(basis.iter().filter(|o| o.kind == OrthoKind::Psi).all(|o| o.k < p as u32));
        assert!(ortho_residual(p) < TOL, "p={p}");
    }
}

#[test]
fn formula_psi0_has_norm_one_half() {
    for p in 1..=6u64 {
        let v = NumVec::from_ortho(&formula_vector(OrthoKind::Psi, 0, p), p);
        assert!((v.inner(&v) - 0.5).abs() < TOL);
        for k in 1..p as u32 {
            let v = NumVec::from_ortho(&formula_vector(OrthoKind::Psi, k, p), p);
            assert!((v.inner(&v) - 1.0).abs() < TOL);
        }
    }
}

#[test]
fn action_formulas() {
    for p in 1..=6u64 {
        assert!(formula_residual(p) < TOL, "p={p}");
        for op in Q2Op::ALL {
            let d = table_distance(&q2_matrix_elements(op, p), &formula_table(op, p));
            assert!(d < TOL, "{op} p={p}: {d}");
        }
    }
}

#[test]
fn first_matrix_element_p4() {
    let p = 4;
    let table = q2_matrix_elements(Q2Op::FPlus, p);
    let col = table.basis.iter().position(|b| b == "phi1").unwrap();
    let row = table.basis.iter().position(|b| b == "phi2").unwrap();
    let expected = 0.5 * ((2.0 - 1.0) * (2.0 + 2f64.sqrt())).sqrt();
    assert!((table.entries[row][col] - expected).abs() < TOL);
}

#[test]
fn f_minus_phi1_p4() {
    let p = 4;
    let (cphi, cpsi) = f_minus_phi_coefficients(1, p);
    let phi1 = NumVec::from_ortho(&formula_vector(OrthoKind::Phi, 1, p), p);
    let mut diff = phi1.act(Q2Op::FMinus);
    let v0 = NumVec::from_ortho(&formula_vector(OrthoKind::Psi, 0, p), p);
    diff.axpy(-(cphi + cpsi), &v0);
    assert!(diff.max_abs() < TOL);
}

#[test]
fn adjointness() {
    for p in 1..=6u64 {
        assert!(adjoint_residual(p) < TOL, "p={p}");
    }
}

#[test]
fn dispin_decomposition() {
    assert_eq!(q2_dispin(1), vec![(1, 0)]);
    for p in 1..=6u64 {
        let mut from_irreps: Vec<(i64, i64)> = q2_dispin(p)
            .into_iter()
            .flat_map(|(a, b)| (0..=(a - b)).map(move |i| (a - i, b + i)))
            .collect();
        from_irreps.sort();
        let mut from_module: Vec<(i64, i64)> = vp_weights(1, p)
            .iter()
            .flat_map(|w| {
                let c = (w.0[0], w.0[1]);
                std::iter::repeat(c).take(vp_mult(w, 1, p) as usize)
            })
            .collect();
        from_module.sort();
        assert_eq!(from_irreps, from_module, "p={p}");
        let table: Vec<(i64, i64)> = q2_weights(p).iter().flat_map(|&(w, m)| std::iter::repeat(w).take(m as usize)).collect();
        let mut table = table;
        table.sort();
        assert_eq!(table, from_module);
        let gl: Vec<(i64, i64)> = gl_decomposition(1, p).iter().map(|v| (v[0], v[1])).collect();
        assert_eq!(q2_dispin(p), gl);
    }
}

#[test]
fn level_gram_determinants() {
    for p in 1..=6u64 {
        for k in 1..=p as u32 {
            let (v, w) = (Q2Label::V(k), Q2Label::W(k));
            let det = q2_inner(v, v, p) * q2_inner(w, w, p) - q2_inner(v, w, p) * q2_inner(w, v, p);
            assert_eq!(det, q2_level_gram_det(k, p), "p={p} k={k}");
            assert_eq!(det.is_zero(), k as u64 == p);
        }
    }
}

#[test]
fn fock_embedding_round_trip() {
    let mut s = Q2State::basis(Q2Label::V(3), 2);
    s.add_term(Q2Label::W(2), QuadScalar::sqrt_p(2));
    assert_eq!(Q2State::from_fock(&s.to_fock()), s);
    let v: FockState = q2_primitive(3).to_fock();
    assert!(apply_cao(Q2Op::FMinus.cao(), &v).is_zero());
}

#[test]
fn table_json() {
    let json = serde_json::to_value(q2_matrix_elements(Q2Op::BPlus, 2)).unwrap();
    assert_eq!(json["op"], "BPlus");
    assert_eq!(json["basis"], serde_json::json!(["psi0", "phi1", "psi1", "phi2"]));
}
