use super::*;

fn tower(q: u64, m: usize) -> FieldTower {
    FieldTower::for_order(q, m).unwrap()
}

fn base_values(t: &FieldTower, lines: &[SelfDualLine]) -> Vec<(u64, u64, usize)> {
    let mut out: Vec<_> = lines
        .iter()
        .map(|l| (t.index_of(&l.vector[0]), t.index_of(&l.vector[1]), l.distance))
        .collect();
    out.sort();
    out
}

#[test]
fn identity_lines_over_f25() {
    let t = tower(5, 2);
    let lines = enumerate_self_dual_lines(&t, &BilinearForm::identity(&t, 2), 1000).unwrap();
    // indices of 2 and 3 embedded from F_5 are 2 and 3
    assert_eq!(base_values(&t, &lines), vec![(1, 2, 1), (1, 3, 1)]);
}

#[test]
fn identity_lines_over_f9() {
    let t = tower(3, 2);
    let lines = enumerate_self_dual_lines(&t, &BilinearForm::identity(&t, 2), 1000).unwrap();
    assert_eq!(lines.len(), 2);
    let minus_one = t.from_int(Level::Top, -1);
    for l in &lines {
        assert!(t.is_one(&l.vector[0]));
        assert_eq!(t.square(&l.vector[1]), minus_one);
        assert_eq!(l.distance, 2);
    }
}

#[test]
fn hyperbolic_lines_over_f9() {
    let t = tower(3, 2);
    let h = BilinearForm::hyperbolic(&t, 2).unwrap();
    let lines = enumerate_self_dual_lines(&t, &h, 1000).unwrap();
    assert_eq!(base_values(&t, &lines), vec![(0, 1, 1), (1, 0, 1)]);
}

#[test]
fn line_enumeration_respects_budget() {
    let t = tower(5, 2);
    let err = enumerate_self_dual_lines(&t, &BilinearForm::identity(&t, 2), 25).unwrap_err();
    assert!(matches!(err, VerifyError::Code(RankCodeError::BudgetExceeded { required: 26, budget: 25 })));
    let err = enumerate_self_dual_lines(&t, &BilinearForm::identity(&t, 3), 1000).unwrap_err();
    assert!(matches!(err, VerifyError::Code(RankCodeError::DimensionMismatch(_))));
}

#[test]
fn char2_lines() {
    let t = tower(2, 2);
    let lines = enumerate_self_dual_lines(&t, &BilinearForm::identity(&t, 2), 1000).unwrap();
    assert_eq!(base_values(&t, &lines), vec![(1, 1, 1)]);

    let r = check_char2_selfdual(2, 2, 2, 1000).unwrap();
    assert!(r.passed, "{r:?}");
    assert!(r.notes.iter().any(|n| n.contains("not self-dual for the identity form")));
    let r = check_char2_selfdual(2, 4, 2, 1000).unwrap();
    assert!(r.passed);
    assert!(r.notes[0].contains("1 self-dual lines") || r.instances >= 1);
    let r = check_char2_selfdual(2, 4, 4, 1000).unwrap();
    assert!(r.passed, "{r:?}");
    assert!(r.instances > 0);
    assert!(check_char2_selfdual(3, 2, 2, 1000).is_err());
}

#[test]
fn lagrangian_line_over_f4_is_not_identity_isotropic() {
    let c = lagrangian_mrd_code(2, 2, 1000).unwrap();
    let t = c.code.tower();
    let v = c.code.generator().row(0);
    let expected = t.add(&t.square(&v[0]), &t.square(&v[1]));
    assert!(!t.is_zero(&expected));
    assert!(!c.code.is_self_dual(&BilinearForm::identity(t, 2)).unwrap());
}

#[test]
fn transfer_reports_pass() {
    for (q, m) in [(3, 2), (2, 2), (5, 2), (2, 3)] {
        let t = Arc::new(tower(q, m));
        let r = check_transfer(&t, 40, 7).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.instances >= 40);
    }
}

#[test]
fn transfer_on_the_zero_code() {
    let t = Arc::new(tower(3, 2));
    let zero = GabidulinCode::zero(t.clone(), 2).unwrap();
    let form = BilinearForm::identity(&t, 2);
    let alpha = crate::rankcodes::LBasis::power_basis(&t);
    let lambda = t.one(Level::Top);
    let alpha_dual = dual_basis(&t, &alpha, &lambda).unwrap();
    let lhs = zero.dual(&form).unwrap().to_delsarte(&alpha_dual).unwrap();
    assert_eq!(lhs.dim(), 4);
    assert_eq!(lhs, zero.to_delsarte(&alpha).unwrap().dual(&form).unwrap());
}

// Independent integer oracle for the fixture: pairings tr(M N^t) mod 5 and
// ranks of all 624 nonzero combinations.
fn rank_mod5(mut a: Vec<[i64; 2]>) -> usize {
    let mut rank = 0;
    for col in 0..2 {
        let Some(p) = (rank..a.len()).find(|&r| a[r][col].rem_euclid(5) != 0) else {
            continue;
        };
        a.swap(rank, p);
        let inv = (1..5).find(|x| (x * a[rank][col]).rem_euclid(5) == 1).unwrap();
        for r in 0..a.len() {
            if r != rank {
                let f = a[r][col] * inv;
                for c in 0..2 {
                    a[r][c] = (a[r][c] - f * a[rank][c]).rem_euclid(5);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn oracle(mats: &[[[i64; 2]; 4]; 4]) -> (bool, usize) {
    let pair = |a: &[[i64; 2]; 4], b: &[[i64; 2]; 4]| {
        (0..4).map(|r| (0..2).map(|c| a[r][c] * b[r][c]).sum::<i64>()).sum::<i64>().rem_euclid(5)
    };
    let self_dual = (0..4).all(|i| (0..4).all(|j| pair(&mats[i], &mats[j]) == 0));
    let mut best = usize::MAX;
    for idx in 1..625 {
        let coeffs = [idx % 5, idx / 5 % 5, idx / 25 % 5, idx / 125];
        let mut m = vec![[0i64; 2]; 4];
        for (k, &c) in coeffs.iter().enumerate() {
            for r in 0..4 {
                for col in 0..2 {
                    m[r][col] += c as i64 * mats[k][r][col];
                }
            }
        }
        best = best.min(rank_mod5(m));
    }
    (self_dual, best)
}

#[test]
fn fixture_verdict_matches_oracle() {
    let (self_dual, dist) = oracle(&FIXTURE_4X2);
    let code = fixture_4x2().unwrap();
    let identity = BilinearForm::identity(code.tower(), 2);
    assert_eq!(code.dim(), 4);
    assert_eq!(code.is_self_dual(&identity).unwrap(), self_dual);
    let report = code.rank_distance_report(1000, true).unwrap();
    assert_eq!(report.distance, dist);
    assert_eq!(report.visited, 624);

    let r = check_fixture_4x2(1000).unwrap();
    assert_eq!(r.passed, self_dual && dist == 2);
    assert_eq!(r.instances, 624);
}

#[test]
fn negative_control_is_rejected() {
    let mut mats = FIXTURE_4X2;
    mats[0][0][0] = -mats[0][0][0];
    let (self_dual, _) = oracle(&mats);
    assert!(!self_dual);
    let p = fixture_4x2_perturbed().unwrap();
    assert!(!p.is_self_dual(&BilinearForm::identity(p.tower(), 2)).unwrap());
    let r = check_fixture_4x2(1000).unwrap();
    assert!(!r.counterexamples.iter().any(|c| c["check"] == "negative control"));
}

#[test]
fn harness_detects_a_planted_failure() {
    // a Delsarte code known to be self-dual: the expansion of <(1, i)> in an
    // orthonormal basis; flipping a generator breaks it
    let t = Arc::new(tower(3, 2));
    let c = self_dual_mrd_code(3, 2, 1000).unwrap();
    let (_, ortho) = orthonormal_basis_twisted_trace(&t).unwrap();
    let d = c.code.to_delsarte(&ortho).unwrap();
    let identity = BilinearForm::identity(&t, 2);
    assert!(d.is_self_dual(&identity).unwrap());
    let mut basis = d.basis().to_vec();
    let x = basis[0].get(0, 0).clone();
    basis[0].set(0, 0, t.add(&x, &t.one(Level::Base)));
    let broken = DelsarteCode::new(t.clone(), 2, 2, basis).unwrap();
    assert!(!broken.is_self_dual(&identity).unwrap());
}

#[test]
fn zero_mod_four_samples() {
    let r = check_zero_mod_four(3, 100, 1, 10_000).unwrap();
    assert!(r.passed, "{r:?}");
    assert_eq!(r.instances, 101);
    assert!(check_zero_mod_four(2, 1, 1, 10_000).is_err());
}

#[test]
fn unknown_suite() {
    assert!(matches!(
        run_suite("nosuch", &SuiteConfig::default()),
        Err(VerifyError::UnknownSuite(_))
    ));
}

#[test]
fn finite_suite_finds_mrd_lines_exactly_for_3_mod_4() {
    let cfg = SuiteConfig { q_max: 7, n_max: 4, budget: 100_000 };
    let r = run_suite("finite-thm", &cfg).unwrap();
    assert!(r.passed, "{:?}", r.counterexamples);
    for g in r.grid.iter().filter(|g| g.get("mrd").is_some()) {
        let q = g["q"].as_u64().unwrap();
        assert_eq!(g["mrd"].as_u64().unwrap() > 0, q % 4 == 3, "{g}");
    }
}

#[test]
fn small_suites_pass() {
    let cfg = SuiteConfig { q_max: 5, n_max: 4, budget: 100_000 };
    for name in ["singleton", "transfer", "lagrangian-thm", "char2", "constructions"] {
        let r = run_suite(name, &cfg).unwrap();
        assert!(r.passed, "{name}: {:?}", r.counterexamples);
        assert!(r.instances > 0, "{name}");
        assert_eq!(r.theorem, name);
    }
}

#[test]
fn reports_are_deterministic() {
    let cfg = SuiteConfig { q_max: 4, n_max: 4, budget: 100_000 };
    for name in ["transfer", "char2"] {
        let a = serde_json::to_string(&run_suite(name, &cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&run_suite(name, &cfg).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn report_json_shape() {
    let mut r = TheoremReport::new("x");
    r.fail(json!({"a": 1}));
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v.get("wallTimeMs").is_none());
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 1);
}
