use super::checks::{is_complete_regular_multipartite, is_gkrs, is_threshold};
use super::*;
use crate::graph::families::{generate, FamilySpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fam(spec: FamilySpec) -> Graph {
    generate(&spec).unwrap()
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge_mut(u, v);
            }
        }
    }
    g
}

fn slack(id: ConjectureId, g: &Graph) -> f64 {
    check(id, g, &Params::default()).slack().unwrap()
}

#[test]
fn registry_has_every_id_once() {
    let entries = list();
    assert_eq!(entries.len(), 24);
    let mut names: Vec<&str> = entries.iter().map(|e| e.id.as_str()).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), 24);
    for e in &entries {
        assert_eq!(e.id.as_str().parse::<ConjectureId>().unwrap(), e.id);
        assert!(!e.topic.is_empty());
    }
    let c27 = entries.iter().find(|e| e.id == ConjectureId::C27BiluLinial).unwrap();
    assert_eq!(c27.input, "graph");
    assert!(c27.uses.contains(&"signed"));
    assert_eq!(parse_id("c22_powers_i4").unwrap(), (ConjectureId::C22Powers, Some(4)));
    assert!(parse_id("NoSuchId").is_err());
    assert_eq!(parse_id("C01").unwrap().0, ConjectureId::C01HongExt);
    assert_eq!(parse_id("c19b").unwrap().0, ConjectureId::C19bEnergyInertia);
    assert!(parse_id("C0").is_err());
}

#[test]
fn seven_cycle_separates_the_two_ell_choices() {
    let c7 = fam(FamilySpec::Cycle(7));
    let forced = Params {
        elw_ell_n_plus: true,
        ..Params::default()
    };
    let v = check(ConjectureId::C04Elw, &c7, &forced);
    let e = v.evaluation().unwrap();
    // 4 + 2 (2cos(2pi/7))^2 + ... computed from the closed form of the spectrum
    let oracle: f64 = [0usize, 1, 6]
        .iter()
        .map(|&j| (2.0 * (2.0 * std::f64::consts::PI * j as f64 / 7.0).cos()).powi(2))
        .sum::<f64>()
        - 7.0;
    assert!(v.is_violated());
    assert!((e.lhs - e.rhs - oracle).abs() < 1e-9);
    assert!((e.lhs - e.rhs - 0.1099).abs() < 1e-3);
    assert_eq!(e.arg, Some(Quantifier::K(3)));
    assert!(check(ConjectureId::C04Elw, &c7, &Params::default()).holds());
}

#[test]
fn equality_cases() {
    for n in 2..=8 {
        let kn = fam(FamilySpec::Complete(n));
        assert!(slack(ConjectureId::C19EnergyIndependence, &kn).abs() < 1e-9);
        assert!(slack(ConjectureId::C02WilfExt, &kn).abs() < 1e-9);
    }
    let k23 = fam(FamilySpec::CompleteBipartite(2, 3));
    assert!(slack(ConjectureId::C08HaemersToughness, &k23).abs() < 1e-9);
    let p9 = fam(FamilySpec::PlanarMax(9));
    let v = check(ConjectureId::C05PlanarMax, &p9, &Params::default());
    assert!(v.holds() && v.slack().unwrap().abs() < 1e-9);
    assert!(v.evaluation().unwrap().note.is_none());
    // stars are the K_3-saturated graphs of minimum radius
    let star = fam(FamilySpec::Star(7));
    let v = check(ConjectureId::C14Saturation, &star, &Params::default());
    assert!(v.holds() && v.slack().unwrap().abs() < 1e-9 && v.evaluation().unwrap().note.is_none());
    let k23 = fam(FamilySpec::CompleteBipartite(2, 3));
    let v = check(ConjectureId::C14Saturation, &k23, &Params::default());
    assert!((v.slack().unwrap() - (6f64.sqrt() - 2.0)).abs() < 1e-9);
    // C_5 is saturated and has the radius of the star
    let v = check(ConjectureId::C14Saturation, &fam(FamilySpec::Cycle(5)), &Params::default());
    assert!(v.slack().unwrap().abs() < 1e-9 && v.evaluation().unwrap().note.is_some());
    assert!(!check(ConjectureId::C14Saturation, &fam(FamilySpec::Cycle(6)), &Params::default()).is_applicable());
}

#[test]
fn complete_graphs_are_outside_bollobas_nikiforov() {
    for n in 2..=7 {
        let kn = fam(FamilySpec::Complete(n));
        assert!(!check(ConjectureId::C03BollobasNikiforov, &kn, &Params::default()).is_applicable());
    }
    // two disjoint triangles attain the bound
    let two = fam(FamilySpec::Complete(3)).disjoint_union(&fam(FamilySpec::Complete(3)));
    assert!(slack(ConjectureId::C03BollobasNikiforov, &two).abs() < 1e-9);
}

#[test]
fn singular_graphs_and_forced_mode() {
    let g = fam(FamilySpec::CompleteBipartite(4, 2));
    assert!(!check(ConjectureId::C20AkbariH, &g, &Params::default()).is_applicable());
    let forced = Params {
        force_applicability: true,
        ..Params::default()
    };
    let v = check(ConjectureId::C20AkbariH, &g, &forced);
    let e = v.evaluation().unwrap();
    assert!(v.is_violated());
    assert!((e.lhs - 2.0 * 8f64.sqrt()).abs() < 1e-9 && e.rhs == 6.0);
    let k4 = fam(FamilySpec::Complete(4));
    let v = check(ConjectureId::C20AkbariH, &k4, &Params::default());
    assert!(v.holds() && v.slack().unwrap().abs() < 1e-9);
}

#[test]
fn brouwer_and_threshold_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        assert!(check(ConjectureId::C15Brouwer, &g, &Params::default()).holds());
        let v = check(ConjectureId::C16FullBrouwer, &g, &Params::default());
        assert!(v.holds(), "{g:?} {v:?}");
    }
    for (k, r, sizes) in [(3, 2, vec![2, 1, 0]), (1, 4, vec![]), (4, 1, vec![3, 3, 1]), (5, 1, vec![])] {
        let g = fam(FamilySpec::Gkrs {
            k,
            r,
            neighborhood_sizes: sizes,
        });
        assert!(is_threshold(&g) && is_gkrs(&g, k));
        let mu = crate::spectra::eigenvalues(&g, crate::spectra::MatrixKind::Laplacian).unwrap().values;
        let sk: f64 = mu[..k].iter().sum();
        assert!((sk - (g.size() + k * (k + 1) / 2) as f64).abs() < 1e-9);
    }
    assert!(!is_threshold(&fam(FamilySpec::Path(4))));
    assert!(!is_gkrs(&fam(FamilySpec::Cycle(4)), 2));
}

#[test]
fn multipartite_recognition() {
    assert!(is_complete_regular_multipartite(&fam(FamilySpec::Turan { n: 9, k: 3 })));
    assert!(!is_complete_regular_multipartite(&fam(FamilySpec::Turan { n: 8, k: 3 })));
    assert!(is_complete_regular_multipartite(&fam(FamilySpec::Empty(4))));
    assert!(!is_complete_regular_multipartite(&fam(FamilySpec::Path(3))));
}

#[test]
fn eigenvector_mass_on_bipartite_graphs() {
    let g = fam(FamilySpec::DoubleComet { k: 2, l: 5 });
    let v = check(ConjectureId::C25Cioaba, &g, &Params::default());
    assert!(v.slack().unwrap().abs() < 1e-9);
    match &v.evaluation().unwrap().arg {
        Some(Quantifier::VertexSet(s)) => {
            let colours = g.bipartition().unwrap();
            let first: Vec<bool> = s.iter().map(|v| colours[v]).collect();
            assert!(first.iter().all(|&c| c == first[0]));
        }
        other => panic!("{other:?}"),
    }
    // complete split graphs attain the chromatic refinement
    for (n, k) in [(8, 3), (6, 1), (9, 4), (12, 2)] {
        let s = fam(FamilySpec::CompleteSplit { n, k });
        // quotient oracle: lambda^2 = (k-1) lambda + k(n-k), mass = (n-k) k^2 / (k lambda^2 + (n-k) k^2)
        let (kf, pf) = (k as f64, (n - k) as f64);
        let lambda = ((kf - 1.0) + ((kf - 1.0).powi(2) + 4.0 * kf * pf).sqrt()) / 2.0;
        let mass = pf * kf * kf / (kf * lambda * lambda + pf * kf * kf);
        let v = check(ConjectureId::C24GregoryEigenvector, &s, &Params::default());
        let e = v.evaluation().unwrap();
        assert!((e.lhs - mass).abs() < 1e-9 && e.slack.abs() < 1e-9, "{n} {k} {e:?}");
        assert_eq!(slack(ConjectureId::C25Cioaba, &s) > 1e-9, k > 1);
    }
}

#[test]
fn signed_predicates() {
    let p = fam(FamilySpec::Petersen);
    let v = check(ConjectureId::C27BiluLinial, &p, &Params::default());
    assert!(v.holds());
    match &v.evaluation().unwrap().arg {
        Some(Quantifier::Signature(line)) => {
            let sg = crate::signed::SignedGraph::from_line(line).unwrap();
            let rho = crate::signed::signed_spectral_radius(&sg).unwrap();
            assert!((rho - v.evaluation().unwrap().lhs).abs() < 1e-12);
        }
        other => panic!("{other:?}"),
    }
    assert!(!check(ConjectureId::C28GregorySigned, &fam(FamilySpec::Cycle(5)), &Params::default()).is_applicable());
    assert!(check(ConjectureId::C28GregorySigned, &fam(FamilySpec::Complete(4)), &Params::default()).holds());
    // two components: the signature is assembled per component
    let two = fam(FamilySpec::Complete(4)).disjoint_union(&fam(FamilySpec::Star(5)));
    let v = check(ConjectureId::C28GregorySigned, &two, &Params::default());
    match &v.evaluation().unwrap().arg {
        Some(Quantifier::Signature(line)) => {
            let sg = crate::signed::SignedGraph::from_line(line).unwrap();
            let rho = crate::signed::signed_spectral_radius(&sg).unwrap();
            assert!((rho - v.evaluation().unwrap().lhs).abs() < 1e-9);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn scoped_predicates() {
    let params = Params::default();
    let c5 = fam(FamilySpec::Cycle(5));
    let v = check(ConjectureId::C21Brandt, &c5, &params);
    assert!((v.slack().unwrap() - (0.8 - (2.0 - 2.0 * (std::f64::consts::PI / 5.0).cos()))).abs() < 1e-9);
    assert!(!check(ConjectureId::C21Brandt, &fam(FamilySpec::Complete(4)), &params).is_applicable());
    assert!(!check(ConjectureId::C23Mohar, &fam(FamilySpec::Complete(5)), &params).is_applicable());
    assert!(check(ConjectureId::C23Mohar, &fam(FamilySpec::Cycle(6)), &params).holds());
    assert!(!check(ConjectureId::C22Powers, &fam(FamilySpec::Path(2)), &params).is_applicable());
    let i4 = Params {
        powers_i: 4,
        ..Params::default()
    };
    let v = check(ConjectureId::C22Powers, &fam(FamilySpec::Empty(8)), &i4);
    assert_eq!(v.slack(), Some(2.0));
    assert!(!check(ConjectureId::C18SpectralGapComet, &c5, &params).is_applicable());
    assert!(check(ConjectureId::C18SpectralGapComet, &fam(FamilySpec::Path(6)), &params).holds());
    assert!(check(ConjectureId::C17SpectralGapKite, &fam(FamilySpec::Path(6)), &params).holds());
    assert!(!check(ConjectureId::C01HongExt, &fam(FamilySpec::Empty(2)), &params).is_applicable());
    assert!(check(ConjectureId::C01bHongExtComponents, &fam(FamilySpec::Empty(2)), &params).holds());
    // forests satisfy P_{1,-1}: lambda <= sqrt(n)
    let forest = Params {
        guiduli_t: 1,
        guiduli_r: -1.0,
        ..Params::default()
    };
    assert!(check(ConjectureId::C26GuiduliPtr, &fam(FamilySpec::Star(9)), &forest).holds());
    assert!(!check(ConjectureId::C26GuiduliPtr, &c5, &forest).is_applicable());
}

#[test]
fn zhai_lin_shu_cases() {
    let params = Params::default();
    // a path is far below the threshold
    let v = check(ConjectureId::C07ZhaiLinShu, &fam(FamilySpec::Path(6)), &params);
    assert!(v.holds() && v.evaluation().unwrap().note.is_some());
    // K_6 has every cycle length
    let v = check(ConjectureId::C07ZhaiLinShu, &fam(FamilySpec::Complete(6)), &params);
    assert_eq!(v.slack(), Some(1.0));
    // S_{n,2} with m = 2n - 3 is the exceptional graph for k = 2
    let s = fam(FamilySpec::CompleteSplit { n: 7, k: 2 });
    assert!(!check(ConjectureId::C07ZhaiLinShu, &s, &params).is_applicable());
    // complete bipartite graphs sit below the threshold: sqrt(ab) < (1 + sqrt(4ab - 3)) / 2 for ab > 1
    let v = check(ConjectureId::C07ZhaiLinShu, &fam(FamilySpec::CompleteBipartite(3, 4)), &params);
    assert!(v.holds() && v.evaluation().unwrap().note.is_some());
    // K_2 is S_{2,2}, the exceptional graph
    assert!(!check(ConjectureId::C07ZhaiLinShu, &fam(FamilySpec::Complete(2)), &params).is_applicable());
}

#[test]
fn budget_exhaustion_is_not_applicable() {
    let params = Params {
        budget: crate::budget::Budget::new(2),
        ..Params::default()
    };
    let v = check(ConjectureId::C27BiluLinial, &fam(FamilySpec::Petersen), &params);
    match v {
        Verdict::NotApplicable { reason } => assert!(reason.starts_with("budget")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn repeated_checks_are_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.5);
        let a = serde_json::to_string(&check_all(ConjectureId::ALL, &g, &Params::default())).unwrap();
        let b = serde_json::to_string(&check_all(ConjectureId::ALL, &g, &Params::default())).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn verdict_json_shape() {
    let v = check(ConjectureId::C04Elw, &fam(FamilySpec::Cycle(7)), &Params {
        elw_ell_n_plus: true,
        ..Params::default()
    });
    let j: serde_json::Value = serde_json::to_value(&v).unwrap();
    assert_eq!(j["outcome"], "violated");
    assert_eq!(j["witness"]["graph6"], "FhCKG");
    assert!(j["slack"].as_f64().unwrap() < 0.0);
}
