//! Acceptance checks, one test per criterion. Each prints a single
//! pass/fail line on success; a failed assertion fails the test and the
//! harness reports the criterion by name.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clusterknot::braid::BraidWord;
use clusterknot::bridge::{
    bridge_report, cluster_exchange_identity_check, homfly_exchange_check,
    skein_exchange_identity_check, NStrategy,
};
use clusterknot::cluster::{
    check_laurent_phenomenon, mutation_graph, CoefficientMode, ExchangeMatrix, Seed,
};
use clusterknot::laurent::{LaurentPoly, RationalFn};
use clusterknot::projection::{
    braid_relation_check, catalan, Algebra, AlgebraElement, RelationPreset,
};
use clusterknot::skein::{homfly_skein, jones_in_t, jones_skein, jones_via_bracket, SkeinOptions};
use clusterknot::verify::{random_braid, reduced_words, run_suite, Suite};

fn pass(criterion: u32, what: &str) {
    println!("criterion {criterion:02} PASS: {what}");
}

#[test]
fn criterion_01_catalan_dimensions() {
    let sizes: Vec<u128> = (1..=8)
        .map(|n| {
            Algebra::new(n, RelationPreset::Paper)
                .unwrap()
                .basis()
                .len() as u128
        })
        .collect();
    assert_eq!(sizes, (1..=8).map(catalan).collect::<Vec<_>>());
    assert_eq!(sizes, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
    pass(1, "basis sizes 1, 2, 5, 14, 42, 132, 429, 1430 for n = 1..8");
}

#[test]
fn criterion_02_multiplicative_closure() {
    let one = RationalFn::one();
    let mut products = 0u64;
    for n in 2..=6 {
        let alg = Algebra::new(n, RelationPreset::Paper).unwrap();
        let basis = alg.basis();
        let elements: Vec<AlgebraElement> = basis
            .iter()
            .map(|w| AlgebraElement::from_word(n, w.clone(), one.clone()))
            .collect();
        for (i, x) in elements.iter().enumerate() {
            for (j, y) in elements.iter().enumerate() {
                let product = alg.mul(x, y);
                assert_eq!(
                    product.terms().len(),
                    1,
                    "basis {i} * basis {j} on {n} strands gave {product}"
                );
                products += 1;
            }
        }
    }
    pass(
        2,
        &format!("all {products} basis products collapse to a single scaled basis word, n = 2..6"),
    );
}

#[test]
fn criterion_03_braid_relations() {
    for preset in [RelationPreset::Paper, RelationPreset::Parametric] {
        for n in 2..=5 {
            assert!(
                braid_relation_check(n, preset.clone()).unwrap(),
                "{} preset on {n} strands",
                preset.name()
            );
        }
    }
    pass(
        3,
        "generator images satisfy both braid relations in the paper and parametric presets, n = 2..5",
    );
}

#[test]
fn criterion_04_inverse_identity() {
    for n in 2..=6 {
        let alg = Algebra::new(n, RelationPreset::Paper).unwrap();
        for i in 1..n as i32 {
            let plus = alg.rho(&BraidWord::new(n, vec![i]).unwrap()).unwrap();
            let minus = alg.rho(&BraidWord::new(n, vec![-i]).unwrap()).unwrap();
            assert_eq!(alg.mul(&plus, &minus), alg.identity(), "i = {i}, n = {n}");
        }
    }
    pass(4, "(e_i + 1)(-e_i/2 + 1) = 1 for every generator, n = 2..6");
}

#[test]
fn criterion_05_oracle_agreement() {
    let options = SkeinOptions::default();
    let mut checked = 0u64;
    for strands in [2, 3] {
        for b in reduced_words(strands, 8) {
            assert_eq!(
                jones_skein(&b, &options).unwrap(),
                jones_via_bracket(&b).unwrap(),
                "{b}"
            );
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x414343);
    for _ in 0..100 {
        let len = rng.gen_range(1..=8);
        let b = random_braid(&mut rng, 4, len);
        assert_eq!(
            jones_skein(&b, &options).unwrap(),
            jones_via_bracket(&b).unwrap(),
            "{b}"
        );
        checked += 1;
    }
    pass(
        5,
        &format!("skein and bracket routes agree on {checked} braids (exhaustive to 8 crossings on 2 and 3 strands, 100 random on 4)"),
    );
}

#[test]
fn criterion_06_known_values() {
    let options = SkeinOptions::default();
    let trefoil = BraidWord::new(2, vec![1, 1, 1]).unwrap();
    assert_eq!(
        jones_in_t(&jones_skein(&trefoil, &options).unwrap()),
        "-t^-4 + t^-3 + t^-1"
    );

    let unknot = BraidWord::identity(1);
    assert!(jones_skein(&unknot, &options).unwrap().is_one());
    assert!(homfly_skein(&unknot, &options).unwrap().is_one());
    let curled = BraidWord::new(2, vec![1]).unwrap();
    assert!(jones_skein(&curled, &options).unwrap().is_one());

    let minus_one = BigRational::from_integer((-1).into());
    let expected_homfly = LaurentPoly::from_terms(
        vec!["l".to_string(), "m".to_string()],
        vec![
            (vec![4, 0], minus_one.clone()),
            (vec![2, 0], &minus_one + &minus_one),
            (vec![2, 2], BigRational::from_integer(1.into())),
        ],
    );
    assert_eq!(homfly_skein(&trefoil, &options).unwrap(), expected_homfly);
    pass(
        6,
        "trefoil jones is -t^-4 + t^-3 + t^-1, unknot jones and homfly are 1, trefoil homfly is l^2m^2 - 2l^2 - l^4",
    );
}

#[test]
fn criterion_07_markov_invariance() {
    let report = run_suite(Suite::Markov);
    assert!(report.ok(), "{report}");
    pass(
        7,
        "jones and homfly invariant under 50 random conjugations and 50 random stabilizations, 2 to 4 strands",
    );
}

#[test]
fn criterion_08_laurent_phenomenon() {
    let s02 = Seed::preset("S02", CoefficientMode::Trivial).unwrap();
    let rank_two = check_laurent_phenomenon(&s02, 6).unwrap();
    assert!(rank_two.ok(), "{}", rank_two.to_json());
    let s11 = Seed::preset("S11", CoefficientMode::Trivial).unwrap();
    let rank_three = check_laurent_phenomenon(&s11, 4).unwrap();
    assert!(rank_three.ok(), "{}", rank_three.to_json());
    pass(
        8,
        &format!(
            "no Laurent violations: rank-two seed to depth 6 ({} mutations), rank-three seed to depth 4 ({} mutations)",
            rank_two.mutations, rank_three.mutations
        ),
    );
}

#[test]
fn criterion_09_involutivity_and_skew() {
    for preset in ["S02", "S11"] {
        let seed = Seed::preset(preset, CoefficientMode::Universal).unwrap();
        assert!(seed.involutivity_check().unwrap(), "{preset}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x494e56);
    for case in 0..100 {
        let rank = rng.gen_range(2..=4);
        let mut entries = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in i + 1..rank {
                let v = rng.gen_range(-2..=2i64);
                entries[i][j] = v;
                entries[j][i] = -v;
            }
        }
        let seed = Seed::new(ExchangeMatrix::new(entries).unwrap(), CoefficientMode::Trivial);
        assert!(seed.involutivity_check().unwrap(), "case {case}");

        let first = rng.gen_range(1..=rank);
        let second = rng.gen_range(1..=rank);
        let walked = seed.mutate_seed(first).unwrap().mutate_seed(second).unwrap();
        for i in 0..rank {
            for j in 0..rank {
                assert_eq!(
                    walked.matrix().get(i, j),
                    -walked.matrix().get(j, i),
                    "case {case}, entry ({i}, {j})"
                );
            }
        }
    }
    pass(
        9,
        "mutation is involutive and keeps matrices skew-symmetric on both presets and 100 random seeds of rank <= 4",
    );
}

#[test]
fn criterion_10_bratteli_shapes() {
    let s02 = Seed::preset("S02", CoefficientMode::Trivial).unwrap();
    let pascal = mutation_graph(&s02, 4).unwrap();
    assert_eq!(pascal.level_sizes(), vec![1, 2, 3, 4, 5]);
    // root-to-node path counts reproduce the binomial triangle
    let mut paths: Vec<Vec<u64>> = vec![vec![1]];
    for level in 1..=4 {
        let mut row = vec![0u64; pascal.level_sizes()[level]];
        for &(from, to, mult) in pascal.edges_between(level - 1) {
            row[to] += paths[level - 1][from] * u64::from(mult);
        }
        paths.push(row);
    }
    let expected_rows: [&[u64]; 5] = [&[1], &[1, 1], &[1, 1, 2], &[1, 1, 3, 3], &[1, 1, 4, 4, 6]];
    for (level, row) in paths.iter().enumerate() {
        let mut sorted = row.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, expected_rows[level], "level {level}");
    }

    let s11 = Seed::preset("S11", CoefficientMode::Trivial).unwrap();
    let graph = mutation_graph(&s11, 2).unwrap();
    assert_eq!(graph.level_sizes(), vec![1, 3, 7]);
    assert_eq!(graph.out_degrees(0), vec![3]);
    assert_eq!(graph.out_degrees(1), vec![3, 3, 3]);
    let mut in_deg = graph.in_degrees(2);
    in_deg.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(in_deg, vec![3, 1, 1, 1, 1, 1, 1]);
    pass(
        10,
        "rank-two graph grows 1,2,3,4,5 with binomial path counts; rank-three graph grows 1,3,7 with nine weighted edges into level two",
    );
}

#[test]
fn criterion_11_bridge_identities() {
    assert!(skein_exchange_identity_check());
    assert!(cluster_exchange_identity_check().unwrap());
    assert!(homfly_exchange_check().unwrap());
    pass(
        11,
        "rescaled skein, rank-two exchange, and rank-three three-term identities all hold exactly",
    );
}

#[test]
fn criterion_12_trace_properties() {
    let tl4 = Algebra::new(4, RelationPreset::TemperleyLieb).unwrap();
    let one = RationalFn::one();
    let elements: Vec<AlgebraElement> = tl4
        .basis()
        .iter()
        .map(|w| AlgebraElement::from_word(4, w.clone(), one.clone()))
        .collect();
    let mut pairs = 0u32;
    for x in &elements {
        for y in &elements {
            assert_eq!(
                tl4.markov_trace(&tl4.mul(x, y)).unwrap(),
                tl4.markov_trace(&tl4.mul(y, x)).unwrap()
            );
            pairs += 1;
        }
    }

    // words not touching the last generator absorb it at cost delta^-1
    let delta_inv = RationalFn::var("delta").recip();
    let last = tl4.normal_form(&[3]).unwrap();
    let mut embedded = 0u32;
    for w in tl4.basis() {
        if w.letters().contains(&3) {
            continue;
        }
        let x = AlgebraElement::from_word(4, w, one.clone());
        assert_eq!(
            tl4.markov_trace(&tl4.mul(&x, &last)).unwrap(),
            &delta_inv * &tl4.markov_trace(&x).unwrap()
        );
        embedded += 1;
    }
    assert_eq!(embedded, 5);

    let mut rng = ChaCha8Rng::seed_from_u64(0x545243);
    for _ in 0..50 {
        let braid_len = rng.gen_range(1..=6);
        let braid = random_braid(&mut rng, 4, braid_len);
        let conjugator_len = rng.gen_range(1..=4);
        let conjugator = random_braid(&mut rng, 4, conjugator_len);
        let moved = braid.conjugate(&conjugator).unwrap();
        assert_eq!(
            tl4.markov_trace(&tl4.rho(&braid).unwrap()).unwrap(),
            tl4.markov_trace(&tl4.rho(&moved).unwrap()).unwrap()
        );
    }
    pass(
        12,
        &format!("trace symmetry on all {pairs} basis pairs, the delta^-1 absorption on {embedded} embedded words, conjugation invariance on 50 pairs"),
    );
}

#[test]
fn criterion_13_bridge_report() {
    let options = SkeinOptions::default();
    let mut agreements = 0u32;
    let mut candidates = 0u32;
    for k in -7..=7i32 {
        let letters = vec![if k < 0 { -1 } else { 1 }; k.unsigned_abs() as usize];
        let braid = BraidWord::new(2, letters).unwrap();
        let report = bridge_report(&braid, NStrategy::default(), &options).unwrap();
        assert!(report["braid"].is_string());
        assert!(report["lhs"].is_string());
        assert!(report["lhs_in_t"].is_string());
        assert!(report["convention"].is_string());
        assert_eq!(report["strands"], 2);
        let rows = report["N_candidates"].as_array().unwrap();
        assert_eq!(rows.len(), 7);
        for row in rows {
            assert!(row["N"].is_i64());
            assert!(row["rhs"].is_string());
            assert!(row["agree"].is_boolean());
            if row["agree"] == true {
                agreements += 1;
            }
            candidates += 1;
        }
    }
    pass(
        13,
        &format!("15 complete reports on the two-strand torus family; {agreements} of {candidates} candidate evaluations agreed (recorded, not asserted)"),
    );
}
