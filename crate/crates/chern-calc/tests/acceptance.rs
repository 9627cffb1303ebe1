//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! All arithmetic is exact, so every comparison is equality — there are no
//! tolerances anywhere. Randomized suites use fixed seeds and at least 50
//! cases each.

use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use chern_calc::cli::{self, ResultRecord};
use chern_calc::euler::{
    chern_number, chern_oracle, chern_polynomial, corollary_product, euler_polynomial,
    hodge_numbers_threefold, partitions_of, section_euler_polynomial, section_euler_values,
    Partition,
};
use chern_calc::fulton::{specialize_to_projective, verify_identity};
use chern_calc::graded::{GradedClass, GradedEnv};
use chern_calc::hirzebruch::{chi_y, chi_y_oracle};
use chern_calc::poly::DensePolynomial;
use chern_calc::ring::Ring;
use chern_calc::series::TruncatedSeries;

fn criterion(label: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    match std::panic::catch_unwind(body) {
        Ok(()) => println!("[PASS] {label}"),
        Err(cause) => {
            println!("[FAIL] {label}");
            std::panic::resume_unwind(cause);
        }
    }
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn ipoly(coeffs: &[i64]) -> DensePolynomial<BigInt> {
    DensePolynomial::new(coeffs.iter().map(|&c| int(c)).collect())
}

#[test]
fn criterion_01_worked_example_values() {
    criterion("criterion 1: worked n=4 values reproduced coefficient-exact", || {
        let e4 = euler_polynomial(4).unwrap();
        assert_eq!(e4.polynomial(), &ipoly(&[0, 10, -10, 5, -1]));
        assert_eq!(e4.theta_power(2), ipoly(&[0, 5, -1]));

        let section = section_euler_polynomial(4).unwrap();
        assert_eq!(section.coeff_of_s(0), ipoly(&[0, 10, -10, 5, -1]));
        assert_eq!(section.coeff_of_s(1), ipoly(&[0, -6, 4, -1]));
        assert_eq!(section.coeff_of_s(2), ipoly(&[0, 3, -1]));
        assert_eq!(section.coeff_of_s(3), ipoly(&[0, -1]));
        assert_eq!(section.s_degree(), Some(3));
    });
}

#[test]
fn criterion_02_documented_typo() {
    criterion(
        "criterion 2: theta E_4 carries +t^3, the unique consistent sign",
        || {
            // the definition itself
            let e4 = euler_polynomial(4).unwrap();
            let from_definition = e4.theta_power(1);
            assert_eq!(from_definition, ipoly(&[0, 10, -5, 1]));

            // consistency 1: the hyperplane-section expansion of criterion 1
            // already pins the s^1 coefficient to -(E_3) = -6t + 4t^2 - t^3,
            // and that slot is -theta(E_4) + theta^2(E_4) - theta^3(E_4)
            let reconstructed = from_definition
                .neg()
                .add(&e4.theta_power(2))
                .sub(&e4.theta_power(3));
            assert_eq!(
                reconstructed,
                section_euler_polynomial(4).unwrap().coeff_of_s(1)
            );

            // consistency 2: c1 c2 of the hyperplane in P^4 (i.e. of P^3)
            assert_eq!(
                chern_number(4, &int(1), &Partition::new(vec![1, 2]).unwrap()).unwrap(),
                int(24)
            );
            let via_definition = e4.theta_power(2).eval(&int(1)) * from_definition.eval(&int(1));
            assert_eq!(via_definition, int(24));

            // the printed -t^3 variant fails both checks
            let printed_variant = ipoly(&[0, 10, -5, -1]);
            let variant_product =
                e4.theta_power(2).eval(&int(1)) * printed_variant.eval(&int(1));
            assert_ne!(variant_product, int(24));
            let variant_reconstruction = printed_variant
                .neg()
                .add(&e4.theta_power(2))
                .sub(&e4.theta_power(3));
            assert_ne!(
                variant_reconstruction,
                section_euler_polynomial(4).unwrap().coeff_of_s(1)
            );
        },
    );
}

#[test]
fn criterion_03_theorem_oracle_sweep() {
    criterion(
        "criterion 3: theta iterates equal oracle pushforwards (n<=8, d<=10)",
        || {
            for n in 1..=8u32 {
                let e = euler_polynomial(n).unwrap();
                for d in 1..=10i64 {
                    let d = int(d);
                    let data = chern_oracle(n, &d).unwrap();
                    for k in 0..n {
                        assert_eq!(
                            e.theta_power(n - (k + 1)).eval(&d),
                            data.pushforward(k as usize),
                            "n={n} d={d} k={k}"
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_04_chern_number_normalization() {
    criterion(
        "criterion 4: Chern numbers match the oracle; literal product carries d^(m-1)",
        || {
            for n in 1..=8u32 {
                for d in 1..=10i64 {
                    let d = int(d);
                    let data = chern_oracle(n, &d).unwrap();
                    for p in partitions_of(n - 1) {
                        let number = chern_number(n, &d, &p).unwrap();
                        let mut expected = d.clone();
                        for &j in p.parts() {
                            expected *= &data.gamma()[j as usize];
                        }
                        assert_eq!(number, expected, "n={n} d={d} p={}", p.label());

                        // d * literal = d^m * number (valid for the empty partition too)
                        let literal = corollary_product(n, &d, &p).unwrap();
                        let m = p.len();
                        assert_eq!(
                            d.clone() * &literal,
                            num::pow::pow(d.clone(), m) * &number,
                            "n={n} d={d} p={}",
                            p.label()
                        );
                    }
                }
            }
        },
    );
}

#[test]
fn criterion_05_classical_anchors() {
    criterion("criterion 5: classical chi, Hodge and section anchors", || {
        assert_eq!(euler_polynomial(2).unwrap().evaluate(&int(3)), int(0));
        assert_eq!(euler_polynomial(3).unwrap().evaluate(&int(3)), int(9));
        assert_eq!(euler_polynomial(3).unwrap().evaluate(&int(4)), int(24));
        assert_eq!(euler_polynomial(4).unwrap().evaluate(&int(5)), int(-200));

        let hodge = [(1, 0, 0), (2, 0, 0), (3, 0, 5), (4, 0, 30), (5, 1, 101)];
        for (d, h03, h12) in hodge {
            assert_eq!(
                hodge_numbers_threefold(&int(d)).unwrap(),
                (int(h03), int(h12)),
                "d={d}"
            );
        }

        assert_eq!(
            section_euler_values(4, &int(5)).unwrap(),
            vec![int(-200), int(55), int(-10), int(5)]
        );
    });
}

#[test]
fn criterion_06_fulton_identity() {
    criterion(
        "criterion 6: Fulton recovery identity (n<=8) and projective specialization (d<=10)",
        || {
            for n in 1..=8u32 {
                assert!(verify_identity(n).unwrap(), "n={n}");
                let env = GradedEnv::univariate("H", n);
                let h: GradedClass<BigInt> = GradedClass::generator(&env, 0);
                let poly = chern_polynomial(n).unwrap();
                for d in 1..=10i64 {
                    let d = int(d);
                    let t = GradedClass::constant(d.clone());
                    assert_eq!(
                        specialize_to_projective(n, &d).unwrap(),
                        poly.eval_in(&h, &t),
                        "n={n} d={d}"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_07_section_identity() {
    criterion(
        "criterion 7: hyperplane sections reduce the Euler polynomial (2<=n<=10)",
        || {
            for n in 2..=10u32 {
                let section = section_euler_polynomial(n).unwrap();
                for r in 0..n {
                    let mut lhs = section.coeff_of_s(r);
                    if r % 2 == 1 {
                        lhs = lhs.neg();
                    }
                    assert_eq!(
                        lhs,
                        euler_polynomial(n - r).unwrap().polynomial().clone(),
                        "n={n} r={r}"
                    );
                }
            }
        },
    );
}

#[test]
fn criterion_08_hirzebruch_vs_oracle() {
    criterion(
        "criterion 8: chi_y class route equals classical genus (2<=n<=6, d<=8)",
        || {
            for n in 2..=6u32 {
                let e = euler_polynomial(n).unwrap();
                for d in 1..=8i64 {
                    let d = int(d);
                    let genus = chi_y(n, &d).unwrap();
                    assert_eq!(genus, chi_y_oracle(n, &d).unwrap(), "n={n} d={d}");
                    assert_eq!(genus.euler_characteristic(), e.evaluate(&d), "n={n} d={d}");
                    assert!(genus.is_serre_symmetric(), "n={n} d={d}");
                }
            }
            let k3 = chi_y(3, &int(4)).unwrap();
            assert_eq!(
                (
                    k3.euler_characteristic(),
                    k3.holomorphic_euler_characteristic(),
                    k3.signature()
                ),
                (int(24), int(2), int(-16))
            );
        },
    );
}

// ---- criterion 9: randomized kernel suites, fixed seeds, >= 50 cases ----

fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(int(rng.gen_range(-40..=40)), int(rng.gen_range(1..=12)))
}

fn series(rng: &mut ChaCha8Rng, order: usize) -> TruncatedSeries<BigRational> {
    TruncatedSeries::from_fn(order, |_| rational(rng))
}

fn series_with_constant(
    rng: &mut ChaCha8Rng,
    order: usize,
    constant: BigRational,
) -> TruncatedSeries<BigRational> {
    let mut s = series(rng, order);
    let mut coeffs = s.coeffs().to_vec();
    coeffs[0] = constant;
    s = TruncatedSeries::new(coeffs);
    s
}

#[test]
fn criterion_09_kernel_properties() {
    criterion(
        "criterion 9: exp/log, division, Leibniz and Hadamard suites (seeded, 50 cases each)",
        || {
            let zero = BigRational::from_integer(int(0));
            let one = BigRational::from_integer(int(1));

            // exp(log(1+g)) = 1+g, order 8
            let mut rng = ChaCha8Rng::seed_from_u64(401);
            for _ in 0..50 {
                let f = series_with_constant(&mut rng, 8, one.clone());
                assert_eq!(f.log().unwrap().exp().unwrap(), f);
            }

            // log(exp(g)) = g for zero-constant g, order 8
            let mut rng = ChaCha8Rng::seed_from_u64(402);
            for _ in 0..50 {
                let g = series_with_constant(&mut rng, 8, zero.clone());
                assert_eq!(g.exp().unwrap().log().unwrap(), g);
            }

            // (f/g) * g = f, order 8
            let mut rng = ChaCha8Rng::seed_from_u64(403);
            for _ in 0..50 {
                let f = series(&mut rng, 8);
                let mut g = series(&mut rng, 8);
                while g.coeff(0).is_zero() {
                    g = series(&mut rng, 8);
                }
                assert_eq!(f.div(&g).unwrap().mul(&g), f);
            }

            // Leibniz: (fg)' = f'g + fg'
            let mut rng = ChaCha8Rng::seed_from_u64(404);
            for _ in 0..50 {
                let f = series(&mut rng, 7);
                let g = series(&mut rng, 7);
                let lhs = f.mul(&g).derivative();
                let rhs = f.derivative().mul(&g).add(&f.mul(&g.derivative()));
                assert_eq!(lhs, rhs);
            }

            // Hadamard bilinearity: (af + bg) (.) h = a (f (.) h) + b (g (.) h)
            let mut rng = ChaCha8Rng::seed_from_u64(405);
            for _ in 0..50 {
                let a = rational(&mut rng);
                let b = rational(&mut rng);
                let f = series(&mut rng, 6);
                let g = series(&mut rng, 6);
                let h = series(&mut rng, 6);
                let lhs = f.scale(&a).add(&g.scale(&b)).hadamard(&h);
                let rhs = f.hadamard(&h).scale(&a).add(&g.hadamard(&h).scale(&b));
                assert_eq!(lhs, rhs);
            }

            // ((s+1) p) / (s+1) = p over Z[t]
            let mut rng = ChaCha8Rng::seed_from_u64(406);
            let s_plus_one = ipoly(&[1, 1]);
            for _ in 0..50 {
                let len = rng.gen_range(1..=9);
                let p = DensePolynomial::new(
                    (0..len).map(|_| int(rng.gen_range(-50..=50))).collect(),
                );
                assert_eq!(s_plus_one.mul(&p).div_exact(&s_plus_one).unwrap(), p);
            }
        },
    );
}

// ---- criterion 10: CLI contract ----

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["chern-calc"];
    argv.extend_from_slice(args);
    let mut buf = Vec::new();
    let code = cli::run_with_writer(argv, &mut buf);
    (code, String::from_utf8(buf).unwrap())
}

#[test]
fn criterion_10_cli_contract() {
    criterion(
        "criterion 10: CLI determinism, JSON round-trip, cache idempotence, exit codes",
        || {
            // byte-identical reruns in every format
            for format in ["text", "json", "csv"] {
                let args = [
                    "table",
                    "--invariant",
                    "chern-numbers",
                    "--n",
                    "2..4",
                    "--d",
                    "1..3",
                    "--format",
                    format,
                ];
                let (code_a, out_a) = run_cli(&args);
                let (code_b, out_b) = run_cli(&args);
                assert_eq!((code_a, code_b), (0, 0));
                assert_eq!(out_a, out_b, "format {format}");
                assert!(!out_a.is_empty());
            }

            // JSON round-trip through ResultRecord, across every invariant shape
            let mut round_tripped = 0usize;
            for invariant in ["chi", "chern-numbers", "sections", "chi-y"] {
                let (code, out) = run_cli(&[
                    "table",
                    "--invariant",
                    invariant,
                    "--n",
                    "2..4",
                    "--d",
                    "1..4",
                    "--format",
                    "json",
                ]);
                assert_eq!(code, 0);
                for line in out.lines() {
                    let record: ResultRecord = serde_json::from_str(line).unwrap();
                    let reparsed: ResultRecord =
                        serde_json::from_str(&serde_json::to_string(&record).unwrap()).unwrap();
                    assert_eq!(reparsed, record);
                    round_tripped += 1;
                }
            }
            assert!(round_tripped >= 48);

            // cache idempotence
            let dir = tempfile::tempdir().unwrap();
            let cache = dir.path().join("cache.jsonl");
            let cache_arg = cache.to_str().unwrap();
            let args = [
                "table", "--invariant", "chi", "--n", "2..3", "--d", "1..5", "--cache", cache_arg,
            ];
            assert_eq!(run_cli(&args).0, 0);
            let first = std::fs::read(&cache).unwrap();
            assert_eq!(run_cli(&args).0, 0);
            let second = std::fs::read(&cache).unwrap();
            assert_eq!(first, second, "re-running over a populated cache adds nothing");
            assert_eq!(first.iter().filter(|&&b| b == b'\n').count(), 10);

            // exit code classes
            assert_eq!(run_cli(&["euler", "--n", "4"]).0, 0);
            assert_eq!(run_cli(&["euler", "--n", "0"]).0, 2);
            assert_eq!(run_cli(&["chern-numbers", "--n", "4", "--d", "5", "--partition", "1,1"]).0, 2);
            assert_eq!(run_cli(&["table", "--invariant", "chi", "--n", "4..2", "--d", "1..2"]).0, 2);
            let missing = dir.path().join("no-such-dir").join("x.json");
            assert_eq!(
                run_cli(&[
                    "table",
                    "--invariant",
                    "chi",
                    "--n",
                    "2..2",
                    "--d",
                    "1..1",
                    "--out",
                    missing.to_str().unwrap(),
                ])
                .0,
                1,
                "unwritable output is a runtime failure"
            );
            assert_eq!(run_cli(&["verify", "--fulton", "--n-max", "4"]).0, 0);
        },
    );
}
