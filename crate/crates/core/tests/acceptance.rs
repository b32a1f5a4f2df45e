//! Acceptance criteria. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rdyck::counting::{
    check_compositions_shift, check_sum_identity, count_q_without_prefix_family,
};
use rdyck::qmap::phi_rules;
use rdyck::{
    check_bijection, chi_gf, collision_pair, comp_to_path, count_enumeration, count_recurrence,
    delta_gf, enumerate_compositions, generate, member, oracle_all_height2, oracle_generate,
    path_to_comp, phi, phi_inv, series_coeffs, Composition, DyckPath, Generator, PartSet,
    PathClass, RationalParam,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(r: u64, s: u64) -> RationalParam {
    RationalParam::new(r, s).expect("sample parameters are coprime")
}

const SAMPLE: [(u64, u64); 7] = [(1, 1), (1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 5)];

fn sample() -> impl Iterator<Item = RationalParam> {
    SAMPLE.iter().map(|&(r, s)| q(r, s))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    ensure(elapsed <= limit, || {
        format!("took {elapsed:?}, limit {limit:?}")
    })
}

fn big(values: &[u64]) -> Vec<BigUint> {
    values.iter().map(|&v| BigUint::from(v)).collect()
}

fn path_set(paths: &[DyckPath]) -> BTreeSet<String> {
    paths.iter().map(DyckPath::render).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let expected = big(&[1, 1, 1, 2, 3, 6, 10, 19, 33]);
    let one = q(1, 1);
    let enumeration = count_enumeration(one, PathClass::R, 8);
    let recurrence = count_recurrence(one, PathClass::R, 8);
    let series = series_coeffs(&delta_gf(one), 8).map_err(|e| e.to_string())?;
    for table in [&enumeration, &recurrence, &series] {
        ensure(table.values == expected, || {
            format!("{} gave {table}", table.source)
        })?;
    }
    within(start.elapsed(), Duration::from_secs(1))
}

/// (n, compositions of n, paths of R_{n+1}) for q = 3/4.
const TABLE_ONE: [(usize, &[&str], &[&str]); 6] = [
    (0, &["0"], &["UD"]),
    (1, &["1"], &["UDUD"]),
    (2, &["1+1"], &["UDUDUD"]),
    (3, &["1+1+1", "3"], &["UDUDUDUD", "UUDDUDUD"]),
    (
        4,
        &["1+1+1+1", "1+3", "3+1"],
        &["UDUDUDUDUD", "UDUUDDUDUD", "UUDDUDUDUD"],
    ),
    (
        5,
        &["1+1+1+1+1", "1+1+3", "1+3+1", "3+1+1", "5"],
        &[
            "UDUDUDUDUDUD",
            "UDUDUUDDUDUD",
            "UDUUDDUDUDUD",
            "UUDDUDUDUDUD",
            "UUDUDDUDUDUD",
        ],
    ),
];

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let q34 = q(3, 4);
    let parts = PartSet::unbounded(q34);
    for (n, comps, paths) in TABLE_ONE {
        let got = path_set(&generate(q34, PathClass::R, n + 1));
        let want: BTreeSet<String> = paths.iter().map(|s| s.to_string()).collect();
        ensure(got == want, || {
            format!("R_{} = {got:?}, table has {want:?}", n + 1)
        })?;

        let got: BTreeSet<String> = enumerate_compositions(parts, n)
            .iter()
            .map(Composition::to_string)
            .collect();
        let want: BTreeSet<String> = comps.iter().map(|s| s.to_string()).collect();
        ensure(got == want, || {
            format!("C_{n} = {got:?}, table has {want:?}")
        })?;

        // row pairing: composition i maps to path i
        for (c, p) in comps.iter().zip(paths.iter()) {
            let image = comp_to_path(q34, &c.parse().map_err(|e| format!("{e}"))?)
                .map_err(|e| e.to_string())?;
            ensure(image.render() == *p, || {
                format!("{c} maps to {image}, table has {p}")
            })?;
        }
    }
    within(start.elapsed(), Duration::from_secs(1))
}

fn criterion_3() -> Outcome {
    let cases = [
        (q(3, 4), PathClass::R, "UUDDUDUUDUDDUDUD", false),
        (q(3, 4), PathClass::R, "UUDDUDUUDUDUDUDD", false),
        (q(3, 4), PathClass::R, "UUDDUDUUDUDDUDUDUDUD", true),
        (q(4, 5), PathClass::Q, "UUDDUDUUDUDDUDUD", false),
        (q(4, 5), PathClass::Q, "UUDDUDUUDUDUDUDDUDUD", true),
        (q(4, 5), PathClass::Q, "UUDDUDUUDUDUDD", true),
    ];
    for (param, class, text, want) in cases {
        let path = DyckPath::parse(text).map_err(|e| e.to_string())?;
        let got = member(param, class, &path);
        ensure(got == want, || {
            format!("{text} in {class}^{param}: got {got}")
        })?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    for param in sample() {
        for class in PathClass::ALL {
            let mut gen = Generator::new(param, class);
            let recurrence = count_recurrence(param, class, 12);
            let series = series_coeffs(&rdyck::counting::gf_for(param, class), 12)
                .map_err(|e| e.to_string())?;
            for n in 0..=12 {
                let built = gen.level(n).to_vec();
                let oracle = oracle_generate(param, class, n);
                ensure(path_set(&built) == path_set(&oracle), || {
                    let b = path_set(&built);
                    let o = path_set(&oracle);
                    let diff: Vec<_> = b.symmetric_difference(&o).take(3).collect();
                    format!("{class}^{param} n={n}: sets differ at {diff:?}")
                })?;
                let size = BigUint::from(built.len());
                ensure(
                    recurrence.values[n] == size && series.values[n] == size,
                    || {
                        format!(
                            "{class}^{param} n={n}: |set|={size}, recurrence={}, series={}",
                            recurrence.values[n], series.values[n]
                        )
                    },
                )?;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(60))
}

fn criterion_5() -> Outcome {
    for param in sample() {
        let mut r = Generator::new(param, PathClass::R);
        let mut rt = Generator::new(param, PathClass::RTilde);
        let mut qq = Generator::new(param, PathClass::Q);
        for n in 0..=12 {
            let rs = path_set(r.level(n));
            let qs = path_set(qq.level(n));
            let ts = path_set(rt.level(n));
            let meet: BTreeSet<String> = rs.intersection(&qs).cloned().collect();
            ensure(meet == ts, || {
                format!("{param} n={n}: R ∩ Q differs from Rtilde")
            })?;
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (r, s) in [(1, 1), (2, 1), (1, 2), (2, 3), (1, 3), (3, 4)] {
        let param = q(r, s);
        let t = param.t_param().ok_or_else(|| format!("{param} has no t"))? as usize;
        let q_counts = count_recurrence(param, PathClass::Q, 10);
        let rt_counts = count_recurrence(param, PathClass::RTilde, 10 + t + 1);
        for n in 0..=10 {
            let report = check_bijection(param, n).map_err(|e| e.to_string())?;
            ensure(report.is_bijection(), || {
                format!("{param} n={n}: {report:?}")
            })?;
            ensure(report.round_trips == Some(true), || {
                format!("{param} n={n}: round trip failed")
            })?;
            for p in Generator::new(param, PathClass::Q).level(n) {
                let image = phi(param, p).map_err(|e| e.to_string())?;
                let back = phi_inv(param, &image).map_err(|e| e.to_string())?;
                ensure(back == *p, || {
                    format!("{param}: phi_inv(phi({p})) = {back}")
                })?;
            }
            ensure(q_counts.values[n] == rt_counts.values[n + t + 1], || {
                format!(
                    "{param} n={n}: |Q_n| = {}, |Rtilde_(n+t+1)| = {}",
                    q_counts.values[n],
                    rt_counts.values[n + t + 1]
                )
            })?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for (r, s) in [(3, 2), (5, 3), (5, 4)] {
        let param = q(r, s);
        let t = param.t_floor() as usize;
        let q_counts = count_recurrence(param, PathClass::Q, 10);
        let rt_counts = count_recurrence(param, PathClass::RTilde, 10 + t + 1);
        let witness = (0..=10).find(|&n| q_counts.values[n] != rt_counts.values[n + t + 1]);
        ensure(witness.is_some(), || {
            format!("{param}: |Q_n| = |Rtilde_(n+t+1)| for all n <= 10")
        })?;
        for alpha in ["", "UD"] {
            let alpha = DyckPath::parse(alpha).map_err(|e| e.to_string())?;
            let (p, p_prime) = collision_pair(param, &alpha).map_err(|e| e.to_string())?;
            let img = phi_rules(param, &p).map_err(|e| e.to_string())?;
            let img_prime = phi_rules(param, &p_prime).map_err(|e| e.to_string())?;
            ensure(p != p_prime && img == img_prime, || {
                format!("{param}: {p} and {p_prime} map to {img} and {img_prime}")
            })?;
            ensure(
                member(param, PathClass::Q, &p) && member(param, PathClass::Q, &p_prime),
                || format!("{param}: collision paths not both in Q"),
            )?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for param in sample() {
        let mut r = Generator::new(param, PathClass::R);
        let mut rt = Generator::new(param, PathClass::RTilde);
        for n in 0..=11 {
            let comps = enumerate_compositions(PartSet::unbounded(param), n);
            let comps_tilde = enumerate_compositions(PartSet::bounded(param), n);
            let paths = r.level(n + 1).to_vec();
            ensure(comps.len() == paths.len(), || {
                format!(
                    "{param} n={n}: |C^A| = {}, |R_(n+1)| = {}",
                    comps.len(),
                    paths.len()
                )
            })?;
            let tilde_len = rt.level(n + 1).len();
            ensure(comps_tilde.len() == tilde_len, || {
                format!(
                    "{param} n={n}: |C^Atilde| = {}, |Rtilde_(n+1)| = {tilde_len}",
                    comps_tilde.len()
                )
            })?;
            for c in &comps {
                let path = comp_to_path(param, c).map_err(|e| e.to_string())?;
                let back = path_to_comp(param, &path).map_err(|e| e.to_string())?;
                ensure(back == *c, || format!("{param}: {c} -> {path} -> {back}"))?;
            }
            for p in &paths {
                let c = path_to_comp(param, p).map_err(|e| e.to_string())?;
                let back = comp_to_path(param, &c).map_err(|e| e.to_string())?;
                ensure(back == *p, || format!("{param}: {p} -> {c} -> {back}"))?;
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for param in sample() {
        ensure(check_sum_identity(param, 40), || {
            format!("{param}: sum identity fails below order 40")
        })?;
        ensure(check_compositions_shift(param, 30), || {
            format!("{param}: delta_tilde - 1 != x * compositions gf below order 30")
        })?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let one = q(1, 1);
    let printed = count_q_without_prefix_family(one, 2);
    let enumerated = count_enumeration(one, PathClass::Q, 2);
    let chi = series_coeffs(&chi_gf(one), 2).map_err(|e| e.to_string())?;
    ensure(printed.values[2] == BigUint::from(1u32), || {
        format!("uncorrected v_2 = {}", printed.values[2])
    })?;
    ensure(
        enumerated.values[2] == BigUint::from(2u32) && chi.values[2] == BigUint::from(2u32),
        || {
            format!(
                "enumeration v_2 = {}, chi v_2 = {}",
                enumerated.values[2], chi.values[2]
            )
        },
    )?;
    for param in sample() {
        let corrected = count_recurrence(param, PathClass::Q, 12);
        let enumerated = count_enumeration(param, PathClass::Q, 12);
        let chi = series_coeffs(&chi_gf(param), 12).map_err(|e| e.to_string())?;
        ensure(
            corrected.values == enumerated.values && corrected.values == chi.values,
            || format!("{param}: corrected {corrected}, enumeration {enumerated}, chi {chi}"),
        )?;
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let start = Instant::now();
    for n in 1..=14 {
        let count = oracle_all_height2(n).len();
        ensure(count == 1 << (n - 1), || format!("n={n}: {count} paths"))?;
    }
    within(start.elapsed(), Duration::from_secs(30))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "sequence 1,1,1,2,3,6,10,19,33 for q=1/1 by three methods",
            criterion_1,
        ),
        ("table of C_n^A and R_(n+1) for q=3/4", criterion_2),
        (
            "worked membership examples for R^(3/4) and Q^(4/5)",
            criterion_3,
        ),
        (
            "constructive generation equals brute force; counts agree",
            criterion_4,
        ),
        ("R_n intersect Q_n equals Rtilde_n", criterion_5),
        ("phi is a bijection when s = tr+1", criterion_6),
        ("phi collides when s != tr+1", criterion_7),
        (
            "composition bijection round trips and cardinalities",
            criterion_8,
        ),
        ("series identities", criterion_9),
        ("Q recurrence needs the prefix-family term", criterion_10),
        ("oracle self-check 2^(n-1)", criterion_11),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  {:>2}  {name}  ({:.2?})", i + 1, start.elapsed()),
            Err(why) => {
                failures += 1;
                println!("FAIL  {:>2}  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
