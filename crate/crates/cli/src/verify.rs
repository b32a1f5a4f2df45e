//! Invariant checks behind `rdyck verify`.

use std::collections::BTreeSet;

use rdyck::counting::{check_compositions_shift, check_sum_identity, gf_for};
use rdyck::qmap::phi_rules;
use rdyck::{
    check_bijection, collision_pair, comp_to_path, count_recurrence, enumerate_compositions,
    oracle_generate, path_to_comp, series_coeffs, DyckPath, Generator, PartSet, PathClass,
    RationalParam,
};

pub struct Check {
    pub name: String,
    /// `None` on success, otherwise a description with witnesses.
    pub failure: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        Self {
            name: name.into(),
            failure,
        }
    }
}

fn first_failure<I: IntoIterator<Item = Option<String>>>(items: I) -> Option<String> {
    items.into_iter().flatten().next()
}

fn rendered(paths: &[DyckPath]) -> BTreeSet<String> {
    paths.iter().map(DyckPath::render).collect()
}

pub fn run(q: RationalParam, nmax: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    for class in PathClass::ALL {
        let mut gen = Generator::new(q, class);
        let failure = first_failure((0..=nmax).map(|n| {
            let built = rendered(gen.level(n));
            let oracle = rendered(&oracle_generate(q, class, n));
            let diff: Vec<_> = built
                .symmetric_difference(&oracle)
                .take(5)
                .cloned()
                .collect();
            (!diff.is_empty()).then(|| format!("n={n}: {}", diff.join(" ")))
        }));
        checks.push(Check::new(
            format!("generation matches oracle ({class})"),
            failure,
        ));
    }

    for class in PathClass::ALL {
        let mut gen = Generator::new(q, class);
        let rec = count_recurrence(q, class, nmax);
        let failure = match series_coeffs(&gf_for(q, class), nmax) {
            Err(e) => Some(e.to_string()),
            Ok(ser) => first_failure((0..=nmax).map(|n| {
                let size = gen.level(n).len();
                let agree = rec.values[n] == size.into() && ser.values[n] == size.into();
                (!agree).then(|| {
                    format!(
                        "n={n}: enumeration {size}, recurrence {}, series {}",
                        rec.values[n], ser.values[n]
                    )
                })
            })),
        };
        checks.push(Check::new(format!("count agreement ({class})"), failure));
    }

    {
        let mut r = Generator::new(q, PathClass::R);
        let mut rt = Generator::new(q, PathClass::RTilde);
        let mut qq = Generator::new(q, PathClass::Q);
        let failure = first_failure((0..=nmax).map(|n| {
            let rs = rendered(r.level(n));
            let qs = rendered(qq.level(n));
            let ts = rendered(rt.level(n));
            let meet: BTreeSet<String> = rs.intersection(&qs).cloned().collect();
            let diff: Vec<_> = meet.symmetric_difference(&ts).take(5).cloned().collect();
            (!diff.is_empty()).then(|| format!("n={n}: {}", diff.join(" ")))
        }));
        checks.push(Check::new("R and Q intersect in Rtilde", failure));
    }

    {
        let mut r = Generator::new(q, PathClass::R);
        let mut rt = Generator::new(q, PathClass::RTilde);
        let failure = first_failure((0..nmax).map(|n| {
            let comps = enumerate_compositions(PartSet::unbounded(q), n);
            let tilde = enumerate_compositions(PartSet::bounded(q), n).len();
            let paths = r.level(n + 1).to_vec();
            if comps.len() != paths.len() || tilde != rt.level(n + 1).len() {
                return Some(format!("n={n}: cardinalities differ"));
            }
            for c in &comps {
                match comp_to_path(q, c).and_then(|p| path_to_comp(q, &p).map(|b| (p, b))) {
                    Ok((_, back)) if back == *c => {}
                    Ok((p, back)) => return Some(format!("{c} -> {p} -> {back}")),
                    Err(e) => return Some(format!("{c}: {e}")),
                }
            }
            for p in &paths {
                match path_to_comp(q, p).and_then(|c| comp_to_path(q, &c)) {
                    Ok(back) if back == *p => {}
                    Ok(back) => return Some(format!("{p} -> {back}")),
                    Err(e) => return Some(format!("{p}: {e}")),
                }
            }
            None
        }));
        checks.push(Check::new("composition bijection", failure));
    }

    let failure = (!check_sum_identity(q, 40)).then(|| "order 40".to_string());
    checks.push(Check::new("peak-sum folding identity", failure));
    let failure = (!check_compositions_shift(q, 30)).then(|| "order 30".to_string());
    checks.push(Check::new(
        "Rtilde series minus 1 is shifted compositions series",
        failure,
    ));

    if q.t_param().is_some() {
        let failure = first_failure((0..=nmax).map(|n| match check_bijection(q, n) {
            Err(e) => Some(format!("n={n}: {e}")),
            Ok(rep) if rep.is_bijection() && rep.round_trips == Some(true) => None,
            Ok(rep) => Some(format!(
                "n={n}: injective={} surjective={} round_trips={:?} collisions: {}",
                rep.injective,
                rep.surjective,
                rep.round_trips,
                rep.collisions
                    .iter()
                    .take(3)
                    .map(|(a, b)| format!("{a}/{b}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            )),
        }));
        checks.push(Check::new("phi is a bijection", failure));
    } else {
        let failure = match collision_pair(q, &DyckPath::empty()) {
            Err(e) => Some(e.to_string()),
            Ok((p, p_prime)) => {
                let same = phi_rules(q, &p).ok() == phi_rules(q, &p_prime).ok();
                match check_bijection(q, p.semilength()) {
                    _ if !same => Some(format!("{p} and {p_prime} have different images")),
                    Err(e) => Some(e.to_string()),
                    Ok(rep) if !rep.injective && rep.card_domain > rep.card_codomain => None,
                    Ok(rep) => Some(format!(
                        "n={}: no collision detected ({} vs {})",
                        rep.n, rep.card_domain, rep.card_codomain
                    )),
                }
            }
        };
        checks.push(Check::new("phi collides", failure));
    }

    checks
}
