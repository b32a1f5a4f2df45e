//! The map φ from `Q_n^{r/s}` to `R̃_{n+t+1}^{r/s}`, its inverse, and the
//! collision construction showing φ fails to be injective when `s ≠ t·r + 1`.
//!
//! φ appends `(UD)^{t+1}`, which adds `t+1` valleys to the last block, and
//! when the last block of the argument is not admissible in `R̃` it first
//! trades `h` of its trailing peaks for valleys, `h` being the least value that
//! makes the resulting block admissible. Everything here acts on the last
//! block only; the preceding blocks are carried over unchanged.
//!
//! The case rules are evaluated with the true bound `ν_j = ⌈j·s/r⌉`. When
//! `s = t·r + 1` this is `j·t + 1`, and the closed forms for `h` are checked
//! against the direct search.

use std::collections::BTreeMap;

use crate::classes::{member, Generator, PathClass};
use crate::error::{Error, Result};
use crate::param::RationalParam;
use crate::path::{Block, DyckPath};

/// Preceding blocks and the last block `(peaks, valleys)` of a nonempty path.
/// `UD` is treated as a lone `(0, 0)` block.
fn split_last(path: &DyckPath) -> Result<(Vec<Block>, Block)> {
    let mut blocks = path.factorize()?.blocks().to_vec();
    let last = blocks.pop().unwrap_or(Block::new(0, 0));
    Ok((blocks, last))
}

fn rebuild(init: &[Block], last: Block) -> DyckPath {
    DyckPath::from_runs(
        init.iter()
            .chain(std::iter::once(&last))
            .map(|b| (b.peaks, b.valleys)),
    )
}

/// Smallest `h` with `valleys + h + t + 1 ≥ ν_{peaks-h}`, for `h < peaks`.
fn min_trade(q: RationalParam, t: usize, peaks: usize, valleys: usize) -> usize {
    (0..peaks)
        .find(|&h| valleys + h + t + 1 >= q.min_valleys(peaks - h))
        .expect("h = peaks - 1 always satisfies the bound")
}

/// Only meaningful when `s = t·r + 1`; otherwise nothing is checked.
fn check_closed_form(
    q: RationalParam,
    what: &str,
    closed: impl FnOnce() -> usize,
    searched: usize,
) -> Result<()> {
    if q.t_param().is_none() {
        return Ok(());
    }
    let closed = closed();
    if closed != searched {
        return Err(Error::FormulaMismatch(format!(
            "{what} for {q}: closed form {closed}, search {searched}"
        )));
    }
    Ok(())
}

/// ⌈a/b - 1⌉ for `a ≥ 0`, `b > 0`.
fn ceil_minus_one(a: usize, b: usize) -> usize {
    a.div_ceil(b).saturating_sub(1)
}

/// φ with `t = ⌊(s-1)/r⌋`. For `s = t·r + 1` this is the bijection; otherwise
/// it is the same rule set, used to exhibit collisions.
pub fn phi_rules(q: RationalParam, path: &DyckPath) -> Result<DyckPath> {
    if !member(q, PathClass::Q, path) {
        return Err(Error::NotMember {
            class: PathClass::Q.to_string(),
            path: path.render(),
        });
    }
    let t = q.t_floor() as usize;
    if path.is_empty() {
        return Ok(DyckPath::flat(t + 1));
    }
    if member(q, PathClass::RTilde, path) {
        return Ok(path.concat(&DyckPath::flat(t + 1)));
    }
    let (init, last) = split_last(path)?;
    let r = q.r_len();
    let traded = if last.valleys == 0 {
        // α·U(UD)^j·D
        let j = last.peaks;
        let h = min_trade(q, t, j, 0);
        check_closed_form(q, "h", || ceil_minus_one(j * t + 1, t + 1), h)?;
        Block::new(j - h, h)
    } else {
        // α·U(UD)^r(DU)^j·D with 1 ≤ j < s
        debug_assert_eq!(last.peaks, r);
        let j = last.valleys;
        let s = q.s() as usize;
        if j + t + 1 >= s {
            last
        } else {
            let h = min_trade(q, t, r, j);
            check_closed_form(q, "h", || ceil_minus_one(r * t + 1 - j, t + 1), h)?;
            Block::new(r - h, j + h)
        }
    };
    let image = rebuild(&init, Block::new(traded.peaks, traded.valleys + t + 1));
    debug_assert!(member(q, PathClass::RTilde, &image));
    Ok(image)
}

/// φ: `Q_n → R̃_{n+t+1}`, defined when `s = t·r + 1`.
pub fn phi(q: RationalParam, path: &DyckPath) -> Result<DyckPath> {
    q.t_param().ok_or(Error::NoTParam { r: q.r(), s: q.s() })?;
    phi_rules(q, path)
}

/// φ⁻¹: `R̃_{n+t+1} → Q_n`, with `t = ⌊(s-1)/r⌋`. Only an inverse when
/// `s = t·r + 1`.
pub fn phi_inv(q: RationalParam, path: &DyckPath) -> Result<DyckPath> {
    if !member(q, PathClass::RTilde, path) {
        return Err(Error::NotMember {
            class: PathClass::RTilde.to_string(),
            path: path.render(),
        });
    }
    let t = q.t_floor() as usize;
    let not_in_image = || Error::NotInImage {
        path: path.render(),
    };
    if path.semilength() < t + 1 {
        return Err(not_in_image());
    }
    if *path == DyckPath::flat(t + 1) {
        return Ok(DyckPath::empty());
    }
    let (
        init,
        Block {
            peaks: j,
            valleys: h,
        },
    ) = split_last(path)?;
    // ν_0 is taken as 1
    let nu = if j == 0 { 1 } else { q.min_valleys(j) };
    if h < t + 1 {
        return Err(not_in_image());
    }
    let spare = h - t - 1;
    let r = q.r_len();
    let last = if spare >= nu {
        Block::new(j, spare)
    } else if j + spare <= r {
        Block::new(j + spare, 0)
    } else {
        Block::new(r, j + spare - r)
    };
    Ok(rebuild(&init, last))
}

/// Outcome of applying φ to all of `Q_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiReport {
    pub q: RationalParam,
    pub n: usize,
    pub t: usize,
    pub injective: bool,
    pub surjective: bool,
    pub card_domain: usize,
    pub card_codomain: usize,
    /// Pairs of distinct members of `Q_n` with the same image.
    pub collisions: Vec<(DyckPath, DyckPath)>,
    /// Every image lies in `R̃_{n+t+1}`.
    pub images_in_codomain: bool,
    /// `φ⁻¹∘φ = id` on `Q_n` and `φ∘φ⁻¹ = id` on `R̃_{n+t+1}`; checked only
    /// when `s = t·r + 1`.
    pub round_trips: Option<bool>,
}

impl PhiReport {
    pub fn is_bijection(&self) -> bool {
        self.injective && self.surjective && self.images_in_codomain
    }
}

/// Applies the φ rules to every member of `Q_n` and compares with `R̃_{n+t+1}`.
pub fn check_bijection(q: RationalParam, n: usize) -> Result<PhiReport> {
    let t = q.t_floor() as usize;
    let domain = Generator::new(q, PathClass::Q).level(n).to_vec();
    let codomain = Generator::new(q, PathClass::RTilde)
        .level(n + t + 1)
        .to_vec();

    let mut preimages: BTreeMap<DyckPath, Vec<DyckPath>> = BTreeMap::new();
    for path in &domain {
        preimages
            .entry(phi_rules(q, path)?)
            .or_default()
            .push(path.clone());
    }
    let mut collisions = Vec::new();
    for group in preimages.values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                collisions.push((a.clone(), b.clone()));
            }
        }
    }
    let images: Vec<&DyckPath> = preimages.keys().collect();
    let images_in_codomain = images.iter().all(|p| codomain.binary_search(p).is_ok());
    let surjective = codomain.iter().all(|p| preimages.contains_key(p));

    let round_trips = match q.t_param() {
        Some(_) => {
            let forward = domain
                .iter()
                .all(|p| phi_rules(q, p).and_then(|img| phi_inv(q, &img)).as_ref() == Ok(p));
            let backward = codomain
                .iter()
                .all(|p| phi_inv(q, p).and_then(|pre| phi_rules(q, &pre)).as_ref() == Ok(p));
            Some(forward && backward)
        }
        None => None,
    };

    Ok(PhiReport {
        q,
        n,
        t,
        injective: collisions.is_empty(),
        surjective,
        card_domain: domain.len(),
        card_codomain: codomain.len(),
        collisions,
        images_in_codomain,
        round_trips,
    })
}

/// Two distinct members of `Q` with the same φ image, for `t·r + 1 < s < (t+1)·r`.
///
/// With `j_0` the least index with `ν_{r-j_0} - ν_{r-j_0-1} = t+1`, the pair is
/// `P' = α·U(UD)^{r-j_0-1}(DU)^{ν_{r-j_0-1}}·D` together with
/// `P = α·U(UD)^r(DU)^e·D`, `e = s - (t+1)(j_0+1) - 1`. When `e < 0` the
/// second path is `α·U(UD)^{r+e}·D` instead; it reaches the same image through
/// a shorter trade.
pub fn collision_pair(q: RationalParam, alpha: &DyckPath) -> Result<(DyckPath, DyckPath)> {
    let r = q.r_len();
    let s = q.s() as usize;
    let t = q.t_floor() as usize;
    if q.t_param().is_some() || s >= (t + 1) * r {
        return Err(Error::Precondition(format!(
            "{q} needs t*r + 1 < s < (t+1)*r"
        )));
    }
    if !member(q, PathClass::RTilde, alpha) {
        return Err(Error::NotMember {
            class: PathClass::RTilde.to_string(),
            path: alpha.render(),
        });
    }
    let j0 = (0..r - 1)
        .find(|&j| q.min_valleys(r - j) - q.min_valleys(r - j - 1) == t + 1)
        .ok_or_else(|| Error::Precondition(format!("no jump of t+1 in nu for {q}")))?;
    let low_nu = q.min_valleys(r - j0 - 1);
    debug_assert_eq!(q.min_valleys(r - j0), s - t * j0);
    debug_assert_eq!(low_nu, s - t * (j0 + 1) - 1);

    let exponent = s as isize - ((t + 1) * (j0 + 1)) as isize - 1;
    let first = if exponent >= 0 {
        DyckPath::from_runs([(r, exponent as usize)])
    } else {
        DyckPath::from_runs([(r - exponent.unsigned_abs(), 0)])
    };
    let second = DyckPath::from_runs([(r - j0 - 1, low_nu)]);
    let p = alpha.concat(&first);
    let p_prime = alpha.concat(&second);

    let in_q = member(q, PathClass::Q, &p) && member(q, PathClass::Q, &p_prime);
    let image = phi_rules(q, &p)?;
    if p == p_prime || !in_q || image != phi_rules(q, &p_prime)? {
        return Err(Error::FormulaMismatch(format!(
            "collision construction failed for {q}: {p} / {p_prime}"
        )));
    }
    Ok((p, p_prime))
}
