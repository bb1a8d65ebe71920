//! Structure constants `m_lambda m_mu = sum_nu c_nu m_nu`.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hypermulti::{from_masks, ClassKey};
use crate::graphs::BitIter;

type Table = Arc<Vec<(ClassKey, BigUint)>>;

fn cache() -> &'static Mutex<HashMap<(ClassKey, ClassKey), Table>> {
    static CACHE: OnceLock<Mutex<HashMap<(ClassKey, ClassKey), Table>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Nonzero `c_nu` for the product `m_lambda m_mu` of two nonempty classes,
/// sorted by `nu`. Results are memoised per unordered pair.
///
/// The candidate classes `nu` come from overlaying `mu` on `lambda` by every
/// injective partial map of the points of `mu` into those of `lambda`.
/// `c_nu` is then the number of sub-multisets `A` of a fixed representative
/// of `nu` with `A` in class `lambda` and the complement in class `mu`.
pub fn product_table(lambda: &ClassKey, mu: &ClassKey) -> Result<Table> {
    if lambda.k() != mu.k() {
        return Err(Error::MismatchedUniformity {
            left: lambda.k(),
            right: mu.k(),
        });
    }
    let pair = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    if let Some(t) = cache().lock().expect("cache lock").get(&pair) {
        return Ok(t.clone());
    }
    let table = Arc::new(compute(&pair.0, &pair.1)?);
    cache().lock().expect("cache lock").insert(pair, table.clone());
    Ok(table)
}

fn compute(lambda: &ClassKey, mu: &ClassKey) -> Result<Vec<(ClassKey, BigUint)>> {
    let k = lambda.k();
    let (m1, m2) = (lambda.vertex_count(), mu.vertex_count());
    if m1 + m2 > 64 {
        return Err(Error::capacity("points in a product", m1 + m2, 64));
    }
    let le = lambda.edge_masks();
    let me = mu.edge_masks();

    let mut candidates: BTreeSet<ClassKey> = BTreeSet::new();
    let mut image = vec![0usize; m2];
    let mut err = None;
    overlay(m1, 0, 0, m1, &mut image, &mut |img| {
        let mut edges = le.clone();
        edges.extend(me.iter().map(|&e| BitIter(e).fold(0u64, |a, p| a | 1 << img[p])));
        match from_masks(k, &edges) {
            Ok(h) => {
                candidates.insert(h.key().clone());
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }

    let mut out = Vec::new();
    for nu in candidates {
        let c = split_count(&nu, lambda, mu)?;
        if !c.is_zero() {
            out.push((nu, c));
        }
    }
    Ok(out)
}

/// Injective maps of the points `p..` of `mu` into the unused points of
/// `lambda` or into fresh points, numbered from `m1` in order of use.
fn overlay(m1: usize, p: usize, used: u64, fresh: usize, image: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    if p == image.len() {
        f(image);
        return;
    }
    for q in 0..m1 {
        if used >> q & 1 == 0 {
            image[p] = q;
            overlay(m1, p + 1, used | 1 << q, fresh, image, f);
        }
    }
    image[p] = fresh;
    overlay(m1, p + 1, used, fresh + 1, image, f);
}

fn split_count(nu: &ClassKey, lambda: &ClassKey, mu: &ClassKey) -> Result<BigUint> {
    let k = nu.k();
    let edges = nu.edge_masks();
    let mut distinct: Vec<(u64, usize)> = Vec::new();
    for e in edges {
        match distinct.last_mut() {
            Some((d, r)) if *d == e => *r += 1,
            _ => distinct.push((e, 1)),
        }
    }
    let target = lambda.edge_count();
    let mut take = vec![0usize; distinct.len()];
    let mut count = BigUint::zero();
    let mut err = None;
    split_rec(&distinct, 0, target, &mut take, &mut |take| {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (i, &(e, r)) in distinct.iter().enumerate() {
            a.extend(std::iter::repeat_n(e, take[i]));
            b.extend(std::iter::repeat_n(e, r - take[i]));
        }
        match (from_masks(k, &a), from_masks(k, &b)) {
            (Ok(x), Ok(y)) => {
                if x.key() == lambda && y.key() == mu {
                    count += 1u32;
                }
            }
            (Err(e), _) | (_, Err(e)) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

fn split_rec(distinct: &[(u64, usize)], i: usize, left: usize, take: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    if i == distinct.len() {
        if left == 0 {
            f(take);
        }
        return;
    }
    for t in 0..=distinct[i].1.min(left) {
        take[i] = t;
        split_rec(distinct, i + 1, left - t, take, f);
    }
    take[i] = 0;
}
