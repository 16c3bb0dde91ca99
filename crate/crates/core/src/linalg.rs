//! Exact linear algebra: sparse echelon bases, kernels and ranks.
//!
//! Sparse vectors are `BTreeMap<K, E>` with no stored zeros. A row's pivot is
//! its smallest key, so reducing a vector in ascending key order never revisits
//! a key.

use std::collections::BTreeMap;
use std::ops::Bound::{Excluded, Unbounded};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::field::Field;

pub type SparseVec<K, E> = BTreeMap<K, E>;

/// A row-echelon basis of a subspace, keyed by pivot.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone, F: Field> {
    field: F,
    rows: BTreeMap<K, SparseVec<K, F::Elem>>,
}

impl<K: Ord + Clone, F: Field> Echelon<K, F> {
    pub fn new(field: F) -> Self {
        Echelon { field, rows: BTreeMap::new() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, key: &K) -> bool {
        self.rows.contains_key(key)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K, F::Elem>> {
        self.rows.values()
    }

    /// Remainder of `v` modulo the span; its keys are all non-pivots.
    pub fn reduce(&self, mut v: SparseVec<K, F::Elem>) -> SparseVec<K, F::Elem> {
        let mut cursor: Option<K> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(c) => v
                    .range((Excluded(c), Unbounded))
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned(),
            };
            let Some(k) = next else { break };
            let coef = v[&k].clone();
            for (rk, rc) in &self.rows[&k] {
                let t = self.field.mul(&coef, rc);
                let updated = match v.get(rk) {
                    Some(cur) => self.field.sub(cur, &t),
                    None => self.field.neg(&t),
                };
                if self.field.is_zero(&updated) {
                    v.remove(rk);
                } else {
                    v.insert(rk.clone(), updated);
                }
            }
            cursor = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K, F::Elem>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span. Returns the normalized new row, or `None` when
    /// `v` was already in the span.
    pub fn insert(&mut self, v: SparseVec<K, F::Elem>) -> Option<&SparseVec<K, F::Elem>> {
        let mut r = self.reduce(v);
        let (pivot, lead) = match r.iter().next() {
            Some((k, c)) => (k.clone(), c.clone()),
            None => return None,
        };
        let scale = self.field.inv(&lead);
        for c in r.values_mut() {
            *c = self.field.mul(c, &scale);
        }
        self.rows.insert(pivot.clone(), r);
        self.rows.get(&pivot)
    }

    /// Subspace containment `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Echelon<K, F>) -> bool {
        self.rows.values().all(|r| other.contains(r))
    }

    pub fn same_span(&self, other: &Echelon<K, F>) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

/// Keys of the augmented vectors used by [`kernel`]: image coordinates sort
/// before tags.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Aug<K> {
    Image(K),
    Tag(usize),
}

/// Basis of the kernel of the linear map sending the i-th standard basis
/// vector to `images[i]`. Kernel vectors are indexed by position in `images`.
pub fn kernel<K: Ord + Clone, F: Field>(
    field: &F,
    images: &[SparseVec<K, F::Elem>],
) -> Vec<SparseVec<usize, F::Elem>> {
    let mut ech: Echelon<Aug<K>, F> = Echelon::new(field.clone());
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut v: SparseVec<Aug<K>, F::Elem> = img
            .iter()
            .map(|(k, c)| (Aug::Image(k.clone()), c.clone()))
            .collect();
        v.insert(Aug::Tag(i), field.one());
        if let Some(row) = ech.insert(v) {
            if let Some((Aug::Tag(_), _)) = row.iter().next() {
                out.push(
                    row.iter()
                        .filter_map(|(k, c)| match k {
                            Aug::Tag(t) => Some((*t, c.clone())),
                            Aug::Image(_) => None,
                        })
                        .collect(),
                );
            }
        }
    }
    out
}

/// Rank of a dense matrix over a field by Gaussian elimination.
pub fn rank_dense<F: Field>(field: &F, mut m: Vec<Vec<F::Elem>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !field.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(rank, p);
        let inv = field.inv(&m[rank][col]);
        for r in rank + 1..rows {
            if field.is_zero(&m[r][col]) {
                continue;
            }
            let factor = field.mul(&m[r][col], &inv);
            for c in col..cols {
                let t = field.mul(&factor, &m[rank][c]);
                m[r][c] = field.sub(&m[r][c], &t);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the rationals of an integer matrix, by fraction-free (Bareiss)
/// elimination. Every intermediate entry is a minor of the input, so the
/// divisions are exact.
pub fn rank_fraction_free(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // smallest nonzero pivot keeps the minors small
        let Some(p) = (rank..rows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()))
        else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col].clone();
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for c in col + 1..cols {
                let num = &pivot * &row[c] - &lead * &pivot_row[c];
                debug_assert!(num.is_multiple_of(&prev));
                row[c] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}
