//! Character tables of symmetric groups.
//!
//! Irreducible character values are computed by the Murnaghan-Nakayama
//! border-strip recursion on first-column hook lengths (beta numbers):
//! peeling a cycle of length t from the class corresponds to moving a beta
//! number down by t, with sign (-1)^(number of beta numbers jumped over).
//! Permutation character values count the assignments of the (labelled)
//! cycles of the class to the rows of the shape.
//!
//! Rows are indexed by the character label, columns by the class label, both
//! in the canonical partition order. The table of S_n satisfies
//! X^t * X = diag(z_mu).

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::IntMatrix;
use crate::partitions::{enumerate, PartSet, Partition};

/// Largest n for which tables are built; beyond this the cost of the dense
/// p(n) x p(n) table stops being laptop-friendly.
pub const MAX_TABLE_N: u32 = 24;

/// The irreducible character table X of S_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharTable {
    n: u32,
    labels: Vec<Partition>,
    values: IntMatrix,
}

/// The permutation character table Xi of S_n (characters induced from
/// trivial characters of Young subgroups). Lower triangular in the canonical
/// order with b_mu on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermTable {
    n: u32,
    labels: Vec<Partition>,
    values: IntMatrix,
}

impl CharTable {
    pub fn build(n: u32) -> Result<CharTable, Error> {
        if n > MAX_TABLE_N {
            return Err(Error::Capacity { n, max: MAX_TABLE_N });
        }
        let labels = enumerate(n, &PartSet::All);
        let mut eval = CharEvaluator::default();
        let values = IntMatrix::from_fn(labels.len(), labels.len(), |r, c| {
            eval.value(labels[r].parts(), labels[c].parts())
        });
        Ok(CharTable { n, labels, values })
    }

    /// Rebuild from parts (e.g. a cache file); validates the label list and
    /// the shape, but not the values.
    pub fn from_parts(n: u32, labels: Vec<Partition>, values: IntMatrix) -> Result<Self, Error> {
        let canonical = enumerate(n, &PartSet::All);
        if labels != canonical {
            return Err(Error::Precondition(
                "labels are not the canonical partition list".into(),
            ));
        }
        if values.rows() != labels.len() || values.cols() != labels.len() {
            return Err(Error::ShapeMismatch(format!(
                "table for n={} must be {}x{}",
                n,
                labels.len(),
                labels.len()
            )));
        }
        Ok(CharTable { n, labels, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn values(&self) -> &IntMatrix {
        &self.values
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Centralizer orders z_mu in label order.
    pub fn centralizer_orders(&self) -> Vec<BigInt> {
        self.labels.iter().map(|mu| mu.stats().z).collect()
    }
}

impl PermTable {
    pub fn build(n: u32) -> Result<PermTable, Error> {
        if n > MAX_TABLE_N {
            return Err(Error::Capacity { n, max: MAX_TABLE_N });
        }
        let labels = enumerate(n, &PartSet::All);
        let values = IntMatrix::from_fn(labels.len(), labels.len(), |r, c| {
            permutation_count(labels[r].parts(), &labels[c])
        });
        let table = PermTable { n, labels, values };
        // lower triangularity with diagonal b_mu is forced by the theory;
        // a violation here means the builder is broken
        for (i, mu) in table.labels.iter().enumerate() {
            assert_eq!(
                table.values[(i, i)],
                mu.stats().b,
                "permutation table diagonal at {mu}"
            );
            for j in i + 1..table.labels.len() {
                assert!(
                    table.values[(i, j)].is_zero(),
                    "permutation table not lower triangular at ({i},{j})"
                );
            }
        }
        Ok(table)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn values(&self) -> &IntMatrix {
        &self.values
    }
}

/// chi^lambda evaluated on the class of cycle type mu.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<BigInt, Error> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch(lambda.n(), mu.n()));
    }
    Ok(CharEvaluator::default().value(lambda.parts(), mu.parts()))
}

/// xi^lambda evaluated on the class of cycle type mu: the number of ways to
/// hand the cycles of mu to the rows of lambda so that row i receives total
/// length lambda_i.
pub fn permutation_value(lambda: &Partition, mu: &Partition) -> Result<BigInt, Error> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch(lambda.n(), mu.n()));
    }
    Ok(permutation_count(lambda.parts(), mu))
}

/// True iff the exact transition matrix T with T*X = Xi is integral and
/// upper unitriangular in the canonical order.
pub fn transition_unitriangular_check(x: &CharTable, xi: &PermTable) -> Result<bool, Error> {
    if x.n() != xi.n() {
        return Err(Error::SizeMismatch(x.n(), xi.n()));
    }
    let t = x.values().solve_right(xi.values())?;
    Ok(t.is_integral() && t.is_upper_unitriangular() == Some(true))
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama recursion

#[derive(Default)]
struct CharEvaluator {
    // (remaining shape, remaining class) -> value
    memo: HashMap<(Vec<u32>, Vec<u32>), BigInt>,
}

impl CharEvaluator {
    // shape and class both decreasing; their sums agree
    fn value(&mut self, shape: &[u32], class: &[u32]) -> BigInt {
        if class.is_empty() {
            return BigInt::one();
        }
        let key = (shape.to_vec(), class.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let t = u64::from(class[0]);
        let rest = &class[1..];
        let m = shape.len();
        let betas: Vec<u64> = shape
            .iter()
            .enumerate()
            .map(|(i, &p)| u64::from(p) + (m - 1 - i) as u64)
            .collect();
        let mut total = BigInt::zero();
        for (j, &b) in betas.iter().enumerate() {
            if b < t {
                break; // betas are strictly decreasing
            }
            let nb = b - t;
            if betas.contains(&nb) {
                continue;
            }
            let height = betas.iter().filter(|&&c| nb < c && c < b).count();
            let mut new_betas = betas.clone();
            new_betas[j] = nb;
            let sub = self.value(&shape_from_betas(&new_betas), rest);
            if height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

fn shape_from_betas(betas: &[u64]) -> Vec<u32> {
    let mut sorted = betas.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let m = sorted.len();
    sorted
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (m - 1 - i) as u64) as u32)
        .filter(|&p| p > 0)
        .collect()
}

// ---------------------------------------------------------------------------
// permutation characters by multiset assignment counting

fn permutation_count(rows: &[u32], mu: &Partition) -> BigInt {
    let mult = mu.multiplicities();
    let sizes: Vec<u32> = mult.keys().copied().collect();
    let counts: Vec<u32> = mult.values().copied().collect();
    let mut eval = PermEvaluator {
        sizes,
        memo: HashMap::new(),
    };
    eval.value(rows, 0, &counts)
}

struct PermEvaluator {
    sizes: Vec<u32>,
    memo: HashMap<(usize, Vec<u32>), BigInt>,
}

impl PermEvaluator {
    fn value(&mut self, rows: &[u32], idx: usize, counts: &[u32]) -> BigInt {
        if idx == rows.len() {
            return if counts.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (idx, counts.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut choices = Vec::new();
        let mut chosen = counts.to_vec();
        self.collect_choices(0, rows[idx], counts, BigInt::one(), &mut chosen, &mut choices);
        let mut total = BigInt::zero();
        for (coeff, rest) in choices {
            total += coeff * self.value(rows, idx + 1, &rest);
        }
        self.memo.insert(key, total.clone());
        total
    }

    // all sub-multisets of `counts` with total size `remaining`, together
    // with the number of ways to pick them from the labelled cycles
    fn collect_choices(
        &self,
        s: usize,
        remaining: u32,
        counts: &[u32],
        coeff: BigInt,
        scratch: &mut Vec<u32>,
        out: &mut Vec<(BigInt, Vec<u32>)>,
    ) {
        if s == self.sizes.len() {
            if remaining == 0 {
                out.push((coeff, scratch.clone()));
            }
            return;
        }
        let size = self.sizes[s];
        let max_take = counts[s].min(remaining / size);
        for take in 0..=max_take {
            let ways = num_integer::binomial(BigInt::from(counts[s]), BigInt::from(take));
            scratch[s] = counts[s] - take;
            self.collect_choices(
                s + 1,
                remaining - take * size,
                counts,
                &coeff * ways,
                scratch,
                out,
            );
        }
        scratch[s] = counts[s];
    }
}
