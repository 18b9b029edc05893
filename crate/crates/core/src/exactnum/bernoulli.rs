//! Bernoulli numbers for the generating function `x / (e^x - 1)`.
//!
//! Values come from the Akiyama–Tanigawa transform, which naturally yields the
//! `B_1 = +1/2` convention; the sign of `B_1` is flipped on the way out.

use std::sync::{OnceLock, RwLock};

use super::rational::Rational;

#[derive(Default)]
struct Table {
    /// `values[k]` is B_k in the `+1/2` convention.
    values: Vec<Rational>,
    /// Working row of the transform after the last completed step.
    row: Vec<Rational>,
}

impl Table {
    fn extend_to(&mut self, k: usize) {
        while self.values.len() <= k {
            let m = self.values.len();
            self.row.push(Rational::new(1, m as i64 + 1));
            for j in (1..=m).rev() {
                let diff = &self.row[j - 1] - &self.row[j];
                self.row[j - 1] = diff * Rational::from(j as i64);
            }
            self.values.push(self.row[0].clone());
        }
    }
}

fn table() -> &'static RwLock<Table> {
    static TABLE: OnceLock<RwLock<Table>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(Table::default()))
}

/// Returns `B_k` with `x / (e^x - 1) = Σ B_k x^k / k!`, so `B_1 = -1/2`.
pub fn bernoulli(k: usize) -> Rational {
    let plus_convention = {
        let read = table().read().expect("bernoulli table poisoned");
        read.values.get(k).cloned()
    };
    let value = match plus_convention {
        Some(v) => v,
        None => {
            let mut write = table().write().expect("bernoulli table poisoned");
            write.extend_to(k);
            write.values[k].clone()
        }
    };
    if k == 1 {
        -value
    } else {
        value
    }
}
