//! Exhaustive measurement on concrete codes, and the brute-force
//! information oracle for construction 2's file size.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::Zero;
use serde_json::json;

use crate::codes::GluedCode;
use crate::error::{Error, Result};
use crate::exactmath::{int, to_decimal, to_exact_string, Rational};
use crate::gf::Matrix;
use crate::tradeoff::SystemParams;

pub const DEFAULT_ORACLE_MAX_NODES: usize = 20;

const DECIMAL_PLACES: u32 = 15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairRecord {
    pub failed: usize,
    pub helpers: Vec<usize>,
    pub subsymbols: usize,
}

/// Bandwidth tallies from repairing every node from every helper set.
/// All rationals are per unit of total (all-copies) file size, except
/// `nonempty_gamma`, which is per unit of one copy's file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairLedger {
    pub records: Vec<RepairRecord>,
    pub file_subsymbols: usize,
    pub node_gamma: Vec<Rational>,
    /// Average over (copy, helper set) of the per-copy bandwidth when the
    /// failed node is non-empty in that copy.
    pub nonempty_gamma: Rational,
    pub gamma: Rational,
    pub alpha: Rational,
}

fn frac(num: usize, den: usize) -> Rational {
    Rational::new((num as i64).into(), (den as i64).into())
}

/// Repairs every node from every `d`-subset of the others, checking each
/// replacement; stops at the first mismatch.
pub fn sweep_repairs(code: &GluedCode, d: usize) -> Result<RepairLedger> {
    let n = code.n;
    if d == 0 || d >= n {
        return Err(Error::InvalidParams(format!(
            "repair degree {d} needs 1 <= d <= n-1 = {}",
            n - 1
        )));
    }
    let total_file = code.file_subsymbols();
    let copy_file = code.small.file_subsymbols();
    let mut records = Vec::new();
    let mut node_gamma = Vec::with_capacity(n);
    let mut nonempty_subsymbols = 0usize;
    let mut nonempty_events = 0usize;

    for failed in 0..n {
        let others: Vec<usize> = (0..n).filter(|&v| v != failed).collect();
        let mut node_total = 0usize;
        let mut sets = 0usize;
        for helpers in others.into_iter().combinations(d) {
            let outcome = code.repair(failed, &helpers)?;
            for (copy, &b) in code.copies.iter().zip(&outcome.per_copy_subsymbols) {
                if copy.role(failed).is_some() {
                    nonempty_subsymbols += b;
                    nonempty_events += 1;
                }
            }
            node_total += outcome.total_subsymbols;
            sets += 1;
            records.push(RepairRecord {
                failed,
                helpers,
                subsymbols: outcome.total_subsymbols,
            });
        }
        node_gamma.push(frac(node_total, sets * total_file));
    }

    let all: usize = records.iter().map(|r| r.subsymbols).sum();
    let gamma = frac(all, records.len() * total_file);
    let nonempty_gamma = if nonempty_events == 0 {
        Rational::zero()
    } else {
        frac(nonempty_subsymbols, nonempty_events * copy_file)
    };
    Ok(RepairLedger {
        records,
        file_subsymbols: total_file,
        node_gamma,
        nonempty_gamma,
        gamma,
        alpha: code.normalized_storage(0),
    })
}

/// Checks reconstruction from every `k`-subset; returns how many were checked.
pub fn sweep_reconstructions(code: &GluedCode, k: usize) -> Result<usize> {
    let mut count = 0;
    for subset in (0..code.n).combinations(k) {
        code.verify_reconstruction(&subset)?;
        count += 1;
    }
    Ok(count)
}

/// Linear information held by `positions`, as a fraction of the total file:
/// the rank of their stacked generator rows summed over copies.
pub fn subset_information(code: &GluedCode, positions: &[usize]) -> Rational {
    if positions.is_empty() {
        return Rational::zero();
    }
    let small = &code.small;
    let m = small.file_subsymbols();
    let mut ranks: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut total = 0usize;
    for copy in &code.copies {
        let mut roles: Vec<usize> = positions.iter().filter_map(|&v| copy.role(v)).collect();
        roles.sort_unstable();
        let r = *ranks.entry(roles).or_insert_with_key(|roles| {
            let gens: Vec<&Matrix> = roles.iter().map(|&j| small.generator(j)).collect();
            Matrix::vstack(small.field(), m, &gens)
                .map(|s| s.rank())
                .unwrap_or(0)
        });
        total += r;
    }
    frac(total, code.file_subsymbols())
}

/// Iterates `size`-subsets of `0..n` as bitmasks (Gosper's hack).
fn subsets(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if size == 0 { 0 } else { (1u64 << size) - 1 };
    let mut next = Some(first).filter(|&s| s < limit || (size == 0));
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let s = (((r ^ cur) >> 2) / c) | r;
            (s < limit).then_some(s)
        };
        Some(cur)
    })
}

/// Average information in a `k`-node subset under the ideal MSR model
/// `H_w = min(w, k_hat) alpha_hat`, averaged over every placement of the
/// `(k_hat + n - d)`-node small code and every `k`-subset.
pub fn mk_oracle(params: &SystemParams, k_hat: usize) -> Result<Rational> {
    mk_oracle_with_cap(params, k_hat, DEFAULT_ORACLE_MAX_NODES)
}

pub fn mk_oracle_with_cap(
    params: &SystemParams,
    k_hat: usize,
    max_nodes: usize,
) -> Result<Rational> {
    let (n, k, d) = (params.n, params.k, params.d);
    if k_hat < 1 || k_hat > d {
        return Err(Error::OutOfRange {
            name: "k_hat",
            value: k_hat as i64,
            lo: 1,
            hi: d as i64,
        });
    }
    if n > max_nodes.min(63) {
        return Err(Error::CapExceeded {
            what: "node count for brute-force enumeration",
            value: n,
            cap: max_nodes.min(63),
        });
    }
    let n_hat = k_hat + n - d;
    let readers: Vec<u64> = subsets(n, k).collect();
    let mut total: u128 = 0;
    let mut count: u128 = 0;
    for placement in subsets(n, n_hat) {
        for &reader in &readers {
            let overlap = (placement & reader).count_ones() as usize;
            total += overlap.min(k_hat) as u128;
            count += 1;
        }
    }
    let alpha_hat = &params.file_size / int(k_hat as i64);
    let avg = Rational::new(
        num_bigint::BigInt::from(total),
        num_bigint::BigInt::from(count),
    );
    Ok(avg * alpha_hat)
}

impl RepairLedger {
    /// CSV with columns `kind,failed,helpers,subsymbols,value_exact,value`.
    /// `helpers` is space separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,failed,helpers,subsymbols,value_exact,value\n");
        let mut row = |kind: &str, failed: String, helpers: String, subs: String, v: &Rational| {
            out.push_str(&format!(
                "{kind},{failed},{helpers},{subs},{},{}\n",
                to_exact_string(v),
                to_decimal(v, DECIMAL_PLACES)
            ));
        };
        for r in &self.records {
            let v = frac(r.subsymbols, self.file_subsymbols);
            row(
                "pair",
                r.failed.to_string(),
                r.helpers.iter().join(" "),
                r.subsymbols.to_string(),
                &v,
            );
        }
        for (i, g) in self.node_gamma.iter().enumerate() {
            row("node", i.to_string(), String::new(), String::new(), g);
        }
        row(
            "nonempty",
            String::new(),
            String::new(),
            String::new(),
            &self.nonempty_gamma,
        );
        row(
            "gamma",
            String::new(),
            String::new(),
            String::new(),
            &self.gamma,
        );
        row(
            "alpha",
            String::new(),
            String::new(),
            String::new(),
            &self.alpha,
        );
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let exact = |v: &Rational| json!({"exact": to_exact_string(v), "decimal": to_decimal(v, DECIMAL_PLACES)});
        json!({
            "file_subsymbols": self.file_subsymbols,
            "alpha": exact(&self.alpha),
            "gamma": exact(&self.gamma),
            "nonempty_gamma": exact(&self.nonempty_gamma),
            "node_gamma": self.node_gamma.iter().map(exact).collect::<Vec<_>>(),
            "records": self.records.iter().map(|r| json!({
                "failed": r.failed,
                "helpers": r.helpers,
                "subsymbols": r.subsymbols,
            })).collect::<Vec<_>>(),
        })
    }
}
